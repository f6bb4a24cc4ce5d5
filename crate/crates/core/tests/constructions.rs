//! Kernels, cokernels, annihilators and exact sequences checked against
//! brute-force universal properties over small probe objects.

use std::collections::{BTreeSet, HashSet};

use pbij::baer::{
    annihilator_projection, cokernel, factorize, kernel, normal_conormal_check, projection_status,
};
use pbij::enumerate::{enumerate_pbij, probe_objects};
use pbij::exact::{build_noether_grid, complete_3x3, noether_first, noether_second, ses_defect};
use pbij::inverse_monoid::{fixtures, idempotents_of};
use pbij::text::{parse_cayley, parse_grid, parse_morphism, write_cayley, write_grid, write_morphism};
use pbij::{classify, compose, Error, FinSet, PBij};
use proptest::prelude::*;

fn set(prefix: &str, n: usize) -> FinSet {
    FinSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn all_morphisms(max: usize) -> Vec<PBij> {
    let mut out = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            out.extend(enumerate_pbij(&set("x", m), &set("y", n)));
        }
    }
    out
}

fn elems(s: &FinSet) -> BTreeSet<String> {
    s.iter().map(str::to_string).collect()
}

/// `g` factors through `k` in exactly one way.
fn unique_factor_through_mono(k: &PBij, g: &PBij) -> bool {
    enumerate_pbij(g.source(), k.source())
        .iter()
        .filter(|h| compose(k, h).unwrap() == *g)
        .count()
        == 1
}

fn unique_factor_through_epi(c: &PBij, g: &PBij) -> bool {
    enumerate_pbij(c.target(), g.target())
        .iter()
        .filter(|h| compose(h, c).unwrap() == *g)
        .count()
        == 1
}

/// `α` is a kernel of `β`, checked directly from the universal property.
fn is_kernel_brute(alpha: &PBij, beta: &PBij, probes: &[FinSet]) -> bool {
    compose(beta, alpha).unwrap().is_zero()
        && probes.iter().all(|p| {
            enumerate_pbij(p, alpha.target())
                .iter()
                .filter(|g| compose(beta, g).unwrap().is_zero())
                .all(|g| unique_factor_through_mono(alpha, g))
        })
}

fn is_cokernel_brute(beta: &PBij, alpha: &PBij, probes: &[FinSet]) -> bool {
    compose(beta, alpha).unwrap().is_zero()
        && probes.iter().all(|q| {
            enumerate_pbij(beta.source(), q)
                .iter()
                .filter(|h| compose(h, alpha).unwrap().is_zero())
                .all(|h| unique_factor_through_epi(beta, h))
        })
}

#[test]
fn annihilator_projection_is_the_unique_generator() {
    let probes = probe_objects(2);
    for f in all_morphisms(2) {
        let x = f.source();
        let annihilated: HashSet<PBij> = probes
            .iter()
            .flat_map(|p| enumerate_pbij(p, x))
            .filter(|g| compose(&f, g).unwrap().is_zero())
            .collect();
        let generators: Vec<PBij> = idempotents_of(x)
            .into_iter()
            .filter(|e| {
                let class: HashSet<PBij> = probes
                    .iter()
                    .flat_map(|p| enumerate_pbij(p, x))
                    .map(|h| compose(e, &h).unwrap())
                    .collect();
                class == annihilated
            })
            .collect();
        assert_eq!(generators, vec![annihilator_projection(&f)], "{f}");
    }
}

#[test]
fn projections_are_closed() {
    for n in 0..=4 {
        for e in idempotents_of(&FinSet::range(n)) {
            let status = projection_status(&e).unwrap();
            assert!(status.is_projection && status.is_closed);
        }
    }
    let not_endo = PBij::zero(FinSet::range(1), FinSet::range(2));
    assert!(matches!(projection_status(&not_endo), Err(Error::ObjectMismatch(_))));
}

#[test]
fn kernels_and_cokernels_satisfy_universal_properties() {
    let probes = probe_objects(2);
    for f in all_morphisms(3) {
        let k = kernel(&f);
        assert_eq!(elems(&k.object), &elems(f.source()) - &elems(&f.dom()));
        assert!(classify(&k.arrow).is_mono);
        assert!(is_kernel_brute(&k.arrow, &f, &probes), "kernel of {f}");

        let c = cokernel(&f);
        assert_eq!(elems(&c.object), &elems(f.target()) - &elems(&f.im()));
        assert!(classify(&c.arrow).is_epi);
        assert!(is_cokernel_brute(&c.arrow, &f, &probes), "cokernel of {f}");
    }
}

#[test]
fn factorization_through_the_image() {
    for f in all_morphisms(3) {
        let fac = factorize(&f);
        assert_eq!(compose(&fac.mono, &fac.epi).unwrap(), f);
        assert!(classify(&fac.mono).is_mono);
        assert!(classify(&fac.epi).is_epi);
        assert_eq!(fac.via.len(), f.rank());
        assert_eq!(fac.mono.im(), f.im());
    }
}

/// A mono is normal when some `g` out of its target has it as kernel,
/// found by searching all `g` into objects of size up to 3.
fn normal_by_search(f: &PBij) -> bool {
    let probes = probe_objects(2);
    probe_objects(3).iter().any(|z| {
        enumerate_pbij(f.target(), z)
            .iter()
            .any(|g| is_kernel_brute(f, g, &probes))
    })
}

fn conormal_by_search(f: &PBij) -> bool {
    let probes = probe_objects(2);
    probe_objects(3).iter().any(|z| {
        enumerate_pbij(z, f.source())
            .iter()
            .any(|g| is_cokernel_brute(f, g, &probes))
    })
}

#[test]
fn monos_are_normal_and_epis_conormal() {
    for f in all_morphisms(2) {
        let c = classify(&f);
        let n = normal_conormal_check(&f);
        if c.is_mono {
            assert_eq!(n.normal, Some(true));
            assert!(normal_by_search(&f), "{f}");
        } else {
            assert_eq!(n.normal, None);
        }
        if c.is_epi {
            assert_eq!(n.conormal, Some(true));
            assert!(conormal_by_search(&f), "{f}");
        } else {
            assert_eq!(n.conormal, None);
        }
        // balanced: mono and epi together give a two-sided inverse
        if c.is_mono && c.is_epi {
            let inverses = enumerate_pbij(f.target(), f.source())
                .into_iter()
                .filter(|g| {
                    compose(g, &f).unwrap() == PBij::identity(f.source().clone())
                        && compose(&f, g).unwrap() == PBij::identity(f.target().clone())
                })
                .count();
            assert_eq!(inverses, 1);
            assert!(c.is_iso);
        }
    }
}

#[test]
fn exactness_matches_universal_properties() {
    let probes = probe_objects(2);
    for u in 0..=2 {
        for v in 0..=2 {
            for w in 0..=2 {
                let (uu, vv, ww) = (set("u", u), set("v", v), set("w", w));
                for alpha in enumerate_pbij(&uu, &vv) {
                    for beta in enumerate_pbij(&vv, &ww) {
                        let brute = classify(&alpha).is_mono
                            && classify(&beta).is_epi
                            && is_kernel_brute(&alpha, &beta, &probes)
                            && is_cokernel_brute(&beta, &alpha, &probes);
                        assert_eq!(ses_defect(&alpha, &beta).is_none(), brute, "{alpha} ; {beta}");
                        if brute {
                            assert_eq!(w + u, v);
                        }
                    }
                }
            }
        }
    }
}

/// All `(X₁ ⊆ X₂ ⊆ X)` as 3-colourings of `X`.
fn chains(x: &FinSet) -> Vec<(FinSet, FinSet)> {
    let n = x.len();
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let mut colour = Vec::with_capacity(n);
            for _ in 0..n {
                colour.push(code % 3);
                code /= 3;
            }
            let pick = |k: usize| {
                FinSet::new(x.iter().zip(&colour).filter(|(_, c)| **c <= k).map(|(e, _)| e)).unwrap()
            };
            (pick(0), pick(1))
        })
        .collect()
}

#[test]
fn noether_first_against_set_arithmetic() {
    let x = set("e", 5);
    let all = chains(&x);
    assert_eq!(all.len(), 243);
    for (x1, x2) in all {
        let (ex, e1, e2) = (elems(&x), elems(&x1), elems(&x2));
        let lhs = &(&ex - &e1) - &(&e2 - &e1);
        let iso = noether_first(&x, &x1, &x2).unwrap();
        assert_eq!(elems(&iso.lhs), lhs);
        assert_eq!(elems(&iso.rhs), &ex - &e2);
        assert!(classify(&iso.iso).is_iso);
    }
}

#[test]
fn noether_second_against_set_arithmetic() {
    let x = set("e", 5);
    let subsets = x.subsets();
    let mut pairs = 0;
    for x1 in &subsets {
        for x2 in &subsets {
            let (e1, e2) = (elems(x1), elems(x2));
            let lhs = &e2 - &(&e1 & &e2);
            let rhs = &(&e1 | &e2) - &e1;
            let iso = noether_second(&x, x1, x2).unwrap();
            assert_eq!(elems(&iso.lhs), lhs);
            assert_eq!(elems(&iso.rhs), rhs);
            assert!(classify(&iso.iso).is_iso);
            pairs += 1;
        }
    }
    assert_eq!(pairs, 1024);
}

#[test]
fn noether_rejects_bad_nesting() {
    let x = set("e", 3);
    let x1 = FinSet::parse("e0 e1").unwrap();
    let x2 = FinSet::parse("e0").unwrap();
    assert!(noether_first(&x, &x1, &x2).is_err());
    let outside = FinSet::parse("z").unwrap();
    assert!(noether_second(&x, &outside, &x2).is_err());
}

#[test]
fn completed_grids_are_exact() {
    for n in 0..=4 {
        let x = set("e", n);
        for (x1, x2) in chains(&x) {
            let grid = build_noether_grid(&x, &x1, &x2).unwrap();
            grid.validate().unwrap();
            let (phi, psi) = complete_3x3(&grid).unwrap();
            assert!(ses_defect(&phi, &psi).is_none());
            let done = grid.completed().unwrap();
            done.validate().unwrap();
            let o = &done.objects;
            for row in o {
                assert_eq!(row[2].len() + row[0].len(), row[1].len());
            }
            for (top, (mid, bot)) in o[0].iter().zip(o[1].iter().zip(&o[2])) {
                assert_eq!(bot.len() + top.len(), mid.len());
            }
        }
    }
}

#[test]
fn grid_text_round_trip() {
    let x = set("e", 4);
    for (x1, x2) in chains(&x) {
        let grid = build_noether_grid(&x, &x1, &x2).unwrap();
        assert_eq!(parse_grid(&write_grid(&grid)).unwrap(), grid);
        let done = grid.completed().unwrap();
        assert_eq!(parse_grid(&write_grid(&done)).unwrap(), done);
    }
}

#[test]
fn cayley_text_round_trip() {
    let mut tables = fixtures::inverse_semigroups();
    tables.push(fixtures::left_zero2());
    for t in tables {
        let back = parse_cayley(&write_cayley(&t)).unwrap();
        assert_eq!(back.carrier(), t.carrier());
        for a in 0..t.len() {
            for b in 0..t.len() {
                assert_eq!(back.element(back.mul(a, b)), t.element(t.mul(a, b)));
            }
        }
    }
}

#[test]
fn malformed_morphisms_report_line_numbers() {
    let cases = [
        ("pbij f : a b -> c\na -> c\nb -> c\n", 3),
        ("pbij f : a b -> c\na -> c\na -> c\n", 3),
        ("pbij f : a -> c\nq -> c\n", 2),
        ("pbij f a -> c\n", 1),
        ("pbij f : a a -> c\n", 1),
    ];
    for (input, line) in cases {
        match parse_morphism(input) {
            Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{input:?}"),
            other => panic!("{input:?} gave {other:?}"),
        }
    }
}

fn token() -> impl Strategy<Value = String> {
    "[A-Za-z0-9_.αβγ]{1,4}"
}

fn named_morphism() -> impl Strategy<Value = (String, PBij)> {
    (
        token(),
        proptest::collection::btree_set(token(), 0..6),
        proptest::collection::btree_set(token(), 0..6),
    )
        .prop_flat_map(|(name, xs, ys)| {
            let (xs, ys): (Vec<String>, Vec<String>) = (xs.into_iter().collect(), ys.into_iter().collect());
            let k = xs.len().min(ys.len());
            (
                Just(name),
                Just(xs.clone()),
                Just(ys.clone()),
                Just(xs).prop_shuffle(),
                Just(ys).prop_shuffle(),
                0..=k,
            )
        })
        .prop_map(|(name, xs, ys, sx, sy, k)| {
            let x = FinSet::new(&xs).unwrap();
            let y = FinSet::new(&ys).unwrap();
            let pairs: Vec<(String, String)> = sx.into_iter().zip(sy).take(k).collect();
            (name, PBij::new(x, y, pairs).unwrap())
        })
}

proptest! {
    #[test]
    fn morphism_text_round_trip((name, f) in named_morphism()) {
        let text = write_morphism(&name, &f);
        let (back_name, back) = parse_morphism(&text).unwrap();
        prop_assert_eq!(back_name, name);
        prop_assert_eq!(write_morphism("g", &back), write_morphism("g", &f));
        prop_assert_eq!(back, f);
    }
}
