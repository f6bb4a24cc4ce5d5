//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p pbij-cli --test acceptance`. Every check is
//! exhaustive or seeded; tolerances are exact equality throughout.

use std::collections::{BTreeSet, HashSet};
use std::fs;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode, Output};
use std::time::Instant;

use pbij::baer::{
    annihilator_projection, baer_annihilator_check, cokernel, factorize, kernel, kernel_universal_check,
    projection_status,
};
use pbij::enumerate::{cancellation_oracle, enumerate_pbij, probe_objects, Side};
use pbij::exact::{build_noether_grid, complete_3x3, noether_first, noether_second, ses_defect, ShortExactSeq};
use pbij::inverse_monoid::{
    fixtures, idempotents_of, symmetric_inverse_monoid, verify_inverse_semigroup, wagner_preston, Witness,
};
use pbij::text::{parse_morphism, parse_morphisms, write_morphism};
use pbij::{classify, compose, partial_identity, FinSet, PBij};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(prefix: &str, n: usize) -> FinSet {
    FinSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

fn elems(s: &FinSet) -> BTreeSet<String> {
    s.iter().map(str::to_string).collect()
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

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn choose(n: u64, k: u64) -> u64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

fn monoid_sizes() -> Check {
    let expected = [1u64, 2, 7, 34, 209];
    for (n, want) in expected.into_iter().enumerate() {
        let formula: u64 = (0..=n as u64).map(|k| choose(n as u64, k).pow(2) * factorial(k)).sum();
        let monoid = symmetric_inverse_monoid(&FinSet::range(n));
        let distinct: HashSet<&PBij> = monoid.iter().collect();
        ensure(formula == want && monoid.len() as u64 == want && distinct.len() == monoid.len(), || {
            format!("n={n}: formula {formula}, enumerated {}, distinct {}", monoid.len(), distinct.len())
        })?;
    }
    Ok("|I(n)| = 1 2 7 34 209 for n = 0..4".into())
}

fn idempotent_census() -> Check {
    for n in 0..=3 {
        let x = FinSet::range(n);
        let brute: HashSet<PBij> = symmetric_inverse_monoid(&x)
            .into_iter()
            .filter(|e| compose(e, e).unwrap() == *e)
            .collect();
        let partial_ids: HashSet<PBij> = x.subsets().iter().map(|a| partial_identity(&x, a).unwrap()).collect();
        let ours: HashSet<PBij> = idempotents_of(&x).into_iter().collect();
        ensure(brute == partial_ids && ours == partial_ids && ours.len() == 1 << n, || {
            format!("n={n}: {} idempotents by search, {} returned", brute.len(), ours.len())
        })?;
    }
    let mut pairs = 0;
    for n in 0..=5 {
        let x = FinSet::range(n);
        let subsets = x.subsets();
        for a in &subsets {
            for b in &subsets {
                let ea = partial_identity(&x, a).unwrap();
                let eb = partial_identity(&x, b).unwrap();
                let meet = partial_identity(&x, &a.intersection(b)).unwrap();
                let (ab, ba) = (compose(&ea, &eb).unwrap(), compose(&eb, &ea).unwrap());
                ensure(ab == meet && ba == meet, || format!("1_{a} and 1_{b} on {x}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("2^n idempotents for n ≤ 3; {pairs} subset pairs commute for n ≤ 5"))
}

fn inverse_category_laws() -> Check {
    let mut candidates = 0;
    for n in 0..=3 {
        let monoid = symmetric_inverse_monoid(&FinSet::range(n));
        for f in &monoid {
            let inv = f.inverse();
            let fff = compose(&compose(f, &inv).unwrap(), f).unwrap();
            ensure(fff == *f, || format!("regularity fails for {f}"))?;
            let mut found = Vec::new();
            for g in &monoid {
                candidates += 1;
                let fgf = compose(&compose(f, g).unwrap(), f).unwrap();
                let gfg = compose(&compose(g, f).unwrap(), g).unwrap();
                if fgf == *f && gfg == *g {
                    found.push(g);
                }
            }
            ensure(found == vec![&inv], || format!("{f} has inverses {found:?}"))?;
        }
    }
    Ok(format!("{candidates} candidate pairs searched, every inverse unique"))
}

fn baer_condition() -> Check {
    let probes = probe_objects(2);
    let mut checked = 0;
    for f in all_morphisms(2) {
        ensure(baer_annihilator_check(&f, &probes), || format!("annihilator class of {f}"))?;
        // independent: the projections generating the class are exactly {f′}
        let x = f.source();
        let annihilated: HashSet<PBij> = probes
            .iter()
            .flat_map(|p| enumerate_pbij(p, x))
            .filter(|g| compose(&f, g).unwrap().is_zero())
            .collect();
        let generators: Vec<PBij> = symmetric_inverse_monoid(x)
            .into_iter()
            .filter(|e| compose(e, e).unwrap() == *e && e.inverse() == *e)
            .filter(|e| {
                let class: HashSet<PBij> = probes
                    .iter()
                    .flat_map(|p| enumerate_pbij(p, x))
                    .map(|h| compose(e, &h).unwrap())
                    .collect();
                class == annihilated
            })
            .collect();
        ensure(generators == vec![annihilator_projection(&f)], || format!("generators of {f}: {generators:?}"))?;
        checked += 1;
    }
    let mut projections = 0;
    for n in 0..=4 {
        for e in symmetric_inverse_monoid(&FinSet::range(n)) {
            let status = projection_status(&e).map_err(|err| err.to_string())?;
            if status.is_projection {
                let dd = annihilator_projection(&annihilator_projection(&e));
                ensure(status.is_closed && dd == e, || format!("{e} is not closed"))?;
                projections += 1;
            }
        }
    }
    Ok(format!("{checked} morphisms with probes ≤ 2; {projections} projections closed up to size 4"))
}

fn unique_factor_through_mono(k: &PBij, g: &PBij) -> bool {
    enumerate_pbij(g.source(), k.source())
        .iter()
        .filter(|h| compose(k, h).unwrap() == *g)
        .count()
        == 1
}

fn exactness_constructions() -> Check {
    let probes = probe_objects(3);
    let small = probe_objects(2);
    let singleton = vec![FinSet::parse("p").unwrap()];
    let mut checked = 0;
    for f in all_morphisms(3) {
        let k = kernel(&f);
        ensure(compose(&f, &k.arrow).unwrap().is_zero(), || format!("f ∘ ker f ≠ 0 for {f}"))?;
        for p in &probes {
            for g in enumerate_pbij(p, f.source()) {
                if compose(&f, &g).unwrap().is_zero() {
                    ensure(unique_factor_through_mono(&k.arrow, &g), || format!("{g} through ker {f}"))?;
                }
            }
        }
        ensure(kernel_universal_check(&f, &small), || format!("library kernel check on {f}"))?;
        ensure(elems(&cokernel(&f).object) == &elems(f.target()) - &elems(&f.im()), || {
            format!("cokernel object of {f}")
        })?;

        let fac = factorize(&f);
        let (pc, bc) = (classify(&fac.mono), classify(&fac.epi));
        ensure(compose(&fac.mono, &fac.epi).unwrap() == f && pc.is_mono && bc.is_epi, || {
            format!("factorization of {f}")
        })?;

        let c = classify(&f);
        let (mono, epi) = (f.dom() == *f.source(), f.im() == *f.target());
        for ps in [&small, &singleton] {
            ensure(
                cancellation_oracle(&f, Side::Left, ps) == mono && cancellation_oracle(&f, Side::Right, ps) == epi,
                || format!("cancellation disagrees with dom/im on {f}"),
            )?;
        }
        ensure(c.is_mono == mono && c.is_epi == epi, || format!("classification of {f}"))?;
        if mono && epi {
            let g = f.inverse();
            ensure(
                c.is_iso
                    && compose(&g, &f).unwrap() == PBij::identity(f.source().clone())
                    && compose(&f, &g).unwrap() == PBij::identity(f.target().clone()),
                || format!("{f} is mono and epi but not iso"),
            )?;
        }
        checked += 1;
    }
    Ok(format!("{checked} morphisms, kernel probes up to size 3"))
}

/// All `(X₁ ⊆ X₂ ⊆ X)` as 3-colourings.
fn chains(x: &FinSet) -> Vec<(FinSet, FinSet)> {
    let n = x.len();
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let mut colour = Vec::with_capacity(n);
            for _ in 0..n {
                colour.push(code % 3);
                code /= 3;
            }
            let pick = |k: usize| FinSet::new(x.iter().zip(&colour).filter(|(_, c)| **c <= k).map(|(e, _)| e)).unwrap();
            (pick(0), pick(1))
        })
        .collect()
}

fn noether_identities() -> Check {
    let x = set("e", 5);
    let ex = elems(&x);
    let all = chains(&x);
    ensure(all.len() == 243, || format!("{} chains", all.len()))?;
    for (x1, x2) in &all {
        let (e1, e2) = (elems(x1), elems(x2));
        let lhs = &(&ex - &e1) - &(&e2 - &e1);
        let rhs = &ex - &e2;
        let iso = noether_first(&x, x1, x2).map_err(|e| e.to_string())?;
        let (phi, _) = complete_3x3(&build_noether_grid(&x, x1, x2).unwrap()).map_err(|e| e.to_string())?;
        let grid_quotient = elems(&cokernel(&phi).object);
        ensure(
            lhs == rhs && elems(&iso.lhs) == lhs && elems(&iso.rhs) == rhs && grid_quotient == lhs,
            || format!("first identity on X1={x1} X2={x2}"),
        )?;
        ensure(classify(&iso.iso).is_iso, || format!("{} is not iso", iso.iso))?;
    }
    let subsets = x.subsets();
    let mut pairs = 0;
    for x1 in &subsets {
        for x2 in &subsets {
            let (e1, e2) = (elems(x1), elems(x2));
            let lhs = &e2 - &(&e1 & &e2);
            let rhs = &(&e1 | &e2) - &e1;
            let iso = noether_second(&x, x1, x2).map_err(|e| e.to_string())?;
            let join = FinSet::new(&e1 | &e2).unwrap();
            let meet = FinSet::new(&e1 & &e2).unwrap();
            let q_left = elems(&cokernel(&PBij::inclusion(&meet, x2).unwrap()).object);
            let q_right = elems(&cokernel(&PBij::inclusion(x1, &join).unwrap()).object);
            ensure(
                lhs == rhs && elems(&iso.lhs) == lhs && elems(&iso.rhs) == rhs && q_left == lhs && q_right == rhs,
                || format!("second identity on X1={x1} X2={x2}"),
            )?;
            pairs += 1;
        }
    }
    ensure(pairs == 1024, || format!("{pairs} pairs"))?;
    Ok("243 chains and 1024 pairs on a 5-element set, exact".into())
}

fn three_by_three() -> Check {
    let mut grids = 0;
    let mut sequences = 0;
    for n in 0..=4 {
        let x = set("e", n);
        for (x1, x2) in chains(&x) {
            let grid = build_noether_grid(&x, &x1, &x2).map_err(|e| e.to_string())?;
            let (phi, psi) = complete_3x3(&grid).map_err(|e| e.to_string())?;
            ensure(ses_defect(&phi, &psi).is_none(), || format!("bottom row not exact for X1={x1} X2={x2}"))?;
            let done = grid.completed().map_err(|e| e.to_string())?;
            done.validate().map_err(|e| e.to_string())?;
            let bottom = done.bottom.clone().unwrap();
            let mut emitted = vec![];
            emitted.extend(done.rows.iter().cloned());
            emitted.push(bottom);
            emitted.extend((0..3).map(|c| [done.cols[0][c].clone(), done.cols[1][c].clone()]));
            for [a, b] in emitted {
                let ses = ShortExactSeq::new(a, b).map_err(|e| e.to_string())?;
                ensure(ses.w().len() == ses.v().len() - ses.u().len(), || {
                    format!("|W| ≠ |V| − |U| in {}", ses.alpha())
                })?;
                sequences += 1;
            }
            grids += 1;
        }
    }
    Ok(format!("{grids} grids completed, {sequences} sequences with |W| = |V| − |U|"))
}

fn wagner_preston_fixtures() -> Check {
    let mut names = Vec::new();
    for t in fixtures::inverse_semigroups() {
        let emb = wagner_preston(&t).map_err(|e| format!("{}: {e}", t.name()))?;
        for a in 0..t.len() {
            for b in 0..t.len() {
                let lhs = compose(&emb.images[a], &emb.images[b]).unwrap();
                ensure(lhs == emb.images[t.mul(a, b)], || {
                    format!("{}: θ({}·{}) mismatch", t.name(), t.element(a), t.element(b))
                })?;
            }
        }
        let distinct: HashSet<&PBij> = emb.images.iter().collect();
        ensure(distinct.len() == t.len(), || format!("{}: embedding not injective", t.name()))?;
        names.push(format!("{}({})", t.name(), t.len()));
    }
    for required in [2, 7, 8] {
        ensure(fixtures::inverse_semigroups().iter().any(|t| t.len() == required), || {
            format!("no {required}-element fixture")
        })?;
    }
    let lz = fixtures::left_zero2();
    let report = verify_inverse_semigroup(&lz).map_err(|e| e.to_string())?;
    let witness = report
        .counterexamples
        .iter()
        .any(|w| matches!(w, Witness::NonCommutingIdempotents { .. }));
    ensure(!report.is_inverse_semigroup() && witness && wagner_preston(&lz).is_err(), || {
        "left-zero table was not rejected with a non-commuting witness".into()
    })?;
    Ok(format!("embedded {}; left-zero rejected", names.join(" ")))
}

fn pbij_bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbij")).args(args).output().unwrap()
}

const ALPHABET: &str = "abcdefxyz019_.αβ";

fn random_tokens(rng: &mut ChaCha8Rng, n: usize) -> Vec<String> {
    let alphabet: Vec<char> = ALPHABET.chars().collect();
    let mut seen = BTreeSet::new();
    while seen.len() < n {
        let len = rng.random_range(1..=4);
        seen.insert((0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect::<String>());
    }
    let mut v: Vec<String> = seen.into_iter().collect();
    v.shuffle(rng);
    v
}

fn random_morphism(rng: &mut ChaCha8Rng, i: usize) -> (String, PBij) {
    let (m, n) = (rng.random_range(0..=6), rng.random_range(0..=6));
    let xs = random_tokens(rng, m);
    let ys = random_tokens(rng, n);
    let (mut sx, mut sy) = (xs.clone(), ys.clone());
    sx.shuffle(rng);
    sy.shuffle(rng);
    let k = rng.random_range(0..=xs.len().min(ys.len()));
    let f = PBij::new(
        FinSet::new(&xs).unwrap(),
        FinSet::new(&ys).unwrap(),
        sx.into_iter().zip(sy).take(k),
    )
    .unwrap();
    (format!("r{i}"), f)
}

fn cli_contract() -> Check {
    for args in [
        &["check-axioms", "--max-size", "3", "--seed", "11"][..],
        &["enumerate", "--max-size", "3"][..],
        &["noether2", "--x", "a b c d", "--x1", "a b", "--x2", "b c"][..],
    ] {
        let (a, b) = (pbij_bin(args), pbij_bin(args));
        ensure(a.stdout == b.stdout && a.status == b.status && !a.stdout.is_empty(), || {
            format!("non-deterministic report for {args:?}")
        })?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let morphisms: Vec<(String, PBij)> = (0..100).map(|i| random_morphism(&mut rng, i)).collect();
    let mut file = String::new();
    for (name, f) in &morphisms {
        let text = write_morphism(name, f);
        let (back_name, back) = parse_morphism(&text).map_err(|e| e.to_string())?;
        ensure(back_name == *name && back == *f && write_morphism(name, &back) == text, || {
            format!("round trip of {name}")
        })?;
        file.push_str(&text);
    }
    ensure(parse_morphisms(&file).map_err(|e| e.to_string())? == morphisms, || "batch round trip".into())?;

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("random.txt");
    fs::write(&path, &file).unwrap();
    let path = path.to_str().unwrap();
    let batch = pbij_bin(&["factorize", path]);
    ensure(batch.status.code() == Some(0), || "factorize on seeded morphisms".into())?;

    let pass = pbij_bin(&["check-axioms", "--max-size", "3"]);
    let fail = pbij_bin(&["check-axioms", "--max-size", "3", "--inject-fault", "compose-drops-pair"]);
    let bad_path = dir.path().join("bad.txt");
    fs::write(&bad_path, "pbij f : a b -> c\na -> c\nb -> c\n").unwrap();
    let bad = pbij_bin(&["kernel", bad_path.to_str().unwrap()]);
    let codes = [pass.status.code(), fail.status.code(), bad.status.code()];
    ensure(codes == [Some(0), Some(1), Some(2)], || format!("exit codes {codes:?}"))?;
    ensure(String::from_utf8_lossy(&fail.stdout).contains("counterexample:"), || "no counterexample".into())?;
    Ok("deterministic reports; 100 seeded morphisms round-trip; exit codes 0/1/2".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("monoid sizes", monoid_sizes),
        ("idempotent census", idempotent_census),
        ("inverse-category laws", inverse_category_laws),
        ("Baer* condition", baer_condition),
        ("exactness constructions", exactness_constructions),
        ("Noether identities", noether_identities),
        ("3×3 completion", three_by_three),
        ("Wagner–Preston embedding", wagner_preston_fixtures),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {title}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
