//! The exhaustive law suite behind `pbij check-axioms`.
//!
//! Every law enumerates its universe up to `min(max_size, cap)`, where `cap`
//! is the law's own ceiling (the universes of some laws explode long before
//! size 6). Laws run in parallel; results come back in declaration order.
//!
//! A [`Fault`] swaps a deliberately broken primitive into the laws that go
//! through it, so the suite itself can be mutation-tested.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::baer::{
    annihilator_projection, baer_annihilator_check, cokernel, cokernel_universal_check, factorize,
    kernel, kernel_universal_check, normal_conormal_check, projection_status, star,
};
use crate::enumerate::{cancellation_oracle, enumerate_pbij, probe_objects, Side};
use crate::exact::{build_noether_grid, complete_3x3, is_kernel_of, make_ses, noether_first, noether_second};
use crate::finset::FinSet;
use crate::inverse_monoid::{
    fixtures, homomorphism_violation, idempotents_of, injectivity_violation,
    symmetric_inverse_monoid, unique_inverse_check, verify_inverse_semigroup, wagner_preston,
    CayleyTable, Witness,
};
use crate::pbij::{classify, compose, partial_identity, PBij};
use crate::text::write_morphism;

/// A deliberately broken primitive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Composition silently drops the last pair of any result with two or
    /// more pairs.
    ComposeDropsPair,
    /// The annihilator projection returns `1_X` regardless of `f`.
    FullAnnihilator,
}

impl Fault {
    pub fn parse(s: &str) -> Option<Fault> {
        match s {
            "compose-drops-pair" => Some(Fault::ComposeDropsPair),
            "full-annihilator" => Some(Fault::FullAnnihilator),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LawConfig {
    pub max_size: usize,
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for LawConfig {
    fn default() -> Self {
        Self {
            max_size: 3,
            seed: 0,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub name: &'static str,
    /// Number of instances checked.
    pub checked: usize,
    /// The first counterexample, serialized, when the law fails.
    pub failure: Option<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

struct Ops {
    fault: Option<Fault>,
}

impl Ops {
    fn compose(&self, g: &PBij, f: &PBij) -> PBij {
        let gf = compose(g, f).expect("law universes only compose matching objects");
        match self.fault {
            Some(Fault::ComposeDropsPair) if gf.rank() >= 2 => {
                let mut pairs: Vec<(String, String)> =
                    gf.pairs().map(|(x, y)| (x.to_string(), y.to_string())).collect();
                pairs.pop();
                PBij::new(gf.source().clone(), gf.target().clone(), pairs).unwrap()
            }
            _ => gf,
        }
    }

    fn annihilator(&self, f: &PBij) -> PBij {
        match self.fault {
            Some(Fault::FullAnnihilator) => PBij::identity(f.source().clone()),
            _ => annihilator_projection(f),
        }
    }
}

struct Ctx {
    cfg: LawConfig,
    ops: Ops,
}

impl Ctx {
    fn size(&self, cap: usize) -> usize {
        self.cfg.max_size.min(cap)
    }
}

type Verdict = Result<usize, String>;

fn witness(label: &str, morphisms: &[(&str, &PBij)]) -> String {
    let mut out = format!("{label}\n");
    for (name, f) in morphisms {
        out.push_str(&write_morphism(name, f));
    }
    out
}

fn objects(n: usize) -> Vec<FinSet> {
    (0..=n).map(FinSet::range).collect()
}

/// All morphisms between objects of size at most `n`.
fn all_morphisms(n: usize) -> Vec<PBij> {
    let objs = objects(n);
    objs.iter()
        .flat_map(|a| objs.iter().flat_map(move |b| enumerate_pbij(a, b)))
        .collect()
}

/// Composable pairs `(f, g)` with `f: A → B`, `g: B → C`.
fn composable_pairs(n: usize, mut visit: impl FnMut(&PBij, &PBij) -> Result<(), String>) -> Verdict {
    let objs = objects(n);
    let mut checked = 0;
    for a in &objs {
        for b in &objs {
            let fs = enumerate_pbij(a, b);
            for c in &objs {
                let gs = enumerate_pbij(b, c);
                for f in &fs {
                    for g in &gs {
                        visit(f, g)?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(checked)
}

fn closure(ctx: &Ctx) -> Verdict {
    composable_pairs(ctx.size(3), |f, g| {
        let gf = ctx.ops.compose(g, f);
        let expected: Vec<(&str, &str)> = f
            .pairs()
            .filter_map(|(x, y)| g.apply(y).map(|z| (x, z)))
            .collect();
        let rebuilt = PBij::new(f.source().clone(), g.target().clone(), expected);
        if rebuilt.as_ref() != Ok(&gf) {
            return Err(witness("g ∘ f is not the pointwise partial bijection", &[("f", f), ("g", g), ("gf", &gf)]));
        }
        Ok(())
    })
}

fn inverse_laws(ctx: &Ctx) -> Verdict {
    composable_pairs(ctx.size(3), |f, g| {
        let inv = f.inverse();
        let left = ctx.ops.compose(&inv, f);
        let right = ctx.ops.compose(f, &inv);
        if left != partial_identity(f.source(), &f.dom()).unwrap() {
            return Err(witness("f⁻¹ ∘ f ≠ 1_dom(f)", &[("f", f), ("finv_f", &left)]));
        }
        if right != partial_identity(f.target(), &f.im()).unwrap() {
            return Err(witness("f ∘ f⁻¹ ≠ 1_im(f)", &[("f", f), ("f_finv", &right)]));
        }
        if inv.inverse() != *f {
            return Err(witness("(f⁻¹)⁻¹ ≠ f", &[("f", f)]));
        }
        let lhs = ctx.ops.compose(g, f).inverse();
        let rhs = ctx.ops.compose(&inv, &g.inverse());
        if lhs != rhs {
            return Err(witness("(g ∘ f)⁻¹ ≠ f⁻¹ ∘ g⁻¹", &[("f", f), ("g", g)]));
        }
        Ok(())
    })
}

fn partial_identities_meet(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(5)) {
        let subsets = x.subsets();
        for a in &subsets {
            let ea = partial_identity(&x, a).unwrap();
            for b in &subsets {
                let eb = partial_identity(&x, b).unwrap();
                let meet = partial_identity(&x, &a.intersection(b)).unwrap();
                let ab = ctx.ops.compose(&ea, &eb);
                let ba = ctx.ops.compose(&eb, &ea);
                if ab != meet || ba != meet {
                    return Err(witness("1_A ∘ 1_B ≠ 1_{A∩B}", &[("eA", &ea), ("eB", &eb), ("eAeB", &ab)]));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn associativity(ctx: &Ctx) -> Verdict {
    let check = |f: &PBij, g: &PBij, h: &PBij| -> Result<(), String> {
        let left = ctx.ops.compose(h, &ctx.ops.compose(g, f));
        let right = ctx.ops.compose(&ctx.ops.compose(h, g), f);
        if left != right {
            return Err(witness("h ∘ (g ∘ f) ≠ (h ∘ g) ∘ f", &[("f", f), ("g", g), ("h", h)]));
        }
        Ok(())
    };
    let mut checked = 0;
    let objs = objects(ctx.size(2));
    for a in &objs {
        for b in &objs {
            let fs = enumerate_pbij(a, b);
            for c in &objs {
                let gs = enumerate_pbij(b, c);
                for d in &objs {
                    let hs = enumerate_pbij(c, d);
                    for f in &fs {
                        for g in &gs {
                            for h in &hs {
                                check(f, g, h)?;
                                checked += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    let sampled = ctx.size(4);
    if sampled > 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.cfg.seed);
        let objs = objects(sampled);
        let homs: Vec<Vec<Vec<PBij>>> = objs
            .iter()
            .map(|a| objs.iter().map(|b| enumerate_pbij(a, b)).collect())
            .collect();
        let mut pick = |a: usize, b: usize| {
            let hom = &homs[a][b];
            hom[rng.random_range(0..hom.len())].clone()
        };
        let mut sizes = ChaCha8Rng::seed_from_u64(ctx.cfg.seed.wrapping_add(1));
        for _ in 0..2000 {
            let [a, b, c, d] = [(); 4].map(|_| sizes.random_range(0..=sampled));
            let (f, g, h) = (pick(a, b), pick(b, c), pick(c, d));
            check(&f, &g, &h)?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn regularity(ctx: &Ctx) -> Verdict {
    let all = all_morphisms(ctx.size(4));
    for f in &all {
        let fff = ctx.ops.compose(&ctx.ops.compose(f, &f.inverse()), f);
        if fff != *f {
            return Err(witness("f ∘ f⁻¹ ∘ f ≠ f", &[("f", f)]));
        }
    }
    Ok(all.len())
}

fn cancellation(ctx: &Ctx) -> Verdict {
    let probes = probe_objects(2);
    let all = all_morphisms(ctx.size(3));
    for f in &all {
        let c = classify(f);
        if cancellation_oracle(f, Side::Left, &probes) != c.is_mono {
            return Err(witness("left cancellation disagrees with dom(f) = source", &[("f", f)]));
        }
        if cancellation_oracle(f, Side::Right, &probes) != c.is_epi {
            return Err(witness("right cancellation disagrees with im(f) = target", &[("f", f)]));
        }
    }
    Ok(all.len())
}

fn zero_object(ctx: &Ctx) -> Verdict {
    let empty = FinSet::empty();
    let mut checked = 0;
    for x in objects(ctx.cfg.max_size) {
        for hom in [enumerate_pbij(&empty, &x), enumerate_pbij(&x, &empty)] {
            if hom.len() != 1 || !hom[0].is_zero() {
                return Err(format!("Hom between ∅ and {x} has {} morphisms\n", hom.len()));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// `Σ_k C(m,k)·C(n,k)·k!`
pub fn hom_count(m: usize, n: usize) -> u128 {
    (0..=m.min(n))
        .map(|k| binomial(m, k) * binomial(n, k) * (1..=k as u128).product::<u128>())
        .sum()
}

fn census(ctx: &Ctx) -> Verdict {
    let objs = objects(ctx.size(5));
    let mut checked = 0;
    for a in &objs {
        for b in &objs {
            let hom = enumerate_pbij(a, b);
            let distinct: HashSet<&PBij> = hom.iter().collect();
            let expected = hom_count(a.len(), b.len());
            if hom.len() as u128 != expected || distinct.len() != hom.len() {
                return Err(format!(
                    "|Hom({a}, {b})|: enumerated {} ({} distinct), expected {expected}\n",
                    hom.len(),
                    distinct.len()
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn monoid_closure(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(3)) {
        let monoid = symmetric_inverse_monoid(&x);
        let members: HashSet<&PBij> = monoid.iter().collect();
        if !members.contains(&PBij::identity(x.clone())) {
            return Err(format!("I({x}) lacks the identity\n"));
        }
        for f in &monoid {
            if !members.contains(&f.inverse()) {
                return Err(witness("inverse escapes I(X)", &[("f", f)]));
            }
            for g in &monoid {
                let gf = ctx.ops.compose(g, f);
                if !members.contains(&gf) {
                    return Err(witness("composite escapes I(X)", &[("f", f), ("g", g)]));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn idempotent_census(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(3)) {
        let found: Vec<PBij> = symmetric_inverse_monoid(&x)
            .into_iter()
            .filter(|e| ctx.ops.compose(e, e) == *e)
            .collect();
        let expected = idempotents_of(&x);
        let found_set: HashSet<&PBij> = found.iter().collect();
        let expected_set: HashSet<&PBij> = expected.iter().collect();
        if found_set != expected_set || expected.len() != 1 << x.len() {
            return Err(format!(
                "I({x}) has {} idempotents, expected the {} partial identities\n",
                found.len(),
                1 << x.len()
            ));
        }
        for e in &found {
            for f in &found {
                if ctx.ops.compose(e, f) != ctx.ops.compose(f, e) {
                    return Err(witness("idempotents do not commute", &[("e", e), ("f", f)]));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn unique_inverses(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(3)) {
        let monoid = symmetric_inverse_monoid(&x);
        for alpha in &monoid {
            let inverses: Vec<&PBij> = monoid
                .iter()
                .filter(|beta| {
                    ctx.ops.compose(&ctx.ops.compose(alpha, beta), alpha) == *alpha
                        && ctx.ops.compose(&ctx.ops.compose(beta, alpha), beta) == **beta
                })
                .collect();
            if inverses.len() != 1 || *inverses[0] != alpha.inverse() {
                return Err(witness(
                    &format!("α has {} generalized inverses", inverses.len()),
                    &[("alpha", alpha)],
                ));
            }
            checked += monoid.len();
        }
        if !unique_inverse_check(&monoid).map_err(|e| e.to_string())? {
            return Err(format!("unique_inverse_check fails on I({x})\n"));
        }
    }
    Ok(checked)
}

fn wagner_preston_law(_ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    let tables: Vec<CayleyTable> = fixtures::inverse_semigroups();
    for t in &tables {
        let report = verify_inverse_semigroup(t).map_err(|e| e.to_string())?;
        if !(report.associative && report.regular && report.idempotents_commute && report.inverses_unique) {
            return Err(format!("fixture {} fails the axioms: {:?}\n", t.name(), report.counterexamples));
        }
        let emb = wagner_preston(t).map_err(|e| e.to_string())?;
        if let Some((a, b)) = homomorphism_violation(t, &emb) {
            return Err(format!("{}: θ({a}·{b}) ≠ θ({a}) ∘ θ({b})\n", t.name()));
        }
        if let Some((a, b)) = injectivity_violation(t, &emb) {
            return Err(format!("{}: θ({a}) = θ({b})\n", t.name()));
        }
        let image = CayleyTable::from_morphisms(format!("theta_{}", t.name()), &emb.images)
            .map_err(|e| e.to_string())?;
        if !verify_inverse_semigroup(&image).map_err(|e| e.to_string())?.is_inverse_semigroup() {
            return Err(format!("{}: image table is not an inverse semigroup\n", t.name()));
        }
        checked += t.len() * t.len();
    }
    let lz = fixtures::left_zero2();
    let report = verify_inverse_semigroup(&lz).map_err(|e| e.to_string())?;
    let witnessed = report
        .counterexamples
        .iter()
        .any(|w| matches!(w, Witness::NonCommutingIdempotents { .. }));
    if report.inverses_unique || !witnessed || wagner_preston(&lz).is_ok() {
        return Err("left-zero semigroup was not rejected with a witness\n".into());
    }
    Ok(checked + 1)
}

fn involution(ctx: &Ctx) -> Verdict {
    composable_pairs(ctx.size(2), |f, g| {
        if star(&star(f)) != *f {
            return Err(witness("(f*)* ≠ f", &[("f", f)]));
        }
        if star(&ctx.ops.compose(g, f)) != ctx.ops.compose(&star(f), &star(g)) {
            return Err(witness("(g ∘ f)* ≠ f* ∘ g*", &[("f", f), ("g", g)]));
        }
        Ok(())
    })
}

fn annihilator_law(ctx: &Ctx) -> Verdict {
    let all = all_morphisms(ctx.size(3));
    for f in &all {
        let fp = ctx.ops.annihilator(f);
        let is_projection = projection_status(&fp).map(|s| s.is_projection).unwrap_or(false);
        if !is_projection || !ctx.ops.compose(f, &fp).is_zero() {
            return Err(witness("f′ is not a projection with f ∘ f′ = 0", &[("f", f), ("f_prime", &fp)]));
        }
    }
    Ok(all.len())
}

fn closed_projections(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(4)) {
        for e in symmetric_inverse_monoid(&x) {
            let status = projection_status(&e).map_err(|err| witness(&err.to_string(), &[("e", &e)]))?;
            if status.is_projection {
                let double = ctx.ops.annihilator(&ctx.ops.annihilator(&e));
                if double != e || !status.is_closed {
                    return Err(witness("projection with e′′ ≠ e", &[("e", &e)]));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn baer_annihilator(ctx: &Ctx) -> Verdict {
    let probes = probe_objects(2);
    let all = all_morphisms(ctx.size(2));
    for f in &all {
        let ok = match ctx.cfg.fault {
            None => baer_annihilator_check(f, &probes),
            // Re-derive the check through the faulty primitive.
            Some(_) => probes.iter().all(|p| {
                let fp = ctx.ops.annihilator(f);
                enumerate_pbij(p, f.source()).iter().all(|g| {
                    let fpg = ctx.ops.compose(&fp, g);
                    (!ctx.ops.compose(f, g).is_zero() || fpg == *g) && ctx.ops.compose(f, &fpg).is_zero()
                })
            }),
        };
        if !ok {
            return Err(witness("annihilator class of f is not f′ ∘ B", &[("f", f)]));
        }
    }
    Ok(all.len())
}

fn kernel_law(ctx: &Ctx) -> Verdict {
    let probes = probe_objects(2);
    let all = all_morphisms(ctx.size(3));
    for f in &all {
        let k = kernel(f);
        if !classify(&k.arrow).is_mono
            || !ctx.ops.compose(f, &k.arrow).is_zero()
            || !kernel_universal_check(f, &probes)
        {
            return Err(witness("kernel fails its universal property", &[("f", f), ("k", &k.arrow)]));
        }
    }
    Ok(all.len())
}

fn cokernel_law(ctx: &Ctx) -> Verdict {
    let probes = probe_objects(2);
    let all = all_morphisms(ctx.size(3));
    for f in &all {
        let q = cokernel(f);
        if !classify(&q.arrow).is_epi
            || !ctx.ops.compose(&q.arrow, f).is_zero()
            || !cokernel_universal_check(f, &probes)
        {
            return Err(witness("cokernel fails its universal property", &[("f", f), ("q", &q.arrow)]));
        }
    }
    Ok(all.len())
}

fn factorization(ctx: &Ctx) -> Verdict {
    let all = all_morphisms(ctx.size(3));
    for f in &all {
        let fac = factorize(f);
        let ok = classify(&fac.mono).is_mono
            && classify(&fac.epi).is_epi
            && ctx.ops.compose(&fac.mono, &fac.epi) == *f
            && ctx.ops.compose(&fac.epi, &ctx.ops.compose(&f.inverse(), &fac.mono))
                == PBij::identity(fac.via.clone());
        if !ok {
            return Err(witness("mono-epi factorization fails", &[("f", f), ("p", &fac.mono), ("beta", &fac.epi)]));
        }
    }
    Ok(all.len())
}

fn normality(ctx: &Ctx) -> Verdict {
    let all = all_morphisms(ctx.size(3));
    for f in &all {
        let c = classify(f);
        let n = normal_conormal_check(f);
        let ok = n.normal == c.is_mono.then_some(true) && n.conormal == c.is_epi.then_some(true);
        if !ok {
            return Err(witness("mono is not a kernel or epi is not a cokernel", &[("f", f)]));
        }
    }
    Ok(all.len())
}

fn balanced(ctx: &Ctx) -> Verdict {
    let all = all_morphisms(ctx.size(3));
    for f in all.iter().filter(|f| classify(f).is_iso) {
        let id_s = PBij::identity(f.source().clone());
        let id_t = PBij::identity(f.target().clone());
        let found = enumerate_pbij(f.target(), f.source())
            .iter()
            .any(|g| ctx.ops.compose(g, f) == id_s && ctx.ops.compose(f, g) == id_t);
        if !found {
            return Err(witness("mono and epi without a two-sided inverse", &[("f", f)]));
        }
    }
    Ok(all.len())
}

fn short_exact(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(5)) {
        for x1 in x.subsets() {
            let s = make_ses(&x, &x1).map_err(|e| e.to_string())?;
            let ok = *s.beta() == cokernel(s.alpha()).arrow
                && is_kernel_of(s.alpha(), s.beta()).unwrap_or(false)
                && s.w().len() == s.v().len() - s.u().len();
            if !ok {
                return Err(witness("canonical sequence is not short exact", &[("alpha", s.alpha()), ("beta", s.beta())]));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Every chain `X₁ ⊆ X₂ ⊆ X`, as 3-colourings of `X`.
fn chains(x: &FinSet) -> Vec<(FinSet, FinSet)> {
    let n = x.len();
    (0..3usize.pow(n as u32))
        .map(|mut code| {
            let (mut m1, mut m2) = (0, 0);
            for i in 0..n {
                match code % 3 {
                    0 => {
                        m1 |= 1 << i;
                        m2 |= 1 << i;
                    }
                    1 => m2 |= 1 << i,
                    _ => {}
                }
                code /= 3;
            }
            (x.subset_from_mask(m1), x.subset_from_mask(m2))
        })
        .collect()
}

fn noether1(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(5)) {
        for (x1, x2) in chains(&x) {
            let r = noether_first(&x, &x1, &x2).map_err(|e| format!("X1 = {x1}, X2 ⊆ {x2}: {e}\n"))?;
            if r.iso != PBij::identity(x.difference(&x2)) {
                return Err(witness("first Noether iso is not the identity on X − X2", &[("iso", &r.iso)]));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn noether2(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(5)) {
        let subsets = x.subsets();
        for x1 in &subsets {
            for x2 in &subsets {
                let r = noether_second(&x, x1, x2).map_err(|e| format!("X1 = {x1}, X2 = {x2}: {e}\n"))?;
                if r.lhs != r.rhs || !classify(&r.iso).is_iso {
                    return Err(witness("second Noether sides differ", &[("iso", &r.iso)]));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

fn grid_completion(ctx: &Ctx) -> Verdict {
    let mut checked = 0;
    for x in objects(ctx.size(4)) {
        for (x1, x2) in chains(&x) {
            let grid = build_noether_grid(&x, &x1, &x2).map_err(|e| e.to_string())?;
            let (phi, psi) = complete_3x3(&grid).map_err(|e| format!("X1 = {x1}, X2 = {x2}: {e}\n"))?;
            let seqs = [
                (&grid.rows[0][0], &grid.rows[0][1]),
                (&grid.rows[1][0], &grid.rows[1][1]),
                (&phi, &psi),
                (&grid.cols[0][0], &grid.cols[1][0]),
                (&grid.cols[0][1], &grid.cols[1][1]),
                (&grid.cols[0][2], &grid.cols[1][2]),
            ];
            for (a, b) in seqs {
                if b.target().len() + a.source().len() != a.target().len() {
                    return Err(witness("|W| ≠ |V| − |U|", &[("alpha", a), ("beta", b)]));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

type Law = (&'static str, fn(&Ctx) -> Verdict);

const LAWS: &[Law] = &[
    ("closure under composition", closure),
    ("inverse laws", inverse_laws),
    ("partial identities meet", partial_identities_meet),
    ("associativity", associativity),
    ("regularity", regularity),
    ("mono/epi cancellation", cancellation),
    ("zero object", zero_object),
    ("hom-set census", census),
    ("I(X) closure", monoid_closure),
    ("idempotents are partial identities", idempotent_census),
    ("unique inverses", unique_inverses),
    ("Wagner–Preston embedding", wagner_preston_law),
    ("involution", involution),
    ("annihilator projection", annihilator_law),
    ("closed projections", closed_projections),
    ("Baer* annihilator", baer_annihilator),
    ("kernel universal property", kernel_law),
    ("cokernel universal property", cokernel_law),
    ("mono-epi factorization", factorization),
    ("normal and conormal", normality),
    ("balanced", balanced),
    ("short exact sequences", short_exact),
    ("Noether-1", noether1),
    ("Noether-2", noether2),
    ("3×3 completion", grid_completion),
];

pub fn law_names() -> impl Iterator<Item = &'static str> {
    LAWS.iter().map(|(name, _)| *name)
}

/// Runs every law; the output order matches [`law_names`].
pub fn run_all(cfg: LawConfig) -> Vec<LawOutcome> {
    let ctx = Ctx {
        cfg,
        ops: Ops { fault: cfg.fault },
    };
    LAWS.par_iter()
        .map(|(name, law)| match law(&ctx) {
            Ok(checked) => LawOutcome {
                name,
                checked,
                failure: None,
            },
            Err(failure) => LawOutcome {
                name,
                checked: 0,
                failure: Some(failure),
            },
        })
        .collect()
}
