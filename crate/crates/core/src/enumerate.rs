//! Exhaustive enumeration of hom-sets and the cancellation oracle built on
//! top of it.

use crate::finset::FinSet;
use crate::pbij::{compose, PBij};

/// Every partial bijection `X → Y`, each exactly once.
///
/// Order is deterministic: source elements are visited in declaration order
/// and each is first left undefined, then sent to each unused target element
/// in declaration order. The count is `Σ_k C(|X|,k)·C(|Y|,k)·k!`, which grows
/// super-exponentially; sizing is the caller's concern.
pub fn enumerate_pbij(x: &FinSet, y: &FinSet) -> Vec<PBij> {
    let mut out = Vec::new();
    let mut map = vec![None; x.len()];
    let mut used = vec![false; y.len()];
    fill(x, y, 0, &mut map, &mut used, &mut out);
    out
}

fn fill(
    x: &FinSet,
    y: &FinSet,
    i: usize,
    map: &mut [Option<usize>],
    used: &mut [bool],
    out: &mut Vec<PBij>,
) {
    if i == map.len() {
        out.push(PBij::from_positions(x.clone(), y.clone(), map.into()));
        return;
    }
    map[i] = None;
    fill(x, y, i + 1, map, used, out);
    for j in 0..used.len() {
        if !used[j] {
            used[j] = true;
            map[i] = Some(j);
            fill(x, y, i + 1, map, used, out);
            used[j] = false;
        }
    }
    map[i] = None;
}

/// The symmetric inverse monoid `I(X) = Hom(X, X)`.
pub fn endomorphisms(x: &FinSet) -> Vec<PBij> {
    enumerate_pbij(x, x)
}

/// Probe objects `p0`, `{p0}`, `{p0 p1}`, ... of every size up to `max`.
pub fn probe_objects(max: usize) -> Vec<FinSet> {
    (0..=max)
        .map(|n| FinSet::new((0..n).map(|i| format!("p{i}"))).unwrap())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `f ∘ g₁ = f ∘ g₂ ⇒ g₁ = g₂` (monomorphism).
    Left,
    /// `g₁ ∘ f = g₂ ∘ f ⇒ g₁ = g₂` (epimorphism).
    Right,
}

/// Decides left or right cancellability of `f` against every morphism out
/// of (or into) the probe objects.
///
/// Returns the first witness pair `(g₁, g₂)` that breaks cancellation, if any.
pub fn cancellation_witness(f: &PBij, side: Side, probes: &[FinSet]) -> Option<(PBij, PBij)> {
    assert!(!probes.is_empty(), "cancellation oracle needs at least one probe object");
    for p in probes {
        let (candidates, composed): (Vec<PBij>, Vec<PBij>) = match side {
            Side::Left => enumerate_pbij(p, f.source())
                .into_iter()
                .map(|g| {
                    let fg = compose(f, &g).expect("g lands in f's source");
                    (g, fg)
                })
                .unzip(),
            Side::Right => enumerate_pbij(f.target(), p)
                .into_iter()
                .map(|g| {
                    let gf = compose(&g, f).expect("g starts at f's target");
                    (g, gf)
                })
                .unzip(),
        };
        for i in 0..candidates.len() {
            for j in i + 1..candidates.len() {
                if composed[i] == composed[j] {
                    return Some((candidates[i].clone(), candidates[j].clone()));
                }
            }
        }
    }
    None
}

pub fn cancellation_oracle(f: &PBij, side: Side, probes: &[FinSet]) -> bool {
    cancellation_witness(f, side, probes).is_none()
}
