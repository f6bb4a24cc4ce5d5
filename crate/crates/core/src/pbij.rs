use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::finset::FinSet;

/// A partial bijection between two finite sets: a morphism of the category.
///
/// The graph is stored positionally, `map[i]` being the target position of
/// the `i`-th source element (or `None` outside the domain). Equality is
/// value equality on `(source, target, graph)`, independent of the
/// declaration order of either set.
#[derive(Clone)]
pub struct PBij {
    source: FinSet,
    target: FinSet,
    map: Box<[Option<usize>]>,
}

impl PBij {
    /// Builds a partial bijection from a list of `(x, y)` pairs.
    pub fn new<I, S, T>(source: FinSet, target: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let mut map = vec![None; source.len()].into_boxed_slice();
        let mut hit = vec![false; target.len()];
        for (x, y) in pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let xi = source.position(x).ok_or_else(|| Error::NotAnElement {
                element: x.to_string(),
                set: source.to_string(),
            })?;
            let yi = target.position(y).ok_or_else(|| Error::NotAnElement {
                element: y.to_string(),
                set: target.to_string(),
            })?;
            if map[xi].is_some() {
                return Err(Error::NotFunctional(x.to_string()));
            }
            if hit[yi] {
                return Err(Error::NotInjective(y.to_string()));
            }
            map[xi] = Some(yi);
            hit[yi] = true;
        }
        Ok(Self {
            source,
            target,
            map,
        })
    }

    /// Caller guarantees `map` is injective and in range.
    pub(crate) fn from_positions(source: FinSet, target: FinSet, map: Box<[Option<usize>]>) -> Self {
        debug_assert_eq!(map.len(), source.len());
        debug_assert!({
            let mut seen = vec![false; target.len()];
            map.iter()
                .flatten()
                .all(|&y| y < target.len() && !std::mem::replace(&mut seen[y], true))
        });
        Self {
            source,
            target,
            map,
        }
    }

    /// The empty morphism `0_{X,Y}`.
    pub fn zero(source: FinSet, target: FinSet) -> Self {
        let map = vec![None; source.len()].into_boxed_slice();
        Self {
            source,
            target,
            map,
        }
    }

    /// The full identity `1_X`.
    pub fn identity(x: FinSet) -> Self {
        let map = (0..x.len()).map(Some).collect();
        Self {
            source: x.clone(),
            target: x,
            map,
        }
    }

    /// The inclusion `A ↪ X` of a subset, defined on all of `A`.
    pub fn inclusion(subset: &FinSet, x: &FinSet) -> Result<Self> {
        let subset = subset.clone();
        if !subset.is_subset_of(x) {
            return Err(Error::InvalidSubset {
                subset: subset.to_string(),
                set: x.to_string(),
            });
        }
        let map = subset.iter().map(|a| x.position(a)).collect();
        Ok(Self::from_positions(subset, x.clone(), map))
    }

    /// The corestriction `X → A`, `a ↦ a` on `A` and undefined elsewhere.
    pub fn restriction_onto(x: &FinSet, subset: &FinSet) -> Result<Self> {
        Ok(Self::inclusion(subset, x)?.inverse())
    }

    pub fn source(&self) -> &FinSet {
        &self.source
    }

    pub fn target(&self) -> &FinSet {
        &self.target
    }

    pub fn apply(&self, x: &str) -> Option<&str> {
        let xi = self.source.position(x)?;
        self.map[xi].and_then(|yi| self.target.get(yi))
    }

    /// Graph pairs in source declaration order.
    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.map.iter().enumerate().filter_map(move |(xi, y)| {
            y.map(|yi| (self.source.get(xi).unwrap(), self.target.get(yi).unwrap()))
        })
    }

    /// Number of pairs in the graph.
    pub fn rank(&self) -> usize {
        self.map.iter().flatten().count()
    }

    /// Domain, in source order.
    pub fn dom(&self) -> FinSet {
        let mut i = 0;
        self.source.filter(|_| {
            let keep = self.map[i].is_some();
            i += 1;
            keep
        })
    }

    /// Image, in target order.
    pub fn im(&self) -> FinSet {
        let mut hit = vec![false; self.target.len()];
        for &y in self.map.iter().flatten() {
            hit[y] = true;
        }
        let mut i = 0;
        self.target.filter(|_| {
            let keep = hit[i];
            i += 1;
            keep
        })
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(Option::is_none)
    }

    pub fn is_endo(&self) -> bool {
        self.source == self.target
    }

    /// `f⁻¹`: source and target swapped, graph transposed.
    pub fn inverse(&self) -> PBij {
        let mut map = vec![None; self.target.len()].into_boxed_slice();
        for (xi, y) in self.map.iter().enumerate() {
            if let Some(yi) = y {
                map[*yi] = Some(xi);
            }
        }
        Self::from_positions(self.target.clone(), self.source.clone(), map)
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &PBij) -> Result<PBij> {
        compose(self, f)
    }
}

/// `g ∘ f`, applying `f` first.
///
/// Defined iff `f.target() == g.source()`; the result is defined exactly on
/// the `x` with `f(x) ∈ dom(g)`.
pub fn compose(g: &PBij, f: &PBij) -> Result<PBij> {
    if f.target != g.source {
        return Err(Error::CompositionUndefined {
            left: f.target.to_string(),
            right: g.source.to_string(),
        });
    }
    let shared = f.target.same_order(&g.source);
    let map = f
        .map
        .iter()
        .map(|y| {
            let y = (*y)?;
            let gy = if shared {
                y
            } else {
                g.source.position(f.target.get(y)?)?
            };
            g.map[gy]
        })
        .collect();
    Ok(PBij::from_positions(f.source.clone(), g.target.clone(), map))
}

/// The partial identity `1_A` as a morphism `X → X`.
pub fn partial_identity(x: &FinSet, a: &FinSet) -> Result<PBij> {
    if !a.is_subset_of(x) {
        return Err(Error::InvalidSubset {
            subset: a.to_string(),
            set: x.to_string(),
        });
    }
    let map = x
        .iter()
        .enumerate()
        .map(|(i, e)| a.contains(e).then_some(i))
        .collect();
    Ok(PBij::from_positions(x.clone(), x.clone(), map))
}

impl PartialEq for PBij {
    fn eq(&self, other: &Self) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        if self.source.same_order(&other.source) && self.target.same_order(&other.target) {
            return self.map == other.map;
        }
        self.rank() == other.rank() && self.pairs().all(|(x, y)| other.apply(x) == Some(y))
    }
}

impl Eq for PBij {}

impl Hash for PBij {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.source.hash(state);
        self.target.hash(state);
        let mut pairs: Vec<(&str, &str)> = self.pairs().collect();
        pairs.sort();
        pairs.hash(state);
    }
}

impl fmt::Debug for PBij {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{1↦a, 2↦b} : {1 2 3} → {a b}`
impl fmt::Display for PBij {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (x, y)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}↦{y}")?;
        }
        write!(f, "}} : {} → {}", self.source, self.target)
    }
}

/// Structural flags of a morphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub is_mono: bool,
    pub is_epi: bool,
    pub is_iso: bool,
    pub is_idempotent: bool,
    pub is_partial_identity: bool,
    /// Set when the endomorphism-only flags were forced to `false` because
    /// source and target differ.
    pub not_endo: Option<&'static str>,
}

/// Mono iff the domain is the whole source, epi iff the image is the whole
/// target.
pub fn classify(f: &PBij) -> Classification {
    let is_mono = f.map.iter().all(Option::is_some);
    let is_epi = f.rank() == f.target.len();
    let (is_idempotent, is_partial_identity, not_endo) = if f.is_endo() {
        let idem = compose(f, f).map(|ff| ff == *f).unwrap_or(false);
        let pid = f.pairs().all(|(x, y)| x == y);
        (idem, pid, None)
    } else {
        (false, false, Some("source and target differ"))
    };
    Classification {
        is_mono,
        is_epi,
        is_iso: is_mono && is_epi,
        is_idempotent,
        is_partial_identity,
        not_endo,
    }
}
