//! Baer* structure of the category and the exact-category constructions
//! derived from it: kernels, cokernels, mono-epi factorizations, normality.
//!
//! Kernels and cokernels are canonical representatives: literal set
//! complements with inclusions and corestrictions. The zero object is `∅`.

use crate::enumerate::enumerate_pbij;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::pbij::{classify, compose, partial_identity, PBij};

/// The involution `f* = f⁻¹`.
pub fn star(f: &PBij) -> PBij {
    f.inverse()
}

/// `f′ = 1_{X − dom f}`, the projection generating the left annihilator
/// class of `f`.
pub fn annihilator_projection(f: &PBij) -> PBij {
    let x = f.source();
    partial_identity(x, &x.difference(&f.dom())).expect("complement is a subset")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectionStatus {
    pub is_projection: bool,
    pub is_closed: bool,
}

/// Whether `e` is a projection (`e² = e = e*`) and whether `e′′ = e`.
///
/// Every projection is closed here; an unclosed projection is reported as
/// [`Error::Internal`].
pub fn projection_status(e: &PBij) -> Result<ProjectionStatus> {
    if !e.is_endo() {
        return Err(Error::ObjectMismatch(format!(
            "projection status needs an endomorphism, got {e}"
        )));
    }
    let idempotent = compose(e, e)? == *e;
    let is_projection = idempotent && star(e) == *e;
    let is_closed = annihilator_projection(&annihilator_projection(e)) == *e;
    if is_projection && !is_closed {
        return Err(Error::Internal(format!("projection {e} is not closed")));
    }
    Ok(ProjectionStatus {
        is_projection,
        is_closed,
    })
}

/// Checks `{g | f ∘ g = 0} = f′ ∘ B` over all morphisms out of the probes.
pub fn baer_annihilator_check(f: &PBij, probes: &[FinSet]) -> bool {
    assert!(!probes.is_empty(), "annihilator check needs at least one probe object");
    let fp = annihilator_projection(f);
    probes.iter().all(|p| {
        enumerate_pbij(p, f.source()).iter().all(|g| {
            let annihilated = compose(f, g).unwrap().is_zero();
            let fpg = compose(&fp, g).unwrap();
            let in_class = !annihilated || fpg == *g;
            let class_annihilated = compose(f, &fpg).unwrap().is_zero();
            in_class && class_annihilated
        })
    })
}

/// A mono-epi factorization `f = mono ∘ epi` through `via`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub mono: PBij,
    pub epi: PBij,
    pub via: FinSet,
}

/// Factors `f` through its image: `epi` is the corestriction of `f` onto
/// `im f`, `mono` the inclusion `im f ↪ target`.
pub fn factorize(f: &PBij) -> Factorization {
    let via = f.im();
    let mono = PBij::inclusion(&via, f.target()).expect("image is a subset of the target");
    let epi = compose(&mono.inverse(), f).expect("target matches");
    Factorization { mono, epi, via }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelPair {
    pub object: FinSet,
    pub arrow: PBij,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CokernelPair {
    pub object: FinSet,
    pub arrow: PBij,
}

/// `ker f`: the mono part of the factorization of `f′`, i.e. the inclusion
/// of `source − dom f`.
pub fn kernel(f: &PBij) -> KernelPair {
    let Factorization { mono, via, .. } = factorize(&annihilator_projection(f));
    KernelPair {
        object: via,
        arrow: mono,
    }
}

/// `coker f`: the epi part of the factorization of `(f⁻¹)′`, i.e. the
/// corestriction of the target onto `target − im f`.
pub fn cokernel(f: &PBij) -> CokernelPair {
    let Factorization { epi, via, .. } = factorize(&annihilator_projection(&f.inverse()));
    CokernelPair {
        object: via,
        arrow: epi,
    }
}

/// Every `g: P → X` with `f ∘ g = 0` factors through `ker f` in exactly one
/// way, for each probe `P`.
pub fn kernel_universal_check(f: &PBij, probes: &[FinSet]) -> bool {
    assert!(!probes.is_empty(), "kernel check needs at least one probe object");
    let ker = kernel(f);
    probes.iter().all(|p| {
        let factors: Vec<PBij> = enumerate_pbij(p, &ker.object)
            .iter()
            .map(|h| compose(&ker.arrow, h).unwrap())
            .collect();
        enumerate_pbij(p, f.source()).iter().all(|g| {
            if !compose(f, g).unwrap().is_zero() {
                return true;
            }
            factors.iter().filter(|kh| *kh == g).count() == 1
        })
    })
}

/// Every `g: Y → P` with `g ∘ f = 0` factors through `coker f` in exactly
/// one way, for each probe `P`.
pub fn cokernel_universal_check(f: &PBij, probes: &[FinSet]) -> bool {
    assert!(!probes.is_empty(), "cokernel check needs at least one probe object");
    let coker = cokernel(f);
    probes.iter().all(|p| {
        let factors: Vec<PBij> = enumerate_pbij(&coker.object, p)
            .iter()
            .map(|h| compose(h, &coker.arrow).unwrap())
            .collect();
        enumerate_pbij(f.target(), p).iter().all(|g| {
            if !compose(g, f).unwrap().is_zero() {
                return true;
            }
            factors.iter().filter(|hq| *hq == g).count() == 1
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Normality {
    /// `Some(ok)` when `f` is mono: whether `f ≅ ker((f⁻¹)′)`.
    pub normal: Option<bool>,
    /// `Some(ok)` when `f` is epi: whether `f ≅ coker(f′)`.
    pub conormal: Option<bool>,
}

impl Normality {
    pub fn not_applicable(&self) -> bool {
        self.normal.is_none() && self.conormal.is_none()
    }
}

/// Monos are kernels and epis are cokernels, up to canonical isomorphism.
///
/// For a mono `f: X → Y` with `k = ker((f⁻¹)′): K → Y`, the comparison
/// `u = k⁻¹ ∘ f` must be an iso with `k ∘ u = f`; dually for epis.
pub fn normal_conormal_check(f: &PBij) -> Normality {
    let c = classify(f);
    let normal = c.is_mono.then(|| {
        let k = kernel(&annihilator_projection(&f.inverse())).arrow;
        let u = compose(&k.inverse(), f).unwrap();
        classify(&u).is_iso && compose(&k, &u).unwrap() == *f
    });
    let conormal = c.is_epi.then(|| {
        let q = cokernel(&annihilator_projection(f)).arrow;
        let v = compose(f, &q.inverse()).unwrap();
        classify(&v).is_iso && compose(&v, &q).unwrap() == *f
    });
    Normality { normal, conormal }
}
