//! Short exact sequences, completion of 3×3 grids and the two Noether
//! isomorphisms.
//!
//! Quotients are canonical set differences: the quotient of `X` by a
//! subobject `X₁` is `X − X₁`.

use crate::baer::cokernel;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::pbij::{classify, compose, PBij};

/// `0 → U —α→ V —β→ W → 0` with `α = ker β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortExactSeq {
    alpha: PBij,
    beta: PBij,
}

/// Why a pair of arrows fails to be short exact, if it does.
pub fn ses_defect(alpha: &PBij, beta: &PBij) -> Option<String> {
    if alpha.target() != beta.source() {
        return Some(format!(
            "middle objects differ: {} vs {}",
            alpha.target(),
            beta.source()
        ));
    }
    if !classify(alpha).is_mono {
        return Some(format!("{alpha} is not mono"));
    }
    if !classify(beta).is_epi {
        return Some(format!("{beta} is not epi"));
    }
    if !compose(beta, alpha).unwrap().is_zero() {
        return Some("β ∘ α is not zero".into());
    }
    if alpha.im() != beta.source().difference(&beta.dom()) {
        return Some(format!(
            "image {} of α is not the complement of dom β = {}",
            alpha.im(),
            beta.dom()
        ));
    }
    None
}

impl ShortExactSeq {
    pub fn new(alpha: PBij, beta: PBij) -> Result<Self> {
        match ses_defect(&alpha, &beta) {
            Some(why) => Err(Error::DiagramInvalid(why)),
            None => Ok(Self { alpha, beta }),
        }
    }

    pub fn u(&self) -> &FinSet {
        self.alpha.source()
    }

    pub fn v(&self) -> &FinSet {
        self.alpha.target()
    }

    pub fn w(&self) -> &FinSet {
        self.beta.target()
    }

    pub fn alpha(&self) -> &PBij {
        &self.alpha
    }

    pub fn beta(&self) -> &PBij {
        &self.beta
    }

    pub fn into_arrows(self) -> [PBij; 2] {
        [self.alpha, self.beta]
    }
}

/// `0 → X₁ ↪ X → X − X₁ → 0`.
pub fn make_ses(x: &FinSet, x1: &FinSet) -> Result<ShortExactSeq> {
    let x1 = x.subset(x1)?;
    let alpha = PBij::inclusion(&x1, x)?;
    let beta = PBij::restriction_onto(x, &x.difference(&x1))?;
    ShortExactSeq::new(alpha, beta)
        .map_err(|e| Error::Internal(format!("canonical sequence rejected: {e}")))
}

/// Whether `alpha` is a kernel of `beta`: mono, `β ∘ α = 0`, and
/// `im α = source(β) − dom β`.
pub fn is_kernel_of(alpha: &PBij, beta: &PBij) -> Result<bool> {
    if alpha.target() != beta.source() {
        return Err(Error::ObjectMismatch(format!(
            "{} is not the source {} of β",
            alpha.target(),
            beta.source()
        )));
    }
    Ok(classify(alpha).is_mono
        && compose(beta, alpha)?.is_zero()
        && alpha.im() == beta.source().difference(&beta.dom()))
}

/// A commutative 3×3 diagram with exact rows and columns.
///
/// Cells are indexed `(row, col)` from the top left. `rows[r][k]` is the
/// arrow `(r,k) → (r,k+1)` for the top two rows, `bottom` the same for row
/// 2, and `cols[k][c]` the arrow `(k,c) → (k+1,c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid3x3 {
    pub objects: [[FinSet; 3]; 3],
    pub rows: [[PBij; 2]; 2],
    pub bottom: Option<[PBij; 2]>,
    pub cols: [[PBij; 3]; 2],
}

fn invalid(msg: String) -> Error {
    Error::DiagramInvalid(msg)
}

impl Grid3x3 {
    /// Checks arrow endpoints, exactness of every present row and column,
    /// and commutativity of every present square.
    pub fn validate(&self) -> Result<()> {
        let obj = |r: usize, c: usize| &self.objects[r][c];
        let endpoints = |name: String, f: &PBij, from: (usize, usize), to: (usize, usize)| {
            if f.source() != obj(from.0, from.1) || f.target() != obj(to.0, to.1) {
                return Err(invalid(format!("{name} does not join the declared objects")));
            }
            Ok(())
        };
        let mut row_list: Vec<(usize, &[PBij; 2])> = vec![(0, &self.rows[0]), (1, &self.rows[1])];
        if let Some(b) = &self.bottom {
            row_list.push((2, b));
        }
        for (r, arrows) in &row_list {
            for (k, f) in arrows.iter().enumerate() {
                endpoints(format!("arrow ({r},{k})->({r},{})", k + 1), f, (*r, k), (*r, k + 1))?;
            }
        }
        for k in 0..2 {
            for c in 0..3 {
                endpoints(format!("arrow ({k},{c})->({},{c})", k + 1), &self.cols[k][c], (k, c), (k + 1, c))?;
            }
        }
        for (r, [a, b]) in &row_list {
            if let Some(why) = ses_defect(a, b) {
                return Err(invalid(format!("row {r} is not exact: {why}")));
            }
        }
        for c in 0..3 {
            if let Some(why) = ses_defect(&self.cols[0][c], &self.cols[1][c]) {
                return Err(invalid(format!("column {c} is not exact: {why}")));
            }
        }
        let square = |name: &str, top: &PBij, right: &PBij, left: &PBij, low: &PBij| {
            if compose(right, top)? != compose(low, left)? {
                return Err(invalid(format!("{name} square does not commute")));
            }
            Ok(())
        };
        let [upper, lower] = &self.cols;
        square("upper-left", &self.rows[0][0], &upper[1], &upper[0], &self.rows[1][0])?;
        square("upper-right", &self.rows[0][1], &upper[2], &upper[1], &self.rows[1][1])?;
        if let Some(b) = &self.bottom {
            square("lower-left", &self.rows[1][0], &lower[1], &lower[0], &b[0])?;
            square("lower-right", &self.rows[1][1], &lower[2], &lower[1], &b[1])?;
        }
        Ok(())
    }

    /// Returns the grid with its bottom row filled in by [`complete_3x3`].
    pub fn completed(&self) -> Result<Grid3x3> {
        let (phi, psi) = complete_3x3(self)?;
        Ok(Grid3x3 {
            bottom: Some([phi, psi]),
            ..self.clone()
        })
    }
}

/// Completes the bottom row `0 → W′ —φ→ W —ψ→ W″ → 0`.
///
/// With `f, g` the middle-row arrows and `c′, c, c″` the lower column
/// arrows, `φ = c ∘ f ∘ c′⁻¹` and `ψ = c″ ∘ g ∘ c⁻¹`. Any bottom row already
/// present is ignored. The result is validated before it is returned.
pub fn complete_3x3(grid: &Grid3x3) -> Result<(PBij, PBij)> {
    let input = Grid3x3 {
        bottom: None,
        ..grid.clone()
    };
    input.validate()?;
    let [f, g] = &input.rows[1];
    let [c_left, c_mid, c_right] = &input.cols[1];
    let phi = compose(&compose(c_mid, f)?, &c_left.inverse())?;
    let psi = compose(&compose(c_right, g)?, &c_mid.inverse())?;
    let done = Grid3x3 {
        bottom: Some([phi.clone(), psi.clone()]),
        ..input
    };
    done.validate()
        .map_err(|e| Error::Internal(format!("completed grid fails validation: {e}")))?;
    Ok((phi, psi))
}

/// The grid of `X₁ ⊆ X₂ ⊆ X`:
///
/// ```text
/// X₁       ⇒  X₁      →  ∅
/// X₂       ↪  X       →  X − X₂
/// X₂ − X₁  →  X − X₁  →  X − X₂     (bottom row left open)
/// ```
///
/// Columns are the canonical sequences of `X₁ ⊆ X₂`, `X₁ ⊆ X` and
/// `∅ ⊆ X − X₂`.
pub fn build_noether_grid(x: &FinSet, x1: &FinSet, x2: &FinSet) -> Result<Grid3x3> {
    let x2 = x.subset(x2)?;
    let x1 = x2.subset(x1)?;
    let top = make_ses(&x1, &x1)?;
    let middle = make_ses(x, &x2)?;
    let left = make_ses(&x2, &x1)?;
    let centre = make_ses(x, &x1)?;
    let right = make_ses(&x.difference(&x2), &FinSet::empty())?;
    let objects = [
        [x1.clone(), x1.clone(), FinSet::empty()],
        [x2.clone(), x.clone(), x.difference(&x2)],
        [left.w().clone(), centre.w().clone(), right.w().clone()],
    ];
    let [l0, l1] = left.into_arrows();
    let [m0, m1] = centre.into_arrows();
    let [r0, r1] = right.into_arrows();
    let grid = Grid3x3 {
        objects,
        rows: [top.into_arrows(), middle.into_arrows()],
        bottom: None,
        cols: [[l0, m0, r0], [l1, m1, r1]],
    };
    grid.validate()
        .map_err(|e| Error::Internal(format!("Noether grid rejected: {e}")))?;
    Ok(grid)
}

/// Both sides of a Noether set identity and the isomorphism between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoetherIso {
    pub lhs: FinSet,
    pub rhs: FinSet,
    pub iso: PBij,
}

fn check_identity_iso(iso: &PBij, what: &str) -> Result<()> {
    let ok = classify(iso).is_iso && iso.pairs().all(|(a, b)| a == b);
    if !ok {
        return Err(Error::Internal(format!("{what}: {iso} is not the identity iso")));
    }
    Ok(())
}

/// `(X − X₁) − (X₂ − X₁) = X − X₂` for `X₁ ⊆ X₂ ⊆ X`.
///
/// The set identity is checked element-wise; the isomorphism is obtained by
/// completing the Noether grid and composing the bottom-row epi with the
/// inverse of the cokernel of the bottom-row mono.
pub fn noether_first(x: &FinSet, x1: &FinSet, x2: &FinSet) -> Result<NoetherIso> {
    let x2 = x.subset(x2)?;
    let x1 = x2.subset(x1)?;
    let lhs = x.difference(&x1).difference(&x2.difference(&x1));
    let rhs = x.difference(&x2);
    if lhs != rhs {
        return Err(Error::Internal(format!("first Noether identity fails: {lhs} ≠ {rhs}")));
    }
    let grid = build_noether_grid(x, &x1, &x2)?;
    let (phi, psi) = complete_3x3(&grid)?;
    let quotient = cokernel(&phi);
    if quotient.object != lhs {
        return Err(Error::Internal(format!(
            "quotient object {} differs from {lhs}",
            quotient.object
        )));
    }
    let iso = compose(&psi, &quotient.arrow.inverse())?;
    check_identity_iso(&iso, "first Noether isomorphism")?;
    Ok(NoetherIso { lhs, rhs, iso })
}

/// `X₂ − (X₁ ∩ X₂) = (X₁ ∪ X₂) − X₁` for `X₁, X₂ ⊆ X`.
///
/// Each side is also computed as a cokernel object, `X₂ / (X₁ ∩ X₂)` and
/// `(X₁ ∪ X₂) / X₁`, and must agree with the set arithmetic.
pub fn noether_second(x: &FinSet, x1: &FinSet, x2: &FinSet) -> Result<NoetherIso> {
    let x1 = x.subset(x1)?;
    let x2 = x.subset(x2)?;
    let meet = x2.intersection(&x1);
    let join = x.filter(|e| x1.contains(e) || x2.contains(e));
    let lhs = x2.difference(&meet);
    let rhs = join.difference(&x1);
    let lhs_quotient = cokernel(&PBij::inclusion(&meet, &x2)?).object;
    let rhs_quotient = cokernel(&PBij::inclusion(&x1, &join)?).object;
    if lhs != rhs || lhs != lhs_quotient || rhs != rhs_quotient {
        return Err(Error::Internal(format!(
            "second Noether identity fails: {lhs} / {lhs_quotient} vs {rhs} / {rhs_quotient}"
        )));
    }
    let iso = PBij::new(lhs.clone(), rhs.clone(), lhs.iter().map(|e| (e, e)))?;
    check_identity_iso(&iso, "second Noether isomorphism")?;
    Ok(NoetherIso { lhs, rhs, iso })
}
