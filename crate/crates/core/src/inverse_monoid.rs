//! The symmetric inverse monoid, inverse-semigroup axioms checked on Cayley
//! tables, and the Wagner–Preston embedding.

use std::fmt;

use crate::enumerate::enumerate_pbij;
use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::pbij::{compose, partial_identity, PBij};

/// A finite semigroup given by its multiplication table.
///
/// `product[a][b]` is the index of `a·b`. Associativity is *not* assumed;
/// see [`verify_inverse_semigroup`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    name: String,
    carrier: FinSet,
    product: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(name: impl Into<String>, carrier: FinSet, product: Vec<Vec<usize>>) -> Result<Self> {
        let n = carrier.len();
        if product.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} rows for {n} elements",
                product.len()
            )));
        }
        for (a, row) in product.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|&&p| p >= n) {
                return Err(Error::MalformedTable(format!("row {a} has index {bad} out of range")));
            }
        }
        Ok(Self {
            name: name.into(),
            carrier,
            product,
        })
    }

    /// Builds a table from an operation on element indices.
    pub fn from_fn(
        name: impl Into<String>,
        carrier: FinSet,
        op: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = carrier.len();
        let product = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
        Self::new(name, carrier, product)
    }

    /// The table of `elements` under composition, `a·b = a ∘ b`.
    ///
    /// Fails if the elements are not closed under composition.
    pub fn from_morphisms(name: impl Into<String>, elements: &[PBij]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(morphism_token).collect();
        let carrier = FinSet::new(names).map_err(|e| Error::MalformedTable(e.to_string()))?;
        let mut product = Vec::with_capacity(elements.len());
        for a in elements {
            let mut row = Vec::with_capacity(elements.len());
            for b in elements {
                let ab = compose(a, b)
                    .map_err(|e| Error::ObjectMismatch(e.to_string()))?;
                let idx = elements.iter().position(|m| *m == ab).ok_or_else(|| {
                    Error::MalformedTable(format!("{ab} is outside the element list"))
                })?;
                row.push(idx);
            }
            product.push(row);
        }
        Self::new(name, carrier, product)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn element(&self, index: usize) -> &str {
        self.carrier.get(index).expect("index in range")
    }

    pub fn index(&self, element: &str) -> Option<usize> {
        self.carrier.position(element)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a][b]
    }

    /// Adjoins a fresh zero element.
    pub fn with_adjoined_zero(&self, zero: &str) -> Result<Self> {
        let carrier = FinSet::new(self.carrier.iter().chain([zero]))?;
        let z = self.len();
        Self::from_fn(format!("{}0", self.name), carrier, |a, b| {
            if a == z || b == z {
                z
            } else {
                self.mul(a, b)
            }
        })
    }
}

/// Compact whitespace-free name for a morphism: `0` for the empty graph,
/// otherwise `x>y` pairs joined by commas.
pub fn morphism_token(f: &PBij) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.pairs()
        .map(|(x, y)| format!("{x}>{y}"))
        .collect::<Vec<_>>()
        .join(",")
}

/// A concrete failure of one of the inverse-semigroup axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `(a·b)·c ≠ a·(b·c)`
    NonAssociative { a: String, b: String, c: String },
    /// No `b` with `aba = a` and `bab = b`.
    NoInverse { a: String },
    /// Idempotents with `ef ≠ fe`.
    NonCommutingIdempotents { e: String, f: String },
    /// Two distinct inverses of `a`.
    MultipleInverses { a: String, first: String, second: String },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NonAssociative { a, b, c } => write!(f, "non-associative triple ({a}, {b}, {c})"),
            Witness::NoInverse { a } => write!(f, "{a} has no inverse"),
            Witness::NonCommutingIdempotents { e, f: g } => {
                write!(f, "idempotents {e} and {g} do not commute")
            }
            Witness::MultipleInverses { a, first, second } => {
                write!(f, "{a} has two inverses {first} and {second}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub associative: bool,
    pub regular: bool,
    pub idempotents_commute: bool,
    pub inverses_unique: bool,
    /// `a ↦ a⁻¹`, present only when inverses are unique.
    pub inverse_map: Option<Vec<(String, String)>>,
    /// Every witness found, in declaration order.
    pub counterexamples: Vec<Witness>,
}

impl AxiomReport {
    pub fn is_inverse_semigroup(&self) -> bool {
        self.associative && self.inverses_unique
    }
}

/// Exhaustively checks associativity, regularity, commuting idempotents and
/// uniqueness of inverses.
///
/// If the table is associative, regular and its idempotents commute, then
/// inverses must be unique; a table that contradicts this yields
/// [`Error::Internal`] rather than a report.
pub fn verify_inverse_semigroup(t: &CayleyTable) -> Result<AxiomReport> {
    let n = t.len();
    let name = |i: usize| t.element(i).to_string();
    let mut counterexamples = Vec::new();

    for a in 0..n {
        for b in 0..n {
            let ab = t.mul(a, b);
            for c in 0..n {
                if t.mul(ab, c) != t.mul(a, t.mul(b, c)) {
                    counterexamples.push(Witness::NonAssociative {
                        a: name(a),
                        b: name(b),
                        c: name(c),
                    });
                }
            }
        }
    }
    let associative = counterexamples.is_empty();

    let is_inverse_pair = |a: usize, b: usize| t.mul(t.mul(a, b), a) == a && t.mul(t.mul(b, a), b) == b;
    let mut regular = true;
    let mut inverses_unique = true;
    let mut inverse_map = Vec::with_capacity(n);
    for a in 0..n {
        let inverses: Vec<usize> = (0..n).filter(|&b| is_inverse_pair(a, b)).collect();
        match inverses.as_slice() {
            [] => {
                regular = false;
                inverses_unique = false;
                counterexamples.push(Witness::NoInverse { a: name(a) });
            }
            [b] => inverse_map.push((name(a), name(*b))),
            [first, second, ..] => {
                inverses_unique = false;
                counterexamples.push(Witness::MultipleInverses {
                    a: name(a),
                    first: name(*first),
                    second: name(*second),
                });
            }
        }
    }

    let idempotents: Vec<usize> = (0..n).filter(|&e| t.mul(e, e) == e).collect();
    let mut idempotents_commute = true;
    for (i, &e) in idempotents.iter().enumerate() {
        for &f in &idempotents[i + 1..] {
            if t.mul(e, f) != t.mul(f, e) {
                idempotents_commute = false;
                counterexamples.push(Witness::NonCommutingIdempotents { e: name(e), f: name(f) });
            }
        }
    }

    if associative && regular && idempotents_commute && !inverses_unique {
        return Err(Error::Internal(format!(
            "{}: regular with commuting idempotents, yet inverses are not unique",
            t.name()
        )));
    }

    Ok(AxiomReport {
        associative,
        regular,
        idempotents_commute,
        inverses_unique,
        inverse_map: inverses_unique.then_some(inverse_map),
        counterexamples,
    })
}

/// `I(X)`: every partial bijection `X → X`.
pub fn symmetric_inverse_monoid(x: &FinSet) -> Vec<PBij> {
    enumerate_pbij(x, x)
}

/// The partial identities `1_A`, one per subset `A ⊆ X`.
pub fn idempotents_of(x: &FinSet) -> Vec<PBij> {
    x.subsets()
        .iter()
        .map(|a| partial_identity(x, a).expect("subset of x"))
        .collect()
}

/// For each `α` in `elements`, searches all of `I(X)` for morphisms `β` with
/// `αβα = α` and `βαβ = β`, and reports whether there is exactly one.
pub fn unique_inverse_check(elements: &[PBij]) -> Result<bool> {
    let Some(first) = elements.first() else {
        return Ok(true);
    };
    let x = first.source().clone();
    if let Some(bad) = elements.iter().find(|a| *a.source() != x || *a.target() != x) {
        return Err(Error::ObjectMismatch(format!(
            "{bad} is not an endomorphism of {x}"
        )));
    }
    let monoid = symmetric_inverse_monoid(&x);
    let c = |g: &PBij, f: &PBij| compose(g, f).expect("endomorphisms of one object");
    for alpha in elements {
        let count = monoid
            .iter()
            .filter(|beta| c(&c(alpha, beta), alpha) == *alpha && c(&c(beta, alpha), beta) == **beta)
            .count();
        if count != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Wagner–Preston representation: `θ_a` is the partial bijection of the
/// carrier `S` with domain `a⁻¹S`, image `aS` and `θ_a(x) = a·x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub carrier: FinSet,
    /// `images[i]` is `θ` of the `i`-th element.
    pub images: Vec<PBij>,
}

impl Embedding {
    pub fn image(&self, element: &str) -> Option<&PBij> {
        self.carrier.position(element).map(|i| &self.images[i])
    }
}

pub fn wagner_preston(t: &CayleyTable) -> Result<Embedding> {
    let report = verify_inverse_semigroup(t)?;
    if !report.is_inverse_semigroup() {
        let why = report
            .counterexamples
            .first()
            .map(ToString::to_string)
            .unwrap_or_default();
        return Err(Error::NotInverseSemigroup(format!("{}: {why}", t.name())));
    }
    let inverse_map = report.inverse_map.expect("inverses are unique");
    let carrier = t.carrier().clone();
    let images = inverse_map
        .iter()
        .enumerate()
        .map(|(a, (_, inv))| {
            let inv = t.index(inv).expect("inverse is an element");
            let source_unit = t.mul(inv, a);
            // x ∈ a⁻¹S = a⁻¹aS iff a⁻¹a·x = x
            let map: Box<[Option<usize>]> = (0..t.len())
                .map(|x| (t.mul(source_unit, x) == x).then(|| t.mul(a, x)))
                .collect();
            PBij::from_positions(carrier.clone(), carrier.clone(), map)
        })
        .collect();
    Ok(Embedding { carrier, images })
}

/// The first pair `(a, b)` with `θ_{ab} ≠ θ_a ∘ θ_b`, if any.
pub fn homomorphism_violation(t: &CayleyTable, e: &Embedding) -> Option<(String, String)> {
    for a in 0..t.len() {
        for b in 0..t.len() {
            let composed = compose(&e.images[a], &e.images[b]).ok();
            if composed.as_ref() != Some(&e.images[t.mul(a, b)]) {
                return Some((t.element(a).to_string(), t.element(b).to_string()));
            }
        }
    }
    None
}

/// The first pair of distinct elements with equal images, if any.
pub fn injectivity_violation(t: &CayleyTable, e: &Embedding) -> Option<(String, String)> {
    for a in 0..t.len() {
        for b in a + 1..t.len() {
            if e.images[a] == e.images[b] {
                return Some((t.element(a).to_string(), t.element(b).to_string()));
            }
        }
    }
    None
}

/// Small Cayley tables used by tests, the law suite and the CLI.
pub mod fixtures {
    use super::*;

    fn table(name: &str, elems: &str, op: impl Fn(usize, usize) -> usize) -> CayleyTable {
        CayleyTable::from_fn(name, FinSet::parse(elems).unwrap(), op).unwrap()
    }

    /// `{e, a}` with `a² = e`.
    pub fn group_z2() -> CayleyTable {
        table("Z2", "e a", |a, b| a ^ b)
    }

    pub fn group_z3() -> CayleyTable {
        table("Z3", "e g g2", |a, b| (a + b) % 3)
    }

    /// `{0, 1}` under `min`.
    pub fn semilattice2() -> CayleyTable {
        table("min2", "0 1", |a, b| a.min(b))
    }

    /// `a·b = a`: regular, but its idempotents do not commute.
    pub fn left_zero2() -> CayleyTable {
        table("leftzero2", "a b", |a, _| a)
    }

    /// The five-element Brandt semigroup `B₂`.
    pub fn brandt2() -> CayleyTable {
        // e11 e12 e21 e22 0 with e_ij·e_kl = e_il when j = k
        let units = [(0, 0), (0, 1), (1, 0), (1, 1)];
        table("B2", "e11 e12 e21 e22 z", move |a, b| {
            if a == 4 || b == 4 {
                return 4;
            }
            let ((i, j), (k, l)) = (units[a], units[b]);
            if j == k {
                units.iter().position(|&u| u == (i, l)).unwrap()
            } else {
                4
            }
        })
    }

    /// The Cayley table of `I({1, 2})` itself.
    pub fn symmetric_inverse_monoid2() -> CayleyTable {
        let x = FinSet::parse("1 2").unwrap();
        CayleyTable::from_morphisms("I2", &symmetric_inverse_monoid(&x)).unwrap()
    }

    /// `I({1, 2})` with a fresh zero adjoined: eight elements.
    pub fn symmetric_inverse_monoid2_with_zero() -> CayleyTable {
        symmetric_inverse_monoid2().with_adjoined_zero("z").unwrap()
    }

    /// The powerset of `{1, 2, 3}` under intersection.
    pub fn powerset_semilattice3() -> CayleyTable {
        table("P3", "000 001 010 011 100 101 110 111", |a, b| a & b)
    }

    /// Every fixture expected to pass as an inverse semigroup.
    pub fn inverse_semigroups() -> Vec<CayleyTable> {
        vec![
            group_z2(),
            group_z3(),
            semilattice2(),
            brandt2(),
            symmetric_inverse_monoid2(),
            symmetric_inverse_monoid2_with_zero(),
            powerset_semilattice3(),
        ]
    }
}
