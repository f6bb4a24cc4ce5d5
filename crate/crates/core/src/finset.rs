use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite set of opaque element identifiers.
///
/// Elements keep their declaration order, which fixes every enumeration
/// order downstream. Equality is set equality: two `FinSet`s with the same
/// elements in a different order are the same object.
#[derive(Clone, Default)]
pub struct FinSet {
    elems: Arc<[String]>,
}

pub(crate) fn check_token(token: &str) -> Result<()> {
    if token.is_empty() || token == "->" || token.chars().any(char::is_whitespace) {
        return Err(Error::InvalidToken(token.to_string()));
    }
    Ok(())
}

impl FinSet {
    pub fn new<I, S>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut elems: Vec<String> = Vec::new();
        for e in elements {
            let e = e.into();
            check_token(&e)?;
            if elems.contains(&e) {
                return Err(Error::DuplicateElement(e));
            }
            elems.push(e);
        }
        Ok(Self {
            elems: elems.into(),
        })
    }

    /// Whitespace-separated tokens, e.g. `"1 2 3"`.
    pub fn parse(tokens: &str) -> Result<Self> {
        Self::new(tokens.split_whitespace())
    }

    /// `{0, 1, ..., n-1}` with decimal identifiers.
    pub fn range(n: usize) -> Self {
        Self {
            elems: (0..n).map(|i| i.to_string()).collect(),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> + '_ {
        self.elems.iter().map(String::as_str)
    }

    pub fn get(&self, index: usize) -> Option<&str> {
        self.elems.get(index).map(String::as_str)
    }

    pub fn position(&self, element: &str) -> Option<usize> {
        self.elems.iter().position(|e| e == element)
    }

    pub fn contains(&self, element: &str) -> bool {
        self.position(element).is_some()
    }

    pub fn is_subset_of(&self, other: &FinSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    /// True when both sets list the same elements in the same order, so
    /// positions can be shared between them.
    pub(crate) fn same_order(&self, other: &FinSet) -> bool {
        Arc::ptr_eq(&self.elems, &other.elems) || self.elems == other.elems
    }

    /// Elements of `self` not in `other`, in `self`'s order.
    pub fn difference(&self, other: &FinSet) -> FinSet {
        self.filter(|e| !other.contains(e))
    }

    /// Elements of `self` also in `other`, in `self`'s order.
    pub fn intersection(&self, other: &FinSet) -> FinSet {
        self.filter(|e| other.contains(e))
    }

    /// Elements of `self` followed by the new elements of `other`.
    pub fn union(&self, other: &FinSet) -> FinSet {
        let mut elems = self.elems.to_vec();
        elems.extend(other.iter().filter(|e| !self.contains(e)).map(str::to_string));
        FinSet {
            elems: elems.into(),
        }
    }

    pub fn filter(&self, mut keep: impl FnMut(&str) -> bool) -> FinSet {
        FinSet {
            elems: self.iter().filter(|e| keep(e)).map(str::to_string).collect(),
        }
    }

    /// Validates that `subset` is contained in `self` and returns it
    /// re-ordered to follow `self`'s declaration order.
    pub fn subset(&self, subset: &FinSet) -> Result<FinSet> {
        if !subset.is_subset_of(self) {
            return Err(Error::InvalidSubset {
                subset: subset.to_string(),
                set: self.to_string(),
            });
        }
        Ok(self.intersection(subset))
    }

    /// All `2^n` subsets, indexed by bitmask over declaration order.
    pub fn subsets(&self) -> Vec<FinSet> {
        assert!(self.len() < usize::BITS as usize, "set too large to enumerate subsets");
        (0..1usize << self.len())
            .map(|mask| self.subset_from_mask(mask))
            .collect()
    }

    pub(crate) fn subset_from_mask(&self, mask: usize) -> FinSet {
        FinSet {
            elems: self
                .elems
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| e.clone())
                .collect(),
        }
    }

    /// Space-separated tokens; the empty set renders as an empty string.
    pub fn tokens(&self) -> String {
        self.elems.join(" ")
    }
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_order(other) || (self.len() == other.len() && self.is_subset_of(other))
    }
}

impl Eq for FinSet {}

impl Hash for FinSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut sorted: Vec<&String> = self.elems.iter().collect();
        sorted.sort();
        sorted.hash(state);
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{a b c}`, or `∅` for the empty set.
impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{{{}}}", self.tokens())
        }
    }
}
