//! Compositions, descent-style subsets, skew shapes and signed integer vectors.
//!
//! A composition is stored bottom row first, matching the diagram convention
//! where row `i` is counted from the bottom.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `{1, ..., n-1}`.
pub type Subset = BTreeSet<usize>;

/// A finite list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart(parts));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    /// The one-part composition `(n)`, or `∅` when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn column(n: usize) -> Self {
        Composition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `j`, 1-based, with zero beyond the length.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    /// `(α_2, ..., α_k)`.
    pub fn tail(&self) -> Result<Composition> {
        match self.0.split_first() {
            Some((_, rest)) => Ok(Composition(rest.to_vec())),
            None => Err(Error::EmptyComposition),
        }
    }

    /// `α^{(i)} = (α_1, ..., α_i)`; truncates at the length.
    pub fn prefix(&self, i: usize) -> Composition {
        Composition(self.0[..i.min(self.len())].to_vec())
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }

    /// Partial sums `{α_1, α_1+α_2, ..., α_1+...+α_{k-1}}`.
    pub fn set_of(&self) -> Subset {
        let mut acc = 0;
        let mut out = Subset::new();
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// The composition whose descent set is the complement of ours.
    pub fn complement(&self) -> Composition {
        let n = self.size();
        if n == 0 {
            return Self::empty();
        }
        comp_of(
            &complement(&self.set_of(), n).expect("set_of is in range"),
            n,
        )
        .expect("complement is in range")
    }

    /// The conjugate composition: reverse of the complement.
    pub fn transpose(&self) -> Composition {
        self.complement().reversed()
    }

    /// `β ⊆ α`: `ℓ(β) ≤ ℓ(α)` and `β_j ≤ α_j` for `j ≤ ℓ(β)`.
    pub fn contains(&self, inner: &Composition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(b, a)| b <= a)
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// `(β_1, ..., β_{k-1}, β_k + γ_1, γ_2, ..., γ_l)`; with an empty argument
    /// this is plain concatenation.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        if self.is_empty() || other.is_empty() {
            return self.concat(other);
        }
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// Every coarsening of `self` (including itself), i.e. compositions whose
    /// descent set is a subset of ours.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let n = self.size();
        let set: Vec<usize> = self.set_of().into_iter().collect();
        subsets_of(&set)
            .into_iter()
            .map(|s| comp_of(&s, n).unwrap())
            .collect()
    }

    /// Every refinement of `self` (including itself).
    pub fn refinements(&self) -> Vec<Composition> {
        let n = self.size();
        let own = self.set_of();
        let free: Vec<usize> = (1..n).filter(|i| !own.contains(i)).collect();
        subsets_of(&free)
            .into_iter()
            .map(|extra| {
                let s: Subset = own.union(&extra).copied().collect();
                comp_of(&s, n).unwrap()
            })
            .collect()
    }
}

fn subsets_of(items: &[usize]) -> Vec<Subset> {
    (0u64..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"1,2,1"`; the empty string (or only whitespace) is `∅`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad composition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts).map_err(|_| Error::Parse(format!("zero part in {s:?}")))
    }
}

/// Build a composition from a literal slice; panics on a zero part.
#[macro_export]
macro_rules! comp {
    () => { $crate::composition::Composition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::composition::Composition::new(vec![$($p),+]).expect("positive parts")
    };
}

/// All compositions of `n`, ordered by `set_of` read as a bitmask (bit `i-1`
/// for element `i`).
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let s: Subset = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            comp_of(&s, n).unwrap()
        })
        .collect()
}

/// All compositions of `n` with exactly `len` parts, in `compositions_of` order.
pub fn compositions_of_length(n: usize, len: usize) -> Vec<Composition> {
    compositions_of(n)
        .into_iter()
        .filter(|c| c.len() == len)
        .collect()
}

/// Consecutive differences of `S ∪ {n}`.
pub fn comp_of(set: &Subset, n: usize) -> Result<Composition> {
    if n == 0 {
        return match set.iter().next() {
            Some(&element) => Err(Error::SubsetOutOfRange { element, n }),
            None => Ok(Composition::empty()),
        };
    }
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set {
        if s == 0 || s >= n {
            return Err(Error::SubsetOutOfRange { element: s, n });
        }
        parts.push(s - prev);
        prev = s;
    }
    parts.push(n - prev);
    Ok(Composition(parts))
}

/// Complement of `S` inside `{1, ..., n-1}`.
pub fn complement(set: &Subset, n: usize) -> Result<Subset> {
    if let Some(&bad) = set.iter().find(|&&s| s == 0 || s >= n) {
        return Err(Error::SubsetOutOfRange { element: bad, n });
    }
    Ok((1..n).filter(|i| !set.contains(i)).collect())
}

/// `γ/τ` is a vertical strip: padding `τ` with zeros to `ℓ(γ)`, every
/// `γ_j - τ_j` lies in `{0, 1}`.
pub fn is_vertical_strip(outer: &Composition, inner: &Composition) -> bool {
    inner.len() <= outer.len()
        && (1..=outer.len()).all(|j| {
            let (a, b) = (outer.part(j), inner.part(j));
            b <= a && a - b <= 1
        })
}

/// The diagram `α/β`, with `β ⊆ α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Composition,
    inner: Composition,
}

impl SkewShape {
    pub fn new(outer: Composition, inner: Composition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Composition) -> Self {
        SkewShape {
            outer,
            inner: Composition::empty(),
        }
    }

    pub fn outer(&self) -> &Composition {
        &self.outer
    }

    pub fn inner(&self) -> &Composition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of boxes in row `j` (1-based).
    pub fn row_len(&self, j: usize) -> usize {
        self.outer.part(j) - self.inner.part(j)
    }
}

/// `skew(α, β)`: the shape `α/β`, failing when `β ⊄ α`.
pub fn skew(outer: &Composition, inner: &Composition) -> Result<SkewShape> {
    SkewShape::new(outer.clone(), inner.clone())
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// Parses `"1,2,1/1,1"`; a missing or empty right side is `∅`.
impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (outer, inner) = match s.split_once('/') {
            Some((o, i)) => (o.parse()?, i.parse()?),
            None => (s.parse()?, Composition::empty()),
        };
        SkewShape::new(outer, inner).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// An integer vector of fixed length (entries of any sign).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn zeros(len: usize) -> Self {
        IntVector(vec![0; len])
    }

    /// `a - b` with both padded by zeros to `len`.
    pub fn difference(a: &Composition, b: &Composition, len: usize) -> Self {
        IntVector(
            (1..=len)
                .map(|j| a.part(j) as i64 - b.part(j) as i64)
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Number of strictly negative entries.
    pub fn negc(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// `(-1)^{negc}`.
    pub fn sgn(&self) -> i64 {
        if self.negc().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All vectors `τ` of length `ℓ(γ)` with `γ_k - τ_k ∈ {0, 1}` and
/// `|γ| - |τ| = size`, ordered by the bitmask of removed rows.
pub fn vertical_strip_removals(outer: &Composition, size: usize) -> Vec<IntVector> {
    let k = outer.len();
    if size > k {
        return Vec::new();
    }
    (0u64..1 << k)
        .filter(|mask| mask.count_ones() as usize == size)
        .map(|mask| {
            IntVector(
                outer
                    .parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| p as i64 - (mask >> i & 1) as i64)
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> Subset {
        xs.iter().copied().collect()
    }

    #[test]
    fn enumerates_small_sizes() {
        assert_eq!(compositions_of(0), vec![comp![]]);
        assert_eq!(compositions_of(1), vec![comp![1]]);
        let three = compositions_of(3);
        assert_eq!(
            three,
            vec![comp![3], comp![1, 2], comp![2, 1], comp![1, 1, 1]]
        );
        for n in 1..=10 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn set_and_comp_examples() {
        assert_eq!(comp![3, 4, 1].set_of(), set(&[3, 7]));
        assert_eq!(comp![5].set_of(), set(&[]));
        assert_eq!(comp![1, 1, 1].set_of(), set(&[1, 2]));
        assert_eq!(comp_of(&set(&[3, 7]), 8).unwrap(), comp![3, 4, 1]);
        assert_eq!(comp_of(&set(&[]), 4).unwrap(), comp![4]);
        assert_eq!(comp_of(&set(&[1, 2]), 3).unwrap(), comp![1, 1, 1]);
        assert_eq!(
            comp_of(&set(&[3]), 3),
            Err(Error::SubsetOutOfRange { element: 3, n: 3 })
        );
        assert!(comp_of(&set(&[0]), 3).is_err());
    }

    #[test]
    fn bijection_up_to_ten() {
        for n in 1..=10 {
            for c in compositions_of(n) {
                assert_eq!(comp_of(&c.set_of(), n).unwrap(), c);
            }
            for mask in 0u64..1 << (n - 1) {
                let s: Subset = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                assert_eq!(comp_of(&s, n).unwrap().set_of(), s);
            }
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&set(&[3, 7]), 8).unwrap(), set(&[1, 2, 4, 5, 6]));
        assert_eq!(complement(&set(&[]), 4).unwrap(), set(&[1, 2, 3]));
        assert_eq!(complement(&set(&[1, 2, 3]), 4).unwrap(), set(&[]));
        assert!(complement(&set(&[4]), 4).is_err());
        let s = set(&[2, 5]);
        assert_eq!(complement(&complement(&s, 7).unwrap(), 7).unwrap(), s);
    }

    #[test]
    fn containment_and_skew() {
        assert!(comp![3, 4, 1].contains(&comp![2, 4]));
        assert!(comp![1, 2].contains(&comp![1, 2]));
        assert!(!comp![1, 2].contains(&comp![2]));
        assert!(skew(&comp![1, 2], &comp![2]).is_err());
        assert_eq!(skew(&comp![3, 4, 1], &comp![1]).unwrap().size(), 7);
    }

    #[test]
    fn vertical_strips() {
        assert!(is_vertical_strip(&comp![3, 4, 1], &comp![2, 4]));
        assert!(is_vertical_strip(&comp![2, 1], &comp![2, 1]));
        assert!(is_vertical_strip(&comp![1, 1], &comp![]));
        assert!(!is_vertical_strip(&comp![3, 4, 1], &comp![1, 4]));
        assert!(!is_vertical_strip(&comp![2, 2], &comp![2]));
    }

    #[test]
    fn concatenations() {
        assert_eq!(comp![1, 2].concat(&comp![3]), comp![1, 2, 3]);
        assert_eq!(comp![1, 2].near_concat(&comp![3]), comp![1, 5]);
        assert_eq!(comp![].concat(&comp![2, 1]), comp![2, 1]);
        assert_eq!(comp![2].concat(&comp![1]), comp![2, 1]);
        assert_eq!(comp![2].near_concat(&comp![1]), comp![3]);
        assert_eq!(comp![].near_concat(&comp![2]), comp![2]);
        assert_eq!(comp![2].near_concat(&comp![]), comp![2]);
    }

    #[test]
    fn tail_and_signs() {
        assert_eq!(comp![1, 2, 1].tail().unwrap(), comp![2, 1]);
        assert_eq!(comp![].tail(), Err(Error::EmptyComposition));
        let v = IntVector(vec![1, -2, 0]);
        assert_eq!(v.negc(), 1);
        assert_eq!(v.sgn(), -1);
        assert_eq!(IntVector::zeros(4).sgn(), 1);
    }

    #[test]
    fn transpose_and_complement() {
        assert_eq!(comp![1, 2].complement(), comp![2, 1]);
        assert_eq!(comp![1, 2].transpose(), comp![1, 2]);
        assert_eq!(comp![3].complement(), comp![1, 1, 1]);
        assert_eq!(comp![3, 1].transpose(), comp![2, 1, 1]);
    }

    #[test]
    fn parsing() {
        assert_eq!("1,2,1".parse::<Composition>().unwrap(), comp![1, 2, 1]);
        assert_eq!("".parse::<Composition>().unwrap(), comp![]);
        assert!("0".parse::<Composition>().is_err());
        assert!("1,,2".parse::<Composition>().is_err());
        let sh: SkewShape = "1,2,1/1,1".parse().unwrap();
        assert_eq!(sh.outer(), &comp![1, 2, 1]);
        assert_eq!(sh.inner(), &comp![1, 1]);
        let st: SkewShape = "2/".parse().unwrap();
        assert!(st.is_straight());
        assert!("1,2/2".parse::<SkewShape>().is_err());
    }

    #[test]
    fn strip_removals() {
        let v = vertical_strip_removals(&comp![1, 1], 1);
        assert_eq!(v, vec![IntVector(vec![0, 1]), IntVector(vec![1, 0])]);
        assert_eq!(
            vertical_strip_removals(&comp![1, 1], 2),
            vec![IntVector(vec![0, 0])]
        );
        assert!(vertical_strip_removals(&comp![3], 2).is_empty());
    }

    #[test]
    fn refinements_and_coarsenings() {
        assert_eq!(comp![2].refinements().len(), 2);
        assert_eq!(comp![1, 1, 1].coarsenings().len(), 4);
        assert_eq!(comp![2, 1].refinements(), vec![comp![2, 1], comp![1, 1, 1]]);
    }
}
