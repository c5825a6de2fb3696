//! Sparse exact linear combinations over tagged basis indices.
//!
//! Coefficients are `i64`; rational arithmetic only appears inside
//! [`RatMatrix`] solves, whose results are checked for integrality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::composition::{Composition, SkewShape};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    QSym,
    NSym,
}

/// Basis symbols. Declaration order is the canonical tag order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    M,
    F,
    DualImmaculate,
    RsDualImmaculate,
    SkewDualImmaculate,
    SkewRsDualImmaculate,
    H,
    E,
    Immaculate,
    RsImmaculate,
}

impl Basis {
    pub const ALL: [Basis; 10] = [
        Basis::M,
        Basis::F,
        Basis::DualImmaculate,
        Basis::RsDualImmaculate,
        Basis::SkewDualImmaculate,
        Basis::SkewRsDualImmaculate,
        Basis::H,
        Basis::E,
        Basis::Immaculate,
        Basis::RsImmaculate,
    ];

    pub fn family(self) -> Family {
        match self {
            Basis::M
            | Basis::F
            | Basis::DualImmaculate
            | Basis::RsDualImmaculate
            | Basis::SkewDualImmaculate
            | Basis::SkewRsDualImmaculate => Family::QSym,
            Basis::H | Basis::E | Basis::Immaculate | Basis::RsImmaculate => Family::NSym,
        }
    }

    pub fn is_skew(self) -> bool {
        matches!(
            self,
            Basis::SkewDualImmaculate | Basis::SkewRsDualImmaculate
        )
    }

    /// The straight tag a skew tag collapses to when the inner shape is empty.
    fn straightened(self) -> Basis {
        match self {
            Basis::SkewDualImmaculate => Basis::DualImmaculate,
            Basis::SkewRsDualImmaculate => Basis::RsDualImmaculate,
            b => b,
        }
    }

    /// Short name used in plain output and JSON records.
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "M",
            Basis::F => "F",
            Basis::DualImmaculate | Basis::SkewDualImmaculate => "S*",
            Basis::RsDualImmaculate | Basis::SkewRsDualImmaculate => "RS*",
            Basis::H => "H",
            Basis::E => "E",
            Basis::Immaculate => "I",
            Basis::RsImmaculate => "RI",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Index {
    Straight(Composition),
    Skew(SkewShape),
}

impl Index {
    pub fn size(&self) -> usize {
        match self {
            Index::Straight(c) => c.size(),
            Index::Skew(s) => s.size(),
        }
    }

    fn outer(&self) -> &Composition {
        match self {
            Index::Straight(c) => c,
            Index::Skew(s) => s.outer(),
        }
    }

    fn inner(&self) -> Option<&Composition> {
        match self {
            Index::Straight(_) => None,
            Index::Skew(s) => Some(s.inner()),
        }
    }
}

/// A basis symbol together with its index, e.g. `F_(1,2)` or `𝔖*_{(2,2,1)/(1)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisIndex {
    basis: Basis,
    index: Index,
}

impl BasisIndex {
    pub fn new(basis: Basis, composition: Composition) -> Self {
        BasisIndex {
            basis: basis.straightened(),
            index: Index::Straight(composition),
        }
    }

    /// A skew-tagged index; an empty inner shape normalizes to the straight tag.
    pub fn skew(basis: Basis, shape: SkewShape) -> Self {
        let basis = match basis {
            Basis::DualImmaculate => Basis::SkewDualImmaculate,
            Basis::RsDualImmaculate => Basis::SkewRsDualImmaculate,
            b => b,
        };
        assert!(basis.is_skew(), "{basis:?} does not take skew indices");
        if shape.is_straight() {
            return BasisIndex::new(basis.straightened(), shape.outer().clone());
        }
        BasisIndex {
            basis,
            index: Index::Skew(shape),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn index(&self) -> &Index {
        &self.index
    }

    pub fn family(&self) -> Family {
        self.basis.family()
    }

    pub fn degree(&self) -> usize {
        self.index.size()
    }

    /// The composition of a straight index.
    pub fn composition(&self) -> Option<&Composition> {
        match &self.index {
            Index::Straight(c) => Some(c),
            Index::Skew(_) => None,
        }
    }

    /// The index as a skew shape (straight indices have empty inner shape).
    pub fn shape(&self) -> SkewShape {
        match &self.index {
            Index::Straight(c) => SkewShape::straight(c.clone()),
            Index::Skew(s) => s.clone(),
        }
    }
}

/// Degree, then basis tag, then outer composition, then inner composition.
impl Ord for BasisIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.basis.cmp(&other.basis))
            .then_with(|| self.index.outer().cmp(other.index.outer()))
            .then_with(|| self.index.inner().cmp(&other.index.inner()))
    }
}

impl PartialOrd for BasisIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = |c: &Composition| {
            c.parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.index {
            Index::Straight(c) => write!(f, "{}[{}]", self.basis.name(), parts(c)),
            Index::Skew(s) => write!(
                f,
                "{}[{}/{}]",
                self.basis.name(),
                parts(s.outer()),
                parts(s.inner())
            ),
        }
    }
}

/// A finite integer combination of basis indices from a single family.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<BasisIndex, i64>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(basis: Basis, c: Composition) -> Self {
        Element::term(BasisIndex::new(basis, c), 1)
    }

    pub fn skew(basis: Basis, shape: SkewShape) -> Self {
        Element::term(BasisIndex::skew(basis, shape), 1)
    }

    pub fn term(idx: BasisIndex, coeff: i64) -> Self {
        let mut e = Element::zero();
        e.add_term(idx, coeff);
        e
    }

    /// The unit `X_∅` expressed in `basis`.
    pub fn one(basis: Basis) -> Self {
        Element::basis(basis, Composition::empty())
    }

    /// Collects `(index, coeff)` pairs, pruning zeros; panics on mixed families.
    pub fn from_terms<I: IntoIterator<Item = (BasisIndex, i64)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (idx, c) in terms {
            e.add_term(idx, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero element.
    pub fn family(&self) -> Option<Family> {
        self.terms.keys().next().map(BasisIndex::family)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn coeff(&self, idx: &BasisIndex) -> i64 {
        self.terms.get(idx).copied().unwrap_or(0)
    }

    /// Coefficient of `basis_α`.
    pub fn coeff_of(&self, basis: Basis, c: &Composition) -> i64 {
        self.coeff(&BasisIndex::new(basis, c.clone()))
    }

    /// Coefficient of the empty index in any basis.
    pub fn constant_term(&self) -> i64 {
        self.terms
            .iter()
            .filter(|(k, _)| k.degree() == 0)
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(BasisIndex::degree).max().unwrap_or(0)
    }

    /// Panics when `idx` belongs to the other family.
    pub fn add_term(&mut self, idx: BasisIndex, coeff: i64) {
        if coeff == 0 {
            return;
        }
        if let Some(fam) = self.family() {
            assert_eq!(fam, idx.family(), "mixing QSym and NSym terms");
        }
        let entry = self.terms.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        match (self.family(), other.family()) {
            (Some(a), Some(b)) if a != b => Err(Error::FamilyMismatch(a, b)),
            _ => {
                let mut out = self.clone();
                out.add_assign_scaled(other, 1);
                Ok(out)
            }
        }
    }

    /// `self += c * other`.
    pub fn add_assign_scaled(&mut self, other: &Element, c: i64) {
        if c == 0 {
            return;
        }
        for (k, &v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scale(&self, c: i64) -> Element {
        if c == 0 {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(k, &v)| (k.clone(), c * v))
                .collect(),
        }
    }

    /// Homogeneous component of degree `n`.
    pub fn component(&self, n: usize) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == n)
                .map(|(k, &v)| (k.clone(), v))
                .collect(),
        }
    }

    /// `Σ c_i f(idx_i)`.
    pub fn map_linear<F>(&self, mut f: F) -> Result<Element>
    where
        F: FnMut(&BasisIndex) -> Result<Element>,
    {
        let mut out = Element::zero();
        for (k, &v) in &self.terms {
            let image = f(k)?;
            out = out.checked_add(&image.scale(v))?;
        }
        Ok(out)
    }

    /// `Σ a_i b_j f(idx_i, idy_j)`.
    pub fn map_bilinear<F>(&self, other: &Element, mut f: F) -> Result<Element>
    where
        F: FnMut(&BasisIndex, &BasisIndex) -> Result<Element>,
    {
        let mut out = Element::zero();
        for (k, &v) in &self.terms {
            for (l, &w) in &other.terms {
                out = out.checked_add(&f(k, l)?.scale(v * w))?;
            }
        }
        Ok(out)
    }

    /// `Σ a_i b_j f(idx_i, idy_j)` for scalar-valued `f` (pairings).
    pub fn pair_bilinear<F>(&self, other: &Element, mut f: F) -> i64
    where
        F: FnMut(&BasisIndex, &BasisIndex) -> i64,
    {
        let mut total = 0;
        for (k, &v) in &self.terms {
            for (l, &w) in &other.terms {
                total += v * w * f(k, l);
            }
        }
        total
    }

    /// Every coefficient in `{-1, 0, 1}`.
    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|v| v.abs() <= 1)
    }
}

impl Add for &Element {
    type Output = Element;

    /// Panics on mixed families; use [`Element::checked_add`] to get an error.
    fn add(self, other: &Element) -> Element {
        self.checked_add(other).expect("compatible families")
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, other: Element) -> Element {
        &self + &other
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, other: &Element) -> Element {
        self + &(-other)
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(self, other: Element) -> Element {
        &self - &other
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(-1)
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(-1)
    }
}

impl Mul<&Element> for i64 {
    type Output = Element;

    fn mul(self, e: &Element) -> Element {
        e.scale(self)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::plain(self))
    }
}

/// A finite integer combination of ordered pairs of basis indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<(BasisIndex, BasisIndex), i64>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn pure(a: BasisIndex, b: BasisIndex) -> Self {
        let mut t = Tensor::zero();
        t.add_term(a, b, 1);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &BasisIndex, i64)> {
        self.terms.iter().map(|((a, b), &v)| (a, b, v))
    }

    pub fn coeff(&self, a: &BasisIndex, b: &BasisIndex) -> i64 {
        self.terms
            .get(&(a.clone(), b.clone()))
            .copied()
            .unwrap_or(0)
    }

    pub fn add_term(&mut self, a: BasisIndex, b: BasisIndex, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (a, b);
        let v = self.terms.entry(key.clone()).or_insert(0);
        *v += coeff;
        if *v == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Tensor, c: i64) {
        for ((a, b), &v) in &other.terms {
            self.add_term(a.clone(), b.clone(), c * v);
        }
    }

    /// `Σ c (x ⊗ y)` for elements `x`, `y`.
    pub fn from_elements(x: &Element, y: &Element) -> Tensor {
        let mut t = Tensor::zero();
        for (a, v) in x.terms() {
            for (b, w) in y.terms() {
                t.add_term(a.clone(), b.clone(), v * w);
            }
        }
        t
    }

    /// Applies `f` to the left leg and `g` to the right leg, linearly.
    pub fn map_legs<F, G>(&self, mut f: F, mut g: G) -> Result<Tensor>
    where
        F: FnMut(&BasisIndex) -> Result<Element>,
        G: FnMut(&BasisIndex) -> Result<Element>,
    {
        let mut out = Tensor::zero();
        for ((a, b), &v) in &self.terms {
            let t = Tensor::from_elements(&f(a)?, &g(b)?);
            out.add_assign_scaled(&t, v);
        }
        Ok(out)
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` using a basis-level product `mul`.
    pub fn product<F>(&self, other: &Tensor, mut mul: F) -> Result<Tensor>
    where
        F: FnMut(&BasisIndex, &BasisIndex) -> Result<Element>,
    {
        let mut out = Tensor::zero();
        for ((a, b), &v) in &self.terms {
            for ((c, d), &w) in &other.terms {
                let t = Tensor::from_elements(&mul(a, c)?, &mul(b, d)?);
                out.add_assign_scaled(&t, v * w);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), &v)) in self.terms.iter().enumerate() {
            match (i, v < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if v.abs() != 1 {
                write!(f, "{} ", v.abs())?;
            }
            write!(f, "{a}⊗{b}")?;
        }
        Ok(())
    }
}

/// Dense exact rational matrix used for change-of-basis solves.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        RatMatrix {
            rows,
            cols,
            data: entries
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    /// Gauss-Jordan inverse of a square matrix.
    pub fn inverse(&self) -> Result<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.data.clone();
        let mut inv: Vec<BigRational> = (0..n * n)
            .map(|i| {
                if i / n == i % n {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r * n + col].is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for c in 0..n {
                    a.swap(pivot * n + c, col * n + c);
                    inv.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a[col * n + col].clone();
            for c in 0..n {
                a[col * n + c] = &a[col * n + c] / &p;
                inv[col * n + c] = &inv[col * n + c] / &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for c in 0..n {
                    let da = &factor * &a[col * n + c];
                    let di = &factor * &inv[col * n + c];
                    a[r * n + c] -= da;
                    inv[r * n + c] -= di;
                }
            }
        }
        Ok(RatMatrix {
            rows: n,
            cols: n,
            data: inv,
        })
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        RatMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Entries as `i64`, failing if any entry is fractional or too large.
    pub fn to_integers(&self) -> Result<Vec<i64>> {
        self.data.iter().map(rational_to_i64).collect()
    }
}

fn rational_to_i64(q: &BigRational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::NotIntegral);
    }
    q.to_integer().to_i64().ok_or(Error::NotIntegral)
}

/// Exact coefficients `c` with `Σ c_i targets_i = e`.
///
/// The targets must be linearly independent and `e` must lie in their span;
/// the solution must be integral.
pub fn solve_against_basis(targets: &[Element], e: &Element) -> Result<Vec<i64>> {
    solve_rational(targets, e)?
        .iter()
        .map(rational_to_i64)
        .collect()
}

/// Rational version of [`solve_against_basis`].
pub fn solve_rational(targets: &[Element], e: &Element) -> Result<Vec<BigRational>> {
    let mut coords: Vec<BasisIndex> = targets
        .iter()
        .flat_map(|t| t.terms().map(|(k, _)| k.clone()))
        .chain(e.terms().map(|(k, _)| k.clone()))
        .collect();
    coords.sort();
    coords.dedup();
    let m = coords.len();
    let n = targets.len();
    let pos: std::collections::HashMap<&BasisIndex, usize> =
        coords.iter().enumerate().map(|(i, k)| (k, i)).collect();
    // augmented m x (n+1) system, columns are targets
    let w = n + 1;
    let mut a = vec![BigRational::zero(); m * w];
    for (j, t) in targets.iter().enumerate() {
        for (k, v) in t.terms() {
            a[pos[k] * w + j] = BigRational::from_integer(BigInt::from(v));
        }
    }
    for (k, v) in e.terms() {
        a[pos[k] * w + n] = BigRational::from_integer(BigInt::from(v));
    }
    let mut row = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !a[r * w + col].is_zero()) else {
            return Err(Error::Singular);
        };
        if p != row {
            for c in 0..w {
                a.swap(p * w + c, row * w + c);
            }
        }
        let pv = a[row * w + col].clone();
        for c in col..w {
            a[row * w + c] = &a[row * w + c] / &pv;
        }
        for r in 0..m {
            if r == row || a[r * w + col].is_zero() {
                continue;
            }
            let factor = a[r * w + col].clone();
            for c in col..w {
                let d = &factor * &a[row * w + c];
                a[r * w + c] -= d;
            }
        }
        pivots.push(row);
        row += 1;
    }
    if (row..m).any(|r| !a[r * w + n].is_zero()) {
        return Err(Error::NotSpanned);
    }
    Ok(pivots.iter().map(|&r| a[r * w + n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn f(c: Composition) -> Element {
        Element::basis(Basis::F, c)
    }

    #[test]
    fn arithmetic_prunes_zeros() {
        let e = f(comp![1, 2]) + f(comp![3]).scale(2);
        assert_eq!(&e + &Element::zero(), e);
        assert!((&e - &e).is_zero());
        let two = Element::basis(Basis::M, comp![1]).scale(2);
        assert_eq!(two.coeff_of(Basis::M, &comp![1]), 2);
        assert_eq!(two.len(), 1);
    }

    #[test]
    fn mixing_families_is_an_error() {
        let a = Element::basis(Basis::M, comp![1]);
        let b = Element::basis(Basis::H, comp![1]);
        assert_eq!(
            a.checked_add(&b),
            Err(Error::FamilyMismatch(Family::QSym, Family::NSym))
        );
        assert!(a.checked_add(&Element::zero()).is_ok());
    }

    #[test]
    fn canonical_order() {
        let e = Element::from_terms([
            (BasisIndex::new(Basis::F, comp![2]), 1),
            (BasisIndex::new(Basis::M, comp![1, 1]), 1),
            (BasisIndex::new(Basis::F, comp![1]), 1),
            (BasisIndex::new(Basis::F, comp![1, 1]), 1),
        ]);
        let keys: Vec<String> = e.terms().map(|(k, _)| k.to_string()).collect();
        assert_eq!(keys, ["F[1]", "M[1,1]", "F[1,1]", "F[2]"]);
    }

    #[test]
    fn skew_with_empty_inner_normalizes() {
        let s = SkewShape::straight(comp![2, 1]);
        let idx = BasisIndex::skew(Basis::SkewDualImmaculate, s);
        assert_eq!(idx, BasisIndex::new(Basis::DualImmaculate, comp![2, 1]));
        let t = BasisIndex::skew(
            Basis::DualImmaculate,
            SkewShape::new(comp![2, 1], comp![1]).unwrap(),
        );
        assert_eq!(t.basis(), Basis::SkewDualImmaculate);
        assert_eq!(t.to_string(), "S*[2,1/1]");
    }

    #[test]
    fn linear_extension() {
        let e = f(comp![1]).scale(2) + f(comp![2]).scale(3);
        assert_eq!(
            e.map_linear(|k| Ok(Element::term(k.clone(), 1))).unwrap(),
            e
        );
        let doubled = e.map_linear(|k| Ok(Element::term(k.clone(), 2))).unwrap();
        assert_eq!(doubled, e.scale(2));
    }

    #[test]
    fn solve_trivial_cases() {
        let targets = vec![f(comp![2]), f(comp![1, 1]) + f(comp![2])];
        assert_eq!(
            solve_against_basis(&targets, &targets[0]).unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            solve_against_basis(&targets, &Element::zero()).unwrap(),
            vec![0, 0]
        );
        assert_eq!(
            solve_against_basis(&targets, &f(comp![1, 1])).unwrap(),
            vec![-1, 1]
        );
        assert_eq!(
            solve_against_basis(&targets, &f(comp![3])),
            Err(Error::NotSpanned)
        );
        let singular = vec![f(comp![2]), f(comp![2]).scale(2)];
        assert_eq!(
            solve_against_basis(&singular, &f(comp![2])),
            Err(Error::Singular)
        );
        let halves = vec![f(comp![2]).scale(2)];
        assert_eq!(
            solve_against_basis(&halves, &f(comp![2])),
            Err(Error::NotIntegral)
        );
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let m = RatMatrix::from_i64(3, 3, &[1, 1, 0, 0, 1, 1, 0, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(
            inv.to_integers().unwrap(),
            vec![1, -1, 1, 0, 1, -1, 0, 0, 1]
        );
        let sing = RatMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(sing.inverse(), Err(Error::Singular));
    }
}
