//! Left Pieri rules for the (row-strict) immaculate and dual immaculate bases,
//! and the skew Pieri rule for (row-strict) skew dual immaculate functions.
//!
//! All four left rules share the coefficient [`pieri_coeff`]. The skew rule
//! sums, for `i = 0..=s`, the terms `(-1)^{s-i} c^α_{i,β} 𝔖*_{β/τ}` where
//! `τ` comes from removing a vertical strip of size `s - i` from `γ`. The
//! removal can leave zero rows in `τ`; such a vector is evaluated with the
//! creation operators and re-expanded in the immaculate basis, which may turn
//! one removal into several terms (see [`vertical_strip_column`]).

use serde::Serialize;

use crate::algebra::{Basis, BasisIndex, Element};
use crate::composition::{
    compositions_of, vertical_strip_removals, Composition, IntVector, SkewShape,
};
use crate::error::{Error, Result};
use crate::immaculate::{
    dual_immaculate_f, expand_in_dual_immaculate, expand_in_immaculate, immaculate_of_vector,
    rs_dual_immaculate_f,
};
use crate::qsym;

/// `β ∈ Z_{s,α}`.
pub fn z_membership(beta: &IntVector, s: usize, alpha: &Composition) -> Result<bool> {
    let k = alpha.len();
    if beta.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            found: beta.len(),
        });
    }
    let s = s as i64;
    let b = beta.entries();
    let a: Vec<i64> = alpha.parts().iter().map(|&p| p as i64).collect();

    if beta.sum() != s {
        return Ok(false);
    }
    let mut prefix = 0;
    for &x in &b[..k.saturating_sub(1)] {
        prefix += x;
        if prefix > s {
            return Ok(false);
        }
    }

    if a.iter().zip(b).any(|(x, y)| x - y < 0) {
        return Ok(false);
    }
    if a.iter().zip(b).filter(|(x, y)| *x - *y == 0).count() > 1 {
        return Ok(false);
    }

    let mut prefix = 0;
    for i in 0..k {
        let room = s - prefix;
        let ok = if a[i] > room {
            0 <= b[i] && b[i] <= room
        } else if a[i] < room {
            b[i] < 0
        } else {
            b[i] < 0 || (b[i] == a[i] && b[i + 1..].iter().all(|&x| x == 0))
        };
        if !ok {
            return Ok(false);
        }
        prefix += b[i];
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PieriCase {
    EqualLength,
    LengthDrop,
    Zero,
}

/// The value of `c^γ_{s,α}` together with the data used to decide it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieriCoeffCase {
    pub value: i64,
    pub case: PieriCase,
    /// Only set when `ℓ(γ) = ℓ(α) - 1`.
    pub j: Option<usize>,
    pub r: Option<usize>,
    /// The vector tested for membership in `Z_{s,α}`, when one was formed.
    pub vector: Option<IntVector>,
}

impl PieriCoeffCase {
    fn zero(j: Option<usize>, r: Option<usize>, vector: Option<IntVector>) -> Self {
        PieriCoeffCase {
            value: 0,
            case: PieriCase::Zero,
            j,
            r,
            vector,
        }
    }
}

/// `c^γ_{s,α}` for `|α| - |γ| = s`. The value `s = 0` is admitted.
pub fn pieri_coeff(gamma: &Composition, s: usize, alpha: &Composition) -> Result<PieriCoeffCase> {
    if alpha.size() != gamma.size() + s {
        return Err(Error::SizeMismatch {
            big: alpha.clone(),
            small: gamma.clone(),
            diff: s,
        });
    }
    let k = alpha.len();

    if gamma.len() == k {
        let v = IntVector::difference(alpha, gamma, k);
        if z_membership(&v, s, alpha)? {
            return Ok(PieriCoeffCase {
                value: v.sgn(),
                case: PieriCase::EqualLength,
                j: None,
                r: None,
                vector: Some(v),
            });
        }
        return Ok(PieriCoeffCase::zero(None, None, Some(v)));
    }

    if k == 0 || gamma.len() != k - 1 {
        return Ok(PieriCoeffCase::zero(None, None, None));
    }

    // smallest j with α_i = γ_{i-1} for every j < i ≤ k
    let mut j = k;
    while j > 1 && alpha.part(j) == gamma.part(j - 1) {
        j -= 1;
    }
    let mut r = j;
    while r < k && alpha.part(r) < alpha.part(r + 1) {
        r += 1;
    }

    let prefix = IntVector::difference(&alpha.prefix(j - 1), &gamma.prefix(j - 1), j - 1);
    let mut v = prefix.0.clone();
    v.push(alpha.part(j) as i64);
    v.resize(k, 0);
    let v = IntVector(v);

    if (r - j).is_multiple_of(2) && z_membership(&v, s, alpha)? {
        Ok(PieriCoeffCase {
            value: prefix.sgn(),
            case: PieriCase::LengthDrop,
            j: Some(j),
            r: Some(r),
            vector: Some(v),
        })
    } else {
        Ok(PieriCoeffCase::zero(Some(j), Some(r), Some(v)))
    }
}

/// `F_{(s)} · 𝔖*_γ` expanded in the dual immaculate basis by linear algebra.
pub fn pieri_row_oracle(gamma: &Composition, s: usize) -> Element {
    let prod = qsym::product_f(
        &Element::basis(Basis::F, Composition::row(s)),
        &dual_immaculate_f(&SkewShape::straight(gamma.clone())),
    )
    .expect("F products");
    expand_in_dual_immaculate(&prod).expect("dual immaculate functions form a basis")
}

/// The coefficient of `𝔖*_α` in `F_{(s)} · 𝔖*_γ`, independent of [`pieri_coeff`].
pub fn pieri_coeff_oracle(gamma: &Composition, s: usize, alpha: &Composition) -> i64 {
    pieri_row_oracle(gamma, s).coeff_of(Basis::DualImmaculate, alpha)
}

fn length_ok(beta: &Composition, alpha: &Composition) -> bool {
    beta.len() == alpha.len() || beta.len() == alpha.len() + 1
}

/// `H_m · I_α = Σ c^{tail β}_{β_1 - m, α} I_β`.
pub fn left_pieri_h_immaculate(m: usize, alpha: &Composition) -> Element {
    left_pieri_nsym(m, alpha, Basis::Immaculate)
}

/// `E_m · ℛI_α`, with the same coefficients as [`left_pieri_h_immaculate`].
pub fn left_pieri_e_rs_immaculate(m: usize, alpha: &Composition) -> Element {
    left_pieri_nsym(m, alpha, Basis::RsImmaculate)
}

fn left_pieri_nsym(m: usize, alpha: &Composition, tag: Basis) -> Element {
    let mut out = Element::zero();
    for beta in compositions_of(alpha.size() + m) {
        if beta.part(1) < m || !length_ok(&beta, alpha) {
            continue;
        }
        let tail = beta.tail().expect("β is nonempty");
        let c = pieri_coeff(&tail, beta.part(1) - m, alpha).expect("sizes agree");
        out.add_term(BasisIndex::new(tag, beta), c.value);
    }
    out
}

/// `F_{(s)} · 𝔖*_α = Σ c^α_{s,β} 𝔖*_β`.
pub fn left_pieri_f_dual_immaculate(s: usize, alpha: &Composition) -> Element {
    left_pieri_qsym(s, alpha, Basis::DualImmaculate)
}

/// `F_{(1^s)} · ℛ𝔖*_α = Σ c^α_{s,β} ℛ𝔖*_β`.
pub fn left_pieri_f1s_rs_dual_immaculate(s: usize, alpha: &Composition) -> Element {
    left_pieri_qsym(s, alpha, Basis::RsDualImmaculate)
}

fn left_pieri_qsym(s: usize, alpha: &Composition, tag: Basis) -> Element {
    let mut out = Element::zero();
    for beta in compositions_of(alpha.size() + s) {
        if length_ok(&beta, alpha) {
            let c = pieri_coeff(alpha, s, &beta).expect("sizes agree");
            out.add_term(BasisIndex::new(tag, beta), c.value);
        }
    }
    out
}

/// `F^⊥_{(1^r)} I_γ = Σ_v I_v` over the vectors `v` with `γ_k - v_k ∈ {0, 1}`
/// and `|γ| - |v| = r`, expanded in the immaculate basis. The entries are the
/// coproduct coefficients `b^γ_{(1^r),τ}`.
pub fn vertical_strip_column(gamma: &Composition, r: usize) -> Vec<(Composition, i64)> {
    let mut sum = Element::zero();
    for v in vertical_strip_removals(gamma, r) {
        sum = sum + immaculate_of_vector(&v);
    }
    expand_in_immaculate(&sum)
        .expect("H element")
        .terms()
        .map(|(k, c)| (k.composition().unwrap().clone(), c))
        .collect()
}

/// One `(i, β)` candidate of the skew rule with its coefficient `c^α_{i,β}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieriCandidate {
    pub i: usize,
    pub beta: Composition,
    pub coeff: i64,
}

/// Every `β ⊨ |α| + i` with `ℓ(β) - ℓ(α) ∈ {0, 1}`, for `i = 0..=s`, with
/// `c^α_{i,β}`.
pub fn skew_pieri_candidates(s: usize, alpha: &Composition) -> Vec<PieriCandidate> {
    let mut out = Vec::new();
    for i in 0..=s {
        for beta in compositions_of(alpha.size() + i) {
            if length_ok(&beta, alpha) {
                let coeff = pieri_coeff(alpha, i, &beta).expect("sizes agree").value;
                out.push(PieriCandidate { i, beta, coeff });
            }
        }
    }
    out
}

/// `𝔖*_{(s)} · 𝔖*_{α/γ}` as a signed sum of skew dual immaculate functions.
pub fn skew_pieri(s: usize, shape: &SkewShape) -> Element {
    skew_pieri_tagged(s, shape, Basis::SkewDualImmaculate)
}

/// `ℛ𝔖*_{(s)} · ℛ𝔖*_{α/γ}`, the image of [`skew_pieri`] under `ψ`.
pub fn skew_pieri_rs(s: usize, shape: &SkewShape) -> Element {
    skew_pieri_tagged(s, shape, Basis::SkewRsDualImmaculate)
}

fn skew_pieri_tagged(s: usize, shape: &SkewShape, tag: Basis) -> Element {
    let (alpha, gamma) = (shape.outer(), shape.inner());
    let columns: Vec<Vec<(Composition, i64)>> = (0..=s)
        .map(|i| vertical_strip_column(gamma, s - i))
        .collect();
    let mut out = Element::zero();
    for cand in skew_pieri_candidates(s, alpha) {
        if cand.coeff == 0 {
            continue;
        }
        let sign = if (s - cand.i).is_multiple_of(2) {
            1
        } else {
            -1
        };
        for (tau, b) in &columns[cand.i] {
            if let Ok(sh) = SkewShape::new(cand.beta.clone(), tau.clone()) {
                out.add_term(BasisIndex::skew(tag, sh), sign * b * cand.coeff);
            }
        }
    }
    out
}

/// `F_{(s)} · 𝔖*_{α/γ}` computed directly in the `F` basis.
pub fn skew_pieri_oracle(s: usize, shape: &SkewShape) -> Element {
    qsym::product_f(
        &Element::basis(Basis::F, Composition::row(s)),
        &dual_immaculate_f(shape),
    )
    .expect("F products")
}

/// `F_{(1^s)} · ℛ𝔖*_{α/γ}` computed directly in the `F` basis.
pub fn skew_pieri_rs_oracle(s: usize, shape: &SkewShape) -> Element {
    qsym::product_f(
        &Element::basis(Basis::F, Composition::column(s)),
        &rs_dual_immaculate_f(shape),
    )
    .expect("F products")
}

/// Every coefficient lies in `{-1, 0, 1}`.
pub fn multiplicity_check(e: &Element) -> bool {
    e.is_multiplicity_free()
}
