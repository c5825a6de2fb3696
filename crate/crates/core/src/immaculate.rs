//! Dual immaculate functions (and their row-strict versions) from tableaux,
//! and the immaculate bases of NSym obtained by duality.
//!
//! Per-degree change-of-basis tables are memoized behind a read-mostly lock.
//! [`DegreeTables::build`] computes the same tables without the cache.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::{Basis, BasisIndex, Element, RatMatrix, Tensor};
use crate::composition::{compositions_of, Composition, IntVector, SkewShape};
use crate::convert;
use crate::error::Result;
use crate::nsym;
use crate::pairing::pair;
use crate::qsym;
use crate::tableau::{descent_composition, enumerate_sit};

/// `𝔖*_{α/β} = Σ_T F_{comp(Des T)}` over standard skew immaculate tableaux.
pub fn dual_immaculate_f(shape: &SkewShape) -> Element {
    cached_skew(shape, false)
}

/// `ℛ𝔖*_{α/β} = Σ_T F_{comp(Des(T)^c)}`.
pub fn rs_dual_immaculate_f(shape: &SkewShape) -> Element {
    cached_skew(shape, true)
}

fn compute_skew(shape: &SkewShape, row_strict: bool) -> Element {
    Element::from_terms(enumerate_sit(shape).iter().map(|t| {
        let c = descent_composition(t);
        let c = if row_strict { c.complement() } else { c };
        (BasisIndex::new(Basis::F, c), 1)
    }))
}

type SkewCache = RwLock<HashMap<(SkewShape, bool), Arc<Element>>>;

fn cached_skew(shape: &SkewShape, row_strict: bool) -> Element {
    static CACHE: OnceLock<SkewCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (shape.clone(), row_strict);
    if let Some(e) = cache.read().unwrap().get(&key) {
        return (**e).clone();
    }
    let e = Arc::new(compute_skew(shape, row_strict));
    cache
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| e.clone());
    (*e).clone()
}

/// Change-of-basis data for one degree `n`, indexed by [`compositions_of`]`(n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeTables {
    pub degree: usize,
    pub compositions: Vec<Composition>,
    position: HashMap<Composition, usize>,
    /// Row `α`: `𝔖*_α` in `F`.
    dual_f: Vec<i64>,
    /// Row `β`: `F_β` in `𝔖*`.
    dual_f_inv: Vec<i64>,
    rs_dual_f: Vec<i64>,
    rs_dual_f_inv: Vec<i64>,
    /// Row `β`: `I_β` in `H`.
    immaculate_h: Vec<i64>,
    /// Row `β`: `ℛI_β` in `H`.
    rs_immaculate_h: Vec<i64>,
}

impl DegreeTables {
    pub fn build(n: usize) -> Result<DegreeTables> {
        let comps = compositions_of(n);
        let d = comps.len();
        let position: HashMap<Composition, usize> = comps
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let row_of = |e: &Element| -> Vec<i64> {
            let mut row = vec![0; d];
            for (k, v) in e.terms() {
                row[position[k.composition().unwrap()]] = v;
            }
            row
        };

        let mut dual_f = Vec::with_capacity(d * d);
        let mut rs_dual_f = Vec::with_capacity(d * d);
        for c in &comps {
            let shape = SkewShape::straight(c.clone());
            dual_f.extend(row_of(&compute_skew(&shape, false)));
            rs_dual_f.extend(row_of(&compute_skew(&shape, true)));
        }
        let dual_f_inv = RatMatrix::from_i64(d, d, &dual_f)
            .inverse()?
            .to_integers()?;
        let rs_dual_f_inv = RatMatrix::from_i64(d, d, &rs_dual_f)
            .inverse()?
            .to_integers()?;

        // K[α][γ] = coefficient of M_γ in 𝔖*_α
        let mut k = Vec::with_capacity(d * d);
        for a in 0..d {
            let in_f = Element::from_terms((0..d).map(|b| {
                (
                    BasisIndex::new(Basis::F, comps[b].clone()),
                    dual_f[a * d + b],
                )
            }));
            k.extend(row_of(&qsym::to_m(&in_f)?));
        }
        // I_β = Σ_γ (K^{-1})[γ][β] H_γ
        let k_inv = RatMatrix::from_i64(d, d, &k).inverse()?;
        let immaculate_h = k_inv.transpose().to_integers()?;

        let mut rs_immaculate_h = Vec::with_capacity(d * d);
        for b in 0..d {
            let in_e = Element::from_terms((0..d).map(|g| {
                (
                    BasisIndex::new(Basis::E, comps[g].clone()),
                    immaculate_h[b * d + g],
                )
            }));
            rs_immaculate_h.extend(row_of(&nsym::to_h(&in_e)?));
        }

        Ok(DegreeTables {
            degree: n,
            compositions: comps,
            position,
            dual_f,
            dual_f_inv,
            rs_dual_f,
            rs_dual_f_inv,
            immaculate_h,
            rs_immaculate_h,
        })
    }

    pub fn dimension(&self) -> usize {
        self.compositions.len()
    }

    pub fn position(&self, c: &Composition) -> Option<usize> {
        self.position.get(c).copied()
    }

    fn row(&self, table: &[i64], i: usize, basis: Basis) -> Element {
        let d = self.dimension();
        Element::from_terms((0..d).map(|j| {
            (
                BasisIndex::new(basis, self.compositions[j].clone()),
                table[i * d + j],
            )
        }))
    }

    fn index_of(&self, c: &Composition) -> usize {
        self.position[c]
    }

    pub fn dual_immaculate(&self, c: &Composition) -> Element {
        self.row(&self.dual_f, self.index_of(c), Basis::F)
    }

    pub fn rs_dual_immaculate(&self, c: &Composition) -> Element {
        self.row(&self.rs_dual_f, self.index_of(c), Basis::F)
    }

    pub fn immaculate(&self, c: &Composition) -> Element {
        self.row(&self.immaculate_h, self.index_of(c), Basis::H)
    }

    pub fn rs_immaculate(&self, c: &Composition) -> Element {
        self.row(&self.rs_immaculate_h, self.index_of(c), Basis::H)
    }

    /// `Σ_β x_β F_β` rewritten in `𝔖*` (or `ℛ𝔖*`) for a degree-`n` element.
    fn expand(&self, f_terms: &Element, row_strict: bool, target: Basis) -> Element {
        let d = self.dimension();
        let inv = if row_strict {
            &self.rs_dual_f_inv
        } else {
            &self.dual_f_inv
        };
        let mut coeffs = vec![0i64; d];
        for (k, v) in f_terms.terms() {
            let b = self.index_of(k.composition().unwrap());
            for (a, c) in coeffs.iter_mut().enumerate() {
                *c += v * inv[b * d + a];
            }
        }
        Element::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(a, c)| (BasisIndex::new(target, self.compositions[a].clone()), c)),
        )
    }
}

/// Memoized [`DegreeTables`] for degree `n`.
pub fn degree_tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(DegreeTables::build(n).expect("dual immaculate functions form a basis"));
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

/// `I_β` in the `H` basis for every `β ⊨ n`.
pub fn immaculate_h(n: usize) -> Vec<(Composition, Element)> {
    let t = degree_tables(n);
    t.compositions
        .iter()
        .map(|c| (c.clone(), t.immaculate(c)))
        .collect()
}

/// `ℛI_β = ψ(I_β)` in the `H` basis for every `β ⊨ n`.
pub fn rs_immaculate_h(n: usize) -> Vec<(Composition, Element)> {
    let t = degree_tables(n);
    t.compositions
        .iter()
        .map(|c| (c.clone(), t.rs_immaculate(c)))
        .collect()
}

pub fn immaculate_of(c: &Composition) -> Element {
    degree_tables(c.size()).immaculate(c)
}

pub fn rs_immaculate_of(c: &Composition) -> Element {
    degree_tables(c.size()).rs_immaculate(c)
}

fn expand_qsym(e: &Element, row_strict: bool) -> Result<Element> {
    let target = if row_strict {
        Basis::RsDualImmaculate
    } else {
        Basis::DualImmaculate
    };
    let f = convert::to_f(e)?;
    let mut out = Element::zero();
    for n in 0..=f.max_degree() {
        let part = f.component(n);
        if !part.is_zero() {
            out = out + degree_tables(n).expand(&part, row_strict, target);
        }
    }
    Ok(out)
}

/// The creation operator `B_m(x) = Σ_i (-1)^i H_{m+i} F^⊥_{(1^i)}(x)` on an
/// NSym element, for any integer `m`. Result in `H`.
pub fn creation(m: i64, x: &Element) -> Result<Element> {
    let x = convert::to_h(x)?;
    let mut out = Element::zero();
    for i in 0..=x.max_degree() {
        let Ok(lead) = usize::try_from(m + i as i64) else {
            continue;
        };
        let sign = if i % 2 == 0 { 1 } else { -1 };
        for (k, c) in x.terms() {
            let perp = nsym::column_perp_h(i, k.composition().unwrap());
            let lifted = nsym::product_h(&Element::basis(Basis::H, Composition::row(lead)), &perp)?;
            out.add_assign_scaled(&lifted, sign * c);
        }
    }
    Ok(out)
}

/// `I_v = B_{v_1} ⋯ B_{v_k}(1)` for an integer vector `v`, in the `H` basis.
/// For a composition this is the immaculate function itself.
pub fn immaculate_of_vector(v: &IntVector) -> Element {
    v.entries()
        .iter()
        .rev()
        .try_fold(Element::one(Basis::H), |x, &m| creation(m, &x))
        .expect("H elements")
}

/// Writes a QSym element in the dual immaculate basis.
pub fn expand_in_dual_immaculate(e: &Element) -> Result<Element> {
    expand_qsym(e, false)
}

/// Writes a QSym element in the row-strict dual immaculate basis.
pub fn expand_in_rs_dual_immaculate(e: &Element) -> Result<Element> {
    expand_qsym(e, true)
}

fn expand_nsym(e: &Element, row_strict: bool) -> Result<Element> {
    let h = convert::to_h(e)?;
    let target = if row_strict {
        Basis::RsImmaculate
    } else {
        Basis::Immaculate
    };
    let mut out = Element::zero();
    for n in 0..=h.max_degree() {
        let part = h.component(n);
        if part.is_zero() {
            continue;
        }
        let t = degree_tables(n);
        for c in &t.compositions {
            let dual = if row_strict {
                t.rs_dual_immaculate(c)
            } else {
                t.dual_immaculate(c)
            };
            out.add_term(BasisIndex::new(target, c.clone()), pair(&part, &dual)?);
        }
    }
    Ok(out)
}

/// Writes an NSym element in the immaculate basis (coefficients by pairing
/// against `𝔖*`).
pub fn expand_in_immaculate(e: &Element) -> Result<Element> {
    expand_nsym(e, false)
}

/// Writes an NSym element in the row-strict immaculate basis.
pub fn expand_in_rs_immaculate(e: &Element) -> Result<Element> {
    expand_nsym(e, true)
}

/// `b^γ_{δ,τ} = ⟨I_γ, 𝔖*_δ · 𝔖*_τ⟩`, the coefficient of `I_δ ⊗ I_τ` in `ΔI_γ`.
pub fn immaculate_coproduct_coeff(
    gamma: &Composition,
    delta: &Composition,
    tau: &Composition,
) -> Result<i64> {
    if delta.size() + tau.size() != gamma.size() {
        return Ok(0);
    }
    let prod = qsym::product_m(
        &dual_immaculate_f(&SkewShape::straight(delta.clone())),
        &dual_immaculate_f(&SkewShape::straight(tau.clone())),
    )?;
    pair(&immaculate_of(gamma), &prod)
}

/// `ΔI_γ` in `I ⊗ I`, by duality with products of dual immaculate functions.
pub fn immaculate_coproduct(gamma: &Composition) -> Result<Tensor> {
    let n = gamma.size();
    let i_gamma = immaculate_of(gamma);
    let mut out = Tensor::zero();
    for k in 0..=n {
        for delta in compositions_of(k) {
            let left = dual_immaculate_f(&SkewShape::straight(delta.clone()));
            for tau in compositions_of(n - k) {
                let right = dual_immaculate_f(&SkewShape::straight(tau.clone()));
                let b = pair(&i_gamma, &qsym::product_m(&left, &right)?)?;
                out.add_term(
                    BasisIndex::new(Basis::Immaculate, delta.clone()),
                    BasisIndex::new(Basis::Immaculate, tau),
                    b,
                );
            }
        }
    }
    Ok(out)
}
