//! The QSym/NSym duality pairing, Hopf structure maps on arbitrary elements,
//! the four harpoon actions, and executable forms of the right-action lemmas.
//!
//! The actions are symmetric in the two families. For `x` in one algebra and
//! `y` in the other, with `Δy = Σ y_1 ⊗ y_2`:
//!
//! - `x ⇀ y = Σ ⟨x, y_2⟩ y_1` (contract the right leg),
//! - `x ↽ y = Σ ⟨x, y_1⟩ y_2` (contract the left leg).

use rand::Rng;

use crate::algebra::{Basis, BasisIndex, Element, Family, Tensor};
use crate::composition::compositions_of;
use crate::convert::{self, canonical};
use crate::error::{Error, Result};
use crate::{nsym, qsym};

/// `⟨M_α, H_β⟩ = δ_{αβ}`, extended bilinearly; argument order is free.
pub fn pair(x: &Element, y: &Element) -> Result<i64> {
    let (q, n) = match (x.family(), y.family()) {
        (None, _) | (_, None) => return Ok(0),
        (Some(Family::QSym), Some(Family::NSym)) => (x, y),
        (Some(Family::NSym), Some(Family::QSym)) => (y, x),
        (Some(a), Some(b)) => return Err(Error::FamilyMismatch(a, b)),
    };
    let m = convert::to_m(q)?;
    let h = convert::to_h(n)?;
    Ok(m.terms()
        .map(|(k, v)| v * h.coeff_of(Basis::H, k.composition().unwrap()))
        .sum())
}

/// Pairing of a tensor with a pure tensor `a ⊗ b` of opposite-family elements.
pub fn pair_tensor(t: &Tensor, a: &Element, b: &Element) -> Result<i64> {
    let mut total = 0;
    for (x, y, v) in t.terms() {
        let px = pair(&Element::term(x.clone(), 1), a)?;
        if px == 0 {
            continue;
        }
        total += v * px * pair(&Element::term(y.clone(), 1), b)?;
    }
    Ok(total)
}

/// Product within one family: QSym results in `F`, NSym results in `H`.
pub fn product(a: &Element, b: &Element) -> Result<Element> {
    match (a.family(), b.family()) {
        (None, _) | (_, None) => Ok(Element::zero()),
        (Some(x), Some(y)) if x != y => Err(Error::FamilyMismatch(x, y)),
        (Some(Family::QSym), _) => qsym::product_f(&convert::to_f(a)?, &convert::to_f(b)?),
        (Some(Family::NSym), _) => nsym::product_h(a, &convert::to_h(b)?)
            .or_else(|_| nsym::product_h(&convert::to_h(a)?, &convert::to_h(b)?)),
    }
}

/// Coproduct: QSym in `M ⊗ M`, NSym in `H ⊗ H`.
pub fn coproduct(e: &Element) -> Result<Tensor> {
    let mut out = Tensor::zero();
    match e.family() {
        None => {}
        Some(Family::QSym) => {
            for (k, v) in convert::to_m(e)?.terms() {
                out.add_assign_scaled(&qsym::coproduct_m(k.composition().unwrap()), v);
            }
        }
        Some(Family::NSym) => {
            for (k, v) in convert::to_h(e)?.terms() {
                out.add_assign_scaled(&nsym::coproduct_h(k.composition().unwrap()), v);
            }
        }
    }
    Ok(out)
}

/// Antipode: QSym in `F`, NSym in `H`.
pub fn antipode(e: &Element) -> Result<Element> {
    match e.family() {
        None => Ok(Element::zero()),
        Some(Family::QSym) => {
            convert::to_f(e)?.map_linear(|k| Ok(qsym::antipode_f(k.composition().unwrap())))
        }
        Some(Family::NSym) => {
            convert::to_h(e)?.map_linear(|k| Ok(nsym::antipode_h(k.composition().unwrap())))
        }
    }
}

pub fn counit(e: &Element) -> Result<i64> {
    Ok(canonical(e)?.constant_term())
}

/// The unit of the family `f`.
pub fn unit(f: Family) -> Element {
    match f {
        Family::QSym => Element::one(Basis::F),
        Family::NSym => Element::one(Basis::H),
    }
}

/// Contracts `x` against one leg of `Δy`; `left_leg` picks `y_1`.
fn contract(x: &Element, y: &Element, left_leg: bool) -> Result<Element> {
    let (Some(fx), Some(fy)) = (x.family(), y.family()) else {
        return Ok(Element::zero());
    };
    if fx == fy {
        return Err(Error::FamilyMismatch(fx, fy));
    }
    // x in the dual of the basis y's coproduct is written in
    let x_dual = match fy {
        Family::QSym => convert::to_h(x)?,
        Family::NSym => convert::to_m(x)?,
    };
    let dual_tag = match fy {
        Family::QSym => Basis::H,
        Family::NSym => Basis::M,
    };
    let mut out = Element::zero();
    for (a, b, v) in coproduct(y)?.terms() {
        let (contracted, kept) = if left_leg { (a, b) } else { (b, a) };
        let p = x_dual.coeff_of(dual_tag, contracted.composition().unwrap());
        if p != 0 {
            out.add_term(kept.clone(), v * p);
        }
    }
    Ok(out)
}

/// `x ⇀ y = Σ ⟨x, y_2⟩ y_1`.
pub fn left_harpoon(x: &Element, y: &Element) -> Result<Element> {
    contract(x, y, false)
}

/// `x ↽ y = Σ ⟨x, y_1⟩ y_2`.
pub fn right_harpoon(x: &Element, y: &Element) -> Result<Element> {
    contract(x, y, true)
}

fn expect_family(e: &Element, f: Family) -> Result<()> {
    match e.family() {
        Some(g) if g != f => Err(Error::WrongFamily { expected: f }),
        _ => Ok(()),
    }
}

/// `h ⇀ a = Σ ⟨h, a_2⟩ a_1` for `h ∈ NSym`, `a ∈ QSym`.
pub fn left_harpoon_on_a(h: &Element, a: &Element) -> Result<Element> {
    expect_family(h, Family::NSym)?;
    expect_family(a, Family::QSym)?;
    left_harpoon(h, a)
}

/// `h ↽ a = Σ ⟨h, a_1⟩ a_2` for `h ∈ NSym`, `a ∈ QSym`.
pub fn right_harpoon_on_a(h: &Element, a: &Element) -> Result<Element> {
    expect_family(h, Family::NSym)?;
    expect_family(a, Family::QSym)?;
    right_harpoon(h, a)
}

/// `a ↽ h = Σ ⟨h_1, a⟩ h_2` for `a ∈ QSym`, `h ∈ NSym`.
pub fn right_harpoon_on_h(a: &Element, h: &Element) -> Result<Element> {
    expect_family(a, Family::QSym)?;
    expect_family(h, Family::NSym)?;
    right_harpoon(a, h)
}

/// `a ⇀ h = Σ ⟨h_2, a⟩ h_1` for `a ∈ QSym`, `h ∈ NSym`.
pub fn left_harpoon_on_h(a: &Element, h: &Element) -> Result<Element> {
    expect_family(a, Family::QSym)?;
    expect_family(h, Family::NSym)?;
    left_harpoon(a, h)
}

fn same(a: &Element, b: &Element) -> Result<bool> {
    Ok(canonical(a)? == canonical(b)?)
}

fn leg(idx: &BasisIndex) -> Element {
    Element::term(idx.clone(), 1)
}

/// `Σ S(h_1) h_2 = ε(h) 1 = Σ h_1 S(h_2)`.
pub fn check_antipode_identity(h: &Element) -> Result<bool> {
    let Some(fam) = h.family() else {
        return Ok(true);
    };
    let mut left = Element::zero();
    let mut right = Element::zero();
    for (a, b, v) in coproduct(h)?.terms() {
        left = left + product(&antipode(&leg(a))?, &leg(b))?.scale(v);
        right = right + product(&leg(a), &antipode(&leg(b))?)?.scale(v);
    }
    let target = unit(fam).scale(counit(h)?);
    Ok(same(&left, &target)? && same(&right, &target)?)
}

/// `⟨g, f ⇀ a⟩ = ⟨gf, a⟩`, `⟨g, f ↽ a⟩ = ⟨fg, a⟩`,
/// `⟨a ⇀ f, b⟩ = ⟨f, ba⟩` and `⟨a ↽ f, b⟩ = ⟨f, ab⟩`,
/// for `f, g` in one family and `a, b` in the other.
pub fn check_adjointness(f: &Element, g: &Element, a: &Element, b: &Element) -> Result<bool> {
    let gf = product(g, f)?;
    let fg = product(f, g)?;
    let ab = product(a, b)?;
    let ba = product(b, a)?;
    Ok(pair(g, &left_harpoon(f, a)?)? == pair(&gf, a)?
        && pair(g, &right_harpoon(f, a)?)? == pair(&fg, a)?
        && pair(&left_harpoon(a, f)?, b)? == pair(f, &ba)?
        && pair(&right_harpoon(a, f)?, b)? == pair(f, &ab)?)
}

/// `f ↽ (a·b) = Σ (f_1 ↽ a)·(f_2 ↽ b)`.
pub fn check_lemma_rightactprod(f: &Element, a: &Element, b: &Element) -> Result<bool> {
    let lhs = right_harpoon(f, &product(a, b)?)?;
    let mut rhs = Element::zero();
    for (f1, f2, v) in coproduct(f)?.terms() {
        let x = right_harpoon(&leg(f1), a)?;
        let y = right_harpoon(&leg(f2), b)?;
        rhs = rhs + product(&x, &y)?.scale(v);
    }
    same(&lhs, &rhs)
}

/// `(ε(h)·1) ↽ a = ε(h)·a`.
pub fn check_lemma_id(h: &Element, a: &Element) -> Result<bool> {
    let Some(fam) = h.family() else {
        return Ok(true);
    };
    let eps = counit(h)?;
    let lhs = right_harpoon(&unit(fam).scale(eps), a)?;
    same(&lhs, &a.scale(eps))
}

/// `a·(h ↽ b) = Σ h_1 ↽ ((S(h_2) ↽ a)·b)`. Needs `Σ h_1 ⊗ h_2` symmetric:
/// it holds for NSym and for `F_(s)`, not for `F_(2,1)`. See
/// [`check_product_identity`] for the form that always holds.
pub fn check_lemma_product(h: &Element, a: &Element, b: &Element) -> Result<bool> {
    let lhs = product(a, &right_harpoon(h, b)?)?;
    let mut rhs = Element::zero();
    for (h1, h2, v) in coproduct(h)?.terms() {
        let inner = product(&right_harpoon(&antipode(&leg(h2))?, a)?, b)?;
        rhs = rhs + right_harpoon(&leg(h1), &inner)?.scale(v);
    }
    same(&lhs, &rhs)
}

/// `h·(a ↽ g) = Σ (S(h_2) ↽ a) ↽ (h_1·g)`, with the same restriction as
/// [`check_lemma_product`]; [`check_raction_identity`] is the general form.
pub fn check_lemma_raction(h: &Element, g: &Element, a: &Element) -> Result<bool> {
    let (lhs, rhs) = lemma_raction_sides(h, g, a)?;
    same(&lhs, &rhs)
}

/// Both sides of the `h·(a ↽ g)` identity.
pub fn lemma_raction_sides(h: &Element, g: &Element, a: &Element) -> Result<(Element, Element)> {
    let lhs = product(h, &right_harpoon(a, g)?)?;
    let mut rhs = Element::zero();
    for (h1, h2, v) in coproduct(h)?.terms() {
        let acted = right_harpoon(&antipode(&leg(h2))?, a)?;
        rhs = rhs + right_harpoon(&acted, &product(&leg(h1), g)?)?.scale(v);
    }
    Ok((lhs, rhs))
}

/// `a·(h ↽ b) = Σ h_2 ↽ ((S(h_1) ↽ a)·b)`, valid for every `h`: `↽` is a
/// right action, `k ↽ (g ↽ a) = (g·k) ↽ a`, so the antipode has to sit on
/// the first leg.
pub fn check_product_identity(h: &Element, a: &Element, b: &Element) -> Result<bool> {
    let lhs = product(a, &right_harpoon(h, b)?)?;
    let mut rhs = Element::zero();
    for (h1, h2, v) in coproduct(h)?.terms() {
        let inner = product(&right_harpoon(&antipode(&leg(h1))?, a)?, b)?;
        rhs = rhs + right_harpoon(&leg(h2), &inner)?.scale(v);
    }
    same(&lhs, &rhs)
}

/// `h·(a ↽ g) = Σ (S(h_1) ↽ a) ↽ (h_2·g)`, valid for every `h`.
pub fn check_raction_identity(h: &Element, g: &Element, a: &Element) -> Result<bool> {
    let lhs = product(h, &right_harpoon(a, g)?)?;
    let mut rhs = Element::zero();
    for (h1, h2, v) in coproduct(h)?.terms() {
        let acted = right_harpoon(&antipode(&leg(h1))?, a)?;
        rhs = rhs + right_harpoon(&acted, &product(&leg(h2), g)?)?.scale(v);
    }
    same(&lhs, &rhs)
}

/// A random element with up to three terms of degree `≤ max_degree`, written in
/// a random mix of the two classical bases of `family`.
pub fn random_element<R: Rng>(rng: &mut R, family: Family, max_degree: usize) -> Element {
    let bases = match family {
        Family::QSym => [Basis::M, Basis::F],
        Family::NSym => [Basis::H, Basis::E],
    };
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let n = rng.gen_range(0..=max_degree);
        let comps = compositions_of(n);
        let c = comps[rng.gen_range(0..comps.len())].clone();
        let coeff = [-2, -1, 1, 2, 3][rng.gen_range(0..5)];
        e.add_term(BasisIndex::new(bases[rng.gen_range(0..2)], c), coeff);
    }
    e
}

/// The family opposite to `f`.
pub fn dual_family(f: Family) -> Family {
    match f {
        Family::QSym => Family::NSym,
        Family::NSym => Family::QSym,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;
    use crate::composition::{Composition, SkewShape};
    use crate::immaculate::{dual_immaculate_f, immaculate_of};

    fn m(c: Composition) -> Element {
        Element::basis(Basis::M, c)
    }

    fn h(c: Composition) -> Element {
        Element::basis(Basis::H, c)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pair(&h(comp![1, 2]), &m(comp![1, 2])).unwrap(), 1);
        assert_eq!(pair(&h(comp![2, 1]), &m(comp![1, 2])).unwrap(), 0);
        assert_eq!(
            pair(&Element::basis(Basis::F, comp![1, 1]), &h(comp![1, 1])).unwrap(),
            1
        );
        assert!(pair(&m(comp![1]), &m(comp![1])).is_err());
    }

    #[test]
    fn harpoon_examples() {
        let a = m(comp![2, 1]) + m(comp![1]).scale(3);
        let one = Element::one(Basis::H);
        assert_eq!(
            canonical(&left_harpoon_on_a(&one, &a).unwrap()).unwrap(),
            canonical(&a).unwrap()
        );
        assert_eq!(
            canonical(&right_harpoon_on_a(&one, &a).unwrap()).unwrap(),
            canonical(&a).unwrap()
        );
        assert_eq!(
            left_harpoon_on_a(&h(comp![1]), &m(comp![1])).unwrap(),
            m(comp![])
        );
        assert!(right_harpoon_on_a(&h(comp![3]), &m(comp![2]))
            .unwrap()
            .is_zero());
        assert_eq!(
            right_harpoon_on_h(&m(comp![]), &h(comp![1, 2])).unwrap(),
            h(comp![1, 2])
        );
        assert_eq!(
            right_harpoon_on_h(&m(comp![1]), &h(comp![1, 2])).unwrap(),
            h(comp![2]) + h(comp![1, 1])
        );
        assert!(right_harpoon_on_a(&m(comp![1]), &m(comp![1])).is_err());
    }

    #[test]
    fn immaculate_contraction_gives_skew() {
        let alpha = comp![2, 1, 2];
        let gamma = comp![1, 1];
        let s = Element::basis(Basis::DualImmaculate, alpha.clone());
        let lhs = right_harpoon_on_a(&immaculate_of(&gamma), &s).unwrap();
        let skew = dual_immaculate_f(&SkewShape::new(alpha, gamma).unwrap());
        assert_eq!(convert::to_f(&lhs).unwrap(), skew);
    }

    #[test]
    fn antipode_identity_small() {
        for c in compositions_of(4) {
            assert!(check_antipode_identity(&Element::basis(Basis::F, c.clone())).unwrap());
            assert!(check_antipode_identity(&h(c)).unwrap());
        }
    }
}
