//! Noncommutative symmetric functions on the complete homogeneous (`H`) and
//! elementary (`E`) bases.

use crate::algebra::{Basis, BasisIndex, Element, Tensor};
use crate::composition::{compositions_of, Composition};
use crate::error::{Error, Result};

fn h(c: Composition) -> BasisIndex {
    BasisIndex::new(Basis::H, c)
}

fn concat_terms(a: &Element, b: &Element, basis: Basis) -> Element {
    let mut out = Element::zero();
    for (x, v) in a.terms() {
        for (y, w) in b.terms() {
            let c = x.composition().unwrap().concat(y.composition().unwrap());
            out.add_term(BasisIndex::new(basis, c), v * w);
        }
    }
    out
}

/// `H_α · H_β = H_{α·β}`.
pub fn h_product(a: &Composition, b: &Composition) -> Element {
    Element::basis(Basis::H, a.concat(b))
}

/// `E_α · E_β = E_{α·β}`.
pub fn e_product(a: &Composition, b: &Composition) -> Element {
    Element::basis(Basis::E, a.concat(b))
}

/// `Σ_{β ⊨ n} (-1)^{n-ℓ(β)} X_β`, the expansion of one generator in the other basis.
fn generator_expansion(n: usize, target: Basis) -> Element {
    Element::from_terms(compositions_of(n).into_iter().map(|b| {
        let sign = if (n - b.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        (BasisIndex::new(target, b), sign)
    }))
}

fn multiplicative(a: &Composition, target: Basis) -> Element {
    a.parts().iter().fold(Element::one(target), |acc, &p| {
        concat_terms(&acc, &generator_expansion(p, target), target)
    })
}

/// `E_α` in the `H` basis.
pub fn e_to_h(a: &Composition) -> Element {
    multiplicative(a, Basis::H)
}

/// `H_α` in the `E` basis.
pub fn h_to_e(a: &Composition) -> Element {
    multiplicative(a, Basis::E)
}

/// Rewrites an element with `H`/`E` terms in the `H` basis.
pub fn to_h(e: &Element) -> Result<Element> {
    e.map_linear(|k| match (k.basis(), k.composition()) {
        (Basis::H, Some(_)) => Ok(Element::term(k.clone(), 1)),
        (Basis::E, Some(c)) => Ok(e_to_h(c)),
        _ => Err(Error::Unsupported(format!("{k} is not an H or E index"))),
    })
}

/// Rewrites an element with `H`/`E` terms in the `E` basis.
pub fn to_e(e: &Element) -> Result<Element> {
    e.map_linear(|k| match (k.basis(), k.composition()) {
        (Basis::E, Some(_)) => Ok(Element::term(k.clone(), 1)),
        (Basis::H, Some(c)) => Ok(h_to_e(c)),
        _ => Err(Error::Unsupported(format!("{k} is not an H or E index"))),
    })
}

/// Product of `H`/`E` elements, in the `H` basis.
pub fn product_h(a: &Element, b: &Element) -> Result<Element> {
    Ok(concat_terms(&to_h(a)?, &to_h(b)?, Basis::H))
}

/// `Δ H_α = Π_i Σ_{j=0}^{α_i} H_j ⊗ H_{α_i - j}`.
pub fn coproduct_h(a: &Composition) -> Tensor {
    let mul = |x: &BasisIndex, y: &BasisIndex| -> Result<Element> {
        Ok(h_product(
            x.composition().unwrap(),
            y.composition().unwrap(),
        ))
    };
    a.parts().iter().fold(
        Tensor::pure(h(Composition::empty()), h(Composition::empty())),
        |acc, &n| {
            let mut gen = Tensor::zero();
            for j in 0..=n {
                gen.add_term(h(Composition::row(j)), h(Composition::row(n - j)), 1);
            }
            acc.product(&gen, mul).expect("H products")
        },
    )
}

/// `F^⊥_{(1^i)} H_α`: the sum of `H_{α - e_S}` over `i`-subsets `S` of rows,
/// zero parts dropped.
pub fn column_perp_h(i: usize, a: &Composition) -> Element {
    let k = a.len();
    let mut out = Element::zero();
    if i > k {
        return out;
    }
    for mask in 0u64..1 << k {
        if mask.count_ones() as usize != i {
            continue;
        }
        let parts: Vec<usize> = a
            .parts()
            .iter()
            .enumerate()
            .map(|(j, &p)| p - (mask >> j & 1) as usize)
            .filter(|&p| p > 0)
            .collect();
        out.add_term(h(Composition::new(parts).expect("zeros removed")), 1);
    }
    out
}

/// `S(H_n)` from `Σ_{i=0}^{n} S(H_i) H_{n-i} = 0` for `n ≥ 1`.
fn antipode_generator(n: usize, memo: &mut Vec<Element>) -> Element {
    while memo.len() <= n {
        let k = memo.len();
        if k == 0 {
            memo.push(Element::one(Basis::H));
            continue;
        }
        let mut acc = Element::zero();
        for (i, s) in memo.iter().enumerate() {
            let rhs = Element::basis(Basis::H, Composition::row(k - i));
            acc = acc - concat_terms(s, &rhs, Basis::H);
        }
        memo.push(acc);
    }
    memo[n].clone()
}

/// `S(H_α) = S(H_{α_k}) ··· S(H_{α_1})`, in the `H` basis.
pub fn antipode_h(a: &Composition) -> Element {
    let mut memo = Vec::new();
    a.parts()
        .iter()
        .rev()
        .fold(Element::one(Basis::H), |acc, &p| {
            concat_terms(&acc, &antipode_generator(p, &mut memo), Basis::H)
        })
}

/// `ψ`: swaps `E_α` and `H_α`.
pub fn psi_n(e: &Element) -> Result<Element> {
    e.map_linear(|k| match (k.basis(), k.composition()) {
        (Basis::H, Some(c)) => Ok(Element::basis(Basis::E, c.clone())),
        (Basis::E, Some(c)) => Ok(Element::basis(Basis::H, c.clone())),
        _ => Err(Error::Unsupported(format!(
            "ψ on {k} needs an H or E index"
        ))),
    })
}

pub fn counit(e: &Element) -> i64 {
    e.constant_term()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn hh(c: Composition) -> Element {
        Element::basis(Basis::H, c)
    }

    #[test]
    fn products_concatenate() {
        assert_eq!(h_product(&comp![1, 2], &comp![1]), hh(comp![1, 2, 1]));
        assert_eq!(h_product(&comp![], &comp![3]), hh(comp![3]));
        assert_eq!(
            e_product(&comp![2], &comp![2]),
            Element::basis(Basis::E, comp![2, 2])
        );
    }

    #[test]
    fn e_and_h() {
        assert_eq!(e_to_h(&comp![1]), hh(comp![1]));
        assert_eq!(e_to_h(&comp![2]), hh(comp![1, 1]) - hh(comp![2]));
        for n in 0..=6 {
            for c in compositions_of(n) {
                assert_eq!(
                    to_e(&e_to_h(&c)).unwrap(),
                    Element::basis(Basis::E, c.clone())
                );
                assert_eq!(to_h(&h_to_e(&c)).unwrap(), hh(c));
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let mut one = Tensor::zero();
        one.add_term(h(comp![]), h(comp![1]), 1);
        one.add_term(h(comp![1]), h(comp![]), 1);
        assert_eq!(coproduct_h(&comp![1]), one);
        assert_eq!(coproduct_h(&comp![]), Tensor::pure(h(comp![]), h(comp![])));
        let mut two = Tensor::zero();
        two.add_term(h(comp![]), h(comp![2]), 1);
        two.add_term(h(comp![1]), h(comp![1]), 1);
        two.add_term(h(comp![2]), h(comp![]), 1);
        assert_eq!(coproduct_h(&comp![2]), two);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_h(&comp![]), hh(comp![]));
        assert_eq!(antipode_h(&comp![1]), -hh(comp![1]));
        assert_eq!(antipode_h(&comp![2]), hh(comp![1, 1]) - hh(comp![2]));
        // S(H_n) = (-1)^n E_n
        for n in 1..=5 {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(antipode_h(&comp![n]), e_to_h(&comp![n]).scale(sign));
        }
    }

    #[test]
    fn column_perp() {
        assert_eq!(
            column_perp_h(1, &comp![1, 2]),
            hh(comp![2]) + hh(comp![1, 1])
        );
        assert_eq!(column_perp_h(2, &comp![1, 2]), hh(comp![1]));
        assert!(column_perp_h(3, &comp![1, 2]).is_zero());
        assert_eq!(column_perp_h(0, &comp![3]), hh(comp![3]));
    }

    #[test]
    fn psi_swaps() {
        assert_eq!(
            psi_n(&Element::basis(Basis::E, comp![3, 1])).unwrap(),
            hh(comp![3, 1])
        );
        let x = hh(comp![2, 1]).scale(3) + hh(comp![1]);
        assert_eq!(psi_n(&psi_n(&x).unwrap()).unwrap(), x);
    }
}
