//! Quasisymmetric functions on the monomial (`M`) and fundamental (`F`) bases.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Basis, BasisIndex, Element, Tensor};
use crate::composition::Composition;
use crate::error::{Error, Result};

fn m(c: Composition) -> BasisIndex {
    BasisIndex::new(Basis::M, c)
}

fn f(c: Composition) -> BasisIndex {
    BasisIndex::new(Basis::F, c)
}

/// Overlapping (quasi-)shuffles of `a` and `b`, with multiplicity.
fn quasi_shuffles(a: &[usize], b: &[usize], out: &mut HashMap<Vec<usize>, i64>) {
    fn go(a: &[usize], b: &[usize], prefix: &mut Vec<usize>, out: &mut HashMap<Vec<usize>, i64>) {
        match (a.split_first(), b.split_first()) {
            (None, None) => *out.entry(prefix.clone()).or_insert(0) += 1,
            (Some((&x, ra)), None) | (None, Some((&x, ra))) => {
                let len = prefix.len();
                prefix.push(x);
                prefix.extend_from_slice(ra);
                *out.entry(prefix.clone()).or_insert(0) += 1;
                prefix.truncate(len);
            }
            (Some((&x, ra)), Some((&y, rb))) => {
                prefix.push(x);
                go(ra, b, prefix, out);
                prefix.pop();
                prefix.push(y);
                go(a, rb, prefix, out);
                prefix.pop();
                prefix.push(x + y);
                go(ra, rb, prefix, out);
                prefix.pop();
            }
        }
    }
    go(a, b, &mut Vec::new(), out);
}

/// `M_α · M_β` as a sum of quasi-shuffles.
pub fn monomial_product(a: &Composition, b: &Composition) -> Element {
    let mut acc = HashMap::new();
    quasi_shuffles(a.parts(), b.parts(), &mut acc);
    Element::from_terms(
        acc.into_iter()
            .map(|(parts, c)| (m(Composition::new(parts).unwrap()), c)),
    )
}

/// `F_α = Σ_{β refining α} M_β`.
pub fn f_to_m(a: &Composition) -> Element {
    Element::from_terms(a.refinements().into_iter().map(|b| (m(b), 1)))
}

/// `M_α = Σ_{β refining α} (-1)^{ℓ(β)-ℓ(α)} F_β`.
pub fn m_to_f(a: &Composition) -> Element {
    Element::from_terms(a.refinements().into_iter().map(|b| {
        let sign = if (b.len() - a.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        (f(b), sign)
    }))
}

/// Rewrites an element whose terms are all `M` or `F` in the `M` basis.
pub fn to_m(e: &Element) -> Result<Element> {
    e.map_linear(|k| match (k.basis(), k.composition()) {
        (Basis::M, Some(_)) => Ok(Element::term(k.clone(), 1)),
        (Basis::F, Some(c)) => Ok(f_to_m(c)),
        _ => Err(Error::Unsupported(format!("{k} is not an M or F index"))),
    })
}

/// Rewrites an element whose terms are all `M` or `F` in the `F` basis.
pub fn to_f(e: &Element) -> Result<Element> {
    e.map_linear(|k| match (k.basis(), k.composition()) {
        (Basis::F, Some(_)) => Ok(Element::term(k.clone(), 1)),
        (Basis::M, Some(c)) => Ok(m_to_f(c)),
        _ => Err(Error::Unsupported(format!("{k} is not an M or F index"))),
    })
}

/// Product of two `M`/`F` elements, returned in the `M` basis.
pub fn product_m(a: &Element, b: &Element) -> Result<Element> {
    to_m(a)?.map_bilinear(&to_m(b)?, |x, y| {
        Ok(monomial_product(
            x.composition().unwrap(),
            y.composition().unwrap(),
        ))
    })
}

/// `F_α · F_β` in the `F` basis, computed through the monomial basis.
pub fn fundamental_product(a: &Composition, b: &Composition) -> Element {
    let prod = f_to_m(a)
        .map_bilinear(&f_to_m(b), |x, y| {
            Ok(monomial_product(
                x.composition().unwrap(),
                y.composition().unwrap(),
            ))
        })
        .expect("M products stay in QSym");
    to_f(&prod).expect("M terms convert")
}

/// Product of two `M`/`F` elements, returned in the `F` basis.
pub fn product_f(a: &Element, b: &Element) -> Result<Element> {
    to_f(&product_m(a, b)?)
}

/// Deconcatenation `Δ M_α = Σ_i M_{(α_1..α_i)} ⊗ M_{(α_{i+1}..α_k)}`.
pub fn coproduct_m(a: &Composition) -> Tensor {
    let parts = a.parts();
    let mut t = Tensor::zero();
    for i in 0..=parts.len() {
        t.add_term(
            m(Composition::new(parts[..i].to_vec()).unwrap()),
            m(Composition::new(parts[i..].to_vec()).unwrap()),
            1,
        );
    }
    t
}

/// `Δ F_α = Σ F_β ⊗ F_γ` over `β·γ = α` or `β ⊙ γ = α`.
pub fn coproduct_f(a: &Composition) -> Tensor {
    let parts = a.parts();
    let mut t = Tensor::zero();
    for i in 0..=parts.len() {
        let left = Composition::new(parts[..i].to_vec()).unwrap();
        let right = Composition::new(parts[i..].to_vec()).unwrap();
        t.add_term(f(left), f(right), 1);
    }
    // near-concatenations split a single part p = x + y with x, y ≥ 1
    for (i, &p) in parts.iter().enumerate() {
        for x in 1..p {
            let mut left = parts[..i].to_vec();
            left.push(x);
            let mut right = vec![p - x];
            right.extend_from_slice(&parts[i + 1..]);
            t.add_term(
                f(Composition::new(left).unwrap()),
                f(Composition::new(right).unwrap()),
                1,
            );
        }
    }
    t
}

/// `S(F_α) = (-1)^{|α|} F_{α^t}`, with `α^t` the reverse of the complement.
pub fn antipode_f(a: &Composition) -> Element {
    let sign = if a.size().is_multiple_of(2) { 1 } else { -1 };
    Element::term(f(a.transpose()), sign)
}

/// `ψ(F_α) = F_{comp(set(α)^c)}`.
pub fn psi_f(a: &Composition) -> Element {
    Element::basis(Basis::F, a.complement())
}

/// `ψ` on an element written in `M`/`F` terms; the result is in `F`.
pub fn psi(e: &Element) -> Result<Element> {
    to_f(e)?.map_linear(|k| Ok(psi_f(k.composition().unwrap())))
}

/// Counit: the constant term.
pub fn counit(e: &Element) -> i64 {
    e.constant_term()
}

/// A polynomial in commuting variables `x_1..x_m`, keyed by exponent vectors.
pub type Polynomial = BTreeMap<Vec<u32>, i64>;

/// Evaluates an `M`/`F` element with `x_{m+1} = x_{m+2} = ... = 0`.
pub fn evaluate_truncated(e: &Element, vars: usize) -> Result<Polynomial> {
    let mut out = Polynomial::new();
    for (k, c) in e.terms() {
        let comp = k
            .composition()
            .ok_or_else(|| Error::Unsupported(format!("{k} cannot be evaluated")))?;
        let poly = match k.basis() {
            Basis::M => eval_monomial(comp, vars),
            Basis::F => eval_fundamental(comp, vars),
            _ => return Err(Error::Unsupported(format!("{k} cannot be evaluated"))),
        };
        add_poly(&mut out, &poly, c);
    }
    Ok(out)
}

fn add_poly(acc: &mut Polynomial, p: &Polynomial, c: i64) {
    for (mono, &v) in p {
        let e = acc.entry(mono.clone()).or_insert(0);
        *e += c * v;
        if *e == 0 {
            acc.remove(mono);
        }
    }
}

/// Product of two truncated polynomials.
pub fn multiply_polynomials(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut out = Polynomial::new();
    for (ma, &va) in a {
        for (mb, &vb) in b {
            let mono: Vec<u32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(mono.clone()).or_insert(0);
            *e += va * vb;
            if *e == 0 {
                out.remove(&mono);
            }
        }
    }
    out
}

/// `Σ_{i_1 < ... < i_k ≤ m} x_{i_1}^{α_1} ... x_{i_k}^{α_k}`.
fn eval_monomial(a: &Composition, vars: usize) -> Polynomial {
    let mut out = Polynomial::new();
    let k = a.len();
    let mut idx: Vec<usize> = (0..k).collect();
    if k > vars {
        return out;
    }
    loop {
        let mut mono = vec![0u32; vars];
        for (j, &i) in idx.iter().enumerate() {
            mono[i] = a.parts()[j] as u32;
        }
        *out.entry(mono).or_insert(0) += 1;
        // next strictly increasing index tuple
        let mut p = k;
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            if idx[p] < vars - (k - p) {
                idx[p] += 1;
                for q in p + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `Σ x_{i_1} ... x_{i_n}` over `i_1 ≤ ... ≤ i_n ≤ m` with strict steps at `set(α)`.
fn eval_fundamental(a: &Composition, vars: usize) -> Polynomial {
    let n = a.size();
    let strict = a.set_of();
    let mut out = Polynomial::new();
    fn go(
        pos: usize,
        n: usize,
        lo: usize,
        vars: usize,
        strict: &std::collections::BTreeSet<usize>,
        mono: &mut Vec<u32>,
        out: &mut Polynomial,
    ) {
        if pos > n {
            *out.entry(mono.clone()).or_insert(0) += 1;
            return;
        }
        for i in lo..vars {
            mono[i] += 1;
            // the step from position pos to pos+1 must be strict when pos ∈ set(α)
            let next = if strict.contains(&pos) { i + 1 } else { i };
            go(pos + 1, n, next, vars, strict, mono, out);
            mono[i] -= 1;
        }
    }
    if n == 0 {
        out.insert(vec![0; vars], 1);
        return out;
    }
    go(1, n, 0, vars, &strict, &mut vec![0; vars], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comp;

    fn mm(c: Composition) -> Element {
        Element::basis(Basis::M, c)
    }

    fn ff(c: Composition) -> Element {
        Element::basis(Basis::F, c)
    }

    #[test]
    fn monomial_products() {
        assert_eq!(
            monomial_product(&comp![1], &comp![1]),
            mm(comp![1, 1]).scale(2) + mm(comp![2])
        );
        assert_eq!(monomial_product(&comp![], &comp![2, 1]), mm(comp![2, 1]));
        assert_eq!(
            monomial_product(&comp![1], &comp![2]),
            mm(comp![1, 2]) + mm(comp![2, 1]) + mm(comp![3])
        );
    }

    #[test]
    fn f_and_m() {
        assert_eq!(f_to_m(&comp![2]), mm(comp![2]) + mm(comp![1, 1]));
        assert_eq!(f_to_m(&comp![1]), mm(comp![1]));
        assert_eq!(f_to_m(&comp![1, 1]), mm(comp![1, 1]));
        for n in 0..=8 {
            for c in crate::composition::compositions_of(n) {
                assert_eq!(to_f(&f_to_m(&c)).unwrap(), ff(c.clone()));
                assert_eq!(to_m(&m_to_f(&c)).unwrap(), mm(c));
            }
        }
    }

    #[test]
    fn fundamental_products() {
        assert_eq!(fundamental_product(&comp![], &comp![1, 2]), ff(comp![1, 2]));
        assert_eq!(
            fundamental_product(&comp![1], &comp![1]),
            ff(comp![1, 1]) + ff(comp![2])
        );
    }

    #[test]
    fn coproducts() {
        let t = coproduct_f(&comp![2]);
        let mut expected = Tensor::zero();
        expected.add_term(f(comp![]), f(comp![2]), 1);
        expected.add_term(f(comp![1]), f(comp![1]), 1);
        expected.add_term(f(comp![2]), f(comp![]), 1);
        assert_eq!(t, expected);

        assert_eq!(coproduct_m(&comp![]), Tensor::pure(m(comp![]), m(comp![])));

        let t = coproduct_f(&comp![1, 1]);
        let mut expected = Tensor::zero();
        expected.add_term(f(comp![]), f(comp![1, 1]), 1);
        expected.add_term(f(comp![1]), f(comp![1]), 1);
        expected.add_term(f(comp![1, 1]), f(comp![]), 1);
        assert_eq!(t, expected);
    }

    #[test]
    fn antipode_values() {
        assert_eq!(antipode_f(&comp![2]), ff(comp![1, 1]));
        assert_eq!(antipode_f(&comp![]), ff(comp![]));
        assert_eq!(antipode_f(&comp![1]), -ff(comp![1]));
        // the complement alone would give F_(2,1) here
        assert_eq!(antipode_f(&comp![1, 2]), -ff(comp![1, 2]));
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi_f(&comp![1, 1, 1]), ff(comp![3]));
        assert_eq!(psi_f(&comp![1, 2]), ff(comp![2, 1]));
        for n in 0..=8 {
            for c in crate::composition::compositions_of(n) {
                assert_eq!(psi(&psi_f(&c)).unwrap(), ff(c));
            }
        }
    }

    #[test]
    fn evaluation() {
        let p = evaluate_truncated(&mm(comp![2]), 2).unwrap();
        let expected: Polynomial = [(vec![2, 0], 1), (vec![0, 2], 1)].into_iter().collect();
        assert_eq!(p, expected);
        let p = evaluate_truncated(&ff(comp![1, 1]), 2).unwrap();
        let expected: Polynomial = [(vec![1, 1], 1)].into_iter().collect();
        assert_eq!(p, expected);
        let x = evaluate_truncated(&mm(comp![1]), 4).unwrap();
        let prod = evaluate_truncated(&monomial_product(&comp![1], &comp![1]), 4).unwrap();
        assert_eq!(multiply_polynomials(&x, &x), prod);
    }
}
