//! Change of basis between every supported basis of one family.

use crate::algebra::{Basis, Element, Family};
use crate::error::{Error, Result};
use crate::immaculate::{
    dual_immaculate_f, expand_in_dual_immaculate, expand_in_immaculate,
    expand_in_rs_dual_immaculate, expand_in_rs_immaculate, immaculate_of, rs_dual_immaculate_f,
    rs_immaculate_of,
};
use crate::{nsym, qsym};

fn require(e: &Element, family: Family) -> Result<()> {
    match e.family() {
        Some(f) if f != family => Err(Error::WrongFamily { expected: family }),
        _ => Ok(()),
    }
}

/// Any QSym element in the `F` basis.
pub fn to_f(e: &Element) -> Result<Element> {
    require(e, Family::QSym)?;
    e.map_linear(|k| match k.basis() {
        Basis::F => Ok(Element::term(k.clone(), 1)),
        Basis::M => Ok(qsym::m_to_f(k.composition().unwrap())),
        Basis::DualImmaculate | Basis::SkewDualImmaculate => Ok(dual_immaculate_f(&k.shape())),
        Basis::RsDualImmaculate | Basis::SkewRsDualImmaculate => {
            Ok(rs_dual_immaculate_f(&k.shape()))
        }
        _ => unreachable!("family checked"),
    })
}

/// Any QSym element in the `M` basis.
pub fn to_m(e: &Element) -> Result<Element> {
    qsym::to_m(&to_f(e)?)
}

/// Any NSym element in the `H` basis.
pub fn to_h(e: &Element) -> Result<Element> {
    require(e, Family::NSym)?;
    e.map_linear(|k| {
        let c = k.composition().unwrap();
        match k.basis() {
            Basis::H => Ok(Element::term(k.clone(), 1)),
            Basis::E => Ok(nsym::e_to_h(c)),
            Basis::Immaculate => Ok(immaculate_of(c)),
            Basis::RsImmaculate => Ok(rs_immaculate_of(c)),
            _ => unreachable!("family checked"),
        }
    })
}

/// Any NSym element in the `E` basis.
pub fn to_e(e: &Element) -> Result<Element> {
    nsym::to_e(&to_h(e)?)
}

/// Rewrites `e` in `target`; skew tags are not valid targets.
pub fn to_basis(e: &Element, target: Basis) -> Result<Element> {
    if let Some(fam) = e.family() {
        if fam != target.family() {
            return Err(Error::Unsupported(format!(
                "cannot express a {fam:?} element in {target:?}"
            )));
        }
    }
    match target {
        Basis::F => to_f(e),
        Basis::M => to_m(e),
        Basis::DualImmaculate => expand_in_dual_immaculate(e),
        Basis::RsDualImmaculate => expand_in_rs_dual_immaculate(e),
        Basis::H => to_h(e),
        Basis::E => to_e(e),
        Basis::Immaculate => expand_in_immaculate(e),
        Basis::RsImmaculate => expand_in_rs_immaculate(e),
        Basis::SkewDualImmaculate | Basis::SkewRsDualImmaculate => Err(Error::Unsupported(
            "skew functions do not form a basis".into(),
        )),
    }
}

/// Canonical form for equality checks: `F` for QSym, `H` for NSym.
pub fn canonical(e: &Element) -> Result<Element> {
    match e.family() {
        None => Ok(Element::zero()),
        Some(Family::QSym) => to_f(e),
        Some(Family::NSym) => to_h(e),
    }
}
