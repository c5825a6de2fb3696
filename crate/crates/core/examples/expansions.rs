//! Changes of basis in QSym and NSym.

use immaculate::convert::to_basis;
use immaculate::render::plain;
use immaculate::{Basis, Composition, Element, SkewShape};

fn main() {
    let c: Composition = "2,1,2".parse().unwrap();
    for (from, to) in [
        (Basis::DualImmaculate, Basis::F),
        (Basis::DualImmaculate, Basis::M),
        (Basis::RsDualImmaculate, Basis::F),
        (Basis::Immaculate, Basis::H),
        (Basis::RsImmaculate, Basis::E),
    ] {
        let e = Element::basis(from, c.clone());
        println!("{}{c} = {}", from.name(), plain(&to_basis(&e, to).unwrap()));
    }
    let shape: SkewShape = "2,3/1,1".parse().unwrap();
    let skew = Element::skew(Basis::SkewDualImmaculate, shape.clone());
    println!("S*{shape} = {}", plain(&to_basis(&skew, Basis::F).unwrap()));
}
