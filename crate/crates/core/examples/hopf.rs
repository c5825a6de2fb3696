//! Product, coproduct, antipode and psi on the fundamental and
//! complete homogeneous bases.

use immaculate::render::plain;
use immaculate::{comp, pairing, qsym, Basis, Element};

fn main() {
    let f12 = Element::basis(Basis::F, comp![1, 2]);
    let f1 = Element::basis(Basis::F, comp![1]);
    println!(
        "F[1,2] F[1] = {}",
        plain(&pairing::product(&f12, &f1).unwrap())
    );
    println!(
        "coproduct of F[1,2] in M: {}",
        pairing::coproduct(&f12).unwrap()
    );
    println!("S(F[1,2]) = {}", plain(&pairing::antipode(&f12).unwrap()));
    println!("psi(F[1,2]) = {}", plain(&qsym::psi(&f12).unwrap()));

    let h21 = Element::basis(Basis::H, comp![2, 1]);
    println!("S(H[2,1]) = {}", plain(&pairing::antipode(&h21).unwrap()));
    println!(
        "antipode identity on H[2,1]: {}",
        pairing::check_antipode_identity(&h21).unwrap()
    );
}
