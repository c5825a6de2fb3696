//! The harpoon actions and the identities relating them to the pairing.

use immaculate::pairing::{
    check_adjointness, check_lemma_product, check_lemma_raction, check_raction_identity,
    left_harpoon, right_harpoon,
};
use immaculate::render::plain;
use immaculate::{comp, Basis, Element};

fn main() {
    let h = Element::basis(Basis::H, comp![1, 2]);
    let h1 = Element::basis(Basis::H, comp![1]);
    let f = Element::basis(Basis::F, comp![2, 1, 1]);
    println!(
        "H[1] -> F[2,1,1] = {}",
        plain(&left_harpoon(&h1, &f).unwrap())
    );
    println!(
        "H[1] <- F[2,1,1] = {}",
        plain(&right_harpoon(&h1, &f).unwrap())
    );

    let g = Element::basis(Basis::H, comp![2]);
    let a = Element::basis(Basis::F, comp![2, 1]);
    let b = Element::basis(Basis::F, comp![1, 1]);
    println!(
        "adjointness: {}",
        check_adjointness(&h, &g, &a, &b).unwrap()
    );
    println!(
        "product lemma (NSym acting): {}",
        check_lemma_product(&h, &a, &b).unwrap()
    );

    // with the antipode on the second leg, h(a <- g) needs a cocommutative h
    let f21 = Element::basis(Basis::F, comp![2, 1]);
    let one = Element::one(Basis::F);
    let stated = check_lemma_raction(&f21, &one, &h1).unwrap();
    let general = check_raction_identity(&f21, &one, &h1).unwrap();
    println!("F[2,1] acting: S on h_2 {stated}, S on h_1 {general}");
    let row = Element::basis(Basis::F, comp![3]);
    let stated = check_lemma_raction(&row, &one, &h1).unwrap();
    println!("F[3] acting: S on h_2 {stated}");
}
