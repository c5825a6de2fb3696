//! Products of skew functions through the right-action expansion.

use immaculate::comp;
use immaculate::lr::{
    skew_lr_expansion, skew_lr_expansion_swapped, skew_product, Coeffs, Fundamental, Ribbon,
};

fn show(name: &str, x: &Coeffs) -> String {
    let terms: Vec<String> = x.iter().map(|(c, v)| format!("{v:+}*{name}{c}")).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" ")
    }
}

fn main() {
    let (a, b, g, d) = (comp![1, 2], comp![1], comp![2, 1], comp![1]);
    let direct = skew_product(&Ribbon, (&a, &b), (&g, &d)).unwrap();
    let expanded = skew_lr_expansion(&Ribbon, (&a, &b), (&g, &d)).unwrap();
    println!("R[1,2/1] R[2,1/1] = {}", show("R", &direct));
    println!("expansion agrees: {}", direct == expanded);

    let (e, one) = (comp![], comp![1]);
    let direct = skew_product(&Fundamental, (&a, &e), (&one, &one)).unwrap();
    let expanded = skew_lr_expansion(&Fundamental, (&a, &e), (&one, &one)).unwrap();
    let swapped = skew_lr_expansion_swapped(&Fundamental, (&a, &e), (&one, &one)).unwrap();
    println!("F[1,2] F[1/1] = {}", show("F", &direct));
    println!("expansion gives {}", show("F", &expanded));
    // antipode on the wrong leg: F is not cocommutative
    println!("swapped legs give {}", show("F", &swapped));
}
