//! The skew Pieri rule, checked against the direct product.

use immaculate::convert::to_f;
use immaculate::pieri::{multiplicity_check, skew_pieri, skew_pieri_oracle, skew_pieri_rs};
use immaculate::render::plain;
use immaculate::SkewShape;

fn main() {
    let shape: SkewShape = "1,2,1/1,1".parse().unwrap();
    let out = skew_pieri(2, &shape);
    println!("F[2] S*{shape} = {}", plain(&out));
    println!(
        "matches product: {}",
        to_f(&out).unwrap() == skew_pieri_oracle(2, &shape)
    );
    println!("row-strict: {}", plain(&skew_pieri_rs(2, &shape)));

    let shape: SkewShape = "1,4,1/1,4,1".parse().unwrap();
    let out = skew_pieri(3, &shape);
    println!(
        "s=3 on {shape}: matches product {}, multiplicity-free {}",
        to_f(&out).unwrap() == skew_pieri_oracle(3, &shape),
        multiplicity_check(&out)
    );
}
