//! Left Pieri coefficients c^gamma_{s,alpha} and the rule they drive.

use immaculate::comp;
use immaculate::pieri::{left_pieri_f_dual_immaculate, pieri_coeff, pieri_coeff_oracle};
use immaculate::render::plain;

fn main() {
    let (gamma, alpha) = (comp![1, 2, 1], comp![3, 2, 1]);
    let c = pieri_coeff(&gamma, 2, &alpha).unwrap();
    println!(
        "c = {} ({:?}), oracle {}",
        c.value,
        c.case,
        pieri_coeff_oracle(&gamma, 2, &alpha)
    );

    let c = pieri_coeff(&comp![2, 1], 2, &comp![1, 3, 1]).unwrap();
    println!("length drop: {c:?}");

    println!(
        "F[2] S*[1,2] = {}",
        plain(&left_pieri_f_dual_immaculate(2, &comp![1, 2]))
    );
}
