//! The pairing between QSym and NSym, and the dual immaculate / immaculate
//! bases as dual bases.

use immaculate::immaculate::degree_tables;
use immaculate::pairing::pair;

fn main() {
    let t = degree_tables(4);
    for a in &t.compositions {
        let row: Vec<String> = t
            .compositions
            .iter()
            .map(|b| {
                pair(&t.dual_immaculate(a), &t.immaculate(b))
                    .unwrap()
                    .to_string()
            })
            .collect();
        println!("{:>10}  {}", a.to_string(), row.join(" "));
    }
}
