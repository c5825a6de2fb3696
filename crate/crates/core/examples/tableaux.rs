//! Standard immaculate tableaux of a skew shape and their descent sets.

use immaculate::tableau::enumerate_sit;
use immaculate::SkewShape;

fn main() {
    let shape: SkewShape = "3,4,1/1".parse().unwrap();
    let all = enumerate_sit(&shape);
    println!("{} tableaux of shape {shape}; the first three:", all.len());
    for t in all.iter().take(3) {
        println!("Des = {:?}\n{t}", t.descent_set());
    }
}
