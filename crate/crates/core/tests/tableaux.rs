//! Tableau enumeration against brute force over all fillings.

use std::collections::BTreeSet;

use itertools::Itertools;

use immaculate::composition::{compositions_of, SkewShape};
use immaculate::tableau::enumerate_sit;

/// Every permutation of `1..=n` laid into the rows, kept when rows increase
/// and the first-column cells increase upward.
fn brute_force(shape: &SkewShape) -> BTreeSet<Vec<Vec<usize>>> {
    let lens: Vec<usize> = (1..=shape.outer().len())
        .map(|j| shape.row_len(j))
        .collect();
    let n = shape.size();
    let mut out = BTreeSet::new();
    for perm in (1..=n).permutations(n) {
        let mut rows = Vec::new();
        let mut at = 0;
        for &l in &lens {
            rows.push(perm[at..at + l].to_vec());
            at += l;
        }
        if !rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1])) {
            continue;
        }
        let firsts: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(j, r)| shape.inner().part(j + 1) == 0 && !r.is_empty())
            .map(|(_, r)| r[0])
            .collect();
        if firsts.windows(2).all(|w| w[0] < w[1]) {
            out.insert(rows);
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=6 {
        for outer in compositions_of(n) {
            for k in 0..=n {
                for inner in compositions_of(k) {
                    let Ok(shape) = SkewShape::new(outer.clone(), inner) else {
                        continue;
                    };
                    if shape.size() > 6 {
                        continue;
                    }
                    let got: BTreeSet<_> = enumerate_sit(&shape)
                        .iter()
                        .map(|t| t.rows().to_vec())
                        .collect();
                    assert_eq!(got, brute_force(&shape), "{shape}");
                }
            }
        }
    }
}

#[test]
fn straight_counts() {
    // n! / product of row lengths after the first cell of each row
    let shape = SkewShape::straight("2,2".parse().unwrap());
    assert_eq!(enumerate_sit(&shape).len(), 3);
    let shape = SkewShape::straight("3,4,1".parse().unwrap());
    assert_eq!(enumerate_sit(&shape).len(), brute_force(&shape).len());
}
