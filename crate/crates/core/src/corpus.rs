//! The worked recursive expansions `psi_1, A_1, B_1, psi_2, A_2, B_2, psi_3`
//! of every basis, as bracket expressions in `A` and `B`.

use crate::bases::{BasisVector, Family};

const WORKED: &str = include_str!("../data/worked_examples.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkedExample {
    pub vector: BasisVector,
    pub text: &'static str,
}

/// All lines of the data file, in file order.
pub fn worked_examples() -> Vec<WorkedExample> {
    WORKED
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (lhs, text) = line.split_once('=').expect("`lhs = rhs` lines");
            let mut words = lhs.split_whitespace();
            let mut next = || words.next().expect("basis, family and index on the left");
            let basis = next().parse().expect("basis code");
            let family: Family = next().parse().expect("family name");
            let index = next().parse().expect("index");
            WorkedExample {
                vector: BasisVector::new(basis, family, index).expect("valid vector"),
                text: text.trim(),
            }
        })
        .collect()
}
