//! The `S4` action on the loop algebra.
//!
//! Only the four generators rho, tau, mu, phi have closed formulas; any
//! other permutation acts through a shortest word in them, found once by
//! breadth-first search over the Cayley graph of `S4`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::loop_algebra::LoopElem;
use crate::ring::{RingAut, RingElem};

/// A permutation of `{0,1,2,3}`, stored as its images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm([u8; 4]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &b in &images {
            if b > 3 || seen[b as usize] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[b as usize] = true;
        }
        Ok(Perm(images))
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    pub fn apply(self, i: u8) -> u8 {
        self.0[i as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm) -> Perm {
        Perm(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(self) -> Perm {
        let mut inv = [0u8; 4];
        for (i, &b) in self.0.iter().enumerate() {
            inv[b as usize] = i as u8;
        }
        Perm(inv)
    }

    /// All 24 permutations in lexicographic order of their image tuples.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    let Some(d) = 6u8.checked_sub(a + b + c) else {
                        continue;
                    };
                    if let Ok(p) = Perm::new([a, b, c, d]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    fn cycles(self) -> Vec<Vec<u8>> {
        let mut seen = [false; 4];
        let mut out = Vec::new();
        for start in 0..4u8 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut next = self.apply(start);
            while next != start {
                seen[next as usize] = true;
                cycle.push(next);
                next = self.apply(next);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, each cycle led by its smallest point; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("e");
        }
        for c in cycles {
            write!(f, "(")?;
            for i in c {
                write!(f, "{i}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Accepts products of disjoint or overlapping cycles such as `(12)(30)`,
    /// composed right to left, or `e` / `()` for the identity.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPermutation(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "e" || compact == "()" || compact.is_empty() {
            return Ok(Perm::IDENTITY);
        }
        let mut acc = Perm::IDENTITY;
        let mut rest = compact.as_str();
        let mut factors = Vec::new();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let points = body[..close]
                .chars()
                .map(|c| c.to_digit(10).filter(|&d| d < 4).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<Vec<u8>>>()?;
            let mut used = [false; 4];
            for &p in &points {
                if std::mem::replace(&mut used[p as usize], true) {
                    return Err(bad());
                }
            }
            let mut images = [0, 1, 2, 3];
            for (k, &p) in points.iter().enumerate() {
                images[p as usize] = points[(k + 1) % points.len()];
            }
            factors.push(Perm::new(images).map_err(|_| bad())?);
            rest = &body[close + 1..];
        }
        for p in factors {
            acc = acc.compose(p);
        }
        Ok(acc)
    }
}

/// The four automorphisms with explicit formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basic {
    Rho,
    Tau,
    Mu,
    Phi,
}

impl Basic {
    pub const ALL: [Basic; 4] = [Basic::Rho, Basic::Tau, Basic::Mu, Basic::Phi];

    /// rho = (12)(30), tau = (12), mu = (23)(10), phi = (123).
    pub fn perm(self) -> Perm {
        match self {
            Basic::Rho => Perm([3, 2, 1, 0]),
            Basic::Tau => Perm([0, 2, 1, 3]),
            Basic::Mu => Perm([1, 0, 3, 2]),
            Basic::Phi => Perm([0, 2, 3, 1]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Basic::Rho => "rho",
            Basic::Tau => "tau",
            Basic::Mu => "mu",
            Basic::Phi => "phi",
        }
    }
}

impl fmt::Display for Basic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `g1 g2 ... gk`, acting as `g1(g2(...gk(u)))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GenWord(pub Vec<Basic>);

impl GenWord {
    pub fn letters(&self) -> &[Basic] {
        &self.0
    }

    pub fn eval(&self) -> Perm {
        self.0
            .iter()
            .fold(Perm::IDENTITY, |acc, g| acc.compose(g.perm()))
    }
}

/// Image of `u⊗1` for an A-linear automorphism, given per basis vector.
fn linear_images(images: [LoopElem; 3], u: &LoopElem) -> LoopElem {
    let [ix, iy, iz] = images;
    &(&ix.scale(&u.px) + &iy.scale(&u.py)) + &iz.scale(&u.pz)
}

pub fn apply_basic(g: Basic, u: &LoopElem) -> LoopElem {
    let one = RingElem::one;
    let zero = RingElem::zero;
    match g {
        Basic::Rho => {
            let one_minus_t = RingElem::from_ints(&[1, -1]);
            let inv_one_minus_t = one_minus_t.inverse().expect("unit");
            linear_images(
                [
                    LoopElem::x(-one()),
                    // (x⊗1 + z⊗(1-t)) t^-1
                    LoopElem::new(one(), zero(), one_minus_t).scale(&RingElem::t_pow(-1)),
                    // (x⊗1 + y⊗t) (1-t)^-1
                    LoopElem::new(one(), RingElem::t(), zero()).scale(&inv_one_minus_t),
                ],
                u,
            )
        }
        Basic::Mu => linear_images(
            [
                LoopElem::sigma_b(),
                LoopElem::y(-one()),
                // (x⊗1 + y⊗t) (t-1)^-1
                LoopElem::new(one(), RingElem::t(), zero()).scale(&RingElem::t_minus_1_pow(-1)),
            ],
            u,
        ),
        Basic::Tau => {
            let s = |a: &RingElem| -a.apply_aut(RingAut::TauA);
            // x -> -x, y -> -z, z -> -y
            LoopElem::new(s(&u.px), s(&u.pz), s(&u.py))
        }
        Basic::Phi => {
            let s = |a: &RingElem| a.apply_aut(RingAut::Phi);
            // x -> y -> z -> x
            LoopElem::new(s(&u.pz), s(&u.px), s(&u.py))
        }
    }
}

fn word_table() -> &'static HashMap<Perm, GenWord> {
    static TABLE: OnceLock<HashMap<Perm, GenWord>> = OnceLock::new();
    TABLE.get_or_init(|| {
        // Appending letters in the order rho < tau < mu < phi makes each
        // BFS level lexicographically ordered, so the first word found for
        // a permutation is the lexicographically least shortest one.
        let mut table = HashMap::new();
        let mut queue = VecDeque::new();
        table.insert(Perm::IDENTITY, GenWord::default());
        queue.push_back((Perm::IDENTITY, GenWord::default()));
        while let Some((p, w)) = queue.pop_front() {
            for g in Basic::ALL {
                let q = p.compose(g.perm());
                if table.contains_key(&q) {
                    continue;
                }
                let mut next = w.clone();
                next.0.push(g);
                table.insert(q, next.clone());
                queue.push_back((q, next));
            }
        }
        table
    })
}

/// Shortest generator word for `p` (cached).
pub fn word_for(p: Perm) -> GenWord {
    word_table()[&p].clone()
}

pub fn apply_perm(p: Perm, u: &LoopElem) -> LoopElem {
    word_table()[&p]
        .0
        .iter()
        .rev()
        .fold(u.clone(), |acc, &g| apply_basic(g, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loop_algebra::{std_gen, GenLabel};

    #[test]
    fn generator_formulas_on_a_b() {
        let (a, b) = (LoopElem::sigma_a(), LoopElem::sigma_b());
        assert_eq!(apply_basic(Basic::Rho, &a), -a.clone());
        assert_eq!(apply_basic(Basic::Rho, &b), -b.clone());
        // tau = (12) negates x_12 and fixes x_03.
        assert_eq!(apply_basic(Basic::Tau, &a), -a.clone());
        assert_eq!(apply_basic(Basic::Tau, &b), b.clone());
        assert_eq!(apply_basic(Basic::Mu, &a), b.clone());
        assert_eq!(apply_basic(Basic::Mu, &b), a.clone());
        assert_eq!(
            apply_basic(Basic::Phi, &LoopElem::x(RingElem::one())),
            LoopElem::y(RingElem::one())
        );
    }

    #[test]
    fn words() {
        assert!(word_for(Perm::IDENTITY).0.is_empty());
        assert_eq!(word_for("(12)".parse().unwrap()).0, vec![Basic::Tau]);
        let p = Basic::Rho.perm().compose(Basic::Tau.perm());
        assert_eq!(p, "(30)".parse().unwrap());
        let w = word_for(p);
        assert_eq!(w.0.len(), 2);
        assert_eq!(w.eval(), p);
        for p in Perm::all() {
            assert_eq!(word_for(p).eval(), p);
        }
    }

    #[test]
    fn perm_notation() {
        let rho: Perm = "(12)(30)".parse().unwrap();
        assert_eq!(rho, Basic::Rho.perm());
        assert_eq!(rho.to_string(), "(03)(12)");
        assert_eq!(Perm::IDENTITY.to_string(), "e");
        assert_eq!("e".parse::<Perm>().unwrap(), Perm::IDENTITY);
        assert_eq!("(123)".parse::<Perm>().unwrap(), Basic::Phi.perm());
        assert!("(14)".parse::<Perm>().is_err());
        assert!("(11)".parse::<Perm>().is_err());
        assert!(Perm::new([0, 0, 1, 2]).is_err());
        for p in Perm::all() {
            assert_eq!(p.to_string().parse::<Perm>().unwrap(), p);
            assert_eq!(p.compose(p.inverse()), Perm::IDENTITY);
        }
    }

    #[test]
    fn perm_action_examples() {
        let tau: Perm = "(12)".parse().unwrap();
        assert_eq!(apply_perm(tau, &LoopElem::sigma_b()), LoopElem::sigma_b());
        assert_eq!(apply_perm(tau, &LoopElem::sigma_a()), -LoopElem::sigma_a());
        let u = LoopElem::new(RingElem::t(), RingElem::t_prime(), RingElem::one());
        assert_eq!(apply_perm(Perm::IDENTITY, &u), u);
        let phi: Perm = "(123)".parse().unwrap();
        let g31 = std_gen(GenLabel::new(3, 1).unwrap());
        let expected = std_gen(GenLabel::new(phi.apply(3), phi.apply(1)).unwrap());
        assert_eq!(expected, std_gen(GenLabel::new(1, 2).unwrap()));
        assert_eq!(apply_perm(phi, &g31), expected);
    }
}
