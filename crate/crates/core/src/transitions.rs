//! How rho and tau permute the four bases, and the change-of-basis data
//! between them.
//!
//! The bases sit on a square:
//!
//! ```text
//!   uu --rho-- dd
//!   |          |
//!  tau        tau
//!   |          |
//!   du --rho-- ud
//! ```
//!
//! `transition(src, dst, v)` writes the `dst` vector with the family and
//! index of `v` as a combination of `src` vectors.

use num_traits::{One, Zero};

use crate::bases::{BasisId, BasisVector, Family, OCoords};
use crate::error::{Error, Result};
use crate::ring::{Rational, binomial};
use crate::symmetry::Basic;

/// The two generators of the Klein four-group acting on the bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Swap {
    Rho,
    Tau,
}

impl Swap {
    pub fn basic(self) -> Basic {
        match self {
            Swap::Rho => Basic::Rho,
            Swap::Tau => Basic::Tau,
        }
    }

    pub fn on_basis(self, b: BasisId) -> BasisId {
        use BasisId::*;
        match (self, b) {
            (Swap::Rho, Uu) => Dd,
            (Swap::Rho, Dd) => Uu,
            (Swap::Rho, Du) => Ud,
            (Swap::Rho, Ud) => Du,
            (Swap::Tau, Uu) => Du,
            (Swap::Tau, Du) => Uu,
            (Swap::Tau, Dd) => Ud,
            (Swap::Tau, Ud) => Dd,
        }
    }
}

/// The vector `g` sends `v` to: same family and index, partner basis.
pub fn aut_image(g: Swap, v: BasisVector) -> BasisVector {
    v.in_basis(g.on_basis(v.basis))
}

fn sign(even: bool) -> Rational {
    if even {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `rho` edge: sign flips plus a shear of the psi family.
fn horizontal(src: BasisId, v: BasisVector) -> Result<OCoords> {
    let at = |f, i| BasisVector::new(src, f, i);
    let m1 = -Rational::one();
    let terms = match v.family {
        Family::A => vec![(at(Family::A, v.index)?, m1)],
        Family::B => vec![(at(Family::B, v.index)?, m1)],
        Family::Psi => {
            let i = v.index - 1;
            vec![
                (at(Family::A, i)?, m1.clone()),
                (at(Family::B, i)?, m1),
                (at(Family::Psi, v.index)?, Rational::one()),
            ]
        }
    };
    OCoords::from_terms(src, terms)
}

/// `tau` edge: alternating binomial sums.
fn vertical(src: BasisId, v: BasisVector) -> Result<OCoords> {
    let mut out = OCoords::zero(src);
    let i = match v.family {
        Family::Psi => v.index - 1,
        _ => v.index,
    };
    let even = i % 2 == 0;
    for j in 0..=i {
        let c = Rational::from_integer(binomial(i, j));
        match v.family {
            Family::A => out.add_term(BasisVector::new(src, Family::A, j)?, sign(!even) * &c)?,
            Family::B => out.add_term(BasisVector::new(src, Family::B, j)?, sign(even) * &c)?,
            Family::Psi => {
                out.add_term(BasisVector::new(src, Family::B, j)?, sign(even) * &c)?;
                out.add_term(BasisVector::new(src, Family::Psi, j + 1)?, sign(!even) * &c)?;
            }
        }
    }
    Ok(out)
}

fn adjacent_edge(a: BasisId, b: BasisId) -> Option<Swap> {
    [Swap::Rho, Swap::Tau].into_iter().find(|g| g.on_basis(a) == b)
}

/// Intermediate basis for the two diagonals of the square: first the rho edge.
fn via(src: BasisId) -> BasisId {
    Swap::Rho.on_basis(src)
}

/// Basis `dst` vector with `v`'s family and index, expanded over `src`.
pub fn transition(src: BasisId, dst: BasisId, v: BasisVector) -> Result<OCoords> {
    if v.basis != src {
        return Err(Error::BasisMismatch { expected: src, found: v.basis });
    }
    let v = BasisVector::new(v.basis, v.family, v.index)?;
    if src == dst {
        return Ok(OCoords::single(v));
    }
    match adjacent_edge(src, dst) {
        Some(Swap::Rho) => horizontal(src, v),
        Some(Swap::Tau) => vertical(src, v),
        None => transition_via(src, via(src), dst, v),
    }
}

/// Like [`transition`], composed through the intermediate basis `mid`.
pub fn transition_via(src: BasisId, mid: BasisId, dst: BasisId, v: BasisVector) -> Result<OCoords> {
    if v.basis != src {
        return Err(Error::BasisMismatch { expected: src, found: v.basis });
    }
    let over_mid = transition(mid, dst, v.in_basis(mid))?;
    let mut out = OCoords::zero(src);
    for (w, c) in over_mid.iter() {
        if c.is_zero() {
            continue;
        }
        let w_over_src = transition(src, mid, w.in_basis(src))?;
        out.add_scaled(&w_over_src, c)?;
    }
    Ok(out)
}

/// Re-expresses a full coordinate vector over another basis.
pub fn convert(c: &OCoords, to: BasisId) -> Result<OCoords> {
    let mut out = OCoords::zero(to);
    for (v, r) in c.iter() {
        // v (a `from` vector) written over `to`.
        out.add_scaled(&transition(to, v.basis, v.in_basis(to))?, r)?;
    }
    Ok(out)
}
