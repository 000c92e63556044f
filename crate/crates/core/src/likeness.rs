//! `x_ij`-like elements and the path-shaped decompositions
//! `X_kh + X_hi + X_ij`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bases::{coords, BasisId, Family};
use crate::error::{Error, Result};
use crate::loop_algebra::{std_gen, GenLabel, LoopElem, TensorStyle};
use crate::ring::RingElem;
use crate::symmetry::{apply_perm, Perm};

/// A path `k - h - i - j` through all four indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathLabel([u8; 4]);

impl PathLabel {
    pub fn new(k: u8, h: u8, i: u8, j: u8) -> Result<Self> {
        let idx = [k, h, i, j];
        let mut seen = [false; 4];
        for &n in &idx {
            if n > 3 || seen[n as usize] {
                return Err(Error::InvalidIndices(idx.to_vec()));
            }
            seen[n as usize] = true;
        }
        Ok(PathLabel(idx))
    }

    pub fn indices(self) -> [u8; 4] {
        self.0
    }

    fn edge(a: u8, b: u8) -> GenLabel {
        GenLabel::new(a, b).expect("path indices are distinct")
    }

    pub fn kh(self) -> GenLabel {
        Self::edge(self.0[0], self.0[1])
    }

    pub fn hi(self) -> GenLabel {
        Self::edge(self.0[1], self.0[2])
    }

    pub fn ij(self) -> GenLabel {
        Self::edge(self.0[2], self.0[3])
    }

    /// The permutation carrying `[0312]` onto this label.
    pub fn transport(self) -> Perm {
        let [k, h, i, j] = self.0;
        let mut images = [0u8; 4];
        images[0] = k;
        images[3] = h;
        images[1] = i;
        images[2] = j;
        Perm::new(images).expect("path indices are distinct")
    }
}

impl fmt::Display for PathLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [k, h, i, j] = self.0;
        write!(f, "[{k}{h}{i}{j}]")
    }
}

impl FromStr for PathLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']');
        let digits: Vec<u8> = body
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::UnsupportedLabel(s.to_string()))?;
        match digits[..] {
            [k, h, i, j] => PathLabel::new(k, h, i, j),
            _ => Err(Error::UnsupportedLabel(s.to_string())),
        }
    }
}

impl Serialize for PathLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PathLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The three summands of an element along a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathParts {
    pub label: PathLabel,
    pub kh: LoopElem,
    pub hi: LoopElem,
    pub ij: LoopElem,
}

impl PathParts {
    pub fn sum(&self) -> LoopElem {
        &(&self.kh + &self.hi) + &self.ij
    }

    /// Each part paired with the generator of its slot.
    pub fn slots(&self) -> [(GenLabel, &LoopElem); 3] {
        [
            (self.label.kh(), &self.kh),
            (self.label.hi(), &self.hi),
            (self.label.ij(), &self.ij),
        ]
    }

    pub fn render(&self, style: TensorStyle) -> String {
        let [k, h, i, j] = self.label.indices();
        format!(
            "X_{k}{h}: {}\nX_{h}{i}: {}\nX_{i}{j}: {}",
            self.kh.render(style),
            self.hi.render(style),
            self.ij.render(style)
        )
    }
}

impl fmt::Display for PathParts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TensorStyle::Unicode))
    }
}

fn dg_against(x: &LoopElem, u: &LoopElem) -> bool {
    x.dolan_grady_holds(u)
}

/// `[x_ij, u] = 0` and Dolan-Grady of `x_kh` against `u`.
pub fn is_like(g: GenLabel, u: &LoopElem) -> bool {
    std_gen(g).bracket(u).is_zero() && dg_against(&std_gen(g.opposite()), u)
}

/// The Dolan-Grady half of [`is_like`] evaluated with `x_kh` and with `x_hk`.
pub fn like_dg_both_orders(g: GenLabel, u: &LoopElem) -> (bool, bool) {
    let kh = g.opposite();
    (
        dg_against(&std_gen(kh), u),
        dg_against(&std_gen(kh.reversed()), u),
    )
}

/// Spanning set of `X_ij` over the field: `x_ij` times `1`, `t^n`, `t'^n`, `t''^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LikeKind {
    One,
    TPow,
    TpPow,
    TppPow,
}

pub fn like_basis_elem(g: GenLabel, kind: LikeKind, n: u32) -> Result<LoopElem> {
    let factor = match kind {
        LikeKind::One => return Ok(std_gen(g)),
        _ if n == 0 => return Err(Error::ZeroPower),
        LikeKind::TPow => RingElem::t(),
        LikeKind::TpPow => RingElem::t_prime(),
        LikeKind::TppPow => RingElem::t_double_prime(),
    };
    Ok(std_gen(g).scale(&factor.pow(n)))
}

/// `u = X_03 + X_31 + X_12`, by direct division.
pub fn decompose_canonical(u: &LoopElem) -> PathParts {
    let py_over_t = u.py.div_t();
    let part_03 = LoopElem::sigma_b().scale(&py_over_t);
    let part_31 = LoopElem::z(&u.pz - &(&RingElem::t_minus_1() * &py_over_t));
    let part_12 = LoopElem::x(u.px.clone());
    PathParts {
        label: BasisId::Uu.path(),
        kh: part_03,
        hi: part_31,
        ij: part_12,
    }
}

/// Decomposition along any path, transported from `[0312]`.
pub fn decompose_path(label: PathLabel, u: &LoopElem) -> PathParts {
    let beta = label.transport();
    let base = decompose_canonical(&apply_perm(beta.inverse(), u));
    PathParts {
        label,
        kh: apply_perm(beta, &base.kh),
        hi: apply_perm(beta, &base.hi),
        ij: apply_perm(beta, &base.ij),
    }
}

/// Decomposition of `u ∈ O` inside `O` for one of the four basis paths.
pub fn decompose_onsager(label: PathLabel, u: &LoopElem) -> Result<PathParts> {
    let b = BasisId::from_path(label)?;
    let c = coords(u, b)?;
    Ok(PathParts {
        label,
        kh: c.family_part(Family::B),
        hi: c.family_part(Family::Psi),
        ij: c.family_part(Family::A),
    })
}
