//! The three-point loop algebra `sl2 ⊗ A` in equitable coordinates.
//!
//! An element is a triple `(px, py, pz)` standing for
//! `x⊗px + y⊗py + z⊗pz`, where `x, y, z` is the equitable basis with
//! `[x,y] = 2x+2y`, `[y,z] = 2y+2z`, `[z,x] = 2z+2x`.

use std::fmt;
use std::str::FromStr;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::ring::{parse_monomial, Rational, RingElem, Subring};
use crate::scan::Cursor;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct LoopElem {
    #[serde(rename = "x")]
    pub px: RingElem,
    #[serde(rename = "y")]
    pub py: RingElem,
    #[serde(rename = "z")]
    pub pz: RingElem,
}

impl LoopElem {
    pub fn new(px: RingElem, py: RingElem, pz: RingElem) -> Self {
        LoopElem { px, py, pz }
    }

    pub fn zero() -> Self {
        LoopElem::default()
    }

    /// `x ⊗ a`
    pub fn x(a: RingElem) -> Self {
        LoopElem::new(a, RingElem::zero(), RingElem::zero())
    }

    /// `y ⊗ a`
    pub fn y(a: RingElem) -> Self {
        LoopElem::new(RingElem::zero(), a, RingElem::zero())
    }

    /// `z ⊗ a`
    pub fn z(a: RingElem) -> Self {
        LoopElem::new(RingElem::zero(), RingElem::zero(), a)
    }

    /// The generator `A = x⊗1`.
    pub fn sigma_a() -> Self {
        LoopElem::x(RingElem::one())
    }

    /// The generator `B = y⊗t + z⊗(t-1)`.
    pub fn sigma_b() -> Self {
        LoopElem::new(RingElem::zero(), RingElem::t(), RingElem::t_minus_1())
    }

    pub fn is_zero(&self) -> bool {
        self.px.is_zero() && self.py.is_zero() && self.pz.is_zero()
    }

    pub fn components(&self) -> [&RingElem; 3] {
        [&self.px, &self.py, &self.pz]
    }

    /// Right module action `u⊗a ↦ u⊗ab`.
    pub fn scale(&self, a: &RingElem) -> Self {
        LoopElem::new(&self.px * a, &self.py * a, &self.pz * a)
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        LoopElem::new(self.px.scale(c), self.py.scale(c), self.pz.scale(c))
    }

    /// Lie bracket, from the three equitable relations expanded once.
    pub fn bracket(&self, other: &LoopElem) -> LoopElem {
        let (u, v) = (self, other);
        let p = &(&u.px * &v.py) - &(&v.px * &u.py);
        let q = &(&u.py * &v.pz) - &(&v.py * &u.pz);
        let r = &(&u.pz * &v.px) - &(&v.pz * &u.px);
        let two = |e: RingElem| &e + &e;
        LoopElem::new(two(&p + &r), two(&p + &q), two(&q + &r))
    }

    /// `[u,[u,[u,v]]] == 4[u,v]`
    pub fn dolan_grady_holds(&self, v: &LoopElem) -> bool {
        let uv = self.bracket(v);
        let lhs = self.bracket(&self.bracket(&uv));
        lhs == uv.scale_rational(&crate::ring::int(4))
    }

    /// Membership in `O = x⊗Q[t] + y⊗tQ[t] + z⊗(t-1)Q[t]`.
    pub fn in_onsager(&self) -> bool {
        self.px.in_subring(Subring::Poly)
            && self.py.in_subring(Subring::TPoly)
            && self.pz.in_subring(Subring::Tm1Poly)
    }

    pub fn render(&self, style: TensorStyle) -> String {
        let tensor = style.symbol();
        let mut out = String::new();
        for (name, comp) in [("x", &self.px), ("y", &self.py), ("z", &self.pz)] {
            if comp.is_zero() {
                continue;
            }
            let single = comp.is_single_term();
            let negative = single && comp.leading_is_negative();
            let body = if negative { (-comp).to_string() } else { comp.to_string() };
            let body = if single { body } else { format!("({body})") };
            match (out.is_empty(), negative) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(name);
            out.push_str(tensor);
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// How the tensor sign is printed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TensorStyle {
    #[default]
    Unicode,
    Ascii,
}

impl TensorStyle {
    pub fn symbol(self) -> &'static str {
        match self {
            TensorStyle::Unicode => "⊗",
            TensorStyle::Ascii => "(x)",
        }
    }
}

impl FromStr for LoopElem {
    type Err = ParseError;

    /// Parses renderings such as `x⊗2 + y⊗2t + z⊗(2 - 2t)`; the tensor sign
    /// may also be written `(x)` or `*`, and repeated components add up.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut cur = Cursor::new(s);
        if cur.eat('0') {
            cur.finish()?;
            return Ok(LoopElem::zero());
        }
        let mut acc = LoopElem::zero();
        let mut negative = cur.eat('-') || cur.eat('−');
        if !negative {
            cur.eat('+');
        }
        loop {
            let at = cur.pos();
            let name = ['x', 'y', 'z']
                .into_iter()
                .find(|&c| cur.eat(c))
                .ok_or_else(|| ParseError::new(at, ["'x'", "'y'", "'z'"]))?;
            if !(cur.eat('⊗') || cur.eat('*')) {
                for c in ['(', 'x', ')'] {
                    cur.expect(c)?;
                }
            }
            let coeff = if cur.eat('(') {
                let e = RingElem::parse_from(&mut cur)?;
                cur.expect(')')?;
                e
            } else {
                parse_monomial(&mut cur)?
            };
            let coeff = if negative { -coeff } else { coeff };
            let term = match name {
                'x' => LoopElem::x(coeff),
                'y' => LoopElem::y(coeff),
                _ => LoopElem::z(coeff),
            };
            acc = &acc + &term;
            if cur.eat('+') {
                negative = false;
            } else if cur.eat('-') || cur.eat('−') {
                negative = true;
            } else {
                cur.finish()?;
                return Ok(acc);
            }
        }
    }
}

impl fmt::Display for LoopElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(TensorStyle::Unicode))
    }
}

impl Add for &LoopElem {
    type Output = LoopElem;
    fn add(self, rhs: &LoopElem) -> LoopElem {
        LoopElem::new(&self.px + &rhs.px, &self.py + &rhs.py, &self.pz + &rhs.pz)
    }
}

impl Sub for &LoopElem {
    type Output = LoopElem;
    fn sub(self, rhs: &LoopElem) -> LoopElem {
        LoopElem::new(&self.px - &rhs.px, &self.py - &rhs.py, &self.pz - &rhs.pz)
    }
}

impl Neg for &LoopElem {
    type Output = LoopElem;
    fn neg(self) -> LoopElem {
        LoopElem::new(-&self.px, -&self.py, -&self.pz)
    }
}

impl Add for LoopElem {
    type Output = LoopElem;
    fn add(self, rhs: LoopElem) -> LoopElem {
        &self + &rhs
    }
}

impl Sub for LoopElem {
    type Output = LoopElem;
    fn sub(self, rhs: LoopElem) -> LoopElem {
        &self - &rhs
    }
}

impl Neg for LoopElem {
    type Output = LoopElem;
    fn neg(self) -> LoopElem {
        -&self
    }
}

impl std::iter::Sum for LoopElem {
    fn sum<I: Iterator<Item = LoopElem>>(iter: I) -> Self {
        iter.fold(LoopElem::zero(), |acc, e| &acc + &e)
    }
}

/// Label of a standard generator `x_ij`, `i != j` in `0..=3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenLabel {
    i: u8,
    j: u8,
}

impl GenLabel {
    pub fn new(i: u8, j: u8) -> Result<Self> {
        if i > 3 || j > 3 || i == j {
            return Err(Error::InvalidIndices(vec![i, j]));
        }
        Ok(GenLabel { i, j })
    }

    pub fn i(self) -> u8 {
        self.i
    }

    pub fn j(self) -> u8 {
        self.j
    }

    pub fn reversed(self) -> Self {
        GenLabel { i: self.j, j: self.i }
    }

    /// The remaining pair `(k, h)`, in increasing order.
    pub fn opposite(self) -> GenLabel {
        let mut rest = (0..4u8).filter(|&n| n != self.i && n != self.j);
        let k = rest.next().expect("two indices remain");
        let h = rest.next().expect("two indices remain");
        GenLabel { i: k, j: h }
    }

    /// All twelve ordered labels.
    pub fn all() -> impl Iterator<Item = GenLabel> {
        (0..4u8).flat_map(|i| (0..4u8).filter(move |&j| j != i).map(move |j| GenLabel { i, j }))
    }
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{}{}", self.i, self.j)
    }
}

/// The image of the standard generator `x_ij` in the loop algebra.
pub fn std_gen(g: GenLabel) -> LoopElem {
    let one = RingElem::one;
    let tp = RingElem::t_prime();
    let tpp = RingElem::t_double_prime();
    match (g.i, g.j) {
        (1, 2) => LoopElem::x(one()),
        (2, 3) => LoopElem::y(one()),
        (3, 1) => LoopElem::z(one()),
        (0, 3) => LoopElem::sigma_b(),
        (0, 1) => LoopElem::new(&tp - &one(), RingElem::zero(), tp),
        (0, 2) => LoopElem::new(tpp.clone(), &tpp - &one(), RingElem::zero()),
        _ => -std_gen(g.reversed()),
    }
}
