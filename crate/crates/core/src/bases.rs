//! The four bases of the Onsager algebra: closed forms, recursive
//! bracket construction, coordinates and structure constants.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::BracketExpr;
use crate::likeness::PathLabel;
use crate::loop_algebra::{GenLabel, LoopElem};
use crate::ring::{int, rat, Rational, RingElem, ShiftCenter};

/// One of the four bases, named by its arrow code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisId {
    /// `[0312]`, arrows ↑↑.
    #[serde(rename = "uu")]
    Uu,
    /// `[3021]`, arrows ↓↓.
    #[serde(rename = "dd")]
    Dd,
    /// `[0321]`, arrows ↓↑.
    #[serde(rename = "du")]
    Du,
    /// `[3012]`, arrows ↑↓.
    #[serde(rename = "ud")]
    Ud,
}

impl BasisId {
    pub const ALL: [BasisId; 4] = [BasisId::Uu, BasisId::Dd, BasisId::Du, BasisId::Ud];

    pub fn code(self) -> &'static str {
        match self {
            BasisId::Uu => "uu",
            BasisId::Dd => "dd",
            BasisId::Du => "du",
            BasisId::Ud => "ud",
        }
    }

    pub fn arrows(self) -> &'static str {
        match self {
            BasisId::Uu => "↑↑",
            BasisId::Dd => "↓↓",
            BasisId::Du => "↓↑",
            BasisId::Ud => "↑↓",
        }
    }

    /// The path label `[khij]`.
    pub fn path(self) -> PathLabel {
        let [k, h, i, j] = match self {
            BasisId::Uu => [0, 3, 1, 2],
            BasisId::Dd => [3, 0, 2, 1],
            BasisId::Du => [0, 3, 2, 1],
            BasisId::Ud => [3, 0, 1, 2],
        };
        PathLabel::new(k, h, i, j).expect("distinct indices")
    }

    pub fn from_path(label: PathLabel) -> Result<Self> {
        BasisId::ALL
            .into_iter()
            .find(|b| b.path() == label)
            .ok_or_else(|| Error::UnsupportedLabel(label.to_string()))
    }

    /// The variable the families are expanded in: `t-1` or `-t`.
    pub fn center(self) -> ShiftCenter {
        match self {
            BasisId::Uu | BasisId::Dd => ShiftCenter::TMinus1,
            BasisId::Du | BasisId::Ud => ShiftCenter::NegT,
        }
    }

    pub fn center_elem(self) -> RingElem {
        RingElem::from_poly(self.center().as_poly())
    }

    /// Signs of the seeds `A_0 = ±A`, `B_0 = ±B`.
    pub fn seed_signs(self) -> (i64, i64) {
        match self {
            BasisId::Uu => (1, 1),
            BasisId::Dd => (-1, -1),
            BasisId::Du => (-1, 1),
            BasisId::Ud => (1, -1),
        }
    }

    /// The generator whose slot a family occupies.
    pub fn slot(self, family: Family) -> GenLabel {
        let p = self.path();
        match family {
            Family::A => p.ij(),
            Family::B => p.kh(),
            Family::Psi => p.hi(),
        }
    }

    /// Smallest legal index of `family`; the family is `generator * center^(i - offset)`.
    pub fn family_generator(self, family: Family) -> LoopElem {
        let (sa, sb) = self.seed_signs();
        let one = RingElem::one;
        let zero = RingElem::zero;
        match family {
            Family::A => LoopElem::x(RingElem::from_int(sa)),
            Family::B => LoopElem::sigma_b().scale_rational(&int(sb)),
            Family::Psi => match self {
                BasisId::Uu => LoopElem::z(RingElem::t_minus_1()),
                BasisId::Dd => LoopElem::new(-one(), -RingElem::t(), zero()),
                BasisId::Du => LoopElem::y(RingElem::t()),
                BasisId::Ud => LoopElem::new(one(), zero(), -RingElem::t_minus_1()),
            },
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for BasisId {
    type Err = Error;

    /// Accepts `uu`, `0312`, `[0312]`, `b0312` and the arrow forms.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let key = s.trim_start_matches('b').trim_start_matches('[').trim_end_matches(']');
        BasisId::ALL
            .into_iter()
            .find(|b| {
                let label = b.path().to_string();
                key == b.code() || s == b.arrows() || key == label.trim_matches(['[', ']'])
            })
            .ok_or_else(|| Error::UnsupportedLabel(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    #[serde(rename = "psi")]
    Psi,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::A, Family::B, Family::Psi];

    pub fn min_index(self) -> u32 {
        match self {
            Family::Psi => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::Psi => "psi",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "psi" | "Psi" | "PSI" | "ψ" => Ok(Family::Psi),
            _ => Err(Error::Parse(crate::error::ParseError::new(0, ["A", "B", "psi"]))),
        }
    }
}

/// A named basis element such as `A^uu_3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisVector {
    pub basis: BasisId,
    pub family: Family,
    pub index: u32,
}

impl BasisVector {
    pub fn new(basis: BasisId, family: Family, index: u32) -> Result<Self> {
        if family == Family::Psi && index == 0 {
            return Err(Error::PsiIndexZero);
        }
        Ok(BasisVector { basis, family, index })
    }

    fn raw(basis: BasisId, family: Family, index: u32) -> Self {
        debug_assert!(index >= family.min_index());
        BasisVector { basis, family, index }
    }

    /// Same family and index, another basis.
    pub fn in_basis(self, basis: BasisId) -> Self {
        BasisVector { basis, ..self }
    }

    fn check(self) -> Result<Self> {
        BasisVector::new(self.basis, self.family, self.index)
    }
}

impl fmt::Display for BasisVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}", self.family, self.basis, self.index)
    }
}

/// Closed form of a basis element.
pub fn basis_elem(v: BasisVector) -> Result<LoopElem> {
    let v = v.check()?;
    let power = v.index - v.family.min_index();
    let gen = v.basis.family_generator(v.family);
    Ok(gen.scale(&v.basis.center_elem().pow(power)))
}

/// `(A_0, B_0)` as loop elements.
pub fn basis_seeds(b: BasisId) -> (LoopElem, LoopElem) {
    (
        b.family_generator(Family::A),
        b.family_generator(Family::B),
    )
}

/// Builds the nested-bracket expressions `A_0, B_0, psi_1, A_1, B_1, ...`
/// of one basis, sharing subtrees between consecutive terms.
#[derive(Clone, Debug)]
pub struct RecursiveBuilder {
    basis: BasisId,
    a: Vec<Arc<BracketExpr>>,
    b: Vec<Arc<BracketExpr>>,
    psi: Vec<Arc<BracketExpr>>,
}

impl RecursiveBuilder {
    pub fn new(basis: BasisId) -> Self {
        let (sa, sb) = basis.seed_signs();
        let signed = |s: i64, e: Arc<BracketExpr>| if s < 0 { BracketExpr::negate(e) } else { e };
        RecursiveBuilder {
            basis,
            a: vec![signed(sa, BracketExpr::gen_a())],
            b: vec![signed(sb, BracketExpr::gen_b())],
            psi: Vec::new(),
        }
    }

    pub fn basis(&self) -> BasisId {
        self.basis
    }

    fn extend_to(&mut self, n: usize) {
        let (sa, sb) = self.basis.seed_signs();
        let half = rat(1, 2);
        while self.a.len() <= n {
            let i = self.a.len();
            let (a_prev, b_prev) = (self.a[i - 1].clone(), self.b[i - 1].clone());
            // psi_i = A_{i-1}/2 + B_{i-1}/2 - sb/4 [A_{i-1}, B]
            let psi = BracketExpr::sum(
                BracketExpr::sum(
                    BracketExpr::scale(half.clone(), a_prev.clone()),
                    BracketExpr::scale(half.clone(), b_prev),
                ),
                BracketExpr::scale(
                    rat(-sb, 4),
                    BracketExpr::bracket(a_prev, BracketExpr::gen_b()),
                ),
            );
            // A_i = sa/2 [psi_i, A] - psi_i
            let a = BracketExpr::sum(
                BracketExpr::scale(rat(sa, 2), BracketExpr::bracket(psi.clone(), BracketExpr::gen_a())),
                BracketExpr::negate(psi.clone()),
            );
            // B_i = sb/2 [B, psi_i] - psi_i
            let b = BracketExpr::sum(
                BracketExpr::scale(rat(sb, 2), BracketExpr::bracket(BracketExpr::gen_b(), psi.clone())),
                BracketExpr::negate(psi.clone()),
            );
            self.psi.push(psi);
            self.a.push(a);
            self.b.push(b);
        }
    }

    pub fn expr(&mut self, v: BasisVector) -> Result<Arc<BracketExpr>> {
        let v = v.check()?;
        if v.basis != self.basis {
            return Err(Error::BasisMismatch { expected: self.basis, found: v.basis });
        }
        let i = v.index as usize;
        self.extend_to(i);
        Ok(match v.family {
            Family::A => self.a[i].clone(),
            Family::B => self.b[i].clone(),
            Family::Psi => self.psi[i - 1].clone(),
        })
    }
}

/// Recursive construction of one basis element from `A` and `B`.
pub fn basis_elem_recursive(v: BasisVector) -> Result<Arc<BracketExpr>> {
    RecursiveBuilder::new(v.basis).expr(v)
}

/// A finitely supported rational combination of vectors of one basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OCoords {
    basis: BasisId,
    terms: BTreeMap<BasisVector, Rational>,
}

impl OCoords {
    pub fn zero(basis: BasisId) -> Self {
        OCoords { basis, terms: BTreeMap::new() }
    }

    pub fn single(v: BasisVector) -> Self {
        let mut c = OCoords::zero(v.basis);
        c.terms.insert(v, Rational::one());
        c
    }

    pub fn basis(&self) -> BasisId {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, v: &BasisVector) -> Rational {
        self.terms.get(v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisVector, &Rational)> {
        self.terms.iter()
    }

    /// Adds `c * v`, dropping the entry if it cancels.
    pub fn add_term(&mut self, v: BasisVector, c: Rational) -> Result<()> {
        if v.basis != self.basis {
            return Err(Error::BasisMismatch { expected: self.basis, found: v.basis });
        }
        v.check()?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(v).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&v);
        }
        Ok(())
    }

    pub fn from_terms(
        basis: BasisId,
        terms: impl IntoIterator<Item = (BasisVector, Rational)>,
    ) -> Result<Self> {
        let mut c = OCoords::zero(basis);
        for (v, r) in terms {
            c.add_term(v, r)?;
        }
        Ok(c)
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut out = OCoords::zero(self.basis);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(v, r)| (*v, r * c)).collect();
        }
        out
    }

    /// `self + c * other`.
    pub fn add_scaled(&mut self, other: &OCoords, c: &Rational) -> Result<()> {
        for (v, r) in &other.terms {
            self.add_term(*v, r * c)?;
        }
        Ok(())
    }

    /// `Σ c_v basis_elem(v)`.
    pub fn to_loop(&self) -> LoopElem {
        self.terms
            .iter()
            .map(|(v, c)| basis_elem(*v).expect("stored vectors are valid").scale_rational(c))
            .sum()
    }

    /// Sum of the terms of one family, as a loop element.
    pub fn family_part(&self, family: Family) -> LoopElem {
        self.terms
            .iter()
            .filter(|(v, _)| v.family == family)
            .map(|(v, c)| basis_elem(*v).expect("stored vectors are valid").scale_rational(c))
            .sum()
    }
}

impl fmt::Display for OCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (v, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c.is_one() {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{c} {v}")?;
                }
            } else {
                let sign = if c < &Rational::zero() { '-' } else { '+' };
                let mag = num_traits::Signed::abs(c);
                if mag.is_one() {
                    write!(f, " {sign} {v}")?;
                } else {
                    write!(f, " {sign} {mag} {v}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    family: Family,
    index: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct OCoordsJson {
    basis: BasisId,
    terms: Vec<TermJson>,
}

impl Serialize for OCoords {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OCoordsJson {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(v, c)| TermJson { family: v.family, index: v.index, coeff: c.to_string() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OCoords {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = OCoordsJson::deserialize(d)?;
        let mut out = OCoords::zero(j.basis);
        for t in j.terms {
            let c = crate::ring::parse_rational(&t.coeff).map_err(D::Error::custom)?;
            let v = BasisVector::new(j.basis, t.family, t.index).map_err(D::Error::custom)?;
            out.add_term(v, c).map_err(D::Error::custom)?;
        }
        Ok(out)
    }
}

/// Coordinates of `u` in basis `b`.
///
/// Writing `u = x⊗(sA α) + B(sB β) + Ψ γ` with `Ψ` the `psi_1` vector and
/// `α, β, γ` polynomials in the center, the y and z components determine
/// `γ` after eliminating `β`; the rest is division.
pub fn coords(u: &LoopElem, b: BasisId) -> Result<OCoords> {
    if !u.in_onsager() {
        return Err(Error::NotInOnsager);
    }
    let (sa, sb) = b.seed_signs();
    let psi = b.family_generator(Family::Psi);
    let t = RingElem::t();
    let tm1 = RingElem::t_minus_1();
    let d = &(&tm1 * &psi.py) - &(&t * &psi.pz);
    let d_inv = d.inverse().ok_or(Error::NotInOnsager)?;
    let gamma = &(&(&tm1 * &u.py) - &(&t * &u.pz)) * &d_inv;
    let beta = (&u.py - &(&psi.py * &gamma)).div_t().scale(&int(sb));
    let alpha = (&u.px - &(&psi.px * &gamma)).scale(&int(sa));

    let mut out = OCoords::zero(b);
    for (family, part) in [(Family::A, &alpha), (Family::B, &beta), (Family::Psi, &gamma)] {
        let poly = part.as_poly().ok_or(Error::NotInOnsager)?;
        for (i, c) in poly.shift_coords(b.center()).into_iter().enumerate() {
            let v = BasisVector::raw(b, family, i as u32 + family.min_index());
            out.add_term(v, c)?;
        }
    }
    Ok(out)
}

/// Structure constants: `[v1, v2]` expanded in the common basis `b`.
pub fn bracket_coords(b: BasisId, v1: BasisVector, v2: BasisVector) -> Result<OCoords> {
    for v in [v1, v2] {
        if v.basis != b {
            return Err(Error::BasisMismatch { expected: b, found: v.basis });
        }
        v.check()?;
    }
    use Family::*;
    let n = v1.index + v2.index;
    let vec = |f, i| BasisVector::raw(b, f, i);
    let (terms, sign) = match (v1.family, v2.family) {
        (f1, f2) if f1 == f2 => (vec![], 1),
        (Psi, A) => (vec![(vec(Psi, n), 2), (vec(A, n), 2)], 1),
        (A, Psi) => (vec![(vec(Psi, n), 2), (vec(A, n), 2)], -1),
        (B, Psi) => (vec![(vec(B, n), 2), (vec(Psi, n), 2)], 1),
        (Psi, B) => (vec![(vec(B, n), 2), (vec(Psi, n), 2)], -1),
        (A, B) => (vec![(vec(A, n), 2), (vec(B, n), 2), (vec(Psi, n + 1), -4)], 1),
        (B, A) => (vec![(vec(A, n), 2), (vec(B, n), 2), (vec(Psi, n + 1), -4)], -1),
        _ => unreachable!("all family pairs covered"),
    };
    OCoords::from_terms(b, terms.into_iter().map(|(v, c)| (v, int(c * sign))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::evaluate;

    fn bv(b: BasisId, f: Family, i: u32) -> BasisVector {
        BasisVector::new(b, f, i).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            basis_elem(bv(BasisId::Uu, Family::A, 2)).unwrap(),
            LoopElem::x(RingElem::t_minus_1_pow(2))
        );
        assert_eq!(
            basis_elem(bv(BasisId::Du, Family::Psi, 1)).unwrap(),
            LoopElem::y(RingElem::t())
        );
        assert_eq!(basis_elem(bv(BasisId::Ud, Family::B, 0)).unwrap(), -LoopElem::sigma_b());
        assert_eq!(
            basis_elem(BasisVector { basis: BasisId::Uu, family: Family::Psi, index: 0 }),
            Err(Error::PsiIndexZero)
        );
        assert_eq!(BasisVector::new(BasisId::Uu, Family::Psi, 0), Err(Error::PsiIndexZero));
    }

    #[test]
    fn seeds() {
        let (a, b) = (LoopElem::sigma_a(), LoopElem::sigma_b());
        assert_eq!(basis_seeds(BasisId::Uu), (a.clone(), b.clone()));
        assert_eq!(basis_seeds(BasisId::Dd), (-a.clone(), -b.clone()));
        assert_eq!(basis_seeds(BasisId::Du), (-a.clone(), b.clone()));
        assert_eq!(basis_seeds(BasisId::Ud), (a, -b));
    }

    #[test]
    fn recursive_first_terms() {
        let e = basis_elem_recursive(bv(BasisId::Uu, Family::Psi, 1)).unwrap();
        assert_eq!(e.to_string(), "1/2 A + 1/2 B - 1/4 [A, B]");
        let e = basis_elem_recursive(bv(BasisId::Dd, Family::Psi, 1)).unwrap();
        assert_eq!(e.to_string(), "-1/2 A - 1/2 B - 1/4 [A, B]");
        let mut builder = RecursiveBuilder::new(BasisId::Ud);
        for f in Family::ALL {
            for i in f.min_index()..5 {
                let v = bv(BasisId::Ud, f, i);
                assert_eq!(evaluate(&builder.expr(v).unwrap()), basis_elem(v).unwrap(), "{v}");
            }
        }
        assert!(builder.expr(bv(BasisId::Uu, Family::A, 0)).is_err());
    }

    #[test]
    fn coords_examples() {
        let c = coords(&LoopElem::sigma_a(), BasisId::Uu).unwrap();
        assert_eq!(c, OCoords::single(bv(BasisId::Uu, Family::A, 0)));
        let c = coords(&LoopElem::x(RingElem::t()), BasisId::Uu).unwrap();
        assert_eq!(c.to_string(), "A^uu_0 + A^uu_1");
        let c = coords(&LoopElem::z(RingElem::t_minus_1()), BasisId::Uu).unwrap();
        assert_eq!(c.to_string(), "psi^uu_1");
        let c = coords(&LoopElem::x(RingElem::t()), BasisId::Du).unwrap();
        assert_eq!(c.to_string(), "A^du_1");
        assert_eq!(coords(&LoopElem::z(RingElem::one()), BasisId::Uu), Err(Error::NotInOnsager));
    }

    #[test]
    fn bracket_coords_examples() {
        let u = BasisId::Uu;
        assert!(bracket_coords(u, bv(u, Family::A, 2), bv(u, Family::A, 5)).unwrap().is_zero());
        let c = bracket_coords(u, bv(u, Family::A, 0), bv(u, Family::B, 0)).unwrap();
        assert_eq!(c.to_string(), "2 A^uu_0 + 2 B^uu_0 - 4 psi^uu_1");
        let d = BasisId::Ud;
        let c = bracket_coords(d, bv(d, Family::Psi, 1), bv(d, Family::A, 2)).unwrap();
        assert_eq!(c.to_string(), "2 A^ud_3 + 2 psi^ud_3");
        assert!(bracket_coords(u, bv(d, Family::A, 0), bv(u, Family::A, 0)).is_err());
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(bv(BasisId::Uu, Family::A, 3).to_string(), "A^uu_3");
        assert_eq!(bv(BasisId::Du, Family::Psi, 2).to_string(), "psi^du_2");
        let c = OCoords::from_terms(BasisId::Uu, [(bv(BasisId::Uu, Family::A, 3), int(-1))]).unwrap();
        assert_eq!(c.to_string(), "-1 A^uu_3");
        assert_eq!(OCoords::zero(BasisId::Uu).to_string(), "0");
        for b in BasisId::ALL {
            assert_eq!(b.code().parse::<BasisId>().unwrap(), b);
            assert_eq!(b.path().to_string().parse::<BasisId>().unwrap(), b);
            assert_eq!(b.arrows().parse::<BasisId>().unwrap(), b);
            assert_eq!(BasisId::from_path(b.path()).unwrap(), b);
        }
        assert_eq!("b3021".parse::<BasisId>().unwrap(), BasisId::Dd);
        assert!("0123".parse::<BasisId>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = OCoords::from_terms(
            BasisId::Du,
            [(bv(BasisId::Du, Family::B, 1), rat(-3, 4)), (bv(BasisId::Du, Family::Psi, 2), int(5))],
        )
        .unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<OCoords>(&s).unwrap(), c);
        let v = bv(BasisId::Ud, Family::Psi, 4);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"basis":"ud","family":"psi","index":4}"#);
    }
}
