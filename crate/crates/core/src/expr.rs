//! Nested-bracket expressions in the generators `A` and `B`.
//!
//! Text grammar (whitespace is insignificant, `−` is accepted for `-`):
//!
//! ```text
//! Expr   := ['+' | '-'] Term (('+' | '-') Term)*
//! Term   := [Rational] Factor ['/' PosInt]
//! Factor := 'A' | 'B' | '[' Expr ',' Expr ']' | '(' Expr ')'
//! ```
//!
//! Trees are built from `Arc`s so the recursive basis constructions can
//! share subtrees; evaluation memoizes on node identity.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::loop_algebra::LoopElem;
use crate::ring::{scan_rational, Rational};
use crate::scan::Cursor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BracketExpr {
    GenA,
    GenB,
    Neg {
        child: Arc<BracketExpr>,
    },
    Scale {
        #[serde(with = "rational_text")]
        coeff: Rational,
        child: Arc<BracketExpr>,
    },
    Sum {
        left: Arc<BracketExpr>,
        right: Arc<BracketExpr>,
    },
    Bracket {
        left: Arc<BracketExpr>,
        right: Arc<BracketExpr>,
    },
}

mod rational_text {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        crate::ring::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

impl BracketExpr {
    pub fn gen_a() -> Arc<Self> {
        Arc::new(BracketExpr::GenA)
    }

    pub fn gen_b() -> Arc<Self> {
        Arc::new(BracketExpr::GenB)
    }

    pub fn negate(e: Arc<Self>) -> Arc<Self> {
        match &*e {
            BracketExpr::Neg { child } => child.clone(),
            BracketExpr::Scale { coeff, child } => BracketExpr::scale(-coeff, child.clone()),
            _ => Arc::new(BracketExpr::Neg { child: e }),
        }
    }

    /// `q * e`; `q` must be nonzero.
    pub fn scale(q: Rational, e: Arc<Self>) -> Arc<Self> {
        assert!(!q.is_zero(), "scale coefficients are nonzero");
        if q.is_one() {
            return e;
        }
        if q == -Rational::one() {
            return BracketExpr::negate(e);
        }
        match &*e {
            BracketExpr::Neg { child } => BracketExpr::scale(-q, child.clone()),
            BracketExpr::Scale { coeff, child } => BracketExpr::scale(q * coeff, child.clone()),
            _ => Arc::new(BracketExpr::Scale { coeff: q, child: e }),
        }
    }

    pub fn sum(left: Arc<Self>, right: Arc<Self>) -> Arc<Self> {
        Arc::new(BracketExpr::Sum { left, right })
    }

    pub fn difference(left: Arc<Self>, right: Arc<Self>) -> Arc<Self> {
        BracketExpr::sum(left, BracketExpr::negate(right))
    }

    /// `[left, right]`, with signs and scalars pulled out in front.
    pub fn bracket(left: Arc<Self>, right: Arc<Self>) -> Arc<Self> {
        match (&*left, &*right) {
            (BracketExpr::Neg { child }, _) => {
                BracketExpr::negate(BracketExpr::bracket(child.clone(), right))
            }
            (_, BracketExpr::Neg { child }) => {
                BracketExpr::negate(BracketExpr::bracket(left, child.clone()))
            }
            (BracketExpr::Scale { coeff, child }, _) => {
                BracketExpr::scale(coeff.clone(), BracketExpr::bracket(child.clone(), right))
            }
            (_, BracketExpr::Scale { coeff, child }) => {
                BracketExpr::scale(coeff.clone(), BracketExpr::bracket(left, child.clone()))
            }
            _ => Arc::new(BracketExpr::Bracket { left, right }),
        }
    }

    /// Number of distinct nodes (shared subtrees counted once).
    pub fn dag_size(self: &Arc<Self>) -> usize {
        fn walk(e: &Arc<BracketExpr>, seen: &mut std::collections::HashSet<*const BracketExpr>) {
            if !seen.insert(Arc::as_ptr(e)) {
                return;
            }
            match &**e {
                BracketExpr::GenA | BracketExpr::GenB => {}
                BracketExpr::Neg { child } | BracketExpr::Scale { child, .. } => walk(child, seen),
                BracketExpr::Sum { left, right } | BracketExpr::Bracket { left, right } => {
                    walk(left, seen);
                    walk(right, seen);
                }
            }
        }
        let mut seen = Default::default();
        walk(self, &mut seen);
        seen.len()
    }
}

/// Parses the text grammar.
pub fn parse(text: &str) -> Result<Arc<BracketExpr>, ParseError> {
    let mut cur = Cursor::new(text);
    let e = parse_expr(&mut cur)?;
    cur.finish()?;
    Ok(e)
}

fn eat_minus(cur: &mut Cursor<'_>) -> bool {
    cur.eat('-') || cur.eat('−')
}

fn parse_expr(cur: &mut Cursor<'_>) -> Result<Arc<BracketExpr>, ParseError> {
    let negate = if eat_minus(cur) {
        true
    } else {
        cur.eat('+');
        false
    };
    let first = parse_term(cur)?;
    let mut acc = if negate { BracketExpr::negate(first) } else { first };
    loop {
        if cur.eat('+') {
            acc = BracketExpr::sum(acc, parse_term(cur)?);
        } else if eat_minus(cur) {
            acc = BracketExpr::difference(acc, parse_term(cur)?);
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<Arc<BracketExpr>, ParseError> {
    cur.skip_ws();
    let at = cur.pos();
    let coeff = scan_rational(cur)?;
    let factor = parse_factor(cur)?;
    let mut q = coeff.unwrap_or_else(Rational::one);
    if cur.peek() == Some('/') {
        cur.eat('/');
        let d_at = cur.pos();
        let d: BigInt = cur.uint().ok_or_else(|| cur.error(["positive integer"]))?;
        if d.is_zero() {
            return Err(ParseError::new(d_at, ["positive integer"]));
        }
        q /= Rational::from_integer(d);
    }
    if q.is_zero() {
        return Err(ParseError::new(at, ["nonzero coefficient"]));
    }
    Ok(BracketExpr::scale(q, factor))
}

fn parse_factor(cur: &mut Cursor<'_>) -> Result<Arc<BracketExpr>, ParseError> {
    if cur.eat('A') {
        Ok(BracketExpr::gen_a())
    } else if cur.eat('B') {
        Ok(BracketExpr::gen_b())
    } else if cur.eat('[') {
        let left = parse_expr(cur)?;
        cur.expect(',')?;
        let right = parse_expr(cur)?;
        cur.expect(']')?;
        Ok(BracketExpr::bracket(left, right))
    } else if cur.eat('(') {
        let e = parse_expr(cur)?;
        cur.expect(')')?;
        Ok(e)
    } else {
        Err(cur.error(["'A'", "'B'", "'['", "'('"]))
    }
}

impl FromStr for BracketExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse(s).map(Arc::unwrap_or_clone)
    }
}

/// The loop element an expression denotes.
pub fn evaluate(e: &Arc<BracketExpr>) -> LoopElem {
    let mut memo = HashMap::new();
    eval_memo(e, &mut memo)
}

fn eval_memo(e: &Arc<BracketExpr>, memo: &mut HashMap<*const BracketExpr, LoopElem>) -> LoopElem {
    let key = Arc::as_ptr(e);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let v = match &**e {
        BracketExpr::GenA => LoopElem::sigma_a(),
        BracketExpr::GenB => LoopElem::sigma_b(),
        BracketExpr::Neg { child } => -eval_memo(child, memo),
        BracketExpr::Scale { coeff, child } => eval_memo(child, memo).scale_rational(coeff),
        BracketExpr::Sum { left, right } => eval_memo(left, memo) + eval_memo(right, memo),
        BracketExpr::Bracket { left, right } => {
            let l = eval_memo(left, memo);
            l.bracket(&eval_memo(right, memo))
        }
    };
    memo.insert(key, v.clone());
    v
}

/// Equality of the denoted loop elements.
pub fn expr_equal(e1: &Arc<BracketExpr>, e2: &Arc<BracketExpr>) -> bool {
    evaluate(e1) == evaluate(e2)
}

pub fn render(e: &BracketExpr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

fn summands<'a>(e: &'a BracketExpr, acc: &mut Vec<&'a BracketExpr>) {
    match e {
        BracketExpr::Sum { left, right } => {
            summands(left, acc);
            summands(right, acc);
        }
        _ => acc.push(e),
    }
}

fn write_expr(e: &BracketExpr, out: &mut String) {
    let mut terms = Vec::new();
    summands(e, &mut terms);
    for (k, t) in terms.into_iter().enumerate() {
        let (negative, body) = signed_term(t);
        match (k, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
}

/// A summand as a sign and an unsigned `Term`.
fn signed_term(e: &BracketExpr) -> (bool, String) {
    match e {
        BracketExpr::Neg { child } => (true, term_body(child)),
        BracketExpr::Scale { coeff, child } => {
            let negative = coeff.is_negative();
            (negative, format!("{} {}", coeff.abs(), factor(child)))
        }
        _ => (false, factor(e)),
    }
}

fn term_body(e: &BracketExpr) -> String {
    match e {
        BracketExpr::GenA | BracketExpr::GenB | BracketExpr::Bracket { .. } => factor(e),
        _ => format!("({})", render(e)),
    }
}

fn factor(e: &BracketExpr) -> String {
    match e {
        BracketExpr::GenA => "A".into(),
        BracketExpr::GenB => "B".into(),
        BracketExpr::Bracket { left, right } => format!("[{}, {}]", render(left), render(right)),
        _ => format!("({})", render(e)),
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, RingElem};

    fn p(s: &str) -> Arc<BracketExpr> {
        parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(*p("A"), BracketExpr::GenA);
        assert_eq!(
            *p("[A,B]"),
            BracketExpr::Bracket { left: BracketExpr::gen_a(), right: BracketExpr::gen_b() }
        );
        let e = p("1/2 A + 1/2 B - 1/4 [A,B]");
        assert_eq!(e.to_string(), "1/2 A + 1/2 B - 1/4 [A, B]");
        assert_eq!(evaluate(&e), LoopElem::z(RingElem::t_minus_1()));
        assert!(expr_equal(&e, &p("A/2 + B/2 - 1/4[A,B]")));
        assert!(expr_equal(&p("−A"), &p("-1 A")));
    }

    #[test]
    fn parse_errors() {
        let err = parse("").unwrap_err();
        assert_eq!(err.position, 0);
        let err = parse("[A, B").unwrap_err();
        assert_eq!(err.position, 5);
        assert_eq!(err.expected, vec!["']'".to_string()]);
        let err = parse("A + C").unwrap_err();
        assert_eq!(err.position, 4);
        assert!(parse("A/0").is_err());
        assert!(parse("0 A").is_err());
        assert!(parse("A B").is_err());
    }

    #[test]
    fn evaluate_examples() {
        assert!(evaluate(&p("[A,[A,[A,B]]] - 4[A,B]")).is_zero());
        assert_eq!(evaluate(&p("A")), LoopElem::sigma_a());
        assert!(expr_equal(&p("[A,B]"), &p("-[B,A]")));
        assert!(expr_equal(&p("[B,[B,[B,A]]]"), &p("4[B,A]")));
    }

    #[test]
    fn render_examples() {
        let ab = BracketExpr::bracket(BracketExpr::gen_a(), BracketExpr::gen_b());
        assert_eq!(ab.to_string(), "[A, B]");
        assert_eq!(BracketExpr::scale(rat(-1, 4), ab.clone()).to_string(), "-1/4 [A, B]");
        let e = BracketExpr::sum(
            BracketExpr::gen_a(),
            BracketExpr::negate(BracketExpr::sum(BracketExpr::gen_b(), ab.clone())),
        );
        assert_eq!(e.to_string(), "A - (B + [A, B])");
        assert!(expr_equal(&p(&e.to_string()), &e));
        let nested = BracketExpr::bracket(BracketExpr::negate(BracketExpr::gen_a()), ab);
        assert_eq!(nested.to_string(), "-[A, [A, B]]");
    }

    #[test]
    fn smart_constructors() {
        let a = BracketExpr::gen_a();
        assert_eq!(BracketExpr::negate(BracketExpr::negate(a.clone())), a);
        assert_eq!(BracketExpr::scale(rat(1, 1), a.clone()), a);
        let e = BracketExpr::scale(rat(2, 3), BracketExpr::scale(rat(3, 4), a.clone()));
        assert_eq!(e.to_string(), "1/2 A");
    }

    #[test]
    fn json_round_trip() {
        let e = p("-1/4 [A, [B, A]] + 2 B");
        let s = serde_json::to_string(&e).unwrap();
        assert!(s.contains(r#""coeff":"-1/4""#));
        let back: Arc<BracketExpr> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn shared_subtrees_evaluate_once() {
        let mut e = BracketExpr::gen_a();
        for _ in 0..60 {
            e = BracketExpr::sum(e.clone(), e);
        }
        assert_eq!(e.dag_size(), 61);
        assert_eq!(evaluate(&e), LoopElem::sigma_a().scale_rational(&Rational::from_integer(BigInt::one() << 60)));
    }
}
