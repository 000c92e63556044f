//! Random elements for property checks.

use std::sync::Arc;

use rand::Rng;

use crate::expr::BracketExpr;
use crate::loop_algebra::LoopElem;
use crate::ring::{rat, Poly, Rational, RingElem};

/// A small nonzero-denominator rational, zero with some probability.
pub fn rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    if rng.random_bool(0.2) {
        return rat(0, 1);
    }
    rat(rng.random_range(-9..=9), rng.random_range(1..=4))
}

fn nonzero_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    let n = loop {
        let n = rng.random_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    rat(n, rng.random_range(1..=4))
}

/// Polynomial of degree at most `max_deg`.
pub fn poly<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> Poly {
    let deg = rng.random_range(0..=max_deg);
    Poly::from_coeffs((0..=deg).map(|_| rational(rng)).collect())
}

/// `p / t^a / (t-1)^b` with `deg p <= max_deg`, `a, b <= max_exp`.
pub fn ring_elem<R: Rng + ?Sized>(rng: &mut R, max_deg: usize, max_exp: u32) -> RingElem {
    let p = poly(rng, max_deg);
    RingElem::make(p, rng.random_range(0..=max_exp), rng.random_range(0..=max_exp))
}

pub fn loop_elem<R: Rng + ?Sized>(rng: &mut R, max_deg: usize, max_exp: u32) -> LoopElem {
    LoopElem::new(
        ring_elem(rng, max_deg, max_exp),
        ring_elem(rng, max_deg, max_exp),
        ring_elem(rng, max_deg, max_exp),
    )
}

/// An element of `O`: `x⊗p + y⊗t q + z⊗(t-1) r`, components of degree at most `max_deg`.
pub fn onsager_elem<R: Rng + ?Sized>(rng: &mut R, max_deg: usize) -> LoopElem {
    let low = max_deg.saturating_sub(1);
    LoopElem::new(
        RingElem::from_poly(poly(rng, max_deg)),
        RingElem::from_poly(&poly(rng, low) * &Poly::t()),
        RingElem::from_poly(&poly(rng, low) * &Poly::t_minus_1_pow(1)),
    )
}

/// A random tree of depth at most `depth`.
pub fn expr<R: Rng + ?Sized>(rng: &mut R, depth: u32) -> Arc<BracketExpr> {
    if depth == 0 || rng.random_bool(0.25) {
        return if rng.random_bool(0.5) { BracketExpr::gen_a() } else { BracketExpr::gen_b() };
    }
    let d = depth - 1;
    match rng.random_range(0..4) {
        0 => BracketExpr::negate(expr(rng, d)),
        1 => BracketExpr::scale(nonzero_rational(rng), expr(rng, d)),
        2 => BracketExpr::sum(expr(rng, d), expr(rng, d)),
        _ => BracketExpr::bracket(expr(rng, d), expr(rng, d)),
    }
}
