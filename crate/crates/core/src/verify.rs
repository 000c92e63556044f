//! Self-checks of every module, grouped into suites.
//!
//! Each check draws its random inputs from its own seeded stream, so a
//! report is reproducible whatever order rayon runs the checks in.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{
    basis_elem, bracket_coords, coords, BasisId, BasisVector, Family, RecursiveBuilder,
};
use crate::corpus::worked_examples;
use crate::error::Error;
use crate::expr::{evaluate, parse, render, BracketExpr};
use crate::likeness::{
    decompose_canonical, decompose_onsager, decompose_path, is_like, like_dg_both_orders,
};
use crate::loop_algebra::{std_gen, GenLabel, LoopElem};
use crate::random;
use crate::ring::{int, Poly, RingAut, RingElem, ShiftCenter};
use crate::symmetry::{apply_basic, apply_perm, Basic, Perm};
use crate::transitions::{aut_image, transition, transition_via, Swap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ring,
    Loop,
    Symmetry,
    Likeness,
    Bases,
    Transitions,
    Expressions,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Ring,
        Suite::Loop,
        Suite::Symmetry,
        Suite::Likeness,
        Suite::Bases,
        Suite::Transitions,
        Suite::Expressions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Loop => "loop",
            Suite::Symmetry => "symmetry",
            Suite::Likeness => "likeness",
            Suite::Bases => "bases",
            Suite::Transitions => "transitions",
            Suite::Expressions => "expressions",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(crate::error::ParseError::new(0, Suite::ALL.map(Suite::name))))
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    /// Largest basis index (or power) exercised by index-driven checks.
    pub max_index: u32,
    /// Number of random inputs per randomized check.
    pub samples: usize,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config { max_index: 8, samples: 100, seed: 0x0005_a9e7 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn totals(&self) -> (usize, usize) {
        self.checks
            .iter()
            .fold((0, 0), |(p, f), c| (p + c.passed, f + c.failed))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "{status} {:<12} {:<28} passed {:>6}  failed {:>4}",
                c.suite.name(),
                c.name,
                c.passed,
                c.failed
            )?;
            for msg in &c.failures {
                writeln!(f, "       {msg}")?;
            }
        }
        let (p, fl) = self.totals();
        write!(f, "total: {} checks, {p} cases passed, {fl} failed", self.checks.len())
    }
}

struct Tally {
    passed: usize,
    failed: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { passed: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }
}

type CheckFn = fn(&Config, &mut ChaCha8Rng, &mut Tally);

fn checks() -> Vec<(Suite, &'static str, CheckFn)> {
    vec![
        (Suite::Ring, "ring axioms", ring_axioms),
        (Suite::Ring, "automorphism orders", ring_aut_orders),
        (Suite::Ring, "path identities", ring_path_identities),
        (Suite::Ring, "shift coordinates", ring_shift_round_trip),
        (Suite::Loop, "jacobi", loop_jacobi),
        (Suite::Loop, "bracket oracle", loop_bracket_oracle),
        (Suite::Loop, "tetrahedron relations", loop_tetrahedron),
        (Suite::Loop, "onsager closure", loop_onsager_closure),
        (Suite::Symmetry, "generator orders", sym_orders),
        (Suite::Symmetry, "homomorphism", sym_homomorphism),
        (Suite::Symmetry, "bracket preserved", sym_automorphism),
        (Suite::Symmetry, "generator equivariance", sym_equivariance),
        (Suite::Symmetry, "G preserves O", sym_g_invariance),
        (Suite::Likeness, "canonical decomposition", like_canonical),
        (Suite::Likeness, "path decompositions", like_paths),
        (Suite::Likeness, "onsager decompositions", like_onsager),
        (Suite::Likeness, "slot bases", like_slot_bases),
        (Suite::Likeness, "G transport", like_g_transport),
        (Suite::Likeness, "dg orderings agree", like_dg_orders),
        (Suite::Bases, "recursion = closed form", bases_recursion),
        (Suite::Bases, "bracket tables", bases_bracket_tables),
        (Suite::Bases, "coords round trip", bases_coords_round_trip),
        (Suite::Bases, "slot membership", bases_slots),
        (Suite::Bases, "worked examples", bases_worked_examples),
        (Suite::Transitions, "semantic", trans_semantic),
        (Suite::Transitions, "round trip", trans_round_trip),
        (Suite::Transitions, "automorphism images", trans_aut_images),
        (Suite::Transitions, "diagram commutes", trans_diagram),
        (Suite::Expressions, "parse of render", expr_parse_render),
        (Suite::Expressions, "homomorphism", expr_homomorphism),
        (Suite::Expressions, "values in O", expr_in_onsager),
    ]
}

/// Runs the checks of the given suites, concurrently.
pub fn run(suites: &[Suite], cfg: &Config) -> Report {
    let selected: Vec<_> = checks()
        .into_iter()
        .enumerate()
        .filter(|(_, (s, _, _))| suites.contains(s))
        .collect();
    let checks = selected
        .into_par_iter()
        .map(|(k, (suite, name, f))| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(k as u64));
            let mut tally = Tally::new();
            f(cfg, &mut rng, &mut tally);
            CheckResult {
                suite,
                name,
                passed: tally.passed,
                failed: tally.failed,
                failures: tally.failures,
            }
        })
        .collect();
    Report { checks }
}

fn ring_axioms(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let a = random::ring_elem(rng, 8, 4);
        let b = random::ring_elem(rng, 8, 4);
        let c = random::ring_elem(rng, 8, 4);
        t.check(&(&a * &b) * &c == &a * &(&b * &c), || format!("assoc: {a}, {b}, {c}"));
        t.check(&a * &b == &b * &a, || format!("comm: {a}, {b}"));
        t.check(&a + &b == &b + &a, || format!("add comm: {a}, {b}"));
        t.check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distrib: {a}, {b}, {c}"));
    }
}

fn ring_aut_orders(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let a = random::ring_elem(rng, 6, 3);
        let phi = |x: &RingElem| x.apply_aut(RingAut::Phi);
        t.check(phi(&phi(&phi(&a))) == a, || format!("phi^3: {a}"));
        t.check(phi(&phi(&a)) == a.apply_aut(RingAut::Phi2), || format!("phi^2: {a}"));
        let tau = a.apply_aut(RingAut::TauA);
        t.check(tau.apply_aut(RingAut::TauA) == a, || format!("tauA^2: {a}"));
    }
}

fn ring_path_identities(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    let (tt, tp, tpp) = (RingElem::t(), RingElem::t_prime(), RingElem::t_double_prime());
    for n in 1..=cfg.max_index.max(1) {
        let partial: RingElem = (0..n).fold(RingElem::zero(), |acc, j| &acc + &tp.pow(j));
        t.check(&tt * &tp.pow(n) == &tt - &partial, || format!("t t'^{n}"));
        t.check(&tt * &tpp.pow(n) == &tpp.pow(n) - &tpp.pow(n - 1), || format!("t t''^{n}"));
    }
}

fn ring_shift_round_trip(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let p = random::poly(rng, 10);
        for center in [ShiftCenter::TMinus1, ShiftCenter::NegT] {
            let c = p.shift_coords(center);
            t.check(Poly::from_shift_coords(&c, center) == p, || format!("{p} at {center:?}"));
        }
    }
}

fn loop_jacobi(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let u = random::loop_elem(rng, 6, 2);
        let v = random::loop_elem(rng, 6, 2);
        let w = random::loop_elem(rng, 6, 2);
        let j = u.bracket(&v.bracket(&w)) + v.bracket(&w.bracket(&u)) + w.bracket(&u.bracket(&v));
        t.check(j.is_zero(), || format!("jacobi: {u}; {v}; {w}"));
    }
}

/// Expands `[u, v]` over the nine pairs of equitable basis vectors.
#[allow(clippy::needless_range_loop)]
pub fn bracket_by_expansion(u: &LoopElem, v: &LoopElem) -> LoopElem {
    // [e_a, e_b] in (x, y, z) coordinates for the equitable basis.
    let table = |a: usize, b: usize| -> [i64; 3] {
        match (a, b) {
            (0, 1) => [2, 2, 0],
            (1, 0) => [-2, -2, 0],
            (1, 2) => [0, 2, 2],
            (2, 1) => [0, -2, -2],
            (2, 0) => [2, 0, 2],
            (0, 2) => [-2, 0, -2],
            _ => [0, 0, 0],
        }
    };
    let uc = u.components();
    let vc = v.components();
    let mut out = [RingElem::zero(), RingElem::zero(), RingElem::zero()];
    for a in 0..3 {
        for b in 0..3 {
            let prod = uc[a] * vc[b];
            for (k, c) in table(a, b).into_iter().enumerate() {
                if c != 0 {
                    out[k] = &out[k] + &prod.scale(&int(c));
                }
            }
        }
    }
    let [x, y, z] = out;
    LoopElem::new(x, y, z)
}

fn loop_bracket_oracle(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples * 10 {
        let u = random::loop_elem(rng, 4, 2);
        let v = random::loop_elem(rng, 4, 2);
        t.check(u.bracket(&v) == bracket_by_expansion(&u, &v), || format!("{u}; {v}"));
    }
}

fn loop_tetrahedron(_: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for g in GenLabel::all() {
        t.check((std_gen(g) + std_gen(g.reversed())).is_zero(), || format!("{g} + reversed"));
    }
    for i in 0..4u8 {
        for j in 0..4u8 {
            for k in 0..4u8 {
                if i == j || j == k || i == k {
                    continue;
                }
                let xij = std_gen(GenLabel::new(i, j).unwrap());
                let xjk = std_gen(GenLabel::new(j, k).unwrap());
                let rhs = (xij.clone() + xjk.clone()).scale_rational(&int(2));
                t.check(xij.bracket(&xjk) == rhs, || format!("[x_{i}{j}, x_{j}{k}]"));
            }
        }
    }
    for g in GenLabel::all() {
        let (x, y) = (std_gen(g), std_gen(g.opposite()));
        t.check(x.dolan_grady_holds(&y), || format!("dolan-grady {g}"));
    }
}

fn loop_onsager_closure(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let u = random::onsager_elem(rng, 6);
        let v = random::onsager_elem(rng, 6);
        t.check(u.bracket(&v).in_onsager(), || format!("{u}; {v}"));
    }
}

fn sym_orders(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let ap = |g, u: &LoopElem| apply_basic(g, u);
    for _ in 0..cfg.samples {
        let u = random::loop_elem(rng, 4, 2);
        for g in [Basic::Rho, Basic::Tau, Basic::Mu] {
            t.check(ap(g, &ap(g, &u)) == u, || format!("{g}^2 on {u}"));
        }
        t.check(ap(Basic::Phi, &ap(Basic::Phi, &ap(Basic::Phi, &u))) == u, || format!("phi^3 on {u}"));
        t.check(
            ap(Basic::Rho, &ap(Basic::Tau, &u)) == ap(Basic::Tau, &ap(Basic::Rho, &u)),
            || format!("rho tau on {u}"),
        );
    }
}

fn sym_homomorphism(_: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let u = random::loop_elem(rng, 4, 2);
    let perms = Perm::all();
    let images: Vec<LoopElem> = perms.iter().map(|&q| apply_perm(q, &u)).collect();
    for &p in &perms {
        for (k, &q) in perms.iter().enumerate() {
            t.check(apply_perm(p.compose(q), &u) == apply_perm(p, &images[k]), || {
                format!("{p} . {q}")
            });
        }
    }
}

fn sym_automorphism(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples.div_ceil(4) {
        let u = random::loop_elem(rng, 4, 2);
        let v = random::loop_elem(rng, 4, 2);
        for g in Basic::ALL {
            let lhs = apply_basic(g, &u.bracket(&v));
            let rhs = apply_basic(g, &u).bracket(&apply_basic(g, &v));
            t.check(lhs == rhs, || format!("{g} on [{u}, {v}]"));
        }
    }
}

fn sym_equivariance(_: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for p in Perm::all() {
        for g in GenLabel::all() {
            let image = GenLabel::new(p.apply(g.i()), p.apply(g.j())).unwrap();
            t.check(apply_perm(p, &std_gen(g)) == std_gen(image), || format!("{p} on {g}"));
        }
    }
}

fn sym_g_invariance(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let rho_tau = Basic::Rho.perm().compose(Basic::Tau.perm());
    for _ in 0..cfg.samples {
        let u = random::onsager_elem(rng, 6);
        for p in [Basic::Rho.perm(), Basic::Tau.perm(), rho_tau] {
            t.check(apply_perm(p, &u).in_onsager(), || format!("{p} on {u}"));
        }
    }
}

fn like_canonical(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let zero = decompose_canonical(&LoopElem::zero());
    t.check(zero.kh.is_zero() && zero.hi.is_zero() && zero.ij.is_zero(), || "zero input".into());
    for _ in 0..cfg.samples {
        let u = random::loop_elem(rng, 8, 3);
        let p = decompose_canonical(&u);
        t.check(p.sum() == u, || format!("recompose {u}"));
        for (g, part) in p.slots() {
            t.check(is_like(g, part), || format!("{g} slot of {u}"));
        }
        // Directness: a sum of slot elements splits back into its summands.
        let pieces = [
            LoopElem::sigma_b().scale(&random::ring_elem(rng, 4, 2)),
            LoopElem::z(random::ring_elem(rng, 4, 2)),
            LoopElem::x(random::ring_elem(rng, 4, 2)),
        ];
        let q = decompose_canonical(&pieces.iter().cloned().sum());
        t.check([&q.kh, &q.hi, &q.ij] == [&pieces[0], &pieces[1], &pieces[2]], || {
            format!("split of {} + {} + {}", pieces[0], pieces[1], pieces[2])
        });
    }
}

fn like_paths(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let labels: Vec<_> = Perm::all()
        .into_iter()
        .map(|p| {
            let [a, b, c, d] = [0u8, 3, 1, 2].map(|i| p.apply(i));
            crate::likeness::PathLabel::new(a, b, c, d).unwrap()
        })
        .collect();
    for _ in 0..cfg.samples.div_ceil(10) {
        let u = random::loop_elem(rng, 4, 2);
        for &label in &labels {
            let p = decompose_path(label, &u);
            t.check(p.sum() == u, || format!("{label} recompose {u}"));
            for (g, part) in p.slots() {
                t.check(is_like(g, part), || format!("{label} {g} slot of {u}"));
            }
        }
    }
}

fn like_onsager(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let u = random::onsager_elem(rng, 8);
        for b in BasisId::ALL {
            match decompose_onsager(b.path(), &u) {
                Ok(p) => {
                    t.check(p.sum() == u, || format!("{} recompose {u}", b.path()));
                    for (g, part) in p.slots() {
                        t.check(part.in_onsager() && is_like(g, part), || {
                            format!("{} {g} slot of {u}", b.path())
                        });
                    }
                }
                Err(e) => t.check(false, || format!("{} on {u}: {e}", b.path())),
            }
        }
    }
}

fn like_slot_bases(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    let [g03, g31, g12] = [(0, 3), (3, 1), (1, 2)].map(|(i, j)| GenLabel::new(i, j).unwrap());
    for n in 0..=cfg.max_index {
        let tn = RingElem::t_pow(n as i64);
        let cases = [
            (g03, LoopElem::sigma_b().scale(&tn)),
            (g31, LoopElem::z(&RingElem::t_minus_1() * &tn)),
            (g12, LoopElem::x(tn.clone())),
        ];
        for (g, u) in cases {
            t.check(u.in_onsager() && is_like(g, &u), || format!("{g} t^{n}"));
        }
    }
}

fn like_g_transport(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    let rho = Basic::Rho.perm();
    let tau = Basic::Tau.perm();
    let routes = [
        (rho, BasisId::Dd),
        (tau, BasisId::Du),
        (rho.compose(tau), BasisId::Ud),
    ];
    for _ in 0..cfg.samples.div_ceil(4) {
        let u = random::onsager_elem(rng, 6);
        let base = decompose_onsager(BasisId::Uu.path(), &u).expect("u in O");
        for (g, target) in routes {
            let image = apply_perm(g, &u);
            let expected = decompose_onsager(target.path(), &image).expect("image in O");
            let moved = [&base.kh, &base.hi, &base.ij].map(|p| apply_perm(g, p));
            t.check(moved == [expected.kh, expected.hi, expected.ij], || {
                format!("{g} to {} on {u}", target.path())
            });
        }
    }
}

fn like_dg_orders(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let u = random::loop_elem(rng, 4, 2);
        let g = std_gen(GenLabel::new(1, 2).unwrap());
        let like = g.scale(&random::ring_elem(rng, 4, 2));
        for label in GenLabel::all() {
            for v in [&u, &like] {
                let (a, b) = like_dg_both_orders(label, v);
                t.check(a == b, || format!("{label} on {v}"));
            }
        }
    }
}

fn vectors(max_index: u32) -> impl Iterator<Item = BasisVector> {
    BasisId::ALL.into_iter().flat_map(move |b| {
        Family::ALL.into_iter().flat_map(move |f| {
            (f.min_index()..=max_index.max(f.min_index()))
                .map(move |i| BasisVector::new(b, f, i).unwrap())
        })
    })
}

fn bases_recursion(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for b in BasisId::ALL {
        let mut builder = RecursiveBuilder::new(b);
        for v in vectors(cfg.max_index).filter(|v| v.basis == b) {
            let e = builder.expr(v).expect("valid vector");
            t.check(evaluate(&e) == basis_elem(v).unwrap(), || format!("{v}"));
        }
    }
}

fn bases_bracket_tables(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for b in BasisId::ALL {
        let vs: Vec<_> = vectors(cfg.max_index).filter(|v| v.basis == b).collect();
        for &v1 in &vs {
            for &v2 in &vs {
                if v1.index + v2.index > cfg.max_index {
                    continue;
                }
                let actual = basis_elem(v1).unwrap().bracket(&basis_elem(v2).unwrap());
                let table = bracket_coords(b, v1, v2).expect("same basis");
                t.check(table.to_loop() == actual, || format!("[{v1}, {v2}] = {table}"));
            }
        }
    }
}

fn bases_coords_round_trip(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let u = random::onsager_elem(rng, cfg.max_index.max(1) as usize);
        for b in BasisId::ALL {
            match coords(&u, b) {
                Ok(c) => t.check(c.to_loop() == u, || format!("{b}: {u}")),
                Err(e) => t.check(false, || format!("{b}: {u}: {e}")),
            }
        }
    }
}

fn bases_slots(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for v in vectors(cfg.max_index) {
        let e = basis_elem(v).unwrap();
        t.check(e.in_onsager() && is_like(v.basis.slot(v.family), &e), || format!("{v}"));
    }
}

fn bases_worked_examples(_: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for ex in worked_examples() {
        let ok = parse(ex.text)
            .map(|e| evaluate(&e) == basis_elem(ex.vector).unwrap())
            .unwrap_or(false);
        t.check(ok, || format!("{} = {}", ex.vector, ex.text));
    }
}

fn trans_semantic(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for src in BasisId::ALL {
        for dst in BasisId::ALL {
            for v in vectors(cfg.max_index).filter(|v| v.basis == src) {
                let ok = transition(src, dst, v)
                    .map(|c| c.to_loop() == basis_elem(v.in_basis(dst)).unwrap())
                    .unwrap_or(false);
                t.check(ok, || format!("{src} -> {dst} for {v}"));
            }
        }
    }
}

fn trans_round_trip(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for src in BasisId::ALL {
        for dst in BasisId::ALL {
            for v in vectors(cfg.max_index).filter(|v| v.basis == src) {
                // dst vector over src, then every src vector back over dst.
                let forward = transition(src, dst, v).unwrap();
                let mut back = crate::bases::OCoords::zero(dst);
                for (w, c) in forward.iter() {
                    back.add_scaled(&transition(dst, src, w.in_basis(dst)).unwrap(), c).unwrap();
                }
                t.check(back == crate::bases::OCoords::single(v.in_basis(dst)), || {
                    format!("{src} <-> {dst} for {v}: {back}")
                });
            }
        }
    }
}

fn trans_aut_images(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    for g in [Swap::Rho, Swap::Tau] {
        for v in vectors(cfg.max_index) {
            let lhs = apply_basic(g.basic(), &basis_elem(v).unwrap());
            t.check(lhs == basis_elem(aut_image(g, v)).unwrap(), || format!("{g:?} on {v}"));
        }
    }
}

fn trans_diagram(cfg: &Config, _: &mut ChaCha8Rng, t: &mut Tally) {
    let corners = [
        (BasisId::Uu, BasisId::Ud, BasisId::Dd, BasisId::Du),
        (BasisId::Dd, BasisId::Du, BasisId::Uu, BasisId::Ud),
    ];
    for (src, dst, m1, m2) in corners {
        for v in vectors(cfg.max_index).filter(|v| v.basis == src) {
            let a = transition_via(src, m1, dst, v).unwrap();
            let b = transition_via(src, m2, dst, v).unwrap();
            t.check(a == b, || format!("{src} -> {dst} for {v}"));
        }
    }
}

fn expr_parse_render(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let e = random::expr(rng, 6);
        let text = render(&e);
        let ok = parse(&text).map(|back| evaluate(&back) == evaluate(&e)).unwrap_or(false);
        t.check(ok, || text);
    }
    for ex in worked_examples() {
        let e = parse(ex.text).expect("corpus parses");
        let ok = parse(&render(&e)).map(|back| evaluate(&back) == evaluate(&e)).unwrap_or(false);
        t.check(ok, || format!("{}", ex.vector));
    }
}

fn expr_homomorphism(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let a = random::expr(rng, 4);
        let b = random::expr(rng, 4);
        let lhs = evaluate(&std::sync::Arc::new(BracketExpr::Bracket { left: a.clone(), right: b.clone() }));
        t.check(lhs == evaluate(&a).bracket(&evaluate(&b)), || format!("[{a}, {b}]"));
    }
}

fn expr_in_onsager(cfg: &Config, rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..cfg.samples {
        let e = random::expr(rng, 6);
        t.check(evaluate(&e).in_onsager(), || render(&e));
    }
}
