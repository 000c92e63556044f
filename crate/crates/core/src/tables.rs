//! Summary tables of the four bases and of the generators `A`, `B` in each.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bases::{basis_elem, coords, BasisId, BasisVector, Family, OCoords};
use crate::likeness::PathLabel;
use crate::loop_algebra::{LoopElem, TensorStyle};
use crate::ring::{Rational, RingElem};

/// One family of one basis: `generator * center^(i)` is the element with
/// index `i + offset` (`offset` is 1 for psi, 0 otherwise).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRow {
    pub basis: BasisId,
    pub label: PathLabel,
    pub family: Family,
    pub symbol: String,
    pub closed_form: String,
    pub slot: String,
    pub generator: LoopElem,
    pub center: RingElem,
}

impl BasisRow {
    pub fn offset(&self) -> u32 {
        self.family.min_index()
    }

    /// The element with index `i + offset`.
    pub fn element(&self, i: u32) -> LoopElem {
        self.generator.scale(&self.center.pow(i))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRow {
    pub basis: BasisId,
    pub label: PathLabel,
    pub a: OCoords,
    pub b: OCoords,
}

fn closed_form(b: BasisId, f: Family) -> &'static str {
    use BasisId::*;
    use Family::*;
    match (b, f) {
        (Uu, A) => "x⊗(t-1)^i",
        (Uu, B) => "(y⊗t + z⊗(t-1))(t-1)^i",
        (Uu, Psi) => "z⊗(t-1)^{i+1}",
        (Dd, A) => "-x⊗(t-1)^i",
        (Dd, B) => "-(y⊗t + z⊗(t-1))(t-1)^i",
        (Dd, Psi) => "-(x⊗1 + y⊗t)(t-1)^i",
        (Du, A) => "-x⊗(-t)^i",
        (Du, B) => "(y⊗t + z⊗(t-1))(-t)^i",
        (Du, Psi) => "-y⊗(-t)^{i+1}",
        (Ud, A) => "x⊗(-t)^i",
        (Ud, B) => "-(y⊗t + z⊗(t-1))(-t)^i",
        (Ud, Psi) => "(x⊗1 - z⊗(t-1))(-t)^i",
    }
}

fn symbol(f: Family) -> &'static str {
    match f {
        Family::A => "A_i",
        Family::B => "B_i",
        Family::Psi => "psi_{i+1}",
    }
}

pub fn bases_table(style: TensorStyle) -> Vec<BasisRow> {
    let mut rows = Vec::new();
    for b in BasisId::ALL {
        for f in Family::ALL {
            let slot = b.slot(f);
            let first = BasisVector::new(b, f, f.min_index()).expect("minimal index is valid");
            rows.push(BasisRow {
                basis: b,
                label: b.path(),
                family: f,
                symbol: symbol(f).to_string(),
                closed_form: closed_form(b, f).replace('⊗', style.symbol()),
                slot: format!("X_{}{} ∩ O", slot.i(), slot.j()),
                generator: basis_elem(first).expect("minimal index is valid"),
                center: b.center_elem(),
            });
        }
    }
    rows
}

pub fn generators_table() -> Vec<GeneratorRow> {
    BasisId::ALL
        .into_iter()
        .map(|b| GeneratorRow {
            basis: b,
            label: b.path(),
            a: coords(&LoopElem::sigma_a(), b).expect("A lies in O"),
            b: coords(&LoopElem::sigma_b(), b).expect("B lies in O"),
        })
        .collect()
}

/// `±v` for unit multiples of one vector, the usual signed sum otherwise.
fn short(c: &OCoords) -> String {
    let mut it = c.iter();
    if let (Some((v, r)), None) = (it.next(), it.next()) {
        if *r == -Rational::one() {
            return format!("-{v}");
        }
    }
    c.to_string()
}

pub fn render_bases_table(rows: &[BasisRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{} {}  {:<10} {:<30} {}\n",
            r.label, r.basis, r.symbol, r.closed_form, r.slot
        ));
    }
    out
}

pub fn render_generators_table(rows: &[GeneratorRow]) -> String {
    let mut out = String::new();
    for r in rows {
        out.push_str(&format!(
            "{} {}  A = {}  B = {}\n",
            r.label,
            r.basis,
            short(&r.a),
            short(&r.b)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_rows() {
        let text = render_generators_table(&generators_table());
        assert!(text.contains("[3021] dd  A = -A^dd_0  B = -B^dd_0"), "{text}");
        assert!(text.contains("[0312] uu  A = A^uu_0  B = B^uu_0"), "{text}");
    }

    #[test]
    fn basis_rows_match_closed_forms() {
        let rows = bases_table(TensorStyle::Unicode);
        assert_eq!(rows.len(), 12);
        let psi = rows
            .iter()
            .find(|r| r.basis == BasisId::Uu && r.family == Family::Psi)
            .unwrap();
        assert_eq!(psi.closed_form, "z⊗(t-1)^{i+1}");
        assert_eq!(psi.slot, "X_31 ∩ O");
        for r in &rows {
            for i in 0..4 {
                let v = BasisVector::new(r.basis, r.family, i + r.offset()).unwrap();
                assert_eq!(r.element(i), basis_elem(v).unwrap());
            }
        }
    }
}
