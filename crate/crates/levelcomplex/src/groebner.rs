//! S-pair verification that the 2-minors form a Groebner basis.
//!
//! This module never *completes* a basis; it only certifies one. For every
//! pair of 2-minors the S-polynomial is formed and fully reduced modulo the
//! whole minor set under the given order. A nonzero remainder is reported
//! as a failing pair.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::Error;
use crate::order::{Minor2, Monomial, MonomialOrder, OrderTable};
use crate::shape::MatrixShape;

/// Sparse integer polynomial keyed by exponent vectors.
///
/// Coefficients stay tiny here (every generator has unit leading
/// coefficient), but they are tracked exactly.
#[derive(Clone, Debug)]
struct Poly {
    shape: MatrixShape,
    terms: HashMap<Vec<u8>, i128>,
}

impl Poly {
    fn zero(shape: MatrixShape) -> Self {
        Poly { shape, terms: HashMap::new() }
    }

    fn from_minor(shape: MatrixShape, minor: Minor2) -> Self {
        let mut poly = Poly::zero(shape);
        poly.add_term(&minor.diagonal_term(shape), 1);
        poly.add_term(&minor.antidiagonal_term(shape), -1);
        poly
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mono: &Monomial, coeff: i128) {
        if coeff == 0 {
            return;
        }
        let key = mono.exponents().to_vec();
        let entry = self.terms.entry(key).or_insert(0);
        *entry = entry.checked_add(coeff).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(mono.exponents());
        }
    }

    /// Leading term under the order table.
    fn leading(&self, table: &OrderTable) -> Option<(Monomial, i128)> {
        let mut best: Option<(Monomial, i128)> = None;
        for (key, &coeff) in &self.terms {
            let mono = monomial_from_exponents(self.shape, key);
            match &best {
                None => best = Some((mono, coeff)),
                Some((cur, _)) => {
                    if table.compare(&mono, cur).expect("same shape") == Ordering::Greater {
                        best = Some((mono, coeff));
                    }
                }
            }
        }
        best
    }

    /// Adds `coeff * mono * other` to `self`.
    fn add_scaled(&mut self, coeff: i128, mono: &Monomial, other: &Poly) {
        for (key, &c) in &other.terms {
            let term = monomial_from_exponents(self.shape, key).mul(mono);
            let scaled = c.checked_mul(coeff).expect("coefficient overflow");
            self.add_term(&term, scaled);
        }
    }
}

fn monomial_from_exponents(shape: MatrixShape, exponents: &[u8]) -> Monomial {
    let cells: Vec<_> = (0..exponents.len())
        .flat_map(|k| std::iter::repeat(shape.cell_at(k)).take(exponents[k] as usize))
        .collect();
    Monomial::from_cells(shape, &cells).expect("exponent key is in range")
}

/// Outcome of the S-pair sweep.
#[derive(Clone, Debug)]
pub struct GroebnerReport {
    /// Number of generator pairs whose S-polynomial was reduced.
    pub pairs_checked: usize,
    /// Pairs whose S-polynomial did not reduce to zero.
    pub failing_pairs: Vec<(Minor2, Minor2)>,
}

impl GroebnerReport {
    /// True when every S-polynomial reduced to zero.
    pub fn is_groebner_basis(&self) -> bool {
        self.failing_pairs.is_empty()
    }
}

/// Checks that the set of all 2-minors is a Groebner basis under `order`.
///
/// Every pair is checked; no pair-skipping criteria are applied. Division
/// steps always pick the lowest generator index whose leading term divides,
/// so runs are reproducible.
pub fn verify_groebner_basis(
    shape: MatrixShape,
    order: &MonomialOrder,
) -> Result<GroebnerReport, Error> {
    let table = OrderTable::new(shape, order)?;
    let minors = Minor2::all(shape);
    let polys: Vec<Poly> = minors.iter().map(|&mr| Poly::from_minor(shape, mr)).collect();
    let leads: Vec<(Monomial, i128)> = polys
        .iter()
        .map(|p| p.leading(&table).expect("minors are nonzero"))
        .collect();

    let mut failing_pairs = Vec::new();
    let mut pairs_checked = 0;
    for a in 0..polys.len() {
        for b in a + 1..polys.len() {
            pairs_checked += 1;
            let s_poly = s_polynomial(&polys[a], &leads[a], &polys[b], &leads[b]);
            let remainder = reduce(s_poly, &polys, &leads, &table);
            if !remainder.is_zero() {
                failing_pairs.push((minors[a], minors[b]));
            }
        }
    }
    Ok(GroebnerReport { pairs_checked, failing_pairs })
}

fn s_polynomial(f: &Poly, f_lead: &(Monomial, i128), g: &Poly, g_lead: &(Monomial, i128)) -> Poly {
    let lcm = f_lead.0.lcm(&g_lead.0);
    let mut s = Poly::zero(f.shape);
    // Leading coefficients are +-1, so 1/lc equals lc.
    s.add_scaled(f_lead.1, &lcm.div(&f_lead.0), f);
    s.add_scaled(-g_lead.1, &lcm.div(&g_lead.0), g);
    s
}

/// Full reduction: top-reduces while possible, otherwise moves the leading
/// term into the (discarded) remainder tail and keeps going. Returns what
/// could not be reduced.
fn reduce(mut poly: Poly, basis: &[Poly], leads: &[(Monomial, i128)], table: &OrderTable) -> Poly {
    let mut remainder = Poly::zero(poly.shape);
    while let Some((lt, lc)) = poly.leading(table) {
        let divisor = leads.iter().position(|(lm, _)| lm.divides(&lt));
        match divisor {
            Some(idx) => {
                let quotient = lt.div(&leads[idx].0);
                // lc / lc_g with lc_g = +-1.
                poly.add_scaled(-lc * leads[idx].1, &quotient, &basis[idx]);
            }
            None => {
                remainder.add_term(&lt, lc);
                poly.add_term(&lt, -lc);
            }
        }
    }
    remainder
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minors_are_groebner_for_builtin_orders() {
        let shape = MatrixShape::new(2, 3).unwrap();
        for order in [
            MonomialOrder::PaperRows,
            MonomialOrder::PaperDiagonals,
            MonomialOrder::NaturalRowMajor,
        ] {
            let report = verify_groebner_basis(shape, &order).unwrap();
            assert_eq!(report.pairs_checked, 3);
            assert!(report.is_groebner_basis(), "order {}", order.label());
        }
    }

    #[test]
    fn pair_count_3x4() {
        let shape = MatrixShape::new(3, 4).unwrap();
        let report = verify_groebner_basis(shape, &MonomialOrder::PaperRows).unwrap();
        assert_eq!(report.pairs_checked, 153);
        assert!(report.is_groebner_basis());
    }
}
