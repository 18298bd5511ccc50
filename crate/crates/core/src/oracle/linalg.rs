//! Exact integer row spaces via fraction-free elimination.
//!
//! Rows are reduced by cross-multiplication and renormalized by their gcd
//! after every elimination step, so entries stay modest at desk scale and
//! no rational arithmetic is needed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An incrementally built row space over the integers. Inserting a row
/// reports whether it was independent of the rows already present, which is
/// exactly what basis extraction needs.
#[derive(Debug, Default)]
pub(crate) struct IntegerRowSpace {
    /// Reduced rows, sorted by pivot column; pivot columns are distinct.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntegerRowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored rows; returns `true` (and stores the
    /// reduced row) if it enlarges the span.
    pub fn insert(&mut self, mut row: Vec<BigInt>) -> bool {
        for (pivot_col, pivot_row) in &self.rows {
            let c = row[*pivot_col].clone();
            if c.is_zero() {
                continue;
            }
            let p = pivot_row[*pivot_col].clone();
            for (r, pr) in row.iter_mut().zip(pivot_row.iter()) {
                *r = &*r * &p - pr * &c;
            }
            debug_assert!(row[*pivot_col].is_zero());
            normalize(&mut row);
        }
        match row.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(pivot_col) => {
                normalize(&mut row);
                let at = self.rows.partition_point(|(col, _)| *col < pivot_col);
                self.rows.insert(at, (pivot_col, row));
                true
            }
        }
    }
}

/// Divides a row by the gcd of its entries and makes the leading entry
/// positive.
fn normalize(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for c in row.iter() {
        if !c.is_zero() {
            g = g.gcd(c);
        }
    }
    if g.is_zero() {
        return;
    }
    let lead_negative = row
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if lead_negative {
        g = -g;
    }
    if !g.is_one() {
        for c in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}
