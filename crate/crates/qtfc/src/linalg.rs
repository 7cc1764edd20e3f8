//! Deterministic exact Gaussian elimination.
//!
//! Rows are processed in the order given, each new row is reduced against
//! the pivots found so far, and its first nonzero column becomes a new
//! pivot.  No row or column reordering takes place, so identical inputs
//! yield identical echelon bases.

use num_traits::Zero;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::field::Coeff;

/// An incrementally built echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon<C: Coeff> {
    ncols: usize,
    /// Echelon rows, each normalised via [`Coeff::normalize_row`].
    rows: Vec<Vec<C>>,
    /// `pivots[i]` is the pivot column of `rows[i]`.
    pivots: Vec<usize>,
}

impl<C: Coeff> Echelon<C> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<C>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the current basis in place.
    pub fn reduce(&self, v: &mut [C]) {
        debug_assert_eq!(v.len(), self.ncols);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            // factor = v[p] / row[p]
            let factor = v[p].mul_ref(&row[p].inv().expect("pivot is nonzero"));
            for j in p..self.ncols {
                if !row[j].is_zero() {
                    let neg = -factor.mul_ref(&row[j]);
                    let sum = std::mem::replace(&mut v[j], C::zero()) + neg;
                    v[j] = sum;
                }
            }
        }
    }

    /// Insert a row; returns the new pivot column if the row was
    /// independent of the basis so far.
    pub fn insert(&mut self, mut v: Vec<C>) -> Option<usize> {
        self.reduce(&mut v);
        let pivot = v.iter().position(|c| !c.is_zero())?;
        C::normalize_row(&mut v);
        self.rows.push(v);
        self.pivots.push(pivot);
        Some(pivot)
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &[C]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }
}

/// Row-reduce a list of equal-length rows over a common field.  Returns the
/// rank, the echelon rows (in insertion order of their first appearance as
/// new pivots) and the pivot columns.
pub fn row_reduce<C: Coeff>(rows: &[Vec<C>]) -> (usize, Vec<Vec<C>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut ech = Echelon::new(ncols);
    for r in rows {
        assert_eq!(r.len(), ncols, "rows must share a length");
        ech.insert(r.clone());
    }
    (ech.rank(), ech.rows, ech.pivots)
}

/// Conductor-checked wrapper for cyclotomic matrices: all entries must
/// already live at one common conductor.
pub fn row_reduce_cyclotomic(
    rows: &[Vec<Cyclotomic>],
) -> Result<(usize, Vec<Vec<Cyclotomic>>, Vec<usize>)> {
    let mut conductor: Option<u32> = None;
    for r in rows {
        for c in r {
            if c.is_zero() || c.as_rational().is_some() {
                continue;
            }
            match conductor {
                None => conductor = Some(c.conductor()),
                Some(k) if k == c.conductor() => {}
                Some(k) => return Err(Error::ConductorMismatch(k, c.conductor())),
            }
        }
    }
    Ok(row_reduce(rows))
}
