//! Sparse bigraded polynomials in `x_1..x_n, y_1..y_n`.
//!
//! The diagonal coinvariant computations only ever touch bihomogeneous
//! pieces, so the central objects are monomials carrying separate `x` and
//! `y` exponent blocks and sparse polynomials over an exact coefficient
//! field.

use std::collections::BTreeMap;


use crate::field::Coeff;

/// A monomial `x^alpha y^beta` over `n` variable pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub xexp: Vec<u16>,
    pub yexp: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            xexp: vec![0; nvars],
            yexp: vec![0; nvars],
        }
    }

    pub fn nvars(&self) -> usize {
        self.xexp.len()
    }

    /// `(x-degree, y-degree)`.
    pub fn bidegree(&self) -> (u32, u32) {
        (
            self.xexp.iter().map(|&e| e as u32).sum(),
            self.yexp.iter().map(|&e| e as u32).sum(),
        )
    }

    pub fn total_degree(&self) -> u32 {
        let (a, b) = self.bidegree();
        a + b
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            xexp: self
                .xexp
                .iter()
                .zip(&other.xexp)
                .map(|(a, b)| a + b)
                .collect(),
            yexp: self
                .yexp
                .iter()
                .zip(&other.yexp)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise quotient, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let sub = |a: &[u16], b: &[u16]| -> Option<Vec<u16>> {
            a.iter()
                .zip(b)
                .map(|(x, y)| x.checked_sub(*y))
                .collect()
        };
        Some(Monomial {
            xexp: sub(&self.xexp, &other.xexp)?,
            yexp: sub(&self.yexp, &other.yexp)?,
        })
    }

    /// Swap the `x` and `y` blocks.
    pub fn swap_xy(&self) -> Monomial {
        Monomial {
            xexp: self.yexp.clone(),
            yexp: self.xexp.clone(),
        }
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.xexp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        for (i, &e) in self.yexp.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("y{}", i + 1)),
                _ => parts.push(format!("y{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// All exponent vectors of length `n` summing to `d`, in a fixed
/// deterministic order (first coordinate descending, then recursively).
pub fn compositions(d: u32, n: usize) -> Vec<Vec<u16>> {
    fn rec(d: u32, n: usize, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if n == 1 {
            let mut v = prefix.clone();
            v.push(d as u16);
            out.push(v);
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first as u16);
            rec(d - first, n - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, n, &mut Vec::new(), &mut out);
    out
}

/// All monomials of bidegree `(a, b)` in `n` variable pairs, ordered by the
/// fixed composition order on the `x` block, then the `y` block.
pub fn monomials_of_bidegree(nvars: usize, a: u32, b: u32) -> Vec<Monomial> {
    let xs = compositions(a, nvars);
    let ys = compositions(b, nvars);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            out.push(Monomial {
                xexp: x.clone(),
                yexp: y.clone(),
            });
        }
    }
    out
}

/// A sparse polynomial over the coefficient field `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C: Coeff> {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn monomial(mono: Monomial, c: C) -> Self {
        let nvars = mono.nvars();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var_x(i: usize, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.xexp[i] = 1;
        Self::monomial(m, C::one())
    }

    /// The variable `y_{i+1}`.
    pub fn var_y(i: usize, nvars: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.yexp[i] = 1;
        Self::monomial(m, C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Monomial) -> Option<&C> {
        self.terms.get(mono)
    }

    pub fn add_term(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly<C>) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> MultiPoly<C> {
        let mut out = MultiPoly::zero(self.nvars);
        if c.is_zero() {
            return out;
        }
        for (m, v) in &self.terms {
            out.terms.insert(m.clone(), v.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly<C>) -> MultiPoly<C> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }

    /// If the polynomial is bihomogeneous, its bidegree.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys();
        let first = it.next()?.bidegree();
        if it.all(|m| m.bidegree() == first) {
            Some(first)
        } else {
            None
        }
    }

    /// The bihomogeneous piece of bidegree `(a, b)`.
    pub fn bidegree_component(&self, a: u32, b: u32) -> MultiPoly<C> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.bidegree() == (a, b) {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Exchange the `x` and `y` variable blocks.
    pub fn swap_xy(&self) -> MultiPoly<C> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.swap_xy(), c.clone());
        }
        out
    }
}

impl<C: Coeff> std::fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Sort by total degree, then by the monomial's exponent blocks.
        let mut terms: Vec<(&Monomial, &C)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.total_degree(), (*m).clone()));
        let strs: Vec<String> = terms
            .into_iter()
            .map(|(m, c)| {
                let is_one = c.clone() - C::one();
                if num_traits::Zero::is_zero(&is_one) {
                    format!("{}", m)
                } else if *m == Monomial::one(self.nvars) {
                    format!("{}", c)
                } else {
                    format!("{}*{}", c, m)
                }
            })
            .collect();
        write!(f, "{}", strs.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat_int, Rational};

    #[test]
    fn composition_count_and_order() {
        let c = compositions(3, 2);
        assert_eq!(
            c,
            vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]
        );
        assert_eq!(compositions(5, 3).len(), 21); // C(7,2)
    }

    #[test]
    fn monomial_arithmetic() {
        let ms = monomials_of_bidegree(2, 1, 1);
        assert_eq!(ms.len(), 4);
        let m = &ms[0]; // x1*y1
        assert_eq!(m.bidegree(), (1, 1));
        let sq = m.mul(m);
        assert_eq!(sq.bidegree(), (2, 2));
        assert_eq!(sq.div(m).as_ref(), Some(m));
        assert_eq!(m.div(&sq), None);
    }

    #[test]
    fn poly_mul_matches_hand_expansion() {
        // (x1 - x2)(y1 - y2) = x1 y1 - x1 y2 - x2 y1 + x2 y2
        let p: MultiPoly<Rational> =
            MultiPoly::var_x(0, 2).sub(&MultiPoly::var_x(1, 2));
        let q: MultiPoly<Rational> =
            MultiPoly::var_y(0, 2).sub(&MultiPoly::var_y(1, 2));
        let prod = p.mul(&q);
        assert_eq!(prod.terms.len(), 4);
        assert_eq!(prod.bidegree(), Some((1, 1)));
        let m11 = Monomial {
            xexp: vec![1, 0],
            yexp: vec![0, 1],
        };
        assert_eq!(prod.coeff(&m11), Some(&rat_int(-1)));
        // swap_xy is an involution.
        assert_eq!(prod.swap_xy().swap_xy(), prod);
    }
}
