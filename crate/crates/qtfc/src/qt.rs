//! Polynomials in `q, t` with integer coefficients, Laurent polynomials in
//! `q`, and the classical `q`- and `q,t`-analogues built from them.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A polynomial in `q` and `t` with integer coefficients, keyed by
/// `(q-exponent, t-exponent)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QTPoly {
    pub terms: BTreeMap<(u32, u32), i64>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly::default()
    }

    pub fn one() -> Self {
        QTPoly::term(0, 0, 1)
    }

    pub fn term(q: u32, t: u32, c: i64) -> Self {
        let mut p = QTPoly::zero();
        p.add_term(q, t, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, q: u32, t: u32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((q, t)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&(q, t));
        }
    }

    pub fn add(&self, other: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(q, t), &c) in &other.terms {
            out.add_term(q, t, c);
        }
        out
    }

    pub fn sub(&self, other: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&(q, t), &c) in &other.terms {
            out.add_term(q, t, -c);
        }
        out
    }

    pub fn mul(&self, other: &QTPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(q1, t1), &c1) in &self.terms {
            for (&(q2, t2), &c2) in &other.terms {
                out.add_term(q1 + q2, t1 + t2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(q, t), &c) in &self.terms {
            out.add_term(q + a, t + b, c);
        }
        out
    }

    /// Value at `q = t = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exchange `q` and `t`.
    pub fn swap_qt(&self) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&(q, t), &c) in &self.terms {
            out.add_term(t, q, c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }

    /// Maximal `q`- and `t`-exponents appearing (zero polynomial: `(0,0)`).
    pub fn degrees(&self) -> (u32, u32) {
        let q = self.terms.keys().map(|&(q, _)| q).max().unwrap_or(0);
        let t = self.terms.keys().map(|&(_, t)| t).max().unwrap_or(0);
        (q, t)
    }

    /// Substitute per [`Specialization`], producing a Laurent polynomial in
    /// the single surviving variable.
    pub fn specialize(&self, mode: Specialization) -> LaurentQPoly {
        let mut out = LaurentQPoly::zero();
        for (&(q, t), &c) in &self.terms {
            let e = match mode {
                Specialization::TOne => q as i64,
                Specialization::QOne => t as i64,
                Specialization::TQInverse => q as i64 - t as i64,
                Specialization::QTInverse => t as i64 - q as i64,
            };
            out.add_term(e, c);
        }
        out
    }

    /// Render in the crate's canonical text format: terms sorted by total
    /// degree, then by `q`-exponent, ascending.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().cloned().collect();
        keys.sort_by_key(|&(q, t)| (q + t, q));
        let parts: Vec<String> = keys
            .into_iter()
            .map(|(q, t)| {
                let c = self.terms[&(q, t)];
                format_term(c, &[("q", q as i64), ("t", t as i64)])
            })
            .collect();
        parts.join(" + ")
    }
}

/// The single-variable substitutions supported on [`QTPoly`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Specialization {
    /// `t := 1`, leaving a polynomial in `q`.
    TOne,
    /// `q := 1`, leaving a polynomial in `t` (reported in the `q` slot).
    QOne,
    /// `t := q^{-1}`.
    TQInverse,
    /// `q := t^{-1}` (reported as a Laurent polynomial in `t`).
    QTInverse,
}

fn format_term(c: i64, vars: &[(&str, i64)]) -> String {
    let mut parts = Vec::new();
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        }
    }
    if parts.is_empty() {
        format!("{}", c)
    } else if c == 1 {
        parts.join("*")
    } else if c == -1 {
        format!("-{}", parts.join("*"))
    } else {
        format!("{}*{}", c, parts.join("*"))
    }
}

/// A Laurent polynomial in `q` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentQPoly {
    pub terms: BTreeMap<i64, i64>,
}

impl LaurentQPoly {
    pub fn zero() -> Self {
        LaurentQPoly::default()
    }

    pub fn one() -> Self {
        LaurentQPoly::term(0, 1)
    }

    pub fn term(e: i64, c: i64) -> Self {
        let mut p = LaurentQPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &LaurentQPoly) -> LaurentQPoly {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentQPoly) -> LaurentQPoly {
        let mut out = self.clone();
        for (&e, &c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentQPoly) -> LaurentQPoly {
        let mut out = LaurentQPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &other.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by `q^a`.
    pub fn shift(&self, a: i64) -> LaurentQPoly {
        let mut out = LaurentQPoly::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e + a, c);
        }
        out
    }

    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Exact division, or an error if the divisor does not divide exactly.
    /// Works on the underlying ordinary polynomials after clearing the
    /// minimal exponents.
    pub fn div_exact(&self, den: &LaurentQPoly) -> Result<LaurentQPoly> {
        if den.is_zero() {
            return Err(Error::Domain("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(LaurentQPoly::zero());
        }
        let nmin = *self.terms.keys().next().unwrap();
        let dmin = *den.terms.keys().next().unwrap();
        let nmax = *self.terms.keys().last().unwrap();
        let dmax = *den.terms.keys().last().unwrap();
        // Dense long division on shifted copies.
        let nlen = (nmax - nmin + 1) as usize;
        let dlen = (dmax - dmin + 1) as usize;
        if nlen < dlen {
            return Err(Error::Domain("non-exact polynomial division".into()));
        }
        let mut num: Vec<i64> = vec![0; nlen];
        for (&e, &c) in &self.terms {
            num[(e - nmin) as usize] = c;
        }
        let mut dvec: Vec<i64> = vec![0; dlen];
        for (&e, &c) in &den.terms {
            dvec[(e - dmin) as usize] = c;
        }
        let lead = dvec[dlen - 1];
        let mut quot = vec![0i64; nlen - dlen + 1];
        for i in (0..quot.len()).rev() {
            let c = num[i + dlen - 1];
            if c % lead != 0 {
                return Err(Error::Domain("non-exact polynomial division".into()));
            }
            let q = c / lead;
            quot[i] = q;
            if q != 0 {
                for (j, &dc) in dvec.iter().enumerate() {
                    num[i + j] -= q * dc;
                }
            }
        }
        if num.iter().any(|&c| c != 0) {
            return Err(Error::Domain("non-exact polynomial division".into()));
        }
        let mut out = LaurentQPoly::zero();
        for (i, &c) in quot.iter().enumerate() {
            out.add_term(i as i64 + nmin - dmin, c);
        }
        Ok(out)
    }

    /// Render with terms sorted by ascending exponent.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&e, &c)| format_term(c, &[("q", e)]))
            .collect();
        parts.join(" + ")
    }
}

/// The `q,t`-analogue `[n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}`;
/// `[0]_{q,t} = 0`.
pub fn qt_bracket(n: u32) -> QTPoly {
    let mut p = QTPoly::zero();
    for i in 0..n {
        p.add_term(n - 1 - i, i, 1);
    }
    p
}

/// The `q`-analogue `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_bracket(n: u32) -> LaurentQPoly {
    let mut p = LaurentQPoly::zero();
    for i in 0..n {
        p.add_term(i as i64, 1);
    }
    p
}

/// The Gaussian binomial coefficient `[n choose k]_q` via the Pascal
/// recurrence (all-integer intermediate results).
pub fn q_binomial(n: u32, k: u32) -> LaurentQPoly {
    if k > n {
        return LaurentQPoly::zero();
    }
    // row[j] = [i choose j]_q as i grows.
    let mut row: Vec<LaurentQPoly> = vec![LaurentQPoly::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(LaurentQPoly::one());
        for j in 1..i {
            // [i choose j] = [i-1 choose j-1] + q^j [i-1 choose j]
            let mut v = row[j as usize - 1].clone();
            if (j as usize) < row.len() {
                v = v.add(&row[j as usize].shift(j as i64));
            }
            next.push(v);
        }
        next.push(LaurentQPoly::one());
        row = next;
    }
    row[k as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        assert_eq!(qt_bracket(0), QTPoly::zero());
        assert_eq!(qt_bracket(1), QTPoly::one());
        let b3 = qt_bracket(3); // q^2 + qt + t^2
        assert_eq!(b3.eval_one(), 3);
        assert!(b3.is_symmetric());
        assert_eq!(b3.specialize(Specialization::TOne), q_bracket(3));
        assert_eq!(q_bracket(4).eval_one(), 4);
    }

    #[test]
    fn q_binomial_matches_products() {
        // [4 choose 2]_q = [4]! / ([2]! [2]!) = 1 + q + 2q^2 + q^3 + q^4
        let b = q_binomial(4, 2);
        let expected = q_bracket(3).mul(&q_bracket(4)).div_exact(&q_bracket(2)).unwrap();
        assert_eq!(b, expected);
        assert_eq!(b.eval_one(), 6);
        // Symmetry [n choose k] = [n choose n-k].
        assert_eq!(q_binomial(7, 3), q_binomial(7, 4));
    }

    #[test]
    fn exact_division_detects_remainders() {
        let num = q_bracket(6); // divisible by [3]_q and [2]_q
        assert!(num.div_exact(&q_bracket(3)).is_ok());
        assert!(num.div_exact(&q_bracket(2)).is_ok());
        assert!(num.div_exact(&q_bracket(4)).is_err());
    }

    #[test]
    fn specializations() {
        // p = q^2 t + q t^3
        let mut p = QTPoly::zero();
        p.add_term(2, 1, 1);
        p.add_term(1, 3, 1);
        let s = p.specialize(Specialization::TQInverse);
        assert_eq!(s, LaurentQPoly::term(1, 1).add(&LaurentQPoly::term(-2, 1)));
        let t1 = p.specialize(Specialization::TOne);
        assert_eq!(t1, LaurentQPoly::term(2, 1).add(&LaurentQPoly::term(1, 1)));
    }

    #[test]
    fn text_format_ordering() {
        // 1 + 2q + 3 q^2 t -> total degree then q-exponent, ascending.
        let mut p = QTPoly::zero();
        p.add_term(0, 0, 1);
        p.add_term(1, 0, 2);
        p.add_term(2, 1, 3);
        assert_eq!(p.to_text(), "1 + 2*q + 3*q^2*t");
        let mut b = QTPoly::zero();
        b.add_term(1, 1, 1);
        b.add_term(0, 4, 1);
        assert_eq!(b.to_text(), "q*t + t^4");
        assert_eq!(
            LaurentQPoly::term(-2, 1).add(&LaurentQPoly::one()).to_text(),
            "q^-2 + 1"
        );
    }
}
