//! The cyclotomic fields `Q(zeta_k)` in the power basis.
//!
//! An element of conductor `k` is stored as the coefficient vector of
//! `1, zeta, ..., zeta^{phi(k)-1}` after reduction modulo the `k`-th
//! cyclotomic polynomial, so equality of elements at a common conductor is
//! equality of coefficient vectors.  Mixed-conductor arithmetic coerces both
//! operands into the compositum `Q(zeta_lcm)` first.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{Coeff, Rational};

/// Euler totient by trial-division factorisation.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Dense univariate integer polynomial, coefficients low degree first.
type ZPoly = Vec<BigInt>;

fn zpoly_trim(p: &mut ZPoly) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer polynomials; panics if the division is not
/// exact (which would indicate a bug in the cyclotomic recursion).
fn zpoly_div_exact(num: &ZPoly, den: &ZPoly) -> ZPoly {
    let mut rem = num.clone();
    zpoly_trim(&mut rem);
    let mut den = den.clone();
    zpoly_trim(&mut den);
    let dd = den.len() - 1;
    assert!(rem.len() > dd || (rem.len() == 1 && rem[0].is_zero()));
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let lead = &rem[i + dd];
        let (q, r) = lead.div_rem(&den[dd]);
        assert!(r.is_zero(), "non-exact polynomial division");
        if q.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            let prod = dc * &q;
            rem[i + j] -= prod;
        }
        quot[i] = q;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "non-exact polynomial division");
    quot
}

/// The `k`-th cyclotomic polynomial `Phi_k`, computed by dividing `x^k - 1`
/// by `Phi_d` for every proper divisor `d | k` (memoised).
pub fn cyclotomic_polynomial(k: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<ZPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&k) {
        return p.as_ref().clone();
    }
    assert!(k >= 1, "conductor must be positive");
    // x^k - 1
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = -BigInt::one();
    num[k as usize] = BigInt::one();
    let mut result = num;
    for d in 1..k {
        if k % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            result = zpoly_div_exact(&result, &phi_d);
        }
    }
    cache
        .write()
        .unwrap()
        .insert(k, Arc::new(result.clone()));
    result
}

/// Precomputed reduction data for one conductor: the power-basis
/// representation of `zeta^e` for `phi(k) <= e < k`.
struct Context {
    k: u32,
    phi: usize,
    /// `reduce[e - phi]` is the coefficient vector of `zeta^e` in the power
    /// basis, for `e` in `phi..k`.
    reduce: Vec<Vec<Rational>>,
}

fn context(k: u32) -> Arc<Context> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Context>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(ctx) = cache.read().unwrap().get(&k) {
        return ctx.clone();
    }
    let phi = euler_phi(k) as usize;
    let phi_poly = cyclotomic_polynomial(k);
    // zeta^phi = -(c_0 + c_1 zeta + ... + c_{phi-1} zeta^{phi-1}); Phi_k is monic.
    let base: Vec<Rational> = phi_poly[..phi]
        .iter()
        .map(|c| -Rational::from_integer(c.clone()))
        .collect();
    let mut reduce = Vec::with_capacity((k as usize).saturating_sub(phi));
    if k as usize > phi {
        reduce.push(base.clone());
        for _ in (phi + 1)..k as usize {
            let prev = reduce.last().unwrap().clone();
            // Multiply by zeta: shift up, folding the overflow through `base`.
            let mut next = vec![Rational::zero(); phi];
            for i in 0..phi - 1 {
                next[i + 1] = prev[i].clone();
            }
            let carry = &prev[phi - 1];
            if !carry.is_zero() {
                for i in 0..phi {
                    next[i] += carry * &base[i];
                }
            }
            reduce.push(next);
        }
    }
    let ctx = Arc::new(Context { k, phi, reduce });
    cache.write().unwrap().insert(k, ctx.clone());
    ctx
}

/// An element of `Q(zeta_k)` in the reduced power basis.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    /// Length `phi(conductor)`.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Build an element from a map `exponent -> coefficient` meaning
    /// `sum c_e zeta_k^e` (exponents taken modulo `k`).
    pub fn from_exponents(k: u32, terms: &[(i64, Rational)]) -> Self {
        let ctx = context(k);
        let mut raw = vec![Rational::zero(); k as usize];
        for (e, c) in terms {
            let idx = e.rem_euclid(k as i64) as usize;
            raw[idx] += c;
        }
        Self::reduce_raw(&ctx, raw)
    }

    /// Reduce a coefficient vector over `1..zeta^{k-1}` into the power basis.
    fn reduce_raw(ctx: &Context, mut raw: Vec<Rational>) -> Self {
        debug_assert!(raw.len() <= ctx.k as usize);
        for e in (ctx.phi..raw.len()).rev() {
            if raw[e].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut raw[e], Rational::zero());
            let row = &ctx.reduce[e - ctx.phi];
            for i in 0..ctx.phi {
                if !row[i].is_zero() {
                    raw[i] += &c * &row[i];
                }
            }
        }
        raw.truncate(ctx.phi);
        raw.resize(ctx.phi, Rational::zero());
        Cyclotomic {
            conductor: ctx.k,
            coeffs: raw,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn from_rational_at(k: u32, r: Rational) -> Self {
        let phi = euler_phi(k) as usize;
        let mut coeffs = vec![Rational::zero(); phi];
        coeffs[0] = r;
        Cyclotomic { conductor: k, coeffs }
    }

    /// Primitive `k`-th root of unity to the given power.
    pub fn root(k: u32, exponent: i64) -> Self {
        Cyclotomic::from_exponents(k, &[(exponent, Rational::one())])
    }

    /// Re-express this element at conductor `target` (a multiple of the
    /// current conductor): `zeta_k^e = zeta_target^{e * target/k}`.
    pub fn coerce(&self, target: u32) -> Self {
        if target == self.conductor {
            return self.clone();
        }
        assert!(
            target % self.conductor == 0,
            "coercion target must be a multiple of the conductor"
        );
        let stride = (target / self.conductor) as i64;
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64 * stride, c.clone()))
            .collect();
        Cyclotomic::from_exponents(target, &terms)
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else {
            let l = a.conductor.lcm(&b.conductor);
            (a.coerce(l), b.coerce(l))
        }
    }

    fn mul_impl(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(a, b);
        let ctx = context(a.conductor);
        let phi = ctx.phi;
        // Convolve, then fold exponents >= k and reduce modulo Phi_k.
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    conv[i + j] += ca * cb;
                }
            }
        }
        for e in (ctx.k as usize..conv.len()).rev() {
            if !conv[e].is_zero() {
                let c = std::mem::replace(&mut conv[e], Rational::zero());
                conv[e - ctx.k as usize] += c;
            }
        }
        // Entries at exponents >= k are zero after folding; drop them so the
        // generic reduction sees a vector of length < k.
        conv.truncate((ctx.k as usize).min(conv.len()));
        Cyclotomic::reduce_raw(&ctx, conv)
    }

    /// Extended-Euclid inverse modulo `Phi_k`.
    fn inv_impl(&self) -> Option<Cyclotomic> {
        if num_traits::Zero::is_zero(self) {
            return None;
        }
        let k = self.conductor;
        let phi_poly: Vec<Rational> = cyclotomic_polynomial(k)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        // Invariants: r0 = s0 * self (mod Phi), r1 = s1 * self (mod Phi).
        let mut r0 = phi_poly;
        let mut r1 = self.coeffs.clone();
        qpoly_trim(&mut r1);
        let mut s0: Vec<Rational> = vec![Rational::zero()];
        let mut s1: Vec<Rational> = vec![Rational::one()];
        while !(r1.len() == 1 && r1[0].is_zero()) {
            let (q, r) = qpoly_div_rem(&r0, &r1);
            let s_next = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s_next);
        }
        // r0 is a nonzero constant multiple of gcd = 1 (Phi_k irreducible).
        assert_eq!(r0.len(), 1, "cyclotomic inverse: unexpected gcd degree");
        let scale = r0[0].recip();
        let mut inv: Vec<Rational> = s0.iter().map(|c| c * &scale).collect();
        let ctx = context(k);
        inv.truncate(ctx.k as usize);
        Some(Cyclotomic::reduce_raw(&ctx, inv))
    }
}

fn qpoly_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn qpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qpoly_trim(&mut out);
    out
}

fn qpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    qpoly_trim(&mut out);
    out
}

fn qpoly_div_rem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    qpoly_trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![Rational::zero()], rem);
    }
    let lead_inv = den[dd].recip();
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = &rem[i + dd] * &lead_inv;
        if q.is_zero() {
            continue;
        }
        for (j, dc) in den.iter().enumerate() {
            let prod = dc * &q;
            rem[i + j] -= prod;
        }
        quot[i] = q;
    }
    qpoly_trim(&mut rem);
    qpoly_trim(&mut quot);
    (quot, rem)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let l = self.conductor.lcm(&other.conductor);
        self.coerce(l).coeffs == other.coerce(l).coeffs
    }
}

impl std::ops::Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = Cyclotomic::common(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        let (mut a, b) = Cyclotomic::common(&self, &rhs);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(mut self) -> Self {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::replace(c, Rational::zero());
        }
        self
    }
}

impl std::ops::Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        Cyclotomic::mul_impl(&self, &rhs)
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational_at(1, Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational_at(1, Rational::one())
    }
}

impl std::fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", r);
        }
        let mut parts = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let body = match e {
                0 => format!("{}", c),
                1 if c.is_one() => "z".to_string(),
                1 => format!("{}*z", c),
                _ if c.is_one() => format!("z^{}", e),
                _ => format!("{}*z^{}", c, e),
            };
            parts.push(body);
        }
        write!(f, "({})", parts.join(" + "))
    }
}

impl Coeff for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        self.inv_impl()
    }

    fn conj(&self) -> Self {
        let k = self.conductor as i64;
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| ((k - e as i64) % k, c.clone()))
            .collect();
        Cyclotomic::from_exponents(self.conductor, &terms)
    }

    fn from_rational(r: Rational) -> Self {
        Cyclotomic::from_rational_at(1, r)
    }

    fn root_of_unity(order: u32, exponent: i64) -> Option<Self> {
        Some(Cyclotomic::root(order, exponent))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}
