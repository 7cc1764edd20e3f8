//! Extended Shi arrangements `Shi^(m)(W)` over exact rational arithmetic.
//!
//! Regions are encoded by integer level vectors over the positive roots;
//! feasibility of a level vector is decided by Fourier-Motzkin elimination
//! on strict inequalities, which also produces a rational witness point
//! that is re-checked against every constraint.

use num_traits::{One, Signed, Zero};

use crate::catalan::{positive_roots, PosetType};
use crate::error::{Error, Result};
use crate::field::{rat_int, Rational};
use crate::qt::LaurentQPoly;

/// Default cap on the number of feasibility checks in region enumeration.
pub const DEFAULT_CANDIDATE_CAP: u64 = 10_000_000;

/// A strict inequality `coeffs . x < rhs`.
#[derive(Clone, Debug)]
pub struct StrictIneq {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl StrictIneq {
    /// `coeffs . x > rhs` as a `<` constraint.
    pub fn greater(coeffs: Vec<Rational>, rhs: Rational) -> StrictIneq {
        StrictIneq {
            coeffs: coeffs.into_iter().map(|c| -c).collect(),
            rhs: -rhs,
        }
    }

    pub fn less(coeffs: Vec<Rational>, rhs: Rational) -> StrictIneq {
        StrictIneq { coeffs, rhs }
    }

    fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs: Rational = self
            .coeffs
            .iter()
            .zip(x)
            .map(|(c, v)| c * v)
            .fold(Rational::zero(), |a, b| a + b);
        lhs < self.rhs
    }
}

/// Decide feasibility of a system of strict inequalities over `Q^dim` by
/// Fourier-Motzkin elimination.  Returns a rational witness point, verified
/// against every input constraint, or `None` if the system is infeasible.
pub fn fm_feasible(ineqs: &[StrictIneq], dim: usize) -> Option<Vec<Rational>> {
    let witness = fm_rec(ineqs, dim)?;
    debug_assert!(ineqs.iter().all(|c| c.holds_at(&witness)));
    // Independent re-check of the witness (not just in debug builds).
    if ineqs.iter().all(|c| c.holds_at(&witness)) {
        Some(witness)
    } else {
        None
    }
}

fn fm_rec(ineqs: &[StrictIneq], dim: usize) -> Option<Vec<Rational>> {
    if dim == 0 {
        // Only constant constraints remain: 0 < rhs must hold.
        if ineqs.iter().all(|c| c.rhs.is_positive()) {
            return Some(Vec::new());
        }
        return None;
    }
    let v = dim - 1;
    let mut uppers: Vec<(Vec<Rational>, Rational)> = Vec::new(); // x_v < bound(x')
    let mut lowers: Vec<(Vec<Rational>, Rational)> = Vec::new(); // x_v > bound(x')
    let mut rest: Vec<StrictIneq> = Vec::new();
    for c in ineqs {
        let a = c.coeffs.get(v).cloned().unwrap_or_else(Rational::zero);
        if a.is_zero() {
            rest.push(StrictIneq {
                coeffs: c.coeffs[..v].to_vec(),
                rhs: c.rhs.clone(),
            });
        } else {
            // a x_v + r . x' < rhs  ->  x_v <> (rhs - r . x') / a
            let inv = a.recip();
            let coeffs: Vec<Rational> =
                c.coeffs[..v].iter().map(|r| -(r * &inv)).collect();
            let rhs = &c.rhs * &inv;
            if a.is_positive() {
                uppers.push((coeffs, rhs));
            } else {
                lowers.push((coeffs, rhs));
            }
        }
    }
    // Cross-combine: lower < upper for every pair.
    for (lc, lr) in &lowers {
        for (uc, ur) in &uppers {
            let coeffs: Vec<Rational> = lc.iter().zip(uc).map(|(l, u)| l - u).collect();
            let rhs = ur - lr;
            rest.push(StrictIneq { coeffs, rhs });
        }
    }
    let prefix = fm_rec(&rest, v)?;
    let eval = |c: &[Rational], r: &Rational| -> Rational {
        let dot: Rational = c
            .iter()
            .zip(&prefix)
            .map(|(a, b)| a * b)
            .fold(Rational::zero(), |x, y| x + y);
        dot + r.clone()
    };
    let ub = uppers.iter().map(|(c, r)| eval(c, r)).min();
    let lb = lowers.iter().map(|(c, r)| eval(c, r)).max();
    let value = match (lb, ub) {
        (None, None) => Rational::zero(),
        (Some(l), None) => l + Rational::one(),
        (None, Some(u)) => u - Rational::one(),
        (Some(l), Some(u)) => (l + u) / rat_int(2),
    };
    let mut witness = prefix;
    witness.push(value);
    Some(witness)
}

/// A rational realization of the positive roots as linear forms.
#[derive(Clone, Debug)]
pub struct Realization {
    pub kind: PosetType,
    pub dim: usize,
    /// One linear form per positive root.
    pub forms: Vec<Vec<Rational>>,
}

/// Build the linear forms `(alpha, .)` for the positive roots: types A-D in
/// the orthonormal `e`-basis, G2 from its rational Gram matrix in
/// simple-root coordinates.
pub fn realization(kind: PosetType) -> Result<Realization> {
    match kind {
        PosetType::A(n) => {
            let dim = n as usize + 1;
            let mut forms = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    let mut f = vec![Rational::zero(); dim];
                    f[i] = Rational::one();
                    f[j] = -Rational::one();
                    forms.push(f);
                }
            }
            Ok(Realization { kind, dim, forms })
        }
        PosetType::B(n) | PosetType::C(n) | PosetType::D(n) => {
            let dim = n as usize;
            let mut forms = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    let mut f = vec![Rational::zero(); dim];
                    f[i] = Rational::one();
                    f[j] = -Rational::one();
                    forms.push(f);
                }
            }
            for i in 0..dim {
                for j in i + 1..dim {
                    let mut f = vec![Rational::zero(); dim];
                    f[i] = Rational::one();
                    f[j] = Rational::one();
                    forms.push(f);
                }
            }
            match kind {
                PosetType::B(_) => {
                    for i in 0..dim {
                        let mut f = vec![Rational::zero(); dim];
                        f[i] = Rational::one();
                        forms.push(f);
                    }
                }
                PosetType::C(_) => {
                    for i in 0..dim {
                        let mut f = vec![Rational::zero(); dim];
                        f[i] = rat_int(2);
                        forms.push(f);
                    }
                }
                _ => {}
            }
            Ok(Realization { kind, dim, forms })
        }
        PosetType::G2 => {
            // Gram matrix for simple roots alpha (short), beta (long):
            // (a,a) = 2, (b,b) = 6, (a,b) = -3.  A point x = u1 a + u2 b
            // gives (r, x) = r^T G u.
            let gram = [[2i32, -3], [-3, 6]];
            let roots = positive_roots(PosetType::G2)?;
            let forms = roots
                .iter()
                .map(|r| {
                    (0..2)
                        .map(|j| rat_int((r[0] * gram[0][j] + r[1] * gram[1][j]) as i64))
                        .collect()
                })
                .collect();
            Ok(Realization {
                kind,
                dim: 2,
                forms,
            })
        }
        PosetType::ArmstrongI2(_) => Err(Error::Domain(
            "no linear realization for the abstract dihedral poset".into(),
        )),
    }
}

/// One region of the positive part of a (possibly truncated) Shi
/// arrangement.
#[derive(Clone, Debug)]
pub struct Region {
    /// `levels[i] = f` means `f < (alpha_i, x) < f + 1` for `f < cap_i`,
    /// and `(alpha_i, x) > cap_i` for `f = cap_i`.
    pub levels: Vec<u32>,
    /// Number of separating hyperplanes from the dominant unbounded region:
    /// `sum_i (cap_i - levels[i])`.
    pub coheight: u32,
    /// A rational interior point.
    pub witness: Vec<Rational>,
}

/// An extended Shi arrangement `Shi^(m)(W)`, optionally with per-root
/// truncated level caps.
#[derive(Clone, Debug)]
pub struct ShiArrangement {
    pub realization: Realization,
    pub m: u32,
    /// Maximal level per positive root (all `m` for the untruncated case).
    pub caps: Vec<u32>,
}

impl ShiArrangement {
    pub fn new(kind: PosetType, m: u32) -> Result<ShiArrangement> {
        if m == 0 {
            return Err(Error::Domain("Shi arrangements need m >= 1".into()));
        }
        let realization = realization(kind)?;
        let caps = vec![m; realization.forms.len()];
        Ok(ShiArrangement {
            realization,
            m,
            caps,
        })
    }

    /// The truncated arrangement `Shi^(m,k)(G2)`: the highest root
    /// `3 alpha + 2 beta` only carries hyperplanes up to level `k <= m`.
    pub fn g2_truncated(m: u32, k: u32) -> Result<ShiArrangement> {
        if k > m {
            return Err(Error::Domain("truncation level must satisfy k <= m".into()));
        }
        let mut arr = ShiArrangement::new(PosetType::G2, m)?;
        // The highest root is the last entry of the G2 root list.
        *arr.caps.last_mut().unwrap() = k;
        Ok(arr)
    }

    /// Enumerate the regions in the dominant side (all root values
    /// positive) by depth-first search over level vectors with
    /// Fourier-Motzkin pruning.  `candidate_cap` bounds the number of
    /// feasibility checks.
    pub fn positive_regions(&self, candidate_cap: u64) -> Result<Vec<Region>> {
        let nroots = self.realization.forms.len();
        let dim = self.realization.dim;
        let mut out = Vec::new();
        let mut constraints: Vec<StrictIneq> = Vec::new();
        let mut levels: Vec<u32> = Vec::new();
        let mut checks: u64 = 0;
        self.dfs(
            0,
            nroots,
            dim,
            &mut constraints,
            &mut levels,
            &mut out,
            candidate_cap,
            &mut checks,
        )?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        &self,
        root: usize,
        nroots: usize,
        dim: usize,
        constraints: &mut Vec<StrictIneq>,
        levels: &mut Vec<u32>,
        out: &mut Vec<Region>,
        cap: u64,
        checks: &mut u64,
    ) -> Result<()> {
        if root == nroots {
            *checks += 1;
            if *checks > cap {
                return Err(Error::Resource(format!(
                    "candidate cap {} exceeded during region enumeration",
                    cap
                )));
            }
            if let Some(witness) = fm_feasible(constraints, dim) {
                let coheight = self
                    .caps
                    .iter()
                    .zip(levels.iter())
                    .map(|(&c, &f)| c - f)
                    .sum();
                out.push(Region {
                    levels: levels.clone(),
                    coheight,
                    witness,
                });
            }
            return Ok(());
        }
        let form = &self.realization.forms[root];
        for f in 0..=self.caps[root] {
            let added = self.push_cell_constraints(form, f, self.caps[root], constraints);
            *checks += 1;
            if *checks > cap {
                return Err(Error::Resource(format!(
                    "candidate cap {} exceeded during region enumeration",
                    cap
                )));
            }
            if fm_feasible(constraints, dim).is_some() {
                levels.push(f);
                self.dfs(root + 1, nroots, dim, constraints, levels, out, cap, checks)?;
                levels.pop();
            }
            for _ in 0..added {
                constraints.pop();
            }
        }
        Ok(())
    }

    /// Push the strict constraints describing cell `f` of a root with level
    /// cap `cap`; returns how many constraints were pushed.
    fn push_cell_constraints(
        &self,
        form: &[Rational],
        f: u32,
        cap: u32,
        constraints: &mut Vec<StrictIneq>,
    ) -> usize {
        let coeffs = form.to_vec();
        constraints.push(StrictIneq::greater(coeffs.clone(), rat_int(f as i64)));
        if f < cap {
            constraints.push(StrictIneq::less(coeffs, rat_int(f as i64 + 1)));
            2
        } else {
            1
        }
    }

    /// The coheight generating function over the positive regions.
    pub fn coheight_genfun(&self, candidate_cap: u64) -> Result<LaurentQPoly> {
        let mut acc = LaurentQPoly::zero();
        for r in self.positive_regions(candidate_cap)? {
            acc.add_term(r.coheight as i64, 1);
        }
        Ok(acc)
    }

    /// Count all regions of the untruncated arrangement: each root carries
    /// the `2m` hyperplanes at levels `-m+1..=m`, giving `2m + 1` cells per
    /// root (labels `-m..=m`, the extremes unbounded).
    pub fn all_regions_count(&self, candidate_cap: u64) -> Result<u64> {
        if self.caps.iter().any(|&c| c != self.m) {
            return Err(Error::Domain(
                "all_regions_count applies to untruncated arrangements".into(),
            ));
        }
        let nroots = self.realization.forms.len();
        let dim = self.realization.dim;
        let mut constraints: Vec<StrictIneq> = Vec::new();
        let mut checks: u64 = 0;
        let mut count: u64 = 0;
        self.dfs_all(0, nroots, dim, &mut constraints, &mut count, candidate_cap, &mut checks)?;
        Ok(count)
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs_all(
        &self,
        root: usize,
        nroots: usize,
        dim: usize,
        constraints: &mut Vec<StrictIneq>,
        count: &mut u64,
        cap: u64,
        checks: &mut u64,
    ) -> Result<()> {
        if root == nroots {
            *count += 1;
            return Ok(());
        }
        let m = self.m as i64;
        let form = &self.realization.forms[root];
        for g in -m..=m {
            let mut added = 0;
            let coeffs = form.to_vec();
            if g > -m {
                constraints.push(StrictIneq::greater(coeffs.clone(), rat_int(g)));
                added += 1;
            }
            if g < m {
                constraints.push(StrictIneq::less(coeffs, rat_int(g + 1)));
                added += 1;
            }
            *checks += 1;
            if *checks > cap {
                return Err(Error::Resource(format!(
                    "candidate cap {} exceeded during region enumeration",
                    cap
                )));
            }
            if fm_feasible(constraints, dim).is_some() {
                self.dfs_all(root + 1, nroots, dim, constraints, count, cap, checks)?;
            }
            for _ in 0..added {
                constraints.pop();
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::{dihedral_qt, fuss_catalan};
    use crate::groups::{GroupSpec, NamedFamily};
    use crate::qt::{q_bracket, Specialization};

    const CAP: u64 = DEFAULT_CANDIDATE_CAP;

    #[test]
    fn fm_feasibility_basics() {
        // x < 1, x > 0 feasible; x < 0, x > 1 infeasible.
        let feas = vec![
            StrictIneq::less(vec![rat_int(1)], rat_int(1)),
            StrictIneq::greater(vec![rat_int(1)], rat_int(0)),
        ];
        let w = fm_feasible(&feas, 1).unwrap();
        assert!(w[0] > rat_int(0) && w[0] < rat_int(1));
        let infeas = vec![
            StrictIneq::less(vec![rat_int(1)], rat_int(0)),
            StrictIneq::greater(vec![rat_int(1)], rat_int(1)),
        ];
        assert!(fm_feasible(&infeas, 1).is_none());
        // 2D: x + y < 1, x > 0, y > 0, x - y > 1/2.
        let sys = vec![
            StrictIneq::less(vec![rat_int(1), rat_int(1)], rat_int(1)),
            StrictIneq::greater(vec![rat_int(1), rat_int(0)], rat_int(0)),
            StrictIneq::greater(vec![rat_int(0), rat_int(1)], rat_int(0)),
            StrictIneq::greater(vec![rat_int(1), rat_int(-1)], crate::field::rat(1, 2)),
        ];
        assert!(fm_feasible(&sys, 2).is_some());
    }

    #[test]
    fn positive_region_counts_match_fuss_catalan() {
        let cases: Vec<(PosetType, &str, u32)> = vec![
            (PosetType::A(2), "A2", 3),
            (PosetType::B(2), "B2", 3),
            (PosetType::G2, "I2(6)", 3),
            (PosetType::A(3), "A3", 2),
            (PosetType::B(3), "B3", 2),
        ];
        for (kind, gname, mmax) in cases {
            let group = GroupSpec::build(NamedFamily::parse(gname).unwrap()).unwrap();
            for m in 1..=mmax {
                let arr = ShiArrangement::new(kind, m).unwrap();
                let regions = arr.positive_regions(CAP).unwrap();
                let expected = fuss_catalan(&group, m).unwrap() as usize;
                assert_eq!(regions.len(), expected, "{:?} m={}", kind, m);
            }
        }
    }

    #[test]
    fn total_region_counts_match_yoshinaga() {
        let cases: Vec<(PosetType, u32, u32, u32)> = vec![
            // (type, rank, h, mmax)
            (PosetType::A(2), 2, 3, 3),
            (PosetType::B(2), 2, 4, 3),
            (PosetType::G2, 2, 6, 2),
            (PosetType::A(3), 3, 4, 2),
        ];
        for (kind, rank, h, mmax) in cases {
            for m in 1..=mmax {
                let arr = ShiArrangement::new(kind, m).unwrap();
                let total = arr.all_regions_count(CAP).unwrap();
                assert_eq!(
                    total,
                    ((m * h + 1) as u64).pow(rank),
                    "{:?} m={}",
                    kind,
                    m
                );
            }
        }
    }

    #[test]
    fn coheight_genfun_dihedral_cases() {
        // B2 = I2(4), G2 = I2(6): the coheight generating function is the
        // t = 1 specialization of the dihedral closed form.
        for (kind, k) in [(PosetType::B(2), 4u32), (PosetType::G2, 6)] {
            for m in 1..=3u32 {
                let arr = ShiArrangement::new(kind, m).unwrap();
                let genfun = arr.coheight_genfun(CAP).unwrap();
                let expected = dihedral_qt(k, m).specialize(Specialization::TOne);
                assert_eq!(genfun, expected, "{:?} m={}", kind, m);
            }
        }
    }

    #[test]
    fn b2_recurrence() {
        // Cat^(m)(B2; q) = [4m+1]_q + q Cat^(m-1)(B2; q), Cat^(0) = 1.
        let mut prev = LaurentQPoly::one();
        for m in 1..=4u32 {
            let arr = ShiArrangement::new(PosetType::B(2), m).unwrap();
            let genfun = arr.coheight_genfun(CAP).unwrap();
            let expected = q_bracket(4 * m + 1).add(&prev.shift(1));
            assert_eq!(genfun, expected, "B2 m={}", m);
            prev = genfun;
        }
    }

    #[test]
    fn g2_truncation_interpolates() {
        // k = m reproduces the untruncated arrangement; k = 0 removes the
        // highest root's hyperplanes entirely.
        for m in 1..=2u32 {
            let full = ShiArrangement::new(PosetType::G2, m).unwrap();
            let trunc = ShiArrangement::g2_truncated(m, m).unwrap();
            assert_eq!(
                full.coheight_genfun(CAP).unwrap(),
                trunc.coheight_genfun(CAP).unwrap()
            );
        }
        assert!(ShiArrangement::g2_truncated(2, 3).is_err());
    }

    #[test]
    fn witnesses_separate_regions() {
        let arr = ShiArrangement::new(PosetType::A(2), 2).unwrap();
        let regions = arr.positive_regions(CAP).unwrap();
        assert_eq!(regions.len(), 12);
        // Level vectors are pairwise distinct and witnesses realise them.
        for (i, r) in regions.iter().enumerate() {
            for (j, s) in regions.iter().enumerate() {
                if i != j {
                    assert_ne!(r.levels, s.levels);
                }
            }
            for (form, (&cap, &f)) in arr
                .realization
                .forms
                .iter()
                .zip(arr.caps.iter().zip(&r.levels))
            {
                let v: Rational = form
                    .iter()
                    .zip(&r.witness)
                    .map(|(c, x)| c * x)
                    .fold(Rational::zero(), |a, b| a + b);
                assert!(v > rat_int(f as i64));
                if f < cap {
                    assert!(v < rat_int(f as i64 + 1));
                }
            }
        }
    }
}
