//! The coinvariant-side engine: bidegree bases of determinantal isotypic
//! components, the product spaces `Atilde^(m)`, minimal generator counts of
//! the ideal they generate, and the bigraded Hilbert series
//! `Cat^(m)(W; q, t)`.
//!
//! All linear algebra happens inside single isotypic components, one
//! bidegree at a time.  Within a fixed isotypic component, a polynomial is
//! determined by its coefficients on one monomial per group orbit, so every
//! rank computation is carried out on vectors indexed by orbit
//! representatives ("restricted coordinates").  An independent
//! character-theoretic dimension formula provides both the early-stopping
//! targets and a cross-check oracle.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::field::{rat, rat_int, Coeff, Rational};
use crate::groups::{GroupSpec, NamedFamily};
use crate::linalg::Echelon;
use crate::poly::{monomials_of_bidegree, Monomial, MultiPoly};
use crate::qt::QTPoly;

/// Width of the suspicious band at the top of the degree box.
pub const SLACK: u32 = 2;

/// Which of the two mutually inverse linear characters plays the role of
/// `det` in the projections.  For real groups the two coincide; for complex
/// groups swapping exchanges the roles of `q` and `t` up to regrading.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Standard,
    Swapped,
}

impl Orientation {
    /// The isotypic exponent of the layer-one component.
    fn sign(self) -> i64 {
        match self {
            Orientation::Standard => 1,
            Orientation::Swapped => -1,
        }
    }

    pub fn parse(s: &str) -> Result<Orientation> {
        match s {
            "standard" => Ok(Orientation::Standard),
            "swapped" => Ok(Orientation::Swapped),
            _ => Err(Error::Parse(format!("unknown orientation '{}'", s))),
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Standard => "standard",
            Orientation::Swapped => "swapped",
        })
    }
}

/// Which polynomials seed the layer-one (m = 1) components.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorSource {
    /// Projections of monomials: always spans the full determinantal
    /// component per bidegree.
    Generic,
    /// Bivariate Vandermonde determinants (types A, B, D only).
    Vandermonde,
    /// The dihedral generators `D, Delta(D), ..., Delta^k(D), x1 y2 - x2 y1`
    /// (groups G(k,k,2) only).
    DihedralDelta,
}

impl GeneratorSource {
    pub fn parse(s: &str) -> Result<GeneratorSource> {
        match s {
            "generic" => Ok(GeneratorSource::Generic),
            "vandermonde" => Ok(GeneratorSource::Vandermonde),
            "dihedral-delta" => Ok(GeneratorSource::DihedralDelta),
            _ => Err(Error::Parse(format!("unknown generator source '{}'", s))),
        }
    }
}

impl fmt::Display for GeneratorSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorSource::Generic => "generic",
            GeneratorSource::Vandermonde => "vandermonde",
            GeneratorSource::DihedralDelta => "dihedral-delta",
        })
    }
}

/// An echelon-certified basis of one bidegree component.  The stored
/// polynomials are a linearly independent spanning set; the echelon holds
/// their reduced images in restricted coordinates.
pub struct Basis<C: Coeff> {
    pub polys: Vec<MultiPoly<C>>,
    ech: Echelon<C>,
}

impl<C: Coeff> Basis<C> {
    fn new(ncols: usize) -> Basis<C> {
        Basis {
            polys: Vec::new(),
            ech: Echelon::new(ncols),
        }
    }

    pub fn dim(&self) -> usize {
        self.polys.len()
    }

    /// Drop the echelon rows once construction is finished; only the
    /// spanning polynomials are needed afterwards, and the reduced rows
    /// can dominate memory for large bidegrees.
    fn seal(mut self) -> Basis<C> {
        self.ech = Echelon::new(0);
        self
    }
}

/// Orbit representatives of the monomials of one bidegree: within a fixed
/// isotypic component, coefficients on the representatives determine the
/// polynomial, so ranks may be computed on these coordinates alone.
struct RepSet {
    reps: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

fn restrict<C: Coeff>(p: &MultiPoly<C>, rs: &RepSet) -> Vec<C> {
    let mut v = vec![C::zero(); rs.reps.len()];
    for (m, c) in &p.terms {
        if let Some(&i) = rs.index.get(m) {
            v[i] = c.clone();
        }
    }
    v
}

/// Coefficients of `p * q` on the representatives only, without forming the
/// full product.
fn restricted_product<C: Coeff>(p: &MultiPoly<C>, q: &MultiPoly<C>, rs: &RepSet) -> Vec<C> {
    let (small, big) = if p.terms.len() <= q.terms.len() {
        (p, q)
    } else {
        (q, p)
    };
    let mut v = Vec::with_capacity(rs.reps.len());
    for r in &rs.reps {
        let mut acc = C::zero();
        for (m, c) in &small.terms {
            if let Some(rest) = r.div(m) {
                if let Some(c2) = big.terms.get(&rest) {
                    acc.add_mul_assign(c, c2);
                }
            }
        }
        v.push(acc);
    }
    v
}

/// Character-theoretic dimension oracle: the multiplicity of `det^e` in the
/// bidegree-(a,b) polynomials is `(1/|W|) sum_w det(w)^{-e} h_a(X(w))
/// h_b(Y(w))` with `h_d` the complete homogeneous symmetric function of the
/// eigenvalues of `w` on the `x`- resp. `y`-variables, computed by Newton's
/// recurrence from the cycle data.  Exact over cyclotomic numbers.
struct CharOracle {
    k: u32,
    order: u64,
    /// Per element: permutation sign and phase sum (`det = sign * zeta^s`).
    dets: Vec<(i32, i64)>,
    /// Per element: cycle lengths with phase sums.
    cycles: Vec<Vec<(u32, u32)>>,
    hx: Vec<Vec<Cyclotomic>>,
    hy: Vec<Vec<Cyclotomic>>,
    cache: HashMap<(i64, u32, u32), usize>,
}

impl CharOracle {
    fn new(group: &GroupSpec) -> CharOracle {
        let dets = group
            .elements
            .iter()
            .map(|g| (g.perm_sign(), g.phase_sum() as i64))
            .collect();
        let cycles = group
            .elements
            .iter()
            .map(|g| {
                g.cycles(group.k)
                    .into_iter()
                    .map(|(cyc, s)| (cyc.len() as u32, s))
                    .collect()
            })
            .collect();
        let nel = group.elements.len();
        CharOracle {
            k: group.k,
            order: group.order,
            dets,
            cycles,
            hx: vec![vec![Cyclotomic::one()]; nel],
            hy: vec![vec![Cyclotomic::one()]; nel],
            cache: HashMap::new(),
        }
    }

    /// Power sum `p_j` of the eigenvalues of element `el` on the variables;
    /// `conj` negates the phases (the `y`-side action).
    fn power_sum(&self, el: usize, j: u32, conj: bool) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for &(len, s) in &self.cycles[el] {
            if j % len == 0 {
                let mut e = s as i64 * (j / len) as i64;
                if conj {
                    e = -e;
                }
                let scale = Cyclotomic::from_rational_at(1, rat_int(len as i64));
                acc = acc + Cyclotomic::root(self.k, e) * scale;
            }
        }
        acc
    }

    fn ensure(&mut self, deg: u32) {
        let need = deg as usize + 1;
        for el in 0..self.hx.len() {
            for side in 0..2 {
                let conj = side == 1;
                let len = if conj {
                    self.hy[el].len()
                } else {
                    self.hx[el].len()
                };
                for d in len..need {
                    let mut acc = Cyclotomic::zero();
                    for j in 1..=d as u32 {
                        let p = self.power_sum(el, j, conj);
                        let h = if conj {
                            &self.hy[el][d - j as usize]
                        } else {
                            &self.hx[el][d - j as usize]
                        };
                        acc = acc + p * h.clone();
                    }
                    let h = acc * Cyclotomic::from_rational_at(1, rat(1, d as i64));
                    if conj {
                        self.hy[el].push(h);
                    } else {
                        self.hx[el].push(h);
                    }
                }
            }
        }
    }

    /// Multiplicity of the character `det^e` in bidegree `(a, b)`.
    fn isotypic_dim(&mut self, e: i64, a: u32, b: u32) -> usize {
        if let Some(&d) = self.cache.get(&(e, a, b)) {
            return d;
        }
        self.ensure(a.max(b));
        let mut sum = Cyclotomic::zero();
        for el in 0..self.dets.len() {
            let (sign, s) = self.dets[el];
            let mut w = Cyclotomic::root(self.k, -s * e);
            if sign < 0 && e % 2 != 0 {
                w = -w;
            }
            sum = sum + w * self.hx[el][a as usize].clone() * self.hy[el][b as usize].clone();
        }
        let r = sum.as_rational().expect("character sum must be rational");
        let dim = &r / &rat_int(self.order as i64);
        assert!(
            dim.is_integer() && dim >= Rational::zero(),
            "character multiplicity must be a non-negative integer, got {}",
            dim
        );
        use num_traits::ToPrimitive;
        let d = dim.to_integer().to_usize().expect("dimension fits usize");
        self.cache.insert((e, a, b), d);
        d
    }
}

/// One cell of a generator table.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCell {
    pub qdeg: u32,
    pub tdeg: u32,
    pub count: u32,
}

/// Minimal generator counts of the ideal generated by `Atilde^(m)`, per
/// bidegree, together with the degree box and convention flags used.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorTable {
    pub group: String,
    pub m: u32,
    pub orientation: String,
    pub source: String,
    pub degree_box: (u32, u32),
    pub slack: u32,
    pub cells: Vec<GeneratorCell>,
    pub polynomial: String,
    pub warnings: Vec<String>,
}

/// The engine proper, generic over the exact coefficient field.
pub struct Engine<C: Coeff> {
    pub group: Arc<GroupSpec>,
    pub orientation: Orientation,
    pub source: GeneratorSource,
    oracle: CharOracle,
    reps: HashMap<(u32, u32), Arc<RepSet>>,
    inv: HashMap<(u32, u32), Arc<Basis<C>>>,
    /// `(m, a, b) -> basis of Atilde^(m)` in that bidegree; `m = 1` is the
    /// layer-one component defined by the generator source.
    atilde: HashMap<(u32, u32, u32), Arc<Basis<C>>>,
}

impl<C: Coeff> Engine<C> {
    pub fn new(group: GroupSpec, orientation: Orientation, source: GeneratorSource) -> Engine<C> {
        let oracle = CharOracle::new(&group);
        Engine {
            group: Arc::new(group),
            orientation,
            source,
            oracle,
            reps: HashMap::new(),
            inv: HashMap::new(),
            atilde: HashMap::new(),
        }
    }

    fn nvars(&self) -> usize {
        self.group.n
    }

    /// Multiplicity of `det^e` in bidegree `(a, b)` — the character oracle.
    pub fn isotypic_dim(&mut self, e: i64, a: u32, b: u32) -> usize {
        self.oracle.isotypic_dim(e, a, b)
    }

    fn reps(&mut self, a: u32, b: u32) -> Arc<RepSet> {
        if let Some(r) = self.reps.get(&(a, b)) {
            return r.clone();
        }
        let monos = monomials_of_bidegree(self.nvars(), a, b);
        let mut index = HashMap::new();
        let mut reps = Vec::new();
        let mut visited: HashMap<Monomial, ()> = HashMap::new();
        for m in &monos {
            if visited.contains_key(m) {
                continue;
            }
            index.insert(m.clone(), reps.len());
            reps.push(m.clone());
            for g in &self.group.elements {
                let (_, moved) = g.apply_monomial(m);
                visited.insert(moved, ());
            }
        }
        let rs = Arc::new(RepSet { reps, index });
        self.reps.insert((a, b), rs.clone());
        rs
    }

    /// Echelon basis of the invariants of bidegree `(c, d)`.
    pub fn invariant_spanners(&mut self, c: u32, d: u32) -> Result<Arc<Basis<C>>> {
        if let Some(b) = self.inv.get(&(c, d)) {
            return Ok(b.clone());
        }
        if (c, d) == (0, 0) {
            return Err(Error::Domain(
                "invariant spanners require a bidegree other than (0,0)".into(),
            ));
        }
        let target = self.oracle.isotypic_dim(0, c, d);
        let rs = self.reps(c, d);
        let mut basis = Basis::new(rs.reps.len());
        if target > 0 {
            for i in 0..rs.reps.len() {
                let mono = MultiPoly::monomial(rs.reps[i].clone(), C::one());
                let p = self.group.trivial_project(&mono)?;
                if p.is_zero() {
                    continue;
                }
                if basis.ech.insert(restrict(&p, &rs)).is_some() {
                    basis.polys.push(p);
                    if basis.dim() == target {
                        break;
                    }
                }
            }
            assert_eq!(basis.dim(), target, "invariant dimension oracle mismatch");
        }
        let basis = Arc::new(basis.seal());
        self.inv.insert((c, d), basis.clone());
        Ok(basis)
    }

    /// Echelon basis of the determinantal isotypic component in bidegree
    /// `(a, b)`, built from projections of orbit representatives.
    pub fn determinantal_basis(&mut self, a: u32, b: u32) -> Result<Arc<Basis<C>>> {
        if let Some(bas) = self.atilde.get(&(1, a, b)) {
            if self.source == GeneratorSource::Generic {
                return Ok(bas.clone());
            }
        }
        let sign = self.orientation.sign();
        let target = self.oracle.isotypic_dim(sign, a, b);
        let rs = self.reps(a, b);
        let mut basis = Basis::new(rs.reps.len());
        if target > 0 {
            let power = -(sign as i32);
            for i in 0..rs.reps.len() {
                let mono = MultiPoly::monomial(rs.reps[i].clone(), C::one());
                let p = self.group.project(power, &mono)?;
                if p.is_zero() {
                    continue;
                }
                if basis.ech.insert(restrict(&p, &rs)).is_some() {
                    basis.polys.push(p);
                    if basis.dim() == target {
                        break;
                    }
                }
            }
            assert_eq!(
                basis.dim(),
                target,
                "determinantal dimension oracle mismatch at ({}, {})",
                a,
                b
            );
        }
        Ok(Arc::new(basis.seal()))
    }

    /// Layer-one basis per the configured generator source.
    fn layer_one(&mut self, a: u32, b: u32) -> Result<Arc<Basis<C>>> {
        if let Some(bas) = self.atilde.get(&(1, a, b)) {
            return Ok(bas.clone());
        }
        let basis = match self.source {
            GeneratorSource::Generic => self.determinantal_basis(a, b)?,
            GeneratorSource::Vandermonde => {
                let sign = self.orientation.sign();
                let target = self.oracle.isotypic_dim(sign, a, b);
                let rs = self.reps(a, b);
                let mut basis = Basis::new(rs.reps.len());
                if target > 0 {
                    let n = self.nvars();
                    let parity = vandermonde_parity(&self.group.family)?;
                    enumerate_exponent_sets(n, a, b, parity, &mut |pairs| {
                        let p: MultiPoly<C> = vandermonde_determinant(n, pairs);
                        if !p.is_zero() && basis.ech.insert(restrict(&p, &rs)).is_some() {
                            basis.polys.push(p);
                        }
                        basis.dim() < target
                    });
                }
                Arc::new(basis.seal())
            }
            GeneratorSource::DihedralDelta => {
                let (k, p, l) = self.group.family.kpl();
                if p != k || l != 2 {
                    return Err(Error::Domain(
                        "dihedral generators require a group G(k,k,2)".into(),
                    ));
                }
                let rs = self.reps(a, b);
                let mut basis = Basis::new(rs.reps.len());
                for g in dihedral_delta_generators::<C>(k) {
                    if g.bidegree() == Some((a, b))
                        && basis.ech.insert(restrict(&g, &rs)).is_some()
                    {
                        basis.polys.push(g);
                    }
                }
                Arc::new(basis.seal())
            }
        };
        self.atilde.insert((1, a, b), basis.clone());
        Ok(basis)
    }

    /// Echelon basis of `Atilde^(m)` in bidegree `(a, b)`: products of `m`
    /// layer-one elements with bidegrees summing to `(a, b)`.
    pub fn product_space_component(&mut self, m: u32, a: u32, b: u32) -> Result<Arc<Basis<C>>> {
        if m == 0 {
            return Err(Error::Domain("product space needs m >= 1".into()));
        }
        if m == 1 {
            return self.layer_one(a, b);
        }
        if let Some(bas) = self.atilde.get(&(m, a, b)) {
            return Ok(bas.clone());
        }
        let sign = self.orientation.sign();
        let target = self.oracle.isotypic_dim(sign * m as i64, a, b);
        let rs = self.reps(a, b);
        let mut basis = Basis::new(rs.reps.len());
        'outer: for (c, d) in bidegrees_within(a, b) {
            let (rc, rd) = (a - c, b - d);
            // Products commute: for m = 2 both factors come from layer one,
            // so each unordered factor pair is visited once.
            if m == 2 && (c + d, c) > (rc + rd, rc) {
                continue;
            }
            if self.oracle.isotypic_dim(sign, c, d) == 0 {
                continue;
            }
            let layer = self.layer_one(c, d)?;
            if layer.dim() == 0 {
                continue;
            }
            let lower = self.product_space_component(m - 1, rc, rd)?;
            if lower.dim() == 0 {
                continue;
            }
            let same = m == 2 && (c, d) == (rc, rd);
            for (fi, f) in layer.polys.iter().enumerate() {
                for (gi, g) in lower.polys.iter().enumerate() {
                    if same && gi < fi {
                        continue;
                    }
                    let rv = restricted_product(f, g, &rs);
                    if basis.ech.insert(rv).is_some() {
                        basis.polys.push(f.mul(g));
                        if basis.dim() == target {
                            break 'outer;
                        }
                    }
                }
            }
        }
        let basis = Arc::new(basis.seal());
        self.atilde.insert((m, a, b), basis.clone());
        Ok(basis)
    }

    /// Number of minimal generators of the ideal generated by `Atilde^(m)`
    /// in bidegree `(a, b)`: `dim Atilde^(m)_{(a,b)}` minus the dimension of
    /// the span of `invariant * v` with `v` from lower bidegree components.
    fn generator_count(&mut self, m: u32, a: u32, b: u32) -> Result<usize> {
        let adim = self.product_space_component(m, a, b)?.dim();
        if adim == 0 {
            return Ok(0);
        }
        let sign = self.orientation.sign();
        // The ideal rows lie inside Atilde^(m) itself when layer one spans
        // the full determinantal component (generic source); otherwise only
        // the isotypic bound applies.
        let threshold = if self.source == GeneratorSource::Generic {
            adim
        } else {
            self.oracle.isotypic_dim(sign * m as i64, a, b)
        };
        let rs = self.reps(a, b);
        let mut ech = Echelon::new(rs.reps.len());
        'outer: for (c, d) in bidegrees_within(a, b) {
            if (c, d) == (0, 0) {
                continue;
            }
            if self.oracle.isotypic_dim(0, c, d) == 0 {
                continue;
            }
            let inv = self.invariant_spanners(c, d)?;
            let at = self.product_space_component(m, a - c, b - d)?;
            if at.dim() == 0 {
                continue;
            }
            for f in &inv.polys {
                for g in &at.polys {
                    ech.insert(restricted_product(f, g, &rs));
                    if ech.rank() == threshold {
                        break 'outer;
                    }
                }
            }
        }
        let r1 = ech.rank();
        let at = self.product_space_component(m, a, b)?;
        for g in &at.polys {
            ech.insert(restrict(g, &rs));
        }
        Ok(ech.rank() - r1)
    }

    /// Scan a degree box and tabulate minimal generator counts; the induced
    /// bigraded Hilbert series is `Cat^(m)(W; q, t)`.
    ///
    /// The conjectured support bounds (`q`-degree at most `m N*`, `t`-degree
    /// at most `m N`) hold with room to spare in every verified table: all
    /// known generators in fact have total degree at most `m max(N, N*)`.
    /// The scan therefore covers the triangle of bidegrees with total degree
    /// up to `m max(N, N*) + slack`; a generator landing in the slack band
    /// (total degree above `m max(N, N*)`) raises a warning and one
    /// automatic enlargement retry before giving up.
    pub fn minimal_generator_dims(&mut self, m: u32) -> Result<(GeneratorTable, QTPoly)> {
        if m == 0 {
            return Err(Error::Domain("generator tables need m >= 1".into()));
        }
        let mut tmax = m * self.group.max_n() + SLACK;
        let mut warnings: Vec<String> = Vec::new();
        for attempt in 0..2 {
            let mut cells: Vec<GeneratorCell> = Vec::new();
            let mut poly = QTPoly::zero();
            for total in 0..=tmax {
                for a in 0..=total {
                    let b = total - a;
                    let count = self.generator_count(m, a, b)?;
                    if count > 0 {
                        cells.push(GeneratorCell {
                            qdeg: a,
                            tdeg: b,
                            count: count as u32,
                        });
                        poly.add_term(a, b, count as i64);
                    }
                }
            }
            let in_band = cells.iter().any(|c| c.qdeg + c.tdeg > tmax - SLACK);
            if !in_band {
                let table = GeneratorTable {
                    group: self.group.family.to_string(),
                    m,
                    orientation: self.orientation.to_string(),
                    source: self.source.to_string(),
                    degree_box: (tmax, tmax),
                    slack: SLACK,
                    cells,
                    polynomial: poly.to_text(),
                    warnings,
                };
                return Ok((table, poly));
            }
            let msg = format!(
                "generator found in the slack band of the degree scan (total \
                 degree cap {}); the conjectured degree bounds are violated",
                tmax
            );
            eprintln!("warning: {}", msg);
            warnings.push(msg);
            if attempt == 0 {
                tmax += 4;
            }
        }
        Err(Error::Incomplete(format!(
            "generators persist in the slack band after enlarging the degree \
             scan to total degree {}",
            tmax
        )))
    }

    /// Like [`Engine::minimal_generator_dims`], but over an explicit
    /// rectangular degree box `a <= qmax`, `b <= tmax`.  No automatic
    /// enlargement is attempted; a generator on the box boundary is
    /// reported as a warning (the box may be cutting the table off).
    pub fn minimal_generator_dims_boxed(
        &mut self,
        m: u32,
        qmax: u32,
        tmax: u32,
    ) -> Result<(GeneratorTable, QTPoly)> {
        if m == 0 {
            return Err(Error::Domain("generator tables need m >= 1".into()));
        }
        let mut cells: Vec<GeneratorCell> = Vec::new();
        let mut poly = QTPoly::zero();
        let mut warnings: Vec<String> = Vec::new();
        for total in 0..=(qmax + tmax) {
            for a in total.saturating_sub(tmax)..=total.min(qmax) {
                let b = total - a;
                let count = self.generator_count(m, a, b)?;
                if count > 0 {
                    if a == qmax || b == tmax {
                        warnings.push(format!(
                            "generator at ({}, {}) lies on the degree-box boundary; \
                             the box may be too small",
                            a, b
                        ));
                    }
                    cells.push(GeneratorCell {
                        qdeg: a,
                        tdeg: b,
                        count: count as u32,
                    });
                    poly.add_term(a, b, count as i64);
                }
            }
        }
        let table = GeneratorTable {
            group: self.group.family.to_string(),
            m,
            orientation: self.orientation.to_string(),
            source: self.source.to_string(),
            degree_box: (qmax, tmax),
            slack: 0,
            cells,
            polynomial: poly.to_text(),
            warnings,
        };
        Ok((table, poly))
    }

    /// Bigraded Hilbert series of the full diagonal coinvariant algebra
    /// `C[x,y] / <invariants without constant term>`, computed level by
    /// level in full monomial coordinates.  Stops at the first total degree
    /// where every bidegree has quotient dimension zero (valid since the
    /// algebra is generated in degree one); errors if the degree caps are
    /// exhausted first.
    pub fn full_coinvariant_hilbert(&mut self, qmax: u32, tmax: u32) -> Result<QTPoly> {
        let mut out = QTPoly::zero();
        for total in 0..=(qmax + tmax) {
            let mut level_zero = true;
            for a in 0..=total {
                let b = total - a;
                let dim = self.full_quotient_dim(a, b)?;
                if dim > 0 {
                    level_zero = false;
                    out.add_term(a, b, dim as i64);
                }
            }
            if total > 0 && level_zero {
                return Ok(out);
            }
        }
        Err(Error::Incomplete(format!(
            "no all-zero total-degree level found within the degree box ({}, {})",
            qmax, tmax
        )))
    }

    fn full_quotient_dim(&mut self, a: u32, b: u32) -> Result<usize> {
        let monos = monomials_of_bidegree(self.nvars(), a, b);
        let index: HashMap<Monomial, usize> = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let nm = monos.len();
        let mut ech: Echelon<C> = Echelon::new(nm);
        'outer: for (c, d) in bidegrees_within(a, b) {
            if (c, d) == (0, 0) {
                continue;
            }
            if self.oracle.isotypic_dim(0, c, d) == 0 {
                continue;
            }
            let inv = self.invariant_spanners(c, d)?;
            for f in &inv.polys {
                for mono in monomials_of_bidegree(self.nvars(), a - c, b - d) {
                    let mut row = vec![C::zero(); nm];
                    for (fm, fc) in &f.terms {
                        let target = fm.mul(&mono);
                        row[index[&target]] = fc.clone();
                    }
                    ech.insert(row);
                    if ech.rank() == nm {
                        break 'outer;
                    }
                }
            }
        }
        Ok(nm - ech.rank())
    }
}

/// Bidegrees `(c, d) <= (a, b)` componentwise, in increasing total degree
/// and then increasing `c` — the deterministic scan order.
fn bidegrees_within(a: u32, b: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for total in 0..=(a + b) {
        for c in 0..=total.min(a) {
            let d = total - c;
            if d <= b {
                out.push((c, d));
            }
        }
    }
    out
}

/// `Delta := y1 d/dx1 + y2 d/dx2`, the lowering operator of the two-variable
/// model; maps bidegree `(a, b)` to `(a - 1, b + 1)`.
pub fn delta_operator<C: Coeff>(p: &MultiPoly<C>) -> Result<MultiPoly<C>> {
    if p.nvars != 2 {
        return Err(Error::Domain("delta operator requires two variable pairs".into()));
    }
    let mut out = MultiPoly::zero(2);
    for (m, c) in &p.terms {
        for i in 0..2 {
            if m.xexp[i] > 0 {
                let mut m2 = m.clone();
                m2.xexp[i] -= 1;
                m2.yexp[i] += 1;
                out.add_term(m2, c.mul_ref(&C::from_integer(m.xexp[i] as i64)));
            }
        }
    }
    Ok(out)
}

/// The monomial-model conjugate of the delta operator:
/// `y2 d/dx1 + y1 d/dx2`.  In real orthonormal coordinates the lowering
/// operator is `sum_i v_i d/du_i`; diagonalizing the rotations sends it to
/// this cross-paired form, which is the one that commutes with the
/// `G(k,k,2)` action (the literal `y1 d/dx1 + y2 d/dx2` does not for
/// `k > 2`).
fn delta_conjugate<C: Coeff>(p: &MultiPoly<C>) -> MultiPoly<C> {
    let mut out = MultiPoly::zero(2);
    for (m, c) in &p.terms {
        for i in 0..2 {
            if m.xexp[i] > 0 {
                let mut m2 = m.clone();
                m2.xexp[i] -= 1;
                m2.yexp[1 - i] += 1;
                out.add_term(m2, c.mul_ref(&C::from_integer(m.xexp[i] as i64)));
            }
        }
    }
    out
}

/// The dihedral generator list for `G(k,k,2)`: the discriminant
/// `D = x1^k - x2^k`, its iterated images under the (monomial-model)
/// delta operator, and the bidegree-(1,1) element `x1 y1 - x2 y2`;
/// `k + 2` polynomials in total.
///
/// In real coordinates the last generator is the cross product
/// `u1 v2 - u2 v1`; diagonalizing the rotations maps it (up to a scalar) to
/// `x1 y1 - x2 y2`, which is det-isotypic in the monomial model, whereas the
/// literal `x1 y2 - x2 y1` is not for `k > 2`.
pub fn dihedral_delta_generators<C: Coeff>(k: u32) -> Vec<MultiPoly<C>> {
    let mut d: MultiPoly<C> = MultiPoly::zero(2);
    d.add_term(
        Monomial {
            xexp: vec![k as u16, 0],
            yexp: vec![0, 0],
        },
        C::one(),
    );
    d.add_term(
        Monomial {
            xexp: vec![0, k as u16],
            yexp: vec![0, 0],
        },
        -C::one(),
    );
    let mut out = Vec::new();
    let mut cur = d;
    for _ in 0..=k {
        out.push(cur.clone());
        cur = delta_conjugate(&cur);
    }
    let mut cross: MultiPoly<C> = MultiPoly::zero(2);
    cross.add_term(
        Monomial {
            xexp: vec![1, 0],
            yexp: vec![1, 0],
        },
        C::one(),
    );
    cross.add_term(
        Monomial {
            xexp: vec![0, 1],
            yexp: vec![0, 1],
        },
        -C::one(),
    );
    out.push(cross);
    out
}

/// Parity admissibility of an exponent pair set for the bivariate
/// Vandermonde determinants, by family.
#[derive(Clone, Copy)]
enum VdmParity {
    /// Type A: no condition.
    Any,
    /// Type B: every `alpha + beta` odd.
    AllOdd,
    /// Type D: all `alpha + beta` of equal parity.
    Equal,
}

fn vandermonde_parity(family: &NamedFamily) -> Result<VdmParity> {
    let (k, p, _) = family.kpl();
    match (k, p) {
        (1, 1) => Ok(VdmParity::Any),
        (2, 1) => Ok(VdmParity::AllOdd),
        (2, 2) => Ok(VdmParity::Equal),
        _ => Err(Error::Domain(
            "Vandermonde generators exist for types A, B and D only".into(),
        )),
    }
}

/// The `n x n` determinant `det(x_i^{alpha_j} y_i^{beta_j})` expanded as a
/// polynomial; zero when exponent pairs repeat.
pub fn vandermonde_determinant<C: Coeff>(n: usize, pairs: &[(u16, u16)]) -> MultiPoly<C> {
    assert_eq!(pairs.len(), n);
    let mut out = MultiPoly::zero(n);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // Sign of the current permutation by inversion count.
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut xexp = vec![0u16; n];
        let mut yexp = vec![0u16; n];
        for i in 0..n {
            xexp[i] = pairs[perm[i]].0;
            yexp[i] = pairs[perm[i]].1;
        }
        let c = if inv % 2 == 0 { C::one() } else { -C::one() };
        out.add_term(Monomial { xexp, yexp }, c);
        // Next permutation in lexicographic order.
        let mut i = n.wrapping_sub(2);
        while i != usize::MAX && perm[i] >= perm[i + 1] {
            i = i.wrapping_sub(1);
        }
        if i == usize::MAX {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i] {
            j -= 1;
        }
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    out
}

/// Enumerate strictly increasing sets of `n` distinct admissible exponent
/// pairs with coordinate sums `(a, b)`; the callback returns `false` to stop
/// early.
fn enumerate_exponent_sets(
    n: usize,
    a: u32,
    b: u32,
    parity: VdmParity,
    f: &mut dyn FnMut(&[(u16, u16)]) -> bool,
) {
    let mut pairs: Vec<(u16, u16)> = Vec::new();
    for alpha in 0..=a.min(u16::MAX as u32) as u16 {
        for beta in 0..=b.min(u16::MAX as u32) as u16 {
            let ok = match parity {
                VdmParity::Any => true,
                VdmParity::AllOdd => (alpha + beta) % 2 == 1,
                VdmParity::Equal => true, // checked pairwise during the scan
            };
            if ok {
                pairs.push((alpha, beta));
            }
        }
    }
    let mut chosen: Vec<(u16, u16)> = Vec::new();
    fn rec(
        pairs: &[(u16, u16)],
        start: usize,
        left: usize,
        asum: u32,
        bsum: u32,
        parity: VdmParity,
        chosen: &mut Vec<(u16, u16)>,
        f: &mut dyn FnMut(&[(u16, u16)]) -> bool,
    ) -> bool {
        if left == 0 {
            if asum == 0 && bsum == 0 {
                return f(chosen);
            }
            return true;
        }
        for i in start..pairs.len() {
            let (al, be) = pairs[i];
            if al as u32 > asum || be as u32 > bsum {
                continue;
            }
            if let VdmParity::Equal = parity {
                if let Some(&(a0, b0)) = chosen.first() {
                    if (al + be) % 2 != (a0 + b0) % 2 {
                        continue;
                    }
                }
            }
            chosen.push((al, be));
            let keep = rec(
                pairs,
                i + 1,
                left - 1,
                asum - al as u32,
                bsum - be as u32,
                parity,
                chosen,
                f,
            );
            chosen.pop();
            if !keep {
                return false;
            }
        }
        true
    }
    rec(&pairs, 0, n, a, b, parity, &mut chosen, f);
}

/// Runtime dispatch between the rational and cyclotomic engines.
pub enum AnyEngine {
    Rational(Engine<Rational>),
    Cyclotomic(Engine<Cyclotomic>),
}

impl AnyEngine {
    pub fn new(
        group: GroupSpec,
        orientation: Orientation,
        source: GeneratorSource,
    ) -> Result<AnyEngine> {
        match source {
            GeneratorSource::Vandermonde => {
                vandermonde_parity(&group.family)?;
            }
            GeneratorSource::DihedralDelta => {
                let (k, p, l) = group.family.kpl();
                if p != k || l != 2 {
                    return Err(Error::Domain(
                        "dihedral generators require a group G(k,k,2)".into(),
                    ));
                }
            }
            GeneratorSource::Generic => {}
        }
        if group.is_rational() {
            Ok(AnyEngine::Rational(Engine::new(group, orientation, source)))
        } else {
            Ok(AnyEngine::Cyclotomic(Engine::new(group, orientation, source)))
        }
    }

    pub fn group(&self) -> &GroupSpec {
        match self {
            AnyEngine::Rational(e) => &e.group,
            AnyEngine::Cyclotomic(e) => &e.group,
        }
    }

    pub fn minimal_generator_dims(&mut self, m: u32) -> Result<(GeneratorTable, QTPoly)> {
        match self {
            AnyEngine::Rational(e) => e.minimal_generator_dims(m),
            AnyEngine::Cyclotomic(e) => e.minimal_generator_dims(m),
        }
    }

    pub fn minimal_generator_dims_boxed(
        &mut self,
        m: u32,
        qmax: u32,
        tmax: u32,
    ) -> Result<(GeneratorTable, QTPoly)> {
        match self {
            AnyEngine::Rational(e) => e.minimal_generator_dims_boxed(m, qmax, tmax),
            AnyEngine::Cyclotomic(e) => e.minimal_generator_dims_boxed(m, qmax, tmax),
        }
    }

    pub fn full_coinvariant_hilbert(&mut self, qmax: u32, tmax: u32) -> Result<QTPoly> {
        match self {
            AnyEngine::Rational(e) => e.full_coinvariant_hilbert(qmax, tmax),
            AnyEngine::Cyclotomic(e) => e.full_coinvariant_hilbert(qmax, tmax),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalan::{cyclic_qt, dihedral_qt, fuss_catalan};
    use crate::qt::qt_bracket;

    fn engine_for(name: &str) -> AnyEngine {
        let group = GroupSpec::build(NamedFamily::parse(name).unwrap()).unwrap();
        AnyEngine::new(group, Orientation::Standard, GeneratorSource::Generic).unwrap()
    }

    fn catalan_qt(name: &str, m: u32) -> QTPoly {
        let mut e = engine_for(name);
        e.minimal_generator_dims(m).unwrap().1
    }

    #[test]
    fn a1_generators() {
        assert_eq!(catalan_qt("A1", 1), QTPoly::term(1, 0, 1).add(&QTPoly::term(0, 1, 1)));
        // m = 2: generators (x1-x2)^2, (x1-x2)(y1-y2), (y1-y2)^2.
        let m2 = catalan_qt("A1", 2);
        let mut expect = QTPoly::zero();
        expect.add_term(2, 0, 1);
        expect.add_term(1, 1, 1);
        expect.add_term(0, 2, 1);
        assert_eq!(m2, expect);
    }

    #[test]
    fn a2_and_b2_tables() {
        // Cat^(1)(A2) = [4] + qt, Cat^(2)(A2) = [7] + qt[4] + (qt)^2.
        let a2m1 = qt_bracket(4).add(&QTPoly::term(1, 1, 1));
        assert_eq!(catalan_qt("A2", 1), a2m1);
        let a2m2 = qt_bracket(7)
            .add(&qt_bracket(4).shift(1, 1))
            .add(&QTPoly::term(2, 2, 1));
        assert_eq!(catalan_qt("A2", 2), a2m2);
        // Cat^(1)(B2) = [5] + qt, Cat^(2)(B2) = [9] + qt[5] + (qt)^2.
        let b2m1 = qt_bracket(5).add(&QTPoly::term(1, 1, 1));
        assert_eq!(catalan_qt("B2", 1), b2m1);
        let b2m2 = qt_bracket(9)
            .add(&qt_bracket(5).shift(1, 1))
            .add(&QTPoly::term(2, 2, 1));
        assert_eq!(catalan_qt("B2", 2), b2m2);
    }

    #[test]
    fn cyclic_groups_match_closed_form() {
        for k in 2..=5u32 {
            for m in 1..=3u32 {
                let got = catalan_qt(&format!("C{}", k), m);
                assert_eq!(got, cyclic_qt(k, m), "C{} m={}", k, m);
            }
        }
    }

    #[test]
    fn dihedral_groups_match_closed_form() {
        for k in 3..=5u32 {
            for m in 1..=2u32 {
                let got = catalan_qt(&format!("I2({})", k), m);
                assert_eq!(got, dihedral_qt(k, m), "I2({}) m={}", k, m);
            }
        }
    }

    #[test]
    fn character_oracle_matches_basis_dimension() {
        for name in ["A2", "B2", "C4"] {
            let group = GroupSpec::build(NamedFamily::parse(name).unwrap()).unwrap();
            if group.is_rational() {
                let mut e: Engine<Rational> =
                    Engine::new(group, Orientation::Standard, GeneratorSource::Generic);
                for a in 0..=6u32 {
                    for b in 0..=(6 - a) {
                        let dim = e.determinantal_basis(a, b).unwrap().dim();
                        assert_eq!(dim, e.isotypic_dim(1, a, b), "{} ({},{})", name, a, b);
                    }
                }
            } else {
                let mut e: Engine<Cyclotomic> =
                    Engine::new(group, Orientation::Standard, GeneratorSource::Generic);
                for a in 0..=6u32 {
                    for b in 0..=(6 - a) {
                        let dim = e.determinantal_basis(a, b).unwrap().dim();
                        assert_eq!(dim, e.isotypic_dim(1, a, b), "{} ({},{})", name, a, b);
                    }
                }
            }
        }
    }

    #[test]
    fn cyclic_det_component_support() {
        // For Cyclic(3) the determinantal component is one-dimensional
        // exactly when a = b + 1 mod 3, and (0,0) is empty for any group.
        let group = GroupSpec::build(NamedFamily::parse("C3").unwrap()).unwrap();
        let mut e: Engine<Cyclotomic> =
            Engine::new(group, Orientation::Standard, GeneratorSource::Generic);
        assert_eq!(e.determinantal_basis(0, 0).unwrap().dim(), 0);
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                let expect = if (a as i64 - b as i64).rem_euclid(3) == 1 { 1 } else { 0 };
                assert_eq!(e.determinantal_basis(a, b).unwrap().dim(), expect);
            }
        }
    }

    #[test]
    fn specialization_at_one_matches_fuss_catalan() {
        for (name, mmax) in [("A2", 2u32), ("B2", 3), ("I2(5)", 2), ("C3", 3), ("I2(6)", 2)] {
            let group = GroupSpec::build(NamedFamily::parse(name).unwrap()).unwrap();
            for m in 1..=mmax {
                let qt = catalan_qt(name, m);
                assert_eq!(
                    qt.eval_one(),
                    fuss_catalan(&group, m).unwrap(),
                    "{} m={}",
                    name,
                    m
                );
            }
        }
    }

    #[test]
    fn real_groups_are_qt_symmetric() {
        for (name, m) in [("A2", 2u32), ("B2", 2), ("I2(5)", 1), ("D2", 2)] {
            assert!(catalan_qt(name, m).is_symmetric(), "{} m={}", name, m);
        }
    }

    #[test]
    fn generator_source_independence() {
        for m in 1..=2u32 {
            // Vandermonde vs generic on A2 and B2.
            for name in ["A2", "B2"] {
                let group = GroupSpec::build(NamedFamily::parse(name).unwrap()).unwrap();
                let mut e =
                    AnyEngine::new(group, Orientation::Standard, GeneratorSource::Vandermonde)
                        .unwrap();
                assert_eq!(e.minimal_generator_dims(m).unwrap().1, catalan_qt(name, m));
            }
            // Dihedral delta generators vs generic on I2(3), I2(4).
            for k in 3..=4u32 {
                let name = format!("I2({})", k);
                let group = GroupSpec::build(NamedFamily::parse(&name).unwrap()).unwrap();
                let mut e =
                    AnyEngine::new(group, Orientation::Standard, GeneratorSource::DihedralDelta)
                        .unwrap();
                assert_eq!(e.minimal_generator_dims(m).unwrap().1, catalan_qt(&name, m));
            }
        }
    }

    #[test]
    fn delta_operator_rules() {
        let x1: MultiPoly<Rational> = MultiPoly::var_x(0, 2);
        let y1 = MultiPoly::var_y(0, 2);
        assert_eq!(delta_operator(&x1).unwrap(), y1);
        // Delta(x1 x2) = x2 y1 + x1 y2.
        let x1x2: MultiPoly<Rational> = MultiPoly::var_x(0, 2).mul(&MultiPoly::var_x(1, 2));
        let mut expect = MultiPoly::var_x(1, 2).mul(&MultiPoly::var_y(0, 2));
        expect.add_assign(&MultiPoly::var_x(0, 2).mul(&MultiPoly::var_y(1, 2)));
        assert_eq!(delta_operator(&x1x2).unwrap(), expect);
        // Iterating the literal operator: Delta^k(x1^k - x2^k)
        // = k! (y1^k - y2^k).
        for k in 2..=4u32 {
            let mut fact = 1i64;
            for i in 1..=k as i64 {
                fact *= i;
            }
            let mut d: MultiPoly<Rational> = MultiPoly::zero(2);
            d.add_term(
                Monomial { xexp: vec![k as u16, 0], yexp: vec![0, 0] },
                rat_int(1),
            );
            d.add_term(
                Monomial { xexp: vec![0, k as u16], yexp: vec![0, 0] },
                rat_int(-1),
            );
            let mut cur = d;
            for _ in 0..k {
                cur = delta_operator(&cur).unwrap();
            }
            let mut expect: MultiPoly<Rational> = MultiPoly::zero(2);
            expect.add_term(
                Monomial { xexp: vec![0, 0], yexp: vec![k as u16, 0] },
                rat_int(fact),
            );
            expect.add_term(
                Monomial { xexp: vec![0, 0], yexp: vec![0, k as u16] },
                rat_int(-fact),
            );
            assert_eq!(cur, expect);
            // Bidegree of the j-th dihedral generator is (k - j, j);
            // k + 2 generators total.
            let gens: Vec<MultiPoly<Rational>> = dihedral_delta_generators(k);
            assert_eq!(gens.len(), k as usize + 2);
            for (j, g) in gens.iter().take(k as usize + 1).enumerate() {
                assert_eq!(g.bidegree(), Some((k - j as u32, j as u32)));
            }
        }
    }

    #[test]
    fn dihedral_generators_are_determinantal() {
        for k in 3..=5u32 {
            let group =
                GroupSpec::build(NamedFamily::parse(&format!("I2({})", k)).unwrap()).unwrap();
            for g in dihedral_delta_generators::<Cyclotomic>(k) {
                let proj = group.det_project(&g).unwrap();
                assert_eq!(proj, g, "I2({})", k);
            }
        }
    }

    #[test]
    fn vandermonde_examples() {
        // Type A, n = 2, X = {(0,0),(1,0)}: the classical Vandermonde
        // x2 - x1 (in our expansion order), i.e. x1 - x2 up to sign.
        let v: MultiPoly<Rational> = vandermonde_determinant(2, &[(0, 0), (1, 0)]);
        let diff = MultiPoly::var_x(0, 2).sub(&MultiPoly::var_x(1, 2));
        assert!(v == diff || v == diff.scale(&rat_int(-1)));
        // Type B, n = 2, X = {(1,0),(0,1)}: x1 y2 - x2 y1 up to sign.
        let v: MultiPoly<Rational> = vandermonde_determinant(2, &[(1, 0), (0, 1)]);
        let cross = MultiPoly::var_x(0, 2)
            .mul(&MultiPoly::var_y(1, 2))
            .sub(&MultiPoly::var_x(1, 2).mul(&MultiPoly::var_y(0, 2)));
        assert!(v == cross || v == cross.scale(&rat_int(-1)));
        // Vandermonde determinants are determinantal (det-projection fixed).
        let group = GroupSpec::build(NamedFamily::parse("B2").unwrap()).unwrap();
        let proj = group.det_project(&v).unwrap();
        assert_eq!(proj, v);
        // Parity rejection in type B: {(0,0),(1,0)} has an even pair, so it
        // never shows up in the enumeration.
        let mut seen_even = false;
        enumerate_exponent_sets(2, 1, 0, VdmParity::AllOdd, &mut |pairs| {
            if pairs.iter().any(|(a, b)| (a + b) % 2 == 0) {
                seen_even = true;
            }
            true
        });
        assert!(!seen_even);
    }

    #[test]
    fn invariant_spanner_examples() {
        // A1 at (1,0): span{x1 + x2}; at (1,1): dimension 2.
        let group = GroupSpec::build(NamedFamily::parse("A1").unwrap()).unwrap();
        let mut e: Engine<Rational> =
            Engine::new(group, Orientation::Standard, GeneratorSource::Generic);
        let b = e.invariant_spanners(1, 0).unwrap();
        assert_eq!(b.dim(), 1);
        let mut sym = MultiPoly::var_x(0, 2);
        sym.add_assign(&MultiPoly::var_x(1, 2));
        assert_eq!(b.polys[0].scale(&rat_int(2)), sym);
        assert_eq!(e.invariant_spanners(1, 1).unwrap().dim(), 2);
        // Cyclic(3) at (1,1): span{xy}.
        let c3 = GroupSpec::build(NamedFamily::parse("C3").unwrap()).unwrap();
        let mut e: Engine<Cyclotomic> =
            Engine::new(c3, Orientation::Standard, GeneratorSource::Generic);
        assert_eq!(e.invariant_spanners(1, 1).unwrap().dim(), 1);
    }

    #[test]
    fn product_space_examples() {
        // A1, m = 2, bidegree (2,0): one-dimensional, span{(x1-x2)^2}.
        let group = GroupSpec::build(NamedFamily::parse("A1").unwrap()).unwrap();
        let mut e: Engine<Rational> =
            Engine::new(group, Orientation::Standard, GeneratorSource::Generic);
        assert_eq!(e.product_space_component(2, 2, 0).unwrap().dim(), 1);
        // Cyclic(2), m = 2, bidegree (1,1): span{xy}.
        let c2 = GroupSpec::build(NamedFamily::parse("C2").unwrap()).unwrap();
        let mut e: Engine<Rational> =
            Engine::new(c2, Orientation::Standard, GeneratorSource::Generic);
        let b = e.product_space_component(2, 1, 1).unwrap();
        assert_eq!(b.dim(), 1);
    }

    #[test]
    fn full_coinvariant_small_groups() {
        // Cyclic(2): quotient basis {1, x, y}.
        let c2 = GroupSpec::build(NamedFamily::parse("C2").unwrap()).unwrap();
        let mut e = AnyEngine::new(c2, Orientation::Standard, GeneratorSource::Generic).unwrap();
        let h = e.full_coinvariant_hilbert(4, 4).unwrap();
        let mut expect = QTPoly::one();
        expect.add_term(1, 0, 1);
        expect.add_term(0, 1, 1);
        assert_eq!(h, expect);
        // I2(3): the closed form 1 + [k+1] + qt + 2 sum_{i=1}^{k-1} [i+1].
        let g = GroupSpec::build(NamedFamily::parse("I2(3)").unwrap()).unwrap();
        let n = g.nrefl;
        let mut e = AnyEngine::new(g, Orientation::Standard, GeneratorSource::Generic).unwrap();
        let h = e.full_coinvariant_hilbert(n + 2, n + 2).unwrap();
        let mut expect = QTPoly::one()
            .add(&qt_bracket(4))
            .add(&QTPoly::term(1, 1, 1));
        for i in 1..=2u32 {
            expect = expect.add(&qt_bracket(i + 1)).add(&qt_bracket(i + 1));
        }
        assert_eq!(h, expect);
    }

    #[test]
    fn orientation_swap_on_cyclic() {
        // Swapping the det orientation exchanges the roles of x and y
        // weights; for Cyclic(k) the table becomes the q<->t transpose.
        let group = GroupSpec::build(NamedFamily::parse("C3").unwrap()).unwrap();
        let mut e =
            AnyEngine::new(group, Orientation::Swapped, GeneratorSource::Generic).unwrap();
        let got = e.minimal_generator_dims(2).unwrap().1;
        assert_eq!(got, cyclic_qt(3, 2).swap_qt());
    }
}
