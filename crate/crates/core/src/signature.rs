//! Signature functions of normalized polynomials as integer step functions on
//! the circle, and the circle roots behind them.
//!
//! For a normalized `Δ` the function is `θ ↦ 1 - Sign(Δ(e^{2πiθ}))`. On the
//! circle `Δ` is real and equals `Q(2cos 2πθ)` where `Q` is its Chebyshev
//! form, so the jumps are the roots of `Q` in `[-2, 2]`, each seen twice
//! (once per half of the circle). Products of torus polynomials are
//! recognised and get exact rational breakpoints; anything else is handled
//! with Sturm isolation and [`Breakpoint::Algebraic`] points.

mod breakpoint;
mod sturm;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc as Shared;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use breakpoint::{Breakpoint, CircleRoot};
pub use sturm::{isolate_real_roots, RootInterval, SturmChain};

use crate::circle::{generator_sign_at, Arc, ArcSet, Sign, TurnAngle};
use crate::error::{Error, Result};
use crate::knots::FormalKnot;
use crate::laurent::{is_normalized, torus_poly_with_limit, LaurentPoly};
use crate::serial;
use crate::univariate::Poly;

/// Integer-valued piecewise-constant function on the circle.
///
/// `values[j]` is the value on the open arc from `breakpoints[j]` to
/// `breakpoints[j + 1]`, the last arc wrapping through `0`. With no
/// breakpoints there is a single value. At a breakpoint the function takes
/// the average of its two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "StepFunRepr", into = "StepFunRepr")]
pub struct StepFun {
    breakpoints: Vec<Breakpoint>,
    values: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct StepFunRepr {
    breakpoints: Vec<Breakpoint>,
    values: Vec<i64>,
}

impl From<StepFun> for StepFunRepr {
    fn from(f: StepFun) -> Self {
        StepFunRepr {
            breakpoints: f.breakpoints,
            values: f.values,
        }
    }
}

impl TryFrom<StepFunRepr> for StepFun {
    type Error = Error;
    fn try_from(r: StepFunRepr) -> Result<Self> {
        StepFun::from_parts(r.breakpoints, r.values)
    }
}

impl StepFun {
    pub fn constant(c: i64) -> Self {
        StepFun {
            breakpoints: Vec::new(),
            values: vec![c],
        }
    }

    /// Checks that the breakpoints are strictly increasing in `[0, 1)` and
    /// that there is one value per arc, then drops breakpoints where the
    /// value does not change.
    pub fn from_parts(breakpoints: Vec<Breakpoint>, values: Vec<i64>) -> Result<Self> {
        let arcs = breakpoints.len().max(1);
        if values.len() != arcs {
            return Err(Error::LengthMismatch(format!(
                "{} breakpoints need {arcs} values, got {}",
                breakpoints.len(),
                values.len()
            )));
        }
        if let Some(i) = (1..breakpoints.len()).find(|&i| breakpoints[i - 1] >= breakpoints[i]) {
            return Err(Error::NotIncreasing(format!(
                "breakpoint {} then {}",
                breakpoints[i - 1],
                breakpoints[i]
            )));
        }
        Ok(StepFun { breakpoints, values }.compact())
    }

    fn compact(self) -> Self {
        let n = self.breakpoints.len();
        if n == 0 {
            return self;
        }
        let mut bps = Vec::with_capacity(n);
        let mut vals = Vec::with_capacity(n);
        for (j, b) in self.breakpoints.into_iter().enumerate() {
            let before = self.values[(j + n - 1) % n];
            if before != self.values[j] {
                bps.push(b);
                vals.push(self.values[j]);
            }
        }
        if bps.is_empty() {
            vals.push(self.values[0]);
        }
        StepFun {
            breakpoints: bps,
            values: vals,
        }
    }

    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Value on the arc that ends at breakpoint `j`.
    fn value_before(&self, j: usize) -> i64 {
        let n = self.values.len();
        self.values[(j + n - 1) % n]
    }

    pub fn value_at(&self, theta: &TurnAngle) -> Rational64 {
        if self.breakpoints.is_empty() {
            return Rational64::from_integer(self.values[0]);
        }
        let probe = Breakpoint::Rational(theta.clone());
        let i = self.breakpoints.partition_point(|b| b < &probe);
        if i < self.breakpoints.len() && self.breakpoints[i] == probe {
            return Rational64::new(self.value_before(i) + self.values[i], 2);
        }
        Rational64::from_integer(self.value_before(i))
    }

    pub fn neg(&self) -> StepFun {
        StepFun {
            breakpoints: self.breakpoints.clone(),
            values: self.values.iter().map(|v| -v).collect(),
        }
    }

    /// Pointwise combination over the merged partition.
    fn zip_with(&self, other: &StepFun, op: impl Fn(i64, i64) -> i64) -> StepFun {
        let (a, b) = (&self.breakpoints, &other.breakpoints);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        // entries: (breakpoint, #a at or before it, #b at or before it)
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.cmp(y),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            let bp = match ord {
                Ordering::Less => {
                    i += 1;
                    a[i - 1].clone()
                }
                Ordering::Greater => {
                    j += 1;
                    b[j - 1].clone()
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    a[i - 1].clone()
                }
            };
            merged.push((bp, i, j));
        }
        if merged.is_empty() {
            return StepFun::constant(op(self.values[0], other.values[0]));
        }
        let after = |f: &StepFun, count: usize| {
            if count == 0 {
                *f.values.last().unwrap()
            } else {
                f.values[count - 1]
            }
        };
        let mut bps = Vec::with_capacity(merged.len());
        let mut vals = Vec::with_capacity(merged.len());
        for (bp, ca, cb) in merged {
            vals.push(op(after(self, ca), after(other, cb)));
            bps.push(bp);
        }
        StepFun {
            breakpoints: bps,
            values: vals,
        }
        .compact()
    }

    pub fn add(&self, other: &StepFun) -> StepFun {
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &StepFun) -> StepFun {
        self.zip_with(other, |x, y| x - y)
    }

    /// `max |f|` over the circle. Values at breakpoints are averages of the
    /// neighbouring arcs, so the arcs alone attain the maximum.
    pub fn sup_norm(&self) -> u64 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }

    /// The open set where the function equals `value`, when every breakpoint
    /// is rational.
    pub fn locus(&self, value: i64) -> Option<ArcSet> {
        if self.breakpoints.is_empty() {
            return Some(if self.values[0] == value {
                ArcSet::full()
            } else {
                ArcSet::empty()
            });
        }
        let turns: Vec<&TurnAngle> = self.breakpoints.iter().map(Breakpoint::as_rational).collect::<Option<_>>()?;
        let n = turns.len();
        let arcs: Vec<Arc> = (0..n)
            .filter(|&j| self.values[j] == value)
            .filter_map(|j| Arc::new(turns[j].clone(), turns[(j + 1) % n].clone()))
            .collect();
        Some(ArcSet::from_arcs(&arcs))
    }
}

/// Exact `max_θ |f(θ) - g(θ)|`.
pub fn sup_distance(f: &StepFun, g: &StepFun) -> u64 {
    f.sub(g).sup_norm()
}

/// Writes `d` as a product of torus polynomials `D_p` (largest first) if it
/// is one. Trial division from the top is enough: the largest `D_p` dividing
/// such a product is always one of its factors.
pub fn torus_factors(d: &LaurentPoly<BigInt>) -> Option<Vec<u64>> {
    let mut rest = d.clone();
    let mut out = Vec::new();
    loop {
        let (lo, hi) = (rest.min_exponent()?, rest.max_exponent()?);
        if lo == 0 && hi == 0 {
            return rest.coeff(0).is_one().then_some(out);
        }
        let span = u64::try_from(hi - lo).ok()?;
        if span % 2 == 1 || span > 4096 {
            return None;
        }
        // D_p(-1) = ±p, so only divisors of d(-1) can be factors
        let at_minus_one: BigInt = rest.terms().map(|(e, c)| if e % 2 == 0 { c.clone() } else { -c }).sum();
        if at_minus_one.is_zero() {
            return None;
        }
        let found = (1..=span / 2).rev().map(|h| 2 * h + 1).filter(|&p| (&at_minus_one % p).is_zero()).find_map(|p| {
            let dp = torus_poly_with_limit(p, u64::MAX).ok()?;
            rest.div_exact(&dp).map(|q| (p, q))
        });
        let (p, q) = found?;
        out.push(p);
        rest = q;
    }
}

fn check_normalized(d: &LaurentPoly<BigInt>) -> Result<()> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_normalized(d) {
        return Err(Error::NotNormalized(d.to_string()));
    }
    Ok(())
}

/// Rational breakpoints of a product of `D_p` with pairwise coprime
/// parameters, each a simple circle root.
fn torus_breakpoints(ps: &[u64]) -> Result<Vec<TurnAngle>> {
    for (i, &p) in ps.iter().enumerate() {
        if let Some(&q) = ps[i + 1..].iter().find(|&&q| p.gcd(&q) > 1) {
            return Err(Error::NonSimpleCircleRoots(format!("D_{p} and D_{q} share a root")));
        }
    }
    let mut pts: Vec<TurnAngle> = ps
        .iter()
        .flat_map(|&p| {
            (0..p as i64)
                .map(|k| 2 * k + 1)
                .filter(move |&n| n != p as i64)
                .map(move |n| TurnAngle::from_ratio(n, 2 * p as i64))
        })
        .collect();
    pts.sort();
    Ok(pts)
}

/// `θ ↦ 1 - Sign(d(e^{2πiθ}))` for normalized `d` whose circle roots are all
/// simple.
pub fn signature_of_poly(d: &LaurentPoly<BigInt>) -> Result<StepFun> {
    check_normalized(d)?;
    let breakpoints = match torus_factors(d) {
        Some(ps) => torus_breakpoints(&ps)?.into_iter().map(Breakpoint::Rational).collect(),
        None => {
            let iso = isolate_circle_roots(d)?;
            iso.check_simple()?;
            iso.breakpoints()
        }
    };
    // d(1) = 1 > 0, and the sign flips at every simple root
    let values = (0..breakpoints.len().max(1))
        .map(|j| if breakpoints.is_empty() || j % 2 == 1 { 0 } else { 2 })
        .collect();
    let n = breakpoints.len();
    debug_assert!(n % 2 == 0);
    Ok(StepFun {
        breakpoints,
        values,
    })
}

/// Roots of the Chebyshev form `Q` in `[-2, 2]`, isolated by Sturm sequences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootIsolation {
    #[serde(with = "poly_string")]
    chebyshev: Poly<BigInt>,
    intervals: Vec<RootInterval>,
    sign_pattern: Vec<i8>,
}

mod poly_string {
    use super::*;

    pub fn serialize<S: serde::Serializer>(p: &Poly<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Poly<BigInt>, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

/// Isolates the roots of `Q = to_chebyshev(d)` in `[-2, 2]`.
pub fn isolate_circle_roots(d: &LaurentPoly<BigInt>) -> Result<RootIsolation> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let q = d.to_chebyshev()?;
    let (lo, hi) = (-two(), two());
    let intervals = isolate_real_roots(&q, &lo, &hi);
    let sign_pattern = sturm::gap_signs(&q, &intervals, &lo, &hi)
        .into_iter()
        .map(Sign::to_i8)
        .collect();
    Ok(RootIsolation {
        chebyshev: q,
        intervals,
        sign_pattern,
    })
}

impl RootIsolation {
    pub fn chebyshev(&self) -> &Poly<BigInt> {
        &self.chebyshev
    }

    pub fn intervals(&self) -> &[RootInterval] {
        &self.intervals
    }

    /// Sign of `Q` on `[-2, first root)`, between consecutive roots, and on
    /// `(last root, 2]`; `0` marks an empty end gap.
    pub fn sign_pattern(&self) -> &[i8] {
        &self.sign_pattern
    }

    /// Distinct roots of `Q` in `[-2, 2]`.
    pub fn root_count(&self) -> usize {
        self.intervals.len()
    }

    /// Distinct roots of `d` on the unit circle: two per root of `Q` inside
    /// `(-2, 2)`, one for a root at `±2`.
    pub fn circle_root_count(&self) -> usize {
        self.intervals
            .iter()
            .map(|iv| match iv {
                RootInterval::Exact(x) if x.abs() == two() => 1,
                _ => 2,
            })
            .sum()
    }

    /// Shrinks every interval to width at most `width`.
    pub fn refine(&mut self, width: &BigRational) {
        let sq = self.chebyshev.squarefree_part();
        for iv in &mut self.intervals {
            iv.refine(&sq, width);
        }
    }

    fn check_simple(&self) -> Result<()> {
        let q = &self.chebyshev;
        if q.eval_rational(&-two()).is_zero() {
            return Err(Error::NonSimpleCircleRoots("root at t = -1".into()));
        }
        let g = q.gcd(&q.derivative());
        if g.degree().unwrap_or(0) > 0 && !isolate_real_roots(&g, &-two(), &two()).is_empty() {
            return Err(Error::NonSimpleCircleRoots(format!("repeated factor {g}")));
        }
        Ok(())
    }

    /// Circle points of the roots in counterclockwise order from `0`.
    pub fn breakpoints(&self) -> Vec<Breakpoint> {
        let sq = Shared::new(self.chebyshev.squarefree_part());
        let mut upper: Vec<Breakpoint> = Vec::new();
        let mut lower: Vec<Breakpoint> = Vec::new();
        for iv in &self.intervals {
            let b = Breakpoint::from_root(sq.clone(), iv.clone(), false);
            let on_axis = matches!(iv, RootInterval::Exact(x) if x.abs() == two());
            if !on_axis {
                lower.push(b.conjugate());
            }
            upper.push(b);
        }
        let mut out = upper;
        out.extend(lower);
        out.sort();
        out
    }
}

/// Smallest angular distance between consecutive circle roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "turns", rename_all = "snake_case")]
pub enum RootGap {
    #[serde(with = "serial::ratio")]
    Exact(BigRational),
    #[serde(with = "serial::ratio")]
    AtLeast(BigRational),
}

impl RootGap {
    /// The exact gap or the certified lower bound.
    pub fn bound(&self) -> &BigRational {
        match self {
            RootGap::Exact(g) | RootGap::AtLeast(g) => g,
        }
    }
}

/// Exact minimal root gap of `Π D_p` over the distinct parameters `ps`:
/// `1 / max lcm(p, q)` over pairs, `p = q` included. One full turn when there
/// are no parameters.
pub fn generator_root_gap<'a>(ps: impl IntoIterator<Item = &'a BigUint>) -> BigRational {
    let ps: BTreeSet<&BigUint> = ps.into_iter().collect();
    let mut worst = BigUint::one();
    for (i, p) in ps.iter().enumerate() {
        for q in ps.iter().skip(i) {
            let l = p.lcm(q);
            if l > worst {
                worst = l;
            }
        }
    }
    BigRational::new(BigInt::one(), BigInt::from(worst))
}

fn gap_of_turns(points: &[TurnAngle]) -> BigRational {
    if points.len() < 2 {
        return BigRational::one();
    }
    let n = points.len();
    (0..n)
        .map(|i| {
            let (a, b) = (points[i].value(), points[(i + 1) % n].value());
            let g = b - a;
            if g.is_positive() {
                g
            } else {
                g + BigRational::one()
            }
        })
        .min()
        .unwrap()
}

/// Minimal distance in turns between consecutive distinct roots of the
/// symmetric `d` on the unit circle. Exact for products of torus polynomials
/// and whenever all roots have rational angles, otherwise a certified
/// positive lower bound. One full turn when there is at most one root.
pub fn min_root_gap(d: &LaurentPoly<BigInt>) -> Result<RootGap> {
    if d.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(ps) = torus_factors(d) {
        let ps: Vec<BigUint> = ps.into_iter().map(BigUint::from).collect();
        return Ok(RootGap::Exact(generator_root_gap(&ps)));
    }
    let bps = isolate_circle_roots(d)?.breakpoints();
    if bps.len() < 2 {
        return Ok(RootGap::Exact(BigRational::one()));
    }
    if let Some(turns) = bps.iter().map(|b| b.as_rational().cloned()).collect::<Option<Vec<_>>>() {
        return Ok(RootGap::Exact(gap_of_turns(&turns)));
    }
    let n = bps.len();
    let mut bits = 24;
    loop {
        let enc: Vec<_> = bps.iter().map(|b| b.turn_enclosure(bits)).collect();
        let gap = (0..n)
            .map(|i| {
                let next = &enc[(i + 1) % n].lo;
                let g = next - &enc[i].hi;
                if i + 1 == n {
                    g + BigRational::one()
                } else {
                    g
                }
            })
            .min()
            .unwrap();
        if gap.is_positive() {
            return Ok(RootGap::AtLeast(gap));
        }
        bits *= 2;
    }
}

/// `1 - sign` of `D_p`: 2 inside `A_p`, 0 outside, 1 at a root.
pub(crate) fn generator_signature_at(p: &BigUint, theta: &TurnAngle) -> i64 {
    1 - generator_sign_at(p, theta).to_i8() as i64
}

/// Signature of a formal knot at `θ`: the sum over its generators, negated
/// for mirrored ones. Works for parameters of any size.
pub fn eval_formal_signature(k: &FormalKnot, theta: &TurnAngle) -> i64 {
    k.generators()
        .map(|(g, m)| {
            let s = generator_signature_at(g.p(), theta) * m as i64;
            if g.is_mirrored() {
                -s
            } else {
                s
            }
        })
        .sum()
}

/// Signature function of a formal knot with all parameters at most `limit`,
/// as a sum of generator step functions with rational breakpoints.
pub fn formal_signature_stepfun(k: &FormalKnot, limit: u64) -> Result<StepFun> {
    let mut acc = StepFun::constant(0);
    for (g, m) in k.generators() {
        let p = g.p().to_u64().filter(|&p| p <= limit).ok_or_else(|| Error::MaterializationLimit {
            p: g.p().to_string(),
            limit,
        })?;
        let bps = torus_breakpoints(&[p])?;
        let n = bps.len();
        let sign = if g.is_mirrored() { -1 } else { 1 };
        let values = (0..n).map(|j| if j % 2 == 0 { 2 * sign } else { 0 }).collect();
        let f = StepFun {
            breakpoints: bps.into_iter().map(Breakpoint::Rational).collect(),
            values,
        };
        for _ in 0..m {
            acc = acc.add(&f);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::arcs_of_generator;
    use crate::laurent::torus_poly;

    fn lp(s: &str) -> LaurentPoly<BigInt> {
        s.parse().unwrap()
    }

    fn t(n: i64, d: i64) -> TurnAngle {
        TurnAngle::from_ratio(n, d)
    }

    #[test]
    fn constant_one_has_zero_signature() {
        let f = signature_of_poly(&LaurentPoly::one()).unwrap();
        assert_eq!(f, StepFun::constant(0));
    }

    #[test]
    fn trefoil_signature() {
        let f = signature_of_poly(&torus_poly(3).unwrap()).unwrap();
        let bps: Vec<_> = f.breakpoints().iter().map(|b| b.as_rational().unwrap().clone()).collect();
        assert_eq!(bps, vec![t(1, 6), t(5, 6)]);
        assert_eq!(f.values(), &[2, 0]);
        assert_eq!(f.value_at(&t(1, 2)), Rational64::from_integer(2));
        assert_eq!(f.value_at(&t(0, 1)), Rational64::from_integer(0));
        assert_eq!(f.value_at(&t(1, 6)), Rational64::from_integer(1));
        assert_eq!(f.value_at(&t(5, 6)), Rational64::from_integer(1));
    }

    #[test]
    fn general_polynomial_has_one_algebraic_pair() {
        let d = lp("-t^-2+3t^-1-3+3t-t^2");
        let f = signature_of_poly(&d).unwrap();
        assert_eq!(f.breakpoints().len(), 2);
        assert!(f.breakpoints().iter().all(|b| b.as_rational().is_none()));
        assert_eq!(f.values(), &[2, 0]);
        // θ* = arccos((3-√5)/4)/2π ≈ 0.2098
        assert_eq!(f.value_at(&t(1, 5)), Rational64::from_integer(0));
        assert_eq!(f.value_at(&t(1, 4)), Rational64::from_integer(2));
        assert_eq!(f.value_at(&t(3, 4)), Rational64::from_integer(2));
        assert_eq!(f.value_at(&t(4, 5)), Rational64::from_integer(0));
        let iso = isolate_circle_roots(&d).unwrap();
        assert_eq!(iso.root_count(), 1);
        assert_eq!(iso.circle_root_count(), 2);
        assert_eq!(iso.chebyshev(), &"-1+3x-x^2".parse::<Poly<BigInt>>().unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(signature_of_poly(&lp("t^-1+t")), Err(Error::NotNormalized(_))));
        let d3 = torus_poly(3).unwrap();
        assert!(matches!(signature_of_poly(&(&d3 * &d3)), Err(Error::NonSimpleCircleRoots(_))));
        let d9 = torus_poly(9).unwrap();
        assert!(matches!(signature_of_poly(&(&d3 * &d9)), Err(Error::NonSimpleCircleRoots(_))));
    }

    #[test]
    fn torus_signature_locus_matches_arcs() {
        for p in (3..=41).step_by(2) {
            let f = signature_of_poly(&torus_poly(p).unwrap()).unwrap();
            assert_eq!(f.locus(2).unwrap(), arcs_of_generator(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn torus_products_keep_rational_breakpoints() {
        let d = &torus_poly(3).unwrap() * &torus_poly(5).unwrap();
        assert_eq!(torus_factors(&d), Some(vec![5, 3]));
        let f = signature_of_poly(&d).unwrap();
        assert_eq!(f.breakpoints().len(), 6);
        assert!(f.breakpoints().iter().all(|b| b.as_rational().is_some()));
        assert_eq!(torus_factors(&lp("-t^-2+3t^-1-3+3t-t^2")), None);
    }

    #[test]
    fn sup_distance_examples() {
        let s3 = signature_of_poly(&torus_poly(3).unwrap()).unwrap();
        let s15 = signature_of_poly(&torus_poly(15).unwrap()).unwrap();
        let zero = StepFun::constant(0);
        assert_eq!(sup_distance(&s3, &s3), 0);
        assert_eq!(sup_distance(&s3, &zero), 2);
        assert_eq!(sup_distance(&s3.add(&s15), &zero), 4);
        assert_eq!(s3.neg().neg(), s3);
        assert_eq!(s3.sub(&s3), zero);
    }

    #[test]
    fn mixed_breakpoints_merge() {
        let a = signature_of_poly(&lp("-t^-2+3t^-1-3+3t-t^2")).unwrap();
        let b = signature_of_poly(&torus_poly(5).unwrap()).unwrap();
        let s = a.add(&b);
        assert_eq!(s.breakpoints().len(), 6);
        assert_eq!(s.sup_norm(), 4);
        for (n, d) in [(1, 20), (1, 4), (1, 2), (3, 4), (19, 20), (3, 10)] {
            let th = t(n, d);
            assert_eq!(s.value_at(&th), a.value_at(&th) + b.value_at(&th), "{th}");
        }
    }

    #[test]
    fn root_gaps() {
        let gap = |p| min_root_gap(&torus_poly(p).unwrap()).unwrap();
        assert_eq!(gap(3), RootGap::Exact(BigRational::new(1.into(), 3.into())));
        for p in [5u64, 15] {
            assert_eq!(gap(p), RootGap::Exact(BigRational::new(1.into(), BigInt::from(p))));
        }
        let d = &torus_poly(3).unwrap() * &torus_poly(5).unwrap();
        assert_eq!(min_root_gap(&d).unwrap(), RootGap::Exact(BigRational::new(1.into(), 15.into())));
        assert_eq!(min_root_gap(&LaurentPoly::one()).unwrap(), RootGap::Exact(BigRational::one()));
        // pair at θ* and 1 - θ*: gaps 2θ* ≈ 0.4388 and 1 - 2θ*
        let g = min_root_gap(&lp("-t^-2+3t^-1-3+3t-t^2")).unwrap();
        let RootGap::AtLeast(b) = g else { panic!("expected a bound") };
        let v = b.to_f64().unwrap();
        assert!(v > 0.43 && v <= 0.43884, "{v}");
    }

    #[test]
    fn generator_gap_formula() {
        let ps = |v: &[u32]| v.iter().map(|&p| BigUint::from(p)).collect::<Vec<_>>();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(generator_root_gap(&ps(&[])), r(1, 1));
        assert_eq!(generator_root_gap(&ps(&[3])), r(1, 3));
        assert_eq!(generator_root_gap(&ps(&[3, 5])), r(1, 15));
        assert_eq!(generator_root_gap(&ps(&[3, 9])), r(1, 9));
    }

    #[test]
    fn stepfun_serde_round_trip() {
        let f = signature_of_poly(&lp("-t^-2+3t^-1-3+3t-t^2")).unwrap().add(&signature_of_poly(&torus_poly(3).unwrap()).unwrap());
        let s = serde_json::to_string(&f).unwrap();
        let back: StepFun = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let iso = isolate_circle_roots(&torus_poly(5).unwrap()).unwrap();
        let back: RootIsolation = serde_json::from_str(&serde_json::to_string(&iso).unwrap()).unwrap();
        assert_eq!(back, iso);
    }
}
