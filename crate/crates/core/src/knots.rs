//! Formal knots: multisets of gordian generators `K_p` and their mirrors.
//!
//! A generator `K_p` stands for a gordian knot with Alexander polynomial
//! `D_p`; its signature is `1 - Sign(D_p)`, evaluated lazily through
//! [`generator_sign_at`](crate::circle::generator_sign_at) so `p` can be
//! astronomically large. Two formal knots are equal when their multisets are.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::circle::{independence_witness, Sign, TurnAngle};
use crate::error::{Error, Result};
use crate::laurent::{torus_poly_with_limit, LaurentPoly};
use crate::serial;
use crate::signature::{eval_formal_signature, generator_root_gap};
use crate::DEFAULT_MAX_P;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    p: BigUint,
    mirrored: bool,
}

impl GeneratorId {
    pub fn new(p: BigUint, mirrored: bool) -> Result<Self> {
        if p.is_even() {
            return Err(Error::EvenParameter(p.to_string()));
        }
        if p < BigUint::from(3u32) {
            return Err(Error::ParameterTooSmall(p.to_string()));
        }
        Ok(GeneratorId { p, mirrored })
    }

    pub fn p(&self) -> &BigUint {
        &self.p
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    pub fn mirror(&self) -> Self {
        GeneratorId {
            p: self.p.clone(),
            mirrored: !self.mirrored,
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mirrored {
            write!(f, "mirror(K_{})", self.p)
        } else {
            write!(f, "K_{}", self.p)
        }
    }
}

/// Connected sum of generators, stored as a multiset. The empty multiset is
/// the unknot.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<GeneratorRecord>", into = "Vec<GeneratorRecord>")]
pub struct FormalKnot {
    gens: BTreeMap<GeneratorId, u32>,
}

#[derive(Serialize, Deserialize)]
struct GeneratorRecord {
    #[serde(with = "serial::decimal")]
    p: BigUint,
    mirrored: bool,
    multiplicity: u32,
}

impl From<FormalKnot> for Vec<GeneratorRecord> {
    fn from(k: FormalKnot) -> Self {
        k.gens
            .into_iter()
            .map(|(g, m)| GeneratorRecord {
                p: g.p,
                mirrored: g.mirrored,
                multiplicity: m,
            })
            .collect()
    }
}

impl TryFrom<Vec<GeneratorRecord>> for FormalKnot {
    type Error = Error;
    fn try_from(records: Vec<GeneratorRecord>) -> Result<Self> {
        let mut k = FormalKnot::unknot();
        for r in records {
            let g = GeneratorId::new(r.p, r.mirrored)?;
            k.add(g, r.multiplicity);
        }
        Ok(k)
    }
}

impl FormalKnot {
    pub fn unknot() -> Self {
        FormalKnot::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        let mut k = FormalKnot::unknot();
        k.add(g, 1);
        k
    }

    /// `K_p`, or its mirror.
    pub fn torus(p: impl Into<BigUint>, mirrored: bool) -> Result<Self> {
        Ok(FormalKnot::generator(GeneratorId::new(p.into(), mirrored)?))
    }

    fn add(&mut self, g: GeneratorId, m: u32) {
        if m > 0 {
            *self.gens.entry(g).or_insert(0) += m;
        }
    }

    pub fn is_unknot(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators with multiplicities, in canonical order.
    pub fn generators(&self) -> impl Iterator<Item = (&GeneratorId, u32)> {
        self.gens.iter().map(|(g, &m)| (g, m))
    }

    pub fn multiplicity(&self, g: &GeneratorId) -> u32 {
        self.gens.get(g).copied().unwrap_or(0)
    }

    /// Number of generators counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.gens.values().map(|&m| m as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_unknot()
    }

    pub fn connected_sum(&self, other: &FormalKnot) -> FormalKnot {
        let mut k = self.clone();
        for (g, m) in other.generators() {
            k.add(g.clone(), m);
        }
        k
    }

    pub fn mirror(&self) -> FormalKnot {
        FormalKnot {
            gens: self.gens.iter().map(|(g, &m)| (g.mirror(), m)).collect(),
        }
    }

    /// Removes one copy of `g`; `None` if it is absent.
    pub fn remove_one(&self, g: &GeneratorId) -> Option<FormalKnot> {
        let mut k = self.clone();
        let m = k.gens.get_mut(g)?;
        *m -= 1;
        if *m == 0 {
            k.gens.remove(g);
        }
        Some(k)
    }

    /// Distinct parameters, mirrored or not.
    pub fn parameters(&self) -> BTreeSet<&BigUint> {
        self.gens.keys().map(|g| &g.p).collect()
    }

    /// `p ↦ (copies of K_p) - (copies of mirror(K_p))`. The signature is
    /// `Σ c_p σ_p`, so this is all it depends on.
    pub fn signature_coefficients(&self) -> BTreeMap<BigUint, i64> {
        let mut c: BTreeMap<BigUint, i64> = BTreeMap::new();
        for (g, m) in self.generators() {
            let v = if g.mirrored { -(m as i64) } else { m as i64 };
            *c.entry(g.p.clone()).or_insert(0) += v;
        }
        c.retain(|_, v| *v != 0);
        c
    }

    pub fn signature_at(&self, theta: &TurnAngle) -> i64 {
        eval_formal_signature(self, theta)
    }

    /// Product of the constituent `D_p` (mirrors have the same polynomial).
    /// Refuses parameters above [`DEFAULT_MAX_P`].
    pub fn alexander(&self) -> Result<LaurentPoly<BigInt>> {
        self.alexander_with_limit(DEFAULT_MAX_P)
    }

    /// As [`alexander`](Self::alexander), also refusing when the total span
    /// `Σ (p - 1)` exceeds `limit`.
    pub fn alexander_with_limit(&self, limit: u64) -> Result<LaurentPoly<BigInt>> {
        let mut span = 0u64;
        let mut acc = LaurentPoly::one();
        for (g, m) in self.generators() {
            let p = g.p.to_u64().filter(|&p| p <= limit).ok_or_else(|| Error::MaterializationLimit {
                p: g.p.to_string(),
                limit,
            })?;
            span = span.saturating_add((p - 1).saturating_mul(m as u64));
            if span > limit {
                return Err(Error::MaterializationLimit {
                    p: g.p.to_string(),
                    limit,
                });
            }
            let d = torus_poly_with_limit(p, limit)?;
            for _ in 0..m {
                acc = &acc * &d;
            }
        }
        Ok(acc)
    }

    /// Exact minimal gap between consecutive circle roots of the Alexander
    /// polynomial, without materializing it. One full turn for the unknot.
    pub fn root_gap(&self) -> BigRational {
        generator_root_gap(self.parameters())
    }
}

impl fmt::Display for FormalKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("U");
        }
        let mut first = true;
        for (g, m) in self.generators() {
            for _ in 0..m {
                if !first {
                    f.write_str(" # ")?;
                }
                first = false;
                write!(f, "{g}")?;
            }
        }
        Ok(())
    }
}

/// Lazily extended table of `p_n = (2n+1)(2n-1)⋯3`.
#[derive(Clone, Debug)]
pub struct PSequence {
    cache: Vec<BigUint>,
}

impl Default for PSequence {
    fn default() -> Self {
        PSequence::new()
    }
}

impl PSequence {
    pub fn new() -> Self {
        PSequence {
            cache: vec![BigUint::one()],
        }
    }

    pub fn get(&mut self, n: u64) -> Result<BigUint> {
        if n < 1 {
            return Err(Error::SequenceIndex);
        }
        while (self.cache.len() as u64) <= n {
            let k = self.cache.len() as u64;
            let next = self.cache.last().unwrap() * BigUint::from(2 * k + 1);
            self.cache.push(next);
        }
        Ok(self.cache[n as usize].clone())
    }
}

pub fn p_sequence(n: u64) -> Result<BigUint> {
    PSequence::new().get(n)
}

/// Lower bound on the gordian distance together with a point where the
/// signature difference reaches its maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBound {
    pub bound: u64,
    /// `max_θ |σ_{k1}(θ) - σ_{k2}(θ)|`.
    pub sup: u64,
    pub theta: Option<TurnAngle>,
}

/// Largest `Σ p` for which the merged breakpoints of all constituents are
/// enumerated when no witness is available.
const SCAN_LIMIT: u64 = 20_000;

/// `⌈ max_θ |σ_{k1}(θ) - σ_{k2}(θ)| / 2 ⌉`.
pub fn distance_lower_bound(k1: &FormalKnot, k2: &FormalKnot) -> Result<u64> {
    distance_lower_bound_with_witness(k1, k2).map(|b| b.bound)
}

pub fn distance_lower_bound_with_witness(k1: &FormalKnot, k2: &FormalKnot) -> Result<DistanceBound> {
    let mut c = k1.signature_coefficients();
    for (p, v) in k2.signature_coefficients() {
        *c.entry(p).or_insert(0) -= v;
    }
    c.retain(|_, v| *v != 0);
    let from_sup = |sup: u64, theta| DistanceBound {
        bound: sup.div_ceil(2),
        sup,
        theta,
    };
    if c.is_empty() {
        return Ok(from_sup(0, None));
    }
    // σ_p ∈ [0, 2], so the difference lies in [-2N, 2P]
    let pos: u64 = c.values().filter(|v| **v > 0).map(|v| v.unsigned_abs()).sum();
    let neg: u64 = c.values().filter(|v| **v < 0).map(|v| v.unsigned_abs()).sum();
    let ps: Vec<BigUint> = c.keys().cloned().collect();
    // Each side is attained where every generator on it sits inside its A_p
    // and every generator on the other side outside.
    let (best, dir) = if pos >= neg { (pos, 1i64) } else { (neg, -1i64) };
    let signs: Vec<Sign> = c
        .values()
        .map(|v| if v.signum() == dir { Sign::Negative } else { Sign::Positive })
        .collect();
    if let Ok(theta) = independence_witness(&ps, &signs) {
        return Ok(from_sup(2 * best, Some(theta)));
    }

    let total: Option<u64> = ps.iter().try_fold(0u64, |acc, p| acc.checked_add(p.to_u64()?));
    if !total.is_some_and(|t| t <= SCAN_LIMIT) {
        return Err(Error::Undecided(format!(
            "no witness for the extremal sign pattern and Σp exceeds {SCAN_LIMIT}"
        )));
    }
    Ok(sweep(&c))
}

/// Exact sup of `|Σ c_p σ_p|` by walking the merged breakpoints
/// `(2k+1)/(2p)` in order. Each `σ_p` is 0 just after `θ = 0` and toggles
/// between 0 and 2 at each of its breakpoints.
fn sweep(c: &BTreeMap<BigUint, i64>) -> DistanceBound {
    // (numerator, denominator, index among the breakpoints of p, c_p)
    let mut events: Vec<(u64, u64, u64, i64)> = Vec::new();
    for (p, &cp) in c {
        let p = p.to_u64().expect("bounded by the scan limit");
        let idx = (0..p).filter(|&k| 2 * k + 1 != p);
        events.extend(idx.enumerate().map(|(j, k)| (2 * k + 1, 2 * p, j as u64, cp)));
    }
    let key = |e: &(u64, u64, u64, i64)| (e.0, e.1);
    events.sort_by(|a, b| (a.0 as u128 * b.1 as u128).cmp(&(b.0 as u128 * a.1 as u128)));
    let same = |a: (u64, u64), b: (u64, u64)| a.0 as u128 * b.1 as u128 == b.0 as u128 * a.1 as u128;
    let turn = |(n, d): (u64, u64)| BigRational::new(BigInt::from(n), BigInt::from(d));
    let mut value = 0i64;
    let mut best: (u64, Option<TurnAngle>) = (0, None);
    let mut i = 0;
    while i < events.len() {
        let at = key(&events[i]);
        while i < events.len() && same(key(&events[i]), at) {
            let (_, _, j, cp) = events[i];
            value += if j % 2 == 0 { 2 * cp } else { -2 * cp };
            i += 1;
        }
        let next = match events.get(i) {
            Some(e) => turn(key(e)),
            None => turn(key(&events[0])) + BigRational::one(),
        };
        let diff = value.unsigned_abs();
        if diff > best.0 {
            let mid = (turn(at) + next) / BigRational::from_integer(2.into());
            best = (diff, Some(TurnAngle::new(mid)));
        }
    }
    DistanceBound {
        bound: best.0.div_ceil(2),
        sup: best.0,
        theta: best.1,
    }
}

/// Size of the multiset symmetric difference: one crossing change per
/// generator to add or remove.
pub fn unknotting_upper_bound(k1: &FormalKnot, k2: &FormalKnot) -> u64 {
    let keys: BTreeSet<&GeneratorId> = k1.gens.keys().chain(k2.gens.keys()).collect();
    keys.into_iter()
        .map(|g| (k1.multiplicity(g) as i64 - k2.multiplicity(g) as i64).unsigned_abs())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: u32) -> FormalKnot {
        FormalKnot::torus(p, false).unwrap()
    }

    fn km(p: u32) -> FormalKnot {
        FormalKnot::torus(p, true).unwrap()
    }

    #[test]
    fn p_sequence_values() {
        assert_eq!(p_sequence(1).unwrap(), BigUint::from(3u32));
        assert_eq!(p_sequence(2).unwrap(), BigUint::from(15u32));
        assert_eq!(p_sequence(3).unwrap(), BigUint::from(105u32));
        assert_eq!(p_sequence(4).unwrap(), BigUint::from(945u32));
        assert_eq!(p_sequence(0), Err(Error::SequenceIndex));
        let mut seq = PSequence::new();
        for n in 2..=30 {
            let ratio = seq.get(n).unwrap() / seq.get(n - 1).unwrap();
            assert_eq!(ratio, BigUint::from(2 * n + 1));
        }
    }

    #[test]
    fn sum_and_mirror() {
        let a = k(3).connected_sum(&km(15));
        assert_eq!(FormalKnot::unknot().connected_sum(&a), a);
        assert_eq!(a.mirror().mirror(), a);
        assert_ne!(k(3).connected_sum(&km(3)), FormalKnot::unknot());
        assert_eq!(a.to_string(), "K_3 # mirror(K_15)");
        assert!(FormalKnot::torus(4u32, false).is_err());
        assert!(FormalKnot::torus(1u32, false).is_err());
    }

    #[test]
    fn signature_examples() {
        let t = |n, d| TurnAngle::from_ratio(n, d);
        assert_eq!(FormalKnot::unknot().signature_at(&t(1, 3)), 0);
        assert_eq!(k(3).signature_at(&t(1, 2)), 2);
        assert_eq!(k(3).connected_sum(&km(15)).signature_at(&t(1, 15)), -2);
    }

    #[test]
    fn distance_bounds() {
        let u = FormalKnot::unknot();
        assert_eq!(distance_lower_bound(&k(3), &k(3)).unwrap(), 0);
        assert_eq!(distance_lower_bound(&u, &k(3)).unwrap(), 1);
        assert_eq!(distance_lower_bound(&k(3), &km(3)).unwrap(), 2);
        assert_eq!(unknotting_upper_bound(&k(3), &k(3)), 0);
        assert_eq!(unknotting_upper_bound(&u, &k(3).connected_sum(&km(15))), 2);
        assert_eq!(unknotting_upper_bound(&k(3), &k(3).connected_sum(&k(5))), 1);
        // no witness for (5, 7) spacing; the scan decides it
        let b = distance_lower_bound_with_witness(&u, &k(5).connected_sum(&k(7))).unwrap();
        assert_eq!(b.sup, 4);
        let theta = b.theta.unwrap();
        assert_eq!(k(5).connected_sum(&k(7)).signature_at(&theta), 4);
    }

    #[test]
    fn alexander_is_product() {
        let a = k(3).connected_sum(&km(5));
        let d = a.alexander().unwrap();
        let d3 = torus_poly_with_limit(3, 10).unwrap();
        let d5 = torus_poly_with_limit(5, 10).unwrap();
        assert_eq!(d, &d3 * &d5);
        let huge = FormalKnot::torus(p_sequence(10).unwrap(), false).unwrap();
        assert!(matches!(huge.alexander(), Err(Error::MaterializationLimit { .. })));
    }

    #[test]
    fn serde_is_sorted_records() {
        let a = km(15).connected_sum(&k(3)).connected_sum(&k(3));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"[{"p":"3","mirrored":false,"multiplicity":2},{"p":"15","mirrored":true,"multiplicity":1}]"#
        );
        let back: FormalKnot = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<FormalKnot>(r#"[{"p":"4","mirrored":false,"multiplicity":1}]"#).is_err());
    }

    #[test]
    fn root_gap_of_knots() {
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(FormalKnot::unknot().root_gap(), r(1, 1));
        assert_eq!(k(3).root_gap(), r(1, 3));
        assert_eq!(k(3).connected_sum(&km(5)).root_gap(), r(1, 15));
    }
}
