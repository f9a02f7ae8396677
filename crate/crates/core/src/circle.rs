//! Exact arc-set algebra on the circle, with angles measured in turns.
//!
//! Arc sets are the regular open subsets of the circle with finitely many
//! boundary points. Complement means "interior of the complement", so the
//! family is closed under the boolean operations and every law of a boolean
//! algebra holds exactly.
//!
//! The arcs `A_p` where the torus polynomial `D_p` is negative have breakpoints
//! at `(2k+1)/(2p)` turns (except `1/2`, which is not a sign change). They can
//! be materialized for moderate `p`, but [`generator_sign_at`] and
//! [`independence_witness`] never enumerate them and work for any `p`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::check_generator_parameter;
use crate::serial;
use crate::DEFAULT_MAX_P;

/// A point of the circle as an exact fraction of a full turn, in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TurnAngle(BigRational);

impl TurnAngle {
    /// Reduces any rational modulo one turn.
    pub fn new(r: BigRational) -> Self {
        let f = r.floor();
        TurnAngle(r - f)
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        TurnAngle::new(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        TurnAngle(BigRational::zero())
    }

    pub fn half() -> Self {
        TurnAngle::from_ratio(1, 2)
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    /// `θ ↦ 1 - θ` (complex conjugation of `e^{2πiθ}`).
    pub fn conjugate(&self) -> Self {
        TurnAngle::new(-self.0.clone())
    }
}

impl fmt::Display for TurnAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serial::ratio_string(&self.0))
    }
}

impl FromStr for TurnAngle {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        serial::parse_ratio(s, "turn angle").map(TurnAngle::new)
    }
}

impl Serialize for TurnAngle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TurnAngle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    /// Accepts only `+1` and `-1`.
    pub fn from_unit(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Positive),
            -1 => Ok(Sign::Negative),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn of_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// Open arc travelled counterclockwise from `lo` to `hi`; wraps past zero when
/// `hi < lo`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arc {
    lo: TurnAngle,
    hi: TurnAngle,
}

impl Arc {
    /// `None` when `lo == hi` (no proper arc).
    pub fn new(lo: TurnAngle, hi: TurnAngle) -> Option<Self> {
        (lo != hi).then_some(Arc { lo, hi })
    }

    pub fn lo(&self) -> &TurnAngle {
        &self.lo
    }

    pub fn hi(&self) -> &TurnAngle {
        &self.hi
    }

    pub fn wraps(&self) -> bool {
        self.hi < self.lo
    }

    pub fn length(&self) -> BigRational {
        let d = self.hi.value() - self.lo.value();
        if d.is_negative() {
            d + BigRational::one()
        } else {
            d
        }
    }

    pub fn midpoint(&self) -> TurnAngle {
        TurnAngle::new(self.lo.value() + self.length() / BigRational::from_integer(2.into()))
    }

    pub fn contains(&self, t: &TurnAngle) -> bool {
        if self.wraps() {
            t > &self.lo || t < &self.hi
        } else {
            t > &self.lo && t < &self.hi
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Finite union of open arcs in canonical form.
///
/// Stored as the sorted boundary points plus whether the gap after the first
/// point is inside. Gaps alternate in/out, so the point count is even; with no
/// points the set is empty or the full circle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcSet {
    points: Vec<TurnAngle>,
    first_inside: bool,
}

impl ArcSet {
    pub fn empty() -> Self {
        ArcSet {
            points: Vec::new(),
            first_inside: false,
        }
    }

    pub fn full() -> Self {
        ArcSet {
            points: Vec::new(),
            first_inside: true,
        }
    }

    pub fn from_arc(arc: &Arc) -> Self {
        if arc.wraps() {
            ArcSet {
                points: vec![arc.hi.clone(), arc.lo.clone()],
                first_inside: false,
            }
        } else {
            ArcSet {
                points: vec![arc.lo.clone(), arc.hi.clone()],
                first_inside: true,
            }
        }
    }

    /// Union of arbitrary (possibly overlapping or touching) arcs.
    pub fn from_arcs<'a>(arcs: impl IntoIterator<Item = &'a Arc>) -> Self {
        arcs.into_iter()
            .fold(ArcSet::empty(), |acc, a| acc.union(&ArcSet::from_arc(a)))
    }

    pub fn is_full(&self) -> bool {
        self.points.is_empty() && self.first_inside
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && !self.first_inside
    }

    fn gap_inside(&self, j: usize) -> bool {
        self.first_inside ^ (j % 2 == 1)
    }

    /// Membership of a point; boundary points are never members.
    pub fn contains(&self, t: &TurnAngle) -> bool {
        if self.points.is_empty() {
            return self.first_inside;
        }
        match self.points.binary_search(t) {
            Ok(_) => false,
            Err(0) => self.gap_inside(self.points.len() - 1),
            Err(i) if i == self.points.len() => self.gap_inside(self.points.len() - 1),
            Err(i) => self.gap_inside(i - 1),
        }
    }

    fn combine(&self, other: &ArcSet, op: impl Fn(bool, bool) -> bool) -> ArcSet {
        let mut pts: Vec<TurnAngle> = self.points.iter().chain(&other.points).cloned().collect();
        pts.sort();
        pts.dedup();
        if pts.is_empty() {
            return ArcSet {
                points: Vec::new(),
                first_inside: op(self.first_inside, other.first_inside),
            };
        }
        let m = pts.len();
        let flags: Vec<bool> = (0..m)
            .map(|j| {
                let mid = gap_midpoint(&pts[j], &pts[(j + 1) % m], m == 1);
                op(self.contains(&mid), other.contains(&mid))
            })
            .collect();
        let keep: Vec<usize> = (0..m).filter(|&j| flags[(j + m - 1) % m] != flags[j]).collect();
        match keep.first() {
            None => ArcSet {
                points: Vec::new(),
                first_inside: flags[0],
            },
            Some(&j0) => ArcSet {
                points: keep.iter().map(|&j| pts[j].clone()).collect(),
                first_inside: flags[j0],
            },
        }
    }

    pub fn intersect(&self, other: &ArcSet) -> ArcSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn difference(&self, other: &ArcSet) -> ArcSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> ArcSet {
        ArcSet {
            points: self.points.clone(),
            first_inside: !self.first_inside,
        }
    }

    /// Arcs sorted by their starting point; a wrapping arc comes last.
    pub fn arcs(&self) -> Vec<Arc> {
        let m = self.points.len();
        (0..m)
            .filter(|&j| self.gap_inside(j))
            .map(|j| Arc {
                lo: self.points[j].clone(),
                hi: self.points[(j + 1) % m].clone(),
            })
            .collect()
    }

    pub fn boundary(&self) -> &[TurnAngle] {
        &self.points
    }

    /// Midpoint of the arc with the smallest starting point; `0` for the full
    /// circle, `None` when empty.
    pub fn witness(&self) -> Option<TurnAngle> {
        if self.is_full() {
            return Some(TurnAngle::zero());
        }
        self.arcs().first().map(Arc::midpoint)
    }

    /// Total length in turns.
    pub fn measure(&self) -> BigRational {
        if self.is_full() {
            return BigRational::one();
        }
        self.arcs().iter().map(Arc::length).fold(BigRational::zero(), |a, b| a + b)
    }
}

fn gap_midpoint(a: &TurnAngle, b: &TurnAngle, single: bool) -> TurnAngle {
    let two = BigRational::from_integer(2.into());
    if single || b <= a {
        TurnAngle::new((a.value() + b.value() + BigRational::one()) / two)
    } else {
        TurnAngle::new((a.value() + b.value()) / two)
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_full() {
            return f.write_str("full");
        }
        let parts: Vec<String> = self.arcs().iter().map(Arc::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for ArcSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "full" {
            return Ok(ArcSet::full());
        }
        let inner = t
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse("arc set", s, "expected {...} or full"))?;
        let mut arcs = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::parse("arc set", s, "expected '('"))?;
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse("arc set", s, "missing ')'"))?;
            let (lo, hi) = body[..close]
                .split_once(',')
                .ok_or_else(|| Error::parse("arc set", s, "arc needs two endpoints"))?;
            let arc = Arc::new(lo.parse()?, hi.parse()?)
                .ok_or_else(|| Error::parse("arc set", s, "degenerate arc"))?;
            arcs.push(arc);
            rest = body[close + 1..].trim_start().trim_start_matches(',').trim_start();
        }
        Ok(ArcSet::from_arcs(&arcs))
    }
}

#[derive(Serialize, Deserialize)]
struct ArcSetRepr {
    full: bool,
    arcs: Vec<(TurnAngle, TurnAngle)>,
}

impl Serialize for ArcSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ArcSetRepr {
            full: self.is_full(),
            arcs: self.arcs().into_iter().map(|a| (a.lo, a.hi)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ArcSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ArcSetRepr::deserialize(d)?;
        if r.full {
            return Ok(ArcSet::full());
        }
        let arcs = r
            .arcs
            .into_iter()
            .map(|(lo, hi)| Arc::new(lo, hi).ok_or_else(|| serde::de::Error::custom("degenerate arc")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(ArcSet::from_arcs(&arcs))
    }
}

/// Sign of `D_p(e^{2πiθ})`, computed from the position of `θ` among the
/// breakpoints `(2k+1)/(2p)` without expanding `D_p`. Valid for any odd
/// `p ≥ 3`.
///
/// With `c = ⌊pθ + 1/2⌋`, reduced by one when `θ ≥ 1/2` (the point `1/2` is a
/// breakpoint of the numerator and the denominator at once, so the sign does
/// not change there), the sign is `(-1)^c`; breakpoints other than `1/2` are
/// roots.
pub fn generator_sign_at(p: &BigUint, theta: &TurnAngle) -> Sign {
    debug_assert!(p.is_odd(), "generator parameter must be odd");
    // θ = a/b in lowest terms, pθ + 1/2 = (2pa + b) / 2b
    let (a, b) = (theta.value().numer(), theta.value().denom());
    let num: BigInt = BigInt::from(p.clone()) * a * 2 + b;
    let den: BigInt = b * 2;
    let at_half = b == &BigInt::from(2);
    let (mut c, r) = num.div_mod_floor(&den);
    if r.is_zero() && !at_half {
        return Sign::Zero;
    }
    if a * 2 >= *b {
        c -= 1;
    }
    if c.is_even() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// The arcs where `D_p < 0`, i.e. where a generator with polynomial `D_p`
/// has signature 2. Refuses `p` above [`DEFAULT_MAX_P`].
pub fn arcs_of_generator(p: u64) -> Result<ArcSet> {
    arcs_of_generator_with_limit(p, DEFAULT_MAX_P)
}

pub fn arcs_of_generator_with_limit(p: u64, limit: u64) -> Result<ArcSet> {
    check_generator_parameter(p)?;
    if p > limit {
        return Err(Error::MaterializationLimit {
            p: p.to_string(),
            limit,
        });
    }
    let den = 2 * p as i64;
    let points = (0..p as i64)
        .map(|k| 2 * k + 1)
        .filter(|&n| n != p as i64)
        .map(|n| TurnAngle::from_ratio(n, den))
        .collect();
    // The gap (1/(2p), 3/(2p)) (or (1/6, 5/6) for p = 3) is negative.
    Ok(ArcSet {
        points,
        first_inside: true,
    })
}

fn breakpoint(p: &BigInt, numerator: &BigInt) -> BigRational {
    BigRational::new(numerator.clone(), p * 2)
}

/// Finds `θ` with `generator_sign_at(ps[i], θ) == signs[i]` for every `i`
/// (`Negative` means inside `A_p`).
///
/// Starts from the leftmost maximal arc of `ps[0]` with the requested sign,
/// then repeatedly keeps the leftmost full arc
/// `((2k+1)/(2p), (2k+3)/(2p))` of the next parameter that has the requested
/// sign and lies inside the current interval. The answer is the midpoint of
/// the last interval. Each step needs the current interval to span two full
/// arcs of the next parameter; successive ratios of at least 3 guarantee this
/// when they are odd integers.
pub fn independence_witness(ps: &[BigUint], signs: &[Sign]) -> Result<TurnAngle> {
    if ps.len() != signs.len() {
        return Err(Error::LengthMismatch(format!(
            "{} parameters but {} signs",
            ps.len(),
            signs.len()
        )));
    }
    for p in ps {
        if p.is_even() {
            return Err(Error::EvenParameter(p.to_string()));
        }
        if p < &BigUint::from(3u32) {
            return Err(Error::ParameterTooSmall(p.to_string()));
        }
    }
    if let Some(w) = ps.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::NotIncreasing(format!("{} then {}", w[0], w[1])));
    }
    if signs.contains(&Sign::Zero) {
        return Err(Error::InvalidSign(0));
    }
    let Some(first) = ps.first() else {
        return Ok(TurnAngle::zero());
    };

    let one = BigInt::one();
    let two = BigInt::from(2);
    let p0 = BigInt::from(first.clone());
    // Leftmost maximal arcs: (1/(2p), next) is negative, the one after it positive.
    let skip_half = |n: BigInt| if n == p0 { n + &two } else { n };
    let n1 = skip_half(BigInt::from(3));
    let (mut lo, mut hi) = if signs[0] == Sign::Negative {
        (breakpoint(&p0, &one), breakpoint(&p0, &n1))
    } else {
        let n2 = skip_half(&n1 + &two);
        let end = if n2 > &p0 * &two {
            breakpoint(&p0, &one) + BigRational::one()
        } else {
            breakpoint(&p0, &n2)
        };
        (breakpoint(&p0, &n1), end)
    };
    debug_assert_eq!(
        generator_sign_at(first, &TurnAngle::new((&lo + &hi) / BigRational::from_integer(two.clone()))),
        signs[0]
    );

    for (i, (p, want)) in ps.iter().zip(signs).enumerate().skip(1) {
        let pi = BigInt::from(p.clone());
        // smallest k with (2k+1)/(2p) >= lo
        let scaled = &lo * BigRational::from_integer(&pi * &two) - BigRational::one();
        let mut k = (scaled / BigRational::from_integer(two.clone())).ceil().to_integer();
        loop {
            let a = breakpoint(&pi, &(&k * &two + &one));
            let b = breakpoint(&pi, &(&k * &two + BigInt::from(3)));
            if b > hi {
                return Err(Error::WitnessSpacing {
                    index: i,
                    p: p.to_string(),
                    sign: want.to_i8(),
                });
            }
            let mid = TurnAngle::new(BigRational::new(&k + &one, pi.clone()));
            if generator_sign_at(p, &mid) == *want {
                lo = a;
                hi = b;
                break;
            }
            k += 1;
        }
    }
    Ok(TurnAngle::new((lo + hi) / BigRational::from_integer(two)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64, d: i64) -> TurnAngle {
        TurnAngle::from_ratio(n, d)
    }

    fn arc(a: (i64, i64), b: (i64, i64)) -> Arc {
        Arc::new(t(a.0, a.1), t(b.0, b.1)).unwrap()
    }

    fn big(p: u64) -> BigUint {
        BigUint::from(p)
    }

    #[test]
    fn turn_angle_reduces_mod_one() {
        assert_eq!(TurnAngle::new(BigRational::new(7.into(), 6.into())), t(1, 6));
        assert_eq!(TurnAngle::new(BigRational::new((-1).into(), 6.into())), t(5, 6));
        assert_eq!(t(0, 1).to_string(), "0/1");
        assert_eq!("2/4".parse::<TurnAngle>().unwrap(), t(1, 2));
    }

    #[test]
    fn generator_arcs_small() {
        let a3 = arcs_of_generator(3).unwrap();
        assert_eq!(a3.arcs(), vec![arc((1, 6), (5, 6))]);
        let a5 = arcs_of_generator(5).unwrap();
        assert_eq!(a5.arcs(), vec![arc((1, 10), (3, 10)), arc((7, 10), (9, 10))]);
        assert_eq!(a5.to_string(), "{(1/10,3/10),(7/10,9/10)}");
        assert!(matches!(arcs_of_generator(6), Err(Error::EvenParameter(_))));
        assert!(matches!(
            arcs_of_generator_with_limit(1001, 1000),
            Err(Error::MaterializationLimit { .. })
        ));
    }

    #[test]
    fn complement_wraps() {
        let a3 = arcs_of_generator(3).unwrap();
        let c = a3.complement();
        assert_eq!(c.arcs(), vec![arc((5, 6), (1, 6))]);
        assert!(a3.intersect(&c).is_empty());
        assert!(a3.union(&c).is_full());
        assert_eq!(ArcSet::full().intersect(&a3), a3);
    }

    #[test]
    fn touching_arcs_merge() {
        let s = ArcSet::from_arcs(&[arc((0, 1), (1, 2)), arc((1, 2), (3, 4))]);
        assert_eq!(s.arcs(), vec![arc((0, 1), (3, 4))]);
        let whole = ArcSet::from_arcs(&[arc((0, 1), (1, 2)), arc((1, 2), (0, 1))]);
        assert!(whole.is_full());
    }

    #[test]
    fn witness_is_leftmost_midpoint() {
        let a5 = arcs_of_generator(5).unwrap();
        assert_eq!(a5.witness(), Some(t(1, 5)));
        assert_eq!(ArcSet::empty().witness(), None);
        let c3 = arcs_of_generator(3).unwrap().complement();
        assert_eq!(c3.witness(), Some(t(0, 1)));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(generator_sign_at(&big(3), &t(2, 5)), Sign::Negative);
        assert_eq!(generator_sign_at(&big(3), &t(1, 6)), Sign::Zero);
        assert_eq!(generator_sign_at(&big(3), &t(1, 2)), Sign::Negative);
        assert_eq!(generator_sign_at(&big(5), &t(1, 2)), Sign::Positive);
        assert_eq!(generator_sign_at(&big(3), &t(0, 1)), Sign::Positive);
    }

    #[test]
    fn parse_round_trip() {
        for s in ["{}", "full", "{(1/6,5/6)}", "{(5/6,1/6)}", "{(1/10,3/10),(7/10,9/10)}"] {
            let a: ArcSet = s.parse().unwrap();
            assert_eq!(a.to_string(), s);
        }
    }

    #[test]
    fn witness_examples() {
        let w = independence_witness(&[big(3)], &[Sign::Negative]).unwrap();
        assert_eq!(w, t(1, 2));
        let w = independence_witness(&[big(3), big(15)], &[Sign::Negative, Sign::Positive]).unwrap();
        assert!(arc((1, 6), (5, 6)).contains(&w));
        assert_eq!(generator_sign_at(&big(15), &w), Sign::Positive);
        assert_eq!(independence_witness(&[], &[]).unwrap(), t(0, 1));
    }

    #[test]
    fn witness_rejects_bad_input() {
        assert!(matches!(
            independence_witness(&[big(3)], &[]),
            Err(Error::LengthMismatch(_))
        ));
        assert!(matches!(
            independence_witness(&[big(15), big(3)], &[Sign::Positive, Sign::Positive]),
            Err(Error::NotIncreasing(_))
        ));
        assert!(matches!(
            independence_witness(&[big(4)], &[Sign::Positive]),
            Err(Error::EvenParameter(_))
        ));
        // 5 then 7: the arc (1/10, 3/10) of length 1/5 does not hold two
        // full arcs of length 1/7 with both signs.
        let r = independence_witness(&[big(5), big(7)], &[Sign::Negative, Sign::Negative]);
        assert!(matches!(r, Err(Error::WitnessSpacing { index: 1, .. })), "{r:?}");
    }
}
