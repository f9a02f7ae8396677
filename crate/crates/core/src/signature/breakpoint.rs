//! Points of the circle where a signature function may jump.
//!
//! A breakpoint is either an exact rational turn or a root `e^{2πiθ}` of a
//! polynomial given through `x = 2cos(2πθ)` as an isolated root of an integer
//! polynomial, together with the half of the circle it sits on. Ordering two
//! breakpoints is always decided exactly: isolating intervals are refined
//! until they separate, and coincidences are settled algebraically (common
//! factors for two algebraic points, cyclotomic divisibility for a rational
//! turn against an algebraic one).

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc as Shared;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::circle::TurnAngle;
use crate::enclosure::{self, RatInterval};
use crate::laurent::LaurentPoly;
use crate::signature::sturm::{RootInterval, SturmChain};
use crate::univariate::{cyclotomic, totient, Poly};

/// A circle point `θ` known through `2cos(2πθ)`, an isolated root of a
/// squarefree integer polynomial.
#[derive(Clone, Debug)]
pub struct CircleRoot {
    poly: Shared<Poly<BigInt>>,
    x: RootInterval,
    lower_half: bool,
}

impl CircleRoot {
    pub fn poly(&self) -> &Poly<BigInt> {
        &self.poly
    }

    pub fn x_interval(&self) -> &RootInterval {
        &self.x
    }

    /// `θ ∈ (1/2, 1)` rather than `(0, 1/2)`.
    pub fn is_lower_half(&self) -> bool {
        self.lower_half
    }

    /// Enclosure of `θ` in turns.
    pub fn turn_enclosure(&self, bits: u32) -> RatInterval {
        let mut x = self.x.clone();
        x.refine(&self.poly, &(BigRational::one() / BigRational::from_integer(BigInt::one() << bits)));
        let t = enclosure::turn_of_two_cos(&RatInterval::new(x.lo().clone(), x.hi().clone()), bits);
        if self.lower_half {
            RatInterval::new(BigRational::one() - t.hi, BigRational::one() - t.lo)
        } else {
            t
        }
    }
}

#[derive(Clone, Debug)]
pub enum Breakpoint {
    Rational(TurnAngle),
    Algebraic(CircleRoot),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Region {
    Zero,
    Upper,
    Half,
    Lower,
}

/// Exact `2cos(2πθ)` when it is rational, i.e. when the denominator of `θ` is
/// 1, 2, 3, 4 or 6.
fn rational_two_cos(theta: &TurnAngle) -> Option<BigRational> {
    let v = theta.value();
    let den = v.denom().to_u64()?;
    let num = v.numer().to_u64()?;
    let x = match (den, num) {
        (1, _) => 2,
        (2, _) => -2,
        (3, _) => -1,
        (4, _) => 0,
        (6, _) => 1,
        _ => return None,
    };
    Some(BigRational::from_integer(x.into()))
}

/// The circle point(s) for an exact `x` in `[-2, 2]` when the angle is
/// rational.
fn rational_turns(x: &BigRational) -> Option<(TurnAngle, TurnAngle)> {
    if !x.is_integer() {
        return None;
    }
    let (a, b) = match x.to_integer().to_i64()? {
        2 => (0, 1),
        1 => (1, 6),
        0 => (1, 4),
        -1 => (1, 3),
        -2 => (1, 2),
        _ => return None,
    };
    let t = TurnAngle::from_ratio(a, b);
    Some((t.clone(), t.conjugate()))
}

impl Breakpoint {
    /// The breakpoint on the chosen half of the circle for an isolated root
    /// of `poly` (squarefree) in `[-2, 2]`. Roots with a rational angle come
    /// back as [`Breakpoint::Rational`].
    pub fn from_root(poly: Shared<Poly<BigInt>>, x: RootInterval, lower_half: bool) -> Breakpoint {
        let exact = match &x {
            RootInterval::Exact(v) => Some(v.clone()),
            RootInterval::Open { lo, hi } => (-1..=1)
                .map(|v| BigRational::from_integer(v.into()))
                .find(|v| lo < v && v < hi && poly.eval_rational(v).is_zero()),
        };
        if let Some((up, down)) = exact.as_ref().and_then(rational_turns) {
            return Breakpoint::Rational(if lower_half { down } else { up });
        }
        Breakpoint::Algebraic(CircleRoot { poly, x, lower_half })
    }

    fn region(&self) -> Region {
        match self {
            Breakpoint::Rational(t) => {
                let half = BigRational::new(1.into(), 2.into());
                let v = t.value();
                if v.is_zero() {
                    Region::Zero
                } else if v < &half {
                    Region::Upper
                } else if v == &half {
                    Region::Half
                } else {
                    Region::Lower
                }
            }
            Breakpoint::Algebraic(r) if r.lower_half => Region::Lower,
            Breakpoint::Algebraic(_) => Region::Upper,
        }
    }

    pub fn as_rational(&self) -> Option<&TurnAngle> {
        match self {
            Breakpoint::Rational(t) => Some(t),
            Breakpoint::Algebraic(_) => None,
        }
    }

    pub fn conjugate(&self) -> Breakpoint {
        match self {
            Breakpoint::Rational(t) => Breakpoint::Rational(t.conjugate()),
            Breakpoint::Algebraic(r) => Breakpoint::Algebraic(CircleRoot {
                poly: r.poly.clone(),
                x: r.x.clone(),
                lower_half: !r.lower_half,
            }),
        }
    }

    /// Enclosure of the angle in turns (a point for rational breakpoints).
    pub fn turn_enclosure(&self, bits: u32) -> RatInterval {
        match self {
            Breakpoint::Rational(t) => RatInterval::point(t.value().clone()),
            Breakpoint::Algebraic(r) => r.turn_enclosure(bits),
        }
    }

    /// Position on the circle, counterclockwise from `0`.
    pub fn cmp_turn(&self, other: &Breakpoint) -> Ordering {
        let (ra, rb) = (self.region(), other.region());
        if ra != rb {
            return ra.cmp(&rb);
        }
        if matches!(ra, Region::Zero | Region::Half) {
            return Ordering::Equal;
        }
        let by_x = match (self, other) {
            (Breakpoint::Rational(a), Breakpoint::Rational(b)) => return a.cmp(b),
            (Breakpoint::Rational(t), Breakpoint::Algebraic(r)) => cmp_turn_root(t, &r.poly, &r.x),
            (Breakpoint::Algebraic(r), Breakpoint::Rational(t)) => cmp_turn_root(t, &r.poly, &r.x).reverse(),
            (Breakpoint::Algebraic(a), Breakpoint::Algebraic(b)) => cmp_roots(&a.poly, &a.x, &b.poly, &b.x),
        };
        // θ increases as x decreases on the upper half
        if ra == Region::Upper {
            by_x.reverse()
        } else {
            by_x
        }
    }
}

impl PartialEq for Breakpoint {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_turn(other) == Ordering::Equal
    }
}

impl Eq for Breakpoint {}

impl PartialOrd for Breakpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Breakpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_turn(other)
    }
}

/// Whether `2cos(2πθ)` is a root of `poly`, for `θ` with an irrational
/// cosine: equivalent to `Φ_b(t) | t^n poly(t + 1/t)` where `b` is the
/// denominator of `θ`.
fn turn_is_root(theta: &TurnAngle, poly: &Poly<BigInt>) -> bool {
    let n = poly.degree().unwrap_or(0) as u64;
    let Some(b) = theta.value().denom().to_u64() else {
        return false;
    };
    // φ(b) ≥ sqrt(b/2), and the minimal polynomial of 2cos(2π/b) has degree φ(b)/2
    if n == 0 || b > 8 * n * n || totient(b) > 2 * n {
        return false;
    }
    let lifted = LaurentPoly::from_chebyshev(poly).shift(n as i64);
    let (p, shift) = lifted.to_poly();
    debug_assert!(shift >= 0);
    p.div_exact(&cyclotomic(b)).is_some()
}

fn cmp_turn_root(theta: &TurnAngle, poly: &Poly<BigInt>, iv: &RootInterval) -> Ordering {
    if let Some(x) = rational_two_cos(theta) {
        return cmp_exact_root(&x, poly, iv);
    }
    let on = matches!(iv, RootInterval::Open { .. }) && turn_is_root(theta, poly);
    let mut iv = iv.clone();
    let mut bits = 32;
    loop {
        let e = enclosure::two_cos_turn(theta.value(), bits);
        if &e.hi < iv.lo() {
            return Ordering::Less;
        }
        if &e.lo > iv.hi() {
            return Ordering::Greater;
        }
        if on && &e.lo > iv.lo() && &e.hi < iv.hi() {
            return Ordering::Equal;
        }
        bits += 16;
        if !on {
            iv.bisect(poly);
        }
    }
}

fn cmp_exact_root(x: &BigRational, poly: &Poly<BigInt>, iv: &RootInterval) -> Ordering {
    let mut iv = iv.clone();
    loop {
        match &iv {
            RootInterval::Exact(y) => return x.cmp(y),
            RootInterval::Open { lo, hi } => {
                if x <= lo {
                    return Ordering::Less;
                }
                if x >= hi {
                    return Ordering::Greater;
                }
                if poly.eval_rational(x).is_zero() {
                    return Ordering::Equal;
                }
            }
        }
        iv.bisect(poly);
    }
}

fn has_root_in(chain: &SturmChain, g: &Poly<BigInt>, iv: &RootInterval) -> bool {
    match iv {
        RootInterval::Exact(x) => g.eval_rational(x).is_zero(),
        RootInterval::Open { lo, hi } => chain.count(lo, hi) > 0,
    }
}

fn cmp_roots(pa: &Poly<BigInt>, ia: &RootInterval, pb: &Poly<BigInt>, ib: &RootInterval) -> Ordering {
    let g = pa.gcd(pb);
    let chain = (g.degree().unwrap_or(0) > 0).then(|| SturmChain::new(&g));
    let common = chain
        .as_ref()
        .is_some_and(|c| has_root_in(c, &g, ia) && has_root_in(c, &g, ib));
    let (mut ia, mut ib) = (ia.clone(), ib.clone());
    loop {
        if let RootInterval::Exact(x) = &ia {
            return cmp_exact_root(x, pb, &ib);
        }
        if let RootInterval::Exact(y) = &ib {
            return cmp_exact_root(y, pa, &ia).reverse();
        }
        if ia.hi() <= ib.lo() {
            return Ordering::Less;
        }
        if ib.hi() <= ia.lo() {
            return Ordering::Greater;
        }
        if common {
            let lo = ia.lo().min(ib.lo()).clone();
            let hi = ia.hi().max(ib.hi()).clone();
            if chain.as_ref().unwrap().count(&lo, &hi) == 1 {
                return Ordering::Equal;
            }
        }
        ia.bisect(pa);
        ib.bisect(pb);
    }
}

impl fmt::Display for Breakpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Breakpoint::Rational(t) => write!(f, "{t}"),
            Breakpoint::Algebraic(r) => {
                let half = if r.lower_half { "lower" } else { "upper" };
                write!(
                    f,
                    "root of {} in [{}, {}] ({half})",
                    r.poly,
                    crate::serial::ratio_string(r.x.lo()),
                    crate::serial::ratio_string(r.x.hi())
                )
            }
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum BreakpointRepr {
    Rational(TurnAngle),
    Algebraic {
        poly: String,
        x: RootInterval,
        half: String,
    },
}

impl Serialize for Breakpoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Breakpoint::Rational(t) => BreakpointRepr::Rational(t.clone()),
            Breakpoint::Algebraic(r) => BreakpointRepr::Algebraic {
                poly: r.poly.to_string(),
                x: r.x.clone(),
                half: if r.lower_half { "lower" } else { "upper" }.to_string(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Breakpoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match BreakpointRepr::deserialize(d)? {
            BreakpointRepr::Rational(t) => Ok(Breakpoint::Rational(t)),
            BreakpointRepr::Algebraic { poly, x, half } => {
                let poly: Poly<BigInt> = poly.parse().map_err(D::Error::custom)?;
                let lower_half = match half.as_str() {
                    "lower" => true,
                    "upper" => false,
                    other => return Err(D::Error::custom(format!("unknown half {other:?}"))),
                };
                if poly.squarefree_part() != poly.normalized() {
                    return Err(D::Error::custom("breakpoint polynomial must be squarefree"));
                }
                let two = BigRational::from_integer(2.into());
                let in_range = |v: &BigRational| v >= &-two.clone() && v <= &two;
                let ok = match &x {
                    RootInterval::Exact(v) => poly.eval_rational(v).is_zero() && in_range(v) && v.abs() != two,
                    RootInterval::Open { lo, hi } => {
                        lo < hi
                            && in_range(lo)
                            && in_range(hi)
                            && SturmChain::new(&poly).count(lo, hi) == 1
                            && !poly.eval_rational(hi).is_zero()
                            && !poly.eval_rational(lo).is_zero()
                    }
                };
                if !ok {
                    return Err(D::Error::custom("interval does not isolate a root in (-2, 2)"));
                }
                Ok(Breakpoint::from_root(Shared::new(poly), x, lower_half))
            }
        }
    }
}
