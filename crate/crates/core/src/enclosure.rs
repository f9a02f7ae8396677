//! Certified rational enclosures of transcendental quantities.
//!
//! Only two are needed: `2cos(2πθ)` for a rational turn `θ`, and its inverse
//! on `[0, 1/2]`. Both come with outward-rounded dyadic bounds, so callers can
//! refine until a comparison is decided without ever trusting a float.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "empty interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &RatInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn add(&self, other: &RatInterval) -> RatInterval {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn neg(&self) -> RatInterval {
        RatInterval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &RatInterval) -> RatInterval {
        let c = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    pub fn scale(&self, k: &BigRational) -> RatInterval {
        if k.is_negative() {
            RatInterval::new(&self.hi * k, &self.lo * k)
        } else {
            RatInterval::new(&self.lo * k, &self.hi * k)
        }
    }

    /// Widens to the enclosing grid of step `2^-bits`.
    pub fn round_outward(&self, bits: u32) -> RatInterval {
        RatInterval::new(round_down(&self.lo, bits), round_up(&self.hi, bits))
    }
}

fn pow2(bits: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << bits)
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    (x * &s).floor() / s
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let s = pow2(bits);
    (x * &s).ceil() / s
}

/// Fixed-point value `v / 2^w` known to within `err` units of the last place.
struct Fixed {
    v: BigInt,
    err: BigInt,
}

/// `atan(1/x)` by its alternating series, each term truncated (error below
/// 2 ulp per term, plus the first omitted term).
fn atan_inv_fixed(x: u32, w: u32) -> Fixed {
    let one = BigInt::one() << w;
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = x.clone();
    let mut sum = BigInt::zero();
    let mut k = 0u32;
    loop {
        let t = &one / &power / BigInt::from(2 * k + 1);
        if t.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        power *= &x2;
        k += 1;
    }
    Fixed {
        v: sum,
        err: BigInt::from(2 * k + 2),
    }
}

/// `π` from Machin's formula `π = 16 atan(1/5) - 4 atan(1/239)`.
fn pi_fixed(w: u32) -> Fixed {
    let a = atan_inv_fixed(5, w);
    let b = atan_inv_fixed(239, w);
    Fixed {
        v: a.v * 16 - b.v * 4,
        err: a.err * 16 + b.err * 4,
    }
}

/// Enclosure of `π`.
pub fn pi(bits: u32) -> RatInterval {
    let w = bits + 16;
    let p = pi_fixed(w);
    let scale = pow2(w);
    RatInterval::new(
        BigRational::from_integer(&p.v - &p.err) / &scale,
        BigRational::from_integer(&p.v + &p.err) / &scale,
    )
    .round_outward(bits)
}

/// `cos(u / 2^w)` for `0 ≤ u ≤ 2^{w+1}` by the Taylor series, truncating
/// every product. The ratio of successive terms is at most 2, and below 1/3
/// after the first, so each term is off by a few ulp; 8 ulp per term plus
/// the first omitted term is a safe bound.
fn cos_fixed(u: &BigInt, w: u32) -> Fixed {
    let u2 = (u * u) >> w;
    let mut term = BigInt::one() << w;
    let mut sum = term.clone();
    let mut k = 1u64;
    loop {
        term = ((&term * &u2) >> w) / BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    Fixed {
        v: sum,
        err: BigInt::from(8 * k + 8),
    }
}

/// Enclosure of `2cos(2πθ)` of width about `2^-bits`.
pub fn two_cos_turn(theta: &BigRational, bits: u32) -> RatInterval {
    let one = BigRational::one();
    let half = BigRational::new(1.into(), 2.into());
    let quarter = BigRational::new(1.into(), 4.into());
    let mut r = theta - theta.floor();
    if r > half {
        r = &one - r;
    }
    let negate = r > quarter;
    if negate {
        r = &half - r;
    }
    if r.is_zero() {
        let two = RatInterval::point(BigRational::from_integer(2.into()));
        return if negate { two.neg() } else { two };
    }
    let w = bits + 24;
    // u = 2πr lies in [0, π/2], where cos is decreasing
    let p = pi_fixed(w);
    let num: BigInt = r.numer() * 2;
    let den: BigInt = r.denom().clone();
    let lo: BigInt = (&p.v - &p.err) * &num;
    let hi: BigInt = (&p.v + &p.err) * &num;
    let u_lo = lo.div_floor(&den);
    let u_hi = Integer::div_ceil(&hi, &den);
    let upper = cos_fixed(&u_lo, w);
    let lower = cos_fixed(&u_hi, w);
    let scale = pow2(w - 1);
    let out = RatInterval::new(
        BigRational::from_integer(lower.v - lower.err) / &scale,
        BigRational::from_integer(upper.v + upper.err) / &scale,
    )
    .round_outward(bits);
    if negate {
        out.neg()
    } else {
        out
    }
}

/// Enclosure of the turn `θ ∈ [0, 1/2]` with `2cos(2πθ) = x`, valid for every
/// `x` in `xs ⊂ [-2, 2]`. Found by bisection on `θ` using monotonicity of
/// cosine on the half turn.
pub fn turn_of_two_cos(xs: &RatInterval, bits: u32) -> RatInterval {
    let half = BigRational::new(1.into(), 2.into());
    // lower end: largest grid t with 2cos(2πt) >= xs.hi certified
    let lower = bisect_turn(&xs.hi, bits, true);
    let upper = bisect_turn(&xs.lo, bits, false);
    RatInterval::new(lower.max(BigRational::zero()), upper.min(half))
}

fn bisect_turn(x: &BigRational, bits: u32, want_below: bool) -> BigRational {
    let mut lo = BigRational::zero();
    let mut hi = BigRational::new(1.into(), 2.into());
    let two = BigRational::from_integer(2.into());
    for _ in 0..bits {
        let m = (&lo + &hi) / &two;
        let e = two_cos_turn(&m, bits + 4);
        if &e.lo >= x {
            // m is certainly at or before θ(x)
            lo = m;
        } else if &e.hi < x {
            hi = m;
        } else {
            break;
        }
    }
    if want_below {
        lo
    } else {
        hi
    }
}
