//! Sturm chains and real root isolation over the integers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::circle::Sign;
use crate::serial;
use crate::univariate::Poly;

/// Signed remainder sequence, with every member scaled by a positive constant
/// to stay in `Z[x]`.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Poly<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &Poly<BigInt>) -> Self {
        let mut chain = vec![p.primitive_part()];
        let d = p.derivative().primitive_part();
        if d.is_zero() {
            return SturmChain { chain };
        }
        chain.push(d);
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem = lc^δ · rem; the chain wants -rem up to a positive factor
            let lc = b.leading().unwrap();
            let delta = a.degree().unwrap() - b.degree().unwrap() + 1;
            let factor_negative = lc.is_negative() && delta % 2 == 1;
            let next = if factor_negative { r } else { -&r };
            chain.push(next.primitive_part());
        }
        SturmChain { chain }
    }

    pub fn polys(&self) -> &[Poly<BigInt>] {
        &self.chain
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for p in &self.chain {
            let s = p.sign_at(x) as i8;
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// One isolated real root: either known exactly or bracketed by an open
/// interval whose rational endpoints are not roots and carry opposite signs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootInterval {
    Exact(#[serde(with = "serial::ratio")] BigRational),
    Open {
        #[serde(with = "serial::ratio")]
        lo: BigRational,
        #[serde(with = "serial::ratio")]
        hi: BigRational,
    },
}

impl RootInterval {
    pub fn lo(&self) -> &BigRational {
        match self {
            RootInterval::Exact(x) => x,
            RootInterval::Open { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> &BigRational {
        match self {
            RootInterval::Exact(x) => x,
            RootInterval::Open { hi, .. } => hi,
        }
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    /// True if `x` is the root or lies strictly inside the bracket.
    pub fn brackets(&self, x: &BigRational) -> bool {
        match self {
            RootInterval::Exact(r) => r == x,
            RootInterval::Open { lo, hi } => lo < x && x < hi,
        }
    }

    /// Halves the bracket once using the sign of the squarefree `poly`.
    pub fn bisect(&mut self, poly: &Poly<BigInt>) {
        if let RootInterval::Open { lo, hi } = self {
            let two = BigRational::from_integer(2.into());
            let m = (&*lo + &*hi) / two;
            let sm = poly.sign_at(&m);
            if sm == Ordering::Equal {
                *self = RootInterval::Exact(m);
                return;
            }
            if sm == poly.sign_at(lo) {
                *lo = m;
            } else {
                *hi = m;
            }
        }
    }

    pub fn refine(&mut self, poly: &Poly<BigInt>, width: &BigRational) {
        while &self.width() > width {
            self.bisect(poly);
        }
    }
}

/// Isolates the distinct real roots of `poly` in the closed interval `[a, b]`,
/// in increasing order.
pub fn isolate_real_roots(poly: &Poly<BigInt>, a: &BigRational, b: &BigRational) -> Vec<RootInterval> {
    let sq = poly.squarefree_part();
    if sq.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sq);
    let mut out = Vec::new();
    if sq.eval_rational(a).is_zero() {
        out.push(RootInterval::Exact(a.clone()));
    }
    let n = chain.count(a, b);
    split(&sq, &chain, a.clone(), b.clone(), n, &mut out);
    out
}

fn split(
    sq: &Poly<BigInt>,
    chain: &SturmChain,
    a: BigRational,
    b: BigRational,
    n: usize,
    out: &mut Vec<RootInterval>,
) {
    if n == 0 {
        return;
    }
    let two = BigRational::from_integer(2.into());
    if n == 1 {
        if sq.eval_rational(&b).is_zero() {
            out.push(RootInterval::Exact(b));
            return;
        }
        // the single root is in (a, b); move `a` off a root if needed
        let (mut lo, mut hi) = (a, b);
        while sq.eval_rational(&lo).is_zero() {
            let m = (&lo + &hi) / &two;
            if sq.eval_rational(&m).is_zero() {
                out.push(RootInterval::Exact(m));
                return;
            }
            if chain.count(&m, &hi) == 1 {
                lo = m;
            } else {
                hi = m;
            }
        }
        out.push(RootInterval::Open { lo, hi });
        return;
    }
    let m = (&a + &b) / &two;
    let left = chain.count(&a, &m);
    split(sq, chain, a, m.clone(), left, out);
    split(sq, chain, m, b, n - left, out);
}

/// Sign of `poly` on each gap between consecutive isolated roots (including
/// the two end gaps); `Zero` marks an empty end gap.
pub(crate) fn gap_signs(
    poly: &Poly<BigInt>,
    roots: &[RootInterval],
    a: &BigRational,
    b: &BigRational,
) -> Vec<Sign> {
    let two = BigRational::from_integer(2.into());
    let mut lefts: Vec<&BigRational> = vec![a];
    lefts.extend(roots.iter().map(RootInterval::hi));
    let mut rights: Vec<&BigRational> = roots.iter().map(RootInterval::lo).collect();
    rights.push(b);
    lefts
        .into_iter()
        .zip(rights)
        .map(|(l, r)| {
            if l >= r {
                Sign::Zero
            } else {
                let m = (l + r) / &two;
                Sign::of_ordering(poly.sign_at(&m))
            }
        })
        .collect()
}
