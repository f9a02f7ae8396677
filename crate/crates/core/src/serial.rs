//! Text forms shared by the polynomial and angle types.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Renders `(exponent, coefficient)` pairs as `-t^-2+3t^-1-3+3t-t^2`.
///
/// Terms are printed in the order given; zero coefficients must already be
/// filtered out.
pub(crate) fn format_terms(terms: impl Iterator<Item = (i64, BigRational)>, var: char) -> String {
    let mut out = String::new();
    for (e, c) in terms {
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = c.abs();
        if e == 0 {
            out.push_str(&coeff_string(&mag));
            continue;
        }
        if !mag.is_one() {
            out.push_str(&coeff_string(&mag));
            if !mag.is_integer() {
                out.push('*');
            }
        }
        out.push(var);
        if e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn coeff_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses the output of [`format_terms`], also accepting `c*t^e`, spaces and
/// repeated exponents (which are summed by the caller).
pub(crate) fn parse_terms(input: &str, var: char, what: &'static str) -> Result<Vec<(i64, BigRational)>> {
    let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(what, input, "empty input"));
    }
    let err = |reason: &str| Error::parse(what, input, reason);
    let mut i = 0;
    let mut terms = Vec::new();
    while i < s.len() {
        let mut negative = false;
        if s[i] == '+' || s[i] == '-' {
            negative = s[i] == '-';
            i += 1;
        } else if !terms.is_empty() {
            return Err(err("expected '+' or '-' between terms"));
        }
        let num_start = i;
        while i < s.len() && s[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff = if i > num_start {
            let n: BigInt = s[num_start..i].iter().collect::<String>().parse().unwrap();
            Some(BigRational::from_integer(n))
        } else {
            None
        };
        if coeff.is_some() && i < s.len() && s[i] == '/' {
            i += 1;
            let den_start = i;
            while i < s.len() && s[i].is_ascii_digit() {
                i += 1;
            }
            if i == den_start {
                return Err(err("missing denominator"));
            }
            let d: BigInt = s[den_start..i].iter().collect::<String>().parse().unwrap();
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            coeff = coeff.map(|c| c / BigRational::from_integer(d));
        }
        let mut star = false;
        if i < s.len() && s[i] == '*' {
            if coeff.is_none() {
                return Err(err("'*' without a coefficient"));
            }
            star = true;
            i += 1;
        }
        let mut exponent = 0i64;
        if i < s.len() && s[i] == var {
            i += 1;
            exponent = 1;
            if i < s.len() && s[i] == '^' {
                i += 1;
                let paren = i < s.len() && s[i] == '(';
                if paren {
                    i += 1;
                }
                let exp_start = i;
                if i < s.len() && (s[i] == '-' || s[i] == '+') {
                    i += 1;
                }
                while i < s.len() && s[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = s[exp_start..i].iter().collect();
                exponent = text.parse().map_err(|_| err("bad exponent"))?;
                if paren {
                    if i >= s.len() || s[i] != ')' {
                        return Err(err("unclosed '('"));
                    }
                    i += 1;
                }
            }
        } else if star || coeff.is_none() {
            return Err(err("expected a coefficient or the variable"));
        }
        let mut c = coeff.unwrap_or_else(BigRational::one);
        if negative {
            c = -c;
        }
        terms.push((exponent, c));
    }
    Ok(terms)
}

/// `num/den`, always with an explicit denominator.
pub(crate) fn ratio_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub(crate) fn parse_ratio(input: &str, what: &'static str) -> Result<BigRational> {
    let s = input.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| Error::parse(what, input, "bad numerator"))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| Error::parse(what, input, "bad denominator"))?;
    if d.is_zero() {
        return Err(Error::parse(what, input, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

pub(crate) mod ratio {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&ratio_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_ratio(&s, "fraction").map_err(serde::de::Error::custom)
    }
}

pub(crate) mod decimal {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map_err(serde::de::Error::custom)
    }
}
