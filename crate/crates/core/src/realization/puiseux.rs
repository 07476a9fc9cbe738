//! Finite Puiseux sums `Σ c_q t^q` with rational coefficients and exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::trop::{parse_rational, Rational, TropicalValue};
use crate::{Error, Result};

/// A finite formal sum of terms `c·t^q`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PuiseuxScalar {
    terms: BTreeMap<Rational, BigRational>,
}

impl PuiseuxScalar {
    pub fn zero() -> Self {
        PuiseuxScalar::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn integer(v: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(v)))
    }

    /// `c·t^q`.
    pub fn monomial(c: BigRational, q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(q, c);
        }
        PuiseuxScalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Rational, &BigRational)> {
        self.terms.iter()
    }

    /// Least exponent, or `∞` for zero.
    pub fn val(&self) -> TropicalValue {
        self.terms.keys().next().map_or(TropicalValue::Infinity, |q| TropicalValue::Finite(*q))
    }

    /// Coefficient of the least exponent.
    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.terms.values().next()
    }

    /// The inverse of a single nonzero term; other scalars have no finite inverse.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (q, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.recip(), -*q))
    }

    fn add_term(&mut self, q: Rational, c: BigRational) {
        let entry = self.terms.entry(q).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&q);
        }
    }
}

impl Add for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn add(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = self.clone();
        for (q, c) in &rhs.terms {
            out.add_term(*q, c.clone());
        }
        out
    }
}

impl Sub for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn sub(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = self.clone();
        for (q, c) in &rhs.terms {
            out.add_term(*q, -c);
        }
        out
    }
}

impl Mul for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn mul(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        let mut out = PuiseuxScalar::zero();
        for (q1, c1) in &self.terms {
            for (q2, c2) in &rhs.terms {
                out.add_term(q1 + q2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        PuiseuxScalar { terms: self.terms.iter().map(|(q, c)| (*q, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for PuiseuxScalar {
            type Output = PuiseuxScalar;
            fn $m(self, rhs: PuiseuxScalar) -> PuiseuxScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PuiseuxScalar {
    type Output = PuiseuxScalar;
    fn neg(self) -> PuiseuxScalar {
        -&self
    }
}

impl From<i64> for PuiseuxScalar {
    fn from(v: i64) -> Self {
        PuiseuxScalar::integer(v)
    }
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (q, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if q.is_zero() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "t^({q})")?;
            } else {
                write!(f, "{magnitude}*t^({q})")?;
            }
        }
        Ok(())
    }
}

fn parse_term(term: &str) -> std::result::Result<PuiseuxScalar, String> {
    let (negative, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    if body.is_empty() {
        return Err(format!("empty term in '{term}'"));
    }
    let rational = |s: &str| parse_rational(s).map_err(|e| e.to_string());
    let (coeff, exponent) = match body.find('t') {
        None => (rational(body)?, Rational::zero()),
        Some(pos) => {
            let head = &body[..pos];
            let tail = &body[pos + 1..];
            let coeff = match head.strip_suffix('*').unwrap_or(head) {
                "" => Rational::one(),
                c => rational(c)?,
            };
            let exponent = match tail.strip_prefix('^') {
                None if tail.is_empty() => Rational::one(),
                None => return Err(format!("unexpected '{tail}' after t")),
                Some(e) => {
                    let e = e.strip_prefix('(').and_then(|e| e.strip_suffix(')')).unwrap_or(e);
                    rational(e)?
                }
            };
            (coeff, exponent)
        }
    };
    let c = BigRational::new(BigInt::from(*coeff.numer()), BigInt::from(*coeff.denom()));
    Ok(PuiseuxScalar::monomial(if negative { -c } else { c }, exponent))
}

impl FromStr for PuiseuxScalar {
    type Err = Error;

    /// Grammar: `term (("+"|"-") term)*` with `term = coeff ["*t^(" q ")"] | "t^(" q ")"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::InvalidInput("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > start && !compact[..i].ends_with('^') => {
                    terms.push(&compact[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&compact[start..]);
        let mut out = PuiseuxScalar::zero();
        for t in terms {
            out = &out + &parse_term(t).map_err(|m| Error::InvalidInput(format!("scalar '{s}': {m}")))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> PuiseuxScalar {
        s.parse().unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(PuiseuxScalar::zero().val(), TropicalValue::Infinity);
        assert_eq!(parse("3*t^(1/2) + 2*t^(2)").val(), TropicalValue::ratio(1, 2));
        assert_eq!(parse("-5").val(), TropicalValue::ZERO);
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(parse("t^(-1/3)"), PuiseuxScalar::monomial(BigRational::one(), Rational::new(-1, 3)));
        assert_eq!(parse("1 - t"), &PuiseuxScalar::one() - &parse("t^(1)"));
        assert_eq!(parse("2*t^(1) - 2*t^(1)"), PuiseuxScalar::zero());
        assert_eq!(parse("-3/2*t^(2)").to_string(), "-3/2*t^(2)");
        assert!("3*x".parse::<PuiseuxScalar>().is_err());
        assert!("".parse::<PuiseuxScalar>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "7", "1 - t^(1/2)", "-2*t^(-1) + 3 + t^(5/3)"] {
            let x = parse(s);
            assert_eq!(parse(&x.to_string()), x);
        }
    }

    #[test]
    fn monomial_inverse() {
        let x = parse("4*t^(3/2)");
        assert_eq!(&x * &x.monomial_inverse().unwrap(), PuiseuxScalar::one());
        assert!(parse("1 + t").monomial_inverse().is_none());
    }

    fn scalar() -> impl Strategy<Value = PuiseuxScalar> {
        prop::collection::vec((-5i64..=5, -4i64..=4, 1i64..=3), 0..4).prop_map(|terms| {
            terms.into_iter().fold(PuiseuxScalar::zero(), |acc, (c, num, den)| {
                &acc + &PuiseuxScalar::monomial(BigRational::from_integer(c.into()), Rational::new(num, den))
            })
        })
    }

    proptest! {
        #[test]
        fn valuation_is_multiplicative(f in scalar(), g in scalar()) {
            prop_assert_eq!((&f * &g).val(), f.val().times(g.val()));
        }

        #[test]
        fn valuation_of_sum_is_ultrametric(f in scalar(), g in scalar()) {
            let s = (&f + &g).val();
            prop_assert!(s >= f.val().min(g.val()));
            if f.val() != g.val() {
                prop_assert_eq!(s, f.val().min(g.val()));
            }
        }

        #[test]
        fn ring_axioms(f in scalar(), g in scalar(), h in scalar()) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&(&f - &g) + &g, f.clone());
        }
    }
}
