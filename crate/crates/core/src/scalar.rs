//! The coefficient field: Gaussian rationals `a + b*i` with exact rational
//! parts, plus exact rational points on the unit circle used to evaluate
//! trigonometric families of structures.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::error::Error;

/// Exact rational number in lowest terms with positive denominator.
/// `BigRational` maintains that canonical form on construction.
pub type Rational = BigRational;

/// Convenience constructor for `p/q`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// An element of Q(i). Equality is structural thanks to the canonical form
/// of both parts.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Scalar { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(rat(n, 1))
    }

    /// `p/q` as a real scalar.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(rat(p, q))
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `a^2 + b^2` as a rational.
    pub fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self, Error> {
        Ok(self.clone() * other.inv()?)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: self.re + &rhs.re, im: self.im + &rhs.im }
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = &*self * &rhs;
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] where the
/// denominator is not known to be nonzero.
impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("scalar division by zero")
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical printing: `a/b`, `a/b*i`, or `a/b+c/d*i` (with `-` folded into
/// the numerators, `i`/`-i` for unit imaginary parts).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.re.is_zero() {
            parts.push(fmt_rational(&self.re));
        }
        if !self.im.is_zero() {
            let im = if self.im.is_one() {
                "i".to_string()
            } else if (-self.im.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_rational(&self.im))
            };
            if parts.is_empty() {
                parts.push(im);
            } else if im.starts_with('-') {
                parts.push(format!("-{}", &im[1..]));
            } else {
                parts.push(format!("+{im}"));
            }
        }
        write!(f, "{}", parts.concat())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A point `(c, s)` with `c^2 + s^2 = 1` exactly, standing in for
/// `(cos(pi t), sin(pi t))`. Constructed from the half-angle parameter
/// `s_half = tan(pi t / 2)`, so every rational parameter gives an exact
/// circle point; `t = 1` is the point at infinity of the parametrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    pub c: Rational,
    pub s: Rational,
}

/// Half-angle parameter for [`CirclePoint::from_half_tangent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfTangent {
    Finite(Rational),
    Infinity,
}

impl HalfTangent {
    /// Accepts `p/q`, an integer, or `inf`/`infinity`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
            return Ok(HalfTangent::Infinity);
        }
        t.parse::<Rational>()
            .map(HalfTangent::Finite)
            .map_err(|_| Error::Syntax { pos: 0, msg: format!("invalid circle parameter `{t}`") })
    }
}

impl CirclePoint {
    pub fn from_half_tangent(h: &HalfTangent) -> Self {
        match h {
            HalfTangent::Infinity => CirclePoint { c: -Rational::one(), s: Rational::zero() },
            HalfTangent::Finite(s) => {
                let s2 = s * s;
                let denom = Rational::one() + &s2;
                CirclePoint {
                    c: (Rational::one() - &s2) / denom.clone(),
                    s: (rat(2, 1) * s) / denom,
                }
            }
        }
    }

    pub fn cos(&self) -> Scalar {
        Scalar::from_rational(self.c.clone())
    }

    pub fn sin(&self) -> Scalar {
        Scalar::from_rational(self.s.clone())
    }

    /// `exp(pi i t) = c + i s`.
    pub fn exp_i(&self) -> Scalar {
        Scalar::new(self.c.clone(), self.s.clone())
    }

    pub fn on_circle(&self) -> bool {
        (&self.c * &self.c + &self.s * &self.s).is_one()
    }
}

/// Signum-free comparison helper for tests: |r| as a rational.
pub fn rational_abs(r: &Rational) -> Rational {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rand_scalar(rng: &mut StdRng) -> Scalar {
        Scalar::new(
            rat(rng.gen_range(-6..=6), rng.gen_range(1..=5)),
            rat(rng.gen_range(-6..=6), rng.gen_range(1..=5)),
        )
    }

    #[test]
    fn norm_identity() {
        let a = Scalar::one() + Scalar::i();
        let b = Scalar::one() - Scalar::i();
        assert_eq!(a * b, Scalar::from_int(2));
    }

    #[test]
    fn conjugation_is_involutive() {
        let z = Scalar::new(rat(3, 7), rat(2, 5));
        assert_eq!(z.conj().conj(), z);
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let z = rand_scalar(&mut rng);
            let w = rand_scalar(&mut rng);
            assert_eq!(z.conj().conj(), z);
            // conj is a field automorphism
            assert_eq!((z.clone() * w.clone()).conj(), z.conj() * w.conj());
            assert_eq!((z.clone() + w.clone()).conj(), z.conj() + w.conj());
        }
    }

    #[test]
    fn inverse_of_i() {
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn field_axioms_randomized() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..100 {
            let a = rand_scalar(&mut rng);
            let b = rand_scalar(&mut rng);
            let c = rand_scalar(&mut rng);
            // distributivity
            assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
            // associativity and commutativity of both operations
            assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
            if !b.is_zero() {
                assert_eq!(a.checked_div(&b).unwrap() * b.clone(), a.clone());
            }
        }
    }

    #[test]
    fn circle_points_are_exact() {
        assert_eq!(
            CirclePoint::from_half_tangent(&HalfTangent::Finite(rat(0, 1))),
            CirclePoint { c: rat(1, 1), s: rat(0, 1) }
        );
        assert_eq!(
            CirclePoint::from_half_tangent(&HalfTangent::Infinity),
            CirclePoint { c: rat(-1, 1), s: rat(0, 1) }
        );
        assert_eq!(
            CirclePoint::from_half_tangent(&HalfTangent::Finite(rat(1, 1))),
            CirclePoint { c: rat(0, 1), s: rat(1, 1) }
        );
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let h = HalfTangent::Finite(rat(rng.gen_range(-40..=40), rng.gen_range(1..=17)));
            assert!(CirclePoint::from_half_tangent(&h).on_circle());
        }
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::new(rat(1, 2), rat(-2, 5)).to_string(), "1/2-2/5*i");
        assert_eq!(Scalar::new(rat(0, 1), rat(3, 4)).to_string(), "3/4*i");
    }
}
