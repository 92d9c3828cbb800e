//! Scalar backends shared by all tensor and matrix code.
//!
//! Two exact backends (rationals and Gaussian rationals) drive the identity
//! suites; two float backends (f64 and complex f64) drive the heat-trace lane.

use num::BigRational;
use num::{BigInt, FromPrimitive, ToPrimitive};
use num_complex::Complex;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational scalar.
pub type Rat = BigRational;
/// Exact Gaussian rational scalar.
pub type GRat = Complex<BigRational>;
/// Complex double.
pub type C64 = Complex<f64>;

/// Field operations needed by the tensor layer.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Zero up to arithmetic noise: exact zero for exact scalars, a small
    /// absolute tolerance for floating-point backends.  Structural
    /// precondition checks (alternating, Bianchi, Hermitian, ...) go through
    /// this so float-valued inputs produced by projections still validate.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn from_rat(r: &Rat) -> Self;
    /// Real and imaginary part as doubles, for reports.
    fn to_c64(&self) -> C64;
}

/// Scalars with an imaginary unit and conjugation (Clifford/matrix layer).
pub trait CScalar: Scalar {
    fn i() -> Self;
    fn conj(&self) -> Self;
}

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar for Rat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        rat(num, den)
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn to_c64(&self) -> C64 {
        C64::new(rat_to_f64(self), 0.0)
    }
}

impl Scalar for GRat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn from_int(n: i64) -> Self {
        GRat::new(Rat::from_int(n), num::Zero::zero())
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        GRat::new(rat(num, den), num::Zero::zero())
    }
    fn from_rat(r: &Rat) -> Self {
        GRat::new(r.clone(), num::Zero::zero())
    }
    fn to_c64(&self) -> C64 {
        C64::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

impl CScalar for GRat {
    fn i() -> Self {
        GRat::new(num::Zero::zero(), num::One::one())
    }
    fn conj(&self) -> Self {
        num_complex::Complex::conj(self)
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn is_negligible(&self) -> bool {
        self.abs() <= 1e-9
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn from_rat(r: &Rat) -> Self {
        rat_to_f64(r)
    }
    fn to_c64(&self) -> C64 {
        C64::new(*self, 0.0)
    }
}

impl Scalar for C64 {
    fn zero() -> Self {
        C64::new(0.0, 0.0)
    }
    fn one() -> Self {
        C64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn is_negligible(&self) -> bool {
        self.norm() <= 1e-9
    }
    fn from_int(n: i64) -> Self {
        C64::new(n as f64, 0.0)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        C64::new(num as f64 / den as f64, 0.0)
    }
    fn from_rat(r: &Rat) -> Self {
        C64::new(rat_to_f64(r), 0.0)
    }
    fn to_c64(&self) -> C64 {
        *self
    }
}

impl CScalar for C64 {
    fn i() -> Self {
        C64::new(0.0, 1.0)
    }
    fn conj(&self) -> Self {
        num_complex::Complex::conj(self)
    }
}

/// Lossy conversion used for reports and the float lane.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Extremely large numerator/denominator: fall back to a quotient of
        // truncated doubles.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// Parse "p/q", integer, or decimal strings into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let q: BigInt = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if num::Zero::is_zero(&q) {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.trim_start().starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            num::Zero::zero()
        } else {
            int.parse().map_err(|e| format!("bad decimal {s:?}: {e}"))?
        };
        let digits = frac.trim();
        let num: BigInt = if digits.is_empty() {
            num::Zero::zero()
        } else {
            digits.parse().map_err(|e| format!("bad decimal {s:?}: {e}"))?
        };
        let den = num::pow::pow(BigInt::from(10), digits.len());
        let frac_part = BigRational::new(num, den);
        let int_part = BigRational::from_integer(int);
        return Ok(if neg { int_part - frac_part } else { int_part + frac_part });
    }
    let p: BigInt = s.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
    Ok(BigRational::from_integer(p))
}

/// Render a rational as "p/q" (or "p" when integral).
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_f64(x: f64) -> Rat {
    BigRational::from_f64(x).expect("finite float")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-7").unwrap(), rat(-7, 1));
        assert_eq!(parse_rat("0.25").unwrap(), rat(1, 4));
        assert_eq!(parse_rat("-1.5").unwrap(), rat(-3, 2));
        assert_eq!(rat_to_string(&rat(3, 4)), "3/4");
        assert_eq!(rat_to_string(&rat(-8, 2)), "-4");
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn gaussian_field_ops() {
        let z = GRat::i() * GRat::i();
        assert_eq!(z, GRat::from_int(-1));
        assert_eq!(CScalar::conj(&GRat::i()), -GRat::i());
    }
}
