//! Scalar types: exact Gaussian integers and double-precision complex numbers.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Complex scalar used by momentum-dependent operators.
pub type Cplx = Complex64;

/// Gaussian integer `re + im*i`.
///
/// Every constant matrix of the operator algebra has entries in {0, ±1, ±i},
/// and sums and products of such matrices stay Gaussian-integral, so identity
/// checks among the constants can demand a residual of exactly zero.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct GaussInt {
    pub re: i64,
    pub im: i64,
}

impl GaussInt {
    pub const ZERO: GaussInt = GaussInt { re: 0, im: 0 };
    pub const ONE: GaussInt = GaussInt { re: 1, im: 0 };
    pub const I: GaussInt = GaussInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussInt { re, im }
    }

    pub const fn conj(self) -> Self {
        GaussInt { re: self.re, im: -self.im }
    }

    pub const fn is_zero(self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// Exact residual measure: max(|re|, |im|).
    pub fn abs_max(self) -> i64 {
        self.re.abs().max(self.im.abs())
    }

    pub fn to_complex(self) -> Cplx {
        Cplx::new(self.re as f64, self.im as f64)
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re + o.re, self.im + o.im)
    }
}

impl AddAssign for GaussInt {
    fn add_assign(&mut self, o: GaussInt) {
        *self = *self + o;
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, o: GaussInt) -> GaussInt {
        GaussInt::new(self.re - o.re, self.im - o.im)
    }
}

impl SubAssign for GaussInt {
    fn sub_assign(&mut self, o: GaussInt) {
        *self = *self - o;
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, o: GaussInt) -> GaussInt {
        GaussInt::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Mul<i64> for GaussInt {
    type Output = GaussInt;
    fn mul(self, k: i64) -> GaussInt {
        GaussInt::new(self.re * k, self.im * k)
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}{im}i"),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

/// Parse a Gaussian integer in the fixture notation: `0`, `-1`, `1i`, `-2i`, `3+1i`, `3-1i`.
pub fn parse_gauss(s: &str) -> Option<GaussInt> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some(body) = s.strip_suffix('i') {
        // Split off a trailing signed integer as the imaginary part.
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1].is_ascii_digit() {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: i64 = body[..k].parse().ok()?;
                let im: i64 = body[k..].parse().ok()?;
                Some(GaussInt::new(re, im))
            }
            None => {
                let im: i64 = match body {
                    "" | "+" => 1,
                    "-" => -1,
                    _ => body.parse().ok()?,
                };
                Some(GaussInt::new(0, im))
            }
        }
    } else {
        let re: i64 = s.parse().ok()?;
        Some(GaussInt::new(re, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let i = GaussInt::I;
        assert_eq!(i * i, -GaussInt::ONE);
        assert_eq!(i * i * i * i, GaussInt::ONE);
        let z = GaussInt::new(2, -3) * GaussInt::new(-1, 4);
        assert_eq!(z, GaussInt::new(10, 11));
        assert_eq!(z.conj(), GaussInt::new(10, -11));
    }

    #[test]
    fn parse_round_trips_display() {
        for z in [
            GaussInt::ZERO,
            GaussInt::ONE,
            -GaussInt::ONE,
            GaussInt::I,
            -GaussInt::I,
            GaussInt::new(3, -2),
            GaussInt::new(-4, 5),
        ] {
            assert_eq!(parse_gauss(&z.to_string()), Some(z));
        }
        assert_eq!(parse_gauss("1i"), Some(GaussInt::I));
        assert_eq!(parse_gauss("-1i"), Some(-GaussInt::I));
        assert_eq!(parse_gauss("bogus"), None);
    }

    proptest::proptest! {
        #[test]
        fn display_parse_round_trip(re in -999i64..=999, im in -999i64..=999) {
            let z = GaussInt::new(re, im);
            proptest::prop_assert_eq!(parse_gauss(&z.to_string()), Some(z));
        }
    }
}
