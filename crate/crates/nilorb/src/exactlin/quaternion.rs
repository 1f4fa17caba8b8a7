//! Rational quaternions and the scalar-field tags R ⊂ C ⊂ H.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Builds a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds the rational `num / den`.
///
/// # Panics
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The quaternion `a + b𝐢 + c𝐣 + d𝐤` with rational coefficients.
///
/// Complex numbers are quaternions with `c = d = 0`, reals additionally have `b = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn zero() -> Self {
        Quaternion::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Quaternion::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Quaternion::from_rational(rat(n))
    }

    pub fn from_rational(a: Rational) -> Self {
        Quaternion { a, b: Rational::zero(), c: Rational::zero(), d: Rational::zero() }
    }

    /// Integer-coefficient constructor, convenient for tests and fixed constants.
    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Quaternion { a: rat(a), b: rat(b), c: rat(c), d: rat(d) }
    }

    /// The unit 𝐢.
    pub fn i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    /// The unit 𝐣.
    pub fn j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    /// The unit 𝐤.
    pub fn k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_complex(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    /// The usual conjugation σ_c, negating the 𝐢, 𝐣, 𝐤 coefficients.
    pub fn conj(&self) -> Self {
        Quaternion { a: self.a.clone(), b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// The reduced norm |x|² = a² + b² + c² + d².
    pub fn norm_sqr(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// Multiplicative inverse σ_c(x)/|x|², or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        let c = self.conj();
        Some(Quaternion { a: c.a / &n, b: c.b / &n, c: c.c / &n, d: c.d / &n })
    }

    /// The four coefficients in the order 1, 𝐢, 𝐣, 𝐤.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Multiplies every coefficient by a rational scalar.
    pub fn scale(&self, s: &Rational) -> Self {
        Quaternion { a: &self.a * s, b: &self.b * s, c: &self.c * s, d: &self.d * s }
    }
}

impl Default for Quaternion {
    fn default() -> Self {
        Quaternion::zero()
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::from_int(n)
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::from_rational(r)
    }
}

impl<'a> Add<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion { a: &self.a + &o.a, b: &self.b + &o.b, c: &self.c + &o.c, d: &self.d + &o.d }
    }
}

impl<'a> Sub<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion { a: &self.a - &o.a, b: &self.b - &o.b, c: &self.c - &o.c, d: &self.d - &o.d }
    }
}

impl<'a> Mul<&'a Quaternion> for &'a Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        if self.is_zero() || o.is_zero() {
            return Quaternion::zero();
        }
        if self.is_real() {
            return o.scale(&self.a);
        }
        if o.is_real() {
            return self.scale(&o.a);
        }
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion {
            a: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            b: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            c: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        &self + &o
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        &self - &o
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        &self * &o
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

impl AddAssign<&Quaternion> for Quaternion {
    fn add_assign(&mut self, o: &Quaternion) {
        self.a += &o.a;
        self.b += &o.b;
        self.c += &o.c;
        self.d += &o.d;
    }
}

impl SubAssign<&Quaternion> for Quaternion {
    fn sub_assign(&mut self, o: &Quaternion) {
        self.a -= &o.a;
        self.b -= &o.b;
        self.c -= &o.c;
        self.d -= &o.d;
    }
}

impl fmt::Display for Quaternion {
    /// Renders e.g. `0`, `-1`, `1/2+3i`, `-j`, `2-k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (coef, unit) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if unit.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(unit);
        }
        f.write_str(&out)
    }
}

/// The division algebra D ∈ {R, C, H} a matrix lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ScalarField {
    R,
    C,
    H,
}

impl ScalarField {
    /// Dimension of the field as a real vector space.
    pub fn real_dim(self) -> usize {
        match self {
            ScalarField::R => 1,
            ScalarField::C => 2,
            ScalarField::H => 4,
        }
    }

    /// Whether `x` is an element of this field.
    pub fn contains(self, x: &Quaternion) -> bool {
        match self {
            ScalarField::R => x.is_real(),
            ScalarField::C => x.is_complex(),
            ScalarField::H => true,
        }
    }

    /// A real basis of the field: `1`, then `𝐢`, `𝐣`, `𝐤` as applicable.
    pub fn units(self) -> Vec<Quaternion> {
        let all = [Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()];
        all.into_iter().take(self.real_dim()).collect()
    }

    /// The smallest field containing both.
    pub fn join(self, other: ScalarField) -> ScalarField {
        self.max(other)
    }
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ScalarField::R => "R",
            ScalarField::C => "C",
            ScalarField::H => "H",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = Quaternion::from_int(-1);
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&j * &i, -&k);
    }

    #[test]
    fn inverse_and_conjugate() {
        let x = Quaternion::from_ints(1, 2, -3, 4);
        assert_eq!(&x * &x.inv().unwrap(), Quaternion::one());
        assert_eq!(&x.inv().unwrap() * &x, Quaternion::one());
        assert_eq!(x.conj(), Quaternion::from_ints(1, -2, 3, -4));
        assert_eq!(x.norm_sqr(), rat(30));
        assert!(Quaternion::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Quaternion::zero().to_string(), "0");
        assert_eq!(Quaternion::from_int(-1).to_string(), "-1");
        assert_eq!((-Quaternion::j()).to_string(), "-j");
        assert_eq!(Quaternion::from_ints(2, 0, 0, -1).to_string(), "2-k");
        let half = Quaternion::new(ratio(1, 2), rat(3), rat(0), rat(0));
        assert_eq!(half.to_string(), "1/2+3i");
    }

    #[test]
    fn field_membership() {
        assert!(ScalarField::R.contains(&Quaternion::from_int(3)));
        assert!(!ScalarField::R.contains(&Quaternion::i()));
        assert!(ScalarField::C.contains(&Quaternion::i()));
        assert!(!ScalarField::C.contains(&Quaternion::j()));
        assert!(ScalarField::H.contains(&Quaternion::k()));
        assert_eq!(ScalarField::R.join(ScalarField::H), ScalarField::H);
        assert_eq!(ScalarField::C.units().len(), 2);
    }
}
