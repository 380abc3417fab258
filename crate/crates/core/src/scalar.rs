//! Exact arithmetic in the number field Q(i, √2, √3).
//!
//! A [`Scalar`] stores eight rationals: a complex coefficient for each of
//! the radicals 1, √2, √3 and √6. Radical `r` is encoded by two bits, bit 0
//! for √2 and bit 1 for √3, so the product of radicals `r` and `s` is
//! radical `r ^ s` times the square of the shared part.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub(crate) fn format_rat(q: &Rat) -> String {
    q.to_string()
}

pub(crate) fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|_| Error::Parse(format!("invalid rational {s:?}")))
}

/// Radical basis element of the field over Q(i).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radical {
    One = 0,
    Sqrt2 = 1,
    Sqrt3 = 2,
    Sqrt6 = 3,
}

impl Radical {
    pub const ALL: [Radical; 4] = [Radical::One, Radical::Sqrt2, Radical::Sqrt3, Radical::Sqrt6];

    pub fn key(self) -> &'static str {
        match self {
            Radical::One => "1",
            Radical::Sqrt2 => "sqrt2",
            Radical::Sqrt3 => "sqrt3",
            Radical::Sqrt6 => "sqrt6",
        }
    }

    fn from_key(key: &str) -> Option<Radical> {
        Radical::ALL.into_iter().find(|r| r.key() == key)
    }

    fn index(self) -> usize {
        self as usize
    }
}

fn radical_product(r: usize, s: usize) -> (usize, i64) {
    let shared = r & s;
    let mut factor = 1;
    if shared & 1 != 0 {
        factor *= 2;
    }
    if shared & 2 != 0 {
        factor *= 3;
    }
    (r ^ s, factor)
}

/// Element of Q(i, √2, √3) in canonical form.
///
/// `c[2 * r]` and `c[2 * r + 1]` are the real and imaginary parts of the
/// coefficient of radical `r`. Rationals are always reduced, so derived
/// equality and hashing are structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    c: [Rat; 8],
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            c: std::array::from_fn(|_| Rat::zero()),
        }
    }

    pub fn one() -> Scalar {
        Scalar::from_rat(Rat::one())
    }

    pub fn i() -> Scalar {
        Scalar::gaussian(0, 1)
    }

    pub fn from_rat(q: Rat) -> Scalar {
        Scalar::from_radical(Radical::One, q, Rat::zero())
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_rat(int(n))
    }

    /// `re + im·i` with integer parts.
    pub fn gaussian(re: i64, im: i64) -> Scalar {
        Scalar::from_radical(Radical::One, int(re), int(im))
    }

    /// `(re + im·i)·radical`.
    pub fn from_radical(radical: Radical, re: Rat, im: Rat) -> Scalar {
        let mut s = Scalar::zero();
        s.c[2 * radical.index()] = re;
        s.c[2 * radical.index() + 1] = im;
        s
    }

    pub fn sqrt2() -> Scalar {
        Scalar::from_radical(Radical::Sqrt2, Rat::one(), Rat::zero())
    }

    pub fn sqrt3() -> Scalar {
        Scalar::from_radical(Radical::Sqrt3, Rat::one(), Rat::zero())
    }

    pub fn sqrt6() -> Scalar {
        Scalar::from_radical(Radical::Sqrt6, Rat::one(), Rat::zero())
    }

    /// i^k for any integer k.
    pub fn i_pow(k: i64) -> Scalar {
        match k.rem_euclid(4) {
            0 => Scalar::gaussian(1, 0),
            1 => Scalar::gaussian(0, 1),
            2 => Scalar::gaussian(-1, 0),
            _ => Scalar::gaussian(0, -1),
        }
    }

    /// The primitive cube root of unity (−1 + i√3)/2.
    pub fn omega() -> Scalar {
        let mut s = Scalar::from_rat(rat(-1, 2));
        s.c[2 * Radical::Sqrt3.index() + 1] = rat(1, 2);
        s
    }

    pub fn re_part(&self, radical: Radical) -> &Rat {
        &self.c[2 * radical.index()]
    }

    pub fn im_part(&self, radical: Radical) -> &Rat {
        &self.c[2 * radical.index() + 1]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    /// True when every imaginary component vanishes.
    pub fn is_real(&self) -> bool {
        self.c.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.c[1..].iter().all(Zero::is_zero) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// Real part, with i ↦ −i fixing everything else.
    pub fn re(&self) -> Scalar {
        let mut s = self.clone();
        for r in 0..4 {
            s.c[2 * r + 1] = Rat::zero();
        }
        s
    }

    pub fn conj(&self) -> Scalar {
        let mut s = self.clone();
        for r in 0..4 {
            s.c[2 * r + 1] = -std::mem::take(&mut s.c[2 * r + 1]);
        }
        s
    }

    /// Field automorphism √2 ↦ −√2.
    fn flip_sqrt2(&self) -> Scalar {
        self.flip(1)
    }

    /// Field automorphism √3 ↦ −√3.
    fn flip_sqrt3(&self) -> Scalar {
        self.flip(2)
    }

    fn flip(&self, bit: usize) -> Scalar {
        let mut s = self.clone();
        for r in 0..4 {
            if r & bit != 0 {
                s.c[2 * r] = -std::mem::take(&mut s.c[2 * r]);
                s.c[2 * r + 1] = -std::mem::take(&mut s.c[2 * r + 1]);
            }
        }
        s
    }

    pub fn scale(&self, q: &Rat) -> Scalar {
        if q.is_zero() {
            return Scalar::zero();
        }
        let mut s = self.clone();
        for x in s.c.iter_mut() {
            if !x.is_zero() {
                *x *= q;
            }
        }
        s
    }

    /// Multiplication by i^k without a general product.
    pub fn mul_i_pow(&self, k: i64) -> Scalar {
        let mut s = self.clone();
        for r in 0..4 {
            let re = std::mem::take(&mut s.c[2 * r]);
            let im = std::mem::take(&mut s.c[2 * r + 1]);
            let (re, im) = match k.rem_euclid(4) {
                0 => (re, im),
                1 => (-im, re),
                2 => (-re, -im),
                _ => (im, -re),
            };
            s.c[2 * r] = re;
            s.c[2 * r + 1] = im;
        }
        s
    }

    /// Inverse by successive rationalization: first over √3, then √2, then i.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c3 = self.flip_sqrt3();
        let b = self * &c3;
        let c2 = b.flip_sqrt2();
        let n = &b * &c2;
        let ci = n.conj();
        let norm = (&n * &ci).as_rat().expect("norm lies in Q");
        let num = &(&c3 * &c2) * &ci;
        Ok(num.scale(&(Rat::one() / norm)))
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn monomials(&self) -> Vec<(Rat, bool, Radical)> {
        let mut out = Vec::new();
        for radical in Radical::ALL {
            let re = self.re_part(radical);
            let im = self.im_part(radical);
            if !re.is_zero() {
                out.push((re.clone(), false, radical));
            }
            if !im.is_zero() {
                out.push((im.clone(), true, radical));
            }
        }
        out
    }

    /// Number of nonzero rational components.
    pub fn monomial_count(&self) -> usize {
        self.c.iter().filter(|x| !x.is_zero()).count()
    }

    pub fn to_latex(&self) -> String {
        let terms = self.monomials();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (q, imag, radical)) in terms.into_iter().enumerate() {
            let negative = q.is_negative();
            let q = q.abs();
            if negative {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let unit = !imag && radical == Radical::One;
            if !q.is_one() || unit {
                if q.is_integer() {
                    out.push_str(&q.numer().to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom()));
                }
            }
            if imag {
                out.push('i');
            }
            match radical {
                Radical::One => {}
                Radical::Sqrt2 => out.push_str("\\sqrt{2}"),
                Radical::Sqrt3 => out.push_str("\\sqrt{3}"),
                Radical::Sqrt6 => out.push_str("\\sqrt{6}"),
            }
        }
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.monomials();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (q, imag, radical)) in terms.into_iter().enumerate() {
            let negative = q.is_negative();
            let q = q.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !q.is_one() || (!imag && radical == Radical::One) {
                factors.push(q.to_string());
            }
            if imag {
                factors.push("i".to_string());
            }
            if radical != Radical::One {
                factors.push(radical.key().to_string());
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        Scalar::from_int(n)
    }
}

impl From<Rat> for Scalar {
    fn from(q: Rat) -> Scalar {
        Scalar::from_rat(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut s = self.clone();
        s += rhs;
        s
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut s = self.clone();
        s -= rhs;
        s
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (x, y) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (x, y) in self.c.iter_mut().zip(rhs.c.iter()) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for r in 0..4 {
            let (a, b) = (&self.c[2 * r], &self.c[2 * r + 1]);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            for s in 0..4 {
                let (c, d) = (&rhs.c[2 * s], &rhs.c[2 * s + 1]);
                if c.is_zero() && d.is_zero() {
                    continue;
                }
                let (t, factor) = radical_product(r, s);
                let mut re = a * c - b * d;
                let mut im = a * d + b * c;
                if factor != 1 {
                    let f = int(factor);
                    re *= &f;
                    im *= &f;
                }
                out.c[2 * t] += re;
                out.c[2 * t + 1] += im;
            }
        }
        out
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let mut s = self.clone();
        for x in s.c.iter_mut() {
            *x = -std::mem::take(x);
        }
        s
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let present: Vec<Radical> = Radical::ALL
            .into_iter()
            .filter(|r| !self.re_part(*r).is_zero() || !self.im_part(*r).is_zero())
            .collect();
        let mut map = serializer.serialize_map(Some(present.len()))?;
        for radical in present {
            let mut pair = serde_json::Map::new();
            pair.insert("re".into(), format_rat(self.re_part(radical)).into());
            pair.insert("im".into(), format_rat(self.im_part(radical)).into());
            map.serialize_entry(radical.key(), &pair)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Pair {
            #[serde(default)]
            re: Option<String>,
            #[serde(default)]
            im: Option<String>,
        }
        let raw: std::collections::BTreeMap<String, Pair> = Deserialize::deserialize(deserializer)?;
        let mut s = Scalar::zero();
        for (key, pair) in raw {
            let radical = Radical::from_key(&key)
                .ok_or_else(|| de::Error::custom(format!("unknown radical key {key:?}")))?;
            let part = |v: Option<String>| -> std::result::Result<Rat, D::Error> {
                match v {
                    Some(text) => parse_rat(&text).map_err(de::Error::custom),
                    None => Ok(Rat::zero()),
                }
            };
            s.c[2 * radical.index()] = part(pair.re)?;
            s.c[2 * radical.index() + 1] = part(pair.im)?;
        }
        Ok(s)
    }
}

/// Angle kπ/12 with k reduced mod 24.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Angle(i32);

impl Angle {
    pub const ZERO: Angle = Angle(0);

    pub fn new(k: i32) -> Angle {
        Angle(k.rem_euclid(24))
    }

    /// Numerator k of kπ/12, in 0..24.
    pub fn twelfths(self) -> i32 {
        self.0
    }

    pub fn double(self) -> Angle {
        Angle::new(2 * self.0)
    }

    pub fn cos(self) -> Scalar {
        let mut k = self.0;
        let mut sign = 1;
        if k > 12 {
            k = 24 - k;
        }
        if k > 6 {
            k = 12 - k;
            sign = -1;
        }
        let quarter = |a: i64, b: i64| {
            let mut s = Scalar::zero();
            s.c[2 * Radical::Sqrt6.index()] = rat(a, 4);
            s.c[2 * Radical::Sqrt2.index()] = rat(b, 4);
            s
        };
        let value = match k {
            0 => Scalar::one(),
            1 => quarter(1, 1),
            2 => Scalar::sqrt3().scale(&rat(1, 2)),
            3 => Scalar::sqrt2().scale(&rat(1, 2)),
            4 => Scalar::from_rat(rat(1, 2)),
            5 => quarter(1, -1),
            _ => Scalar::zero(),
        };
        if sign < 0 {
            -value
        } else {
            value
        }
    }

    pub fn sin(self) -> Scalar {
        Angle::new(6 - self.0).cos()
    }

    pub fn cos_sin(self) -> (Scalar, Scalar) {
        (self.cos(), self.sin())
    }

    /// e^{iθ}.
    pub fn phase(self) -> Scalar {
        let (c, s) = self.cos_sin();
        &c + &s.mul_i_pow(1)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::new(self.0 + rhs.0)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle::new(-self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_one_plus_i_sqrt3() -> Scalar {
        let mut s = Scalar::from_rat(rat(1, 2));
        s += &(Scalar::sqrt3().mul_i_pow(1).scale(&rat(1, 2)));
        s
    }

    #[test]
    fn radical_table() {
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt3(), Scalar::sqrt6());
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt6(), Scalar::sqrt3().scale(&int(2)));
        assert_eq!(Scalar::sqrt3() * Scalar::sqrt6(), Scalar::sqrt2().scale(&int(3)));
        assert_eq!(Scalar::sqrt6() * Scalar::sqrt6(), Scalar::from_int(6));
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn cube_root_squares_to_conjugate() {
        // (1 + i√3)² = −2 + 2i√3
        let z = half_one_plus_i_sqrt3();
        let expected = Scalar::omega();
        assert_eq!(&z * &z, expected);
    }

    #[test]
    fn inverses() {
        assert_eq!(Scalar::from_int(2).inv().unwrap(), Scalar::from_rat(rat(1, 2)));
        let w = Scalar::omega();
        assert_eq!(w.inv().unwrap(), w.conj());
        let a = &Scalar::one() + &Scalar::sqrt2();
        assert_eq!(a.inv().unwrap(), &Scalar::sqrt2() - &Scalar::one());
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conjugation() {
        let a = Scalar::sqrt2().mul_i_pow(1);
        assert_eq!(a.conj(), -&a);
        assert_eq!(Scalar::from_rat(rat(3, 4)).conj(), Scalar::from_rat(rat(3, 4)));
        assert_eq!(Scalar::omega().conj(), Scalar::omega().pow(2));
    }

    #[test]
    fn exact_angles() {
        assert_eq!(Angle::new(0).cos_sin(), (Scalar::one(), Scalar::zero()));
        let h = Scalar::sqrt2().scale(&rat(1, 2));
        assert_eq!(Angle::new(3).cos_sin(), (h.clone(), h));
        // half-angle oracle from π/6: c² = (1 + cos π/6)/2, s² = (1 − cos π/6)/2, 2cs = sin π/6
        let (c, s) = Angle::new(1).cos_sin();
        let cos30 = Scalar::sqrt3().scale(&rat(1, 2));
        assert_eq!(&c * &c, (&Scalar::one() + &cos30).scale(&rat(1, 2)));
        assert_eq!(&s * &s, (&Scalar::one() - &cos30).scale(&rat(1, 2)));
        assert_eq!((&c * &s).scale(&int(2)), Scalar::from_rat(rat(1, 2)));
        assert!(c.re_part(Radical::Sqrt6) > &Rat::zero());
        for k in 0..24 {
            let (c, s) = Angle::new(k).cos_sin();
            assert_eq!(&c * &c + &s * &s, Scalar::one(), "k = {k}");
        }
    }

    #[test]
    fn angle_addition_formulas() {
        for a in 0..24 {
            for b in 0..24 {
                let (ca, sa) = Angle::new(a).cos_sin();
                let (cb, sb) = Angle::new(b).cos_sin();
                let (c, s) = Angle::new(a + b).cos_sin();
                assert_eq!(c, &ca * &cb - &sa * &sb);
                assert_eq!(s, &sa * &cb + &ca * &sb);
            }
        }
    }

    #[test]
    fn json_shape() {
        let z = Scalar::omega();
        let json = serde_json::to_value(&z).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"1": {"re": "-1/2", "im": "0"}, "sqrt3": {"re": "0", "im": "1/2"}})
        );
        assert_eq!(serde_json::to_string(&Scalar::zero()).unwrap(), "{}");
        let back: Scalar = serde_json::from_value(json).unwrap();
        assert_eq!(back, z);
    }

    #[test]
    fn display() {
        assert_eq!(Scalar::omega().to_string(), "-1/2 + 1/2*i*sqrt3");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!(Scalar::from_int(-1).to_string(), "-1");
        assert_eq!(Scalar::omega().to_latex(), "-\\frac{1}{2}+\\frac{1}{2}i\\sqrt{3}");
    }
}
