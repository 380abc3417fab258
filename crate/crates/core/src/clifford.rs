//! Clifford multiplication on basic spinors and the algebra `Cl_n`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{rat, Angle, Scalar};
use crate::spinor::{bit, low_bits, parity, Spinor};

/// `e_p u_a = i^e u_b`; returns `(e mod 4, b)`.
///
/// `j = ⌊(p+1)/2⌋` selects bit `j−1`. When `n` is odd and `p = n`, the
/// generator acts diagonally.
pub fn generator_on_basis(n: usize, p: usize, a: u64) -> (i64, u64) {
    if n % 2 == 1 && p == n {
        let k = (n / 2) as u32;
        let e = 1 + 2 * (k as i64 + low_bits(a, k) as i64);
        return (e.rem_euclid(4), a);
    }
    let j = p.div_ceil(2);
    let top = bit(a, (j - 1) as u32) as i64;
    let e = 4 * j as i64 - p as i64 - 2
        + 2 * low_bits(a, (j - 1) as u32) as i64
        + 2 * top * (p as i64 + 1 - 2 * j as i64);
    (e.rem_euclid(4), a ^ (1u64 << (j - 1)))
}

fn check_generator(n: usize, p: usize) -> Result<()> {
    if p == 0 || p > n {
        return Err(Error::GeneratorOutOfRange { p, n });
    }
    Ok(())
}

fn check_width(n: usize, psi: &Spinor) -> Result<()> {
    let k = (n / 2) as u32;
    if psi.width() != k {
        return Err(Error::WidthMismatch {
            left: psi.width(),
            right: k,
        });
    }
    Ok(())
}

pub fn clifford_apply(n: usize, p: usize, psi: &Spinor) -> Result<Spinor> {
    check_generator(n, p)?;
    check_width(n, psi)?;
    Ok(psi.map_basis(psi.width(), |a| generator_on_basis(n, p, a)))
}

/// Applies the product `e_{w_1} ⋯ e_{w_m}`; the last letter acts first.
pub fn word_apply(n: usize, word: &[usize], psi: &Spinor) -> Result<Spinor> {
    check_width(n, psi)?;
    for &p in word {
        check_generator(n, p)?;
    }
    Ok(psi.map_basis(psi.width(), |a| word_on_basis(n, word, a)))
}

pub fn word_on_basis(n: usize, word: &[usize], a: u64) -> (i64, u64) {
    let mut e = 0;
    let mut b = a;
    for &p in word.iter().rev() {
        let (de, nb) = generator_on_basis(n, p, b);
        e += de;
        b = nb;
    }
    (e.rem_euclid(4), b)
}

/// Sign of `e_I e_J = ± e_{I△J}` for increasing monomials with `e_i² = −1`.
pub fn monomial_sign(left: u32, right: u32) -> i64 {
    let mut swaps = 0u32;
    let mut rest = left >> 1;
    while rest != 0 {
        swaps += (rest & right).count_ones();
        rest >>= 1;
    }
    swaps += (left & right).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Element of `Cl_n ⊗ ℂ` keyed by monomial bitmask (bit `i−1` ⇔ `e_i`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CliffordElem {
    n: usize,
    terms: BTreeMap<u32, Scalar>,
}

impl CliffordElem {
    pub fn zero(n: usize) -> CliffordElem {
        CliffordElem {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: Scalar) -> CliffordElem {
        CliffordElem::from_terms(n, [(0, c)])
    }

    pub fn one(n: usize) -> CliffordElem {
        CliffordElem::scalar(n, Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (u32, Scalar)>>(n: usize, terms: I) -> CliffordElem {
        let mut x = CliffordElem::zero(n);
        for (m, c) in terms {
            x.add_term(m, c);
        }
        x
    }

    /// `e_{i_1} e_{i_2} ⋯` for arbitrary index order, normalized to sorted form.
    pub fn monomial(n: usize, indices: &[usize]) -> Result<CliffordElem> {
        let mut acc = CliffordElem::one(n);
        for &i in indices {
            acc = acc.mul(&CliffordElem::generator(n, i)?)?;
        }
        Ok(acc)
    }

    pub fn generator(n: usize, i: usize) -> Result<CliffordElem> {
        check_generator(n, i)?;
        Ok(CliffordElem::from_terms(n, [(1u32 << (i - 1), Scalar::one())]))
    }

    pub fn bivector(n: usize, i: usize, j: usize) -> Result<CliffordElem> {
        CliffordElem::monomial(n, &[i, j])
    }

    /// Grade-1 element `Σ y_i e_i`.
    pub fn vector(coords: &[Scalar]) -> CliffordElem {
        let n = coords.len();
        CliffordElem::from_terms(n, coords.iter().enumerate().map(|(i, c)| (1u32 << i, c.clone())))
    }

    pub fn volume(n: usize) -> CliffordElem {
        let mask = if n == 0 { 0 } else { (1u32 << n) - 1 };
        CliffordElem::from_terms(n, [(mask, Scalar::one())])
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u32) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    fn same_dim(&self, other: &CliffordElem) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("Cl_{} vs Cl_{}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn add(&self, other: &CliffordElem) -> Result<CliffordElem> {
        self.same_dim(other)?;
        let mut x = self.clone();
        for (m, c) in other.terms() {
            x.add_term(m, c.clone());
        }
        Ok(x)
    }

    pub fn sub(&self, other: &CliffordElem) -> Result<CliffordElem> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> CliffordElem {
        CliffordElem::from_terms(self.n, self.terms().map(|(m, x)| (m, x * c)))
    }

    pub fn mul(&self, other: &CliffordElem) -> Result<CliffordElem> {
        self.same_dim(other)?;
        let mut out = CliffordElem::zero(self.n);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                let c = x * y;
                let c = if monomial_sign(a, b) < 0 { -c } else { c };
                out.add_term(a ^ b, c);
            }
        }
        Ok(out)
    }

    pub fn commutator(&self, other: &CliffordElem) -> Result<CliffordElem> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Reversal anti-automorphism: a grade-g monomial picks up `(−1)^{g(g−1)/2}`.
    pub fn reverse(&self) -> CliffordElem {
        CliffordElem::from_terms(
            self.n,
            self.terms().map(|(m, c)| {
                let g = m.count_ones();
                if (g * g.saturating_sub(1) / 2) % 2 == 1 {
                    (m, -c)
                } else {
                    (m, c.clone())
                }
            }),
        )
    }

    pub fn grade_part(&self, g: u32) -> CliffordElem {
        CliffordElem::from_terms(
            self.n,
            self.terms().filter(|(m, _)| m.count_ones() == g).map(|(m, c)| (m, c.clone())),
        )
    }

    pub fn is_homogeneous(&self, g: u32) -> bool {
        self.terms().all(|(m, _)| m.count_ones() == g)
    }

    /// Grade-1 coefficients `y_1..y_n`.
    pub fn vector_coords(&self) -> Result<Vec<Scalar>> {
        if !self.is_homogeneous(1) {
            return Err(Error::WrongGrade(1));
        }
        Ok((0..self.n).map(|i| self.coeff(1u32 << i)).collect())
    }

    /// Action on spinors by Clifford multiplication.
    pub fn apply(&self, psi: &Spinor) -> Result<Spinor> {
        check_width(self.n, psi)?;
        let mut out = Spinor::zero(psi.width());
        for (m, c) in self.terms() {
            let word: Vec<usize> = (0..self.n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect();
            let image = word_apply(self.n, &word, psi)?;
            out = out.add(&image.scale(c))?;
        }
        Ok(out)
    }

    fn monomial_label(n: usize, mask: u32) -> String {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| format!("e{}", i + 1))
            .collect::<Vec<_>>()
            .join("")
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.terms() {
            let label: String = (0..self.n)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| format!("e_{{{}}}", i + 1))
                .collect();
            let coeff = if c.is_one() && m != 0 {
                String::new()
            } else if (-c).is_one() && m != 0 {
                "-".to_string()
            } else if c.monomial_count() == 1 {
                c.to_latex()
            } else {
                format!("({})", c.to_latex())
            };
            parts.push(format!("{coeff}{label}"));
        }
        let mut out = parts[0].clone();
        for p in &parts[1..] {
            if !p.starts_with('-') {
                out.push('+');
            }
            out.push_str(p);
        }
        out
    }
}

impl fmt::Display for CliffordElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if m == 0 {
                    format!("({c})")
                } else {
                    format!("({c})*{}", CliffordElem::monomial_label(self.n, m))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for CliffordElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl{}[{self}]", self.n)
    }
}

pub fn volume_element(n: usize) -> CliffordElem {
    CliffordElem::volume(n)
}

/// `(−i)^{n/2} vol_n` on a spinor.
pub fn chirality_operator(n: usize, psi: &Spinor) -> Result<Spinor> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    let word: Vec<usize> = (1..=n).collect();
    Ok(word_apply(n, &word, psi)?.mul_i_pow(3 * (n / 2) as i64))
}

/// Splits `ψ` into its `+1` and `−1` eigencomponents under the chirality operator.
pub fn chirality_split(n: usize, psi: &Spinor) -> Result<(Spinor, Spinor)> {
    let image = chirality_operator(n, psi)?;
    let half = Scalar::from_rat(rat(1, 2));
    let plus = psi.add(&image)?.scale(&half);
    let minus = psi.sub(&image)?.scale(&half);
    Ok((plus, minus))
}

/// `Π (cos θ + sin θ e_i e_j)` over pairwise disjoint index pairs.
pub fn exp_bivector(n: usize, factors: &[(Angle, (usize, usize))]) -> Result<CliffordElem> {
    let mut used = 0u32;
    let mut acc = CliffordElem::one(n);
    for &(theta, (i, j)) in factors {
        check_generator(n, i)?;
        check_generator(n, j)?;
        for idx in [i, j] {
            if used >> (idx - 1) & 1 == 1 {
                return Err(Error::OverlappingPairs(idx));
            }
            used |= 1 << (idx - 1);
        }
        if i == j {
            return Err(Error::OverlappingPairs(i));
        }
        let (c, s) = theta.cos_sin();
        let factor = CliffordElem::scalar(n, c).add(&CliffordElem::bivector(n, i, j)?.scale(&s))?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `exp(t(e_ae_b + e_ce_d))` for disjoint pairs, given the double angle `2t`:
/// `½(1+cos 2t) + ½ sin 2t (e_ae_b + e_ce_d) + ½(1−cos 2t) e_ae_be_ce_d`.
pub fn exp_pair_sum(n: usize, double_angle: Angle, first: (usize, usize), second: (usize, usize)) -> Result<CliffordElem> {
    let indices = [first.0, first.1, second.0, second.1];
    for (k, &i) in indices.iter().enumerate() {
        check_generator(n, i)?;
        if indices[..k].contains(&i) {
            return Err(Error::OverlappingPairs(i));
        }
    }
    let (c, s) = double_angle.cos_sin();
    let half = rat(1, 2);
    let one = Scalar::one();
    let x = CliffordElem::bivector(n, first.0, first.1)?;
    let y = CliffordElem::bivector(n, second.0, second.1)?;
    let xy = x.mul(&y)?;
    CliffordElem::scalar(n, (&one + &c).scale(&half))
        .add(&x.add(&y)?.scale(&s.scale(&half)))?
        .add(&xy.scale(&(&one - &c).scale(&half)))
}

/// `λ(g) y = g y g̃` for `g = x_1 ⋯ x_{2l}` given as its vector factors.
pub fn lambda_vector(word: &[CliffordElem], y: &CliffordElem) -> Result<CliffordElem> {
    if word.len() % 2 == 1 {
        return Err(Error::OddWord(word.len()));
    }
    if !y.is_homogeneous(1) {
        return Err(Error::WrongGrade(1));
    }
    for x in word {
        if !x.is_homogeneous(1) {
            return Err(Error::WrongGrade(1));
        }
    }
    let mut acc = y.clone();
    for x in word.iter().rev() {
        acc = x.mul(&acc)?.mul(x)?;
    }
    Ok(acc)
}

/// Vector factors of `cos θ + sin θ e_ie_j = (cos θ e_i + sin θ e_j)(−e_i)`.
pub fn rotation_word(n: usize, theta: Angle, i: usize, j: usize) -> Result<Vec<CliffordElem>> {
    let (c, s) = theta.cos_sin();
    let first = CliffordElem::generator(n, i)?
        .scale(&c)
        .add(&CliffordElem::generator(n, j)?.scale(&s))?;
    let second = CliffordElem::generator(n, i)?.scale(&Scalar::from_int(-1));
    Ok(vec![first, second])
}

/// Generator word as vector factors.
pub fn generator_word(n: usize, word: &[usize]) -> Result<Vec<CliffordElem>> {
    word.iter().map(|&p| CliffordElem::generator(n, p)).collect()
}

/// `f: Δ_{2k−1} → Δ⁺_{2k}`; odd-parity indices gain the top bit `2^{k−1}`.
pub fn delta_iso(k: u32, psi: &Spinor) -> Result<Spinor> {
    if k == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    if psi.width() != k - 1 {
        return Err(Error::WidthMismatch {
            left: psi.width(),
            right: k - 1,
        });
    }
    Ok(psi.map_basis(k, |a| (0, if parity(a) == 0 { a } else { a | 1u64 << (k - 1) })))
}

/// Closed form of `e_1e_p u_a` for stage `r`, `2 ≤ p ≤ r`, as `(i-exponent, index)`.
pub fn e1ep_closed_form(r: usize, p: usize, a: u64) -> Result<(i64, u64)> {
    if p < 2 || p > r {
        return Err(Error::GeneratorOutOfRange { p, n: r });
    }
    if p == 2 {
        return Ok(((1 + 2 * bit(a, 0) as i64).rem_euclid(4), a));
    }
    if r % 2 == 1 && p == r {
        let k = (r / 2) as u32;
        let s = k as i64 + 1 + low_bits(a, k) as i64;
        return Ok(((2 * s).rem_euclid(4), a ^ 1));
    }
    let j = p.div_ceil(2);
    let sign = 2 * j as i64 - 1
        + low_bits(a, (j - 1) as u32) as i64
        + bit(a, (j - 1) as u32) as i64 * (p as i64 + 1 - 2 * j as i64);
    let e = 1 - p as i64 + 2 * sign;
    Ok((e.rem_euclid(4), a ^ (1u64 << (j - 1)) ^ 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(k: u32, a: u64) -> Spinor {
        Spinor::basis(k, a).unwrap()
    }

    #[test]
    fn printed_examples() {
        assert_eq!(clifford_apply(6, 1, &u(3, 0)).unwrap(), u(3, 1).mul_i_pow(1));
        assert_eq!(clifford_apply(6, 2, &u(3, 3)).unwrap(), u(3, 2).mul_i_pow(2));
        assert_eq!(clifford_apply(3, 3, &u(1, 0)).unwrap(), u(1, 0).mul_i_pow(3));
        assert_eq!(word_apply(6, &[1, 2], &u(3, 0)).unwrap(), u(3, 0).mul_i_pow(1));
    }

    #[test]
    fn fifth_generator_flips_bit_two() {
        for n in 8..=12 {
            let k = (n / 2) as u32;
            assert_eq!(clifford_apply(n, 5, &u(k, 10)).unwrap(), u(k, 14).mul_i_pow(3));
            assert_eq!(clifford_apply(n, 5, &u(k, 11)).unwrap(), u(k, 15).mul_i_pow(1));
        }
    }

    #[test]
    fn volume_fixes_u0() {
        let w: Vec<usize> = (1..=8).collect();
        assert_eq!(word_apply(8, &w, &u(4, 0)).unwrap(), u(4, 0));
        let (p, m) = chirality_split(8, &u(4, 0)).unwrap();
        assert_eq!((p, m.is_empty()), (u(4, 0), true));
        let (p, m) = chirality_split(8, &u(4, 1)).unwrap();
        assert_eq!((p.is_empty(), m), (true, u(4, 1)));
        assert!(chirality_split(7, &u(3, 0)).is_err());
    }

    #[test]
    fn algebra_products() {
        let e1 = CliffordElem::generator(4, 1).unwrap();
        let e2 = CliffordElem::generator(4, 2).unwrap();
        let minus_one = CliffordElem::scalar(4, Scalar::from_int(-1));
        assert_eq!(e1.mul(&e1).unwrap(), minus_one);
        let e12 = e1.mul(&e2).unwrap();
        assert_eq!(e12, CliffordElem::from_terms(4, [(0b11, Scalar::one())]));
        assert_eq!(e2.mul(&e1).unwrap(), e12.scale(&Scalar::from_int(-1)));
        assert_eq!(e12.mul(&e12).unwrap(), minus_one);
        assert_eq!(CliffordElem::monomial(4, &[3, 1]).unwrap(), CliffordElem::monomial(4, &[1, 3]).unwrap().scale(&Scalar::from_int(-1)));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_bivector(8, &[]).unwrap(), CliffordElem::one(8));
        assert!(matches!(
            exp_bivector(8, &[(Angle::new(1), (1, 2)), (Angle::new(1), (2, 3))]),
            Err(Error::OverlappingPairs(2))
        ));
        for k in 0..24 {
            let t = Angle::new(k);
            let product = exp_bivector(8, &[(t, (2, 3)), (t, (6, 7))]).unwrap();
            let closed = exp_pair_sum(8, t.double(), (2, 3), (6, 7)).unwrap();
            assert_eq!(product, closed);
        }
    }

    #[test]
    fn lambda_examples() {
        let g = generator_word(6, &[1, 2]).unwrap();
        let e1 = CliffordElem::generator(6, 1).unwrap();
        let e3 = CliffordElem::generator(6, 3).unwrap();
        assert_eq!(lambda_vector(&g, &e1).unwrap(), e1.scale(&Scalar::from_int(-1)));
        assert_eq!(lambda_vector(&g, &e3).unwrap(), e3);
        let rot = rotation_word(6, Angle::new(3), 1, 2).unwrap();
        let (c, s) = Angle::new(6).cos_sin();
        let expected = e1.scale(&c).add(&CliffordElem::generator(6, 2).unwrap().scale(&s)).unwrap();
        assert_eq!(lambda_vector(&rot, &e1).unwrap(), expected);
        assert!(lambda_vector(&g[..1], &e1).is_err());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta_iso(2, &u(1, 0)).unwrap(), u(2, 0));
        assert_eq!(delta_iso(2, &u(1, 1)).unwrap(), u(2, 3));
        assert_eq!(delta_iso(3, &u(2, 1)).unwrap(), u(3, 5));
        assert_eq!(delta_iso(4, &u(3, 5)).unwrap(), u(4, 5));
    }
}
