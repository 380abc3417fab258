//! Basic spinors `u_a` addressed by their binary code.
//!
//! For `k = ⌊n/2⌋` bits, the sign tuple `(ε_1, …, ε_k)` corresponds to
//! `a = Σ_j (1 − ε_j)/2 · 2^{k−j}`, so `ε_k` sits in bit 0.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat, Rat, Scalar};

#[inline]
pub fn bit(a: u64, l: u32) -> u64 {
    (a >> l) & 1
}

/// Number of set bits below position `l`.
#[inline]
pub fn low_bits(a: u64, l: u32) -> u32 {
    if l == 0 {
        0
    } else {
        (a & ((1u64 << l) - 1)).count_ones()
    }
}

#[inline]
pub fn parity(a: u64) -> u32 {
    a.count_ones() & 1
}

pub fn index_from_signs(signs: &[i64]) -> Result<u64> {
    let k = signs.len();
    let mut a = 0u64;
    for (j, &eps) in signs.iter().enumerate() {
        match eps {
            1 => {}
            -1 => a |= 1 << (k - 1 - j),
            other => return Err(Error::InvalidSign(other)),
        }
    }
    Ok(a)
}

pub fn signs_from_index(a: u64, k: u32) -> Result<Vec<i64>> {
    check_index(a, k)?;
    Ok((1..=k).map(|j| 1 - 2 * bit(a, k - j) as i64).collect())
}

pub fn check_index(a: u64, k: u32) -> Result<()> {
    if k < 64 && a >> k != 0 {
        return Err(Error::IndexOutOfRange { index: a, bits: k });
    }
    Ok(())
}

/// +1 on Δ⁺ (even bit parity), −1 on Δ⁻.
pub fn chirality(a: u64) -> i8 {
    if parity(a) == 0 {
        1
    } else {
        -1
    }
}

/// Torus weight of `u_a`.
///
/// The factor `cos(φ_j/2) + sin(φ_j/2) e_{2j−1}e_{2j}` acts on `u_a` by the
/// phase `e^{±iφ_j/2}` with sign `(−1)^{a_{j−1}}`, so component `j` is
/// `(−1)^{a_{j−1}}/2`.
pub fn weight(a: u64, k: u32) -> Result<Vec<Rat>> {
    check_index(a, k)?;
    Ok((0..k)
        .map(|l| if bit(a, l) == 0 { rat(1, 2) } else { rat(-1, 2) })
        .collect())
}

/// Sparse element of `Δ_n = ℂ^{2^k}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spinor {
    k: u32,
    terms: BTreeMap<u64, Scalar>,
}

impl Spinor {
    pub fn zero(k: u32) -> Spinor {
        Spinor {
            k,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: u32, a: u64) -> Result<Spinor> {
        Spinor::term(k, a, Scalar::one())
    }

    pub fn term(k: u32, a: u64, coeff: Scalar) -> Result<Spinor> {
        let mut s = Spinor::zero(k);
        s.add_term(a, coeff)?;
        Ok(s)
    }

    pub fn from_terms<I>(k: u32, terms: I) -> Result<Spinor>
    where
        I: IntoIterator<Item = (u64, Scalar)>,
    {
        let mut s = Spinor::zero(k);
        for (a, c) in terms {
            s.add_term(a, c)?;
        }
        Ok(s)
    }

    pub fn width(&self) -> u32 {
        self.k
    }

    pub fn dim(&self) -> u64 {
        1u64 << self.k
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &Scalar)> {
        self.terms.iter().map(|(a, c)| (*a, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u64) -> Scalar {
        self.terms.get(&a).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: u64, c: Scalar) -> Result<()> {
        check_index(a, self.k)?;
        if c.is_zero() {
            return Ok(());
        }
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        Ok(())
    }

    fn same_width(&self, other: &Spinor) -> Result<()> {
        if self.k != other.k {
            return Err(Error::WidthMismatch {
                left: self.k,
                right: other.k,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Spinor) -> Result<Spinor> {
        self.same_width(other)?;
        let mut s = self.clone();
        for (a, c) in other.terms() {
            s.add_term(a, c.clone())?;
        }
        Ok(s)
    }

    pub fn sub(&self, other: &Spinor) -> Result<Spinor> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Spinor {
        if c.is_zero() {
            return Spinor::zero(self.k);
        }
        Spinor {
            k: self.k,
            terms: self.terms.iter().map(|(a, x)| (*a, x * c)).collect(),
        }
    }

    pub fn mul_i_pow(&self, e: i64) -> Spinor {
        Spinor {
            k: self.k,
            terms: self.terms.iter().map(|(a, x)| (*a, x.mul_i_pow(e))).collect(),
        }
    }

    /// Coefficientwise complex conjugate.
    pub fn conj(&self) -> Spinor {
        Spinor {
            k: self.k,
            terms: self.terms.iter().map(|(a, x)| (*a, x.conj())).collect(),
        }
    }

    /// Applies `f(a) = (exponent of i, new index)` termwise.
    pub(crate) fn map_basis<F>(&self, k: u32, mut f: F) -> Spinor
    where
        F: FnMut(u64) -> (i64, u64),
    {
        let mut out = BTreeMap::<u64, Scalar>::new();
        for (a, c) in self.terms() {
            let (e, b) = f(a);
            let v = c.mul_i_pow(e);
            match out.entry(b) {
                std::collections::btree_map::Entry::Vacant(slot) => {
                    slot.insert(v);
                }
                std::collections::btree_map::Entry::Occupied(mut slot) => {
                    *slot.get_mut() += &v;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Spinor { k, terms: out }
    }

    pub fn chirality_parts(&self) -> (Spinor, Spinor) {
        let mut plus = Spinor::zero(self.k);
        let mut minus = Spinor::zero(self.k);
        for (a, c) in self.terms() {
            let target = if chirality(a) > 0 { &mut plus } else { &mut minus };
            target.terms.insert(a, c.clone());
        }
        (plus, minus)
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (a, c)) in self.terms().enumerate() {
            let body = c.to_latex();
            let simple = c.monomial_count() == 1;
            let text = if c.is_one() {
                format!("u_{{{a}}}")
            } else if (-c).is_one() {
                format!("-u_{{{a}}}")
            } else if simple {
                format!("{body}u_{{{a}}}")
            } else {
                format!("({body})u_{{{a}}}")
            };
            if n > 0 && !text.starts_with('-') {
                out.push('+');
            }
            out.push_str(&text);
        }
        out
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(a, c)| format!("({c})*u{a}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spinor[k={}]({self})", self.k)
    }
}

/// `⟨ψ₁, ψ₂⟩ = Σ conj(c₁) c₂`, conjugate-linear in the first slot.
pub fn hermitian(left: &Spinor, right: &Spinor) -> Result<Scalar> {
    left.same_width(right)?;
    let mut acc = Scalar::zero();
    let (small, large, flip) = if left.len() <= right.len() {
        (left, right, false)
    } else {
        (right, left, true)
    };
    for (a, c) in small.terms() {
        if let Some(d) = large.terms.get(&a) {
            let term = if flip { &d.conj() * c } else { &c.conj() * d };
            acc += &term;
        }
    }
    Ok(acc)
}

/// Image of `u_a` under the real or quaternionic structure `γ_n`, as an
/// exponent of `i` and a target index. `γ_n(c·u_a) = conj(c)·i^e·u_b`.
pub fn gamma_basis(n: usize, a: u64) -> (i64, u64) {
    let q = (n / 4) as u32;
    match n % 8 {
        0 | 1 | 4 | 5 => {
            let s: u64 = (1..=q).map(|t| bit(a, 2 * t - 1)).sum();
            let mask = (1u64 << (2 * q)) - 1;
            (3 * q as i64 + 2 * s as i64, mask ^ a)
        }
        _ => {
            let s: u64 = (0..=q).map(|t| bit(a, 2 * t)).sum();
            let mask = (1u64 << (2 * q + 1)) - 1;
            (3 * (q as i64 + 1) + 2 * s as i64, mask ^ a)
        }
    }
}

pub fn real_structure(n: usize, psi: &Spinor) -> Result<Spinor> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let k = (n / 2) as u32;
    if psi.width() != k {
        return Err(Error::WidthMismatch {
            left: psi.width(),
            right: k,
        });
    }
    Ok(psi.conj().map_basis(k, |a| gamma_basis(n, a)))
}

/// Sign of `γ_n²`.
pub fn gamma_square_sign(n: usize) -> i8 {
    match n % 8 {
        0 | 1 | 6 | 7 => 1,
        _ => -1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RealForm {
    Plus,
    Minus,
    Full,
}

fn symmetrized(n: usize, v: Spinor) -> Result<Spinor> {
    let half_root2 = Scalar::sqrt2().scale(&rat(1, 2));
    Ok(v.add(&real_structure(n, &v)?)?.scale(&half_root2))
}

/// Ordered real basis of the real form for stage `r` (r ≡ 0, 1, 2, 4 mod 8).
///
/// Plus bases come in pairs `(b(u_a), b(i·u_a))`. The minus basis is the
/// image of the plus basis under `e_1`. `Full` is plus followed by minus for
/// even `r` and plus followed by `i·plus` for odd `r`.
pub fn real_form_basis(r: usize, which: RealForm) -> Result<Vec<Spinor>> {
    let residue = r % 8;
    if !matches!(residue, 0 | 1 | 2 | 4) {
        return Err(Error::UnsupportedResidue(r));
    }
    if r < 2 {
        return Err(Error::DimensionTooSmall(r));
    }
    let k = (r / 2) as u32;
    let plus = match residue {
        0 | 1 => {
            let range = 1u64 << (k - 1);
            let mut out = Vec::new();
            for a in (0..range).filter(|&a| residue == 1 || parity(a) == 0) {
                out.push(symmetrized(r, Spinor::basis(k, a)?)?);
                out.push(symmetrized(r, Spinor::term(k, a, Scalar::i())?)?);
            }
            out
        }
        _ => {
            let mut out = Vec::new();
            for a in (0..1u64 << k).filter(|&a| parity(a) == 0) {
                out.push(Spinor::basis(k, a)?);
                out.push(Spinor::term(k, a, Scalar::i())?);
            }
            out
        }
    };
    match which {
        RealForm::Plus => Ok(plus),
        RealForm::Minus => plus
            .iter()
            .map(|v| crate::clifford::clifford_apply(r, 1, v))
            .collect(),
        RealForm::Full => {
            let second: Vec<Spinor> = if r % 2 == 1 {
                plus.iter().map(|v| v.mul_i_pow(1)).collect()
            } else {
                real_form_basis(r, RealForm::Minus)?
            };
            Ok(plus.into_iter().chain(second).collect())
        }
    }
}

/// Coefficients `c_j` with `v = Σ c_j b_j`, `c_j` real, for a pairwise
/// orthogonal basis. Fails if `v` is outside the real span.
pub fn real_expand(v: &Spinor, basis: &[Spinor]) -> Result<Vec<Scalar>> {
    let mut coeffs = Vec::with_capacity(basis.len());
    let mut rebuilt = Spinor::zero(v.width());
    for b in basis {
        let num = hermitian(b, v)?.re();
        let den = hermitian(b, b)?;
        let c = num.div(&den)?;
        if !c.is_zero() {
            rebuilt = rebuilt.add(&b.scale(&c))?;
        }
        coeffs.push(c);
    }
    if rebuilt != *v {
        return Err(Error::NotInSpan);
    }
    Ok(coeffs)
}

#[derive(Serialize, Deserialize)]
struct SpinorTermJson {
    index: u64,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct SpinorJson {
    k: u32,
    terms: Vec<SpinorTermJson>,
}

impl Serialize for Spinor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SpinorJson {
            k: self.k,
            terms: self
                .terms()
                .map(|(index, c)| SpinorTermJson {
                    index,
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Spinor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = SpinorJson::deserialize(deserializer)?;
        Spinor::from_terms(raw.k, raw.terms.into_iter().map(|t| (t.index, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_table() {
        assert_eq!(index_from_signs(&[1, 1, -1]).unwrap(), 1);
        assert_eq!(index_from_signs(&[-1, -1, -1]).unwrap(), 7);
        assert_eq!(index_from_signs(&[1, 1, 1, 1, 1]).unwrap(), 0);
        assert_eq!(signs_from_index(4, 3).unwrap(), vec![-1, 1, 1]);
        assert!(matches!(index_from_signs(&[1, 0]), Err(Error::InvalidSign(0))));
        assert!(signs_from_index(8, 3).is_err());
    }

    #[test]
    fn round_trip_all_small() {
        for k in 0..=10 {
            for a in 0..1u64 << k {
                let s = signs_from_index(a, k).unwrap();
                assert_eq!(index_from_signs(&s).unwrap(), a);
            }
        }
    }

    #[test]
    fn hermitian_examples() {
        let u3 = Spinor::basis(3, 3).unwrap();
        let u5 = Spinor::basis(3, 5).unwrap();
        assert!(hermitian(&u3, &u3).unwrap().is_one());
        assert!(hermitian(&u3, &u5).unwrap().is_zero());
        let iu0 = Spinor::term(3, 0, Scalar::i()).unwrap();
        let u0 = Spinor::basis(3, 0).unwrap();
        assert_eq!(hermitian(&iu0, &u0).unwrap(), Scalar::gaussian(0, -1));
        assert!(hermitian(&u0, &Spinor::basis(2, 0).unwrap()).is_err());
    }

    #[test]
    fn chirality_sets() {
        let plus: Vec<u64> = (0..16).filter(|&a| chirality(a) > 0).collect();
        let minus: Vec<u64> = (0..16).filter(|&a| chirality(a) < 0).collect();
        assert_eq!(plus, vec![0, 3, 5, 6, 9, 10, 12, 15]);
        assert_eq!(minus, vec![1, 2, 4, 7, 8, 11, 13, 14]);
    }

    #[test]
    fn gamma_eight_on_u0() {
        let g = real_structure(8, &Spinor::basis(4, 0).unwrap()).unwrap();
        assert_eq!(g, Spinor::term(4, 15, Scalar::from_int(-1)).unwrap());
    }

    #[test]
    fn gamma_two_is_quaternionic() {
        for a in 0..2 {
            let u = Spinor::basis(1, a).unwrap();
            let twice = real_structure(2, &real_structure(2, &u).unwrap()).unwrap();
            assert_eq!(twice, u.scale(&Scalar::from_int(-1)));
        }
    }

    #[test]
    fn real_basis_sizes() {
        assert_eq!(real_form_basis(8, RealForm::Plus).unwrap().len(), 8);
        assert_eq!(real_form_basis(9, RealForm::Plus).unwrap().len(), 16);
        let ten = real_form_basis(10, RealForm::Plus).unwrap();
        assert_eq!(ten.len(), 32);
        let first = &ten[0];
        assert_eq!(first.terms().next().unwrap().0, 0);
        assert_eq!(ten[1], Spinor::term(5, 0, Scalar::i()).unwrap());
        assert!(matches!(real_form_basis(6, RealForm::Plus), Err(Error::UnsupportedResidue(6))));
    }

    #[test]
    fn first_real_vector_eight() {
        let basis = real_form_basis(8, RealForm::Plus).unwrap();
        let h = Scalar::sqrt2().scale(&rat(1, 2));
        let expected = Spinor::from_terms(4, [(0, h.clone()), (15, -&h)]).unwrap();
        assert_eq!(basis[0], expected);
    }

    #[test]
    fn weights() {
        assert_eq!(weight(0, 3).unwrap(), vec![rat(1, 2); 3]);
        assert_eq!(weight(5, 3).unwrap(), vec![rat(-1, 2), rat(1, 2), rat(-1, 2)]);
        assert_eq!(weight(1, 1).unwrap(), vec![rat(-1, 2)]);
        assert_eq!(weight(1, 3).unwrap(), vec![rat(-1, 2), rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn json_round_trip() {
        let s = Spinor::from_terms(3, [(1, Scalar::omega()), (6, Scalar::from_int(2))]).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        let back: Spinor = serde_json::from_str(&text).unwrap();
        assert_eq!(back, s);
        assert!(text.starts_with("{\"k\":3,\"terms\":[{\"index\":1"));
    }
}
