//! Exterior algebra on ℝ⁸ with rational coefficients.
//!
//! A basis form `dx_{i₁}∧⋯∧dx_{i_p}` with `i₁ < ⋯ < i_p` is stored as a bit
//! mask, bit `i − 1` standing for `dx_i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::golden;
use crate::matrix::{e_basis_decompose, Matrix};
use crate::scalar::{format_rat, int, Rat};
use crate::triality::{g2_generators, kappa8_star, kappa8_star_pair};

pub const AMBIENT: usize = 8;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct ExtForm {
    terms: BTreeMap<u16, Rat>,
}

/// Sign of `dx_A ∧ dx_B` relative to the sorted blade, or 0 on overlap.
fn shuffle_sign(a: u16, b: u16) -> i8 {
    if a & b != 0 {
        return 0;
    }
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let low = rest.trailing_zeros();
        swaps += (a >> (low + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl ExtForm {
    pub fn zero() -> ExtForm {
        ExtForm::default()
    }

    pub fn constant(c: Rat) -> ExtForm {
        let mut f = ExtForm::zero();
        f.add_term(0, c);
        f
    }

    pub fn dx(i: usize) -> Result<ExtForm> {
        ExtForm::blade(&[i], int(1))
    }

    /// `c · dx_{i₁}∧⋯∧dx_{i_p}` for indices in any order.
    pub fn blade(indices: &[usize], c: Rat) -> Result<ExtForm> {
        let mut out = ExtForm::constant(c);
        for &i in indices {
            if i == 0 || i > AMBIENT {
                return Err(Error::GeneratorOutOfRange { p: i, n: AMBIENT });
            }
            let mut single = ExtForm::zero();
            single.add_term(1 << (i - 1), int(1));
            out = out.wedge(&single)?;
        }
        Ok(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (u16, Rat)>>(terms: I) -> ExtForm {
        let mut f = ExtForm::zero();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    fn add_term(&mut self, mask: u16, c: Rat) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u16, &Rat)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, indices: &[usize]) -> Result<Rat> {
        let probe = ExtForm::blade(indices, int(1))?;
        let Some((mask, sign)) = probe.terms.iter().next() else {
            return Ok(Rat::zero());
        };
        Ok(self.terms.get(mask).map(|c| c * sign).unwrap_or_else(Rat::zero))
    }

    /// The common degree, or `None` for zero and mixed forms.
    pub fn degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.count_ones() as usize);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &ExtForm) -> ExtForm {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ExtForm) -> ExtForm {
        self.add(&other.scale(&-int(1)))
    }

    pub fn scale(&self, q: &Rat) -> ExtForm {
        ExtForm::from_terms(self.terms.iter().map(|(m, c)| (*m, c * q)))
    }

    pub fn wedge(&self, other: &ExtForm) -> Result<ExtForm> {
        let top = |f: &ExtForm| f.terms.keys().map(|m| m.count_ones() as usize).max().unwrap_or(0);
        if top(self) + top(other) > AMBIENT {
            return Err(Error::DegreeOverflow(top(self) + top(other)));
        }
        let mut out = ExtForm::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                match shuffle_sign(*a, *b) {
                    0 => {}
                    s => out.add_term(a | b, x * y * int(s as i64)),
                }
            }
        }
        Ok(out)
    }

    /// Contraction with the coordinate vector `∂_i`.
    pub fn interior(&self, i: usize) -> Result<ExtForm> {
        if i == 0 || i > AMBIENT {
            return Err(Error::GeneratorOutOfRange { p: i, n: AMBIENT });
        }
        let bit = 1u16 << (i - 1);
        let mut out = ExtForm::zero();
        for (m, c) in &self.terms {
            if m & bit != 0 {
                let before = (m & (bit - 1)).count_ones();
                let sign = if before.is_multiple_of(2) { int(1) } else { -int(1) };
                out.add_term(m ^ bit, c * sign);
            }
        }
        Ok(out)
    }

    /// Action of an endomorphism `A` (columns are images of `e_i`) as a
    /// derivation, with `dx_i ↦ −Σ_k A[i][k] dx_k`.
    pub fn derivation(&self, a: &Matrix) -> Result<ExtForm> {
        if a.rows() != AMBIENT || a.cols() != AMBIENT {
            return Err(Error::DimensionMismatch(format!("{}x{} endomorphism", a.rows(), a.cols())));
        }
        let rational = a.rational_entries().ok_or_else(|| Error::NotRational("endomorphism".into()))?;
        let entry = |r: usize, c: usize| &rational[r * AMBIENT + c];
        let mut out = ExtForm::zero();
        for (m, c) in &self.terms {
            let indices: Vec<usize> = (0..AMBIENT).filter(|b| m & (1 << b) != 0).collect();
            for (slot, &i) in indices.iter().enumerate() {
                for k in 0..AMBIENT {
                    let weight = entry(i, k);
                    if weight.is_zero() {
                        continue;
                    }
                    let mut replaced: Vec<usize> = indices.iter().map(|x| x + 1).collect();
                    replaced[slot] = k + 1;
                    out = out.add(&ExtForm::blade(&replaced, -(c * weight))?);
                }
            }
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        self.render(|m| {
            (0..AMBIENT)
                .filter(|b| m & (1 << b) != 0)
                .map(|b| format!("dx_{{{}}}", b + 1))
                .collect::<Vec<_>>()
                .join("\\wedge ")
        })
    }

    fn render(&self, blade: impl Fn(u16) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c < &Rat::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            out.push_str(match (k, negative) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            if *m == 0 {
                out.push_str(&format_rat(&magnitude));
            } else {
                if !magnitude.is_one() {
                    out.push_str(&format_rat(&magnitude));
                    out.push(' ');
                }
                out.push_str(&blade(*m));
            }
        }
        out
    }
}

impl fmt::Display for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.render(|m| {
            let digits: String = (0..AMBIENT)
                .filter(|b| m & (1 << b) != 0)
                .map(|b| char::from(b'1' + b as u8))
                .collect();
            format!("dx{digits}")
        });
        f.write_str(&text)
    }
}

impl fmt::Debug for ExtForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtForm({self})")
    }
}

/// `Σ c_kl dx_k∧dx_l` for `M = Σ c_kl E_kl`.
pub fn dualize_endomorphism(m: &Matrix) -> Result<ExtForm> {
    let mut out = ExtForm::zero();
    for ((k, l), c) in e_basis_decompose(m)? {
        let q = c.as_rat().ok_or_else(|| Error::NotRational(c.to_string()))?;
        out = out.add(&ExtForm::blade(&[k, l], q)?);
    }
    Ok(out)
}

/// `f_{i,j}`, the dual of `κ₈*⁺(e_ie_j)`.
pub fn two_form(i: usize, j: usize) -> Result<ExtForm> {
    dualize_endomorphism(&kappa8_star_pair(1, i, j)?)
}

/// `Ω = Σ_{2≤i<j≤8} f_{i,j}∧f_{i,j}`.
pub fn spin7_four_form() -> Result<ExtForm> {
    let mut omega = ExtForm::zero();
    for i in 2..=8 {
        for j in i + 1..=8 {
            let f = two_form(i, j)?;
            omega = omega.add(&f.wedge(&f)?);
        }
    }
    Ok(omega)
}

/// `φ = ι_{∂₁}Ω`.
pub fn g2_three_form() -> Result<ExtForm> {
    spin7_four_form()?.interior(1)
}

pub fn omega_square() -> Result<ExtForm> {
    let omega = spin7_four_form()?;
    omega.wedge(&omega)
}

pub fn volume_form() -> ExtForm {
    ExtForm::from_terms([(0xff, int(1))])
}

/// Printed `Ω/6` and `φ/6` assembled from their term lists.
pub fn printed_omega() -> Result<ExtForm> {
    let mut out = ExtForm::zero();
    for (s, idx) in golden::OMEGA_TERMS {
        out = out.add(&ExtForm::blade(&idx, int(6 * s as i64))?);
    }
    Ok(out)
}

pub fn printed_phi() -> Result<ExtForm> {
    let mut out = ExtForm::zero();
    for (s, idx) in golden::PHI_TERMS {
        out = out.add(&ExtForm::blade(&idx, int(6 * s as i64))?);
    }
    Ok(out)
}

pub fn printed_two_form(text: &str) -> Result<ExtForm> {
    let mut out = ExtForm::zero();
    for (s, k, l) in golden::parse_signed_pairs(text)? {
        out = out.add(&ExtForm::blade(&[k, l], int(s as i64))?);
    }
    Ok(out)
}

/// Generators (1-based) of `𝔤₂` whose derivation action does not kill `form`.
pub fn g2_non_annihilators(form: &ExtForm) -> Result<Vec<usize>> {
    let mut bad = Vec::new();
    for (k, g) in g2_generators()?.iter().enumerate() {
        if !form.derivation(&kappa8_star(1, &g.to_clifford())?)?.is_zero() {
            bad.push(k + 1);
        }
    }
    Ok(bad)
}

/// Pairs `2 ≤ i < j ≤ 8` whose `κ₈*⁺(e_ie_j)` does not kill `form`.
pub fn spin7_non_annihilators(form: &ExtForm) -> Result<Vec<(usize, usize)>> {
    let mut bad = Vec::new();
    for i in 2..=8 {
        for j in i + 1..=8 {
            if !form.derivation(&kappa8_star_pair(1, i, j)?)?.is_zero() {
                bad.push((i, j));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_basics() {
        let d1 = ExtForm::dx(1).unwrap();
        let d2 = ExtForm::dx(2).unwrap();
        assert_eq!(d1.wedge(&d2).unwrap(), ExtForm::blade(&[1, 2], int(1)).unwrap());
        assert_eq!(d2.wedge(&d1).unwrap(), ExtForm::blade(&[1, 2], int(-1)).unwrap());
        assert!(d1.wedge(&d1).unwrap().is_zero());
        let top = volume_form();
        assert!(matches!(top.wedge(&d1), Err(Error::DegreeOverflow(9))));
    }

    #[test]
    fn interior_signs() {
        let f = ExtForm::blade(&[2, 1, 3], int(1)).unwrap();
        assert_eq!(f.interior(1).unwrap(), ExtForm::blade(&[2, 3], int(-1)).unwrap());
        assert_eq!(f.interior(2).unwrap(), ExtForm::blade(&[1, 3], int(1)).unwrap());
        assert!(f.interior(4).unwrap().is_zero());
    }

    #[test]
    fn two_forms_match_printed() {
        for ((i, j), text) in golden::TWO_FORMS {
            assert_eq!(two_form(i, j).unwrap(), printed_two_form(text).unwrap(), "f_{i},{j}");
        }
        assert!(dualize_endomorphism(&Matrix::zeros(8, 8)).unwrap().is_zero());
    }

    #[test]
    fn square_of_f23() {
        let f = two_form(2, 3).unwrap();
        let sq = f.wedge(&f).unwrap();
        assert_eq!(sq.len(), 6);
        assert_eq!(sq.coeff(&[1, 4, 2, 3]).unwrap(), int(2));
        assert_eq!(sq.coeff(&[1, 4, 5, 8]).unwrap(), int(2));
    }

    #[test]
    fn fundamental_forms() {
        let omega = spin7_four_form().unwrap();
        assert_eq!(omega, printed_omega().unwrap());
        assert_eq!(omega.coeff(&[1, 2, 3, 4]).unwrap(), int(-6));
        assert_eq!(omega_square().unwrap(), volume_form().scale(&int(504)));
        assert_eq!(g2_three_form().unwrap(), printed_phi().unwrap());
    }

    #[test]
    fn invariance() {
        let omega = spin7_four_form().unwrap();
        let phi = g2_three_form().unwrap();
        assert!(g2_non_annihilators(&phi).unwrap().is_empty());
        assert!(g2_non_annihilators(&omega).unwrap().is_empty());
        assert!(spin7_non_annihilators(&omega).unwrap().is_empty());
        assert!(!spin7_non_annihilators(&phi).unwrap().is_empty());
    }
}
