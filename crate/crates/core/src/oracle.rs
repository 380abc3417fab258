//! Kronecker-product model of `κ_n` and `γ_n`, kept independent of the
//! bit-flip kernel so the two can be compared.
//!
//! The 2×2 blocks start in standard coordinates of `ℂ²` and are moved to
//! the basis `u_{+1} = (1, −i)/√2`, `u_{−1} = (1, i)/√2`. The first
//! Kronecker factor carries `ε_1`, so the last one acts on bit 0.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{rat, Scalar};
use crate::spinor::Spinor;

pub const DEFAULT_MAX_N: usize = 12;

/// Oracle dimension cap, read from `SPINBITS_MAX_N`.
pub fn max_oracle_dim() -> usize {
    std::env::var("SPINBITS_MAX_N")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_N)
}

fn check_limit(n: usize) -> Result<()> {
    let limit = max_oracle_dim();
    if n > limit {
        return Err(Error::LimitExceeded { n, limit });
    }
    Ok(())
}

fn m2(entries: [[Scalar; 2]; 2]) -> Matrix {
    let [[a, b], [c, d]] = entries;
    Matrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

fn s(re: i64, im: i64) -> Scalar {
    Scalar::gaussian(re, im)
}

/// Columns `u_{+1}`, `u_{−1}` in standard coordinates.
pub fn change_of_basis() -> Matrix {
    let h = Scalar::sqrt2().scale(&rat(1, 2));
    m2([[h.clone(), h.clone()], [-h.mul_i_pow(1), h.mul_i_pow(1)]])
}

fn to_u_basis(standard: &Matrix) -> Matrix {
    let u = change_of_basis();
    let inv = u.inverse().expect("unitary");
    inv.mul(standard).and_then(|x| x.mul(&u)).expect("2x2")
}

/// Standard-coordinate blocks `(g₁, g₂, T)`.
pub fn standard_blocks() -> (Matrix, Matrix, Matrix) {
    (
        m2([[s(0, 1), s(0, 0)], [s(0, 0), s(0, -1)]]),
        m2([[s(0, 0), s(0, 1)], [s(0, 1), s(0, 0)]]),
        m2([[s(0, 0), s(0, -1)], [s(0, 1), s(0, 0)]]),
    )
}

/// `(g₁, g₂, T)` in the `u` basis.
pub fn blocks() -> (Matrix, Matrix, Matrix) {
    let (g1, g2, t) = standard_blocks();
    (to_u_basis(&g1), to_u_basis(&g2), to_u_basis(&t))
}

fn kron_all(factors: &[Matrix]) -> Matrix {
    factors
        .iter()
        .fold(Matrix::identity(1), |acc, f| acc.kron(f))
}

/// `κ_n(e_1), …, κ_n(e_n)` as dense Kronecker products.
pub fn tensor_oracle(n: usize) -> Result<Vec<Matrix>> {
    check_limit(n)?;
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let k = n / 2;
    let (g1, g2, t) = blocks();
    let id = Matrix::identity(2);
    let mut out = Vec::with_capacity(n);
    for j in 1..=k {
        for g in [&g1, &g2] {
            let factors: Vec<Matrix> = (1..=k)
                .map(|pos| {
                    // pos counts from the most significant factor
                    let bit = k - pos;
                    if bit + 1 == j {
                        g.clone()
                    } else if bit + 1 < j {
                        t.clone()
                    } else {
                        id.clone()
                    }
                })
                .collect();
            out.push(kron_all(&factors));
        }
    }
    if n % 2 == 1 {
        let factors = vec![t.clone(); k];
        out.push(kron_all(&factors).scale(&Scalar::i()));
    }
    Ok(out)
}

/// Conjugate-linear model of `γ_n`: `γ(c) = A · conj(c)` in `u` coordinates.
pub fn gamma_oracle(n: usize) -> Result<Matrix> {
    check_limit(n)?;
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let u = change_of_basis();
    let inv = u.inverse().expect("unitary");
    let convert = |m: Matrix| inv.mul(&m).and_then(|x| x.mul(&u.conj())).expect("2x2");
    let alpha = convert(m2([[s(0, 0), s(-1, 0)], [s(1, 0), s(0, 0)]]));
    let beta = convert(Matrix::identity(2));
    let k = n / 2;
    // α ⊗ β ⊗ α ⊗ ⋯ with k factors covers every residue of n mod 8
    let factors: Vec<Matrix> = (0..k)
        .map(|i| if i % 2 == 0 { alpha.clone() } else { beta.clone() })
        .collect();
    Ok(kron_all(&factors))
}

pub fn apply_gamma_oracle(a: &Matrix, psi: &Spinor) -> Result<Vec<Scalar>> {
    let dense = dense(psi);
    let conj: Vec<Scalar> = dense.iter().map(Scalar::conj).collect();
    a.mul_vec(&conj)
}

pub fn dense(psi: &Spinor) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); psi.dim() as usize];
    for (a, c) in psi.terms() {
        v[a as usize] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_in_u_basis() {
        let (g1, g2, t) = blocks();
        let zero = Scalar::zero();
        assert_eq!(g1, m2([[zero.clone(), Scalar::i()], [Scalar::i(), zero.clone()]]));
        assert_eq!(g2, m2([[zero.clone(), s(-1, 0)], [s(1, 0), zero.clone()]]));
        assert_eq!(t, m2([[s(-1, 0), zero.clone()], [zero, s(1, 0)]]));
    }

    #[test]
    fn small_oracles() {
        let (g1, g2, t) = blocks();
        assert_eq!(tensor_oracle(2).unwrap(), vec![g1.clone(), g2.clone()]);
        assert_eq!(tensor_oracle(3).unwrap(), vec![g1, g2, t.scale(&Scalar::i())]);
        assert!(matches!(tensor_oracle(40), Err(Error::LimitExceeded { .. })));
    }

    #[test]
    fn gamma_eight_oracle() {
        let a = gamma_oracle(8).unwrap();
        let image = apply_gamma_oracle(&a, &Spinor::basis(4, 0).unwrap()).unwrap();
        for (i, x) in image.iter().enumerate() {
            let expected = if i == 15 { Scalar::from_int(-1) } else { Scalar::zero() };
            assert_eq!(*x, expected);
        }
    }
}
