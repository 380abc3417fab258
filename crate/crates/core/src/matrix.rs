//! Dense exact matrices and the representation matrices built on them.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clifford::{generator_word, lambda_vector, word_apply, CliffordElem};
use crate::error::{Error, Result};
use crate::scalar::{Rat, Scalar};
use crate::spinor::{chirality, real_expand, real_form_basis, RealForm, Spinor};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(rows: usize, cols: usize, mut f: F) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: &[Vec<Scalar>]) -> Result<Matrix> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        Ok(Matrix::from_fn(r, c, |i, j| cols[j][i].clone()))
    }

    pub fn from_ints<const R: usize, const C: usize>(entries: [[i64; C]; R]) -> Matrix {
        Matrix::from_fn(R, C, |r, c| Scalar::from_int(entries[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.cols + c] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn pow(&self, e: u32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn kron(&self, other: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * other.rows, self.cols * other.cols, |r, c| {
            let a = self.get(r / other.rows, c / other.cols);
            if a.is_zero() {
                Scalar::zero()
            } else {
                a * other.get(r % other.rows, c % other.cols)
            }
        })
    }

    pub fn conj(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(Scalar::conj).collect(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r..self.cols).all(|c| *self.get(r, c) == -self.get(c, r)))
    }

    /// All entries rational; returns them row-major.
    pub fn rational_entries(&self) -> Option<Vec<Rat>> {
        self.data.iter().map(Scalar::as_rat).collect()
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.as_rat().is_some())
    }

    /// Reduced row echelon form and pivot columns, pivoting on the first
    /// nonzero entry of each column.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let delta = &factor * m.get(row, c);
                    if !delta.is_zero() {
                        let v = m.get(r, c) - &delta;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank and a basis of the right kernel.
    pub fn nullspace(&self) -> (usize, Vec<Vec<Scalar>>) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f);
            }
            basis.push(v);
        }
        (pivots.len(), basis)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let augmented = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (reduced, pivots) = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| reduced.get(r, c + n).clone()))
    }

    pub fn to_latex(&self) -> String {
        let spec = "c".repeat(self.cols);
        let mut out = format!("\\left(\\begin{{array}}{{{spec}}}\n");
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(Scalar::to_latex).collect();
            out.push_str(&cells.join(" & "));
            if r + 1 < self.rows {
                out.push_str(" \\\\");
            }
            out.push('\n');
        }
        out.push_str("\\end{array}\\right)");
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join("  "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{self}", self.rows, self.cols)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Scalar>>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows).map(|r| self.row(r).to_vec()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let m = Matrix::from_rows(raw.entries).map_err(serde::de::Error::custom)?;
        if m.rows != raw.rows || (raw.rows > 0 && m.cols != raw.cols) {
            return Err(serde::de::Error::custom("matrix extents do not match entries"));
        }
        Ok(Matrix {
            rows: raw.rows,
            cols: raw.cols,
            data: m.data,
        })
    }
}

/// Linear subspace of `F^dim` held as an RREF row basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Subspace> {
        if vectors.iter().any(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch("vector length differs from ambient dimension".into()));
        }
        if vectors.is_empty() {
            return Ok(Subspace {
                dim: ambient,
                basis: Vec::new(),
            });
        }
        let (r, pivots) = Matrix::from_rows(vectors.to_vec())?.rref();
        Ok(Subspace {
            dim: ambient,
            basis: (0..pivots.len()).map(|i| r.row(i).to_vec()).collect(),
        })
    }

    pub fn kernel(m: &Matrix) -> Result<Subspace> {
        let (_, basis) = m.nullspace();
        Subspace::span(m.cols(), &basis)
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Matrix::from_rows(rows).map(|m| m.rank()).unwrap_or(usize::MAX) == self.basis.len()
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.dim, &all)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.basis.is_empty() || other.basis.is_empty() {
            return Subspace::span(self.dim, &[]);
        }
        let a = self.basis.len();
        let b = other.basis.len();
        let system = Matrix::from_fn(self.dim, a + b, |r, c| {
            if c < a {
                self.basis[c][r].clone()
            } else {
                -&other.basis[c - a][r]
            }
        });
        let (_, kernel) = system.nullspace();
        let vectors: Vec<Vec<Scalar>> = kernel
            .iter()
            .map(|coeffs| {
                (0..self.dim)
                    .map(|r| {
                        let mut acc = Scalar::zero();
                        for (c, x) in coeffs[..a].iter().enumerate() {
                            if !x.is_zero() {
                                acc += &(x * &self.basis[c][r]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Subspace::span(self.dim, &vectors)
    }

    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let vectors: Result<Vec<_>> = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &vectors?)
    }
}

/// Matrix of `κ_n(e_{w_1} ⋯ e_{w_m})`; column `a` is the image of `u_a`.
pub fn kappa_matrix(n: usize, word: &[usize]) -> Result<Matrix> {
    let k = (n / 2) as u32;
    let size = 1usize << k;
    let mut m = Matrix::zeros(size, size);
    for a in 0..size as u64 {
        let image = word_apply(n, word, &Spinor::basis(k, a)?)?;
        for (b, c) in image.terms() {
            m.set(b as usize, a as usize, c.clone());
        }
    }
    Ok(m)
}

/// Matrix of `κ_n(x)` for an algebra element.
pub fn kappa_of(x: &CliffordElem) -> Result<Matrix> {
    let k = (x.dim() / 2) as u32;
    let size = 1usize << k;
    let mut m = Matrix::zeros(size, size);
    for a in 0..size as u64 {
        for (b, c) in x.apply(&Spinor::basis(k, a)?)?.terms() {
            m.set(b as usize, a as usize, c.clone());
        }
    }
    Ok(m)
}

/// Indices of `Δ_n^±` in increasing order.
pub fn chirality_indices(k: u32, sign: i8) -> Vec<u64> {
    (0..1u64 << k).filter(|&a| chirality(a) == sign).collect()
}

/// Matrix of `κ_n^±` of an even word in the index-filtered chirality basis.
pub fn kappa_pm_matrix(n: usize, word: &[usize], sign: i8) -> Result<Matrix> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if word.len() % 2 == 1 {
        return Err(Error::OddWord(word.len()));
    }
    let k = (n / 2) as u32;
    let indices = chirality_indices(k, sign);
    let position: BTreeMap<u64, usize> = indices.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let mut m = Matrix::zeros(indices.len(), indices.len());
    for (col, &a) in indices.iter().enumerate() {
        let image = word_apply(n, word, &Spinor::basis(k, a)?)?;
        for (b, c) in image.terms() {
            m.set(position[&b], col, c.clone());
        }
    }
    Ok(m)
}

/// Matrix of a Clifford element between two real bases; column `c` holds
/// the real coordinates of `x · src[c]` in `dst`.
pub fn real_matrix_of(x: &CliffordElem, src: &[Spinor], dst: &[Spinor]) -> Result<Matrix> {
    let mut cols = Vec::with_capacity(src.len());
    for b in src {
        let image = x.apply(b)?;
        let coeffs = real_expand(&image, dst)?;
        for c in &coeffs {
            if !c.is_real() {
                return Err(Error::NotReal(c.to_string()));
            }
        }
        cols.push(coeffs);
    }
    Matrix::from_columns(&cols)
}

pub fn real_word_matrix(n: usize, word: &[usize], src: &[Spinor], dst: &[Spinor]) -> Result<Matrix> {
    real_matrix_of(&CliffordElem::monomial(n, word)?, src, dst)
}

/// `real_word_matrix` on the real forms returned by `real_form_basis`.
pub fn real_rep_matrix(r: usize, word: &[usize], from: RealForm, to: RealForm) -> Result<Matrix> {
    let src = real_form_basis(r, from)?;
    let dst = real_form_basis(r, to)?;
    real_word_matrix(r, word, &src, &dst)
}

/// Matrix of `λ_n(g)`; column `i` is `λ(g) e_i`.
pub fn lambda_matrix_of(n: usize, word: &[CliffordElem]) -> Result<Matrix> {
    let mut cols = Vec::with_capacity(n);
    for i in 1..=n {
        let image = lambda_vector(word, &CliffordElem::generator(n, i)?)?;
        cols.push(image.vector_coords()?);
    }
    Matrix::from_columns(&cols)
}

pub fn lambda_matrix(n: usize, word: &[usize]) -> Result<Matrix> {
    lambda_matrix_of(n, &generator_word(n, word)?)
}

/// Coefficients `c_ij` (`i < j`, 1-based) with `M = Σ c_ij E_ij`, where
/// `E_ij e_i = e_j`, i.e. `c_ij = M[j][i]`.
pub fn e_basis_decompose(m: &Matrix) -> Result<BTreeMap<(usize, usize), Scalar>> {
    if !m.is_antisymmetric() {
        return Err(Error::NotAntisymmetric);
    }
    let mut out = BTreeMap::new();
    for i in 0..m.cols() {
        for j in i + 1..m.rows() {
            let c = m.get(j, i);
            if !c.is_zero() {
                out.insert((i + 1, j + 1), c.clone());
            }
        }
    }
    Ok(out)
}

pub fn e_basis_compose(n: usize, coeffs: &BTreeMap<(usize, usize), Scalar>) -> Result<Matrix> {
    let mut m = Matrix::zeros(n, n);
    for (&(i, j), c) in coeffs {
        if i == 0 || i >= j || j > n {
            return Err(Error::GeneratorOutOfRange { p: j, n });
        }
        m.set(j - 1, i - 1, m.get(j - 1, i - 1) + c);
        m.set(i - 1, j - 1, m.get(i - 1, j - 1) - c);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Angle;

    #[test]
    fn elimination_basics() {
        let id = Matrix::identity(4);
        let (rank, kernel) = id.nullspace();
        assert_eq!((rank, kernel.len()), (4, 0));
        let m = Matrix::from_ints([[1, 2, 3], [2, 4, 6], [1, 0, 1]]);
        let (rank, kernel) = m.nullspace();
        assert_eq!(rank, 2);
        assert_eq!(kernel.len(), 1);
        assert!(m.mul_vec(&kernel[0]).unwrap().iter().all(Scalar::is_zero));
        assert!(matches!(m.inverse(), Err(Error::Singular)));
        let g = Matrix::from_ints([[2, 1], [1, 1]]);
        assert_eq!(g.mul(&g.inverse().unwrap()).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn kappa_six_displays() {
        let e1 = kappa_matrix(6, &[1]).unwrap();
        let block = Matrix::from_fn(2, 2, |r, c| if r != c { Scalar::i() } else { Scalar::zero() });
        assert_eq!(e1, Matrix::identity(4).kron(&block));
        let e2 = kappa_matrix(6, &[2]).unwrap();
        assert_eq!(*e2.get(2, 3), Scalar::from_int(-1));
        let e12 = kappa_matrix(6, &[1, 2]).unwrap();
        let diag = Matrix::from_fn(8, 8, |r, c| {
            if r != c {
                Scalar::zero()
            } else if r % 2 == 0 {
                Scalar::i()
            } else {
                -Scalar::i()
            }
        });
        assert_eq!(e12, diag);
    }

    #[test]
    fn lambda_six() {
        let m = lambda_matrix(6, &[1, 2]).unwrap();
        let expected = Matrix::from_fn(6, 6, |r, c| {
            if r != c {
                Scalar::zero()
            } else if r < 2 {
                Scalar::from_int(-1)
            } else {
                Scalar::one()
            }
        });
        assert_eq!(m, expected);
        assert_eq!(lambda_matrix(8, &[1, 2, 1, 2]).unwrap(), Matrix::identity(8));
        assert!(lambda_matrix(6, &[1]).is_err());
    }

    #[test]
    fn lambda_quarter_turn() {
        let word = crate::clifford::rotation_word(6, Angle::new(3), 1, 2).unwrap();
        let m = lambda_matrix_of(6, &word).unwrap();
        assert_eq!(*m.get(0, 0), Scalar::zero());
        assert_eq!(*m.get(1, 0), Scalar::one());
        assert_eq!(*m.get(0, 1), Scalar::from_int(-1));
    }

    #[test]
    fn decompose_round_trip() {
        assert!(e_basis_decompose(&Matrix::zeros(3, 3)).unwrap().is_empty());
        let mut coeffs = BTreeMap::new();
        coeffs.insert((1, 2), Scalar::from_int(3));
        coeffs.insert((2, 4), Scalar::from_rat(crate::scalar::rat(-1, 2)));
        let m = e_basis_compose(4, &coeffs).unwrap();
        assert_eq!(*m.get(1, 0), Scalar::from_int(3));
        assert_eq!(e_basis_decompose(&m).unwrap(), coeffs);
        assert!(matches!(e_basis_decompose(&Matrix::identity(2)), Err(Error::NotAntisymmetric)));
    }

    #[test]
    fn subspace_intersection() {
        let s = |v: [i64; 3]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
        let a = Subspace::span(3, &[s([1, 0, 0]), s([0, 1, 0])]).unwrap();
        let b = Subspace::span(3, &[s([0, 1, 0]), s([0, 0, 1])]).unwrap();
        let c = a.intersect(&b).unwrap();
        assert_eq!(c.dimension(), 1);
        assert!(c.contains(&s([0, 5, 0])));
        assert!(!c.contains(&s([1, 0, 0])));
        assert_eq!(a.sum(&b).unwrap().dimension(), 3);
    }

    #[test]
    fn json_round_trip() {
        let m = Matrix::from_fn(2, 3, |r, c| Scalar::from_rat(crate::scalar::rat(r as i64 - 1, c as i64 + 1)));
        let back: Matrix = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }
}
