//! Triality on `𝔰𝔭𝔦𝔫(8)` and `Spin(8)`.
//!
//! Bivectors are coordinate vectors over the 28 pairs `e_ie_j`, `i < j`, in
//! lexicographic order. `σ*` and `τ*` are constructed from the half-spin
//! representations: `λ₈* ∘ σ* = κ₈*⁻` and `λ₈* ∘ τ* = κ₈*⁺`, with
//! `λ₈*(e_ie_j) = 2E_ij`.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::json;

use crate::clifford::{exp_pair_sum, CliffordElem};
use crate::error::{Error, Result};
use crate::golden;
use crate::matrix::{e_basis_decompose, real_matrix_of, Matrix, Subspace};
use crate::report::Check;
use crate::scalar::{rat, Angle, Scalar};
use crate::spinor::Spinor;

pub const DIM: usize = 28;

/// Lexicographic pairs `(i, j)`, `1 ≤ i < j ≤ n`.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

pub fn pair_index(n: usize, i: usize, j: usize) -> Result<usize> {
    if i == 0 || i >= j || j > n {
        return Err(Error::GeneratorOutOfRange { p: j, n });
    }
    Ok((i - 1) * (2 * n - i) / 2 + (j - i - 1))
}

/// `Σ c_ij e_ie_j` as a map from pairs to coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivectorCombo {
    pub n: usize,
    pub coeffs: BTreeMap<(usize, usize), Scalar>,
}

impl BivectorCombo {
    pub fn new(n: usize) -> BivectorCombo {
        BivectorCombo {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_signed(n: usize, text: &str) -> Result<BivectorCombo> {
        let mut b = BivectorCombo::new(n);
        for (s, i, j) in golden::parse_signed_pairs(text)? {
            b.add(i, j, Scalar::from_int(s as i64))?;
        }
        Ok(b)
    }

    pub fn add(&mut self, i: usize, j: usize, c: Scalar) -> Result<()> {
        let (i, j, c) = if i < j { (i, j, c) } else { (j, i, -c) };
        pair_index(self.n, i, j)?;
        let slot = self.coeffs.entry((i, j)).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
        Ok(())
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.n * (self.n - 1) / 2];
        for (&(i, j), c) in &self.coeffs {
            v[pair_index(self.n, i, j).expect("validated")] = c.clone();
        }
        v
    }

    pub fn from_coords(n: usize, coords: &[Scalar]) -> BivectorCombo {
        let mut b = BivectorCombo::new(n);
        for ((i, j), c) in pairs(n).into_iter().zip(coords) {
            if !c.is_zero() {
                b.coeffs.insert((i, j), c.clone());
            }
        }
        b
    }

    pub fn to_clifford(&self) -> CliffordElem {
        CliffordElem::from_terms(
            self.n,
            self.coeffs
                .iter()
                .map(|(&(i, j), c)| ((1u32 << (i - 1)) | (1u32 << (j - 1)), c.clone())),
        )
    }

    pub fn from_clifford(x: &CliffordElem) -> Result<BivectorCombo> {
        if !x.is_homogeneous(2) {
            return Err(Error::WrongGrade(2));
        }
        let mut b = BivectorCombo::new(x.dim());
        for (m, c) in x.terms() {
            let i = m.trailing_zeros() as usize + 1;
            let j = (31 - m.leading_zeros()) as usize + 1;
            b.coeffs.insert((i, j), c.clone());
        }
        Ok(b)
    }

    /// `"+12-34"` style text when every coefficient is ±1.
    pub fn to_signed(&self) -> Option<String> {
        let mut out = String::new();
        for (&(i, j), c) in &self.coeffs {
            if c.is_one() {
                out.push('+');
            } else if (-c).is_one() {
                out.push('-');
            } else {
                return None;
            }
            out.push_str(&format!("{i}{j}"));
        }
        Some(out)
    }
}

pub fn signed_map(text: &str) -> Result<BTreeMap<(usize, usize), i8>> {
    let mut out = BTreeMap::new();
    for (s, i, j) in golden::parse_signed_pairs(text)? {
        let (i, j, s) = if i < j { (i, j, s) } else { (j, i, -s) };
        out.insert((i, j), s);
    }
    Ok(out)
}

fn signed_of(b: &BivectorCombo) -> Option<BTreeMap<(usize, usize), i8>> {
    b.coeffs
        .iter()
        .map(|(&p, c)| {
            if c.is_one() {
                Some((p, 1))
            } else if (-c).is_one() {
                Some((p, -1))
            } else {
                None
            }
        })
        .collect()
}

/// Real bases `β⁺` of `Δ̃₈⁺` and `β⁻ = e₁·β⁺` of `Δ̃₈⁻` used for triality.
pub fn triality_bases() -> (Vec<Spinor>, Vec<Spinor>) {
    let h = Scalar::sqrt2().scale(&rat(1, 2));
    let plus: Vec<Spinor> = golden::TRIALITY_PLUS_BASIS
        .iter()
        .map(|terms| {
            Spinor::from_terms(4, terms.iter().map(|&(a, e)| (a, h.mul_i_pow(e as i64)))).expect("4-bit indices")
        })
        .collect();
    let minus = plus
        .iter()
        .map(|v| crate::clifford::clifford_apply(8, 1, v).expect("width 4"))
        .collect();
    (plus, minus)
}

/// 8×8 real matrix of `κ₈*^±(x)` for an even element `x`.
pub fn kappa8_star(sign: i8, x: &CliffordElem) -> Result<Matrix> {
    let (plus, minus) = triality_bases();
    let basis = if sign > 0 { plus } else { minus };
    real_matrix_of(x, &basis, &basis)
}

pub fn kappa8_star_pair(sign: i8, i: usize, j: usize) -> Result<Matrix> {
    kappa8_star(sign, &CliffordElem::bivector(8, i, j)?)
}

/// `λ₈*` of a bivector: `Σ 2 c_ij E_ij`.
pub fn lambda_star(b: &BivectorCombo) -> Result<Matrix> {
    let doubled: BTreeMap<(usize, usize), Scalar> =
        b.coeffs.iter().map(|(p, c)| (*p, c.scale(&rat(2, 1)))).collect();
    crate::matrix::e_basis_compose(b.n, &doubled)
}

/// Inverse of `λ₈*` on antisymmetric matrices.
pub fn lambda_star_inverse(m: &Matrix) -> Result<BivectorCombo> {
    let mut b = BivectorCombo::new(m.rows());
    for ((i, j), c) in e_basis_decompose(m)? {
        b.coeffs.insert((i, j), c.scale(&rat(1, 2)));
    }
    Ok(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OuterName {
    Sigma,
    Tau,
    Composite,
}

/// Linear map of `𝔰𝔭𝔦𝔫(8)`; column `j` is the image of the `j`-th pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OuterMap {
    pub name: OuterName,
    pub matrix: Matrix,
}

impl OuterMap {
    pub fn apply(&self, b: &BivectorCombo) -> Result<BivectorCombo> {
        Ok(BivectorCombo::from_coords(8, &self.matrix.mul_vec(&b.coords())?))
    }

    pub fn image_of_pair(&self, i: usize, j: usize) -> Result<BivectorCombo> {
        let col = self.matrix.column(pair_index(8, i, j)?);
        Ok(BivectorCombo::from_coords(8, &col))
    }

    /// `self ∘ other`.
    pub fn then_after(&self, other: &OuterMap) -> Result<OuterMap> {
        Ok(OuterMap {
            name: OuterName::Composite,
            matrix: self.matrix.mul(&other.matrix)?,
        })
    }

    pub fn pow(&self, e: u32) -> Result<OuterMap> {
        Ok(OuterMap {
            name: if e == 1 { self.name } else { OuterName::Composite },
            matrix: self.matrix.pow(e)?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Matrix::identity(DIM)
    }

    /// Entries times two, which are integers for σ* and τ*.
    pub fn doubled_entries(&self) -> Option<Vec<Vec<i64>>> {
        (0..DIM)
            .map(|r| {
                (0..DIM)
                    .map(|c| {
                        let q = self.matrix.get(r, c).as_rat()? * rat(2, 1);
                        if q.is_integer() {
                            i64::try_from(q.to_integer()).ok()
                        } else {
                            None
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

fn build_outer(sign: i8, name: OuterName) -> Result<OuterMap> {
    let mut cols = Vec::with_capacity(DIM);
    for (i, j) in pairs(8) {
        cols.push(lambda_star_inverse(&kappa8_star_pair(sign, i, j)?)?.coords());
    }
    Ok(OuterMap {
        name,
        matrix: Matrix::from_columns(&cols)?,
    })
}

pub fn build_sigma_star() -> Result<OuterMap> {
    build_outer(-1, OuterName::Sigma)
}

pub fn build_tau_star() -> Result<OuterMap> {
    build_outer(1, OuterName::Tau)
}

/// The fixed copy `span{e_ie_j : 2 ≤ i < j ≤ 8}` of `𝔰𝔭𝔦𝔫(7)`.
pub fn spin7_prime() -> Subspace {
    let vectors: Vec<Vec<Scalar>> = pairs(8)
        .into_iter()
        .filter(|&(i, _)| i >= 2)
        .map(|(i, j)| unit(pair_index(8, i, j).expect("valid")))
        .collect();
    Subspace::span(DIM, &vectors).expect("28-vectors")
}

fn unit(k: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); DIM];
    v[k] = Scalar::one();
    v
}

fn supported_eigenvalue(lambda: &Scalar) -> bool {
    let one = Scalar::one();
    *lambda == one || *lambda == -&one || *lambda == Scalar::omega() || *lambda == Scalar::omega().conj()
}

/// Kernel of `map − λ·Id` for `λ ∈ {1, −1, e^{±2πi/3}}`.
pub fn eigenspace(map: &OuterMap, lambda: &Scalar) -> Result<Subspace> {
    if !supported_eigenvalue(lambda) {
        return Err(Error::UnsupportedEigenvalue(lambda.to_string()));
    }
    Subspace::kernel(&map.matrix.sub(&Matrix::identity(DIM).scale(lambda))?)
}

pub fn fixed_space(map: &OuterMap) -> Result<Subspace> {
    eigenspace(map, &Scalar::one())
}

/// Parses an `e^{±2πi/3}` eigenvector entry.
pub fn complex_eigenvector(entry: &(&str, i8, (usize, usize))) -> Result<BivectorCombo> {
    let (real, sign, (i, j)) = *entry;
    let mut b = BivectorCombo::from_signed(8, real)?;
    b.add(i, j, Scalar::sqrt3().mul_i_pow(1).scale(&rat(sign as i64, 1)))?;
    Ok(b)
}

pub fn bracket(x: &BivectorCombo, y: &BivectorCombo) -> Result<BivectorCombo> {
    BivectorCombo::from_clifford(&x.to_clifford().commutator(&y.to_clifford())?)
}

/// True when `[a, b] ∈ target` for all basis vectors `a ∈ left`, `b ∈ right`.
pub fn brackets_within(left: &Subspace, right: &Subspace, target: &Subspace) -> Result<bool> {
    for a in left.basis() {
        let a = BivectorCombo::from_coords(8, a);
        for b in right.basis() {
            let c = bracket(&a, &BivectorCombo::from_coords(8, b))?;
            if !target.contains(&c.coords()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn span_of_brackets(left: &Subspace, right: &Subspace) -> Result<Subspace> {
    let mut vectors = Vec::new();
    for a in left.basis() {
        let a = BivectorCombo::from_coords(8, a);
        for b in right.basis() {
            vectors.push(bracket(&a, &BivectorCombo::from_coords(8, b))?.coords());
        }
    }
    Subspace::span(DIM, &vectors)
}

pub fn g2_generators() -> Result<Vec<BivectorCombo>> {
    golden::G2_GENERATORS.iter().map(|g| BivectorCombo::from_signed(8, g)).collect()
}

pub fn g2_span() -> Result<Subspace> {
    let coords: Vec<Vec<Scalar>> = g2_generators()?.iter().map(BivectorCombo::coords).collect();
    Subspace::span(DIM, &coords)
}

/// Sum of `α_k` times the real matrix of the k-th generator on `β^±`.
pub fn g2_action_matrix(alpha: &[Scalar], sign: i8) -> Result<Matrix> {
    let gens = g2_generators()?;
    if alpha.len() != gens.len() {
        return Err(Error::DimensionMismatch(format!("expected 14 coefficients, got {}", alpha.len())));
    }
    let mut acc = CliffordElem::zero(8);
    for (a, g) in alpha.iter().zip(&gens) {
        acc = acc.add(&g.to_clifford().scale(a))?;
    }
    kappa8_star(sign, &acc)
}

/// The printed 8×8 display evaluated at `α`, in its own row/column layout.
pub fn g2_display_matrix(alpha: &[Scalar]) -> Result<Matrix> {
    if alpha.len() != 14 {
        return Err(Error::DimensionMismatch(format!("expected 14 coefficients, got {}", alpha.len())));
    }
    Ok(Matrix::from_fn(8, 8, |r, c| {
        let mut acc = Scalar::zero();
        for &k in golden::G2_ACTION_DISPLAY[r][c] {
            let term = alpha[k.unsigned_abs() as usize - 1].scale(&rat(2 * k.signum() as i64, 1));
            acc += &term;
        }
        acc
    }))
}

/// `κ₈⁻(exp(t(e₂e₃ + e₆e₇)))` on `β⁻`, given `2t`.
pub fn g2_one_parameter(double_angle: Angle) -> Result<Matrix> {
    kappa8_star(-1, &exp_pair_sum(8, double_angle, (2, 3), (6, 7))?)
}

/// Expected block-rotation matrix for the same element.
pub fn block_rotation(double_angle: Angle) -> Matrix {
    let (c, s) = double_angle.cos_sin();
    let mut m = Matrix::identity(8);
    for (a, b) in golden::G2_ROTATION_BLOCKS {
        m.set(a, a, c.clone());
        m.set(a, b, -&s);
        m.set(b, a, s.clone());
        m.set(b, b, c.clone());
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Automorphism {
    Sigma,
    Tau,
}

/// Group-level image of `e_ie_j = exp((π/2) e_ie_j)`: with
/// `σ*(e_ie_j) = ½ Σ s_ab e_ae_b`, this is `Π (cos π/4 + s_ab sin π/4 e_ae_b)`.
pub fn group_automorphism(which: Automorphism, i: usize, j: usize) -> Result<(Vec<(i8, (usize, usize))>, CliffordElem)> {
    let map = match which {
        Automorphism::Sigma => build_sigma_star()?,
        Automorphism::Tau => build_tau_star()?,
    };
    group_image(&map, i, j)
}

pub fn group_image(map: &OuterMap, i: usize, j: usize) -> Result<(Vec<(i8, (usize, usize))>, CliffordElem)> {
    let image = map.image_of_pair(i, j)?;
    let half = Scalar::from_rat(rat(1, 2));
    let mut signs = Vec::new();
    let mut acc = CliffordElem::one(8);
    let (c, s) = Angle::new(3).cos_sin();
    for (&(a, b), coeff) in &image.coeffs {
        let sign = if *coeff == half {
            1
        } else if *coeff == -&half {
            -1
        } else {
            return Err(Error::NotSignedBasis(format!("coefficient {coeff} on e{a}e{b}")));
        };
        signs.push((sign, (a, b)));
        let factor = CliffordElem::scalar(8, c.clone())
            .add(&CliffordElem::bivector(8, a, b)?.scale(&s.scale(&rat(sign as i64, 1))))?;
        acc = acc.mul(&factor)?;
    }
    Ok((signs, acc))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterImages {
    pub minus_one: CliffordElem,
    pub vol: CliffordElem,
    pub minus_vol: CliffordElem,
}

/// `g(−1) = g(e₁e₂)²`, `g(vol₈) = g(e₁e₂)g(e₃e₄)g(e₅e₆)g(e₇e₈)`,
/// `g(−vol₈) = g(−1)g(vol₈)`.
pub fn center_images(which: Automorphism) -> Result<CenterImages> {
    let map = match which {
        Automorphism::Sigma => build_sigma_star()?,
        Automorphism::Tau => build_tau_star()?,
    };
    let g = |i, j| group_image(&map, i, j).map(|x| x.1);
    let e12 = g(1, 2)?;
    let minus_one = e12.mul(&e12)?;
    let vol = e12.mul(&g(3, 4)?)?.mul(&g(5, 6)?)?.mul(&g(7, 8)?)?;
    let minus_vol = minus_one.mul(&vol)?;
    Ok(CenterImages {
        minus_one,
        vol,
        minus_vol,
    })
}

/// The S₃ relations and the permutation of the two half-spin representations.
pub fn s3_relations(sigma: &OuterMap, tau: &OuterMap) -> Result<Vec<Check>> {
    let id = Matrix::identity(DIM);
    let s2 = sigma.pow(2)?;
    let ts = tau.then_after(sigma)?;
    let ts2 = tau.then_after(&s2)?;
    let st = sigma.then_after(tau)?;
    let s2t = s2.then_after(tau)?;
    let mut checks = vec![
        Check::new("tau*^2 = Id", tau.pow(2)?.matrix == id, json!(null)),
        Check::new("sigma*^3 = Id", sigma.pow(3)?.matrix == id, json!(null)),
        Check::new("sigma* != Id", sigma.matrix != id, json!(null)),
        Check::new("sigma* tau* = tau* sigma*^2", st.matrix == ts2.matrix, json!(null)),
        Check::new("sigma*^2 tau* = tau* sigma*", s2t.matrix == ts.matrix, json!(null)),
        Check::new("(tau* sigma*)^2 = Id", ts.pow(2)?.matrix == id, json!(null)),
        Check::new("(tau* sigma*^2)^2 = Id", ts2.pow(2)?.matrix == id, json!(null)),
    ];
    let mut minus_ok = Vec::new();
    let mut plus_ok = Vec::new();
    for (i, j) in pairs(8) {
        let image = ts.image_of_pair(i, j)?.to_clifford();
        let bare = CliffordElem::bivector(8, i, j)?;
        if kappa8_star(-1, &image)? != kappa8_star(1, &bare)? {
            minus_ok.push((i, j));
        }
        if kappa8_star(1, &image)? != kappa8_star(-1, &bare)? {
            plus_ok.push((i, j));
        }
    }
    checks.push(Check::new(
        "kappa8*- o tau* sigma* = kappa8*+",
        minus_ok.is_empty(),
        json!({ "mismatched_generators": minus_ok }),
    ));
    checks.push(Check::new(
        "kappa8*+ o tau* sigma* = kappa8*-",
        plus_ok.is_empty(),
        json!({ "mismatched_generators": plus_ok }),
    ));
    Ok(checks)
}

/// Compares the constructed map with a printed `2×` array; returns the
/// mismatching `(row, col)` cells.
pub fn compare_printed(map: &OuterMap, printed: &[[i8; 28]; 28]) -> Vec<(usize, usize)> {
    let doubled = map.doubled_entries();
    let mut out = Vec::new();
    for r in 0..DIM {
        for c in 0..DIM {
            let got = doubled.as_ref().map(|d| d[r][c]);
            if got != Some(printed[r][c] as i64) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Generator-by-generator comparison of `λ₈*(map(e_ie_j))` and `κ₈*^±(e_ie_j)`
/// with the printed lists. Returns the indices where the `E` list and the
/// bivector list disagree with the construction.
pub fn compare_lists(map: &OuterMap, sign: i8, e_list: &[&str; 28], lambda_list: &[&str; 28]) -> Result<(Vec<usize>, Vec<usize>, Vec<usize>)> {
    let mut e_bad = Vec::new();
    let mut lambda_bad = Vec::new();
    let mut identity_bad = Vec::new();
    for (k, (i, j)) in pairs(8).into_iter().enumerate() {
        let image = map.image_of_pair(i, j)?;
        let kappa = kappa8_star_pair(sign, i, j)?;
        if lambda_star(&image)? != kappa {
            identity_bad.push(k);
        }
        let e_form = BivectorCombo::from_coords(8, &kappa_coords(&kappa)?);
        if signed_of(&e_form) != Some(signed_map(e_list[k])?) {
            e_bad.push(k);
        }
        let doubled = BivectorCombo::from_coords(8, &image.coords().iter().map(|c| c.scale(&rat(2, 1))).collect::<Vec<_>>());
        if signed_of(&doubled) != Some(signed_map(lambda_list[k])?) {
            lambda_bad.push(k);
        }
    }
    Ok((identity_bad, e_bad, lambda_bad))
}

/// `E_ij` coefficients of an antisymmetric 8×8 matrix as pair coordinates.
pub fn kappa_coords(m: &Matrix) -> Result<Vec<Scalar>> {
    let mut v = vec![Scalar::zero(); DIM];
    for ((i, j), c) in e_basis_decompose(m)? {
        v[pair_index(8, i, j)?] = c;
    }
    Ok(v)
}

/// Outcome of the symmetric-pair test for `(𝔨, 𝔤₂)` with `𝔨 = Fix(τ*)`.
#[derive(Debug, Clone, Serialize)]
pub struct SymmetricPair {
    pub complement_dim: usize,
    pub reductive: bool,
    pub bracket_in_g2: bool,
    pub bracket_span_dim: usize,
    pub literal_complement_dim: usize,
}

/// `𝔪 = Fix(τ*) ∩ ker(σ*² + σ* + 1)` is the σ*-stable complement of `𝔤₂`
/// in `Fix(τ*)`. The pair is symmetric iff `[𝔤₂, 𝔪] ⊆ 𝔪` and `[𝔪, 𝔪] ⊆ 𝔤₂`.
pub fn symmetric_pair(sigma: &OuterMap, tau: &OuterMap) -> Result<SymmetricPair> {
    let g2 = fixed_space(sigma)?;
    let k = fixed_space(tau)?;
    let s = &sigma.matrix;
    let cubic_factor = s.mul(s)?.add(s)?.add(&Matrix::identity(DIM))?;
    let m = k.intersect(&Subspace::kernel(&cubic_factor)?)?;
    let reductive = brackets_within(&g2, &m, &m)?;
    let mm = span_of_brackets(&m, &m)?;
    let literal = eigenspace(tau, &Scalar::from_int(-1))?.intersect(&spin7_prime())?;
    Ok(SymmetricPair {
        complement_dim: m.dimension(),
        reductive,
        bracket_in_g2: g2.contains_all(&mm),
        bracket_span_dim: mm.dimension(),
        literal_complement_dim: literal.dimension(),
    })
}

/// The checks on `𝔤₂ ⊂ 𝔰𝔭𝔦𝔫(7)`, excluding the action display.
pub fn g2_structure(sigma: &OuterMap, tau: &OuterMap) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    let gens = g2_generators()?;
    let g2 = g2_span()?;
    let fix_sigma = fixed_space(sigma)?;
    checks.push(Check::new(
        "g2 generators span Fix(sigma*)",
        g2.dimension() == 14 && fix_sigma.dimension() == 14 && fix_sigma.contains_all(&g2),
        json!({ "span_dim": g2.dimension(), "fix_dim": fix_sigma.dimension() }),
    ));

    let h = Scalar::sqrt2().scale(&rat(1, 2));
    let positive = Spinor::from_terms(4, [(0, h.clone()), (15, -&h)])?;
    let negative = Spinor::from_terms(4, [(1, h.mul_i_pow(1)), (14, -h.mul_i_pow(1))])?;
    for (name, psi) in [("(u0 - u15)/sqrt2", &positive), ("i(u1 - u14)/sqrt2", &negative)] {
        let bad: Vec<usize> = gens
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.to_clifford().apply(psi).map(|v| v.is_empty()).unwrap_or(false))
            .map(|(k, _)| k + 1)
            .collect();
        checks.push(Check::new(
            format!("g2 annihilates {name}"),
            bad.is_empty(),
            json!({ "failing_generators": bad }),
        ));
    }

    let fix_tau = fixed_space(tau)?;
    let ts = tau.then_after(sigma)?;
    let ts2 = tau.then_after(&sigma.pow(2)?)?;
    let fix_ts = fixed_space(&ts)?;
    let fix_ts2 = fixed_space(&ts2)?;
    let spin7 = spin7_prime();
    let same = |a: &Subspace, b: &Subspace| a.dimension() == b.dimension() && a.contains_all(b);

    let ts_on_e1: Vec<usize> = (2..=8)
        .filter(|&k| {
            ts.image_of_pair(1, k)
                .map(|img| img.coeffs.len() != 1 || img.coeffs.get(&(1, k)) != Some(&Scalar::from_int(-1)))
                .unwrap_or(true)
        })
        .collect();
    checks.push(Check::new(
        "tau* sigma* (e1 ek) = -e1 ek",
        ts_on_e1.is_empty(),
        json!({ "failing_k": ts_on_e1 }),
    ));
    checks.push(Check::new(
        "Fix(tau* sigma*) = span{ei ej : 2 <= i < j <= 8}",
        same(&fix_ts, &spin7),
        json!({ "dim": fix_ts.dimension() }),
    ));
    let g2_from_spin7 = spin7.intersect(&fix_tau)?;
    checks.push(Check::new(
        "g2 = spin(7)' ∩ Fix(tau*)",
        same(&g2_from_spin7, &g2),
        json!({ "dim": g2_from_spin7.dimension() }),
    ));
    let a = fix_tau.intersect(&fix_ts2)?;
    let b = fix_tau.intersect(&fix_ts)?;
    checks.push(Check::new(
        "g2 = Fix(tau*) ∩ Fix(tau* sigma*^2)",
        same(&a, &g2),
        json!({ "dim": a.dimension() }),
    ));
    checks.push(Check::new(
        "g2 = Fix(tau*) ∩ Fix(tau* sigma*)",
        same(&b, &g2),
        json!({ "dim": b.dimension() }),
    ));
    let conjugated = fix_ts.image(&sigma.pow(2)?.matrix)?;
    checks.push(Check::new(
        "sigma*^2 (Fix(tau* sigma*)) = Fix(tau*)",
        same(&conjugated, &fix_tau),
        json!({ "dim": conjugated.dimension() }),
    ));

    let closed = brackets_within(&g2, &g2, &g2)?;
    checks.push(Check::new("[g2, g2] ⊆ g2", closed, json!(null)));
    let x = BivectorCombo::from_signed(8, "+23+67")?;
    let y = BivectorCombo::from_signed(8, "+24-68")?;
    let xy = bracket(&x, &y)?;
    checks.push(Check::new(
        "[e2e3 + e6e7, e2e4 - e6e8] ∈ g2",
        g2.contains(&xy.coords()),
        json!({ "bracket": xy.to_signed() }),
    ));

    let pair = symmetric_pair(sigma, tau)?;
    checks.push(Check::new(
        "m = Fix(tau*) ∩ ker(sigma*^2 + sigma* + 1) has dimension 7",
        pair.complement_dim == 7,
        json!({ "dim": pair.complement_dim }),
    ));
    checks.push(Check::new("[g2, m] ⊆ m", pair.reductive, json!(null)));
    checks.push(Check::new(
        "[m, m] ⊆ g2 (symmetric pair)",
        pair.bracket_in_g2,
        json!({
            "bracket_span_dim": pair.bracket_span_dim,
            "literal_m_dim": pair.literal_complement_dim,
        }),
    ));
    Ok(checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indexing() {
        let all = pairs(8);
        assert_eq!(all.len(), 28);
        for (k, (i, j)) in all.into_iter().enumerate() {
            assert_eq!(pair_index(8, i, j).unwrap(), k);
        }
        assert!(pair_index(8, 3, 3).is_err());
    }

    #[test]
    fn kappa_minus_e12() {
        let b = lambda_star_inverse(&kappa8_star_pair(-1, 1, 2).unwrap()).unwrap();
        let doubled = BivectorCombo::from_coords(8, &b.coords().iter().map(|c| c.scale(&rat(2, 1))).collect::<Vec<_>>());
        assert_eq!(doubled.to_signed().unwrap(), "-12-34-56-78");
        let plus = e_basis_decompose(&kappa8_star_pair(1, 1, 2).unwrap()).unwrap();
        let keys: Vec<_> = plus.keys().copied().collect();
        assert_eq!(keys, vec![(1, 2), (3, 4), (5, 6), (7, 8)]);
        assert!(plus.values().all(Scalar::is_one));
    }

    #[test]
    fn sigma_examples() {
        let sigma = build_sigma_star().unwrap();
        let half = |t: &str| {
            let b = BivectorCombo::from_signed(8, t).unwrap();
            BivectorCombo::from_coords(8, &b.coords().iter().map(|c| c.scale(&rat(1, 2))).collect::<Vec<_>>())
        };
        let e12 = BivectorCombo::from_signed(8, "+12").unwrap();
        let once = sigma.apply(&e12).unwrap();
        assert_eq!(once, half("-12-34-56-78"));
        let twice = sigma.apply(&once).unwrap();
        assert_eq!(twice, half("-12+34+56+78"));
        assert_eq!(sigma.apply(&twice).unwrap(), e12);
    }

    #[test]
    fn tau_examples() {
        let tau = build_tau_star().unwrap();
        let e23 = BivectorCombo::from_signed(8, "+23").unwrap();
        let image = tau.apply(&e23).unwrap();
        let expected = BivectorCombo::from_signed(8, "+14+23+58+67").unwrap();
        let expected = BivectorCombo::from_coords(8, &expected.coords().iter().map(|c| c.scale(&rat(1, 2))).collect::<Vec<_>>());
        assert_eq!(image, expected);
        assert!(tau.pow(2).unwrap().is_identity());
    }

    #[test]
    fn group_signs() {
        let (signs, _) = group_automorphism(Automorphism::Sigma, 1, 2).unwrap();
        assert!(signs.iter().all(|(s, _)| *s == -1));
        let (signs, _) = group_automorphism(Automorphism::Tau, 1, 2).unwrap();
        assert!(signs.iter().all(|(s, _)| *s == 1));
        let (signs, _) = group_automorphism(Automorphism::Sigma, 3, 4).unwrap();
        let only: Vec<i8> = signs.iter().map(|s| s.0).collect();
        assert_eq!(only, vec![1, 1, -1, -1]);
    }

    #[test]
    fn eigen_rejects_other_values() {
        let sigma = build_sigma_star().unwrap();
        assert!(matches!(eigenspace(&sigma, &Scalar::from_int(2)), Err(Error::UnsupportedEigenvalue(_))));
    }

    #[test]
    fn structure_checks() {
        let sigma = build_sigma_star().unwrap();
        let tau = build_tau_star().unwrap();
        for c in s3_relations(&sigma, &tau).unwrap() {
            assert!(c.passed(), "{}", c.name);
        }
        for c in g2_structure(&sigma, &tau).unwrap() {
            let symmetric = c.name.contains("symmetric pair");
            assert_eq!(c.passed(), !symmetric, "{}", c.name);
        }
        assert!(compare_printed(&sigma, &golden::SIGMA_STAR_MATRIX).is_empty());
        assert!(compare_printed(&tau, &golden::TAU_STAR_MATRIX).is_empty());
        let minus = compare_lists(&sigma, -1, &golden::KAPPA_MINUS_E, &golden::KAPPA_MINUS_LAMBDA).unwrap();
        assert_eq!(minus, (vec![], vec![], vec![8]));
        let plus = compare_lists(&tau, 1, &golden::KAPPA_PLUS_E, &golden::KAPPA_PLUS_LAMBDA).unwrap();
        assert_eq!(plus, (vec![], vec![], vec![]));
    }

    #[test]
    fn eigen_dimensions() {
        let sigma = build_sigma_star().unwrap();
        let tau = build_tau_star().unwrap();
        let w = Scalar::omega();
        assert_eq!(eigenspace(&sigma, &Scalar::one()).unwrap().dimension(), 14);
        assert_eq!(eigenspace(&sigma, &w).unwrap().dimension(), 7);
        assert_eq!(eigenspace(&sigma, &w.conj()).unwrap().dimension(), 7);
        assert_eq!(eigenspace(&tau, &Scalar::one()).unwrap().dimension(), 21);
        assert_eq!(eigenspace(&tau, &Scalar::from_int(-1)).unwrap().dimension(), 7);
    }

    #[test]
    fn display_and_rotation() {
        let alpha: Vec<Scalar> = (1..=14).map(|k| Scalar::from_int(k * k - 3 * k)).collect();
        let d = g2_display_matrix(&alpha).unwrap();
        assert_eq!(g2_action_matrix(&alpha, 1).unwrap().transpose(), d);
        assert_eq!(g2_action_matrix(&alpha, -1).unwrap().transpose(), d);
        for t in [0, 3, 6, 12] {
            let two_t = Angle::new(t).double();
            assert_eq!(g2_one_parameter(two_t).unwrap(), block_rotation(two_t));
        }
    }

    #[test]
    fn center_permutation() {
        let vol = CliffordElem::volume(8);
        let minus_one = CliffordElem::scalar(8, Scalar::from_int(-1));
        let s = center_images(Automorphism::Sigma).unwrap();
        assert_eq!(s.minus_one, vol);
        assert_eq!(s.vol, vol.scale(&Scalar::from_int(-1)));
        assert_eq!(s.minus_vol, minus_one);
        let t = center_images(Automorphism::Tau).unwrap();
        assert_eq!(t.minus_one, vol);
        assert_eq!(t.vol, minus_one);
    }
}
