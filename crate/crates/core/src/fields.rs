//! Orthogonal tangent vector fields on spheres from `Cl_r⁰`-modules.
//!
//! `ℝ^N` is written as `m` copies of an irreducible real representation of
//! `Cl_r⁰` with `r` maximal, coordinates ordered copy by copy. The fields are
//! `V_{j−1}(Z) = e₁e_jZ`, `2 ≤ j ≤ r`; each is a signed permutation of the
//! coordinates.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::clifford::{clifford_apply, e1ep_closed_form};
use crate::error::{Error, Result};
use crate::golden;
use crate::matrix::Matrix;
use crate::report::Report;
use crate::sample;
use crate::scalar::{int, rat, Rat, Scalar};
use crate::spinor::{hermitian, parity, real_form_basis, real_structure, RealForm, Spinor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldType {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    #[serde(rename = "H")]
    Quaternion,
    #[serde(rename = "R+R")]
    RealPair,
    #[serde(rename = "H+H")]
    QuaternionPair,
}

impl fmt::Display for FieldType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldType::Real => "R",
            FieldType::Complex => "C",
            FieldType::Quaternion => "H",
            FieldType::RealPair => "R+R",
            FieldType::QuaternionPair => "H+H",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepInfo {
    pub r: usize,
    pub d: u64,
    pub v: usize,
    pub field_type: FieldType,
}

/// Dimension and type of the irreducible real representations of `Cl_r⁰`.
pub fn irrep_info(r: usize) -> Result<IrrepInfo> {
    if r == 0 {
        return Err(Error::InvalidStage);
    }
    let half = (r / 2) as u32;
    let (log_d, v, field_type) = match r % 8 {
        0 => (half - 1, 2, FieldType::RealPair),
        1 => (half, 1, FieldType::Real),
        2 => (half, 1, FieldType::Complex),
        3 => (half + 1, 1, FieldType::Quaternion),
        4 => (half, 2, FieldType::QuaternionPair),
        5 => (half + 1, 1, FieldType::Quaternion),
        6 => (half, 1, FieldType::Complex),
        _ => (half, 1, FieldType::Real),
    };
    if log_d >= 64 {
        return Err(Error::DimensionMismatch(format!("d_{r} exceeds 64 bits")));
    }
    Ok(IrrepInfo {
        r,
        d: 1u64 << log_d,
        v,
        field_type,
    })
}

/// Largest `r` with `d_r | N`.
pub fn max_stage(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    let mut best = 1;
    let mut r = 1;
    while let Ok(info) = irrep_info(r) {
        if info.d > n {
            break;
        }
        if n.is_multiple_of(info.d) {
            best = r;
        }
        r += 1;
    }
    Ok(best)
}

/// `ρ(N) = 8a + 2^b` for `N = 2^{4a+b}·odd`, `0 ≤ b ≤ 3`.
pub fn hurwitz_radon(n: u64) -> Result<usize> {
    if n == 0 {
        return Err(Error::DimensionTooSmall(0));
    }
    let s = n.trailing_zeros() as usize;
    Ok(8 * (s / 4) + (1 << (s % 4)))
}

/// Row `i` of the matrix has a single entry `sign` in column `col`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedPermutation {
    pub rows: Vec<(usize, i8)>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> SignedPermutation {
        SignedPermutation {
            rows: (0..n).map(|i| (i, 1)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reads a signed permutation off a dense matrix.
    pub fn from_matrix(m: &Matrix) -> Result<SignedPermutation> {
        let mut rows = Vec::with_capacity(m.rows());
        for i in 0..m.rows() {
            let mut entry = None;
            for (c, x) in m.row(i).iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let sign = if x.is_one() {
                    1
                } else if (-x).is_one() {
                    -1
                } else {
                    return Err(Error::NotSignedBasis(format!("entry {x} at ({i}, {c})")));
                };
                if entry.replace((c, sign)).is_some() {
                    return Err(Error::NotSignedBasis(format!("row {i} has several entries")));
                }
            }
            rows.push(entry.ok_or_else(|| Error::NotSignedBasis(format!("row {i} is zero")))?);
        }
        Ok(SignedPermutation { rows })
    }

    pub fn to_matrix(&self) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, &(c, s)) in self.rows.iter().enumerate() {
            m.set(i, c, Scalar::from_int(s as i64));
        }
        m
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            rows: self
                .rows
                .iter()
                .map(|&(c, s)| {
                    let (c2, s2) = other.rows[c];
                    (c2, s * s2)
                })
                .collect(),
        }
    }

    pub fn negate(&self) -> SignedPermutation {
        SignedPermutation {
            rows: self.rows.iter().map(|&(c, s)| (c, -s)).collect(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, &(c, s))| self.rows[c] == (i, -s))
    }

    pub fn apply(&self, z: &[Rat]) -> Result<Vec<Rat>> {
        if z.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!("vector of length {} for dimension {}", z.len(), self.dim())));
        }
        Ok(self
            .rows
            .iter()
            .map(|&(c, s)| if s > 0 { z[c].clone() } else { -z[c].clone() })
            .collect())
    }

    /// `(-v2, v1, …)`.
    pub fn coordinate_tokens(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|&(c, s)| format!("{}v{}", if s > 0 { "" } else { "-" }, c + 1))
            .collect()
    }
}

/// Real basis of one irreducible summand together with an index lookup for
/// sparse expansion.
struct RealBasis {
    vectors: Vec<Spinor>,
    by_index: BTreeMap<u64, Vec<usize>>,
}

impl RealBasis {
    fn new(vectors: Vec<Spinor>) -> RealBasis {
        let mut by_index: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for (pos, v) in vectors.iter().enumerate() {
            for (a, _) in v.terms() {
                by_index.entry(a).or_default().push(pos);
            }
        }
        RealBasis { vectors, by_index }
    }

    /// Real coordinates of `v`, computed only over basis vectors that share
    /// support with it.
    fn expand(&self, v: &Spinor) -> Result<BTreeMap<usize, Rat>> {
        let candidates: BTreeSet<usize> = v
            .terms()
            .flat_map(|(a, _)| self.by_index.get(&a).into_iter().flatten().copied())
            .collect();
        let mut coeffs = BTreeMap::new();
        let mut rebuilt = Spinor::zero(v.width());
        for pos in candidates {
            let b = &self.vectors[pos];
            let c = hermitian(b, v)?.re().div(&hermitian(b, b)?)?;
            if c.is_zero() {
                continue;
            }
            rebuilt = rebuilt.add(&b.scale(&c))?;
            coeffs.insert(pos, c.as_rat().ok_or_else(|| Error::NotRational(c.to_string()))?);
        }
        if rebuilt != *v {
            return Err(Error::NotInSpan);
        }
        Ok(coeffs)
    }
}

fn summand_basis(r: usize, which: RealForm) -> Result<RealBasis> {
    Ok(RealBasis::new(real_form_basis(r, which)?))
}

/// Matrix of `e₁e_p` on one summand, built from the bit-flip kernel.
fn summand_field(r: usize, p: usize, basis: &RealBasis) -> Result<SignedPermutation> {
    let d = basis.vectors.len();
    let mut rows = vec![None; d];
    for (col, b) in basis.vectors.iter().enumerate() {
        let image = clifford_apply(r, 1, &clifford_apply(r, p, b)?)?;
        for (row, c) in basis.expand(&image)? {
            let sign = if c == int(1) {
                1
            } else if c == int(-1) {
                -1
            } else {
                return Err(Error::NotSignedBasis(format!("coefficient {c} in e1e{p} on stage {r}")));
            };
            if rows[row].replace((col, sign)).is_some() {
                return Err(Error::NotSignedBasis(format!("row {row} of e1e{p} has several entries")));
            }
        }
    }
    let rows = rows
        .into_iter()
        .enumerate()
        .map(|(i, x)| x.ok_or_else(|| Error::NotSignedBasis(format!("row {i} of e1e{p} is zero"))))
        .collect::<Result<_>>()?;
    Ok(SignedPermutation { rows })
}

/// Direct sum of copies, coordinates copy-major.
fn block_diagonal(blocks: &[&SignedPermutation]) -> SignedPermutation {
    let mut rows = Vec::new();
    let mut offset = 0;
    for b in blocks {
        rows.extend(b.rows.iter().map(|&(c, s)| (c + offset, s)));
        offset += b.dim();
    }
    SignedPermutation { rows }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSystem {
    pub n: usize,
    pub info: IrrepInfo,
    /// Copies of `Δ̃_r^+` (or `Δ̃_r`) and of `Δ̃_r^−`.
    pub split: (usize, usize),
    /// `J_{j−1}` = image of `e₁e_j`, `j = 2..=r`.
    pub fields: Vec<SignedPermutation>,
}

impl FieldSystem {
    pub fn r(&self) -> usize {
        self.info.r
    }

    pub fn field(&self, j: usize) -> Result<&SignedPermutation> {
        if j == 0 || j > self.fields.len() {
            return Err(Error::FieldIndex {
                index: j,
                max: self.fields.len(),
            });
        }
        Ok(&self.fields[j - 1])
    }
}

/// Field system on `ℝ^N` at the maximal stage. `split` fixes `(m₁, m₂)`
/// when `r ≡ 0 (mod 4)`; otherwise it must be `(N/d, 0)`.
pub fn build_field_system(n: usize, split: Option<(usize, usize)>) -> Result<FieldSystem> {
    if n < 1 {
        return Err(Error::DimensionTooSmall(n));
    }
    let r = max_stage(n as u64)?;
    let info = irrep_info(r)?;
    let d = info.d as usize;
    if !n.is_multiple_of(d) {
        return Err(Error::NoDecomposition { n, d });
    }
    let (m1, m2) = split.unwrap_or((n / d, 0));
    if d * (m1 + m2) != n || (m2 > 0 && r % 4 != 0) {
        return Err(Error::NoDecomposition { n, d });
    }
    if r == 1 {
        return Ok(FieldSystem {
            n,
            info,
            split: (m1, m2),
            fields: Vec::new(),
        });
    }
    let plus = summand_basis(r, RealForm::Plus)?;
    let minus = if m2 > 0 { Some(summand_basis(r, RealForm::Minus)?) } else { None };
    let mut fields = Vec::with_capacity(r - 1);
    for p in 2..=r {
        let on_plus = summand_field(r, p, &plus)?;
        let on_minus = match &minus {
            Some(basis) => Some(summand_field(r, p, basis)?),
            None => None,
        };
        let mut blocks: Vec<&SignedPermutation> = vec![&on_plus; m1];
        if let Some(block) = &on_minus {
            blocks.extend(std::iter::repeat_n(block, m2));
        }
        fields.push(block_diagonal(&blocks));
    }
    Ok(FieldSystem {
        n,
        info,
        split: (m1, m2),
        fields,
    })
}

pub fn evaluate(system: &FieldSystem, j: usize, z: &[Rat]) -> Result<Vec<Rat>> {
    system.field(j)?.apply(z)
}

/// Algebraic checks: antisymmetry, `J² = −Id`, pairwise anticommutation.
pub fn structure_failures(system: &FieldSystem) -> Vec<String> {
    let id = SignedPermutation::identity(system.n);
    let minus_id = id.negate();
    let mut out = Vec::new();
    for (a, ja) in system.fields.iter().enumerate() {
        if !ja.is_antisymmetric() {
            out.push(format!("J{} not antisymmetric", a + 1));
        }
        if ja.compose(ja) != minus_id {
            out.push(format!("J{}^2 != -Id", a + 1));
        }
        for (b, jb) in system.fields.iter().enumerate().skip(a + 1) {
            let ab = ja.compose(jb);
            if ab != jb.compose(ja).negate() {
                out.push(format!("J{} J{} + J{} J{} != 0", a + 1, b + 1, b + 1, a + 1));
            }
        }
    }
    out
}

fn dot(x: &[Rat], y: &[Rat]) -> Rat {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// True when the Gram matrix of `{Z, V₁(Z), …}` is `|Z|²·Id`.
pub fn gram_is_scalar(system: &FieldSystem, z: &[Rat]) -> Result<bool> {
    let mut frame = vec![z.to_vec()];
    for j in 1..=system.fields.len() {
        frame.push(evaluate(system, j, z)?);
    }
    let norm = dot(z, z);
    for (a, x) in frame.iter().enumerate() {
        for (b, y) in frame.iter().enumerate() {
            let expected = if a == b { norm.clone() } else { Rat::zero() };
            if dot(x, y) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmitFormat {
    Text,
    Latex,
    Json,
}

/// Coordinate rows `V_j = (±v_c, …)`.
pub fn emit_coordinates(system: &FieldSystem, format: EmitFormat) -> String {
    let rows: Vec<Vec<String>> = system.fields.iter().map(SignedPermutation::coordinate_tokens).collect();
    match format {
        EmitFormat::Text => rows
            .iter()
            .enumerate()
            .map(|(j, t)| format!("V{} = ({})\n", j + 1, t.join(", ")))
            .collect(),
        EmitFormat::Latex => {
            let mut out = String::from("\\begin{eqnarray*}\n");
            for (j, t) in rows.iter().enumerate() {
                let tokens: Vec<String> = t
                    .iter()
                    .map(|s| {
                        let (sign, var) = s.split_at(if s.starts_with('-') { 1 } else { 0 });
                        format!("{sign}v_{{{}}}", &var[1..])
                    })
                    .collect();
                out.push_str(&format!("V_{{{}}} &=& ({})\\\\\n", j + 1, tokens.join(", ")));
            }
            out.push_str("\\end{eqnarray*}");
            out
        }
        EmitFormat::Json => {
            let fields: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(j, t)| json!({ "index": j + 1, "generator": format!("e1e{}", j + 2), "coords": t }))
                .collect();
            serde_json::to_string_pretty(&json!({
                "N": system.n,
                "r": system.r(),
                "split": [system.split.0, system.split.1],
                "fields": fields,
            }))
            .expect("json")
        }
    }
}

pub fn emit_matrices(system: &FieldSystem, format: EmitFormat) -> String {
    match format {
        EmitFormat::Json => serde_json::to_string_pretty(system).expect("json"),
        EmitFormat::Text => {
            let mut out = String::new();
            for (j, f) in system.fields.iter().enumerate() {
                out.push_str(&format!("J{} = e1e{}\n{}\n", j + 1, j + 2, f.to_matrix()));
            }
            out
        }
        EmitFormat::Latex => system
            .fields
            .iter()
            .enumerate()
            .map(|(j, f)| format!("J_{{{}}} = {}\n", j + 1, f.to_matrix().to_latex()))
            .collect(),
    }
}

/// Even-parity indices of `Δ_10⁺`, which label the coordinates on `S³¹`.
fn s31_indices() -> Vec<u64> {
    (0..32u64).filter(|&a| parity(a) == 0).collect()
}

/// `V_j` on `S³¹` in spinor form: sorted `(a, e, b)` with the coefficient of
/// `u_a` equal to `i^e (X_b + iY_b)`, from the closed form.
pub fn s31_spinor_rows() -> Result<Vec<Vec<(u64, u8, u64)>>> {
    (2..=10)
        .map(|p| {
            let mut row = s31_indices()
                .into_iter()
                .map(|b| e1ep_closed_form(10, p, b).map(|(e, a)| (a, e as u8, b)))
                .collect::<Result<Vec<_>>>()?;
            row.sort_unstable();
            Ok(row)
        })
        .collect()
}

/// Relabeled coordinate tokens derived from a spinor-form row.
pub fn relabel_spinor_row(row: &[(u64, u8, u64)]) -> Result<Vec<String>> {
    let labels = s31_indices();
    let pos = |a: u64| {
        labels
            .iter()
            .position(|&x| x == a)
            .ok_or(Error::IndexOutOfRange { index: a, bits: 5 })
    };
    let mut tokens = vec![String::new(); 32];
    for &(a, e, b) in row {
        let (x, y) = (2 * pos(a)?, 2 * pos(a)? + 1);
        let (xb, yb) = (2 * pos(b)? + 1, 2 * pos(b)? + 2);
        let (tx, ty) = match e % 4 {
            0 => (format!("v{xb}"), format!("v{yb}")),
            1 => (format!("-v{yb}"), format!("v{xb}")),
            2 => (format!("-v{xb}"), format!("-v{yb}")),
            _ => (format!("v{yb}"), format!("-v{xb}")),
        };
        tokens[x] = tx;
        tokens[y] = ty;
    }
    Ok(tokens)
}

pub fn parse_coordinate_row(text: &str) -> Vec<String> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|t| t.split_whitespace().collect::<String>())
        .collect()
}

/// 1-based `(field, position)` cells where two row sets disagree.
pub fn token_mismatches(a: &[Vec<String>], b: &[Vec<String>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (j, (ra, rb)) in a.iter().zip(b).enumerate() {
        for (k, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                out.push((j + 1, k + 1));
            }
        }
        for k in ra.len().min(rb.len())..ra.len().max(rb.len()) {
            out.push((j + 1, k + 1));
        }
    }
    if a.len() != b.len() {
        out.push((a.len().max(b.len()), 0));
    }
    out
}

/// Index set and symmetrization flag of the displayed bases.
fn formula_indices(r: usize) -> Result<(Vec<u64>, bool)> {
    let k = (r / 2) as u32;
    match r % 8 {
        0 => Ok(((0..1u64 << (k - 1)).filter(|&a| parity(a) == 0).collect(), true)),
        1 => Ok(((0..1u64 << (k - 1)).collect(), true)),
        2 | 4 => Ok(((0..1u64 << k).filter(|&a| parity(a) == 0).collect(), false)),
        _ => Err(Error::UnsupportedResidue(r)),
    }
}

/// `e₁e_p Z` by the residue-case formulas, `Z` given by interleaved
/// `(X_a, Y_a)` over the displayed basis.
pub fn case_formula_image(r: usize, p: usize, coords: &[Rat]) -> Result<Spinor> {
    let (indices, symmetrize) = formula_indices(r)?;
    if coords.len() != 2 * indices.len() {
        return Err(Error::DimensionMismatch(format!("{} coordinates for {} basis pairs", coords.len(), indices.len())));
    }
    let k = (r / 2) as u32;
    let half_root2 = Scalar::sqrt2().scale(&rat(1, 2));
    let basis_vector = |v: Spinor| -> Result<Spinor> {
        if symmetrize {
            Ok(v.add(&real_structure(r, &v)?)?.scale(&half_root2))
        } else {
            Ok(v)
        }
    };
    let mut out = Spinor::zero(k);
    for (pos, &a) in indices.iter().enumerate() {
        let (e, target) = e1ep_closed_form(r, p, a)?;
        let x = Scalar::from_rat(coords[2 * pos].clone());
        let y = Scalar::from_rat(coords[2 * pos + 1].clone());
        out = out.add(&basis_vector(Spinor::term(k, target, Scalar::i_pow(e))?)?.scale(&x))?;
        out = out.add(&basis_vector(Spinor::term(k, target, Scalar::i_pow(e + 1))?)?.scale(&y))?;
    }
    Ok(out)
}

/// Fields `p` (2-based generator index) where the case formulas and the
/// matrix route disagree on `samples` random points.
pub fn case_formula_mismatches(r: usize, samples: usize, seed: u64) -> Result<Vec<usize>> {
    let info = irrep_info(r)?;
    let d = info.d as usize;
    let system = build_field_system_at(r, 1)?;
    let basis = summand_basis(r, RealForm::Plus)?;
    let mut rng = sample::rng(seed);
    let mut bad = BTreeSet::new();
    for _ in 0..samples {
        let z = sample::rationals(&mut rng, d);
        for p in 2..=r {
            let image = case_formula_image(r, p, &z)?;
            let expanded = basis.expand(&image)?;
            let dense: Vec<Rat> = (0..d).map(|i| expanded.get(&i).cloned().unwrap_or_else(Rat::zero)).collect();
            if dense != system.fields[p - 2].apply(&z)? {
                bad.insert(p);
            }
        }
    }
    Ok(bad.into_iter().collect())
}

/// One plus-chirality summand at stage `r`, regardless of maximality.
pub fn build_field_system_at(r: usize, copies: usize) -> Result<FieldSystem> {
    let info = irrep_info(r)?;
    let plus = summand_basis(r, RealForm::Plus)?;
    let mut fields = Vec::with_capacity(r.saturating_sub(1));
    for p in 2..=r {
        let block = summand_field(r, p, &plus)?;
        fields.push(block_diagonal(&vec![&block; copies]));
    }
    Ok(FieldSystem {
        n: info.d as usize * copies,
        info,
        split: (copies, 0),
        fields,
    })
}

/// `(r, p, a)` where the closed form of `e₁e_p u_a` differs from two kernel
/// applications.
pub fn closed_form_failures(max_r: usize) -> Result<Vec<(usize, usize, u64)>> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        let k = (r / 2) as u32;
        for p in 2..=r {
            for a in 0..1u64 << k {
                let (e, b) = e1ep_closed_form(r, p, a)?;
                let direct = clifford_apply(r, 1, &clifford_apply(r, p, &Spinor::basis(k, a)?)?)?;
                if direct != Spinor::term(k, b, Scalar::i_pow(e))? {
                    out.push((r, p, a));
                }
            }
        }
    }
    Ok(out)
}

/// Report for `fields --verify`: structure plus Gram checks at seeded points.
pub fn verify_system(system: &FieldSystem, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    let failures = structure_failures(system);
    report.record(
        format!("N = {}: J antisymmetric, J^2 = -Id, pairwise anticommuting", system.n),
        failures.is_empty(),
        json!({ "failures": failures }),
    );
    let mut rng = sample::rng(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let z = sample::nonzero_vector(&mut rng, system.n);
        if !gram_is_scalar(system, &z)? {
            bad += 1;
        }
    }
    report.record(
        format!("N = {}: Gram matrix of {{Z, V1(Z), ..., V{}(Z)}} is |Z|^2 Id", system.n, system.fields.len()),
        bad == 0,
        json!({ "samples": samples, "failures": bad }),
    );
    Ok(report)
}

pub fn printed_s31_rows() -> Vec<Vec<String>> {
    golden::S31_RELABELED_ROWS.iter().map(|r| parse_coordinate_row(r)).collect()
}

pub fn printed_s31_spinor_rows() -> Vec<Vec<(u64, u8, u64)>> {
    golden::S31_SPINOR_ROWS.iter().map(|r| r.to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irrep_table() {
        let three = irrep_info(3).unwrap();
        assert_eq!((three.d, three.v, three.field_type), (4, 1, FieldType::Quaternion));
        let eight = irrep_info(8).unwrap();
        assert_eq!((eight.d, eight.v, eight.field_type), (8, 2, FieldType::RealPair));
        let ten = irrep_info(10).unwrap();
        assert_eq!((ten.d, ten.v, ten.field_type), (32, 1, FieldType::Complex));
        assert!(matches!(irrep_info(0), Err(Error::InvalidStage)));
    }

    #[test]
    fn stages() {
        assert_eq!(max_stage(32).unwrap(), 10);
        assert_eq!(max_stage(16).unwrap(), 9);
        assert_eq!(max_stage(7).unwrap(), 1);
        for n in 1..=4096u64 {
            let r = max_stage(n).unwrap();
            assert_eq!(r, hurwitz_radon(n).unwrap(), "N = {n}");
            assert!(!matches!(r % 8, 3 | 5 | 6 | 7));
        }
    }

    #[test]
    fn small_systems() {
        let two = build_field_system(2, None).unwrap();
        assert_eq!(emit_coordinates(&two, EmitFormat::Text), "V1 = (-v2, v1)\n");
        let four = build_field_system(4, None).unwrap();
        assert_eq!(four.fields.len(), 3);
        assert!(structure_failures(&four).is_empty());
        let odd = build_field_system(9, None).unwrap();
        assert!(odd.fields.is_empty());
        assert!(matches!(build_field_system(8, Some((1, 1))), Err(Error::NoDecomposition { .. })));
        let mixed = build_field_system(16, None).unwrap();
        assert_eq!(mixed.r(), 9);
        let split = build_field_system(8, Some((1, 0))).unwrap();
        assert!(structure_failures(&split).is_empty());
    }

    #[test]
    fn mixed_chirality_split() {
        let system = build_field_system(12, Some((1, 2))).unwrap();
        assert_eq!(system.r(), 4);
        assert!(structure_failures(&system).is_empty());
        let report = verify_system(&system, 5, 3).unwrap();
        assert!(report.all_passed());
    }

    #[test]
    fn sphere_s31() {
        let system = build_field_system(32, None).unwrap();
        let emitted: Vec<Vec<String>> = system.fields.iter().map(SignedPermutation::coordinate_tokens).collect();
        assert_eq!(emitted[0][0], "-v2");
        assert_eq!(token_mismatches(&emitted, &printed_s31_rows()), vec![(5, 6), (6, 8)]);
        let spinor_rows = s31_spinor_rows().unwrap();
        assert_eq!(spinor_rows, printed_s31_spinor_rows());
        let relabeled: Vec<Vec<String>> = spinor_rows.iter().map(|r| relabel_spinor_row(r).unwrap()).collect();
        assert_eq!(relabeled, emitted);
        let e1 = {
            let mut z = vec![Rat::zero(); 32];
            z[0] = int(1);
            z
        };
        let v1 = evaluate(&system, 1, &e1).unwrap();
        assert_eq!(v1[1], int(1));
        assert!(matches!(evaluate(&system, 10, &e1), Err(Error::FieldIndex { .. })));
    }

    #[test]
    fn case_formulas_match() {
        for r in [8, 9, 10, 12] {
            assert!(case_formula_mismatches(r, 3, 7).unwrap().is_empty(), "r = {r}");
        }
        assert!(closed_form_failures(10).unwrap().is_empty());
    }
}
