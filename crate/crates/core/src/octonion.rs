//! Octonions and quaternions recovered from real Clifford multiplication
//! `ℝⁿ × Δ̃ₙ⁺ → Δ̃ₙ⁻` for `n = 8` and `n = 4`.
//!
//! With `v_i = e_{i+1}`, `ψ_j` the plus basis and `φ_k = e₁ψ_k` the minus
//! basis, every product `v_iψ_j` is a signed `φ_k`. Identifying `ψ_j` and
//! `φ_j` with `ê_j` and `v_j` with `s_jê_j` turns the table into an algebra
//! with unit `ê₀`; the signs are forced by `v_jψ₀ = s_jφ_j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;

use crate::clifford::clifford_apply;
use crate::error::{Error, Result};
use crate::golden;
use crate::report::Report;
use crate::sample;
use crate::scalar::{format_rat, int, Rat, Scalar};
use crate::spinor::{real_expand, real_form_basis, RealForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedIndex {
    pub sign: i8,
    pub index: usize,
}

impl SignedIndex {
    pub fn new(sign: i8, index: usize) -> SignedIndex {
        SignedIndex { sign, index }
    }

    pub fn negate(self) -> SignedIndex {
        SignedIndex::new(-self.sign, self.index)
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.sign > 0 { '+' } else { '-' }, self.index)
    }
}

impl FromStr for SignedIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignedIndex> {
        let (sign, index) = golden::parse_signed_index(s)?;
        Ok(SignedIndex::new(sign, index))
    }
}

impl Serialize for SignedIndex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SignedIndex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<SignedIndex, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

pub type Table = Vec<Vec<SignedIndex>>;

fn as_signed(coeffs: &[Scalar]) -> Result<SignedIndex> {
    let mut found = None;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_one() {
            1
        } else if (-c).is_one() {
            -1
        } else {
            return Err(Error::NotSignedBasis(format!("coefficient {c} on basis vector {k}")));
        };
        if found.replace(SignedIndex::new(sign, k)).is_some() {
            return Err(Error::NotSignedBasis(format!("{} nonzero coefficients", coeffs.iter().filter(|c| !c.is_zero()).count())));
        }
    }
    found.ok_or_else(|| Error::NotSignedBasis("zero product".into()))
}

/// `v_i · ψ_j` as a signed `φ` index, for `n ∈ {4, 8}`.
pub fn clifford_table(n: usize) -> Result<Table> {
    if n != 4 && n != 8 {
        return Err(Error::UnsupportedResidue(n));
    }
    let plus = real_form_basis(n, RealForm::Plus)?;
    let minus = real_form_basis(n, RealForm::Minus)?;
    (1..=n)
        .map(|p| {
            plus.iter()
                .map(|psi| as_signed(&real_expand(&clifford_apply(n, p, psi)?, &minus)?))
                .collect()
        })
        .collect()
}

pub fn real_clifford_table() -> Result<Table> {
    clifford_table(8)
}

/// Signs `s_j` read off from column `ψ₀`.
pub fn identification(table: &Table) -> Result<Vec<i8>> {
    table
        .iter()
        .enumerate()
        .map(|(j, row)| {
            let cell = row[0];
            if cell.index != j {
                return Err(Error::NotSignedBasis(format!("v{j} psi0 lands on phi{}", cell.index)));
            }
            Ok(cell.sign)
        })
        .collect()
}

/// `ê_iê_j = s_i (v_iψ_j)` under the identification.
pub fn algebra_table(table: &Table, signs: &[i8]) -> Table {
    table
        .iter()
        .zip(signs)
        .map(|(row, &s)| row.iter().map(|c| SignedIndex::new(c.sign * s, c.index)).collect())
        .collect()
}

pub fn octonion_table() -> Result<Table> {
    let table = real_clifford_table()?;
    let signs = identification(&table)?;
    Ok(algebra_table(&table, &signs))
}

pub fn quaternion_table() -> Result<Table> {
    let table = clifford_table(4)?;
    let signs = identification(&table)?;
    Ok(algebra_table(&table, &signs))
}

pub fn parse_table<const N: usize>(cells: &[[&str; N]; N]) -> Result<Table> {
    cells.iter().map(|row| row.iter().map(|c| c.parse()).collect()).collect()
}

/// Cells where two tables differ.
pub fn table_mismatches(a: &Table, b: &Table) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, (ra, rb)) in a.iter().zip(b).enumerate() {
        for (j, (x, y)) in ra.iter().zip(rb).enumerate() {
            if x != y {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn table_text(table: &Table, prefix: &str) -> String {
    let mut out = String::new();
    for row in table {
        let cells: Vec<String> = row
            .iter()
            .map(|c| format!("{}{prefix}{}", if c.sign > 0 { ' ' } else { '-' }, c.index))
            .collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn table_latex(table: &Table, symbol: &str) -> String {
    let n = table.len();
    let mut out = format!("\\begin{{array}}{{c|{}}}\n", "c".repeat(n));
    let header: Vec<String> = (0..n).map(|j| format!("{symbol}_{j}")).collect();
    out.push_str(&format!(" & {} \\\\\n\\hline\n", header.join(" & ")));
    for (i, row) in table.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|c| format!("{}{symbol}_{}", if c.sign > 0 { "" } else { "-" }, c.index))
            .collect();
        out.push_str(&format!("{symbol}_{i} & {} \\\\\n", cells.join(" & ")));
    }
    out.push_str("\\end{array}");
    out
}

/// Element of the algebra defined by a signed multiplication table.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Octonion {
    #[serde(with = "rat_list")]
    pub coeffs: Vec<Rat>,
}

mod rat_list {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar::{format_rat, parse_rat, Rat};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rat))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| parse_rat(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl Octonion {
    pub fn new(coeffs: Vec<Rat>) -> Octonion {
        Octonion { coeffs }
    }

    pub fn zero(dim: usize) -> Octonion {
        Octonion::new(vec![Rat::zero(); dim])
    }

    pub fn unit(dim: usize, k: usize) -> Octonion {
        let mut x = Octonion::zero(dim);
        x.coeffs[k] = int(1);
        x
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn norm(&self) -> Rat {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn conj(&self) -> Octonion {
        let mut out = -self;
        out.coeffs[0] = self.coeffs[0].clone();
        out
    }

    pub fn scale(&self, q: &Rat) -> Octonion {
        Octonion::new(self.coeffs.iter().map(|c| c * q).collect())
    }

    pub fn mul_with(&self, other: &Octonion, table: &Table) -> Octonion {
        let mut out = Octonion::zero(self.dim());
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let cell = table[i][j];
                let term = x * y;
                if cell.sign > 0 {
                    out.coeffs[cell.index] += term;
                } else {
                    out.coeffs[cell.index] -= term;
                }
            }
        }
        out
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let negative = *c < Rat::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            write!(f, "{}*e{k}", format_rat(&magnitude))?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, other: &Octonion) -> Octonion {
        Octonion::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, other: &Octonion) -> Octonion {
        Octonion::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, other: &Octonion) -> Octonion {
        octonion_mul(self, other)
    }
}

fn octonion_table_cached() -> &'static Table {
    static TABLE: std::sync::OnceLock<Table> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| octonion_table().expect("octonion table"))
}

pub fn octonion_mul(x: &Octonion, y: &Octonion) -> Octonion {
    x.mul_with(y, octonion_table_cached())
}

pub fn random_octonion(rng: &mut sample::SampleRng) -> Octonion {
    Octonion::new(sample::rationals(rng, 8))
}

/// Basis triples `(a, b, c)` with `(ê_aê_b)ê_c ≠ ê_a(ê_bê_c)`.
pub fn associator_failures(table: &Table) -> Vec<(usize, usize, usize)> {
    let n = table.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ea, eb, ec) = (Octonion::unit(n, a), Octonion::unit(n, b), Octonion::unit(n, c));
                let left = ea.mul_with(&eb, table).mul_with(&ec, table);
                let right = ea.mul_with(&eb.mul_with(&ec, table), table);
                if left != right {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Structural checks shared by the octonion and quaternion tables.
pub fn table_checks(table: &Table, report: &mut Report, label: &str) {
    let n = table.len();
    let unit_ok = (0..n).all(|j| table[0][j] == SignedIndex::new(1, j) && table[j][0] == SignedIndex::new(1, j));
    report.record(format!("{label}: e0 is a two-sided unit"), unit_ok, json!(null));
    let diag_ok = (1..n).all(|j| table[j][j] == SignedIndex::new(-1, 0));
    report.record(format!("{label}: ej^2 = -e0 for j >= 1"), diag_ok, json!(null));
    let mut anti = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i != j && table[i][j] != table[j][i].negate() {
                anti.push((i, j));
            }
        }
    }
    report.record(
        format!("{label}: distinct imaginary units anticommute"),
        anti.is_empty(),
        json!({ "failing": anti }),
    );
}

/// Division-algebra checks on `samples` random rational octonions.
pub fn algebra_checks(samples: usize, seed: u64) -> Result<Report> {
    let table = octonion_table()?;
    let mut report = Report::new();
    table_checks(&table, &mut report, "octonions");
    let mut rng = sample::rng(seed);
    let mut norm_bad = 0;
    let mut alt_bad = 0;
    let mut orth_bad = 0;
    for _ in 0..samples {
        let x = random_octonion(&mut rng);
        let y = random_octonion(&mut rng);
        let xy = x.mul_with(&y, &table);
        if xy.norm() != x.norm() * y.norm() {
            norm_bad += 1;
        }
        let left = x.mul_with(&xy, &table) == x.mul_with(&x, &table).mul_with(&y, &table);
        let yx = y.mul_with(&x, &table);
        let right = yx.mul_with(&x, &table) == y.mul_with(&x.mul_with(&x, &table), &table);
        if !left || !right {
            alt_bad += 1;
        }
        if !left_multiplication_orthogonal(&x, &table) {
            orth_bad += 1;
        }
    }
    if samples > 0 {
        report.record("norm multiplicativity N(xy) = N(x)N(y)", norm_bad == 0, json!({ "samples": samples, "failures": norm_bad }));
        report.record("alternativity x(xy) = (xx)y and (yx)x = y(xx)", alt_bad == 0, json!({ "samples": samples, "failures": alt_bad }));
        report.record("left multiplication L_x satisfies L_x^T L_x = N(x) Id", orth_bad == 0, json!({ "samples": samples, "failures": orth_bad }));
    }
    let (e1, e2, e4) = (Octonion::unit(8, 1), Octonion::unit(8, 2), Octonion::unit(8, 4));
    let left = e1.mul_with(&e2, &table).mul_with(&e4, &table);
    let right = e1.mul_with(&e2.mul_with(&e4, &table), &table);
    report.record(
        "non-associativity witness (e1 e2) e4 = e7, e1 (e2 e4) = -e7",
        left == Octonion::unit(8, 7) && right == -&Octonion::unit(8, 7),
        json!({ "left": left.to_string(), "right": right.to_string() }),
    );
    let failures = associator_failures(&table);
    report.record("octonion table is not associative", !failures.is_empty(), json!({ "non_associative_triples": failures.len() }));
    Ok(report)
}

/// Checks on the table produced by the `n = 4` pipeline.
pub fn quaternion_checks() -> Result<Report> {
    let table = quaternion_table()?;
    let mut report = Report::new();
    table_checks(&table, &mut report, "quaternions");
    let failures = associator_failures(&table);
    report.record("quaternions: all 64 basis triples associate", failures.is_empty(), json!({ "failing": failures }));
    let (i, j, k) = (Octonion::unit(4, 1), Octonion::unit(4, 2), Octonion::unit(4, 3));
    let ijk = i.mul_with(&j, &table).mul_with(&k, &table);
    let ok = !ijk.coeffs[0].is_zero() && ijk.coeffs[1..].iter().all(Zero::is_zero);
    report.record(
        "quaternions: e1 e2 e3 = +-e0",
        ok,
        json!({ "product": ijk.to_string() }),
    );
    Ok(report)
}

fn left_multiplication_orthogonal(x: &Octonion, table: &Table) -> bool {
    let n = x.dim();
    let cols: Vec<Octonion> = (0..n).map(|j| x.mul_with(&Octonion::unit(n, j), table)).collect();
    let norm = x.norm();
    for a in 0..n {
        for b in 0..n {
            let dot: Rat = cols[a].coeffs.iter().zip(&cols[b].coeffs).map(|(p, q)| p * q).sum();
            let expected = if a == b { norm.clone() } else { Rat::zero() };
            if dot != expected {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_match_printed() {
        let clifford = real_clifford_table().unwrap();
        assert!(table_mismatches(&clifford, &parse_table(&golden::CLIFFORD_TABLE).unwrap()).is_empty());
        assert_eq!(identification(&clifford).unwrap(), golden::OCTONION_IDENTIFICATION.to_vec());
        let octo = octonion_table().unwrap();
        assert!(table_mismatches(&octo, &parse_table(&golden::OCTONION_TABLE).unwrap()).is_empty());
        assert_eq!(octo[1][2], SignedIndex::new(-1, 3));
        assert_eq!(octo[4][5], SignedIndex::new(-1, 1));
    }

    #[test]
    fn example_norm() {
        let x = &Octonion::unit(8, 1) + &Octonion::unit(8, 2);
        let y = Octonion::unit(8, 4);
        let xy = &x * &y;
        let expected = -&(&Octonion::unit(8, 5) + &Octonion::unit(8, 6));
        assert_eq!(xy, expected);
        assert_eq!(xy.norm(), int(2));
    }

    #[test]
    fn division_algebra() {
        let report = algebra_checks(100, 1).unwrap();
        assert!(report.all_passed(), "{}", report.to_text());
        let q = quaternion_checks().unwrap();
        assert!(q.all_passed(), "{}", q.to_text());
    }

    #[test]
    fn signed_index_round_trip() {
        let s = SignedIndex::new(-1, 3);
        assert_eq!(s.to_string().parse::<SignedIndex>().unwrap(), s);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "\"-3\"");
        assert_eq!(serde_json::from_str::<SignedIndex>(&json).unwrap(), s);
        let x = Octonion::new(vec![int(1), crate::scalar::rat(1, 2), int(0), int(0), int(0), int(0), int(0), int(-3)]);
        let back: Octonion = serde_json::from_str(&serde_json::to_string(&x).unwrap()).unwrap();
        assert_eq!(back, x);
    }
}
