//! Shortest t-dimensional hull embeddings: exact lengths and constructions.
//!
//! An embedding of an [n, k] code C with generator G is a code generated by
//! `[G | D]` for some k×s matrix D whose hull has dimension t. All
//! constructions place D's columns through the congruence witness P of C's
//! Gram matrix, so `G·G* + D·D*` stays in block form.

use std::fmt;

use crate::code::{classify, hull_basis, hull_dimension, hull_first_transform, CodeTypeTag, LinearCode};
use crate::congruence::{canonize_char2, diagonalize_hermitian, CanonicalForm};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{InnerKind, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingResult {
    /// The extended [n + s, k] code.
    pub code: LinearCode,
    /// The k×s block appended to the original generator.
    pub appended: Matrix,
    pub t: usize,
    pub kind: InnerKind,
    pub s: usize,
}

/// Which length formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LengthRule {
    /// t = ℓ: s = 0
    Unchanged,
    /// t < ℓ: s = ℓ − t
    ShrinkHull,
    /// Hermitian, t > ℓ: s = t − ℓ
    HermitianGrow,
    /// Eos, t > ℓ: s = t − ℓ
    OddSquareGrow,
    /// Eons, ℓ < t < k: s = t − ℓ
    OddNonSquareGrow,
    /// Eons, t = k: s = k − ℓ + 1
    OddNonSquareFull,
    /// Eena, t > ℓ: s = t − ℓ
    EvenNonAlternatingGrow,
    /// Eea, t > ℓ: s = t − ℓ + 1
    EvenAlternatingGrow,
}

impl fmt::Display for LengthRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LengthRule::Unchanged => "t = l",
            LengthRule::ShrinkHull => "t < l: s = l - t",
            LengthRule::HermitianGrow => "hermitian: s = t - l",
            LengthRule::OddSquareGrow => "Eos: s = t - l",
            LengthRule::OddNonSquareGrow => "Eons, t < k: s = t - l",
            LengthRule::OddNonSquareFull => "Eons, t = k: s = k - l + 1",
            LengthRule::EvenNonAlternatingGrow => "Eena: s = t - l",
            LengthRule::EvenAlternatingGrow => "Eea: s = t - l + 1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthVerdict {
    /// Number of appended coordinates.
    pub s: usize,
    pub rule: LengthRule,
}

fn check_t(code: &LinearCode, t: usize) -> Result<()> {
    if t > code.k() {
        return Err(Error::TOutOfRange { t, k: code.k() });
    }
    Ok(())
}

fn growth_rule(tag: CodeTypeTag, k: usize, t: usize) -> LengthRule {
    match tag {
        CodeTypeTag::Eos => LengthRule::OddSquareGrow,
        CodeTypeTag::Eons if t == k => LengthRule::OddNonSquareFull,
        CodeTypeTag::Eons => LengthRule::OddNonSquareGrow,
        CodeTypeTag::Eena => LengthRule::EvenNonAlternatingGrow,
        CodeTypeTag::Eea => LengthRule::EvenAlternatingGrow,
    }
}

fn verdict(rule: LengthRule, k: usize, hull: usize, t: usize) -> LengthVerdict {
    let s = match rule {
        LengthRule::Unchanged => 0,
        LengthRule::ShrinkHull => hull - t,
        LengthRule::OddNonSquareFull => k - hull + 1,
        LengthRule::EvenAlternatingGrow => t - hull + 1,
        _ => t - hull,
    };
    LengthVerdict { s, rule }
}

/// Minimal number of coordinates to append for a t-dimensional hull.
pub fn shortest_length(code: &LinearCode, t: usize, kind: InnerKind) -> Result<LengthVerdict> {
    check_t(code, t)?;
    let hull = hull_dimension(code, kind)?;
    let rule = if t == hull {
        LengthRule::Unchanged
    } else if t < hull {
        LengthRule::ShrinkHull
    } else if kind == InnerKind::Hermitian {
        LengthRule::HermitianGrow
    } else {
        growth_rule(classify(code)?.tag, code.k(), t)
    };
    Ok(verdict(rule, code.k(), hull, t))
}

fn extend(code: &LinearCode, appended: Matrix, t: usize, kind: InnerKind) -> Result<EmbeddingResult> {
    let s = appended.cols();
    let g = code.generator().hstack(&appended)?;
    Ok(EmbeddingResult { code: LinearCode::new(g)?, appended, t, kind, s })
}

fn unchanged(code: &LinearCode, t: usize, kind: InnerKind) -> Result<EmbeddingResult> {
    extend(code, Matrix::zeros(code.field(), code.k(), 0), t, kind)
}

/// k×s coefficient block with `value` on the diagonal of rows `offset..offset+s`.
fn placed_identity(field: &Field, k: usize, s: usize, offset: usize, value: Elem) -> Matrix {
    let mut c = Matrix::zeros(field, k, s);
    for i in 0..s {
        c[(offset + i, i)] = value;
    }
    c
}

/// Columns landing on the canonical zero block: P·[O; I_s].
fn shrink_block(p: &Matrix, s: usize) -> Result<Matrix> {
    let k = p.rows();
    p.mul(&placed_identity(p.field(), k, s, k - s, Elem::ONE))
}

/// Embeds with whichever construction matches the field and inner product.
pub fn embed(code: &LinearCode, t: usize, kind: InnerKind) -> Result<EmbeddingResult> {
    kind.check(code.field())?;
    match kind {
        InnerKind::Hermitian => embed_hermitian(code, t),
        InnerKind::Euclidean if code.field().is_odd() => embed_euclidean_odd(code, t),
        InnerKind::Euclidean => embed_euclidean_even(code, t),
    }
}

/// Hermitian construction: GG† = P·diag(I_{k−ℓ}, O)·P†, then D = P·[O; I_s]
/// (t < ℓ) or D = P·[a·I_s; O] with a^(√q+1) = −1 (t > ℓ).
pub fn embed_hermitian(code: &LinearCode, t: usize) -> Result<EmbeddingResult> {
    let kind = InnerKind::Hermitian;
    kind.check(code.field())?;
    check_t(code, t)?;
    let f = code.field();
    let hull = hull_dimension(code, kind)?;
    if t == hull {
        return unchanged(code, t, kind);
    }
    let witness = diagonalize_hermitian(&code.gram(kind)?)?;
    let p = &witness.p;
    let d = if t < hull {
        shrink_block(p, hull - t)?
    } else {
        let a = f.neg_norm_one_element()?;
        p.mul(&placed_identity(f, code.k(), t - hull, 0, a))?
    };
    extend(code, d, t, kind)
}

/// Odd-q Euclidean construction driven by the witness of −GGᵀ.
pub fn embed_euclidean_odd(code: &LinearCode, t: usize) -> Result<EmbeddingResult> {
    let kind = InnerKind::Euclidean;
    let f = code.field();
    if !f.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    check_t(code, t)?;
    let k = code.k();
    let hull = hull_dimension(code, kind)?;
    if t == hull {
        return unchanged(code, t, kind);
    }
    let ty = classify(code)?;
    let p = &ty.witness.p;
    let d = if t < hull {
        shrink_block(p, hull - t)?
    } else {
        match ty.witness.form {
            CanonicalForm::OddNonSquare { rank, z } if t == k => {
                // D' = [I_{r−1} 0 0; 0 z1 z2] so that D'D'ᵀ = I_{r−1} ⊕ z.
                let (z1, z2) = f.sum_of_two_squares(z)?;
                let mut c = Matrix::zeros(f, k, rank + 1);
                for i in 0..rank - 1 {
                    c[(i, i)] = Elem::ONE;
                }
                c[(rank - 1, rank - 1)] = z1;
                c[(rank - 1, rank)] = z2;
                p.mul(&c)?
            }
            // s = t − ℓ ≤ r − 1 for Eons, so the identity avoids the z entry.
            _ => p.mul(&placed_identity(f, k, t - hull, 0, Elem::ONE))?,
        }
    };
    extend(code, d, t, kind)
}

/// Even-q Euclidean construction.
pub fn embed_euclidean_even(code: &LinearCode, t: usize) -> Result<EmbeddingResult> {
    let kind = InnerKind::Euclidean;
    let f = code.field();
    if f.is_odd() {
        return Err(Error::OddCharacteristic);
    }
    check_t(code, t)?;
    let k = code.k();
    let hull = hull_dimension(code, kind)?;
    if t == hull {
        return unchanged(code, t, kind);
    }
    let ty = classify(code)?;
    let p = &ty.witness.p;
    if t < hull {
        return extend(code, shrink_block(p, hull - t)?, t, kind);
    }
    let grow = t - hull;
    let c = match ty.tag {
        CodeTypeTag::Eena => placed_identity(f, k, grow, 0, Elem::ONE),
        _ if grow % 2 == 1 => {
            // D'·D'ᵀ = diag(J, …, J, 1), read off the canonical witness of that target.
            let mut target = Matrix::zeros(f, grow, grow);
            for b in 0..grow / 2 {
                target[(2 * b, 2 * b + 1)] = Elem::ONE;
                target[(2 * b + 1, 2 * b)] = Elem::ONE;
            }
            target[(grow - 1, grow - 1)] = Elem::ONE;
            let w = canonize_char2(&target)?;
            if w.form != (CanonicalForm::EvenIdentity { rank: grow }) {
                return Err(Error::Internal(format!("diag(J,…,J,1) canonized to {}", w.form)));
            }
            let mut c = Matrix::zeros(f, k, grow + 1);
            for i in 0..grow {
                for j in 0..grow {
                    c[(i, j)] = w.p[(i, j)];
                }
            }
            c[(grow, grow)] = Elem::ONE;
            c
        }
        _ => {
            let pr = build_pr(grow / 2, f)?;
            pr.vstack(&Matrix::zeros(f, k - grow, grow + 1))?
        }
    };
    extend(code, p.mul(&c)?, t, kind)
}

/// The 2r×(2r+1) matrix P_r with P_r·P_rᵀ = diag(J, …, J) and P_r·1 = O.
pub fn build_pr(r: usize, field: &Field) -> Result<Matrix> {
    if field.is_odd() {
        return Err(Error::OddCharacteristic);
    }
    if r == 0 {
        return Err(Error::DimensionMismatch("P_r needs r >= 1".into()));
    }
    let mut pr = Matrix::from_rows(field, &[[1, 1, 0], [1, 0, 1]])?;
    for step in 1..r {
        let width = 2 * step + 1;
        let mut bottom = Matrix::zeros(field, 2, width + 2);
        for c in 0..width {
            bottom[(0, c)] = Elem::ONE;
            bottom[(1, c)] = Elem::ONE;
        }
        bottom[(0, width + 1)] = Elem::ONE;
        bottom[(1, width)] = Elem::ONE;
        let top = pr.hstack(&Matrix::zeros(field, 2 * step, 2))?;
        pr = top.vstack(&bottom)?;
    }
    Ok(pr)
}

/// Always-valid, non-shortest embedding `[G, …, G (p copies), D]` of length
/// `n·p + k − t`, with D = [I_{k−t}; O].
pub fn existence_pad(code: &LinearCode, t: usize, kind: InnerKind) -> Result<EmbeddingResult> {
    kind.check(code.field())?;
    check_t(code, t)?;
    let f = code.field();
    let k = code.k();
    let mut appended = Matrix::zeros(f, k, 0);
    for _ in 1..f.p() {
        appended = appended.hstack(code.generator())?;
    }
    appended = appended.hstack(&placed_identity(f, k, k - t, 0, Elem::ONE))?;
    extend(code, appended, t, kind)
}

/// Appends `d` verbatim; rejects it unless the result has hull dimension t.
pub fn append_manual(code: &LinearCode, d: &Matrix, t: usize, kind: InnerKind) -> Result<EmbeddingResult> {
    kind.check(code.field())?;
    check_t(code, t)?;
    let result = extend(code, d.clone(), t, kind)?;
    let got = hull_dimension(&result.code, kind)?;
    if got != t {
        return Err(Error::AppendRejected { expected: t, got });
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check { name, passed, detail });
    }
}

/// Checks every embedding invariant, including the ranks of the appended
/// block in hull-first coordinates.
pub fn verify_embedding(original: &LinearCode, result: &EmbeddingResult) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let (n, k, t, kind) = (original.n(), original.k(), result.t, result.kind);
    let g = result.code.generator();

    let shape_ok = result.code.k() == k && result.code.n() == n + result.s && result.appended.cols() == result.s;
    report.push(
        "shape",
        shape_ok,
        format!("[{}, {}] from [{n}, {k}] with s={}", result.code.n(), result.code.k(), result.s),
    );
    if !shape_ok {
        return Ok(report);
    }
    let punctured = g.submatrix(0..k, 0..n) == *original.generator() && g.submatrix(0..k, n..n + result.s) == result.appended;
    report.push("puncture", punctured, "first n columns reproduce G".into());

    let by_rank = hull_dimension(&result.code, kind)?;
    report.push("hull_rank", by_rank == t, format!("k - rank(gram) = {by_rank}, target {t}"));
    let by_intersection = hull_basis(&result.code, kind)?.rows();
    report.push(
        "hull_intersection",
        by_intersection == t,
        format!("dim(C ∩ C^⊥) = {by_intersection}, target {t}"),
    );

    if t > k {
        report.push("shortest", false, format!("t={t} exceeds k={k}"));
        return Ok(report);
    }
    let expected = shortest_length(original, t, kind)?;
    report.push(
        "shortest",
        expected.s == result.s,
        format!("s={} vs shortest {} ({})", result.s, expected.s, expected.rule),
    );

    let hull = hull_dimension(original, kind)?;
    let u = hull_first_transform(original, kind)?;
    let d = u.mul(&result.appended)?;
    if t < hull {
        let r = d.submatrix(0..hull, 0..result.s).rank();
        report.push("block_rank", r == hull - t, format!("rank(D1) = {r}, expected {}", hull - t));
    } else if t > hull {
        let r = d.submatrix(hull..k, 0..result.s).rank();
        let grow = t - hull;
        let allowed: Vec<usize> = match expected.rule {
            LengthRule::EvenAlternatingGrow => vec![grow, grow + 1],
            LengthRule::OddNonSquareFull => vec![k - hull],
            _ => vec![grow],
        };
        report.push("block_rank", allowed.contains(&r), format!("rank(D2) = {r}, allowed {allowed:?}"));
    } else {
        report.push("block_rank", result.s == 0, "t = l, nothing appended".into());
    }
    Ok(report)
}
