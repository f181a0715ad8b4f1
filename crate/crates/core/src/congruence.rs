//! Congruence canonical forms of symmetric, Hermitian and alternating matrices.
//!
//! Every reduction tracks an invertible `E` with `E·A·E* = Canon`; the returned
//! witness holds `P = E⁻¹`, so that `A = P·Canon·P*`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{InnerKind, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalForm {
    /// `I_r ⊕ O` under Hermitian congruence.
    HermitianDiag { rank: usize },
    /// `I_r ⊕ O`, odd q.
    OddSquare { rank: usize },
    /// `I_{r-1} ⊕ z ⊕ O`, odd q, z the canonical nonsquare.
    OddNonSquare { rank: usize, z: Elem },
    /// `J ⊕ … ⊕ J ⊕ O` with J = [[0,1],[1,0]], q even.
    EvenAlternating { rank: usize },
    /// `I_r ⊕ O`, q even, non-alternating.
    EvenIdentity { rank: usize },
}

impl CanonicalForm {
    pub fn rank(&self) -> usize {
        match *self {
            CanonicalForm::HermitianDiag { rank }
            | CanonicalForm::OddSquare { rank }
            | CanonicalForm::OddNonSquare { rank, .. }
            | CanonicalForm::EvenAlternating { rank }
            | CanonicalForm::EvenIdentity { rank } => rank,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CanonicalForm::HermitianDiag { .. } => "HermitianDiag",
            CanonicalForm::OddSquare { .. } => "OddSquare",
            CanonicalForm::OddNonSquare { .. } => "OddNonSquare",
            CanonicalForm::EvenAlternating { .. } => "EvenAlternating",
            CanonicalForm::EvenIdentity { .. } => "EvenIdentity",
        }
    }

    /// The n×n block-diagonal canonical matrix.
    pub fn materialize(&self, field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        match *self {
            CanonicalForm::HermitianDiag { rank }
            | CanonicalForm::OddSquare { rank }
            | CanonicalForm::EvenIdentity { rank } => {
                for i in 0..rank {
                    m[(i, i)] = Elem::ONE;
                }
            }
            CanonicalForm::OddNonSquare { rank, z } => {
                for i in 0..rank {
                    m[(i, i)] = Elem::ONE;
                }
                m[(rank - 1, rank - 1)] = z;
            }
            CanonicalForm::EvenAlternating { rank } => {
                for b in 0..rank / 2 {
                    m[(2 * b, 2 * b + 1)] = Elem::ONE;
                    m[(2 * b + 1, 2 * b)] = Elem::ONE;
                }
            }
        }
        m
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::OddNonSquare { rank, z } => write!(f, "OddNonSquare r={rank} z={z}"),
            other => write!(f, "{} r={}", other.tag(), other.rank()),
        }
    }
}

/// `A = p · form · p*` with `p` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceWitness {
    pub p: Matrix,
    pub form: CanonicalForm,
    pub kind: InnerKind,
}

impl CongruenceWitness {
    pub fn canonical_matrix(&self) -> Matrix {
        self.form.materialize(self.p.field(), self.p.rows())
    }

    /// `p · canon · p*`.
    pub fn reconstruct(&self) -> Result<Matrix> {
        self.p.mul(&self.canonical_matrix())?.mul(&self.p.star(self.kind)?)
    }

    pub fn verify(&self, a: &Matrix) -> bool {
        self.p.rank() == self.p.rows() && self.reconstruct().is_ok_and(|r| r == *a)
    }
}

/// Working state: `m = e · a · e*`.
struct Reducer {
    field: Field,
    kind: InnerKind,
    a: Matrix,
    m: Matrix,
    e: Matrix,
}

impl Reducer {
    fn new(a: &Matrix, kind: InnerKind) -> Reducer {
        let field = a.field().clone();
        Reducer {
            e: Matrix::identity(&field, a.rows()),
            m: a.clone(),
            a: a.clone(),
            field,
            kind,
        }
    }

    fn n(&self) -> usize {
        self.m.rows()
    }

    fn star(&self, c: Elem) -> Elem {
        match self.kind {
            InnerKind::Euclidean => c,
            InnerKind::Hermitian => self.field.conj_or_id(c),
        }
    }

    fn swap(&mut self, i: usize, j: usize) {
        self.m.swap_rows(i, j);
        self.m.swap_cols(i, j);
        self.e.swap_rows(i, j);
    }

    fn scale(&mut self, i: usize, c: Elem) {
        self.m.scale_row(i, c);
        self.m.scale_col(i, self.star(c));
        self.e.scale_row(i, c);
    }

    /// basis[dst] += c · basis[src]
    fn add(&mut self, dst: usize, src: usize, c: Elem) {
        self.m.add_row_multiple(dst, src, c);
        self.m.add_col_multiple(dst, src, self.star(c));
        self.e.add_row_multiple(dst, src, c);
    }

    /// Replaces basis vectors `idx` by `t · (those vectors)`.
    fn transform(&mut self, idx: &[usize], t: &Matrix) -> Result<()> {
        let mut full = Matrix::identity(&self.field, self.n());
        for (a, &i) in idx.iter().enumerate() {
            full[(i, i)] = Elem::ZERO;
            for (b, &j) in idx.iter().enumerate() {
                full[(i, j)] = t[(a, b)];
            }
        }
        self.m = full.mul(&self.m)?.mul(&full.star(self.kind)?)?;
        self.e = full.mul(&self.e)?;
        Ok(())
    }

    fn finish(self, form: CanonicalForm) -> Result<CongruenceWitness> {
        let canon = form.materialize(&self.field, self.n());
        if self.m != canon {
            return Err(Error::Internal(format!("reduction ended at {:?}, expected {form}", self.m)));
        }
        let witness = CongruenceWitness { p: self.e.inverse()?, form, kind: self.kind };
        if witness.reconstruct()? != self.a {
            return Err(Error::Internal("congruence witness does not reproduce its input".into()));
        }
        Ok(witness)
    }

    /// Diagonalizes a symmetric (odd q) or Hermitian matrix; nonzero pivots end
    /// up in positions 0..r. Returns r.
    fn diagonalize(&mut self) -> Result<usize> {
        let n = self.n();
        let f = self.field.clone();
        for k in 0..n {
            if let Some(i) = (k..n).find(|&i| !self.m[(i, i)].is_zero()) {
                self.swap(k, i);
            } else if let Some((i, j)) = self.off_diagonal_nonzero(k) {
                // With zero diagonal, adding c·e_j to e_i makes the new diagonal
                // entry c·m[j][i] + c*·m[i][j].
                let (mji, mij) = (self.m[(j, i)], self.m[(i, j)]);
                let c = f
                    .nonzero_elements()
                    .find(|&c| !f.add(f.mul(c, mji), f.mul(self.star(c), mij)).is_zero())
                    .ok_or_else(|| Error::Internal("no scalar creates a nonzero diagonal".into()))?;
                self.add(i, j, c);
                self.swap(k, i);
            } else {
                return Ok(k);
            }
            let d = self.m[(k, k)];
            for r in k + 1..n {
                let x = self.m[(r, k)];
                if !x.is_zero() {
                    self.add(r, k, f.neg(f.div(x, d)?));
                }
            }
        }
        Ok(n)
    }

    fn off_diagonal_nonzero(&self, from: usize) -> Option<(usize, usize)> {
        let n = self.n();
        (from..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !self.m[(i, j)].is_zero())
    }

    /// Symplectic reduction of an alternating trailing block starting at `start`.
    /// Leaves J-blocks at (start, start+1), (start+2, start+3), … Returns the rank.
    fn reduce_alternating(&mut self, start: usize) -> Result<usize> {
        let n = self.n();
        let f = self.field.clone();
        let mut k = start;
        while let Some((i, j)) = self.off_diagonal_nonzero(k) {
            self.swap(k, i);
            let j = if j == k { i } else { j };
            self.swap(k + 1, j);
            let b = self.m[(k, k + 1)];
            self.scale(k + 1, f.inv(b)?);
            for r in k + 2..n {
                let alpha = f.neg(self.m[(r, k + 1)]);
                let beta = f.neg(self.m[(r, k)]);
                self.add(r, k, alpha);
                self.add(r, k + 1, beta);
            }
            k += 2;
        }
        Ok(k - start)
    }
}

fn check_square(a: &Matrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} matrix is not square", a.rows(), a.cols())));
    }
    Ok(())
}

/// `A ≃ I_r ⊕ O` under Hermitian congruence.
pub fn diagonalize_hermitian(a: &Matrix) -> Result<CongruenceWitness> {
    check_square(a)?;
    if !a.field().is_hermitian() {
        return Err(Error::NotAHermitianField);
    }
    if !a.is_hermitian_symmetric() {
        return Err(Error::NotHermitianSymmetric);
    }
    let f = a.field().clone();
    let mut red = Reducer::new(a, InnerKind::Hermitian);
    let rank = red.diagonalize()?;
    for i in 0..rank {
        let c = f.norm_solve(red.m[(i, i)])?;
        red.scale(i, f.inv(c)?);
    }
    red.finish(CanonicalForm::HermitianDiag { rank })
}

/// Symmetric A over odd q: `I_r ⊕ O` or `I_{r-1} ⊕ z ⊕ O`.
pub fn diagonalize_symmetric_odd(a: &Matrix) -> Result<CongruenceWitness> {
    check_square(a)?;
    let f = a.field().clone();
    if !f.is_odd() {
        return Err(Error::EvenCharacteristic);
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let z = f.canonical_nonsquare()?;
    let mut red = Reducer::new(a, InnerKind::Euclidean);
    let rank = red.diagonalize()?;

    let mut nonsquares = Vec::new();
    for i in 0..rank {
        let d = red.m[(i, i)];
        if f.is_square(d)? {
            red.scale(i, f.inv(f.sqrt(d)?)?);
        } else {
            nonsquares.push(i);
        }
    }
    for pair in nonsquares.chunks_exact(2) {
        let (i, j) = (pair[0], pair[1]);
        let (a, b) = (red.m[(i, i)], red.m[(j, j)]);
        // a·x² + b·y² = 1 always has a solution; scan x.
        let (x, y) = f
            .elements()
            .find_map(|x| {
                let rest = f.div(f.sub(Elem::ONE, f.mul(a, f.mul(x, x))), b).ok()?;
                f.sqrt(rest).ok().map(|y| (x, y))
            })
            .ok_or_else(|| Error::Internal("a·x² + b·y² = 1 has no solution".into()))?;
        // Second vector (-b·y, a·x) is orthogonal to (x, y) with norm a·b, a square.
        let s = f.inv(f.sqrt(f.mul(a, b))?)?;
        let t = Matrix::from_elems(
            &f,
            2,
            2,
            vec![x, y, f.mul(f.neg(f.mul(b, y)), s), f.mul(f.mul(a, x), s)],
        )?;
        red.transform(&[i, j], &t)?;
    }
    let form = if nonsquares.len() % 2 == 1 {
        let i = *nonsquares.last().expect("odd count");
        let d = red.m[(i, i)];
        red.scale(i, f.sqrt(f.div(z, d)?)?);
        red.swap(i, rank - 1);
        CanonicalForm::OddNonSquare { rank, z }
    } else {
        CanonicalForm::OddSquare { rank }
    };
    red.finish(form)
}

/// Symmetric A over GF(2^m): alternating → J-blocks; otherwise `I_r ⊕ O`.
pub fn canonize_char2(a: &Matrix) -> Result<CongruenceWitness> {
    check_square(a)?;
    let f = a.field().clone();
    if f.is_odd() {
        return Err(Error::OddCharacteristic);
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut red = Reducer::new(a, InnerKind::Euclidean);
    let n = red.n();
    if a.diagonal().iter().all(|d| d.is_zero()) {
        let rank = red.reduce_alternating(0)?;
        return red.finish(CanonicalForm::EvenAlternating { rank });
    }

    // Pull nonzero-diagonal pivots to the front: A ≃ diag(I_j, J, …, J, O).
    let mut j = 0;
    while let Some(i) = (j..n).find(|&i| !red.m[(i, i)].is_zero()) {
        red.swap(j, i);
        let d = red.m[(j, j)];
        red.scale(j, f.inv(f.sqrt(d)?)?);
        for r in j + 1..n {
            let x = red.m[(r, j)];
            if !x.is_zero() {
                red.add(r, j, f.neg(x));
            }
        }
        j += 1;
    }
    let alt_rank = red.reduce_alternating(j)?;

    // P·(1 ⊕ J)·Pᵀ = I₃
    let absorb = Matrix::from_rows(&f, &[[1, 1, 1], [1, 1, 0], [1, 0, 1]])?;
    for b in 0..alt_rank / 2 {
        let base = j - 1 + 2 * b;
        red.transform(&[base, base + 1, base + 2], &absorb)?;
    }
    red.finish(CanonicalForm::EvenIdentity { rank: j + alt_rank })
}

/// Dispatches on inner-product kind and characteristic.
pub fn canonize(a: &Matrix, kind: InnerKind) -> Result<CongruenceWitness> {
    match kind {
        InnerKind::Hermitian => diagonalize_hermitian(a),
        InnerKind::Euclidean if a.field().is_odd() => diagonalize_symmetric_odd(a),
        InnerKind::Euclidean => canonize_char2(a),
    }
}
