//! Linear codes: hull dimension, hull basis, minimum distance and the four
//! Euclidean code types.

use std::fmt;

use crate::congruence::{canonize_char2, diagonalize_symmetric_odd, CanonicalForm, CongruenceWitness};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::matrix::{InnerKind, Matrix};

/// Default enumeration bound for [`minimum_distance`].
pub const DEFAULT_MAX_ENUM: u64 = 1 << 24;

/// An [n, k] linear code given by a full-row-rank k×n generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    g: Matrix,
}

impl LinearCode {
    pub fn new(g: Matrix) -> Result<LinearCode> {
        let rank = g.rank();
        if rank != g.rows() || g.rows() == 0 {
            return Err(Error::RankDeficientGenerator { rank, rows: g.rows() });
        }
        Ok(LinearCode { g })
    }

    pub fn generator(&self) -> &Matrix {
        &self.g
    }

    pub fn field(&self) -> &Field {
        self.g.field()
    }

    pub fn n(&self) -> usize {
        self.g.cols()
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn gram(&self, kind: InnerKind) -> Result<Matrix> {
        self.g.gram(kind)
    }
}

/// `k − rank(G·G*)`.
pub fn hull_dimension(code: &LinearCode, kind: InnerKind) -> Result<usize> {
    Ok(code.k() - code.gram(kind)?.rank())
}

/// Basis of the dual code as rows.
pub fn dual_basis(code: &LinearCode, kind: InnerKind) -> Result<Matrix> {
    kind.check(code.field())?;
    // Euclidean: G·vᵀ = 0. Hermitian: G·conj(v)ᵀ = 0, so v = conj(w) for w in ker G.
    let kernel = code.generator().right_kernel();
    match kind {
        InnerKind::Euclidean => Ok(kernel),
        InnerKind::Hermitian => kernel.conj(),
    }
}

/// Basis of the intersection of two row spaces (Zassenhaus).
pub fn intersect_row_spaces(u: &Matrix, w: &Matrix) -> Result<Matrix> {
    let f = u.field();
    let top = u.hstack(u)?;
    let bottom = w.hstack(&Matrix::zeros(f, w.rows(), w.cols()))?;
    let (r, pivots) = top.vstack(&bottom)?.rref();
    let n = u.cols();
    let rows: Vec<usize> = pivots
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c >= n)
        .map(|(i, _)| i)
        .collect();
    Ok(r.select_rows(&rows).submatrix(0..rows.len(), n..2 * n))
}

/// Basis of Hull(C) = C ∩ C^⊥, computed by explicitly intersecting the code
/// with its dual. Independent of the Gram-rank route of [`hull_dimension`].
pub fn hull_basis(code: &LinearCode, kind: InnerKind) -> Result<Matrix> {
    let dual = dual_basis(code, kind)?;
    intersect_row_spaces(code.generator(), &dual)
}

/// Invertible U such that the first ℓ rows of U·G generate the hull.
pub fn hull_first_transform(code: &LinearCode, kind: InnerKind) -> Result<Matrix> {
    let f = code.field();
    let k = code.k();
    let mut u = code.gram(kind)?.left_kernel();
    for i in 0..k {
        let mut e = Matrix::zeros(f, 1, k);
        e[(0, i)] = Elem::ONE;
        let candidate = u.vstack(&e)?;
        if candidate.rank() == candidate.rows() {
            u = candidate;
        }
    }
    debug_assert_eq!(u.rows(), k);
    Ok(u)
}

/// A generator of the same code whose first ℓ rows generate Hull(C).
pub fn hull_first_generator(code: &LinearCode, kind: InnerKind) -> Result<Matrix> {
    hull_first_transform(code, kind)?.mul(code.generator())
}

/// Number of nonzero codewords, `q^k − 1`, as u128.
pub fn codeword_count(code: &LinearCode) -> u128 {
    (code.field().q() as u128).pow(code.k() as u32) - 1
}

/// Exact minimum distance by exhaustive enumeration.
///
/// Only codewords whose first nonzero message coordinate is 1 are visited;
/// weight is invariant under scaling, so the minimum is the same as over all
/// `q^k − 1` nonzero codewords.
pub fn minimum_distance(code: &LinearCode, max_words: u64) -> Result<usize> {
    let words = codeword_count(code);
    if words > max_words as u128 {
        return Err(Error::TooLargeToEnumerate { words, bound: max_words });
    }
    let f = code.field();
    let g = code.generator();
    let (k, n) = (code.k(), code.n());
    let elems: Vec<Elem> = f.elements().collect();
    // scaled[i][c] = c · row_i
    let scaled: Vec<Vec<Vec<Elem>>> = (0..k)
        .map(|i| elems.iter().map(|&c| g.row(i).iter().map(|&x| f.mul(c, x)).collect()).collect())
        .collect();

    let mut best = n;
    let mut word = vec![Elem::ZERO; n];
    for lead in 0..k {
        // message = (0, …, 0, 1, free…) with the 1 at `lead`
        let free = k - lead - 1;
        let mut counter = vec![0usize; free];
        loop {
            word.copy_from_slice(&scaled[lead][1]);
            for (off, &c) in counter.iter().enumerate() {
                if c != 0 {
                    for (w, &x) in word.iter_mut().zip(&scaled[lead + 1 + off][c]) {
                        *w = f.add(*w, x);
                    }
                }
            }
            let wt = word.iter().filter(|x| !x.is_zero()).count();
            best = best.min(wt);
            if best == 1 {
                return Ok(1);
            }
            // odometer
            let mut pos = 0;
            while pos < free {
                counter[pos] += 1;
                if counter[pos] < elems.len() {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
            if pos == free {
                break;
            }
        }
    }
    Ok(best)
}

/// The four Euclidean types of a code, by the congruence class of its Gram matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeTypeTag {
    /// odd q, −GGᵀ ≃ I_r ⊕ O
    Eos,
    /// odd q, −GGᵀ ≃ I_{r−1} ⊕ z ⊕ O
    Eons,
    /// q even, GGᵀ alternating
    Eea,
    /// q even, GGᵀ non-alternating
    Eena,
}

impl fmt::Display for CodeTypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeTypeTag::Eos => "Eos",
            CodeTypeTag::Eons => "Eons",
            CodeTypeTag::Eea => "Eea",
            CodeTypeTag::Eena => "Eena",
        })
    }
}

/// A type tag and the witness that justified it.
///
/// For odd q the witness decomposes −GGᵀ; for even q it decomposes GGᵀ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeType {
    pub tag: CodeTypeTag,
    pub witness: CongruenceWitness,
}

pub fn classify(code: &LinearCode) -> Result<CodeType> {
    let gram = code.gram(InnerKind::Euclidean)?;
    if code.field().is_odd() {
        let witness = diagonalize_symmetric_odd(&gram.neg())?;
        let tag = match witness.form {
            CanonicalForm::OddNonSquare { .. } => CodeTypeTag::Eons,
            _ => CodeTypeTag::Eos,
        };
        Ok(CodeType { tag, witness })
    } else {
        let tag = if gram.diagonal().iter().all(|d| d.is_zero()) {
            CodeTypeTag::Eea
        } else {
            CodeTypeTag::Eena
        };
        let witness = canonize_char2(&gram)?;
        Ok(CodeType { tag, witness })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(field: &Field, rows: &[&[u32]]) -> LinearCode {
        LinearCode::new(Matrix::from_rows(field, rows).unwrap()).unwrap()
    }

    #[test]
    fn rank_deficient_generator_is_rejected() {
        let f = Field::new(2, 1).unwrap();
        let g = Matrix::from_rows(&f, &[[1, 1], [1, 1]]).unwrap();
        assert_eq!(LinearCode::new(g), Err(Error::RankDeficientGenerator { rank: 1, rows: 2 }));
    }

    #[test]
    fn self_orthogonal_and_lcd_hulls() {
        let f = Field::new(2, 1).unwrap();
        let so = code(&f, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(hull_dimension(&so, InnerKind::Euclidean).unwrap(), 2);
        let hb = hull_basis(&so, InnerKind::Euclidean).unwrap();
        assert_eq!(hb.rows(), 2);
        assert_eq!(hb.rank(), 2);

        let lcd = code(&f, &[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(hull_dimension(&lcd, InnerKind::Euclidean).unwrap(), 0);
        assert_eq!(hull_basis(&lcd, InnerKind::Euclidean).unwrap().rows(), 0);
    }

    #[test]
    fn hull_first_generator_splits_gram() {
        let f = Field::new(3, 1).unwrap();
        let c = code(&f, &[&[1, 0, 1, 1], &[0, 1, 1, 2], &[1, 1, 0, 0]]);
        let l = hull_dimension(&c, InnerKind::Euclidean).unwrap();
        let g2 = hull_first_generator(&c, InnerKind::Euclidean).unwrap();
        assert_eq!(g2.rank(), 3);
        let gram = g2.gram(InnerKind::Euclidean).unwrap();
        assert!(gram.submatrix(0..l, 0..3).is_zero());
        assert_eq!(gram.submatrix(l..3, l..3).rank(), 3 - l);
    }

    #[test]
    fn distance_of_trivial_codes() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(minimum_distance(&code(&f, &[&[1]]), DEFAULT_MAX_ENUM).unwrap(), 1);
        let rep = code(&f, &[&[1, 1, 1, 1, 1]]);
        assert_eq!(minimum_distance(&rep, DEFAULT_MAX_ENUM).unwrap(), 5);
        let f5 = Field::new(5, 1).unwrap();
        let c = code(&f5, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        assert_eq!(minimum_distance(&c, DEFAULT_MAX_ENUM).unwrap(), 3);
    }

    #[test]
    fn distance_bound_is_enforced() {
        let f = Field::new(2, 1).unwrap();
        let c = code(&f, &[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(minimum_distance(&c, 2), Err(Error::TooLargeToEnumerate { words: 3, bound: 2 }));
        assert_eq!(minimum_distance(&c, 3).unwrap(), 2);
    }

    #[test]
    fn hermitian_needs_square_order() {
        let f = Field::new(5, 1).unwrap();
        let c = code(&f, &[&[1, 2]]);
        assert_eq!(hull_dimension(&c, InnerKind::Hermitian), Err(Error::NotAHermitianField));
        assert_eq!(hull_basis(&c, InnerKind::Hermitian), Err(Error::NotAHermitianField));
    }
}
