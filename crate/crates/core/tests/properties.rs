mod common;

use common::{field, random_code, random_invertible, random_matrix};
use hullkit::code::intersect_row_spaces;
use hullkit::{
    build_pr, canonize, classify, embed, existence_pad, hull_basis, hull_dimension, shortest_length,
    verify_embedding, Elem, InnerKind, Matrix,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ODD: [u32; 5] = [3, 5, 7, 9, 25];
const ALL: [u32; 9] = [2, 3, 4, 5, 7, 8, 9, 16, 25];
const HERMITIAN: [u32; 4] = [4, 9, 16, 25];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_and_fermat(qi in 0..ALL.len(), a in 1u32..1000) {
        let f = field(ALL[qi]);
        let a = f.elem(a % (f.q() - 1) + 1).unwrap();
        prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), Elem::ONE);
        prop_assert_eq!(f.pow(a, (f.q() - 1) as u64), Elem::ONE);
    }

    #[test]
    fn distributive(qi in 0..ALL.len(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let f = field(ALL[qi]);
        let [a, b, c] = [a, b, c].map(|v| f.elem(v % f.q()).unwrap());
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
    }

    #[test]
    fn conj_is_involutive_automorphism(qi in 0..HERMITIAN.len(), a in 0u32..1000, b in 0u32..1000) {
        let f = field(HERMITIAN[qi]);
        let (a, b) = (f.elem(a % f.q()).unwrap(), f.elem(b % f.q()).unwrap());
        let c = |x| f.conj(x).unwrap();
        prop_assert_eq!(c(f.mul(a, b)), f.mul(c(a), c(b)));
        prop_assert_eq!(c(f.add(a, b)), f.add(c(a), c(b)));
        prop_assert_eq!(c(c(a)), a);
    }

    #[test]
    fn squares_are_multiplicative(qi in 0..ODD.len(), a in 1u32..1000, b in 1u32..1000) {
        let f = field(ODD[qi]);
        let a = f.elem(a % (f.q() - 1) + 1).unwrap();
        let b = f.elem(b % (f.q() - 1) + 1).unwrap();
        let sq = |x| f.is_square(x).unwrap();
        prop_assert_eq!(sq(f.mul(a, b)), sq(a) == sq(b));
    }

    #[test]
    fn sum_of_two_squares_recombines(qi in 0..ODD.len(), z in 1u32..1000) {
        let f = field(ODD[qi]);
        let z = f.elem(z % (f.q() - 1) + 1).unwrap();
        let (z1, z2) = f.sum_of_two_squares(z).unwrap();
        prop_assert_eq!(f.add(f.mul(z1, z1), f.mul(z2, z2)), z);
    }

    #[test]
    fn star_reverses_products(qi in 0..HERMITIAN.len(), seed in any::<u64>(), r in 1usize..5, m in 1usize..5, c in 1usize..5) {
        let f = field(HERMITIAN[qi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&f, r, m, &mut rng);
        let b = random_matrix(&f, m, c, &mut rng);
        for kind in [InnerKind::Euclidean, InnerKind::Hermitian] {
            let lhs = a.mul(&b).unwrap().star(kind).unwrap();
            let rhs = b.star(kind).unwrap().mul(&a.star(kind).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(a.gram(kind).unwrap().rank() <= a.rank());
        }
    }

    #[test]
    fn rref_is_idempotent(qi in 0..ALL.len(), seed in any::<u64>(), r in 1usize..6, c in 1usize..7) {
        let f = field(ALL[qi]);
        let m = random_matrix(&f, r, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let (once, pivots) = m.rref();
        prop_assert_eq!(pivots.len(), m.rank());
        prop_assert_eq!(once.rref().0, once);
    }

    #[test]
    fn kernels_annihilate(qi in 0..ALL.len(), seed in any::<u64>(), r in 1usize..6, c in 1usize..7) {
        let f = field(ALL[qi]);
        let m = random_matrix(&f, r, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let k = m.right_kernel();
        prop_assert_eq!(k.rows(), c - m.rank());
        prop_assert!(m.mul(&k.transpose()).unwrap().is_zero());
        let l = m.left_kernel();
        prop_assert_eq!(l.rows(), r - m.rank());
        prop_assert!(l.mul(&m).unwrap().is_zero());
    }

    #[test]
    fn hull_basis_rows_lie_in_code_and_dual(qi in 0..ALL.len(), seed in any::<u64>(), k in 1usize..5, extra in 0usize..4) {
        let f = field(ALL[qi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&f, k, k + extra, &mut rng);
        let kinds: &[InnerKind] = if f.is_hermitian() {
            &[InnerKind::Euclidean, InnerKind::Hermitian]
        } else {
            &[InnerKind::Euclidean]
        };
        for &kind in kinds {
            let h = hull_basis(&code, kind).unwrap();
            prop_assert_eq!(h.rows(), hull_dimension(&code, kind).unwrap());
            prop_assert!(h.mul(&code.generator().star(kind).unwrap()).unwrap().is_zero());
            prop_assert_eq!(intersect_row_spaces(&h, code.generator()).unwrap().rows(), h.rows());
        }
    }

    #[test]
    fn every_construction_verifies(qi in 0..ALL.len(), seed in any::<u64>(), k in 1usize..5, extra in 0usize..4) {
        let f = field(ALL[qi]);
        let code = random_code(&f, k, k + extra, &mut ChaCha8Rng::seed_from_u64(seed));
        let kinds: &[InnerKind] = if f.is_hermitian() {
            &[InnerKind::Euclidean, InnerKind::Hermitian]
        } else {
            &[InnerKind::Euclidean]
        };
        for &kind in kinds {
            let hull = hull_dimension(&code, kind).unwrap();
            for t in 0..=k {
                let result = embed(&code, t, kind).unwrap();
                let report = verify_embedding(&code, &result).unwrap();
                prop_assert!(report.passed(), "{:?}", report);
                prop_assert!(result.s >= t.abs_diff(hull));
                prop_assert_eq!(shortest_length(&code, t, kind).unwrap().s, result.s);

                let pad = existence_pad(&code, t, kind).unwrap();
                prop_assert_eq!(pad.code.n(), code.n() * f.p() as usize + k - t);
                prop_assert_eq!(hull_basis(&pad.code, kind).unwrap().rows(), t);
            }
        }
    }

    #[test]
    fn classify_ignores_generator_choice(qi in 0..ALL.len(), seed in any::<u64>(), k in 1usize..5, extra in 0usize..4) {
        let f = field(ALL[qi]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code = random_code(&f, k, k + extra, &mut rng);
        let u = random_invertible(&f, k, &mut rng);
        let other = hullkit::LinearCode::new(u.mul(code.generator()).unwrap()).unwrap();
        prop_assert_eq!(classify(&code).unwrap().tag, classify(&other).unwrap().tag);
    }

    #[test]
    fn witnesses_reconstruct(qi in 0..ALL.len(), seed in any::<u64>(), n in 1usize..7) {
        let f = field(ALL[qi]);
        let g = random_matrix(&f, n, n + 1, &mut ChaCha8Rng::seed_from_u64(seed));
        let kinds: &[InnerKind] = if f.is_hermitian() {
            &[InnerKind::Euclidean, InnerKind::Hermitian]
        } else {
            &[InnerKind::Euclidean]
        };
        for &kind in kinds {
            let a = g.gram(kind).unwrap();
            let w = canonize(&a, kind).unwrap();
            prop_assert!(w.verify(&a));
            prop_assert_eq!(w.form.rank(), a.rank());
        }
    }
}

#[test]
fn pr_identities_up_to_eight() {
    for q in [2, 4] {
        let f = field(q);
        for r in 1..=8 {
            let pr = build_pr(r, &f).unwrap();
            assert_eq!((pr.rows(), pr.cols()), (2 * r, 2 * r + 1));
            let mut j = Matrix::zeros(&f, 2 * r, 2 * r);
            for b in 0..r {
                j[(2 * b, 2 * b + 1)] = Elem::ONE;
                j[(2 * b + 1, 2 * b)] = Elem::ONE;
            }
            assert_eq!(pr.gram(InnerKind::Euclidean).unwrap(), j);
            let ones = Matrix::from_elems(&f, 2 * r + 1, 1, vec![Elem::ONE; 2 * r + 1]).unwrap();
            assert!(pr.mul(&ones).unwrap().is_zero());
        }
    }
}
