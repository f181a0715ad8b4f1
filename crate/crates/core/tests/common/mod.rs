#![allow(dead_code)]

use hullkit::{Field, LinearCode, Matrix};
use rand::Rng;

pub fn field(q: u32) -> Field {
    match q {
        2 | 3 | 5 | 7 => Field::new(q, 1).unwrap(),
        4 => Field::new(2, 2).unwrap(),
        8 => Field::new(2, 3).unwrap(),
        9 => Field::new(3, 2).unwrap(),
        16 => Field::new(2, 4).unwrap(),
        25 => Field::new(5, 2).unwrap(),
        _ => panic!("no test field of order {q}"),
    }
}

pub fn random_matrix(f: &Field, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
    let data = (0..rows * cols).map(|_| f.elem(rng.gen_range(0..f.q())).unwrap()).collect();
    Matrix::from_elems(f, rows, cols, data).unwrap()
}

pub fn random_invertible(f: &Field, n: usize, rng: &mut impl Rng) -> Matrix {
    loop {
        let m = random_matrix(f, n, n, rng);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn random_code(f: &Field, k: usize, n: usize, rng: &mut impl Rng) -> LinearCode {
    loop {
        if let Ok(c) = LinearCode::new(random_matrix(f, k, n, rng)) {
            return c;
        }
    }
}
