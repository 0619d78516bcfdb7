mod common;

use parahom::linalg::{Matrix, PrimeField};
use proptest::prelude::*;

fn matrix_strategy() -> impl Strategy<Value = (u32, Vec<Vec<u32>>)> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 0usize..6, 0usize..6).prop_flat_map(|(p, r, c)| {
        (Just(p), prop::collection::vec(prop::collection::vec(0..p, c), r))
    })
}

fn build(p: u32, rows: &[Vec<u32>], cols: usize) -> Matrix {
    let f = PrimeField::new(p).unwrap();
    let mut m = Matrix::zeros(f, rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            m.set(i, j, v);
        }
    }
    m
}

proptest! {
    #[test]
    fn rank_matches_plain_elimination((p, rows) in matrix_strategy()) {
        let cols = rows.first().map_or(0, Vec::len);
        let m = build(p, &rows, cols);
        let plain: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&v| u64::from(v)).collect()).collect();
        prop_assert_eq!(m.rank(), common::rank_mod_p(&plain, u64::from(p)));
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_is_killed_and_complementary((p, rows) in matrix_strategy()) {
        let cols = rows.first().map_or(0, Vec::len);
        let m = build(p, &rows, cols);
        let k = m.kernel_basis();
        prop_assert_eq!(k.cols() + m.rank(), cols);
        prop_assert_eq!(k.rank(), k.cols());
        prop_assert!(m.mul(&k).unwrap().is_zero());
    }

    #[test]
    fn solutions_solve((p, rows) in matrix_strategy(), seed in any::<u64>()) {
        use rand::Rng;
        let cols = rows.first().map_or(0, Vec::len);
        let m = build(p, &rows, cols);
        let mut rng = common::rng(seed);
        let x: Vec<u32> = (0..cols).map(|_| rng.gen_range(0..p)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve_in_span(&b).expect("b is in the column space");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }
}

#[test]
fn field_arithmetic() {
    let f = PrimeField::new(7).unwrap();
    for a in 1..7 {
        assert_eq!(f.mul(a, f.inv(a)), 1);
        assert_eq!(f.add(a, f.neg(a)), 0);
    }
    assert!(PrimeField::new(6).is_err());
    assert!(PrimeField::new(1).is_err());
}

#[test]
fn inverse_through_solve() {
    let f = PrimeField::new(3).unwrap();
    let m = Matrix::from_rows(f, &[[1, 2], [0, 1]]).unwrap();
    let inv = m.solve_columns(&Matrix::identity(f, 2)).unwrap();
    assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(f, 2));
    let singular = Matrix::from_rows(f, &[[1, 2], [2, 1]]).unwrap();
    assert!(singular.solve_columns(&Matrix::identity(f, 2)).is_none());
}
