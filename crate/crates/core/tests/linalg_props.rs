use morita_core::{quotient, Field, Fp, Matrix, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A random `rows x cols` matrix of rank at most `k`.
fn low_rank<F: Field>(f: &F, rows: usize, cols: usize, k: usize, seed: u64) -> Matrix<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = Matrix::random(f, rows, k, &mut rng);
    let b = Matrix::random(f, k, cols, &mut rng);
    a.mul(&b)
}

fn invertible<F: Field>(f: &F, n: usize, seed: u64) -> Matrix<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = Matrix::random(f, n, n, &mut rng);
        if m.rank() == n {
            return m;
        }
    }
}

fn rank_nullity<F: Field>(m: &Matrix<F>) {
    let k = m.kernel_basis();
    assert_eq!(m.rank() + k.cols(), m.cols());
    assert!(m.mul(&k).is_zero());
}

fn quotient_law<F: Field>(f: &F, sub: &Matrix<F>) {
    let n = sub.rows();
    let (proj, sec) = quotient(f, n, sub);
    assert!(proj.mul(sub).is_zero());
    assert!(proj.mul(&sec).is_identity());
    assert_eq!(proj.rows(), n - sub.rank());
}

fn field(p: u64) -> Fp {
    Fp::new(p).unwrap()
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_cols(p in prop::sample::select(vec![2u64, 3, 5, 7]), r in 0usize..7, c in 0usize..7, k in 0usize..5, seed: u64) {
        let f = field(p);
        rank_nullity(&low_rank(&f, r, c, k, seed));
        rank_nullity(&low_rank(&Q, r, c, k, seed));
    }

    #[test]
    fn quotient_projection_kills_and_splits(p in prop::sample::select(vec![2u64, 3, 5]), n in 0usize..7, k in 0usize..7, seed: u64) {
        let f = field(p);
        quotient_law(&f, &low_rank(&f, n, k, k.min(n), seed));
        quotient_law(&Q, &low_rank(&Q, n, k, k.min(n), seed));
    }

    #[test]
    fn echelon_form_is_canonical(p in prop::sample::select(vec![2u64, 3, 5]), r in 1usize..6, c in 0usize..6, k in 0usize..4, seed: u64) {
        let f = field(p);
        let m = low_rank(&f, r, c, k, seed);
        let g = invertible(&f, r, seed ^ 1);
        let (a, b) = (m.rref(), g.mul(&m).rref());
        prop_assert_eq!(&a.matrix, &b.matrix);
        prop_assert_eq!(&a.pivots, &b.pivots);
        prop_assert_eq!(m.rref().matrix, a.matrix);

        let mq = low_rank(&Q, r, c, k, seed);
        let gq = invertible(&Q, r, seed ^ 1);
        prop_assert_eq!(mq.rref().matrix, gq.mul(&mq).rref().matrix);
    }

    #[test]
    fn solve_finds_solutions_exactly(p in prop::sample::select(vec![3u64, 5]), r in 1usize..6, c in 1usize..6, seed: u64) {
        let f = field(p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Matrix::random(&f, r, c, &mut rng);
        let x = Matrix::random(&f, c, 1, &mut rng);
        let b = a.mul(&x);
        let y = a.solve(&b).unwrap().expect("b is in the image");
        prop_assert_eq!(a.mul(&y), b);
    }
}

#[test]
fn empty_matrices_behave() {
    let f = field(3);
    for (r, c) in [(0, 0), (0, 3), (3, 0)] {
        let m = Matrix::zeros(&f, r, c);
        rank_nullity(&m);
        assert_eq!(m.rank(), 0);
    }
    quotient_law(&f, &Matrix::zeros(&f, 0, 0));
    quotient_law(&f, &Matrix::zeros(&f, 4, 0));
}
