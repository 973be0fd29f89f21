mod common;

use common::kernel::{self, random_matrix};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ppg_core::linalg::meataxe::{chop, isomorphism_classes};
use ppg_core::linalg::{Field, FieldRef, Matrix, Poly};

#[test]
fn field_axioms_exhaustive() {
    kernel::field_axioms_exhaustive().unwrap();
}

#[test]
fn rank_nullity_on_random_matrices() {
    kernel::rank_nullity(1000).unwrap();
}

#[test]
fn frobenius_round_trips() {
    kernel::frobenius_round_trips().unwrap();
}

#[test]
fn meataxe_rechop_stability() {
    kernel::meataxe_rechop(5).unwrap();
}

#[test]
fn construction_errors() {
    assert!(Field::new(4, 1).is_err());
    assert!(Field::new(2, 0).is_err());
    assert!(Field::new(2, 17).is_err());
    assert_eq!(Field::new(2, 16).unwrap().order(), 65536);
}

fn field_strategy() -> impl Strategy<Value = FieldRef> {
    prop::sample::select(common::small_fields()).prop_map(|(p, k)| Field::new(p, k).unwrap())
}

fn matrix_case() -> impl Strategy<Value = (FieldRef, u64, usize, usize, usize)> {
    (field_strategy(), any::<u64>(), 1usize..7, 1usize..7, 1usize..7)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn multiplication_is_associative_and_distributive((f, seed, a, b, c) in matrix_case()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_matrix(&mut rng, &f, a, b, 0.7);
        let y = random_matrix(&mut rng, &f, b, c, 0.7);
        let y2 = random_matrix(&mut rng, &f, b, c, 0.7);
        let z = random_matrix(&mut rng, &f, c, a, 0.7);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&y2)), x.mul(&y).add(&x.mul(&y2)));
        prop_assert_eq!(x.mul(&y).transpose(), y.transpose().mul(&x.transpose()));
    }

    #[test]
    fn inverse_and_solve((f, seed, n, _b, _c) in matrix_case()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, &f, n, n, 0.8);
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
                prop_assert_eq!(m.rank(), n);
            }
            None => prop_assert!(m.rank() < n),
        }
        let x: Vec<u32> = (0..n).map(|i| (i as u32 * 7 + seed as u32) % f.order()).collect();
        let b = m.mul_vec(&x);
        let sol = m.solve(&b).unwrap().expect("consistent system");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn cayley_hamilton((f, seed, n, _b, _c) in matrix_case()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = random_matrix(&mut rng, &f, n, n, 0.8);
        let chi = m.charpoly();
        prop_assert_eq!(chi.degree(), Some(n));
        prop_assert!(m.eval_poly(&chi).is_zero());
        prop_assert_eq!(chi.0[n - 1], f.neg(m.trace()));
    }

    #[test]
    fn polynomial_division((f, seed, a, b, _c) in matrix_case()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = f.order();
        use rand::Rng;
        let x = Poly((0..=a + 2).map(|_| rng.gen_range(0..q)).collect());
        let mut dv: Vec<u32> = (0..b).map(|_| rng.gen_range(0..q)).collect();
        dv.push(1);
        let d = Poly(dv);
        let (quo, rem) = x.divrem(&f, &d);
        prop_assert!(rem.is_zero() || rem.degree() < d.degree());
        let back = quo.mul(&f, &d).sub(&f, &Poly(rem.0.iter().map(|&c| f.neg(c)).collect()));
        prop_assert!(back.sub(&f, &x).is_zero());
    }
}

#[test]
fn chop_of_permutation_module_of_s3() {
    // The natural permutation module of S3 over GF(2) is 1 + 2.
    let f = Field::new(2, 1).unwrap();
    let perm = |images: [usize; 3]| {
        let mut m = Matrix::zeros(&f, 3, 3);
        for (i, &j) in images.iter().enumerate() {
            m.set(j, i, 1);
        }
        m
    };
    let gens = vec![perm([1, 0, 2]), perm([1, 2, 0])];
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let factors = chop(&f, &gens, 3, &mut rng).unwrap();
    let mut dims: Vec<usize> = factors.iter().map(|g| g[0].rows()).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 2]);
    assert_eq!(isomorphism_classes(factors).unwrap().len(), 2);
}
