//! The numerical-kernel checks, each returning the first counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ppg_core::groups::splitting_degree;
use ppg_core::linalg::{Field, FieldRef, Matrix};
use ppg_core::modrep::{GModule, Simples};

use super::naive::NaiveField;
use super::{group, small_fields};

pub type Check = Result<(), String>;

/// Every field with q ≤ 64: tables agree with schoolbook arithmetic, and
/// the axioms hold on all pairs and triples.
pub fn field_axioms_exhaustive() -> Check {
    for (p, k) in small_fields() {
        let f = Field::new(p, k).map_err(|e| e.to_string())?;
        let n = NaiveField::new(p as u32, f.defining_polynomial());
        if !n.is_irreducible() {
            return Err(format!("GF({p}^{k}): defining polynomial is reducible"));
        }
        let q = f.order();
        for a in 0..q {
            if f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0 {
                return Err(format!("GF({p}^{k}): identities fail at {a}"));
            }
            if a != 0 && f.mul(a, f.inv(a)) != 1 {
                return Err(format!("GF({p}^{k}): inverse fails at {a}"));
            }
            for b in 0..q {
                if f.add(a, b) != n.add(a, b) || f.mul(a, b) != n.mul(a, b) {
                    return Err(format!("GF({p}^{k}): table mismatch at ({a}, {b})"));
                }
                if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                    return Err(format!("GF({p}^{k}): not commutative at ({a}, {b})"));
                }
                if f.sub(f.add(a, b), b) != a || (b != 0 && f.mul(f.div(a, b), b) != a) {
                    return Err(format!("GF({p}^{k}): sub/div fail at ({a}, {b})"));
                }
                for c in 0..q {
                    if f.add(f.add(a, b), c) != f.add(a, f.add(b, c))
                        || f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))
                        || f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))
                    {
                        return Err(format!("GF({p}^{k}): axiom fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn random_field<R: Rng>(rng: &mut R) -> FieldRef {
    let fields = small_fields();
    let (p, k) = fields[rng.gen_range(0..fields.len())];
    Field::new(p, k).unwrap()
}

pub fn random_matrix<R: Rng>(rng: &mut R, f: &FieldRef, rows: usize, cols: usize, density: f64) -> Matrix {
    let q = f.order();
    let data = (0..rows * cols)
        .map(|_| if rng.gen_bool(density) { rng.gen_range(0..q) } else { 0 })
        .collect();
    Matrix::from_vec(f, rows, cols, data).unwrap()
}

/// `rank + nullity = columns`, null vectors are killed and independent.
pub fn rank_nullity(count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for t in 0..count {
        let f = random_field(&mut rng);
        let (r, c) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
        // Sparse entries make rank-deficient matrices common.
        let density = rng.gen_range(0.1..1.0);
        let m = random_matrix(&mut rng, &f, r, c, density);
        let rank = m.rank();
        let null = m.nullspace();
        if rank + null.rows() != c || null.rank() != null.rows() {
            return Err(format!("trial {t}: rank {rank}, nullity {} for {r}x{c}", null.rows()));
        }
        if !m.mul(&null.transpose()).is_zero() {
            return Err(format!("trial {t}: null vector not in the kernel"));
        }
        if m.transpose().rank() != rank {
            return Err(format!("trial {t}: row and column rank differ"));
        }
    }
    Ok(())
}

/// `frobenius_root(x, n)^(p^n) = x` for every element and every n < 2k.
pub fn frobenius_round_trips() -> Check {
    for (p, k) in small_fields().into_iter().chain([(2, 8), (3, 5), (2, 16)]) {
        let f = Field::new(p, k).unwrap();
        for x in f.elements() {
            for n in 0..2 * k {
                let y = f.frobenius_root(x, n);
                if f.pow(y, p.pow(n)) != x {
                    return Err(format!("GF({p}^{k}): root of {x} for n = {n}"));
                }
            }
        }
    }
    Ok(())
}

fn random_invertible<R: Rng>(rng: &mut R, f: &FieldRef, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, f, n, n, 1.0);
        if m.rank() == n {
            return m;
        }
    }
}

/// Chop a randomly conjugated direct sum of known simples and recover the
/// multiset of summands.
pub fn meataxe_rechop(trials: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (name, p) in [("s3", 2), ("s3", 3), ("s4", 2), ("s4", 3), ("a4", 2), ("s5", 2), ("s5", 3), ("q8", 3)] {
        let g = group(name);
        let f = Field::new(p, splitting_degree(&g, p)).unwrap();
        let simples = Simples::compute(&g, &f, 0).map_err(|e| e.to_string())?;
        for t in 0..trials {
            let mut expected = Vec::new();
            let mut sum: Option<GModule> = None;
            for _ in 0..rng.gen_range(1..=4) {
                let i = rng.gen_range(0..simples.len());
                expected.push(i);
                let m = simples.list[i].module.clone();
                sum = Some(match sum {
                    None => m,
                    Some(s) => s.direct_sum(&m).unwrap(),
                });
            }
            let sum = sum.unwrap();
            let b = random_invertible(&mut rng, &f, sum.dim());
            let twisted = sum.change_basis(&b).unwrap();
            let got = simples.composition_factors(&twisted, t as u64).map_err(|e| e.to_string())?;
            expected.sort_unstable();
            if got != expected {
                return Err(format!("{name}/{p} trial {t}: expected {expected:?}, chopped {got:?}"));
            }
        }
    }
    Ok(())
}

