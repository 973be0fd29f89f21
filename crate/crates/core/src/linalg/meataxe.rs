//! Meataxe: irreducibility testing and chopping of modules given by
//! generator matrices acting on column vectors.
//!
//! Irreducibility is certified with Norton's test. Random algebra elements
//! come from a seeded generator, so every chop is reproducible.

use rand::Rng;

use super::field::{Elem, FieldRef};
use super::matrix::{intertwiner_space, Matrix};
use super::poly::Poly;
use crate::error::{Error, Result};

const MAX_ATTEMPTS: usize = 400;
const POOL_SIZE: usize = 12;

/// Semi-echelon basis: every row has a pivot column holding 1 and every
/// later row vanishes on earlier pivots.
#[derive(Clone, Debug)]
pub struct SemiEchelon {
    dim: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl SemiEchelon {
    pub fn new(dim: usize) -> Self {
        SemiEchelon {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn reduce(&self, f: &FieldRef, v: &mut [Elem]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                f.axpy(v, f.neg(c), row);
            }
        }
    }

    /// Reduce and insert; returns the index of the new row when `v` was
    /// independent.
    pub fn insert(&mut self, f: &FieldRef, mut v: Vec<Elem>) -> Option<usize> {
        self.reduce(f, &mut v);
        let p = v.iter().position(|&x| x != 0)?;
        let inv = f.inv(v[p]);
        f.scale_slice(&mut v, inv);
        self.rows.push(v);
        self.pivots.push(p);
        Some(self.rows.len() - 1)
    }

    pub fn contains(&self, f: &FieldRef, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(f, &mut w);
        w.iter().all(|&x| x == 0)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.rows[i]
    }

    pub fn to_matrix(&self, f: &FieldRef) -> Matrix {
        Matrix::from_vec(f, self.rows.len(), self.dim, self.rows.concat()).unwrap()
    }
}

/// Smallest subspace containing `seeds` and closed under every generator.
pub fn spin(field: &FieldRef, gens: &[Matrix], dim: usize, seeds: &[Vec<Elem>]) -> SemiEchelon {
    let mut basis = SemiEchelon::new(dim);
    for s in seeds {
        basis.insert(field, s.clone());
    }
    let mut next = 0;
    while next < basis.len() {
        let v = basis.row(next).to_vec();
        for g in gens {
            basis.insert(field, g.mul_vec(&v));
            if basis.len() == dim {
                return basis;
            }
        }
        next += 1;
    }
    basis
}

/// Action of the generators on an invariant subspace and on the quotient.
pub struct Restriction {
    pub sub: Vec<Matrix>,
    pub quotient: Vec<Matrix>,
    /// Columns: the subspace basis followed by complementary unit vectors.
    pub basis: Matrix,
}

pub fn restrict_to_subspace(field: &FieldRef, gens: &[Matrix], dim: usize, sub: &SemiEchelon) -> Restriction {
    let s = sub.len();
    let mut b = Matrix::zeros(field, dim, dim);
    for i in 0..s {
        for (r, &x) in sub.row(i).iter().enumerate() {
            b.set(r, i, x);
        }
    }
    let mut col = s;
    for j in 0..dim {
        if !sub.pivots().contains(&j) {
            b.set(j, col, 1);
            col += 1;
        }
    }
    let binv = b.inverse().expect("semi-echelon basis extends to a basis");
    let mut subs = Vec::with_capacity(gens.len());
    let mut quots = Vec::with_capacity(gens.len());
    for g in gens {
        let c = binv.mul(&g.mul(&b));
        subs.push(c.submatrix(0, 0, s, s));
        quots.push(c.submatrix(s, s, dim - s, dim - s));
    }
    Restriction {
        sub: subs,
        quotient: quots,
        basis: b,
    }
}

/// Outcome of one Meataxe step.
pub enum Split {
    Irreducible,
    /// A proper nonzero invariant subspace.
    Reducible(SemiEchelon),
}

/// Source of random algebra elements built from products and linear
/// combinations of the generators.
struct RandomElements {
    pool: Vec<Matrix>,
    /// The first `fixed` entries are the generators and are never evicted.
    fixed: usize,
    identity: Matrix,
}

impl RandomElements {
    fn new(field: &FieldRef, gens: &[Matrix], dim: usize) -> Self {
        let mut pool: Vec<Matrix> = gens.to_vec();
        if pool.is_empty() {
            pool.push(Matrix::identity(field, dim));
        }
        RandomElements {
            fixed: pool.len(),
            pool,
            identity: Matrix::identity(field, dim),
        }
    }

    fn next<R: Rng>(&mut self, field: &FieldRef, rng: &mut R) -> Matrix {
        let q = field.order();
        let i = rng.gen_range(0..self.pool.len());
        let j = rng.gen_range(0..self.pool.len());
        let prod = self.pool[i].mul(&self.pool[j]);
        if self.pool.len() < POOL_SIZE + self.fixed {
            self.pool.push(prod.clone());
        } else {
            let slot = rng.gen_range(self.fixed..self.pool.len());
            self.pool[slot] = prod.clone();
        }
        let mut a = prod;
        for _ in 0..2 {
            let k = rng.gen_range(0..self.pool.len());
            a.add_scaled(rng.gen_range(0..q), &self.pool[k]);
        }
        a.add_scaled(rng.gen_range(0..q), &self.identity);
        a
    }
}

fn transposes(gens: &[Matrix]) -> Vec<Matrix> {
    gens.iter().map(Matrix::transpose).collect()
}

/// Submodule of `M` annihilated by a dual submodule spanned by `w`.
fn annihilator(field: &FieldRef, w: &SemiEchelon) -> SemiEchelon {
    let ns = w.to_matrix(field).nullspace();
    let mut s = SemiEchelon::new(ns.cols());
    for r in 0..ns.rows() {
        s.insert(field, ns.row(r).to_vec());
    }
    s
}

/// One Meataxe step: find a proper submodule or certify irreducibility.
///
/// An irreducible module whose endomorphism ring is larger than the field is
/// reported as [`Error::NotSplitting`].
pub fn split<R: Rng>(field: &FieldRef, gens: &[Matrix], dim: usize, rng: &mut R) -> Result<Split> {
    if dim <= 1 {
        return Ok(Split::Irreducible);
    }
    if gens.is_empty() {
        let mut s = SemiEchelon::new(dim);
        let mut e = vec![0; dim];
        e[0] = 1;
        s.insert(field, e);
        return Ok(Split::Reducible(s));
    }
    let dual = transposes(gens);
    let mut source = RandomElements::new(field, gens, dim);
    for _ in 0..MAX_ATTEMPTS {
        let a = source.next(field, rng);
        let chi = a.charpoly();
        let mut candidates: Vec<(usize, Poly, Matrix)> = Vec::new();
        for root in chi.roots(field) {
            let fa = a.sub(&Matrix::scalar(field, dim, root));
            let nullity = dim - fa.rank();
            candidates.push((nullity, Poly::linear(field, root), fa));
        }
        candidates.sort_by_key(|c| c.0);
        if candidates.first().is_none_or(|c| c.0 > 1) {
            for deg in 2..=3 {
                if let Some(fac) = chi.unique_factor_of_degree(field, deg) {
                    let fa = a.eval_poly(&fac);
                    let nullity = dim - fa.rank();
                    candidates.push((nullity, fac, fa));
                }
            }
        }
        for (nullity, fac, fa) in candidates {
            let deg = fac.degree().unwrap();
            let kernel = fa.nullspace();
            let v = kernel.row(0).to_vec();
            let sub = spin(field, gens, dim, &[v]);
            if sub.len() < dim {
                return Ok(Split::Reducible(sub));
            }
            let dual_kernel = fa.transpose().nullspace();
            let w = dual_kernel.row(0).to_vec();
            let dsub = spin(field, &dual, dim, &[w]);
            if dsub.len() < dim {
                return Ok(Split::Reducible(annihilator(field, &dsub)));
            }
            if nullity == deg {
                if deg > 1 {
                    let end = intertwiner_space(gens, gens)?;
                    if end.len() > 1 {
                        return Err(Error::NotSplitting(format!(
                            "simple module of dimension {dim} has an endomorphism ring of dimension {}",
                            end.len()
                        )));
                    }
                }
                return Ok(Split::Irreducible);
            }
        }
    }
    Err(Error::Internal(format!(
        "meataxe found no decisive element for a module of dimension {dim}"
    )))
}

pub fn is_irreducible<R: Rng>(field: &FieldRef, gens: &[Matrix], dim: usize, rng: &mut R) -> Result<bool> {
    Ok(matches!(split(field, gens, dim, rng)?, Split::Irreducible))
}

/// Composition factors, listed from the bottom of a composition series up.
pub fn chop<R: Rng>(field: &FieldRef, gens: &[Matrix], dim: usize, rng: &mut R) -> Result<Vec<Vec<Matrix>>> {
    let mut out = Vec::new();
    chop_into(field, gens.to_vec(), dim, rng, &mut out)?;
    Ok(out)
}

fn chop_into<R: Rng>(
    field: &FieldRef,
    gens: Vec<Matrix>,
    dim: usize,
    rng: &mut R,
    out: &mut Vec<Vec<Matrix>>,
) -> Result<()> {
    if dim == 0 {
        return Ok(());
    }
    match split(field, &gens, dim, rng)? {
        Split::Irreducible => {
            out.push(gens);
            Ok(())
        }
        Split::Reducible(sub) => {
            let s = sub.len();
            let r = restrict_to_subspace(field, &gens, dim, &sub);
            chop_into(field, r.sub, s, rng, out)?;
            chop_into(field, r.quotient, dim - s, rng, out)
        }
    }
}

/// Whether two irreducible modules on the same generators are isomorphic.
pub fn simples_isomorphic(a: &[Matrix], b: &[Matrix]) -> Result<bool> {
    let da = a.first().map_or(0, Matrix::rows);
    let db = b.first().map_or(0, Matrix::rows);
    if da != db {
        return Ok(false);
    }
    if a.is_empty() {
        return Ok(true);
    }
    if a.iter().zip(b).any(|(x, y)| x.trace() != y.trace()) {
        return Ok(false);
    }
    Ok(!intertwiner_space(a, b)?.is_empty())
}

/// Group composition factors into isomorphism classes, keeping the first
/// occurrence of each as representative, with multiplicities.
pub fn isomorphism_classes(factors: Vec<Vec<Matrix>>) -> Result<Vec<(Vec<Matrix>, usize)>> {
    let mut classes: Vec<(Vec<Matrix>, usize)> = Vec::new();
    'next: for fac in factors {
        for (rep, n) in classes.iter_mut() {
            if simples_isomorphic(rep, &fac)? {
                *n += 1;
                continue 'next;
            }
        }
        classes.push((fac, 1));
    }
    Ok(classes)
}
