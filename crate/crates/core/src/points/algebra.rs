//! The fixed-point algebra `(FG)^P` and its points.

use rand::Rng;

use crate::algebra::AlgElem;
use crate::error::{Error, Result};
use crate::groups::{GroupRef, Subgroup};
use crate::linalg::meataxe::{chop, isomorphism_classes, SemiEchelon};
use crate::linalg::{Elem, FieldRef, Matrix};
use crate::rng;

/// `(FG)^P` with the basis of P-conjugation orbit sums, orbits ordered by
/// least element.
pub struct InvariantAlgebra {
    pub group: GroupRef,
    pub field: FieldRef,
    pub p: Subgroup,
    pub orbits: Vec<Vec<u32>>,
    /// Orbit index of each group element.
    pub orbit_of: Vec<u32>,
}

impl InvariantAlgebra {
    pub fn new(group: &GroupRef, field: &FieldRef, p: &Subgroup) -> Self {
        let mut orbit_of = vec![u32::MAX; group.order()];
        let mut orbits = Vec::new();
        for x in group.elements() {
            if orbit_of[x as usize] != u32::MAX {
                continue;
            }
            let mut orbit: Vec<u32> = p.elements().iter().map(|&g| group.conj(g, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &y in &orbit {
                orbit_of[y as usize] = orbits.len() as u32;
            }
            orbits.push(orbit);
        }
        InvariantAlgebra {
            group: group.clone(),
            field: field.clone(),
            p: p.clone(),
            orbits,
            orbit_of,
        }
    }

    pub fn dim(&self) -> usize {
        self.orbits.len()
    }

    pub fn basis(&self, i: usize) -> AlgElem {
        AlgElem::sum_of(&self.group, &self.field, &self.orbits[i])
    }

    /// Coordinates of a P-invariant element.
    pub fn coords(&self, x: &AlgElem) -> Vec<Elem> {
        self.orbits.iter().map(|o| x.coeff(o[0])).collect()
    }

    pub fn from_coords(&self, c: &[Elem]) -> AlgElem {
        let mut coeffs = vec![0; self.group.order()];
        for (o, &v) in self.orbits.iter().zip(c) {
            for &y in o {
                coeffs[y as usize] = v;
            }
        }
        AlgElem::from_coeffs(&self.group, &self.field, coeffs).expect("sized by the group")
    }

    /// Left multiplication by `x` on the orbit basis.
    pub fn left_mult(&self, x: &AlgElem) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for j in 0..n {
            let col = self.coords(&x.mul(&self.basis(j)));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }
}

/// The points of `P` on `FG`: the simple modules of `(FG)^P`, realized by
/// the action `reps[l][i] = ρ_l(b_i)` of each basis element, and one lifted
/// primitive idempotent per point.
pub struct Points {
    pub algebra: InvariantAlgebra,
    pub reps: Vec<Vec<Matrix>>,
    pub idempotents: Vec<AlgElem>,
    pub radical_dim: usize,
}

/// Random elements of `A` until the unital subalgebra they generate is all
/// of `A`. Returns the elements, their left-multiplication matrices, and
/// the spin tree `(parent, generator)` of a word basis together with the
/// basis vectors (word values applied to 1).
#[allow(clippy::type_complexity)]
fn algebra_generators<R: Rng>(
    a: &InvariantAlgebra,
    rng: &mut R,
) -> Result<(Vec<Matrix>, Vec<(usize, usize)>, Vec<Vec<Elem>>)> {
    let f = &a.field;
    let n = a.dim();
    let q = f.order();
    let mut one = vec![0; n];
    one[a.orbit_of[0] as usize] = 1;
    let mut mats: Vec<Matrix> = Vec::new();
    for _ in 0..64 {
        let c: Vec<Elem> = (0..n).map(|_| rng.gen_range(0..q)).collect();
        mats.push(a.left_mult(&a.from_coords(&c)));
        let mut ech = SemiEchelon::new(n);
        let mut tree = vec![(usize::MAX, usize::MAX)];
        let mut vecs = vec![one.clone()];
        ech.insert(f, one.clone());
        let mut next = 0;
        while next < vecs.len() && vecs.len() < n {
            for (gi, m) in mats.iter().enumerate() {
                let w = m.mul_vec(&vecs[next]);
                if ech.insert(f, w.clone()).is_some() {
                    tree.push((next, gi));
                    vecs.push(w);
                }
            }
            next += 1;
        }
        if vecs.len() == n {
            return Ok((mats, tree, vecs));
        }
    }
    Err(Error::Internal("random elements failed to generate the fixed-point algebra".into()))
}

impl Points {
    pub fn compute(group: &GroupRef, field: &FieldRef, p: &Subgroup, seed: u64) -> Result<Points> {
        let a = InvariantAlgebra::new(group, field, p);
        let n = a.dim();
        let f = field.clone();
        let mut rng = rng::stream(seed, "points", p.elements().iter().fold(0u64, |h, &x| h.wrapping_mul(131).wrapping_add(x as u64 + 1)));
        let (gens, tree, vecs) = algebra_generators(&a, &mut rng)?;
        let simples: Vec<Vec<Matrix>> = isomorphism_classes(chop(&f, &gens, n, &mut rng)?)?
            .into_iter()
            .map(|(m, _)| m)
            .collect();
        // Word matrices on each simple, then the action of the orbit basis.
        let mut cols = Matrix::zeros(&f, n, n);
        for (k, v) in vecs.iter().enumerate() {
            for (i, &x) in v.iter().enumerate() {
                cols.set(i, k, x);
            }
        }
        let to_words = cols
            .inverse()
            .ok_or_else(|| Error::Internal("word basis is singular".into()))?;
        let mut reps = Vec::with_capacity(simples.len());
        for s in &simples {
            let d = s[0].rows();
            let mut words: Vec<Matrix> = Vec::with_capacity(n);
            for &(parent, gi) in &tree {
                if parent == usize::MAX {
                    words.push(Matrix::identity(&f, d));
                } else {
                    let w = s[gi].mul(&words[parent]);
                    words.push(w);
                }
            }
            let mut r = Vec::with_capacity(n);
            for i in 0..n {
                let mut acc = Matrix::zeros(&f, d, d);
                for (k, w) in words.iter().enumerate() {
                    let c = to_words.get(k, i);
                    if c != 0 {
                        acc.add_scaled(c, w);
                    }
                }
                r.push(acc);
            }
            reps.push(r);
        }
        // Canonical order: by dimension, then by the traces of the basis.
        let key = |r: &Vec<Matrix>| (r[0].rows(), r.iter().map(Matrix::trace).collect::<Vec<_>>());
        reps.sort_by_key(key);
        let mut points = Points {
            algebra: a,
            reps,
            idempotents: Vec::new(),
            radical_dim: 0,
        };
        let stacked = points.stacked();
        let semisimple: usize = points.reps.iter().map(|r| r[0].rows() * r[0].rows()).sum();
        if stacked.rank() != semisimple {
            return Err(Error::NotSplitting(
                "fixed-point algebra does not map onto its split semisimple quotient".into(),
            ));
        }
        points.radical_dim = n - semisimple;
        for j in 0..points.reps.len() {
            let x = points.preimage(&stacked, &unit_target(&points, j, 0, 0))?;
            let e = lift_by_powers(&x, f.characteristic() as u64)?;
            points.idempotents.push(e);
        }
        Ok(points)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Multiplicity of point `l`: the dimension of its simple module.
    pub fn multiplicity(&self, l: usize) -> usize {
        self.reps[l][0].rows()
    }

    /// Column `i` is the concatenated `ρ_l(b_i)` over all points.
    fn stacked(&self) -> Matrix {
        let f = &self.algebra.field;
        let rows: usize = self.reps.iter().map(|r| r[0].rows() * r[0].rows()).sum();
        let n = self.algebra.dim();
        let mut m = Matrix::zeros(f, rows, n);
        for i in 0..n {
            let mut row = 0;
            for r in &self.reps {
                for &x in r[i].data() {
                    m.set(row, i, x);
                    row += 1;
                }
            }
        }
        m
    }

    /// Some `x ∈ A` with the given stacked image.
    fn preimage(&self, stacked: &Matrix, target: &[Elem]) -> Result<AlgElem> {
        let c = stacked
            .solve(target)?
            .ok_or_else(|| Error::Internal("target outside the image of the fixed-point algebra".into()))?;
        Ok(self.algebra.from_coords(&c))
    }

    /// `ρ_l(y)` for a P-invariant `y`.
    pub fn act(&self, l: usize, y: &AlgElem) -> Matrix {
        let c = self.algebra.coords(y);
        let d = self.multiplicity(l);
        let mut acc = Matrix::zeros(&self.algebra.field, d, d);
        for (i, &v) in c.iter().enumerate() {
            if v != 0 {
                acc.add_scaled(v, &self.reps[l][i]);
            }
        }
        acc
    }

    pub fn rank_on(&self, l: usize, y: &AlgElem) -> usize {
        self.act(l, y).rank()
    }

    /// An element of `A` mapping to `target_l` on point `l` and to 0 on the others.
    pub fn element_with_image(&self, l: usize, target: &Matrix) -> Result<AlgElem> {
        let mut t = Vec::new();
        for (j, r) in self.reps.iter().enumerate() {
            let d = r[0].rows();
            if j == l {
                t.extend_from_slice(target.data());
            } else {
                t.extend(std::iter::repeat_n(0, d * d));
            }
        }
        self.preimage(&self.stacked(), &t)
    }

    /// Decompose a P-invariant idempotent `i` into mutually orthogonal
    /// primitive idempotents of `A`, returning how many fall in each point.
    pub fn decompose(&self, i: &AlgElem) -> Result<Vec<usize>> {
        let p = self.algebra.field.characteristic() as u64;
        let mut counts = vec![0; self.len()];
        let mut rest = i.clone();
        while !rest.is_zero() {
            let l = (0..self.len())
                .find(|&l| !self.act(l, &rest).is_zero())
                .ok_or_else(|| Error::Internal("nonzero idempotent in the radical".into()))?;
            let img = self.act(l, &rest);
            let e = rank_one_below(&img);
            let x = self.element_with_image(l, &e)?;
            let y = rest.mul(&x).mul(&rest);
            let prim = lift_by_powers(&y, p)?;
            if !rest.mul(&prim).eq(&prim) || !prim.mul(&rest).eq(&prim) {
                return Err(Error::Internal("decomposition left the corner algebra".into()));
            }
            counts[l] += 1;
            rest = rest.sub(&prim);
        }
        Ok(counts)
    }
}

fn unit_target(points: &Points, l: usize, r: usize, c: usize) -> Vec<Elem> {
    let mut t = Vec::new();
    for (j, rep) in points.reps.iter().enumerate() {
        let d = rep[0].rows();
        for a in 0..d {
            for b in 0..d {
                t.push(u32::from(j == l && a == r && b == c));
            }
        }
    }
    t
}

/// A rank-one idempotent `E` with `PE = EP = E` for an idempotent matrix `P ≠ 0`.
fn rank_one_below(p: &Matrix) -> Matrix {
    let f = p.field();
    let n = p.rows();
    let col = (0..n).find(|&c| (0..n).any(|r| p.get(r, c) != 0)).expect("nonzero");
    let v: Vec<Elem> = (0..n).map(|r| p.get(r, col)).collect();
    let (u, s) = (0..n)
        .map(|r| {
            let u = p.row(r).to_vec();
            let s = u.iter().zip(&v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            (u, s)
        })
        .find(|(_, s)| *s != 0)
        .expect("P v = v has a row with nonzero product");
    let inv = f.inv(s);
    let mut e = Matrix::zeros(f, n, n);
    for a in 0..n {
        for b in 0..n {
            e.set(a, b, f.mul(v[a], f.mul(u[b], inv)));
        }
    }
    e
}

/// Raise to p-th powers until idempotent; `x` must be idempotent modulo a
/// nilpotent ideal of the algebra it generates.
pub fn lift_by_powers(x: &AlgElem, p: u64) -> Result<AlgElem> {
    let mut x = x.clone();
    let steps = 2 + (x.group().order() as f64).log(p as f64).ceil() as usize;
    for _ in 0..steps {
        let sq = x.mul(&x);
        if sq == x {
            return Ok(x);
        }
        x = if p == 2 { sq } else { x.pow(p) };
    }
    Err(Error::Internal("idempotent lifting did not stabilize".into()))
}
