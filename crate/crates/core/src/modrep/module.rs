//! Representations of materialized groups over finite fields.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::Rng;

use crate::error::{Error, Result};
use crate::groups::{GroupMap, GroupRef};
use crate::linalg::{intertwiner_space, FieldRef, Matrix};

/// A representation `ρ` acting on column vectors, `ρ(xy) = ρ(x)ρ(y)`.
/// Stored by the images of the group's generators; other elements are
/// evaluated along the group's word tree on first use.
#[derive(Clone)]
pub struct GModule {
    group: GroupRef,
    field: FieldRef,
    dim: usize,
    gens: Vec<Matrix>,
    all: Arc<OnceLock<Vec<Matrix>>>,
}

impl GModule {
    /// Checked constructor: generator matrices must be invertible and the
    /// word evaluation must agree with the Cayley table on every
    /// (generator, element) pair.
    pub fn new(group: &GroupRef, field: &FieldRef, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        let m = Self::from_generators(group, field, dim, gens)?;
        for g in &m.gens {
            if g.inverse().is_none() {
                return Err(Error::Malformed("generator matrix is singular".into()));
            }
        }
        m.check_relations()?;
        Ok(m)
    }

    /// Trusted constructor: only shapes are checked.
    pub fn from_generators(group: &GroupRef, field: &FieldRef, dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        if gens.len() != group.generators().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} generators",
                gens.len(),
                group.generators().len()
            )));
        }
        if gens.iter().any(|g| g.rows() != dim || g.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("generator is not {dim}x{dim}")));
        }
        Ok(GModule {
            group: group.clone(),
            field: field.clone(),
            dim,
            gens,
            all: Arc::new(OnceLock::new()),
        })
    }

    /// Build from a function giving the matrix of any element; only the
    /// generators are sampled.
    pub fn from_fn(group: &GroupRef, field: &FieldRef, dim: usize, f: impl Fn(u32) -> Matrix) -> Self {
        let gens = group.generators().iter().map(|&g| f(g)).collect();
        Self::from_generators(group, field, dim, gens).expect("shapes come from f")
    }

    pub fn trivial(group: &GroupRef, field: &FieldRef) -> Self {
        Self::from_fn(group, field, 1, |_| Matrix::identity(field, 1))
    }

    /// The left regular module on the basis `e_y`, `x·e_y = e_{xy}`.
    pub fn regular(group: &GroupRef, field: &FieldRef) -> Self {
        let n = group.order();
        Self::from_fn(group, field, n, |x| {
            let mut m = Matrix::zeros(field, n, n);
            for y in group.elements() {
                m.set(group.mul(x, y) as usize, y as usize, 1);
            }
            m
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.gens
    }

    fn all(&self) -> &[Matrix] {
        self.all.get_or_init(|| {
            let tree = self.group.word_tree();
            let order = self.group.bfs_order();
            let mut mats: Vec<Option<Matrix>> = vec![None; self.group.order()];
            mats[0] = Some(Matrix::identity(&self.field, self.dim));
            for x in order.into_iter().skip(1) {
                let (parent, gi) = tree[x as usize];
                let m = self.gens[gi].mul(mats[parent as usize].as_ref().expect("parent first"));
                mats[x as usize] = Some(m);
            }
            mats.into_iter().map(|m| m.expect("generators generate")).collect()
        })
    }

    /// `ρ(x)`.
    pub fn matrix(&self, x: u32) -> &Matrix {
        &self.all()[x as usize]
    }

    /// `Σ_{x ∈ elements} ρ(x)`.
    pub fn sum_over(&self, elements: &[u32]) -> Matrix {
        let mut acc = Matrix::zeros(&self.field, self.dim, self.dim);
        for &x in elements {
            acc.add_scaled(1, self.matrix(x));
        }
        acc
    }

    fn check_relations(&self) -> Result<()> {
        for x in self.group.elements() {
            for (i, &g) in self.group.generators().iter().enumerate() {
                if *self.matrix(self.group.mul(g, x)) != self.gens[i].mul(self.matrix(x)) {
                    return Err(Error::Malformed(
                        "matrices do not respect the group multiplication".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Spot-check `ρ(xy) = ρ(x)ρ(y)` on random pairs.
    pub fn spot_check<R: Rng>(&self, rng: &mut R, pairs: usize) -> bool {
        let n = self.group.order() as u32;
        (0..pairs).all(|_| {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            *self.matrix(self.group.mul(x, y)) == self.matrix(x).mul(self.matrix(y))
        })
    }

    /// Pull back along a homomorphism into this module's group. Covers
    /// restriction (along an embedding), inflation (along a projection) and
    /// conjugation (along an automorphism).
    pub fn pullback(&self, map: &GroupMap) -> Result<GModule> {
        if !Arc::ptr_eq(&map.target, &self.group) {
            return Err(Error::Precondition("map does not land in the module's group".into()));
        }
        Ok(Self::from_fn(&map.source, &self.field, self.dim, |x| {
            self.matrix(map.apply(x)).clone()
        }))
    }

    /// Restriction along an embedding `H → G`.
    pub fn restrict(&self, embedding: &GroupMap) -> Result<GModule> {
        self.pullback(embedding)
    }

    /// Inflation along a surjection `G → G/N` landing in this module's group.
    pub fn inflate(&self, projection: &GroupMap) -> Result<GModule> {
        self.pullback(projection)
    }

    /// The conjugate module `x ↦ ρ(g⁻¹ x g)` for `g` normalizing this
    /// module's group inside `ambient`; `embedding` includes the module's group.
    pub fn conjugate(&self, embedding: &GroupMap, g: u32) -> Result<GModule> {
        let amb = &embedding.target;
        let mut back = vec![u32::MAX; amb.order()];
        for x in self.group.elements() {
            back[embedding.apply(x) as usize] = x;
        }
        let mut images = Vec::with_capacity(self.group.order());
        for x in self.group.elements() {
            let y = amb.conj(amb.inv(g), embedding.apply(x));
            if back[y as usize] == u32::MAX {
                return Err(Error::Precondition("element does not normalize the subgroup".into()));
            }
            images.push(back[y as usize]);
        }
        let alpha = GroupMap::new(self.group.clone(), self.group.clone(), images)?;
        self.pullback(&alpha)
    }

    /// Induction along an embedding `H → G` of this module's group `H`.
    /// Basis: `t_i ⊗ e_j` for the least-element left transversal `t_i`.
    pub fn induce(&self, embedding: &GroupMap) -> Result<GModule> {
        if !Arc::ptr_eq(&embedding.source, &self.group) || !embedding.is_injective() {
            return Err(Error::Precondition("induction needs an embedding of the module's group".into()));
        }
        let g = embedding.target.clone();
        let mut local = vec![u32::MAX; g.order()];
        for h in self.group.elements() {
            local[embedding.apply(h) as usize] = h;
        }
        let mut coset = vec![u32::MAX; g.order()];
        let mut reps = Vec::new();
        for x in g.elements() {
            if coset[x as usize] != u32::MAX {
                continue;
            }
            for h in self.group.elements() {
                coset[g.mul(x, embedding.apply(h)) as usize] = reps.len() as u32;
            }
            reps.push(x);
        }
        let (n, d) = (reps.len(), self.dim);
        let field = self.field.clone();
        Ok(Self::from_fn(&g, &field, n * d, |x| {
            let mut m = Matrix::zeros(&field, n * d, n * d);
            for (i, &t) in reps.iter().enumerate() {
                let xt = g.mul(x, t);
                let j = coset[xt as usize] as usize;
                let h = local[g.mul(g.inv(reps[j]), xt) as usize];
                let b = self.matrix(h);
                for r in 0..d {
                    for c in 0..d {
                        m.set(j * d + r, i * d + c, b.get(r, c));
                    }
                }
            }
            m
        }))
    }

    pub fn direct_sum(&self, other: &GModule) -> Result<GModule> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::Precondition("direct sum of modules for different groups".into()));
        }
        let gens = self.gens.iter().zip(&other.gens).map(|(a, b)| a.direct_sum(b)).collect();
        Self::from_generators(&self.group, &self.field, self.dim + other.dim, gens)
    }

    /// The same module in the basis given by the columns of `b`.
    pub fn change_basis(&self, b: &Matrix) -> Result<GModule> {
        let binv = b
            .inverse()
            .ok_or_else(|| Error::Precondition("basis change is singular".into()))?;
        let gens = self.gens.iter().map(|g| binv.mul(&g.mul(b))).collect();
        Self::from_generators(&self.group, &self.field, self.dim, gens)
    }

    /// Multiplicity of the regular module of the p-group `S` (embedded in
    /// this module's group) as a summand of the restriction: the rank of
    /// the norm element `Σ_{s∈S} ρ(s)`.
    pub fn free_multiplicity(&self, s: &GroupMap) -> Result<usize> {
        let p = self.field.characteristic() as usize;
        let mut n = s.source.order();
        while n.is_multiple_of(p) {
            n /= p;
        }
        if n != 1 {
            return Err(Error::Precondition("free multiplicity needs a p-group".into()));
        }
        let images: Vec<u32> = s.images.clone();
        Ok(self.sum_over(&images).rank())
    }
}

impl fmt::Debug for GModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GModule(dim {} over {:?} for {:?})", self.dim, self.field, self.group)
    }
}

/// An invertible intertwiner `X` with `X ρ_M(g) = ρ_N(g) X`, if one is found.
/// Exact for simple modules; for others random combinations of the
/// intertwiner basis are tried.
pub fn modules_isomorphic<R: Rng>(m: &GModule, n: &GModule, rng: &mut R) -> Result<Option<Matrix>> {
    if !Arc::ptr_eq(&m.group, &n.group) {
        return Err(Error::Precondition("isomorphism test across different groups".into()));
    }
    if m.dim != n.dim {
        return Ok(None);
    }
    if m.dim == 0 {
        return Ok(Some(Matrix::identity(&m.field, 0)));
    }
    let basis = intertwiner_space(&m.gens, &n.gens)?;
    if m.gens.is_empty() {
        return Ok(Some(Matrix::identity(&m.field, m.dim)));
    }
    for b in &basis {
        if b.inverse().is_some() {
            return Ok(Some(b.clone()));
        }
    }
    if basis.len() > 1 {
        let q = m.field.order();
        for _ in 0..32 {
            let mut x = Matrix::zeros(&m.field, m.dim, m.dim);
            for b in &basis {
                x.add_scaled(rng.gen_range(0..q), b);
            }
            if x.inverse().is_some() {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}
