//! Extending a simple module of `K = C_G(Q)` to `K ⋊ T`, where `T` is a
//! p-group of automorphisms (conjugation by a subgroup `N ≤ N_G(Q)`, taken
//! modulo `Q`) fixing its isomorphism class.

use crate::error::{Error, Result};
use crate::groups::{quotient, semidirect_product, Embedded, GroupMap, Quotient, SemidirectProduct, Subgroup};
use crate::linalg::{intertwiner_space, Elem, Matrix};
use crate::modrep::GModule;

pub struct Extension {
    /// `T = N / Q` with coset representatives in `G`.
    pub t: Quotient,
    /// The normalized operator `A_t` for each element of `T`.
    pub ops: Vec<Matrix>,
    /// `ν(t)`: the scalar by which the raw intertwiner was divided.
    pub certificate: Vec<Elem>,
}

/// `x A = B` for a scalar `x`, if any.
fn scalar_ratio(a: &Matrix, b: &Matrix) -> Option<Elem> {
    let f = a.field();
    let pos = a.data().iter().position(|&x| x != 0)?;
    let x = f.div(b.data()[pos], a.data()[pos]);
    (a.scale(x) == *b).then_some(x)
}

/// Local index in `K` of `n k n⁻¹`.
fn conj_local(k: &Embedded, n: u32, x: u32) -> Result<u32> {
    let g = &k.embedding.target;
    k.to_local(g.conj(n, k.embedding.apply(x)))
        .ok_or_else(|| Error::Precondition("element does not normalize the centralizer".into()))
}

/// Build the extension. `n` must contain `q`, normalize `k`, and fix the
/// class of `v`; `q` must centralize `k`.
pub fn extend_to_stabilizer(v: &GModule, k: &Embedded, q: &Subgroup, n: &Subgroup) -> Result<Extension> {
    let g = &k.embedding.target;
    for &x in k.embedding.images.iter() {
        if q.generators().iter().any(|&s| g.mul(s, x) != g.mul(x, s)) {
            return Err(Error::Precondition("Q does not centralize K".into()));
        }
    }
    let t = quotient(n, q)?;
    let f = v.field().clone();
    let dim = v.dim();
    let kgens = k.group.generators().to_vec();
    let mut raw = Vec::with_capacity(t.reps.len());
    for (i, &rep) in t.reps.iter().enumerate() {
        if i == 0 || kgens.is_empty() {
            raw.push(Matrix::identity(&f, dim));
            continue;
        }
        let target: Vec<Matrix> = kgens
            .iter()
            .map(|&x| Ok(v.matrix(conj_local(k, rep, x)?).clone()))
            .collect::<Result<_>>()?;
        let space = intertwiner_space(v.generators(), &target)?;
        if space.len() != 1 || space[0].inverse().is_none() {
            return Err(Error::Precondition(format!(
                "conjugation does not fix the module class ({} intertwiners)",
                space.len()
            )));
        }
        raw.push(space[0].clone());
    }
    let tg = &t.group;
    let m = tg.order();
    // c(s,t) with A_s A_t = c(s,t) A_st.
    let mut mu = vec![1 as Elem; m];
    for s in 0..m {
        for u in 0..m {
            let st = tg.mul(s as u32, u as u32) as usize;
            let prod = raw[s].mul(&raw[u]);
            let c = scalar_ratio(&raw[st], &prod)
                .ok_or_else(|| Error::Internal("intertwiner products are not scalar multiples".into()))?;
            mu[s] = f.mul(mu[s], c);
        }
    }
    // c(s,t)^|T| = μ(s)μ(t)/μ(st); with ν = μ^(1/|T|), dividing A_s by ν(s)
    // makes the assignment multiplicative. |T| is a power of p, so the root
    // is a Frobenius inverse.
    let log_t = {
        let (mut e, mut x) = (0u32, m);
        while x > 1 {
            x /= f.characteristic() as usize;
            e += 1;
        }
        e
    };
    let nu: Vec<Elem> = mu.iter().map(|&x| f.frobenius_root(x, log_t)).collect();
    let ops: Vec<Matrix> = raw.iter().zip(&nu).map(|(a, &x)| a.scale(f.inv(x))).collect();
    for s in 0..m {
        for u in 0..m {
            let st = tg.mul(s as u32, u as u32) as usize;
            if ops[s].mul(&ops[u]) != ops[st] {
                return Err(Error::Internal("normalized extension is not multiplicative".into()));
            }
        }
    }
    Ok(Extension {
        t,
        ops,
        certificate: nu,
    })
}

impl Extension {
    /// Free multiplicity of the restriction to `T`: rank of `Σ_t A_t`.
    pub fn free_multiplicity(&self) -> usize {
        let mut acc = Matrix::zeros(self.ops[0].field(), self.ops[0].rows(), self.ops[0].cols());
        for a in &self.ops {
            acc.add_scaled(1, a);
        }
        acc.rank()
    }

    /// The semidirect product `K ⋊ T` and the extended module on it.
    pub fn as_module(&self, v: &GModule, k: &Embedded) -> Result<(SemidirectProduct, GModule)> {
        let sd = conjugation_product(k, &self.t)?;
        let mut gens = Vec::new();
        for &x in sd.group.generators() {
            let kk = x as usize % k.group.order();
            let tt = x as usize / k.group.order();
            gens.push(v.matrix(kk as u32).mul(&self.ops[tt]));
        }
        let m = GModule::new(&sd.group, v.field(), v.dim(), gens)?;
        Ok((sd, m))
    }
}

/// `K ⋊ (N/Q)` with `N/Q` acting by conjugation through coset representatives.
pub fn conjugation_product(k: &Embedded, t: &Quotient) -> Result<SemidirectProduct> {
    let action = t
        .reps
        .iter()
        .map(|&n| {
            let images = k.group.elements().map(|x| conj_local(k, n, x)).collect::<Result<Vec<_>>>()?;
            GroupMap::new(k.group.clone(), k.group.clone(), images)
        })
        .collect::<Result<Vec<_>>>()?;
    semidirect_product(&k.group, &t.group, &action)
}

/// Multiplicity through a larger admissible `S`: induce the extension from
/// `K ⋊ T` to `K ⋊ S` and take the free multiplicity over `S`. Here
/// `n_t ≤ n_s` are the subgroups of `N_G(Q)` whose quotients by `Q` give `T ≤ S`.
pub fn multiplicity_through(
    v: &GModule,
    k: &Embedded,
    q: &Subgroup,
    n_t: &Subgroup,
    n_s: &Subgroup,
) -> Result<usize> {
    let ext = extend_to_stabilizer(v, k, q, n_t)?;
    let (small, module) = ext.as_module(v, k)?;
    let s = quotient(n_s, q)?;
    let big = conjugation_product(k, &s)?;
    let nk = k.group.order() as u32;
    let images: Vec<u32> = small
        .group
        .elements()
        .map(|x| {
            let (kk, tt) = (x % nk, x / nk);
            s.project[ext.t.reps[tt as usize] as usize] * nk + kk
        })
        .collect();
    let emb = GroupMap::new(small.group.clone(), big.group.clone(), images)?;
    let induced = module.induce(&emb)?;
    induced.free_multiplicity(&big.complement)
}
