//! Dense elements of a group algebra `FG`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groups::{Embedded, GroupRef, Subgroup};
use crate::linalg::{Elem, FieldRef, Matrix};
use crate::modrep::GModule;

/// `Σ_x c_x x`, one coefficient per group element.
#[derive(Clone)]
pub struct AlgElem {
    group: GroupRef,
    field: FieldRef,
    coeffs: Vec<Elem>,
}

impl AlgElem {
    pub fn zero(group: &GroupRef, field: &FieldRef) -> Self {
        AlgElem {
            group: group.clone(),
            field: field.clone(),
            coeffs: vec![0; group.order()],
        }
    }

    pub fn one(group: &GroupRef, field: &FieldRef) -> Self {
        Self::basis(group, field, 0)
    }

    pub fn basis(group: &GroupRef, field: &FieldRef, x: u32) -> Self {
        let mut e = Self::zero(group, field);
        e.coeffs[x as usize] = 1;
        e
    }

    /// The sum of the given elements, each with coefficient 1.
    pub fn sum_of(group: &GroupRef, field: &FieldRef, elements: &[u32]) -> Self {
        let mut e = Self::zero(group, field);
        for &x in elements {
            e.coeffs[x as usize] = field.add(e.coeffs[x as usize], 1);
        }
        e
    }

    pub fn from_coeffs(group: &GroupRef, field: &FieldRef, coeffs: Vec<Elem>) -> Result<Self> {
        if coeffs.len() != group.order() || coeffs.iter().any(|&c| c >= field.order()) {
            return Err(Error::DimensionMismatch("coefficient vector does not fit the group".into()));
        }
        Ok(AlgElem {
            group: group.clone(),
            field: field.clone(),
            coeffs,
        })
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, x: u32) -> Elem {
        self.coeffs[x as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        self.field.axpy(&mut out.coeffs, 1, &other.coeffs);
        out
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        self.field.axpy(&mut out.coeffs, self.field.neg(1), &other.coeffs);
        out
    }

    pub fn scale(&self, c: Elem) -> AlgElem {
        let mut out = self.clone();
        self.field.scale_slice(&mut out.coeffs, c);
        out
    }

    pub fn mul(&self, other: &AlgElem) -> AlgElem {
        let (g, f) = (&self.group, &self.field);
        let mut out = vec![0; g.order()];
        let right: Vec<(u32, Elem)> = other
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(y, &c)| (y as u32, c))
            .collect();
        for (x, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for &(y, b) in &right {
                let z = g.mul(x as u32, y) as usize;
                out[z] = f.add(out[z], f.mul(a, b));
            }
        }
        AlgElem {
            group: g.clone(),
            field: f.clone(),
            coeffs: out,
        }
    }

    pub fn pow(&self, e: u64) -> AlgElem {
        let mut acc = AlgElem::one(&self.group, &self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, g: u32) -> AlgElem {
        let mut out = vec![0; self.group.order()];
        for (x, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out[self.group.conj(g, x as u32) as usize] = c;
            }
        }
        AlgElem {
            group: self.group.clone(),
            field: self.field.clone(),
            coeffs: out,
        }
    }

    /// Invariant under conjugation by every element of `q`.
    pub fn is_invariant(&self, q: &Subgroup) -> bool {
        q.generators().iter().all(|&g| self.conjugate(g) == *self)
    }

    /// `Σ c_x ρ(x)`.
    pub fn act(&self, m: &GModule) -> Matrix {
        let mut acc = Matrix::zeros(m.field(), m.dim(), m.dim());
        for (x, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                acc.add_scaled(c, m.matrix(x as u32));
            }
        }
        acc
    }

    /// Transport to another group along an injective map of the support
    /// (`images[x]` for each `x` of this group).
    pub fn transport(&self, target: &GroupRef, images: &[u32]) -> AlgElem {
        let mut out = AlgElem::zero(target, &self.field);
        for (x, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out.coeffs[images[x] as usize] = c;
            }
        }
        out
    }
}

impl PartialEq for AlgElem {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.coeffs == other.coeffs
    }
}

impl Eq for AlgElem {}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(x, &c)| format!("{c}*g{x}"))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// The Brauer map: truncation of a `Q`-invariant element to `C_G(Q)`,
/// returned as an element of the standalone centralizer group.
pub fn brauer_map(x: &AlgElem, q: &Subgroup, centralizer: &Embedded) -> Result<AlgElem> {
    if !x.is_invariant(q) {
        return Err(Error::Precondition("Brauer map of a non-invariant element".into()));
    }
    let c = &centralizer.group;
    let gens = q.generators();
    let g = &x.group;
    let centralizes = |y: u32| gens.iter().all(|&s| g.mul(y, s) == g.mul(s, y));
    if !centralizer.embedding.images.iter().all(|&y| centralizes(y))
        || g.elements().filter(|&y| centralizes(y)).count() != c.order()
    {
        return Err(Error::Precondition("target is not inside the centralizer".into()));
    }
    let coeffs = centralizer.embedding.images.iter().map(|&y| x.coeff(y)).collect();
    AlgElem::from_coeffs(c, &x.field, coeffs)
}

/// `tr_Q^P(a) = Σ_{t ∈ P/Q} t a t^-1`.
pub fn relative_trace(a: &AlgElem, q: &Subgroup, p: &Subgroup) -> Result<AlgElem> {
    if !q.is_subgroup_of(p) {
        return Err(Error::Precondition("relative trace needs Q ≤ P".into()));
    }
    if !a.is_invariant(q) {
        return Err(Error::Precondition("relative trace of a non-invariant element".into()));
    }
    let mut acc = AlgElem::zero(&a.group, &a.field);
    for t in q.left_transversal(p) {
        acc = acc.add(&a.conjugate(t));
    }
    Ok(acc)
}
