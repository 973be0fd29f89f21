//! Dense univariate polynomials over a [`Field`], lowest degree first.

use super::field::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Elem>);

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    /// The monic linear polynomial `x - root`.
    pub fn linear(f: &Field, root: Elem) -> Self {
        Poly(vec![f.neg(root), 1])
    }

    pub fn x() -> Self {
        Poly(vec![0, 1])
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Elem {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn monic(&self, f: &Field) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv(self.lead());
        Poly(self.0.iter().map(|&c| f.mul(c, inv)).collect())
    }

    pub fn eval(&self, f: &Field, x: Elem) -> Elem {
        self.0.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let v = (0..n)
            .map(|i| {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                f.sub(a, b)
            })
            .collect();
        Poly(v).trimmed()
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly(v).trimmed()
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, f: &Field, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv = f.inv(d.lead());
        let mut q = vec![0; r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = f.mul(r[top], inv);
            if c == 0 {
                continue;
            }
            q[top - dd] = c;
            for (i, &di) in d.0.iter().enumerate() {
                let t = top - dd + i;
                r[t] = f.sub(r[t], f.mul(c, di));
            }
        }
        r.truncate(dd);
        (Poly(q).trimmed(), Poly(r).trimmed())
    }

    pub fn rem(&self, f: &Field, d: &Poly) -> Poly {
        self.divrem(f, d).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(f: &Field, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, f: &Field, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(f, m);
        let mut acc = Poly::one().rem(f, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, m);
            }
            base = base.mul(f, &base).rem(f, m);
            e >>= 1;
        }
        acc
    }

    /// All roots in the field, by exhaustive evaluation.
    pub fn roots(&self, f: &Field) -> Vec<Elem> {
        f.elements().filter(|&x| self.eval(f, x) == 0).collect()
    }

    /// Irreducible factors of degree `deg` when exactly one such factor
    /// divides `self` (distinct-degree splitting without equal-degree
    /// factorization). Used to pick Norton-test candidates.
    pub fn unique_factor_of_degree(&self, f: &Field, deg: usize) -> Option<Poly> {
        if self.degree()? < deg || deg == 0 {
            return None;
        }
        let monic = self.monic(f);
        // Remove factors of smaller degree first.
        let mut rest = monic;
        for d in 1..deg {
            let g = frob_gcd(f, &rest, d);
            if g.degree() > Some(0) {
                rest = strip(f, &rest, &g);
            }
        }
        let g = frob_gcd(f, &rest, deg);
        (g.degree() == Some(deg)).then_some(g)
    }
}

/// `gcd(a, x^(q^d) - x)`.
fn frob_gcd(f: &Field, a: &Poly, d: usize) -> Poly {
    if a.degree().unwrap_or(0) == 0 {
        return Poly::one();
    }
    let mut xp = Poly::x().rem(f, a);
    for _ in 0..d {
        xp = xp.powmod(f, f.order() as u64, a);
    }
    Poly::gcd(f, a, &xp.sub(f, &Poly::x()))
}

/// Divide out every power of the squarefree `g`.
fn strip(f: &Field, a: &Poly, g: &Poly) -> Poly {
    let mut a = a.clone();
    loop {
        let (q, r) = a.divrem(f, g);
        if !r.is_zero() {
            return a;
        }
        a = q;
        let h = Poly::gcd(f, &a, g);
        if h.degree() == Some(0) {
            return a;
        }
    }
}
