//! Finite fields GF(p^k) with table-driven arithmetic.
//!
//! An element is stored as the integer `Σ a_i p^i` where `Σ a_i x^i` is its
//! polynomial representative modulo the defining polynomial. The same integer
//! is used for serialization, so outputs are stable across runs.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, encoded as an integer in `[0, q)`.
pub type Elem = u32;

const MAX_ORDER: u64 = 1 << 16;
const ADD_TABLE_LIMIT: u32 = 1024;

pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    /// Monic defining polynomial, coefficients from degree 0 to degree k.
    poly: Vec<u32>,
    generator: Elem,
    /// `exp[i] = g^i` for `0 <= i < 2(q-1)`, doubled to skip a reduction.
    exp: Vec<Elem>,
    log: Vec<u32>,
    neg: Vec<Elem>,
    add: Option<Vec<u16>>,
}

pub type FieldRef = Arc<Field>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// GF(p^k) with the least irreducible monic defining polynomial.
    ///
    /// Candidates `x^k + c_{k-1} x^{k-1} + ... + c_0` are ordered by the
    /// integer `Σ c_i p^i`, i.e. compared from the highest non-leading
    /// coefficient down.
    pub fn new(p: u64, k: u32) -> Result<FieldRef> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if q > MAX_ORDER as u128 {
            return Err(Error::FieldTooLarge { p, k });
        }
        let (p, q) = (p as u32, q as u32);
        let poly = least_irreducible(p, k);
        Ok(Arc::new(Self::with_polynomial(p, k, q, poly)))
    }

    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<FieldRef> {
        Self::new(p, 1)
    }

    fn with_polynomial(p: u32, k: u32, q: u32, poly: Vec<u32>) -> Self {
        let slow = SlowArith { p, k, poly: &poly };
        let neg: Vec<Elem> = (0..q).map(|a| slow.neg(a)).collect();
        let generator = (1..q)
            .find(|&g| slow.order(g) == q - 1)
            .expect("multiplicative group of a finite field is cyclic");
        let mut exp = vec![0; 2 * (q as usize - 1)];
        let mut log = vec![0; q as usize];
        let mut x = 1;
        for i in 0..(q - 1) as usize {
            exp[i] = x;
            exp[i + q as usize - 1] = x;
            log[x as usize] = i as u32;
            x = slow.mul(x, generator);
        }
        let add = if p != 2 && q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = slow.add(a, b) as u16;
                }
            }
            Some(t)
        } else {
            None
        };
        Field {
            p,
            k,
            q,
            poly,
            generator,
            exp,
            log,
            neg,
            add,
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn defining_polynomial(&self) -> &[u32] {
        &self.poly
    }

    /// A fixed generator of the multiplicative group.
    pub fn primitive_element(&self) -> Elem {
        self.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    /// Image of an integer under `Z -> GF(p) ⊆ GF(q)`.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            a ^ b
        } else if let Some(t) = &self.add {
            t[(a * self.q + b) as usize] as Elem
        } else {
            self.add_digits(a, b)
        }
    }

    fn add_digits(&self, mut a: Elem, mut b: Elem) -> Elem {
        let mut r = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            r += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        r
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    /// Multiplicative inverse; panics on zero.
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(a != 0, "inverse of zero");
        let l = self.log[a as usize];
        if l == 0 {
            1
        } else {
            self.exp[(self.q - 1 - l) as usize]
        }
    }

    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = self.log[a as usize] as u64 * (e % (self.q as u64 - 1));
        self.exp[(l % (self.q as u64 - 1)) as usize]
    }

    /// `dst += c * src`, elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        if c == 0 {
            return;
        }
        let lc = self.log[c as usize];
        if self.p == 2 {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d ^= self.exp[(lc + self.log[s as usize]) as usize];
                }
            }
        } else {
            for (d, &s) in dst.iter_mut().zip(src) {
                if s != 0 {
                    *d = self.add(*d, self.exp[(lc + self.log[s as usize]) as usize]);
                }
            }
        }
    }

    /// `v *= c`, elementwise.
    #[inline]
    pub fn scale_slice(&self, v: &mut [Elem], c: Elem) {
        if c == 0 {
            v.iter_mut().for_each(|x| *x = 0);
            return;
        }
        let lc = self.log[c as usize];
        for x in v.iter_mut() {
            if *x != 0 {
                *x = self.exp[(lc + self.log[*x as usize]) as usize];
            }
        }
    }

    /// Discrete logarithm to the base of [`Field::primitive_element`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// The unique `y` with `y^(p^n) = x`.
    pub fn frobenius_root(&self, x: Elem, n: u32) -> Elem {
        // Frobenius has order k, so the inverse of its n-th power is its
        // (k - n mod k)-th power.
        let m = (self.k - n % self.k) % self.k;
        let mut y = x;
        for _ in 0..m {
            y = self.pow(y, self.p as u64);
        }
        y
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.k)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.poly == other.poly
    }
}

impl Eq for Field {}

/// Table-free arithmetic used to bootstrap the tables.
struct SlowArith<'a> {
    p: u32,
    k: u32,
    poly: &'a [u32],
}

impl SlowArith<'_> {
    fn digits(&self, mut a: u32) -> Vec<u32> {
        let mut d = vec![0; self.k as usize];
        for x in d.iter_mut() {
            *x = a % self.p;
            a /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&s)
    }

    fn neg(&self, a: u32) -> u32 {
        let d: Vec<u32> = self
            .digits(a)
            .iter()
            .map(|&x| (self.p - x) % self.p)
            .collect();
        self.encode(&d)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % self.p as u64;
            }
        }
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c != 0 {
                // x^k = -Σ poly[i] x^i
                for i in 0..k {
                    let sub = c * self.poly[i] as u64 % self.p as u64;
                    let t = deg - k + i;
                    prod[t] = (prod[t] + self.p as u64 - sub) % self.p as u64;
                }
                prod[deg] = 0;
            }
        }
        let d: Vec<u32> = prod[..k].iter().map(|&x| x as u32).collect();
        self.encode(&d)
    }

    fn order(&self, g: u32) -> u32 {
        let mut x = g;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }
}

/// Least irreducible monic polynomial of degree `k` over GF(p), as
/// coefficients `c_0..c_k`.
fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(k);
    for n in 0..count {
        let mut c = Vec::with_capacity(k as usize + 1);
        let mut m = n;
        for _ in 0..k {
            c.push((m % p as u64) as u32);
            m /= p as u64;
        }
        c.push(1);
        if prime_poly_irreducible(p, &c) {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree at most deg/2.
fn prime_poly_irreducible(p: u32, f: &[u32]) -> bool {
    let deg = f.len() - 1;
    if f[0] == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut m = n;
            for _ in 0..d {
                g.push((m % p as u64) as u32);
                m /= p as u64;
            }
            g.push(1);
            if prime_poly_rem_is_zero(p, f, &g) {
                return false;
            }
        }
    }
    true
}

fn prime_poly_rem_is_zero(p: u32, f: &[u32], g: &[u32]) -> bool {
    let mut r: Vec<u64> = f.iter().map(|&x| x as u64).collect();
    let dg = g.len() - 1;
    let p = p as u64;
    for top in (dg..r.len()).rev() {
        let c = r[top] % p;
        if c != 0 {
            for i in 0..=dg {
                let t = top - dg + i;
                r[t] = (r[t] + p * p - c * g[i] as u64 % p) % p;
            }
        }
    }
    r[..dg].iter().all(|&x| x % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::NonPrime(4))));
        assert!(matches!(Field::new(2, 0), Err(Error::ZeroDegree)));
        assert!(matches!(Field::new(2, 17), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn small_fields() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(f.defining_polynomial(), &[1, 1, 1]);
        let g = f.primitive_element();
        assert_eq!(f.pow(g, 3), 1);
        assert_ne!(g, 1);
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.defining_polynomial(), &[1, 0, 1]);
        let f = Field::new(2, 4).unwrap();
        assert_eq!(f.defining_polynomial(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn frobenius_is_bijective_on_gf9() {
        let f = Field::new(3, 2).unwrap();
        let mut images: Vec<Elem> = f.elements().map(|x| f.pow(x, 3)).collect();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), 9);
    }

    #[test]
    fn frobenius_root_examples() {
        let f = Field::new(2, 2).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.frobenius_root(1, 5), 1);
        assert_eq!(f.frobenius_root(0, 3), 0);
        let r = f.frobenius_root(g, 1);
        // Exhaustive check: r is the only square root of g.
        let roots: Vec<Elem> = f.elements().filter(|&y| f.mul(y, y) == g).collect();
        assert_eq!(roots, vec![r]);
        assert_eq!(r, f.mul(g, g));
    }

    #[test]
    fn digitwise_addition_matches_table() {
        let f = Field::new(3, 7).unwrap();
        assert!(f.add.is_none());
        let slow = SlowArith {
            p: 3,
            k: 7,
            poly: f.defining_polynomial(),
        };
        for a in (0..f.order()).step_by(97) {
            for b in (0..f.order()).step_by(89) {
                assert_eq!(f.add(a, b), slow.add(a, b));
            }
        }
    }
}
