//! Reference arithmetic for GF(p^k): schoolbook polynomials over Z/p reduced
//! by the field's defining polynomial, with elements read as base-p digits.

pub struct NaiveField {
    pub p: u32,
    pub k: u32,
    pub poly: Vec<u32>,
}

impl NaiveField {
    pub fn new(p: u32, poly: &[u32]) -> Self {
        NaiveField {
            p,
            k: poly.len() as u32 - 1,
            poly: poly.to_vec(),
        }
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.k)
    }

    pub fn decode(&self, mut x: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    pub fn encode(&self, c: &[u32]) -> u32 {
        c.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.encode(&s)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.decode(a), self.decode(b));
        let k = self.k as usize;
        let mut prod = vec![0u32; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % self.p;
            }
        }
        // Reduce with the monic defining polynomial, top degree first.
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            for i in 0..=k {
                let sub = c * self.poly[i] % self.p;
                prod[d - k + i] = (prod[d - k + i] + self.p - sub) % self.p;
            }
        }
        self.encode(&prod[..k])
    }

    /// No monic factor of degree 1..=k/2, found by trial division.
    pub fn is_irreducible(&self) -> bool {
        let k = self.k as usize;
        for deg in 1..=k / 2 {
            for code in 0..self.p.pow(deg as u32) {
                let mut d: Vec<u32> = (0..deg).map(|i| code / self.p.pow(i as u32) % self.p).collect();
                d.push(1);
                if poly_rem(&self.poly, &d, self.p).iter().all(|&c| c == 0) {
                    return false;
                }
            }
        }
        true
    }
}

fn poly_rem(a: &[u32], d: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dd = d.len() - 1;
    while r.len() > dd {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        for (i, &x) in d.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * x % p) % p;
        }
        r.pop();
    }
    r
}
