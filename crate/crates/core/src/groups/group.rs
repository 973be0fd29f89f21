//! Finite groups materialized as Cayley tables.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Default bound on the number of elements a group may have.
pub const DEFAULT_MAX_ORDER: usize = 5040;

/// A finite group on the labels `0..n`, with `0` the identity.
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<u32>,
    permutations: Option<Permutations>,
    name: Option<String>,
    words: OnceLock<Vec<(u32, usize)>>,
}

/// Permutation realization: 0-based image list per element.
#[derive(Clone, Debug)]
pub struct Permutations {
    pub degree: usize,
    pub images: Vec<Vec<u32>>,
}

pub type GroupRef = Arc<FiniteGroup>;

impl FiniteGroup {
    /// Enumerate the group generated by permutations of `1..=degree`.
    ///
    /// Elements are listed breadth-first from the identity, multiplying on
    /// the left by the generators in sorted order. Products compose right to
    /// left: `(a·b)(i) = a(b(i))`.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<u32>],
        max_order: usize,
    ) -> Result<GroupRef> {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        for g in generators {
            if g.len() != degree {
                return Err(Error::Malformed(format!(
                    "generator {g:?} does not have {degree} images"
                )));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x == 0 || x as usize > degree || seen[x as usize - 1] {
                    return Err(Error::Malformed(format!(
                        "generator {g:?} is not a permutation of 1..{degree}"
                    )));
                }
                seen[x as usize - 1] = true;
            }
            gens.push(g.iter().map(|&x| x - 1).collect());
        }
        gens.sort();
        gens.dedup();
        let identity: Vec<u32> = (0..degree as u32).collect();
        gens.retain(|g| *g != identity);

        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { b.iter().map(|&i| a[i as usize]).collect() };
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = compose(g, &elements[x]);
                if !index.contains_key(&y) {
                    if elements.len() == max_order {
                        return Err(Error::BoundExceeded { bound: max_order });
                    }
                    index.insert(y.clone(), elements.len() as u32);
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elements[a], &elements[b])];
            }
        }
        let generator_indices = gens.iter().map(|g| index[g]).collect();
        let mut group = Self::from_table_unchecked(n, table, generator_indices);
        group.permutations = Some(Permutations {
            degree,
            images: elements,
        });
        Ok(Arc::new(group))
    }

    /// Build from a multiplication table with `0` as identity. Generators
    /// default to a greedy generating set.
    pub fn from_table(order: usize, table: Vec<u32>, generators: Option<Vec<u32>>) -> Result<GroupRef> {
        if table.len() != order * order || order == 0 {
            return Err(Error::Malformed("table size does not match order".into()));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::Malformed("table entry out of range".into()));
        }
        for a in 0..order {
            if table[a] as usize != a || table[a * order] as usize != a {
                return Err(Error::Malformed("0 is not the identity".into()));
            }
            let mut seen = vec![false; order];
            for b in 0..order {
                let x = table[a * order + b] as usize;
                if seen[x] {
                    return Err(Error::Malformed("table is not a Latin square".into()));
                }
                seen[x] = true;
            }
        }
        let gens = generators.unwrap_or_default();
        let mut g = Self::from_table_unchecked(order, table, gens);
        if g.generators.is_empty() && order > 1 {
            let all: Vec<u32> = (0..order as u32).collect();
            g.generators = greedy_generators(&g, &all);
        }
        Ok(Arc::new(g))
    }

    fn from_table_unchecked(order: usize, table: Vec<u32>, generators: Vec<u32>) -> Self {
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        FiniteGroup {
            order,
            table,
            inverse,
            generators,
            permutations: None,
            name: None,
            words: OnceLock::new(),
        }
    }

    pub fn trivial() -> GroupRef {
        Arc::new(Self::from_table_unchecked(1, vec![0], Vec::new()))
    }

    pub fn with_name(mut self: GroupRef, name: impl Into<String>) -> GroupRef {
        match Arc::get_mut(&mut self) {
            Some(g) => {
                g.name = Some(name.into());
                self
            }
            None => self,
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn permutations(&self) -> Option<&Permutations> {
        self.permutations.as_ref()
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.generators.iter().all(|&g| self.mul(a, g) == self.mul(g, a)))
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen[x as usize] {
                continue;
            }
            let mut class: Vec<u32> = self.elements().map(|g| self.conj(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &y in &class {
                seen[y as usize] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Breadth-first spanning tree over the generators: for each element,
    /// `(parent, generator position)` with `element = generator · parent`.
    /// The identity maps to `(0, usize::MAX)`.
    pub fn word_tree(&self) -> &[(u32, usize)] {
        self.words.get_or_init(|| {
            let mut tree = vec![(u32::MAX, usize::MAX); self.order];
            tree[0] = (0, usize::MAX);
            let mut queue = VecDeque::from([0u32]);
            while let Some(x) = queue.pop_front() {
                for (i, &g) in self.generators.iter().enumerate() {
                    let y = self.mul(g, x);
                    if tree[y as usize].0 == u32::MAX {
                        tree[y as usize] = (x, i);
                        queue.push_back(y);
                    }
                }
            }
            tree
        })
    }

    /// Breadth-first order of the elements as reached in [`Self::word_tree`].
    pub fn bfs_order(&self) -> Vec<u32> {
        let mut order = vec![0u32];
        let mut queue = VecDeque::from([0u32]);
        let mut seen = vec![false; self.order];
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &g in &self.generators {
                let y = self.mul(g, x);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    order.push(y);
                    queue.push_back(y);
                }
            }
        }
        order
    }

    /// Check the group axioms: identity and inverses exactly, associativity
    /// on the given triples, and that the generators generate.
    pub fn validate(&self, triples: impl IntoIterator<Item = (u32, u32, u32)>) -> Result<()> {
        for a in self.elements() {
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return Err(Error::Malformed(format!("bad inverse of {a}")));
            }
        }
        for (a, b, c) in triples {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Malformed(format!(
                    "associativity fails on ({a}, {b}, {c})"
                )));
            }
        }
        if self.bfs_order().len() != self.order {
            return Err(Error::Malformed("generators do not generate".into()));
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup({} of order {})",
            self.name.as_deref().unwrap_or("unnamed"),
            self.order
        )
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Subgroup of `g` generated by `gens`, sorted.
pub fn closure(g: &FiniteGroup, gens: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut elems = vec![0u32];
    let mut next = 0;
    while next < elems.len() {
        let x = elems[next];
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y as usize] {
                seen[y as usize] = true;
                elems.push(y);
            }
        }
        next += 1;
    }
    elems.sort_unstable();
    elems
}

/// Greedy generating set: scan `elements` in order and keep each element
/// not yet generated by the earlier choices.
pub fn greedy_generators(g: &FiniteGroup, elements: &[u32]) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut have = closure(g, &gens);
    for &x in elements {
        if have.binary_search(&x).is_err() {
            gens.push(x);
            have = closure(g, &gens);
        }
    }
    gens
}

/// A map between groups given by the image of every element.
#[derive(Clone)]
pub struct GroupMap {
    pub source: GroupRef,
    pub target: GroupRef,
    pub images: Vec<u32>,
}

impl GroupMap {
    pub fn new(source: GroupRef, target: GroupRef, images: Vec<u32>) -> Result<Self> {
        if images.len() != source.order() || images.iter().any(|&x| x as usize >= target.order()) {
            return Err(Error::Malformed("group map images out of range".into()));
        }
        Ok(GroupMap {
            source,
            target,
            images,
        })
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    pub fn is_homomorphism(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        s.elements().all(|a| {
            s.generators()
                .iter()
                .all(|&b| self.apply(s.mul(a, b)) == t.mul(self.apply(a), self.apply(b)))
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut v = self.images.clone();
        v.sort_unstable();
        v.dedup();
        v.len() == self.images.len()
    }
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupMap({:?} -> {:?})", self.source, self.target)
    }
}

/// An external semidirect product `K ⋊ S` with its canonical embeddings.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub group: GroupRef,
    pub kernel: GroupMap,
    pub complement: GroupMap,
}

/// Form `K ⋊ S` where `action[s]` is the automorphism of `K` by which the
/// element `s` of `S` acts. Elements are encoded as `s·|K| + k` for the
/// pair `(k, s)`, multiplied by `(k, s)(k', s') = (k·s(k'), s s')`.
pub fn semidirect_product(k: &GroupRef, s: &GroupRef, action: &[GroupMap]) -> Result<SemidirectProduct> {
    if action.len() != s.order() {
        return Err(Error::Precondition(format!(
            "{} automorphisms for a group of order {}",
            action.len(),
            s.order()
        )));
    }
    for (i, a) in action.iter().enumerate() {
        if a.source.order() != k.order() || a.target.order() != k.order() {
            return Err(Error::Precondition("action maps must be endomorphisms of K".into()));
        }
        if !a.is_injective() || !a.is_homomorphism() {
            return Err(Error::Precondition(format!(
                "element {i} does not act by an automorphism"
            )));
        }
    }
    for x in s.elements() {
        for y in s.elements() {
            let xy = s.mul(x, y) as usize;
            if k.elements()
                .any(|c| action[xy].apply(c) != action[x as usize].apply(action[y as usize].apply(c)))
            {
                return Err(Error::Precondition(
                    "action is not a homomorphism into Aut(K)".into(),
                ));
            }
        }
    }
    let (nk, ns) = (k.order(), s.order());
    let n = nk * ns;
    let mut table = vec![0u32; n * n];
    for s1 in 0..ns {
        for k1 in 0..nk {
            let a = s1 * nk + k1;
            for s2 in 0..ns {
                for k2 in 0..nk {
                    let b = s2 * nk + k2;
                    let kk = k.mul(k1 as u32, action[s1].apply(k2 as u32));
                    let ss = s.mul(s1 as u32, s2 as u32);
                    table[a * n + b] = ss * nk as u32 + kk;
                }
            }
        }
    }
    let mut gens: Vec<u32> = k.generators().to_vec();
    gens.extend(s.generators().iter().map(|&t| t * nk as u32));
    let group = Arc::new(FiniteGroup::from_table_unchecked(n, table, gens));
    let kernel = GroupMap::new(k.clone(), group.clone(), k.elements().collect())?;
    let complement = GroupMap::new(
        s.clone(),
        group.clone(),
        s.elements().map(|t| t * nk as u32).collect(),
    )?;
    Ok(SemidirectProduct {
        group,
        kernel,
        complement,
    })
}

/// Degree `k` of the finite field GF(p^k) that splits every group algebra
/// over subquotients of `g`: the order of `p` modulo the p'-part of the
/// exponent.
pub fn splitting_degree(g: &FiniteGroup, p: u64) -> u32 {
    let mut e = g.exponent() as u64;
    while e.is_multiple_of(p) {
        e /= p;
    }
    if e == 1 {
        return 1;
    }
    let mut k = 1;
    let mut x = p % e;
    while x != 1 {
        x = x * p % e;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn sym(n: usize) -> GroupRef {
        let mut t: Vec<u32> = (1..=n as u32).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (1..=n as u32).map(|i| i % n as u32 + 1).collect();
        FiniteGroup::from_permutations(n, &[t, c], DEFAULT_MAX_ORDER).unwrap()
    }

    #[test]
    fn symmetric_groups() {
        assert_eq!(sym(4).order(), 24);
        assert_eq!(sym(5).order(), 120);
        let triv = FiniteGroup::from_permutations(1, &[], DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(triv.order(), 1);
        assert_eq!(sym(4).conjugacy_classes().len(), 5);
        assert_eq!(sym(5).exponent(), 60);
    }

    #[test]
    fn rejects_bad_permutations() {
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![1, 1, 2]], 10),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            FiniteGroup::from_permutations(5, &[vec![2, 1, 3, 4, 5], vec![2, 3, 4, 5, 1]], 100),
            Err(Error::BoundExceeded { bound: 100 })
        ));
    }

    #[test]
    fn splitting_degrees() {
        assert_eq!(splitting_degree(&sym(5), 2), 4);
        assert_eq!(splitting_degree(&sym(4), 2), 2);
        assert_eq!(splitting_degree(&sym(3), 3), 1);
    }

    #[test]
    fn semidirect_with_trivial_complement_is_the_kernel() {
        let k = sym(3);
        let s = FiniteGroup::trivial();
        let id = GroupMap::new(k.clone(), k.clone(), k.elements().collect()).unwrap();
        let sd = semidirect_product(&k, &s, &[id]).unwrap();
        assert_eq!(sd.group.order(), 6);
        assert!(sd.kernel.is_homomorphism());
    }

    #[test]
    fn semidirect_rejects_non_automorphisms() {
        let k = sym(3);
        let s = sym(2);
        let id = GroupMap::new(k.clone(), k.clone(), k.elements().collect()).unwrap();
        let collapse = GroupMap::new(k.clone(), k.clone(), vec![0; 6]).unwrap();
        assert!(semidirect_product(&k, &s, &[id, collapse]).is_err());
    }
}
