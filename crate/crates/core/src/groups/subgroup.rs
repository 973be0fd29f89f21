//! Subgroups of a materialized group, stored as sorted element sets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::group::{closure, greedy_generators, FiniteGroup, GroupMap, GroupRef};
use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Subgroup {
    parent: GroupRef,
    elements: Arc<Vec<u32>>,
}

impl Subgroup {
    /// Wrap a set of elements, checking closure.
    pub fn new(parent: &GroupRef, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) || elements.iter().any(|&x| x as usize >= parent.order()) {
            return Err(Error::Precondition("not a subgroup: identity missing or out of range".into()));
        }
        let s = Subgroup {
            parent: parent.clone(),
            elements: Arc::new(elements),
        };
        for &a in s.elements() {
            for &b in s.elements() {
                if !s.contains(parent.mul(a, b)) {
                    return Err(Error::Precondition("not a subgroup: not closed".into()));
                }
            }
        }
        Ok(s)
    }

    fn from_sorted(parent: &GroupRef, elements: Vec<u32>) -> Self {
        Subgroup {
            parent: parent.clone(),
            elements: Arc::new(elements),
        }
    }

    pub fn generated(parent: &GroupRef, gens: &[u32]) -> Self {
        Self::from_sorted(parent, closure(parent, gens))
    }

    pub fn whole(parent: &GroupRef) -> Self {
        Self::from_sorted(parent, parent.elements().collect())
    }

    pub fn trivial(parent: &GroupRef) -> Self {
        Self::from_sorted(parent, vec![0])
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order() && self.elements.iter().all(|&x| other.contains(x))
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        let mut n = self.order() as u64;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    /// `g S g^-1`.
    pub fn conjugate(&self, g: u32) -> Subgroup {
        let mut v: Vec<u32> = self.elements.iter().map(|&x| self.parent.conj(g, x)).collect();
        v.sort_unstable();
        Self::from_sorted(&self.parent, v)
    }

    pub fn generators(&self) -> Vec<u32> {
        greedy_generators(&self.parent, &self.elements)
    }

    /// `C_H(self)`.
    pub fn centralizer_in(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators();
        let g = &self.parent;
        let v = h
            .elements()
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
            .collect();
        Self::from_sorted(g, v)
    }

    /// `N_H(self)`.
    pub fn normalizer_in(&self, h: &Subgroup) -> Subgroup {
        let gens = self.generators();
        let g = &self.parent;
        let v = h
            .elements()
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&s| self.contains(g.conj(x, s))))
            .collect();
        Self::from_sorted(g, v)
    }

    pub fn is_normal_in(&self, h: &Subgroup) -> bool {
        self.normalizer_in(h).order() == h.order()
    }

    /// Some `h ∈ H` with `h self h^-1 = other`, least such.
    pub fn conjugating_element(&self, h: &Subgroup, other: &Subgroup) -> Option<u32> {
        if self.order() != other.order() {
            return None;
        }
        let gens = self.generators();
        h.elements()
            .iter()
            .copied()
            .find(|&x| gens.iter().all(|&s| other.contains(self.parent.conj(x, s))))
    }

    /// Left transversal of `self` in `h ⊇ self`: least element of each coset `xS`.
    pub fn left_transversal(&self, h: &Subgroup) -> Vec<u32> {
        let g = &self.parent;
        let mut covered = vec![false; g.order()];
        let mut reps = Vec::new();
        for &x in h.elements() {
            if covered[x as usize] {
                continue;
            }
            reps.push(x);
            for &s in self.elements() {
                covered[g.mul(x, s) as usize] = true;
            }
        }
        reps
    }

    /// The subgroup as a standalone group: element `i` is `elements()[i]`.
    pub fn as_group(&self) -> Embedded {
        let g = &self.parent;
        let n = self.order();
        let mut local = vec![u32::MAX; g.order()];
        for (i, &x) in self.elements.iter().enumerate() {
            local[x as usize] = i as u32;
        }
        let mut table = vec![0u32; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                table[i * n + j] = local[g.mul(a, b) as usize];
            }
        }
        let gens = self.generators().iter().map(|&x| local[x as usize]).collect();
        let group = FiniteGroup::from_table(n, table, Some(gens)).expect("subgroup table is a group");
        let embedding = GroupMap::new(group.clone(), g.clone(), self.elements.to_vec()).expect("in range");
        Embedded {
            group,
            embedding,
            local,
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// By order, then by element set.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

/// A subgroup realized as its own group together with the inclusion.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub group: GroupRef,
    pub embedding: GroupMap,
    /// Parent element → local index, `u32::MAX` outside.
    pub local: Vec<u32>,
}

impl Embedded {
    pub fn to_local(&self, x: u32) -> Option<u32> {
        let i = self.local[x as usize];
        (i != u32::MAX).then_some(i)
    }
}

/// `N / Q` for `Q` normal in `N`, both subgroups of the same parent.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: GroupRef,
    /// Least parent element of each coset.
    pub reps: Vec<u32>,
    /// Parent element → coset index, `u32::MAX` outside `N`.
    pub project: Vec<u32>,
}

pub fn quotient(n: &Subgroup, q: &Subgroup) -> Result<Quotient> {
    if !q.is_subgroup_of(n) || !q.is_normal_in(n) {
        return Err(Error::Precondition("quotient by a non-normal subgroup".into()));
    }
    let g = n.parent();
    let reps = q.left_transversal(n);
    let mut project = vec![u32::MAX; g.order()];
    for (i, &r) in reps.iter().enumerate() {
        for &s in q.elements() {
            project[g.mul(r, s) as usize] = i as u32;
        }
    }
    let m = reps.len();
    let mut table = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..m {
            table[i * m + j] = project[g.mul(reps[i], reps[j]) as usize];
        }
    }
    let group = FiniteGroup::from_table(m, table, None)?;
    Ok(Quotient {
        group,
        reps,
        project,
    })
}

/// A Sylow p-subgroup, grown greedily: repeatedly adjoin the least element
/// of the normalizer that has order p modulo the current subgroup.
pub fn sylow_subgroup(g: &GroupRef, p: u64) -> Subgroup {
    let mut target = 1usize;
    let mut n = g.order();
    while (n as u64).is_multiple_of(p) {
        n /= p as usize;
        target *= p as usize;
    }
    let whole = Subgroup::whole(g);
    let mut s = Subgroup::trivial(g);
    while s.order() < target {
        let norm = s.normalizer_in(&whole);
        let x = norm
            .elements()
            .iter()
            .copied()
            .find(|&x| !s.contains(x) && s.contains(g.pow(x, p)))
            .expect("p divides |N(S):S| when S is not Sylow");
        let mut gens = s.generators();
        gens.push(x);
        s = Subgroup::generated(g, &gens);
    }
    s
}

/// Every subgroup of `d`, sorted by (order, element set).
pub fn all_subgroups(d: &Subgroup) -> Vec<Subgroup> {
    let g = d.parent();
    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier = vec![vec![0u32]];
    while let Some(h) = frontier.pop() {
        for &x in d.elements() {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = greedy_generators(g, &h);
            gens.push(x);
            let k = closure(g, &gens);
            if found.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|v| Subgroup::from_sorted(g, v)).collect();
    out.sort();
    out
}

/// Conjugacy classes of subgroups of `within` under conjugation by `by`,
/// each as a sorted member list; classes ordered by their least member.
pub fn subgroup_classes(within: &Subgroup, by: &Subgroup) -> Vec<Vec<Subgroup>> {
    let subs = all_subgroups(within);
    let mut assigned = vec![false; subs.len()];
    let mut classes = Vec::new();
    for i in 0..subs.len() {
        if assigned[i] {
            continue;
        }
        let mut members: Vec<Subgroup> = by.elements().iter().map(|&x| subs[i].conjugate(x)).collect();
        members.sort();
        members.dedup();
        for m in &members {
            if let Ok(j) = subs.binary_search(m) {
                assigned[j] = true;
            }
        }
        classes.push(members);
    }
    classes
}

/// A D-conjugacy class of subgroups of a p-group D.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub index: usize,
    pub rep: Subgroup,
    pub members: Vec<Subgroup>,
    pub iso_type: String,
    pub label: String,
    /// Indices of other classes whose members are conjugate to this one in the whole group.
    pub fused_with: Vec<usize>,
}

/// One representative per D-conjugacy class of subgroups of `d`, ordered by
/// (order, least element set), with names and fusion in the parent group.
pub fn p_subgroup_classes(d: &Subgroup) -> Vec<SubgroupClass> {
    let raw = subgroup_classes(d, d);
    let whole = Subgroup::whole(d.parent());
    let types: Vec<String> = raw.iter().map(|c| iso_type(&c[0].as_group().group)).collect();
    let mut out = Vec::with_capacity(raw.len());
    for (i, members) in raw.iter().enumerate() {
        let same: Vec<usize> = (0..raw.len()).filter(|&j| types[j] == types[i]).collect();
        let label = if same.len() == 1 {
            types[i].clone()
        } else {
            let k = same.iter().position(|&j| j == i).unwrap() + 1;
            format!("{}#{k}", types[i])
        };
        let fused_with = same
            .iter()
            .copied()
            .filter(|&j| j != i && members[0].conjugating_element(&whole, &raw[j][0]).is_some())
            .collect();
        out.push(SubgroupClass {
            index: i,
            rep: members[0].clone(),
            members: members.clone(),
            iso_type: types[i].clone(),
            label,
            fused_with,
        });
    }
    out
}

/// Index of the class containing `q` (a subgroup of the D used to build `classes`).
pub fn class_of(classes: &[SubgroupClass], q: &Subgroup) -> Option<usize> {
    classes.iter().position(|c| c.members.binary_search(q).is_ok())
}

/// Short isomorphism-type fingerprint: cyclic and abelian groups by their
/// invariants, the order-8 non-abelian groups by name, anything else by
/// order, exponent and center size.
pub fn iso_type(g: &FiniteGroup) -> String {
    let n = g.order();
    if n == 1 {
        return "1".into();
    }
    let exp = g.exponent();
    if exp == n {
        return format!("C{n}");
    }
    if g.is_abelian() {
        if let Some(inv) = abelian_p_invariants(g) {
            return inv.iter().map(|e| format!("C{e}")).collect::<Vec<_>>().join("x");
        }
        return format!("Ab{n}e{exp}");
    }
    let involutions = g.elements().filter(|&x| g.element_order(x) == 2).count();
    match (n, involutions) {
        (8, 5) => "D8".into(),
        (8, 1) => "Q8".into(),
        _ => {
            let center = g
                .elements()
                .filter(|&x| g.generators().iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
                .count();
            format!("G{n}e{exp}z{center}")
        }
    }
}

/// Invariants (descending) of an abelian p-group, from the sizes of
/// `{x : x^(p^i) = 1}`.
fn abelian_p_invariants(g: &FiniteGroup) -> Option<Vec<usize>> {
    let n = g.order();
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    if m != 1 {
        return None;
    }
    // ranks[i] = #{invariants with exponent >= i+1}
    let mut ranks = Vec::new();
    let mut prev = 1usize;
    let mut pi = p as u64;
    loop {
        let omega = g.elements().filter(|&x| g.pow(x, pi) == 0).count();
        if omega == prev {
            break;
        }
        let mut r = 0;
        let mut t = omega / prev;
        while t > 1 {
            t /= p;
            r += 1;
        }
        ranks.push(r);
        prev = omega;
        pi *= p as u64;
    }
    let count = ranks.first().copied().unwrap_or(0);
    let mut inv = Vec::with_capacity(count);
    for j in 0..count {
        let e = ranks.iter().filter(|&&r| r > j).count();
        inv.push(p.pow(e as u32));
    }
    Some(inv)
}

/// For D ≅ D8, the conventional names of the eight classes, keyed by class
/// index: `Z` is the central involution, `C2` the non-central involution
/// class fused with `Z` in the parent group and `C2'` the other, `V4` the
/// Klein four-group containing `C2`, `V4'` the other one.
pub fn dihedral_labels(classes: &[SubgroupClass]) -> Option<Vec<String>> {
    if classes.len() != 8 || classes[7].iso_type != "D8" {
        return None;
    }
    let order2: Vec<&SubgroupClass> = classes.iter().filter(|c| c.rep.order() == 2).collect();
    let z = order2.iter().find(|c| c.members.len() == 1)?;
    let others: Vec<&&SubgroupClass> = order2.iter().filter(|c| c.members.len() == 2).collect();
    if others.len() != 2 {
        return None;
    }
    let fused: Vec<&&&SubgroupClass> = others.iter().filter(|c| c.fused_with.contains(&z.index)).collect();
    if fused.len() != 1 {
        return None;
    }
    let c2 = fused[0];
    let c2p = others.iter().find(|c| c.index != c2.index)?;
    let mut names = vec![String::new(); 8];
    for c in classes {
        names[c.index] = match (c.rep.order(), c.iso_type.as_str()) {
            (1, _) => "1".into(),
            (8, _) => "D".into(),
            (4, "C4") => "C4".into(),
            (4, _) if c2.members.iter().any(|m| m.is_subgroup_of(&c.rep)) => "V4".into(),
            (4, _) => "V4'".into(),
            (2, _) if c.index == z.index => "Z".into(),
            (2, _) if c.index == c2.index => "C2".into(),
            (2, _) if c.index == c2p.index => "C2'".into(),
            _ => return None,
        };
    }
    Some(names)
}
