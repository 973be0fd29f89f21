//! Modules over group algebras.

mod module;
mod simples;

pub use module::{modules_isomorphic, GModule};
pub use simples::{p_regular_class_count, Simple, SimpleLabel, Simples};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{splitting_degree, sylow_subgroup, FiniteGroup, GroupRef, Subgroup, DEFAULT_MAX_ORDER};
    use crate::linalg::Field;
    use crate::rng;

    fn sym(n: usize) -> GroupRef {
        let mut t: Vec<u32> = (1..=n as u32).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (1..=n as u32).map(|i| i % n as u32 + 1).collect();
        FiniteGroup::from_permutations(n, &[t, c], DEFAULT_MAX_ORDER).unwrap()
    }

    fn simples(g: &GroupRef, p: u64) -> Simples {
        let f = Field::new(p, splitting_degree(g, p)).unwrap();
        Simples::compute(g, &f, 0).unwrap()
    }

    #[test]
    fn simple_counts() {
        let dims = |s: &Simples| s.list.iter().map(|x| x.label.dim).collect::<Vec<_>>();
        assert_eq!(dims(&simples(&sym(4), 2)), [1, 2]);
        assert_eq!(dims(&simples(&sym(5), 2)), [1, 4, 4]);
        assert_eq!(dims(&simples(&sym(3), 3)), [1, 1]);
        assert_eq!(dims(&simples(&FiniteGroup::trivial(), 2)), [1]);
    }

    #[test]
    fn induction_restriction_and_free_multiplicity() {
        let g = sym(4);
        let s = simples(&g, 2);
        let f = s.field.clone();
        let d = sylow_subgroup(&g, 2).as_group();
        let triv = GModule::trivial(&d.group, &f);
        let ind = triv.induce(&d.embedding).unwrap();
        assert_eq!(ind.dim(), 3);
        assert!(ind.spot_check(&mut rng::stream(0, "test", 0), 50));
        let v = &s.list[1].module;
        let res = v.restrict(&d.embedding).unwrap();
        assert_eq!(res.dim(), 2);
        let reg = GModule::regular(&d.group, &f);
        let id = crate::groups::GroupMap::new(d.group.clone(), d.group.clone(), d.group.elements().collect()).unwrap();
        assert_eq!(reg.free_multiplicity(&id).unwrap(), 1);
        assert_eq!(reg.direct_sum(&reg).unwrap().free_multiplicity(&id).unwrap(), 2);
        let factors = s.composition_factors(&GModule::regular(&g, &f), 0).unwrap();
        assert_eq!(factors.iter().filter(|&&i| i == 0).count(), 8);
        assert_eq!(factors.iter().filter(|&&i| i == 1).count(), 8);
    }

    #[test]
    fn conjugate_module_is_isomorphic() {
        let g = sym(4);
        let s = simples(&g, 2);
        let whole = Subgroup::whole(&g);
        let emb = crate::groups::GroupMap::new(g.clone(), g.clone(), g.elements().collect()).unwrap();
        let v = &s.list[1].module;
        let c = v.conjugate(&emb, 5).unwrap();
        assert!(modules_isomorphic(v, &c, &mut rng::stream(0, "t", 0)).unwrap().is_some());
        assert_eq!(whole.order(), 24);
    }
}
