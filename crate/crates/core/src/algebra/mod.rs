//! Group-algebra elements, the Brauer map, relative traces and blocks.

mod blocks;
mod element;

pub use blocks::{block_idempotents, block_of_piece, central_character, lift_idempotent_commutative, Block, BlockRecord};
pub use element::{brauer_map, relative_trace, AlgElem};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{splitting_degree, FiniteGroup, GroupRef, Subgroup, DEFAULT_MAX_ORDER};
    use crate::linalg::Field;
    use crate::modrep::Simples;

    fn sym(n: usize) -> GroupRef {
        let mut t: Vec<u32> = (1..=n as u32).collect();
        t.swap(0, 1);
        let c: Vec<u32> = (1..=n as u32).map(|i| i % n as u32 + 1).collect();
        FiniteGroup::from_permutations(n, &[t, c], DEFAULT_MAX_ORDER).unwrap()
    }

    fn blocks(g: &GroupRef, p: u64) -> (Simples, Vec<Block>) {
        let f = Field::new(p, splitting_degree(g, p)).unwrap();
        let s = Simples::compute(g, &f, 0).unwrap();
        let b = block_idempotents(&s).unwrap();
        (s, b)
    }

    #[test]
    fn s4_has_one_block() {
        let g = sym(4);
        let (s, b) = blocks(&g, 2);
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].idempotent, AlgElem::one(&g, &s.field));
    }

    #[test]
    fn s5_principal_block_excludes_a_four_dimensional_simple() {
        let (s, b) = blocks(&sym(5), 2);
        assert_eq!(b.len(), 2);
        assert!(b[0].is_principal);
        assert_eq!(b[0].members.len(), 2);
        let out = b[1].members[0];
        assert_eq!(s.list[out].label.dim, 4);
        assert_eq!(b[1].members, [out]);
    }

    #[test]
    fn semisimple_case_has_one_block_per_simple() {
        let (s, b) = blocks(&sym(3), 5);
        assert_eq!(s.len(), 3);
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn relative_trace_and_brauer_map_basics() {
        let g = sym(4);
        let f = Field::new(2, 2).unwrap();
        let p = crate::groups::sylow_subgroup(&g, 2);
        let one = Subgroup::trivial(&g);
        let t = relative_trace(&AlgElem::one(&g, &f), &one, &p).unwrap();
        assert!(t.is_zero());
        let x = AlgElem::basis(&g, &f, 7);
        let orbit: Vec<u32> = {
            let mut v: Vec<u32> = p.elements().iter().map(|&d| g.conj(d, 7)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let tr = relative_trace(&x, &one, &p).unwrap();
        let stab = p.order() / orbit.len();
        let expected = AlgElem::sum_of(&g, &f, &orbit).scale(f.from_int(stab as i64));
        assert_eq!(tr, expected);
        let c = one.centralizer_in(&Subgroup::whole(&g)).as_group();
        let br = brauer_map(&x, &one, &c).unwrap();
        assert_eq!(br.coeffs(), x.coeffs());
    }
}
