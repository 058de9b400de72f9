use proptest::prelude::*;

use solconn::boolfn::props::{is_affine, is_monotone, is_self_dual, LinearForm};
use solconn::boolfn::{tt_parse, tt_print, BitVector, TVariant, TruthTable};
use solconn::graph::{bfs_distances, components, diameter, random_relation, DiameterMode, SolutionSet};
use solconn::reduce::{apply_t_relation, shift_to_one_reproducing};
use solconn::rep::{eliminate, random_3cnf, Instance, Quantifier};
use solconn::BaseSet;

fn table(n: u32) -> impl Strategy<Value = TruthTable> {
    proptest::collection::vec(any::<bool>(), 1usize << n)
        .prop_map(move |bits| TruthTable::from_fn(n, |i| bits[i as usize]).unwrap())
}

fn relation() -> impl Strategy<Value = SolutionSet> {
    (1u32..=8, any::<u64>()).prop_flat_map(|(n, seed)| {
        (0..=1usize << n).prop_map(move |size| random_relation(n, size, seed).unwrap())
    })
}

proptest! {
    #[test]
    fn bit_vector_text_round_trips(n in 1u32..=20, word in any::<u64>()) {
        let v = BitVector::new(n, word & ((1 << n) - 1)).unwrap();
        let back: BitVector = v.to_string().parse().unwrap();
        prop_assert_eq!(back, v);
        for j in 1..=n {
            prop_assert_eq!(v.flip(j).flip(j), v);
            prop_assert_eq!(v.flip(j).hamming(&v), 1);
        }
    }

    #[test]
    fn table_text_round_trips(t in (1u32..=7).prop_flat_map(table)) {
        prop_assert_eq!(tt_parse(&tt_print(&t), t.arity()).unwrap(), t);
    }

    #[test]
    fn dual_is_an_involution(t in (1u32..=6).prop_flat_map(table)) {
        prop_assert_eq!(t.dual().dual(), t.clone());
        prop_assert_eq!(is_self_dual(&t), t.dual() == t);
    }

    #[test]
    fn monotone_tables_are_upward_closed(t in (1u32..=5).prop_flat_map(table)) {
        let n = t.arity();
        let closed = (0..t.rows()).all(|a| {
            !t.get(a) || (1..=n).all(|j| t.get(a | (1 << (n - j))))
        });
        prop_assert_eq!(is_monotone(&t), closed);
    }

    #[test]
    fn linear_forms_are_recovered(n in 1u32..=8, mask in any::<u16>(), constant in any::<bool>()) {
        let support: Vec<u32> = (1..=n).filter(|j| mask >> (j - 1) & 1 == 1).collect();
        let form = LinearForm { support, constant };
        let t = form.to_table(n).unwrap();
        prop_assert_eq!(is_affine(&t), Some(form.clone()));
        for j in 1..=n {
            prop_assert_eq!(t.depends_on(j), form.support.contains(&j));
        }
    }

    #[test]
    fn elimination_makes_the_variable_fictive(t in (1u32..=6).prop_flat_map(table), j in 1u32..=6, all in any::<bool>()) {
        let j = 1 + (j - 1) % t.arity();
        let q = if all { Quantifier::Forall } else { Quantifier::Exists };
        let e = eliminate(&t, j, q);
        prop_assert!(!e.depends_on(j));
        let n = t.arity();
        for a in 0..t.rows() {
            let (lo, hi) = (t.get(a & !(1 << (n - j))), t.get(a | (1 << (n - j))));
            prop_assert_eq!(e.get(a), if all { lo && hi } else { lo || hi });
        }
    }

    #[test]
    fn components_partition_and_survive_permutation(r in relation(), seed in any::<u64>()) {
        let c = components(&r);
        prop_assert_eq!(c.sizes().iter().sum::<usize>(), r.len());
        let n = r.dim();
        let mut perm: Vec<u32> = (1..=n).collect();
        perm.rotate_left((seed % n as u64) as usize);
        let p = r.permute(&perm).unwrap();
        let mut a = c.sizes();
        let mut b = components(&p).sizes();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn relation_text_round_trips(r in relation()) {
        prop_assert_eq!(SolutionSet::parse_rel(&r.to_rel()).unwrap(), r);
    }

    #[test]
    fn distances_dominate_hamming(r in relation()) {
        for i in 0..r.len().min(8) {
            for (j, &d) in bfs_distances(&r, i).iter().enumerate() {
                if d != u32::MAX {
                    prop_assert!(d >= r.vector(i).hamming(&r.vector(j)));
                }
            }
        }
    }

    #[test]
    fn shifting_preserves_the_graph(n in 3u32..=8, m in 1usize..=10, seed in any::<u64>()) {
        let phi = random_3cnf(n, m, seed, false).unwrap();
        let std = BaseSet::standard();
        let obj = Instance::Cnf(phi.clone());
        let sols = solconn::graph::enumerate_solutions(&obj, &std, n, 20).unwrap();
        prop_assume!(!sols.is_empty());
        let s = sols.vector(seed as usize % sols.len());
        let psi = shift_to_one_reproducing(&phi, &s).unwrap();
        let shifted = solconn::graph::enumerate_solutions(&Instance::Cnf(psi), &std, n, 20).unwrap();
        prop_assert!(shifted.contains((1 << n) - 1));
        prop_assert_eq!(components(&shifted).count(), components(&sols).count());
        prop_assert_eq!(
            diameter(&shifted, DiameterMode::Exact).unwrap(),
            diameter(&sols, DiameterMode::Exact).unwrap()
        );
    }

    #[test]
    fn transforms_keep_component_counts(r in relation(), variant in 0usize..3) {
        let n = r.dim();
        let ones = (1u64 << n) - 1;
        let mut words = r.words().to_vec();
        if !r.contains(ones) {
            words.push(ones);
        }
        let r = SolutionSet::new(n, words).unwrap();
        let v = [TVariant::S12, TVariant::D1, TVariant::S02K(2)][variant];
        let t = apply_t_relation(&r, v).unwrap();
        // For D1 the x·001 block reaches the rest only through x·000
        // solutions, which a tautology lacks. CNF inputs never are one.
        let isolated = (v == TVariant::D1 && r.len() == 1 << n) as usize;
        prop_assert_eq!(components(&t).count(), components(&r).count() + isolated);
    }
}
