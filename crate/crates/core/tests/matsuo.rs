use fischer_lab::catalog;
use fischer_lab::fischer::{build_system, FischerGraph, TranspositionSystem};
use fischer_lab::groups::{generate, Permutation};
use fischer_lab::matsuo::{
    build_algebra, gram_radical, miyamoto, quotient, sigma_homomorphism, AlgebraVector, MatsuoAlgebra,
};
use fischer_lab::rational::{int, rat, Rational};
use proptest::prelude::*;

fn symmetric_system(n: usize) -> TranspositionSystem<Permutation> {
    let inst = catalog::symmetric(n).unwrap();
    build_system(&inst.generators, &inst.seeds, 1000).unwrap()
}

fn moved_points(t: &Permutation) -> Vec<usize> {
    (0..t.degree()).filter(|&p| t.apply(p) != p).collect()
}

/// Gram entries of `B(alpha, beta)(S_n)` from the transpositions as 2-sets.
fn oracle_gram(
    sys: &TranspositionSystem<Permutation>,
    alpha: &Rational,
    beta: &Rational,
) -> Vec<Vec<Rational>> {
    let pts: Vec<Vec<usize>> = sys.transpositions().iter().map(moved_points).collect();
    pts.iter()
        .map(|a| {
            pts.iter()
                .map(|b| match a.iter().filter(|p| b.contains(p)).count() {
                    2 => beta / int(2),
                    1 => alpha * beta / int(8),
                    _ => int(0),
                })
                .collect()
        })
        .collect()
}

/// Rank over `Z/p` of an integer matrix, textbook elimination.
fn rank_mod_p(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let inv = |x: i64| {
        let (mut base, mut e, mut acc) = (x, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let f = inv(a[rank][c]);
        for x in a[rank].iter_mut() {
            *x = *x * f % p;
        }
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let m = a[r][c];
                for k in 0..cols {
                    a[r][k] = (a[r][k] - m * a[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn gram_matches_the_two_set_oracle() {
    for n in 3..=7 {
        let sys = symmetric_system(n);
        for (al, be) in [(rat(1, 2), rat(1, 2)), (rat(2, 5), rat(4, 5)), (rat(1, 2), rat(1, 16))] {
            let a = build_algebra(sys.graph(), al.clone(), be.clone());
            let g = a.gram_matrix();
            let want = oracle_gram(&sys, &al, &be);
            for (i, row) in want.iter().enumerate() {
                assert_eq!(g.row(i), row.as_slice());
            }
        }
    }
}

#[test]
fn symmetric_radicals_match_a_modular_rank() {
    // 32 * Gram has 8 on the diagonal and 1 on adjacent pairs.
    for n in 3..=8 {
        let sys = symmetric_system(n);
        let a = build_algebra(sys.graph(), rat(1, 2), rat(1, 2));
        let m = sys.len();
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| if i == j { 8 } else { i64::from(sys.graph().adjacent(i, j)) }).collect())
            .collect();
        let rank = rank_mod_p(&rows, 1_000_000_007);
        assert_eq!(gram_radical(&a).dim(), m - rank);
        // Adjacency eigenvalues 2(n-2), n-4, -2 never reach -8.
        assert_eq!(rank, m);
    }
}

#[test]
fn nonzero_radical_is_an_ideal_with_nondegenerate_quotient() {
    // alpha = -4 / (n - 4) kills the (n-1)-dimensional eigenspace of S_n.
    for (n, alpha) in [(5, int(-4)), (6, int(-2)), (8, rat(-1, 1))] {
        let sys = symmetric_system(n);
        let a = build_algebra(sys.graph(), alpha, rat(1, 2));
        let r = gram_radical(&a);
        assert_eq!(r.dim(), n - 1);
        for v in &r.basis {
            for i in 0..a.dim() {
                let w = a.multiply_axis(i, v).unwrap();
                let gw = a.gram_matrix().apply(&w.0);
                assert!(gw.iter().all(|x| *x == int(0)));
            }
        }
        let q = quotient(&a, &r).unwrap();
        assert_eq!(q.dim(), a.dim() - (n - 1));
    }
}

#[test]
fn direct_sum_for_disconnected_systems() {
    let gens = vec![
        Permutation::transposition(6, 0, 1).unwrap(),
        Permutation::transposition(6, 1, 2).unwrap(),
        Permutation::transposition(6, 3, 4).unwrap(),
        Permutation::transposition(6, 4, 5).unwrap(),
    ];
    let sys = build_system(&gens, &[gens[0].clone(), gens[2].clone()], 100).unwrap();
    let a = build_algebra(sys.graph(), rat(1, 2), rat(1, 2));
    let comps = sys.components().unwrap();
    for &i in &comps[0] {
        for &j in &comps[1] {
            assert!(a.basis_product(i, j).is_empty());
            assert_eq!(a.gram_entry(i, j), int(0));
        }
    }
    // Each block is a copy of the S3 algebra.
    for c in &comps {
        let omega = a.unity(c).unwrap().unwrap();
        assert!(c.iter().all(|&i| omega.0[i] == rat(4, 5)));
    }
}

#[test]
fn sigma_kernel_is_the_center() {
    for n in 3..=6 {
        let inst = catalog::symmetric(n).unwrap();
        let sys = build_system(&inst.generators, &inst.seeds, 100).unwrap();
        let group = generate(&inst.generators, 1000).unwrap();
        let a = build_algebra(sys.graph(), rat(1, 2), rat(1, 2));
        let h = sigma_homomorphism(&a, &sys, &group).unwrap();
        assert_eq!(h.kernel.len(), 1);
    }
    // W(D4) has center of order 2 (the longest element -1).
    let w = catalog::weyl(catalog::AdeType::D, 4).unwrap();
    let sys = build_system(&w.generators, &w.seeds, 100).unwrap();
    let group = generate(&w.generators, 1000).unwrap();
    let a = build_algebra(sys.graph(), rat(1, 2), rat(1, 2));
    let h = sigma_homomorphism(&a, &sys, &group).unwrap();
    assert_eq!(h.kernel.len(), 2);
    assert!(h.kernel_is_center());
}

fn small_algebra(n: usize, alpha: Rational, beta: Rational) -> MatsuoAlgebra {
    build_algebra(symmetric_system(n).graph(), alpha, beta)
}

fn vector(dim: usize) -> impl Strategy<Value = AlgebraVector> {
    proptest::collection::vec((-6i64..=6, 1i64..=4), dim)
        .prop_map(|cs| AlgebraVector(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
}

fn params() -> impl Strategy<Value = (Rational, Rational)> {
    prop_oneof![
        Just((rat(1, 2), rat(1, 2))),
        Just((rat(2, 5), rat(4, 5))),
        Just((rat(1, 2), rat(1, 16))),
        (-5i64..=5, 1i64..=5, -5i64..=5, 1i64..=5).prop_map(|(a, b, c, d)| (rat(a, b), rat(c, d))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn commutative_and_invariant(
        (al, be) in params(),
        (u, v, w) in (vector(10), vector(10), vector(10)),
    ) {
        let a = small_algebra(5, al, be);
        let uv = a.multiply(&u, &v).unwrap();
        prop_assert_eq!(&uv, &a.multiply(&v, &u).unwrap());
        let vw = a.multiply(&v, &w).unwrap();
        prop_assert_eq!(a.form(&uv, &w).unwrap(), a.form(&u, &vw).unwrap());
        prop_assert_eq!(a.form(&u, &v).unwrap(), a.form(&v, &u).unwrap());
    }

    #[test]
    fn bilinear(
        (u, v, w) in (vector(6), vector(6), vector(6)),
        c in (-5i64..=5, 1i64..=5),
    ) {
        let a = small_algebra(4, rat(1, 2), rat(1, 2));
        let c = rat(c.0, c.1);
        let lhs = a.multiply(&u.scaled(&c).add(&v), &w).unwrap();
        let rhs = a.multiply(&u, &w).unwrap().scaled(&c).add(&a.multiply(&v, &w).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn half_unity_is_an_identity(v in vector(10), (al, be) in params()) {
        let a = small_algebra(5, al.clone(), be);
        // k = 6 for S5.
        prop_assume!(int(6) * al + int(4) != int(0));
        let omega = a.unity(&(0..10).collect::<Vec<_>>()).unwrap().unwrap();
        prop_assert_eq!(a.multiply(&omega.scaled(&rat(1, 2)), &v).unwrap(), v);
    }

    #[test]
    fn miyamoto_maps_are_automorphisms(i in 0usize..10, u in vector(10), v in vector(10)) {
        let a = small_algebra(5, rat(2, 5), rat(4, 5));
        let s = miyamoto(&a, i).unwrap();
        let lhs = s.apply(&a.multiply(&u, &v).unwrap());
        let rhs = a.multiply(&s.apply(&u), &s.apply(&v)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.form(&s.apply(&u), &s.apply(&v)).unwrap(), a.form(&u, &v).unwrap());
        prop_assert_eq!(s.apply(&s.apply(&u)), u);
    }

    #[test]
    fn graph_from_table_round_trips(n in 3usize..=6) {
        let sys = symmetric_system(n);
        let g = sys.graph();
        let mut table = Vec::new();
        for i in 0..g.len() {
            for &j in g.neighbors(i) {
                if i < j {
                    table.push((i, j, g.circ(i, j).unwrap()));
                }
            }
        }
        prop_assert_eq!(&FischerGraph::from_circ_table(g.len(), &table).unwrap(), g);
    }
}
