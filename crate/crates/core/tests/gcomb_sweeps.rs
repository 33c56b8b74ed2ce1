use proptest::prelude::*;
use skewcell::gcomb::*;

const GRID: [(i64, i64, usize); 5] = [(2, 2, 1), (3, 2, 1), (2, 2, 2), (3, 3, 1), (4, 2, 1)];

fn grid_params(n: usize) -> Vec<HeckeParams> {
    GRID.iter().map(|&(e, p, d)| derive_params(e, p, n, &minimal_strict_charge(e, d, n), true).unwrap()).collect()
}

#[test]
fn lemma_sweep_on_grid() {
    // at n = 0 the lower end of r(a,0) is the red string itself
    for n in 1..=3 {
        for h in grid_params(n) {
            for r in lemma_sweep(&h) {
                assert!(r.passed(), "e={} p={} d={} n={n}: {} {:?}", h.e, h.p, h.d, r.name, r.failures);
            }
        }
    }
}

#[test]
fn dominance_matches_bijection_search() {
    for n in 0..=3 {
        for h in grid_params(n) {
            let parts = enumerate_partitions(n, h.ell);
            for a in &parts {
                for b in &parts {
                    assert_eq!(dominates(a, b, &h).unwrap(), brute_force_dominates(a, b, &h), "{a} vs {b}");
                }
            }
        }
    }
}

#[test]
fn rank_four_single_block() {
    for (e, p) in [(2, 2), (3, 2)] {
        let h = derive_params(e, p, 4, &[0], true).unwrap();
        let parts = enumerate_partitions(4, h.ell);
        for a in &parts {
            assert!(dominates(a, a, &h).unwrap());
            for b in &parts {
                if a != b && dominates(a, b, &h).unwrap() {
                    assert!(!dominates(b, a, &h).unwrap(), "{a} {b}");
                    assert!(dominates(&a.sigma(&h), &b.sigma(&h), &h).unwrap());
                }
            }
        }
        let total: usize = parts_reps(4, &h).iter().map(|l| orbit_data(l, &h).0).sum();
        assert_eq!(total, parts.len());
        let nodes = all_nodes(&h);
        for (i, g) in nodes.iter().enumerate() {
            for k in &nodes[i + 1..] {
                assert_ne!(loading(g, &h), loading(k, &h));
            }
        }
    }
}

#[test]
fn skeleton_size_counts_fixed_points() {
    // Σ |Std_σ(λ)|² over (λ, k) equals the number of pairs of tableaux
    // divided by p, the dimension of the fixed-point algebra.
    for &(e, p, d) in &GRID {
        for n in 1..=3 {
            let h = derive_params(e, p, n, &minimal_strict_charge(e, d, n), true).unwrap();
            let sk = psig_skeleton(n, &h);
            let fixed: usize = sk.elements.iter().map(|&(i, _)| sk.reps[i].tableaux.len().pow(2)).sum();
            let all: usize = enumerate_partitions(n, h.ell).iter().map(|l| enumerate_std(l).len().pow(2)).sum();
            assert_eq!(fixed * p as usize, all, "e={e} p={p} d={d} n={n}");
            for r in &sk.reps {
                assert_eq!(r.tilde_o, r.p_lambda, "{}", r.lambda);
            }
        }
    }
}

#[test]
fn fixture_examples() {
    let h = derive_params(2, 2, 2, &[0], true).unwrap();
    assert_eq!(enumerate_partitions(2, 2).len(), 5);
    let sk = psig_skeleton(2, &h);
    let o11 = sk.rep_index(&"(1|1)".parse().unwrap()).unwrap();
    let o2 = sk.rep_index(&"(0|2)".parse().unwrap()).unwrap();
    let o1 = sk.rep_index(&"(0|1,1)".parse().unwrap()).unwrap();
    // (0|2) sits above (1|1), which sits above (0|1,1)
    assert!(sk.above[o2][o11] && sk.above[o11][o1] && sk.above[o2][o1]);
    assert_eq!(sk.reps[o2].degrees, vec![2]);
    assert_eq!(sk.reps[o1].degrees, vec![0]);
}

fn multipartition(ell: usize, max: usize) -> impl Strategy<Value = Multipartition> {
    prop::collection::vec(prop::collection::vec(0usize..4, 0..3), ell).prop_map(move |comps| {
        let comps = comps
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by(|a, b| b.cmp(a));
                let mut total = 0;
                c.retain(|&x| {
                    total += x;
                    total <= max
                });
                c
            })
            .collect();
        Multipartition::new(comps).unwrap()
    })
}

proptest! {
    #[test]
    fn sigma_has_period_p(lam in multipartition(6, 4), p in prop::sample::select(vec![2i64, 3, 6])) {
        let h = derive_params(2, p, lam.size(), &minimal_strict_charge(2, 6 / p as usize, lam.size()), true).unwrap();
        prop_assert_eq!(lam.sigma_pow(p as usize, &h), lam.clone());
        let (o, pl) = orbit_data(&lam, &h);
        prop_assert_eq!(o * pl, p as usize);
        prop_assert_eq!(lam.to_string().parse::<Multipartition>().unwrap(), lam);
    }

    #[test]
    fn residues_are_canonical(i in -20i64..20, j in -20i64..20, e in 2i64..7, p in 2i64..7) {
        let h = derive_params(e, p, 1, &[0], true).unwrap();
        let r = canonical_residue(i, j, &h);
        prop_assert!(r.a >= 0 && r.a < e && r.b >= 0 && r.b < h.p_prime);
        // ε^{p} = 1 and q^{e} = 1
        prop_assert_eq!(canonical_residue(i, j + p, &h), r);
        prop_assert_eq!(canonical_residue(i + e, j, &h), r);
    }
}
