//! Randomized structural checks on the Chevalley algebras: Killing
//! invariance, the discriminant of a Cartan element as the product of the
//! root values, and the agreement of the three routes to the orbit
//! codimension invariants.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tamecert_core::exact::{rat, rat_int, Rat};
use tamecert_core::liealg::{
    adjoint_weights_sln, centralizer_dim_sln, delta_profile, full_type_a_chain, jordan_nilpotent,
    lambda_invariant, partitions_of, ChevalleyAlgebra, Element,
};
use tamecert_core::strata::enumerate_strata_diagonal;

fn random_element(g: &ChevalleyAlgebra, rng: &mut ChaCha8Rng) -> Element {
    (0..g.dim())
        .map(|_| rat(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=2)))
        .collect()
}

#[test]
fn killing_form_invariance_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    for name in ["A2", "B2", "A3", "G2"] {
        let g = ChevalleyAlgebra::from_type(name).unwrap();
        for _ in 0..12 {
            let x = random_element(&g, &mut rng);
            let y = random_element(&g, &mut rng);
            let z = random_element(&g, &mut rng);
            let lhs = g.killing(&g.bracket(&x, &y).unwrap(), &z).unwrap();
            let rhs = g.killing(&y, &g.bracket(&x, &z).unwrap()).unwrap();
            assert_eq!(lhs + rhs, Rat::from_integer(0.into()), "{name}");
        }
    }
}

#[test]
fn discriminant_of_cartan_element_is_root_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for name in ["A1", "A2", "B2", "A3", "B3", "C3", "G2"] {
        let g = ChevalleyAlgebra::from_type(name).unwrap();
        let rs = g.root_system();
        for _ in 0..6 {
            let coords: Vec<Rat> = (0..g.rank())
                .map(|_| rat(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)))
                .collect();
            let h = g.cartan_element(&coords);
            let profile = delta_profile(&g, &h).unwrap();
            let mut product = rat_int(1);
            for k in 0..rs.num_roots() {
                product = product * rs.eval_on_coroot_coords(k, &coords);
            }
            // n - l is even (roots come in +- pairs), so the signs line up
            // exactly.
            assert_eq!(profile.delta, product, "{name}");
        }
    }
}

#[test]
fn lambda_routes_agree_for_sln_partitions() {
    // Route 1: sl2 weight combinatorics; route 2: transpose partition
    // formula; route 3: exact kernel of ad at an explicit representative.
    for n in 2..=5u32 {
        let g = ChevalleyAlgebra::from_type(&format!("A{}", n - 1)).unwrap();
        let chain = full_type_a_chain(&g);
        let dim_g = (n * n - 1) as u64;
        for p in partitions_of(n) {
            let weights = adjoint_weights_sln(&p);
            let lambda = lambda_invariant(&weights, dim_g);
            let transpose = centralizer_dim_sln(&p) as i64;
            let x = jordan_nilpotent(&g, &chain, &p);
            let kernel = g.ad(&x).unwrap().kernel_basis().len() as i64;
            assert_eq!(lambda, transpose, "n={n} partition {p}");
            assert_eq!(lambda, kernel, "n={n} partition {p}");
        }
    }
}

#[test]
fn euler_splitting_bookkeeping_on_nilpotent_strata() {
    // For the nilpotent strata of sl_n, the stratum trace decomposes as
    // sum(lambda_i/2 + 1) over the sl2 weights: 2*trace - sum(lambda_i) = 2m
    // where m is the number of weights.
    for n in 2..=4u32 {
        let g = ChevalleyAlgebra::from_type(&format!("A{}", n - 1)).unwrap();
        let strat = enumerate_strata_diagonal(&g, 4).unwrap();
        let full_label = strat
            .strata
            .iter()
            .map(|s| s.class_label.clone())
            .max_by_key(|l| l.len())
            .unwrap();
        for stratum in strat.strata.iter().filter(|s| s.class_label == full_label) {
            assert_eq!(stratum.orbit.len(), 1);
            let p = &stratum.orbit[0];
            let weights = adjoint_weights_sln(p);
            let m = weights.weights().len() as i64;
            let weight_sum: i64 = weights.weights().iter().map(|&w| i64::from(w)).sum();
            let lhs = &stratum.trace_t * rat_int(2) - rat_int(weight_sum);
            assert_eq!(lhs, rat_int(2 * m), "n={n} partition {p}");
            // And the discarded direction carries coefficient 1/2: the trace
            // equals sum(lambda_i/2 + 1) exactly.
            let reconstructed = rat(weight_sum, 2) + rat_int(m);
            assert_eq!(stratum.trace_t, reconstructed);
        }
    }
}

#[test]
fn centralizer_kernel_matches_transpose_formula_sl4_22() {
    let g = ChevalleyAlgebra::from_type("A3").unwrap();
    let chain = full_type_a_chain(&g);
    let p = tamecert_core::liealg::Partition::new(vec![2, 2]);
    let x = jordan_nilpotent(&g, &chain, &p);
    let kernel = g.ad(&x).unwrap().kernel_basis().len();
    assert_eq!(kernel as u64, centralizer_dim_sln(&p));
    assert_eq!(kernel, 7);
}
