//! One PASS/FAIL line per acceptance criterion. Runs the `mirror` binary where
//! a criterion names a command, and the library otherwise.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use mirror_core::enumerative::instanton_numbers;
use mirror_core::exactnum::{CyclotomicElement, NilpotentElement, Rational, Ring, TruncatedSeries};
use mirror_core::glsm::{
    basis_change, group_from_charges, invariant_coordinates, transpose_mirror, verify_factorization,
    ChargeFactorization, ExponentMatrix,
};
use mirror_core::kontsevich::{chern_from_adjunction, jordan_profile, matrix_order, twist_matrix, MatrixOrder};
use mirror_core::picard_fuchs::{
    apply_operator, frobenius_at_zero_in, monodromy_at_infinity, monodromy_at_zero, PFOperator,
};
use mirror_core::syz::{classify_vertex, mirror_swap, sl2_mirror_selfconjugacy, vertex_corpus};
use mirror_core::toric::{lattice_points, moduli_dimension, polar_dual, LatticePoint, LatticePolytope};
use mirror_core::{quintic, IntMatrix};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

fn mirror(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirror")).args(args).output().expect("binary runs")
}

fn mirror_json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = mirror(&full);
    assert!(out.status.success(), "mirror {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(v["schema_version"], 1);
    v["result"].clone()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn sorted(p: &LatticePolytope) -> Vec<LatticePoint> {
    let mut v = p.vertices().to_vec();
    v.sort();
    v
}

fn instanton_counts() {
    let started = Instant::now();
    let out = mirror(&["gw", "--dmax", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for n in ["2875", "609250", "317206375"] {
        assert!(text.contains(n), "table lacks {n}");
    }
    let result = mirror_json(&["gw", "--dmax", "3"]);
    let table = result["instantons"].as_array().unwrap();
    let counts: Vec<u64> = table.iter().map(|e| e["n"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![2875, 609250, 317206375]);
    let deep = instanton_numbers(12, 10).expect("n_d integral through degree 10");
    assert_eq!(deep.len(), 10);
    assert!(started.elapsed() < Duration::from_secs(10), "took {:?}", started.elapsed());
}

fn kontsevich_identity() {
    let result = mirror_json(&["kontsevich"]);
    assert_eq!(result["product_order"]["kind"], "finite");
    assert_eq!(result["product_order"]["value"], 5);
    let product = &result["product"];
    let first_column: Vec<String> = (0..4).map(|i| product[i][0].as_str().unwrap().to_string()).collect();
    assert_eq!(first_column, ["-4/1", "-20/3", "-5/1", "-5/1"]);
    let library =
        twist_matrix(1).mul(&mirror_core::kontsevich::spherical_matrix(&chern_from_adjunction(5, 4).unwrap().todd));
    assert_eq!(library, quintic::displayed_product());
    assert!(library.pow(5).is_identity());
}

fn operator_residual() {
    let deformed = apply_operator(&PFOperator::quintic(), frobenius_at_zero_in(50, 5).unwrap().phi());
    assert_eq!(deformed.order(), 50);
    assert_eq!(deformed.coefficient(0), NilpotentElement::generator(5).pow(4));
    assert!((1..=50).all(|n| deformed.coefficient(n).is_zero()));
    let plain = apply_operator(&PFOperator::quintic(), frobenius_at_zero_in(50, 4).unwrap().phi());
    assert!(plain.is_zero());
    assert!(mirror(&["periods"]).status.success());
}

fn monodromy_orders() {
    let infinity = monodromy_at_infinity();
    assert_eq!(matrix_order(&infinity.entries, 100), MatrixOrder::Finite(5));
    let zero = monodromy_at_zero();
    assert_eq!(zero.entries, twist_matrix(1));
    assert_eq!(jordan_profile(&zero.entries), vec![3, 2, 1, 0]);
    let result = mirror_json(&["monodromy"]);
    assert_eq!(result["at_infinity"]["order"]["value"], 5);
    assert_eq!(result["at_zero"]["jordan_profile"], serde_json::json!([3, 2, 1, 0]));
}

fn polytope_duality() {
    let simplex = quintic::simplex_polytope();
    let newton = quintic::newton_polytope();
    assert_eq!(sorted(&polar_dual(&simplex).unwrap()), sorted(&newton));
    assert_eq!(lattice_points(&newton).len(), 126);
    assert_eq!(moduli_dimension(126, 25), Ok(101));
    let result = mirror_json(&["polytope"]);
    assert_eq!(result["dual_lattice_point_count"], 126);
    assert_eq!(result["moduli_dimension"], 101);
    assert_eq!(result["reflexive"], true);
}

fn glsm_groups() {
    let p = ExponentMatrix::quintic();
    let f = ChargeFactorization::quintic();
    assert!(verify_factorization(&p, &f).unwrap().valid);
    let g = group_from_charges(&f.t);
    assert_eq!(g.structure.torus_rank, 1);
    assert!(g.structure.torsion.is_empty());
    assert_eq!(g.torus_generators, vec![ints(&[-5, 1, 1, 1, 1, 1])]);
    let (p_hat, f_hat) = transpose_mirror(&p, &f).unwrap();
    assert!(verify_factorization(&p_hat, &f_hat).unwrap().valid);
    let g_hat = group_from_charges(&f_hat.t);
    assert_eq!(g_hat.structure.torus_rank, 1);
    assert_eq!(g_hat.structure.torsion, ints(&[5, 5, 5]));
    let result = mirror_json(&["glsm", "transpose"]);
    assert_eq!(result["mirror"]["group"]["structure"]["torsion"], serde_json::json!([5, 5, 5]));
    assert_eq!(result["original"]["factorization"]["valid"], true);
    assert_eq!(result["mirror"]["factorization"]["valid"], true);
}

fn invariant_coordinate() {
    let p_hat = ExponentMatrix::quintic().transpose();
    assert_eq!(invariant_coordinates(&p_hat), vec![ints(&[-5, 1, 1, 1, 1, 1])]);
}

fn syz_counts() {
    let result = mirror_json(&["syz", "quintic-counts"]);
    assert_eq!(result["counts"]["v21"], 250);
    assert_eq!(result["counts"]["v12"], 50);
    assert_eq!(result["counts"]["edges"], 450);
    let chi = chern_from_adjunction(5, 4).unwrap().euler_characteristic();
    assert_eq!(chi, Rational::from(-200));
    assert_eq!(chi, Rational::from(2 * (1 - 101)));
    assert_eq!(Rational::from(250 - 50), -chi);
}

fn mirror_swap_property() {
    let corpus = vertex_corpus(100, 2024);
    let mut exceptions = 0;
    for (kind, v) in &corpus {
        assert_eq!(classify_vertex(v), *kind);
        if classify_vertex(&mirror_swap(v)) != classify_vertex(v).swapped() {
            exceptions += 1;
        }
    }
    assert_eq!(corpus.len(), 200);
    assert_eq!(exceptions, 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("vertex.json");
    std::fs::write(&path, serde_json::to_string(&corpus[0].1).unwrap()).unwrap();
    let result = mirror_json(&["syz", "classify", "--in", path.to_str().unwrap()]);
    assert_eq!(result["vertex_type"], "type21");
    assert_eq!(result["mirror_type"], "type12");
}

fn k3_checks() {
    assert!(mirror(&["syz", "k3"]).status.success());
    assert!(mirror(&["syz", "k3", "--fibres", "12,12"]).status.success());
    assert_eq!(mirror(&["syz", "k3", "--fibres", "1,1,3"]).status.code(), Some(3));
    for k in 1..=10 {
        let c = sl2_mirror_selfconjugacy(k).unwrap();
        let m = IntMatrix::from_i64_rows(&[&[1, k], &[0, 1]]);
        let conj = c.mul(&m.unimodular_inverse().unwrap().transpose()).unwrap().mul(&c.unimodular_inverse().unwrap());
        assert_eq!(conj, Some(m));
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-40i64..=40), rng.gen_range(1i64..=9))
}

fn ring_axioms<R: Ring>(a: &R, b: &R, c: &R) {
    assert_eq!(a.add(b), b.add(a));
    assert_eq!(a.mul(b), b.mul(a));
    assert_eq!(a.mul(&b.mul(c)), a.mul(b).mul(c));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert!(a.sub(a).is_zero());
    if let Some(inv) = a.inv() {
        assert!(a.mul(&inv).is_one());
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..8 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = IntMatrix::identity(n);
        if i == j {
            e.set(i, i, BigInt::from(-1));
        } else {
            e.set(i, j, BigInt::from(rng.gen_range(-2i64..=2)));
        }
        m = e.mul(&m).unwrap();
    }
    m
}

fn property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let r: Vec<Rational> = (0..12).map(|_| random_rational(&mut rng)).collect();
        ring_axioms(&r[0], &r[1], &r[2]);
        let nil = |k: usize| NilpotentElement::from_coefficients(r[k..k + 4].to_vec(), 4).unwrap();
        ring_axioms(&nil(0), &nil(4), &nil(8));
        let cyc =
            |k: usize| CyclotomicElement::new([r[k].clone(), r[k + 1].clone(), r[k + 2].clone(), r[k + 3].clone()]);
        ring_axioms(&cyc(0), &cyc(4), &cyc(8));
    }
    for _ in 0..30 {
        let mut c: Vec<Rational> = (0..9).map(|_| random_rational(&mut rng)).collect();
        c[0] = Rational::one();
        let s = TruncatedSeries::new(c.clone(), 8, ());
        assert_eq!(s.mul(&s.inverse().unwrap()).unwrap(), TruncatedSeries::one(8, ()));
        c[0] = Rational::zero();
        c[1] = Rational::from(rng.gen_range(1i64..=5));
        let t = TruncatedSeries::new(c, 8, ());
        assert_eq!(t.compose(&t.reversion().unwrap()).unwrap(), TruncatedSeries::variable(8, ()));
    }
    for base in [quintic::simplex_polytope(), quintic::newton_polytope()] {
        for _ in 0..10 {
            let a = random_unimodular(&mut rng, 4);
            let image = base.map_vertices(|x| LatticePoint::new(a.mul_vec(&x.coordinates))).unwrap();
            assert_eq!(sorted(&polar_dual(&polar_dual(&image).unwrap()).unwrap()), sorted(&image));
        }
    }
    let p = ExponentMatrix::quintic();
    let f = ChargeFactorization::quintic();
    let reference = group_from_charges(&f.t).structure;
    for _ in 0..100 {
        let l = random_unimodular(&mut rng, 5);
        let g = basis_change(&f, &l).unwrap();
        assert!(verify_factorization(&p, &g).unwrap().valid);
        assert_eq!(group_from_charges(&g.t).structure, reference);
    }
}

fn main() {
    let criteria: [(&str, fn()); 11] = [
        ("instanton numbers", instanton_counts),
        ("Kontsevich identity", kontsevich_identity),
        ("operator residual", operator_residual),
        ("monodromy orders", monodromy_orders),
        ("polytope duality", polytope_duality),
        ("GLSM groups", glsm_groups),
        ("invariant coordinate", invariant_coordinate),
        ("SYZ counts", syz_counts),
        ("mirror swap property", mirror_swap_property),
        ("K3 checks", k3_checks),
        ("property suites", property_suites),
    ];
    std::panic::set_hook(Box::new(|info| eprintln!("  {info}")));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(check)).is_ok();
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {:>2}: {name} ({:.2}s)", i + 1, started.elapsed().as_secs_f64());
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
