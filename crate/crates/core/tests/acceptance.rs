mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use arrangement_kappa::config::{glue_c13, random_configuration, IncidenceIndex};
use arrangement_kappa::exactlin::{dot, hnf, is_hnf, snf, IntMatrix, Lattice};
use arrangement_kappa::geom::{check_realization, clusters, find_generic_psi, phi_c8, Sign};
use arrangement_kappa::report::{c13_report, maclane_report, C13Options, MaclaneOptions, RunReport};
use arrangement_kappa::words::{all_point_relators, magnus, GMap, Word};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn passed(r: &RunReport, names: &[&str]) -> Result<(), String> {
    for name in names {
        match r.check(name) {
            Some(c) if c.passed => {}
            Some(c) => return Err(format!("{name}: {}", c.details)),
            None => return Err(format!("{name} missing from report")),
        }
    }
    Ok(())
}

fn ensure(cond: bool, msg: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn ranks(r: &RunReport) -> Result<(), String> {
    passed(r, &["ranks", "r3perp_two_routes", "omegas_span_r2perp"])
}

fn dual_bases(r: &RunReport) -> Result<(), String> {
    passed(r, &["dual_elements_span_r3perp", "functionals_span_u_perp", "tau_star_identities"])?;
    let ids = r.check("tau_star_identities").unwrap().details.as_array().unwrap().len();
    ensure(ids == 7, "expected seven identities")
}

fn harmless_subgroups(r: &RunReport) -> Result<(), String> {
    passed(r, &["u_in_kernel", "b_maps_into_delta_image"])?;
    let ctx = common::c8();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let g: Vec<_> = (0..3).map(|_| common::random_abelian(&mut rng, ctx.index(), 4)).collect();
        let lhs = ctx.tau_tilde(&g[0].sub(&g[2]).unwrap());
        let rhs = ctx
            .tau_tilde(&g[0].sub(&g[1]).unwrap())
            .add(&ctx.tau_tilde(&g[1].sub(&g[2]).unwrap()));
        ensure(lhs == rhs, "tau is not additive")?;
        ensure(ctx.kappa(&g[0], &g[0]).unwrap().zero, "kappa(g, g) is nonzero")?;
    }
    Ok(())
}

fn t_functional(r: &RunReport) -> Result<(), String> {
    passed(r, &["a0_from_g", "t_detects_a0", "relator_list_plus", "relator_list_minus"])
}

fn kernel_and_preimage(r: &RunReport) -> Result<(), String> {
    passed(r, &["kernel_is_u", "preimage_is_u_plus_b", "kappa"])?;
    let k = &r.check("kappa").unwrap().details;
    ensure(k["zero"] == false && k["membership"]["result"] == "non_member", "membership says kappa vanishes")?;
    ensure(k["t_value"] == 1, "t disagrees with membership")
}

fn geometry(r: &RunReport) -> Result<(), String> {
    passed(r, &["realization_plus", "realization_minus", "conjugation_swaps_realizations"])?;
    for sign in [Sign::Plus, Sign::Minus] {
        ensure(clusters(&phi_c8(sign)).len() == 12, "C8 realization has the wrong number of points")?;
    }
    let c13 = glue_c13();
    let degenerate = find_generic_psi(&c13, 0, true).map_err(|e| e.to_string())?;
    ensure(degenerate.rejected.first().is_some_and(|r| r.seed.is_none()), "identity gluing not rejected")?;
    let mut generic = 0;
    for seed in 0..25 {
        let found = find_generic_psi(&c13, seed, false).map_err(|e| e.to_string())?;
        ensure(check_realization(&c13, &found.plus_plus).matches, "++ gluing mismatch")?;
        ensure(check_realization(&c13, &found.plus_minus).matches, "+- gluing mismatch")?;
        generic += usize::from(found.rejected.is_empty());
    }
    ensure(generic >= 20, "fewer than 20 of 25 seeds generic on first try")
}

fn symmetries(c13: &RunReport) -> Result<(), String> {
    passed(c13, &["c13_valid", "automorphism_group", "partition_preserved"])?;
    ensure(c13.check("automorphism_group").unwrap().details["order"] == 12, "order is not 12")
}

fn headline(c13: &RunReport) -> Result<(), String> {
    passed(c13, &["class_plus_plus", "class_plus_minus", "realization_plus_plus", "realization_plus_minus"])?;
    ensure(c13.verdict == "distinct fundamental groups mod gamma_4", &c13.verdict)?;
    ensure(!c13.notes.is_empty(), "caveat missing")
}

fn random_matrix<R: Rng>(rng: &mut R) -> IntMatrix {
    let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
    IntMatrix::from_entries(r, c, (0..r * c).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect()).unwrap()
}

fn property_suites() -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    for _ in 0..500 {
        let (u, v) = (common::random_word(&mut rng, 4, 10), common::random_word(&mut rng, 4, 10));
        ensure(magnus(&u.mul(&v), 4) == magnus(&u, 4).mul(&magnus(&v, 4)), "Magnus map not multiplicative")?;
        let c = random_configuration(rng.gen_range(3..7), rng.gen_range(0..4), &mut rng);
        let idx = IncidenceIndex::new(&c);
        let g = GMap::from_values((0..idx.pairs().len()).map(|_| common::random_word(&mut rng, c.n(), 3)).collect());
        for (_, rs) in all_point_relators(&c, &idx, &g) {
            ensure(Word::product(&rs).is_identity(), "relators at a point do not multiply to 1")?;
        }
    }
    for _ in 0..500 {
        let m = random_matrix(&mut rng);
        let h = hnf(&m);
        ensure(is_hnf(&h) && hnf(&h) == h, "HNF not canonical")?;
        let s = snf(&m);
        ensure(s.rank() == h.rows(), "SNF and HNF ranks differ")?;
        ensure(s.divisors.windows(2).all(|w| w[1].is_multiple_of(&w[0])), "divisor chain broken")?;
        let l = Lattice::new(m.clone());
        let p = l.perp();
        ensure(p.rank() + l.rank() == m.cols(), "perp has the wrong rank")?;
        ensure(
            p.basis().row_vecs().iter().all(|a| m.row_vecs().iter().all(|b| dot(a, b) == BigInt::from(0))),
            "perp does not annihilate",
        )?;
        ensure(p.perp() == l.saturate(), "double perp is not the saturation")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let maclane = maclane_report(MaclaneOptions::default()).expect("C8 report");
    let c13 = c13_report(C13Options::default()).expect("C13 report");
    let criteria: Vec<(&str, Box<dyn Fn() -> Result<(), String>>)> = vec![
        ("C8 ranks and torsion-freeness, two routes to R3-perp", Box::new(|| ranks(&maclane))),
        ("dual elements span R3-perp and U-perp; seven tau-star identities", Box::new(|| dual_bases(&maclane))),
        ("U in ker tau, tau(B) in Im delta, additivity on 100 random triples", Box::new(|| harmless_subgroups(&maclane))),
        ("a0 from the conjugator maps, t(a0) = 1 mod 3, t vanishes on B", Box::new(|| t_functional(&maclane))),
        ("ker tau = U, preimage of Im delta = U + B, kappa nonzero", Box::new(|| kernel_and_preimage(&maclane))),
        ("realizations of C8 and generic gluings of C13", Box::new(|| geometry(&maclane))),
        ("Aut(C13) has order 12, is S3 x Z2 and keeps the partition", Box::new(|| symmetries(&c13))),
        ("glued classes 0 and 1: groups differ mod gamma_4", Box::new(|| headline(&c13))),
        ("property suites on 500 random words, configurations, matrices", Box::new(property_suites)),
    ];
    let mut all = true;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("PASS {}: {name}", k + 1),
            Err(e) => {
                all = false;
                println!("FAIL {}: {name} ({e})", k + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
