mod common;

use arrangement_kappa::config::{
    automorphisms, c13_partition, glue_c13, maclane_c8, partition_check, random_configuration, GroupSummary,
};
use arrangement_kappa::geom::{check_realization, find_generic_psi, glue_realization, psi_generic, Sign};
use arrangement_kappa::lcs::maclane::{class_of_glued, g_minus, g_plus};
use arrangement_kappa::lcs::KappaContext;
use arrangement_kappa::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn symmetry_group_is_s3_times_z2_and_keeps_the_pairs() {
    let c = glue_c13();
    let autos = automorphisms(&c);
    assert_eq!(autos.len(), 12);
    assert!(GroupSummary::of(&autos).is_s3_times_z2());
    assert!(partition_check(&autos, &c13_partition()));
    // the swap of the two copies is among them
    assert!(autos.iter().any(|a| (3..=7).all(|i| a.line_perm[i] == i + 5)));
}

#[test]
fn classes_of_the_two_gluings() {
    let ctx = common::c8();
    let (c, idx) = (ctx.config(), ctx.index());
    let gp = g_plus(c, idx).unwrap().abelianize(c.n());
    let gm = g_minus(c, idx).unwrap().abelianize(c.n());
    let c13 = glue_c13();
    assert_eq!(class_of_glued(&c13, ctx, &gp, &gp).unwrap(), 0);
    assert_eq!(class_of_glued(&c13, ctx, &gm, &gm).unwrap(), 0);
    assert_eq!(class_of_glued(&c13, ctx, &gp, &gm).unwrap(), 1);
    assert_eq!(class_of_glued(&c13, ctx, &gm, &gp).unwrap(), 1);
}

#[test]
fn class_needs_c8_halves() {
    let ctx = common::c8();
    let (c, idx) = (ctx.config(), ctx.index());
    let gp = g_plus(c, idx).unwrap().abelianize(c.n());
    let other = random_configuration(13, 4, &mut ChaCha8Rng::seed_from_u64(3));
    assert!(matches!(
        class_of_glued(&other, ctx, &gp, &gp),
        Err(Error::Configuration(_))
    ));
    let not_c8 = KappaContext::new(random_configuration(8, 3, &mut ChaCha8Rng::seed_from_u64(4))).unwrap();
    assert!(class_of_glued(&glue_c13(), &not_c8, &gp, &gp).is_err());
    assert_eq!(*ctx.config(), maclane_c8());
}

#[test]
fn gluings_are_generic_for_many_seeds() {
    let c13 = glue_c13();
    for seed in 0..20 {
        let found = find_generic_psi(&c13, seed, false).unwrap();
        assert_eq!(found.seed, seed);
        assert!(found.rejected.is_empty());
        assert_eq!(found.psi, psi_generic(seed));
        assert_eq!(found.plus_minus, glue_realization(Sign::Minus, &found.psi).unwrap());
    }
    // a transform that fixes every line is caught and skipped
    let found = find_generic_psi(&c13, 0, true).unwrap();
    assert_eq!(found.rejected.len(), 1);
    assert!(!found.rejected[0].report.duplicate_lines.is_empty());
    assert!(check_realization(&c13, &found.plus_plus).matches);
}
