mod common;

use arrangement_kappa::exactlin::dot;
use arrangement_kappa::lcs::{
    b_generators, delta_bar, delta_bar_from_lift, delta_rep, lift_hom, omega2, omega3, s_elements, tau_rep,
    u_generators,
};
use arrangement_kappa::words::AbelianGMap;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn u_lies_in_kernel_generatorwise() {
    let ctx = common::c8();
    let n = ctx.config().n();
    let gens = u_generators(ctx.config(), ctx.index());
    assert!(!gens.is_empty());
    for u in gens {
        assert!(ctx.tau_tilde(&AbelianGMap::from_flat(n, &u)).is_zero());
    }
}

#[test]
fn b_maps_into_image_of_delta_generatorwise() {
    let ctx = common::c8();
    let n = ctx.config().n();
    for b in b_generators(ctx.config(), ctx.index()) {
        let v = ctx.tau_tilde(&AbelianGMap::from_flat(n, &b));
        assert!(ctx.image_delta().contains(&v.flat()).unwrap());
    }
}

#[test]
fn tau_is_additive_and_kappa_is_alternating() {
    let ctx = common::c8();
    let idx = ctx.index();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let g1 = common::random_abelian(&mut rng, idx, 3);
        let g2 = common::random_abelian(&mut rng, idx, 3);
        let g3 = common::random_abelian(&mut rng, idx, 3);
        let lhs = ctx.tau_tilde(&g1.sub(&g3).unwrap());
        let rhs = ctx
            .tau_tilde(&g1.sub(&g2).unwrap())
            .add(&ctx.tau_tilde(&g2.sub(&g3).unwrap()));
        assert_eq!(lhs, rhs);
        assert!(ctx.kappa(&g1, &g1).unwrap().zero);
        // κ(g1, g2) = 0 and κ(g2, g3) = 0 force κ(g1, g3) = 0
        let k12 = ctx.kappa(&g1, &g2).unwrap().zero;
        let k23 = ctx.kappa(&g2, &g3).unwrap().zero;
        let k13 = ctx.kappa(&g1, &g3).unwrap().zero;
        assert!(!(k12 && k23) || k13);
    }
}

#[test]
fn delta_does_not_depend_on_the_lift() {
    let ctx = common::c8();
    let (c, data) = (ctx.config(), ctx.data());
    let n = c.n();
    let p2 = data.p2().free_rank();
    let r2 = data.degree_two.r2.basis().row_vecs();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let f: Vec<Vec<BigInt>> = (0..n)
            .map(|_| (0..p2).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect())
            .collect();
        let mut shifted = lift_hom(data, &f);
        for v in shifted.iter_mut() {
            for r in &r2 {
                let k = BigInt::from(rng.gen_range(-2..=2));
                for (x, y) in v.iter_mut().zip(r) {
                    *x += &k * y;
                }
            }
        }
        assert_eq!(delta_bar_from_lift(c, data, &shifted), delta_bar(c, data, &f));
    }
}

/// For `p = l_i ∩ l_m` off infinity, `⟨S, δ̄f(r̄(m, p))⟩ = -⟨ω, f(x_m)⟩` while
/// `⟨S, τ̃a(r̄(m, p))⟩ = 0` for every `a`.
#[test]
fn dual_pairings_separate_delta_from_tau() {
    let ctx = common::c8();
    let (c, idx, data) = (ctx.config(), ctx.index(), ctx.data());
    let n = c.n();
    let p2 = data.p2().free_rank();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut nonzero = 0;
    for s in s_elements(c, idx) {
        let lines: Vec<usize> = s.tag[1..].chars().map(|d| d.to_digit(10).unwrap() as usize).collect();
        let omega = if lines.len() == 2 {
            omega2(n, lines[0], lines[1])
        } else {
            omega3(n, lines[0], lines[1], lines[2])
        };
        for m in (1..=n).filter(|m| !lines.contains(m)) {
            let Some(p) = c.meet(lines[0], m) else { continue };
            if c.is_incident(0, p) {
                continue;
            }
            for _ in 0..5 {
                let f: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| (0..p2).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect())
                    .collect();
                let f_hat = lift_hom(data, &f);
                let lhs = dot(&s.coords, &delta_rep(c, &f_hat, m, p));
                let rhs = dot(&omega, &f_hat[m - 1]);
                assert_eq!(lhs, -&rhs, "{} at ({m}, {})", s.tag, c.points()[p].name);
                if !rhs.is_zero() {
                    nonzero += 1;
                }
                let a = common::random_abelian(&mut rng, idx, 3);
                assert!(dot(&s.coords, &tau_rep(c, idx, &a, m, p)).is_zero());
            }
        }
    }
    assert!(nonzero > 0);
}
