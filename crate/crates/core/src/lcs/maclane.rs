//! Data and checks specific to the MacLane configuration C8.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::dual::{parse_dual_data, s_elements, DualData, DualElement};
use super::kappa::KappaContext;
use super::tau::tau_rep;
use super::tensor::l2_dim;
use crate::config::{isomorphisms, maclane_c8, second_copy_line, ConfigAutomorphism, Configuration, IncidenceIndex};
use crate::error::{Error, Result};
use crate::exactlin::{dot, Lattice};
use crate::words::{AbelianGMap, GMap};

pub const G_PLUS_JSON: &str = include_str!("../../data/c8_g_plus.json");
pub const G_MINUS_JSON: &str = include_str!("../../data/c8_g_minus.json");
pub const RELATORS_PLUS: &str = include_str!("../../data/c8_relators_plus.txt");
pub const RELATORS_MINUS: &str = include_str!("../../data/c8_relators_minus.txt");
pub const DUALS: &str = include_str!("../../data/c8_duals.txt");

pub fn is_maclane(c: &Configuration) -> bool {
    *c == maclane_c8()
}

fn require_maclane(c: &Configuration) -> Result<()> {
    if is_maclane(c) {
        Ok(())
    } else {
        Err(Error::Unsupported("this computation is specific to C8".into()))
    }
}

pub fn g_plus(c: &Configuration, index: &IncidenceIndex) -> Result<GMap> {
    GMap::from_json(c, index, G_PLUS_JSON)
}

pub fn g_minus(c: &Configuration, index: &IncidenceIndex) -> Result<GMap> {
    GMap::from_json(c, index, G_MINUS_JSON)
}

/// `a_0 = ḡ⁺ - ḡ⁻`.
pub fn a0(c: &Configuration, index: &IncidenceIndex) -> Result<AbelianGMap> {
    let n = c.n();
    g_plus(c, index)?.abelianize(n).sub(&g_minus(c, index)?.abelianize(n))
}

pub fn dual_data(c: &Configuration, index: &IncidenceIndex) -> Result<DualData> {
    require_maclane(c)?;
    parse_dual_data(c, index, DUALS)
}

/// The transcribed dual elements for C8.
#[derive(Clone, Debug)]
pub struct DualBasis {
    /// `S_{ij}` (both orders) and `S_{ijk}`.
    pub s: Vec<DualElement>,
    /// `T_0, ..., T_4`.
    pub t: Vec<DualElement>,
    /// `I`, `J`, `K_1`, `K_2` in `A*`.
    pub functionals: Vec<DualElement>,
}

impl DualBasis {
    pub fn r3perp_elements(&self) -> impl Iterator<Item = &DualElement> {
        self.s.iter().chain(&self.t)
    }

    pub fn find(&self, tag: &str) -> Option<&DualElement> {
        self.r3perp_elements().chain(&self.functionals).find(|e| e.tag == tag)
    }
}

pub fn listed_dual_basis_c8() -> Result<DualBasis> {
    let c = maclane_c8();
    let index = IncidenceIndex::new(&c);
    let data = dual_data(&c, &index)?;
    Ok(DualBasis {
        s: s_elements(&c, &index),
        t: data.r3perp,
        functionals: data.functionals,
    })
}

/// The integer functional behind `t`, as a vector in `A*`.
pub fn t_vector(c: &Configuration, index: &IncidenceIndex) -> Result<Vec<BigInt>> {
    let data = dual_data(c, index)?;
    let mut out = vec![BigInt::zero(); c.n() * index.pairs().len()];
    for (coeff, name) in &data.t {
        let f = data
            .functionals
            .iter()
            .find(|f| &f.tag == name)
            .ok_or_else(|| Error::Parse(format!("t refers to unknown functional {name}")))?;
        for (o, x) in out.iter_mut().zip(&f.coords) {
            *o += coeff * x;
        }
    }
    Ok(out)
}

/// `t(a) mod 3`.
pub fn t_functional(c: &Configuration, index: &IncidenceIndex, a: &AbelianGMap) -> Result<u8> {
    let t = t_vector(c, index)?;
    let value = dot(&t, &a.flat()).mod_floor(&BigInt::from(3));
    Ok(value.to_u8().expect("residue"))
}

/// `τ̃*(r(line, point) ⊗ s)` as an element of `A*`, for any `s` vanishing on
/// the image of `d` (so that pairing through the `H ⊗ L_2` representative
/// is well defined).
pub fn tau_star(ctx: &KappaContext, line: usize, point: usize, s: &[BigInt]) -> Vec<BigInt> {
    let c = ctx.config();
    let index = ctx.index();
    let n = c.n();
    let mut out = vec![BigInt::zero(); ctx.a_rank()];
    for (k, &(_, p)) in index.pairs().iter().enumerate() {
        if p != point {
            continue;
        }
        for j in 0..n {
            let mut a = AbelianGMap::zero(n, index.pairs().len());
            let mut v = vec![BigInt::zero(); n];
            v[j] = BigInt::from(1);
            a.set(k, v);
            out[k * n + j] = dot(s, &tau_rep(c, index, &a, line, point));
        }
    }
    out
}

/// Outcome of one `τ̃*` identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

fn combination(basis: &DualBasis, rhs: &[(BigInt, String)], len: usize) -> Result<Vec<BigInt>> {
    let mut s = vec![BigInt::zero(); len];
    for (coeff, tag) in rhs {
        let e = basis
            .find(tag)
            .ok_or_else(|| Error::Parse(format!("unknown dual element {tag}")))?;
        for (o, x) in s.iter_mut().zip(&e.coords) {
            *o += coeff * x;
        }
    }
    Ok(s)
}

/// Checks each listed identity `F = ±τ̃*(r(k,p) ⊗ S)` exactly in `A*`.
pub fn tau_star_identities(ctx: &KappaContext, basis: &DualBasis) -> Result<Vec<IdentityCheck>> {
    transported_identities(ctx, basis, &[ConfigAutomorphism::identity(ctx.config())])
}

/// The line and point permutation on `H`, `A` and `H ⊗ Λ²H`.
fn perm_h(sigma: &ConfigAutomorphism, j: usize) -> usize {
    sigma.line_perm[j + 1] - 1
}

/// Moves an element of `A` (or `A*`) along an automorphism fixing `l_0`.
pub fn transport_a(c: &Configuration, index: &IncidenceIndex, sigma: &ConfigAutomorphism, v: &[BigInt]) -> Vec<BigInt> {
    let n = c.n();
    let mut out = vec![BigInt::zero(); v.len()];
    for (k, &(i, p)) in index.pairs().iter().enumerate() {
        let target = index
            .pair_index(sigma.line_perm[i], sigma.point_perm[p])
            .expect("automorphism fixing the line at infinity");
        for j in 0..n {
            out[target * n + perm_h(sigma, j)] = v[k * n + j].clone();
        }
    }
    out
}

/// Moves an element of `H ⊗ Λ²H` (or its dual) along an automorphism.
pub fn transport_h_l2(n: usize, sigma: &ConfigAutomorphism, v: &[BigInt]) -> Vec<BigInt> {
    let l2 = l2_dim(n);
    let mut out = vec![BigInt::zero(); v.len()];
    for m in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                let x = &v[m * l2 + crate::words::pair_index(a, b, n)];
                if x.is_zero() {
                    continue;
                }
                let (sa, sb) = (perm_h(sigma, a), perm_h(sigma, b));
                let (lo, hi, sign) = if sa < sb { (sa, sb, 1) } else { (sb, sa, -1) };
                out[perm_h(sigma, m) * l2 + crate::words::pair_index(lo, hi, n)] += x * sign;
            }
        }
    }
    out
}

/// Checks the listed identities after moving both sides along each
/// automorphism: `σF = ±τ̃*(r(σk, σp) ⊗ σS)`.
pub fn transported_identities(
    ctx: &KappaContext,
    basis: &DualBasis,
    group: &[ConfigAutomorphism],
) -> Result<Vec<IdentityCheck>> {
    let c = ctx.config();
    require_maclane(c)?;
    let index = ctx.index();
    let n = c.n();
    let data = dual_data(c, index)?;
    let mut out = Vec::new();
    for sigma in group {
        for id in &data.identities {
            let p = c
                .point_index(&id.point)
                .ok_or_else(|| Error::Domain(format!("unknown point {}", id.point)))?;
            let lhs = basis
                .find(&id.lhs)
                .ok_or_else(|| Error::Parse(format!("unknown functional {}", id.lhs)))?;
            let s = combination(basis, &id.rhs, n * l2_dim(n))?;
            let moved_lhs = transport_a(c, index, sigma, &lhs.coords);
            let moved_s = transport_h_l2(n, sigma, &s);
            let rhs: Vec<BigInt> = tau_star(ctx, sigma.line_perm[id.line], sigma.point_perm[p], &moved_s)
                .into_iter()
                .map(|x| x * &id.sign)
                .collect();
            let name = if sigma.is_identity() {
                id.lhs.clone()
            } else {
                format!("{} moved by {:?}", id.lhs, &sigma.line_perm[1..])
            };
            out.push(IdentityCheck {
                name,
                holds: moved_lhs == rhs,
            });
        }
    }
    Ok(out)
}

/// Span of the listed identities' left sides moved by every group element.
pub fn transported_functionals(ctx: &KappaContext, basis: &DualBasis, group: &[ConfigAutomorphism]) -> Result<Lattice> {
    let c = ctx.config();
    let data = dual_data(c, ctx.index())?;
    let mut rows = Vec::new();
    for sigma in group {
        for id in &data.identities {
            let lhs = basis
                .find(&id.lhs)
                .ok_or_else(|| Error::Parse(format!("unknown functional {}", id.lhs)))?;
            rows.push(transport_a(c, ctx.index(), sigma, &lhs.coords));
        }
    }
    Ok(Lattice::from_rows(ctx.a_rank(), rows))
}

/// The subgroup of `Aut(C8)` generated by `(16)(25)(34)` and `(135)(246)`.
pub fn maclane_symmetries(c: &Configuration) -> Result<Vec<ConfigAutomorphism>> {
    let a = ConfigAutomorphism::from_cycles(c, &[&[1, 6], &[2, 5], &[3, 4]])?;
    let b = ConfigAutomorphism::from_cycles(c, &[&[1, 3, 5], &[2, 4, 6]])?;
    let mut group = vec![ConfigAutomorphism::identity(c)];
    let mut k = 0;
    while k < group.len() {
        for g in [&a, &b] {
            let h = g.compose(&group[k]);
            if !group.contains(&h) {
                group.push(h);
            }
        }
        k += 1;
    }
    group.sort();
    Ok(group)
}

/// `σ τ̃ = τ̃ σ` on every basis vector of `A` and every incidence pair,
/// compared exactly on `H ⊗ L_2` representatives.
pub fn equivariance(ctx: &KappaContext, sigma: &ConfigAutomorphism) -> bool {
    let c = ctx.config();
    let index = ctx.index();
    let n = c.n();
    let pairs = index.pairs();
    for k in 0..pairs.len() {
        for j in 0..n {
            let mut a = AbelianGMap::zero(n, pairs.len());
            let mut v = vec![BigInt::zero(); n];
            v[j] = BigInt::from(1);
            a.set(k, v);
            let moved = AbelianGMap::from_flat(n, &transport_a(c, index, sigma, &a.flat()));
            for &(i, p) in pairs {
                let lhs = transport_h_l2(n, sigma, &tau_rep(c, index, &a, i, p));
                let rhs = tau_rep(c, index, &moved, sigma.line_perm[i], sigma.point_perm[p]);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `ker τ̃ = U`.
pub fn kernel_is_u_check(ctx: &KappaContext) -> bool {
    ctx.tau_kernel() == ctx.u_lattice()
}

/// Outcome of comparing `τ̃⁻¹(Im δ̄)` with `B` and with `U + B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreimageCheck {
    pub preimage_rank: usize,
    pub equals_u_plus_b: bool,
    pub equals_b: bool,
}

pub fn preimage_check(ctx: &KappaContext) -> Result<PreimageCheck> {
    let pre = ctx.tau_preimage_of_delta_image()?;
    let b = ctx.b_lattice();
    let ub = ctx.u_lattice().sum(&b)?;
    Ok(PreimageCheck {
        preimage_rank: pre.rank(),
        equals_u_plus_b: pre == ub,
        equals_b: pre == b,
    })
}

/// The line map from a half of C13 onto C8: the identity on `l0..l7` for
/// the first copy, `l_i ↦ l_{i+5}` for `i ≥ 3` on the second.
pub fn half_lines(copy: usize) -> Vec<usize> {
    (0..8).map(|i| if copy == 0 { i } else { second_copy_line(i) }).collect()
}

/// Class of a group glued from two C8 halves with abelianized conjugator
/// maps `g_alpha` and `g_beta`: 0 if `κ(g_alpha, g_beta)` vanishes on C8,
/// 1 otherwise. Both halves of `c13` must restrict to C8 through
/// [`half_lines`].
pub fn class_of_glued(
    c13: &Configuration,
    ctx8: &KappaContext,
    g_alpha: &AbelianGMap,
    g_beta: &AbelianGMap,
) -> Result<u8> {
    require_maclane(ctx8.config())?;
    for copy in 0..2 {
        let half = c13.restrict(&half_lines(copy));
        let identity: Vec<usize> = (0..8).collect();
        if !isomorphisms(&half, ctx8.config())
            .iter()
            .any(|iso| iso.line_perm == identity)
        {
            return Err(Error::Configuration(format!("half {copy} of the glued configuration is not C8")));
        }
    }
    Ok(if ctx8.kappa(g_alpha, g_beta)?.zero { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int_vec;
    use std::sync::OnceLock;

    fn ctx() -> &'static KappaContext {
        static CTX: OnceLock<KappaContext> = OnceLock::new();
        CTX.get_or_init(|| KappaContext::new(maclane_c8()).unwrap())
    }

    #[test]
    fn a0_values() {
        let c = maclane_c8();
        let idx = IncidenceIndex::new(&c);
        let a = a0(&c, &idx).unwrap();
        assert_eq!(
            a.nonzero(&c, &idx),
            vec![
                ((2, "p23".to_string()), int_vec(&[0, 0, 0, 0, -1, 0, 0])),
                ((6, "p246".to_string()), int_vec(&[0, 0, 0, 0, 0, 0, -1])),
                ((4, "p45".to_string()), int_vec(&[0, 0, -1, 0, 0, -1, 1])),
            ]
        );
    }

    #[test]
    fn t_on_a0_and_b() {
        let c = ctx().config();
        let idx = ctx().index();
        assert_eq!(t_functional(c, idx, &a0(c, idx).unwrap()).unwrap(), 1);
        let t = t_vector(c, idx).unwrap();
        let three = BigInt::from(3);
        for b in ctx().b_lattice().basis().row_vecs() {
            assert!(dot(&t, &b).is_multiple_of(&three));
        }
        for u in ctx().u_lattice().basis().row_vecs() {
            assert!(dot(&t, &u).is_multiple_of(&three));
        }
    }

    #[test]
    fn dual_bases() {
        let basis = listed_dual_basis_c8().unwrap();
        assert_eq!(basis.s.len(), 16);
        assert_eq!(basis.t.len(), 5);
        assert_eq!(basis.functionals.len(), 18);
        let r3 = Lattice::from_rows(147, basis.r3perp_elements().map(|e| e.coords.clone()).collect());
        assert_eq!(r3, ctx().data().r3perp_kernel);
        let f = Lattice::from_rows(147, basis.functionals.iter().map(|e| e.coords.clone()).collect());
        assert_eq!(f, ctx().u_lattice().perp());
    }

    #[test]
    fn identities() {
        let basis = listed_dual_basis_c8().unwrap();
        let checks = tau_star_identities(ctx(), &basis).unwrap();
        for ch in &checks {
            println!("{} {}", ch.name, ch.holds);
        }
        assert!(checks.iter().all(|c| c.holds));
    }

    #[test]
    fn kernel_and_preimage() {
        assert!(kernel_is_u_check(ctx()));
        let pre = preimage_check(ctx()).unwrap();
        println!("{pre:?}");
        assert!(pre.equals_u_plus_b);
        assert!(!pre.equals_b);
    }

    #[test]
    fn kappa_plus_minus() {
        let c = ctx().config();
        let idx = ctx().index();
        let gp = g_plus(c, idx).unwrap().abelianize(7);
        let gm = g_minus(c, idx).unwrap().abelianize(7);
        let r = ctx().kappa(&gp, &gm).unwrap();
        assert!(!r.zero);
        assert_eq!(r.t_value, Some(1));
        assert!(ctx().kappa(&gp, &gp).unwrap().zero);
    }
}
