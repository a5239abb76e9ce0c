//! Machine-readable reports assembled from the library's checks.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::config::{automorphisms, c13_partition, glue_c13, maclane_c8, partition_check, Configuration, GroupSummary};
use crate::error::Result;
use crate::exactlin::Lattice;
use crate::geom::{check_realization, find_generic_psi, phi_c8, Sign};
use crate::lcs::maclane::{self, DualBasis};
use crate::lcs::{omega_generators, KappaContext, KappaReport};
use crate::words::{admissibility_check, parse_bracket_list, relators_from_g, same_relator_sets, GMap};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub passed: bool,
    pub verdict: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// SHA-256 of the configuration's canonical JSON form, hex encoded.
pub fn config_digest(c: &Configuration) -> String {
    hex::encode(Sha256::digest(c.to_json().as_bytes()))
}

impl RunReport {
    pub fn new(command: &str, config: &Configuration, seed: Option<u64>) -> Self {
        RunReport {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config_digest: config_digest(config),
            seed,
            checks: Vec::new(),
            passed: true,
            verdict: String::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, name: &str, passed: bool, details: impl Serialize) {
        self.passed &= passed;
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            details: serde_json::to_value(details).expect("serializable details"),
        });
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MaclaneOptions {
    /// Compare `ḡ⁺` with itself instead of with `ḡ⁻`.
    pub swap_g: bool,
    /// Skip every check that uses the transcribed dual elements.
    pub no_hardcoded: bool,
}

fn relator_list_check(ctx: &KappaContext, text: &str, g: &GMap) -> Result<Value> {
    let (c, idx) = (ctx.config(), ctx.index());
    let parsed = parse_bracket_list(c, idx, text)?;
    let expanded = relators_from_g(c, idx, g);
    Ok(json!({
        "relators": parsed.relators.len(),
        "g_matches": parsed.g == *g,
        "same_relators": same_relator_sets(&parsed.relators, &expanded),
        "admissible": admissibility_check(c, &parsed.relators),
    }))
}

fn all_true(v: &Value, keys: &[&str]) -> bool {
    keys.iter().all(|k| v[k] == Value::Bool(true))
}

fn transcribed_checks(report: &mut RunReport, ctx: &KappaContext, basis: &DualBasis) -> Result<()> {
    let data = ctx.data();
    let s_t = Lattice::from_rows(data.r3perp_kernel.ambient_rank(), basis.r3perp_elements().map(|e| e.coords.clone()).collect());
    report.push(
        "dual_elements_span_r3perp",
        s_t == data.r3perp_kernel,
        json!({"s": basis.s.len(), "t": basis.t.len(), "rank": s_t.rank()}),
    );
    let u_perp = ctx.u_lattice().perp();
    let f = Lattice::from_rows(ctx.a_rank(), basis.functionals.iter().map(|e| e.coords.clone()).collect());
    report.push(
        "functionals_span_u_perp",
        f == u_perp,
        json!({"functionals": basis.functionals.len(), "rank": f.rank()}),
    );
    let ids = maclane::tau_star_identities(ctx, basis)?;
    report.push("tau_star_identities", ids.iter().all(|i| i.holds), &ids);
    let group = maclane::maclane_symmetries(ctx.config())?;
    let moved = maclane::transported_identities(ctx, basis, &group)?;
    let span = maclane::transported_functionals(ctx, basis, &group)?;
    report.push(
        "transported_identities",
        moved.iter().all(|i| i.holds) && span == u_perp,
        json!({"group_order": group.len(), "identities": moved.len(), "failing": moved.iter().filter(|i| !i.holds).map(|i| &i.name).collect::<Vec<_>>(), "span_is_u_perp": span == u_perp}),
    );
    let (c, idx) = (ctx.config(), ctx.index());
    let t = maclane::t_vector(c, idx)?;
    let three = num_bigint::BigInt::from(3);
    let on_b = ctx
        .b_lattice()
        .basis()
        .row_vecs()
        .iter()
        .all(|b| num_integer::Integer::is_multiple_of(&crate::exactlin::dot(&t, b), &three));
    let t_a0 = maclane::t_functional(c, idx, &maclane::a0(c, idx)?)?;
    report.push("t_detects_a0", t_a0 == 1 && on_b, json!({"t_a0_mod_3": t_a0, "t_vanishes_on_b": on_b}));
    Ok(())
}

/// Every check about C8 and its two conjugate realizations.
pub fn maclane_report(opts: MaclaneOptions) -> Result<RunReport> {
    let c = maclane_c8();
    let ctx = KappaContext::new(c.clone())?;
    let idx = ctx.index();
    let n = c.n();
    let mut report = RunReport::new("maclane-report", &c, None);

    let ranks = ctx.data().ranks();
    let expected = (21, 112, 13, 8, 91, 21, 21);
    let got = (ranks.l2, ranks.l3, ranks.r2, ranks.p2, ranks.r3, ranks.p3, ranks.r3perp);
    report.push(
        "ranks",
        got == expected && ranks.p2_torsion_free && ranks.p3_torsion_free,
        &ranks,
    );
    report.push("r3perp_two_routes", ranks.r3perp_routes_agree, json!({"rank": ranks.r3perp}));
    let omegas = Lattice::from_rows(ranks.l2, omega_generators(&c, idx));
    report.push("omegas_span_r2perp", omegas == ctx.data().degree_two.r2perp, json!({"rank": omegas.rank()}));

    let gp = maclane::g_plus(&c, idx)?;
    let gm = maclane::g_minus(&c, idx)?;
    let keys = ["g_matches", "same_relators", "admissible"];
    for (name, text, g) in [
        ("relator_list_plus", maclane::RELATORS_PLUS, &gp),
        ("relator_list_minus", maclane::RELATORS_MINUS, &gm),
    ] {
        let v = relator_list_check(&ctx, text, g)?;
        report.push(name, all_true(&v, &keys) && v["relators"] == 13, v);
    }

    let a0 = maclane::a0(&c, idx)?;
    let values = a0.nonzero(&c, idx);
    let listed: Vec<(usize, &str, Vec<i64>)> = vec![
        (2, "p23", vec![0, 0, 0, 0, -1, 0, 0]),
        (6, "p246", vec![0, 0, 0, 0, 0, 0, -1]),
        (4, "p45", vec![0, 0, -1, 0, 0, -1, 1]),
    ];
    let matches = values.len() == listed.len()
        && values.iter().zip(&listed).all(|(((l, p), v), (l2, p2, v2))| {
            l == l2 && p == p2 && *v == crate::exactlin::int_vec(v2)
        });
    let shown: Vec<Value> = values
        .iter()
        .map(|((l, p), v)| json!({"line": l, "point": p, "value": v.iter().map(ToString::to_string).collect::<Vec<_>>()}))
        .collect();
    report.push("a0_from_g", matches, shown);

    if opts.no_hardcoded {
        report.notes.push("transcribed dual elements not used; R3-perp recomputed from the kernel route only".into());
        report.push(
            "r3perp_recomputed",
            ctx.data().r3perp_kernel.rank() == 21 && ranks.r3perp_routes_agree,
            json!({"rank": ctx.data().r3perp_kernel.rank()}),
        );
    } else {
        transcribed_checks(&mut report, &ctx, &maclane::listed_dual_basis_c8()?)?;
    }

    let group = maclane::maclane_symmetries(&c)?;
    let equivariant = group.iter().all(|s| maclane::equivariance(&ctx, s));
    report.push("tau_equivariance", equivariant, json!({"group_order": group.len()}));

    let u_gens = crate::lcs::u_generators(&c, idx);
    let u_ok = u_gens
        .iter()
        .all(|u| ctx.tau_tilde(&crate::words::AbelianGMap::from_flat(n, u)).is_zero());
    report.push("u_in_kernel", u_ok, json!({"generators": u_gens.len()}));
    let b_gens = crate::lcs::b_generators(&c, idx);
    let mut b_ok = true;
    for b in &b_gens {
        let v = ctx.tau_tilde(&crate::words::AbelianGMap::from_flat(n, b));
        b_ok &= ctx.image_delta().contains(&v.flat())?;
    }
    report.push("b_maps_into_delta_image", b_ok, json!({"generators": b_gens.len()}));

    report.push(
        "kernel_is_u",
        maclane::kernel_is_u_check(&ctx),
        json!({"rank": ctx.tau_kernel().rank()}),
    );
    let pre = maclane::preimage_check(&ctx)?;
    report.push("preimage_is_u_plus_b", pre.equals_u_plus_b, &pre);
    report.push(
        "delta_kernel",
        true,
        json!({"rank": ctx.delta_kernel().rank(), "ambient_rank": ctx.delta_kernel().ambient_rank()}),
    );

    let gp_bar = gp.abelianize(n);
    let gm_bar = gm.abelianize(n);
    let kappa = if opts.swap_g {
        ctx.kappa(&gp_bar, &gp_bar)?
    } else {
        ctx.kappa(&gp_bar, &gm_bar)?
    };
    let kappa_ok = if opts.swap_g {
        kappa.zero
    } else {
        !kappa.zero && (opts.no_hardcoded || kappa.t_value == Some(1))
    };
    report.push("kappa", kappa_ok, &kappa);

    let plus = phi_c8(Sign::Plus);
    let minus = phi_c8(Sign::Minus);
    for (name, lines) in [("realization_plus", &plus), ("realization_minus", &minus)] {
        let r = check_realization(&c, lines);
        report.push(name, r.matches, &r);
    }
    let conj: Vec<_> = plus.iter().map(|l| l.conj()).collect();
    report.push("conjugation_swaps_realizations", conj == minus, json!({}));

    report.verdict = match (report.passed, kappa.zero) {
        (false, _) => format!("checks failed: {}", report.failed().join(", ")),
        (true, true) => "kappa vanishes".into(),
        (true, false) => "kappa is nonzero: the two C8 groups admit no isomorphism mod gamma_4 inducing the identity on H_1".into(),
    };
    Ok(report)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct C13Options {
    pub seed: u64,
    /// Try the identity transform first, which must be rejected.
    pub degenerate_first: bool,
}

/// The glued configuration, its symmetries, both realizations and the class
/// computation for `(ḡ⁺, ḡ⁺)` and `(ḡ⁺, ḡ⁻)`.
pub fn c13_report(opts: C13Options) -> Result<RunReport> {
    let c13 = glue_c13();
    let mut report = RunReport::new("c13-report", &c13, Some(opts.seed));
    let v = c13.validate();
    report.push("c13_valid", v.valid, &v);

    let autos = automorphisms(&c13);
    let summary = GroupSummary::of(&autos);
    report.push("automorphism_group", summary.is_s3_times_z2(), &summary);
    report.push(
        "partition_preserved",
        partition_check(&autos, &c13_partition()),
        json!({"blocks": c13_partition()}),
    );

    let found = find_generic_psi(&c13, opts.seed, opts.degenerate_first)?;
    let rejected: Vec<Value> = found
        .rejected
        .iter()
        .map(|r| json!({"seed": r.seed, "sign": r.sign.symbol().to_string(), "missing": r.report.missing.len(), "extra": r.report.extra.len(), "duplicate_lines": r.report.duplicate_lines.len()}))
        .collect();
    report.push(
        "generic_psi",
        true,
        json!({"seed_used": found.seed, "psi": found.psi, "rejected": rejected}),
    );
    for (name, lines) in [("realization_plus_plus", &found.plus_plus), ("realization_plus_minus", &found.plus_minus)] {
        let r = check_realization(&c13, lines);
        report.push(name, r.matches, json!({"report": r, "lines": lines}));
    }

    let ctx8 = KappaContext::new(maclane_c8())?;
    let (c8, idx) = (ctx8.config(), ctx8.index());
    let gp = maclane::g_plus(c8, idx)?.abelianize(c8.n());
    let gm = maclane::g_minus(c8, idx)?.abelianize(c8.n());
    let same = maclane::class_of_glued(&c13, &ctx8, &gp, &gp)?;
    let differ = maclane::class_of_glued(&c13, &ctx8, &gp, &gm)?;
    report.push("class_plus_plus", same == 0, json!({"class": same}));
    report.push("class_plus_minus", differ == 1, json!({"class": differ}));

    report.notes.push(
        "the class test rules out isomorphisms mod gamma_4 that respect the line partition; that every isomorphism can be brought to this form is not computed here".into(),
    );
    report.verdict = if !report.passed {
        format!("checks failed: {}", report.failed().join(", "))
    } else if same != differ {
        "distinct fundamental groups mod gamma_4".into()
    } else {
        "no difference detected".into()
    };
    Ok(report)
}

/// `κ` for user-supplied data.
pub fn kappa_report(config: Configuration, g: &str, g_prime: &str) -> Result<RunReport> {
    let mut report = RunReport::new("kappa", &config, None);
    let ctx = KappaContext::new(config)?;
    let (c, idx) = (ctx.config(), ctx.index());
    let n = c.n();
    let g = GMap::from_json(c, idx, g)?.abelianize(n);
    let g_prime = GMap::from_json(c, idx, g_prime)?.abelianize(n);
    let k: KappaReport = ctx.kappa(&g, &g_prime)?;
    let verified = match &k.membership {
        crate::exactlin::Membership::Member { coefficients } => {
            ctx.image_delta().basis().apply(coefficients)? == ctx.tau_tilde(&g.sub(&g_prime)?).flat()
        }
        crate::exactlin::Membership::NonMember(w) => w.verify(ctx.image_delta(), &ctx.tau_tilde(&g.sub(&g_prime)?).flat()),
    };
    report.verdict = if k.zero { "kappa vanishes".into() } else { "kappa is nonzero".into() };
    report.push("kappa", verified, &k);
    Ok(report)
}

fn bracket_lines(text: &str) -> Vec<&str> {
    text.lines().map(str::trim).filter(|l| l.starts_with('[')).collect()
}

/// All embedded data, for diffing against the source tables.
pub fn embedded_data() -> Result<Value> {
    let c8 = maclane_c8();
    let idx = crate::config::IncidenceIndex::new(&c8);
    let parse = |s: &str| -> Result<Value> { Ok(serde_json::from_str(s)?) };
    Ok(json!({
        "c8": c8.to_file(),
        "c13": glue_c13().to_file(),
        "g_plus": parse(maclane::G_PLUS_JSON)?,
        "g_minus": parse(maclane::G_MINUS_JSON)?,
        "relators_plus": bracket_lines(maclane::RELATORS_PLUS),
        "relators_minus": bracket_lines(maclane::RELATORS_MINUS),
        "duals": maclane::DUALS,
        "a0": maclane::a0(&c8, &idx)?.nonzero(&c8, &idx).iter().map(|((l, p), v)| json!({"line": l, "point": p, "value": v.iter().map(ToString::to_string).collect::<Vec<_>>()})).collect::<Vec<_>>(),
        "phi_plus": phi_c8(Sign::Plus),
        "phi_minus": phi_c8(Sign::Minus),
    }))
}
