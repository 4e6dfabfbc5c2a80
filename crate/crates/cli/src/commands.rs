//! Subcommand implementations.

use anyhow::{anyhow, bail, Context, Result};
use hrschur::analysis::lorentzian::bridge_sides;
use hrschur::analysis::polya::linear_combination;
use hrschur::analysis::polya::{
    polya_check_minors_to_order, DEFAULT_MINOR_ORDER, MAX_MINOR_LENGTH,
};
use hrschur::analysis::sequences::{derived_value_sequence, pair_value_sequence};
use hrschur::analysis::{
    kt_sequence, hessian_matches_reversal, lorentzian_check, polya_check_roots, polya_combination_class,
    LorentzianMode, Sequence,
};
use hrschur::bundles::example_bundle;
use hrschur::polyring::TermJson;
use hrschur::quadforms::form_report;
use hrschur::rational::{self, int};
use hrschur::suite::{self, SuiteReport};
use hrschur::{CohClass, MultiPoly, Partition, Rational, Space, SplitBundle};
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::output::{Outcome, Table};
use crate::{Basis, BridgeCommand, BundleArgs, Command, Mode};

pub fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match cmd {
        Command::Schur {
            lambda,
            vars,
            derived,
            basis,
        } => schur(&cfg.partition(lambda)?, *vars, *derived, *basis),
        Command::Chern { bundle } => chern(&resolve_bundle(cfg, bundle)?),
        Command::Class {
            bundle,
            lambda,
            derived,
        } => {
            let e = resolve_bundle(cfg, bundle)?;
            let c = e.derived_schur_class(&cfg.partition(lambda)?, *derived);
            Ok(Outcome::report(json!({
                "bundle": e.to_string(),
                "lambda": lambda_parts(&cfg.partition(lambda)?),
                "derived": derived,
                "class": c.to_string(),
                "degree": c.homogeneous_degree(),
                "integral": rational::to_string(&c.integrate()),
            })))
        }
        Command::Form {
            bundle,
            lambda,
            derived,
            two_factor_example,
            t,
        } => {
            if *two_factor_example {
                example_form(&rational::parse(t)?)
            } else {
                let lambda = lambda
                    .as_ref()
                    .ok_or_else(|| anyhow!("form needs --lambda or --two-factor-example"))?;
                let e = resolve_bundle(cfg, bundle)?;
                let lam = cfg.partition(lambda)?;
                let c = e.derived_schur_class(&lam, *derived);
                let report = form_report(&c)?;
                Ok(Outcome::report(json!({
                    "bundle": e.to_string(),
                    "lambda": lambda_parts(&lam),
                    "derived": derived,
                    "class": c.to_string(),
                    "form": report,
                })))
            }
        }
        Command::HrScan {
            bundle,
            lambda,
            derived,
            h,
            ts,
        } => {
            let e = resolve_bundle(cfg, bundle)?;
            hr_scan(
                &e,
                &cfg.partition(lambda)?,
                *derived,
                h.as_deref(),
                ts.as_deref(),
            )
        }
        Command::Kt {
            e,
            f,
            factors,
            e_lines,
            e_twist,
            f_lines,
            f_twist,
            lambda,
            mu,
        } => {
            let eb = resolve_bundle(
                cfg,
                &BundleArgs {
                    bundle: e.clone(),
                    factors: factors.clone(),
                    lines: e_lines.clone(),
                    twist: e_twist.clone(),
                },
            )
            .context("bundle E")?;
            let fb = resolve_bundle(
                cfg,
                &BundleArgs {
                    bundle: f.clone(),
                    factors: factors.clone(),
                    lines: f_lines.clone(),
                    twist: f_twist.clone(),
                },
            )
            .context("bundle F")?;
            let seq = kt_sequence(&eb, &fb, &cfg.partition(lambda)?, &cfg.partition(mu)?)?;
            Ok(sequence_outcome(
                seq,
                json!({"e": eb.to_string(), "f": fb.to_string()}),
            ))
        }
        Command::Seq {
            lambda,
            x,
            mu,
            y,
            d,
        } => {
            let lam = cfg.partition(lambda)?;
            let x = parse_rationals(x)?;
            let seq = match mu {
                None => derived_value_sequence(&lam, &x)?,
                Some(mu) => {
                    let y =
                        parse_rationals(y.as_deref().ok_or_else(|| anyhow!("--mu needs --y"))?)?;
                    let d = d.ok_or_else(|| anyhow!("--mu needs --d"))?;
                    pair_value_sequence(&lam, &cfg.partition(mu)?, d, &x, &y)?
                }
            };
            Ok(sequence_outcome(seq, json!({})))
        }
        Command::Polya {
            mus,
            order,
            bundle,
            lambda,
            h,
        } => polya(
            cfg,
            &parse_rationals(mus)?,
            *order,
            bundle,
            lambda.as_deref(),
            h.as_deref(),
        ),
        Command::Lorentzian {
            lambda,
            vars,
            poly,
            mode,
            eps,
        } => {
            let (p, from_schur) = input_polynomial(cfg, lambda.as_deref(), *vars, poly.as_deref())?;
            let p = if from_schur { p.normalize() } else { p };
            let mode = match mode {
                Mode::Strict => LorentzianMode::Strict,
                Mode::Perturbed => LorentzianMode::Perturbed(rational::parse(eps)?),
            };
            let report = lorentzian_check(&p, &mode)?;
            let violation =
                from_schur && matches!(mode, LorentzianMode::Perturbed(_)) && !report.lorentzian;
            Ok(Outcome {
                json: json!({"polynomial": p.to_string(), "report": report}),
                table: None,
                violation,
            })
        }
        Command::Bridge { which } => bridge(cfg, which),
        Command::Verify {
            seed,
            workers,
            examples,
            criteria,
        } => {
            let seed = seed.or(cfg.seed).unwrap_or(0);
            let ids: Vec<u32> = match (criteria, examples) {
                (Some(ids), _) => ids.clone(),
                (None, true) => vec![1, 2],
                (None, false) => suite::SUITE_CRITERIA.to_vec(),
            };
            if let Some(bad) = ids.iter().find(|id| !(1..=11).contains(*id)) {
                bail!("unknown criterion {bad}; choose from 1-11");
            }
            if *workers == Some(0) {
                bail!("--workers must be positive");
            }
            verify(&suite::run_suite(seed, &ids, *workers)?)
        }
    }
}

fn lambda_parts(l: &Partition) -> Vec<u32> {
    l.parts().to_vec()
}

fn parse_rationals(items: &[String]) -> Result<Vec<Rational>> {
    items
        .iter()
        .map(|s| rational::parse(s.trim()).with_context(|| format!("not a rational: {s:?}")))
        .collect()
}

fn parse_lines(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .map(|line| {
            line.split(',')
                .map(|v| {
                    v.trim()
                        .parse::<i64>()
                        .with_context(|| format!("bad line degree {v:?}"))
                })
                .collect()
        })
        .collect()
}

fn resolve_space(cfg: &RunConfig, factors: Option<&Vec<u32>>) -> Result<Space> {
    match factors {
        Some(f) => Ok(Space::new(f.clone())?),
        None => cfg
            .space()?
            .ok_or_else(|| anyhow!("no space: pass --factors or set `space` in the config")),
    }
}

fn resolve_bundle(cfg: &RunConfig, args: &BundleArgs) -> Result<SplitBundle> {
    let space = resolve_space(cfg, args.factors.as_ref())?;
    match (&args.bundle, &args.lines) {
        (Some(_), Some(_)) => bail!("give either a bundle name or --lines, not both"),
        (Some(name), None) => {
            let e = cfg.bundle(name, &space)?;
            match &args.twist {
                Some(t) => Ok(e.twisted(&parse_rationals(&split_list(t))?)?),
                None => Ok(e),
            }
        }
        (None, Some(lines)) => {
            let lines = parse_lines(lines)?;
            let twist = match &args.twist {
                Some(t) => parse_rationals(&split_list(t))?,
                None => vec![int(0); space.k()],
            };
            Ok(SplitBundle::new(&space, lines, twist)?)
        }
        (None, None) => bail!("no bundle: pass a config bundle name or --lines"),
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|v| v.trim().to_string()).collect()
}

fn h_class(space: &Space, h: Option<&[String]>) -> Result<CohClass> {
    match h {
        None => Ok(CohClass::hyperplane_sum(space)),
        Some(c) => Ok(CohClass::linear(space, &parse_rationals(c)?)?),
    }
}

fn schur(lambda: &Partition, vars: usize, derived: Option<i64>, basis: Basis) -> Result<Outcome> {
    if vars == 0 {
        bail!("--vars must be positive");
    }
    let (p, prefix) = match (basis, derived) {
        (Basis::Monomial, None) => (hrschur::schur::schur_jt(lambda, vars), "x"),
        (Basis::Monomial, Some(i)) => (hrschur::schur::derived_schur(lambda, i, vars), "x"),
        (Basis::Chern, None) => (hrschur::schur::schur_in_elementary(lambda, vars), "c"),
        (Basis::Chern, Some(_)) => {
            bail!("derived Schur polynomials are available in the monomial basis")
        }
    };
    Ok(Outcome::report(json!({
        "lambda": lambda_parts(lambda),
        "vars": vars,
        "derived": derived,
        "basis": match basis { Basis::Monomial => "monomial", Basis::Chern => "chern" },
        "polynomial": p.display_with(prefix).to_string(),
        "terms": p.to_json_terms(),
    })))
}

fn chern(e: &SplitBundle) -> Result<Outcome> {
    let rank = e.rank() as i64;
    let classes: Vec<String> = (0..=rank).map(|p| e.chern(p).to_string()).collect();
    let mut table = Table::new(&["p", "class"]);
    for (p, c) in classes.iter().enumerate() {
        table.rows.push(vec![p.to_string(), c.clone()]);
    }
    Ok(Outcome {
        json: json!({
            "bundle": e.to_string(),
            "space": e.space().factors(),
            "nef": e.is_nef(),
            "chern": classes,
            "total": e.total_chern().to_string(),
        }),
        table: Some(table),
        violation: false,
    })
}

fn example_form(t: &Rational) -> Result<Outcome> {
    let e = example_bundle();
    let w = linear_combination(
        &[e.chern(3), e.schur_class(&Partition::column(3))],
        &[int(1) - t, t.clone()],
    )?;
    let report = form_report(&w)?;
    Ok(Outcome::report(json!({
        "bundle": e.to_string(),
        "t": rational::to_string(t),
        "class": w.to_string(),
        "form": report,
    })))
}

fn default_ts() -> Vec<Rational> {
    (0..=10).map(|k| rational::frac(k, 10)).collect()
}

fn hr_scan(
    e: &SplitBundle,
    lambda: &Partition,
    derived: i64,
    h: Option<&[String]>,
    ts: Option<&[String]>,
) -> Result<Outcome> {
    let space = e.space();
    let h = h_class(space, h)?;
    let hc = h.linear_coefficients()?;
    let ts = match ts {
        Some(ts) => parse_rationals(ts)?,
        None => default_ts(),
    };
    let nef_h = hc.iter().all(rational::is_nonneg);
    let expected = e.is_nef() && nef_h;
    let mut rows = Vec::new();
    let mut table = Table::new(&["t", "n_plus", "n_minus", "n_zero", "hr", "weak_hr"]);
    let mut violation = false;
    for t in &ts {
        let delta: Vec<Rational> = hc.iter().map(|c| c * t).collect();
        let et = e.twisted(&delta)?;
        let report = form_report(&et.derived_schur_class(lambda, derived))?;
        if expected && rational::is_nonneg(t) && !report.weak_hr {
            violation = true;
        }
        let i = report.inertia;
        table.rows.push(vec![
            rational::to_string(t),
            i.n_plus.to_string(),
            i.n_minus.to_string(),
            i.n_zero.to_string(),
            report.hr.to_string(),
            report.weak_hr.to_string(),
        ]);
        rows.push(json!({"t": rational::to_string(t), "form": report}));
    }
    Ok(Outcome {
        json: json!({
            "bundle": e.to_string(),
            "lambda": lambda_parts(lambda),
            "derived": derived,
            "h": h.to_string(),
            "nef": expected,
            "scan": rows,
        }),
        table: Some(table),
        violation,
    })
}

fn sequence_outcome(seq: Sequence, extra: Value) -> Outcome {
    let lc = seq.is_log_concave();
    let mut table = Table::new(&["i", "value"]);
    for (k, v) in seq.values.iter().enumerate() {
        table.rows.push(vec![
            (seq.start + k as i64).to_string(),
            rational::to_string(v),
        ]);
    }
    let mut json = json!({"sequence": seq, "log_concave": lc});
    if let (Value::Object(m), Value::Object(x)) = (&mut json, extra) {
        m.extend(x);
    }
    Outcome {
        json,
        table: Some(table),
        violation: !lc,
    }
}

fn polya(
    cfg: &RunConfig,
    mus: &[Rational],
    order: Option<usize>,
    bundle: &BundleArgs,
    lambda: Option<&str>,
    h: Option<&[String]>,
) -> Result<Outcome> {
    if mus.is_empty() {
        bail!("--mus needs at least one entry");
    }
    let order = order.unwrap_or(DEFAULT_MINOR_ORDER);
    let minors = if mus.len() <= MAX_MINOR_LENGTH {
        Some(polya_check_minors_to_order(mus, order)?)
    } else {
        None
    };
    let roots = polya_check_roots(mus);
    let agree = minors.map(|m| m == roots);
    let mut violation = agree == Some(false);
    let mut json = json!({
        "mus": rational::to_strings(mus),
        "minor_order": order,
        "minors_nonneg": minors,
        "real_rooted": roots,
        "agree": agree,
    });
    if let Some(lambda) = lambda {
        let e = resolve_bundle(cfg, bundle)?;
        let h = h_class(e.space(), h)?;
        let lam = cfg.partition(lambda)?;
        let class = polya_combination_class(&lam, &e, &h, mus)?;
        let report = form_report(&class)?;
        if roots && !report.weak_hr {
            violation = true;
        }
        json["combination"] = json!({
            "bundle": e.to_string(),
            "lambda": lambda_parts(&lam),
            "h": h.to_string(),
            "class": class.to_string(),
            "form": report,
        });
    }
    Ok(Outcome {
        json,
        table: None,
        violation,
    })
}

/// The polynomial named on the command line and whether it is a Schur
/// polynomial.
fn input_polynomial(
    cfg: &RunConfig,
    lambda: Option<&str>,
    vars: Option<usize>,
    poly: Option<&str>,
) -> Result<(MultiPoly, bool)> {
    match (lambda, poly) {
        (Some(l), None) => {
            let vars = vars.ok_or_else(|| anyhow!("--lambda needs --vars"))?;
            if vars == 0 {
                bail!("--vars must be positive");
            }
            Ok((hrschur::schur::schur_jt(&cfg.partition(l)?, vars), true))
        }
        (None, Some(text)) => {
            let terms: Vec<TermJson> = serde_json::from_str(text).context("--poly")?;
            Ok((MultiPoly::from_json_terms(&terms, vars)?, false))
        }
        _ => bail!("give exactly one of --lambda and --poly"),
    }
}

fn bridge(cfg: &RunConfig, which: &BridgeCommand) -> Result<Outcome> {
    match which {
        BridgeCommand::Reversal {
            lambda,
            vars,
            poly,
            alpha,
            e_prime,
        } => {
            let (p, _) = input_polynomial(cfg, lambda.as_deref(), *vars, poly.as_deref())?;
            let e_prime = e_prime.unwrap_or_else(|| p.max_var_degree());
            let ok = hessian_matches_reversal(&p, e_prime, alpha)?;
            let hessian = p.normalize().hessian_of_partial(alpha)?;
            let reversed =
                hrschur::analysis::lorentzian::reversed_coefficient_matrix(&p, e_prime, alpha)?;
            Ok(Outcome {
                json: json!({
                    "polynomial": p.to_string(),
                    "alpha": alpha,
                    "e_prime": e_prime,
                    "hessian": hessian,
                    "reversed_coefficients": reversed,
                    "equal": ok,
                }),
                table: None,
                violation: !ok,
            })
        }
        BridgeCommand::Hessian {
            lambda,
            vars,
            box_size,
            alpha,
            eps,
        } => {
            let lam = cfg.partition(lambda)?;
            let eps = rational::parse(eps)?;
            let sides = bridge_sides(&lam, *vars, *box_size, alpha, &eps)?;
            let ok = sides.hessian == sides.intersection;
            Ok(Outcome {
                json: json!({
                    "lambda": lambda_parts(&lam),
                    "vars": vars,
                    "box": box_size,
                    "alpha": alpha,
                    "epsilon": rational::to_string(&eps),
                    "space": sides.space.factors(),
                    "hessian": sides.hessian,
                    "intersection": sides.intersection,
                    "equal": ok,
                }),
                table: None,
                violation: !ok,
            })
        }
    }
}

fn verify(report: &SuiteReport) -> Result<Outcome> {
    for c in &report.criteria {
        eprintln!(
            "{} criterion {:>2} {}: {} checks, {} violations",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.name,
            c.checks,
            c.violations
        );
    }
    let mut table = Table::new(&["criterion", "instance", "lhs", "rhs", "ok", "seed"]);
    for c in &report.criteria {
        for r in &c.records {
            table.rows.push(vec![
                c.id.to_string(),
                r.instance.clone(),
                r.lhs.clone(),
                r.rhs.clone(),
                r.ok.to_string(),
                r.seed.to_string(),
            ]);
        }
    }
    let json: Value = serde_json::from_str(&report.to_json())?;
    Ok(Outcome {
        json,
        table: Some(table),
        violation: !report.passed,
    })
}
