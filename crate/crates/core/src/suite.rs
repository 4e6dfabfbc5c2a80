//! The verification suite: exact reproductions of known examples and
//! seeded, zero-violation property runs over random instances.
//!
//! Every instance draws from its own ChaCha stream, seeded from the master
//! seed, the criterion number and the instance index, so reports do not
//! depend on the worker count.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::inequalities::{hodge_index_check, schur_hodge_improved_check};
use crate::analysis::lorentzian::{
    default_epsilon, hessian_vs_intersection, hessian_matches_reversal, lorentzian_check, LorentzianMode,
};
use crate::analysis::polya::{
    linear_combination, polya_check_minors, polya_check_roots, polya_combination_class,
};
use crate::analysis::positivity::{fl_positivity, monomial_positivity};
use crate::analysis::sequences::{
    derived_value_sequence, is_log_concave, is_ultra_log_concave, kt_sequence, pair_value_sequence,
};
use crate::bundles::{example_bundle, SplitBundle};
use crate::cohomology::{CohClass, Space};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::partitions::Partition;
use crate::polyring::MultiPoly;
use crate::quadforms::{inertia, intersection_form, InertiaTriple};
use crate::random::{self, instance_seed, rng_from};
use crate::rational::{self, frac, int, Rational};
use crate::schur::{
    chern_derived_check, compositions, derived_schur_table_check, dual_reversal_check, schur_jt,
    schur_ssyt,
};

/// One checked instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub instance: String,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
    pub seed: u64,
}

impl Record {
    fn new(
        instance: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        ok: bool,
        seed: u64,
    ) -> Self {
        Self {
            instance: instance.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            ok,
            seed,
        }
    }

    fn failed(instance: impl Into<String>, err: &Error, seed: u64) -> Self {
        Self::new(instance, format!("error: {err}"), "", false, seed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: String,
    pub checks: usize,
    pub violations: usize,
    pub passed: bool,
    pub records: Vec<Record>,
}

impl CriterionReport {
    fn from_records(id: u32, records: Vec<Record>) -> Self {
        let violations = records.iter().filter(|r| !r.ok).count();
        Self {
            id,
            name: criterion_name(id).to_string(),
            checks: records.len(),
            violations,
            passed: violations == 0 && !records.is_empty(),
            records,
        }
    }

    /// The first few failing records.
    pub fn first_failures(&self, n: usize) -> Vec<&Record> {
        self.records.iter().filter(|r| !r.ok).take(n).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Criteria computed by [`run_criterion`]; criterion 12 is the
/// reproducibility check of [`determinism_report`].
pub const SUITE_CRITERIA: [u32; 11] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11];

pub fn criterion_name(id: u32) -> &'static str {
    match id {
        1 => "two-factor example form",
        2 => "low-degree derived Schur identities",
        3 => "Jacobi-Trudi against tableaux",
        4 => "dual partition reversal",
        5 => "twist rule against roots",
        6 => "positivity of Schur numbers",
        7 => "Hodge-Riemann forms",
        8 => "log-concave sequences",
        9 => "Hodge-index inequalities",
        10 => "Polya frequency sequences",
        11 => "Lorentzian certification",
        12 => "reproducibility",
        _ => "unknown",
    }
}

/// Runs one criterion; `id` must be in `1..=11`.
pub fn run_criterion(id: u32, seed: u64) -> Result<CriterionReport> {
    let records = match id {
        1 => example_form(seed),
        2 => low_degree_identities(),
        3 => jacobi_trudi_vs_tableaux(),
        4 => dual_reversal(seed),
        5 => twist_rule(seed),
        6 => positivity(seed),
        7 => hodge_riemann(seed),
        8 => log_concavity(seed),
        9 => hodge_index(seed),
        10 => polya(seed),
        11 => lorentzian(seed),
        _ => {
            return Err(Error::Invalid(format!(
                "no criterion {id}; expected 1 to 11"
            )))
        }
    };
    Ok(CriterionReport::from_records(id, records))
}

/// Runs the listed criteria on a pool of `workers` threads (`None` for the
/// rayon default). Instance order, and so the report, is independent of the
/// worker count.
pub fn run_suite(seed: u64, ids: &[u32], workers: Option<usize>) -> Result<SuiteReport> {
    let run = || -> Result<SuiteReport> {
        let criteria = ids
            .iter()
            .map(|&id| run_criterion(id, seed))
            .collect::<Result<Vec<_>>>()?;
        let passed = criteria.iter().all(|c| c.passed);
        Ok(SuiteReport {
            seed,
            passed,
            criteria,
        })
    };
    match workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| Error::Invalid(format!("cannot start {n} workers: {e}")))?
            .install(run),
        None => run(),
    }
}

/// Runs the suite twice, on one worker and on `workers`, and compares the
/// serialized reports byte for byte.
pub fn determinism_report(
    seed: u64,
    ids: &[u32],
    workers: Option<usize>,
) -> Result<CriterionReport> {
    let a = run_suite(seed, ids, Some(1))?.to_json();
    let b = run_suite(seed, ids, workers)?.to_json();
    let digest = |s: &str| format!("{} bytes, fnv {:016x}", s.len(), fnv1a(s.as_bytes()));
    let record = Record::new(
        format!("suite seed {seed}"),
        digest(&a),
        digest(&b),
        a == b,
        seed,
    );
    Ok(CriterionReport::from_records(12, vec![record]))
}

fn fnv1a(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, &b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Maps `f` over `n` seeded instances in parallel, preserving order.
fn instances<F>(seed: u64, stream: u64, n: usize, f: F) -> Vec<Record>
where
    F: Fn(&mut ChaCha8Rng, u64) -> Record + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|i| {
            let s = instance_seed(seed, stream, i as u64);
            f(&mut rng_from(s), s)
        })
        .collect()
}

fn q(v: &Rational) -> String {
    rational::to_string(v)
}

fn show_matrix(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_strings()
        .iter()
        .map(|r| format!("[{}]", r.join(",")))
        .collect();
    format!("[{}]", rows.join(","))
}

fn form_inertia(omega: &CohClass) -> Result<InertiaTriple> {
    inertia(&intersection_form(omega, omega.space())?)
}

// 1 ------------------------------------------------------------------------

fn example_combination(t: &Rational) -> (Space, CohClass) {
    let e = example_bundle();
    let s = e.space().clone();
    let w = linear_combination(
        &[e.chern(3), e.schur_class(&Partition::column(3))],
        &[int(1) - t, t.clone()],
    )
    .expect("two classes, two coefficients");
    (s, w)
}

fn example_form(seed: u64) -> Vec<Record> {
    let mut out = Vec::new();
    for t in [frac(1, 10), frac(1, 4), frac(1, 3)] {
        let (s, w) = example_combination(&t);
        let two_t = &t * int(2);
        let expect = Matrix::from_rows(vec![
            vec![t.clone(), two_t.clone()],
            vec![two_t.clone(), int(1) + &two_t],
        ])
        .expect("2x2");
        let inst = format!("(1-t)c3 + t s_(1,1,1), t = {}", q(&t));
        match intersection_form(&w, &s) {
            Ok(m) => out.push(Record::new(
                inst,
                show_matrix(&m),
                show_matrix(&expect),
                m == expect,
                seed,
            )),
            Err(err) => out.push(Record::failed(inst, &err, seed)),
        }
    }
    let mut ts = vec![frac(1, 10), frac(1, 4), frac(1, 3)];
    let mut rng = rng_from(instance_seed(seed, 1, 0));
    ts.extend((0..12).map(|_| random::positive_below(&mut rng, frac(1, 2), 60)));
    for t in ts {
        let (_, w) = example_combination(&t);
        let inst = format!("inertia of (1-t)c3 + t s_(1,1,1), t = {}", q(&t));
        let want = InertiaTriple {
            n_plus: 2,
            n_minus: 0,
            n_zero: 0,
        };
        out.push(match form_inertia(&w) {
            Ok(tri) => Record::new(inst, tri.to_string(), want.to_string(), tri == want, seed),
            Err(err) => Record::failed(inst, &err, seed),
        });
    }
    out
}

// 2 ------------------------------------------------------------------------

fn low_degree_identities() -> Vec<Record> {
    let mut out = Vec::new();
    for e in 3..=5 {
        match derived_schur_table_check(e) {
            Ok(rep) => out.extend(rep.checks.into_iter().map(|c| {
                Record::new(
                    format!("e = {e}: {}", c.identity),
                    "derived",
                    "closed form",
                    c.ok,
                    0,
                )
            })),
            Err(err) => out.push(Record::failed(format!("table e = {e}"), &err, 0)),
        }
    }
    for e in 1..=5 {
        out.extend(chern_derived_check(e).checks.into_iter().map(|c| {
            Record::new(
                format!("e = {e}: {}", c.identity),
                "derived",
                "closed form",
                c.ok,
                0,
            )
        }));
    }
    out
}

// 3 ------------------------------------------------------------------------

fn jacobi_trudi_vs_tableaux() -> Vec<Record> {
    let cases: Vec<(Partition, usize)> = (0..=8)
        .flat_map(Partition::all_of)
        .flat_map(|l| (1..=4).map(move |e| (l.clone(), e)))
        .collect();
    cases
        .into_par_iter()
        .map(|(l, e)| {
            let jt = schur_jt(&l, e);
            let ssyt = schur_ssyt(&l, e);
            Record::new(
                format!("λ = {l}, e = {e}"),
                format!("{} terms", jt.len()),
                format!("{} terms", ssyt.len()),
                jt == ssyt,
                0,
            )
        })
        .collect()
}

// 4 ------------------------------------------------------------------------

fn dual_reversal(seed: u64) -> Vec<Record> {
    instances(seed, 4, 100, |rng, s| {
        let e = rng.random_range(1..=4u32);
        let n = rng.random_range(1..=5usize);
        let mut parts: Vec<u32> = (0..n).map(|_| rng.random_range(0..=e)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let l = Partition::new(parts).expect("decreasing parts");
        let inst = format!("λ = {l}, e = {e}, N = {n}");
        match dual_reversal_check(&l, e as usize, n) {
            Ok(ok) => Record::new(inst, "reversed s_λ̄", "s_λ", ok, s),
            Err(err) => Record::failed(inst, &err, s),
        }
    })
}

// 5 ------------------------------------------------------------------------

fn twist_rule(seed: u64) -> Vec<Record> {
    instances(seed, 5, 200, |rng, s| {
        let d = rng.random_range(1..=6);
        let space = random::space_of_dim(rng, d);
        let rank = rng.random_range(1..=4);
        let b = random::any_bundle(rng, &space, rank);
        let bad: Vec<usize> = (0..=rank)
            .filter(|&p| b.chern_by_twist_rule(p as i64) != b.chern_by_roots(p as i64))
            .collect();
        Record::new(
            format!("{b} on {space}"),
            "twist rule",
            "root expansion",
            bad.is_empty(),
            s,
        )
    })
}

// 6 ------------------------------------------------------------------------

fn nonneg_record(inst: String, v: Result<Rational>, s: u64) -> Record {
    match v {
        Ok(v) => {
            let ok = rational::is_nonneg(&v);
            Record::new(inst, q(&v), "≥ 0", ok, s)
        }
        Err(err) => Record::failed(inst, &err, s),
    }
}

fn positivity(seed: u64) -> Vec<Record> {
    let mut out = instances(seed, 6, 500, |rng, s| {
        let d = rng.random_range(1..=6);
        let space = random::space_of_dim(rng, d);
        let rank = rng.random_range(1..=4);
        let e = random::nef_bundle(rng, &space, rank);
        let w = rng.random_range(d..=8);
        let l = random::partition_of(rng, w, None).expect("unrestricted");
        let i = i64::from(w - d);
        nonneg_record(
            format!("∫ s_{l}^({i})(E), E = {e} on {space}"),
            fl_positivity(&e, &l, i),
            s,
        )
    });
    out.extend(instances(seed, 60, 200, |rng, s| {
        let d = rng.random_range(1..=6);
        let space = random::space_of_dim(rng, d);
        let count = rng.random_range(1..=3usize);
        let split = random::composition(rng, d, count);
        let mut bundles = Vec::new();
        let mut lambdas = Vec::new();
        let mut shifts = Vec::new();
        for &a in &split {
            let i = rng.random_range(0..=2u32);
            let rank = rng.random_range(1..=3);
            bundles.push(random::nef_bundle(rng, &space, rank));
            lambdas.push(random::partition_of(rng, a + i, None).expect("unrestricted"));
            shifts.push(i64::from(i));
        }
        let desc: Vec<String> = bundles
            .iter()
            .zip(&lambdas)
            .zip(&shifts)
            .map(|((b, l), i)| format!("s_{l}^({i})({b})"))
            .collect();
        nonneg_record(
            format!("∫ {} on {space}", desc.join(" ")),
            monomial_positivity(&bundles, &lambdas, &shifts),
            s,
        )
    }));
    out
}

// 7 ------------------------------------------------------------------------

fn hr_at(e: &SplitBundle, l: &Partition, i: i64, t: &Rational) -> Result<InertiaTriple> {
    let k = e.space().k();
    form_inertia(&e.twisted(&vec![t.clone(); k])?.derived_schur_class(l, i))
}

fn hodge_riemann(seed: u64) -> Vec<Record> {
    let mut out: Vec<Record> = instances(seed, 7, 200, |rng, s| {
        let d = rng.random_range(2..=6u32);
        let space = random::space_of_dim(rng, d);
        let rank = rng.random_range(1..=4usize);
        let e = random::nef_bundle(rng, &space, rank);
        let i = rng.random_range(0..=2u32);
        let l = random::partition_of(rng, d - 2 + i, Some(rank as u32)).expect("λ₁ ≤ rank exists");
        let i = i64::from(i);
        let t = random::rational_in(rng, 0, 1, 12).max(frac(1, 12));
        let inst = format!("s_{l}^({i})(E<th>), E = {e} on {space}, h = Σ τ");
        let mut run = || -> Result<Record> {
            let weak = form_inertia(&e.derived_schur_class(&l, i))?;
            let mut tri = hr_at(&e, &l, i, &t)?;
            let mut lhs = format!("t=0: {weak}; t={}: {tri}", q(&t));
            if !tri.is_hr() {
                let t2 = random::positive_below(rng, int(1), 97);
                tri = hr_at(&e, &l, i, &t2)?;
                lhs.push_str(&format!("; resampled t={}: {tri}", q(&t2)));
            }
            Ok(Record::new(
                inst.clone(),
                lhs,
                "weak HR at 0, HR at t",
                weak.is_weak_hr() && tri.is_hr(),
                s,
            ))
        };
        run().unwrap_or_else(|err| Record::failed(inst.clone(), &err, s))
    });
    out.extend(instances(seed, 70, 100, |rng, s| {
        let d = rng.random_range(2..=6u32);
        let space = random::space_of_dim(rng, d);
        let count = rng.random_range(1..=3usize);
        let split = random::composition(rng, d - 2, count);
        let mut omega = CohClass::one(&space);
        let mut desc = Vec::new();
        let mut err = None;
        for &a in &split {
            let rank = rng.random_range(1..=3usize);
            let b = random::nef_bundle(rng, &space, rank);
            let l = random::partition_of(rng, a, None).expect("unrestricted");
            desc.push(format!("s_{l}({b})"));
            match omega.multiply(&b.schur_class(&l)) {
                Ok(w) => omega = w,
                Err(e) => err = Some(e),
            }
        }
        let inst = format!("{} on {space}", desc.join(" "));
        if let Some(e) = err {
            return Record::failed(inst, &e, s);
        }
        match form_inertia(&omega) {
            Ok(tri) => Record::new(inst, tri.to_string(), "weak HR", tri.is_weak_hr(), s),
            Err(e) => Record::failed(inst, &e, s),
        }
    }));
    out
}

// 8 ------------------------------------------------------------------------

fn show_values(v: &[Rational]) -> String {
    format!("({})", rational::to_strings(v).join(","))
}

fn log_concavity(seed: u64) -> Vec<Record> {
    let mut out = instances(seed, 8, 200, |rng, s| {
        let d = rng.random_range(1..=5u32);
        let space = random::space_of_dim(rng, d);
        let re = rng.random_range(1..=3);
        let rf = rng.random_range(1..=3);
        let e = random::nef_bundle(rng, &space, re);
        let f = random::nef_bundle(rng, &space, rf);
        let wl = rng.random_range(0..=6u32);
        let wm = rng.random_range(d.saturating_sub(wl)..=6u32.max(d.saturating_sub(wl)));
        let l = random::partition_of(rng, wl, None).expect("unrestricted");
        let m = random::partition_of(rng, wm, None).expect("unrestricted");
        let inst = format!("λ = {l}, μ = {m}, E = {e}, F = {f} on {space}");
        match kt_sequence(&e, &f, &l, &m) {
            Ok(seq) => Record::new(
                inst,
                show_values(&seq.values),
                "log-concave",
                seq.is_log_concave(),
                s,
            ),
            Err(err) => Record::failed(inst, &err, s),
        }
    });
    out.extend(instances(seed, 80, 1000, |rng, s| {
        let e = rng.random_range(1..=4usize);
        let w = rng.random_range(1..=6u32);
        let l = random::partition_of(rng, w, None).expect("unrestricted");
        let x = random::nonneg_point(rng, e, 10, 6);
        let inst = format!("s_{l}^(i) at {}", show_values(&x));
        match derived_value_sequence(&l, &x) {
            Ok(seq) => Record::new(
                inst,
                show_values(&seq.values),
                "log-concave",
                is_log_concave(&seq.values),
                s,
            ),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    let l = Partition::new(vec![2, 1]).expect("valid");
    let m = Partition::new(vec![1, 1]).expect("valid");
    out.extend(instances(seed, 81, 1000, |rng, s| {
        let x = random::nonneg_point(rng, 3, 10, 6);
        let y = random::nonneg_point(rng, 3, 10, 6);
        let inst = format!(
            "pair λ = (2,1), μ = (1,1), d = 4 at x = {}, y = {}",
            show_values(&x),
            show_values(&y)
        );
        match pair_value_sequence(&l, &m, 4, &x, &y) {
            Ok(seq) => Record::new(
                inst,
                show_values(&seq.values),
                "log-concave",
                is_log_concave(&seq.values),
                s,
            ),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    out.extend(instances(seed, 82, 100, |rng, s| {
        let e = rng.random_range(1..=5usize);
        let x = random::nonneg_point(rng, e, 10, 6);
        let inst = format!("s_({e})^(i) at {}", show_values(&x));
        match derived_value_sequence(&Partition::row(e as u32), &x) {
            Ok(seq) => Record::new(
                inst,
                show_values(&seq.values),
                "ultra-log-concave",
                is_ultra_log_concave(&seq.values),
                s,
            ),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    out
}

// 9 ------------------------------------------------------------------------

fn hodge_index(seed: u64) -> Vec<Record> {
    let mut out = instances(seed, 9, 300, |rng, s| {
        let d = rng.random_range(2..=6u32);
        let space = random::space_of_dim(rng, d);
        let rank = rng.random_range(1..=4usize);
        let e = random::nef_bundle(rng, &space, rank);
        let l = random::partition_of(rng, d - 2, None).expect("unrestricted");
        let alpha = random::degree_one_class(rng, &space);
        let beta = random::nef_class(rng, &space);
        let inst = format!("Ω = s_{l}({e}) on {space}, α = {alpha}, β = {beta}");
        match hodge_index_check(&e.schur_class(&l), &alpha, &beta) {
            Ok(r) => Record::new(inst, q(&r.lhs), q(&r.rhs), r.ok, s),
            Err(err) => Record::failed(inst, &err, s),
        }
    });
    out.extend(instances(seed, 90, 300, |rng, s| {
        let d = rng.random_range(2..=6u32);
        let space = random::space_of_dim(rng, d);
        let rank = rng.random_range(1..=4usize);
        let e = random::nef_bundle(rng, &space, rank);
        let l = random::partition_of(rng, d - 1, None).expect("unrestricted");
        let h = random::nef_class(rng, &space);
        let alpha = random::degree_one_class(rng, &space);
        let inst = format!("E = {e} on {space}, λ = {l}, h = {h}, α = {alpha}");
        match schur_hodge_improved_check(&e, &h, &l, &alpha) {
            Ok(r) => Record::new(inst, q(&r.lhs), q(&r.rhs), r.ok, s),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    out
}

// 10 -----------------------------------------------------------------------

/// Coefficients of `scale · ∏ (1 + tⱼ z)`.
fn product_of_linear(scale: Rational, ts: &[Rational]) -> Vec<Rational> {
    let mut coeffs = vec![scale];
    for t in ts {
        let mut next = vec![int(0); coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c * t;
        }
        coeffs = next;
    }
    coeffs
}

/// The sequences of the Pólya agreement corpus: 40 scaled binomial rows,
/// 80 products of linear factors and 80 sequences that are not Pólya
/// frequency sequences.
pub fn polya_corpus(seed: u64) -> Vec<(String, Vec<Rational>)> {
    (0..200u64)
        .map(|i| {
            let mut rng = rng_from(instance_seed(seed, 100, i));
            let rng = &mut rng;
            let scale = random::rational_in(rng, 1, 5, 3);
            if i < 40 {
                let n = rng.random_range(0..=5i64);
                let row = (0..=n).map(|k| rational::binomial(n, k) * &scale).collect();
                (format!("binomial row {n}"), row)
            } else if i < 120 {
                let n = rng.random_range(0..=5usize);
                let ts: Vec<Rational> = (0..n)
                    .map(|_| random::rational_in(rng, 0, 9, 9).max(frac(1, 9)))
                    .collect();
                (
                    format!("product of (1 + t z), t = {}", show_values(&ts)),
                    product_of_linear(scale, &ts),
                )
            } else {
                adversarial(rng, scale)
            }
        })
        .collect()
}

/// Sequences that fail to be Pólya frequency sequences: random entries,
/// interior zeros, and real-rooted products with one interior coefficient
/// lowered.
fn adversarial(rng: &mut ChaCha8Rng, scale: Rational) -> (String, Vec<Rational>) {
    loop {
        let kind = rng.random_range(0..3);
        let v: Vec<Rational> = match kind {
            0 => {
                let n = rng.random_range(2..=6);
                (0..n).map(|_| int(rng.random_range(0..=9))).collect()
            }
            1 => {
                let n = rng.random_range(3..=6);
                let mut v: Vec<Rational> = (0..n).map(|_| int(rng.random_range(1..=9))).collect();
                let k = rng.random_range(1..n - 1);
                v[k] = int(0);
                v
            }
            _ => {
                let n = rng.random_range(2..=5usize);
                let ts: Vec<Rational> = (0..n)
                    .map(|_| random::rational_in(rng, 0, 4, 4).max(frac(1, 4)))
                    .collect();
                let mut v = product_of_linear(scale.clone(), &ts);
                let k = rng.random_range(1..v.len() - 1);
                let keep = random::positive_below(rng, int(1), 10);
                v[k] = &v[k] * keep;
                v
            }
        };
        if !polya_check_roots(&v) {
            let label = ["random entries", "interior zero", "lowered coefficient"][kind];
            return (format!("{label} {}", show_values(&v)), v);
        }
    }
}

fn polya(seed: u64) -> Vec<Record> {
    let corpus = polya_corpus(seed);
    let mut out: Vec<Record> = corpus
        .into_par_iter()
        .enumerate()
        .map(|(i, (label, v))| {
            let s = instance_seed(seed, 100, i as u64);
            let roots = polya_check_roots(&v);
            match polya_check_minors(&v) {
                Ok(minors) => Record::new(
                    label,
                    format!("minors: {minors}"),
                    format!("real roots: {roots}"),
                    minors == roots,
                    s,
                ),
                Err(err) => Record::failed(label, &err, s),
            }
        })
        .collect();
    out.extend(instances(seed, 101, 100, |rng, s| {
        let d = rng.random_range(2..=6u32);
        let space = random::space_of_dim(rng, d);
        let rank = rng.random_range(1..=4usize);
        let e = random::nef_bundle(rng, &space, rank);
        let l = random::partition_of(rng, d - 2, None).expect("unrestricted");
        let h = random::nef_class(rng, &space);
        let n = rng.random_range(0..=(d - 2) as usize);
        let ts: Vec<Rational> = (0..n).map(|_| random::rational_in(rng, 0, 5, 5)).collect();
        let mut mus = product_of_linear(random::rational_in(rng, 1, 3, 2), &ts);
        mus.resize((d - 1) as usize, int(0));
        let inst = format!(
            "μ = {}, λ = {l}, E = {e} on {space}, h = {h}",
            show_values(&mus)
        );
        let run = || -> Result<InertiaTriple> {
            form_inertia(&polya_combination_class(&l, &e, &h, &mus)?)
        };
        match run() {
            Ok(tri) => Record::new(inst, tri.to_string(), "weak HR", tri.is_weak_hr(), s),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    for t in [frac(1, 10), frac(1, 4), frac(2, 5)] {
        let (_, w) = example_combination(&t);
        let inst = format!("(1-t)c3 + t s_(1,1,1), t = {}", q(&t));
        out.push(match form_inertia(&w) {
            Ok(tri) => Record::new(
                inst,
                tri.to_string(),
                "not weak HR",
                !tri.is_weak_hr(),
                seed,
            ),
            Err(err) => Record::failed(inst, &err, seed),
        });
    }
    out
}

// 11 -----------------------------------------------------------------------

fn lorentzian(seed: u64) -> Vec<Record> {
    let cases: Vec<(Partition, usize)> = (2..=6)
        .flat_map(Partition::all_of)
        .flat_map(|l| {
            let m = l.first() as usize;
            (m.max(1)..=3).map(move |e| (l.clone(), e))
        })
        .collect();
    let mut out: Vec<Record> = cases
        .into_par_iter()
        .map(|(l, e)| {
            let p = schur_jt(&l, e).normalize();
            let inst = format!("N(s_{l}) in {e} variables");
            let eps = default_epsilon();
            let run = || -> Result<Record> {
                let r = lorentzian_check(&p, &LorentzianMode::Perturbed(eps.clone()))?;
                if r.lorentzian {
                    return Ok(Record::new(
                        inst.clone(),
                        format!("ε = {}: Lorentzian", q(&eps)),
                        "Lorentzian",
                        true,
                        0,
                    ));
                }
                let smaller = &eps / int(10);
                let r2 = lorentzian_check(&p, &LorentzianMode::Perturbed(smaller.clone()))?;
                Ok(Record::new(
                    inst.clone(),
                    format!(
                        "ε = {}: failed; ε = {}: {}",
                        q(&eps),
                        q(&smaller),
                        r2.lorentzian
                    ),
                    "Lorentzian",
                    r2.lorentzian,
                    0,
                ))
            };
            run().unwrap_or_else(|err| Record::failed(inst.clone(), &err, 0))
        })
        .collect();
    out.extend(instances(seed, 110, 100, |rng, s| {
        let e = rng.random_range(1..=3usize);
        let d = rng.random_range(2..=5u32);
        let p = if rng.random_bool(0.5) {
            let w = rng.random_range(2..=d);
            let l = random::partition_of(rng, w, Some(e as u32)).expect("parts ≤ e");
            schur_jt(&l, e)
        } else {
            random_form(rng, e, d)
        };
        let dp = p.homogeneous_degree().unwrap_or(0);
        let ep = p.max_var_degree() + rng.random_range(0..=2u32);
        let comps = compositions(dp.saturating_sub(2), e);
        let alpha = comps[rng.random_range(0..comps.len())].clone();
        let inst = format!("p = {p}, e′ = {ep}, α = {alpha:?}");
        match hessian_matches_reversal(&p, ep, &alpha) {
            Ok(ok) => Record::new(inst, "Hessian of ∂^α N(p)", "[q tᵢ tⱼ]_β", ok, s),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    out.extend(instances(seed, 111, 100, |rng, s| {
        let e = rng.random_range(1..=3usize);
        let n = rng.random_range(e.max(2)..=4usize);
        let (l, alpha) = loop {
            let w = rng.random_range(2..=(e * n).min(7) as u32);
            let Some(l) = random::partition_of(rng, w, Some(e as u32)) else {
                continue;
            };
            if l.len() > n {
                continue;
            }
            let comps: Vec<Vec<u32>> = compositions(w - 2, e)
                .into_iter()
                .filter(|a| a.iter().all(|&x| x as usize <= n))
                .collect();
            if comps.is_empty() {
                continue;
            }
            let a = comps[rng.random_range(0..comps.len())].clone();
            break (l, a);
        };
        let eps = random::rational_in(rng, 0, 1, 40) / int(10);
        let inst = format!("λ = {l}, e = {e}, N = {n}, α = {alpha:?}, ε = {}", q(&eps));
        match hessian_vs_intersection(&l, e, n, &alpha, &eps) {
            Ok(ok) => Record::new(inst, "Hessian of ∂^α N(p_ε)", "form of s_λ̄(E′)", ok, s),
            Err(err) => Record::failed(inst, &err, s),
        }
    }));
    out
}

/// Nonzero homogeneous form of degree `d` with small nonnegative integer
/// coefficients on a random support.
fn random_form(rng: &mut ChaCha8Rng, e: usize, d: u32) -> MultiPoly {
    loop {
        let mut p = MultiPoly::zero(e);
        for m in compositions(d, e) {
            if rng.random_bool(0.6) {
                let c = int(rng.random_range(1..=5));
                p = p
                    .checked_add(&MultiPoly::monomial(m, c))
                    .expect("same variable count");
            }
        }
        if !p.is_zero() {
            return p;
        }
    }
}
