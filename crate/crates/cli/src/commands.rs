//! Command implementations. Each command writes canonical report lines to
//! stdout (human diagnostics go to stderr) and returns its exit code.
//!
//! Exit codes are a stable contract: 0 success / condition holds, 1 the
//! checked condition is false, 2 a violation candidate was found, 64 usage
//! error, 65 malformed or invalid input document, 69 generator attempt
//! budget exhausted.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use cb_core::audit::{
    audit_all, audit_statement, bound_lp, castelnuovo_p3, castelnuovo_p3_floor, castelnuovo_p4,
    castelnuovo_p4_floor, cg_obstruction, correspondence_ranges, corollary_threshold, fuzz_search,
    linear_series_interval, plane_config_bound, su_bound, AuditReport, AuditVerdict,
    ObstructionParams, ObstructionVariant, PassWitness, StatementId,
};
use cb_core::cb::{cb_scan, default_k_max, is_cb, CbOutcome};
use cb_core::error::{AuditError, GenError};
use cb_core::field::{FieldSpec, PrimeField, RationalField};
use cb_core::generators::{
    gen_ci_pn, gen_collinear, gen_plane_ci, gen_plane_config, gen_random, gen_rnc_points,
    Generated, Provenance,
};
use cb_core::Rational;

use crate::docs::{
    self, canonical_bytes, digest, document, evidence_to_json, outcome_to_json, parse_document_bytes,
    provenance_to_json, report_line, witness_to_json, AnyPointSet, JsonScalar,
};
use crate::with_points;

pub enum CliError {
    Usage(String),
    Data(String),
    Budget(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Data(_) => 65,
            CliError::Budget(_) => 69,
            CliError::Io(_) => 74,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Budget(m) | CliError::Io(m) => {
                write!(f, "{m}")
            }
        }
    }
}

fn usage(m: impl Into<String>) -> CliError {
    CliError::Usage(m.into())
}

fn data(m: impl Into<String>) -> CliError {
    CliError::Data(m.into())
}

fn gen_err(e: GenError) -> CliError {
    match e {
        GenError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

pub type CmdResult = Result<i32, CliError>;

fn load(file: &Path) -> Result<(AnyPointSet, Option<Value>), CliError> {
    let bytes = std::fs::read(file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", file.display())))?;
    parse_document_bytes(&bytes).map_err(|e| data(e.to_string()))
}

/// Wall-clock diagnostics go to stderr so that stdout report lines stay
/// byte-identical across runs.
fn note_elapsed(t0: std::time::Instant) {
    eprintln!("elapsed_ms: {}", t0.elapsed().as_millis());
}

fn auto_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        use std::time::{SystemTime, UNIX_EPOCH};
        let nanos = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.subsec_nanos()).unwrap_or(0);
        let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        secs.rotate_left(20) ^ nanos as u64 ^ (std::process::id() as u64) << 40
    })
}

pub fn parse_field_spec(s: &str) -> Result<FieldSpec, CliError> {
    match s {
        "rational" | "q" | "Q" => Ok(FieldSpec::Rational),
        _ => {
            let p: u64 = s
                .parse()
                .map_err(|_| usage(format!("field must be `rational` or a prime, got `{s}`")))?;
            FieldSpec::prime(p).map_err(|e| usage(e.to_string()))
        }
    }
}

pub fn cmd_check(file: &Path, k: usize) -> CmdResult {
    if k < 1 {
        return Err(usage("--k must be at least 1"));
    }
    let t0 = std::time::Instant::now();
    let (points, _) = load(file)?;
    if points.is_empty() {
        return Err(data("the Cayley-Bacharach condition needs a non-empty set"));
    }
    let (holds, witness_json) = with_points!(&points, ps => {
        match is_cb(ps, k).map_err(|e| usage(e.to_string()))? {
            CbOutcome::Holds => (true, Value::Null),
            CbOutcome::Fails(w) => {
                let witness = json!({
                    "index": w.index,
                    "form": Value::Array(w.form.coeffs().iter().map(JsonScalar::scalar_to_json).collect()),
                    "value": w.value.scalar_to_json(),
                });
                (false, witness)
            }
        }
    });
    println!(
        "{}",
        report_line(
            "check",
            vec![
                ("digest", json!(digest(&points))),
                ("field", json!(points.field_spec().to_string())),
                ("k", json!(k)),
                ("points", json!(points.len())),
                ("verdict", json!(holds)),
                ("witness", witness_json),
            ],
        )
    );
    note_elapsed(t0);
    Ok(if holds { 0 } else { 1 })
}

pub fn cmd_level(file: &Path, max_k: Option<usize>) -> CmdResult {
    let t0 = std::time::Instant::now();
    let (points, _) = load(file)?;
    if points.is_empty() {
        return Err(data("the level scan needs a non-empty set"));
    }
    let k_max = max_k.unwrap_or_else(|| default_k_max(points.len()));
    let scan = with_points!(&points, ps => cb_scan(ps, k_max));
    let level = scan.iter().filter(|(_, ok)| *ok).map(|(k, _)| *k).max();
    for (k, ok) in &scan {
        eprintln!("  k={k}: {}", if *ok { "CB" } else { "not CB" });
    }
    // Whether CB(k) implies CB(k-1) is measured, never assumed: any gap in
    // the scan is reported as a finding.
    let monotonicity_findings: Vec<usize> = scan
        .windows(2)
        .filter(|w| w[1].1 && !w[0].1)
        .map(|w| w[1].0)
        .collect();
    println!(
        "{}",
        report_line(
            "level",
            vec![
                ("digest", json!(digest(&points))),
                ("field", json!(points.field_spec().to_string())),
                ("max_k", json!(k_max)),
                ("scan", Value::Array(scan.iter().map(|(k, ok)| json!([k, ok])).collect())),
                ("level", level.map_or(Value::Null, |l| json!(l))),
                (
                    "monotonicity_findings",
                    Value::Array(monotonicity_findings.iter().map(|k| json!(k)).collect()),
                ),
            ],
        )
    );
    note_elapsed(t0);
    Ok(0)
}

pub fn cmd_find_curve(file: &Path, degree: usize) -> CmdResult {
    if !(1..=4).contains(&degree) {
        return Err(usage("--degree must be between 1 and 4"));
    }
    let t0 = std::time::Instant::now();
    let (points, _) = load(file)?;
    if points.is_empty() {
        return Err(data("the curve search needs a non-empty set"));
    }
    let outcome_json = with_points!(&points, ps => {
        let outcome = cb_core::curves::find_curve(ps, degree).map_err(|e| usage(e.to_string()))?;
        outcome_to_json(&outcome)
    });
    println!(
        "{}",
        report_line(
            "find-curve",
            vec![
                ("digest", json!(digest(&points))),
                ("field", json!(points.field_spec().to_string())),
                ("degree", json!(degree)),
                ("points", json!(points.len())),
                ("result", outcome_json),
            ],
        )
    );
    note_elapsed(t0);
    Ok(0)
}

pub struct GenerateArgs {
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

pub enum GenerateKind {
    CiPlane { d: usize, e: usize, p: u64 },
    CiPn { degrees: Vec<usize>, p: u64 },
    Collinear { n: usize, k: usize, field: FieldSpec },
    Rnc { n: usize, s: usize, field: FieldSpec },
    PlaneConfig { n: usize, dims: Vec<usize>, counts: Vec<usize>, field: FieldSpec },
    Random { n: usize, m: usize, field: FieldSpec },
}

fn prime(p: u64) -> Result<PrimeField, CliError> {
    PrimeField::new(p).map_err(|e| usage(e.to_string()))
}

fn run_generator(kind: &GenerateKind, seed: u64) -> Result<(AnyPointSet, Provenance), CliError> {
    fn wrap<K>(gen: Generated<K>, into: impl Fn(cb_core::geometry::PointSet<K>) -> AnyPointSet) -> (AnyPointSet, Provenance)
    where
        K: cb_core::field::Scalar,
    {
        (into(gen.points), gen.provenance)
    }
    Ok(match kind {
        GenerateKind::CiPlane { d, e, p } => {
            wrap(gen_plane_ci(*d, *e, prime(*p)?, seed).map_err(gen_err)?, AnyPointSet::Prime)
        }
        GenerateKind::CiPn { degrees, p } => {
            wrap(gen_ci_pn(degrees, prime(*p)?, seed).map_err(gen_err)?, AnyPointSet::Prime)
        }
        GenerateKind::Collinear { n, k, field } => match field {
            FieldSpec::Rational => wrap(
                gen_collinear::<Rational>(*n, *k, RationalField, seed).map_err(gen_err)?,
                AnyPointSet::Rational,
            ),
            FieldSpec::Prime(p) => wrap(
                gen_collinear::<cb_core::Fp>(*n, *k, prime(*p)?, seed).map_err(gen_err)?,
                AnyPointSet::Prime,
            ),
        },
        GenerateKind::Rnc { n, s, field } => match field {
            FieldSpec::Rational => {
                let (gen, _) =
                    gen_rnc_points::<Rational>(*n, *s, RationalField, seed).map_err(gen_err)?;
                wrap(gen, AnyPointSet::Rational)
            }
            FieldSpec::Prime(p) => {
                let (gen, _) =
                    gen_rnc_points::<cb_core::Fp>(*n, *s, prime(*p)?, seed).map_err(gen_err)?;
                wrap(gen, AnyPointSet::Prime)
            }
        },
        GenerateKind::PlaneConfig { n, dims, counts, field } => match field {
            FieldSpec::Rational => wrap(
                gen_plane_config::<Rational>(*n, dims, counts, RationalField, seed)
                    .map_err(gen_err)?,
                AnyPointSet::Rational,
            ),
            FieldSpec::Prime(p) => wrap(
                gen_plane_config::<cb_core::Fp>(*n, dims, counts, prime(*p)?, seed)
                    .map_err(gen_err)?,
                AnyPointSet::Prime,
            ),
        },
        GenerateKind::Random { n, m, field } => match field {
            FieldSpec::Rational => wrap(
                gen_random::<Rational>(*n, *m, RationalField, seed).map_err(gen_err)?,
                AnyPointSet::Rational,
            ),
            FieldSpec::Prime(p) => wrap(
                gen_random::<cb_core::Fp>(*n, *m, prime(*p)?, seed).map_err(gen_err)?,
                AnyPointSet::Prime,
            ),
        },
    })
}

pub fn cmd_generate(kind: GenerateKind, args: GenerateArgs) -> CmdResult {
    let seed = auto_seed(args.seed);
    let (points, provenance) = run_generator(&kind, seed)?;
    let doc = document(&points, Some(&provenance));
    match provenance.expected_cb_level {
        Some(k) => eprintln!("expected CB level: {k}"),
        None => eprintln!("expected CB level: unknown"),
    }
    match &args.out {
        Some(path) => {
            std::fs::write(path, canonical_bytes(&doc))
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            println!(
                "{}",
                report_line(
                    "generate",
                    vec![
                        ("digest", json!(digest(&points))),
                        ("expected_cb_level", provenance.expected_cb_level.map_or(Value::Null, |k| json!(k))),
                        ("out", json!(path.display().to_string())),
                        ("points", json!(points.len())),
                        ("provenance", provenance_to_json(&provenance)),
                        ("seed", json!(seed)),
                    ],
                )
            );
        }
        None => {
            print!("{}", String::from_utf8(canonical_bytes(&doc)).expect("utf8 json"));
        }
    }
    Ok(0)
}

fn verdict_fields<K: JsonScalar>(report: &AuditReport<K>) -> Vec<(&'static str, Value)> {
    let mut fields: Vec<(&'static str, Value)> = vec![
        ("statement", json!(report.statement.name())),
        ("k", json!(report.k)),
        ("points", json!(report.point_count)),
    ];
    if let Some(p) = &report.provenance {
        fields.push(("provenance", provenance_to_json(p)));
    }
    match &report.verdict {
        AuditVerdict::Pass(w) => {
            fields.push(("verdict", json!("pass")));
            match w {
                PassWitness::CardinalityOk { count, minimum } => {
                    fields.push(("witness", json!({"count": count, "minimum": minimum})));
                }
                PassWitness::Curve(witness) => {
                    fields.push(("witness", witness_to_json(witness)));
                }
            }
        }
        AuditVerdict::ViolationCandidate(v) => {
            fields.push(("verdict", json!("violation-candidate")));
            let instance = document(
                &match_any(&v.gamma),
                None,
            );
            fields.push((
                "violation",
                json!({
                    "detail": v.detail,
                    "h": v.h,
                    "instance": instance,
                    "k": v.k,
                }),
            ));
        }
        AuditVerdict::Undecided(ev) => {
            fields.push(("verdict", json!("undecided")));
            fields.push(("evidence", evidence_to_json(ev)));
        }
        AuditVerdict::NotTriggered { bound } => {
            fields.push(("verdict", json!("not-triggered")));
            fields.push(("bound", json!(bound)));
        }
    }
    fields
}

/// Re-wraps a typed point set into the dynamic document enum. The audit
/// reports are generic over the scalar, so this is resolved per callsite by
/// the `JsonScalar` bound and a runtime field tag.
fn match_any<K: JsonScalar>(gamma: &cb_core::geometry::PointSet<K>) -> AnyPointSet {
    // Serialize through the canonical document to avoid exposing typed
    // internals; the round-trip is exact.
    let spec = K::spec(gamma.field());
    let points: Vec<Value> = gamma
        .points()
        .iter()
        .map(|p| Value::Array(p.coords().iter().map(JsonScalar::scalar_to_json).collect()))
        .collect();
    let field_json = match spec {
        FieldSpec::Rational => json!({"kind": "rational"}),
        FieldSpec::Prime(p) => json!({"kind": "prime", "p": p}),
    };
    let doc = json!({
        "ambient_dim": gamma.ambient_dim(),
        "field": field_json,
        "points": Value::Array(points),
    });
    let (any, _) = docs::parse_document(&doc).expect("canonical document parses");
    any
}

fn emit_audit_reports<K: JsonScalar>(points: &AnyPointSet, reports: &[AuditReport<K>]) -> i32 {
    let mut violations = 0;
    for report in reports {
        let mut fields = vec![("digest", json!(digest(points)))];
        fields.extend(verdict_fields(report));
        println!("{}", report_line("audit", fields));
        if report.is_violation() {
            violations += 1;
        }
    }
    if violations > 0 {
        2
    } else {
        0
    }
}

fn audit_err(e: AuditError) -> CliError {
    match e {
        AuditError::CertificationFailed { .. } => data(e.to_string()),
        AuditError::Gen(g) => gen_err(g),
        other => usage(other.to_string()),
    }
}

pub fn cmd_audit(
    statement: &str,
    file: Option<&Path>,
    generated: Option<&str>,
    k: Option<usize>,
) -> CmdResult {
    let (points, provenance): (AnyPointSet, Option<Provenance>) = match (file, generated) {
        (Some(path), None) => {
            let (points, _) = load(path)?;
            (points, None)
        }
        (None, Some(spec)) => {
            let (kind, seed) = parse_generated_spec(spec)?;
            let seed = auto_seed(seed);
            let (points, provenance) = run_generator(&kind, seed)?;
            (points, Some(provenance))
        }
        _ => return Err(usage("audit needs exactly one of FILE or --generated")),
    };
    if points.is_empty() {
        return Err(data("audits need a non-empty set"));
    }
    let k = match k.or(provenance.as_ref().and_then(|p| p.expected_cb_level)) {
        Some(k) => k,
        None => with_points!(&points, ps => {
            cb_core::cb::cb_level(ps, default_k_max(ps.len()))
                .ok_or_else(|| data("no CB level exists for this set; pass --k explicitly"))?
        }),
    };
    if k < 1 {
        return Err(usage("--k must be at least 1"));
    }
    let t0 = std::time::Instant::now();
    let code = if statement == "all" {
        with_points!(&points, ps => {
            let reports = audit_all(ps, k, provenance.clone()).map_err(audit_err)?;
            emit_audit_reports(&points, &reports)
        })
    } else {
        let id = StatementId::parse(statement)
            .ok_or_else(|| usage(format!("unknown statement `{statement}`")))?;
        with_points!(&points, ps => {
            let report = audit_statement(id, ps, k, provenance.clone()).map_err(audit_err)?;
            emit_audit_reports(&points, std::slice::from_ref(&report))
        })
    };
    note_elapsed(t0);
    Ok(code)
}

/// Compact generator specs for `audit --generated`, e.g.
/// `ci-plane:d=3,e=3,p=11,seed=7` or `plane-config:n=3,dims=1|1,counts=4|4,p=11`.
fn parse_generated_spec(spec: &str) -> Result<(GenerateKind, Option<u64>), CliError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut params = std::collections::BTreeMap::new();
    for chunk in rest.split(',').filter(|c| !c.is_empty()) {
        let (key, value) = chunk
            .split_once('=')
            .ok_or_else(|| usage(format!("bad generator parameter `{chunk}` (want key=value)")))?;
        params.insert(key.trim().to_string(), value.trim().to_string());
    }
    let get_usize = |key: &str| -> Result<usize, CliError> {
        params
            .get(key)
            .ok_or_else(|| usage(format!("generator `{name}` needs `{key}`")))?
            .parse()
            .map_err(|_| usage(format!("`{key}` must be an integer")))
    };
    let get_u64 = |key: &str| -> Result<u64, CliError> {
        params
            .get(key)
            .ok_or_else(|| usage(format!("generator `{name}` needs `{key}`")))?
            .parse()
            .map_err(|_| usage(format!("`{key}` must be an integer")))
    };
    let get_list = |key: &str| -> Result<Vec<usize>, CliError> {
        params
            .get(key)
            .ok_or_else(|| usage(format!("generator `{name}` needs `{key}`")))?
            .split('|')
            .map(|v| v.parse().map_err(|_| usage(format!("`{key}` entries must be integers"))))
            .collect()
    };
    let field = || -> Result<FieldSpec, CliError> {
        if let Some(f) = params.get("field") {
            parse_field_spec(f)
        } else if params.contains_key("p") {
            Ok(FieldSpec::Prime(get_u64("p")?))
        } else {
            Err(usage(format!("generator `{name}` needs `p` or `field`")))
        }
    };
    let seed = match params.get("seed") {
        Some(s) => Some(s.parse().map_err(|_| usage("`seed` must be an integer"))?),
        None => None,
    };
    let kind = match name {
        "ci-plane" => GenerateKind::CiPlane { d: get_usize("d")?, e: get_usize("e")?, p: get_u64("p")? },
        "ci-pn" => GenerateKind::CiPn { degrees: get_list("degrees")?, p: get_u64("p")? },
        "collinear" => GenerateKind::Collinear { n: get_usize("n")?, k: get_usize("k")?, field: field()? },
        "rnc" => GenerateKind::Rnc { n: get_usize("n")?, s: get_usize("s")?, field: field()? },
        "plane-config" => GenerateKind::PlaneConfig {
            n: get_usize("n")?,
            dims: get_list("dims")?,
            counts: get_list("counts")?,
            field: field()?,
        },
        "random" => GenerateKind::Random { n: get_usize("n")?, m: get_usize("m")?, field: field()? },
        other => return Err(usage(format!("unknown generator `{other}`"))),
    };
    Ok((kind, seed))
}

pub fn cmd_fuzz(h: u32, trials: usize, p: u64, seed: Option<u64>) -> CmdResult {
    if !(2..=6).contains(&h) {
        return Err(usage("--h must be between 2 and 6"));
    }
    if trials < 1 {
        return Err(usage("--trials must be at least 1"));
    }
    let field = prime(p)?;
    let seed = auto_seed(seed);
    let t0 = std::time::Instant::now();
    let summary = fuzz_search(h, field, trials, seed).map_err(audit_err)?;
    println!(
        "{}",
        report_line(
            "fuzz",
            vec![
                ("h", json!(h)),
                ("p", json!(p)),
                ("seed", json!(seed)),
                ("trials", json!(trials)),
                ("certified", json!(summary.certified.len())),
                ("triggered", json!(summary.triggered)),
                ("passes", json!(summary.passes)),
                ("violations", json!(summary.violation_count())),
                ("undecided", json!(summary.undecided_count())),
            ],
        )
    );
    for report in &summary.findings {
        let fields = verdict_fields(report);
        println!("{}", report_line("fuzz-finding", fields));
    }
    note_elapsed(t0);
    Ok(if summary.violation_count() > 0 { 2 } else { 0 })
}

pub struct BoundsArgs {
    pub h: Option<u32>,
    pub k: Option<u32>,
    pub d: Option<i64>,
    pub n: Option<i64>,
    pub m: Option<u64>,
    pub pa: Option<u64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub h_max: u32,
    pub variant: String,
}

pub fn cmd_bounds(formula: &str, args: &BoundsArgs) -> CmdResult {
    let need_h = || args.h.ok_or_else(|| usage(format!("formula `{formula}` needs --h")));
    let need_k = || args.k.ok_or_else(|| usage(format!("formula `{formula}` needs --k")));
    let need_d = || args.d.ok_or_else(|| usage(format!("formula `{formula}` needs --d")));
    let need_n = || args.n.ok_or_else(|| usage(format!("formula `{formula}` needs --n")));
    let map = |e: AuditError| usage(e.to_string());
    let mut out = String::new();
    match formula {
        "lp" => {
            let v = bound_lp(need_h()?, need_k()?).map_err(map)?;
            writeln!(out, "{v}").unwrap();
        }
        "su" => {
            let v = su_bound(need_k()?);
            writeln!(out, "{v}").unwrap();
        }
        "castelnuovo-p3" => {
            let d = need_d()?;
            if d < 1 {
                return Err(usage("--d must be at least 1"));
            }
            let v = castelnuovo_p3(d as u32);
            writeln!(out, "{v} (floor {})", castelnuovo_p3_floor(d as u32)).unwrap();
        }
        "castelnuovo-p4" => {
            let d = need_d()?;
            if d < 1 {
                return Err(usage("--d must be at least 1"));
            }
            let v = castelnuovo_p4(d as u32);
            writeln!(out, "{v} (floor {})", castelnuovo_p4_floor(d as u32)).unwrap();
        }
        "cg-obstruction" => {
            let variant = match args.variant.as_str() {
                "corollary" => ObstructionVariant::CorollaryForm,
                "proof" => ObstructionVariant::ProofForm,
                other => return Err(usage(format!("unknown variant `{other}` (corollary|proof)"))),
            };
            let params = ObstructionParams {
                m: args.m.ok_or_else(|| usage("cg-obstruction needs --m"))?,
                p_a: args.pa.ok_or_else(|| usage("cg-obstruction needs --pa"))?,
                d: need_d()? as u64,
                n: need_n()? as u64,
                k: need_k()? as u64,
                variant,
            };
            let v = cg_obstruction(&params).map_err(map)?;
            writeln!(out, "{}", if v { "obstructed: cannot be CB(k)" } else { "not obstructed" })
                .unwrap();
        }
        "correspondences" => {
            let r = correspondence_ranges(need_d()?, need_n()?, args.h_max).map_err(map)?;
            for (s, iv) in &r.intervals {
                writeln!(out, "s={s}: [{}, {}]", iv.lo, iv.hi).unwrap();
            }
            writeln!(out, "guard: m <= {}", r.guard).unwrap();
        }
        "linear-series" => {
            let w = linear_series_interval(need_d()?, need_h()?).map_err(map)?;
            writeln!(out, "[{}, {}]", w.interval.lo, w.interval.hi).unwrap();
            writeln!(out, "guard: n <= {}", w.guard).unwrap();
        }
        "plane-config" => {
            let a = args.a.ok_or_else(|| usage("plane-config needs --a"))?;
            let b = args.b.ok_or_else(|| usage("plane-config needs --b"))?;
            let v = plane_config_bound(a, b, need_n()?).map_err(map)?;
            writeln!(out, "{v}").unwrap();
        }
        "corollary-threshold" => {
            let iv = corollary_threshold(need_n()?).map_err(map)?;
            writeln!(out, "[{}, {}]", iv.lo, iv.hi).unwrap();
        }
        other => return Err(usage(format!("unknown formula `{other}`"))),
    }
    print!("{out}");
    Ok(0)
}
