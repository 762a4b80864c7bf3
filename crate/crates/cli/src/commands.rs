//! One function per subcommand. Each returns a serialisable document; the
//! binary decides where it goes and which exit status it implies.

use std::collections::BTreeMap;
use std::time::Instant;

use emptyconv::geom::Point3;
use emptyconv::nets::{discrepancy, net_theorem_check, verify_weak_eps_net, ColoredPoints, NetInstance};
use emptyconv::rational::{format_rational, Rational};
use emptyconv::reduction::{
    build_reduction, check_convexity, check_corollary_exhaustive, check_encoding_lemma_exhaustive,
    check_encoding_lemma_sampled, convex_set_to_independent_set, generate_lattice_instance, is_independent,
    verify_witness_plane, DiskInstance, ReductionOutput,
};
use emptyconv::solvers::{
    approx_convex_subset_3d, decide_es, decide_lecs, largest_convex_subset, largest_empty_convex_subset,
    max_independent_set, TangencyGraph,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::formats::{point_strings, Input};

pub fn cmd_gen(seed: u64, n: usize, density: &Rational) -> Result<DiskInstance> {
    generate_lattice_instance(seed, n, density).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn cmd_reduce(d: &DiskInstance) -> Result<ReductionOutput> {
    Ok(build_reduction(d)?)
}

fn reduction_of(input: &Input) -> Result<ReductionOutput> {
    match input {
        Input::Instance(d) => Ok(build_reduction(d)?),
        Input::Points(r) => Ok(r.clone()),
    }
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Es,
    Lecs,
    Mis,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub problem: Problem,
    pub size: usize,
    /// Points for `es`/`lecs`; 1-based disk indices for `mis`.
    pub witness: serde_json::Value,
    pub explored: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

pub fn cmd_solve(input: &Input, problem: Problem, k: Option<usize>, timings: bool) -> Result<SolveReport> {
    let start = Instant::now();
    let (size, witness, explored, decision) = match (problem, input) {
        (Problem::Mis, Input::Instance(d)) => {
            let r = max_independent_set(&TangencyGraph::from_instance(d)?);
            let one_based: Vec<usize> = r.witness.iter().map(|i| i + 1).collect();
            (r.size, serde_json::json!(one_based), r.explored, k.map(|k| r.size >= k))
        }
        (Problem::Es | Problem::Lecs, Input::Points(r)) => {
            let pts = r.points();
            let result = if problem == Problem::Es {
                largest_convex_subset(&pts)?
            } else {
                largest_empty_convex_subset(&pts)?
            };
            let decision = match k {
                None => None,
                Some(k) if problem == Problem::Es => Some(decide_es(&pts, k)?),
                Some(k) => Some(decide_lecs(&pts, k)?),
            };
            let witness: Vec<[String; 3]> = result.witness.iter().map(|&i| point_strings(&pts[i])).collect();
            (result.size, serde_json::json!(witness), result.explored, decision)
        }
        (Problem::Mis, _) => return Err(CliError::Usage("problem mis needs an instance file".into())),
        _ => return Err(CliError::Usage("problems es and lecs need a points file".into())),
    };
    Ok(SolveReport {
        problem,
        size,
        witness,
        explored,
        k,
        decision,
        wall_time_ms: timings.then(|| millis(start)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl From<bool> for Status {
    fn from(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Lemmas,
    Main,
    Nets,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetCheckEntry {
    pub m: usize,
    pub is_net: bool,
    pub mis_size: usize,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub instance_hash: String,
    pub input_kind: String,
    pub mode: Mode,
    #[serde(rename = "L")]
    pub lifted: usize,
    #[serde(rename = "B")]
    pub blockers: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mis_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub es_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lecs_size: Option<usize>,
    pub lemma_checks: BTreeMap<String, Status>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub net_checks: Vec<NetCheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_times_ms: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lemma_checks.values().all(|s| *s != Status::Fail)
            && self.net_checks.iter().all(|c| c.status != Status::Fail)
    }
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub mode: Mode,
    pub cap: usize,
    /// Sample this many subsets for the encoding check when over the cap.
    pub sample: Option<u64>,
    pub seed: u64,
    pub timings: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            mode: Mode::All,
            cap: 18,
            sample: None,
            seed: 0,
            timings: true,
        }
    }
}

/// Runs the checker battery selected by `opts.mode`.
pub fn cmd_check(input: &Input, opts: &CheckOptions) -> Result<Report> {
    let r = reduction_of(input)?;
    let total = r.point_count();
    let over_cap = total > opts.cap;
    if over_cap && opts.sample.is_none() {
        return Err(CliError::CapExceeded {
            points: total,
            cap: opts.cap,
        });
    }
    let d = match input {
        Input::Instance(d) => d.clone(),
        Input::Points(r) => DiskInstance::new(r.centers()),
    };
    let mut checks = BTreeMap::new();
    let mut times = BTreeMap::new();
    let mut report = Report {
        instance_hash: input.hash(),
        input_kind: input.kind().to_string(),
        mode: opts.mode,
        lifted: r.disk_count(),
        blockers: r.blockers().len(),
        mis_size: None,
        es_size: None,
        lecs_size: None,
        lemma_checks: BTreeMap::new(),
        net_checks: Vec::new(),
        discrepancy: None,
        wall_times_ms: None,
    };
    let valid = d.validate().is_ok();
    if matches!(input, Input::Points(_)) {
        let rebuilt = valid && build_reduction(&d).is_ok_and(|b| b == r);
        checks.insert("reduction_consistent".to_string(), Status::from(rebuilt));
    }
    let wants = |m: Mode| opts.mode == Mode::All || opts.mode == m;

    if wants(Mode::Lemmas) {
        let start = Instant::now();
        let encoding = match opts.sample {
            Some(count) if over_cap => check_encoding_lemma_sampled(&r, count, opts.seed)?,
            _ => check_encoding_lemma_exhaustive(&r)?,
        };
        checks.insert("encoding".into(), Status::from(encoding.passed()));
        times.insert("encoding".into(), millis(start));

        let start = Instant::now();
        let planes = r.pairs().into_iter().all(|p| verify_witness_plane(&r, p));
        checks.insert("witness_planes".into(), Status::from(planes));
        times.insert("witness_planes".into(), millis(start));

        let start = Instant::now();
        checks.insert("convexity".into(), Status::from(check_convexity(&r)?.passed()));
        times.insert("convexity".into(), millis(start));

        let start = Instant::now();
        let corollary = if over_cap {
            Status::Skipped
        } else {
            Status::from(check_corollary_exhaustive(&r)? == 0)
        };
        checks.insert("corollary".into(), corollary);
        times.insert("corollary".into(), millis(start));
    }

    if wants(Mode::Main) || wants(Mode::Nets) {
        if !valid {
            return Err(CliError::Validation(format!(
                "recovered centres are not a valid instance: {}",
                d.validate().unwrap_err()
            )));
        }
        let start = Instant::now();
        report.mis_size = Some(max_independent_set(&TangencyGraph::from_instance(&d)?).size);
        times.insert("mis".into(), millis(start));
    }

    if wants(Mode::Main) {
        let mis = report.mis_size.expect("computed above");
        let pts = r.points();
        let b = r.blockers().len();

        let start = Instant::now();
        let es = largest_convex_subset(&pts)?;
        times.insert("es".into(), millis(start));
        let start = Instant::now();
        let lecs = largest_empty_convex_subset(&pts)?;
        times.insert("lecs".into(), millis(start));
        report.es_size = Some(es.size);
        report.lecs_size = Some(lecs.size);
        checks.insert("main_lemma".into(), Status::from(lecs.size == mis + b));
        checks.insert("convex_lemma".into(), Status::from(es.size == mis + b));

        let start = Instant::now();
        let swap = match es.size.checked_sub(b) {
            Some(m) if m > 0 => match convex_set_to_independent_set(&r, &es.witness, m) {
                Ok(out) => Status::from(out.independent.len() == m && is_independent(d.centers(), &out.independent)),
                Err(_) => Status::Fail,
            },
            Some(_) => Status::Skipped,
            None => Status::Fail,
        };
        checks.insert("swap".into(), swap);
        times.insert("swap".into(), millis(start));
    }

    if wants(Mode::Nets) {
        let mis = report.mis_size.expect("computed above");
        let start = Instant::now();
        for m in 1..=d.len() {
            let c = net_theorem_check(&d, m)?;
            report.net_checks.push(NetCheckEntry {
                m,
                is_net: c.is_net,
                mis_size: c.mis_size,
                status: Status::from(c.holds()),
            });
        }
        times.insert("nets".into(), millis(start));

        let start = Instant::now();
        let colored = ColoredPoints::new(r.lifted().to_vec(), r.blocker_points())?;
        let disc = discrepancy(&colored)?;
        report.discrepancy = Some(disc.value);
        checks.insert("discrepancy_bound".into(), Status::from(disc.value >= mis));
        times.insert("discrepancy".into(), millis(start));
    }

    report.lemma_checks = checks;
    if opts.timings {
        report.wall_times_ms = Some(times);
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetReport {
    pub epsilon: String,
    pub ground_size: usize,
    pub net_size: usize,
    pub is_net: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Vec<[String; 3]>>,
}

/// Is `B` a weak ε-net for `L`?
pub fn cmd_net(input: &Input, eps: &Rational) -> Result<NetReport> {
    let r = reduction_of(input)?;
    let instance = NetInstance::new(r.lifted().to_vec(), r.blocker_points(), eps.clone())
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let verdict = verify_weak_eps_net(&instance)?;
    Ok(NetReport {
        epsilon: format_rational(eps),
        ground_size: r.disk_count(),
        net_size: r.blockers().len(),
        is_net: verdict.is_net,
        violation: verdict
            .violation
            .map(|t| t.iter().map(|&i| point_strings(&r.lifted()[i])).collect()),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub value: usize,
    pub red: Vec<[String; 3]>,
    pub blue: Vec<[String; 3]>,
    pub explored: u64,
}

/// Discrepancy with `L` red and `B` blue.
pub fn cmd_discrepancy(input: &Input) -> Result<DiscrepancyReport> {
    let r = reduction_of(input)?;
    let colored = ColoredPoints::new(r.lifted().to_vec(), r.blocker_points())?;
    let d = discrepancy(&colored)?;
    let n = r.disk_count();
    let pts = colored.points();
    Ok(DiscrepancyReport {
        value: d.value,
        red: d
            .witness
            .iter()
            .filter(|&&i| i < n)
            .map(|&i| point_strings(&pts[i]))
            .collect(),
        blue: d
            .witness
            .iter()
            .filter(|&&i| i >= n)
            .map(|&i| point_strings(&pts[i]))
            .collect(),
        explored: d.explored,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ApproxReport {
    pub direction: [String; 3],
    pub size: usize,
    pub witness: Vec<[String; 3]>,
}

/// Axis directions first, then `(1, t, t²)` for `t = 1, 2, …`. A fixed
/// difference vector is parallel to at most one moment-curve direction, so
/// a collision-free direction turns up within `pairs + 4` attempts.
pub fn candidate_directions(count: usize) -> impl Iterator<Item = Point3> {
    [
        Point3::from_ints(0, 0, 1),
        Point3::from_ints(0, 1, 0),
        Point3::from_ints(1, 0, 0),
    ]
    .into_iter()
    .chain((1i64..).map(|t| Point3::from_ints(1, t, t * t)))
    .take(count)
}

pub fn cmd_approx(input: &Input) -> Result<ApproxReport> {
    let r = reduction_of(input)?;
    let pts = r.points();
    let attempts = pts.len() * pts.len() / 2 + 4;
    for dir in candidate_directions(attempts) {
        match approx_convex_subset_3d(&pts, &dir) {
            Ok(res) => {
                return Ok(ApproxReport {
                    direction: point_strings(&dir),
                    size: res.size,
                    witness: res.witness.iter().map(|&i| point_strings(&pts[i])).collect(),
                })
            }
            Err(emptyconv::Error::ProjectionCollision(..)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(CliError::Validation(
        "no collision-free projection direction found".into(),
    ))
}
