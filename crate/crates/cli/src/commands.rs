//! One function per subcommand; each returns a [`RunReport`].

use std::fs;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

use ellone::complex::OrientedComplex;
use ellone::covering::{average_primitive, cone_theta, integrate_degree1, LineBruhat, LineCover};
use ellone::groupcoh::{group_cohomology, Caps};
use ellone::homology::{betti_numbers, coboundary_primitive, cohomology_rank, homology_rank};
use ellone::io;
use ellone::rational::{format_rational, Rational};
use ellone::seminorm::{duality_check_with, l1_seminorm_with, linf_seminorm_with, DualityStatus, PivotRule};
use ellone::simplicial::subdivision::predicted_counts;
use ellone::simplicial::{ConeDatum, SubdividedComplex};
use ellone::{Chain, Cochain, Error};

use crate::report::{Decisions, InputDigest, RunReport};
use crate::CliError;

pub const SEMINORM_LABEL: &str = "simplicial-model seminorm";

/// Reads a file and records its digest.
pub struct Inputs(Vec<InputDigest>);

impl Inputs {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    pub fn read(&mut self, role: &str, path: &Path) -> Result<String, CliError> {
        let bytes = fs::read(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        self.0.push(InputDigest::new(role, path, &bytes));
        String::from_utf8(bytes).map_err(|e| Error::Parse(format!("{}: {e}", path.display())).into())
    }

    fn into_vec(self) -> Vec<InputDigest> {
        self.0
    }
}

fn with_path<T>(path: &Path, r: ellone::Result<T>) -> Result<T, CliError> {
    r.map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())).into(),
        other => other.into(),
    })
}

fn q(v: &Rational) -> Value {
    Value::String(format_rational(v))
}

fn dims(k: &OrientedComplex) -> Vec<usize> {
    (0..=k.dim()).map(|d| k.count(d)).collect()
}

fn load_complex(inputs: &mut Inputs, path: &Path) -> Result<OrientedComplex, CliError> {
    let text = inputs.read("complex", path)?;
    with_path(path, io::parse_complex(&text))
}

pub fn homology(path: &Path, degree: Option<usize>) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let k = load_complex(&mut inputs, path)?;
    let mut results = json!({
        "simplex_counts": dims(&k),
        "euler_characteristic": k.euler_characteristic(),
        "index_assignment": io::index_assignment(&k),
    });
    match degree {
        Some(n) => {
            let (h, c) = if n <= k.dim() { (homology_rank(&k, n), cohomology_rank(&k, n)) } else { (0, 0) };
            results["degree"] = json!(n);
            results["homology_rank"] = json!(h);
            results["cohomology_rank"] = json!(c);
        }
        None => results["betti"] = json!(betti_numbers(&k)),
    }
    Ok(RunReport::new("homology", inputs.into_vec(), Decisions::default(), results))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    L1,
    Linf,
    Duality,
}

pub fn seminorm(
    complex: &Path,
    input: &Path,
    mode: Mode,
    certificate: Option<&Path>,
    rule: PivotRule,
) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let k = load_complex(&mut inputs, complex)?;
    let decisions = Decisions { pivot_rule: Some(rule.to_string()), ..Default::default() };
    let (command, results, certs) = match mode {
        Mode::L1 => {
            let text = inputs.read("cycle", input)?;
            let z: Chain = with_path(input, io::parse_chain(&text))?;
            let s = l1_seminorm_with(&k, &z, rule)?;
            let cert = s.certificate.to_json();
            let results = json!({
                "label": SEMINORM_LABEL,
                "norm": "l1",
                "degree": z.degree(),
                "value": q(&s.value),
                "representative": io::chain_json(&s.representative),
            });
            ("seminorm", results, json!({ "primal": cert }))
        }
        Mode::Linf => {
            let text = inputs.read("cocycle", input)?;
            let f: Cochain = with_path(input, io::parse_cochain(&text))?;
            let s = linf_seminorm_with(&k, &f, rule)?;
            let results = json!({
                "label": SEMINORM_LABEL,
                "norm": "linf",
                "degree": f.degree(),
                "value": q(&s.value),
                "representative": io::cochain_json(&s.representative),
            });
            ("seminorm", results, json!({ "primal": s.certificate.to_json() }))
        }
        Mode::Duality => {
            let text = inputs.read("cycle", input)?;
            let z: Chain = with_path(input, io::parse_chain(&text))?;
            let r = duality_check_with(&k, &z, rule)?;
            let degenerate = r.status == DualityStatus::Degenerate;
            let results = json!({
                "label": SEMINORM_LABEL,
                "status": r.status,
                "degenerate": degenerate,
                "degree": z.degree(),
                "l1": q(&r.l1.value),
                "linf_dual": r.linf.as_ref().map(q),
                "reciprocal": r.dual_value().as_ref().map(q),
                "primal_equals_dual": !degenerate,
                "cocycle": r.cocycle.as_ref().map(io::cochain_json),
            });
            let certs = json!({ "primal": r.l1.certificate.to_json(), "dual": r.dual_certificate.to_json() });
            ("duality", results, certs)
        }
    };
    let mut results = results;
    if let Some(path) = certificate {
        let text = serde_json::to_string_pretty(&certs).expect("certificates serialize");
        fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        results["certificate_file"] = json!(path.display().to_string());
    } else {
        results["certificates"] = certs;
    }
    Ok(RunReport::new(command, inputs.into_vec(), decisions, results))
}

pub fn bench_subdivide(path: &Path, rounds: usize, cap: usize, provenance: bool) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let k = load_complex(&mut inputs, path)?;
    if rounds > cap {
        return Err(Error::CapExceeded(format!("{rounds} subdivision rounds requested, cap is {cap}")).into());
    }
    let mut counts = vec![dims(&k)];
    let mut seconds = Vec::with_capacity(rounds);
    let mut reports = Vec::new();
    let mut current = k;
    for round in 1..=rounds {
        let predicted = predicted_counts(counts.last().expect("nonempty"));
        let start = Instant::now();
        let sub = SubdividedComplex::new(&current);
        seconds.push(start.elapsed().as_secs_f64());
        if provenance {
            reports.push(sub.report());
        }
        let next = sub.complex().clone();
        let got = dims(&next);
        if got != predicted {
            return Err(Error::Invariant(format!("round {round}: counts {got:?}, formula gives {predicted:?}")).into());
        }
        counts.push(got);
        current = next;
    }
    // vertex tuples plus one index-map entry per simplex
    let word = std::mem::size_of::<usize>();
    let bytes: usize = counts
        .last()
        .expect("nonempty")
        .iter()
        .enumerate()
        .map(|(d, &c)| c * (2 * (d + 1) * word + 3 * word))
        .sum();
    let mut results = json!({
        "rounds": rounds,
        "counts": counts,
        "top_simplices": counts.iter().map(|c| c.last().copied().unwrap_or(0)).collect::<Vec<_>>(),
        "counts_match_formula": true,
        "estimated_peak_bytes": bytes,
    });
    if provenance {
        results["provenance"] = serde_json::to_value(&reports).expect("serializes");
    }
    let mut report = RunReport::new("bench-subdivide", inputs.into_vec(), Decisions::default(), results);
    for (i, s) in seconds.iter().enumerate() {
        report.time(&format!("round_{}_seconds", i + 1), *s);
    }
    Ok(report)
}

/// `xi` of every simplex for a cover given in the cover file format.
pub fn cover(complex: &Path, cover: &Path) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let k = load_complex(&mut inputs, complex)?;
    let text = inputs.read("cover", cover)?;
    let cover = with_path(cover, io::parse_cover(&k, &text))?;
    let table = cover.xi_table(&k)?;
    let xi: Vec<Vec<usize>> =
        (0..=k.dim()).map(|d| (0..k.count(d)).map(|i| table[&(d, i)]).collect()).collect();
    let small: Vec<Vec<usize>> = xi.iter().map(|l| l.iter().enumerate().filter(|(_, &n)| n == 0).map(|(i, _)| i).collect()).collect();
    let results = json!({
        "sets": cover.names(),
        "xi": xi,
        "small": small,
        "max_xi": xi.iter().flatten().max().copied().unwrap_or(0),
    });
    Ok(RunReport::new("cover", inputs.into_vec(), Decisions::default(), results))
}

pub fn groupcoh(path: &Path, degree: usize, caps: Caps) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let text = inputs.read("group", path)?;
    let group = with_path(path, io::parse_group_capped(&text, caps.order))?;
    let h = group_cohomology(&group, degree, caps)?;
    let decisions = Decisions {
        pivot_rule: Some(PivotRule::Bland.to_string()),
        homotopy: Some("bar: k(f)(g_1..g_n) = f(e, g_1..g_n)".into()),
        bruhat: None,
    };
    let results = json!({
        "order": h.order,
        "degree": h.degree,
        "rank_homogeneous": h.rank_homogeneous,
        "rank_normalized": h.rank_normalized,
        "pipelines_agree": h.pipelines_agree(),
        "classes": h.classes,
    });
    Ok(RunReport::new("groupcoh", inputs.into_vec(), decisions, results))
}

pub fn transfer(datum: &Path, cochain: &Path) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let text = inputs.read("isometry_datum", datum)?;
    let d = with_path(datum, io::parse_isometry_datum(&text))?;
    let text = inputs.read("cochain", cochain)?;
    let f = with_path(cochain, io::parse_cochain(&text))?;
    let t = d.transfer(&f)?;
    let mut results = json!({
        "group_order": d.group().order(),
        "subgroup_order": d.subgroup().len(),
        "transfer": io::cochain_json(&t),
        "input_norm": q(&f.linf_norm()),
        "transfer_norm": q(&t.linf_norm()),
        "g_invariant": d.is_g_invariant(&t),
    });
    let k = d.complex();
    let is_cocycle = f.degree() >= k.dim() || k.coboundary(&f)?.is_zero();
    if d.is_g_invariant(&f) && is_cocycle {
        results["restriction_isometry"] = serde_json::to_value(d.res_isometry_check(&f)?).expect("serializes");
    }
    let decisions = Decisions {
        pivot_rule: Some(PivotRule::Bland.to_string()),
        homotopy: None,
        bruhat: Some("uniform average over right coset representatives".into()),
    };
    Ok(RunReport::new("transfer", inputs.into_vec(), decisions, results))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Bruhat {
    Hat,
    Indicator,
}

pub fn theta(
    cochain: &Path,
    edges: Option<usize>,
    cone: Option<(&Path, usize)>,
    bruhat: Bruhat,
) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let (base, theta, decisions) = match (edges, cone) {
        (Some(k), None) => {
            let text = inputs.read("cochain", cochain)?;
            let f = with_path(cochain, io::parse_cochain(&text))?;
            let choice = match bruhat {
                Bruhat::Hat => LineBruhat::Hat,
                Bruhat::Indicator => LineBruhat::Indicator,
            };
            let line = LineCover::new(k, choice);
            let t = line.theta(&f)?;
            let decisions = Decisions {
                pivot_rule: None,
                homotopy: Some("edge path from 0 on the integer line".into()),
                bruhat: Some(format!("{bruhat:?}").to_lowercase()),
            };
            (line.base().clone(), (f, t), decisions)
        }
        (None, Some((path, apex))) => {
            let k = load_complex(&mut inputs, path)?;
            let text = inputs.read("cochain", cochain)?;
            let f = with_path(cochain, io::parse_cochain(&text))?;
            let cone = ConeDatum::new(k, apex)?;
            let t = cone_theta(&cone, &f)?;
            let decisions = Decisions {
                pivot_rule: None,
                homotopy: Some(format!("cone from vertex {apex}")),
                bruhat: Some("constant 1 (trivial group)".into()),
            };
            (cone.complex().clone(), (f, t), decisions)
        }
        _ => return Err(Error::Precondition("give exactly one of --edges and --cone".into()).into()),
    };
    let (f, t) = theta;
    let difference = &t - &f;
    let primitive = if f.degree() == 0 { None } else { coboundary_primitive(&base, &difference)? };
    let results = json!({
        "degree": f.degree(),
        "theta": io::cochain_json(&t),
        "input_norm": q(&f.linf_norm()),
        "theta_norm": q(&t.linf_norm()),
        "cohomologous": f.degree() > 0 && primitive.is_some() || f.degree() == 0 && difference.is_zero(),
        "primitive": primitive.as_ref().map(io::cochain_json),
    });
    Ok(RunReport::new("theta", inputs.into_vec(), decisions, results))
}

pub fn integrate1(complex: Option<&Path>, covering: Option<&Path>, cochain: &Path) -> Result<RunReport, CliError> {
    let mut inputs = Inputs::new();
    let (k, cov) = match (complex, covering) {
        (Some(path), None) => (load_complex(&mut inputs, path)?, None),
        (None, Some(path)) => {
            let text = inputs.read("covering", path)?;
            let cov = with_path(path, io::parse_covering(&text))?;
            (cov.total().clone(), Some(cov))
        }
        _ => return Err(Error::Precondition("give exactly one of --complex and --covering".into()).into()),
    };
    let text = inputs.read("cochain", cochain)?;
    let f = with_path(cochain, io::parse_cochain(&text))?;
    let integration = integrate_degree1(&k, &f)?;
    let mut results = json!({
        "primitive": io::cochain_json(&integration.primitive),
        "base_vertex": integration.base,
        "tree_depth": integration.depth,
        "primitive_norm": q(&integration.norm),
        "input_norm": q(&f.linf_norm()),
    });
    let mut decisions = Decisions {
        pivot_rule: None,
        homotopy: Some("breadth-first spanning tree from vertex 0".into()),
        bruhat: None,
    };
    if let Some(cov) = cov {
        let split = average_primitive(&cov, &f, &integration.primitive)?;
        results["averaged"] = io::cochain_json(&split.averaged);
        results["invariant_part"] = io::cochain_json(&split.invariant_part);
        results["invariant"] = json!(cov.is_invariant(&split.invariant_part));
        decisions.bruhat = Some("indicator of the fundamental domain".into());
    }
    Ok(RunReport::new("integrate1", inputs.into_vec(), decisions, results))
}
