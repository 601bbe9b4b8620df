//! Command dispatch for the `hecke` binary. Every command produces a JSON value
//! and a TSV table; `main` prints whichever was requested.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};

use hecke_core::alcove::{count_fundamental_paths, in_fundamental_alcove, length};
use hecke_core::bgg::{
    block_poset, build_klr_module, euler_check, graded_character_identity, sign_assignment, verify_klr_relations,
    GRADED_SHIFT,
};
use hecke_core::cali::{is_cali, is_flotw};
use hecke_core::crystal::reachable;
use hecke_core::level1::{column_reading_tableau, format_rational, tableau_weight, unitary_locus};
use hecke_core::multipartition::{count_standard_tableaux, is_s_admissible};
use hecke_core::seminormal::{
    cyclotomic_membership, form_values, is_hermitian_invariant, seminormal_module, verify_hecke_relations,
    weight_class,
};
use hecke_core::sweeps::{self, Bounds};
use hecke_core::{Charge, Error, Multipartition};

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Reports on calibrated Hecke modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub job: JobSpec,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// One row per crystal-reachable multipartition of size `--n`
    Classify,
    /// Seminormal module of a weight class
    Seminormal,
    /// Block poset, signs, characters and the KLR action for `--multipartition`
    Bgg,
    /// Level-one unitary locus of `--partition`
    Locus,
    /// Run a verification suite; exit status 1 on any failure
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Args, Debug, Clone, Default)]
pub struct JobSpec {
    #[arg(long, global = true)]
    pub e: Option<i64>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub a: Option<i64>,
    /// Comma-separated, e.g. `0,1,4`
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub charge: Option<String>,
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Comma-separated parts, e.g. `3,2,2`
    #[arg(long, global = true)]
    pub partition: Option<String>,
    /// JSON array of arrays, e.g. `[[2,2],[2],[3,2]]`
    #[arg(long, global = true)]
    pub multipartition: Option<String>,
    /// Comma-separated height bound for the alcove geometry
    #[arg(long, global = true)]
    pub hbar: Option<String>,
    /// Comma-separated weight exponents
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub weight: Option<String>,
    /// Locus query point `p/q`
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

/// A failure with a machine-readable code and an exit status.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliError {
    pub code: String,
    pub message: String,
    #[serde(skip)]
    pub exit: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: "USAGE".into(), message: message.into(), exit: 2 }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError { code: e.code().into(), message: e.to_string(), exit: 2 }
    }
}

pub struct Output {
    pub json: Value,
    pub tsv: Vec<Vec<String>>,
    /// Exit status on success; 1 when a verification failed.
    pub exit: u8,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
            Format::Tsv => self.tsv.iter().map(|r| r.join("\t")).collect::<Vec<_>>().join("\n"),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn list<T: std::str::FromStr>(name: &str, s: &str) -> CliResult<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::usage(format!("--{name}: cannot parse {x:?}"))))
        .collect()
}

fn required<'a, T>(v: &'a Option<T>, name: &str) -> CliResult<&'a T> {
    v.as_ref().ok_or_else(|| CliError::usage(format!("--{name} is required")))
}

impl JobSpec {
    fn e(&self) -> CliResult<i64> {
        let e = *required(&self.e, "e")?;
        if e < 2 {
            return Err(Error::InvalidParameter(format!("e = {e} must be at least 2")).into());
        }
        Ok(e)
    }

    fn a(&self, e: i64) -> CliResult<i64> {
        let a = self.a.unwrap_or(1);
        if a.gcd(&e) != 1 {
            return Err(Error::InvalidParameter(format!("gcd({a}, {e}) != 1")).into());
        }
        Ok(a)
    }

    fn charge(&self) -> CliResult<Charge> {
        let s = list("charge", required(&self.charge, "charge")?)?;
        let ch = Charge::new(s, self.e()?)?;
        ch.require_cylindrical()?;
        Ok(ch)
    }

    fn partition(&self) -> CliResult<Vec<usize>> {
        list("partition", required(&self.partition, "partition")?)
    }

    fn multipartition(&self) -> CliResult<Multipartition> {
        let raw = required(&self.multipartition, "multipartition")?;
        let comps: Vec<Vec<usize>> =
            serde_json::from_str(raw).map_err(|e| CliError::usage(format!("--multipartition: {e}")))?;
        Ok(Multipartition::new(comps)?)
    }

    fn hbar(&self) -> CliResult<Option<Vec<usize>>> {
        self.hbar.as_deref().map(|s| list("hbar", s)).transpose()
    }
}

fn parse_rational(s: &str) -> CliResult<Rational64> {
    s.trim().parse().map_err(|_| CliError::usage(format!("--c: cannot parse {s:?} as p/q")))
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), |x| x.to_string())
}

pub fn execute(cli: &Cli) -> CliResult<Output> {
    let job = &cli.job;
    match &cli.command {
        Command::Classify => classify(job),
        Command::Seminormal => seminormal(job),
        Command::Bgg => bgg(job),
        Command::Locus => locus(job),
        Command::Verify { suite } => verify(job, suite),
    }
}

fn classify(job: &JobSpec) -> CliResult<Output> {
    let ch = job.charge()?;
    let n = *required(&job.n, "n")?;
    let fixed = job.hbar()?;
    if let Some(h) = &fixed {
        hecke_core::alcove::check_setup(&ch, h)?;
    }
    let mut mps = reachable(n, &ch);
    mps.sort();
    let mut rows = Vec::new();
    let mut tsv = vec![["multipartition", "flotw", "cali", "alcove_length", "std", "fundamental_paths"]
        .map(String::from)
        .to_vec()];
    for mp in mps {
        let hbar = fixed.clone().unwrap_or_else(|| mp.heights());
        let geometric = mp.fits(&hbar) && is_s_admissible(&hbar, &ch);
        // points on a wall have no length; paths are counted in F only
        let len = if geometric { length(&mp, &ch, &hbar).ok() } else { None };
        let paths = match len {
            Some(0) => Some(count_fundamental_paths(&mp, &ch, &hbar)?),
            _ => None,
        };
        let (flotw, cali) = (is_flotw(&mp, &ch), is_cali(&mp, &ch)?);
        let std = count_standard_tableaux(&mp);
        tsv.push(vec![
            mp.to_string(),
            flotw.to_string(),
            cali.to_string(),
            opt(&len),
            std.to_string(),
            opt(&paths),
        ]);
        rows.push(json!({
            "multipartition": mp,
            "hbar": hbar,
            "flotw": flotw,
            "cali": cali,
            "alcove_length": len,
            "std": std.to_string(),
            "fundamental_paths": paths,
        }));
    }
    let json = json!({ "charge": ch.s, "e": ch.e, "n": n, "rows": rows });
    Ok(Output { json, tsv, exit: 0 })
}

fn seminormal(job: &JobSpec) -> CliResult<Output> {
    let e = job.e()?;
    let a = job.a(e)?;
    let weight = match (&job.weight, &job.partition) {
        (Some(w), None) => list("weight", w)?,
        (None, Some(_)) => tableau_weight(&column_reading_tableau(&job.partition()?)?),
        _ => return Err(CliError::usage("exactly one of --weight and --partition is required")),
    };
    let class = weight_class(&weight, e)?;
    let module = seminormal_module(&class, e, a)?;
    let relations = verify_hecke_relations(&module);
    let form = form_values(&module)?;
    let hermitian = is_hermitian_invariant(&module, &form.values);
    let unitary = form.signs.iter().all(|&s| s == 1);
    let membership = match &job.charge {
        Some(s) => Some(cyclotomic_membership(&module, &Charge::new(list("charge", s)?, e)?)),
        None => None,
    };
    let mut tsv = vec![vec!["weight".to_string(), "sign".to_string()]];
    for (w, s) in class.iter().zip(&form.signs) {
        tsv.push(vec![format!("{w:?}"), s.to_string()]);
    }
    let json = json!({
        "e": e,
        "a": a,
        "weight": weight,
        "class": class,
        "dim": module.dim(),
        "relations": relations.checks.iter().map(|(k, v)| json!({"relation": k, "holds": v})).collect::<Vec<_>>(),
        "relations_hold": relations.all_pass(),
        "hermitian": hermitian,
        "signs": form.signs,
        "unitary": unitary,
        "cyclotomic_membership": membership,
    });
    Ok(Output { json, tsv, exit: 0 })
}

fn bgg(job: &JobSpec) -> CliResult<Output> {
    let ch = job.charge()?;
    let la = job.multipartition()?;
    let hbar = job.hbar()?.unwrap_or_else(|| la.heights());
    hecke_core::alcove::check_setup(&ch, &hbar)?;
    if !in_fundamental_alcove(&la, &ch, &hbar)? {
        return Err(Error::NotInAlcove.into());
    }
    let poset = block_poset(&la, &ch, &hbar)?;
    let signs = sign_assignment(&poset)?;
    let euler = euler_check(&poset)?;
    let graded = graded_character_identity(&poset, GRADED_SHIFT)?;
    let klr = if ch.e > 2 { Some(verify_klr_relations(&build_klr_module(&la, &ch, &hbar)?).all_pass()) } else { None };
    let mut tsv = vec![["multipartition", "length", "std"].map(String::from).to_vec()];
    for node in &poset.nodes {
        tsv.push(vec![node.mp.to_string(), node.length.to_string(), count_standard_tableaux(&node.mp).to_string()]);
    }
    let edges: Vec<Value> = poset
        .edges
        .iter()
        .zip(&signs.signs)
        .map(|(&(u, l), s)| json!({"upper": u, "lower": l, "sign": s}))
        .collect();
    let json = json!({
        "lambda": la,
        "charge": ch.s,
        "e": ch.e,
        "hbar": hbar,
        "nodes": poset.nodes,
        "edges": edges,
        "diamonds": poset.diamonds.len(),
        "strands": poset.strands.len(),
        "sign_kernel_dim": signs.kernel_dim,
        "euler": euler,
        "graded_shift": GRADED_SHIFT,
        "graded_identity": graded,
        "klr_relations": klr,
    });
    Ok(Output { json, tsv, exit: 0 })
}

fn locus(job: &JobSpec) -> CliResult<Output> {
    let la = job.partition()?;
    let u = unitary_locus(&la)?;
    let mut json = serde_json::to_value(&u).expect("serializable");
    json["partition"] = json!(la);
    let mut tsv = vec![vec!["kind".to_string(), "value".to_string()]];
    let lo = format_rational(&u.interval[0]);
    let hi = format_rational(&u.interval[1]);
    let open = if u.interval[0] == Rational64::new(-1, 2) { "(" } else { "[" };
    tsv.push(vec!["interval".into(), format!("{open}{lo},{hi}]")]);
    tsv.extend(u.points.iter().map(|p| vec!["point".into(), format_rational(p)]));
    tsv.extend(u.exclusions.iter().map(|p| vec!["exclusion".into(), format_rational(p)]));
    if let Some(c) = &job.c {
        let c = parse_rational(c)?;
        let inside = hecke_core::level1::locus_contains(&la, c)?;
        json["query"] = json!({ "c": format_rational(&c), "contains": inside });
        tsv.push(vec!["contains".into(), format!("{}={inside}", format_rational(&c))]);
    }
    Ok(Output { json, tsv, exit: 0 })
}

fn verify(job: &JobSpec, suite: &str) -> CliResult<Output> {
    let bounds = job.n.map_or_else(Bounds::acceptance, Bounds::capped);
    let outcomes = sweeps::run_suite(suite, &bounds)
        .ok_or_else(|| CliError::usage(format!("unknown suite {suite:?}; expected one of {:?}", sweeps::SUITES)))?;
    let ok = outcomes.iter().all(|o| o.passed());
    let mut tsv = vec![["id", "criterion", "cases", "failures", "status"].map(String::from).to_vec()];
    for o in &outcomes {
        tsv.push(vec![
            o.id.to_string(),
            o.name.to_string(),
            o.cases.to_string(),
            o.failures.to_string(),
            if o.passed() { "pass" } else { "fail" }.to_string(),
        ]);
    }
    let json = json!({ "suite": suite, "bounds": bounds, "passed": ok, "outcomes": outcomes });
    Ok(Output { json, tsv, exit: if ok { 0 } else { 1 } })
}
