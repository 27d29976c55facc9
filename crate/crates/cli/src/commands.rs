use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use hodge_degen::catalog::{self, Catalog};
use hodge_degen::corpus::{verify_corpus, Mutation};
use hodge_degen::degen::{
    cp_orb_check, ht_construct, ht_plan, minimal_types, minimal_witness, period_closed_check,
};
use hodge_degen::diagram::DiagramSpec;
use hodge_degen::json::{lmhs_to_json, parse_datum, RawDatum};
use hodge_degen::lmhs::{adjoint_lmhs, deligne_splitting, disc_sample, validate_lmhs, LmhsDatum};
use hodge_degen::{Error, GaussianRational, HodgeNumbers};

use crate::{Cli, Command, Format, Mode};

pub const CATALOG_ENV: &str = "HODGE_DEGEN_CATALOG";

/// An input error: reported on stderr, exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

pub fn run(cli: &Cli) -> CliResult<u8> {
    let (text, code) = match &cli.command {
        Command::Validate { path } => validate(cli, path)?,
        Command::Classify { n, h, mode, witness_dir, input } => {
            classify(cli, *n, h, *mode, witness_dir.as_deref(), input.as_deref())?
        }
        Command::Diagram { input, adjoint, arrows } => diagram(cli, input, *adjoint, *arrows)?,
        Command::Catalog { name } => catalog_cmd(cli, name.as_deref())?,
        Command::VerifyCorpus { seed, limit, full } => corpus(*seed, *limit, *full),
    };
    emit(cli, &text)?;
    Ok(code)
}

fn emit(cli: &Cli, text: &str) -> CliResult<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn verdict(pass: bool) -> u8 {
    if pass {
        0
    } else {
        1
    }
}

fn require_json(cli: &Cli, command: &str) -> CliResult<()> {
    match cli.format {
        None | Some(Format::Json) => Ok(()),
        Some(f) => Err(InputError(format!("{command} does not support --format {f:?}").to_lowercase())),
    }
}

fn parse_samples(cli: &Cli) -> CliResult<Option<Vec<GaussianRational>>> {
    cli.samples
        .as_ref()
        .map(|ys| {
            ys.iter()
                .map(|y| y.trim().parse::<GaussianRational>().map_err(|e| InputError(format!("--samples: {e}"))))
                .collect()
        })
        .transpose()
}

fn lmhs_of(raw: &RawDatum, center: Option<i64>) -> CliResult<LmhsDatum> {
    let mut raw = raw.clone();
    if center.is_some() {
        raw.center = center;
    }
    Ok(raw.lmhs()?)
}

fn validate(cli: &Cli, path: &Path) -> CliResult<(String, u8)> {
    require_json(cli, "validate")?;
    let raw = parse_datum(&read(path)?)?;
    let samples = parse_samples(cli)?;
    let (kind, mut report) = if raw.is_lmhs() || cli.center.is_some() || samples.is_some() {
        ("lmhs", validate_lmhs(&lmhs_of(&raw, cli.center)?))
    } else {
        ("phs", raw.hodge().validate())
    };
    if let Some(ys) = samples {
        let l = lmhs_of(&raw, cli.center)?;
        match disc_sample(&l, &ys) {
            Ok(r) => report.extend_prefixed("disc_sample.", r),
            Err(e) => report.push("disc_sample", false, e.to_string()),
        }
    }
    let mut out = report.to_json();
    out["kind"] = json!(kind);
    if let Some(c) = report.first_failure() {
        out["first_failure"] = json!(c.id);
    }
    Ok((pretty(&out), verdict(report.passed())))
}

fn hodge_numbers(n: i64, h: &[usize]) -> CliResult<HodgeNumbers> {
    let hn = HodgeNumbers::new(h.to_vec())?;
    if hn.n != n {
        return Err(InputError(format!("weight {n} needs {} Hodge numbers, got {}", n + 1, h.len())));
    }
    Ok(hn)
}

fn write_witness(dir: Option<&Path>, name: &str, l: &LmhsDatum) -> CliResult<Option<String>> {
    let Some(dir) = dir else { return Ok(None) };
    fs::create_dir_all(dir).map_err(|e| InputError(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{name}.json"));
    fs::write(&path, pretty(&lmhs_to_json(l))).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok(Some(path.display().to_string()))
}

fn file_stem(label: &str) -> String {
    label.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect::<String>().trim_matches('_').to_string()
}

/// `h^{p,n−p} = dim F^p − dim F^{p+1}`: the Hodge numbers of every
/// `exp(zN) F` in the orbit (the limit `F` itself need not be pure).
fn orbit_hodge_numbers(l: &LmhsDatum) -> Vec<usize> {
    let f = l.f();
    let n = l.weight();
    if f.get(0).dim() != l.dim() || !f.get(n + 1).is_zero() {
        return vec![];
    }
    (0..=n).rev().map(|p| f.get(p).dim() - f.get(p + 1).dim()).collect()
}

fn closed_orbit_report(l: &LmhsDatum) -> CliResult<(Value, bool)> {
    let dims = deligne_splitting(l)?.dims();
    let (period, period_pass) = match period_closed_check(&dims, l.weight()) {
        Ok(r) => {
            let pass = r.passed();
            (r.to_json(), pass)
        }
        Err(e @ Error::OddWeightNonHT(_)) => (json!({ "pass": false, "error": e.to_string() }), false),
        Err(e) => return Err(e.into()),
    };
    let cp = cp_orb_check(&adjoint_lmhs(l)?.i_g.dims());
    let pass = period_pass && cp.passed();
    let verdict = if pass { "consistent with closed orbit" } else { "violates a closed-orbit constraint" };
    Ok((
        json!({
            "splitting": dims,
            "period_closed": period,
            "cp_orb": cp.to_json(),
            "verdict": verdict,
        }),
        pass,
    ))
}

fn classify(
    cli: &Cli,
    n: i64,
    h: &[usize],
    mode: Mode,
    witness_dir: Option<&Path>,
    input: Option<&Path>,
) -> CliResult<(String, u8)> {
    require_json(cli, "classify")?;
    let hn = hodge_numbers(n, h)?;
    let mut out = json!({ "n": n, "h": h });
    let code = match mode {
        Mode::Minimal => {
            out["mode"] = json!("minimal");
            let mut types = Vec::new();
            for t in minimal_types(&hn) {
                let mut v = serde_json::to_value(&t).expect("types serialize");
                v["label"] = json!(t.label());
                if witness_dir.is_some() {
                    let l = minimal_witness(&t, &hn)?;
                    v["witness"] = json!(write_witness(witness_dir, &format!("minimal_{}", file_stem(&t.label())), &l)?);
                }
                types.push(v);
            }
            out["count"] = json!(types.len());
            out["types"] = Value::Array(types);
            0
        }
        Mode::HodgeTate => {
            out["mode"] = json!("hodge-tate");
            match ht_plan(&hn) {
                Ok(plan) => {
                    let l = ht_construct(&hn)?;
                    let report = validate_lmhs(&l);
                    out["gate"] = json!("PASS");
                    out["plan"] = serde_json::to_value(&plan).expect("plans serialize");
                    out["splitting"] = json!(deligne_splitting(&l)?.dims());
                    out["validation"] = report.to_json();
                    if let Some(p) = write_witness(witness_dir, "hodge_tate", &l)? {
                        out["witness"] = json!(p);
                    }
                    verdict(report.passed())
                }
                Err(Error::GateFailed(ks)) => {
                    out["gate"] = json!("FAIL");
                    out["failing_k"] = json!(ks);
                    1
                }
                Err(e) => return Err(e.into()),
            }
        }
        Mode::ClosedOrbit => {
            out["mode"] = json!("closed-orbit");
            let l = match input {
                Some(path) => {
                    let l = lmhs_of(&parse_datum(&read(path)?)?, cli.center)?;
                    if orbit_hodge_numbers(&l) != hn.h {
                        return Err(InputError(format!("{} does not have Hodge numbers {h:?}", path.display())));
                    }
                    Some(l)
                }
                None => ht_plan(&hn).ok().map(|_| ht_construct(&hn)).transpose()?,
            };
            match l {
                Some(l) => {
                    let validation = validate_lmhs(&l);
                    let (report, pass) = closed_orbit_report(&l)?;
                    out["source"] = json!(if input.is_some() { "input" } else { "hodge-tate construction" });
                    out["validation"] = validation.to_json();
                    out["closed_orbit"] = report;
                    verdict(pass && validation.passed())
                }
                None => {
                    out["source"] = json!(null);
                    out["verdict"] = json!(if n % 2 != 0 {
                        "odd weight and the Hodge-Tate gate fails: the closed orbit is not reachable"
                    } else {
                        "the Hodge-Tate gate fails; supply --input with a candidate nilpotent orbit"
                    });
                    1
                }
            }
        }
    };
    Ok((pretty(&out), code))
}

fn catalog_source() -> CliResult<Catalog> {
    match std::env::var_os(CATALOG_ENV) {
        Some(dir) => Ok(Catalog::load_dir(Path::new(&dir))?),
        None => Ok(Catalog::builtin()),
    }
}

fn diagram_input(input: &str, adjoint: bool) -> CliResult<DiagramSpec> {
    let path = Path::new(input);
    if path.is_file() {
        let text = read(path)?;
        let value: Value = serde_json::from_str(&text).map_err(|e| InputError(format!("{input}: invalid JSON: {e}")))?;
        if value.get("nodes").is_some() {
            return serde_json::from_value(value).map_err(|e| InputError(format!("{input}: bad diagram spec: {e}")));
        }
        let l = parse_datum(&text)?.lmhs()?;
        return Ok(DiagramSpec::new(deligne_splitting(&l)?.dims()));
    }
    let cat = catalog_source()?;
    match cat.select(input) {
        Ok(rows) if rows.len() == 1 => {
            let (g, r) = rows[0];
            let c = catalog::compute_row(g, r)?;
            Ok(DiagramSpec::new(if adjoint { c.adjoint } else { c.v }))
        }
        Ok(_) => Err(InputError(format!("{input} names a group; pick one row"))),
        Err(Error::UnknownCatalogEntry { available, .. }) => {
            Err(InputError(format!("{input}: neither a file nor a catalog row (available: {available})")))
        }
        Err(e) => Err(e.into()),
    }
}

fn diagram(cli: &Cli, input: &str, adjoint: bool, arrows: bool) -> CliResult<(String, u8)> {
    let spec = diagram_input(input, adjoint)?;
    let spec = if arrows { spec.with_arrows(true) } else { spec };
    let text = match cli.format.unwrap_or(Format::Ascii) {
        Format::Ascii => spec.ascii(),
        Format::Svg => spec.svg(),
        Format::Json => pretty(&serde_json::to_value(&spec).expect("specs serialize")),
    };
    Ok((text, 0))
}

fn catalog_cmd(cli: &Cli, name: Option<&str>) -> CliResult<(String, u8)> {
    let cat = catalog_source()?;
    let json_out = cli.format == Some(Format::Json);
    let Some(name) = name else {
        let names = cat.names();
        let text = if json_out { pretty(&json!(names)) } else { names.join("\n") + "\n" };
        return Ok((text, 0));
    };
    let checks = catalog::run(&cat, name)?;
    let pass = checks.iter().all(|c| c.matches());
    let text = if json_out {
        pretty(&json!({ "pass": pass, "rows": checks }))
    } else {
        let mut s: String = checks.iter().map(|c| c.to_string()).collect();
        s.push_str(if pass { "all rows match\n" } else { "catalog differs from golden data\n" });
        s
    };
    Ok((text, verdict(pass)))
}

fn corpus(seed: u64, limit: Option<usize>, full: bool) -> (String, u8) {
    let r = verify_corpus(seed, limit, Mutation::None);
    let v = if full { serde_json::to_value(&r).expect("reports serialize") } else { r.summary_json() };
    (pretty(&v), verdict(r.pass))
}
