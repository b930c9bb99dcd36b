use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use polyrep::base_locus::{base_locus, BaseLocusOptions, DEFAULT_MAX_EXT_DEGREE};
use polyrep::document::InputDocument;
use polyrep::reparam::{
    affine_form, polynomial_reparametrize, surface_degree, transversality_test, verify_polynomial, ReparamOutcome,
    Verdict,
};
use polyrep::report::{map_strings, BaseLocusJson, DegreeJson, ReparamJson, TransversalityJson};
use polyrep::rng::DEFAULT_SEED;
use polyrep::RationalMap;

/// Base points, transversality and polynomial reparametrization of
/// rational surface parametrizations.
#[derive(Parser)]
#[command(name = "polyrep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Base points with their multiplicities.
    BaseLocus(Common),
    /// Transversality test. Exit 0 if transversal, 2 if not.
    Transversal(Common),
    /// Polynomial reparametrization. Exit 0 on success, 2 if not applicable,
    /// 3 if no polynomial parametrization exists.
    Reparam {
        #[command(flatten)]
        common: Common,
        /// Verify the result before reporting success.
        #[arg(long)]
        check: bool,
    },
    /// Degree of the map and, for surfaces, of the image.
    Degree(Common),
}

#[derive(Args)]
struct Common {
    /// TOML file with `components` and optional `variables`.
    path: PathBuf,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit one JSON document on standard output.
    #[arg(long)]
    json: bool,
    /// Largest degree of a number field holding base points.
    #[arg(long, default_value_t = DEFAULT_MAX_EXT_DEGREE)]
    max_ext_degree: usize,
}

impl Common {
    fn options(&self) -> BaseLocusOptions {
        BaseLocusOptions { seed: self.seed, max_ext_degree: self.max_ext_degree }
    }

    fn load(&self) -> Result<(String, RationalMap), String> {
        let text = std::fs::read_to_string(&self.path).map_err(|e| format!("{}: {e}", self.path.display()))?;
        let doc = InputDocument::from_toml(&text).map_err(|e| format!("{}: {e}", self.path.display()))?;
        let map = doc.to_map().map_err(|e| format!("{}: {e}", self.path.display()))?;
        Ok((doc.display_name().to_string(), map))
    }
}

fn emit(common: &Common, name: &str, value: Value, human: String) {
    if common.json {
        let mut doc = json!({ "input": name, "seed": common.seed });
        if let (Value::Object(d), Value::Object(v)) = (&mut doc, value) {
            d.extend(v);
        }
        println!("{}", serde_json::to_string_pretty(&doc).expect("reports serialize"));
    } else {
        print!("{human}");
    }
}

fn header(name: &str, map: &RationalMap) -> String {
    format!("{name}: {} components of degree {}\n", map.len(), map.degree())
}

fn cmd_base_locus(c: &Common) -> Result<u8, String> {
    let (name, map) = c.load()?;
    let report = base_locus(&map, &c.options()).map_err(|e| e.to_string())?;
    let mut text = header(&name, &map);
    if report.is_empty() {
        text.push_str("no base points\n");
    }
    for fam in &report.families {
        text.push_str(&format!("  {fam}\n"));
    }
    text.push_str(&format!("total multiplicity: {}\n", report.total_multiplicity));
    emit(c, &name, serde_json::to_value(BaseLocusJson::from(&report)).unwrap(), text);
    Ok(0)
}

fn cmd_transversal(c: &Common) -> Result<u8, String> {
    let (name, map) = c.load()?;
    if map.len() != 4 {
        return Err(format!("transversality needs 4 components, got {}", map.len()));
    }
    let report = transversality_test(&map, &c.options()).map_err(|e| e.to_string())?;
    let mut text = header(&name, &map);
    for p in &report.per_point {
        let gcd = if p.tangent_gcd_trivial { "no shared tangent" } else { "shared tangent" };
        text.push_str(&format!("  {}, smallest component multiplicity {}, {gcd}\n", p.family, p.local_multiplicity));
    }
    let code = match &report.verdict {
        Verdict::Transversal => {
            text.push_str("transversal\n");
            0
        }
        Verdict::NotTransversal(why) => {
            text.push_str(&format!("not transversal: {why}\n"));
            2
        }
    };
    emit(c, &name, serde_json::to_value(TransversalityJson::from(&report)).unwrap(), text);
    Ok(code)
}

fn lines(label: &str, items: &[String]) -> String {
    format!("{label}:\n{}", items.iter().map(|s| format!("  {s}\n")).collect::<String>())
}

fn cmd_reparam(c: &Common, check: bool) -> Result<u8, String> {
    let (name, map) = c.load()?;
    if map.len() != 4 {
        return Err(format!("reparametrization needs 4 components, got {}", map.len()));
    }
    let result = polynomial_reparametrize(&map, &c.options()).map_err(|e| e.to_string())?;
    let mut text = header(&name, &map);
    let affine = |m: &RationalMap| affine_form(m).iter().map(|p| p.to_string()).collect::<Vec<_>>();
    let code = match &result.outcome {
        ReparamOutcome::AlreadyAlmostPolynomial { parametrization, projectivity } => {
            text.push_str("already almost polynomial\n");
            text.push_str(&lines("projectivity", &map_strings(projectivity)));
            text.push_str(&lines("projective form", &map_strings(parametrization)));
            text.push_str(&lines("affine form", &affine(parametrization)));
            0
        }
        ReparamOutcome::Polynomial(p) => {
            if check {
                verify_polynomial(&map, p).map_err(|e| e.to_string())?;
                text.push_str("checked: P is recovered, no base points, last component t3^d\n");
            }
            text.push_str(&format!(
                "polynomial parametrization of degree {} (surface degree {})\n",
                p.q.degree(),
                p.surface_degree
            ));
            text.push_str(&lines("reparametrizing map", &map_strings(&p.s_bar)));
            text.push_str(&lines("its inverse", &map_strings(&p.r_bar)));
            text.push_str(&lines("projective form", &map_strings(&p.q)));
            text.push_str(&lines("affine form", &affine(&p.q)));
            0
        }
        ReparamOutcome::NotApplicable(why) => {
            text.push_str(&format!("not applicable, the input is not transversal: {why}\n"));
            2
        }
        ReparamOutcome::NoPolynomialParametrization(why) => {
            text.push_str(&format!("no polynomial parametrization without base points: {why}\n"));
            3
        }
    };
    let mut value = serde_json::to_value(ReparamJson::from(&result)).unwrap();
    if check && matches!(result.outcome, ReparamOutcome::Polynomial(_)) {
        value["checked"] = Value::Bool(true);
    }
    emit(c, &name, value, text);
    Ok(code)
}

fn cmd_degree(c: &Common) -> Result<u8, String> {
    let (name, map) = c.load()?;
    let report = base_locus(&map, &c.options()).map_err(|e| e.to_string())?;
    let surface = if map.len() == 4 { Some(surface_degree(&map, &report).map_err(|e| e.to_string())?) } else { None };
    let mut text = header(&name, &map);
    text.push_str(&format!("map degree: {}\nbase locus multiplicity: {}\n", map.degree(), report.total_multiplicity));
    if let Some(s) = surface {
        text.push_str(&format!("surface degree: {s}\n"));
    }
    let out =
        DegreeJson { map_degree: map.degree(), base_multiplicity: report.total_multiplicity, surface_degree: surface };
    emit(c, &name, serde_json::to_value(out).unwrap(), text);
    Ok(0)
}

fn main() -> ExitCode {
    // Usage errors exit with 1 so that 2 keeps its meaning of "not transversal".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::BaseLocus(c) => cmd_base_locus(c),
        Command::Transversal(c) => cmd_transversal(c),
        Command::Reparam { common, check } => cmd_reparam(common, *check),
        Command::Degree(c) => cmd_degree(c),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
