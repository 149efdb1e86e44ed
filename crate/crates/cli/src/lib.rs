//! Batch front end: dimension tables, component inventories, coset dumps
//! and verification reports.
//!
//! Simple-root subsets are 0-based on the command line (`--p 0,2`), matching
//! the library. Words in the output use 1-based letters (`s1s2`).
//!
//! Exit status: 0 when everything passed, 1 when a verification failed,
//! 2 for bad input (unknown type, malformed matrix, order cap, I/O), and 3
//! for a subset index out of range.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use steinberg_core::json::{decomposition_to_json, report_to_json, SCHEMA_VERSION};
use steinberg_core::parabolic::double_cosets;
use steinberg_core::rootsys::DEFAULT_ORDER_CAP;
use steinberg_core::steinberg::{
    geometry_profile, hotta_verification, pair_profile, verify_anti_invariant_isomorphism,
    verify_invariant_isomorphism, y_components,
};
use steinberg_core::{
    CartanDatum, Error as CoreError, RootSystem, SimpleSubset, VerificationReport, WeylGroup,
};

#[derive(Debug, Parser)]
#[command(name = "steinberg", version, about = "Weyl-group combinatorics of Steinberg varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One row of dimensions per (J, K) pair.
    Table(Common),
    /// Check invariant and anti-invariant dimensions, and optionally Hotta's criterion.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Check every simple reflection against Hotta's criterion.
        #[arg(long)]
        hotta: bool,
    },
    /// Components of Y for each pair, labeled by maximal representatives.
    Components(Common),
    /// Double-coset decompositions for each pair.
    Cosets(Common),
    /// Positive roots.
    Roots(Common),
    /// Group elements in enumeration order.
    Elements(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Cartan type such as A3, G2 or A1xB2.
    #[arg(long = "type", value_name = "NAME", conflicts_with = "cartan", required_unless_present = "cartan")]
    pub type_name: Option<String>,
    /// JSON file holding {"matrix": [[...]], "labels": [...]} or a type name.
    #[arg(long, value_name = "FILE")]
    pub cartan: Option<PathBuf>,
    /// 0-based simple indices of J, comma separated.
    #[arg(long, value_name = "CSV", default_value = "", conflicts_with = "all_pairs")]
    pub p: String,
    /// 0-based simple indices of K, comma separated.
    #[arg(long, value_name = "CSV", default_value = "", conflicts_with = "all_pairs")]
    pub q: String,
    /// All 4^rank pairs (J, K), ordered by bitmask of J and then of K.
    #[arg(long)]
    pub all_pairs: bool,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_name = "N", default_value_t = DEFAULT_ORDER_CAP)]
    pub order_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::InvalidSubset { .. }) => 3,
            _ => 2,
        }
    }
}

/// Rendered output and whether every verification in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    /// Printed to stderr, outside the machine-readable body.
    pub summary: Option<String>,
    pub passed: bool,
}

impl Output {
    pub fn exit_code(&self) -> u8 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

/// Rows for CSV and Markdown together with records for JSON.
struct Sheet {
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    records: Vec<Value>,
}

impl Sheet {
    fn new(headers: Vec<&'static str>) -> Self {
        Sheet { headers, rows: Vec::new(), records: Vec::new() }
    }

    fn push(&mut self, row: Vec<String>, record: Value) {
        debug_assert_eq!(row.len(), self.headers.len());
        let mut tagged = Map::new();
        tagged.insert("schema_version".into(), json!(SCHEMA_VERSION));
        if let Value::Object(fields) = record {
            tagged.extend(fields);
        }
        self.rows.push(row);
        self.records.push(Value::Object(tagged));
    }

    fn render(&self, format: Format) -> Result<String, CliError> {
        Ok(match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.records).expect("values serialize");
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut writer = csv::Writer::from_writer(Vec::new());
                writer.write_record(&self.headers)?;
                for row in &self.rows {
                    writer.write_record(row)?;
                }
                String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("csv is utf-8")
            }
            Format::Markdown => {
                let mut text = format!("| {} |\n", self.headers.join(" | "));
                text.push_str(&format!("|{}\n", "---|".repeat(self.headers.len())));
                for row in &self.rows {
                    text.push_str(&format!("| {} |\n", row.join(" | ")));
                }
                text
            }
        })
    }
}

fn load_datum(common: &Common) -> Result<CartanDatum, CliError> {
    match (&common.type_name, &common.cartan) {
        (Some(name), _) => Ok(CartanDatum::from_type(name)?),
        (None, Some(path)) => {
            let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.clone(), source })?;
            Ok(CartanDatum::from_json(&text)?)
        }
        (None, None) => unreachable!("clap requires --type or --cartan"),
    }
}

fn load_group(common: &Common) -> Result<WeylGroup, CliError> {
    let datum = load_datum(common)?;
    Ok(WeylGroup::enumerate(RootSystem::new(datum), common.order_cap)?)
}

fn pairs(common: &Common, rank: usize) -> Result<Vec<(SimpleSubset, SimpleSubset)>, CliError> {
    if common.all_pairs {
        return Ok(SimpleSubset::all(rank)
            .flat_map(|j| SimpleSubset::all(rank).map(move |k| (j.clone(), k)))
            .collect());
    }
    Ok(vec![(SimpleSubset::parse(&common.p, rank)?, SimpleSubset::parse(&common.q, rank)?)])
}

fn type_label(group: &WeylGroup) -> String {
    group.root_system().datum().type_name().unwrap_or("custom").to_string()
}

fn table(common: &Common) -> Result<Output, CliError> {
    let g = load_group(common)?;
    let label = type_label(&g);
    let geometry = geometry_profile(g.root_system());
    let mut sheet = Sheet::new(vec![
        "type", "J", "K", "n", "d", "l", "f", "dimX", "dimY", "cosets", "inv_dim", "anti_dim", "passed",
    ]);
    let mut passed = true;
    for (j, k) in pairs(common, g.rank())? {
        let p = pair_profile(g.root_system(), &j, &k);
        let cosets = double_cosets(&g, &j, &k).len();
        let inv = verify_invariant_isomorphism(&g, &j, &k);
        let anti = verify_anti_invariant_isomorphism(&g, &j, &k);
        let ok = inv.passed && anti.passed;
        passed &= ok;
        let row = vec![
            label.clone(),
            j.to_string(),
            k.to_string(),
            geometry.n.to_string(),
            geometry.d.to_string(),
            geometry.l.to_string(),
            p.f.to_string(),
            p.dim_x.to_string(),
            p.dim_y.to_string(),
            cosets.to_string(),
            inv.computed.to_string(),
            anti.computed.to_string(),
            ok.to_string(),
        ];
        let record = json!({
            "type": label,
            "J": j.indices(),
            "K": k.indices(),
            "n": geometry.n,
            "d": geometry.d,
            "l": geometry.l,
            "f": p.f,
            "dimX": p.dim_x,
            "dimY": p.dim_y,
            "cosets": cosets,
            "inv_dim": inv.computed,
            "anti_dim": anti.computed,
            "passed": ok,
        });
        sheet.push(row, record);
    }
    Ok(Output { text: sheet.render(common.format)?, summary: None, passed })
}

fn verify(common: &Common, hotta: bool) -> Result<Output, CliError> {
    let g = load_group(common)?;
    let mut reports: Vec<VerificationReport> = Vec::new();
    // With --hotta alone, skip the default empty pair.
    let explicit_pair = common.all_pairs || !common.p.is_empty() || !common.q.is_empty();
    if !hotta || explicit_pair {
        for (j, k) in pairs(common, g.rank())? {
            reports.push(verify_invariant_isomorphism(&g, &j, &k));
            reports.push(verify_anti_invariant_isomorphism(&g, &j, &k));
        }
    }
    if hotta {
        reports.extend((0..g.rank()).map(|s| hotta_verification(&g, s)));
    }
    let mut sheet = Sheet::new(vec!["claim", "expected", "computed", "passed"]);
    for r in &reports {
        let row = vec![r.claim.clone(), r.expected.to_string(), r.computed.to_string(), r.passed.to_string()];
        sheet.push(row, report_to_json(&g, r));
    }
    let ok = reports.iter().filter(|r| r.passed).count();
    let summary = format!("{ok} of {} reports passed", reports.len());
    let mut text = sheet.render(common.format)?;
    let passed = ok == reports.len();
    if common.format == Format::Markdown {
        text.push_str(&format!("\n{summary}\n"));
        return Ok(Output { text, summary: None, passed });
    }
    Ok(Output { text, summary: Some(summary), passed })
}

fn components(common: &Common) -> Result<Output, CliError> {
    let g = load_group(common)?;
    let mut sheet = Sheet::new(vec!["J", "K", "label", "dim_zw", "dim_yw", "eta_dim_preserved"]);
    for (j, k) in pairs(common, g.rank())? {
        for c in y_components(&g, &j, &k) {
            let word = g.word_string(c.label);
            let row = vec![
                j.to_string(),
                k.to_string(),
                word.clone(),
                c.dim_zw.to_string(),
                c.dim_yw.to_string(),
                c.eta_dim_preserved.to_string(),
            ];
            let record = json!({
                "J": j.indices(),
                "K": k.indices(),
                "label": word,
                "dim_zw": c.dim_zw,
                "dim_yw": c.dim_yw,
                "eta_dim_preserved": c.eta_dim_preserved,
            });
            sheet.push(row, record);
        }
    }
    Ok(Output { text: sheet.render(common.format)?, summary: None, passed: true })
}

fn cosets(common: &Common) -> Result<Output, CliError> {
    let g = load_group(common)?;
    let mut sheet = Sheet::new(vec!["J", "K", "min", "max", "size"]);
    let mut records = Vec::new();
    for (j, k) in pairs(common, g.rank())? {
        let d = double_cosets(&g, &j, &k);
        for c in &d.cosets {
            let row =
                vec![j.to_string(), k.to_string(), g.word_string(c.min_rep), g.word_string(c.max_rep), c.len().to_string()];
            sheet.rows.push(row);
        }
        let mut record = Map::new();
        record.insert("schema_version".into(), json!(SCHEMA_VERSION));
        if let Value::Object(fields) = decomposition_to_json(&g, &d) {
            record.extend(fields);
        }
        records.push(Value::Object(record));
    }
    // One JSON record per decomposition rather than per coset.
    sheet.records = records;
    Ok(Output { text: sheet.render(common.format)?, summary: None, passed: true })
}

fn roots(common: &Common) -> Result<Output, CliError> {
    let sys = RootSystem::new(load_datum(common)?);
    let mut sheet = Sheet::new(vec!["index", "coords", "height"]);
    for (i, r) in sys.positive_roots().iter().enumerate() {
        let coords: Vec<String> = r.coords().iter().map(i64::to_string).collect();
        let row = vec![i.to_string(), format!("({})", coords.join(",")), r.height().to_string()];
        sheet.push(row, json!({ "index": i, "coords": r.coords(), "height": r.height() }));
    }
    Ok(Output { text: sheet.render(common.format)?, summary: None, passed: true })
}

fn elements(common: &Common) -> Result<Output, CliError> {
    let g = load_group(common)?;
    let mut sheet = Sheet::new(vec!["index", "word", "length"]);
    for w in g.elements() {
        let word = g.word_string(w);
        let row = vec![w.index().to_string(), word.clone(), g.length(w).to_string()];
        sheet.push(row, json!({ "index": w.index(), "word": word, "length": g.length(w) }));
    }
    Ok(Output { text: sheet.render(common.format)?, summary: None, passed: true })
}

fn common_of(command: &Command) -> &Common {
    match command {
        Command::Table(c)
        | Command::Components(c)
        | Command::Cosets(c)
        | Command::Roots(c)
        | Command::Elements(c)
        | Command::Verify { common: c, .. } => c,
    }
}

/// Runs a parsed command and renders its output without writing it.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Table(c) => table(c),
        Command::Verify { common, hotta } => verify(common, *hotta),
        Command::Components(c) => components(c),
        Command::Cosets(c) => cosets(c),
        Command::Roots(c) => roots(c),
        Command::Elements(c) => elements(c),
    }
}

/// Runs and writes to `--out` or stdout; returns the process exit status.
pub fn execute(cli: &Cli) -> u8 {
    let result = run(cli).and_then(|output| {
        match &common_of(&cli.command).out {
            Some(path) => fs::write(path, &output.text).map_err(|source| CliError::Io { path: path.clone(), source })?,
            None => print!("{}", output.text),
        }
        Ok(output)
    });
    match result {
        Ok(output) => {
            if let Some(summary) = &output.summary {
                eprintln!("{summary}");
            }
            output.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
