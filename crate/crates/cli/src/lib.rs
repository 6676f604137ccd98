//! Command-line front end. [`run`] takes the argument list and output streams
//! so the binary and the tests share one entry point.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use quandlekit::galkin::{self, GalkinSpec};
use quandlekit::knots::{self, KnotRecord};
use quandlekit::quandle::{self, PropertyReport, QuandleTable};
use quandlekit::{counting, enumeration, BraidWord, Error, Limits};

#[derive(Parser, Debug)]
#[command(
    name = "quandlekit",
    version,
    about = "Finite quandles, Galkin quandles and knot colorings"
)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct LimitArgs {
    #[arg(long, global = true, value_name = "N")]
    max_group_order: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_automorphisms: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    max_involution_order: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_alexander_order: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_enumeration_order: Option<usize>,
    #[arg(long, global = true, value_name = "N")]
    max_coloring_tuples: Option<u64>,
    #[arg(long, global = true, value_name = "N")]
    max_search_nodes: Option<u64>,
}

impl LimitArgs {
    fn resolve(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_group_order: self.max_group_order.unwrap_or(d.max_group_order),
            max_automorphisms: self.max_automorphisms.unwrap_or(d.max_automorphisms),
            max_involution_order: self.max_involution_order.unwrap_or(d.max_involution_order),
            max_alexander_order: self.max_alexander_order.unwrap_or(d.max_alexander_order),
            max_enumeration_order: self.max_enumeration_order.unwrap_or(d.max_enumeration_order),
            max_coloring_tuples: self.max_coloring_tuples.unwrap_or(d.max_coloring_tuples),
            max_search_nodes: self.max_search_nodes.unwrap_or(d.max_search_nodes),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Galkin quandles G(A, c1, c2).
    #[command(subcommand)]
    Galkin(GalkinCmd),
    /// Arbitrary quandles: R<n>, trivial-<n>, a Galkin literal or a table file.
    #[command(subcommand)]
    Quandle(QuandleCmd),
    /// Census of connected quandles.
    #[command(subcommand)]
    Enum(EnumCmd),
    /// Knot colorings and determinants.
    #[command(subcommand)]
    Knot(KnotCmd),
    /// Closed-form class counts.
    #[command(subcommand)]
    Count(CountCmd),
}

#[derive(Subcommand, Debug)]
enum GalkinCmd {
    /// Operation table with its (x, a) legend.
    Build { spec: String },
    /// Computed property report next to the closed-form prediction.
    Props { spec: String },
    /// The equivalent G(A, 0, c2 - c1) and the isomorphism onto it.
    Normalize { spec: String },
    /// Decide isomorphism of two Galkin quandles.
    Iso { first: String, second: String },
    /// One representative per isomorphism class of the given order.
    Classify {
        #[arg(long)]
        order: i64,
    },
}

#[derive(Args, Debug)]
struct TableInput {
    /// Read table files column by column.
    #[arg(long)]
    transposed: bool,
}

#[derive(Subcommand, Debug)]
enum QuandleCmd {
    /// Validate a table against the axioms.
    Check {
        quandle: String,
        #[command(flatten)]
        input: TableInput,
    },
    Props {
        quandle: String,
        #[command(flatten)]
        input: TableInput,
    },
    Iso {
        first: String,
        second: String,
        #[command(flatten)]
        input: TableInput,
    },
    /// All good involutions.
    Involutions {
        quandle: String,
        #[command(flatten)]
        input: TableInput,
    },
    /// Position in the connected census of the same order.
    Identify {
        quandle: String,
        #[command(flatten)]
        input: TableInput,
    },
}

#[derive(Subcommand, Debug)]
enum EnumCmd {
    Connected {
        /// A single order.
        #[arg(long, conflicts_with = "max_order", required_unless_present = "max_order")]
        order: Option<usize>,
        /// Every order from 1 up to this one.
        #[arg(long)]
        max_order: Option<usize>,
        /// Write one table file per entry plus index.json here.
        #[arg(long, value_name = "DIR")]
        export: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct KnotInput {
    /// Braid word, e.g. "2: 1 1 1".
    #[arg(long)]
    braid: Option<String>,
    /// Knot name from the dataset, e.g. 4_1.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Subcommand, Debug)]
enum KnotCmd {
    Color {
        #[command(flatten)]
        knot: KnotInput,
        #[arg(long)]
        quandle: String,
        #[arg(long)]
        dataset: Option<PathBuf>,
        #[command(flatten)]
        input: TableInput,
    },
    Det {
        #[command(flatten)]
        knot: KnotInput,
        #[arg(long)]
        dataset: Option<PathBuf>,
    },
    /// Coloring counts for every dataset knot, as CSV (or JSON with --json).
    Profile {
        /// Quandles separated by ';'.
        #[arg(long)]
        quandles: String,
        #[arg(long)]
        dataset: Option<PathBuf>,
        #[command(flatten)]
        input: TableInput,
    },
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    Classes {
        #[arg(long)]
        max: u64,
        /// Classify constructively up to this n (default: min(max, 16)).
        #[arg(long)]
        classify_max: Option<u64>,
    },
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BuildReport {
    pub spec: String,
    pub order: usize,
    pub legend: Vec<(u8, Vec<u32>)>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GalkinPropsReport {
    pub spec: String,
    pub normalized: String,
    pub rig_name: Option<String>,
    pub computed: PropertyReport,
    pub predicted: PropertyReport,
    pub agree: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct NormalizeReport {
    pub spec: String,
    pub normalized: String,
    pub eta: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IsoReport {
    pub isomorphic: bool,
    pub reason: String,
    /// Generator images of the group automorphism (Galkin) or the element bijection (tables).
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassEntry {
    pub group: String,
    pub point: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rig_name: Option<String>,
    pub properties: PropertyReport,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: i64,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckReport {
    pub order: usize,
    pub valid: bool,
    pub violation: Option<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InvolutionReport {
    pub order: usize,
    pub involutions: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdentifyReport {
    pub order: usize,
    pub index: Option<usize>,
    pub census_size: usize,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CensusOrder {
    pub order: usize,
    pub count: usize,
    pub tables: Vec<Vec<Vec<usize>>>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColorReport {
    pub braid: String,
    pub quandle: String,
    pub colorings: u64,
    pub nontrivial: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DetReport {
    pub braid: String,
    pub determinant: u64,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProfileReport {
    pub knots: Vec<String>,
    pub quandles: Vec<String>,
    pub counts: Vec<Vec<u64>>,
    pub count_classes: Vec<Vec<usize>>,
    pub nontrivial_classes: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountRow {
    pub n: u64,
    pub order: u64,
    pub count: u64,
    pub classified: Option<u64>,
    pub reference: Option<u64>,
    pub ok: bool,
}

/// Runs one invocation. Returns the process exit code: 0 on success, 1 on
/// usage, parse or domain errors, 2 when a resource limit is hit.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_resource_limit() {
                2
            } else {
                1
            }
        }
    }
}

type Res<T> = Result<T, Error>;

fn json<T: Serialize>(value: &T) -> Res<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::Io(e.to_string()))
}

fn parse_spec(text: &str) -> Res<GalkinSpec> {
    text.parse()
}

/// `R<n>`, `trivial-<n>`, a Galkin literal, or a path to a table file.
fn load_quandle(arg: &str, transposed: bool, limits: &Limits) -> Res<QuandleTable> {
    let arg = arg.trim();
    if let Some(n) = arg.strip_prefix('R').and_then(|n| n.parse::<usize>().ok()) {
        return quandle::dihedral(n);
    }
    if let Some(n) = arg.strip_prefix("trivial-").and_then(|n| n.parse::<usize>().ok()) {
        return quandle::trivial(n);
    }
    if arg.starts_with("G(") {
        return Ok(galkin::build(&parse_spec(arg)?, limits)?.table);
    }
    QuandleTable::read_file(arg, transposed)
}

fn table_text(t: &QuandleTable) -> String {
    t.to_text()
}

fn report_text(r: &PropertyReport) -> String {
    let mut s = String::new();
    for (name, v) in [
        ("connected", r.connected),
        ("latin", r.latin),
        ("faithful", r.faithful),
        ("medial", r.medial),
        ("left_distributive", r.left_distributive),
        ("kei", r.kei),
        ("self_dual", r.self_dual),
        ("has_r3_subquandle", r.has_r3_subquandle),
    ] {
        s += &format!("{name}: {v}\n");
    }
    for class in &r.cycle_profile {
        let lengths: Vec<String> = class.lengths.iter().map(usize::to_string).collect();
        s += &format!("cycle type [{}] on {} columns\n", lengths.join(","), class.columns);
    }
    s
}

fn dataset(path: &Option<PathBuf>) -> Res<Vec<KnotRecord>> {
    match path {
        Some(p) => knots::load_knot_table(p),
        None => Ok(knots::builtin_dataset()),
    }
}

fn resolve_braid(knot: &KnotInput, path: &Option<PathBuf>) -> Res<BraidWord> {
    if let Some(b) = &knot.braid {
        return b.parse();
    }
    let name = knot.name.as_deref().unwrap_or_default();
    let records = dataset(path)?;
    knots::find_knot(&records, name)
        .map(|k| k.braid.clone())
        .ok_or_else(|| Error::Domain(format!("no knot named {name:?} in the dataset")))
}

fn execute(cli: &Cli) -> Res<String> {
    let limits = cli.limits.resolve();
    let as_json = cli.json;
    match &cli.command {
        Command::Galkin(cmd) => galkin_cmd(cmd, &limits, as_json),
        Command::Quandle(cmd) => quandle_cmd(cmd, &limits, as_json),
        Command::Enum(EnumCmd::Connected {
            order,
            max_order,
            export,
        }) => {
            let orders: Vec<usize> = match (order, max_order) {
                (Some(n), _) => vec![*n],
                (None, Some(m)) => (1..=*m).collect(),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let mut all = Vec::new();
            let mut reports = Vec::new();
            for n in orders {
                let census = enumeration::enumerate_connected(n, &limits)?;
                reports.push(CensusOrder {
                    order: n,
                    count: census.len(),
                    tables: census.iter().map(|e| e.table.rows()).collect(),
                });
                all.extend(census);
            }
            if let Some(dir) = export {
                enumeration::export_census(&all, dir)?;
            }
            if as_json {
                return json(&reports);
            }
            let mut s = String::new();
            for r in &reports {
                s += &format!("order {}: {} connected quandles\n", r.order, r.count);
                for (i, t) in r.tables.iter().enumerate() {
                    s += &format!("# q{}_{}\n", r.order, i);
                    for row in t {
                        let row: Vec<String> = row.iter().map(usize::to_string).collect();
                        s += &row.join(" ");
                        s.push('\n');
                    }
                }
            }
            Ok(s)
        }
        Command::Knot(cmd) => knot_cmd(cmd, &limits, as_json),
        Command::Count(CountCmd::Classes { max, classify_max }) => {
            let classify_max = classify_max.unwrap_or((*max).min(16));
            let report = counting::crosscheck(*max, classify_max, &limits)?;
            let rows: Vec<CountRow> = report
                .rows
                .iter()
                .map(|r| CountRow {
                    n: r.n,
                    order: r.order,
                    count: r.formula,
                    classified: r.classified,
                    reference: r.reference,
                    ok: r.ok,
                })
                .collect();
            if as_json {
                return json(&rows);
            }
            let mut s = String::from("order\tN(n)\tclassified\tstatus\n");
            for r in &rows {
                let classified = r.classified.map_or("-".to_string(), |c| c.to_string());
                s += &format!(
                    "{}\t{}\t{}\t{}\n",
                    r.order,
                    r.count,
                    classified,
                    if r.ok { "PASS" } else { "FAIL" }
                );
            }
            Ok(s)
        }
    }
}

fn galkin_cmd(cmd: &GalkinCmd, limits: &Limits, as_json: bool) -> Res<String> {
    match cmd {
        GalkinCmd::Build { spec } => {
            let spec = parse_spec(spec)?;
            let built = galkin::build(&spec, limits)?;
            let report = BuildReport {
                spec: spec.to_string(),
                order: built.table.order(),
                legend: built.legend.iter().map(|(x, a)| (*x, a.coords().to_vec())).collect(),
                table: built.table.rows(),
            };
            if as_json {
                return json(&report);
            }
            let mut s = format!("# {}\n", report.spec);
            for (i, (x, a)) in built.legend.iter().enumerate() {
                s += &format!("# {i} = ({x}, {a})\n");
            }
            Ok(s + &table_text(&built.table))
        }
        GalkinCmd::Props { spec } => {
            let spec = parse_spec(spec)?;
            let built = galkin::build(&spec, limits)?;
            let computed = quandle::property_report(&built.table);
            let predicted = galkin::predicted_properties(&spec);
            let normalized = galkin::normalize(&spec).spec;
            let report = GalkinPropsReport {
                spec: spec.to_string(),
                normalized: normalized.to_string(),
                rig_name: galkin::rig_name(&spec, limits)?.map(str::to_string),
                agree: computed == predicted,
                computed,
                predicted,
            };
            if as_json {
                return json(&report);
            }
            let mut s = format!("{} (normalized {})\n", report.spec, report.normalized);
            if let Some(name) = &report.rig_name {
                s += &format!("rig name: {name}\n");
            }
            s += &report_text(&report.computed);
            s += &format!("matches closed-form prediction: {}\n", report.agree);
            Ok(s)
        }
        GalkinCmd::Normalize { spec } => {
            let spec = parse_spec(spec)?;
            let n = galkin::normalize(&spec);
            let report = NormalizeReport {
                spec: spec.to_string(),
                normalized: n.spec.to_string(),
                eta: n.eta,
            };
            if as_json {
                return json(&report);
            }
            let eta: Vec<String> = report.eta.iter().map(usize::to_string).collect();
            Ok(format!("{}\neta: {}\n", report.normalized, eta.join(" ")))
        }
        GalkinCmd::Iso { first, second } => {
            let (s, t) = (parse_spec(first)?, parse_spec(second)?);
            let report = if s.order() != t.order() {
                IsoReport {
                    isomorphic: false,
                    reason: "orders differ".into(),
                    witness: None,
                }
            } else {
                match galkin::galkin_isomorphic(&s, &t, limits)? {
                    Some(aut) => IsoReport {
                        isomorphic: true,
                        reason: "pointed groups are isomorphic".into(),
                        witness: Some(aut.generator_images.iter().map(ToString::to_string).collect()),
                    },
                    None => {
                        let (ts, tt) = (galkin::build(&s, limits)?.table, galkin::build(&t, limits)?.table);
                        let same =
                            quandle::property_report(&ts).cycle_profile == quandle::property_report(&tt).cycle_profile;
                        let profiles = if same {
                            "cycle profiles equal"
                        } else {
                            "cycle profiles differ"
                        };
                        IsoReport {
                            isomorphic: false,
                            reason: format!("pointed orbits differ; {profiles}"),
                            witness: None,
                        }
                    }
                }
            };
            if as_json {
                return json(&report);
            }
            Ok(match (&report.witness, report.isomorphic) {
                (Some(w), true) => format!("isomorphic (generator images {})\n", w.join(" ")),
                _ => format!("not isomorphic ({})\n", report.reason),
            })
        }
        GalkinCmd::Classify { order } => {
            let specs = galkin::classify_order(*order, limits)?;
            let mut classes = Vec::new();
            for spec in &specs {
                classes.push(ClassEntry {
                    group: spec.group.to_string(),
                    point: spec.c2.to_string(),
                    rig_name: galkin::rig_name(spec, limits)?.map(str::to_string),
                    properties: galkin::predicted_properties(spec),
                });
            }
            let report = ClassificationReport { order: *order, classes };
            if as_json {
                return json(&report);
            }
            let mut s = format!("{} classes of order {}\n", specs.len(), order);
            for (spec, c) in specs.iter().zip(&report.classes) {
                match &c.rig_name {
                    Some(name) => s += &format!("{spec}\t{name}\n"),
                    None => s += &format!("{spec}\n"),
                }
            }
            Ok(s)
        }
    }
}

fn quandle_cmd(cmd: &QuandleCmd, limits: &Limits, as_json: bool) -> Res<String> {
    match cmd {
        QuandleCmd::Check { quandle, input } => {
            // axiom failures are a result here, not an error
            let report = match load_quandle(quandle, input.transposed, limits) {
                Ok(t) => CheckReport {
                    order: t.order(),
                    valid: true,
                    violation: None,
                },
                Err(Error::Axiom(v)) => CheckReport {
                    order: 0,
                    valid: false,
                    violation: Some(v.to_string()),
                },
                Err(e) => return Err(e),
            };
            if as_json {
                return json(&report);
            }
            Ok(match &report.violation {
                None => format!("valid quandle of order {}\n", report.order),
                Some(v) => format!("not a quandle: {v}\n"),
            })
        }
        QuandleCmd::Props { quandle, input } => {
            let t = load_quandle(quandle, input.transposed, limits)?;
            let report = quandle::property_report(&t);
            if as_json {
                return json(&report);
            }
            Ok(format!("order: {}\n{}", t.order(), report_text(&report)))
        }
        QuandleCmd::Iso { first, second, input } => {
            let t = load_quandle(first, input.transposed, limits)?;
            let u = load_quandle(second, input.transposed, limits)?;
            let report = match quandle::isomorphism(&t, &u) {
                Some(w) => IsoReport {
                    isomorphic: true,
                    reason: "witness found".into(),
                    witness: Some(w.bijection.iter().map(usize::to_string).collect()),
                },
                None if t.order() != u.order() => IsoReport {
                    isomorphic: false,
                    reason: "orders differ".into(),
                    witness: None,
                },
                None => IsoReport {
                    isomorphic: false,
                    reason: "no bijection preserves the operation".into(),
                    witness: None,
                },
            };
            if as_json {
                return json(&report);
            }
            Ok(match &report.witness {
                Some(w) => format!("isomorphic: {}\n", w.join(" ")),
                None => format!("not isomorphic ({})\n", report.reason),
            })
        }
        QuandleCmd::Involutions { quandle, input } => {
            let t = load_quandle(quandle, input.transposed, limits)?;
            let report = InvolutionReport {
                order: t.order(),
                involutions: quandle::good_involutions(&t, limits)?,
            };
            if as_json {
                return json(&report);
            }
            let mut s = format!("{} good involutions\n", report.involutions.len());
            for rho in &report.involutions {
                let rho: Vec<String> = rho.iter().map(usize::to_string).collect();
                s += &rho.join(" ");
                s.push('\n');
            }
            Ok(s)
        }
        QuandleCmd::Identify { quandle, input } => {
            let t = load_quandle(quandle, input.transposed, limits)?;
            let census = enumeration::enumerate_connected(t.order(), limits)?;
            let report = IdentifyReport {
                order: t.order(),
                index: enumeration::identify(&t, &census),
                census_size: census.len(),
            };
            if as_json {
                return json(&report);
            }
            Ok(match report.index {
                Some(i) => format!("q{}_{} (of {})\n", report.order, i, report.census_size),
                None => format!("not in the connected census of order {}\n", report.order),
            })
        }
    }
}

fn knot_cmd(cmd: &KnotCmd, limits: &Limits, as_json: bool) -> Res<String> {
    match cmd {
        KnotCmd::Color {
            knot,
            quandle,
            dataset: path,
            input,
        } => {
            let braid = resolve_braid(knot, path)?;
            let t = load_quandle(quandle, input.transposed, limits)?;
            let colorings = knots::count_colorings(&braid, &t, limits)?;
            let report = ColorReport {
                braid: braid.to_string(),
                quandle: quandle.clone(),
                colorings,
                nontrivial: colorings > t.order() as u64,
            };
            if as_json {
                return json(&report);
            }
            Ok(format!("{}\n", report.colorings))
        }
        KnotCmd::Det { knot, dataset: path } => {
            let braid = resolve_braid(knot, path)?;
            let report = DetReport {
                braid: braid.to_string(),
                determinant: knots::determinant(&braid)?,
            };
            if as_json {
                return json(&report);
            }
            Ok(format!("{}\n", report.determinant))
        }
        KnotCmd::Profile {
            quandles,
            dataset: path,
            input,
        } => {
            let records = dataset(path)?;
            let names: Vec<String> = quandles
                .split(';')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect();
            if names.is_empty() {
                return Err(Error::Domain("no quandles given".into()));
            }
            let tables = names
                .iter()
                .map(|n| load_quandle(n, input.transposed, limits))
                .collect::<Res<Vec<_>>>()?;
            let profile = knots::coloring_profile(&records, &tables, limits)?;
            let report = ProfileReport {
                knots: records.iter().map(|k| k.name.clone()).collect(),
                quandles: names,
                counts: profile.counts,
                count_classes: profile.count_classes,
                nontrivial_classes: profile.nontrivial_classes,
            };
            if as_json {
                return json(&report);
            }
            let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
            let mut s = std::iter::once("knot".to_string())
                .chain(report.quandles.iter().map(|q| quote(q)))
                .collect::<Vec<_>>()
                .join(",");
            s.push('\n');
            for (name, row) in report.knots.iter().zip(&report.counts) {
                s += &std::iter::once(name.clone())
                    .chain(row.iter().map(u64::to_string))
                    .collect::<Vec<_>>()
                    .join(",");
                s.push('\n');
            }
            Ok(s)
        }
    }
}
