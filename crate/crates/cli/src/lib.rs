//! Command dispatch for the `aristotle` binary.
//!
//! [`run`] is the whole program minus process plumbing: it takes the
//! argument list and I/O handles and returns the exit status, so tests can
//! drive it in-process.
//!
//! Exit status: 0 on success, 1 when a requested property fails, 2 on
//! malformed input or usage.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use aristotle_core::degree::{contradiction_degree, OperatorRegistry};
use aristotle_core::diagram::{
    canonical_square, check_infomorphism, check_iso, find_isos, informativity_leq, relation_table,
    DiagramMap,
};
use aristotle_core::dot::{annotated_square_to_dot, diagram_to_dot, fuzzy_diagram_to_dot};
use aristotle_core::fuzzy_diagram::{annotate_square, verify_category_laws, FuzzyDiagramMap};
use aristotle_core::iflattice::LatticeReport;
use aristotle_core::records::{DiagramRecord, Document, DocumentKind};
use aristotle_core::sample;
use aristotle_core::{
    Degree, Diagram, Error, FuzzyAristotelianDiagram, FuzzySet, IFLattice, IFRelation,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(
    name = "aristotle",
    version,
    about = "Crisp and intuitionistic fuzzy Aristotelian diagrams"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a JSON document against its schema and invariants.
    Validate {
        file: PathBuf,
        /// Document kind; detected from the top-level keys when omitted.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Relation table of a diagram.
    Classify { file: PathBuf },
    /// The built-in square of opposition.
    CanonicalSquare {
        /// Annotate the contradiction edges with (1/2, NU).
        #[arg(long, value_name = "NU")]
        contradiction_nu: Option<String>,
    },
    /// Find isomorphisms between two diagrams, or check one mapping.
    Iso {
        source: PathBuf,
        target: PathBuf,
        /// Comma-separated target indices, one per source element.
        #[arg(long)]
        mapping: Option<String>,
    },
    /// Check that a mapping is an infomorphism.
    Info {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        mapping: String,
    },
    /// Order properties of an IF relation.
    IfrelCheck { file: PathBuf },
    /// Lattice, distributivity, complements, De Morgan and Boolean algebra checks.
    LatticeCheck { file: PathBuf },
    /// Degree of contradiction between two fuzzy sets.
    Contradiction {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value = "standard")]
        negation: String,
        #[arg(long, default_value = "kleene-dienes")]
        implication: String,
    },
    /// Relation table of a fuzzy diagram (crisp diagrams are embedded).
    FuzzyClassify {
        file: PathBuf,
        #[arg(long)]
        tolerance: Option<String>,
    },
    /// Category laws on seeded random chains of fuzzy infomorphisms.
    CategoryCheck(CategoryArgs),
    /// Render a diagram as a Graphviz graph.
    Dot { file: PathBuf },
}

#[derive(Debug, Args)]
pub struct CategoryArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub chains: usize,
    #[arg(long, default_value_t = 3)]
    pub max_atoms: usize,
}

/// Everything a command needs besides its arguments.
pub struct Context<'a> {
    pub stdin: &'a mut dyn Read,
    /// Plain ASCII check marks, for `NO_COLOR`.
    pub plain: bool,
}

struct Failure {
    code: i32,
    message: String,
}

type CmdResult = std::result::Result<Output, Failure>;

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn verdict(text: String, passed: bool) -> Self {
        Output {
            text,
            code: if passed { 0 } else { 1 },
        }
    }
}

fn malformed(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn invalid(source: &Path, err: Error) -> Failure {
    malformed(format!("{}: {}", source.display(), err))
}

pub fn run<I, T>(args: I, ctx: &mut Context<'_>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(&cli, ctx) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, ctx: &mut Context<'_>) -> CmdResult {
    let marks = Marks::new(ctx.plain);
    let format = cli.format;
    match &cli.command {
        Command::Validate { file, kind } => validate(ctx, file, kind.as_deref(), format, &marks),
        Command::Classify { file } => {
            let diagram = load_diagram(ctx, file)?;
            emit_diagram(&name_of(file), &diagram, format)
        }
        Command::CanonicalSquare { contradiction_nu } => {
            canonical(contradiction_nu.as_deref(), format)
        }
        Command::Iso {
            source,
            target,
            mapping,
        } => iso(ctx, source, target, mapping.as_deref(), format, &marks),
        Command::Info {
            source,
            target,
            mapping,
        } => info(ctx, source, target, mapping, format, &marks),
        Command::IfrelCheck { file } => ifrel_check(ctx, file, format, &marks),
        Command::LatticeCheck { file } => lattice_check(ctx, file, format, &marks),
        Command::Contradiction {
            a,
            b,
            negation,
            implication,
        } => contradiction(ctx, a, b, negation, implication, format),
        Command::FuzzyClassify { file, tolerance } => {
            fuzzy_classify(ctx, file, tolerance.as_deref(), format)
        }
        Command::CategoryCheck(args) => category_check(args, format, &marks),
        Command::Dot { file } => dot(ctx, file),
    }
}

struct Marks {
    pass: &'static str,
    fail: &'static str,
    na: &'static str,
}

impl Marks {
    fn new(plain: bool) -> Self {
        if plain {
            Marks {
                pass: "yes",
                fail: "no",
                na: "n/a",
            }
        } else {
            Marks {
                pass: "✓",
                fail: "✗",
                na: "–",
            }
        }
    }

    fn of(&self, b: bool) -> &'static str {
        if b {
            self.pass
        } else {
            self.fail
        }
    }

    fn opt(&self, b: Option<bool>) -> &'static str {
        b.map_or(self.na, |b| self.of(b))
    }
}

fn read_input(ctx: &mut Context<'_>, path: &Path) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        ctx.stdin
            .read_to_string(&mut text)
            .map_err(|e| malformed(format!("<stdin>: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
    }
}

fn json_error(path: &Path, e: &serde_json::Error) -> Failure {
    malformed(format!(
        "{}:{}:{}: {}",
        path.display(),
        e.line(),
        e.column(),
        strip_position(&e.to_string())
    ))
}

/// serde_json appends " at line L column C"; the position is already in
/// the prefix.
fn strip_position(msg: &str) -> &str {
    msg.rfind(" at line ").map_or(msg, |i| &msg[..i])
}

/// Parses a document of one of `allowed` kinds, detecting which from the
/// top-level keys.
fn load(
    ctx: &mut Context<'_>,
    path: &Path,
    allowed: &[DocumentKind],
) -> std::result::Result<Document, Failure> {
    let text = read_input(ctx, path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| json_error(path, &e))?;
    let kind = DocumentKind::detect(&value)
        .filter(|k| allowed.contains(k))
        .or_else(|| (allowed.len() == 1).then(|| allowed[0]))
        .ok_or_else(|| {
            let names: Vec<&str> = allowed.iter().map(|k| k.name()).collect();
            malformed(format!(
                "{}: expected a {} document",
                path.display(),
                names.join(" or ")
            ))
        })?;
    Document::parse(&text, kind).map_err(|e| json_error(path, &e))
}

fn load_diagram(ctx: &mut Context<'_>, path: &Path) -> std::result::Result<Diagram, Failure> {
    match load(ctx, path, &[DocumentKind::Diagram])? {
        Document::Diagram(r) => r.build().map_err(|e| invalid(path, e)),
        _ => unreachable!(),
    }
}

fn load_fuzzy_diagram(
    ctx: &mut Context<'_>,
    path: &Path,
) -> std::result::Result<FuzzyAristotelianDiagram, Failure> {
    match load(
        ctx,
        path,
        &[DocumentKind::FuzzyDiagram, DocumentKind::Diagram],
    )? {
        Document::FuzzyDiagram(r) => r.build().map_err(|e| invalid(path, e)),
        Document::Diagram(r) => {
            let d = r.build().map_err(|e| invalid(path, e))?;
            FuzzyAristotelianDiagram::from_crisp(&d).map_err(|e| invalid(path, e))
        }
        _ => unreachable!(),
    }
}

fn load_relation(ctx: &mut Context<'_>, path: &Path) -> std::result::Result<IFRelation, Failure> {
    let doc = load(
        ctx,
        path,
        &[
            DocumentKind::Relation,
            DocumentKind::Lattice,
            DocumentKind::Algebra,
        ],
    )?;
    let rel = match doc {
        Document::Relation(r) => r.build(),
        Document::Lattice(r) => r.relation(),
        Document::Algebra(r) => r
            .build()
            .and_then(|a| IFLattice::from_powerset(&a))
            .map(|l| l.order().clone()),
        _ => unreachable!(),
    };
    rel.map_err(|e| invalid(path, e))
}

fn load_fuzzy_set(ctx: &mut Context<'_>, path: &Path) -> std::result::Result<FuzzySet, Failure> {
    match load(ctx, path, &[DocumentKind::FuzzySet])? {
        Document::FuzzySet(s) => Ok(s),
        _ => unreachable!(),
    }
}

fn name_of(path: &Path) -> String {
    if path.as_os_str() == "-" {
        return "stdin".to_string();
    }
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "diagram".to_string())
}

fn parse_degree(flag: &str, text: &str) -> std::result::Result<Degree, Failure> {
    text.parse()
        .map_err(|e: Error| malformed(format!("--{flag} `{text}`: {e}")))
}

fn parse_mapping(text: &str) -> std::result::Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| malformed(format!("--mapping: `{}` is not an index", s.trim())))
        })
        .collect()
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn no_dot(command: &str) -> Failure {
    malformed(format!(
        "`{command}` has no dot output; use --format text or json"
    ))
}

fn validate(
    ctx: &mut Context<'_>,
    file: &Path,
    kind: Option<&str>,
    format: Format,
    marks: &Marks,
) -> CmdResult {
    let allowed: Vec<DocumentKind> = match kind {
        Some(k) => vec![k
            .parse()
            .map_err(|e: Error| malformed(format!("--kind: {e}")))?],
        None => DocumentKind::ALL.to_vec(),
    };
    let doc = load(ctx, file, &allowed)?;
    let kind = doc.kind().name();
    let result = doc.validate();
    let valid = result.is_ok();
    let text = match format {
        Format::Text => match &result {
            Ok(summary) => format!(
                "{} {}: valid {kind}: {summary}\n",
                marks.pass,
                file.display()
            ),
            Err(e) => format!("{} {}: invalid {kind}: {e}\n", marks.fail, file.display()),
        },
        Format::Json => pretty(&json!({
            "file": file.display().to_string(),
            "kind": kind,
            "valid": valid,
            "summary": result.as_ref().ok(),
            "error": result.as_ref().err().map(|e| e.to_string()),
        })),
        Format::Dot => return Err(no_dot("validate")),
    };
    Ok(Output::verdict(text, valid))
}

fn emit_diagram(name: &str, diagram: &Diagram, format: Format) -> CmdResult {
    let table = relation_table(diagram);
    Ok(Output::ok(match format {
        Format::Text => table.render_text(),
        Format::Json => pretty(&serde_json::to_value(&table).expect("tables serialize")),
        Format::Dot => diagram_to_dot(name, diagram),
    }))
}

fn canonical(contradiction_nu: Option<&str>, format: Format) -> CmdResult {
    let Some(nu) = contradiction_nu else {
        let square = canonical_square();
        return match format {
            Format::Json => Ok(Output::ok(pretty(&json!({
                "diagram": DiagramRecord::from_diagram(&square),
                "table": relation_table(&square),
            })))),
            _ => emit_diagram("square", &square, format),
        };
    };
    let nu = parse_degree("contradiction-nu", nu)?;
    let square = annotate_square(&nu).map_err(|e| malformed(e.to_string()))?;
    let labels = square.diagram.labels();
    Ok(Output::ok(match format {
        Format::Text => {
            let mut out = String::new();
            for e in &square.edges {
                out.push_str(&format!(
                    "{} — {}: {} {}\n",
                    labels[e.from], labels[e.to], e.kind, e.pair
                ));
            }
            out
        }
        Format::Json => pretty(&json!({
            "diagram": DiagramRecord::from_diagram(&square.diagram),
            "edges": square.edges,
        })),
        Format::Dot => annotated_square_to_dot("square", &square),
    }))
}

fn iso(
    ctx: &mut Context<'_>,
    source: &Path,
    target: &Path,
    mapping: Option<&str>,
    format: Format,
    marks: &Marks,
) -> CmdResult {
    let d1 = load_diagram(ctx, source)?;
    let d2 = load_diagram(ctx, target)?;
    if format == Format::Dot {
        return Err(no_dot("iso"));
    }
    match mapping {
        Some(m) => {
            let mapping = parse_mapping(m)?;
            let map =
                DiagramMap::new(&d1, &d2, mapping.clone()).map_err(|e| malformed(e.to_string()))?;
            let (ok, reason) = match check_iso(&map) {
                Ok(true) => (true, None),
                Ok(false) => (false, Some("a relation is not preserved".to_string())),
                Err(e) => (false, Some(e.to_string())),
            };
            let text = match format {
                Format::Json => {
                    pretty(&json!({"mapping": mapping, "isomorphism": ok, "reason": reason}))
                }
                _ => match reason {
                    None => format!("{} {:?} is an isomorphism\n", marks.pass, mapping),
                    Some(r) => format!("{} {:?} is not an isomorphism: {r}\n", marks.fail, mapping),
                },
            };
            Ok(Output::verdict(text, ok))
        }
        None => {
            let isos = find_isos(&d1, &d2).map_err(|e| malformed(e.to_string()))?;
            let found = !isos.is_empty();
            let text = match format {
                Format::Json => pretty(&json!({ "isomorphisms": isos })),
                _ => {
                    let mut out = format!("{} isomorphism(s)\n", isos.len());
                    for m in &isos {
                        out.push_str(&format!("  {m:?}\n"));
                    }
                    out
                }
            };
            Ok(Output::verdict(text, found))
        }
    }
}

fn info(
    ctx: &mut Context<'_>,
    source: &Path,
    target: &Path,
    mapping: &str,
    format: Format,
    marks: &Marks,
) -> CmdResult {
    let d1 = load_diagram(ctx, source)?;
    let d2 = load_diagram(ctx, target)?;
    if format == Format::Dot {
        return Err(no_dot("info"));
    }
    let mapping = parse_mapping(mapping)?;
    let map = DiagramMap::new(&d1, &d2, mapping.clone()).map_err(|e| malformed(e.to_string()))?;
    let ok = check_infomorphism(&map);
    let n = d1.len();
    let violations: Vec<Value> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter_map(|(i, j)| {
            let before = d1.relation(i, j);
            let after = d2.relation(mapping[i], mapping[j]);
            (!informativity_leq(before, after))
                .then(|| json!({"from": i, "to": j, "source": before, "target": after}))
        })
        .collect();
    let text = match format {
        Format::Json => pretty(&json!({
            "mapping": mapping,
            "infomorphism": ok,
            "violations": violations,
        })),
        _ => {
            let mut out = format!(
                "{} {:?} is {}an infomorphism\n",
                marks.of(ok),
                mapping,
                if ok { "" } else { "not " }
            );
            for v in &violations {
                out.push_str(&format!(
                    "  ({}, {}): {} became {}\n",
                    d1.labels()[v["from"].as_u64().unwrap() as usize],
                    d1.labels()[v["to"].as_u64().unwrap() as usize],
                    v["source"].as_str().unwrap_or("?"),
                    v["target"].as_str().unwrap_or("?"),
                ));
            }
            out
        }
    };
    Ok(Output::verdict(text, ok))
}

fn ifrel_check(ctx: &mut Context<'_>, file: &Path, format: Format, marks: &Marks) -> CmdResult {
    let rel = load_relation(ctx, file)?;
    let report = rel.order_report().map_err(|e| invalid(file, e))?;
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(report).expect("reports serialize")),
        Format::Text => format!(
            "reflexive               {}\nperfectly antisymmetric {}\ntransitive              {}\npartial order           {}\n",
            marks.of(report.reflexive),
            marks.of(report.perfectly_antisymmetric),
            marks.of(report.transitive),
            marks.of(report.partial_order),
        ),
        Format::Dot => return Err(no_dot("ifrel-check")),
    };
    Ok(Output::verdict(text, report.partial_order))
}

fn lattice_check(ctx: &mut Context<'_>, file: &Path, format: Format, marks: &Marks) -> CmdResult {
    let rel = load_relation(ctx, file)?;
    let report = LatticeReport::for_relation(&rel).map_err(|e| invalid(file, e))?;
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report).expect("reports serialize")),
        Format::Text => {
            let rows = [
                ("partial order", Some(report.order.partial_order)),
                ("lattice", report.lattice),
                ("distributive", report.distributive),
                ("complemented", report.complemented),
                ("De Morgan", report.de_morgan),
                ("IF Boolean algebra", Some(report.boolean_algebra)),
            ];
            rows.iter()
                .map(|(name, v)| format!("{name:<19} {}\n", marks.opt(*v)))
                .collect()
        }
        Format::Dot => return Err(no_dot("lattice-check")),
    };
    Ok(Output::verdict(text, report.boolean_algebra))
}

fn contradiction(
    ctx: &mut Context<'_>,
    a: &Path,
    b: &Path,
    negation: &str,
    implication: &str,
    format: Format,
) -> CmdResult {
    let ops = OperatorRegistry::builtin()
        .choice(negation, implication)
        .map_err(|e| malformed(e.to_string()))?;
    let sa = load_fuzzy_set(ctx, a)?;
    let sb = load_fuzzy_set(ctx, b)?;
    let c = contradiction_degree(&sa, &sb, &ops).map_err(|e| malformed(e.to_string()))?;
    Ok(Output::ok(match format {
        Format::Json => pretty(&json!({
            "negation": ops.negation_name(),
            "implication": ops.implication_name(),
            "contradiction": c,
        })),
        Format::Text => {
            let mut out = format!(
                "contradiction degree {} ({}, {} negation)\n",
                c.scalar,
                ops.implication_name(),
                ops.negation_name()
            );
            for (x, d) in &c.pointwise {
                out.push_str(&format!("  {x}: {d}\n"));
            }
            out
        }
        Format::Dot => return Err(no_dot("contradiction")),
    }))
}

fn fuzzy_classify(
    ctx: &mut Context<'_>,
    file: &Path,
    tolerance: Option<&str>,
    format: Format,
) -> CmdResult {
    let mut diagram = load_fuzzy_diagram(ctx, file)?;
    if let Some(t) = tolerance {
        diagram = diagram.with_tolerance(parse_degree("tolerance", t)?);
    }
    let table = diagram.relation_table();
    Ok(Output::ok(match format {
        Format::Text => table.render_text(),
        Format::Json => pretty(&serde_json::to_value(&table).expect("tables serialize")),
        Format::Dot => fuzzy_diagram_to_dot(&name_of(file), &diagram),
    }))
}

fn category_check(args: &CategoryArgs, format: Format, marks: &Marks) -> CmdResult {
    if !(1..=4).contains(&args.max_atoms) {
        return Err(malformed("--max-atoms must be between 1 and 4"));
    }
    let mut rng = sample::rng(args.seed);
    let chains: Vec<sample::SampleChain> = (0..args.chains)
        .map(|_| sample::infomorphism_chain(&mut rng, 3, args.max_atoms))
        .collect();
    let triples: Vec<[FuzzyDiagramMap<'_>; 3]> = chains
        .iter()
        .map(|c| {
            let maps = c.maps();
            [maps[0].clone(), maps[1].clone(), maps[2].clone()]
        })
        .collect();
    let report = verify_category_laws(&triples);
    let ok = report.all_passed();
    let text = match format {
        Format::Json => pretty(&json!({"seed": args.seed, "report": report})),
        Format::Text => format!(
            "seed {}\n{}",
            args.seed,
            report.render_text(marks.pass, marks.fail)
        ),
        Format::Dot => return Err(no_dot("category-check")),
    };
    Ok(Output::verdict(text, ok))
}

fn dot(ctx: &mut Context<'_>, file: &Path) -> CmdResult {
    let name = name_of(file);
    match load(
        ctx,
        file,
        &[DocumentKind::Diagram, DocumentKind::FuzzyDiagram],
    )? {
        Document::Diagram(r) => {
            let d = r.build().map_err(|e| invalid(file, e))?;
            Ok(Output::ok(diagram_to_dot(&name, &d)))
        }
        Document::FuzzyDiagram(r) => {
            let d = r.build().map_err(|e| invalid(file, e))?;
            Ok(Output::ok(fuzzy_diagram_to_dot(&name, &d)))
        }
        _ => unreachable!(),
    }
}
