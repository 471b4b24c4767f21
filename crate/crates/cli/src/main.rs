use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use libra_core::engine::{self, Budget, Fragment, FragmentSpec, StageTrace};
use libra_core::substitution::{self, CodedExpr};
use libra_core::syntax::{self, Form, Formation, ParseMode};
use libra_core::{audit, codec, enumeration, goedel, scenario, Category, Error, Expr};

#[derive(Parser)]
#[command(
    name = "libra",
    version,
    about = "Workbench for the librationist system £"
)]
struct Cli {
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    /// Worker threads for the engine.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Successor steps recorded per ω-block.
    #[arg(long, global = true)]
    max_steps: Option<usize>,
    /// ω-blocks simulated before giving up.
    #[arg(long, global = true)]
    max_blocks: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Term,
    Formula,
}

#[derive(Clone, Copy, ValueEnum)]
enum Surface {
    Austere,
    Bare,
    Presentable,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an austere, bare or presentable expression.
    Parse {
        input: String,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
    },
    /// Print an expression in another surface form.
    Print {
        input: String,
        #[arg(long, value_enum, default_value = "presentable")]
        form: Surface,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
    },
    /// The number a formation or expression denotes.
    Encode { input: String },
    /// The formation a decimal, hexadecimal or austere number denotes.
    Decode { input: String },
    /// The numeral code ⌜n⌝ of a number or expression.
    Code {
        input: String,
        /// Largest code materialized, in bits.
        #[arg(long, default_value_t = 8192)]
        budget_bits: u64,
    },
    /// sub(x, i, y): put the expression coded by y for v_i in the one coded by x.
    Sub { x: String, i: u64, y: String },
    /// Diagonal sentence for a formula whose only noema is v0.
    Diag { formula: String },
    /// Prefix of the enumeration of cognomina.
    Enum {
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 22)]
        max_bits: u32,
    },
    /// Run a fragment file and report every declared formula.
    Simulate { file: PathBuf },
    /// Classify formulas over a fragment file.
    Classify {
        file: PathBuf,
        #[arg(required = true)]
        formulas: Vec<String>,
    },
    /// Valency relations between two formulas over a fragment file.
    Relations { file: PathBuf, a: String, b: String },
    /// Check posits and regulations over a fragment file.
    Audit { file: PathBuf },
    /// The shipped paradox corpus.
    Scenario {
        #[command(subcommand)]
        command: ScenarioCommand,
    },
}

#[derive(Subcommand)]
enum ScenarioCommand {
    /// Run a shipped scenario and compare with its expected verdicts.
    Run { name: String },
    /// Names and summaries of the shipped scenarios.
    List,
}

/// Command output: the JSON payload, its text rendering, and whether the
/// result counts as a failure.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Output {
        Output {
            json,
            text,
            failed: false,
        }
    }
}

type Result<T> = std::result::Result<T, Error>;

fn mode(m: Mode) -> ParseMode {
    match m {
        Mode::Auto => ParseMode::Auto,
        Mode::Term => ParseMode::Term,
        Mode::Formula => ParseMode::Formula,
    }
}

fn is_number(t: &str) -> bool {
    let t = t.trim();
    (!t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()))
        || t.starts_with("0x")
        || t.starts_with("0X")
}

fn expression(text: &str, m: ParseMode) -> Result<Expr> {
    Ok(syntax::read(text, m)?.expr)
}

fn coded(text: &str) -> Result<CodedExpr> {
    if is_number(text) {
        Ok(CodedExpr::from_number(&codec::read_number(text)?))
    } else {
        Ok(CodedExpr::of(&expression(text, ParseMode::Auto)?))
    }
}

fn env_usize(name: &str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Invalid(format!("{name}={v} is not a number"))),
        Err(_) => Ok(None),
    }
}

/// Budget from the file, then the environment, then flags.
fn budget(cli: &Cli, base: Budget) -> Result<Budget> {
    let steps = cli
        .max_steps
        .or(env_usize("LIBRA_BUDGET_MAX_STEPS_PER_BLOCK")?);
    let blocks = cli.max_blocks.or(env_usize("LIBRA_BUDGET_MAX_BLOCKS")?);
    Ok(Budget {
        max_steps_per_block: steps.unwrap_or(base.max_steps_per_block),
        max_blocks: blocks.unwrap_or(base.max_blocks),
    })
}

fn load(cli: &Cli, file: &PathBuf) -> Result<FragmentSpec> {
    let mut spec = FragmentSpec::load(file)?;
    spec.budget = budget(cli, spec.budget)?;
    Ok(spec)
}

fn expr_json(e: &Expr) -> Value {
    json!({
        "category": e.category().to_string(),
        "presentable": e.to_string(),
        "bare": syntax::print(e, Form::Bare),
        "austere": syntax::print(e, Form::Austere),
        "value": e.value().to_string(),
        "bit_length": e.bit_len(),
        "noemata": e.noemata(),
    })
}

fn parse_cmd(input: &str, m: Mode) -> Result<Output> {
    let e = expression(input, mode(m))?;
    let mut j = expr_json(&e);
    let mut text = format!(
        "category: {}\npresentable: {}\nbare: {}\nvalue: {}\nbits: {}\n",
        e.category(),
        e,
        syntax::print(&e, Form::Bare),
        e.value(),
        e.bit_len()
    );
    if e.is_term() {
        let class = syntax::classify_term(&e)?;
        let caliber = syntax::caliber(&e)?;
        j["class"] = json!(class.label());
        j["caliber"] = json!(caliber);
        text.push_str(&format!("class: {}\ncaliber: {caliber}\n", class.label()));
    }
    Ok(Output::ok(j, text))
}

fn print_cmd(input: &str, form: Surface, m: Mode) -> Result<Output> {
    let e = expression(input, mode(m))?;
    let form = match form {
        Surface::Austere => Form::Austere,
        Surface::Bare => Form::Bare,
        Surface::Presentable => Form::Presentable,
    };
    let s = syntax::print(&e, form);
    Ok(Output::ok(json!(s), format!("{s}\n")))
}

fn encode_cmd(input: &str) -> Result<Output> {
    let t = input.trim();
    let n = if t.starts_with('|') {
        Formation::parse_text(t)?.value()
    } else {
        expression(t, ParseMode::Auto)?.value()
    };
    let j = json!({ "value": n.to_string(), "hex": format!("0x{}", n.to_str_radix(16)), "bits": n.bits() });
    Ok(Output::ok(j, format!("{n}\n")))
}

fn decode_cmd(input: &str) -> Result<Output> {
    let n = codec::read_number(input)?;
    let f = codec::formation_of(&n)?;
    let mut text = format!("{}\n{}\n", f.austere(), f.bare());
    let mut readings = Vec::new();
    for cat in [Category::Term, Category::Formula] {
        for e in syntax::parse_readings(f.symbols(), cat) {
            text.push_str(&format!("{cat}: {e}\n"));
            readings.push(json!({ "category": cat.to_string(), "presentable": e.to_string() }));
        }
    }
    let j = json!({
        "value": n.to_string(),
        "austere": f.austere(),
        "bare": f.bare(),
        "length": codec::length(&n),
        "readings": readings,
    });
    Ok(Output::ok(j, text))
}

fn code_cmd(input: &str, budget_bits: u64) -> Result<Output> {
    let n: BigUint = if is_number(input) {
        codec::read_number(input)?
    } else {
        expression(input, ParseMode::Auto)?.value()
    };
    let c = goedel::goedel_code(&n);
    let bits = c.bit_length().map(|b| b.to_string());
    let mut j = json!({ "source": n.to_string(), "bit_length": bits, "budget_bits": budget_bits });
    let mut text = format!(
        "source: {n}\nbit_length: {}\n",
        bits.as_deref().unwrap_or("too large to count")
    );
    match c.materialize(budget_bits) {
        Ok(m) => {
            let f = codec::formation_of(&m)?;
            j["austere"] = json!(f.austere());
            text.push_str(&format!("austere: {}\n", f.austere()));
            if let Some(e) = c.as_expr() {
                j["presentable"] = json!(e.to_string());
                text.push_str(&format!("presentable: {e}\n"));
            }
        }
        Err(e) if e.is_budget() => {
            j["materialized"] = json!(false);
            text.push_str(&format!("not materialized: {e}\n"));
        }
        Err(e) => return Err(e),
    }
    Ok(Output::ok(j, text))
}

fn sub_cmd(x: &str, i: u64, y: &str) -> Result<Output> {
    let r = substitution::sub(&coded(x)?, i, &coded(y)?)?;
    let shown = r.expr().map(|e| e.to_string());
    let j = json!({ "value": r.source().to_string(), "presentable": shown });
    Ok(Output::ok(
        j,
        format!(
            "{}\n{}\n",
            r.source(),
            shown.as_deref().unwrap_or("(not an expression)")
        ),
    ))
}

fn diag_cmd(formula: &str) -> Result<Output> {
    let a = expression(formula, ParseMode::Formula)?;
    let d = substitution::diagonal(&a)?;
    let c = &d.certificate;
    let mut text = format!(
        "A: {}\nD: {}\nm: {} ({} bits)\nB: {} with v{} := ⌜m⌝\n",
        c.input, c.carrier, c.m, c.m_bits, c.sentence_template, c.hole
    );
    for s in &c.steps {
        text.push_str(&format!("  {s}\n"));
    }
    text.push_str(if c.verified {
        "verified\n"
    } else {
        "NOT verified\n"
    });
    let json = serde_json::to_value(c).expect("certificate serializes");
    Ok(Output {
        json,
        text,
        failed: !c.verified,
    })
}

fn enum_cmd(count: usize, max_bits: u32) -> Result<Output> {
    let p = enumeration::enumerate(count, max_bits)?;
    let mut text = String::new();
    for e in &p.entries {
        let flag = if e.unknown_against.is_empty() {
            ""
        } else {
            "  (admitted on unknown verdicts)"
        };
        text.push_str(&format!(
            "{:>3}  {:>10}  {}{flag}\n",
            e.index, e.value, e.term
        ));
    }
    Ok(Output::ok(
        serde_json::to_value(&p).expect("prefix serializes"),
        text,
    ))
}

/// Runs a fragment with `extra` formulas tracked alongside the declared ones.
fn trace(spec: &FragmentSpec, extra: &[Expr]) -> Result<StageTrace> {
    Ok(engine::run(Fragment::build_with(spec, extra)?, spec.budget))
}

fn formula_report(t: &StageTrace, a: &Expr, converged: bool) -> Result<(Value, String)> {
    let words = t.words(a)?;
    let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
    let mut j = json!({ "formula": a.to_string(), "words": shown });
    let mut text = format!("{a}\n  words: {}\n", shown.join(" "));
    if converged {
        let v = t.valency(a)?;
        let c = v.classification();
        j["status"] = json!(c.status);
        j["veridic"] = json!(c.veridic);
        j["pseudic"] = json!(c.pseudic);
        j["paradoxical"] = json!(c.paradoxical);
        j["valor"] = json!(v.valor().to_string());
        text.push_str(&format!("  status: {}\n  valor: {}\n", c.status, v.valor()));
    }
    Ok((j, text))
}

fn trace_header(t: &StageTrace) -> (Value, String) {
    let closure = t.closure().map(|c| c.index().to_string());
    let blocks: Vec<Value> = t
        .blocks()
        .iter()
        .map(|b| json!({ "start": b.start, "len": b.len, "cycle_start": b.cycle_start }))
        .collect();
    let b = t.budget();
    let j = json!({
        "banner": t.banner(),
        "closure": closure,
        "stages": t.stage_count(),
        "blocks": blocks,
        "budget": { "max_steps_per_block": b.max_steps_per_block, "max_blocks": b.max_blocks },
    });
    let text = format!(
        "{}\nclosure: {}\nstages recorded: {}\n",
        t.banner(),
        closure.as_deref().unwrap_or("not reached"),
        t.stage_count()
    );
    (j, text)
}

/// Prints what was computed, then turns a missing closure into an error.
fn converged_or(cli: &Cli, t: &StageTrace, out: Output) -> Result<Output> {
    match t.converged() {
        Ok(_) => Ok(out),
        Err(e) => {
            emit(&out, cli.text);
            Err(e)
        }
    }
}

fn emit(out: &Output, text: bool) {
    let body = if text {
        out.text.clone()
    } else {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&out.json).expect("json")
        )
    };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn simulate_cmd(cli: &Cli, file: &PathBuf) -> Result<Output> {
    let spec = load(cli, file)?;
    let t = trace(&spec, &[])?;
    let converged = t.closure().is_some();
    let (mut j, mut text) = trace_header(&t);
    let mut formulas = Vec::new();
    for a in t.declared().iter().filter(|e| e.is_formula()) {
        let (fj, ft) = formula_report(&t, a, converged)?;
        formulas.push(fj);
        text.push_str(&ft);
    }
    j["formulas"] = json!(formulas);
    converged_or(cli, &t, Output::ok(j, text))
}

fn classify_cmd(cli: &Cli, file: &PathBuf, formulas: &[String]) -> Result<Output> {
    let spec = load(cli, file)?;
    let exprs: Vec<Expr> = formulas
        .iter()
        .map(|f| expression(f, ParseMode::Formula))
        .collect::<Result<_>>()?;
    let t = trace(&spec, &exprs)?;
    t.converged()?;
    let (mut j, mut text) = trace_header(&t);
    let mut out = Vec::new();
    for a in &exprs {
        let (fj, ft) = formula_report(&t, a, true)?;
        out.push(fj);
        text.push_str(&ft);
    }
    j["formulas"] = json!(out);
    Ok(Output::ok(j, text))
}

fn relations_cmd(cli: &Cli, file: &PathBuf, a: &str, b: &str) -> Result<Output> {
    let spec = load(cli, file)?;
    let a = expression(a, ParseMode::Formula)?;
    let b = expression(b, ParseMode::Formula)?;
    let t = trace(&spec, &[a.clone(), b.clone()])?;
    let r = t.relations(&a, &b)?;
    let (mut j, mut text) = trace_header(&t);
    j["a"] = json!(a.to_string());
    j["b"] = json!(b.to_string());
    j["relations"] = serde_json::to_value(&r).expect("relations serialize");
    let words = |ws: &[engine::BlockWord]| {
        ws.iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    text.push_str(&format!("A: {a}\nB: {b}\n"));
    for (name, v) in [
        ("parivalent", r.parivalent),
        ("altervalent", r.altervalent),
        ("contravalent", r.contravalent),
        ("paridictive", r.paridictive),
        ("contradictive", r.contradictive),
        ("complementary", r.complementary),
        ("connected", r.connected),
    ] {
        text.push_str(&format!("  {name:<14} {v}\n"));
    }
    for (name, ws) in [
        ("ambovalence", &r.ambovalence),
        ("velvalence", &r.velvalence),
        ("subvalence", &r.subvalence),
        ("homovalence", &r.homovalence),
    ] {
        text.push_str(&format!("  {name:<14} {}\n", words(ws)));
    }
    Ok(Output::ok(j, text))
}

fn audit_cmd(cli: &Cli, file: &PathBuf) -> Result<Output> {
    let spec = load(cli, file)?;
    let (_, report) = audit::audit(&spec)?;
    let failed = !report.passed();
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Output {
        json,
        text: report.to_text(),
        failed,
    })
}

fn scenario_cmd(cli: &Cli, command: &ScenarioCommand) -> Result<Output> {
    match command {
        ScenarioCommand::Run { name } => {
            let s = scenario::find(name)?;
            let b = budget(cli, s.spec()?.budget)?;
            let r = s.run_with(b)?;
            let json = serde_json::to_value(&r).expect("report serializes");
            Ok(Output {
                json,
                text: r.to_text(),
                failed: !r.passed,
            })
        }
        ScenarioCommand::List => {
            let all = scenario::all();
            let j = all
                .iter()
                .map(|s| json!({ "name": s.name, "summary": s.summary }))
                .collect();
            let text = all
                .iter()
                .map(|s| format!("{:<18} {}\n", s.name, s.summary))
                .collect();
            Ok(Output::ok(Value::Array(j), text))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Parse { input, mode } => parse_cmd(input, *mode),
        Command::Print { input, form, mode } => print_cmd(input, *form, *mode),
        Command::Encode { input } => encode_cmd(input),
        Command::Decode { input } => decode_cmd(input),
        Command::Code { input, budget_bits } => code_cmd(input, *budget_bits),
        Command::Sub { x, i, y } => sub_cmd(x, *i, y),
        Command::Diag { formula } => diag_cmd(formula),
        Command::Enum { count, max_bits } => enum_cmd(*count, *max_bits),
        Command::Simulate { file } => simulate_cmd(cli, file),
        Command::Classify { file, formulas } => classify_cmd(cli, file, formulas),
        Command::Relations { file, a, b } => relations_cmd(cli, file, a, b),
        Command::Audit { file } => audit_cmd(cli, file),
        Command::Scenario { command } => scenario_cmd(cli, command),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
        {
            eprintln!("error[Invalid]: {e}");
            return ExitCode::from(1);
        }
    }
    match dispatch(&cli) {
        Ok(out) => {
            emit(&out, cli.text);
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            let budget = e.is_budget() || matches!(e, Error::NotConverged { .. });
            ExitCode::from(if budget { 2 } else { 1 })
        }
    }
}
