//! Command-line surface over the library: enumeration, statistics,
//! closed forms, counting, the bijections, path/word conversion, hook
//! data, and the self-verification suite.
//!
//! The entry point is [`run`], a pure function of the argument vector
//! and the input stream; `main` is a one-line wrapper around it.
//! Output defaults to JSON (`--format human` for inspection; CSV is
//! available only for `verify` grids). Exit codes: 0 on success, 1
//! when a verification check fails, 2 on any parse, validation, or
//! domain error, with a one-line diagnostic on standard error.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::bijections::{
    block_transport, block_transport_inv, collapse_equal_column, expand_equal_column,
    major_transport, major_transport_inv, skew_profile,
};
use crate::error::{Error, Result};
use crate::qpoly::{
    count_inc, count_rinc, hook_lengths, inc_maj_gf, q_hook_maj_sum, rinc_amaj_gf, rinc_maj_gf,
    rinc_maj_gf_recurrence, syt_amaj_gf, syt_maj_gf,
};
use crate::schroeder::{
    enumerate_words, path_from_word, tableau_to_word, word_from_path, word_maj_gf,
    word_to_tableau, SchroederPath, SchroederWord,
};
use crate::stats::profile;
use crate::tableaux::{enumerate_inc, enumerate_rinc, enumerate_syt, Partition, Tableau};
use crate::verify::{run_checks, CheckKind, VerificationReport};

#[derive(Parser)]
#[command(
    name = "rowinc",
    version,
    about = "Two-row tableau families: enumeration, statistics, bijections, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every member of a tableau or word family.
    Enumerate(EnumerateArgs),
    /// Descent/ascent statistics of one tableau.
    Stats(StatsArgs),
    /// Evaluate a closed-form generating polynomial.
    Poly(PolyArgs),
    /// Count a family without listing it.
    Count(CountArgs),
    /// Apply a bijection (or its inverse) to one tableau or word.
    Map(MapArgs),
    /// Convert between lattice-path and word encodings.
    Convert(ConvertArgs),
    /// Hook lengths and hook generating function of a shape.
    Hook(HookArgs),
    /// Run the identity checks and report pass/fail per check.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    #[value(alias = "text")]
    Human,
    Csv,
}

impl OutputFormat {
    /// Everything except `verify` speaks JSON and human text only.
    fn reject_csv(self) -> Result<Self> {
        if self == OutputFormat::Csv {
            return Err(Error::input(
                "csv output is only available for the verify command",
            ));
        }
        Ok(self)
    }
}

/// Input format detected on a parsed value, echoed back on output
/// unless `--format` overrides it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum InputKind {
    Json,
    Text,
}

impl InputKind {
    fn of(raw: &str) -> Self {
        if raw.trim_start().starts_with('{') {
            InputKind::Json
        } else {
            InputKind::Text
        }
    }

    fn as_output(self) -> OutputFormat {
        match self {
            InputKind::Json => OutputFormat::Json,
            InputKind::Text => OutputFormat::Human,
        }
    }
}

#[derive(Args)]
struct EnumerateArgs {
    /// Family to list: rinc, inc, syt, or words.
    #[arg(long)]
    family: Family,
    /// Number of columns (rinc, inc, words).
    #[arg(long)]
    n: Option<usize>,
    /// Number of doubled values / flat steps (rinc, inc, words).
    #[arg(long)]
    k: Option<i64>,
    /// Entry offset: smallest entry is m+1 (rinc only).
    #[arg(long)]
    m: Option<u32>,
    /// Partition shape, comma-separated parts (syt only).
    #[arg(long)]
    shape: Option<Partition>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Row-increasing tableaux (weakly increasing columns).
    Rinc,
    /// Increasing tableaux (strictly increasing columns).
    Inc,
    /// Standard Young tableaux of an arbitrary shape.
    Syt,
    /// Schröder words over {0,1,2}.
    Words,
}

#[derive(Args)]
struct StatsArgs {
    /// Read the tableau from this file instead of standard input.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct PolyArgs {
    /// Closed form to evaluate.
    #[arg(long, value_enum, ignore_case = true)]
    formula: Formula,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    k: Option<i64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formula {
    /// maj over standard tableaux of shape 2xn (q-Catalan).
    Cq,
    /// amaj over standard tableaux of shape 2xn (no q-shift).
    Ctq,
    /// maj over increasing tableaux with k doubled values.
    Sq,
    /// maj over row-increasing tableaux with k doubled values.
    Rq,
    /// amaj over row-increasing tableaux with k doubled values.
    Rtq,
    /// maj over Schröder words with k flat steps.
    Wordmaj,
    /// rq computed through its four-term recurrence (1 <= k < n).
    RqRecurrence,
}

#[derive(Args)]
struct CountArgs {
    /// What to count: r (row-increasing), s (increasing), syt, words.
    #[arg(long)]
    which: CountWhich,
    #[arg(long)]
    n: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    /// Partition shape (syt only).
    #[arg(long)]
    shape: Option<Partition>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountWhich {
    R,
    S,
    Syt,
    Words,
}

#[derive(Args)]
struct MapArgs {
    /// Which map to apply.
    #[arg(long = "map", value_enum)]
    which: MapKind,
    /// Read the tableau or word from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Defaults to the format the input arrived in.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapKind {
    /// Collapse the first equal column (drops one doubled value).
    F,
    /// Inverse of f: reinsert an equal column.
    Finv,
    /// Block transport on one prime tableau.
    G,
    /// Inverse of g.
    Ginv,
    /// Major transport: g applied blockwise.
    Phi,
    /// Inverse of phi.
    Phiinv,
    /// Tableau to Schröder word.
    Theta,
    /// Schröder word to tableau.
    Thetainv,
    /// Skew profile (descents0/ascents0/d/x/y) of a prime tableau.
    Profile,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Encoding,
    #[arg(long, value_enum)]
    to: Encoding,
    /// Read the path or word from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Defaults to the format the input arrived in.
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Encoding {
    /// Step string over U, F, D.
    Path,
    /// Digit string over 0, 1, 2.
    Word,
}

#[derive(Args)]
struct HookArgs {
    /// Partition shape, comma-separated parts.
    #[arg(long)]
    shape: Partition,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, maj, amaj, sq, recurrences, bijections, or schroeder.
    #[arg(long, default_value = "all")]
    check: CheckKind,
    /// Largest n to sweep (default: 6 for exhaustive checks, 8 for
    /// formula-level checks).
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
}

/// Parses and dispatches `argv` (including the program name), reading
/// from `stdin` and writing to the given streams. Returns the process
/// exit code: 0 on success, 1 when a verification check fails, 2 on
/// any parse, validation, or domain error.
pub fn run<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{first}");
            return 2;
        }
    };
    match dispatch(cli.command, stdin) {
        Ok((payload, code)) => {
            let _ = stdout.write_all(payload.as_bytes());
            code
        }
        Err(err) => {
            let _ = writeln!(stderr, "{err}");
            2
        }
    }
}

fn dispatch(cmd: Command, stdin: &mut dyn Read) -> Result<(String, u8)> {
    match cmd {
        Command::Enumerate(a) => Ok((enumerate_cmd(a)?, 0)),
        Command::Stats(a) => Ok((stats_cmd(a, stdin)?, 0)),
        Command::Poly(a) => Ok((poly_cmd(a)?, 0)),
        Command::Count(a) => Ok((count_cmd(a)?, 0)),
        Command::Map(a) => Ok((map_cmd(a, stdin)?, 0)),
        Command::Convert(a) => Ok((convert_cmd(a, stdin)?, 0)),
        Command::Hook(a) => Ok((hook_cmd(a)?, 0)),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn read_input(source: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<String> {
    match source {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| Error::input(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_tableau(raw: &str) -> Result<(Tableau, InputKind)> {
    let kind = InputKind::of(raw);
    let t = match kind {
        InputKind::Json => Tableau::from_json(raw)?,
        InputKind::Text => Tableau::from_text(raw)?,
    };
    Ok((t, kind))
}

#[derive(Deserialize)]
struct WordRepr {
    word: String,
}

#[derive(Deserialize)]
struct PathRepr {
    path: String,
}

/// Wire shape of a general-shape standard tableau listing.
#[derive(serde::Serialize)]
struct SytRepr<'a> {
    shape: &'a [usize],
    rows: &'a [Vec<u32>],
}

/// Wire shape of the `hook` command's output.
#[derive(serde::Serialize)]
struct HookRepr<'a> {
    shape: &'a [usize],
    hooks: &'a [u64],
    maj_gf: &'a crate::qpoly::QPoly,
}

fn parse_word(raw: &str) -> Result<(SchroederWord, InputKind)> {
    let kind = InputKind::of(raw);
    let text = match kind {
        InputKind::Json => {
            let repr: WordRepr = serde_json::from_str(raw)
                .map_err(|e| Error::input(format!("invalid word JSON: {e}")))?;
            repr.word
        }
        InputKind::Text => raw.trim().to_string(),
    };
    Ok((text.parse()?, kind))
}

fn parse_path(raw: &str) -> Result<(SchroederPath, InputKind)> {
    let kind = InputKind::of(raw);
    let text = match kind {
        InputKind::Json => {
            let repr: PathRepr = serde_json::from_str(raw)
                .map_err(|e| Error::input(format!("invalid path JSON: {e}")))?;
            repr.path
        }
        InputKind::Text => raw.trim().to_string(),
    };
    Ok((text.parse()?, kind))
}

fn render_tableau(t: &Tableau, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", t.to_json()),
        _ => format!("{}\n", t.to_text()),
    }
}

fn render_word(w: &SchroederWord, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", serde_json::json!({ "word": w.to_string() })),
        _ => format!("{w}\n"),
    }
}

fn render_path(p: &SchroederPath, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => format!("{}\n", serde_json::json!({ "path": p.to_string() })),
        _ => format!("{p}\n"),
    }
}

/// `label: a b c`, or bare `label:` when the sequence is empty.
fn tagged_line<T: fmt::Display>(label: &str, items: impl IntoIterator<Item = T>) -> String {
    let joined = items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    if joined.is_empty() {
        format!("{label}:")
    } else {
        format!("{label}: {joined}")
    }
}

fn require<T>(value: Option<T>, what: &str, context: &str) -> Result<T> {
    value.ok_or_else(|| Error::input(format!("{what} is required {context}")))
}

fn forbid<T>(value: &Option<T>, what: &str, context: &str) -> Result<()> {
    if value.is_some() {
        return Err(Error::input(format!("{what} does not apply {context}")));
    }
    Ok(())
}

fn enumerate_cmd(args: EnumerateArgs) -> Result<String> {
    let format = args.format.reject_csv()?;
    let mut out = String::new();
    match args.family {
        Family::Rinc | Family::Inc | Family::Words => {
            forbid(&args.shape, "--shape", "to this family (it takes --n/--k)")?;
            let n = require(args.n, "--n", "for this family")?;
            let k = require(args.k, "--k", "for this family")?;
            match args.family {
                Family::Rinc => {
                    let m = args.m.unwrap_or(0);
                    for t in enumerate_rinc(n, k, m)? {
                        push_block(&mut out, &render_tableau(&t, format), format);
                    }
                }
                Family::Inc => {
                    forbid(&args.m, "--m", "to the inc family (its offset is 0)")?;
                    for t in enumerate_inc(n, k)? {
                        push_block(&mut out, &render_tableau(&t, format), format);
                    }
                }
                Family::Words => {
                    forbid(&args.m, "--m", "to the words family")?;
                    for w in enumerate_words(n, k)? {
                        out.push_str(&render_word(&w, format));
                    }
                }
                Family::Syt => unreachable!("outer match covers syt"),
            }
        }
        Family::Syt => {
            forbid(&args.n, "--n", "to the syt family (it takes --shape)")?;
            forbid(&args.k, "--k", "to the syt family (it takes --shape)")?;
            forbid(&args.m, "--m", "to the syt family")?;
            let shape = require(args.shape, "--shape", "for the syt family")?;
            for t in enumerate_syt(&shape) {
                let block = match format {
                    OutputFormat::Json => {
                        let repr = SytRepr {
                            shape: t.shape().parts(),
                            rows: t.rows(),
                        };
                        format!(
                            "{}\n",
                            serde_json::to_string(&repr)
                                .expect("tableau serialization cannot fail")
                        )
                    }
                    _ => {
                        let rows: Vec<String> = t
                            .rows()
                            .iter()
                            .map(|row| {
                                row.iter()
                                    .map(|v| v.to_string())
                                    .collect::<Vec<_>>()
                                    .join(" ")
                            })
                            .collect();
                        format!("{}\n", rows.join("\n"))
                    }
                };
                push_block(&mut out, &block, format);
            }
        }
    }
    Ok(out)
}

/// JSON listings are one value per line; human listings separate
/// multi-line blocks with a blank line.
fn push_block(out: &mut String, block: &str, format: OutputFormat) {
    if format != OutputFormat::Json && !out.is_empty() {
        out.push('\n');
    }
    out.push_str(block);
}

fn stats_cmd(args: StatsArgs, stdin: &mut dyn Read) -> Result<String> {
    let format = args.format.reject_csv()?;
    let raw = read_input(&args.input, stdin)?;
    let (t, _) = parse_tableau(&raw)?;
    let p = profile(&t);
    Ok(match format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string(&p).expect("profile serialization cannot fail")
        ),
        _ => format!(
            "{}\n{}\nmaj: {}\namaj: {}\n",
            tagged_line("descents", p.descents.iter().copied()),
            tagged_line("ascents", p.ascents.iter().copied()),
            p.maj,
            p.amaj,
        ),
    })
}

fn poly_cmd(args: PolyArgs) -> Result<String> {
    let format = args.format.reject_csv()?;
    let need_k = || require(args.k, "--k", "for this formula");
    let poly = match args.formula {
        Formula::Cq => {
            forbid(&args.k, "--k", "to this formula")?;
            syt_maj_gf(args.n)?
        }
        Formula::Ctq => {
            forbid(&args.k, "--k", "to this formula")?;
            syt_amaj_gf(args.n)?
        }
        Formula::Sq => inc_maj_gf(args.n, need_k()?)?,
        Formula::Rq => rinc_maj_gf(args.n, need_k()?)?,
        Formula::Rtq => rinc_amaj_gf(args.n, need_k()?)?,
        Formula::Wordmaj => word_maj_gf(args.n, need_k()?)?,
        Formula::RqRecurrence => rinc_maj_gf_recurrence(args.n, need_k()?)?,
    };
    Ok(match format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string(&poly).expect("polynomial serialization cannot fail")
        ),
        _ => format!("{poly}\n"),
    })
}

fn count_cmd(args: CountArgs) -> Result<String> {
    args.format.reject_csv()?;
    let need_n = || require(args.n, "--n", "for this count");
    let need_k = || require(args.k, "--k", "for this count");
    let count = match args.which {
        CountWhich::R => {
            forbid(&args.shape, "--shape", "to this count")?;
            count_rinc(need_n()?, need_k()?)?
        }
        CountWhich::S => {
            forbid(&args.shape, "--shape", "to this count")?;
            count_inc(need_n()?, need_k()?)?
        }
        CountWhich::Syt => {
            forbid(&args.n, "--n", "to the syt count (it takes --shape)")?;
            forbid(&args.k, "--k", "to the syt count (it takes --shape)")?;
            let shape = require(args.shape, "--shape", "for the syt count")?;
            q_hook_maj_sum(&shape)?.eval_at_one()?
        }
        CountWhich::Words => {
            forbid(&args.shape, "--shape", "to this count")?;
            word_maj_gf(need_n()?, need_k()?)?.eval_at_one()?
        }
    };
    // A bare integer is both valid JSON and the natural human form.
    Ok(format!("{count}\n"))
}

fn map_cmd(args: MapArgs, stdin: &mut dyn Read) -> Result<String> {
    let raw = read_input(&args.input, stdin)?;
    let resolve = |kind: InputKind| -> Result<OutputFormat> {
        args.format.unwrap_or(kind.as_output()).reject_csv()
    };
    match args.which {
        MapKind::F
        | MapKind::Finv
        | MapKind::G
        | MapKind::Ginv
        | MapKind::Phi
        | MapKind::Phiinv => {
            let (t, kind) = parse_tableau(&raw)?;
            let image = match args.which {
                MapKind::F => collapse_equal_column(&t)?,
                MapKind::Finv => expand_equal_column(&t)?,
                MapKind::G => block_transport(&t)?,
                MapKind::Ginv => block_transport_inv(&t)?,
                MapKind::Phi => major_transport(&t)?,
                MapKind::Phiinv => major_transport_inv(&t)?,
                _ => unreachable!("outer match covers the rest"),
            };
            Ok(render_tableau(&image, resolve(kind)?))
        }
        MapKind::Theta => {
            let (t, kind) = parse_tableau(&raw)?;
            Ok(render_word(&tableau_to_word(&t)?, resolve(kind)?))
        }
        MapKind::Thetainv => {
            let (w, kind) = parse_word(&raw)?;
            Ok(render_tableau(&word_to_tableau(&w)?, resolve(kind)?))
        }
        MapKind::Profile => {
            let (t, kind) = parse_tableau(&raw)?;
            let p = skew_profile(&t)?;
            Ok(match resolve(kind)? {
                OutputFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string(&p).expect("profile serialization cannot fail")
                ),
                _ => format!(
                    "{}\n{}\nd: {}\n{}\n{}\n",
                    tagged_line("descents0", p.descents0.iter().copied()),
                    tagged_line("ascents0", p.ascents0.iter().copied()),
                    p.d,
                    tagged_line("x", p.x.iter().copied()),
                    tagged_line("y", p.y.iter().copied()),
                ),
            })
        }
    }
}

fn convert_cmd(args: ConvertArgs, stdin: &mut dyn Read) -> Result<String> {
    let raw = read_input(&args.input, stdin)?;
    let (word, kind) = match args.from {
        Encoding::Word => parse_word(&raw)?,
        Encoding::Path => {
            let (path, kind) = parse_path(&raw)?;
            (word_from_path(&path), kind)
        }
    };
    let format = args.format.unwrap_or(kind.as_output()).reject_csv()?;
    Ok(match args.to {
        Encoding::Word => render_word(&word, format),
        Encoding::Path => render_path(&path_from_word(&word), format),
    })
}

fn hook_cmd(args: HookArgs) -> Result<String> {
    let format = args.format.reject_csv()?;
    let hooks = hook_lengths(&args.shape);
    let gf = q_hook_maj_sum(&args.shape)?;
    Ok(match format {
        OutputFormat::Json => {
            let repr = HookRepr {
                shape: args.shape.parts(),
                hooks: &hooks,
                maj_gf: &gf,
            };
            format!(
                "{}\n",
                serde_json::to_string(&repr).expect("hook serialization cannot fail")
            )
        }
        _ => format!(
            "{}\nmaj gf: {gf}\n",
            tagged_line("hooks", hooks.iter().copied())
        ),
    })
}

fn verify_cmd(args: VerifyArgs) -> Result<(String, u8)> {
    let reports = run_checks(args.check, args.nmax);
    let all_passed = reports.iter().all(|r| r.passed);
    let payload = match args.format {
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string(&reports).expect("report serialization cannot fail")
        ),
        OutputFormat::Csv => {
            let mut out = String::from(VerificationReport::csv_header());
            for r in &reports {
                out.push('\n');
                out.push_str(&r.to_csv_row());
            }
            out.push('\n');
            out
        }
        OutputFormat::Human => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            out
        }
    };
    Ok((payload, if all_passed { 0 } else { 1 }))
}
