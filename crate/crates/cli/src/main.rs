use std::io;
use std::process::ExitCode;

use braidsig::bounds::{
    self, asymptotic_sigma, complete_block, main_prop_certificate, reduction_decompose, verify_bound,
};
use braidsig::garside::{braid_equal, normal_form};
use braidsig::seifert::seifert_matrix;
use braidsig::torus::sigma_torus;
use braidsig::BraidWord;
use clap::{Args, Parser, Subcommand};
use log::info;
use num_rational::Rational64;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "braidsig", version, about = "Signatures and Betti numbers of braid closures")]
struct Cli {
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads for enumeration (default: available cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArg {
    /// Number of strands.
    #[arg(short = 'b', long = "strands")]
    strands: usize,
    /// Braid word, e.g. "a1 a2 A1" or "1 2 -1".
    word: String,
}

impl WordArg {
    fn parse(&self) -> Result<BraidWord, String> {
        parse_word(&self.word, self.strands)
    }
}

#[derive(Subcommand)]
enum Command {
    /// b1, c, signature and nullity of the closure.
    Invariants(WordArg),
    /// Signature of the closure.
    Sigma(WordArg),
    /// b1 from the crossing count and from the fence graph.
    Betti(WordArg),
    /// Garside left normal form.
    NormalForm(WordArg),
    /// Whether two words represent the same braid.
    Equal {
        #[arg(short = 'b', long = "strands")]
        strands: usize,
        left: String,
        right: String,
    },
    /// Word read after a half turn of the diagram.
    Rotate(WordArg),
    /// Signature of the torus link T(p, q), 2 <= p <= 4.
    Torus { p: i64, q: i64 },
    /// Seifert matrix and brick basis.
    Seifert(WordArg),
    /// Checks -σ > bound·b1 on all non-split positive braids up to a length.
    Verify {
        #[arg(short = 'b', long = "strands")]
        strands: usize,
        #[arg(short = 'l', long = "max-length")]
        max_length: usize,
        /// Slope as p/q.
        #[arg(long)]
        bound: Rational64,
        /// Require strict inequality.
        #[arg(long)]
        strict: bool,
    },
    /// σ(βⁿ)/n with an interval containing the asymptotic signature.
    Asymptotic {
        #[command(flatten)]
        word: WordArg,
        #[arg(short = 'n', long = "power")]
        power: usize,
    },
    /// Thins the word to a connected sum of braids on fewer strands.
    Reduce {
        #[command(flatten)]
        word: WordArg,
        /// Maximum strands per component.
        #[arg(short = 't', long = "target")]
        target: usize,
    },
    /// Adds two generators to a length-4 block to reach Δ, L or R.
    CompleteBlock {
        /// Length-4 positive 4-braid word.
        word: String,
    },
    /// Block certificate for the 5/12 bound on 4-braids.
    Certificate {
        /// Positive 4-braid word.
        word: String,
        #[arg(short = 'n', long = "power")]
        power: usize,
    },
}

/// A result as JSON plus a flat table for `--csv`.
struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    code: u8,
}

impl Output {
    fn new(json: Value, header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        Output { json, header, rows, code: 0 }
    }

    /// Single-value result: bare JSON scalar, one-column CSV.
    fn scalar(name: &'static str, value: impl ToString + Into<Value> + Clone) -> Self {
        Output::new(value.clone().into(), vec![name], vec![vec![value.to_string()]])
    }
}

fn parse_word(text: &str, strands: usize) -> Result<BraidWord, String> {
    BraidWord::parse(text, strands).map_err(|e| format!("invalid word {text:?}: {e}"))
}

fn ratio(r: Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn run(command: Command) -> Result<Output, String> {
    let e = |err: braidsig::Error| err.to_string();
    Ok(match command {
        Command::Invariants(arg) => {
            let word = arg.parse()?;
            let inv = bounds::invariants(&word).map_err(e)?;
            Output::new(
                json!({ "word": word.to_string(), "b1": inv.b1, "c": inv.c, "sigma": inv.sigma, "nullity": inv.nullity }),
                vec!["word", "b1", "c", "sigma", "nullity"],
                vec![vec![word.to_string(), inv.b1.to_string(), inv.c.to_string(), inv.sigma.to_string(), inv.nullity.to_string()]],
            )
        }
        Command::Sigma(arg) => Output::scalar("sigma", bounds::sigma(&arg.parse()?).map_err(e)?),
        Command::Betti(arg) => {
            let word = arg.parse()?;
            let (b1, c) = word.betti_and_c().map_err(e)?;
            let fence = word.fence_diagram().map_err(e)?.graph_betti();
            Output::new(
                json!({ "b1": b1, "c": c, "fence_b1": fence }),
                vec!["b1", "c", "fence_b1"],
                vec![vec![b1.to_string(), c.to_string(), fence.to_string()]],
            )
        }
        Command::NormalForm(arg) => {
            let nf = normal_form(&arg.parse()?);
            let factors: Vec<Vec<u8>> = nf.factors.iter().map(|p| p.perm().iter().map(|&x| x + 1).collect()).collect();
            let canonical = nf.canonical_string();
            let word = nf.to_word().to_string();
            Output::new(
                json!({ "inf": nf.inf, "factors": factors, "canonical": canonical, "word": word }),
                vec!["inf", "canonical", "word"],
                vec![vec![nf.inf.to_string(), canonical, word]],
            )
        }
        Command::Equal { strands, left, right } => {
            let equal = braid_equal(&parse_word(&left, strands)?, &parse_word(&right, strands)?).map_err(e)?;
            Output::scalar("equal", equal)
        }
        Command::Rotate(arg) => Output::scalar("word", arg.parse()?.rotate180().to_string()),
        Command::Torus { p, q } => Output::scalar("sigma", sigma_torus(p, q).map_err(e)?),
        Command::Seifert(arg) => {
            let v = seifert_matrix(&arg.parse()?).map_err(e)?;
            let rows = v.entries().iter().map(|r| r.iter().map(i64::to_string).collect()).collect();
            Output { json: v.to_json(), header: Vec::new(), rows, code: 0 }
        }
        Command::Verify { strands, max_length, bound, strict } => {
            info!("verifying -σ {} {}·b1 for b={strands}, l<={max_length}", if strict { ">" } else { ">=" }, ratio(bound));
            let report = verify_bound(strands, max_length, bound, strict).map_err(e)?;
            let entry = |c: &bounds::Counterexample| {
                json!({
                    "word": c.word.to_string(),
                    "l": c.word.len(),
                    "b1": c.b1,
                    "sigma": c.sigma,
                    "ratio": ratio(Rational64::new(-c.sigma, c.b1 as i64)),
                })
            };
            let json = json!({
                "b": report.b,
                "l_max": report.l_max,
                "bound": ratio(report.bound),
                "strict": report.strict,
                "words_checked": report.words_checked,
                "classes_checked": report.classes_checked,
                "holds": report.holds(),
                "counterexamples": report.counterexamples.iter().map(entry).collect::<Vec<_>>(),
                "tightest": report.tightest.as_ref().map(entry),
            });
            let rows = report
                .csv_rows()
                .into_iter()
                .map(|(w, l, b1, s, r)| vec![w, l.to_string(), b1.to_string(), s.to_string(), r])
                .collect();
            let code = u8::from(!report.holds());
            Output { json, header: vec!["word", "l", "b1", "sigma", "ratio"], rows, code }
        }
        Command::Asymptotic { word, power } => {
            let est = asymptotic_sigma(&word.parse()?, power).map_err(e)?;
            let (estimate, lower, upper) = (ratio(est.estimate), ratio(est.lower), ratio(est.upper));
            Output::new(
                json!({ "word": est.word.to_string(), "n": est.n_used, "estimate": estimate, "lower": lower, "upper": upper }),
                vec!["n", "estimate", "lower", "upper"],
                vec![vec![est.n_used.to_string(), estimate, lower, upper]],
            )
        }
        Command::Reduce { word, target } => {
            let r = reduction_decompose(&word.parse()?, target).map_err(e)?;
            let components: Vec<Value> = r
                .components
                .iter()
                .map(|c| json!({ "strands": c.strands(), "word": c.to_string() }))
                .collect();
            let rows = r.components.iter().map(|c| vec![c.strands().to_string(), c.to_string()]).collect();
            Output::new(
                json!({
                    "offset": r.offset,
                    "reduced": r.reduced.to_string(),
                    "components": components,
                    "b1_original": r.b1_original,
                    "b1_reduced": r.b1_reduced,
                    "bound_holds": r.satisfies_betti_bound(target),
                }),
                vec!["strands", "word"],
                rows,
            )
        }
        Command::CompleteBlock { word } => {
            let c = complete_block(&parse_word(&word, 4)?).map_err(e)?;
            let target = c.target.map(|t| t.name());
            let completed = c.completed_word().map(|w| w.to_string());
            let insertions: Vec<Value> = c
                .insertions
                .iter()
                .flatten()
                .map(|i| json!({ "position": i.position, "generator": i.generator }))
                .collect();
            Output::new(
                json!({
                    "block": c.block.to_string(),
                    "complete": c.is_complete(),
                    "insertions": insertions,
                    "rewritten": c.rewritten.as_ref().map(|w| w.to_string()),
                    "completed": completed,
                    "target": target,
                }),
                vec!["block", "target", "completed"],
                vec![vec![c.block.to_string(), target.unwrap_or("").into(), completed.unwrap_or_default()]],
            )
        }
        Command::Certificate { word, power } => {
            let c = main_prop_certificate(&parse_word(&word, 4)?, power).map_err(e)?;
            let (bound, power_bound) = (ratio(c.bound), ratio(c.power_bound));
            Output::new(
                json!({
                    "word": c.word.to_string(),
                    "n": c.n,
                    "blocks": c.blocks,
                    "k": c.k,
                    "shift_used": c.shift_used,
                    "tilde_word": c.tilde_word.to_string(),
                    "measured": c.measured,
                    "bound": bound,
                    "holds": c.holds,
                    "power_measured": c.power_measured,
                    "power_bound": power_bound,
                    "power_holds": c.power_holds,
                }),
                vec!["n", "k", "measured", "bound", "holds", "power_measured", "power_bound", "power_holds"],
                vec![vec![
                    c.n.to_string(),
                    c.k.to_string(),
                    c.measured.to_string(),
                    bound,
                    c.holds.to_string(),
                    c.power_measured.to_string(),
                    power_bound,
                    c.power_holds.to_string(),
                ]],
            )
        }
    })
}

fn emit(out: &Output, csv: bool) -> io::Result<()> {
    if !csv {
        println!("{}", serde_json::to_string_pretty(&out.json)?);
        return Ok(());
    }
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(io::stdout().lock());
    if !out.header.is_empty() {
        w.write_record(&out.header)?;
    }
    for row in &out.rows {
        w.write_record(row)?;
    }
    w.flush()
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = match pool.build() {
        Ok(pool) => pool,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };

    match pool.install(|| run(cli.command)) {
        Ok(out) => match emit(&out, cli.csv) {
            Ok(()) => ExitCode::from(out.code),
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(2)
            }
        },
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
