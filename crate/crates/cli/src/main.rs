use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use kpasep::ansatz::{boundary_check, bracket, relation_check, Relation};
use kpasep::pasep::{sector_states, sectors, stationary_exact, Letter, RateParams, Sector, Word};
use kpasep::polyring::{assign_abq, format_rational, parse_rational, LaurentPoly, Rational};
use kpasep::ratchain::{chain, detailed_balance_check, projection_check, stationary_check};
use kpasep::rhombic::{
    conjecture_probe, count_classes, enumerate_fillings, render_svg, tiling_independence_check, weight, Tiling,
};

/// Exact tools for the multispecies PASEP and its tableaux.
#[derive(Parser)]
#[command(name = "kpasep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact stationary distribution of a sector.
    Stationary(StationaryArgs),
    #[command(subcommand)]
    Tableaux(TableauxCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
    #[command(subcommand)]
    Count(CountCommand),
    /// Draws the tiling of a word as SVG.
    Render(RenderArgs),
}

#[derive(Subcommand)]
enum TableauxCommand {
    /// Lists every filling of the maximal tiling.
    Enumerate {
        #[arg(long, value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: JsonOnly,
    },
    /// Prints the weight generating function.
    Weight {
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Checks the matrix relations and boundary conditions.
    Ansatz {
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_window)]
        window: (usize, usize),
        #[arg(long, value_parser = parse_poly, default_value = "1")]
        lambda: LaurentPoly,
    },
    /// Compares tableau weights with matrix products and stationary laws.
    Weights {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Checks the tableau chain against the PASEP.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Compares weight sums over every tiling of a word.
    Tilings {
        #[arg(long, value_parser = parse_word)]
        word: Word,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    /// Number of tableau classes of a two-species sector.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Args)]
struct StationaryArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_sector, default_value = "")]
    sector: Sector,
    #[arg(long, value_parser = parse_rat)]
    alpha: Rational,
    #[arg(long, value_parser = parse_rat)]
    beta: Rational,
    #[arg(long, value_parser = parse_rat)]
    q: Rational,
    #[arg(long)]
    qmatrix: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: TableFormat,
}

#[derive(Args)]
struct Params {
    #[arg(long, value_parser = parse_rat, default_value = "1/2")]
    alpha: Rational,
    #[arg(long, value_parser = parse_rat, default_value = "1/3")]
    beta: Rational,
    #[arg(long, value_parser = parse_rat, default_value = "1/5")]
    q: Rational,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_parser = parse_word)]
    word: Word,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "maximal")]
    tiling: TilingChoice,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum JsonOnly {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TilingChoice {
    Maximal,
    Minimal,
}

fn parse_rat(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_word(s: &str) -> Result<Word, String> {
    s.parse().map_err(|e: kpasep::Error| e.to_string())
}

fn parse_sector(s: &str) -> Result<Sector, String> {
    s.parse().map_err(|e: kpasep::Error| e.to_string())
}

fn parse_poly(s: &str) -> Result<LaurentPoly, String> {
    s.parse().map_err(|e: kpasep::Error| e.to_string())
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected I,J")?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("`{x}`: {e}"));
    Ok((num(i)?, num(j)?))
}

/// Distinct swap rates read from `--qmatrix`; missing entries fall back to
/// `--q`.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct QMatrix {
    q0inf: Option<String>,
    #[serde(default)]
    q0i: BTreeMap<u8, String>,
    #[serde(default)]
    qiinf: BTreeMap<u8, String>,
    /// Keys `"i,j"` with `i > j`.
    #[serde(default)]
    qij: BTreeMap<String, String>,
}

impl QMatrix {
    fn apply(&self, params: &mut RateParams, k: usize) -> Result<()> {
        let species = |s: u8| {
            if s == 0 || s as usize >= k {
                bail!("species {s} is not valid for k = {k}")
            }
            Ok(s)
        };
        if let Some(v) = &self.q0inf {
            params.q0inf = parse_rational(v)?;
        }
        for (s, v) in &self.q0i {
            params.q0i.insert(species(*s)?, parse_rational(v)?);
        }
        for (s, v) in &self.qiinf {
            params.qiinf.insert(species(*s)?, parse_rational(v)?);
        }
        for (key, v) in &self.qij {
            let (i, j) = key
                .split_once(',')
                .with_context(|| format!("qij key `{key}` is not `i,j`"))?;
            let (i, j) = (species(i.trim().parse()?)?, species(j.trim().parse()?)?);
            if i <= j {
                bail!("qij key `{key}` needs i > j");
            }
            params.qij.insert((i, j), parse_rational(v)?);
        }
        Ok(())
    }
}

fn rate_map<K: ToString>(m: &BTreeMap<K, Rational>) -> BTreeMap<String, String> {
    m.iter().map(|(k, v)| (k.to_string(), format_rational(v))).collect()
}

#[derive(Serialize)]
struct ParamsOut {
    alpha: String,
    beta: String,
    q0inf: String,
    q0i: BTreeMap<String, String>,
    qiinf: BTreeMap<String, String>,
    qij: BTreeMap<String, String>,
}

impl From<&RateParams> for ParamsOut {
    fn from(p: &RateParams) -> Self {
        ParamsOut {
            alpha: format_rational(&p.alpha),
            beta: format_rational(&p.beta),
            q0inf: format_rational(&p.q0inf),
            q0i: rate_map(&p.q0i),
            qiinf: rate_map(&p.qiinf),
            qij: p
                .qij
                .iter()
                .map(|((i, j), v)| (format!("{i},{j}"), format_rational(v)))
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct StationaryEntry {
    word: String,
    prob: String,
}

#[derive(Serialize)]
struct StationaryOut {
    n: usize,
    k: usize,
    sector: Vec<usize>,
    params: ParamsOut,
    stationary: Vec<StationaryEntry>,
}

#[derive(Serialize)]
struct SymbolOut {
    pair: [usize; 2],
    sym: String,
}

#[derive(Serialize)]
struct TableauOut {
    word: String,
    tiling: &'static str,
    symbols: Vec<SymbolOut>,
    weight: String,
}

#[derive(Serialize)]
struct EnumerateOut {
    word: String,
    k: usize,
    count: usize,
    weight: String,
    tableaux: Vec<TableauOut>,
}

#[derive(Serialize)]
struct RelationOut {
    relation: String,
    window: [usize; 2],
    residual_count: usize,
    lambda: String,
}

#[derive(Serialize)]
struct AnsatzOut {
    k: usize,
    window: [usize; 2],
    lambda: String,
    boundary_ok: bool,
    relations: Vec<RelationOut>,
}

#[derive(Serialize)]
struct WeightsOut {
    k: usize,
    n: usize,
    params: ParamsOut,
    sectors: usize,
    words: usize,
    bridge_ok: bool,
    stationary_ok: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct ChainOut {
    n: usize,
    r: usize,
    states: usize,
    projection_ok: bool,
    balance_ok: bool,
    contracts_ok: bool,
    stationary_matches_weights: bool,
    pushforward_matches: bool,
}

#[derive(Serialize)]
struct TilingsOut {
    word: String,
    k: usize,
    tilings: usize,
    agree: bool,
    exploratory: bool,
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    emit(&serde_json::to_string_pretty(value)?)
}

fn word_k(word: &Word, k: Option<usize>) -> Result<usize> {
    let k = k.unwrap_or_else(|| word.min_k());
    word.check_k(k)?;
    Ok(k)
}

fn stationary(args: StationaryArgs) -> Result<bool> {
    if args.sector.k() != args.k {
        bail!(
            "sector {:?} has {} entries, expected k - 1 = {}",
            args.sector.0,
            args.sector.0.len(),
            args.k.saturating_sub(1)
        );
    }
    let mut params = RateParams::uniform(args.k, args.alpha, args.beta, args.q);
    if let Some(path) = &args.qmatrix {
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let qm: QMatrix = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        qm.apply(&mut params, args.k)?;
    }
    let pi = stationary_exact(args.n, &args.sector, &params)?;
    match args.format {
        TableFormat::Json => print_json(&StationaryOut {
            n: args.n,
            k: args.k,
            sector: args.sector.0.clone(),
            params: (&params).into(),
            stationary: pi
                .iter()
                .map(|(w, p)| StationaryEntry {
                    word: w.to_string(),
                    prob: format_rational(p),
                })
                .collect(),
        })?,
        TableFormat::Csv => {
            let mut table = String::from("word,prob");
            for (w, p) in &pi {
                table.push_str(&format!("\n{w},{}", format_rational(p)));
            }
            emit(&table)?;
        }
    }
    Ok(true)
}

fn tableaux(cmd: TableauxCommand) -> Result<bool> {
    match cmd {
        TableauxCommand::Enumerate {
            word,
            k,
            format: JsonOnly::Json,
        } => {
            let k = word_k(&word, k)?;
            let fillings = enumerate_fillings(&word);
            let tableaux = fillings
                .iter()
                .map(|f| TableauOut {
                    word: word.to_string(),
                    tiling: "maximal",
                    symbols: f
                        .symbols()
                        .iter()
                        .map(|(&(a, b), s)| SymbolOut {
                            pair: [a + 1, b + 1],
                            sym: s.to_string(),
                        })
                        .collect(),
                    weight: f.wt().to_string(),
                })
                .collect();
            print_json(&EnumerateOut {
                word: word.to_string(),
                k,
                count: fillings.len(),
                weight: weight(&word).to_string(),
                tableaux,
            })?;
        }
        TableauxCommand::Weight { word } => emit(&weight(&word).to_string())?,
    }
    Ok(true)
}

fn verify_ansatz(k: usize, (imax, jmax): (usize, usize), lambda: LaurentPoly) -> Result<bool> {
    if k < 1 {
        bail!("k must be at least 1");
    }
    let reports: Vec<_> = Relation::all(k)
        .into_iter()
        .map(|r| relation_check(k, r, imax, jmax, &lambda))
        .collect();
    let boundary_ok = boundary_check(k, imax, jmax);
    let ok = boundary_ok && reports.iter().all(|r| r.passed());
    print_json(&AnsatzOut {
        k,
        window: [imax, jmax],
        lambda: lambda.to_string(),
        boundary_ok,
        relations: reports
            .iter()
            .map(|r| RelationOut {
                relation: r.relation.to_string(),
                window: [imax, jmax],
                residual_count: r.residuals.len(),
                lambda: lambda.to_string(),
            })
            .collect(),
    })?;
    Ok(ok)
}

fn verify_weights(k: usize, n: usize, p: Params) -> Result<bool> {
    if k < 1 || n < 1 {
        bail!("k and n must be at least 1");
    }
    let params = RateParams::uniform(k, p.alpha.clone(), p.beta.clone(), p.q.clone());
    params.validate(k)?;
    let assign = assign_abq(p.alpha, p.beta, p.q);
    let mut out = WeightsOut {
        k,
        n,
        params: (&params).into(),
        sectors: 0,
        words: 0,
        bridge_ok: true,
        stationary_ok: true,
        failures: Vec::new(),
    };
    for sector in sectors(n, k) {
        out.sectors += 1;
        let words = sector_states(n, &sector)?;
        let weights = words.iter().map(weight).collect::<Vec<_>>();
        let values = weights
            .iter()
            .map(|w| w.eval(&assign))
            .collect::<kpasep::Result<Vec<_>>>()?;
        let z: Rational = values.iter().sum();
        let pi = stationary_exact(n, &sector, &params)?;
        for ((w, wt), v) in words.iter().zip(&weights).zip(&values) {
            out.words += 1;
            let boundary = (w.count(Letter::D) + w.count(Letter::E)) as i32;
            if *wt != &LaurentPoly::abq(boundary, boundary, 0) * &bracket(w, k) {
                out.bridge_ok = false;
                out.failures
                    .push(format!("{w}: weight differs from the matrix product"));
            }
            if pi[w] != v / &z {
                out.stationary_ok = false;
                out.failures
                    .push(format!("{w}: stationary probability differs from weight / Z"));
            }
        }
    }
    let ok = out.bridge_ok && out.stationary_ok;
    print_json(&out)?;
    Ok(ok)
}

fn verify_chain(n: usize, r: usize, p: Params) -> Result<bool> {
    if n < 1 {
        bail!("n must be at least 1");
    }
    let rc = chain(n, r)?;
    let projection = projection_check(&rc)?;
    let balance = detailed_balance_check(&rc)?;
    let stationary = stationary_check(&rc, &p.alpha, &p.beta, &p.q)?;
    let out = ChainOut {
        n,
        r,
        states: rc.len(),
        projection_ok: projection.passed(),
        balance_ok: balance.iter().all(|b| b.passed()),
        contracts_ok: rc.contracts_hold(),
        stationary_matches_weights: stationary.irreducible && stationary.weights_stationary,
        pushforward_matches: stationary.pushforward_matches,
    };
    let ok = out.projection_ok
        && out.balance_ok
        && out.contracts_ok
        && out.stationary_matches_weights
        && out.pushforward_matches;
    print_json(&out)?;
    Ok(ok)
}

fn verify_tilings(word: Word) -> Result<bool> {
    let k = word.min_k();
    if k <= 2 {
        let report = tiling_independence_check(&word);
        let out = TilingsOut {
            word: word.to_string(),
            k,
            tilings: report.sums.len(),
            agree: report.agree(),
            exploratory: false,
        };
        print_json(&out)?;
        return Ok(out.agree);
    }
    let tilings = Tiling::maximal(&word).flip_class();
    let agree = tilings.iter().all(|t| conjecture_probe(t).equal());
    print_json(&TilingsOut {
        word: word.to_string(),
        k,
        tilings: tilings.len(),
        agree,
        exploratory: true,
    })?;
    Ok(true)
}

fn render(args: RenderArgs) -> Result<bool> {
    let k = word_k(&args.word, args.k)?;
    let tiling = match args.tiling {
        TilingChoice::Maximal => Tiling::maximal(&args.word),
        TilingChoice::Minimal => Tiling::minimal(&args.word),
    };
    fs::write(&args.out, render_svg(&tiling, None, k)).with_context(|| format!("writing {}", args.out.display()))?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Stationary(args) => stationary(args),
        Command::Tableaux(cmd) => tableaux(cmd),
        Command::Verify(VerifyCommand::Ansatz { k, window, lambda }) => verify_ansatz(k, window, lambda),
        Command::Verify(VerifyCommand::Weights { k, n, params }) => verify_weights(k, n, params),
        Command::Verify(VerifyCommand::Chain { n, r, params }) => verify_chain(n, r, params),
        Command::Verify(VerifyCommand::Tilings { word }) => verify_tilings(word),
        Command::Count(CountCommand::Classes { n, r }) => {
            emit(&count_classes(n, r)?.to_string())?;
            Ok(true)
        }
        Command::Render(args) => render(args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
