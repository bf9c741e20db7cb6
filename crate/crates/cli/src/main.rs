use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gcat_core::finset::enumerate_homs;
use gcat_core::groebner::{hilbert_function, is_member};
use gcat_core::io::{
    self, hilbert_csv, hilbert_rows, BasisFile, ElementJson, HilbertRow, PolyJson,
};
use gcat_core::oracle::oracle_dims;
use gcat_core::order::{find_domination, DominationMode, MapDivisibility};
use gcat_core::sample;
use gcat_core::upoly::UPoly;
use gcat_core::verify::{self, Suite, SuiteConfig};
use gcat_core::{
    buchberger, CatKind, CategoryOracle, FinMap, GcatError, GroebnerBasis, NaturalMonoid,
    OrderedSurjections, PrimeField, SubfunctorPresentation,
};

/// Groebner bases, well-quasi-orders and base change over categories of finite sets.
#[derive(Parser)]
#[command(name = "gcat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the morphisms m -> n of a category of finite sets.
    Homs(HomsArgs),
    /// Look for a dominated pair or chain in a sequence of maps into n.
    Wqo(WqoArgs),
    /// Complete generators to a Groebner basis up to a width bound.
    Groebner(GroebnerArgs),
    /// Decide membership of an element in the subfunctor of a basis file.
    Member(MemberArgs),
    /// Print the Hilbert function of a basis file next to the rank oracle.
    Hilbert(HilbertArgs),
    /// Run a property suite.
    Verify(VerifyArgs),
    /// Worked examples.
    Demo {
        #[command(subcommand)]
        demo: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// Ideal membership in one variable against the gcd of the generators.
    Poly(PolyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineCat {
    /// Ordered surjections with the lexicographic order.
    Os,
    /// The degree-filtered monoid of natural numbers.
    Nat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    FirstPair,
    Chain,
}

fn parse_cat(s: &str) -> Result<CatKind, String> {
    s.parse::<CatKind>().map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

#[derive(Args)]
struct HomsArgs {
    /// all, sur, os or inj.
    #[arg(long, value_parser = parse_cat)]
    cat: CatKind,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ListFormat,
}

#[derive(Args)]
struct WqoArgs {
    /// JSON list of maps; when absent a random sequence is drawn.
    #[arg(long)]
    seq: Option<PathBuf>,
    /// Codomain size of random maps.
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 200)]
    length: usize,
    #[arg(long, default_value_t = 12)]
    max_domain: usize,
    /// Number of terms inspected; defaults to the whole sequence.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum, default_value = "first-pair")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GroebnerArgs {
    #[arg(long, value_enum, default_value = "os")]
    cat: EngineCat,
    /// Generators: a JSON list of elements, or polynomials for `--cat nat`.
    #[arg(long)]
    gens: PathBuf,
    #[arg(long)]
    p: u32,
    #[arg(long)]
    width: usize,
    /// Target object; inferred from the generators when omitted.
    #[arg(long)]
    x: Option<usize>,
    /// Number of coordinates; inferred from the generators when omitted.
    #[arg(long)]
    k: Option<usize>,
    /// Basis file to write; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Hilbert table to write as CSV.
    #[arg(long)]
    hilbert: Option<PathBuf>,
    /// Cross-check the basis against the row-reduction oracle.
    #[arg(long)]
    check_oracle: bool,
}

#[derive(Args)]
struct MemberArgs {
    #[arg(long)]
    basis: PathBuf,
    /// Element JSON, or `{"poly": ...}` for a monoid basis.
    #[arg(long)]
    elem: PathBuf,
}

#[derive(Args)]
struct HilbertArgs {
    #[arg(long)]
    basis: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[arg(long)]
    check_oracle: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long)]
    max: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PolyArgs {
    /// Comma-separated generators, e.g. "x^2+x+1,x^3+1".
    #[arg(long)]
    gens: String,
    #[arg(long)]
    p: u32,
    /// Width bound; probes have degree at most this.
    #[arg(long, default_value_t = 8)]
    deg: usize,
    /// Random probes used when exhaustive checking is too large.
    #[arg(long, default_value_t = 1000)]
    probes: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Why a command stopped early; each maps to one exit code.
enum Failure {
    Property(String),
    Input(String),
    CrossCheck(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Property(_) => 1,
            Failure::Input(_) => 2,
            Failure::CrossCheck(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Property(m) | Failure::Input(m) | Failure::CrossCheck(m) => m,
        }
    }
}

impl From<GcatError> for Failure {
    fn from(e: GcatError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_out(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn field(p: u32) -> Result<PrimeField, Failure> {
    Ok(PrimeField::new(p)?)
}

fn configure_threads() -> CmdResult {
    let Ok(raw) = std::env::var("GCAT_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Input(format!("GCAT_THREADS must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Input(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|_| match cli.command {
        Command::Homs(a) => homs(a),
        Command::Wqo(a) => wqo(a),
        Command::Groebner(a) => groebner(a),
        Command::Member(a) => member(a),
        Command::Hilbert(a) => hilbert(a),
        Command::Verify(a) => run_verify(a),
        Command::Demo { demo: Demo::Poly(a) } => demo_poly(a),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("gcat: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn values_text(f: &FinMap) -> String {
    let parts: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn homs(a: HomsArgs) -> CmdResult {
    let maps = enumerate_homs(a.cat, a.from, a.to);
    let text = match a.format {
        ListFormat::Text => {
            let mut s = format!("count {}\n", maps.len());
            for f in &maps {
                s.push_str(&values_text(f));
                s.push('\n');
            }
            s
        }
        ListFormat::Json => pretty(&json!({
            "cat": a.cat.short_name(),
            "from": a.from,
            "to": a.to,
            "count": maps.len(),
            "maps": maps,
        }))?,
    };
    write_out(None, &text)
}

fn wqo(a: WqoArgs) -> CmdResult {
    let (seq, n) = match &a.seq {
        Some(path) => {
            let seq = io::parse_sequence(&read(path)?)?;
            let n = seq.first().map_or(a.n, |f| f.codomain_size());
            if let Some(bad) = seq.iter().find(|f| f.codomain_size() != n) {
                return Err(Failure::Input(format!(
                    "{bad} does not share the codomain {n} of the first map"
                )));
            }
            (seq, n)
        }
        None => {
            if a.n == 0 {
                return Err(Failure::Input("random sequences need --n at least 1".into()));
            }
            let mut rng = sample::trial_rng(a.seed, 0);
            let seq = (0..a.length)
                .map(|_| sample::map(&mut rng, a.n, a.max_domain))
                .collect();
            (seq, a.n)
        }
    };
    let budget = a.budget.unwrap_or(seq.len());
    if budget == 0 {
        return Err(Failure::Input("--budget must be at least 1".into()));
    }
    let mode = match a.mode {
        Mode::FirstPair => DominationMode::FirstPair,
        Mode::Chain => DominationMode::Chain,
    };
    let result = find_domination(&MapDivisibility { n }, seq.iter().cloned(), budget, mode);
    write_out(
        None,
        &pretty(&json!({
            "n": n,
            "length": seq.len(),
            "budget": budget,
            "mode": mode,
            "result": result,
        }))?,
    )
}

/// Resolves `--x`/`--k` against the generators.
fn shape_of(
    gens_shape: Option<(usize, usize)>,
    x: Option<usize>,
    k: Option<usize>,
) -> Result<(usize, usize), Failure> {
    match (gens_shape, x, k) {
        (Some((gx, gk)), x, k) => {
            if x.is_some_and(|x| x != gx) || k.is_some_and(|k| k != gk) {
                return Err(Failure::Input(format!(
                    "generators live over x = {gx} with k = {gk}, which conflicts with the flags"
                )));
            }
            Ok((gx, gk))
        }
        (None, Some(x), k) => Ok((x, k.unwrap_or(1))),
        (None, None, _) => Err(Failure::Input(
            "no generators to infer the target from; pass --x".into(),
        )),
    }
}

/// Hilbert table of `gb` with the rank oracle run on `presentation`.
fn table<C: CategoryOracle>(
    oracle: &C,
    gb: &GroebnerBasis<C::Mor>,
    presentation: &SubfunctorPresentation<C::Mor>,
) -> Result<Vec<HilbertRow>, Failure> {
    Ok(hilbert_rows(&hilbert_function(oracle, gb), &oracle_dims(oracle, presentation)?))
}

fn cross_check<C: CategoryOracle>(
    oracle: &C,
    gb: &GroebnerBasis<C::Mor>,
    presentation: &SubfunctorPresentation<C::Mor>,
    rows: &[HilbertRow],
) -> CmdResult {
    if let Some(r) = rows.iter().find(|r| !r.agree) {
        return Err(Failure::CrossCheck(format!(
            "level {}: {} monomials in the leading sieve but rank {}",
            r.level, r.dim_standard_monomials, r.dim_rank_oracle
        )));
    }
    for (i, g) in presentation.generators().iter().enumerate() {
        if !is_member(oracle, g, gb)? {
            return Err(Failure::CrossCheck(format!(
                "generator {i} does not reduce to zero"
            )));
        }
    }
    Ok(())
}

fn groebner(a: GroebnerArgs) -> CmdResult {
    let fp = field(a.p)?;
    if a.width == 0 {
        return Err(Failure::Input("--width must be at least 1".into()));
    }
    let text = read(&a.gens)?;
    match a.cat {
        EngineCat::Os => {
            let gens = io::parse_os_elements(&text)?;
            if let Some(g) = gens.iter().find(|g| g.field() != fp) {
                return Err(Failure::Input(format!(
                    "generator over F_{} but --p is {}",
                    g.field().characteristic(),
                    a.p
                )));
            }
            let (x, k) = shape_of(gens.first().map(|g| (g.target(), g.k())), a.x, a.k)?;
            let presentation = SubfunctorPresentation::new(x, k, fp, a.width, gens)?;
            let os = OrderedSurjections;
            let gb = buchberger(&os, &presentation)?;
            finish_groebner(&os, &gb, &presentation, &a, pretty(&io::os_basis_to_file(&gb))?)
        }
        EngineCat::Nat => {
            if a.x.is_some_and(|x| x != 0) || a.k.is_some_and(|k| k != 1) {
                return Err(Failure::Input("the monoid instance has x = 0 and k = 1".into()));
            }
            let polys = io::parse_polys(&text, fp)?;
            let presentation = sample::poly_presentation(fp, a.width, &polys)?;
            let nat = NaturalMonoid;
            let gb = buchberger(&nat, &presentation)?;
            finish_groebner(&nat, &gb, &presentation, &a, pretty(&io::poly_basis_to_file(&gb))?)
        }
    }
}

fn finish_groebner<C: CategoryOracle>(
    oracle: &C,
    gb: &GroebnerBasis<C::Mor>,
    presentation: &SubfunctorPresentation<C::Mor>,
    a: &GroebnerArgs,
    basis_json: String,
) -> CmdResult {
    write_out(a.out.as_deref(), &basis_json)?;
    if a.hilbert.is_none() && !a.check_oracle {
        return Ok(());
    }
    let rows = table(oracle, gb, presentation)?;
    if let Some(path) = &a.hilbert {
        write_out(Some(path), &hilbert_csv(&rows))?;
    }
    if a.check_oracle {
        cross_check(oracle, gb, presentation, &rows)?;
    }
    Ok(())
}

/// A basis file of either instance.
enum LoadedBasis {
    Os(GroebnerBasis<FinMap>),
    Nat(GroebnerBasis<gcat_core::PowerMap>),
}

fn load_basis(path: &Path) -> Result<LoadedBasis, Failure> {
    let text = read(path)?;
    match io::basis_category(&text)?.as_str() {
        "os" => {
            let file: BasisFile<ElementJson> = serde_json::from_str(&text)?;
            Ok(LoadedBasis::Os(io::os_basis_from_file(&file)?))
        }
        "nat" => {
            let file: BasisFile<PolyJson> = serde_json::from_str(&text)?;
            Ok(LoadedBasis::Nat(io::poly_basis_from_file(&file)?))
        }
        other => Err(Failure::Input(format!("unknown category `{other}` in basis file"))),
    }
}

fn member(a: MemberArgs) -> CmdResult {
    let elem_text = read(&a.elem)?;
    let verdict = match load_basis(&a.basis)? {
        LoadedBasis::Os(gb) => {
            let raw: ElementJson = serde_json::from_str(&elem_text)?;
            let v = raw.to_element()?;
            json!({ "level": v.level(), "member": is_member(&OrderedSurjections, &v, &gb)? })
        }
        LoadedBasis::Nat(gb) => {
            let raw: PolyJson = serde_json::from_str(&elem_text)?;
            let v = raw.to_element(gb.field)?;
            json!({ "level": v.level(), "member": is_member(&NaturalMonoid, &v, &gb)? })
        }
    };
    write_out(None, &pretty(&verdict)?)
}

fn basis_presentation<M: Ord + Clone>(gb: &GroebnerBasis<M>) -> Result<SubfunctorPresentation<M>, Failure> {
    Ok(SubfunctorPresentation::new(
        gb.target,
        gb.k,
        gb.field,
        gb.width,
        gb.elements.clone(),
    )?)
}

fn hilbert(a: HilbertArgs) -> CmdResult {
    let rows = match load_basis(&a.basis)? {
        LoadedBasis::Os(gb) => {
            let p = basis_presentation(&gb)?;
            let rows = table(&OrderedSurjections, &gb, &p)?;
            if a.check_oracle {
                cross_check(&OrderedSurjections, &gb, &p, &rows)?;
            }
            rows
        }
        LoadedBasis::Nat(gb) => {
            let p = basis_presentation(&gb)?;
            let rows = table(&NaturalMonoid, &gb, &p)?;
            if a.check_oracle {
                cross_check(&NaturalMonoid, &gb, &p, &rows)?;
            }
            rows
        }
    };
    let text = match a.format {
        TableFormat::Csv => hilbert_csv(&rows),
        TableFormat::Json => pretty(&rows)?,
    };
    write_out(None, &text)
}

fn run_verify(a: VerifyArgs) -> CmdResult {
    let cfg = SuiteConfig::for_suite(a.suite, a.max, a.trials, a.seed);
    let report = verify::run(a.suite, &cfg)?;
    write_out(a.out.as_deref(), &pretty(&report)?)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Property(format!(
            "suite {}: {} of {} cases failed",
            report.suite, report.failures, report.cases
        )))
    }
}

/// Exhaustive probing is used up to this many polynomials.
const EXHAUSTIVE_LIMIT: u64 = 4096;

fn all_polys(fp: PrimeField, max_degree: usize) -> Vec<UPoly> {
    let p = fp.characteristic();
    let total = (p as u64).pow(max_degree as u32 + 1);
    (0..total)
        .map(|mut code| {
            let coeffs = (0..=max_degree)
                .map(|_| {
                    let c = (code % p as u64) as u32;
                    code /= p as u64;
                    c
                })
                .collect();
            UPoly::new(fp, coeffs)
        })
        .collect()
}

fn demo_poly(a: PolyArgs) -> CmdResult {
    let fp = field(a.p)?;
    let polys = io::parse_polys(&a.gens, fp)?;
    if polys.iter().any(|g| g.degree().is_some_and(|d| d > a.deg)) {
        return Err(Failure::Input(format!("generators must have degree at most {}", a.deg)));
    }
    let presentation = sample::poly_presentation(fp, a.deg, &polys)?;
    let nat = NaturalMonoid;
    let gb = buchberger(&nat, &presentation)?;
    let gcd = UPoly::gcd_all(fp, &polys);
    let exhaustive = (a.p as u64)
        .checked_pow(a.deg as u32 + 1)
        .is_some_and(|n| n <= EXHAUSTIVE_LIMIT);
    let probes = if exhaustive {
        all_polys(fp, a.deg)
    } else {
        let mut rng = sample::trial_rng(a.seed, 0);
        (0..a.probes)
            .map(|_| sample::poly_probe(&mut rng, &gcd, a.deg))
            .collect()
    };
    let mut members = 0usize;
    let mut disagreements: Vec<Value> = Vec::new();
    for q in &probes {
        let engine = is_member(&nat, &q.to_element(a.deg)?, &gb)?;
        let expected = gcd.divides(q);
        members += usize::from(engine);
        if engine != expected {
            disagreements.push(json!({ "poly": q.to_string(), "engine": engine, "gcd_divides": expected }));
        }
    }
    let rows = table(&nat, &gb, &presentation)?;
    let report = json!({
        "p": a.p,
        "width": a.deg,
        "generators": polys.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "gcd": gcd.to_string(),
        "basis": gb.elements.iter().map(|v| UPoly::from_element(v).to_string()).collect::<Vec<_>>(),
        "hilbert": rows,
        "probes": probes.len(),
        "exhaustive": exhaustive,
        "members": members,
        "disagreements": disagreements,
    });
    write_out(None, &pretty(&report)?)?;
    if !disagreements.is_empty() {
        return Err(Failure::CrossCheck(format!(
            "{} probes disagree with gcd divisibility",
            disagreements.len()
        )));
    }
    if let Some(r) = rows.iter().find(|r| !r.agree) {
        return Err(Failure::CrossCheck(format!("Hilbert table disagrees at level {}", r.level)));
    }
    Ok(())
}
