//! Argument parsing, validation and dispatch.
//!
//! [`parse`] turns `argv` into a validated [`Invocation`]; [`execute`] runs
//! it and renders the result in the requested format. Both are pure
//! functions of their input apart from the optional KL cache directory.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_core::chromatic::{self, IndifferenceGraph, ScanKind};
use hecke_core::hecke::{bott_samelson_product, cprime_expand, springer_decomposition};
use hecke_core::parabolic::{bott_samelson_character, good_word_character, good_words};
use hecke_core::{
    Basis, Budget, Engine, HeckeElement, HessenbergFunction, LaurentQ, LaurentRat, ParabolicSet, Permutation,
    SymFunc, Word,
};
use serde::Serialize;

use crate::cache;
use crate::error::{LabError, Result};
use crate::json::{self, GoodWordsJson, HeckeJson, LaurentJson, SymFuncJson};
use crate::render;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Plain,
}

/// How `bs-char` computes `c_J(sigma)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    /// Count the words `b` fixing each minimal coset representative.
    FixedPoints,
    /// Induced character of the Bott-Samelson product.
    Trace,
    /// Count good words over the whole group.
    GoodWords,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LltMethod {
    Plethysm,
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Normalization {
    /// `v^{l(w) - l(u)} P_{sigma,u}(v)`, a polynomial in `v`.
    Shifted,
    /// `P_{sigma,u}(v)` itself.
    Kl,
}

/// Comma separated generator indices; the empty string is the empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Indices(pub Vec<usize>);

impl FromStr for Indices {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Indices(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| format!("{:?} is not a generator index", t)))
            .collect::<std::result::Result<_, _>>()
            .map(Indices)
    }
}

fn parse_word(s: &str) -> std::result::Result<Word, String> {
    Indices::from_str(s).map(|i| Word::new(i.0))
}

fn parse_hessenberg(s: &str) -> std::result::Result<HessenbergFunction, String> {
    let values = Indices::from_str(s)?;
    HessenbergFunction::new(&values.0).map_err(|e| e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "hecke-lab",
    version,
    about = "Exact type A Hecke algebra computations",
    after_help = "Size guard: --max-n (or HECKE_LAB_MAX_N) bounds n for Hecke, KL and parabolic work, default 8. \
                  Symmetric function conversions are limited to degree 12, coloring enumerations to n = 8 \
                  and all-coloring LLT enumeration to n = 6."
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Largest n accepted for Hecke algebra work.
    #[arg(long, global = true, env = "HECKE_LAB_MAX_N")]
    pub max_n: Option<usize>,
    /// Directory holding versioned KL table caches.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Accepted for the property-test harness; results never depend on it.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub verb: Verb,
}

/// Ways to name an element of the Hecke algebra.
#[derive(Debug, Args)]
pub struct HeckeInputArgs {
    /// `q^{l(w)/2} C'_w`.
    #[arg(long)]
    pub w: Option<Permutation>,
    /// `T_w`.
    #[arg(long)]
    pub t: Option<Permutation>,
    /// `prod (1 + T_{s_i})`; needs `--n`.
    #[arg(long, value_parser = parse_word, requires = "n")]
    pub word: Option<Word>,
    #[arg(long)]
    pub n: Option<usize>,
    /// A Hecke element in the JSON layout.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// P_{u,w}(q).
    KlPoly {
        #[arg(long)]
        u: Permutation,
        #[arg(long)]
        w: Permutation,
        #[arg(long)]
        n: Option<usize>,
    },
    /// q^{l(w)/2} C'_w in the T basis.
    KlBasis {
        #[arg(long)]
        w: Permutation,
    },
    /// Coefficients in the basis q^{l(w)/2} C'_w.
    CprimeExpand {
        #[command(flatten)]
        input: HeckeInputArgs,
    },
    /// Character of the representation induced from the trivial one of W_J.
    InducedChar {
        #[command(flatten)]
        input: HeckeInputArgs,
        #[arg(long = "J")]
        j: Indices,
    },
    /// c_J(sigma), the Poincare polynomial of the W_J-invariant cohomology of a Bott-Samelson variety.
    #[command(alias = "bs-poincare")]
    BsChar {
        #[arg(long)]
        n: usize,
        #[arg(long = "J")]
        j: Indices,
        #[arg(long, value_parser = parse_word)]
        word: Word,
        #[arg(long, value_enum, default_value_t = Via::FixedPoints)]
        via: Via,
    },
    /// Good binary words of w for sigma and J.
    GoodWords {
        #[arg(long)]
        w: Permutation,
        #[arg(long, value_parser = parse_word)]
        word: Word,
        #[arg(long = "J")]
        j: Indices,
    },
    /// Frobenius character of a Hecke element.
    Frobenius {
        #[command(flatten)]
        input: HeckeInputArgs,
        #[arg(long, default_value = "s")]
        basis: Basis,
    },
    /// Chromatic quasisymmetric function of the indifference graph of m.
    Csf {
        #[arg(long, value_parser = parse_hessenberg)]
        m: HessenbergFunction,
        #[arg(long, default_value = "e")]
        basis: Basis,
    },
    /// Compares ch(q^{l/2} C'_{w_m}) with omega(csf_q(G_m)).
    ChssCheck {
        #[arg(long, value_parser = parse_hessenberg, conflicts_with = "n", required_unless_present = "n")]
        m: Option<HessenbergFunction>,
        /// Every Hessenberg function of this size.
        #[arg(long)]
        n: Option<usize>,
    },
    /// LLT polynomial of w, or of w_m.
    Llt {
        #[arg(long, conflicts_with = "m", required_unless_present = "m")]
        w: Option<Permutation>,
        #[arg(long, value_parser = parse_hessenberg)]
        m: Option<HessenbergFunction>,
        #[arg(long, value_enum, default_value_t = LltMethod::Plethysm)]
        method: LltMethod,
        #[arg(long, default_value = "s")]
        basis: Basis,
    },
    /// prod (1 + T_{s_i}) for a reduced word, in the C' basis.
    Springer {
        #[arg(long, value_parser = parse_word)]
        word: Word,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Normalization::Shifted)]
        normalization: Normalization,
    },
    /// Poincare polynomial of the W_J-invariant intersection cohomology of a Lusztig variety.
    IhPoincare {
        #[arg(long)]
        w: Permutation,
        #[arg(long = "J")]
        j: Indices,
    },
    /// Report-only scan of a positivity property over S_n.
    Scan {
        #[arg(long)]
        kind: ScanKind,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum HeckeInput {
    Kl(Permutation),
    T(Permutation),
    Word { n: usize, word: Word },
    Element(HeckeElement),
}

impl HeckeInput {
    fn n(&self) -> usize {
        match self {
            HeckeInput::Kl(w) | HeckeInput::T(w) => w.n(),
            HeckeInput::Word { n, .. } => *n,
            HeckeInput::Element(a) => a.n(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    KlPoly { u: Permutation, w: Permutation },
    KlBasis { w: Permutation },
    CprimeExpand { input: HeckeInput },
    InducedChar { input: HeckeInput, j: ParabolicSet },
    BsChar { n: usize, j: ParabolicSet, word: Word, via: Via },
    GoodWords { w: Permutation, word: Word, j: ParabolicSet },
    Frobenius { input: HeckeInput, basis: Basis },
    Csf { m: HessenbergFunction, basis: Basis },
    ChssCheck { ms: Vec<HessenbergFunction> },
    Llt { m: Option<HessenbergFunction>, w: Permutation, method: LltMethod, basis: Basis },
    Springer { n: usize, word: Word, normalization: Normalization },
    IhPoincare { w: Permutation, j: ParabolicSet },
    Scan { kind: ScanKind, n: usize },
}

impl Command {
    /// The symmetric group the command works in.
    pub fn n(&self) -> usize {
        match self {
            Command::KlPoly { w, .. }
            | Command::KlBasis { w }
            | Command::GoodWords { w, .. }
            | Command::Llt { w, .. }
            | Command::IhPoincare { w, .. } => w.n(),
            Command::CprimeExpand { input } | Command::InducedChar { input, .. } | Command::Frobenius { input, .. } => {
                input.n()
            }
            Command::BsChar { n, .. } | Command::Springer { n, .. } | Command::Scan { n, .. } => *n,
            Command::Csf { m, .. } => m.n(),
            Command::ChssCheck { ms } => ms.first().map_or(0, |m| m.n()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub command: Command,
    pub format: Format,
    pub budget: Budget,
    pub cache_dir: Option<PathBuf>,
}

/// Rendered output plus whether a check it reports came out false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub all_hold: bool,
}

pub fn parse<I, T>(argv: I) -> Result<Invocation>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    validate(cli)
}

fn same_n(flag: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(LabError::usage(flag, format!("size mismatch: n = {} here but n = {} elsewhere", got, expected)))
    }
}

fn parabolic(n: usize, j: &Indices) -> Result<ParabolicSet> {
    ParabolicSet::new(n, &j.0).map_err(|e| LabError::usage("--J", e.to_string()))
}

fn word_in(n: usize, word: &Word) -> Result<()> {
    word.check(n).map_err(|e| LabError::usage("--word", e.to_string()))
}

fn hecke_input(args: HeckeInputArgs) -> Result<(HeckeInput, &'static str)> {
    let given = [args.w.is_some(), args.t.is_some(), args.word.is_some(), args.input.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(LabError::usage("--w", "give exactly one of --w, --t, --word, --input"));
    }
    let input = if let Some(w) = args.w {
        (HeckeInput::Kl(w), "--w")
    } else if let Some(w) = args.t {
        (HeckeInput::T(w), "--t")
    } else if let Some(word) = args.word {
        let n = args.n.ok_or_else(|| LabError::usage("--n", "required with --word"))?;
        word_in(n, &word)?;
        (HeckeInput::Word { n, word }, "--n")
    } else {
        let path = args.input.expect("one input is present");
        let text = std::fs::read_to_string(&path).map_err(|source| LabError::Io { path: path.clone(), source })?;
        let j: HeckeJson = json::from_str(&text, &path.display().to_string())?;
        (HeckeInput::Element(json::hecke_from_json(&j)?), "--input")
    };
    if let (Some(n), HeckeInput::Kl(_) | HeckeInput::T(_) | HeckeInput::Element(_)) = (args.n, &input.0) {
        same_n("--n", input.0.n(), n)?;
    }
    Ok(input)
}

fn validate(cli: Cli) -> Result<Invocation> {
    let budget = match cli.max_n {
        Some(m) => Budget::default().with_max_n(m),
        None => Budget::default(),
    };
    let (command, flag) = match cli.verb {
        Verb::KlPoly { u, w, n } => {
            same_n("--u", w.n(), u.n())?;
            if let Some(n) = n {
                same_n("--n", w.n(), n)?;
            }
            (Command::KlPoly { u, w }, "--w")
        }
        Verb::KlBasis { w } => (Command::KlBasis { w }, "--w"),
        Verb::CprimeExpand { input } => {
            let (input, flag) = hecke_input(input)?;
            (Command::CprimeExpand { input }, flag)
        }
        Verb::InducedChar { input, j } => {
            let (input, flag) = hecke_input(input)?;
            let j = parabolic(input.n(), &j)?;
            (Command::InducedChar { input, j }, flag)
        }
        Verb::BsChar { n, j, word, via } => {
            word_in(n, &word)?;
            (Command::BsChar { n, j: parabolic(n, &j)?, word, via }, "--n")
        }
        Verb::GoodWords { w, word, j } => {
            word_in(w.n(), &word)?;
            let j = parabolic(w.n(), &j)?;
            (Command::GoodWords { w, word, j }, "--w")
        }
        Verb::Frobenius { input, basis } => {
            let (input, flag) = hecke_input(input)?;
            (Command::Frobenius { input, basis }, flag)
        }
        Verb::Csf { m, basis } => {
            if m.n() > budget.csf_n {
                return Err(over_budget("--m", m.n(), budget.csf_n));
            }
            return Ok(Invocation { command: Command::Csf { m, basis }, format: cli.format, budget, cache_dir: cli.cache_dir });
        }
        Verb::ChssCheck { m, n } => match (m, n) {
            (Some(m), _) => (Command::ChssCheck { ms: vec![m] }, "--m"),
            (None, Some(n)) => {
                if n == 0 {
                    return Err(LabError::usage("--n", "n must be positive"));
                }
                (Command::ChssCheck { ms: HessenbergFunction::all(n) }, "--n")
            }
            (None, None) => return Err(LabError::usage("--m", "give --m or --n")),
        },
        Verb::Llt { w, m, method, basis } => {
            let (w, m, flag) = match (w, m) {
                (_, Some(m)) => (m.codominant(), Some(m), "--m"),
                (Some(w), None) => {
                    let m = HessenbergFunction::all(w.n()).into_iter().find(|m| m.codominant() == w);
                    (w, m, "--w")
                }
                (None, None) => return Err(LabError::usage("--w", "give --w or --m")),
            };
            if method == LltMethod::Direct && m.is_none() {
                return Err(LabError::usage(flag, "the direct method needs a codominant permutation w_m"));
            }
            if w.n() > budget.llt_n {
                return Err(over_budget(flag, w.n(), budget.llt_n));
            }
            (Command::Llt { m, w, method, basis }, flag)
        }
        Verb::Springer { word, n, normalization } => {
            word_in(n, &word)?;
            if !word.is_reduced(n)? {
                return Err(LabError::usage("--word", "the word is not reduced"));
            }
            (Command::Springer { n, word, normalization }, "--n")
        }
        Verb::IhPoincare { w, j } => {
            let j = parabolic(w.n(), &j)?;
            (Command::IhPoincare { w, j }, "--w")
        }
        Verb::Scan { kind, n } => {
            if n == 0 {
                return Err(LabError::usage("--n", "n must be positive"));
            }
            (Command::Scan { kind, n }, "--n")
        }
    };
    if command.n() > budget.max_n {
        return Err(over_budget(flag, command.n(), budget.max_n));
    }
    Ok(Invocation { command, format: cli.format, budget, cache_dir: cli.cache_dir })
}

fn over_budget(flag: &'static str, n: usize, limit: usize) -> LabError {
    LabError::usage(flag, format!("n = {} exceeds the size guard {} (raise with --max-n or HECKE_LAB_MAX_N)", n, limit))
}

/// Parses and executes in one step.
pub fn run<I, T>(argv: I) -> Result<Outcome>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    execute(&parse(argv)?)
}

/// Runs the command against a fresh engine, reading and writing the KL cache
/// for its `n` when a cache directory is set.
pub fn execute(inv: &Invocation) -> Result<Outcome> {
    let mut engine = Engine::new(inv.budget);
    let n = inv.command.n();
    let cacheable = n > 0 && n <= inv.budget.max_n;
    let mut before = 0;
    if let (Some(dir), true) = (&inv.cache_dir, cacheable) {
        if let Some(table) = cache::load(dir, n, &inv.budget)? {
            before = table.computed_count();
            engine.set_kl_table(table);
        }
    }
    let out = dispatch(&inv.command, inv.format, &mut engine)?;
    if let (Some(dir), true) = (&inv.cache_dir, cacheable) {
        if let Some(table) = engine.cached_kl_table(n) {
            if table.computed_count() > before {
                cache::save(dir, table)?;
            }
        }
    }
    Ok(out)
}

struct Rendered<T> {
    json: T,
    latex: String,
    plain: String,
}

impl<T: Serialize> Rendered<T> {
    fn pick(self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => json::to_string(&self.json)?,
            Format::Latex => self.latex,
            Format::Plain => self.plain,
        })
    }
}

fn laurent_out<C>(p: &hecke_core::Laurent<C>) -> Rendered<LaurentJson>
where
    C: hecke_core::laurent::Coeff + std::fmt::Display,
{
    Rendered { json: json::laurent_to_json(p), latex: render::laurent_latex(p), plain: p.to_string() }
}

fn expansion_out(n: usize, terms: &BTreeMap<hecke_core::Permutation, LaurentQ>, symbol: &str) -> Rendered<HeckeJson> {
    Rendered {
        json: json::expansion_to_json(n, terms),
        latex: render::expansion_latex(terms, symbol),
        plain: render::expansion_plain(terms, symbol),
    }
}

fn symfunc_out(f: &SymFunc<LaurentRat>) -> Rendered<SymFuncJson> {
    Rendered { json: json::symfunc_to_json(f), latex: render::symfunc_latex(f), plain: render::symfunc_plain(f) }
}

fn hecke_element(input: &HeckeInput, engine: &mut Engine) -> Result<HeckeElement> {
    Ok(match input {
        HeckeInput::Kl(w) => engine.kl_basis_element(w)?,
        HeckeInput::T(w) => HeckeElement::basis(w),
        HeckeInput::Word { n, word } => bott_samelson_product(*n, word)?,
        HeckeInput::Element(a) => a.clone(),
    })
}

fn in_basis(f: &SymFunc<LaurentRat>, basis: Basis, engine: &mut Engine) -> Result<SymFunc<LaurentRat>> {
    Ok(engine.sym().change_basis(f, basis)?)
}

fn dispatch(command: &Command, format: Format, engine: &mut Engine) -> Result<Outcome> {
    let ok = |text| Outcome { text, all_hold: true };
    match command {
        Command::KlPoly { u, w } => {
            let p = engine.kl_table(w.n())?.kl_polynomial(u, w)?;
            laurent_out(&p).pick(format).map(ok)
        }
        Command::KlBasis { w } => {
            let e = engine.kl_basis_element(w)?;
            expansion_out(w.n(), &render::hecke_map(&e), "T").pick(format).map(ok)
        }
        Command::CprimeExpand { input } => {
            let a = hecke_element(input, engine)?;
            let coeffs = cprime_expand(&a, engine.kl_table(a.n())?)?;
            expansion_out(a.n(), &coeffs, "C'").pick(format).map(ok)
        }
        Command::InducedChar { input, j } => {
            let a = hecke_element(input, engine)?;
            laurent_out(&engine.induced_character(&a, j)?).pick(format).map(ok)
        }
        Command::BsChar { n, j, word, via } => {
            let c = match via {
                Via::FixedPoints => bott_samelson_character(*n, word, j)?,
                Via::Trace => engine.induced_character(&bott_samelson_product(*n, word)?, j)?,
                Via::GoodWords => good_word_character(*n, word, j)?,
            };
            laurent_out(&c).pick(format).map(ok)
        }
        Command::GoodWords { w, word, j } => {
            let good = good_words(w, word, j)?;
            let dump: GoodWordsJson = json::good_words_to_json(w, &good);
            let words: Vec<String> =
                dump.good.iter().map(|b| b.iter().map(|x| x.to_string()).collect::<String>()).collect();
            Rendered {
                latex: format!("\\{{{}\\}}", words.join(",")),
                plain: words.join("\n"),
                json: dump,
            }
            .pick(format)
            .map(ok)
        }
        Command::Frobenius { input, basis } => {
            let a = hecke_element(input, engine)?;
            let ch = engine.frobenius_character(&a)?;
            symfunc_out(&in_basis(&ch, *basis, engine)?).pick(format).map(ok)
        }
        Command::Csf { m, basis } => {
            let x = chromatic::csf_q(&IndifferenceGraph::new(m), engine.budget())?;
            symfunc_out(&in_basis(&x, *basis, engine)?).pick(format).map(ok)
        }
        Command::ChssCheck { ms } => chss(ms, format, engine),
        Command::Llt { m, w, method, basis } => {
            let x = match (method, m) {
                (LltMethod::Direct, Some(m)) => chromatic::llt_direct(m, engine.budget())?,
                _ => chromatic::llt_plethysm(w, engine)?,
            };
            symfunc_out(&in_basis(&x, *basis, engine)?).pick(format).map(ok)
        }
        Command::Springer { n, word, normalization } => {
            let mut coeffs = springer_decomposition(*n, word, engine.kl_table(*n)?)?;
            if *normalization == Normalization::Kl {
                let top = word.len() as i32;
                for (u, c) in coeffs.iter_mut() {
                    *c = c.shift(u.length() as i32 - top);
                }
            }
            expansion_out(*n, &coeffs, "C'").pick(format).map(ok)
        }
        Command::IhPoincare { w, j } => {
            let e = engine.kl_basis_element(w)?;
            laurent_out(&engine.induced_character(&e, j)?).pick(format).map(ok)
        }
        Command::Scan { kind, n } => scan(*kind, *n, format, engine),
    }
}

#[derive(Debug, Serialize)]
struct ChssJson {
    m: Vec<usize>,
    w: Vec<usize>,
    holds: bool,
    hecke_side: SymFuncJson,
    coloring_side: SymFuncJson,
}

fn chss(ms: &[HessenbergFunction], format: Format, engine: &mut Engine) -> Result<Outcome> {
    let mut rows = Vec::with_capacity(ms.len());
    let mut plain = Vec::new();
    let mut latex = vec!["\\begin{tabular}{lll}".to_string(), "$m$ & $w_m$ & holds \\\\".to_string()];
    for m in ms {
        let r = chromatic::chss_check(m, engine)?;
        let holds = r.holds();
        plain.push(format!("{}\t{}\t{}", m, r.w, if holds { "holds" } else { "FAILS" }));
        for (lam, a, b) in r.diff() {
            plain.push(format!("\tm{}: {} vs {}", lam, a, b));
        }
        latex.push(format!("${}$ & ${}$ & {} \\\\", m, r.w, if holds { "yes" } else { "no" }));
        rows.push(ChssJson {
            m: m.values().to_vec(),
            w: r.w.to_vec(),
            holds,
            hecke_side: json::symfunc_to_json(&r.hecke_side),
            coloring_side: json::symfunc_to_json(&r.coloring_side),
        });
    }
    latex.push("\\end{tabular}".to_string());
    let all_hold = rows.iter().all(|r| r.holds);
    let text = Rendered { json: rows, latex: latex.join("\n"), plain: plain.join("\n") }.pick(format)?;
    Ok(Outcome { text, all_hold })
}

#[derive(Debug, Serialize)]
struct ScanRowJson {
    w: Vec<usize>,
    verdict: bool,
    expansion: SymFuncJson,
    failing: Vec<Vec<usize>>,
}

#[derive(Debug, Serialize)]
struct ScanJson {
    kind: String,
    n: usize,
    convention: String,
    rows: Vec<ScanRowJson>,
}

fn scan(kind: ScanKind, n: usize, format: Format, engine: &mut Engine) -> Result<Outcome> {
    let report = chromatic::conjecture_scan(kind, n, engine)?;
    let failures = report.failures().count();
    let mut plain = vec![format!("# {} scan, n = {}: {}", kind, n, kind.convention())];
    let mut latex = vec!["\\begin{tabular}{lll}".to_string(), "$w$ & verdict & expansion \\\\".to_string()];
    let mut rows = Vec::with_capacity(report.rows.len());
    for row in &report.rows {
        let verdict = if row.verdict { "PASS" } else { "FAIL" };
        plain.push(format!("{}\t{}\t{}", row.w, verdict, render::symfunc_plain(&row.expansion)));
        latex.push(format!("${}$ & {} & ${}$ \\\\", row.w, verdict, render::symfunc_latex(&row.expansion)));
        rows.push(ScanRowJson {
            w: row.w.to_vec(),
            verdict: row.verdict,
            expansion: json::symfunc_to_json(&row.expansion),
            failing: row.coefficient_verdicts.iter().filter(|(_, ok)| !ok).map(|(l, _)| l.parts().to_vec()).collect(),
        });
    }
    plain.push(format!("# {} of {} permutations fail", failures, report.rows.len()));
    latex.push("\\end{tabular}".to_string());
    let json = ScanJson { kind: kind.name().to_string(), n, convention: kind.convention().to_string(), rows };
    let text = Rendered { json, latex: latex.join("\n"), plain: plain.join("\n") }.pick(format)?;
    Ok(Outcome { text, all_hold: true })
}
