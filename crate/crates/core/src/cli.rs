//! Command-line surface: `gen`, `verify`, `corr` and `info`.
//!
//! Exit codes: 0 success, 1 verification verdict failed (`verify`),
//! 2 invalid parameters or unreadable input, 3 a construction failed
//! verification (nothing is written).

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::code::{Code, CodeSet};
use crate::construct::{
    build_mccc_szccs, default_permutation_family, extend_ccc, mos_dft, mos_hadamard,
    mult_matrix_ccc, multiplication_matrix, MultMatrixParams,
};
use crate::correlate::{aacf, accf_vector, pacf2d};
use crate::error::Error;
use crate::family::{MosFamily, Permutation, PermutationFamily};
use crate::io::fixtures;
use crate::io::{write_accf_csv, write_pacf_csv, CodeSetDocument, DocumentKind, Provenance};
use crate::verify::{
    measure_symmetric_zone, verify_ccc, verify_gcs, verify_mccc, verify_mos, verify_perfect_array,
    verify_szccs, Verdict,
};

pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CONSTRUCTION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "szccs",
    version,
    about = "Construct and verify complementary code sets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a construction, verify it, and write the document.
    Gen(GenArgs),
    /// Check a property of a document and print the JSON verdict.
    Verify(VerifyArgs),
    /// Print an exhaustive correlation table as CSV.
    Corr(CorrArgs),
    /// Summarise a document, or list the bundled fixtures.
    Info(InfoArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    /// Multiplication matrix (perfect array).
    Perfect,
    /// Row-shift CCC of a multiplication matrix.
    CccMult,
    /// Length extension of a seed CCC.
    Extend,
    /// MCCC / optimal symmetrical ZCCS bundle.
    Szccs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MosKind {
    Dft,
    Hadamard,
    /// `(−,−)`, `(+,−)`.
    Example1,
    /// Rows of the square code in `--mos-file`.
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Txt,
    Csv,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub construction: Construction,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
    pub s: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub x: i64,
    #[arg(long)]
    pub p: Option<usize>,
    /// Seed CCC: a document path, or `example1` for the bundled (4,3)-CCC.
    #[arg(long)]
    pub seed: Option<String>,
    /// Sign family; defaults to `example1` with `--perms example1`, else `dft`.
    #[arg(long, value_enum)]
    pub mos: Option<MosKind>,
    #[arg(long)]
    pub mos_file: Option<PathBuf>,
    /// `default`, `example1`, `file`, or 1-based lists like `1,2,3,4;2,1,4,3`.
    #[arg(long, default_value = "default")]
    pub perms: String,
    #[arg(long)]
    pub perms_file: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PropertyArg {
    Perfect,
    Gcs,
    Ccc,
    Szccs,
    Mccc,
    Mos,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, value_enum)]
    pub property: PropertyArg,
    #[arg(long)]
    pub z: Option<usize>,
    /// Code index for single-code properties.
    #[arg(long)]
    pub code: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CorrMode {
    Pacf,
    Accf,
}

#[derive(Debug, Args)]
pub struct CorrArgs {
    pub file_a: PathBuf,
    pub file_b: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = CorrMode::Accf)]
    pub mode: CorrMode,
    #[arg(long, default_value_t = 0)]
    pub code_a: usize,
    /// Defaults to `--code-a` (an autocorrelation) when no second file is given.
    #[arg(long)]
    pub code_b: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    pub file: Option<PathBuf>,
}

/// A command failure with its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn invalid(message: impl fmt::Display) -> Self {
        CliError {
            code: EXIT_INVALID,
            message: message.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::VerificationFailed { .. } => EXIT_CONSTRUCTION,
            _ => EXIT_INVALID,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::invalid(e)
    }
}

type CliResult<T = ()> = Result<T, CliError>;

/// Run a parsed command; `Ok(code)` is the exit status to report.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> CliResult<i32> {
    match cli.command {
        Command::Gen(a) => cmd_gen(&a, stdout).map(|_| 0),
        Command::Verify(a) => cmd_verify(&a, stdout),
        Command::Corr(a) => cmd_corr(&a, stdout).map(|_| 0),
        Command::Info(a) => cmd_info(&a, stdout).map(|_| 0),
    }
}

fn read_document(path: &Path) -> CliResult<CodeSetDocument> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))?;
    CodeSetDocument::parse(&text).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

fn load_seed(spec: &str) -> CliResult<(CodeSet, String)> {
    if spec == "example1" {
        return Ok((fixtures::example1_seed(), "example1_seed".into()));
    }
    let doc = read_document(Path::new(spec))?;
    Ok((doc.to_code_set()?, spec.to_string()))
}

fn load_mos(kind: MosKind, p: usize, file: Option<&Path>) -> CliResult<MosFamily> {
    Ok(match kind {
        MosKind::Dft => mos_dft(p)?,
        MosKind::Hadamard => mos_hadamard(p)?,
        MosKind::Example1 => fixtures::example1_mos(),
        MosKind::File => {
            let path = file.ok_or_else(|| CliError::invalid("--mos file needs --mos-file"))?;
            let doc = read_document(path)?;
            let codes = doc.to_codes()?;
            let [code] = codes.as_slice() else {
                return Err(CliError::invalid("sign family file must hold one code"));
            };
            MosFamily::new(code.alphabet(), code.to_rows())?
        }
    })
}

/// Parse `1,2,3,4;2,1,4,3` (or one permutation per line).
pub fn parse_permutations(text: &str) -> Result<Vec<Permutation>, Error> {
    text.split([';', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty() && !s.starts_with('#'))
        .map(|s| {
            let images = s
                .split([',', ' ', '\t'])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line: 1,
                        message: format!("bad permutation entry {t:?}"),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Permutation::from_one_based(&images)
        })
        .collect()
}

fn load_perms(args: &GenArgs, m: usize) -> CliResult<Vec<Permutation>> {
    match args.perms.as_str() {
        "default" => Ok(Vec::new()),
        "example1" => Ok(fixtures::example1_perms()?.perms().to_vec()),
        "file" => {
            let path = args
                .perms_file
                .as_ref()
                .ok_or_else(|| CliError::invalid("--perms file needs --perms-file"))?;
            Ok(parse_permutations(&fs::read_to_string(path)?)?)
        }
        list => {
            let perms = parse_permutations(list)?;
            if let Some(p) = perms.iter().find(|p| p.degree() != m) {
                return Err(CliError::invalid(format!(
                    "permutation {p} does not act on {m} codes"
                )));
            }
            Ok(perms)
        }
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::invalid(format!("missing --{flag}")))
}

fn ensure_passed(verdicts: &[Verdict]) -> CliResult {
    if let Some(v) = verdicts.iter().find(|v| !v.passed) {
        return Err(CliError {
            code: EXIT_CONSTRUCTION,
            message: format!("construction failed verification: {}", v.summary()),
        });
    }
    Ok(())
}

/// Build the requested construction and its verdicts without writing it.
pub fn generate(args: &GenArgs) -> CliResult<CodeSetDocument> {
    let doc = match args.construction {
        Construction::Perfect | Construction::CccMult => {
            let m = require(args.m, "m")?;
            let params = MultMatrixParams::new(m, args.s, args.x)?;
            let prov = |name: &str| {
                Provenance::new(name)
                    .with("m", m)
                    .with("s", args.s)
                    .with("x", args.x)
            };
            if args.construction == Construction::Perfect {
                let code = multiplication_matrix(params);
                let mut doc = CodeSetDocument::from_code(&code, prov("perfect"));
                doc.verdicts.push(verify_perfect_array(&code));
                doc
            } else {
                let set = mult_matrix_ccc(params);
                let mut doc = CodeSetDocument::from_set(&set, prov("ccc-mult"));
                doc.verdicts.push(verify_ccc(&set));
                doc
            }
        }
        Construction::Extend | Construction::Szccs => {
            let seed_spec = args
                .seed
                .as_deref()
                .ok_or_else(|| CliError::invalid("missing --seed"))?;
            let (seed, seed_name) = load_seed(seed_spec)?;
            let p = require(args.p, "p")?;
            let m = seed.len();
            let mos_kind = args.mos.unwrap_or(if args.perms == "example1" {
                MosKind::Example1
            } else {
                MosKind::Dft
            });
            let mos = load_mos(mos_kind, p, args.mos_file.as_deref())?;
            let perms = load_perms(args, m)?;
            let mos_label = format!("{mos_kind:?}").to_lowercase();
            if args.construction == Construction::Extend {
                let pi = match perms.as_slice() {
                    [] => Permutation::identity(m),
                    [pi] => pi.clone(),
                    [pi, ..] if args.perms == "example1" => pi.clone(),
                    _ => return Err(CliError::invalid("extend takes a single permutation")),
                };
                let set = extend_ccc(&seed, p, &mos, &pi)?;
                let prov = Provenance::new("extend")
                    .with("seed", &seed_name)
                    .with("p", p)
                    .with("mos", mos_label)
                    .with("perm", &pi);
                let mut doc = CodeSetDocument::from_set(&set, prov);
                doc.verdicts.push(verify_ccc(&set));
                doc
            } else {
                let family = if perms.is_empty() {
                    default_permutation_family(m, p)?
                } else {
                    PermutationFamily::new(perms, p)?
                };
                let bundle = build_mccc_szccs(&seed, p, &mos, &family, &seed_name)?;
                let listed: Vec<String> = family.perms().iter().map(ToString::to_string).collect();
                let prov = Provenance::new("szccs")
                    .with("seed", &seed_name)
                    .with("p", p)
                    .with("mos", mos_label)
                    .with("perms", listed.join(";"));
                let mut doc = CodeSetDocument::from_bundle(&bundle, prov);
                let flat = bundle.flatten();
                doc.verdicts.push(verify_szccs(&flat, bundle.zone.width())?);
                if bundle.set_count() >= 2 {
                    doc.verdicts.push(verify_mccc(&bundle.sets, seed.dims().1)?);
                } else {
                    doc.verdicts.push(verify_ccc(&flat));
                }
                doc
            }
        }
    };
    ensure_passed(&doc.verdicts)?;
    doc.validate()?;
    Ok(doc)
}

pub fn cmd_gen(args: &GenArgs, stdout: &mut dyn Write) -> CliResult {
    let doc = generate(args)?;
    let body = match args.format {
        OutputFormat::Json => doc.to_json()?,
        OutputFormat::Txt => doc.to_sign_text()?,
        OutputFormat::Csv => return Err(CliError::invalid("gen writes json or txt")),
    };
    match &args.out {
        Some(path) => fs::write(path, body)?,
        None => stdout.write_all(body.as_bytes())?,
    }
    Ok(())
}

fn single_code(doc: &CodeSetDocument, index: Option<usize>) -> CliResult<Code> {
    let codes = doc.to_codes()?;
    match (index, codes.len()) {
        (Some(i), n) if i < n => Ok(codes[i].clone()),
        (Some(i), n) => Err(CliError::invalid(format!(
            "code index {i} out of range for {n} codes"
        ))),
        (None, 1) => Ok(codes[0].clone()),
        (None, n) => Err(CliError::invalid(format!(
            "document holds {n} codes; pick one with --code"
        ))),
    }
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> CliResult<i32> {
    let doc = read_document(&args.file)?;
    let z = || require(args.z, "z");
    let verdict = match args.property {
        PropertyArg::Perfect => verify_perfect_array(&single_code(&doc, args.code)?),
        PropertyArg::Gcs => verify_gcs(&single_code(&doc, args.code)?),
        PropertyArg::Ccc => verify_ccc(&doc.to_code_set()?),
        PropertyArg::Szccs => {
            let mut v = verify_szccs(&doc.to_code_set()?, z()?)?;
            v.parameters.measured_zone = Some(measure_symmetric_zone(&doc.to_code_set()?));
            v
        }
        PropertyArg::Mccc => verify_mccc(&doc.to_sets()?, z()?)?,
        PropertyArg::Mos => {
            let code = single_code(&doc, args.code)?;
            if code.rows() != code.cols() {
                return Err(CliError::invalid("a sign family must be a square code"));
            }
            verify_mos(&MosFamily::new(code.alphabet(), code.to_rows())?)
        }
    };
    let mut json = serde_json::to_string_pretty(&verdict).map_err(Error::from)?;
    json.push('\n');
    stdout.write_all(json.as_bytes())?;
    Ok(if verdict.passed { 0 } else { EXIT_FAILED })
}

pub fn cmd_corr(args: &CorrArgs, stdout: &mut dyn Write) -> CliResult {
    let doc_a = read_document(&args.file_a)?;
    let a = single_code(&doc_a, Some(args.code_a))?;
    let mut buf = Vec::new();
    match args.mode {
        CorrMode::Pacf => {
            if args.file_b.is_some() {
                return Err(CliError::invalid("pacf takes a single document"));
            }
            write_pacf_csv(&pacf2d(&a), &mut buf)?;
        }
        CorrMode::Accf => {
            let b = match &args.file_b {
                Some(path) => single_code(&read_document(path)?, Some(args.code_b.unwrap_or(0)))?,
                None => single_code(&doc_a, Some(args.code_b.unwrap_or(args.code_a)))?,
            };
            let vector = if a == b {
                aacf(&a)
            } else {
                accf_vector(&a, &b)?
            };
            write_accf_csv(&vector, &mut buf)?;
        }
    }
    match &args.out {
        Some(path) => fs::write(path, buf)?,
        None => stdout.write_all(&buf)?,
    }
    Ok(())
}

pub fn cmd_info(args: &InfoArgs, stdout: &mut dyn Write) -> CliResult {
    let Some(path) = &args.file else {
        writeln!(stdout, "bundled fixtures:")?;
        for name in fixtures::NAMES {
            let doc = CodeSetDocument::parse(fixtures::bundled(name).expect("listed"))?;
            writeln!(stdout, "  {name}: {} codes of {}x{}", doc.k, doc.m, doc.n)?;
        }
        return Ok(());
    };
    let doc = read_document(path)?;
    let set = doc.to_code_set()?;
    let kind = match doc.kind {
        DocumentKind::Code => "code",
        DocumentKind::CodeSet => "code_set",
        DocumentKind::SzccsBundle => "szccs_bundle",
    };
    writeln!(stdout, "kind: {kind}")?;
    writeln!(stdout, "codes: {} of {}x{}", doc.k, doc.m, doc.n)?;
    writeln!(stdout, "root order: {}", doc.root_order)?;
    if let Some(s) = doc.sets {
        writeln!(stdout, "sets: {s}")?;
    }
    writeln!(stdout, "construction: {}", doc.provenance.construction)?;
    for (k, v) in &doc.provenance.parameters {
        writeln!(stdout, "  {k} = {v}")?;
    }
    if set.len() >= 2 {
        writeln!(stdout, "symmetric zone: {}", measure_symmetric_zone(&set))?;
        writeln!(stdout, "ccc: {}", verify_ccc(&set).passed)?;
    } else {
        writeln!(
            stdout,
            "perfect array: {}",
            verify_perfect_array(&set[0]).passed
        )?;
        writeln!(stdout, "gcs: {}", verify_gcs(&set[0]).passed)?;
    }
    Ok(())
}
