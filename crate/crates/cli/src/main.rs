use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fftdecode::bench::{random_error, rng_from_seed};
use fftdecode::code::{
    bits_to_symbols, encode_fft_systematic, encode_goppa, encode_grs, extract_info, goppa_3488_64,
    goppa_8192_128, goppa_support, recover_message, symbols_to_bits,
};
use fftdecode::io::{
    format_bits, format_symbols, parse_bits, parse_symbols, read_spec, write_spec,
};
use fftdecode::{
    BasisContext, CodeKind, CodeSpec, DecodeStatus, DecoderContext, Error, Field, Gf, Poly,
};
use rand::Rng;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "fftdecode",
    version,
    about = "FFT-based decoding of GRS, alternant and Goppa codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Hex,
    Bits,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Goppa3488,
    Goppa8192,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Grs,
    Alternant,
    Goppa,
}

#[derive(Subcommand)]
enum Command {
    /// Write a code spec as JSON.
    MakeCode {
        #[arg(long, value_enum, conflicts_with_all = ["kind", "m"])]
        preset: Option<Preset>,
        #[arg(long, value_enum, requires = "m")]
        kind: Option<Kind>,
        #[arg(long)]
        m: Option<u32>,
        /// Field modulus as hex, e.g. 0x11d.
        #[arg(long)]
        modulus: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// GRS dimension; the parity-check matrix has n - k rows.
        #[arg(long)]
        k: Option<usize>,
        /// Goppa polynomial coefficients, lowest degree first, e.g. "2,1,1".
        #[arg(long)]
        goppa_poly: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encode a message file.
    Encode {
        #[arg(long)]
        spec: PathBuf,
        /// Message: k polynomial coefficients (GRS) or information bits (binary codes).
        #[arg(long)]
        message: PathBuf,
        /// Use the systematic transform encoder (GRS, k a power of two).
        #[arg(long)]
        systematic: bool,
        #[arg(long, value_enum, default_value_t = Format::Hex)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Add a random error pattern; the pattern is printed on standard error.
    Corrupt {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Hex)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decode a received vector. Exits with 2 when decoding fails.
    Decode {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        recheck: bool,
        #[arg(long, value_enum, default_value_t = Format::Hex)]
        format: Format,
        /// Print the recovered message instead of the codeword.
        #[arg(long)]
        message: bool,
        /// Write status, error pattern and operation counts as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in invariant checks at small field sizes.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compare operation counts of the transform decoder and the baseline.
    Bench {
        #[arg(long, conflicts_with = "preset")]
        spec: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        /// Defaults to the correction radius.
        #[arg(long)]
        weight: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the JSON report here; `-` for standard output.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(PathBuf, io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(path.into(), e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))
}

fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::write(p, text).map_err(|e| CliError::Io(p.into(), e))
        }
        _ => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("<stdout>".into(), e)),
    }
}

fn load_spec(path: &Path) -> CliResult<CodeSpec> {
    Ok(read_spec(&read_input(path)?)?)
}

fn preset(p: Preset) -> CodeSpec {
    match p {
        Preset::Goppa3488 => goppa_3488_64(),
        Preset::Goppa8192 => goppa_8192_128(),
    }
}

fn parse_hex(text: &str, what: &str) -> CliResult<u32> {
    let digits = text.trim_start_matches("0x");
    u32::from_str_radix(digits, 16).map_err(|e| CliError::Usage(format!("{what} {text:?}: {e}")))
}

fn default_modulus(m: u32) -> Option<u32> {
    Some(match m {
        2 => 0x7,
        3 => 0xb,
        4 => 0x13,
        5 => 0x25,
        6 => 0x43,
        7 => 0x89,
        8 => 0x11d,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1009,
        13 => 0x201b,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1100b,
        _ => return None,
    })
}

#[allow(clippy::too_many_arguments)]
fn make_code(
    kind: Kind,
    m: u32,
    modulus: Option<String>,
    n: Option<usize>,
    k: Option<usize>,
    goppa_poly: Option<String>,
    seed: u64,
) -> CliResult<CodeSpec> {
    let modulus = match modulus {
        Some(s) => parse_hex(&s, "modulus")?,
        None => default_modulus(m)
            .ok_or_else(|| CliError::Usage(format!("no default modulus for m = {m}")))?,
    };
    let field = Field::new(m, modulus)?;
    let basis = BasisContext::polynomial(field);
    let order = basis.field().order();
    let n = n.unwrap_or(order);
    let mut rng = rng_from_seed(seed);
    let random_support = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Gf> {
        rand::seq::index::sample(rng, order, n.min(order))
            .iter()
            .map(|i| Gf(i as u16))
            .collect()
    };
    let nonzero = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<Gf> {
        (0..n).map(|_| Gf(rng.gen_range(1..order) as u16)).collect()
    };
    let need_k = || k.ok_or_else(|| CliError::Usage("--k is required for this kind".into()));
    Ok(match kind {
        Kind::Grs => {
            let support = random_support(&mut rng);
            let w = nonzero(&mut rng);
            CodeSpec::grs(&basis, support, w, need_k()?)?
        }
        Kind::Alternant => {
            let support = random_support(&mut rng);
            let y = nonzero(&mut rng);
            CodeSpec::alternant(&basis, support, y, need_k()?)?
        }
        Kind::Goppa => {
            let text = goppa_poly.ok_or_else(|| {
                CliError::Usage("--goppa-poly is required for Goppa codes".into())
            })?;
            let coeffs = text
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .enumerate()
                .map(|(i, s)| {
                    basis.field().parse_element(s).map_err(|msg| {
                        CliError::Lib(Error::Parse {
                            field: "goppa_poly".into(),
                            position: i,
                            message: msg,
                        })
                    })
                })
                .collect::<CliResult<Vec<Gf>>>()?;
            let g = Poly::from_coeffs(coeffs);
            let support = goppa_support(&basis, &g, n)?;
            CodeSpec::goppa(&basis, support, g)?
        }
    })
}

fn read_word(spec: &CodeSpec, path: &Path, format: Format) -> CliResult<Vec<Gf>> {
    let text = read_input(path)?;
    match format {
        Format::Hex => Ok(parse_symbols(spec.field(), &text, Some(spec.n()))?),
        Format::Bits => Ok(bits_to_symbols(&parse_bits(&text, spec.n())?)),
    }
}

fn format_word(spec: &CodeSpec, v: &[Gf], format: Format) -> CliResult<String> {
    match format {
        Format::Hex => Ok(format_symbols(spec.field(), v)),
        Format::Bits => Ok(format_bits(&symbols_to_bits(v)?)),
    }
}

fn check_bits_format(spec: &CodeSpec, format: Format) -> CliResult<()> {
    if format == Format::Bits && !spec.is_binary() {
        return Err(CliError::Usage(
            "--format bits needs an alternant or Goppa code".into(),
        ));
    }
    Ok(())
}

fn encode(spec: &CodeSpec, message: &str, systematic: bool, format: Format) -> CliResult<String> {
    check_bits_format(spec, format)?;
    if spec.is_binary() {
        let k = spec.dimension()?;
        let info = match format {
            Format::Bits => parse_bits(message, k)?,
            Format::Hex => symbols_to_bits(&parse_symbols(spec.field(), message, Some(k))?)?,
        };
        let c = encode_goppa(spec, &info)?;
        return format_word(spec, &bits_to_symbols(&c), format);
    }
    let u = parse_symbols(spec.field(), message, Some(spec.k()))?;
    let c = if systematic {
        encode_fft_systematic(spec, &u)?
    } else {
        encode_grs(spec, &Poly::from_coeffs(u))?
    };
    format_word(spec, &c, format)
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::MakeCode {
            preset: p,
            kind,
            m,
            modulus,
            n,
            k,
            goppa_poly,
            seed,
            out,
        } => {
            let spec = match (p, kind, m) {
                (Some(p), _, _) => preset(p),
                (None, Some(kind), Some(m)) => make_code(kind, m, modulus, n, k, goppa_poly, seed)?,
                _ => return Err(CliError::Usage("give --preset or --kind with --m".into())),
            };
            write_output(out.as_deref(), &(write_spec(&spec)? + "\n"))?;
        }
        Command::Encode {
            spec,
            message,
            systematic,
            format,
            out,
        } => {
            let spec = load_spec(&spec)?;
            let text = encode(&spec, &read_input(&message)?, systematic, format)?;
            write_output(out.as_deref(), &text)?;
        }
        Command::Corrupt {
            spec,
            input,
            weight,
            seed,
            format,
            out,
        } => {
            let spec = load_spec(&spec)?;
            check_bits_format(&spec, format)?;
            let c = read_word(&spec, &input, format)?;
            let mut rng = rng_from_seed(seed);
            let e = random_error(&spec, weight, &mut rng)?;
            let f = spec.field();
            let r: Vec<Gf> = c.iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
            let mut stderr = io::stderr().lock();
            for (i, v) in e.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let _ = writeln!(stderr, "{i} {}", f.format_element(*v));
            }
            write_output(out.as_deref(), &format_word(&spec, &r, format)?)?;
        }
        Command::Decode {
            spec,
            input,
            recheck,
            format,
            message,
            report,
            out,
        } => {
            let spec = load_spec(&spec)?;
            check_bits_format(&spec, format)?;
            let r = read_word(&spec, &input, format)?;
            let ctx = DecoderContext::new(spec.clone()).with_recheck(recheck);
            let res = ctx.decode(&r)?;
            let f = spec.field();
            if let Some(path) = report {
                let doc = json!({
                    "status": match res.status {
                        DecodeStatus::NoError => "NoError".to_string(),
                        DecodeStatus::Corrected => "Corrected".to_string(),
                        DecodeStatus::Failure(reason) => format!("Failure({reason})"),
                    },
                    "error_locations": res.error_locations,
                    "error_values": res.error_values.iter().map(|&v| f.format_element(v)).collect::<Vec<_>>(),
                    "op_counts": res.op_counts,
                    "phases": res.phases,
                });
                let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
                write_output(Some(&path), &text)?;
            }
            if let DecodeStatus::Failure(reason) = res.status {
                eprintln!(
                    "{}",
                    json!({ "status": "failure", "reason": reason.to_string() })
                );
                return Ok(ExitCode::from(2));
            }
            let text = if message {
                match spec.kind() {
                    CodeKind::Grs => format_symbols(
                        f,
                        recover_message(&spec, &res.codeword)?
                            .padded(spec.k())
                            .as_slice(),
                    ),
                    _ => {
                        let info = extract_info(&spec, &symbols_to_bits(&res.codeword)?)?;
                        match format {
                            Format::Bits => format_bits(&info),
                            Format::Hex => format_symbols(f, &bits_to_symbols(&info)),
                        }
                    }
                }
            } else {
                format_word(&spec, &res.codeword, format)?
            };
            write_output(out.as_deref(), &text)?;
        }
        Command::Selftest { seed } => {
            let checks = fftdecode::selftest::run(seed);
            let mut ok = true;
            for c in &checks {
                let verdict = if c.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{verdict} {} ({} cases, {} failures)",
                    c.name, c.cases, c.failures
                );
                ok &= c.passed();
            }
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Bench {
            spec,
            preset: p,
            trials,
            weight,
            seed,
            json,
        } => {
            let spec = match (spec, p) {
                (Some(path), _) => load_spec(&path)?,
                (None, Some(p)) => preset(p),
                (None, None) => return Err(CliError::Usage("give --spec or --preset".into())),
            };
            let weight = weight.unwrap_or(spec.t());
            let report = fftdecode::bench(&spec, trials, weight, seed)?;
            print!("{}", report.table());
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
                write_output(Some(&path), &text)?;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
