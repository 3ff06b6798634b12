//! Command-line front end for `hermck`.
//!
//! Exit codes: 0 on success, 1 when the input is well formed but
//! mathematically rejected (incompatible data, not h-monogenic, a count
//! mismatch), 2 when the input cannot be parsed or validated.

pub mod doc;

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hermck::ck::{extend_scheme, is_h_monogenic};
use hermck::dims::{dim_formula, dim_m_alt, fischer_project};
use hermck::linalg::{monogenic_basis, polynomial_basis, restricted_kernel_basis};
use hermck::{Dirac, Error, FischerSide, SpaceDescriptor, SpaceKind};
use serde::de::DeserializeOwned;
use serde::Serialize;

use doc::{terms_of, BasisDocument, CkDocument, FischerDocument, PolyDocument, SCHEMA_VERSION};

#[derive(Debug, Parser)]
#[command(name = "hermck", version, about = "Exact CK extension and dimension checks for Hermitean monogenic polynomials")]
pub struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extend CK initial data to an h-monogenic polynomial.
    Extend {
        /// CK data document; standard input when omitted or `-`.
        input: Option<PathBuf>,
    },
    /// Check that both Hermitean Dirac operators annihilate a polynomial.
    Verify { input: Option<PathBuf> },
    /// Print the closed-form dimension, and optionally the nullspace count.
    Dim {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long, value_enum, default_value = "hm")]
        kind: Kind,
        /// Also count a basis by exact elimination.
        #[arg(long)]
        oracle: bool,
    },
    /// Split a polynomial into a kernel part and an image part.
    Fischer {
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        input: Option<PathBuf>,
    },
    /// Emit an exact basis of the h-monogenic polynomials.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    P,
    Q,
    X,
    Y,
    Hm,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Dz,
    Dzdag,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Rejected(String),
    Malformed(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Rejected(_) => 1,
            Failure::Malformed(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Rejected(m) | Failure::Malformed(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Incompatible(_) => Failure::Rejected(e.to_string()),
            Error::Argument(_) => Failure::Malformed(e.to_string()),
            Error::Invariant(_) => Failure::Rejected(e.to_string()),
        }
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = execute(&cli.command, stdin).and_then(|text| match &cli.output {
        Some(path) => fs::write(path, &text).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::Malformed(e.to_string())),
    });
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message());
            f.exit_code()
        }
    }
}

fn read_doc<D: DeserializeOwned>(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<D, Failure> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).map_err(|e| Failure::Malformed(format!("{}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
            s
        }
    };
    serde_json::from_str(&text).map_err(|e| Failure::Malformed(format!("parse error: {e}")))
}

fn to_json<S: Serialize>(doc: &S) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<String, Failure> {
    match cmd {
        Command::Extend { input } => {
            let d = read_doc::<CkDocument>(input, stdin)?.to_data().map_err(Failure::Malformed)?;
            let m = extend_scheme(&d)?;
            Ok(to_json(&PolyDocument::from_poly(&m)))
        }
        Command::Verify { input } => {
            let p = read_doc::<PolyDocument>(input, stdin)?.to_poly().map_err(Failure::Malformed)?;
            if is_h_monogenic(&p) {
                return Ok("h-monogenic\n".into());
            }
            let mut failing = Vec::new();
            for (op, name) in [(Dirac::Dz, "∂z"), (Dirac::DzDag, "∂z†")] {
                let res = p.dirac(op, false);
                if !res.is_zero() {
                    failing.push(format!("{name} does not annihilate the polynomial (residual {res})"));
                }
            }
            Err(Failure::Rejected(failing.join("; ")))
        }
        Command::Dim { n, r, a, b, kind, oracle } => dim_report(*n, *r, *a, *b, *kind, *oracle),
        Command::Fischer { side, a, b, r, input } => {
            let p = read_doc::<PolyDocument>(input, stdin)?.to_poly().map_err(Failure::Malformed)?;
            let (fs_side, name) = match side {
                Side::Dz => (FischerSide::Dz, "dz"),
                Side::Dzdag => (FischerSide::DzDag, "dzdag"),
            };
            let (kernel, image) = fischer_project(&p, fs_side, *a, *b, *r)?;
            Ok(to_json(&FischerDocument {
                schema_version: SCHEMA_VERSION,
                n: p.dim(),
                side: name.into(),
                a: *a,
                b: *b,
                r: *r,
                kernel: terms_of(&kernel),
                image: terms_of(&image),
            }))
        }
        Command::Basis { n, r, a, b } => {
            SpaceDescriptor::new(SpaceKind::HM, *n, *r, *a, *b).validate()?;
            let basis = monogenic_basis(*n, *r, *a, *b)?;
            Ok(to_json(&BasisDocument {
                schema_version: SCHEMA_VERSION,
                n: *n,
                r: *r,
                a: *a,
                b: *b,
                dimension: basis.len(),
                elements: basis.iter().map(terms_of).collect(),
            }))
        }
    }
}

fn dim_report(n: usize, r: usize, a: usize, b: usize, kind: Kind, oracle: bool) -> Result<String, Failure> {
    let space = match kind {
        Kind::P => SpaceKind::P,
        Kind::Q => SpaceKind::Q,
        Kind::X => SpaceKind::X,
        Kind::Y => SpaceKind::Y,
        Kind::Hm => SpaceKind::HM,
    };
    let formula = dim_formula(&SpaceDescriptor::new(space, n, r, a, b))?;
    let mut out = format!("formula: {formula}\n");
    let mut counts = vec![formula.clone()];
    if let Kind::Hm = kind {
        let alt = dim_m_alt(n, r, a, b)?;
        out.push_str(&format!("alt: {alt}\n"));
        counts.push(alt);
    }
    if oracle {
        let count = match kind {
            Kind::P => polynomial_basis(n, n - 1, n - 1, a, b, r).len(),
            Kind::Q => polynomial_basis(n, n - 1, n - 1, a, b, r - 1).len(),
            Kind::X => restricted_kernel_basis(n, FischerSide::Dz, a, b, r)?.len(),
            Kind::Y => restricted_kernel_basis(n, FischerSide::DzDag, a, b, r)?.len(),
            Kind::Hm => monogenic_basis(n, r, a, b)?.len(),
        };
        out.push_str(&format!("oracle: {count}\n"));
        counts.push(count.into());
    }
    if counts.iter().any(|c| *c != formula) {
        return Err(Failure::Rejected(format!("counts disagree\n{out}")));
    }
    Ok(out)
}
