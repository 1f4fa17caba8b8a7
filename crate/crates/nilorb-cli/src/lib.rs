//! Command-line front end: orbit tables, cohomology queries, matrix realizations
//! and the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 the requested value is not determined by the case analysis.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use nilorb::cohomology::{cohomology, Status};
use nilorb::exactlin::ExactMatrix;
use nilorb::orbit_enum::{enumerate_orbits, parse_orbit_spec, OrbitClass, OrbitError, RealForm};
use nilorb::realize::{realize, verify_realization, MatrixRealization, RealizeError};
use nilorb::structure::{centralizer_structure, maximal_compact_structure};
use nilorb::verify::{run_all, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PAPER_GAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error("output failed: {0}")]
    Io(#[from] std::io::Error),
    #[error("json encoding failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv encoding failed: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Orbit(_) | CliError::Realize(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => EXIT_VERIFY_FAILED,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "nilorb", version, about = "Nilpotent orbits of the classical real simple Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every nilpotent orbit of a real form.
    Orbits {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Dimensions of the first and second cohomology of one orbit.
    Cohomology {
        #[command(flatten)]
        form: FormArgs,
        /// Diagram, optionally followed by `:fiber`, e.g. `3+^1,1+^2:2`.
        #[arg(long)]
        orbit: String,
        /// Describe which case of the analysis produced each value.
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact matrices of an sl2-triple through the orbit and of the invariant form.
    Realize {
        #[command(flatten)]
        form: FormArgs,
        #[arg(long)]
        orbit: String,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        out: OutFormat,
        /// Verify the realization before printing it.
        #[arg(long)]
        check: bool,
    },
    /// Run the self-checking suites up to a matrix size.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    SlR,
    SlH,
    Su,
    So,
    SoStar,
    SpR,
    SpPq,
}

#[derive(Debug, Args)]
pub struct FormArgs {
    #[arg(long, value_enum)]
    pub form: Family,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
}

impl FormArgs {
    pub fn real_form(&self) -> Result<RealForm, CliError> {
        let need_n = || self.n.ok_or_else(|| CliError::Usage(format!("--form {:?} needs --n", self.form)));
        let need_pq = || match (self.p, self.q) {
            (Some(p), Some(q)) => Ok((p, q)),
            _ => Err(CliError::Usage(format!("--form {:?} needs --p and --q", self.form))),
        };
        let form = match self.form {
            Family::SlR => RealForm::SlR { n: need_n()? },
            Family::SlH => RealForm::SlH { n: need_n()? },
            Family::SoStar => RealForm::SOStar { n: need_n()? },
            Family::SpR => RealForm::SpR { n: need_n()? },
            Family::Su => need_pq().map(|(p, q)| RealForm::SU { p, q })?,
            Family::So => need_pq().map(|(p, q)| RealForm::SO { p, q })?,
            Family::SpPq => need_pq().map(|(p, q)| RealForm::SpPQ { p, q })?,
        };
        form.validate()?;
        Ok(form)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerRecord {
    pub factors: Vec<String>,
    pub det_cut: bool,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactRecord {
    pub factors: Vec<String>,
    pub det_cut: bool,
    pub dim: usize,
    pub dim_z: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Explanation {
    pub h1: String,
    pub h2: String,
}

/// Everything reported about one orbit class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRecord {
    pub form: String,
    pub family: String,
    pub partition: String,
    /// The signed diagram, absent for sl_n(R) and sl_n(H).
    pub signs: Option<String>,
    pub signature: Option<(usize, usize)>,
    pub fiber_index: usize,
    pub fiber_size: usize,
    pub is_zero: bool,
    pub h1: Option<usize>,
    pub h2: Option<usize>,
    pub status: String,
    pub centralizer: CentralizerRecord,
    pub compact: CompactRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explanation: Option<Explanation>,
}

impl OrbitRecord {
    pub fn new(orbit: &OrbitClass, explain: bool) -> Self {
        let c = cohomology(orbit);
        let z = centralizer_structure(orbit);
        let k = maximal_compact_structure(orbit);
        OrbitRecord {
            form: orbit.form.to_string(),
            family: orbit.form.family().to_string(),
            partition: orbit.partition().to_string(),
            signs: orbit.signed().map(ToString::to_string),
            signature: orbit.signed().map(|d| d.signature()),
            fiber_index: orbit.fiber_index,
            fiber_size: orbit.fiber_size,
            is_zero: orbit.is_zero,
            h1: c.h1,
            h2: c.h2,
            status: c.status.to_string(),
            centralizer: CentralizerRecord {
                factors: z.factors.iter().map(ToString::to_string).collect(),
                det_cut: z.det_constraint_cuts_dim,
                dim: z.dim,
            },
            compact: CompactRecord {
                factors: k.factors.iter().map(ToString::to_string).collect(),
                det_cut: k.det_constraint_cuts_dim,
                dim: k.dim,
                dim_z: k.dim_z,
            },
            explanation: explain.then(|| Explanation { h1: c.h1_case, h2: c.h2_case }),
        }
    }

    /// The flat CSV form of the record.
    pub fn to_row(&self) -> CsvRow {
        CsvRow {
            form: self.form.clone(),
            family: self.family.clone(),
            partition: self.partition.clone(),
            signs: self.signs.clone().unwrap_or_default(),
            signature_p: self.signature.map(|s| s.0),
            signature_q: self.signature.map(|s| s.1),
            fiber_index: self.fiber_index,
            fiber_size: self.fiber_size,
            is_zero: self.is_zero,
            h1: self.h1,
            h2: self.h2,
            status: self.status.clone(),
            centralizer_factors: self.centralizer.factors.join(" x "),
            centralizer_det_cut: self.centralizer.det_cut,
            centralizer_dim: self.centralizer.dim,
            compact_factors: self.compact.factors.join(" x "),
            compact_det_cut: self.compact.det_cut,
            compact_dim: self.compact.dim,
            compact_dim_z: self.compact.dim_z,
        }
    }
}

/// One CSV line; the header row is the field names in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub form: String,
    pub family: String,
    pub partition: String,
    pub signs: String,
    pub signature_p: Option<usize>,
    pub signature_q: Option<usize>,
    pub fiber_index: usize,
    pub fiber_size: usize,
    pub is_zero: bool,
    pub h1: Option<usize>,
    pub h2: Option<usize>,
    pub status: String,
    pub centralizer_factors: String,
    pub centralizer_det_cut: bool,
    pub centralizer_dim: usize,
    pub compact_factors: String,
    pub compact_det_cut: bool,
    pub compact_dim: usize,
    pub compact_dim_z: usize,
}

/// JSON form of a [`MatrixRealization`]; entries are exact scalars such as `-3/2` or `1+2i-j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationRecord {
    pub form: String,
    pub orbit: String,
    pub fiber_index: usize,
    pub field: String,
    pub n: usize,
    /// `(d, j, l)` labels of the basis vectors `X^l v^d_j`.
    pub basis: Vec<(usize, usize, usize)>,
    pub x: Vec<Vec<String>>,
    pub h: Vec<Vec<String>>,
    pub y: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form_kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagram_signature: Option<(usize, usize)>,
}

fn entries(m: &ExactMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}

impl RealizationRecord {
    pub fn new(orbit: &OrbitClass, r: &MatrixRealization) -> Self {
        RealizationRecord {
            form: orbit.form.to_string(),
            orbit: orbit.diagram.to_string(),
            fiber_index: orbit.fiber_index,
            field: r.field.to_string(),
            n: r.n,
            basis: r.basis_index.clone(),
            x: entries(&r.x),
            h: entries(&r.h),
            y: entries(&r.y),
            g: r.g.as_ref().map(entries),
            form_kind: r.form_kind.map(|k| k.to_string()),
            diagram_signature: r.diagram_signature,
        }
    }
}

/// All orbit records of a form, in enumeration order.
pub fn orbit_records(form: &RealForm) -> Result<Vec<OrbitRecord>, CliError> {
    Ok(enumerate_orbits(form)?.iter().map(|o| OrbitRecord::new(o, false)).collect())
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn write_table(out: &mut dyn Write, records: &[OrbitRecord]) -> std::io::Result<()> {
    writeln!(
        out,
        "{:<28} {:>5} {:>3} {:>3} {:<10} {:>5} {:<36} {:>5} {:>5}",
        "diagram", "fiber", "h1", "h2", "status", "dim Z", "K", "dim K", "dim z"
    )?;
    for r in records {
        let diagram = r.signs.as_deref().unwrap_or(&r.partition);
        let k = if r.compact.det_cut {
            format!("S({})", r.compact.factors.join(" x "))
        } else {
            r.compact.factors.join(" x ")
        };
        writeln!(
            out,
            "{:<28} {:>5} {:>3} {:>3} {:<10} {:>5} {:<36} {:>5} {:>5}",
            diagram,
            format!("{}/{}", r.fiber_index, r.fiber_size),
            opt(r.h1),
            opt(r.h2),
            r.status,
            r.centralizer.dim,
            k,
            r.compact.dim,
            r.compact.dim_z
        )?;
    }
    Ok(())
}

fn cmd_orbits(out: &mut dyn Write, form: &FormArgs, json: bool, csv: bool) -> Result<i32, CliError> {
    let form = form.real_form()?;
    let records = orbit_records(&form)?;
    if json {
        serde_json::to_writer_pretty(&mut *out, &records)?;
        writeln!(out)?;
    } else if csv {
        let mut w = csv::Writer::from_writer(&mut *out);
        for r in &records {
            w.serialize(r.to_row())?;
        }
        w.flush()?;
    } else {
        writeln!(out, "{form}: {} orbits", records.len())?;
        write_table(out, &records)?;
    }
    Ok(EXIT_OK)
}

fn cmd_cohomology(
    out: &mut dyn Write,
    form: &FormArgs,
    orbit: &str,
    explain: bool,
    json: bool,
) -> Result<i32, CliError> {
    let form = form.real_form()?;
    let orbit = parse_orbit_spec(&form, orbit)?;
    let record = OrbitRecord::new(&orbit, explain);
    if json {
        serde_json::to_writer_pretty(&mut *out, &record)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{form} {} (fiber {}/{})", orbit.diagram, orbit.fiber_index, orbit.fiber_size)?;
        writeln!(out, "h1 = {}", opt(record.h1))?;
        writeln!(out, "h2 = {}", opt(record.h2))?;
        writeln!(out, "status = {}", record.status)?;
        if let Some(e) = &record.explanation {
            writeln!(out, "h1 case: {}", e.h1)?;
            writeln!(out, "h2 case: {}", e.h2)?;
        }
    }
    let gap = cohomology(&orbit).status == Status::PaperGap;
    Ok(if gap { EXIT_PAPER_GAP } else { EXIT_OK })
}

fn write_matrix(out: &mut dyn Write, name: &str, m: &ExactMatrix) -> std::io::Result<()> {
    writeln!(out, "{name} =")?;
    write!(out, "{m}")?;
    if !m.to_string().ends_with('\n') {
        writeln!(out)?;
    }
    Ok(())
}

fn cmd_realize(
    out: &mut dyn Write,
    err: &mut dyn Write,
    form: &FormArgs,
    orbit: &str,
    format: OutFormat,
    check: bool,
) -> Result<i32, CliError> {
    let form = form.real_form()?;
    let orbit = parse_orbit_spec(&form, orbit)?;
    let r = realize(&orbit)?;
    let mut code = EXIT_OK;
    if check {
        let report = verify_realization(&r);
        write!(err, "{report}")?;
        if !report.all_passed() {
            code = EXIT_VERIFY_FAILED;
        }
    }
    match format {
        OutFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &RealizationRecord::new(&orbit, &r))?;
            writeln!(out)?;
        }
        OutFormat::Text => {
            writeln!(out, "{form} {} over {} (n = {})", orbit.diagram, r.field, r.n)?;
            let labels: Vec<String> = r.basis_index.iter().map(|(d, j, l)| format!("({d},{j},{l})")).collect();
            writeln!(out, "basis (d,j,l): {}", labels.join(" "))?;
            write_matrix(out, "X", &r.x)?;
            write_matrix(out, "H", &r.h)?;
            write_matrix(out, "Y", &r.y)?;
            if let (Some(g), Some(kind)) = (&r.g, r.form_kind) {
                write_matrix(out, &format!("G ({kind})"), g)?;
            }
        }
    }
    Ok(code)
}

fn cmd_verify(out: &mut dyn Write, max_n: usize, inject_fault: bool) -> Result<i32, CliError> {
    let reports = run_all(VerifyOptions { max_n, inject_fault }).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut failed = false;
    for r in &reports {
        writeln!(out, "{r}")?;
        for f in r.failures.iter().take(5) {
            writeln!(out, "    {f}")?;
        }
        failed |= !r.passed();
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { EXIT_OK })
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Orbits { form, json, csv } => cmd_orbits(out, form, *json, *csv),
        Command::Cohomology { form, orbit, explain, json } => cmd_cohomology(out, form, orbit, *explain, *json),
        Command::Realize { form, orbit, out: format, check } => cmd_realize(out, err, form, orbit, *format, *check),
        Command::Verify { max_n, inject_fault } => cmd_verify(out, *max_n, *inject_fault),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
