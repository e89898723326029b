//! `clifftype` command line: representation types, type tables, Burnside
//! solutions, conjugacy-class reports, the cross-method verification suite and
//! gamma-matrix export.
//!
//! Exit status: 0 ok, 1 usage error, 2 size cap exceeded, 3 verification
//! mismatch or internal inconsistency.

pub mod records;

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use clifftype::group::BRUTE_CLASS_LIMIT;
use clifftype::matrix::{constituent_count, GammaRep};
use clifftype::rep::burnside_with_classes;
use clifftype::verify::{run_verification, VerifyConfig, VerifyReport};
use clifftype::{
    burnside_spinor_solve, fs_indicator_brute, fs_indicator_closed, Error, FiniteGroup, GroupKind,
    RepType, Signature, DEFAULT_N_MAX, HARD_N_MAX,
};

use records::*;

/// Environment variable overriding the brute-force cap on `p + q`.
pub const NMAX_ENV: &str = "CLIFFTYPE_NMAX";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "clifftype",
    version,
    about = "Pin/Spin(p,q) representation types from finite Clifford groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Representation type of the spinor irreps for one signature.
    Type(TypeArgs),
    /// Types along the Euclidean sequence or over a signature grid.
    Table(TableArgs),
    /// Burnside solution: group order, classes and irrep dimensions.
    Burnside(GroupArgs),
    /// Center, commutator subgroup and conjugacy-class structure.
    Classes(GroupArgs),
    /// Cross-check brute force, closed form, matrix oracle and class counts.
    Verify(VerifyArgs),
    /// Print the gamma matrices as JSON arrays of [re, im] pairs.
    ExportGammas(SignatureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Pin,
    Spin,
}

impl From<GroupArg> for GroupKind {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Pin => GroupKind::Pin,
            GroupArg::Spin => GroupKind::Spin,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Brute,
    Matrix,
    Structural,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Brute => "brute",
            Method::Matrix => "matrix",
            Method::Structural => "structural",
        }
    }
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    /// Number of generators squaring to +1.
    #[arg(short = 'p', default_value_t = 0)]
    pub p: u32,
    /// Number of generators squaring to -1.
    #[arg(short = 'q', default_value_t = 0)]
    pub q: u32,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    #[command(flatten)]
    pub sig: SignatureArgs,
    #[arg(long, value_enum, default_value_t = GroupArg::Pin)]
    pub group: GroupArg,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Euclidean rows (n, 0) for n = 0..=max-n.
    #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
    pub max_n: Option<u32>,
    /// Signature grid with P values of p and Q values of q, e.g. 9x9.
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<(u32, u32)>,
    #[arg(long, value_enum, default_value_t = GroupArg::Pin)]
    pub group: GroupArg,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub sig: SignatureArgs,
    #[arg(long, value_enum, default_value_t = GroupArg::Pin)]
    pub group: GroupArg,
    /// `brute` scans conjugacy classes (p+q ≤ 12); `structural` uses the
    /// center. Defaults to brute where it is allowed.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    pub max_brute: u32,
    #[arg(long, default_value_t = 8)]
    pub max_matrix: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

fn parse_grid(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected PxQ, got `{s}`"))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|e| format!("bad grid size `{t}`: {e}"))
    };
    let (p, q) = (parse(a)?, parse(b)?);
    if p == 0 || q == 0 {
        return Err("grid sizes must be at least 1".into());
    }
    Ok((p, q))
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Error from a subcommand, carrying its exit status.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Inconsistent(_) => EXIT_MISMATCH,
            Error::IndexOutOfRange { .. } | Error::MaskOutOfRange { .. } => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<String, Failure>;

/// Parses `args` (including the program name) and runs the command.
/// `nmax` is the value of [`NMAX_ENV`], if set.
pub fn run<I, T>(args: I, nmax: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                _ => Outcome::fail(EXIT_USAGE, e.render().to_string()),
            };
        }
    };
    let result = brute_cap(nmax).and_then(|cap| match cli.command {
        Command::Type(a) => cmd_type(&a, cap),
        Command::Table(a) => cmd_table(&a, cap),
        Command::Burnside(a) => cmd_burnside(&a),
        Command::Classes(a) => cmd_classes(&a),
        Command::Verify(a) => cmd_verify(&a, cap),
        Command::ExportGammas(a) => cmd_export_gammas(&a),
    });
    match result {
        Ok(stdout) => Outcome::ok(stdout),
        Err(f) => Outcome::fail(f.code, format!("error: {}\n", f.message)),
    }
}

fn brute_cap(nmax: Option<&str>) -> Result<u32, Failure> {
    let Some(raw) = nmax else {
        return Ok(DEFAULT_N_MAX);
    };
    let cap: u32 = raw
        .trim()
        .parse()
        .map_err(|_| usage(format!("{NMAX_ENV}={raw} is not a non-negative integer")))?;
    if cap > HARD_N_MAX {
        return Err(Error::CapExceeded {
            what: NMAX_ENV,
            n: cap,
            cap: HARD_N_MAX,
        }
        .into());
    }
    Ok(cap)
}

/// Evaluates one cell with the requested method.
fn type_record(
    p: u32,
    q: u32,
    kind: GroupKind,
    method: Method,
    cap: u32,
) -> Result<OutputRecord, Failure> {
    let rep_type = match method {
        Method::Closed => fs_indicator_closed(p, q, kind),
        Method::Brute => fs_indicator_brute(Signature::with_cap(p, q, cap)?, kind)?,
        Method::Matrix => matrix_type(Signature::with_cap(p, q, cap)?, kind)?,
        Method::Structural => {
            return Err(usage(
                "`structural` is not a type method; use closed, brute or matrix",
            ))
        }
    };
    // group data is structural, so any n up to the hard limit is fine
    let sig = Signature::with_cap(p, q, HARD_N_MAX)?;
    let info = burnside_spinor_solve(sig, kind)?;
    Ok(OutputRecord {
        p,
        q,
        n: sig.n(),
        group: kind.name(),
        method: method.name(),
        type_value: rep_type.value(),
        type_label: rep_type.label(),
        spinor_dim: info.spinor_dim,
        num_spinor: info.num_spinor,
        class_count: Some(info.class_count),
        pq_mod8: sig.pq_mod8(),
    })
}

fn matrix_type(sig: Signature, kind: GroupKind) -> Result<RepType, Failure> {
    let sum = GammaRep::<i64>::new(sig)?.fs_sum(kind)?;
    let count = i64::from(constituent_count(sig, kind));
    let value = (sum / count).to_integer();
    if sum != num_rational::Ratio::from_integer(value * count) {
        return Err(
            Error::Inconsistent(format!("trace sum {sum} is not a multiple of {count}")).into(),
        );
    }
    RepType::from_value(value).ok_or_else(|| {
        Error::Inconsistent(format!("matrix indicator {value} outside {{-1,0,1}}")).into()
    })
}

fn cmd_type(a: &TypeArgs, cap: u32) -> CmdResult {
    let r = type_record(a.sig.p, a.sig.q, a.group.into(), a.method, cap)?;
    Ok(match a.format {
        Format::Json => to_json(&[r]),
        Format::Csv => to_csv(&[r], OUTPUT_HEADER),
        Format::Text => format!(
            "{}({},{}) [{}]: type {} ({}), {} spinor irrep(s) of dimension {}, (p-q) mod 8 = {}\n",
            title(r.group),
            r.p,
            r.q,
            r.method,
            signed(r.type_value),
            r.type_label,
            r.num_spinor,
            r.spinor_dim,
            r.pq_mod8
        ),
    })
}

fn cmd_table(a: &TableArgs, cap: u32) -> CmdResult {
    let kind: GroupKind = a.group.into();
    let cells: Vec<(u32, u32)> = match (a.max_n, a.grid) {
        (Some(max_n), None) => (0..=max_n).map(|n| (n, 0)).collect(),
        (None, Some((ps, qs))) => (0..ps).flat_map(|p| (0..qs).map(move |q| (p, q))).collect(),
        _ => return Err(usage("give exactly one of --max-n or --grid")),
    };
    let grid = a.grid;
    let records = cells
        .into_iter()
        .map(|(p, q)| type_record(p, q, kind, a.method, cap))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match a.format {
        Format::Json => to_json(&records),
        Format::Csv => to_csv(&records, OUTPUT_HEADER),
        Format::Text => {
            let mut out = String::new();
            match grid {
                None => {
                    let _ = writeln!(
                        out,
                        "{}(n) types, n = 0..={} [{}]",
                        title(kind.name()),
                        records.len() - 1,
                        a.method.name()
                    );
                    for r in &records {
                        let _ = writeln!(
                            out,
                            "{:>4}  {:>2}  {}",
                            r.n,
                            signed(r.type_value),
                            r.type_label
                        );
                    }
                    let seq: Vec<String> =
                        records.iter().map(|r| r.type_value.to_string()).collect();
                    let _ = writeln!(out, "sequence: {}", seq.join(","));
                }
                Some((_, qs)) => {
                    let _ = writeln!(
                        out,
                        "{}(p,q) types, rows p, columns q [{}]",
                        title(kind.name()),
                        a.method.name()
                    );
                    let _ = write!(out, "{:>4}", "p\\q");
                    for q in 0..qs {
                        let _ = write!(out, "{q:>4}");
                    }
                    out.push('\n');
                    for row in records.chunks(qs as usize) {
                        let _ = write!(out, "{:>4}", row[0].p);
                        for r in row {
                            let _ = write!(out, "{:>4}", signed(r.type_value));
                        }
                        out.push('\n');
                    }
                }
            }
            out
        }
    })
}

/// Class count by the requested (or default) method; returns the method name.
fn class_count(
    group: &FiniteGroup,
    method: Option<Method>,
) -> Result<(u64, &'static str), Failure> {
    let n = group.signature().n();
    match method {
        Some(Method::Brute) => Ok((group.conjugacy_classes_brute()?.class_count, "brute")),
        None if n <= BRUTE_CLASS_LIMIT => {
            Ok((group.conjugacy_classes_brute()?.class_count, "brute"))
        }
        Some(Method::Structural) | None => Ok((group.class_count_structural(), "structural")),
        Some(other) => Err(usage(format!(
            "method `{}` does not count classes; use brute or structural",
            other.name()
        ))),
    }
}

fn cmd_burnside(a: &GroupArgs) -> CmdResult {
    let sig = Signature::with_cap(a.sig.p, a.sig.q, HARD_N_MAX)?;
    let kind: GroupKind = a.group.into();
    let group = FiniteGroup::new(sig, kind);
    let (classes, method) = class_count(&group, a.method)?;
    let info = burnside_with_classes(&group, classes)?;
    let rep_type = fs_indicator_closed(sig.p(), sig.q(), kind);
    let r = BurnsideRecord {
        p: sig.p(),
        q: sig.q(),
        n: sig.n(),
        group: kind.name(),
        method,
        type_value: rep_type.value(),
        type_label: rep_type.label(),
        spinor_dim: info.spinor_dim,
        num_spinor: info.num_spinor,
        class_count: info.class_count,
        pq_mod8: sig.pq_mod8(),
        group_order: info.group_order,
        num_one_dim: info.num_one_dim,
    };
    Ok(match a.format {
        Format::Json => to_json(&[r]),
        Format::Csv => to_csv(&[r], BURNSIDE_HEADER),
        Format::Text => format!(
            "{}({},{}): |G| = {}, {} classes [{}]\n  {} = {}·1² + {}·{}²\n  one-dimensional irreps: {}, spinor irreps: {} of dimension {} ({})\n",
            title(r.group),
            r.p,
            r.q,
            r.group_order,
            r.class_count,
            r.method,
            r.group_order,
            r.num_one_dim,
            r.num_spinor,
            r.spinor_dim,
            r.num_one_dim,
            r.num_spinor,
            r.spinor_dim,
            r.type_label
        ),
    })
}

fn cmd_classes(a: &GroupArgs) -> CmdResult {
    let sig = Signature::with_cap(a.sig.p, a.sig.q, HARD_N_MAX)?;
    let kind: GroupKind = a.group.into();
    let group = FiniteGroup::new(sig, kind);
    let (class_count, central_count, method) = match class_count(&group, a.method)? {
        (_, "brute") => {
            let report = group.conjugacy_classes_brute()?;
            (report.class_count, report.central_count, "brute")
        }
        (count, method) => (count, group.center_structural().len() as u64, method),
    };
    let commutator_order = group.commutator_subgroup().len() as u64;
    let r = ClassesRecord {
        p: sig.p(),
        q: sig.q(),
        n: sig.n(),
        group: kind.name(),
        method,
        group_order: group.order(),
        class_count,
        central_count,
        classes_of_size_2: class_count - central_count,
        commutator_order,
        abelianization_order: group.order() / commutator_order,
    };
    Ok(match a.format {
        Format::Json => to_json(&[r]),
        Format::Csv => to_csv(&[r], CLASSES_HEADER),
        Format::Text => format!(
            "{}({},{}): |G| = {} [{}]\n  center: {} elements\n  classes: {} ({} of size 1, {} of size 2)\n  commutator subgroup: order {}, abelianization: order {}\n",
            title(r.group),
            r.p,
            r.q,
            r.group_order,
            r.method,
            r.central_count,
            r.class_count,
            r.central_count,
            r.classes_of_size_2,
            r.commutator_order,
            r.abelianization_order
        ),
    })
}

fn cmd_verify(a: &VerifyArgs, cap: u32) -> CmdResult {
    let report = run_verification(VerifyConfig {
        max_brute: a.max_brute,
        max_matrix: a.max_matrix,
        cap,
    })?;
    let body = render_verify(&report, a.format);
    match verify_failure(&report) {
        None => Ok(body),
        Some(f) => Err(Failure {
            code: f.code,
            message: format!("{}\n{body}", f.message),
        }),
    }
}

/// Exit failure for a report with a mismatch, naming the first one.
fn verify_failure(report: &VerifyReport) -> Option<Failure> {
    report.first_mismatch().map(|o| Failure {
        code: EXIT_MISMATCH,
        message: format!(
            "verification mismatch at (p,q) = ({},{}), group {}, method {}: {}",
            o.p, o.q, o.kind, o.method, o.detail
        ),
    })
}

/// Exit status the `verify` command uses for `report`.
pub fn verify_exit_code(report: &VerifyReport) -> i32 {
    verify_failure(report).map_or(EXIT_OK, |f| f.code)
}

pub fn render_verify(report: &VerifyReport, format: Format) -> String {
    use clifftype::verify::CheckMethod;
    let records: Vec<VerifyRecord> = report
        .outcomes
        .iter()
        .map(|o| VerifyRecord {
            p: o.p,
            q: o.q,
            group: o.kind.name(),
            method: o.method.name(),
            pass: o.pass,
            detail: o.detail.clone(),
        })
        .collect();
    match format {
        Format::Json => to_json(&records),
        Format::Csv => to_csv(&records, VERIFY_HEADER),
        Format::Text => {
            let mut out = String::new();
            let methods = [
                CheckMethod::Brute,
                CheckMethod::Matrix,
                CheckMethod::Classes,
            ];
            let max_n = report.outcomes.iter().map(|o| o.p + o.q).max().unwrap_or(0);
            let _ = writeln!(
                out,
                "{:>4} {:>12} {:>12} {:>12}",
                "n", "brute", "matrix", "classes"
            );
            for n in 0..=max_n {
                let _ = write!(out, "{n:>4}");
                for m in methods {
                    let cell: Vec<_> = report
                        .outcomes
                        .iter()
                        .filter(|o| o.method == m && o.p + o.q == n)
                        .collect();
                    let text = if cell.is_empty() {
                        "-".to_string()
                    } else {
                        let passed = cell.iter().filter(|o| o.pass).count();
                        format!(
                            "{passed}/{} {}",
                            cell.len(),
                            if passed == cell.len() { "ok" } else { "FAIL" }
                        )
                    };
                    let _ = write!(out, " {text:>12}");
                }
                out.push('\n');
            }
            for m in methods {
                let (passed, total) = report.tally(m);
                let _ = writeln!(out, "{m}: {passed}/{total} passed");
            }
            let _ = writeln!(
                out,
                "{}",
                if report.all_passed() {
                    "ALL PASS"
                } else {
                    "FAILED"
                }
            );
            out
        }
    }
}

fn cmd_export_gammas(a: &SignatureArgs) -> CmdResult {
    let rep = GammaRep::<i64>::new(Signature::new(a.p, a.q)?)?;
    let matrices: Vec<_> = rep.gammas().iter().map(|g| g.to_pairs()).collect();
    let mut s = serde_json::to_string(&matrices).expect("matrices serialize");
    s.push('\n');
    Ok(s)
}

fn title(group: &str) -> &'static str {
    if group == "spin" {
        "Spin"
    } else {
        "Pin"
    }
}

fn signed(v: i8) -> String {
    if v > 0 {
        format!("+{v}")
    } else {
        v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(
            std::iter::once("clifftype").chain(args.iter().copied()),
            None,
        )
    }

    #[test]
    fn grid_parsing() {
        assert_eq!(parse_grid("9x9"), Ok((9, 9)));
        assert_eq!(parse_grid("3X2"), Ok((3, 2)));
        assert!(parse_grid("0x3").is_err());
        assert!(parse_grid("9").is_err());
    }

    #[test]
    fn nmax_override() {
        assert_eq!(brute_cap(None).unwrap(), 30);
        assert_eq!(brute_cap(Some("8")).unwrap(), 8);
        assert_eq!(brute_cap(Some("abc")).unwrap_err().code, EXIT_USAGE);
        assert_eq!(brute_cap(Some("63")).unwrap_err().code, EXIT_CAP);
        let out = run(
            [
                "clifftype",
                "type",
                "-p",
                "5",
                "-q",
                "4",
                "--method",
                "brute",
            ],
            Some("8"),
        );
        assert_eq!(out.code, EXIT_CAP);
        assert!(out.stderr.contains("cap 8"), "{}", out.stderr);
    }

    #[test]
    fn structural_is_not_a_type_method() {
        assert_eq!(
            run_args(&["type", "--method", "structural"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["burnside", "--method", "matrix"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn help_exits_zero() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("verify"));
    }
}
