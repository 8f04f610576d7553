//! Text formats and the `lexsimplex` command line.
//!
//! An LP file lists one header, one objective and `m` constraint lines:
//!
//! ```text
//! # comment
//! lp 2 2
//! c 3 1
//! 1 1 >= 4
//! 1/2 -3 <= 7
//! ```
//!
//! `<=` rows are negated and `=` rows become a pair of `>=` rows, so the
//! parsed program may have more rows than declared. A point file is a
//! `points n p` header followed by `p` lines of `n` coordinates. A
//! certificate file starts with `status <s>` and carries labelled vectors
//! `x`, `u`, `d`, plus an optional `value` for optimal certificates.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::certcheck::{check_infeasible, check_optimal, check_separation, check_unbounded};
use crate::hull::{enumerate_vertices, is_in_convex_hull, minkowski_check, separation_hyperplane, Separation};
use crate::polyhedron::{contains, LinearProgram};
use crate::ratlin::{inner, parse_rational, Matrix, Rational, RationalParseError};
use crate::simplex::{feasibility, simplex, Feasibility, SimplexResult};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REJECTED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    column: usize,
    text: &'a str,
}

#[derive(Debug, Clone)]
struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn error(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn end_column(&self) -> usize {
        self.tokens.last().map_or(1, |t| t.column + t.text.chars().count())
    }
}

fn tokenize(number: usize, raw: &str) -> Line<'_> {
    let content = raw.split_once('#').map_or(raw, |(before, _)| before);
    let mut tokens = Vec::new();
    let mut start = None;
    for (offset, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(offset),
            (true, Some(s)) => {
                tokens.push(Token {
                    column: content[..s].chars().count() + 1,
                    text: &content[s..offset],
                });
                start = None;
            }
            _ => {}
        }
    }
    Line { number, tokens }
}

struct Lines<'a> {
    inner: Vec<Line<'a>>,
    next: usize,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut last_line = 0;
        let inner = text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                last_line = i + 1;
                tokenize(i + 1, raw)
            })
            .filter(|line| !line.tokens.is_empty())
            .collect();
        Lines {
            inner,
            next: 0,
            last_line,
        }
    }

    fn expect(&mut self, what: &str) -> Result<&Line<'a>, ParseError> {
        let Some(line) = self.inner.get(self.next) else {
            return Err(ParseError {
                line: self.last_line + 1,
                column: 1,
                message: format!("expected {what}, found end of input"),
            });
        };
        self.next += 1;
        Ok(line)
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.inner.get(self.next) {
            Some(line) => Err(line.error(line.tokens[0].column, "unexpected content after the last expected line")),
            None => Ok(()),
        }
    }
}

fn rational(line: &Line<'_>, token: Token<'_>) -> Result<Rational, ParseError> {
    parse_rational(token.text).map_err(|e| {
        let message = match e {
            RationalParseError::Float(_) => e.to_string(),
            _ => format!("expected a rational number: {e}"),
        };
        line.error(token.column, message)
    })
}

fn count(line: &Line<'_>, token: Token<'_>) -> Result<usize, ParseError> {
    token
        .text
        .parse()
        .map_err(|_| line.error(token.column, format!("expected a count, found `{}`", token.text)))
}

fn rationals(line: &Line<'_>, tokens: &[Token<'_>]) -> Result<Vec<Rational>, ParseError> {
    tokens.iter().map(|&t| rational(line, t)).collect()
}

fn header(line: &Line<'_>, keyword: &str) -> Result<(usize, usize), ParseError> {
    match line.tokens.as_slice() {
        [k, first, second] if k.text == keyword => Ok((count(line, *first)?, count(line, *second)?)),
        [k, ..] if k.text == keyword => Err(line.error(k.column, format!("expected `{keyword} <count> <count>`"))),
        [k, ..] => Err(line.error(k.column, format!("expected `{keyword}` header, found `{}`", k.text))),
        [] => unreachable!("blank lines are skipped"),
    }
}

fn exact_len(line: &Line<'_>, found: usize, expected: usize, what: &str) -> Result<(), ParseError> {
    if found == expected {
        Ok(())
    } else {
        let column = line
            .tokens
            .get(expected + 1)
            .map_or_else(|| line.end_column(), |t| t.column);
        Err(line.error(column, format!("expected {expected} {what}, found {found}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Relation {
    AtLeast,
    AtMost,
    Equal,
}

pub fn parse_lp(text: &str) -> Result<LinearProgram, ParseError> {
    let mut lines = Lines::new(text);
    let (m, n) = header(lines.expect("`lp m n` header")?, "lp")?;

    let objective = lines.expect("objective line `c ...`")?;
    let first = objective.tokens[0];
    if first.text != "c" {
        return Err(objective.error(
            first.column,
            format!("expected objective line `c ...`, found `{}`", first.text),
        ));
    }
    exact_len(objective, objective.tokens.len() - 1, n, "objective coefficients")?;
    let c = rationals(objective, &objective.tokens[1..])?;

    let mut rows = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines.expect("constraint line")?;
        let Some(rel_at) = line.tokens.iter().position(|t| matches!(t.text, ">=" | "<=" | "=")) else {
            return Err(line.error(line.end_column(), "expected `>=`, `<=` or `=`"));
        };
        exact_len(line, rel_at, n, "coefficients")?;
        let rest = &line.tokens[rel_at + 1..];
        if rest.len() != 1 {
            let column = rest.get(1).map_or_else(|| line.end_column(), |t| t.column);
            return Err(line.error(column, "expected exactly one right-hand side"));
        }
        let coefficients = rationals(line, &line.tokens[..rel_at])?;
        let rhs = rational(line, rest[0])?;
        let relation = match line.tokens[rel_at].text {
            ">=" => Relation::AtLeast,
            "<=" => Relation::AtMost,
            _ => Relation::Equal,
        };
        let negated = || (coefficients.iter().map(|v| -v).collect::<Vec<_>>(), -&rhs);
        match relation {
            Relation::AtLeast => {
                rows.push(coefficients.clone());
                b.push(rhs.clone());
            }
            Relation::AtMost => {
                let (row, value) = negated();
                rows.push(row);
                b.push(value);
            }
            Relation::Equal => {
                let (row, value) = negated();
                rows.push(coefficients.clone());
                b.push(rhs.clone());
                rows.push(row);
                b.push(value);
            }
        }
    }
    lines.finish()?;
    let a = Matrix::from_rows(n, rows).expect("row lengths were checked");
    Ok(LinearProgram::new(a, b, c).expect("dimensions were checked"))
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn labelled(label: &str, values: &[Rational]) -> String {
    if values.is_empty() {
        label.to_string()
    } else {
        format!("{label} {}", join(values))
    }
}

pub fn format_lp(lp: &LinearProgram) -> String {
    let mut out = format!("lp {} {}\n{}\n", lp.m(), lp.n(), labelled("c", &lp.c));
    for (row, rhs) in lp.a.row_iter().zip(&lp.b) {
        if row.is_empty() {
            out.push_str(&format!(">= {rhs}\n"));
        } else {
            out.push_str(&format!("{} >= {rhs}\n", join(row)));
        }
    }
    out
}

/// Parses a point file into an `n x p` matrix whose columns are the points.
pub fn parse_points(text: &str) -> Result<Matrix, ParseError> {
    let mut lines = Lines::new(text);
    let (n, p) = header(lines.expect("`points n p` header")?, "points")?;
    let mut columns = Vec::with_capacity(p);
    for _ in 0..p {
        let line = lines.expect("point line")?;
        exact_len(line, line.tokens.len(), n, "coordinates")?;
        columns.push(rationals(line, &line.tokens)?);
    }
    lines.finish()?;
    Ok(Matrix::from_rows(n, columns)
        .expect("row lengths were checked")
        .transpose())
}

pub fn format_points(points: &Matrix) -> String {
    let mut out = format!("points {} {}\n", points.rows(), points.cols());
    for j in 0..points.cols() {
        out.push_str(&join(&points.col(j)));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
    Unbounded,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Optimal => "optimal",
            Status::Infeasible => "infeasible",
            Status::Unbounded => "unbounded",
            Status::NotApplicable => "not-applicable",
        }
    }

    fn parse(text: &str) -> Option<Self> {
        Some(match text {
            "optimal" => Status::Optimal,
            "infeasible" => Status::Infeasible,
            "unbounded" => Status::Unbounded,
            "not-applicable" => Status::NotApplicable,
            _ => return None,
        })
    }
}

/// Contents of a certificate file. `NotApplicable` carries a feasible point
/// `x` when it records a feasibility witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub status: Status,
    pub value: Option<Rational>,
    pub x: Option<Vec<Rational>>,
    pub u: Option<Vec<Rational>>,
    pub d: Option<Vec<Rational>>,
}

impl Certificate {
    pub fn from_result(c: &[Rational], result: &SimplexResult) -> Self {
        match result {
            SimplexResult::Optimal { x, u } => Certificate {
                status: Status::Optimal,
                value: Some(inner(c, x)),
                x: Some(x.clone()),
                u: Some(u.clone()),
                d: None,
            },
            SimplexResult::Infeasible { d } => Certificate {
                status: Status::Infeasible,
                value: None,
                x: None,
                u: None,
                d: Some(d.clone()),
            },
            SimplexResult::Unbounded { x, d } => Certificate {
                status: Status::Unbounded,
                value: None,
                x: Some(x.clone()),
                u: None,
                d: Some(d.clone()),
            },
        }
    }

    pub fn from_feasibility(outcome: &Feasibility) -> Self {
        match outcome {
            Feasibility::Feasible { x } => Certificate {
                status: Status::NotApplicable,
                value: None,
                x: Some(x.clone()),
                u: None,
                d: None,
            },
            Feasibility::Infeasible { d } => Certificate {
                status: Status::Infeasible,
                value: None,
                x: None,
                u: None,
                d: Some(d.clone()),
            },
        }
    }

    pub fn format(&self) -> String {
        let mut out = format!("status {}\n", self.status.as_str());
        if let Some(value) = &self.value {
            out.push_str(&format!("value {value}\n"));
        }
        for (label, vector) in [("x", &self.x), ("u", &self.u), ("d", &self.d)] {
            if let Some(v) = vector {
                out.push_str(&labelled(label, v));
                out.push('\n');
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = Lines::new(text);
        let first = lines.expect("`status` line")?.clone();
        let status = match first.tokens.as_slice() {
            [k, s] if k.text == "status" => {
                Status::parse(s.text).ok_or_else(|| first.error(s.column, format!("unknown status `{}`", s.text)))?
            }
            [k, ..] => {
                return Err(first.error(
                    k.column,
                    "expected `status <optimal|infeasible|unbounded|not-applicable>`",
                ))
            }
            [] => unreachable!("blank lines are skipped"),
        };
        let mut cert = Certificate {
            status,
            value: None,
            x: None,
            u: None,
            d: None,
        };
        while let Some(line) = lines.inner.get(lines.next) {
            lines.next += 1;
            let label = line.tokens[0];
            let slot = match label.text {
                "x" => &mut cert.x,
                "u" => &mut cert.u,
                "d" => &mut cert.d,
                "value" => {
                    if cert.value.is_some() || line.tokens.len() != 2 {
                        return Err(line.error(label.column, "expected a single `value <q>` line"));
                    }
                    cert.value = Some(rational(line, line.tokens[1])?);
                    continue;
                }
                other => return Err(line.error(label.column, format!("unknown label `{other}`"))),
            };
            if slot.is_some() {
                return Err(line.error(label.column, format!("duplicate `{}` line", label.text)));
            }
            *slot = Some(rationals(line, &line.tokens[1..])?);
        }
        let (x, u, d) = (cert.x.is_some(), cert.u.is_some(), cert.d.is_some());
        let consistent = match status {
            Status::Optimal => x && u && !d,
            Status::Infeasible => !x && !u && d,
            Status::Unbounded => x && !u && d,
            Status::NotApplicable => !u && !d,
        } && (cert.value.is_none() || status == Status::Optimal);
        if !consistent {
            return Err(first.error(
                first.tokens[1].column,
                format!("vectors present do not match status `{}`", status.as_str()),
            ));
        }
        Ok(cert)
    }
}

/// Verifies `cert` against `lp` with the certificate checkers alone.
pub fn verify(lp: &LinearProgram, cert: &Certificate) -> crate::Result<bool> {
    let (a, b, c) = (&lp.a, &lp.b, &lp.c);
    let none: &[Rational] = &[];
    let x = cert.x.as_deref().unwrap_or(none);
    let u = cert.u.as_deref().unwrap_or(none);
    let d = cert.d.as_deref().unwrap_or(none);
    Ok(match cert.status {
        Status::Optimal => check_optimal(a, b, c, x, u)? && cert.value.as_ref().is_none_or(|v| *v == inner(c, x)),
        Status::Infeasible => check_infeasible(a, b, d)?,
        Status::Unbounded => check_unbounded(a, b, c, x, d)?,
        Status::NotApplicable => match &cert.x {
            Some(x) => contains(a, b, x)?,
            None => false,
        },
    })
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("point argument: {0}")]
    Point(RationalParseError),
    #[error(transparent)]
    Solver(#[from] crate::Error),
    #[error("writing output: {0}")]
    Output(#[from] io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "lexsimplex",
    version,
    about = "Exact rational LP solver with checkable certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimize `c x` subject to `A x >= b` and emit a certificate.
    Solve {
        lp: PathBuf,
        /// Write the certificate here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether `A x >= b` has a solution.
    Feasible {
        lp: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the basic points of every feasible basis.
    Vertices { lp: PathBuf },
    /// Test whether a point lies in the convex hull of a point file.
    HullMember {
        points: PathBuf,
        #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
        x: Vec<String>,
    },
    /// Compute a hyperplane separating a point from a point file.
    Separate {
        points: PathBuf,
        #[arg(required = true, allow_hyphen_values = true, num_args = 1..)]
        x: Vec<String>,
    },
    /// Compare inequality membership with vertex-hull membership on samples.
    Minkowski { lp: PathBuf, samples: PathBuf },
    /// Verify a certificate file against an LP file.
    Check { lp: PathBuf, cert: PathBuf },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn read_with<T>(path: &Path, parse: impl Fn(&str) -> Result<T, ParseError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn point(args: &[String]) -> Result<Vec<Rational>, CliError> {
    args.iter()
        .flat_map(|a| a.split([' ', ',']))
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(CliError::Point))
        .collect()
}

fn emit(out: &mut dyn Write, output: Option<&Path>, cert: &Certificate) -> Result<(), CliError> {
    let text = cert.format();
    match output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|source| CliError::Write {
                path: path.to_path_buf(),
                source,
            })?;
            writeln!(out, "status {}", cert.status.as_str())?;
            if let Some(value) = &cert.value {
                writeln!(out, "value {value}")?;
            }
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Solve { lp, output } => {
            let lp = read_with(&lp, parse_lp)?;
            let result = simplex(&lp.a, &lp.b, &lp.c)?;
            emit(out, output.as_deref(), &Certificate::from_result(&lp.c, &result))?;
        }
        Command::Feasible { lp, output } => {
            let lp = read_with(&lp, parse_lp)?;
            let outcome = feasibility(&lp.a, &lp.b)?;
            match &outcome {
                Feasibility::Feasible { x } => writeln!(out, "feasible\n{}", labelled("x", x))?,
                Feasibility::Infeasible { d } => writeln!(out, "infeasible\n{}", labelled("d", d))?,
            }
            if let Some(path) = output {
                std::fs::write(&path, Certificate::from_feasibility(&outcome).format())
                    .map_err(|source| CliError::Write { path, source })?;
            }
        }
        Command::Vertices { lp } => {
            let lp = read_with(&lp, parse_lp)?;
            let vertices = enumerate_vertices(&lp.a, &lp.b)?;
            writeln!(out, "vertices {}", vertices.bases.len())?;
            for (j, basis) in vertices.bases.iter().enumerate() {
                let rows = basis.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                writeln!(out, "{} basis {rows}", labelled("point", &vertices.points.col(j)))?;
            }
        }
        Command::HullMember { points, x } => {
            let points = read_with(&points, parse_points)?;
            let x = point(&x)?;
            let member = is_in_convex_hull(&points, &x)?;
            writeln!(out, "{}", if member { "member" } else { "outside" })?;
        }
        Command::Separate { points, x } => {
            let points = read_with(&points, parse_points)?;
            let x = point(&x)?;
            match separation_hyperplane(&points, &x)? {
                Separation::InHull => writeln!(out, "in-hull")?,
                Separation::Separated(cvec) => {
                    writeln!(out, "separated\n{}", labelled("c", &cvec))?;
                    if !check_separation(&points, &x, &cvec)? {
                        writeln!(err, "error: hyperplane failed verification")?;
                        return Ok(EXIT_REJECTED);
                    }
                }
            }
        }
        Command::Minkowski { lp, samples } => {
            let lp = read_with(&lp, parse_lp)?;
            let samples = read_with(&samples, parse_points)?;
            if samples.rows() != lp.n() && samples.cols() > 0 {
                return Err(crate::Error::DimensionMismatch {
                    context: "minkowski: sample",
                    expected: lp.n(),
                    found: samples.rows(),
                }
                .into());
            }
            let xs: Vec<Vec<Rational>> = (0..samples.cols()).map(|j| samples.col(j)).collect();
            if minkowski_check(&lp.a, &lp.b, &xs)? {
                writeln!(out, "minkowski ok {}", xs.len())?;
            } else {
                writeln!(out, "minkowski mismatch")?;
                return Ok(EXIT_REJECTED);
            }
        }
        Command::Check { lp, cert } => {
            let lp = read_with(&lp, parse_lp)?;
            let cert = read_with(&cert, Certificate::parse)?;
            let verified = match verify(&lp, &cert) {
                Ok(v) => v,
                Err(crate::Error::DimensionMismatch { .. }) => false,
                Err(e) => return Err(e.into()),
            };
            if verified {
                writeln!(out, "verified {}", cert.status.as_str())?;
            } else {
                writeln!(out, "rejected {}", cert.status.as_str())?;
                return Ok(EXIT_REJECTED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::ints;

    const PENTAGON: &str = "\
# five constraints in the plane
lp 5 2
c 3 1
1 1 >= 4
-1 -3 >= -23
4 -1 >= 1
-2 1 >= -11
0 1 >= 1
";

    #[test]
    fn parses_pentagon() {
        let lp = parse_lp(PENTAGON).unwrap();
        assert_eq!((lp.m(), lp.n()), (5, 2));
        assert_eq!(lp.b, ints(&[4, -23, 1, -11, 1]));
        assert_eq!(lp.c, ints(&[3, 1]));
        assert_eq!(parse_lp(&format_lp(&lp)).unwrap(), lp);
    }

    #[test]
    fn format_normalizes_whitespace_only() {
        let messy = "lp 1 2\n  c   1/2\t-3 \n\n 2  0 >=  7 # note\n";
        assert_eq!(format_lp(&parse_lp(messy).unwrap()), "lp 1 2\nc 1/2 -3\n2 0 >= 7\n");
    }

    #[test]
    fn empty_constraint_list() {
        let lp = parse_lp("lp 0 2\nc 1 1\n").unwrap();
        assert_eq!((lp.m(), lp.n()), (0, 2));
    }

    #[test]
    fn sugar_rows() {
        let lp = parse_lp("lp 2 2\nc 0 0\n1 2 <= 3\n1 1 = 1\n").unwrap();
        assert_eq!(lp.a, Matrix::from_i64(2, &[&[-1, -2], &[1, 1], &[-1, -1]]));
        assert_eq!(lp.b, ints(&[-3, 1, -1]));
    }

    #[test]
    fn parse_errors_have_positions() {
        let e = parse_lp("lp 1 1\nc 1.5\n1 >= 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert!(e.message.contains("floating-point"));

        let e = parse_lp("lp 1 2\nc 1 1\n1 >= 0\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_lp("lp 2 1\nc 1\n1 >= 0\n").unwrap_err();
        assert_eq!((e.line, e.message.contains("end of input")), (4, true));
        let e = parse_lp("lp 1 1\nc 1\n1 >= 0\n2 >= 0\n").unwrap_err();
        assert_eq!(e.line, 4);
        let e = parse_lp("lq 1 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_lp("lp 1 1\nc 1\n1 >= 0 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 8));
    }

    #[test]
    fn certificate_round_trip() {
        let lp = parse_lp(PENTAGON).unwrap();
        let result = simplex(&lp.a, &lp.b, &lp.c).unwrap();
        let cert = Certificate::from_result(&lp.c, &result);
        let text = cert.format();
        assert!(text.starts_with("status optimal\nvalue 6\nx 1 3\n"));
        let parsed = Certificate::parse(&text).unwrap();
        assert_eq!(parsed, cert);
        assert!(verify(&lp, &parsed).unwrap());

        assert!(Certificate::parse("status optimal\nx 1 3\n").is_err());
        assert!(Certificate::parse("status infeasible\nd 1\nd 1\n").is_err());
        assert!(Certificate::parse("status won\n").is_err());
    }

    #[test]
    fn points_round_trip() {
        let text = "points 2 3\n0 0\n1 0\n1/2 1\n";
        let v = parse_points(text).unwrap();
        assert_eq!((v.rows(), v.cols()), (2, 3));
        assert_eq!(format_points(&v), text);
        assert!(parse_points("points 2 1\n0\n").is_err());
    }

    #[test]
    fn point_arguments() {
        let args = vec!["1/2".to_string(), "-3".to_string()];
        assert_eq!(
            point(&args).unwrap(),
            vec![Rational::new(1.into(), 2.into()), -Rational::from_integer(3.into())]
        );
        assert!(point(&["1.5".to_string()]).is_err());
    }
}
