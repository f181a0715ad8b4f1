//! Bundled regression fixtures: published generator matrices, their
//! congruence witnesses, and the appended columns of each table row.

use crate::code::{classify, hull_dimension, minimum_distance, LinearCode};
use crate::embedding::{append_manual, verify_embedding};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::io::{parse_dims, parse_field_header, parse_matrix_body};
use crate::matrix::{InnerKind, Matrix};

pub const FIXTURE_NAMES: [&str; 6] = ["table1", "table2", "table3", "table4", "table5", "table6"];

const SOURCES: [(&str, &str); 6] = [
    ("table1", include_str!("../fixtures/table1.txt")),
    ("table2", include_str!("../fixtures/table2.txt")),
    ("table3", include_str!("../fixtures/table3.txt")),
    ("table4", include_str!("../fixtures/table4.txt")),
    ("table5", include_str!("../fixtures/table5.txt")),
    ("table6", include_str!("../fixtures/table6.txt")),
];

/// A block of the stated canonical form: a scalar or J = [[0,1],[1,0]].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    Scalar(Elem),
    J,
}

#[derive(Clone, Debug)]
pub struct FixtureRow {
    pub t: usize,
    /// Column labels as written, e.g. `P1+P2` or `3*P1`.
    pub labels: Vec<String>,
    pub appended: Matrix,
    /// Published [n, k, d].
    pub expect: [usize; 3],
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub title: String,
    pub kind: InnerKind,
    pub hull: usize,
    /// Published Euclidean type, if any.
    pub code_type: Option<String>,
    pub code: LinearCode,
    pub p: Matrix,
    /// `sign · G·G* = P · blocks · P*`
    pub sign: i64,
    pub blocks: Vec<Block>,
    pub rows: Vec<FixtureRow>,
}

impl Fixture {
    pub fn canonical_matrix(&self) -> Matrix {
        let f = self.p.field();
        let n = self.blocks.iter().map(|b| if *b == Block::J { 2 } else { 1 }).sum();
        let mut m = Matrix::zeros(f, n, n);
        let mut i = 0;
        for b in &self.blocks {
            match *b {
                Block::Scalar(e) => {
                    m[(i, i)] = e;
                    i += 1;
                }
                Block::J => {
                    m[(i, i + 1)] = Elem::ONE;
                    m[(i + 1, i)] = Elem::ONE;
                    i += 2;
                }
            }
        }
        m
    }

    /// Whether the published witness satisfies its stated congruence.
    pub fn congruence_holds(&self) -> Result<bool> {
        let f = self.code.field();
        let lhs = self.code.gram(self.kind)?.scale(f.from_int(self.sign));
        let rhs = self.p.mul(&self.canonical_matrix())?.mul(&self.p.star(self.kind)?)?;
        Ok(lhs == rhs && self.p.rank() == self.p.rows())
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// `[coef*]P<i>` terms joined by `+`, 1-based column indices.
fn parse_column(expr: &str, p: &Matrix, line: usize) -> Result<Vec<Elem>> {
    let f = p.field();
    let mut col = vec![Elem::ZERO; p.rows()];
    for term in expr.split('+') {
        let (coef, var) = match term.split_once('*') {
            Some((c, v)) => {
                let c: u32 = c.parse().map_err(|_| perr(line, format!("bad coefficient {c:?}")))?;
                (f.elem(c).map_err(|e| perr(line, e.to_string()))?, v)
            }
            None => (Elem::ONE, term),
        };
        let idx: usize = var
            .strip_prefix('P')
            .and_then(|i| i.parse().ok())
            .filter(|&i| i >= 1 && i <= p.cols())
            .ok_or_else(|| perr(line, format!("bad column reference {var:?}")))?;
        for (r, slot) in col.iter_mut().enumerate() {
            *slot = f.add(*slot, f.mul(coef, p[(r, idx - 1)]));
        }
    }
    Ok(col)
}

fn key_values(rest: &str, line: usize) -> Result<Vec<(&str, &str)>> {
    rest.split_whitespace()
        .map(|w| w.split_once('=').ok_or_else(|| perr(line, format!("expected key=value, got {w:?}"))))
        .collect()
}

fn parse_fixture(text: &str) -> Result<Fixture> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (mut name, mut title, mut kind, mut hull, mut code_type) = (None, String::new(), None, None, None);
    let (mut field, mut g, mut p, mut congruence) = (None::<Field>, None, None::<Matrix>, None);
    let mut rows = Vec::new();

    while let Some((no, line)) = lines.next() {
        let (head, rest) = line.split_once(' ').unwrap_or((line, ""));
        match head {
            "name" => name = Some(rest.to_string()),
            "title" => title = rest.to_string(),
            "inner" => {
                kind = Some(match rest {
                    "euclidean" => InnerKind::Euclidean,
                    "hermitian" => InnerKind::Hermitian,
                    _ => return Err(perr(no, format!("unknown inner product {rest:?}"))),
                })
            }
            "hull" => hull = Some(rest.parse().map_err(|_| perr(no, "bad hull dimension"))?),
            "type" => code_type = Some(rest.to_string()),
            "field" => field = Some(parse_field_header(line, no)?),
            "G" | "P" => {
                let f = field.as_ref().ok_or_else(|| perr(no, "matrix before field header"))?;
                let (r, c) = parse_dims(rest, no)?;
                let m = parse_matrix_body(f, r, c, &mut lines, no)?;
                if head == "G" {
                    g = Some(m);
                } else {
                    p = Some(m);
                }
            }
            "congruence" => {
                let f = field.as_ref().ok_or_else(|| perr(no, "congruence before field header"))?;
                let (mut sign, mut blocks) = (1, Vec::new());
                for (k, v) in key_values(rest, no)? {
                    match k {
                        "sign" => sign = v.parse().map_err(|_| perr(no, "bad sign"))?,
                        "blocks" => {
                            for b in v.split(',') {
                                blocks.push(if b == "J" {
                                    Block::J
                                } else {
                                    let e = b.parse().map_err(|_| perr(no, format!("bad block {b:?}")))?;
                                    Block::Scalar(f.elem(e).map_err(|e| perr(no, e.to_string()))?)
                                });
                            }
                        }
                        _ => return Err(perr(no, format!("unknown key {k:?}"))),
                    }
                }
                congruence = Some((sign, blocks));
            }
            "row" => {
                let p = p.as_ref().ok_or_else(|| perr(no, "row before P"))?;
                let (mut t, mut labels, mut expect) = (None, Vec::new(), None);
                for (k, v) in key_values(rest, no)? {
                    match k {
                        "t" => t = Some(v.parse().map_err(|_| perr(no, "bad t"))?),
                        "cols" => labels = v.split(',').map(str::to_string).collect(),
                        "expect" => {
                            let nums: Vec<usize> = v
                                .split(',')
                                .map(|x| x.parse().map_err(|_| perr(no, "bad expected parameters")))
                                .collect::<Result<_>>()?;
                            expect = Some(
                                <[usize; 3]>::try_from(nums).map_err(|_| perr(no, "expected n,k,d"))?,
                            );
                        }
                        _ => return Err(perr(no, format!("unknown key {k:?}"))),
                    }
                }
                let columns = labels.iter().map(|l| parse_column(l, p, no)).collect::<Result<Vec<_>>>()?;
                let mut appended = Matrix::zeros(p.field(), p.rows(), columns.len());
                for (j, col) in columns.iter().enumerate() {
                    for (i, &e) in col.iter().enumerate() {
                        appended[(i, j)] = e;
                    }
                }
                rows.push(FixtureRow {
                    t: t.ok_or_else(|| perr(no, "row without t"))?,
                    labels,
                    appended,
                    expect: expect.ok_or_else(|| perr(no, "row without expect"))?,
                });
            }
            _ => return Err(perr(no, format!("unknown directive {head:?}"))),
        }
    }
    let (sign, blocks) = congruence.ok_or_else(|| perr(0, "missing congruence"))?;
    Ok(Fixture {
        name: name.ok_or_else(|| perr(0, "missing name"))?,
        title,
        kind: kind.ok_or_else(|| perr(0, "missing inner"))?,
        hull: hull.ok_or_else(|| perr(0, "missing hull"))?,
        code_type,
        code: LinearCode::new(g.ok_or_else(|| perr(0, "missing G"))?)?,
        p: p.ok_or_else(|| perr(0, "missing P"))?,
        sign,
        blocks,
        rows,
    })
}

pub fn load(name: &str) -> Result<Fixture> {
    let (_, text) = SOURCES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    parse_fixture(text)
}

pub fn load_all() -> Result<Vec<Fixture>> {
    FIXTURE_NAMES.iter().map(|n| load(n)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowOutcome {
    pub t: usize,
    pub labels: Vec<String>,
    pub expect: [usize; 3],
    /// [n, k, d] of the appended code, when it was accepted.
    pub got: Option<[usize; 3]>,
    /// Hull dimension and verification of the appended code.
    pub hull: Option<usize>,
    pub shortest: bool,
    pub error: Option<String>,
}

impl RowOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.got == Some(self.expect) && self.hull == Some(self.t) && self.shortest
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureReport {
    pub name: String,
    pub title: String,
    /// Published hull dimension and type against the computed ones.
    pub hull: (usize, usize),
    pub code_type: Option<(String, String)>,
    pub congruence_holds: bool,
    pub rows: Vec<RowOutcome>,
}

impl FixtureReport {
    /// Description of the first cell that differs from the published value.
    pub fn first_mismatch(&self) -> Option<String> {
        if self.hull.0 != self.hull.1 {
            return Some(format!("{}: hull dimension {} != published {}", self.name, self.hull.1, self.hull.0));
        }
        if let Some((want, got)) = &self.code_type {
            if want != got {
                return Some(format!("{}: type {got} != published {want}", self.name));
            }
        }
        if !self.congruence_holds {
            return Some(format!("{}: published witness P does not satisfy its congruence", self.name));
        }
        self.rows.iter().find(|r| !r.passed()).map(|r| {
            if let Some(e) = &r.error {
                return format!("{} t={}: {e}", self.name, r.t);
            }
            let [n, k, d] = r.expect;
            match r.got {
                Some([gn, gk, gd]) if [gn, gk, gd] != r.expect => {
                    format!("{} t={}: [{gn},{gk},{gd}] != published [{n},{k},{d}]", self.name, r.t)
                }
                _ if r.hull != Some(r.t) => format!("{} t={}: hull {:?} != {}", self.name, r.t, r.hull, r.t),
                _ => format!("{} t={}: appended block is not a shortest embedding", self.name, r.t),
            }
        })
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Re-runs every row of a fixture through manual-append mode.
pub fn run_fixture(fixture: &Fixture, max_enum: u64) -> Result<FixtureReport> {
    let code = &fixture.code;
    let hull = hull_dimension(code, fixture.kind)?;
    let code_type = match &fixture.code_type {
        Some(want) => Some((want.clone(), classify(code)?.tag.to_string())),
        None => None,
    };
    let mut rows = Vec::new();
    for row in &fixture.rows {
        let mut outcome = RowOutcome {
            t: row.t,
            labels: row.labels.clone(),
            expect: row.expect,
            got: None,
            hull: None,
            shortest: false,
            error: None,
        };
        match append_manual(code, &row.appended, row.t, fixture.kind) {
            Ok(result) => {
                let d = minimum_distance(&result.code, max_enum)?;
                outcome.got = Some([result.code.n(), result.code.k(), d]);
                outcome.hull = Some(hull_dimension(&result.code, fixture.kind)?);
                outcome.shortest = verify_embedding(code, &result)?.passed();
            }
            Err(e @ Error::AppendRejected { .. }) => outcome.error = Some(e.to_string()),
            Err(e) => return Err(e),
        }
        rows.push(outcome);
    }
    Ok(FixtureReport {
        name: fixture.name.clone(),
        title: fixture.title.clone(),
        hull: (fixture.hull, hull),
        code_type,
        congruence_holds: fixture.congruence_holds()?,
        rows,
    })
}

/// Runs a named fixture; any differing cell is a [`Error::FixtureMismatch`].
pub fn reproduce(name: &str, max_enum: u64) -> Result<FixtureReport> {
    let report = run_fixture(&load(name)?, max_enum)?;
    match report.first_mismatch() {
        Some(m) => Err(Error::FixtureMismatch(m)),
        None => Ok(report),
    }
}
