//! Plain-text instance formats.
//!
//! Headers name the instance kind; bodies are whitespace-separated decimal
//! integers with the literal token `inf` for `+∞`:
//!
//! ```text
//! tropical <m> <n>            m rows of n entries
//! minplus (eq|le) <m> <n>     m rows of A, then m rows of B
//! map <nvars> <natoms>        lines: atom <z> <k> <t> <x1> ... <xt>
//! mpg <n1> <n2> <nE> <start>  lines: <u> <v> <w>; vertices 0..n1-1 are
//!                             player 1's, the rest player 2's
//! graph <n> <m>               lines: <u> <v>
//! cert <n> <m> <k>            lines: witness <n entries>,
//!                             blocks <n 1-based block ids, 0 = no block>,
//!                             rows <m 1-based block ids>
//! ```
//!
//! Emission is canonical (single spaces, one `\n` per line), so parse→emit
//! round-trips byte-identically on canonical files.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Zero;
use tropkit_core::dimension::{BlockTriangularForm, DimensionCertificate, Graph};
use tropkit_core::maxatom::{MaxAtom, MaxAtomSystem};
use tropkit_core::mpgame::MeanPayoffGame;
use tropkit_core::{Domain, Ext, ExtInt, Int, Relation, TropicalSystem, TwoSidedSystem};

/// Parse failure with 1-based line and column of the offending token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

struct Scanner<'a> {
    tokens: Vec<(usize, usize, &'a str)>,
    pos: usize,
    last: (usize, usize),
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        let mut tokens = Vec::new();
        let mut last = (1, 1);
        for (ln, line) in text.lines().enumerate() {
            let mut col = 1;
            for tok in line.split(' ') {
                if !tok.is_empty() {
                    tokens.push((ln + 1, col, tok));
                    last = (ln + 1, col + tok.len());
                }
                col += tok.len() + 1;
            }
        }
        Self { tokens, pos: 0, last }
    }

    fn fail<T>(&self, line: usize, col: usize, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError { line, col, msg: msg.into() })
    }

    fn next(&mut self, what: &str) -> PResult<(usize, usize, &'a str)> {
        match self.tokens.get(self.pos) {
            Some(&t) => {
                self.pos += 1;
                Ok(t)
            }
            None => {
                let (l, c) = self.last;
                self.fail(l, c, format!("unexpected end of input, expected {what}"))
            }
        }
    }

    fn word(&mut self, expected: &str) -> PResult<()> {
        let (l, c, t) = self.next(expected)?;
        if t != expected {
            return self.fail(l, c, format!("expected `{expected}`, found `{t}`"));
        }
        Ok(())
    }

    fn int(&mut self) -> PResult<Int> {
        let (l, c, t) = self.next("an integer")?;
        Int::from_str(t)
            .map_err(|_| ParseError { line: l, col: c, msg: format!("malformed integer `{t}`") })
    }

    fn ext(&mut self) -> PResult<Ext> {
        let (l, c, t) = self.next("an integer or `inf`")?;
        if t == "inf" {
            return Ok(ExtInt::Inf);
        }
        Int::from_str(t).map(ExtInt::Finite).map_err(|_| ParseError {
            line: l,
            col: c,
            msg: format!("malformed token `{t}`"),
        })
    }

    fn usize(&mut self, what: &str) -> PResult<usize> {
        let (l, c, t) = self.next(what)?;
        t.parse::<usize>().map_err(|_| ParseError {
            line: l,
            col: c,
            msg: format!("malformed {what} `{t}`"),
        })
    }

    fn finish(&mut self) -> PResult<()> {
        if let Some(&(l, c, t)) = self.tokens.get(self.pos) {
            return self.fail(l, c, format!("trailing token `{t}`"));
        }
        Ok(())
    }

    fn invalid<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError { line: 1, col: 1, msg: msg.into() })
    }
}

fn grid(sc: &mut Scanner<'_>, m: usize, n: usize) -> PResult<Vec<Vec<Ext>>> {
    (0..m)
        .map(|_| (0..n).map(|_| sc.ext()).collect())
        .collect()
}

fn domain_of(rows: &[Vec<Ext>]) -> Domain {
    if rows.iter().flatten().any(|e| e.is_inf()) {
        Domain::IntInf
    } else {
        Domain::Int
    }
}

pub fn parse_matrix(text: &str) -> PResult<TropicalSystem<Int>> {
    let mut sc = Scanner::new(text);
    sc.word("tropical")?;
    let m = sc.usize("row count")?;
    let n = sc.usize("column count")?;
    if m < 1 || n < 2 {
        return sc.invalid("tropical systems need m >= 1 and n >= 2");
    }
    let rows = grid(&mut sc, m, n)?;
    sc.finish()?;
    let domain = domain_of(&rows);
    TropicalSystem::new(rows, domain).map_err(|e| ParseError {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })
}

pub fn parse_twosided(text: &str) -> PResult<TwoSidedSystem<Int>> {
    let mut sc = Scanner::new(text);
    sc.word("minplus")?;
    let (l, c, rel) = sc.next("`eq` or `le`")?;
    let relation = match rel {
        "eq" => Relation::Eq,
        "le" => Relation::Le,
        other => return sc.fail(l, c, format!("expected `eq` or `le`, found `{other}`")),
    };
    let m = sc.usize("row count")?;
    let n = sc.usize("column count")?;
    if m < 1 || n < 1 {
        return sc.invalid("min-plus systems need m >= 1 and n >= 1");
    }
    let lhs = grid(&mut sc, m, n)?;
    let rhs = grid(&mut sc, m, n)?;
    sc.finish()?;
    let domain = if domain_of(&lhs) == Domain::IntInf || domain_of(&rhs) == Domain::IntInf {
        Domain::IntInf
    } else {
        Domain::Int
    };
    TwoSidedSystem::new(lhs, rhs, relation, domain).map_err(|e| ParseError {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })
}

pub fn parse_map(text: &str) -> PResult<MaxAtomSystem<Int>> {
    let mut sc = Scanner::new(text);
    sc.word("map")?;
    let nvars = sc.usize("variable count")?;
    let natoms = sc.usize("atom count")?;
    let mut atoms = Vec::with_capacity(natoms);
    for _ in 0..natoms {
        sc.word("atom")?;
        let z = sc.usize("target variable")?;
        let k = sc.int()?;
        let t = sc.usize("term count")?;
        if t < 1 {
            return sc.invalid("atoms need at least one term");
        }
        let mut terms = Vec::with_capacity(t);
        for _ in 0..t {
            terms.push((sc.usize("term variable")?, Int::zero()));
        }
        atoms.push(MaxAtom::new(z, terms, k));
    }
    sc.finish()?;
    MaxAtomSystem::new(nvars, atoms).map_err(|e| ParseError {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })
}

pub fn parse_mpg(text: &str) -> PResult<MeanPayoffGame<Int>> {
    let mut sc = Scanner::new(text);
    sc.word("mpg")?;
    let n1 = sc.usize("player-1 vertex count")?;
    let n2 = sc.usize("player-2 vertex count")?;
    let ne = sc.usize("edge count")?;
    let start = sc.usize("start vertex")?;
    let mut edges = Vec::with_capacity(ne);
    for _ in 0..ne {
        let u = sc.usize("edge source")?;
        let v = sc.usize("edge target")?;
        let w = sc.int()?;
        edges.push((u, v, w));
    }
    sc.finish()?;
    MeanPayoffGame::new(n1, n2, edges, start).map_err(|e| ParseError {
        line: 1,
        col: 1,
        msg: e.to_string(),
    })
}

pub fn parse_graph(text: &str) -> PResult<Graph> {
    let mut sc = Scanner::new(text);
    sc.word("graph")?;
    let n = sc.usize("vertex count")?;
    let m = sc.usize("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let u = sc.usize("edge endpoint")?;
        let v = sc.usize("edge endpoint")?;
        edges.push((u, v));
    }
    sc.finish()?;
    Graph::new(n, edges).map_err(|e| ParseError { line: 1, col: 1, msg: e.to_string() })
}

pub fn parse_certificate(text: &str) -> PResult<DimensionCertificate<Int>> {
    let mut sc = Scanner::new(text);
    sc.word("cert")?;
    let n = sc.usize("column count")?;
    let m = sc.usize("row count")?;
    let k = sc.usize("claimed dimension")?;
    sc.word("witness")?;
    let witness: Vec<Ext> = (0..n).map(|_| sc.ext()).collect::<PResult<_>>()?;
    sc.word("blocks")?;
    let col_ids: Vec<usize> = (0..n)
        .map(|_| sc.usize("block id"))
        .collect::<PResult<_>>()?;
    sc.word("rows")?;
    let row_ids: Vec<usize> = (0..m)
        .map(|_| sc.usize("block id"))
        .collect::<PResult<_>>()?;
    sc.finish()?;
    let d = col_ids.iter().copied().max().unwrap_or(0);
    let mut column_blocks = vec![Vec::new(); d];
    for (col, &id) in col_ids.iter().enumerate() {
        if id > 0 {
            column_blocks[id - 1].push(col);
        }
    }
    let mut row_assignment = Vec::with_capacity(m);
    for &id in &row_ids {
        if id == 0 || id > d {
            return sc.invalid("row block id out of range");
        }
        row_assignment.push(id - 1);
    }
    Ok(DimensionCertificate {
        witness,
        form: BlockTriangularForm { column_blocks, row_assignment },
        claimed_k: k,
    })
}

fn push_row(out: &mut String, row: &[Ext]) {
    for (j, e) in row.iter().enumerate() {
        if j > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{e}");
    }
    out.push('\n');
}

pub fn emit_matrix(a: &TropicalSystem<Int>) -> String {
    let mut out = format!("tropical {} {}\n", a.nrows(), a.ncols());
    for row in a.rows() {
        push_row(&mut out, row);
    }
    out
}

pub fn emit_twosided(s: &TwoSidedSystem<Int>) -> String {
    let rel = match s.relation() {
        Relation::Eq => "eq",
        Relation::Le => "le",
    };
    let mut out = format!("minplus {} {} {}\n", rel, s.nrows(), s.ncols());
    for row in s.lhs() {
        push_row(&mut out, row);
    }
    for row in s.rhs() {
        push_row(&mut out, row);
    }
    out
}

/// Emits a max-atom system; the format carries no term offsets, so the
/// system must be offset-free (see `MaxAtomSystem::to_binary_form`).
pub fn emit_map(s: &MaxAtomSystem<Int>) -> Result<String, ParseError> {
    let mut out = format!("map {} {}\n", s.nvars(), s.atoms().len());
    for a in s.atoms() {
        if a.terms.iter().any(|(_, o)| !o.is_zero()) {
            return Err(ParseError {
                line: 1,
                col: 1,
                msg: "map files cannot carry term offsets; binarize first".into(),
            });
        }
        let _ = write!(out, "atom {} {} {}", a.target, a.k, a.terms.len());
        for (v, _) in &a.terms {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn emit_mpg(g: &MeanPayoffGame<Int>) -> String {
    let mut out = format!(
        "mpg {} {} {} {}\n",
        g.n1(),
        g.n2(),
        g.edges().len(),
        g.start()
    );
    for (u, v, w) in g.edges() {
        let _ = writeln!(out, "{u} {v} {w}");
    }
    out
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.nvertices(), g.edges().len());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn emit_certificate(c: &DimensionCertificate<Int>, nrows: usize) -> String {
    let n = c.witness.len();
    let mut out = format!("cert {} {} {}\n", n, nrows, c.claimed_k);
    out.push_str("witness");
    for e in &c.witness {
        let _ = write!(out, " {e}");
    }
    out.push('\n');
    let mut ids = vec![0usize; n];
    for (b, block) in c.form.column_blocks.iter().enumerate() {
        for &col in block {
            if col < n {
                ids[col] = b + 1;
            }
        }
    }
    out.push_str("blocks");
    for id in ids {
        let _ = write!(out, " {id}");
    }
    out.push('\n');
    out.push_str("rows");
    for &r in &c.form.row_assignment {
        let _ = write!(out, " {}", r + 1);
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tropical_round_trip() {
        let text = "tropical 2 3\n1 0 0\n0 1 0\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!((a.nrows(), a.ncols()), (2, 3));
        assert_eq!(emit_matrix(&a), text);
    }

    #[test]
    fn inf_tokens() {
        let text = "tropical 1 2\n0 inf\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a.domain(), Domain::IntInf);
        assert_eq!(emit_matrix(&a), text);
    }

    #[test]
    fn graph_round_trip() {
        let text = "graph 3 2\n0 1\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.nvertices(), 3);
        assert_eq!(emit_graph(&g), text);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_matrix("tropical 1 2\n0 x\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 3));
        let err = parse_matrix("tropical 2 2\n0 0\n").unwrap_err();
        assert!(err.msg.contains("end of input"));
    }

    #[test]
    fn minplus_round_trip() {
        let text = "minplus le 1 2\n0 inf\ninf 0\n";
        let s = parse_twosided(text).unwrap();
        assert_eq!(s.relation(), Relation::Le);
        assert_eq!(emit_twosided(&s), text);
    }

    #[test]
    fn map_round_trip() {
        let text = "map 3 2\natom 2 -1 2 0 1\natom 0 0 1 2\n";
        let s = parse_map(text).unwrap();
        assert_eq!(s.nvars(), 3);
        assert_eq!(emit_map(&s).unwrap(), text);
    }

    #[test]
    fn mpg_round_trip() {
        let text = "mpg 1 1 2 0\n0 1 1\n1 0 -1\n";
        let g = parse_mpg(text).unwrap();
        assert_eq!(emit_mpg(&g), text);
    }

    #[test]
    fn cert_round_trip() {
        let text = "cert 3 2 1\nwitness 0 0 inf\nblocks 1 2 0\nrows 2 2\n";
        let c = parse_certificate(text).unwrap();
        assert_eq!(c.claimed_k, 1);
        assert_eq!(c.form.column_blocks, vec![vec![0], vec![1]]);
        assert_eq!(emit_certificate(&c, 2), text);
    }
}
