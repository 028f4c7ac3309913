//! Formal equivariant bundle expressions on `P^{n-1}` and their prefix
//! text grammar.
//!
//! ```text
//! expr   := atom | '(' form ')'
//! form   := 'sum' expr* | 'tensor' expr*
//!         | 'sym' INT expr | 'wedge' INT expr | 'schur' PART expr
//!         | 'det' expr | 'base' expr
//!         | 'const' INT [LABEL] | 'line' INT | atom
//! atom   := 'Q' | 'Q@' INT | 'L' | 'L^' INT | 'O'
//! ```
//!
//! A whole input may be a bare `form`, e.g.
//! `sym 7 (tensor (sum (const 15 Sym2C5) Q) (const 7 Ck))`. The variadic
//! forms `sum` and `tensor` consume arguments up to the closing `)` or
//! the end of input. `PART` is a comma-joined partition (`2,1`).
//! `L` is the tautological line `O(-1)`, so `L^m = O(-m)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{binomial, schur_dim, Mult, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BundleExpr {
    /// The tautological quotient bundle `Q` of rank `n - 1`. An ambient
    /// `n` may be pinned; normalization rejects a mismatch.
    Quotient {
        ambient: Option<usize>,
    },
    /// `L^power` with `L = O(-1)`.
    Line(i64),
    /// A constant (trivial) bundle of the given dimension.
    Const {
        dim: usize,
        label: Option<String>,
    },
    /// A bundle from the base of a projective bundle, restricted to a
    /// fiber. Behaves as a constant of the same rank on the fiber and is
    /// unwrapped again by the fiber pushforward.
    BaseRestricted(Box<BundleExpr>),
    Sum(Vec<BundleExpr>),
    Tensor(Vec<BundleExpr>),
    SymPow(u32, Box<BundleExpr>),
    WedgePow(u32, Box<BundleExpr>),
    /// A general Schur functor `Σ^λ`.
    Schur(Partition, Box<BundleExpr>),
    Det(Box<BundleExpr>),
}

impl BundleExpr {
    pub fn q() -> Self {
        BundleExpr::Quotient { ambient: None }
    }

    pub fn line(power: i64) -> Self {
        BundleExpr::Line(power)
    }

    pub fn trivial() -> Self {
        BundleExpr::Line(0)
    }

    pub fn constant(dim: usize, label: impl Into<String>) -> Self {
        BundleExpr::Const {
            dim,
            label: Some(label.into()),
        }
    }

    pub fn sum(items: impl IntoIterator<Item = BundleExpr>) -> Self {
        BundleExpr::Sum(items.into_iter().collect())
    }

    pub fn tensor(items: impl IntoIterator<Item = BundleExpr>) -> Self {
        BundleExpr::Tensor(items.into_iter().collect())
    }

    pub fn sym(j: u32, inner: BundleExpr) -> Self {
        BundleExpr::SymPow(j, Box::new(inner))
    }

    pub fn wedge(j: u32, inner: BundleExpr) -> Self {
        BundleExpr::WedgePow(j, Box::new(inner))
    }

    pub fn schur(lambda: Partition, inner: BundleExpr) -> Self {
        BundleExpr::Schur(lambda, Box::new(inner))
    }

    pub fn det(inner: BundleExpr) -> Self {
        BundleExpr::Det(Box::new(inner))
    }

    pub fn base(inner: BundleExpr) -> Self {
        BundleExpr::BaseRestricted(Box::new(inner))
    }

    /// Rank computed directly on the tree: dimensions add under `⊕`,
    /// multiply under `⊗`, binomials under `Sym`/`Λ`, hook-content under
    /// `Σ^λ`. This does not go through normalization.
    pub fn rank(&self, n: usize) -> Mult {
        match self {
            BundleExpr::Quotient { .. } => (n - 1) as Mult,
            BundleExpr::Line(_) | BundleExpr::Det(_) => 1,
            BundleExpr::Const { dim, .. } => *dim as Mult,
            BundleExpr::BaseRestricted(inner) => inner.rank(n),
            BundleExpr::Sum(items) => items.iter().map(|e| e.rank(n)).sum(),
            BundleExpr::Tensor(items) => items.iter().map(|e| e.rank(n)).product(),
            BundleExpr::SymPow(j, inner) => {
                let r = inner.rank(n);
                if r == 0 {
                    Mult::from(*j == 0)
                } else {
                    binomial(r + *j as Mult - 1, *j as Mult)
                }
            }
            BundleExpr::WedgePow(j, inner) => binomial(inner.rank(n), *j as Mult),
            BundleExpr::Schur(lambda, inner) => schur_dim(lambda, inner.rank(n) as usize),
        }
    }

    /// Whether the expression contains a leaf that varies over the current
    /// space (anything but constants and base-restricted bundles).
    pub fn is_constant(&self) -> bool {
        match self {
            BundleExpr::Quotient { .. } => false,
            BundleExpr::Line(p) => *p == 0,
            BundleExpr::Const { .. } | BundleExpr::BaseRestricted(_) => true,
            BundleExpr::Sum(items) | BundleExpr::Tensor(items) => {
                items.iter().all(BundleExpr::is_constant)
            }
            BundleExpr::SymPow(_, inner)
            | BundleExpr::WedgePow(_, inner)
            | BundleExpr::Schur(_, inner)
            | BundleExpr::Det(inner) => inner.is_constant(),
        }
    }

    /// Replaces every `BaseRestricted(x)` by `x`.
    pub fn unwrap_base(&self) -> BundleExpr {
        let map = |items: &[BundleExpr]| items.iter().map(BundleExpr::unwrap_base).collect();
        match self {
            BundleExpr::BaseRestricted(inner) => inner.unwrap_base(),
            BundleExpr::Sum(items) => BundleExpr::Sum(map(items)),
            BundleExpr::Tensor(items) => BundleExpr::Tensor(map(items)),
            BundleExpr::SymPow(j, inner) => BundleExpr::sym(*j, inner.unwrap_base()),
            BundleExpr::WedgePow(j, inner) => BundleExpr::wedge(*j, inner.unwrap_base()),
            BundleExpr::Schur(l, inner) => BundleExpr::schur(l.clone(), inner.unwrap_base()),
            BundleExpr::Det(inner) => BundleExpr::det(inner.unwrap_base()),
            leaf => leaf.clone(),
        }
    }
}

impl fmt::Display for BundleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, head: &str, items: &[BundleExpr]| {
            write!(f, "({head}")?;
            for item in items {
                write!(f, " {item}")?;
            }
            write!(f, ")")
        };
        match self {
            BundleExpr::Quotient { ambient: None } => write!(f, "Q"),
            BundleExpr::Quotient { ambient: Some(n) } => write!(f, "Q@{n}"),
            BundleExpr::Line(0) => write!(f, "O"),
            BundleExpr::Line(1) => write!(f, "L"),
            BundleExpr::Line(p) => write!(f, "L^{p}"),
            BundleExpr::Const { dim, label: None } => write!(f, "(const {dim})"),
            BundleExpr::Const {
                dim,
                label: Some(label),
            } => write!(f, "(const {dim} {label})"),
            BundleExpr::BaseRestricted(inner) => write!(f, "(base {inner})"),
            BundleExpr::Sum(items) => list(f, "sum", items),
            BundleExpr::Tensor(items) => list(f, "tensor", items),
            BundleExpr::SymPow(j, inner) => write!(f, "(sym {j} {inner})"),
            BundleExpr::WedgePow(j, inner) => write!(f, "(wedge {j} {inner})"),
            BundleExpr::Schur(l, inner) => write!(f, "(schur {l} {inner})"),
            BundleExpr::Det(inner) => write!(f, "(det {inner})"),
        }
    }
}

impl FromStr for BundleExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s);
        let mut parser = Parser { tokens, pos: 0 };
        let expr = parser.form()?;
        if parser.pos != parser.tokens.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(expr)
    }
}

fn tokenize(s: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '(' | ')' => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
                tokens.push(ch.to_string());
            }
            c if c.is_whitespace() => {
                if !cur.is_empty() {
                    tokens.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        tokens.push(cur);
    }
    tokens
}

const KEYWORDS: &[&str] = &[
    "sum", "tensor", "sym", "wedge", "schur", "det", "base", "const", "line", "Q", "L", "O",
];

struct Parser {
    tokens: Vec<String>,
    pos: usize,
}

impl Parser {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&str> {
        self.tokens.get(self.pos).map(String::as_str)
    }

    fn next(&mut self) -> Result<String> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        Ok(tok)
    }

    fn int<T: FromStr>(&mut self, what: &str) -> Result<T> {
        let tok = self.next()?;
        tok.parse()
            .map_err(|_| self.error(format!("expected {what}, found `{tok}`")))
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        if self.peek() == Some("(") {
            self.pos += 1;
            let e = self.form()?;
            match self.next()?.as_str() {
                ")" => Ok(e),
                other => Err(self.error(format!("expected `)`, found `{other}`"))),
            }
        } else {
            self.form()
        }
    }

    fn rest_of_list(&mut self) -> Result<Vec<BundleExpr>> {
        let mut items = Vec::new();
        while !matches!(self.peek(), None | Some(")")) {
            items.push(self.expr()?);
        }
        Ok(items)
    }

    fn form(&mut self) -> Result<BundleExpr> {
        let head = self.next()?;
        let e = match head.as_str() {
            "(" => {
                self.pos -= 1;
                return self.expr();
            }
            "sum" => BundleExpr::Sum(self.rest_of_list()?),
            "tensor" => BundleExpr::Tensor(self.rest_of_list()?),
            "sym" => {
                let j = self.int("exponent")?;
                BundleExpr::sym(j, self.expr()?)
            }
            "wedge" => {
                let j = self.int("exponent")?;
                BundleExpr::wedge(j, self.expr()?)
            }
            "schur" => {
                let tok = self.next()?;
                let lambda = tok.parse::<Partition>()?;
                BundleExpr::schur(lambda, self.expr()?)
            }
            "det" => BundleExpr::det(self.expr()?),
            "base" => BundleExpr::base(self.expr()?),
            "const" => {
                let dim: usize = self.int("dimension")?;
                if dim == 0 {
                    return Err(self.error("constant dimension must be positive"));
                }
                let label = match self.peek() {
                    Some(tok) if tok != "(" && tok != ")" && !is_keyword(tok) => Some(self.next()?),
                    _ => None,
                };
                BundleExpr::Const { dim, label }
            }
            "line" => BundleExpr::Line(self.int("line power")?),
            "Q" => BundleExpr::q(),
            "L" => BundleExpr::Line(1),
            "O" => BundleExpr::Line(0),
            tok => {
                if let Some(n) = tok.strip_prefix("Q@") {
                    let n: usize = n
                        .parse()
                        .map_err(|_| self.error(format!("bad ambient in `{tok}`")))?;
                    BundleExpr::Quotient { ambient: Some(n) }
                } else if let Some(p) = tok.strip_prefix("L^") {
                    BundleExpr::Line(
                        p.parse()
                            .map_err(|_| self.error(format!("bad line power in `{tok}`")))?,
                    )
                } else {
                    return Err(self.error(format!("unknown token `{tok}`")));
                }
            }
        };
        Ok(e)
    }
}

fn is_keyword(tok: &str) -> bool {
    KEYWORDS.contains(&tok) || tok.starts_with("Q@") || tok.starts_with("L^")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_example() {
        let e: BundleExpr = "sym 7 (tensor (sum (const 15 Sym2C5) Q) (const 7 Ck))"
            .parse()
            .unwrap();
        let expected = BundleExpr::sym(
            7,
            BundleExpr::tensor([
                BundleExpr::sum([BundleExpr::constant(15, "Sym2C5"), BundleExpr::q()]),
                BundleExpr::constant(7, "Ck"),
            ]),
        );
        assert_eq!(e, expected);
        assert_eq!(e.rank(5), binomial(19 * 7 + 6, 7));
    }

    #[test]
    fn parses_atoms() {
        assert_eq!("L^-3".parse::<BundleExpr>().unwrap(), BundleExpr::Line(-3));
        assert_eq!("O".parse::<BundleExpr>().unwrap(), BundleExpr::Line(0));
        assert_eq!(
            "Q@4".parse::<BundleExpr>().unwrap(),
            BundleExpr::Quotient { ambient: Some(4) }
        );
        assert_eq!(
            "(const 3)".parse::<BundleExpr>().unwrap(),
            BundleExpr::Const {
                dim: 3,
                label: None
            }
        );
        assert_eq!(
            "tensor Q (sym 2 Q) L^5".parse::<BundleExpr>().unwrap(),
            BundleExpr::tensor([
                BundleExpr::q(),
                BundleExpr::sym(2, BundleExpr::q()),
                BundleExpr::line(5)
            ])
        );
        assert_eq!(
            "schur 2,1 Q".parse::<BundleExpr>().unwrap(),
            BundleExpr::schur(Partition::from([2, 1]), BundleExpr::q())
        );
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",
            "(sym Q)",
            "(sum Q",
            "Q )",
            "const 0",
            "frob Q",
            "schur 1,2 Q",
        ] {
            assert!(
                bad.parse::<BundleExpr>().is_err(),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn rank_arithmetic() {
        let e: BundleExpr = "tensor Q (sym 2 Q) L^5".parse().unwrap();
        assert_eq!(e.rank(4), 18);
        assert_eq!(
            BundleExpr::wedge(3, BundleExpr::constant(4, "C4")).rank(2),
            4
        );
        assert_eq!(BundleExpr::det(BundleExpr::q()).rank(7), 1);
        assert_eq!(
            BundleExpr::schur(Partition::from([2, 1]), BundleExpr::q()).rank(4),
            8
        );
    }

    #[test]
    fn constancy() {
        assert!(BundleExpr::base(BundleExpr::q()).is_constant());
        assert!(!BundleExpr::sym(2, BundleExpr::q()).is_constant());
        assert!(BundleExpr::trivial().is_constant());
        assert_eq!(
            BundleExpr::sum([BundleExpr::base(BundleExpr::q()), BundleExpr::line(2)]).unwrap_base(),
            BundleExpr::sum([BundleExpr::q(), BundleExpr::line(2)])
        );
    }
}
