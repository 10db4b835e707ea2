//! Gate expressions: words in `Z X H E I P(a,b) W(p,q) D[...]` with powers
//! and parentheses.
//!
//! `D[c1, c2, ...]` is the diagonal `D[ω^{φ(z)}]` with `φ(z) = Σ c_j z^j`;
//! `D[m; c1, ...]` takes the coefficients modulo `d^m`. A negative power
//! uses the adjoint. Juxtaposition or `*` multiplies, leftmost outermost.

use qudit_hierarchy::arith::{Qudit, ScaledMatrix};
use qudit_hierarchy::clifford::{e_gate, hadamard, permutation_gate};
use qudit_hierarchy::diagonal::{build_diagonal, RankKPolynomial};
use qudit_hierarchy::pauli::{clock, shift, weyl, PhasePoint};
use qudit_hierarchy::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Z,
    X,
    H,
    E,
    I,
    P(i64, i64),
    W(i64, i64),
    D { m: u32, coeffs: Vec<i64> },
    Pow(Box<Expr>, i64),
    Product(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(char),
    Num(i64),
    Sym(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || (c == '-' && cs.get(i + 1).is_some_and(|n| n.is_ascii_digit())) {
            let start = i;
            i += 1;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = cs[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| Error::Parse(format!("bad number {text}")))?));
        } else if "ZXHEIPWD".contains(c) {
            out.push(Tok::Name(c));
            i += 1;
        } else if "()[],;^*".contains(c) {
            out.push(Tok::Sym(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} at {i}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.next() {
            Some(Tok::Sym(s)) if s == c => Ok(()),
            other => Err(Error::Parse(format!("expected {c:?}, found {other:?}"))),
        }
    }

    fn number(&mut self) -> Result<i64> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(n),
            other => Err(Error::Parse(format!("expected a number, found {other:?}"))),
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                None | Some(Tok::Sym(')')) => break,
                Some(Tok::Sym('*')) => {
                    self.pos += 1;
                }
                _ => factors.push(self.power()?),
            }
        }
        match factors.len() {
            0 => Err(Error::Parse("empty product".into())),
            1 => Ok(factors.pop().expect("one factor")),
            _ => Ok(Expr::Product(factors)),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Sym('^')) {
            self.pos += 1;
            let n = self.number()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn pair(&mut self) -> Result<(i64, i64)> {
        self.expect('(')?;
        let a = self.number()?;
        self.expect(',')?;
        let b = self.number()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Name('Z')) => Ok(Expr::Z),
            Some(Tok::Name('X')) => Ok(Expr::X),
            Some(Tok::Name('H')) => Ok(Expr::H),
            Some(Tok::Name('E')) => Ok(Expr::E),
            Some(Tok::Name('I')) => Ok(Expr::I),
            Some(Tok::Name('P')) => self.pair().map(|(a, b)| Expr::P(a, b)),
            Some(Tok::Name('W')) => self.pair().map(|(p, q)| Expr::W(p, q)),
            Some(Tok::Name('D')) => self.diagonal(),
            Some(Tok::Sym('(')) => {
                let e = self.product()?;
                self.expect(')')?;
                Ok(e)
            }
            other => Err(Error::Parse(format!("expected a gate, found {other:?}"))),
        }
    }

    fn diagonal(&mut self) -> Result<Expr> {
        self.expect('[')?;
        let mut nums = vec![self.number()?];
        let mut m = 1;
        if self.peek() == Some(&Tok::Sym(';')) {
            self.pos += 1;
            m = u32::try_from(nums[0]).ok().filter(|&m| m >= 1).ok_or_else(|| Error::Parse("precision must be positive".into()))?;
            nums = vec![self.number()?];
        }
        while self.peek() == Some(&Tok::Sym(',')) {
            self.pos += 1;
            nums.push(self.number()?);
        }
        self.expect(']')?;
        Ok(Expr::D { m, coeffs: nums })
    }
}

pub fn parse(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: tokenize(s)?, pos: 0 };
    let e = p.product()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

impl Expr {
    /// Largest diagonal precision used.
    pub fn precision(&self) -> u32 {
        match self {
            Expr::D { m, .. } => *m,
            Expr::Pow(b, _) => b.precision(),
            Expr::Product(fs) => fs.iter().map(Expr::precision).max().unwrap_or(1),
            _ => 1,
        }
    }

    pub fn eval(&self, qd: &Qudit) -> Result<ScaledMatrix> {
        let d = qd.d() as i64;
        Ok(match self {
            Expr::Z => clock(qd),
            Expr::X => shift(qd),
            Expr::H => hadamard(qd),
            Expr::E => e_gate(qd),
            Expr::I => ScaledMatrix::identity(qd, d as usize),
            Expr::P(a, b) => {
                let a = a.rem_euclid(d);
                if a == 0 {
                    return Err(Error::Parse("P(a,b) needs a ≠ 0 mod d".into()));
                }
                permutation_gate(qd, a as u32, b.rem_euclid(d) as u32)
            }
            Expr::W(p, q) => weyl(qd, PhasePoint::new(*p, *q, qd.d())),
            Expr::D { m, coeffs } => {
                if coeffs.len() > (d - 1) as usize {
                    return Err(Error::Parse(format!("D[...] takes at most {} coefficients", d - 1)));
                }
                let n = d.pow(*m);
                let mut c: Vec<u64> = coeffs.iter().map(|x| x.rem_euclid(n) as u64).collect();
                c.resize((d - 1) as usize, 0);
                build_diagonal(qd, &RankKPolynomial::new(qd.d(), *m, c)?)?.matrix
            }
            Expr::Pow(b, n) => b.eval(qd)?.pow_signed(*n),
            Expr::Product(fs) => {
                let mut acc = ScaledMatrix::identity(qd, d as usize);
                for f in fs {
                    acc = acc.try_mul(&f.eval(qd)?)?;
                }
                acc
            }
        })
    }
}
