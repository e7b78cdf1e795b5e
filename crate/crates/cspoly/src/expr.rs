//! The polytope expression language of the CLI.
//!
//! Grammar: `cube(4)`, `cross(3)`, `prod(A,B)`, `sum(A,B)`, `pyr(A)`,
//! `bip(A)`, `prism(A)`, `tprism(A)`, `hyper(3,6)`,
//! `hansen(@graphfile | path(4) | g5())`, and
//! `slab(A; 1 1 1 1; -2; 2)` — semicolons inside `slab` separate the
//! normal vector and the two bounds, so rationals can keep their plain
//! `p/q` syntax. Printing is canonical and parsing the printed form is the
//! identity.

use std::fmt;

use crate::constructors::{
    self, central_hypersimplex, cube, crosspolytope, hypersimplex, Graph,
};
use crate::exact::{parse_rational, RatVector, Rational};
use crate::polytope::VPolytope;
use crate::{Error, Result};

/// Abstract syntax of the constructor grammar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeExpr {
    Cube(usize),
    Cross(usize),
    Prod(Box<PolytopeExpr>, Box<PolytopeExpr>),
    Sum(Box<PolytopeExpr>, Box<PolytopeExpr>),
    Pyr(Box<PolytopeExpr>),
    Bip(Box<PolytopeExpr>),
    Prism(Box<PolytopeExpr>),
    TPrism(Box<PolytopeExpr>),
    Hyper(usize, usize),
    Hansen(HansenArg),
    Slab {
        base: Box<PolytopeExpr>,
        normal: Vec<Rational>,
        lo: Rational,
        hi: Rational,
    },
}

/// Argument forms of `hansen(...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HansenArg {
    File(String),
    Path(usize),
    G5,
}

impl fmt::Display for PolytopeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeExpr::Cube(d) => write!(f, "cube({d})"),
            PolytopeExpr::Cross(d) => write!(f, "cross({d})"),
            PolytopeExpr::Prod(a, b) => write!(f, "prod({a},{b})"),
            PolytopeExpr::Sum(a, b) => write!(f, "sum({a},{b})"),
            PolytopeExpr::Pyr(a) => write!(f, "pyr({a})"),
            PolytopeExpr::Bip(a) => write!(f, "bip({a})"),
            PolytopeExpr::Prism(a) => write!(f, "prism({a})"),
            PolytopeExpr::TPrism(a) => write!(f, "tprism({a})"),
            PolytopeExpr::Hyper(k, d) => write!(f, "hyper({k},{d})"),
            PolytopeExpr::Hansen(HansenArg::File(path)) => write!(f, "hansen(@{path})"),
            PolytopeExpr::Hansen(HansenArg::Path(n)) => write!(f, "hansen(path({n}))"),
            PolytopeExpr::Hansen(HansenArg::G5) => write!(f, "hansen(g5())"),
            PolytopeExpr::Slab {
                base,
                normal,
                lo,
                hi,
            } => {
                let coords: Vec<String> = normal.iter().map(|r| r.to_string()).collect();
                write!(f, "slab({base}; {}; {lo}; {hi})", coords.join(" "))
            }
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..]
            .starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected identifier"));
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("expected a non-negative integer"))
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        while self.src[self.pos..]
            .starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+' || c == '/')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a rational"));
        }
        parse_rational(&self.src[start..self.pos]).map_err(|e| match e {
            Error::Parse { msg, .. } => Error::Parse {
                pos: start,
                msg,
            },
            other => other,
        })
    }

    fn expr(&mut self) -> Result<PolytopeExpr> {
        let name = self.ident()?;
        self.eat('(')?;
        let node = match name.as_str() {
            "cube" => PolytopeExpr::Cube(self.number()?),
            "cross" => PolytopeExpr::Cross(self.number()?),
            "prod" | "sum" => {
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                if name == "prod" {
                    PolytopeExpr::Prod(Box::new(a), Box::new(b))
                } else {
                    PolytopeExpr::Sum(Box::new(a), Box::new(b))
                }
            }
            "pyr" | "bip" | "prism" | "tprism" => {
                let a = Box::new(self.expr()?);
                match name.as_str() {
                    "pyr" => PolytopeExpr::Pyr(a),
                    "bip" => PolytopeExpr::Bip(a),
                    "prism" => PolytopeExpr::Prism(a),
                    _ => PolytopeExpr::TPrism(a),
                }
            }
            "hyper" => {
                let k = self.number()?;
                self.eat(',')?;
                let d = self.number()?;
                PolytopeExpr::Hyper(k, d)
            }
            "hansen" => PolytopeExpr::Hansen(self.hansen_arg()?),
            "slab" => {
                let base = Box::new(self.expr()?);
                self.eat(';')?;
                let mut normal = Vec::new();
                loop {
                    normal.push(self.rational()?);
                    if self.peek() == Some(';') {
                        break;
                    }
                }
                self.eat(';')?;
                let lo = self.rational()?;
                self.eat(';')?;
                let hi = self.rational()?;
                PolytopeExpr::Slab {
                    base,
                    normal,
                    lo,
                    hi,
                }
            }
            other => return Err(self.error(format!("unknown constructor '{other}'"))),
        };
        self.eat(')')?;
        Ok(node)
    }

    fn hansen_arg(&mut self) -> Result<HansenArg> {
        match self.peek() {
            Some('@') => {
                self.eat('@')?;
                let start = self.pos;
                while let Some(c) = self.src[self.pos..].chars().next() {
                    if c == ')' || c.is_whitespace() {
                        break;
                    }
                    self.pos += c.len_utf8();
                }
                if start == self.pos {
                    return Err(self.error("expected a file path after '@'"));
                }
                Ok(HansenArg::File(self.src[start..self.pos].to_string()))
            }
            _ => {
                let name = self.ident()?;
                self.eat('(')?;
                let arg = match name.as_str() {
                    "path" => HansenArg::Path(self.number()?),
                    "g5" => HansenArg::G5,
                    other => {
                        return Err(self.error(format!(
                            "unknown hansen argument '{other}' (expected @file, path(n) or g5())"
                        )))
                    }
                };
                self.eat(')')?;
                Ok(arg)
            }
        }
    }
}

/// Parse an expression; the whole input must be consumed.
pub fn parse(src: &str) -> Result<PolytopeExpr> {
    let mut p = Parser::new(src);
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: "trailing input after expression".into(),
        });
    }
    Ok(expr)
}

/// Build the polytope an expression denotes. `hyper(k, 2k)` uses the
/// full-dimensional centrally symmetric realization; other parameters use
/// the 0/1 realization in the coordinate hyperplane.
pub fn build(expr: &PolytopeExpr) -> Result<VPolytope> {
    match expr {
        PolytopeExpr::Cube(d) => cube(*d),
        PolytopeExpr::Cross(d) => crosspolytope(*d),
        PolytopeExpr::Prod(a, b) => constructors::product(&build(a)?, &build(b)?),
        PolytopeExpr::Sum(a, b) => constructors::direct_sum(&build(a)?, &build(b)?),
        PolytopeExpr::Pyr(a) => constructors::pyramid(&build(a)?),
        PolytopeExpr::Bip(a) => constructors::bipyramid(&build(a)?),
        PolytopeExpr::Prism(a) => constructors::prism(&build(a)?),
        PolytopeExpr::TPrism(a) => {
            let q = build(a)?;
            let q = crate::io::full_dimensional_copy(&q)?;
            constructors::twisted_prism(&q)
        }
        PolytopeExpr::Hyper(k, d) => {
            if *d == 2 * *k {
                central_hypersimplex(*k)
            } else {
                hypersimplex(*k, *d)
            }
        }
        PolytopeExpr::Hansen(arg) => {
            let graph = match arg {
                HansenArg::File(path) => crate::io::read_graph_file(path)?,
                HansenArg::Path(n) => Graph::path(*n),
                HansenArg::G5 => Graph::g5(),
            };
            Ok(constructors::hansen(&graph)?.polytope)
        }
        PolytopeExpr::Slab {
            base,
            normal,
            lo,
            hi,
        } => {
            let p = build(base)?;
            let a = RatVector::new(normal.clone());
            Ok(constructors::slab(&p, &a, lo, hi)?.polytope)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};

    #[test]
    fn parse_and_print_roundtrip() {
        let cases = [
            "cube(4)",
            "cross(3)",
            "prod(cube(2),cross(3))",
            "sum(cube(3),cube(1))",
            "pyr(cube(2))",
            "bip(tprism(cube(2)))",
            "prism(cross(4))",
            "tprism(pyr(cube(2)))",
            "hyper(3,6)",
            "hansen(path(4))",
            "hansen(g5())",
            "hansen(@graphs/g.txt)",
            "slab(cube(4); 1 1 1 1; -2; 2)",
        ];
        for src in cases {
            let e = parse(src).unwrap();
            let printed = e.to_string();
            assert_eq!(parse(&printed).unwrap(), e, "roundtrip of {src}");
            // Printing is idempotent.
            assert_eq!(parse(&printed).unwrap().to_string(), printed);
        }
    }

    #[test]
    fn whitespace_is_tolerated() {
        let e = parse(" slab( cube(4) ; 1 1/1 1 1 ; -2 ; 2 ) ").unwrap();
        match &e {
            PolytopeExpr::Slab {
                normal, lo, hi, ..
            } => {
                assert_eq!(normal.len(), 4);
                assert_eq!(normal[1], rat(1, 1));
                assert_eq!(*lo, rat_int(-2));
                assert_eq!(*hi, rat_int(2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        for bad in ["cube(", "prod(cube(2)", "frobnicate(3)", "cube(3) junk", "hansen(q9())"] {
            match parse(bad) {
                Err(Error::Parse { .. }) => {}
                other => panic!("expected parse error for {bad:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn build_basic_expressions() {
        let c4 = build(&parse("cube(4)").unwrap()).unwrap();
        assert_eq!(c4.n_vertices(), 16);
        let p4 = build(&parse("slab(cube(4); 1 1 1 1; -2; 2)").unwrap()).unwrap();
        assert_eq!(p4.n_vertices(), 14);
        let hs3 = build(&parse("hyper(3,6)").unwrap()).unwrap();
        assert_eq!(hs3.n_vertices(), 20);
        assert_eq!(hs3.intrinsic_dim(), 5);
        assert_eq!(hs3.ambient_dim(), 5, "hyper(k,2k) takes the cs realization");
        let emb = build(&parse("hyper(2,5)").unwrap()).unwrap();
        assert_eq!(emb.ambient_dim(), 5);
        assert_eq!(emb.intrinsic_dim(), 4);
        let hg4 = build(&parse("hansen(path(4))").unwrap()).unwrap();
        assert_eq!(hg4.n_vertices(), 16);
    }

    #[test]
    fn tprism_accepts_lower_dimensional_bases() {
        // hyper(1,4) is a simplex in a hyperplane; tprism projects it to
        // full dimension first.
        let t = build(&parse("tprism(hyper(1,4))").unwrap()).unwrap();
        assert_eq!(t.n_vertices(), 8);
        assert_eq!(t.intrinsic_dim(), 4);
    }
}
