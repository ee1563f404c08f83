//! Input formats for ideals.
//!
//! Text format: generators separated by commas or newlines, each a product
//! of terms `x<index>` or `x<index>^<exponent>` joined by `*`. Indices are
//! 1-based. An optional `n = <count>` line fixes the number of variables;
//! otherwise the largest index used is taken. `#` starts a comment.
//!
//! ```text
//! n = 3
//! x1^2*x2, x1^2*x3^4
//! x3^5
//! ```
//!
//! JSON format: `{"n": 3, "generators": [[2,1,0], [2,0,4], [0,0,5]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum InputFormat {
    Text,
    Json,
}

/// A parsed but not yet validated ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDocument {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
    pub format: InputFormat,
}

impl IdealDocument {
    /// Validates into a minimal ideal in which every variable occurs.
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.len() != self.n {
                    return Err(Error::Dimension {
                        expected: self.n,
                        found: g.len(),
                    });
                }
                Monomial::new(g.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(self.n, gens)
    }
}

/// Parses an ideal document. `vars` overrides any variable count given in
/// the input.
pub fn parse_ideal(text: &str, format: InputFormat, vars: Option<usize>) -> Result<IdealDocument> {
    match format {
        InputFormat::Text => parse_text(text, vars),
        InputFormat::Json => parse_json(text, vars),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonIdeal {
    n: usize,
    generators: Vec<Vec<u32>>,
}

fn parse_json(text: &str, vars: Option<usize>) -> Result<IdealDocument> {
    let doc: JsonIdeal = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let n = vars.unwrap_or(doc.n);
    Ok(IdealDocument {
        n,
        generators: doc.generators,
        format: InputFormat::Json,
    })
}

/// A term `x_i^e` with the source position of its `x`.
struct Term {
    index: usize,
    exponent: u32,
    line: usize,
    column: usize,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    /// Skips spaces, tabs and comments, but not newlines.
    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            match c {
                ' ' | '\t' | '\r' => {
                    self.bump();
                }
                '#' => {
                    while !matches!(self.peek(), None | Some('\n')) {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        self.skip_blank();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.error(format!("expected {what}")));
        }
        digits
            .parse()
            .map_err(|_| self.error(format!("{what} too large")))
    }
}

fn parse_text(text: &str, vars: Option<usize>) -> Result<IdealDocument> {
    let mut cur = Cursor::new(text);
    let mut declared: Option<usize> = None;
    let mut monomials: Vec<Vec<Term>> = Vec::new();
    loop {
        cur.skip_blank();
        match cur.peek() {
            None => break,
            Some('\n') | Some(',') => {
                cur.bump();
            }
            Some('n') => {
                if declared.is_some() {
                    return Err(cur.error("variable count declared twice"));
                }
                cur.bump();
                cur.skip_blank();
                if cur.bump() != Some('=') {
                    return Err(cur.error("expected '=' after 'n'"));
                }
                let n = cur.number("variable count")?;
                declared = Some(usize::try_from(n).map_err(|_| cur.error("variable count too large"))?);
            }
            Some('x') => {
                monomials.push(parse_monomial(&mut cur)?);
                cur.skip_blank();
                if !matches!(cur.peek(), None | Some('\n') | Some(',')) {
                    return Err(cur.error("expected '*', ',' or end of line after a term"));
                }
            }
            Some(c) => return Err(cur.error(format!("unexpected character '{c}'"))),
        }
    }

    let used = monomials.iter().flatten().map(|t| t.index).max().unwrap_or(0);
    let n = vars.or(declared).unwrap_or(used);
    let mut generators = Vec::with_capacity(monomials.len());
    for terms in monomials {
        let mut exps = vec![0u32; n];
        for t in terms {
            if t.index > n {
                return Err(Error::Parse {
                    line: t.line,
                    column: t.column,
                    message: format!("variable index {} out of range 1..={n}", t.index),
                });
            }
            exps[t.index - 1] = t.exponent;
        }
        generators.push(exps);
    }
    Ok(IdealDocument {
        n,
        generators,
        format: InputFormat::Text,
    })
}

fn parse_monomial(cur: &mut Cursor<'_>) -> Result<Vec<Term>> {
    let mut terms: Vec<Term> = Vec::new();
    loop {
        cur.skip_blank();
        let (line, column) = (cur.line, cur.column);
        if cur.bump() != Some('x') {
            return Err(Error::Parse {
                line,
                column,
                message: "expected a term 'x<index>'".into(),
            });
        }
        let index = cur.number("variable index")?;
        if index == 0 {
            return Err(Error::Parse {
                line,
                column,
                message: "variable indices start at 1".into(),
            });
        }
        let index = usize::try_from(index).map_err(|_| cur.error("variable index too large"))?;
        cur.skip_blank();
        let exponent = if cur.peek() == Some('^') {
            cur.bump();
            let e = cur.number("exponent")?;
            if e == 0 {
                return Err(Error::Parse {
                    line,
                    column,
                    message: "exponent 0 inside a term".into(),
                });
            }
            u32::try_from(e).map_err(|_| cur.error("exponent too large"))?
        } else {
            1
        };
        if terms.iter().any(|t| t.index == index) {
            return Err(Error::Parse {
                line,
                column,
                message: format!("variable x{index} repeated within a monomial"),
            });
        }
        terms.push(Term {
            index,
            exponent,
            line,
            column,
        });
        cur.skip_blank();
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            return Ok(terms);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mono;

    fn parse_err(text: &str) -> (usize, usize, String) {
        match parse_ideal(text, InputFormat::Text, None).unwrap_err() {
            Error::Parse {
                line,
                column,
                message,
            } => (line, column, message),
            e => panic!("expected parse error, got {e:?}"),
        }
    }

    #[test]
    fn text_term() {
        let doc = parse_ideal("x1^2*x2", InputFormat::Text, Some(3)).unwrap();
        assert_eq!(doc.generators, vec![vec![2, 1, 0]]);
        assert_eq!(doc.n, 3);
    }

    #[test]
    fn text_document() {
        let doc = parse_ideal(
            "# worked example\nn = 3\nx1^2 * x2, x1^2*x3^4\n  x3 ^ 5\n",
            InputFormat::Text,
            None,
        )
        .unwrap();
        let ideal = doc.to_ideal().unwrap();
        assert_eq!(
            ideal,
            MonomialIdeal::new(3, vec![mono![2, 1, 0], mono![2, 0, 4], mono![0, 0, 5]]).unwrap()
        );
    }

    #[test]
    fn inferred_variable_count() {
        let doc = parse_ideal("x1*x3", InputFormat::Text, None).unwrap();
        assert_eq!(doc.n, 3);
        assert_eq!(doc.to_ideal().unwrap_err(), Error::MissingVariable(2));
    }

    #[test]
    fn json_document() {
        let doc = parse_ideal(r#"{"n":1,"generators":[[2]]}"#, InputFormat::Json, None).unwrap();
        assert_eq!(doc.to_ideal().unwrap(), MonomialIdeal::new(1, vec![mono![2]]).unwrap());
        let doc = parse_ideal(r#"{"n":2,"generators":[[2]]}"#, InputFormat::Json, None).unwrap();
        assert!(matches!(doc.to_ideal(), Err(Error::Dimension { .. })));
        assert!(matches!(
            parse_ideal(r#"{"n":2,"generators":[[2,-1]]}"#, InputFormat::Json, None),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn zero_exponent_rejected() {
        let (line, column, message) = parse_err("x1^0");
        assert_eq!((line, column), (1, 1));
        assert!(message.contains("exponent 0"));
    }

    #[test]
    fn positioned_errors() {
        assert_eq!(parse_err("x1*x1").0, 1);
        assert_eq!(parse_err("x1*x1").1, 4);
        assert!(parse_err("x1*x1").2.contains("repeated"));
        assert_eq!(parse_err("x1\nx2*y3").1, 4);
        assert_eq!(parse_err("x1\nx2*y3").0, 2);
        assert!(parse_err("x0").2.contains("start at 1"));
        assert!(parse_err("x1^").2.contains("expected exponent"));
        let (_, _, message) = match parse_ideal("n=1\nx2", InputFormat::Text, None).unwrap_err() {
            Error::Parse {
                line,
                column,
                message,
            } => (line, column, message),
            e => panic!("{e:?}"),
        };
        assert!(message.contains("out of range"));
    }

    #[test]
    fn exponent_range_is_checked_on_validation() {
        let doc = parse_ideal("x1^1000001", InputFormat::Text, None).unwrap();
        assert!(matches!(doc.to_ideal(), Err(Error::ExponentRange { .. })));
        assert!(parse_ideal("x1^99999999999", InputFormat::Text, None).is_err());
    }

    #[test]
    fn empty_input_is_zero_ideal() {
        let doc = parse_ideal("# nothing\n", InputFormat::Text, Some(2)).unwrap();
        assert_eq!(doc.to_ideal().unwrap_err(), Error::ZeroIdeal);
    }
}
