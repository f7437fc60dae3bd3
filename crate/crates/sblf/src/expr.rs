//! Text expressions for twist words and curves.
//!
//! Twist-word expressions denote mapping classes in travel order:
//!
//! ```text
//! class_expr ::= { class_term }
//! class_term ::= class_atom [ '^' int ]
//! class_atom ::= name | '(' class_expr ')'
//! ```
//!
//! Terms may be separated by whitespace, `*` or `·`. Valid names are
//! the chain-twist names of the table in use, plus `xi` and `iota2` at
//! genus 2. Curve expressions name a curve directly, give a literal
//! cyclic word, or push a curve through a mapping class:
//!
//! ```text
//! curve_expr ::= name | '[' int { ',' int } ']'
//!              | '(' class_expr ')' '(' curve_expr ')'
//! ```
//!
//! `(t4^-1)(c5)` is the image of `c5` under the class `t4^-1`. The
//! printers in this module emit exactly this grammar, and printing
//! then parsing is the identity on token lists.

use crate::error::{Error, Result};
use crate::mcg::{conjugated_twist, MappingClass, TwistWord};
use crate::surface::{ChainTwistTable, Curve};
use crate::word::Word;

/// A parsed curve expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveExpr {
    /// A named table curve.
    Named(String),
    /// A literal cyclic word in the surface generators.
    Literal(Vec<i32>),
    /// The image of a curve under a mapping class.
    Image(TwistWord, Box<CurveExpr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Caret,
    Int(i32),
    Name(String),
}

impl std::fmt::Display for Tok {
    /// Renders the token as the user typed it, for error messages.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Int(v) => write!(f, "`{v}`"),
            Tok::Name(n) => write!(f, "`{n}`"),
        }
    }
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>> {
    let mut toks = Vec::new();
    let chars: Vec<(usize, char)> = input.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (at, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '*' | '·' => i += 1,
            '(' => {
                toks.push((at, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((at, Tok::RParen));
                i += 1;
            }
            '[' => {
                toks.push((at, Tok::LBracket));
                i += 1;
            }
            ']' => {
                toks.push((at, Tok::RBracket));
                i += 1;
            }
            ',' => {
                toks.push((at, Tok::Comma));
                i += 1;
            }
            '^' => {
                toks.push((at, Tok::Caret));
                i += 1;
            }
            '-' | '0'..='9' => {
                let start = i;
                let mut j = i;
                if chars[j].1 == '-' {
                    j += 1;
                }
                let digits_start = j;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                if j == digits_start {
                    return Err(Error::Parse {
                        position: at,
                        message: "`-` must be followed by digits".to_string(),
                    });
                }
                let text: String = chars[start..j].iter().map(|(_, ch)| ch).collect();
                let value = text.parse::<i32>().map_err(|_| Error::Parse {
                    position: at,
                    message: format!("integer `{text}` out of range"),
                })?;
                toks.push((at, Tok::Int(value)));
                i = j;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_alphanumeric() {
                    j += 1;
                }
                let text: String = chars[start..j].iter().map(|(_, ch)| ch).collect();
                toks.push((at, Tok::Name(text)));
                i = j;
            }
            other => {
                return Err(Error::Parse {
                    position: at,
                    message: format!("unexpected character `{other}`"),
                });
            }
        }
    }
    Ok(toks)
}

impl Lexer {
    fn new(input: &str) -> Result<Lexer> {
        Ok(Lexer { toks: lex(input)?, pos: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_pos(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or_else(|| self.toks.last().map(|(p, _)| p + 1).unwrap_or(0))
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        match self.next() {
            Some((_, t)) if &t == want => Ok(()),
            Some((p, t)) => Err(Error::Parse {
                position: p,
                message: format!("expected {what}, found {t}"),
            }),
            None => Err(Error::Parse {
                position: self.peek_pos(),
                message: format!("expected {what}, found end of input"),
            }),
        }
    }
}

fn known_class_name(table: &ChainTwistTable, name: &str) -> bool {
    table.get(name).is_ok()
        || (table.model().genus() == 2 && matches!(name, "xi" | "iota2"))
}

/// Repeat (or invert and repeat) a flattened word.
fn flatten(inner: TwistWord, e: i32) -> TwistWord {
    let base = if e < 0 {
        crate::mcg::invert_twist_word(&inner)
    } else {
        inner
    };
    let mut out = Vec::new();
    for _ in 0..e.unsigned_abs() {
        out.extend(base.iter().cloned());
    }
    out
}

fn parse_class_tokens(lx: &mut Lexer, table: &ChainTwistTable) -> Result<TwistWord> {
    let mut word: TwistWord = Vec::new();
    loop {
        match lx.peek() {
            Some(Tok::Name(_)) => {
                let (pos, tok) = lx.next().expect("peeked");
                let name = match tok {
                    Tok::Name(n) => n,
                    _ => unreachable!(),
                };
                if !known_class_name(table, &name) {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unknown twist name `{name}`"),
                    });
                }
                let e = parse_exponent(lx)?;
                word.push((name, e));
            }
            Some(Tok::LParen) => {
                lx.next();
                let inner = parse_class_tokens(lx, table)?;
                lx.expect(&Tok::RParen, "`)`")?;
                let e = parse_exponent(lx)?;
                word.extend(flatten(inner, e));
            }
            _ => break,
        }
    }
    Ok(word)
}

fn parse_exponent(lx: &mut Lexer) -> Result<i32> {
    if lx.peek() == Some(&Tok::Caret) {
        lx.next();
        match lx.next() {
            Some((_, Tok::Int(e))) => Ok(e),
            Some((p, t)) => Err(Error::Parse {
                position: p,
                message: format!("expected integer exponent, found {t}"),
            }),
            None => Err(Error::Parse {
                position: lx.peek_pos(),
                message: "expected integer exponent, found end of input".to_string(),
            }),
        }
    } else {
        Ok(1)
    }
}

/// Parse a twist-word expression against a table's alphabet.
pub fn parse_class_expr(table: &ChainTwistTable, input: &str) -> Result<TwistWord> {
    let mut lx = Lexer::new(input)?;
    let word = parse_class_tokens(&mut lx, table)?;
    if let Some((p, t)) = lx.next() {
        return Err(Error::Parse {
            position: p,
            message: format!("unexpected {t} after expression"),
        });
    }
    Ok(word)
}

fn parse_curve_tokens(lx: &mut Lexer, table: &ChainTwistTable) -> Result<CurveExpr> {
    match lx.peek() {
        Some(Tok::Name(_)) => {
            let (pos, tok) = lx.next().expect("peeked");
            let name = match tok {
                Tok::Name(n) => n,
                _ => unreachable!(),
            };
            if table.curve(&name).is_err() {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("unknown curve name `{name}`"),
                });
            }
            Ok(CurveExpr::Named(name))
        }
        Some(Tok::LBracket) => {
            lx.next();
            let mut letters = Vec::new();
            if lx.peek() == Some(&Tok::RBracket) {
                lx.next();
                return Ok(CurveExpr::Literal(letters));
            }
            loop {
                match lx.next() {
                    Some((_, Tok::Int(v))) => letters.push(v),
                    Some((p, t)) => {
                        return Err(Error::Parse {
                            position: p,
                            message: format!("expected letter, found {t}"),
                        })
                    }
                    None => {
                        return Err(Error::Parse {
                            position: lx.peek_pos(),
                            message: "unterminated literal curve".to_string(),
                        })
                    }
                }
                match lx.next() {
                    Some((_, Tok::Comma)) => continue,
                    Some((_, Tok::RBracket)) => break,
                    Some((p, t)) => {
                        return Err(Error::Parse {
                            position: p,
                            message: format!("expected `,` or `]`, found {t}"),
                        })
                    }
                    None => {
                        return Err(Error::Parse {
                            position: lx.peek_pos(),
                            message: "unterminated literal curve".to_string(),
                        })
                    }
                }
            }
            Ok(CurveExpr::Literal(letters))
        }
        Some(Tok::LParen) => {
            lx.next();
            let word = parse_class_tokens(lx, table)?;
            lx.expect(&Tok::RParen, "`)`")?;
            lx.expect(&Tok::LParen, "`(` introducing the curve")?;
            let inner = parse_curve_tokens(lx, table)?;
            lx.expect(&Tok::RParen, "`)`")?;
            Ok(CurveExpr::Image(word, Box::new(inner)))
        }
        Some(_) => {
            let (p, t) = lx.next().expect("peeked");
            Err(Error::Parse {
                position: p,
                message: format!("expected a curve expression, found {t}"),
            })
        }
        None => Err(Error::Parse {
            position: lx.peek_pos(),
            message: "expected a curve expression, found end of input".to_string(),
        }),
    }
}

/// Parse a curve expression against a table's alphabet.
pub fn parse_curve_expr(table: &ChainTwistTable, input: &str) -> Result<CurveExpr> {
    let mut lx = Lexer::new(input)?;
    let expr = parse_curve_tokens(&mut lx, table)?;
    if let Some((p, t)) = lx.next() {
        return Err(Error::Parse {
            position: p,
            message: format!("unexpected {t} after expression"),
        });
    }
    Ok(expr)
}

/// Print a twist word in the grammar this module parses.
pub fn print_class_expr(word: &[(String, i32)]) -> String {
    let mut out = String::new();
    for (name, e) in word {
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(name);
        if *e != 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

/// Print a curve expression in the grammar this module parses.
pub fn print_curve_expr(expr: &CurveExpr) -> String {
    match expr {
        CurveExpr::Named(n) => n.clone(),
        CurveExpr::Literal(letters) => {
            let body: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
            format!("[{}]", body.join(","))
        }
        CurveExpr::Image(word, inner) => {
            format!("({})({})", print_class_expr(word), print_curve_expr(inner))
        }
    }
}

/// Evaluate a curve expression to the curve it denotes. Literal
/// curves are taken at their word; they carry the format's implicit
/// claim of being embedded.
pub fn eval_curve_expr(table: &ChainTwistTable, expr: &CurveExpr) -> Result<Curve> {
    match expr {
        CurveExpr::Named(n) => Ok(table.curve(n)?.clone()),
        CurveExpr::Literal(letters) => {
            let w = Word::reduce(table.model().rank(), letters)?;
            Ok(Curve::from_word(&w, true, None))
        }
        CurveExpr::Image(word, inner) => {
            let class = MappingClass::from_word(table, word)?;
            class.apply_to_curve(&eval_curve_expr(table, inner)?)
        }
    }
}

/// Evaluate a curve expression to the twist about that curve. Only
/// expressions rooted in a named table curve determine a twist; a
/// literal cyclic word does not.
pub fn twist_from_curve_expr(
    table: &ChainTwistTable,
    expr: &CurveExpr,
) -> Result<(Curve, MappingClass)> {
    fn collect(expr: &CurveExpr) -> Result<(TwistWord, &str)> {
        match expr {
            CurveExpr::Named(n) => Ok((Vec::new(), n)),
            CurveExpr::Literal(_) => Err(Error::UnknownCurve(
                "a literal cyclic word names no table twist".to_string(),
            )),
            CurveExpr::Image(word, inner) => {
                let (mut w, name) = collect(inner)?;
                w.extend(word.iter().cloned());
                Ok((w, name))
            }
        }
    }
    let (conj_word, curve_name) = collect(expr)?;
    let base_twist = table.entry_for_curve(curve_name)?.name().to_string();
    let conjugator = MappingClass::from_word(table, &conj_word)?;
    conjugated_twist(table, &base_twist, &conjugator)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{chain_twists, standard_model};

    fn genus2() -> ChainTwistTable {
        chain_twists(&standard_model(2).unwrap()).unwrap()
    }

    fn w(tokens: &[(&str, i32)]) -> TwistWord {
        tokens.iter().map(|(n, e)| (n.to_string(), *e)).collect()
    }

    #[test]
    fn class_expressions_parse() {
        let t = genus2();
        assert_eq!(
            parse_class_expr(&t, "t4 t5 t4^-1").unwrap(),
            w(&[("t4", 1), ("t5", 1), ("t4", -1)])
        );
        assert_eq!(
            parse_class_expr(&t, "(t4 t5)^3").unwrap(),
            w(&[("t4", 1), ("t5", 1), ("t4", 1), ("t5", 1), ("t4", 1), ("t5", 1)])
        );
        assert_eq!(
            parse_class_expr(&t, "(t4 t5)^-1").unwrap(),
            w(&[("t5", -1), ("t4", -1)])
        );
        assert_eq!(parse_class_expr(&t, "t2 * t3 · t4").unwrap(), w(&[("t2", 1), ("t3", 1), ("t4", 1)]));
        assert_eq!(parse_class_expr(&t, "").unwrap(), w(&[]));
        assert_eq!(parse_class_expr(&t, "xi iota2").unwrap(), w(&[("xi", 1), ("iota2", 1)]));
    }

    #[test]
    fn unknown_names_are_rejected_with_a_position() {
        let t = genus2();
        match parse_class_expr(&t, "t4 t6").unwrap_err() {
            Error::Parse { position, message } => {
                assert_eq!(position, 3);
                assert!(message.contains("t6"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn malformed_expressions_are_rejected() {
        let t = genus2();
        assert!(parse_class_expr(&t, "(t4").is_err());
        assert!(parse_class_expr(&t, "t4^").is_err());
        assert!(parse_class_expr(&t, "t4 -").is_err());
        assert!(parse_class_expr(&t, "t4)").is_err());
        assert!(parse_curve_expr(&t, "(t4)(").is_err());
        assert!(parse_curve_expr(&t, "[1, 2").is_err());
        assert!(parse_curve_expr(&t, "(t4)").is_err());
    }

    #[test]
    fn curve_expressions_parse_and_evaluate() {
        let t = genus2();
        let named = parse_curve_expr(&t, "c5").unwrap();
        assert_eq!(named, CurveExpr::Named("c5".to_string()));
        assert_eq!(eval_curve_expr(&t, &named).unwrap().class().letters(), &[3]);

        let image = parse_curve_expr(&t, "(t4^-1)(c5)").unwrap();
        let curve = eval_curve_expr(&t, &image).unwrap();
        assert_eq!(curve.class().letters(), &[3, -4]);

        let literal = parse_curve_expr(&t, "[1,2,-1,-2]").unwrap();
        let curve = eval_curve_expr(&t, &literal).unwrap();
        assert!(curve.is_separating().unwrap());
    }

    #[test]
    fn twists_from_curve_expressions() {
        let t = genus2();
        let expr = parse_curve_expr(&t, "(t4^-1)(c5)").unwrap();
        let (curve, class) = twist_from_curve_expr(&t, &expr).unwrap();
        assert_eq!(curve.class().letters(), &[3, -4]);
        assert_eq!(format!("{class}"), "t4 t5 t4^-1");

        let nested = parse_curve_expr(&t, "(t2)((t3)(c11))").unwrap();
        let (_, class) = twist_from_curve_expr(&t, &nested).unwrap();
        // φ = t2 ∘ t3 is the travel word "t3 t2", so the conjugated
        // twist reads t2^-1 t3^-1 t11 t3 t2 in travel order.
        assert_eq!(format!("{class}"), "t2^-1 t3^-1 t11 t3 t2");

        let literal = parse_curve_expr(&t, "[1]").unwrap();
        assert!(twist_from_curve_expr(&t, &literal).is_err());
    }

    #[test]
    fn printing_round_trips() {
        let t = genus2();
        for s in ["t4 t5 t4^-1", "t2 t3^2 xi^-1 iota2", ""] {
            let word = parse_class_expr(&t, s).unwrap();
            assert_eq!(parse_class_expr(&t, &print_class_expr(&word)).unwrap(), word);
        }
        for s in ["c5", "[1,2,-1,-2]", "(t4^-1 t5)(c5)", "(t2)((t3)(c11))", "[]"] {
            let expr = parse_curve_expr(&t, s).unwrap();
            assert_eq!(parse_curve_expr(&t, &print_curve_expr(&expr)).unwrap(), expr);
        }
    }
}
