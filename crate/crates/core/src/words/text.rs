//! Canonical text form.
//!
//! ```text
//! element := term ('+' term)* | '0'
//! term    := rational '*' word
//! word    := NAME | 'T(' NAME (',' NAME)* ')' | 'S(' word (',' word)* ')' | 'S()'
//!          | 'P(' word ';' word ')'
//! ```
//!
//! Legs of a tensor power are separated by `#`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graded::Generator;
use crate::scalar::Scalar;
use crate::words::{Element, TensorPowerElement, Word};

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, ws: &[Word]) -> fmt::Result {
            for (i, w) in ws.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{w}")?;
            }
            Ok(())
        }
        match self {
            Word::Gen(g) => write!(f, "{g}"),
            Word::Tensor(ls) => {
                f.write_str("T(")?;
                for (i, g) in ls.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                f.write_str(")")
            }
            Word::Sym(fs) => {
                f.write_str("S(")?;
                list(f, fs)?;
                f.write_str(")")
            }
            Word::Pair(h, t) => {
                write!(f, "P({h}; S(")?;
                list(f, t)?;
                f.write_str("))")
            }
        }
    }
}

/// Renders an element in canonical term order; the zero element is `0`.
pub fn format_element(e: &Element) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    e.iter()
        .map(|(w, c)| format!("{c} * {w}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

struct Parser<'a, 'r> {
    src: &'a str,
    pos: usize,
    resolve: &'r dyn Fn(&str) -> Result<Generator>,
}

impl<'a, 'r> Parser<'a, 'r> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn name(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || matches!(c, '_' | '^' | '.')))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a name");
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn generator(&mut self) -> Result<Generator> {
        let start = self.pos;
        let name = self.name()?;
        (self.resolve)(name).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => Error::Parse {
                pos: start,
                msg: other.to_string(),
            },
        })
    }

    fn rational(&mut self) -> Result<Scalar> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || c == '/' || (i == 0 && c == '-')))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let lit = &rest[..len];
        match lit.parse::<Scalar>() {
            Ok(s) if !lit.is_empty() => {
                self.pos += len;
                Ok(s)
            }
            _ => self.err(format!("invalid rational `{lit}`")),
        }
    }

    fn word_list(&mut self) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            out.push(self.word()?);
            if self.eat(')') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn word(&mut self) -> Result<Word> {
        self.skip_ws();
        let start = self.pos;
        let name = self.name()?;
        if self.peek() != Some('(') || !matches!(name, "T" | "S" | "P") {
            self.pos = start;
            return Ok(Word::Gen(self.generator()?));
        }
        self.expect('(')?;
        match name {
            "T" => {
                let mut ls = vec![self.generator()?];
                while self.eat(',') {
                    ls.push(self.generator()?);
                }
                self.expect(')')?;
                Ok(Word::Tensor(ls))
            }
            "S" => Ok(Word::Sym(self.word_list()?)),
            _ => {
                let head = self.word()?;
                self.expect(';')?;
                let tail_pos = self.pos;
                let tail = match self.word()? {
                    Word::Sym(fs) => fs,
                    _ => {
                        self.pos = tail_pos;
                        return self.err("pair tail must be a symmetric word");
                    }
                };
                self.expect(')')?;
                Ok(Word::Pair(Box::new(head), tail))
            }
        }
    }

    fn term_legs(&mut self) -> Result<(Scalar, Vec<Word>)> {
        let c = self.rational()?;
        self.expect('*')?;
        let mut legs = vec![self.word()?];
        while self.eat('#') {
            legs.push(self.word()?);
        }
        Ok((c, legs))
    }

    fn terms(&mut self) -> Result<Vec<(Scalar, Vec<Word>)>> {
        self.skip_ws();
        if self.src[self.pos..].trim() == "0" {
            self.pos = self.src.len();
            return Ok(Vec::new());
        }
        let mut out = vec![self.term_legs()?];
        while self.eat('+') {
            out.push(self.term_legs()?);
        }
        if !self.at_end() {
            return self.err("unexpected trailing input");
        }
        Ok(out)
    }
}

/// Parses an element; generator names are looked up with `resolve`. The
/// result is not normalized.
pub fn parse_element(src: &str, resolve: &dyn Fn(&str) -> Result<Generator>) -> Result<Element> {
    let mut p = Parser { src, pos: 0, resolve };
    let mut out = Element::zero();
    for (c, mut legs) in p.terms()? {
        if legs.len() != 1 {
            return Err(Error::Parse {
                pos: 0,
                msg: "element terms have a single leg".into(),
            });
        }
        out.add_term(legs.pop().expect("one leg"), c);
    }
    Ok(out)
}

/// Parses a tensor power element (legs separated by `#`).
pub fn parse_tensor_power(
    src: &str,
    resolve: &dyn Fn(&str) -> Result<Generator>,
) -> Result<TensorPowerElement> {
    let mut p = Parser { src, pos: 0, resolve };
    let terms = p.terms()?;
    let arity = terms.first().map(|(_, l)| l.len()).unwrap_or(1);
    let mut out = TensorPowerElement::zero(arity);
    for (c, legs) in terms {
        if legs.len() != arity {
            return Err(Error::Parse {
                pos: 0,
                msg: "terms have different leg counts".into(),
            });
        }
        out.add_term(legs, c);
    }
    Ok(out)
}

/// Parses a single word.
pub fn parse_word(src: &str, resolve: &dyn Fn(&str) -> Result<Generator>) -> Result<Word> {
    let mut p = Parser { src, pos: 0, resolve };
    let w = p.word()?;
    if !p.at_end() {
        return p.err("unexpected trailing input");
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::GeneratorRegistry;

    fn reg() -> GeneratorRegistry {
        let mut r = GeneratorRegistry::new();
        r.insert("a", 2).unwrap();
        r.insert("b", 2).unwrap();
        r.insert("u1.du2", 2).unwrap();
        r
    }

    #[test]
    fn round_trip() {
        let r = reg();
        let resolve = |n: &str| r.resolve(n);
        for s in [
            "1/1 * T(a,b) + -1/1 * T(b,a)",
            "1/2 * P(T(a,b); S(T(a),T(u1.du2)))",
            "3/1 * P(T(a); S())",
            "1/1 * S(a,b)",
            "-1/3 * u1.du2",
        ] {
            let e = parse_element(s, &resolve).unwrap();
            assert_eq!(format_element(&e), s);
        }
        assert!(parse_element("0", &resolve).unwrap().is_zero());
        assert_eq!(format_element(&Element::zero()), "0");
    }

    #[test]
    fn tolerant_whitespace() {
        let r = reg();
        let e = parse_element("  2/4*T( a , b )+ 1 * T(b)", &|n| r.resolve(n)).unwrap();
        assert_eq!(format_element(&e), "1/2 * T(a,b) + 1/1 * T(b)");
    }

    #[test]
    fn errors_have_positions() {
        let r = reg();
        let resolve = |n: &str| r.resolve(n);
        match parse_element("1/1 * T(a,zz)", &resolve) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_element("1/1 * T(a", &resolve),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_element("1/1 * P(T(a); T(b))", &resolve),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_element("x * T(a)", &resolve), Err(Error::Parse { .. })));
    }

    #[test]
    fn tensor_power_round_trip() {
        let r = reg();
        let s = "1/1 * T(a) # T(b) + -2/1 * T(b) # T(a)";
        let t = parse_tensor_power(s, &|n| r.resolve(n)).unwrap();
        assert_eq!(t.arity(), 2);
        assert_eq!(t.to_string(), s);
    }
}
