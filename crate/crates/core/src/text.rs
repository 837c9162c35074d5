//! Text formats: symbolic exponents, Δ-monomials and ideal files.
//!
//! ```text
//! monomial := "1" | factor ("*" factor)*
//! factor   := "y" INDEX ("^" exponent)?
//! exponent := NAT | "x" | "{" poly "}"
//! poly     := term ("+" term)*
//! term     := NAT ("*" xpow)? | xpow
//! xpow     := "x" ("^" NAT)?
//! ```
//!
//! Whitespace is insignificant. Variables are 1-based (`y1 … yn`); repeated
//! variables multiply, so their exponents add. Rendering is canonical and
//! parses back to the same vector.

use crate::error::{Error, Result};
use crate::exponents::ExpPoly;
use crate::ideals::{ClosureKind, IdealPresentation};
use crate::monomials::ExpVector;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        // digits only, so the slice is valid UTF-8
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse()
            .map_err(|_| Error::parse(start, format!("number {digits} does not fit in 64 bits")))
    }

    fn error(&mut self, message: impl Into<String>) -> Error {
        self.skip_ws();
        let found = match self.src.get(self.pos) {
            Some(&c) => format!(", found '{}'", c as char),
            None => ", found end of input".to_string(),
        };
        Error::parse(self.pos, format!("{}{found}", message.into()))
    }

    /// `x` or `x^k`, returning the exponent.
    fn x_power(&mut self) -> Result<usize> {
        self.expect(b'x')?;
        if self.eat(b'^') {
            let at = self.pos;
            let k = self.nat()?;
            usize::try_from(k).map_err(|_| Error::parse(at, "degree too large"))
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<ExpPoly> {
        match self.peek() {
            Some(b'x') => Ok(ExpPoly::x_pow(self.x_power()?)),
            Some(c) if c.is_ascii_digit() => {
                let c = self.nat()?;
                if self.eat(b'*') {
                    let d = self.x_power()?;
                    Ok(ExpPoly::term(c, d))
                } else {
                    Ok(ExpPoly::constant(c))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }

    fn poly(&mut self) -> Result<ExpPoly> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            let at = self.pos;
            acc = acc
                .checked_add(&self.term()?)
                .map_err(|_| Error::parse(at, "coefficient overflow"))?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<ExpPoly> {
        match self.peek() {
            Some(b'{') => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(b'}')?;
                Ok(p)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(ExpPoly::x_pow(1))
            }
            Some(c) if c.is_ascii_digit() => Ok(ExpPoly::constant(self.nat()?)),
            _ => Err(self.error("expected an exponent")),
        }
    }

    fn factor(&mut self, coords: &mut [ExpPoly]) -> Result<()> {
        if self.peek() == Some(b'1') {
            // the empty product may appear as a factor
            let at = self.pos;
            if self.nat()? != 1 {
                return Err(Error::parse(at, "expected a variable"));
            }
            return Ok(());
        }
        self.expect(b'y')?;
        let at = self.pos;
        let index = self.nat()?;
        let arity = coords.len();
        if index == 0 || index as u128 > arity as u128 {
            return Err(Error::parse(
                at,
                format!("variable y{index} outside the declared arity {arity}"),
            ));
        }
        let exp = if self.eat(b'^') {
            self.exponent()?
        } else {
            ExpPoly::one()
        };
        let slot = &mut coords[index as usize - 1];
        *slot = slot
            .checked_add(&exp)
            .map_err(|_| Error::parse(at, "coefficient overflow"))?;
        Ok(())
    }
}

/// Parse a symbolic exponent such as `x^2+2*x+3`.
pub fn parse_exp_poly(text: &str) -> Result<ExpPoly> {
    let mut cur = Cursor::new(text);
    let p = cur.poly()?;
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(p)
}

/// Parse a Δ-monomial such as `y1^{x^2+1}*y2^3` in the given arity.
pub fn parse_monomial(text: &str, arity: usize) -> Result<ExpVector> {
    let mut cur = Cursor::new(text);
    let mut coords = vec![ExpPoly::zero(); arity];
    cur.factor(&mut coords)?;
    while cur.eat(b'*') {
        cur.factor(&mut coords)?;
    }
    if !cur.at_end() {
        return Err(cur.error("unexpected trailing input"));
    }
    Ok(ExpVector::new(coords))
}

/// Canonical text of a monomial; `1` for the zero vector.
pub fn render_monomial(u: &ExpVector) -> String {
    let factors: Vec<String> = u
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let var = format!("y{}", i + 1);
            match c.coeffs() {
                [1] => var,
                [n] => format!("{var}^{n}"),
                _ => format!("{var}^{{{c}}}"),
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Parse an ideal file: `kind:` and `arity:` header lines, then one monomial
/// per line. `#` starts a comment.
pub fn parse_ideal_file(text: &str) -> Result<IdealPresentation> {
    let mut kind: Option<ClosureKind> = None;
    let mut arity: Option<usize> = None;
    let mut monomials: Vec<(usize, &str)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some((key, value)) = line.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "kind" => {
                    let k = value
                        .parse::<ClosureKind>()
                        .map_err(|e| at_line(lineno, e))?;
                    if kind.replace(k).is_some() {
                        return Err(at_line(lineno, Error::parse(0, "duplicate kind header")));
                    }
                }
                "arity" => {
                    let n = value
                        .parse::<usize>()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| {
                            at_line(lineno, Error::parse(0, format!("invalid arity '{value}'")))
                        })?;
                    if arity.replace(n).is_some() {
                        return Err(at_line(lineno, Error::parse(0, "duplicate arity header")));
                    }
                }
                other => {
                    return Err(at_line(
                        lineno,
                        Error::parse(0, format!("unknown header '{other}'")),
                    ))
                }
            }
        } else {
            monomials.push((lineno, line));
        }
    }
    let kind = kind.ok_or_else(|| Error::parse(0, "missing 'kind:' header"))?;
    let arity = arity.ok_or_else(|| Error::parse(0, "missing 'arity:' header"))?;
    let gens = monomials
        .into_iter()
        .map(|(lineno, m)| parse_monomial(m, arity).map_err(|e| at_line(lineno, e)))
        .collect::<Result<Vec<_>>>()?;
    IdealPresentation::new(arity, kind, gens)
}

/// Render an ideal in the file format accepted by [`parse_ideal_file`].
pub fn render_ideal_file(ideal: &IdealPresentation) -> String {
    let mut out = format!("kind: {}\narity: {}\n", ideal.kind(), ideal.arity());
    if ideal.is_unit() {
        out.push_str("1\n");
    }
    for g in ideal.generators() {
        out.push_str(&render_monomial(g));
        out.push('\n');
    }
    out
}

fn at_line(lineno: usize, err: Error) -> Error {
    match err {
        Error::Parse { position, message } => Error::Parse {
            position,
            message: format!("line {lineno}: {message}"),
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[u64]) -> ExpPoly {
        ExpPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn parse_monomial_examples() {
        assert_eq!(parse_monomial("1", 2).unwrap(), ExpVector::zero(2));
        assert_eq!(
            parse_monomial("y1^{x^2+1}*y2^3", 2).unwrap(),
            ExpVector::new(vec![p(&[1, 0, 1]), p(&[3])])
        );
        assert_eq!(
            parse_monomial("y1*y1^{x}", 1).unwrap(),
            ExpVector::new(vec![p(&[1, 1])])
        );
        assert_eq!(
            parse_monomial(" y2 ^ { 2 * x ^ 3 + x } * y1 ^x ", 2).unwrap(),
            ExpVector::new(vec![p(&[0, 1]), p(&[0, 1, 0, 2])])
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_monomial("y1^{x+}", 1) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("unexpected {other:?}"),
        }
        match parse_monomial("y3", 2) {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 1);
                assert!(message.contains("arity"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_monomial("y0", 2).is_err());
        assert!(parse_monomial("", 2).is_err());
        assert!(parse_monomial("y1 y2", 2).is_err());
        assert!(parse_monomial("y1^99999999999999999999", 1).is_err());
    }

    #[test]
    fn exp_poly_parse() {
        assert_eq!(parse_exp_poly("x^2+2*x+3").unwrap(), p(&[3, 2, 1]));
        assert_eq!(parse_exp_poly("x + x").unwrap(), p(&[0, 2]));
        assert_eq!(parse_exp_poly("0").unwrap(), ExpPoly::zero());
        assert!(parse_exp_poly("2x").is_err());
    }

    #[test]
    fn render_is_canonical() {
        let u = ExpVector::new(vec![p(&[1, 0, 1]), p(&[3]), p(&[]), p(&[1]), p(&[0, 1])]);
        assert_eq!(render_monomial(&u), "y1^{x^2+1}*y2^3*y4*y5^{x}");
        assert_eq!(render_monomial(&ExpVector::zero(3)), "1");
        assert_eq!(parse_monomial(&render_monomial(&u), 5).unwrap(), u);
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "# example\nkind: well-mixed\narity: 2\ny1^2   # first\ny2^2\n";
        let ideal = parse_ideal_file(text).unwrap();
        assert_eq!(ideal.kind(), ClosureKind::WellMixed);
        assert_eq!(ideal.generators().len(), 2);
        let again = parse_ideal_file(&render_ideal_file(&ideal)).unwrap();
        assert_eq!(again, ideal);
    }

    #[test]
    fn ideal_file_errors() {
        assert!(parse_ideal_file("arity: 2\ny1\n").is_err());
        assert!(parse_ideal_file("kind: delta\ny1\n").is_err());
        assert!(parse_ideal_file("kind: bogus\narity: 1\n").is_err());
        let err = parse_ideal_file("kind: delta\narity: 1\ny1\ny2\n").unwrap_err();
        match err {
            Error::Parse { message, .. } => assert!(message.starts_with("line 4")),
            other => panic!("unexpected {other:?}"),
        }
    }
}
