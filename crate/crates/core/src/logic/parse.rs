//! Recursive-descent parser for the concrete syntax
//!
//! ```text
//! formula := conj ('|' conj)*
//! conj    := unary ('&' unary)*
//! unary   := '!' unary | quant unary | '(' formula ')' | atom
//! quant   := 'A' var '.' | 'E' var '.' | 'E' '^' int var '.'
//! atom    := var ('=' | '~') var
//! ```

use super::{is_valid_name, Formula, Var};
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let f = p.formula()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, format!("unexpected `{}`", p.src[p.pos] as char)));
    }
    f.check_well_formed()?;
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            Some(b) => Err(Error::parse(self.pos, format!("expected `{}`, found `{}`", byte as char, b as char))),
            None => Err(Error::parse(self.pos, format!("expected `{}`, found end of input", byte as char))),
        }
    }

    fn formula(&mut self) -> Result<Formula> {
        let mut parts = vec![self.conj()?];
        while self.peek() == Some(b'|') {
            self.pos += 1;
            parts.push(self.conj()?);
        }
        Ok(Formula::or(parts))
    }

    fn conj(&mut self) -> Result<Formula> {
        let mut parts = vec![self.unary()?];
        while self.peek() == Some(b'&') {
            self.pos += 1;
            parts.push(self.unary()?);
        }
        Ok(Formula::and(parts))
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(b'!') => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(b'(') => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(b')')?;
                Ok(f)
            }
            Some(b'A') => {
                self.pos += 1;
                let x = self.var()?;
                self.expect(b'.')?;
                Ok(Formula::forall(&x, self.unary()?))
            }
            Some(b'E') => {
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let at = self.pos;
                    let m = self.int()?;
                    let x = self.var()?;
                    self.expect(b'.')?;
                    let body = self.unary()?;
                    Formula::count_exists(m, &x, body)
                        .map_err(|_| Error::parse(at, "counting threshold must be at least 1"))
                } else {
                    let x = self.var()?;
                    self.expect(b'.')?;
                    Ok(Formula::exists(&x, self.unary()?))
                }
            }
            Some(_) => self.atom(),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        let x = self.var()?;
        self.skip_ws();
        let at = self.pos;
        let op = self.peek();
        match op {
            Some(b'=') | Some(b'~') => self.pos += 1,
            _ => return Err(Error::parse(at, "expected `=` or `~` after a variable")),
        }
        let y = self.var()?;
        Ok(if op == Some(b'=') { Formula::eq_atom(&x, &y) } else { Formula::adj(&x, &y) })
    }

    fn var(&mut self) -> Result<Var> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_lowercase()
                || self.src[self.pos].is_ascii_digit()
                || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII slice");
        if !is_valid_name(name) {
            return Err(Error::parse(start, "expected a variable name"));
        }
        Ok(Var(name.into()))
    }

    fn int(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ASCII slice")
            .parse()
            .map_err(|_| Error::parse(start, "expected a counting threshold"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{var, Node};

    #[test]
    fn grammar_cases() {
        let f = parse("Ax.Ay.(x=y)").unwrap();
        assert_eq!(f.to_string(), "Ax.Ay.(x=y)");
        let c = parse("E^3 x.(x=x)").unwrap();
        let x = var("x");
        assert_eq!(c, Formula::count_exists(3, &x, Formula::eq_atom(&x, &x)).unwrap());
        let g = parse(" x~y & y=z | !z~x ").unwrap();
        assert!(matches!(g.node(), Node::Or(parts) if parts.len() == 2));
        assert_eq!(g.to_string(), "(((x~y) & (y=z)) | !(z~x))");
    }

    #[test]
    fn quantifier_scope_is_tight() {
        let f = parse("Ex.x=x & y=y").unwrap();
        assert!(matches!(f.node(), Node::And(_)));
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse("Ax.(x=y"), Err(Error::Parse { pos: 7, .. })));
        assert!(matches!(parse("x = "), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse("x # y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("E^0 x.(x=x)"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("(x=y))"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse("Ex.Ex.(x=x)"), Err(Error::WellFormed(_))));
    }
}
