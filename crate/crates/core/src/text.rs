//! Text grammar for polynomials and the canonical printer.
//!
//! Grammar: variables `x1..xN`, integer or rational literals (`p/q`),
//! operators `+ - * ^`, parentheses; whitespace-insensitive. `^` takes a
//! non-negative integer exponent. The printer emits terms in descending
//! graded-lex order so output is byte-stable; `parse(print(p)) == p`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::{Poly, Rational};
use crate::{Error, Result};

/// Parse a polynomial. The variable count is the largest index mentioned
/// (at least `min_nvars`).
pub fn parse_poly(input: &str, min_nvars: usize) -> Result<Poly> {
    let max_idx = scan_max_var(input)?;
    let nvars = max_idx.max(min_nvars).max(1);
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
        nvars,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Parse {
            pos: p.pos,
            msg: format!("unexpected character '{}'", p.src[p.pos] as char),
        });
    }
    Ok(poly)
}

fn scan_max_var(input: &str) -> Result<usize> {
    let b = input.as_bytes();
    let mut max = 0usize;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if j == start {
                return Err(Error::Parse {
                    pos: i,
                    msg: "variable must be of the form x<index>".into(),
                });
            }
            let idx: usize = input[start..j].parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "variable index too large".into(),
            })?;
            if idx == 0 {
                return Err(Error::Parse {
                    pos: i,
                    msg: "unknown variable x0; indices start at 1".into(),
                });
            }
            max = max.max(idx);
            i = j;
        } else if b[i].is_ascii_alphabetic() {
            return Err(Error::Parse {
                pos: i,
                msg: format!("unknown symbol '{}'", b[i] as char),
            });
        } else {
            i += 1;
        }
    }
    Ok(max)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(b')') => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Parse {
                        pos: self.pos,
                        msg: "expected ')'".into(),
                    }),
                }
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.uint()? as usize;
                if idx == 0 || idx > self.nvars {
                    return Err(Error::Parse {
                        pos: self.pos,
                        msg: format!("unknown variable x{idx}"),
                    });
                }
                Ok(Poly::var(self.nvars, idx - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.bigint()?;
                // a '/' directly after an integer literal makes a rational literal
                if let Some(b'/') = self.peek() {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.bigint()?;
                    if den.is_zero() {
                        return Err(Error::Parse {
                            pos: self.pos,
                            msg: "zero denominator in rational literal".into(),
                        });
                    }
                    Ok(Poly::constant(self.nvars, Rational::new(num, den)))
                } else {
                    Ok(Poly::constant(self.nvars, Rational::from_integer(num)))
                }
            }
            Some(c) => Err(Error::Parse {
                pos: self.pos,
                msg: format!("unexpected character '{}'", c as char),
            }),
            None => Err(Error::Parse {
                pos: self.pos,
                msg: "unexpected end of input".into(),
            }),
        }
    }

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected a number".into(),
            });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "number too large".into(),
            })
    }

    fn bigint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse {
                pos: start,
                msg: "expected a number".into(),
            });
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .unwrap())
    }
}

/// Canonical printer: descending graded-lex term order, `p/q` rationals,
/// explicit `*` between factors, `^` for exponents above 1.
pub fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || m.is_constant() {
            factors.push(print_rational(&mag));
        }
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", i + 1)),
                _ => factors.push(format!("x{}^{}", i + 1, e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// `p` or `p/q`.
pub fn print_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` (used by the certificate and CLI layers).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("bad rational '{s}'"),
    })?;
    let d: BigInt = den.parse().map_err(|_| Error::Parse {
        pos: 0,
        msg: format!("bad rational '{s}'"),
    })?;
    if d.is_zero() {
        return Err(Error::Parse {
            pos: 0,
            msg: "zero denominator".into(),
        });
    }
    Ok(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio};

    #[test]
    fn parse_coordinate_product() {
        let p = parse_poly("x1*x2*x3", 0).unwrap();
        assert_eq!(p, Poly::term(3, rat(1), &[1, 1, 1]));
    }

    #[test]
    fn parse_binary_cubic_discriminant() {
        let p = parse_poly(
            "x2^2*x3^2 + 18*x1*x2*x3*x4 - 4*x1*x3^3 - 4*x2^3*x4 - 27*x1^2*x4^2",
            0,
        )
        .unwrap();
        assert_eq!(p, crate::catalog::binary_cubic_discriminant_poly());
    }

    #[test]
    fn parse_rational_coefficient() {
        let p = parse_poly("1/2*x2^2", 0).unwrap();
        assert_eq!(p, Poly::term(2, ratio(1, 2), &[0, 2]));
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = parse_poly("x1 + y2", 0).unwrap_err();
        match e {
            Error::Parse { pos, .. } => assert_eq!(pos, 5),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_poly("x0 + 1", 0).is_err());
        assert!(parse_poly("x1 + ", 0).is_err());
        assert!(parse_poly("x1 )", 0).is_err());
    }

    #[test]
    fn print_parse_round_trip_random() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(99);
        for _ in 0..200 {
            let p = crate::poly::testutil::random_poly(&mut rng, 4, 5);
            let s = print_poly(&p);
            let q = parse_poly(&s, p.nvars()).unwrap();
            assert_eq!(p, q, "round trip failed for '{s}'");
        }
    }

    #[test]
    fn print_is_descending_graded_lex() {
        let p = parse_poly("x2 + x1 + x1*x2 + 3", 0).unwrap();
        assert_eq!(print_poly(&p), "x1*x2 + x1 + x2 + 3");
    }
}
