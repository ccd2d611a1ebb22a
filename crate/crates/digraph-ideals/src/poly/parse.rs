//! Text form of polynomials: `e1e2e3 - 1`, `x^2 + 2xy - 3/2`, `e1*e2 - e3`.
//!
//! The grammar is a signed sum of terms; a term is an optional rational
//! coefficient followed by variable factors with optional `^` exponents.
//! Multiplication may be written `*` or by juxtaposition; juxtaposed names
//! are resolved against the variable table by greedy longest match, so the
//! output of [`Polynomial::to_text`] always parses back to the same value.

use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Scalar, VarTable};

impl Polynomial {
    /// Parses the textual form over the given variable table.
    pub fn parse(text: &str, vars: &Arc<VarTable>) -> Result<Polynomial> {
        Parser { vars, bytes: text.as_bytes(), pos: 0 }.run()
    }
}

struct Parser<'a> {
    vars: &'a Arc<VarTable>,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn run(mut self) -> Result<Polynomial> {
        let mut terms: Vec<(Scalar, Monomial)> = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.fail("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return Err(self.fail(&format!("expected + or -, found {:?}", c as char))),
                None => break,
            };
            first = false;
            let (coeff, mono) = self.term()?;
            let signed = if sign < 0 { -coeff } else { coeff };
            if !signed.is_zero() {
                terms.push((signed, mono));
            }
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Polynomial::from_terms(self.vars.clone(), terms))
    }

    /// One term: `coefficient? factor*` with at least one of the two present.
    fn term(&mut self) -> Result<(Scalar, Monomial)> {
        self.skip_ws();
        let mut coeff: Option<Scalar> = None;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let numer = self.integer()?;
            self.skip_ws();
            let c = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let denom = self.integer()?;
                if denom.is_zero() {
                    return Err(self.fail("zero denominator"));
                }
                BigRational::new(numer, denom)
            } else {
                BigRational::from_integer(numer)
            };
            coeff = Some(c);
        }
        let mut exps: Vec<(usize, u32)> = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    continue;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let var = self.variable()?;
                    let exp = self.exponent()?;
                    match exps.iter_mut().find(|(v, _)| *v == var) {
                        Some((_, e)) => *e += exp,
                        None => exps.push((var, exp)),
                    }
                }
                _ => break,
            }
        }
        if coeff.is_none() && exps.is_empty() {
            return Err(self.fail("expected a coefficient or a variable"));
        }
        Ok((coeff.unwrap_or_else(Scalar::one), Monomial::from_exps(exps)))
    }

    /// Longest table name starting at the cursor.
    fn variable(&mut self) -> Result<usize> {
        let rest = &self.bytes[self.pos..];
        let run_len = rest
            .iter()
            .take_while(|c| c.is_ascii_alphanumeric() || **c == b'_')
            .count();
        let run = std::str::from_utf8(&rest[..run_len]).expect("ascii run");
        let mut best: Option<(usize, usize)> = None; // (length, var index)
        for len in (1..=run.len()).rev() {
            if let Some(var) = self.vars.index_of(&run[..len]) {
                best = Some((len, var));
                break;
            }
        }
        match best {
            Some((len, var)) => {
                self.pos += len;
                Ok(var)
            }
            None => Err(self.fail(&format!("unknown variable at {:?}", run))),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let n = self.integer()?;
        u32::try_from(&n).map_err(|_| self.fail("exponent out of range"))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected an integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse::<BigInt>().map_err(|e| self.fail(&e.to_string()))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn fail(&self, msg: &str) -> Error {
        Error::PolyParse(format!("at byte {}: {msg}", self.pos))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{scalar, MulStyle};
    use crate::poly::order::TermOrder;

    fn table() -> Arc<VarTable> {
        VarTable::new(vec!["e1", "e2", "e3", "e10"]).unwrap()
    }

    #[test]
    fn parses_juxtaposed_and_starred_products() {
        let vars = table();
        let a = Polynomial::parse("e1e2e3 - 1", &vars).unwrap();
        let b = Polynomial::parse("e1 * e2 * e3 - 1", &vars).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.num_terms(), 2);
    }

    #[test]
    fn greedy_match_prefers_longer_names() {
        let vars = table();
        let p = Polynomial::parse("e10e1", &vars).unwrap();
        let m = &p.terms()[0].1;
        assert_eq!(m.degree_of(0), 1); // e1
        assert_eq!(m.degree_of(3), 1); // e10
    }

    #[test]
    fn parses_rational_coefficients_and_exponents() {
        let vars = table();
        let p = Polynomial::parse("3/2e1^2e2 - 7 + e1e1", &vars).unwrap();
        let three_halves = BigRational::new(BigInt::from(3), BigInt::from(2));
        assert_eq!(p.coefficient(&Monomial::from_exps([(0, 2), (1, 1)])), three_halves);
        assert_eq!(p.coefficient(&Monomial::from_exps([(0, 2)])), scalar(1));
        assert_eq!(p.coefficient(&Monomial::one()), scalar(-7));
    }

    #[test]
    fn rejects_garbage() {
        let vars = table();
        assert!(Polynomial::parse("", &vars).is_err());
        assert!(Polynomial::parse("e9", &vars).is_err());
        assert!(Polynomial::parse("e1 +", &vars).is_err());
        assert!(Polynomial::parse("1/0", &vars).is_err());
        assert!(Polynomial::parse("e1 e2 %", &vars).is_err());
    }

    #[test]
    fn zero_parses_to_the_zero_polynomial() {
        let vars = table();
        let p = Polynomial::parse("0", &vars).unwrap();
        assert!(p.is_zero());
        let q = Polynomial::parse("e1 - e1", &vars).unwrap();
        assert!(q.is_zero());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = Polynomial> {
            let term = (
                -9i64..=9,
                1i64..=9,
                proptest::collection::vec(0u32..3, 4),
            );
            proptest::collection::vec(term, 0..6).prop_map(|terms| {
                let vars = table();
                Polynomial::from_terms(
                    vars.clone(),
                    terms.into_iter().map(|(n, d, exps)| {
                        (
                            BigRational::new(BigInt::from(n), BigInt::from(d)),
                            Monomial::from_exps(exps.into_iter().enumerate()),
                        )
                    }),
                )
            })
        }

        proptest! {
            #[test]
            fn rendering_round_trips(p in arb_poly()) {
                let vars = table();
                let display = p.to_string();
                prop_assert_eq!(&Polynomial::parse(&display, &vars).unwrap(), &p);
                for ord in [TermOrder::lex(4), TermOrder::grevlex_with(vec![3, 0, 2, 1]).unwrap()] {
                    for style in [MulStyle::Implicit, MulStyle::Explicit] {
                        let text = p.to_text(&ord, style);
                        prop_assert_eq!(&Polynomial::parse(&text, &vars).unwrap(), &p);
                    }
                }
            }
        }
    }
}
