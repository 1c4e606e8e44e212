//! Parser for the textual group-presentation grammar.
//!
//! ```text
//! spec     := preset | "(" "S1" ("x" factor)+ ")" "/" "<" [gen ("," gen)*] ">"
//! preset   := "U(" int ")" | "S1" "x" factor | "S1x_" int "_" factor [":" celt]
//! factor   := "SU(" int ")" | "Sp(" int ")" | "Spin(" int ")"
//!           | "E6" | "E7" | "E8" | "F4" | "G2"
//! gen      := "(" rational ";" celt ("," celt)* ")"
//! celt     := integer | "1" | "c" | "z" | "d" | "d+" | "d-"
//! rational := int "/" int | int
//! ```
//!
//! A bare integer celt is the exponent of the factor's canonical center
//! generator; the named forms address the `Spin` centers, where `Spin(4m)`
//! requires one of `1`, `z`, `d+`, `d-`.

use gaugekit_core::presentation::CentralElement;
use gaugekit_core::{GroupPresentation, SimpleType};

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError {
    pub at: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.at, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { at: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected {token:?}")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn integer(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        self.text[start..self.pos].parse().map_err(|_| self.err("integer out of range"))
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }
}

fn parse_factor(c: &mut Cursor) -> Result<SimpleType, ParseError> {
    for (tok, build) in [
        ("SU(", 0u8),
        ("Sp(", 1),
        ("Spin(", 2),
    ] {
        if c.eat(tok) {
            let n = c.integer()? as u32;
            c.expect(")")?;
            let t = match build {
                0 => SimpleType::SU(n),
                1 => SimpleType::Sp(n),
                _ => SimpleType::Spin(n),
            };
            t.validate().map_err(|e| c.err(e.to_string()))?;
            return Ok(t);
        }
    }
    for (tok, t) in [
        ("E6", SimpleType::E6),
        ("E7", SimpleType::E7),
        ("E8", SimpleType::E8),
        ("F4", SimpleType::F4),
        ("G2", SimpleType::G2),
    ] {
        if c.eat(tok) {
            return Ok(t);
        }
    }
    Err(c.err("expected a factor: SU(n), Sp(n), Spin(n), E6, E7, E8, F4 or G2"))
}

/// Resolve one center coordinate for `factor`.
fn parse_celt(c: &mut Cursor, factor: SimpleType) -> Result<Vec<u64>, ParseError> {
    let center = factor.center();
    let named = |c: &Cursor, name: &str| {
        center.named(name).map_err(|_| c.err(format!("{factor} has no central element {name:?}")))
    };
    // named elements first; "d+"/"d-" before "d"
    for name in ["d+", "d-", "d", "z", "c"] {
        if c.eat(name) {
            return named(c, name);
        }
    }
    if c.peek().map(|ch| ch.is_ascii_digit()) == Some(true) {
        let e = c.integer()?;
        if center.is_trivial() {
            return if e == 0 {
                Ok(Vec::new())
            } else {
                Err(c.err(format!("{factor} has trivial center; only 0 is allowed")))
            };
        }
        if matches!(factor, SimpleType::Spin(n) if n % 4 == 0) {
            return match e {
                0 | 1 => Ok(center.zero()),
                _ => Err(c.err(format!(
                    "the center of {factor} is Z/2 x Z/2; use one of 1, z, d+, d-"
                ))),
            };
        }
        let gen = center.named_elements().first().cloned().expect("cyclic centers are named");
        return Ok(center.scale(e, &gen.1));
    }
    Err(c.err("expected a center element (integer exponent or 1, c, z, d, d+, d-)"))
}

fn parse_rational(c: &mut Cursor) -> Result<(u64, u64), ParseError> {
    let num = c.integer()?;
    if c.eat("/") {
        let den = c.integer()?;
        if den == 0 {
            return Err(c.err("denominator must be positive"));
        }
        Ok((num, den))
    } else {
        Ok((num, 1))
    }
}

fn parse_quotient(c: &mut Cursor) -> Result<GroupPresentation, ParseError> {
    c.expect("(")?;
    c.expect("S1")?;
    let mut factors = Vec::new();
    while c.eat("x") {
        factors.push(parse_factor(c)?);
    }
    if factors.is_empty() {
        return Err(c.err("expected at least one factor after S1"));
    }
    c.expect(")")?;
    c.expect("/")?;
    c.expect("<")?;
    let mut generators = Vec::new();
    if !c.eat(">") {
        loop {
            c.expect("(")?;
            let (num, den) = parse_rational(c)?;
            let mut parts = Vec::new();
            for (i, f) in factors.iter().enumerate() {
                c.expect(if i == 0 { ";" } else { "," })?;
                parts.push(parse_celt(c, *f)?);
            }
            c.expect(")")?;
            generators
                .push(CentralElement::new(num, den, parts).map_err(|e| c.err(e.to_string()))?);
            if !c.eat(",") {
                break;
            }
        }
        c.expect(">")?;
    }
    GroupPresentation::new(factors, generators).map_err(|e| c.err(e.to_string()))
}

/// Parse a presentation from its textual form.
pub fn parse_presentation(text: &str) -> Result<GroupPresentation, ParseError> {
    let mut c = Cursor::new(text);
    let result = if c.eat("U(") {
        let n = c.integer()? as u32;
        c.expect(")")?;
        GroupPresentation::u(n).map_err(|e| c.err(e.to_string()))?
    } else if c.peek() == Some('(') {
        parse_quotient(&mut c)?
    } else if c.eat("S1") {
        if c.eat("x_") {
            // S1x_m_Factor[:gen]
            let m = c.integer()?;
            c.expect("_")?;
            let factor = parse_factor(&mut c)?;
            let part = if c.eat(":") {
                parse_celt(&mut c, factor)?
            } else if matches!(factor, SimpleType::Spin(n) if n % 4 == 0) {
                return Err(c.err(format!(
                    "{factor} has center Z/2 x Z/2; pick a generator with :z, :d+ or :d-"
                )));
            } else {
                let center = factor.center();
                match center.named_elements().first() {
                    Some((_, e)) => e.clone(),
                    None => Vec::new(),
                }
            };
            let gen = CentralElement::new(1, m, vec![part]).map_err(|e| c.err(e.to_string()))?;
            GroupPresentation::new(vec![factor], vec![gen]).map_err(|e| c.err(e.to_string()))?
        } else if c.eat("x") {
            let factor = parse_factor(&mut c)?;
            GroupPresentation::circle_times(vec![factor]).map_err(|e| c.err(e.to_string()))?
        } else {
            return Err(c.err("expected x or x_m_ after S1"));
        }
    } else {
        return Err(c.err("expected U(n), S1x..., or a quotient (S1 x ...) / <...>"));
    };
    if !c.at_end() {
        return Err(c.err("trailing input after presentation"));
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gaugekit_core::validate;

    #[test]
    fn presets() {
        let p = parse_presentation("U(6)").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 6);
        let p = parse_presentation("S1xSU(5)").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 1);
        let p = parse_presentation("S1x_2_Sp(3)").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 2);
        let p = parse_presentation("S1x_4_Spin(10)").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 4);
        let p = parse_presentation("S1x_2_Spin(12):d-").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 2);
        assert!(parse_presentation("S1x_2_Spin(12)").is_err());
        let p = parse_presentation("S1x_3_E6").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 3);
    }

    #[test]
    fn quotient_forms() {
        let p = parse_presentation("(S1 x SU(4)) / <(1/4; 1)>").unwrap();
        assert_eq!(p, parse_presentation("U(4)").unwrap());
        let p = parse_presentation("( S1 x SU(3) x Sp(2) ) / < (1/6; 1, 1) >").unwrap();
        let v = validate(&p).unwrap();
        assert_eq!(v.factor_orders(), vec![3, 2]);
        let p = parse_presentation("(S1 x SU(5)) / <>").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 1);
        let p = parse_presentation("(S1 x Spin(12)) / <(1/2; d-)>").unwrap();
        assert_eq!(validate(&p).unwrap().s_invariant(), 2);
        // two generators
        let p = parse_presentation("(S1 x SU(4)) / <(1/4; 1), (1/2; 2)>").unwrap();
        assert!(validate(&p).is_ok());
    }

    #[test]
    fn render_parse_round_trip() {
        for text in [
            "U(6)",
            "(S1 x SU(3) x Sp(2)) / <(1/6; 1, 1)>",
            "(S1 x Spin(12)) / <(1/2; d-)>",
            "(S1 x Spin(10)) / <(1/4; 1)>",
            "(S1 x E6) / <(1/3; 1)>",
            "S1xSU(7)",
        ] {
            let p = parse_presentation(text).unwrap();
            let rendered = p.to_string();
            let reparsed = parse_presentation(&rendered)
                .unwrap_or_else(|e| panic!("{text} -> {rendered}: {e}"));
            assert_eq!(p, reparsed, "{text} -> {rendered}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        assert!(parse_presentation("U(1)").is_err());
        assert!(parse_presentation("(S1) / <>").is_err());
        assert!(parse_presentation("(S1 x Spin(5)) / <>").is_err());
        assert!(parse_presentation("U(4) trailing").is_err());
        assert!(parse_presentation("(S1 x E8) / <(1/2; 1)>").is_err());
        assert!(parse_presentation("(S1 x SU(4)) / <(1/0; 1)>").is_err());
    }
}
