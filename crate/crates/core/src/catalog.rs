//! The group-spec grammar and the built-in catalog.
//!
//! Grammar: `C n` | `D m` (dihedral of order m, m even, m ≥ 6) | `S n`
//! (n ≤ 6) | `A n` (n ≤ 6) | `Q 8` | `V 4` | `<spec> x <spec>` |
//! `perm <degree> : <cycles> [, <cycles>]*`. Every named family has a fixed,
//! documented permutation realisation, so parsing the same spec always
//! yields the same canonical group.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{generate_group_capped, FiniteGroup};
use crate::perm::Permutation;

/// Parsed form of a group spec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    /// `C n`: the n-cycle on n points.
    Cyclic(u32),
    /// `D m`: order m = 2k, rotation plus reflection on k points.
    Dihedral(u32),
    /// `S n`: transposition plus n-cycle on n points.
    Symmetric(u32),
    /// `A n`: 3-cycle plus an even long cycle on n points.
    Alternating(u32),
    /// `Q 8`: the regular representation on 8 points.
    Quaternion,
    /// `V 4`: the two double transpositions on 4 points.
    Klein,
    /// Direct product acting on disjoint point sets.
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// Explicit generators in cycle notation.
    Explicit {
        degree: usize,
        generators: Vec<Permutation>,
    },
}

impl GroupSpec {
    /// Degree of the fixed permutation realisation.
    pub fn degree(&self) -> usize {
        match self {
            GroupSpec::Cyclic(n) => *n as usize,
            GroupSpec::Dihedral(m) => (*m as usize) / 2,
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) => *n as usize,
            GroupSpec::Quaternion => 8,
            GroupSpec::Klein => 4,
            GroupSpec::Product(a, b) => a.degree() + b.degree(),
            GroupSpec::Explicit { degree, .. } => *degree,
        }
    }

    /// The fixed generators of the realisation.
    pub fn generators(&self) -> Vec<Permutation> {
        let degree = self.degree();
        let cycle = |points: Vec<u16>| Permutation::from_cycles(degree, &[points]).unwrap();
        match self {
            GroupSpec::Cyclic(n) => {
                if *n <= 1 {
                    vec![]
                } else {
                    vec![cycle((0..*n as u16).collect())]
                }
            }
            GroupSpec::Dihedral(m) => {
                let k = (*m / 2) as u16;
                let rotation = cycle((0..k).collect());
                let reflection_images: Vec<u16> = (0..k).map(|i| (k - i) % k).collect();
                vec![
                    rotation,
                    Permutation::from_images(reflection_images).unwrap(),
                ]
            }
            GroupSpec::Symmetric(n) => {
                if *n <= 1 {
                    vec![]
                } else if *n == 2 {
                    vec![cycle(vec![0, 1])]
                } else {
                    vec![cycle(vec![0, 1]), cycle((0..*n as u16).collect())]
                }
            }
            GroupSpec::Alternating(n) => {
                if *n <= 2 {
                    vec![]
                } else if *n == 3 {
                    vec![cycle(vec![0, 1, 2])]
                } else if *n % 2 == 1 {
                    vec![cycle(vec![0, 1, 2]), cycle((0..*n as u16).collect())]
                } else {
                    vec![cycle(vec![0, 1, 2]), cycle((1..*n as u16).collect())]
                }
            }
            GroupSpec::Quaternion => vec![
                Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap(),
                Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 7, 3, 5]]).unwrap(),
            ],
            GroupSpec::Klein => vec![
                Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
                Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
            ],
            GroupSpec::Product(a, b) => {
                let da = a.degree() as u16;
                let db = b.degree() as u16;
                let mut gens = Vec::new();
                for g in a.generators() {
                    let mut images: Vec<u16> = g.images().to_vec();
                    images.extend(da..da + db);
                    gens.push(Permutation::from_images(images).unwrap());
                }
                for g in b.generators() {
                    let mut images: Vec<u16> = (0..da).collect();
                    images.extend(g.images().iter().map(|&x| x + da));
                    gens.push(Permutation::from_images(images).unwrap());
                }
                gens
            }
            GroupSpec::Explicit { generators, .. } => generators.clone(),
        }
    }

    /// Realises the spec as a concrete group.
    pub fn to_group(&self, order_cap: usize) -> Result<FiniteGroup> {
        generate_group_capped(self.degree(), self.generators(), order_cap)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C {n}"),
            GroupSpec::Dihedral(m) => write!(f, "D {m}"),
            GroupSpec::Symmetric(n) => write!(f, "S {n}"),
            GroupSpec::Alternating(n) => write!(f, "A {n}"),
            GroupSpec::Quaternion => write!(f, "Q 8"),
            GroupSpec::Klein => write!(f, "V 4"),
            GroupSpec::Product(a, b) => write!(f, "{a} x {b}"),
            GroupSpec::Explicit { degree, generators } => {
                write!(f, "perm {degree} : ")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser::new(text);
    let spec = parser.spec()?;
    parser.expect_end()?;
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

#[derive(Debug, PartialEq)]
enum Token<'a> {
    Word(&'a str),
    Number(u64),
    Colon,
    Comma,
    Open,
    Close,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Parser<'a> {
        Parser { text, pos: 0 }
    }

    fn error(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::ParseError {
            pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len()
            && self.text.as_bytes()[self.pos].is_ascii_whitespace()
        {
            self.pos += 1;
        }
    }

    /// Next token with its byte position and length, without consuming it.
    fn token_at(&mut self) -> Result<Option<(usize, usize, Token<'a>)>> {
        self.skip_ws();
        if self.pos >= self.text.len() {
            return Ok(None);
        }
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let (len, token) = match bytes[start] {
            b':' => (1, Token::Colon),
            b',' => (1, Token::Comma),
            b'(' => (1, Token::Open),
            b')' => (1, Token::Close),
            c if c.is_ascii_digit() => {
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let value: u64 = self.text[start..end]
                    .parse()
                    .map_err(|_| self.error(start, "number out of range"))?;
                (end - start, Token::Number(value))
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_alphabetic() {
                    end += 1;
                }
                (end - start, Token::Word(&self.text[start..end]))
            }
            c => {
                return Err(self.error(start, format!("unexpected character '{}'", c as char)));
            }
        };
        Ok(Some((start, len, token)))
    }

    fn peek(&mut self) -> Result<Option<(usize, Token<'a>)>> {
        Ok(self.token_at()?.map(|(start, _, token)| (start, token)))
    }

    fn bump(&mut self) -> Result<Option<(usize, Token<'a>)>> {
        match self.token_at()? {
            Some((start, len, token)) => {
                self.pos = start + len;
                Ok(Some((start, token)))
            }
            None => Ok(None),
        }
    }

    fn number(&mut self, what: &str) -> Result<u64> {
        match self.bump()? {
            Some((_, Token::Number(n))) => Ok(n),
            other => {
                let pos = other.map_or(self.text.len(), |(p, _)| p);
                Err(self.error(pos, format!("expected {what}")))
            }
        }
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let mut acc = self.atom()?;
        while let Some((_, Token::Word("x"))) = self.peek()? {
            self.bump()?;
            let rhs = self.atom()?;
            acc = GroupSpec::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<GroupSpec> {
        let Some((pos, token)) = self.bump()? else {
            return Err(self.error(self.text.len(), "expected a group spec"));
        };
        let Token::Word(word) = token else {
            return Err(self.error(pos, "expected a family name or 'perm'"));
        };
        match word {
            "C" => {
                let n = self.number("cyclic order")?;
                if n == 0 {
                    return Err(Error::UnsupportedSize("C 0 is not a group".into()));
                }
                Ok(GroupSpec::Cyclic(n as u32))
            }
            "D" => {
                let m = self.number("dihedral order")?;
                if m < 6 || m % 2 != 0 {
                    return Err(Error::UnsupportedSize(format!(
                        "D {m}: dihedral order must be even and at least 6 (use V 4 for order 4)"
                    )));
                }
                Ok(GroupSpec::Dihedral(m as u32))
            }
            "S" => {
                let n = self.number("symmetric degree")?;
                if n == 0 || n > 6 {
                    return Err(Error::UnsupportedSize(format!("S {n}: degree must be 1..6")));
                }
                Ok(GroupSpec::Symmetric(n as u32))
            }
            "A" => {
                let n = self.number("alternating degree")?;
                if n == 0 || n > 6 {
                    return Err(Error::UnsupportedSize(format!("A {n}: degree must be 1..6")));
                }
                Ok(GroupSpec::Alternating(n as u32))
            }
            "Q" => {
                let n = self.number("quaternion order")?;
                if n != 8 {
                    return Err(Error::UnsupportedSize(format!("Q {n}: only Q 8 is built in")));
                }
                Ok(GroupSpec::Quaternion)
            }
            "V" => {
                let n = self.number("Klein order")?;
                if n != 4 {
                    return Err(Error::UnsupportedSize(format!("V {n}: only V 4 is built in")));
                }
                Ok(GroupSpec::Klein)
            }
            "perm" => self.explicit(),
            other => Err(self.error(pos, format!("unknown family '{other}'"))),
        }
    }

    fn explicit(&mut self) -> Result<GroupSpec> {
        let degree = self.number("degree")? as usize;
        match self.bump()? {
            Some((_, Token::Colon)) => {}
            other => {
                let pos = other.map_or(self.text.len(), |(p, _)| p);
                return Err(self.error(pos, "expected ':' after the degree"));
            }
        }
        let mut generators = Vec::new();
        loop {
            generators.push(self.cycles(degree)?);
            match self.peek()? {
                Some((_, Token::Comma)) => {
                    self.bump()?;
                }
                _ => break,
            }
        }
        Ok(GroupSpec::Explicit { degree, generators })
    }

    fn cycles(&mut self, degree: usize) -> Result<Permutation> {
        let mut cycles: Vec<Vec<u16>> = Vec::new();
        let start = self.pos;
        while let Some((_, Token::Open)) = self.peek()? {
            self.bump()?;
            let mut cycle = Vec::new();
            loop {
                match self.bump()? {
                    Some((_, Token::Number(n))) => cycle.push(n as u16),
                    Some((_, Token::Close)) => break,
                    other => {
                        let pos = other.map_or(self.text.len(), |(p, _)| p);
                        return Err(self.error(pos, "expected a point or ')'"));
                    }
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        if cycles.is_empty() && self.pos == start {
            return Err(self.error(start, "expected a cycle list"));
        }
        Permutation::from_cycles(degree, &cycles)
            .map_err(|e| self.error(start, format!("{e}")))
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek()? {
            None => Ok(()),
            Some((pos, _)) => Err(self.error(pos, "trailing input after the group spec")),
        }
    }
}

/// A named entry of the built-in catalog.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub spec: &'static str,
}

impl CatalogEntry {
    pub fn parse(&self) -> GroupSpec {
        parse_group_spec(self.spec).expect("catalog specs are well-formed")
    }

    pub fn group(&self, order_cap: usize) -> Result<FiniteGroup> {
        self.parse().to_group(order_cap)
    }
}

/// The fixed catalog: cyclic groups through order 24, small abelian
/// products, dihedral groups through order 16, the quaternion group, small
/// symmetric and alternating groups, two mixed products, and the dicyclic
/// group of order 12.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    const CYCLIC: [CatalogEntry; 24] = [
        CatalogEntry { name: "C1", spec: "C 1" },
        CatalogEntry { name: "C2", spec: "C 2" },
        CatalogEntry { name: "C3", spec: "C 3" },
        CatalogEntry { name: "C4", spec: "C 4" },
        CatalogEntry { name: "C5", spec: "C 5" },
        CatalogEntry { name: "C6", spec: "C 6" },
        CatalogEntry { name: "C7", spec: "C 7" },
        CatalogEntry { name: "C8", spec: "C 8" },
        CatalogEntry { name: "C9", spec: "C 9" },
        CatalogEntry { name: "C10", spec: "C 10" },
        CatalogEntry { name: "C11", spec: "C 11" },
        CatalogEntry { name: "C12", spec: "C 12" },
        CatalogEntry { name: "C13", spec: "C 13" },
        CatalogEntry { name: "C14", spec: "C 14" },
        CatalogEntry { name: "C15", spec: "C 15" },
        CatalogEntry { name: "C16", spec: "C 16" },
        CatalogEntry { name: "C17", spec: "C 17" },
        CatalogEntry { name: "C18", spec: "C 18" },
        CatalogEntry { name: "C19", spec: "C 19" },
        CatalogEntry { name: "C20", spec: "C 20" },
        CatalogEntry { name: "C21", spec: "C 21" },
        CatalogEntry { name: "C22", spec: "C 22" },
        CatalogEntry { name: "C23", spec: "C 23" },
        CatalogEntry { name: "C24", spec: "C 24" },
    ];
    entries.extend_from_slice(&CYCLIC);
    entries.extend_from_slice(&[
        CatalogEntry { name: "C2xC2", spec: "C 2 x C 2" },
        CatalogEntry { name: "C2xC4", spec: "C 2 x C 4" },
        CatalogEntry { name: "C2xC2xC2", spec: "C 2 x C 2 x C 2" },
        CatalogEntry { name: "C3xC3", spec: "C 3 x C 3" },
        CatalogEntry { name: "D6", spec: "D 6" },
        CatalogEntry { name: "D8", spec: "D 8" },
        CatalogEntry { name: "D10", spec: "D 10" },
        CatalogEntry { name: "D12", spec: "D 12" },
        CatalogEntry { name: "D14", spec: "D 14" },
        CatalogEntry { name: "D16", spec: "D 16" },
        CatalogEntry { name: "Q8", spec: "Q 8" },
        CatalogEntry { name: "S3", spec: "S 3" },
        CatalogEntry { name: "S4", spec: "S 4" },
        CatalogEntry { name: "S5", spec: "S 5" },
        CatalogEntry { name: "A4", spec: "A 4" },
        CatalogEntry { name: "A5", spec: "A 5" },
        CatalogEntry { name: "S3xC3", spec: "S 3 x C 3" },
        CatalogEntry { name: "A4xC2", spec: "A 4 x C 2" },
        CatalogEntry { name: "C3:C4", spec: "perm 7 : (0 1 2), (1 2)(3 4 5 6)" },
    ]);
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_realisations_have_expected_orders() {
        for (spec, order) in [
            ("C 1", 1),
            ("C 12", 12),
            ("D 6", 6),
            ("D 16", 16),
            ("S 3", 6),
            ("S 5", 120),
            ("A 3", 3),
            ("A 4", 12),
            ("A 5", 60),
            ("Q 8", 8),
            ("V 4", 4),
            ("C 2 x C 2", 4),
            ("S 3 x C 3", 18),
            ("A 4 x C 2", 24),
            ("perm 4 : (0 1)(2 3), (0 2)(1 3)", 4),
            ("perm 7 : (0 1 2), (1 2)(3 4 5 6)", 12),
        ] {
            let g = parse_group_spec(spec).unwrap().to_group(200).unwrap();
            assert_eq!(g.order(), order, "{spec}");
        }
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let g = parse_group_spec("Q 8").unwrap().to_group(200).unwrap();
        assert_eq!(g.order(), 8);
        let involutions = (0..8).filter(|&i| g.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn dicyclic_entry_has_unique_involution() {
        let g = parse_group_spec("perm 7 : (0 1 2), (1 2)(3 4 5 6)")
            .unwrap()
            .to_group(200)
            .unwrap();
        assert_eq!(g.order(), 12);
        let involutions = (0..12).filter(|&i| g.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn parse_render_round_trip() {
        for text in [
            "S 3",
            "C 2 x C 2",
            "C 2 x C 4 x C 8",
            "D 12",
            "A 5",
            "Q 8",
            "V 4",
            "perm 4 : (0 1)(2 3), (0 2)(1 3)",
            "perm 7 : (0 1 2), (1 2)(3 4 5 6)",
            "perm 3 : (0 1 2) x C 2",
        ] {
            let spec = parse_group_spec(text).unwrap();
            let rendered = spec.to_string();
            assert_eq!(parse_group_spec(&rendered).unwrap(), spec, "{text}");
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_group_spec("C x") {
            Err(Error::ParseError { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_group_spec("D 4"),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(matches!(
            parse_group_spec("S 7"),
            Err(Error::UnsupportedSize(_))
        ));
        assert!(parse_group_spec("perm 3 : (0 5)").is_err());
        assert!(matches!(
            parse_group_spec("S 3 garbage"),
            Err(Error::ParseError { .. })
        ));
    }

    #[test]
    fn catalog_realises_with_documented_orders() {
        for entry in catalog() {
            let g = entry.group(200).unwrap();
            assert!(g.order() <= 120, "{}", entry.name);
            assert_eq!(g.key(), entry.group(200).unwrap().key());
        }
    }
}
