use std::fmt;

use crate::error::ParseError;

/// A word in the free group on single-character generators, kept freely
/// reduced: exponents are nonzero and adjacent letters differ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<(char, i32)>,
}

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord { letters: Vec::new() }
    }

    pub fn new(letters: impl IntoIterator<Item = (char, i32)>) -> Self {
        let mut w = GroupWord::empty();
        for (g, k) in letters {
            w.push(g, k);
        }
        w
    }

    fn push(&mut self, g: char, k: i32) {
        if k == 0 {
            return;
        }
        if let Some(last) = self.letters.last_mut() {
            if last.0 == g {
                last.1 += k;
                if last.1 == 0 {
                    self.letters.pop();
                }
                return;
            }
        }
        self.letters.push((g, k));
    }

    /// Whitespace-separated syllables such as `b^-1 l^2 b`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut w = GroupWord::empty();
        for tok in text.split_whitespace() {
            let mut chars = tok.chars();
            let g = chars.next().ok_or(ParseError::UnexpectedEnd)?;
            if !g.is_ascii_alphabetic() {
                return Err(ParseError::UnexpectedChar(g, 0));
            }
            let rest: String = chars.collect();
            let k = if rest.is_empty() {
                1
            } else {
                let e = rest.strip_prefix('^').ok_or_else(|| ParseError::BadExponent(rest.clone()))?;
                e.parse::<i32>().map_err(|_| ParseError::BadExponent(e.to_string()))?
            };
            w.push(g, k);
        }
        Ok(w)
    }

    pub fn letters(&self) -> &[(char, i32)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.iter().map(|(_, k)| k.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut w = self.clone();
        for &(g, k) in &other.letters {
            w.push(g, k);
        }
        w
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord::new(self.letters.iter().rev().map(|&(g, k)| (g, -k)))
    }

    pub fn pow(&self, n: i32) -> GroupWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut w = GroupWord::empty();
        for _ in 0..n.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, k)| if k == 1 { g.to_string() } else { format!("{g}^{k}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        let w = GroupWord::parse("b^2 b^-2 l l").unwrap();
        assert_eq!(w.letters(), &[('l', 2)]);
        assert_eq!(w.to_string(), "l^2");
        assert!(GroupWord::parse("b^x").is_err());
    }

    #[test]
    fn inverse_concat_is_empty() {
        let w = GroupWord::parse("b^-1 l^-1 b^-1 l^-1 b^2 l").unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
        assert_eq!(w.len(), 7);
    }
}
