use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One slot `s` (or `s̄` when `alternating`) of a multi-index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub exponent: u32,
    pub alternating: bool,
}

impl Slot {
    pub fn plain(exponent: u32) -> Self {
        Slot {
            exponent,
            alternating: false,
        }
    }

    pub fn bar(exponent: u32) -> Self {
        Slot {
            exponent,
            alternating: true,
        }
    }
}

/// A multi-index `(s_1, …, s_l)` for the sum over `n_1 > n_2 > … > n_l ≥ 1`,
/// where slot `i` contributes `n_i^{−s_i}` and, if barred, `(−1)^{n_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MzvIndex {
    slots: Vec<Slot>,
}

impl MzvIndex {
    pub fn new(slots: Vec<Slot>) -> Result<Self> {
        let idx = MzvIndex { slots };
        idx.check_admissible()?;
        Ok(idx)
    }

    /// `{pattern}^times`, expanded.
    pub fn repeat(pattern: &[Slot], times: usize) -> Result<Self> {
        Self::new(
            pattern
                .iter()
                .copied()
                .cycle()
                .take(pattern.len() * times)
                .collect(),
        )
    }

    /// `{3}^l`
    pub fn threes(l: usize) -> Result<Self> {
        Self::repeat(&[Slot::plain(3)], l)
    }

    /// `{2,1}^l`
    pub fn two_ones(l: usize) -> Result<Self> {
        Self::repeat(&[Slot::plain(2), Slot::plain(1)], l)
    }

    /// `{2̄,1}^l`
    pub fn bar_two_ones(l: usize) -> Result<Self> {
        Self::repeat(&[Slot::bar(2), Slot::plain(1)], l)
    }

    /// `{3,1}^l`
    pub fn three_ones(l: usize) -> Result<Self> {
        Self::repeat(&[Slot::plain(3), Slot::plain(1)], l)
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    pub fn depth(&self) -> usize {
        self.slots.len()
    }

    pub fn weight(&self) -> u32 {
        self.slots.iter().map(|s| s.exponent).sum()
    }

    fn check_admissible(&self) -> Result<()> {
        match self.slots.first() {
            None => Err(Error::InadmissibleIndex("empty index".into())),
            Some(s) if s.exponent == 0 => Err(Error::InadmissibleIndex(format!("{self}"))),
            Some(s) if s.exponent < 2 && !s.alternating => {
                Err(Error::InadmissibleIndex(format!("{self} diverges")))
            }
            _ if self.slots.iter().any(|s| s.exponent == 0) => Err(Error::InadmissibleIndex(
                format!("{self} has a zero exponent"),
            )),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MzvIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .slots
            .iter()
            .map(|s| format!("{}{}", s.exponent, if s.alternating { "~" } else { "" }))
            .collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Grammar: comma-separated slots `s` or `s~` (barred), and groups
/// `{slots}^m` for repetition, e.g. `2~,1` or `{2,1}^3`.
impl FromStr for MzvIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let slots = parse_list(s.trim())?;
        MzvIndex::new(slots)
    }
}

fn parse_list(s: &str) -> Result<Vec<Slot>> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced braces in {s:?}")))?
            }
            ',' if depth == 0 => {
                out.extend(parse_item(&s[start..i])?);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced braces in {s:?}")));
    }
    out.extend(parse_item(&s[start..])?);
    Ok(out)
}

fn parse_item(item: &str) -> Result<Vec<Slot>> {
    let item = item.trim();
    if let Some(rest) = item.strip_prefix('{') {
        let (inner, times) = rest
            .rsplit_once("}^")
            .ok_or_else(|| Error::Parse(format!("expected {{...}}^m, got {item:?}")))?;
        let times: usize = times
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad repetition count in {item:?}")))?;
        let pattern = parse_list(inner)?;
        return Ok(pattern
            .iter()
            .copied()
            .cycle()
            .take(pattern.len() * times)
            .collect());
    }
    let (digits, alternating) = match item.strip_suffix('~') {
        Some(d) => (d, true),
        None => (item, false),
    };
    let exponent = digits
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad slot {item:?}")))?;
    Ok(vec![Slot {
        exponent,
        alternating,
    }])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(
            "2~,1".parse::<MzvIndex>().unwrap(),
            MzvIndex::bar_two_ones(1).unwrap()
        );
        assert_eq!(
            "{2,1}^3".parse::<MzvIndex>().unwrap(),
            MzvIndex::two_ones(3).unwrap()
        );
        let mixed: MzvIndex = "4, {2~,1}^2 ,3".parse().unwrap();
        assert_eq!(mixed.depth(), 6);
        assert_eq!(mixed.weight(), 4 + 6 + 3);
        assert_eq!(mixed.to_string(), "4,2~,1,2~,1,3");
        assert!("{2,1".parse::<MzvIndex>().is_err());
        assert!("2,x".parse::<MzvIndex>().is_err());
    }

    #[test]
    fn admissibility() {
        assert!(matches!(
            "1,2".parse::<MzvIndex>(),
            Err(Error::InadmissibleIndex(_))
        ));
        assert!("1~".parse::<MzvIndex>().is_ok());
        assert!(matches!(
            MzvIndex::threes(0),
            Err(Error::InadmissibleIndex(_))
        ));
        assert!(matches!(
            "2,0".parse::<MzvIndex>(),
            Err(Error::InadmissibleIndex(_))
        ));
    }
}
