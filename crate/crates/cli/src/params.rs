//! Parameter value grammar shared by all subcommands.
//!
//! A value is a comma-separated list of items. Each item is an integer, an
//! inclusive range `a..b`, or a linear expression in `k` such as `k+1`,
//! `2k` or `3*k-1` (only meaningful where `k` is also given). The keywords
//! `all` (residues) and `both` (parity) are handled by the caller.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Range(u64, u64),
    /// `mul * k + add`; a plain integer has `mul = 0`.
    Linear { mul: i64, add: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueSet {
    All,
    Both,
    Items(Vec<Item>),
}

fn parse_int(s: &str, raw: &str) -> Result<i64, UsageError> {
    s.trim()
        .parse()
        .map_err(|_| usage(format!("invalid value `{raw}`")))
}

fn parse_linear(item: &str) -> Result<Item, UsageError> {
    let s: String = item.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(pos) = s.find('k') else {
        return Ok(Item::Linear {
            mul: 0,
            add: parse_int(&s, item)?,
        });
    };
    let head = s[..pos].trim_end_matches('*');
    let mul = match head {
        "" => 1,
        h => parse_int(h, item)?,
    };
    let tail = &s[pos + 1..];
    let add = match tail.chars().next() {
        None => 0,
        Some('+') => parse_int(&tail[1..], item)?,
        Some('-') => -parse_int(&tail[1..], item)?,
        Some(_) => return Err(usage(format!("invalid expression `{item}`"))),
    };
    Ok(Item::Linear { mul, add })
}

impl ValueSet {
    pub fn parse(raw: &str) -> Result<Self, UsageError> {
        let raw = raw.trim();
        match raw {
            "all" => return Ok(ValueSet::All),
            "both" => return Ok(ValueSet::Both),
            "" => return Err(usage("empty parameter value")),
            _ => {}
        }
        let items = raw
            .split(',')
            .map(|part| {
                let part = part.trim();
                match part.split_once("..") {
                    Some((lo, hi)) => {
                        let lo = parse_int(lo, part)?;
                        let hi = parse_int(hi, part)?;
                        if lo < 0 || hi < 0 {
                            return Err(usage(format!("negative bound in `{part}`")));
                        }
                        Ok(Item::Range(lo as u64, hi as u64))
                    }
                    None => parse_linear(part),
                }
            })
            .collect::<Result<_, _>>()?;
        Ok(ValueSet::Items(items))
    }

    /// Expands to concrete values. `k` is substituted into linear items;
    /// `all` needs `all_upto` (exclusive bound), `both` gives `0, 1`.
    pub fn values(&self, k: Option<u64>, all_upto: Option<u64>) -> Result<Vec<u64>, UsageError> {
        match self {
            ValueSet::All => all_upto
                .map(|n| (0..n).collect())
                .ok_or_else(|| usage("`all` is only valid for --b")),
            ValueSet::Both => Ok(vec![0, 1]),
            ValueSet::Items(items) => {
                let mut out = Vec::new();
                for item in items {
                    match *item {
                        Item::Range(lo, hi) => out.extend(lo..=hi),
                        Item::Linear { mul: 0, add } => out.push(non_negative(add)?),
                        Item::Linear { mul, add } => {
                            let k = k.ok_or_else(|| usage("expression in k needs --k"))?;
                            out.push(non_negative(mul * k as i64 + add)?);
                        }
                    }
                }
                Ok(out)
            }
        }
    }
}

fn non_negative(v: i64) -> Result<u64, UsageError> {
    u64::try_from(v).map_err(|_| usage(format!("negative parameter value {v}")))
}

pub fn parse_opt(raw: &Option<String>) -> Result<Option<ValueSet>, UsageError> {
    raw.as_deref().map(ValueSet::parse).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(raw: &str, k: Option<u64>, all: Option<u64>) -> Vec<u64> {
        ValueSet::parse(raw).unwrap().values(k, all).unwrap()
    }

    #[test]
    fn ranges_and_lists() {
        assert_eq!(vals("1..6", None, None), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(vals("3", None, None), vec![3]);
        assert_eq!(vals("1,4..5,9", None, None), vec![1, 4, 5, 9]);
        assert!(vals("5..3", None, None).is_empty());
    }

    #[test]
    fn expressions_in_k() {
        assert_eq!(vals("k+1", Some(4), None), vec![5]);
        assert_eq!(vals("2k", Some(4), None), vec![8]);
        assert_eq!(vals("3*k-1", Some(4), None), vec![11]);
        assert_eq!(vals("k+1,2k", Some(3), None), vec![4, 6]);
        assert!(ValueSet::parse("k+1").unwrap().values(None, None).is_err());
    }

    #[test]
    fn keywords() {
        assert_eq!(vals("all", None, Some(3)), vec![0, 1, 2]);
        assert_eq!(vals("both", None, None), vec![0, 1]);
        assert!(ValueSet::parse("all").unwrap().values(None, None).is_err());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "1..", "-2..3", "k*", "2k+", "kk"] {
            assert!(
                ValueSet::parse(bad).and_then(|v| v.values(Some(1), None)).is_err(),
                "{bad}"
            );
        }
        assert!(ValueSet::parse("k-5").unwrap().values(Some(1), None).is_err());
    }
}
