//! Human-readable vertex labels such as `3` or `(5,1)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Label {
    Int(i64),
    Pair(i64, i64),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(a) => write!(f, "{a}"),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let bad = || Error::parse(1, 1, format!("invalid label {s:?}"));
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().parse().map_err(|_| bad())?;
            Ok(Label::Pair(a, b))
        } else {
            t.parse().map(Label::Int).map_err(|_| bad())
        }
    }
}

impl From<Label> for String {
    fn from(l: Label) -> String {
        l.to_string()
    }
}

impl TryFrom<String> for Label {
    type Error = Error;

    fn try_from(s: String) -> Result<Label> {
        s.parse()
    }
}

/// A bijection between vertex ids `0..n` and labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl LabelMap {
    pub fn new(labels: Vec<Label>) -> Result<LabelMap> {
        let mut index = HashMap::with_capacity(labels.len());
        for (id, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), id).is_some() {
                return Err(Error::InvalidArgument(format!("duplicate label {l}")));
            }
        }
        Ok(LabelMap { labels, index })
    }

    /// Labels `0, 1, …, n-1`.
    pub fn integers(n: usize) -> LabelMap {
        LabelMap::new((0..n as i64).map(Label::Int).collect()).expect("distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> &Label {
        &self.labels[id]
    }

    pub fn id(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!("(5,1)".parse::<Label>().unwrap(), Label::Pair(5, 1));
        assert_eq!(" ( 5 , 1 ) ".parse::<Label>().unwrap(), Label::Pair(5, 1));
        assert_eq!("12".parse::<Label>().unwrap(), Label::Int(12));
        assert_eq!(Label::Pair(0, 0).to_string(), "(0,0)");
        assert!("(1 2)".parse::<Label>().is_err());
    }

    #[test]
    fn map_round_trip() {
        let map = LabelMap::new(vec![Label::Int(1), Label::Pair(3, 1), Label::Int(7)]).unwrap();
        for id in 0..map.len() {
            assert_eq!(map.id(map.label(id)), Some(id));
        }
        assert!(LabelMap::new(vec![Label::Int(1), Label::Int(1)]).is_err());
    }

    #[test]
    fn serde_as_strings() {
        let json = serde_json::to_string(&vec![Label::Int(2), Label::Pair(4, 1)]).unwrap();
        assert_eq!(json, r#"["2","(4,1)"]"#);
        let back: Vec<Label> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![Label::Int(2), Label::Pair(4, 1)]);
    }
}
