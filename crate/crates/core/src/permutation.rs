//! Permutations of vertex ids, with cycle-notation parsing and printing.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::labels::{Label, LabelMap};

/// A bijection on `0..n`, stored as its image array (`image[v] = π(v)`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Permutation(format!("{v} appears twice in image")));
            }
        }
        Ok(Permutation { image })
    }

    /// Uniformly random permutation of `0..n`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
        let mut image: Vec<usize> = (0..n).collect();
        image.shuffle(rng);
        Permutation { image }
    }

    /// Parses cycle notation over plain integer ids, e.g. `"(1 3)(4 6)"`.
    pub fn parse(n: usize, text: &str) -> Result<Permutation> {
        parse_cycles(n, text, None)
    }

    /// Parses cycle notation whose entries are labels resolved through `labels`,
    /// e.g. `"(2 6 (5,1) (3,1))"`.
    pub fn parse_labeled(labels: &LabelMap, text: &str) -> Result<Permutation> {
        parse_cycles(labels.len(), text, Some(labels))
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Non-trivial cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] || self.image[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut v = self.image[start];
            while v != start {
                seen[v] = true;
                cycle.push(v);
                v = self.image[v];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation, writing labels instead of ids when a map is given.
    /// The identity prints as `()`.
    pub fn to_cycle_string(&self, labels: Option<&LabelMap>) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for cycle in cycles {
            s.push('(');
            for (i, v) in cycle.into_iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                match labels {
                    Some(map) => s.push_str(&map.label(v).to_string()),
                    None => s.push_str(&v.to_string()),
                }
            }
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string(None))
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    labels: Option<&'a LabelMap>,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == ',') {
            self.pos += 1;
        }
    }

    fn skip_whitespace(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(Error::parse(
                1,
                self.column(),
                format!("expected '{want}', found '{c}'"),
            )),
            None => Err(Error::parse(
                1,
                self.column(),
                format!("expected '{want}', found end of input"),
            )),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse()
            .map_err(|_| Error::parse(1, start + 1, "expected an integer"))
    }

    fn element(&mut self) -> Result<(usize, usize)> {
        let col = self.column();
        let label = if self.peek() == Some('(') {
            self.pos += 1;
            self.skip_whitespace();
            let a = self.integer()?;
            self.skip_whitespace();
            self.expect(',')?;
            self.skip_whitespace();
            let b = self.integer()?;
            self.skip_whitespace();
            self.expect(')')?;
            Label::Pair(a, b)
        } else {
            Label::Int(self.integer()?)
        };
        let id = match (self.labels, &label) {
            (Some(map), l) => map
                .id(l)
                .ok_or_else(|| Error::parse(1, col, format!("unknown label {l}")))?,
            (None, Label::Int(v)) => usize::try_from(*v)
                .map_err(|_| Error::parse(1, col, format!("negative vertex id {v}")))?,
            (None, Label::Pair(..)) => {
                return Err(Error::parse(
                    1,
                    col,
                    "tuple labels need a graph with a label map",
                ))
            }
        };
        Ok((id, col))
    }
}

fn parse_cycles(n: usize, text: &str, labels: Option<&LabelMap>) -> Result<Permutation> {
    let mut cur = Cursor {
        chars: text.chars().collect(),
        pos: 0,
        labels,
    };
    let mut image: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    loop {
        cur.skip_whitespace();
        if cur.peek().is_none() {
            break;
        }
        cur.expect('(')?;
        let mut cycle = Vec::new();
        loop {
            cur.skip_separators();
            match cur.peek() {
                Some(')') => {
                    cur.pos += 1;
                    break;
                }
                None => return Err(Error::parse(1, cur.column(), "unterminated cycle")),
                _ => {}
            }
            let (id, col) = cur.element()?;
            if id >= n {
                return Err(Error::VertexOutOfRange { id, n });
            }
            if std::mem::replace(&mut used[id], true) {
                return Err(Error::Permutation(format!(
                    "element at column {col} appears more than once"
                )));
            }
            cycle.push(id);
        }
        for (i, &v) in cycle.iter().enumerate() {
            image[v] = cycle[(i + 1) % cycle.len()];
        }
    }
    Ok(Permutation { image })
}
