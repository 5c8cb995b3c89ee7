//! Non-crossing perfect matchings of `2n` labeled points on a circle.
//!
//! A chord `(i, j)` with `i < j` puts `0` at position `i` and `1` at position
//! `j` (1-based). Decoding repeatedly takes the leftmost adjacent `0, 1` among
//! the positions not yet matched, keeping original labels.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::sequence::CatalanSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("malformed chord list at {position}: expected {expected}")]
    Syntax {
        position: usize,
        expected: &'static str,
    },
    #[error("chord {0}-{1} is degenerate")]
    Degenerate(usize, usize),
    #[error("point {point} outside 1..={max}")]
    PointOutOfRange { point: usize, max: usize },
    #[error("point {0} is used by more than one chord")]
    PointReused(usize),
    #[error("chords {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
}

/// A non-crossing perfect matching on points `1..=2n`, chords sorted by smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ChordDiagram {
    chords: Vec<(usize, usize)>,
}

impl ChordDiagram {
    /// Accepts endpoints in either order. The number of chords fixes `n`.
    pub fn new(chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, ChordError> {
        let mut chords: Vec<(usize, usize)> = chords
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        let max = 2 * chords.len();
        let mut partner = vec![0usize; max + 1];
        for &(i, j) in &chords {
            if i == j {
                return Err(ChordError::Degenerate(i, j));
            }
            for p in [i, j] {
                if p == 0 || p > max {
                    return Err(ChordError::PointOutOfRange { point: p, max });
                }
                if partner[p] != 0 {
                    return Err(ChordError::PointReused(p));
                }
            }
            partner[i] = j;
            partner[j] = i;
        }
        chords.sort_unstable();
        // sweeping the circle, each chord must close the innermost open one
        let mut open: Vec<usize> = Vec::new();
        for p in 1..=max {
            if partner[p] > p {
                open.push(p);
            } else {
                let start = open.pop().expect("perfect matching");
                if start != partner[p] {
                    let (x, y) = ((partner[p], p), (start, partner[start]));
                    return Err(ChordError::Crossing(x.min(y), x.max(y)));
                }
            }
        }
        debug_assert!(chords.iter().all(|(i, j)| (j - i) % 2 == 1));
        Ok(Self { chords })
    }

    pub fn chords(&self) -> &[(usize, usize)] {
        &self.chords
    }

    pub fn n(&self) -> usize {
        self.chords.len()
    }
}

/// Text form: comma-separated `i-j` pairs, e.g. `1-8,2-7,3-4,5-6`.
impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (i, j)) in self.chords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}-{j}")?;
        }
        Ok(())
    }
}

impl FromStr for ChordDiagram {
    type Err = ChordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Self::default());
        }
        let mut chords = Vec::new();
        let mut offset = 0;
        for item in s.split(',') {
            let number = |t: &str, at: usize| {
                t.trim().parse::<usize>().map_err(|_| ChordError::Syntax {
                    position: at,
                    expected: "a point number",
                })
            };
            let Some((a, b)) = item.split_once('-') else {
                return Err(ChordError::Syntax {
                    position: offset,
                    expected: "'i-j'",
                });
            };
            chords.push((number(a, offset)?, number(b, offset + a.len() + 1)?));
            offset += item.len() + 1;
        }
        ChordDiagram::new(chords)
    }
}

pub fn encode_chords(d: &ChordDiagram) -> CatalanSequence {
    let mut bits = vec![false; 2 * d.n()];
    for &(_, j) in &d.chords {
        bits[j - 1] = true;
    }
    CatalanSequence::from_trusted(bits)
}

/// Leftmost-`01` extraction, returning chords in the order they are found.
pub fn extract_chords(s: &CatalanSequence) -> Vec<(usize, usize)> {
    let bits = s.bits();
    let len = bits.len();
    // doubly linked list over the unmatched positions
    let mut next: Vec<usize> = (1..=len).collect();
    let mut prev: Vec<usize> = (0..len).map(|i| i.wrapping_sub(1)).collect();
    let none = usize::MAX;
    if len > 0 {
        next[len - 1] = none;
    }
    let mut head = if len > 0 { 0 } else { none };
    let mut found = Vec::with_capacity(len / 2);
    let mut cursor = head;
    while head != none {
        // everything before cursor holds no adjacent 01
        let mut i = cursor;
        loop {
            assert!(i != none, "no 01 left in a nonempty valid remainder");
            let j = next[i];
            assert!(j != none, "no 01 left in a nonempty valid remainder");
            if !bits[i] && bits[j] {
                break;
            }
            i = j;
        }
        let j = next[i];
        found.push((i + 1, j + 1));
        let (before, after) = (prev[i], next[j]);
        if before == none {
            head = after;
        } else {
            next[before] = after;
        }
        if after != none {
            prev[after] = before;
        }
        cursor = if before == none { head } else { before };
    }
    found
}

pub fn decode_chords(s: &CatalanSequence) -> ChordDiagram {
    let mut chords = extract_chords(s);
    chords.sort_unstable();
    ChordDiagram { chords }
}
