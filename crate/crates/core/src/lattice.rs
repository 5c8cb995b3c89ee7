//! Monotone grid paths that never cross the diagonal, and ±1 ballot sequences.
//!
//! A path from `(0, 0)` to `(n, n)` maps `H -> 0`, `V -> 1`. A ±1 sequence maps
//! `+1 -> 0`, `-1 -> 1`. Vote tallies (the first candidate never behind) are
//! ±1 sequences verbatim, and a mountain range is the altitude profile of the
//! sequence itself, so neither gets a codec of its own.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::sequence::CatalanSequence;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("invalid symbol {symbol:?} at index {index}")]
    InvalidSymbol { index: usize, symbol: char },
    #[error("value {value} at index {index}, expected 1 or -1")]
    InvalidValue { index: usize, value: i8 },
    #[error("odd length {len}")]
    OddLength { len: usize },
    /// 1-based step count at which the path first goes above the diagonal.
    #[error("path crosses the diagonal after step {0}")]
    CrossesDiagonal(usize),
    #[error("path ends at ({horizontal}, {vertical}), not on the diagonal")]
    Unbalanced { horizontal: usize, vertical: usize },
    /// 1-based position of the first negative partial sum.
    #[error("partial sum negative at position {0}")]
    NegativePartialSum(usize),
    #[error("total sum {0}, expected 0")]
    NonzeroTotal(isize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    H,
    V,
}

/// Lattice path of `n` horizontal and `n` vertical unit steps, never above the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GridPath {
    steps: Vec<Step>,
}

impl GridPath {
    pub fn new(steps: Vec<Step>) -> Result<Self, LatticeError> {
        if !steps.len().is_multiple_of(2) {
            return Err(LatticeError::OddLength { len: steps.len() });
        }
        let (mut horizontal, mut vertical) = (0, 0);
        for (i, step) in steps.iter().enumerate() {
            match step {
                Step::H => horizontal += 1,
                Step::V => vertical += 1,
            }
            if vertical > horizontal {
                return Err(LatticeError::CrossesDiagonal(i + 1));
            }
        }
        if horizontal != vertical {
            return Err(LatticeError::Unbalanced {
                horizontal,
                vertical,
            });
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// `#H - #V` after each prefix: the distance below the diagonal.
    pub fn deficit_profile(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let (mut h, mut v) = (0usize, 0usize);
        out.push(0);
        for step in &self.steps {
            match step {
                Step::H => h += 1,
                Step::V => v += 1,
            }
            out.push(h - v);
        }
        out
    }
}

impl fmt::Display for GridPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::H => "H",
                Step::V => "V",
            })?;
        }
        Ok(())
    }
}

impl FromStr for GridPath {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(index, symbol)| match symbol {
                'H' => Ok(Step::H),
                'V' => Ok(Step::V),
                _ => Err(LatticeError::InvalidSymbol { index, symbol }),
            })
            .collect::<Result<_, _>>()?;
        GridPath::new(steps)
    }
}

pub fn encode_path(p: &GridPath) -> CatalanSequence {
    CatalanSequence::from_trusted(p.steps.iter().map(|s| *s == Step::V).collect())
}

pub fn decode_path(s: &CatalanSequence) -> GridPath {
    GridPath {
        steps: s
            .bits()
            .iter()
            .map(|&b| if b { Step::V } else { Step::H })
            .collect(),
    }
}

/// Sequence of ±1 values with nonnegative partial sums and total zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlusMinusSequence {
    values: Vec<i8>,
}

impl PlusMinusSequence {
    /// Every value must be `1` or `-1`.
    pub fn new(values: Vec<i8>) -> Result<Self, LatticeError> {
        if let Some(index) = values.iter().position(|v| v.abs() != 1) {
            return Err(LatticeError::InvalidValue {
                index,
                value: values[index],
            });
        }
        if !values.len().is_multiple_of(2) {
            return Err(LatticeError::OddLength { len: values.len() });
        }
        let mut sum: isize = 0;
        for (i, &v) in values.iter().enumerate() {
            sum += v as isize;
            if sum < 0 {
                return Err(LatticeError::NegativePartialSum(i + 1));
            }
        }
        if sum != 0 {
            return Err(LatticeError::NonzeroTotal(sum));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    /// Reads the values as votes, `+1` for the first candidate, and reports
    /// whether the first candidate is never behind.
    pub fn first_never_behind(&self) -> bool {
        let (mut first, mut second) = (0usize, 0usize);
        self.values.iter().all(|&v| {
            if v > 0 {
                first += 1;
            } else {
                second += 1;
            }
            first >= second
        })
    }
}

impl fmt::Display for PlusMinusSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.values {
            f.write_str(if v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for PlusMinusSequence {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .chars()
            .enumerate()
            .map(|(index, symbol)| match symbol {
                '+' => Ok(1),
                '-' | '\u{2212}' => Ok(-1),
                _ => Err(LatticeError::InvalidSymbol { index, symbol }),
            })
            .collect::<Result<_, _>>()?;
        PlusMinusSequence::new(values)
    }
}

/// `+1 -> 0`, `-1 -> 1`.
pub fn encode_pm(x: &PlusMinusSequence) -> CatalanSequence {
    CatalanSequence::from_trusted(x.values.iter().map(|&v| v < 0).collect())
}

pub fn decode_pm(s: &CatalanSequence) -> PlusMinusSequence {
    PlusMinusSequence {
        values: s.bits().iter().map(|&b| if b { -1 } else { 1 }).collect(),
    }
}
