//! Catalan sequences: binary words of length `2n` with `n` zeros and `n` ones
//! in which no prefix contains more ones than zeros.
//!
//! This is the interchange form shared by every family codec in the crate.
//! The text form is a string over `'0'` and `'1'` without separators.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::counting;

/// Largest semilength [`enumerate`] materializes by default. `C_16` is about 35 million.
pub const DEFAULT_ENUMERATION_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("invalid symbol {symbol:?} at index {index}, expected '0' or '1'")]
    InvalidSymbol { index: usize, symbol: char },
    #[error("odd length {len}")]
    OddLength { len: usize },
    /// 1-based length of the first prefix with more ones than zeros.
    #[error("prefix violation at index {0}: more 1s than 0s")]
    PrefixViolation(usize),
    #[error("count mismatch: {zeros} zeros, {ones} ones")]
    CountMismatch { zeros: usize, ones: usize },
    #[error("semilength {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("index {index} out of range for semilength {n}")]
    IndexOutOfRange { n: usize, index: BigUint },
}

/// A validated Catalan sequence. `false` is the symbol 0, `true` the symbol 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CatalanSequence {
    bits: Vec<bool>,
}

impl CatalanSequence {
    /// The empty sequence, semilength 0.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates `bits` against the prefix and count conditions.
    pub fn new(bits: Vec<bool>) -> Result<Self, SequenceError> {
        check(&bits)?;
        Ok(Self { bits })
    }

    /// Builds a sequence from bits a codec has produced by construction.
    pub(crate) fn from_trusted(bits: Vec<bool>) -> Self {
        debug_assert_eq!(check(&bits), Ok(()), "codec produced an invalid sequence");
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn semilength(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn altitude_profile(&self) -> AltitudeProfile {
        altitude_profile(self)
    }
}

impl fmt::Display for CatalanSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CatalanSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        validate(&parse_bits(s)?)
    }
}

/// Parses a `'0'`/`'1'` string into raw bits without checking the Catalan conditions.
pub fn parse_bits(s: &str) -> Result<Vec<bool>, SequenceError> {
    s.chars()
        .enumerate()
        .map(|(index, symbol)| match symbol {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(SequenceError::InvalidSymbol { index, symbol }),
        })
        .collect()
}

fn check(bits: &[bool]) -> Result<(), SequenceError> {
    if !bits.len().is_multiple_of(2) {
        return Err(SequenceError::OddLength { len: bits.len() });
    }
    let (mut zeros, mut ones) = (0usize, 0usize);
    for (i, &b) in bits.iter().enumerate() {
        if b {
            ones += 1;
        } else {
            zeros += 1;
        }
        if ones > zeros {
            return Err(SequenceError::PrefixViolation(i + 1));
        }
    }
    if zeros != ones {
        return Err(SequenceError::CountMismatch { zeros, ones });
    }
    Ok(())
}

/// Accepts `bits` iff every prefix has at most as many 1s as 0s and the totals agree.
pub fn validate(bits: &[bool]) -> Result<CatalanSequence, SequenceError> {
    CatalanSequence::new(bits.to_vec())
}

/// Running balance `#0 - #1` after each prefix, including the empty prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltitudeProfile {
    heights: Vec<usize>,
}

impl AltitudeProfile {
    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn max_height(&self) -> usize {
        self.heights.iter().copied().max().unwrap_or(0)
    }
}

pub fn altitude_profile(s: &CatalanSequence) -> AltitudeProfile {
    let mut heights = Vec::with_capacity(s.len() + 1);
    let mut h = 0usize;
    heights.push(h);
    for &b in s.bits() {
        // validity keeps h from underflowing
        h = if b { h - 1 } else { h + 1 };
        heights.push(h);
    }
    AltitudeProfile { heights }
}

/// Lazily yields every sequence of semilength `n` in lexicographic order (0 < 1).
#[derive(Debug, Clone)]
pub struct Sequences {
    current: Option<Vec<bool>>,
}

impl Sequences {
    pub fn new(n: usize) -> Self {
        let mut first = vec![false; n];
        first.resize(2 * n, true);
        Self {
            current: Some(first),
        }
    }
}

impl Iterator for Sequences {
    type Item = CatalanSequence;

    fn next(&mut self) -> Option<Self::Item> {
        let bits = self.current.take()?;
        self.current = successor(&bits);
        Some(CatalanSequence::from_trusted(bits))
    }
}

/// Lexicographic successor: flip the rightmost 0 that can become a 1, then
/// complete with the smallest suffix (all remaining 0s, then all remaining 1s).
fn successor(bits: &[bool]) -> Option<Vec<bool>> {
    let n = bits.len() / 2;
    let mut zeros_before: Vec<usize> = Vec::with_capacity(bits.len());
    let mut zeros = 0;
    for &b in bits {
        zeros_before.push(zeros);
        if !b {
            zeros += 1;
        }
    }
    for i in (0..bits.len()).rev() {
        if bits[i] {
            continue;
        }
        let z = zeros_before[i];
        let o = i - z;
        // the flipped prefix has z zeros and o + 1 ones
        if o < z {
            let mut next = bits[..i].to_vec();
            next.push(true);
            next.resize(next.len() + (n - z), false);
            next.resize(2 * n, true);
            return Some(next);
        }
    }
    None
}

pub fn iter_sequences(n: usize) -> Sequences {
    Sequences::new(n)
}

/// All sequences of semilength `n` in lexicographic order, capped at
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate(n: usize) -> Result<Vec<CatalanSequence>, SequenceError> {
    enumerate_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_with_cap(n: usize, cap: usize) -> Result<Vec<CatalanSequence>, SequenceError> {
    if n > cap {
        return Err(SequenceError::CapExceeded { n, cap });
    }
    Ok(iter_sequences(n).collect())
}

/// `paths[r][h]`: number of ways to finish a sequence from height `h` with `r`
/// symbols left, never dipping below zero and ending at zero.
struct BallotTable {
    paths: Vec<Vec<BigUint>>,
}

impl BallotTable {
    fn new(n: usize) -> Self {
        let len = 2 * n;
        let mut paths: Vec<Vec<BigUint>> = Vec::with_capacity(len + 1);
        paths.push(vec![BigUint::one()]);
        for r in 1..=len {
            let prev = &paths[r - 1];
            let row = (0..=r)
                .map(|h| {
                    let mut v = BigUint::zero();
                    if let Some(up) = prev.get(h + 1) {
                        v += up;
                    }
                    if h > 0 {
                        if let Some(down) = prev.get(h - 1) {
                            v += down;
                        }
                    }
                    v
                })
                .collect();
            paths.push(row);
        }
        Self { paths }
    }

    fn get(&self, remaining: usize, height: usize) -> &BigUint {
        static ZERO: BigUint = BigUint::ZERO;
        self.paths[remaining].get(height).unwrap_or(&ZERO)
    }
}

/// 0-based position of `s` in `enumerate(s.semilength())`, without building the list.
pub fn rank(s: &CatalanSequence) -> BigUint {
    let table = BallotTable::new(s.semilength());
    let len = s.len();
    let mut r = BigUint::zero();
    let mut h = 0usize;
    for (i, &b) in s.bits().iter().enumerate() {
        let remaining = len - i - 1;
        if b {
            // every sequence with a 0 here sorts before s
            r += table.get(remaining, h + 1);
            h -= 1;
        } else {
            h += 1;
        }
    }
    r
}

/// The `index`-th sequence of `enumerate(n)`.
pub fn unrank(n: usize, index: &BigUint) -> Result<CatalanSequence, SequenceError> {
    let table = BallotTable::new(n);
    if index >= table.get(2 * n, 0) {
        return Err(SequenceError::IndexOutOfRange {
            n,
            index: index.clone(),
        });
    }
    let len = 2 * n;
    let mut k = index.clone();
    let mut bits = Vec::with_capacity(len);
    let mut h = 0usize;
    for i in 0..len {
        let remaining = len - i - 1;
        let with_zero = table.get(remaining, h + 1);
        if k < *with_zero {
            bits.push(false);
            h += 1;
        } else {
            k -= with_zero;
            bits.push(true);
            h -= 1;
        }
    }
    Ok(CatalanSequence::from_trusted(bits))
}

pub fn unrank_u64(n: usize, index: u64) -> Result<CatalanSequence, SequenceError> {
    unrank(n, &BigUint::from(index))
}

/// `unrank(n, U)` with `U` uniform on `[0, C_n)`, drawn from a ChaCha8 stream seeded by `seed`.
pub fn random_uniform(n: usize, seed: u64) -> CatalanSequence {
    let total = counting::catalan_closed(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let index = rng.gen_biguint_below(total.value());
    unrank(n, &index).expect("index drawn below C_n")
}

/// Convenience for callers holding small ranks.
pub fn rank_u64(s: &CatalanSequence) -> Option<u64> {
    rank(s).to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> CatalanSequence {
        s.parse().unwrap()
    }

    fn texts(v: &[CatalanSequence]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(seq("000111").semilength(), 3);
        assert_eq!(seq("").semilength(), 0);
        assert_eq!(
            "0110".parse::<CatalanSequence>(),
            Err(SequenceError::PrefixViolation(3))
        );
    }

    #[test]
    fn validate_error_kinds() {
        assert_eq!(
            "011".parse::<CatalanSequence>(),
            Err(SequenceError::OddLength { len: 3 })
        );
        assert_eq!(
            "1".parse::<CatalanSequence>(),
            Err(SequenceError::OddLength { len: 1 })
        );
        assert_eq!(
            "10".parse::<CatalanSequence>(),
            Err(SequenceError::PrefixViolation(1))
        );
        assert_eq!(
            "0001".parse::<CatalanSequence>(),
            Err(SequenceError::CountMismatch { zeros: 3, ones: 1 })
        );
        assert_eq!(
            "0a".parse::<CatalanSequence>(),
            Err(SequenceError::InvalidSymbol {
                index: 1,
                symbol: 'a'
            })
        );
    }

    #[test]
    fn altitude_examples() {
        assert_eq!(seq("01").altitude_profile().heights(), &[0, 1, 0]);
        assert_eq!(seq("0011").altitude_profile().heights(), &[0, 1, 2, 1, 0]);
        assert_eq!(
            seq("001011").altitude_profile().heights(),
            &[0, 1, 2, 1, 2, 1, 0]
        );
        assert_eq!(seq("").altitude_profile().heights(), &[0]);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(texts(&enumerate(0).unwrap()), vec![""]);
        assert_eq!(texts(&enumerate(2).unwrap()), vec!["0011", "0101"]);
        assert_eq!(
            texts(&enumerate(3).unwrap()),
            vec!["000111", "001011", "001101", "010011", "010101"]
        );
    }

    #[test]
    fn enumerate_cap() {
        assert_eq!(
            enumerate(17),
            Err(SequenceError::CapExceeded { n: 17, cap: 16 })
        );
        assert!(enumerate_with_cap(3, 2).is_err());
    }

    #[test]
    fn rank_unrank_examples() {
        assert_eq!(rank_u64(&seq("000111")), Some(0));
        assert_eq!(rank_u64(&seq("010101")), Some(4));
        assert_eq!(rank_u64(&seq("0101")), Some(1));
        assert_eq!(rank_u64(&seq("")), Some(0));
        assert_eq!(unrank_u64(3, 2).unwrap().to_string(), "001101");
        assert_eq!(unrank_u64(0, 0).unwrap().to_string(), "");
        assert_eq!(unrank_u64(4, 13).unwrap().to_string(), "01010101");
    }

    #[test]
    fn unrank_out_of_range() {
        assert!(matches!(
            unrank_u64(3, 5),
            Err(SequenceError::IndexOutOfRange { n: 3, .. })
        ));
        assert!(unrank_u64(0, 1).is_err());
    }

    #[test]
    fn rank_large_semilength() {
        let n = 200;
        let last = CatalanSequence::new([false, true].repeat(n)).unwrap();
        let expected = counting::catalan_closed(n).into_value() - 1u32;
        assert_eq!(rank(&last), expected);
        assert_eq!(unrank(n, &expected).unwrap(), last);
    }

    #[test]
    fn random_examples() {
        for seed in [0, 1, 42, u64::MAX] {
            assert_eq!(random_uniform(0, seed).to_string(), "");
            assert_eq!(random_uniform(1, seed).to_string(), "01");
            let all = enumerate(3).unwrap();
            assert!(all.contains(&random_uniform(3, seed)));
            assert_eq!(random_uniform(30, seed), random_uniform(30, seed));
        }
    }

    #[test]
    fn random_hits_every_member() {
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..200 {
            seen.insert(random_uniform(3, seed));
        }
        assert_eq!(seen.len(), 5);
    }
}
