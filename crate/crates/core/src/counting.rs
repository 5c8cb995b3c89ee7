//! Catalan numbers over arbitrary-precision integers.
//!
//! Four independent routes are provided: the closed form `binom(2n, n) / (n + 1)`,
//! the convolution recurrence `C_{n+1} = sum C_i C_{n-i}`, the linear recurrence
//! `(n + 2) C_{n+1} = (4n + 2) C_n`, and the power series fixed point of
//! `C = 1 + z C^2`. No floating point is used anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// The value `C_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CatalanNumber(BigUint);

impl CatalanNumber {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }
}

impl fmt::Display for CatalanNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl PartialEq<u64> for CatalanNumber {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

/// Which formula to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Closed,
    Convolution,
    Linear,
    Series,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Closed,
        Method::Convolution,
        Method::Linear,
        Method::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Closed => "closed",
            Method::Convolution => "convolution",
            Method::Linear => "linear",
            Method::Series => "series",
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

pub fn catalan(n: usize, method: Method) -> CatalanNumber {
    match method {
        Method::Closed => catalan_closed(n),
        Method::Convolution => catalan_convolution(n),
        Method::Linear => catalan_linear(n),
        Method::Series => {
            let series = catalan_series(n + 1);
            CatalanNumber(series.coefficients[n].clone())
        }
    }
}

/// Exact binomial coefficient; zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        // acc = binom(a, i) here, and binom(a, i) * (a - i) is divisible by i + 1
        acc *= a - i;
        let (q, r) = acc.div_rem(&BigUint::from(i + 1));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

pub fn catalan_closed(n: usize) -> CatalanNumber {
    let n = n as u64;
    let (q, r) = binomial(2 * n, n).div_rem(&BigUint::from(n + 1));
    assert!(r.is_zero(), "binom(2n, n) not divisible by n + 1 for n = {n}");
    CatalanNumber(q)
}

/// Memoized table `C_0..=C_n` from the convolution recurrence.
pub fn catalan_convolution_table(n: usize) -> Vec<BigUint> {
    let mut table: Vec<BigUint> = Vec::with_capacity(n + 1);
    table.push(BigUint::one());
    for m in 0..n {
        let next = (0..=m).fold(BigUint::zero(), |acc, i| acc + &table[i] * &table[m - i]);
        table.push(next);
    }
    table
}

pub fn catalan_convolution(n: usize) -> CatalanNumber {
    let mut table = catalan_convolution_table(n);
    CatalanNumber(table.swap_remove(n))
}

pub fn catalan_linear(n: usize) -> CatalanNumber {
    let mut c = BigUint::one();
    for k in 0..n as u64 {
        c *= 4 * k + 2;
        let (q, r) = c.div_rem(&BigUint::from(k + 2));
        assert!(r.is_zero(), "(4k + 2) C_k not divisible by k + 2 for k = {k}");
        c = q;
    }
    CatalanNumber(c)
}

/// Truncated power series, `coefficients[k]` is the coefficient of `z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesPrefix {
    pub coefficients: Vec<BigUint>,
}

impl SeriesPrefix {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `1 + z * self^2`, truncated to `terms` coefficients.
    fn step(&self, terms: usize) -> SeriesPrefix {
        let c = &self.coefficients;
        let mut next = Vec::with_capacity(terms);
        next.push(BigUint::one());
        for k in 1..terms {
            // coefficient of z^(k-1) in c^2, using the symmetry of the products
            let d = k - 1;
            let mut sum = BigUint::zero();
            for i in 0..d.div_ceil(2) {
                sum += &c[i] * &c[d - i];
            }
            sum <<= 1;
            if d % 2 == 0 {
                sum += &c[d / 2] * &c[d / 2];
            }
            next.push(sum);
        }
        SeriesPrefix {
            coefficients: next,
        }
    }
}

/// First `limit` coefficients of the series solving `z C^2 = C - 1`, `C(0) = 1`.
///
/// Iterates `C <- 1 + z C^2` from `C = 1`. Coefficient `k` of an iterate
/// depends only on coefficients below `k` of the previous one, so each round
/// fixes one more coefficient and the truncation can grow by one term per
/// round. The loop ends once a full-length round leaves the prefix unchanged,
/// which happens by round `limit`.
pub fn catalan_series(limit: usize) -> SeriesPrefix {
    assert!(limit >= 1, "series limit must be positive");
    let mut current = SeriesPrefix {
        coefficients: vec![BigUint::one()],
    };
    for round in 1..=limit {
        let terms = (round + 1).min(limit);
        let next = current.step(terms);
        if next == current {
            break;
        }
        current = next;
    }
    debug_assert_eq!(current.len(), limit);
    current
}
