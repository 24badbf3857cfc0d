//! Exact integer primitives: totient, divisor enumeration, tuple gcd,
//! arbitrary-precision multinomials, and composition generation.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative count.
///
/// `Display` renders the exact decimal digit string; counts are never routed
/// through floating point.
pub type Count = BigUint;

/// Binomial coefficient `C(n, k)`, exact; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> Count {
    if k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for i in 0..k {
        // every prefix product C(n, i+1) is integral, so this division is exact
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(Σt)! / Π t_j!`.
///
/// A tuple containing any negative entry yields 0: no arrangement can use a
/// negative number of beads. The empty and all-zero tuples yield 1.
pub fn multinomial(parts: &[i64]) -> Count {
    let mut unsigned = Vec::with_capacity(parts.len());
    for &p in parts {
        if p < 0 {
            return Count::zero();
        }
        unsigned.push(p as u64);
    }
    multinomial_unsigned(&unsigned)
}

/// Multinomial over nonnegative entries, as a product of binomials
/// `Π C(t_1 + … + t_i, t_i)` so no intermediate exceeds the result.
pub(crate) fn multinomial_unsigned(parts: &[u64]) -> Count {
    let mut total = 0u64;
    let mut acc = Count::one();
    for &p in parts {
        total = total
            .checked_add(p)
            .expect("multinomial total overflows u64");
        if p != 0 && p != total {
            acc *= binomial(total, p);
        }
    }
    acc
}

/// Euler's totient `φ(g)`: how many of `1..=g` are coprime to `g`.
///
/// Plain trial-division factorization; the arguments that arise in counting
/// are divisors of a tuple gcd and stay small.
pub fn totient(g: u64) -> Result<u64> {
    if g == 0 {
        return Err(Error::Zero {
            what: "totient argument",
        });
    }
    let mut remaining = g;
    let mut phi = g;
    let mut p = 2u64;
    while p <= remaining / p {
        if remaining.is_multiple_of(p) {
            phi -= phi / p;
            while remaining.is_multiple_of(p) {
                remaining /= p;
            }
        }
        p += 1;
    }
    if remaining > 1 {
        phi -= phi / remaining;
    }
    Ok(phi)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero {
            what: "divisors argument",
        });
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d <= n / d {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// Greatest common divisor of all positive entries; zero entries are ignored.
pub fn gcd_tuple(parts: &[u64]) -> Result<u64> {
    let mut g = 0u64;
    for &p in parts {
        g = g.gcd(&p);
    }
    if g == 0 {
        Err(Error::AllZero)
    } else {
        Ok(g)
    }
}

/// Iterator over every `parts`-tuple of nonnegative integers summing to
/// `total`, in descending lexicographic order: `(total, 0, …)` first,
/// `(0, …, total)` last. `parts == 0` yields nothing.
pub fn compositions(total: u64, parts: usize) -> Compositions {
    let current = (parts > 0).then(|| {
        let mut v = vec![0u64; parts];
        v[0] = total;
        v
    });
    Compositions { current }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
}

impl Iterator for Compositions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let cur = self.current.as_mut()?;
        let item = cur.clone();
        let m = cur.len();
        // successor: take one unit from the rightmost positive entry that is
        // not the tail, and pull everything right of it back behind it
        match cur[..m - 1].iter().rposition(|&c| c > 0) {
            None => self.current = None,
            Some(i) => {
                let moved: u64 = cur[i + 1..].iter().sum();
                cur[i] -= 1;
                cur[i + 1] = moved + 1;
                for c in &mut cur[i + 2..] {
                    *c = 0;
                }
            }
        }
        Some(item)
    }
}
