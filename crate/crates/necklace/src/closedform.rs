//! Closed-form counts of necklaces and bracelets with prescribed per-color
//! bead multiplicities.
//!
//! For a tuple `n = (n_1, …, n_m)` with `N = Σ n_j` and `Δ = gcd(n)`, the
//! number of necklaces (colorings of a circle of `N` beads up to rotation) is
//!
//! ```text
//! γ(C_N, n) = (1/N) · Σ_{d | Δ} φ(d) · P(n/d),
//! P(k) = (Σ k_j)! / Π k_j!
//! ```
//!
//! The bracelet count (rotations and reflections) splits into five cases on
//! the parity of `N` and the number of odd entries of `n`; see
//! [`DihedralCase`] and [`count_dihedral`].
//!
//! Two evaluation modes exist for the bracelet count. The formulas for the
//! one-odd-count and one-odd-pair cases were originally published with the
//! plain multinomial `P(n)` where the derivation from the dihedral cycle
//! index requires the already-averaged necklace count `γ(C_N, n)`;
//! [`Mode::Corrected`] (the default) applies that substitution, while
//! [`Mode::PaperLiteral`] evaluates the printed form verbatim and reports it
//! as an exact ratio, since it is not always an integer — see the `(1, 1)`
//! example on [`count_dihedral`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{self, multinomial_unsigned, Count};

/// Per-color bead counts, validated: zero entries are stripped at
/// construction (an unused color changes no orbit count) and at least one
/// entry must be positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColorMultiplicities {
    counts: Vec<u64>,
    total: u64,
    gcd: u64,
}

impl ColorMultiplicities {
    pub fn new(raw: &[u64]) -> Result<Self> {
        let counts: Vec<u64> = raw.iter().copied().filter(|&c| c > 0).collect();
        if counts.is_empty() {
            return Err(Error::AllZero);
        }
        let mut total = 0u64;
        for &c in &counts {
            total = total.checked_add(c).ok_or(Error::Overflow)?;
        }
        let gcd = numtheory::gcd_tuple(&counts)?;
        Ok(Self { counts, total, gcd })
    }

    /// The retained (positive) per-color counts, in input order.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Total number of beads `N`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of colors actually used, `m`.
    pub fn num_colors(&self) -> usize {
        self.counts.len()
    }

    /// Greatest common divisor `Δ` of the per-color counts.
    pub fn gcd(&self) -> u64 {
        self.gcd
    }
}

/// A tuple divided through by a common divisor `d`: entry `j` holds `n_j / d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedTuple {
    entries: Vec<u64>,
    divisor: u64,
    total: u64,
}

impl ReducedTuple {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn divisor(&self) -> u64 {
        self.divisor
    }

    /// Beads per period, `K = N / d`.
    pub fn total(&self) -> u64 {
        self.total
    }
}

/// Divides every entry of `n` by `d`, rejecting any `d` that does not divide
/// every entry exactly.
pub fn reduce_by_divisor(n: &ColorMultiplicities, d: u64) -> Result<ReducedTuple> {
    if d == 0 {
        return Err(Error::Zero { what: "divisor" });
    }
    for &c in n.counts() {
        if c % d != 0 {
            return Err(Error::NotADivisor {
                divisor: d,
                entry: c,
            });
        }
    }
    Ok(ReducedTuple {
        entries: n.counts().iter().map(|&c| c / d).collect(),
        divisor: d,
        total: n.total() / d,
    })
}

/// The five branches of the bracelet formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DihedralCase {
    /// `N` odd, exactly one odd count.
    OddOneOdd,
    /// `N` odd, three or more odd counts.
    OddManyOdd,
    /// `N` even, every count even.
    EvenAllEven,
    /// `N` even, exactly one pair of odd counts.
    EvenOnePair,
    /// `N` even, two or more pairs of odd counts.
    EvenManyPairs,
}

impl DihedralCase {
    pub const ALL: [DihedralCase; 5] = [
        DihedralCase::OddOneOdd,
        DihedralCase::OddManyOdd,
        DihedralCase::EvenAllEven,
        DihedralCase::EvenOnePair,
        DihedralCase::EvenManyPairs,
    ];

    /// Stable snake_case name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            DihedralCase::OddOneOdd => "odd_one_odd",
            DihedralCase::OddManyOdd => "odd_many_odd",
            DihedralCase::EvenAllEven => "even_all_even",
            DihedralCase::EvenOnePair => "even_one_pair",
            DihedralCase::EvenManyPairs => "even_many_pairs",
        }
    }
}

impl fmt::Display for DihedralCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluation mode for the bracelet count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Substitute the necklace count `γ(C_N, n)` where the derivation
    /// requires it. Always integral; this is the true bracelet count.
    #[default]
    Corrected,
    /// Evaluate the formulas exactly as originally printed. Diagnostic only:
    /// the result can disagree with the true count and can be non-integral.
    PaperLiteral,
}

/// An exact count: always an integer in corrected mode, while paper-literal
/// values are carried as exact ratios.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountValue {
    Integer(Count),
    Ratio(BigRational),
}

impl CountValue {
    pub fn is_integral(&self) -> bool {
        match self {
            CountValue::Integer(_) => true,
            CountValue::Ratio(r) => r.is_integer(),
        }
    }

    pub fn as_integer(&self) -> Option<&Count> {
        match self {
            CountValue::Integer(c) => Some(c),
            CountValue::Ratio(_) => None,
        }
    }

    pub fn into_integer(self) -> Option<Count> {
        match self {
            CountValue::Integer(c) => Some(c),
            CountValue::Ratio(_) => None,
        }
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountValue::Integer(c) => write!(f, "{c}"),
            CountValue::Ratio(r) if r.is_integer() => write!(f, "{}", r.to_integer()),
            CountValue::Ratio(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Number of necklaces: colorings of `N` beads on a circle up to rotation.
///
/// The divisor sum `Σ_{d|Δ} φ(d) P(n/d)` is always divisible by `N`; the
/// division is checked and a failure is reported as [`Error::NonIntegral`]
/// (it would mean a bug, not bad input).
pub fn count_cyclic(n: &ColorMultiplicities) -> Result<Count> {
    exact_div(cyclic_orbit_sum(n)?, n.total(), "cyclic count")
}

/// `Σ_{d | Δ} φ(d) · P(n/d)`, i.e. `N` times the necklace count.
fn cyclic_orbit_sum(n: &ColorMultiplicities) -> Result<Count> {
    let mut sum = Count::zero();
    for d in numtheory::divisors(n.gcd())? {
        let reduced = reduce_by_divisor(n, d)?;
        sum += multinomial_unsigned(reduced.entries()) * numtheory::totient(d)?;
    }
    Ok(sum)
}

/// Dispatches on the parity of `N`, then on the number of odd entries.
///
/// The count of odd entries always has the parity of `N`, so the five cases
/// are exhaustive.
pub fn classify_dihedral_case(n: &ColorMultiplicities) -> DihedralCase {
    let odd = n.counts().iter().filter(|&&c| c % 2 == 1).count();
    if n.total() % 2 == 1 {
        if odd == 1 {
            DihedralCase::OddOneOdd
        } else {
            DihedralCase::OddManyOdd
        }
    } else {
        match odd {
            0 => DihedralCase::EvenAllEven,
            2 => DihedralCase::EvenOnePair,
            _ => DihedralCase::EvenManyPairs,
        }
    }
}

/// Number of bracelets: colorings of `N` beads on a circle up to rotation
/// and reflection.
///
/// ```
/// use necklace::{ColorMultiplicities, count_dihedral, Mode};
///
/// let n = ColorMultiplicities::new(&[1, 2]).unwrap();
/// assert_eq!(count_dihedral(&n, Mode::Corrected).unwrap().to_string(), "1");
/// // the printed formula gives 2 here, and 3/2 on (1, 1)
/// assert_eq!(count_dihedral(&n, Mode::PaperLiteral).unwrap().to_string(), "2");
/// let pair = ColorMultiplicities::new(&[1, 1]).unwrap();
/// assert_eq!(count_dihedral(&pair, Mode::PaperLiteral).unwrap().to_string(), "3/2");
/// ```
pub fn count_dihedral(n: &ColorMultiplicities, mode: Mode) -> Result<CountValue> {
    match mode {
        Mode::Corrected => count_dihedral_corrected(n).map(CountValue::Integer),
        Mode::PaperLiteral => count_dihedral_paper_literal(n).map(CountValue::Ratio),
    }
}

fn count_dihedral_corrected(n: &ColorMultiplicities) -> Result<Count> {
    let gamma_cyclic = count_cyclic(n)?;
    match classify_dihedral_case(n) {
        // ½ [γ(C_N, n) + P(halved)]: in a reflection-fixed word the odd
        // counts' spare beads sit on the axis and the rest pair up across it
        DihedralCase::OddOneOdd | DihedralCase::EvenOnePair => exact_div(
            gamma_cyclic + multinomial_unsigned(&halved(n)),
            2,
            "dihedral count, one odd count or one odd pair",
        ),
        // no reflection can fix an arrangement; the reflections contribute 0
        DihedralCase::OddManyOdd | DihedralCase::EvenManyPairs => {
            exact_div(gamma_cyclic, 2, "dihedral count, several odd counts")
        }
        // ½ γ(C_N, n) + ¼ Σ_q P(b − e_q) + ¼ P(b) with b = n/2, over the
        // common denominator 4
        DihedralCase::EvenAllEven => {
            let b = halved(n);
            let mut reflection_sum = multinomial_unsigned(&b);
            for q in 0..b.len() {
                reflection_sum += multinomial_with_decrement(&b, q);
            }
            exact_div(
                gamma_cyclic * 2u32 + reflection_sum,
                4,
                "dihedral count, all counts even",
            )
        }
    }
}

fn count_dihedral_paper_literal(n: &ColorMultiplicities) -> Result<BigRational> {
    let case = classify_dihedral_case(n);
    match case {
        // as printed: ½ [P(n) + P(halved)], with P(n) in place of γ(C_N, n)
        DihedralCase::OddOneOdd | DihedralCase::EvenOnePair => {
            let numer = multinomial_unsigned(n.counts()) + multinomial_unsigned(&halved(n));
            Ok(ratio_over(numer, 2))
        }
        DihedralCase::OddManyOdd | DihedralCase::EvenManyPairs => {
            Ok(ratio_over(count_cyclic(n)?, 2))
        }
        DihedralCase::EvenAllEven => {
            let b = halved(n);
            let mut reflection_sum = multinomial_unsigned(&b);
            for q in 0..b.len() {
                reflection_sum += multinomial_with_decrement(&b, q);
            }
            Ok(ratio_over(count_cyclic(n)? * 2u32 + reflection_sum, 4))
        }
    }
}

/// Floor-halves every count. On the branches that use it this builds the
/// tuples `a`, `b`, and `c` of the case formulas: even counts become
/// `n_j / 2`, odd counts `(n_j − 1) / 2`.
fn halved(n: &ColorMultiplicities) -> Vec<u64> {
    n.counts().iter().map(|&c| c / 2).collect()
}

/// `P(b)` with entry `q` lowered by one; a tuple that would go negative
/// contributes 0.
fn multinomial_with_decrement(b: &[u64], q: usize) -> Count {
    match b[q].checked_sub(1) {
        None => Count::zero(),
        Some(v) => {
            let mut t = b.to_vec();
            t[q] = v;
            multinomial_unsigned(&t)
        }
    }
}

fn exact_div(numerator: Count, denominator: u64, context: &'static str) -> Result<Count> {
    let (q, r) = numerator.div_rem(&BigUint::from(denominator));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegral {
            context,
            numerator,
            denominator,
        })
    }
}

fn ratio_over(numerator: Count, denominator: u64) -> BigRational {
    BigRational::new(BigInt::from(numerator), BigInt::from(denominator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cm(raw: &[u64]) -> ColorMultiplicities {
        ColorMultiplicities::new(raw).unwrap()
    }

    #[test]
    fn construction_strips_zeros_and_rejects_empty() {
        let n = cm(&[0, 3, 0, 6]);
        assert_eq!(n.counts(), &[3, 6]);
        assert_eq!(n.total(), 9);
        assert_eq!(n.num_colors(), 2);
        assert_eq!(n.gcd(), 3);
        assert_eq!(ColorMultiplicities::new(&[0, 0]), Err(Error::AllZero));
        assert_eq!(ColorMultiplicities::new(&[]), Err(Error::AllZero));
        assert_eq!(
            ColorMultiplicities::new(&[u64::MAX, 1]),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(
            reduce_by_divisor(&cm(&[3, 6]), 3).unwrap().entries(),
            &[1, 2]
        );
        assert_eq!(
            reduce_by_divisor(&cm(&[3, 6]), 1).unwrap().entries(),
            &[3, 6]
        );
        let r = reduce_by_divisor(&cm(&[4, 8, 12]), 4).unwrap();
        assert_eq!(r.entries(), &[1, 2, 3]);
        assert_eq!(r.total(), 6);
        assert_eq!(r.divisor(), 4);
        assert_eq!(
            reduce_by_divisor(&cm(&[3, 6]), 2),
            Err(Error::NotADivisor {
                divisor: 2,
                entry: 3
            })
        );
    }

    #[test]
    fn reduce_reconstructs_exactly() {
        let n = cm(&[12, 18, 30]);
        for d in numtheory::divisors(n.gcd()).unwrap() {
            let r = reduce_by_divisor(&n, d).unwrap();
            let rebuilt: Vec<u64> = r.entries().iter().map(|&k| k * d).collect();
            assert_eq!(rebuilt, n.counts());
        }
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(count_cyclic(&cm(&[4])).unwrap(), Count::from(1u32));
        assert_eq!(count_cyclic(&cm(&[1, 2])).unwrap(), Count::from(1u32));
        assert_eq!(count_cyclic(&cm(&[3, 6])).unwrap(), Count::from(10u32));
        assert_eq!(count_cyclic(&cm(&[2, 2])).unwrap(), Count::from(2u32));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_dihedral_case(&cm(&[3, 6])),
            DihedralCase::OddOneOdd
        );
        assert_eq!(
            classify_dihedral_case(&cm(&[1, 1, 1])),
            DihedralCase::OddManyOdd
        );
        assert_eq!(
            classify_dihedral_case(&cm(&[2, 2])),
            DihedralCase::EvenAllEven
        );
        assert_eq!(
            classify_dihedral_case(&cm(&[1, 1, 2])),
            DihedralCase::EvenOnePair
        );
        assert_eq!(
            classify_dihedral_case(&cm(&[1, 1, 1, 1])),
            DihedralCase::EvenManyPairs
        );
    }

    #[test]
    fn dihedral_corrected_examples() {
        let check = |raw: &[u64], expected: u32| {
            let got = count_dihedral(&cm(raw), Mode::Corrected).unwrap();
            assert_eq!(got, CountValue::Integer(Count::from(expected)), "{raw:?}");
        };
        check(&[1, 2], 1);
        check(&[3, 3], 3);
        check(&[2, 4], 3);
        check(&[1, 1, 2], 2);
        check(&[2, 2], 2);
        check(&[3, 6], 7);
        check(&[4], 1);
        check(&[1], 1);
    }

    #[test]
    fn dihedral_paper_literal_examples() {
        let lit = |raw: &[u64]| count_dihedral(&cm(raw), Mode::PaperLiteral).unwrap();
        // (1,2): printed form gives 2, the true count is 1
        assert_eq!(lit(&[1, 2]).to_string(), "2");
        assert!(lit(&[1, 2]).is_integral());
        // (1,1): printed form is not even an integer
        assert_eq!(lit(&[1, 1]).to_string(), "3/2");
        assert!(!lit(&[1, 1]).is_integral());
        // branches without the substitution agree with corrected mode
        let many = lit(&[1, 1, 1]);
        assert_eq!(many.to_string(), "1");
        assert_eq!(lit(&[2, 2]).to_string(), "2");
    }

    #[test]
    fn count_value_display_and_accessors() {
        let i = CountValue::Integer(Count::from(7u32));
        assert_eq!(i.to_string(), "7");
        assert!(i.is_integral());
        assert_eq!(i.as_integer(), Some(&Count::from(7u32)));
        let r = CountValue::Ratio(BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(r.to_string(), "3/2");
        assert_eq!(r.as_integer(), None);
        assert_eq!(r.clone().into_integer(), None);
    }

    proptest! {
        // Δ = 1 makes the divisor sum collapse to the plain multinomial
        #[test]
        fn coprime_tuple_count_times_n_is_multinomial(
            mut t in proptest::collection::vec(1u64..=6, 2..5)
        ) {
            t[0] += 1; // nudge so an all-equal tuple cannot sneak in with Δ > 1
            t[1] = 1;  // force Δ = 1
            let n = cm(&t);
            prop_assume!(n.gcd() == 1);
            let gamma = count_cyclic(&n).unwrap();
            prop_assert_eq!(gamma * n.total(), multinomial_unsigned(n.counts()));
        }

        #[test]
        fn counts_are_permutation_invariant(
            t in proptest::collection::vec(1u64..=8, 1..5),
            rot in 0usize..4
        ) {
            let n = cm(&t);
            let mut p = t.clone();
            p.rotate_left(rot % t.len());
            p.reverse();
            let np = cm(&p);
            prop_assert_eq!(count_cyclic(&n).unwrap(), count_cyclic(&np).unwrap());
            prop_assert_eq!(
                count_dihedral(&n, Mode::Corrected).unwrap(),
                count_dihedral(&np, Mode::Corrected).unwrap()
            );
        }

        // γ(D) ≤ γ(C) ≤ 2 γ(D)
        #[test]
        fn dihedral_sandwich(
            t in proptest::collection::vec(1u64..=7, 1..5)
        ) {
            let n = cm(&t);
            let cyc = count_cyclic(&n).unwrap();
            let dih = count_dihedral(&n, Mode::Corrected)
                .unwrap()
                .into_integer()
                .unwrap();
            prop_assert!(dih <= cyc.clone());
            prop_assert!(cyc <= dih * 2u32);
        }

        // the divisor sum behind the cyclic count is divisible by N
        #[test]
        fn cyclic_orbit_sum_divisible_by_n(
            t in proptest::collection::vec(1u64..=10, 1..5),
            scale in 1u64..=4
        ) {
            let scaled: Vec<u64> = t.iter().map(|&x| x * scale).collect();
            let n = cm(&scaled);
            let sum = cyclic_orbit_sum(&n).unwrap();
            prop_assert!((sum % n.total()).is_zero());
        }
    }
}
