//! Brute-force orbit counting by canonical forms — the second independent
//! oracle.
//!
//! Every arrangement of the bead multiset is generated in lexicographic
//! order and reduced to the least word of its orbit; counting distinct
//! canonical forms counts orbits. Nothing here touches the cycle index or
//! the closed form, so the three computation paths can check one another.

use std::collections::BTreeSet;
use std::fmt;

use crate::closedform::ColorMultiplicities;
use crate::error::{Error, Result};
use crate::numtheory::{multinomial_unsigned, Count};

/// Ceiling on how many words an enumeration may visit; checked before the
/// scan starts.
pub const DEFAULT_WORD_LIMIT: u64 = 100_000_000;

/// A length-`N` sequence of color indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NecklaceWord(Vec<u8>);

impl NecklaceWord {
    pub fn new(beads: Vec<u8>) -> Self {
        Self(beads)
    }

    pub fn beads(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Words print as a digit string while every color fits one digit, and as
/// comma-separated integers otherwise.
impl fmt::Display for NecklaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&b| b <= 9) {
            for b in &self.0 {
                write!(f, "{b}")?;
            }
        } else {
            for (i, b) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{b}")?;
            }
        }
        Ok(())
    }
}

/// Which transforms identify two words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryGroup {
    /// The `N` rotations.
    Cyclic,
    /// The `N` rotations and `N` reflections.
    Dihedral,
}

/// In-place lexicographic successor over the multiset of beads.
#[derive(Debug)]
struct WordStream {
    buf: Vec<u8>,
}

impl WordStream {
    fn start(counts: &[u64]) -> Self {
        let mut buf = Vec::new();
        for (color, &count) in counts.iter().enumerate() {
            buf.extend(std::iter::repeat_n(color as u8, count as usize));
        }
        WordStream { buf }
    }

    fn current(&self) -> &[u8] {
        &self.buf
    }

    /// Standard next-permutation step; returns false once the buffer holds
    /// the lexicographically last arrangement.
    fn advance(&mut self) -> bool {
        let b = &mut self.buf;
        let n = b.len();
        if n < 2 {
            return false;
        }
        let Some(pivot) = (0..n - 1).rev().find(|&i| b[i] < b[i + 1]) else {
            return false;
        };
        let successor = (pivot + 1..n).rev().find(|&j| b[j] > b[pivot]).unwrap();
        b.swap(pivot, successor);
        b[pivot + 1..].reverse();
        true
    }
}

/// Streaming enumeration of every arrangement of the multiset, ascending.
#[derive(Debug)]
pub struct MultisetWords {
    stream: Option<WordStream>,
}

impl Iterator for MultisetWords {
    type Item = NecklaceWord;

    fn next(&mut self) -> Option<NecklaceWord> {
        let stream = self.stream.as_mut()?;
        let word = NecklaceWord(stream.buf.clone());
        if !stream.advance() {
            self.stream = None;
        }
        Some(word)
    }
}

/// All distinct arrangements of the bead multiset in lexicographic order;
/// the stream yields exactly `P(n)` words.
pub fn multiset_words(n: &ColorMultiplicities) -> Result<MultisetWords> {
    multiset_words_bounded(n, DEFAULT_WORD_LIMIT)
}

pub fn multiset_words_bounded(n: &ColorMultiplicities, max_words: u64) -> Result<MultisetWords> {
    check_word_budget(n, max_words)?;
    Ok(MultisetWords {
        stream: Some(WordStream::start(n.counts())),
    })
}

fn check_word_budget(n: &ColorMultiplicities, max_words: u64) -> Result<()> {
    let required = multinomial_unsigned(n.counts());
    if required > Count::from(max_words) {
        return Err(Error::WordLimit {
            required,
            limit: max_words,
        });
    }
    Ok(())
}

/// Lexicographically smallest word in the orbit of `word` under `group`,
/// found by scanning all `N` rotations (plus the `N` rotations of the
/// reversal for [`SymmetryGroup::Dihedral`]). Idempotent and constant on
/// orbits.
pub fn canonical_form(word: &NecklaceWord, group: SymmetryGroup) -> NecklaceWord {
    NecklaceWord(canonical_of_slice(word.beads(), group))
}

fn canonical_of_slice(beads: &[u8], group: SymmetryGroup) -> Vec<u8> {
    let n = beads.len();
    if n == 0 {
        return Vec::new();
    }
    let mut best_src = beads;
    let mut best_rot = 0usize;
    for r in 1..n {
        if rotation_lt(beads, r, best_src, best_rot) {
            best_rot = r;
        }
    }
    let reversed: Vec<u8>;
    if group == SymmetryGroup::Dihedral {
        reversed = beads.iter().rev().copied().collect();
        for r in 0..n {
            if rotation_lt(&reversed, r, best_src, best_rot) {
                best_src = &reversed;
                best_rot = r;
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    out.extend_from_slice(&best_src[best_rot..]);
    out.extend_from_slice(&best_src[..best_rot]);
    out
}

/// Compares rotation `ra` of `a` against rotation `rb` of `b`.
fn rotation_lt(a: &[u8], ra: usize, b: &[u8], rb: usize) -> bool {
    let n = a.len();
    for i in 0..n {
        let x = a[if ra + i >= n { ra + i - n } else { ra + i }];
        let y = b[if rb + i >= n { rb + i - n } else { rb + i }];
        if x != y {
            return x < y;
        }
    }
    false
}

/// Number of orbits under `group`: the number of distinct canonical forms
/// across every arrangement of the multiset.
pub fn count_orbits(n: &ColorMultiplicities, group: SymmetryGroup) -> Result<Count> {
    count_orbits_bounded(n, group, DEFAULT_WORD_LIMIT)
}

pub fn count_orbits_bounded(
    n: &ColorMultiplicities,
    group: SymmetryGroup,
    max_words: u64,
) -> Result<Count> {
    Ok(Count::from(canonical_set(n, group, max_words)?.len()))
}

/// One canonical representative per orbit, sorted.
pub fn representatives(n: &ColorMultiplicities, group: SymmetryGroup) -> Result<Vec<NecklaceWord>> {
    representatives_bounded(n, group, DEFAULT_WORD_LIMIT)
}

pub fn representatives_bounded(
    n: &ColorMultiplicities,
    group: SymmetryGroup,
    max_words: u64,
) -> Result<Vec<NecklaceWord>> {
    Ok(canonical_set(n, group, max_words)?
        .into_iter()
        .map(NecklaceWord)
        .collect())
}

fn canonical_set(
    n: &ColorMultiplicities,
    group: SymmetryGroup,
    max_words: u64,
) -> Result<BTreeSet<Vec<u8>>> {
    check_word_budget(n, max_words)?;
    let mut stream = WordStream::start(n.counts());
    let mut set = BTreeSet::new();
    loop {
        set.insert(canonical_of_slice(stream.current(), group));
        if !stream.advance() {
            return Ok(set);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{count_cyclic, count_dihedral, Mode};
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn cm(raw: &[u64]) -> ColorMultiplicities {
        ColorMultiplicities::new(raw).unwrap()
    }

    fn words(raw: &[u64]) -> Vec<String> {
        multiset_words(&cm(raw))
            .unwrap()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn multiset_words_examples() {
        assert_eq!(words(&[2]), vec!["00"]);
        assert_eq!(words(&[1, 2]), vec!["011", "101", "110"]);
        assert_eq!(multiset_words(&cm(&[3, 6])).unwrap().count(), 84);
    }

    #[test]
    fn multiset_words_are_sorted_and_distinct() {
        let all = words(&[2, 2, 1]);
        assert_eq!(all.len(), 30);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn word_budget_is_checked_up_front() {
        let err = multiset_words_bounded(&cm(&[3, 6]), 50).unwrap_err();
        assert!(matches!(err, Error::WordLimit { limit: 50, .. }));
        assert!(multiset_words_bounded(&cm(&[3, 6]), 84).is_ok());
    }

    #[test]
    fn canonical_form_examples() {
        let canon = |beads: &[u8], g| canonical_form(&NecklaceWord::new(beads.to_vec()), g);
        assert_eq!(
            canon(&[0, 1, 0, 1], SymmetryGroup::Cyclic).beads(),
            &[0, 1, 0, 1]
        );
        assert_eq!(
            canon(&[1, 1, 0, 0], SymmetryGroup::Cyclic).beads(),
            &[0, 0, 1, 1]
        );
        assert_eq!(
            canon(&[2, 2, 1, 0], SymmetryGroup::Dihedral).beads(),
            &[0, 1, 2, 2]
        );
        // same word under rotations only: reversal is not available
        assert_eq!(
            canon(&[2, 2, 1, 0], SymmetryGroup::Cyclic).beads(),
            &[0, 2, 2, 1]
        );
    }

    #[test]
    fn count_orbit_examples() {
        assert_eq!(
            count_orbits(&cm(&[2, 2]), SymmetryGroup::Cyclic).unwrap(),
            Count::from(2u32)
        );
        assert_eq!(
            count_orbits(&cm(&[1, 1, 1]), SymmetryGroup::Dihedral).unwrap(),
            Count::from(1u32)
        );
        assert_eq!(
            count_orbits(&cm(&[3, 6]), SymmetryGroup::Cyclic).unwrap(),
            Count::from(10u32)
        );
    }

    #[test]
    fn representative_examples() {
        let reps: Vec<String> = representatives(&cm(&[2, 2]), SymmetryGroup::Cyclic)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(reps, vec!["0011", "0101"]);

        let single = representatives(&cm(&[4]), SymmetryGroup::Dihedral).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].to_string(), "0000");

        let dih: Vec<String> = representatives(&cm(&[1, 2]), SymmetryGroup::Dihedral)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(dih, vec!["011"]);
    }

    #[test]
    fn display_switches_to_commas_past_ten_colors() {
        let narrow = NecklaceWord::new(vec![0, 9, 3]);
        assert_eq!(narrow.to_string(), "093");
        let wide = NecklaceWord::new(vec![0, 10, 3]);
        assert_eq!(wide.to_string(), "0,10,3");
    }

    #[test]
    fn orbit_sizes_sum_to_word_count() {
        for raw in [vec![2u64, 3], vec![1, 1, 2], vec![4, 2], vec![1, 2, 3]] {
            let n = cm(&raw);
            for group in [SymmetryGroup::Cyclic, SymmetryGroup::Dihedral] {
                let mut tally: BTreeMap<NecklaceWord, u64> = BTreeMap::new();
                for w in multiset_words(&n).unwrap() {
                    *tally.entry(canonical_form(&w, group)).or_insert(0) += 1;
                }
                let total: u64 = tally.values().sum();
                assert_eq!(Count::from(total), multinomial_unsigned(n.counts()));
                assert_eq!(Count::from(tally.len()), count_orbits(&n, group).unwrap());
            }
        }
    }

    #[test]
    fn counts_agree_with_closed_form_on_small_tuples() {
        for raw in [
            vec![1u64, 2],
            vec![2, 2],
            vec![3, 3],
            vec![1, 1, 2],
            vec![2, 2, 2],
        ] {
            let n = cm(&raw);
            assert_eq!(
                count_orbits(&n, SymmetryGroup::Cyclic).unwrap(),
                count_cyclic(&n).unwrap(),
                "cyclic {raw:?}"
            );
            let dih = count_dihedral(&n, Mode::Corrected)
                .unwrap()
                .into_integer()
                .unwrap();
            assert_eq!(
                dih,
                count_orbits(&n, SymmetryGroup::Dihedral).unwrap(),
                "dihedral {raw:?}"
            );
        }
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent_and_orbit_constant(
            beads in proptest::collection::vec(0u8..3, 1..9),
            rot in 0usize..8,
            flip in proptest::bool::ANY
        ) {
            let w = NecklaceWord::new(beads.clone());
            for group in [SymmetryGroup::Cyclic, SymmetryGroup::Dihedral] {
                let canon = canonical_form(&w, group);
                prop_assert_eq!(&canonical_form(&canon, group), &canon);
                prop_assert!(canon.beads() <= w.beads());

                // apply a group element and re-canonicalize
                let mut moved = beads.clone();
                moved.rotate_left(rot % beads.len());
                if flip && group == SymmetryGroup::Dihedral {
                    moved.reverse();
                }
                let w2 = NecklaceWord::new(moved);
                prop_assert_eq!(&canonical_form(&w2, group), &canon);
            }
        }

        #[test]
        fn dihedral_never_exceeds_cyclic(
            raw in proptest::collection::vec(1u64..=4, 1..4)
        ) {
            let n = cm(&raw);
            let cyc = count_orbits(&n, SymmetryGroup::Cyclic).unwrap();
            let dih = count_orbits(&n, SymmetryGroup::Dihedral).unwrap();
            prop_assert!(dih <= cyc);
        }

        #[test]
        fn representative_count_matches_orbit_count(
            raw in proptest::collection::vec(1u64..=4, 1..4)
        ) {
            let n = cm(&raw);
            for group in [SymmetryGroup::Cyclic, SymmetryGroup::Dihedral] {
                let reps = representatives(&n, group).unwrap();
                prop_assert_eq!(Count::from(reps.len()), count_orbits(&n, group).unwrap());
                // sorted, deduplicated, and each already canonical
                for pair in reps.windows(2) {
                    prop_assert!(pair[0] < pair[1]);
                }
                for rep in &reps {
                    prop_assert_eq!(&canonical_form(rep, group), rep);
                }
            }
        }
    }
}
