//! Braid words in a solid torus, written in the tokens `W_n^e` where `W_n`
//! is the product of the first `n - 1` standard generators.
//!
//! Only the permutation image of a word is modelled. `W_n` maps to the cycle
//! `(1 2 … n)` and tokens act left to right, so the first token is applied
//! first. In terms of adjacent transpositions applied left to right this
//! reads `W_n` as the descending product `σ_{n-1} ⋯ σ_1`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lens::LensSpace;
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidToken {
    pub index: usize,
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    tokens: Vec<BraidToken>,
}

impl BraidWord {
    pub fn new(strands: usize, tokens: Vec<BraidToken>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::NonPositive {
                what: "strand count",
                value: 0,
            });
        }
        if let Some(bad) = tokens
            .iter()
            .find(|t| t.index < 2 || t.index > strands || t.exponent == 0)
        {
            return Err(Error::InvalidToken {
                index: bad.index,
                exponent: bad.exponent,
                strands,
            });
        }
        Ok(BraidWord { strands, tokens })
    }

    /// Parses whitespace-separated `Wn` or `Wn^e` tokens. Without an explicit
    /// strand count the largest token index is used.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let tokens = text
            .split_whitespace()
            .map(parse_token)
            .collect::<Result<Vec<_>>>()?;
        let strands = match strands {
            Some(n) => n,
            None => tokens
                .iter()
                .map(|t| t.index)
                .max()
                .ok_or_else(|| Error::Malformed {
                    what: "braid word",
                    text: text.to_string(),
                })?,
        };
        Self::new(strands, tokens)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn tokens(&self) -> &[BraidToken] {
        &self.tokens
    }

    /// `self` followed by `other`, on the larger strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        BraidWord {
            strands: self.strands.max(other.strands),
            tokens,
        }
    }

    /// The inverse braid: tokens in reverse order with negated exponents.
    /// Its closure is the original closure with the opposite orientation.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            tokens: self
                .tokens
                .iter()
                .rev()
                .map(|t| BraidToken {
                    index: t.index,
                    exponent: -t.exponent,
                })
                .collect(),
        }
    }
}

fn parse_token(text: &str) -> Result<BraidToken> {
    let malformed = || Error::Malformed {
        what: "braid token",
        text: text.to_string(),
    };
    let body = text.strip_prefix('W').ok_or_else(malformed)?;
    let (index, exponent) = match body.split_once('^') {
        Some((i, e)) => (i, e),
        None => (body, "1"),
    };
    if index.is_empty() || !index.bytes().all(|c| c.is_ascii_digit()) {
        return Err(malformed());
    }
    let exp_digits = exponent.strip_prefix('-').unwrap_or(exponent);
    if exp_digits.is_empty() || !exp_digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(malformed());
    }
    Ok(BraidToken {
        index: index.parse().map_err(|_| Error::Overflow("braid index"))?,
        exponent: exponent
            .parse()
            .map_err(|_| Error::Overflow("braid exponent"))?,
    })
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "W{}^{}", t.index, t.exponent)?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A permutation of `{0, …, n-1}` stored as its image table.
/// Printed one-based in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    /// `(1 2 … len)` raised to `power`, acting on `n` points.
    pub fn rotation(n: usize, len: usize, power: i64) -> Self {
        let shift = power.rem_euclid(len as i64) as usize;
        Permutation(
            (0..n)
                .map(|i| if i < len { (i + shift) % len } else { i })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| next.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycle_type() == [self.0.len()]
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let items: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", items.join(" "))?;
        }
        Ok(())
    }
}

pub fn permutation_of(word: &BraidWord) -> Permutation {
    word.tokens
        .iter()
        .fold(Permutation::identity(word.strands), |acc, t| {
            acc.then(&Permutation::rotation(word.strands, t.index, t.exponent))
        })
}

/// A closed braid is a knot exactly when its permutation is one long cycle.
pub fn is_knot(word: &BraidWord) -> bool {
    permutation_of(word).is_full_cycle()
}

/// Homology class of the closed braid in the solid torus.
pub fn winding_number(word: &BraidWord) -> usize {
    word.strands
}

/// One member of the Pythagorean family built from
/// `(s, t, u) = (2k+1, 2k(k+1), 2k²+2k+1)` and the word `W_s W_t^{-s}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRecord {
    pub k: u64,
    pub s: u64,
    pub t: u64,
    pub u: u64,
    pub word: BraidWord,
    pub strands: usize,
    /// `L(2(k+1)², 2k+3)` and its reverse.
    pub pair_plus: (LensSpace, LensSpace),
    /// `L(2k², 2k-1)` and its reverse.
    pub pair_minus: (LensSpace, LensSpace),
    /// These manifolds are graph manifolds with equivalent slopes, so the
    /// pairs are not exotic examples.
    pub family_is_non_example: bool,
}

pub fn type_iv_family(k: u64) -> Result<FamilyRecord> {
    if k == 0 {
        return Err(Error::NonPositive {
            what: "family index",
            value: 0,
        });
    }
    let overflow = || Error::Overflow("type IV family");
    let s = k
        .checked_mul(2)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(overflow)?;
    let t = k
        .checked_add(1)
        .and_then(|x| x.checked_mul(k))
        .and_then(|x| x.checked_mul(2))
        .ok_or_else(overflow)?;
    let u = t.checked_add(1).ok_or_else(overflow)?;
    let strands = usize::try_from(t).map_err(|_| overflow())?;
    let word = BraidWord::new(
        strands,
        vec![
            BraidToken {
                index: s as usize,
                exponent: 1,
            },
            BraidToken {
                index: strands,
                exponent: -i64::try_from(s).map_err(|_| overflow())?,
            },
        ],
    )?;
    let plus = LensSpace::new(u as i128 + s as i128, s as i128 + 2)?;
    let minus = LensSpace::new(u as i128 - s as i128, s as i128 - 2)?;
    Ok(FamilyRecord {
        k,
        s,
        t,
        u,
        word,
        strands,
        pair_plus: (plus, plus.reverse()),
        pair_minus: (minus, minus.reverse()),
        family_is_non_example: true,
    })
}

/// The 1-bridge braid `W_3^{-1} W_7^3` with its three solid-torus filling
/// slopes. The slopes are tabulated input, not derived.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaperExample {
    pub word: BraidWord,
    pub special_slopes: [Slope; 3],
    pub winding: usize,
}

pub fn paper_example() -> PaperExample {
    let word = BraidWord::new(
        7,
        vec![
            BraidToken {
                index: 3,
                exponent: -1,
            },
            BraidToken {
                index: 7,
                exponent: 3,
            },
        ],
    )
    .expect("valid word");
    let winding = winding_number(&word);
    PaperExample {
        word,
        special_slopes: [
            Slope::MERIDIAN,
            Slope::new(18, 1).expect("coprime"),
            Slope::new(19, 1).expect("coprime"),
        ],
        winding,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::{is_oriented_homeo, reverse};
    use proptest::prelude::*;

    /// Independent oracle: compose explicit one-based maps built from the
    /// definition of the cycle, using repeated single steps for powers.
    fn oracle_images(strands: usize, tokens: &[(usize, i64)]) -> Vec<usize> {
        let mut pos: Vec<usize> = (1..=strands).collect();
        for &(n, e) in tokens {
            for x in pos.iter_mut() {
                for _ in 0..e.unsigned_abs() {
                    if *x <= n {
                        *x = if e > 0 {
                            if *x == n {
                                1
                            } else {
                                *x + 1
                            }
                        } else if *x == 1 {
                            n
                        } else {
                            *x - 1
                        };
                    }
                }
            }
        }
        pos
    }

    fn word(strands: usize, tokens: &[(usize, i64)]) -> BraidWord {
        BraidWord::new(
            strands,
            tokens
                .iter()
                .map(|&(index, exponent)| BraidToken { index, exponent })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn single_token_is_rotation() {
        let p = permutation_of(&word(7, &[(7, 1)]));
        for i in 0..7 {
            assert_eq!(p.image(i), (i + 1) % 7);
        }
        assert_eq!(p.to_string(), "(1 2 3 4 5 6 7)");
    }

    #[test]
    fn example_word_permutation() {
        let w = paper_example().word;
        let p = permutation_of(&w);
        assert_eq!(p.to_string(), "(1 6 2 4 7 3 5)");
        let oracle = oracle_images(7, &[(3, -1), (7, 3)]);
        assert_eq!(oracle, vec![6, 4, 5, 7, 1, 2, 3]);
        for (i, &expected) in oracle.iter().enumerate() {
            assert_eq!(p.image(i) + 1, expected);
        }
        assert!(is_knot(&w));
    }

    #[test]
    fn empty_word() {
        let w = BraidWord::new(5, vec![]).unwrap();
        assert_eq!(permutation_of(&w), Permutation::identity(5));
        assert!(!is_knot(&w));
        assert_eq!(permutation_of(&w).to_string(), "()");
        assert!(is_knot(&BraidWord::new(1, vec![]).unwrap()));
        for n in 2..10 {
            assert!(is_knot(&word(n, &[(n, 1)])));
        }
    }

    #[test]
    fn winding_examples() {
        assert_eq!(winding_number(&paper_example().word), 7);
        assert_eq!(winding_number(&word(12, &[(5, 1), (12, -5)])), 12);
        assert_eq!(winding_number(&word(2, &[(2, 3), (2, -1)])), 2);
    }

    #[test]
    fn parse_words() {
        let w = BraidWord::parse("W3^-1 W7^3", None).unwrap();
        assert_eq!(w, paper_example().word);
        assert_eq!(w.to_string(), "W3^-1 W7^3");
        let w = BraidWord::parse("W3  W4^2", Some(6)).unwrap();
        assert_eq!(w.strands(), 6);
        assert_eq!(w.tokens()[0].exponent, 1);
        assert!(matches!(
            BraidWord::parse("W3^0", None),
            Err(Error::InvalidToken { .. })
        ));
        assert!(matches!(
            BraidWord::parse("W1^2", Some(4)),
            Err(Error::InvalidToken { .. })
        ));
        assert!(matches!(
            BraidWord::parse("W5", Some(4)),
            Err(Error::InvalidToken { .. })
        ));
        for bad in ["", "V3", "W", "W3^", "W3^+1", "W-3", "W3^1^2"] {
            assert!(
                matches!(BraidWord::parse(bad, None), Err(Error::Malformed { .. })),
                "{bad:?}"
            );
        }
        assert_eq!(BraidWord::parse("", Some(3)).unwrap().tokens().len(), 0);
    }

    #[test]
    fn family_examples() {
        let r = type_iv_family(1).unwrap();
        assert_eq!((r.s, r.t, r.u), (3, 4, 5));
        assert_eq!(r.pair_plus.0.to_string(), "L(8,5)");
        assert_eq!(r.pair_minus.0.to_string(), "L(2,1)");
        assert_eq!(r.word.to_string(), "W3^1 W4^-3");
        assert_eq!(winding_number(&r.word), 4);
        let r = type_iv_family(2).unwrap();
        assert_eq!((r.s, r.t, r.u), (5, 12, 13));
        assert_eq!(r.pair_plus.0.to_string(), "L(18,7)");
        assert_eq!(r.pair_minus.0.to_string(), "L(8,3)");
        assert!(r.family_is_non_example);
        assert!(matches!(type_iv_family(0), Err(Error::NonPositive { .. })));
        assert!(matches!(type_iv_family(u64::MAX), Err(Error::Overflow(_))));
    }

    #[test]
    fn family_serializes() {
        let json = serde_json::to_value(type_iv_family(1).unwrap()).unwrap();
        assert_eq!(json["pair_plus"][0], "L(8,5)");
        assert_eq!(json["pair_plus"][1], "L(8,3)");
        assert_eq!(json["word"], "W3^1 W4^-3");
        assert_eq!(json["family_is_non_example"], true);
    }

    #[test]
    fn example_special_slopes() {
        let ex = paper_example();
        assert_eq!(ex.winding, 7);
        let d = |i: usize, j: usize| {
            crate::slope::distance(ex.special_slopes[i], ex.special_slopes[j]).unwrap()
        };
        // 1/0 meets n/1 once; the large distances only appear after the
        // meridians are rescaled by the winding number.
        assert_eq!((d(0, 1), d(0, 2), d(1, 2)), (1, 1, 1));
    }

    #[test]
    fn family_invariants_small() {
        for k in 1..200 {
            let r = type_iv_family(k).unwrap();
            assert_eq!(r.s * r.s + r.t * r.t, r.u * r.u);
            assert!(is_oriented_homeo(r.pair_plus.0, reverse(r.pair_plus.1)));
            assert!(is_oriented_homeo(r.pair_minus.0, reverse(r.pair_minus.1)));
        }
    }

    fn word_strategy() -> impl Strategy<Value = BraidWord> {
        (2usize..10).prop_flat_map(|n| {
            proptest::collection::vec((2..=n, -9i64..=9), 0..8).prop_map(move |ts| {
                let tokens = ts
                    .into_iter()
                    .filter(|(_, e)| *e != 0)
                    .map(|(index, exponent)| BraidToken { index, exponent })
                    .collect();
                BraidWord::new(n, tokens).unwrap()
            })
        })
    }

    fn word_pair_strategy() -> impl Strategy<Value = (BraidWord, BraidWord)> {
        (2usize..10).prop_flat_map(|n| {
            let side = move || {
                proptest::collection::vec((2..=n, 1i64..=9, any::<bool>()), 0..6).prop_map(
                    move |ts| {
                        let tokens = ts
                            .into_iter()
                            .map(|(index, e, neg)| BraidToken {
                                index,
                                exponent: if neg { -e } else { e },
                            })
                            .collect();
                        BraidWord::new(n, tokens).unwrap()
                    },
                )
            };
            (side(), side())
        })
    }

    fn apply_swaps(strands: usize, swaps: impl IntoIterator<Item = usize>) -> Vec<usize> {
        // position tracking: where does the strand starting at i end up
        let mut images: Vec<usize> = (0..strands).collect();
        for j in swaps {
            for x in images.iter_mut() {
                if *x == j {
                    *x = j + 1;
                } else if *x == j + 1 {
                    *x = j;
                }
            }
        }
        images
    }

    /// Independent oracle: expand `W_n` as `σ_{n-1} ⋯ σ_1` (and its inverse
    /// as `σ_1 ⋯ σ_{n-1}`), then apply the transpositions left to right.
    fn transposition_images(strands: usize, tokens: &[BraidToken]) -> Vec<usize> {
        let mut swaps = Vec::new();
        for t in tokens {
            for _ in 0..t.exponent.unsigned_abs() {
                if t.exponent > 0 {
                    swaps.extend((0..t.index - 1).rev());
                } else {
                    swaps.extend(0..t.index - 1);
                }
            }
        }
        apply_swaps(strands, swaps)
    }

    /// The other reading of `W_n`, as the ascending product `σ_1 ⋯ σ_{n-1}`.
    fn transposition_images_ascending(strands: usize, tokens: &[BraidToken]) -> Vec<usize> {
        let mut swaps = Vec::new();
        for t in tokens {
            for _ in 0..t.exponent.unsigned_abs() {
                if t.exponent > 0 {
                    swaps.extend(0..t.index - 1);
                } else {
                    swaps.extend((0..t.index - 1).rev());
                }
            }
        }
        apply_swaps(strands, swaps)
    }

    proptest! {
        #[test]
        fn matches_oracle(w in word_strategy()) {
            let tokens: Vec<_> = w.tokens().iter().map(|t| (t.index, t.exponent)).collect();
            let oracle = oracle_images(w.strands(), &tokens);
            let p = permutation_of(&w);
            for (i, &expected) in oracle.iter().enumerate() {
                prop_assert_eq!(p.image(i) + 1, expected);
            }
        }

        #[test]
        fn homomorphism_on_concat((w1, w2) in word_pair_strategy()) {
            let joined = permutation_of(&w1.concat(&w2));
            prop_assert_eq!(joined, permutation_of(&w1).then(&permutation_of(&w2)));
        }

        #[test]
        fn inverse_word_keeps_cycle_type(w in word_strategy()) {
            let p = permutation_of(&w);
            prop_assert_eq!(permutation_of(&w.inverse()), p.inverse());
            prop_assert_eq!(p.cycle_type(), permutation_of(&w.inverse()).cycle_type());
            prop_assert_eq!(is_knot(&w), is_knot(&w.inverse()));
        }

        #[test]
        fn matches_transposition_expansion(w in word_strategy()) {
            let p = permutation_of(&w);
            let images = transposition_images(w.strands(), w.tokens());
            for (i, &expected) in images.iter().enumerate() {
                prop_assert_eq!(p.image(i), expected);
            }
        }

        // With at most two tokens every composition convention yields
        // conjugate permutations, so knot detection cannot depend on it.
        #[test]
        fn short_words_convention_free(w in word_strategy()) {
            prop_assume!(w.tokens().len() <= 2);
            let right_to_left = w.tokens().iter().rev().fold(Permutation::identity(w.strands()), |acc, t| {
                acc.then(&Permutation::rotation(w.strands(), t.index, t.exponent))
            });
            prop_assert_eq!(right_to_left.cycle_type(), permutation_of(&w).cycle_type());
            let ascending = transposition_images_ascending(w.strands(), w.tokens());
            let ascending = Permutation::from_images(ascending).unwrap();
            prop_assert_eq!(ascending.cycle_type(), permutation_of(&w).cycle_type());
        }

        #[test]
        fn inverse_roundtrip(w in word_strategy()) {
            let p = permutation_of(&w);
            prop_assert_eq!(p.then(&p.inverse()), Permutation::identity(w.strands()));
            prop_assert_eq!(Permutation::from_images(p.0.clone()), Some(p));
        }
    }
}
