//! Braid words, their images in the symmetric group, and the lift of
//! six-strand braids to genus-2 twist words.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::actions::Permutation;
use crate::error::{Error, Result};
use crate::surfaces::chain_system;
use crate::words::{tokenize, FreeWord, Syllable, Word};

/// One letter `σ_i^{±1}`, `i` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<BraidLetter>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::invalid("a braid needs at least 2 strands"));
        }
        if let Some(l) = letters.iter().find(|l| l.index == 0 || l.index >= strands) {
            return Err(Error::invalid(format!(
                "generator s{} is out of range for {strands} strands",
                l.index
            )));
        }
        Ok(BraidWord { strands, letters })
    }

    /// Positive word from 1-based generator indices.
    pub fn from_indices(strands: usize, indices: &[usize]) -> Result<Self> {
        Self::new(
            strands,
            indices
                .iter()
                .map(|&index| BraidLetter {
                    index,
                    inverse: false,
                })
                .collect(),
        )
    }

    /// Parses `s1 s2^-1 s5 ...`; `σ` and `A` prefixes are accepted as well.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in tokenize(text)? {
            let digits = tok
                .name
                .strip_prefix(['s', 'S', 'σ', 'A', 'a'])
                .ok_or_else(|| {
                    Error::parse(&tok.name, tok.position, "expected a braid generator s<i>")
                })?;
            let index: usize = digits.parse().map_err(|_| {
                Error::parse(&tok.name, tok.position, "expected a braid generator s<i>")
            })?;
            if tok.forced.is_some() {
                return Err(Error::parse(
                    &tok.name,
                    tok.position,
                    "kind markers are not allowed in braids",
                ));
            }
            if index == 0 || index >= strands {
                return Err(Error::parse(
                    &tok.name,
                    tok.position,
                    format!("generator out of range for {strands} strands"),
                ));
            }
            let inverse = tok.exponent < 0;
            for _ in 0..tok.exponent.unsigned_abs() {
                letters.push(BraidLetter { index, inverse });
            }
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::Dimension(format!(
                "cannot concatenate braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter {
                    index: l.index,
                    inverse: !l.inverse,
                })
                .collect(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("s{}^-1", l.index)
                } else {
                    format!("s{}", l.index)
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Uses the smallest strand count that fits the letters (at least 2).
    fn from_str(text: &str) -> Result<Self> {
        let max = tokenize(text)?
            .iter()
            .filter_map(|t| {
                t.name
                    .trim_start_matches(['s', 'S', 'σ', 'A', 'a'])
                    .parse::<usize>()
                    .ok()
            })
            .max()
            .unwrap_or(1);
        Self::parse(text, max.max(1) + 1)
    }
}

/// Image in `S_r` under `σ_i ↦ (i i+1)`, rightmost letter applied first, so
/// `σ_{i_1} ... σ_{i_k}` maps to `(i_1 i_1+1) ∘ ... ∘ (i_k i_k+1)`.
pub fn braid_permutation(w: &BraidWord) -> Permutation {
    let mut p = Permutation::identity(w.strands);
    for l in &w.letters {
        let t = Permutation::transposition(w.strands, l.index, l.index + 1)
            .expect("letter indices are in range");
        p = p.compose(&t);
    }
    p
}

pub fn exponent_sum(w: &BraidWord) -> i64 {
    w.letters
        .iter()
        .map(|l| if l.inverse { -1 } else { 1 })
        .sum()
}

/// The 15-letter six-strand word
/// `A5 A4 A5 A3 A4 A5 A2 A3 A4 A1 A2 A3 A1 A2 A1`.
///
/// A 16-letter variant written with `σ`s also circulates,
/// `σ5 σ4 σ5 σ3 σ4 σ5 σ2 σ3 σ4 σ4 σ1 σ2 σ3 σ1 σ2 σ2`; it is not used here,
/// the 15-letter form being the one whose twist count is 15.
pub fn delta_star_word() -> BraidWord {
    BraidWord::from_indices(6, &[5, 4, 5, 3, 4, 5, 2, 3, 4, 1, 2, 3, 1, 2, 1])
        .expect("indices fit six strands")
}

/// Substitutes `σ_i^{±1} ↦ C_i^{±1}` over the genus-2 chain.
pub fn braid_to_genus2_word(w: &BraidWord) -> Result<Word> {
    if w.strands != 6 {
        return Err(Error::invalid(format!(
            "genus-2 lift needs a 6-strand braid, got {}",
            w.strands
        )));
    }
    let system = Arc::new(chain_system(2)?);
    let letters = w
        .letters
        .iter()
        .map(|l| {
            let name = format!("c{}", l.index);
            let idx = system.find(&name).expect("chain has c1..c5");
            Syllable::new(idx, l.inverse)
        })
        .collect();
    Word::new(system, FreeWord::new(letters))
}
