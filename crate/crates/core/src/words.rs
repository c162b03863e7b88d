//! Words in Dehn twists and half-twists.
//!
//! Text grammar, shared by presentations and braids: whitespace-separated
//! letters, each a name with an optional integer exponent `^k`. The letter
//! `C1` names the twist on curve `c1` (names compare case-insensitively).
//! On an arc the letter is the half-twist. The generator kind can also be
//! forced with `T[name]` or `H[name]`, which fails if it does not match the
//! curve. The leftmost letter is written first; as mappings, words act
//! rightmost letter first.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::surfaces::{CurveKind, CurveSystem};

/// A lexical letter: name, exponent, and 1-based column of the token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub name: String,
    pub exponent: i64,
    pub position: usize,
    /// Explicit `T[..]` / `H[..]` marker, if any.
    pub forced: Option<GeneratorKind>,
}

/// Splits `text` into letters with exponents.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(start, ch)) = chars.peek() {
        if ch.is_whitespace() || ch == '·' || ch == '*' {
            chars.next();
            continue;
        }
        let mut end = start;
        while let Some(&(i, c)) = chars.peek() {
            if c.is_whitespace() || c == '·' || c == '*' {
                break;
            }
            end = i + c.len_utf8();
            chars.next();
        }
        let raw = &text[start..end];
        let position = text[..start].chars().count() + 1;
        out.push(parse_token(raw, position)?);
    }
    Ok(out)
}

fn parse_token(raw: &str, position: usize) -> Result<Token> {
    let (base, exponent) = match raw.split_once('^') {
        Some((base, exp)) => {
            let exp_clean = exp.trim_start_matches('{').trim_end_matches('}');
            let exponent = exp_clean
                .parse::<i64>()
                .map_err(|_| Error::parse(raw, position, "malformed exponent"))?;
            (base, exponent)
        }
        None => (raw, 1),
    };
    let (name, forced) = if let Some(inner) = strip_marker(base, 'T') {
        (inner, Some(GeneratorKind::Twist))
    } else if let Some(inner) = strip_marker(base, 'H') {
        (inner, Some(GeneratorKind::HalfTwist))
    } else {
        (base, None)
    };
    let valid = !name.is_empty()
        && name.chars().next().is_some_and(char::is_alphabetic)
        && name
            .chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
    if !valid {
        return Err(Error::parse(raw, position, "malformed letter name"));
    }
    Ok(Token {
        name: name.to_string(),
        exponent,
        position,
        forced,
    })
}

fn strip_marker(base: &str, marker: char) -> Option<&str> {
    base.strip_prefix(marker)?
        .strip_prefix('[')?
        .strip_suffix(']')
}

/// One letter of a free group: generator index and sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: usize,
    pub inverse: bool,
}

impl Syllable {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Syllable { generator, inverse }
    }

    pub fn inverted(self) -> Self {
        Syllable {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A word in a free group on numbered generators, one syllable per letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<Syllable>,
}

impl FreeWord {
    pub fn new(letters: Vec<Syllable>) -> Self {
        FreeWord { letters }
    }

    pub fn empty() -> Self {
        FreeWord::default()
    }

    /// Expands `g^k` into `|k|` signed letters.
    pub fn power_of(generator: usize, exponent: i64) -> Self {
        let s = Syllable::new(generator, exponent < 0);
        FreeWord {
            letters: vec![s; exponent.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Syllable] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|s| s.inverted()).collect(),
        }
    }

    /// Cancels adjacent `x x⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> FreeWord {
        let mut stack: Vec<Syllable> = Vec::with_capacity(self.letters.len());
        for &s in &self.letters {
            if stack.last() == Some(&s.inverted()) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        FreeWord { letters: stack }
    }

    /// `u · w · u⁻¹`
    pub fn conjugate(&self, by: &FreeWord) -> FreeWord {
        by.concat(self).concat(&by.inverse())
    }

    /// `u · w · u⁻¹ · w⁻¹` with `u = self`.
    pub fn commutator(&self, w: &FreeWord) -> FreeWord {
        self.concat(w).concat(&self.inverse()).concat(&w.inverse())
    }

    /// Signed count of each generator, for `generators` generators.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0; generators];
        for s in &self.letters {
            sums[s.generator] += s.sign();
        }
        sums
    }

    /// Parses the text grammar against a list of generator names.
    pub fn parse_with(text: &str, resolve: impl Fn(&Token) -> Result<usize>) -> Result<FreeWord> {
        let mut letters = Vec::new();
        for tok in tokenize(text)? {
            let g = resolve(&tok)?;
            letters.extend(FreeWord::power_of(g, tok.exponent).letters);
        }
        Ok(FreeWord { letters })
    }

    /// Renders with the given generator names, collapsing runs into powers.
    pub fn display_with(&self, name: impl Fn(usize) -> String) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let s = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == s {
                j += 1;
            }
            let k = (j - i) as i64 * s.sign();
            parts.push(if k == 1 {
                name(s.generator)
            } else {
                format!("{}^{k}", name(s.generator))
            });
            i = j;
        }
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Twist,
    HalfTwist,
}

/// Readable view of one letter of a [`Word`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub curve_name: String,
    pub kind: GeneratorKind,
    pub sign: i64,
}

/// A word in twists and half-twists over a fixed curve system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    system: Arc<CurveSystem>,
    letters: FreeWord,
}

impl Word {
    pub fn new(system: Arc<CurveSystem>, letters: FreeWord) -> Result<Self> {
        let n = system.curves().len();
        if let Some(s) = letters.letters().iter().find(|s| s.generator >= n) {
            return Err(Error::invalid(format!(
                "letter refers to curve #{} but the system has {n} curves",
                s.generator
            )));
        }
        Ok(Word { system, letters })
    }

    pub fn empty(system: Arc<CurveSystem>) -> Self {
        Word {
            system,
            letters: FreeWord::empty(),
        }
    }

    /// Builds a word from explicit generators, checking kinds against curves.
    pub fn from_generators(system: Arc<CurveSystem>, generators: &[Generator]) -> Result<Self> {
        let mut letters = Vec::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            let idx = system
                .find(&g.curve_name)
                .ok_or_else(|| Error::UnknownCurve {
                    name: g.curve_name.clone(),
                    position: i + 1,
                })?;
            check_kind(&system, idx, g.kind, &g.curve_name, i + 1)?;
            if g.sign != 1 && g.sign != -1 {
                return Err(Error::invalid("generator sign must be +1 or -1"));
            }
            letters.push(Syllable::new(idx, g.sign < 0));
        }
        Ok(Word {
            system,
            letters: FreeWord::new(letters),
        })
    }

    pub fn system(&self) -> &Arc<CurveSystem> {
        &self.system
    }

    pub fn free_word(&self) -> &FreeWord {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn generators(&self) -> Vec<Generator> {
        self.letters
            .letters()
            .iter()
            .map(|s| {
                let c = self.system.curve(s.generator);
                Generator {
                    curve_name: c.name.clone(),
                    kind: kind_of(c.kind),
                    sign: s.sign(),
                }
            })
            .collect()
    }

    fn same_system(&self, other: &Word) -> Result<()> {
        if Arc::ptr_eq(&self.system, &other.system) || self.system == other.system {
            Ok(())
        } else {
            Err(Error::MixedSystems)
        }
    }

    fn with(&self, letters: FreeWord) -> Word {
        Word {
            system: Arc::clone(&self.system),
            letters,
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        self.same_system(other)?;
        Ok(self.with(self.letters.concat(&other.letters)))
    }

    pub fn pow(&self, k: i64) -> Word {
        self.with(self.letters.pow(k))
    }

    pub fn inverse(&self) -> Word {
        self.with(self.letters.inverse())
    }

    pub fn free_reduce(&self) -> Word {
        self.with(self.letters.free_reduce())
    }

    /// `u · self · u⁻¹`
    pub fn conjugate(&self, u: &Word) -> Result<Word> {
        self.same_system(u)?;
        Ok(self.with(self.letters.conjugate(&u.letters)))
    }

    /// `self · w · self⁻¹ · w⁻¹`
    pub fn commutator(&self, w: &Word) -> Result<Word> {
        self.same_system(w)?;
        Ok(self.with(self.letters.commutator(&w.letters)))
    }

    /// Signed count of twist letters on nonseparating curves.
    pub fn nonseparating_exponent_sum(&self) -> i64 {
        self.letters
            .letters()
            .iter()
            .filter(|s| self.system.curve(s.generator).kind == CurveKind::Nonseparating)
            .map(|s| s.sign())
            .sum()
    }

    /// Signed count of half-twist letters.
    pub fn halftwist_exponent_sum(&self) -> i64 {
        self.letters
            .letters()
            .iter()
            .filter(|s| self.system.curve(s.generator).kind.is_arc())
            .map(|s| s.sign())
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .letters
            .display_with(|g| self.system.curve(g).name.to_uppercase());
        f.write_str(&s)
    }
}

fn kind_of(kind: CurveKind) -> GeneratorKind {
    if kind.is_arc() {
        GeneratorKind::HalfTwist
    } else {
        GeneratorKind::Twist
    }
}

fn check_kind(
    system: &CurveSystem,
    idx: usize,
    wanted: GeneratorKind,
    name: &str,
    position: usize,
) -> Result<()> {
    match (wanted, kind_of(system.curve(idx).kind)) {
        (GeneratorKind::HalfTwist, GeneratorKind::Twist) => {
            Err(Error::parse(name, position, "half-twist on a closed curve"))
        }
        (GeneratorKind::Twist, GeneratorKind::HalfTwist) => {
            Err(Error::parse(name, position, "twist on an arc"))
        }
        _ => Ok(()),
    }
}

/// Parses a word over `system`, expanding exponents into signed letters.
pub fn parse_word(text: &str, system: &Arc<CurveSystem>) -> Result<Word> {
    let letters = FreeWord::parse_with(text, |tok| {
        let idx = system.find(&tok.name).ok_or_else(|| Error::UnknownCurve {
            name: tok.name.clone(),
            position: tok.position,
        })?;
        if let Some(kind) = tok.forced {
            check_kind(system, idx, kind, &tok.name, tok.position)?;
        }
        Ok(idx)
    })?;
    Ok(Word {
        system: Arc::clone(system),
        letters,
    })
}

/// Image of a word in `H_1(Γ*_{g,r}) ≅ H_1(Γ_{g,0}) ⊕ H_1(S_r)`.
///
/// The first component is the class of `[D]`, the twist on any
/// nonseparating curve, in `Z/n` with `n = |H_1(Γ_{g,0})|` (`n = 1` when
/// that group is trivial). The second is the half-twist class in `Z/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AbelianImage {
    pub twist_component: u64,
    pub twist_modulus: u64,
    pub halftwist_component: u64,
}

impl AbelianImage {
    pub const HALFTWIST_MODULUS: u64 = 2;

    pub fn new(twist: i64, twist_modulus: u64, halftwist: i64) -> Self {
        AbelianImage {
            twist_component: twist.rem_euclid(twist_modulus as i64) as u64,
            twist_modulus,
            halftwist_component: halftwist.rem_euclid(Self::HALFTWIST_MODULUS as i64) as u64,
        }
    }

    pub fn zero(twist_modulus: u64) -> Self {
        Self::new(0, twist_modulus, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.twist_component == 0 && self.halftwist_component == 0
    }

    /// `k · self`
    pub fn scale(&self, k: i64) -> Self {
        let m = self.twist_modulus as i128;
        let t = (self.twist_component as i128 * k as i128).rem_euclid(m) as i64;
        let h = (self.halftwist_component as i128 * k as i128).rem_euclid(2) as i64;
        Self::new(t, self.twist_modulus, h)
    }
}

impl std::ops::Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        assert_eq!(
            self.twist_modulus, rhs.twist_modulus,
            "images in different groups"
        );
        AbelianImage::new(
            (self.twist_component + rhs.twist_component) as i64,
            self.twist_modulus,
            (self.halftwist_component + rhs.halftwist_component) as i64,
        )
    }
}

impl fmt::Display for AbelianImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            self.twist_component, self.halftwist_component
        )
    }
}

/// `|H_1(Γ_{g,0})|` for `g >= 1`: 12, 10, then 1.
pub fn closed_h1_order(g: u32) -> u64 {
    match g {
        0 => panic!("genus 0 has no twist class"),
        1 => 12,
        2 => 10,
        _ => 1,
    }
}

/// Abelianization image of `w` in `H_1(Γ*_{g,r})`.
///
/// All twists on nonseparating curves are conjugate, so each contributes
/// `±[D]`; separating and boundary-parallel twists are products of
/// commutators and contribute nothing. Half-twists add `±1` in `Z/2`, and
/// need `r >= 2` to exist at all.
pub fn abelian_image(w: &Word, g: u32, r: u32) -> Result<AbelianImage> {
    if g == 0 {
        return Err(Error::invalid(
            "abelian image needs genus >= 1; use a genus-0 presentation instead",
        ));
    }
    let half = w.halftwist_exponent_sum();
    if r < 2
        && w.letters
            .letters()
            .iter()
            .any(|s| w.system.curve(s.generator).kind.is_arc())
    {
        return Err(Error::invalid(
            "half-twists need at least two boundary components",
        ));
    }
    Ok(AbelianImage::new(
        w.nonseparating_exponent_sum(),
        closed_h1_order(g),
        half,
    ))
}
