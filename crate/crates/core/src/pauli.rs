//! Pauli words and their phase-exact composition.
//!
//! A single site carries one of the four letters `I, e1, e2, e3` with
//! `e_k^2 = 1`, pairwise anticommutation and the cyclic orientation
//! `e1 e2 = i e3`, `e2 e3 = i e1`, `e3 e1 = i e2`. A [`PauliWord`] is a
//! fixed-length sequence of letters; products are taken site by site and the
//! site phases are accumulated into a single power of `i`.

use std::fmt;

use crate::error::AlgebraError;

/// One site of a Pauli word: `0` is the unit, `1..=3` are `e1, e2, e3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SiteLetter(u8);

impl SiteLetter {
    pub const I: SiteLetter = SiteLetter(0);
    pub const E1: SiteLetter = SiteLetter(1);
    pub const E2: SiteLetter = SiteLetter(2);
    pub const E3: SiteLetter = SiteLetter(3);

    pub const ALL: [SiteLetter; 4] = [Self::I, Self::E1, Self::E2, Self::E3];

    pub fn new(value: u8) -> Result<Self, AlgebraError> {
        if value < 4 {
            Ok(SiteLetter(value))
        } else {
            Err(AlgebraError::LetterOutOfRange(value))
        }
    }

    #[inline]
    pub fn index(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

/// A power of the imaginary unit, `i^exponent`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub fn from_exponent(exponent: i64) -> Self {
        Phase(exponent.rem_euclid(4) as u8)
    }

    #[inline]
    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn conj(self) -> Self {
        Phase((4 - self.0) % 4)
    }

    /// `+1` or `-1` when the phase is real.
    pub fn real_sign(self) -> Option<i8> {
        match self.0 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }
}

impl std::ops::Mul for Phase {
    type Output = Phase;

    fn mul(self, rhs: Phase) -> Phase {
        Phase((self.0 + rhs.0) % 4)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        })
    }
}

/// Single-site multiplication table.
///
/// The standard table is generated from the squaring rule, anticommutation and
/// the cyclic orientation; nothing else is tabulated by hand. Alternative
/// tables exist so that verification runs can be fault-injected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterTable {
    entries: [[(Phase, SiteLetter); 4]; 4],
}

impl LetterTable {
    pub fn standard() -> Self {
        let mut entries = [[(Phase::ONE, SiteLetter::I); 4]; 4];
        for a in SiteLetter::ALL {
            for b in SiteLetter::ALL {
                entries[a.0 as usize][b.0 as usize] = derive_product(a, b);
            }
        }
        LetterTable { entries }
    }

    /// Returns a copy of this table with one product replaced.
    pub fn with_entry(mut self, a: SiteLetter, b: SiteLetter, value: (Phase, SiteLetter)) -> Self {
        self.entries[a.0 as usize][b.0 as usize] = value;
        self
    }

    /// The standard table with the orientation of `e1 e2` flipped.
    pub fn corrupted() -> Self {
        Self::standard().with_entry(SiteLetter::E1, SiteLetter::E2, (Phase::MINUS_I, SiteLetter::E3))
    }

    #[inline]
    pub fn compose(&self, a: SiteLetter, b: SiteLetter) -> (Phase, SiteLetter) {
        self.entries[a.0 as usize][b.0 as usize]
    }

    pub fn mul_words(&self, a: &PauliWord, b: &PauliWord) -> Result<(Phase, PauliWord), AlgebraError> {
        if a.len() != b.len() {
            return Err(AlgebraError::LengthMismatch(a.len(), b.len()));
        }
        let mut phase = Phase::ONE;
        let letters = a
            .letters
            .iter()
            .zip(&b.letters)
            .map(|(&x, &y)| {
                let (p, l) = self.compose(x, y);
                phase = phase * p;
                l
            })
            .collect();
        Ok((phase, PauliWord { letters }))
    }
}

impl Default for LetterTable {
    fn default() -> Self {
        Self::standard()
    }
}

fn derive_product(a: SiteLetter, b: SiteLetter) -> (Phase, SiteLetter) {
    if a.is_identity() {
        return (Phase::ONE, b);
    }
    if b.is_identity() {
        return (Phase::ONE, a);
    }
    if a == b {
        return (Phase::ONE, SiteLetter::I);
    }
    // The third letter is the one not equal to a or b; (a, b) is positively
    // oriented when b follows a cyclically in 1 -> 2 -> 3 -> 1.
    let c = SiteLetter(6 - a.0 - b.0);
    if b.0 == a.0 % 3 + 1 {
        (Phase::I, c)
    } else {
        (Phase::MINUS_I, c)
    }
}

/// Product of two single-site letters under the standard table.
pub fn compose_letters(a: SiteLetter, b: SiteLetter) -> (Phase, SiteLetter) {
    derive_product(a, b)
}

/// An immutable tensor word of site letters.
///
/// Ordering is lexicographic on the letter sequence, which is the canonical
/// order used wherever output must be deterministic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliWord {
    letters: Vec<SiteLetter>,
}

impl PauliWord {
    pub fn new(letters: Vec<SiteLetter>) -> Result<Self, AlgebraError> {
        if letters.is_empty() {
            return Err(AlgebraError::EmptyWord);
        }
        Ok(PauliWord { letters })
    }

    /// Builds a word from raw letter indices, e.g. `[1, 2]` for `E12`.
    pub fn from_indices(indices: &[u8]) -> Result<Self, AlgebraError> {
        let letters = indices.iter().map(|&v| SiteLetter::new(v)).collect::<Result<Vec<_>, _>>()?;
        Self::new(letters)
    }

    /// Two-site shorthand `E_{ij}`. Panics if either index exceeds 3.
    pub fn pair(i: u8, j: u8) -> Self {
        Self::from_indices(&[i, j]).expect("two-site indices must be in 0..=3")
    }

    pub fn identity(len: usize) -> Self {
        assert!(len > 0, "word length must be at least one");
        PauliWord { letters: vec![SiteLetter::I; len] }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[SiteLetter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.iter().all(|l| l.is_identity())
    }

    /// All `4^len` words in lexicographic order.
    pub fn all(len: usize) -> Vec<PauliWord> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<SiteLetter>| {
                    SiteLetter::ALL.into_iter().map(move |l| {
                        let mut w = prefix.clone();
                        w.push(l);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|letters| PauliWord { letters }).collect()
    }

    /// The `4^len - 1` words other than the identity.
    pub fn nontrivial(len: usize) -> Vec<PauliWord> {
        Self::all(len).into_iter().filter(|w| !w.is_identity()).collect()
    }
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("I");
        }
        if self.letters.len() == 1 {
            return write!(f, "e{}", self.letters[0].0);
        }
        f.write_str("E")?;
        for l in &self.letters {
            write!(f, "{}", l.0)?;
        }
        Ok(())
    }
}

/// Product of two words under the standard table.
pub fn mul_words(a: &PauliWord, b: &PauliWord) -> Result<(Phase, PauliWord), AlgebraError> {
    LetterTable::standard().mul_words(a, b)
}

/// `+1` when the words commute, `-1` when they anticommute.
///
/// Two words anticommute exactly when an odd number of sites carry distinct
/// non-unit letters.
pub fn commute_sign(a: &PauliWord, b: &PauliWord) -> Result<i8, AlgebraError> {
    if a.len() != b.len() {
        return Err(AlgebraError::LengthMismatch(a.len(), b.len()));
    }
    let clashes = a
        .letters
        .iter()
        .zip(&b.letters)
        .filter(|(x, y)| !x.is_identity() && !y.is_identity() && x != y)
        .count();
    Ok(if clashes % 2 == 0 { 1 } else { -1 })
}
