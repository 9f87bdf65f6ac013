//! Basic triples: three nontrivial two-site words that pairwise anticommute
//! and multiply to `+-i` times the identity, so that for a suitable cyclic
//! order `A B = i C`, `B C = i A`, `C A = i B`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::pauli::{commute_sign, mul_words, LetterTable, PauliWord, Phase};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasicTriple {
    /// Members in lexicographic order.
    members: [PauliWord; 3],
    /// The same members ordered so that `A B = +i C`.
    cyclic: [PauliWord; 3],
}

impl BasicTriple {
    /// Accepts three words forming a basic triple under `table`, in any order.
    pub fn try_new_in(table: &LetterTable, a: PauliWord, b: PauliWord, c: PauliWord) -> Option<Self> {
        let mut members = [a, b, c];
        members.sort();
        let [x, y, z] = &members;
        if x == y || y == z || x.len() != 2 || members.iter().any(PauliWord::is_identity) {
            return None;
        }
        let pairs = [(x, y), (y, z), (x, z)];
        if pairs.iter().any(|(p, q)| commute_sign(p, q) != Ok(-1)) {
            return None;
        }
        let (p1, xy) = table.mul_words(x, y).ok()?;
        let (p2, xyz) = table.mul_words(&xy, z).ok()?;
        if !xyz.is_identity() {
            return None;
        }
        let cyclic = match p1 * p2 {
            Phase::I => [x.clone(), y.clone(), z.clone()],
            Phase::MINUS_I => [y.clone(), x.clone(), z.clone()],
            _ => return None,
        };
        Some(BasicTriple { members, cyclic })
    }

    pub fn try_new(a: PauliWord, b: PauliWord, c: PauliWord) -> Option<Self> {
        Self::try_new_in(&LetterTable::standard(), a, b, c)
    }

    pub fn members(&self) -> &[PauliWord; 3] {
        &self.members
    }

    pub fn cyclic(&self) -> &[PauliWord; 3] {
        &self.cyclic
    }

    pub fn contains(&self, w: &PauliWord) -> bool {
        self.members.contains(w)
    }

    pub fn labels(&self) -> [String; 3] {
        self.members.clone().map(|w| w.to_string())
    }
}

impl fmt::Display for BasicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.members;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Scans all 455 unordered triples of nontrivial two-site words.
pub fn enumerate_basic_triples() -> Vec<BasicTriple> {
    enumerate_basic_triples_in(&LetterTable::standard())
}

pub fn enumerate_basic_triples_in(table: &LetterTable) -> Vec<BasicTriple> {
    let words = PauliWord::nontrivial(2);
    let mut out = Vec::new();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            for k in j + 1..words.len() {
                if let Some(t) = BasicTriple::try_new_in(table, words[i].clone(), words[j].clone(), words[k].clone()) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    out
}

/// The 17 sets of the published listing, transcribed in their printed order
/// and member order. The listing omits the two single-particle sets and the
/// `(E20, E13, E33)` set.
pub const LISTED_TRIPLES: [[(u8, u8); 3]; 17] = [
    [(0, 1), (1, 2), (1, 3)],
    [(0, 1), (2, 2), (2, 3)],
    [(0, 1), (3, 2), (3, 3)],
    [(0, 2), (1, 1), (1, 3)],
    [(0, 2), (2, 1), (2, 3)],
    [(0, 2), (3, 1), (3, 3)],
    [(0, 3), (1, 1), (1, 2)],
    [(0, 3), (2, 1), (2, 2)],
    [(0, 3), (3, 1), (3, 2)],
    [(1, 0), (2, 3), (3, 3)],
    [(1, 0), (2, 2), (3, 2)],
    [(1, 0), (2, 1), (3, 1)],
    [(2, 0), (1, 2), (3, 2)],
    [(2, 0), (1, 1), (3, 1)],
    [(3, 0), (1, 3), (2, 3)],
    [(3, 0), (1, 2), (2, 2)],
    [(3, 0), (1, 1), (2, 1)],
];

/// The listed sets as sorted word triples, in listing order.
pub fn listed_word_sets() -> Vec<[PauliWord; 3]> {
    LISTED_TRIPLES
        .iter()
        .map(|set| {
            let mut ws = set.map(|(i, j)| PauliWord::pair(i, j));
            ws.sort();
            ws
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    /// Enumerated triples absent from the listing.
    pub found_not_listed: Vec<[String; 3]>,
    /// Listed sets the enumeration did not produce.
    pub listed_not_found: Vec<[String; 3]>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.found_not_listed.is_empty() && self.listed_not_found.is_empty()
    }
}

/// Compares `found` with an arbitrary reference list of word sets.
pub fn diff_triples(found: &[BasicTriple], reference: &[[PauliWord; 3]]) -> DiffReport {
    let label = |ws: &[PauliWord; 3]| ws.clone().map(|w| w.to_string());
    let sorted_ref: Vec<[PauliWord; 3]> = reference
        .iter()
        .map(|ws| {
            let mut s = ws.clone();
            s.sort();
            s
        })
        .collect();
    let found_not_listed = found
        .iter()
        .filter(|t| !sorted_ref.contains(t.members()))
        .map(|t| label(t.members()))
        .collect();
    let listed_not_found = sorted_ref
        .iter()
        .filter(|ws| !found.iter().any(|t| t.members() == *ws))
        .map(label)
        .collect();
    DiffReport { found_not_listed, listed_not_found }
}

/// Compares `found` with the published listing.
pub fn diff_with_paper_list(found: &[BasicTriple]) -> DiffReport {
    diff_triples(found, &listed_word_sets())
}

/// Word -> triples containing it. The identity word never appears.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IncidenceMap {
    map: BTreeMap<PauliWord, Vec<BasicTriple>>,
}

impl IncidenceMap {
    pub fn get(&self, w: &PauliWord) -> Option<&[BasicTriple]> {
        self.map.get(w).map(Vec::as_slice)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PauliWord, &Vec<BasicTriple>)> {
        self.map.iter()
    }

    pub fn total_memberships(&self) -> usize {
        self.map.values().map(Vec::len).sum()
    }
}

pub fn build_incidence(found: &[BasicTriple]) -> IncidenceMap {
    let mut map: BTreeMap<PauliWord, Vec<BasicTriple>> = BTreeMap::new();
    for t in found {
        for w in t.members() {
            map.entry(w.clone()).or_default().push(t.clone());
        }
    }
    IncidenceMap { map }
}

/// One-based positions in the published listing of the sets containing `w`.
pub fn listed_positions(w: &PauliWord) -> Vec<usize> {
    listed_word_sets()
        .iter()
        .enumerate()
        .filter(|(_, ws)| ws.contains(w))
        .map(|(k, _)| k + 1)
        .collect()
}

/// `(phase, word)` for `a b`; convenience for callers checking the cyclic
/// relations.
pub fn product(a: &PauliWord, b: &PauliWord) -> (Phase, PauliWord) {
    mul_words(a, b).expect("two-site words")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(i: u8, j: u8) -> PauliWord {
        PauliWord::pair(i, j)
    }

    /// Independent count: every anticommuting pair of nontrivial words closes
    /// into exactly one triple, and each triple holds three such pairs.
    fn brute_force_count() -> usize {
        let words = PauliWord::nontrivial(2);
        let mut anti_pairs = 0;
        for a in 0..words.len() {
            for b in a + 1..words.len() {
                let (x, y) = (words[a].letters(), words[b].letters());
                let clashes = (0..2).filter(|&s| x[s].index() != 0 && y[s].index() != 0 && x[s] != y[s]).count();
                if clashes % 2 == 1 {
                    anti_pairs += 1;
                }
            }
        }
        assert_eq!(anti_pairs, 60);
        anti_pairs / 3
    }

    #[test]
    fn count_matches_brute_force() {
        assert_eq!(brute_force_count(), 20);
        assert_eq!(enumerate_basic_triples().len(), 20);
    }

    #[test]
    fn acceptance_examples() {
        assert!(BasicTriple::try_new(w(0, 1), w(1, 2), w(1, 3)).is_some());
        assert!(BasicTriple::try_new(w(0, 1), w(0, 2), w(0, 3)).is_some());
        assert!(BasicTriple::try_new(w(1, 1), w(2, 2), w(3, 3)).is_none());
        // Pairwise anticommuting but not closed.
        assert!(BasicTriple::try_new(w(1, 0), w(2, 0), w(3, 1)).is_none());
    }

    #[test]
    fn cyclic_relations_hold() {
        for t in enumerate_basic_triples() {
            let [a, b, c] = t.cyclic();
            assert_eq!(product(a, b), (Phase::I, c.clone()));
            assert_eq!(product(b, c), (Phase::I, a.clone()));
            assert_eq!(product(c, a), (Phase::I, b.clone()));
        }
    }

    #[test]
    fn diff_against_listing() {
        let found = enumerate_basic_triples();
        let d = diff_with_paper_list(&found);
        assert!(d.listed_not_found.is_empty());
        let missing: Vec<_> = d.found_not_listed.iter().map(|t| t.join(",")).collect();
        assert_eq!(missing, ["E01,E02,E03", "E10,E20,E30", "E13,E20,E33"]);
        assert!(diff_triples(&found, &found.iter().map(|t| t.members().clone()).collect::<Vec<_>>()).is_empty());
    }

    #[test]
    fn incidence() {
        let found = enumerate_basic_triples();
        let inc = build_incidence(&found);
        for word in PauliWord::nontrivial(2) {
            assert_eq!(inc.get(&word).unwrap().len(), 4, "{word}");
        }
        assert!(inc.get(&PauliWord::identity(2)).is_none());
        assert_eq!(inc.total_memberships(), 3 * found.len());
        assert_eq!(listed_positions(&w(1, 2)), [1, 7, 13, 16]);
    }

    #[test]
    fn deterministic() {
        assert_eq!(enumerate_basic_triples(), enumerate_basic_triples());
    }
}
