//! Finite sequences over an unbounded alphabet.
//!
//! Letters are dense `u32` ids. Names never matter: two sequences are equal
//! as patterns when they are isomorphic, i.e. equal after a bijective
//! relabeling, and [`Sequence::normalize`] picks the representative whose
//! ids appear in first-occurrence order `0, 1, 2, ...`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A finite sequence of letter ids. Adjacent equal letters are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence {
    letters: Vec<u32>,
}

/// Witness that `v` occurs in `u`.
///
/// `positions[j]` is the index in `u` matched by `v[j]`; `letter_map[x]` is
/// the letter of `u` assigned to letter `x` of `normalize(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqOccurrence {
    pub positions: Vec<usize>,
    pub letter_map: Vec<u32>,
}

impl Sequence {
    pub fn new(letters: Vec<u32>) -> Self {
        Sequence { letters }
    }

    /// Maps arbitrary tokens to ids by first occurrence. The result is
    /// already normalized.
    pub fn from_tokens<T: PartialEq, I: IntoIterator<Item = T>>(tokens: I) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let mut letters = Vec::new();
        for tok in tokens {
            let id = match seen.iter().position(|s| *s == tok) {
                Some(i) => i,
                None => {
                    seen.push(tok);
                    seen.len() - 1
                }
            };
            letters.push(id as u32);
        }
        Sequence { letters }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of distinct letters.
    pub fn distinct_count(&self) -> usize {
        let mut ids: Vec<u32> = self.letters.clone();
        ids.sort_unstable();
        ids.dedup();
        ids.len()
    }

    /// Relabels letters by first occurrence.
    pub fn normalize(&self) -> Sequence {
        Sequence::from_tokens(self.letters.iter().copied())
    }

    pub fn is_normalized(&self) -> bool {
        let mut next = 0u32;
        for &x in &self.letters {
            if x > next {
                return false;
            }
            if x == next {
                next += 1;
            }
        }
        true
    }

    pub fn is_isomorphic(&self, other: &Sequence) -> bool {
        self.len() == other.len() && self.normalize() == other.normalize()
    }

    /// The subsequence at the given (strictly increasing) positions.
    pub fn subsequence(&self, positions: &[usize]) -> Sequence {
        Sequence::new(positions.iter().map(|&p| self.letters[p]).collect())
    }

    /// Collapses runs of equal adjacent letters to a single letter.
    pub fn collapse_runs(&self) -> Sequence {
        let mut out: Vec<u32> = Vec::with_capacity(self.letters.len());
        for &x in &self.letters {
            if out.last() != Some(&x) {
                out.push(x);
            }
        }
        Sequence::new(out)
    }

    /// Occurrence counts indexed by letter id.
    pub fn letter_counts(&self) -> Vec<usize> {
        let size = self.letters.iter().max().map_or(0, |&m| m as usize + 1);
        let mut counts = vec![0usize; size];
        for &x in &self.letters {
            counts[x as usize] += 1;
        }
        counts
    }

    /// Returns a witness iff some subsequence of `self` is isomorphic to `v`.
    pub fn find(&self, v: &Sequence) -> Option<SeqOccurrence> {
        seq_contains(self, v)
    }

    pub fn contains(&self, v: &Sequence) -> bool {
        seq_contains(self, v).is_some()
    }
}

impl From<Vec<u32>> for Sequence {
    fn from(letters: Vec<u32>) -> Self {
        Sequence::new(letters)
    }
}

impl fmt::Display for Sequence {
    /// Letters below 26 print as `a..z`; larger ids print as `#id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.letters {
            if x < 26 {
                write!(f, "{}", (b'a' + x as u8) as char)?;
            } else {
                write!(f, "#{x}")?;
            }
        }
        Ok(())
    }
}

/// The alternation `abab...` of length `n`, starting with letter 0.
pub fn alternation(n: usize) -> Sequence {
    Sequence::new((0..n).map(|i| (i % 2) as u32).collect())
}

/// Searches for a subsequence of `u` isomorphic to `v`.
///
/// Once every letter of `v` has been mapped, the earliest occurrence after
/// the previous match is always a safe choice, so the search only branches
/// when `v` introduces a new letter: it then tries every letter of `u` not
/// yet in the image, each at its first occurrence after the previous match.
/// The empty pattern is contained in everything.
pub fn seq_contains(u: &Sequence, v: &Sequence) -> Option<SeqOccurrence> {
    let v = v.normalize();
    if v.len() > u.len() {
        return None;
    }
    let alphabet = u.letters.iter().max().map_or(0, |&m| m as usize + 1);
    // next[i][x]: first index >= i holding letter x, or u.len().
    let n = u.len();
    let mut next = vec![n as u32; (n + 1) * alphabet];
    for i in (0..n).rev() {
        let (head, tail) = next.split_at_mut((i + 1) * alphabet);
        head[i * alphabet..].copy_from_slice(&tail[..alphabet]);
        head[i * alphabet + u.letters[i] as usize] = i as u32;
    }
    let mut search = SeqSearch {
        u,
        v: &v,
        next: &next,
        alphabet,
        map: vec![u32::MAX; v.distinct_count()],
        used: vec![false; alphabet],
        positions: Vec::with_capacity(v.len()),
    };
    if search.run(0, 0) {
        Some(SeqOccurrence {
            positions: search.positions,
            letter_map: search.map,
        })
    } else {
        None
    }
}

struct SeqSearch<'a> {
    u: &'a Sequence,
    v: &'a Sequence,
    next: &'a [u32],
    alphabet: usize,
    map: Vec<u32>,
    used: Vec<bool>,
    positions: Vec<usize>,
}

impl SeqSearch<'_> {
    fn run(&mut self, j: usize, from: usize) -> bool {
        if j == self.v.len() {
            return true;
        }
        let n = self.u.len();
        if n - from < self.v.len() - j {
            return false;
        }
        let x = self.v.letters[j] as usize;
        let mapped = self.map[x];
        if mapped != u32::MAX {
            let p = self.next[from * self.alphabet + mapped as usize] as usize;
            if p == n {
                return false;
            }
            self.positions.push(p);
            if self.run(j + 1, p + 1) {
                return true;
            }
            self.positions.pop();
            return false;
        }
        for y in 0..self.alphabet {
            if self.used[y] {
                continue;
            }
            let p = self.next[from * self.alphabet + y] as usize;
            if p == n {
                continue;
            }
            self.map[x] = y as u32;
            self.used[y] = true;
            self.positions.push(p);
            if self.run(j + 1, p + 1) {
                return true;
            }
            self.positions.pop();
            self.used[y] = false;
            self.map[x] = u32::MAX;
        }
        false
    }
}
