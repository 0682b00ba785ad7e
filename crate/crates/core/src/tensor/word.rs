use std::fmt;

const BITS: u32 = 6;
/// Longest storable word.
pub const MAX_LEN: usize = 21;
/// Largest number of distinct letters.
pub const MAX_LETTERS: usize = 63;

/// A word in the free monoid on at most 63 letters, packed left-aligned into
/// a `u128` so that the derived ordering is lexicographic (a proper prefix
/// sorts first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    packed: u128,
    len: u8,
}

impl Word {
    pub const EMPTY: Word = Word { packed: 0, len: 0 };

    pub fn letter(i: usize) -> Word {
        assert!(i < MAX_LETTERS, "letter index {i} out of range");
        Word { packed: ((i as u128) + 1) << (128 - BITS), len: 1 }
    }

    pub fn from_letters(letters: &[usize]) -> Word {
        letters
            .iter()
            .fold(Word::EMPTY, |w, &l| w.concat(Word::letter(l)).expect("word too long"))
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    pub fn get(self, i: usize) -> usize {
        debug_assert!(i < self.len());
        (((self.packed >> (128 - BITS * (i as u32 + 1))) & 0x3f) as usize) - 1
    }

    pub fn letters(self) -> impl Iterator<Item = usize> {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn concat(self, other: Word) -> Option<Word> {
        let len = self.len() + other.len();
        if len > MAX_LEN {
            return None;
        }
        if self.len == 0 {
            return Some(other);
        }
        Some(Word { packed: self.packed | (other.packed >> (BITS * self.len as u32)), len: len as u8 })
    }

    /// Subword `[start, end)`.
    pub fn slice(self, start: usize, end: usize) -> Word {
        debug_assert!(start <= end && end <= self.len());
        if start == end {
            return Word::EMPTY;
        }
        let shifted = self.packed << (BITS * start as u32);
        let keep = BITS * (end - start) as u32;
        let mask = if keep >= 128 { u128::MAX } else { !(u128::MAX >> keep) };
        Word { packed: shifted & mask, len: (end - start) as u8 }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ls: Vec<String> = self.letters().map(|l| l.to_string()).collect();
        write!(f, "<{}>", ls.join(" "))
    }
}
