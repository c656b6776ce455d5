//! Cells of the n-cube, encoded as codes over the alphabet `{0, 1, I}`.
//!
//! A code assigns to each of the n coordinates either a fixed endpoint
//! (`Zero`, `One`) or a free interval coordinate (`Free`); it names the cell
//! of the cube obtained by fixing the endpoint coordinates. The dimension of
//! a cell is its number of free coordinates, the all-`Free` code is the full
//! cube, and every other code is a proper face. Coordinates are 1-indexed.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Errors from code construction and the lattice operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CubeError {
    #[error("ambient cube dimension must be at least 1")]
    EmptyCode,
    #[error("coordinate {j} out of range 1..={n}")]
    CoordinateOutOfRange { j: usize, n: usize },
    #[error("coordinate {j} is not free")]
    NotFree { j: usize },
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid code character {0:?} (expected '0', '1' or 'I')")]
    InvalidCodeChar(char),
}

/// Value of one coordinate of a code.
///
/// The derived order `Zero < One < Free` fixes the lexicographic enumeration
/// order used by every sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Entry {
    Zero,
    One,
    Free,
}

impl Entry {
    fn succ(self) -> Option<Entry> {
        match self {
            Entry::Zero => Some(Entry::One),
            Entry::One => Some(Entry::Free),
            Entry::Free => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Entry::Zero => '0',
            Entry::One => '1',
            Entry::Free => 'I',
        }
    }
}

/// A cube endpoint, used to fix a free coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl From<Bit> for Entry {
    fn from(b: Bit) -> Entry {
        match b {
            Bit::Zero => Entry::Zero,
            Bit::One => Entry::One,
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bit::Zero => write!(f, "0"),
            Bit::One => write!(f, "1"),
        }
    }
}

/// A cell of the n-cube: one entry per coordinate.
///
/// Codes print and parse in the compact form `0I11I00I`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Code {
    entries: Vec<Entry>,
}

impl Code {
    /// Builds a code from its entries; the empty sequence is rejected.
    pub fn new(entries: Vec<Entry>) -> Result<Code, CubeError> {
        if entries.is_empty() {
            return Err(CubeError::EmptyCode);
        }
        Ok(Code { entries })
    }

    /// The all-free code for the full cube.
    pub fn full(n: usize) -> Result<Code, CubeError> {
        Code::new(vec![Entry::Free; n])
    }

    /// Ambient cube dimension n.
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// Cell dimension: the number of free coordinates.
    pub fn dim(&self) -> usize {
        self.entries.iter().filter(|e| **e == Entry::Free).count()
    }

    /// True exactly for the all-free code.
    pub fn is_full(&self) -> bool {
        self.dim() == self.n()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    /// Entry at coordinate `j` (1-indexed).
    pub fn entry(&self, j: usize) -> Result<Entry, CubeError> {
        if j == 0 || j > self.n() {
            return Err(CubeError::CoordinateOutOfRange { j, n: self.n() });
        }
        Ok(self.entries[j - 1])
    }

    /// The free coordinates, ascending and 1-indexed.
    pub fn free_coordinates(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| **e == Entry::Free)
            .map(|(i, _)| i + 1)
    }

    /// Fixes the free coordinate `j` to the endpoint `b`; the cell dimension
    /// drops by exactly one.
    pub fn specialize(&self, j: usize, b: Bit) -> Result<Code, CubeError> {
        match self.entry(j)? {
            Entry::Free => {
                let mut entries = self.entries.clone();
                entries[j - 1] = b.into();
                Ok(Code { entries })
            }
            _ => Err(CubeError::NotFree { j }),
        }
    }

    /// Coordinatewise intersection of cells: `Free` is absorbed, equal
    /// entries agree, and a coordinate fixed to 0 in one code and 1 in the
    /// other makes the cells disjoint (`None`).
    pub fn meet(&self, other: &Code) -> Result<Option<Code>, CubeError> {
        if self.n() != other.n() {
            return Err(CubeError::DimensionMismatch(self.n(), other.n()));
        }
        let mut entries = Vec::with_capacity(self.n());
        for (&a, &b) in self.entries.iter().zip(&other.entries) {
            let m = match (a, b) {
                (Entry::Free, v) | (v, Entry::Free) => v,
                (v, w) if v == w => v,
                _ => return Ok(None),
            };
            entries.push(m);
        }
        Ok(Some(Code { entries }))
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            write!(f, "{}", e.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Code {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Code, CubeError> {
        let mut entries = Vec::with_capacity(s.len());
        for c in s.chars() {
            entries.push(match c {
                '0' => Entry::Zero,
                '1' => Entry::One,
                'I' => Entry::Free,
                other => return Err(CubeError::InvalidCodeChar(other)),
            });
        }
        Code::new(entries)
    }
}

/// All 3^n codes of the n-cube, in lexicographic order with
/// `Zero < One < Free`. The full cube is the last code of the order.
pub fn enumerate_codes(n: usize) -> Result<Vec<Code>, CubeError> {
    if n == 0 {
        return Err(CubeError::EmptyCode);
    }
    let mut out = Vec::with_capacity(3usize.pow(n as u32));
    let mut entries = vec![Entry::Zero; n];
    loop {
        out.push(Code {
            entries: entries.clone(),
        });
        // odometer step: rightmost coordinate varies fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            match entries[i].succ() {
                Some(e) => {
                    entries[i] = e;
                    break;
                }
                None => entries[i] = Entry::Zero,
            }
        }
    }
}

/// The 3^n - 1 proper codes, i.e. everything but the full cube.
pub fn proper_codes(n: usize) -> Result<Vec<Code>, CubeError> {
    let mut all = enumerate_codes(n)?;
    let full = all.pop();
    debug_assert!(full.map_or(false, |c| c.is_full()));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> Code {
        s.parse().unwrap()
    }

    #[test]
    fn dimension_counts_free_coordinates() {
        assert_eq!(code("II").dim(), 2);
        assert_eq!(code("01").dim(), 0);
        assert_eq!(code("0I11I00I").dim(), 3);
    }

    #[test]
    fn enumeration_is_lexicographic_and_complete() {
        let one = enumerate_codes(1).unwrap();
        assert_eq!(one, vec![code("0"), code("1"), code("I")]);

        let two = enumerate_codes(2).unwrap();
        assert_eq!(two.len(), 9);
        assert_eq!(two.iter().filter(|c| c.is_full()).count(), 1);
        assert_eq!(two.iter().filter(|c| c.dim() == 0).count(), 4);
        assert_eq!(two.iter().filter(|c| c.dim() == 1).count(), 4);

        assert_eq!(enumerate_codes(4).unwrap().len(), 81);
        assert_eq!(proper_codes(4).unwrap().len(), 80);
    }

    #[test]
    fn enumeration_rejects_zero() {
        assert_eq!(enumerate_codes(0), Err(CubeError::EmptyCode));
        assert_eq!(Code::new(vec![]), Err(CubeError::EmptyCode));
    }

    #[test]
    fn specialize_fixes_one_free_coordinate() {
        assert_eq!(code("II").specialize(1, Bit::Zero).unwrap(), code("0I"));
        assert_eq!(code("II").specialize(2, Bit::One).unwrap(), code("I1"));
        assert_eq!(code("0I1").specialize(2, Bit::One).unwrap(), code("011"));
    }

    #[test]
    fn specialize_rejects_fixed_coordinates() {
        assert_eq!(
            code("0I1").specialize(1, Bit::One),
            Err(CubeError::NotFree { j: 1 })
        );
        assert_eq!(
            code("0I1").specialize(4, Bit::One),
            Err(CubeError::CoordinateOutOfRange { j: 4, n: 3 })
        );
    }

    #[test]
    fn meet_is_coordinatewise_intersection() {
        assert_eq!(code("I0").meet(&code("1I")).unwrap(), Some(code("10")));
        assert_eq!(code("0I").meet(&code("1I")).unwrap(), None);
        assert_eq!(
            code("II0").meet(&code("I1I")).unwrap(),
            Some(code("I10"))
        );
        assert_eq!(
            code("I").meet(&code("II")),
            Err(CubeError::DimensionMismatch(1, 2))
        );
    }

    #[test]
    fn code_round_trips_through_text() {
        let c = code("0I11I00I");
        assert_eq!(c.to_string(), "0I11I00I");
        assert_eq!("x".parse::<Code>(), Err(CubeError::InvalidCodeChar('x')));
        assert_eq!("".parse::<Code>(), Err(CubeError::EmptyCode));
    }
}
