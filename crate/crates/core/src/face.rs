//! Face labels: the distributor expressions attached to cells of the n-cube.
//!
//! The face formula sends a code for a cell of the n-cube to a formal
//! external sum of distributor terms `phi_a^{x_{K_0}, ..., x_{K_d}}` whose
//! arguments are sums of consecutive inputs `x_lo + ... + x_hi`. It works in
//! two steps on the code extended by a virtual leading 1 at index 0:
//!
//! * split `{0, ..., n}` into intervals J, each starting at a 1-coordinate
//!   and containing no further 1s; every J contributes one summand;
//! * split each J into intervals K, each starting at a 1- or I-coordinate
//!   and continuing over 0s; every K contributes one argument
//!   `x_K = x_lo + ... + x_hi` of the summand's term.
//!
//! Restricting a label to a boundary face is a purely syntactic rewrite:
//! fixing a free coordinate `j` to 0 merges the argument starting at `j`
//! into its predecessor, fixing it to 1 splits the containing term in two.
//! [`restrict_label`] works on the label data alone, independently of the
//! face formula, so [`check_face_compatibility`] can compare the two routes
//! as a genuine two-implementation oracle.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cube::{proper_codes, Bit, Code, CubeError, Entry};
use crate::report::VerificationReport;

/// Errors from label construction and restriction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("interval bounds must satisfy lo <= hi, got {lo}..{hi}")]
    EmptyInterval { lo: usize, hi: usize },
    #[error("term needs at least one argument")]
    EmptyTerm,
    #[error("label needs at least one term")]
    EmptyLabel,
    #[error("intervals must tile a consecutive range (gap before x{0})")]
    Gap(usize),
    #[error("label must start at x0")]
    BadStart,
    #[error("label over inputs x0..x{n} must end at x{n}")]
    BadEnd { n: usize },
    #[error("coordinate {j} is not a free separator of this label")]
    NotFreeSeparator { j: usize },
}

/// A sum of consecutive inputs `x_lo + ... + x_hi` (inclusive bounds).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(try_from = "RawInterval")]
pub struct IntervalSum {
    lo: usize,
    hi: usize,
}

#[derive(Deserialize)]
struct RawInterval {
    lo: usize,
    hi: usize,
}

impl TryFrom<RawInterval> for IntervalSum {
    type Error = LabelError;

    fn try_from(raw: RawInterval) -> Result<Self, LabelError> {
        IntervalSum::new(raw.lo, raw.hi)
    }
}

impl IntervalSum {
    pub fn new(lo: usize, hi: usize) -> Result<IntervalSum, LabelError> {
        if lo > hi {
            return Err(LabelError::EmptyInterval { lo, hi });
        }
        Ok(IntervalSum { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn contains(&self, k: usize) -> bool {
        self.lo <= k && k <= self.hi
    }
}

impl fmt::Display for IntervalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.lo..=self.hi {
            if i > self.lo {
                write!(f, "+")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

/// One distributor term `phi_a^{x_{K_0}, ..., x_{K_d}}`; its dimension is
/// the number of arguments minus one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTerm")]
pub struct DistributorTerm {
    args: Vec<IntervalSum>,
}

#[derive(Deserialize)]
struct RawTerm {
    args: Vec<IntervalSum>,
}

impl TryFrom<RawTerm> for DistributorTerm {
    type Error = LabelError;

    fn try_from(raw: RawTerm) -> Result<Self, LabelError> {
        DistributorTerm::new(raw.args)
    }
}

impl DistributorTerm {
    /// Builds a term; the arguments must tile a consecutive interval.
    pub fn new(args: Vec<IntervalSum>) -> Result<DistributorTerm, LabelError> {
        if args.is_empty() {
            return Err(LabelError::EmptyTerm);
        }
        for pair in args.windows(2) {
            if pair[0].hi + 1 != pair[1].lo {
                return Err(LabelError::Gap(pair[1].lo));
            }
        }
        Ok(DistributorTerm { args })
    }

    pub fn args(&self) -> &[IntervalSum] {
        &self.args
    }

    pub fn dimension(&self) -> usize {
        self.args.len() - 1
    }

    fn lo(&self) -> usize {
        self.args[0].lo
    }

    fn hi(&self) -> usize {
        self.args[self.args.len() - 1].hi
    }
}

impl fmt::Display for DistributorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "phi_a^{{")?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// A face label: an external sum of distributor terms over the inputs
/// `x0..x{n}`. Prints as `phi_a^{x0+x1, x2} (+) phi_a^{x3}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLabel")]
pub struct FaceLabel {
    terms: Vec<DistributorTerm>,
    n: usize,
}

#[derive(Deserialize)]
struct RawLabel {
    terms: Vec<DistributorTerm>,
    n: usize,
}

impl TryFrom<RawLabel> for FaceLabel {
    type Error = LabelError;

    fn try_from(raw: RawLabel) -> Result<Self, LabelError> {
        FaceLabel::new(raw.terms, raw.n)
    }
}

impl FaceLabel {
    /// Builds a label; the terms' intervals must tile `{0, ..., n}` in order.
    pub fn new(terms: Vec<DistributorTerm>, n: usize) -> Result<FaceLabel, LabelError> {
        if terms.is_empty() {
            return Err(LabelError::EmptyLabel);
        }
        if terms[0].lo() != 0 {
            return Err(LabelError::BadStart);
        }
        for pair in terms.windows(2) {
            if pair[0].hi() + 1 != pair[1].lo() {
                return Err(LabelError::Gap(pair[1].lo()));
            }
        }
        if terms[terms.len() - 1].hi() != n {
            return Err(LabelError::BadEnd { n });
        }
        Ok(FaceLabel { terms, n })
    }

    pub fn terms(&self) -> &[DistributorTerm] {
        &self.terms
    }

    /// Ambient input count: the label's inputs are `x0..x{n}`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sum of the term dimensions; equals the dimension of the cell the
    /// label was produced from.
    pub fn dimension(&self) -> usize {
        self.terms.iter().map(DistributorTerm::dimension).sum()
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " (+) ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// The nested interval partition behind the face formula: one J-block per
/// summand, each holding its K-intervals in order.
pub fn partition_blocks(code: &Code) -> Vec<Vec<IntervalSum>> {
    let n = code.n();
    // index 0 is the virtual leading 1; index i >= 1 reads the code
    let ext = |i: usize| -> Entry {
        if i == 0 {
            Entry::One
        } else {
            code.entries()[i - 1]
        }
    };
    let mut blocks: Vec<Vec<IntervalSum>> = Vec::new();
    for i in 0..=n {
        match ext(i) {
            // a 1 opens a new J-block and its first K-interval
            Entry::One => blocks.push(vec![IntervalSum { lo: i, hi: i }]),
            // an I opens a new K-interval in the current block
            Entry::Free => blocks
                .last_mut()
                .expect("index 0 opened a block")
                .push(IntervalSum { lo: i, hi: i }),
            // a 0 extends the current K-interval
            Entry::Zero => {
                let block = blocks.last_mut().expect("index 0 opened a block");
                let last = block.last_mut().expect("blocks are nonempty");
                last.hi = i;
            }
        }
    }
    blocks
}

/// The face formula: one distributor term per J-block, one interval-sum
/// argument per K-interval. Accepts the full cube as well, where it yields
/// `phi_a^{x0, ..., x{n}}`.
pub fn face_label(code: &Code) -> FaceLabel {
    let terms = partition_blocks(code)
        .into_iter()
        .map(|args| DistributorTerm::new(args).expect("blocks are nonempty and consecutive"))
        .collect();
    FaceLabel::new(terms, code.n()).expect("blocks tile 0..=n")
}

/// Syntactic boundary restriction of a label at coordinate `j`.
///
/// The coordinate must be a free separator: some term must have a
/// non-leading argument starting at `j`. Fixing to `Zero` merges that
/// argument into its predecessor (`..., x_{j-1} + x_j, ...`); fixing to
/// `One` splits the term into two summands at that argument. No part of the
/// label is recomputed.
pub fn restrict_label(label: &FaceLabel, j: usize, b: Bit) -> Result<FaceLabel, LabelError> {
    let mut terms = label.terms.clone();
    let found = terms.iter().enumerate().find_map(|(ti, t)| {
        t.args
            .iter()
            .position(|a| a.lo == j)
            .filter(|&ai| ai > 0)
            .map(|ai| (ti, ai))
    });
    let Some((ti, ai)) = found else {
        return Err(LabelError::NotFreeSeparator { j });
    };
    match b {
        Bit::Zero => {
            let hi = terms[ti].args[ai].hi;
            terms[ti].args[ai - 1].hi = hi;
            terms[ti].args.remove(ai);
        }
        Bit::One => {
            let right = terms[ti].args.split_off(ai);
            terms.insert(ti + 1, DistributorTerm { args: right });
        }
    }
    Ok(FaceLabel {
        terms,
        n: label.n,
    })
}

/// The assembled obstruction data: a face label for every proper code of
/// the n-cube, in enumeration order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionTable {
    n: usize,
    entries: Vec<(Code, FaceLabel)>,
}

impl ObstructionTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[(Code, FaceLabel)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, code: &Code) -> Option<&FaceLabel> {
        self.entries
            .binary_search_by(|(c, _)| c.cmp(code))
            .ok()
            .map(|i| &self.entries[i].1)
    }
}

/// Labels every proper face of the n-cube.
pub fn obstruction_map(n: usize) -> Result<ObstructionTable, CubeError> {
    let entries = proper_codes(n)?
        .into_iter()
        .map(|code| {
            let label = face_label(&code);
            (code, label)
        })
        .collect();
    Ok(ObstructionTable { n, entries })
}

/// A disagreement between syntactic restriction and recomputation, or
/// between two restriction orders. `steps` lists the applied restrictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatCounterexample {
    pub code: Code,
    pub steps: Vec<(usize, Bit)>,
    pub expected: FaceLabel,
    pub got: FaceLabel,
}

impl fmt::Display for CompatCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "code {}, steps", self.code)?;
        for (j, b) in &self.steps {
            write!(f, " (j={j}, b={b})")?;
        }
        write!(f, ": got [{}], expected [{}]", self.got, self.expected)
    }
}

/// For every code, every free coordinate and both endpoints, compares the
/// syntactic restriction of the code's label against the label recomputed
/// from the specialized code.
pub fn check_single_restrictions(
    n: usize,
) -> Result<VerificationReport<CompatCounterexample>, CubeError> {
    let mut checked = 0u64;
    let mut first = None;
    for code in crate::cube::enumerate_codes(n)? {
        let label = face_label(&code);
        for j in code.free_coordinates() {
            for b in [Bit::Zero, Bit::One] {
                checked += 1;
                let got = restrict_label(&label, j, b)
                    .expect("free coordinates are free separators of the label");
                let expected = face_label(&code.specialize(j, b)?);
                if got != expected && first.is_none() {
                    first = Some(CompatCounterexample {
                        code: code.clone(),
                        steps: vec![(j, b)],
                        expected,
                        got,
                    });
                }
            }
        }
    }
    Ok(VerificationReport::from_sweep(checked, first))
}

/// For every code and every ordered pair of distinct free coordinates,
/// checks that the two restriction orders produce the same label.
pub fn check_restriction_commutes(
    n: usize,
) -> Result<VerificationReport<CompatCounterexample>, CubeError> {
    let mut checked = 0u64;
    let mut first = None;
    for code in crate::cube::enumerate_codes(n)? {
        let free: Vec<usize> = code.free_coordinates().collect();
        if free.len() < 2 {
            continue;
        }
        let label = face_label(&code);
        for (i, &j1) in free.iter().enumerate() {
            for &j2 in &free[i + 1..] {
                for b1 in [Bit::Zero, Bit::One] {
                    for b2 in [Bit::Zero, Bit::One] {
                        checked += 1;
                        let msg = "distinct free separators survive restriction";
                        let first_then_second = restrict_label(
                            &restrict_label(&label, j1, b1).expect(msg),
                            j2,
                            b2,
                        )
                        .expect(msg);
                        let second_then_first = restrict_label(
                            &restrict_label(&label, j2, b2).expect(msg),
                            j1,
                            b1,
                        )
                        .expect(msg);
                        if first_then_second != second_then_first && first.is_none() {
                            first = Some(CompatCounterexample {
                                code: code.clone(),
                                steps: vec![(j1, b1), (j2, b2)],
                                expected: second_then_first,
                                got: first_then_second,
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(VerificationReport::from_sweep(checked, first))
}

/// Machine check that the face labels are mutually compatible: syntactic
/// restriction agrees with recomputation on every face, and restrictions
/// along different coordinates commute.
pub fn check_face_compatibility(
    n: usize,
) -> Result<VerificationReport<CompatCounterexample>, CubeError> {
    let singles = check_single_restrictions(n)?;
    let pairs = check_restriction_commutes(n)?;
    Ok(singles.merge(pairs))
}

/// Formal constant produced by substituting `x_i := 0` for all `i != k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WedgeValue {
    /// Every argument of every term vanished.
    Zero,
    /// The constant `a*x_k`.
    ScaledInput(usize),
}

impl fmt::Display for WedgeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WedgeValue::Zero => write!(f, "0"),
            WedgeValue::ScaledInput(k) => write!(f, "a*x{k}"),
        }
    }
}

/// Substitutes `x_i := 0` for every input except `x_k` and simplifies.
///
/// Each interval-sum argument becomes `x_k` if it contains `k` and `0`
/// otherwise; a term with all-zero arguments is the constant 0 and is
/// dropped from the external sum; a term with exactly one surviving
/// argument is the constant `a*x_k`. Panics if `k` exceeds the label's
/// ambient bound.
pub fn wedge_collapse(label: &FaceLabel, k: usize) -> WedgeValue {
    assert!(
        k <= label.n,
        "input index {k} exceeds ambient bound {}",
        label.n
    );
    let mut value = WedgeValue::Zero;
    for term in &label.terms {
        let survivors = term.args.iter().filter(|a| a.contains(k)).count();
        match survivors {
            0 => {}
            1 => match value {
                WedgeValue::Zero => value = WedgeValue::ScaledInput(k),
                WedgeValue::ScaledInput(_) => {
                    unreachable!("label intervals tile 0..=n, so x{k} occurs once")
                }
            },
            _ => unreachable!("arguments within a term are disjoint"),
        }
    }
    value
}

/// A label whose wedge collapse failed to be the constant `a*x_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeCounterexample {
    pub code: Code,
    pub input: usize,
    pub got: WedgeValue,
}

impl fmt::Display for WedgeCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "code {}, k={}: got {}, expected a*x{}",
            self.code, self.input, self.got, self.input
        )
    }
}

/// Checks that every proper face label collapses to `a*x_k` at every input.
pub fn check_wedge_collapse(
    n: usize,
) -> Result<VerificationReport<WedgeCounterexample>, CubeError> {
    let mut checked = 0u64;
    let mut first = None;
    for code in proper_codes(n)? {
        let label = face_label(&code);
        for k in 0..=n {
            checked += 1;
            let got = wedge_collapse(&label, k);
            if got != WedgeValue::ScaledInput(k) && first.is_none() {
                first = Some(WedgeCounterexample {
                    code: code.clone(),
                    input: k,
                    got,
                });
            }
        }
    }
    Ok(VerificationReport::from_sweep(checked, first))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> Code {
        s.parse().unwrap()
    }

    fn label(spec: &[&[(usize, usize)]], n: usize) -> FaceLabel {
        let terms = spec
            .iter()
            .map(|args| {
                DistributorTerm::new(
                    args.iter()
                        .map(|&(lo, hi)| IntervalSum::new(lo, hi).unwrap())
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        FaceLabel::new(terms, n).unwrap()
    }

    #[test]
    fn partition_blocks_on_the_eight_dimensional_example() {
        let blocks = partition_blocks(&code("0I11I00I"));
        let spans: Vec<Vec<(usize, usize)>> = blocks
            .iter()
            .map(|b| b.iter().map(|k| (k.lo(), k.hi())).collect())
            .collect();
        assert_eq!(
            spans,
            vec![
                vec![(0, 1), (2, 2)],
                vec![(3, 3)],
                vec![(4, 4), (5, 7), (8, 8)],
            ]
        );
    }

    #[test]
    fn partition_blocks_degenerate_codes() {
        // all separators outside: three singleton blocks
        let ones = partition_blocks(&code("11"));
        assert_eq!(ones.len(), 3);
        assert!(ones.iter().all(|b| b.len() == 1));

        // no separators at all: a single block with a single interval
        let zeros = partition_blocks(&code("00"));
        assert_eq!(zeros.len(), 1);
        assert_eq!(zeros[0].len(), 1);
        assert_eq!((zeros[0][0].lo(), zeros[0][0].hi()), (0, 2));
    }

    #[test]
    fn face_label_matches_the_worked_example() {
        let got = face_label(&code("0I11I00I"));
        let want = label(&[&[(0, 1), (2, 2)], &[(3, 3)], &[(4, 4), (5, 7), (8, 8)]], 8);
        assert_eq!(got, want);
        assert_eq!(
            got.to_string(),
            "phi_a^{x0+x1, x2} (+) phi_a^{x3} (+) phi_a^{x4, x5+x6+x7, x8}"
        );
        assert_eq!(got.dimension(), 3);
    }

    #[test]
    fn face_label_on_edges_of_the_square() {
        assert_eq!(
            face_label(&code("0I")).to_string(),
            "phi_a^{x0+x1, x2}"
        );
        assert_eq!(
            face_label(&code("I1")).to_string(),
            "phi_a^{x0, x1} (+) phi_a^{x2}"
        );
    }

    #[test]
    fn full_cube_label_is_fully_split() {
        assert_eq!(
            face_label(&Code::full(2).unwrap()).to_string(),
            "phi_a^{x0, x1, x2}"
        );
    }

    #[test]
    fn restriction_merges_at_zero_and_splits_at_one() {
        let full = face_label(&Code::full(2).unwrap());
        assert_eq!(
            restrict_label(&full, 1, Bit::Zero).unwrap(),
            label(&[&[(0, 1), (2, 2)]], 2)
        );
        assert_eq!(
            restrict_label(&full, 2, Bit::One).unwrap(),
            label(&[&[(0, 0), (1, 1)], &[(2, 2)]], 2)
        );

        // recomputation oracle for the two-term case
        let two_terms = face_label(&code("1I"));
        let got = restrict_label(&two_terms, 2, Bit::Zero).unwrap();
        let expected = face_label(&code("1I").specialize(2, Bit::Zero).unwrap());
        assert_eq!(got, expected);
        assert_eq!(got.to_string(), "phi_a^{x0} (+) phi_a^{x1+x2}");
    }

    #[test]
    fn restriction_rejects_non_separators() {
        let l = face_label(&code("0I")); // phi_a^{x0+x1, x2}
        // x1 sits inside the first argument: a zero coordinate
        assert_eq!(
            restrict_label(&l, 1, Bit::Zero),
            Err(LabelError::NotFreeSeparator { j: 1 })
        );
        // a term start is a 1-separator, not a free one
        let split = face_label(&code("1I"));
        assert_eq!(
            restrict_label(&split, 1, Bit::One),
            Err(LabelError::NotFreeSeparator { j: 1 })
        );
        // out of range
        assert_eq!(
            restrict_label(&l, 9, Bit::Zero),
            Err(LabelError::NotFreeSeparator { j: 9 })
        );
    }

    #[test]
    fn obstruction_table_for_the_interval() {
        let table = obstruction_map(1).unwrap();
        assert_eq!(table.len(), 2);
        assert_eq!(
            table.get(&code("0")).unwrap().to_string(),
            "phi_a^{x0+x1}"
        );
        assert_eq!(
            table.get(&code("1")).unwrap().to_string(),
            "phi_a^{x0} (+) phi_a^{x1}"
        );
        assert!(table.get(&code("I")).is_none());
    }

    #[test]
    fn compatibility_sweep_counts_and_passes() {
        let singles = check_single_restrictions(2).unwrap();
        assert!(singles.passed);
        // 4 edges with one free coordinate each, plus 2x2 from the full code
        assert_eq!(singles.checked, 12);

        let pairs = check_restriction_commutes(2).unwrap();
        assert!(pairs.passed);
        assert_eq!(pairs.checked, 4);

        assert!(check_face_compatibility(1).unwrap().passed);
        assert!(check_face_compatibility(3).unwrap().passed);
    }

    #[test]
    fn wedge_collapse_examples() {
        let l = label(&[&[(0, 0), (1, 2)]], 2); // phi_a^{x0, x1+x2}
        assert_eq!(wedge_collapse(&l, 1), WedgeValue::ScaledInput(1));

        let split = label(&[&[(0, 0)], &[(1, 1), (2, 2)]], 2);
        assert_eq!(wedge_collapse(&split, 0), WedgeValue::ScaledInput(0));

        let single = label(&[&[(0, 2)]], 2); // phi_a^{x0+x1+x2}
        assert_eq!(wedge_collapse(&single, 2), WedgeValue::ScaledInput(2));
    }

    #[test]
    fn wedge_sweep_passes_for_small_cubes() {
        for n in 1..=4 {
            let report = check_wedge_collapse(n).unwrap();
            assert!(report.passed, "wedge sweep failed for n={n}");
            assert_eq!(report.checked, ((3u64.pow(n as u32)) - 1) * (n as u64 + 1));
        }
    }

    #[test]
    fn label_constructors_reject_bad_shapes() {
        assert_eq!(IntervalSum::new(3, 2), Err(LabelError::EmptyInterval { lo: 3, hi: 2 }));
        assert_eq!(DistributorTerm::new(vec![]), Err(LabelError::EmptyTerm));
        let gap = DistributorTerm::new(vec![
            IntervalSum::new(0, 0).unwrap(),
            IntervalSum::new(2, 2).unwrap(),
        ]);
        assert_eq!(gap, Err(LabelError::Gap(2)));
        let term = DistributorTerm::new(vec![IntervalSum::new(1, 2).unwrap()]).unwrap();
        assert_eq!(FaceLabel::new(vec![term], 2), Err(LabelError::BadStart));
        let short = DistributorTerm::new(vec![IntervalSum::new(0, 1).unwrap()]).unwrap();
        assert_eq!(FaceLabel::new(vec![short], 2), Err(LabelError::BadEnd { n: 2 }));
    }
}
