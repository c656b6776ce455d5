//! The mod-2 Steenrod algebra in the admissible basis.
//!
//! Elements are finite sets of admissible monomials `Sq^{i_1} ... Sq^{i_k}`
//! (admissible means `i_j >= 2*i_{j+1}` for every adjacent pair); membership
//! in the set is the mod-2 coefficient. Arbitrary words in the squares are
//! straightened onto the basis with the Adem relations
//!
//! ```text
//! Sq^a Sq^b = sum_{c=0}^{a/2} C(b-c-1, a-2c) Sq^{a+b-c} Sq^c    (0 < a < 2b)
//! ```
//!
//! where the binomial coefficients are reduced mod 2 by the bit-subset rule
//! and `Sq^0` is the unit. The exposed text grammar is `"Sq3 Sq1 + Sq4"`:
//! whitespace-separated squares form a monomial, `+` separates monomials,
//! and `0` and `1` denote the zero element and the unit.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteenrodError {
    #[error("adem expansion requires 0 < a < 2b, got a={a}, b={b}")]
    NotAnAdemPair { a: u32, b: u32 },
    #[error("monomial {0} is not admissible")]
    NotAdmissible(Monomial),
}

/// Errors from the text grammar, naming the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected token `{0}`")]
    UnexpectedToken(String),
    #[error("constant `{0}` cannot be mixed with squares in one summand")]
    MixedConstant(String),
    #[error("empty expression")]
    Empty,
}

/// A word in the Steenrod squares; the empty word is the unit `1 = Sq^0`.
///
/// Monomials are plain words: admissibility is an [`Element`]-level
/// invariant. Zero exponents collapse on construction since `Sq^0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new<I: IntoIterator<Item = u32>>(exponents: I) -> Monomial {
        Monomial {
            exponents: exponents.into_iter().filter(|&e| e != 0).collect(),
        }
    }

    pub fn unit() -> Monomial {
        Monomial { exponents: Vec::new() }
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// `i_j >= 2*i_{j+1}` for every adjacent pair.
    pub fn is_admissible(&self) -> bool {
        self.exponents.windows(2).all(|w| w[0] >= 2 * w[1])
    }
}

/// Basis order: by total degree, then by exponent sequence with larger
/// leading exponents first (so degree 3 lists `Sq3` before `Sq2 Sq1`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.exponents.iter().zip(&other.exponents) {
                match b.cmp(a) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            self.exponents.len().cmp(&other.exponents.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "Sq{e}")?;
        }
        Ok(())
    }
}

/// An element of the algebra: a mod-2 sum of admissible monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    support: BTreeSet<Monomial>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn unit() -> Element {
        let mut support = BTreeSet::new();
        support.insert(Monomial::unit());
        Element { support }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Wraps a single monomial, which must already be admissible.
    pub fn from_admissible(m: Monomial) -> Result<Element, SteenrodError> {
        if !m.is_admissible() {
            return Err(SteenrodError::NotAdmissible(m));
        }
        let mut support = BTreeSet::new();
        support.insert(m);
        Ok(Element { support })
    }

    /// Straightens an arbitrary multiset of words onto the basis.
    pub fn from_words<I: IntoIterator<Item = Monomial>>(words: I) -> Element {
        normalize(words)
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.support.iter()
    }

    pub fn term_count(&self) -> usize {
        self.support.len()
    }

    /// The set of degrees present; a singleton for homogeneous elements and
    /// empty for zero.
    pub fn degrees(&self) -> BTreeSet<u32> {
        self.support.iter().map(Monomial::degree).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn multiply(&self, other: &Element) -> Element {
        let words: Vec<Monomial> = self
            .support
            .iter()
            .flat_map(|m| {
                other.support.iter().map(move |w| {
                    Monomial::new(
                        m.exponents.iter().chain(&w.exponents).copied(),
                    )
                })
            })
            .collect();
        normalize(words)
    }

    // mod-2 insertion: adding an existing monomial cancels it
    fn toggle(&mut self, m: Monomial) {
        debug_assert!(m.is_admissible(), "toggled monomial must be admissible");
        if !self.support.remove(&m) {
            self.support.insert(m);
        }
    }
}

impl std::ops::Add for &Element {
    type Output = Element;

    fn add(self, other: &Element) -> Element {
        let support = self
            .support
            .symmetric_difference(&other.support)
            .cloned()
            .collect();
        Element { support }
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;

    fn mul(self, other: &Element) -> Element {
        self.multiply(other)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.support.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Parity of the binomial coefficient `C(m, r)`: odd iff the bits of `r`
/// form a subset of the bits of `m` (Lucas at p = 2).
pub fn odd_binomial(m: u32, r: u32) -> bool {
    r & !m == 0
}

// Adem expansion terms (a+b-c, c) carrying an odd coefficient.
fn adem_pairs(a: u32, b: u32) -> impl Iterator<Item = (u32, u32)> {
    debug_assert!(0 < a && a < 2 * b);
    (0..=a / 2)
        .filter(move |&c| odd_binomial(b - c - 1, a - 2 * c))
        .map(move |c| (a + b - c, c))
}

/// Expands the inadmissible product `Sq^a Sq^b` (`0 < a < 2b`) by the Adem
/// relation. The surviving terms `Sq^{a+b-c} Sq^c` are always admissible.
pub fn adem_expand(a: u32, b: u32) -> Result<Element, SteenrodError> {
    if a == 0 || a >= 2 * b {
        return Err(SteenrodError::NotAnAdemPair { a, b });
    }
    let mut out = Element::zero();
    for (p, q) in adem_pairs(a, b) {
        out.toggle(Monomial::new([p, q]));
    }
    Ok(out)
}

/// Which inadmissible adjacent pair a rewrite step picks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    LeftmostFirst,
    RightmostFirst,
}

fn find_inadmissible_pair(word: &[u32], strategy: RewriteStrategy) -> Option<usize> {
    if word.len() < 2 {
        return None;
    }
    let bad = |i: &usize| word[*i] < 2 * word[*i + 1];
    match strategy {
        RewriteStrategy::LeftmostFirst => (0..word.len() - 1).find(bad),
        RewriteStrategy::RightmostFirst => (0..word.len() - 1).rev().find(bad),
    }
}

/// Straightens a multiset of words onto the admissible basis, rewriting the
/// leftmost inadmissible pair first. Duplicate words cancel mod 2, so the
/// result does not depend on the input order.
pub fn normalize<I: IntoIterator<Item = Monomial>>(words: I) -> Element {
    normalize_with(words, RewriteStrategy::LeftmostFirst)
}

/// [`normalize`] with an explicit rewrite strategy; the two strategies are
/// compared empirically by the confluence checks in the test suite.
pub fn normalize_with<I: IntoIterator<Item = Monomial>>(
    words: I,
    strategy: RewriteStrategy,
) -> Element {
    let mut out = Element::zero();
    let mut pending: Vec<Vec<u32>> = words.into_iter().map(|m| m.exponents).collect();
    while let Some(word) = pending.pop() {
        match find_inadmissible_pair(&word, strategy) {
            None => out.toggle(Monomial { exponents: word }),
            Some(i) => {
                let (a, b) = (word[i], word[i + 1]);
                for (p, q) in adem_pairs(a, b) {
                    let mut next = Vec::with_capacity(word.len() + 1);
                    next.extend_from_slice(&word[..i]);
                    next.push(p);
                    if q > 0 {
                        next.push(q);
                    }
                    next.extend_from_slice(&word[i + 2..]);
                    pending.push(next);
                }
            }
        }
    }
    out
}

/// All admissible monomials of the given degree, largest leading exponent
/// first. Degree 0 yields the unit alone.
pub fn admissible_basis(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fill_basis(degree, degree, &mut prefix, &mut out);
    out
}

fn fill_basis(remaining: u32, max_lead: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if remaining == 0 {
        out.push(Monomial {
            exponents: prefix.clone(),
        });
        return;
    }
    for lead in (1..=remaining.min(max_lead)).rev() {
        prefix.push(lead);
        // the tail must stay admissible under the chosen lead
        fill_basis(remaining - lead, lead / 2, prefix, out);
        prefix.pop();
    }
}

/// Parses the grammar into raw words, without straightening.
pub fn parse_words(input: &str) -> Result<Vec<Monomial>, ParseError> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(ParseError::Empty);
    }
    let mut words = Vec::new();
    for summand in trimmed.split('+') {
        let tokens: Vec<&str> = summand.split_whitespace().collect();
        match tokens.as_slice() {
            [] => return Err(ParseError::UnexpectedToken("+".to_string())),
            ["0"] => {}
            ["1"] => words.push(Monomial::unit()),
            _ => {
                let mut exponents = Vec::with_capacity(tokens.len());
                for tok in &tokens {
                    if *tok == "0" || *tok == "1" {
                        return Err(ParseError::MixedConstant((*tok).to_string()));
                    }
                    let exp = tok
                        .strip_prefix("Sq")
                        .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                        .and_then(|d| d.parse::<u32>().ok())
                        .ok_or_else(|| ParseError::UnexpectedToken((*tok).to_string()))?;
                    exponents.push(exp);
                }
                words.push(Monomial::new(exponents));
            }
        }
    }
    Ok(words)
}

/// Parses the grammar and straightens onto the admissible basis.
pub fn parse_element(input: &str) -> Result<Element, ParseError> {
    Ok(normalize(parse_words(input)?))
}
