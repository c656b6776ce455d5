//! Generator-defined derivations of the mod-2 Steenrod algebra.
//!
//! A candidate derivation is specified by its values on the generators
//! `Sq^m` and extended to words by the Leibniz rule
//! `D(uv) = D(u)v + uD(v)`. The extension always exists on the free algebra
//! on the squares; descending to the Steenrod algebra itself is a real
//! condition, equivalent to annihilating every Adem relation, and
//! [`verify_well_defined`] checks exactly that. The classical example is
//! the Kristensen derivation `kappa` with `kappa(Sq^m) = Sq^{m-1}` (degree
//! -1, so `kappa(Sq^1) = 1`); its composite square is again a derivation
//! since composites of derivations are derivations mod 2.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::report::VerificationReport;
use crate::steenrod::{
    adem_expand, admissible_basis, normalize, Element, Monomial, ParseError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("derivation degree shift must be negative, got {0}")]
    NonNegativeShift(i32),
    #[error("value for Sq^{m} must be homogeneous of degree {expected}, got degrees {got:?}")]
    InhomogeneousValue {
        m: u32,
        expected: i64,
        got: Vec<u32>,
    },
}

/// Value assigned to generators without an explicit table entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailRule {
    /// Every unlisted generator maps to zero.
    Zero,
    /// `Sq^m` maps to `Sq^{m+shift}`, with `Sq^0 = 1` and zero below that.
    ShiftedSquare,
}

/// A degree-shifting map defined on the generators `Sq^m` (m >= 1): a
/// finite override table plus a tail rule for everything else. Values must
/// be homogeneous of degree `m + shift` or zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorDerivation {
    shift: i32,
    tail: TailRule,
    overrides: BTreeMap<u32, Element>,
}

impl GeneratorDerivation {
    pub fn new(
        shift: i32,
        tail: TailRule,
        overrides: BTreeMap<u32, Element>,
    ) -> Result<GeneratorDerivation, DerivationError> {
        if shift >= 0 {
            return Err(DerivationError::NonNegativeShift(shift));
        }
        for (&m, v) in &overrides {
            if v.is_zero() {
                continue;
            }
            let expected = i64::from(m) + i64::from(shift);
            let degrees = v.degrees();
            let homogeneous =
                degrees.len() == 1 && expected >= 0 && degrees.contains(&(expected as u32));
            if !homogeneous {
                return Err(DerivationError::InhomogeneousValue {
                    m,
                    expected,
                    got: degrees.into_iter().collect(),
                });
            }
        }
        Ok(GeneratorDerivation {
            shift,
            tail,
            overrides,
        })
    }

    /// Replaces the value at one generator, keeping everything else.
    pub fn with_override(mut self, m: u32, value: Element) -> Result<Self, DerivationError> {
        self.overrides.insert(m, value);
        GeneratorDerivation::new(self.shift, self.tail, self.overrides)
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// The value on the generator `Sq^m` (m >= 1).
    pub fn value(&self, m: u32) -> Element {
        debug_assert!(m >= 1, "Sq^0 is the unit, not a generator");
        if let Some(v) = self.overrides.get(&m) {
            return v.clone();
        }
        match self.tail {
            TailRule::Zero => Element::zero(),
            TailRule::ShiftedSquare => {
                let target = i64::from(m) + i64::from(self.shift);
                match target {
                    t if t < 0 => Element::zero(),
                    0 => Element::unit(),
                    t => Element::from_admissible(Monomial::new([t as u32]))
                        .expect("a single square is admissible"),
                }
            }
        }
    }
}

/// The Kristensen derivation: degree -1, `Sq^m -> Sq^{m-1}`, `Sq^1 -> 1`.
pub fn kristensen_kappa() -> GeneratorDerivation {
    GeneratorDerivation::new(-1, TailRule::ShiftedSquare, BTreeMap::new())
        .expect("-1 is a valid shift")
}

/// The generator table of the squared Kristensen derivation: degree -2,
/// `Sq^m -> Sq^{m-2}` with `Sq^2 -> 1` and `Sq^1 -> 0`. Extending this by
/// the Leibniz rule agrees with applying `kappa` twice; the test suites
/// verify the agreement degree by degree.
pub fn kappa_squared_on_generators() -> GeneratorDerivation {
    GeneratorDerivation::new(-2, TailRule::ShiftedSquare, BTreeMap::new())
        .expect("-2 is a valid shift")
}

/// Leibniz expansion of `D` through one word, without normalization: one
/// spliced word per generator position and per monomial of the value there.
/// This is the free-algebra lift of the extension.
pub fn leibniz_word(d: &GeneratorDerivation, word: &Monomial) -> Vec<Monomial> {
    let exps = word.exponents();
    let mut words = Vec::new();
    for (j, &e) in exps.iter().enumerate() {
        for dm in d.value(e).support() {
            let spliced = exps[..j]
                .iter()
                .copied()
                .chain(dm.exponents().iter().copied())
                .chain(exps[j + 1..].iter().copied());
            words.push(Monomial::new(spliced));
        }
    }
    words
}

/// The Leibniz extension of `D` to an element of the algebra. Kills the
/// unit and is linear over mod-2 addition.
pub fn extend_leibniz(d: &GeneratorDerivation, x: &Element) -> Element {
    let words: Vec<Monomial> = x.support().flat_map(|w| leibniz_word(d, w)).collect();
    normalize(words)
}

/// Composite of two generator-defined maps as a linear map on elements.
#[derive(Debug, Clone)]
pub struct ComposedMap<'a> {
    outer: &'a GeneratorDerivation,
    inner: &'a GeneratorDerivation,
}

pub fn compose<'a>(
    outer: &'a GeneratorDerivation,
    inner: &'a GeneratorDerivation,
) -> ComposedMap<'a> {
    ComposedMap { outer, inner }
}

impl ComposedMap<'_> {
    pub fn apply(&self, x: &Element) -> Element {
        extend_leibniz(self.outer, &extend_leibniz(self.inner, x))
    }

    pub fn shift(&self) -> i32 {
        self.outer.shift + self.inner.shift
    }
}

/// An Adem relation on which the Leibniz extension failed to descend:
/// pushing `D` through the word `Sq^a Sq^b` disagrees with pushing it
/// through the relation's admissible expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCounterexample {
    pub a: u32,
    pub b: u32,
    pub word_route: Element,
    pub relation_route: Element,
    pub residual: Element,
}

impl fmt::Display for RelationCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a, b) = ({}, {}): word route [{}], relation route [{}], residual [{}]",
            self.a, self.b, self.word_route, self.relation_route, self.residual
        )
    }
}

/// Checks that the Leibniz extension of `D` annihilates every Adem relation
/// `Sq^a Sq^b` with `a + b <= max_degree`, i.e. that `D` descends from the
/// free algebra to the Steenrod algebra. Relations are enumerated by total
/// degree, then by `a`; the word-side Leibniz expansion is applied before
/// any normalization.
pub fn verify_well_defined(
    d: &GeneratorDerivation,
    max_degree: u32,
) -> VerificationReport<RelationCounterexample> {
    let mut checked = 0u64;
    let mut first = None;
    for s in 2..=max_degree {
        for a in 1..s {
            let b = s - a;
            if a >= 2 * b {
                continue;
            }
            checked += 1;
            let word_route = normalize(leibniz_word(d, &Monomial::new([a, b])));
            let relation = adem_expand(a, b).expect("0 < a < 2b by construction");
            let relation_route = extend_leibniz(d, &relation);
            if word_route != relation_route && first.is_none() {
                let residual = &word_route + &relation_route;
                first = Some(RelationCounterexample {
                    a,
                    b,
                    word_route,
                    relation_route,
                    residual,
                });
            }
        }
    }
    VerificationReport::from_sweep(checked, first)
}

/// A basis pair on which a candidate map failed the Leibniz rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCounterexample {
    pub x: Monomial,
    pub y: Monomial,
    pub product: Element,
    pub got: Element,
    pub expected: Element,
}

impl fmt::Display for PairCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x = {}, y = {}: F(xy) = [{}], F(x)y + xF(y) = [{}]",
            self.x, self.y, self.got, self.expected
        )
    }
}

/// Checks `F(xy) = F(x)y + xF(y)` on every pair of admissible basis
/// monomials with `deg x + deg y <= max_degree`. The map is expected to be
/// linear and homogeneous of the given shift; pairs are enumerated by total
/// degree, then by the degree of `x`, then in basis order.
pub fn verify_derivation_property<F>(
    map: F,
    shift: i32,
    max_degree: u32,
) -> VerificationReport<PairCounterexample>
where
    F: Fn(&Element) -> Element,
{
    let bases: Vec<Vec<Monomial>> = (0..=max_degree).map(admissible_basis).collect();
    let elems: Vec<Vec<Element>> = bases
        .iter()
        .map(|bs| {
            bs.iter()
                .map(|m| Element::from_admissible(m.clone()).expect("basis monomials are admissible"))
                .collect()
        })
        .collect();
    let images: Vec<Vec<Element>> = elems
        .iter()
        .map(|es| es.iter().map(&map).collect())
        .collect();
    for (d, row) in images.iter().enumerate() {
        for (m, img) in bases[d].iter().zip(row) {
            debug_assert!(
                img.is_zero()
                    || img
                        .degrees()
                        .iter()
                        .all(|&g| i64::from(g) == d as i64 + i64::from(shift)),
                "image of {m} is not homogeneous of shift {shift}"
            );
        }
    }

    let mut checked = 0u64;
    let mut first = None;
    for s in 0..=max_degree as usize {
        for dx in 0..=s {
            let dy = s - dx;
            for (ix, x) in bases[dx].iter().enumerate() {
                for (iy, y) in bases[dy].iter().enumerate() {
                    checked += 1;
                    let product = &elems[dx][ix] * &elems[dy][iy];
                    let got = map(&product);
                    let expected = &(&images[dx][ix] * &elems[dy][iy])
                        + &(&elems[dx][ix] * &images[dy][iy]);
                    if got != expected && first.is_none() {
                        first = Some(PairCounterexample {
                            x: x.clone(),
                            y: y.clone(),
                            product,
                            got,
                            expected,
                        });
                    }
                }
            }
        }
    }
    VerificationReport::from_sweep(checked, first)
}

/// Errors from derivation table files.
#[derive(Debug, Error)]
pub enum TableError {
    #[error("missing `rule:` header line")]
    MissingRule,
    #[error("unrecognized rule `{0}` (expected `0` or `Sq(m-k)`)")]
    BadRule(String),
    #[error("invalid shift `{0}`")]
    BadShift(String),
    #[error("shift {shift} conflicts with the rule's shift {rule}")]
    ShiftRuleConflict { shift: i32, rule: i32 },
    #[error("rule `0` requires an explicit `shift:` header")]
    ShiftRequired,
    #[error("malformed table line `{0}` (expected `m -> element`)")]
    BadLine(String),
    #[error("bad generator index `{0}` (expected an integer >= 1)")]
    BadIndex(String),
    #[error("duplicate entry for Sq^{0}")]
    Duplicate(u32),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Derivation(#[from] DerivationError),
}

/// Parses a derivation table file.
///
/// The format is line-based: `#` starts a comment, a `rule:` header names
/// the tail value for unlisted generators (`Sq(m-k)` or `0`), an optional
/// `shift:` header pins the degree shift (mandatory for rule `0`, inferred
/// as `-k` otherwise), and each entry line `m -> element` overrides one
/// generator using the Steenrod text grammar:
///
/// ```text
/// rule: Sq(m-1)
/// 2 -> 0
/// ```
pub fn parse_derivation_table(text: &str) -> Result<GeneratorDerivation, TableError> {
    let mut tail: Option<TailRule> = None;
    let mut rule_shift: Option<i32> = None;
    let mut shift: Option<i32> = None;
    let mut overrides = BTreeMap::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("rule:") {
            let spec = rest.trim();
            if spec == "0" || spec == "zero" {
                tail = Some(TailRule::Zero);
            } else if let Some(k) = spec
                .strip_prefix("Sq(m-")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.trim().parse::<i32>().ok())
                .filter(|&k| k > 0)
            {
                tail = Some(TailRule::ShiftedSquare);
                rule_shift = Some(-k);
            } else {
                return Err(TableError::BadRule(spec.to_string()));
            }
        } else if let Some(rest) = line.strip_prefix("shift:") {
            let spec = rest.trim();
            shift = Some(
                spec.parse::<i32>()
                    .map_err(|_| TableError::BadShift(spec.to_string()))?,
            );
        } else if let Some((lhs, rhs)) = line.split_once("->") {
            let index = lhs.trim();
            let m: u32 = index
                .parse()
                .ok()
                .filter(|&m| m >= 1)
                .ok_or_else(|| TableError::BadIndex(index.to_string()))?;
            let value = crate::steenrod::parse_element(rhs.trim())?;
            if overrides.insert(m, value).is_some() {
                return Err(TableError::Duplicate(m));
            }
        } else {
            return Err(TableError::BadLine(line.to_string()));
        }
    }
    let tail = tail.ok_or(TableError::MissingRule)?;
    let shift = match (shift, rule_shift) {
        (Some(s), Some(r)) if s != r => {
            return Err(TableError::ShiftRuleConflict { shift: s, rule: r })
        }
        (Some(s), _) => s,
        (None, Some(r)) => r,
        (None, None) => return Err(TableError::ShiftRequired),
    };
    Ok(GeneratorDerivation::new(shift, tail, overrides)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::parse_element;

    fn elem(s: &str) -> Element {
        parse_element(s).unwrap()
    }

    #[test]
    fn kappa_on_generators_and_words() {
        let kappa = kristensen_kappa();
        assert_eq!(extend_leibniz(&kappa, &elem("Sq2")), elem("Sq1"));
        assert_eq!(extend_leibniz(&kappa, &elem("Sq5")), elem("Sq4"));
        assert_eq!(extend_leibniz(&kappa, &elem("Sq1")), elem("1"));
        // Sq1 Sq1 + Sq2 = 0 + Sq2
        assert_eq!(extend_leibniz(&kappa, &elem("Sq2 Sq1")), elem("Sq2"));
        assert_eq!(
            extend_leibniz(&kappa, &elem("Sq3 Sq1")),
            elem("Sq2 Sq1 + Sq3")
        );
        assert!(extend_leibniz(&kappa, &Element::unit()).is_zero());
        assert!(extend_leibniz(&kappa, &Element::zero()).is_zero());
    }

    #[test]
    fn kappa_annihilates_small_adem_relations() {
        let kappa = kristensen_kappa();
        let report = verify_well_defined(&kappa, 4);
        assert!(report.passed);
        assert_eq!(report.checked, 4); // (1,1), (1,2), (1,3), (2,2)

        // hand oracle for the relation Sq2 Sq2 = Sq3 Sq1: both routes give
        // Sq3 + Sq2 Sq1
        let word_route = normalize(leibniz_word(&kappa, &Monomial::new([2, 2])));
        let relation_route = extend_leibniz(&kappa, &adem_expand(2, 2).unwrap());
        assert_eq!(word_route, elem("Sq3 + Sq2 Sq1"));
        assert_eq!(relation_route, elem("Sq3 + Sq2 Sq1"));
    }

    #[test]
    fn perturbed_kappa_fails_at_the_first_relation_touching_sq2() {
        let perturbed = kristensen_kappa()
            .with_override(2, Element::zero())
            .unwrap();
        let report = verify_well_defined(&perturbed, 4);
        assert!(!report.passed);
        let cx = report.counterexample.unwrap();
        assert_eq!((cx.a, cx.b), (2, 2));
        assert_eq!(cx.residual, elem("Sq2 Sq1 + Sq3"));
    }

    #[test]
    fn zero_map_is_trivially_well_defined() {
        let zero = GeneratorDerivation::new(-1, TailRule::Zero, BTreeMap::new()).unwrap();
        assert!(verify_well_defined(&zero, 12).passed);
    }

    #[test]
    fn composite_drops_degree_twice() {
        let kappa = kristensen_kappa();
        let squared = compose(&kappa, &kappa);
        assert_eq!(squared.shift(), -2);
        for m in 3..=12u32 {
            let x = elem(&format!("Sq{m}"));
            let want = elem(&format!("Sq{}", m - 2));
            assert_eq!(squared.apply(&x), want);
        }
        assert_eq!(squared.apply(&elem("Sq2 Sq1")), elem("Sq1"));
        assert!(squared.apply(&Element::unit()).is_zero());
    }

    #[test]
    fn composite_agrees_with_its_generator_table() {
        let kappa = kristensen_kappa();
        let squared = compose(&kappa, &kappa);
        let table = kappa_squared_on_generators();
        assert_eq!(table.value(1), Element::zero());
        assert_eq!(table.value(2), Element::unit());
        for degree in 0..=14 {
            for m in admissible_basis(degree) {
                let x = Element::from_admissible(m).unwrap();
                assert_eq!(squared.apply(&x), extend_leibniz(&table, &x));
            }
        }
    }

    #[test]
    fn derivation_property_holds_for_kappa_but_not_left_multiplication() {
        let kappa = kristensen_kappa();
        let report = verify_derivation_property(|x| extend_leibniz(&kappa, x), -1, 12);
        assert!(report.passed);

        let sq1 = elem("Sq1");
        let report = verify_derivation_property(|x| &sq1 * x, 1, 6);
        assert!(!report.passed);
        let cx = report.counterexample.unwrap();
        assert!(!cx.product.is_zero());
    }

    #[test]
    fn generator_values_must_be_homogeneous() {
        let err = GeneratorDerivation::new(
            -1,
            TailRule::Zero,
            [(3u32, elem("Sq2 + Sq1"))].into_iter().collect(),
        );
        assert!(matches!(
            err,
            Err(DerivationError::InhomogeneousValue { m: 3, .. })
        ));
        assert_eq!(
            GeneratorDerivation::new(0, TailRule::Zero, BTreeMap::new()),
            Err(DerivationError::NonNegativeShift(0))
        );
    }

    #[test]
    fn table_files_round_trip_the_builtins() {
        let kappa = parse_derivation_table("rule: Sq(m-1)\n").unwrap();
        assert_eq!(kappa, kristensen_kappa());

        let perturbed = parse_derivation_table("# kappa with Sq2 killed\nrule: Sq(m-1)\n2 -> 0\n")
            .unwrap();
        assert_eq!(perturbed.value(2), Element::zero());
        assert_eq!(perturbed.value(3), elem("Sq2"));

        let zero = parse_derivation_table("rule: 0\nshift: -1\n").unwrap();
        assert_eq!(zero.value(7), Element::zero());
    }

    #[test]
    fn table_files_report_malformed_input() {
        assert!(matches!(
            parse_derivation_table("2 -> Sq1\n"),
            Err(TableError::MissingRule)
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m+1)\n"),
            Err(TableError::BadRule(_))
        ));
        assert!(matches!(
            parse_derivation_table("rule: 0\n"),
            Err(TableError::ShiftRequired)
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m-1)\nshift: -2\n"),
            Err(TableError::ShiftRuleConflict { shift: -2, rule: -1 })
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m-1)\n2 -> Sq9\n"),
            Err(TableError::Derivation(_))
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m-1)\n0 -> Sq1\n"),
            Err(TableError::BadIndex(_))
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m-1)\n2 -> bogus\n"),
            Err(TableError::Parse(ParseError::UnexpectedToken(t))) if t == "bogus"
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m-1)\n2 -> 0\n2 -> Sq1\n"),
            Err(TableError::Duplicate(2))
        ));
        assert!(matches!(
            parse_derivation_table("rule: Sq(m-1)\nnonsense\n"),
            Err(TableError::BadLine(_))
        ));
    }
}
