//! Finite group algebra: declarative group specifications, canonical element
//! representations, closed-form multiplication and inversion, enumeration and
//! generator-set validation.
//!
//! Supported group kinds: cyclic `Z_n`, dihedral `D_n` (order `2n`), the
//! `Z_2` vector spaces `Z_2^r`, direct products, and semidirect products
//! `Z_m x| Z_n` where `Z_m` acts on `Z_n` by multiplication with a fixed
//! unit `g` (`a . x = g^a * x mod n`).

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on group enumeration (and therefore Cayley graph size).
pub const DEFAULT_ORDER_LIMIT: u64 = 1_000_000;

/// Declarative description of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// Z_n, n >= 1.
    Cyclic(u64),
    /// D_n of order 2n: generated by a rotation x of order n and a
    /// reflection w with w^2 = e and w x w^-1 = x^-1.
    Dihedral(u64),
    /// Z_2^r, r >= 1.
    Z2Pow(u32),
    /// Direct product.
    Product(Box<GroupSpec>, Box<GroupSpec>),
    /// Z_m acting on Z_n via a.x = g^a * x (mod n); requires gcd(g, n) = 1
    /// and g^m = 1 (mod n) so the action is a homomorphism Z_m -> Aut(Z_n).
    Semidirect { m: u64, n: u64, g: u64 },
}

/// Canonical element representation, one variant per group kind.
///
/// Equality and the derived lexicographic order are the canonical identity
/// and rank order used for vertex indexing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Cyclic(u64),
    /// w^flip x^rot with flip in {0,1} and rot in [0, n).
    Dihedral { flip: u8, rot: u64 },
    /// Bit vector of Z_2^r packed into a word; the literal's leftmost bit is
    /// the highest bit so literal order equals numeric order.
    Bits(u64),
    Pair(Box<Element>, Box<Element>),
    /// (a, x) with a in [0, m) and x in [0, n).
    Semidirect { a: u64, x: u64 },
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut base = (base % modulus) as u128;
    let m = modulus as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

impl GroupSpec {
    /// Parse the group-spec grammar (ASCII, whitespace-insensitive):
    ///
    /// ```text
    /// spec := "cyclic(" INT ")" | "dihedral(" INT ")" | "z2pow(" INT ")"
    ///       | "product(" spec "," spec ")" | "semidirect(" INT "," INT "," INT ")"
    /// ```
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let mut p = SpecParser {
            bytes: text.as_bytes(),
            pos: 0,
            depth: 0,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(Error::parse(p.pos, "trailing input after group spec"));
        }
        spec.validate()?;
        Ok(spec)
    }

    /// Check structural invariants (parameter ranges and the semidirect
    /// action constraint).
    pub fn validate(&self) -> Result<()> {
        match self {
            GroupSpec::Cyclic(n) if *n >= 1 => Ok(()),
            GroupSpec::Cyclic(_) => Err(Error::InvalidSpec("cyclic requires n >= 1".into())),
            GroupSpec::Dihedral(n) if *n >= 1 => Ok(()),
            GroupSpec::Dihedral(_) => Err(Error::InvalidSpec("dihedral requires n >= 1".into())),
            GroupSpec::Z2Pow(r) if (1..=63).contains(r) => Ok(()),
            GroupSpec::Z2Pow(_) => Err(Error::InvalidSpec("z2pow requires 1 <= r <= 63".into())),
            GroupSpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            GroupSpec::Semidirect { m, n, g } => {
                if *m < 1 || *n < 1 {
                    return Err(Error::InvalidSpec("semidirect requires m, n >= 1".into()));
                }
                if *g >= *n && *n > 1 {
                    return Err(Error::InvalidSpec(format!(
                        "semidirect action requires g < n, got g = {g}, n = {n}"
                    )));
                }
                if gcd(*g % *n, *n) != 1 {
                    return Err(Error::InvalidSpec(format!(
                        "invalid action: gcd({g}, {n}) != 1"
                    )));
                }
                if pow_mod(*g, *m, *n) != 1 % *n {
                    return Err(Error::InvalidSpec(format!(
                        "invalid action: {g}^{m} != 1 (mod {n})"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Group order. Saturates at `u128::MAX` for absurdly nested products.
    pub fn order(&self) -> u128 {
        match self {
            GroupSpec::Cyclic(n) => *n as u128,
            GroupSpec::Dihedral(n) => 2u128.saturating_mul(*n as u128),
            GroupSpec::Z2Pow(r) => 1u128 << r.min(&127),
            GroupSpec::Product(a, b) => a.order().saturating_mul(b.order()),
            GroupSpec::Semidirect { m, n, .. } => (*m as u128).saturating_mul(*n as u128),
        }
    }

    pub fn identity(&self) -> Element {
        match self {
            GroupSpec::Cyclic(_) => Element::Cyclic(0),
            GroupSpec::Dihedral(_) => Element::Dihedral { flip: 0, rot: 0 },
            GroupSpec::Z2Pow(_) => Element::Bits(0),
            GroupSpec::Product(a, b) => {
                Element::Pair(Box::new(a.identity()), Box::new(b.identity()))
            }
            GroupSpec::Semidirect { .. } => Element::Semidirect { a: 0, x: 0 },
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (GroupSpec::Cyclic(n), Element::Cyclic(i)) => i < n,
            (GroupSpec::Dihedral(n), Element::Dihedral { flip, rot }) => *flip <= 1 && rot < n,
            (GroupSpec::Z2Pow(r), Element::Bits(v)) => *v < (1u64 << r),
            (GroupSpec::Product(ga, gb), Element::Pair(a, b)) => ga.contains(a) && gb.contains(b),
            (GroupSpec::Semidirect { m, n, .. }, Element::Semidirect { a, x }) => a < m && x < n,
            _ => false,
        }
    }

    fn member(&self, e: &Element) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::NotAMember {
                literal: format!("{e:?}"),
                group: self.to_string(),
            })
        }
    }

    /// Group product under the closed-form laws per kind.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        self.member(a)?;
        self.member(b)?;
        Ok(self.mul_unchecked(a, b))
    }

    pub(crate) fn mul_unchecked(&self, a: &Element, b: &Element) -> Element {
        match (self, a, b) {
            (GroupSpec::Cyclic(n), Element::Cyclic(i), Element::Cyclic(j)) => {
                Element::Cyclic(add_mod(*i, *j, *n))
            }
            (
                GroupSpec::Dihedral(n),
                Element::Dihedral { flip: a1, rot: i },
                Element::Dihedral { flip: a2, rot: j },
            ) => {
                // w^a1 x^i * w^a2 x^j = w^(a1+a2) x^((-1)^a2 i + j)
                let i = if *a2 == 1 { (*n - *i) % *n } else { *i };
                Element::Dihedral {
                    flip: a1 ^ a2,
                    rot: add_mod(i, *j, *n),
                }
            }
            (GroupSpec::Z2Pow(_), Element::Bits(u), Element::Bits(v)) => Element::Bits(u ^ v),
            (GroupSpec::Product(ga, gb), Element::Pair(a1, b1), Element::Pair(a2, b2)) => {
                Element::Pair(
                    Box::new(ga.mul_unchecked(a1, a2)),
                    Box::new(gb.mul_unchecked(b1, b2)),
                )
            }
            (
                GroupSpec::Semidirect { m, n, g },
                Element::Semidirect { a: a1, x: x1 },
                Element::Semidirect { a: a2, x: x2 },
            ) => {
                // (a1, x1) * (a2, x2) = (a1 + a2, g^a2 * x1 + x2)
                let twisted = (pow_mod(*g, *a2, *n) as u128 * *x1 as u128 % *n as u128) as u64;
                Element::Semidirect {
                    a: add_mod(*a1, *a2, *m),
                    x: add_mod(twisted, *x2, *n),
                }
            }
            _ => unreachable!("mul_unchecked on mismatched element shapes"),
        }
    }

    /// Closed-form inverse: `multiply(a, inverse(a)) = identity`.
    pub fn inverse(&self, a: &Element) -> Result<Element> {
        self.member(a)?;
        Ok(self.inv_unchecked(a))
    }

    pub(crate) fn inv_unchecked(&self, a: &Element) -> Element {
        match (self, a) {
            (GroupSpec::Cyclic(n), Element::Cyclic(i)) => Element::Cyclic((*n - *i) % *n),
            (GroupSpec::Dihedral(n), Element::Dihedral { flip, rot }) => {
                // Rotations invert; reflections w x^i are involutions.
                if *flip == 1 {
                    a.clone()
                } else {
                    Element::Dihedral {
                        flip: 0,
                        rot: (*n - *rot) % *n,
                    }
                }
            }
            (GroupSpec::Z2Pow(_), Element::Bits(_)) => a.clone(),
            (GroupSpec::Product(ga, gb), Element::Pair(x, y)) => Element::Pair(
                Box::new(ga.inv_unchecked(x)),
                Box::new(gb.inv_unchecked(y)),
            ),
            (GroupSpec::Semidirect { m, n, g }, Element::Semidirect { a, x }) => {
                // (a, x)^-1 = (-a, -g^(-a) x); g^(-a) = g^(m - a) since g^m = 1.
                let a_inv = (*m - *a) % *m;
                let coeff = pow_mod(*g, a_inv, *n);
                let x_inv = (*n - (coeff as u128 * *x as u128 % *n as u128) as u64) % *n;
                Element::Semidirect { a: a_inv, x: x_inv }
            }
            _ => unreachable!("inv_unchecked on mismatched element shapes"),
        }
    }

    /// Canonical rank of an element: its position in enumeration order.
    pub(crate) fn rank(&self, e: &Element) -> u64 {
        match (self, e) {
            (GroupSpec::Cyclic(_), Element::Cyclic(i)) => *i,
            (GroupSpec::Dihedral(n), Element::Dihedral { flip, rot }) => *flip as u64 * n + rot,
            (GroupSpec::Z2Pow(_), Element::Bits(v)) => *v,
            (GroupSpec::Product(ga, gb), Element::Pair(a, b)) => {
                ga.rank(a) * gb.order() as u64 + gb.rank(b)
            }
            (GroupSpec::Semidirect { n, .. }, Element::Semidirect { a, x }) => a * n + x,
            _ => unreachable!("rank on mismatched element shapes"),
        }
    }

    pub(crate) fn unrank(&self, r: u64) -> Element {
        match self {
            GroupSpec::Cyclic(_) => Element::Cyclic(r),
            GroupSpec::Dihedral(n) => Element::Dihedral {
                flip: (r / n) as u8,
                rot: r % n,
            },
            GroupSpec::Z2Pow(_) => Element::Bits(r),
            GroupSpec::Product(ga, gb) => {
                let ob = gb.order() as u64;
                Element::Pair(Box::new(ga.unrank(r / ob)), Box::new(gb.unrank(r % ob)))
            }
            GroupSpec::Semidirect { n, .. } => Element::Semidirect { a: r / n, x: r % n },
        }
    }

    /// All elements in canonical rank order.
    ///
    /// Errors with [`Error::GroupTooLarge`] when the order exceeds `limit`.
    pub fn enumerate_with_limit(&self, limit: u64) -> Result<Vec<Element>> {
        let order = self.order();
        if order > limit as u128 {
            return Err(Error::GroupTooLarge { order, limit });
        }
        Ok((0..order as u64).map(|r| self.unrank(r)).collect())
    }

    /// [`GroupSpec::enumerate_with_limit`] at [`DEFAULT_ORDER_LIMIT`].
    pub fn enumerate(&self) -> Result<Vec<Element>> {
        self.enumerate_with_limit(DEFAULT_ORDER_LIMIT)
    }

    /// Parse an element literal. The shape is dictated by the group kind:
    /// cyclic `"5"`, dihedral `"(1,3)"`, z2pow `"0101"` (length r),
    /// semidirect `"(7,1)"`, product `"(<elem>,<elem>)"`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let s = text.trim();
        let e = self.parse_element_inner(s)?;
        if !self.contains(&e) {
            return Err(Error::NotAMember {
                literal: s.to_string(),
                group: self.to_string(),
            });
        }
        Ok(e)
    }

    fn parse_element_inner(&self, s: &str) -> Result<Element> {
        match self {
            GroupSpec::Cyclic(_) => Ok(Element::Cyclic(parse_u64(s)?)),
            GroupSpec::Dihedral(_) => {
                let (a, b) = split_pair(s)?;
                Ok(Element::Dihedral {
                    flip: parse_u64(a)?
                        .try_into()
                        .map_err(|_| Error::parse(0, "dihedral flip must be 0 or 1"))?,
                    rot: parse_u64(b)?,
                })
            }
            GroupSpec::Z2Pow(r) => {
                let s = s.trim();
                if s.len() != *r as usize {
                    return Err(Error::parse(
                        0,
                        format!("expected {r} bits, got {}", s.len()),
                    ));
                }
                let mut v = 0u64;
                for c in s.chars() {
                    v = (v << 1)
                        | match c {
                            '0' => 0,
                            '1' => 1,
                            _ => return Err(Error::parse(0, format!("bad bit character {c:?}"))),
                        };
                }
                Ok(Element::Bits(v))
            }
            GroupSpec::Product(ga, gb) => {
                let (a, b) = split_pair(s)?;
                Ok(Element::Pair(
                    Box::new(ga.parse_element_inner(a)?),
                    Box::new(gb.parse_element_inner(b)?),
                ))
            }
            GroupSpec::Semidirect { .. } => {
                let (a, b) = split_pair(s)?;
                Ok(Element::Semidirect {
                    a: parse_u64(a)?,
                    x: parse_u64(b)?,
                })
            }
        }
    }

    /// Render an element in the literal format accepted by
    /// [`GroupSpec::parse_element`].
    pub fn element_literal(&self, e: &Element) -> String {
        match (self, e) {
            (GroupSpec::Cyclic(_), Element::Cyclic(i)) => i.to_string(),
            (GroupSpec::Dihedral(_), Element::Dihedral { flip, rot }) => format!("({flip},{rot})"),
            (GroupSpec::Z2Pow(r), Element::Bits(v)) => {
                (0..*r).rev().map(|b| if v >> b & 1 == 1 { '1' } else { '0' }).collect()
            }
            (GroupSpec::Product(ga, gb), Element::Pair(a, b)) => {
                format!("({},{})", ga.element_literal(a), gb.element_literal(b))
            }
            (GroupSpec::Semidirect { .. }, Element::Semidirect { a, x }) => format!("({a},{x})"),
            _ => unreachable!("element_literal on mismatched element shapes"),
        }
    }
}

fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Z2Pow(r) => write!(f, "z2pow({r})"),
            GroupSpec::Product(a, b) => write!(f, "product({a},{b})"),
            GroupSpec::Semidirect { m, n, g } => write!(f, "semidirect({m},{n},{g})"),
        }
    }
}

// Bounds parser recursion (and with it the depth of every spec-driven
// recursion downstream) against adversarial product nesting.
const MAX_SPEC_DEPTH: usize = 64;

struct SpecParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    depth: usize,
}

impl<'a> SpecParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected {:?}", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected a group kind"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii ident")
            .to_string())
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        let at = self.pos;
        self.depth += 1;
        if self.depth > MAX_SPEC_DEPTH {
            return Err(Error::parse(at, "group spec nested too deeply"));
        }
        let kind = self.ident()?;
        self.expect(b'(')?;
        let spec = match kind.as_str() {
            "cyclic" => GroupSpec::Cyclic(self.int()?),
            "dihedral" => GroupSpec::Dihedral(self.int()?),
            "z2pow" => {
                let r = self.int()?;
                GroupSpec::Z2Pow(
                    r.try_into()
                        .map_err(|_| Error::parse(at, "z2pow dimension out of range"))?,
                )
            }
            "product" => {
                let a = self.spec()?;
                self.expect(b',')?;
                let b = self.spec()?;
                GroupSpec::Product(Box::new(a), Box::new(b))
            }
            "semidirect" => {
                let m = self.int()?;
                self.expect(b',')?;
                let n = self.int()?;
                self.expect(b',')?;
                let g = self.int()?;
                GroupSpec::Semidirect { m, n, g }
            }
            other => return Err(Error::parse(at, format!("unknown group kind {other:?}"))),
        };
        self.expect(b')')?;
        self.depth -= 1;
        Ok(spec)
    }
}

fn parse_u64(s: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(0, format!("expected an integer, got {s:?}")));
    }
    s.parse()
        .map_err(|_| Error::parse(0, "integer out of range"))
}

/// Split `"(a,b)"` at the top-level comma, respecting nested parentheses.
fn split_pair(s: &str) -> Result<(&str, &str)> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return Err(Error::parse(0, format!("expected a (..,..) pair, got {s:?}")));
    }
    let inner = &s[1..s.len() - 1];
    let mut depth = 0usize;
    for (i, c) in inner.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(Error::parse(0, "pair literal is missing a top-level comma"))
}

/// Split a comma-separated list at top level, respecting parentheses.
pub(crate) fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Ordered, duplicate-free list of non-identity elements of one group.
/// Index order is the calling order used by broadcast schemes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    elems: Vec<Element>,
}

impl GeneratorSet {
    pub fn new(spec: &GroupSpec, elems: Vec<Element>) -> Result<Self> {
        if elems.is_empty() {
            return Err(Error::InvalidGenerators("empty generator list".into()));
        }
        let identity = spec.identity();
        let mut seen = HashSet::new();
        for e in &elems {
            if !spec.contains(e) {
                return Err(Error::NotAMember {
                    literal: format!("{e:?}"),
                    group: spec.to_string(),
                });
            }
            if *e == identity {
                return Err(Error::InvalidGenerators(
                    "generator set contains the identity".into(),
                ));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::InvalidGenerators(format!(
                    "duplicate generator {}",
                    spec.element_literal(e)
                )));
            }
        }
        Ok(GeneratorSet { elems })
    }

    /// Parse a comma-separated list of element literals.
    pub fn parse(spec: &GroupSpec, text: &str) -> Result<Self> {
        let elems = split_top_level(text)
            .into_iter()
            .map(|part| spec.parse_element(part))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(spec, elems)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.elems.iter().position(|s| s == e)
    }

    pub fn literal(&self, spec: &GroupSpec) -> String {
        self.elems
            .iter()
            .map(|e| spec.element_literal(e))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// For each generator, the index of its inverse within the set.
    /// `None` entries mean the set is not inverse-closed.
    pub fn inverse_indices(&self, spec: &GroupSpec) -> Vec<Option<usize>> {
        self.elems
            .iter()
            .map(|s| self.index_of(&spec.inv_unchecked(s)))
            .collect()
    }
}

/// Outcome of [`validate_generators`]: failures are report entries, not
/// errors.
#[derive(Debug, Clone)]
pub struct GeneratorReport {
    /// Every listed generator has its inverse in the list.
    pub inverse_closed: bool,
    /// A generator whose inverse is missing, when not inverse-closed.
    pub missing_inverse: Option<Element>,
    /// Multiplicative closure from the identity reaches the whole group.
    pub generates: bool,
    /// Number of elements reached by the closure.
    pub reached: u64,
    /// Order of the group.
    pub order: u64,
}

impl GeneratorReport {
    pub fn is_valid(&self) -> bool {
        self.inverse_closed && self.generates
    }
}

/// Check inverse-closure and generation (breadth-first closure from the
/// identity, equivalently connectivity of the Cayley graph).
pub fn validate_generators(spec: &GroupSpec, set: &GeneratorSet) -> Result<GeneratorReport> {
    let order = spec.order();
    if order > DEFAULT_ORDER_LIMIT as u128 {
        return Err(Error::GroupTooLarge {
            order,
            limit: DEFAULT_ORDER_LIMIT,
        });
    }
    let order = order as u64;

    let mut missing_inverse = None;
    for s in set.elements() {
        let inv = spec.inv_unchecked(s);
        if set.index_of(&inv).is_none() {
            missing_inverse = Some(s.clone());
            break;
        }
    }

    let mut reached = HashSet::new();
    let mut frontier = vec![spec.identity()];
    reached.insert(spec.identity());
    while let Some(v) = frontier.pop() {
        for s in set.elements() {
            let w = spec.mul_unchecked(&v, s);
            if reached.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }

    Ok(GeneratorReport {
        inverse_closed: missing_inverse.is_none(),
        missing_inverse,
        generates: reached.len() as u64 == order,
        reached: reached.len() as u64,
        order,
    })
}
