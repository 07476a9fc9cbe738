//! Bitmask subsets of `[n]` and of the signed ground set `J = {1..n, 1*..n*}`.
//!
//! Elements are stored 0-based; printed and parsed 1-based. A subset of `J`
//! uses bits `0..n` for the unstarred elements and bits `n..2n` for the
//! starred ones.

use std::fmt;

use crate::Error;

/// Largest ground set a bitmask subset can address.
pub const MAX_GROUND: usize = 32;

/// A subset of `[n]` stored as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND);
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        Subset(elements.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn sym_diff(self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    #[inline]
    pub fn toggle(self, i: usize) -> Subset {
        Subset(self.0 ^ (1 << i))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `[n]` in increasing bitmask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(n < 32);
        (0..1u32 << n).map(Subset)
    }

    /// All `k`-subsets of `[n]` in increasing bitmask order.
    pub fn all_of_size(n: usize, k: usize) -> impl Iterator<Item = Subset> {
        Subset::all(n).filter(move |s| s.len() == k)
    }

    /// Writes the literal form used by the text formats.
    pub fn literal(self) -> String {
        format_labels(self.iter().map(|i| (i, false)))
    }
}

/// Iterator over the elements of a bitmask.
#[derive(Debug, Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

/// An element of `J`: `i` or `i*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedIndex {
    pub element: usize,
    pub starred: bool,
}

impl SignedIndex {
    pub fn plain(element: usize) -> Self {
        SignedIndex { element, starred: false }
    }

    pub fn starred(element: usize) -> Self {
        SignedIndex { element, starred: true }
    }

    /// The involution `i <-> i*`.
    pub fn star(self) -> Self {
        SignedIndex { element: self.element, starred: !self.starred }
    }

    /// Bit position inside a signed-set mask for ground set size `n`.
    pub fn position(self, n: usize) -> usize {
        self.element + if self.starred { n } else { 0 }
    }

    pub fn from_position(pos: usize, n: usize) -> Self {
        if pos < n {
            SignedIndex::plain(pos)
        } else {
            SignedIndex::starred(pos - n)
        }
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.element + 1, if self.starred { "*" } else { "" })
    }
}

/// A subset of `J` for a fixed `n`, as a `2n`-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSet {
    bits: u32,
    n: u8,
}

impl SignedSet {
    pub fn empty(n: usize) -> Self {
        assert!(2 * n <= MAX_GROUND, "signed ground set too large");
        SignedSet { bits: 0, n: n as u8 }
    }

    pub fn from_bits(bits: u32, n: usize) -> Self {
        assert!(2 * n <= MAX_GROUND, "signed ground set too large");
        debug_assert!(n == 16 || bits >> (2 * n) == 0);
        SignedSet { bits, n: n as u8 }
    }

    pub fn from_indices<I: IntoIterator<Item = SignedIndex>>(indices: I, n: usize) -> Self {
        let bits = indices.into_iter().fold(0u32, |acc, j| acc | 1 << j.position(n));
        SignedSet::from_bits(bits, n)
    }

    /// The extension `S ∪ ([n] \ S)*` of a subset of `[n]`.
    pub fn extension(s: Subset, n: usize) -> Self {
        let comp = s.complement(n).bits();
        SignedSet::from_bits(s.bits() | comp << n, n)
    }

    /// Embeds a subset of `[n]` as an unstarred signed set.
    pub fn unstarred(s: Subset, n: usize) -> Self {
        SignedSet::from_bits(s.bits(), n)
    }

    /// Embeds a subset of `[n]` as a starred signed set.
    pub fn starred(s: Subset, n: usize) -> Self {
        SignedSet::from_bits(s.bits() << n, n)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    #[inline]
    fn low_mask(self) -> u32 {
        Subset::full(self.n()).bits()
    }

    /// Unstarred part as a subset of `[n]`.
    pub fn plain_part(self) -> Subset {
        Subset(self.bits & self.low_mask())
    }

    /// Starred part, with stars dropped.
    pub fn starred_part(self) -> Subset {
        Subset(self.bits >> self.n())
    }

    /// The restriction `J ∩ [n]`.
    pub fn restriction(self) -> Subset {
        self.plain_part()
    }

    pub fn star(self) -> Self {
        let n = self.n();
        SignedSet::from_bits(self.starred_part().bits() | self.plain_part().bits() << n, n)
    }

    pub fn is_admissible(self) -> bool {
        self.plain_part().bits() & self.starred_part().bits() == 0
    }

    pub fn is_transversal(self) -> bool {
        self.is_admissible() && self.len() == self.n()
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, j: SignedIndex) -> bool {
        self.contains_position(j.position(self.n()))
    }

    #[inline]
    pub fn contains_position(self, pos: usize) -> bool {
        self.bits >> pos & 1 == 1
    }

    pub fn insert(self, j: SignedIndex) -> Self {
        SignedSet::from_bits(self.bits | 1 << j.position(self.n()), self.n())
    }

    pub fn remove(self, j: SignedIndex) -> Self {
        SignedSet::from_bits(self.bits & !(1 << j.position(self.n())), self.n())
    }

    /// Symmetric difference with `{j, j*}`: swaps `j` and `j*` on a transversal.
    pub fn swap_pair(self, element: usize) -> Self {
        let n = self.n();
        SignedSet::from_bits(self.bits ^ (1 << element | 1 << (element + n)), n)
    }

    pub fn sym_diff(self, other: SignedSet) -> Self {
        SignedSet::from_bits(self.bits ^ other.bits, self.n())
    }

    pub fn union(self, other: SignedSet) -> Self {
        SignedSet::from_bits(self.bits | other.bits, self.n())
    }

    pub fn intersection(self, other: SignedSet) -> Self {
        SignedSet::from_bits(self.bits & other.bits, self.n())
    }

    pub fn difference(self, other: SignedSet) -> Self {
        SignedSet::from_bits(self.bits & !other.bits, self.n())
    }

    pub fn is_subset_of(self, other: SignedSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Complement inside `J`.
    pub fn complement(self) -> Self {
        let full = Subset::full(2 * self.n()).bits();
        SignedSet::from_bits(!self.bits & full, self.n())
    }

    pub fn positions(self) -> Elements {
        Elements(self.bits)
    }

    pub fn iter(self) -> impl Iterator<Item = SignedIndex> {
        let n = self.n();
        self.positions().map(move |p| SignedIndex::from_position(p, n))
    }

    /// All admissible subsets of `J`, in increasing bitmask order.
    pub fn all_admissible(n: usize) -> impl Iterator<Item = SignedSet> {
        (0..1u32 << (2 * n)).map(move |b| SignedSet::from_bits(b, n)).filter(|s| s.is_admissible())
    }

    /// Literal form, elements ordered by label with `i` before `i*`.
    pub fn literal(self) -> String {
        let mut labels: Vec<(usize, bool)> = self.iter().map(|j| (j.element, j.starred)).collect();
        labels.sort();
        format_labels(labels.into_iter())
    }
}

impl fmt::Display for SignedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

fn format_labels<I: Iterator<Item = (usize, bool)>>(labels: I) -> String {
    let labels: Vec<(usize, bool)> = labels.collect();
    if labels.is_empty() {
        return "{}".to_string();
    }
    let star = |s: bool| if s { "*" } else { "" };
    if labels.iter().all(|&(i, _)| i < 9) {
        labels.iter().map(|&(i, s)| format!("{}{}", i + 1, star(s))).collect()
    } else {
        let parts: Vec<String> = labels.iter().map(|&(i, s)| format!("{}{}", i + 1, star(s))).collect();
        format!("[{}]", parts.join(" "))
    }
}

/// Parses a subset literal into 0-based `(element, starred)` labels.
///
/// Accepted forms: `{}` (or `-`) for the empty set, concatenated digits with
/// optional `*` suffixes (`1*23`), or a bracketed whitespace/comma separated
/// list for multi-digit labels (`[10 12*]`).
pub fn parse_labels(literal: &str) -> Result<Vec<(usize, bool)>, String> {
    let s = literal.trim();
    if s == "{}" || s == "-" || s == "∅" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if let Some(inner) = s.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| format!("unterminated bracket in '{s}'"))?;
        for tok in inner.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (digits, starred) = match tok.strip_suffix('*') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let v: usize = digits.parse().map_err(|_| format!("bad element '{tok}'"))?;
            if v == 0 {
                return Err("elements are numbered from 1".into());
            }
            out.push((v - 1, starred));
        }
        return Ok(out);
    }
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let d = c.to_digit(10).ok_or_else(|| format!("unexpected character '{c}' in '{s}'"))? as usize;
        if d == 0 {
            return Err(format!("elements are numbered from 1 in '{s}'"));
        }
        let starred = chars.get(k + 1) == Some(&'*');
        out.push((d - 1, starred));
        k += if starred { 2 } else { 1 };
    }
    Ok(out)
}

/// Parses an unstarred subset literal over `[n]`.
pub fn parse_subset(literal: &str, n: usize) -> Result<Subset, Error> {
    let labels = parse_labels(literal).map_err(Error::InvalidInput)?;
    let mut s = Subset::EMPTY;
    for (i, starred) in labels {
        if starred {
            return Err(Error::InvalidInput(format!("starred element in '{literal}'")));
        }
        if i >= n {
            return Err(Error::InvalidInput(format!("element {} outside [{n}]", i + 1)));
        }
        s = s.union(Subset::singleton(i));
    }
    Ok(s)
}

/// Parses a signed subset literal over `J` for ground set size `n`.
pub fn parse_signed_set(literal: &str, n: usize) -> Result<SignedSet, Error> {
    let labels = parse_labels(literal).map_err(Error::InvalidInput)?;
    let mut s = SignedSet::empty(n);
    for (i, starred) in labels {
        if i >= n {
            return Err(Error::InvalidInput(format!("element {} outside [{n}]", i + 1)));
        }
        s = s.insert(SignedIndex { element: i, starred });
    }
    Ok(s)
}
