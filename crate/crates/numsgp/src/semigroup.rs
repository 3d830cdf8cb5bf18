//! Canonical representation of numerical semigroups and their elementary
//! invariants: membership, gaps, multiplicity, Frobenius number, genus,
//! minimal generators, Apéry sets, fundamental gaps.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::arith::{checked_add, checked_mul, ensure_table_len, MAX_TABLE_LEN};
use crate::error::{Error, Result};

/// A numerical semigroup: an additively closed subset of the naturals that
/// contains 0 and has finite complement.
///
/// The canonical form is a dense membership table for `0..=F+1` where `F` is
/// the Frobenius number (the largest non-member); every integer beyond the
/// table is a member. Two values are equal exactly when their gap sets are
/// equal, regardless of how they were constructed.
///
/// The full semigroup of all naturals is represented with `F = -1`.
pub struct NumSgp {
    /// Membership for `0..=frobenius+1`; always starts and ends with `true`.
    table: Vec<bool>,
    multiplicity: u64,
    frobenius: i64,
    genus: u64,
    min_gens: OnceLock<Vec<u64>>,
}

impl NumSgp {
    /// The full semigroup ℕ (no gaps, Frobenius number −1).
    pub fn natural() -> Self {
        NumSgp {
            table: vec![true],
            multiplicity: 1,
            frobenius: -1,
            genus: 0,
            min_gens: OnceLock::new(),
        }
    }

    /// Builds the semigroup generated by `gens`.
    ///
    /// The membership table is filled by a dynamic-programming sieve; the
    /// sieve bound starts at the product of the two smallest generators (a
    /// Frobenius bound whenever they are coprime) and doubles until a run of
    /// `m` consecutive members pins the conductor, after which the table is
    /// trimmed to `F + 2` entries. Zero generators are dropped: they add
    /// nothing to a monoid.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens: Vec<u64> = gens.iter().copied().filter(|&g| g != 0).collect();
        if gens.is_empty() {
            return Err(Error::NotCofinite { gcd: 0 });
        }
        gens.sort_unstable();
        gens.dedup();
        let gcd = gens
            .iter()
            .copied()
            .reduce(num_integer::gcd)
            .expect("nonempty");
        if gcd != 1 {
            return Err(Error::NotCofinite { gcd });
        }
        if gens[0] == 1 {
            return Ok(Self::natural());
        }
        // gcd 1 with smallest generator > 1 forces at least two generators.
        let m = gens[0] as usize;
        let mut bound = checked_mul(gens[0], gens[1])?
            .max(checked_add(*gens.last().expect("nonempty"), gens[0])?);
        let mut table: Vec<bool> = vec![true];
        loop {
            let len = ensure_table_len(checked_add(bound, 1)?)?;
            let start = table.len();
            table.resize(len, false);
            for x in start..len {
                table[x] = gens.iter().any(|&g| {
                    let g = g as usize;
                    g <= x && table[x - g]
                });
            }
            if let Some(conductor) = first_run(&table, m) {
                table.truncate(conductor + 1);
                return Ok(Self::from_table_prefix(table));
            }
            bound = checked_mul(bound, 2)?;
        }
    }

    /// Builds ℕ∖gaps, verifying that the complement is additively closed.
    ///
    /// On failure reports a witness pair of members whose sum lands in the
    /// gap set.
    pub fn from_gaps(gaps: &[u64]) -> Result<Self> {
        let mut gaps: Vec<u64> = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(Error::ZeroGap);
        }
        let Some(&f) = gaps.last() else {
            return Ok(Self::natural());
        };
        let len = ensure_table_len(checked_add(f, 2)?)?;
        let mut table = vec![true; len];
        for &g in &gaps {
            table[g as usize] = false;
        }
        let f = f as usize;
        for x in 1..=f {
            if !table[x] {
                continue;
            }
            for y in x..=f - x {
                if table[y] && !table[x + y] {
                    return Err(Error::NotClosed {
                        x: x as u64,
                        y: y as u64,
                    });
                }
            }
        }
        Ok(Self::from_table_prefix(table))
    }

    /// Builds a semigroup from a membership prefix: `table[x]` decides
    /// membership for `x < table.len()` and everything beyond is a member.
    ///
    /// Callers guarantee additive closure; this only canonicalizes.
    pub(crate) fn from_table_prefix(mut table: Vec<bool>) -> Self {
        if table.is_empty() {
            return Self::natural();
        }
        debug_assert!(table[0], "0 must be a member");
        let Some(f) = table.iter().rposition(|&b| !b) else {
            return Self::natural();
        };
        table.resize(f + 2, true);
        let genus = table.iter().filter(|&&b| !b).count() as u64;
        let multiplicity = table
            .iter()
            .enumerate()
            .skip(1)
            .find(|&(_, &b)| b)
            .map(|(i, _)| i)
            .unwrap_or(table.len()) as u64;
        NumSgp {
            table,
            multiplicity,
            frobenius: f as i64,
            genus,
            min_gens: OnceLock::new(),
        }
    }

    /// True iff `x` belongs to the semigroup.
    pub fn contains(&self, x: u64) -> bool {
        if self.frobenius < 0 || x > self.frobenius as u64 {
            true
        } else {
            self.table[x as usize]
        }
    }

    /// True for the full semigroup ℕ.
    pub fn is_natural(&self) -> bool {
        self.frobenius < 0
    }

    /// Smallest nonzero member.
    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// Largest non-member, or −1 for ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// First integer from which on every integer is a member (`F + 1`).
    pub fn conductor(&self) -> u64 {
        (self.frobenius + 1) as u64
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Ascending list of non-members.
    pub fn gaps(&self) -> Vec<u64> {
        self.table
            .iter()
            .enumerate()
            .filter(|&(_, &b)| !b)
            .map(|(i, _)| i as u64)
            .collect()
    }

    /// The unique minimal system of generators, computed on first use and
    /// cached.
    ///
    /// A member above `F + m` is `m` plus a member, so scanning nonzero
    /// members up to `F + 2m` and keeping the ones that are not a sum of two
    /// nonzero members is exhaustive.
    pub fn min_generators(&self) -> &[u64] {
        self.min_gens.get_or_init(|| {
            if self.is_natural() {
                return vec![1];
            }
            let hi = self.frobenius as u64 + 2 * self.multiplicity;
            let mut out = Vec::new();
            for x in 1..=hi {
                if !self.contains(x) {
                    continue;
                }
                let decomposable = (1..=x / 2).any(|y| self.contains(y) && self.contains(x - y));
                if !decomposable {
                    out.push(x);
                }
            }
            out
        })
    }

    /// Apéry set with respect to a nonzero member `n`: the least member of
    /// each residue class mod `n`.
    pub fn apery(&self, n: u64) -> Result<AperySet> {
        if n == 0 || !self.contains(n) {
            return Err(Error::NotMember { n });
        }
        if n > MAX_TABLE_LEN {
            return Err(Error::TableTooLarge { needed: n as u128 });
        }
        let mut omegas = vec![u64::MAX; n as usize];
        let mut remaining = n as usize;
        let mut x = 0u64;
        while remaining > 0 {
            if self.contains(x) {
                let r = (x % n) as usize;
                if omegas[r] == u64::MAX {
                    omegas[r] = x;
                    remaining -= 1;
                }
            }
            x += 1;
        }
        Ok(AperySet { n, omegas })
    }

    /// Gaps `x` with both `2x` and `3x` members, equivalently with `kx` a
    /// member for every `k ≥ 2`.
    pub fn fundamental_gaps(&self) -> Vec<u64> {
        self.gaps()
            .into_iter()
            .filter(|&x| self.contains(2 * x) && self.contains(3 * x))
            .collect()
    }

    /// True iff every member of `self` belongs to `other`.
    pub fn is_subset_of(&self, other: &NumSgp) -> bool {
        // S ⊆ T exactly when every gap of T is a gap of S.
        other.gaps().iter().all(|&g| !self.contains(g))
    }
}

/// First index at which `run` consecutive `true` entries start, if the run
/// completes inside the table.
fn first_run(table: &[bool], run: usize) -> Option<usize> {
    let mut len = 0usize;
    for (i, &b) in table.iter().enumerate() {
        len = if b { len + 1 } else { 0 };
        if len == run {
            return Some(i + 1 - run);
        }
    }
    None
}

impl Clone for NumSgp {
    fn clone(&self) -> Self {
        NumSgp {
            table: self.table.clone(),
            multiplicity: self.multiplicity,
            frobenius: self.frobenius,
            genus: self.genus,
            min_gens: self.min_gens.clone(),
        }
    }
}

impl PartialEq for NumSgp {
    fn eq(&self, other: &Self) -> bool {
        // Tables are canonical: equal tables ⟺ equal gap sets.
        self.table == other.table
    }
}

impl Eq for NumSgp {}

impl Hash for NumSgp {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.table.hash(state);
    }
}

impl fmt::Debug for NumSgp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumSgp")
            .field("frobenius", &self.frobenius)
            .field("genus", &self.genus)
            .field("gaps", &self.gaps())
            .finish()
    }
}

impl fmt::Display for NumSgp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_generators().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// Apéry set of a semigroup with respect to a nonzero member `n`, stored
/// residue-indexed: `omegas[i]` is the least member congruent to `i` mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AperySet {
    pub(crate) n: u64,
    pub(crate) omegas: Vec<u64>,
}

impl AperySet {
    /// Assembles an Apéry set from raw parts.
    ///
    /// Only the cheap shape constraints are verified (`n ≥ 1`, length `n`,
    /// `ω(0) = 0`, values within the signed 64-bit range); residue
    /// consistency is trusted, so corrupted data is still representable and
    /// gets caught by [`AperySet::genus`].
    pub fn from_parts(n: u64, omegas: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedApery("modulus must be positive"));
        }
        if omegas.len() as u64 != n {
            return Err(Error::MalformedApery("length must equal the modulus"));
        }
        if omegas[0] != 0 {
            return Err(Error::MalformedApery("the 0 residue class holds 0"));
        }
        if omegas.iter().any(|&w| w > i64::MAX as u64) {
            return Err(Error::MalformedApery("element beyond the signed range"));
        }
        Ok(AperySet { n, omegas })
    }

    /// The modulus `n`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The residue-indexed elements `ω(0), …, ω(n−1)`.
    pub fn omegas(&self) -> &[u64] {
        &self.omegas
    }

    /// Frobenius number of the owning semigroup: `max ω − n`.
    pub fn frobenius(&self) -> i64 {
        let max = *self.omegas.iter().max().expect("nonempty");
        max as i64 - self.n as i64
    }

    /// Genus of the owning semigroup: `(Σω)/n − (n−1)/2`, evaluated in exact
    /// integer arithmetic; a non-integer value exposes a corrupted set.
    pub fn genus(&self) -> Result<u64> {
        let n = self.n as u128;
        let twice_sum: u128 = self.omegas.iter().map(|&w| 2 * w as u128).sum();
        let offset = n * (n - 1);
        if twice_sum < offset {
            return Err(Error::NonIntegerGenus);
        }
        let num = twice_sum - offset;
        if !num.is_multiple_of(2 * n) {
            return Err(Error::NonIntegerGenus);
        }
        u64::try_from(num / (2 * n)).map_err(|_| Error::Overflow)
    }
}

/// Canonical ordering key for listing families of semigroups: genus first,
/// then the minimal generators lexicographically.
pub(crate) fn family_sort(members: &mut [NumSgp]) {
    members.sort_by(|a, b| {
        a.genus()
            .cmp(&b.genus())
            .then_with(|| a.min_generators().cmp(b.min_generators()))
    });
}

/// Deduplicates by gap set and sorts canonically.
pub(crate) fn dedup_family(members: Vec<NumSgp>) -> Vec<NumSgp> {
    // Hash and Eq read only the immutable table; the lazy generator cache
    // never participates.
    #[allow(clippy::mutable_key_type)]
    let set: HashSet<NumSgp> = members.into_iter().collect();
    let mut v: Vec<NumSgp> = set.into_iter().collect();
    family_sort(&mut v);
    v
}
