//! Enumeration of all arithmetic extensions of a semigroup, the
//! six-semigroup classifier, and independent brute-force oracles for
//! oversemigroups and arithmeticity.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::quotient::{kunz_join, semigroup_from_kunz, KunzVec};
use crate::semigroup::{dedup_family, NumSgp};

/// Default genus guard for the enumeration entry points.
pub const DEFAULT_GENUS_LIMIT: u64 = 20;

/// A finite family of extensions of a base semigroup, deduplicated and
/// listed by genus, then by minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtResult {
    base: NumSgp,
    members: Vec<NumSgp>,
}

impl ExtResult {
    fn new(base: NumSgp, members: Vec<NumSgp>) -> Self {
        ExtResult {
            base,
            members: dedup_family(members),
        }
    }

    /// The semigroup the family extends.
    pub fn base(&self) -> &NumSgp {
        &self.base
    }

    /// Members sorted by genus, then by minimal generators.
    pub fn members(&self) -> &[NumSgp] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// True iff `s` belongs to the family.
    pub fn contains(&self, s: &NumSgp) -> bool {
        self.members.iter().any(|m| m == s)
    }

    /// Inclusion-least member, if one member is contained in all others.
    pub fn minimum(&self) -> Option<&NumSgp> {
        self.members
            .iter()
            .find(|c| self.members.iter().all(|m| c.is_subset_of(m)))
    }

    /// Inclusion-greatest member, if one member contains all others.
    pub fn maximum(&self) -> Option<&NumSgp> {
        self.members
            .iter()
            .find(|c| self.members.iter().all(|m| m.is_subset_of(c)))
    }
}

/// `Δ(X) = {x : d·x ∈ Δ for every d ∈ X}`, the intersection of the
/// quotients `Δ/d`; by convention `Δ(∅) = ℕ`.
pub fn delta_of(delta: &NumSgp, divisors: &[u64]) -> Result<NumSgp> {
    let mut ds: Vec<u64> = divisors.to_vec();
    ds.sort_unstable();
    ds.dedup();
    let mut acc = NumSgp::natural();
    for d in ds {
        acc = acc.intersect(&delta.quotient(d)?);
    }
    Ok(acc)
}

/// `Δ ∪ FG(Δ)`: the least arithmetic extension different from `Δ` itself.
///
/// The union is additively closed because it equals `Δ/2 ∩ Δ/3`.
pub fn min_proper_arithmetic(delta: &NumSgp) -> Result<NumSgp> {
    if delta.is_natural() {
        return Err(Error::IsFullSemigroup);
    }
    let f = delta.frobenius() as usize;
    let mut table: Vec<bool> = (0..=f as u64).map(|x| delta.contains(x)).collect();
    for x in delta.fundamental_gaps() {
        table[x as usize] = true;
    }
    Ok(NumSgp::from_table_prefix(table))
}

/// The complete set of arithmetic extensions of `delta`.
///
/// Realization: with `S = Δ ∪ FG(Δ)` and `m = m(S)`, every extension other
/// than the seeded `ℕ`, `<2,3>`, `Δ` is the semigroup of a join of Kunz
/// vectors `φ_m(Δ/a)` over gaps `a` of `S` with `a ≠ 1`. Joins of nonempty
/// subsets of a finite set under an idempotent commutative associative
/// operation are exactly the pairwise-join closure, so no power set is
/// enumerated.
pub fn arithmetic_extensions(delta: &NumSgp, genus_limit: u64) -> Result<ExtResult> {
    if delta.is_natural() {
        return Ok(ExtResult::new(delta.clone(), vec![NumSgp::natural()]));
    }
    if delta.genus() > genus_limit {
        return Err(Error::GenusLimitExceeded {
            genus: delta.genus(),
            limit: genus_limit,
        });
    }
    let s = min_proper_arithmetic(delta)?;
    let m = s.multiplicity();

    let mut pool: Vec<KunzVec> = Vec::new();
    let mut seen: HashSet<KunzVec> = HashSet::new();
    for a in s.gaps() {
        if a == 1 {
            // Δ/1 = Δ is seeded, and φ_m(Δ) need not exist since m can be a
            // fundamental gap of Δ
            continue;
        }
        // m ∈ S ⊆ Δ/a for every a ≥ 2, so the Kunz vector exists
        let v = delta.quotient(a)?.kunz(m)?;
        if seen.insert(v.clone()) {
            pool.push(v);
        }
    }
    // fixpoint of pairwise joins
    let mut i = 0;
    while i < pool.len() {
        for j in 0..i {
            let joined = kunz_join(&pool[i], &pool[j])?;
            if seen.insert(joined.clone()) {
                pool.push(joined);
            }
        }
        i += 1;
    }

    let mut members = vec![
        NumSgp::natural(),
        NumSgp::from_generators(&[2, 3])?,
        delta.clone(),
    ];
    for v in &pool {
        members.push(semigroup_from_kunz(v)?);
    }
    Ok(ExtResult::new(delta.clone(), members))
}

const ALL_EXTENSIONS_ARITHMETIC_GAP_SETS: [&[u64]; 6] =
    [&[], &[1], &[1, 2], &[1, 3], &[1, 2, 4], &[1, 2, 3, 6]];

/// True iff every extension of `s` is arithmetic; this holds exactly for
/// the six semigroups with gap sets ∅, {1}, {1,2}, {1,3}, {1,2,4} and
/// {1,2,3,6}.
pub fn has_only_arithmetic_extensions(s: &NumSgp) -> bool {
    let gaps = s.gaps();
    ALL_EXTENSIONS_ARITHMETIC_GAP_SETS
        .iter()
        .any(|&g| gaps == g)
}

/// Every numerical semigroup `T` with `Δ ⊆ T`, found by scanning the
/// subsets of the gap set of `Δ` for additively closed complements.
pub fn enumerate_oversemigroups(delta: &NumSgp, genus_limit: u64) -> Result<ExtResult> {
    let genus = delta.genus();
    if genus > genus_limit.min(63) {
        return Err(Error::GenusLimitExceeded {
            genus,
            limit: genus_limit,
        });
    }
    if delta.is_natural() {
        return Ok(ExtResult::new(delta.clone(), vec![NumSgp::natural()]));
    }
    let gaps = delta.gaps();
    let f = delta.frobenius() as usize;
    let mut members = Vec::new();
    let mut flag = vec![false; f + 1];
    for mask in 0u64..(1u64 << genus) {
        for (b, &g) in gaps.iter().enumerate() {
            flag[g as usize] = mask & (1 << b) != 0;
        }
        if complement_is_closed(&flag) {
            let table: Vec<bool> = flag.iter().map(|&b| !b).collect();
            members.push(NumSgp::from_table_prefix(table));
        }
    }
    Ok(ExtResult::new(delta.clone(), members))
}

/// Closure check for ℕ∖flagged on the pairs that can land inside the table.
fn complement_is_closed(flag: &[bool]) -> bool {
    let f = flag.len() - 1;
    for x in 1..=f {
        if flag[x] {
            continue;
        }
        for y in x..=f - x {
            if !flag[y] && flag[x + y] {
                return false;
            }
        }
    }
    true
}

/// Decides whether the extension `ext ⊇ delta` is arithmetic.
///
/// The divisor pool `D = {d ≤ F(Δ)+1 : ext ⊆ Δ/d}` contains every divisor
/// of any arithmetic presentation of `ext`, so `ext` is arithmetic exactly
/// when the full intersection over `D` gives `ext` back.
pub fn is_arithmetic_extension(delta: &NumSgp, ext: &NumSgp) -> Result<bool> {
    if !delta.is_subset_of(ext) {
        return Err(Error::NotAnExtension);
    }
    if delta.is_natural() {
        return Ok(ext.is_natural());
    }
    let f = delta.frobenius() as u64;
    // members of ext up to F(Δ); larger ones satisfy d·t ∈ Δ automatically
    let small: Vec<u64> = (0..=f).filter(|&t| ext.contains(t)).collect();
    let mut acc = NumSgp::natural();
    for d in 1..=f + 1 {
        if small.iter().all(|&t| delta.contains(d * t)) {
            acc = acc.intersect(&delta.quotient(d)?);
        }
    }
    Ok(acc == *ext)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[u64]) -> NumSgp {
        NumSgp::from_generators(gens).unwrap()
    }

    fn gap_sets(r: &ExtResult) -> Vec<Vec<u64>> {
        r.members().iter().map(|s| s.gaps()).collect()
    }

    #[test]
    fn delta_of_examples() {
        assert_eq!(
            delta_of(&sgp(&[4, 5, 7]), &[2, 3]).unwrap(),
            sgp(&[4, 5, 6, 7])
        );
        assert_eq!(delta_of(&sgp(&[4, 5, 7]), &[]).unwrap(), NumSgp::natural());
        assert_eq!(delta_of(&sgp(&[5, 7, 9]), &[3]).unwrap(), sgp(&[3, 4, 5]));
        assert_eq!(delta_of(&sgp(&[4, 5, 7]), &[0, 2]), Err(Error::ZeroDivisor));
    }

    #[test]
    fn min_proper_examples() {
        let s = sgp(&[5, 7, 9]);
        let m = min_proper_arithmetic(&s).unwrap();
        assert_eq!(m.gaps(), vec![1, 2, 3, 4]);
        assert_eq!(
            min_proper_arithmetic(&sgp(&[2, 3])).unwrap(),
            NumSgp::natural()
        );
        assert_eq!(
            min_proper_arithmetic(&sgp(&[4, 6, 7])).unwrap(),
            sgp(&[2, 5])
        );
        assert_eq!(
            min_proper_arithmetic(&NumSgp::natural()),
            Err(Error::IsFullSemigroup)
        );
    }

    #[test]
    fn arithmetic_extensions_of_four_six_seven() {
        let r = arithmetic_extensions(&sgp(&[4, 6, 7]), DEFAULT_GENUS_LIMIT).unwrap();
        assert_eq!(
            gap_sets(&r),
            vec![vec![], vec![1], vec![1, 3], vec![1, 2, 3, 5, 9],]
        );
    }

    #[test]
    fn arithmetic_extensions_of_two_three() {
        let r = arithmetic_extensions(&sgp(&[2, 3]), DEFAULT_GENUS_LIMIT).unwrap();
        assert_eq!(gap_sets(&r), vec![vec![], vec![1]]);
    }

    #[test]
    fn arithmetic_extensions_of_four_five_seven() {
        let r = arithmetic_extensions(&sgp(&[4, 5, 7]), DEFAULT_GENUS_LIMIT).unwrap();
        // genus ties order by minimal generators: <2,5> before <3,4,5>
        assert_eq!(
            gap_sets(&r),
            vec![
                vec![],
                vec![1],
                vec![1, 3],
                vec![1, 2],
                vec![1, 2, 3],
                vec![1, 2, 3, 6],
            ]
        );
    }

    #[test]
    fn arithmetic_extensions_guard_and_natural() {
        let r = arithmetic_extensions(&NumSgp::natural(), 0).unwrap();
        assert_eq!(r.members().len(), 1);
        assert_eq!(
            arithmetic_extensions(&sgp(&[5, 7, 9]), 3),
            Err(Error::GenusLimitExceeded { genus: 8, limit: 3 })
        );
    }

    #[test]
    fn ext_result_inclusion_queries() {
        let r = arithmetic_extensions(&sgp(&[4, 5, 7]), DEFAULT_GENUS_LIMIT).unwrap();
        assert_eq!(r.maximum().unwrap(), &NumSgp::natural());
        assert_eq!(r.minimum().unwrap(), &sgp(&[4, 5, 7]));
        assert!(r.contains(&sgp(&[2, 5])));
        assert!(!r.contains(&sgp(&[2, 7])));
    }

    #[test]
    fn classifier_recognizes_exactly_the_six() {
        assert!(has_only_arithmetic_extensions(&sgp(&[4, 5, 7])));
        assert!(has_only_arithmetic_extensions(&NumSgp::natural()));
        assert!(has_only_arithmetic_extensions(&sgp(&[2, 3])));
        assert!(has_only_arithmetic_extensions(&sgp(&[3, 4, 5])));
        assert!(has_only_arithmetic_extensions(&sgp(&[2, 5])));
        assert!(has_only_arithmetic_extensions(&sgp(&[3, 5, 7])));
        assert!(!has_only_arithmetic_extensions(&sgp(&[5, 7, 9])));
        assert!(!has_only_arithmetic_extensions(&sgp(&[4, 6, 7])));
    }

    #[test]
    fn oversemigroup_enumeration() {
        let r = enumerate_oversemigroups(&sgp(&[3, 4, 5]), DEFAULT_GENUS_LIMIT).unwrap();
        assert_eq!(gap_sets(&r), vec![vec![], vec![1], vec![1, 2]]);
        let r = enumerate_oversemigroups(&NumSgp::natural(), DEFAULT_GENUS_LIMIT).unwrap();
        assert_eq!(r.len(), 1);
        let r = enumerate_oversemigroups(&sgp(&[3, 5, 7]), DEFAULT_GENUS_LIMIT).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(
            enumerate_oversemigroups(&sgp(&[5, 7, 9]), 2),
            Err(Error::GenusLimitExceeded { genus: 8, limit: 2 })
        );
    }

    #[test]
    fn is_arithmetic_examples() {
        let s = sgp(&[5, 7, 9]);
        // S ∪ {13}: drop 13 from the gap set
        let with_13 = NumSgp::from_gaps(&[1, 2, 3, 4, 6, 8, 11]).unwrap();
        assert_eq!(is_arithmetic_extension(&s, &with_13), Ok(false));
        assert_eq!(is_arithmetic_extension(&s, &s), Ok(true));
        let with_fg = NumSgp::from_gaps(&[1, 2, 3, 4]).unwrap();
        assert_eq!(is_arithmetic_extension(&s, &with_fg), Ok(true));
        // 4 ∈ <4,5,7> but 4 ∉ <5,7,9>, so the containment precondition fails
        assert_eq!(
            is_arithmetic_extension(&sgp(&[4, 5, 7]), &s),
            Err(Error::NotAnExtension)
        );
        assert_eq!(
            is_arithmetic_extension(&NumSgp::natural(), &NumSgp::natural()),
            Ok(true)
        );
    }
}
