//! Proportionally modular Diophantine inequalities, the two-generator
//! quotient form of their solution sets, closed-form Frobenius number and
//! genus, and finite intersections of such quotients.

use crate::arith::{ceil_sub_div, checked_add, checked_mul, ensure_table_len};
use crate::error::{Error, Result};
use crate::quotient::{
    apery_of_intersection, apery_of_quotient_raw, kunz_from_apery, semigroup_from_kunz,
};
use crate::semigroup::{AperySet, NumSgp};

/// A proportionally modular Diophantine inequality `a·x mod b ≤ c·x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PMIneq {
    a: u64,
    b: u64,
    c: u64,
}

impl PMIneq {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 {
            return Err(Error::ZeroParameter("a"));
        }
        if b == 0 {
            return Err(Error::ZeroParameter("b"));
        }
        if c == 0 {
            return Err(Error::ZeroParameter("c"));
        }
        Ok(PMIneq { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }
}

/// A finite intersection `⟨a,a+1⟩/d₁ ∩ … ∩ ⟨a,a+1⟩/dₙ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TSpec {
    a: u64,
    divisors: Vec<u64>,
}

impl TSpec {
    pub fn new(a: u64, divisors: Vec<u64>) -> Result<Self> {
        if a < 2 {
            return Err(Error::CoefficientTooSmall(a));
        }
        if divisors.is_empty() {
            return Err(Error::ZeroParameter("divisors"));
        }
        if divisors.contains(&0) {
            return Err(Error::ZeroDivisor);
        }
        Ok(TSpec { a, divisors })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }
}

/// The intersection together with its Apéry set w.r.t. `a` and the
/// invariants read off that set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSemigroup {
    pub semigroup: NumSgp,
    pub apery: AperySet,
    pub frobenius: i64,
    pub genus: u64,
}

/// `Ap(⟨a,a+1⟩, a) = {0, a+1, 2(a+1), …, (a−1)(a+1)}`, built directly.
fn two_consecutive_apery(a: u64) -> Result<AperySet> {
    let mut omegas = Vec::with_capacity(ensure_table_len(a)?);
    for i in 0..a {
        let w = checked_mul(i, checked_add(a, 1)?)?;
        if w > i64::MAX as u64 {
            return Err(Error::Overflow);
        }
        omegas.push(w);
    }
    AperySet::from_parts(a, omegas)
}

/// Solution set of `a·x mod b ≤ c·x`, a numerical semigroup.
///
/// Every `x ≥ ⌈(b−1)/c⌉` is a solution because `a·x mod b ≤ b−1 ≤ c·x`
/// there, so only the finite prefix is scanned.
pub fn pm_semigroup(ineq: &PMIneq) -> Result<NumSgp> {
    let (a, b, c) = (ineq.a as u128, ineq.b as u128, ineq.c as u128);
    let bound = (ineq.b - 1).div_ceil(ineq.c);
    let len = ensure_table_len(bound)?;
    let table: Vec<bool> = (0..len as u128).map(|x| (a * x) % b <= c * x).collect();
    Ok(NumSgp::from_table_prefix(table))
}

/// The quotient `⟨a,a+1⟩/b`, computed through the explicit Apéry set of
/// `⟨a,a+1⟩` rather than a sieve of the quotient.
pub fn pm_quotient(a: u64, b: u64) -> Result<NumSgp> {
    if a < 2 {
        return Err(Error::CoefficientTooSmall(a));
    }
    if b == 0 {
        return Err(Error::ZeroParameter("b"));
    }
    let ap = apery_of_quotient_raw(&two_consecutive_apery(a)?, b)?;
    semigroup_from_kunz(&kunz_from_apery(&ap))
}

/// Kunz coordinate of residue `i` for `⟨a,a+1⟩/b`:
/// `⌈((b·i mod a)(a+1) − b·i)/(a·b)⌉`.
fn pm_kappa(a: u64, b: u64, i: u64) -> u64 {
    let bi = b as u128 * i as u128;
    let rest = (bi % a as u128) * (a as u128 + 1);
    let k = ceil_sub_div(rest, bi, a as u128 * b as u128);
    debug_assert!(k >= 0);
    k as u64
}

/// Closed-form Frobenius number of `⟨a,a+1⟩/b`:
/// `max_i (κ_i·a + i) − a`, normalized to −1 when the quotient is ℕ.
pub fn pm_frobenius(a: u64, b: u64) -> Result<i64> {
    if a < 2 {
        return Err(Error::CoefficientTooSmall(a));
    }
    if b == 0 {
        return Err(Error::ZeroParameter("b"));
    }
    let mut max_elem = 0u64;
    for i in 1..a {
        let elem = checked_add(checked_mul(pm_kappa(a, b, i), a)?, i)?;
        max_elem = max_elem.max(elem);
    }
    let f = max_elem as i128 - a as i128;
    Ok(i64::try_from(f).map_err(|_| Error::Overflow)?.max(-1))
}

/// Closed-form genus of `⟨a,a+1⟩/b`: `Σ_i κ_i`.
pub fn pm_genus(a: u64, b: u64) -> Result<u64> {
    if a < 2 {
        return Err(Error::CoefficientTooSmall(a));
    }
    if b == 0 {
        return Err(Error::ZeroParameter("b"));
    }
    let mut sum = 0u64;
    for i in 1..a {
        sum = checked_add(sum, pm_kappa(a, b, i))?;
    }
    Ok(sum)
}

/// Intersects the quotients of a `TSpec` by joining their Apéry sets
/// residue-wise, then reads the Frobenius number and genus off the joined
/// set.
pub fn t_semigroup(spec: &TSpec) -> Result<TSemigroup> {
    let base = two_consecutive_apery(spec.a)?;
    let mut joined: Option<AperySet> = None;
    for &d in &spec.divisors {
        let ap = apery_of_quotient_raw(&base, d)?;
        joined = Some(match joined {
            None => ap,
            Some(acc) => apery_of_intersection(&acc, &ap)?,
        });
    }
    let apery = joined.expect("divisors are nonempty");
    let frobenius = apery.frobenius();
    let genus = apery.genus()?;
    let semigroup = semigroup_from_kunz(&kunz_from_apery(&apery))?;
    Ok(TSemigroup {
        semigroup,
        apery,
        frobenius,
        genus,
    })
}

/// Bounded scan for a pair `(a, b)` with `⟨a,a+1⟩/b` equal to the solution
/// set of `ineq`, in lexicographic order; absence within the bounds is
/// reported honestly, no unbounded search is attempted.
pub fn pm_to_quotient_search(ineq: &PMIneq, a_max: u64, b_max: u64) -> Result<Option<(u64, u64)>> {
    let target = pm_semigroup(ineq)?;
    for a in 2..=a_max {
        for b in 1..=b_max {
            if pm_quotient(a, b)? == target {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sgp(gens: &[u64]) -> NumSgp {
        NumSgp::from_generators(gens).unwrap()
    }

    #[test]
    fn pm_semigroup_examples() {
        let s = pm_semigroup(&PMIneq::new(3, 7, 1).unwrap()).unwrap();
        assert_eq!(s, sgp(&[3, 5, 7]));
        let s = pm_semigroup(&PMIneq::new(2, 5, 1).unwrap()).unwrap();
        assert_eq!(s, sgp(&[3, 4, 5]));
        // c ≥ a makes every x a solution
        let s = pm_semigroup(&PMIneq::new(4, 9, 5).unwrap()).unwrap();
        assert_eq!(s, NumSgp::natural());
        assert_eq!(PMIneq::new(3, 0, 1), Err(Error::ZeroParameter("b")));
    }

    #[test]
    fn pm_quotient_examples() {
        let s = pm_quotient(7, 3).unwrap();
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.genus(), 7);
        assert_eq!(pm_quotient(5, 1).unwrap(), sgp(&[5, 6]));
        assert_eq!(pm_quotient(4, 2).unwrap(), sgp(&[2, 5]));
        assert_eq!(pm_quotient(5, 5).unwrap(), NumSgp::natural());
        assert_eq!(pm_quotient(1, 3), Err(Error::CoefficientTooSmall(1)));
    }

    #[test]
    fn pm_frobenius_examples() {
        assert_eq!(pm_frobenius(7, 3).unwrap(), 11);
        // Sylvester: F(<a,a+1>) = a(a+1) − a − (a+1)
        assert_eq!(pm_frobenius(5, 1).unwrap(), 19);
        assert_eq!(pm_frobenius(5, 5).unwrap(), -1);
    }

    #[test]
    fn pm_genus_examples() {
        assert_eq!(pm_genus(7, 3).unwrap(), 7);
        assert_eq!(pm_genus(5, 1).unwrap(), 10);
        assert_eq!(pm_genus(5, 5).unwrap(), 0);
    }

    #[test]
    fn t_semigroup_examples() {
        let t = t_semigroup(&TSpec::new(4, vec![2, 3]).unwrap()).unwrap();
        assert_eq!(t.semigroup, sgp(&[4, 5, 6, 7]));
        assert_eq!(t.frobenius, 3);
        assert_eq!(t.genus, 3);
        let t = t_semigroup(&TSpec::new(7, vec![3]).unwrap()).unwrap();
        assert_eq!(t.frobenius, 11);
        assert_eq!(t.genus, 7);
        let t = t_semigroup(&TSpec::new(2, vec![1]).unwrap()).unwrap();
        assert_eq!(t.semigroup, sgp(&[2, 3]));
        assert_eq!(TSpec::new(1, vec![2]), Err(Error::CoefficientTooSmall(1)));
        assert_eq!(TSpec::new(4, vec![]), Err(Error::ZeroParameter("divisors")));
    }

    #[test]
    fn quotient_search_examples() {
        let found = pm_to_quotient_search(&PMIneq::new(2, 5, 1).unwrap(), 20, 20)
            .unwrap()
            .expect("within bounds");
        assert_eq!(found, (4, 3));
        assert_eq!(pm_quotient(found.0, found.1).unwrap(), sgp(&[3, 4, 5]));

        let found = pm_to_quotient_search(&PMIneq::new(3, 7, 1).unwrap(), 20, 20)
            .unwrap()
            .expect("within bounds");
        assert_eq!(found, (6, 4));
        assert_eq!(pm_quotient(found.0, found.1).unwrap(), sgp(&[3, 5, 7]));

        // solution set N: the smallest quotient by a member
        let found = pm_to_quotient_search(&PMIneq::new(4, 9, 5).unwrap(), 20, 20)
            .unwrap()
            .expect("within bounds");
        assert_eq!(found, (2, 2));
    }

    #[test]
    fn overflow_is_reported() {
        assert_eq!(pm_frobenius(1 << 50, 1), Err(Error::Overflow));
        // quotient construction refuses to allocate the giant Apéry vector
        assert!(matches!(
            pm_quotient(1 << 50, 3),
            Err(Error::TableTooLarge { .. })
        ));
    }
}
