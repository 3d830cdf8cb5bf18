//! Quotients of a semigroup by a positive integer, intersections,
//! Kunz-coordinate vectors, and the Apéry-set transport that computes
//! `Ap(S/a, n)` from `Ap(S, n)` without materializing the quotient.

use crate::arith::{ceil_sub_div, checked_add, checked_mul};
use crate::error::{Error, Result};
use crate::semigroup::{AperySet, NumSgp};

/// The modulus `n` together with the Kunz coordinates `(κ₁, …, κ_{n−1})`,
/// where the Apéry element of residue `i` is `κ_i·n + i`.
///
/// Coordinates may be 0: the vector of a proper oversemigroup taken with
/// respect to a modulus larger than its multiplicity has zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KunzVec {
    n: u64,
    kappas: Vec<u64>,
}

impl KunzVec {
    /// Assembles a Kunz vector, checking that exactly `n − 1` coordinates
    /// are supplied.
    pub fn new(n: u64, kappas: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroParameter("n"));
        }
        if kappas.len() as u64 != n - 1 {
            return Err(Error::InvalidKunzLength {
                n,
                len: kappas.len(),
            });
        }
        Ok(KunzVec { n, kappas })
    }

    /// The modulus.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// The coordinates `(κ₁, …, κ_{n−1})`.
    pub fn kappas(&self) -> &[u64] {
        &self.kappas
    }
}

/// Exact division `(ω(i) − i)/n` applied residue-wise; the input must be a
/// residue-consistent Apéry set, which every constructor in this crate
/// produces.
pub(crate) fn kunz_from_apery(ap: &AperySet) -> KunzVec {
    let n = ap.n;
    let kappas = (1..n)
        .map(|i| {
            let w = ap.omegas[i as usize];
            debug_assert_eq!(w % n, i, "residue-inconsistent Apéry set");
            (w - i) / n
        })
        .collect();
    KunzVec { n, kappas }
}

/// Apéry set of `S/divisor` w.r.t. `ap.n`, computed from `Ap(S, ap.n)` by
/// `κ_i = ⌈(ω(a·i mod n) − a·i)/(a·n)⌉`; the ceiling is evaluated in exact
/// integer arithmetic because the numerator can be negative.
pub(crate) fn apery_of_quotient_raw(ap: &AperySet, divisor: u64) -> Result<AperySet> {
    debug_assert!(divisor > 0);
    let n = ap.n;
    let den = divisor as u128 * n as u128;
    let mut omegas = Vec::with_capacity(n as usize);
    omegas.push(0);
    for i in 1..n {
        let ai = divisor as u128 * i as u128;
        let w = ap.omegas[(ai % n as u128) as usize] as u128;
        let k = ceil_sub_div(w, ai, den);
        // i < n keeps the numerator above −a·n, so the ceiling is never
        // negative
        debug_assert!(k >= 0);
        let kappa = k as u64;
        omegas.push(checked_add(checked_mul(kappa, n)?, i)?);
    }
    Ok(AperySet { n, omegas })
}

impl NumSgp {
    /// The quotient `S/d = {x : d·x ∈ S}`.
    ///
    /// Membership is materialized only up to `F(S) + 1`: for `x > F(S)` the
    /// product `d·x` exceeds `F(S)`, so `x` is automatically a member.
    pub fn quotient(&self, d: u64) -> Result<NumSgp> {
        if d == 0 {
            return Err(Error::ZeroDivisor);
        }
        if self.is_natural() {
            return Ok(NumSgp::natural());
        }
        let f = self.frobenius() as u64;
        let table: Vec<bool> = (0..=f)
            .map(|x| match d.checked_mul(x) {
                Some(p) => self.contains(p),
                // an overflowing product certainly exceeds F(S)
                None => true,
            })
            .collect();
        Ok(NumSgp::from_table_prefix(table))
    }

    /// Set intersection; the joint table runs to `max(F(S), F(T)) + 1`,
    /// beyond which both tails are full.
    pub fn intersect(&self, other: &NumSgp) -> NumSgp {
        let hi = self.frobenius().max(other.frobenius());
        if hi < 0 {
            return NumSgp::natural();
        }
        let table: Vec<bool> = (0..=hi as u64)
            .map(|x| self.contains(x) && other.contains(x))
            .collect();
        NumSgp::from_table_prefix(table)
    }

    /// Apéry set of `S/a` w.r.t. `n ∈ S∖{0}` computed purely from
    /// `Ap(S, n)`, without materializing the quotient.
    pub fn apery_of_quotient(&self, n: u64, a: u64) -> Result<AperySet> {
        if a == 0 {
            return Err(Error::ZeroDivisor);
        }
        let ap = self.apery(n)?;
        apery_of_quotient_raw(&ap, a)
    }

    /// Kunz-coordinates vector w.r.t. a nonzero member `n`.
    pub fn kunz(&self, n: u64) -> Result<KunzVec> {
        Ok(kunz_from_apery(&self.apery(n)?))
    }
}

/// Residue-wise maximum: the Apéry set of the intersection of the owning
/// semigroups.
pub fn apery_of_intersection(left: &AperySet, right: &AperySet) -> Result<AperySet> {
    if left.n != right.n {
        return Err(Error::ModulusMismatch {
            left: left.n,
            right: right.n,
        });
    }
    let omegas = left
        .omegas
        .iter()
        .zip(&right.omegas)
        .map(|(&a, &b)| a.max(b))
        .collect();
    Ok(AperySet { n: left.n, omegas })
}

/// Componentwise maximum of two Kunz vectors over the same modulus; the
/// join corresponds to intersecting the semigroups.
pub fn kunz_join(left: &KunzVec, right: &KunzVec) -> Result<KunzVec> {
    if left.n != right.n {
        return Err(Error::ModulusMismatch {
            left: left.n,
            right: right.n,
        });
    }
    let kappas = left
        .kappas
        .iter()
        .zip(&right.kappas)
        .map(|(&a, &b)| a.max(b))
        .collect();
    Ok(KunzVec { n: left.n, kappas })
}

/// The semigroup generated by `{n} ∪ {κ_i·n + i}`: the inverse of
/// [`NumSgp::kunz`] on vectors that come from an actual Apéry set.
pub fn semigroup_from_kunz(v: &KunzVec) -> Result<NumSgp> {
    let mut gens = Vec::with_capacity(v.kappas.len() + 1);
    gens.push(v.n);
    for (i, &k) in v.kappas.iter().enumerate() {
        let elem = checked_add(checked_mul(k, v.n)?, i as u64 + 1)?;
        gens.push(elem);
    }
    NumSgp::from_generators(&gens)
}
