use thiserror::Error;

/// Errors reported by the semigroup operations.
///
/// Every variant names the violated precondition; there are no silent
/// fallbacks and no tolerance semantics anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("gcd of the generators is {gcd}, not 1; the complement is not finite")]
    NotCofinite { gcd: u64 },
    #[error("arithmetic overflow beyond the 64-bit range")]
    Overflow,
    #[error("a membership table of {needed} entries exceeds the supported limit")]
    TableTooLarge { needed: u128 },
    #[error("0 cannot be a gap: every submonoid of the naturals contains 0")]
    ZeroGap,
    #[error("gap set is not additively closed: {x} and {y} are members but {x} + {y} is a gap")]
    NotClosed { x: u64, y: u64 },
    #[error("{n} is not a nonzero element of the semigroup")]
    NotMember { n: u64 },
    #[error("Apéry data yields a non-integer genus; the set is corrupted")]
    NonIntegerGenus,
    #[error("malformed Apéry set: {0}")]
    MalformedApery(&'static str),
    #[error("a Kunz vector for modulus {n} must have {n} - 1 coordinates, got {len}")]
    InvalidKunzLength { n: u64, len: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("cannot divide a semigroup by zero")]
    ZeroDivisor,
    #[error("genus {genus} exceeds the enumeration limit {limit}")]
    GenusLimitExceeded { genus: u64, limit: u64 },
    #[error("the full semigroup of all naturals has no proper extension")]
    IsFullSemigroup,
    #[error("the second semigroup does not contain the first")]
    NotAnExtension,
    #[error("parameter `{0}` must be positive")]
    ZeroParameter(&'static str),
    #[error("coefficient a must be at least 2, got {0}")]
    CoefficientTooSmall(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
