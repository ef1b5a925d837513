//! Grapheme-root combinatorics.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("consonant count must be at least 3, got {n_c}")]
pub struct DomainError {
    pub n_c: u64,
}

/// Number of possible grapheme roots for a script with `n_c` consonants,
/// counting single roots plus second- and third-order conjunct combinations
/// over the reduced pool:
///
/// `((n_c - 3)^3 + (n_c - 3)^2 + (n_c - 3)) + 3`
///
/// Defined for `n_c >= 3`. A widely cited total of 3,883,894 grapheme roots
/// for Bangla does not equal this formula for any integer consonant count;
/// that figure is recorded here for reference and intentionally not asserted
/// anywhere in this crate.
pub fn possible_roots(n_c: u64) -> Result<u128, DomainError> {
    if n_c < 3 {
        return Err(DomainError { n_c });
    }
    let m = (n_c - 3) as u128;
    Ok(m.pow(3) + m.pow(2) + m + 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        // all conjunct terms vanish
        assert_eq!(possible_roots(3), Ok(3));
        // 1 + 1 + 1 + 3
        assert_eq!(possible_roots(4), Ok(6));
    }

    #[test]
    fn below_domain_is_rejected() {
        assert_eq!(possible_roots(2), Err(DomainError { n_c: 2 }));
        assert_eq!(possible_roots(0), Err(DomainError { n_c: 0 }));
    }

    #[test]
    fn grows_cubically() {
        assert_eq!(possible_roots(13), Ok(1113)); // 1000 + 100 + 10 + 3
        assert_eq!(possible_roots(39), Ok(47991)); // 36^3 + 36^2 + 36 + 3
    }
}
