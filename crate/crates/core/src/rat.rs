//! Exact rational scalars.
//!
//! All coefficient arithmetic in this crate is over arbitrary-precision
//! rationals. `BigRational` keeps values in lowest terms with a positive
//! denominator, which is exactly the canonical form required here.

use crate::error::{Error, Result};
use num::BigInt;
use std::str::FromStr;

pub type Rat = num::BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics on a zero denominator; intended for literals.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` (or a bare integer) with arbitrary precision.
pub fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(0, 7), rat_int(0));
        assert_eq!(rat(3, 1).to_string(), "3");
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-7/3", "22/7"] {
            assert_eq!(parse_rat(s).unwrap().to_string(), s);
        }
        assert!(parse_rat("x").is_err());
    }
}
