use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed};

/// Exact scalar used for charges. Only exact rational types implement it;
/// the engine never touches floating point.
pub trait ChargeScalar:
    Clone + Ord + Num + Signed + Display + Debug + FromStr + Send + Sync + 'static
{
    fn from_ratio(num: i64, den: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    /// Parses `"3"`, `"-3/4"` and the like.
    fn parse_charge(s: &str) -> Result<Self, String> {
        s.trim()
            .parse()
            .map_err(|_| format!("not an exact rational: {s:?}"))
    }
}

impl ChargeScalar for Ratio<i64> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
}

impl ChargeScalar for BigRational {
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_in_lowest_terms() {
        let x = BigRational::parse_charge("6/8").unwrap();
        assert_eq!(x.to_string(), "3/4");
        let y = Ratio::<i64>::parse_charge("-4").unwrap();
        assert_eq!(y, Ratio::from_int(-4));
        assert!(Ratio::<i64>::parse_charge("0.5").is_err());
    }
}
