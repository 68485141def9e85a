//! Scalar abstraction for index values and trial statistics.
//!
//! Anything that is an ordered field-like number with conversions from
//! counts qualifies: `f32`, `f64` and exact rationals such as
//! `Ratio<u64>`.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, ToPrimitive};

pub trait Scalar:
    Num + PartialOrd + Copy + FromPrimitive + ToPrimitive + Debug + Send + Sync + 'static
{
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("count representable in scalar type")
    }

    /// `num / den`, computed in the scalar type.
    fn ratio(num: u64, den: u64) -> Self {
        Self::from_count(num) / Self::from_count(den)
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Num + PartialOrd + Copy + FromPrimitive + ToPrimitive + Debug + Send + Sync + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn ratio_is_exact_for_rationals() {
        assert_eq!(<Ratio<u64>>::ratio(7, 10), Ratio::new(7, 10));
        assert_eq!(<f64 as Scalar>::ratio(7, 10), 0.7);
        assert_eq!(<f32 as Scalar>::ratio(1, 4), 0.25f32);
    }
}
