use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::num::Scalar;

/// Five-number summary for a boxplot.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Quartiles<T> {
    pub min: T,
    pub q1: T,
    pub median: T,
    pub q3: T,
    pub max: T,
}

impl<T: Scalar> Quartiles<T> {
    pub fn map<U>(self, f: impl Fn(T) -> U) -> Quartiles<U> {
        Quartiles {
            min: f(self.min),
            q1: f(self.q1),
            median: f(self.median),
            q3: f(self.q3),
            max: f(self.max),
        }
    }

    pub fn contains_in_box(&self, x: T) -> bool {
        self.q1 <= x && x <= self.q3
    }
}

/// Inclusive quantile `num/den` of sorted data, interpolating linearly
/// between order statistics at position `(n-1)·num/den`.
fn quantile<T: Scalar>(sorted: &[T], num: u64, den: u64) -> T {
    let h = (sorted.len() as u64 - 1) * num;
    let lo = (h / den) as usize;
    let rem = h % den;
    if rem == 0 {
        sorted[lo]
    } else {
        sorted[lo] + (sorted[lo + 1] - sorted[lo]) * T::ratio(rem, den)
    }
}

/// Min, quartiles and max of `values`.
pub fn summarize<T: Scalar>(values: &[T]) -> Result<Quartiles<T>> {
    if values.is_empty() {
        return Err(Error::Invalid("cannot summarize an empty list".into()));
    }
    let mut sorted = values.to_vec();
    let mut incomparable = false;
    sorted.sort_by(|a, b| {
        a.partial_cmp(b).unwrap_or_else(|| {
            incomparable = true;
            Ordering::Equal
        })
    });
    if incomparable {
        return Err(Error::Invalid("values are not totally ordered".into()));
    }
    Ok(Quartiles {
        min: sorted[0],
        q1: quantile(&sorted, 1, 4),
        median: quantile(&sorted, 1, 2),
        q3: quantile(&sorted, 3, 4),
        max: sorted[sorted.len() - 1],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn exact_positions() {
        let q = summarize(&[5.0, 3.0, 1.0, 2.0, 4.0]).unwrap();
        assert_eq!(
            q,
            Quartiles {
                min: 1.0,
                q1: 2.0,
                median: 3.0,
                q3: 4.0,
                max: 5.0
            }
        );
    }

    #[test]
    fn singleton() {
        let q = summarize(&[7.0f32]).unwrap();
        assert_eq!(
            (q.min, q.q1, q.median, q.q3, q.max),
            (7.0, 7.0, 7.0, 7.0, 7.0)
        );
    }

    #[test]
    fn interpolated() {
        // positions 0.75, 1.5, 2.25 over [1, 1, 1, 100]
        let q = summarize(&[1.0, 1.0, 1.0, 100.0]).unwrap();
        assert_eq!(q.median, 1.0);
        assert_eq!(q.q1, 1.0);
        assert_eq!(q.q3, 1.0 + 99.0 * 0.25);

        let r: Vec<Ratio<u64>> = [1u64, 2, 4, 8]
            .iter()
            .map(|&x| Ratio::from_integer(x))
            .collect();
        let q = summarize(&r).unwrap();
        // median at 1.5: 2 + (4-2)/2 = 3; q1 at 0.75: 1 + 0.75 = 7/4
        assert_eq!(q.median, Ratio::from_integer(3));
        assert_eq!(q.q1, Ratio::new(7, 4));
        assert_eq!(q.q3, Ratio::new(5, 1));
    }

    #[test]
    fn empty_and_nan_rejected() {
        assert!(summarize::<f64>(&[]).is_err());
        assert!(summarize(&[1.0, f64::NAN]).is_err());
    }
}
