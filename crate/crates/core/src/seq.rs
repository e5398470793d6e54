//! Fibonacci and Lucas numbers by fast doubling, plus the exact identity
//! sweep used by the closed-form derivations.

use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalar::Exact;
use crate::Int;

/// `(f_i, f_{i+1})` by fast doubling: `f_{2k} = f_k(2f_{k+1} - f_k)`,
/// `f_{2k+1} = f_k^2 + f_{k+1}^2`.
pub fn fib_pair<T: Exact>(i: u64) -> (T, T) {
    let mut a = T::zero();
    let mut b = T::one();
    for bit in (0..u64::BITS - i.leading_zeros()).rev() {
        let two_b = b.clone() + b.clone();
        let c = a.clone() * (two_b - a.clone());
        let d = a.clone() * a + b.clone() * b;
        if i >> bit & 1 == 1 {
            a = d.clone();
            b = c + d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

pub fn fib<T: Exact>(i: u64) -> T {
    fib_pair(i).0
}

/// `l_j = 2 f_{j+1} - f_j`.
pub fn lucas<T: Exact>(j: u64) -> T {
    let (f, f_next) = fib_pair::<T>(j);
    f_next.clone() + f_next - f
}

/// Signed-index entry point; negative indices are a domain error.
pub fn fib_signed<T: Exact>(i: i64) -> Result<T> {
    u64::try_from(i)
        .map(fib)
        .map_err(|_| Error::NegativeIndex(i))
}

pub fn lucas_signed<T: Exact>(j: i64) -> Result<T> {
    u64::try_from(j)
        .map(lucas)
        .map_err(|_| Error::NegativeIndex(j))
}

const SUITE: &str = "identities";

/// Exact identity sweep for `n = 1..=max_n`:
///
/// * `f_{4n} = f_{2n} l_{2n}`
/// * `l_{2n} - f_{2n} = 2 f_{2n-1}`
/// * `3 l_{2n} - 5 f_{2n} = 2 l_{2n-2}`
/// * `sum_{k=1}^{n-1} f_{2k} = f_{2n-1} - 1`
///
/// The third identity is also commonly printed without the factor 3; that
/// form is false for every `n >= 1`, and its evaluation is attached as an
/// informational finding per `n` instead of an assertion.
pub fn check_identities(max_n: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut even_sum = Int::from(0);
    for n in 1..=max_n {
        let params = format!("n={n}");
        let f2n: Int = fib(2 * n);
        let l2n: Int = lucas(2 * n);
        let l2n_2: Int = lucas(2 * n - 2);
        let f2n_1: Int = fib(2 * n - 1);

        checks.push(Check::compare(
            SUITE,
            "f4n=f2n*l2n",
            params.clone(),
            &fib::<Int>(4 * n),
            &(&f2n * &l2n),
        ));
        checks.push(Check::compare(
            SUITE,
            "l2n-f2n=2f2n-1",
            params.clone(),
            &(Int::from(2) * &f2n_1),
            &(&l2n - &f2n),
        ));
        checks.push(Check::compare(
            SUITE,
            "3l2n-5f2n=2l2n-2",
            params.clone(),
            &(Int::from(2) * &l2n_2),
            &(Int::from(3) * &l2n - Int::from(5) * &f2n),
        ));
        let printed_lhs = &l2n - Int::from(5) * &f2n;
        let printed_rhs = Int::from(2) * &l2n_2;
        checks.push(Check::info(
            SUITE,
            "l2n-5f2n=2l2n-2 (as printed)",
            params.clone(),
            format!(
                "lhs={printed_lhs} rhs={printed_rhs} {}",
                if printed_lhs == printed_rhs {
                    "holds"
                } else {
                    "does not hold"
                }
            ),
        ));
        checks.push(Check::compare(
            SUITE,
            "sum f2k=f2n-1 - 1",
            params,
            &(f2n_1 - 1),
            &even_sum,
        ));
        even_sum += f2n;
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use proptest::prelude::*;

    fn naive_fib(i: usize) -> Int {
        let (mut a, mut b) = (Int::from(0), Int::from(1));
        for _ in 0..i {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    }

    fn naive_lucas(j: usize) -> Int {
        let (mut a, mut b) = (Int::from(2), Int::from(1));
        for _ in 0..j {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    }

    #[test]
    fn small_values() {
        assert_eq!(fib::<Int>(0), Int::from(0));
        assert_eq!(fib::<Int>(1), Int::from(1));
        assert_eq!(fib::<Int>(6), Int::from(8));
        assert_eq!(lucas::<Int>(0), Int::from(2));
        assert_eq!(lucas::<Int>(1), Int::from(1));
        assert_eq!(lucas::<Int>(6), Int::from(18));
        assert_eq!(fib::<i64>(40), 102_334_155);
    }

    #[test]
    fn index_40_matches_iteration() {
        assert_eq!(fib::<Int>(40), naive_fib(40));
        assert_eq!(lucas::<Int>(40), naive_fib(39) + naive_fib(41));
        assert_eq!(lucas::<Int>(40), naive_lucas(40));
    }

    #[test]
    fn fast_doubling_matches_naive_to_2000() {
        let (mut a, mut b) = (Int::from(0), Int::from(1));
        for i in 0..=2000u64 {
            assert_eq!(fib::<Int>(i), a, "i={i}");
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
    }

    #[test]
    fn negative_index_rejected() {
        assert_eq!(fib_signed::<Int>(-1), Err(Error::NegativeIndex(-1)));
        assert_eq!(lucas_signed::<Int>(-3), Err(Error::NegativeIndex(-3)));
        assert_eq!(fib_signed::<Int>(7), Ok(Int::from(13)));
    }

    #[test]
    fn scalar_generic_agrees() {
        for i in 0..80 {
            assert_eq!(Int::from(fib::<i128>(i)), fib::<Int>(i));
            assert_eq!(Int::from(lucas::<i128>(i)), lucas::<Int>(i));
        }
    }

    #[test]
    fn identity_sweep_small_cases() {
        let checks = check_identities(3);
        let find = |name: &str, n: u64| {
            checks
                .iter()
                .find(|c| c.name == name && c.params == format!("n={n}"))
                .unwrap()
                .clone()
        };
        let c = find("f4n=f2n*l2n", 1);
        assert_eq!(
            (c.expected.as_str(), c.actual.as_str(), c.status),
            ("3", "3", Status::Pass)
        );
        let c = find("l2n-f2n=2f2n-1", 3);
        assert_eq!(
            (c.expected.as_str(), c.actual.as_str(), c.status),
            ("10", "10", Status::Pass)
        );
        let c = find("l2n-5f2n=2l2n-2 (as printed)", 2);
        assert_eq!(c.actual, "lhs=-8 rhs=6 does not hold");
    }

    #[test]
    fn identity_sweep_to_500_passes() {
        let checks = check_identities(500);
        assert_eq!(checks.len(), 5 * 500);
        assert!(checks.iter().all(|c| c.passed()));
    }

    proptest! {
        #[test]
        fn recurrences_hold(i in 0u64..10_000) {
            prop_assert_eq!(fib::<Int>(i + 2), fib::<Int>(i + 1) + fib::<Int>(i));
            prop_assert_eq!(lucas::<Int>(i + 2), lucas::<Int>(i + 1) + lucas::<Int>(i));
        }
    }
}
