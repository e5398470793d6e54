//! Independent reference values for the acceptance gate, built by plain
//! recurrence so they share no code with `wheelfan-core`.

use num_bigint::BigInt;

/// `F(0..len)` by repeated addition.
pub fn fib_table(len: usize) -> Vec<BigInt> {
    let mut t: Vec<BigInt> = Vec::with_capacity(len);
    for i in 0..len {
        let v = match i {
            0 => BigInt::from(0),
            1 => BigInt::from(1),
            _ => &t[i - 1] + &t[i - 2],
        };
        t.push(v);
    }
    t
}

/// `L(0..len)` by repeated addition.
pub fn lucas_table(len: usize) -> Vec<BigInt> {
    let mut t: Vec<BigInt> = Vec::with_capacity(len);
    for i in 0..len {
        let v = match i {
            0 => BigInt::from(2),
            1 => BigInt::from(1),
            _ => &t[i - 1] + &t[i - 2],
        };
        t.push(v);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_terms() {
        let f: Vec<i64> = fib_table(10)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(f, [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let l: Vec<i64> = lucas_table(10)
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        assert_eq!(l, [2, 1, 3, 4, 7, 11, 18, 29, 47, 76]);
    }
}
