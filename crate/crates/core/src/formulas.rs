//! Closed-form counts and resistances for wheels and fans in exact
//! arithmetic.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{cycle_distance, VertexId};
use crate::scalar::Exact;
use crate::seq::{fib, lucas};

/// Two rim positions of the wheel with `n` rim vertices. The cycle distance
/// is always derived from the positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RimPair {
    n: usize,
    i: VertexId,
    j: VertexId,
}

impl RimPair {
    pub fn new(n: usize, i: VertexId, j: VertexId) -> Result<Self> {
        if n < 3 {
            return Err(Error::WheelTooSmall(n));
        }
        for v in [i, j] {
            if !(1..=n).contains(&v) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: n + 1,
                });
            }
        }
        Ok(RimPair { n, i, j })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn endpoints(&self) -> (VertexId, VertexId) {
        (self.i, self.j)
    }

    pub fn k(&self) -> usize {
        cycle_distance(self.n, self.i, self.j)
    }
}

fn check_wheel(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::WheelTooSmall(n))
    } else {
        Ok(())
    }
}

fn idx(v: usize) -> u64 {
    v as u64
}

/// Spanning trees of the wheel: `l_{2n} - 2`.
pub fn trees_wheel<T: Exact>(n: usize) -> Result<T> {
    check_wheel(n)?;
    Ok(lucas::<T>(2 * idx(n)) - T::from_usize_exact(2))
}

/// Spanning trees of the fan with `m` path vertices: `f_{2m}`.
pub fn trees_fan<T: Exact>(m: usize) -> Result<T> {
    if m < 1 {
        return Err(Error::FanTooSmall(m));
    }
    Ok(fib(2 * idx(m)))
}

/// `f_{2k}(l_{2n} - 2) - f_{2n}(l_{2k} - 2)` for cycle distance `k`.
pub fn forests_at_distance<T: Exact>(n: usize, k: usize) -> Result<T> {
    check_wheel(n)?;
    if k > n / 2 {
        return Err(Error::DistanceOutOfRange { n, k });
    }
    let (n, k) = (idx(n), idx(k));
    let two = || T::from_usize_exact(2);
    Ok(fib::<T>(2 * k) * (lucas::<T>(2 * n) - two())
        - fib::<T>(2 * n) * (lucas::<T>(2 * k) - two()))
}

/// Two-component forests separating the two rim vertices of `p`.
pub fn forests_separating<T: Exact>(p: &RimPair) -> Result<T> {
    if p.i == p.j {
        return Err(Error::SameVertex(p.i));
    }
    forests_at_distance(p.n, p.k())
}

/// The same count written as `f_{2k} T(W_{n+1}) - f_{2n} T(W_{k+1})`. For
/// `k < 3` the second tree count is the formal value `l_{2k} - 2`.
pub fn forests_at_distance_tree_form<T: Exact>(n: usize, k: usize) -> Result<T> {
    check_wheel(n)?;
    if k > n / 2 {
        return Err(Error::DistanceOutOfRange { n, k });
    }
    let small_wheel: T = if k >= 3 {
        trees_wheel(k)?
    } else {
        lucas::<T>(2 * idx(k)) - T::from_usize_exact(2)
    };
    Ok(fib::<T>(2 * idx(k)) * trees_wheel::<T>(n)? - fib::<T>(2 * idx(n)) * small_wheel)
}

/// Adjacent rim vertices: `2(f_{2n-1} - 1)`.
pub fn forests_sep_adjacent<T: Exact>(n: usize) -> Result<T> {
    check_wheel(n)?;
    Ok(T::from_usize_exact(2) * (fib::<T>(2 * idx(n) - 1) - T::one()))
}

/// Rim vertices at cycle distance two: `2(l_{2n-2} - 3)`; needs `n >= 4`.
pub fn forests_sep_dist2<T: Exact>(n: usize) -> Result<T> {
    if n < 4 {
        return Err(Error::DistanceOutOfRange { n, k: 2 });
    }
    Ok(T::from_usize_exact(2) * (lucas::<T>(2 * idx(n) - 2) - T::from_usize_exact(3)))
}

/// A rim vertex and the center: `f_{2n}`.
pub fn forests_sep_center<T: Exact>(n: usize) -> Result<T> {
    check_wheel(n)?;
    Ok(fib(2 * idx(n)))
}

/// Effective resistance between rim vertices at cycle distance `k`:
///
/// ```text
/// f_{2n}^2 / (f_{4n} - 2 f_{2n}) * (2 - f_{4k} / f_{2k}) + f_{2k}
/// ```
pub fn resistance_rim<T: Exact>(n: usize, k: usize) -> Result<Ratio<T>> {
    check_wheel(n)?;
    if k == 0 {
        return Ok(Ratio::from_integer(T::zero()));
    }
    if k > n / 2 {
        return Err(Error::DistanceOutOfRange { n, k });
    }
    let (n, k) = (idx(n), idx(k));
    let f2n: T = fib(2 * n);
    let f2k: T = fib(2 * k);
    let two = T::from_usize_exact(2);
    let scale = Ratio::new(
        f2n.clone() * f2n.clone(),
        fib::<T>(4 * n) - two.clone() * f2n,
    );
    let bracket = Ratio::from_integer(two) - Ratio::new(fib::<T>(4 * k), f2k.clone());
    Ok(scale * bracket + Ratio::from_integer(f2k))
}

/// Rim vertex to center: `f_{2n}^2 / (f_{4n} - 2 f_{2n})`.
pub fn resistance_center<T: Exact>(n: usize) -> Result<Ratio<T>> {
    check_wheel(n)?;
    let n = idx(n);
    let f2n: T = fib(2 * n);
    let two = T::from_usize_exact(2);
    Ok(Ratio::new(
        f2n.clone() * f2n.clone(),
        fib::<T>(4 * n) - two * f2n,
    ))
}

/// `f_{2n} / T(W_{n+1})`, the reduced form of [`resistance_center`].
pub fn resistance_center_simplified<T: Exact>(n: usize) -> Result<Ratio<T>> {
    Ok(Ratio::new(fib(2 * idx(n)), trees_wheel(n)?))
}
