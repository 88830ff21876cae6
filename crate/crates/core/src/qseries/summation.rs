//! The signed-range summation convention and the sign function.

use crate::arith::QRing;

/// `Σ_{j=a}^{b} f(j)`, extended to `a > b` by
/// `Σ_{j=a}^{b} f(j) = -Σ_{j=b+1}^{a-1} f(j)`.
pub fn signed_range_sum<R, F>(ring: &R, a: i64, b: i64, mut f: F) -> R::Elem
where
    R: QRing,
    F: FnMut(i64) -> R::Elem,
{
    if a <= b {
        ring.sum((a..=b).map(&mut f))
    } else {
        ring.neg(&ring.sum((b + 1..a).map(&mut f)))
    }
}

/// Index range and orientation of `Σ_{j=a}^{b}` under the convention above:
/// the indices actually visited and the sign (+1 or -1) applied to their sum.
pub fn signed_range(a: i64, b: i64) -> (std::ops::Range<i64>, i64) {
    if a <= b {
        (a..b + 1, 1)
    } else {
        (b + 1..a, -1)
    }
}

/// `1` for `k >= 0`, `-1` for `k < 0`.
pub fn sgn(k: i64) -> i64 {
    if k >= 0 {
        1
    } else {
        -1
    }
}
