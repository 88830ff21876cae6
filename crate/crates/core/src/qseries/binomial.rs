//! Gaussian polynomials `[n k]` in base `q^s`.
//!
//! Values come from the Pascal recurrence
//! `[n k] = [n-1 k-1] + q^{s k} [n-1 k]`, which never divides. At roots of
//! unity the quotient form `(q)_n / ((q)_{n-k} (q)_k)` is often `0/0` even
//! though the polynomial value is perfectly well defined.

use crate::arith::QRing;

/// `[n k]_{q^s}`; zero unless `0 <= k <= n`.
pub fn q_binomial<R: QRing>(ring: &R, n: i64, k: i64, base_exponent: i64) -> R::Elem {
    if k < 0 || n < 0 || k > n {
        return ring.zero();
    }
    // [n k] = [n n-k]
    let k = k.min(n - k);
    // row[j] holds [i j] for the current i, for j <= k.
    let mut row = vec![ring.zero(); k as usize + 1];
    row[0] = ring.one();
    for i in 1..=n {
        let top = i.min(k) as usize;
        for j in (1..=top).rev() {
            let shifted = ring.mul_q_pow(&row[j], base_exponent * j as i64);
            row[j] = ring.add(&row[j - 1], &shifted);
        }
    }
    row[k as usize].clone()
}

/// All `[n k]_{q^s}` for `0 <= k <= n <= n_max`, built row by row.
#[derive(Clone, Debug)]
pub struct QBinomialTable<R: QRing> {
    rows: Vec<Vec<R::Elem>>,
    zero: R::Elem,
}

impl<R: QRing> QBinomialTable<R> {
    pub fn new(ring: &R, n_max: usize, base_exponent: i64) -> Self {
        let mut rows: Vec<Vec<R::Elem>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![ring.one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(ring.one());
            for k in 1..n {
                let shifted = ring.mul_q_pow(&prev[k], base_exponent * k as i64);
                row.push(ring.add(&prev[k - 1], &shifted));
            }
            row.push(ring.one());
            rows.push(row);
        }
        Self {
            rows,
            zero: ring.zero(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `[n k]`, or zero outside `0 <= k <= n`. Panics if `n > n_max`.
    pub fn get(&self, n: i64, k: i64) -> &R::Elem {
        if k < 0 || n < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, CyclotomicRing, FormalQ, LaurentPoly, QField, RationalPoint};
    use crate::qseries::pochhammer::{pochhammer, PochArgument};

    #[test]
    fn edge_cases() {
        let p = RationalPoint::new(rat(2, 3)).unwrap();
        for n in 0..6 {
            assert_eq!(q_binomial(&p, n, 0, 1), rat(1, 1));
            assert_eq!(q_binomial(&p, n, n, 1), rat(1, 1));
        }
        assert_eq!(q_binomial(&p, 3, 5, 1), rat(0, 1));
        assert_eq!(q_binomial(&p, 3, -1, 1), rat(0, 1));
        assert_eq!(q_binomial(&p, -2, 1, 1), rat(0, 1));
    }

    #[test]
    fn four_choose_two_as_polynomial() {
        let expected = LaurentPoly::from_terms([
            (0, int(1)),
            (1, int(1)),
            (2, int(2)),
            (3, int(1)),
            (4, int(1)),
        ]);
        assert_eq!(q_binomial(&FormalQ, 4, 2, 1), expected);
    }

    #[test]
    fn recurrence_matches_quotient_at_generic_points() {
        for q in [rat(2, 3), rat(-5, 7), rat(3, 2)] {
            let p = RationalPoint::new(q).unwrap();
            for s in [1i64, 2] {
                let base = PochArgument::pos(s, s);
                for n in 0..=8i64 {
                    for k in 0..=n {
                        let num = pochhammer(&p, base, n as usize);
                        let den = pochhammer(&p, base, (n - k) as usize)
                            * pochhammer(&p, base, k as usize);
                        assert_eq!(q_binomial(&p, n, k, s), p.div(&num, &den).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn table_matches_single_values() {
        let r = CyclotomicRing::new(9).unwrap();
        for s in [1i64, 2] {
            let t = QBinomialTable::new(&r, 10, s);
            for n in 0..=10i64 {
                for k in -1..=n + 1 {
                    assert_eq!(*t.get(n, k), q_binomial(&r, n, k, s), "[{n} {k}] base q^{s}");
                }
            }
        }
    }

    #[test]
    fn defined_where_the_quotient_is_zero_over_zero() {
        // At q = i, (q)_4 = 0 in numerator and denominator of [5 4], but the
        // Gaussian polynomial evaluates to 1 + q + q^2 + q^3 + q^4 = 1.
        let r4 = CyclotomicRing::new(4).unwrap();
        assert_eq!(q_binomial(&r4, 5, 4, 1), r4.one());
    }
}
