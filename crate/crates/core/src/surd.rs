//! Exact arithmetic in Q(√2, √3) and cancellation-free evaluation.
//!
//! An element is `(p + q√2 + r√3 + s√6) / den` with integer coefficients.
//! Products and sums are exact; [`Surd::value`] sums the four terms in
//! double-double arithmetic, so a value that is a tiny difference of large
//! terms still comes out with full binary64 accuracy.

use std::ops::{Add, Mul, Neg, Sub};

use crate::dd::{two_prod, DoubleDouble};

#[cfg(test)]
const ROOTS: [f64; 4] = [
    1.0,
    std::f64::consts::SQRT_2,
    1.732_050_807_568_877_2,
    2.449_489_742_783_178,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Surd {
    /// Coefficients of 1, √2, √3, √6.
    coef: [i128; 4],
    den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Surd {
    pub(crate) const fn int(n: i128) -> Self {
        Self {
            coef: [n, 0, 0, 0],
            den: 1,
        }
    }

    /// `(p + q√2 + r√3 + s√6) / den`.
    pub(crate) fn new(p: i128, q: i128, r: i128, s: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        Self {
            coef: [p, q, r, s],
            den,
        }
        .normalized()
    }

    #[cfg(test)]
    pub(crate) fn sqrt2() -> Self {
        Self::new(0, 1, 0, 0, 1)
    }

    pub(crate) fn sqrt3() -> Self {
        Self::new(0, 0, 1, 0, 1)
    }

    #[cfg(test)]
    pub(crate) fn sqrt6() -> Self {
        Self::new(0, 0, 0, 1, 1)
    }

    pub(crate) fn ratio(num: i128, den: i128) -> Self {
        Self::new(num, 0, 0, 0, den)
    }

    fn normalized(mut self) -> Self {
        if self.den < 0 {
            self.den = -self.den;
            self.coef = self.coef.map(|c| -c);
        }
        let g = self.coef.iter().fold(self.den, |g, &c| gcd(g, c));
        if g > 1 {
            self.den /= g;
            self.coef = self.coef.map(|c| c / g);
        }
        self
    }

    /// Term-by-term binary64 evaluation.
    #[cfg(test)]
    pub(crate) fn naive(&self) -> f64 {
        let sum: f64 = self
            .coef
            .iter()
            .zip(ROOTS)
            .map(|(&c, root)| c as f64 * root)
            .sum();
        sum / self.den as f64
    }

    /// Binary64 value, correct to a few ulps irrespective of cancellation
    /// between the terms (up to a condition number of about 1e15).
    pub(crate) fn value(&self) -> f64 {
        let mut acc = DoubleDouble::ZERO;
        for (k, &c) in self.coef.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let cf = exact_f64(c);
            let root = DoubleDouble::sqrt_of_int(RADICANDS[k]);
            let (hi, lo) = two_prod(cf, root.hi);
            acc = acc.add(DoubleDouble::normalize(hi, lo + cf * root.lo));
        }
        let den = exact_f64(self.den);
        acc.hi / den + acc.lo / den
    }
}

const RADICANDS: [f64; 4] = [1.0, 2.0, 3.0, 6.0];

fn exact_f64(n: i128) -> f64 {
    let f = n as f64;
    assert!(
        f as i128 == n,
        "surd coefficient {n} is not exactly representable"
    );
    f
}

impl Add for Surd {
    type Output = Surd;

    fn add(self, rhs: Surd) -> Surd {
        let coef = std::array::from_fn(|k| {
            self.coef[k]
                .checked_mul(rhs.den)
                .and_then(|a| a.checked_add(rhs.coef[k].checked_mul(self.den)?))
                .expect("surd coefficient overflow")
        });
        Surd {
            coef,
            den: self
                .den
                .checked_mul(rhs.den)
                .expect("surd denominator overflow"),
        }
        .normalized()
    }
}

impl Neg for Surd {
    type Output = Surd;

    fn neg(self) -> Surd {
        Surd {
            coef: self.coef.map(|c| -c),
            den: self.den,
        }
    }
}

impl Sub for Surd {
    type Output = Surd;

    fn sub(self, rhs: Surd) -> Surd {
        self + (-rhs)
    }
}

impl Mul for Surd {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        // Basis products e_i·e_j = factor · e_k over (1, √2, √3, √6).
        const TABLE: [[(i128, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (2, 0), (1, 3), (2, 2)],
            [(1, 2), (1, 3), (3, 0), (3, 1)],
            [(1, 3), (2, 2), (3, 1), (6, 0)],
        ];
        let mut coef = [0i128; 4];
        for (i, &a) in self.coef.iter().enumerate() {
            for (j, &b) in rhs.coef.iter().enumerate() {
                let (factor, k) = TABLE[i][j];
                let term = a
                    .checked_mul(b)
                    .and_then(|t| t.checked_mul(factor))
                    .expect("surd coefficient overflow");
                coef[k] = coef[k]
                    .checked_add(term)
                    .expect("surd coefficient overflow");
            }
        }
        Surd {
            coef,
            den: self
                .den
                .checked_mul(rhs.den)
                .expect("surd denominator overflow"),
        }
        .normalized()
    }
}

impl Mul<Surd> for i128 {
    type Output = Surd;

    fn mul(self, rhs: Surd) -> Surd {
        Surd::int(self) * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic() {
        let s2 = Surd::sqrt2();
        let s3 = Surd::sqrt3();
        assert_eq!(s2 * s2, Surd::int(2));
        assert_eq!(s2 * s3, Surd::sqrt6());
        assert_eq!(Surd::sqrt6() * Surd::sqrt6(), Surd::int(6));
        assert_eq!(Surd::ratio(2, 4), Surd::ratio(-1, -2));
        assert_eq!(s3 - s3, Surd::int(0));
    }

    #[test]
    fn stable_value_beats_naive() {
        // 35010 − 20213√3 = 3993 / (35010 + 20213√3)
        let x = Surd::new(35010, 0, -20213, 0, 1);
        let exact = 3993.0 / (35010.0 + 20213.0 * 3f64.sqrt());
        assert!((x.value() / exact - 1.0).abs() < 4.0 * f64::EPSILON);
        // 19 − 13√2 = 23 / (19 + 13√2)
        let y = Surd::new(19, -13, 0, 0, 1);
        assert!(
            (y.value() / (23.0 / (19.0 + 13.0 * 2f64.sqrt())) - 1.0).abs() < 4.0 * f64::EPSILON
        );
        // 3B + 1 for B = 555 + 320√3 − 392√2 − (680/3)√6: ≈ 6.1e-4 from terms of
        // size ~1700. Reference from a 60-digit evaluation.
        let b = Surd::new(1666, -1176, 960, -680, 1);
        let want = 6.008_228_013_176_214e-4;
        assert!((b.value() / want - 1.0).abs() < 1e-14, "{}", b.value());
        assert!((b.naive() / want - 1.0).abs() > 1e-14);
        let z = Surd::new(3, 2, 1, 1, 7);
        assert!((z.value() - z.naive()).abs() < 1e-15);
    }
}
