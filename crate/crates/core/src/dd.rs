//! Double-double helpers built on error-free transformations.

/// `a + b = s + e` exactly.
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// `a · b = p + e` exactly (barring underflow).
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct DoubleDouble {
    pub(crate) hi: f64,
    pub(crate) lo: f64,
}

impl DoubleDouble {
    pub(crate) const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    pub(crate) fn normalize(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Self {
            hi: s,
            lo: lo - (s - hi),
        }
    }

    pub(crate) fn product(a: f64, b: f64) -> Self {
        let (hi, lo) = two_prod(a, b);
        Self { hi, lo }
    }

    pub(crate) fn sqrt_of_int(r: f64) -> Self {
        let hi = r.sqrt();
        // r − hi² is exact under fma; one Newton step gives the tail.
        let lo = (-hi).mul_add(hi, r) / (2.0 * hi);
        Self { hi, lo }
    }

    pub(crate) fn add(self, other: Self) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        Self::normalize(s, e + self.lo + other.lo)
    }

    pub(crate) fn sub(self, other: Self) -> Self {
        self.add(Self {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    pub(crate) fn scale(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        Self::normalize(p, e + self.lo * x)
    }

    pub(crate) fn value(self) -> f64 {
        self.hi + self.lo
    }
}
