//! Nineteen closed-form values of `j` on the boundary of the fundamental
//! domain and on the imaginary axis, in ascending order.
//!
//! The values are kept as radical recipes and evaluated on demand. Several of
//! them are differences of nearly equal radicals (the smallest, `A ≈ 7.5e−3`,
//! comes from two terms near 67), so evaluation works with exact elements of
//! Q(√2, √3) and only rounds once the cancellation has happened.

use std::f64::consts::SQRT_2;
use std::fmt;

use crate::forward::UpperHalfPoint;
use crate::surd::Surd;

const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// A closed-form expression for one table value.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm(Recipe);

#[derive(Debug, Clone, PartialEq)]
enum Recipe {
    Zero,
    /// Surd with its notation.
    Plain(Surd, &'static str),
    /// Cube of a surd; the notation covers the whole expression.
    Cube(Surd, &'static str),
    /// `F4(A) = ((4/3)(1 − 2A²)² − 1)³ / ((1 − 2A²)² − 1)` with
    /// `A = base ± coeff·√radicand`.
    Quartic {
        base: Surd,
        coeff: i128,
        radicand: Surd,
        negative: bool,
    },
    /// `F12(B) = (12B² − 1)³ / (9B² − 1)` with
    /// `B = 555 ± 16(20√3 ± (8/√3 ± 5)√(26 ± 15√3))`.
    Duodecic {
        outer: i8,
        middle: i8,
        inner: i8,
    },
}

fn sign_char(s: i8) -> char {
    if s > 0 {
        '+'
    } else {
        '−'
    }
}

/// `(3√6 ± 5√2)/2`, the positive square root of `26 ± 15√3`.
fn duodecic_root(inner: i8) -> Surd {
    Surd::new(0, 5 * i128::from(inner), 0, 3, 2)
}

fn duodecic_radicand(inner: i8) -> Surd {
    Surd::new(26, 0, 15 * i128::from(inner), 0, 1)
}

fn duodecic_b(outer: i8, middle: i8, inner: i8) -> Surd {
    let eight_over_sqrt3 = Surd::new(0, 0, 8, 0, 3);
    let factor = eight_over_sqrt3 + Surd::int(5 * i128::from(inner));
    let root = duodecic_root(inner);
    debug_assert_eq!(root * root, duodecic_radicand(inner));
    let bracket = 20 * Surd::sqrt3() + i128::from(middle) * factor * root;
    Surd::int(555) + i128::from(16 * outer) * bracket
}

impl ClosedForm {
    fn quartic_a(big: bool, negative: bool) -> Self {
        let (base, coeff, radicand) = if big {
            // 33 + 24√2 ∓ 4√(140 + 99√2)
            (Surd::new(33, 24, 0, 0, 1), 4, Surd::new(140, 99, 0, 0, 1))
        } else {
            // 5 + 4√2 ∓ 2√(2(7 + 5√2))
            (Surd::new(5, 4, 0, 0, 1), 2, Surd::new(14, 10, 0, 0, 1))
        };
        Self(Recipe::Quartic {
            base,
            coeff,
            radicand,
            negative,
        })
    }

    fn duodecic(outer: i8, middle: i8, inner: i8) -> Self {
        Self(Recipe::Duodecic {
            outer,
            middle,
            inner,
        })
    }

    /// `(181 ± 19(3/√2)³)³`
    fn cube_181(sign: i128) -> Self {
        let t = Surd::new(0, 3, 0, 0, 2);
        let text = if sign < 0 {
            "(181 − 19(3/√2)³)³"
        } else {
            "(181 + 19(3/√2)³)³"
        };
        Self(Recipe::Cube(
            Surd::int(181) + (19 * sign) * (t * t * t),
            text,
        ))
    }

    /// `(5(19 ± 13√2)/6)³`
    fn cube_19(sign: i128) -> Self {
        let text = if sign < 0 {
            "(5(19 − 13√2)/6)³"
        } else {
            "(5(19 + 13√2)/6)³"
        };
        Self(Recipe::Cube(Surd::new(95, 65 * sign, 0, 0, 6), text))
    }

    /// `375(35010 ± 20213√3)/16`
    fn plain_35010(sign: i128) -> Self {
        let text = if sign < 0 {
            "375(35010 − 20213√3)/16"
        } else {
            "375(35010 + 20213√3)/16"
        };
        Self(Recipe::Plain(
            Surd::new(375 * 35010, 0, 375 * 20213 * sign, 0, 16),
            text,
        ))
    }

    /// Binary64 value of the expression.
    pub fn evaluate(&self) -> f64 {
        match &self.0 {
            Recipe::Zero => 0.0,
            Recipe::Plain(s, _) => s.value(),
            Recipe::Cube(s, _) => s.value().powi(3),
            Recipe::Quartic {
                base,
                coeff,
                radicand,
                negative,
            } => {
                let head = base.value();
                let tail = *coeff as f64 * radicand.value().sqrt();
                debug_assert!(head > 0.0 && tail > 0.0);
                let a = if *negative {
                    // (head − tail)(head + tail) = base² − coeff²·radicand, exactly.
                    let product = *base * *base - (coeff * coeff) * *radicand;
                    product.value() / (head + tail)
                } else {
                    head + tail
                };
                let a2 = a * a;
                let y = 1.0 - 2.0 * a2;
                // (1 − 2A²)² − 1 = 4A²(A² − 1)
                (4.0 / 3.0 * y * y - 1.0).powi(3) / (4.0 * a2 * (a2 - 1.0))
            }
            Recipe::Duodecic {
                outer,
                middle,
                inner,
            } => {
                let b = duodecic_b(*outer, *middle, *inner);
                let b2 = b * b;
                let num = 12 * b2 - Surd::int(1);
                let den = 9 * b2 - Surd::int(1);
                num.value().powi(3) / den.value()
            }
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Recipe::Zero => write!(f, "0"),
            Recipe::Plain(_, text) | Recipe::Cube(_, text) => f.write_str(text),
            Recipe::Quartic {
                coeff, negative, ..
            } => {
                let a = match (*coeff, *negative) {
                    (4, true) => "33 + 24√2 − 4√(140 + 99√2)",
                    (4, false) => "33 + 24√2 + 4√(140 + 99√2)",
                    (_, true) => "5 + 4√2 − 2√(2(7 + 5√2))",
                    (_, false) => "5 + 4√2 + 2√(2(7 + 5√2))",
                };
                write!(f, "((4/3)(1 − 2A²)² − 1)³ / ((1 − 2A²)² − 1), A = {a}")
            }
            Recipe::Duodecic {
                outer,
                middle,
                inner,
            } => {
                let (o, m, i) = (sign_char(*outer), sign_char(*middle), sign_char(*inner));
                write!(
                    f,
                    "(12B² − 1)³ / (9B² − 1), B = 555 {o} 16(20√3 {m} (8/√3 {i} 5)√(26 {i} 15√3))"
                )
            }
        }
    }
}

/// One row of the table.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialValueEntry {
    pub label: String,
    pub tau: UpperHalfPoint,
    /// `τ` in radical notation, e.g. `1/2 + 2√−1`.
    pub tau_descriptor: String,
    /// `closed_form` evaluated in binary64.
    pub value: f64,
    /// Position in the ascending chain, 1..=19.
    pub order_index: usize,
    pub closed_form: ClosedForm,
}

/// All 19 rows in ascending order of `j`.
pub fn table() -> Vec<SpecialValueEntry> {
    let rows: [(&str, f64, f64, ClosedForm); 19] = [
        ("1/2 + 2√−1", 0.5, 2.0, ClosedForm::quartic_a(true, true)),
        ("1/2 + √−3", 0.5, SQRT_3, ClosedForm::duodecic(1, -1, 1)),
        ("1/2 + √−2", 0.5, SQRT_2, ClosedForm::quartic_a(false, true)),
        ("1/2 + √−1", 0.5, 1.0, ClosedForm::cube_181(-1)),
        ("(1 + √−3)/2", 0.5, SQRT_3 / 2.0, ClosedForm(Recipe::Zero)),
        (
            "(1 + 2√−2)/3",
            1.0 / 3.0,
            2.0 * SQRT_2 / 3.0,
            ClosedForm::cube_19(-1),
        ),
        (
            "(1 + 4√−3)/7",
            1.0 / 7.0,
            4.0 * SQRT_3 / 7.0,
            ClosedForm::duodecic(-1, -1, -1),
        ),
        (
            "√−1",
            0.0,
            1.0,
            ClosedForm(Recipe::Plain(Surd::int(1), "1")),
        ),
        ("2/√−3", 0.0, 2.0 / SQRT_3, ClosedForm::plain_35010(-1)),
        (
            "√−2",
            0.0,
            SQRT_2,
            ClosedForm(Recipe::Cube(Surd::ratio(5, 3), "(5/3)³")),
        ),
        (
            "√−3",
            0.0,
            SQRT_3,
            ClosedForm(Recipe::Plain(Surd::ratio(125, 4), "125/4")),
        ),
        (
            "2√−1",
            0.0,
            2.0,
            ClosedForm(Recipe::Cube(Surd::ratio(11, 2), "(11/2)³")),
        ),
        ("4/√−3", 0.0, 4.0 / SQRT_3, ClosedForm::duodecic(-1, 1, -1)),
        ("2√−2", 0.0, 2.0 * SQRT_2, ClosedForm::cube_19(1)),
        ("2√−3", 0.0, 2.0 * SQRT_3, ClosedForm::plain_35010(1)),
        ("4√−1", 0.0, 4.0, ClosedForm::cube_181(1)),
        (
            "4√−2",
            0.0,
            4.0 * SQRT_2,
            ClosedForm::quartic_a(false, false),
        ),
        ("4√−3", 0.0, 4.0 * SQRT_3, ClosedForm::duodecic(1, 1, 1)),
        ("8√−1", 0.0, 8.0, ClosedForm::quartic_a(true, false)),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(k, (descriptor, re, im, closed_form))| SpecialValueEntry {
            label: format!("j({descriptor})"),
            tau: UpperHalfPoint::new(re, im).expect("table points lie in the upper half-plane"),
            tau_descriptor: descriptor.to_string(),
            value: closed_form.evaluate(),
            order_index: k + 1,
            closed_form,
        })
        .collect()
}

/// Recompute the entry's value from its closed form.
pub fn evaluate_entry(e: &SpecialValueEntry) -> f64 {
    e.closed_form.evaluate()
}

/// Whether consecutive rows strictly increase in both `order_index` and value.
pub fn check_ascending(entries: &[SpecialValueEntry]) -> bool {
    entries
        .windows(2)
        .all(|w| w[0].order_index < w[1].order_index && w[0].value < w[1].value)
}
