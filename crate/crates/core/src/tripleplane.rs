//! Numerical invariants of a general triple plane S → P² from its Tschirnhaus
//! bundle: Miranda's formulas, the branch-curve parameterization (b, c), the
//! decomposable case O(−m)⊕O(−n), and the admissible range of the cusp count.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Full numeric record of a triple plane. `b1`, `b2` are the Chern numbers of
/// the Tschirnhaus bundle; `b = −2b₁` is the branch degree and `c = 3b₂` the cusp count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TriplePlaneData {
    pub b1: i64,
    pub b2: i64,
    pub b: i64,
    pub c: i64,
    /// Sectional genus of (S, H_S), from b = 2g + 4.
    pub g: i64,
    pub pg: i64,
    pub chi: i64,
    pub ksq: i64,
    pub euler: i64,
}

/// Miranda's formulas: K² = 27 + 12b₁ + 2b₁² − 3b₂ and e = 9 + 6b₁ + 4b₁² − 9b₂.
pub fn miranda(b1: i64, b2: i64) -> (i64, i64) {
    let ksq = 27 + 12 * b1 + 2 * b1 * b1 - 3 * b2;
    let euler = 9 + 6 * b1 + 4 * b1 * b1 - 9 * b2;
    (ksq, euler)
}

/// Invariants from branch degree `b` and cusp count `c`.
pub fn branch_invariants(b: i64, c: i64) -> Result<TriplePlaneData> {
    if b <= 0 || b % 2 != 0 {
        return Err(Error::Integrality(format!("branch degree b = {b} must be positive and even")));
    }
    if c < 0 {
        return Err(Error::Precondition(format!("cusp count c = {c} is negative")));
    }
    if c % 3 != 0 {
        return Err(Error::Integrality(format!("c = {c} is not divisible by 3, p_g is not integral")));
    }
    let pg = Rational::new(b * (b - 6), 8) + Rational::from_int(2) - Rational::new(c, 3);
    let pg = pg
        .to_integer()
        .ok_or_else(|| Error::Integrality(format!("p_g = {pg} for (b, c) = ({b}, {c})")))?;
    Ok(TriplePlaneData {
        b1: -b / 2,
        b2: c / 3,
        b,
        c,
        g: (b - 4) / 2,
        pg,
        chi: 1 + pg,
        ksq: 27 - 6 * b + b * b / 2 - c,
        euler: 9 - 3 * b + b * b - 3 * c,
    })
}

impl TriplePlaneData {
    /// From the Tschirnhaus Chern numbers; requires b₁ < 0 and b₂ ≥ 0.
    pub fn from_tschirnhaus(b1: i64, b2: i64) -> Result<Self> {
        if b1 >= 0 {
            return Err(Error::Precondition(format!("b1 = {b1} must be negative")));
        }
        branch_invariants(-2 * b1, 3 * b2)
    }

    /// R_S² = (K_S + 3H_S)² = K_S² + 6(2g − 2) + 9.
    pub fn ramification_square(&self) -> i64 {
        self.ksq + 6 * (self.b - 6) + 9
    }

    /// 2e(S) − K_S², which equals 3(s − 1) when S blows down to P² in s points.
    pub fn two_euler_minus_ksq(&self) -> i64 {
        2 * self.euler - self.ksq
    }
}

/// Invariants for a split Tschirnhaus bundle O(−m) ⊕ O(−n), from the closed forms in m, n.
pub fn decomposable_invariants(m: i64, n: i64) -> Result<TriplePlaneData> {
    if m < 1 || n < 1 {
        return Err(Error::Precondition(format!("(m, n) = ({m}, {n}) must be positive")));
    }
    let p = m + n;
    let pg_twice = m * m + n * n - 3 * m - 3 * n;
    debug_assert!(pg_twice % 2 == 0);
    let pg = pg_twice / 2 + 2;
    let data = TriplePlaneData {
        b1: -p,
        b2: m * n,
        b: 2 * p,
        c: 3 * m * n,
        g: p - 2,
        pg,
        chi: 1 + pg,
        ksq: 2 * (p - 3) * (p - 3) - 3 * (m * n - 3),
        euler: 4 * p * p - 6 * p - 9 * (m * n - 1),
    };
    let via_branch = branch_invariants(data.b, data.c)?;
    if via_branch != data {
        return Err(Error::Precondition(format!(
            "decomposable formulas disagree with branch formulas at ({m}, {n})"
        )));
    }
    Ok(data)
}

/// Integral points of the circle m² + n² − 3m − 3n + 4 = 0 (where p_g = 0 for a
/// split Tschirnhaus bundle).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaPoints {
    pub points: BTreeSet<(i64, i64)>,
    /// Closed box searched: every coordinate lies in `[lo, hi]`.
    pub search_box: (i64, i64),
    /// Checked: outside the box (2m−3)² + (2n−3)² > 2, so the circle has no points there.
    pub exhaustive: bool,
}

pub fn on_gamma(m: i64, n: i64) -> bool {
    m * m + n * n - 3 * m - 3 * n + 4 == 0
}

pub fn gamma_integral_points() -> GammaPoints {
    // 4·(m² + n² − 3m − 3n + 4) = (2m−3)² + (2n−3)² − 2: centre (3/2, 3/2), radius² = 1/2.
    // The box |m − 3/2| ≤ 1 contains the disc of radius 1/√2.
    let (lo, hi) = (1, 2);
    let points = (lo..=hi)
        .flat_map(|m| (lo..=hi).map(move |n| (m, n)))
        .filter(|&(m, n)| on_gamma(m, n))
        .collect();
    // Just outside the box |2m − 3| ≥ 3, so (2m − 3)² ≥ 9 > 2 = (2m−3)² + (2n−3)² on Γ.
    let outside = [lo - 1, hi + 1].iter().all(|&m| (2 * m - 3) * (2 * m - 3) > 2);
    GammaPoints { points, search_box: (lo, hi), exhaustive: outside }
}

/// Bounds on the cusp count c of a general triple plane arising as a hyperplane
/// section of a triple solid that is a scroll over a surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CuspBounds {
    pub b: i64,
    pub s: i64,
    /// b²/6 < c.
    pub lower_strict: Rational,
    /// b(5b−6)/16 − s/2, from 3e − K² ≥ 4s.
    pub upper_bmy: Rational,
    /// (3/8)b(b−6) + 6, from p_g ≥ 0.
    pub upper_pg: Rational,
    /// min of the two.
    pub upper: Rational,
    /// (3/10)b² − (3/5)(s+3), valid for rational S whose minimal reduction is not P².
    pub upper_rational_refined: Rational,
    pub refined_applicable: bool,
}

impl CuspBounds {
    /// The upper bound actually in force for this instance.
    pub fn effective_upper(&self) -> Rational {
        if self.refined_applicable {
            self.upper.min(self.upper_rational_refined)
        } else {
            self.upper
        }
    }

    pub fn admits(&self, c: i64) -> bool {
        let c = Rational::from_int(c);
        self.lower_strict < c && c <= self.effective_upper()
    }

    pub fn upper_is_tight(&self, c: i64) -> bool {
        Rational::from_int(c) == self.effective_upper()
    }
}

pub fn cusp_bounds(b: i64, s: i64, rational_non_p2: bool) -> CuspBounds {
    let r = Rational::new;
    let lower_strict = r(b * b, 6);
    let upper_bmy = r(b * (5 * b - 6), 16) - r(s, 2);
    let upper_pg = r(3 * b * (b - 6), 8) + r(6, 1);
    let upper_rational_refined = r(3 * b * b, 10) - r(3 * (s + 3), 5);
    CuspBounds {
        b,
        s,
        lower_strict,
        upper_bmy,
        upper_pg,
        upper: upper_bmy.min(upper_pg),
        upper_rational_refined,
        refined_applicable: rational_non_p2,
    }
}
