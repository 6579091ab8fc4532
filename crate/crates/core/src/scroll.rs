//! Projective bundles and polarized varieties: degrees of scrolls over P¹,
//! canonical and ramification classes of P(E) over a surface, the conic
//! fibration attached to the ramification divisor, sectional genus and Δ-genus.

use serde::Serialize;

use crate::bundles::{rational_multiple, RankTwoBundle};
use crate::error::{Error, Result};
use crate::intersection::{DivisorClass, SurfaceModel};

/// P(O ⊕ O(α₁) ⊕ … ⊕ O(α_{n−1})) over P¹, polarized by ξ + bF.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollOverCurve {
    alphas: Vec<i64>,
    b: i64,
}

impl ScrollOverCurve {
    /// `alphas` must be non-decreasing and non-negative; `b ≥ 1` is the ampleness condition.
    pub fn new(alphas: Vec<i64>, b: i64) -> Result<Self> {
        if alphas.iter().any(|&a| a < 0) || alphas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Precondition(format!("splitting {alphas:?} is not normalized")));
        }
        if b < 1 {
            return Err(Error::Precondition(format!("twist b = {b} is not ample")));
        }
        Ok(ScrollOverCurve { alphas, b })
    }

    pub fn dim(&self) -> i64 {
        self.alphas.len() as i64 + 1
    }

    pub fn alpha(&self) -> i64 {
        self.alphas.iter().sum()
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// (Lⁿ, h⁰(L)) = (α + n·b, n + d).
    pub fn degree_and_sections(&self) -> (i64, i64) {
        let n = self.dim();
        let d = self.alpha() + n * self.b;
        (d, n + d)
    }

    pub fn polarized(&self) -> PolarizedData {
        let (degree, h0) = self.degree_and_sections();
        PolarizedData { dim: self.dim(), degree, h0 }
    }
}

pub fn degree_over_p1(s: &ScrollOverCurve) -> (i64, i64) {
    s.degree_and_sections()
}

/// Y = P_X(E) over a surface, tautological class H.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollOverSurface {
    bundle: RankTwoBundle,
    /// E ample and spanned is a hypothesis carried along, never checked.
    pub ample_and_spanned: bool,
}

/// A class on P_X(E) written as `h_coeff·H + π*(pullback)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollClass {
    pub h_coeff: i64,
    pub pullback: DivisorClass,
}

impl ScrollClass {
    pub fn checked_sub(&self, other: &ScrollClass) -> Result<ScrollClass> {
        Ok(ScrollClass {
            h_coeff: self.h_coeff - other.h_coeff,
            pullback: self.pullback.checked_add(&other.pullback.scaled(-1))?,
        })
    }

    pub fn is_multiple_of_h(&self) -> bool {
        self.pullback.is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConicFibration {
    /// c₁ of F = π_*R = S²E ⊗ (K_X + det E).
    pub c1_f: DivisorClass,
    /// B with Y ∈ |2ξ + π̃*B| inside P(F).
    pub boundary: DivisorClass,
}

impl ScrollOverSurface {
    pub fn new(bundle: RankTwoBundle) -> Self {
        ScrollOverSurface { bundle, ample_and_spanned: true }
    }

    pub fn bundle(&self) -> &RankTwoBundle {
        &self.bundle
    }

    pub fn base(&self) -> &SurfaceModel {
        self.bundle.base()
    }

    /// K_X + det E.
    pub fn adjoint(&self) -> Result<DivisorClass> {
        self.base().canonical_class()?.checked_add(self.bundle.c1())
    }

    pub fn tautological(&self) -> ScrollClass {
        ScrollClass { h_coeff: 1, pullback: self.base().zero() }
    }

    /// K_Y = −2H + π*(K_X + det E).
    pub fn canonical(&self) -> Result<ScrollClass> {
        Ok(ScrollClass { h_coeff: -2, pullback: self.adjoint()? })
    }

    /// Ramification divisor of a triple cover Y → P³: R = K_Y + 4H = 2H + π*(K_X + det E).
    pub fn ramification(&self) -> Result<ScrollClass> {
        Ok(ScrollClass { h_coeff: 2, pullback: self.adjoint()? })
    }

    /// H³ = c₁(E)² − c₂(E) (Chern–Wu relation for rank 2).
    pub fn h_cube(&self) -> i64 {
        self.bundle.c1_squared() - self.bundle.c2()
    }

    pub fn conic_fibration(&self) -> Result<ConicFibration> {
        let c1_f = self.bundle.sym2_twisted_c1(&self.adjoint()?)?.c1;
        // empty discriminant: 2c₁(F) + 3B = 0
        let boundary = rational_multiple(&c1_f, -2, 3)?;
        debug_assert!(c1_f.scaled(2).checked_add(&boundary.scaled(3)).map(|d| d.is_zero()).unwrap_or(false));
        Ok(ConicFibration { c1_f, boundary })
    }
}

pub fn canonical_of_scroll(s: &ScrollOverSurface) -> Result<ScrollClass> {
    s.canonical()
}

pub fn ramification_of_triple_solid(s: &ScrollOverSurface) -> Result<ScrollClass> {
    s.ramification()
}

pub fn conic_fibration_data(s: &ScrollOverSurface) -> Result<ConicFibration> {
    s.conic_fibration()
}

/// g(X, L) = 1 + ½(K + L)·L for a polarized surface.
pub fn sectional_genus(model: &SurfaceModel, l: &DivisorClass) -> Result<i64> {
    let k = model.canonical_class()?;
    let adj = model.intersect(&k.checked_add(l)?, l)?;
    if adj % 2 != 0 {
        return Err(Error::NonIntegralGenus(adj));
    }
    Ok(1 + adj / 2)
}

/// Numbers of a polarized variety needed for Fujita's Δ-genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolarizedData {
    pub dim: i64,
    pub degree: i64,
    pub h0: i64,
}

impl PolarizedData {
    pub fn delta_genus(&self) -> i64 {
        self.dim + self.degree - self.h0
    }
}

pub fn delta_genus(p: &PolarizedData) -> i64 {
    p.delta_genus()
}
