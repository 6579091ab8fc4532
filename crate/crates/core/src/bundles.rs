//! Chern data of rank-2 bundles on the model surfaces.
//!
//! A bundle is its Chern data plus whatever structural facts are known about it
//! (summands of a decomposition, generic splitting type). There is no sheaf model.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intersection::{DivisorClass, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankTwoBundle {
    base: SurfaceModel,
    c1: DivisorClass,
    c2: i64,
    summands: Option<(DivisorClass, DivisorClass)>,
    splitting_type: Option<(i64, i64)>,
}

impl RankTwoBundle {
    pub fn new(base: &SurfaceModel, c1: DivisorClass, c2: i64) -> Result<Self> {
        // ownership check through the form
        base.intersect(&c1, &c1)?;
        Ok(RankTwoBundle { base: base.clone(), c1, c2, summands: None, splitting_type: None })
    }

    /// `M ⊕ N` (or any extension of `N` by `M`): c₁ = M+N, c₂ = M·N.
    pub fn decomposable(base: &SurfaceModel, m: DivisorClass, n: DivisorClass) -> Result<Self> {
        let c1 = m.checked_add(&n)?;
        let c2 = base.intersect(&m, &n)?;
        Ok(RankTwoBundle { base: base.clone(), c1, c2, summands: Some((m, n)), splitting_type: None })
    }

    /// Cokernel `E` of `0 → O(line) → O^{⊕3} → E → 0`. The Whitney formula gives
    /// c(E) = (1 + line)⁻¹, so c₁ = −line and c₂ = line².
    pub fn cokernel_of_line(base: &SurfaceModel, line: &DivisorClass) -> Result<Self> {
        let c2 = base.intersect(line, line)?;
        RankTwoBundle::new(base, line.scaled(-1), c2)
    }

    pub fn with_splitting_type(mut self, a1: i64, a2: i64) -> Self {
        self.splitting_type = Some((a1.max(a2), a1.min(a2)));
        self
    }

    pub fn base(&self) -> &SurfaceModel {
        &self.base
    }

    pub fn c1(&self) -> &DivisorClass {
        &self.c1
    }

    pub fn c2(&self) -> i64 {
        self.c2
    }

    pub fn summands(&self) -> Option<&(DivisorClass, DivisorClass)> {
        self.summands.as_ref()
    }

    pub fn splitting_type(&self) -> Option<(i64, i64)> {
        self.splitting_type
    }

    pub fn c1_squared(&self) -> i64 {
        self.base.intersect(&self.c1, &self.c1).expect("c1 checked at construction")
    }

    /// E ⊗ O(D): c₁' = c₁ + 2D, c₂' = c₂ + c₁·D + D².
    pub fn twist(&self, d: &DivisorClass) -> Result<RankTwoBundle> {
        let c1d = self.base.intersect(&self.c1, d)?;
        let dd = self.base.intersect(d, d)?;
        let summands = match &self.summands {
            Some((m, n)) => Some((m.checked_add(d)?, n.checked_add(d)?)),
            None => None,
        };
        // Splitting type on a line only shifts on P², where D·line is D's coefficient.
        let splitting_type = match (self.splitting_type, self.base.rank()) {
            (Some((a1, a2)), 1) => Some((a1 + d.coeffs()[0], a2 + d.coeffs()[0])),
            _ => None,
        };
        Ok(RankTwoBundle {
            base: self.base.clone(),
            c1: self.c1.checked_add(&d.scaled(2))?,
            c2: self.c2 + c1d + dd,
            summands,
            splitting_type,
        })
    }

    /// Chern data of S²E ⊗ L (rank 3): c₁ = 3c₁(E) + 3L.
    pub fn sym2_twisted_c1(&self, l: &DivisorClass) -> Result<RankThreeBundleData> {
        let c1 = self.c1.scaled(3).checked_add(&l.scaled(3))?;
        Ok(RankThreeBundleData { base: self.base.clone(), c1 })
    }

    pub fn bogomolov(&self) -> Bogomolov {
        let discriminant = self.c1_squared() - 4 * self.c2;
        let side = match discriminant.signum() {
            -1 => BogomolovSide::Stable,
            0 => BogomolovSide::Boundary,
            _ => BogomolovSide::Unstable,
        };
        Bogomolov { discriminant, side }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankThreeBundleData {
    pub base: SurfaceModel,
    pub c1: DivisorClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BogomolovSide {
    Stable,
    Boundary,
    Unstable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bogomolov {
    pub discriminant: i64,
    pub side: BogomolovSide,
}

pub fn twist(e: &RankTwoBundle, d: &DivisorClass) -> Result<RankTwoBundle> {
    e.twist(d)
}

pub fn sym2_twisted_c1(e: &RankTwoBundle, l: &DivisorClass) -> Result<RankThreeBundleData> {
    e.sym2_twisted_c1(l)
}

pub fn bogomolov(e: &RankTwoBundle) -> Bogomolov {
    e.bogomolov()
}

/// Ample split rank-2 bundles O(a₁)⊕O(a₂) on P¹ with a₁+a₂ = `degree`;
/// ample on P¹ means every summand has positive degree.
pub fn ample_split_rank2_on_p1(degree: i64) -> Vec<(i64, i64)> {
    (1..=degree / 2).map(|a2| (degree - a2, a2)).collect()
}

/// Generic splitting types (a₁ ≥ a₂ ≥ 1) compatible with an ample bundle of
/// first Chern class O(a) on P².
pub fn ample_splitting_types_on_p2(a: i64) -> Vec<(i64, i64)> {
    ample_split_rank2_on_p1(a)
}

/// Exact-division helper for the rational multiples that show up in Chern
/// computations, e.g. B = −(2/3)·c₁(F).
pub fn rational_multiple(d: &DivisorClass, numer: i64, denom: i64) -> Result<DivisorClass> {
    if denom == 0 {
        return Err(Error::Precondition("zero denominator".into()));
    }
    d.scaled(numer).divided(denom)
}
