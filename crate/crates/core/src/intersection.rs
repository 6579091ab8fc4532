//! Numerical divisor lattices on the model surfaces, their canonical classes,
//! and the small intersection rings of P³ and the Grassmannian of lines G(1,3).
//!
//! Classes are numerical: an integer vector in the owning model's fixed basis.
//! Torsion in the Picard group is ignored throughout.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// Identity of a model; every [`DivisorClass`] carries the id of the model it lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ModelId {
    /// P², basis `h`.
    ProjectivePlane,
    /// P¹×P¹ (the smooth quadric), basis `(l1, l2)` with `l1 = O(1,0)`, `l2 = O(0,1)`.
    ProductOfLines,
    /// Geometrically ruled surface over a curve of genus `genus` with invariant `invariant`,
    /// normalized basis `(σ, f)`.
    Ruled { genus: i64, invariant: i64 },
    /// A regular surface known only through its numeric invariants.
    AbstractRegular,
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelId::ProjectivePlane => write!(f, "P2"),
            ModelId::ProductOfLines => write!(f, "P1xP1"),
            ModelId::Ruled { genus: 0, invariant } => write!(f, "F{invariant}"),
            ModelId::Ruled { genus, invariant } => write!(f, "ruled(q={genus},e={invariant})"),
            ModelId::AbstractRegular => write!(f, "regular"),
        }
    }
}

/// A divisor class up to numerical equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DivisorClass {
    model: ModelId,
    coeffs: Vec<i64>,
}

impl DivisorClass {
    /// Builds a class without checking it against a model's rank; use
    /// [`SurfaceModel::class`] for a checked constructor.
    pub fn new(model: ModelId, coeffs: Vec<i64>) -> Self {
        DivisorClass { model, coeffs }
    }

    pub fn zero(model: ModelId, rank: usize) -> Self {
        DivisorClass { model, coeffs: vec![0; rank] }
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.same_model(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(DivisorClass { model: self.model, coeffs })
    }

    pub fn scaled(&self, k: i64) -> DivisorClass {
        DivisorClass {
            model: self.model,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact division of every coefficient by `divisor`.
    pub fn divided(&self, divisor: i64) -> Result<DivisorClass> {
        if divisor == 0 || self.coeffs.iter().any(|c| c % divisor != 0) {
            return Err(Error::Divisibility { what: self.to_string(), divisor });
        }
        Ok(DivisorClass {
            model: self.model,
            coeffs: self.coeffs.iter().map(|c| c / divisor).collect(),
        })
    }

    fn same_model(&self, other: &DivisorClass) -> Result<()> {
        if self.model != other.model {
            return Err(Error::BasisMismatch { expected: self.model, found: other.model });
        }
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::RankMismatch {
                model: self.model,
                rank: self.coeffs.len(),
                found: other.coeffs.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.model)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// Operator forms panic on a model mismatch; `checked_add` is the fallible route.
impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        self.checked_add(rhs).expect("adding classes from different models")
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: DivisorClass) -> DivisorClass {
        &self + &rhs
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        self + &rhs.scaled(-1)
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: DivisorClass) -> DivisorClass {
        &self - &rhs
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        self.scaled(-1)
    }
}

impl Mul<i64> for &DivisorClass {
    type Output = DivisorClass;
    fn mul(self, k: i64) -> DivisorClass {
        self.scaled(k)
    }
}

impl Mul<&DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, d: &DivisorClass) -> DivisorClass {
        d.scaled(self)
    }
}

/// A surface with a fixed basis of its numerical lattice and its numeric invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceModel {
    id: ModelId,
    basis: Vec<String>,
    form: Vec<Vec<i64>>,
    canonical: Option<DivisorClass>,
    pub q: i64,
    pub pg: i64,
    pub ksq: i64,
    pub euler: i64,
}

impl SurfaceModel {
    pub fn projective_plane() -> Self {
        let id = ModelId::ProjectivePlane;
        SurfaceModel {
            id,
            basis: vec!["h".into()],
            form: vec![vec![1]],
            canonical: Some(DivisorClass::new(id, vec![-3])),
            q: 0,
            pg: 0,
            ksq: 9,
            euler: 3,
        }
    }

    pub fn product_of_lines() -> Self {
        let id = ModelId::ProductOfLines;
        SurfaceModel {
            id,
            basis: vec!["l1".into(), "l2".into()],
            form: vec![vec![0, 1], vec![1, 0]],
            canonical: Some(DivisorClass::new(id, vec![-2, -2])),
            q: 0,
            pg: 0,
            ksq: 8,
            euler: 4,
        }
    }

    /// Ruled surface over a curve of genus `genus` with invariant `e`, in the
    /// normalized basis: σ² = −e, σ·f = 1, f² = 0, K = −2σ + (2q−2−e)f.
    pub fn ruled(genus: i64, e: i64) -> Result<Self> {
        if genus < 0 {
            return Err(Error::UnsupportedModel(format!("ruled surface over genus {genus}")));
        }
        // Normalized invariants: e ≥ 0 over P¹, e ≥ −q otherwise.
        if (genus == 0 && e < 0) || e < -genus {
            return Err(Error::UnsupportedModel(format!(
                "ruled surface with q={genus} and e={e}"
            )));
        }
        let id = ModelId::Ruled { genus, invariant: e };
        Ok(SurfaceModel {
            id,
            basis: vec!["sigma".into(), "f".into()],
            form: vec![vec![-e, 1], vec![1, 0]],
            canonical: Some(DivisorClass::new(id, vec![-2, 2 * genus - 2 - e])),
            q: genus,
            pg: 0,
            ksq: 8 * (1 - genus),
            euler: 4 * (1 - genus),
        })
    }

    /// The Hirzebruch surface 𝔽ₑ.
    pub fn hirzebruch(e: i64) -> Result<Self> {
        SurfaceModel::ruled(0, e)
    }

    /// A regular surface carried only by its numbers; it has no lattice, so
    /// `intersect` on it fails.
    pub fn abstract_regular(ksq: i64, euler: i64, pg: i64) -> Self {
        SurfaceModel {
            id: ModelId::AbstractRegular,
            basis: Vec::new(),
            form: Vec::new(),
            canonical: None,
            q: 0,
            pg,
            ksq,
            euler,
        }
    }

    pub fn id(&self) -> ModelId {
        self.id
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn chi(&self) -> i64 {
        1 - self.q + self.pg
    }

    /// Checked constructor for a class on this model.
    pub fn class(&self, coeffs: &[i64]) -> Result<DivisorClass> {
        if self.form.is_empty() {
            return Err(Error::NoIntersectionForm(self.id));
        }
        if coeffs.len() != self.rank() {
            return Err(Error::RankMismatch { model: self.id, rank: self.rank(), found: coeffs.len() });
        }
        Ok(DivisorClass::new(self.id, coeffs.to_vec()))
    }

    /// The `i`-th basis generator.
    pub fn generator(&self, i: usize) -> Result<DivisorClass> {
        let mut coeffs = vec![0; self.rank()];
        *coeffs.get_mut(i).ok_or_else(|| {
            Error::Precondition(format!("{} has no generator {i}", self.id))
        })? = 1;
        self.class(&coeffs)
    }

    pub fn zero(&self) -> DivisorClass {
        DivisorClass::zero(self.id, self.rank())
    }

    fn owns(&self, d: &DivisorClass) -> Result<()> {
        if d.model != self.id {
            return Err(Error::BasisMismatch { expected: self.id, found: d.model });
        }
        if d.coeffs.len() != self.rank() {
            return Err(Error::RankMismatch { model: self.id, rank: self.rank(), found: d.coeffs.len() });
        }
        Ok(())
    }

    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
        if self.form.is_empty() {
            return Err(Error::NoIntersectionForm(self.id));
        }
        self.owns(d1)?;
        self.owns(d2)?;
        let mut total = 0;
        for (i, a) in d1.coeffs.iter().enumerate() {
            for (j, b) in d2.coeffs.iter().enumerate() {
                total += a * self.form[i][j] * b;
            }
        }
        Ok(total)
    }

    pub fn self_intersection(&self, d: &DivisorClass) -> Result<i64> {
        self.intersect(d, d)
    }

    pub fn canonical_class(&self) -> Result<DivisorClass> {
        self.canonical
            .clone()
            .ok_or_else(|| Error::UnsupportedModel(format!("no canonical class stored for {}", self.id)))
    }

    /// Checks symmetry of the form, K² against `ksq`, and Noether's formula
    /// 12χ = K² + e.
    pub fn check_invariants(&self) -> Result<()> {
        for (i, row) in self.form.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if self.form[j][i] != *v {
                    return Err(Error::Precondition(format!("{}: form is not symmetric", self.id)));
                }
            }
        }
        if let Some(k) = &self.canonical {
            let ksq = self.intersect(k, k)?;
            if ksq != self.ksq {
                return Err(Error::Precondition(format!(
                    "{}: K^2 = {ksq} from the form, stored {}",
                    self.id, self.ksq
                )));
            }
        }
        if 12 * self.chi() != self.ksq + self.euler {
            return Err(Error::Precondition(format!("{}: Noether formula fails", self.id)));
        }
        Ok(())
    }

    /// Hodge index inequality (D1·D2)² ≥ D1²·D2², which must hold whenever D1² > 0.
    /// Returns `true` vacuously when D1² ≤ 0.
    pub fn hodge_index_holds(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<bool> {
        let d1sq = self.intersect(d1, d1)?;
        if d1sq <= 0 {
            return Ok(true);
        }
        let mixed = self.intersect(d1, d2)?;
        let d2sq = self.intersect(d2, d2)?;
        Ok(mixed * mixed >= d1sq * d2sq)
    }
}

pub fn intersect(model: &SurfaceModel, d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    model.intersect(d1, d2)
}

pub fn canonical_class(model: &SurfaceModel) -> Result<DivisorClass> {
    model.canonical_class()
}

/// Ambient spaces whose intersection rings are needed only in low codimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AmbientModel {
    /// P³ with hyperplane class `h`; `h³` is the point class.
    ProjectiveSpace3,
    /// G(1,3); codimension-2 basis `Ω(0,3)`, `Ω(1,2)`.
    Grassmannian13,
}

/// A cycle class of fixed codimension, written in the ambient model's basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleClass {
    pub ambient: AmbientModel,
    pub codim: usize,
    pub coeffs: Vec<i64>,
}

impl AmbientModel {
    pub fn dimension(self) -> usize {
        match self {
            AmbientModel::ProjectiveSpace3 => 3,
            AmbientModel::Grassmannian13 => 4,
        }
    }

    pub fn basis_size(self, codim: usize) -> usize {
        match (self, codim) {
            (AmbientModel::Grassmannian13, 2) => 2,
            (m, c) if c <= m.dimension() => 1,
            _ => 0,
        }
    }

    pub fn class(self, codim: usize, coeffs: &[i64]) -> Result<CycleClass> {
        if coeffs.len() != self.basis_size(codim) || codim > self.dimension() {
            return Err(Error::Precondition(format!(
                "{self:?} has basis of size {} in codimension {codim}",
                self.basis_size(codim)
            )));
        }
        Ok(CycleClass { ambient: self, codim, coeffs: coeffs.to_vec() })
    }

    /// Powers of the hyperplane (Plücker) class. On G(1,3): σ₁² = Ω(0,3)+Ω(1,2),
    /// σ₁³ = 2σ₂₁, σ₁⁴ = 2.
    pub fn hyperplane_power(self, k: usize) -> Result<CycleClass> {
        let coeffs: Vec<i64> = match (self, k) {
            (AmbientModel::ProjectiveSpace3, k) if k <= 3 => vec![1],
            (AmbientModel::Grassmannian13, 0 | 1) => vec![1],
            (AmbientModel::Grassmannian13, 2) => vec![1, 1],
            (AmbientModel::Grassmannian13, 3 | 4) => vec![2],
            _ => return Err(Error::Precondition(format!("{self:?} has no classes in codimension {k}"))),
        };
        self.class(k, &coeffs)
    }

    /// Degree of the product of two classes of complementary codimension.
    /// The pairing matrix is the identity in every codimension (Schubert duality).
    pub fn top_product(self, a: &CycleClass, b: &CycleClass) -> Result<i64> {
        if a.ambient != self || b.ambient != self {
            return Err(Error::Precondition("cycle classes from another ambient model".into()));
        }
        if a.codim + b.codim != self.dimension() {
            return Err(Error::Precondition(format!(
                "codimensions {} + {} do not fill dimension {}",
                a.codim,
                b.codim,
                self.dimension()
            )));
        }
        Ok(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x * y).sum())
    }
}

/// Codimension-2 test classes on G(1,3).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SchubertClass {
    Omega03,
    Omega12,
    /// σ₁², the square of the hyperplane class; pairing with it gives the degree.
    HyperplaneSquared,
}

impl SchubertClass {
    fn cycle(self) -> CycleClass {
        let g = AmbientModel::Grassmannian13;
        match self {
            SchubertClass::Omega03 => g.class(2, &[1, 0]),
            SchubertClass::Omega12 => g.class(2, &[0, 1]),
            SchubertClass::HyperplaneSquared => g.hyperplane_power(2),
        }
        .expect("fixed codimension-2 class")
    }
}

/// Intersection of the surface class `α·Ω(0,3) + β·Ω(1,2)` with `other`.
pub fn schubert_surface_product(alpha: i64, beta: i64, other: SchubertClass) -> i64 {
    let g = AmbientModel::Grassmannian13;
    let w = g.class(2, &[alpha, beta]).expect("codimension-2 class");
    g.top_product(&w, &other.cycle()).expect("complementary codimensions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plane_quartic_self_intersection() {
        let p2 = SurfaceModel::projective_plane();
        let d = p2.class(&[4]).unwrap();
        assert_eq!(p2.intersect(&d, &d).unwrap(), 16);
    }

    #[test]
    fn minus_one_section_on_f1() {
        let f1 = SurfaceModel::hirzebruch(1).unwrap();
        let sigma = f1.generator(0).unwrap();
        assert_eq!(f1.intersect(&sigma, &sigma).unwrap(), -1);
    }

    #[test]
    fn elliptic_ruled_adjoint_class() {
        let y = SurfaceModel::ruled(1, -1).unwrap();
        let h = y.class(&[1, 1]).unwrap();
        let m = &h - &y.canonical_class().unwrap();
        assert_eq!(m, y.class(&[3, 0]).unwrap());
        assert_eq!(y.intersect(&m, &m).unwrap(), 9);
    }

    #[test]
    fn canonical_classes() {
        let p2 = SurfaceModel::projective_plane();
        assert_eq!(canonical_class(&p2).unwrap(), p2.class(&[-3]).unwrap());
        let f1 = SurfaceModel::hirzebruch(1).unwrap();
        let k = f1.canonical_class().unwrap();
        assert_eq!(k.coeffs(), &[-2, -3]);
        assert_eq!(f1.intersect(&k, &k).unwrap(), 8);
    }

    #[test]
    fn builtin_models_are_consistent() {
        let mut models = vec![SurfaceModel::projective_plane(), SurfaceModel::product_of_lines()];
        for q in 0..4 {
            for e in -q..6 {
                if q == 0 && e < 0 {
                    continue;
                }
                models.push(SurfaceModel::ruled(q, e).unwrap());
            }
        }
        for m in &models {
            m.check_invariants().unwrap();
            let k = m.canonical_class().unwrap();
            assert_eq!(m.self_intersection(&k).unwrap(), m.ksq, "{}", m.id());
        }
    }

    #[test]
    fn ruled_generators() {
        for e in 0..5 {
            let x = SurfaceModel::hirzebruch(e).unwrap();
            let (s, f) = (x.generator(0).unwrap(), x.generator(1).unwrap());
            assert_eq!(x.intersect(&s, &s).unwrap(), -e);
            assert_eq!(x.intersect(&s, &f).unwrap(), 1);
            assert_eq!(x.intersect(&f, &f).unwrap(), 0);
        }
    }

    #[test]
    fn unsupported_ruled_invariants() {
        assert!(matches!(SurfaceModel::hirzebruch(-1), Err(Error::UnsupportedModel(_))));
        assert!(matches!(SurfaceModel::ruled(1, -2), Err(Error::UnsupportedModel(_))));
    }

    #[test]
    fn mismatched_models_error() {
        let p2 = SurfaceModel::projective_plane();
        let q = SurfaceModel::product_of_lines();
        let h = p2.generator(0).unwrap();
        let l = q.generator(0).unwrap();
        assert!(matches!(p2.intersect(&h, &l), Err(Error::BasisMismatch { .. })));
        assert!(matches!(h.checked_add(&l), Err(Error::BasisMismatch { .. })));
        let short = DivisorClass::new(ModelId::ProductOfLines, vec![1]);
        assert!(matches!(q.intersect(&short, &l), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn abstract_regular_has_no_form() {
        let x = SurfaceModel::abstract_regular(9, 3, 0);
        assert_eq!(x.chi(), 1);
        assert!(x.check_invariants().is_ok());
        let d = DivisorClass::new(ModelId::AbstractRegular, vec![]);
        assert!(matches!(x.intersect(&d, &d), Err(Error::NoIntersectionForm(_))));
        assert!(matches!(x.canonical_class(), Err(Error::UnsupportedModel(_))));
    }

    #[test]
    fn exact_division() {
        let p2 = SurfaceModel::projective_plane();
        let d = p2.class(&[15]).unwrap();
        assert_eq!(d.divided(3).unwrap(), p2.class(&[5]).unwrap());
        assert!(matches!(d.divided(2), Err(Error::Divisibility { .. })));
    }

    #[test]
    fn schubert_products() {
        assert_eq!(schubert_surface_product(3, 13, SchubertClass::Omega12), 13);
        assert_eq!(schubert_surface_product(1, 0, SchubertClass::Omega03), 1);
        assert_eq!(schubert_surface_product(3, 1, SchubertClass::HyperplaneSquared), 4);
        assert_eq!(schubert_surface_product(3, 1, SchubertClass::Omega03), 3);
    }

    #[test]
    fn grassmannian_ring() {
        let g = AmbientModel::Grassmannian13;
        let o03 = g.class(2, &[1, 0]).unwrap();
        let o12 = g.class(2, &[0, 1]).unwrap();
        assert_eq!(g.top_product(&o03, &o03).unwrap(), 1);
        assert_eq!(g.top_product(&o12, &o12).unwrap(), 1);
        assert_eq!(g.top_product(&o03, &o12).unwrap(), 0);
        // deg G(1,3) = σ₁⁴ = 2
        let s2 = g.hyperplane_power(2).unwrap();
        assert_eq!(g.top_product(&s2, &s2).unwrap(), 2);
        assert!(g.top_product(&o03, &g.hyperplane_power(1).unwrap()).is_err());

        let p3 = AmbientModel::ProjectiveSpace3;
        let h = p3.hyperplane_power(1).unwrap();
        let h2 = p3.hyperplane_power(2).unwrap();
        assert_eq!(p3.top_product(&h, &h2).unwrap(), 1);
    }

    #[test]
    fn hodge_index_on_ample_classes() {
        let q = SurfaceModel::product_of_lines();
        for a in 1..6 {
            for b in 1..6 {
                let d1 = q.class(&[a, b]).unwrap();
                for c in -4..5 {
                    for d in -4..5 {
                        let d2 = q.class(&[c, d]).unwrap();
                        assert!(q.hodge_index_holds(&d1, &d2).unwrap());
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn intersect_is_bilinear_and_symmetric(
            e in 0i64..5,
            a in -20i64..20, b in -20i64..20,
            x in prop::array::uniform2(-30i64..30),
            y in prop::array::uniform2(-30i64..30),
            z in prop::array::uniform2(-30i64..30),
        ) {
            let m = SurfaceModel::hirzebruch(e).unwrap();
            let (d1, d2, d3) = (m.class(&x).unwrap(), m.class(&y).unwrap(), m.class(&z).unwrap());
            let lhs = m.intersect(&(&(a * &d1) + &(b * &d2)), &d3).unwrap();
            let rhs = a * m.intersect(&d1, &d3).unwrap() + b * m.intersect(&d2, &d3).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(m.intersect(&d1, &d2).unwrap(), m.intersect(&d2, &d1).unwrap());
        }
    }
}
