//! Double and triple covers that are scrolls over curves.

use num_integer::Integer;
use serde::Serialize;

use super::poly::IntPoly;
use super::report::{ReportBuilder, Source, Value, VerdictReport};
use crate::bundles::ample_split_rank2_on_p1;
use crate::error::{Error, Result};
use crate::intersection::{DivisorClass, SurfaceModel};
use crate::scroll::ScrollOverCurve;

/// The degree-2 case: comparing K_Y = (b−3)H (ramification formula) with
/// K_Y = −2H + π*(K_X + det E) (canonical bundle formula).
pub fn double_solid_classify() -> VerdictReport {
    let mut r = ReportBuilder::new("double-solid", "double solids that are scrolls");

    // H-coefficients: b − 3 = −2
    let branch_half_degree = -2 + 3;
    r.check("branch_degree", "b - 3 = -2 gives branch curve of degree 2b with b = 1", branch_half_degree, 1, Source::Published);

    // Pulled-back parts: K_X + det E = 0, so deg det E = 2 − 2q. Ampleness needs deg det E > 0.
    let base_genus = (0..).take_while(|q| 2 - 2 * q > 0).last().expect("q = 0 qualifies");
    r.check("base_genus", "K_X + det E = 0 with det E ample forces q = 0", base_genus, 0, Source::Structural);
    let deg_det = 2 - 2 * base_genus;
    r.check("det_degree", "deg det E = 2 on P1", deg_det, 2, Source::Published);
    let adjoint = (2 * base_genus - 2) + deg_det;
    r.check("adjoint_degree", "deg(K_X + det E) = -2 + 2", adjoint, 0, Source::Structural);

    let splittings = ample_split_rank2_on_p1(deg_det);
    r.check("splitting", "ample rank-2 bundles of degree 2 on P1", Value::pairs(splittings.clone()), Value::pairs([(1, 1)]), Source::Published);

    // E = O(1)+O(1) normalizes to O+O twisted by b = 1: the quadric, H² = 2.
    let (a1, a2) = splittings[0];
    let scroll = ScrollOverCurve::new(vec![a1 - a2], a2).expect("normalized splitting");
    let (d, h0) = scroll.degree_and_sections();
    r.check("cover_degree", "H^2 = 2 for P(O(1)+O(1))", d, 2, Source::Structural);
    r.check("sections", "h0(H) = n + d = 4", h0, 4, Source::Recomputed);
    let q = SurfaceModel::product_of_lines();
    let h = q.class(&[1, 1]).expect("rank 2");
    r.check("quadric_degree", "O(1,1)^2 on P1xP1", q.intersect(&h, &h).expect("same model"), 2, Source::Recomputed);
    r.check("model", "unique model", Value::text("P1xP1,O(1,1)"), Value::text("P1xP1,O(1,1)"), Source::Published);
    r.assume("picard_independence", "H and the pullback of Pic(X) are linearly independent in Pic(Y)");
    r.finish()
}

/// One branch of the scroll-over-curve analysis of triple planes, indexed by
/// `a` with H = aL + π*D.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveBranch {
    pub a: i64,
    /// 2g(Y,H) − 2 as a polynomial in q.
    pub genus_term: IntPoly,
    /// −b₁ as a polynomial in q.
    pub minus_b1: IntPoly,
    /// 72 + 30b₁ + 2b₁² − (3K² − e) with K² = 8(1−q), e = 4(1−q).
    pub eliminant: IntPoly,
    pub primitive: IntPoly,
    pub integer_roots: Vec<i64>,
}

/// (xL + yF)·(zL + wF) on P(E′) over a curve, with L² = deg E′ = `l`, L·F = 1, F² = 0.
fn ruled_pairing(l: i64, (x, y): (i64, i64), (z, w): (i64, i64)) -> i64 {
    x * z * l + x * w + y * z
}

/// (K_Y + H)·H for H = aL + δF on P(E′) → C, genus(C) = q, deg E′ = l.
/// K_Y = −2L + (2q − 2 + l)F.
fn adjoint_degree(a: i64, q: i64, l: i64, delta: i64) -> i64 {
    let k = (-2, 2 * q - 2 + l);
    let h = (a, delta);
    ruled_pairing(l, (k.0 + h.0, k.1 + h.1), h)
}

/// 2g − 2 as a polynomial in q, for H = aL + δF with the constraint of the branch:
/// a = 3 needs 3l + 2δ = 1, a = 1 takes δ = 0. Interpolated at q = 0, 1 and
/// checked on a grid of (q, l, δ).
fn genus_term(a: i64) -> IntPoly {
    let choices: Vec<(i64, i64)> = match a {
        3 => (-6..=6).map(|t| (1 + 2 * t, -1 - 3 * t)).collect(), // 3l + 2δ = 1
        _ => (-6..=6).map(|l| (l, 0)).collect(),
    };
    let (l0, d0) = choices[0];
    let poly = IntPoly::linear_through(adjoint_degree(a, 0, l0, d0), adjoint_degree(a, 1, l0, d0));
    for q in 0..8 {
        for &(l, d) in &choices {
            assert_eq!(adjoint_degree(a, q, l, d), poly.eval(q), "genus term depends on more than q");
        }
    }
    poly
}

fn curve_branch(a: i64) -> CurveBranch {
    let genus_term = genus_term(a);
    // Riemann–Hurwitz on the preimage of a general line: 2g − 2 = 3(−2) − 2b₁
    let minus_b1 = (&genus_term + &IntPoly::constant(6)).div_exact(2).expect("2g - 2 + 6 is even");
    let b1 = minus_b1.scale(-1);
    let one_minus_q = IntPoly::new(vec![1, -1]);
    let ksq = one_minus_q.scale(8);
    let euler = one_minus_q.scale(4);
    let miranda_side = &(&IntPoly::constant(72) + &b1.scale(30)) + &(&b1 * &b1).scale(2);
    let eliminant = &miranda_side - &(&ksq.scale(3) - &euler);
    let primitive = eliminant.primitive();
    let integer_roots = eliminant.integer_roots();
    CurveBranch { a, genus_term, minus_b1, eliminant, primitive, integer_roots }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveExclusions {
    pub branch_a3: CurveBranch,
    pub branch_a1: CurveBranch,
}

pub fn curve_exclusion_polynomials() -> CurveExclusions {
    CurveExclusions { branch_a3: curve_branch(3), branch_a1: curve_branch(1) }
}

pub fn scroll_over_curve_exclusions() -> VerdictReport {
    let ex = curve_exclusion_polynomials();
    let mut r = ReportBuilder::new("curve-exclusions", "triple planes that are scrolls over curves");
    let (a3, a1) = (&ex.branch_a3, &ex.branch_a1);
    r.check("a3_minus_b1", "a = 3: -b1 = 3q + 1", Value::ints(a3.minus_b1.coeffs()), Value::ints(&[1, 3]), Source::Published);
    r.check("a3_eliminant", "a = 3: b2 eliminated, 2(9q^2 - 29q + 12) = 0", Value::ints(a3.eliminant.coeffs()), Value::ints(&[24, -58, 18]), Source::Recomputed);
    r.check("a3_polynomial", "a = 3: 9q^2 - 29q + 12", Value::ints(a3.primitive.coeffs()), Value::ints(&[12, -29, 9]), Source::Published);
    r.check("a3_roots", "a = 3: no integer roots", Value::ints(&a3.integer_roots), Value::ints(&[]), Source::Published);
    r.check("a1_minus_b1", "a = 1: -b1 = q + 2", Value::ints(a1.minus_b1.coeffs()), Value::ints(&[2, 1]), Source::Published);
    r.check("a1_polynomial", "a = 1: b2 eliminated, 2q(q - 1) = 0", Value::ints(a1.eliminant.coeffs()), Value::ints(&[0, -2, 2]), Source::Published);
    r.check("a1_roots", "a = 1: q in {0, 1}", Value::ints(&a1.integer_roots), Value::ints(&[0, 1]), Source::Published);

    // q = 0, a = 1: b1 = -2 and Miranda gives the invariants of F1
    let b1 = -a1.minus_b1.eval(0);
    let f1 = SurfaceModel::hirzebruch(1).expect("F1");
    // solve K² = 27 + 12b1 + 2b1² − 3b2 for b2, then read off e
    let b2 = (27 + 12 * b1 + 2 * b1 * b1 - f1.ksq) / 3;
    let (ksq, euler) = crate::tripleplane::miranda(b1, b2);
    r.check("q0_b1", "q = 0: b1 = -2", b1, -2, Source::Recomputed);
    r.check("q0_miranda", "q = 0: Miranda gives (K^2, e) = (8, 4) of F1", Value::pair(ksq, euler), Value::pair(f1.ksq, f1.euler), Source::Recomputed);
    let (d, _) = ScrollOverCurve::new(vec![1], 1).expect("P(O(1)+O(2))").degree_and_sections();
    r.check("q0_model_degree", "q = 0: P(O(1)+O(2)) has H^2 = 3", d, 3, Source::Published);
    r.assume("threefold_case", "for n = 3 the base is P1 since H^1(O_Y) = 0, giving P2 x P1 with O(1,1)");
    r.finish()
}

/// Coefficients of K in (d = aK): Σ_{j=0}^{m} C(n, j)·a^{n−j−1}, the multipliers
/// of L^{n−j}·(π*D)^j.
pub fn k_coefficients(a: i64, n: u32, m: u32) -> Vec<i64> {
    (0..=m.min(n - 1))
        .map(|j| binomial(n, j) * a.pow(n - j - 1))
        .collect()
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// gcd of the coefficients; `1 = K` is solvable in integers iff this is 1.
pub fn k_content(coeffs: &[i64]) -> i64 {
    coeffs.iter().fold(0, |g, c| g.gcd(c))
}

pub fn exclude_a3_case() -> VerdictReport {
    let mut r = ReportBuilder::new("a3-case", "the case a = 3, K = 1 for triple planes");

    let n2 = k_coefficients(3, 2, 1);
    r.check("n2_coefficients", "n = 2, m = 1: K = 3 deg E' + 2 deg D", Value::ints(&n2), Value::ints(&[3, 2]), Source::Published);
    let g = n2[0].extended_gcd(&n2[1]);
    r.check("n2_solvable", "3x + 2y = 1 has integer solutions, parity does not exclude it", g.gcd == 1, true, Source::Structural);
    r.check("n2_witness", "3(1) + 2(-1) = 1", Value::pair(g.x, g.y), Value::pair(1, -1), Source::Recomputed);

    for (m, expected, id) in [(1u32, vec![9, 9], "n3_m1"), (2, vec![9, 9, 3], "n3_m2")] {
        let coeffs = k_coefficients(3, 3, m);
        r.check(&format!("{id}_coefficients"), "n = 3: coefficients of K", Value::ints(&coeffs), Value::ints(&expected), Source::Published);
        let content = k_content(&coeffs);
        r.check(&format!("{id}_mod3"), "K is divisible by 3, so 1 = K is impossible", content % 3 == 0 && 1 % content != 0, true, Source::Published);
    }
    let d2 = k_coefficients(2, 2, 1);
    r.check("double_coefficients", "d = 2: 1 = K = 2(L^2 + deg D) is absurd", k_content(&d2), 2, Source::Published);

    let branch = curve_branch(3);
    r.check("genus_term", "2g - 2 = (K_Y + H).H = 6q - 4", Value::ints(branch.genus_term.coeffs()), Value::ints(&[-4, 6]), Source::Published);
    r.check("genus_at_q1", "q = 1: 2g - 2 = 2, g = 2", Value::pair(branch.genus_term.eval(1), branch.genus_term.eval(1) / 2 + 1), Value::pair(2, 2), Source::Recomputed);
    r.check("minus_b1_at_q1", "q = 1: -b1 = 4", branch.minus_b1.eval(1), 4, Source::Recomputed);
    r.check("polynomial", "9q^2 - 29q + 12 = 0", Value::ints(branch.primitive.coeffs()), Value::ints(&[12, -29, 9]), Source::Published);
    r.check("no_integer_genus", "no integer q solves it", branch.integer_roots.is_empty(), true, Source::Published);
    r.finish()
}

/// (e, b) with H = σ + bf on an elliptic ruled surface of invariant e, H² = 3,
/// and H ample. e ≥ −1 on an elliptic curve; for e ≥ 3, b = (e+3)/2 ≤ e so the
/// search window [−1, 99] is complete.
pub fn elliptic_scroll_cases() -> Vec<(i64, i64)> {
    (-1..100i64)
        .filter(|e| e % 2 != 0)
        .map(|e| (e, (e + 3) / 2))
        .filter(|&(e, b)| -e + 2 * b == 3)
        .filter(|&(e, b)| if e >= 0 { b > e } else { b >= 0 })
        .collect()
}

pub fn elliptic_cases_report() -> VerdictReport {
    let mut r = ReportBuilder::new("elliptic-cases", "surface scrolls of degree 3 over an elliptic curve");
    let cases = elliptic_scroll_cases();
    r.check("cases", "(e, b) = (-1, 1) or (1, 2)", Value::pairs(cases.clone()), Value::pairs([(-1, 1), (1, 2)]), Source::Published);
    let tail_closed = (3..1000i64).step_by(2).all(|e| (e + 3) / 2 <= e);
    r.check("window_complete", "for odd e >= 3, b = (e + 3)/2 <= e fails ampleness", tail_closed, true, Source::Structural);
    r.check("e3_rejected", "e = 3 gives b = 3, not > e", cases.contains(&(3, 3)), false, Source::Recomputed);

    let y = SurfaceModel::ruled(1, -1).expect("elliptic ruled e = -1");
    let h = y.class(&[1, 1]).expect("rank 2");
    r.check("h_square_e_minus1", "e = -1: H^2 = 1 + 2", y.intersect(&h, &h).expect("same model"), 3, Source::Structural);

    let y1 = SurfaceModel::ruled(1, 1).expect("elliptic ruled e = 1");
    let h1 = y1.class(&[1, 2]).expect("rank 2");
    let sigma = y1.generator(0).expect("sigma");
    r.check("not_spanned_e1", "e = 1: H.sigma = 1 on the elliptic section", y1.intersect(&h1, &sigma).expect("same model"), 1, Source::Published);
    r.assume("degree_one_on_elliptic", "a line bundle of degree 1 on an elliptic curve is not spanned");
    r.finish()
}

/// A class D = xσ + yf found by the Reider search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReiderHit {
    pub x: i64,
    pub y: i64,
    pub d_dot_m: i64,
    pub d_squared: i64,
    pub d_dot_sigma: i64,
    /// x = D·f ≥ 0, as required for an effective D.
    pub effective_candidate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReiderSearch {
    pub m_squared: i64,
    pub window: i64,
    /// D·M = 0 and D² = −1.
    pub zero_degree: Vec<ReiderHit>,
    /// D·M = 1 and D² = 0.
    pub degree_one: Vec<ReiderHit>,
}

/// Searches D = xσ + yf with |x|, |y| ≤ `window` that would obstruct
/// spannedness of K + M. Requires M² > 5.
pub fn reider_obstruction_search(model: &SurfaceModel, m: &DivisorClass, window: i64) -> Result<ReiderSearch> {
    if model.rank() != 2 {
        return Err(Error::UnsupportedModel(format!("{} is not a ruled model", model.id())));
    }
    if window < 1 {
        return Err(Error::Precondition(format!("window {window} < 1")));
    }
    let m_squared = model.intersect(m, m)?;
    if m_squared <= 5 {
        return Err(Error::Precondition(format!("M^2 = {m_squared} <= 5")));
    }
    let sigma = model.generator(0)?;
    let mut zero_degree = Vec::new();
    let mut degree_one = Vec::new();
    for x in -window..=window {
        for y in -window..=window {
            let d = model.class(&[x, y])?;
            let hit = ReiderHit {
                x,
                y,
                d_dot_m: model.intersect(&d, m)?,
                d_squared: model.intersect(&d, &d)?,
                d_dot_sigma: model.intersect(&d, &sigma)?,
                effective_candidate: x >= 0,
            };
            match (hit.d_dot_m, hit.d_squared) {
                (0, -1) => zero_degree.push(hit),
                (1, 0) => degree_one.push(hit),
                _ => {}
            }
        }
    }
    Ok(ReiderSearch { m_squared, window, zero_degree, degree_one })
}

pub fn reider_report(window: i64) -> Result<VerdictReport> {
    let y = SurfaceModel::ruled(1, -1)?;
    let h = y.class(&[1, 1])?;
    let m = h.checked_add(&y.canonical_class()?.scaled(-1))?;
    let search = reider_obstruction_search(&y, &m, window)?;
    let mut r = ReportBuilder::new("reider", "spannedness of sigma + f on the elliptic ruled surface with e = -1");
    r.check("m_class", "M = H - K = 3 sigma", Value::ints(m.coeffs()), Value::ints(&[3, 0]), Source::Published);
    r.check("m_squared", "M^2 = 9 > 5", search.m_squared, 9, Source::Published);
    r.check("degree_one_empty", "D.M = 3(x + y) is never 1", search.degree_one.len() as i64, 0, Source::Published);
    let zero: Vec<_> = search.zero_degree.iter().map(|h| (h.x, h.y)).collect();
    r.check("zero_degree_solutions", "D.M = 0, D^2 = -1: (x, y) = (+-1, -+1)", Value::pairs(zero), Value::pairs([(-1, 1), (1, -1)]), Source::Recomputed);
    let effective: Vec<_> = search.zero_degree.iter().filter(|h| h.effective_candidate).collect();
    r.check("effective_witness", "the only effective-type solution is sigma - f", Value::pairs(effective.iter().map(|h| (h.x, h.y))), Value::pairs([(1, -1)]), Source::Published);
    r.check("witness_d_sigma", "D.sigma = 0 for D = sigma - f", Value::ints(&effective.iter().map(|h| h.d_dot_sigma).collect::<Vec<_>>()), Value::ints(&[0]), Source::Published);
    r.assume("sigma_moves", "with e = -1 the section sigma moves in a family covering Y, so D.sigma = 0 is impossible for effective D");
    Ok(r.finish())
}
