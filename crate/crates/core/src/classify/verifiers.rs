//! Registry of verifiers by stable id.

use super::curves::{double_solid_classify, elliptic_cases_report, exclude_a3_case, reider_report, scroll_over_curve_exclusions};
use super::report::{ReportBuilder, Source, Value, VerdictReport};
use super::solids::{
    e_decomp_report, fano_filter, grassmann_report, linear_conditions_report, prop_a_exclusions,
    remark_final_report, schwarzenberger_report,
};
use super::table1::{enumerate_table1, filter_table1, survivors, Verdict};
use crate::tripleplane::{cusp_bounds, gamma_integral_points, on_gamma, TriplePlaneData};

/// Every verifier id, in the order `verify all` runs them.
pub const VERIFIER_IDS: [&str; 15] = [
    "double-solid",
    "curve-exclusions",
    "a3-case",
    "elliptic-cases",
    "reider",
    "prop-a",
    "e-decomp",
    "fano",
    "table1-filter",
    "schwarzenberger",
    "grassmann",
    "linear-conditions",
    "remark-final",
    "gamma-points",
    "cusp-bounds",
];

/// Runs one verifier. `window` is the Reider search window. `None` for an unknown id.
pub fn run_verifier(id: &str, window: i64) -> Option<VerdictReport> {
    let report = match id {
        "double-solid" => double_solid_classify(),
        "curve-exclusions" => scroll_over_curve_exclusions(),
        "a3-case" => exclude_a3_case(),
        "elliptic-cases" => elliptic_cases_report(),
        "reider" => reider_report(window).unwrap_or_else(|e| error_report("reider", &e.to_string())),
        "prop-a" => prop_a_exclusions(),
        "e-decomp" => e_decomp_report(),
        "fano" => fano_filter(),
        "table1-filter" => table1_filter_report(),
        "schwarzenberger" => schwarzenberger_report(),
        "grassmann" => grassmann_report(),
        "linear-conditions" => linear_conditions_report(),
        "remark-final" => remark_final_report(),
        "gamma-points" => gamma_points_report(),
        "cusp-bounds" => cusp_bounds_report(),
        _ => return None,
    };
    Some(report)
}

pub fn verify_all(window: i64) -> Vec<VerdictReport> {
    VERIFIER_IDS.iter().map(|id| run_verifier(id, window).expect("registered id")).collect()
}

fn error_report(theorem: &str, message: &str) -> VerdictReport {
    let mut r = ReportBuilder::new(theorem, "verifier could not run");
    r.check("error", message, false, true, Source::Structural);
    r.finish()
}

pub fn table1_filter_report() -> VerdictReport {
    let mut r = ReportBuilder::new("table1-filter", "scrolls over P2: obvious case or the (4, 13) candidate");
    let rows = enumerate_table1();
    let triples = rows.iter().map(|c| Value::triple(c.s, c.b, c.c)).collect();
    let expected = [
        (1, 4, 3), (6, 6, 6), (10, 8, 12), (13, 10, 21), (15, 12, 33), (16, 14, 48),
        (16, 16, 66), (15, 18, 87), (13, 20, 111), (10, 22, 138), (6, 24, 168), (1, 26, 201),
    ];
    r.check("table", "the twelve (s, b, c)", Value::List(triples), Value::List(expected.iter().map(|&(s, b, c)| Value::triple(s, b, c)).collect()), Source::Published);
    r.check("pg_zero", "p_g = 0 on every row", rows.iter().all(|c| c.invariants.pg == 0), true, Source::Structural);

    let filtered = filter_table1(&rows);
    let failing = |name: &str| -> Vec<i64> {
        filtered
            .iter()
            .filter(|c| c.filter(name).map(|f| f.verdict) == Some(Verdict::Fail))
            .map(|c| c.id as i64)
            .collect()
    };
    r.check("b_ge_10", "cases 2 and 3 fail b >= 10", Value::ints(&failing("b-ge-10")), Value::ints(&[2, 3]), Source::Published);
    r.check("clebsch", "the remaining non-survivors fail Clebsch", Value::ints(&failing("clebsch")), Value::ints(&[5, 6, 8, 9, 10, 12]), Source::Published);
    r.check("hcube", "cases 7 and 11 fail a^2 - s = 3", Value::ints(&failing("hcube")), Value::ints(&[7, 11]), Source::Published);
    for (id, a, h3) in [(7usize, 5, 9), (11, 6, 30)] {
        let w = &filtered[id - 1].filter("hcube").expect("hcube ran").witness;
        r.check(
            &format!("case{id}_witness"),
            "witness (a, a^2 - s)",
            Value::List(vec![w["a"].clone(), w["h_cube"].clone()]),
            Value::pair(a, h3),
            Source::Published,
        );
    }
    let surv: Vec<i64> = survivors(&filtered).into_iter().map(|i| i as i64).collect();
    r.check("survivors", "only cases 1 and 4 survive", Value::ints(&surv), Value::ints(&[1, 4]), Source::Published);
    let c4 = &filtered[3];
    r.check("candidate", "case 4: a = 4, g = 3, 16 - 13 = 3", Value::triple(c4.degree_a.unwrap_or(0), c4.invariants.g, c4.degree_a.unwrap_or(0).pow(2) - c4.s), Value::triple(4, 3, 3), Source::Published);
    r.check("candidate_exactness", "case 4: 2e - K^2 = 3(s - 1) = 36", c4.invariants.two_euler_minus_ksq(), 36, Source::Recomputed);
    r.assume("b_ge_10", "outside the obvious case b >= 10, with equality only for g = 3");
    r.finish()
}

pub fn gamma_points_report() -> VerdictReport {
    let mut r = ReportBuilder::new("gamma-points", "decomposable Tschirnhaus bundles with p_g = 0");
    let g = gamma_integral_points();
    r.check("points", "integral points of the circle", Value::pairs(g.points.iter().copied()), Value::pairs([(1, 1), (1, 2), (2, 1), (2, 2)]), Source::Published);
    r.check("exhaustive", "(2m - 3)^2 + (2n - 3)^2 = 2 has no solutions outside the box", g.exhaustive, true, Source::Structural);
    let scan: Vec<(i64, i64)> = (-50..=50i64).flat_map(|m| (-50..=50i64).map(move |n| (m, n))).filter(|&(m, n)| on_gamma(m, n)).collect();
    r.check("scan", "bounded scan agrees", Value::pairs(scan), Value::pairs(g.points.iter().copied()), Source::Recomputed);
    r.finish()
}

pub fn cusp_bounds_report() -> VerdictReport {
    let mut r = ReportBuilder::new("cusp-bounds", "bounds on the number of cusps");
    let cand = cusp_bounds(10, 13, false);
    r.check("candidate_lower", "b^2/6 = 50/3", Value::Rat(cand.lower_strict), Value::Rat(crate::rational::Rational::new(50, 3)), Source::Recomputed);
    r.check("candidate_upper", "upper bound 21", Value::Rat(cand.effective_upper()), Value::Rat(21.into()), Source::Published);
    r.check("candidate_admits", "50/3 < 21 <= 21", cand.admits(21), true, Source::Published);
    r.check("candidate_tight", "upper bound met with equality", cand.upper_is_tight(21), true, Source::Published);
    let ob = cusp_bounds(4, 1, false);
    r.check("obvious_admits", "8/3 < 3 <= 3", ob.admits(3), true, Source::Recomputed);
    r.check("obvious_tight", "upper bound met with equality", ob.upper_is_tight(3), true, Source::Recomputed);

    let rows = enumerate_table1();
    let admitted: Vec<i64> = rows.iter().filter(|c| cusp_bounds(c.b, c.s, false).admits(c.c)).map(|c| c.id as i64).collect();
    // every row sits on both upper bounds; only row 2 violates the strict lower bound
    r.check("table_admitted", "rows inside the cusp window", Value::ints(&admitted), Value::ints(&[1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12]), Source::Recomputed);
    let tight = rows.iter().all(|c| cusp_bounds(c.b, c.s, false).upper_is_tight(c.c));
    r.check("table_tight", "every row meets the upper bound", tight, true, Source::Recomputed);
    let t: TriplePlaneData = rows[3].invariants;
    r.check("candidate_invariants", "(g, K^2, e, p_g) = (3, -4, 16, 0)", Value::ints(&[t.g, t.ksq, t.euler, t.pg]), Value::ints(&[3, -4, 16, 0]), Source::Published);
    r.finish()
}
