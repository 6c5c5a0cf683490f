//! Flat parameter report: `key=value` lines or a two-row CSV table.

use std::fmt::Write as _;

use crate::analysis::{
    code_parameters, disjunct_profile, girth_report, Distance, FormulaD, VerifiedD,
};
use crate::binmat::BitMatrix;
use num_rational::Ratio;

/// Which of the expensive computations to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReportOptions {
    pub d_min: bool,
    pub s_min: bool,
    pub girth: bool,
    pub disjunct: bool,
    pub budget: u64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            d_min: true,
            s_min: true,
            girth: true,
            disjunct: true,
            budget: crate::analysis::DEFAULT_BUDGET,
        }
    }
}

/// Ordered key/value pairs. Keys are fixed; values not computed read
/// `not_computed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub entries: Vec<(&'static str, String)>,
}

const NOT_COMPUTED: &str = "not_computed";

pub fn format_formula(f: FormulaD) -> String {
    match f {
        FormulaD::Value(d) => d.to_string(),
        FormulaD::Unbounded => "unbounded".into(),
        FormulaD::NotApplicable => "not_applicable".into(),
    }
}

pub fn format_verified(v: VerifiedD) -> String {
    match v {
        VerifiedD::Exact(d) => d.to_string(),
        VerifiedD::Capped(d) => format!("{d}(max)"),
        VerifiedD::AtLeast(d) => format!(">={d}"),
        VerifiedD::NotDisjunct => "none".into(),
        VerifiedD::Unknown => "unknown".into(),
    }
}

impl AnalysisReport {
    pub fn build(m: &BitMatrix, rate_bound: Option<Ratio<i64>>, opts: &ReportOptions) -> Self {
        let p = code_parameters(m, rate_bound, opts.d_min, opts.s_min, opts.budget);
        let mut e: Vec<(&'static str, String)> = vec![
            ("rows", m.rows().to_string()),
            ("n", p.n.to_string()),
            ("rank", p.rank.to_string()),
            ("dimension", p.dimension.to_string()),
            ("rate", p.rate.to_string()),
            (
                "rate_bound",
                p.rate_lower_bound
                    .map_or_else(|| NOT_COMPUTED.to_string(), |r| r.to_string()),
            ),
        ];
        let (w_min, a_max) = crate::analysis::weight_and_overlap(m);
        e.push(("w_min", w_min.to_string()));
        e.push(("a_max", a_max.to_string()));
        if opts.disjunct {
            let prof = disjunct_profile(m, opts.budget);
            e.push(("disjunct_formula", format_formula(prof.formula)));
            e.push(("disjunct_verified", format_verified(prof.verified)));
        } else {
            e.push(("disjunct_formula", NOT_COMPUTED.into()));
            e.push(("disjunct_verified", NOT_COMPUTED.into()));
        }
        if opts.girth {
            let g = girth_report(m);
            e.push(("girth", g.girth.to_string()));
            e.push(("four_cycles", g.four_cycles.to_string()));
            e.push(("six_cycles", g.six_cycles.to_string()));
        } else {
            for k in ["girth", "four_cycles", "six_cycles"] {
                e.push((k, NOT_COMPUTED.into()));
            }
        }
        e.push(("d_min", distance_text(p.d_min)));
        e.push(("s_min", distance_text(p.s_min)));
        Self { entries: e }
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        for (k, v) in &self.entries {
            writeln!(s, "{k}={v}").unwrap();
        }
        s
    }

    pub fn to_csv(&self) -> String {
        let keys: Vec<&str> = self.entries.iter().map(|(k, _)| *k).collect();
        let vals: Vec<&str> = self.entries.iter().map(|(_, v)| v.as_str()).collect();
        format!("{}\n{}\n", keys.join(","), vals.join(","))
    }
}

fn distance_text(d: Distance) -> String {
    d.to_string()
}
