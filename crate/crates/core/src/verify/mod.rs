//! Exhaustive verification of the identities satisfied by Jack functions,
//! bounded sweeps over the open conjectures, and the lowest-coefficient
//! solver.
//!
//! A [`Report`] separates `failures` (a proven statement or a hard
//! integrality assertion did not hold, which means a bug) from `findings`
//! (a conjecture did not hold on some input).

mod conjectures;
mod lowest;
mod report;
mod suites;

pub use conjectures::{
    conjecture_linear_factors, conjecture_lowest, conjecture_main, conjecture_ratio,
    conjecture_stanley, factor_assignment, ratio_cases, Assignment, BoxOptions, RatioCase,
};
pub use lowest::{lowest_family, solve_lowest, PiClass, PiTable};
pub use report::{Failure, Report, SuiteKind};
pub use suites::{
    suite_consistency, suite_duality, suite_leading, suite_normalization, suite_oracles,
    suite_orthogonality, suite_prefix, suite_prv, suite_ratio_prop, suite_rotation, suite_split,
    suite_top_component, suite_translation,
};

/// Names accepted by [`run_suite`], in the order `all` runs them.
pub const SUITES: &[&str] = &[
    "translation",
    "rotation",
    "duality",
    "prefix",
    "split",
    "consistency",
    "top-component",
    "prv",
    "ratio-prop",
];

/// Names accepted by [`run_conjecture`].
pub const CONJECTURES: &[&str] = &["main", "stanley", "linear-factors", "ratio", "lowest"];

/// Runs a verification suite by name with size bound `n`; `None` for an
/// unknown name. `all` runs every suite and returns one report each.
pub fn run_suite(name: &str, n: usize) -> Option<Vec<Report>> {
    let one = |r: Report| Some(vec![r]);
    match name {
        "translation" => one(suite_translation(n)),
        "rotation" => one(suite_rotation(n)),
        "duality" => one(suite_duality(n)),
        "prefix" => one(suite_prefix(n)),
        "split" => one(suite_split(n, 2, 2)),
        "consistency" => one(suite_consistency(n)),
        "top-component" => one(suite_top_component(n)),
        "prv" => one(suite_prv(n)),
        "ratio-prop" => one(suite_ratio_prop(n)),
        "all" => Some(
            SUITES
                .iter()
                .flat_map(|s| run_suite(s, n).expect("known suite"))
                .collect(),
        ),
        _ => None,
    }
}

/// Runs a conjecture sweep by name; `mu` is only read by `lowest`.
pub fn run_conjecture(name: &str, n: usize, mu: Option<&crate::Partition>) -> Option<Report> {
    match name {
        "main" => Some(conjecture_main(n)),
        "stanley" => Some(conjecture_stanley(n)),
        "linear-factors" => Some(conjecture_linear_factors(n)),
        "ratio" => Some(conjecture_ratio(n)),
        "lowest" => {
            let mu = mu
                .cloned()
                .unwrap_or_else(|| "1".parse().expect("partition"));
            Some(conjecture_lowest(&mu, n).0)
        }
        _ => None,
    }
}
