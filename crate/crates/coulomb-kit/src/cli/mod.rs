//! Batch workflows behind the `coulomb-kit` binary: each command ingests a
//! JSON group/representation spec (or suite parameters), runs the library,
//! and produces a deterministic [`Report`] plus a process exit code.

pub mod report;
pub mod spec;

pub use report::{exit, Report};
pub use spec::{parse_spec, ResolvedSpec, SpecError};

use crate::anomaly::{anomaly_check, sl2_monopole_number, sl2_parity_criterion, trace_form};
use crate::kostant::suite::run_suite;
use crate::kostant::KostantError;
use crate::lie::{
    is_symplectic_weights, sl2_isotypic_decomposition, weight_level_cotangent_split, RootDatum,
    WeightRep,
};
use crate::monopole::{
    compare_series, monopole_hilbert_series, presentation_hilbert_series, sl2_presentation,
    MonopoleError, MonopoleOptions,
};
use crate::rat::{format_rat, is_integer};
use crate::series::HilbertSeries;
use num_traits::ToPrimitive;
use report::series_to_value;
use serde_json::{json, Value};

/// A finished command: the report and the exit code to return.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub report: Report,
    pub exit: i32,
}

fn invalid_input(command: &str, message: String) -> CommandOutput {
    let mut report = Report::new(command, Value::Null);
    report.status = "invalid-input".to_string();
    report.results = json!({ "error": message });
    CommandOutput {
        report,
        exit: exit::INVALID_INPUT,
    }
}

fn weights_value(rep: &WeightRep) -> Value {
    let items: Vec<Value> = rep.entries().map(|(w, m)| json!([w, m])).collect();
    json!(items)
}

/// True when the datum is the standard rank-1 lattice with `α = 2`,
/// `α∨ = 1` (the normalization in which monopole numbers and the
/// three-generator presentations are stated).
fn is_sl2_normalized(d: &RootDatum) -> bool {
    d.rank() == 1
        && d.simple_roots() == [vec![2]]
        && d.simple_coroots() == [vec![1]]
}

/// `rep-info`: dimension, weights, symplectic diagnostics, weight-level
/// cotangent split, and the rank-1 isotypic decomposition when available.
pub fn cmd_rep_info(spec_text: &str) -> CommandOutput {
    let resolved = match parse_spec(spec_text) {
        Ok(r) => r,
        Err(e) => return invalid_input("rep-info", e.to_string()),
    };
    let ResolvedSpec { datum, rep, echo, .. } = resolved;
    let check = is_symplectic_weights(&datum, &rep);
    let split = weight_level_cotangent_split(&rep);
    let isotypic: Option<Value> = if datum.rank() == 1 && datum.num_simple_roots() == 1 {
        sl2_isotypic_decomposition(&datum, &rep)
            .ok()
            .map(|d| json!(d.iter().map(|(k, m)| json!([k, m])).collect::<Vec<_>>()))
    } else {
        None
    };
    let mut report = Report::new("rep-info", echo);
    report.results = json!({
        "group": datum.name(),
        "rank": datum.rank(),
        "dim": rep.dim(),
        "weights": weights_value(&rep),
        "symplectic": check.is_symplectic(),
        "violations": check.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "cotangent_split": split.as_ref().map(weights_value),
        "isotypic": isotypic,
    });
    report.status = "ok".to_string();
    CommandOutput {
        report,
        exit: exit::OK,
    }
}

/// `anomaly`: trace-form Gram matrix and the anomaly verdict with witnesses;
/// for rank-1 data in the standard normalization also the monopole number
/// and the parity criterion.
pub fn cmd_anomaly(spec_text: &str) -> CommandOutput {
    let resolved = match parse_spec(spec_text) {
        Ok(r) => r,
        Err(e) => return invalid_input("anomaly", e.to_string()),
    };
    let ResolvedSpec { datum, rep, echo, .. } = resolved;
    let mut report = Report::new("anomaly", echo);
    let verdict = match anomaly_check(&datum, &rep) {
        Ok(v) => v,
        Err(e) => {
            report.status = "invalid-input".to_string();
            report.results = json!({ "error": e.to_string() });
            return CommandOutput {
                report,
                exit: exit::INVALID_INPUT,
            };
        }
    };
    let gram = trace_form(&datum, &rep).expect("rank checked by anomaly_check");
    let mut results = json!({
        "gram": gram.gram(),
        "pass": verdict.pass(),
        "half_integral": verdict.half_integral,
        "coroot_failures": verdict.coroot_failures,
        "witness": verdict.witness,
    });
    if datum.rank() == 1 {
        let n = sl2_monopole_number(&rep).expect("rank 1");
        results["monopole_number"] = json!(format_rat(&n));
        results["monopole_number_integral"] = json!(is_integer(&n));
        if datum.num_simple_roots() == 1 {
            if let Ok(decomp) = sl2_isotypic_decomposition(&datum, &rep) {
                results["parity_criterion"] = json!(sl2_parity_criterion(&decomp));
            }
        }
    }
    report.results = results;
    report.status = if verdict.pass() { "pass" } else { "fail" }.to_string();
    CommandOutput {
        exit: if verdict.pass() { exit::OK } else { exit::MATH_FAIL },
        report,
    }
}

/// Flags for `hilbert`.
#[derive(Debug, Clone)]
pub struct HilbertFlags {
    pub order: i64,
    pub threads: usize,
    pub shell_cap: Option<i64>,
}

/// `hilbert`: the monopole series; for standard rank-1 data with integral
/// `N ≥ 3` also the presentation series and the comparison verdict.
pub fn cmd_hilbert(spec_text: &str, flags: &HilbertFlags) -> CommandOutput {
    let resolved = match parse_spec(spec_text) {
        Ok(r) => r,
        Err(e) => return invalid_input("hilbert", e.to_string()),
    };
    let ResolvedSpec { datum, rep, echo, .. } = resolved;
    let inputs = json!({
        "spec": echo,
        "order": flags.order,
    });
    let mut report = Report::new("hilbert", inputs);
    if matches!(anomaly_check(&datum, &rep), Ok(v) if !v.pass()) {
        report
            .warnings
            .push("anomalous; exponents may lie in (1/2)Z".to_string());
    }
    let mut opts = MonopoleOptions::new(flags.order).with_threads(flags.threads);
    if let Some(cap) = flags.shell_cap {
        opts = opts.with_shell_cap(cap);
    }
    let out = match monopole_hilbert_series(&datum, &rep, &opts) {
        Ok(o) => o,
        Err(MonopoleError::NotSymplectic(d)) => {
            report.status = "invalid-input".to_string();
            report.results = json!({ "error": format!("representation is not symplectic: {d}") });
            return CommandOutput {
                report,
                exit: exit::INVALID_INPUT,
            };
        }
        Err(e @ (MonopoleError::NotGood { .. } | MonopoleError::ShellCapExceeded { .. })) => {
            report.status = "not-good".to_string();
            report.results = json!({ "error": e.to_string() });
            return CommandOutput {
                report,
                exit: exit::NOT_GOOD,
            };
        }
        Err(e) => {
            report.status = "invalid-input".to_string();
            report.results = json!({ "error": e.to_string() });
            return CommandOutput {
                report,
                exit: exit::INVALID_INPUT,
            };
        }
    };
    for w in &out.warnings {
        if !report.warnings.iter().any(|x| x == w) {
            report.warnings.push(w.clone());
        }
    }
    let mut results = json!({
        "monopole_series": series_to_value(&out.series),
        "contributing_coweights": out.contributing,
    });
    if is_sl2_normalized(&datum) {
        let n = sl2_monopole_number(&rep).expect("rank 1");
        results["monopole_number"] = json!(format_rat(&n));
        if let Ok(p) = sl2_presentation(&datum, &rep) {
            results["presentation"] = json!({
                "monopole_number": p.monopole_number,
                "relation": p.relation,
                "degrees": [p.degrees.0, p.degrees.1, p.degrees.2],
            });
            if let Ok(ps) = presentation_hilbert_series(&p, flags.order) {
                results["presentation_series"] = series_to_value(&ps);
                let cmp = compare_series(&out.series, &ps);
                results["comparison"] = json!(cmp.to_string());
                results["match"] = json!(cmp.is_equal());
            }
        }
    }
    report.results = results;
    report.status = "ok".to_string();
    CommandOutput {
        report,
        exit: exit::OK,
    }
}

/// `kostant-verify`: runs the seeded property suite.
pub fn cmd_kostant_verify(n: usize, samples: usize, seed: u64) -> CommandOutput {
    let inputs = json!({ "n": n, "samples": samples, "seed": seed });
    let mut report = Report::new("kostant-verify", inputs);
    let suite = match run_suite(n, samples, seed) {
        Ok(s) => s,
        Err(e @ KostantError::UnsupportedRank(..)) => {
            report.status = "invalid-input".to_string();
            report.results = json!({
                "error": format!("{e}; larger spaces are reachable through the library API (seed_y_point + transport)"),
            });
            return CommandOutput {
                report,
                exit: exit::INVALID_INPUT,
            };
        }
        Err(e) => {
            report.status = "invalid-input".to_string();
            report.results = json!({ "error": e.to_string() });
            return CommandOutput {
                report,
                exit: exit::INVALID_INPUT,
            };
        }
    };
    let all = suite.all_passed();
    report.results = json!({
        "all_passed": all,
        "properties": suite.properties.iter().map(|p| json!({
            "name": p.name,
            "samples": p.samples,
            "failures": p.failures,
            "first_counterexample": p.first_counterexample,
        })).collect::<Vec<_>>(),
    });
    report.status = if all { "pass" } else { "fail" }.to_string();
    CommandOutput {
        exit: if all { exit::OK } else { exit::MATH_FAIL },
        report,
    }
}

/// Human-readable rendering of a report.
pub fn render_text(output: &CommandOutput) -> String {
    let r = &output.report;
    let mut lines = Vec::new();
    lines.push(format!("command: {}", r.command));
    lines.push(format!("status:  {}", r.status));
    for w in &r.warnings {
        lines.push(format!("warning: {w}"));
    }
    render_results(&r.results, 0, &mut lines);
    lines.push(format!("exit:    {}", output.exit));
    lines.join("\n")
}

fn render_results(v: &Value, indent: usize, lines: &mut Vec<String>) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(_) => {
                        lines.push(format!("{pad}{k}:"));
                        render_results(val, indent + 1, lines);
                    }
                    Value::Array(items)
                        if items.iter().any(|i| i.is_array() || i.is_object()) =>
                    {
                        lines.push(format!("{pad}{k}:"));
                        for item in items {
                            lines.push(format!("{pad}  {item}"));
                        }
                    }
                    _ => lines.push(format!("{pad}{k}: {val}")),
                }
            }
        }
        other => lines.push(format!("{pad}{other}")),
    }
}

/// Convenience used by tests and examples: series of the standard rank-1
/// theory with `2N` half-hypermultiplets (`V^1 ⊗ C^{2N}`).
pub fn sl2_theory(copies: u64) -> (RootDatum, WeightRep) {
    let d = RootDatum::sl2();
    let r = WeightRep::from_pairs(1, [(vec![1], copies), (vec![-1], copies)])
        .expect("rank-1 pairs");
    (d, r)
}

/// Closed-form oracle for rank-r torus theories: direct lattice summation of
/// `q^{Δ(λ)} / (1−q)^r` over the coweight box. The dressing coefficients are
/// binomials obtained by repeated prefix sums (Pascal's rule), so this route
/// shares nothing with the determinant-inversion Molien path it checks.
///
/// Intended for representations whose `Δ` grows in every lattice direction;
/// enumeration panics past a safety radius otherwise.
pub fn torus_lattice_oracle(rep: &WeightRep, order: i64) -> HilbertSeries {
    let rank = rep.rank();
    let order2 = 2 * order;
    let len = (order + 1).max(1) as usize;
    let mut dressing = vec![crate::rat::rat(0); len];
    dressing[0] = crate::rat::rat(1);
    for _ in 0..rank {
        let mut acc = crate::rat::rat(0);
        for item in dressing.iter_mut() {
            acc += item.clone();
            *item = acc.clone();
        }
    }
    let torus = RootDatum::torus(rank);
    let mut series = HilbertSeries::zero(order2);
    let mut radius = 0;
    loop {
        let mut hit = false;
        for cw in torus.dominant_shell(radius) {
            let dl = crate::monopole::delta(&torus, rep, &cw);
            if dl <= crate::rat::rat(order) {
                hit = true;
                let two: num_bigint::BigInt = (dl * crate::rat::rat(2)).to_integer();
                let dl2 = two.to_i64().expect("small exponent");
                for (k, c) in dressing.iter().enumerate() {
                    let e = dl2 + 2 * k as i64;
                    if e <= order2 {
                        series = series.add(&HilbertSeries::monomial(e, c.clone(), order2));
                    }
                }
            }
        }
        if rank == 0 || !hit {
            return series;
        }
        radius += 1;
        assert!(
            radius <= 4 * order.abs() + 4,
            "oracle does not terminate: Δ has a flat or negative lattice direction"
        );
    }
}
