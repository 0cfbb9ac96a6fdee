//! The three experiment drivers: convergence studies, energy decay series,
//! and single diagnostic runs.

use crate::config::ExperimentSpec;
use crate::output::{csv_document, fmt6};
use anyhow::{Context, Result};
use ferrofem::diagnostics::{
    energy, last_pair_order, ls_order, relative_errors, EnergyRecord, ERROR_COLUMNS,
};
use ferrofem::stepper::{RunConfig, StepStats, Stepper};
use serde_json::json;
use std::path::Path;
use std::time::Instant;

fn run_config(spec: &ExperimentSpec, k: usize, dt: f64) -> RunConfig {
    let mut cfg = RunConfig::new(spec.example, k, dt, spec.t_end);
    cfg.sweeps = spec.sweeps;
    cfg.strict = spec.strict_energy;
    cfg.solver_tol = spec.solver_tol;
    cfg.constrain_h = spec.constrain_h;
    cfg.params = spec.params.into();
    cfg
}

/// Advances a fresh stepper over the whole time interval, reporting progress
/// on stderr. Returns the stepper at the final time and the last step's
/// statistics.
fn integrate(cfg: RunConfig, label: &str) -> (Stepper, Option<StepStats>) {
    let start = Instant::now();
    let mut st = Stepper::new(cfg);
    eprintln!("[{label}] setup {:.1}s, {} steps", start.elapsed().as_secs_f64(), cfg.n_steps());
    let mut stats = None;
    for n in 0..cfg.n_steps() {
        stats = Some(st.advance());
        if (n + 1) % 8 == 0 || n + 1 == cfg.n_steps() {
            eprintln!(
                "[{label}] step {}/{} t={:.4} ({:.1}s)",
                n + 1,
                cfg.n_steps(),
                st.state.t,
                start.elapsed().as_secs_f64()
            );
        }
    }
    (st, stats)
}

fn write(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("cannot create {}", dir.display()))?;
    }
    std::fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn stats_json(stats: &StepStats) -> serde_json::Value {
    json!({
        "sweeps": stats.sweeps,
        "update": stats.update,
        "div_residual": stats.div_residual,
        "mag_residual": stats.mag_residual,
        "grad_residual": stats.grad_residual,
        "k_residual": stats.k_residual,
    })
}

/// Convergence study: one row of relative errors per mesh, plus both order
/// fits, as CSV and a JSON twin.
pub fn converge(spec: &ExperimentSpec) -> Result<()> {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut json_rows = Vec::new();
    let mut hs = Vec::new();
    let mut errs: Vec<[f64; 12]> = Vec::new();

    for &k in &spec.k {
        let dt = spec.dt.resolve(k)?[0];
        let cfg = run_config(spec, k, dt);
        let (st, stats) = integrate(cfg, &format!("converge K={k}"));
        let e = relative_errors(&st);
        hs.push(1.0 / k as f64);
        errs.push(e);
        let mut row = vec![k.to_string()];
        row.extend(e.iter().map(|&x| fmt6(x)));
        rows.push(row);
        json_rows.push(json!({
            "k": k,
            "dt": dt,
            "errors": ERROR_COLUMNS.iter().zip(e.iter()).map(|(n, v)| (n.to_string(), json!(v)))
                .collect::<serde_json::Map<String, serde_json::Value>>(),
            "final_step": stats.as_ref().map(stats_json),
        }));
    }

    let mut order_ls_row = vec!["order_ls".to_string()];
    let mut order_lp_row = vec!["order_last".to_string()];
    let mut order_ls = Vec::new();
    let mut order_lp = Vec::new();
    for col in 0..12 {
        let column: Vec<f64> = errs.iter().map(|e| e[col]).collect();
        if hs.len() >= 2 {
            let o_ls = ls_order(&hs, &column);
            let o_lp = last_pair_order(&hs, &column);
            order_ls_row.push(fmt6(o_ls));
            order_lp_row.push(fmt6(o_lp));
            order_ls.push(o_ls);
            order_lp.push(o_lp);
        } else {
            order_ls_row.push(String::new());
            order_lp_row.push(String::new());
        }
    }
    if hs.len() >= 2 {
        rows.push(order_ls_row);
        rows.push(order_lp_row);
    }

    let mut header = vec!["K"];
    header.extend(ERROR_COLUMNS);
    let csv = csv_document(&header, &rows);
    let base = spec.out.join(format!("converge_ex{}", spec.example));
    write(&base.with_extension("csv"), &csv)?;

    let orders = |v: &[f64]| -> serde_json::Value {
        if v.is_empty() {
            serde_json::Value::Null
        } else {
            ERROR_COLUMNS.iter().zip(v.iter()).map(|(n, o)| (n.to_string(), json!(o))).collect()
        }
    };
    let doc = json!({
        "spec": spec.emit(),
        "rows": json_rows,
        "order_ls": orders(&order_ls),
        "order_last": orders(&order_lp),
    });
    write(&base.with_extension("json"), &format!("{:#}\n", doc))?;
    eprintln!("wrote {} and twin json", base.with_extension("csv").display());
    Ok(())
}

/// Filename-safe rendering of a step size: fractions of one keep their
/// denominator, everything else swaps the decimal point for `p`.
fn dt_tag(dt: f64) -> String {
    let inv = 1.0 / dt;
    if (inv - inv.round()).abs() < 1e-9 && inv >= 1.0 {
        format!("1over{}", inv.round() as u64)
    } else {
        format!("{dt}").replace('.', "p")
    }
}

/// Energy mode: one `(n, t, E, F)` series file per (K, Δt) pair.
pub fn energy_study(spec: &ExperimentSpec) -> Result<()> {
    let mut series = Vec::new();
    for &k in &spec.k {
        for dt in spec.dt.resolve(k)? {
            let cfg = run_config(spec, k, dt);
            let label = format!("energy K={k} dt={dt}");
            let start = Instant::now();
            let mut st = Stepper::new(cfg);
            eprintln!("[{label}] setup {:.1}s", start.elapsed().as_secs_f64());
            let mut records: Vec<EnergyRecord> = vec![energy(&st)];
            for _ in 0..cfg.n_steps() {
                st.advance();
                records.push(energy(&st));
            }
            eprintln!("[{label}] done in {:.1}s", start.elapsed().as_secs_f64());

            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| {
                    vec![r.step.to_string(), fmt6(r.t), fmt6(r.energy), fmt6(r.dissipation)]
                })
                .collect();
            let csv = csv_document(&["n", "t", "energy", "dissipation"], &rows);
            let path = spec.out.join(format!("energy_k{k}_dt{}.csv", dt_tag(dt)));
            write(&path, &csv)?;
            eprintln!("wrote {}", path.display());

            let decay_ok = records.windows(2).all(|w| {
                w[1].energy <= w[0].energy + 1e-8 * records[0].energy.max(1e-300)
            });
            series.push(json!({
                "k": k,
                "dt": dt,
                "file": path.file_name().unwrap().to_str(),
                "initial_energy": records[0].energy,
                "final_energy": records.last().unwrap().energy,
                "nonincreasing": decay_ok,
            }));
        }
    }
    let doc = json!({ "spec": spec.emit(), "series": series });
    let path = spec.out.join("energy_summary.json");
    write(&path, &format!("{:#}\n", doc))?;
    Ok(())
}

/// Single run: final-state diagnostics as JSON (errors only when the example
/// has a manufactured solution to compare against).
pub fn single_run(spec: &ExperimentSpec) -> Result<()> {
    let k = *spec.k.last().expect("validated nonempty");
    let dt = spec.dt.resolve(k)?[0];
    let cfg = run_config(spec, k, dt);
    let (st, stats) = integrate(cfg, &format!("run K={k}"));
    let rec = energy(&st);

    let mut doc = json!({
        "spec": spec.emit(),
        "k": k,
        "dt": dt,
        "steps": cfg.n_steps(),
        "final_time": st.state.t,
        "initial_div_residual": st.initial_div_residual,
        "energy": {
            "E": rec.energy,
            "F": rec.dissipation,
            "parts": rec.parts,
        },
        "final_step": stats.as_ref().map(stats_json),
    });
    if spec.example != 3 {
        let e = relative_errors(&st);
        doc["errors"] = ERROR_COLUMNS
            .iter()
            .zip(e.iter())
            .map(|(n, v)| (n.to_string(), json!(v)))
            .collect::<serde_json::Map<String, serde_json::Value>>()
            .into();
    }
    let path = spec.out.join(format!("run_ex{}_k{k}.json", spec.example));
    write(&path, &format!("{:#}\n", doc))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}
