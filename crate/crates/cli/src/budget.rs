//! Enumeration budgets from `--budget` and `PROPELLER_BUDGET`.

use std::time::Duration;

use propeller_core::EnumerationBudget;

pub const BUDGET_ENV: &str = "PROPELLER_BUDGET";

/// Applies a spec such as `max_nodes=40,max_cycles=100000,time_ms=5000` on
/// top of `base`. Keys may be omitted; `unlimited` lifts every cap.
pub fn parse_budget(spec: &str, base: EnumerationBudget) -> Result<EnumerationBudget, String> {
    let mut budget = base;
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "unlimited" {
            budget = EnumerationBudget::unlimited();
            continue;
        }
        let (key, value) = item.split_once('=').ok_or_else(|| format!("expected key=value, found `{item}`"))?;
        let number: u64 = value.trim().parse().map_err(|_| format!("`{value}` is not a non-negative integer"))?;
        if number == 0 {
            return Err(format!("{key} must be positive"));
        }
        match key.trim() {
            "max_nodes" => budget.max_nodes = usize::try_from(number).map_err(|e| e.to_string())?,
            "max_cycles" => budget.max_cycles = number,
            "time_ms" => budget.time_cap = Duration::from_millis(number),
            other => return Err(format!("unknown budget key `{other}`")),
        }
    }
    Ok(budget)
}

/// Defaults, overridden by the environment, overridden by the flag.
pub fn resolve_budget(flag: Option<&str>, env: Option<&str>) -> Result<EnumerationBudget, String> {
    let mut budget = EnumerationBudget::default();
    if let Some(spec) = env {
        budget = parse_budget(spec, budget).map_err(|e| format!("{BUDGET_ENV}: {e}"))?;
    }
    if let Some(spec) = flag {
        budget = parse_budget(spec, budget).map_err(|e| format!("--budget: {e}"))?;
    }
    Ok(budget)
}
