//! Work caps from the `KOROLAT_BUDGET` environment variable.
//!
//! The value is either one integer applied to every cap, or comma-separated
//! `key=value` pairs over the keys `lattice`, `discrepancy`, `expsum` and
//! `search`; keys that are not named keep their defaults.

use korolat_core::Budget;

use crate::error::CliError;

pub const BUDGET_VAR: &str = "KOROLAT_BUDGET";

fn parse_cap(key: &str, value: &str) -> Result<u64, CliError> {
    value
        .trim()
        .replace('_', "")
        .parse()
        .map_err(|_| CliError::input(format!("{BUDGET_VAR}: bad value {value:?} for {key}")))
}

pub fn parse_budget(text: &str) -> Result<Budget, CliError> {
    let text = text.trim();
    if !text.contains('=') {
        return Ok(Budget::uniform(parse_cap("all", text)?));
    }
    let mut budget = Budget::DEFAULT;
    for pair in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| CliError::input(format!("{BUDGET_VAR}: expected key=value, got {pair:?}")))?;
        let key = key.trim();
        let cap = parse_cap(key, value)?;
        match key {
            "lattice" => budget.lattice = cap,
            "discrepancy" => budget.discrepancy = cap,
            "expsum" => budget.expsum = cap,
            "search" => budget.search = cap,
            "all" => budget = Budget::uniform(cap),
            _ => return Err(CliError::input(format!("{BUDGET_VAR}: unknown key {key:?}"))),
        }
    }
    Ok(budget)
}

/// The default budget, overridden by the environment when set.
pub fn budget_from_env() -> Result<Budget, CliError> {
    match std::env::var(BUDGET_VAR) {
        Ok(text) => parse_budget(&text),
        Err(std::env::VarError::NotPresent) => Ok(Budget::DEFAULT),
        Err(e) => Err(CliError::input(format!("{BUDGET_VAR}: {e}"))),
    }
}
