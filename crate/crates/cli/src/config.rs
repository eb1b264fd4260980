//! `key = value` budget files. Flags override the file, the file
//! overrides the compiled-in defaults.

use std::path::Path;
use std::time::Duration;

use bh_extra::{Budget, Error, Result};

pub fn load(path: &Path) -> Result<Budget> {
    let text = std::fs::read_to_string(path)?;
    parse(&text, Budget::default())
}

pub fn parse(text: &str, mut budget: Budget) -> Result<Budget> {
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: i + 1, msg };
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected key = value, got {line:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        let number = || {
            value
                .parse::<u64>()
                .map_err(|_| err(format!("{key} needs a non-negative integer, got {value:?}")))
        };
        match key {
            "wall_seconds" => budget.wall = Duration::from_secs(number()?),
            "subsets" => budget.subsets = number()? as u128,
            "top_k" => budget.top_k = number()? as usize,
            "exact_order_limit" => budget.exact_order_limit = number()? as usize,
            "sweep_order_limit" => budget.sweep_order_limit = number()? as usize,
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }
    Ok(budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects() {
        let b = parse("# limits\nwall_seconds = 5\ntop_k=3 # fewer\n\n", Budget::default()).unwrap();
        assert_eq!(b.wall, Duration::from_secs(5));
        assert_eq!(b.top_k, 3);
        assert_eq!(b.subsets, Budget::default().subsets);
        assert!(matches!(parse("colour = red", Budget::default()), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("\ntop_k = -1", Budget::default()), Err(Error::Parse { line: 2, .. })));
        assert!(parse("top_k", Budget::default()).is_err());
    }
}
