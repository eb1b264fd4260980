use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

/// Enumeration limits shared by the subset solvers.
///
/// Exceeding a limit never produces a wrong "exact" answer: solvers either
/// refuse up front or downgrade their certification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest number of fixed-size subsets a flat enumeration may visit.
    pub subsets: u128,
    /// Wall-clock allowance for one solver call.
    pub wall: Duration,
    /// Witnesses kept per component size when assembling disconnected
    /// extremal sets.
    pub top_k: usize,
    /// Largest order for which `eg_bounds` attempts an exact upper bound.
    pub exact_order_limit: usize,
    /// Largest order accepted by the 2^|V| cut sweeps.
    pub sweep_order_limit: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            subsets: 100_000_000,
            wall: Duration::from_secs(60),
            top_k: 16,
            exact_order_limit: 64,
            sweep_order_limit: 24,
        }
    }
}

impl Budget {
    pub fn with_wall(mut self, wall: Duration) -> Self {
        self.wall = wall;
        self
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock {
            deadline: Instant::now().checked_add(self.wall),
            ticks: 0,
            expired: false,
        }
    }
}

/// Cheap deadline check for hot loops; consults the system clock once every
/// 4096 ticks.
#[derive(Debug)]
pub(crate) struct Clock {
    deadline: Option<Instant>,
    ticks: u32,
    expired: bool,
}

impl Clock {
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.expired {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                self.expired = Instant::now() >= deadline;
            }
        }
        self.expired
    }

    pub(crate) fn expired(&self) -> bool {
        self.expired
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(64, 6), 74_974_368);
        assert_eq!(binomial(16, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(24, 12), 2_704_156);
    }
}
