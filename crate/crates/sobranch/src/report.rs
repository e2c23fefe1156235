//! Runs oracle suites on worker threads and times them.

use std::time::{Duration, Instant};

use sobranch_core::oracle::{run_suite_shard, GridBounds, Suite, SuiteOutcome};

pub struct TimedOutcome {
    pub outcome: SuiteOutcome,
    pub elapsed: Duration,
}

/// Splits the suite into `jobs` shards, one per thread. The merged outcome
/// is the same for every `jobs`.
pub fn run_timed(suite: Suite, bounds: GridBounds, jobs: usize) -> TimedOutcome {
    let jobs = jobs.max(1) as u64;
    let start = Instant::now();
    let outcome = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|k| scope.spawn(move || run_suite_shard(suite, bounds, k, jobs)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite worker panicked"))
            .reduce(SuiteOutcome::merge)
            .expect("at least one shard")
    });
    TimedOutcome {
        outcome,
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_count_does_not_change_outcomes() {
        let bounds = GridBounds {
            max_n: 7,
            max_entry: 2,
        };
        for suite in Suite::ALL {
            let one = run_timed(suite, bounds, 1).outcome;
            let four = run_timed(suite, bounds, 4).outcome;
            assert_eq!(one, four);
            assert!(one.passed());
        }
    }
}
