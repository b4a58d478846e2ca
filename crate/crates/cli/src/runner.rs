use std::ops::Range;
use std::thread;

use realign_core::explore::{BatchRunner, Outcome};

/// Spreads each batch over `workers` scoped threads; worker `w` takes the
/// indices congruent to `w` mod `workers`. Outcomes come back in index order.
#[derive(Debug, Clone, Copy)]
pub struct Threaded {
    workers: u64,
}

impl Threaded {
    pub fn new(workers: usize) -> Self {
        Self {
            workers: workers.max(1) as u64,
        }
    }
}

impl BatchRunner for Threaded {
    fn run(&self, indices: Range<u64>, job: &(dyn Fn(u64) -> Outcome + Sync)) -> Vec<Outcome> {
        if self.workers == 1 {
            return indices.map(job).collect();
        }
        let start = indices.start;
        let mut slots: Vec<Option<Outcome>> = indices.clone().map(|_| None).collect();
        thread::scope(|scope| {
            let handles: Vec<_> = (0..self.workers)
                .map(|lane| {
                    let lane_indices = indices.clone();
                    let workers = self.workers;
                    scope.spawn(move || {
                        lane_indices
                            .filter(|i| i % workers == lane)
                            .map(|i| (i, job(i)))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for handle in handles {
                for (i, outcome) in handle.join().expect("worker panicked") {
                    slots[(i - start) as usize] = Some(outcome);
                }
            }
        });
        slots.into_iter().map(|o| o.expect("every index evaluated")).collect()
    }
}
