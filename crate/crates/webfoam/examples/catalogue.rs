// Recompute every stored expectation in the bundled catalogue.

use webfoam::catalogue::{verify_all, ENTRIES};

pub fn main() {
    for (e, report) in ENTRIES.iter().zip(verify_all()) {
        let checks: Vec<String> = report
            .checks
            .iter()
            .map(|c| format!("{} {}", c.quantity, c.actual))
            .collect();
        println!(
            "{:18} {:4} {}",
            e.name,
            if report.ok() { "ok" } else { "FAIL" },
            checks.join(", ")
        );
    }
}
