//! Run every qualitative ordering check and print the verdicts.
//!
//! Each check pins down one relation the physics must satisfy (onsets
//! reversing between resonant and detuned sweeps, density monotone in the
//! gap width, the three coupling regimes, the single onset minimum). They
//! are the same checks the `check` subcommand runs; here the details are
//! printed in full.

use pseudomode::experiments::check_orderings;

fn main() {
    let report = check_orderings(4).expect("all check scenarios propagate");

    for c in &report.checks {
        let verdict = if c.passed { "ok      " } else { "violated" };
        println!("[{verdict}] {}", c.name);
        println!("           {}", c.detail);
    }

    println!();
    if report.all_passed() {
        println!("all {} ordering checks passed", report.checks.len());
    } else {
        let failed = report.checks.iter().filter(|c| !c.passed).count();
        println!("{failed} of {} ordering checks failed", report.checks.len());
        std::process::exit(1);
    }
}
