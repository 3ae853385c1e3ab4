//! End-to-end acceptance run: one PASS/FAIL line per criterion, then a
//! non-zero exit if any failed.

use holonomy_cli::criteria::{run_all, SuiteSize};

fn main() {
    let results = run_all(SuiteSize::full());
    println!("acceptance criteria:");
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{}/{} criteria passed", results.len() - failed.len(), results.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
