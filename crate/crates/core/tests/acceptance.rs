use std::path::Path;

use kahler_core::suite::{run_suite, Corpus, Status, SuiteOptions};

// Runs without the libtest harness so the table is always shown.
fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let corpus = Corpus::load(&dir).expect("corpus loads");
    let report = run_suite(&corpus, &SuiteOptions::default());
    for w in &report.warnings {
        println!("warning: {w}");
    }
    for item in &report.items {
        println!(
            "criterion {:>2}: {} {} ({:.2}s)",
            item.id,
            item.status.as_str(),
            item.title,
            item.elapsed.as_secs_f64()
        );
        for d in &item.details {
            println!("    {d}");
        }
    }
    let passed = report.items.iter().filter(|i| i.status == Status::Pass).count();
    println!("acceptance: {passed}/{} criteria passed", report.items.len());
    if !report.warnings.is_empty() || passed != report.items.len() {
        std::process::exit(1);
    }
}
