// Runs a small verification suite and the negative control for the
// directed edge-path statement.

use cubepaths::verify::{
    default_suite, disjoint_pairs, negative_control, run_plan, SweepPlan, TheoremId,
};
use cubepaths::Result;

pub fn run_example() -> Result<()> {
    let plan = SweepPlan::exhaustive(TheoremId::DirEdges, 1..=3);
    let mut first = None;
    let summary = run_plan(&plan, |cert| {
        first.get_or_insert_with(|| cert.to_json_line());
        Ok(())
    })?;
    println!("{}: {summary:?}", plan.theorem);
    if let Some(line) = first {
        println!("  first certificate: {line}");
    }

    for plan in default_suite(20, 42) {
        let summary = run_plan(&plan, |_| Ok(()))?;
        println!(
            "{:<32} n={:?} {:?}: {}/{} passed",
            plan.theorem.as_str(),
            plan.n_range,
            plan.strategy,
            summary.passed,
            summary.total
        );
    }

    let control = negative_control(disjoint_pairs(3)?)?;
    println!(
        "pairs in Q_3 that are not down/up: {}, with fewer directed paths: {}",
        control.pairs_checked, control.strict
    );
    if let Some((a, b, directed, undirected)) = control.witness {
        println!("  e.g. A = {a:?}, B = {b:?}: {directed} directed vs {undirected} undirected");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
