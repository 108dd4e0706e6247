//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use cubepaths::bounds::{func_b, func_e, Rational};
use cubepaths::verify::{
    check, disjoint_pairs, down_up_pairs, negative_control, random_instance, run_plan, Shape,
    SweepPlan, TheoremId,
};
use cubepaths::Result;

const SEED: u64 = 20_240_601;
const E_TOLERANCE: f64 = 1e-9;

struct Tally {
    total: usize,
    failed: usize,
}

impl Tally {
    fn new() -> Self {
        Tally { total: 0, failed: 0 }
    }

    fn add(&mut self, plan: &SweepPlan) -> Result<()> {
        let summary = run_plan(plan, |_| Ok(()))?;
        self.total += summary.total;
        self.failed += summary.failed;
        Ok(())
    }

    fn ok(&self) -> bool {
        self.failed == 0 && self.total > 0
    }

    fn describe(&self) -> String {
        format!("{} instances, {} failed", self.total, self.failed)
    }
}

struct Line {
    pass: bool,
    detail: String,
}

fn timed(limit: Duration, tally: Tally, elapsed: Duration) -> Line {
    let in_time = elapsed <= limit;
    Line {
        pass: tally.ok() && in_time,
        detail: format!(
            "{}; {:.1}s (limit {}s)",
            tally.describe(),
            elapsed.as_secs_f64(),
            limit.as_secs()
        ),
    }
}

fn down_up_sweep(theorem: TheoremId, limit: Duration) -> Result<Line> {
    let pairs3 = down_up_pairs(3)?.len();
    let pairs4 = down_up_pairs(4)?.len();
    let start = Instant::now();
    let mut tally = Tally::new();
    tally.add(&SweepPlan::exhaustive(theorem, 3..=4))?;
    let mut line = timed(limit, tally, start.elapsed());
    line.pass &= pairs3 <= 400 && pairs4 <= 28_224;
    line.detail = format!("{pairs3} pairs in Q_3, {pairs4} in Q_4; {}", line.detail);
    Ok(line)
}

fn criterion_3() -> Result<Line> {
    let mut tally = Tally::new();
    for theorem in [
        TheoremId::CompressionReducesOutEdges,
        TheoremId::CompressionReducesUpNeighbours,
    ] {
        tally.add(&SweepPlan::exhaustive(theorem, 4..=4))?;
        tally.add(&SweepPlan::random(theorem, 5..=7, 10_000, SEED))?;
    }
    let pass = tally.ok() && tally.total == 2 * (65_536 * 4 + 30_000);
    Ok(Line {
        pass,
        detail: tally.describe(),
    })
}

fn exhaustive_q3(theorem: TheoremId) -> Result<Line> {
    let mut tally = Tally::new();
    tally.add(&SweepPlan::exhaustive(theorem, 3..=3))?;
    Ok(Line {
        pass: tally.ok(),
        detail: tally.describe(),
    })
}

fn random_pairs(theorem: TheoremId) -> Result<Line> {
    let mut tally = Tally::new();
    tally.add(&SweepPlan::random(theorem, 4..=7, 1_000, SEED))?;
    Ok(Line {
        pass: tally.ok() && tally.total == 4_000,
        detail: tally.describe(),
    })
}

fn criterion_8() -> Result<Line> {
    let mut exhaustive = Tally::new();
    exhaustive.add(&SweepPlan::exhaustive(TheoremId::Matchings, 3..=3))?;
    let mut random = Tally::new();
    random.add(&SweepPlan::random(TheoremId::Matchings, 4..=6, 1_000, SEED))?;
    Ok(Line {
        pass: exhaustive.ok() && exhaustive.total == 163 && random.ok() && random.total == 3_000,
        detail: format!("exhaustive {}; random {}", exhaustive.describe(), random.describe()),
    })
}

fn criterion_9() -> Result<Line> {
    let mut tally = Tally::new();
    for n in 1..=8usize {
        for r in 1..=n {
            for k in 0..1_000u64 {
                let seed = SEED + (n * 100 + r) as u64 * 1_000 + k;
                let inst = random_instance(n, Shape::LevelFamily { rank: r }, seed)?;
                tally.total += 1;
                if !check(TheoremId::WeakKK, &inst)?.pass {
                    tally.failed += 1;
                }
            }
        }
    }
    Ok(Line {
        pass: tally.ok() && tally.total == 36_000,
        detail: tally.describe(),
    })
}

fn criterion_10() -> Result<Line> {
    let mut edge = Tally::new();
    edge.add(&SweepPlan::exhaustive(TheoremId::EdgeIso, 4..=4))?;
    let mut vertex = Tally::new();
    vertex.add(&SweepPlan::exhaustive(TheoremId::VertexIso, 4..=4))?;
    Ok(Line {
        pass: edge.ok() && vertex.ok() && edge.total == 65_536 && vertex.total == 65_536,
        detail: format!("edge {}; vertex {}", edge.describe(), vertex.describe()),
    })
}

fn criterion_11() -> Result<Line> {
    let e4 = func_e(4, 4)?;
    let e8 = func_e(4, 8)?;
    let b5 = func_b(4, 5)?;
    let pass =
        (e4 - 8.0).abs() <= E_TOLERANCE && (e8 - 8.0).abs() <= E_TOLERANCE && b5 == Rational::from_integer(6);
    Ok(Line {
        pass,
        detail: format!("e_4(4) = {e4}, e_4(8) = {e8}, b_4(5) = {b5}"),
    })
}

fn criterion_12() -> Result<Line> {
    let control = negative_control(disjoint_pairs(3)?)?;
    let detail = match &control.witness {
        Some((a, b, directed, undirected)) => format!(
            "{} of {} non-down/up pairs have fewer directed paths; e.g. A = {a:?}, B = {b:?}: {directed} < {undirected}",
            control.strict, control.pairs_checked
        ),
        None => format!("no strict pair among {}", control.pairs_checked),
    };
    Ok(Line {
        pass: control.strict >= 1,
        detail,
    })
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn Fn() -> Result<Line>>);
    let criteria: Vec<Criterion> = vec![
        (
            "directed edge paths equal undirected (down/up pairs, Q_3 and Q_4)",
            Box::new(|| down_up_sweep(TheoremId::DirEdges, Duration::from_secs(60))),
        ),
        (
            "directed interior-disjoint paths equal undirected (down/up pairs, Q_3 and Q_4)",
            Box::new(|| down_up_sweep(TheoremId::DirectedVertices, Duration::from_secs(120))),
        ),
        ("compressions shrink directed boundaries on average", Box::new(criterion_3)),
        (
            "edge paths equal brute-force min edge cut (Q_3)",
            Box::new(|| exhaustive_q3(TheoremId::EdgeLemma)),
        ),
        (
            "interior-disjoint paths equal |F| plus brute-force vertex cut (Q_3)",
            Box::new(|| exhaustive_q3(TheoremId::VertexObs)),
        ),
        (
            "edge paths at least min{e(|A|), e(|B|), 2^(n-1)} - 1e-6",
            Box::new(|| random_pairs(TheoremId::BlEdgesFull)),
        ),
        (
            "interior-disjoint paths at least min{b(|A|), b(|B|)}",
            Box::new(|| random_pairs(TheoremId::BlFullVertices)),
        ),
        ("matching into the complement at least s(|A|)", Box::new(criterion_8)),
        ("shadow at least C(x, r-1) - 1e-9", Box::new(criterion_9)),
        ("initial segments minimize edge and vertex boundaries (Q_4)", Box::new(criterion_10)),
        ("spot values of e and b", Box::new(criterion_11)),
        ("negative control: some non-down/up pair loses directed paths", Box::new(criterion_12)),
    ];

    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let line = run().unwrap_or_else(|e| Line {
            pass: false,
            detail: format!("error: {e}"),
        });
        if !line.pass {
            failures += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({}; {:.1}s)",
            k + 1,
            if line.pass { "PASS" } else { "FAIL" },
            name,
            line.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
