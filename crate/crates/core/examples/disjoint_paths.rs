// Edge- and interior-disjoint path families between two sets, with the
// minimum cut read off the residual network.

use cubepaths::compression::BoundaryMode;
use cubepaths::flow::{edge_disjoint_paths, min_boundary_oracle, vertex_disjoint_paths};
use cubepaths::cube::{initial_segment, VertexOrder};
use cubepaths::{CubeSet, CubeVertex, Result};

fn show(paths: &[Vec<u32>], n: usize) {
    for p in paths {
        let vs: Vec<String> = p
            .iter()
            .map(|&m| format!("{:?}", CubeVertex::new(n, m).expect("in range")))
            .collect();
        println!("    {}", vs.join(" -> "));
    }
}

pub fn run_example() -> Result<()> {
    let n = 3;
    let a = CubeSet::from_masks(n, [0])?;
    let b = CubeSet::from_masks(n, [0b111])?;
    let edge = edge_disjoint_paths(&a, &b, false)?;
    println!("∅ to [3]: {} edge-disjoint paths", edge.count);
    show(&edge.family.paths, n);
    edge.family.validate(&a, &b)?;
    edge.cut.verify(&a, &b)?;
    println!("  cut side S = {:?}, |∂_e(S)| = {}", edge.cut.set, edge.cut.cut_size);

    // a down-set and an up-set in Q_4: directed and undirected counts agree
    let n = 4;
    let a = initial_segment(n, 5, VertexOrder::Simplicial)?;
    let b = initial_segment(n, 11, VertexOrder::Simplicial)?.complement();
    for directed in [false, true] {
        let e = edge_disjoint_paths(&a, &b, directed)?;
        let v = vertex_disjoint_paths(&a, &b, directed)?;
        let (oracle, _) = min_boundary_oracle(&a, &b, BoundaryMode::Edge, directed)?;
        println!(
            "ball to top: directed={directed} edge paths {} (min cut {oracle}), interior-disjoint {}",
            e.count, v.count
        );
    }
    let v = vertex_disjoint_paths(&a, &b, false)?;
    println!("  separator {:?}", v.cut.separator.as_ref().expect("vertex witness"));
    show(&v.family.paths, n);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
