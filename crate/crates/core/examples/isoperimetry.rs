// Exhaustive check in Q_3 that initial segments have the smallest edge
// (binary order) and vertex (simplicial order) boundaries for their size.

use cubepaths::boundary::{edge_boundary_size, vertex_boundary};
use cubepaths::cube::{initial_segment, VertexOrder};
use cubepaths::{CubeSet, Result};

pub fn run_example() -> Result<()> {
    let n = 3;
    let total = 1usize << n;
    let mut best_edge = vec![usize::MAX; total + 1];
    let mut best_vertex = vec![usize::MAX; total + 1];
    for bits in 0..1u64 << total {
        let s = CubeSet::from_bits(n, bits)?;
        let m = s.len();
        best_edge[m] = best_edge[m].min(edge_boundary_size(&s));
        best_vertex[m] = best_vertex[m].min(vertex_boundary(&s).len());
    }
    println!("{:>3} {:>9} {:>9} {:>9} {:>9}", "m", "min ∂_e", "segment", "min ∂_v", "segment");
    for m in 0..=total {
        let e = edge_boundary_size(&initial_segment(n, m, VertexOrder::Binary)?);
        let v = vertex_boundary(&initial_segment(n, m, VertexOrder::Simplicial)?).len();
        println!(
            "{m:>3} {:>9} {e:>9} {:>9} {v:>9}",
            best_edge[m], best_vertex[m]
        );
        assert_eq!(best_edge[m], e);
        assert_eq!(best_vertex[m], v);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
