// Edge and vertex boundaries, directed and undirected, of a few sets in Q_4.

use cubepaths::boundary::{
    directed_edge_boundary_size, directed_vertex_boundary, edge_boundary_size, lower_shadow,
    surface, vertex_boundary,
};
use cubepaths::cube::{initial_segment, is_down_set};
use cubepaths::{CubeSet, CubeVertex, Result, VertexOrder};

pub fn run_example() -> Result<()> {
    let n = 4;
    println!("binary initial segments of Q_{n}");
    println!("{:>4} {:>6} {:>8}", "m", "|∂_e|", "|∂⃗_e|");
    for m in 0..=16 {
        let s = initial_segment(n, m, VertexOrder::Binary)?;
        println!(
            "{m:>4} {:>6} {:>8}",
            edge_boundary_size(&s),
            directed_edge_boundary_size(&s)
        );
    }

    // a set that is not a down-set: directed and undirected boundaries differ
    let top = CubeVertex::from_elements(n, &[1, 2, 3, 4])?;
    let s = CubeSet::from_vertices(n, &[top])?;
    println!(
        "S = {{[4]}}: down-set {}, |∂_e| = {}, |∂⃗_e| = {}, |∂_v| = {}, |∂⃗_v| = {}",
        is_down_set(&s),
        edge_boundary_size(&s),
        directed_edge_boundary_size(&s),
        vertex_boundary(&s).len(),
        directed_vertex_boundary(&s).len()
    );

    let ball = initial_segment(n, 5, VertexOrder::Simplicial)?;
    println!(
        "radius-1 ball: |∂_v| = {}, surface = {}",
        vertex_boundary(&ball).len(),
        surface(&ball).len()
    );

    let pairs: Vec<CubeVertex> = [[1, 2], [1, 3]]
        .iter()
        .map(|e| CubeVertex::from_elements(n, e))
        .collect::<Result<_>>()?;
    let family = CubeSet::from_vertices(n, &pairs)?;
    println!("shadow of {:?} = {:?}", family, lower_shadow(&family)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
