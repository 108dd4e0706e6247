// Pushing a set between A and B^c down to a down-set with C_i / D_i.

use cubepaths::compression::{compress_c, compress_d, compress_to_down_set, BoundaryMode};
use cubepaths::cube::{is_down_set, sections};
use cubepaths::{CubeSet, CubeVertex, Result};

fn set(n: usize, members: &[&[usize]]) -> Result<CubeSet> {
    let vs: Vec<CubeVertex> = members
        .iter()
        .map(|e| CubeVertex::from_elements(n, e))
        .collect::<Result<_>>()?;
    CubeSet::from_vertices(n, &vs)
}

pub fn run_example() -> Result<()> {
    let s = set(2, &[&[], &[1, 2]])?;
    let parts = sections(&s, 1)?;
    println!("S = {s:?}");
    println!("  sections at 1: T={:?} U={:?} V={:?} W={:?}", parts.t, parts.u, parts.v, parts.w);
    println!("  C_1(S) = {:?}", compress_c(&s, 1)?);
    println!("  D_1(S) = {:?}", compress_d(&s, 1)?);

    let a = set(4, &[&[]])?;
    let b = set(4, &[&[1, 2, 3, 4], &[2, 3, 4]])?;
    let s = set(4, &[&[], &[1, 2], &[3], &[1, 3, 4], &[2]])?;
    for mode in [BoundaryMode::Edge, BoundaryMode::Vertex] {
        let (down, trace) = compress_to_down_set(&s, &a, &b, mode)?;
        println!("{} descent from {s:?}", mode.as_str());
        for step in &trace {
            println!(
                "  i={} {:?}: {} -> {}",
                step.i, step.choice, step.boundary_before, step.boundary_after
            );
        }
        println!("  result {down:?}, down-set: {}", is_down_set(&down));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
