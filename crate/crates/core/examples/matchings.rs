// Matchings from a set into its complement against the bound s(|A|).

use cubepaths::bounds::func_s;
use cubepaths::cube::{initial_segment, VertexOrder};
use cubepaths::flow::max_matching_to_complement;
use cubepaths::json::rational_string;
use cubepaths::Result;

pub fn run_example() -> Result<()> {
    let n = 5;
    println!("{:>3} {:>10} {:>10} {:>10}", "|A|", "binary", "simplicial", "s(|A|)");
    for m in 1..=16usize {
        let binary = initial_segment(n, m, VertexOrder::Binary)?;
        let ball = initial_segment(n, m, VertexOrder::Simplicial)?;
        println!(
            "{m:>3} {:>10} {:>10} {:>10}",
            max_matching_to_complement(&binary)?,
            max_matching_to_complement(&ball)?,
            rational_string(&func_s(n as u32, m as u128)?)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
