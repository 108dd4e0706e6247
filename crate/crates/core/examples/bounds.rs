// The bound functions e, b, s and the fractional binomial threshold.

use cubepaths::bounds::{
    b_turning_point, fractional_binomial, func_b, func_e, func_s, level_decompose,
    solve_kk_threshold,
};
use cubepaths::json::{fmt_real, rational_string};
use cubepaths::Result;

pub fn run_example() -> Result<()> {
    let n = 4;
    println!("{:>3} {:>14} {:>8} {:>8} {:>12}", "x", "e(x)", "b(x)", "s(x)", "k, alpha");
    for x in 1..=16u128 {
        let d = level_decompose(n, x)?;
        println!(
            "{x:>3} {:>14} {:>8} {:>8} {:>12}",
            fmt_real(func_e(n, x)?),
            rational_string(&func_b(n, x)?),
            rational_string(&func_s(n, x)?),
            format!("{}, {}", d.k, rational_string(&d.alpha))
        );
    }
    println!("b_{n} is largest at x = {}", b_turning_point(n));

    for (m, r) in [(2u128, 2u32), (10, 3), (7, 2)] {
        let x = solve_kk_threshold(m, r)?;
        println!(
            "C(x,{r}) = {m}: x = {}, C(x,{}) = {}",
            fmt_real(x),
            r - 1,
            fmt_real(fractional_binomial(x, r - 1))
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
