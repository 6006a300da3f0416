//! A Tesler matrix is an integral flow on the complete DAG: diagonal entry
//! `a_{i,i}` flows to the last vertex, off-diagonal `a_{i,j}` flows from
//! vertex `i` to vertex `j`.
//!
//! ```sh
//! cargo run --release --example integral_flows
//! ```

use tesler::{from_flow, to_flow, GTMatrix, HookSumVector};

fn main() -> tesler::Result<()> {
    let matrix = GTMatrix::from_rows(
        HookSumVector::ones(3),
        &[vec![0, 1, 0], vec![1, 1], vec![2]],
    )?;
    println!("matrix: {matrix}");

    let flow = to_flow(&matrix);
    println!("flow on {} vertices:", flow.vertices());
    for i in 1..=flow.vertices() {
        for j in (i + 1)..=flow.vertices() {
            let f = flow.flow_between(i, j);
            if f > 0 {
                println!("  {i} -> {j}: {f}");
            }
        }
    }
    let nets: Vec<String> = flow.netflow().iter().map(|v| v.to_string()).collect();
    println!("net flows: ({})", nets.join(", "));

    let back = from_flow(&flow)?;
    println!("round trip returns the matrix: {}", back == matrix);
    Ok(())
}
