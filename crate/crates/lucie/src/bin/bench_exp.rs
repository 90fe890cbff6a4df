use std::time::Instant;
fn main() {
    let n = 20_000_000usize;
    let xs: Vec<f64> = (0..n).map(|i| (i as f64 % 7.0) - 3.5).collect();
    let t0 = Instant::now();
    let mut s = 0.0;
    for &x in &xs { s += libm::exp(x); }
    let d1 = t0.elapsed().as_secs_f64();
    let t1 = Instant::now();
    let mut s2 = 0.0;
    for &x in &xs { s2 += x.exp(); }
    let d2 = t1.elapsed().as_secs_f64();
    // silu via libm
    let t2 = Instant::now();
    let mut s3 = 0.0;
    for &x in &xs { s3 += x / (1.0 + libm::exp(-x)); }
    let d3 = t2.elapsed().as_secs_f64();
    println!("libm::exp {:.1} ns/call  std exp {:.1} ns/call  silu(libm) {:.1} ns/call  ({s:.2} {s2:.2} {s3:.2})",
        d1/n as f64*1e9, d2/n as f64*1e9, d3/n as f64*1e9);
}
