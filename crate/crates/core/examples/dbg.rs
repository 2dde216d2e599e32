use bnspinor::convergence::{global_gap, local_error, Orthotope};
use bnspinor::Rank;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let n2 = Rank::new(2).unwrap();
    let (err, argmax) = local_error(n2, 15, 3.0).unwrap();
    println!("local_error(2, 15, 3.0) = {err:.17e} at {argmax}");

    for nn in [1usize, 2] {
        let n = Rank::new(nn).unwrap();
        let mut prev: Option<f64> = None;
        for power in [100u64, 400, 1600, 6400, 25600] {
            let (e, am) = local_error(n, power, 2.0).unwrap();
            let mono = match prev { Some(p) => if e < p {"<"} else {"!! NOT DECREASING"}, None => "" };
            println!("local_error({nn}, {power}, 2) = {e:.6e} at {am} {mono}");
            prev = Some(e);
        }
    }
    // slope fits
    for nn in [1usize, 2] {
        let n = Rank::new(nn).unwrap();
        let powers = [100u64, 400, 1600, 6400, 25600];
        let pts: Vec<(f64, f64)> = powers.iter().map(|&p| {
            let (e, _) = local_error(n, p, 2.0).unwrap();
            ((p as f64).ln(), e.ln())
        }).collect();
        let k = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        let slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        println!("n={nn} log-log slope = {slope:.4}");
    }
    println!("local errors took {:?}", t0.elapsed());

    let t1 = Instant::now();
    let n1 = Rank::new(1).unwrap();
    let h1 = Orthotope::new(vec![0.5], vec![1.5]).unwrap();
    for power in [100u64, 400, 1600] {
        let g = global_gap(n1, power, &h1, 1e-7).unwrap();
        println!("gap(n=1, N={power}) = {g:.6e}");
    }
    let h2 = Orthotope::new(vec![0.5, 0.0], vec![1.5, 1.0]).unwrap();
    for power in [100u64, 400, 1600] {
        let g = global_gap(n2, power, &h2, 1e-7).unwrap();
        println!("gap(n=2, N={power}) = {g:.17e}");
    }
    println!("gaps took {:?}", t1.elapsed());
}
