use covermap::monodromy::{find_gluing_instructions, uniform_ramification, SearchParams};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let k: usize = args[1].parse().unwrap();
    let r: usize = args[2].parse().unwrap();
    let d: usize = args[3].parse().unwrap();
    let max: usize = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(1);
    let (rho, ok) = uniform_ramification(k, r, d).unwrap();
    println!("rho = {:?}, feasible = {}", rho, ok);
    let t0 = Instant::now();
    let params = SearchParams { max_solutions: max, time_budget: std::time::Duration::from_secs(300) };
    let outcome = find_gluing_instructions(&rho, &params).unwrap();
    println!(
        "found {} solutions in {:.3?} ({} nodes, exhausted={})",
        outcome.solutions.len(),
        t0.elapsed(),
        outcome.nodes,
        outcome.exhausted
    );
    for s in outcome.solutions.iter().take(3) {
        println!("---\n{}", s.to_text());
    }
}
