use tqf_core::dims::{invariant_dimension, DegreeSpec, DimOptions};
fn main() {
    let opts = DimOptions::default();
    for (p, d) in [(2usize, 6u32), (3, 6), (3, 9)] {
        let t0 = std::time::Instant::now();
        let r = invariant_dimension(p, &DegreeSpec::Total(d), &opts).unwrap();
        println!("dim A{}({}) = {}  [{:?}, primes {:?}]", d, p, r.total, t0.elapsed(), r.primes_used);
    }
}
