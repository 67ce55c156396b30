//! Lists the builtin categories with their fusion rules and dimensions.
//!
//!     cargo run --example catalog

use tubecat::category::builtin_catalog;

fn main() {
    for spec in builtin_catalog() {
        let title = spec.metadata.get("title").map(String::as_str).unwrap_or("");
        println!("{} ({title})  dim = {:.10}", spec.name, spec.global_dim());
        for x in 0..spec.rank() {
            println!("  d({}) = {:.10}", spec.label(x), spec.d(x));
        }
        for (x, y, z, n) in spec.ring.entries() {
            if x <= y && spec.ring.unit() != x && spec.ring.unit() != y {
                println!("  {} x {} -> {} (x{n})", spec.label(x), spec.label(y), spec.label(z));
            }
        }
    }
}
