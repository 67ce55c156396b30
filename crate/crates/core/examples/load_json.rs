//! Reads a category from a JSON file, or writes a catalog entry out as one.
//!
//!     cargo run --example load_json -- export fib > fib.json
//!     cargo run --example load_json -- fib.json

use std::fs::File;
use std::io::BufReader;

use tubecat::category::{catalog_entry, load_spec};

fn main() -> tubecat::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [cmd, name] if cmd == "export" => {
            println!("{}", catalog_entry(name)?.to_json());
        }
        [path] => {
            let spec = load_spec(BufReader::new(File::open(path)?))?;
            println!("{}: rank {}, dim {:.10}", spec.name, spec.rank(), spec.global_dim());
            for x in 0..spec.rank() {
                println!(
                    "  {} dual {} d = {:.10}",
                    spec.label(x),
                    spec.label(spec.ring.dual(x)),
                    spec.d(x)
                );
            }
        }
        _ => {
            // round trip through the JSON format in memory
            let spec = catalog_entry("ising")?;
            let back = load_spec(spec.to_json().as_bytes())?;
            println!("ising survives a JSON round trip: {}", back == spec);
        }
    }
    Ok(())
}
