//! Splitters, smallest modules, maximal modules avoiding an element and
//! primality.
//!
//! Run with `cargo run --example module_algorithms`.

use homrel::modules::{is_module, is_prime, max_modules_excluding, smallest_module, splitters};
use homrel::relation::{from_digraph, Digraph};

fn main() -> Result<(), homrel::error::Error> {
    // two triangles {0,1,2} and {3,4,5} with every vertex of the first
    // joined to 3 and 4, and 5 joined to 0 only
    let g = Digraph::from_edges(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4), (0, 5)],
    )?;
    let h = from_digraph(&g);

    for set in [vec![1, 2], vec![3, 4], vec![0, 1]] {
        let report = splitters(&h, &set)?;
        println!("splitters of {set:?}: {:?} (module: {})", report.splitters, is_module(&h, &set));
    }

    for set in [vec![1, 2], vec![0, 1], vec![3, 5]] {
        println!("smallest module containing {set:?}: {:?}", smallest_module(&h, &set)?);
    }

    for x in [0, 3] {
        println!("maximal modules avoiding {x}: {:?}", max_modules_excluding(&h, x)?.members);
    }

    let c5 = Digraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    println!("the graph is prime: {}", is_prime(&h));
    println!("the 5-cycle is prime: {}", is_prime(&from_digraph(&c5)));
    Ok(())
}
