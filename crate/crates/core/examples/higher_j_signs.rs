//! Prints b(i, j, k) for j = 3, 4 to show their signs.

use chern_descent_core::CoeffTable;

fn main() {
    let table = CoeffTable::new(6, 4);
    for j in 3..=4 {
        for i in 1..=6 {
            let row: Vec<String> = table
                .row(i, j)
                .unwrap()
                .iter()
                .map(|b| b.to_string())
                .collect();
            println!("j={j} i={i}: {}", row.join(" "));
        }
    }
}
