//! Fixture builders shared by the benchmarks.

use homlat_core::order::Poset;

/// The six-element poset used throughout the worked examples.
pub fn fig_poset() -> Poset {
    let names = (1..=6).map(|i| i.to_string()).collect();
    Poset::new(names, vec![(4, 2), (5, 2), (5, 3), (2, 0), (2, 1), (3, 1)]).unwrap()
}

/// An `rows x cols` grid poset; its down-sets number `C(rows+cols, rows)`.
pub fn grid_poset(rows: usize, cols: usize) -> Poset {
    let index = |r: usize, c: usize| r * cols + c;
    let mut covers = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if r + 1 < rows {
                covers.push((index(r, c), index(r + 1, c)));
            }
            if c + 1 < cols {
                covers.push((index(r, c), index(r, c + 1)));
            }
        }
    }
    Poset::unnamed(rows * cols, covers).unwrap()
}
