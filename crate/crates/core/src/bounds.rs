//! Moore-type upper bounds on the order of (degree, broadcast-time)
//! networks: the counting recurrence, the derived bound table, and the
//! doubling lower bound from the K_2 product.

use num_bigint::BigUint;

/// Maximum number of vertices reachable in a broadcast call tree hanging
/// off one port: f(d, 0) = 1 and
/// f(d, t) = 1 + sum_{i=1..min(d,t)} f(d, t - i).
pub fn call_tree_bound(degree: u32, rounds: u32) -> BigUint {
    let row = call_tree_row(degree, rounds);
    row[rounds as usize].clone()
}

fn call_tree_row(degree: u32, rounds: u32) -> Vec<BigUint> {
    let mut row: Vec<BigUint> = Vec::with_capacity(rounds as usize + 1);
    row.push(BigUint::from(1u32));
    for t in 1..=rounds as usize {
        let reach = (degree as usize).min(t);
        let mut v = BigUint::from(1u32);
        for i in 1..=reach {
            v += &row[t - i];
        }
        row.push(v);
    }
    row
}

/// The Moore-type bound M(d, t) = 2 f(d - 1, t - 1): an upper bound on the
/// order of any graph with maximum degree d and broadcast time at most t.
/// Requires d, t >= 1.
pub fn moore_bound(degree: u32, rounds: u32) -> BigUint {
    assert!(degree >= 1 && rounds >= 1, "moore_bound needs degree, rounds >= 1");
    call_tree_bound(degree - 1, rounds - 1) * 2u32
}

/// An order-b witness at (d, t) implies an order-2b witness at (d+1, t+1)
/// by taking the product with K_2.
pub fn product_lower_bound(order: &BigUint) -> BigUint {
    order * 2u32
}

/// Matrix of M(d, t) values over inclusive ranges of degree and rounds.
#[derive(Debug, Clone)]
pub struct BoundTable {
    pub degree_min: u32,
    pub degree_max: u32,
    pub rounds_min: u32,
    pub rounds_max: u32,
    values: Vec<Vec<BigUint>>,
}

impl BoundTable {
    pub fn get(&self, degree: u32, rounds: u32) -> &BigUint {
        &self.values[(degree - self.degree_min) as usize][(rounds - self.rounds_min) as usize]
    }

    pub fn degrees(&self) -> impl Iterator<Item = u32> {
        self.degree_min..=self.degree_max
    }

    pub fn rounds(&self) -> impl Iterator<Item = u32> {
        self.rounds_min..=self.rounds_max
    }

    /// Tab-separated rendering with a header row and one row per degree.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("degree");
        for t in self.rounds() {
            out.push_str(&format!("\t{t}"));
        }
        out.push('\n');
        for d in self.degrees() {
            out.push_str(&d.to_string());
            for t in self.rounds() {
                out.push_str(&format!("\t{}", self.get(d, t)));
            }
            out.push('\n');
        }
        out
    }

    /// Aligned text rendering. With `omit_below_diagonal`, entries with
    /// t < d are left blank (they repeat the diagonal).
    pub fn to_pretty(&self, omit_below_diagonal: bool) -> String {
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["d\\t".to_string()];
        header.extend(self.rounds().map(|t| t.to_string()));
        cells.push(header);
        for d in self.degrees() {
            let mut row = vec![d.to_string()];
            for t in self.rounds() {
                if omit_below_diagonal && t < d {
                    row.push(String::new());
                } else {
                    row.push(self.get(d, t).to_string());
                }
            }
            cells.push(row);
        }
        align_columns(&cells)
    }
}

pub(crate) fn align_columns(cells: &[Vec<String>]) -> String {
    let cols = cells.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut widths = vec![0usize; cols];
    for row in cells {
        for (i, c) in row.iter().enumerate() {
            widths[i] = widths[i].max(display_width(c));
        }
    }
    let mut out = String::new();
    for row in cells {
        let mut line = String::new();
        for (i, c) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            let pad = widths[i] - display_width(c);
            line.push_str(&" ".repeat(pad));
            line.push_str(c);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

// Column alignment must ignore ANSI bold markers used for optimal entries.
fn display_width(s: &str) -> usize {
    let mut width = 0;
    let mut in_escape = false;
    for c in s.chars() {
        match (in_escape, c) {
            (false, '\x1b') => in_escape = true,
            (false, _) => width += 1,
            (true, 'm') => in_escape = false,
            (true, _) => {}
        }
    }
    width
}

/// Fill the full bound table for degrees and rounds in `2..=degree_max`
/// and `2..=rounds_max`.
pub fn bound_table(degree_max: u32, rounds_max: u32) -> BoundTable {
    assert!(degree_max >= 2 && rounds_max >= 2, "ranges start at 2");
    let values = (2..=degree_max)
        .map(|d| {
            let row = call_tree_row(d - 1, rounds_max - 1);
            (2..=rounds_max).map(|t| row[(t - 1) as usize].clone() * 2u32).collect()
        })
        .collect();
    BoundTable {
        degree_min: 2,
        degree_max,
        rounds_min: 2,
        rounds_max,
        values,
    }
}
