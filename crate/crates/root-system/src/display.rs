//! Pictorial root output: one row of coefficients along the top chain, with
//! the branch coefficient printed on a second line under the branch vertex
//! for D and E shapes.

use quiver_core::DynkinType;

use crate::Root;

/// Order in which coefficients are printed on the top row, with the optional
/// below-the-line vertex.
fn layout(ty: DynkinType, n: usize) -> (Vec<usize>, Option<usize>) {
    match ty {
        DynkinType::D(_) if n >= 4 => {
            // Chain 1..n-3, then branch n, then n-1; n-2 hangs below n.
            let mut top: Vec<usize> = (1..=n - 3).collect();
            top.push(n);
            top.push(n - 1);
            (top, Some(n - 2))
        }
        DynkinType::E6 | DynkinType::E7 | DynkinType::E8 => {
            // Chain 2..n-3, then n, n-2, 1; n-1 hangs below n.
            let mut top: Vec<usize> = (2..=n - 3).collect();
            top.push(n);
            top.push(n - 2);
            top.push(1);
            (top, Some(n - 1))
        }
        _ => ((1..=n).collect(), None),
    }
}

pub fn pictograph(ty: DynkinType, r: &Root) -> String {
    let n = r.rank();
    let (top, below) = layout(ty, n);
    let cells: Vec<String> = top.iter().map(|&v| r.0[v - 1].to_string()).collect();
    let line = cells.join(" ");
    match below {
        None => line,
        Some(bv) => {
            // Align the branch coefficient under the branch vertex's column.
            let branch_pos = top
                .iter()
                .position(|&v| v == n)
                .expect("branch vertex is always printed");
            let offset: usize = cells[..branch_pos]
                .iter()
                .map(|c| c.len() + 1)
                .sum();
            format!("{line}\n{}{}", " ".repeat(offset), r.0[bv - 1])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d6_two_row_form() {
        let r = Root(vec![1, 1, 2, 1, 1, 2]);
        assert_eq!(pictograph(DynkinType::D(6), &r), "1 1 2 2 1\n      1");
    }

    #[test]
    fn e8_two_row_form() {
        let r = Root(vec![1, 1, 2, 2, 3, 2, 1, 3]);
        assert_eq!(pictograph(DynkinType::E8, &r), "1 2 2 3 3 2 1\n        1");
    }

    #[test]
    fn plain_row_for_type_a() {
        let r = Root(vec![1, 0, 2]);
        assert_eq!(pictograph(DynkinType::A(3), &r), "1 0 2");
    }
}
