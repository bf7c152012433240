//! Built-in gluing instructions for every feasible uniform ramification type
//! with `k <= 6`, `d <= 10` that appears in the published table.

use super::{GluingInstructions, RamificationType};

/// One row of the built-in table.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub k: usize,
    pub r: usize,
    pub d: usize,
    pub rho: RamificationType,
    pub sigma: GluingInstructions,
}

/// All twelve `(k, d, rho)` rows with validated gluing instructions.
///
/// Eleven rows are reproduced verbatim. The published `k=6, d=9` row lists
/// only five permutations -- one short of its six branch points -- so that
/// row carries a tuple regenerated by [`find_gluing_instructions`]
/// (super::find_gluing_instructions) and validated like the others.
pub fn builtin_gluing_table() -> Vec<TableRow> {
    let rows: [(usize, usize, usize, &str); 12] = [
        (3, 3, 3, "(1,2,3)\n(1,2,3)\n(1,2,3)"),
        (3, 5, 6, "(1,2,3,4,5)\n(1,3,4,6,2)\n(2,6,3,5,4)"),
        (3, 7, 9, "(1,2,3,4,5,6,7)\n(1,7,6,2,3,8,9)\n(1,9,8,2,5,4,3)"),
        (4, 2, 2, "(1,2)\n(1,2)\n(1,2)\n(1,2)"),
        (4, 3, 4, "(1,2,3)\n(2,3,4)\n(1,2,4)\n(1,2,3)"),
        (4, 4, 6, "(1,2,3,4)\n(2,5,4,3)\n(1,5,6,4)\n(1,5,4,6)"),
        (4, 5, 8, "(1,2,3,4,5)\n(3,6,8,5,4)\n(1,5,4,7,2)\n(2,7,4,8,6)"),
        (
            4,
            6,
            10,
            "(1,2,3,4,5,6)\n(1,7,8,3,5,9)\n(2,10,8,7,6,5)\n(1,9,4,3,8,10)",
        ),
        (5, 3, 5, "(3,4,5)\n(2,3,5)\n(1,5,2)\n(1,2,5)\n(2,4,3)"),
        (
            5,
            5,
            10,
            "(6,7,8,9,10)\n(1,7,3,4,9)\n(1,8,4,3,7)\n(2,5,4,7,6)\n(2,10,9,4,5)",
        ),
        (6, 3, 6, "(1,2,3)\n(2,5,3)\n(3,6,5)\n(3,5,6)\n(1,4,5)\n(3,5,4)"),
        // Regenerated: the published row is missing its sixth permutation.
        (6, 4, 9, ROW_6_9),
    ];
    rows.iter()
        .map(|&(k, r, d, text)| {
            let (rho, feasible) = super::uniform_ramification(k, r, d).expect("r <= d");
            debug_assert!(feasible);
            let sigma = GluingInstructions::parse(text, Some(d)).expect("table row parses");
            TableRow { k, r, d, rho, sigma }
        })
        .collect()
}

/// First tuple produced by the pruned search for `[[1^5,4]]^6` in
/// lexicographic order.
const ROW_6_9: &str = "(6,7,8,9)\n(6,7,9,8)\n(5,6,7,9)\n(3,4,5,6)\n(1,2,3,5)\n(1,4,3,2)";

/// Looks up a table row by `(k, d)`.
pub fn builtin_row(k: usize, d: usize) -> Option<TableRow> {
    builtin_gluing_table().into_iter().find(|row| row.k == k && row.d == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::{check_gluing_conditions, check_rh};

    #[test]
    fn every_row_is_valid() {
        let table = builtin_gluing_table();
        assert_eq!(table.len(), 12);
        for row in &table {
            assert!(check_rh(&row.rho), "k={} d={} fails RH", row.k, row.d);
            assert_eq!(row.sigma.branch_count(), row.k);
            assert_eq!(row.sigma.degree(), row.d);
            let check = check_gluing_conditions(&row.sigma, &row.rho).unwrap();
            assert!(check.ok(), "k={} d={}: {}", row.k, row.d, check);
        }
    }

    #[test]
    fn lookup_by_k_d() {
        let row = builtin_row(5, 10).unwrap();
        assert_eq!(row.r, 5);
        assert_eq!(
            row.sigma.to_text(),
            "(1)(2)(3)(4)(5)(6 7 8 9 10)\n(1 7 3 4 9)(2)(5)(6)(8)(10)\n(1 8 4 3 7)(2)(5)(6)(9)(10)\n(1)(2 5 4 7 6)(3)(8)(9)(10)\n(1)(2 10 9 4 5)(3)(6)(7)(8)\n"
        );
        assert!(builtin_row(6, 3).is_none());
    }
}
