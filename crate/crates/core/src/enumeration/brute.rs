use crate::brace::{first_brace_violation, make_brace, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{build_group, FiniteGroup};

const BRUTE_FORCE_LIMIT: usize = 5;

/// Every brace on the additive group `g`, found by trying all circle tables
/// whose row `a` is a bijection sending 0 to `a`. Sorted by circle table.
///
/// Independent of the holomorph: rows are only pruned by requiring distinct
/// entries in each column, and candidates are validated as groups and
/// against the brace relation directly.
pub fn brute_force_braces(g: &FiniteGroup) -> Result<Vec<SkewBrace>> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::size_limit("brute-force brace search", n as u128, BRUTE_FORCE_LIMIT as u128));
    }
    let mut starting_with: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for p in all_bijections(n) {
        starting_with[p[0]].push(p);
    }
    let mut table: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut col_used = vec![vec![false; n]; n];
    for (b, used) in col_used.iter_mut().enumerate() {
        used[b] = true;
    }
    let mut out = Vec::new();
    search(g, &starting_with, 1, &mut table, &mut col_used, &mut out);
    out.sort_by_key(|b| b.circle().table_rows());
    Ok(out)
}

/// All bijections of `0..n`, lexicographic.
fn all_bijections(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn search(
    g: &FiniteGroup,
    starting_with: &[Vec<Vec<usize>>],
    a: usize,
    table: &mut Vec<Vec<usize>>,
    col_used: &mut [Vec<bool>],
    out: &mut Vec<SkewBrace>,
) {
    let n = g.order();
    if a == n {
        let Ok(circle) = build_group(table, None) else {
            return;
        };
        if first_brace_violation(g, &circle).is_none() {
            out.push(make_brace(g.clone(), circle).expect("brace relation already checked"));
        }
        return;
    }
    for row in &starting_with[a] {
        if (0..n).any(|b| col_used[b][row[b]]) {
            continue;
        }
        for b in 0..n {
            col_used[b][row[b]] = true;
        }
        table.push(row.clone());
        search(g, starting_with, a + 1, table, col_used, out);
        table.pop();
        for b in 0..n {
            col_used[b][row[b]] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{enumerate_braces, EnumerateOptions};
    use crate::group::builtin_group;

    #[test]
    fn tiny_counts() {
        assert_eq!(brute_force_braces(&builtin_group("C2").unwrap()).unwrap().len(), 1);
        assert_eq!(brute_force_braces(&builtin_group("C3").unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn matches_holomorph_method() {
        for name in ["C1", "C2", "C3", "C4", "V4", "C5"] {
            let g = builtin_group(name).unwrap();
            let mut a: Vec<Vec<Vec<usize>>> =
                brute_force_braces(&g).unwrap().iter().map(|b| b.circle().table_rows()).collect();
            let mut b: Vec<Vec<Vec<usize>>> = enumerate_braces(&g, &EnumerateOptions::default())
                .unwrap()
                .iter()
                .map(|b| b.circle().table_rows())
                .collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "{name}");
        }
    }

    #[test]
    fn refuses_large() {
        assert!(brute_force_braces(&builtin_group("S3").unwrap()).unwrap_err().is_resource_limit());
    }
}
