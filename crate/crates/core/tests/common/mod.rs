//! Brute-force oracles shared by the integration tests. None of these go
//! through the library's own enumerators.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tetraposet::{Subposet, Vertex};

/// Every `n×n` alternating sign matrix, built row by row from all
/// `{-1,0,1}` rows whose nonzero entries alternate `1, -1, ..., 1`.
pub fn brute_asms(n: usize) -> Vec<Vec<Vec<i8>>> {
    let mut rows = Vec::new();
    let mut digits = vec![0usize; n];
    loop {
        let row: Vec<i8> = digits.iter().map(|&d| d as i8 - 1).collect();
        let nz: Vec<i8> = row.iter().copied().filter(|&v| v != 0).collect();
        if !nz.is_empty()
            && nz
                .iter()
                .enumerate()
                .all(|(k, &v)| v == if k % 2 == 0 { 1 } else { -1 })
            && nz.len() % 2 == 1
        {
            rows.push(row);
        }
        let mut k = 0;
        while k < n && digits[k] == 2 {
            digits[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        digits[k] += 1;
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(n: usize, rows: &[Vec<i8>], sums: &mut Vec<i32>, current: &mut Vec<Vec<i8>>, out: &mut Vec<Vec<Vec<i8>>>) {
        if current.len() == n {
            if sums.iter().all(|&s| s == 1) {
                out.push(current.clone());
            }
            return;
        }
        for r in rows {
            let ok = sums.iter().zip(r).all(|(&s, &v)| (0..=1).contains(&(s + v as i32)));
            if ok {
                for (s, &v) in sums.iter_mut().zip(r) {
                    *s += v as i32;
                }
                current.push(r.clone());
                go(n, rows, sums, current, out);
                current.pop();
                for (s, &v) in sums.iter_mut().zip(r) {
                    *s -= v as i32;
                }
            }
        }
    }
    go(n, &rows, &mut vec![0; n], &mut current, &mut out);
    out
}

/// Height matrices `t` (`2n×2n`, entries `0..=2n`, weakly decreasing along
/// rows and columns) that are self-complementary,
/// `t[a][b] + t[2n-1-a][2n-1-b] = 2n`, and totally symmetric: symmetric, and
/// `c < t[a][b]` iff `b < t[a][c]` (together these generate all coordinate
/// permutations of the 3D cell set).
pub fn brute_tsscpps(n: usize) -> Vec<Vec<Vec<u32>>> {
    let m = 2 * n;
    let mut t = vec![vec![0u32; m]; m];
    let mut out = Vec::new();
    fn go(n: usize, cell: usize, t: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        let m = 2 * n;
        if cell == m * m {
            out.push(t.clone());
            return;
        }
        let (a, b) = (cell / m, cell % m);
        let hi = [a.checked_sub(1).map(|p| t[p][b]), b.checked_sub(1).map(|p| t[a][p])]
            .into_iter()
            .flatten()
            .min()
            .unwrap_or(m as u32);
        // Forced values from cells already filled.
        let mut forced = None;
        if b < a {
            forced = Some(t[b][a]);
        }
        let (ca, cb) = (m - 1 - a, m - 1 - b);
        if (ca, cb) < (a, b) {
            let v = m as u32 - t[ca][cb];
            if forced.is_some_and(|f| f != v) {
                return;
            }
            forced = Some(v);
        }
        // Complement of the transpose, when it was filled earlier.
        if (cb, ca) < (a, b) {
            let v = m as u32 - t[cb][ca];
            if forced.is_some_and(|f| f != v) {
                return;
            }
            forced = Some(v);
        }
        let range = match forced {
            Some(v) => v..=v,
            None => 0..=hi,
        };
        for v in range {
            if v > hi {
                break;
            }
            if (0..b).any(|c| ((c as u32) < v) != ((b as u32) < t[a][c])) {
                continue;
            }
            t[a][b] = v;
            go(n, cell + 1, t, out);
        }
        t[a][b] = 0;
    }
    go(n, 0, &mut t, &mut out);
    out
}

/// Whether the 3D cell set of a height matrix is invariant under all
/// coordinate permutations.
pub fn totally_symmetric(t: &[Vec<u32>]) -> bool {
    let m = t.len();
    let inside = |a: usize, b: usize, c: usize| (c as u32) < t[a][b];
    (0..m).all(|a| {
        (0..m).all(|b| {
            (0..m).all(|c| {
                let v = inside(a, b, c);
                v == inside(b, a, c) && v == inside(a, c, b) && v == inside(c, b, a)
            })
        })
    })
}

/// Order ideals found by testing every subset of the vertex set.
pub fn brute_ideals(p: &Subposet) -> Vec<BTreeSet<Vertex>> {
    let vs = p.vertices();
    assert!(vs.len() <= 20, "subset enumeration only for tiny posets");
    let mut out = Vec::new();
    for mask in 0u32..1 << vs.len() {
        let members: BTreeSet<Vertex> = (0..vs.len()).filter(|&k| mask >> k & 1 == 1).map(|k| vs[k]).collect();
        let down_closed = members
            .iter()
            .all(|&v| vs.iter().all(|&u| !p.lt(u, v) || members.contains(&u)));
        if down_closed {
            out.push(members);
        }
    }
    out
}
