//! Independent foam oracle: relation closure over F2.

use std::collections::HashMap;

pub const GRID: u32 = 9;

pub fn index(t: [u32; 3]) -> usize {
    ((t[0] * GRID + t[1]) * GRID + t[2]) as usize
}

/// Values determined by Xie, dot migration and the flag-manifold seeds, by elimination over F2.
///
/// Unknowns are `Θ(t)` for `t` in the grid; a value is determined when some reduced row
/// involves that unknown alone.
pub fn theta_closure() -> HashMap<[u32; 3], u8> {
    let n = (GRID * GRID * GRID) as usize;
    let mut rows: Vec<(Vec<bool>, u8)> = Vec::new();
    let mut rel = |terms: &[[u32; 3]], rhs: u8| {
        let mut r = vec![false; n];
        for &t in terms {
            r[index(t)] ^= true;
        }
        rows.push((r, rhs));
    };
    let inside = |t: [u32; 3]| t.iter().all(|&x| x < GRID);
    for a in 0..=3u32 {
        for b in 0..=3 - a {
            for c in 0..=3 - a - b {
                let mut s = [a, b, c];
                s.sort();
                // degree three from the flag manifold; lower degrees vanish
                let v = (a + b + c == 3 && s == [0, 1, 2]) as u8;
                rel(&[[a, b, c]], v);
            }
        }
    }
    for a in 0..GRID {
        for b in 0..GRID {
            for c in 0..GRID {
                let t = [a, b, c];
                let shift = |i: usize, k: u32| {
                    let mut s = t;
                    s[i] += k;
                    s
                };
                for i in 0..3 {
                    if inside(shift(i, 3)) {
                        rel(&[shift(i, 3), shift(i, 1)], 0);
                    }
                }
                let m = [shift(0, 1), shift(1, 1), shift(2, 1)];
                if m.iter().all(|&s| inside(s)) {
                    rel(&m, 0);
                }
            }
        }
    }
    let mut pivot_row = vec![usize::MAX; n];
    let mut reduced: Vec<(Vec<bool>, u8)> = Vec::new();
    for (mut r, mut rhs) in rows {
        for col in 0..n {
            if r[col] && pivot_row[col] != usize::MAX {
                let (pr, prhs) = &reduced[pivot_row[col]];
                for (x, y) in r.iter_mut().zip(pr) {
                    *x ^= *y;
                }
                rhs ^= prhs;
            }
        }
        if let Some(col) = r.iter().position(|&x| x) {
            for (other, orhs) in reduced.iter_mut() {
                if other[col] {
                    for (x, y) in other.iter_mut().zip(&r) {
                        *x ^= *y;
                    }
                    *orhs ^= rhs;
                }
            }
            pivot_row[col] = reduced.len();
            reduced.push((r, rhs));
        } else {
            assert_eq!(rhs, 0, "relations are inconsistent");
        }
    }
    let mut out = HashMap::new();
    for a in 0..GRID {
        for b in 0..GRID {
            for c in 0..GRID {
                let col = index([a, b, c]);
                if pivot_row[col] == usize::MAX {
                    continue;
                }
                let (r, rhs) = &reduced[pivot_row[col]];
                if r.iter().filter(|&&x| x).count() == 1 {
                    out.insert([a, b, c], *rhs);
                }
            }
        }
    }
    out
}

/// `S(0), S(1)` from bursting the bubble of `Θ(1,0,0), Θ(2,0,0)`, `S(2)` from the flag manifold,
/// then Xie.
pub fn sphere_oracle(closure: &HashMap<[u32; 3], u8>, max: usize) -> Vec<u8> {
    let mut s = vec![closure[&[1, 0, 0]], closure[&[2, 0, 0]], 1];
    while s.len() <= max {
        let l = s.len();
        s.push(s[l - 2]);
    }
    s
}
