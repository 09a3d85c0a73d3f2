//! Brute-force oracles. Nothing here calls into the library's algorithms;
//! partitions are plain `Vec<u32>` until converted at the boundary.
#![allow(dead_code)]

use dombound::Partition;

/// All partitions of `n` with parts at most `max`, by naive recursion.
pub fn raw_partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=max.min(n) {
        for mut rest in raw_partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn to_partition(v: &[u32]) -> Partition {
    Partition::new(v.iter().copied()).unwrap()
}

pub fn brute_dominates(a: &[u32], b: &[u32]) -> bool {
    let len = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..len {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

/// Cover by definition: strictly above with nothing strictly between.
pub fn brute_covers(a: &[u32], b: &[u32], universe: &[Vec<u32>]) -> bool {
    a != b
        && brute_dominates(a, b)
        && !universe.iter().any(|z| {
            z.as_slice() != a
                && z.as_slice() != b
                && brute_dominates(a, z)
                && brute_dominates(z, b)
        })
}

/// All saturated chains from `top` to `bottom` under the definitional cover
/// relation over `Par(n)`.
pub fn brute_chains(top: &[u32], bottom: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let n: u32 = top.iter().sum();
    let universe = raw_partitions(n, n);
    let mut out = Vec::new();
    let mut path = vec![top.to_vec()];
    fn dfs(
        cur: &[u32],
        bottom: &[u32],
        universe: &[Vec<u32>],
        path: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if cur == bottom {
            out.push(path.clone());
            return;
        }
        for z in universe {
            if brute_dominates(z, bottom) && brute_covers(cur, z, universe) {
                path.push(z.clone());
                dfs(z, bottom, universe, path, out);
                path.pop();
            }
        }
    }
    dfs(top, bottom, &universe, &mut path, &mut out);
    out
}

/// `B(λ)` by enumerating every chain from `(n)`, keeping the longest ones.
pub fn brute_b(lambda: &[u32]) -> u64 {
    let n: u32 = lambda.iter().sum();
    let chains = brute_chains(&[n], lambda);
    let longest = chains.iter().map(Vec::len).max().unwrap();
    chains
        .iter()
        .filter(|c| c.len() == longest)
        .map(|c| 1 + c[1..].iter().map(|p| 1u64 << (p.len() - 2)).sum::<u64>())
        .max()
        .unwrap()
}

/// Number of semistandard Young tableaux of shape `shape` and content
/// `content`, filling cells row by row.
pub fn ssyt_count(shape: &[u32], content: &[u32]) -> u64 {
    let size: u32 = shape.iter().sum();
    if size != content.iter().sum::<u32>() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut left = content.to_vec();

    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u32>>,
        left: &mut Vec<u32>,
    ) -> u64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=left.len() as u32 {
            if left[v as usize - 1] == 0 {
                continue;
            }
            if c > 0 && grid[r][c - 1] > v {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= v {
                continue;
            }
            grid[r][c] = v;
            left[v as usize - 1] -= 1;
            total += fill(idx + 1, cells, grid, left);
            left[v as usize - 1] += 1;
            grid[r][c] = 0;
        }
        total
    }
    fill(0, &cells, &mut grid, &mut left)
}

/// Involutions of an n-set: `I(n) = I(n-1) + (n-1) I(n-2)`.
pub fn involutions(n: u64) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for k in 2..=n {
        let c = b + (k - 1) * a;
        a = b;
        b = c;
    }
    if n == 0 {
        1
    } else {
        b
    }
}
