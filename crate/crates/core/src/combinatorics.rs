//! Partitions, hook shapes, standard tableau counts and `(m,n)`-semistandard
//! tableau counts.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Accepts any weakly decreasing sequence; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return None;
        }
        Some(Self(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `r` in reverse lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn partitions(r: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(r, r, &mut Vec::new(), &mut out);
    out
}

/// `lambda_j <= n` for every row `j > m`.
pub fn is_hook(lambda: &Partition, m: usize, n: usize) -> bool {
    lambda.0.iter().skip(m).all(|&p| p <= n)
}

/// Partitions of `r` fitting in the `(m,n)` hook.
pub fn hook_partitions(m: usize, n: usize, r: usize) -> Vec<Partition> {
    partitions(r).into_iter().filter(|l| is_hook(l, m, n)).collect()
}

/// Number of standard Young tableaux, by the hook-length formula.
pub fn f_lambda(lambda: &Partition) -> u128 {
    let conj = lambda.conjugate();
    let mut num: u128 = (1..=lambda.size() as u128).product();
    let mut hooks: u128 = 1;
    for (i, j) in lambda.cells() {
        hooks *= (lambda.0[i] - j + conj.0[j] - i - 1) as u128;
        let g = gcd(num, hooks);
        num /= g;
        hooks /= g;
    }
    num / hooks
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Number of `(m,n)`-semistandard tableaux of shape `lambda`.
///
/// Letters `1..=m` are even and `m+1..=m+n` odd, ordered by value. Even
/// letters weakly increase along rows and strictly down columns; odd
/// letters strictly increase along rows and weakly down columns.
pub fn d_lambda(lambda: &Partition, m: usize, n: usize) -> u128 {
    if !is_hook(lambda, m, n) {
        return 0;
    }
    let cells = lambda.cells();
    let mut grid: Vec<Vec<usize>> = lambda.0.iter().map(|&l| vec![0; l]).collect();
    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        m: usize,
        letters: usize,
    ) -> u128 {
        let Some(&(i, j)) = cells.get(k) else {
            return 1;
        };
        let left = (j > 0).then(|| grid[i][j - 1]);
        let up = (i > 0).then(|| grid[i - 1][j]);
        let mut count = 0;
        for a in 1..=letters {
            let even = a <= m;
            let ok_row = left.map_or(true, |b| if even { b <= a } else { b < a });
            let ok_col = up.map_or(true, |b| if even { b < a } else { b <= a });
            if ok_row && ok_col {
                grid[i][j] = a;
                count += fill(k + 1, cells, grid, m, letters);
            }
        }
        count
    }
    fill(0, &cells, &mut grid, m, m + n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeCount {
    pub shape: Partition,
    pub f: u128,
    pub d: u128,
}

/// Both sides of `sum_{lambda in H(m,n;r)} f^lambda d_lambda = (m+n)^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionIdentity {
    pub shapes: Vec<ShapeCount>,
    pub sum_fd: u128,
    pub tensor_dim: u128,
    pub holds: bool,
}

impl DimensionIdentity {
    pub fn sum_f2(&self) -> u128 {
        self.shapes.iter().map(|s| s.f * s.f).sum()
    }

    pub fn sum_d2(&self) -> u128 {
        self.shapes.iter().map(|s| s.d * s.d).sum()
    }
}

pub fn dimension_identity(m: usize, n: usize, r: usize) -> DimensionIdentity {
    let shapes: Vec<ShapeCount> = hook_partitions(m, n, r)
        .into_iter()
        .map(|shape| ShapeCount {
            f: f_lambda(&shape),
            d: d_lambda(&shape, m, n),
            shape,
        })
        .collect();
    let sum_fd = shapes.iter().map(|s| s.f * s.d).sum();
    let tensor_dim = ((m + n) as u128).pow(r as u32);
    DimensionIdentity {
        holds: sum_fd == tensor_dim,
        shapes,
        sum_fd,
        tensor_dim,
    }
}
