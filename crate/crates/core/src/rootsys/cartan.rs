use serde::Deserialize;

use super::roots::root_closure;
use crate::error::{Error, Result};

/// Default bound on the number of positive roots explored before a matrix is
/// declared to be of infinite type.
pub const DEFAULT_ROOT_BOUND: usize = 4096;

/// A validated Cartan matrix of finite type.
///
/// Entries follow the convention `a_ij = <alpha_i^vee, alpha_j>`, so the
/// simple reflection `s_i` sends `alpha_j` to `alpha_j - a_ij alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    matrix: Vec<Vec<i64>>,
    labels: Vec<String>,
    type_name: Option<String>,
}

impl CartanDatum {
    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Classification tag such as `"A2"` or `"A1xB3"`, if the matrix matches
    /// a standard type up to relabeling of the simple roots.
    pub fn type_name(&self) -> Option<&str> {
        self.type_name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    /// Builds a datum from a type string: `A3`, `B2`, `G2`, or a product
    /// such as `A1xA2`.
    pub fn from_type(name: &str) -> Result<Self> {
        let mut blocks = Vec::new();
        for part in name.trim().split(['x', 'X', '*']) {
            blocks.push(standard_matrix(part.trim())?);
        }
        validate_cartan(block_diagonal(&blocks))
    }

    /// Parses `{"matrix": [[...]], "labels": [...]}` or a bare JSON string
    /// holding a type name.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Input {
            Name(String),
            Matrix {
                matrix: Vec<Vec<i64>>,
                #[serde(default)]
                labels: Option<Vec<String>>,
            },
        }
        let input: Input =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        match input {
            Input::Name(name) => Self::from_type(&name),
            Input::Matrix { matrix, labels } => {
                let datum = validate_cartan(matrix)?;
                match labels {
                    Some(labels) => datum.with_labels(labels),
                    None => Ok(datum),
                }
            }
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.rank() {
            return Err(Error::Parse(format!(
                "expected {} labels, got {}",
                self.rank(),
                labels.len()
            )));
        }
        self.labels = labels;
        Ok(self)
    }
}

/// Checks the generalized Cartan conditions and finiteness, and classifies
/// the matrix when it is of a standard type.
pub fn validate_cartan(matrix: Vec<Vec<i64>>) -> Result<CartanDatum> {
    validate_cartan_with_bound(matrix, DEFAULT_ROOT_BOUND)
}

pub fn validate_cartan_with_bound(matrix: Vec<Vec<i64>>, root_bound: usize) -> Result<CartanDatum> {
    let rank = matrix.len();
    if rank == 0 {
        return Err(Error::NotGeneralizedCartan("empty matrix".into()));
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != rank {
            return Err(Error::NotGeneralizedCartan(format!(
                "row {i} has {} entries, expected {rank}",
                row.len()
            )));
        }
    }
    for i in 0..rank {
        if matrix[i][i] != 2 {
            return Err(Error::NotGeneralizedCartan(format!(
                "diagonal entry ({i},{i}) is {}",
                matrix[i][i]
            )));
        }
        for j in 0..rank {
            if i == j {
                continue;
            }
            if matrix[i][j] > 0 {
                return Err(Error::NotGeneralizedCartan(format!(
                    "off-diagonal entry ({i},{j}) is positive"
                )));
            }
            if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                return Err(Error::NotGeneralizedCartan(format!(
                    "entries ({i},{j}) and ({j},{i}) disagree on being zero"
                )));
            }
        }
    }
    root_closure(&matrix, root_bound)?;
    let type_name = classify(&matrix);
    Ok(CartanDatum {
        labels: (1..=rank).map(|i| format!("a{i}")).collect(),
        matrix,
        type_name,
    })
}

/// The standard matrix of an irreducible type such as `"D4"`.
pub fn standard_matrix(name: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::Parse(format!("unknown Cartan type {name:?}"));
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
    let mut m = a_chain(rank);
    match (family, rank) {
        ('A', 1..) => {}
        ('B', 2..) => m[rank - 1][rank - 2] = -2,
        ('C', 2..) => m[rank - 2][rank - 1] = -2,
        ('D', 4..) => {
            m[rank - 1][rank - 2] = 0;
            m[rank - 2][rank - 1] = 0;
            m[rank - 1][rank - 3] = -1;
            m[rank - 3][rank - 1] = -1;
        }
        ('E', 6..=8) => {
            // Bourbaki numbering: 1-3-4-5-..., with 2 attached to 4.
            m = vec![vec![0; rank]; rank];
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..rank - 1).map(|i| (i, i + 1)));
            for i in 0..rank {
                m[i][i] = 2;
            }
            for (i, j) in edges {
                m[i][j] = -1;
                m[j][i] = -1;
            }
        }
        ('F', 4) => m[1][2] = -2,
        ('G', 2) => m[1][0] = -3,
        _ => return Err(bad()),
    }
    Ok(m)
}

fn a_chain(rank: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; rank]; rank];
    for i in 0..rank {
        m[i][i] = 2;
        if i + 1 < rank {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

fn block_diagonal(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let rank: usize = blocks.iter().map(Vec::len).sum();
    let mut m = vec![vec![0; rank]; rank];
    let mut offset = 0;
    for block in blocks {
        for (i, row) in block.iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                m[offset + i][offset + j] = a;
            }
        }
        offset += block.len();
    }
    m
}

fn components(matrix: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let rank = matrix.len();
    let mut seen = vec![false; rank];
    let mut out = Vec::new();
    for start in 0..rank {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            for u in 0..rank {
                if !seen[u] && matrix[v][u] != 0 {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn classify(matrix: &[Vec<i64>]) -> Option<String> {
    let names: Option<Vec<String>> = components(matrix)
        .iter()
        .map(|comp| {
            let sub: Vec<Vec<i64>> = comp
                .iter()
                .map(|&i| comp.iter().map(|&j| matrix[i][j]).collect())
                .collect();
            classify_irreducible(&sub)
        })
        .collect();
    names.map(|n| n.join("x"))
}

fn classify_irreducible(matrix: &[Vec<i64>]) -> Option<String> {
    let rank = matrix.len();
    let mut candidates = vec![format!("A{rank}")];
    if rank >= 2 {
        candidates.push(format!("B{rank}"));
    }
    if rank >= 3 {
        candidates.push(format!("C{rank}"));
    }
    if rank >= 4 {
        candidates.push(format!("D{rank}"));
    }
    match rank {
        2 => candidates.push("G2".into()),
        4 => candidates.push("F4".into()),
        6..=8 => candidates.push(format!("E{rank}")),
        _ => {}
    }
    candidates.into_iter().find(|name| {
        let std = standard_matrix(name).expect("candidate names are valid");
        isomorphic(matrix, &std)
    })
}

/// Is there a permutation `p` with `a[i][j] == b[p(i)][p(j)]` for all `i, j`?
fn isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    fn extend(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for cand in 0..b.len() {
            if used[cand] {
                continue;
            }
            let consistent = map
                .iter()
                .enumerate()
                .all(|(k, &pk)| a[i][k] == b[cand][pk] && a[k][i] == b[pk][cand]);
            if consistent {
                map.push(cand);
                used[cand] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[cand] = false;
                map.pop();
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}
