//! Edge decomposition of a graph into `mu` pieces, one around each edge of
//! a maximum matching, every piece a double star `T_{p,q}` or a one-triangle
//! book `G_{p,q,1}`.

use std::fmt;

use crate::graph::{is_maximum, Matching, SimpleGraph};

use super::TheoremError;

/// Shape of a piece relative to its matching edge `{x, y}`: `p` pendants on
/// `x`, `q` on `y`, and `triangles` common neighbours (zero or one).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceShape {
    DoubleStar { p: usize, q: usize },
    Book { p: usize, q: usize },
}

impl PieceShape {
    pub fn p(&self) -> usize {
        match *self {
            PieceShape::DoubleStar { p, .. } | PieceShape::Book { p, .. } => p,
        }
    }

    pub fn q(&self) -> usize {
        match *self {
            PieceShape::DoubleStar { q, .. } | PieceShape::Book { q, .. } => q,
        }
    }
}

impl fmt::Display for PieceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PieceShape::DoubleStar { p, q } => write!(f, "T_{{{p},{q}}}"),
            PieceShape::Book { p, q } => write!(f, "G_{{{p},{q},1}}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub matching_edge: (usize, usize),
    /// Sorted canonical edges.
    pub edges: Vec<(usize, usize)>,
    pub shape: PieceShape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionResult {
    pub pieces: Vec<Piece>,
    /// Reassignment steps taken before the fixpoint.
    pub moves: usize,
}

impl DecompositionResult {
    /// Edge indices of each piece in `g`.
    pub fn edge_indices(&self, g: &SimpleGraph) -> Vec<Vec<usize>> {
        self.pieces
            .iter()
            .map(|p| p.edges.iter().map(|&(u, v)| g.edge_index(u, v).expect("piece edge in graph")).collect())
            .collect()
    }
}

struct Assignment<'a> {
    g: &'a SimpleGraph,
    matching: &'a [(usize, usize)],
    /// Piece owning each edge, by edge index.
    owner: Vec<usize>,
}

impl Assignment<'_> {
    fn owns(&self, j: usize, a: usize, b: usize) -> bool {
        self.g.edge_index(a, b).is_some_and(|k| self.owner[k] == j)
    }

    fn give(&mut self, j: usize, a: usize, b: usize) {
        let k = self.g.edge_index(a, b).expect("edge exists");
        self.owner[k] = j;
    }

    /// Vertices `t` with both `xt` and `yt` owned by piece `j`, ascending.
    fn apexes(&self, j: usize) -> Vec<usize> {
        let (x, y) = self.matching[j];
        self.g.neighbors(x).iter().copied().filter(|&t| t != y && self.owns(j, x, t) && self.owns(j, y, t)).collect()
    }
}

/// Splits `E(g)` into one piece per edge of the maximum matching `matching`.
///
/// Each piece starts as its matching edge with every incident edge not
/// already claimed by an earlier piece. Then, while some piece `j` with
/// matching edge `{x, y}` has a triangle `x y t` whose apex `t` lies on
/// another matching edge `{s, t}` (piece `i`), the two triangle sides `xt`,
/// `yt` are handed to piece `i`. When all four edges between `{x, y}` and
/// `{s, t}` are present the handover is replaced by the split `xs, yt -> j`,
/// `xt, ys -> i`, which leaves neither piece a triangle on these four
/// vertices; the plain handover can cycle forever on `K4`.
pub fn decompose_by_matching(g: &SimpleGraph, matching: &Matching) -> Result<DecompositionResult, TheoremError> {
    if !is_maximum(g, matching) {
        return Err(TheoremError::MatchingNotMaximum);
    }
    let m_edges = matching.edges();
    let mut on_matching: Vec<Option<usize>> = vec![None; g.n()];
    for (j, &(x, y)) in m_edges.iter().enumerate() {
        on_matching[x] = Some(j);
        on_matching[y] = Some(j);
    }
    let mut owner = vec![usize::MAX; g.m()];
    for (j, &(x, y)) in m_edges.iter().enumerate() {
        for v in [x, y] {
            for &w in g.neighbors(v) {
                let k = g.edge_index(v, w).unwrap();
                if owner[k] == usize::MAX {
                    owner[k] = j;
                }
            }
        }
    }
    if owner.contains(&usize::MAX) {
        // an edge missing every matching edge could extend the matching
        return Err(TheoremError::MatchingNotMaximum);
    }
    let mut state = Assignment { g, matching: m_edges, owner };

    let cap = 10 * g.m().max(1);
    let mut moves = 0;
    'search: loop {
        for j in 0..m_edges.len() {
            let (x, y) = m_edges[j];
            for t in state.apexes(j) {
                let Some(i) = on_matching[t] else { continue };
                if moves >= cap {
                    return Err(TheoremError::DecompositionStalled { moves });
                }
                moves += 1;
                let (s0, t0) = m_edges[i];
                let s = if s0 == t { t0 } else { s0 };
                if g.has_edge(x, s) && g.has_edge(y, s) {
                    state.give(j, x, s);
                    state.give(j, y, t);
                    state.give(i, x, t);
                    state.give(i, y, s);
                } else {
                    state.give(i, x, t);
                    state.give(i, y, t);
                }
                continue 'search;
            }
        }
        break;
    }

    let mut pieces = Vec::with_capacity(m_edges.len());
    for (j, &(x, y)) in m_edges.iter().enumerate() {
        let edges: Vec<(usize, usize)> =
            g.edges().iter().enumerate().filter(|(k, _)| state.owner[*k] == j).map(|(_, &e)| e).collect();
        let shape = classify_piece((x, y), &edges).ok_or(TheoremError::BadPieceShape { matching_edge: (x, y) })?;
        pieces.push(Piece { matching_edge: (x, y), edges, shape });
    }
    Ok(DecompositionResult { pieces, moves })
}

/// Recognises `T_{p,q}` or `G_{p,q,1}` around `(x, y)`: every edge meets `x`
/// or `y`, the matching edge is present, and at most one vertex sees both.
pub fn classify_piece((x, y): (usize, usize), edges: &[(usize, usize)]) -> Option<PieceShape> {
    if !edges.contains(&(x.min(y), x.max(y))) {
        return None;
    }
    let mut at_x = Vec::new();
    let mut at_y = Vec::new();
    for &(a, b) in edges {
        if (a, b) == (x.min(y), x.max(y)) {
            continue;
        }
        if a == x || b == x {
            at_x.push(if a == x { b } else { a });
        } else if a == y || b == y {
            at_y.push(if a == y { b } else { a });
        } else {
            return None;
        }
    }
    let common: Vec<usize> = at_x.iter().copied().filter(|v| at_y.contains(v)).collect();
    match common.len() {
        0 => Some(PieceShape::DoubleStar { p: at_x.len(), q: at_y.len() }),
        1 => Some(PieceShape::Book { p: at_x.len() - 1, q: at_y.len() - 1 }),
        _ => None,
    }
}

/// Checks edge-disjointness, coverage, piece count `mu(g)` and every shape tag.
pub fn verify_decomposition(g: &SimpleGraph, result: &DecompositionResult, mu: usize) -> Result<(), String> {
    if result.pieces.len() != mu {
        return Err(format!("{} pieces for matching number {mu}", result.pieces.len()));
    }
    let mut seen = vec![false; g.m()];
    for piece in &result.pieces {
        for &(u, v) in &piece.edges {
            let k = g.edge_index(u, v).ok_or_else(|| format!("({u}, {v}) is not an edge"))?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(format!("edge ({u}, {v}) lies in two pieces"));
            }
        }
        if classify_piece(piece.matching_edge, &piece.edges) != Some(piece.shape) {
            return Err(format!("piece at {:?} is not {}", piece.matching_edge, piece.shape));
        }
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(format!("edge {:?} is in no piece", g.edges()[k]));
    }
    Ok(())
}
