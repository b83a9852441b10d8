//! Fixed-distance graphs over codeword sets: bipartiteness and connectivity
//! certificates, Cayley-structure verification, and the XOR-translation
//! isomorphism between the distance-4 graphs of the two weight classes.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{express_in_span, BitVector};
use crate::hamming::HammingCode;

/// Dense adjacency is capped at this many vertices (the even-weight class at
/// n = 4 has 1024).
pub const MAX_VERTICES: usize = 1 << 11;

/// An undirected graph on a vertex list, with an edge wherever two vertices
/// are at one fixed Hamming distance. Adjacency rows are bit-packed.
#[derive(Clone, Debug)]
pub struct DistanceGraph {
    vertices: Vec<BitVector>,
    distance: usize,
    rows: Vec<BitVector>,
    edge_count: u64,
}

impl DistanceGraph {
    pub fn build(vertices: Vec<BitVector>, distance: usize) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "distance graph on {} vertices exceeds the dense cap of {MAX_VERTICES}",
                vertices.len()
            )));
        }
        let len = match vertices.first() {
            Some(v) => v.len(),
            None => 0,
        };
        for v in &vertices {
            if v.len() != len {
                return Err(Error::DimensionMismatch(
                    "distance graph vertices must share one length".into(),
                ));
            }
        }
        let distinct: HashSet<&BitVector> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::Domain("distance graph vertices must be distinct".into()));
        }

        let n = vertices.len();
        let rows: Vec<BitVector> = (0..n)
            .into_par_iter()
            .map(|i| {
                let mut row = BitVector::zero(n);
                for j in 0..n {
                    if i != j && vertices[i].xor(&vertices[j]).weight() == distance {
                        row.set(j, true);
                    }
                }
                row
            })
            .collect();
        let degree_sum: u64 = rows.iter().map(|r| r.weight() as u64).sum();
        Ok(DistanceGraph {
            vertices,
            distance,
            rows,
            edge_count: degree_sum / 2,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[BitVector] {
        &self.vertices
    }

    pub fn distance(&self) -> usize {
        self.distance
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].weight()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].iter_ones()
    }

    /// Edges as (i, j) with i < j, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count as usize);
        for i in 0..self.vertex_count() {
            for j in self.neighbors(i) {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// BFS 2-coloring over every component. Returns the colors when the
    /// graph is bipartite.
    pub fn check_bipartite(&self) -> (bool, Option<Vec<u8>>) {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return (false, None);
                    }
                }
            }
        }
        (true, Some(color))
    }

    /// True iff a BFS from vertex 0 reaches every vertex.
    pub fn check_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == n
    }

    /// Check the Cayley property: two vertices are adjacent exactly when
    /// their XOR lies in the generator set.
    pub fn verify_cayley(&self, generators: &[BitVector]) -> bool {
        let gens: HashSet<&BitVector> = generators.iter().collect();
        for i in 0..self.vertex_count() {
            for j in (i + 1)..self.vertex_count() {
                let in_gens = gens.contains(&self.vertices[i].xor(&self.vertices[j]));
                if in_gens != self.adjacent(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Edge-list text form: a header line, then one `i j` pair per line
    /// (0-based, i < j).
    pub fn to_edge_list_string(&self) -> String {
        let mut s = format!(
            "# vertices={} distance={}\n",
            self.vertex_count(),
            self.distance
        );
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }
}

/// Decompose a codeword as a XOR of weight-3 codewords. The returned list
/// is a path certificate: every prefix XOR is a codeword, and consecutive
/// prefixes are at distance exactly 3.
pub fn weight3_path_witness(code: &HammingCode, v: &BitVector) -> Result<Vec<BitVector>> {
    if code.syndrome_index(v)? != 0 {
        return Err(Error::Domain(
            "path witness requires a codeword input".into(),
        ));
    }
    if v.weight() == 0 {
        return Ok(Vec::new());
    }
    if v.weight() == 3 {
        return Ok(vec![v.clone()]);
    }
    let weight3: Vec<BitVector> = code
        .enumerate_codewords()?
        .into_iter()
        .filter(|c| c.weight() == 3)
        .collect();
    let combo = express_in_span(v, &weight3)?.ok_or_else(|| {
        Error::Inconsistency("weight-3 codewords failed to span a codeword".into())
    })?;
    Ok(combo.into_iter().map(|i| weight3[i].clone()).collect())
}

/// The vertex relabeling induced by XOR-translation between the two weight
/// classes: `forward[i] = k` means the i-th odd vertex equals the k-th even
/// vertex XOR `w'`.
#[derive(Clone, Debug)]
pub struct VertexPermutation {
    size: usize,
    forward: Vec<usize>,
}

impl VertexPermutation {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    /// Permute a vector indexed by the even ordering into the odd ordering:
    /// `(Px)_i = x_{forward[i]}`.
    pub fn apply<T: Copy>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.size);
        self.forward.iter().map(|&k| x[k]).collect()
    }

    /// Entrywise check that `A' = P A P^T` for the two adjacency matrices.
    pub fn conjugates(&self, even_graph: &DistanceGraph, odd_graph: &DistanceGraph) -> bool {
        if even_graph.vertex_count() != self.size || odd_graph.vertex_count() != self.size {
            return false;
        }
        for i in 0..self.size {
            for j in 0..self.size {
                if odd_graph.adjacent(i, j) != even_graph.adjacent(self.forward[i], self.forward[j])
                {
                    return false;
                }
            }
        }
        true
    }
}

/// Build the permutation matching `v -> v XOR w'` between the two orderings.
/// `w_prime` must have odd weight, and the orderings must cover the
/// translated sets exactly.
pub fn build_isomorphism(
    even_order: &[BitVector],
    odd_order: &[BitVector],
    w_prime: &BitVector,
) -> Result<VertexPermutation> {
    if w_prime.weight() % 2 == 0 {
        return Err(Error::Domain(
            "isomorphism translation vector must have odd weight".into(),
        ));
    }
    if even_order.len() != odd_order.len() {
        return Err(Error::DimensionMismatch(
            "the two vertex orderings must have equal size".into(),
        ));
    }
    let even_index: std::collections::HashMap<&BitVector, usize> =
        even_order.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut forward = Vec::with_capacity(odd_order.len());
    let mut used = vec![false; even_order.len()];
    for w in odd_order {
        let preimage = w.xor(w_prime);
        let k = *even_index.get(&preimage).ok_or_else(|| {
            Error::Domain(format!(
                "vertex {w} has no translation preimage in the even ordering"
            ))
        })?;
        if used[k] {
            return Err(Error::Domain("orderings contain a repeated vertex".into()));
        }
        used[k] = true;
        forward.push(k);
    }
    Ok(VertexPermutation {
        size: odd_order.len(),
        forward,
    })
}

/// The canonical translation vector: the odd-weight codeword with the
/// smallest integer value. Any odd codeword works; fixing one makes outputs
/// reproducible.
pub fn canonical_w_prime(odd_codewords: &[BitVector]) -> Result<BitVector> {
    odd_codewords
        .iter()
        .min()
        .cloned()
        .ok_or_else(|| Error::Domain("no odd-weight codewords".into()))
}
