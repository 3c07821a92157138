//! Multigraph generators: configuration-model stub pairing and
//! Barabási–Albert growth.
//!
//! Both generators keep self-loops and parallel edges. A self-loop adds 2 to
//! its node's degree, so `Σ degrees = 2 |edges|` always holds.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::sampling::{generate_degree_sequence, MixingSpec, RngSeed, GROWTH_STREAM, PAIRING_STREAM};
use crate::{Error, Result};

/// Undirected multigraph on nodes `0..n`, stored as an edge list plus the
/// degree of every node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<u64>,
}

fn unordered(u: usize, v: usize) -> (usize, usize) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Degree of every node implied by an edge list.
pub fn count_degrees(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut degrees = vec![0u64; n];
    for &(u, v) in edges {
        degrees[u] += 1;
        degrees[v] += 1;
    }
    degrees
}

impl MultiGraph {
    /// Builds a graph from an edge list; endpoints must be below `n`.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) references a node outside 0..{n}"
            )));
        }
        let edges: Vec<_> = edges.into_iter().map(|(u, v)| unordered(u, v)).collect();
        let degrees = count_degrees(n, &edges);
        Ok(MultiGraph { n, edges, degrees })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u ≤ v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn self_loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// True when the stored degrees match a recount from the edge list.
    pub fn is_consistent(&self) -> bool {
        self.degrees == count_degrees(self.n, &self.edges)
    }
}

/// Pairs stubs uniformly at random: one stub per unit of degree, a uniform
/// shuffle, then consecutive stubs become edges.
pub fn configuration_model(degrees: &[u64], seed: RngSeed) -> Result<MultiGraph> {
    let total: u128 = degrees.iter().map(|&k| k as u128).sum();
    if total % 2 == 1 {
        return Err(Error::OddDegreeSum(total as u64));
    }
    let total = usize::try_from(total)
        .map_err(|_| Error::invalid(format!("degree sum {total} does not fit in memory")))?;

    let mut stubs: Vec<usize> = Vec::new();
    stubs
        .try_reserve_exact(total)
        .map_err(|_| Error::invalid(format!("cannot allocate {total} stubs")))?;
    for (node, &k) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(node, k as usize));
    }

    let mut rng = seed.stream(PAIRING_STREAM);
    stubs.shuffle(&mut rng);

    let edges = stubs
        .chunks_exact(2)
        .map(|pair| unordered(pair[0], pair[1]))
        .collect();
    Ok(MultiGraph {
        n: degrees.len(),
        edges,
        degrees: degrees.to_vec(),
    })
}

/// Randomly stopped linking network: sampled degree sequence followed by
/// configuration-model pairing, both driven by `seed`.
pub fn generate_rsl_network(n: usize, spec: MixingSpec, seed: RngSeed) -> Result<MultiGraph> {
    let seq = generate_degree_sequence(n, spec, seed)?;
    configuration_model(seq.degrees(), seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BAParams {
    /// Links added by each arriving node.
    pub m: usize,
    /// Final node count.
    pub n: usize,
    pub seed: RngSeed,
}

impl BAParams {
    pub fn new(m: usize, n: usize, seed: RngSeed) -> Result<Self> {
        let params = BAParams { m, n, seed };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::invalid("m must be ≥ 1"));
        }
        if self.n <= self.m {
            return Err(Error::invalid(format!(
                "n must be ≥ m+1 = {} for the seed graph",
                self.m + 1
            )));
        }
        Ok(())
    }

    /// `m (n-m-1)` grown links plus the `C(m+1, 2)` seed-graph edges.
    pub fn expected_edge_count(&self) -> usize {
        self.m * (self.n - self.m - 1) + self.m * (self.m + 1) / 2
    }
}

/// Stub list for degree-proportional target selection: node `i` appears
/// once per unit of degree, so a uniform entry is a draw with probability
/// `k_i / Σ k_j`.
#[derive(Debug, Clone, Default)]
pub struct AttachmentPool {
    stubs: Vec<usize>,
}

impl AttachmentPool {
    pub fn with_capacity(stubs: usize) -> Self {
        AttachmentPool {
            stubs: Vec::with_capacity(stubs),
        }
    }

    pub fn from_degrees(degrees: &[u64]) -> Self {
        let mut pool = AttachmentPool::default();
        for (node, &k) in degrees.iter().enumerate() {
            pool.stubs.extend(std::iter::repeat_n(node, k as usize));
        }
        pool
    }

    pub fn total_degree(&self) -> usize {
        self.stubs.len()
    }

    /// Picks a node with probability proportional to its current degree.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<usize> {
        if self.stubs.is_empty() {
            return None;
        }
        Some(self.stubs[rng.random_range(0..self.stubs.len())])
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.stubs.push(u);
        self.stubs.push(v);
    }
}

/// Barabási–Albert growth from a complete graph on `m+1` nodes.
///
/// Each arriving node adds its `m` links one at a time. A link's target is
/// drawn in proportion to current degree, where the arriving node's stubs
/// from its earlier links already count, so self-loops and repeated links
/// are possible.
pub fn generate_ba_network(params: BAParams) -> Result<MultiGraph> {
    params.validate()?;
    let BAParams { m, n, seed } = params;

    let mut edges = Vec::with_capacity(params.expected_edge_count());
    let mut pool = AttachmentPool::with_capacity(2 * params.expected_edge_count());
    for u in 0..=m {
        for v in u + 1..=m {
            edges.push((u, v));
            pool.add_edge(u, v);
        }
    }

    let mut rng = seed.stream(GROWTH_STREAM);
    for arriving in m + 1..n {
        for _ in 0..m {
            let target = pool.sample(&mut rng).expect("seed graph has edges");
            edges.push(unordered(arriving, target));
            pool.add_edge(arriving, target);
        }
    }

    let degrees = count_degrees(n, &edges);
    Ok(MultiGraph { n, edges, degrees })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub k: u64,
    pub count: usize,
    pub fraction: f64,
}

/// Node counts per degree, ascending in `k`, with absent degrees omitted.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeHistogram {
    pub bins: Vec<HistogramBin>,
}

impl DegreeHistogram {
    pub fn from_degrees(degrees: &[u64]) -> Self {
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable();
        let n = sorted.len() as f64;
        let bins = sorted
            .chunk_by(|a, b| a == b)
            .map(|run| HistogramBin {
                k: run[0],
                count: run.len(),
                fraction: run.len() as f64 / n,
            })
            .collect();
        DegreeHistogram { bins }
    }

    pub fn node_count(&self) -> usize {
        self.bins.iter().map(|b| b.count).sum()
    }

    pub fn count(&self, k: u64) -> usize {
        self.bins
            .binary_search_by_key(&k, |b| b.k)
            .map(|i| self.bins[i].count)
            .unwrap_or(0)
    }

    pub fn fraction(&self, k: u64) -> f64 {
        self.bins
            .binary_search_by_key(&k, |b| b.k)
            .map(|i| self.bins[i].fraction)
            .unwrap_or(0.0)
    }

    /// Expands back to the sorted degree multiset.
    pub fn to_degrees(&self) -> Vec<u64> {
        self.bins
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.k, b.count))
            .collect()
    }
}

pub fn degree_histogram(g: &MultiGraph) -> DegreeHistogram {
    DegreeHistogram::from_degrees(g.degrees())
}
