//! Directed friendship network storage, the local-average belief operator,
//! degree bookkeeping, and the random-network generator used by the
//! simulation study.
//!
//! Out-links are stored as compressed adjacency (offsets plus a flat index
//! array); every equilibrium map only needs sparse row sweeps, so one
//! iteration costs O(edges). In-links are mirrored at construction for the
//! popularity ranking and for the sparse equilibrium Jacobians.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::stream::RandomStream;
use crate::{Error, Result};

/// Immutable directed network over individuals `0..n`.
///
/// Individual `i` nominates the friends in `friends(i)`; `i` never appears in
/// its own list and lists carry no duplicates. Isolated individuals
/// (no out-links) are allowed: their peer term is defined as zero.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DirectedNetwork {
    n: usize,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    in_offsets: Vec<usize>,
    in_targets: Vec<usize>,
    max_degree_bound: usize,
}

impl DirectedNetwork {
    /// Build from per-individual out-link lists. `max_degree_bound` defaults
    /// to the maximum observed out-degree.
    pub fn from_out_links(links: &[Vec<usize>], max_degree_bound: Option<usize>) -> Result<Self> {
        let n = links.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        let mut max_deg = 0usize;
        let mut seen = vec![usize::MAX; n];
        for (i, list) in links.iter().enumerate() {
            for &j in list {
                if j >= n {
                    return Err(Error::InvalidNetwork {
                        detail: format!("friend index {j} out of range for n={n}"),
                    });
                }
                if j == i {
                    return Err(Error::InvalidNetwork {
                        detail: format!("self-loop at individual {i}"),
                    });
                }
                if seen[j] == i {
                    return Err(Error::InvalidNetwork {
                        detail: format!("duplicate friend {j} for individual {i}"),
                    });
                }
                seen[j] = i;
                targets.push(j);
            }
            max_deg = max_deg.max(list.len());
            offsets.push(targets.len());
        }
        let bound = max_degree_bound.unwrap_or(max_deg);
        if max_deg > bound {
            return Err(Error::InvalidNetwork {
                detail: format!("observed degree {max_deg} exceeds bound {bound}"),
            });
        }
        let (in_offsets, in_targets) = invert(n, &offsets, &targets);
        Ok(DirectedNetwork {
            n,
            offsets,
            targets,
            in_offsets,
            in_targets,
            max_degree_bound: bound,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Friend list F_i (out-links), ascending order not required but
    /// guaranteed by the generator and the CSV loader.
    #[inline]
    pub fn friends(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Individuals that nominate `i` (in-links).
    #[inline]
    pub fn nominators(&self, i: usize) -> &[usize] {
        &self.in_targets[self.in_offsets[i]..self.in_offsets[i + 1]]
    }

    /// Out-degree N_i.
    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    /// In-degree: number of friend nominations received.
    #[inline]
    pub fn in_degree(&self, i: usize) -> usize {
        self.in_offsets[i + 1] - self.in_offsets[i]
    }

    pub fn max_degree_bound(&self) -> usize {
        self.max_degree_bound
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    /// All directed edges as (source, target) pairs in storage order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.friends(i).iter().map(move |&j| (i, j)))
    }

    /// Local average over the friend set: out_i = mean of `values[j]` over
    /// j in F_i, and 0 for individuals without friends.
    pub fn local_average(&self, values: &[f64]) -> Result<Vec<f64>> {
        if values.len() != self.n {
            return Err(Error::DimensionMismatch {
                what: "local_average values",
                expected: self.n,
                got: values.len(),
            });
        }
        let mut out = vec![0.0; self.n];
        self.local_average_into(values, &mut out);
        Ok(out)
    }

    /// Allocation-free variant for solver loops.
    #[inline]
    pub fn local_average_into(&self, values: &[f64], out: &mut [f64]) {
        debug_assert_eq!(values.len(), self.n);
        debug_assert_eq!(out.len(), self.n);
        for i in 0..self.n {
            let friends = self.friends(i);
            if friends.is_empty() {
                out[i] = 0.0;
            } else {
                let mut acc = 0.0;
                for &j in friends {
                    acc += values[j];
                }
                out[i] = acc / friends.len() as f64;
            }
        }
    }

    /// Local average for a single individual.
    #[inline]
    pub fn local_average_at(&self, values: &[f64], i: usize) -> f64 {
        let friends = self.friends(i);
        if friends.is_empty() {
            return 0.0;
        }
        let mut acc = 0.0;
        for &j in friends {
            acc += values[j];
        }
        acc / friends.len() as f64
    }

    /// Indices sorted by descending in-degree (friend nominations received),
    /// ties broken by ascending index. Used to pick "most popular"
    /// counterfactual targets.
    pub fn in_degree_ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.n).collect();
        idx.sort_by(|&a, &b| {
            self.in_degree(b)
                .cmp(&self.in_degree(a))
                .then(a.cmp(&b))
        });
        idx
    }

    /// Validate the stored invariants (used by loaders and tests).
    pub fn validate(&self) -> Result<()> {
        let mut seen = vec![usize::MAX; self.n];
        for i in 0..self.n {
            if self.degree(i) > self.max_degree_bound {
                return Err(Error::InvalidNetwork {
                    detail: format!("degree of {i} exceeds bound"),
                });
            }
            for &j in self.friends(i) {
                if j >= self.n || j == i {
                    return Err(Error::InvalidNetwork {
                        detail: format!("bad friend index {j} at {i}"),
                    });
                }
                if seen[j] == i {
                    return Err(Error::InvalidNetwork {
                        detail: format!("duplicate friend {j} at {i}"),
                    });
                }
                seen[j] = i;
            }
        }
        Ok(())
    }
}

fn invert(n: usize, offsets: &[usize], targets: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut counts = vec![0usize; n + 1];
    for &t in targets {
        counts[t + 1] += 1;
    }
    for i in 0..n {
        counts[i + 1] += counts[i];
    }
    let in_offsets = counts.clone();
    let mut cursor = counts;
    let mut in_targets = vec![0usize; targets.len()];
    for i in 0..n {
        for &j in &targets[offsets[i]..offsets[i + 1]] {
            in_targets[cursor[j]] = i;
            cursor[j] += 1;
        }
    }
    (in_offsets, in_targets)
}

/// Random directed network: each individual draws a degree uniformly from
/// {0, ..., max_degree} and picks that many distinct friends uniformly from
/// the other n-1 individuals. No symmetry is imposed.
pub fn generate_random_network(
    n: usize,
    max_degree: usize,
    rng: &mut RandomStream,
) -> Result<DirectedNetwork> {
    if n <= max_degree {
        return Err(Error::InvalidInput {
            detail: format!("need n > max_degree, got n={n}, max_degree={max_degree}"),
        });
    }
    let mut links: Vec<Vec<usize>> = Vec::with_capacity(n);
    for i in 0..n {
        let degree = rng.gen_range(0..=max_degree);
        let mut picks: Vec<usize> = rand::seq::index::sample(rng, n - 1, degree)
            .into_iter()
            .map(|j| if j >= i { j + 1 } else { j })
            .collect();
        picks.sort_unstable();
        links.push(picks);
    }
    DirectedNetwork::from_out_links(&links, Some(max_degree))
}
