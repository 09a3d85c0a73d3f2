//! Cover-relation DAGs of dominance intervals and their chains.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on the number of chains an enumeration may produce.
pub const DEFAULT_CHAIN_LIMIT: usize = 1_000_000;

/// A saturated chain, stored top-down.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    elements: Vec<Partition>,
}

impl Chain {
    /// Checks that consecutive elements are covers.
    pub fn new(elements: Vec<Partition>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::InvalidArgument("a chain needs at least one element".into()));
        }
        for w in elements.windows(2) {
            if !w[0].covers(&w[1])? {
                return Err(Error::NotACover {
                    lambda: w[0].clone(),
                    mu: w[1].clone(),
                });
            }
        }
        Ok(Chain { elements })
    }

    pub fn elements(&self) -> &[Partition] {
        &self.elements
    }

    /// Number of cover steps.
    pub fn length(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn top(&self) -> &Partition {
        &self.elements[0]
    }

    pub fn bottom(&self) -> &Partition {
        self.elements.last().unwrap()
    }

    pub fn is_saturated(&self) -> bool {
        self.elements
            .windows(2)
            .all(|w| w[0].covers(&w[1]).unwrap_or(false))
    }
}

impl std::fmt::Display for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, p) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(" > ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl Serialize for Chain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Chain", 2)?;
        st.serialize_field("length", &self.length())?;
        let names: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        st.serialize_field("elements", &names)?;
        st.end()
    }
}

/// The interval `[bottom, top]` of `(Γ(n, r), ≥)` with its cover edges and
/// longest-path annotations.
///
/// Nodes are kept in lexicographically decreasing order, which is a
/// topological order from `top`.
#[derive(Clone, Debug)]
pub struct HasseInterval {
    top: Partition,
    bottom: Partition,
    rank: u32,
    nodes: Vec<Partition>,
    index: HashMap<Partition, usize>,
    children: Vec<Vec<usize>>,
    longest_from_top: Vec<usize>,
    longest_to_bottom: Vec<usize>,
}

impl HasseInterval {
    pub fn build(top: &Partition, bottom: &Partition, rank: u32) -> Result<Self> {
        top.check_rank(rank)?;
        if !top.dominates(bottom)? {
            return Err(Error::NotComparable {
                top: top.clone(),
                bottom: bottom.clone(),
            });
        }

        // Every element of the interval is reachable from the top by covers
        // that stay inside it, so a pruned search finds exactly the interval.
        let mut nodes = vec![top.clone()];
        let mut seen: HashMap<Partition, ()> = HashMap::from([(top.clone(), ())]);
        let mut cursor = 0;
        while cursor < nodes.len() {
            let current = nodes[cursor].clone();
            cursor += 1;
            for child in current.down_covers(rank)? {
                if !seen.contains_key(&child) && child.dominates(bottom)? {
                    seen.insert(child.clone(), ());
                    nodes.push(child);
                }
            }
        }
        nodes.sort_unstable_by(|a, b| b.cmp(a));
        let index: HashMap<Partition, usize> =
            nodes.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        let mut children = vec![Vec::new(); nodes.len()];
        let mut parents = vec![Vec::new(); nodes.len()];
        for (u, node) in nodes.iter().enumerate() {
            for child in node.down_covers(rank)? {
                if let Some(&v) = index.get(&child) {
                    children[u].push(v);
                    parents[v].push(u);
                }
            }
        }
        // down_covers is largest-first, so children[u] is ascending by index;
        // parents are filled in increasing u.

        let mut longest_from_top = vec![0usize; nodes.len()];
        for v in 1..nodes.len() {
            longest_from_top[v] = parents[v]
                .iter()
                .map(|&u| longest_from_top[u] + 1)
                .max()
                .expect("non-top node has a parent inside the interval");
        }
        let mut longest_to_bottom = vec![0usize; nodes.len()];
        for u in (0..nodes.len()).rev() {
            longest_to_bottom[u] = children[u]
                .iter()
                .map(|&v| longest_to_bottom[v] + 1)
                .max()
                .unwrap_or(0);
        }

        Ok(HasseInterval {
            top: top.clone(),
            bottom: bottom.clone(),
            rank,
            nodes,
            index,
            children,
            longest_from_top,
            longest_to_bottom,
        })
    }

    pub fn top(&self) -> &Partition {
        &self.top
    }

    pub fn bottom(&self) -> &Partition {
        &self.bottom
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn nodes(&self) -> &[Partition] {
        &self.nodes
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.index.contains_key(p)
    }

    pub fn node_index(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Cover edges `(upper, lower)` in node order.
    pub fn edges(&self) -> Vec<(&Partition, &Partition)> {
        self.children
            .iter()
            .enumerate()
            .flat_map(|(u, cs)| cs.iter().map(move |&v| (&self.nodes[u], &self.nodes[v])))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(Vec::len).sum()
    }

    pub(crate) fn children_of(&self, u: usize) -> &[usize] {
        &self.children[u]
    }

    pub fn longest_from_top(&self, p: &Partition) -> Option<usize> {
        self.node_index(p).map(|i| self.longest_from_top[i])
    }

    pub(crate) fn bottom_index(&self) -> usize {
        self.index[&self.bottom]
    }

    /// `l(top, bottom)`.
    pub fn longest_length(&self) -> usize {
        self.longest_to_bottom[0]
    }

    /// Whether the edge `u -> v` lies on some longest top-to-bottom path.
    pub(crate) fn on_longest_path(&self, u: usize, v: usize) -> bool {
        self.longest_from_top[u] + 1 + self.longest_to_bottom[v] == self.longest_length()
            && self.longest_from_top[v] == self.longest_from_top[u] + 1
    }

    /// Every saturated chain from top to bottom, children visited largest
    /// first.
    pub fn maximal_chains(&self, limit: Option<usize>) -> Result<Vec<Chain>> {
        self.collect_chains(limit, |_, _| true)
    }

    /// The chains of maximal length, enumerated by walking only edges that
    /// extend a longest path.
    pub fn longest_chains(&self, limit: Option<usize>) -> Result<Vec<Chain>> {
        self.collect_chains(limit, |u, v| self.on_longest_path(u, v))
    }

    fn collect_chains(
        &self,
        limit: Option<usize>,
        keep: impl Fn(usize, usize) -> bool,
    ) -> Result<Vec<Chain>> {
        let limit = limit.unwrap_or(DEFAULT_CHAIN_LIMIT);
        let target = self.bottom_index();
        let mut out = Vec::new();
        let mut path = vec![0usize];
        self.walk(0, target, limit, &keep, &mut path, &mut out)?;
        Ok(out)
    }

    fn walk(
        &self,
        u: usize,
        target: usize,
        limit: usize,
        keep: &impl Fn(usize, usize) -> bool,
        path: &mut Vec<usize>,
        out: &mut Vec<Chain>,
    ) -> Result<()> {
        if u == target {
            if out.len() == limit {
                return Err(Error::LimitExceeded {
                    limit,
                    found: out.len(),
                });
            }
            out.push(Chain {
                elements: path.iter().map(|&i| self.nodes[i].clone()).collect(),
            });
            return Ok(());
        }
        for &v in &self.children[u] {
            if keep(u, v) {
                path.push(v);
                self.walk(v, target, limit, keep, path, out)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// The first longest chain in enumeration order, found without
    /// enumerating the rest.
    pub fn a_longest_chain(&self) -> Chain {
        let target = self.bottom_index();
        let mut path = vec![0usize];
        let mut u = 0;
        while u != target {
            u = *self.children[u]
                .iter()
                .find(|&&v| self.on_longest_path(u, v))
                .expect("longest path continues to the bottom");
            path.push(u);
        }
        Chain {
            elements: path.into_iter().map(|i| self.nodes[i].clone()).collect(),
        }
    }

    /// Graphviz rendering, one rank per longest-path level.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{p}\"];");
        }
        let depth = self.longest_length();
        for level in 0..=depth {
            let members: Vec<String> = (0..self.nodes.len())
                .filter(|&i| self.longest_from_top[i] == level)
                .map(|i| format!("n{i}"))
                .collect();
            if !members.is_empty() {
                let _ = writeln!(s, "  {{ rank=same; {}; }}", members.join("; "));
            }
        }
        for (u, cs) in self.children.iter().enumerate() {
            for &v in cs {
                let _ = writeln!(s, "  n{u} -> n{v};");
            }
        }
        s.push_str("}\n");
        s
    }
}

struct LongestMap<'a>(&'a HasseInterval);

impl Serialize for LongestMap<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.nodes.len()))?;
        for (i, p) in self.0.nodes.iter().enumerate() {
            m.serialize_entry(&p.to_string(), &self.0.longest_from_top[i])?;
        }
        m.end()
    }
}

impl Serialize for HasseInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("HasseInterval", 5)?;
        st.serialize_field("top", &self.top.to_string())?;
        st.serialize_field("bottom", &self.bottom.to_string())?;
        let nodes: Vec<String> = self.nodes.iter().map(|p| p.to_string()).collect();
        st.serialize_field("nodes", &nodes)?;
        let edges: Vec<[String; 2]> = self
            .edges()
            .into_iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect();
        st.serialize_field("edges", &edges)?;
        st.serialize_field("longest_from_top", &LongestMap(self))?;
        st.end()
    }
}

/// Builds `[bottom, top]` at rank `r`.
pub fn build_interval(top: &Partition, bottom: &Partition, rank: u32) -> Result<HasseInterval> {
    HasseInterval::build(top, bottom, rank)
}

/// `l(top, bottom)`: the number of covers in a longest chain.
pub fn longest_chain_length(top: &Partition, bottom: &Partition, rank: u32) -> Result<usize> {
    Ok(HasseInterval::build(top, bottom, rank)?.longest_length())
}

pub fn maximal_chains(
    top: &Partition,
    bottom: &Partition,
    rank: u32,
    limit: Option<usize>,
) -> Result<Vec<Chain>> {
    HasseInterval::build(top, bottom, rank)?.maximal_chains(limit)
}

pub fn longest_chains(
    top: &Partition,
    bottom: &Partition,
    rank: u32,
    limit: Option<usize>,
) -> Result<Vec<Chain>> {
    HasseInterval::build(top, bottom, rank)?.longest_chains(limit)
}
