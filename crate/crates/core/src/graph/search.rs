//! Components, shortest paths, diameters, and induced-path recognition.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use super::set::SolutionSet;
use crate::boolfn::bits::{word_to_string, BitVector};
use crate::error::{Error, Result};

/// Default cap on `|S|` for exact diameters.
pub const EXACT_DIAMETER_BUDGET: usize = 1 << 20;

const UNREACHED: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    /// Label of each vertex, indexed like `SolutionSet::words`.
    pub labels: Vec<usize>,
    /// Smallest word of each component; labels are ordered by it.
    pub representatives: Vec<u64>,
}

impl ComponentLabeling {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count()];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn components(s: &SolutionSet) -> ComponentLabeling {
    let mut parent: Vec<usize> = (0..s.len()).collect();
    for i in 0..s.len() {
        for j in s.neighbors(i).filter(|&j| j > i) {
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    // Words are sorted, so the first vertex met of each class is its
    // smallest member.
    let mut label_of_root = vec![usize::MAX; s.len()];
    let mut labels = Vec::with_capacity(s.len());
    let mut representatives = Vec::new();
    for i in 0..s.len() {
        let r = find(&mut parent, i);
        if label_of_root[r] == usize::MAX {
            label_of_root[r] = representatives.len();
            representatives.push(s.words()[i]);
        }
        labels.push(label_of_root[r]);
    }
    ComponentLabeling {
        labels,
        representatives,
    }
}

/// At most one component; the empty graph counts as connected.
pub fn is_connected(s: &SolutionSet) -> bool {
    components(s).count() <= 1
}

/// BFS distances from vertex `src`, `u32::MAX` when unreachable.
pub fn bfs_distances(s: &SolutionSet, src: usize) -> Vec<u32> {
    bfs(s, src).0
}

fn bfs(s: &SolutionSet, src: usize) -> (Vec<u32>, Vec<usize>) {
    let mut dist = vec![UNREACHED; s.len()];
    let mut parent = vec![usize::MAX; s.len()];
    let mut queue = VecDeque::from([src]);
    dist[src] = 0;
    while let Some(v) = queue.pop_front() {
        for u in s.neighbors(v) {
            if dist[u] == UNREACHED {
                dist[u] = dist[v] + 1;
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    (dist, parent)
}

fn locate(s: &SolutionSet, v: &BitVector, which: &str) -> Result<usize> {
    if v.dim() != s.dim() {
        return Err(Error::LengthMismatch {
            expected: s.dim() as usize,
            got: v.dim() as usize,
        });
    }
    s.index_of(v.word())
        .ok_or_else(|| Error::NotASolution(format!("{which} = {v}")))
}

/// A minimum-length path from `s` to `t`, `None` when they are in
/// different components.
pub fn shortest_path(set: &SolutionSet, s: &BitVector, t: &BitVector) -> Result<Option<Vec<BitVector>>> {
    let si = locate(set, s, "s")?;
    let ti = locate(set, t, "t")?;
    let (dist, parent) = bfs(set, ti);
    if dist[si] == UNREACHED {
        return Ok(None);
    }
    // Walking parents from s towards the BFS root t yields s..t directly.
    let mut path = vec![set.vector(si)];
    let mut v = si;
    while v != ti {
        v = parent[v];
        path.push(set.vector(v));
    }
    Ok(Some(path))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiameterMode {
    Exact,
    LowerBound,
}

pub fn diameter(s: &SolutionSet, mode: DiameterMode) -> Result<u32> {
    diameter_with_budget(s, mode, EXACT_DIAMETER_BUDGET)
}

/// Largest finite distance in `G(S)`, 0 for the empty set.
pub fn diameter_with_budget(s: &SolutionSet, mode: DiameterMode, budget: usize) -> Result<u32> {
    match mode {
        DiameterMode::Exact => {
            if s.len() > budget {
                return Err(Error::BudgetExceeded(format!(
                    "{} vertices exceed the exact-diameter budget of {budget}",
                    s.len()
                )));
            }
            Ok((0..s.len())
                .into_par_iter()
                .map(|v| eccentricity(&bfs_distances(s, v)))
                .max()
                .unwrap_or(0))
        }
        DiameterMode::LowerBound => {
            let labels = components(s);
            let mut best = 0;
            for &rep in &labels.representatives {
                let start = s.index_of(rep).expect("representative is a vertex");
                let d = bfs_distances(s, start);
                let far = farthest(&d);
                best = best.max(eccentricity(&bfs_distances(s, far)));
            }
            Ok(best)
        }
    }
}

fn eccentricity(dist: &[u32]) -> u32 {
    dist.iter().copied().filter(|&d| d != UNREACHED).max().unwrap_or(0)
}

fn farthest(dist: &[u32]) -> usize {
    let mut best = (0, 0);
    for (i, &d) in dist.iter().enumerate() {
        if d != UNREACHED && d > best.0 {
            best = (d, i);
        }
    }
    best.1
}

/// The path order when `G(S)` is a chordless path, starting from the
/// endpoint with the larger word.
pub fn is_induced_path(s: &SolutionSet) -> Option<Vec<BitVector>> {
    match s.len() {
        0 => return None,
        1 => return Some(vec![s.vector(0)]),
        _ => {}
    }
    let degrees: Vec<usize> = (0..s.len()).map(|i| s.degree(i)).collect();
    let ends: Vec<usize> = (0..s.len()).filter(|&i| degrees[i] == 1).collect();
    if ends.len() != 2 || degrees.iter().any(|&d| d == 0 || d > 2) {
        return None;
    }
    let mut order = vec![ends[1]];
    let mut prev = usize::MAX;
    let mut cur = ends[1];
    while let Some(next) = s.neighbors(cur).find(|&u| u != prev) {
        prev = cur;
        cur = next;
        order.push(cur);
    }
    // A cycle elsewhere would leave vertices unvisited.
    if order.len() != s.len() {
        return None;
    }
    Some(order.into_iter().map(|i| s.vector(i)).collect())
}

/// DOT rendering with sorted nodes and edges; `labeling` adds colours.
pub fn export_dot(s: &SolutionSet, labeling: Option<&ComponentLabeling>) -> Result<String> {
    if s.len() > 1 << 16 {
        return Err(Error::TooLarge(s.len()));
    }
    let n = s.dim();
    let mut out = String::from("graph G {\n");
    for (i, &w) in s.words().iter().enumerate() {
        let name = word_to_string(w, n);
        match labeling {
            Some(l) => out.push_str(&format!(
                "  \"{name}\" [component={}, colorscheme=set312, style=filled, fillcolor={}];\n",
                l.labels[i],
                l.labels[i] % 12 + 1
            )),
            None => out.push_str(&format!("  \"{name}\";\n")),
        }
    }
    for (i, &w) in s.words().iter().enumerate() {
        for j in s.neighbors(i).filter(|&j| j > i) {
            out.push_str(&format!(
                "  \"{}\" -- \"{}\";\n",
                word_to_string(w, n),
                word_to_string(s.words()[j], n)
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Summary printed by the command-line `--json` mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphStats {
    pub count: usize,
    pub components: usize,
    pub diameter: u32,
}

pub fn graph_stats(s: &SolutionSet, mode: DiameterMode) -> Result<GraphStats> {
    Ok(GraphStats {
        count: s.len(),
        components: components(s).count(),
        diameter: diameter(s, mode)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: u32, rows: &[&str]) -> SolutionSet {
        SolutionSet::new(n, rows.iter().map(|r| r.parse::<BitVector>().unwrap().word()).collect())
            .unwrap()
    }

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn strings(p: &[BitVector]) -> Vec<String> {
        p.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn component_examples() {
        assert_eq!(components(&set(2, &["00", "11"])).count(), 2);
        assert_eq!(components(&set(2, &["00", "01", "11"])).count(), 1);
        assert_eq!(components(&SolutionSet::empty(2)).count(), 0);
        assert!(is_connected(&SolutionSet::empty(2)));
        assert!(!is_connected(&set(2, &["00", "11"])));
        let l = components(&set(3, &["111", "000", "001", "110"]));
        assert_eq!(l.representatives, vec![0b000, 0b110]);
        assert_eq!(l.labels, vec![0, 0, 1, 1]);
    }

    #[test]
    fn path_examples() {
        let s = set(2, &["00", "01", "11"]);
        let p = shortest_path(&s, &bv("00"), &bv("11")).unwrap().unwrap();
        assert_eq!(strings(&p), ["00", "01", "11"]);
        assert_eq!(shortest_path(&set(2, &["00", "11"]), &bv("00"), &bv("11")).unwrap(), None);
        assert_eq!(strings(&shortest_path(&s, &bv("00"), &bv("00")).unwrap().unwrap()), ["00"]);
        assert!(matches!(
            shortest_path(&s, &bv("10"), &bv("00")),
            Err(Error::NotASolution(_))
        ));
    }

    #[test]
    fn diameter_examples() {
        let s = set(2, &["00", "01", "11"]);
        assert_eq!(diameter(&s, DiameterMode::Exact).unwrap(), 2);
        assert_eq!(diameter(&SolutionSet::empty(3), DiameterMode::Exact).unwrap(), 0);
        let snake = set(4, &["1111", "0111", "0011", "0001", "0000", "0100", "1100"]);
        assert_eq!(diameter(&snake, DiameterMode::Exact).unwrap(), 6);
        assert_eq!(diameter(&snake, DiameterMode::LowerBound).unwrap(), 6);
        assert!(matches!(
            diameter_with_budget(&snake, DiameterMode::Exact, 3),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn induced_path_examples() {
        let p = is_induced_path(&set(2, &["11", "01", "00"])).unwrap();
        assert_eq!(strings(&p), ["11", "01", "00"]);
        assert_eq!(is_induced_path(&set(2, &["00", "01", "10", "11"])), None);
        assert_eq!(strings(&is_induced_path(&set(2, &["00"])).unwrap()), ["00"]);
        // a path plus a disjoint 4-cycle has exactly two degree-1 vertices
        let mixed = set(4, &["0000", "0001", "1100", "1101", "1110", "1111"]);
        assert_eq!(is_induced_path(&mixed), None);
    }

    #[test]
    fn dot_examples() {
        assert_eq!(
            export_dot(&set(2, &["00", "01"]), None).unwrap(),
            "graph G {\n  \"00\";\n  \"01\";\n  \"00\" -- \"01\";\n}\n"
        );
        assert_eq!(export_dot(&SolutionSet::empty(2), None).unwrap(), "graph G {\n}\n");
        let iso = export_dot(&set(2, &["00", "11"]), None).unwrap();
        assert!(!iso.contains("--"));
        let s = set(2, &["00", "11"]);
        let colored = export_dot(&s, Some(&components(&s))).unwrap();
        assert!(colored.contains("component=1"));
    }
}
