use crate::graph::Graph;

/// Whether `K_{d,d}` is a (not necessarily induced) subgraph.
pub fn contains_biclique(g: &Graph, d: usize) -> bool {
    find_biclique(g, d).is_some()
}

/// Finds sides `(A, B)` of a `K_{d,d}` subgraph, if any. Exhaustive over
/// `d`-subsets `A` with pruning on the common neighbourhood; meant for small `d`.
pub fn find_biclique(g: &Graph, d: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    if d == 0 {
        return Some((Vec::new(), Vec::new()));
    }
    let candidates: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= d).collect();
    let mut chosen = Vec::with_capacity(d);
    let all: Vec<usize> = g.vertices().collect();
    extend(g, d, &candidates, 0, &mut chosen, &all)
}

fn extend(
    g: &Graph,
    d: usize,
    candidates: &[usize],
    from: usize,
    chosen: &mut Vec<usize>,
    common: &[usize],
) -> Option<(Vec<usize>, Vec<usize>)> {
    if chosen.len() == d {
        return Some((chosen.clone(), common[..d].to_vec()));
    }
    for i in from..candidates.len() {
        if candidates.len() - i < d - chosen.len() {
            break;
        }
        let v = candidates[i];
        let next: Vec<usize> = common.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        if next.len() < d {
            continue;
        }
        chosen.push(v);
        if let Some(found) = extend(g, d, candidates, i + 1, chosen, &next) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}
