//! Maximum bipartite matching by augmenting paths.

/// Size of a maximum matching between `left` and `right` vertices joined when `edge(j, k)`.
pub fn max_matching(left: usize, right: usize, edge: impl Fn(usize, usize) -> bool) -> usize {
    let adj: Vec<Vec<usize>> = (0..left)
        .map(|j| (0..right).filter(|&k| edge(j, k)).collect())
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut size = 0;
    for j in 0..left {
        let mut seen = vec![false; right];
        if augment(j, &adj, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(j: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &k in &adj[j] {
        if seen[k] {
            continue;
        }
        seen[k] = true;
        let free = match owner[k] {
            None => true,
            Some(other) => augment(other, adj, owner, seen),
        };
        if free {
            owner[k] = Some(j);
            return true;
        }
    }
    false
}
