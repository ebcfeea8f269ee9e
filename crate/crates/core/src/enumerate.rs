//! Isomorph-free exhaustive generation of k-uniform hypergraphs.
//!
//! Edge sets are bitmasks over the lexicographic list of k-subsets of
//! `{0..n}`. The canonical representative of an isomorphism class is the
//! orbit-maximal mask under the induced S_n action, generated by orderly
//! search: children of a canonical mask add one edge below its lowest
//! set bit, and a child survives iff it is itself orbit-maximal.
//!
//! Invariant making the search exhaustive: deleting the lowest set bit
//! of an orbit-maximal mask yields an orbit-maximal mask. (If some
//! permutation beat the parent, appending the image of the lowest edge
//! would beat the child at the same leading bit, contradicting the
//! child's maximality.)
//!
//! Per-node state caches every permutation image of the current mask,
//! so a child's canonicity test is one table lookup, one OR and one
//! compare per permutation.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::hypergraph::Hypergraph;
use crate::scalar::factorial;

/// The lexicographic list of k-subsets of `{0..n}` together with the
/// S_n action on their indices.
pub struct EdgeSpace {
    k: usize,
    n: usize,
    subsets: Vec<Vec<usize>>,
    /// `perm_edge[p][e]` = index of the image of edge `e` under
    /// permutation `p` (identity excluded)
    perm_edge: Vec<Vec<u8>>,
}

fn k_subsets(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // next combination in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    // Heap's algorithm, iterative
    let mut c = vec![0usize; n];
    out.push(cur.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                cur.swap(0, i);
            } else {
                cur.swap(c[i], i);
            }
            out.push(cur.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

impl EdgeSpace {
    pub fn new(k: usize, n: usize) -> Self {
        assert!(k >= 2 && n >= k, "need n >= k >= 2");
        let subsets = k_subsets(k, n);
        assert!(subsets.len() <= 128, "edge slots must fit a 128-bit mask");
        let index: BTreeMap<&[usize], usize> = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let mut perm_edge = Vec::new();
        for p in permutations(n) {
            if p.iter().enumerate().all(|(i, &v)| i == v) {
                continue; // identity never beats anything
            }
            let mut table = Vec::with_capacity(subsets.len());
            for s in &subsets {
                let mut img: Vec<usize> = s.iter().map(|&v| p[v]).collect();
                img.sort_unstable();
                table.push(index[img.as_slice()] as u8);
            }
            perm_edge.push(table);
        }
        Self {
            k,
            n,
            subsets,
            perm_edge,
        }
    }

    pub fn num_slots(&self) -> usize {
        self.subsets.len()
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.subsets[i]
    }

    /// Materializes the hypergraph of an edge-index list on all `n`
    /// vertices (isolated vertices kept).
    pub fn hypergraph(&self, edges: &[usize]) -> Hypergraph {
        let es: Vec<Vec<usize>> = edges.iter().map(|&e| self.subsets[e].clone()).collect();
        Hypergraph::new(self.k, self.n, es).expect("edges come from the k-subset list")
    }

    /// Number of isomorphism classes of edge subsets (including the
    /// empty one), by Burnside's lemma over the S_n action. Independent
    /// oracle for the orderly generator.
    pub fn class_count_burnside(&self) -> BigUint {
        let slots = self.num_slots();
        let mut total = BigUint::zero();
        // identity contributes 2^slots
        total += BigUint::from(1u32) << slots;
        for table in &self.perm_edge {
            let mut seen = vec![false; slots];
            let mut cycles = 0usize;
            for s in 0..slots {
                if seen[s] {
                    continue;
                }
                cycles += 1;
                let mut v = s;
                while !seen[v] {
                    seen[v] = true;
                    v = table[v] as usize;
                }
            }
            total += BigUint::from(1u32) << cycles;
        }
        let order = factorial(self.n).to_biguint().expect("positive");
        let (q, r) = num_integer::Integer::div_rem(&total, &order);
        debug_assert!(r.is_zero());
        q
    }

    /// Visits one orbit-maximal representative of every edge-subset
    /// class (the empty subset included), passing the sorted edge-index
    /// list. Returns the number of classes visited.
    pub fn for_each_canonical(&self, mut f: impl FnMut(&[usize])) -> u64 {
        let slots = self.num_slots();
        let nperm = self.perm_edge.len();
        if slots <= 64 {
            let mut images = vec![vec![0u64; nperm]; slots + 1];
            let mut edges = Vec::with_capacity(slots);
            self.dfs64(0u64, slots, 0, &mut images, &mut edges, &mut f)
        } else {
            let mut images = vec![vec![0u128; nperm]; slots + 1];
            let mut edges = Vec::with_capacity(slots);
            self.dfs128(0u128, slots, 0, &mut images, &mut edges, &mut f)
        }
    }

    fn dfs64(
        &self,
        mask: u64,
        low: usize,
        depth: usize,
        images: &mut Vec<Vec<u64>>,
        edges: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) -> u64 {
        f(edges);
        let mut count = 1u64;
        let nperm = self.perm_edge.len();
        for e in 0..low {
            let child = mask | (1u64 << e);
            let parent_images = &images[depth];
            let mut ok = true;
            for p in 0..nperm {
                let b = self.perm_edge[p][e] as usize;
                if parent_images[p] | (1u64 << b) > child {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let (head, tail) = images.split_at_mut(depth + 1);
            let parent_images = &head[depth];
            let child_images = &mut tail[0];
            for p in 0..nperm {
                let b = self.perm_edge[p][e] as usize;
                child_images[p] = parent_images[p] | (1u64 << b);
            }
            // e is below every edge already chosen, so the stack stays
            // sorted in decreasing index order
            edges.push(e);
            count += self.dfs64(child, e, depth + 1, images, edges, f);
            edges.pop();
        }
        count
    }

    fn dfs128(
        &self,
        mask: u128,
        low: usize,
        depth: usize,
        images: &mut Vec<Vec<u128>>,
        edges: &mut Vec<usize>,
        f: &mut impl FnMut(&[usize]),
    ) -> u64 {
        f(edges);
        let mut count = 1u64;
        let nperm = self.perm_edge.len();
        for e in 0..low {
            let child = mask | (1u128 << e);
            let parent_images = &images[depth];
            let mut ok = true;
            for p in 0..nperm {
                let b = self.perm_edge[p][e] as usize;
                if parent_images[p] | (1u128 << b) > child {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let (head, tail) = images.split_at_mut(depth + 1);
            let parent_images = &head[depth];
            let child_images = &mut tail[0];
            for p in 0..nperm {
                let b = self.perm_edge[p][e] as usize;
                child_images[p] = parent_images[p] | (1u128 << b);
            }
            edges.push(e);
            count += self.dfs128(child, e, depth + 1, images, edges, f);
            edges.pop();
        }
        count
    }
}

/// Connectivity of an edge-index subset without building a hypergraph;
/// true iff all `n` vertices end up in one class (so isolated vertices
/// mean disconnected, and the empty subset is disconnected for n > 1).
pub fn edges_connected(space: &EdgeSpace, edges: &[usize], n: usize) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut classes = n;
    for &e in edges {
        let s = space.edge(e);
        let r0 = find(&mut parent, s[0]);
        for &v in &s[1..] {
            let rv = find(&mut parent, v);
            if rv != r0 {
                parent[rv] = r0;
                classes -= 1;
            }
        }
    }
    classes == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn subsets_and_perms() {
        assert_eq!(k_subsets(2, 4).len(), 6);
        assert_eq!(k_subsets(4, 7).len(), 35);
        assert_eq!(permutations(4).len(), 24);
        let perms = permutations(3);
        let set: BTreeSet<Vec<usize>> = perms.into_iter().collect();
        assert_eq!(set.len(), 6);
    }

    #[test]
    fn counts_match_burnside_small() {
        for (k, n, want) in [(4, 4, 2u64), (4, 5, 6), (4, 6, 156), (3, 5, 34)] {
            let space = EdgeSpace::new(k, n);
            let burnside = space.class_count_burnside();
            assert_eq!(burnside, BigUint::from(want), "burnside k={k} n={n}");
            let mut seen = 0u64;
            let generated = space.for_each_canonical(|_| seen += 1);
            assert_eq!(generated, want, "orderly k={k} n={n}");
            assert_eq!(seen, want);
        }
    }

    #[test]
    fn canonical_masks_are_orbit_maximal_and_distinct() {
        // brute-force certification at a small size: the generator
        // yields exactly one representative per orbit
        let space = EdgeSpace::new(2, 4);
        let mut reps: Vec<u64> = Vec::new();
        space.for_each_canonical(|edges| {
            let mask = edges.iter().fold(0u64, |m, &e| m | (1 << e));
            reps.push(mask);
        });
        let slots = space.num_slots();
        let orbit_max = |mask: u64| -> u64 {
            let mut best = mask;
            for table in &space.perm_edge {
                let mut img = 0u64;
                for e in 0..slots {
                    if mask >> e & 1 == 1 {
                        img |= 1 << table[e];
                    }
                }
                best = best.max(img);
            }
            best
        };
        for &r in &reps {
            assert_eq!(orbit_max(r), r, "representative not maximal: {r:b}");
        }
        let mut all_canon: BTreeSet<u64> = BTreeSet::new();
        for mask in 0u64..1 << slots {
            all_canon.insert(orbit_max(mask));
        }
        let rep_set: BTreeSet<u64> = reps.iter().copied().collect();
        assert_eq!(rep_set, all_canon);
        assert_eq!(rep_set.len(), reps.len());
    }

    #[test]
    fn connectivity_filter() {
        let space = EdgeSpace::new(2, 4);
        // path 0-1-2-3 uses edges {0,1},{1,2},{2,3}
        let find = |a: usize, b: usize| {
            (0..space.num_slots())
                .find(|&i| space.edge(i) == [a, b])
                .unwrap()
        };
        let path = [find(0, 1), find(1, 2), find(2, 3)];
        assert!(edges_connected(&space, &path, 4));
        let broken = [find(0, 1), find(2, 3)];
        assert!(!edges_connected(&space, &broken, 4));
        assert!(!edges_connected(&space, &[], 4));
        let h = space.hypergraph(&path);
        assert!(h.is_connected());
        assert_eq!(h.num_edges(), 3);
    }

    #[test]
    fn connected_class_counts_match_brute_force() {
        // 2-uniform on 5 vertices: 21 connected graph classes is a
        // classic count
        let space = EdgeSpace::new(2, 5);
        let mut connected = 0u64;
        space.for_each_canonical(|edges| {
            if edges_connected(&space, edges, 5) {
                connected += 1;
            }
        });
        assert_eq!(connected, 21);
    }
}
