use crate::cover::SymbolPermutation;
use crate::error::{Error, Result};
use crate::graph::GraphSpace;

/// Largest vertex count for which every vertex permutation is tried.
pub const AUTOMORPHISM_CAP: u64 = 9;

/// All vertex permutations of `B(d,n)` preserving the directed edge
/// relation (loops included), as rank images, in lexicographic order.
pub fn enumerate_automorphisms(space: GraphSpace) -> Result<Vec<Vec<u64>>> {
    let count = space.vertex_count()?;
    if count > AUTOMORPHISM_CAP {
        return Err(Error::Resource(format!(
            "{space} has {count} vertices; brute-force automorphism enumeration stops at {AUTOMORPHISM_CAP}"
        )));
    }
    let mut found = Vec::new();
    edge_preserving_permutations(space, count as usize, &mut |perm| {
        found.push(perm.to_vec());
        true
    });
    Ok(found)
}

/// Backtracking over partial assignments; a branch is cut as soon as two
/// assigned vertices disagree on an edge in either direction. `visit`
/// returns `false` to stop early.
pub(crate) fn edge_preserving_permutations(
    space: GraphSpace,
    count: usize,
    visit: &mut impl FnMut(&[u64]) -> bool,
) {
    fn extend(
        space: GraphSpace,
        count: usize,
        image: &mut Vec<u64>,
        used: &mut [bool],
        visit: &mut impl FnMut(&[u64]) -> bool,
    ) -> bool {
        let v = image.len();
        if v == count {
            return visit(image);
        }
        for target in 0..count as u64 {
            if used[target as usize] {
                continue;
            }
            let v64 = v as u64;
            let consistent = space.has_edge(v64, v64) == space.has_edge(target, target)
                && image.iter().enumerate().all(|(u, &img)| {
                    let u = u as u64;
                    space.has_edge(u, v64) == space.has_edge(img, target)
                        && space.has_edge(v64, u) == space.has_edge(target, img)
                });
            if !consistent {
                continue;
            }
            used[target as usize] = true;
            image.push(target);
            let keep_going = extend(space, count, image, used, visit);
            image.pop();
            used[target as usize] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
    let mut image = Vec::with_capacity(count);
    let mut used = vec![false; count];
    extend(space, count, &mut image, &mut used, visit);
}

/// The vertex map `x₁…x_n ↦ σ(x₁)…σ(x_n)` as rank images.
pub fn symbol_automorphism(space: GraphSpace, sigma: &SymbolPermutation) -> Result<Vec<u64>> {
    let count = space.capped_count()? as u64;
    (0..count)
        .map(|r| space.vertex_index(&sigma.apply(&space.word_of_unchecked(r))?))
        .collect()
}
