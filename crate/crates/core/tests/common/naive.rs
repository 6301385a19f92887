//! Brute-force reference implementations working on raw order matrices.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use orthokit::{ElementId, FiniteLattice, FinitePoset, OrthoLattice};

/// A labeled ortholattice as a raw order matrix plus complement map.
#[derive(Clone)]
pub struct Raw {
    pub leq: Vec<Vec<bool>>,
    pub ortho: Vec<usize>,
}

pub fn glb(leq: &[Vec<bool>], x: usize, y: usize) -> Option<usize> {
    let n = leq.len();
    let lower: Vec<usize> = (0..n).filter(|&z| leq[z][x] && leq[z][y]).collect();
    lower.iter().copied().find(|&g| lower.iter().all(|&z| leq[z][g]))
}

pub fn lub(leq: &[Vec<bool>], x: usize, y: usize) -> Option<usize> {
    let n = leq.len();
    let upper: Vec<usize> = (0..n).filter(|&z| leq[x][z] && leq[y][z]).collect();
    upper.iter().copied().find(|&g| upper.iter().all(|&z| leq[g][z]))
}

pub fn is_lattice(leq: &[Vec<bool>]) -> bool {
    let n = leq.len();
    (0..n).all(|x| (0..n).all(|y| glb(leq, x, y).is_some() && lub(leq, x, y).is_some()))
}

pub fn is_ortho(leq: &[Vec<bool>], ortho: &[usize]) -> bool {
    let n = leq.len();
    let (bottom, top) = (0, n - 1);
    (0..n).all(|x| {
        ortho[ortho[x]] == x
            && glb(leq, x, ortho[x]) == Some(bottom)
            && lub(leq, x, ortho[x]) == Some(top)
            && (0..n).all(|y| !leq[x][y] || leq[ortho[y]][ortho[x]])
    })
}

pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// Every ortholattice on `{0..n}` with 0 the bottom and `n-1` the top.
pub fn labeled(n: usize) -> Vec<Raw> {
    if n < 2 {
        return Vec::new();
    }
    let k = n - 2;
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let perms = permutations(k);
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for x in 0..n {
            leq[0][x] = true;
            leq[x][n - 1] = true;
            leq[x][x] = true;
        }
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[i + 1][j + 1] = true;
            }
        }
        let transitive = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x][y] && leq[y][z]) || leq[x][z])));
        let antisymmetric = (0..n).all(|x| (0..n).all(|y| x == y || !(leq[x][y] && leq[y][x])));
        if !transitive || !antisymmetric || !is_lattice(&leq) {
            continue;
        }
        for p in &perms {
            let mut ortho = vec![n - 1];
            ortho.extend(p.iter().map(|&i| i + 1));
            ortho.push(0);
            if is_ortho(&leq, &ortho) {
                out.push(Raw {
                    leq: leq.clone(),
                    ortho,
                });
            }
        }
    }
    out
}

pub fn raw_isomorphic(a: &Raw, b: &Raw) -> bool {
    let n = a.leq.len();
    permutations(n)
        .iter()
        .any(|p| (0..n).all(|x| p[a.ortho[x]] == b.ortho[p[x]] && (0..n).all(|y| a.leq[x][y] == b.leq[p[x]][p[y]])))
}

pub fn raw_classes(n: usize) -> Vec<Raw> {
    let mut reps: Vec<Raw> = Vec::new();
    for l in labeled(n) {
        if !reps.iter().any(|r| raw_isomorphic(r, &l)) {
            reps.push(l);
        }
    }
    reps
}

pub fn to_lattice(raw: &Raw) -> OrthoLattice {
    let poset = FinitePoset::from_relation(raw.leq.len(), |x, y| raw.leq[x][y]).unwrap();
    let lattice = FiniteLattice::from_poset(poset).unwrap();
    OrthoLattice::new(lattice, raw.ortho.iter().map(|&i| ElementId::new(i)).collect()).unwrap()
}

/// Elements of a pasting as (block, atom subset) pairs, merged by the
/// naive rules: constants across blocks, equal singletons, and in-block
/// complements of a shared atom.
pub fn naive_paste(blocks: &[Vec<&str>]) -> Result<Raw, &'static str> {
    let mut members: Vec<(usize, BTreeSet<&str>)> = Vec::new();
    for (b, block) in blocks.iter().enumerate() {
        for mask in 0u32..(1 << block.len()) {
            let set: BTreeSet<&str> = block
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, a)| *a)
                .collect();
            members.push((b, set));
        }
    }
    let m = members.len();
    let complement = |i: usize| -> BTreeSet<&str> {
        let (b, s) = &members[i];
        blocks[*b].iter().copied().filter(|a| !s.contains(a)).collect()
    };
    let mut class: Vec<usize> = (0..m).collect();
    let same = |i: usize, j: usize| -> bool {
        let (ci, cj) = (complement(i), complement(j));
        let (si, sj) = (&members[i].1, &members[j].1);
        (si.is_empty() && sj.is_empty())
            || (ci.is_empty() && cj.is_empty())
            || (si.len() == 1 && si == sj)
            || (ci.len() == 1 && ci == cj)
    };
    loop {
        let mut changed = false;
        for i in 0..m {
            for j in 0..m {
                if same(i, j) && class[i] != class[j] {
                    let (lo, hi) = (class[i].min(class[j]), class[i].max(class[j]));
                    class.iter_mut().filter(|c| **c == hi).for_each(|c| *c = lo);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut reps: Vec<usize> = class.clone();
    reps.sort();
    reps.dedup();
    // Put 0 first and 1 last so the matrix matches the labeled layout.
    let bottom = class[0];
    let top = class[(1 << blocks[0].len()) - 1];
    reps.sort_by_key(|&r| (r != bottom, r == top, r));
    let n = reps.len();
    let pos = |i: usize| reps.iter().position(|&r| r == class[i]).unwrap();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..m {
        for j in 0..m {
            if members[i].0 == members[j].0 && members[i].1.is_subset(&members[j].1) {
                leq[pos(i)][pos(j)] = true;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    if (0..n).any(|x| (0..n).any(|y| x != y && leq[x][y] && leq[y][x])) {
        return Err("identifications collapse the order");
    }
    if !is_lattice(&leq) {
        return Err("not a lattice");
    }
    let mut ortho = vec![usize::MAX; n];
    for i in 0..m {
        let b = members[i].0;
        let comp = complement(i);
        let j = members.iter().position(|(c, t)| *c == b && *t == comp).unwrap();
        if ortho[pos(i)] != usize::MAX && ortho[pos(i)] != pos(j) {
            return Err("complements disagree");
        }
        ortho[pos(i)] = pos(j);
    }
    if !is_ortho(&leq, &ortho) {
        return Err("not an ortholattice");
    }
    Ok(Raw { leq, ortho })
}

pub fn naive_orthomodular(raw: &Raw) -> bool {
    let n = raw.leq.len();
    (0..n)
        .all(|x| (0..n).all(|z| !raw.leq[x][z] || lub(&raw.leq, x, glb(&raw.leq, raw.ortho[x], z).unwrap()) == Some(z)))
}
