#![allow(dead_code)]

pub mod naive;

use orthokit::enumerate::{enumerate_ortholattices, EnumerationOptions};
use orthokit::generators::{gen_boolean, gen_mo, gen_o6, gen_subspace_mo, greechie_paste, GreechieDiagram};
use orthokit::{ElementId, OrthoLattice};

pub fn generated() -> Vec<OrthoLattice> {
    let mut out: Vec<OrthoLattice> = (1..=4).map(|k| gen_boolean(k).unwrap()).collect();
    out.extend((2..=6).map(|m| gen_mo(m).unwrap()));
    out.push(gen_o6());
    out.extend([3, 7].map(|p| gen_subspace_mo(p).unwrap()));
    for blocks in admissible_diagrams() {
        out.push(greechie_paste(&GreechieDiagram::new(&blocks).unwrap(), false).unwrap());
    }
    out
}

pub fn admissible_diagrams() -> Vec<Vec<Vec<&'static str>>> {
    vec![
        vec![vec!["p", "q", "r"], vec!["r", "s", "t"]],
        vec![vec!["a", "b"], vec!["b", "c", "d"]],
        vec![
            vec!["a", "b", "c"],
            vec!["c", "d", "e"],
            vec!["e", "f", "g"],
            vec!["g", "h", "i"],
            vec!["i", "j", "a"],
        ],
    ]
}

pub fn enumerated(max: usize) -> Vec<OrthoLattice> {
    enumerate_ortholattices(EnumerationOptions::new(max))
        .unwrap()
        .lattices()
        .cloned()
        .collect()
}

pub fn corpus() -> Vec<OrthoLattice> {
    let mut out = generated();
    out.extend(enumerated(10));
    out
}

/// Tries every bijection; only usable for small sizes.
pub fn brute_isomorphic(a: &OrthoLattice, b: &OrthoLattice) -> bool {
    fn extend(a: &OrthoLattice, b: &OrthoLattice, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let x = map.len();
        if x == a.len() {
            return true;
        }
        for y in 0..b.len() {
            if used[y] {
                continue;
            }
            let consistent = (0..x).all(|u| {
                let (eu, ex) = (ElementId::new(u), ElementId::new(x));
                let (fu, fy) = (ElementId::new(map[u]), ElementId::new(y));
                a.leq(eu, ex) == b.leq(fu, fy)
                    && a.leq(ex, eu) == b.leq(fy, fu)
                    && (a.ortho(ex) == eu) == (b.ortho(fy) == fu)
            });
            let self_ortho = (a.ortho(ElementId::new(x)).index() == x) == (b.ortho(ElementId::new(y)).index() == y);
            if consistent && self_ortho {
                map.push(y);
                used[y] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[y] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}
