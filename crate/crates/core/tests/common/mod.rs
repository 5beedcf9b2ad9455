//! Brute-force finite group oracle: class sums multiplied in Z[G].
#![allow(dead_code, clippy::needless_range_loop)]

use fuscat::structconst::Tensor;
use fuscat::{CharacterTable, CycNumber};

pub type Perm = Vec<usize>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // (a ∘ b)(x) = a(b(x))
    b.iter().map(|&x| a[x]).collect()
}

fn inverse(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

pub struct Group {
    pub elements: Vec<Perm>,
    /// Conjugacy classes as indices into `elements`; the identity class first.
    pub classes: Vec<Vec<usize>>,
}

impl Group {
    pub fn generated_by(gens: &[Perm]) -> Self {
        let id: Perm = (0..gens[0].len()).collect();
        let mut elements = vec![id];
        let mut frontier = 0;
        while frontier < elements.len() {
            let g = elements[frontier].clone();
            for s in gens {
                let h = compose(s, &g);
                if !elements.contains(&h) {
                    elements.push(h);
                }
            }
            frontier += 1;
        }
        elements.sort();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; elements.len()];
        for i in 0..elements.len() {
            if seen[i] {
                continue;
            }
            let mut class: Vec<usize> = elements
                .iter()
                .map(|g| compose(&compose(g, &elements[i]), &inverse(g)))
                .map(|c| elements.iter().position(|e| *e == c).unwrap())
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        Group { elements, classes }
    }

    /// `S_3` on three points.
    pub fn s3() -> Self {
        Self::generated_by(&[vec![1, 0, 2], vec![1, 2, 0]])
    }

    /// `A_4` on four points.
    pub fn a4() -> Self {
        Self::generated_by(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// `c[a][b][k]`: number of `(x, y) ∈ K_a × K_b` with `xy` equal to a fixed element of `K_k`.
    pub fn class_constants(&self) -> Vec<Vec<Vec<i64>>> {
        let r = self.classes.len();
        let mut c = vec![vec![vec![0i64; r]; r]; r];
        for a in 0..r {
            for b in 0..r {
                for (k, class) in self.classes.iter().enumerate() {
                    let z = &self.elements[class[0]];
                    c[a][b][k] = self.classes[a]
                        .iter()
                        .flat_map(|&x| self.classes[b].iter().map(move |&y| (x, y)))
                        .filter(|&(x, y)| compose(&self.elements[x], &self.elements[y]) == *z)
                        .count() as i64;
                }
            }
        }
        c
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A bijection `columns → classes` under which the table's class dimensions equal the class
/// sizes and `c` equals the group's class constants exactly.
pub fn match_with_group(t: &CharacterTable, c: &Tensor, g: &Group) -> Option<Perm> {
    let r = t.rank();
    if g.classes.len() != r {
        return None;
    }
    let oracle = g.class_constants();
    let mut p: Perm = (0..r).collect();
    loop {
        let sizes_ok = (0..r).all(|j| t.classdims[j] == CycNumber::from_integer(g.classes[p[j]].len() as i64));
        if sizes_ok
            && (0..r).all(|i| {
                (0..r).all(|j| (0..r).all(|k| c[i][j][k] == CycNumber::from_integer(oracle[p[i]][p[j]][p[k]])))
            })
        {
            return Some(p);
        }
        if !next_permutation(&mut p) {
            return None;
        }
    }
}
