//! Permutations on `0..n` and a deterministic Schreier-Sims stabilizer chain.
//!
//! Permutations act on the right: `x^(gh) = (x^g)^h`, written `g.then(&h)`.

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// `images[x]` is the image of `x`; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images.into_iter().map(|x| x as u32).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn order(&self) -> u64 {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize).collect()
    }

    /// Parity from the cycle count: `n - #cycles` is even.
    pub fn is_even(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
            }
        }
        (n - cycles).is_multiple_of(2)
    }
}

/// Orbits of `gens` on `0..n`, each sorted, ordered by least element.
pub fn orbits(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `transversal[x]` maps `point` to `x`, for `x` in the orbit.
    transversal: Vec<Option<Perm>>,
}

impl Level {
    fn new(n: usize, point: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[point] = Some(Perm::identity(n));
        Level { point, gens: Vec::new(), transversal }
    }

    fn rebuild(&mut self) {
        let n = self.transversal.len();
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some(Perm::identity(n));
        let mut queue = VecDeque::from([self.point]);
        while let Some(x) = queue.pop_front() {
            let ux = self.transversal[x].clone().expect("queued points are in the orbit");
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    self.transversal[y] = Some(ux.then(g));
                    queue.push_back(y);
                }
            }
        }
    }

    fn orbit(&self) -> Vec<usize> {
        (0..self.transversal.len()).filter(|&x| self.transversal[x].is_some()).collect()
    }
}

/// Base and strong generating set for a permutation group.
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// `base_prefix` fixes the first base points, so the first level is the
    /// orbit of `base_prefix[0]` and deeper levels are its stabilizers.
    pub fn new(degree: usize, gens: &[Perm], base_prefix: &[usize]) -> Self {
        let gens: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut chain = StabChain { degree, levels: Vec::new() };
        for &b in base_prefix {
            chain.levels.push(Level::new(degree, b));
        }
        for g in &gens {
            if !chain.levels.iter().any(|l| g.apply(l.point) != l.point) {
                let moved = (0..degree).find(|&x| g.apply(x) != x).expect("non-identity");
                chain.levels.push(Level::new(degree, moved));
            }
        }
        for g in &gens {
            chain.add_strong_gen(g, 0);
        }
        for l in chain.levels.iter_mut() {
            l.rebuild();
        }
        chain.complete();
        chain
    }

    /// Adds `g` to every level from `from` whose base prefix it fixes.
    fn add_strong_gen(&mut self, g: &Perm, from: usize) {
        for i in from..self.levels.len() {
            if (0..i).all(|j| g.apply(self.levels[j].point) == self.levels[j].point) {
                self.levels[i].gens.push(g.clone());
            } else {
                break;
            }
        }
    }

    /// Sifts `h` through the levels from `start`; returns the residue and the
    /// level where sifting stopped (`levels.len()` when it went through).
    fn strip(&self, mut h: Perm, start: usize) -> (Perm, usize) {
        for i in start..self.levels.len() {
            let beta = h.apply(self.levels[i].point);
            match &self.levels[i].transversal[beta] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let level = i - 1;
            match self.first_failing_schreier_gen(level) {
                None => i -= 1,
                Some((y, j)) => {
                    if j == self.levels.len() {
                        let moved = (0..self.degree).find(|&x| y.apply(x) != x).expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, moved));
                    }
                    for l in level + 1..=j {
                        self.levels[l].gens.push(y.clone());
                        self.levels[l].rebuild();
                    }
                    i = j + 1;
                }
            }
        }
    }

    fn first_failing_schreier_gen(&self, level: usize) -> Option<(Perm, usize)> {
        let lv = &self.levels[level];
        for beta in lv.orbit() {
            let u_beta = lv.transversal[beta].as_ref().expect("orbit point");
            for s in &lv.gens {
                let image = s.apply(beta);
                let u_image = lv.transversal[image].as_ref().expect("orbit is closed");
                let h = u_beta.then(s).then(&u_image.inverse());
                if h.is_identity() {
                    continue;
                }
                let (y, j) = self.strip(h, level + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
        }
        None
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit().len() as u128).product()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    /// Orbit of the first base point.
    pub fn first_orbit(&self) -> Vec<usize> {
        self.levels.first().map(|l| l.orbit()).unwrap_or_default()
    }

    /// Order of the stabilizer of the first base point.
    pub fn first_stabilizer_order(&self) -> u128 {
        self.levels.iter().skip(1).map(|l| l.orbit().len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (y, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && y.is_identity()
    }
}

pub fn group_order(degree: usize, gens: &[Perm]) -> u128 {
    StabChain::new(degree, gens, &[]).order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize, pts: &[usize]) -> Perm {
        let mut img: Vec<usize> = (0..n).collect();
        for k in 0..pts.len() {
            img[pts[k]] = pts[(k + 1) % pts.len()];
        }
        Perm::from_images(img).unwrap()
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        for n in 2..=8usize {
            let s = vec![cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())];
            let fact: u128 = (1..=n as u128).product();
            assert_eq!(group_order(n, &s), fact);
            if n >= 3 {
                let a: Vec<Perm> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
                assert_eq!(group_order(n, &a), fact / 2);
            }
        }
    }

    #[test]
    fn stabilizer_with_prescribed_base() {
        let s5 = vec![cycle(5, &[0, 1]), cycle(5, &[0, 1, 2, 3, 4])];
        let chain = StabChain::new(5, &s5, &[3]);
        assert_eq!(chain.first_orbit().len(), 5);
        assert_eq!(chain.first_stabilizer_order(), 24);
        assert!(chain.contains(&cycle(5, &[1, 4])));
    }

    #[test]
    fn membership_rejects_outsiders() {
        let a4: Vec<Perm> = (2..4).map(|k| cycle(4, &[0, 1, k])).collect();
        let chain = StabChain::new(4, &a4, &[]);
        assert!(!chain.contains(&cycle(4, &[0, 1])));
        assert!(chain.contains(&cycle(4, &[0, 2, 3])));
    }

    proptest! {
        #[test]
        fn order_of_cyclic_group_is_lcm_of_cycle_lengths(img in Just((0..9usize).collect::<Vec<_>>()).prop_shuffle()) {
            let g = Perm::from_images(img).unwrap();
            prop_assert_eq!(group_order(9, std::slice::from_ref(&g)), g.order() as u128);
        }

        #[test]
        fn inverse_composes_to_identity(img in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle()) {
            let g = Perm::from_images(img).unwrap();
            prop_assert!(g.then(&g.inverse()).is_identity());
        }
    }
}
