//! Base and strong generating set for permutation groups (Schreier-Sims).
//!
//! A BSGS consists of a base `b_1, ..., b_k` and, at each level `i`, a
//! generating set for the stabilizer of `b_1, ..., b_i` together with a
//! transversal of the orbit of `b_i` under that stabilizer. The group order is
//! the product of the orbit lengths and membership testing is done by sifting:
//! repeatedly dividing off the transversal element that matches the image of
//! the current base point.
//!
//! The construction is the deterministic textbook algorithm: verify levels
//! bottom-up, and whenever a Schreier generator sifts to a non-trivial
//! residue, push the residue down the chain and resume from the level it
//! reached. All iteration orders are fixed, so the same generators always
//! produce the same base, transversals, and enumeration.

use crate::error::{Error, Result};
use crate::perm::Perm;

pub struct Bsgs {
    degree: usize,
    base: Vec<usize>,
    levels: Vec<Level>,
}

struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `transversal[p]` maps `point` to `p` when `p` is in the orbit.
    transversal: Vec<Option<Perm>>,
    /// Orbit points in discovery order.
    orbit: Vec<usize>,
}

impl Level {
    fn new(degree: usize, point: usize) -> Level {
        Level {
            point,
            gens: Vec::new(),
            transversal: vec![None; degree],
            orbit: Vec::new(),
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.orbit.clear();
        self.transversal[self.point] = Some(Perm::identity(degree));
        self.orbit.push(self.point);
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            head += 1;
            let u_beta = self.transversal[beta].clone().expect("orbit point has rep");
            for g in &self.gens {
                let gamma = g.apply(beta);
                if self.transversal[gamma].is_none() {
                    self.transversal[gamma] = Some(u_beta.then(g));
                    self.orbit.push(gamma);
                }
            }
        }
    }
}

impl Bsgs {
    /// Runs Schreier-Sims on the given generators.
    ///
    /// All generators must share `degree`; the identity may appear and is
    /// dropped. An empty generator set yields the trivial group.
    pub fn build(degree: usize, generators: &[Perm]) -> Result<Bsgs> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::MalformedGenerator(format!(
                    "generator degree {} does not match {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();

        let mut bsgs = Bsgs {
            degree,
            base: Vec::new(),
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return Ok(bsgs);
        }

        // Initial base: every generator must move some base point.
        for g in &gens {
            if bsgs.base.iter().all(|&b| g.apply(b) == b) {
                let pt = g.first_moved_point().expect("non-identity moves a point");
                bsgs.base.push(pt);
                bsgs.levels.push(Level::new(degree, pt));
            }
        }
        // Distribute generators to every level they stabilize up to.
        for g in &gens {
            for lv in 0..bsgs.levels.len() {
                bsgs.levels[lv].gens.push(g.clone());
                if g.apply(bsgs.base[lv]) != bsgs.base[lv] {
                    break;
                }
            }
        }

        bsgs.complete();

        // Soundness gate: every input generator must sift to the identity.
        for g in &gens {
            if !bsgs.contains(g) {
                return Err(Error::Inconsistency(
                    "a generator failed the membership test of its own chain".into(),
                ));
            }
        }
        Ok(bsgs)
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let lv = i as usize;
            self.levels[lv].recompute_orbit(self.degree);
            if let Some(new_level) = self.process_level(lv) {
                i = new_level as isize;
            } else {
                i -= 1;
            }
        }
    }

    /// Checks all Schreier generators of `lv`. On a non-trivial residue,
    /// extends the chain and returns the level to resume from.
    fn process_level(&mut self, lv: usize) -> Option<usize> {
        let mut oi = 0;
        while oi < self.levels[lv].orbit.len() {
            let beta = self.levels[lv].orbit[oi];
            let u_beta = self.levels[lv].transversal[beta].clone().expect("orbit rep");
            let mut gi = 0;
            while gi < self.levels[lv].gens.len() {
                let x = self.levels[lv].gens[gi].clone();
                let gamma = x.apply(beta);
                let u_gamma = self.levels[lv].transversal[gamma]
                    .clone()
                    .expect("orbit closed under generators");
                let schreier = u_beta.then(&x).then(&u_gamma.inverse());
                if !schreier.is_identity() {
                    let (residue, drop) = self.sift_from(schreier, lv + 1);
                    if !residue.is_identity() {
                        if drop == self.levels.len() {
                            let pt = residue.first_moved_point().expect("non-identity");
                            self.base.push(pt);
                            self.levels.push(Level::new(self.degree, pt));
                        }
                        for l in (lv + 1)..=drop {
                            self.levels[l].gens.push(residue.clone());
                        }
                        return Some(drop);
                    }
                }
                gi += 1;
            }
            oi += 1;
        }
        None
    }

    /// Sifts `p` through levels `from..`, returning the residue and the level
    /// at which sifting stopped (`levels.len()` means it ran off the chain).
    fn sift_from(&self, mut p: Perm, from: usize) -> (Perm, usize) {
        for l in from..self.levels.len() {
            let beta = p.apply(self.levels[l].point);
            match &self.levels[l].transversal[beta] {
                None => return (p, l),
                Some(u) => p = p.then(&u.inverse()),
            }
        }
        (p, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Group order as the product of orbit lengths (saturating; anything near
    /// `u128::MAX` is far beyond what can be enumerated anyway).
    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .fold(1u128, |acc, lv| acc.saturating_mul(lv.orbit.len() as u128))
    }

    /// Sound and complete membership test for permutations of the same degree.
    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(p.clone(), 0);
        residue.is_identity()
    }
}

/// Full enumeration of the subgroup generated by `gens`, as the breadth-first
/// closure under right multiplication. Errors out as soon as the closure
/// exceeds `cap`.
pub fn closure(degree: usize, gens: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    use std::collections::HashSet;
    let mut seen: HashSet<Perm> = HashSet::new();
    let mut work: Vec<Perm> = Vec::new();
    seen.insert(Perm::identity(degree));
    work.push(Perm::identity(degree));
    let mut head = 0;
    while head < work.len() {
        let w = work[head].clone();
        head += 1;
        for g in gens {
            let next = w.then(g);
            if seen.insert(next.clone()) {
                if seen.len() > cap {
                    return Err(Error::CapacityExceeded {
                        order: seen.len() as u128,
                        cap,
                    });
                }
                work.push(next);
            }
        }
    }
    Ok(work)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_generators_give_trivial_group() {
        let b = Bsgs::build(5, &[]).unwrap();
        assert_eq!(b.order(), 1);
        assert!(b.contains(&Perm::identity(5)));
        assert!(!b.contains(&Perm::from_cycles(5, &[&[0, 1]]).unwrap()));
    }

    #[test]
    fn symmetric_three_from_standard_generators() {
        // brute-force closure of {(0 1), (0 1 2)} has 6 elements
        let gens = vec![
            Perm::from_cycles(3, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ];
        assert_eq!(closure(3, &gens, 100).unwrap().len(), 6);
        let b = Bsgs::build(3, &gens).unwrap();
        assert_eq!(b.order(), 6);
    }

    #[test]
    fn dihedral_from_hexagon_generators() {
        // closure of {6-cycle, reflection} has 12 elements
        let rot = Perm::from_images(vec![1, 2, 3, 4, 5, 0]).unwrap();
        let refl = Perm::from_images(vec![0, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(closure(6, &[rot.clone(), refl.clone()], 100).unwrap().len(), 12);
        let b = Bsgs::build(6, &[rot, refl]).unwrap();
        assert_eq!(b.order(), 12);
    }

    #[test]
    fn rejects_mismatched_degrees() {
        let gens = vec![Perm::identity(3), Perm::identity(4)];
        assert!(matches!(
            Bsgs::build(3, &gens),
            Err(Error::MalformedGenerator(_))
        ));
    }

    #[test]
    fn membership_separates_alternating_from_symmetric() {
        // A_4 = <(0 1 2), (1 2 3)>
        let gens = vec![
            Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
            Perm::from_cycles(4, &[&[1, 2, 3]]).unwrap(),
        ];
        let b = Bsgs::build(4, &gens).unwrap();
        assert_eq!(b.order(), 12);
        for p in closure(4, &gens, 100).unwrap() {
            assert!(b.contains(&p));
        }
        let odd = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        assert!(!b.contains(&odd));
    }

    #[test]
    fn closure_respects_cap() {
        let gens = vec![
            Perm::from_cycles(5, &[&[0, 1]]).unwrap(),
            Perm::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ];
        assert!(matches!(
            closure(5, &gens, 50),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    fn arb_gen_set() -> impl Strategy<Value = Vec<Perm>> {
        let arb_one = Just(()).prop_perturb(|_, mut rng| {
            let mut images: Vec<u16> = (0..6).collect();
            for i in (1..6usize).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                images.swap(i, j);
            }
            Perm::from_images(images).unwrap()
        });
        proptest::collection::vec(arb_one, 1..=3)
    }

    proptest! {
        // the chain order must agree with brute-force enumeration
        #[test]
        fn order_matches_closure(gens in arb_gen_set()) {
            let b = Bsgs::build(6, &gens).unwrap();
            let all = closure(6, &gens, 1000).unwrap();
            prop_assert_eq!(b.order(), all.len() as u128);
            for p in &all {
                prop_assert!(b.contains(p));
            }
        }
    }
}
