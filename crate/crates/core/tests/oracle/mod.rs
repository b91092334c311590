//! Brute-force reference computations sharing no code with the library.
//!
//! Permutations are image vectors composed left to right: `(p * q)(i) = q(p(i))`.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Perm = Vec<usize>;

pub fn compose(p: &Perm, q: &Perm) -> Perm {
    p.iter().map(|&i| q[i]).collect()
}

pub fn inverse(p: &Perm) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn order(p: &Perm) -> u64 {
    let id: Perm = (0..p.len()).collect();
    let mut x = p.clone();
    let mut k = 1;
    while x != id {
        x = compose(&x, p);
        k += 1;
    }
    k
}

fn parse_cycles(degree: usize, text: &str) -> Perm {
    let mut p: Perm = (0..degree).collect();
    for cycle in text.split(')').map(|c| c.trim().trim_start_matches('(')) {
        let pts: Vec<usize> = cycle
            .split_whitespace()
            .map(|t| t.parse::<usize>().unwrap() - 1)
            .collect();
        for k in 0..pts.len() {
            p[pts[k]] = pts[(k + 1) % pts.len()];
        }
    }
    p
}

/// `(degree, generators)` from a group file, ignoring everything else.
pub fn read_group_file(path: &Path) -> (usize, Vec<Perm>) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut degree = 0;
    let mut gens = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap().trim();
        if let Some(d) = line.strip_prefix("degree ") {
            degree = d.trim().parse().unwrap();
        } else if let Some(g) = line.strip_prefix("gen ") {
            gens.push(parse_cycles(degree, g));
        }
    }
    (degree, gens)
}

pub fn closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let id: Perm = (0..degree).collect();
    let mut set = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(&x, g);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// `G` acting on the right cosets `Hx`, with every element's action tabulated.
pub struct Action {
    pub elements: Vec<Perm>,
    pub h: BTreeSet<Perm>,
    pub points: usize,
    /// `table[g][i]`: image of coset `i` under element `g`.
    pub table: Vec<Vec<usize>>,
}

impl Action {
    pub fn new(group: &BTreeSet<Perm>, h: &BTreeSet<Perm>) -> Self {
        let elements: Vec<Perm> = group.iter().cloned().collect();
        let mut coset_id: HashMap<Perm, usize> = HashMap::new();
        let mut reps: Vec<Perm> = Vec::new();
        for x in &elements {
            if coset_id.contains_key(x) {
                continue;
            }
            let id = reps.len();
            reps.push(x.clone());
            for k in h {
                coset_id.insert(compose(k, x), id);
            }
        }
        let table = elements
            .iter()
            .map(|g| reps.iter().map(|r| coset_id[&compose(r, g)]).collect())
            .collect();
        Action {
            points: reps.len(),
            elements,
            h: h.clone(),
            table,
        }
    }

    fn fixes_all(&self, g: usize, pts: &[usize]) -> bool {
        pts.iter().all(|&p| self.table[g][p] == p)
    }

    pub fn kernel_size(&self) -> usize {
        let all: Vec<usize> = (0..self.points).collect();
        (0..self.elements.len()).filter(|&g| self.fixes_all(g, &all)).count()
    }

    fn stabilizer_size(&self, pts: &[usize]) -> usize {
        (0..self.elements.len()).filter(|&g| self.fixes_all(g, pts)).count()
    }

    fn tuples(&self, m: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let n = self.points;
        (0..n.pow(m as u32)).map(move |mut k| {
            let mut t = Vec::with_capacity(m);
            for _ in 0..m {
                t.push(k % n);
                k /= n;
            }
            t
        })
    }

    /// Number of regular `m`-tuples, by listing all of them.
    pub fn regular_tuples(&self, m: usize) -> u64 {
        let kernel = self.kernel_size();
        self.tuples(m)
            .filter(|t| self.stabilizer_size(t) == kernel)
            .count() as u64
    }

    /// Least `k` with a regular `k`-tuple.
    pub fn base(&self) -> usize {
        let kernel = self.kernel_size();
        (1..=self.points)
            .find(|&k| self.tuples(k).any(|t| self.stabilizer_size(&t) == kernel))
            .unwrap()
    }

    pub fn fixed_points(&self, g: usize) -> usize {
        (0..self.points).filter(|&i| self.table[g][i] == i).count()
    }

    pub fn fpr(&self, g: usize) -> BigRational {
        BigRational::new(
            BigInt::from(self.fixed_points(g)),
            BigInt::from(self.points),
        )
    }

    pub fn class(&self, x: &Perm) -> BTreeSet<Perm> {
        self.elements
            .iter()
            .map(|g| compose(&compose(&inverse(g), x), g))
            .collect()
    }

    /// `|x^G ∩ H| / |x^G|`.
    pub fn fpr_by_class(&self, x: &Perm) -> BigRational {
        let class = self.class(x);
        let hits = class.iter().filter(|y| self.h.contains(*y)).count();
        BigRational::new(BigInt::from(hits), BigInt::from(class.len()))
    }

    /// `Σ fpr(x)^c` over all elements of prime order.
    pub fn q_hat(&self, c: u32) -> BigRational {
        let mut total = BigRational::from_integer(0.into());
        for (g, x) in self.elements.iter().enumerate() {
            if is_prime(order(x)) {
                total += pow(&self.fpr(g), c);
            }
        }
        total
    }

    pub fn q(&self, c: usize) -> BigRational {
        let total = BigInt::from(self.points).pow(c as u32);
        BigRational::from_integer(1.into())
            - BigRational::new(BigInt::from(self.regular_tuples(c)), total)
    }

    /// Conjugacy classes of prime-order elements: `(size, |class ∩ H|)`.
    pub fn prime_classes(&self) -> BTreeMap<Perm, (usize, usize)> {
        let mut seen = BTreeSet::new();
        let mut out = BTreeMap::new();
        for x in &self.elements {
            if seen.contains(x) || !is_prime(order(x)) {
                continue;
            }
            let class = self.class(x);
            let hits = class.iter().filter(|y| self.h.contains(*y)).count();
            out.insert(x.clone(), (class.len(), hits));
            seen.extend(class);
        }
        out
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn pow(x: &BigRational, c: u32) -> BigRational {
    (0..c).fold(BigRational::from_integer(1.into()), |acc, _| acc * x)
}

/// Group and subgroup from a corpus case's files.
pub fn load(group: &Path, subgroup: &Path) -> Action {
    let (d, gens) = read_group_file(group);
    let (d2, hgens) = read_group_file(subgroup);
    assert_eq!(d, d2);
    Action::new(&closure(d, &gens), &closure(d, &hgens))
}
