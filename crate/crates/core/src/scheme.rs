//! Association schemes on an enumerated set `0..n`.
//!
//! A [`Scheme`] stores the dense relation matrix with classes renumbered so
//! that class 0 is the diagonal and the others follow their least row-major
//! representative. Intersection numbers are computed on demand from one
//! representative pair per class and checked for constancy on more.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or_else(|| Error::NotAScheme(format!("image {i} out of range")))?;
            if core::mem::replace(slot, true) {
                return Err(Error::NotAScheme(format!("image {i} repeated")));
            }
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Self(inv)
    }
}

/// How much of axiom (iii) to check when computing intersection numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Verification {
    /// Up to ten representatives per class, taken from rows spread over the domain.
    #[default]
    Sampled,
    /// Every ordered pair.
    Exhaustive,
}

/// Symbolic names for relations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationLabel {
    Diagonal,
    R1,
    Rminus1,
    /// `R_r`, with `r` the least of `{r, 1/r}`.
    CrossRatio(Fe),
    /// A half of a split class.
    Signed {
        class: alloc::boxed::Box<RelationLabel>,
        plus: bool,
    },
    /// `Λ_r`: the listed values are the whole Frobenius-inversion orbit of `r`.
    FrobeniusOrbit(Vec<Fe>),
    Fused(Vec<RelationLabel>),
}

impl RelationLabel {
    pub fn signed(class: RelationLabel, plus: bool) -> Self {
        Self::Signed { class: alloc::boxed::Box::new(class), plus }
    }

    /// The underlying unsigned label.
    pub fn unsigned(&self) -> &RelationLabel {
        match self {
            Self::Signed { class, .. } => class,
            other => other,
        }
    }

    pub fn sign(&self) -> Option<bool> {
        match self {
            Self::Signed { plus, .. } => Some(*plus),
            _ => None,
        }
    }

    /// Render with field elements written by [`Field::display`].
    pub fn render(&self, f: &Field) -> String {
        match self {
            Self::Diagonal => String::from("R_0"),
            Self::R1 => String::from("R_1"),
            Self::Rminus1 => String::from("R_-1"),
            Self::CrossRatio(r) => format!("R_{{{}}}", f.display(*r)),
            Self::Signed { class, plus } => {
                format!("{}^{}", class.render(f), if *plus { '+' } else { '-' })
            }
            Self::FrobeniusOrbit(values) => {
                let parts: Vec<String> = values.iter().map(|&v| f.display(v)).collect();
                format!("L_{{{}}}", parts.join(","))
            }
            Self::Fused(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.render(f)).collect();
                parts.join(" u ")
            }
        }
    }
}

/// The full tensor `p^k_{ij}` for `0 <= i, j, k <= d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionNumbers {
    rank: usize,
    data: Vec<u32>,
}

impl IntersectionNumbers {
    /// Number of classes including the diagonal.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `p^k_{ij}`.
    #[inline]
    pub fn get(&self, k: usize, i: usize, j: usize) -> u32 {
        self.data[(k * self.rank + i) * self.rank + j]
    }

    /// The matrix `B_i = (p^k_{ij})_{k,j}`.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank).map(|k| (0..self.rank).map(|j| self.get(k, i, j)).collect()).collect()
    }

    pub fn is_symmetric_in_ij(&self) -> bool {
        let r = self.rank;
        (0..r).all(|k| (0..r).all(|i| (0..i).all(|j| self.get(k, i, j) == self.get(k, j, i))))
    }
}

/// An association scheme on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scheme {
    n: usize,
    d: usize,
    relation: Vec<u16>,
    valencies: Vec<usize>,
    transpose: Vec<u16>,
    labels: Vec<Option<RelationLabel>>,
}

impl Scheme {
    /// Build from an arbitrary class assignment of the `n*n` ordered pairs.
    ///
    /// Classes are renumbered by least row-major representative. Axioms (i)
    /// and (ii) are checked here together with constant row counts; axiom
    /// (iii) is checked by [`Scheme::intersection_numbers`].
    pub fn from_relation(n: usize, raw: &[u32]) -> Result<Self> {
        if raw.len() != n * n {
            return Err(Error::NotAScheme(format!("expected {} entries, got {}", n * n, raw.len())));
        }
        if n == 0 {
            return Err(Error::NotAScheme(String::from("empty domain")));
        }
        let max = raw.iter().copied().max().unwrap_or(0) as usize;
        let mut renumber = vec![u16::MAX; max + 1];
        let mut rank = 0usize;
        let mut relation = Vec::with_capacity(n * n);
        for (idx, &c) in raw.iter().enumerate() {
            let slot = &mut renumber[c as usize];
            if *slot == u16::MAX {
                if rank >= u16::MAX as usize {
                    return Err(Error::NotAScheme(String::from("too many classes")));
                }
                *slot = rank as u16;
                rank += 1;
            }
            let id = *slot;
            let (x, y) = (idx / n, idx % n);
            if (x == y) != (id == 0) {
                return Err(Error::NotAScheme(format!("diagonal class mixed at ({x}, {y})")));
            }
            relation.push(id);
        }
        let mut transpose = vec![u16::MAX; rank];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = (relation[x * n + y], relation[y * n + x]);
                let slot = &mut transpose[a as usize];
                if *slot == u16::MAX {
                    *slot = b;
                } else if *slot != b {
                    return Err(Error::NotAScheme(format!("transpose of class {a} is not a class")));
                }
            }
        }
        let mut valencies = vec![0usize; rank];
        for &c in &relation[..n] {
            valencies[c as usize] += 1;
        }
        let mut counts = vec![0usize; rank];
        for x in 1..n {
            counts.iter_mut().for_each(|c| *c = 0);
            for &c in &relation[x * n..(x + 1) * n] {
                counts[c as usize] += 1;
            }
            if counts != valencies {
                return Err(Error::NotAScheme(format!("row {x} has different valencies")));
            }
        }
        Ok(Self { n, d: rank - 1, relation, valencies, transpose, labels: vec![None; rank] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nontrivial classes.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn rank(&self) -> usize {
        self.d + 1
    }

    #[inline]
    pub fn class(&self, x: usize, y: usize) -> usize {
        self.relation[x * self.n + y] as usize
    }

    pub fn row(&self, x: usize) -> &[u16] {
        &self.relation[x * self.n..(x + 1) * self.n]
    }

    pub fn relation_matrix(&self) -> &[u16] {
        &self.relation
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valencies
    }

    pub fn transpose(&self, i: usize) -> usize {
        self.transpose[i] as usize
    }

    pub fn transpose_map(&self) -> &[u16] {
        &self.transpose
    }

    pub fn labels(&self) -> &[Option<RelationLabel>] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Option<&RelationLabel> {
        self.labels[i].as_ref()
    }

    pub fn set_label(&mut self, i: usize, label: RelationLabel) {
        self.labels[i] = Some(label);
    }

    /// Class of the given label, if some class carries it.
    pub fn class_of_label(&self, label: &RelationLabel) -> Option<usize> {
        self.labels.iter().position(|l| l.as_ref() == Some(label))
    }

    /// Least row-major representative of class `k`.
    pub fn representative(&self, k: usize) -> (usize, usize) {
        let idx = self.relation.iter().position(|&c| c as usize == k).expect("every class occurs");
        (idx / self.n, idx % self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose.iter().enumerate().all(|(i, &t)| t as usize == i)
    }

    /// Commutativity read off the tensor.
    pub fn is_commutative(&self, p: &IntersectionNumbers) -> bool {
        p.is_symmetric_in_ij()
    }

    fn count_from(&self, x: usize, y: usize, counts: &mut [u32]) {
        let rank = self.rank();
        counts.iter_mut().for_each(|c| *c = 0);
        let n = self.n;
        let row_x = &self.relation[x * n..(x + 1) * n];
        for z in 0..n {
            // (z, y) in R_j  iff  (y, z) in R_{j'}
            let j = self.transpose[self.relation[y * n + z] as usize] as usize;
            counts[row_x[z] as usize * rank + j] += 1;
        }
    }

    /// The tensor `p^k_{ij}`, checking that every sampled pair agrees.
    pub fn intersection_numbers(&self, mode: Verification) -> Result<IntersectionNumbers> {
        let rank = self.rank();
        let mut data = vec![0u32; rank * rank * rank];
        let mut counts = vec![0u32; rank * rank];
        for k in 0..rank {
            let (x, y) = self.representative(k);
            self.count_from(x, y, &mut counts);
            data[k * rank * rank..(k + 1) * rank * rank].copy_from_slice(&counts);
        }
        let check = |x: usize, y: usize, counts: &mut Vec<u32>| -> Result<()> {
            let k = self.class(x, y);
            self.count_from(x, y, counts);
            if counts[..] != data[k * rank * rank..(k + 1) * rank * rank] {
                return Err(Error::NotAScheme(format!("intersection numbers of class {k} differ at ({x}, {y})")));
            }
            Ok(())
        };
        match mode {
            Verification::Exhaustive => {
                for x in 0..self.n {
                    for y in 0..self.n {
                        check(x, y, &mut counts)?;
                    }
                }
            }
            Verification::Sampled => {
                let samples = self.n.min(10);
                for s in 0..samples {
                    let x = s * self.n / samples;
                    let mut found = vec![false; rank];
                    for y in 0..self.n {
                        let k = self.class(x, y);
                        if !core::mem::replace(&mut found[k], true) {
                            check(x, y, &mut counts)?;
                        }
                    }
                }
            }
        }
        Ok(IntersectionNumbers { rank, data })
    }

    /// Counting identities every scheme satisfies; returns the first failure.
    pub fn check_identities(&self, p: &IntersectionNumbers) -> Result<()> {
        let rank = self.rank();
        let k = &self.valencies;
        let fail = |what: String| Err(Error::NotAScheme(what));
        if k.iter().sum::<usize>() != self.n {
            return fail(String::from("valencies do not sum to n"));
        }
        for i in 0..rank {
            let t = self.transpose(i);
            if k[t] != k[i] {
                return fail(format!("k_{i} differs from its transpose"));
            }
            if p.get(0, i, t) as usize != k[i] {
                return fail(format!("p^0_{{{i},{t}'}} differs from k_{i}"));
            }
            for kk in 0..rank {
                let row: usize = (0..rank).map(|j| p.get(kk, i, j) as usize).sum();
                if row != k[i] {
                    return fail(format!("row sum of p^{kk}_{{{i},*}}"));
                }
                for j in 0..rank {
                    let lhs = p.get(kk, i, j) as usize * k[kk];
                    let rhs = p.get(i, kk, self.transpose(j)) as usize * k[i];
                    if lhs != rhs {
                        return fail(format!("k_k p^k_ij identity at ({kk},{i},{j})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// The partition obtained by merging classes along `partition`
    /// (fine class ↦ coarse class id). Labels are dropped.
    pub fn fuse(&self, partition: &[usize]) -> Result<Scheme> {
        if partition.len() != self.rank() {
            return Err(Error::NotAScheme(String::from("partition length differs from rank")));
        }
        if partition.iter().skip(1).any(|&c| c == partition[0]) {
            return Err(Error::NotAScheme(String::from("diagonal merged with another class")));
        }
        let raw: Vec<u32> = self.relation.iter().map(|&c| partition[c as usize] as u32).collect();
        Scheme::from_relation(self.n, &raw)
    }

    /// The map sending each class of `self` into the class of `coarse`
    /// containing it, if `self` refines `coarse`.
    pub fn refinement_map(&self, coarse: &Scheme) -> Option<Vec<usize>> {
        if self.n != coarse.n {
            return None;
        }
        let mut map = vec![usize::MAX; self.rank()];
        for (&f, &c) in self.relation.iter().zip(&coarse.relation) {
            let slot = &mut map[f as usize];
            if *slot == usize::MAX {
                *slot = c as usize;
            } else if *slot != c as usize {
                return None;
            }
        }
        Some(map)
    }

    /// The class bijection `i ↦ j` with `self.class(x,y) = i ⇔ other.class(φx,φy) = j`,
    /// if one exists. `phi` maps the points of `self` to points of `other`.
    pub fn matches_under(&self, other: &Scheme, phi: &[u32]) -> Option<Vec<usize>> {
        if self.n != other.n || phi.len() != self.n || self.rank() != other.rank() {
            return None;
        }
        let mut fwd = vec![usize::MAX; self.rank()];
        let mut back = vec![usize::MAX; self.rank()];
        for x in 0..self.n {
            let px = phi[x] as usize;
            for (y, &py) in phi.iter().enumerate() {
                let a = self.class(x, y);
                let b = other.class(px, py as usize);
                if fwd[a] == usize::MAX && back[b] == usize::MAX {
                    fwd[a] = b;
                    back[b] = a;
                } else if fwd[a] != b || back[b] != a {
                    return None;
                }
            }
        }
        Some(fwd)
    }

    /// Same partition of the same set, possibly numbered differently.
    pub fn equal_up_to_relabel(&self, other: &Scheme) -> Option<Vec<usize>> {
        let id: Vec<u32> = (0..self.n as u32).collect();
        self.matches_under(other, &id)
    }

    /// Orderings `A_0 = 0, A_1 = c, A_2, ...` of the classes under which the
    /// scheme is the distance partition of the graph of a symmetric class `c`.
    pub fn p_polynomial_orderings(&self) -> Vec<Vec<usize>> {
        (1..self.rank()).filter(|&c| self.transpose(c) == c).filter_map(|c| self.distance_ordering(c)).collect()
    }

    fn distance_ordering(&self, c: usize) -> Option<Vec<usize>> {
        let n = self.n;
        let mut dist = vec![usize::MAX; n];
        dist[0] = 0;
        let mut queue = alloc::collections::VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (y, &k) in self.row(x).iter().enumerate() {
                if k as usize == c && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let mut order = vec![usize::MAX; self.rank()];
        for (y, &dy) in dist.iter().enumerate() {
            if dy >= self.rank() {
                return None;
            }
            let k = self.class(0, y);
            if order[dy] == usize::MAX {
                order[dy] = k;
            } else if order[dy] != k {
                return None;
            }
        }
        // every class must be hit, each at one distance
        let mut seen = vec![false; self.rank()];
        for &k in &order {
            if k == usize::MAX || core::mem::replace(&mut seen[k], true) {
                return None;
            }
        }
        Some(order)
    }

    /// `{b_0, ..., b_{D-1}; c_1, ..., c_D}` for a distance ordering.
    pub fn intersection_array(&self, p: &IntersectionNumbers, ordering: &[usize]) -> (Vec<u32>, Vec<u32>) {
        let a1 = ordering[1];
        let diameter = ordering.len() - 1;
        let b = (0..diameter).map(|i| p.get(ordering[i], ordering[i + 1], a1)).collect();
        let c = (1..=diameter).map(|i| p.get(ordering[i], ordering[i - 1], a1)).collect();
        (b, c)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "scheme on {} points with {} classes, valencies {:?}", self.n, self.d, &self.valencies[1..])
    }
}

/// Is `coarse` a fusion of `fine` along `partition`? The fused relations
/// must reproduce `coarse` exactly, the partition must be admissible, and
/// the fused intersection numbers are recomputed from scratch.
pub fn is_fusion(coarse: &Scheme, fine: &Scheme, partition: &[usize]) -> bool {
    if coarse.n != fine.n || partition.len() != fine.rank() || partition[0] != 0 {
        return false;
    }
    if partition[1..].contains(&0) {
        return false;
    }
    // closed under transpose
    for i in 0..fine.rank() {
        if partition[fine.transpose(i)] != coarse.transpose.get(partition[i]).map_or(usize::MAX, |&t| t as usize) {
            return false;
        }
    }
    if fine.relation.iter().zip(&coarse.relation).any(|(&a, &b)| partition[a as usize] != b as usize) {
        return false;
    }
    match fine.fuse(partition) {
        Ok(fused) => fused.intersection_numbers(Verification::Sampled).is_ok(),
        Err(_) => false,
    }
}

/// Orbitals of the group generated by `generators` on `0..n`.
pub fn orbital_scheme(generators: &[Permutation], n: usize) -> Result<Scheme> {
    if generators.iter().any(|g| g.len() != n) {
        return Err(Error::NotAScheme(String::from("generator on the wrong domain")));
    }
    let orbits = point_orbits(generators, n);
    if orbits != 1 {
        return Err(Error::NotTransitive { orbits, n });
    }
    let mut orbital = vec![u32::MAX; n * n];
    let mut stack = Vec::new();
    let mut next = 0u32;
    // seeds from row 0 suffice under transitivity, but scanning all keeps
    // the routine honest if that ever changes
    for start in 0..n * n {
        if orbital[start] != u32::MAX {
            continue;
        }
        orbital[start] = next;
        stack.push(start);
        while let Some(s) = stack.pop() {
            let (x, y) = (s / n, s % n);
            for g in generators {
                let t = g.apply(x) * n + g.apply(y);
                if orbital[t] == u32::MAX {
                    orbital[t] = next;
                    stack.push(t);
                }
            }
        }
        next += 1;
    }
    Scheme::from_relation(n, &orbital)
}

/// Number of orbits of the generated group on `0..n`.
pub fn point_orbits(generators: &[Permutation], n: usize) -> usize {
    let mut seen = vec![false; n];
    let mut orbits = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for g in generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    orbits
}

/// 2-subsets of `0..m` in lexicographic order.
pub fn two_subsets(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect()
}

/// The triangular scheme T(m) built from intersection sizes.
pub fn triangular(m: usize) -> Result<Scheme> {
    let subsets = two_subsets(m);
    let n = subsets.len();
    let mut raw = Vec::with_capacity(n * n);
    for &(a, b) in &subsets {
        for &(c, e) in &subsets {
            let shared = [c, e].iter().filter(|&&v| v == a || v == b).count();
            raw.push(2 - shared as u32);
        }
    }
    Scheme::from_relation(n, &raw)
}

/// A transposition and an m-cycle acting on the 2-subsets of `0..m`.
pub fn symmetric_group_on_pairs(m: usize) -> Vec<Permutation> {
    let subsets = two_subsets(m);
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        subsets.iter().position(|&s| s == (a, b)).expect("pair") as u32
    };
    let on_pairs = |g: &dyn Fn(usize) -> usize| Permutation(subsets.iter().map(|&(a, b)| index(g(a), g(b))).collect());
    let swap = |v: usize| match v {
        0 => 1,
        1 => 0,
        v => v,
    };
    let cycle = |v: usize| (v + 1) % m;
    vec![on_pairs(&swap), on_pairs(&cycle)]
}

#[cfg(test)]
mod tests;
