//! Root systems, coweights, Weyl group, concave level functions, and the
//! combinatorial volume / dimension formulas.
//!
//! Two realizations are supported behind one interface:
//!
//! * `GL_N`: coweight lattice `Z^N`, roots `e_i - e_j` as integer vectors,
//!   pairing by dot product. This is the realization the matrix engine uses.
//! * Simple types built from a Cartan matrix (`B_2`, `G_2`, `F_4`, ...):
//!   coweights in fundamental-coweight coordinates, roots in simple-root
//!   coordinates, again paired by dot product. These only feed the formula
//!   layer; the matrix engine rejects them.

use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

/// A coweight, as integer coordinates in the realization's lattice basis.
pub type Coweight = Vec<i64>;

/// Irreducible series labels, for the residue-characteristic table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueWarning {
    pub series: Series,
    pub rank: usize,
    pub prime: u64,
}

/// A reduced root datum with chosen positive system.
#[derive(Debug, Clone)]
pub struct RootDatum {
    label: String,
    rank: usize,
    /// Character-side vectors; `alpha(lambda)` is the dot product.
    roots: Vec<Vec<i64>>,
    /// Coroots as elements of the coweight lattice.
    coroots: Vec<Vec<i64>>,
    positive: Vec<bool>,
    /// Index of `-alpha` for each root.
    negation: Vec<usize>,
    /// Indices of the simple positive roots.
    simple: Vec<usize>,
    factors: Vec<(Series, usize)>,
    root_index: HashMap<Vec<i64>, usize>,
    gl_size: Option<usize>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootDatum {
    /// `GL_N` with roots `e_i - e_j` and coweight lattice `Z^N`.
    pub fn gl(n: usize) -> RootDatum {
        assert!(n >= 2, "GL_N needs N >= 2");
        let mut roots = Vec::new();
        let mut positive = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let mut v = vec![0i64; n];
                v[i] = 1;
                v[j] = -1;
                roots.push(v);
                positive.push(i < j);
            }
        }
        let coroots = roots.clone();
        let mut simple = Vec::new();
        for i in 0..n - 1 {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            simple.push(roots.iter().position(|r| *r == v).unwrap());
        }
        Self::finish(format!("GL{n}"), n, roots, coroots, positive, simple, vec![(Series::A, n - 1)], Some(n))
    }

    /// Builds a simple root datum from a Cartan matrix with rows
    /// `cartan[i][j] = alpha_j(alpha_i^vee)`.
    fn from_cartan(label: &str, series: Series, cartan: &[Vec<i64>]) -> RootDatum {
        let rank = cartan.len();
        // Roots carried as simple-root coordinates together with their
        // coroots in fundamental-coweight coordinates; close under simple
        // reflections.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut roots: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for i in 0..rank {
            let mut r = vec![0i64; rank];
            r[i] = 1;
            let c = cartan[i].clone();
            seen.insert(r.clone());
            queue.push_back((r.clone(), c.clone()));
            roots.push((r, c));
        }
        while let Some((r, c)) = queue.pop_front() {
            for i in 0..rank {
                // s_i(beta) = beta - beta(alpha_i^vee) alpha_i
                let pair = dot(cartan[i].as_slice(), &r);
                let mut nr = r.clone();
                nr[i] -= pair;
                // s_i(beta^vee) = beta^vee - alpha_i(beta^vee) alpha_i^vee
                let ai_of_c = c[i];
                let nc: Vec<i64> = c.iter().zip(&cartan[i]).map(|(x, a)| x - ai_of_c * a).collect();
                if seen.insert(nr.clone()) {
                    roots.push((nr.clone(), nc.clone()));
                    queue.push_back((nr, nc));
                }
            }
        }
        let positive: Vec<bool> = roots.iter().map(|(r, _)| r.iter().all(|&x| x >= 0)).collect();
        let simple: Vec<usize> = (0..rank)
            .map(|i| {
                roots
                    .iter()
                    .position(|(r, _)| r.iter().enumerate().all(|(j, &x)| x == i64::from(j == i)))
                    .unwrap()
            })
            .collect();
        let (rs, cs): (Vec<_>, Vec<_>) = roots.into_iter().unzip();
        Self::finish(label.to_string(), rank, rs, cs, positive, simple, vec![(series, rank)], None)
    }

    pub fn simple_type(series: Series, rank: usize) -> Result<RootDatum> {
        let cartan = cartan_matrix(series, rank)?;
        Ok(Self::from_cartan(&format!("{series:?}{rank}"), series, &cartan))
    }

    pub fn b2() -> RootDatum {
        Self::simple_type(Series::B, 2).unwrap()
    }

    pub fn g2() -> RootDatum {
        Self::simple_type(Series::G, 2).unwrap()
    }

    fn finish(
        label: String,
        rank: usize,
        roots: Vec<Vec<i64>>,
        coroots: Vec<Vec<i64>>,
        positive: Vec<bool>,
        simple: Vec<usize>,
        factors: Vec<(Series, usize)>,
        gl_size: Option<usize>,
    ) -> RootDatum {
        let mut root_index = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            root_index.insert(r.clone(), i);
        }
        let negation = roots
            .iter()
            .map(|r| {
                let neg: Vec<i64> = r.iter().map(|&x| -x).collect();
                root_index[&neg]
            })
            .collect();
        let rd = RootDatum {
            label,
            rank,
            roots,
            coroots,
            positive,
            negation,
            simple,
            factors,
            root_index,
            gl_size,
        };
        rd.check_axioms();
        rd
    }

    fn check_axioms(&self) {
        for i in 0..self.roots.len() {
            assert_eq!(
                dot(&self.roots[i], &self.coroots[i]),
                2,
                "pairing of a root with its own coroot must be 2"
            );
            assert_ne!(self.positive[i], self.positive[self.negation[i]]);
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// For `GL_N`, the matrix size `N`.
    pub fn gl_size(&self) -> Option<usize> {
        self.gl_size
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, idx: usize) -> &[i64] {
        &self.roots[idx]
    }

    pub fn coroot(&self, idx: usize) -> &[i64] {
        &self.coroots[idx]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        self.positive[idx]
    }

    pub fn negate(&self, idx: usize) -> usize {
        self.negation[idx]
    }

    pub fn simple_roots(&self) -> &[usize] {
        &self.simple
    }

    pub fn factors(&self) -> &[(Series, usize)] {
        &self.factors
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.roots.len()).filter(|&i| self.positive[i])
    }

    pub fn all_roots(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.roots.len()
    }

    /// The index of the root `alpha + beta`, when it is a root.
    pub fn root_sum(&self, i: usize, j: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[i].iter().zip(&self.roots[j]).map(|(a, b)| a + b).collect();
        self.root_index.get(&s).copied()
    }

    /// For `GL_N`, the root index of `e_i - e_j`.
    pub fn gl_root(&self, i: usize, j: usize) -> usize {
        let n = self.gl_size.expect("gl_root requires a GL root datum");
        assert!(i != j && i < n && j < n);
        let mut v = vec![0i64; n];
        v[i] = 1;
        v[j] = -1;
        self.root_index[&v]
    }

    /// `alpha(lambda)`.
    pub fn pairing(&self, root: usize, lambda: &[i64]) -> i64 {
        dot(&self.roots[root], lambda)
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        self.positive_roots().all(|a| self.pairing(a, lambda) >= 0)
    }

    pub fn is_antidominant(&self, lambda: &[i64]) -> bool {
        self.positive_roots().all(|a| self.pairing(a, lambda) <= 0)
    }

    /// Splits `lambda = plus - minus` with both parts dominant, choosing the
    /// componentwise-minimal nonnegative `minus` (for `GL_N`: a backward
    /// greedy scan; otherwise: clipped fundamental-coweight coordinates).
    pub fn dominant_split(&self, lambda: &[i64]) -> (Coweight, Coweight) {
        if let Some(n) = self.gl_size {
            let mut minus = vec![0i64; n];
            for i in (0..n - 1).rev() {
                minus[i] = minus[i + 1].max(minus[i + 1] + lambda[i + 1] - lambda[i]);
            }
            let plus: Vec<i64> = lambda.iter().zip(&minus).map(|(l, m)| l + m).collect();
            debug_assert!(self.is_dominant(&plus) && self.is_dominant(&minus));
            (plus, minus)
        } else {
            // Coordinates are fundamental-coweight coordinates exactly when
            // the datum came from a Cartan matrix.
            let plus: Vec<i64> = lambda.iter().map(|&x| x.max(0)).collect();
            let minus: Vec<i64> = lambda.iter().map(|&x| (-x).max(0)).collect();
            (plus, minus)
        }
    }

    /// Levels of `t^lambda J t^{-lambda}`: `alpha -> f(alpha) + alpha(lambda)`.
    pub fn conjugated_levels(&self, f: &ConcaveLevelFunction, lambda: &[i64]) -> Vec<i64> {
        self.all_roots().map(|a| f.level(a) + self.pairing(a, lambda)).collect()
    }

    /// Levels of `J ∩ t^lambda J t^{-lambda}`:
    /// `alpha -> max(f(alpha), f(alpha) + alpha(lambda))`.
    pub fn intersection_levels(&self, f: &ConcaveLevelFunction, lambda: &[i64]) -> Vec<i64> {
        self.all_roots()
            .map(|a| {
                let fa = f.level(a);
                fa.max(fa + self.pairing(a, lambda))
            })
            .collect()
    }

    /// Levels of `(t^{-lambda} U_f^+ t^lambda) ∩ (t^{-nu} U_f^+ t^nu)` on the
    /// positive roots: `alpha -> f(alpha) - min(alpha(lambda), alpha(nu))`.
    pub fn plus_part_intersection_levels(
        &self,
        f: &ConcaveLevelFunction,
        lambda: &[i64],
        nu: &[i64],
    ) -> Vec<(usize, i64)> {
        self.positive_roots()
            .map(|a| (a, f.level(a) - self.pairing(a, lambda).min(self.pairing(a, nu))))
            .collect()
    }

    /// `log_q vol(J t^lambda J) = sum_{alpha > 0} |alpha(lambda)|`
    /// (independent of the level function).
    pub fn log_volume(&self, lambda: &[i64]) -> i64 {
        self.positive_roots().map(|a| self.pairing(a, lambda).abs()).sum()
    }

    /// `-log_q b_lambda = sum_{alpha > 0} max(alpha(lambda), 0)`.
    pub fn b_lambda_exponent(&self, lambda: &[i64]) -> i64 {
        self.positive_roots().map(|a| self.pairing(a, lambda).max(0)).sum()
    }

    /// Fiber dimension `(log vol(J t^lambda J) + log vol(J t^nu J) -
    /// log vol(J t^{lambda+nu} J)) / 2` for `lambda` dominant and `nu`
    /// antidominant; always a nonnegative integer.
    pub fn semismall_fiber_dim(&self, lambda: &[i64], nu: &[i64]) -> Result<i64> {
        if !self.is_dominant(lambda) {
            return Err(Error::DominanceError(format!("{lambda:?} is not dominant")));
        }
        if !self.is_antidominant(nu) {
            return Err(Error::DominanceError(format!("{nu:?} is not antidominant")));
        }
        let sum: Vec<i64> = lambda.iter().zip(nu).map(|(a, b)| a + b).collect();
        let twice = self.log_volume(lambda) + self.log_volume(nu) - self.log_volume(&sum);
        assert!(twice >= 0 && twice % 2 == 0, "fiber dimension must be a nonnegative integer");
        Ok(twice / 2)
    }

    /// `log_q vol(t^{-lambda} J t^lambda J ∩ t^{-nu} J t^nu J)` for both
    /// arguments dominant: `(log vol_nu + log vol_lambda - log vol_{nu-lambda}) / 2`.
    pub fn intersection_dim(&self, lambda: &[i64], nu: &[i64]) -> Result<i64> {
        if !self.is_dominant(lambda) || !self.is_dominant(nu) {
            return Err(Error::DominanceError("intersection_dim needs dominant arguments".into()));
        }
        let diff: Vec<i64> = nu.iter().zip(lambda).map(|(a, b)| a - b).collect();
        let twice = self.log_volume(nu) + self.log_volume(lambda) - self.log_volume(&diff);
        assert!(twice % 2 == 0);
        Ok(twice / 2)
    }

    /// Applies the simple reflection `s_i` to a coweight.
    pub fn simple_reflect(&self, i: usize, lambda: &[i64]) -> Coweight {
        let a = self.simple[i];
        let pair = self.pairing(a, lambda);
        lambda
            .iter()
            .zip(&self.coroots[a])
            .map(|(x, c)| x - pair * c)
            .collect()
    }

    /// The Weyl orbit of a coweight.
    pub fn weyl_orbit(&self, lambda: &[i64]) -> Vec<Coweight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.to_vec());
        queue.push_back(lambda.to_vec());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.simple.len() {
                let y = self.simple_reflect(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Orbit of an `N`-tuple under the Weyl group of `GL_N` (coordinate
    /// permutations generated by the simple transpositions). Used for
    /// regularity of character tuples.
    pub fn weyl_orbit_of_tuple<T: Clone + Ord>(&self, tuple: &[T]) -> Vec<Vec<T>> {
        let n = self.gl_size.expect("tuple orbits are a GL_N notion");
        assert_eq!(tuple.len(), n);
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(tuple.to_vec());
        queue.push_back(tuple.to_vec());
        while let Some(x) = queue.pop_front() {
            for i in 0..n - 1 {
                let mut y = x.clone();
                y.swap(i, i + 1);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Warnings for excluded residue characteristics, per irreducible factor.
    pub fn residue_char_check(&self, p: u64) -> Vec<ResidueWarning> {
        let mut out = Vec::new();
        for &(series, rank) in &self.factors {
            let excluded: &[u64] = match series {
                Series::A => &[],
                Series::B | Series::C | Series::D => &[2],
                Series::F | Series::G => &[2, 3],
                Series::E if rank <= 7 => &[2, 3],
                Series::E => &[2, 3, 5],
            };
            if excluded.contains(&p) {
                out.push(ResidueWarning { series, rank, prime: p });
            }
        }
        out
    }
}

fn cartan_matrix(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    fn chain(a: &mut [Vec<i64>], n: usize) {
        for i in 0..n.saturating_sub(1) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match series {
        Series::A => {
            if n < 1 {
                return Err(Error::Config("A_n needs rank >= 1".into()));
            }
            chain(&mut a, n);
        }
        Series::B => {
            // alpha_n short: alpha_{n-1}(alpha_n^vee) = -2
            if n < 2 {
                return Err(Error::Config("B_n needs rank >= 2".into()));
            }
            chain(&mut a, n);
            a[n - 1][n - 2] = -2;
        }
        Series::C => {
            if n < 2 {
                return Err(Error::Config("C_n needs rank >= 2".into()));
            }
            chain(&mut a, n);
            a[n - 2][n - 1] = -2;
        }
        Series::D => {
            if n < 3 {
                return Err(Error::Config("D_n needs rank >= 3".into()));
            }
            chain(&mut a, n - 1);
            a[n - 1][n - 3] = -1;
            a[n - 3][n - 1] = -1;
        }
        Series::G => {
            if n != 2 {
                return Err(Error::Config("G_2 has rank 2".into()));
            }
            a[0][1] = -1;
            a[1][0] = -3;
        }
        Series::F => {
            if n != 4 {
                return Err(Error::Config("F_4 has rank 4".into()));
            }
            chain(&mut a, 4);
            a[1][2] = -2;
            a[2][1] = -1;
        }
        Series::E => {
            if !(6..=8).contains(&n) {
                return Err(Error::Config("E_n has rank 6, 7 or 8".into()));
            }
            // Bourbaki numbering: node 2 attaches to node 4.
            chain(&mut a, n);
            a[0][1] = 0;
            a[1][0] = 0;
            a[1][2] = 0;
            a[2][1] = 0;
            a[0][2] = -1;
            a[2][0] = -1;
            a[1][3] = -1;
            a[3][1] = -1;
        }
    }
    Ok(a)
}

/// A level function `f: roots -> Z` satisfying Roche's concavity conditions
/// (a) `f(alpha) + f(beta) >= f(alpha+beta)` and (b) `f(alpha) + f(-alpha) >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcaveLevelFunction {
    levels: Vec<i64>,
}

impl ConcaveLevelFunction {
    /// Validates a raw level assignment (indexed like the datum's roots).
    pub fn validate(rd: &RootDatum, levels: Vec<i64>) -> Result<ConcaveLevelFunction> {
        assert_eq!(levels.len(), rd.num_roots(), "level function must be total on the roots");
        for a in rd.all_roots() {
            let na = rd.negate(a);
            if levels[a] + levels[na] < 1 {
                return Err(Error::PositivityViolation { alpha: rd.root(a).to_vec() });
            }
            for b in rd.all_roots() {
                if let Some(s) = rd.root_sum(a, b) {
                    if levels[a] + levels[b] < levels[s] {
                        return Err(Error::ConcavityViolation {
                            alpha: rd.root(a).to_vec(),
                            beta: rd.root(b).to_vec(),
                        });
                    }
                }
            }
        }
        Ok(ConcaveLevelFunction { levels })
    }

    /// Builds levels from per-root conductors: `floor(c/2)` on positive
    /// roots, `ceil(c/2)` on negative ones.
    pub fn from_conductors(rd: &RootDatum, conductors: &[i64]) -> Result<ConcaveLevelFunction> {
        assert_eq!(conductors.len(), rd.num_roots());
        let levels = rd
            .all_roots()
            .map(|a| {
                let c = conductors[a];
                assert!(c >= 1, "conductors are >= 1");
                assert_eq!(c, conductors[rd.negate(a)], "conductors are symmetric in alpha");
                if rd.is_positive(a) {
                    c.div_euclid(2)
                } else {
                    (c + 1).div_euclid(2)
                }
            })
            .collect();
        Self::validate(rd, levels)
    }

    /// The Iwahori level function: 0 on positive roots, 1 on negative ones.
    pub fn iwahori(rd: &RootDatum) -> ConcaveLevelFunction {
        let levels = rd.all_roots().map(|a| i64::from(!rd.is_positive(a))).collect();
        Self::validate(rd, levels).expect("the Iwahori levels are concave")
    }

    pub fn level(&self, root: usize) -> i64 {
        self.levels[root]
    }

    pub fn levels(&self) -> &[i64] {
        &self.levels
    }

    pub fn max_level(&self) -> i64 {
        self.levels.iter().copied().max().unwrap_or(0)
    }
}

/// The box `{lambda : |lambda_i| <= bound}` (closed under negation).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaBox {
    pub rank: usize,
    pub bound: i64,
}

impl LambdaBox {
    pub fn new(rank: usize, bound: i64) -> LambdaBox {
        assert!(bound >= 0);
        LambdaBox { rank, bound }
    }

    pub fn contains(&self, lambda: &[i64]) -> bool {
        lambda.len() == self.rank && lambda.iter().all(|&x| x.abs() <= self.bound)
    }

    pub fn iter(&self) -> impl Iterator<Item = Coweight> + '_ {
        let b = self.bound;
        let r = self.rank;
        let total = (2 * b + 1).pow(r as u32);
        (0..total).map(move |mut k| {
            let mut v = Vec::with_capacity(r);
            for _ in 0..r {
                v.push((k % (2 * b + 1)) - b);
                k /= 2 * b + 1;
            }
            v
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_system_sizes() {
        assert_eq!(RootDatum::gl(2).num_roots(), 2);
        assert_eq!(RootDatum::gl(3).num_roots(), 6);
        assert_eq!(RootDatum::b2().num_roots(), 8);
        assert_eq!(RootDatum::g2().num_roots(), 12);
        assert_eq!(RootDatum::simple_type(Series::F, 4).unwrap().num_roots(), 48);
        assert_eq!(RootDatum::simple_type(Series::D, 4).unwrap().num_roots(), 24);
        assert_eq!(RootDatum::simple_type(Series::E, 8).unwrap().num_roots(), 240);
    }

    #[test]
    fn weyl_orbit_sizes() {
        let gl3 = RootDatum::gl(3);
        assert_eq!(gl3.weyl_orbit(&[1, 0, 0]).len(), 3);
        assert_eq!(gl3.weyl_orbit(&[2, 1, 0]).len(), 6);
        let b2 = RootDatum::b2();
        // regular orbit has size |W(B2)| = 8
        assert_eq!(b2.weyl_orbit(&[2, 1]).len(), 8);
        let g2 = RootDatum::g2();
        assert_eq!(g2.weyl_orbit(&[1, 1]).len(), 12);
    }

    #[test]
    fn iwahori_levels_are_concave() {
        let rd = RootDatum::gl(2);
        let f = ConcaveLevelFunction::iwahori(&rd);
        assert_eq!(f.level(rd.gl_root(0, 1)), 0);
        assert_eq!(f.level(rd.gl_root(1, 0)), 1);
    }

    #[test]
    fn zero_levels_violate_positivity() {
        let rd = RootDatum::gl(2);
        let err = ConcaveLevelFunction::validate(&rd, vec![0, 0]).unwrap_err();
        assert!(matches!(err, Error::PositivityViolation { .. }));
    }

    #[test]
    fn constant_one_levels_are_concave_on_gl3() {
        // Oracle: check the triple condition independently by brute force,
        // then confirm validate() agrees.
        let rd = RootDatum::gl(3);
        let levels = vec![1i64; rd.num_roots()];
        for a in rd.all_roots() {
            for b in rd.all_roots() {
                if let Some(s) = rd.root_sum(a, b) {
                    assert!(levels[a] + levels[b] >= levels[s]);
                }
            }
        }
        assert!(ConcaveLevelFunction::validate(&rd, levels).is_ok());
    }

    #[test]
    fn dominance_and_splits() {
        let gl2 = RootDatum::gl(2);
        assert!(gl2.is_dominant(&[1, 0]));
        assert_eq!(gl2.dominant_split(&[1, 0]), (vec![1, 0], vec![0, 0]));
        assert!(!gl2.is_dominant(&[0, 1]));
        assert_eq!(gl2.dominant_split(&[0, 1]), (vec![1, 1], vec![1, 0]));
        let gl3 = RootDatum::gl(3);
        assert!(gl3.is_dominant(&[2, 0, -1]));
        // splits recombine and are dominant, over the whole box
        for lam in LambdaBox::new(3, 2).iter() {
            let (p, m) = gl3.dominant_split(&lam);
            assert!(gl3.is_dominant(&p) && gl3.is_dominant(&m));
            let back: Vec<i64> = p.iter().zip(&m).map(|(a, b)| a - b).collect();
            assert_eq!(back, lam);
        }
    }

    #[test]
    fn conjugated_and_intersection_levels_gl2() {
        let rd = RootDatum::gl(2);
        let f = ConcaveLevelFunction::iwahori(&rd);
        let up = rd.gl_root(0, 1);
        let dn = rd.gl_root(1, 0);
        // lambda = 0 leaves levels unchanged
        assert_eq!(rd.conjugated_levels(&f, &[0, 0]), f.levels().to_vec());
        assert_eq!(rd.intersection_levels(&f, &[0, 0]), f.levels().to_vec());
        let conj = rd.conjugated_levels(&f, &[1, 0]);
        assert_eq!(conj[up], 1);
        assert_eq!(conj[dn], 0);
        let inter = rd.intersection_levels(&f, &[1, 0]);
        assert_eq!(inter[up], 1);
        assert_eq!(inter[dn], 1);
        // conjugating by lambda then -lambda is the identity
        for lam in LambdaBox::new(2, 2).iter() {
            let once = rd.conjugated_levels(&f, &lam);
            let neg: Vec<i64> = lam.iter().map(|&x| -x).collect();
            let back: Vec<i64> = rd
                .all_roots()
                .map(|a| once[a] + rd.pairing(a, &neg))
                .collect();
            assert_eq!(back, f.levels().to_vec());
        }
    }

    #[test]
    fn plus_part_levels() {
        let rd = RootDatum::gl(2);
        let f = ConcaveLevelFunction::iwahori(&rd);
        let up = rd.gl_root(0, 1);
        // lambda = nu = 0 restricts f to the positive roots
        let base = rd.plus_part_intersection_levels(&f, &[0, 0], &[0, 0]);
        assert_eq!(base, vec![(up, 0)]);
        // lambda=(1,0), nu=(2,0): f(alpha) - 1
        let lv = rd.plus_part_intersection_levels(&f, &[1, 0], &[2, 0]);
        assert_eq!(lv, vec![(up, -1)]);
    }

    #[test]
    fn volume_formula_values() {
        let gl2 = RootDatum::gl(2);
        assert_eq!(gl2.log_volume(&[1, 0]), 1);
        assert_eq!(gl2.log_volume(&[0, 0]), 0);
        let gl3 = RootDatum::gl(3);
        assert_eq!(gl3.log_volume(&[2, 0, -1]), 6);
    }

    #[test]
    fn b_lambda_exponent_values() {
        let gl2 = RootDatum::gl(2);
        assert_eq!(gl2.b_lambda_exponent(&[1, 0]), 1);
        // antidominant regular: all pairings <= 0
        assert_eq!(gl2.b_lambda_exponent(&[-2, 1]), 0);
        // b_lambda b_{-lambda} = vol^{-1}
        for lam in LambdaBox::new(2, 3).iter() {
            let neg: Vec<i64> = lam.iter().map(|&x| -x).collect();
            assert_eq!(
                gl2.b_lambda_exponent(&lam) + gl2.b_lambda_exponent(&neg),
                gl2.log_volume(&lam)
            );
        }
    }

    #[test]
    fn volume_additivity_on_dominant_cone() {
        for rd in [RootDatum::gl(2), RootDatum::gl(3), RootDatum::b2(), RootDatum::g2()] {
            let boxi = LambdaBox::new(rd.rank(), 2);
            let doms: Vec<_> = boxi.iter().filter(|l| rd.is_dominant(l)).collect();
            for a in &doms {
                for b in &doms {
                    let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    assert_eq!(rd.log_volume(&sum), rd.log_volume(a) + rd.log_volume(b));
                }
            }
        }
    }

    #[test]
    fn semismall_fiber_dims() {
        let gl2 = RootDatum::gl(2);
        assert_eq!(gl2.semismall_fiber_dim(&[1, 0], &[0, 0]).unwrap(), 0);
        assert_eq!(gl2.semismall_fiber_dim(&[1, 0], &[-1, 0]).unwrap(), 1);
        assert_eq!(gl2.semismall_fiber_dim(&[2, 0], &[-1, 0]).unwrap(), 1);
        assert!(gl2.semismall_fiber_dim(&[0, 1], &[0, 0]).is_err());
        // integral and nonnegative across the dominant x antidominant box
        for rd in [RootDatum::gl(2), RootDatum::gl(3), RootDatum::b2(), RootDatum::g2()] {
            let boxi = LambdaBox::new(rd.rank(), 2);
            for lam in boxi.iter().filter(|l| rd.is_dominant(l)) {
                for nu in boxi.iter().filter(|l| rd.is_antidominant(l)) {
                    let d = rd.semismall_fiber_dim(&lam, &nu).unwrap();
                    assert!(d >= 0);
                }
            }
        }
    }

    #[test]
    fn intersection_dim_values_and_oracle() {
        let gl2 = RootDatum::gl(2);
        // lambda = nu: the intersection is the whole set
        assert_eq!(gl2.intersection_dim(&[1, 0], &[1, 0]).unwrap(), gl2.log_volume(&[1, 0]));
        assert_eq!(gl2.intersection_dim(&[1, 0], &[2, 0]).unwrap(), 1);
        // direct min-sum oracle over dominant pairs
        for rd in [RootDatum::gl(2), RootDatum::gl(3), RootDatum::b2()] {
            let boxi = LambdaBox::new(rd.rank(), 2);
            let doms: Vec<_> = boxi.iter().filter(|l| rd.is_dominant(l)).collect();
            for a in &doms {
                for b in &doms {
                    let oracle: i64 = rd
                        .positive_roots()
                        .map(|r| rd.pairing(r, a).min(rd.pairing(r, b)))
                        .sum();
                    assert_eq!(rd.intersection_dim(a, b).unwrap(), oracle);
                }
            }
        }
    }

    #[test]
    fn residue_char_table() {
        assert!(RootDatum::gl(5).residue_char_check(2).is_empty());
        assert!(RootDatum::gl(5).residue_char_check(3).is_empty());
        assert_eq!(RootDatum::b2().residue_char_check(2).len(), 1);
        assert!(RootDatum::b2().residue_char_check(3).is_empty());
        assert_eq!(RootDatum::g2().residue_char_check(3).len(), 1);
        let e8 = RootDatum::simple_type(Series::E, 8).unwrap();
        assert!(e8.residue_char_check(7).is_empty());
        assert_eq!(e8.residue_char_check(5).len(), 1);
        assert_eq!(e8.residue_char_check(2).len(), 1);
        let e7 = RootDatum::simple_type(Series::E, 7).unwrap();
        assert!(e7.residue_char_check(5).is_empty());
        assert_eq!(e7.residue_char_check(3).len(), 1);
    }

    #[test]
    fn tuple_orbits_are_permutations() {
        let gl3 = RootDatum::gl(3);
        let orbit = gl3.weyl_orbit_of_tuple(&[0u32, 1, 2]);
        assert_eq!(orbit.len(), 6);
        let orbit = gl3.weyl_orbit_of_tuple(&[0u32, 0, 1]);
        assert_eq!(orbit.len(), 3);
    }

    #[test]
    fn from_conductors_matches_floor_ceil_rule() {
        let rd = RootDatum::gl(2);
        let up = rd.gl_root(0, 1);
        let dn = rd.gl_root(1, 0);
        // c = 1: Iwahori
        let f = ConcaveLevelFunction::from_conductors(&rd, &[1, 1]).unwrap();
        assert_eq!((f.level(up), f.level(dn)), (0, 1));
        // c = 2: level 1 on both sides
        let f = ConcaveLevelFunction::from_conductors(&rd, &[2, 2]).unwrap();
        assert_eq!((f.level(up), f.level(dn)), (1, 1));
        // c = 3: floor 1 above, ceil 2 below
        let f = ConcaveLevelFunction::from_conductors(&rd, &[3, 3]).unwrap();
        assert_eq!((f.level(up), f.level(dn)), (1, 2));
    }

    #[test]
    fn b2_and_g2_have_integral_halved_formulas() {
        for rd in [RootDatum::b2(), RootDatum::g2()] {
            let boxi = LambdaBox::new(rd.rank(), 2);
            for lam in boxi.iter() {
                let neg: Vec<i64> = lam.iter().map(|&x| -x).collect();
                assert_eq!(
                    rd.b_lambda_exponent(&lam) + rd.b_lambda_exponent(&neg),
                    rd.log_volume(&lam)
                );
                assert_eq!(rd.log_volume(&lam), rd.log_volume(&neg));
            }
        }
    }
}
