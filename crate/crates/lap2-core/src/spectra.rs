//! Exact spectral quantities of graph Laplacians: integral eigenvalue
//! multiplicities, the characteristic polynomial in Laplacian-coefficient
//! form, the spanning-forest coefficient oracle, spanning-tree counts, the
//! rational eigenspace of 2, and an advisory floating-point spectrum.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact::{self, Int, Rat};
use crate::graph::Graph;
use crate::jacobi;

/// Default vertex cap for the exhaustive spanning-forest oracle.
pub const FOREST_ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectraError {
    /// Graph too large for the exhaustive oracle.
    TooLarge,
    Disconnected,
    ConvergenceFailure,
    DimensionMismatch,
}

impl fmt::Display for SpectraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectraError::TooLarge => write!(f, "graph too large for exhaustive oracle"),
            SpectraError::Disconnected => write!(f, "graph is disconnected"),
            SpectraError::ConvergenceFailure => write!(f, "eigensolver did not converge"),
            SpectraError::DimensionMismatch => write!(f, "vector length does not match graph"),
        }
    }
}

/// Characteristic polynomial of a Laplacian in coefficient form:
/// `det(xI - L) = sum_i (-1)^i xi[i] x^(n-i)`.
///
/// For Laplacians every `xi[i]` is non-negative, `xi[0] = 1`,
/// `xi[1] = 2m`, `xi[n] = 0` and `xi[n-1] = n * tau(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    xi: Vec<Int>,
}

impl CharPoly {
    pub fn n(&self) -> usize {
        self.xi.len() - 1
    }

    /// Coefficients `xi_0..xi_n`.
    pub fn xi(&self) -> &[Int] {
        &self.xi
    }

    /// Ascending coefficients of `det(xI - L)` itself.
    pub fn monic_coeffs(&self) -> Vec<Int> {
        let n = self.n();
        (0..=n)
            .map(|j| {
                // Coefficient of x^j is (-1)^(n-j) * xi[n-j].
                let i = n - j;
                if i % 2 == 0 {
                    self.xi[i].clone()
                } else {
                    -self.xi[i].clone()
                }
            })
            .collect()
    }

    /// Multiplicity of `root` as a zero of the polynomial.
    pub fn root_multiplicity(&self, root: i64) -> usize {
        exact::root_multiplicity(&self.monic_coeffs(), root)
    }
}

/// Exact characteristic polynomial of the Laplacian.
pub fn char_poly(g: &Graph) -> CharPoly {
    let l = g.laplacian();
    let coeffs = exact::char_poly_coeffs(l.rows());
    let n = g.vertex_count();
    let xi: Vec<Int> = (0..=n)
        .map(|i| {
            let c = &coeffs[n - i];
            if i % 2 == 0 {
                c.clone()
            } else {
                -c.clone()
            }
        })
        .collect();
    debug_assert!(xi.iter().all(|x| !x.is_negative()));
    CharPoly { xi }
}

/// Exact multiplicity of the integer `mu` as a Laplacian eigenvalue,
/// computed as `n - rank(L - mu I)` by fraction-free elimination.
pub fn integral_multiplicity(g: &Graph, mu: i64) -> usize {
    let lap = g.laplacian();
    g.vertex_count() - exact::rank_shifted(lap.rows(), mu)
}

/// Sum of `gamma(F)` over all spanning forests with exactly `k` components,
/// where `gamma` is the product of component orders. Exhaustive enumeration
/// of acyclic edge subsets; independent of the characteristic polynomial
/// path.
pub fn forest_coefficient_oracle(g: &Graph, k: usize, cap: usize) -> Result<Int, SpectraError> {
    if g.vertex_count() > cap {
        return Err(SpectraError::TooLarge);
    }
    if k < 1 || k > g.vertex_count() {
        return Ok(Int::zero());
    }
    Ok(forest_coefficients_all(g, cap)?[k].clone())
}

/// All oracle sums at once: entry `k` is the sum over forests with `k`
/// components (entry 0 unused and zero).
pub fn forest_coefficients_all(g: &Graph, cap: usize) -> Result<Vec<Int>, SpectraError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SpectraError::TooLarge);
    }
    let mut acc = vec![Int::zero(); n + 1];
    // DSU as plain arrays, cloned per recursion level; desk scale keeps
    // this cheap and the code simple.
    struct State {
        parent: Vec<usize>,
        size: Vec<usize>,
    }
    impl State {
        fn find(&mut self, mut x: usize) -> usize {
            while self.parent[x] != x {
                self.parent[x] = self.parent[self.parent[x]];
                x = self.parent[x];
            }
            x
        }
    }
    fn go(
        edges: &[(usize, usize)],
        idx: usize,
        n: usize,
        comps: usize,
        st: &State,
        acc: &mut [Int],
    ) {
        if idx == edges.len() {
            // gamma(F) = product of component sizes.
            let mut st2 = State {
                parent: st.parent.clone(),
                size: st.size.clone(),
            };
            let mut gamma = Int::one();
            for v in 0..n {
                if st2.find(v) == v {
                    gamma *= Int::from(st2.size[v] as i64);
                }
            }
            acc[comps] += gamma;
            return;
        }
        // Skip this edge.
        go(edges, idx + 1, n, comps, st, acc);
        // Take it if it connects two components.
        let (a, b) = edges[idx];
        let mut st2 = State {
            parent: st.parent.clone(),
            size: st.size.clone(),
        };
        let ra = st2.find(a);
        let rb = st2.find(b);
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            st2.parent[hi] = lo;
            st2.size[lo] += st2.size[hi];
            go(edges, idx + 1, n, comps - 1, &st2, acc);
        }
    }
    let st = State {
        parent: (0..n).collect(),
        size: vec![1; n],
    };
    go(g.edges(), 0, n, n, &st, &mut acc);
    Ok(acc)
}

/// Number of spanning trees, via `xi[n-1] = n * tau(G)` with exact division.
pub fn spanning_tree_count(g: &Graph) -> Result<Int, SpectraError> {
    if !g.is_connected() {
        return Err(SpectraError::Disconnected);
    }
    let n = g.vertex_count();
    if n == 1 {
        return Ok(Int::one());
    }
    let cp = char_poly(g);
    let num = &cp.xi()[n - 1];
    let den = Int::from(n as i64);
    debug_assert!((num % &den).is_zero());
    Ok(num / den)
}

/// Exact rational basis of `ker(L - 2I)`, each vector normalized to a
/// leading `+1`. Empty when 2 is not an eigenvalue.
pub fn nullspace_2(g: &Graph) -> Vec<Vec<Rat>> {
    let shifted = g.laplacian().shifted(2);
    exact::nullspace(&shifted)
}

/// Floating-point Laplacian spectrum, descending. Advisory only.
pub fn float_spectrum(g: &Graph) -> Result<Vec<f64>, SpectraError> {
    jacobi::eigenvalues_desc(g.laplacian().rows())
        .map_err(|_| SpectraError::ConvergenceFailure)
}

/// Exact vertex-wise eigen-valuation check: `x` is an eigenvector of the
/// Laplacian for integer eigenvalue `mu` iff `x` is nonzero and
/// `(d(v) - mu) x(v) = sum over neighbors w of x(w)` at every vertex.
pub fn verify_eigenpair(g: &Graph, mu: i64, x: &[Rat]) -> Result<bool, SpectraError> {
    if x.len() != g.vertex_count() {
        return Err(SpectraError::DimensionMismatch);
    }
    if x.iter().all(|v| v.is_zero()) {
        return Ok(false);
    }
    for v in 0..g.vertex_count() {
        let lhs = Rat::from(Int::from(g.degree(v) as i64 - mu)) * x[v].clone();
        let mut rhs = Rat::zero();
        for &w in g.neighbors(v) {
            rhs += x[w].clone();
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Convenience: integer slice to rational vector.
pub fn rat_vec(entries: &[i64]) -> Vec<Rat> {
    entries.iter().map(|&x| Rat::from(Int::from(x))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn cycle(g: usize) -> Graph {
        generate(&FamilySpec::Cycle { g }).unwrap()
    }

    fn pendant_square() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 4), (1, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn multiplicity_of_two() {
        assert_eq!(integral_multiplicity(&cycle(4), 2), 2);
        assert_eq!(integral_multiplicity(&cycle(3), 2), 0);
        assert!(integral_multiplicity(&pendant_square(), 2) >= 1);
    }

    #[test]
    fn char_poly_examples() {
        let c3 = char_poly(&cycle(3));
        let want: Vec<Int> = [1, 6, 9, 0].iter().map(|&x| Int::from(x)).collect();
        assert_eq!(c3.xi(), &want[..]);

        let s2 = Graph::new(2, &[(0, 1)]).unwrap();
        let cp = char_poly(&s2);
        let want: Vec<Int> = [1, 2, 0].iter().map(|&x| Int::from(x)).collect();
        assert_eq!(cp.xi(), &want[..]);
    }

    #[test]
    fn xi_one_is_twice_edge_count() {
        for g in [cycle(5), pendant_square()] {
            let cp = char_poly(&g);
            assert_eq!(cp.xi()[1], Int::from(2 * g.edge_count() as i64));
        }
    }

    #[test]
    fn root_multiplicity_agrees_with_rank() {
        for g in [cycle(3), cycle(4), cycle(6), pendant_square()] {
            let cp = char_poly(&g);
            for mu in 0..=(g.vertex_count() as i64) {
                assert_eq!(
                    cp.root_multiplicity(mu),
                    integral_multiplicity(&g, mu),
                    "graph {} mu {mu}",
                    g.id()
                );
            }
        }
    }

    #[test]
    fn forest_oracle_on_triangle() {
        let c3 = cycle(3);
        assert_eq!(
            forest_coefficient_oracle(&c3, 2, FOREST_ORACLE_CAP).unwrap(),
            Int::from(6)
        );
        assert_eq!(
            forest_coefficient_oracle(&c3, 1, FOREST_ORACLE_CAP).unwrap(),
            Int::from(9)
        );
        assert_eq!(
            forest_coefficient_oracle(&c3, 3, FOREST_ORACLE_CAP).unwrap(),
            Int::one()
        );
    }

    #[test]
    fn forest_oracle_matches_char_poly_small() {
        for g in [cycle(3), cycle(5), pendant_square()] {
            let cp = char_poly(&g);
            let all = forest_coefficients_all(&g, FOREST_ORACLE_CAP).unwrap();
            let n = g.vertex_count();
            for k in 1..=n {
                assert_eq!(cp.xi()[n - k], all[k], "graph {} k {k}", g.id());
            }
        }
    }

    #[test]
    fn oracle_cap_enforced() {
        let c3 = cycle(3);
        assert_eq!(
            forest_coefficient_oracle(&c3, 1, 2).unwrap_err(),
            SpectraError::TooLarge
        );
    }

    #[test]
    fn spanning_trees() {
        assert_eq!(spanning_tree_count(&cycle(5)).unwrap(), Int::from(5));
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(spanning_tree_count(&p4).unwrap(), Int::one());
        let join = cycle(3).one_edge_connect(&cycle(4), 0, 0).unwrap();
        assert_eq!(spanning_tree_count(&join).unwrap(), Int::from(12));
    }

    #[test]
    fn nullspace_dimensions() {
        let s2 = Graph::new(2, &[(0, 1)]).unwrap();
        let basis = nullspace_2(&s2);
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], rat_vec(&[1, -1]));

        assert_eq!(nullspace_2(&cycle(4)).len(), 2);
        assert!(nullspace_2(&cycle(3)).is_empty());
    }

    #[test]
    fn nullspace_vectors_verify() {
        for g in [cycle(4), pendant_square()] {
            for v in nullspace_2(&g) {
                assert!(verify_eigenpair(&g, 2, &v).unwrap());
            }
        }
    }

    #[test]
    fn eigenpair_checks() {
        let s2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!(verify_eigenpair(&s2, 2, &rat_vec(&[1, -1])).unwrap());
        assert!(verify_eigenpair(&pendant_square(), 2, &rat_vec(&[0, 0, -1, 1, 0])).unwrap());
        assert!(!verify_eigenpair(&cycle(3), 2, &rat_vec(&[1, -1, 0])).unwrap());
        assert!(!verify_eigenpair(&cycle(3), 2, &rat_vec(&[0, 0, 0])).unwrap());
        assert_eq!(
            verify_eigenpair(&cycle(3), 2, &rat_vec(&[1, 0])).unwrap_err(),
            SpectraError::DimensionMismatch
        );
    }

    #[test]
    fn float_spectrum_examples() {
        let vals = float_spectrum(&cycle(4)).unwrap();
        for (a, b) in vals.iter().zip([4.0, 2.0, 2.0, 0.0].iter()) {
            assert!((a - b).abs() < 1e-9);
        }
        let s2 = Graph::new(2, &[(0, 1)]).unwrap();
        let vals = float_spectrum(&s2).unwrap();
        assert!((vals[0] - 2.0).abs() < 1e-9 && vals[1].abs() < 1e-9);
    }
}
