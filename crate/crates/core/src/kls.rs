//! Generic solver for `Q_G(t)` and `Y_G(t)` of small loopless graphs.
//!
//! `Q_G` is the unique polynomial of degree `< rk(G)/2` with
//!
//! ```text
//! (-t)^{rk G} Q_G(1/t) = sum_{C in C(G)} (-1)^{rk G[C]} Q_{G[C]}(t) t^{|C|} chi_{G/C}(1/t)
//! ```
//!
//! For connected `G` the single-block composition contributes
//! `(-1)^{rk G} Q_G(t)`; moving it to the left leaves
//! `(-1)^r (t^r Q(1/t) - Q(t)) = R(t)` where `R` only involves strictly
//! smaller graphs. The two sides of the bracket occupy disjoint degree
//! ranges, so the coefficients of `Q` are read off the top half of `R`
//! and the bottom half is checked against them.
//!
//! `Y_G` is evaluated directly from its signed sum over compositions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, MAX_ENUM_VERTICES};
use crate::poly::IntPoly;

/// Largest `n` for which [`q_fan_oracle`] runs by default.
pub const Q_FAN_ORACLE_MAX_N: usize = 7;
/// Largest `n` for which [`y_fan_oracle`] runs by default.
pub const Y_FAN_ORACLE_MAX_N: usize = 6;

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Memoizing solver. The caches are keyed by labeled simple graphs and
/// live for as long as the solver; a solver is not shared across threads.
#[derive(Default)]
pub struct KlsSolver {
    q_memo: HashMap<Multigraph, IntPoly>,
    chi_memo: HashMap<Multigraph, IntPoly>,
}

impl KlsSolver {
    pub fn new() -> Self {
        Self::default()
    }

    fn check_cap(g: &Multigraph) -> Result<()> {
        if g.n_vertices() > MAX_ENUM_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count for the composition oracle",
                cap: MAX_ENUM_VERTICES,
                got: g.n_vertices(),
            });
        }
        Ok(())
    }

    /// Inverse Kazhdan–Lusztig polynomial of `M(G)`.
    pub fn q_graph(&mut self, g: &Multigraph) -> Result<IntPoly> {
        Self::check_cap(g)?;
        let g = g.simplify();
        if g.rank() == 0 {
            return Ok(IntPoly::one());
        }
        let mut acc = IntPoly::one();
        for comp in g.components() {
            if comp.n_vertices() > 1 {
                acc = acc * self.q_connected(&comp)?;
            }
        }
        Ok(acc)
    }

    fn chromatic(&mut self, g: &Multigraph) -> Result<IntPoly> {
        let key = g.simplify();
        if let Some(p) = self.chi_memo.get(&key) {
            return Ok(p.clone());
        }
        let p = key.chromatic_polynomial()?;
        self.chi_memo.insert(key, p.clone());
        Ok(p)
    }

    /// `Q` of a restriction `G[C]`: the product over the induced blocks.
    fn q_restriction(&mut self, g: &Multigraph, blocks: &[Vec<usize>]) -> Result<IntPoly> {
        let mut acc = IntPoly::one();
        for b in blocks.iter().filter(|b| b.len() > 1) {
            acc = acc * self.q_connected(&g.induced(b))?;
        }
        Ok(acc)
    }

    /// `g` must be simple and connected with at least two vertices.
    fn q_connected(&mut self, g: &Multigraph) -> Result<IntPoly> {
        if let Some(q) = self.q_memo.get(g) {
            return Ok(q.clone());
        }
        let n = g.n_vertices();
        let r = n - 1;
        let mut rhs = IntPoly::zero();
        for c in g.compositions()? {
            if c.len() == 1 {
                continue;
            }
            let q_restr = self.q_restriction(g, c.blocks())?;
            let chi = self.chromatic(&g.contract_unchecked(&c))?;
            let term = q_restr * chi.reverse(c.len())?;
            rhs = if (n - c.len()).is_multiple_of(2) { rhs + term } else { rhs - term };
        }

        let sr = sign(r);
        let top = rhs.degree().unwrap_or(0);
        if top > r {
            return Err(Error::Consistency(format!(
                "recursion right-hand side {rhs} has degree {top} > rank {r} for graph {:?}",
                g.edges()
            )));
        }
        let half = r.div_ceil(2); // indices i with 2i < r
        let q = IntPoly::new((0..half).map(|i| &sr * rhs.coeff(r - i)).collect());
        for j in 0..half {
            if rhs.coeff(j) != -(&sr * q.coeff(j)) {
                return Err(Error::Consistency(format!(
                    "low coefficient t^{j} of {rhs} disagrees with Q = {q} for graph {:?}",
                    g.edges()
                )));
            }
        }
        if r.is_multiple_of(2) && !rhs.coeff(r / 2).is_zero() {
            return Err(Error::Consistency(format!(
                "middle coefficient of {rhs} is nonzero for graph {:?}",
                g.edges()
            )));
        }
        self.q_memo.insert(g.clone(), q.clone());
        Ok(q)
    }

    /// Inverse Z-polynomial of `M(G)`.
    pub fn y_graph(&mut self, g: &Multigraph) -> Result<IntPoly> {
        Self::check_cap(g)?;
        let g = g.simplify();
        let n = g.n_vertices();
        let mut acc = IntPoly::zero();
        for c in g.compositions()? {
            let rank_restr = n - c.len();
            let q_restr = self.q_restriction(&g, c.blocks())?;
            let contracted = g.contract_unchecked(&c);
            let rank_contr = contracted.rank();
            let chi = self.chromatic(&contracted)?;
            let k = contracted.n_components();
            let mu = chi.coeff(k);
            let term = q_restr.scale(&mu).shift(rank_contr);
            acc = if rank_restr.is_multiple_of(2) { acc + term } else { acc - term };
        }
        Ok(acc.scale(&sign(g.rank())))
    }
}

pub fn q_graph(g: &Multigraph) -> Result<IntPoly> {
    KlsSolver::new().q_graph(g)
}

pub fn y_graph(g: &Multigraph) -> Result<IntPoly> {
    KlsSolver::new().y_graph(g)
}

pub fn q_fan_oracle(n: usize) -> Result<IntPoly> {
    q_fan_oracle_capped(n, Q_FAN_ORACLE_MAX_N)
}

pub fn y_fan_oracle(n: usize) -> Result<IntPoly> {
    y_fan_oracle_capped(n, Y_FAN_ORACLE_MAX_N)
}

/// [`q_fan_oracle`] with an explicit cap on `n`; the vertex cap of the
/// composition enumeration still applies.
pub fn q_fan_oracle_capped(n: usize, cap: usize) -> Result<IntPoly> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "fan size for the Q oracle",
            cap,
            got: n,
        });
    }
    q_graph(&Multigraph::fan(n))
}

/// [`y_fan_oracle`] with an explicit cap on `n`. Also asserts that the
/// result is palindromic of degree `n`.
pub fn y_fan_oracle_capped(n: usize, cap: usize) -> Result<IntPoly> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "fan size for the Y oracle",
            cap,
            got: n,
        });
    }
    let y = y_graph(&Multigraph::fan(n))?;
    if y.degree() != Some(n) || !y.is_palindromic(n)? {
        return Err(Error::Consistency(format!(
            "Y of the fan F_{n} is {y}, not palindromic of degree {n}"
        )));
    }
    Ok(y)
}
