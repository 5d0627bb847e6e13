use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::charlib::{Group, VirtualRep};
use crate::error::{Error, Result};
use crate::linalg::{qz, QMatrix};
use crate::rootdata::Weight;

/// Computes images in `V(G)` of irreducible representations without building polynomials.
///
/// Applying the linear part of `[xy] = eps_y [x] + eps_x [y] - eps_x eps_y` to the
/// Brauer–Klimyk expansion of `V_b (x) V_{omega_j}` gives
/// `v(V_{b + omega_j}) = dim(omega_j) v(V_b) + dim(b) e_j - sum_{nu != omega_j} m(nu) sign v(V_{dom(nu + b + rho) - rho})`,
/// a recursion over strictly lower highest weights.
pub struct VEngine<'g> {
    g: &'g Group,
    memo: HashMap<Weight, Arc<Vec<BigInt>>>,
    fund: HashMap<usize, Arc<Vec<(Weight, BigInt)>>>,
    order: Vec<usize>,
}

impl<'g> VEngine<'g> {
    pub fn new(g: &'g Group) -> Self {
        let mut order: Vec<usize> = g.rs.semisimple_coords().to_vec();
        order.sort_by_key(|&i| (g.weyl_dim_unchecked(&g.rs.fundamental_weight(i)), i));
        VEngine { g, memo: HashMap::new(), fund: HashMap::new(), order }
    }

    fn fundamental_char(&mut self, j: usize) -> Result<Arc<Vec<(Weight, BigInt)>>> {
        if let Some(c) = self.fund.get(&j) {
            return Ok(c.clone());
        }
        let c = self.g.full_character(&self.g.rs.fundamental_weight(j))?;
        self.fund.insert(j, c.clone());
        Ok(c)
    }

    /// Lower constituents of `V_{lambda - omega_j} (x) V_{omega_j}` with signs.
    fn expansion(&mut self, lambda: &[i64], j: usize) -> Result<(Weight, Vec<(Weight, BigInt)>)> {
        let mut base = lambda.to_vec();
        base[j] -= 1;
        let chi = self.fundamental_char(j)?;
        let omega = self.g.rs.fundamental_weight(j);
        let mut acc: HashMap<Weight, BigInt> = HashMap::new();
        let mut w = vec![0i64; lambda.len()];
        let mut skipped = false;
        for (nu, m) in chi.iter() {
            if !skipped && *nu == omega {
                skipped = true;
                continue;
            }
            for (i, x) in w.iter_mut().enumerate() {
                *x = nu[i] + base[i];
            }
            let (d, s) = self.g.rs.dominant_rho_shifted(&w);
            if s != 0 {
                *acc.entry(d).or_default() += m * s;
            }
        }
        if let Some(c) = acc.remove(lambda) {
            if !c.is_zero() {
                return Err(Error::Inconsistent(format!("highest weight {lambda:?} recurs in its own expansion")));
            }
        }
        let mut terms: Vec<(Weight, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort();
        Ok((base, terms))
    }

    /// `v(V_lambda)` as an integer vector in the generator basis.
    pub fn irrep(&mut self, lambda: &[i64]) -> Result<Vec<BigInt>> {
        let rs = &self.g.rs;
        rs.check_len(lambda)?;
        if !rs.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_vec()));
        }
        let rank = self.g.rank();
        let mut ss = lambda.to_vec();
        let mut torus = vec![0i64; rank];
        for i in 0..rank {
            if rs.is_torus[i] {
                torus[i] = lambda[i];
                ss[i] = 0;
            }
        }
        let mut stack = vec![ss.clone()];
        let mut pending: HashMap<Weight, (usize, Weight, Vec<(Weight, BigInt)>)> = HashMap::new();
        while let Some(top) = stack.last().cloned() {
            if self.memo.contains_key(&top) {
                stack.pop();
                continue;
            }
            let Some(j) = self.order.iter().copied().find(|&i| top[i] > 0) else {
                self.memo.insert(top.clone(), Arc::new(vec![BigInt::zero(); rank]));
                stack.pop();
                continue;
            };
            if top.iter().sum::<i64>() == 1 {
                let mut e = vec![BigInt::zero(); rank];
                e[j] = BigInt::one();
                self.memo.insert(top.clone(), Arc::new(e));
                stack.pop();
                continue;
            }
            if !pending.contains_key(&top) {
                let (base, terms) = self.expansion(&top, j)?;
                pending.insert(top.clone(), (j, base, terms));
            }
            let (j, base, terms) = &pending[&top];
            let missing: Vec<Weight> = std::iter::once(base)
                .chain(terms.iter().map(|(w, _)| w))
                .filter(|w| !self.memo.contains_key(*w))
                .cloned()
                .collect();
            if missing.is_empty() {
                let dim_j = self.g.weyl_dim_unchecked(&self.g.rs.fundamental_weight(*j));
                let dim_b = self.g.weyl_dim_unchecked(base);
                let mut v: Vec<BigInt> = self.memo[base].iter().map(|x| x * &dim_j).collect();
                v[*j] += dim_b;
                for (w, c) in terms {
                    for (a, x) in v.iter_mut().zip(self.memo[w].iter()) {
                        *a -= c * x;
                    }
                }
                self.memo.insert(top.clone(), Arc::new(v));
                pending.remove(&top);
                stack.pop();
            } else {
                stack.extend(missing);
            }
        }
        let mut v = self.memo[&ss].as_ref().clone();
        if torus.iter().any(|t| *t != 0) {
            let d = self.g.weyl_dim_unchecked(&ss);
            for i in 0..rank {
                v[i] += &d * torus[i];
            }
        }
        Ok(v)
    }

    pub fn of(&mut self, x: &VirtualRep) -> Result<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.g.rank()];
        for (w, c) in &x.terms {
            for (a, b) in out.iter_mut().zip(self.irrep(w)?) {
                *a += c * b;
            }
        }
        Ok(out)
    }

    /// Matrix of `psi^k` on `V(G) (x) Q`: column `j` is `v(psi^k w_j)`.
    pub fn adams_matrix(&mut self, k: i64) -> Result<QMatrix> {
        let rank = self.g.rank();
        let mut cols = Vec::with_capacity(rank);
        for j in 0..rank {
            let col = if self.g.rs.is_torus[j] {
                let mut e = vec![BigInt::zero(); rank];
                e[j] = BigInt::from(k);
                e
            } else {
                let x = self.g.adams(k, &self.g.fundamental(j))?;
                self.of(&x)?
            };
            cols.push(col.iter().map(qz).collect());
        }
        Ok(QMatrix::from_columns(&cols))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_ring::{s_reduce, to_fund_poly, v_class};

    #[test]
    fn agrees_with_polynomial_route() {
        for label in ["A2", "G2", "B3", "C3", "D4", "A1xA2"] {
            let g = Group::parse(label).unwrap();
            let dims: Vec<BigInt> = (0..g.rank()).map(|i| g.weyl_dim(&g.rs.fundamental_weight(i)).unwrap()).collect();
            let mut eng = VEngine::new(&g);
            let weights: Vec<Weight> = match g.rank() {
                2 => vec![vec![2, 1], vec![0, 3], vec![1, 1]],
                3 => vec![vec![1, 1, 0], vec![0, 2, 1], vec![2, 0, 1]],
                _ => vec![vec![1, 0, 1, 1], vec![0, 2, 0, 0], vec![1, 0, 0, 2]],
            };
            for w in weights {
                let p = to_fund_poly(&g, &VirtualRep::irrep(w.clone())).unwrap();
                let expect = v_class(&s_reduce(&p, &dims));
                let got: Vec<_> = eng.irrep(&w).unwrap().iter().map(qz).collect();
                assert_eq!(got, expect, "{label} {w:?}");
            }
        }
    }

    #[test]
    fn torus_shift() {
        let g = Group::parse("A1xT1").unwrap();
        let mut eng = VEngine::new(&g);
        // V_2 = w^2 - 1 reduces to 4[w] - 5, so V_2 (x) xi^3 has v = 4 e_1 + 3 * 3 e_2.
        assert_eq!(eng.irrep(&[2, 3]).unwrap(), vec![BigInt::from(4), BigInt::from(9)]);
    }
}
