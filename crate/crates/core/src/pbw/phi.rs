use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::bernoulli::fc_coefficient;
use super::exterior::wedge_basis;
use super::uea::{Enveloping, Monomial, UeaElement};
use super::PbwError;
use crate::exactla::space::{permutations, reorder_sign};
use crate::exactla::{fmt_q, koszul, qi, Parity, Q};
use crate::liesuper::algebra::{saxpby, sparse, sscale};
use crate::liesuper::{LieSuperalgebra, SVec};

/// Element of the supersymmetric algebra `S(g)`, keyed like PBW monomials.
pub type SymElement = BTreeMap<Monomial, Q>;

fn add(e: &mut SymElement, m: Monomial, c: Q) {
    if c.is_zero() {
        return;
    }
    let v = e.entry(m.clone()).or_insert_with(Q::zero);
    *v += c;
    if v.is_zero() {
        e.remove(&m);
    }
}

fn sign(s: i64) -> Q {
    qi(s)
}

impl Enveloping {
    fn items(&self, w: &[usize]) -> Vec<(usize, Parity)> {
        w.iter().map(|&r| (r, self.rank_parity(r))).collect()
    }

    /// Supersymmetric product of rank words; `None` if an odd letter repeats.
    pub fn sym_product(&self, w: &[usize]) -> Option<(Q, Monomial)> {
        let s = reorder_sign(&self.items(w));
        let mut m = w.to_vec();
        m.sort_unstable();
        if m.windows(2).any(|p| p[0] == p[1] && p[0] >= self.n_even()) {
            return None;
        }
        Some((sign(s), m))
    }

    /// `S(g)` element of a word of basis indices.
    pub fn sym_word(&self, word: &[usize]) -> SymElement {
        let ranks: Vec<usize> = word.iter().map(|&i| self.rank(i)).collect();
        let mut e = SymElement::new();
        if let Some((s, m)) = self.sym_product(&ranks) {
            add(&mut e, m, s);
        }
        e
    }

    /// Symmetrization `S(g) -> U(g)`.
    pub fn gamma_sym(&self, b: &SymElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for (m, c) in b {
            let n = m.len();
            let mut acc = UeaElement::zero();
            for perm in permutations(n) {
                let w: Vec<usize> = perm.iter().map(|&i| m[i]).collect();
                let items: Vec<(usize, Parity)> = perm.iter().map(|&i| (i, self.rank_parity(m[i]))).collect();
                acc.add_scaled(&self.normal_order_ranks(&w), &sign(reorder_sign(&items)));
            }
            let fact: Q = (1..=n).fold(Q::one(), |a, i| a * qi(i as i64));
            out.add_scaled(&acc, &(c / fact));
        }
        out
    }

    fn vec_parity(&self, v: &SVec) -> Parity {
        v.first().map_or(Parity::Even, |(i, _)| self.algebra().parity(*i))
    }

    /// `F(y_1 ··· y_k) = f_k Σ_σ ± ρ(y_σ(k)) ∘ ... ∘ ρ(y_σ(1)) (x)` with
    /// `ρ(y) z = (-1)^{|y||z|} [y, z]`.
    fn fc_field(&self, c: i64, x: &SVec, m: &[usize]) -> SVec {
        let f = fc_coefficient(c, m.len());
        if f.is_zero() || x.is_empty() {
            return SVec::new();
        }
        let g = self.algebra();
        let mut out = SVec::new();
        for perm in permutations(m.len()) {
            let items: Vec<(usize, Parity)> = perm.iter().map(|&i| (i, self.rank_parity(m[i]))).collect();
            let mut cur = x.clone();
            for &i in &perm {
                let y = self.generator(m[i]);
                let s = koszul(g.parity(y), self.vec_parity(&cur));
                cur = sscale(&qi(s), &g.bracket_sparse(&vec![(y, Q::one())], &cur));
                if cur.is_empty() {
                    break;
                }
            }
            out = saxpby(&Q::one(), &out, &sign(reorder_sign(&items)), &cur);
        }
        sscale(&f, &out)
    }

    /// `Φ_c^x(b) = Σ ± b_(1) · F(b_(2))` on `S(g)`.
    pub fn phi_c(&self, c: i64, x: &SVec, b: &SymElement) -> SymElement {
        let px = self.vec_parity(x);
        let mut out = SymElement::new();
        for (m, coeff) in b {
            let n = m.len();
            for mask in 0..(1usize << n) {
                let left: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                let right: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
                let order: Vec<(usize, Parity)> = left.iter().chain(&right).map(|&i| (i, self.rank_parity(m[i]))).collect();
                let mut s = reorder_sign(&order);
                let lw: Vec<usize> = left.iter().map(|&i| m[i]).collect();
                let rw: Vec<usize> = right.iter().map(|&i| m[i]).collect();
                if self.monomial_parity(&lw).is_odd() && px.is_odd() {
                    s = -s;
                }
                let fv = self.fc_field(c, x, &rw);
                for (k, v) in fv {
                    let mut w = lw.clone();
                    w.push(self.rank(k));
                    if let Some((t, mm)) = self.sym_product(&w) {
                        add(&mut out, mm, coeff * sign(s) * v * t);
                    }
                }
            }
        }
        out
    }

    pub fn format_sym(&self, b: &SymElement) -> String {
        if b.is_empty() {
            return "0".into();
        }
        b.iter()
            .map(|(m, c)| {
                let mut s = fmt_q(c);
                for &r in m {
                    s.push('*');
                    s.push_str(self.rank_label(r));
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PhiRow {
    pub b: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PhiReport {
    pub schema: u32,
    pub c: i64,
    pub x: String,
    /// `ad(x)`, `L_x` or `R_x` conjugated by symmetrization.
    pub operator: String,
    pub checks: usize,
    pub failures: usize,
    pub pass: bool,
    pub rows: Vec<PhiRow>,
}

/// Checks `γ⁻¹ ∘ ad(x) ∘ γ = Φ_0^x` (`c = 0`), `γ⁻¹ ∘ L_x ∘ γ = Φ_1^x`
/// (`c = 1`) or `γ⁻¹ ∘ R_x ∘ γ = -Φ_{-1}^x` (`c = -1`) on the symmetric
/// products of the listed words of basis indices. `R_x u = (-1)^{|x||u|} u x`.
pub fn phi_c_correspondence(g: &LieSuperalgebra, c: i64, x: &[Q], test: &[Vec<usize>]) -> Result<PhiReport, PbwError> {
    let env = Enveloping::new(g.clone());
    phi_with(&env, c, x, test)
}

fn phi_with(env: &Enveloping, c: i64, x: &[Q], test: &[Vec<usize>]) -> Result<PhiReport, PbwError> {
    let g = env.algebra();
    if ![0, 1, -1].contains(&c) {
        return Err(PbwError::Series(c));
    }
    if x.len() != g.dim() {
        return Err(PbwError::Dimension(g.dim(), x.len()));
    }
    let px = g.element_parity(x).ok_or(PbwError::Inhomogeneous)?;
    let xs = sparse(x);
    let xu = env.from_sparse(&xs);
    let mut rows = Vec::new();
    for word in test {
        if let Some(&i) = word.iter().find(|&&i| i >= g.dim()) {
            return Err(PbwError::UnknownGenerator(i));
        }
        let b = env.sym_word(word);
        let gb = env.gamma_sym(&b);
        let pb = env.parity_of(&gb).unwrap_or(Parity::Even);
        let lhs = match c {
            0 => env.supercommutator(&xu, &gb),
            1 => env.mul(&xu, &gb),
            _ => env.mul(&gb, &xu).scale(&qi(koszul(px, pb))),
        };
        let mut rhs = env.gamma_sym(&env.phi_c(c, &xs, &b));
        if c == -1 {
            rhs = rhs.scale(&-Q::one());
        }
        rows.push(PhiRow {
            b: word.iter().map(|&i| g.label(i).to_string()).collect(),
            lhs: env.format(&lhs),
            rhs: env.format(&rhs),
            equal: lhs == rhs,
        });
    }
    let failures = rows.iter().filter(|r| !r.equal).count();
    Ok(PhiReport {
        schema: 1,
        c,
        x: crate::pbw::fields::format_vector(env, &xs),
        operator: match c {
            0 => "ad".into(),
            1 => "left".into(),
            _ => "right".into(),
        },
        checks: rows.len(),
        failures,
        pass: failures == 0,
        rows,
    })
}

/// All three items for every basis element `x`, on every odd wedge of degree
/// `<= max_degree` and every even generator.
pub fn verify_phi(g: &LieSuperalgebra, max_degree: usize) -> Result<Vec<PhiReport>, PbwError> {
    let env = Enveloping::new(g.clone());
    let mut test = wedge_basis(&g.odd_indices(), max_degree);
    test.extend(g.even_indices().into_iter().map(|i| vec![i]));
    let mut out = Vec::new();
    for c in [0, 1, -1] {
        for i in 0..g.dim() {
            out.push(phi_with(&env, c, &g.basis_vector(i), &test)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::examples::osp1;

    #[test]
    fn phi_items_on_osp14() {
        let g = osp1(2).unwrap();
        let bad: Vec<_> = verify_phi(&g, 4).unwrap().into_iter().filter(|r| !r.pass).map(|r| (r.c, r.x, r.rows.into_iter().filter(|x| !x.equal).map(|x| x.b.join("")).collect::<Vec<_>>())).collect();
        assert!(bad.is_empty(), "{:?}", bad);
    }

    #[test]
    fn phi_items_on_osp12() {
        let g = osp1(1).unwrap();
        let bad: Vec<_> = verify_phi(&g, 2).unwrap().into_iter().filter(|r| !r.pass).map(|r| (r.c, r.x, r.rows.into_iter().filter(|x| !x.equal).map(|x| x.b.join("")).collect::<Vec<_>>())).collect();
        assert!(bad.is_empty(), "{:#?}", bad);
    }
}
