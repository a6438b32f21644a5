//! Real gamma matrices with entries in {-1, 0, 1}.

use std::collections::HashMap;

use serde::Serialize;

use super::{CliffordError, Signature};
use crate::exactla::{qi, rank, Matrix, Q};
use num_traits::{One, Zero};

/// Irreducible real Clifford module. Generator `i` squares to `-η_ii`
/// (`v·v = -⟨v,v⟩`), with the `r` positive directions first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffordRep {
    signature: Signature,
    gammas: Vec<Matrix>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CliffordJson {
    pub r: usize,
    pub s: usize,
    pub spin_dim: usize,
    pub gammas: Vec<Vec<Vec<i64>>>,
}

fn mono(n: usize, e: &[(usize, usize, i64)]) -> Matrix {
    Matrix::from_entries(n, n, e.iter().map(|&(i, j, v)| (i, j, qi(v))))
}

fn sigma1() -> Matrix {
    mono(2, &[(0, 1, 1), (1, 0, 1)])
}

fn sigma3() -> Matrix {
    mono(2, &[(0, 0, 1), (1, 1, -1)])
}

fn eps() -> Matrix {
    mono(2, &[(0, 1, 1), (1, 0, -1)])
}

/// Left and right multiplication by `i`, `j`, `k` on `H = R^4` with basis
/// `(1, i, j, k)`.
fn quaternion_units() -> ([Matrix; 3], [Matrix; 3]) {
    // products of basis units: table[a][b] = (sign, index) for e_a e_b
    let t: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let left = |u: usize| {
        let e: Vec<(usize, usize, i64)> = (0..4).map(|b| (t[u][b].1, b, t[u][b].0)).collect();
        mono(4, &e)
    };
    let right = |u: usize| {
        let e: Vec<(usize, usize, i64)> = (0..4).map(|b| (t[b][u].1, b, t[b][u].0)).collect();
        mono(4, &e)
    };
    ([left(1), left(2), left(3)], [right(1), right(2), right(3)])
}

/// Generators of an irreducible module of `Cl_{0,k}` (all squaring to -1).
fn negative_base(k: usize) -> (usize, Vec<Matrix>) {
    let (l, r) = quaternion_units();
    match k {
        0 => (1, Vec::new()),
        1 => (2, vec![eps()]),
        2 | 3 => (4, l[..k].to_vec()),
        4..=7 => {
            let mut g: Vec<Matrix> = l.iter().map(|a| a.kron(&sigma3())).collect();
            g.push(Matrix::identity(4).kron(&eps()));
            for u in r.iter().take(k - 4) {
                g.push(u.kron(&sigma1()));
            }
            (8, g)
        }
        8 => {
            let (_, seven) = negative_base(7);
            let mut g: Vec<Matrix> = seven.iter().map(|a| a.kron(&sigma3())).collect();
            g.push(Matrix::identity(8).kron(&eps()));
            (16, g)
        }
        _ => {
            let (n, a) = negative_base(k - 8);
            let (_, b) = negative_base(8);
            let omega = b.iter().fold(Matrix::identity(16), |acc, x| acc.mul(x));
            let mut g: Vec<Matrix> = a.iter().map(|x| x.kron(&omega)).collect();
            g.extend(b.iter().map(|x| Matrix::identity(n).kron(x)));
            (16 * n, g)
        }
    }
}

/// Irreducible module of `Cl_{p,q}`: returns the dimension, the `p`
/// generators squaring to +1 and the `q` generators squaring to -1.
fn build(p: usize, q: usize) -> (usize, Vec<Matrix>, Vec<Matrix>) {
    if p == 0 {
        let (n, g) = negative_base(q);
        return (n, Vec::new(), g);
    }
    if q >= 1 {
        let (n, pos, neg) = build(p - 1, q - 1);
        let lift = |m: &Matrix| m.kron(&sigma3());
        let mut pos: Vec<Matrix> = pos.iter().map(lift).collect();
        let mut neg: Vec<Matrix> = neg.iter().map(lift).collect();
        pos.push(Matrix::identity(n).kron(&sigma1()));
        neg.push(Matrix::identity(n).kron(&eps()));
        return (2 * n, pos, neg);
    }
    if p == 1 {
        return (1, vec![Matrix::identity(1)], Vec::new());
    }
    // Cl_{p,0} from Cl_{1,p-1}: {e0, e0 f_j} all square to +1
    let (n, pos, neg) = build(1, p - 1);
    let e0 = &pos[0];
    let mut out = vec![e0.clone()];
    out.extend(neg.iter().map(|f| e0.mul(f)));
    (n, out, Vec::new())
}

/// Minimal real dimension of a `Cl(r,s)`-module under this convention.
pub fn minimal_dimension(sig: Signature) -> usize {
    let (p, q) = (sig.s, sig.r);
    let n = p + q;
    let k = division_dim(sig);
    let simple_dim = if (p + 8 * n - q) % 4 == 1 { 1usize << (n - 1) } else { 1usize << n };
    // simple factor M_m(K) has dimension m^2 k; the module has dimension m k
    let m2 = simple_dim / k;
    let m = (m2 as f64).sqrt().round() as usize;
    m * k
}

/// Dimension of the division algebra `K` of the simple factor.
pub fn division_dim(sig: Signature) -> usize {
    let (p, q) = (sig.s as i64, sig.r as i64);
    match (p - q).rem_euclid(8) {
        0..=2 => 1,
        3 | 7 => 2,
        _ => 4,
    }
}

impl CliffordRep {
    pub fn build(sig: Signature) -> Result<Self, CliffordError> {
        if sig.r + sig.s == 0 {
            return Err(CliffordError::EmptySignature);
        }
        let (_, pos, neg) = build(sig.s, sig.r);
        let mut gammas = neg;
        gammas.extend(pos);
        Ok(CliffordRep { signature: sig, gammas })
    }

    /// Wraps externally supplied matrices after checking the relations.
    pub fn from_gammas(sig: Signature, gammas: Vec<Matrix>) -> Result<Self, CliffordError> {
        let rep = CliffordRep { signature: sig, gammas };
        if rep.gammas.len() != sig.dim() || !rep.check_relations() {
            return Err(CliffordError::Relations);
        }
        Ok(rep)
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn spin_dim(&self) -> usize {
        self.gammas.first().map_or(1, |g| g.nrows())
    }

    pub fn gammas(&self) -> &[Matrix] {
        &self.gammas
    }

    pub fn gamma(&self, i: usize) -> &Matrix {
        &self.gammas[i]
    }

    /// `η_ii`.
    pub fn eta(&self, i: usize) -> i64 {
        self.signature.eta(i)
    }

    /// `γ_i γ_j + γ_j γ_i = -2 η_ij` for all pairs.
    pub fn check_relations(&self) -> bool {
        let n = self.spin_dim();
        for i in 0..self.gammas.len() {
            for j in i..self.gammas.len() {
                let ac = self.gammas[i].mul(&self.gammas[j]).add(&self.gammas[j].mul(&self.gammas[i]));
                let want = if i == j { Matrix::scalar(n, qi(-2 * self.eta(i))) } else { Matrix::zeros(n, n) };
                if ac != want {
                    return false;
                }
            }
        }
        true
    }

    /// Clifford product `γ_{i1} ··· γ_{ik}`; the empty product is the identity.
    pub fn product(&self, idx: &[usize]) -> Matrix {
        idx.iter()
            .fold(Matrix::identity(self.spin_dim()), |acc, &i| acc.mul(&self.gammas[i]))
    }

    /// Clifford action of a vector with the given components.
    pub fn vector(&self, v: &[Q]) -> Matrix {
        let n = self.spin_dim();
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (i, c)| acc.lin_comb(&Q::one(), &self.gammas[i], c))
    }

    /// Volume element `γ_1 ··· γ_n`.
    pub fn volume(&self) -> Matrix {
        let all: Vec<usize> = (0..self.gammas.len()).collect();
        self.product(&all)
    }

    /// Dimension of the matrix algebra generated by the gammas.
    pub fn generated_dimension(&self) -> usize {
        // every product of distinct gammas is monomial: group by pattern and
        // count independent sign vectors per pattern
        let n = self.gammas.len();
        let dim = self.spin_dim();
        let mut groups: HashMap<Vec<usize>, Vec<Vec<Q>>> = HashMap::new();
        for mask in 0u64..(1u64 << n) {
            let idx: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).collect();
            let m = self.product(&idx);
            let pattern: Vec<usize> = (0..dim).map(|i| m.row(i)[0].0).collect();
            let signs: Vec<Q> = (0..dim).map(|i| m.row(i)[0].1.clone()).collect();
            groups.entry(pattern).or_default().push(signs);
        }
        groups
            .values()
            .map(|vs| {
                let rows: Vec<Vec<Q>> = vs.clone();
                rank(&Matrix::from_dense(rows))
            })
            .sum()
    }

    /// Dimension of the commutant of the gammas in `End(S)`.
    pub fn commutant_dimension(&self) -> usize {
        let g: Vec<&Matrix> = self.gammas.iter().collect();
        let n = self.spin_dim();
        crate::exactla::intertwiners(n, n, &g, &g, &|_, _| true).len()
    }

    /// Irreducibility certificate: the generated algebra is one simple
    /// factor and the commutant is the division algebra of that factor.
    pub fn certify_irreducible(&self) -> IrreducibilityReport {
        let n = self.signature.dim();
        let generated = self.generated_dimension();
        let commutant = self.commutant_dimension();
        let k = division_dim(self.signature);
        let simple_ok = generated == (1usize << n) || (generated == (1usize << (n - 1)) && self.signature.is_non_simple());
        IrreducibilityReport {
            generated,
            commutant,
            division: k,
            spin_dim: self.spin_dim(),
            irreducible: simple_ok && commutant == k && generated * commutant == self.spin_dim() * self.spin_dim(),
        }
    }

    pub fn to_json(&self) -> CliffordJson {
        CliffordJson {
            r: self.signature.r,
            s: self.signature.s,
            spin_dim: self.spin_dim(),
            gammas: self
                .gammas
                .iter()
                .map(|g| {
                    g.to_dense()
                        .iter()
                        .map(|row| row.iter().map(|x| x.to_integer().try_into().expect("entries are -1, 0, 1")).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub generated: usize,
    pub commutant: usize,
    pub division: usize,
    pub spin_dim: usize,
    pub irreducible: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_up_to_eleven() {
        for n in 1..=11usize {
            for r in 0..=n {
                let sig = Signature::new(r, n - r);
                let c = CliffordRep::build(sig).unwrap();
                assert!(c.check_relations(), "{sig:?}");
                assert_eq!(c.spin_dim(), minimal_dimension(sig), "{sig:?}");
                assert!(c.gammas().iter().all(|g| g.entries().all(|(_, _, v)| num_traits::Signed::abs(v) == Q::one())));
            }
        }
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(CliffordRep::build(Signature::new(1, 2)).unwrap().spin_dim(), 2);
        assert_eq!(CliffordRep::build(Signature::new(1, 10)).unwrap().spin_dim(), 32);
        assert_eq!(CliffordRep::build(Signature::new(1, 3)).unwrap().spin_dim(), 4);
    }

    #[test]
    fn irreducible_small() {
        for (r, s) in [(1, 0), (0, 1), (1, 2), (2, 1), (3, 0), (0, 3), (1, 3), (3, 1), (4, 1), (2, 3)] {
            let c = CliffordRep::build(Signature::new(r, s)).unwrap();
            assert!(c.certify_irreducible().irreducible, "({r},{s}) {:?}", c.certify_irreducible());
        }
    }
}
