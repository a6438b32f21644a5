//! JSON form of algebras and decompositions.

use serde::{Deserialize, Serialize};

use super::{LieError, LieSuperalgebra, ReductiveDecomposition};
use crate::exactla::{fmt_q, parse_q, GradedSpace, Parity};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub name: String,
    pub parity: Parity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub basis: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub result: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub basis: Vec<BasisJson>,
    pub brackets: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<String>>,
}

pub fn algebra_to_json(g: &LieSuperalgebra) -> AlgebraJson {
    AlgebraJson {
        basis: g
            .space()
            .basis()
            .iter()
            .map(|(n, p)| BasisJson { name: n.clone(), parity: *p })
            .collect(),
        brackets: g
            .upper_table()
            .iter()
            .map(|(&(i, j), v)| BracketJson {
                left: g.label(i).to_string(),
                right: g.label(j).to_string(),
                result: v
                    .iter()
                    .map(|(k, c)| TermJson {
                        basis: g.label(*k).to_string(),
                        coeff: fmt_q(c),
                    })
                    .collect(),
            })
            .collect(),
        h: None,
        m: None,
    }
}

pub fn decomposition_to_json(d: &ReductiveDecomposition) -> AlgebraJson {
    let g = d.algebra();
    let mut j = algebra_to_json(g);
    j.h = Some(d.h().iter().map(|&i| g.label(i).to_string()).collect());
    j.m = Some(d.m().iter().map(|&i| g.label(i).to_string()).collect());
    j
}

pub fn algebra_from_json(j: &AlgebraJson) -> Result<LieSuperalgebra, LieError> {
    let space = GradedSpace::new(j.basis.iter().map(|b| (b.name.clone(), b.parity)).collect())?;
    let idx = |s: &str| space.index_of(s).ok_or_else(|| LieError::UnknownBasis(s.to_string()));
    let mut br = Vec::new();
    for b in &j.brackets {
        let mut v = Vec::new();
        for t in &b.result {
            v.push((idx(&t.basis)?, parse_q(&t.coeff)?));
        }
        br.push((idx(&b.left)?, idx(&b.right)?, v));
    }
    LieSuperalgebra::new(space, br)
}

pub fn decomposition_from_json(j: &AlgebraJson) -> Result<ReductiveDecomposition, LieError> {
    let g = algebra_from_json(j)?;
    let h = j.h.as_ref().ok_or_else(|| LieError::Malformed("missing `h`".into()))?;
    let m = j.m.as_ref().ok_or_else(|| LieError::Malformed("missing `m`".into()))?;
    let h: Vec<&str> = h.iter().map(|s| s.as_str()).collect();
    let m: Vec<&str> = m.iter().map(|s| s.as_str()).collect();
    ReductiveDecomposition::from_labels(g, &h, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::examples::osp1;

    #[test]
    fn round_trip() {
        let g = osp1(1).unwrap();
        let j = algebra_to_json(&g);
        let s = serde_json::to_string(&j).unwrap();
        let back: AlgebraJson = serde_json::from_str(&s).unwrap();
        assert_eq!(algebra_from_json(&back).unwrap(), g);
    }
}
