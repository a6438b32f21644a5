use serde::Serialize;

use super::{curvature_at_o, m_parity, NomizuMap};
use crate::exactla::{fmt_q, koszul, GradedMap, Matrix, Parity, Span, TensorElement};
use crate::liesuper::invariant_tensors;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HolonomyElement {
    #[serde(skip)]
    pub matrix: Matrix,
    pub parity: Parity,
    /// 0 for curvature operators, `k` for `k`-fold brackets with `L(m)`.
    pub depth: usize,
    /// `R(A,B)` or `[L(A), #i]` referring to an earlier element.
    pub origin: String,
    pub entries: Vec<(String, String, String)>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct HolonomyReport {
    pub dim: usize,
    pub elements: Vec<HolonomyElement>,
}

impl HolonomyReport {
    pub fn matrices(&self) -> Vec<&Matrix> {
        self.elements.iter().map(|e| &e.matrix).collect()
    }
}

/// `r + [L(m), r] + [L(m), [L(m), r]] + ...` where `r` is spanned by the
/// curvature operators. Saturation is breadth-first by depth, with ties
/// broken by the order of the `m` basis.
pub fn infinitesimal_holonomy(n: &NomizuMap) -> HolonomyReport {
    let d = n.decomposition();
    let ms = d.m_space();
    let k = ms.len();
    let mut spans = [Span::new(k * k), Span::new(k * k)];
    let mut elements: Vec<HolonomyElement> = Vec::new();
    let mut push = |m: Matrix, parity: Parity, depth: usize, origin: String, elements: &mut Vec<HolonomyElement>| {
        if m.is_zero() || !spans[parity.bit()].insert(&m.flatten()) {
            return;
        }
        let entries = m.entries().map(|(r, c, v)| (ms.label(r).to_string(), ms.label(c).to_string(), fmt_q(v))).collect();
        elements.push(HolonomyElement {
            matrix: m,
            parity,
            depth,
            origin,
            entries,
        });
    };
    let curv = curvature_at_o(n);
    for a in 0..k {
        for b in a..k {
            let p = m_parity(d, a) + m_parity(d, b);
            push(curv[a][b].clone(), p, 0, format!("R({},{})", ms.label(a), ms.label(b)), &mut elements);
        }
    }
    let mut start = 0;
    let mut depth = 0;
    while start < elements.len() {
        let end = elements.len();
        depth += 1;
        for i in start..end {
            for a in 0..k {
                let pa = m_parity(d, a);
                let x = elements[i].matrix.clone();
                let px = elements[i].parity;
                let y = n.map(a).graded_commutator(&x, koszul(pa, px));
                push(y, pa + px, depth, format!("[L({}),#{}]", ms.label(a), i), &mut elements);
            }
        }
        start = end;
    }
    HolonomyReport {
        dim: elements.len(),
        elements,
    }
}

/// Tensors of type `(r,s)` on `m` annihilated by the infinitesimal holonomy.
pub fn parallel_tensor_space(n: &NomizuMap, r: usize, s: usize) -> Vec<TensorElement> {
    let ms = n.decomposition().m_space();
    let hol = infinitesimal_holonomy(n);
    let acts: Vec<GradedMap> = hol
        .elements
        .iter()
        .map(|e| GradedMap::endo(&ms, e.matrix.clone(), e.parity).expect("homogeneous holonomy element"))
        .collect();
    invariant_tensors(&ms, &acts, r, s)
}
