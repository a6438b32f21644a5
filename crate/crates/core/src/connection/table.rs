use rayon::prelude::*;
use serde::Serialize;

use super::{nomizu_space, ConnectionError};
use crate::catalog::poincare_superspacetime;
use crate::clifford::Signature;

/// Representative signature for each class `r - s mod 8 = 1..8`. Every
/// representative has `r + s >= 4`: in dimension three `Λ²V ≅ V` adds an
/// invariant to the `V -> V ⊗ V*` block.
pub const TABLE_REPRESENTATIVES: [(usize, usize, usize); 8] = [(1, 3, 2), (2, 3, 1), (3, 4, 1), (4, 4, 0), (5, 1, 4), (6, 1, 3), (7, 2, 3), (8, 2, 2)];

/// Expected `D` by class, `1..8`.
pub const REFERENCE_D: [usize; 8] = [12, 24, 12, 24, 12, 6, 3, 6];

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableRow {
    pub class: usize,
    pub signature: Signature,
    /// Whether a symmetric `Γ` exists; otherwise the odd bracket is zero.
    pub gamma: bool,
    pub d: usize,
    /// `V->V⊗V*`, `V->S⊗S*`, `S->V*⊗S`, `S->S*⊗V`.
    pub blocks: [usize; 4],
    pub expected: usize,
}

impl TableRow {
    pub fn matches(&self) -> bool {
        self.d == self.expected
    }
}

pub fn table_row(sig: Signature) -> Result<TableRow, ConnectionError> {
    let (d, gamma) = poincare_superspacetime(sig).map_err(|e| ConnectionError::Shape(e.to_string()))?;
    let sp = nomizu_space(&d)?;
    let class = sig.class();
    Ok(TableRow {
        class,
        signature: sig,
        gamma,
        d: sp.dim(),
        blocks: sp.blocks.expect("isotropy algebra is even"),
        expected: REFERENCE_D[class - 1],
    })
}

/// `D = dim` of the Nomizu space of the Poincaré superspacetime for each
/// listed signature, sorted by class then signature. `threads > 1` computes
/// rows concurrently; the output does not depend on it.
pub fn poincare_connection_table(sigs: &[Signature], threads: usize) -> Result<Vec<TableRow>, ConnectionError> {
    let mut rows: Vec<TableRow> = if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| ConnectionError::Shape(e.to_string()))?;
        pool.install(|| sigs.par_iter().map(|&s| table_row(s)).collect::<Result<Vec<_>, _>>())?
    } else {
        sigs.iter().map(|&s| table_row(s)).collect::<Result<Vec<_>, _>>()?
    };
    rows.sort_by_key(|r| (r.class, r.signature));
    Ok(rows)
}

pub fn default_signatures() -> Vec<Signature> {
    TABLE_REPRESENTATIVES.iter().map(|&(_, r, s)| Signature::new(r, s)).collect()
}

pub fn table_tsv(rows: &[TableRow]) -> String {
    let mut out = String::from("class\tsignature\tD\tV->V*V*\tV->S*S*\tS->V*S\tS->S*V\tgamma\texpected\tmatch\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{},{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.class,
            r.signature.r,
            r.signature.s,
            r.d,
            r.blocks[0],
            r.blocks[1],
            r.blocks[2],
            r.blocks[3],
            if r.gamma { "yes" } else { "zero" },
            r.expected,
            if r.matches() { "yes" } else { "no" }
        ));
    }
    out
}
