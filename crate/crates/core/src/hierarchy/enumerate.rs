use std::collections::HashMap;

use dashu_int::UBig;
use serde::{Deserialize, Serialize};

use crate::arith::{PhaseKey, Qudit, ScaledMatrix};
use crate::clifford::{clifford_from_matrix, m_gate, permutation_gate, AffineSymplectic, CliffordGate};
use crate::diagonal::{build_diagonal, coset_reps, enumerate_rk, RankKPolynomial};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::pauli::{weyl, PhasePoint};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

const CHUNK: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Pauli,
    Clifford,
    Mdc,
}

/// A phase class of `C_k`, stored as its normal-form data.
///
/// The gate is `M·D·ρ(C)`: a Weyl operator has `M = I`, `D = I`; a Clifford
/// in `M·D·P` form stores the permutation `P` as its affine data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCertificate {
    pub d: u32,
    pub k: u32,
    pub form: FormKind,
    pub m: Option<u32>,
    #[serde(rename = "D")]
    pub diag: RankKPolynomial,
    #[serde(rename = "C")]
    pub c: AffineSymplectic,
    #[serde(rename = "phase_class_key")]
    pub key: PhaseKey,
}

impl LevelCertificate {
    pub fn gate(&self, qd: &Qudit) -> Result<ScaledMatrix> {
        let dg = build_diagonal(qd, &self.diag)?;
        let c = CliffordGate::from_affine(qd, self.c)?;
        Ok(&(&m_gate(qd, self.m) * &dg.matrix) * &c.matrix)
    }
}

/// `|[C_k]| = d²` for `k = 1` and `d³(d²−1)(d^{k−1}+d^{k−2}−d)` beyond.
pub fn count_level(d: u32, k: u32) -> UBig {
    assert!(k >= 1, "levels start at 1");
    let d = UBig::from(d);
    if k == 1 {
        return &d * &d;
    }
    let clifford = d.pow(3) * (&d * &d - UBig::ONE);
    clifford * (d.pow(k as usize - 1) + d.pow(k as usize - 2) - &d)
}

/// Index space of one level: every phase class has exactly one index.
pub struct LevelTable {
    qd: Qudit,
    k: u32,
    ms: Vec<Option<u32>>,
    // Clifford part: M·D·P
    d2: Vec<RankKPolynomial>,
    perms: Vec<(AffineSymplectic, ScaledMatrix)>,
    md2: Vec<ScaledMatrix>,
    // non-Clifford part: M·D_rep·C
    reps: Vec<RankKPolynomial>,
    mreps: Vec<ScaledMatrix>,
    cliffords: Vec<(AffineSymplectic, ScaledMatrix)>,
}

impl LevelTable {
    pub fn new(d: u32, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::NotInLevel(0));
        }
        let qd = Qudit::for_level(d, k)?;
        let mut ms = vec![None];
        ms.extend((0..d).map(Some));
        let mut t = LevelTable {
            qd: qd.clone(),
            k,
            ms,
            d2: Vec::new(),
            perms: Vec::new(),
            md2: Vec::new(),
            reps: Vec::new(),
            mreps: Vec::new(),
            cliffords: Vec::new(),
        };
        if k == 1 {
            return Ok(t);
        }
        t.d2 = enumerate_rk(d, 2);
        for a in 1..d {
            for b in 0..d {
                let p = permutation_gate(&qd, a, b);
                t.perms.push((clifford_from_matrix(&p)?.affine, p));
            }
        }
        for &m in &t.ms {
            let mg = m_gate(&qd, m);
            for phi in &t.d2 {
                t.md2.push(&mg * &build_diagonal(&qd, phi)?.matrix);
            }
        }
        if k == 2 {
            return Ok(t);
        }
        t.reps = coset_reps(d, k).into_iter().filter(|p| !p.is_zero()).collect();
        for &m in &t.ms {
            let mg = m_gate(&qd, m);
            for phi in &t.reps {
                t.mreps.push(&mg * &build_diagonal(&qd, phi)?.matrix);
            }
        }
        for a in AffineSymplectic::all(d) {
            let c = CliffordGate::from_affine(&qd, a)?;
            t.cliffords.push((a, c.matrix));
        }
        Ok(t)
    }

    pub fn qudit(&self) -> &Qudit {
        &self.qd
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    fn clifford_len(&self) -> u64 {
        (self.ms.len() * self.d2.len() * self.perms.len()) as u64
    }

    pub fn len(&self) -> u64 {
        let d = self.qd.d() as u64;
        match self.k {
            1 => d * d,
            2 => self.clifford_len(),
            _ => self.clifford_len() + (self.ms.len() * self.reps.len() * self.cliffords.len()) as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Certificate and gate at `index`.
    pub fn entry(&self, index: u64) -> (LevelCertificate, ScaledMatrix) {
        assert!(index < self.len(), "index out of range");
        let d = self.qd.d();
        let cert = |form, m, diag, c, g: &ScaledMatrix| LevelCertificate {
            d,
            k: self.k,
            form,
            m,
            diag,
            c,
            key: g.phase_key(),
        };
        if self.k == 1 {
            let v = PhasePoint::from_index(index as usize, d);
            let g = weyl(&self.qd, v);
            let c = AffineSymplectic { v, ..AffineSymplectic::identity(d) };
            return (cert(FormKind::Pauli, None, RankKPolynomial::zero(d), c, &g), g);
        }
        let i = index as usize;
        if index < self.clifford_len() {
            let np = self.perms.len();
            let (md, p) = (i / np, i % np);
            let (m, phi) = (self.ms[md / self.d2.len()], &self.d2[md % self.d2.len()]);
            let (a, pm) = &self.perms[p];
            let g = &self.md2[md] * pm;
            return (cert(FormKind::Clifford, m, phi.reduced(), *a, &g), g);
        }
        let j = i - self.clifford_len() as usize;
        let nc = self.cliffords.len();
        let (mr, c) = (j / nc, j % nc);
        let (m, phi) = (self.ms[mr / self.reps.len()], &self.reps[mr % self.reps.len()]);
        let (a, cm) = &self.cliffords[c];
        let g = &self.mreps[mr] * cm;
        (cert(FormKind::Mdc, m, phi.reduced(), *a, &g), g)
    }

    pub fn certificate(&self, index: u64) -> LevelCertificate {
        self.entry(index).0
    }

    /// `(M, D_rep)` prefixes times `C_2`; used to scan products.
    pub fn mdc_prefixes(&self) -> &[ScaledMatrix] {
        &self.mreps
    }

    pub fn clifford_matrices(&self) -> impl Iterator<Item = &ScaledMatrix> {
        self.cliffords.iter().map(|(_, m)| m)
    }
}

/// Sorted, deduplicated certificates for one level.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub d: u32,
    pub k: u32,
    pub certificates: Vec<LevelCertificate>,
    /// Indices that hit an already-seen phase class.
    pub duplicates: u64,
    pub truncated: bool,
    pub expected: UBig,
}

impl Enumeration {
    pub fn distinct(&self) -> usize {
        self.certificates.len()
    }

    pub fn matches_formula(&self) -> bool {
        !self.truncated && self.duplicates == 0 && UBig::from(self.certificates.len()) == self.expected
    }
}

/// Enumerates `C_k` up to phase.
///
/// Refuses (returning a truncated prefix) when the formula count exceeds
/// `budget`, unless `force` is set.
pub fn enumerate_level(d: u32, k: u32, budget: u128, force: bool, exec: Execution) -> Result<Enumeration> {
    let expected = count_level(d, k);
    let over = expected > UBig::from(budget);
    let table = LevelTable::new(d, k)?;
    let limit = if over && !force { budget as u64 } else { table.len() };
    enumerate_level_with(&table, limit, exec)
}

pub fn enumerate_level_with(table: &LevelTable, limit: u64, exec: Execution) -> Result<Enumeration> {
    let d = table.qudit().d();
    let total = table.len();
    let n = limit.min(total);
    let starts: Vec<u64> = (0..n).step_by(CHUNK).collect();
    let chunks = exec.map(&starts, |&s| {
        (s..(s + CHUNK as u64).min(n)).map(|i| table.certificate(i)).collect::<Vec<_>>()
    });
    let mut certificates: Vec<LevelCertificate> = chunks.into_iter().flatten().collect();
    certificates.sort_by(|a, b| a.key.cmp(&b.key));
    let before = certificates.len() as u64;
    certificates.dedup_by(|a, b| a.key == b.key);
    Ok(Enumeration {
        d,
        k: table.k(),
        duplicates: before - certificates.len() as u64,
        certificates,
        truncated: n < total,
        expected: count_level(d, table.k()),
    })
}

/// Phase-class multiplicities of every product `M·D·C` with `M ∈ 𝓜`,
/// `D` from `R_k` and `C` a Clifford.
pub fn scan_products(d: u32, k: u32, exec: Execution) -> Result<HashMap<PhaseKey, u32>> {
    let qd = Qudit::for_level(d, k)?;
    let mut prefixes = Vec::new();
    let mut ms = vec![None];
    ms.extend((0..d).map(Some));
    for m in ms {
        let mg = m_gate(&qd, m);
        for phi in enumerate_rk(d, k) {
            prefixes.push(&mg * &build_diagonal(&qd, &phi)?.matrix);
        }
    }
    let cliffords = AffineSymplectic::all(d)
        .into_iter()
        .map(|a| CliffordGate::from_affine(&qd, a).map(|c| c.matrix))
        .collect::<Result<Vec<_>>>()?;
    let keys = exec.map(&prefixes, |p| cliffords.iter().map(|c| (p * c).phase_key()).collect::<Vec<_>>());
    let mut counts = HashMap::new();
    for key in keys.into_iter().flatten() {
        *counts.entry(key).or_insert(0) += 1;
    }
    Ok(counts)
}
