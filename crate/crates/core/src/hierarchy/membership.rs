use std::collections::HashMap;
use std::sync::Mutex;

use super::conjugate_pair_of;
use crate::arith::{PhaseKey, ScaledMatrix};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::pauli::pauli_up_to_phase;

/// Brute-force membership in `C_k` straight from the recursive definition,
/// memoized on phase-class keys.
///
/// `G ∈ C_1` iff `G` is a Weyl operator up to phase; for `k ≥ 2`,
/// `G ∈ C_k` iff every `U^p V^q` of its conjugate pair lies in `C_{k−1}`.
pub struct MembershipOracle {
    exec: Execution,
    memo: Mutex<HashMap<(PhaseKey, u32), bool>>,
}

impl Default for MembershipOracle {
    fn default() -> Self {
        MembershipOracle::new(Execution::default())
    }
}

impl MembershipOracle {
    pub fn new(exec: Execution) -> Self {
        MembershipOracle { exec, memo: Mutex::new(HashMap::new()) }
    }

    pub fn cached(&self) -> usize {
        self.memo.lock().expect("memo lock").len()
    }

    pub fn is_member(&self, g: &ScaledMatrix, k: u32) -> Result<bool> {
        assert!(k >= 1, "levels start at 1");
        if k == 1 {
            return Ok(pauli_up_to_phase(g).is_some());
        }
        let key = (g.phase_key(), k);
        if let Some(&hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(hit);
        }
        let ans = self.check(g, k)?;
        self.memo.lock().expect("memo lock").insert(key, ans);
        Ok(ans)
    }

    fn check(&self, g: &ScaledMatrix, k: u32) -> Result<bool> {
        let pair = conjugate_pair_of(g)?;
        let d = g.qudit().d() as u64;
        // cheap rejections first: the generators themselves
        if !self.is_member(&pair.u, k - 1)? || !self.is_member(&pair.v, k - 1)? {
            return Ok(false);
        }
        let mut words = Vec::with_capacity((d * d) as usize);
        let mut up = ScaledMatrix::identity(g.qudit(), d as usize);
        for _ in 0..d {
            let mut w = up.clone();
            for _ in 0..d {
                words.push(w.clone());
                w = &w * &pair.v;
            }
            up = &up * &pair.u;
        }
        let failed = Mutex::new(None);
        let ok = self.exec.all(&words, |w| match self.is_member(w, k - 1) {
            Ok(b) => b,
            Err(e) => {
                *failed.lock().expect("error slot") = Some(e);
                false
            }
        });
        match failed.into_inner().expect("error slot") {
            Some(e) => Err(e),
            None => Ok(ok),
        }
    }
}

/// One-shot membership test with a fresh oracle.
pub fn level_membership(g: &ScaledMatrix, k: u32) -> Result<bool> {
    MembershipOracle::default().is_member(g, k)
}

/// `G†`, which lies in `C_k` whenever `G` does; refuses gates outside `C_k`.
pub fn inverse_in_level(oracle: &MembershipOracle, g: &ScaledMatrix, k: u32) -> Result<ScaledMatrix> {
    if !oracle.is_member(g, k)? {
        return Err(Error::NotInLevel(k));
    }
    Ok(g.adjoint())
}
