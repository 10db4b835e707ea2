use super::{AffineSymplectic, CliffordGate, SymplecticMatrix};
use crate::arith::ScaledMatrix;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::pauli::{pauli_decompose, symplectic_product, PhasePoint};

/// Searches the affine symplectic group for `C` with `A = C B C†` up to phase.
///
/// Candidates are filtered by support, `supp f_A = S(supp f_B)`, then by the
/// coefficient relation `f_A(x) = λ ω^{[v,x]} f_B(S^{-1}x)`, and a surviving
/// witness is confirmed by matrix arithmetic. For qubits the sign structure
/// of the relation differs, so candidates go straight to the matrix check.
pub fn clifford_conjugate_test(
    a: &ScaledMatrix,
    b: &ScaledMatrix,
    exec: Execution,
) -> Result<Option<AffineSymplectic>> {
    let qd = a.qudit();
    if !qd.same_as(b.qudit()) || a.dim() != b.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: b.dim() });
    }
    let d = qd.d();
    let fa = pauli_decompose(a)?;
    let fb = pauli_decompose(b)?;
    let sa = fa.support();
    let sb = fb.support();
    if sa.len() != sb.len() {
        return Ok(None);
    }
    let group = SymplecticMatrix::all(d);
    let found = exec.find_map_first(&group, |s| {
        if !sb.iter().all(|&y| fa.get(s.apply(y)).is_zero().then_some(()).is_none()) {
            return None;
        }
        let y0 = sb[0];
        let x0 = s.apply(y0);
        for v in PhasePoint::all(d) {
            if !qd.is_qubit() {
                let phase = |x: PhasePoint| qd.omega_exp(symplectic_product(v, x, d).value() as i64);
                let lhs0 = fb.get(y0).mul_root(phase(x0));
                let ok = sb.iter().all(|&y| {
                    let x = s.apply(y);
                    (fa.get(x) * &lhs0) == (fa.get(x0) * fb.get(y)).mul_root(phase(x))
                });
                if !ok {
                    continue;
                }
            }
            let aff = AffineSymplectic::new(*s, v);
            let c = CliffordGate::from_affine(qd, aff).ok()?;
            let image = ScaledMatrix::conjugate_by(&c.matrix, b).ok()?;
            if image.same_phase_class(a) {
                return Some(aff);
            }
        }
        None
    });
    Ok(found)
}
