use dashu_int::IBig;

use super::{weyl, weyl_entry_exp, PhasePoint};
use crate::arith::{Cyclotomic, Qudit, ScaledMatrix};
use crate::error::{Error, Result};

/// The function `f_M` on the phase plane, stored densely in index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliCoefficients {
    d: u32,
    values: Vec<Cyclotomic>,
}

impl PauliCoefficients {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn get(&self, pt: PhasePoint) -> &Cyclotomic {
        &self.values[pt.index(self.d)]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Points with a nonzero coefficient, in index order.
    pub fn support(&self) -> Vec<PhasePoint> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, _)| PhasePoint::from_index(i, self.d))
            .collect()
    }

    /// `Σ f(p,q) W(p,q)`.
    pub fn to_matrix(&self, qd: &Qudit) -> ScaledMatrix {
        let d = self.d as usize;
        let mut acc = ScaledMatrix::zeros(qd, d);
        for pt in self.support() {
            let term = weyl(qd, pt).scale_entries(self.get(pt));
            acc = acc.add_bare(&term).expect("same shape");
        }
        acc
    }

    /// `Σ f·conj(f)`; equals 1 for unitaries.
    pub fn norm_squared(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.values[0].field());
        for v in self.values.iter().filter(|v| !v.is_zero()) {
            acc = &acc + &(v * &v.conj());
        }
        acc
    }
}

/// `f_M(p,q) = d^{-1} Tr(W(−p,−q) M)` for every point.
///
/// An odd half-log scale is folded in through the field element `√d`.
pub fn pauli_decompose(m: &ScaledMatrix) -> Result<PauliCoefficients> {
    let qd = m.qudit();
    let d = qd.d();
    if m.dim() != d as usize {
        return Err(Error::DimensionMismatch { left: d as usize, right: m.dim() });
    }
    if m.radical().is_some() {
        return Err(Error::NotInField("Pauli coefficients of a matrix with a radical scale".into()));
    }
    let factor = match m.half_log_scale() {
        0 => Cyclotomic::from_rational(qd.field(), IBig::ONE, IBig::from(d))?,
        _ => qd.sqrt_d().scale(&IBig::ONE, &IBig::from(d * d)),
    };
    let values = PhasePoint::all(d)
        .map(|pt| {
            let inv = pt.neg(d);
            let mut tr = qd.zero();
            for j in 0..d {
                // W(−p,−q)[row, j] pairs with M[j, row]
                let row = (j + inv.q) % d;
                let e = m.get(j as usize, row as usize);
                if !e.is_zero() {
                    tr = &tr + &e.mul_root(weyl_entry_exp(qd, inv, j));
                }
            }
            &tr * &factor
        })
        .collect();
    Ok(PauliCoefficients { d, values })
}

/// `c` with `W(a) W(b) = ζ_N^c W(a+b)`.
pub fn convolution_phase_exp(qd: &Qudit, a: PhasePoint, b: PhasePoint) -> i64 {
    let d = qd.d();
    weyl_entry_exp(qd, b, 0) + weyl_entry_exp(qd, a, b.q % d) - weyl_entry_exp(qd, a.add(b, d), 0)
}

/// `f_{UV}` from `f_U` and `f_V` without forming matrices.
pub fn convolve(qd: &Qudit, fu: &PauliCoefficients, fv: &PauliCoefficients) -> Result<PauliCoefficients> {
    if fu.d != fv.d || fu.d != qd.d() {
        return Err(Error::DimensionMismatch { left: fu.d as usize, right: fv.d as usize });
    }
    let d = fu.d;
    let mut values = vec![qd.zero(); (d * d) as usize];
    let sv = fv.support();
    for a in fu.support() {
        for &b in &sv {
            let x = a.add(b, d);
            let term = (fu.get(a) * fv.get(b)).mul_root(convolution_phase_exp(qd, a, b));
            let slot = &mut values[x.index(d)];
            *slot = &*slot + &term;
        }
    }
    Ok(PauliCoefficients { d, values })
}

pub fn support(f: &PauliCoefficients) -> Vec<PhasePoint> {
    f.support()
}

/// Pauli test by support size, after checking that `M^d` is scalar.
pub fn is_pauli(m: &ScaledMatrix) -> Result<bool> {
    let qd = m.qudit();
    let d = qd.d();
    let id = ScaledMatrix::identity(qd, d as usize);
    if !m.pow(d as u64).same_phase_class(&id) {
        return Err(Error::WrongOrder(d));
    }
    Ok(pauli_decompose(m)?.support().len() == 1)
}

/// The phase-plane point of `M` when `M` is a Weyl operator up to phase.
///
/// Works on the monomial structure directly, so it needs no trace and
/// accepts any stored scale.
pub fn pauli_up_to_phase(m: &ScaledMatrix) -> Option<PhasePoint> {
    let qd = m.qudit();
    let d = qd.d();
    if m.dim() != d as usize {
        return None;
    }
    let images = m.monomial_pattern()?;
    let q = images[0] as u32;
    if (0..d).any(|j| images[j as usize] as u32 != (j + q) % d) {
        return None;
    }
    let a = |j: u32| m.get(((j + q) % d) as usize, j as usize);
    let c0 = a(0).conj();
    let n0 = a(0) * &c0;
    let r1 = a(1) * &c0;
    let p = (0..d).find(|&p| r1 == n0.mul_root(qd.omega_exp(p as i64)))?;
    for j in 2..d {
        if a(j) * &c0 != n0.mul_root(qd.omega_exp((p * j) as i64)) {
            return None;
        }
    }
    Some(PhasePoint { p, q })
}
