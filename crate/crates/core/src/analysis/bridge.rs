use serde::{Deserialize, Serialize};

use super::project_to_m;
use super::verdict::{CounterContext, Theorem, TheoremVerdict};
use crate::axioms::{check_m_exc, check_mnat_exc, check_ssqm, check_ssqm_nat, check_ssqm_nat_prj};
use crate::error::Result;
use crate::function::TabulatedFunction;

/// Axiom outcomes on `f` and on its lift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeSummary {
    pub mnat_exc: bool,
    pub lifted_m_exc: bool,
    pub ssqm_nat: bool,
    pub prj_parts: [bool; 3],
    pub lifted_ssqm: bool,
}

impl BridgeSummary {
    pub fn prj(&self) -> bool {
        self.prj_parts.iter().all(|&p| p)
    }
}

fn bridge_verdict(theorem: Theorem, ok: bool, s: &BridgeSummary) -> TheoremVerdict {
    if ok {
        return TheoremVerdict::holds(theorem, None);
    }
    let mut ctx = CounterContext::default();
    let q = &mut ctx.quantities;
    q.insert("mnat_exc".into(), s.mnat_exc as i64);
    q.insert("lifted_m_exc".into(), s.lifted_m_exc as i64);
    q.insert("ssqm_nat".into(), s.ssqm_nat as i64);
    q.insert("lifted_ssqm".into(), s.lifted_ssqm as i64);
    for (k, p) in s.prj_parts.iter().enumerate() {
        q.insert(format!("prj_part_{}", k + 1), *p as i64);
    }
    TheoremVerdict::fails(theorem, ctx)
}

/// Compares `f` against its lift `f̃(x, −x(N)) = f(x)`:
/// (M-EXC) on `f̃` iff (M♮-EXC) on `f`; (SSQM) on `f̃` iff every part of the
/// projected quasi axiom on `f`; and the projected quasi axiom implies (SSQM♮).
pub fn verify_projection_bridges(f: &TabulatedFunction) -> Result<(BridgeSummary, Vec<TheoremVerdict>)> {
    let lifted = project_to_m(f);
    let prj = check_ssqm_nat_prj(f)?;
    let s = BridgeSummary {
        mnat_exc: check_mnat_exc(f)?.pass,
        lifted_m_exc: check_m_exc(&lifted)?.pass,
        ssqm_nat: check_ssqm_nat(f)?.pass,
        prj_parts: [prj.part_i.pass, prj.part_ii.pass, prj.part_iii.pass],
        lifted_ssqm: check_ssqm(&lifted)?.pass,
    };
    let verdicts = vec![
        bridge_verdict(Theorem::ProjectionBridgeMExc, s.mnat_exc == s.lifted_m_exc, &s),
        bridge_verdict(Theorem::ProjectionBridgeSsqm, s.prj() == s.lifted_ssqm, &s),
        bridge_verdict(Theorem::PrjImpliesSsqmNat, !s.prj() || s.ssqm_nat, &s),
    ];
    Ok((s, verdicts))
}
