"""Order formulas, closed-form Sylow numbers and the inequality auditor."""

from .audit import CHAINS, AuditReport, Chain, Violation, proof_inequality_audit
from .formulas import (
    FORMULAS,
    FormulaResult,
    OmegaVariant,
    PreconditionError,
    SpCase,
    TheoremCase,
    alternating_np,
    evaluate,
    gl_np,
    gu_np,
    omega_plus_np,
    psl2_np,
    sp_np,
    theorem_family_np,
)
from .orders import TAGS, FamilyId, group_order, minimal_degree_bound

__all__ = [
    "CHAINS", "AuditReport", "Chain", "Violation", "proof_inequality_audit",
    "FORMULAS", "FormulaResult", "OmegaVariant", "PreconditionError", "SpCase", "TheoremCase",
    "alternating_np", "evaluate", "gl_np", "gu_np", "omega_plus_np", "psl2_np", "sp_np",
    "theorem_family_np", "TAGS", "FamilyId", "group_order", "minimal_degree_bound",
]
