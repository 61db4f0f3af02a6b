"""Structured Hopficity verdict for A wr_X B with B, X finite."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..abelian import AbelianSpec
from .actions import exponent_two_condition, lundstrom_check, nonabelian_class_check, orbits_stabs, stab_permutation_check
from .automorphisms import DEFAULT_MAX_AUT_ORDER, aut_brute
from .endo import ProbeReport, direct_finiteness_probe, intertwiner_basis
from .groups import FiniteAction


CONDITIONS = (
    "B_hopfian",
    "A_exponent_two_D_no_involution",
    "aut_B_permutes_stabilizers",
    "D_classes_nonabelian",
)


@dataclass
class TheoremBReport:
    conditions: Dict[str, bool]
    failed: List[str]
    n_p: Dict[int, int]
    n_0: int
    end_dims: Dict[str, int]
    probes: List[ProbeReport]
    lundstrom: bool
    verdict: str
    licensed_by: List[str]
    fallback: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "conditions": dict(self.conditions),
            "failed": list(self.failed),
            "n_p": {str(p): v for p, v in self.n_p.items()},
            "n_0": self.n_0,
            "end_dims": dict(self.end_dims),
            "probes": [p.as_dict() for p in self.probes],
            "probe_violations": sum(p.violations for p in self.probes),
            "lundstrom": self.lundstrom,
            "verdict": self.verdict,
            "licensed_by": list(self.licensed_by),
            "fallback": self.fallback,
            "notes": list(self.notes),
        }


def theoremB_report(action: FiniteAction, A: AbelianSpec, budget: int = 256, seed: int = 0,
                    max_aut_order: int = DEFAULT_MAX_AUT_ORDER) -> TheoremBReport:
    """Check the four hypotheses, compute n_p / n_0, probe the matrix rings over the
    intertwiner algebras for direct finiteness and report the verdict.

    B is finite here, so it is Hopfian; G = A wr_X B is finite whenever A is, and
    residually finite in general, which is the fallback verdict when a hypothesis
    fails.
    """
    auts = aut_brute(action.group, max_aut_order)
    conds = {
        "B_hopfian": True,
        "A_exponent_two_D_no_involution": exponent_two_condition(action, A),
        "aut_B_permutes_stabilizers": stab_permutation_check(action, auts),
        "D_classes_nonabelian": all(nonabelian_class_check(action).values()),
    }
    failed = [k for k in CONDITIONS if not conds[k]]
    n_p = {p: A.n_p(p) for p in A.primes()}
    n_0 = A.rank
    basis = intertwiner_basis(action)
    end_dims = {}
    probes = []
    for p, n in n_p.items():
        end_dims[f"F{p}"] = len(basis)
        probes.append(direct_finiteness_probe(basis, p, n, budget, seed))
    if n_0:
        end_dims["Q"] = len(basis)
        probes.append(direct_finiteness_probe(basis, None, n_0, min(budget, 64), seed))
    notes = []
    if n_0:
        notes.append("the Z-part is probed inside End_QB(QX), which contains End_ZB(ZX)")
    lund = lundstrom_check(action).holds
    violations = sum(p.violations for p in probes)
    if A.is_trivial():
        verdict, licensed = "hopfian", ["B_hopfian"]
        notes.append("A is trivial, so G = B")
    elif failed:
        verdict, licensed = "undecided_by_theorem_b", []
    elif violations:
        verdict, licensed = "not_hopfian", list(CONDITIONS) + ["direct_finiteness_probe"]
    else:
        # finite-dimensional algebras over a field are directly finite
        verdict, licensed = "hopfian", list(CONDITIONS) + ["finite_dimensional_endomorphism_rings"]
    fallback = None
    if verdict == "undecided_by_theorem_b":
        fallback = ("hopfian: G is finite" if A.is_finite()
                    else "hopfian: G is finitely generated and residually finite")
    od = orbits_stabs(action)
    if len(od.kernel) > 1:
        notes.append(f"action kernel D has order {len(od.kernel)}")
    return TheoremBReport(conds, failed, n_p, n_0, end_dims, probes, lund, verdict, licensed,
                          fallback, notes)
