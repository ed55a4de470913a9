"""Recomputation of the published table of orderings.

Each row carries the values as printed next to the values recomputed from
the coupling formulas, and a status:

``MATCH``        recomputed lambda, E0 and verdict agree with the print
``DISCREPANT``   at least one recomputed value differs from the print
``TYPO``         the printed exponents break ``2 alpha + beta = -1``; the row
                 is recomputed with the constraint-corrected beta
``UNDEFINED``    the ordering has ``alpha != gamma`` and no printed values
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Optional

from .ordering import couplings, ordering_from, target_energy, verdict_for

MATCH_TOL = 1e-12


@dataclass(frozen=True)
class PrintedRow:
    label: str
    alpha: Optional[F]
    beta: F
    lambda_: Optional[F]
    energy: Optional[F]
    admissible: bool
    # actual exponents when the printed alpha column is a dash
    true_alpha: Optional[F] = None


PRINTED = (
    PrintedRow("Zhu-Kroemer / Li-Kuhn", F(-1, 2), F(0), F(1), F(1, 4), False),
    PrintedRow("Gora-Williams", None, F(0), None, None, False, true_alpha=F(-1)),
    PrintedRow("Ben Daniel-Duke", F(0), F(-1), F(2), F(0), False),
    PrintedRow("Mustafa-Mazharimousavi", F(-1, 4), F(-1, 2), F(1), F(0), False),
    PrintedRow("New", F(-1), F(1), F(3), F(5), True),
    PrintedRow("New", F(1, 4), F(-3, 2), F(3), F(0), True),
    PrintedRow("New", F(1, 2), F(-2), F(4), F(0), True),
    PrintedRow("New", F(3, 4), F(-5, 2), F(5), F(0), True),
    PrintedRow("New", F(1), F(-2), F(6), F(0), True),
)


@dataclass(frozen=True)
class Table1Row:
    label: str
    alpha: float
    beta_printed: float
    beta: float
    gamma: float
    heterojunction: bool
    lambda_printed: Optional[float]
    lambda_: Optional[float]
    energy_printed: Optional[float]
    energy: Optional[float]
    admissible_printed: bool
    admissible: bool
    bound_state_count: int
    status: str
    note: str


def _close(a: Optional[float], b: Optional[float]) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return abs(a - b) <= MATCH_TOL * max(1.0, abs(b))


def _opt(v: Optional[F]) -> Optional[float]:
    return None if v is None else float(v)


def recompute(row: PrintedRow, mu: float = 1.0) -> Table1Row:
    """Recompute one printed row at inverse length ``mu``."""
    notes = []
    if row.alpha is None:
        alpha, beta = row.true_alpha, row.beta
        o = ordering_from(float(alpha), float(beta))
        notes.append(f"alpha={alpha} != gamma={o.gamma:g}; printed entries are dashes")
        status = "UNDEFINED"
    else:
        alpha = row.alpha
        beta = row.beta
        status = None
        if 2 * alpha + beta != -1:
            wrong = couplings(float(alpha), float(beta)).lambda_
            beta = -1 - 2 * alpha
            notes.append(
                f"printed beta={row.beta} violates 2 alpha + beta = -1 "
                f"(it would give lambda={wrong:.12g}); recomputed with beta={beta}"
            )
            status = "TYPO"
        o = ordering_from(float(alpha), float(beta))
    c = couplings(o.alpha, o.beta)
    verdict = verdict_for(c)
    # E0 from the closed energy formula, even where no level n = 0 exists
    energy = None if c.lambda_ is None else target_energy(c, mu, 0)
    if c.lambda_ is None:
        notes.append(f"lambda is complex (1 + 80 g1 - 64 g2 = {c.discriminant:g})")
    elif verdict.bound_state_count == 0:
        notes.append("no bound state exists (0 <= n < lambda - 1 is empty); E0 is the formula value")
    printed_energy = None if row.energy is None else float(row.energy) * mu ** 2
    mismatched = [
        name for name, ok in (
            ("lambda", _close(c.lambda_, _opt(row.lambda_))),
            ("E0", _close(energy, printed_energy)),
            ("admissibility", verdict.admissible == row.admissible),
        ) if not ok
    ]
    if status != "UNDEFINED" and mismatched:
        notes.append("mismatch in " + ", ".join(mismatched))
    elif status == "TYPO":
        notes.append("corrected row matches the printed lambda, E0 and verdict")
    if status is None:
        status = "DISCREPANT" if mismatched else "MATCH"
    return Table1Row(
        label=row.label,
        alpha=float(alpha),
        beta_printed=float(row.beta),
        beta=o.beta,
        gamma=o.gamma,
        heterojunction=o.heterojunction,
        lambda_printed=_opt(row.lambda_),
        lambda_=c.lambda_,
        energy_printed=_opt(row.energy),
        energy=energy,
        admissible_printed=row.admissible,
        admissible=verdict.admissible,
        bound_state_count=verdict.bound_state_count,
        status=status,
        note="; ".join(notes),
    )


def table1_rows(mu: float = 1.0) -> list[Table1Row]:
    return [recompute(row, mu) for row in PRINTED]
