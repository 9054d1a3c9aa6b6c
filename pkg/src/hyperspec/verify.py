"""Exhaustive desk-scale check of the extremal unicyclic results.

For given (k, m, z) the class of connected unicyclic k-graphs with m edges and
matching number >= z (or == z) is enumerated, every member is solved, and the
maximizer of the spectral radius is compared with the predicted family.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Literal, Sequence

from .canon import canonical_key
from .enumeration import GenSpec, generate
from .families import InfeasibleCase, build_family, case_for, preset
from .matching import class_filter
from .spectral import SolverConfig, spectral_radius

Mode = Literal["atleast", "exact"]

EXIT_OK, EXIT_MISMATCH, EXIT_TIE, EXIT_INFEASIBLE = 0, 2, 3, 4


@dataclass(frozen=True)
class VerifyReport:
    k: int
    m: int
    z: int
    mode: str
    case: str
    class_size: int
    max_rho: float
    argmax_key: str
    expected_key: str
    match: bool
    runner_up_gap: float | None  # None when the class has a single member
    tie: bool = False

    @property
    def passed(self) -> bool:
        return self.match and not self.tie

    @property
    def status(self) -> str:
        if self.tie:
            return "tie"
        return "pass" if self.match else "mismatch"

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> VerifyReport:
        return cls(**{f: d[f] for f in cls.__dataclass_fields__ if f in d})


def _rho(args):
    h, cfg = args
    return spectral_radius(h, cfg)


def verify_theorem(k: int, m: int, z: int, mode: Mode = "atleast", cfg: SolverConfig | None = None,
                   cap: int = 1_000_000, jobs: int = 1) -> VerifyReport:
    """Find the unique spectral maximizer of the class and compare with the predicted family.

    Raises :class:`~hyperspec.families.InfeasibleCase` when (k, m, z) lies
    outside every case or the predicted family does not exist.
    """
    cfg = cfg or SolverConfig()
    case = case_for(k, m, z)
    expected = build_family(preset(case, k, m, z)).graph
    expected_key = canonical_key(expected)
    members = [h for h in generate(GenSpec(k, m, "unicyclic", cap=cap)) if class_filter(h, z, mode)]
    if jobs > 1 and len(members) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            rhos = list(pool.map(_rho, [(h, cfg) for h in members], chunksize=8))
    else:
        rhos = [spectral_radius(h, cfg) for h in members]
    if not members:
        raise InfeasibleCase(f"no unicyclic hypergraph with k={k}, m={m} meets z={z} ({mode})", "empty class")
    order = sorted(range(len(members)), key=lambda i: -rhos[i])
    top = order[0]
    gap = rhos[top] - rhos[order[1]] if len(order) > 1 else None
    argmax_key = canonical_key(members[top])
    tie = gap is not None and gap <= 10 * cfg.tol
    return VerifyReport(k, m, z, mode, case, len(members), rhos[top], argmax_key.hex(),
                        expected_key.hex(), argmax_key == expected_key, gap, tie)


def feasible_cases(k: int, m: int) -> list[int]:
    """The z values for which some case applies and its family exists."""
    out = []
    for z in range(1, m):
        try:
            case_for(k, m, z)
        except ValueError:
            continue
        out.append(z)
    return out


def exit_code(reports: Iterable[VerifyReport]) -> int:
    reports = list(reports)
    if any(not r.match and not r.tie for r in reports):
        return EXIT_MISMATCH
    if any(r.tie for r in reports):
        return EXIT_TIE
    return EXIT_OK


COLUMNS = ("k", "m", "z", "mode", "case", "class_size", "max_rho", "runner_up_gap", "status")


def _row(r: VerifyReport) -> list[str]:
    gap = "" if r.runner_up_gap is None else f"{r.runner_up_gap:.3e}"
    return [str(r.k), str(r.m), str(r.z), r.mode, r.case, str(r.class_size),
            f"{r.max_rho:.12f}", gap, r.status]


def sort_reports(reports: Sequence[VerifyReport]) -> list[VerifyReport]:
    return sorted(reports, key=lambda r: (not r.passed, r.k, r.m, r.z, r.mode))


def report_table(reports: Sequence[VerifyReport], fmt: Literal["text", "csv"] = "text") -> str:
    rows = [_row(r) for r in sort_reports(reports)]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "text":
        raise ValueError(f"unknown table format {fmt!r}")
    widths = [max(len(c), *(len(row[i]) for row in rows)) if rows else len(c) for i, c in enumerate(COLUMNS)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(COLUMNS, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"

