"""Verification grids shared by the CLI and the acceptance tests.

Each grid is a list of independent tasks; with ``jobs > 1`` they run in a
process pool, and results are sorted before reporting so the output does not
depend on scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Sequence

from . import sl2oracle as sl2
from .charring import frobenius_contract, hat_nabla_character, reconstruct, weyl_character
from .errors import ResourceError
from .filtration import (
    _contraction_decomposition,
    adjunction_dimension_check,
    contracted_support,
    contraction_multiplicities,
    hat_nabla_contraction_check,
    semisimplicity_bound_report,
    signed_sum_multiplicity,
    steinberg_tensor_multiplicity,
)
from .lspaths import STREAM_CAP, dominant_path_counts, path_model_statistics
from .rootdata import RootDatum, build_root_datum, weyl_dimension

GRID_CAP = 10**4


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    details: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        if self.ok:
            return f"all {self.cases} cases agree"
        return f"{len(self.failures)} of {self.cases} cases disagree"

    def to_json(self) -> dict:
        return {"suite": self.name, "cases": self.cases, "ok": self.ok, "failures": self.failures, "details": self.details}


def lambda_grid(datum: RootDatum, max_coord: int, min_coord: int = 0, cap: int = GRID_CAP) -> list[tuple[int, ...]]:
    size = (max_coord - min_coord + 1) ** datum.rank
    if size > cap:
        raise ResourceError(f"lambda grid of {size} weights exceeds cap {cap}")
    return list(product(range(min_coord, max_coord + 1), repeat=datum.rank))


def _run(task: Callable, args: Iterable[tuple], jobs: int) -> list:
    args = list(args)
    if jobs <= 1 or len(args) <= 1:
        return [task(*a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, *zip(*args)))


def default_jobs() -> int:
    return os.cpu_count() or 1


# -- four-way agreement -----------------------------------------------------------


def agreement_for_lambda(label: str, p: int, lam: tuple[int, ...], path_cap: int = STREAM_CAP) -> dict:
    """All four multiplicity evaluations for one lam, plus path-model soundness."""
    datum = build_root_datum(label)
    table = contraction_multiplicities(datum, p, lam)
    counts = dominant_path_counts(datum, p, lam, cap=path_cap)
    stats = path_model_statistics(datum, lam, tuple(p - 1 for _ in lam), path_cap)
    rows = []
    for mu in contracted_support(datum, p, lam):
        rows.append(
            {
                "mu": list(mu),
                "decomposition": table[mu],
                "signed_sum": signed_sum_multiplicity(datum, p, lam, mu),
                "steinberg": steinberg_tensor_multiplicity(datum, p, lam, mu),
                "paths": counts.get(mu, 0),
            }
        )
    # every table entry must sit in the contracted support
    extra = [list(mu) for mu in table.rows if list(mu) not in [r["mu"] for r in rows]]
    return {
        "lambda": list(lam),
        "rows": rows,
        "extra_rows": extra,
        "nonnegative": all(m >= 0 for m in table.rows.values()),
        "remainder_empty": _contraction_decomposition(datum, p, lam).exact,
        "path_count": stats.count,
        "dimension": weyl_dimension(datum, lam),
        "endpoints_match": stats.endpoints == weyl_character(datum, lam),
    }


def agreement_suite(
    datum: RootDatum, p: int, max_coord: int, jobs: int = 1, path_cap: int = STREAM_CAP, grid_cap: int = GRID_CAP
) -> SuiteReport:
    report = SuiteReport(f"agree {datum.label} p={p} max_coord={max_coord}")
    results = _run(agreement_for_lambda, ((datum.label, p, lam, path_cap) for lam in lambda_grid(datum, max_coord, cap=grid_cap)), jobs)
    for res in sorted(results, key=lambda r: r["lambda"]):
        report.details.append(res)
        for row in res["rows"]:
            report.cases += 1
            values = {row["decomposition"], row["signed_sum"], row["steinberg"], row["paths"]}
            if len(values) != 1 or row["decomposition"] < 0:
                report.failures.append({"lambda": res["lambda"], **row})
        if not res["nonnegative"] or res["extra_rows"]:
            report.failures.append({"lambda": res["lambda"], "reason": "negative or unsupported table entry"})
    return report


def path_soundness(report: SuiteReport) -> list[dict]:
    """Shapes in an agreement report whose path model does not realize the character."""
    return [
        d for d in report.details if d["path_count"] != d["dimension"] or not d["endpoints_match"]
    ]


def adjunction_suite(datum: RootDatum, p: int, max_coord: int, grid_cap: int = GRID_CAP) -> SuiteReport:
    report = SuiteReport(f"adjoint {datum.label} p={p} max_coord={max_coord}")
    for lam in lambda_grid(datum, max_coord, cap=grid_cap):
        for mu in contracted_support(datum, p, lam):
            lhs, rhs = adjunction_dimension_check(datum, p, lam, mu)
            report.cases += 1
            row = {"lambda": list(lam), "mu": list(mu), "lhs": lhs, "rhs": rhs}
            report.details.append(row)
            if lhs != rhs:
                report.failures.append(row)
    return report


def bound_suite(datum: RootDatum, p: int) -> SuiteReport:
    bound = semisimplicity_bound_report(datum, p)
    report = SuiteReport(f"bound {datum.label} p={p}", cases=bound.checked)
    report.failures = bound.to_json()["violations"]
    return report


def hatnabla_suite(
    datum: RootDatum, p: int, r: int, s: int, min_coord: int, max_coord: int, grid_cap: int = GRID_CAP
) -> SuiteReport:
    report = SuiteReport(f"hatnabla {datum.label} p={p} r={r} s={s}")
    for lam in lambda_grid(datum, max_coord, min_coord, cap=grid_cap):
        res = hat_nabla_contraction_check(datum, p, r, s, lam)
        contracted = frobenius_contract(hat_nabla_character(datum, p, r, lam), p, times=s)
        rebuilt = reconstruct(res, datum, p, r - s) == contracted
        report.cases += 1
        row = {
            "lambda": list(lam),
            "rows": [{"mu": list(mu), "mult": m} for mu, m in res.sorted_rows()],
            "nonnegative": res.nonnegative,
            "exact": res.exact and rebuilt,
        }
        report.details.append(row)
        if not (res.nonnegative and row["exact"]):
            report.failures.append(row)
    return report


def oracle_modules(p: int, max_n: int = 20, max_ab: int = 12) -> list[tuple[str, sl2.FpRep]]:
    mods = []
    for n in range(max_n + 1):
        d = sl2.build_weyl_module(p, n)
        mods.append((f"Delta({n})", d))
        mods.append((f"Delta({n})*", sl2.dual_rep(d)))
    for a in range(max_ab + 1):
        for b in range(max_ab + 1 - a):
            t = sl2.tensor_rep(sl2.build_weyl_module(p, a), sl2.build_weyl_module(p, b))
            mods.append((f"Delta({a})xDelta({b})", t))
            mods.append((f"(Delta({a})xDelta({b}))*", sl2.dual_rep(t)))
    return mods


def oracle_suite(primes: Sequence[int], max_n: int = 20, max_ab: int = 12, theta_primes: Sequence[int] = (2, 3, 5, 7)) -> SuiteReport:
    report = SuiteReport("oracle")
    for p in primes:
        for name, mod in oracle_modules(p, max_n, max_ab):
            report.cases += 1
            if not sl2.verify_contraction_via_invariants(p, mod):
                report.failures.append({"p": p, "module": name})
    for p in theta_primes:
        report.cases += 1
        rank = sl2.theta_rank(p)
        report.details.append({"p": p, "theta_rank": rank})
        if rank != p * p:
            report.failures.append({"p": p, "theta_rank": rank})
    return report
