"""Good-filtration multiplicities of contracted dual Weyl modules.

The multiplicity of ``nabla(mu)`` in a good filtration of the contraction of
``nabla(lam)`` can be computed four ways, all implemented here or in
:mod:`frobctl.lspaths`:

* decompose the contracted character into Weyl characters,
* the alternating sum over W of ``dim nabla(lam)_{p (w . mu)}``,
* the coefficient of ``nabla((p-1)rho + p mu)`` in ``St (x) nabla(lam)``,
* the number of ``(p-1)rho``-dominant LS paths of shape ``lam`` ending at ``p mu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Sequence

from .charring import (
    DecompositionResult,
    _check_prime,
    char_tensor,
    decompose_into_hat_nabla,
    decompose_into_weyl,
    dominant_multiplicities,
    frobenius_contract,
    hat_nabla_character,
    steinberg_character,
    weyl_character,
)
from .errors import DomainError, PreconditionError
from .rootdata import (
    RootDatum,
    Weight,
    build_root_datum,
    dot_action,
    is_dominant,
    pairing,
    weyl_elements,
)


def _dominant(*weights: Sequence[int]) -> None:
    for w in weights:
        if not is_dominant(w):
            raise PreconditionError(f"{tuple(w)} is not dominant")


@dataclass
class MultiplicityTable:
    datum: RootDatum
    p: int
    lam: Weight
    rows: dict[Weight, int] = field(default_factory=dict)

    def __getitem__(self, mu) -> int:
        return self.rows.get(tuple(mu), 0)

    def sorted_rows(self) -> list[tuple[Weight, int]]:
        return sorted(self.rows.items(), reverse=True)

    def to_json(self) -> dict:
        return {
            "type": self.datum.label,
            "p": self.p,
            "lambda": list(self.lam),
            "rows": [{"mu": list(mu), "mult": m} for mu, m in self.sorted_rows()],
        }

    def total_dimension(self) -> int:
        return sum(m * sum(weyl_character(self.datum, mu).values()) for mu, m in self.rows.items())


@lru_cache(maxsize=1024)
def _contraction_decomposition(datum: RootDatum, p: int, lam: Weight) -> DecompositionResult:
    return decompose_into_weyl(frobenius_contract(weyl_character(datum, lam), p))


def contraction_multiplicities(datum: RootDatum, p: int, lam: Sequence[int]) -> MultiplicityTable:
    lam = tuple(lam)
    _check_prime(p)
    _dominant(lam)
    res = _contraction_decomposition(datum, p, lam)
    if not res.exact:
        raise DomainError(f"non-empty remainder decomposing the contraction of nabla{lam}")
    return MultiplicityTable(datum, p, lam, dict(res.multiplicities))


def signed_sum_multiplicity(datum: RootDatum, p: int, lam: Sequence[int], mu: Sequence[int]) -> int:
    """Alternating sum over all of W; the dot stabilizer of a dominant ``mu`` is trivial."""
    lam, mu = tuple(lam), tuple(mu)
    _check_prime(p)
    _dominant(lam, mu)
    ch = weyl_character(datum, lam)
    total = 0
    seen = set()
    for w in weyl_elements(datum):
        image = dot_action(datum, w, mu)
        if image in seen:
            raise AssertionError(f"{mu} has a non-trivial dot stabilizer")
        seen.add(image)
        total += (-1) ** w.length * ch[tuple(p * x for x in image)]
    return total


@lru_cache(maxsize=1024)
def _steinberg_tensor_decomposition(datum: RootDatum, p: int, lam: Weight) -> DecompositionResult:
    return decompose_into_weyl(char_tensor(steinberg_character(datum, p), weyl_character(datum, lam)))


def steinberg_tensor_multiplicity(datum: RootDatum, p: int, lam: Sequence[int], mu: Sequence[int]) -> int:
    lam, mu = tuple(lam), tuple(mu)
    _check_prime(p)
    _dominant(lam, mu)
    target = tuple(p - 1 + p * x for x in mu)
    return _steinberg_tensor_decomposition(datum, p, lam).multiplicities.get(target, 0)


def contracted_support(datum: RootDatum, p: int, lam: Sequence[int]) -> list[Weight]:
    """Dominant ``mu`` such that ``p mu`` is a weight of ``nabla(lam)``, highest first."""
    dom = dominant_multiplicities(datum, tuple(lam))
    out = [tuple(x // p for x in w) for w in dom if all(x % p == 0 for x in w)]
    return sorted(out, key=lambda w: (-datum.height_key(w), tuple(-x for x in w)))


def maximal_mu_check(datum: RootDatum, p: int, lam: Sequence[int]) -> tuple[Weight, bool]:
    """A maximal ``mu`` with ``p mu`` a weight, and whether its Steinberg multiplicity equals that weight's dimension."""
    lam = tuple(lam)
    _dominant(lam)
    support = contracted_support(datum, p, lam)
    if not support:
        raise DomainError(f"the contraction of nabla{lam} at p={p} is zero")
    mu = support[0]
    dim = dominant_multiplicities(datum, lam)[tuple(p * x for x in mu)]
    return mu, steinberg_tensor_multiplicity(datum, p, lam, mu) == dim


def adjunction_dimension_check(datum: RootDatum, p: int, lam: Sequence[int], mu: Sequence[int]) -> tuple[int, int]:
    lhs = steinberg_tensor_multiplicity(datum, p, lam, mu)
    rhs = contraction_multiplicities(datum, p, lam)[mu]
    return lhs, rhs


@dataclass
class BoundReport:
    datum: RootDatum
    p: int
    violations: list[tuple[Weight, Weight, int]] = field(default_factory=list)
    checked: int = 0

    @property
    def empty(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "type": self.datum.label,
            "p": self.p,
            "checked": self.checked,
            "violations": [{"lambda": list(l), "mu": list(m), "pairing": v} for l, m, v in self.violations],
        }


def semisimplicity_bound_report(datum: RootDatum, p: int) -> BoundReport:
    """Check <mu + rho, highest coroot> < p for every restricted lam and dominant p*mu in nabla(lam)."""
    _check_prime(p)
    h = datum.coxeter_number
    if p < 2 * (h - 1):
        raise PreconditionError(f"p={p} < 2(h-1)={2 * (h - 1)} for {datum.label}")
    report = BoundReport(datum, p)
    top = datum.highest_coroot
    for lam in product(range(p), repeat=datum.rank):
        for mu in contracted_support(datum, p, lam):
            report.checked += 1
            value = pairing(datum, [x + 1 for x in mu], top)
            if value >= p:
                report.violations.append((lam, mu, value))
    return report


@dataclass
class G2WeightCheck:
    p: int
    lam: Weight
    target: Weight
    root: Weight  # simple-root coordinates of lam - target
    multiplicity: int
    maximal: bool

    @property
    def ok(self) -> bool:
        return self.multiplicity >= 1 and self.maximal and self.root is not None

    def __bool__(self) -> bool:
        return self.ok


def g2_maximal_contracted_weight_check(p: int, datum: RootDatum | None = None) -> G2WeightCheck:
    """For lam = (p-3) w_short + 2 w_long, check p*w_short is a weight of nabla(lam) with w_short maximal."""
    datum = datum or build_root_datum("G", 2)
    if datum.label != "G2":
        raise PreconditionError("this check is specific to G2")
    _check_prime(p)
    if p < 3:
        raise PreconditionError("needs p >= 3")
    lam = (p - 3, 2)
    target = (p, 0)
    diff = tuple(a - b for a, b in zip(lam, target))
    root = None
    for coeffs, gamma in zip(datum.positive_roots_simple, datum.positive_roots):
        if gamma == diff:
            root = coeffs
    dom = dominant_multiplicities(datum, lam)
    mult = dom.get(target, 0)
    wbar = (1, 0)
    maximal = True
    for mu in contracted_support(datum, p, lam):
        if mu != wbar and datum.dominates(mu, wbar):
            maximal = False
    return G2WeightCheck(p, lam, target, root, mult, maximal)


def hat_nabla_contraction_check(datum: RootDatum, p: int, r: int, s: int, lam: Sequence[int]) -> DecompositionResult:
    """Contract an induced G_rT character s times and expand it in the G_{r-s}T basis."""
    if not 0 < s < r:
        raise PreconditionError("need 0 < s < r")
    ch = frobenius_contract(hat_nabla_character(datum, p, r, lam), p, times=s)
    return decompose_into_hat_nabla(ch, p, r - s)
