"""Littelmann path model: LS paths of a fixed shape and their root operators.

Paths are stored as segment lists ``(direction, length)`` with integer
lengths over a common denominator that depends only on the shape, so all
breakpoint arithmetic is exact integer arithmetic.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import Sequence

from . import kernels
from .charring import Character
from .errors import PreconditionError, ResourceError
from .kernels import _pure
from .rootdata import RootDatum, Weight, is_dominant, pairing, weyl_dimension

PATH_CAP = 10**5
STREAM_CAP = 5 * 10**7


def common_denominator(datum: RootDatum, lam: Sequence[int]) -> int:
    """lcm of the non-zero pairings of ``lam`` with positive coroots."""
    vals = [abs(pairing(datum, lam, c)) for c in datum.positive_coroots]
    return reduce(lambda a, b: a * b // gcd(a, b), (v for v in vals if v), 1)


@dataclass(frozen=True)
class LSPath:
    shape: Weight
    denom: int
    raw: tuple[tuple[Weight, int], ...]

    @property
    def segments(self) -> tuple[tuple[Weight, Fraction], ...]:
        return tuple((d, Fraction(ln, self.denom)) for d, ln in self.raw)

    @property
    def endpoint(self) -> Weight:
        total = [0] * len(self.shape)
        for d, ln in self.raw:
            for k, x in enumerate(d):
                total[k] += ln * x
        return tuple(x // self.denom for x in total)

    def breakpoints(self) -> list[tuple[Fraction, tuple[Fraction, ...]]]:
        """``(t, pi(t))`` at every segment boundary, including t = 0 and t = 1."""
        t = 0
        pos = [0] * len(self.shape)
        out = [(Fraction(0), tuple(Fraction(0) for _ in pos))]
        for d, ln in self.raw:
            t += ln
            for k, x in enumerate(d):
                pos[k] += ln * x
            out.append((Fraction(t, self.denom), tuple(Fraction(x, self.denom) for x in pos)))
        return out

    def to_json(self) -> list:
        out = []
        for d, ln in self.raw:
            g = gcd(ln, self.denom)
            out.append([list(d), ln // g, self.denom // g])
        return out


def straight_path(datum: RootDatum, lam: Sequence[int]) -> LSPath:
    lam = tuple(lam)
    if not is_dominant(lam):
        raise PreconditionError(f"{lam} is not dominant")
    denom = common_denominator(datum, lam)
    return LSPath(lam, denom, ((lam, denom),))


def root_operator_f(datum: RootDatum, path: LSPath, i: int) -> LSPath | None:
    raw = _pure.lower(path.raw, i, datum.simple_roots[i], path.denom)
    return None if raw is None else LSPath(path.shape, path.denom, raw)


def root_operator_e(datum: RootDatum, path: LSPath, i: int) -> LSPath | None:
    raw = _pure.raise_(path.raw, i, datum.simple_roots[i], path.denom)
    return None if raw is None else LSPath(path.shape, path.denom, raw)


def generate_path_model(datum: RootDatum, lam: Sequence[int], cap: int = PATH_CAP) -> set[LSPath]:
    """Closure of the straight path under all lowering operators."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise PreconditionError(f"{lam} is not dominant")
    if weyl_dimension(datum, lam) > cap:
        raise ResourceError(f"B({lam}) has more than {cap} paths")
    start = straight_path(datum, lam)
    seen = {start}
    queue = deque([start])
    while queue:
        path = queue.popleft()
        for i in range(datum.rank):
            nxt = root_operator_f(datum, path, i)
            if nxt is not None and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def is_dominant_shifted(datum: RootDatum, path: LSPath, shift: Sequence[int]) -> bool:
    """Whether ``shift + pi(t)`` stays dominant; heights are piecewise linear, so breakpoints suffice."""
    mins = _pure.min_heights(path.raw, datum.rank)
    return all(m + path.denom * s >= 0 for m, s in zip(mins, shift))


@dataclass(frozen=True)
class PathModelStats:
    count: int
    endpoints: Character
    dominant_endpoints: dict[Weight, int]
    shift: Weight


def lowest_weight(datum: RootDatum, lam: Sequence[int]) -> Weight:
    return tuple(-x for x in datum.dominant_conjugate(tuple(-x for x in lam)))


@lru_cache(maxsize=256)
def path_model_statistics(
    datum: RootDatum, lam: Weight, shift: Weight | None = None, cap: int = STREAM_CAP
) -> PathModelStats:
    """Walk all of B(lam) once, tallying endpoints and shift-dominant endpoints."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise PreconditionError(f"{lam} is not dominant")
    shift = tuple(shift) if shift is not None else (0,) * datum.rank
    denom = common_denominator(datum, lam)
    low = lowest_weight(datum, lam)
    bounds = [int(x) for x in datum.root_coords([a - b for a, b in zip(lam, low)])]
    res = kernels.enumerate_paths(datum.simple_roots, lam, denom, shift, cap, bounds)
    if res is None:
        raise ResourceError(f"B({lam}) has more than {cap} paths")
    count, ends, dom = res
    return PathModelStats(count, Character(datum, ends), dict(dom), shift)


def dominant_path_counts(datum: RootDatum, p: int, lam: Sequence[int], cap: int = STREAM_CAP) -> dict[Weight, int]:
    """mu -> number of (p-1)rho-dominant paths in B(lam) ending at p*mu."""
    shift = tuple(p - 1 for _ in range(datum.rank))
    stats = path_model_statistics(datum, tuple(lam), shift, cap)
    out = Counter()
    for end, n in stats.dominant_endpoints.items():
        if all(x % p == 0 for x in end):
            out[tuple(x // p for x in end)] += n
    return dict(out)


def count_dominant_paths(datum: RootDatum, p: int, lam: Sequence[int], mu: Sequence[int]) -> int:
    lam, mu = tuple(lam), tuple(mu)
    if not is_dominant(lam) or not is_dominant(mu):
        raise PreconditionError("lambda and mu must be dominant")
    return dominant_path_counts(datum, p, lam).get(mu, 0)


def path_model_dump(paths) -> list:
    return sorted((path.to_json() for path in paths), key=repr)
