"""Sparse formal characters over a root datum.

A :class:`Character` is a finitely supported map from weights to integers.
Negative multiplicities are allowed (virtual characters); only non-zero
entries are stored.
"""

from __future__ import annotations

import heapq
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from . import kernels
from .errors import DomainError, PreconditionError
from .rootdata import (
    SINGULAR,
    RootDatum,
    Weight,
    build_root_datum,
    dominant_dot_normalize,
    is_dominant,
)


class Character(Mapping):
    """Immutable sparse character; ``c[w]`` is 0 for weights outside the support."""

    __slots__ = ("datum", "_entries", "_hash")

    def __init__(self, datum: RootDatum, entries: Mapping | Iterable = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean = {}
        for w, m in items:
            w = tuple(int(x) for x in w)
            if len(w) != datum.rank:
                raise DomainError(f"weight {w} does not have rank {datum.rank}")
            m = int(m)
            if m:
                clean[w] = clean.get(w, 0) + m
        self.datum = datum
        self._entries = {w: m for w, m in clean.items() if m}
        self._hash = None

    # Mapping protocol
    def __getitem__(self, weight) -> int:
        return self._entries.get(tuple(weight), 0)

    def __contains__(self, weight) -> bool:
        return tuple(weight) in self._entries

    def __iter__(self):
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, weight, default=0):
        return self._entries.get(tuple(weight), default)

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {m}" for w, m in sorted(self._entries.items()))
        return f"Character[{self.datum.label}]({{{body}}})"

    def __eq__(self, other) -> bool:
        if isinstance(other, Character):
            return self.datum == other.datum and self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.datum.label, frozenset(self._entries.items())))
        return self._hash

    @property
    def dimension(self) -> int:
        return sum(self._entries.values())

    def dominant_part(self) -> dict[Weight, int]:
        return {w: m for w, m in self._entries.items() if is_dominant(w)}

    def is_w_invariant(self) -> bool:
        # simple reflections generate W, so invariance under each one suffices
        reflect = self.datum.reflect
        entries = self._entries
        for w, m in entries.items():
            for i in range(self.datum.rank):
                if entries.get(reflect(w, i), 0) != m:
                    return False
        return True

    # arithmetic
    def __add__(self, other: "Character") -> "Character":
        return char_add(self, other)

    def __sub__(self, other: "Character") -> "Character":
        return char_add(self, char_scale(other, -1))

    def __neg__(self) -> "Character":
        return char_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, Character):
            return char_tensor(self, other)
        if isinstance(other, int):
            return char_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    # serialization
    def to_json(self) -> dict:
        return {
            "type": self.datum.label,
            "weights": [[list(w), m] for w, m in sorted(self._entries.items())],
        }

    @classmethod
    def from_json(cls, obj: dict, datum: RootDatum | None = None) -> "Character":
        if datum is None:
            datum = build_root_datum(obj["type"])
        elif "type" in obj and obj["type"] != datum.label:
            raise DomainError(f"character is over {obj['type']}, expected {datum.label}")
        return cls(datum, ((tuple(w), m) for w, m in obj["weights"]))


def zero_character(datum: RootDatum) -> Character:
    return Character(datum)


def _same_datum(a: Character, b: Character) -> None:
    if a.datum != b.datum:
        raise DomainError(f"characters over different root data: {a.datum.label} vs {b.datum.label}")


def char_add(a: Character, b: Character) -> Character:
    _same_datum(a, b)
    out = dict(a._entries)
    for w, m in b._entries.items():
        out[w] = out.get(w, 0) + m
    return Character(a.datum, out)


def char_scale(a: Character, n: int) -> Character:
    return Character(a.datum, {w: n * m for w, m in a._entries.items()})


def char_tensor(a: Character, b: Character) -> Character:
    _same_datum(a, b)
    return Character(a.datum, kernels.convolve(a._entries, b._entries))


def char_dual(c: Character) -> Character:
    return Character(c.datum, {tuple(-x for x in w): m for w, m in c._entries.items()})


def _check_prime(p: int) -> None:
    if not isinstance(p, int) or p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise PreconditionError(f"{p} is not a prime")


def frobenius_contract(c: Character, p: int, times: int = 1) -> Character:
    """Keep the weights divisible by ``p**times`` and divide them by it."""
    _check_prime(p)
    q = p**times
    out = {}
    for w, m in c._entries.items():
        if all(x % q == 0 for x in w):
            out[tuple(x // q for x in w)] = m
    return Character(c.datum, out)


def frobenius_twist(c: Character, p: int, times: int = 1) -> Character:
    _check_prime(p)
    q = p**times
    return Character(c.datum, {tuple(q * x for x in w): m for w, m in c._entries.items()})


# -- Weyl characters ------------------------------------------------------------

_DOMINANT_MEMO: dict[tuple[str, Weight], dict[Weight, int]] = {}
_CHAR_MEMO: dict[tuple[str, Weight], Character] = {}
_disk_cache = None


def use_disk_cache(cache) -> None:
    """Route :func:`weyl_character` through an on-disk cache (``None`` disables it)."""
    global _disk_cache
    _disk_cache = cache


def dominant_weights_below(datum: RootDatum, lam: Weight) -> list[Weight]:
    """Dominant weights ``mu <= lam``, highest first.

    Every such ``mu`` is reached from ``lam`` by subtracting positive roots
    through dominant weights only.
    """
    seen = {lam}
    stack = [lam]
    roots = datum.positive_roots
    while stack:
        mu = stack.pop()
        for gamma in roots:
            nu = tuple(a - b for a, b in zip(mu, gamma))
            if nu not in seen and all(x >= 0 for x in nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=lambda w: (-datum.height_key(w), w))


def dominant_multiplicities(datum: RootDatum, lam: Sequence[int]) -> dict[Weight, int]:
    """Freudenthal's recursion on the dominant weights of the Weyl character."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise PreconditionError(f"{lam} is not dominant")
    key = (datum.label, lam)
    hit = _DOMINANT_MEMO.get(key)
    if hit is not None:
        return hit

    order = dominant_weights_below(datum, lam)
    roots = datum.positive_roots
    gram = datum.weight_form
    n = datum.rank
    # (nu, gamma) = sum_i nu_i * gram_gamma[i]
    gram_roots = [tuple(sum(gram[i][k] * g[k] for k in range(n)) for i in range(n)) for g in roots]
    lr = tuple(x + 1 for x in lam)
    norm_top = datum.form(lr, lr)
    dc = datum.dominant_conjugate
    mult = {lam: 1}
    for mu in order[1:]:
        mr = tuple(x + 1 for x in mu)
        denom = norm_top - datum.form(mr, mr)
        total = 0
        for gamma, gg in zip(roots, gram_roots):
            nu = tuple(a + b for a, b in zip(mu, gamma))
            while True:
                m = mult.get(dc(nu))
                if m is None:
                    break
                total += m * sum(a * b for a, b in zip(nu, gg))
                nu = tuple(a + b for a, b in zip(nu, gamma))
        q, r = divmod(2 * total, denom)
        if r:
            raise ArithmeticError(f"Freudenthal recursion not integral at {mu} in {lam}")
        mult[mu] = q
    return _DOMINANT_MEMO.setdefault(key, mult)


def weyl_character(datum: RootDatum, lam: Sequence[int]) -> Character:
    """Character of the dual Weyl module with highest weight ``lam``."""
    lam = tuple(lam)
    if not is_dominant(lam):
        raise PreconditionError(f"{lam} is not dominant")
    key = (datum.label, lam)
    hit = _CHAR_MEMO.get(key)
    if hit is not None:
        if _disk_cache is not None and not _disk_cache.contains(datum, lam):
            _disk_cache.put(datum, lam, hit)
        return hit
    ch = None
    if _disk_cache is not None:
        ch = _disk_cache.get(datum, lam)
    if ch is None:
        entries = {}
        for mu, m in dominant_multiplicities(datum, lam).items():
            for nu in datum.orbit(mu):
                entries[nu] = m
        ch = Character(datum, entries)
        if _disk_cache is not None:
            _disk_cache.put(datum, lam, ch)
    return _CHAR_MEMO.setdefault(key, ch)


def euler_character(datum: RootDatum, lam: Sequence[int]) -> Character:
    norm = dominant_dot_normalize(datum, lam)
    if norm is SINGULAR:
        return zero_character(datum)
    mu, sign = norm
    return char_scale(weyl_character(datum, mu), sign)


def steinberg_character(datum: RootDatum, p: int, r: int = 1) -> Character:
    _check_prime(p)
    if r < 1:
        raise PreconditionError("r must be at least 1")
    return weyl_character(datum, tuple(p**r - 1 for _ in range(datum.rank)))


def hat_nabla_character(datum: RootDatum, p: int, r: int, lam: Sequence[int]) -> Character:
    """Character of the induced G_rT-module: e^lam times prod over positive roots of sum_{k<p^r} e^{-k alpha}."""
    _check_prime(p)
    if r < 1:
        raise PreconditionError("r must be at least 1")
    base = _hat_nabla_base(datum, p**r)
    lam = tuple(lam)
    return Character(datum, {tuple(a + b for a, b in zip(w, lam)): m for w, m in base.items()})


_HAT_BASE: dict[tuple[str, int], dict[Weight, int]] = {}


def _hat_nabla_base(datum: RootDatum, q: int) -> dict[Weight, int]:
    key = (datum.label, q)
    if key not in _HAT_BASE:
        acc = {(0,) * datum.rank: 1}
        for gamma in datum.positive_roots:
            factor = {tuple(-k * g for g in gamma): 1 for k in range(q)}
            acc = kernels.convolve(acc, factor)
        _HAT_BASE[key] = acc
    return _HAT_BASE[key]


# -- decompositions -------------------------------------------------------------


@dataclass
class DecompositionResult:
    multiplicities: dict[Weight, int]
    remainder: Character
    basis: str = field(default="weyl")

    @property
    def exact(self) -> bool:
        return len(self.remainder) == 0

    @property
    def nonnegative(self) -> bool:
        return all(m >= 0 for m in self.multiplicities.values())

    def sorted_rows(self) -> list[tuple[Weight, int]]:
        return sorted(self.multiplicities.items(), key=lambda kv: kv[0], reverse=True)


def _peel(
    datum: RootDatum,
    remaining: dict[Weight, int],
    basis: Callable[[Weight], Mapping[Weight, int]],
) -> dict[Weight, int]:
    """Triangular peel-off: repeatedly remove the highest remaining weight.

    Height is strictly monotone for dominance, so the popped weight is maximal;
    ties are broken by the lexicographically largest coordinates.
    """
    hk = datum.height_key
    heap = [(-hk(w), tuple(-x for x in w), w) for w in remaining]
    heapq.heapify(heap)
    out: dict[Weight, int] = {}
    while heap:
        _, _, top = heapq.heappop(heap)
        m = remaining.pop(top, 0)
        if m == 0:
            continue
        out[top] = out.get(top, 0) + m
        for w, bm in basis(top).items():
            if w == top:
                continue
            if w not in remaining:
                heapq.heappush(heap, (-hk(w), tuple(-x for x in w), w))
            v = remaining.get(w, 0) - m * bm
            if v:
                remaining[w] = v
            else:
                remaining.pop(w, None)
    return out


def decompose_into_weyl(c: Character) -> DecompositionResult:
    """Write a W-invariant character as an integer combination of Weyl characters."""
    datum = c.datum
    if not c.is_w_invariant():
        raise DomainError("character is not W-invariant")
    mults = _peel(datum, c.dominant_part(), lambda w: dominant_multiplicities(datum, w))
    return DecompositionResult(mults, zero_character(datum), "weyl")


def decompose_into_hat_nabla(c: Character, p: int, r: int) -> DecompositionResult:
    """Peel ``c`` on the triangular basis of induced G_rT characters."""
    _check_prime(p)
    datum = c.datum
    base = _hat_nabla_base(datum, p**r)

    def basis(lam):
        return {tuple(a + b for a, b in zip(w, lam)): m for w, m in base.items()}

    mults = _peel(datum, dict(c._entries), basis)
    return DecompositionResult(mults, zero_character(datum), "hat_nabla")


def reconstruct(result: DecompositionResult, datum: RootDatum, p: int = 0, r: int = 0) -> Character:
    """Sum of multiplicity times basis character plus remainder."""
    total = result.remainder
    for lam, m in result.multiplicities.items():
        if result.basis == "weyl":
            b = weyl_character(datum, lam)
        else:
            b = hat_nabla_character(datum, p, r, lam)
        total = total + char_scale(b, m)
    return total
