"""Root data of simple simply-connected groups and their Weyl groups.

Weights are tuples of integers in the fundamental-weight basis, coroots are
tuples of integers in the simple-coroot basis.  With these conventions the
pairing of a weight with the i-th simple coroot is just its i-th coordinate,
and everything stays in integer arithmetic.

Simple roots follow Bourbaki's numbering.  For G2 the first simple root is
the short one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import factorial, gcd
from typing import Iterator, Sequence

from .errors import ConfigurationError, ResourceError

Weight = tuple[int, ...]
Coroot = tuple[int, ...]

MAX_RANK = 6
WEYL_ORDER_LIMIT = 51840

# half squared root lengths and Dynkin edges per type
_DYNKIN = {
    "A": lambda n: ([1] * n, [(i, i + 1) for i in range(n - 1)]),
    "B": lambda n: ([2] * (n - 1) + [1], [(i, i + 1) for i in range(n - 1)]),
    "C": lambda n: ([1] * (n - 1) + [2], [(i, i + 1) for i in range(n - 1)]),
    "D": lambda n: ([1] * n, [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]),
    "E": lambda n: ([1] * n, [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] + [(i, i + 1) for i in range(5, n - 1)]),
    "F": lambda n: ([2, 2, 1, 1], [(0, 1), (1, 2), (2, 3)]),
    "G": lambda n: ([1, 3], [(0, 1)]),
}

_VALID = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


def weyl_group_order(type_label: str, rank: int) -> int:
    n = rank
    if type_label == "A":
        return factorial(n + 1)
    if type_label in "BC":
        return 2**n * factorial(n)
    if type_label == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600, ("F", 4): 1152, ("G", 2): 12}[
        (type_label, n)
    ]


def _invert(matrix: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _lcm(values) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


@dataclass(frozen=True)
class WeylElement:
    """An element of W acting on fundamental-weight coordinates.

    ``matrix`` acts on column vectors, ``word`` is a reduced expression
    (leftmost index applied last).
    """

    matrix: tuple[tuple[int, ...], ...]
    length: int
    word: tuple[int, ...] = field(compare=False)

    def act(self, weight: Sequence[int]) -> Weight:
        return tuple(sum(m * x for m, x in zip(row, weight)) for row in self.matrix)


@dataclass(frozen=True, eq=False)
class RootDatum:
    type_label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    half_lengths: tuple[int, ...]
    positive_roots_simple: tuple[tuple[int, ...], ...]
    weyl_order_limit: int = WEYL_ORDER_LIMIT

    def __repr__(self) -> str:
        return f"RootDatum({self.label})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RootDatum) and self.label == other.label

    def __hash__(self) -> int:
        return hash(self.label)

    def __reduce__(self):
        return (build_root_datum, (self.type_label, self.rank))

    @property
    def label(self) -> str:
        return f"{self.type_label}{self.rank}"

    # -- roots and coroots -------------------------------------------------

    def root_to_weight(self, coeffs: Sequence[int]) -> Weight:
        """Fundamental-weight coordinates of sum(coeffs[j] * alpha_j)."""
        return tuple(sum(self.cartan[i][j] * c for j, c in enumerate(coeffs)) for i in range(self.rank))

    @cached_property
    def simple_roots(self) -> tuple[Weight, ...]:
        return tuple(self.root_to_weight([int(i == j) for j in range(self.rank)]) for i in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        return tuple(self.root_to_weight(c) for c in self.positive_roots_simple)

    @cached_property
    def simple_coroots(self) -> tuple[Coroot, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def positive_coroots(self) -> tuple[Coroot, ...]:
        out = []
        for c in self.positive_roots_simple:
            half_len = self.root_half_length(c)
            out.append(tuple(cj * dj // half_len for cj, dj in zip(c, self.half_lengths)))
        return tuple(out)

    def root_half_length(self, coeffs: Sequence[int]) -> int:
        """(gamma, gamma)/2 for a root given in simple-root coordinates."""
        total = 0
        for j, cj in enumerate(coeffs):
            for k, ck in enumerate(coeffs):
                total += cj * ck * self.cartan[j][k] * self.half_lengths[j]
        return total // 2

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots_simple)

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def highest_coroot(self) -> Coroot:
        return max(self.positive_coroots, key=lambda c: (sum(c), c))

    @property
    def coxeter_number(self) -> int:
        return 1 + pairing(self, self.rho, self.highest_coroot)

    # -- linear algebra helpers -------------------------------------------

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.cartan)

    @cached_property
    def _root_coord_scale(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        den = _lcm(x.denominator for row in self.inverse_cartan for x in row)
        return den, tuple(tuple(int(x * den) for x in row) for row in self.inverse_cartan)

    def scaled_root_coords(self, weight: Sequence[int]) -> tuple[int, ...]:
        """Simple-root coordinates of ``weight`` multiplied by a fixed positive integer."""
        _, mat = self._root_coord_scale
        return tuple(sum(m * x for m, x in zip(row, weight)) for row in mat)

    def root_coords(self, weight: Sequence[int]) -> tuple[Fraction, ...]:
        return tuple(sum((m * x for m, x in zip(row, weight)), Fraction(0)) for row in self.inverse_cartan)

    def height_key(self, weight: Sequence[int]) -> int:
        """Integer proportional to the height of ``weight``; strictly monotone for the dominance order."""
        return sum(self.scaled_root_coords(weight))

    def dominates(self, lam: Sequence[int], mu: Sequence[int]) -> bool:
        """``lam >= mu`` in the dominance order (difference is a non-negative root combination)."""
        diff = self.root_coords([a - b for a, b in zip(lam, mu)])
        return all(x.denominator == 1 and x >= 0 for x in diff)

    @cached_property
    def weight_form(self) -> tuple[tuple[int, ...], ...]:
        """W-invariant symmetric form on fundamental coordinates, scaled to integers."""
        gram = [[self.inverse_cartan[i][k] * self.half_lengths[i] for k in range(self.rank)] for i in range(self.rank)]
        den = _lcm(x.denominator for row in gram for x in row)
        return tuple(tuple(int(x * den) for x in row) for row in gram)

    def form(self, a: Sequence[int], b: Sequence[int]) -> int:
        return sum(a[i] * g * b[k] for i, row in enumerate(self.weight_form) for k, g in enumerate(row))

    # -- Weyl group ----------------------------------------------------------

    def reflect(self, weight: Sequence[int], i: int) -> Weight:
        """Simple reflection s_i (ordinary action)."""
        c = weight[i]
        if c == 0:
            return tuple(weight)
        alpha = self.simple_roots[i]
        return tuple(x - c * a for x, a in zip(weight, alpha))

    def reflect_root(self, weight: Sequence[int], index: int) -> Weight:
        """Reflection in the positive root with position ``index`` in ``positive_roots``."""
        c = pairing(self, weight, self.positive_coroots[index])
        root = self.positive_roots[index]
        return tuple(x - c * a for x, a in zip(weight, root))

    def dominant_conjugate(self, weight: Sequence[int]) -> Weight:
        w = list(weight)
        simple = self.simple_roots
        while True:
            for i, c in enumerate(w):
                if c < 0:
                    alpha = simple[i]
                    for k in range(self.rank):
                        w[k] -= c * alpha[k]
                    break
            else:
                return tuple(w)

    def orbit(self, weight: Sequence[int]) -> list[Weight]:
        """W-orbit of a weight (ordinary action), starting from the given weight."""
        start = tuple(weight)
        seen = {start}
        queue = deque([start])
        out = [start]
        while queue:
            v = queue.popleft()
            for i in range(self.rank):
                if v[i] != 0:
                    u = self.reflect(v, i)
                    if u not in seen:
                        seen.add(u)
                        out.append(u)
                        queue.append(u)
        return out

    @property
    def weyl_order(self) -> int:
        return weyl_group_order(self.type_label, self.rank)

    @cached_property
    def _weyl_elements(self) -> tuple[WeylElement, ...]:
        n = self.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        elements = [WeylElement(ident, 0, ())]
        seen = {self.rho}
        images = [self.rho]
        frontier = [0]
        while frontier:
            nxt = []
            for idx in frontier:
                w = elements[idx]
                for i in range(n):
                    img = self.reflect(images[idx], i)
                    if img in seen:
                        continue
                    seen.add(img)
                    # s_i . w : reflect every column of w's matrix
                    cols = [self.reflect([row[j] for row in w.matrix], i) for j in range(n)]
                    mat = tuple(tuple(cols[j][r] for j in range(n)) for r in range(n))
                    elements.append(WeylElement(mat, w.length + 1, (i,) + w.word))
                    images.append(img)
                    nxt.append(len(elements) - 1)
            frontier = nxt
        return tuple(elements)


def pairing(datum: RootDatum, weight: Sequence[int], coroot: Sequence[int]) -> int:
    """<weight, coroot> for a coroot in simple-coroot coordinates."""
    if len(weight) != datum.rank or len(coroot) != datum.rank:
        raise ConfigurationError(f"dimension mismatch: rank {datum.rank}, got {len(weight)} and {len(coroot)}")
    return sum(w * c for w, c in zip(weight, coroot))


def _positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    ordered = list(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for gamma in layer:
            for i in range(n):
                if gamma == simple[i]:
                    continue
                q = 0
                down = list(gamma)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    q += 1
                pair = sum(gamma[j] * cartan[i][j] for j in range(n))
                if q - pair > 0:
                    up = tuple(g + int(j == i) for j, g in enumerate(gamma))
                    if up not in roots:
                        roots.add(up)
                        ordered.append(up)
                        nxt.append(up)
        layer = nxt
    return tuple(sorted(ordered, key=lambda c: (sum(c), c)))


@lru_cache(maxsize=None)
def build_root_datum(type_label: str, rank: int | None = None, *, max_rank: int = MAX_RANK) -> RootDatum:
    """Root datum for a simple type, e.g. ``build_root_datum("G", 2)`` or ``build_root_datum("G2")``."""
    if rank is None:
        label = type_label.strip().upper()
        if len(label) < 2 or not label[1:].isdigit():
            raise ConfigurationError(f"cannot parse root system label {type_label!r}")
        type_label, rank = label[0], int(label[1:])
    type_label = type_label.upper()
    if type_label not in _DYNKIN or not isinstance(rank, int) or not _VALID[type_label](rank):
        raise ConfigurationError(f"invalid simple type {type_label}{rank}")
    if rank > max_rank:
        raise ConfigurationError(f"rank {rank} exceeds the configured cap {max_rank}")
    half, edges = _DYNKIN[type_label](rank)
    inner = [[2 * half[i] if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        inner[i][j] = inner[j][i] = -max(half[i], half[j])
    cartan = tuple(tuple(inner[i][j] // half[i] for j in range(rank)) for i in range(rank))
    return RootDatum(type_label, rank, cartan, tuple(half), _positive_roots(cartan))


def weyl_elements(datum: RootDatum, limit: int | None = None) -> Iterator[WeylElement]:
    """All elements of W, each once, in order of non-decreasing length."""
    limit = datum.weyl_order_limit if limit is None else limit
    if datum.weyl_order > limit:
        raise ResourceError(f"|W({datum.label})| = {datum.weyl_order} exceeds limit {limit}")
    return iter(datum._weyl_elements)


def dot_action(datum: RootDatum, w: WeylElement, weight: Sequence[int]) -> Weight:
    shifted = w.act([x + 1 for x in weight])
    return tuple(x - 1 for x in shifted)


class _Singular:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SINGULAR"

    def __bool__(self) -> bool:
        return False


SINGULAR = _Singular()


def dominant_dot_normalize(datum: RootDatum, weight: Sequence[int]):
    """Return ``SINGULAR`` or ``(mu, sign)`` with ``mu`` dominant and ``mu = w . weight``, ``sign = (-1)^l(w)``."""
    x = [c + 1 for c in weight]
    sign = 1
    simple = datum.simple_roots
    while True:
        for i, c in enumerate(x):
            if c < 0:
                alpha = simple[i]
                for k in range(datum.rank):
                    x[k] -= c * alpha[k]
                sign = -sign
                break
        else:
            break
    if 0 in x:
        return SINGULAR
    return tuple(c - 1 for c in x), sign


def weyl_dimension(datum: RootDatum, weight: Sequence[int]) -> int:
    """Weyl dimension formula, prod <lam+rho, a^v> / <rho, a^v> over positive coroots."""
    num = den = 1
    shifted = [x + 1 for x in weight]
    for c in datum.positive_coroots:
        num *= sum(a * b for a, b in zip(shifted, c))
        den *= sum(c)
    q, r = divmod(num, den)
    assert r == 0
    return q


def is_dominant(weight: Sequence[int]) -> bool:
    return all(c >= 0 for c in weight)
