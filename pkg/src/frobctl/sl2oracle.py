"""Brute-force SL2 checks over F_p.

Representations of the first Frobenius kernel are given by the matrices of
``e`` and ``f`` over F_p together with integer weights.  Divided powers
``e^(k) = e^k / k!`` are available for ``k < p``, and together with the
torus part they generate the distribution algebra of the kernel.  Hence a
vector is invariant iff it is killed by ``e`` and ``f`` and its weight is
divisible by ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

from .charring import Character, _check_prime, frobenius_twist
from .errors import DomainError, PreconditionError
from .rootdata import build_root_datum

ORACLE_MAX_P = 13


def _a1():
    return build_root_datum("A", 1)


# -- F_p linear algebra ----------------------------------------------------


def row_reduce(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F_p and the pivot columns."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            a[[r, k]] = a[[k, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - np.outer(a[others, c], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def fp_rank(mat, p: int) -> int:
    mat = np.asarray(mat)
    if mat.size == 0:
        return 0
    return len(row_reduce(mat, p)[1])


def fp_nullspace(mat, p: int) -> np.ndarray:
    """Basis of the right kernel over F_p, one vector per row."""
    mat = np.asarray(mat, dtype=np.int64)
    cols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    red, pivots = row_reduce(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-red[i, fc]) % p
    return basis


# -- representations -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FpRep:
    p: int
    E: np.ndarray
    F: np.ndarray
    weights: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.weights)

    def character(self) -> Character:
        out: dict = {}
        for w in self.weights:
            out[(w,)] = out.get((w,), 0) + 1
        return Character(_a1(), out)

    def divided_power(self, which: str, k: int) -> np.ndarray:
        if not 0 <= k < self.p:
            raise PreconditionError(f"divided power {k} needs 0 <= k < p")
        base = self.E if which == "e" else self.F
        mat = np.eye(self.dim, dtype=np.int64)
        for _ in range(k):
            mat = (mat @ base) % self.p
        return (mat * pow(factorial(k), -1, self.p)) % self.p

    def check(self) -> None:
        w = np.array(self.weights)
        for mat, step in ((self.E, 2), (self.F, -2)):
            rows, cols = np.nonzero(mat % self.p)
            if np.any(w[rows] != w[cols] + step):
                raise DomainError("action does not shift weights by the root")


def _same_p(*reps: FpRep) -> int:
    ps = {r.p for r in reps}
    if len(ps) != 1:
        raise DomainError(f"representations over different primes {sorted(ps)}")
    return ps.pop()


def build_weyl_module(p: int, n: int) -> FpRep:
    """Weyl module of highest weight n, basis v_i = f^(i) v_0 of weight n - 2i."""
    _check_prime(p)
    if n < 0:
        raise PreconditionError("highest weight must be non-negative")
    E = np.zeros((n + 1, n + 1), dtype=np.int64)
    F = np.zeros((n + 1, n + 1), dtype=np.int64)
    for i in range(n + 1):
        if i >= 1:
            E[i - 1, i] = (n - i + 1) % p
        if i < n:
            F[i + 1, i] = (i + 1) % p
    return FpRep(p, E, F, tuple(n - 2 * i for i in range(n + 1)))


def steinberg_rep(p: int) -> FpRep:
    return build_weyl_module(p, p - 1)


def trivial_rep(p: int) -> FpRep:
    return build_weyl_module(p, 0)


def dual_rep(r: FpRep) -> FpRep:
    return FpRep(r.p, (-r.E.T) % r.p, (-r.F.T) % r.p, tuple(-w for w in r.weights))


def tensor_rep(a: FpRep, b: FpRep) -> FpRep:
    p = _same_p(a, b)
    ia = np.eye(a.dim, dtype=np.int64)
    ib = np.eye(b.dim, dtype=np.int64)
    E = (np.kron(a.E, ib) + np.kron(ia, b.E)) % p
    F = (np.kron(a.F, ib) + np.kron(ia, b.F)) % p
    weights = tuple(x + y for x in a.weights for y in b.weights)
    return FpRep(p, E, F, weights)


def direct_sum_rep(a: FpRep, b: FpRep) -> FpRep:
    p = _same_p(a, b)
    n = a.dim + b.dim
    E = np.zeros((n, n), dtype=np.int64)
    F = np.zeros((n, n), dtype=np.int64)
    E[: a.dim, : a.dim], E[a.dim :, a.dim :] = a.E, b.E
    F[: a.dim, : a.dim], F[a.dim :, a.dim :] = a.F, b.F
    return FpRep(p, E, F, a.weights + b.weights)


def twist_rep(r: FpRep) -> FpRep:
    """Frobenius twist: weights scale by p and e, f act by zero."""
    zero = np.zeros_like(r.E)
    return FpRep(r.p, zero, zero.copy(), tuple(r.p * w for w in r.weights))


@dataclass
class InvariantReport:
    dimension: int
    weight_character: Character
    basis: np.ndarray


def g1_invariants(r: FpRep) -> InvariantReport:
    p = r.p
    weights = np.array(r.weights, dtype=np.int64)
    chars: dict = {}
    vectors = []
    for w in sorted(set(r.weights)):
        if w % p:
            continue
        cols = np.nonzero(weights == w)[0]
        stacked = np.vstack([r.E[:, cols], r.F[:, cols]])
        ker = fp_nullspace(stacked, p)
        if len(ker):
            chars[(w,)] = len(ker)
            full = np.zeros((len(ker), r.dim), dtype=np.int64)
            full[:, cols] = ker
            vectors.append(full)
    basis = np.vstack(vectors) if vectors else np.zeros((0, r.dim), dtype=np.int64)
    return InvariantReport(len(basis), Character(_a1(), chars), basis)


def mu0_character(r: FpRep) -> Character:
    """Weights divisible by p, divided by p."""
    out: dict = {}
    for w in r.weights:
        if w % r.p == 0:
            key = (w // r.p,)
            out[key] = out.get(key, 0) + 1
    return Character(_a1(), out)


def verify_contraction_via_invariants(p: int, module: FpRep) -> bool:
    """Compare the invariants of St (x) St (x) M with the twist of the contracted character of M."""
    if module.p != p:
        raise DomainError("module is over a different prime")
    st = steinberg_rep(p)
    big = tensor_rep(tensor_rep(st, st), module)
    lhs = g1_invariants(big).weight_character
    rhs = frobenius_twist(mu0_character(module), p)
    return lhs == rhs


def theta_rank(p: int) -> int:
    """Rank of the vectors f^(a) e^(b) (v+ (x) v-) in St (x) St, 0 <= a, b < p."""
    _check_prime(p)
    if p > ORACLE_MAX_P:
        raise PreconditionError(f"p={p} exceeds the oracle cap {ORACLE_MAX_P}")
    st = steinberg_rep(p)
    big = tensor_rep(st, st)
    start = np.zeros(big.dim, dtype=np.int64)
    start[p - 1] = 1  # v_0 (x) v_{p-1}
    raising = [big.divided_power("e", b) for b in range(p)]
    lowering = [big.divided_power("f", a) for a in range(p)]
    columns = [(lowering[a] @ (raising[b] @ start % p)) % p for a in range(p) for b in range(p)]
    return fp_rank(np.array(columns).T, p)
