"""Pure-Python kernels.

Raw paths are tuples of ``(direction, length)`` pairs: ``direction`` is a
weight in fundamental coordinates and ``length`` a positive integer, in units
of ``1/denom`` for a common denominator ``denom`` fixed per shape.  All
breakpoints of Lakshmibai-Seshadri paths of shape ``lam`` have denominators
dividing the lcm of the non-zero pairings of ``lam`` with positive coroots, so
every computation below is integral.
"""

from __future__ import annotations

from collections import defaultdict

BACKEND = "python"


def convolve(a: dict, b: dict) -> dict:
    out: dict = defaultdict(int)
    for wa, ma in a.items():
        for wb, mb in b.items():
            out[tuple(x + y for x, y in zip(wa, wb))] += ma * mb
    return {w: m for w, m in out.items() if m}


def _heights(segs, i):
    h = 0
    hs = [0]
    for d, ln in segs:
        h += ln * d[i]
        hs.append(h)
    return hs


def _reflect(d, i, alpha):
    c = d[i]
    if c == 0:
        return d
    return tuple(x - c * a for x, a in zip(d, alpha))


def normalize(segs):
    out = []
    for d, ln in segs:
        if ln == 0:
            continue
        if out and out[-1][0] == d:
            out[-1] = (d, out[-1][1] + ln)
        else:
            out.append((d, ln))
    return tuple(out)


def lower(segs, i, alpha, denom):
    """Root operator f_i on a raw path; ``None`` when it vanishes."""
    hs = _heights(segs, i)
    m = min(hs)
    if hs[-1] - m < denom:
        return None
    k = max(j for j, h in enumerate(hs) if h == m)
    target = m + denom
    out = list(segs[:k])
    while hs[k + 1] < target:
        d, ln = segs[k]
        out.append((_reflect(d, i, alpha), ln))
        k += 1
    d, ln = segs[k]
    q, r = divmod(target - hs[k], d[i])
    if r:
        raise ArithmeticError("breakpoint off the common denominator grid")
    out.append((_reflect(d, i, alpha), q))
    out.append((d, ln - q))
    out.extend(segs[k + 1 :])
    return normalize(out)


def raise_(segs, i, alpha, denom):
    """Root operator e_i on a raw path; ``None`` when it vanishes."""
    hs = _heights(segs, i)
    m = min(hs)
    if m > -denom:
        return None
    k1 = hs.index(m)
    target = m + denom
    k = max(j for j in range(k1) if hs[j] >= target)
    d, ln = segs[k]
    q, r = divmod(hs[k] - target, -d[i]) if hs[k] != target else (0, 0)
    if r:
        raise ArithmeticError("breakpoint off the common denominator grid")
    out = list(segs[:k])
    out.append((d, q))
    out.append((_reflect(d, i, alpha), ln - q))
    for d2, ln2 in segs[k + 1 : k1]:
        out.append((_reflect(d2, i, alpha), ln2))
    out.extend(segs[k1:])
    return normalize(out)


def min_heights(segs, rank):
    mins = [0] * rank
    cur = [0] * rank
    for d, ln in segs:
        for i in range(rank):
            cur[i] += ln * d[i]
            if cur[i] < mins[i]:
                mins[i] = cur[i]
    return mins


def enumerate_paths(simple_roots, lam, denom, shift, cap):
    """Walk B(lam) once via canonical parents, without storing the crystal.

    A path ``c != straight`` has parent ``e_j(c)`` for the least ``j`` with
    ``e_j(c)`` defined, so ``c = f_i(pi)`` is visited from ``pi`` iff
    ``e_j(c)`` vanishes for every ``j < i``.

    Returns ``(count, endpoints, dominant)``: the number of paths, endpoint
    multiplicities, and endpoint multiplicities restricted to paths that stay
    in the dominant cone after adding ``shift``.
    """
    rank = len(lam)
    endpoints: dict = defaultdict(int)
    dominant: dict = defaultdict(int)
    straight = ((tuple(lam), denom),)
    stack = [(straight, tuple(lam))]
    count = 0
    floor = [-denom * s for s in shift]
    while stack:
        path, end = stack.pop()
        count += 1
        if count > cap:
            return None
        endpoints[end] += 1
        mins = min_heights(path, rank)
        if all(m >= f for m, f in zip(mins, floor)):
            dominant[end] += 1
        for i in range(rank):
            child = lower(path, i, simple_roots[i], denom)
            if child is None:
                continue
            if i:
                cm = min_heights(child, i)
                if any(cm[j] <= -denom for j in range(i)):
                    continue
            alpha = simple_roots[i]
            stack.append((child, tuple(x - a for x, a in zip(end, alpha))))
    return count, dict(endpoints), dict(dominant)
