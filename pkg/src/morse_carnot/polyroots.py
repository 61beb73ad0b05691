"""Real roots with multiplicity for integer/rational polynomials.

Coefficients are given highest degree first.  Arithmetic is exact
(``fractions.Fraction``) up to the final conversion of each isolated root to
a float: Yun's square-free decomposition separates the multiplicities, a
Sturm sequence isolates every real root of each square-free factor, and the
isolating interval is bisected down to double precision.
"""

from __future__ import annotations

from fractions import Fraction


def _strip(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:])


def _as_fractions(coeffs):
    return _strip([Fraction(c) for c in coeffs])


def horner(coeffs, x):
    acc = 0 * x
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def derivative(p):
    n = len(p) - 1
    return _strip([c * (n - i) for i, c in enumerate(p[:-1])]) or [Fraction(0)]


def poly_divmod(p, q):
    p, q = _strip(p), _strip(q)
    if q == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    if len(p) < len(q):
        return [Fraction(0)], p
    rem = list(p)
    quot = []
    for i in range(len(p) - len(q) + 1):
        c = rem[i] / q[0]
        quot.append(c)
        for j, b in enumerate(q):
            rem[i + j] -= c * b
    return quot, _strip(rem[len(quot):]) or [Fraction(0)]


def _monic(p):
    return [c / p[0] for c in p]


def poly_gcd(p, q):
    p, q = _strip(p), _strip(q)
    while q != [0]:
        p, q = q, poly_divmod(p, q)[1]
    return _monic(p)


def squarefree_decomposition(coeffs):
    """Yun's algorithm: list of (factor, multiplicity), factors monic and square-free."""
    f = _monic(_as_fractions(coeffs))
    if len(f) == 1:
        return []
    out = []
    df = derivative(f)
    a = poly_gcd(f, df)
    b = poly_divmod(f, a)[0]
    c = poly_divmod(df, a)[0]
    d = [x - y for x, y in zip(_pad(c, len(b)), _pad(derivative(b), len(b)))]
    k = 1
    while len(_strip(b)) > 1:
        a = poly_gcd(b, _strip(d))
        if len(a) > 1:
            out.append((a, k))
        b = poly_divmod(b, a)[0]
        c = poly_divmod(_strip(d), a)[0]
        d = [x - y for x, y in zip(_pad(c, len(b)), _pad(derivative(b), len(b)))]
        k += 1
    return out


def _pad(p, n):
    p = _strip(p)
    return [Fraction(0)] * (n - len(p)) + list(p)


def sturm_sequence(p):
    seq = [_strip(p), derivative(p)]
    while len(seq[-1]) > 1:
        rem = poly_divmod(seq[-2], seq[-1])[1]
        if rem == [0]:
            break
        seq.append([-c for c in rem])
    return seq


def _sign_changes(seq, x):
    signs = [v for v in (horner(s, x) for s in seq) if v != 0]
    return sum(1 for u, v in zip(signs, signs[1:]) if (u > 0) != (v > 0))


def _cauchy_bound(p):
    return 1 + max(abs(c / p[0]) for c in p[1:])


def isolate_real_roots(p):
    """Disjoint intervals (lo, hi], one per real root of square-free ``p``.

    Returns the intervals and the Sturm sequence used to find them.
    """
    p = _strip(p)
    if len(p) == 1:
        return [], [p]
    seq = sturm_sequence(p)
    bound = Fraction(_cauchy_bound(p))
    todo = [(-bound, bound)]
    found = []
    while todo:
        lo, hi = todo.pop()
        n = _sign_changes(seq, lo) - _sign_changes(seq, hi)
        if n == 0:
            continue
        if n == 1:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        todo.extend([(mid, hi), (lo, mid)])
    return sorted(found), seq


def _refine(p, seq, lo, hi):
    if horner(p, hi) == 0:
        return float(hi)
    scale = max(abs(lo), abs(hi), Fraction(1))
    while hi - lo > scale * Fraction(1, 2 ** 60):
        mid = (lo + hi) / 2
        if horner(p, mid) == 0:
            return float(mid)
        if _sign_changes(seq, lo) - _sign_changes(seq, mid) == 1:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


def real_roots(coeffs):
    """Sorted list of (root, multiplicity) for every distinct real root."""
    roots = []
    for factor, mult in squarefree_decomposition(coeffs):
        intervals, seq = isolate_real_roots(factor)
        for lo, hi in intervals:
            roots.append((_refine(factor, seq, lo, hi), mult))
    return sorted(roots)
