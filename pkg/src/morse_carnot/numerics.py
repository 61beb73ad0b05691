"""Small numerical oracles: adaptive Simpson quadrature, bisection, central differences."""

from __future__ import annotations


def adaptive_simpson(f, a: float, b: float, abs_tol: float = 1e-12, max_depth: int = 60) -> float:
    """Integrate ``f`` from ``a`` to ``b`` (either order) by adaptive Simpson.

    Each panel is accepted once the two-half estimate differs from the
    whole-panel estimate by at most 15x its share of ``abs_tol``; the accepted
    value carries the Richardson correction.
    """
    if a == b:
        return 0.0
    fa, fb, fm = f(a), f(b), f(0.5 * (a + b))
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    total = 0.0
    stack = [(a, b, fa, fm, fb, whole, abs_tol, 0)]
    while stack:
        lo, hi, flo, fmid, fhi, est, tol, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        lm, rm = 0.5 * (lo + mid), 0.5 * (mid + hi)
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid)
        right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi)
        delta = left + right - est
        if depth >= max_depth or abs(delta) <= 15.0 * tol:
            total += left + right + delta / 15.0
        else:
            stack.append((mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1))
            stack.append((lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1))
    return total


def bisect_root(f, lo: float, hi: float, xtol: float = 0.0, maxiter: int = 200) -> float:
    """Root of ``f`` in [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.

    With ``xtol=0`` bisection runs until the bracket stops shrinking in
    floating point.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi) or hi - lo <= xtol:
            break
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def central_difference(f, x: float, h: float | None = None) -> float:
    if h is None:
        h = 1e-5 * max(abs(x), 1.0)
    return (f(x + h) - f(x - h)) / (2.0 * h)

