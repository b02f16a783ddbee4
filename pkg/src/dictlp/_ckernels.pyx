# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernels.

Drop-in replacement for ``dictlp._pykernels``: same functions, same exact
results. Arithmetic runs on raw ``(numerator, denominator)`` integer pairs
instead of ``fractions.Fraction`` objects, which removes per-operation
object-dispatch overhead while keeping arbitrary precision. Every value is
kept canonical (reduced, positive denominator), so round-tripping through
``Fraction`` at the boundary is loss-free.
"""

from fractions import Fraction
from math import gcd


cdef inline tuple _make(object n, object d):
    # d != 0 guaranteed by callers
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


cdef inline tuple _mul(tuple a, tuple b):
    return _make(a[0] * b[0], a[1] * b[1])


cdef inline tuple _sub_mul(tuple x, tuple f, tuple y):
    # x - f*y with a single normalization
    cdef object n = f[0] * y[0]
    cdef object d = f[1] * y[1]
    return _make(x[0] * d - n * x[1], x[1] * d)


cdef inline tuple _neg_mul(tuple f, tuple y):
    return _make(-(f[0] * y[0]), f[1] * y[1])


cdef inline list _pairs_vec(object vec):
    return [(f.numerator, f.denominator) for f in vec]


cdef inline list _frac_vec(list pairs):
    cdef tuple t
    return [Fraction(t[0], t[1]) for t in pairs]


def rref(rows):
    """Reduced row echelon form; mirrors ``_pykernels.rref``."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t ncols = len(rows[0]) if nrows else 0
    cdef list m = [_pairs_vec(row) for row in rows]
    cdef list pivot_cols = []
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef list rowr, rowi
    cdef tuple inv, f, pivot
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<tuple>(<list>m[i])[c])[0] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        rowr = <list>m[r]
        pivot = <tuple>rowr[c]
        inv = _make(pivot[1], pivot[0])
        for j in range(ncols):
            rowr[j] = _mul(<tuple>rowr[j], inv)
        for i in range(nrows):
            if i == r:
                continue
            rowi = <list>m[i]
            f = <tuple>rowi[c]
            if f[0] != 0:
                for j in range(ncols):
                    rowi[j] = _sub_mul(<tuple>rowi[j], f, <tuple>rowr[j])
        pivot_cols.append(c)
        r += 1
    return [_frac_vec(<list>row) for row in m], r, pivot_cols


def pivot_update(p, Q, q, z, Py_ssize_t r, Py_ssize_t s):
    """One dictionary pivot by row substitution; mirrors ``_pykernels``."""
    cdef Py_ssize_t mrows = len(p)
    cdef Py_ssize_t n = len(q)
    cdef list pp = _pairs_vec(p)
    cdef list qq = _pairs_vec(q)
    cdef list QQ = [_pairs_vec(row) for row in Q]
    cdef tuple zz = (z.numerator, z.denominator)
    cdef list row, lead, new_row
    cdef tuple inv, f, g, p_r
    cdef Py_ssize_t i, j

    row = <list>QQ[r]
    pivot = <tuple>row[s]
    inv = _make(pivot[1], pivot[0])
    lead = [_mul(<tuple>row[j], inv) for j in range(n)]
    lead[s] = inv
    p_r = _mul(<tuple>pp[r], inv)

    cdef list new_p = []
    cdef list new_Q = []
    for i in range(mrows):
        if i == r:
            new_p.append(p_r)
            new_Q.append(lead)
            continue
        row = <list>QQ[i]
        f = <tuple>row[s]
        if f[0] == 0:
            new_p.append(pp[i])
            new_Q.append(row)
            continue
        new_row = [_sub_mul(<tuple>row[j], f, <tuple>lead[j]) for j in range(n)]
        new_row[s] = _neg_mul(f, inv)
        new_p.append(_sub_mul(<tuple>pp[i], f, p_r))
        new_Q.append(new_row)

    g = <tuple>qq[s]
    cdef list new_q
    cdef tuple new_z
    if g[0] == 0:
        new_q = qq
        new_z = zz
    else:
        new_q = [_sub_mul(<tuple>qq[j], g, <tuple>lead[j]) for j in range(n)]
        new_q[s] = _neg_mul(g, inv)
        new_z = _sub_mul(zz, _make(-g[0], g[1]), p_r)

    return (
        _frac_vec(new_p),
        [_frac_vec(<list>rw) for rw in new_Q],
        _frac_vec(new_q),
        Fraction(new_z[0], new_z[1]),
    )
