"""Exact linear algebra over the Gaussian rationals.

Rank uses fraction-free Bareiss elimination on Gaussian integers after
clearing denominators row by row, so intermediate entries stay integral
and every division is exact.  Inertia and holomorphic decompositions
come from a symmetric-pivoted block LDL* elimination in which 1x1 real
pivots contribute their sign and a 2x2 block [[0,c],[conj(c),0]] is
split into one positive and one negative rank-one piece with rational
weights; Sylvester's law of inertia makes the sign counts independent
of pivot order.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

from .scalars import GR_ONE, GR_ZERO, GaussianRational

Matrix = List[List[GaussianRational]]

# Gaussian integers as plain int pairs (re, im) for the Bareiss kernel.
_GIPair = Tuple[int, int]


def _gi_mul(x: _GIPair, y: _GIPair) -> _GIPair:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _gi_sub(x: _GIPair, y: _GIPair) -> _GIPair:
    return (x[0] - y[0], x[1] - y[1])


def _gi_div_exact(x: _GIPair, y: _GIPair) -> _GIPair:
    """x / y in Z[i]; the caller guarantees divisibility."""
    c, d = y
    n = c * c + d * d
    num = _gi_mul(x, (c, -d))
    qr, rr = divmod(num[0], n)
    qi, ri = divmod(num[1], n)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian-integer division in Bareiss step")
    return (qr, qi)


def _clear_row(row: Sequence[object]) -> List[_GIPair]:
    # Entries may be GaussianRational, Fraction, or plain int; integer rows
    # pass through without any Fraction arithmetic.
    pairs = []
    denom = 1
    for x in row:
        if isinstance(x, GaussianRational):
            re, im = x.re, x.im
        else:
            re, im = x, 0
        pairs.append((re, im))
        if isinstance(re, Fraction):
            denom = lcm(denom, re.denominator)
        if isinstance(im, Fraction):
            denom = lcm(denom, im.denominator)
    return [(int(re * denom), int(im * denom)) for re, im in pairs]


def rank(rows: Sequence[Sequence[object]]) -> int:
    """Exact rank of a matrix with GaussianRational, Fraction, or int entries."""
    m = [_clear_row(r) for r in rows if any(x for x in r)]
    if not m:
        return 0
    n_rows = len(m)
    n_cols = len(m[0])
    rk = 0
    r = 0
    prev: _GIPair = (1, 0)
    for c in range(n_cols):
        piv = None
        for i in range(r, n_rows):
            if m[i][c] != (0, 0):
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            mic = m[i][c]
            row_i = m[i]
            row_r = m[r]
            for j in range(c + 1, n_cols):
                num = _gi_sub(_gi_mul(p, row_i[j]), _gi_mul(mic, row_r[j]))
                row_i[j] = _gi_div_exact(num, prev)
            row_i[c] = (0, 0)
        prev = p
        r += 1
        rk += 1
        if r == n_rows:
            break
    return rk


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("matmul: inner dimensions differ")
    out: Matrix = []
    n_inner = len(b)
    n_cols = len(b[0]) if b else 0
    for row in a:
        new = []
        for j in range(n_cols):
            s = GR_ZERO
            for k in range(n_inner):
                if row[k]:
                    s = s + row[k] * b[k][j]
            new.append(s)
        out.append(new)
    return out


def identity(n: int) -> Matrix:
    return [[GR_ONE if i == j else GR_ZERO for j in range(n)] for i in range(n)]


def invert(mat: Matrix) -> Matrix:
    """Exact inverse of a square GaussianRational matrix."""
    n = len(mat)
    x = [row[:] for row in mat]
    y = identity(n)
    for i in range(n):
        piv = None
        for j in range(i, n):
            if x[j][i]:
                piv = j
                break
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != i:
            x[i], x[piv] = x[piv], x[i]
            y[i], y[piv] = y[piv], y[i]
        d = x[i][i]
        x[i] = [v / d for v in x[i]]
        y[i] = [v / d for v in y[i]]
        for j in range(n):
            if j != i and x[j][i]:
                f = x[j][i]
                x[j] = [vj - f * vi for vj, vi in zip(x[j], x[i])]
                y[j] = [vj - f * vi for vj, vi in zip(y[j], y[i])]
    return y


# One holomorphic component of a Hermitian matrix: the matrix equals
# sum of sign * weight * v v* over the returned triples.
Component = Tuple[int, Fraction, List[GaussianRational]]


def ldl_components(mat: Matrix) -> List[Component]:
    """Split a Hermitian matrix into signed weighted rank-one pieces.

    Pivot policy: take the nonzero diagonal pivot of largest magnitude
    (ties: smallest index); fall back to a 2x2 off-diagonal block only
    when every remaining diagonal entry is zero.
    """
    n = len(mat)
    m = [row[:] for row in mat]
    active = list(range(n))
    comps: List[Component] = []
    while active:
        best = None
        best_mag = None
        for i in active:
            d = m[i][i].re
            if d:
                mag = abs(d)
                if best_mag is None or mag > best_mag:
                    best, best_mag = i, mag
        if best is not None:
            i = best
            d = m[i][i].re
            d_gr = GaussianRational(d)
            vec = [GR_ZERO] * n
            col = {}
            for k in active:
                col[k] = m[k][i]
                vec[k] = m[k][i] / d_gr
            comps.append((1 if d > 0 else -1, abs(d), vec))
            active.remove(i)
            for j in active:
                cji = col[j]
                if not cji:
                    continue
                f = cji / d_gr
                row_j = m[j]
                row_i = m[i]
                for k in active:
                    if row_i[k]:
                        row_j[k] = row_j[k] - f * row_i[k]
            continue
        # every remaining diagonal is zero: look for a 2x2 block
        pair = None
        for ip in range(len(active)):
            for jp in range(ip + 1, len(active)):
                if m[active[ip]][active[jp]]:
                    pair = (active[ip], active[jp])
                    break
            if pair:
                break
        if pair is None:
            break  # remaining block is identically zero
        i, j = pair
        c = m[i][j]
        gamma = c / GaussianRational(c.norm_sq())
        gbar = gamma.conjugate()
        p_col = {k: m[k][i] for k in active}
        q_col = {k: m[k][j] for k in active}
        vec_p = [GR_ZERO] * n
        vec_m = [GR_ZERO] * n
        for k in active:
            gp = gamma * p_col[k]
            vec_p[k] = q_col[k] + gp
            vec_m[k] = q_col[k] - gp
        comps.append((1, Fraction(1, 2), vec_p))
        comps.append((-1, Fraction(1, 2), vec_m))
        active.remove(i)
        active.remove(j)
        for k in active:
            pk = p_col[k]
            qk = q_col[k]
            if not pk and not qk:
                continue
            row_k = m[k]
            for l in active:
                row_k[l] = (
                    row_k[l]
                    - gamma * pk * q_col[l].conjugate()
                    - gbar * qk * p_col[l].conjugate()
                )
    return comps


def inertia(mat: Matrix) -> Tuple[int, int]:
    """(positive, negative) eigenvalue counts of a Hermitian matrix."""
    pos = neg = 0
    for sign, _, _ in ldl_components(mat):
        if sign > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg
