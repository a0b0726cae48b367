"""Constructive mappings between hyperquadrics.

The affine hyperquadric Q(a, b) is the set where the first a squared
moduli minus the last b sum to 1; HQ(a, b) is its homogeneous version
summing to 0.  A homogeneous real polynomial p(x) with A positive and B
negative coefficients that vanishes whenever s = x_1 + ... + x_a -
x_{a+1} - ... - x_{a+b} does (equivalently, s divides p) is called
admissible, and substituting x_k = |z_k|^2 turns it into a monomial
mapping HQ(a, b) -> HQ(A, B).

This module implements the admissibility test, the eight lattice moves
that walk an admissible polynomial's signature around the (A, B)
lattice, a breadth-first search assembling mappings from those moves,
exact divisibility verification of any candidate map, tensor
extensions, and dehomogenization to rational maps between affine
hyperquadrics.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Dict, List, Optional, Tuple

from .combinat import stability_region
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NoNegativeComponent,
    NoPivotMonomial,
    NotAdmissible,
    NotReached,
    NotVanishing,
)
from .forms import HermitianForm, SignaturePair, WeightedHoloMap, decompose, norm_difference
from .multiindex import MultiIndex, grlex_key, total_degree, unit, zero_index
from .polys import Poly, poly_add, poly_add_inplace, poly_mul, poly_shift
from .scalars import GR_ONE, gr

RealTerms = Dict[MultiIndex, Fraction]

_F1 = Fraction(1)


@dataclass(frozen=True)
class SignedRealPoly:
    """Homogeneous real polynomial in x_1..x_{a+b} with signed terms.

    The split (a, b) names the source hyperquadric; the terms map
    exponent tuples to nonzero rationals.
    """

    a: int
    b: int
    terms: RealTerms

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("source split needs a >= 1 and b >= 1")
        n = self.a + self.b
        cleaned: RealTerms = {}
        degrees = set()
        for alpha, c in self.terms.items():
            if len(alpha) != n:
                raise DimensionMismatch(f"exponent tuple {alpha} has length {len(alpha)}, expected {n}")
            if any(e < 0 for e in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            v = Fraction(c)
            if v:
                cleaned[tuple(alpha)] = v
                degrees.add(total_degree(alpha))
        if len(degrees) > 1:
            raise ValueError(f"polynomial is not homogeneous: degrees {sorted(degrees)}")
        object.__setattr__(self, "terms", cleaned)

    @property
    def n(self) -> int:
        return self.a + self.b

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return 0
        return total_degree(next(iter(self.terms)))

    def signature(self) -> SignaturePair:
        pos = sum(1 for c in self.terms.values() if c > 0)
        return SignaturePair(pos, len(self.terms) - pos)


def _s_terms(a: int, b: int) -> RealTerms:
    n = a + b
    return {unit(n, j): (_F1 if j < a else -_F1) for j in range(n)}


def s_poly(a: int, b: int) -> SignedRealPoly:
    """The defining linear form x_1 + .. + x_a - x_{a+1} - .. - x_{a+b}."""
    return SignedRealPoly(a, b, _s_terms(a, b))


# Powers of the substitution x_1 = -(x_2+..+x_a) + (x_{a+1}+..+x_n),
# cached per source split; the admissibility test reuses them heavily.
_ELIM_POWERS: Dict[Tuple[int, int], List[Poly]] = {}


def _elim_power(a: int, b: int, e: int) -> Poly:
    n = a + b
    powers = _ELIM_POWERS.setdefault((a, b), [{zero_index(n): _F1}])
    if len(powers) <= e:
        base: Poly = {unit(n, j): (-_F1 if j < a else _F1) for j in range(1, n)}
        while len(powers) <= e:
            powers.append(poly_mul(powers[-1], base))
    return powers[e]


def is_admissible(p: SignedRealPoly) -> Tuple[bool, SignaturePair]:
    """Whether s divides p, plus the signature (positive, negative counts).

    Tested exactly by solving s = 0 for x_1, substituting, and checking
    that the result is identically zero.
    """
    acc: Poly = {}
    for alpha, c in p.terms.items():
        rest = (0,) + alpha[1:]
        poly_add_inplace(acc, poly_shift(_elim_power(p.a, p.b, alpha[0]), rest), c)
    return (not acc, p.signature())


def _require_admissible(p: SignedRealPoly, who: str) -> SignaturePair:
    ok, sig = is_admissible(p)
    if not ok:
        raise NotAdmissible(f"{who} requires an admissible polynomial")
    if p.is_zero():
        raise NotAdmissible(f"{who} requires a nonzero polynomial")
    return sig


def grow(p: SignedRealPoly, mirror: bool = False, verify: bool = True) -> SignedRealPoly:
    """The degree-raising move p -> x_1^{k-m} p + x_2^{k-1} s.

    k is minimal with the two supports disjoint, so the signature shifts
    by exactly (a, b); with mirror=True the variable roles swap and -s
    is used instead, shifting by (b, a).  verify=False skips the input
    admissibility check for callers that already know it holds.
    """
    if verify:
        sig = _require_admissible(p, "grow")
    else:
        sig = p.signature()
    a, b, n = p.a, p.b, p.n
    m = p.degree()
    added = _s_terms(a, b)
    if mirror:
        added = {al: -c for al, c in added.items()}
        head_var, tail_var = 1, 0
    else:
        head_var, tail_var = 0, 1
    k = m + 1
    while True:
        head = poly_shift(p.terms, tuple((k - m) if j == head_var else 0 for j in range(n)))
        tail = poly_shift(added, tuple((k - 1) if j == tail_var else 0 for j in range(n)))
        if not (head.keys() & tail.keys()):
            break
        k += 1
    head.update(tail)
    out = SignedRealPoly(a, b, head)
    shift = (a, b) if not mirror else (b, a)
    assert out.signature() == (sig.pos + shift[0], sig.neg + shift[1])
    return out


def _routes(a: int, b: int) -> Dict[Tuple[int, int], Tuple]:
    """The eight signature shifts and how to realize each one.

    When a == b some shifts coincide; the first listed construction
    wins, which keeps the move set deterministic.
    """
    entries = [
        ((a, b), ("grow", False)),
        ((b, a), ("grow", True)),
        ((a - 1, b - 1), ("tilde", 1, "last")),
        ((b - 1, a - 1), ("tilde", -1, "last")),
        ((a, b - 1), ("hat", 1, "last")),
        ((b - 1, a), ("hat", -1, "last")),
        ((b, a - 1), ("hat", 1, "first")),
        ((a - 1, b), ("hat", -1, "first")),
    ]
    routes: Dict[Tuple[int, int], Tuple] = {}
    for shift, route in entries:
        routes.setdefault(shift, route)
    return routes


def _sigma_adjusted(a: int, b: int, elim: str) -> Poly:
    # s + x_e for elimination of the last variable, -s + x_1 for the first;
    # either way the eliminated variable drops out of the linear form.
    n = a + b
    out: Poly = {}
    if elim == "last":
        for j in range(n - 1):
            out[unit(n, j)] = _F1 if j < a else -_F1
    else:
        for j in range(1, n):
            out[unit(n, j)] = -_F1 if j < a else _F1
    return out


def corner_move(p: SignedRealPoly, shift: Tuple[int, int], verify: bool = True) -> SignedRealPoly:
    """Apply the move realizing the given signature shift.

    shift must be one of the eight lattice vectors for the source split
    (a, b) of p.  Corner shifts need b >= 2; any common factor of the
    elimination variable is divided out first; the pivot monomial is the
    grlex-first term of the required sign free of the elimination
    variable.
    """
    shift = (int(shift[0]), int(shift[1]))
    a, b, n = p.a, p.b, p.n
    route = _routes(a, b).get(shift)
    if route is None:
        raise ValueError(f"shift {shift} is not one of the eight moves for source ({a}, {b})")
    if route[0] == "grow":
        return grow(p, route[1], verify=verify)
    if b < 2:
        raise ValueError("corner moves need b >= 2")
    if verify:
        sig = _require_admissible(p, "corner_move")
    else:
        sig = p.signature()
    kind, pivot_sign, elim = route
    e = n - 1 if elim == "last" else 0

    terms = dict(p.terms)
    while terms and all(al[e] >= 1 for al in terms):
        terms = {al[:e] + (al[e] - 1,) + al[e + 1:]: c for al, c in terms.items()}

    want_positive = pivot_sign > 0
    candidates = [al for al, c in terms.items() if al[e] == 0 and (c > 0) == want_positive]
    if not candidates:
        word = "positive" if want_positive else "negative"
        raise NoPivotMonomial(
            f"no {word} monomial free of x{e + 1} is available for shift {shift}"
        )
    # earliest candidate in the graded lexicographic order used package-wide
    piv = min(candidates, key=grlex_key)
    c0 = terms[piv]

    sigma = _sigma_adjusted(a, b, elim)
    e_unit = unit(n, e)
    if kind == "tilde":
        remainder = dict(terms)
        del remainder[piv]
        out_terms = poly_add(poly_mul({piv: c0}, sigma), poly_shift(remainder, e_unit))
    else:
        remainder = dict(terms)
        remainder[piv] = c0 / 2
        out_terms = poly_add(poly_mul({piv: c0 / 2}, sigma), poly_shift(remainder, e_unit))

    out = SignedRealPoly(a, b, out_terms)
    assert out.signature() == (sig.pos + shift[0], sig.neg + shift[1])
    if verify:
        ok, _ = is_admissible(out)
        if not ok:
            raise NotAdmissible("corner move produced a non-admissible polynomial")
    return out


@dataclass(frozen=True)
class QuadricMap:
    """A signed, weighted holomorphic map between hyperquadrics.

    Source is HQ(a, b) when homogeneous, Q(a, b) otherwise.  Components
    carry (sign, weight, polynomial); the represented map lists each
    component scaled by the square root of its weight, so weights stay
    rational and printing renders sqrt(w) symbolically.  A rational map
    stores its denominator as the index of one negative component; the
    target signature then drops that component from the negative count.
    """

    a: int
    b: int
    homogeneous: bool
    components: WeightedHoloMap
    denominator: Optional[int] = None

    def __post_init__(self):
        if self.a < 1 or self.b < 0:
            raise ValueError("source split needs a >= 1 and b >= 0")
        if self.components.n != self.a + self.b:
            raise DimensionMismatch(
                f"components use {self.components.n} variables, source split needs {self.a + self.b}"
            )
        for sign, weight, poly in self.components.components:
            if sign not in (1, -1):
                raise ValueError("component signs must be +1 or -1")
            if weight <= 0:
                raise ValueError("component weights must be positive")
            if not poly:
                raise ValueError("components must be nonzero polynomials")
        if self.denominator is not None:
            comps = self.components.components
            if not 0 <= self.denominator < len(comps):
                raise IndexOutOfRange(f"denominator index {self.denominator} out of range")
            if comps[self.denominator][0] > 0:
                raise ValueError("the denominator must be a negative component")

    @property
    def n(self) -> int:
        return self.components.n

    def source(self) -> SignaturePair:
        return SignaturePair(self.a, self.b)

    def sign_counts(self) -> SignaturePair:
        return self.components.signature()

    def target(self) -> SignaturePair:
        pos, neg = self.sign_counts()
        if self.denominator is not None:
            neg -= 1
        return SignaturePair(pos, neg)


def identity_map(a: int, b: int) -> QuadricMap:
    """The identity on Q(a, b) as a QuadricMap."""
    n = a + b
    comps = tuple(
        (1 if j < a else -1, _F1, {unit(n, j): GR_ONE}) for j in range(n)
    )
    return QuadricMap(a, b, False, WeightedHoloMap(n, comps), None)


def _vanishes_on_quadric(form: HermitianForm, a: int, b: int, affine: bool) -> bool:
    """Exact divisibility of the complexified form by the defining polynomial.

    The complexification replaces zbar_j by an independent w_j; the
    divisor is sum_{j<=a} z_j w_j - sum_{j>a} z_j w_j - (1 if affine).
    Since the divisor is linear in w_1 we solve for z_1 w_1, substitute,
    clear the z_1 denominator, and test for the zero polynomial.
    """
    n = a + b
    if form.n != n:
        raise DimensionMismatch(f"form has {form.n} variables, quadric has {n}")
    if not form.entries:
        return True
    top = max(beta[0] for _, beta in form.entries)
    nv = n + (n - 1)

    # z_1 w_1 = (1 if affine) - sum_{2<=j<=a} z_j w_j + sum_{j>a} z_j w_j
    solved: Poly = {}
    if affine:
        solved[zero_index(nv)] = GR_ONE
    for j in range(1, n):
        mono = [0] * nv
        mono[j] = 1
        mono[n + j - 1] = 1
        solved[tuple(mono)] = gr(-1) if j < a else GR_ONE

    powers: List[Poly] = [{zero_index(nv): GR_ONE}]
    while len(powers) <= top:
        powers.append(poly_mul(powers[-1], solved))

    acc: Poly = {}
    for (alpha, beta), c in form.entries.items():
        b1 = beta[0]
        mono = (alpha[0] + top - b1,) + alpha[1:] + beta[1:]
        poly_add_inplace(acc, poly_shift(powers[b1], mono), c)
    return not acc


def verify_map(m: QuadricMap) -> bool:
    """Whether the map exactly takes its source quadric to its target.

    Forms the signed norm difference of the components (minus 1 for a
    polynomial map between affine quadrics) and checks divisibility by
    the source defining polynomial.  False is a verdict, not an error.
    """
    subtract_one = (not m.homogeneous) and m.denominator is None
    diff = norm_difference(m.components, subtract_one)
    return _vanishes_on_quadric(diff, m.a, m.b, affine=not m.homogeneous)


def _map_from_admissible(p: SignedRealPoly, verify: bool = True) -> QuadricMap:
    """Monomial map obtained from an admissible polynomial via x_k = |z_k|^2."""
    if verify:
        _require_admissible(p, "map construction")
    pos = sorted((al for al, c in p.terms.items() if c > 0), key=grlex_key)
    neg = sorted((al for al, c in p.terms.items() if c < 0), key=grlex_key)
    comps = tuple(
        [(1, p.terms[al], {al: GR_ONE}) for al in pos]
        + [(-1, -p.terms[al], {al: GR_ONE}) for al in neg]
    )
    out = QuadricMap(p.a, p.b, True, WeightedHoloMap(p.n, comps), None)
    if verify and not verify_map(out):
        raise NotVanishing("constructed map failed verification")
    return out


def _search(
    a: int,
    b: int,
    box_a: int,
    box_b: int,
    budget: int,
    goal: Optional[Tuple[int, int]] = None,
) -> Tuple[Dict[Tuple[int, int], SignedRealPoly], bool]:
    """Breadth-first walk of the signature lattice from the two seeds.

    Expands lowest degree first (then fewest terms) and memoizes one
    witness polynomial per signature inside the box.  Every move shifts
    both signature coordinates up by at least one, so pruning at the box
    is exact.  Returns the witnesses and whether the budget ran out.
    """
    routes = _routes(a, b)
    seed = s_poly(a, b)
    mirrored = SignedRealPoly(a, b, {al: -c for al, c in seed.terms.items()})
    witnesses: Dict[Tuple[int, int], SignedRealPoly] = {}
    tick = count()
    heap: List[Tuple[int, int, int, Tuple[int, int], SignedRealPoly]] = []

    def push(sig: Tuple[int, int], poly: SignedRealPoly) -> None:
        if sig[0] <= box_a and sig[1] <= box_b and sig not in witnesses:
            heapq.heappush(heap, (poly.degree(), len(poly.terms), next(tick), sig, poly))

    push((a, b), seed)
    push((b, a), mirrored)
    expansions = 0
    while heap:
        _, _, _, sig, poly = heapq.heappop(heap)
        if sig in witnesses:
            continue
        witnesses[sig] = poly
        if goal is not None and sig == goal:
            return witnesses, False
        if expansions >= budget:
            return witnesses, True
        expansions += 1
        for shift, route in routes.items():
            nsig = (sig[0] + shift[0], sig[1] + shift[1])
            if nsig[0] > box_a or nsig[1] > box_b or nsig in witnesses:
                continue
            if route[0] == "grow":
                child = grow(poly, route[1], verify=False)
            else:
                child = corner_move(poly, shift, verify=False)
            push(nsig, child)
    return witnesses, False


def reachable_signatures(
    a: int, b: int, size: int, budget: int = 10**5
) -> Tuple[Dict[Tuple[int, int], SignedRealPoly], bool]:
    """Witnesses for every reachable signature with A, B <= size."""
    if not a >= b >= 2:
        raise ValueError("requires a >= b >= 2")
    if size < 2:
        raise ValueError("size must be at least 2")
    return _search(a, b, size, size, budget)


def construct_map(a: int, b: int, A: int, B: int, search_budget: int = 10**5) -> QuadricMap:
    """Search for a homogeneous monomial map HQ(a, b) -> HQ(A, B).

    Whenever (A, B) satisfies the stability sector inequalities the
    search succeeds; outside the sector it may still succeed for small
    targets reachable by the moves.
    """
    if not a >= b >= 2:
        raise ValueError("requires a >= b >= 2")
    if A < 2 or B < 2:
        raise ValueError("requires A >= 2 and B >= 2")
    if search_budget < 1:
        raise ValueError("search budget must be positive")
    witnesses, hit_budget = _search(a, b, A, B, search_budget, goal=(A, B))
    if (A, B) not in witnesses:
        if hit_budget:
            raise NotReached(
                f"search budget {search_budget} exhausted before reaching ({A}, {B}); "
                "the target may still be reachable with a larger --budget"
            )
        if stability_region(a, b, A, B):
            raise NotReached(
                f"({A}, {B}) satisfies the sector inequalities but the move search "
                "exhausted the box without reaching it"
            )
        raise NotReached(
            f"({A}, {B}) is outside the constructive sector for source ({a}, {b}) "
            "and the move search exhausted the box without reaching it"
        )
    return _map_from_admissible(witnesses[(A, B)], verify=True)


def tensor_extend(m: QuadricMap, component_index: int) -> QuadricMap:
    """Replace one component f by (f z_1, ..., f z_n) with signs rebalanced.

    On the source quadric |f|^2 equals |f|^2 (sum_{j<=a} |z_j|^2 -
    sum_{j>a} |z_j|^2), so tensoring a positive component adds the block
    split (a-1, b) to the target and tensoring a negative one adds
    (b, a-1).  The output is re-verified.
    """
    comps = m.components.components
    if not 0 <= component_index < len(comps):
        raise IndexOutOfRange(
            f"component index {component_index} out of range [0, {len(comps) - 1}]"
        )
    if m.denominator == component_index:
        raise IndexOutOfRange("the denominator component cannot be tensored")
    if not verify_map(m):
        raise NotVanishing("input map does not verify; refusing to tensor")
    n, a = m.n, m.a
    tagged: List[Tuple[int, Fraction, Poly, bool]] = []
    for idx, (sign, weight, poly) in enumerate(comps):
        if idx == component_index:
            for j in range(n):
                new_sign = sign if j < a else -sign
                tagged.append((new_sign, weight, poly_shift(poly, unit(n, j)), False))
        else:
            tagged.append((sign, weight, poly, idx == m.denominator))
    ordered = [t for t in tagged if t[0] > 0] + [t for t in tagged if t[0] < 0]
    denom = None
    for pos, t in enumerate(ordered):
        if t[3]:
            denom = pos
            break
    out = QuadricMap(
        m.a,
        m.b,
        m.homogeneous,
        WeightedHoloMap(n, tuple((s, w, p) for s, w, p, _ in ordered)),
        denom,
    )
    if not verify_map(out):
        raise NotVanishing("tensor extension failed verification")
    return out


def dehomogenize(p: SignedRealPoly) -> QuadricMap:
    """Rational map Q(a, b-1) -> Q(A, B-1) from an admissible polynomial.

    Builds the monomial map of p, checks it in homogeneous form, sets
    the last variable to 1, and designates the negative component with
    the smallest leading monomial as the denominator (a constant
    denominator, when present, makes the result a polynomial map).
    """
    sig = _require_admissible(p, "dehomogenize")
    if sig.neg == 0:
        raise NoNegativeComponent("the polynomial has no negative terms to divide by")
    homogeneous = _map_from_admissible(p, verify=False)
    if not verify_map(homogeneous):
        raise NotVanishing("homogeneous verification failed")
    pos = sorted((al[:-1] for al, c in p.terms.items() if c > 0), key=grlex_key)
    neg = sorted((al[:-1] for al, c in p.terms.items() if c < 0), key=grlex_key)
    weights = {al[:-1]: abs(c) for al, c in p.terms.items()}
    n_new = p.n - 1
    comps = tuple(
        [(1, weights[al], {al: GR_ONE}) for al in pos]
        + [(-1, weights[al], {al: GR_ONE}) for al in neg]
    )
    out = QuadricMap(
        p.a,
        p.b - 1,
        False,
        WeightedHoloMap(n_new, comps),
        len(pos),
    )
    if not verify_map(out):
        raise NotVanishing("dehomogenized map failed verification")
    return out


def map_from_form(form: HermitianForm, a: int, b: int) -> QuadricMap:
    """Rational map Q(a, b) -> Q(A, B-1) from a form vanishing on Q(a, b).

    Decomposes the form into signed weighted components; the negative
    component with the smallest leading monomial becomes the
    denominator.
    """
    if a < 1 or b < 0:
        raise ValueError("source split needs a >= 1 and b >= 0")
    if form.n != a + b:
        raise DimensionMismatch(f"form has {form.n} variables, quadric has {a + b}")
    if not _vanishes_on_quadric(form, a, b, affine=True):
        raise NotVanishing(f"the form does not vanish on Q({a}, {b})")
    holo = decompose(form)

    def lead_key(comp):
        return min(grlex_key(mono) for mono in comp[2])

    pos = sorted((c for c in holo.components if c[0] > 0), key=lead_key)
    neg = sorted((c for c in holo.components if c[0] < 0), key=lead_key)
    if not neg:
        raise NoNegativeComponent("the decomposition has no negative component")
    return QuadricMap(
        a,
        b,
        False,
        WeightedHoloMap(form.n, tuple(pos + neg)),
        len(pos),
    )
