"""Restriction of forms to linear and affine subspaces.

The degree-d Veronese map lists all degree-d monomials; an embedding
E of a subspace induces a matrix T acting on monomial coefficients,
with (Ew + t)^alpha = sum over gamma of T[alpha, gamma] w^gamma.
Restricting a Hermitian form is the sandwich T* C T, and generic or
maximal restriction ranks are estimated by exact evaluation at random
rational parameters.  Randomized answers can only undershoot the true
generic rank, and the per-trial failure probability has a computable
Schwartz-Zippel bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from random import Random
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DimensionMismatch
from .forms import HermitianForm, _PowerCache, _linear_substitutions, form_rank
from .linalg import identity, invert, matmul, rank as matrix_rank
from .multiindex import MultiIndex, monomials_of_degree, monomials_up_to, unit
from .polys import Poly
from .scalars import GR_ZERO, GaussianRational, gr


@dataclass(frozen=True)
class AffineEmbedding:
    """The map w -> Ew + t from subspace coordinates into ambient ones.

    linear has one row per ambient variable and one column per subspace
    variable, and must have full column rank.
    """

    linear: Tuple[Tuple[GaussianRational, ...], ...]
    translation: Tuple[GaussianRational, ...]

    @property
    def n_ambient(self) -> int:
        return len(self.linear)

    @property
    def n_sub(self) -> int:
        return len(self.linear[0]) if self.linear else 0

    def is_linear(self) -> bool:
        return not any(self.translation)


def embedding(linear: Sequence[Sequence[object]], translation: Optional[Sequence[object]] = None) -> AffineEmbedding:
    """Validate and coerce an embedding; rejects rank-deficient matrices."""
    rows = [tuple(GaussianRational.coerce(x) for x in row) for row in linear]
    if not rows:
        raise ValueError("embedding needs at least one ambient variable")
    n_sub = len(rows[0])
    if any(len(r) != n_sub for r in rows):
        raise ValueError("embedding rows have inconsistent lengths")
    if n_sub < 1:
        raise ValueError("embedding needs at least one subspace variable")
    if translation is None:
        trans = tuple(GR_ZERO for _ in rows)
    else:
        if len(translation) != len(rows):
            raise DimensionMismatch(
                f"translation has {len(translation)} entries, embedding has {len(rows)} rows"
            )
        trans = tuple(GaussianRational.coerce(x) for x in translation)
    if matrix_rank(rows) != n_sub:
        raise ValueError("embedding matrix must have full column rank")
    return AffineEmbedding(tuple(rows), trans)


def veronese_dim(n_vars: int, d: int) -> int:
    """Number of degree-d monomials in n_vars variables."""
    if n_vars < 1:
        raise ValueError("n_vars must be positive")
    if d < 0:
        raise ValueError("d must be nonnegative")
    return comb(n_vars - 1 + d, d)


@dataclass(frozen=True)
class RestrictionMatrix:
    """Coefficient action of an embedding on monomials.

    rows index ambient monomials, cols subspace monomials, and
    entries[i][j] is the coefficient of w^cols[j] in (Ew + t)^rows[i].
    Linear embeddings act degree by degree, so only degree d appears;
    affine ones mix degrees and carry the whole block up to d.
    """

    d: int
    rows: Tuple[MultiIndex, ...]
    cols: Tuple[MultiIndex, ...]
    entries: Tuple[Tuple[GaussianRational, ...], ...]


def _expansions(E: AffineEmbedding, rows: Sequence[MultiIndex]) -> Dict[MultiIndex, Poly]:
    subs = _linear_substitutions(E.n_ambient, E.n_sub, E.linear, E.translation)
    cache = _PowerCache(subs, E.n_sub)
    return {alpha: cache.monomial(alpha) for alpha in rows}


def restriction_matrix(E: AffineEmbedding, d: int) -> RestrictionMatrix:
    """The matrix T of the embedding acting on degree-d coefficients."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    if E.is_linear():
        rows = list(monomials_of_degree(E.n_ambient, d))
        cols = list(monomials_of_degree(E.n_sub, d))
    else:
        rows = monomials_up_to(E.n_ambient, d)
        cols = monomials_up_to(E.n_sub, d)
    table = _expansions(E, rows)
    entries = tuple(
        tuple(table[alpha].get(gamma, GR_ZERO) for gamma in cols) for alpha in rows
    )
    return RestrictionMatrix(d, tuple(rows), tuple(cols), entries)


def restrict_form(form: HermitianForm, E: AffineEmbedding) -> HermitianForm:
    """The restricted form T* C T; its rank is the rank of r composed with E."""
    if form.n != E.n_ambient:
        raise DimensionMismatch(
            f"form has {form.n} variables, embedding has {E.n_ambient} ambient rows"
        )
    if form.is_zero():
        return HermitianForm(E.n_sub, {})
    table = _expansions(E, form.support())
    acc: Dict[Tuple[MultiIndex, MultiIndex], GaussianRational] = {}
    for (alpha, beta), c in form.entries.items():
        ta = table[alpha]
        tb = table[beta]
        for gamma, u in ta.items():
            cu = c * u
            for delta, v in tb.items():
                key = (gamma, delta)
                w = acc.get(key, GR_ZERO) + cu * v.conjugate()
                if w:
                    acc[key] = w
                else:
                    acc.pop(key, None)
    return HermitianForm(E.n_sub, acc)


def _random_fraction(rng: Random, bound: int) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def _random_scalar(rng: Random, bound: int) -> GaussianRational:
    return gr(_random_fraction(rng, bound), _random_fraction(rng, bound))


def _generic_embedding(rng: Random, n_ambient: int, sub_dim: int, bound: int) -> AffineEmbedding:
    while True:
        rows = [[_random_scalar(rng, bound) for _ in range(sub_dim)] for _ in range(n_ambient)]
        try:
            return embedding(rows)
        except ValueError:
            continue  # rank-deficient draw; vanishingly rare


def generic_restriction_rank(
    form: HermitianForm,
    sub_dim: int,
    trials: int = 3,
    seed: int = 0,
    coeff_bound: int = 10**6,
) -> int:
    """Rank of the restriction to a generic linear subspace of dimension sub_dim.

    Takes the maximum of `trials` exact ranks at independent random
    rational specializations; specialization can only lose rank, so the
    maximum is a lower bound that equals the generic value except with
    probability at most sz_failure_bound(...) per trial.
    """
    if not 1 <= sub_dim < form.n:
        raise ValueError("sub_dim must satisfy 1 <= sub_dim < n")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    best = 0
    for t in range(trials):
        rng = Random(f"{seed}:generic:{t}")
        E = _generic_embedding(rng, form.n, sub_dim, coeff_bound)
        best = max(best, form_rank(restrict_form(form, E)))
    return best


def sz_failure_bound(form: HermitianForm, sub_dim: int, trials: int, coeff_bound: int) -> Fraction:
    """Upper bound on the probability that every trial undershoots.

    Each restricted entry has degree at most 2D in the embedding
    parameters (D = top degree of the form), so a certifying minor of
    size r has degree at most 2Dr; clearing the rational parameters'
    denominators doubles that.  One trial fails with probability at
    most 4Dr/coeff_bound, and trials are independent.
    """
    D = form.max_degree()
    r = min(len(form.support()), comb(sub_dim + D, D))
    per_trial = min(Fraction(1), Fraction(4 * D * r, coeff_bound))
    return per_trial**trials


def max_affine_rank(
    form: HermitianForm,
    sub_dim: int,
    samples: int = 8,
    seed: int = 0,
    translations: bool = True,
    coeff_bound: int = 10**6,
) -> int:
    """Largest restriction rank seen over sampled affine subspaces.

    Samples graph-form subspaces: the first sub_dim ambient coordinates
    are free and the rest are random affine functions of them.  This is
    a lower bound for the true supremum that reaches the generic value
    for generic samples.  With translations=False the sample family and
    seed stream are exactly those of generic_restriction_rank, so the
    two agree on homogeneous data when samples == trials.
    """
    if not 1 <= sub_dim < form.n:
        raise ValueError("sub_dim must satisfy 1 <= sub_dim < n")
    if samples < 1:
        raise ValueError("samples must be at least 1")
    best = 0
    for t in range(samples):
        if translations:
            rng = Random(f"{seed}:affine:{t}")
            rows: List[List[GaussianRational]] = []
            for i in range(sub_dim):
                rows.append([GaussianRational.coerce(1 if j == i else 0) for j in range(sub_dim)])
            trans: List[GaussianRational] = [GR_ZERO] * sub_dim
            for _ in range(form.n - sub_dim):
                rows.append([_random_scalar(rng, coeff_bound) for _ in range(sub_dim)])
                trans.append(_random_scalar(rng, coeff_bound))
            E = embedding(rows, trans)
        else:
            rng = Random(f"{seed}:generic:{t}")
            E = _generic_embedding(rng, form.n, sub_dim, coeff_bound)
        best = max(best, form_rank(restrict_form(form, E)))
    return best


def _conj_transpose(mat: Sequence[Sequence[GaussianRational]]) -> List[List[GaussianRational]]:
    return [[mat[i][j].conjugate() for i in range(len(mat))] for j in range(len(mat[0]))]


def cayley_unitary(n: int, rng: Random, bound: int = 99) -> List[List[GaussianRational]]:
    """An exactly unitary matrix with Gaussian-rational entries.

    U = (I - S)(I + S)^{-1} for a random skew-Hermitian S; I + S is
    always invertible, and unitarity is an identity, not an
    approximation.
    """
    if n < 1:
        raise ValueError("n must be positive")

    def signed(r: Random) -> Fraction:
        return Fraction(r.randint(1, bound) * r.choice((-1, 1)), r.randint(1, bound))

    S = [[GR_ZERO for _ in range(n)] for _ in range(n)]
    for i in range(n):
        S[i][i] = gr(0, signed(rng))
        for j in range(i + 1, n):
            x, y = signed(rng), signed(rng)
            S[i][j] = gr(x, y)
            S[j][i] = gr(-x, y)
    eye = identity(n)
    plus = [[eye[i][j] + S[i][j] for j in range(n)] for i in range(n)]
    minus = [[eye[i][j] - S[i][j] for j in range(n)] for i in range(n)]
    U = matmul(minus, invert(plus))
    assert matmul(_conj_transpose(U), U) == identity(n)
    return U


def quadric_subspace(a: int, b: int, seed: int = 0, bound: int = 99) -> AffineEmbedding:
    """A random b-dimensional affine subspace lying inside Q(a, b).

    Q(a, b) is the set where sum of |z_j|^2 over the first a coordinates
    minus the sum over the last b equals 1.  The subspace is
    w -> (V (w, 1), w) with V the first b+1 columns of a random unitary,
    so the defining identity holds exactly: |V(w,1)|^2 - |w|^2 = 1.
    """
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if b + 1 > a:
        raise ValueError("the orthonormal-column family needs b + 1 <= a")
    rng = Random(f"{seed}:line")
    U = cayley_unitary(a, rng, bound)
    cols = b + 1
    V = [[U[i][j] for j in range(cols)] for i in range(a)]
    n = a + b
    rows: List[List[GaussianRational]] = []
    trans: List[GaussianRational] = []
    for i in range(a):
        rows.append([V[i][k] for k in range(b)])
        trans.append(V[i][b])
    for i in range(b):
        rows.append(list(unit(b, i)))
        trans.append(GR_ZERO)
    E = embedding([[GaussianRational.coerce(x) for x in r] for r in rows], trans)
    assert E.n_ambient == n
    return E
