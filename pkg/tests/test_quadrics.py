"""Signed polynomials, the eight lattice moves, and quadric map synthesis."""

from fractions import Fraction
from random import Random

import pytest

from hyperq.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NoNegativeComponent,
    NoPivotMonomial,
    NotAdmissible,
    NotReached,
    NotVanishing,
)
from hyperq.forms import WeightedHoloMap, form_from_entries, form_from_real_poly
from hyperq.quadrics import (
    QuadricMap,
    SignedRealPoly,
    construct_map,
    corner_move,
    dehomogenize,
    grow,
    identity_map,
    is_admissible,
    map_from_form,
    reachable_signatures,
    s_poly,
    tensor_extend,
    verify_map,
)
from hyperq.scalars import gr

F1 = Fraction(1)


def rp_mul(p, q):
    out = {}
    for al, c in p.items():
        for be, d in q.items():
            mono = tuple(x + y for x, y in zip(al, be))
            v = out.get(mono, 0) + c * d
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
    return out


def all_shifts(a, b):
    # duplicates collapse when a == b; order mirrors the route table
    seen = []
    for shift in [
        (a, b),
        (b, a),
        (a - 1, b - 1),
        (b - 1, a - 1),
        (a, b - 1),
        (b - 1, a),
        (b, a - 1),
        (a - 1, b),
    ]:
        if shift not in seen:
            seen.append(shift)
    return seen


def test_s_poly_examples():
    s = s_poly(2, 1)
    assert s.terms == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): -1}
    assert s_poly(1, 1).terms == {(1, 0): 1, (0, 1): -1}
    for a, b in [(1, 1), (2, 1), (3, 2), (4, 4)]:
        assert s_poly(a, b).signature() == (a, b)


def test_signed_real_poly_validation():
    with pytest.raises(ValueError):
        SignedRealPoly(2, 1, {(1, 0, 0): 1, (2, 0, 0): 1})
    with pytest.raises(DimensionMismatch):
        SignedRealPoly(2, 1, {(1, 0): 1})
    with pytest.raises(ValueError):
        SignedRealPoly(2, 1, {(1, 0, -1): 1})
    with pytest.raises(ValueError):
        SignedRealPoly(0, 1, {})
    p = SignedRealPoly(2, 1, {(1, 0, 0): 1, (0, 1, 0): 0})
    assert p.terms == {(1, 0, 0): 1}
    assert SignedRealPoly(2, 1, {}).is_zero()


def test_is_admissible_examples():
    s_x1 = SignedRealPoly(2, 1, {(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): -1})
    assert is_admissible(s_x1) == (True, (2, 1))
    assert is_admissible(SignedRealPoly(2, 1, {(2, 0, 0): 1})) == (False, (1, 0))
    tilde = SignedRealPoly(
        2,
        2,
        {
            (2, 0, 0, 0): 1,
            (1, 1, 0, 0): 1,
            (1, 0, 1, 0): -1,
            (0, 1, 0, 1): 1,
            (0, 0, 1, 1): -1,
            (0, 0, 0, 2): -1,
        },
    )
    assert is_admissible(tilde) == (True, (3, 3))


def test_grow_worked_example():
    # k = 2 collides on x1 x2, so k = 3: x1^2 s + x2^2 s
    out = grow(s_poly(2, 1))
    assert out.terms == {
        (3, 0, 0): 1,
        (2, 1, 0): 1,
        (2, 0, 1): -1,
        (1, 2, 0): 1,
        (0, 3, 0): 1,
        (0, 2, 1): -1,
    }
    assert out.signature() == (4, 2)
    assert is_admissible(out)[0]
    mirrored = grow(s_poly(2, 1), mirror=True)
    assert mirrored.signature() == (3, 3)
    assert is_admissible(mirrored)[0]
    with pytest.raises(NotAdmissible):
        grow(SignedRealPoly(2, 1, {(1, 0, 0): 1}))
    with pytest.raises(NotAdmissible):
        grow(SignedRealPoly(2, 1, {}))


def test_corner_move_tilde_exact():
    out = corner_move(s_poly(2, 2), (1, 1))
    assert out.terms == {
        (2, 0, 0, 0): 1,
        (1, 1, 0, 0): 1,
        (1, 0, 1, 0): -1,
        (0, 1, 0, 1): 1,
        (0, 0, 1, 1): -1,
        (0, 0, 0, 2): -1,
    }
    assert out.signature() == (3, 3)


def test_corner_move_hat_exact():
    out = corner_move(s_poly(2, 2), (2, 1))
    half = Fraction(1, 2)
    assert out.terms == {
        (2, 0, 0, 0): half,
        (1, 1, 0, 0): half,
        (1, 0, 1, 0): -half,
        (1, 0, 0, 1): half,
        (0, 1, 0, 1): 1,
        (0, 0, 1, 1): -1,
        (0, 0, 0, 2): -1,
    }
    assert out.signature() == (4, 3)


def test_corner_move_divides_out_common_factor():
    s = s_poly(2, 2)
    lifted = SignedRealPoly(2, 2, {tuple(e + (1 if j == 3 else 0) for j, e in enumerate(al)): c for al, c in s.terms.items()})
    assert corner_move(lifted, (1, 1)).terms == corner_move(s, (1, 1)).terms


def test_corner_move_validation():
    with pytest.raises(ValueError):
        corner_move(s_poly(2, 2), (5, 5))
    with pytest.raises(ValueError):
        corner_move(s_poly(2, 1), (1, 0))
    with pytest.raises(NotAdmissible):
        corner_move(SignedRealPoly(2, 2, {(1, 0, 0, 0): 1}), (1, 1))
    # a pivot of the required sign can only be missing for bad input
    allpos = SignedRealPoly(2, 2, {(1, 0, 0, 0): -1, (0, 1, 0, 0): -1})
    with pytest.raises(NoPivotMonomial):
        corner_move(allpos, (1, 1), verify=False)


def test_all_shifts_sound_on_random_seeds():
    rng = Random(7)
    checked = 0
    skipped = 0
    for a, b in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        n = a + b
        s = s_poly(a, b).terms
        for _ in range(8):
            q = {}
            for _ in range(rng.randint(1, 3)):
                mono = tuple(rng.randint(0, 1) for _ in range(n))
                deg = sum(mono)
                pad = tuple(e + (rng.randint(0, 2 - deg) if j == 0 and deg < 2 else 0) for j, e in enumerate(mono))
                q[pad] = q.get(pad, 0) + rng.randint(1, 3)
            # keep q homogeneous: pad everything to the max degree via x1
            top = max(sum(al) for al in q)
            q = {tuple(e + (top - sum(al) if j == 0 else 0) for j, e in enumerate(al)): c for al, c in q.items()}
            p = SignedRealPoly(a, b, rp_mul(s, q))
            ok, sig = is_admissible(p)
            assert ok
            for shift in all_shifts(a, b):
                try:
                    out = corner_move(p, shift)
                except NoPivotMonomial:
                    skipped += 1
                    continue
                assert out.signature() == (sig.pos + shift[0], sig.neg + shift[1])
                assert is_admissible(out)[0]
                checked += 1
    assert checked >= 100
    assert skipped == 0


def test_construct_one_grow():
    m = construct_map(2, 2, 4, 4)
    assert m.homogeneous
    assert m.source() == (2, 2)
    assert m.target() == (4, 4)
    assert verify_map(m)
    for sign, weight, poly in m.components.components:
        assert sign in (1, -1) and weight > 0 and len(poly) == 1


def test_construct_deterministic():
    x = construct_map(3, 2, 8, 7)
    y = construct_map(3, 2, 8, 7)
    assert x == y
    assert verify_map(x)


def test_construct_not_reached():
    with pytest.raises(NotReached) as exc:
        construct_map(4, 2, 100, 2)
    assert "outside" in str(exc.value)
    with pytest.raises(NotReached) as exc:
        construct_map(4, 2, 20, 20, search_budget=2)
    assert "budget" in str(exc.value)


def test_construct_validation():
    with pytest.raises(ValueError):
        construct_map(2, 3, 4, 4)
    with pytest.raises(ValueError):
        construct_map(2, 1, 4, 4)
    with pytest.raises(ValueError):
        construct_map(2, 2, 1, 4)
    with pytest.raises(ValueError):
        construct_map(2, 2, 4, 4, search_budget=0)


def test_reachable_signatures_box():
    witnesses, hit = reachable_signatures(2, 2, 6)
    assert not hit
    assert (2, 2) in witnesses and (4, 4) in witnesses
    for sig, poly in witnesses.items():
        assert sig[0] <= 6 and sig[1] <= 6
        ok, psig = is_admissible(poly)
        assert ok and tuple(psig) == sig
    with pytest.raises(ValueError):
        reachable_signatures(2, 1, 6)
    with pytest.raises(ValueError):
        reachable_signatures(2, 2, 1)


def test_verify_identity_map():
    for a, b in [(2, 1), (2, 2), (3, 2)]:
        assert verify_map(identity_map(a, b))


def test_verify_rejects_wrong_signs():
    wrong = QuadricMap(
        2,
        1,
        False,
        WeightedHoloMap(3, ((1, F1, {(1, 0, 0): gr(1)}), (1, F1, {(0, 1, 0): gr(1)}), (1, F1, {(0, 0, 1): gr(1)}))),
        None,
    )
    assert not verify_map(wrong)


def test_printed_four_one_map_fails():
    # (z1, z2, w z1, w z2 | w^2) on Q(2,1): the norm difference is 1 + 2|w|^2
    comps = (
        (1, F1, {(1, 0, 0): gr(1)}),
        (1, F1, {(0, 1, 0): gr(1)}),
        (1, F1, {(1, 0, 1): gr(1)}),
        (1, F1, {(0, 1, 1): gr(1)}),
        (-1, F1, {(0, 0, 2): gr(1)}),
    )
    m = QuadricMap(2, 1, False, WeightedHoloMap(3, comps), None)
    assert not verify_map(m)


def test_verify_invariances():
    m = tensor_extend(identity_map(2, 1), 2)
    comps = list(m.components.components)
    comps[3], comps[4] = comps[4], comps[3]
    u = gr(Fraction(3, 5), Fraction(4, 5))
    assert u * u.conjugate() == gr(1)
    comps[0] = (comps[0][0], comps[0][1], {al: c * u for al, c in comps[0][2].items()})
    twisted = QuadricMap(m.a, m.b, m.homogeneous, WeightedHoloMap(m.n, tuple(comps)), m.denominator)
    assert verify_map(twisted)


def test_tensor_example():
    m = tensor_extend(identity_map(2, 1), 2)
    assert m.target() == (3, 2)
    assert verify_map(m)
    assert m.components.components == (
        (1, F1, {(1, 0, 0): gr(1)}),
        (1, F1, {(0, 1, 0): gr(1)}),
        (1, F1, {(0, 0, 2): gr(1)}),
        (-1, F1, {(1, 0, 1): gr(1)}),
        (-1, F1, {(0, 1, 1): gr(1)}),
    )


def test_tensor_square_case():
    m = tensor_extend(identity_map(2, 2), 2)
    assert m.target() == (4, 3)
    assert verify_map(m)
    again = tensor_extend(m, 0)
    assert again.target() == (4 + 2 - 1, 3 + 2)
    assert verify_map(again)


def test_tensor_errors():
    ident = identity_map(2, 1)
    with pytest.raises(IndexOutOfRange):
        tensor_extend(ident, 5)
    broken = QuadricMap(
        2,
        1,
        False,
        WeightedHoloMap(3, ((1, F1, {(1, 0, 0): gr(1)}), (1, F1, {(0, 1, 0): gr(1)}), (1, F1, {(0, 0, 1): gr(1)}))),
        None,
    )
    with pytest.raises(NotVanishing):
        tensor_extend(broken, 0)
    rational = dehomogenize(corner_move(s_poly(2, 2), (1, 1)))
    assert rational.denominator is not None
    with pytest.raises(IndexOutOfRange):
        tensor_extend(rational, rational.denominator)


def test_dehomogenize_s_times_x1():
    p = SignedRealPoly(2, 1, {(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): -1})
    m = dehomogenize(p)
    assert (m.a, m.b) == (2, 0)
    assert m.target() == (2, 0)
    assert m.denominator == 2
    assert m.components.components == (
        (1, F1, {(2, 0): gr(1)}),
        (1, F1, {(1, 1): gr(1)}),
        (-1, F1, {(1, 0): gr(1)}),
    )
    assert verify_map(m)


def test_dehomogenize_s_is_identity_like():
    m = dehomogenize(s_poly(2, 2))
    assert (m.a, m.b) == (2, 1)
    assert m.target() == (2, 1)
    # the constant denominator makes this a polynomial map
    denom = m.components.components[m.denominator]
    assert denom[2] == {(0, 0, 0): gr(1)}
    assert verify_map(m)


def test_dehomogenize_errors():
    with pytest.raises(NotAdmissible):
        dehomogenize(SignedRealPoly(2, 1, {(1, 0, 0): 1}))
    with pytest.raises(NotAdmissible):
        dehomogenize(SignedRealPoly(2, 1, {}))


def test_map_from_form_defining_polynomial():
    f = form_from_entries(
        3,
        [
            ((1, 0, 0), (1, 0, 0), 1),
            ((0, 1, 0), (0, 1, 0), 1),
            ((0, 0, 1), (0, 0, 1), -1),
            ((0, 0, 0), (0, 0, 0), -1),
        ],
    )
    m = map_from_form(f, 2, 1)
    assert m.target() == (2, 1)
    assert m.denominator == 2
    denom = m.components.components[2]
    assert denom[2] == {(0, 0, 0): gr(1)}
    assert verify_map(m)


def test_map_from_form_product():
    # (x1 + x2 - x3 - 1) * x1 vanishes on Q(2,1)
    f = form_from_real_poly({(2, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): -1, (1, 0, 0): -1})
    m = map_from_form(f, 2, 1)
    assert m.target() == (2, 1)
    assert verify_map(m)


def test_map_from_form_errors():
    nonvanishing = form_from_real_poly({(1, 0, 0): 1})
    with pytest.raises(NotVanishing):
        map_from_form(nonvanishing, 2, 1)
    with pytest.raises(DimensionMismatch):
        map_from_form(nonvanishing, 2, 2)
    with pytest.raises(NoNegativeComponent):
        map_from_form(form_from_entries(3, []), 2, 1)


def test_quadric_map_validation():
    comps = WeightedHoloMap(3, ((1, F1, {(1, 0, 0): gr(1)}), (1, F1, {(0, 1, 0): gr(1)}), (-1, F1, {(0, 0, 1): gr(1)})))
    with pytest.raises(DimensionMismatch):
        QuadricMap(2, 2, False, comps, None)
    with pytest.raises(IndexOutOfRange):
        QuadricMap(2, 1, False, comps, 7)
    with pytest.raises(ValueError):
        QuadricMap(2, 1, False, comps, 0)
