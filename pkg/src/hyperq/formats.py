"""Text formats for forms, real polynomials, and quadric maps.

Three line-oriented formats, each with a single header line followed by
one record per line.  `#` begins a comment anywhere; blank lines are
skipped.  Rationals are written `p/q` or as plain integers.

    form n=<n>
    a1 ... an ; b1 ... bn ; re ; im

    realpoly n=<a+b> a=<a> b=<b>
    e1 ... en ; p/q

    map n=<vars> a=<a> b=<b> A=<A> B=<B> homogeneous=<0|1> denominator=<index|none>
    <+|-> <weight p/q> :: <re>,<im> e1 ... en [; <re>,<im> e1 ... en]...

The map header's A and B count the positive and negative components as
listed (the denominator, when present, is counted among the negatives).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ParseError
from .forms import HermitianForm, WeightedHoloMap, form_from_entries
from .multiindex import MultiIndex, grlex_key
from .polys import Poly
from .quadrics import QuadricMap, SignedRealPoly
from .scalars import GR_ZERO, GaussianRational, gr


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _fraction(token: str, filename: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(filename, lineno, f"expected a rational number, got {token!r}") from None


def _integer(token: str, filename: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(filename, lineno, f"expected an integer, got {token!r}") from None


def _header(line: str, kind: str, keys: Sequence[str], filename: str, lineno: int) -> Dict[str, str]:
    tokens = line.split()
    if not tokens or tokens[0] != kind:
        raise ParseError(filename, lineno, f"expected a {kind!r} header line")
    if len(tokens) != 1 + len(keys):
        raise ParseError(
            filename, lineno,
            f"{kind} header needs fields {' '.join(k + '=...' for k in keys)}",
        )
    out: Dict[str, str] = {}
    for key, token in zip(keys, tokens[1:]):
        prefix = key + "="
        if not token.startswith(prefix):
            raise ParseError(filename, lineno, f"expected {prefix}..., got {token!r}")
        out[key] = token[len(prefix):]
    return out


def _exponents(tokens: Sequence[str], n: int, filename: str, lineno: int) -> MultiIndex:
    if len(tokens) != n:
        raise ParseError(filename, lineno, f"expected {n} exponents, got {len(tokens)}")
    alpha = tuple(_integer(t, filename, lineno) for t in tokens)
    if any(e < 0 for e in alpha):
        raise ParseError(filename, lineno, "exponents must be nonnegative")
    return alpha


def parse_form(text: str, filename: str = "<form>") -> HermitianForm:
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(filename, 1, "empty input, expected a form header") from None
    fields = _header(line, "form", ["n"], filename, lineno)
    n = _integer(fields["n"], filename, lineno)
    if n < 1:
        raise ParseError(filename, lineno, "n must be at least 1")
    entries = []
    for lineno, line in lines:
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 4:
            raise ParseError(filename, lineno, "expected `alpha ; beta ; re ; im`")
        alpha = _exponents(parts[0].split(), n, filename, lineno)
        beta = _exponents(parts[1].split(), n, filename, lineno)
        re = _fraction(parts[2], filename, lineno)
        im = _fraction(parts[3], filename, lineno)
        entries.append((alpha, beta, gr(re, im)))
    return form_from_entries(n, entries)


def dump_form(form: HermitianForm) -> str:
    out = [f"form n={form.n}"]
    for alpha, beta in sorted(form.entries, key=lambda k: (grlex_key(k[0]), grlex_key(k[1]))):
        c = form.entries[(alpha, beta)]
        out.append(
            f"{' '.join(map(str, alpha))} ; {' '.join(map(str, beta))} ; {c.re} ; {c.im}"
        )
    return "\n".join(out) + "\n"


def parse_realpoly(text: str, filename: str = "<realpoly>") -> SignedRealPoly:
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(filename, 1, "empty input, expected a realpoly header") from None
    fields = _header(line, "realpoly", ["n", "a", "b"], filename, lineno)
    n = _integer(fields["n"], filename, lineno)
    a = _integer(fields["a"], filename, lineno)
    b = _integer(fields["b"], filename, lineno)
    if a < 1 or b < 1:
        raise ParseError(filename, lineno, "the split needs a >= 1 and b >= 1")
    if n != a + b:
        raise ParseError(filename, lineno, f"n={n} does not equal a+b={a + b}")
    terms: Dict[MultiIndex, Fraction] = {}
    for lineno, line in lines:
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 2:
            raise ParseError(filename, lineno, "expected `e1 ... en ; p/q`")
        alpha = _exponents(parts[0].split(), n, filename, lineno)
        coeff = _fraction(parts[1], filename, lineno)
        terms[alpha] = terms.get(alpha, Fraction(0)) + coeff
    return SignedRealPoly(a, b, terms)


def dump_realpoly(p: SignedRealPoly) -> str:
    out = [f"realpoly n={p.n} a={p.a} b={p.b}"]
    for alpha in sorted(p.terms, key=grlex_key):
        out.append(f"{' '.join(map(str, alpha))} ; {p.terms[alpha]}")
    return "\n".join(out) + "\n"


def parse_map(text: str, filename: str = "<map>") -> QuadricMap:
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(filename, 1, "empty input, expected a map header") from None
    fields = _header(
        line, "map", ["n", "a", "b", "A", "B", "homogeneous", "denominator"], filename, lineno
    )
    header_lineno = lineno
    n = _integer(fields["n"], filename, lineno)
    a = _integer(fields["a"], filename, lineno)
    b = _integer(fields["b"], filename, lineno)
    big_a = _integer(fields["A"], filename, lineno)
    big_b = _integer(fields["B"], filename, lineno)
    if n != a + b:
        raise ParseError(filename, lineno, f"n={n} does not equal a+b={a + b}")
    if fields["homogeneous"] not in ("0", "1"):
        raise ParseError(filename, lineno, "homogeneous must be 0 or 1")
    homogeneous = fields["homogeneous"] == "1"
    denominator: Optional[int]
    if fields["denominator"] == "none":
        denominator = None
    else:
        denominator = _integer(fields["denominator"], filename, lineno)

    comps: List[Tuple[int, Fraction, Poly]] = []
    for lineno, line in lines:
        halves = line.split("::")
        if len(halves) != 2:
            raise ParseError(filename, lineno, "expected `<sign> <weight> :: <terms>`")
        head = halves[0].split()
        if len(head) != 2 or head[0] not in ("+", "-"):
            raise ParseError(filename, lineno, "component must start with `+ <weight>` or `- <weight>`")
        sign = 1 if head[0] == "+" else -1
        weight = _fraction(head[1], filename, lineno)
        if weight <= 0:
            raise ParseError(filename, lineno, "weights must be positive")
        poly: Poly = {}
        for chunk in halves[1].split(";"):
            tokens = chunk.split()
            if not tokens:
                raise ParseError(filename, lineno, "empty term in component")
            if "," not in tokens[0]:
                raise ParseError(filename, lineno, "each term starts with `<re>,<im>`")
            re_tok, _, im_tok = tokens[0].partition(",")
            coeff = gr(_fraction(re_tok, filename, lineno), _fraction(im_tok, filename, lineno))
            alpha = _exponents(tokens[1:], n, filename, lineno)
            value = poly.get(alpha, GR_ZERO) + coeff
            if value:
                poly[alpha] = value
            else:
                poly.pop(alpha, None)
        comps.append((sign, weight, poly))

    pos = sum(1 for s, _, _ in comps if s > 0)
    neg = len(comps) - pos
    if (pos, neg) != (big_a, big_b):
        raise ParseError(
            filename, header_lineno,
            f"header says A={big_a} B={big_b} but the components count ({pos}, {neg})",
        )
    return QuadricMap(a, b, homogeneous, WeightedHoloMap(n, tuple(comps)), denominator)


def dump_map(m: QuadricMap) -> str:
    pos, neg = m.sign_counts()
    denom = "none" if m.denominator is None else str(m.denominator)
    out = [
        f"map n={m.n} a={m.a} b={m.b} A={pos} B={neg} "
        f"homogeneous={1 if m.homogeneous else 0} denominator={denom}"
    ]
    for sign, weight, poly in m.components.components:
        terms = " ; ".join(
            f"{poly[alpha].re},{poly[alpha].im} {' '.join(map(str, alpha))}"
            for alpha in sorted(poly, key=grlex_key)
        )
        out.append(f"{'+' if sign > 0 else '-'} {weight} :: {terms}")
    return "\n".join(out) + "\n"


def load_form(path: str) -> HermitianForm:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_form(fh.read(), path)


def load_realpoly(path: str) -> SignedRealPoly:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_realpoly(fh.read(), path)


def load_map(path: str) -> QuadricMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map(fh.read(), path)


def monomial_str(alpha: MultiIndex, var: str = "z") -> str:
    parts = []
    for i, e in enumerate(alpha):
        if e == 1:
            parts.append(f"{var}{i + 1}")
        elif e > 1:
            parts.append(f"{var}{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


def _coeff_str(c: GaussianRational) -> str:
    text = str(c)
    if c.im != 0 or c.re < 0:
        return f"({text})"
    return text


def poly_str(poly: Poly, var: str = "z") -> str:
    """Human-readable sum of monomials, grlex order, exact coefficients."""
    if not poly:
        return "0"
    parts = []
    for alpha in sorted(poly, key=grlex_key):
        c = GaussianRational.coerce(poly[alpha])
        mono = monomial_str(alpha, var)
        if mono == "1":
            parts.append(_coeff_str(c))
        elif c == 1:
            parts.append(mono)
        else:
            parts.append(f"{_coeff_str(c)}*{mono}")
    return " + ".join(parts)


def real_poly_str(p: SignedRealPoly, var: str = "x") -> str:
    if not p.terms:
        return "0"
    parts = []
    for alpha in sorted(p.terms, key=grlex_key):
        c = p.terms[alpha]
        mono = monomial_str(alpha, var)
        lead = "- " if c < 0 else ("+ " if parts else "")
        mag = abs(c)
        if mono == "1":
            parts.append(f"{lead}{mag}")
        elif mag == 1:
            parts.append(f"{lead}{mono}")
        else:
            parts.append(f"{lead}{mag}*{mono}")
    return " ".join(parts)


def component_str(sign: int, weight: Fraction, poly: Poly, var: str = "z") -> str:
    """One decomposition summand, weight kept under a symbolic sqrt."""
    body = poly_str(poly, var)
    scale = "" if weight == 1 else f"sqrt({weight})*"
    return f"{'+' if sign > 0 else '-'} |{scale}({body})|^2"
