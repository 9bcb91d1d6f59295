"""Homogeneous ideals of finite colength in K[x, y].

An ideal is a list of nonzero homogeneous generators plus an optional
truncation degree D, which adjoins every form of degree >= D (the power of
the maximal ideal (x, y)^D).  Graded components are row spaces over the
monomial basis x^d, x^(d-1) y, ..., y^d, computed on demand and memoized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import EmptyComponent, NotArtinian, PairingUndefined, ParseError
from .forms import (
    BinaryForm,
    binary_form,
    format_form,
    gcd_forms,
    monic,
    monomial,
    multiply,
    parse_form,
    substitute,
)
from .rational_linalg import RowBasis, contains, rref, spaces_equal


def monomials(degree: int) -> list:
    """All monomials of a degree, highest x-power first."""
    return [monomial(i, degree - i) for i in range(degree, -1, -1)]


def form_to_vector(f: BinaryForm, degree: int) -> tuple:
    """Coefficient row over the monomial basis of ``degree`` (x-power
    descending): column j holds the coefficient of x^(degree-j) * y^j."""
    if f.is_zero:
        return (Fraction(0),) * (degree + 1)
    if f.degree != degree:
        raise ValueError("form of degree %d in component %d" % (f.degree, degree))
    return tuple(f.coeffs[degree - j] for j in range(degree + 1))


def vector_to_form(vec) -> BinaryForm:
    degree = len(vec) - 1
    return binary_form(tuple(vec[degree - i] for i in range(degree + 1)))


@dataclass(frozen=True)
class GradedComponent:
    degree: int
    basis: RowBasis

    @property
    def rank(self) -> int:
        return self.basis.rank

    def basis_forms(self) -> list:
        return [vector_to_form(row) for row in self.basis.rows]


class GradedIdeal:
    """Immutable by convention; the only hidden state is a memo cache whose
    writes are idempotent, so concurrent readers need no coordination."""

    def __init__(self, generators, truncation: int | None = None):
        gens = tuple(generators)
        for g in gens:
            if not isinstance(g, BinaryForm):
                raise TypeError("generators must be binary forms")
            if g.is_zero:
                raise ValueError("zero generator")
            if g.degree < 1:
                raise ValueError("constant generator makes the quotient trivial")
        if truncation is not None:
            truncation = int(truncation)
            if truncation < 1:
                raise ValueError("truncation degree must be >= 1")
        self.generators = gens
        self.truncation = truncation
        self._components: dict = {}
        self._sequence = None

    def __repr__(self):
        gens = ", ".join(format_form(g) for g in self.generators)
        if self.truncation is None:
            return "GradedIdeal(%s)" % gens
        return "GradedIdeal(%s; truncate %d)" % (gens, self.truncation)


def component(ideal: GradedIdeal, degree: int) -> GradedComponent:
    """RREF basis of the degree-d piece: monomial multiples of every generator
    of degree <= d, plus the whole space once the truncation is reached."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    cached = ideal._components.get(degree)
    if cached is not None:
        return cached
    rows = []
    if ideal.truncation is not None and degree >= ideal.truncation:
        rows = [form_to_vector(m, degree) for m in monomials(degree)]
    else:
        for g in ideal.generators:
            if g.degree <= degree:
                for m in monomials(degree - g.degree):
                    rows.append(form_to_vector(multiply(m, g), degree))
    comp = GradedComponent(degree, rref(rows, ncols=degree + 1))
    ideal._components[degree] = comp
    return comp


def _artinian_bound(ideal: GradedIdeal) -> int:
    """Degree by which the component is guaranteed full.

    A coprime generator pair of degrees a, b caps the socle at a + b - 2.
    Without such a pair the truncation is the cap; lacking both (but with a
    constant overall GCD, which the caller has checked) a generic top-degree
    combination of generators is coprime to a smallest-degree generator, so
    min + max generator degree serves.
    """
    best = None
    gens = ideal.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if gcd_forms(gens[i], gens[j]).degree == 0:
                cand = gens[i].degree + gens[j].degree - 1
                if best is None or cand < best:
                    best = cand
    if ideal.truncation is not None:
        return ideal.truncation if best is None else min(best, ideal.truncation)
    if best is None:
        degs = sorted(g.degree for g in gens)
        best = degs[0] + degs[-1] - 1
    return best


def hilbert_samuel(ideal: GradedIdeal) -> tuple:
    """The sequence t_d = dim K[x,y]_d / I_d, trailing zeros removed.

    Raises NotArtinian when the generators share a nonconstant factor and no
    truncation is present (infinite colength).
    """
    if ideal._sequence is not None:
        return ideal._sequence
    if ideal.truncation is None:
        if not ideal.generators:
            raise NotArtinian("no generators and no truncation")
        g = ideal.generators[0]
        for h in ideal.generators[1:]:
            g = gcd_forms(g, h)
        if g.degree >= 1:
            raise NotArtinian("not Artinian: common factor %s" % format_form(g))
        bound = _artinian_bound(ideal)
    else:
        bound = _artinian_bound(ideal) if ideal.generators else ideal.truncation

    ts = []
    d = 0
    prev_rank = 0
    while True:
        r = component(ideal, d).rank
        if prev_rank > 0 and r < prev_rank + 1:
            raise AssertionError("component ranks stalled at degree %d" % d)
        prev_rank = r
        t = d + 1 - r
        if t == 0:
            break
        ts.append(t)
        d += 1
        if d > bound + 1:
            raise AssertionError("exceeded termination bound %d" % bound)
    seq = tuple(ts)
    ideal._sequence = seq
    return seq


def common_factor(ideal: GradedIdeal, degree: int) -> BinaryForm:
    """Monic GCD of a basis of the degree-d component."""
    comp = component(ideal, degree)
    forms = comp.basis_forms()
    if not forms:
        raise EmptyComponent("component of degree %d is zero" % degree)
    g = forms[0]
    for f in forms[1:]:
        g = gcd_forms(g, f)
    return monic(g)


def verify_factor_structure(ideal: GradedIdeal, degree: int) -> bool:
    """Does the component equal every degree-d multiple of its own GCD?"""
    h = common_factor(ideal, degree)
    rows = [form_to_vector(multiply(m, h), degree) for m in monomials(degree - h.degree)]
    return spaces_equal(rref(rows, ncols=degree + 1), component(ideal, degree).basis)


def power_pairing(ideal: GradedIdeal, m: int) -> BinaryForm:
    """The form F(a, b) = class of (a*x + b*y)^m in the line K[x,y]_m / I_m,
    written in the dual variables and scalar-normalized.

    Only defined when t_m = 1.  Callers must consume scale-invariant data
    only (in practice: its multiplicity partition).
    """
    comp = component(ideal, m)
    if comp.rank != m:
        raise PairingUndefined("t_%d = %d, pairing needs 1" % (m, m + 1 - comp.rank))
    pivots = comp.basis.pivot_columns()
    free_col = next(j for j in range(m + 1) if j not in pivots)
    lam = [Fraction(0)] * (m + 1)
    lam[free_col] = Fraction(1)
    for row, col in zip(comp.basis.rows, pivots):
        lam[col] = -row[free_col]
    # column m - i is the monomial x^i y^(m-i)
    coeffs = [comb(m, i) * lam[m - i] for i in range(m + 1)]
    result = binary_form(coeffs)
    if result.is_zero:
        raise AssertionError("power pairing vanished identically")
    return monic(result)


def substitute_ideal(ideal: GradedIdeal, change) -> GradedIdeal:
    """Apply a linear substitution to every generator; truncation is stable
    because (x, y)^D is preserved by any invertible change."""
    return GradedIdeal(
        [substitute(g, change) for g in ideal.generators], ideal.truncation
    )


def socle_degree(ideal: GradedIdeal) -> int:
    """Last degree with t_d > 0 (-1 for the zero sequence, which cannot occur)."""
    return len(hilbert_samuel(ideal)) - 1


def equal_ideals(left: GradedIdeal, right: GradedIdeal) -> bool:
    """Componentwise equality up to both socle bounds; beyond them the
    components are the full space on both sides."""
    if hilbert_samuel(left) != hilbert_samuel(right):
        return False
    top = socle_degree(left)
    for d in range(top + 1):
        if not spaces_equal(component(left, d).basis, component(right, d).basis):
            return False
    return True


# ---------------------------------------------------------------------------
# Ideal file format: one generator per line, '#' comments, an optional single
# "truncate: D" directive anywhere.
# ---------------------------------------------------------------------------


def parse_ideal_text(text: str) -> GradedIdeal:
    generators = []
    truncation = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("truncate"):
            rest = line[len("truncate"):].lstrip()
            if not rest.startswith(":"):
                raise ParseError("line %d: expected 'truncate: D'" % lineno)
            if truncation is not None:
                raise ParseError("line %d: duplicate truncate directive" % lineno)
            body = rest[1:].strip()
            if not body.isdigit():
                raise ParseError("line %d: truncation degree must be a positive integer"
                                 % lineno)
            truncation = int(body)
            if truncation < 1:
                raise ParseError("line %d: truncation degree must be >= 1" % lineno)
            continue
        form = parse_form(line)
        if form.is_zero:
            raise ParseError("line %d: zero generator" % lineno)
        if form.degree < 1:
            raise ParseError("line %d: constant generator" % lineno)
        generators.append(form)
    if not generators and truncation is None:
        raise ParseError("ideal file needs at least one generator or a truncate line")
    return GradedIdeal(generators, truncation)


def format_ideal(ideal: GradedIdeal) -> str:
    lines = [format_form(g) for g in ideal.generators]
    if ideal.truncation is not None:
        lines.append("truncate: %d" % ideal.truncation)
    return "\n".join(lines) + "\n"
