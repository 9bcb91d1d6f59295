"""Binary forms over the rationals.

A binary form is a homogeneous polynomial in x and y.  Coefficients are exact
rationals and ``coeffs[i]`` multiplies ``x^i * y^(degree - i)``, so the tuple
length pins the degree even when leading entries vanish (forms divisible by
y).  The zero form is the empty tuple, project-wide.

Root data over the algebraic closure is computed without ever materializing a
root: squarefree decomposition (Yun's algorithm, valid in characteristic 0)
delivers the multiplicity structure, and only *rational* roots are ever
extracted as points, via divisor candidates of the outer integer coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InhomogeneousInput, ParseError, SingularChange


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, x_power: int) -> Fraction:
        return self.coeffs[x_power]

    def __str__(self):
        return format_form(self)


ZERO = BinaryForm(())


def binary_form(coeffs) -> BinaryForm:
    """Build a form from ascending x-power coefficients, normalizing the
    all-zero vector to the canonical zero form."""
    cs = tuple(Fraction(c) for c in coeffs)
    if all(c == 0 for c in cs):
        return ZERO
    return BinaryForm(cs)


def monomial(x_power: int, y_power: int) -> BinaryForm:
    cs = [Fraction(0)] * (x_power + y_power + 1)
    cs[x_power] = Fraction(1)
    return BinaryForm(tuple(cs))


X = monomial(1, 0)
Y = monomial(0, 1)


def add(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    if f.is_zero:
        return g
    if g.is_zero:
        return f
    if f.degree != g.degree:
        raise ValueError("cannot add forms of degrees %d and %d" % (f.degree, g.degree))
    return binary_form(a + b for a, b in zip(f.coeffs, g.coeffs))


def scale(f: BinaryForm, c) -> BinaryForm:
    c = Fraction(c)
    if c == 0 or f.is_zero:
        return ZERO
    return BinaryForm(tuple(a * c for a in f.coeffs))


def multiply(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Product form; degrees add and coefficients convolve exactly."""
    if f.is_zero or g.is_zero:
        return ZERO
    out = [Fraction(0)] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            if b != 0:
                out[i + j] += a * b
    return BinaryForm(tuple(out))


def monic(f: BinaryForm) -> BinaryForm:
    """Scale so the first nonzero coefficient from the x^d end equals 1."""
    if f.is_zero:
        raise ValueError("the zero form has no monic normalization")
    for i in range(f.degree, -1, -1):
        if f.coeffs[i] != 0:
            return scale(f, 1 / f.coeffs[i])
    raise AssertionError("unreachable: nonzero form with no nonzero coefficient")


def x_valuation(f: BinaryForm) -> int:
    if f.is_zero:
        raise ValueError("zero form has no valuation")
    return next(i for i, c in enumerate(f.coeffs) if c != 0)


def y_valuation(f: BinaryForm) -> int:
    if f.is_zero:
        raise ValueError("zero form has no valuation")
    top = max(i for i, c in enumerate(f.coeffs) if c != 0)
    return f.degree - top


@dataclass(frozen=True)
class LinearChange:
    """Invertible substitution x -> a*x + b*y, y -> c*x + d*y."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.determinant == 0:
            raise SingularChange("substitution matrix has determinant 0")

    @property
    def determinant(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "LinearChange":
        det = self.determinant
        return LinearChange(self.d / det, -self.b / det, -self.c / det, self.a / det)

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    @classmethod
    def identity(cls) -> "LinearChange":
        return cls(1, 0, 0, 1)

    @classmethod
    def swap(cls) -> "LinearChange":
        return cls(0, 1, 1, 0)


def substitute(f: BinaryForm, change: LinearChange) -> BinaryForm:
    """f(a*x + b*y, c*x + d*y): same degree, exact coefficients."""
    if f.is_zero:
        return ZERO
    d = f.degree
    img_x = binary_form((change.b, change.a))
    img_y = binary_form((change.d, change.c))
    pow_x = [binary_form((1,))]
    pow_y = [binary_form((1,))]
    for _ in range(d):
        pow_x.append(multiply(pow_x[-1], img_x))
        pow_y.append(multiply(pow_y[-1], img_y))
    out = ZERO
    for i, c in enumerate(f.coeffs):
        if c != 0:
            out = add(out, scale(multiply(pow_x[i], pow_y[d - i]), c))
    return out


# ---------------------------------------------------------------------------
# Univariate helpers over Fraction (coefficient lists, ascending powers).
# A form dehomogenizes to f(x, 1) whose ascending coefficient list is exactly
# f.coeffs, which keeps the two worlds in lockstep.
# ---------------------------------------------------------------------------


def _utrim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _udeg(p):
    return len(p) - 1


def _udivmod(num, den):
    num = _utrim(list(num))
    den = _utrim(list(den))
    if not den:
        raise ZeroDivisionError("univariate division by zero")
    if len(num) < len(den):
        return [], num
    quo = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    while num and len(num) >= len(den):
        shift = len(num) - len(den)
        c = num[-1] / lead
        quo[shift] = c
        for i, dc in enumerate(den):
            num[shift + i] -= c * dc
        _utrim(num)
    return _utrim(quo), num


def _umul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _utrim(out)


def _umonic(p):
    return [c / p[-1] for c in p]


def _ugcd(p, q):
    p = _utrim(list(p))
    q = _utrim(list(q))
    while q:
        _, r = _udivmod(p, q)
        p, q = q, r
    if not p:
        raise ValueError("gcd of two zero polynomials")
    return _umonic(p)


def _uderiv(p):
    return _utrim([i * c for i, c in enumerate(p)][1:])


def _usub(p, q):
    width = max(len(p), len(q))
    return _utrim([(p[j] if j < len(p) else Fraction(0)) -
                   (q[j] if j < len(q) else Fraction(0)) for j in range(width)])


def _usquarefree(p):
    """Yun's squarefree decomposition: list of (monic squarefree factor, mult)
    with p = const * prod factor^mult."""
    p = _umonic(_utrim(list(p)))
    if _udeg(p) < 1:
        return []
    dp = _uderiv(p)
    g = _ugcd(p, dp)
    c, _ = _udivmod(p, g)
    dq, _ = _udivmod(dp, g)
    d = _usub(dq, _uderiv(c))
    out = []
    i = 1
    while _udeg(c) > 0:
        s = _ugcd(c, d) if d else _umonic(list(c))
        if _udeg(s) > 0:
            out.append((s, i))
        c, _ = _udivmod(c, s)
        ds, _ = _udivmod(d, s) if d else ([], [])
        d = _usub(ds, _uderiv(c))
        i += 1
    return out


def multiplicity_partition(f: BinaryForm) -> tuple:
    """Multiplicities of the roots of f on the projective line over the
    algebraic closure, as a nonincreasing tuple summing to the degree.

    The point [1:0] contributes the y-adic valuation; the rest is read off the
    squarefree decomposition of f(x, 1).  No root is ever computed.
    """
    if f.is_zero:
        raise ValueError("zero form has no root partition")
    parts = []
    yv = y_valuation(f)
    if yv > 0:
        parts.append(yv)
    p = _utrim(list(f.coeffs))
    for factor, mult in _usquarefree(p):
        parts.extend([mult] * _udeg(factor))
    parts.sort(reverse=True)
    assert sum(parts) == f.degree
    return tuple(parts)


def divides(h: BinaryForm, f: BinaryForm) -> bool:
    """Exact polynomial division test: is f = h * q for some form q?"""
    if h.is_zero:
        raise ValueError("division test by the zero form")
    if f.is_zero:
        return True
    if h.degree > f.degree:
        return False
    if y_valuation(h) > y_valuation(f):
        return False
    _, rem = _udivmod(list(f.coeffs), _utrim(list(h.coeffs)))
    return not rem


def form_divide(f: BinaryForm, h: BinaryForm) -> BinaryForm:
    """Exact quotient f / h; raises if h does not divide f."""
    if h.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.is_zero:
        return ZERO
    if h.degree > f.degree or y_valuation(h) > y_valuation(f):
        raise ValueError("%s does not divide %s" % (format_form(h), format_form(f)))
    quo, rem = _udivmod(list(f.coeffs), _utrim(list(h.coeffs)))
    if rem:
        raise ValueError("%s does not divide %s" % (format_form(h), format_form(f)))
    d = f.degree - h.degree
    cs = list(quo) + [Fraction(0)] * (d + 1 - len(quo))
    return binary_form(cs)


def gcd_forms(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Monic GCD of two forms: Euclid on the dehomogenizations at y = 1, then
    a y-power for the shared valuation at [1:0].  gcd(f, 0) = monic f."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero forms is undefined")
    if f.is_zero:
        return monic(g)
    if g.is_zero:
        return monic(f)
    yv = min(y_valuation(f), y_valuation(g))
    core = _ugcd(_utrim(list(f.coeffs)), _utrim(list(g.coeffs)))
    d = _udeg(core) + yv
    cs = list(core) + [Fraction(0)] * (d + 1 - len(core))
    return monic(binary_form(cs))


# ---------------------------------------------------------------------------
# Rational root extraction.  Candidates p/q come from divisors of the first
# and last nonzero integer coefficients; integers are factored with
# Miller-Rabin + Pollard-Brent so large products of small roots stay cheap.
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n):
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n):
    if n % 2 == 0:
        return 2
    c = 1
    while True:
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
        c += 1


def _factorint(n):
    n = abs(n)
    out = {}
    if n <= 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m)
        stack.append(d)
        stack.append(m // d)
    return out


def _divisors(n):
    divs = [1]
    for p, e in sorted(_factorint(n).items()):
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _urational_roots(p):
    """Rational roots with multiplicities of a nonzero Fraction polynomial."""
    p = _utrim(list(p))
    roots = []
    v = 0
    while p and p[0] == 0:
        p = p[1:]
        v += 1
    if v:
        roots.append((Fraction(0), v))
    if _udeg(p) < 1:
        return roots
    den_lcm = math.lcm(*[c.denominator for c in p])
    ip = [int(c * den_lcm) for c in p]
    content = math.gcd(*[abs(c) for c in ip if c])
    ip = [c // content for c in ip]
    cands = set()
    for num in _divisors(ip[0]):
        for den in _divisors(ip[-1]):
            cands.add(Fraction(num, den))
            cands.add(Fraction(-num, den))
    for r in sorted(cands):
        mult = 0
        while _udeg(p) >= 1:
            val = Fraction(0)
            for c in reversed(p):
                val = val * r + c
            if val != 0:
                break
            p, rem = _udivmod(p, [-r, Fraction(1)])
            assert not rem
            mult += 1
        if mult:
            roots.append((r, mult))
    return roots


def rational_root_points(f: BinaryForm) -> list:
    """Rational projective roots of f as ((u, v), multiplicity) pairs, with
    points normalized to (1, t) or (0, 1).  Irrational roots are left out."""
    if f.is_zero:
        raise ValueError("zero form has no roots")
    pts = []
    yv = y_valuation(f)
    if yv > 0:
        pts.append(((Fraction(1), Fraction(0)), yv))
    for r, mult in _urational_roots(list(f.coeffs)):
        if r == 0:
            pts.append(((Fraction(0), Fraction(1)), mult))
        else:
            pts.append(((Fraction(1), Fraction(1) / r), mult))
    return sorted(pts)


# ---------------------------------------------------------------------------
# Text format.  Grammar (whitespace-insensitive, '*' optional):
#     poly  := ['-'] term (('+'|'-') term)*
#     term  := coeff ['*' mono] | mono
#     coeff := nat ['/' nat]
#     mono  := 'x' ['^' nat] ['*' 'y' ['^' nat]] | 'y' ['^' nat]
# ---------------------------------------------------------------------------


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a number at position %d in %r" % (start, self.text))
        return int(self.text[start:self.pos])

    def fail(self, what):
        raise ParseError("expected %s at position %d in %r" % (what, self.pos, self.text))


def _parse_power(sc, var):
    sc.take()
    if sc.peek() == "^":
        sc.take()
        return sc.nat()
    return 1


def _parse_term(sc):
    """Returns (coefficient, x_power, y_power)."""
    coeff = Fraction(1)
    have_coeff = False
    if sc.peek().isdigit():
        num = sc.nat()
        if sc.peek() == "/":
            sc.take()
            den = sc.nat()
            if den == 0:
                sc.fail("a nonzero denominator")
            coeff = Fraction(num, den)
        else:
            coeff = Fraction(num)
        have_coeff = True
        if sc.peek() == "*":
            sc.take()
            if sc.peek() not in ("x", "y"):
                sc.fail("a variable after '*'")
    xp = yp = 0
    if sc.peek() == "x":
        xp = _parse_power(sc, "x")
        if sc.peek() == "*":
            sc.take()
            if sc.peek() != "y":
                sc.fail("'y' after '*'")
        if sc.peek() == "y":
            yp = _parse_power(sc, "y")
    elif sc.peek() == "y":
        yp = _parse_power(sc, "y")
    elif not have_coeff:
        sc.fail("a coefficient or variable")
    return coeff, xp, yp


def parse_form(text: str) -> BinaryForm:
    """Parse polynomial text into a binary form, rejecting inhomogeneous input."""
    sc = _Scanner(text)
    terms = []
    sign = Fraction(1)
    if sc.peek() == "-":
        sc.take()
        sign = Fraction(-1)
    while True:
        coeff, xp, yp = _parse_term(sc)
        terms.append((sign * coeff, xp, yp))
        nxt = sc.peek()
        if nxt == "":
            break
        if nxt == "+":
            sign = Fraction(1)
        elif nxt == "-":
            sign = Fraction(-1)
        else:
            sc.fail("'+', '-' or end of input")
        sc.take()
    degrees = {xp + yp for coeff, xp, yp in terms if coeff != 0}
    if len(degrees) > 1:
        raise InhomogeneousInput(
            "terms of degrees %s in %r" % (sorted(degrees), text))
    if not degrees:
        return ZERO
    d = degrees.pop()
    cs = [Fraction(0)] * (d + 1)
    for coeff, xp, yp in terms:
        if coeff != 0:
            cs[xp] += coeff
    return binary_form(cs)


def _format_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


def format_form(f: BinaryForm) -> str:
    """Canonical printer: terms in decreasing x-power, coefficients in lowest
    terms, '-' folded into the separators (never '+ -')."""
    if f.is_zero:
        return "0"
    d = f.degree
    chunks = []
    for i in range(d, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        pieces = []
        mag = abs(c)
        j = d - i
        if mag != 1 or (i == 0 and j == 0):
            pieces.append(_format_coeff(mag))
        if i >= 1:
            pieces.append("x" if i == 1 else "x^%d" % i)
        if j >= 1:
            pieces.append("y" if j == 1 else "y^%d" % j)
        body = "*".join(pieces)
        if not chunks:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append((" + " if c > 0 else " - ") + body)
    return "".join(chunks)
