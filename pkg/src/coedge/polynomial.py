"""Exact integer polynomials and certified real algebraic numbers.

Roots are represented by :class:`RootInterval`: a squarefree integer
polynomial together with a rational interval holding exactly one of its
roots.  Equality of two such numbers is decided with a polynomial gcd plus
interval overlap; order is decided by bisection until the intervals separate.
Nothing here touches floating point except :meth:`RootInterval.approx`,
which exists for display only.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = int | Fraction


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class ExactPolynomial:
    """Polynomial with arbitrary-precision integer coefficients, ascending
    degree.  The zero polynomial has no coefficients and degree -1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = _trim(int(x) for x in coeffs)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    @classmethod
    def x(cls) -> "ExactPolynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> "ExactPolynomial":
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def linear_factor(cls, r: Rational) -> "ExactPolynomial":
        """Primitive integer polynomial vanishing exactly at *r*."""
        r = Fraction(r)
        return cls((-r.numerator, r.denominator))

    # basic properties ---------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic ------------------------------------------------------------------
    def __neg__(self):
        return ExactPolynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPolynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ExactPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = ExactPolynomial((1,))
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x: Rational) -> Rational:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        """Sign of the value at a rational point, computed without fractions."""
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        acc = 0
        bp = 1
        # sum c_i a^i b^(d-i); b > 0 so the sign matches p(a/b)
        for c in reversed(self.coeffs):
            acc = acc * a + c * bp
            bp *= b
        return (acc > 0) - (acc < 0)

    def derivative(self) -> "ExactPolynomial":
        return ExactPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "ExactPolynomial":
        """Divide by the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        g = self.content()
        if self.lc < 0:
            g = -g
        return ExactPolynomial(c // g for c in self.coeffs)

    def exact_div(self, other: "ExactPolynomial") -> "ExactPolynomial | None":
        """Quotient in Z[x] if *other* divides self exactly, else ``None``."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        d = other.degree
        if len(r) - 1 < d:
            return ExactPolynomial() if not r else None
        q = [0] * (len(r) - d)
        lc = other.lc
        oc = other.coeffs
        for i in range(len(r) - 1, d - 1, -1):
            t = r[i]
            if t == 0:
                continue
            qi, rem = divmod(t, lc)
            if rem:
                return None
            q[i - d] = qi
            for j in range(d + 1):
                r[i - d + j] -= qi * oc[j]
        if any(r[:d]):
            return None
        return ExactPolynomial(q)

    def divides(self, other: "ExactPolynomial") -> bool:
        return other.exact_div(self) is not None

    def pseudo_rem(self, other: "ExactPolynomial") -> "ExactPolynomial":
        """``lc(other)**(deg self - deg other + 1) * self mod other``."""
        r = list(self.coeffs)
        d = other.degree
        if len(r) - 1 < d:
            return self
        lc = other.lc
        oc = other.coeffs
        steps = len(r) - 1 - d + 1
        for i in range(len(r) - 1, d - 1, -1):
            t = r[i]
            r = [lc * c for c in r]
            if t:
                for j in range(d + 1):
                    r[i - d + j] -= t * oc[j]
            steps -= 1
        # pad any skipped multiplications so the scaling is exact
        mult = lc ** steps
        return ExactPolynomial(mult * c for c in r[:d])

    def affine_substitute(self, a: int, b: int, c: int) -> "ExactPolynomial":
        """Return ``c**deg * p((a*x + b) / c)`` as an integer polynomial."""
        d = self.degree
        out = ExactPolynomial()
        lin = ExactPolynomial((b, a))
        powlin = ExactPolynomial((1,))
        for i, coef in enumerate(self.coeffs):
            out = out + powlin * (coef * c ** (d - i))
            powlin = powlin * lin
        return out


def _as_poly(v) -> ExactPolynomial:
    if isinstance(v, ExactPolynomial):
        return v
    return ExactPolynomial((int(v),))


ONE = ExactPolynomial((1,))
X = ExactPolynomial.x()


# gcd and squarefree decomposition ------------------------------------------------


def _prs_gcd(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    a, b = a.primitive(), b.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        r = a.pseudo_rem(b)
        a, b = b, r.primitive()
    return a.primitive()


def _interpolate(h: int, xi: int) -> ExactPolynomial:
    out = []
    half = xi // 2
    while h:
        d = h % xi
        if d > half:
            d -= xi
        out.append(d)
        h = (h - d) // xi
    return ExactPolynomial(out)


@lru_cache(maxsize=4096)
def poly_gcd(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    """Primitive gcd with positive leading coefficient (``ONE`` if coprime).

    Uses the heuristic evaluate-and-interpolate method; every candidate is
    confirmed by exact division, and a primitive remainder sequence is the
    fallback.
    """
    if a.is_zero():
        return b.primitive() if not b.is_zero() else ExactPolynomial()
    if b.is_zero():
        return a.primitive()
    a, b = a.primitive(), b.primitive()
    if a.degree == 0 or b.degree == 0:
        return ONE
    norm = min(max(abs(c) for c in a.coeffs), max(abs(c) for c in b.coeffs))
    xi = 2 * norm + 29
    for _ in range(6):
        h = math.gcd(a(xi), b(xi))
        g = _interpolate(h, xi).primitive()
        if not g.is_zero() and g.divides(a) and g.divides(b):
            return g
        xi = xi * 73794 // 27011
    return _prs_gcd(a, b)


def squarefree_decomposition(p: ExactPolynomial) -> list[tuple[ExactPolynomial, int]]:
    """Yun's algorithm: ``[(q_i, i)]`` with ``p = const * prod q_i**i``,
    each ``q_i`` squarefree, primitive, pairwise coprime and non-constant."""
    if p.degree < 1:
        return []
    f = p.primitive()
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    c = df.exact_div(a)
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b_next = b.exact_div(a)
        c = d.exact_div(a)
        b = b_next
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: ExactPolynomial) -> ExactPolynomial:
    """Product of the distinct irreducible factors (primitive, positive lc)."""
    if p.degree < 1:
        return ONE
    f = p.primitive()
    return f.exact_div(poly_gcd(f, f.derivative())).primitive()


# Sturm sequences and root isolation ---------------------------------------------


@lru_cache(maxsize=4096)
def sturm_sequence(p: ExactPolynomial) -> tuple[ExactPolynomial, ...]:
    """Sturm chain of *p* with every member rescaled by a positive constant."""
    seq = [p, p.derivative()]
    while seq[-1].degree > 0:
        a, b = seq[-2], seq[-1]
        r = a.pseudo_rem(b)
        if r.is_zero():
            break
        scale = b.lc ** (a.degree - b.degree + 1)
        g = r.content()
        r = ExactPolynomial(c // g for c in r.coeffs)
        seq.append(r if scale < 0 else -r)
    return tuple(seq)


def _variations(signs: Iterable[int]) -> int:
    last = 0
    count = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _var_at(seq: Sequence[ExactPolynomial], x: Rational) -> int:
    return _variations(q.sign_at(x) for q in seq)


def _var_at_inf(seq: Sequence[ExactPolynomial], sign: int) -> int:
    out = []
    for q in seq:
        s = (q.lc > 0) - (q.lc < 0)
        if sign < 0 and q.degree % 2:
            s = -s
        out.append(s)
    return _variations(out)


def count_roots_between(p: ExactPolynomial, lo: Rational, hi: Rational) -> int:
    """Distinct real roots of squarefree *p* in the open interval ``(lo, hi)``;
    the endpoints must not be roots."""
    seq = sturm_sequence(p)
    return _var_at(seq, lo) - _var_at(seq, hi)


def count_roots_below(p: ExactPolynomial, r: Rational) -> int:
    """Distinct real roots of squarefree *p* strictly less than *r*."""
    if p.degree < 1:
        return 0
    if p.sign_at(r) == 0:
        p = p.exact_div(ExactPolynomial.linear_factor(r))
        if p.degree < 1:
            return 0
    seq = sturm_sequence(p)
    return _var_at_inf(seq, -1) - _var_at(seq, r)


def root_bound(p: ExactPolynomial) -> int:
    """Integer strictly larger than the absolute value of every root."""
    lc = abs(p.lc)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return 1 + -(-m // lc)


class RootInterval:
    """Certified real root of a squarefree integer polynomial.

    Either ``lo == hi`` (the root is that rational), or ``lo < hi``, the
    polynomial is nonzero at both ends and has exactly one root strictly
    between them.  Refinement shrinks the interval in place; the number it
    denotes never changes.
    """

    __slots__ = ("poly", "lo", "hi", "_sign_lo")

    def __init__(self, poly: ExactPolynomial, lo: Rational, hi: Rational):
        self.poly = poly
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        if self.lo > self.hi:
            raise ValueError("empty root interval")
        self._sign_lo = poly.sign_at(self.lo)
        if self.lo == self.hi:
            if self._sign_lo != 0:
                raise ValueError("exact root interval is not a root")
        else:
            sign_hi = poly.sign_at(self.hi)
            if self._sign_lo == 0 or sign_hi == 0:
                raise ValueError("open root interval has a root at an endpoint")
            if sign_hi == self._sign_lo:
                raise ValueError("polynomial does not change sign on the interval")

    @classmethod
    def rational(cls, r: Rational) -> "RootInterval":
        return cls(ExactPolynomial.linear_factor(r), r, r)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> Fraction:
        if not self.exact:
            raise ValueError("root is not known to be rational")
        return self.lo

    def refine(self) -> None:
        if self.exact:
            return
        mid = (self.lo + self.hi) / 2
        s = self.poly.sign_at(mid)
        if s == 0:
            self.lo = self.hi = mid
            self._sign_lo = 0
        elif s == self._sign_lo:
            self.lo = mid
        else:
            self.hi = mid

    def refine_to(self, width: Rational) -> None:
        while not self.exact and self.hi - self.lo > width:
            self.refine()

    def approx(self, digits: int = 12) -> float:
        """Float approximation, for display only."""
        self.refine_to(Fraction(1, 10 ** digits))
        return float((self.lo + self.hi) / 2)

    def _try_rational(self) -> None:
        """Snap to a rational root when one exists (denominator must divide lc)."""
        if self.exact:
            return
        lc = abs(self.poly.lc)
        if lc > 10 ** 4:
            return
        self.refine_to(Fraction(1, 2 * lc * lc))
        if self.exact:
            return
        for den in range(1, lc + 1):
            if lc % den:
                continue
            lo = math.floor(self.lo * den)
            hi = math.ceil(self.hi * den)
            for num in range(lo, hi + 1):
                cand = Fraction(num, den)
                if self.lo < cand < self.hi and self.poly.sign_at(cand) == 0:
                    self.lo = self.hi = cand
                    self._sign_lo = 0
                    return

    def contains_root_of(self, q: ExactPolynomial) -> bool:
        """Whether squarefree *q* has a root in the closed interval."""
        if q.sign_at(self.lo) == 0 or q.sign_at(self.hi) == 0:
            return True
        if self.exact:
            return False
        return count_roots_between(q, self.lo, self.hi) > 0

    def minimal_polynomial(self) -> ExactPolynomial:
        """Defining polynomial reduced to the factor vanishing at this root."""
        if self.exact:
            return ExactPolynomial.linear_factor(self.lo)
        return self.poly

    def __repr__(self):
        if self.exact:
            return f"RootInterval({_fmt(self.lo)})"
        return f"RootInterval(root of {self.poly} in [{_fmt(self.lo)}, {_fmt(self.hi)}])"

    def __str__(self):
        if self.exact:
            return _fmt(self.lo)
        return f"root of {self.poly} in ({_fmt(self.lo)}, {_fmt(self.hi)})"


def _fmt(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


def isolate_real_roots(p: ExactPolynomial) -> list[RootInterval]:
    """Ascending certified intervals for all real roots of squarefree *p*."""
    p = p.primitive()
    if p.degree < 1:
        return []
    seq = sturm_sequence(p)
    b = root_bound(p)
    out: list[RootInterval] = []

    def isolate(lo: Fraction, hi: Fraction, vlo: int, vhi: int) -> None:
        count = vlo - vhi
        if count == 0:
            return
        if count == 1:
            ri = RootInterval(p, lo, hi)
            ri._try_rational()
            out.append(ri)
            return
        mid = (lo + hi) / 2
        if p.sign_at(mid) == 0:
            # carve out a root-free neighbourhood around the rational root
            eps = (hi - lo) / 4
            while True:
                a, c = mid - eps, mid + eps
                if p.sign_at(a) and p.sign_at(c) and count_roots_between(p, a, c) == 1:
                    break
                eps /= 2
            isolate(lo, a, vlo, _var_at(seq, a))
            out.append(RootInterval(p, mid, mid))
            isolate(c, hi, _var_at(seq, c), vhi)
            return
        vmid = _var_at(seq, mid)
        isolate(lo, mid, vlo, vmid)
        isolate(mid, hi, vmid, vhi)

    lo, hi = Fraction(-b), Fraction(b)
    isolate(lo, hi, _var_at(seq, lo), _var_at(seq, hi))
    return out


# comparison of algebraic numbers -----------------------------------------------


def alg_equal(x: RootInterval, y: RootInterval) -> bool:
    if x is y:
        return True
    if x.exact and y.exact:
        return x.lo == y.lo
    if x.exact:
        return y.lo <= x.lo <= y.hi and y.poly.sign_at(x.lo) == 0
    if y.exact:
        return x.lo <= y.lo <= x.hi and x.poly.sign_at(y.lo) == 0
    lo, hi = max(x.lo, y.lo), min(x.hi, y.hi)
    if lo > hi:
        return False
    g = poly_gcd(x.poly, y.poly)
    if g.degree < 1:
        return False
    if g.sign_at(lo) == 0 or g.sign_at(hi) == 0:
        # a common root sitting at an endpoint of the overlap lies in both intervals
        return True
    if lo == hi:
        return False
    return count_roots_between(g, lo, hi) > 0


def alg_cmp(x: RootInterval, y: RootInterval) -> int:
    """Exact three-way comparison of two real algebraic numbers."""
    if alg_equal(x, y):
        return 0
    while True:
        if x.hi < y.lo:
            return -1
        if y.hi < x.lo:
            return 1
        if (x.hi - x.lo) >= (y.hi - y.lo) and not x.exact:
            x.refine()
        elif not y.exact:
            y.refine()
        else:
            x.refine()


def alg_cmp_rational(x: RootInterval, r: Rational) -> int:
    r = Fraction(r)
    while True:
        if x.exact:
            return (x.lo > r) - (x.lo < r)
        if r < x.lo:
            return 1
        if r > x.hi:
            return -1
        s = x.poly.sign_at(r)
        if s == 0:
            return 0
        if r == x.lo or r == x.hi:
            return 1 if r == x.lo else -1
        # root lies on the side where the sign changes
        return -1 if s != x._sign_lo else 1
