"""Exact dense univariate polynomial arithmetic over arbitrary-precision integers.

Coefficients are stored densely: index k holds the coefficient of x**k, and
trailing zeros are stripped so equal polynomials compare equal.  On top of the
ring operations the module provides exact division with divisibility
detection, Sturm-sequence real-root counting (integer pseudo-remainders, no
floating point anywhere), and the coefficient-sequence predicates
``is_log_concave`` and ``is_unimodal``.

Large products are computed by Kronecker substitution: both operands are
packed into single big integers, multiplied (through gmpy2 when available),
and unpacked.  This is exact; the slot width is chosen so columns never carry.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence, Union

try:
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    _mpz = None

__all__ = [
    "Poly",
    "RationalPoly",
    "NotDivisibleError",
    "RealRootSummary",
    "ZERO",
    "ONE",
    "X",
    "exact_div",
    "poly_gcd",
    "square_free_part",
    "sturm_chain",
    "rational_sturm_chain",
    "real_root_summary",
    "is_real_rooted",
    "is_log_concave",
    "is_unimodal",
    "poly_to_json_dict",
    "poly_from_json_dict",
]


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division left a remainder or a non-integer quotient."""


# Products with at most this many coefficient pairs use the schoolbook loop;
# anything larger goes through Kronecker substitution.
_SCHOOLBOOK_LIMIT = 4096


def _as_int(value) -> int:
    return operator.index(value)


class Poly:
    """Immutable dense polynomial with integer coefficients.

    ``Poly([1, 5, 4])`` is 1 + 5x + 4x^2.  The zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [_as_int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        """Coefficient of x**k (0 beyond the degree)."""
        if k < 0:
            raise ValueError("negative exponent")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        out = list(self.coeffs)
        if len(out) < len(other.coeffs):
            out.extend([0] * (len(other.coeffs) - len(out)))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(a) * len(b) <= _SCHOOLBOOK_LIMIT:
            return Poly(_schoolbook(a, b))
        return Poly(_kronecker_signed(a, b))

    def __rmul__(self, other: int) -> "Poly":
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Poly":
        n = _as_int(n)
        if n < 0:
            raise ValueError("negative polynomial power")
        if n == 0:
            return ONE
        if self.is_zero:
            return ZERO
        if len(self.coeffs) == 1:
            return Poly([self.coeffs[0] ** n])
        if len(self.coeffs) == 2:
            c0, c1 = self.coeffs
            return Poly([comb(n, k) * c0 ** (n - k) * c1**k for k in range(n + 1)])
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def times_x(self, k: int = 1) -> "Poly":
        """Multiply by x**k (shift coefficients up)."""
        if k < 0:
            raise ValueError("negative shift")
        if k == 0 or self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate by Horner's rule; accepts int or Fraction."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- content / primitive part ----------------------------------------

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = _gcd(g, abs(c))
            if g == 1:
                return 1
        return g

    def primitive_part(self) -> "Poly":
        """Divide out the content, preserving the sign of the polynomial."""
        c = self.content()
        if c <= 1:
            return self
        return Poly([x // c for x in self.coeffs])

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            elif k == 1:
                body = f"{abs(c)}*x"
            else:
                body = f"{abs(c)}*x^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _pack(cs: Sequence[int], width: int) -> int:
    buf = bytearray(len(cs) * width)
    for i, c in enumerate(cs):
        if c:
            nb = (c.bit_length() + 7) >> 3
            off = i * width
            buf[off : off + nb] = c.to_bytes(nb, "little")
    return int.from_bytes(buf, "little")


def _kronecker_nonneg(a: Sequence[int], b: Sequence[int]) -> list[int]:
    # Slot width: max column value is min(la, lb) * max(a) * max(b), so
    # abits + bbits + bit_length(min(la, lb)) bits never carry.
    abits = max(c.bit_length() for c in a)
    bbits = max(c.bit_length() for c in b)
    slot = abits + bbits + min(len(a), len(b)).bit_length()
    width = (slot + 7) >> 3
    pa = _pack(a, width)
    pb = _pack(b, width)
    if _mpz is not None:
        prod = int(_mpz(pa) * _mpz(pb))
    else:  # pragma: no cover
        prod = pa * pb
    count = len(a) + len(b) - 1
    raw = prod.to_bytes(count * width + width, "little")
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little")
        for i in range(count)
    ]


def _kronecker_signed(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if all(c >= 0 for c in a) and all(c >= 0 for c in b):
        return _kronecker_nonneg(a, b)
    ap = [c if c > 0 else 0 for c in a]
    an = [-c if c < 0 else 0 for c in a]
    bp = [c if c > 0 else 0 for c in b]
    bn = [-c if c < 0 else 0 for c in b]
    out = [0] * (len(a) + len(b) - 1)
    for xs, ys, sign in ((ap, bp, 1), (an, bn, 1), (ap, bn, -1), (an, bp, -1)):
        if any(xs) and any(ys):
            for i, c in enumerate(_kronecker_nonneg(xs, ys)):
                out[i] += sign * c
    return out


# -- exact division -------------------------------------------------------


def exact_div(p: Poly, d: Poly) -> Poly:
    """Return q with p == d * q, or raise NotDivisibleError.

    Division runs top-down over the integers; every quotient coefficient must
    divide exactly and the final remainder must vanish, which together are
    equivalent to exact divisibility over the rationals with an integer
    quotient.
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return ZERO
    if d.degree > p.degree:
        raise NotDivisibleError(f"degree {p.degree} not divisible by degree {d.degree}")
    rem = list(p.coeffs)
    dc = d.coeffs
    dl = d.leading
    ddeg = d.degree
    qlen = p.degree - ddeg + 1
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + ddeg]
        if c == 0:
            continue
        qc, r = divmod(c, dl)
        if r:
            raise NotDivisibleError("quotient coefficient is not an integer")
        q[k] = qc
        for i, dco in enumerate(dc):
            rem[k + i] -= qc * dco
    if any(rem):
        raise NotDivisibleError("nonzero remainder")
    return Poly(q)


# -- Sturm sequences ------------------------------------------------------


def _scaled_rem(f: Poly, g: Poly) -> Poly:
    """Primitive positive multiple of the polynomial remainder rem(f, g).

    Uses fraction-free elimination: each step multiplies the running
    remainder by the leading coefficient of g, so the result equals
    lc(g)**steps * rem(f, g); the sign is corrected afterwards and the
    content (always positive) divided out.
    """
    gl = g.leading
    gcs = g.coeffs
    gdeg = g.degree
    r = list(f.coeffs)
    flips = 0
    while True:
        while r and r[-1] == 0:
            r.pop()
        rd = len(r) - 1
        if rd < gdeg:
            break
        lead = r[-1]
        for i in range(len(r)):
            r[i] *= gl
        off = rd - gdeg
        for i, c in enumerate(gcs):
            r[off + i] -= lead * c
        if gl < 0:
            flips ^= 1
    out = Poly(r)
    if flips:
        out = -out
    return out.primitive_part()


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if f.is_zero and g.is_zero:
        raise ValueError("gcd of two zero polynomials")
    a = f.primitive_part()
    b = g.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        if b.degree == 0:
            return ONE
        r = _scaled_rem(a, b)
        a, b = b, r
    return a if a.leading > 0 else -a


def square_free_part(p: Poly) -> Poly:
    """p divided by gcd(p, p'); same roots, each with multiplicity one."""
    if p.is_zero:
        raise ValueError("zero polynomial has no square-free part")
    if p.degree <= 1:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p
    return exact_div(p, g)


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain of a square-free polynomial of degree >= 1.

    Chain members are primitive integer polynomials equal to the classical
    rational chain up to positive constant factors, which leaves every sign
    count unchanged.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    chain = [p, p.derivative()]
    while chain[-1].degree >= 1:
        r = _scaled_rem(chain[-2], chain[-1])
        if r.is_zero:
            raise ValueError("polynomial is not square-free")
        chain.append(-r)
    return chain


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Iterable[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


@dataclass(frozen=True)
class RealRootSummary:
    """Sturm-sequence root count of the square-free part of a polynomial."""

    squarefree_degree: int
    distinct_real_roots: int
    variations_neg_inf: int
    variations_pos_inf: int

    @property
    def real_rooted(self) -> bool:
        return self.distinct_real_roots == self.squarefree_degree


def real_root_summary(p: Poly) -> RealRootSummary:
    """Count distinct real roots of p exactly (p must be nonzero)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    sf = square_free_part(p)
    if sf.degree < 1:
        return RealRootSummary(0, 0, 0, 0)
    chain = sturm_chain(sf)
    at_pos = [_sign(q.leading) for q in chain]
    at_neg = [_sign(q.leading) * (-1 if q.degree % 2 else 1) for q in chain]
    vneg = _variations(at_neg)
    vpos = _variations(at_pos)
    return RealRootSummary(sf.degree, vneg - vpos, vneg, vpos)


def is_real_rooted(p: Poly) -> bool:
    """True iff every complex root of p is real (exact Sturm test).

    Constant nonzero polynomials are vacuously real-rooted.  Root
    multiplicities do not matter: the test runs on the square-free part.
    """
    return real_root_summary(p).real_rooted


# -- coefficient-sequence predicates --------------------------------------


def _nonneg_coeffs(p: Poly) -> tuple[int, ...]:
    if any(c < 0 for c in p.coeffs):
        raise ValueError("predicate requires nonnegative coefficients")
    return p.coeffs


def is_log_concave(p: Poly) -> bool:
    """b_k^2 >= b_{k-1} * b_{k+1} for all interior k (nonnegative coeffs)."""
    cs = _nonneg_coeffs(p)
    return all(cs[k] * cs[k] >= cs[k - 1] * cs[k + 1] for k in range(1, len(cs) - 1))


def is_unimodal(p: Poly) -> bool:
    """Coefficients rise (weakly) to a peak then fall (nonnegative coeffs)."""
    cs = _nonneg_coeffs(p)
    k = 0
    while k + 1 < len(cs) and cs[k] <= cs[k + 1]:
        k += 1
    while k + 1 < len(cs) and cs[k] >= cs[k + 1]:
        k += 1
    return k + 1 >= len(cs)


# -- rational polynomials -------------------------------------------------


class RationalPoly:
    """Dense polynomial over exact rationals (Fraction coefficients).

    Used as the reference implementation for division and Sturm chains; the
    integer primitive-remainder code is cross-checked against it in tests.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalPoly":
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPoly(out)

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return self + (-other)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return RationalPoly()
        return RationalPoly(_schoolbook(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other: "RationalPoly"):
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        q: list[Fraction] = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dl = other.leading
        ddeg = other.degree
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + ddeg]
            if c == 0:
                continue
            qc = c / dl
            q[k] = qc
            for i, dco in enumerate(other.coeffs):
                rem[k + i] -= qc * dco
        return RationalPoly(q), RationalPoly(rem)

    def __mod__(self, other: "RationalPoly") -> "RationalPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "RationalPoly":
        return RationalPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_poly(self) -> Poly:
        if not self.is_integral():
            raise ValueError("coefficients are not integers")
        return Poly([int(c) for c in self.coeffs])

    def __repr__(self) -> str:
        return f"RationalPoly({[str(c) for c in self.coeffs]!r})"


def rational_sturm_chain(p: Poly) -> list[RationalPoly]:
    """Classical Sturm chain over Fractions (reference implementation)."""
    if p.is_zero or p.degree < 1:
        raise ValueError("need a polynomial of degree >= 1")
    f = RationalPoly.from_poly(p)
    chain = [f, f.derivative()]
    while not chain[-1].is_zero and chain[-1].degree >= 1:
        r = chain[-2] % chain[-1]
        if r.is_zero:
            break
        chain.append(-r)
    return chain


# -- JSON rendering -------------------------------------------------------


def poly_to_json_dict(p: Poly) -> dict:
    """Coefficients as decimal strings, constant term first."""
    return {"coeffs": [str(c) for c in p.coeffs]}


def poly_from_json_dict(data: dict) -> Poly:
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ValueError('expected an object with a "coeffs" list')
    cs = data["coeffs"]
    if not isinstance(cs, list):
        raise ValueError('"coeffs" must be a list')
    try:
        return Poly([int(c) for c in cs])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad coefficient in JSON: {exc}") from None
