"""Dense univariate polynomials over Q.

Coefficients are stored low-to-high with trailing zeros stripped, so
``coeffs[k]`` is the coefficient of x^k, the zero polynomial has an
empty coefficient tuple and ``degree`` is -1 for it.

The module also carries the exact kernels the rest of the package is
built on: monic Euclidean gcd, squarefree (multiplicity)
decomposition, resultants, and the root-image polynomial
``resultant_shift`` (the monic polynomial whose roots are P(a) for a
running over the roots of S).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .rationals import ONE, ZERO, rat


def _coerce(value):
    if isinstance(value, Poly):
        raise TypeError("scalar expected, got Poly")
    return rat(value)


class Poly:
    """Immutable dense polynomial over Q.

    >>> p = Poly([0, -1, 2])   # 2x^2 - x
    >>> p.degree
    2
    >>> p(3) == 15
    True
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls((0,) * k + (c,))

    # -- basic queries -----------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int):
        """Coefficient of x^k (0 beyond the degree)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    # -- arithmetic ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.constant(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _coerce(other)
            return Poly(tuple(c * a for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        """Exact field division with remainder."""
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly.zero(), self
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        quo = [ZERO] * (dq + 1)
        inv_lc = ONE / div[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(div) - 1] * inv_lc
            quo[k] = c
            if c != 0:
                for j, dj in enumerate(div):
                    rem[k + j] -= c * dj
        return Poly(quo), Poly(rem[: len(div) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, value):
        """Evaluate by Horner; also composes when given a Poly."""
        if isinstance(value, Poly):
            acc = Poly.zero()
            for c in reversed(self.coeffs):
                acc = acc * value + Poly.constant(c)
            return acc
        acc = ZERO
        v = rat(value)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    # -- calculus / normal forms ---------------------------------------

    def derivative(self) -> "Poly":
        return Poly([rat(k) * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ValueError("zero polynomial has no monic form")
        if self.lc == 1:
            return self
        return self * (ONE / self.lc)

    def shift_argument(self, a) -> "Poly":
        """p(x + a)."""
        return self(Poly((a, 1)))

    def scale_argument(self, s) -> "Poly":
        """p(s * x)."""
        s = rat(s)
        pw = ONE
        out = []
        for c in self.coeffs:
            out.append(c * pw)
            pw *= s
        return Poly(out)

    # -- formatting -----------------------------------------------------

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_string()

    def to_string(self, var: str = "x") -> str:
        """Canonical human/machine form, highest power first.

        >>> Poly([0, 0, 0, 0, -5, 4]).to_string()
        '4*x^5 - 5*x^4'
        """
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            mag = c if c > 0 else -c
            if k == 0:
                body = str(mag)
            else:
                xp = var if k == 1 else f"{var}^{k}"
                body = xp if mag == 1 else f"{mag}*{xp}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


# ---------------------------------------------------------------------------
# gcd / squarefree structure
# ---------------------------------------------------------------------------


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd, normalizing each Euclidean remainder to keep
    coefficients small."""
    if a.is_zero and b.is_zero:
        return Poly.zero()
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def is_squarefree(p: Poly) -> bool:
    if p.is_zero:
        return False
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def squarefree_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return Poly.one()
    return (p // poly_gcd(p, p.derivative())).monic()


@dataclass(frozen=True)
class MultiplicityDecomposition:
    """content * prod(factor^multiplicity) == the decomposed polynomial,
    with monic squarefree pairwise-coprime factors and strictly
    increasing multiplicities."""

    content: object
    parts: tuple  # of (Poly, int)

    def reassemble(self) -> Poly:
        out = Poly.constant(self.content)
        for f, k in self.parts:
            out = out * f**k
        return out


def squarefree_decomposition(p: Poly) -> MultiplicityDecomposition:
    """Yun's algorithm over Q.

    >>> d = squarefree_decomposition(Poly([0, 0, -2, 0, 1]))  # x^4 - 2x^2
    >>> [(f.to_string(), k) for f, k in d.parts]
    [('x^2 - 2', 1), ('x', 2)]
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    content = p.lc
    if p.degree == 0:
        return MultiplicityDecomposition(content, ())
    p = p.monic()
    parts = []
    g = poly_gcd(p, p.derivative())
    b = p // g
    d = (p.derivative() // g) - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            parts.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return MultiplicityDecomposition(content, tuple(parts))


# ---------------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------------


def resultant(a: Poly, b: Poly):
    """Resultant over Q by the Euclidean remainder sequence.

    Uses Res(A, B) = (-1)^(deg A * deg B) * lc(B)^(deg A - deg R) * Res(B, R)
    with R = A mod B, and Res(A, c) = c^deg A for constants c.
    """
    if a.is_zero or b.is_zero:
        return ZERO
    acc = ONE
    while True:
        if b.degree == 0:
            return acc * b.lc**a.degree
        if a.degree == 0:
            return acc * a.lc**b.degree
        r = a % b
        if r.is_zero:
            return ZERO
        if (a.degree * b.degree) % 2:
            acc = -acc
        acc *= b.lc ** (a.degree - r.degree)
        a, b = b, r


def _interpolate(points) -> Poly:
    """Lagrange interpolation through (x_i, y_i) with distinct x_i."""
    out = Poly.zero()
    for i, (xi, yi) in enumerate(points):
        if yi == 0:
            continue
        num = Poly.one()
        den = ONE
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            num = num * Poly((-xj, 1))
            den *= xi - xj
        out = out + num * (yi / den)
    return out


def _sylvester_resultant_shift(s: Poly, p: Poly) -> Poly:
    """Independent route: Res_x(S(x), y - P(x)) as a determinant over
    Q[y], fraction-free (Bareiss) elimination."""
    ds, dp = s.degree, p.degree
    size = ds + dp
    # rows of S coefficients (entries constant in y), then rows of y - P(x)
    m = [[Poly.zero() for _ in range(size)] for _ in range(size)]
    for r in range(dp):
        for k in range(ds + 1):
            m[r][r + k] = Poly.constant(s.coeff(ds - k))
    for r in range(ds):
        for k in range(dp + 1):
            c = -p.coeff(dp - k)
            m[dp + r][r + k] = Poly((c, 1)) if k == dp else Poly.constant(c)
    sign = 1
    prev = Poly.one()
    for k in range(size - 1):
        if m[k][k].is_zero:
            for i in range(k + 1, size):
                if not m[i][k].is_zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                q, r = divmod(num, prev)
                assert r.is_zero, "Bareiss division must be exact"
                m[i][j] = q
            m[i][k] = Poly.zero()
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else -det


def resultant_shift(s: Poly, p: Poly) -> Poly:
    """Monic polynomial whose roots are P(a), a running over the roots
    of S with multiplicity; degree equals deg S.

    S must be monic of degree >= 1.  Computed by evaluation at
    deg S + 1 rational points and interpolation; with
    SEPCURVE_DEBUG_CHECKS=1 an independent determinant route is run
    and compared.

    >>> resultant_shift(Poly([-1, 0, 1]), Poly([0, 0, 1])).to_string("y")
    'y^2 - 2*y + 1'
    """
    if s.is_zero or s.degree < 1:
        raise ValueError("first argument must be nonconstant")
    if s.lc != 1:
        raise ValueError("first argument must be monic")
    pts = []
    c = 0
    while len(pts) < s.degree + 1:
        val = resultant(s, Poly.constant(c) - p)
        pts.append((rat(c), val))
        c += 1
    out = _interpolate(pts)
    if out.degree != s.degree or out.lc != 1:
        raise ArithmeticError("interpolated image polynomial is malformed")
    if os.environ.get("SEPCURVE_DEBUG_CHECKS"):
        alt = _sylvester_resultant_shift(s, p)
        if alt != out:
            raise ArithmeticError(
                "resultant_shift routes disagree: "
                f"interpolation={out!r} determinant={alt!r}"
            )
    return out
