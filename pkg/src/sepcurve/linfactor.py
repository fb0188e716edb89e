"""Detection of linear factors y = s*x + t of P(x) - Q(y).

Any such factor forces s^n = lc(P)/lc(Q) (equal degrees n) and pins t
as an explicit rational expression in s, so the search happens in the
quotient ring Q[z]/(z^n - lc(P)/lc(Q)): substitute y = z*x + t(z),
collect the x-coefficients of the difference, and take their gcd with
the modulus.  A nonconstant gcd g means every root of g gives a
factor; the claim is then re-verified from scratch in Q[z]/(g) before
a witness is returned, so a reported witness is always sound.
"""

from __future__ import annotations

from dataclasses import dataclass

from .critical import PolynomialPair
from .rationals import ONE, rat
from .rpoly import Poly, poly_gcd


@dataclass(frozen=True)
class LinearFactorWitness:
    """A conjugate family of linear factors.

    Each root s of ``scale_minpoly`` (monic, squarefree, nonzero roots)
    yields the factor y - (s*x + t) with
    t = shift_numerator(s) / shift_denominator, and then
    P(x) = Q(s*x + t) identically.
    """

    scale_minpoly: Poly
    shift_numerator: Poly
    shift_denominator: object  # nonzero rational
    description: str

    @property
    def family_size(self) -> int:
        return self.scale_minpoly.degree

    def shift_for_scale(self, s):
        """t for a rational scale s (s must be a root of scale_minpoly)."""
        if self.scale_minpoly(s) != 0:
            raise ValueError(f"{s} is not a root of the scale polynomial")
        return self.shift_numerator(s) / self.shift_denominator


def _mul_x_polys(a, b, modulus):
    """Multiply two polynomials in x whose coefficients are residues
    mod ``modulus`` (lists indexed by x-power)."""
    out = [Poly.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero:
            continue
        for j, bj in enumerate(b):
            if bj.is_zero:
                continue
            out[i + j] = (out[i + j] + ai * bj) % modulus
    return out


def _difference_coefficients(pair: PolynomialPair, modulus: Poly):
    """x-coefficients of P(x) - Q(z*x + t(z)) as residues mod
    ``modulus``, together with (t numerator, t denominator)."""
    p, q, n = pair.p, pair.q, pair.n
    shift_num = (
        Poly.constant(p.coeff(n - 1)) - Poly.monomial(q.coeff(n - 1), n - 1)
    ) * Poly.x()
    shift_den = rat(n) * p.lc
    t0 = (shift_num % modulus) * (ONE / shift_den)
    # Horner for Q(z*x + t) over (Q[z]/modulus)[x]
    subst = [t0 % modulus, Poly.x() % modulus]
    acc = [Poly.zero()]
    for c in reversed(q.coeffs):
        acc = _mul_x_polys(acc, subst, modulus)
        acc[0] = (acc[0] + Poly.constant(c)) % modulus
    diff = []
    for k in range(n + 1):
        composed = acc[k] if k < len(acc) else Poly.zero()
        diff.append((Poly.constant(p.coeff(k)) - composed) % modulus)
    return diff, shift_num, shift_den


def find_linear_factor(pair: PolynomialPair):
    """Witness for a linear factor of P(x) - Q(y), or None.

    Unequal degrees never admit one (a factor y = s*x + t would force
    equal leading behavior), so only n == m is searched.
    """
    if pair.n != pair.m:
        return None
    n = pair.n
    modulus = Poly.monomial(1, n) - Poly.constant(pair.p.lc / pair.q.lc)

    diff, shift_num, shift_den = _difference_coefficients(pair, modulus)
    assert diff[n].is_zero and diff[n - 1].is_zero, "top coefficients must cancel"

    g = modulus
    for k in range(n - 2, -1, -1):
        g = poly_gcd(g, diff[k])
        if g.degree == 0:
            return None

    # independent re-verification in the smaller quotient ring
    rediff, _, _ = _difference_coefficients(pair, g)
    if any(not d.is_zero for d in rediff):
        return None

    return LinearFactorWitness(
        scale_minpoly=g,
        shift_numerator=shift_num % g,
        shift_denominator=shift_den,
        description=(
            f"family of {g.degree} linear factor(s) y - (s*x + t): "
            f"s any root of {g.to_string('s')}, "
            f"t = ({(shift_num % g).to_string('s')}) / ({shift_den})"
        ),
    )
