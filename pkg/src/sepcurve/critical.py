"""Critical-point bookkeeping for a separated-variable curve
P(x) - Q(y) = 0.

The critical points of P are the roots of P'; they are grouped by
multiplicity (the order of vanishing of P'), each group carried as a
monic squarefree factor together with the monic polynomial whose
roots are the critical values of that group.  All matching between
the P-side and the Q-side happens through gcds of those value
polynomials, never through the points themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rpoly import (
    Poly,
    poly_gcd,
    is_squarefree,
    squarefree_decomposition,
    squarefree_part,
    resultant_shift,
)


@dataclass(frozen=True)
class CriticalClass:
    """One multiplicity class: ``factor`` is monic squarefree, its roots
    are the critical points where the derivative vanishes to order
    ``multiplicity`` exactly, and ``values`` is the monic polynomial of
    the corresponding critical values (degree == factor degree)."""

    factor: Poly
    multiplicity: int
    values: Poly


@dataclass(frozen=True)
class CriticalStructure:
    poly: Poly
    classes: tuple  # of CriticalClass, multiplicities strictly increasing

    @property
    def point_count(self) -> int:
        """Number of distinct critical points."""
        return sum(c.factor.degree for c in self.classes)

    def multiset(self) -> tuple:
        """Per-point multiplicities, largest first."""
        out = []
        for c in self.classes:
            out.extend([c.multiplicity] * c.factor.degree)
        out.sort(reverse=True)
        return tuple(out)


def analyze(p: Poly) -> CriticalStructure:
    """Critical structure of a polynomial of degree >= 2."""
    if p.degree < 2:
        raise ValueError(f"degree must be at least 2, got {p.degree}")
    classes = []
    for factor, mult in squarefree_decomposition(p.derivative()).parts:
        classes.append(CriticalClass(factor, mult, resultant_shift(factor, p)))
    return CriticalStructure(p, tuple(classes))


def hypothesis_I(p: Poly) -> bool:
    """True when all critical values of p are simple, i.e. no two
    critical points (of any multiplicity) share a value.

    >>> hypothesis_I(Poly([0, -3, 0, 1]))   # x^3 - 3x, values +-2
    True
    >>> hypothesis_I(Poly([0, 0, -2, 0, 1]))  # x^4 - 2x^2, values -1, 0, -1
    False
    """
    if p.degree < 2:
        raise ValueError(f"degree must be at least 2, got {p.degree}")
    all_values = resultant_shift(squarefree_part(p.derivative()), p)
    return is_squarefree(all_values)


class PolynomialPair:
    """The two sides of P(x) - Q(y), normalized so deg p >= deg q.

    ``swapped`` records whether the constructor exchanged the inputs to
    keep that normalization.
    """

    __slots__ = ("p", "q", "swapped", "_cs")

    def __init__(self, p: Poly, q: Poly):
        if p.degree < 2 or q.degree < 2:
            raise ValueError(
                "both polynomials must have degree at least 2 "
                f"(got {p.degree} and {q.degree})"
            )
        swapped = p.degree < q.degree
        if swapped:
            p, q = q, p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "swapped", swapped)
        object.__setattr__(self, "_cs", {})

    def __setattr__(self, name, value):
        raise AttributeError("PolynomialPair is immutable")

    @property
    def n(self) -> int:
        return self.p.degree

    @property
    def m(self) -> int:
        return self.q.degree

    @property
    def n0(self) -> int:
        """Largest k with 1 <= k < n and a nonzero x^k coefficient in p
        (0 when no such k exists)."""
        for k in range(self.n - 1, 0, -1):
            if self.p.coeff(k) != 0:
                return k
        return 0

    @property
    def m0(self) -> int:
        for k in range(self.m - 1, 0, -1):
            if self.q.coeff(k) != 0:
                return k
        return 0

    def critical_p(self) -> CriticalStructure:
        if "p" not in self._cs:
            self._cs["p"] = analyze(self.p)
        return self._cs["p"]

    def critical_q(self) -> CriticalStructure:
        if "q" not in self._cs:
            self._cs["q"] = analyze(self.q)
        return self._cs["q"]

    def __repr__(self):
        return f"PolynomialPair(p={self.p.to_string()!r}, q={self.q.to_string()!r})"


@dataclass(frozen=True)
class PairMatching:
    """Aggregate matching data between the two critical structures.

    ``pair_classes`` holds (p, q, count): count critical points of P of
    multiplicity p sharing their value with a critical point of Q of
    multiplicity q, sorted by (p, q) descending.  The unmatched masses
    are residuals: deg - 1 minus the matched multiplicity mass on each
    side (so the mass identity holds by construction; they are genuine
    unmatched sums exactly when each shared value is simple on both
    sides, e.g. under hypothesis_I).
    """

    deg_p: int
    deg_q: int
    pair_classes: tuple  # of (p, q, count)
    matched_points: tuple  # per matched point (p, q), sorted descending
    unmatched_p_points: tuple  # multiplicities, descending
    unmatched_q_points: tuple
    unmatched_p_mass: int
    unmatched_q_mass: int
    unmatched_alpha_count: int
    unmatched_beta_count: int
    p_multiset: tuple
    q_multiset: tuple

    @property
    def matched_pair_count(self) -> int:
        """l0: number of matched point pairs."""
        return len(self.matched_points)

    @property
    def excess_pair_count(self) -> int:
        """l1: matched pairs with p > q."""
        return sum(1 for p, q in self.matched_points if p > q)

    @property
    def p_point_count(self) -> int:
        return len(self.p_multiset)

    @property
    def q_point_count(self) -> int:
        return len(self.q_multiset)


def _value_multiplicity_parts(values: Poly):
    """Split a value polynomial into (monic factor, value multiplicity)
    parts; a value repeated j times inside one class shows up with
    multiplicity j here."""
    return squarefree_decomposition(values).parts


def match_pairs(pair: PolynomialPair) -> PairMatching:
    cs_p = pair.critical_p()
    cs_q = pair.critical_q()

    q_parts_by_class = [
        (c.multiplicity, _value_multiplicity_parts(c.values)) for c in cs_q.classes
    ]
    p_parts_by_class = [
        (c.multiplicity, _value_multiplicity_parts(c.values)) for c in cs_p.classes
    ]

    # radical of all critical values on each side, for the direct
    # unmatched point counts
    def radical(parts_by_class):
        out = Poly.one()
        for _, parts in parts_by_class:
            for f, _ in parts:
                g = poly_gcd(out, f)
                out = out * (f // g)
        return out

    p_rad = radical(p_parts_by_class)
    q_rad = radical(q_parts_by_class)

    # pair counts: j*k*deg gcd over value-multiplicity parts
    counts = {}
    for p_mult, p_parts in p_parts_by_class:
        for pf, j in p_parts:
            for q_mult, q_parts in q_parts_by_class:
                for qf, k in q_parts:
                    d = poly_gcd(pf, qf).degree
                    if d > 0:
                        key = (p_mult, q_mult)
                        counts[key] = counts.get(key, 0) + j * k * d

    pair_classes = tuple(
        (p, q, counts[(p, q)]) for p, q in sorted(counts, reverse=True)
    )

    matched_points = []
    for p, q, c in pair_classes:
        matched_points.extend([(p, q)] * c)
    matched_points.sort(reverse=True)

    # matched point counts per side, against the other side's radical
    def matched_point_count(parts_by_class, other_rad):
        total = 0
        per_class = []
        for mult, parts in parts_by_class:
            m = sum(j * poly_gcd(f, other_rad).degree for f, j in parts)
            per_class.append((mult, m))
            total += m
        return total, per_class

    p_matched, p_per_class = matched_point_count(p_parts_by_class, q_rad)
    q_matched, q_per_class = matched_point_count(q_parts_by_class, p_rad)

    unmatched_p_points = []
    for cls, (mult, m) in zip(cs_p.classes, p_per_class):
        unmatched_p_points.extend([mult] * (cls.factor.degree - m))
    unmatched_p_points.sort(reverse=True)
    unmatched_q_points = []
    for cls, (mult, m) in zip(cs_q.classes, q_per_class):
        unmatched_q_points.extend([mult] * (cls.factor.degree - m))
    unmatched_q_points.sort(reverse=True)

    matched_p_mass = sum(p * c for p, q, c in pair_classes)
    matched_q_mass = sum(q * c for p, q, c in pair_classes)

    return PairMatching(
        deg_p=pair.n,
        deg_q=pair.m,
        pair_classes=pair_classes,
        matched_points=tuple(matched_points),
        unmatched_p_points=tuple(unmatched_p_points),
        unmatched_q_points=tuple(unmatched_q_points),
        unmatched_p_mass=pair.n - 1 - matched_p_mass,
        unmatched_q_mass=pair.m - 1 - matched_q_mass,
        unmatched_alpha_count=cs_p.point_count - p_matched,
        unmatched_beta_count=cs_q.point_count - q_matched,
        p_multiset=cs_p.multiset(),
        q_multiset=cs_q.multiset(),
    )


def theorem1_lhs(matching: PairMatching) -> int:
    """Sum of (p - q) over matched pairs with p > q, plus the unmatched
    P-side mass."""
    return (
        sum((p - q) * c for p, q, c in matching.pair_classes if p > q)
        + matching.unmatched_p_mass
    )


def corollary1_lhs(matching: PairMatching) -> int:
    return (
        sum((q - p) * c for p, q, c in matching.pair_classes if q > p)
        + matching.unmatched_q_mass
    )


@dataclass(frozen=True)
class HomogenizedCurveMeta:
    """Degree bookkeeping of the homogenized curve and its z2-partial.

    For n == m the effective inner degree is max(n0, m0); otherwise the
    whole Q side sits at degree m.  The z2 partial derivative carries a
    guaranteed factor z2^(n - inner_degree - 1).
    """

    n: int
    m: int
    n0: int
    m0: int
    inner_degree: int  # m'
    inner_degree_q: int  # m''
    z2_exponent_in_dz2: int


def homogenized_meta(pair: PolynomialPair) -> HomogenizedCurveMeta:
    if pair.n == pair.m:
        inner = max(pair.n0, pair.m0)
        inner_q = pair.m0
    else:
        inner = max(pair.n0, pair.m)
        inner_q = pair.m
    z2exp = pair.n - inner - 1
    assert z2exp >= 0
    return HomogenizedCurveMeta(
        n=pair.n,
        m=pair.m,
        n0=pair.n0,
        m0=pair.m0,
        inner_degree=inner,
        inner_degree_q=inner_q,
        z2_exponent_in_dz2=z2exp,
    )
