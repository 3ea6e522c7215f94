"""Zeta-sequence inversion and graded plethysm over lambda rings.

Given a sequence x_1, x_2, ... in a ring with Adams operations, the
associated zeta series is inverted degree by degree:

    d * u_d = sum over m | d of mu(d/m) * psi_(d/m)(P_m),

where P_m is the Newton polynomial rewriting the m-th power sum in terms
of x_1 ... x_m.  The forward direction rebuilds the x's from the u's via

    d * x_d = sum over i = 1..d of P_i * x_(d-i),
    P_i = sum over k | i of k * psi_(i/k)(u_k).

Both directions divide by d exactly and raise MathCheckError when the
division does not land back in the ring.

The same machinery evaluates polysymmetric elements on a sequence
(generic plethysm), produces virtual stratum classes through the inverse
arrangement tables, and handles multinomial classes of configuration
spaces and power-free loci.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .arrangements import incidence_table, leq
from .polysym import PolysymElement, convert
from .rings import (
    MPoly,
    MathCheckError,
    RING_TOKENS,
    divisors,
    moebius,
    ring_from_token,
)
from .types import SplittingType, enumerate_types


# ---------------------------------------------------------------------------
# order-aware helpers; only rings with truncation orders are affected


def _align(ring, x, y):
    ox, oy = ring.order_of(x), ring.order_of(y)
    if ox is None or oy is None or ox == oy:
        return x, y
    order = min(ox, oy)
    return ring.truncate(x, order), ring.truncate(y, order)


def _add(ring, x, y):
    x, y = _align(ring, x, y)
    return ring.add(x, y)


def _sub(ring, x, y):
    x, y = _align(ring, x, y)
    return ring.sub(x, y)


def _mul(ring, x, y):
    x, y = _align(ring, x, y)
    return ring.mul(x, y)


def _scalar(ring, n, x):
    if n == 1:
        return x
    whole = ring.from_int(n)
    order = ring.order_of(x)
    if order is not None:
        whole = ring.truncate(whole, order)
    return ring.mul(whole, x)


def _sum(ring, terms):
    terms = list(terms)
    if not terms:
        return ring.zero()
    total = terms[0]
    for term in terms[1:]:
        total = _add(ring, total, term)
    return total


def _exact_div(ring, x, d, context):
    result = ring.exact_div_by_int(x, d)
    if result is None:
        raise MathCheckError("exact division by %d failed" % d, context)
    return result


def _rational_combination(ring, pairs, context):
    """Sum of coeff * element with rational coeffs, via a common denominator."""
    pairs = [(Fraction(c), v) for c, v in pairs if c]
    if not pairs:
        return ring.zero()
    scale = 1
    for c, _v in pairs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    total = _sum(ring, (_scalar(ring, int(c * scale), v) for c, v in pairs))
    if scale == 1:
        return total
    return _exact_div(ring, total, scale, context)


# ---------------------------------------------------------------------------
# Newton polynomials


def newton_poly(m):
    """The m-th power sum written in the first m complete symmetric
    functions, as a polynomial in variables h_1 ... h_m."""
    if m < 1:
        raise ValueError("Newton polynomials are indexed from 1")
    powers = []
    h = [MPoly.variable(m, i) for i in range(m)]
    for k in range(1, m + 1):
        p = h[k - 1].scale(k)
        for i in range(1, k):
            p = p - h[i - 1] * powers[k - i - 1]
        powers.append(p)
    return powers[m - 1]


def _newton_values(ring, xs, upto):
    """P_1 ... P_upto evaluated on ring elements by the same recurrence."""
    powers = [None]
    for k in range(1, upto + 1):
        p = _scalar(ring, k, xs[k - 1])
        for i in range(1, k):
            p = _sub(ring, p, _mul(ring, xs[i - 1], powers[k - i]))
        powers.append(p)
    return powers


# ---------------------------------------------------------------------------
# the inversion and its inverse


def invert_zeta(ring, values, upto=None):
    """Recover u_1 ... u_upto from x_1 ... x_N.

    Divisions by the degree must be exact in the ring; a failure raises
    MathCheckError carrying the offending degree.
    """
    xs = list(values)
    if upto is None:
        upto = len(xs)
    if not 1 <= upto <= len(xs):
        raise ValueError("need x_1..x_%d to invert up to degree %d"
                         % (upto, upto))
    powers = _newton_values(ring, xs, upto)
    us = []
    for d in range(1, upto + 1):
        terms = []
        for m in divisors(d):
            mu = moebius(d // m)
            if mu:
                terms.append(_scalar(ring, mu, ring.adams(d // m, powers[m])))
        total = _sum(ring, terms)
        us.append(_exact_div(ring, total, d, {"degree": d, "direction": "invert"}))
    return us


def forward_zeta(ring, values, upto=None):
    """Rebuild x_1 ... x_upto from u_1 ... u_N."""
    us = list(values)
    if upto is None:
        upto = len(us)
    if not 1 <= upto <= len(us):
        raise ValueError("need u_1..u_%d to expand up to degree %d"
                         % (upto, upto))
    big_p = [None]
    for i in range(1, upto + 1):
        terms = [_scalar(ring, k, ring.adams(i // k, us[k - 1]))
                 for k in divisors(i)]
        big_p.append(_sum(ring, terms))
    xs = [ring.one()]
    for d in range(1, upto + 1):
        total = _sum(ring, (_mul(ring, big_p[i], xs[d - i])
                            for i in range(1, d + 1)))
        xs.append(_exact_div(ring, total, d,
                             {"degree": d, "direction": "forward"}))
    return xs[1:]


def symbolic_inverse(d):
    """u_1 ... u_d as polynomials in indeterminates x_1 ... x_d with all
    Adams operations trivial."""
    if d < 1:
        raise ValueError("degree must be positive")
    from .rings import MPolyRing
    names = tuple("x_%d" % k for k in range(1, d + 1))
    ring = MPolyRing(d, adams_mode="trivial", names=names)
    xs = [ring.variable(i) for i in range(d)]
    return ring, invert_zeta(ring, xs)


# ---------------------------------------------------------------------------
# strata attached to splitting types


def stratum_closed(ring, xs, tau):
    """S_tau: the product over parts (b, m) of psi_m(x_b)."""
    total = ring.one()
    for b, m in tau.parts:
        if b > len(xs):
            raise ValueError("need x_1..x_%d for this type" % b)
        total = _mul(ring, total, ring.adams(m, xs[b - 1]))
    return total


def virtual_stratum(ring, xs, lam):
    """U'_lam: inverse-table combination of the closed strata below lam."""
    table = incidence_table(lam.degree(), "a_inv")
    pairs = []
    for tau in table.types:
        coeff = table.value(tau, lam)
        if coeff:
            pairs.append((coeff, stratum_closed(ring, xs, tau)))
    return _rational_combination(ring, pairs,
                                 {"type": lam.label(), "op": "virtual_stratum"})


def stratum_from_virtual(ring, xs, lam):
    """X'_lam: arrangement-table combination of the virtual strata below."""
    table = incidence_table(lam.degree(), "a")
    terms = []
    for tau in table.types:
        coeff = table.value(tau, lam)
        if coeff:
            terms.append(_scalar(ring, int(coeff),
                                 virtual_stratum(ring, xs, tau)))
    return _sum(ring, terms)


def generic_plethysm(ring, xs, element):
    """Evaluate a polysymmetric element on the sequence x_1, x_2, ...

    The element is rewritten in the H basis, whose basis vector at a type
    tau evaluates to the product over the parts (b, m) of psi_m(x_b).
    """
    coords = convert(element, "H").terms
    pairs = []
    for tau, coeff in coords.items():
        pairs.append((coeff, stratum_closed(ring, xs, tau)))
    return _rational_combination(ring, pairs, {"op": "generic_plethysm"})


# ---------------------------------------------------------------------------
# multinomial classes, configuration spaces, binomial strata


def multinomial(ring, x, counts):
    """binom(x; n_1, ..., n_r) = x (x-1) ... (x-N+1) / prod n_i!  for N the
    total count; the falling factorial is divided exactly."""
    counts = list(counts)
    if any(n < 0 for n in counts):
        raise ValueError("counts must be nonnegative")
    total = sum(counts)
    product = ring.one()
    for j in range(total):
        product = _mul(ring, product, _sub(ring, x, ring.from_int(j)))
    denominator = 1
    for n in counts:
        denominator *= math.factorial(n)
    if denominator == 1:
        return product
    return _exact_div(ring, product, denominator,
                      {"op": "multinomial", "counts": counts})


def conf_class(ring, x, counts):
    """The class of the configuration space of labelled groups of points."""
    return multinomial(ring, x, counts)


def binomial_strata(ring, us, tau):
    """Stratum class in a binomial ring: the product over distinct part
    degrees p of binom(u_p; counts of (p, 1), (p, 2), ...)."""
    total = ring.one()
    for p in tau.part_degrees():
        if p > len(us):
            raise ValueError("need u_1..u_%d for this type" % p)
        counts = list(tau.slot_multiplicities(p))
        while counts and counts[-1] == 0:
            counts.pop()
        total = _mul(ring, total, multinomial(ring, us[p - 1], counts))
    return total


# ---------------------------------------------------------------------------
# power-free loci


def powerfree(ring, xs, n, shape):
    """Class of n-power-free tuples with degree vector ``shape``.

    Defined by removing a common n-th power divisor of each degree:

        Zpf(dvec) = x(dvec) - sum over b >= 1 with n*b <= min(dvec)
                    of Zpf(dvec - n*b) * x_b,

    where x(dvec) is the product of the x's over the components.
    """
    if n < 1:
        raise ValueError("the power must be positive")
    shape = tuple(shape)
    if not shape or any(d < 0 for d in shape):
        raise ValueError("the degree vector must be nonempty and nonnegative")
    if max(shape) > len(xs):
        raise ValueError("need x_1..x_%d for this shape" % max(shape))
    memo = {}

    def x_of(dvec):
        total = ring.one()
        for d in dvec:
            if d:
                total = _mul(ring, total, xs[d - 1])
        return total

    def recurse(dvec):
        if dvec in memo:
            return memo[dvec]
        value = x_of(dvec)
        smallest = min(dvec)
        b = 1
        while n * b <= smallest:
            shifted = tuple(d - n * b for d in dvec)
            value = _sub(ring, value, _mul(ring, recurse(shifted), xs[b - 1]))
            b += 1
        memo[dvec] = value
        return value

    return recurse(shape)


# ---------------------------------------------------------------------------
# serialized sequences


class MeasureSequence:
    """A ring together with the values x_1 ... x_N (or u_1 ... u_N)."""

    ROLES = ("closed", "irreducible")

    __slots__ = ("ring", "values", "role")

    def __init__(self, ring, values, role="closed"):
        if role not in self.ROLES:
            raise ValueError("unknown role %r" % (role,))
        self.ring = ring
        self.values = list(values)
        self.role = role

    def to_json(self):
        if self.ring.name not in RING_TOKENS:
            raise ValueError("ring %r has no serialization token" % self.ring.name)
        return {
            "ring": self.ring.name,
            "role": self.role,
            "values": [self.ring.to_json(v) for v in self.values],
        }

    @classmethod
    def from_json(cls, data):
        token = data["ring"]
        order = None
        if token == "witt" and data["values"]:
            order = data["values"][0].get("order")
        ring = ring_from_token(token, order=order)
        values = [ring.from_json(v) for v in data["values"]]
        return cls(ring, values, data.get("role", "closed"))
