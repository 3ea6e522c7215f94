"""Polysymmetric functions: monomial, complete, elementary and power bases.

Elements are finite linear combinations of basis vectors indexed by
splitting types.  The monomial basis M is the presentation basis; the
complete basis H is the arithmetic hub, because products and Adams
operations act on it by bookkeeping alone:

    H_tau * H_sigma = H_(tau union sigma),
    psi_r(H of a part (b, m)) = H of the part (b, r*m).

The basis conversions are driven by the arrangement tables:

    H_lam    = sum over tau <= lam of a(tau, lam) * M_tau,
    Eplus_lam = sum over tau <= lam of e(tau, lam) * M_tau,
    E_b      = sum over squarefree tau of degree b of (-1)^len(tau) * M_tau,

with E on general types defined multiplicatively, E of a part (b, m) being
psi_m(E_b), and the power elements P_b = sum over k dividing b of
k * M of the single part (k, b/k).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arrangements import MAX_TABLE_DEGREE, incidence_table
from .rings import (
    MathCheckError,
    RingDescriptor,
    divisors,
    format_rational,
    parse_rational,
)
from .types import (
    SplittingType,
    canonical_sort_key,
    enumerate_types,
    hilbert_type_counts,
)

BASES = ("M", "H", "E", "Eplus", "P")

MAX_HILBERT_ORDER = 30


class PolysymElement:
    """A finite linear combination of basis vectors indexed by types."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis, terms=None):
        if basis not in BASES:
            raise ValueError("unknown basis %r" % (basis,))
        self.basis = basis
        clean = {}
        for tau, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                clean[tau] = value
        self.terms = clean

    @classmethod
    def zero(cls, basis="M"):
        return cls(basis)

    @classmethod
    def monomial(cls, basis, tau, coeff=1):
        return cls(basis, {tau: Fraction(coeff)})

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted({tau.degree() for tau in self.terms})

    def graded_component(self, d):
        return PolysymElement(
            self.basis,
            {tau: c for tau, c in self.terms.items() if tau.degree() == d})

    def coefficient(self, tau):
        return self.terms.get(tau, Fraction(0))

    def __add__(self, other):
        if self.basis != other.basis:
            raise ValueError("cannot add elements in different bases")
        terms = dict(self.terms)
        for tau, c in other.terms.items():
            terms[tau] = terms.get(tau, Fraction(0)) + c
        return PolysymElement(self.basis, terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return PolysymElement(self.basis,
                              {tau: c * v for tau, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, PolysymElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda item: (item[0].degree(),
                                        canonical_sort_key(item[0])))

    def to_json(self):
        return {
            "basis": self.basis,
            "terms": [{"type": tau.to_json(), "coeff": format_rational(c)}
                      for tau, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data):
        basis = data["basis"]
        terms = {}
        for item in data["terms"]:
            tau = SplittingType.from_json(item["type"])
            coeff = parse_rational(item["coeff"])
            terms[tau] = terms.get(tau, Fraction(0)) + coeff
        return cls(basis, terms)

    def show(self):
        if not self.terms:
            return "0"
        pieces = []
        for tau, c in self.sorted_terms():
            label = "%s%s" % (self.basis, tau.label())
            if c == 1:
                text = label
            elif c == -1:
                text = "-" + label
            else:
                text = "%s*%s" % (format_rational(c), label)
            pieces.append(text)
        out = pieces[0]
        for text in pieces[1:]:
            out += " - " + text[1:] if text.startswith("-") else " + " + text
        return out

    def __repr__(self):
        return "PolysymElement(%s)" % self.show()


# ---------------------------------------------------------------------------
# coordinate dictionaries and the H-basis arithmetic core


def _clean(coords):
    return {tau: c for tau, c in coords.items() if c}


def _h_mul(left, right):
    out = {}
    for tau, a in left.items():
        for sigma, b in right.items():
            key = tau.union(sigma)
            out[key] = out.get(key, Fraction(0)) + a * b
    return _clean(out)


def _h_adams(r, coords):
    out = {}
    for tau, c in coords.items():
        key = SplittingType([(b, r * m) for b, m in tau.parts])
        out[key] = out.get(key, Fraction(0)) + c
    return _clean(out)


_H_ONE_TYPE = SplittingType([])


def _check_degree(d):
    if d > MAX_TABLE_DEGREE:
        raise ValueError(
            "basis conversions are supported up to degree %d" % MAX_TABLE_DEGREE)


def _m_to_h(d, coords):
    table = incidence_table(d, "a_inv")
    out = {}
    for lam, c in coords.items():
        for tau in table.types:
            v = table.value(tau, lam)
            if v:
                out[tau] = out.get(tau, Fraction(0)) + c * v
    return _clean(out)


def _h_to_m(d, coords):
    table = incidence_table(d, "a")
    out = {}
    for lam, c in coords.items():
        for tau in table.types:
            v = table.value(tau, lam)
            if v:
                out[tau] = out.get(tau, Fraction(0)) + c * v
    return _clean(out)


def _eplus_to_m(d, coords):
    table = incidence_table(d, "e")
    out = {}
    for lam, c in coords.items():
        for tau in table.types:
            v = table.value(tau, lam)
            if v:
                out[tau] = out.get(tau, Fraction(0)) + c * v
    return _clean(out)


def _m_to_eplus(d, coords):
    table = incidence_table(d, "e_inv")
    out = {}
    for tau, c in coords.items():
        for lam in table.types:
            v = table.value(lam, tau)
            if v:
                out[lam] = out.get(lam, Fraction(0)) + c * v
    return _clean(out)


@lru_cache(maxsize=None)
def _e_single_in_h(b):
    """E_b in H coordinates: signed sum of squarefree monomial vectors."""
    coords_m = {tau: Fraction((-1) ** tau.length())
                for tau in enumerate_types(b) if tau.is_unramified()}
    return tuple(sorted(_m_to_h(b, coords_m).items(),
                        key=lambda item: canonical_sort_key(item[0])))


@lru_cache(maxsize=None)
def _p_single_in_h(b):
    """P_b in H coordinates."""
    coords_m = {SplittingType([(k, b // k)]): Fraction(k) for k in divisors(b)}
    return tuple(sorted(_m_to_h(b, coords_m).items(),
                        key=lambda item: canonical_sort_key(item[0])))


def _multiplicative_in_h(lam, single):
    """Product over the parts (b, m) of lam of psi_m(single(b)), in H."""
    coords = {_H_ONE_TYPE: Fraction(1)}
    for b, m in lam.parts:
        factor = _h_adams(m, dict(single(b)))
        coords = _h_mul(coords, factor)
    return coords


@lru_cache(maxsize=None)
def _basis_matrix_to_h(basis, d):
    """Columns: basis vectors of degree d written in H coordinates."""
    single = _e_single_in_h if basis == "E" else _p_single_in_h
    types = list(enumerate_types(d))
    columns = []
    for lam in types:
        coords = _multiplicative_in_h(lam, single)
        columns.append([coords.get(tau, Fraction(0)) for tau in types])
    return columns


@lru_cache(maxsize=None)
def _basis_matrix_from_h(basis, d):
    """Inverse of the degree-d transition matrix, by Gauss-Jordan."""
    columns = _basis_matrix_to_h(basis, d)
    size = len(columns)
    work = [[columns[j][i] for j in range(size)] for i in range(size)]
    inverse = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            raise MathCheckError("basis transition matrix is singular",
                                 {"basis": basis, "degree": d})
        work[col], work[pivot] = work[pivot], work[col]
        inverse[col], inverse[pivot] = inverse[pivot], inverse[col]
        scale = work[col][col]
        work[col] = [x / scale for x in work[col]]
        inverse[col] = [x / scale for x in inverse[col]]
        for row in range(size):
            if row != col and work[row][col]:
                factor = work[row][col]
                work[row] = [x - factor * y for x, y in zip(work[row], work[col])]
                inverse[row] = [x - factor * y
                                for x, y in zip(inverse[row], inverse[col])]
    return inverse


def _to_h(basis, d, coords):
    if d == 0 or basis == "H":
        return dict(coords)
    if basis == "M":
        return _m_to_h(d, coords)
    if basis == "Eplus":
        return _m_to_h(d, _eplus_to_m(d, coords))
    columns = _basis_matrix_to_h(basis, d)
    types = list(enumerate_types(d))
    out = {}
    for j, lam in enumerate(types):
        c = coords.get(lam)
        if not c:
            continue
        for i, tau in enumerate(types):
            if columns[j][i]:
                out[tau] = out.get(tau, Fraction(0)) + c * columns[j][i]
    return _clean(out)


def _from_h(basis, d, coords):
    if d == 0 or basis == "H":
        return dict(coords)
    if basis == "M":
        return _h_to_m(d, coords)
    if basis == "Eplus":
        return _m_to_eplus(d, _h_to_m(d, coords))
    inverse = _basis_matrix_from_h(basis, d)
    types = list(enumerate_types(d))
    vector = [coords.get(tau, Fraction(0)) for tau in types]
    out = {}
    for i, lam in enumerate(types):
        value = sum((inverse[i][j] * vector[j] for j in range(len(types))
                     if vector[j]), Fraction(0))
        if value:
            out[lam] = value
    return out


# ---------------------------------------------------------------------------
# public operations


def convert(element, target):
    """Rewrite an element in another basis, degree by degree."""
    if target not in BASES:
        raise ValueError("unknown basis %r" % (target,))
    if element.basis == target:
        return PolysymElement(target, element.terms)
    out = {}
    for d in element.degrees():
        _check_degree(d)
        coords = element.graded_component(d).terms
        converted = _from_h(target, d, _to_h(element.basis, d, coords))
        for tau, c in converted.items():
            out[tau] = out.get(tau, Fraction(0)) + c
    return PolysymElement(target, out)


def multiply(left, right):
    """Product of two elements, returned in the basis of the left factor."""
    h_left = convert(left, "H").terms
    h_right = convert(right, "H").terms
    product = PolysymElement("H", _h_mul(h_left, h_right))
    return convert(product, left.basis)


def adams_ps(r, element):
    """Adams operation psi_r, acting on parts by scaling multiplicities."""
    if r < 1:
        raise ValueError("Adams operations are indexed by positive integers")
    h_coords = convert(element, "H").terms
    return convert(PolysymElement("H", _h_adams(r, h_coords)), element.basis)


def power_basis(d):
    """The degree-d power element, in the monomial basis."""
    if d < 1:
        raise ValueError("power elements are indexed by positive degrees")
    return PolysymElement(
        "M", {SplittingType([(k, d // k)]): Fraction(k) for k in divisors(d)})


def power_element(tau):
    """The power element of an arbitrary type, in the monomial basis."""
    coords = _multiplicative_in_h(tau, _p_single_in_h)
    out = {}
    for d in sorted({t.degree() for t in coords}):
        part = {t: c for t, c in coords.items() if t.degree() == d}
        for t, c in (_h_to_m(d, part) if d else part).items():
            out[t] = out.get(t, Fraction(0)) + c
    return PolysymElement("M", out)


def pairing(left, right):
    """The bilinear pairing with <M_lam, H_tau> = 1 iff lam is dual to tau."""
    m_coords = convert(left, "M").terms
    h_coords = convert(right, "H").terms
    total = Fraction(0)
    for tau, c in h_coords.items():
        other = m_coords.get(tau.dual())
        if other:
            total += c * other
    return total


def omega(element):
    """The involution sending the complete part (b, m) to psi_m(E_b)."""
    h_coords = convert(element, "H").terms
    out = {}
    for tau, c in h_coords.items():
        image = _multiplicative_in_h(tau, _e_single_in_h)
        for sigma, v in image.items():
            out[sigma] = out.get(sigma, Fraction(0)) + c * v
    return convert(PolysymElement("H", _clean(out)), element.basis)


def hilbert_series(order):
    """Dimensions of the graded pieces: coefficients of the type counts."""
    if not 0 <= order <= MAX_HILBERT_ORDER:
        raise ValueError("order must be between 0 and %d" % MAX_HILBERT_ORDER)
    return hilbert_type_counts(order)


# ---------------------------------------------------------------------------
# the ring descriptor, mostly for series identities in the test suite


class PolysymRing(RingDescriptor):
    """Polysymmetric elements in the H basis as a descriptor ring."""

    name = "polysym"

    def zero(self):
        return PolysymElement.zero("H")

    def one(self):
        return PolysymElement.monomial("H", _H_ONE_TYPE)

    def from_int(self, n):
        return PolysymElement.monomial("H", _H_ONE_TYPE, n)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return PolysymElement("H", _h_mul(x.terms, y.terms))

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        return PolysymElement("H", _h_adams(r, x.terms))

    def exact_div_by_int(self, x, d):
        if d == 0:
            raise ZeroDivisionError
        return x.scale(Fraction(1, d))

    def to_json(self, x):
        return x.to_json()

    def from_json(self, obj):
        element = PolysymElement.from_json(obj)
        if element.basis != "H":
            raise ValueError("expected an element in the H basis")
        return element

    def show(self, x):
        return x.show()


def complete_element(tau):
    """H indexed by an arbitrary type, as an H-basis element."""
    return PolysymElement.monomial("H", tau)


def monomial_element(tau):
    """M indexed by an arbitrary type, as an M-basis element."""
    return PolysymElement.monomial("M", tau)


def elementary_element(d):
    """The degree-d elementary element E_d, in the monomial basis."""
    if d < 1:
        raise ValueError("elementary elements are indexed by positive degrees")
    return PolysymElement("M", {tau: Fraction((-1) ** tau.length())
                                for tau in enumerate_types(d)
                                if tau.is_unramified()})
