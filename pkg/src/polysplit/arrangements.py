"""Arrangements between splitting types and the resulting incidence algebra.

An arrangement from tau to lam is a nonnegative integer matrix A whose rows
are indexed by the parts (b_i, m_i) of tau and whose columns are indexed by
the parts (c_j, n_j) of lam, subject to

    sum_i A_ij * b_i = c_j   for every column j,
    sum_j A_ij * n_j = m_i   for every row i.

Counting these matrices gives the function a(tau, lam); restricting entries
to {0, 1} gives e(tau, lam).  The relation ``tau <= lam  iff  a(tau, lam) > 0``
is a partial order on splitting types of a fixed degree, and the matrices
a, e, their inverses and the Moebius function of the order are the incidence
tables exposed here.
"""

from __future__ import annotations

import json
import os
import tempfile
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from .rings import MathCheckError, MPoly, format_rational, moebius, parse_rational
from .types import (
    SplittingType,
    canonical_sort_key,
    enumerate_types,
)

TABLE_TAGS = ("a", "e", "a_inv", "e_inv", "mobius")

MAX_TABLE_DEGREE = 10
MAX_ORACLE_DEGREE = 5

# Bump when the table layout or the counting conventions change, so stale
# disk caches are ignored rather than trusted.
ARTIFACT_VERSION = 1


# ---------------------------------------------------------------------------
# counting arrangements


def _group_slices(parts):
    """Index ranges of maximal runs of identical parts.

    Rows belonging to the same run are interchangeable, so depth-first
    states that differ only by permuting their residuals coincide.
    """
    slices = []
    start = 0
    for i in range(1, len(parts) + 1):
        if i == len(parts) or parts[i] != parts[start]:
            slices.append((start, i))
            start = i
    return slices


def _canonicalize(residual, slices):
    out = []
    for start, stop in slices:
        out.extend(sorted(residual[start:stop], reverse=True))
    return tuple(out)


def _count(tau, lam, squarefree):
    rows = tau.parts
    cols = lam.parts
    if not rows:
        return 1
    degs = [p[0] for p in rows]
    mults = [p[1] for p in rows]
    nrows = len(rows)
    slices = _group_slices(rows)
    memo = {}

    def column_fills(c, n, residual):
        """All row vectors v with sum v_i * degs[i] = c and v_i * n <= residual_i."""
        fills = []
        v = [0] * nrows

        def extend(i, remaining):
            if remaining == 0:
                fills.append(tuple(v[:i]) + (0,) * (nrows - i))
                return
            if i == nrows:
                return
            cap = min(remaining // degs[i], residual[i] // n)
            if squarefree:
                cap = min(cap, 1)
            for value in range(cap, -1, -1):
                v[i] = value
                extend(i + 1, remaining - value * degs[i])
            v[i] = 0

        extend(0, c)
        return fills

    def walk(j, residual):
        if j == len(cols):
            # Row sums are forced: the weighted residual equals the total
            # weight of the remaining columns, which is now zero.
            return 1
        key = (j, residual)
        cached = memo.get(key)
        if cached is not None:
            return cached
        c, n = cols[j]
        total = 0
        for fill in column_fills(c, n, residual):
            rest = tuple(residual[i] - fill[i] * n for i in range(nrows))
            total += walk(j + 1, _canonicalize(rest, slices))
        memo[key] = total
        return total

    return walk(0, tuple(mults))


@lru_cache(maxsize=None)
def _count_cached(tau, lam, squarefree):
    return _count(tau, lam, squarefree)


def count_arrangements(tau, lam, squarefree=False):
    """Number of arrangement matrices from tau to lam (a or, if squarefree, e)."""
    if tau.degree() != lam.degree():
        raise ValueError("types must have equal degree, got %d and %d"
                         % (tau.degree(), lam.degree()))
    if _above_is_impossible(tau, lam):
        return 0
    return _count_cached(tau, lam, bool(squarefree))


def _above_is_impossible(tau, lam):
    """Quick necessary-condition filter for tau <= lam.

    Going up the order, the index strictly drops on a forget move and the
    length strictly drops on a merge move, so (index, length) must decrease
    lexicographically from tau to lam.
    """
    if lam.index() > tau.index():
        return True
    return lam.index() == tau.index() and lam.length() > tau.length()


@lru_cache(maxsize=None)
def leq(tau, lam):
    """Order relation: tau <= lam iff some arrangement from tau to lam exists."""
    if tau.degree() != lam.degree():
        raise ValueError("types must have equal degree, got %d and %d"
                         % (tau.degree(), lam.degree()))
    if tau == lam:
        return True
    if _above_is_impossible(tau, lam):
        return False
    rows = tau.parts
    cols = lam.parts
    degs = [p[0] for p in rows]
    nrows = len(rows)
    slices = _group_slices(rows)
    seen = set()

    def walk(j, residual):
        if j == len(cols):
            return True
        key = (j, residual)
        if key in seen:
            return False
        c, n = cols[j]
        v = [0] * nrows

        def extend(i, remaining):
            if remaining == 0:
                rest = tuple(residual[k] - v[k] * n for k in range(nrows))
                return walk(j + 1, _canonicalize(rest, slices))
            if i == nrows:
                return False
            cap = min(remaining // degs[i], residual[i] // n)
            for value in range(cap, -1, -1):
                v[i] = value
                if extend(i + 1, remaining - value * degs[i]):
                    v[i] = 0
                    return True
            v[i] = 0
            return False

        if extend(0, c):
            return True
        seen.add(key)
        return False

    return walk(0, tuple(p[1] for p in rows))


# ---------------------------------------------------------------------------
# explicit arrangements and their tiling pictures


class Arrangement:
    """A single arrangement matrix, kept with its row and column types."""

    __slots__ = ("tau", "lam", "matrix")

    def __init__(self, tau, lam, matrix):
        self.tau = tau
        self.lam = lam
        self.matrix = tuple(tuple(row) for row in matrix)

    def is_squarefree(self):
        return all(entry <= 1 for row in self.matrix for entry in row)

    def to_json(self):
        return {
            "tau": self.tau.to_json(),
            "lam": self.lam.to_json(),
            "matrix": [list(row) for row in self.matrix],
        }

    def __eq__(self, other):
        if not isinstance(other, Arrangement):
            return NotImplemented
        return (self.tau, self.lam, self.matrix) == (other.tau, other.lam, other.matrix)

    def __hash__(self):
        return hash((self.tau, self.lam, self.matrix))

    def render(self):
        """ASCII tiling: one block per lam part, strips lettered by tau part.

        The block for a part (c, n) of lam is n rows of width c.  Each tau
        part (b, m), labelled by a letter, contributes full-height strips of
        width b; entry A_ij says how many strips of part i land in block j.
        """
        letters = "abcdefghijklmnopqrstuvwxyz"
        if len(self.tau.parts) > len(letters):
            raise ValueError("too many parts to letter")
        blocks = []
        for j, (c, n) in enumerate(self.lam.parts):
            row_text = "".join(
                letters[i] * b * self.matrix[i][j]
                for i, (b, _m) in enumerate(self.tau.parts)
            )
            blocks.append([row_text] * n)
        height = max(len(block) for block in blocks) if blocks else 0
        lines = []
        for r in range(height):
            cells = []
            for j, block in enumerate(blocks):
                width = self.lam.parts[j][0]
                cells.append(block[r] if r < len(block) else " " * width)
            lines.append(" ".join(cells).rstrip())
        legend = ", ".join(
            "%s = %s" % (letters[i], SplittingType([part]).label())
            for i, part in enumerate(self.tau.parts)
        )
        lines.append("with " + legend)
        return "\n".join(lines)


def enumerate_arrangements(tau, lam, squarefree=False):
    """All arrangement matrices from tau to lam, in lexicographic order."""
    if tau.degree() != lam.degree():
        raise ValueError("types must have equal degree, got %d and %d"
                         % (tau.degree(), lam.degree()))
    rows = tau.parts
    cols = lam.parts
    degs = [p[0] for p in rows]
    nrows = len(rows)
    found = []
    current = []

    def walk(j, residual):
        if j == len(cols):
            matrix = [[current[jj][i] for jj in range(len(cols))] for i in range(nrows)]
            found.append(Arrangement(tau, lam, matrix))
            return
        c, n = cols[j]
        v = [0] * nrows

        def extend(i, remaining):
            if remaining == 0:
                fill = tuple(v[:i]) + (0,) * (nrows - i)
                current.append(fill)
                walk(j + 1, tuple(residual[k] - fill[k] * n for k in range(nrows)))
                current.pop()
                return
            if i == nrows:
                return
            cap = min(remaining // degs[i], residual[i] // n)
            if squarefree:
                cap = min(cap, 1)
            for value in range(cap, -1, -1):
                v[i] = value
                extend(i + 1, remaining - value * degs[i])
            v[i] = 0

        extend(0, c)

    if not rows:
        return [Arrangement(tau, lam, [])]
    walk(0, tuple(p[1] for p in rows))
    return found


# ---------------------------------------------------------------------------
# incidence tables


class IncidenceTable:
    """Dense upper-triangular table of an incidence function at one degree."""

    __slots__ = ("degree", "tag", "types", "entries", "_pos")

    def __init__(self, degree, tag, types, entries):
        self.degree = degree
        self.tag = tag
        self.types = list(types)
        self.entries = [list(row) for row in entries]
        self._pos = {t: i for i, t in enumerate(self.types)}

    def value(self, tau, lam):
        i = self._pos.get(tau)
        j = self._pos.get(lam)
        if i is None or j is None:
            raise KeyError("type not present in table of degree %d" % self.degree)
        return self.entries[i][j]

    def to_json(self):
        return {
            "degree": self.degree,
            "tag": self.tag,
            "types": [t.to_json() for t in self.types],
            "entries": [[format_rational(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data):
        degree = data["degree"]
        tag = data["tag"]
        if tag not in TABLE_TAGS:
            raise ValueError("unknown table tag %r" % (tag,))
        types = [SplittingType.from_json(t) for t in data["types"]]
        entries = [[parse_rational(x) for x in row] for row in data["entries"]]
        if len(entries) != len(types) or any(len(row) != len(types) for row in entries):
            raise ValueError("table entries are not square of the right size")
        for t in types:
            if t.degree() != degree:
                raise ValueError("table contains a type of the wrong degree")
        return cls(degree, tag, types, entries)


def _zeta_entry(tau, lam):
    return Fraction(1) if leq(tau, lam) else Fraction(0)


def _invert_triangular(types, value):
    """Invert an order-triangular table by back substitution.

    ``value(tau, lam)`` is the original table; the inverse satisfies, for
    tau < lam,

        inv(tau, lam) = -(1 / value(lam, lam)) * sum over tau <= kappa < lam
                        of inv(tau, kappa) * value(kappa, lam).
    """
    size = len(types)
    table = [[value(types[i], types[j]) if i <= j else Fraction(0)
              for j in range(size)] for i in range(size)]
    inv = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        inv[i][i] = 1 / table[i][i]
        for j in range(i + 1, size):
            acc = Fraction(0)
            for k in range(i, j):
                if inv[i][k] and table[k][j]:
                    acc += inv[i][k] * table[k][j]
            if acc:
                inv[i][j] = -acc / table[j][j]
    return inv


def _compute_table(d, tag):
    types = list(enumerate_types(d))
    if tag == "a":
        entries = [[Fraction(count_arrangements(t, l)) for l in types] for t in types]
    elif tag == "e":
        entries = [[Fraction(count_arrangements(t, l, squarefree=True))
                    for l in types] for t in types]
    elif tag == "a_inv":
        entries = _invert_triangular(
            types, lambda t, l: Fraction(count_arrangements(t, l)))
    elif tag == "e_inv":
        entries = _invert_triangular(
            types, lambda t, l: Fraction(count_arrangements(t, l, squarefree=True)))
    elif tag == "mobius":
        entries = _invert_triangular(types, _zeta_entry)
    else:
        raise ValueError("unknown table tag %r" % (tag,))
    if tag in ("a_inv", "e_inv"):
        bound = 1
        for k in range(2, d + 1):
            bound *= k
        for row in entries:
            for x in row:
                if (x * bound).denominator != 1:
                    raise MathCheckError(
                        "inverse table entry outside Z[1/d!]",
                        {"degree": d, "tag": tag, "entry": format_rational(x)})
    return IncidenceTable(d, tag, types, entries)


# ---------------------------------------------------------------------------
# disk cache

_memory_tables = {}


def cache_directory():
    env = os.environ.get("POLYSPLIT_CACHE_DIR")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "polysplit")


def _cache_path(d, tag):
    name = "table-%s-deg%02d-v%d.json" % (tag, d, ARTIFACT_VERSION)
    return os.path.join(cache_directory(), name)


def _load_cached_table(d, tag):
    path = _cache_path(d, tag)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        table = IncidenceTable.from_json(data)
        if table.degree != d or table.tag != tag:
            return None
        if table.types != list(enumerate_types(d)):
            return None
        return table
    except (OSError, ValueError, KeyError, TypeError):
        return None


def _store_cached_table(table):
    directory = cache_directory()
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(table.to_json(), handle)
            os.replace(tmp, _cache_path(table.degree, table.tag))
        finally:
            if os.path.exists(tmp):
                os.unlink(tmp)
    except OSError:
        pass


def incidence_table(d, tag, use_cache=True):
    """The incidence table of the given tag at degree d.

    Tables are held in memory for the session and mirrored to a JSON disk
    cache (POLYSPLIT_CACHE_DIR, defaulting to ~/.cache/polysplit); a corrupt
    or stale cache file is silently recomputed.
    """
    if tag not in TABLE_TAGS:
        raise ValueError("unknown table tag %r" % (tag,))
    if not 1 <= d <= MAX_TABLE_DEGREE:
        raise ValueError("table degree must be between 1 and %d" % MAX_TABLE_DEGREE)
    key = (d, tag)
    table = _memory_tables.get(key)
    if table is not None:
        return table
    if use_cache:
        table = _load_cached_table(d, tag)
    if table is None:
        table = _compute_table(d, tag)
        if use_cache:
            _store_cached_table(table)
    _memory_tables[key] = table
    return table


# ---------------------------------------------------------------------------
# bundled reference tables

REFERENCE_TABLE_DEGREES = (2, 3, 4, 5)
REFERENCE_TOP_DEGREES = (6, 7, 8, 9, 10)


def _read_data_file(name):
    path = resources.files(__package__).joinpath("data").joinpath(name)
    return json.loads(path.read_text(encoding="utf-8"))


def reference_table(degree, tag):
    """Bundled hand-checked incidence table, degrees 2..5.

    Available tags: a, a_inv, mobius.
    """
    stems = {"a": "a", "a_inv": "ainv", "mobius": "mobius"}
    if tag not in stems:
        raise ValueError("no reference table for tag %r" % (tag,))
    if degree not in REFERENCE_TABLE_DEGREES:
        raise ValueError("no reference table at degree %d" % degree)
    data = _read_data_file("ref-%s-deg%d.json" % (stems[tag], degree))
    return IncidenceTable.from_json(data)


def reference_top_column(degree):
    """Bundled nonzero inverse-table entries at lam = (d), degrees 6..10.

    Types absent from the returned dict have value zero.
    """
    if degree not in REFERENCE_TOP_DEGREES:
        raise ValueError("no reference top column at degree %d" % degree)
    data = _read_data_file("ref-top-deg%d.json" % degree)
    return {SplittingType.from_json(entry["type"]): parse_rational(entry["value"])
            for entry in data["entries"]}


# ---------------------------------------------------------------------------
# the top stratum


def top_stratum_inverse(tau):
    """Closed form for the inverse-table entry at lam = (d).

    Mixed types give zero.  A type with r parts, all of multiplicity m,
    contributes (mu(m)/m) * ((-1)^(r-1)/r) * r! / prod_b tau[b^m]!.
    """
    m = tau.pure_multiplicity()
    if m is None:
        return Fraction(0)
    r = len(tau.parts)
    value = Fraction(moebius(m), m) * Fraction((-1) ** (r - 1), r)
    numerator = 1
    for k in range(1, r + 1):
        numerator *= k
    denominator = 1
    for count in tau.part_counts().values():
        for k in range(1, count + 1):
            denominator *= k
    return value * Fraction(numerator, denominator)


@lru_cache(maxsize=None)
def top_column_inverse(d):
    """Inverse-table entries a_inv(tau, (d)) for every tau of degree d.

    Computed by the dual back substitution

        a_inv(tau, (d)) = -(1 / a(tau, tau)) * sum over tau < kappa <= (d)
                          of a(tau, kappa) * a_inv(kappa, (d)),

    which needs plain arrangement counts only, not the full inverse table.
    """
    types = list(enumerate_types(d))
    column = {}
    for tau in reversed(types):
        if tau.parts == ((d, 1),):
            column[tau] = Fraction(1)
            continue
        acc = Fraction(0)
        for kappa in types:
            if canonical_sort_key(kappa) <= canonical_sort_key(tau):
                continue
            known = column.get(kappa)
            if known is None or not known:
                continue
            count = count_arrangements(tau, kappa)
            if count:
                acc += count * known
        column[tau] = -acc / count_arrangements(tau, tau)
    return column


# ---------------------------------------------------------------------------
# the free commutative monoid oracle


def monoid_oracle(d, generator_degrees):
    """Check the arrangement tables against a free commutative monoid.

    In the monoid algebra on generators of the given degrees, let x_k be
    the sum of all monoid elements of degree k.  For a splitting type tau,

        S_tau = product over parts (b, m) of psi_m(x_b),
        X_tau = sum of the monoid elements of splitting type tau,

    where an element g_1^e_1 ... g_r^e_r has type given by the multiset of
    (degree of g_i, e_i).  The tables must satisfy

        S_tau = sum over lam <= tau of a(lam, tau) * X_lam,
        X_tau = sum over lam <= tau of a_inv(lam, tau) * S_lam,

    for every tau of degree at most d.  Returns a report dictionary with
    the first mismatch, if any.
    """
    if not 1 <= d <= MAX_ORACLE_DEGREE:
        raise ValueError("oracle degree must be between 1 and %d" % MAX_ORACLE_DEGREE)
    degrees = list(generator_degrees)
    if not degrees or any(g < 1 for g in degrees):
        raise ValueError("generator degrees must be positive")
    nvars = len(degrees)
    zero = MPoly(nvars)

    def monomials_of_degree(k):
        out = []
        exps = [0] * nvars

        def extend(i, remaining):
            if i == nvars:
                if remaining == 0:
                    out.append(tuple(exps))
                return
            for e in range(remaining // degrees[i] + 1):
                exps[i] = e
                extend(i + 1, remaining - e * degrees[i])
            exps[i] = 0

        extend(0, k)
        return out

    def type_of(exps):
        parts = []
        for g, e in zip(degrees, exps):
            if e:
                parts.append((g, e))
        return SplittingType(parts)

    x = {}
    X = {}
    for k in range(1, d + 1):
        x[k] = zero
        for exps in monomials_of_degree(k):
            term = MPoly(nvars, {exps: Fraction(1)})
            x[k] = x[k] + term
            t = type_of(exps)
            X[t] = X.get(t, zero) + term

    def S_of(t):
        product = MPoly(nvars, {(0,) * nvars: Fraction(1)})
        for b, m in t.parts:
            product = product * x[b].power_substitute(m)
        return product

    checked = 0
    for degree in range(1, d + 1):
        table_a = incidence_table(degree, "a")
        table_inv = incidence_table(degree, "a_inv")
        for tau in enumerate_types(degree):
            below = [lam for lam in enumerate_types(degree) if leq(lam, tau)]
            lhs_sum = zero
            rhs_sum = zero
            for lam in below:
                a_val = table_a.value(lam, tau)
                if a_val:
                    lhs_sum = lhs_sum + X.get(lam, zero).scale(a_val)
                inv_val = table_inv.value(lam, tau)
                if inv_val:
                    rhs_sum = rhs_sum + S_of(lam).scale(inv_val)
            checked += 1
            if S_of(tau) != lhs_sum:
                return {"ok": False, "checked": checked,
                        "failure": {"identity": "S-from-X",
                                    "type": tau.label(), "degree": degree}}
            if X.get(tau, zero) != rhs_sum:
                return {"ok": False, "checked": checked,
                        "failure": {"identity": "X-from-S",
                                    "type": tau.label(), "degree": degree}}
    return {"ok": True, "checked": checked, "failure": None}
