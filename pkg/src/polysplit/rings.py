"""Exact arithmetic foundation.

Every computation in the package runs over a ring described by a
:class:`RingDescriptor`: a commutative ring with exact arithmetic, Adams
operations ``psi_r``, and an optional exact-division-by-integer.  The shipped
rings are the trivial-Adams integers and rationals, sparse polynomial rings
over Z and Q with Frobenius Adams (``w -> w^r``), the univariate rational
function field over Q, a componentwise pair ring, the truncated big Witt ring
of Q, and a multivariate polynomial ring over Q used for symbolic runs.

No floating point is used anywhere; all scalars are ints or
``fractions.Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction


class MathCheckError(ValueError):
    """A mathematically guaranteed property failed to hold at runtime.

    Raised for integrality failures, non-cancelling denominators, and
    verification-suite mismatches; the CLI maps it to exit code 2.
    """

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail or {}


# ---------------------------------------------------------------------------
# number-theory and partition helpers


def divisors(n):
    """Sorted list of positive divisors of n."""
    if n < 1:
        raise ValueError("divisors requires n >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def moebius(n):
    """The Moebius function mu(n)."""
    if n < 1:
        raise ValueError("moebius requires n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def prime_omega(n):
    """Number of distinct prime factors of n."""
    count = 0
    p = 2
    while p * p <= n:
        if n % p == 0:
            count += 1
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        count += 1
    return count


def partitions(m):
    """Yield all partitions of m as multiplicity tuples (n_1, ..., n_m).

    n_k is the number of parts equal to k, so sum(k * n_k) = m.  The empty
    tuple is yielded for m = 0.
    """
    if m < 0:
        raise ValueError("partitions requires m >= 0")
    if m == 0:
        yield ()
        return

    def rec(remaining, max_part):
        if remaining == 0:
            yield []
            return
        for part in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - part, part):
                yield [part] + rest

    for parts in rec(m, m):
        mult = [0] * m
        for p in parts:
            mult[p - 1] += 1
        yield tuple(mult)


def partition_count_bounded(k, max_parts):
    """Number of partitions of k into at most max_parts parts."""
    if k == 0:
        return 1
    if max_parts <= 0:
        return 0
    # table[j] = partitions of j into parts of the sizes admitted so far,
    # counting conjugates: at most max_parts parts == largest part <= max_parts
    table = [1] + [0] * k
    for part in range(1, max_parts + 1):
        for j in range(part, k + 1):
            table[j] += table[j - part]
    return table[k]


def binomial(n, k):
    """Ordinary binomial coefficient for integer n >= 0."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# rational JSON helpers


def parse_rational(text):
    """Parse "p/q" or "p" into a Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected rational string, got {text!r}")
    return Fraction(text)


def format_rational(x):
    """Render a Fraction (or int) as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# sparse univariate polynomials


class Poly:
    """Sparse univariate polynomial with Fraction coefficients."""

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs=None, var="w"):
        self.var = var
        clean = {}
        if coeffs:
            for exp, c in coeffs.items():
                c = Fraction(c)
                if c != 0:
                    if exp < 0:
                        raise ValueError("negative exponent in polynomial")
                    clean[int(exp)] = c
        self.coeffs = clean

    @classmethod
    def const(cls, c, var="w"):
        return cls({0: Fraction(c)}, var=var)

    @classmethod
    def variable(cls, var="w"):
        return cls({1: Fraction(1)}, var=var)

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        """Degree, with the zero polynomial mapped to -1."""
        return max(self.coeffs) if self.coeffs else -1

    def leading_coeff(self):
        return self.coeffs[self.degree()] if self.coeffs else Fraction(0)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def __add__(self, other):
        out = dict(self.coeffs)
        for exp, c in other.coeffs.items():
            s = out.get(exp, Fraction(0)) + c
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        result = Poly.__new__(Poly)
        result.var = self.var
        result.coeffs = out
        return result

    def __neg__(self):
        result = Poly.__new__(Poly)
        result.var = self.var
        result.coeffs = {e: -c for e, c in self.coeffs.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        result = Poly.__new__(Poly)
        result.var = self.var
        result.coeffs = out
        return result

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return Poly({}, var=self.var)
        result = Poly.__new__(Poly)
        result.var = self.var
        result.coeffs = {e: k * c for e, k in self.coeffs.items()}
        return result

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, var=self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def substitute_power(self, r):
        """The Frobenius substitution w -> w^r."""
        if r < 1:
            raise ValueError("substitution power must be >= 1")
        result = Poly.__new__(Poly)
        result.var = self.var
        result.coeffs = {e * r: c for e, c in self.coeffs.items()}
        return result

    def evaluate(self, value):
        value = Fraction(value)
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * value**e
        return total

    def to_json(self):
        return {
            "var": self.var,
            "coeffs": {str(e): format_rational(c) for e, c in sorted(self.coeffs.items())},
        }

    @classmethod
    def from_json(cls, obj, var="w"):
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("polynomial JSON must be {'var': ..., 'coeffs': {...}}")
        return cls(
            {int(e): parse_rational(c) for e, c in obj["coeffs"].items()},
            var=obj.get("var", var),
        )

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            if e == 0:
                body = format_rational(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else format_rational(mag) + "*"
                body = f"{head}{self.var}" if e == 1 else f"{head}{self.var}^{e}"
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)


def poly_divmod(a, b):
    """Polynomial division with remainder over Q."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = Poly({}, var=a.var)
    r = a
    db, lb = b.degree(), b.leading_coeff()
    while not r.is_zero() and r.degree() >= db:
        shift = r.degree() - db
        coeff = r.leading_coeff() / lb
        term = Poly({shift: coeff}, var=a.var)
        q = q + term
        r = r - term * b
    return q, r


def poly_gcd(a, b):
    """Monic greatest common divisor over Q."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(Fraction(1) / a.leading_coeff())


# ---------------------------------------------------------------------------
# rational functions over Q


class RatFunc:
    """Univariate rational function over Q in normal form.

    The denominator is monic and coprime to the numerator; zero is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, normalize=True):
        if den is None:
            den = Poly.const(1, var=num.var)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if normalize:
            g = poly_gcd(num, den)
            if not g.is_zero() and g.degree() >= 0 and not (g.degree() == 0 and g.leading_coeff() == 1):
                num = poly_divmod(num, g)[0]
                den = poly_divmod(den, g)[0]
            lead = den.leading_coeff()
            if lead != 1:
                num = num.scale(Fraction(1) / lead)
                den = den.scale(Fraction(1) / lead)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p):
        return cls(p, Poly.const(1, var=p.var), normalize=False)

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.degree() == 0

    def as_poly(self):
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.num

    def __add__(self, other):
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RatFunc(self.num * other.num, self.den * other.den)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def substitute_power(self, r):
        return RatFunc(self.num.substitute_power(r), self.den.substitute_power(r))

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, dict) and "num" in obj:
            return cls(Poly.from_json(obj["num"]), Poly.from_json(obj["den"]))
        return cls.from_poly(Poly.from_json(obj))

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


# ---------------------------------------------------------------------------
# plain Fraction series kernels (shared by the Witt ring)


def ser_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += ai * bj
    return out

def ser_inv(f, order):
    if f[0] != 1:
        raise ValueError("series inverse requires constant term 1")
    g = [Fraction(0)] * (order + 1)
    g[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if k < len(f):
                acc += f[k] * g[n - k]
        g[n] = -acc
    return g

def ser_log(f, order):
    if f[0] != 1:
        raise ValueError("series log requires constant term 1")
    g = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n):
            acc += k * g[k] * (f[n - k] if n - k < len(f) else Fraction(0))
        fn = f[n] if n < len(f) else Fraction(0)
        g[n] = fn - acc / n
    return g

def ser_exp(f, order):
    if f and f[0] != 0:
        raise ValueError("series exp requires constant term 0")
    g = [Fraction(0)] * (order + 1)
    g[0] = Fraction(1)
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            fk = f[k] if k < len(f) else Fraction(0)
            acc += k * fk * g[n - k]
        g[n] = acc / n
    return g


# ---------------------------------------------------------------------------
# Witt vectors


class WittElement:
    """A truncated big Witt vector over Q: a series 1 + a_1 t + ... + a_N t^N.

    Ghost coordinates g_1..g_N are defined by log f = sum g_i t^i / i; Witt
    addition is series multiplication and Witt multiplication is componentwise
    multiplication of ghosts.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if not coeffs or coeffs[0] != 1:
            raise MathCheckError(
                "Witt element must have constant term 1",
                {"constant_term": str(coeffs[0]) if coeffs else None},
            )
        self.coeffs = coeffs

    @property
    def order(self):
        return len(self.coeffs) - 1

    @classmethod
    def geometric(cls, a, order):
        """(1 - a t)^{-1} truncated at the given order."""
        a = Fraction(a)
        return cls([a**k for k in range(order + 1)])

    def ghost(self):
        """Ghost coordinates (g_1, ..., g_N)."""
        logs = ser_log(self.coeffs, self.order)
        return [i * logs[i] for i in range(1, self.order + 1)]

    @classmethod
    def from_ghost(cls, ghosts):
        f = [Fraction(0)] * (len(ghosts) + 1)
        for i, g in enumerate(ghosts, start=1):
            f[i] = Fraction(g) / i
        return cls(ser_exp(f, len(ghosts)))

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a Witt element")
        return WittElement(self.coeffs[: order + 1])

    def __eq__(self, other):
        return isinstance(other, WittElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def to_json(self):
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("series JSON must be {'order': N, 'coeffs': [...]}")
        coeffs = [parse_rational(c) for c in obj["coeffs"]]
        order = int(obj.get("order", len(coeffs) - 1))
        if len(coeffs) != order + 1:
            raise ValueError("series coefficient list does not match its order")
        return cls(coeffs)

    def __repr__(self):
        return f"WittElement({[str(c) for c in self.coeffs]})"


# ---------------------------------------------------------------------------
# ring descriptors


class RingDescriptor:
    """A commutative ring with exact arithmetic and Adams operations.

    Contract: ``adams(1, x) = x``; adams is additive; for all shipped rings it
    is separable (``adams(a, adams(b, x)) = adams(ab, x)``).
    ``exact_div_by_int`` returns None (not an exception) when no exact
    quotient exists.
    """

    name = "abstract"

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        raise NotImplementedError

    def eq(self, x, y):
        raise NotImplementedError

    def is_zero(self, x):
        return self.eq(x, self.zero())

    def adams(self, r, x):
        raise NotImplementedError

    def exact_div_by_int(self, x, d):
        raise NotImplementedError

    def scalar_mul_int(self, n, x):
        return self.mul(self.from_int(n), x)

    def sum(self, elements):
        total = self.zero()
        for e in elements:
            total = self.add(total, e)
        return total

    # truncation support; only meaningful for the Witt ring
    def order_of(self, x):
        return None

    def truncate(self, x, order):
        return x

    def to_json(self, x):
        raise NotImplementedError

    def from_json(self, obj):
        raise NotImplementedError

    def show(self, x):
        return str(x)

    def _check_r(self, r):
        if r < 1:
            raise ValueError("Adams operation index must be >= 1")


class IntegerRing(RingDescriptor):
    """Z with trivial Adams operations."""

    name = "Z"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return int(n)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        return x

    def exact_div_by_int(self, x, d):
        q, r = divmod(x, d)
        return q if r == 0 else None

    def to_json(self, x):
        return int(x)

    def from_json(self, obj):
        if isinstance(obj, str):
            f = parse_rational(obj)
            if f.denominator != 1:
                raise ValueError(f"{obj!r} is not an integer")
            return f.numerator
        if isinstance(obj, int):
            return obj
        raise ValueError(f"integer JSON expected, got {obj!r}")


class RationalRing(RingDescriptor):
    """Q with trivial Adams operations."""

    name = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        return x

    def exact_div_by_int(self, x, d):
        return Fraction(x) / d

    def to_json(self, x):
        return format_rational(x)

    def from_json(self, obj):
        return parse_rational(obj)

    def show(self, x):
        return format_rational(x)


class PolyRing(RingDescriptor):
    """Sparse polynomials in one variable.

    With ``frobenius=True`` the Adams operation is w -> w^r; with
    ``frobenius=False`` the Adams operations are trivial (the counting ring
    for weighted point masses).  With ``integral=True`` exact division by an
    integer fails unless every coefficient stays integral.
    """

    def __init__(self, var="w", integral=False, frobenius=True, name=None):
        self.var = var
        self.integral = integral
        self.frobenius = frobenius
        if name is None:
            name = ("polyZ" if integral else "polyQ") + ("" if frobenius else "-trivial")
        self.name = name

    def zero(self):
        return Poly({}, var=self.var)

    def one(self):
        return Poly.const(1, var=self.var)

    def variable(self):
        return Poly.variable(var=self.var)

    def from_int(self, n):
        return Poly.const(n, var=self.var)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        return x.substitute_power(r) if self.frobenius else x

    def exact_div_by_int(self, x, d):
        y = x.scale(Fraction(1, d))
        if self.integral and not y.is_integral():
            return None
        return y

    def to_json(self, x):
        return x.to_json()

    def from_json(self, obj):
        p = Poly.from_json(obj, var=self.var)
        if self.integral and not p.is_integral():
            raise ValueError("polynomial over Z has a fractional coefficient")
        return p


class RationalFunctionRing(RingDescriptor):
    """The rational function field Q(w) with Frobenius Adams operations."""

    name = "ratfunc"

    def __init__(self, var="w"):
        self.var = var

    def zero(self):
        return RatFunc.from_poly(Poly({}, var=self.var))

    def one(self):
        return RatFunc.from_poly(Poly.const(1, var=self.var))

    def variable(self):
        return RatFunc.from_poly(Poly.variable(var=self.var))

    def from_int(self, n):
        return RatFunc.from_poly(Poly.const(n, var=self.var))

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        return x.substitute_power(r)

    def exact_div_by_int(self, x, d):
        return RatFunc(x.num.scale(Fraction(1, d)), x.den, normalize=False)

    def to_json(self, x):
        return x.to_json()

    def from_json(self, obj):
        return RatFunc.from_json(obj)


class PairRing(RingDescriptor):
    """Componentwise product of two rings; default Z x Z with trivial Adams.

    Z x Z models Z[l]/(l^2 - l) via l = (0, 1): a + b*l corresponds to
    (a, a + b).
    """

    name = "pair"

    def __init__(self, left=None, right=None):
        self.left = left or IntegerRing()
        self.right = right or IntegerRing()

    def zero(self):
        return (self.left.zero(), self.right.zero())

    def one(self):
        return (self.left.one(), self.right.one())

    def from_int(self, n):
        return (self.left.from_int(n), self.right.from_int(n))

    def add(self, x, y):
        return (self.left.add(x[0], y[0]), self.right.add(x[1], y[1]))

    def neg(self, x):
        return (self.left.neg(x[0]), self.right.neg(x[1]))

    def mul(self, x, y):
        return (self.left.mul(x[0], y[0]), self.right.mul(x[1], y[1]))

    def eq(self, x, y):
        return self.left.eq(x[0], y[0]) and self.right.eq(x[1], y[1])

    def adams(self, r, x):
        self._check_r(r)
        return (self.left.adams(r, x[0]), self.right.adams(r, x[1]))

    def exact_div_by_int(self, x, d):
        a = self.left.exact_div_by_int(x[0], d)
        b = self.right.exact_div_by_int(x[1], d)
        if a is None or b is None:
            return None
        return (a, b)

    def to_json(self, x):
        return [self.left.to_json(x[0]), self.right.to_json(x[1])]

    def from_json(self, obj):
        if not isinstance(obj, (list, tuple)) or len(obj) != 2:
            raise ValueError("pair-ring JSON must be a two-element array")
        return (self.left.from_json(obj[0]), self.right.from_json(obj[1]))

    def show(self, x):
        return f"({self.left.show(x[0])}, {self.right.show(x[1])})"


class WittRing(RingDescriptor):
    """The big Witt ring of Q, truncated at a fixed order.

    Addition is power-series multiplication; multiplication is componentwise
    on ghost coordinates; ``adams(r, f)`` reindexes ghosts by r and therefore
    lands in order floor(N / r).  Binary operations require equal orders.
    """

    name = "witt"

    def __init__(self, order):
        if order < 0:
            raise ValueError("Witt truncation order must be >= 0")
        self.order = order

    def _require_same_order(self, x, y):
        if x.order != y.order:
            raise ValueError("Witt operations require equal truncation orders")

    def zero(self):
        return WittElement([Fraction(1)] + [Fraction(0)] * self.order)

    def one(self):
        return WittElement.geometric(1, self.order)

    def from_int(self, n):
        return WittElement.from_ghost([Fraction(n)] * self.order)

    def add(self, x, y):
        self._require_same_order(x, y)
        return WittElement(ser_mul(x.coeffs, y.coeffs, x.order))

    def neg(self, x):
        return WittElement(ser_inv(x.coeffs, x.order))

    def mul(self, x, y):
        self._require_same_order(x, y)
        gx, gy = x.ghost(), y.ghost()
        return WittElement.from_ghost([a * b for a, b in zip(gx, gy)])

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        if r == 1:
            return x
        g = x.ghost()
        return WittElement.from_ghost([g[r * i - 1] for i in range(1, x.order // r + 1)])

    def exact_div_by_int(self, x, d):
        # n-th root of the series: exp(log(x) / d), always exact over Q
        logs = ser_log(x.coeffs, x.order)
        return WittElement(ser_exp([c / d for c in logs], x.order))

    def order_of(self, x):
        return x.order

    def truncate(self, x, order):
        return x.truncate(order)

    def to_json(self, x):
        return x.to_json()

    def from_json(self, obj):
        return WittElement.from_json(obj)


# ---------------------------------------------------------------------------
# multivariate polynomials over Q


class MPoly:
    """Multivariate polynomial over Q: map from exponent tuples to Fractions."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    if len(mono) != nvars:
                        raise ValueError("exponent tuple of wrong length")
                    clean[tuple(mono)] = c
        self.terms = clean

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def variable(cls, nvars, i):
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        result = MPoly.__new__(MPoly)
        result.nvars = self.nvars
        result.terms = out
        return result

    def __neg__(self):
        result = MPoly.__new__(MPoly)
        result.nvars = self.nvars
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        result = MPoly.__new__(MPoly)
        result.nvars = self.nvars
        result.terms = out
        return result

    def scale(self, c):
        c = Fraction(c)
        result = MPoly.__new__(MPoly)
        result.nvars = self.nvars
        result.terms = {} if c == 0 else {m: k * c for m, k in self.terms.items()}
        return result

    def power_substitute(self, r):
        """Raise every variable to the r-th power (monomial Adams)."""
        result = MPoly.__new__(MPoly)
        result.nvars = self.nvars
        result.terms = {tuple(e * r for e in m): c for m, c in self.terms.items()}
        return result

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def to_string(self, names):
        if not self.terms:
            return "0"
        def mono_key(m):
            return (-sum(m), tuple(-e for e in m))
        pieces = []
        for mono in sorted(self.terms, key=mono_key):
            c = self.terms[mono]
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.terms!r})"


class MPolyRing(RingDescriptor):
    """Multivariate polynomials over Q.

    ``adams_mode="trivial"`` gives the symbolic binomial-ring context;
    ``adams_mode="monomial"`` substitutes every variable by its r-th power,
    the Adams structure of a free commutative monoid algebra.
    """

    def __init__(self, nvars, adams_mode="trivial", names=None):
        if adams_mode not in ("trivial", "monomial"):
            raise ValueError("adams_mode must be 'trivial' or 'monomial'")
        self.nvars = nvars
        self.adams_mode = adams_mode
        self.names = list(names) if names else [f"x_{i + 1}" for i in range(nvars)]
        self.name = f"mpoly{nvars}-{adams_mode}"

    def zero(self):
        return MPoly(self.nvars)

    def one(self):
        return MPoly.const(self.nvars, 1)

    def variable(self, i):
        return MPoly.variable(self.nvars, i)

    def from_int(self, n):
        return MPoly.const(self.nvars, n)

    def add(self, x, y):
        return x + y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def eq(self, x, y):
        return x == y

    def adams(self, r, x):
        self._check_r(r)
        if self.adams_mode == "trivial":
            return x
        return x.power_substitute(r)

    def exact_div_by_int(self, x, d):
        return x.scale(Fraction(1, d))

    def to_json(self, x):
        return {
            "vars": self.names,
            "terms": [
                {"exponents": {str(i + 1): e for i, e in enumerate(m) if e},
                 "coeff": format_rational(c)}
                for m, c in sorted(x.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
            ],
        }

    def from_json(self, obj):
        terms = {}
        for t in obj["terms"]:
            mono = [0] * self.nvars
            for i, e in t.get("exponents", {}).items():
                mono[int(i) - 1] = int(e)
            terms[tuple(mono)] = parse_rational(t["coeff"])
        return MPoly(self.nvars, terms)

    def show(self, x):
        return x.to_string(self.names)


# ---------------------------------------------------------------------------
# generic truncated series over a ring descriptor


class TruncatedSeries:
    """A power series over a ring descriptor, truncated at a fixed order.

    Operations never consult coefficients beyond the order.  ``exp`` requires
    constant term 0 and ``log``/``inverse`` require constant term 1; both need
    the coefficient ring to divide exactly by integers up to the order.
    """

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, coeffs, order=None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("series order must be >= 0")
        while len(coeffs) < order + 1:
            coeffs.append(ring.zero())
        self.ring = ring
        self.order = order
        self.coeffs = coeffs[: order + 1]

    @classmethod
    def zero(cls, ring, order):
        return cls(ring, [], order=order)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, [ring.one()], order=order)

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncatedSeries(
            self.ring,
            [self.ring.add(a, b) for a, b in zip(self.coeffs, other.coeffs)],
            order=order,
        )

    def __neg__(self):
        return TruncatedSeries(self.ring, [self.ring.neg(a) for a in self.coeffs], order=self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [self.ring.zero() for _ in range(order + 1)]
        for i in range(order + 1):
            a = self.coeffs[i]
            if self.ring.is_zero(a):
                continue
            for j in range(order + 1 - i):
                out[i + j] = self.ring.add(out[i + j], self.ring.mul(a, other.coeffs[j]))
        return TruncatedSeries(self.ring, out, order=order)

    def truncate(self, order):
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.ring, self.coeffs[: order + 1], order=order)

    def _div_int(self, x, n):
        y = self.ring.exact_div_by_int(x, n)
        if y is None:
            raise ValueError(f"series coefficient not divisible by {n}")
        return y

    def inverse(self):
        if not self.ring.eq(self.coeffs[0], self.ring.one()):
            raise ValueError("series inverse requires constant term 1")
        out = [self.ring.zero() for _ in range(self.order + 1)]
        out[0] = self.ring.one()
        for n in range(1, self.order + 1):
            acc = self.ring.zero()
            for k in range(1, n + 1):
                acc = self.ring.add(acc, self.ring.mul(self.coeffs[k], out[n - k]))
            out[n] = self.ring.neg(acc)
        return TruncatedSeries(self.ring, out, order=self.order)

    def exp(self):
        if not self.ring.is_zero(self.coeffs[0]):
            raise ValueError("series exp requires constant term 0")
        out = [self.ring.zero() for _ in range(self.order + 1)]
        out[0] = self.ring.one()
        for n in range(1, self.order + 1):
            acc = self.ring.zero()
            for k in range(1, n + 1):
                term = self.ring.mul(self.ring.scalar_mul_int(k, self.coeffs[k]), out[n - k])
                acc = self.ring.add(acc, term)
            out[n] = self._div_int(acc, n)
        return TruncatedSeries(self.ring, out, order=self.order)

    def log(self):
        if not self.ring.eq(self.coeffs[0], self.ring.one()):
            raise ValueError("series log requires constant term 1")
        out = [self.ring.zero() for _ in range(self.order + 1)]
        for n in range(1, self.order + 1):
            acc = self.ring.zero()
            for k in range(1, n):
                term = self.ring.mul(self.ring.scalar_mul_int(k, out[k]), self.coeffs[n - k])
                acc = self.ring.add(acc, term)
            out[n] = self.ring.sub(self.coeffs[n], self._div_int(acc, n))
        return TruncatedSeries(self.ring, out, order=self.order)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and all(self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def to_json(self):
        return {"order": self.order, "coeffs": [self.ring.to_json(c) for c in self.coeffs]}

    def __repr__(self):
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"


# ---------------------------------------------------------------------------
# ring registry for the CLI and JSON value files


def ring_from_token(token, order=None):
    """Resolve a CLI ring token to a descriptor.

    The Witt ring needs a truncation order, taken from the values file.
    """
    if token == "Z":
        return IntegerRing()
    if token == "Q":
        return RationalRing()
    if token == "polyZ":
        return PolyRing(integral=True)
    if token == "polyQ":
        return PolyRing(integral=False)
    if token == "ratfunc":
        return RationalFunctionRing()
    if token == "pair":
        return PairRing()
    if token == "witt":
        return WittRing(order if order is not None else 8)
    raise ValueError(f"unknown ring token {token!r}")


RING_TOKENS = ("Z", "Q", "polyZ", "polyQ", "ratfunc", "pair", "witt")
