"""Dense univariate polynomials over a :class:`~powerdecoding.ff.Field`."""

from __future__ import annotations

import numpy as np

from .ff import Field, FieldElement

NEG_INF = float("-inf")


def _strip(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if len(nz) else c[:0]


class Poly:
    """Immutable polynomial; ``coeffs[i]`` is the coefficient of x**i.

    The zero polynomial has an empty coefficient vector and degree ``-inf``,
    so comparisons such as ``p.degree <= bound`` hold vacuously for it.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        if isinstance(coeffs, Poly):
            coeffs = coeffs.coeffs
        c = np.array([int(x) for x in coeffs] if isinstance(coeffs, (list, tuple)) else coeffs, dtype=np.int64)
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if field.m == 1:
            c %= field.p
        elif c.size and (c.min() < 0 or c.max() >= field.q):
            raise ValueError("coefficient codes out of range")
        c = _strip(c)
        c.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def _raw(cls, field: Field, c: np.ndarray) -> "Poly":
        # trusted constructor: c already reduced
        self = object.__new__(cls)
        c = _strip(np.asarray(c, dtype=np.int64))
        c.flags.writeable = False
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", c)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls._raw(field, np.zeros(0, dtype=np.int64))

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls._raw(field, np.ones(1, dtype=np.int64))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff=1) -> "Poly":
        c = np.zeros(degree + 1, dtype=np.int64)
        c[-1] = int(FieldElement(field, coeff))
        return cls._raw(field, c)

    @classmethod
    def x(cls, field: Field) -> "Poly":
        return cls.monomial(field, 1)

    @classmethod
    def from_roots(cls, field: Field, roots) -> "Poly":
        """Monic product of (x - r) over the given roots."""
        c = np.ones(1, dtype=np.int64)
        for r in np.asarray(roots, dtype=np.int64).ravel():
            c = field.convolve(c, np.array([field.neg(r), 1], dtype=np.int64))
        return cls._raw(field, c)

    # -- basic properties ---------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def lc(self) -> FieldElement:
        return FieldElement(self.field, self.coeffs[-1] if len(self.coeffs) else 0)

    def coeff(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs[i] if 0 <= i < len(self.coeffs) else 0)

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self.scale(self.field.inv(self.coeffs[-1]))

    def scale(self, c) -> "Poly":
        return Poly._raw(self.field, self.field.mul(self.coeffs, int(c)))

    def shift(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Poly._raw(self.field, np.concatenate([np.zeros(k, dtype=np.int64), self.coeffs]))

    def truncate(self, k: int) -> "Poly":
        """Reduce modulo x**k."""
        return Poly._raw(self.field, self.coeffs[: max(k, 0)])

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    # -- arithmetic ---------------------------------------------------------

    def _other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.field != self.field:
                raise ValueError("cannot mix polynomials over different fields")
            return other
        if isinstance(other, (int, np.integer, FieldElement)):
            return Poly(self.field, [int(FieldElement(self.field, other))])
        return NotImplemented

    def _pad(self, a, b):
        L = max(len(a), len(b))
        return np.pad(a, (0, L - len(a))), np.pad(b, (0, L - len(b)))

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b = self._pad(self.coeffs, o.coeffs)
        return Poly._raw(self.field, self.field.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        a, b = self._pad(self.coeffs, o.coeffs)
        return Poly._raw(self.field, self.field.sub(a, b))

    def __rsub__(self, other):
        o = self._other(other)
        return o if o is NotImplemented else o - self

    def __neg__(self):
        return Poly._raw(self.field, self.field.neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, np.integer, FieldElement)):
            return self.scale(FieldElement(self.field, other))
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Poly._raw(self.field, self.field.convolve(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly.one(self.field), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        if b.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = self.coeffs.copy()
        db = len(b.coeffs) - 1
        if len(r) - 1 < db:
            return Poly.zero(F), self
        inv_lc = F.inv(b.coeffs[-1])
        quot = np.zeros(len(r) - db, dtype=np.int64)
        bc = b.coeffs
        for i in range(len(r) - 1 - db, -1, -1):
            c = r[i + db]
            if c:
                c = F.mul(c, inv_lc)
                quot[i] = c
                r[i : i + db + 1] = F.sub(r[i : i + db + 1], F.mul(bc, c))
        return Poly._raw(F, quot), Poly._raw(F, r[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)
        if isinstance(other, (int, np.integer, FieldElement)):
            return self == self._other(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, tuple(self.coeffs.tolist())))

    def __call__(self, x0):
        """Horner evaluation at a scalar or an integer array of points."""
        if isinstance(x0, FieldElement):
            if x0.field != self.field:
                raise ValueError("evaluation point from a different field")
            return FieldElement(self.field, int(self._horner(x0.value)))
        scalar = np.ndim(x0) == 0
        out = self._horner(np.asarray(x0, dtype=np.int64))
        return FieldElement(self.field, int(out)) if scalar else out

    def _horner(self, x):
        F = self.field
        acc = np.zeros(np.shape(x), dtype=np.int64)
        for c in self.coeffs[::-1]:
            acc = F.add(F.mul(acc, x), c)
        return acc

    def rev(self, degree: int | None = None) -> "Poly":
        """Coefficient reversal x**d * p(1/x), with d = deg p unless given."""
        if self.is_zero:
            raise ValueError("reversal of the zero polynomial is undefined")
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        c = np.concatenate([self.coeffs, np.zeros(d - self.degree, dtype=np.int64)])
        return Poly._raw(self.field, c[::-1].copy())

    def series_inv(self, precision: int) -> "Poly":
        """Power-series inverse modulo x**precision (Newton iteration)."""
        if precision < 1:
            raise ValueError("precision must be >= 1")
        if self.is_zero or self.coeffs[0] == 0:
            raise ZeroDivisionError("series inverse needs a nonzero constant term")
        g = Poly._raw(self.field, np.array([self.field.inv(self.coeffs[0])], dtype=np.int64))
        prec = 1
        while prec < precision:
            prec = min(2 * prec, precision)
            e = (self.truncate(prec) * g).truncate(prec)
            # g(2 - e) written so that no integer 2 leaks into an extension field
            g = (g + g * (Poly.one(self.field) - e)).truncate(prec)
        return g

    def __repr__(self):
        return f"Poly({self.tolist()})"

    @classmethod
    def interpolate(cls, field: Field, xs, ys) -> "Poly":
        """Unique polynomial of degree < len(xs) through the points (xs[i], ys[i])."""
        xs = np.asarray([int(FieldElement(field, x)) for x in xs], dtype=np.int64)
        ys = np.asarray([int(FieldElement(field, y)) for y in ys], dtype=np.int64)
        if len(xs) == 0:
            raise ValueError("interpolation needs at least one point")
        if len(xs) != len(ys):
            raise ValueError("xs and ys differ in length")
        basis, weights = lagrange_basis(field, xs)
        return cls._raw(field, field.matmul(field.mul(ys, weights), basis))


def lagrange_basis(field: Field, xs) -> tuple[np.ndarray, np.ndarray]:
    """Barycentric data for distinct nodes xs.

    Returns ``(basis, weights)`` where row i of ``basis`` holds the coefficients
    of G/(x - xs[i]) with G = prod(x - xs[j]), and ``weights[i]`` is
    ``prod_{j != i} (xs[i] - xs[j])**-1``.  The Lagrange polynomial through
    values y is then ``sum_i y_i * weights[i] * basis[i]``.  Cost O(n^2).
    """
    xs = np.asarray(xs, dtype=np.int64)
    n = len(xs)
    if len(np.unique(xs)) != n:
        raise ValueError("interpolation nodes must be distinct")
    G = Poly.from_roots(field, xs).coeffs
    basis = np.zeros((n, n), dtype=np.int64)
    # synthetic division of G by (x - xs[i]) for all i at once
    acc = np.full(n, G[n], dtype=np.int64)
    basis[:, n - 1] = acc
    for j in range(n - 1, 0, -1):
        acc = field.add(G[j], field.mul(acc, xs))
        basis[:, j - 1] = acc
    # G'(xs[i]) = basis_i(xs[i])
    deriv = np.zeros(n, dtype=np.int64)
    for j in range(n - 1, -1, -1):
        deriv = field.add(field.mul(deriv, xs), basis[:, j])
    return basis, field.inv(deriv)


def poly_interpolate(points) -> Poly:
    """Interpolate a list of (x, y) FieldElement pairs."""
    points = list(points)
    if not points:
        raise ValueError("interpolation needs at least one point")
    field = points[0][0].field
    return Poly.interpolate(field, [x for x, _ in points], [y for _, y in points])
