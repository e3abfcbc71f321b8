"""Finite fields GF(p) and GF(p^m).

Elements are encoded as integers in ``[0, q)``.  For prime fields this is the
residue itself; for extension fields the integer ``sum(c_j * p**j)`` encodes the
coefficient vector ``(c_0, ..., c_{m-1})`` of a polynomial reduced modulo the
field's irreducible modulus.  All arithmetic methods on :class:`Field` accept
Python ints or integer numpy arrays and broadcast like numpy ufuncs.
"""

from __future__ import annotations

import itertools
import re

import numpy as np

MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _gfp_polymod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a by b over GF(p); coefficient lists, lowest first."""
    a = _trim(list(a))
    inv_lc = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _trim(a)
    return a


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..m//2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] % p == 0:
        return False
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _gfp_polymod(modulus, list(low) + [1], p):
                return False
    return True


def find_irreducible(p: int, m: int) -> list[int]:
    """Lowest monic irreducible of degree m over GF(p).

    Candidates are ordered by the integer ``sum(c_j * p**j)`` of their lower
    coefficients, so for p=2, m=8 this yields x^8+x^4+x^3+x+1.
    """
    for code in range(p**m):
        low = [(code // p**j) % p for j in range(m)]
        if is_irreducible(low + [1], p):
            return low + [1]
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """The finite field GF(p^m).

    >>> F = Field(5)
    >>> int(F.mul(3, 4))
    2
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        if p**m > MAX_ORDER:
            raise ValueError(f"field order {p}^{m} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = p**m
        if m == 1:
            if modulus is not None and len(modulus) != 2:
                raise ValueError("prime field takes no modulus of degree != 1")
            self.modulus = None
        else:
            if modulus is None:
                modulus = find_irreducible(p, m)
            modulus = [int(c) % p for c in modulus]
            if len(_trim(list(modulus))) - 1 != m:
                raise ValueError(f"modulus degree must equal m={m}")
            if not is_irreducible(modulus, p):
                raise ValueError("modulus is reducible")
            lc_inv = pow(modulus[-1], p - 2, p)
            self.modulus = tuple(c * lc_inv % p for c in modulus)
        self._inv_table = None
        self._exp = self._log = None
        if m > 1:
            self._build_log_tables()

    # -- construction helpers -------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Parse ``"17"``, ``"251^1"`` or ``"2^8/[1,1,0,1,1,0,0,0,1]"``.

        The optional modulus is a coefficient list, lowest degree first.
        """
        mt = re.fullmatch(r"\s*(\d+)(?:\s*\^\s*(\d+))?\s*(?:/\s*\[([\d,\s]*)\])?\s*", text)
        if not mt:
            raise ValueError(f"malformed field description {text!r}")
        p, m = int(mt.group(1)), int(mt.group(2) or 1)
        modulus = [int(c) for c in mt.group(3).split(",")] if mt.group(3) else None
        return cls(p, m, modulus)

    def describe(self) -> str:
        if self.m == 1:
            return f"{self.p}^1"
        return f"{self.p}^{self.m}/[{','.join(map(str, self.modulus))}]"

    def __repr__(self):
        return f"GF({self.describe()})"

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __getstate__(self):
        return {"p": self.p, "m": self.m, "modulus": self.modulus}

    def __setstate__(self, state):
        self.__init__(state["p"], state["m"], state["modulus"])

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, value)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def to_vector(self, a: int) -> list[int]:
        """Coefficient vector (length m, lowest first) of an encoded element."""
        return [(int(a) // self.p**j) % self.p for j in range(self.m)]

    def from_vector(self, v) -> int:
        if len(v) > self.m:
            raise ValueError("vector longer than extension degree")
        return sum((int(c) % self.p) * self.p**j for j, c in enumerate(v))

    # -- extension-field internals ----------------------------------------

    def _digits(self, a):
        a = np.asarray(a, dtype=np.int64)
        return [(a // self.p**j) % self.p for j in range(self.m)]

    def _undigits(self, ds):
        out = ds[0].copy()
        for j in range(1, self.m):
            out = out + ds[j] * self.p**j
        return out

    def _mul_schoolbook(self, a, b):
        p, m = self.p, self.m
        da, db = self._digits(a), self._digits(b)
        shape = np.broadcast(da[0], db[0]).shape
        prod = [np.zeros(shape, dtype=np.int64) for _ in range(2 * m - 1)]
        for i in range(m):
            for j in range(m):
                prod[i + j] = prod[i + j] + da[i] * db[j]
        prod = [c % p for c in prod]
        mod = self.modulus
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            for j in range(m):
                prod[top - m + j] = (prod[top - m + j] - c * mod[j]) % p
        return self._undigits(prod[:m])

    def _build_log_tables(self):
        q = self.q
        order = q - 1
        factors = _prime_factors(order)

        def spow(g, e):
            r, b = np.int64(1), np.int64(g)
            while e:
                if e & 1:
                    r = self._mul_schoolbook(r, b)
                b = self._mul_schoolbook(b, b)
                e >>= 1
            return int(r)

        for g in itertools.chain([self.p], range(2, q)):
            if all(spow(g, order // r) != 1 for r in factors):
                break
        exp = np.ones(order, dtype=np.int64)
        span, gpow = 1, g
        while span < order:
            hi = min(2 * span, order)
            exp[span:hi] = self._mul_schoolbook(exp[: hi - span], gpow)
            gpow = int(self._mul_schoolbook(gpow, gpow))
            span = hi
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(order, dtype=np.int64)
        self.generator = g
        self._exp, self._log = exp, log

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        if self.p == 2:
            return np.bitwise_xor(np.asarray(a, dtype=np.int64), b)
        return self._undigits([(x + y) % self.p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        if self.m == 1:
            return (-np.asarray(a, dtype=np.int64)) % self.p
        if self.p == 2:
            return np.asarray(a, dtype=np.int64).copy()
        return self._undigits([(-x) % self.p for x in self._digits(a)])

    def sub(self, a, b):
        if self.m == 1:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return a * b % self.p
        b = np.asarray(b, dtype=np.int64)
        r = self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, r)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.m > 1:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        if a.ndim == 0:
            return np.int64(pow(int(a), self.p - 2, self.p))
        if self._inv_table is None:
            self._inv_table = self.power(np.arange(self.p, dtype=np.int64), self.p - 2)
        return self._inv_table[a]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, e: int):
        """a**e elementwise, e a non-negative Python int."""
        a = np.asarray(a, dtype=np.int64)
        if e < 0:
            return self.power(self.inv(a), -e)
        if self.m > 1:
            r = self._exp[(self._log[a] * (e % (self.q - 1))) % (self.q - 1)]
            r = np.where(a == 0, 0 if e else 1, r)
            return r if r.ndim else np.int64(r)
        result = np.ones_like(a)
        base = a % self.p
        while e:
            if e & 1:
                result = result * base % self.p
            base = base * base % self.p
            e >>= 1
        return result

    def matmul(self, A, B):
        """Matrix product over the field; A is (..., r) and B is (r, c) or (r,)."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.m == 1:
            inner = A.shape[-1]
            if inner == 0:
                return np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
            # keep partial sums below 2**63
            step = max(1, (1 << 62) // ((self.p - 1) ** 2 + 1))
            acc = None
            for s in range(0, inner, step):
                part = (A[..., s : s + step] @ B[s : s + step]) % self.p
                acc = part if acc is None else (acc + part) % self.p
            return acc
        acc = np.zeros(A.shape[:-1] + B.shape[1:], dtype=np.int64)
        for i in range(A.shape[-1]):
            acc = self.add(acc, self.mul(A[..., i][..., None] if B.ndim == 2 else A[..., i], B[i]))
        return acc

    def convolve(self, a, b):
        """Coefficient convolution, i.e. polynomial product of two 1-D arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if len(a) == 0 or len(b) == 0:
            return np.zeros(0, dtype=np.int64)
        if self.m == 1 and min(len(a), len(b)) * (self.p - 1) ** 2 < (1 << 62):
            return np.convolve(a, b) % self.p
        if len(a) < len(b):
            a, b = b, a
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        for i, bi in enumerate(b):
            if bi:
                out[i : i + len(a)] = self.add(out[i : i + len(a)], self.mul(a, bi))
        return out


class FieldElement:
    """Immutable scalar of a :class:`Field` with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        if isinstance(value, FieldElement):
            if value.field != field:
                raise ValueError("element belongs to a different field")
            value = value.value
        elif isinstance(value, (list, tuple)):
            value = field.from_vector(value)
        else:
            value = int(value)
            if field.m == 1:
                value %= field.p
            elif not 0 <= value < field.q:
                raise ValueError(f"integer code {value} out of range for {field!r}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("cannot mix elements of different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, other).value
        return NotImplemented

    def _wrap(self, v):
        return FieldElement(self.field, int(v))

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.power(self.value, int(e)))

    def inverse(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    @property
    def vector(self) -> list[int]:
        return self.field.to_vector(self.value)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == FieldElement(self.field, other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.value}"


def field_make(p: int, m: int = 1, modulus=None) -> Field:
    return Field(p, m, modulus)
