"""Generalised Reed-Solomon codes, encoding and the fixed-weight error channel.

Words are plain integer numpy arrays of field-element codes.  Received words
are kept in transmitted (column-multiplier scaled) form; decoders divide the
multipliers out with :meth:`GrsCode.normalize` on entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .ff import Field
from .poly import Poly, lagrange_basis


class GrsCode:
    """The [n, k, n-k+1] GRS code with evaluation points ``alphas`` and
    column multipliers ``betas``.
    """

    def __init__(self, field: Field, n: int, k: int, alphas, betas=None):
        alphas = np.array([int(a) for a in alphas], dtype=np.int64)
        betas = np.ones(n, dtype=np.int64) if betas is None else np.array([int(b) for b in betas], dtype=np.int64)
        if not 1 <= k <= n:
            raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
        if n > field.q:
            raise ValueError(f"n={n} exceeds field size {field.q}")
        if len(alphas) != n or len(betas) != n:
            raise ValueError("need exactly n evaluation points and n column multipliers")
        if np.any((alphas < 0) | (alphas >= field.q)) or np.any((betas < 0) | (betas >= field.q)):
            raise ValueError("field element code out of range")
        if len(np.unique(alphas)) != n:
            raise ValueError("evaluation points must be distinct")
        if np.any(betas == 0):
            raise ValueError("column multipliers must be nonzero")
        alphas.flags.writeable = False
        betas.flags.writeable = False
        self.field, self.n, self.k = field, n, k
        self.alphas, self.betas = alphas, betas

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def __repr__(self):
        return f"GrsCode([{self.n},{self.k},{self.d}] over {self.field!r})"

    @cached_property
    def G(self) -> Poly:
        return Poly.from_roots(self.field, self.alphas)

    @cached_property
    def _lagrange(self) -> tuple[np.ndarray, np.ndarray]:
        return lagrange_basis(self.field, self.alphas)

    @property
    def zetas(self) -> np.ndarray:
        """zeta_i = prod_{j != i} (alpha_i - alpha_j)**-1."""
        return self._lagrange[1]

    @cached_property
    def _vandermonde(self) -> np.ndarray:
        # (k, n): row j holds alpha_i**j
        F = self.field
        V = np.ones((self.k, self.n), dtype=np.int64)
        for j in range(1, self.k):
            V[j] = F.mul(V[j - 1], self.alphas)
        return V

    def encode(self, f) -> np.ndarray:
        """Codeword (beta_i f(alpha_i))_i of a message polynomial of degree < k."""
        if not isinstance(f, Poly):
            f = Poly(self.field, f)
        if f.degree >= self.k:
            raise ValueError(f"message degree {f.degree} is not below k={self.k}")
        return self.field.mul(self.betas, f(self.alphas))

    def encode_many(self, messages: np.ndarray) -> np.ndarray:
        """Encode each row of a (m, k) array of message coefficients."""
        return self.field.mul(self.field.matmul(messages, self._vandermonde), self.betas)

    def normalize(self, received) -> np.ndarray:
        return self.field.div(np.asarray(received, dtype=np.int64), self.betas)

    def lagrangian(self, values) -> Poly:
        """Polynomial of degree < n taking ``values[i]`` at alpha_i."""
        F = self.field
        basis, w = self._lagrange
        return Poly._raw(F, F.matmul(F.mul(np.asarray(values, dtype=np.int64), w), basis))

    def power_lagrangians(self, r_norm, ell: int) -> list[Poly]:
        """R<1>..R<ell>: the Lagrangians through the powered normalised word."""
        if ell < 1:
            raise ValueError("ell must be >= 1")
        F = self.field
        r = np.asarray(r_norm, dtype=np.int64)
        basis, w = self._lagrange
        powers = np.empty((ell, self.n), dtype=np.int64)
        powers[0] = r
        for t in range(1, ell):
            powers[t] = F.mul(powers[t - 1], r)
        R = F.matmul(F.mul(powers, w), basis)
        return [Poly._raw(F, R[t]) for t in range(ell)]

    def locator(self, positions) -> Poly:
        """prod_{j in positions} (x - alpha_j)."""
        return Poly.from_roots(self.field, self.alphas[np.asarray(list(positions), dtype=np.int64)])

    def random_message(self, rng: np.random.Generator) -> Poly:
        return Poly(self.field, rng.integers(0, self.field.q, self.k))

    def distance(self, a, b) -> int:
        return int(np.count_nonzero(np.asarray(a) != np.asarray(b)))


def grs_make(field: Field, n: int, k: int, alphas, betas=None) -> GrsCode:
    return GrsCode(field, n, k, alphas, betas)


@dataclass(frozen=True)
class ErrorPattern:
    """Normalised error: ``values[i]`` is added (times beta) at ``support[i]``."""

    support: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.support) != len(self.values):
            raise ValueError("support and values differ in length")
        if len(set(self.support)) != len(self.support):
            raise ValueError("repeated error position")
        if any(v == 0 for v in self.values):
            raise ValueError("error values must be nonzero on the support")

    @property
    def weight(self) -> int:
        return len(self.support)

    def vector(self, n: int) -> np.ndarray:
        e = np.zeros(n, dtype=np.int64)
        e[list(self.support)] = self.values
        return e

    def locator(self, code: GrsCode) -> Poly:
        return code.locator(self.support)

    @classmethod
    def from_vector(cls, e) -> "ErrorPattern":
        e = np.asarray(e)
        supp = np.flatnonzero(e)
        return cls(tuple(int(i) for i in supp), tuple(int(v) for v in e[supp]))


def sample_error(code: GrsCode, weight: int, rng: np.random.Generator) -> ErrorPattern:
    """Uniform support of the given size, i.i.d. uniform nonzero values."""
    if not 0 <= weight <= code.n:
        raise ValueError(f"error weight {weight} outside [0, {code.n}]")
    support = np.sort(rng.choice(code.n, size=weight, replace=False))
    values = rng.integers(1, code.field.q, size=weight)
    return ErrorPattern(tuple(int(i) for i in support), tuple(int(v) for v in values))


def apply_error(code: GrsCode, word, error: ErrorPattern) -> np.ndarray:
    """r_i = c_i + beta_i e_i."""
    word = np.asarray(word, dtype=np.int64)
    if len(word) != code.n:
        raise ValueError("word length differs from n")
    F = code.field
    return F.add(word, F.mul(code.betas, error.vector(code.n)))
