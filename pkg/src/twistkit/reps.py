"""Finite-dimensional spin representations over exact rationals.

The spin-j module (dimension 2j+1, j half-integral, stored as the integer
two_j) uses the rational normalization

    rho(H) e_m = m e_m,   rho(E) e_m = (j-m) e_{m+1},
    rho(F) e_m = (j+m)/2 e_{m-1},

with basis ordered e_j, e_{j-1}, ..., e_{-j}.  No entry ever involves a
square root, at the cost of a non-unitary basis; every check in this
package is an algebraic identity, so the basis choice is immaterial, but
matrix output differs from square-root-normalized conventions by a
diagonal similarity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hseries import HSeries
from .pbw import Element
from .tensor import TensorElement, TensorElement3


def _zeros(n):
    return [[Fraction(0)] * n for _ in range(n)]


def _identity(n):
    m = _zeros(n)
    for i in range(n):
        m[i][i] = Fraction(1)
    return tuple(tuple(r) for r in m)


def _freeze(m):
    return tuple(tuple(r) for r in m)


def _mat_mul(a, b):
    n = len(a)
    p = len(b[0])
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        ai = a[i]
        row = out[i]
        for k in range(len(b)):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        row[j] += c * bk[j]
    return _freeze(out)


def _mat_add(a, b, scale=Fraction(1)):
    return _freeze([[a[i][j] + scale * b[i][j] for j in range(len(a[0]))]
                    for i in range(len(a))])


def _kron(a, b):
    na, nb = len(a), len(b)
    out = [[Fraction(0)] * (na * nb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(na):
            c = a[i][j]
            if c:
                for k in range(nb):
                    for l in range(nb):
                        if b[k][l]:
                            out[i * nb + k][j * nb + l] = c * b[k][l]
    return _freeze(out)


@dataclass(frozen=True)
class SpinRep:
    """The spin-(two_j/2) irreducible representation with rational entries."""

    two_j: int
    dim: int
    h: tuple
    e: tuple
    f: tuple

    def casimir_scalar(self) -> Fraction:
        j = Fraction(self.two_j, 2)
        return j * (j + 1)


@lru_cache(maxsize=None)
def spin_rep(two_j: int) -> SpinRep:
    if two_j < 0:
        raise ValueError("two_j must be nonnegative")
    dim = two_j + 1
    j = Fraction(two_j, 2)
    h = _zeros(dim)
    e = _zeros(dim)
    f = _zeros(dim)
    for i in range(dim):        # column i holds e_m with m = j - i
        h[i][i] = j - i
        if i >= 1:              # rho(E) e_m = (j - m) e_{m+1}
            e[i - 1][i] = Fraction(i)
        if i + 1 < dim:         # rho(F) e_m = (j + m)/2 e_{m-1}
            f[i + 1][i] = Fraction(two_j - i, 2)
    return SpinRep(two_j, dim, _freeze(h), _freeze(e), _freeze(f))


@lru_cache(maxsize=None)
def _mono_matrix(two_j: int, mono) -> tuple:
    rep = spin_rep(two_j)
    e, f, d = mono
    if e + f + d == 0:
        return _identity(rep.dim)
    if e:
        return _mat_mul(rep.e, _mono_matrix(two_j, (e - 1, f, d)))
    if f:
        return _mat_mul(rep.f, _mono_matrix(two_j, (0, f - 1, d)))
    return _mat_mul(rep.h, _mono_matrix(two_j, (0, 0, d - 1)))


def element_matrix(x: Element, rep: SpinRep):
    out = _zeros(rep.dim)
    for mono, c in sorted(x.terms.items()):
        m = _mono_matrix(rep.two_j, mono)
        out = [[out[i][j] + c * m[i][j] for j in range(rep.dim)]
               for i in range(rep.dim)]
    return _freeze(out)


class RepMatrix:
    """A square matrix whose entries are truncated scalar series, stored
    as one exact rational matrix per h-order."""

    __slots__ = ("dim", "order", "coeffs")

    def __init__(self, dim: int, coeffs):
        self.dim = dim
        self.order = len(coeffs) - 1
        self.coeffs = tuple(coeffs)

    @classmethod
    def identity(cls, dim: int, order: int) -> "RepMatrix":
        zero = _freeze(_zeros(dim))
        return cls(dim, (_identity(dim),) + (zero,) * order)

    @classmethod
    def zero(cls, dim: int, order: int) -> "RepMatrix":
        z = _freeze(_zeros(dim))
        return cls(dim, (z,) * (order + 1))

    def entry(self, i: int, j: int) -> HSeries:
        return HSeries(tuple(m[i][j] for m in self.coeffs), self.order)

    def __mul__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        if self.order != other.order or self.dim != other.dim:
            raise ValueError("RepMatrix mismatch")
        out = []
        for n in range(self.order + 1):
            acc = _zeros(self.dim)
            for k in range(n + 1):
                m = _mat_mul(self.coeffs[k], other.coeffs[n - k])
                acc = [[acc[i][j] + m[i][j] for j in range(self.dim)]
                       for i in range(self.dim)]
            out.append(_freeze(acc))
        return RepMatrix(self.dim, out)

    def __add__(self, other):
        if self.order != other.order or self.dim != other.dim:
            raise ValueError("RepMatrix mismatch")
        return RepMatrix(self.dim, tuple(_mat_add(a, b)
                                         for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if self.order != other.order or self.dim != other.dim:
            raise ValueError("RepMatrix mismatch")
        return RepMatrix(self.dim, tuple(_mat_add(a, b, Fraction(-1))
                                         for a, b in zip(self.coeffs, other.coeffs)))

    def __eq__(self, other):
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return (self.dim == other.dim and self.order == other.order
                and self.coeffs == other.coeffs)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def is_zero(self) -> bool:
        return all(all(all(c == 0 for c in row) for row in m) for m in self.coeffs)

    def is_identity(self) -> bool:
        return self == RepMatrix.identity(self.dim, self.order)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "order": self.order,
            "matrix": [[[{"num": m[i][j].numerator, "den": m[i][j].denominator}
                         for m in self.coeffs]
                        for j in range(self.dim)]
                       for i in range(self.dim)],
        }

    def render_text(self) -> str:
        cells = [[str(self.entry(i, j)) for j in range(self.dim)]
                 for i in range(self.dim)]
        widths = [max(len(cells[i][j]) for i in range(self.dim))
                  for j in range(self.dim)]
        lines = []
        for row in cells:
            lines.append("[ " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " ]")
        return "\n".join(lines)


def _as_tensor_series(x, order=None) -> HSeries:
    if isinstance(x, HSeries):
        return x
    if isinstance(x, (TensorElement, TensorElement3)):
        return HSeries.constant(x, order if order is not None else 0)
    raise ValueError("expected a tensor element or a series of them")


def evaluate(x, rep1: SpinRep, rep2: SpinRep) -> RepMatrix:
    """Legwise algebra-morphism evaluation of a tensor series into the
    Kronecker-product representation."""
    s = _as_tensor_series(x)
    dim = rep1.dim * rep2.dim
    out = []
    for c in s.coeffs:
        acc = _zeros(dim)
        for (m1, m2), coef in sorted(c.terms.items()):
            kr = _kron(_mono_matrix(rep1.two_j, m1), _mono_matrix(rep2.two_j, m2))
            acc = [[acc[i][j] + coef * kr[i][j] for j in range(dim)]
                   for i in range(dim)]
        out.append(_freeze(acc))
    return RepMatrix(dim, out)


def evaluate3(x, rep1: SpinRep, rep2: SpinRep, rep3: SpinRep) -> RepMatrix:
    """Three-leg analogue of evaluate, for the cocycle check."""
    s = _as_tensor_series(x)
    dim = rep1.dim * rep2.dim * rep3.dim
    out = []
    for c in s.coeffs:
        acc = _zeros(dim)
        for (m1, m2, m3), coef in sorted(c.terms.items()):
            kr = _kron(_kron(_mono_matrix(rep1.two_j, m1),
                             _mono_matrix(rep2.two_j, m2)),
                       _mono_matrix(rep3.two_j, m3))
            acc = [[acc[i][j] + coef * kr[i][j] for j in range(dim)]
                   for i in range(dim)]
        out.append(_freeze(acc))
    return RepMatrix(dim, out)


def semi_universal(cand, order: int | None = None):
    """Apply spin-1/2 to the first leg only: a 2x2 array of Element
    series (the second leg stays universal)."""
    series = cand.series if hasattr(cand, "series") else cand
    if order is not None:
        series = series.pad_to(order) if order > series.order else series.truncate(order)
    half = spin_rep(1)
    out = [[[Element.zero() for _ in range(series.order + 1)] for _ in range(2)]
           for _ in range(2)]
    for k, c in enumerate(series.coeffs):
        for (m1, m2), coef in sorted(c.terms.items()):
            mat = _mono_matrix(half.two_j, m1)
            rest = Element({m2: 1})
            for i in range(2):
                for j in range(2):
                    if mat[i][j]:
                        out[i][j][k] = out[i][j][k] + rest * (coef * mat[i][j])
    return [[HSeries(tuple(out[i][j]), series.order) for j in range(2)]
            for i in range(2)]


def rep_unitarity_check(cand, order: int):
    """sigma(F) F = 1 evaluated in spin-1/2 (x) spin-1/2."""
    from .report import VerificationReport
    from .tensor import series_flip

    s = cand.at_order(order).series
    half = spin_rep(1)
    prod = evaluate(series_flip(s) * s, half, half)
    defect = prod - RepMatrix.identity(prod.dim, prod.order)
    bad = next((k for k, m in enumerate(defect.coeffs)
                if any(any(c != 0 for c in row) for row in m)), None)
    report = VerificationReport()
    report.add("unitarity in 1/2 (x) 1/2", bad is None, bad)
    return report
