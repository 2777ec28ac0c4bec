"""Arithmetic in U(sl2) (x) U(sl2), the triple tensor power, and coproducts.

Tensor elements keep each leg in PBW normal form; products are legwise.
The classical coproduct is primitive on generators and extended as an
algebra morphism, so Delta of a monomial is computed as
Delta(E)^e Delta(F)^f Delta(H)^d.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .hseries import HSeries
from .pbw import (E_MONO, F_MONO, H_MONO, UNIT_MONO, Element, _iadd,
                  mono_mul)

UNIT2 = (UNIT_MONO, UNIT_MONO)
UNIT3 = (UNIT_MONO, UNIT_MONO, UNIT_MONO)


class TensorElement:
    """Finite rational linear combination of pairs of PBW monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def _raw(cls, terms: dict) -> "TensorElement":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls._raw({})

    @classmethod
    def one(cls) -> "TensorElement":
        return cls._raw({UNIT2: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def as_unit_scalar(self):
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and UNIT2 in self.terms:
            return self.terms[UNIT2]
        return None

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            _iadd(terms, mono, c)
        return TensorElement._raw(terms)

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TensorElement._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            q = Fraction(other)
            if not q:
                return TensorElement.zero()
            return TensorElement._raw({m: c * q for m, c in self.terms.items()})
        if not isinstance(other, TensorElement):
            return NotImplemented
        acc = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                c12 = c1 * c2
                for m1, d1 in mono_mul(a1, b1):
                    for m2, d2 in mono_mul(a2, b2):
                        _iadd(acc, (m1, m2), c12 * d1 * d2)
        return TensorElement._raw(acc)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative tensor power")
        out = TensorElement.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __str__(self):
        return tensor_to_str(self)

    def __repr__(self):
        return f"TensorElement({tensor_to_str(self)})"


class TensorElement3:
    """Finite rational linear combination of triples of PBW monomials;
    just enough arithmetic for the cocycle check."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def _raw(cls, terms: dict) -> "TensorElement3":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def zero(cls) -> "TensorElement3":
        return cls._raw({})

    @classmethod
    def one(cls) -> "TensorElement3":
        return cls._raw({UNIT3: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def as_unit_scalar(self):
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and UNIT3 in self.terms:
            return self.terms[UNIT3]
        return None

    def __add__(self, other):
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            _iadd(terms, mono, c)
        return TensorElement3._raw(terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement3._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            q = Fraction(other)
            return TensorElement3._raw({m: c * q for m, c in self.terms.items()} if q else {})
        acc = {}
        for (a1, a2, a3), c1 in self.terms.items():
            for (b1, b2, b3), c2 in other.terms.items():
                c12 = c1 * c2
                for m1, d1 in mono_mul(a1, b1):
                    for m2, d2 in mono_mul(a2, b2):
                        d12 = d1 * d2
                        for m3, d3 in mono_mul(a3, b3):
                            _iadd(acc, (m1, m2, m3), c12 * d12 * d3)
        return TensorElement3._raw(acc)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElement3):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self):
        if not self.terms:
            return "TensorElement3(0)"
        return "TensorElement3(<%d terms>)" % len(self.terms)


def tensor_mul(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y


def flip(x: TensorElement) -> TensorElement:
    """Exchange the two legs (legs stay normal-ordered)."""
    out = {}
    for (m1, m2), c in x.terms.items():
        _iadd(out, (m2, m1), c)
    return TensorElement._raw(out)


def outer(x: Element, y: Element) -> TensorElement:
    """x (x) y."""
    acc = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            acc[(m1, m2)] = c1 * c2
    return TensorElement._raw(acc)


def leg_embed(x: Element, leg: int) -> TensorElement:
    """x_1 = x (x) 1 or x_2 = 1 (x) x."""
    if leg == 1:
        return TensorElement._raw({(m, UNIT_MONO): c for m, c in x.terms.items()})
    if leg == 2:
        return TensorElement._raw({(UNIT_MONO, m): c for m, c in x.terms.items()})
    raise ValueError("leg must be 1 or 2")


def weight(mono_pair) -> int:
    """(e1 - f1) + (e2 - f2), the total H-adjoint weight of a monomial pair."""
    (e1, f1, _), (e2, f2, _) = mono_pair
    return (e1 - f1) + (e2 - f2)


def is_weight_zero(x: TensorElement) -> bool:
    return all(weight(m) == 0 for m in x.terms)


# ---------------------------------------------------------------------------
# coproducts

_DELTA_GEN = {
    "E": TensorElement({(E_MONO, UNIT_MONO): 1, (UNIT_MONO, E_MONO): 1}),
    "F": TensorElement({(F_MONO, UNIT_MONO): 1, (UNIT_MONO, F_MONO): 1}),
    "H": TensorElement({(H_MONO, UNIT_MONO): 1, (UNIT_MONO, H_MONO): 1}),
}

_DELTA_POW: dict = {}
_DELTA_MONO: dict = {}


def _delta_pow(gen: str, n: int) -> TensorElement:
    key = (gen, n)
    got = _DELTA_POW.get(key)
    if got is None:
        got = TensorElement.one() if n == 0 else _delta_pow(gen, n - 1) * _DELTA_GEN[gen]
        _DELTA_POW[key] = got
    return got


def _delta_mono(mono) -> TensorElement:
    got = _DELTA_MONO.get(mono)
    if got is None:
        e, f, d = mono
        got = _delta_pow("E", e) * _delta_pow("F", f) * _delta_pow("H", d)
        _DELTA_MONO[mono] = got
    return got


def coproduct(x: Element) -> TensorElement:
    """Delta(x): primitive on generators, extended multiplicatively."""
    acc = {}
    for mono, c in x.terms.items():
        for pair, d in _delta_mono(mono).terms.items():
            _iadd(acc, pair, c * d)
    return TensorElement._raw(acc)


def coproduct_leg(x: TensorElement, leg: int) -> TensorElement3:
    """Apply Delta to one leg: leg 1 gives (Delta (x) id)(x), leg 2 gives
    (id (x) Delta)(x)."""
    acc = {}
    for (m1, m2), c in x.terms.items():
        if leg == 1:
            for (a, b), d in _delta_mono(m1).terms.items():
                _iadd(acc, (a, b, m2), c * d)
        elif leg == 2:
            for (a, b), d in _delta_mono(m2).terms.items():
                _iadd(acc, (m1, a, b), c * d)
        else:
            raise ValueError("leg must be 1 or 2")
    return TensorElement3._raw(acc)


def extend_back(x: TensorElement) -> TensorElement3:
    """x (x) 1 in the triple tensor power."""
    return TensorElement3._raw({(m1, m2, UNIT_MONO): c for (m1, m2), c in x.terms.items()})


def extend_front(x: TensorElement) -> TensorElement3:
    """1 (x) x in the triple tensor power."""
    return TensorElement3._raw({(UNIT_MONO, m1, m2): c for (m1, m2), c in x.terms.items()})


def counit_leg(x: TensorElement, leg: int) -> Element:
    """Apply the counit to one leg, collapsing to a single-leg element."""
    acc = {}
    for (m1, m2), c in x.terms.items():
        if leg == 1 and m1 == UNIT_MONO:
            _iadd(acc, m2, c)
        elif leg == 2 and m2 == UNIT_MONO:
            _iadd(acc, m1, c)
    return Element._raw(acc)


# ---------------------------------------------------------------------------
# distinguished elements


def classical_r() -> TensorElement:
    """r = F (x) E - E (x) F."""
    return TensorElement({(F_MONO, E_MONO): 1, (E_MONO, F_MONO): -1})


def cartan_killing() -> TensorElement:
    """P = 2(E (x) F + F (x) E + H (x) H), i.e. Delta(I) - I (x) 1 - 1 (x) I."""
    return TensorElement({(E_MONO, F_MONO): 2, (F_MONO, E_MONO): 2,
                          (H_MONO, H_MONO): 2})


# ---------------------------------------------------------------------------
# series helpers


def series_outer(a: HSeries, b: HSeries) -> HSeries:
    """Cauchy combination of two element series into a tensor series."""
    if a.order != b.order:
        raise ValueError("series_outer needs equal truncation orders")
    out = []
    for n in range(a.order + 1):
        acc = TensorElement.zero()
        for k in range(n + 1):
            acc = acc + outer(a.coeffs[k], b.coeffs[n - k])
        out.append(acc)
    return HSeries(tuple(out), a.order)


def series_coproduct(s: HSeries) -> HSeries:
    return s.map(coproduct)


def series_flip(s: HSeries) -> HSeries:
    return s.map(flip)


# ---------------------------------------------------------------------------
# canonical renderings


def _leg_str(mono) -> str:
    e, f, d = mono
    parts = []
    for sym, exp in (("E", e), ("F", f), ("H", d)):
        if exp == 1:
            parts.append(sym)
        elif exp > 1:
            parts.append(f"{sym}^{exp}")
    return "*".join(parts) if parts else "1"


def tensor_to_str(x: TensorElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for pair in sorted(x.terms):
        c = x.terms[pair]
        body = f"({_leg_str(pair[0])} ⊗ {_leg_str(pair[1])})"
        if abs(c) != 1:
            body = f"{abs(c)} * {body}"
        parts.append((" - " if c < 0 else " + ") + body)
    head = parts[0][3:]
    if parts[0].startswith(" - "):
        head = "-" + head
    return head + "".join(parts[1:])


def tensor_to_json(x: TensorElement) -> list:
    out = []
    for (m1, m2) in sorted(x.terms):
        c = x.terms[(m1, m2)]
        out.append({
            "leg1": {"e": m1[0], "f": m1[1], "d": m1[2]},
            "leg2": {"e": m2[0], "f": m2[1], "d": m2[2]},
            "num": c.numerator, "den": c.denominator,
        })
    return out


def tensor_from_json(data) -> TensorElement:
    terms = {}
    for t in data:
        key = ((t["leg1"]["e"], t["leg1"]["f"], t["leg1"]["d"]),
               (t["leg2"]["e"], t["leg2"]["f"], t["leg2"]["d"]))
        terms[key] = Fraction(t["num"], t["den"])
    return TensorElement(terms)
