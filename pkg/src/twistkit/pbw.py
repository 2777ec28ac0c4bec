"""Exact arithmetic in the universal enveloping algebra of sl(2).

Generators H, E, F satisfy [H,E] = E, [H,F] = -F, [E,F] = H.  Elements
are rational linear combinations of normal-ordered monomials E^e F^f H^d
(all E factors left of all F factors left of all H factors); products
reduce to that form with the exchange relations

    phi(H) E^n = E^n phi(H+n),    phi(H) F^n = F^n phi(H-n)

and the single commutator rewrite F E = E F - H.  The quadratic Casimir
is I = 2EF + H(H-1) = 2FE + H(H+1); the Casimir-adapted spanning set
{H^a I^b E^c} u {H^r I^s F^t} is available through to_casimir_basis /
from_casimir_basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from numbers import Rational

UNIT_MONO = (0, 0, 0)
E_MONO = (1, 0, 0)
F_MONO = (0, 1, 0)
H_MONO = (0, 0, 1)

_ZERO = Fraction(0)


def _iadd(acc: dict, key, val):
    v = acc.get(key)
    if v is None:
        if val:
            acc[key] = val
    else:
        v = v + val
        if v:
            acc[key] = v
        else:
            del acc[key]


# ---------------------------------------------------------------------------
# monomial products

# _U_TABLE[m] = normal form of F^m E, as {mono: coeff}
_U_TABLE = [{E_MONO: Fraction(1)}]


def _fm_e(m: int) -> dict:
    while len(_U_TABLE) <= m:
        k = len(_U_TABLE)
        acc = {}
        # F^k E = (F^{k-1} E) F - F^{k-1} H
        for (a, b, c), coef in _U_TABLE[k - 1].items():
            # (E^a F^b H^c) F = E^a F^{b+1} (H-1)^c
            for i in range(c + 1):
                _iadd(acc, (a, b + 1, i), coef * comb(c, i) * Fraction((-1) ** (c - i)))
        _iadd(acc, (0, k - 1, 1), Fraction(-1))
        _U_TABLE.append(acc)
    return _U_TABLE[m]


_FE_CACHE: dict = {}


def _fe_normal(m: int, n: int) -> dict:
    """Normal form of the word F^m E^n."""
    key = (m, n)
    cached = _FE_CACHE.get(key)
    if cached is not None:
        return cached
    if n == 0:
        result = {(0, m, 0): Fraction(1)}
    else:
        prev = _fe_normal(m, n - 1)
        result = {}
        for (a, b, c), coef in prev.items():
            # (E^a F^b H^c) E = E^a (F^b E) (H+1)^c
            for (p, q, r), c2 in _fm_e(b).items():
                base = coef * c2
                for i in range(c + 1):
                    _iadd(result, (a + p, q, r + i), base * comb(c, i))
    _FE_CACHE[key] = result
    return result


_MONO_CACHE: dict = {}


def mono_mul(m1, m2):
    """Product of two normal-ordered monomials as ((mono, coeff), ...)."""
    key = (m1, m2)
    cached = _MONO_CACHE.get(key)
    if cached is not None:
        return cached
    e1, f1, d1 = m1
    e2, f2, d2 = m2
    # H^{d1} commuted through E^{e2} F^{f2} leaves (H + e2 - f2)^{d1} H^{d2}
    shift = e2 - f2
    qpoly = {}
    for k in range(d1 + 1):
        _iadd(qpoly, d2 + k, Fraction(comb(d1, k) * shift ** (d1 - k)))
    acc = {}
    for (p, q, r), cw in _fe_normal(f1, e2).items():
        # trailing H^r moves right through F^{f2} as (H - f2)^r
        for j in range(r + 1):
            cj = cw * comb(r, j) * Fraction((-f2) ** (r - j))
            for deg, cq in qpoly.items():
                _iadd(acc, (e1 + p, q + f2, j + deg), cj * cq)
    result = tuple(sorted(acc.items()))
    _MONO_CACHE[key] = result
    return result


# ---------------------------------------------------------------------------
# elements


class Element:
    """Finite rational linear combination of PBW monomials E^e F^f H^d."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mono] = c

    @classmethod
    def _raw(cls, terms: dict) -> "Element":
        x = cls.__new__(cls)
        x.terms = terms
        return x

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Element":
        return cls._raw({UNIT_MONO: Fraction(1)})

    @classmethod
    def monomial(cls, e: int, f: int, d: int, coeff=1) -> "Element":
        return cls({(e, f, d): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def as_unit_scalar(self):
        """The Fraction c if this element equals c*1, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and UNIT_MONO in self.terms:
            return self.terms[UNIT_MONO]
        return None

    def filtration_degree(self) -> int:
        if not self.terms:
            return 0
        return max(e + f + d for e, f, d in self.terms)

    def __add__(self, other):
        if isinstance(other, Rational):
            other = Element.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            _iadd(terms, mono, c)
        return Element._raw(terms)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Rational):
            other = Element.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Element._raw({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational):
            q = Fraction(other)
            if not q:
                return Element.zero()
            return Element._raw({m: c * q for m, c in self.terms.items()})
        if not isinstance(other, Element):
            return NotImplemented
        acc = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for mono, c in mono_mul(m1, m2):
                    _iadd(acc, mono, c12 * c)
        return Element._raw(acc)

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power in U(sl2)")
        out = Element.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Element.one() * other
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __str__(self):
        return element_to_str(self)

    def __repr__(self):
        return f"Element({element_to_str(self)})"


E = Element._raw({E_MONO: Fraction(1)})
F = Element._raw({F_MONO: Fraction(1)})
H = Element._raw({H_MONO: Fraction(1)})
ONE = Element.one()


def multiply(x: Element, y: Element) -> Element:
    return x * y


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def casimir() -> Element:
    """I = 2EF + H(H-1), central in U(sl2)."""
    return Element({(1, 1, 0): 2, (0, 0, 2): 1, (0, 0, 1): -1})


def counit(x: Element) -> Fraction:
    """The coefficient of the empty monomial (epsilon kills H, E, F)."""
    return x.terms.get(UNIT_MONO, _ZERO)


# ---------------------------------------------------------------------------
# Casimir-adapted spanning set


@dataclass(frozen=True)
class CasimirTerm:
    """One monomial H^a I^b E^c (side 'E'), H^a I^b F^c (side 'F') or
    H^a I^b (side 'pure', c = 0)."""

    side: str
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.side not in ("pure", "E", "F"):
            raise ValueError(f"bad side {self.side!r}")
        if self.side == "pure" and self.c != 0:
            raise ValueError("pure terms have c = 0")
        if self.side != "pure" and self.c < 1:
            raise ValueError("E/F-side terms need c >= 1")


def _hpoly_shift(poly: dict, s: int) -> dict:
    """H -> H + s on a dense-in-degree H-polynomial {deg: coeff}."""
    out = {}
    for a, c in poly.items():
        for k in range(a + 1):
            _iadd(out, k, c * comb(a, k) * Fraction(s ** (a - k)))
    return out


def to_casimir_basis(x: Element):
    """Decompose over {H^a I^b E^c} u {H^a I^b F^c} u {H^a I^b} by
    eliminating mixed EF pairs via 2EF = I - H(H-1)."""
    work: dict = {}
    for (e, f, d), c in x.terms.items():
        poly = work.setdefault((e, f, 0), {})
        _iadd(poly, d, c)
    while True:
        mixed = [k for k in work if k[0] > 0 and k[1] > 0]
        if not mixed:
            break
        for e, f, b in mixed:
            poly = work.pop((e, f, b))
            # E^e F^f = E^{e-1} F^{f-1} (I - (H-f+1)(H-f)) / 2
            half = {a: c * Fraction(1, 2) for a, c in poly.items()}
            dest = work.setdefault((e - 1, f - 1, b + 1), {})
            for a, c in half.items():
                _iadd(dest, a, c)
            # -(H-f+1)(H-f)/2 = -(H^2 + (1-2f)H + f^2 - f)/2
            psi = {2: Fraction(-1, 2), 1: Fraction(2 * f - 1, 2),
                   0: Fraction(-(f * f - f), 2)}
            dest = work.setdefault((e - 1, f - 1, b), {})
            for a1, c1 in poly.items():
                for a2, c2 in psi.items():
                    _iadd(dest, a1 + a2, c1 * c2)
    out = {}
    for (e, f, b), poly in work.items():
        if e:
            side, c_exp, shifted = "E", e, _hpoly_shift(poly, -e)
        elif f:
            side, c_exp, shifted = "F", f, _hpoly_shift(poly, f)
        else:
            side, c_exp, shifted = "pure", 0, poly
        for a, coef in shifted.items():
            _iadd(out, CasimirTerm(side, a, b, c_exp), coef)
    order = {"pure": 0, "E": 1, "F": 2}
    return sorted(out.items(), key=lambda kv: (order[kv[0].side], kv[0].c,
                                               kv[0].b, kv[0].a))


def from_casimir_basis(terms) -> Element:
    """Expand I -> 2EF + H^2 - H and multiply out to PBW normal form."""
    I = casimir()
    total = Element.zero()
    for term, coef in terms:
        x = Element.monomial(0, 0, term.a) * I ** term.b
        if term.side == "E":
            x = x * E ** term.c
        elif term.side == "F":
            x = x * F ** term.c
        total = total + x * coef
    return total


def is_hi_polynomial(x: Element) -> bool:
    """True when x lies in the commuting subalgebra generated by H and I."""
    return all(t.side == "pure" for t, _ in to_casimir_basis(x))


def shift_h(x: Element, n: int) -> Element:
    """Formal substitution H -> H + n on a polynomial in H and I (the image
    of x under conjugation through E^n by the exchange relations)."""
    decomp = to_casimir_basis(x)
    if any(t.side != "pure" for t, _ in decomp):
        raise ValueError("shift_h is defined on polynomials in H and I only")
    I = casimir()
    total = Element.zero()
    hplus = Element({H_MONO: 1, UNIT_MONO: n})
    for term, coef in decomp:
        total = total + hplus ** term.a * I ** term.b * coef
    return total


# ---------------------------------------------------------------------------
# canonical renderings


def _mono_str(mono) -> str:
    e, f, d = mono
    parts = []
    for sym, exp in (("E", e), ("F", f), ("H", d)):
        if exp == 1:
            parts.append(sym)
        elif exp > 1:
            parts.append(f"{sym}^{exp}")
    return "*".join(parts) if parts else "1"


def element_to_str(x: Element) -> str:
    if not x.terms:
        return "0"
    parts = []
    for mono in sorted(x.terms, reverse=True):
        c = x.terms[mono]
        ms = _mono_str(mono)
        if ms == "1":
            body = str(abs(c))
        elif abs(c) == 1:
            body = ms
        else:
            body = f"{abs(c)}*{ms}"
        parts.append((" - " if c < 0 else " + ") + body)
    head = parts[0][3:]
    if parts[0].startswith(" - "):
        head = "-" + head
    return head + "".join(parts[1:])


def element_to_json(x: Element) -> list:
    return [
        {"e": m[0], "f": m[1], "d": m[2],
         "num": x.terms[m].numerator, "den": x.terms[m].denominator}
        for m in sorted(x.terms, reverse=True)
    ]


def element_from_json(data) -> Element:
    terms = {}
    for t in data:
        terms[(t["e"], t["f"], t["d"])] = Fraction(t["num"], t["den"])
    return Element(terms)
