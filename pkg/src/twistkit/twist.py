"""Verification and order-by-order solving of the coproduct twist.

A candidate F = F0 + h F1 + h^2 F2 + ... conjugates the classical
coproduct into the image of the q-deformed one; instead of dividing by F,
the residuals are kept in multiplied-through form

    F * Delta(m(g)) - Delta_q~(g) * F        for g in {J0, J+, J-},

which must vanish order by order.  At each order k the residual equation
is linear in F_k: the homogeneous part is the commutator with the three
classical coproducts, the inhomogeneity comes from the lower orders.  The
solver expands that equation over the PBW tensor basis against the
weight-zero ansatz

    F_k = sum_l  a_l(H1,H2,I1,I2) E1^l F2^l + b_l(H1,H2,I1,I2) F1^l E2^l

with polynomial coefficients of bounded degree, and solves the resulting
exact rational linear system by fraction-free elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .deform import delta_q_image, generator_images
from .hseries import HSeries
from .linsolve import solve_sparse
from .pbw import E, F, H, Element, casimir, mono_mul, _iadd
from .report import VerificationReport
from .tensor import (TensorElement, TensorElement3, cartan_killing, classical_r,
                     coproduct, coproduct_leg, counit_leg, extend_back,
                     extend_front, flip, outer, series_coproduct,
                     series_flip, tensor_from_json, tensor_to_json)

_GENS = ("J0", "J+", "J-")


# ---------------------------------------------------------------------------
# candidates


@dataclass(frozen=True)
class TwistCandidate:
    """A truncated twist series F0 + h F1 + ... + h^N F_N."""

    series: HSeries

    def __post_init__(self):
        for c in self.series.coeffs:
            if not isinstance(c, TensorElement):
                raise ValueError("twist coefficients must be tensor elements")

    @classmethod
    def from_coefficients(cls, coeffs) -> "TwistCandidate":
        return cls(HSeries(tuple(coeffs)))

    @property
    def order(self) -> int:
        return self.series.order

    def coefficient(self, k: int) -> TensorElement:
        return self.series.coeffs[k]

    def at_order(self, order: int) -> "TwistCandidate":
        """Deliberately pad with zeros or truncate to the given order."""
        if order == self.order:
            return self
        if order > self.order:
            return TwistCandidate(self.series.pad_to(order))
        return TwistCandidate(self.series.truncate(order))

    def leading_invertible(self) -> bool:
        s = self.series.coeffs[0].as_unit_scalar()
        return s is not None and s != 0

    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [tensor_to_json(c) for c in self.series.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TwistCandidate":
        coeffs = [tensor_from_json(c) for c in data["coeffs"]]
        if len(coeffs) != data["order"] + 1:
            raise ValueError("candidate order does not match coefficient count")
        return cls.from_coefficients(coeffs)


def second_order_term() -> TensorElement:
    """The explicit second-order particular solution built from the
    Cartan-Killing element P."""
    I = casimir()
    one = Element.one()
    one2 = TensorElement.one()
    P = cartan_killing()
    half = Fraction(1, 2)
    t = (outer(I, H * H) + outer(H * H, I)) * half
    t = t + (outer(E, H * F) - outer(H * E, F)
             + outer(H * F, E) - outer(F, H * E)) * Fraction(1, 3)
    t = t + outer(H, H) * (one2 - P * 3) * Fraction(1, 6)
    t = t - P * Fraction(11, 24)
    t = t + ((one2 + P) * (one2 + P) - one2 - outer(I, I) * 2) * half
    return t


def reference_candidate(order: int = 2) -> TwistCandidate:
    """The canonical particular twist: F0 = 1, F1 = r (the classical
    r-matrix), F2 the explicit second-order term.  Defined up to order 2."""
    if not 0 <= order <= 2:
        raise ValueError("the reference candidate is defined for orders 0..2")
    coeffs = [TensorElement.one(), classical_r(), second_order_term()]
    return TwistCandidate.from_coefficients(coeffs[: order + 1])


# ---------------------------------------------------------------------------
# residual verification


def twist_residual_series(cand: TwistCandidate, order: int) -> dict:
    """The three residual series F*Delta(m(g)) - Delta_q~(g)*F, keyed by
    generator name."""
    if not cand.leading_invertible():
        raise ValueError("twist candidate has a non-invertible leading term")
    Fs = cand.at_order(order).series
    images = generator_images(order)
    out = {}
    for g in _GENS:
        lhs = Fs * series_coproduct(images[g])
        rhs = delta_q_image(g, order) * Fs
        out[g] = lhs - rhs
    return out


def twist_residuals(cand: TwistCandidate, order: int) -> VerificationReport:
    """Pass iff every residual coefficient vanishes up to the given order."""
    report = VerificationReport()
    for g, series in twist_residual_series(cand, order).items():
        bad = next((k for k, c in enumerate(series.coeffs) if not c.is_zero()), None)
        report.add(f"twist[{g}]", bad is None, bad)
    return report


_DELTA_CLASSICAL = None


def _delta_classical() -> dict:
    global _DELTA_CLASSICAL
    if _DELTA_CLASSICAL is None:
        _DELTA_CLASSICAL = {"J0": coproduct(H), "J+": coproduct(E),
                            "J-": coproduct(F)}
    return _DELTA_CLASSICAL


def kernel_check(f: TensorElement) -> bool:
    """True iff f commutes with Delta(H), Delta(E) and Delta(F)."""
    for d in _delta_classical().values():
        if not (f * d - d * f).is_zero():
            return False
    return True


def normalization_check(cand: TwistCandidate) -> VerificationReport:
    """(eps (x) id)(F) = (id (x) eps)(F) = 1, order by order."""
    report = VerificationReport()
    for leg, name in ((1, "counit(leg1)"), (2, "counit(leg2)")):
        bad = None
        for k, c in enumerate(cand.series.coeffs):
            collapsed = counit_leg(c, leg)
            want = Element.one() if k == 0 else Element.zero()
            if collapsed != want:
                bad = k
                break
        report.add(name, bad is None, bad)
    return report


def unitarity_defect(cand: TwistCandidate) -> HSeries:
    """sigma(F) F - 1 at the universal level."""
    s = cand.series
    one = HSeries.constant(TensorElement.one(), s.order)
    return series_flip(s) * s - one


def cocycle_defect(cand: TwistCandidate) -> HSeries:
    """(F (x) 1)(Delta (x) id)(F) - (1 (x) F)(id (x) Delta)(F) as a series
    in the triple tensor power."""
    s = cand.series
    left = s.map(extend_back) * s.map(lambda c: coproduct_leg(c, 1))
    right = s.map(extend_front) * s.map(lambda c: coproduct_leg(c, 2))
    return left - right


# ---------------------------------------------------------------------------
# the ansatz


@dataclass(frozen=True)
class AnsatzUnknown:
    """One rational unknown: the coefficient of H1^a1 H2^a2 I1^b1 I2^b2 in
    the polynomial attached to E1^l F2^l (side 'a') or F1^l E2^l ('b')."""

    l: int
    side: str
    mono: tuple  # (a1, a2, b1, b2)

    def label(self) -> str:
        names = ("H1", "H2", "I1", "I2")
        ms = "*".join(n if e == 1 else f"{n}^{e}"
                      for n, e in zip(names, self.mono) if e)
        return f"{self.side}{self.l}[{ms or '1'}]"


class TwistAnsatz:
    """The weight-zero template at one order: powers l < L, polynomial
    coefficients in H1, H2, I1, I2 of total degree <= D.

    Unknowns are ordered with higher powers l first (within a power: side
    'a' before 'b', then ascending degree, then lexicographic monomial);
    zeroing the free variables of the eliminated system under this order
    is the solver's "minimal choice"."""

    def __init__(self, order: int, cutoff_l: int | None = None,
                 cutoff_d: int | None = None):
        if order < 1:
            raise ValueError("ansatz order must be >= 1")
        self.order = order
        self.cutoff_l = cutoff_l if cutoff_l is not None else order + 1
        self.cutoff_d = cutoff_d if cutoff_d is not None else 2 * order
        if self.cutoff_l < 1 or self.cutoff_d < 0:
            raise ValueError("cutoffs must be positive")
        monos = [m for m in itertools.product(range(self.cutoff_d + 1), repeat=4)
                 if sum(m) <= self.cutoff_d]
        monos.sort(key=lambda m: (sum(m), m))
        unknowns = []
        for l in range(self.cutoff_l - 1, -1, -1):
            # at l = 0 both sides multiply 1 (x) 1; keep a single slot
            for side in ("a",) if l == 0 else ("a", "b"):
                for m in monos:
                    unknowns.append(AnsatzUnknown(l, side, m))
        self.unknowns = tuple(unknowns)

    def __len__(self):
        return len(self.unknowns)

    def payload(self, u: AnsatzUnknown) -> TensorElement:
        """The tensor element multiplied by the unknown u."""
        a1, a2, b1, b2 = u.mono
        if u.side == "a":
            leg1 = _leg_element(a1, b1, "E", u.l)
            leg2 = _leg_element(a2, b2, "F", u.l)
        else:
            leg1 = _leg_element(a1, b1, "F", u.l)
            leg2 = _leg_element(a2, b2, "E", u.l)
        return outer(leg1, leg2)

    def instantiate(self, values) -> TensorElement:
        """Assemble sum_u values[u_index] * payload(u)."""
        total = TensorElement.zero()
        for i, u in enumerate(self.unknowns):
            v = values[i]
            if v:
                total = total + self.payload(u) * v
        return total


_LEG_CACHE: dict = {}


def _leg_element(h_exp: int, i_exp: int, gen: str, l: int) -> Element:
    """H^h I^i G^l in PBW normal form, cached."""
    key = (h_exp, i_exp, gen, l)
    got = _LEG_CACHE.get(key)
    if got is None:
        got = (Element.monomial(0, 0, h_exp) * casimir() ** i_exp
               * (E if gen == "E" else F) ** l)
        _LEG_CACHE[key] = got
    return got


# ---------------------------------------------------------------------------
# the order-k solver

_COMM_CACHE: dict = {}


def _mono_commutator(pair, gen: str) -> tuple:
    """[m, Delta(g)] for a single tensor monomial, cached."""
    key = (pair, gen)
    got = _COMM_CACHE.get(key)
    if got is None:
        acc: dict = {}
        delta = _delta_classical()[{"H": "J0", "E": "J+", "F": "J-"}[gen]]
        for (d1, d2), dc in delta.terms.items():
            for m1, c1 in mono_mul(pair[0], d1):
                for m2, c2 in mono_mul(pair[1], d2):
                    _iadd(acc, (m1, m2), dc * c1 * c2)
            for m1, c1 in mono_mul(d1, pair[0]):
                for m2, c2 in mono_mul(d2, pair[1]):
                    _iadd(acc, (m1, m2), -dc * c1 * c2)
        got = tuple(acc.items())
        _COMM_CACHE[key] = got
    return got


@dataclass
class SolutionSet:
    """Outcome of one order-k solve: a particular solution (free unknowns
    zeroed under the deterministic pivot order) and a basis of the
    homogeneous solution space inside the ansatz."""

    order: int
    cutoff_l: int
    cutoff_d: int
    status: str                              # "solved" | "infeasible-at-cutoff"
    particular: TensorElement | None = None
    homogeneous: list = field(default_factory=list)
    pivot_log: list = field(default_factory=list)
    unknown_count: int = 0
    rank: int = 0

    @property
    def solved(self) -> bool:
        return self.status == "solved"

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "cutoffL": self.cutoff_l,
            "cutoffD": self.cutoff_d,
            "status": self.status,
            "particular": tensor_to_json(self.particular) if self.particular else None,
            "homogeneous_basis": [tensor_to_json(t) for t in self.homogeneous],
            "pivot_log": self.pivot_log,
            "unknowns": self.unknown_count,
            "rank": self.rank,
        }


def solve_order(k: int, lower: TwistCandidate,
                ansatz: TwistAnsatz | None = None) -> SolutionSet:
    """Solve the order-k residual equations for F_k given the lower-order
    coefficients (which must already satisfy their own equations)."""
    if ansatz is None:
        ansatz = TwistAnsatz(k)
    if lower.order < k - 1:
        raise ValueError(f"lower candidate must reach order {k - 1}")
    low = lower.at_order(k - 1).at_order(k)  # truncate then pad F_k = 0

    # inhomogeneous part: order-k residual of the zero-extended candidate
    const = {g: s.coeffs[k]
             for g, s in twist_residual_series(low, k).items()}

    # linear part: columns of [payload_u, Delta(g)]
    columns = []
    for u in ansatz.unknowns:
        payload = ansatz.payload(u)
        col = {}
        for gi, gen in enumerate(("H", "E", "F")):
            for pair, pc in payload.terms.items():
                for mono, c in _mono_commutator(pair, gen):
                    _iadd(col, (gi, mono), pc * c)
        columns.append(col)

    row_keys = set()
    for col in columns:
        row_keys.update(col)
    for gi, g in enumerate(_GENS):
        row_keys.update((gi, mono) for mono in const[g].terms)
    row_keys = sorted(row_keys)
    row_index = {key: i for i, key in enumerate(row_keys)}

    rows = [dict() for _ in row_keys]
    for ci, col in enumerate(columns):
        for key, c in col.items():
            rows[row_index[key]][ci] = c
    rhs = [Fraction(0)] * len(row_keys)
    for gi, g in enumerate(_GENS):
        for mono, c in const[g].terms.items():
            rhs[row_index[(gi, mono)]] = -c

    lin = solve_sparse(rows, rhs, len(ansatz))
    sol = SolutionSet(order=k, cutoff_l=ansatz.cutoff_l, cutoff_d=ansatz.cutoff_d,
                      status="solved" if lin.status == "solved" else "infeasible-at-cutoff",
                      unknown_count=len(ansatz), rank=len(lin.pivot_cols),
                      pivot_log=[ansatz.unknowns[c].label() for c in lin.pivot_cols])
    if not sol.solved:
        return sol
    sol.particular = ansatz.instantiate(lin.particular)
    sol.homogeneous = [ansatz.instantiate(vec) for vec in lin.nullspace]
    sol.homogeneous = [t for t in sol.homogeneous if not t.is_zero()]
    return sol


def solve_with_escalation(k: int, lower: TwistCandidate,
                          cutoff_l: int | None = None,
                          cutoff_d: int | None = None,
                          max_escalations: int = 2):
    """Solve order k, enlarging the cutoffs by (L+1, D+2) on infeasibility,
    at most `max_escalations` times.  Returns the last SolutionSet."""
    L = cutoff_l if cutoff_l is not None else k + 1
    D = cutoff_d if cutoff_d is not None else 2 * k
    sol = solve_order(k, lower, TwistAnsatz(k, L, D))
    attempts = 0
    while not sol.solved and attempts < max_escalations:
        attempts += 1
        L, D = L + 1, D + 2
        sol = solve_order(k, lower, TwistAnsatz(k, L, D))
    return sol


def symmetrize_order(cand: TwistCandidate, k: int) -> tuple:
    """Adjust F_k by a kernel element so that the quasitriangular relation
    holds at order k, exploiting that the correction -rho/2 (rho the
    order-k quasitriangular residual) commutes with the classical
    coproducts whenever the lower orders already satisfy the relation.
    Returns (candidate, correction)."""
    from .rmatrix import quasitriangular_residual

    rho = quasitriangular_residual(cand, k).coeffs[k]
    if rho.is_zero():
        return cand, TensorElement.zero()
    if not (rho + flip(rho)).is_zero():
        raise ValueError(
            f"order-{k} quasitriangular residual has a symmetric part; "
            "no kernel correction can remove it")
    delta = rho * Fraction(-1, 2)
    if not kernel_check(delta):
        raise ValueError(f"order-{k} correction is not a kernel element")
    coeffs = list(cand.series.coeffs)
    coeffs[k] = coeffs[k] + delta
    return TwistCandidate.from_coefficients(coeffs), delta


def build_candidate(order: int, cutoff_l: int | None = None,
                    cutoff_d: int | None = None, symmetrize: bool = True,
                    max_escalations: int = 2):
    """Chain solve orders 1..order into a full candidate.

    With symmetrize=True each new coefficient is shifted by the kernel
    correction that also enforces the quasitriangular relation at that
    order.  Returns (candidate, [SolutionSet per order])."""
    cand = TwistCandidate.from_coefficients([TensorElement.one()])
    sols = []
    for k in range(1, order + 1):
        sol = solve_with_escalation(k, cand, cutoff_l, cutoff_d, max_escalations)
        sols.append(sol)
        if not sol.solved:
            return cand, sols
        cand = TwistCandidate.from_coefficients(
            list(cand.series.coeffs) + [sol.particular])
        if symmetrize:
            cand, _ = symmetrize_order(cand, k)
    return cand, sols
