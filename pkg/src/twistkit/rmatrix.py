"""Classical and quantum universal R-matrices and the twist relation.

The classical R-matrix is q^P = exp(hP) with P the Cartan-Killing
element.  The quantum R-matrix is only ever represented through its image
under the deforming map:

    R_q~ = q^{2 H (x) H} * sum_n  q^{-n(n-1)/2} 2^n (1-q^{-2})^n / [n]!
                           * (q^{nH} m(J+)^n (x) q^{-nH} m(J-)^n),

with the prefactor on the left and the q-power dressing applied to the
n-th powers of the raising/lowering images.  Collapsing the dressing into
a single tensor and taking its n-th power instead would differ by
q^{-n(n-1)} per summand: both readings reproduce the same expansion
through order 2, but only the one above intertwines the twisted coproduct
with its opposite at every order (checked in the tests), so it is the one
implemented; equivalently, below the summand is q^{+n(n-1)/2} 2^n
(1-q^{-2})^n / [n]! times the n-th power of q^H m(J+) (x) q^{-H} m(J-).
The n-sum truncates at n = N because 1 - q^{-2} is O(h).  A twist
candidate F is tied to the two R-matrices by the residual
R_q~ F - sigma(F) R."""

from __future__ import annotations

from fractions import Fraction

from .deform import m_Jminus, m_Jplus
from .hseries import HSeries, q_factorial, series_exp_h
from .pbw import H
from .tensor import (TensorElement, cartan_killing, flip, series_flip,
                     series_outer)


def classical_R(order: int) -> HSeries:
    """R = q^P = exp(hP)."""
    return series_exp_h(cartan_killing(), order)


def quantum_R_image(order: int, *, extra_terms: int = 0) -> HSeries:
    """The deforming-map image of the quantum R-matrix, truncated at the
    given order.  extra_terms widens the n-sum past its automatic cutoff
    (the result must not change; exposed for the losslessness check)."""
    hh = TensorElement({((0, 0, 1), (0, 0, 1)): 2})
    prefactor = series_exp_h(hh, order)
    x_leg = series_exp_h(H, order) * m_Jplus(order)
    y_leg = series_exp_h(H * -1, order) * m_Jminus(order)
    xy = series_outer(x_leg, y_leg)

    one_scalar = HSeries.constant(Fraction(1), order)
    geom = one_scalar - series_exp_h(Fraction(-2), order)  # 1 - q^{-2}, O(h)

    total = HSeries.constant(TensorElement.zero(), order)
    xy_pow = HSeries.constant(TensorElement.one(), order)
    geom_pow = one_scalar
    for n in range(order + 1 + extra_terms):
        if n:
            xy_pow = xy_pow * xy
            geom_pow = geom_pow * geom
        scalar = (series_exp_h(Fraction(n * (n - 1), 2), order)
                  * geom_pow * q_factorial(n, order).inverse()
                  * Fraction(2 ** n))
        total = total + scalar * xy_pow
    return prefactor * total


def quasitriangular_residual(cand, order: int) -> HSeries:
    """R_q~ F - sigma(F) R, order by order."""
    Fs = cand.at_order(order).series
    return quantum_R_image(order) * Fs - series_flip(Fs) * classical_R(order)


def symmetry_rhs(order: int, ftilde) -> TensorElement:
    """The source term that must vanish for the order-1 / order-2 kernel
    freedoms to be symmetric: assembled from the two R-matrix expansions
    and the candidate's first and second coefficients."""
    if order not in (1, 2):
        raise ValueError("symmetry_rhs is defined for orders 1 and 2")
    R = classical_R(2)
    Rq = quantum_R_image(2)
    f1 = ftilde.coefficient(1)
    if order == 1:
        return Rq.coeffs[1] - R.coeffs[1] - (flip(f1) - f1)
    f2 = ftilde.coefficient(2)
    return (f2 - flip(f2) - flip(f1) * R.coeffs[1]
            + Rq.coeffs[1] * f1 + Rq.coeffs[2] - R.coeffs[2])
