"""The deforming map: quantum generators realized inside U(sl2)[[h]].

J0 -> H, J+ -> phi+ E, J- -> phi- F, with phi+- an even h-series whose
coefficients are polynomials in H and the Casimir I.  The q-deformed
commutation relations then hold order by order.
"""

from twistkit import m_Jminus, m_Jplus, phi, quantum_commutator_check
from twistkit.cli import format_phi_series

# phi+- to fourth order; note the vanishing odd coefficients.
for sign in ("plus", "minus"):
    p = phi(sign, 4)
    print(f"phi_{sign:5s} =", format_phi_series(p.series))

# the images of the raising and lowering generators
print("\nm(J+) =", m_Jplus(2))
print("m(J-) =", m_Jminus(2))

# the defining relations of the q-deformed algebra, verified exactly
print("\nq-deformed relations at order 4:")
print(quantum_commutator_check(4))
