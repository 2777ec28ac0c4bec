"""Exact arithmetic in U(sl2): normal ordering, the Casimir, and the
Casimir-adapted basis."""

from twistkit import (E, F, H, casimir, commutator, from_casimir_basis,
                      to_casimir_basis)

# Products reduce to the normal order E^e F^f H^d automatically.
print("F*E        =", F * E)
print("H^2 E^2    =", H * H * E * E, "  (the exchange relation at work)")

# The quadratic Casimir and its centrality.
I = casimir()
print("\nI          =", I)
print("[I, E]     =", commutator(I, E))
print("[I, F]     =", commutator(I, F))

# Mixed EF pairs can be eliminated in favour of I: the Casimir-adapted
# spanning set {H^a I^b E^c} u {H^a I^b F^t}.
x = E * E * F * H
print("\nx          =", x)
for term, coeff in to_casimir_basis(x):
    print(f"   {coeff} * H^{term.a} I^{term.b} {term.side}^{term.c}")
print("round trip ok:", from_casimir_basis(to_casimir_basis(x)) == x)
