#!/usr/bin/env python3
"""Quotient rewrite for the torus in the second Hirzebruch surface.

The deck-invariant potential x^2 + xy + y^2 + 1/(xy) rewritten on the
invariant sublattice of the derived Z/2 action, in the coordinates
u = 1/(xy) and v = x^2, is exactly the toric potential of F2.
"""

from fractions import Fraction

from lgforge import (
    DivisorFunctional,
    Sublattice,
    derive_action,
    invariant_sublattice,
    parse_poly,
    rewrite_in_sublattice,
)
from lgforge.potentials import hirzebruch_f2


def main():
    base = parse_poly("x + y + 1/(x*y)", ["x", "y"])
    functional = DivisorFunctional((Fraction(1, 3), Fraction(1, 3)), Fraction(2, 3))
    action = derive_action(base, functional, 2)
    print(f"deck character: weights {action.weights} mod {action.modulus}")
    lattice = invariant_sublattice(action)
    print(f"canonical invariant basis: columns {lattice.columns} (index {lattice.index})")

    upstairs = parse_poly("x^2 + x*y + y^2 + 1/(x*y)", ["x", "y"])
    override = Sublattice.from_columns([(-1, -1), (2, 0)])
    quotient = rewrite_in_sublattice(upstairs, override, varnames=("u", "v"))
    print(f"upstairs potential : {upstairs}")
    print(f"quotient potential : {quotient}")
    toric = hirzebruch_f2()
    print(f"toric F2 potential : {toric}")
    print(f"exact match after renaming: {quotient == toric}")


if __name__ == "__main__":
    main()
