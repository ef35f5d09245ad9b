"""Cyclic-cover potentials, tangency counts, and the disc-class ledger.

Given a base potential W, an affine functional recording which monomials come
from discs through the branch divisor, and a cover degree r, the potential
upstairs is

    W_complement + W_divisor**r - descendant,

living on the sublattice fixed by the deck character; rewriting it in a basis
of that sublattice produces the quotient-torus potential.  The same coefficient
bookkeeping inverts to tangency counts, and small helpers cover the disc-class
checks (Riemann-Hurwitz lifting, Maslov positivity, monotonicity, and
connectivity of the covering torus).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd
from pathlib import Path
from typing import Sequence

from .errors import (
    DiscLedgerError,
    InvalidFunctionalError,
    InvarianceError,
    MultiplicityError,
    RankMismatchError,
)
from .lattice import CharacterAction, Sublattice, invariant_sublattice, \
    rewrite_in_sublattice, solve_character
from .laurent import Exponent, LaurentPoly
from .periods import DescendantConstant


# ---------------------------------------------------------------------------
# divisor functionals and potential splitting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DivisorFunctional:
    """Affine map e -> linear.e + constant giving branch-divisor intersections.

    On the support of the potential it is paired with, every value must be the
    integer 0 or 1 (the disc either misses the divisor or crosses it once).
    """

    linear: tuple[Fraction, ...]
    constant: Fraction

    def __post_init__(self):
        object.__setattr__(self, "linear", tuple(Fraction(a) for a in self.linear))
        object.__setattr__(self, "constant", Fraction(self.constant))

    @property
    def rank(self) -> int:
        return len(self.linear)

    def degree(self, e: Sequence[int]) -> Fraction:
        if len(e) != self.rank:
            raise RankMismatchError(f"vector of length {len(e)} for rank {self.rank}")
        return sum(a * x for a, x in zip(self.linear, e)) + self.constant

    def validate_on(self, f: LaurentPoly) -> None:
        if f.rank != self.rank:
            raise RankMismatchError(f"potential rank {f.rank} vs functional rank {self.rank}")
        offenders = [(e, self.degree(e)) for e in f.support()
                     if self.degree(e) not in (0, 1)]
        if offenders:
            raise InvalidFunctionalError(offenders)


def split_potential(f: LaurentPoly, functional: DivisorFunctional
                    ) -> tuple[LaurentPoly, LaurentPoly]:
    """Split ``f`` into (misses the divisor, crosses it once) by functional value."""
    functional.validate_on(f)
    comp: dict[Exponent, Fraction] = {}
    div: dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        (comp if functional.degree(e) == 0 else div)[e] = c
    return (LaurentPoly(f.rank, comp, f.varnames),
            LaurentPoly(f.rank, div, f.varnames))


def derive_action(f: LaurentPoly, functional: DivisorFunctional, r: int) -> CharacterAction:
    """Deck character w with w.e = degree(e) (mod r) on the support of ``f``.

    When the support does not pin w down, the lexicographically smallest
    reduced solution is returned; any valid solution fixes the same monomials
    of the cover potential.
    """
    functional.validate_on(f)
    support = f.support()
    targets = [int(functional.degree(e)) for e in support]
    w = solve_character(support, targets, r)
    return CharacterAction(w, r)


# ---------------------------------------------------------------------------
# the cover pipeline
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoverSpec:
    """Input data for one cyclic cover step at the potential level."""

    potential: LaurentPoly
    functional: DivisorFunctional
    r: int
    descendant: DescendantConstant

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("cover degree must be at least 2")
        if self.descendant.r != self.r:
            raise ValueError(
                f"descendant degree {self.descendant.r} does not match cover degree {self.r}")
        self.functional.validate_on(self.potential)


@dataclass(frozen=True)
class CoverResult:
    upstairs_potential: LaurentPoly  # on the base torus, deck-invariant
    action: CharacterAction
    quotient_potential: LaurentPoly  # in sublattice coordinates
    basis: Sublattice


def build_cover_potential(spec: CoverSpec, *,
                          basis: Sequence[Sequence[int]] | None = None,
                          quotient_varnames: Sequence[str] | None = None) -> CoverResult:
    """Run one cover step: split, raise the divisor part, derive the character,
    and rewrite on the invariant sublattice.

    ``basis`` optionally overrides the canonical Hermite basis with explicit
    columns spanning the same sublattice (handy for matching a published
    coordinate choice); the override is validated against the derived lattice.
    """
    comp, div = split_potential(spec.potential, spec.functional)
    upstairs = comp + div ** spec.r - spec.descendant.value
    action = derive_action(spec.potential, spec.functional, spec.r)
    bad = [e for e in upstairs.support() if not action.fixes(e)]
    if bad:
        raise InvarianceError(
            f"cover potential has non-invariant exponents {bad}; inputs are inconsistent")
    lattice = invariant_sublattice(action)
    if basis is not None:
        override = Sublattice.from_columns(basis)
        if not invariant_lattice_matches(lattice, override):
            raise ValueError("basis override does not span the invariant sublattice")
        lattice = override
    quotient = rewrite_in_sublattice(upstairs, lattice, varnames=quotient_varnames)
    return CoverResult(upstairs, action, quotient, lattice)


def invariant_lattice_matches(canonical: Sublattice, override: Sublattice) -> bool:
    return canonical.same_lattice(override)


# ---------------------------------------------------------------------------
# tangency numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TangencyNumber:
    value: Fraction
    integral: bool  # a fractional count signals inconsistent inputs


def tangency_number(potential: LaurentPoly, r: int, boundary: Sequence[int], *,
                    multiplicities: Sequence[int] | None = None,
                    descendant: DescendantConstant | None = None,
                    smooth: bool = False) -> TangencyNumber:
    """Count of discs maximally tangent to the divisor, from r-th power coefficients.

    Simple-normal-crossings mode (default) takes the full potential W and the
    intersection multiplicities (r_1..r_N) of the class with the divisor
    components:

        tau = (r_1! ... r_N! / r!) * (W**r [boundary] - [boundary == 0] * descendant)

    Smooth mode takes the divisor part W^D instead and drops the multinomial
    factor.  The descendant only enters for spherical classes (boundary = 0).
    """
    boundary = tuple(int(x) for x in boundary)
    if descendant is not None and descendant.r != r:
        raise ValueError(f"descendant degree {descendant.r} does not match r={r}")
    desc_value = descendant.value if descendant is not None else Fraction(0)
    spherical = all(x == 0 for x in boundary)
    coeff = (potential ** r).coefficient(boundary)
    if spherical:
        coeff -= desc_value
    if smooth:
        value = coeff
    else:
        if multiplicities is None:
            raise MultiplicityError("snc mode requires intersection multiplicities")
        mults = [int(m) for m in multiplicities]
        if any(m < 0 for m in mults):
            raise MultiplicityError("multiplicities must be nonnegative")
        if sum(mults) != r:
            raise MultiplicityError(
                f"multiplicities sum to {sum(mults)}, expected the cover degree {r}")
        factor = Fraction(1)
        for m in mults:
            factor *= factorial(m)
        value = coeff * factor / factorial(r)
    return TangencyNumber(value, value.denominator == 1)


# ---------------------------------------------------------------------------
# disc-class ledger
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscClass:
    """Bookkeeping record for one disc class: half Maslov index, intersection
    numbers with the divisor components, boundary class, symplectic area."""

    half_maslov: int
    divisor_hits: tuple[int, ...]
    boundary: tuple[int, ...]
    area: Fraction

    def __post_init__(self):
        object.__setattr__(self, "divisor_hits", tuple(int(h) for h in self.divisor_hits))
        object.__setattr__(self, "boundary", tuple(int(b) for b in self.boundary))
        object.__setattr__(self, "area", Fraction(self.area))

    def hits(self, indices: Sequence[int] | None = None) -> int:
        if indices is None:
            return sum(self.divisor_hits)
        return sum(self.divisor_hits[i] for i in indices)


@dataclass(frozen=True)
class RHLift:
    """Half Maslov index upstairs; integral iff the class lifts."""

    value: Fraction
    liftable: bool


def riemann_hurwitz_lift(half_maslov_down: int, divisor_hits: int, r: int) -> RHLift:
    """Open Riemann-Hurwitz: mu_up/2 = mu_down/2 - (r-1)/r * hits."""
    if r < 2:
        raise ValueError("cover degree must be at least 2")
    value = Fraction(half_maslov_down) - Fraction(r - 1, r) * divisor_hits
    return RHLift(value, value.denominator == 1)


@dataclass(frozen=True)
class MaslovRow:
    disc: DiscClass
    required: int  # max(selected hits, 1)
    ok: bool


@dataclass(frozen=True)
class MaslovReport:
    rows: tuple[MaslovRow, ...]
    passed: bool


def maslov_positive(classes: Sequence[DiscClass],
                    hits_index: Sequence[int] | None = None) -> MaslovReport:
    """Check mu/2 >= max(hits, 1) class by class (vacuously true when empty).

    ``hits_index`` selects which entries of ``divisor_hits`` make up the
    divisor under test; all of them by default.
    """
    rows = []
    for disc in classes:
        required = max(disc.hits(hits_index), 1)
        rows.append(MaslovRow(disc, required, disc.half_maslov >= required))
    return MaslovReport(tuple(rows), all(r.ok for r in rows))


def monotonicity_check(classes: Sequence[DiscClass]) -> Fraction | None:
    """The constant lambda with area = lambda * (mu/2) for every class, if any."""
    if not classes:
        return None
    for disc in classes:
        if disc.area <= 0:
            raise DiscLedgerError(f"disc class has non-positive area {disc.area}")
    first = classes[0]
    if first.half_maslov == 0:
        return None
    lam = first.area / first.half_maslov
    for disc in classes[1:]:
        if disc.area != lam * disc.half_maslov:
            return None
    return lam


def cover_connected(divisor_values: Sequence[int], r: int) -> bool:
    """Is the pre-image torus connected? True iff the linking values generate Z_r."""
    g = r
    for value in divisor_values:
        g = gcd(g, value)
    return g == 1


# ---------------------------------------------------------------------------
# JSON interchange for cover specs
# ---------------------------------------------------------------------------

def cover_spec_from_dict(data: dict) -> tuple[CoverSpec, list[list[int]] | None, list[str] | None]:
    """Build a CoverSpec (plus optional basis override and quotient variable
    names) from its JSON object form::

        {"potential": "...", "vars": [...],
         "functional": {"linear": [...], "constant": ...},
         "r": 2, "descendant": "0",
         "basis": [[...], ...],          # optional, columns
         "quotient_vars": [...]}         # optional
    """
    from .parsing import parse_poly  # local import avoids a cycle

    required = {"potential", "vars", "functional", "r", "descendant"}
    missing = required - set(data)
    if missing:
        raise ValueError(f"cover spec is missing keys {sorted(missing)}")
    varnames = [str(v) for v in data["vars"]]
    potential = parse_poly(str(data["potential"]), varnames)
    fun = data["functional"]
    functional = DivisorFunctional(
        tuple(Fraction(str(a)) for a in fun["linear"]),
        Fraction(str(fun["constant"])),
    )
    r = int(data["r"])
    descendant = DescendantConstant(r, Fraction(str(data["descendant"])))
    spec = CoverSpec(potential, functional, r, descendant)
    basis = data.get("basis")
    if basis is not None:
        basis = [[int(x) for x in col] for col in basis]
    qvars = data.get("quotient_vars")
    if qvars is not None:
        qvars = [str(v) for v in qvars]
    return spec, basis, qvars


def load_cover_spec(path: str | Path) -> tuple[CoverSpec, list[list[int]] | None, list[str] | None]:
    with open(path) as fh:
        return cover_spec_from_dict(json.load(fh))
