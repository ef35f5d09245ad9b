"""Standard Laurent potentials used by the scripts and the test suite."""

from __future__ import annotations

from .laurent import LaurentPoly
from .parsing import parse_poly


def projective_space(n: int) -> LaurentPoly:
    """x1 + ... + xn + 1/(x1...xn), the toric potential of P^n."""
    if n < 1:
        raise ValueError("dimension must be positive")
    names = [f"z{i}" for i in range(1, n + 1)]
    text = " + ".join(names) + " + 1/(" + "*".join(names) + ")"
    return parse_poly(text, names)


def product_of_lines() -> LaurentPoly:
    """x + y + 1/x + 1/y, the toric potential of P^1 x P^1."""
    return parse_poly("x + y + 1/x + 1/y", ["x", "y"])


def hirzebruch_f2() -> LaurentPoly:
    """x + y + 1/x + 1/(x^2 y), the toric potential of the second Hirzebruch surface."""
    return parse_poly("x + y + 1/x + 1/(x^2*y)", ["x", "y"])


def del_pezzo_bl5() -> LaurentPoly:
    """(1+x)^2 (1+y)^2 / (xy) - 4, a potential for the degree-4 del Pezzo surface."""
    return parse_poly("(1+x)^2*(1+y)^2/(x*y) - 4", ["x", "y"])


def fano_hypersurface_quotient(n: int, d: int) -> LaurentPoly:
    """Quotient-torus potential of a degree-d hypersurface in P^(n+1), d <= n:

        x_0 + ... + x_{n-d} + (1 + y_1 + ... + y_{d-1})**d / (x_0...x_{n-d} y_1...y_{d-1})

    At d = 1 this degenerates to the projective-space potential in n variables.
    """
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    xs = [f"x{i}" for i in range(n - d + 1)]
    ys = [f"y{i}" for i in range(1, d)]
    names = xs + ys
    rank = len(names)
    assert rank == n
    base = LaurentPoly.constant(rank, 1, names)
    for i in range(len(xs), rank):
        base = base + LaurentPoly.variable(rank, i, names)
    numer = base ** d
    total = numer.shift([-1] * rank)  # divide by the product of all variables
    for i in range(len(xs)):
        total = total + LaurentPoly.variable(rank, i, names)
    return total
