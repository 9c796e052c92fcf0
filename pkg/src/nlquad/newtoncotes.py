"""Newton-Cotes rules via linear combinations of trapezoid splits.

Splitting the panel at an interior node and applying the trapezoid to
both parts gives one integral estimate per node; matching the Taylor
expansion of an optimal linear combination of those estimates to the
exact integral reproduces the classic closed rules.  The small linear
systems are solved in exact rational arithmetic so the weights come out
bit-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Interval, NodeSet, PanelRule
from .errors import ConfigError


@dataclass(frozen=True)
class AlphaSolution:
    n: int
    alphas: tuple  # n-1 rationals, one per split node (k = 0 is the degenerate split)
    weights: tuple  # n rationals on the equispaced nodes

    def __post_init__(self):
        assert sum(self.weights) == 1
        assert all(self.weights[k] == self.weights[self.n - 1 - k]
                   for k in range(self.n))


def _solve_rational(matrix, rhs):
    """Gaussian elimination over Fraction entries (exact)."""
    m = len(rhs)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][m] for r in range(m)]


def solve_alpha(n: int) -> AlphaSolution:
    """Split-trapezoid coefficients and node weights for odd n in 3..9."""
    if n % 2 == 0 or not 3 <= n <= 9:
        raise ConfigError(f"n must be odd and in 3..9, got {n}")
    m = n - 1
    xis = [Fraction(k, m) for k in range(m)]
    matrix = [[xi ** j - xi + 1 for xi in xis] for j in range(2, n + 1)]
    rhs = [Fraction(2, j + 1) for j in range(2, n + 1)]
    alphas = _solve_rational(matrix, rhs)

    weights = [Fraction(0)] * n
    for k, (xi, al) in enumerate(zip(xis, alphas)):
        weights[0] += al * xi / 2
        weights[k] += al * Fraction(1, 2)
        weights[n - 1] += al * (1 - xi) / 2
    return AlphaSolution(n=n, alphas=tuple(alphas), weights=tuple(weights))


_CLASSIC = {
    "trapezoid": (2, 3, 1),
    "simpson": (3, 5, 3),
    "boole": (5, 7, 5),
    "weddle": (7, 9, 7),
}

_CLASSIC_WEIGHTS = {
    "trapezoid": (Fraction(1, 2), Fraction(1, 2)),
    "simpson": (Fraction(1, 6), Fraction(4, 6), Fraction(1, 6)),
    "boole": (Fraction(7, 90), Fraction(32, 90), Fraction(12, 90),
              Fraction(32, 90), Fraction(7, 90)),
    "weddle": (Fraction(41, 840), Fraction(216, 840), Fraction(27, 840),
               Fraction(272, 840), Fraction(27, 840), Fraction(216, 840),
               Fraction(41, 840)),
}


def linear_rule(name: str, weights: Sequence[float], order_p: int,
                degree: int) -> PanelRule:
    """Linear rule on equispaced nodes with the given mean weights."""
    ws = tuple(float(w) for w in weights)
    n = len(ws)
    nodes = NodeSet(tuple(k / (n - 1) for k in range(n)))
    symmetric = all(math.isclose(ws[k], ws[n - 1 - k], rel_tol=1e-15)
                    for k in range(n))

    def q(fhat: Sequence[float], interval: Interval) -> float:
        return math.fsum(w * f for w, f in zip(ws, fhat))

    return PanelRule(
        name=name,
        nodes=nodes,
        q=q,
        order_p=order_p,
        symmetric=symmetric,
        exactness_tags=frozenset({f"polynomials<={degree}", "quasilinear"}),
    )


def classic(name: str) -> PanelRule:
    """One of the classic closed rules: trapezoid, simpson, boole, weddle."""
    try:
        _, order_p, _ = _CLASSIC[name]
    except KeyError:
        raise ConfigError(
            f"unknown classic rule {name!r}; have {sorted(_CLASSIC)}") from None
    degree = {"trapezoid": 1, "simpson": 3, "boole": 5, "weddle": 7}[name]
    return linear_rule(name, _CLASSIC_WEIGHTS[name], order_p, degree)
