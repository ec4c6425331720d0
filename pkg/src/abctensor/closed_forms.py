"""Closed-form spectral radii for the extremal families.

Each value is either an explicit radical or the largest real root of a
low-degree polynomial with a known bracket, extracted by bisection so
the result carries a certified enclosure.  Coefficients are rational
expressions in the edge count m, evaluated on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PolynomialSpec:
    """Real polynomial (ascending coefficients) whose largest real root is
    wanted; ``bracket`` is an interval known to contain it."""

    name: str
    coeffs: tuple[float, ...]
    bracket: tuple[float, float]
    source: str = ""

    def __call__(self, t: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


class RootBracketError(ValueError):
    """No sign change found for the largest real root."""


def largest_real_root(p: PolynomialSpec, tol: float = 1e-12) -> float:
    """Largest real root of p by bisection.

    The upper end is pushed out until p > 0 there (positive leading
    coefficient); then probes descending from the top on a refining grid
    find the highest point with p <= 0, which brackets the final root.
    """
    lo, hi = p.bracket
    if not lo < hi:
        raise RootBracketError(f"{p.name}: empty bracket {p.bracket}")
    expand = 0
    while p(hi) <= 0.0:
        hi += max(1.0, abs(hi))
        expand += 1
        if expand > 200:
            raise RootBracketError(f"{p.name}: no positive value above bracket")

    neg = None
    if p(lo) <= 0.0:
        neg = lo
    for level in range(1, 17):
        steps = 2**level
        found = None
        for j in range(1, steps):
            t = hi - (hi - lo) * j / steps
            if p(t) <= 0.0:
                found = t
                break
        if found is not None:
            if neg is None or found > neg:
                neg = found
            # One finer sweep above the hit guards against skipping a
            # higher sign change on a coarse grid.
            finer = 2 ** (level + 2)
            for j in range(1, finer):
                t = hi - (hi - found) * j / finer
                if p(t) <= 0.0 and t > neg:
                    neg = t
                    break
            break
    if neg is None:
        raise RootBracketError(f"{p.name}: no sign change found in {p.bracket}")

    a, b = neg, hi
    while b - a > tol * max(1.0, abs(b)):
        mid = 0.5 * (a + b)
        if p(mid) <= 0.0:
            a = mid
        else:
            b = mid
    return 0.5 * (a + b)


# ----------------------------------------------------------------------
# Named polynomials (coefficients ascending).


def eta_poly(m: int) -> PolynomialSpec:
    """Cubic whose largest root b_m is rho_abc(S_{m,3;m-3,1,1})^3 (m >= 4)."""
    d = 4.0 * (m - 2)
    return PolynomialSpec(
        name=f"eta[m={m}]",
        coeffs=(
            -((m - 3) ** 2) / d,
            (4 * m * m - 23 * m + 34) / d,
            -(4 * m * m - 19 * m + 27) / d,
            1.0,
        ),
        bracket=(0.0, float(m - 1)),
        source="characteristic reduction of S_{m,3;m-3,1,1}",
    )


def linear_unicyclic_poly(m: int) -> PolynomialSpec:
    """Cubic whose largest root a_m is rho_abc(U_{m,3}) for the 2-uniform
    base (m >= 3); a_m <= sqrt(m-1), with equality at m = 3.

    a_m also exceeds sqrt(m-2) for m in {3,4,5} but drops below it from
    m = 6 on, so only the upper end is used for bracketing.
    """
    r2 = math.sqrt(2.0)
    return PolynomialSpec(
        name=f"linear_unicyclic[m={m}]",
        coeffs=(
            r2 * (m * m - 5 * m + 6) / (2.0 * (m - 1)),
            -(m * m - 4 * m + 5) / (m - 1.0),
            -r2 / 2.0,
            1.0,
        ),
        bracket=(0.0, math.sqrt(m - 1)),
        source="characteristic reduction of U_{m,3}",
    )


def t_poly(m: int, idx: int) -> PolynomialSpec:
    """Cubic whose largest root is rho_abc(T_{m,idx})^3 (3-uniform)."""
    d = float(m - 3)
    if idx == 1:
        coeffs = (
            -(2 * m * m - 16 * m + 32) / (3 * d),
            (11 * m * m - 84 * m + 164) / (6 * d),
            -(3 * m * m - 18 * m + 31) / (3 * d),
            1.0,
        )
    elif idx == 2:
        coeffs = (
            -(m * m - 9 * m + 20) / (4 * d),
            (2 * m * m - 17 * m + 37) / (2 * d),
            -(4 * m * m - 29 * m + 60) / (4 * d),
            1.0,
        )
    elif idx == 3:
        coeffs = (
            -(2 * m * m - 15 * m + 29) / (8 * d),
            (11 * m * m - 82 * m + 158) / (8 * d),
            -(8 * m * m - 49 * m + 83) / (8 * d),
            1.0,
        )
    elif idx == 4:
        # (2t-1)(4(m-3)t^2 - (4m^2-27m+50)t + 4m^2-32m+64) / (8(m-3))
        a2 = 4.0 * (m - 3)
        a1 = -(4 * m * m - 27 * m + 50)
        a0 = 4 * m * m - 32 * m + 64
        coeffs = (
            -a0 / (8 * d),
            (2 * a0 - a1) / (8 * d),
            (2 * a1 - a2) / (8 * d),
            2 * a2 / (8 * d),
        )
    else:
        raise ValueError("idx must be in {1,2,3,4}")
    return PolynomialSpec(
        name=f"t{idx}[m={m}]",
        coeffs=coeffs,
        bracket=(max(0.5, m - 6.0), max(3.0, m - 4.0)),
        source=f"characteristic reduction of T_{{m,{idx}}}",
    )


def quartic_s4_poly(m: int) -> PolynomialSpec:
    """Quartic whose largest root is rho_abc(S_{m,4;m-4,1,1,1})^4 (m >= 5)."""
    d = 8.0 * (m - 3)
    return PolynomialSpec(
        name=f"s4_1111[m={m}]",
        coeffs=(
            (m * m - 8 * m + 16) / d,
            -(6 * m * m - 47 * m + 93) / d,
            (6 * m * m - 45 * m + 87) / (4.0 * (m - 3)),
            -(8 * m * m - 51 * m + 91) / d,
            1.0,
        ),
        bracket=(max(0.5, m - 6.0), max(2.0, m - 4.0)),
        source="characteristic reduction of S_{m,4;m-4,1,1,1}",
    )


def adjacency_s421_poly(m: int) -> PolynomialSpec:
    """Cubic whose largest root is rho_adj(S_{m,k;m-4,2,1})^k; the root
    lies in (m-3, m-2) for m >= 6."""
    return PolynomialSpec(
        name=f"adj_s421[m={m}]",
        coeffs=(8.0 - 2 * m, 3.0 * m - 10, -float(m), 1.0),
        bracket=(m - 3.0, m - 2.0),
        source="characteristic reduction of S_{m,k;m-4,2,1} (adjacency)",
    )


# ----------------------------------------------------------------------
# Closed-form radii.


def rho_abc_hyperstar(m: int, k: int) -> float:
    """rho_abc(S_{m,k}) = (m-1)^(1/k)."""
    return (m - 1) ** (1.0 / k)


def rho_abc_double_star1(m: int, k: int) -> float:
    """rho_abc(D_{m,1}^k): explicit radical, m >= 3."""
    rad = (m * m - 3 * m + 3 + math.sqrt((m - 1) ** 2 + (m - 2) ** 4)) / (2.0 * (m - 1))
    return rad ** (1.0 / k)


def rho_adj_double_star2(m: int, k: int) -> float:
    """rho_adj(D_{m,2}^k): explicit radical, m >= 5."""
    rad = (m + math.sqrt(m * m - 8 * m + 24)) / 2.0
    return rad ** (1.0 / k)


def rho_abc_u2(m: int, k: int) -> float:
    """rho_abc(U_{m,2}^(k)) = (m - 1 + 2/m)^(1/k), m >= 2."""
    return (m - 1 + 2.0 / m) ** (1.0 / k)


def rho_abc_u3(m: int, k: int) -> float:
    """rho_abc(U_{m,3}^(k)) = a_m^(2/k), a_m the largest root of the
    linear-unicyclic cubic, m >= 3."""
    a_m = largest_real_root(linear_unicyclic_poly(m))
    return a_m ** (2.0 / k)


def rho_abc_s311(m: int, k: int) -> float:
    """rho_abc(S_{m,k;m-3,1,1}) = b_m^(1/k), m >= 4, k >= 3."""
    b_m = largest_real_root(eta_poly(m))
    return b_m ** (1.0 / k)


def rho_abc_t(m: int, idx: int) -> float:
    """rho_abc(T_{m,idx}) for the 3-uniform T families."""
    return largest_real_root(t_poly(m, idx)) ** (1.0 / 3.0)


def rho_abc_s4_1111(m: int, k: int = 4) -> float:
    """rho_abc(S_{m,k;m-4,1,1,1}) = t0^(1/k) with t0 the largest root of
    the quartic for the 4-uniform base (k >= 4)."""
    t0 = largest_real_root(quartic_s4_poly(m))
    return t0 ** (1.0 / k)


def rho_abc_hyperpath(m: int, k: int) -> float:
    """rho_abc(P_{m,k}) = (2 cos^2(pi/(m+2)))^(1/k), m >= 2.

    Every edge of the 2-uniform path P_{m,2} has abc weight sqrt(1/2)
    (degree pairs (1,2) and (2,2) both give radicand 1/2), so its abc
    matrix is sqrt(1/2) times the path adjacency matrix with spectral
    radius 2 cos(pi/(m+2)); powering lifts the value by the exponent 2/k.
    """
    if m < 2:
        raise ValueError("hyperpath closed form needs m >= 2")
    return (2.0 * math.cos(math.pi / (m + 2)) ** 2) ** (1.0 / k)


def rho_abc_complete_bound(n: int, k: int) -> float:
    """(k C(n-1,k-1) - k)^(1/k), attained by K_n^(k)."""
    return (k * math.comb(n - 1, k - 1) - k) ** (1.0 / k)


def closed_form(name: str, **params) -> float:
    """Dispatch by closed-form name (CLI helper)."""
    table = {
        "hyperstar": (("m", "k"), rho_abc_hyperstar),
        "double-star-1": (("m", "k"), rho_abc_double_star1),
        "double-star-2-adj": (("m", "k"), rho_adj_double_star2),
        "u2": (("m", "k"), rho_abc_u2),
        "u3": (("m", "k"), rho_abc_u3),
        "s311": (("m", "k"), rho_abc_s311),
        "t-family": (("m", "idx"), rho_abc_t),
        "s4-1111": (("m",), rho_abc_s4_1111),
        "hyperpath": (("m", "k"), rho_abc_hyperpath),
        "complete-bound": (("n", "k"), rho_abc_complete_bound),
    }
    if name not in table:
        raise ValueError(f"unknown closed form {name!r}; known: {sorted(table)}")
    needed, fn = table[name]
    missing = [p for p in needed if params.get(p) is None]
    if missing:
        raise ValueError(f"closed form {name!r} requires {', '.join('--' + p for p in needed)}")
    if name == "s4-1111" and params.get("k"):
        return fn(params["m"], params["k"])
    return fn(*(params[p] for p in needed))


CLOSED_FORM_NAMES: Sequence[str] = (
    "hyperstar",
    "double-star-1",
    "double-star-2-adj",
    "u2",
    "u3",
    "s311",
    "t-family",
    "s4-1111",
    "hyperpath",
    "complete-bound",
)
