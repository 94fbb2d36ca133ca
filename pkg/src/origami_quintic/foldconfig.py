"""Inverse construction: from quintic coefficients to the fold configuration.

Given a monic quintic t^5 + A*t^4 + B*t^3 + G*t^2 + D*t + E, this module
computes the parameters (h, b, c, k, p, q) of the point/line set

    Q(0, h),  m: y = -h,  P(p, q),  l: x = k,  n: x + b*y = c

for which the two-simultaneous-fold operation's admissible fold parameter
t satisfies exactly that quintic.  ``forward_coefficients`` is the
authoritative statement of the coefficient system; everything else here
inverts it and is certified against it by roundtrip.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import polynomial
from .errors import (
    DegenerateP,
    NegativeDiscriminant,
    NoValidH,
    SingularSystem,
    ZeroConstantTerm,
)
from .geometry import Line, Point
from .polynomial import Quintic

_COND_LIMIT = 1e14


class Branch(str, Enum):
    """Sign choice in the quadratic solution for (b, c).

    PLUS takes +sqrt(D) in b coupled with -3*sqrt(D) in c; MINUS the
    opposite.  Both branches yield valid configurations; at D = 0 they
    coincide.
    """

    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class FoldConfig:
    """Solved configuration parameters plus the derived points and lines."""

    h: float
    b: float
    c: float
    k: float
    p: float
    q: float
    branch: Branch
    D: float

    @property
    def point_q(self) -> Point:
        return Point(0.0, self.h)

    @property
    def line_m(self) -> Line:
        return Line(0.0, 1.0, -self.h)

    @property
    def point_p(self) -> Point:
        return Point(self.p, self.q)

    @property
    def line_l(self) -> Line:
        return Line(1.0, 0.0, self.k)

    @property
    def line_n(self) -> Line:
        return Line(1.0, self.b, self.c)

    @property
    def max_abs_parameter(self) -> float:
        return max(abs(v) for v in (self.h, self.b, self.c, self.k, self.p, self.q))


@dataclass(frozen=True)
class NishimuraReport:
    """Intermediates of the depressed-form route, for side-by-side comparison."""

    depressed: Quintic
    shift: float
    scale: float
    scaled: Quintic
    precondition_holds: bool
    config: FoldConfig


def forward_coefficients(
    b: float, c: float, k: float, p: float, q: float, h: float
) -> tuple[float, float, float, float, float]:
    """Quintic coefficients (quartic..constant) produced by a parameter tuple.

    This is the forward direction of the construction and the oracle every
    inverse step is checked against.
    """
    b2 = b * b
    alpha = (-k - p + 2.0 * b * q - b2 * k + b2 * p - 12.0 * b * h - 2.0 * c) / 4.0
    beta = h * (q + 2.0 * b * p - b2 * q + b * c - h + 2.0 * b2 * h)
    gamma = h * h * (3.0 * p - k - 6.0 * b * q - b2 * k - 3.0 * b2 * p + 2.0 * b * h) / 2.0
    delta = -(h**3) * (q + 2.0 * b * p - b2 * q - b * c)
    epsilon = h**4 * (-k - p + 2.0 * b * q - b2 * k + b2 * p + 2.0 * c) / 4.0
    return alpha, beta, gamma, delta, epsilon


def config_quintic(cfg: FoldConfig) -> Quintic:
    """The monic quintic this configuration solves."""
    return Quintic(1.0, *forward_coefficients(cfg.b, cfg.c, cfg.k, cfg.p, cfg.q, cfg.h))


def discriminant(q: Quintic, h: float) -> float:
    """D = (E - h^4*A)^2 - 4*h^6*(h^4 + h^2*B + D1) for the monic quintic
    with quartic A, cubic B, linear D1 and constant E coefficients.

    Nonnegative D admits real (b, c); for parameter tuples it equals
    h^8 * (c - b*h)^2.
    """
    _require_monic(q)
    if h <= 0.0:
        raise ValueError("h must be positive")
    lead = q.a0 - h**4 * q.a4
    return lead * lead - 4.0 * h**6 * (h**4 + h * h * q.a3 + q.a1)


def choose_h(q: Quintic) -> float:
    """First h in the trial sequence 1, 1/2, ..., 2^-40, 2, 4, ..., 2^20
    with a nonnegative discriminant.

    A zero constant term means t = 0 is a root and no configuration is
    built (the caller should deflate); otherwise D tends to the squared
    constant term as h -> 0, so the search succeeds.
    """
    _require_monic(q)
    if q.a0 == 0.0:
        raise ZeroConstantTerm("constant term is zero; t = 0 is a root")
    trials = [2.0**-i for i in range(41)] + [2.0**i for i in range(1, 21)]
    for h in trials:
        if discriminant(q, h) >= 0.0:
            return h
    raise NoValidH("discriminant negative for all h in 2^-40..2^20")


def compute_bc(q: Quintic, h: float, branch: Branch = Branch.PLUS) -> tuple[float, float]:
    """Solve the coupled pair (b, c) at the given h and sign branch.

    b = (E - h^4*A +- sqrt(D)) / (4*h^5) with the opposite triple sign in
    c = (E - h^4*A -+ 3*sqrt(D)) / (4*h^4).  Tiny negative D from rounding
    is clamped to zero; a genuinely negative D raises.
    """
    _require_monic(q)
    if h <= 0.0:
        raise ValueError("h must be positive")
    d = discriminant(q, h)
    lead = q.a0 - h**4 * q.a4
    floor = 64.0 * np.finfo(float).eps * (
        lead * lead + 4.0 * h**6 * (h**4 + abs(h * h * q.a3) + abs(q.a1)) + 1.0
    )
    if d < -floor:
        raise NegativeDiscriminant(f"D = {d:.6g} < 0 at h = {h:.6g}")
    root = math.sqrt(max(d, 0.0))
    sign = 1.0 if branch is Branch.PLUS else -1.0
    b = (lead + sign * root) / (4.0 * h**5)
    c = (lead - 3.0 * sign * root) / (4.0 * h**4)
    return b, c


def compute_kpq(q: Quintic, h: float, b: float, c: float) -> tuple[float, float, float]:
    """Solve the 3x3 linear system for (k, p, q) with b, c, h known.

    The three equations are the quartic, cubic and quadratic rows of the
    coefficient system; the remaining two rows are linearly dependent on
    them once (b, c) satisfy their compatibility relations.  A direct
    solve is used; closed forms serve only as cross-checks (see
    ``closed_form_kpq``).
    """
    _require_monic(q)
    if h <= 0.0:
        raise ValueError("h must be positive")
    alpha, beta, gamma = q.a4, q.a3, q.a2
    b2 = b * b
    matrix = np.array(
        [
            [-(1.0 + b2) / 4.0, (b2 - 1.0) / 4.0, b / 2.0],
            [0.0, 2.0 * b * h, h * (1.0 - b2)],
            [-h * h * (1.0 + b2) / 2.0, 3.0 * h * h * (1.0 - b2) / 2.0, -3.0 * b * h * h],
        ]
    )
    rhs = np.array(
        [
            alpha + 3.0 * b * h + c / 2.0,
            beta - b * c * h + h * h - 2.0 * b2 * h * h,
            gamma - b * h**3,
        ]
    )
    cond = np.linalg.cond(matrix)
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise SingularSystem(f"(k, p, q) system condition estimate {cond:.3e}")
    k, p, q_point = np.linalg.solve(matrix, rhs)
    return float(k), float(p), float(q_point)


def closed_form_kpq(
    alpha: float, beta: float, gamma: float, h: float, b: float, c: float
) -> tuple[float, float, float]:
    """Closed-form (k, p, q), as an independent cross-check of the solve.

    Note the signs: the quadratic-row coefficient enters k with a plus
    sign, and the leading cubic term of p is -b*h^3*(b^2 + 3); variants
    with the opposite signs fail the coefficient-system roundtrip (the
    adjudication test pins this down numerically).
    """
    b2 = b * b
    k = -(17.0 * b * h**3 + 3.0 * h * h * (c + 2.0 * alpha) + gamma) / (
        2.0 * h * h * (b2 + 1.0)
    )
    p = (
        -b * h**3 * (b2 + 3.0)
        + h * h * ((2.0 * alpha - 3.0 * c) * b2 - c - 2.0 * alpha)
        + 4.0 * b * h * beta
        + (1.0 - b2) * gamma
    ) / (2.0 * h * h * (b2 + 1.0) ** 2)
    q = (
        h**3 * (2.0 * b2 * b2 + 4.0 * b2 + 1.0)
        + b * h * h * (b2 * c + 2.0 * alpha)
        + beta * h * (1.0 - b2)
        - b * gamma
    ) / (h * h * (b2 + 1.0) ** 2)
    return k, p, q


def build_config(
    q: Quintic, h_override: float | None = None, branch: Branch = Branch.PLUS
) -> FoldConfig:
    """Full inverse construction for a monic quintic.

    Picks h (unless overridden), solves (b, c) on the requested branch,
    then (k, p, q) by linear solve.  P on line l (p = k) is rejected with
    retry advice rather than perturbed silently.
    """
    _require_monic(q)
    if q.a0 == 0.0:
        raise ZeroConstantTerm("constant term is zero; t = 0 is a root")
    h = float(h_override) if h_override is not None else choose_h(q)
    if h <= 0.0:
        raise ValueError("h must be positive")
    b, c = compute_bc(q, h, branch)
    d = max(discriminant(q, h), 0.0)
    k, p, q_point = compute_kpq(q, h, b, c)
    if abs(p - k) <= 1e-12 * max(1.0, abs(k), abs(p)):
        raise DegenerateP(
            f"P lies on line l (p = k = {k:.6g}) at h = {h:.6g}; retry with a different h"
        )
    return FoldConfig(h=h, b=b, c=c, k=k, p=p, q=q_point, branch=branch, D=d)


def nishimura_pipeline(q: Quintic, branch: Branch = Branch.PLUS) -> NishimuraReport:
    """Depressed-form route: depress, scale until admissible, build at h = 1.

    Reports every intermediate so the direct construction and the
    depressed-form one can be compared side by side.
    """
    _require_monic(q)
    depressed, shift = polynomial.depress(q)
    holds = polynomial.nishimura_precondition(depressed)
    factor = 1.0 if holds else polynomial.find_scale_for_precondition(depressed)
    scaled = polynomial.scale(depressed, factor)
    config = build_config(scaled, h_override=1.0, branch=branch)
    return NishimuraReport(
        depressed=depressed,
        shift=shift,
        scale=factor,
        scaled=scaled,
        precondition_holds=holds,
        config=config,
    )


def _require_monic(q: Quintic) -> None:
    if not q.is_monic:
        raise ValueError("expected a monic quintic; call normalize_monic first")
