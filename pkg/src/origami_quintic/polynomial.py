"""Quintic coefficient handling and real-root isolation.

Coefficients are stored densely in descending degree order (a5 .. a0).
The root finder isolates distinct real roots with a Sturm chain plus
interval bisection and polishes each root with safeguarded Newton steps;
multiplicities are judged from derivative magnitudes at the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DegenerateDegree, NoScaleFound, NotDepressed, ZeroScale

DEGREE = 5


@dataclass(frozen=True)
class Quintic:
    """Degree-5 polynomial a5*t^5 + a4*t^4 + a3*t^3 + a2*t^2 + a1*t + a0."""

    a5: float
    a4: float
    a3: float
    a2: float
    a1: float
    a0: float

    def __post_init__(self) -> None:
        if self.a5 == 0.0:
            raise DegenerateDegree("leading coefficient is zero; not a quintic")

    @property
    def coeffs(self) -> tuple[float, float, float, float, float, float]:
        return (self.a5, self.a4, self.a3, self.a2, self.a1, self.a0)

    @property
    def is_monic(self) -> bool:
        return self.a5 == 1.0


def normalize_monic(coeffs: Sequence[float]) -> Quintic:
    """Scale the six coefficients by the leading one; roots are unchanged."""
    if len(coeffs) != 6:
        raise ValueError(f"expected 6 coefficients, got {len(coeffs)}")
    lead = float(coeffs[0])
    if lead == 0.0:
        raise DegenerateDegree("leading coefficient is zero; not a quintic")
    if lead == 1.0:
        return Quintic(*(float(c) for c in coeffs))
    return Quintic(1.0, *(float(c) / lead for c in coeffs[1:]))


def evaluate(q: Quintic, t: float) -> float:
    """Horner evaluation of q at t."""
    return _horner(q.coeffs, t)


def depress(q: Quintic) -> tuple[Quintic, float]:
    """Remove the quartic term via the shift t = t' - a4/5.

    Returns the depressed quintic together with the shift; roots of the
    input are the roots of the output minus the shift.  The quartic
    coefficient of the result is exactly zero.
    """
    _require_monic(q)
    if q.a4 == 0.0:
        return q, 0.0
    # branch on a4, not shift: a subnormal a4 underflows shift to zero but
    # must still produce an exactly depressed result
    shift = q.a4 / 5.0
    # Taylor expansion of q about -shift gives the coefficients of q(t' - shift).
    taylor = _taylor_coefficients(q.coeffs, -shift)
    coeffs = list(reversed(taylor))
    coeffs[0] = 1.0
    coeffs[1] = 0.0
    return Quintic(*coeffs), shift


def scale(q: Quintic, c: float) -> Quintic:
    """Monic quintic whose roots are the input's roots divided by c.

    Substitutes t = c * t' and renormalizes: coefficient i (descending)
    becomes a_i / c**i.
    """
    _require_monic(q)
    if c == 0.0:
        raise ZeroScale("scale factor must be nonzero")
    if c == 1.0:
        return q
    out = [q.coeffs[i] / c**i for i in range(6)]
    out[0] = 1.0
    return Quintic(*out)


def nishimura_precondition(q: Quintic) -> bool:
    """Test e^2 - 4*(b3 + b1 + 1) >= 0 on a depressed monic quintic,
    where b3, b1, e are the cubic, linear and constant coefficients.

    This is the admissibility condition of the depressed-form analysis
    (equivalently: the configuration discriminant at h = 1 is nonnegative).
    """
    _require_monic(q)
    if q.a4 != 0.0:
        raise NotDepressed("quartic coefficient must be zero")
    return q.a0 * q.a0 - 4.0 * (q.a3 + q.a1 + 1.0) >= 0.0


def find_scale_for_precondition(q: Quintic) -> float:
    """Search a fixed grid of scale factors until the depressed-form
    precondition holds: c = 1, 1/2, 1/3, ..., 1/64, then 2, 3, ..., 64.
    """
    _require_monic(q)
    if q.a4 != 0.0:
        raise NotDepressed("quartic coefficient must be zero")
    candidates = [1.0]
    candidates += [1.0 / n for n in range(2, 65)]
    candidates += [float(n) for n in range(2, 65)]
    for c in candidates:
        if nishimura_precondition(scale(q, c)):
            return c
    raise NoScaleFound("no admissible scale in 1, 1/2..1/64, 2..64")


def cauchy_bound(q: Quintic) -> float:
    """Upper bound 1 + max |a_i| on the magnitude of every root (monic input)."""
    _require_monic(q)
    return 1.0 + max(abs(c) for c in q.coeffs[1:])


def real_roots(
    q: Quintic, tol: float = 1e-12, multiplicity_tol: float = 1e-6
) -> list[tuple[float, int]]:
    """All real roots of a monic quintic, ascending, with multiplicities.

    Distinct roots are isolated by Sturm sign-variation counts on a
    bisected interval [-B, B] (B the Cauchy bound), refined by bisection
    to bracket width <= tol on the square-free part and polished with
    Newton steps.  A root is declared m-fold when its first m-1
    derivatives are numerically zero relative to the evaluation scale,
    with multiplicity_tol quantifying the judgment.

    A real quintic always has at least one real root, so the result is
    never empty.
    """
    _require_monic(q)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    bound = cauchy_bound(q)
    chain, square_free = _sturm_chain(q.coeffs)

    lo, hi = -bound, bound
    brackets = _isolate(chain, lo, hi, _variations(chain, lo), _variations(chain, hi))

    d_square_free = _poly_derivative(square_free)
    roots: list[tuple[float, int]] = []
    for blo, bhi in brackets:
        root = _refine_root(square_free, d_square_free, blo, bhi, tol)
        roots.append((root, _multiplicity(q.coeffs, root, multiplicity_tol)))
    roots.sort(key=lambda pair: pair[0])
    return roots


# ---------------------------------------------------------------------------
# dense polynomial helpers (coefficients descending)

def _require_monic(q: Quintic) -> None:
    if not q.is_monic:
        raise ValueError("expected a monic quintic; call normalize_monic first")


def _horner(coeffs: Sequence[float], t: float) -> float:
    acc = 0.0
    for c in coeffs:
        acc = acc * t + c
    return acc


def _horner_abs(coeffs: Sequence[float], t: float) -> float:
    at = abs(t)
    acc = 0.0
    for c in coeffs:
        acc = acc * at + abs(c)
    return acc


def _poly_derivative(coeffs: Sequence[float]) -> list[float]:
    n = len(coeffs) - 1
    if n == 0:
        return [0.0]
    return [coeffs[i] * (n - i) for i in range(n)]


def _taylor_coefficients(coeffs: Sequence[float], x0: float) -> list[float]:
    """Ascending Taylor coefficients b_k of p about x0: p(x) = sum b_k (x-x0)^k."""
    work = list(coeffs)
    rems: list[float] = []
    while len(work) > 1:
        acc = work[0]
        quot = [acc]
        for c in work[1:]:
            acc = acc * x0 + c
            quot.append(acc)
        rems.append(quot[-1])
        work = quot[:-1]
    rems.append(work[0])
    return rems


def _frac_trim(coeffs: list[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while len(out) > 1 and out[0] == 0:
        out.pop(0)
    return out


def _frac_derivative(coeffs: Sequence[Fraction]) -> list[Fraction]:
    n = len(coeffs) - 1
    if n == 0:
        return [Fraction(0)]
    return [coeffs[i] * (n - i) for i in range(n)]


def _frac_rem(num: Sequence[Fraction], den: Sequence[Fraction]) -> list[Fraction]:
    out = list(num)
    dn = len(den) - 1
    quot_len = len(out) - dn
    for i in range(quot_len):
        coef = out[i] / den[0]
        for j in range(1, dn + 1):
            out[i + j] -= coef * den[j]
    rem = out[quot_len:]
    return rem if rem else [Fraction(0)]


def _frac_div_exact(num: Sequence[Fraction], den: Sequence[Fraction]) -> list[Fraction]:
    out = list(num)
    dn = len(den) - 1
    quot = []
    for i in range(len(out) - dn):
        coef = out[i] / den[0]
        quot.append(coef)
        for j in range(1, dn + 1):
            out[i + j] -= coef * den[j]
    return quot


def _to_floats(coeffs: Sequence[Fraction]) -> list[float]:
    peak = max(abs(c) for c in coeffs)
    if peak == 0:
        return [0.0 for _ in coeffs]
    return [float(c / peak) for c in coeffs]


def _sturm_chain(coeffs: Sequence[float]) -> tuple[list[list[float]], list[float]]:
    """Sturm chain and square-free part of p.

    The remainder sequence runs in exact rational arithmetic (float
    coefficients are exact rationals and degree 5 keeps the bit growth
    tame), so zero remainders, and with them repeated roots, are detected
    exactly instead of through an epsilon.  Each chain element is then
    max-norm normalized and converted to floats for fast sign-variation
    counting.
    """
    exact = _frac_trim([Fraction(c) for c in coeffs])
    chain = [exact, _frac_trim(_frac_derivative(exact))]
    while len(chain[-1]) > 1:
        rem = _frac_trim([-c for c in _frac_rem(chain[-2], chain[-1])])
        if all(c == 0 for c in rem):
            # early termination: chain[-1] is gcd(p, p'), divide it out
            square_free = _frac_div_exact(exact, chain[-1])
            return [_to_floats(p) for p in chain], _to_floats(square_free)
        chain.append(rem)
    return [_to_floats(p) for p in chain], _to_floats(exact)


def _variations(chain: Sequence[Sequence[float]], x: float) -> int:
    count = 0
    prev = 0.0
    for poly in chain:
        v = _horner(poly, x)
        if v == 0.0:
            continue
        if prev != 0.0 and (v > 0.0) != (prev > 0.0):
            count += 1
        prev = v
    return count


def _isolate(
    chain: Sequence[Sequence[float]], lo: float, hi: float, vlo: int, vhi: int
) -> list[tuple[float, float]]:
    count = vlo - vhi
    if count <= 0:
        return []
    min_width = 1e-13 * max(1.0, abs(lo), abs(hi))
    if count == 1 or hi - lo <= min_width:
        return [(lo, hi)]
    mid = 0.5 * (lo + hi)
    # never probe exactly at a root of p (would make variation counts ambiguous)
    tries = 0
    while _horner(chain[0], mid) == 0.0 and tries < 4:
        mid += (hi - lo) * 1e-7
        tries += 1
    vm = _variations(chain, mid)
    return _isolate(chain, lo, mid, vlo, vm) + _isolate(chain, mid, hi, vm, vhi)


def _refine_root(
    poly: Sequence[float], dpoly: Sequence[float], lo: float, hi: float, tol: float
) -> float:
    flo = _horner(poly, lo)
    fhi = _horner(poly, hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        # no sign change (endpoint noise); fall back to clipped Newton from the midpoint
        return _newton_polish(poly, dpoly, 0.5 * (lo + hi), lo, hi)
    width = tol
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = _horner(poly, mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    return _newton_polish(poly, dpoly, 0.5 * (lo + hi), lo, hi)


def _newton_polish(
    poly: Sequence[float], dpoly: Sequence[float], x: float, lo: float, hi: float
) -> float:
    best = x
    best_val = abs(_horner(poly, x))
    for _ in range(40):
        d = _horner(dpoly, x)
        if d == 0.0:
            break
        step = _horner(poly, x) / d
        x -= step
        if x < lo or x > hi:
            x = min(max(x, lo), hi)
        val = abs(_horner(poly, x))
        if val < best_val:
            best, best_val = x, val
        if abs(step) <= 1e-17 * max(1.0, abs(x)):
            break
    return best


def _multiplicity(coeffs: Sequence[float], root: float, mult_tol: float) -> int:
    mult = 1
    deriv = list(coeffs)
    for _ in range(DEGREE - 1):
        deriv = _poly_derivative(deriv)
        value = _horner(deriv, root)
        scale_ = _horner_abs(deriv, root)
        if abs(value) <= mult_tol * (1.0 + scale_):
            mult += 1
        else:
            break
    return mult


def coefficient_gap(got: Sequence[float], want: Sequence[float]) -> float:
    """Worst per-coefficient error |got - want| / max(1, |want|)."""
    if len(got) != len(want):
        raise ValueError("coefficient sequences differ in length")
    return max(abs(g - w) / max(1.0, abs(w)) for g, w in zip(got, want))


def parse_coefficient(text: str) -> float:
    """Parse one coefficient: integer, decimal, or fraction 'p/q'."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse coefficient {text!r}") from exc
