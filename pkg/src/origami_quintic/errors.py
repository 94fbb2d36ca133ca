"""Exception hierarchy for the quintic two-fold construction."""


class OrigamiQuinticError(Exception):
    """Base class for all library errors."""


class DegenerateDegree(OrigamiQuinticError):
    """Leading coefficient is zero; the input is not a quintic."""


class ZeroScale(OrigamiQuinticError):
    """A scale change with factor 0 was requested."""


class NotDepressed(OrigamiQuinticError):
    """Operation requires a quintic with zero quartic coefficient."""


class NoScaleFound(OrigamiQuinticError):
    """The scale search grid was exhausted without meeting the predicate."""


class CoincidentPoints(OrigamiQuinticError):
    """A fold line through the midpoint of two points needs them distinct."""


class CoincidentLines(OrigamiQuinticError):
    """Two lines are canonically equal where a unique intersection is needed."""


class NotParallel(OrigamiQuinticError):
    """Distance between parallel lines requested for non-parallel lines."""


class ZeroConstantTerm(OrigamiQuinticError):
    """Constant term is zero: t = 0 is an exact root and the remaining
    factor is a quartic, outside the two-fold construction."""


class NoValidH(OrigamiQuinticError):
    """The trial sequence for h exhausted without a nonnegative discriminant."""


class NegativeDiscriminant(OrigamiQuinticError):
    """The configuration discriminant is negative at the chosen h."""


class SingularSystem(OrigamiQuinticError):
    """The 3x3 linear system for (k, p, q) is numerically singular."""


class DegenerateP(OrigamiQuinticError):
    """Computed P lies on line l (p = k); retry with a different h."""


class ConfigMismatch(OrigamiQuinticError):
    """A fold configuration does not reproduce the source quintic."""


class ZeroB(OrigamiQuinticError):
    """Parallel fold lines are impossible when line n is vertical (b = 0)."""


class EmptySolutions(OrigamiQuinticError):
    """A gallery rendering needs at least one solution."""
