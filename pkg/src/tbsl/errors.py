"""Exception types shared across the package."""


class KnotNotLink(ValueError):
    """Raised when a fraction with odd numerator is offered as a two-bridge link.

    Odd numerators describe two-bridge knots; everything here needs two
    components, i.e. an even numerator.
    """


class OutOfScope(ValueError):
    """Raised when an operation is asked about a link outside its hypotheses.

    Torus links and non-fibered links are rejected with a message naming
    the failed hypothesis.
    """


class FramingMismatch(ValueError):
    """Raised when regions or diagrams with different framing tags are mixed."""


class UnsupportedSlope(ValueError):
    """Raised for surgery moves requested at slopes the calculus does not cover."""
