"""Exception hierarchy raised by :mod:`hother.perispec`.

A single base class :class:`PerispecError` with one level of subclasses. Each
subclass stores the data that explains the failure as keyword-only attributes
and renders them into its message, so callers (and the CLI) can report what
went wrong without parsing strings.

These exceptions signal misuse or a numerical situation the engine refuses to
guess about: a singular pencil, a zero sitting on a weight circle, a path that
is not generic. They abort the call that hit them.

Findings are different. A Seifert instance that violates the eta/mu-bar
identity is reported as a failed :class:`~hother.perispec.seifert.sweep.BarmuVerdict`
inside the sweep report, and a ``d_value`` query at a non-zero returns 0 with a
warning. Do not turn findings into exceptions.
"""

from __future__ import annotations


class PerispecError(Exception):
    """Base class for all exceptions raised by ``hother.perispec``."""


class InvalidInputError(PerispecError):
    """Raised for malformed matrices, documents or parameters.

    Attributes:
        reason: What was wrong with the input.
    """

    reason: str

    def __init__(self, *, reason: str) -> None:
        super().__init__(f"Invalid input: {reason}")
        self.reason = reason


class NonFiniteSampleError(PerispecError):
    """Raised when a contour integrand is not finite at a quadrature node.

    Attributes:
        node: Index of the offending node.
        point: Location of the node in the complex plane.
    """

    node: int
    point: complex

    def __init__(self, *, node: int, point: complex) -> None:
        super().__init__(f"Integrand is not finite at node {node} (point {point:.6g}).")
        self.node = node
        self.point = point


class SingularPencilError(PerispecError):
    """Raised when a matrix polynomial has an identically vanishing determinant.

    Attributes:
        context: Which object was being built or solved.
    """

    context: str

    def __init__(self, *, context: str) -> None:
        super().__init__(f"Singular pencil: determinant vanishes identically ({context}).")
        self.context = context


class NearSingularError(PerispecError):
    """Raised when a resolvent is requested too close to a spectral point.

    Attributes:
        point: The spectral point that is too close.
        distance: Distance between the request and that point.
    """

    point: complex
    distance: float

    def __init__(self, *, point: complex, distance: float) -> None:
        super().__init__(f"Operator is near-singular: spectral point {point:.6g} lies at distance {distance:.3g}.")
        self.point = point
        self.distance = distance


class ContourProximityError(PerispecError):
    """Raised when an integration circle passes too close to another spectral point.

    Attributes:
        center: Center of the circle.
        radius: Radius of the circle.
        neighbor: The spectral point the circle cannot safely avoid.
    """

    center: complex
    radius: float
    neighbor: complex

    def __init__(self, *, center: complex, radius: float, neighbor: complex) -> None:
        message = (
            f"Contour around {center:.6g} with radius {radius:.3g} "
            f"does not isolate it from spectral point {neighbor:.6g}."
        )
        super().__init__(message)
        self.center = center
        self.radius = radius
        self.neighbor = neighbor


class PoleOrderError(PerispecError):
    """Raised when more Laurent coefficients are requested than the pole has.

    Attributes:
        requested: The order that was asked for.
        detected: The pole order actually found.
    """

    requested: int
    detected: int

    def __init__(self, *, requested: int, detected: int) -> None:
        super().__init__(f"Requested Laurent order {requested} exceeds the detected pole order {detected}.")
        self.requested = requested
        self.detected = detected


class BoundaryProximityError(PerispecError):
    """Raised when a symbol zero lies within the guard band of an annulus circle.

    Attributes:
        zero: The offending zero.
        radius: Radius of the circle it is too close to.
    """

    zero: complex
    radius: float

    def __init__(self, *, zero: complex, radius: float) -> None:
        super().__init__(f"Symbol zero {zero:.6g} lies too close to the circle |z| = {radius:.6g}.")
        self.zero = zero
        self.radius = radius


class NotFredholmError(PerispecError):
    """Raised when the weight circle meets the spectral set of the symbol.

    Attributes:
        zero: A zero of the determinant on (or nearest to) the weight circle.
        delta: The weight.
    """

    zero: complex
    delta: float

    def __init__(self, *, zero: complex, delta: float) -> None:
        super().__init__(f"Operator is not Fredholm at weight delta={delta:.6g}: symbol zero {zero:.6g} on the circle.")
        self.zero = zero
        self.delta = delta


class WindingResolutionError(PerispecError):
    """Raised when the phase of a determinant cannot be resolved on a circle.

    Attributes:
        max_nodes: The largest node count that was tried.
    """

    max_nodes: int

    def __init__(self, *, max_nodes: int) -> None:
        super().__init__(f"Winding number did not resolve with {max_nodes} nodes; a zero is too close to the circle.")
        self.max_nodes = max_nodes


class TruncationNotStabilizedError(PerispecError):
    """Raised when truncated kernel counts keep changing up to the site limit.

    Attributes:
        max_sites: The largest truncation size that was tried.
    """

    max_sites: int

    def __init__(self, *, max_sites: int) -> None:
        super().__init__(f"Truncated kernel dimensions did not stabilize up to N={max_sites}; increase N.")
        self.max_sites = max_sites


class TrackingCollisionError(PerispecError):
    """Raised when spectral curves cannot be matched even at the finest step.

    Attributes:
        t_start: Start of the unresolved parameter window.
        t_end: End of the unresolved parameter window.
    """

    t_start: float
    t_end: float

    def __init__(self, *, t_start: float, t_end: float) -> None:
        super().__init__(
            f"Spectral curves collide in the window t in [{t_start:.10g}, {t_end:.10g}]; path is not generic."
        )
        self.t_start = t_start
        self.t_end = t_end


class TangentialCrossingError(PerispecError):
    """Raised when a spectral curve meets the weight circle without crossing transversally.

    Attributes:
        t_star: Parameter of the crossing.
        rate: The measured radial speed d(ln|z|)/dt.
    """

    t_star: float
    rate: float

    def __init__(self, *, t_star: float, rate: float) -> None:
        super().__init__(f"Tangential crossing at t={t_star:.10g}: radial rate {rate:.3g} is below the guard.")
        self.t_star = t_star
        self.rate = rate


class DegenerateCrossingError(PerispecError):
    """Raised when a crossing carries a local d-value above one.

    Attributes:
        t_star: Parameter of the crossing.
        d: Local d-value at the crossing.
    """

    t_star: float
    d: int

    def __init__(self, *, t_star: float, d: int) -> None:
        super().__init__(f"Degenerate crossing at t={t_star:.10g}: local d-value {d} > 1.")
        self.t_star = t_star
        self.d = d


class IrregularEndpointError(PerispecError):
    """Raised when a symbol path starts or ends with a zero on the weight circle.

    Attributes:
        endpoint: ``0.0`` or ``1.0``.
        zero: The zero on (or near) the circle.
    """

    endpoint: float
    zero: complex

    def __init__(self, *, endpoint: float, zero: complex) -> None:
        super().__init__(f"Path endpoint t={endpoint:g} is not regular: symbol zero {zero:.6g} on the weight circle.")
        self.endpoint = endpoint
        self.zero = zero


class NonCoprimeError(PerispecError):
    """Raised when two integers that must be coprime share a factor.

    Attributes:
        first: First integer.
        second: Second integer.
    """

    first: int
    second: int

    def __init__(self, *, first: int, second: int) -> None:
        super().__init__(f"{first} and {second} are not coprime.")
        self.first = first
        self.second = second


class DegenerateSeifertError(PerispecError):
    """Raised when fewer than three non-trivial fibers remain.

    Attributes:
        multiplicities: The multiplicities as given.
    """

    multiplicities: tuple[int, ...]

    def __init__(self, *, multiplicities: tuple[int, ...]) -> None:
        super().__init__(
            f"Seifert data {multiplicities} has fewer than three exceptional fibers (S^3 or lens space); unsupported."
        )
        self.multiplicities = multiplicities


class SeifertNormalizationError(PerispecError):
    """Raised when normalized Seifert invariants cannot be solved for.

    Attributes:
        multiplicities: The fiber multiplicities.
    """

    multiplicities: tuple[int, ...]

    def __init__(self, *, multiplicities: tuple[int, ...]) -> None:
        super().__init__(f"No normalized Seifert invariants with Euler number -1/prod(a) for {multiplicities}.")
        self.multiplicities = multiplicities


class WuClassError(PerispecError):
    """Raised when the Wu class equations are singular modulo 2.

    Attributes:
        size: Number of plumbing vertices.
    """

    size: int

    def __init__(self, *, size: int) -> None:
        super().__init__(f"Wu class system on {size} vertices is singular mod 2 (determinant is even).")
        self.size = size


class IntegralityError(PerispecError):
    """Raised when a quantity that must be an integer comes out fractional.

    Attributes:
        quantity: Name of the quantity.
        value: Its exact value, as a string.
    """

    quantity: str
    value: str

    def __init__(self, *, quantity: str, value: str) -> None:
        super().__init__(f"Internal consistency failure: {quantity} = {value} is not an integer.")
        self.quantity = quantity
        self.value = value


__all__ = [
    "BoundaryProximityError",
    "ContourProximityError",
    "DegenerateCrossingError",
    "DegenerateSeifertError",
    "IntegralityError",
    "InvalidInputError",
    "IrregularEndpointError",
    "NearSingularError",
    "NonCoprimeError",
    "NonFiniteSampleError",
    "NotFredholmError",
    "PerispecError",
    "PoleOrderError",
    "SeifertNormalizationError",
    "SingularPencilError",
    "TangentialCrossingError",
    "TrackingCollisionError",
    "TruncationNotStabilizedError",
    "WindingResolutionError",
    "WuClassError",
]
