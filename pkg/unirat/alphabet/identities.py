"""
Exact verification of the polynomial identities behind the alphabet.

Failures never raise; they are recorded in the returned report.
"""

from fractions import Fraction

from ..expr import MultiPoly, NonDivisibleError, divide_exact, parse_map, parse_poly
from ..models import IdentityReport, SigmaReport, SymmetryReport
from ..utils import get_logger
from .fixtures import RING, AlphabetFixture

logger = get_logger(__name__)

# t -> t - z undoes the shift t -> z + t
UNSHIFT = ("x", "y", "z", "t - z")


def _compare(report: IdentityReport, name: str, lhs: MultiPoly, rhs: MultiPoly) -> None:
    holds = lhs == rhs
    detail = "" if holds else f"difference has {(lhs - rhs).nterms} terms"
    report.add(name, holds, detail)


def verify_symmetries(fx: AlphabetFixture) -> SymmetryReport:
    """Check the action of the swap x<->y and the shift t -> z+t on f1..f6."""
    report = SymmetryReport("symmetries")
    swap, shift = fx.swap, fx.shift

    _compare(report, "swap: f1 -> f2", swap(fx.f1), fx.f2)
    _compare(report, "swap: f2 -> f1", swap(fx.f2), fx.f1)
    _compare(report, "swap: f3 -> f4", swap(fx.f3), fx.f4)
    _compare(report, "swap: f4 -> f3", swap(fx.f4), fx.f3)
    _compare(report, "swap: f5 fixed", swap(fx.f5), fx.f5)
    _compare(report, "swap: f6 fixed", swap(fx.f6), fx.f6)
    _compare(report, "shift: f5 -> f6", shift(fx.f5), fx.f6)
    _compare(report, "shift: f1 fixed", shift(fx.f1), fx.f1)
    _compare(report, "shift: f2 fixed", shift(fx.f2), fx.f2)

    if not report.ok:
        logger.warning(f"{len(report.failures)} symmetry identities failed")
    return report


def verify_involutions(fx: AlphabetFixture) -> SymmetryReport:
    """The swap squares to the identity; the shift is undone by t -> t - z."""
    report = SymmetryReport("involutions")
    swap_twice = fx.swap.followed_by(fx.swap)
    shift_back = fx.shift.followed_by(parse_map(RING, RING, UNSHIFT))
    for name, poly in fx.polys.items():
        _compare(report, f"swap twice: {name} fixed", swap_twice(poly), poly)
        _compare(report, f"shift then inverse: {name} fixed", shift_back(poly), poly)
    return report


def verify_sigma(fx: AlphabetFixture) -> SigmaReport:
    """Check the Cremona-map identities as exact canonical-form equalities."""
    report = SigmaReport("cremona map")
    sigma = fx.sigma
    ring = fx.ring

    def P(text):
        return parse_poly(text, ring)

    # sigma o sigma = 4xyz * identity
    factor = P("4*x*y*z")
    square = sigma.followed_by(sigma)
    holds = all(image == factor * gen for image, gen in zip(square.images, ring.gens()))
    report.add("sigma o sigma = 4xyz * id", holds, "" if holds else str(square.images))

    _compare(report, "f1 o sigma = -4x(y - z)", sigma(fx.f1), P("-4*x*(y - z)"))
    _compare(report, "f2 o sigma = -4y(x - z)", sigma(fx.f2), P("-4*y*(x - z)"))
    _compare(report, "f3 o sigma = 4xyz^2(xz - (y-t)^2)", sigma(fx.f3), P("4*x*y*z^2") * fx.B6)
    _compare(report, "f4 o sigma = 4xyz^2(yz - (x-t)^2)", sigma(fx.f4), P("4*x*y*z^2") * fx.B5)

    pullback = sigma(fx.f)
    monomial = P("x^3*y^3*z^4")
    quartet = fx.B3 * fx.B4 * fx.B6 * fx.B5
    factored = "256 (x-z)(y-z)(xz-(y-t)^2)(yz-(x-t)^2)"
    _compare(report, f"f o sigma = x^3y^3z^4 * {factored}", pullback, 256 * monomial * quartet)

    try:
        quotient = divide_exact(pullback, monomial)
        _compare(report, f"(f o sigma) / x^3y^3z^4 = {factored}", quotient, 256 * quartet)
    except NonDivisibleError as exc:
        report.add(f"(f o sigma) / x^3y^3z^4 = {factored}", False, str(exc))

    # w' = x y z^2 w turns the branch of X into the pullback of f
    _compare(
        report,
        "x^2y^2z^4 * branch(X) = (f o sigma) / 256",
        P("x^2*y^2*z^4") * fx.branch,
        pullback * Fraction(1, 256),
    )

    if not report.ok:
        logger.warning(f"{len(report.failures)} Cremona identities failed")
    return report
