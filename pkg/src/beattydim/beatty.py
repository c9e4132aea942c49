"""Beatty sequence membership, the chain map f, and constraint edges.

A parameter tuple (alpha, beta, gamma, delta) with 1 <= alpha < gamma
induces the sequence sets

    S(tau, eta) = { floor(tau*k + eta) : k = 1, 2, ... }  intersected with N,

the map f(floor(alpha*k + beta)) = floor(gamma*k + delta) (well defined
because k |-> floor(tau*k + eta) is injective for tau >= 1), and the
pair constraints A(x_u, x_v) = 1 over the edges (u, v) generated per k.

Besides the general exact operations, this module builds specialized
integer-only closures for membership and chain stepping: million-scale
window scans cannot afford generic object arithmetic per element.  For
rational parameters everything reduces to integer ceil/floor divisions;
for quadratic surds to one or two integer-square-root comparisons.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from .numerics import (
    QuadraticSurd,
    Rational,
    Real,
    RealLike,
    _add,
    _div,
    _mul,
    _neg,
    _reciprocal,
    _surd_floor_ints,
    as_real,
    ceil_value,
    compare,
    floor_linear,
    is_exact,
    normalize,
    parse_real,
)


class NotInDomain(ValueError):
    """f applied to a value outside S(alpha, beta)."""


class NonPositiveImage(ValueError):
    """floor(gamma*k + delta) < 1: the image falls outside N (possible
    for very negative delta at small k); such elements belong to the
    residual set of the decomposition."""


def _coerce(v) -> Real:
    if isinstance(v, str):
        return parse_real(v)
    return normalize(as_real(v))


class ParamTuple:
    """Validated parameter tuple with the derived ratio gamma/alpha and
    the chain growth bound C = (1 + |beta| + |delta|) * alpha / (gamma - alpha)."""

    __slots__ = ("alpha", "beta", "gamma", "delta", "ratio", "chain_bound")

    def __init__(self, alpha, beta, gamma, delta):
        alpha, beta = _coerce(alpha), _coerce(beta)
        gamma, delta = _coerce(gamma), _coerce(delta)
        if compare(alpha, 1) < 0:
            raise ValueError("alpha must satisfy alpha >= 1")
        if compare(alpha, gamma) >= 0:
            raise ValueError("parameters must satisfy alpha < gamma")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "ratio", _div(gamma, alpha))
        one_plus = _add(_add(Rational(Fraction(1)), abs(beta)), abs(delta))
        object.__setattr__(
            self, "chain_bound",
            _div(_mul(one_plus, alpha), _add(gamma, _neg(alpha))),
        )

    def __setattr__(self, *a):
        raise AttributeError("ParamTuple is immutable")

    def chain_bound_int(self) -> int:
        """Integer upper bound for C (safe for window-extension logic)."""
        _, hi = self.chain_bound.enclosure(64)
        return hi.numerator // hi.denominator + 1

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in
                   (self.alpha, self.beta, self.gamma, self.delta))

    def __repr__(self):
        return (f"ParamTuple({self.alpha!r}, {self.beta!r}, "
                f"{self.gamma!r}, {self.delta!r})")


# ---------------------------------------------------------------------------
# exact operations
# ---------------------------------------------------------------------------

def member(x: int, tau: RealLike, eta: RealLike) -> Optional[int]:
    """The unique k >= 1 with floor(tau*k + eta) = x, or None.

    floor(tau*k + eta) = x iff k lies in [(x-eta)/tau, (x+1-eta)/tau), a
    window of length 1/tau <= 1, so the smallest integer >= the left
    endpoint is the only candidate.
    """
    if x < 1:
        raise ValueError("membership is asked for positive integers only")
    tau, eta = as_real(tau), as_real(eta)
    k = ceil_value(_div(_add(Rational(Fraction(x)), _neg(eta)), tau))
    if k >= 1 and floor_linear(tau, k, eta) == x:
        return k
    return None


def f_map(x: int, p: ParamTuple) -> int:
    """f(x) = floor(gamma*k + delta) for the unique k with
    floor(alpha*k + beta) = x."""
    k = member(x, p.alpha, p.beta)
    if k is None:
        raise NotInDomain(f"{x} is not of the form floor(alpha*k + beta)")
    y = floor_linear(p.gamma, k, p.delta)
    if y < 1:
        raise NonPositiveImage(f"f({x}) = {y} falls outside the positive integers")
    return y


def constraint_edges(p: ParamTuple, n: int) -> list[tuple[int, int]]:
    """All pairs (floor(alpha*k+beta), floor(gamma*k+delta)) over k >= 1
    with both coordinates in [1, n]."""
    if n < 1:
        raise ValueError("window size must be >= 1")
    fu = floor_fn(p.alpha, p.beta)
    fv = floor_fn(p.gamma, p.delta)
    edges = []
    k = 1
    while True:
        v = fv(k)
        if v > n:
            break
        if v >= 1:
            u = fu(k)
            if 1 <= u <= n:
                edges.append((u, v))
        k += 1
    return edges


def beatty_values(tau: RealLike, eta: RealLike, limit: int) -> list[int]:
    """All values floor(tau*k + eta) for k >= 1 that land in [1, limit]."""
    fv = floor_fn(as_real(tau), as_real(eta))
    out = []
    k = 1
    while True:
        v = fv(k)
        if v > limit:
            break
        if v >= 1:
            out.append(v)
        k += 1
    return out


# ---------------------------------------------------------------------------
# fast integer closures
#
# An exact pair (tau, eta) within one quadratic field has the linear form
#     tau*k + eta = ((A*k + E) + (B*k + F) * sqrt(D)) / Z
# with integer A, B, E, F, Z > 0.  Floors then cost one isqrt (none when
# B = F = 0), which is what makes 10^6-element scans affordable.
# ---------------------------------------------------------------------------

def _parts(x: Real) -> Optional[tuple[Fraction, Fraction, int]]:
    if isinstance(x, Rational):
        return (x.value, Fraction(0), 0)
    if isinstance(x, QuadraticSurd):
        return (x.a, x.b, x.d)
    return None


def _linear_form(tau: Real, eta: Real):
    """Integer linear form of k -> tau*k + eta, or None if the two values
    do not live in a common quadratic field."""
    pt, pe = _parts(tau), _parts(eta)
    if pt is None or pe is None:
        return None
    (ta, tb, td), (ea, eb, ed) = pt, pe
    if td and ed and td != ed:
        return None
    d = td or ed
    dens = [ta.denominator, tb.denominator, ea.denominator, eb.denominator]
    z = 1
    for q in dens:
        z = z * q // gcd(z, q)
    A = ta.numerator * (z // ta.denominator)
    B = tb.numerator * (z // tb.denominator)
    E = ea.numerator * (z // ea.denominator)
    F = eb.numerator * (z // eb.denominator)
    return (A, B, E, F, z, d)


def floor_fn(tau: RealLike, eta: RealLike) -> Callable[[int], int]:
    """Fast k -> floor(tau*k + eta); falls back to the generic exact path
    for parameters outside a common quadratic field."""
    tau, eta = as_real(tau), as_real(eta)
    form = _linear_form(tau, eta)
    if form is None:
        return lambda k: floor_linear(tau, k, eta)
    A, B, E, F, Z, D = form
    if B == 0 and F == 0:
        return lambda k: (A * k + E) // Z
    sf = _surd_floor_ints

    def fast(k: int) -> int:
        Y = B * k + F
        X = A * k + E
        if Y == 0:
            return X // Z
        return sf(X, Y, D, Z)

    return fast


def _inverse_forms(tau: Real, eta: Real):
    """Linear form of x -> (x - eta)/tau, or None outside a common field."""
    if not (is_exact(tau) and is_exact(eta)):
        return None
    inv = _reciprocal(tau)
    shift = _neg(_mul(eta, inv))
    return _linear_form(inv, shift)


def membership_fn(tau: RealLike, eta: RealLike) -> Callable[[int], bool]:
    """Fast predicate x -> (x in S(tau, eta)) for x >= 1.

    x is a member iff k = ceil((x - eta)/tau) satisfies k >= 1 and
    floor(tau*k + eta) = x; both reduce to flat integer expressions in
    the common-field case (scans call this millions of times)."""
    tau, eta = as_real(tau), as_real(eta)
    wform = _inverse_forms(tau, eta)
    vform = _linear_form(tau, eta)
    if wform is None or vform is None:
        return lambda x: member(x, tau, eta) is not None
    A1, B1, E1, F1, Z1, D1 = wform
    A2, B2, E2, F2, Z2, D2 = vform
    sf = _surd_floor_ints
    if B1 == 0 and F1 == 0 and B2 == 0 and F2 == 0:
        return lambda x: (
            (k := -((-(A1 * x + E1)) // Z1)) >= 1
            and (A2 * k + E2) // Z2 == x
        )

    def fast(x: int) -> bool:
        X, Y = A1 * x + E1, B1 * x + F1
        k = -((-X) // Z1) if Y == 0 else -sf(-X, -Y, D1, Z1)
        if k < 1:
            return False
        Y2 = B2 * k + F2
        X2 = A2 * k + E2
        v = X2 // Z2 if Y2 == 0 else sf(X2, Y2, D2, Z2)
        return v == x

    return fast


def f_step_fn(p: ParamTuple) -> Callable[[int], int]:
    """Fast x -> f(x) for x already known to lie in S(alpha, beta).
    The returned image may be < 1 (caller decides residual handling)."""
    wform = _inverse_forms(p.alpha, p.beta)
    vform = _linear_form(p.gamma, p.delta)
    if wform is None or vform is None:
        def generic(x: int) -> int:
            k = member(x, p.alpha, p.beta)
            if k is None:
                raise NotInDomain(f"{x} not in S(alpha, beta)")
            return floor_linear(p.gamma, k, p.delta)
        return generic
    A1, B1, E1, F1, Z1, D1 = wform
    A2, B2, E2, F2, Z2, D2 = vform
    sf = _surd_floor_ints
    if B1 == 0 and F1 == 0 and B2 == 0 and F2 == 0:
        return lambda x: (A2 * (-((-(A1 * x + E1)) // Z1)) + E2) // Z2

    def fast(x: int) -> int:
        X, Y = A1 * x + E1, B1 * x + F1
        k = -((-X) // Z1) if Y == 0 else -sf(-X, -Y, D1, Z1)
        Y2 = B2 * k + F2
        X2 = A2 * k + E2
        return X2 // Z2 if Y2 == 0 else sf(X2, Y2, D2, Z2)

    return fast
