"""Parameter-region classification and closed-form density vectors.

The parameter space {1 <= alpha < gamma} splits into regions with known
density vectors:

* R1   alpha = 1 (any gamma > 1):            d = (0, 0, 0.., 1 - 1/gamma)
* R2   alpha, gamma rational, alpha > 1:     residue-cover machinery below
* R3   alpha irrational, gamma rational:     d_i = (alpha-1)(gamma-1)/(alpha^i gamma)
* R4   alpha, gamma irrational with {1, 1/alpha, 1/gamma} Q-independent:
       same formula as R3
* R5   dependent irrationals passing one of two witness conditions
       ((i): n/alpha + m/gamma = 1 with n*beta/alpha + m*delta/gamma
       integral; (ii): gamma/alpha = m/n in lowest terms with
       1 - m/alpha >= {m(beta-delta)/alpha} >= m/alpha):
       d = (1 - 1/alpha - 1/gamma, 1/alpha, 0.., 0)
* R6Open  dependent irrationals with neither condition detected: no
       closed form is known (open problem); empirical estimation only.
* R7..R10  the all-integer classification by alpha = 1 / divisibility of
       beta - delta by (alpha, gamma) / alpha_1 = 1.

Integer tuples admit both the direct formulas and the residue-cover
computation; the two must agree exactly, which the test suite checks.

For quadratic surds Q-linear independence of {1, 1/alpha, 1/gamma} is
decided exactly: distinct square-free radicands are always independent,
a shared radicand always dependent.  Interval-only parameters make
rationality and independence undecidable, so they classify as Unknown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .beatty import ParamTuple
from .chains import DEFAULT_K, ClosedForm, DensityVector
from .numerics import (
    PrecisionExhausted,
    QuadraticSurd,
    Rational,
    Real,
    RealLike,
    _add,
    _div,
    _mul,
    _neg,
    _reciprocal,
    as_real,
    compare,
    frac,
    floor_value,
)


class NoClosedForm(ValueError):
    """Requested a closed-form density vector for R6Open/Unknown."""


class NotRational(ValueError):
    """Residue-cover densities need rational alpha and gamma."""


class UndecidableIndependence(ValueError):
    """Q-independence cannot be decided from interval enclosures."""


@dataclass(frozen=True)
class RegionId:
    id: str  # "R1".."R5", "R6Open", "R7".."R10", "Unknown"
    certificate: str

    def has_closed_form(self) -> bool:
        return self.id not in ("R6Open", "Unknown")


# ---------------------------------------------------------------------------
# residue covers
# ---------------------------------------------------------------------------

def residue_set(a: int, b: int, beta: RealLike) -> frozenset:
    """{ floor(beta + b*h/a) mod b : 0 <= h <= a-1 }; size is exactly a
    for coprime a <= b (the floors are strictly increasing and span less
    than one full period)."""
    if a < 1 or b < 1 or a > b:
        raise ValueError("need 1 <= a <= b (alpha = b/a >= 1)")
    if gcd(a, b) != 1:
        raise ValueError("a and b must be coprime")
    beta = as_real(beta)
    out = frozenset(
        (_add(beta, Rational(Fraction(b * h, a))).floor()) % b for h in range(a)
    )
    if len(out) != a:
        raise AssertionError("residue set size invariant violated")
    return out


def g_density(a: int, b: int, i: int, j: int) -> Fraction:
    """Density of (a*N + i) ∩ (b*N + j): (a,b)/(a*b) when (a,b) | (i-j),
    else the progressions are disjoint and the density is 0."""
    if not (0 <= i < a and 0 <= j < b):
        raise ValueError("residues must satisfy 0 <= i < a, 0 <= j < b")
    g0 = gcd(a, b)
    if (i - j) % g0 == 0:
        return Fraction(g0, a * b)
    return Fraction(0)


@dataclass(frozen=True)
class ResidueCover:
    a: int
    b: int
    c: int
    d: int
    r_ab: frozenset
    r_cd: frozenset
    comp_ab: frozenset
    comp_cd: frozenset

    @classmethod
    def from_params(cls, p: ParamTuple) -> "ResidueCover":
        if not (isinstance(p.alpha, Rational) and isinstance(p.gamma, Rational)):
            raise NotRational("alpha and gamma must be rational")
        al, gm = p.alpha.value, p.gamma.value
        a, b = al.denominator, al.numerator
        c, d = gm.denominator, gm.numerator
        r_ab = residue_set(a, b, p.beta)
        r_cd = residue_set(c, d, p.delta)
        return cls(
            a=a, b=b, c=c, d=d,
            r_ab=r_ab, r_cd=r_cd,
            comp_ab=frozenset(range(b)) - r_ab,
            comp_cd=frozenset(range(d)) - r_cd,
        )


def rational_d(p: ParamTuple, K: int = DEFAULT_K) -> DensityVector:
    """Exact density vector for rational alpha = b/a, gamma = d/c.

    With the residue sets R_a^b, R_c^d of the two sequences:
      d_1     = sum of g(b,d,i,j) over complementary residues,
      entry   = mass of S(alpha,beta) \\ S(gamma,delta)    (chain heads),
      ratio   = mass(S_ab ∩ S_cd) / mass(S_cd)             (stay prob.),
      exit    = mass(S_cd \\ S_ab) / mass(S_cd)            (exit prob.),
      d_i     = entry * ratio^(i-2) * exit   for i >= 2,
      d_inf   = entry * ratio^infinity  (0 if ratio < 1, entry at ratio = 1).
    """
    if K < 2:
        raise ValueError("K must be >= 2")
    cover = ResidueCover.from_params(p)
    b, d = cover.b, cover.d

    def gsum(iset, jset) -> Fraction:
        return sum(
            (g_density(b, d, i, j) for i in iset for j in jset), Fraction(0)
        )

    d1 = gsum(cover.comp_ab, cover.comp_cd)
    entry = gsum(cover.r_ab, cover.comp_cd)
    stay = gsum(cover.r_ab, cover.r_cd)
    base = sum((g_density(1, d, 0, j) for j in cover.r_cd), Fraction(0))
    ratio = stay / base
    exitp = (base - stay) / base
    finite = [d1]
    for i in range(2, K + 1):
        finite.append(entry * ratio ** (i - 2) * exitp)
    d_inf = entry if ratio == 1 else Fraction(0)
    return DensityVector(
        finite=tuple(finite),
        d_inf=d_inf,
        K=K,
        provenance=ClosedForm("R2"),
        tail_ratio=ratio,
    )


# ---------------------------------------------------------------------------
# witness conditions for dependent irrational pairs
# ---------------------------------------------------------------------------

def _exact_positive_integer(x: Real) -> Optional[int]:
    """x as a positive integer if provably one; None if provably not or
    undecidable (conservative)."""
    if isinstance(x, Rational):
        v = x.value
        if v.denominator == 1 and v >= 1:
            return v.numerator
        return None
    if isinstance(x, QuadraticSurd):
        return None
    try:  # interval: integers can be excluded, never confirmed
        lo, hi = x.enclosure(256)
        if lo == hi and lo.denominator == 1 and lo >= 1:
            return lo.numerator
    except PrecisionExhausted:
        pass
    return None


def _is_integral(x: Real) -> bool:
    if isinstance(x, Rational):
        return x.value.denominator == 1
    if isinstance(x, QuadraticSurd):
        return False
    return False  # interval: cannot confirm


def q_independent(alpha: Real, gamma: Real) -> bool:
    """Is {1, 1/alpha, 1/gamma} linearly independent over Q?

    Exactly decidable in the exact tiers: a rational member makes the set
    dependent outright; two quadratic surds are independent iff their
    square-free radicands differ (a shared radicand always admits a
    nontrivial rational relation, distinct ones never do).  Interval
    representations raise UndecidableIndependence."""
    if isinstance(alpha, Rational) or isinstance(gamma, Rational):
        return False
    if isinstance(alpha, QuadraticSurd) and isinstance(gamma, QuadraticSurd):
        return alpha.d != gamma.d
    raise UndecidableIndependence(
        "Q-independence cannot be decided from interval enclosures"
    )


def _condition_i(p: ParamTuple, search_bound: int) -> Optional[tuple[int, int]]:
    """Positive integers (n, m) with n/alpha + m/gamma = 1 and
    n*beta/alpha + m*delta/gamma integral; n < alpha bounds the search."""
    try:
        n_max = min(floor_value(p.alpha), search_bound)
    except PrecisionExhausted:
        return None
    inv_a = _reciprocal(p.alpha)
    inv_g = _reciprocal(p.gamma)
    for n in range(1, n_max + 1):
        try:
            z = _mul(p.gamma, _add(Rational(Fraction(1)), _neg(_mul(Rational(Fraction(n)), inv_a))))
            m = _exact_positive_integer(z)
            if m is None:
                continue
            w = _add(
                _mul(Rational(Fraction(n)), _mul(p.beta, inv_a)),
                _mul(Rational(Fraction(m)), _mul(p.delta, inv_g)),
            )
            if _is_integral(w):
                return (n, m)
        except PrecisionExhausted:
            continue
    return None


def _condition_ii(p: ParamTuple) -> Optional[tuple[int, int]]:
    """Coprime (n, m) with n/alpha = m/gamma (i.e. gamma/alpha = m/n) and
    1 - m/alpha >= {m(beta-delta)/alpha} >= m/alpha."""
    if not isinstance(p.ratio, Rational):
        return None
    mn = p.ratio.value
    m, n = mn.numerator, mn.denominator
    try:
        m_over_a = _mul(Rational(Fraction(m)), _reciprocal(p.alpha))
        u = frac(_mul(Rational(Fraction(m)), _div(_add(p.beta, _neg(p.delta)), p.alpha)))
        upper = _add(Rational(Fraction(1)), _neg(m_over_a))
        if compare(u, m_over_a) >= 0 and compare(upper, u) >= 0:
            return (n, m)
    except PrecisionExhausted:
        return None
    return None


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

def classify_region(p: ParamTuple, search_bound: int = 10_000) -> RegionId:
    """Decision tree over the exactness, rationality, and independence of
    the parameters.  Total: every exact tuple receives a region (possibly
    R6Open); interval-valued tuples classify as Unknown."""
    if not p.is_exact():
        return RegionId(
            "Unknown",
            "interval-valued parameters: rationality and Q-linear "
            "independence are undecidable from enclosures",
        )
    al, be, gm, de = p.alpha, p.beta, p.gamma, p.delta

    all_int = all(
        isinstance(v, Rational) and v.value.denominator == 1
        for v in (al, be, gm, de)
    )
    if all_int:
        A, B = al.value.numerator, be.value.numerator
        G, D = gm.value.numerator, de.value.numerator
        if A == 1:
            return RegionId("R7", f"integer tuple with alpha = 1 (gamma = {G})")
        g0 = gcd(A, G)
        if (B - D) % g0 != 0:
            return RegionId(
                "R8",
                f"integer tuple: (alpha,gamma) = {g0} does not divide "
                f"beta - delta = {B - D}",
            )
        a1 = A // g0
        if a1 == 1:
            return RegionId(
                "R9",
                f"integer tuple: {g0} | {B - D}, alpha_1 = 1 (alpha divides gamma)",
            )
        return RegionId(
            "R10", f"integer tuple: {g0} | {B - D}, alpha_1 = {a1} > 1"
        )

    if isinstance(al, Rational) and al.value == 1:
        return RegionId("R1", "alpha = 1, gamma > 1")

    if isinstance(al, Rational) and isinstance(gm, Rational):
        return RegionId(
            "R2",
            f"alpha = {al.value}, gamma = {gm.value} rational with alpha > 1",
        )

    if isinstance(al, QuadraticSurd) and isinstance(gm, QuadraticSurd):
        if q_independent(al, gm):
            return RegionId(
                "R4",
                f"{{1, 1/alpha, 1/gamma}} Q-independent: distinct square-free "
                f"radicands {al.d} and {gm.d}",
            )
        w = _condition_i(p, search_bound)
        if w is not None:
            return RegionId(
                "R5",
                f"dependent irrationals; condition (i) witness n={w[0]}, m={w[1]}",
            )
        w = _condition_ii(p)
        if w is not None:
            return RegionId(
                "R5",
                f"dependent irrationals; condition (ii) witness n={w[0]}, m={w[1]}",
            )
        return RegionId(
            "R6Open",
            f"dependent irrationals (shared radicand {al.d}); neither witness "
            f"condition detected (search bound {search_bound}); no closed "
            "form is known",
        )

    if isinstance(al, QuadraticSurd) and isinstance(gm, Rational):
        return RegionId(
            "R3", f"alpha irrational (radicand {al.d}), gamma = {gm.value} rational"
        )

    return RegionId(
        "Unknown",
        "alpha rational > 1 with gamma irrational: not covered by any "
        "closed form",
    )


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def _approx(x: Real) -> float:
    return x.approx()


def closed_form_d(p: ParamTuple, r: RegionId, K: int = DEFAULT_K) -> DensityVector:
    """Exact density vector for a region with a known formula.  Rational
    parameter regions yield exact Fractions; surd regions yield floats
    evaluated from exact enclosures."""
    rid = r.id
    if K < 2:
        raise ValueError("K must be >= 2")
    if not r.has_closed_form():
        raise NoClosedForm(f"region {rid} has no closed-form density vector")

    if rid == "R2":
        return rational_d(p, K)

    prov = ClosedForm(rid)
    if rid in ("R1", "R7"):
        if isinstance(p.gamma, Rational):
            dinf: object = 1 - Fraction(1) / p.gamma.value
            zero: object = Fraction(0)
        else:
            dinf = 1.0 - 1.0 / _approx(p.gamma)
            zero = 0.0
        return DensityVector(
            finite=tuple([zero] * K), d_inf=dinf, K=K, provenance=prov,
            tail_ratio=zero,
        )

    if rid in ("R5", "R8"):
        if isinstance(p.alpha, Rational) and isinstance(p.gamma, Rational):
            d1: object = 1 - Fraction(1) / p.alpha.value - Fraction(1) / p.gamma.value
            d2: object = Fraction(1) / p.alpha.value
            zero = Fraction(0)
        else:
            # exact cancellation is common here (complementary pairs have
            # 1/alpha + 1/gamma = 1 exactly), so evaluate in the surd field
            inv_a, inv_g = _reciprocal(p.alpha), _reciprocal(p.gamma)
            d1 = _add(Rational(Fraction(1)), _neg(_add(inv_a, inv_g))).approx()
            d2 = inv_a.approx()
            zero = 0.0
        return DensityVector(
            finite=tuple([d1, d2] + [zero] * (K - 2)), d_inf=zero, K=K,
            provenance=prov, tail_ratio=zero,
        )

    if rid in ("R9", "R10"):
        A, G = p.alpha.value.numerator, p.gamma.value.numerator
        g0 = gcd(A, G)
        a1, g1 = A // g0, G // g0
        d1 = 1 - Fraction(1, A) - Fraction(1, G) + Fraction(1, g0 * a1 * g1)
        if rid == "R9":
            return DensityVector(
                finite=tuple([d1] + [Fraction(0)] * (K - 1)),
                d_inf=Fraction(g1 - 1, A * g1),
                K=K, provenance=prov, tail_ratio=Fraction(0),
            )
        finite = [d1] + [
            Fraction((g1 - 1) * (a1 - 1), g1 * A * a1 ** (i - 1))
            for i in range(2, K + 1)
        ]
        return DensityVector(
            finite=tuple(finite), d_inf=Fraction(0), K=K, provenance=prov,
            tail_ratio=Fraction(1, a1),
        )

    # R3 / R4: d_i = (alpha-1)(gamma-1) / (alpha^i * gamma)
    af, gf = _approx(p.alpha), _approx(p.gamma)
    top = (af - 1.0) * (gf - 1.0) / gf
    finite = [top / af ** i for i in range(1, K + 1)]
    return DensityVector(
        finite=tuple(finite), d_inf=0.0, K=K, provenance=prov,
        tail_ratio=1.0 / af,
    )


# ---------------------------------------------------------------------------
# report payload
# ---------------------------------------------------------------------------

def _num_payload(v) -> object:
    if isinstance(v, Fraction):
        return str(v)
    return float(v)


def density_payload(d: DensityVector) -> dict:
    out = {
        "finite": [_num_payload(v) for v in d.finite],
        "d_inf": _num_payload(d.d_inf),
        "K": d.K,
    }
    if d.diagnostic is not None:
        out["diagnostic"] = d.diagnostic
    return out


def region_report(p: ParamTuple, K: int = DEFAULT_K,
                  search_bound: int = 10_000) -> dict:
    """JSON-ready {region, certificate, d, exact} payload."""
    r = classify_region(p, search_bound=search_bound)
    if r.has_closed_form():
        d = closed_form_d(p, r, K)
        return {
            "region": r.id,
            "certificate": r.certificate,
            "d": density_payload(d),
            "exact": d.is_exact(),
        }
    return {"region": r.id, "certificate": r.certificate, "d": None, "exact": False}
