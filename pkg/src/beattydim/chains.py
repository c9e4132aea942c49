"""Chain decomposition of integer windows and density estimation.

Every positive integer belongs to exactly one of: a singleton chain (in
neither Beatty sequence), a chain x, f(x), ..., f^{i-1}(x) headed at
some x in S(alpha,beta)\\S(gamma,delta), an infinite chain, or a small
residual set R of anomalies (aborted images, cycles among tiny
elements).  Head classes:

* A_1        -- in neither sequence (chain of length 1),
* A_i, i>=2  -- survives exactly i-1 iterations: the first i-2 iterates
                stay in the intersection, the last lands in
                S(gamma,delta)\\S(alpha,beta),
* A_infinity -- iterates stay in the intersection forever (detected up
                to a finite horizon and reported as candidates).

Densities d_i are estimated by classifying every head in a window; the
refined counts d_{i,j} (exactly j of the i chain elements inside [1,n])
come out of the same walk.  The scan works on byte-array membership
tables inside the window and integer-only closures beyond it, so
windows of 10^6 are routine.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, log
from typing import IO, Optional, Sequence, Union

import numpy as np

from .beatty import (
    ParamTuple,
    f_step_fn,
    floor_fn,
    member,
    membership_fn,
    f_map,
)
from .numerics import Rational, as_real

DEFAULT_K = 40

Num = Union[Fraction, float]


class HorizonTooSmall(RuntimeError):
    """Infinity-candidate mass kept shifting when the horizon doubled."""


# ---------------------------------------------------------------------------
# classification tags
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainClass:
    tag: str  # "A1" | "finite" | "infinity" | "not_head"
    i: int = 0
    survived: int = 0

    def label(self) -> str:
        if self.tag == "finite":
            return f"finite({self.i})"
        return self.tag


A1 = ChainClass("A1")
NOT_HEAD = ChainClass("not_head")


def finite_class(i: int) -> ChainClass:
    return ChainClass("finite", i=i)


def infinity_candidate(survived: int) -> ChainClass:
    return ChainClass("infinity", survived=survived)


@dataclass(frozen=True)
class Chain:
    head: int
    cls: ChainClass
    elements: tuple[int, ...]  # elements inside [1, n], trajectory order


@dataclass(frozen=True)
class ChainDecomposition:
    n: int
    chains: tuple[Chain, ...]
    residual: tuple[int, ...]
    counts: dict  # (i, j) -> number of finite-class-i heads with j visible
    horizon: int
    all_contiguous: bool  # every chain's visible part is a contiguous segment

    def to_csv(self, stream: IO[str]) -> None:
        rows = []
        for cid, ch in enumerate(self.chains):
            for pos, x in enumerate(ch.elements):
                rows.append((x, ch.cls.label(), cid, pos))
        for x in self.residual:
            rows.append((x, "residual", -1, -1))
        rows.sort()
        w = csv.writer(stream)
        w.writerow(["x", "class", "chain_id", "position_in_chain"])
        w.writerows(rows)

    def covered(self) -> int:
        return sum(len(c.elements) for c in self.chains)


# ---------------------------------------------------------------------------
# density vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    region: str


@dataclass(frozen=True)
class Empirical:
    windows: tuple[tuple[int, int], ...]
    horizon: int


@dataclass(frozen=True)
class DensityVector:
    """(d_1 .. d_K, d_inf) with provenance.

    ``tail_ratio`` extends closed-form vectors geometrically past K
    (d_{i+1} = tail_ratio * d_i for i >= 2); empirical vectors instead
    carry the measured masses of classes beyond K in ``beyond`` and a
    window-agreement ``diagnostic``.  Infinity-candidate mass is kept
    separate from finite tail mass throughout.
    """

    finite: tuple[Num, ...]
    d_inf: Num
    K: int
    provenance: object
    dij: Optional[dict] = None
    tail_ratio: Optional[Num] = None
    beyond: Optional[dict] = None  # {i: mass} for K < i (empirical)
    diagnostic: Optional[float] = None

    def entry(self, i: int) -> Num:
        if i < 1:
            raise ValueError("class index starts at 1")
        if i <= self.K:
            return self.finite[i - 1]
        if self.beyond:
            return self.beyond.get(i, 0.0)
        if self.tail_ratio is not None and self.K >= 2:
            return self.finite[self.K - 1] * self.tail_ratio ** (i - self.K)
        return 0 * self.finite[0]

    def entry_float(self, i: int) -> float:
        return float(self.entry(i))

    def suffix_float(self, i: int) -> float:
        """sum of d_j over j > i (geometric extension / measured tail)."""
        total = 0.0
        for j in range(i + 1, self.K + 1):
            total += float(self.finite[j - 1])
        if self.beyond:
            total += sum(v for jj, v in self.beyond.items() if jj > max(i, self.K))
        elif self.tail_ratio is not None and self.K >= 2:
            rho = float(self.tail_ratio)
            dk = float(self.finite[self.K - 1])
            if dk > 0 and rho >= 1:
                raise ValueError("geometric tail with ratio >= 1 is not summable")
            if dk > 0 and rho > 0:
                start = max(i, self.K)
                total += dk * rho ** (start - self.K + 1) / (1.0 - rho)
        return total

    def finite_floats(self) -> tuple[float, ...]:
        return tuple(float(v) for v in self.finite)

    def d_inf_float(self) -> float:
        return float(self.d_inf)

    def is_exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in self.finite) and isinstance(
            self.d_inf, Fraction
        )


def dij_row(p: ParamTuple, i: int, d_i: Num) -> list:
    """d_{i,j} for j = 1..i: the head density d_i split by how many chain
    elements land in [1, n]: a factor (alpha/gamma)^{j-1} - (alpha/gamma)^j
    for j < i and (alpha/gamma)^{i-1} for j = i (the window analysis of the
    pattern-count product); the row telescopes to d_i exactly."""
    if i == 1:
        return [d_i]
    if isinstance(p.ratio, Rational) and isinstance(d_i, Fraction):
        rho: Num = Fraction(1) / p.ratio.value
    else:
        rho = 1.0 / float(p.ratio.approx())
        d_i = float(d_i)
    row = [d_i * (rho ** (j - 1) - rho ** j) for j in range(1, i)]
    row.append(d_i * rho ** (i - 1))
    return row


def derived_dij(d: DensityVector, p: ParamTuple) -> DensityVector:
    """Copy of d with the d_{i,j} table filled for 1 <= i <= K."""
    table = {}
    for i in range(1, d.K + 1):
        di = d.entry(i)
        if float(di) == 0.0:
            continue
        for j, v in enumerate(dij_row(p, i, di), start=1):
            table[(i, j)] = v
    return DensityVector(
        finite=d.finite,
        d_inf=d.d_inf,
        K=d.K,
        provenance=d.provenance,
        dij=table,
        tail_ratio=d.tail_ratio,
        beyond=d.beyond,
        diagnostic=d.diagnostic,
    )


# ---------------------------------------------------------------------------
# horizons and single-head classification
# ---------------------------------------------------------------------------

def default_horizon(p: ParamTuple, n: int) -> int:
    """A head x <= n has at most ceil(log_{gamma/alpha}(n + C)) + 2
    trajectory points below any fixed bound, so this horizon sees every
    exit that matters for a size-n window, with slack."""
    ratio = float(p.ratio.approx())
    if ratio <= 1.0:
        raise ValueError("gamma/alpha must exceed 1")
    return int(ceil(log(max(10 * n, 10)) / log(ratio))) + 8


def classify_head(x: int, p: ParamTuple, horizon: int) -> ChainClass:
    """Reference classifier via the generic exact operations.

    NonPositiveImage propagates if the trajectory leaves the positive
    integers (the caller records such heads as residual)."""
    if x < 1:
        raise ValueError("heads are positive integers")
    in_sg = member(x, p.gamma, p.delta) is not None
    if in_sg:
        return NOT_HEAD
    if member(x, p.alpha, p.beta) is None:
        return A1
    y = f_map(x, p)
    j = 1
    while True:
        if member(y, p.alpha, p.beta) is None:
            return finite_class(j + 1)
        if j >= horizon:
            return infinity_candidate(horizon)
        y = f_map(y, p)
        j += 1


# ---------------------------------------------------------------------------
# scan machinery
# ---------------------------------------------------------------------------

def _mark_bitset(tau, eta, bound: int) -> bytearray:
    """Byte membership table of S(tau, eta) on [1, bound]."""
    bits = bytearray(bound + 1)
    tau = as_real(tau)
    eta = as_real(eta)
    fv = floor_fn(tau, eta)
    # numpy fast path for rational parameters
    from .beatty import _linear_form  # integer linear form, if any

    form = _linear_form(tau, eta)
    if form is not None and form[1] == 0 and form[3] == 0:
        A, _, E, _, Z, _ = form
        kmax = ((bound + 1) * Z - E) // A + 2
        if kmax >= 1 and A * kmax < 2**62:
            k = np.arange(1, kmax + 1, dtype=np.int64)
            v = (A * k + E) // Z
            v = v[(v >= 1) & (v <= bound)]
            marks = np.zeros(bound + 1, dtype=np.uint8)
            marks[v] = 1
            return bytearray(marks.tobytes())
    k = 1
    while True:
        v = fv(k)
        if v > bound:
            break
        if v >= 1:
            bits[v] = 1
        k += 1
    return bits


class _ScanContext:
    """Per-tuple scan state: membership tables inside [1, B], integer
    closures beyond, and the alpha = 1 shortcut (S(1, beta) covers a full
    integer tail, so survival above the growth floor is decidable without
    iterating to the horizon)."""

    def __init__(self, p: ParamTuple, bound: int):
        self.p = p
        self.B = bound
        self.sg = _mark_bitset(p.gamma, p.delta, bound)
        self.f = f_step_fn(p)
        self.far_sa = membership_fn(p.alpha, p.beta)
        self.alpha_one = (
            isinstance(p.alpha, Rational) and p.alpha.value == 1
        )
        if self.alpha_one:
            self.sa = None
            self.sa_tail = max(1, floor_fn(p.alpha, p.beta)(1))
            ratio_hi = p.ratio.enclosure(64)[1]
            c_hi = p.chain_bound.enclosure(64)[1]
            gf = ratio_hi * c_hi / (ratio_hi - 1)
            self.growth_floor = gf.numerator // gf.denominator + 2
        else:
            self.sa = _mark_bitset(p.alpha, p.beta, bound)
            self.sa_tail = None
            self.growth_floor = None

    def in_sa(self, y: int) -> bool:
        if self.alpha_one:
            return y >= self.sa_tail
        if y <= self.B:
            return bool(self.sa[y])
        return self.far_sa(y)

    def walk(self, x: int, horizon: int, cutoff: int, rec=None):
        """Follow the chain from head x (x in SA\\SG assumed).

        Returns (kind, value, y_last, vis, contiguous) with kind one of
        'finite' (value = class index i), 'cand' (value = horizon
        survived), 'proved' (infinite, alpha = 1 shortcut), or
        'residual' (trajectory left N).  vis counts trajectory elements
        <= cutoff; rec, if given, collects them; contiguous reports
        whether the visible elements sit at consecutive trajectory
        positions (the condition for the pattern-count product form).
        """
        first = last = 0 if x <= cutoff else -1
        vis = 1 if x <= cutoff else 0
        if rec is not None and x <= cutoff:
            rec.append(x)
        sa, B, far, f = self.sa, self.B, self.far_sa, self.f
        one = self.alpha_one
        tail, gf = self.sa_tail, self.growth_floor
        y = f(x)
        j = 1
        kind = val = None
        while True:
            if y < 1:
                kind, val = "residual", j
                break
            if y <= cutoff:
                vis += 1
                if first < 0:
                    first = j
                last = j
                if rec is not None:
                    rec.append(y)
            if one:
                if y >= tail:
                    if y > gf and y > cutoff:
                        kind, val = "proved", j
                        break
                    ok = True
                else:
                    ok = False
            elif y <= B:
                ok = bool(sa[y])
            else:
                ok = far(y)
            if not ok:
                kind, val = "finite", j + 1
                break
            if j >= horizon:
                kind, val = "cand", horizon
                break
            y = f(y)
            j += 1
        contiguous = vis == 0 or last - first + 1 == vis
        return (kind, val, y, vis, contiguous)

    def extend(self, y: int, j_done: int, horizon_to: int):
        """Continue a surviving trajectory from its last iterate."""
        f, B, sa, far = self.f, self.B, self.sa, self.far_sa
        one, tail, gf = self.alpha_one, self.sa_tail, self.growth_floor
        j = j_done
        while True:
            if j >= horizon_to:
                return ("cand", j, y)
            y = f(y)
            j += 1
            if y < 1:
                return ("residual", j, y)
            if one:
                if y >= tail:
                    if y > gf:
                        return ("proved", j, y)
                    ok = True
                else:
                    ok = False
            elif y <= B:
                ok = bool(sa[y])
            else:
                ok = far(y)
            if not ok:
                return ("finite", j + 1, y)


# ---------------------------------------------------------------------------
# decomposition
# ---------------------------------------------------------------------------

def decompose(p: ParamTuple, n: int, horizon: Optional[int] = None) -> ChainDecomposition:
    """Assign every x in [1, n] to exactly one chain segment or to the
    residual set.  Chains headed up to n + C are scanned because early
    anomalous chains may dip back below n; trajectory elements above n
    are classified but not listed as covered."""
    if n < 1:
        raise ValueError("window size must be >= 1")
    if horizon is None:
        horizon = default_horizon(p, n)
    cext = p.chain_bound_int()
    bound = n + cext
    ctx = _ScanContext(p, bound)
    sg = ctx.sg
    covered = bytearray(n + 1)
    chains: list[Chain] = []
    counts: dict = {}
    all_contiguous = True
    for x in range(1, bound + 1):
        if sg[x]:
            continue
        if ctx.in_sa(x):
            rec: list[int] = []
            kind, val, _, vis, contiguous = ctx.walk(x, horizon, n, rec=rec)
            if kind == "residual":
                continue  # visible elements stay uncovered -> residual
            if not rec:
                continue  # head above n, nothing visible
            if not contiguous:
                all_contiguous = False
            if kind == "finite":
                cls = finite_class(val)
                counts[(val, vis)] = counts.get((val, vis), 0) + 1
            else:
                cls = infinity_candidate(val if kind == "cand" else horizon)
            chains.append(Chain(x, cls, tuple(rec)))
            for e in rec:
                covered[e] = 1
        elif x <= n:
            chains.append(Chain(x, A1, (x,)))
            counts[(1, 1)] = counts.get((1, 1), 0) + 1
            covered[x] = 1
    residual = tuple(x for x in range(1, n + 1) if not covered[x])
    return ChainDecomposition(
        n=n,
        chains=tuple(chains),
        residual=residual,
        counts=counts,
        horizon=horizon,
        all_contiguous=all_contiguous,
    )


def measured_dij(p: ParamTuple, n: int, horizon: Optional[int] = None) -> dict:
    """Anchored A_(i,j) head counts on [1, n] without materializing the
    chains: (i, j) -> number of class-i heads with exactly j trajectory
    elements inside [1, n]."""
    if horizon is None:
        horizon = default_horizon(p, n)
    ctx = _ScanContext(p, n + p.chain_bound_int())
    sg = ctx.sg
    counts: dict = {}
    for x in range(1, len(sg)):
        if sg[x]:
            continue
        if ctx.in_sa(x):
            kind, val, _, vis, _ = ctx.walk(x, horizon, n)
            if kind == "finite" and vis >= 1:
                counts[(val, vis)] = counts.get((val, vis), 0) + 1
        elif x <= n:
            counts[(1, 1)] = counts.get((1, 1), 0) + 1
    return counts


def residual_count(p: ParamTuple, n: int, horizon: Optional[int] = None) -> int:
    """|R ∩ [1, n]| without materializing chain records."""
    if horizon is None:
        horizon = default_horizon(p, n)
    cext = p.chain_bound_int()
    bound = n + cext
    ctx = _ScanContext(p, bound)
    sg = ctx.sg
    covered = bytearray(n + 1)
    for x in range(1, bound + 1):
        if sg[x]:
            continue
        if ctx.in_sa(x):
            rec: list[int] = []
            kind = ctx.walk(x, horizon, n, rec=rec)[0]
            if kind == "residual":
                continue
            for e in rec:
                covered[e] = 1
        elif x <= n:
            covered[x] = 1
    return n - sum(covered[1:])


# ---------------------------------------------------------------------------
# empirical densities
# ---------------------------------------------------------------------------

def _window_counts(ctx: _ScanContext, lo: int, hi: int, horizon: int):
    """Classify all heads x in [lo, hi]; returns (a1, {i: count},
    candidate count, survivors) where survivors hold (last iterate,
    steps done) for horizon-extension probes."""
    sg = ctx.sg
    in_sa = ctx.in_sa
    walk = ctx.walk
    a1 = 0
    finite: dict[int, int] = {}
    cand = 0
    survivors: list[tuple[int, int]] = []
    for x in range(lo, hi + 1):
        if sg[x]:
            continue
        if in_sa(x):
            kind, val, y, _, _ = walk(x, horizon, 0)
            if kind == "finite":
                finite[val] = finite.get(val, 0) + 1
            elif kind == "cand":
                cand += 1
                survivors.append((y, val))
            elif kind == "proved":
                cand += 1
            # 'residual': belongs to no class
        else:
            a1 += 1
    return a1, finite, cand, survivors


def empirical_densities(
    p: ParamTuple,
    windows: Sequence[tuple[int, int]],
    horizon: Optional[int] = None,
    K: int = DEFAULT_K,
    check_horizon: bool = True,
    stability_tol: float = 1e-3,
) -> DensityVector:
    """Per-window head-class frequencies; the returned vector uses the
    largest window, with a convergence diagnostic over the two largest.

    Raises HorizonTooSmall when doubling the horizon moves the
    infinity-candidate mass of the largest window by more than
    ``stability_tol`` (long finite chains being mistaken for infinite
    ones)."""
    if K < 2:
        raise ValueError("K must be >= 2")
    wins = sorted(
        (tuple(w) for w in windows), key=lambda w: w[1] - w[0], reverse=True
    )
    if not wins or any(w[0] < 1 or w[1] <= w[0] for w in wins):
        raise ValueError("windows must be non-degenerate (n1 >= 1, n2 > n1)")
    if horizon is None:
        horizon = default_horizon(p, max(w[1] for w in wins))

    per_window = []
    main_ctx = None
    main_survivors = None
    for idx, (lo, hi) in enumerate(wins):
        ctx = _ScanContext(p, hi)
        a1, fin, cand, surv = _window_counts(ctx, lo, hi, horizon)
        per_window.append((lo, hi, a1, fin, cand))
        if idx == 0:
            main_ctx, main_survivors = ctx, surv

    lo, hi, a1, fin, cand = per_window[0]
    width = hi - lo + 1

    if check_horizon and main_survivors:
        moved = 0
        for y, jdone in main_survivors:
            kind, val, _ = main_ctx.extend(y, jdone, 2 * horizon)
            if kind == "finite":
                moved += 1
                fin[val] = fin.get(val, 0) + 1
                cand -= 1
            elif kind == "residual":
                moved += 1
                cand -= 1
        if moved / width > stability_tol:
            raise HorizonTooSmall(
                f"infinity-candidate mass moved by {moved / width:.2e} when "
                f"doubling the horizon from {horizon}; increase the horizon"
            )

    def vec(a1c, finc, candc, w):
        ent = [0.0] * K
        ent[0] = a1c / w
        for i, c in finc.items():
            if 2 <= i <= K:
                ent[i - 1] = c / w
        beyond = {i: c / w for i, c in finc.items() if i > K}
        return ent, candc / w, beyond

    ent, dinf, beyond = vec(a1, fin, cand, width)

    diagnostic = None
    if len(per_window) >= 2:
        l2, h2, a12, fin2, cand2 = per_window[1]
        ent2, dinf2, _ = vec(a12, fin2, cand2, h2 - l2 + 1)
        diagnostic = max(
            max(abs(a - b) for a, b in zip(ent, ent2)), abs(dinf - dinf2)
        )

    return DensityVector(
        finite=tuple(ent),
        d_inf=dinf,
        K=K,
        provenance=Empirical(windows=tuple(wins), horizon=horizon),
        beyond=beyond or None,
        diagnostic=diagnostic,
    )
