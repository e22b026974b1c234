"""Certified positivity of the stability quadratic form over integer modes.

The second variation of volume at a torus orbit diagonalizes over the Fourier
modes m of the flat torus, with eigenvalue proportional to

    Q(s, t, m) = a1 - 2 t a2 + t^2 a3,        t = tanh^2 r,

where, writing A = sum m_i^2/s_i^2, B = sum m_i^2/s_i, C = sum m_i/s_i and
D = sum m_i,

    a1 = B^2 + C^2 - 2A,   a2 = D (B D - C),   a3 = D^2 (D^2 - 1).

The orbit is stable iff Q >= 0 for every m != 0.  A program cannot check
infinitely many modes, so we use the algebraic identity

    Q = (B - t D^2)^2 + (C + t D)^2 - 2A - 2 t^2 D^2

together with A <= B / min_i s_i and D^2 <= B (Cauchy-Schwarz with
sum s_i = 1) to get Q >= B [ (1-t)^2 B - 2/min_i s_i - 2 t^2 ], which is
strictly positive once B exceeds

    B_max = (2 / min_i s_i + 2 t^2) / (1 - t)^2.

Enumerating the finitely many modes with B <= B_max therefore decides
stability with a certificate, provided the arithmetic is exact; the tail
bound itself is stress-tested in the acceptance suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    IndicesNotDistinct,
    InvalidModeBound,
    RequiresDimensionAtLeast3,
)
from .orbit import OrbitSpec
from .scalars import EXACT

# Verdicts
CERTIFIED_STABLE = "CertifiedStable"
CERTIFIED_UNSTABLE = "CertifiedUnstable"
NUMERICALLY_STABLE = "NumericallyStable"

# Volume-minimizing predicate tags
NO_UNSTABLE_WITNESS = "No_UnstableWitness"
NO_RADIUS_MULTIPLICITY = "No_RadiusMultiplicity"
UNKNOWN = "Unknown"

# classify_mode tags
SUM_ZERO_NONNEG = "SumZero_NonnegByLemma"
SUM_PM1_NONNEG = "SumPM1_NonnegByLemma"
SUM_PM1_POSITIVE = "SumPM1_PositiveByLemma"
SUM_PM1_CRITICAL = "SumPM1_CriticalFamily"
GENERAL = "General"

#: float-track zero band scale: a mode counts as null when |Q| <= band*(1+|a1|)
DEFAULT_ZERO_BAND = 1e-9

#: float-track relative tolerance for "two radii are equal"
RADIUS_EQ_RTOL = 1e-9


def check_mode(mode, n: int) -> tuple:
    mode = tuple(int(m) for m in mode)
    if len(mode) != n:
        raise DimensionMismatch(f"mode length {len(mode)} != n = {n}")
    if not any(mode):
        raise DimensionMismatch("mode must be nonzero")
    return mode


def canonical_mode(mode) -> tuple:
    """Representative of {m, -m} whose first nonzero entry is positive."""
    for m in mode:
        if m > 0:
            return tuple(mode)
        if m < 0:
            return tuple(-x for x in mode)
    raise DimensionMismatch("mode must be nonzero")


@dataclass(frozen=True)
class StabilityCoefficients:
    """The scalars attached to one (orbit, mode) pair."""

    A: object
    B: object
    C: object
    D: int
    t: object
    a1: object
    a2: object
    a3: int


def coefficients(orbit: OrbitSpec, mode) -> StabilityCoefficients:
    mode = check_mode(mode, orbit.n)
    s = orbit.simplex
    A = sum(m * m / (si * si) for m, si in zip(mode, s))
    B = sum(m * m / si for m, si in zip(mode, s))
    C = sum(m / si for m, si in zip(mode, s))
    D = sum(mode)
    t = orbit.tanh_sq
    a1 = B * B + C * C - 2 * A
    a2 = D * (B * D - C)
    a3 = D * D * (D * D - 1)
    return StabilityCoefficients(A=A, B=B, C=C, D=D, t=t, a1=a1, a2=a2, a3=a3)


def q_form(orbit: OrbitSpec, mode):
    """Stability eigenvalue Q = a1 - 2 t a2 + t^2 a3; even in the mode."""
    c = coefficients(orbit, mode)
    return c.a1 - 2 * c.t * c.a2 + c.t * c.t * c.a3


def classify_mode(orbit: OrbitSpec, mode) -> str:
    """Fast sign classification of a mode by the structure of its entries.

    SumZero and SumPM1 tags cover the modes with a3 = 0, whose sign is known
    in closed form; the critical family is the (-1, 1, 1, 0, ...) pattern
    (up to permutation and global sign) whose sign flips exactly when
    s_i < t * s_j * s_k.  Everything else is General and needs Q itself.
    """
    mode = check_mode(mode, orbit.n)
    D = sum(mode)
    if D == 0:
        return SUM_ZERO_NONNEG
    if abs(D) != 1:
        return GENERAL
    # Normalize global sign so the entry sum is +1.
    m = mode if D == 1 else tuple(-x for x in mode)
    if all(x != -1 for x in m):
        return SUM_PM1_NONNEG
    nonneg = [x for x in m if x != -1]
    if any(abs(x) > 1 for x in nonneg):
        return SUM_PM1_POSITIVE
    # Entries all lie in {-1, 0, 1}: alpha copies of -1 and alpha+1 copies of 1.
    alpha = sum(1 for x in m if x == -1)
    return SUM_PM1_CRITICAL if alpha == 1 else SUM_PM1_POSITIVE


def critical_family_sign(orbit: OrbitSpec, mode) -> int:
    """Sign of Q for a critical-family mode, from s_i >= t s_j s_k.

    Q = 4/(s_j s_k) - 4 t / s_i where i carries the -1 and j, k the two 1s
    (after sign normalization), so sign(Q) = sign(s_i - t s_j s_k).
    """
    m = canonical_mode(check_mode(mode, orbit.n))
    m = m if sum(m) == 1 else tuple(-x for x in m)
    i = m.index(-1)
    ones = [k for k, x in enumerate(m) if x == 1]
    s = orbit.simplex
    diff = s[i] - orbit.tanh_sq * s[ones[0]] * s[ones[1]]
    return (diff > 0) - (diff < 0)


def mode_bound(orbit: OrbitSpec):
    """Certified truncation bound B_max (see the module docstring).

    Every mode with sum m_i^2 / s_i > B_max has Q > 0.
    """
    t = orbit.tanh_sq
    one = Fraction(1) if orbit.track == EXACT else 1.0
    return (2 / orbit.min_simplex + 2 * t * t) / ((one - t) * (one - t))


def enumerate_modes(orbit: OrbitSpec, bound):
    """Yield one representative per {m, -m} pair with sum m_i^2/s_i <= bound.

    Representatives have their first nonzero entry positive.  Exact on the
    rational track (integer capacity comparison); the float track rounds the
    capacity down, which can only shrink the enumerated set by boundary modes.
    """
    if bound <= 0:
        return
    n = orbit.n
    if orbit.track == EXACT:
        q = _common_denominator(orbit.simplex)
        p = [int(s * q) for s in orbit.simplex]
        P = math.prod(p)
        w = [P // pi for pi in p]
        cap = _floor_fraction(Fraction(bound) * P / q)
    else:
        # scale weights 1/s_i to keep one code path; capacity in float
        w = [1.0 / float(s) for s in orbit.simplex]
        P = 1
        cap = float(bound)
    mode = [0] * n
    yield from _enum_rec(0, True, cap, w, mode, n)


def _enum_rec(i, leading, rem, w, mode, n):
    if i == n:
        if not leading:
            yield tuple(mode)
        return
    wi = w[i]
    if isinstance(rem, int):
        top = isqrt(rem // wi) if rem >= wi else 0
    else:
        top = int(math.floor(math.sqrt(max(rem, 0.0) / wi) + 1e-12))
    lo = 0 if leading else -top
    for m in range(lo, top + 1):
        mode[i] = m
        yield from _enum_rec(i + 1, leading and m == 0, rem - m * m * wi, w, mode, n)
    mode[i] = 0


def _common_denominator(simplex) -> int:
    q = 1
    for s in simplex:
        q = q * Fraction(s).denominator // math.gcd(q, Fraction(s).denominator)
    return q


def _floor_fraction(x: Fraction) -> int:
    return x.numerator // x.denominator


# ---------------------------------------------------------------------------
# Exact integer-scaled evaluation
#
# With s_i = p_i / q (common denominator q) and t = a/b, every Q value of the
# orbit is N / (b^2 P^2) for the integer
#
#   N = b^2 q^2 (Bt^2 + Ct^2 - 2 At) - 2 a b q P D (Bt D - Ct)
#       + a^2 P^2 D^2 (D^2 - 1),
#
# where P = prod p_i, w_i = P / p_i, Bt = sum m_i^2 w_i, Ct = sum m_i w_i,
# At = sum m_i^2 w_i^2.  Sharing the denominator across all modes lets the
# scan compare and minimize Q in pure integer arithmetic.


class _ExactScan:
    """One full enumeration of an exact-track orbit, in integer arithmetic."""

    def __init__(self, orbit: OrbitSpec):
        t = Fraction(orbit.tanh_sq)
        self.a, self.b = t.numerator, t.denominator
        self.q = _common_denominator(orbit.simplex)
        self.p = [int(s * self.q) for s in orbit.simplex]
        self.P = math.prod(self.p)
        self.w = [self.P // pi for pi in self.p]
        self.k1 = self.b * self.b * self.q * self.q
        self.k2 = 2 * self.a * self.b * self.q * self.P
        self.k3 = self.a * self.a * self.P * self.P
        self.denom = self.b * self.b * self.P * self.P

    def capacity(self, bound) -> int:
        return _floor_fraction(Fraction(bound) * self.P / self.q)

    def n_value(self, mode) -> int:
        """Scaled Q: sign-exact, Q = n_value / denom."""
        Bt = Ct = At = D = 0
        for m, wi in zip(mode, self.w):
            mw = m * wi
            Bt += m * mw
            Ct += mw
            At += mw * mw
            D += m
        return self._assemble(Bt, Ct, At, D)

    def _assemble(self, Bt, Ct, At, D) -> int:
        return (
            self.k1 * (Bt * Bt + Ct * Ct - 2 * At)
            - self.k2 * D * (Bt * D - Ct)
            + self.k3 * D * D * (D * D - 1)
        )

    def q_fraction(self, n_value: int) -> Fraction:
        return Fraction(n_value, self.denom)

    def scan(self, bound):
        """Enumerate all modes with B <= bound, evaluating Q on each.

        Returns (modes_checked, min_n, null_modes, negative_modes) where the
        Q of a mode is n / denom.  negative_modes holds every mode with
        Q < 0 (canonical representatives).
        """
        cap = self.capacity(bound)
        w = self.w
        n = len(w)
        nulls = []
        negatives = []
        best = [None]  # min scaled Q
        count = [0]

        def rec(i, leading, rem, Bt, Ct, At, D, prefix):
            if i == n - 1:
                wi = w[i]
                top = isqrt(rem // wi) if rem >= wi else 0
                lo = 0 if leading else -top
                for m in range(lo, top + 1):
                    if leading and m == 0:
                        continue
                    mw = m * wi
                    val = self._assemble(Bt + m * mw, Ct + mw, At + mw * mw, D + m)
                    count[0] += 1
                    if best[0] is None or val < best[0]:
                        best[0] = val
                    if val == 0:
                        nulls.append(prefix + (m,))
                    elif val < 0:
                        negatives.append(prefix + (m,))
                return
            wi = w[i]
            top = isqrt(rem // wi) if rem >= wi else 0
            lo = 0 if leading else -top
            for m in range(lo, top + 1):
                mw = m * wi
                rec(
                    i + 1,
                    leading and m == 0,
                    rem - m * mw,
                    Bt + m * mw,
                    Ct + mw,
                    At + mw * mw,
                    D + m,
                    prefix + (m,),
                )

        rec(0, True, cap, 0, 0, 0, 0, ())
        return count[0], best[0], nulls, negatives


def _float_scan(orbit: OrbitSpec, bound, zero_band):
    """Float-track counterpart of _ExactScan.scan, returning real Q values."""
    s = [float(x) for x in orbit.simplex]
    t = float(orbit.tanh_sq)
    count = 0
    min_q = None
    nulls = []
    negatives = []
    for mode in enumerate_modes(orbit, bound):
        A = B = C = 0.0
        D = 0
        for m, si in zip(mode, s):
            A += m * m / (si * si)
            B += m * m / si
            C += m / si
            D += m
        a1 = B * B + C * C - 2.0 * A
        a2 = D * (B * D - C)
        a3 = D * D * (D * D - 1)
        qv = a1 - 2.0 * t * a2 + t * t * a3
        count += 1
        if min_q is None or qv < min_q:
            min_q = qv
        if abs(qv) <= zero_band * (1.0 + abs(a1)):
            nulls.append(mode)
        elif qv < 0:
            negatives.append(mode)
    return count, min_q, nulls, negatives


# ---------------------------------------------------------------------------
# Report


@dataclass(frozen=True)
class StabilityReport:
    verdict: str
    witness: tuple | None
    witness_q: object
    enumeration_bound: object
    modes_checked: int
    null_modes: tuple
    rigid: bool
    volume_minimizing: str
    arithmetic_track: str
    min_q: object
    stability_beyond_paper: bool


def _witness_key(mode):
    """Tie-break order: smallest sum of squares, then lexicographic over +/-."""
    norm = sum(m * m for m in mode)
    rep = min(tuple(mode), tuple(-m for m in mode))
    return (norm, rep)


def analyze(
    orbit: OrbitSpec,
    *,
    bound_override=None,
    zero_band: float = DEFAULT_ZERO_BAND,
) -> StabilityReport:
    """Full certified scan of an orbit: verdict, witness, nullity, rigidity.

    On the exact track a stable verdict is a certificate: every mode inside
    the truncation bound was evaluated in exact arithmetic and the tail is
    positive by the derived bound.  On the float track the stable verdict
    downgrades to NumericallyStable and nullity uses a relative zero band,
    since Q = 0 is a codimension condition floats cannot certify.
    """
    bound = mode_bound(orbit)
    if bound_override is not None:
        if bound_override < bound:
            raise InvalidModeBound(
                f"bound override {bound_override} is below the certified bound {bound}; "
                "overrides may only enlarge the enumeration"
            )
        bound = bound_override

    if orbit.track == EXACT:
        scan = _ExactScan(orbit)
        checked, min_n, nulls, negatives = scan.scan(bound)
        min_q = scan.q_fraction(min_n) if min_n is not None else None
        get_q = lambda m: scan.q_fraction(scan.n_value(m))
        stable_verdict = CERTIFIED_STABLE
    else:
        checked, min_q, nulls, negatives = _float_scan(orbit, bound, zero_band)
        get_q = lambda m: q_form(orbit, m)
        stable_verdict = NUMERICALLY_STABLE

    if negatives:
        witness = min((min(tuple(m), tuple(-x for x in m)) for m in negatives), key=_witness_key)
        verdict = CERTIFIED_UNSTABLE
        witness_q = get_q(witness)
    else:
        witness = None
        witness_q = None
        verdict = stable_verdict

    null_modes = tuple(sorted(canonical_mode(m) for m in nulls))
    killing = {km.mode for km in killing_null_basis(orbit)}
    rigid = verdict != CERTIFIED_UNSTABLE and set(null_modes) == killing

    # The paper proves stability only for n <= 2 and for the Clifford orbit;
    # a certified stable verdict elsewhere is new information.
    clifford = len(set(orbit.simplex)) == 1
    beyond = verdict in (CERTIFIED_STABLE, NUMERICALLY_STABLE) and orbit.n >= 3 and not clifford

    return StabilityReport(
        verdict=verdict,
        witness=witness,
        witness_q=witness_q,
        enumeration_bound=bound,
        modes_checked=checked,
        null_modes=null_modes,
        rigid=rigid,
        volume_minimizing=volume_minimizing_predicate(orbit),
        arithmetic_track=orbit.track,
        min_q=min_q,
        stability_beyond_paper=beyond,
    )


# ---------------------------------------------------------------------------
# Instability inequality and volume-minimizing predicate


def instability_inequality(orbit: OrbitSpec, i: int, j: int, k: int) -> bool:
    """True iff (1 + sum r_l^2)^{1/2} r_i < r_j r_k, i.e. s_i < t s_j s_k.

    Indices are 0-based.  True implies the orbit is unstable with the
    critical-family mode carrying -1 at position i and 1 at j and k.
    """
    n = orbit.n
    if n < 3:
        raise RequiresDimensionAtLeast3(f"need n >= 3, got n = {n}")
    for idx in (i, j, k):
        if not 0 <= idx < n:
            raise IndexOutOfRange(f"index {idx} outside 0..{n - 1}")
    if len({i, j, k}) != 3:
        raise IndicesNotDistinct(f"indices must be distinct, got {(i, j, k)}")
    s = orbit.simplex
    return s[i] < orbit.tanh_sq * s[j] * s[k]


def distinct_radius_count(orbit: OrbitSpec) -> int:
    """Number of distinct circle radii; float track uses a relative band."""
    if orbit.track == EXACT:
        return len(set(orbit.radii_sq))
    radii = sorted(float(r) for r in orbit.radii)
    count = 1
    for prev, cur in zip(radii, radii[1:]):
        if cur - prev > RADIUS_EQ_RTOL * cur:
            count += 1
    return count


def volume_minimizing_predicate(orbit: OrbitSpec) -> str:
    """The two sufficient conditions for failure of volume minimization.

    Returns No_RadiusMultiplicity when at least three distinct radii occur
    (n >= 3, regardless of stability), else No_UnstableWitness when some
    index triple certifies instability, and Unknown otherwise -- the
    remaining cases are open.
    """
    n = orbit.n
    if n >= 3:
        if distinct_radius_count(orbit) >= 3:
            return NO_RADIUS_MULTIPLICITY
        for i in range(n):
            for j in range(n):
                if j == i:
                    continue
                for k in range(j + 1, n):
                    if k == i:
                        continue
                    if instability_inequality(orbit, i, j, k):
                        return NO_UNSTABLE_WITNESS
    return UNKNOWN


# ---------------------------------------------------------------------------
# Killing null space


@dataclass(frozen=True)
class KillingMode:
    """A null mode generated by a holomorphic Killing Hamiltonian.

    Each mode pairs the cos and sin Hamiltonians named by `label` (the
    ambient functions f^c, f^s); on the geodesic sphere of the orbit their
    restrictions are the torus eigenfunctions scaled by 1 - tanh^2(r).
    """

    mode: tuple
    label: str
    scale: object


def killing_null_basis(orbit: OrbitSpec):
    """Killing-generated null modes: e_i and e_i - e_j (i < j) representatives.

    The rotation Hamiltonians h_i act tangentially on the orbit (zero normal
    projection) and contribute no mode.
    """
    n = orbit.n
    one = Fraction(1) if orbit.track == EXACT else 1.0
    scale = one - orbit.tanh_sq
    out = []
    for i in range(n):
        mode = tuple(1 if k == i else 0 for k in range(n))
        out.append(KillingMode(mode=mode, label=f"f_{i + 1}", scale=scale))
    for i in range(n):
        for j in range(i + 1, n):
            mode = tuple(1 if k == i else (-1 if k == j else 0) for k in range(n))
            out.append(KillingMode(mode=mode, label=f"f_{i + 1}{j + 1}", scale=scale))
    return out
