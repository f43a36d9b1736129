"""Event-driven two-ball billiard and certified digit extraction.

A heavy ball slides toward a light ball resting near a hard wall; all
collisions are elastic.  The total number of collisions is finite and, for a
mass ratio M/m = 100**N, equals the integer part of pi * 10**N.  This module
provides the event-driven simulation (used as the counting oracle), the
closed-form count floor(pi/beta) with its integer-tie correction, and a
certified extraction of floor(pi * 10**N) based on interval arithmetic plus
an independent high-precision series.
"""

from __future__ import annotations

import bisect
import enum
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .bigreal import BigReal
from .core import BilliardParams, DomainError, to_polar
from .curves import CurveSeries

# Environment variable capping the interval-arithmetic escalation.
PRECISION_BITS_ENV = "PI_BILLIARDS_PRECISION_BITS"
_DEFAULT_PRECISION_CAP = 1 << 16

# Relative window inside which pi/beta is treated as an exact integer tie.
_TIE_REL_TOL = 1e-9


class SimulationConsistencyError(RuntimeError):
    """The event loop exceeded the theoretical collision bound."""


class IndeterminateFloorError(RuntimeError):
    """The floor could not be certified within the precision ceiling."""


class PiDigitsMismatchError(RuntimeError):
    """The two independent digit routes disagree."""

    def __init__(self, collision_count: int, pi_floor: int):
        self.collision_count = collision_count
        self.pi_floor = pi_floor
        super().__init__(
            f"collision-count route gives {collision_count}, "
            f"independent floor(pi*10^N) gives {pi_floor}")


class CollisionKind(str, enum.Enum):
    BALL_BALL = "ball-ball"
    BALL_WALL = "ball-wall"


@dataclass(frozen=True)
class ClassicalState:
    t: float
    x: float
    y: float
    vx: float
    vy: float

    def kinetic_energy(self, params: BilliardParams) -> float:
        return 0.5 * (params.M * self.vx ** 2 + params.m * self.vy ** 2)


@dataclass(frozen=True)
class CollisionEvent:
    index: int          # 1-based ordinal
    kind: CollisionKind
    t: float
    state_after: ClassicalState


@dataclass(frozen=True)
class CollisionTrace:
    params: BilliardParams
    initial: ClassicalState
    events: tuple[CollisionEvent, ...]
    count: int
    max_energy_drift: float

    @property
    def final(self) -> ClassicalState:
        return self.events[-1].state_after if self.events else self.initial


def _int_ratio_float(num: int, den: int) -> float:
    """num/den as a float without building huge intermediate floats."""
    shift = max(num.bit_length(), den.bit_length()) - 62
    if shift > 0:
        num >>= shift
        den >>= shift
    return num / den if den else math.inf


def simulate(params: BilliardParams, v0: float, x0: float, y0: float) -> CollisionTrace:
    """Run the elastic collision process to completion.

    The heavy ball starts at ``x0`` moving toward the wall with speed ``v0``;
    the light ball rests at ``y0`` with 0 < y0 < x0.  Velocities are updated
    in exact integer arithmetic (every float input is an exact rational, and
    the elastic update only ever divides by M + m), so the event sequence and
    the final count carry no rounding ambiguity at any mass ratio; event
    times and positions are tracked in floats for the trace.
    """
    if not (x0 > y0 > 0):
        raise DomainError("need x0 > y0 > 0")
    if not v0 > 0:
        raise DomainError("need v0 > 0 (heavy ball moving toward the wall)")

    # integer masses with a common scale: exact for any float input
    mf, mf2 = Fraction(params.M), Fraction(params.m)
    den = mf.denominator * mf2.denominator // math.gcd(mf.denominator, mf2.denominator)
    big = mf.numerator * (den // mf.denominator)
    small = mf2.numerator * (den // mf2.denominator)
    # velocities vx = px/q, vy = py/q with q = v0_den * (big+small)**k
    v0f = Fraction(v0)
    px, py, q = -v0f.numerator, 0, v0f.denominator

    t, x, y = 0.0, float(x0), float(y0)
    initial = ClassicalState(t, x, y, -float(v0), 0.0)
    e0 = initial.kinetic_energy(params)

    guard = 10 * math.ceil(math.pi / params.wedge_angle)
    events = []
    drift = 0.0
    while True:
        if py > px:
            # balls approaching: elastic ball-ball exchange
            vx = _int_ratio_float(px, q)
            dt = (x - y) / _int_ratio_float(py - px, q)
            t += dt
            x += vx * dt
            y = x
            px, py = (big - small) * px + 2 * small * py, \
                     2 * big * px + (small - big) * py
            q *= big + small
            kind = CollisionKind.BALL_BALL
        elif py < 0:
            # light ball reaches the wall and reflects
            dt = y / -_int_ratio_float(py, q)
            t += dt
            x += _int_ratio_float(px, q) * dt
            y = 0.0
            py = -py
            kind = CollisionKind.BALL_WALL
        else:
            break
        state = ClassicalState(t, x, y,
                               _int_ratio_float(px, q), _int_ratio_float(py, q))
        events.append(CollisionEvent(len(events) + 1, kind, t, state))
        drift = max(drift, abs(state.kinetic_energy(params) - e0) / e0)
        if len(events) > guard:
            raise SimulationConsistencyError(
                f"collision count exceeded {guard}; finiteness guarantee violated")

    return CollisionTrace(params, initial, tuple(events), len(events), drift)


def count_closed_form(beta: float) -> int:
    """Collision count floor(pi/beta), with pi/beta - 1 at exact integer ties.

    pi/beta within a relative 1e-9 of an integer is snapped to the tie: for
    those geometries (beta = pi/4, pi/6, ...) the final boundary ray of the
    unfolded wedge is grazed, not crossed, so the count drops by one.
    """
    if not 0.0 < beta <= math.pi / 2 * (1 + 1e-12):
        raise DomainError("beta must lie in (0, pi/2]")
    q = math.pi / beta
    nearest = round(q)
    if abs(q - nearest) <= _TIE_REL_TOL * max(1.0, q):
        return int(nearest) - 1
    return math.floor(q)


# -- certified digits ---------------------------------------------------------


@dataclass(frozen=True)
class PiDigitsResult:
    value: int            # floor(pi * 10**N)
    digits: int           # N
    bits: int             # interval precision that certified the result
    collision_count: int  # route (a): count at beta = arccot(10**N)
    pi_floor: int         # route (b): independent series floor(pi * 10**N)


def _pi_floor_independent(digits: int) -> int:
    """floor(pi * 10**N) from mpmath, accepted only when stable under a
    doubling of the working precision."""
    from mpmath import mp

    dps = digits + 30
    while True:
        with mp.workdps(dps):
            first = int(mp.floor(mp.pi * 10 ** digits))
        with mp.workdps(2 * dps):
            second = int(mp.floor(mp.pi * 10 ** digits))
        if first == second:
            return first
        dps *= 2


def pi_digits_detail(digits: int) -> PiDigitsResult:
    """Certified floor(pi * 10**N) computed two independent ways.

    Route (a): the closed-form collision count at beta = arccot(10**N),
    evaluated in interval arithmetic with precision escalated until the floor
    is certain.  N = 0 is the exact integer tie arccot(1) = pi/4, handled
    symbolically (count 4 - 1 = 3); for N >= 1 the ratio pi/arctan(10**-N) is
    irrational, so a certified floor is the exact count.

    Route (b): floor(pi * 10**N) from an independent arbitrary-precision
    series.  The value is returned only when both routes agree.
    """
    if digits < 0 or digits != int(digits):
        raise DomainError("N must be a non-negative integer")
    digits = int(digits)
    cap = int(os.environ.get(PRECISION_BITS_ENV, _DEFAULT_PRECISION_CAP))
    oracle = _pi_floor_independent(digits)

    bits = 64 + 10 * digits
    while bits <= cap:
        pi_iv = BigReal.pi(bits)
        scaled_floor = pi_iv.scale_int(10 ** digits).floor_certified()
        if digits == 0:
            count = 3
        else:
            beta_iv = BigReal.atan_fraction(1, 10 ** digits, bits)
            count = pi_iv.divide(beta_iv).floor_certified()
        if scaled_floor is None or count is None:
            bits *= 2
            continue
        if scaled_floor != oracle:
            raise RuntimeError(
                f"certified interval floor {scaled_floor} disagrees with the "
                f"independent series floor {oracle}")
        if count != oracle:
            raise PiDigitsMismatchError(count, oracle)
        return PiDigitsResult(oracle, digits, bits, count, scaled_floor)

    raise IndeterminateFloorError(
        f"floor not certified for N={digits} within {cap} bits "
        f"(set {PRECISION_BITS_ENV} to raise the ceiling)")


def pi_digits(digits: int) -> int:
    """floor(pi * 10**N) with a two-route certificate; see pi_digits_detail."""
    return pi_digits_detail(digits).value


# -- trajectory curves --------------------------------------------------------


def _segment_states(trace: CollisionTrace) -> list[ClassicalState]:
    return [trace.initial] + [ev.state_after for ev in trace.events]


def _rho_min_and_time(trace: CollisionTrace) -> tuple[float, float]:
    """Global minimum of rho over the full trajectory and the time it occurs.

    The trajectory unfolds to a straight line in the mass-scaled plane, so the
    minimum over the piecewise-linear physical path equals the line-to-origin
    distance; it is found by projecting per segment (first and last segments
    extend to infinite time).
    """
    params = trace.params
    states = _segment_states(trace)
    best_r2, best_t = math.inf, 0.0
    for i, s in enumerate(states):
        lo = -math.inf if i == 0 else 0.0
        hi = math.inf if i == len(states) - 1 else states[i + 1].t - s.t
        quad = params.M * s.vx ** 2 + params.m * s.vy ** 2
        slope = 2.0 * (params.M * s.x * s.vx + params.m * s.y * s.vy)
        tau = -slope / (2.0 * quad) if quad > 0 else 0.0
        tau = min(max(tau, lo), hi)
        x = s.x + s.vx * tau
        y = s.y + s.vy * tau
        r2 = params.M * x * x + params.m * y * y
        if r2 < best_r2:
            best_r2, best_t = r2, s.t + tau
    return math.sqrt(best_r2), best_t


def _state_at(trace: CollisionTrace, t: float) -> tuple[float, float]:
    """Ball positions at time t, extrapolating the first/last segments."""
    states = _segment_states(trace)
    times = [s.t for s in states]
    i = bisect.bisect_right(times, t) - 1
    i = max(i, 0)
    s = states[i]
    tau = t - s.t
    return s.x + s.vx * tau, s.y + s.vy * tau


def _normalized_time(rho: float, rho_min: float, v_sign: float) -> float:
    ratio = min(rho_min / rho, 1.0) if rho > 0 else 1.0
    return math.copysign(1.0, v_sign) * math.acos(ratio) if v_sign != 0 else 0.0


def classical_curve(params: BilliardParams, v0: float = 1.0, x0: float = 10.0,
                    y0: float = 1.0, samples: int = 2000) -> CurveSeries:
    """Normalized light-ball position y/x against the compactified time alpha.

    alpha = sgn(d rho/dt) * arccos(rho_min/rho) runs over (-pi/2, pi/2) as the
    trajectory comes in from infinity, reaches its closest approach to the
    corner, and recedes.  Collision events appear as slope breaks; their alpha
    positions and the trace count are recorded in the metadata.
    """
    if samples < 2:
        raise DomainError("need at least two samples")
    trace = simulate(params, v0, x0, y0)
    rho_min, t_star = _rho_min_and_time(trace)
    speed = math.sqrt(2.0 * trace.initial.kinetic_energy(params))

    alphas = (np.arange(samples) + 0.5) * (math.pi / samples) - math.pi / 2
    ys = np.empty_like(alphas)
    for i, alpha in enumerate(alphas):
        t = t_star + rho_min * math.tan(alpha) / speed
        x, y = _state_at(trace, t)
        ys[i] = y / x

    collision_alphas = []
    for ev in trace.events:
        p = to_polar(ev.state_after.x, ev.state_after.y, params)
        collision_alphas.append(_normalized_time(p.rho, rho_min, ev.t - t_star))

    return CurveSeries(
        abscissa="alpha", ordinate="y_over_x", xs=alphas, ys=ys,
        labels={"model": "classical", "n": ""},
        metadata={
            "beta": params.wedge_angle,
            "mass_ratio": params.M / params.m,
            "v0": v0, "x0": x0, "y0": y0,
            "collision_count": trace.count,
            "collision_alphas": collision_alphas,
            "rho_min": rho_min,
            "max_energy_drift": trace.max_energy_drift,
        })


def classical_eta_curve(params: BilliardParams, v0: float = 1.0, x0: float = 10.0,
                        y0: float = 1.0, samples: int = 2000) -> CurveSeries:
    """Incoming-branch wedge angle theta/beta against eta = arccos(rho_min/rho).

    This is the classical reference for the sector-scattering picture: eta
    plays the role of the compactified radius with the classical turning
    radius rho_min in place of the quantum one, and only the approach branch
    (the analogue of the incident wave) is emitted.
    """
    if samples < 2:
        raise DomainError("need at least two samples")
    trace = simulate(params, v0, x0, y0)
    rho_min, t_star = _rho_min_and_time(trace)
    speed = math.sqrt(2.0 * trace.initial.kinetic_energy(params))
    beta = params.wedge_angle

    etas = (np.arange(samples) + 0.5) * (math.pi / 2 / samples)
    ys = np.empty_like(etas)
    for i, eta in enumerate(etas):
        t = t_star - rho_min * math.tan(eta) / speed
        x, y = _state_at(trace, t)
        ys[i] = to_polar(x, y, params).theta / beta

    return CurveSeries(
        abscissa="eta", ordinate="theta_over_beta", xs=etas, ys=ys,
        labels={"model": "classical", "l": ""},
        metadata={
            "beta": beta,
            "mass_ratio": params.M / params.m,
            "v0": v0, "x0": x0, "y0": y0,
            "branch": "incoming",
            "collision_count": trace.count,
            "rho_min": rho_min,
        })
