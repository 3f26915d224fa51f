"""Eigenstates and oscillator strengths of a pair optical center.

A pair center is two nearly identical two-level emitters coupled by an
exchange interaction Delta.  On the one-exciton basis

    a = (center 1 excited, center 2 ground)
    b = (center 1 ground,  center 2 excited)

the Hamiltonian block is [[E + eps, Delta], [Delta, E - eps]], where E
is the mean single-center excitation energy and eps half the detuning
between the two centers.  The transition dipoles of the two centers are
taken equal and parallel, so the oscillator strength of a one-exciton
state with coefficients (c_a, c_b) is (c_a + c_b)^2 * f1.

Two routes are provided: exact closed-form diagonalization of the 2x2
block, and the small-eps/Delta perturbative formulas (energies E -+ Delta,
mixing coefficients 2^-1/2 ((1 - eps/Delta), -+(1 + eps/Delta)), strengths
2 (eps/Delta)^2 f1 and 2 f1).  Note that the perturbative mixing carries
eps/Delta where strict first-order theory gives eps/(2 Delta); the exact
route is therefore the oracle for energies but the two routes' oscillator
strengths agree only at eps = 0 (see brightness_ratio).
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DomainError

SQRT_HALF = 1.0 / math.sqrt(2.0)

PERTURBATIVE_RANGE = 0.5   # |eps/Delta| beyond this draws a warning


@dataclass(frozen=True)
class PairParams:
    """Parameters of a pair center (all energies in one common unit)."""

    mean_excitation: float            # E
    half_detuning: float              # eps
    exchange: float                   # Delta
    single_oscillator_strength: float = 1.0   # f1

    def __post_init__(self):
        if self.single_oscillator_strength <= 0:
            raise DomainError("single-center oscillator strength must be > 0")

    @property
    def detuning_ratio(self) -> float:
        """eps / Delta (raises for zero exchange)."""
        if self.exchange == 0:
            raise DomainError("detuning ratio undefined for zero exchange")
        return self.half_detuning / self.exchange


@dataclass(frozen=True)
class PairStates:
    """Energies, mixing coefficients and oscillator strengths of the pair.

    The ground level sits at 0 and the doubly excited level at 2E
    exactly.  mixing_dark / mixing_bright are (c_a, c_b) on the basis
    documented in the module docstring; normalized in exact mode.
    """

    energy_dark: float
    energy_bright: float
    energy_double: float
    mixing_dark: tuple[float, float]
    mixing_bright: tuple[float, float]
    f_dark: float
    f_bright: float
    mode: str                      # "exact" | "perturbative"
    degenerate: bool = False       # eps = Delta = 0
    localized: bool = False        # Delta = 0: no exchange splitting
    energy_ground: float = 0.0


def _amplitude_strength(c: tuple[float, float], f1: float) -> float:
    return (c[0] + c[1]) ** 2 * f1


def pair_eigensystem_exact(p: PairParams) -> PairStates:
    """Diagonalize the one-exciton block exactly (closed form).

    Energies are E +- sqrt(Delta^2 + eps^2) with orthonormal
    eigenvectors; the dark label goes to the state with the smaller
    oscillator strength (the lower state for Delta > 0).  Degenerate
    inputs do not fail: Delta = 0 returns localized single-center
    states, eps = Delta = 0 the symmetric/antisymmetric convention.
    """
    e, eps, delta = p.mean_excitation, p.half_detuning, p.exchange
    f1 = p.single_oscillator_strength

    if delta == 0.0 and eps == 0.0:
        dark, bright = (SQRT_HALF, -SQRT_HALF), (SQRT_HALF, SQRT_HALF)
        return PairStates(e, e, 2 * e, dark, bright,
                          _amplitude_strength(dark, f1), _amplitude_strength(bright, f1),
                          mode="exact", degenerate=True)

    if delta == 0.0:
        # uncoupled centers: states localize, each keeps f1
        lower_is_a = eps < 0          # center 1 transition at E + eps
        dark = (1.0, 0.0) if lower_is_a else (0.0, 1.0)
        bright = (0.0, 1.0) if lower_is_a else (1.0, 0.0)
        return PairStates(e - abs(eps), e + abs(eps), 2 * e, dark, bright,
                          f1, f1, mode="exact", localized=True)

    r = math.hypot(eps, delta)
    # eigenvector branches chosen to avoid cancellation
    if eps >= 0:
        upper = (r + eps, delta)
        lower = (delta, -(r + eps))
    else:
        upper = (delta, r - eps)
        lower = (eps - r, delta)
    nu = math.hypot(*upper)
    nl = math.hypot(*lower)
    upper = (upper[0] / nu, upper[1] / nu)
    lower = (lower[0] / nl, lower[1] / nl)

    f_upper = _amplitude_strength(upper, f1)
    f_lower = _amplitude_strength(lower, f1)
    if f_upper >= f_lower:
        bright, f_bright, e_bright = upper, f_upper, e + r
        dark, f_dark, e_dark = lower, f_lower, e - r
    else:
        bright, f_bright, e_bright = lower, f_lower, e - r
        dark, f_dark, e_dark = upper, f_upper, e + r

    # sign convention: positive total amplitude on the bright state,
    # positive leading coefficient on the dark state
    if bright[0] + bright[1] < 0:
        bright = (-bright[0], -bright[1])
    if dark[0] < 0 or (dark[0] == 0.0 and dark[1] < 0):
        dark = (-dark[0], -dark[1])

    return PairStates(e_dark, e_bright, 2 * e, dark, bright, f_dark, f_bright,
                      mode="exact")


def pair_eigensystem_perturbative(p: PairParams) -> PairStates:
    """Small-detuning formulas for the pair states.

    Valid for |eps| << |Delta|; calling outside |eps/Delta| < 0.5 draws
    a warning.  Energies are E -+ Delta; the mixing coefficients are
    2^-1/2 ((1 - eps/Delta), -+(1 + eps/Delta)) for the dark/bright
    state (not re-normalized), and the strengths are the corresponding
    amplitude values 2 (eps/Delta)^2 f1 and 2 f1.
    """
    if p.exchange == 0.0:
        raise DomainError("perturbative pair states require nonzero exchange")
    x = p.detuning_ratio
    if abs(x) >= PERTURBATIVE_RANGE:
        warnings.warn(
            f"|eps/Delta| = {abs(x):.3g} outside the perturbative regime (< {PERTURBATIVE_RANGE})",
            stacklevel=2)
    e, delta, f1 = p.mean_excitation, p.exchange, p.single_oscillator_strength
    dark = (SQRT_HALF * (1 - x), -SQRT_HALF * (1 + x))
    bright = (SQRT_HALF * (1 - x), SQRT_HALF * (1 + x))
    return PairStates(
        energy_dark=e - delta,
        energy_bright=e + delta,
        energy_double=2 * e,
        mixing_dark=dark,
        mixing_bright=bright,
        f_dark=2.0 * x * x * f1,
        f_bright=2.0 * f1,
        mode="perturbative",
    )


class BrightnessRatio(NamedTuple):
    value: float
    infinite: bool


def brightness_ratio(p: PairParams, mode: str = "exact") -> BrightnessRatio:
    """Ratio f_bright / f_dark of the pair states.

    In exact mode the ratio grows as (2 Delta / eps)^2 for small
    detuning; in perturbative mode it is (Delta / eps)^2 exactly, which
    is the small-detuning enhancement the printed state list implies.
    A perfectly symmetric pair (eps = 0) has a strictly dark state and
    the ratio is reported infinite with the flag set.
    """
    if p.half_detuning == 0.0:
        return BrightnessRatio(math.inf, True)
    if mode == "exact":
        st = pair_eigensystem_exact(p)
        if st.f_dark == 0.0:
            return BrightnessRatio(math.inf, True)
        return BrightnessRatio(st.f_bright / st.f_dark, False)
    if mode == "perturbative":
        x = p.detuning_ratio
        return BrightnessRatio(1.0 / (x * x), False)
    raise DomainError(f"unknown brightness-ratio mode {mode!r}")


def dark_state_lifetime(p: PairParams, tau_single: float, mode: str = "perturbative") -> float:
    """Radiative lifetime of the dark state, tau_single * f1 / f_dark.

    In the perturbative regime this is tau_single / (2 (eps/Delta)^2).
    Infinite for a symmetric pair.  Derived from the brightness
    suppression alone; non-radiative channels are not included.
    """
    if tau_single <= 0:
        raise DomainError("single-center lifetime must be > 0")
    states = (pair_eigensystem_perturbative(p) if mode == "perturbative"
              else pair_eigensystem_exact(p))
    if states.f_dark == 0.0:
        return math.inf
    return tau_single * p.single_oscillator_strength / states.f_dark
