"""Monte-Carlo dopant ensembles on a simple-cubic lattice.

Distances are measured in units of the lattice constant a.  Sites are
occupied independently with the dopant concentration, frequencies are
drawn i.i.d. from the inhomogeneous line (gaussian by default,
lorentzian selectable), and all distance computations use periodic
boundary conditions to avoid edge bias at desk scale.

Sampling is pure given (spec, seed): a fixed seed reproduces every
array bit for bit.
"""
from __future__ import annotations

import csv
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .errors import DomainError, ValidationError

GAUSSIAN_FWHM_SIGMA = 2.0 * math.sqrt(2.0 * math.log(2.0))
# central probability mass of a gaussian between its half-maximum points
_GAUSSIAN_FWHM_MASS = math.erf(math.sqrt(math.log(2.0)))

_SLICE_LIMIT = 1 << 22    # sites per RNG chunk when sampling occupancy


@dataclass(frozen=True)
class CrystalSpec:
    """Doped-crystal parameters for ensemble sampling."""

    concentration: float
    gamma_inh: float          # inhomogeneous FWHM, Hz
    gamma_h: float            # homogeneous width, Hz
    box_size: int             # lattice units per box edge
    lattice_constant: float = 0.546   # nm; used only to label distances
    distribution: str = "gaussian"

    def __post_init__(self):
        if not (0.0 < self.concentration <= 1.0):
            raise ValidationError(f"concentration must be in (0, 1], got {self.concentration}")
        if not (self.gamma_inh > self.gamma_h > 0.0):
            raise ValidationError("need gamma_inh > gamma_h > 0")
        if self.box_size < 1:
            raise ValidationError("box size must be >= 1")
        if self.distribution not in ("gaussian", "lorentzian"):
            raise ValidationError(f"unknown distribution {self.distribution!r}")


@dataclass(frozen=True)
class DopedCenter:
    """Row view of one center in a CenterSet."""

    position: tuple[int, int, int]
    frequency: float | None
    is_pair_member: bool = False
    partner_index: int | None = None


class CenterSet:
    """Array-backed collection of doped centers in one periodic box."""

    def __init__(self, positions: np.ndarray, box_size: int,
                 frequencies: np.ndarray | None = None,
                 partner_index: np.ndarray | None = None):
        self.positions = np.asarray(positions, dtype=np.int64).reshape(-1, 3)
        self.box_size = int(box_size)
        self.frequencies = None if frequencies is None else np.asarray(frequencies, dtype=float)
        if self.frequencies is not None and len(self.frequencies) != len(self.positions):
            raise ValidationError("frequency array length mismatch")
        if partner_index is None:
            partner_index = np.full(len(self.positions), -1, dtype=np.int64)
        self.partner_index = np.asarray(partner_index, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.positions)

    def __getitem__(self, i: int) -> DopedCenter:
        partner = int(self.partner_index[i])
        return DopedCenter(
            position=tuple(int(x) for x in self.positions[i]),
            frequency=None if self.frequencies is None else float(self.frequencies[i]),
            is_pair_member=partner >= 0,
            partner_index=partner if partner >= 0 else None,
        )

    @property
    def is_pair_member(self) -> np.ndarray:
        return self.partner_index >= 0

    def subset(self, indices: np.ndarray) -> "CenterSet":
        indices = np.asarray(indices)
        freqs = None if self.frequencies is None else self.frequencies[indices]
        # partner links do not survive subsetting
        return CenterSet(self.positions[indices], self.box_size, freqs)


def sample_lattice(spec: CrystalSpec, seed: int) -> CenterSet:
    """Occupy each cation site of the box independently with probability c.

    Sites are visited in a fixed z-slice order so the draw sequence, and
    hence the output, is deterministic under the seed.  A box expected
    to hold fewer than ~10 dopants draws a statistics warning.
    """
    rng = np.random.default_rng(seed)
    n = spec.box_size
    if spec.concentration * n**3 < 10:
        warnings.warn(
            f"box of {n}^3 sites holds ~{spec.concentration * n**3:.1f} dopants; "
            "statistics will be poor", stacklevel=2)
    slab = max(1, min(n, _SLICE_LIMIT // max(1, n * n)))
    chunks = []
    for z0 in range(0, n, slab):
        depth = min(slab, n - z0)
        occ = rng.random((depth, n, n)) < spec.concentration
        zyx = np.argwhere(occ)
        if len(zyx):
            zyx[:, 0] += z0
            chunks.append(zyx[:, ::-1])   # store as (x, y, z)
    if chunks:
        positions = np.concatenate(chunks, axis=0)
    else:
        positions = np.empty((0, 3), dtype=np.int64)
    return CenterSet(positions, n)


def assign_frequencies(centers: CenterSet, spec: CrystalSpec, seed: int) -> CenterSet:
    """Draw i.i.d. center frequencies (Hz offsets) with FWHM gamma_inh."""
    rng = np.random.default_rng(seed)
    n = len(centers)
    if spec.distribution == "gaussian":
        sigma = spec.gamma_inh / GAUSSIAN_FWHM_SIGMA
        freqs = rng.normal(0.0, sigma, size=n)
    else:
        freqs = rng.standard_cauchy(size=n) * (spec.gamma_inh / 2.0)
    return CenterSet(centers.positions, centers.box_size, freqs, centers.partner_index.copy())


def spectral_select(centers: CenterSet, f0: float, gamma_l: float) -> CenterSet:
    """Centers whose frequency lies within the window |f - f0| <= Gamma_L / 2.

    For f0 at line center the selected fraction is approximately
    c_eff = (Gamma_L / Gamma_inh) * p, where p is the peak-density
    correction of the line shape (0.939 for a gaussian, 2/pi for a
    lorentzian).  A zero-width window selects nothing.
    """
    if centers.frequencies is None:
        raise ValidationError("assign frequencies before spectral selection")
    if gamma_l < 0:
        raise DomainError("window width must be >= 0")
    if gamma_l == 0.0:
        return centers.subset(np.empty(0, dtype=np.int64))
    mask = np.abs(centers.frequencies - f0) <= gamma_l / 2.0
    return centers.subset(np.flatnonzero(mask))


def mean_qubit_spacing(concentration: float, gamma_l: float, gamma_inh: float) -> float:
    """Mean spacing R0 (lattice units) between same-frequency centers.

    The concentration of centers sharing a frequency to within Gamma_L
    is c * Gamma_L / Gamma_inh; R0 is its inverse cube root.  This is
    the mean inter-center spacing, also read as the size of the
    microcrystal that works as one processor instance.
    """
    if concentration <= 0 or gamma_l <= 0 or gamma_inh <= 0:
        raise DomainError("all arguments must be > 0")
    return (concentration * gamma_l / gamma_inh) ** (-1.0 / 3.0)


def ensemble_radius(n_centers: float, concentration: float) -> float:
    """Size (N / c)^(1/3) in lattice units of the N-dopant neighborhood."""
    if n_centers < 1:
        raise DomainError("ensemble must contain at least one center")
    if concentration <= 0:
        raise DomainError("concentration must be > 0")
    return (n_centers / concentration) ** (1.0 / 3.0)


def min_pair_concentration(r0: float) -> float:
    """Minimum pair-center concentration 1 / R0^3 to keep spacing <= R0.

    At the documented working point R0 = 10^(5/3) a ~ 46.4 a this gives
    c ~ 1e-5.
    """
    if r0 <= 0:
        raise DomainError("R0 must be > 0")
    return r0 ** -3.0


def identify_pairs(centers: CenterSet, pair_radius: float = 2.0) -> CenterSet:
    """Flag mutual-nearest-neighbor pairs closer than pair_radius.

    Geometric stand-in for heat-treatment conversion of close single
    centers into pair centers.  Each center joins at most one pair; the
    partner relation is symmetric.  Distances are periodic.
    """
    if pair_radius <= 0:
        raise DomainError("pair radius must be > 0")
    n = len(centers)
    partner = np.full(n, -1, dtype=np.int64)
    if n >= 2:
        tree = cKDTree(centers.positions.astype(float), boxsize=centers.box_size)
        dist, idx = tree.query(centers.positions.astype(float), k=2)
        nn, nn_dist = idx[:, 1], dist[:, 1]
        mutual = nn[nn[np.arange(n)]] == np.arange(n)
        close = nn_dist <= pair_radius
        take = mutual & close
        partner[take] = nn[take]
    return CenterSet(centers.positions, centers.box_size,
                     None if centers.frequencies is None else centers.frequencies.copy(),
                     partner)


@dataclass(frozen=True)
class ChannelAllocation:
    """Frequencies selected for individually addressable channels."""

    selected_indices: tuple[int, ...]
    min_gap: float
    channel_frequencies: tuple[float, ...]

    def __post_init__(self):
        freqs = self.channel_frequencies
        for a, b in zip(freqs, freqs[1:]):
            if not (b - a > self.min_gap):
                raise ValidationError("channel frequencies violate the gap constraint")


def allocate_channels(frequencies, min_gap: float) -> ChannelAllocation:
    """Largest subset of frequencies with pairwise gaps above min_gap.

    Sort-and-sweep greedy: walk the frequencies in increasing order and
    keep each one that clears the last kept frequency by more than
    min_gap.  For this one-dimensional packing the greedy subset has
    maximum cardinality.
    """
    if min_gap < 0:
        raise DomainError("minimum gap must be >= 0")
    freqs = np.asarray(frequencies, dtype=float)
    if freqs.ndim != 1:
        raise ValidationError("frequencies must be a flat list")
    order = np.argsort(freqs, kind="stable")
    selected: list[int] = []
    last = -math.inf
    for i in order:
        f = freqs[i]
        if f - last > min_gap or not selected:
            selected.append(int(i))
            last = f
    return ChannelAllocation(
        selected_indices=tuple(selected),
        min_gap=min_gap,
        channel_frequencies=tuple(float(freqs[i]) for i in selected),
    )


def nearest_neighbor_distances(positions: np.ndarray, box_size: int) -> np.ndarray:
    """Periodic nearest-neighbor distance of every point (lattice units)."""
    positions = np.asarray(positions, dtype=float).reshape(-1, 3)
    if len(positions) < 2:
        return np.empty(0)
    tree = cKDTree(positions, boxsize=box_size)
    dist, _ = tree.query(positions, k=2)
    return dist[:, 1]


def ensemble_neighborhood(centers: CenterSet, n_ensemble: int) -> np.ndarray:
    """Indices of the reference center plus its n_ensemble nearest dopants.

    The reference is the dopant closest to the box center; distances are
    periodic.  Mirrors the working unit of one processor instance: an
    excited center and the N dopants around it.
    """
    n = len(centers)
    if n < n_ensemble + 1:
        raise DomainError(f"need at least {n_ensemble + 1} centers, have {n}")
    pos = centers.positions.astype(float)
    tree = cKDTree(pos, boxsize=centers.box_size)
    mid = np.full(3, centers.box_size / 2.0)
    _, ref = tree.query(mid, k=1)
    _, idx = tree.query(pos[int(ref)], k=n_ensemble + 1)
    return np.asarray(idx, dtype=np.int64)


def estimate_fwhm(frequencies, distribution: str = "gaussian") -> float:
    """Empirical FWHM of a frequency sample.

    Quantile-based: for a gaussian the central 76.1% of the mass spans
    exactly one FWHM; for a lorentzian the interquartile range does.
    """
    freqs = np.asarray(frequencies, dtype=float)
    if len(freqs) < 8:
        raise DomainError("too few samples for a width estimate")
    if distribution == "gaussian":
        lo, hi = (1.0 - _GAUSSIAN_FWHM_MASS) / 2.0, (1.0 + _GAUSSIAN_FWHM_MASS) / 2.0
    elif distribution == "lorentzian":
        lo, hi = 0.25, 0.75
    else:
        raise DomainError(f"unknown distribution {distribution!r}")
    q = np.quantile(freqs, [lo, hi])
    return float(q[1] - q[0])


def export_centers_csv(path, centers: CenterSet) -> None:
    """Write centers as CSV rows (x, y, z, frequency_hz, is_pair, partner)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "y", "z", "frequency_hz", "is_pair_member", "partner_index"])
        for i in range(len(centers)):
            c = centers[i]
            writer.writerow([
                c.position[0], c.position[1], c.position[2],
                "" if c.frequency is None else repr(c.frequency),
                int(c.is_pair_member),
                "" if c.partner_index is None else c.partner_index,
            ])


def export_allocation_csv(path, allocation: ChannelAllocation) -> None:
    """Write an allocation as CSV rows (channel, input_index, frequency_hz)."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["channel", "input_index", "frequency_hz"])
        for ch, (idx, f) in enumerate(zip(allocation.selected_indices,
                                          allocation.channel_frequencies)):
            writer.writerow([ch, idx, repr(f)])
