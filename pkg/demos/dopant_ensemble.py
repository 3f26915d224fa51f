"""Dopant statistics of a frequency-addressed qubit crystal.

Samples a doped lattice, broadens it inhomogeneously, and asks the
three scaling questions that decide whether the crystal can host a
processor: how far apart are same-frequency centers (one processor
instance per such microcrystal), how big is the N-qubit neighborhood,
and how many frequency channels can be addressed with a given laser
width.
"""
import numpy as np

from oqcsim.ensemble import (CrystalSpec, allocate_channels, assign_frequencies,
                             ensemble_neighborhood, ensemble_radius, estimate_fwhm,
                             identify_pairs, mean_qubit_spacing,
                             min_pair_concentration, nearest_neighbor_distances,
                             sample_lattice, spectral_select)

SEED = 42
SPEC = CrystalSpec(concentration=0.01, gamma_inh=1e12, gamma_h=1e6, box_size=60)
GAMMA_L = 0.1e9

print(f"crystal: c = {SPEC.concentration}, box {SPEC.box_size}^3 sites, "
      f"Gamma_inh = {SPEC.gamma_inh:.0e} Hz, laser Gamma_L = {GAMMA_L:.0e} Hz")

centers = sample_lattice(SPEC, SEED)
centers = assign_frequencies(centers, SPEC, SEED + 1)
print(f"sampled {len(centers)} dopants "
      f"(occupancy {len(centers) / SPEC.box_size**3:.4f})")
print(f"sample FWHM: {estimate_fwhm(centers.frequencies):.3e} Hz")

print()
print("-- scaling formulas --")
r0 = mean_qubit_spacing(SPEC.concentration, GAMMA_L, SPEC.gamma_inh)
print(f"mean same-frequency spacing R0 = {r0:.1f} a "
      f"(microcrystal of one processor instance)")
print(f"50-dopant neighborhood size    = {ensemble_radius(50, SPEC.concentration):.1f} a")
print(f"min pair concentration at R0 ~ 46 a = {min_pair_concentration(10**(5/3)):.1e}")

print()
print("-- the N = 50 working neighborhood --")
idx = ensemble_neighborhood(centers, 50)
nn = nearest_neighbor_distances(centers.positions[idx], SPEC.box_size)
print(f"median nearest-neighbor distance inside it: {np.median(nn):.2f} a")
print(f"(this distance sets the conditional shift; see the blockade demo)")

print()
print("-- heat-treatment pair conversion (geometric stand-in) --")
paired = identify_pairs(centers, pair_radius=2.0)
n_pairs = int(paired.is_pair_member.sum()) // 2
print(f"mutual-nearest-neighbor pairs within 2 a: {n_pairs} "
      f"({paired.is_pair_member.mean():.1%} of dopants)")

print()
print("-- frequency-channel allocation --")
window = spectral_select(centers, 0.0, 2000 * GAMMA_L)   # a wide working window
alloc = allocate_channels(window.frequencies, min_gap=3 * GAMMA_L)
print(f"{len(window)} centers inside the window, "
      f"{len(alloc.selected_indices)} addressable channels at gap 3 Gamma_L")
print("first channels (GHz):",
      np.round(np.array(alloc.channel_frequencies[:6]) / 1e9, 3))
