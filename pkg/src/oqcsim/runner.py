"""Config-driven scenario execution behind the command-line interface.

A scenario config is one JSON document with named sections; sections
present select what runs, in dependency order species -> crystal
(ensemble) -> interactions -> pulses -> gate -> sweep.  All numeric
outputs are deterministic functions of (config, seed, version): floats
are serialized with repr and JSON keys are sorted, so re-running a
config with the same seed reproduces every numeric output byte for
byte.  The manifest records wall-clock time and is exempt from that
guarantee.

The documented schema lives in the README; validate() performs every
check run() performs, without executing anything.
"""
from __future__ import annotations

import csv
import hashlib
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import __version__
from .ensemble import (CrystalSpec, allocate_channels, assign_frequencies,
                       ensemble_radius, estimate_fwhm, export_allocation_csv,
                       export_centers_csv, identify_pairs, mean_qubit_spacing,
                       min_pair_concentration, nearest_neighbor_distances,
                       sample_lattice, spectral_select)
from .errors import (ConfigurationError, DomainError, OqcsimError, ParseError,
                     ValidationError)
from .gates import (GateScenario, NoiseFlags, QubitScheme, canonical_blockade_sequence,
                    pair_center_scenario, run_protocol, sweep as run_sweep)
from .dynamics import export_trajectory_csv, propagate_lindblad, propagate_unitary
from .interactions import BlockadeModel, ensemble_blockade_report
from .paircenter import PairParams
from .pulses import (BeamGeometry, EmitterRadiative, build_sequence, peak_field,
                     pi_pulse_budget, pulse_energy)
from .species import LevelRole, load_registry, validate_scheme

KNOWN_SECTIONS = {"seed", "output", "species", "crystal", "pulses",
                  "interactions", "gate", "sweep"}

SWEEPABLE = {"delta_shift_rad_s", "delta_over_omega", "rabi_rad_s", "gamma_h_hz"}


def _require(cond: bool, msg: str):
    if not cond:
        raise ValidationError(msg)


def _known_keys(section: dict, allowed: set[str], where: str):
    unknown = set(section) - allowed
    if unknown:
        raise ParseError(f"{where}: unknown fields {sorted(unknown)}")


@dataclass
class RunManifest:
    config_hash: str
    tool_version: str
    seed: int | None
    wall_clock_s: float
    outputs: dict

    def to_dict(self) -> dict:
        return {
            "config_hash": self.config_hash,
            "tool_version": self.tool_version,
            "seed": self.seed,
            "wall_clock_s": self.wall_clock_s,
            "outputs": self.outputs,
        }


class ScenarioConfig:
    """Parsed and cross-checked scenario configuration."""

    def __init__(self, doc: dict, origin: str = "<config>"):
        if not isinstance(doc, dict):
            raise ParseError(f"{origin}: top level must be a JSON object")
        _known_keys(doc, KNOWN_SECTIONS, origin)
        runnable = KNOWN_SECTIONS - {"seed", "output"}
        if not any(k in doc for k in runnable):
            raise ParseError(f"{origin}: no runnable sections present")
        self.doc = doc
        self.origin = origin
        self.seed = doc.get("seed")
        if self.seed is not None and not isinstance(self.seed, int):
            raise ParseError(f"{origin}: seed must be an integer")
        if "crystal" in doc and self.seed is None:
            raise ValidationError(f"{origin}: a seed is mandatory for stochastic sections")
        self._check_species()
        self._check_crystal()
        self._check_pulses()
        self._check_interactions()
        self._check_gate()
        self._check_sweep()

    # -- section checks (shared by validate and run) --------------------

    def _check_species(self):
        sec = self.doc.get("species")
        if sec is None:
            self.registry = load_registry() if ("crystal" in self.doc
                                                or "interactions" in self.doc) else None
            self.scheme = None
            return
        _known_keys(sec, {"use", "host", "registry_file", "u2_threshold"}, "species")
        self.registry = load_registry(sec.get("registry_file"))
        self.scheme = self.registry.get(sec["use"], sec.get("host")) if "use" in sec else None

    def _check_crystal(self):
        sec = self.doc.get("crystal")
        if sec is None:
            self.crystal = None
            return
        _known_keys(sec, {"concentration", "gamma_inh_hz", "gamma_h_hz", "box_size",
                          "lattice_constant_nm", "distribution", "n_ensemble",
                          "pair_radius", "channel_min_gap_hz", "center_frequency_hz",
                          "export_centers", "export_channels"}, "crystal")
        self.crystal = CrystalSpec(
            concentration=float(sec["concentration"]),
            gamma_inh=float(sec["gamma_inh_hz"]),
            gamma_h=float(sec["gamma_h_hz"]),
            box_size=int(sec["box_size"]),
            lattice_constant=float(sec.get("lattice_constant_nm", 0.546)),
            distribution=sec.get("distribution", "gaussian"),
        )
        if "pulses" not in self.doc or "gamma_l_hz" not in self.doc["pulses"]:
            raise ValidationError(
                "crystal section needs pulses.gamma_l_hz for spectral selection")
        if self.crystal.gamma_h > float(self.doc["pulses"]["gamma_l_hz"]):
            raise ValidationError("homogeneous width exceeds the laser width; "
                                  "lines are not resolvable")
        if int(sec.get("n_ensemble", 50)) < 2:
            raise ValidationError("crystal.n_ensemble must be at least 2")

    def _check_pulses(self):
        sec = self.doc.get("pulses")
        if sec is None:
            self.pulse_inputs = None
            return
        _known_keys(sec, {"carrier_cm", "radiative_lifetime_s", "gamma_l_hz",
                          "cross_section_cm2", "refractive_index",
                          "rei_intensity_factor"}, "pulses")
        self.pulse_inputs = {
            "carrier_cm": float(sec["carrier_cm"]),
            "emitter": EmitterRadiative(float(sec["radiative_lifetime_s"])),
            "gamma_l": float(sec["gamma_l_hz"]),
            "beam": BeamGeometry(float(sec.get("cross_section_cm2", 1e-7)),
                                 float(sec.get("refractive_index", 1.0))),
            "rei_factor": float(sec.get("rei_intensity_factor", 0.0)),
        }
        if self.pulse_inputs["gamma_l"] <= 0:
            raise DomainError("pulses.gamma_l_hz must be > 0")

    def _check_interactions(self):
        sec = self.doc.get("interactions")
        if sec is None:
            self.blockade = None
            return
        _known_keys(sec, {"c_qq_hz", "c_dd_hz", "kappa", "u2_a", "u2_b"}, "interactions")
        defaults = BlockadeModel()
        c_qq, c_dd = sec.get("c_qq_hz"), sec.get("c_dd_hz")
        self.blockade = BlockadeModel(
            c_qq=defaults.c_qq if c_qq is None else float(c_qq),
            c_dd=defaults.c_dd if c_dd is None else float(c_dd),
            blockade_margin=float(sec.get("kappa", defaults.blockade_margin)),
        )
        if "crystal" not in self.doc:
            raise ValidationError("interactions section needs a crystal section")
        u2 = sec.get("u2_a")
        if u2 is None:
            if self.scheme is None:
                raise ValidationError(
                    "interactions needs u2_a/u2_b or a species with an auxiliary level")
            aux = self.scheme.role_level(LevelRole.AUXILIARY)
            _require(aux is not None and aux.u2_diag_sq is not None,
                     f"species {self.scheme.species_name} has no auxiliary U(2) value")
            self.u2_pair = (aux.u2_diag_sq, aux.u2_diag_sq)
        else:
            self.u2_pair = (float(u2), float(sec.get("u2_b", u2)))

    def _check_gate(self):
        sec = self.doc.get("gate")
        if sec is None:
            self.gate_cfg = None
            return
        _known_keys(sec, {"type", "rabi_rad_s", "delta_shift_rad_s", "gamma_h_hz",
                          "gamma_l_hz", "noise", "gate_target", "sequence",
                          "pair_center", "export_trajectory", "trajectory_input",
                          "note"}, "gate")
        kind = sec.get("type", "canonical_cz")
        if kind not in ("canonical_cz", "pair_center", "custom"):
            raise ParseError(f"gate.type must be canonical_cz, pair_center or custom, got {kind!r}")
        self.gate_cfg = dict(sec)
        self.gate_cfg["type"] = kind
        # construction is cheap: build once to surface validation errors
        build_gate_scenario(self.gate_cfg)

    def _check_sweep(self):
        sec = self.doc.get("sweep")
        if sec is None:
            self.sweep_grid = None
            return
        _known_keys(sec, {"grid"}, "sweep")
        if "gate" not in self.doc:
            raise ValidationError("sweep section needs a gate section")
        grid = sec.get("grid", {})
        _require(isinstance(grid, dict) and grid, "sweep.grid must be a non-empty mapping")
        unknown = set(grid) - SWEEPABLE
        if unknown:
            raise ParseError(f"sweep.grid: unsupported parameters {sorted(unknown)}; "
                             f"choose from {sorted(SWEEPABLE)}")
        for k, v in grid.items():
            _require(isinstance(v, list) and v, f"sweep.grid[{k!r}] must be a non-empty list")
        self.sweep_grid = {k: [float(x) for x in v] for k, v in grid.items()}


def build_gate_scenario(cfg: dict, **overrides) -> GateScenario:
    """Build a GateScenario from the gate config section plus overrides.

    Overrides are sweep parameters: delta_shift_rad_s, rabi_rad_s,
    gamma_h_hz, or delta_over_omega (resolved against the Rabi value).
    """
    rabi = float(overrides.get("rabi_rad_s", cfg.get("rabi_rad_s", 2 * math.pi * 1e9)))
    gamma_h = float(overrides.get("gamma_h_hz", cfg.get("gamma_h_hz", 0.0)))
    gamma_l = float(cfg.get("gamma_l_hz", 1e9))
    if "delta_over_omega" in overrides:
        delta_shift = float(overrides["delta_over_omega"]) * rabi
    else:
        delta_shift = float(overrides.get("delta_shift_rad_s",
                                          cfg.get("delta_shift_rad_s", 0.0)))
    noise_cfg = cfg.get("noise", {})
    noise = NoiseFlags(lifetimes=bool(noise_cfg.get("lifetimes", False)),
                       dephasing=bool(noise_cfg.get("dephasing", False)))

    if cfg["type"] == "pair_center":
        pc = cfg.get("pair_center")
        _require(isinstance(pc, dict), "gate.pair_center section is required for this type")

        def params(side: str) -> PairParams:
            rec = pc.get(side)
            _require(isinstance(rec, dict), f"gate.pair_center.{side} is required")
            return PairParams(
                mean_excitation=float(rec["mean_excitation_cm"]),
                half_detuning=float(rec["half_detuning_cm"]),
                exchange=float(rec["exchange_cm"]),
                single_oscillator_strength=float(rec.get("f1", 1.0)),
            )

        scenario = pair_center_scenario(
            params("control"), params("target"),
            distance=float(pc["distance_lu"]),
            rabi=rabi,
            tau_single=pc.get("tau_single_s"),
            gamma_h=gamma_h,
            noise=noise,
            gamma_l=gamma_l,
            mode=pc.get("mode", "perturbative"),
        )
        if "delta_shift_rad_s" in overrides or "delta_over_omega" in overrides:
            scenario = replace(scenario, delta_shift=delta_shift)
    else:
        control = QubitScheme(name="control")
        target = QubitScheme(name="target")
        scenario = GateScenario(control=control, target=target, rabi=rabi,
                                delta_shift=delta_shift, gamma_h=gamma_h,
                                gamma_l=gamma_l, noise=noise,
                                gate_target=cfg.get("gate_target", "cz"))

    if cfg["type"] == "custom" or cfg.get("sequence"):
        steps = cfg.get("sequence")
        _require(isinstance(steps, list) and steps, "gate.sequence must be a non-empty list")
        scenario = replace(scenario, sequence=build_sequence(steps, scenario.qubit_levels()))
    return scenario


def _sweep_point(gate_cfg: dict, point: dict) -> dict:
    row = dict(point)
    try:
        report = run_protocol(build_gate_scenario(gate_cfg, **point))
        row.update({
            "truth_table_fidelity": report.truth_table_fidelity,
            "average_fidelity": report.average_fidelity,
            "infidelity": 1.0 - report.average_fidelity,
            "leakage": report.leakage,
            "cz_phase_rad": report.cz_phase,
            "status": "ok",
        })
    except (OqcsimError, ValueError) as exc:
        row["status"] = f"error: {exc}"
    return row


def load_config(path) -> ScenarioConfig:
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except FileNotFoundError:
        raise ParseError(f"config file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}: {exc.msg}") from None
    return ScenarioConfig(doc, origin=str(path))


def validate(path) -> ScenarioConfig:
    """Full schema, cross-reference and precondition check; no side effects."""
    return load_config(path)


def _write_json(path: Path, payload: dict):
    path.write_text(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _config_hash(doc: dict) -> str:
    canonical = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def run(config_path, out_dir=None, seed: int | None = None, jobs: int = 1) -> dict:
    """Execute a scenario config and write its outputs.

    Returns the manifest dictionary.  out_dir defaults to the config's
    output.dir, else '<config stem>_out' next to the config.
    """
    t0 = time.perf_counter()
    cfg = load_config(config_path)
    doc = cfg.doc
    if seed is not None:
        doc = {**doc, "seed": seed}
        cfg = ScenarioConfig(doc, cfg.origin)
    if out_dir is None:
        out_dir = doc.get("output", {}).get("dir") or (
            Path(config_path).with_suffix("").name + "_out")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    outputs: dict[str, str] = {}

    if cfg.scheme is not None or "species" in doc:
        outputs["species_report"] = "species_report.json"
        _write_json(out / "species_report.json", _species_report(cfg))

    if cfg.crystal is not None:
        _run_ensemble(cfg, out, outputs)

    if cfg.blockade is not None:
        outputs["blockade_report"] = "blockade_report.json"
        _write_json(out / "blockade_report.json", _run_blockade(cfg))

    if cfg.pulse_inputs is not None:
        outputs["pulse_report"] = "pulse_report.json"
        _write_json(out / "pulse_report.json", _run_pulses(cfg))

    if cfg.gate_cfg is not None:
        outputs["gate_report"] = "gate_report.json"
        scenario = build_gate_scenario(cfg.gate_cfg)
        report = run_protocol(scenario)
        _write_json(out / "gate_report.json", report.to_dict())
        if cfg.gate_cfg.get("export_trajectory"):
            outputs["trajectory"] = "trajectory.csv"
            _export_gate_trajectory(scenario, cfg.gate_cfg, out / "trajectory.csv")

    if cfg.sweep_grid is not None:
        outputs["sweep"] = "sweep.csv"
        _run_sweep_csv(cfg, out / "sweep.csv", jobs)

    manifest = RunManifest(
        config_hash=_config_hash(doc),
        tool_version=__version__,
        seed=doc.get("seed"),
        wall_clock_s=time.perf_counter() - t0,
        outputs=outputs,
    )
    _write_json(out / "manifest.json", manifest.to_dict())
    return manifest.to_dict()


def _species_report(cfg: ScenarioConfig) -> dict:
    threshold = float(cfg.doc.get("species", {}).get("u2_threshold", 1.0))
    schemes = [cfg.scheme] if cfg.scheme is not None else list(cfg.registry)
    entries = []
    for sc in schemes:
        report = validate_scheme(sc, threshold)
        entries.append({
            "species": sc.species_name,
            "host": sc.host,
            "levels": [{
                "term": lv.term_symbol,
                "energy_cm": lv.energy,
                "lifetime_s": lv.lifetime,
                "u2_diag_sq": lv.u2_diag_sq,
                "role": lv.role.value,
            } for lv in sc.levels],
            "validation_passed": report.passed,
            "diagnostics": [{"level": d.term_symbol, "status": d.status,
                             "message": d.message} for d in report.diagnostics],
        })
    return {"u2_threshold": threshold, "species": entries}


def _run_ensemble(cfg: ScenarioConfig, out: Path, outputs: dict) -> None:
    sec = cfg.doc["crystal"]
    spec = cfg.crystal
    gamma_l = float(cfg.doc["pulses"]["gamma_l_hz"])
    seed = cfg.doc["seed"]
    n_ensemble = int(sec.get("n_ensemble", 50))

    centers = sample_lattice(spec, seed)
    centers = assign_frequencies(centers, spec, seed + 1)
    centers = identify_pairs(centers, float(sec.get("pair_radius", 2.0)))
    selected = spectral_select(centers, float(sec.get("center_frequency_hz", 0.0)), gamma_l)

    n_sites = spec.box_size ** 3
    data = {
        "n_sites": n_sites,
        "n_dopants": len(centers),
        "occupancy_fraction": len(centers) / n_sites,
        "r0_lattice_units": mean_qubit_spacing(spec.concentration, gamma_l, spec.gamma_inh),
        "ensemble_radius_lattice_units": ensemble_radius(n_ensemble, spec.concentration),
        "n_ensemble": n_ensemble,
        "min_pair_concentration_at_r0": min_pair_concentration(
            mean_qubit_spacing(spec.concentration, gamma_l, spec.gamma_inh)),
        "n_selected": len(selected),
        "selected_fraction": len(selected) / max(1, len(centers)),
        "n_pair_members": int(np.sum(centers.is_pair_member)),
    }
    if len(centers) >= 8:
        data["sample_fwhm_hz"] = estimate_fwhm(centers.frequencies, spec.distribution)
    if len(selected) >= 2:
        nn = nearest_neighbor_distances(selected.positions, spec.box_size)
        data["selected_median_nn_lattice_units"] = float(np.median(nn))

    if sec.get("export_centers"):
        outputs["centers"] = "centers.csv"
        export_centers_csv(out / "centers.csv", centers)
    if sec.get("export_channels"):
        gap = float(sec.get("channel_min_gap_hz", 3.0 * gamma_l))
        alloc = allocate_channels(centers.frequencies, gap)
        data["n_channels"] = len(alloc.selected_indices)
        outputs["channels"] = "channels.csv"
        export_allocation_csv(out / "channels.csv", alloc)

    outputs["ensemble_report"] = "ensemble_report.json"
    _write_json(out / "ensemble_report.json", data)


def _run_blockade(cfg: ScenarioConfig) -> dict:
    sec_crystal = cfg.doc["crystal"]
    gamma_l = float(cfg.doc["pulses"]["gamma_l_hz"])
    u2_a, u2_b = cfg.u2_pair
    report = ensemble_blockade_report(
        cfg.crystal, cfg.doc["seed"], u2_a, u2_b, gamma_l,
        n_ensemble=int(sec_crystal.get("n_ensemble", 50)), model=cfg.blockade)
    return {
        "c_qq_hz_lu5": cfg.blockade.c_qq,
        "c_dd_hz_lu3": cfg.blockade.c_dd,
        "kappa": cfg.blockade.blockade_margin,
        "u2_product": u2_a * u2_b,
        "gamma_l_hz": gamma_l,
        "n_ensemble": report.n_ensemble,
        "median_nn_lattice_units": float(np.median(report.nn_distances)),
        "median_shift_hz": report.median_shift_hz,
        "feasible": report.feasible,
        "margin": report.margin,
    }


def _run_pulses(cfg: ScenarioConfig) -> dict:
    p = cfg.pulse_inputs
    budget = pi_pulse_budget(p["carrier_cm"], p["emitter"], p["gamma_l"], p["beam"])
    data = {
        "carrier_cm": p["carrier_cm"],
        "gamma_l_hz": p["gamma_l"],
        "radiative_lifetime_s": p["emitter"].radiative_lifetime,
        "cross_section_cm2": p["beam"].cross_section,
        "intensity_w_cm2": budget.intensity_w_cm2,
        "pulse_energy_j": budget.energy_j,
        "peak_field_v_cm": budget.field_v_cm,
    }
    if p["rei_factor"]:
        i_rei = budget.intensity_w_cm2 * p["rei_factor"]
        data["rei_intensity_factor"] = p["rei_factor"]
        data["rei_intensity_w_cm2"] = i_rei
        data["rei_pulse_energy_j"] = pulse_energy(i_rei, p["beam"].cross_section, p["gamma_l"])
        data["rei_peak_field_v_cm"] = peak_field(i_rei)
    return data


def _export_gate_trajectory(scenario: GateScenario, gate_cfg: dict, path: Path):
    from .gates import scenario_system
    system = scenario_system(scenario)
    sequence = scenario.sequence if scenario.sequence is not None \
        else canonical_blockade_sequence(scenario)
    label = str(gate_cfg.get("trajectory_input", "11"))
    _require(len(label) == 2 and set(label) <= {"0", "1"},
             "gate.trajectory_input must be one of 00, 01, 10, 11")
    assignment = {scenario.control.name: label[0], scenario.target.name: label[1]}
    if scenario.noise.any:
        psi = system.basis_state(assignment)
        traj = propagate_lindblad(system, sequence, np.outer(psi, psi.conj()),
                                  samples_per_segment=24)
    else:
        traj = propagate_unitary(system, sequence, system.basis_state(assignment),
                                 samples_per_segment=24)
    export_trajectory_csv(path, traj)


def _run_sweep_csv(cfg: ScenarioConfig, path: Path, jobs: int):
    import itertools
    grid = cfg.sweep_grid
    keys = sorted(grid)
    points = [dict(zip(keys, combo)) for combo in itertools.product(*(grid[k] for k in keys))]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_point,
                                 itertools.repeat(cfg.gate_cfg), points))
    else:
        rows = run_sweep(lambda **pt: build_gate_scenario(cfg.gate_cfg, **pt), grid)
    metric_cols = ["truth_table_fidelity", "average_fidelity", "infidelity",
                   "leakage", "cz_phase_rad", "status"]
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(keys + metric_cols)
        for row in rows:
            writer.writerow([repr(row[k]) for k in keys]
                            + [repr(row[c]) if isinstance(row.get(c), float) else row.get(c, "")
                               for c in metric_cols])


def emit_plot_data(results_dir, kind: str, out_path) -> None:
    """Convert run outputs into tidy (x, y, series) CSV for plotting.

    Kinds: 'fidelity-vs-delta' (from sweep.csv), 'population-vs-time'
    (from trajectory.csv), 'spectrum' (frequency histogram from
    centers.csv, with a gaussian-quantile FWHM estimate in a leading
    comment line).  An empty result set yields a header-only CSV.
    """
    results = Path(results_dir)
    out_path = Path(out_path)
    if kind == "fidelity-vs-delta":
        rows = _read_csv(results / "sweep.csv")
        xcol = "delta_over_omega" if "delta_over_omega" in (rows[0] if rows else {}) \
            else "delta_shift_rad_s"
        with open(out_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "y", "series"])
            for row in rows:
                if row.get("status") == "ok" and xcol in row:
                    writer.writerow([row[xcol], row["infidelity"], "infidelity"])
    elif kind == "population-vs-time":
        rows = _read_csv(results / "trajectory.csv")
        with open(out_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x", "y", "series"])
            for row in rows:
                for col, val in row.items():
                    if col.startswith("pop_"):
                        writer.writerow([row["time_s"], val, col[4:]])
    elif kind == "spectrum":
        rows = _read_csv(results / "centers.csv")
        freqs = np.array([float(r["frequency_hz"]) for r in rows
                          if r.get("frequency_hz")])
        with open(out_path, "w", newline="") as fh:
            if len(freqs) >= 8:
                fh.write(f"# fwhm_hz={estimate_fwhm(freqs)!r}\n")
            writer = csv.writer(fh)
            writer.writerow(["x", "y", "series"])
            if len(freqs):
                counts, edges = np.histogram(freqs, bins=64)
                mids = (edges[:-1] + edges[1:]) / 2.0
                for x, y in zip(mids, counts):
                    writer.writerow([repr(float(x)), int(y), "frequency"])
    else:
        raise ConfigurationError(
            f"unknown plot kind {kind!r}; choose fidelity-vs-delta, "
            "population-vs-time or spectrum")


def _read_csv(path: Path) -> list[dict]:
    if not path.exists():
        raise ParseError(f"expected result file {path}")
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))
