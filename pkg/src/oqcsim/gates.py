"""Two-qubit gate protocols: construction, execution and scoring.

A GateScenario holds two role-labeled qubits (levels |0>, |1>, the
strongly interacting auxiliary |1'>, optionally a reservoir |g>), the
conditional shift delta_shift applied to the joint auxiliary state
|1'>|1'>, the drive strength, and noise switches.  The reference
protocol is the canonical blockade sequence

    pi on control |1> -> |1'>,  2pi on target |1> -> |1'>,  pi back,

whose controlled-phase core composes to CNOT with single-qubit framing.
Arbitrary numbered sequences are accepted as well.

Scoring conventions: the truth table collects output populations for
the four computational inputs; the average gate fidelity is the
standard two-qubit formula on the computational subspace, evaluated
against the target gate dressed with the single-qubit phases the
protocol actually produced (virtual-Z framing).  The controlled phase
arg(U11) + arg(U00) - arg(U01) - arg(U10) is reported so entangling
power can be checked directly; population left outside the
computational subspace is reported as leakage, never renormalized away.

Angular units: delta_shift and the Rabi frequency are rad/s (multiply
shifts from the interactions module, which are in Hz, by 2 pi).
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Mapping, Sequence

import numpy as np

from .dynamics import (LevelSystem, QubitLevels, ShiftCoupling,
                       sequence_superoperator, sequence_unitary)
from .errors import OqcsimError, ValidationError
from .interactions import BlockadeModel, DEFAULT_MODEL, dipole_shift
from .paircenter import PairParams, pair_eigensystem_exact, pair_eigensystem_perturbative
from .pulses import PI_AREA, TWO_PI_AREA, PulseSequence, PulseSpec

REQUIRED_ROLES = ("0", "1", "1p")

COMPUTATIONAL = (("0", "0"), ("0", "1"), ("1", "0"), ("1", "1"))

_PHASE_FLOOR = 1e-12   # diagonal amplitude below which phases are meaningless


@dataclass(frozen=True)
class NoiseFlags:
    lifetimes: bool = False
    dephasing: bool = False

    @property
    def any(self) -> bool:
        return self.lifetimes or self.dephasing


@dataclass(frozen=True)
class QubitScheme:
    """Role-labeled level scheme of one logical qubit.

    level_order lists the roles present, first entry = the scheme's
    ground level (default decay destination).  Lifetimes (s) are only
    applied when the scenario's lifetime noise switch is on.
    """

    name: str
    level_order: tuple[str, ...] = ("1p", "0", "1")
    detunings: Mapping[str, float] = field(default_factory=dict)
    lifetimes: Mapping[str, float] = field(default_factory=dict)
    decay_to: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self):
        missing = [r for r in REQUIRED_ROLES if r not in self.level_order]
        if missing:
            raise ValidationError(f"qubit {self.name!r} is missing role levels {missing}")
        for mapping in (self.detunings, self.lifetimes, self.decay_to):
            for lv in mapping:
                if lv not in self.level_order:
                    raise ValidationError(f"qubit {self.name!r} has no level {lv!r}")
        for tau in self.lifetimes.values():
            if tau <= 0:
                raise ValidationError("lifetimes must be > 0")


@dataclass(frozen=True)
class GateScenario:
    """Everything needed to execute and score one two-qubit protocol."""

    control: QubitScheme
    target: QubitScheme
    rabi: float                          # rad/s
    delta_shift: float = 0.0             # rad/s on |1'>|1'>
    gamma_h: float = 0.0                 # 1/s, used when noise.dephasing
    gamma_l: float = 1e9                 # 1/s, pulse bookkeeping
    noise: NoiseFlags = NoiseFlags()
    sequence: PulseSequence | None = None
    gate_target: str = "cz"              # "cz" | "identity"

    def __post_init__(self):
        if self.control.name == self.target.name:
            raise ValidationError("control and target need distinct names")
        if self.rabi <= 0:
            raise ValidationError("Rabi frequency must be > 0")
        if self.gate_target not in ("cz", "identity"):
            raise ValidationError(f"unknown gate target {self.gate_target!r}")

    def qubit_levels(self) -> dict[str, tuple[str, ...]]:
        return {self.control.name: self.control.level_order,
                self.target.name: self.target.level_order}


def scenario_system(scenario: GateScenario) -> LevelSystem:
    """Materialize the scenario as a dynamics register."""
    qubits = []
    for qs in (scenario.control, scenario.target):
        decay = ({lv: 1.0 / tau for lv, tau in qs.lifetimes.items()}
                 if scenario.noise.lifetimes else {})
        qubits.append(QubitLevels(
            name=qs.name,
            levels=qs.level_order,
            detunings=dict(qs.detunings),
            decay_rates=decay,
            decay_to=dict(qs.decay_to),
            dephasing=scenario.gamma_h if scenario.noise.dephasing else 0.0,
        ))
    couplings = []
    if scenario.delta_shift != 0.0:
        couplings.append(ShiftCoupling(
            {scenario.control.name: "1p", scenario.target.name: "1p"},
            scenario.delta_shift))
    return LevelSystem(qubits, couplings)


def canonical_blockade_sequence(scenario: GateScenario) -> PulseSequence:
    """The three-segment blockade controlled-phase sequence.

    pi on the control qubit's |1> -> |1'>, 2pi on the target's, pi back.
    With the |1'>|1'> shift large against the drive the 2pi pulse is
    blocked whenever the control sits in |1'>, leaving the controlled
    phase that makes the core entangling.
    """
    for qs in (scenario.control, scenario.target):
        if "1p" not in qs.level_order:
            raise ValidationError(f"qubit {qs.name!r} has no auxiliary level")

    def pulse(qubit, area):
        return PulseSpec(target=(qubit, ("1", "1p")), pulse_area=area,
                         spectral_width=scenario.gamma_l, rabi_frequency=scenario.rabi)

    return PulseSequence((
        (1, pulse(scenario.control.name, PI_AREA)),
        (2, pulse(scenario.target.name, TWO_PI_AREA)),
        (3, pulse(scenario.control.name, PI_AREA)),
    ))


@dataclass(frozen=True)
class GateReport:
    """Truth table, fidelities and diagnostics of one protocol run."""

    truth_table: tuple[tuple[float, ...], ...]   # [input][output], computational order
    truth_table_fidelity: float
    average_fidelity: float
    leakage: float
    cz_phase: float                              # rad, wrapped to (-pi, pi]
    local_phases: tuple[float, float]            # extracted phi_01, phi_10
    noisy: bool
    gate_target: str

    def to_dict(self) -> dict:
        return {
            "truth_table": [list(row) for row in self.truth_table],
            "truth_table_fidelity": self.truth_table_fidelity,
            "average_fidelity": self.average_fidelity,
            "leakage": self.leakage,
            "cz_phase_rad": self.cz_phase,
            "local_phases_rad": list(self.local_phases),
            "noisy": self.noisy,
            "gate_target": self.gate_target,
        }


def _wrap(angle: float) -> float:
    return (angle + math.pi) % (2.0 * math.pi) - math.pi


def _extract_phases(m_diag: np.ndarray) -> tuple[float, float, float, float]:
    """Global phase, single-qubit framing phases and controlled phase.

    Extracted from the diagonal of the computational-subspace map; all
    zero when any diagonal amplitude is too small to carry a phase.
    """
    if np.min(np.abs(m_diag)) < _PHASE_FLOOR:
        return 0.0, 0.0, 0.0, 0.0
    ref = m_diag[0]
    phi00 = cmath.phase(ref)
    phi01 = cmath.phase(m_diag[1] / ref)
    phi10 = cmath.phase(m_diag[2] / ref)
    cz = _wrap(cmath.phase(m_diag[3] / ref) - phi01 - phi10)
    return phi00, phi01, phi10, cz


def _dressed_target(gate_target: str, phi00: float, phi01: float, phi10: float) -> np.ndarray:
    sign = -1.0 if gate_target == "cz" else 1.0
    return np.exp(1j * phi00) * np.diag([
        1.0,
        np.exp(1j * phi01),
        np.exp(1j * phi10),
        sign * np.exp(1j * (phi01 + phi10)),
    ]).astype(complex)


def run_protocol(scenario: GateScenario) -> GateReport:
    """Execute a scenario over all four computational inputs and score it.

    Closed-system scenarios propagate state vectors and score the
    restricted unitary; with any noise switch on, the full channel is
    composed from segment superoperators so decay and dephasing enter
    the average-fidelity sum exactly.
    """
    system = scenario_system(scenario)
    sequence = scenario.sequence if scenario.sequence is not None \
        else canonical_blockade_sequence(scenario)
    sequence.validate_targets(scenario.qubit_levels())

    comp = [system.basis_index({scenario.control.name: c, scenario.target.name: t})
            for c, t in COMPUTATIONAL]
    dim = system.dimension

    if not scenario.noise.any:
        u = sequence_unitary(system, sequence)
        m = u[np.ix_(comp, comp)]
        truth = np.abs(m.T) ** 2            # [input][output]
        phi00, phi01, phi10, cz = _extract_phases(np.diag(m))
        target = _dressed_target(scenario.gate_target, phi00, phi01, phi10)
        f_pro = abs(np.trace(target.conj().T @ m)) ** 2 / 16.0
        noisy = False
    else:
        s = sequence_superoperator(system, sequence)
        blocks = {}
        for j in range(4):
            for k in range(4):
                vec = np.zeros(dim * dim, dtype=complex)
                vec[comp[j] * dim + comp[k]] = 1.0
                out = (s @ vec).reshape(dim, dim)
                blocks[(j, k)] = out
        truth = np.array([[np.real(blocks[(k, k)][comp[j], comp[j]]) for j in range(4)]
                          for k in range(4)])
        # phases from the coherences against the |00> reference column
        m_diag = np.array([blocks[(k, 0)][comp[k], comp[0]] for k in range(4)])
        phi00, phi01, phi10, cz = _extract_phases(m_diag)
        target = _dressed_target(scenario.gate_target, phi00, phi01, phi10)
        f_pro = 0.0
        for j in range(4):
            for k in range(4):
                f_pro += np.real(
                    target[:, j].conj() @ blocks[(j, k)][np.ix_(comp, comp)] @ target[:, k])
        f_pro /= 16.0
        noisy = True

    avg_fidelity = (4.0 * f_pro + 1.0) / 5.0
    row_sums = truth.sum(axis=1)
    leakage = float(np.max(1.0 - row_sums))
    return GateReport(
        truth_table=tuple(tuple(float(x) for x in row) for row in truth),
        truth_table_fidelity=float(np.mean(np.diag(truth))),
        average_fidelity=float(min(max(avg_fidelity, 0.0), 1.0)),
        leakage=leakage,
        cz_phase=float(cz),
        local_phases=(float(phi01), float(phi10)),
        noisy=noisy,
        gate_target=scenario.gate_target,
    )


def sweep(make_scenario: Callable[..., GateScenario],
          grid: Mapping[str, Sequence], skip: int = 0) -> list[dict]:
    """Run a protocol over the cartesian product of a parameter grid.

    Parameters
    ----------
    make_scenario : callable
        Keyword factory: called with one value per grid key.
    grid : mapping
        Parameter name -> finite sequence of values.
    skip : int
        Number of leading grid points to skip; the ordering is
        deterministic (keys sorted, values in given order), so a partial
        sweep can be resumed row by row.

    Returns
    -------
    list of dict
        One row per executed grid point: the parameters plus the report
        fields, or a status message when that point failed.
    """
    keys = sorted(grid)
    rows = []
    for combo in itertools.islice(itertools.product(*(grid[k] for k in keys)), skip, None):
        point = dict(zip(keys, combo))
        row = {**point}
        try:
            report = run_protocol(make_scenario(**point))
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
        rows.append(row)
    return rows


def pair_center_scenario(params_control: PairParams, params_target: PairParams,
                         distance: float, model: BlockadeModel = DEFAULT_MODEL, *,
                         rabi: float, tau_single: float | None = None,
                         gamma_h: float = 0.0, noise: NoiseFlags = NoiseFlags(),
                         gamma_l: float = 1e9, mode: str = "perturbative",
                         ) -> GateScenario:
    """Build a two-qubit scenario from two pair centers a distance apart.

    Each logical qubit lives on one pair center: |0> is the dark state,
    |1> the pair ground state and |1'> the superradiant bright state.
    The conditional shift is the bright-bright exchange dipole shift at
    the given separation (lattice units), and, when a single-center
    lifetime is supplied, the dark/bright radiative lifetimes follow
    from the brightness suppression (a symmetric pair's dark state does
    not decay radiatively at all).
    """
    if params_control.exchange == 0.0 or params_target.exchange == 0.0:
        raise ValidationError("pair centers need nonzero exchange splitting")
    solver = pair_eigensystem_perturbative if mode == "perturbative" else pair_eigensystem_exact
    states = {"control": solver(params_control), "target": solver(params_target)}

    shift_hz = dipole_shift(states["control"].f_bright, states["target"].f_bright,
                            distance, model)

    def scheme(name: str, params: PairParams) -> QubitScheme:
        st = states[name]
        lifetimes = {}
        if tau_single is not None:
            lifetimes["1p"] = tau_single * params.single_oscillator_strength / st.f_bright
            if st.f_dark > 0.0:
                lifetimes["0"] = tau_single * params.single_oscillator_strength / st.f_dark
        return QubitScheme(
            name=name,
            level_order=("1", "0", "1p"),    # pair ground collects decay
            lifetimes=lifetimes,
        )

    return GateScenario(
        control=scheme("control", params_control),
        target=scheme("target", params_target),
        rabi=rabi,
        delta_shift=2.0 * math.pi * shift_hz,
        gamma_h=gamma_h,
        gamma_l=gamma_l,
        noise=noise,
    )


def swap_roles(scenario: GateScenario) -> GateScenario:
    """Exchange control and target (keeps qubit names with their schemes)."""
    return replace(scenario,
                   control=replace(scenario.target, name=scenario.control.name),
                   target=replace(scenario.control, name=scenario.target.name),
                   sequence=None)
