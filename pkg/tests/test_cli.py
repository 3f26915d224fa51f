import filecmp
import json
from importlib import resources

import pytest

from oqcsim.cli import main
from oqcsim.errors import ParseError, ValidationError
from oqcsim.runner import emit_plot_data, run, validate

CONFIG_DIR = resources.files("oqcsim.configs")
BUNDLED = ["pulse_budget_ns_emitter", "nd_caf2_ensemble",
           "blockade_cz_sweep", "pair_center_cnot"]


def config_path(name: str) -> str:
    return str(CONFIG_DIR / f"{name}.json")


@pytest.mark.parametrize("name", BUNDLED)
def test_validate_accepts_bundled_configs(name):
    validate(config_path(name))
    assert main(["validate", "--config", config_path(name)]) == 0


def test_run_pulse_budget_outputs(tmp_path):
    run(config_path("pulse_budget_ns_emitter"), out_dir=tmp_path)
    report = json.loads((tmp_path / "pulse_report.json").read_text())
    assert report["intensity_w_cm2"] == pytest.approx(100.0, rel=1e-12)
    assert report["pulse_energy_j"] == pytest.approx(1e-14, rel=1e-12)
    assert report["rei_pulse_energy_j"] == pytest.approx(1e-10, rel=1e-12)
    assert 2.4e4 <= report["rei_peak_field_v_cm"] <= 3.3e4


def test_run_nd_ensemble_outputs(tmp_path):
    run(config_path("nd_caf2_ensemble"), out_dir=tmp_path)
    ens = json.loads((tmp_path / "ensemble_report.json").read_text())
    assert ens["r0_lattice_units"] == pytest.approx(100.0, rel=1e-9)
    assert ens["ensemble_radius_lattice_units"] == pytest.approx(17.0998, rel=1e-4)
    blockade = json.loads((tmp_path / "blockade_report.json").read_text())
    assert blockade["feasible"] is True
    assert blockade["median_shift_hz"] >= 3 * blockade["gamma_l_hz"]
    assert (tmp_path / "centers.csv").exists()
    assert (tmp_path / "channels.csv").exists()


def test_run_gate_sweep_outputs(tmp_path):
    run(config_path("blockade_cz_sweep"), out_dir=tmp_path)
    gate = json.loads((tmp_path / "gate_report.json").read_text())
    assert gate["average_fidelity"] > 0.995
    sweep_lines = (tmp_path / "sweep.csv").read_text().splitlines()
    assert sweep_lines[0].startswith("delta_over_omega")
    assert len(sweep_lines) == 9      # header + 8 grid points
    assert (tmp_path / "trajectory.csv").exists()


def test_cli_exit_codes(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("{}")
    assert main(["validate", "--config", str(empty)]) == 2

    bad_physics = tmp_path / "bad.json"
    bad_physics.write_text(json.dumps({
        "seed": 1,
        "crystal": {"concentration": 0.01, "gamma_inh_hz": 1e6, "gamma_h_hz": 1e9,
                    "box_size": 10},
        "pulses": {"carrier_cm": 20000.0, "radiative_lifetime_s": 1e-9,
                   "gamma_l_hz": 1e9},
    }))
    assert main(["validate", "--config", str(bad_physics)]) == 2

    missing_seed = tmp_path / "noseed.json"
    missing_seed.write_text(json.dumps({
        "crystal": {"concentration": 0.01, "gamma_inh_hz": 1e12, "gamma_h_hz": 1e6,
                    "box_size": 10},
        "pulses": {"carrier_cm": 20000.0, "radiative_lifetime_s": 1e-9,
                   "gamma_l_hz": 1e9},
    }))
    assert main(["validate", "--config", str(missing_seed)]) == 2

    unknown_species = tmp_path / "spec.json"
    unknown_species.write_text(json.dumps({"species": {"use": "Xx7+"}}))
    assert main(["validate", "--config", str(unknown_species)]) == 2

    crystal_without_pulses = tmp_path / "nolaser.json"
    crystal_without_pulses.write_text(json.dumps({
        "seed": 1,
        "crystal": {"concentration": 0.01, "gamma_inh_hz": 1e12, "gamma_h_hz": 1e6,
                    "box_size": 10},
    }))
    assert main(["validate", "--config", str(crystal_without_pulses)]) == 2

    domain_error = tmp_path / "dom.json"
    domain_error.write_text(json.dumps({
        "pulses": {"carrier_cm": 20000.0, "radiative_lifetime_s": -1.0,
                   "gamma_l_hz": 1e9},
    }))
    assert main(["validate", "--config", str(domain_error)]) == 3


def test_validate_rejects_exactly_what_run_rejects(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"gate": {"type": "canonical_cz", "rabi_rad_s": -1.0}}))
    with pytest.raises((ParseError, ValidationError)):
        validate(bad)
    with pytest.raises((ParseError, ValidationError)):
        run(bad, out_dir=tmp_path / "out")


def test_determinism_byte_identical(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(config_path("nd_caf2_ensemble"), out_dir=a)
    run(config_path("nd_caf2_ensemble"), out_dir=b)
    files = {p.name for p in a.iterdir()} - {"manifest.json"}   # manifest has wall clock
    assert files
    for name in sorted(files):
        assert filecmp.cmp(a / name, b / name, shallow=False), name


def test_seed_override_changes_samples(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    run(config_path("nd_caf2_ensemble"), out_dir=a)
    run(config_path("nd_caf2_ensemble"), out_dir=b, seed=1234)
    assert not filecmp.cmp(a / "centers.csv", b / "centers.csv", shallow=False)
    man = json.loads((b / "manifest.json").read_text())
    assert man["seed"] == 1234


def test_cli_run_and_species_and_pulse_calc(tmp_path, capsys):
    assert main(["run", "--config", config_path("pulse_budget_ns_emitter"),
                 "--out", str(tmp_path / "out")]) == 0
    assert json.loads(capsys.readouterr().out)["outputs"] == {
        "pulse_report": "pulse_report.json"}
    assert main(["run", "--config", config_path("pulse_budget_ns_emitter"),
                 "--out", str(tmp_path / "out2"), "--format", "csv"]) == 0
    assert capsys.readouterr().out.strip() == "pulse_report,pulse_report.json"
    assert main(["species", "list"]) == 0
    out = capsys.readouterr().out
    assert "Tm3+" in out and "Nd3+" in out
    assert main(["pulse-calc", "--carrier-cm", "20000", "--lifetime-ns", "1.5",
                 "--gamma-l", "1e9", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["intensity_w_cm2"] == pytest.approx(100.0, rel=1e-12)


def test_species_validate_cli(capsys):
    assert main(["species", "validate", "Tm3+"]) == 0
    assert "pass" in capsys.readouterr().out


def test_emit_plot_kinds(tmp_path):
    results = tmp_path / "res"
    run(config_path("blockade_cz_sweep"), out_dir=results)
    fvd = tmp_path / "fvd.csv"
    emit_plot_data(results, "fidelity-vs-delta", fvd)
    lines = fvd.read_text().splitlines()
    assert lines[0] == "x,y,series"
    assert len(lines) == 9

    pvt = tmp_path / "pvt.csv"
    emit_plot_data(results, "population-vs-time", pvt)
    assert pvt.read_text().splitlines()[0] == "x,y,series"

    nd = tmp_path / "nd"
    run(config_path("nd_caf2_ensemble"), out_dir=nd)
    spec_csv = tmp_path / "spec.csv"
    emit_plot_data(nd, "spectrum", spec_csv)
    first = spec_csv.read_text().splitlines()[0]
    assert first.startswith("# fwhm_hz=")
    fwhm = float(first.split("=")[1])
    assert fwhm == pytest.approx(1e12, rel=0.15)

    assert main(["emit-plot", "--kind", "spectrum", "--results", str(nd),
                 "--out", str(tmp_path / "s2.csv")]) == 0


def test_emit_plot_empty_results_header_only(tmp_path):
    results = tmp_path / "res"
    results.mkdir()
    (results / "sweep.csv").write_text(
        "delta_over_omega,truth_table_fidelity,average_fidelity,infidelity,"
        "leakage,cz_phase_rad,status\n")
    out = tmp_path / "empty.csv"
    emit_plot_data(results, "fidelity-vs-delta", out)
    assert out.read_text().splitlines() == ["x,y,series"]


def test_emit_plot_unknown_kind(tmp_path):
    with pytest.raises(SystemExit):
        main(["emit-plot", "--kind", "mystery", "--results", str(tmp_path),
              "--out", str(tmp_path / "x.csv")])


def test_sweep_jobs_parallel_matches_serial(tmp_path):
    serial, parallel = tmp_path / "s", tmp_path / "p"
    run(config_path("blockade_cz_sweep"), out_dir=serial, jobs=1)
    run(config_path("blockade_cz_sweep"), out_dir=parallel, jobs=2)
    assert (serial / "sweep.csv").read_text() == (parallel / "sweep.csv").read_text()
