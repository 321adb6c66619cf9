import json

import pytest

from monopole_index import __version__, cli
from monopole_index import acceptance
from monopole_index.acceptance import CriterionResult
from monopole_index.config import config_from_dict, parse_config, serialize_config
from monopole_index.errors import ConfigError, NumericalIndeterminacyError

MINIMAL = {
    "rank": 1,
    "mode": "compact-model",
    "singularities": [{"position": [0, 0, 0], "weights": [1]}, {"position": [1, 0, 0], "weights": [-1]}],
}

COMPLETE = {
    "rank": 2,
    "mode": "complete-with-boundary",
    "singularities": [
        {"position": [0, 0, 0.5], "weights": [1, -1]},
        {"position": [0.3, -0.2, 0], "weights": [2, 0]},
    ],
    "mass": [1.5, -2.0],
    "boundary_radius": 3.0,
}


def _write(tmp_path, doc, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def _problems(doc):
    with pytest.raises(ConfigError) as info:
        config_from_dict(doc)
    return info.value.problems


def test_minimal_compact_config():
    cfg = parse_config(json.dumps(MINIMAL))
    assert cfg.rank == 1 and len(cfg.singularities) == 2


def test_weights_length_mismatch():
    doc = {**MINIMAL, "singularities": [{"position": [0, 0, 0], "weights": [1, -1]}]}
    assert any(p.startswith("$.singularities[0].weights") for p in _problems(doc))


def test_boundary_radius_too_small():
    doc = {**COMPLETE, "boundary_radius": 0.2}
    assert _problems(doc)


def test_unknown_field_rejected():
    assert "$.colour: unknown field" in _problems({**MINIMAL, "colour": "red"})


def test_all_problems_reported():
    doc = {"rank": 0, "mode": "flat", "singularities": [{"position": [0, 0], "weights": ["x"]}]}
    assert len(_problems(doc)) >= 4


def test_malformed_document():
    with pytest.raises(ConfigError):
        parse_config("{rank: 1")


@pytest.mark.parametrize("doc", [MINIMAL, COMPLETE])
def test_round_trip(doc):
    cfg = config_from_dict(doc)
    again = config_from_dict(serialize_config(cfg))
    assert again == cfg
    assert json.loads(json.dumps(serialize_config(again))) == serialize_config(cfg)


def _run(argv, capsys):
    code = cli.run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_index_ak_positive(tmp_path, capsys):
    doc = {"rank": 1, "mode": "complete-with-boundary",
           "singularities": [{"position": [0, 0, 0], "weights": [1]}], "mass": [1.0], "boundary_radius": 2.0}
    code, out, _ = _run(["index", "--config", _write(tmp_path, doc), "--out", "json"], capsys)
    record = json.loads(out)
    assert code == 0
    assert record["results"]["total"] == 0
    assert record["version"] == __version__
    assert record["inputs"]["chirality"] == "+"


def test_equivariant_charge_two(tmp_path, capsys):
    doc = {"rank": 2, "mode": "compact-model", "singularities": [{"position": [0, 0, 0], "weights": [2, -2]}]}
    code, out, _ = _run(["equivariant", "--config", _write(tmp_path, doc)], capsys)
    assert code == 0
    assert "-2.000000" in out
    code, out, _ = _run(["equivariant", "--config", _write(tmp_path, doc), "--out", "json"], capsys)
    assert json.loads(out)["results"]["+"]["symbolic"] == -2


def test_config_error_exit_code(tmp_path, capsys):
    code, _, err = _run(["index", "--config", _write(tmp_path, {**MINIMAL, "rank": 3})], capsys)
    assert code == 2
    assert "$.singularities[0].weights" in err


def test_missing_config_exit_code(capsys):
    assert _run(["chern"], capsys)[0] == 2


def test_indeterminacy_exit_code(monkeypatch, capsys):
    def boom(args):
        raise NumericalIndeterminacyError("undecided", {"sines": [1e-4]})

    monkeypatch.setitem(cli.HANDLERS, "radial-index", boom)
    code, _, err = _run(["radial-index", "--k", "1", "--a", "1"], capsys)
    assert code == 3
    assert "sines" in err


def test_chern_csv(tmp_path, capsys):
    code, out, _ = _run(["chern", "--config", _write(tmp_path, COMPLETE), "--out", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "command,key,value"
    assert 'chern,results.outward_degrees,"[3, -1]"' in lines


def test_radial_index_cli(capsys):
    code, out, _ = _run(["radial-index", "--k", "-1", "--a", "2", "--qmax", "2", "--out", "json"], capsys)
    result = json.loads(out)["results"][0]
    assert code == 0
    assert result["formula"] == result["mode_sum"] == -1


def test_spectrum_cli(capsys):
    code, out, _ = _run(["spectrum", "--k", "2", "--qmax", "3", "--out", "json"], capsys)
    assert code == 0
    assert json.loads(out)["results"]["2"]["zero_modes"] == [2, 0]


def test_deterministic_output(tmp_path, capsys):
    argv = ["index", "--config", _write(tmp_path, COMPLETE), "--out", "json"]
    first = _run(argv, capsys)[1]
    second = _run(argv, capsys)[1]
    assert first == second


def test_hopf_verify_deterministic(capsys):
    argv = ["hopf-verify", "--samples", "2", "--seed", "3", "--out", "json"]
    first = _run(argv, capsys)[1]
    second = _run(argv, capsys)[1]
    assert first == second
    assert json.loads(first)["inputs"]["seed"] == 3


def test_selftest_reports_each_criterion(monkeypatch, capsys):
    fake = [CriterionResult(1, "a", True, "", 0.0, 1.0), CriterionResult(2, "b", False, "", 0.0, 1.0)]
    monkeypatch.setattr(acceptance, "run_all", lambda: fake)
    code, out, _ = _run(["selftest", "--out", "json"], capsys)
    checks = json.loads(out)["checks"]
    assert checks == {"criterion 1": True, "criterion 2": False}
    assert code == 1
