"""The bundled case studies run green, and the fixtures export cleanly."""
from __future__ import annotations

import pytest

from hohfeld.errors import NameResolutionError
from hohfeld.modelio import (
    load_action_model_file,
    load_model_file,
)
import hohfeld.scenarios as scenarios
from hohfeld.scenarios import (
    BUNDLES,
    FormulaCheck,
    ScenarioBundle,
    export_fixture_files,
    run_scenario,
)


@pytest.mark.parametrize("name", sorted(BUNDLES))
def test_bundle_runs_green(name):
    report = run_scenario(BUNDLES[name]())
    failing = [r for r in report.results if not r.passed]
    assert report.passed, failing
    assert report.scenario == name


def test_parking_bundle_shape():
    bundle = scenarios.parking_bundle()
    assert len(bundle.checks) == 18
    names = [c.name for c in bundle.checks]
    assert len(names) == len(set(names))
    assert set(bundle.action_models) == {"John", "Mary"}


def test_contract_bundle_shape():
    bundle = scenarios.contract_bundle()
    assert len(bundle.checks) == 12
    names = [c.name for c in bundle.checks]
    assert len(names) == len(set(names))
    assert set(bundle.action_models) == {"Contract", "ContractV"}


def test_report_records_failures():
    base = scenarios.parking_bundle()
    wrong = FormulaCheck("deliberately_wrong", "park", "w1", "f", True)
    bundle = ScenarioBundle(
        name="broken",
        models=base.models,
        action_models=base.action_models,
        checks=(wrong,),
    )
    report = run_scenario(bundle)
    assert not report.passed
    (result,) = report.results
    assert result.name == "deliberately_wrong"
    assert result.expected is True
    assert result.actual is False


def test_unknown_model_reference_raises():
    base = scenarios.parking_bundle()
    dangling = FormulaCheck("dangling", "nosuch", "w1", "f", False)
    bundle = ScenarioBundle(
        name="broken", models=base.models,
        action_models=base.action_models, checks=(dangling,),
    )
    with pytest.raises(NameResolutionError):
        run_scenario(bundle)


def test_fixture_export_round_trips(tmp_path):
    paths = export_fixture_files(tmp_path)
    assert sorted(p.name for p in paths) == [
        "contract_actions.json",
        "contract_actions_v.json",
        "contract_model.json",
        "contract_model_v.json",
        "john_actions.json",
        "mary_actions.json",
        "parking_model.json",
    ]
    assert load_model_file(tmp_path / "parking_model.json") == scenarios.parking_model()
    assert load_model_file(tmp_path / "contract_model.json") == scenarios.contract_model()
    assert (load_model_file(tmp_path / "contract_model_v.json")
            == scenarios.contract_model_with_violation())
    assert (load_action_model_file(tmp_path / "john_actions.json")
            == scenarios.john_action_model())
    assert (load_action_model_file(tmp_path / "mary_actions.json")
            == scenarios.mary_action_model())
    assert (load_action_model_file(tmp_path / "contract_actions.json")
            == scenarios.contract_action_model())
    assert (load_action_model_file(tmp_path / "contract_actions_v.json")
            == scenarios.contract_action_model_with_violation())


def test_fixture_export_is_deterministic(tmp_path):
    first = tmp_path / "one"
    second = tmp_path / "two"
    for target in (first, second):
        export_fixture_files(target)
    for path in sorted(first.iterdir()):
        assert path.read_text() == (second / path.name).read_text()
