"""JSON formats: loading, closure flags, partitions, dumps, round-trips."""
from __future__ import annotations

import json

import pytest

from hohfeld.errors import ModelFormatError
from hohfeld.modelio import (
    action_model_from_dict,
    action_model_to_dict,
    dumps_action_model,
    dumps_model,
    load_action_model_file,
    load_model_file,
    model_from_dict,
    model_to_dict,
)
from hohfeld.parser import parse
import hohfeld.scenarios as scenarios

PARK_DICT = {
    "states": ["w1", "w2", "w3", "w4"],
    "agents": ["i", "c"],
    "pref": {"i->c": {
        "edges": [["w1", "w2"], ["w1", "w4"], ["w3", "w4"],
                  ["w4", "w3"], ["w2", "w3"], ["w3", "w2"]],
        "closed": False,
    }},
    "eq": {
        "i": {"blocks": [["w1"], ["w2"], ["w3"], ["w4"]]},
        "c": {"blocks": [["w1", "w2", "w3", "w4"]]},
    },
    "val": {"d": ["w2", "w3"], "p": ["w1", "w2"], "f": []},
}

JOHN_DICT = {
    "name": "John",
    "owner": "john",
    "actions": ["a1", "a2"],
    "rel": {"i->c": {"edges": [], "closed": False}},
    "pre": {"a1": "!d & p", "a2": "d | !p"},
    "post": {"a1": {"f": "true"}, "a2": {"f": "false"}},
}


def test_model_file_reproduces_bundled_fixture():
    assert model_from_dict(PARK_DICT) == scenarios.parking_model()


def test_action_model_file_reproduces_bundled_fixture():
    assert action_model_from_dict(JOHN_DICT) == scenarios.john_action_model()


def test_loader_applies_closure_unless_marked_closed():
    open_rel = model_from_dict({
        "states": ["w1", "w2", "w3"], "agents": ["i"],
        "pref": {"i->i": {"edges": [["w1", "w2"], ["w2", "w3"]]}},
        "eq": {}, "val": {},
    })
    assert ("w1", "w3") in open_rel.pref[("i", "i")]
    assert ("w1", "w1") in open_rel.pref[("i", "i")]

    closed_rel = model_from_dict({
        "states": ["w1", "w2", "w3"], "agents": ["i"],
        "pref": {"i->i": {"edges": [["w1", "w2"], ["w2", "w3"]], "closed": True}},
        "eq": {}, "val": {},
    })
    assert ("w1", "w3") not in closed_rel.pref[("i", "i")]


@pytest.mark.parametrize("mutate, message_part", [
    (lambda d: d.update(states=[]), "nonempty"),
    (lambda d: d.update(states="w1"), "list"),
    (lambda d: d["pref"].update({"i-c": {"edges": []}}), "i->j"),
    (lambda d: d["pref"].update({"x->c": {"edges": []}}), "unknown agent"),
    (lambda d: d["pref"]["i->c"].update(edges=[["w1", "zz"]]), "unknown id"),
    (lambda d: d["eq"].update({"x": {"blocks": []}}), "unknown agent"),
    (lambda d: d["eq"]["i"].update(blocks=[["w1"], ["w1", "w2"], ["w3"], ["w4"]]), "overlap"),
    (lambda d: d["eq"]["i"].update(blocks=[["w1"]]), "cover"),
    (lambda d: d["val"].update({"p": ["zz"]}), "unknown state"),
])
def test_model_format_errors(mutate, message_part):
    data = json.loads(json.dumps(PARK_DICT))
    mutate(data)
    with pytest.raises(ModelFormatError) as err:
        model_from_dict(data)
    assert message_part in str(err.value)


@pytest.mark.parametrize("mutate, message_part", [
    (lambda d: d.update(actions=[]), "nonempty"),
    (lambda d: d.update(actions=["a1", "a*2"]), "reserved"),
    (lambda d: d["pre"].pop("a1"), "no precondition"),
    (lambda d: d["pre"].update({"a1": "!d &"}), "pre a1"),
    (lambda d: d["pre"].update({"zz": "true"}), "unknown action"),
    (lambda d: d["post"].update({"zz": {}}), "unknown action"),
])
def test_action_model_format_errors(mutate, message_part):
    data = json.loads(json.dumps(JOHN_DICT))
    mutate(data)
    with pytest.raises(ModelFormatError) as err:
        action_model_from_dict(data)
    assert message_part in str(err.value)


def test_model_dump_load_round_trip():
    m = scenarios.parking_model()
    assert model_from_dict(json.loads(dumps_model(m))) == m


def test_action_model_dump_load_round_trip():
    a = scenarios.contract_action_model()
    assert action_model_from_dict(json.loads(dumps_action_model(a))) == a


def test_dumps_are_deterministic():
    m = scenarios.contract_model()
    assert dumps_model(m) == dumps_model(m)
    rebuilt = model_from_dict(json.loads(dumps_model(m)))
    assert dumps_model(rebuilt) == dumps_model(m)


def test_dumped_relations_are_closed():
    data = json.loads(dumps_model(scenarios.parking_model()))
    assert data["pref"]["i->c"]["closed"] is True


def test_file_loading(tmp_path):
    model_path = tmp_path / "m.json"
    model_path.write_text(dumps_model(scenarios.parking_model()))
    assert load_model_file(model_path) == scenarios.parking_model()

    act_path = tmp_path / "a.json"
    act_path.write_text(dumps_action_model(scenarios.john_action_model()))
    assert load_action_model_file(act_path) == scenarios.john_action_model()

    with pytest.raises(ModelFormatError):
        load_model_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ModelFormatError):
        load_model_file(bad)


def test_updated_model_states_reload():
    # states of an update contain '*'; its dump must load back
    from hohfeld.semantics import product
    up = product(scenarios.parking_model(), scenarios.john_action_model()).model
    assert model_from_dict(json.loads(dumps_model(up))) == up


def test_formula_strings_in_dumps_reparse():
    data = action_model_to_dict(scenarios.contract_action_model())
    for text in data["pre"].values():
        parse(text)
