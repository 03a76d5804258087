"""Power, immunity, liability, and permissibility verdicts."""
from __future__ import annotations

import random

import pytest

from hohfeld.actions import ActionModelEnv, make_action_model
from hohfeld.errors import NameResolutionError
from hohfeld.generators import (
    GeneratorConfig,
    random_action_model,
    random_model,
    random_static_formula,
)
from hohfeld.parser import parse
from hohfeld.positions import (
    global_immunity,
    global_power,
    liability,
    local_immunity,
    local_power,
    no_power,
    permissible,
)
import hohfeld.scenarios as scenarios


# -- global scope on the contract scenario -----------------------------------

EXECUTABLE_BY_STATE = {
    "w1": ("a1",),
    "w2": ("a2",),
    "w3": ("a2",),
    "w4": ("a3",),
}


@pytest.mark.parametrize("state, expected", sorted(EXECUTABLE_BY_STATE.items()))
def test_global_power_witnesses(contract, signing, state, expected):
    verdict = global_power(contract, state, signing)
    assert verdict.kind == "power"
    assert verdict.scope == "global"
    assert verdict.holds is True
    assert verdict.witnesses == expected


@pytest.mark.parametrize("state", sorted(EXECUTABLE_BY_STATE))
def test_global_immunity_defeated_everywhere(contract, signing, state):
    verdict = global_immunity(contract, state, signing)
    assert verdict.kind == "immunity"
    assert verdict.holds is False
    assert verdict.witnesses == EXECUTABLE_BY_STATE[state]


def test_liability_and_no_power_restate_the_global_pair(contract, signing):
    for state in sorted(contract.states):
        power = global_power(contract, state, signing)
        liab = liability(contract, state, signing)
        assert (liab.kind, liab.scope) == ("liability", "global")
        assert liab.holds == power.holds
        assert liab.witnesses == power.witnesses
        disab = no_power(contract, state, signing)
        assert (disab.kind, disab.scope) == ("noPower", "global")
        assert disab.holds == (not power.holds)
        assert disab.witnesses == power.witnesses


def test_global_immunity_holds_when_nothing_executable(park):
    blocked = make_action_model(
        name="Blocked", owner="nobody", actions=["e"],
        rel={}, pre={"e": parse("false")}, post={},
    )
    verdict = global_immunity(park, "w1", blocked)
    assert verdict.holds is True
    assert verdict.witnesses == ()
    assert global_power(park, "w1", blocked).holds is False


# -- local scope ---------------------------------------------------------------

def test_local_power_over_repayment_duty(contract, signing):
    position = parse("O i k (f / true)")
    for state, expected in sorted(EXECUTABLE_BY_STATE.items()):
        verdict = local_power(contract, state, signing, position)
        assert verdict.scope == "local"
        assert verdict.current_truth is False
        assert verdict.holds is True
        assert verdict.witnesses == expected


def test_local_power_over_payment_duty_in_parking(park, john):
    position = parse("O i c (f / true)")
    at_w1 = local_power(park, "w1", john, position)
    assert at_w1.holds is True
    assert at_w1.witnesses == ("a1",)
    assert at_w1.current_truth is False
    # compliant states can only trigger the waiving action, which changes nothing
    at_w2 = local_power(park, "w2", john, position)
    assert at_w2.holds is False
    assert at_w2.witnesses == ()


def test_local_immunity_over_display_duty(park, john):
    position = parse("O i c (do i d / true)")
    verdict = local_immunity(park, "w1", john, position)
    assert verdict.holds is True
    assert verdict.witnesses == ()
    assert verdict.current_truth is False


def test_local_power_and_immunity_are_complements(contract, signing):
    position = parse("O j i (do j p / true)")
    for state in sorted(contract.states):
        power = local_power(contract, state, signing, position)
        immunity = local_immunity(contract, state, signing, position)
        assert power.holds == (not immunity.holds)
        assert power.witnesses == immunity.witnesses
        assert power.current_truth == immunity.current_truth


# -- permissibility --------------------------------------------------------------

def test_no_signing_action_is_permissible():
    model = scenarios.contract_model_with_violation()
    act = scenarios.contract_action_model_with_violation()
    for state in sorted(model.states):
        for action in sorted(act.actions):
            assert permissible(model, state, act, action) is False


def test_permissible_with_custom_violation_atom(park, john):
    # treat the fine itself as the violation marker
    assert permissible(park, "w2", john, "a2", violation_atom="f") is True
    assert permissible(park, "w1", john, "a1", violation_atom="f") is False
    # not executable here, hence not permissible
    assert permissible(park, "w1", john, "a2", violation_atom="f") is False


def test_permissible_unknown_action_raises(park, john):
    with pytest.raises(NameResolutionError):
        permissible(park, "w1", john, "zz", violation_atom="f")


# -- JSON rendering ----------------------------------------------------------------

def test_verdict_json_shapes(contract, signing):
    glob = global_power(contract, "w1", signing).to_json_dict()
    assert glob == {
        "kind": "power", "scope": "global", "holds": True, "witnesses": ["a1"],
    }
    loc = local_power(contract, "w1", signing, parse("O i k (f / true)")).to_json_dict()
    assert loc == {
        "kind": "power", "scope": "local", "holds": True,
        "witnesses": ["a1"], "currentTruth": False,
    }


# -- invariants over seeded random instances ----------------------------------------

def test_verdict_invariants_on_random_instances():
    cfg = GeneratorConfig(sample_count=100)
    rng = random.Random(cfg.seed)
    for _ in range(cfg.sample_count):
        model = random_model(cfg, rng)
        act = random_action_model(cfg, model, rng)
        state = rng.choice(sorted(model.states))
        atoms = tuple(sorted(model.val))
        agents = tuple(sorted(model.agents))
        position = random_static_formula(rng, atoms, agents, 3)

        power = global_power(model, state, act)
        immunity = global_immunity(model, state, act)
        assert power.holds == bool(power.witnesses)
        assert immunity.holds == (not immunity.witnesses)
        assert power.witnesses == immunity.witnesses
        assert liability(model, state, act).holds == power.holds
        assert no_power(model, state, act).holds == immunity.holds

        env = ActionModelEnv([act])
        lp = local_power(model, state, act, position, env)
        li = local_immunity(model, state, act, position, env)
        assert lp.holds == (not li.holds)
        assert lp.witnesses == li.witnesses
        assert set(lp.witnesses) <= set(power.witnesses)
