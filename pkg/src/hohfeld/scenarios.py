"""Bundled case studies: the parking scenario and the contract scenario.

Each bundle carries its models, action models, and a list of checks that
can be executed against them.  Checks are either a formula expected to
take a given truth value at a state, or an expected isomorphism verdict
between two of the bundle's models.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .actions import ActionModelEnv, DeonticActionModel, make_action_model
from .errors import NameResolutionError
from .isomorphism import isomorphic
from .model import (
    PrefActionModel,
    blocks_to_relation,
    closure,
    make_model,
)
from .modelio import dumps_action_model, dumps_model
from .parser import parse
from .semantics import evaluate, product


# ---------------------------------------------------------------------------
# Parking: a city parking ordinance between driver i and city c.

def parking_model() -> PrefActionModel:
    """Four states ranked by the driver-toward-city legal ideality.

    d: a permit is displayed; p: the car is parked; f: the driver is fined.
    w1 (parked, nothing displayed) violates the ordinance and sits strictly
    below the mutually equivalent cluster w2/w3/w4.  Nobody is fined yet.
    """
    states = ["w1", "w2", "w3", "w4"]
    pref = closure(
        [("w1", "w2"), ("w1", "w4"), ("w3", "w4"), ("w4", "w3"), ("w2", "w3"), ("w3", "w2")],
        states,
    )
    return make_model(
        states=states,
        agents=["i", "c"],
        pref={("i", "c"): pref},
        eq={
            "i": blocks_to_relation([[w] for w in states]),
            "c": blocks_to_relation([states]),
        },
        val={"d": ["w2", "w3"], "p": ["w1", "w2"], "f": []},
    )


def john_action_model() -> DeonticActionModel:
    """Officer John fines exactly the parked-without-permit situation.

    a1 (fine) requires no permit displayed while parked; a2 (waive) covers
    the rest.  The two actions are incomparable in effectivity, so each
    keeps the old ranking inside its own copy.
    """
    return make_action_model(
        name="John",
        owner="john",
        actions=["a1", "a2"],
        rel={("i", "c"): closure([], ["a1", "a2"])},
        pre={"a1": parse("!d & p"), "a2": parse("d | !p")},
        post={"a1": {"f": parse("true")}, "a2": {"f": parse("false")}},
    )


def mary_action_model() -> DeonticActionModel:
    """Mayor Mary reverses John's fine.

    Both actions clear the fine; b1 (the reversal applying where John
    fined) sits strictly below b2, which restores the original ranking.
    """
    return make_action_model(
        name="Mary",
        owner="mary",
        actions=["b1", "b2"],
        rel={("i", "c"): closure([("b1", "b2")], ["b1", "b2"])},
        pre={"b1": parse("!d & p"), "b2": parse("d | !p")},
        post={"b1": {"f": parse("false")}, "b2": {"f": parse("false")}},
    )


def parking_after_john() -> PrefActionModel:
    """The expected shape of the parking model updated by John's actions."""
    states = ["w1*a1", "w2*a2", "w3*a2", "w4*a2"]
    pref = closure(
        [("w2*a2", "w3*a2"), ("w3*a2", "w2*a2"), ("w3*a2", "w4*a2"), ("w4*a2", "w3*a2")],
        states,
    )
    return make_model(
        states=states,
        agents=["i", "c"],
        pref={("i", "c"): pref},
        eq={
            "i": blocks_to_relation([[w] for w in states]),
            "c": blocks_to_relation([states]),
        },
        val={"d": ["w2*a2", "w3*a2"], "p": ["w1*a1", "w2*a2"], "f": ["w1*a1"]},
    )


# ---------------------------------------------------------------------------
# Contract: creditor k, debtor i, and guarantor j who can sign, stall, or refuse.

def contract_model() -> PrefActionModel:
    """Four states ordered by both the i-toward-k and j-toward-i ideality.

    p: j promises to cover i's debt; f: i must pay k back.  w1 (neither)
    sits on top, w2/w3 in the middle, w4 (both) at the bottom.
    """
    states = ["w1", "w2", "w3", "w4"]
    pref = closure(
        [("w2", "w1"), ("w4", "w3"), ("w2", "w3"), ("w3", "w2"), ("w4", "w1")],
        states,
    )
    return make_model(
        states=states,
        agents=["i", "j", "k"],
        pref={("i", "k"): pref, ("j", "i"): pref},
        eq={
            "j": blocks_to_relation([["w1"], ["w2", "w3"], ["w4"]]),
            "i": blocks_to_relation([states]),
            "k": blocks_to_relation([states]),
        },
        val={"p": ["w3", "w4"], "f": ["w3", "w4"]},
    )


def contract_action_model() -> DeonticActionModel:
    """Guarantor j refuses (a1), stalls (a2), or promises (a3).

    Effectivity rises along a1 < a2 < a3 for both agent pairs, so the
    update turns the old ranking upside down.  No postconditions: facts
    survive, only the ideality moves.
    """
    actions = ["a1", "a2", "a3"]
    chain = closure([("a1", "a2"), ("a2", "a3")], actions)
    return make_action_model(
        name="Contract",
        owner="j",
        actions=actions,
        rel={("i", "k"): chain, ("j", "i"): chain},
        pre={
            "a1": parse("do j !p"),
            "a2": parse("!do j p & !do j !p"),
            "a3": parse("do j p"),
        },
        post={},
    )


def contract_after_update() -> PrefActionModel:
    """The expected shape of the contract model updated by the signing actions."""
    states = ["w1*a1", "w2*a2", "w3*a2", "w4*a3"]
    pref = closure(
        [
            ("w1*a1", "w2*a2"),
            ("w2*a2", "w3*a2"),
            ("w3*a2", "w2*a2"),
            ("w3*a2", "w4*a3"),
            ("w1*a1", "w4*a3"),
        ],
        states,
    )
    return make_model(
        states=states,
        agents=["i", "j", "k"],
        pref={("i", "k"): pref, ("j", "i"): pref},
        eq={
            "j": blocks_to_relation([["w1*a1"], ["w2*a2", "w3*a2"], ["w4*a3"]]),
            "i": blocks_to_relation([states]),
            "k": blocks_to_relation([states]),
        },
        val={"p": ["w3*a2", "w4*a3"], "f": ["w3*a2", "w4*a3"]},
    )


def contract_model_with_violation() -> PrefActionModel:
    """Contract model extended with the violation atom V, false everywhere."""
    base = contract_model()
    val = dict(base.val)
    val["V"] = frozenset()
    return PrefActionModel(
        states=base.states, agents=base.agents, pref=base.pref, eq=base.eq, val=val
    )


def contract_action_model_with_violation() -> DeonticActionModel:
    """Signing actions that additionally raise the violation flag V."""
    base = contract_action_model()
    post = {a: {"V": parse("true")} for a in sorted(base.actions)}
    return make_action_model(
        name="ContractV",
        owner=base.owner,
        actions=sorted(base.actions),
        rel=base.rel,
        pre=base.pre,
        post=post,
    )


# ---------------------------------------------------------------------------
# Check bundles.

@dataclass(frozen=True)
class FormulaCheck:
    name: str
    model: str
    state: str
    formula: str
    expected: bool
    note: str = ""


@dataclass(frozen=True)
class IsoCheck:
    name: str
    left: str
    right: str
    expected: bool
    note: str = ""


Check = Union[FormulaCheck, IsoCheck]


@dataclass(frozen=True)
class ScenarioBundle:
    name: str
    models: dict[str, PrefActionModel]
    action_models: dict[str, DeonticActionModel]
    checks: tuple[Check, ...]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: object
    actual: object
    note: str = ""


@dataclass(frozen=True)
class ScenarioReport:
    scenario: str
    results: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


def run_scenario(bundle: ScenarioBundle) -> ScenarioReport:
    """Execute every check in the bundle and collect pass/fail results."""
    env = ActionModelEnv(bundle.action_models.values())
    results = []
    for check in bundle.checks:
        if isinstance(check, FormulaCheck):
            model = bundle.models.get(check.model)
            if model is None:
                raise NameResolutionError(
                    f"check {check.name!r} references unknown model {check.model!r}"
                )
            actual = evaluate(model, check.state, parse(check.formula), env)
        else:
            left = bundle.models.get(check.left)
            right = bundle.models.get(check.right)
            if left is None or right is None:
                missing = check.left if left is None else check.right
                raise NameResolutionError(
                    f"check {check.name!r} references unknown model {missing!r}"
                )
            actual = isomorphic(left, right) is not None
        results.append(CheckResult(
            name=check.name,
            passed=actual == check.expected,
            expected=check.expected,
            actual=actual,
            note=check.note,
        ))
    return ScenarioReport(scenario=bundle.name, results=tuple(results))


def parking_bundle() -> ScenarioBundle:
    park = parking_model()
    john = john_action_model()
    mary = mary_action_model()
    after_john = product(park, john).model
    after_both = product(after_john, mary).model
    checks: list[Check] = [
        FormulaCheck("duty_to_display_when_parked", "park", "w1",
                     "O i c (do i d / p)", True,
                     "conditional obligation to display, given parking"),
        FormulaCheck("no_duty_to_display_when_not_parked", "park", "w1",
                     "O i c (do i d / !p)", False,
                     "the condition fails on the relevant best states"),
        FormulaCheck("no_duty_to_omit_display_when_not_parked", "park", "w1",
                     "O i c (!do i d / !p)", False, ""),
        FormulaCheck("no_unconditional_duty_to_display", "park", "w1",
                     "O i c (do i d / true)", False, ""),
        FormulaCheck("no_unconditional_duty_to_park", "park", "w1",
                     "O i c (do i p / true)", False, ""),
    ]
    checks += [
        FormulaCheck(f"no_fine_at_{w}", "park", w, "f", False,
                     "nobody is fined before the officer acts")
        for w in ("w1", "w2", "w3", "w4")
    ]
    checks += [
        FormulaCheck("fine_executable_where_violating", "park", "w1",
                     "<act John a1> true", True, ""),
        FormulaCheck("fine_not_executable_when_compliant", "park", "w2",
                     "<act John a1> true", False, ""),
        FormulaCheck("fining_creates_duty_to_pay", "park", "w1",
                     "<act John a1> O i c (f / true)", True,
                     "after the fine, the fine-state is uniquely ideal"),
        FormulaCheck("fining_freezes_the_violation", "park", "w1",
                     "<act John a1> O i c ((!d & p) / true)", True,
                     "the condition of the violated duty becomes obligatory"),
        FormulaCheck("john_can_establish_duty_to_pay", "park", "w1",
                     "<act John a1> O i c (f / true) | <act John a2> O i c (f / true)",
                     True, "local power over the payment obligation"),
        FormulaCheck("john_cannot_touch_display_duty", "park", "w1",
                     "[act John a1] !O i c (do i d / true) & [act John a2] !O i c (do i d / true)",
                     True, "local immunity: no action makes displaying obligatory"),
    ]
    checks += [
        IsoCheck("john_update_matches_expected_shape", "after_john", "john_expected", True,
                 "the fined pair is isolated; the rest keep their ranking"),
        IsoCheck("mary_reverses_john", "after_both", "park", True,
                 "reversal restores the original model up to state names"),
        IsoCheck("john_update_is_not_the_original", "after_john", "park", False, ""),
    ]
    return ScenarioBundle(
        name="parking",
        models={
            "park": park,
            "after_john": after_john,
            "after_both": after_both,
            "john_expected": parking_after_john(),
        },
        action_models={"John": john, "Mary": mary},
        checks=tuple(checks),
    )


def contract_bundle() -> ScenarioBundle:
    base = contract_model()
    signing = contract_action_model()
    after = product(base, signing).model
    with_v = contract_model_with_violation()
    signing_v = contract_action_model_with_violation()

    power_f = " | ".join(
        f"<act Contract {a}> O i k (f / true)" for a in ("a1", "a2", "a3")
    )
    power_claim = " | ".join(
        f"<act Contract {a}> O j i (do j p / true)" for a in ("a1", "a2", "a3")
    )
    no_perm = " & ".join(
        f"!<act ContractV {a}> !V" for a in ("a1", "a2", "a3")
    )

    checks: list[Check] = [
        FormulaCheck(f"j_must_keep_i_free_at_{w}", "contract", w,
                     "O j i (do j !O i k (f / true) / true)", True,
                     "j owes i not to bring the repayment duty about")
        for w in ("w1", "w2", "w3", "w4")
    ]
    checks += [
        FormulaCheck("power_over_repayment_duty", "contract", "w1",
                     "U (" + power_f + ")", True,
                     "some signing action yields the repayment obligation, everywhere"),
        FormulaCheck("power_over_promise_claim", "contract", "w1",
                     "U (" + power_claim + ")", True,
                     "some signing action yields i's claim to j's promise, everywhere"),
        FormulaCheck("repayment_duty_after_update_everywhere", "contract_after", "w1*a1",
                     "U O i k (f / true)", True, ""),
        FormulaCheck("promise_claim_after_update_everywhere", "contract_after", "w1*a1",
                     "U O j i (do j p / true)", True, ""),
        IsoCheck("update_matches_expected_shape", "contract_after", "contract_expected",
                 True, "the product inverts the ranking and keeps the facts"),
    ]
    checks += [
        FormulaCheck("no_violation_before_acting", "contract_v", "w1",
                     "U !V", True, "the violation flag starts clear"),
        FormulaCheck("no_signing_action_is_permissible", "contract_v", "w1",
                     "U (" + no_perm + ")", True,
                     "every executable action raises the violation flag"),
        FormulaCheck("no_duty_to_repay_claim_before", "contract_v", "w1",
                     "U !O j i (do j f / true)", True,
                     "without permissibility screening, j owes i no repayment-making"),
    ]
    return ScenarioBundle(
        name="contract",
        models={
            "contract": base,
            "contract_after": after,
            "contract_expected": contract_after_update(),
            "contract_v": with_v,
        },
        action_models={"Contract": signing, "ContractV": signing_v},
        checks=tuple(checks),
    )


BUNDLES = {"parking": parking_bundle, "contract": contract_bundle}


def export_fixture_files(directory: str | Path) -> list[Path]:
    """Write every bundled model and action model as a JSON file."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    payload = {
        "parking_model.json": dumps_model(parking_model()),
        "john_actions.json": dumps_action_model(john_action_model()),
        "mary_actions.json": dumps_action_model(mary_action_model()),
        "contract_model.json": dumps_model(contract_model()),
        "contract_actions.json": dumps_action_model(contract_action_model()),
        "contract_model_v.json": dumps_model(contract_model_with_violation()),
        "contract_actions_v.json": dumps_action_model(contract_action_model_with_violation()),
    }
    for filename, text in payload.items():
        path = directory / filename
        path.write_text(text)
        out.append(path)
    return out
