#!/usr/bin/env python3
"""Narrated tour of the parking scenario.

Walks the bundled four-state parking model through the officer's fine and
the mayor's reversal, printing the obligations, competences, and model
shapes at each step.  Every value printed here is also locked down by the
test suite; the script exists to show the API in motion.

Run:  python3 scripts/parking_walkthrough.py
"""
from __future__ import annotations

from hohfeld import (
    ActionModelEnv,
    evaluate,
    isomorphic,
    local_immunity,
    local_power,
    parse,
    product,
    truth_set,
)
import hohfeld.scenarios as scenarios


def say(text: str = "") -> None:
    print(text)


def check(model, state, text, env=None) -> bool:
    value = evaluate(model, state, parse(text), env)
    say(f"    {text!s:<46} @ {state:<6} -> {value}")
    return value


def main() -> None:
    park = scenarios.parking_model()
    john = scenarios.john_action_model()
    mary = scenarios.mary_action_model()
    env = ActionModelEnv([john, mary])

    say("== The parking model ==")
    say(f"  states: {sorted(park.states)}")
    say(f"  d (permit displayed) holds at {sorted(truth_set(park, parse('d')))}")
    say(f"  p (car parked)       holds at {sorted(truth_set(park, parse('p')))}")
    say(f"  f (driver fined)     holds at {sorted(truth_set(park, parse('f')))}")
    say("  w1 is the violation state: parked without a displayed permit.")
    say()

    say("== Static obligations at w1 ==")
    check(park, "w1", "O i c (do i d / p)")
    check(park, "w1", "O i c (do i d / true)")
    check(park, "w1", "O i c (do i d / !p)")
    say("  The duty to display is conditional on parking: given p it binds,")
    say("  unconditionally or given !p it does not.")
    say()

    say("== Officer John acts ==")
    say("  a1 (fine) is executable exactly at the violation state;")
    say("  a2 (waive) everywhere else.")
    check(park, "w1", "<act John a1> true", env)
    check(park, "w2", "<act John a1> true", env)
    after_john = product(park, john).model
    say(f"  product states: {sorted(after_john.states)}")
    say(f"  f now holds at {sorted(truth_set(after_john, parse('f')))}")
    check(park, "w1", "<act John a1> O i c (f / true)", env)
    say("  After the fine the fined state is uniquely ideal: paying becomes")
    say("  obligatory, i.e. John exercised a power over that position.")
    say()

    say("== Competences at w1, before John acts ==")
    payment = parse("O i c (f / true)")
    display = parse("O i c (do i d / true)")
    verdict = local_power(park, "w1", john, payment, env)
    say(f"    local power over the payment duty:  holds={verdict.holds} "
        f"witnesses={list(verdict.witnesses)}")
    verdict = local_immunity(park, "w1", john, display, env)
    say(f"    local immunity over the display duty: holds={verdict.holds} "
        f"witnesses={list(verdict.witnesses)}")
    say()

    say("== Mayor Mary reverses ==")
    after_both = product(after_john, mary).model
    say(f"  states after both updates: {sorted(after_both.states)}")
    witness = isomorphic(after_both, park)
    assert witness is not None
    say("  isomorphic to the original model via:")
    for src, dst in sorted(witness.as_dict().items()):
        say(f"    {src} -> {dst}")
    say("  The reversal restores the original normative situation exactly,")
    say("  up to the bookkeeping in the state names.")


if __name__ == "__main__":
    main()
