"""Deontic action models: finite actions ranked by per-pair effectivity
preorders, with static pre- and postconditions.

An agent pair absent from ``rel`` denotes the total preorder (all actions
mutually equivalent), which leaves the underlying ideality relation intact
under update.  Postconditions are finitely supported: an atom an action
does not mention keeps its current truth value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import NameResolutionError
from .formula import Formula, is_static
from .model import Relation, ValidationReport, Violation, _check_preorder


@dataclass(frozen=True)
class DeonticActionModel:
    name: str
    owner: str
    actions: frozenset[str]
    rel: Mapping[tuple[str, str], Relation]        # over action ids
    pre: Mapping[str, Formula]
    post: Mapping[str, Mapping[str, Formula]]

    def le(self, i: str, j: str, a: str, b: str) -> bool:
        """Is ``b`` at least as effective as ``a`` for the pair?  Total when undeclared."""
        rel = self.rel.get((i, j))
        if rel is None:
            return True
        return (a, b) in rel

    def strictly_below(self, i: str, j: str, a: str, b: str) -> bool:
        return self.le(i, j, a, b) and not self.le(i, j, b, a)

    def equivalent(self, i: str, j: str, a: str, b: str) -> bool:
        return self.le(i, j, a, b) and self.le(i, j, b, a)

    def post_formula(self, action: str, atom: str) -> Formula | None:
        """The assigned postcondition, or None when the atom is untouched."""
        return self.post.get(action, {}).get(atom)


def make_action_model(
    name: str,
    owner: str,
    actions: Iterable[str],
    rel: Mapping[tuple[str, str], Iterable[tuple[str, str]]],
    pre: Mapping[str, Formula],
    post: Mapping[str, Mapping[str, Formula]],
) -> DeonticActionModel:
    return DeonticActionModel(
        name=name,
        owner=owner,
        actions=frozenset(actions),
        rel={pair: frozenset(edges) for pair, edges in rel.items()},
        pre=dict(pre),
        post={action: dict(assign) for action, assign in post.items()},
    )


def validate_action_model(act: DeonticActionModel) -> ValidationReport:
    """Frame and format conditions for an action model.

    Effectivity relations must be preorders over the action set, every
    action needs a static precondition, postconditions must be static,
    and action ids may not contain the pair-name separator ``*``.
    """
    report = ValidationReport()
    if not act.actions:
        report.violations.append(Violation("actions", "nonempty", ()))
    for action in sorted(act.actions):
        if "*" in action:
            report.violations.append(Violation("actions", "reserved character '*'", (action,)))
        if action not in act.pre:
            report.violations.append(Violation("pre", "missing precondition", (action,)))
    for action, formula in sorted(act.pre.items()):
        if action not in act.actions:
            report.violations.append(Violation("pre", "unknown action", (action,)))
        elif not is_static(formula):
            report.violations.append(Violation("pre", "precondition not static", (action,)))
    for action, assign in sorted(act.post.items()):
        if action not in act.actions:
            report.violations.append(Violation("post", "unknown action", (action,)))
            continue
        for atom, formula in sorted(assign.items()):
            if not is_static(formula):
                report.violations.append(Violation("post", "postcondition not static", (action, atom)))
    for (i, j), rel in sorted(act.rel.items()):
        _check_preorder(f"rel {i}->{j}", rel, act.actions, report)
    return report


class ActionModelEnv:
    """Named action models available during evaluation.

    Also memoizes product models per (underlying model, action-model name):
    the same update requested twice during one evaluation is built once.
    """

    def __init__(self, models: Iterable[DeonticActionModel] = ()):
        self._by_name: dict[str, DeonticActionModel] = {}
        for act in models:
            if act.name in self._by_name:
                raise NameResolutionError(f"duplicate action-model name {act.name!r}")
            self._by_name[act.name] = act
        self._product_cache: dict[tuple[int, str], tuple[object, object]] = {}

    def names(self) -> list[str]:
        return sorted(self._by_name)

    def get(self, name: str) -> DeonticActionModel:
        act = self._by_name.get(name)
        if act is None:
            known = ", ".join(self.names()) or "none"
            raise NameResolutionError(f"unknown action model {name!r} (loaded: {known})")
        return act

    def product_of(self, model, name: str, builder):
        """Memoized ``builder(model, self.get(name))``.

        Keyed by object identity; the cached entry pins the model so the id
        cannot be recycled while the cache lives.
        """
        key = (id(model), name)
        hit = self._product_cache.get(key)
        if hit is not None and hit[0] is model:
            return hit[1]
        built = builder(model, self.get(name))
        self._product_cache[key] = (model, built)
        return built
