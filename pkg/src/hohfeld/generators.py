"""Seeded random models, action models, and formulas for audits.

All sampling flows through one ``random.Random`` instance, so a fixed
config yields an identical sequence of instances on every run.  Degenerate
shapes come up with positive probability on purpose: identity and total
preorders, singleton and total partitions, empty and full valuations,
constant postconditions, and mutually exclusive preconditions.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .actions import DeonticActionModel
from .formula import (
    BOT,
    TOP,
    ActBox,
    And,
    Atom,
    CondObl,
    Does,
    Formula,
    Iff,
    Imp,
    Not,
    Or,
    PrefBox,
    Univ,
    act_dia,
    conj,
    subformulas,
)
from .model import PrefActionModel, blocks_to_relation, closure

AGENT_POOL = ("i", "j", "k", "l", "m", "n")
ATOM_POOL = ("p", "q", "r", "s", "t", "u1")

DEFAULT_SEED = 42


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = DEFAULT_SEED
    max_states: int = 5
    max_actions: int = 3
    max_atoms: int = 3
    max_agents: int = 2
    max_formula_depth: int = 4
    sample_count: int = 500


def _random_preorder(rng: random.Random, members: list[str]) -> frozenset | None:
    """A preorder over members, or None meaning "leave undeclared"."""
    mode = rng.choices(("absent", "identity", "total", "chain", "random"),
                       weights=(15, 15, 15, 15, 40))[0]
    if mode == "absent":
        return None
    if mode == "identity":
        return closure([], members)
    if mode == "total":
        return frozenset((a, b) for a in members for b in members)
    if mode == "chain":
        order = list(members)
        rng.shuffle(order)
        return closure([(order[k], order[k + 1]) for k in range(len(order) - 1)], members)
    edges = [
        (a, b)
        for a in members
        for b in members
        if a != b and rng.random() < 0.35
    ]
    return closure(edges, members)


def _random_partition(rng: random.Random, members: list[str]) -> frozenset:
    mode = rng.choices(("singletons", "total", "random"), weights=(25, 25, 50))[0]
    if mode == "singletons":
        return blocks_to_relation([[w] for w in members])
    if mode == "total":
        return blocks_to_relation([members])
    order = list(members)
    rng.shuffle(order)
    blocks: list[list[str]] = [[order[0]]]
    for w in order[1:]:
        if rng.random() < 0.5:
            blocks.append([w])
        else:
            rng.choice(blocks).append(w)
    return blocks_to_relation(blocks)


def random_model(cfg: GeneratorConfig, rng: random.Random | None = None,
                 atoms: tuple[str, ...] | None = None,
                 agents: tuple[str, ...] | None = None) -> PrefActionModel:
    """One random model; vocabulary can be pinned for equivalence checks."""
    if rng is None:
        rng = random.Random(cfg.seed)
    states = [f"w{k}" for k in range(rng.randint(1, cfg.max_states))]
    if agents is None:
        agents = AGENT_POOL[: rng.randint(1, cfg.max_agents)]
    if atoms is None:
        atoms = ATOM_POOL[: rng.randint(1, cfg.max_atoms)]

    pref = {}
    for i in agents:
        for j in agents:
            rel = _random_preorder(rng, states)
            if rel is not None:
                pref[(i, j)] = rel

    # every agent gets a partition: random formulas may apply "do" to any of them
    eq = {agent: _random_partition(rng, states) for agent in agents}

    val = {}
    for atom in atoms:
        mode = rng.choices(("empty", "full", "random"), weights=(20, 20, 60))[0]
        if mode == "empty":
            val[atom] = frozenset()
        elif mode == "full":
            val[atom] = frozenset(states)
        else:
            val[atom] = frozenset(w for w in states if rng.random() < 0.5)

    return PrefActionModel(
        states=frozenset(states),
        agents=frozenset(agents),
        pref=pref,
        eq=eq,
        val=val,
    )


def _exclusive_preconditions(atoms: tuple[str, ...], count: int) -> list[Formula]:
    """Pairwise exclusive conjunctions of literals (falsum once patterns run out)."""
    width = 1
    while 2 ** width < count and width < len(atoms):
        width += 1
    out: list[Formula] = []
    for k in range(count):
        if k >= 2 ** width:
            out.append(BOT)
            continue
        literals = []
        for bit in range(width):
            atom: Formula = Atom(atoms[bit])
            literals.append(atom if (k >> bit) & 1 == 0 else Not(atom))
        out.append(conj(literals))
    return out


def random_action_model(cfg: GeneratorConfig, model: PrefActionModel,
                        rng: random.Random | None = None,
                        name: str = "A") -> DeonticActionModel:
    """One random action model over the model's vocabulary."""
    if rng is None:
        rng = random.Random(cfg.seed)
    atoms = tuple(sorted(model.val))
    agents = tuple(sorted(model.agents))
    actions = [f"a{k}" for k in range(rng.randint(1, cfg.max_actions))]

    rel = {}
    for i in agents:
        for j in agents:
            relation = _random_preorder(rng, actions)
            if relation is not None:
                rel[(i, j)] = relation

    pre_mode = rng.choices(("top", "exclusive", "random"), weights=(25, 30, 45))[0]
    if pre_mode == "top":
        pre = {a: TOP for a in actions}
    elif pre_mode == "exclusive" and atoms:
        pre = dict(zip(actions, _exclusive_preconditions(atoms, len(actions))))
    else:
        pre = {
            a: random_static_formula(rng, atoms, agents, depth=min(2, cfg.max_formula_depth))
            for a in actions
        }

    post: dict[str, dict[str, Formula]] = {}
    for a in actions:
        overrides = {}
        for atom in rng.sample(atoms, rng.randint(0, min(2, len(atoms)))):
            kind = rng.choices(("top", "bot", "formula"), weights=(30, 30, 40))[0]
            if kind == "top":
                overrides[atom] = TOP
            elif kind == "bot":
                overrides[atom] = BOT
            else:
                overrides[atom] = random_static_formula(rng, atoms, agents, depth=2)
        if overrides:
            post[a] = overrides

    owner = rng.choice(agents)
    return DeonticActionModel(
        name=name,
        owner=owner,
        actions=frozenset(actions),
        rel=rel,
        pre=pre,
        post=post,
    )


def random_static_formula(rng: random.Random, atoms: tuple[str, ...],
                          agents: tuple[str, ...], depth: int) -> Formula:
    """Random formula without dynamic boxes, depth-bounded."""
    if depth <= 0 or rng.random() < 0.2:
        leaf = rng.choices(("atom", "top", "bot"), weights=(70, 15, 15))[0]
        if leaf == "atom" and atoms:
            return Atom(rng.choice(atoms))
        return TOP if leaf != "bot" else BOT
    node = rng.choices(
        ("not", "and", "or", "imp", "iff", "pref", "univ", "does", "obl"),
        weights=(15, 13, 13, 10, 6, 14, 9, 10, 10),
    )[0]
    sub = lambda: random_static_formula(rng, atoms, agents, depth - 1)
    if node == "not":
        return Not(sub())
    if node == "and":
        return And(sub(), sub())
    if node == "or":
        return Or(sub(), sub())
    if node == "imp":
        return Imp(sub(), sub())
    if node == "iff":
        return Iff(sub(), sub())
    if node == "pref":
        return PrefBox(rng.choice(agents), rng.choice(agents), sub())
    if node == "univ":
        return Univ(sub())
    if node == "does":
        return Does(rng.choice(agents), sub())
    return CondObl(rng.choice(agents), rng.choice(agents), sub(), sub())


def random_dynamic_formula(rng: random.Random, atoms: tuple[str, ...],
                           agents: tuple[str, ...], act: DeonticActionModel,
                           depth: int) -> Formula:
    """Random formula guaranteed to contain at least one dynamic operator."""
    f = _random_formula_with_boxes(rng, atoms, agents, act, depth)
    if any(isinstance(g, ActBox) for g in subformulas(f)):
        return f
    action = rng.choice(sorted(act.actions))
    if rng.random() < 0.5:
        return ActBox(act.name, action, f)
    return act_dia(act.name, action, f)


def _random_formula_with_boxes(rng, atoms, agents, act, depth) -> Formula:
    if depth <= 0 or rng.random() < 0.2:
        leaf = rng.choices(("atom", "top", "bot"), weights=(70, 15, 15))[0]
        if leaf == "atom" and atoms:
            return Atom(rng.choice(atoms))
        return TOP if leaf != "bot" else BOT
    node = rng.choices(
        ("box", "dia", "not", "and", "or", "imp", "pref", "univ", "does", "obl"),
        weights=(18, 10, 12, 11, 11, 8, 10, 7, 7, 6),
    )[0]
    sub = lambda: _random_formula_with_boxes(rng, atoms, agents, act, depth - 1)
    if node == "box":
        return ActBox(act.name, rng.choice(sorted(act.actions)), sub())
    if node == "dia":
        return act_dia(act.name, rng.choice(sorted(act.actions)), sub())
    if node == "not":
        return Not(sub())
    if node == "and":
        return And(sub(), sub())
    if node == "or":
        return Or(sub(), sub())
    if node == "imp":
        return Imp(sub(), sub())
    if node == "pref":
        return PrefBox(rng.choice(agents), rng.choice(agents), sub())
    if node == "univ":
        return Univ(sub())
    if node == "does":
        return Does(rng.choice(agents), sub())
    return CondObl(rng.choice(agents), rng.choice(agents), sub(), sub())
