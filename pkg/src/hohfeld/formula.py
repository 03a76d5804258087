"""Formula AST for the normative language, with rendering and rewrites.

Core nodes: atoms, boolean connectives, the per-pair ideality box
``[pref i j]``, the universal modality ``U``, the agency operator
``do i``, the conditional obligation ``O i j (consequent / condition)``,
and the dynamic box ``[act MODEL ACTION]``.  Diamonds, permission, claim,
and privilege are derived constructors, not AST nodes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator


class Formula:
    """Base class for AST nodes.  Nodes are frozen, hashable, comparable."""

    __slots__ = ()

    def __str__(self) -> str:
        return _render(self, _PREC_TOP)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class PrefBox(Formula):
    """Truth in every state at least as ideal, judged for agent ``i`` toward ``j``."""

    i: str
    j: str
    arg: Formula


@dataclass(frozen=True)
class Univ(Formula):
    """Truth in every state of the model."""

    arg: Formula


@dataclass(frozen=True)
class Does(Formula):
    """Truth in every state the agent cannot distinguish by its own action."""

    agent: str
    arg: Formula


@dataclass(frozen=True)
class CondObl(Formula):
    """Conditional obligation of ``i`` toward ``j``: consequent given condition."""

    i: str
    j: str
    consequent: Formula
    condition: Formula


@dataclass(frozen=True)
class ActBox(Formula):
    """After executing ``action`` of the named action model, if executable."""

    model: str
    action: str
    arg: Formula


TOP = Top()
BOT = Bot()


# ---------------------------------------------------------------------------
# Derived constructors.  These expand immediately; the AST never stores them.

def pref_dia(i: str, j: str, arg: Formula) -> Formula:
    """Truth in some state at least as ideal."""
    return Not(PrefBox(i, j, Not(arg)))


def exist(arg: Formula) -> Formula:
    """Truth in some state of the model."""
    return Not(Univ(Not(arg)))


def act_dia(model: str, action: str, arg: Formula) -> Formula:
    """Action executable and the scope true afterwards."""
    return Not(ActBox(model, action, Not(arg)))


def perm(i: str, j: str, consequent: Formula, condition: Formula) -> Formula:
    """Conditional permission: no obligation toward the negated consequent."""
    return Not(CondObl(i, j, Not(consequent), condition))


def obligation(i: str, j: str, consequent: Formula) -> Formula:
    """Unconditional obligation: condition fixed to truth."""
    return CondObl(i, j, consequent, TOP)


def claim(i: str, j: str, arg: Formula, condition: Formula = TOP) -> Formula:
    """``i``'s claim against ``j`` that ``j`` sees to ``arg``."""
    return CondObl(j, i, Does(j, arg), condition)


def privilege(i: str, j: str, arg: Formula, condition: Formula = TOP) -> Formula:
    """``i``'s privilege against ``j``: no duty to see to the opposite."""
    return Not(CondObl(i, j, Does(i, Not(arg)), condition))


def conj(parts) -> Formula:
    """Left-folded conjunction of a sequence; empty sequence collapses to truth."""
    parts = list(parts)
    if not parts:
        return TOP
    out = parts[0]
    for part in parts[1:]:
        out = And(out, part)
    return out


def disj(parts) -> Formula:
    """Left-folded disjunction of a sequence; empty sequence collapses to falsity."""
    parts = list(parts)
    if not parts:
        return BOT
    out = parts[0]
    for part in parts[1:]:
        out = Or(out, part)
    return out


# ---------------------------------------------------------------------------
# Traversals.

def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, (Not, PrefBox, Univ, Does, ActBox)):
        return (f.arg,)
    if isinstance(f, (And, Or, Imp, Iff)):
        return (f.left, f.right)
    if isinstance(f, CondObl):
        return (f.consequent, f.condition)
    return ()


def subformulas(f: Formula) -> Iterator[Formula]:
    """Yield ``f`` and every node below it, preorder."""
    yield f
    for child in children(f):
        yield from subformulas(child)


def size(f: Formula) -> int:
    return sum(1 for _ in subformulas(f))


def is_static(f: Formula) -> bool:
    """True when no dynamic box occurs anywhere in the formula."""
    return not any(isinstance(g, ActBox) for g in subformulas(f))


def atom_names(f: Formula) -> frozenset[str]:
    return frozenset(g.name for g in subformulas(f) if isinstance(g, Atom))


def agent_names(f: Formula) -> frozenset[str]:
    names: set[str] = set()
    for g in subformulas(f):
        if isinstance(g, (PrefBox, CondObl)):
            names.add(g.i)
            names.add(g.j)
        elif isinstance(g, Does):
            names.add(g.agent)
    return frozenset(names)


# ---------------------------------------------------------------------------
# Conditional obligation is definable through the ideality box alone.

def unfold_head(f: CondObl) -> Formula:
    """Rewrite one obligation node into its box/diamond definition.

    O i j (psi / phi) becomes
    [pref i j](phi -> <pref i j>(phi & [pref i j](phi -> psi))).
    """
    i, j, psi, phi = f.i, f.j, f.consequent, f.condition
    return PrefBox(i, j, Imp(phi, pref_dia(i, j, And(phi, PrefBox(i, j, Imp(phi, psi))))))


def unfold_cond_obl(f: Formula) -> Formula:
    """Eliminate every obligation node, innermost first.

    The output contains no CondObl node and is evaluation-equivalent to the
    input.  Size grows by at most a factor of 7 per eliminated node.
    """
    if isinstance(f, CondObl):
        unfolded = CondObl(f.i, f.j, unfold_cond_obl(f.consequent), unfold_cond_obl(f.condition))
        return unfold_head(unfolded)
    if isinstance(f, Not):
        return Not(unfold_cond_obl(f.arg))
    if isinstance(f, And):
        return And(unfold_cond_obl(f.left), unfold_cond_obl(f.right))
    if isinstance(f, Or):
        return Or(unfold_cond_obl(f.left), unfold_cond_obl(f.right))
    if isinstance(f, Imp):
        return Imp(unfold_cond_obl(f.left), unfold_cond_obl(f.right))
    if isinstance(f, Iff):
        return Iff(unfold_cond_obl(f.left), unfold_cond_obl(f.right))
    if isinstance(f, PrefBox):
        return PrefBox(f.i, f.j, unfold_cond_obl(f.arg))
    if isinstance(f, Univ):
        return Univ(unfold_cond_obl(f.arg))
    if isinstance(f, Does):
        return Does(f.agent, unfold_cond_obl(f.arg))
    if isinstance(f, ActBox):
        return ActBox(f.model, f.action, unfold_cond_obl(f.arg))
    return f


# ---------------------------------------------------------------------------
# Rendering.  str(f) emits concrete syntax that reparses to an equal AST.

_PREC_TOP = 0     # <->
_PREC_IMP = 1     # ->  (right associative)
_PREC_OR = 2
_PREC_AND = 3
_PREC_UNARY = 4


def _render(f: Formula, prec: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bot):
        return "false"
    if isinstance(f, Not):
        return "!" + _render(f.arg, _PREC_UNARY)
    if isinstance(f, PrefBox):
        return f"[pref {f.i} {f.j}] " + _render(f.arg, _PREC_UNARY)
    if isinstance(f, Univ):
        return "U " + _render(f.arg, _PREC_UNARY)
    if isinstance(f, Does):
        return f"do {f.agent} " + _render(f.arg, _PREC_UNARY)
    if isinstance(f, ActBox):
        return f"[act {f.model} {f.action}] " + _render(f.arg, _PREC_UNARY)
    if isinstance(f, CondObl):
        body = _render(f.consequent, _PREC_TOP) + " / " + _render(f.condition, _PREC_TOP)
        return f"O {f.i} {f.j} ({body})"
    if isinstance(f, And):
        text = _render(f.left, _PREC_AND) + " & " + _render(f.right, _PREC_AND + 1)
        return text if prec <= _PREC_AND else "(" + text + ")"
    if isinstance(f, Or):
        text = _render(f.left, _PREC_OR) + " | " + _render(f.right, _PREC_OR + 1)
        return text if prec <= _PREC_OR else "(" + text + ")"
    if isinstance(f, Imp):
        text = _render(f.left, _PREC_IMP + 1) + " -> " + _render(f.right, _PREC_IMP)
        return text if prec <= _PREC_IMP else "(" + text + ")"
    if isinstance(f, Iff):
        text = _render(f.left, _PREC_TOP) + " <-> " + _render(f.right, _PREC_TOP + 1)
        return text if prec <= _PREC_TOP else "(" + text + ")"
    raise TypeError(f"not a formula node: {f!r}")
