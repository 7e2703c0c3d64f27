"""Addition-free Veblen-style terms over an arbitrary subscript order.

A term is either zero or ``phi(t, a)`` with a subscript t drawn from some
totally ordered set and a a smaller term.  Since every non-zero term has
exactly one term argument, a term is stored as the chain of subscripts
from the outermost node inwards.  The comparator for subscripts is passed
in, so the same machinery serves naturals, collapsing-function terms, and
the level-indexed values below.

``LeveledValue`` is the codomain family for the binary-theta evaluation
map: a level-1 value is a natural number, a level-(k+1) value is a term
whose subscripts are level-k values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .syntax import Scanner


@dataclass(frozen=True)
class VeblenTerm:
    """Subscript chain, outermost first; the empty chain is zero."""

    subs: tuple = ()


VZERO = VeblenTerm()


def phi(sub, arg: VeblenTerm) -> VeblenTerm:
    return VeblenTerm((sub,) + arg.subs)


def is_zero(a: VeblenTerm) -> bool:
    return not a.subs


def argument(a: VeblenTerm) -> VeblenTerm:
    if not a.subs:
        raise ValueError("zero has no argument")
    return VeblenTerm(a.subs[1:])


def node_count(a: VeblenTerm) -> int:
    return len(a.subs)


def compare(a: VeblenTerm, b: VeblenTerm, sub_compare: Callable) -> int:
    """Three-way order.  phi(s, x) < phi(t, y) iff
    s < t and x < phi(t, y), or s = t and x < y, or s > t and phi(s, x) <= y.

    Arguments are the chain tails, so the recursion runs over suffix
    positions with a per-call memo.
    """
    subs_a, subs_b = a.subs, b.subs
    la, lb = len(subs_a), len(subs_b)
    memo: dict[tuple[int, int], int] = {}

    def rec(i: int, j: int) -> int:
        if i == la or j == lb:
            return (i < la) - (j < lb)
        key = (i, j)
        got = memo.get(key)
        if got is not None:
            return got
        c = sub_compare(subs_a[i], subs_b[j])
        if c == 0:
            out = rec(i + 1, j + 1)
        elif c < 0:
            out = -1 if rec(i + 1, j) < 0 else 1
        else:
            out = -1 if rec(i, j + 1) <= 0 else 1
        memo[key] = out
        return out

    return rec(0, 0)


def compare_nat_subs(a: VeblenTerm, b: VeblenTerm) -> int:
    return compare(a, b, lambda x, y: (x > y) - (x < y))


# --- level-indexed values ---


@dataclass(frozen=True)
class LeveledValue:
    """Level 1 holds a natural number; level k+1 holds a term over level-k values."""

    level: int
    payload: "int | VeblenTerm"

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if self.level == 1:
            if not isinstance(self.payload, int) or self.payload < 0:
                raise ValueError("level-1 payload must be a natural number")
        else:
            if not isinstance(self.payload, VeblenTerm):
                raise ValueError("payload must be a term above level 1")
            for sub in self.payload.subs:
                if not isinstance(sub, LeveledValue) or sub.level != self.level - 1:
                    raise ValueError("subscripts must sit exactly one level below")


def leveled_nat(k: int) -> LeveledValue:
    return LeveledValue(1, k)


def leveled_zero(level: int) -> LeveledValue:
    return LeveledValue(1, 0) if level == 1 else LeveledValue(level, VZERO)


def leveled_phi(sub: LeveledValue, arg: LeveledValue) -> LeveledValue:
    if arg.level != sub.level + 1:
        raise ValueError("argument must sit one level above the subscript")
    return LeveledValue(arg.level, phi(sub, arg.payload))


def leveled_compare(u: LeveledValue, v: LeveledValue) -> int:
    if u.level != v.level:
        raise ValueError(f"cannot compare level {u.level} with level {v.level}")
    if u.level == 1:
        return (u.payload > v.payload) - (u.payload < v.payload)
    return compare(u.payload, v.payload, leveled_compare)


def format_leveled(u: LeveledValue) -> str:
    if u.level == 1:
        return str(u.payload)
    return format_veblen(u.payload, format_leveled)


# --- text syntax: 0 | phi(S, A), S in the subscript syntax ---


def parse_veblen(text: str, sub_parser: Callable[[Scanner], object]) -> VeblenTerm:
    s = Scanner(text)
    value = _parse(s, sub_parser)
    s.expect_end()
    return value


def _parse(s: Scanner, sub_parser) -> VeblenTerm:
    if s.take("phi"):
        s.expect("(")
        sub = sub_parser(s)
        s.expect(",")
        arg = _parse(s, sub_parser)
        s.expect(")")
        return phi(sub, arg)
    if s.take("0"):
        return VZERO
    s.error("expected 'phi(' or '0'")
    raise AssertionError("unreachable")


def parse_nat_sub(s: Scanner) -> int:
    return s.nat()


def format_veblen(a: VeblenTerm, sub_formatter: Callable = str) -> str:
    out = "0"
    for sub in reversed(a.subs):
        out = f"phi({sub_formatter(sub)}, {out})"
    return out
