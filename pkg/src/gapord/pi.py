"""Collapsing-function terms D_i with index-coefficient wellformedness.

Terms are unary chains ``D_{i1} D_{i2} ... D_{ik} 0``, stored as the index
tuple from the outermost node inwards.  The coefficient set ``g_set(i, a)``
collects the arguments of the leading nodes whose index is >= i; a term
``D_i a`` is wellformed when every member of ``g_set(i, a)`` lies strictly
below a.  Comparison is lexicographic on (index, argument), which on the
index chains is exactly tuple order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .syntax import Scanner


@dataclass(frozen=True)
class PiTerm:
    indices: tuple[int, ...] = ()


PZERO = PiTerm()


def collapse(i: int, arg: PiTerm) -> PiTerm:
    """The D_i constructor."""
    if i < 0:
        raise ValueError("indices are nonnegative")
    return PiTerm((i,) + arg.indices)


def is_zero(a: PiTerm) -> bool:
    return not a.indices


def head_index(a: PiTerm) -> int:
    if not a.indices:
        raise ValueError("zero has no head")
    return a.indices[0]


def argument(a: PiTerm) -> PiTerm:
    if not a.indices:
        raise ValueError("zero has no argument")
    return PiTerm(a.indices[1:])


def node_count(a: PiTerm) -> int:
    return len(a.indices)


def g_set(i: int, a: PiTerm) -> frozenset[PiTerm]:
    """g_set(i, 0) = {}; g_set(i, D_j a) = g_set(i, a) | {a} if i <= j, else {}."""
    out = set()
    idx = a.indices
    for j, head in enumerate(idx):
        if head < i:
            break
        out.add(PiTerm(idx[j + 1 :]))
    return frozenset(out)


def compare(a: PiTerm, b: PiTerm) -> int:
    """Zero first, then lexicographic on (head index, argument) -- tuple order."""
    return (a.indices > b.indices) - (a.indices < b.indices)


@functools.lru_cache(maxsize=None)
def is_wellformed(a: PiTerm) -> bool:
    if not a.indices:
        return True
    arg = argument(a)
    if not is_wellformed(arg):
        return False
    return all(compare(x, arg) < 0 for x in g_set(head_index(a), arg))


def pi_validate(a: PiTerm, n: int | None = None) -> bool:
    """Membership in the wellformed system with indices < n (unbounded if n is None)."""
    if n is not None and any(i >= n for i in a.indices):
        return False
    return is_wellformed(a)


def in_pi0(a: PiTerm) -> bool:
    """The fragment below D_1 0: zero or head index 0."""
    return not a.indices or a.indices[0] == 0


# --- text syntax: 0 | D{i}(A) ---


def parse_pi(text: str) -> PiTerm:
    s = Scanner(text)
    value = parse_pi_scanner(s)
    s.expect_end()
    return value


def parse_pi_scanner(s: Scanner) -> PiTerm:
    if s.take("D"):
        i = s.nat()
        s.expect("(")
        arg = parse_pi_scanner(s)
        s.expect(")")
        return collapse(i, arg)
    if s.take("0"):
        return PZERO
    s.error("expected 'D' or '0'")
    raise AssertionError("unreachable")


def format_pi(a: PiTerm) -> str:
    out = "0"
    for i in reversed(a.indices):
        out = f"D{i}({out})"
    return out
