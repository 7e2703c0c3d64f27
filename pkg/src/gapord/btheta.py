"""Binary collapsing terms th_i(a, b) and their evaluation into leveled values.

A node th_i(a, b) carries a level-(i+1)-bounded left argument and a
level-i-bounded right argument; zero has level -1.  ``k_set(j, a)``
collects the maximal subterms of a whose index is <= j, by descending
through higher-indexed nodes.  The order compares indices first; at equal
indices it dispatches on the left arguments, guarding each branch with an
elementwise comparison against the coefficient set of the larger side.

The distinguished subsystem keeps every left argument free of indices <=
its node index (``in_ot``); on its level-<=0 fragment the map ``o_value``
evaluates terms to leveled values: at level 1 by counting nodes, above by
sending th_0(a, b) to phi over the value of the index-shifted left
argument applied to the value of the right argument.  ``embed_seq`` embeds
the adjacency-restricted gap sequences into the subsystem.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional

from .gapseq import GapSequence, in_restricted
from .syntax import Scanner
from .veblen import LeveledValue, leveled_nat, leveled_phi, leveled_zero


@dataclass(frozen=True)
class BinThetaTerm:
    index: int = -1
    left: Optional["BinThetaTerm"] = None
    right: Optional["BinThetaTerm"] = None

    def __post_init__(self) -> None:
        if self.index < 0:
            if self.left is not None or self.right is not None:
                raise ValueError("zero has no children")
        elif self.left is None or self.right is None:
            raise ValueError("a node needs both children")


BZERO = BinThetaTerm()


def btheta(i: int, left: BinThetaTerm, right: BinThetaTerm) -> BinThetaTerm:
    if i < 0:
        raise ValueError("indices are nonnegative")
    return BinThetaTerm(i, left, right)


def is_zero(a: BinThetaTerm) -> bool:
    return a.index < 0


def level(a: BinThetaTerm) -> int:
    return a.index


@functools.lru_cache(maxsize=None)
def node_count(a: BinThetaTerm) -> int:
    if is_zero(a):
        return 0
    return 1 + node_count(a.left) + node_count(a.right)


@functools.lru_cache(maxsize=None)
def k_set(j: int, a: BinThetaTerm) -> frozenset[BinThetaTerm]:
    """k_set(j, 0) = {}; k_set(j, th_i(x, y)) is {th_i(x, y)} unless j < i,
    in which case the sets of both children are merged."""
    if is_zero(a):
        return frozenset()
    if j < a.index:
        return k_set(j, a.left) | k_set(j, a.right)
    return frozenset({a})


@functools.lru_cache(maxsize=None)
def is_wellformed_bounded(a: BinThetaTerm, n: int) -> bool:
    if is_zero(a):
        return True
    return (
        a.index < n
        and level(a.left) <= a.index + 1
        and level(a.right) <= a.index
        and is_wellformed_bounded(a.left, n)
        and is_wellformed_bounded(a.right, n)
    )


@functools.lru_cache(maxsize=None)
def in_ot(a: BinThetaTerm, n: int) -> bool:
    """Wellformed and every left argument avoids indices <= the node index."""
    if is_zero(a):
        return True
    return (
        is_wellformed_bounded(a, n)
        and not k_set(a.index, a.left)
        and in_ot(a.left, n)
        and in_ot(a.right, n)
    )


def in_ot0(a: BinThetaTerm, n: int) -> bool:
    return in_ot(a, n) and level(a) <= 0


@functools.lru_cache(maxsize=1 << 20)
def lt(a: BinThetaTerm, b: BinThetaTerm) -> bool:
    """Whether a < b is derivable from the comparison clauses.

    On the distinguished subsystem every coefficient set on a left
    argument is empty and the clauses decide every pair; on unrestricted
    terms pairs can be incomparable (neither direction derivable).
    """
    if is_zero(a):
        return not is_zero(b)
    if is_zero(b):
        return False
    if a.index != b.index:
        return a.index < b.index
    i = a.index
    if a.left == b.left:
        return lt(a.right, b.right)
    if lt(a.left, b.left):
        return lt(a.right, b) and all(lt(x, b) for x in k_set(i, a.left))
    if lt(b.left, a.left):
        return le(a, b.right) and all(le(a, x) for x in k_set(i, b.left))
    return False


def le(a: BinThetaTerm, b: BinThetaTerm) -> bool:
    return a == b or lt(a, b)


def compare(a: BinThetaTerm, b: BinThetaTerm) -> int:
    """Three-way order where it is defined; raises on incomparable pairs,
    which exist among unrestricted terms but not in the distinguished
    subsystem."""
    if a == b:
        return 0
    if lt(a, b):
        return -1
    if lt(b, a):
        return 1
    raise ValueError(
        f"incomparable terms {format_btheta(a)} and {format_btheta(b)}"
    )


def shift_down(a: BinThetaTerm) -> BinThetaTerm:
    """Decrement every index; defined only when no index-0 node occurs."""
    if k_set(0, a):
        raise ValueError("term contains an index-0 node; cannot shift down")
    return _shift(a)


def _shift(a: BinThetaTerm) -> BinThetaTerm:
    if is_zero(a):
        return a
    return BinThetaTerm(a.index - 1, _shift(a.left), _shift(a.right))


def o_value(a: BinThetaTerm, n: int) -> LeveledValue:
    """Evaluate a level-<=0 member of the distinguished subsystem at level n."""
    if n < 1:
        raise ValueError("level must be >= 1")
    if not in_ot0(a, n):
        raise ValueError("term outside the domain of the evaluation map")
    return _o_value(a, n)


def _o_value(a: BinThetaTerm, n: int) -> LeveledValue:
    if n == 1:
        return leveled_nat(node_count(a))
    if is_zero(a):
        return leveled_zero(n)
    sub = _o_value(_shift(a.left), n - 1)
    return leveled_phi(sub, _o_value(a.right, n))


def embed_seq(s: GapSequence) -> BinThetaTerm:
    """Embed an adjacency-restricted sequence: the head label i becomes a node
    whose left part takes the run of labels > i and whose right part takes
    the rest (which starts with a label <= i)."""
    if not in_restricted(s):
        raise ValueError("sequence violates the adjacency restriction")
    return _embed(s.labels)


def _embed(labels: tuple[int, ...]) -> BinThetaTerm:
    if not labels:
        return BZERO
    i = labels[0]
    j = 1
    while j < len(labels) and labels[j] > i:
        j += 1
    return BinThetaTerm(i, _embed(labels[1:j]), _embed(labels[j:]))


# --- text syntax: 0 | th{i}(L, R) ---


def parse_btheta(text: str) -> BinThetaTerm:
    s = Scanner(text)
    value = parse_btheta_scanner(s)
    s.expect_end()
    return value


def parse_btheta_scanner(s: Scanner) -> BinThetaTerm:
    if s.take("th"):
        i = s.nat()
        s.expect("(")
        left = parse_btheta_scanner(s)
        s.expect(",")
        right = parse_btheta_scanner(s)
        s.expect(")")
        return btheta(i, left, right)
    if s.take("0"):
        return BZERO
    s.error("expected 'th' or '0'")
    raise AssertionError("unreachable")


def format_btheta(a: BinThetaTerm) -> str:
    if is_zero(a):
        return "0"
    return f"th{a.index}({format_btheta(a.left)}, {format_btheta(a.right)})"
