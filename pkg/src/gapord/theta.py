"""Unary collapsing terms v_i with coefficients, linear order and gap suborder.

A term is a chain ``v_{i1} v_{i2} ... v_{ik} 0`` stored as its index tuple
from the outermost node inwards.  ``level`` is the head index (-1 for
zero), ``length`` the number of nodes.  A chain is wellformed when every
index is followed by one that exceeds it by at most one.

The coefficient ``k_coeff(i, a)`` is the first suffix of a whose head
index is <= i.  The linear order compares indices first and dispatches on
the argument comparison for equal indices, each branch guarded by a
coefficient comparison.  ``gap_below`` is the partial suborder generated
by: zero below everything; a below v_i(b) whenever a is below the
i-coefficient of b; and v_i(a) below v_i(b) whenever a is below b.

``to_tprime`` pads every index i with the run i+1, ..., n-1, landing in
the restricted system where each index below n-1 is immediately followed
by its successor.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .syntax import Scanner


@dataclass(frozen=True)
class ThetaTerm:
    indices: tuple[int, ...] = ()


TZERO = ThetaTerm()


def theta(i: int, arg: ThetaTerm) -> ThetaTerm:
    if i < 0:
        raise ValueError("indices are nonnegative")
    return ThetaTerm((i,) + arg.indices)


def from_indices(indices) -> ThetaTerm:
    return ThetaTerm(tuple(indices))


def is_zero(a: ThetaTerm) -> bool:
    return not a.indices


def level(a: ThetaTerm) -> int:
    """Head index; -1 for zero."""
    return a.indices[0] if a.indices else -1


def length(a: ThetaTerm) -> int:
    return len(a.indices)


def argument(a: ThetaTerm) -> ThetaTerm:
    if not a.indices:
        raise ValueError("zero has no argument")
    return ThetaTerm(a.indices[1:])


def is_wellformed(a: ThetaTerm) -> bool:
    idx = a.indices
    return all(idx[j + 1] <= idx[j] + 1 for j in range(len(idx) - 1))


def theta_validate(
    a: ThetaTerm,
    n: int | None = None,
    m: int | None = None,
    prime: bool = False,
) -> bool:
    """Membership test: indices < n, level <= m, and with ``prime`` the
    restriction that every index below n-1 is followed by exactly index+1."""
    if not is_wellformed(a):
        return False
    idx = a.indices
    if n is not None and any(i >= n for i in idx):
        return False
    if m is not None and level(a) > m:
        return False
    if prime:
        if n is None:
            raise ValueError("the restricted system needs an index bound")
        if n == 0:
            return not idx
        for j, i in enumerate(idx):
            if i < n - 1 and (j + 1 >= len(idx) or idx[j + 1] != i + 1):
                return False
    return True


def k_coeff(i: int, a: ThetaTerm) -> ThetaTerm:
    """First suffix whose head index is <= i; zero if none."""
    return ThetaTerm(_k(i, a.indices))


def _k(i: int, idx: tuple[int, ...]) -> tuple[int, ...]:
    for j, head in enumerate(idx):
        if head <= i:
            return idx[j:]
    return ()


def compare(a: ThetaTerm, b: ThetaTerm) -> int:
    return _cmp(a.indices, b.indices)


@functools.lru_cache(maxsize=1 << 18)
def _cmp(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # Suffixes are addressed by position so one memo table serves the
    # whole comparison; the coefficient jump scans forward for the first
    # index at or below the head.
    la, lb = len(a), len(b)
    memo: dict[tuple[int, int], int] = {}

    def jump(idx: tuple[int, ...], start: int, bound: int, top: int) -> int:
        for p in range(start, top):
            if idx[p] <= bound:
                return p
        return top

    def rec(i: int, j: int) -> int:
        if i == la or j == lb:
            return (i < la) - (j < lb)
        key = (i, j)
        got = memo.get(key)
        if got is not None:
            return got
        x, y = a[i], b[j]
        if x != y:
            out = -1 if x < y else 1
        else:
            c = rec(i + 1, j + 1)
            if c == 0:
                out = 0
            elif c < 0:
                # v_i s < v_i t iff k_i(s) < v_i t, given s < t
                out = -1 if rec(jump(a, i + 1, x, la), j) < 0 else 1
            else:
                # given s > t: v_i s < v_i t iff v_i s <= k_i(t)
                out = -1 if rec(i, jump(b, j + 1, x, lb)) <= 0 else 1
        memo[key] = out
        return out

    return rec(0, 0)


def gap_below(a: ThetaTerm, b: ThetaTerm) -> bool:
    """The partial suborder of the linear order (reflexive)."""
    return _gap(a.indices, b.indices)


@functools.lru_cache(maxsize=1 << 20)
def _gap(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    if not a:
        return True
    if not b:
        return False
    i = b[0]
    if _gap(a, _k(i, b[1:])):
        return True
    return a[0] == i and _gap(a[1:], b[1:])


def substitute(a: ThetaTerm, b: ThetaTerm) -> ThetaTerm:
    """Replace the final zero of a by b; b must be zero or have head index 0."""
    if level(b) > 0:
        raise ValueError("substituted term must have level <= 0")
    return ThetaTerm(a.indices + b.indices)


def to_tprime(a: ThetaTerm, n: int) -> ThetaTerm:
    """Order-preserving padding into the restricted system with indices < n:
    every node v_i becomes the run v_i v_{i+1} ... v_{n-1}."""
    if n < 1:
        raise ValueError("the index bound must be positive")
    if not theta_validate(a, n=n):
        raise ValueError("term lies outside the system being padded")
    out: list[int] = []
    for i in a.indices:
        out.extend(range(i, n))
    return ThetaTerm(tuple(out))


# --- text syntax: 0 | v{i} T, right-associated ---


def parse_theta(text: str) -> ThetaTerm:
    s = Scanner(text)
    value = parse_theta_scanner(s)
    s.expect_end()
    return value


def parse_theta_scanner(s: Scanner) -> ThetaTerm:
    indices = []
    while s.take("v"):
        indices.append(s.nat())
    s.expect("0")
    return ThetaTerm(tuple(indices))


def format_theta(a: ThetaTerm) -> str:
    return " ".join([f"v{i}" for i in a.indices] + ["0"])
