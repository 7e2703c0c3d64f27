"""Finite label sequences with the weak and strong gap-embeddability orders.

``gap_leq`` decides whether s embeds into t by a strictly increasing map
that preserves labels and only jumps over labels at least as large as the
label being placed; the strong mode also constrains the prefix before the
first image position.  The decision procedure is a forward reachability
sweep over image positions (polynomial); ``gap_leq_bruteforce`` checks
every strictly increasing map directly and exists purely as an oracle for
the sweep.

``h_split`` decomposes a sequence over n+1 labels at its zeros into a
head and a list of blocks over n labels (all labels shifted down by one);
``h_unsplit`` inverts it.  ``higman_leq`` is the plain subsequence
embedding over an arbitrary element order, used to order the block lists.

``seq_of_term``/``term_of_seq`` transport unary collapsing terms to the
adjacency-restricted sequences (labels may rise by at most one), matching
the term gap suborder with the strong sequence order.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from .syntax import Scanner
from .theta import ThetaTerm

MODES = ("weak", "strong")


@dataclass(frozen=True)
class GapSequence:
    labels: tuple[int, ...]
    bound: int

    def __post_init__(self) -> None:
        if self.bound < 0:
            raise ValueError("alphabet bound must be nonnegative")
        for lab in self.labels:
            if not 0 <= lab < self.bound:
                raise ValueError(f"label {lab} outside alphabet 0..{self.bound - 1}")


def seq(labels: Sequence[int], bound: int) -> GapSequence:
    return GapSequence(tuple(labels), bound)


def in_restricted(s: GapSequence) -> bool:
    """Adjacent labels may rise by at most one."""
    lab = s.labels
    return all(lab[j] - lab[j + 1] >= -1 for j in range(len(lab) - 1))


def _check_mode(mode: str) -> bool:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    return mode == "strong"


def gap_leq(s: GapSequence, t: GapSequence, mode: str) -> bool:
    if s.bound != t.bound:
        raise ValueError("sequences must share an alphabet bound")
    return _gap_leq(s.labels, t.labels, _check_mode(mode))


@functools.lru_cache(maxsize=1 << 20)
def _gap_leq(s: tuple[int, ...], t: tuple[int, ...], strong: bool) -> bool:
    k, l = len(s), len(t)
    if k == 0:
        return True
    if k > l:
        return False
    # reach = positions of t that can serve as the image of the prefix end
    first = s[0]
    reach = []
    for j in range(l):
        v = t[j]
        if v == first:
            reach.append(j)
        elif strong and v < first:
            break  # any later image would see this small label in its prefix
    if not reach:
        return False
    for i in range(1, k):
        c = s[i]
        new: list[int] = []
        for j in reach:
            for j2 in range(j + 1, l):
                v = t[j2]
                if v == c and j2 not in new:
                    new.append(j2)
                if v < c:
                    break  # labels between j and the image must be >= c
        if not new:
            return False
        reach = new
    return True


def gap_leq_bruteforce(s: GapSequence, t: GapSequence, mode: str) -> bool:
    """Try every strictly increasing position map; oracle for gap_leq."""
    if s.bound != t.bound:
        raise ValueError("sequences must share an alphabet bound")
    strong = _check_mode(mode)
    ls, lt = s.labels, t.labels
    k = len(ls)
    for f in combinations(range(len(lt)), k):
        if any(lt[f[i]] != ls[i] for i in range(k)):
            continue
        if any(
            lt[x] < ls[i + 1]
            for i in range(k - 1)
            for x in range(f[i] + 1, f[i + 1])
        ):
            continue
        if strong and k and any(lt[x] < ls[0] for x in range(f[0])):
            continue
        return True
    return False


def higman_leq(xs: Sequence, ys: Sequence, elem_leq: Callable) -> bool:
    """Subsequence embedding under elem_leq (greedy leftmost match)."""
    j = 0
    for x in xs:
        while j < len(ys) and not elem_leq(x, ys[j]):
            j += 1
        if j == len(ys):
            return False
        j += 1
    return True


def h_split(s: GapSequence) -> tuple[GapSequence, tuple[GapSequence, ...]]:
    """Split at the zeros: the blocks between them, shifted down a label.

    The k zeros of s separate k+1 blocks (the head and k parts); every
    block label is >= 1 and comes out decremented.
    """
    if s.bound < 1:
        raise ValueError("need at least one label value")
    blocks: list[list[int]] = [[]]
    for lab in s.labels:
        if lab == 0:
            blocks.append([])
        else:
            blocks[-1].append(lab - 1)
    n = s.bound - 1
    head, *parts = (GapSequence(tuple(b), n) for b in blocks)
    return head, tuple(parts)


def h_unsplit(head: GapSequence, parts: tuple[GapSequence, ...]) -> GapSequence:
    labels = [lab + 1 for lab in head.labels]
    for p in parts:
        if p.bound != head.bound:
            raise ValueError("blocks must share an alphabet bound")
        labels.append(0)
        labels.extend(lab + 1 for lab in p.labels)
    return GapSequence(tuple(labels), head.bound + 1)


def seq_of_term(a: ThetaTerm, n: int) -> GapSequence:
    """Read off the index chain of a term with indices < n."""
    return GapSequence(a.indices, n)


def term_of_seq(s: GapSequence) -> ThetaTerm:
    if not in_restricted(s):
        raise ValueError("labels rise by more than one; no term corresponds")
    return ThetaTerm(s.labels)


# --- text syntax: digit string (alphabet sizes up to 10), eps for empty ---


def parse_seq(text: str, bound: int) -> GapSequence:
    s = Scanner(text)
    if s.at_end() or s.take("eps"):
        s.expect_end()
        return GapSequence((), bound)
    labels = []
    while not s.at_end():
        ch = s.peek()
        if not ch.isdigit():
            s.error("expected a digit")
        s.take(ch)
        labels.append(int(ch))
    return GapSequence(tuple(labels), bound)


def format_seq(s: GapSequence) -> str:
    if not s.labels:
        return "eps"
    if any(lab > 9 for lab in s.labels):
        raise ValueError("digit syntax covers labels 0..9 only")
    return "".join(str(lab) for lab in s.labels)
