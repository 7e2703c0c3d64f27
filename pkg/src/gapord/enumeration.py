"""Deterministic bounded enumeration of every term system.

All generators emit each wellformed term exactly once, smaller sizes
first, in a fixed order, so repeated runs produce identical lists.  The
base-system generators build terms bottom-up from their construction
rules, which keeps the output closed under subterms; the restricted
variants (level caps, the primed systems, the distinguished binary
subsystem) filter or specialize them.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import btheta as bt
from . import cnf, pi, theta
from .gapseq import GapSequence, in_restricted
from .veblen import VeblenTerm

SYSTEMS = ("cnf", "veblen", "pi", "theta", "gapseq", "btheta")


@dataclass(frozen=True)
class EnumSpec:
    """What to enumerate: a system, a size bound, and its index parameters.

    ``max_size`` counts nodes (labels for gapseq).  ``n`` is the index or
    alphabet bound (subscript bound for veblen), ``m`` the level cap for
    theta or the first-label cap for gapseq.  ``variant`` selects the
    restricted subsystems: "prime" (theta), "sbar" (gapseq), "ot"/"ot0"
    (btheta).
    """

    system: str
    max_size: int
    n: int | None = None
    m: int | None = None
    variant: str = ""


_VARIANTS = {
    "cnf": ("",),
    "veblen": ("",),
    "pi": ("",),
    "theta": ("", "prime"),
    "gapseq": ("", "sbar"),
    "btheta": ("", "ot", "ot0"),
}


def enumerate_terms(spec: EnumSpec) -> list:
    if spec.system not in SYSTEMS:
        raise ValueError(f"unknown system {spec.system!r}")
    if spec.max_size < 1:
        raise ValueError("size bound must be positive")
    if spec.variant not in _VARIANTS[spec.system]:
        raise ValueError(f"unknown {spec.system} variant {spec.variant!r}")
    if spec.system != "cnf" and (spec.n is None or spec.n < 1):
        raise ValueError("an index/alphabet bound is required")
    if spec.system == "cnf":
        return list(gen_cnf(spec.max_size))
    if spec.system == "veblen":
        return gen_veblen(tuple(range(spec.n)), spec.max_size)
    if spec.system == "pi":
        return gen_pi(spec.n, spec.max_size)
    if spec.system == "theta":
        return gen_theta(spec.n, spec.max_size, m=spec.m, prime=spec.variant == "prime")
    if spec.system == "gapseq":
        return gen_gapseq(
            spec.n, spec.max_size, restricted=spec.variant == "sbar", first_max=spec.m
        )
    return gen_btheta(spec.n, spec.max_size, variant=spec.variant)


@functools.lru_cache(maxsize=None)
def gen_cnf(max_size: int) -> tuple[cnf.CnfOrdinal, ...]:
    """All normal forms of size <= max_size, ascending."""
    if max_size <= 0:
        return (cnf.ZERO,)
    exponents = sorted(
        gen_cnf(max_size - 1), key=functools.cmp_to_key(cnf.compare), reverse=True
    )
    out: list[cnf.CnfOrdinal] = []
    prefix: list[tuple[cnf.CnfOrdinal, int]] = []

    def build(budget: int, start: int) -> None:
        out.append(cnf.CnfOrdinal(tuple(prefix)))
        for idx in range(start, len(exponents)):
            e = exponents[idx]
            unit = 1 + cnf.size(e)
            coeff = 1
            while coeff * unit <= budget:
                prefix.append((e, coeff))
                build(budget - coeff * unit, idx + 1)
                prefix.pop()
                coeff += 1

    build(max_size, 0)
    out.sort(key=functools.cmp_to_key(cnf.compare))
    return tuple(out)


def gen_veblen(subs: tuple, max_nodes: int) -> list[VeblenTerm]:
    """All subscript chains of length <= max_nodes (no wellformedness side
    conditions exist for these terms)."""
    out = []
    for k in range(max_nodes + 1):
        out.extend(VeblenTerm(chain) for chain in itertools.product(subs, repeat=k))
    return out


def gen_pi(n: int, max_nodes: int) -> list[pi.PiTerm]:
    out = [pi.PZERO]
    layer = [pi.PZERO]
    for _ in range(max_nodes):
        next_layer = []
        for base in layer:
            for i in range(n):
                term = pi.collapse(i, base)
                if pi.is_wellformed(term):
                    next_layer.append(term)
        out.extend(next_layer)
        layer = next_layer
    return out


def gen_theta(
    n: int, max_lh: int, m: int | None = None, prime: bool = False
) -> list[theta.ThetaTerm]:
    out = [theta.TZERO]
    layer = [theta.TZERO]
    for _ in range(max_lh):
        next_layer = []
        for base in layer:
            top = theta.level(base)
            for i in range(n):
                if top <= i + 1:
                    next_layer.append(theta.theta(i, base))
        out.extend(next_layer)
        layer = next_layer
    if m is not None or prime:
        out = [t for t in out if theta.theta_validate(t, n=n, m=m, prime=prime)]
    return out


def gen_gapseq(
    n: int, max_len: int, restricted: bool = False, first_max: int | None = None
) -> list[GapSequence]:
    out = []
    for k in range(max_len + 1):
        for labels in itertools.product(range(n), repeat=k):
            s = GapSequence(labels, n)
            if restricted and not in_restricted(s):
                continue
            if first_max is not None and labels and labels[0] > first_max:
                continue
            out.append(s)
    return out


def gen_btheta(n: int, max_nodes: int, variant: str = "") -> list[bt.BinThetaTerm]:
    restricted = variant in ("ot", "ot0")
    by_size: list[list[bt.BinThetaTerm]] = [[bt.BZERO]]
    for k in range(1, max_nodes + 1):
        layer = []
        for i in range(n):
            for left_size in range(k):
                for left in by_size[left_size]:
                    if bt.level(left) > i + 1:
                        continue
                    if restricted and bt.k_set(i, left):
                        continue
                    for right in by_size[k - 1 - left_size]:
                        if bt.level(right) <= i:
                            layer.append(bt.BinThetaTerm(i, left, right))
        by_size.append(layer)
    out = [t for layer in by_size for t in layer]
    if variant == "ot0":
        out = [t for t in out if bt.level(t) <= 0]
    return out
