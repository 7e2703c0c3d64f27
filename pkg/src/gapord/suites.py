"""Exhaustive desk-scale property suites over the enumerated systems.

Each suite checks one family of order laws over a bounded, deterministic
enumeration and reports the number of checks performed together with any
counterexamples (expected: none).  Exhaustive enumeration is the default;
the quadratic suites accept a cap and thin the domain by a fixed stride
when it is exceeded, and the transitivity triples are always strided, so
runs stay reproducible.

Reports are line-delimited JSON records plus a readable summary; the
record content apart from the wall-time field is byte-identical across
runs with equal configuration.
"""

from __future__ import annotations

import functools
import itertools
import json
import time
from dataclasses import dataclass
from typing import Callable, IO

from . import btheta as bt
from . import cnf
from . import gapseq as gs
from . import maps, pi, theta, veblen
from .enumeration import gen_btheta, gen_cnf, gen_gapseq, gen_pi, gen_theta, gen_veblen

LISTED_LIMIT = 20


@dataclass
class SuiteReport:
    suite: str
    bounds: dict
    cases: int
    failure_count: int
    failures: list[str]
    seconds: float

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def stable_record(self) -> dict:
        return {
            "suite": self.suite,
            "bounds": self.bounds,
            "cases": self.cases,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }

    def record(self) -> dict:
        rec = self.stable_record()
        rec["seconds"] = round(self.seconds, 3)
        return rec

    def summary(self) -> str:
        verdict = "ok" if self.ok else f"{self.failure_count} counterexamples"
        return f"{self.suite}: {self.cases} cases, {verdict} ({self.seconds:.1f}s)"


class _Collector:
    def __init__(self) -> None:
        self.cases = 0
        self.count = 0
        self.listed: list[str] = []

    def case(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.count += 1
            if len(self.listed) < LISTED_LIMIT:
                self.listed.append(describe())


def _stride(items: list, cap: int | None) -> list:
    if cap is None or len(items) <= cap:
        return list(items)
    step = -(-len(items) // cap)
    return list(items[::step])


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _total_order(col: _Collector, domain: list, cmp: Callable, fmt: Callable) -> None:
    """Trichotomy over all pairs, rank agreement, strided transitivity triples."""
    n = len(domain)
    order = sorted(range(n), key=functools.cmp_to_key(lambda i, j: cmp(domain[i], domain[j])))
    rank = [0] * n
    for pos, idx in enumerate(order):
        rank[idx] = pos
    for i, a in enumerate(domain):
        col.case(cmp(a, a) == 0, lambda a=a: f"{fmt(a)} does not equal itself")
    for i in range(n):
        a, ra = domain[i], rank[i]
        for j in range(i + 1, n):
            b = domain[j]
            c1, c2 = cmp(a, b), cmp(b, a)
            ok = c1 != 0 and c1 == -c2 and (c1 < 0) == (ra < rank[j])
            col.case(ok, lambda a=a, b=b, c1=c1, c2=c2: f"{fmt(a)} vs {fmt(b)}: {c1}/{c2}")
    step = max(1, n // 60)
    for i in range(0, n, step):
        for j in range(i + 1, n, step):
            cij = cmp(domain[i], domain[j])
            for k in range(j + 1, n, step):
                cjk = cmp(domain[j], domain[k])
                cik = cmp(domain[i], domain[k])
                ok = not (cij == cjk != 0 and cik != cij)
                col.case(
                    ok,
                    lambda i=i, j=j, k=k: "cycle among "
                    + ", ".join(fmt(domain[x]) for x in (i, j, k)),
                )


def suite_order_cnf(max_size: int = 6, cap: int = 5000) -> tuple[dict, _Collector]:
    col = _Collector()
    _total_order(col, _stride(list(gen_cnf(max_size)), cap), cnf.compare, cnf.format_cnf)
    return {"max_size": max_size, "cap": cap}, col


def suite_order_veblen(n: int = 3, max_size: int = 6, cap: int = 5000) -> tuple[dict, _Collector]:
    col = _Collector()
    domain = _stride(gen_veblen(tuple(range(n)), max_size), cap)
    _total_order(col, domain, veblen.compare_nat_subs, veblen.format_veblen)
    return {"n": n, "max_size": max_size, "cap": cap}, col


def suite_order_pi(n: int = 3, max_size: int = 6, cap: int = 5000) -> tuple[dict, _Collector]:
    col = _Collector()
    _total_order(col, _stride(gen_pi(n, max_size), cap), pi.compare, pi.format_pi)
    return {"n": n, "max_size": max_size, "cap": cap}, col


def suite_order_theta(n: int = 3, max_size: int = 6, cap: int = 5000) -> tuple[dict, _Collector]:
    col = _Collector()
    for k in range(1, n + 1):
        _total_order(col, _stride(gen_theta(k, max_size), cap), theta.compare, theta.format_theta)
    return {"n": n, "max_size": max_size, "cap": cap}, col


def suite_order_btheta(n: int = 3, max_size: int = 6, cap: int = 5000) -> tuple[dict, _Collector]:
    """Totality holds on the distinguished subsystem; unrestricted terms
    admit incomparable pairs (see suite_btheta_laws), so the order axioms
    are checked over the subsystem enumeration."""
    col = _Collector()
    for k in range(1, n + 1):
        domain = _stride(gen_btheta(k, max_size, "ot"), cap)
        _total_order(col, domain, bt.compare, bt.format_btheta)
    return {"n": n, "max_size": max_size, "cap": cap, "variant": "ot"}, col


def suite_embed_iso(n: int = 3, max_lh: int = 5) -> tuple[dict, _Collector]:
    """Reading terms as label sequences turns the gap suborder into strong
    gap-embeddability, bijectively."""
    col = _Collector()
    for k in range(1, n + 1):
        dom = gen_theta(k, max_lh)
        seqs = [gs.seq_of_term(t, k) for t in dom]
        for t, s in zip(dom, seqs):
            col.case(
                gs.in_restricted(s) and gs.term_of_seq(s) == t,
                lambda t=t: f"round trip failed for {theta.format_theta(t)}",
            )
        expected = {s.labels for s in gen_gapseq(k, max_lh, restricted=True)}
        col.case(
            {s.labels for s in seqs} == expected,
            lambda k=k: f"images do not exhaust the restricted sequences over {k} labels",
        )
        for a, sa in zip(dom, seqs):
            for b, sb in zip(dom, seqs):
                col.case(
                    theta.gap_below(a, b) == gs.gap_leq(sa, sb, "strong"),
                    lambda a=a, b=b: f"{theta.format_theta(a)} vs {theta.format_theta(b)}",
                )
    return {"n": n, "max_lh": max_lh}, col


def suite_gap_implies_linear(n: int = 3, max_lh: int = 5) -> tuple[dict, _Collector]:
    col = _Collector()
    dom = gen_theta(n, max_lh)
    for a in dom:
        for b in dom:
            col.case(
                not theta.gap_below(a, b) or theta.compare(a, b) <= 0,
                lambda a=a, b=b: f"{theta.format_theta(a)} gap-below but not <= {theta.format_theta(b)}",
            )
    return {"n": n, "max_lh": max_lh}, col


def suite_seq_decompose(n: int = 2, max_len: int = 6) -> tuple[dict, _Collector]:
    """Splitting at the zeros is an order isomorphism onto head x block list
    under (strong gap, subsequence-of-strong-gap), and inverts exactly."""
    col = _Collector()
    for alphabet in range(1, n + 2):
        dom = gen_gapseq(alphabet, max_len)
        split = [gs.h_split(s) for s in dom]
        for s, (head, parts) in zip(dom, split):
            col.case(
                gs.h_unsplit(head, parts) == s,
                lambda s=s: f"round trip failed for {gs.format_seq(s)}",
            )
        elem = lambda x, y: gs.gap_leq(x, y, "strong")
        for s, (hs, ps) in zip(dom, split):
            for t, (ht, pt) in zip(dom, split):
                lhs = gs.gap_leq(s, t, "strong")
                rhs = gs.gap_leq(hs, ht, "strong") and gs.higman_leq(ps, pt, elem)
                col.case(
                    lhs == rhs,
                    lambda s=s, t=t: f"{gs.format_seq(s)} vs {gs.format_seq(t)}: "
                    f"direct {lhs}, decomposed {rhs}",
                )
    return {"n": n, "max_len": max_len}, col


def suite_quasi_embedding(n: int = 3, max_len: int = 5) -> tuple[dict, _Collector]:
    """Prepending a zero quasi-embeds the weak order into its first-label-0 part."""
    col = _Collector()
    dom = gen_gapseq(n, max_len)
    ext = {s: gs.GapSequence((0,) + s.labels, n) for s in dom}
    for s in dom:
        for t in dom:
            col.case(
                not gs.gap_leq(ext[s], ext[t], "weak") or gs.gap_leq(s, t, "weak"),
                lambda s=s, t=t: f"0-prefixed {gs.format_seq(s)} vs {gs.format_seq(t)}",
            )
    return {"n": n, "max_len": max_len}, col


def suite_gap_order_axioms(n: int = 3, max_len: int = 5) -> tuple[dict, _Collector]:
    """Reflexivity, transitivity, antisymmetry; strong embeds imply weak."""
    col = _Collector()
    dom = gen_gapseq(n, max_len)
    for mode in gs.MODES:
        rel = {
            (s.labels, t.labels) for s in dom for t in dom if gs.gap_leq(s, t, mode)
        }
        for s in dom:
            col.case((s.labels, s.labels) in rel, lambda s=s, m=mode: f"{m}: not reflexive at {gs.format_seq(s)}")
        for a, b in rel:
            col.case(
                a == b or (b, a) not in rel,
                lambda a=a, b=b, m=mode: f"{m}: antisymmetry fails at {a} vs {b}",
            )
        for a, b in rel:
            for c in dom:
                if (b, c) in rel:
                    col.case(
                        (a, c) in rel,
                        lambda a=a, b=b, c=c, m=mode: f"{m}: transitivity fails {a},{b},{c}",
                    )
    strong = {(s.labels, t.labels) for s in dom for t in dom if gs.gap_leq(s, t, "strong")}
    weak = {(s.labels, t.labels) for s in dom for t in dom if gs.gap_leq(s, t, "weak")}
    col.case(strong <= weak, lambda: "a strong embed is not a weak embed")
    return {"n": n, "max_len": max_len}, col


def suite_coeff_laws(n: int = 3, max_lh: int = 5) -> tuple[dict, _Collector]:
    """Coefficient and substitution laws of the unary system."""
    col = _Collector()
    dom = gen_theta(n, max_lh)
    low = [c for c in dom if theta.level(c) <= 0]
    ft = theta.format_theta
    for a in dom:
        for i in range(n):
            k = theta.k_coeff(i, a)
            col.case(theta.compare(k, a) <= 0, lambda a=a, i=i: f"k_{i} above {ft(a)}")
            if theta.level(a) <= i + 1:
                col.case(
                    theta.compare(k, theta.theta(i, a)) < 0,
                    lambda a=a, i=i: f"k_{i}({ft(a)}) not below v{i} {ft(a)}",
                )
            for c in low:
                col.case(
                    theta.substitute(k, c) == theta.k_coeff(i, theta.substitute(a, c)),
                    lambda a=a, c=c, i=i: f"k_{i} does not commute with [{ft(c)}] on {ft(a)}",
                )
    for a in dom:
        for c in low:
            sub = theta.substitute(a, c)
            cmp = theta.compare(c, sub)
            col.case(
                cmp < 0 or (cmp == 0 and theta.is_zero(a)),
                lambda a=a, c=c: f"{ft(c)} not below {ft(a)}[{ft(c)}]",
            )
    for a in dom:
        for b in dom:
            if theta.compare(a, b) < 0:
                for c in low:
                    col.case(
                        theta.compare(theta.substitute(a, c), theta.substitute(b, c)) < 0,
                        lambda a=a, b=b, c=c: f"substitution of {ft(c)} breaks {ft(a)} < {ft(b)}",
                    )
    return {"n": n, "max_lh": max_lh}, col


def _check_mono(col: _Collector, domain: list, images: list, cmp_dom, cmp_img, fmt) -> None:
    """Strict order preservation: sign agreement on every pair."""
    n = len(domain)
    for i in range(n):
        for j in range(i + 1, n):
            cd = _sign(cmp_dom(domain[i], domain[j]))
            ci = _sign(cmp_img(images[i], images[j]))
            col.case(
                cd != 0 and cd == ci,
                lambda i=i, j=j, cd=cd, ci=ci: f"{fmt(domain[i])} vs {fmt(domain[j])}: "
                f"domain {cd}, image {ci}",
            )


def suite_chi_iso(sub_max: int = 4, max_nodes: int = 5, cap: int | None = None) -> tuple[dict, _Collector]:
    """The word translation of natural-subscript terms is a bijection onto
    the two-index words led by index 0, and an order isomorphism."""
    col = _Collector()
    dom = _stride(gen_veblen(tuple(range(sub_max + 1)), max_nodes), cap)
    images = [maps.chi(t) for t in dom]
    for t, im in zip(dom, images):
        col.case(
            theta.theta_validate(im, n=2, m=0),
            lambda t=t: f"image of {veblen.format_veblen(t)} outside the target",
        )
        col.case(
            maps.chi_inverse(im) == t,
            lambda t=t: f"decode mismatch at {veblen.format_veblen(t)}",
        )
    col.case(len(set(images)) == len(dom), lambda: "images collide")
    if cap is None:
        expected = {()}
        for blocks in range(1, max_nodes + 1):
            for runs in itertools.product(range(sub_max + 1), repeat=blocks):
                word: tuple[int, ...] = ()
                for r in runs:
                    word += (0,) + (1,) * r
                expected.add(word)
        col.case(
            {im.indices for im in images} == expected,
            lambda: "image set differs from the independently enumerated words",
        )
    _check_mono(col, dom, images, veblen.compare_nat_subs, theta.compare, veblen.format_veblen)
    return {"sub_max": sub_max, "max_nodes": max_nodes, "cap": cap}, col


def suite_chi_std(max_size: int = 8, cap: int | None = None) -> tuple[dict, _Collector]:
    """The digit-expansion translation agrees with the subscript decoding
    and preserves order strictly."""
    col = _Collector()
    top = cnf.omega_tower(3)
    dom = _stride([a for a in gen_cnf(max_size) if cnf.compare(a, top) < 0], cap)
    images = [maps.chi_std(a) for a in dom]
    decoded = []
    for a, im in zip(dom, images):
        col.case(
            theta.theta_validate(im, n=2, m=0),
            lambda a=a: f"image of {cnf.format_cnf(a)} outside the target",
        )
        u = maps.chi_inverse(im)
        decoded.append(u)
        col.case(
            maps.chi(u) == im,
            lambda a=a: f"decode round trip fails at {cnf.format_cnf(a)}",
        )
    _check_mono(col, dom, images, cnf.compare, theta.compare, cnf.format_cnf)
    _check_mono(col, dom, decoded, cnf.compare, veblen.compare_nat_subs, cnf.format_cnf)
    return {"max_size": max_size, "cap": cap}, col


def suite_psi_mono(n: int = 2, max_phi: int = 4, max_sub_nodes: int = 3) -> tuple[dict, _Collector]:
    """Folding terms over head-index-0 collapsing subscripts lands in the
    level-0 part of the unary system and preserves order strictly."""
    col = _Collector()
    for k in range(1, n + 1):
        subs = tuple(
            p for p in gen_pi(k, max_sub_nodes) if p.indices and p.indices[0] == 0
        )
        dom = gen_veblen(subs, max_phi)
        images = [maps.psi_map(t, k) for t in dom]
        for t, im in zip(dom, images):
            col.case(
                theta.theta_validate(im, n=k + 1, m=0),
                lambda t=t, k=k: f"image outside the system with {k + 1} indices",
            )
        cmp_dom = lambda a, b: veblen.compare(a, b, pi.compare)
        fmt = lambda t: veblen.format_veblen(t, pi.format_pi)
        _check_mono(col, dom, images, cmp_dom, theta.compare, fmt)
    return {"n": n, "max_phi": max_phi, "max_sub_nodes": max_sub_nodes}, col


def suite_tprime_mono(n: int = 3, max_lh: int = 5) -> tuple[dict, _Collector]:
    """Padding into the successor-run restricted system is injective,
    lands inside it, and preserves order strictly."""
    col = _Collector()
    for k in range(1, n + 1):
        dom = gen_theta(k, max_lh)
        images = [theta.to_tprime(t, k) for t in dom]
        for t, im in zip(dom, images):
            col.case(
                theta.theta_validate(im, n=k, prime=True),
                lambda t=t, k=k: f"padded {theta.format_theta(t)} not in the restricted system",
            )
        col.case(len(set(images)) == len(dom), lambda k=k: f"padding collides at bound {k}")
        _check_mono(col, dom, images, theta.compare, theta.compare, theta.format_theta)
    return {"n": n, "max_lh": max_lh}, col


def suite_tau_laws(n_values: tuple = (1, 2), max_lh: int = 6) -> tuple[dict, _Collector]:
    """Tuple normal form laws: component invariants, middle coefficient,
    omega-coefficient bounds, strict monotonicity, tower bound, anchors."""
    col = _Collector()
    ft = theta.format_theta
    for n in n_values:
        for m in range(0, n + 2):
            dom = [
                t
                for t in gen_theta(n + 1, max_lh)
                if theta.theta_validate(t, n=n + 1, m=m, prime=True)
            ]
            images = [maps.tau(m, t, n) for t in dom]
            for t, im in zip(dom, images):
                if m == 0:
                    assert isinstance(im, cnf.CnfOrdinal)
                    col.case(
                        cnf.is_zero(im) or cnf.is_successor(im),
                        lambda t=t: f"level-0 image of {ft(t)} is a limit",
                    )
                    col.case(
                        maps.tau0_bound(t, n),
                        lambda t=t, n=n: f"image of {ft(t)} reaches the height-{n + 2} tower",
                    )
                else:
                    assert isinstance(im, maps.OmegaTuple)
                    col.case(
                        not maps.tuple_invariant_failures(im),
                        lambda t=t: f"tuple invariants fail at {ft(t)}",
                    )
                    col.case(
                        im.theta_part == theta.k_coeff(m - 1, t),
                        lambda t=t, m=m: f"middle of level-{m} image of {ft(t)} is not the coefficient",
                    )
                    if m - 1 < n:
                        col.case(
                            cnf.compare(im.omega_coeff, cnf.omega_tower(n - m + 1)) < 0,
                            lambda t=t, m=m, n=n: f"omega coefficient of {ft(t)} too big at level {m}",
                        )
                    else:
                        col.case(
                            cnf.is_zero(im.omega_coeff),
                            lambda t=t, m=m: f"omega coefficient of {ft(t)} nonzero at level {m}",
                        )
            cmp_img = cnf.compare if m == 0 else maps.tuple_compare
            _check_mono(col, dom, images, theta.compare, cmp_img, ft)
    anchors = [
        ("v0 0", 1, cnf.ONE),
        ("v0 v0 0", 1, cnf.add(cnf.OMEGA, cnf.ONE)),
    ]
    for text, n, want in anchors:
        got = maps.tau(0, theta.parse_theta(text), n)
        col.case(
            got == want,
            lambda text=text, got=got, want=want: f"anchor {text}: got {got!r}, want {want!r}",
        )
    t11 = maps.tau(1, theta.parse_theta("v1 0"), 1)
    assert isinstance(t11, maps.OmegaTuple)
    col.case(
        (t11.omega_coeff, t11.theta_part, t11.tail) == (cnf.ONE, theta.TZERO, cnf.ONE),
        lambda: f"anchor v1 0 at level 1: got {t11!r}",
    )
    return {"n_values": list(n_values), "max_lh": max_lh}, col


def suite_btheta_laws(n: int = 3, max_size: int = 6) -> tuple[dict, _Collector]:
    """Right argument strictly below its node on the distinguished
    subsystem; never above it on unrestricted terms."""
    col = _Collector()
    for k in range(1, n + 1):
        for t in gen_btheta(k, max_size, "ot"):
            if not bt.is_zero(t):
                col.case(
                    bt.lt(t.right, t),
                    lambda t=t: f"right argument not below {bt.format_btheta(t)}",
                )
    for t in gen_btheta(n, max_size):
        if not bt.is_zero(t):
            col.case(
                not bt.lt(t, t.right),
                lambda t=t: f"{bt.format_btheta(t)} below its own right argument",
            )
    return {"n": n, "max_size": max_size}, col


def suite_shift_down(n: int = 3, max_size: int = 6, cap: int = 3000) -> tuple[dict, _Collector]:
    """Decrementing indices preserves strict order and commutes with the
    coefficient sets, on terms without index-0 nodes."""
    col = _Collector()
    dom = _stride(
        [t for t in gen_btheta(n, max_size) if not bt.k_set(0, t)], cap
    )
    shifted = [bt.shift_down(t) for t in dom]
    for t, sh in zip(dom, shifted):
        col.case(
            bt.is_wellformed_bounded(sh, n - 1),
            lambda t=t: f"shift of {bt.format_btheta(t)} malformed",
        )
        for i in range(n - 1):
            col.case(
                frozenset(bt.shift_down(x) for x in bt.k_set(i + 1, t)) == bt.k_set(i, sh),
                lambda t=t, i=i: f"coefficient sets do not commute at index {i + 1} on {bt.format_btheta(t)}",
            )
    for a, sa in zip(dom, shifted):
        for b, sb in zip(dom, shifted):
            if bt.lt(a, b):
                col.case(
                    bt.lt(sa, sb),
                    lambda a=a, b=b: f"shift breaks {bt.format_btheta(a)} < {bt.format_btheta(b)}",
                )
    return {"n": n, "max_size": max_size, "cap": cap}, col


def suite_o_value(n: int = 3, max_size: int = 6) -> tuple[dict, _Collector]:
    """Evaluation into leveled values preserves order strictly; the level-1
    value counts nodes."""
    col = _Collector()
    for k in range(1, n + 1):
        dom = gen_btheta(k, max_size, "ot0")
        images = [bt.o_value(t, k) for t in dom]
        _check_mono(col, dom, images, bt.compare, veblen.leveled_compare, bt.format_btheta)
    anchor = bt.parse_btheta("th0(0, th0(0, 0))")
    col.case(
        bt.o_value(anchor, 1) == veblen.leveled_nat(2),
        lambda: "node count anchor failed",
    )
    return {"n": n, "max_size": max_size}, col


def suite_seq_embed(n: int = 3, max_len: int = 6) -> tuple[dict, _Collector]:
    """Embedding restricted sequences into the binary subsystem turns
    strong gap-embeddability into the term order (a linear extension)."""
    col = _Collector()
    for k in range(1, n + 1):
        dom = gen_gapseq(k, max_len, restricted=True)
        images = [bt.embed_seq(s) for s in dom]
        for s, im in zip(dom, images):
            col.case(
                bt.in_ot(im, k),
                lambda s=s: f"image of {gs.format_seq(s)} outside the subsystem",
            )
        col.case(len(set(images)) == len(dom), lambda k=k: f"embedding collides at {k} labels")
        for s, fs in zip(dom, images):
            for t, ftm in zip(dom, images):
                if gs.gap_leq(s, t, "strong"):
                    col.case(
                        bt.le(fs, ftm),
                        lambda s=s, t=t: f"{gs.format_seq(s)} embeds in {gs.format_seq(t)} "
                        "but the images reverse",
                    )
    return {"n": n, "max_len": max_len}, col


def suite_f_hat(max_size: int = 8) -> tuple[dict, _Collector]:
    """Padding function: strictly monotone, squeezed between the leading
    power and its successor power, and consistent on absorbed sums."""
    col = _Collector()
    dom = list(gen_cnf(max_size))
    images = [cnf.f_hat(a) for a in dom]
    fmt = cnf.format_cnf
    _check_mono(col, dom, images, cnf.compare, cnf.compare, fmt)
    for a, fa in zip(dom, images):
        if not cnf.is_zero(a):
            lead = cnf.omega_power(a.terms[0][0])
            above = cnf.omega_power(cnf.add(a.terms[0][0], cnf.ONE))
            col.case(
                cnf.compare(lead, fa) <= 0 and cnf.compare(fa, above) < 0,
                lambda a=a: f"padding of {fmt(a)} escapes its power window",
            )
    for x, fx in zip(dom, images):
        p = cnf.omega_power(x)
        for y, fy in zip(dom, images):
            if cnf.add(p, y) == y:
                col.case(
                    cnf.add(p, cnf.add(fx, fy)) == fy,
                    lambda x=x, y=y: f"absorbed identity fails for w^({fmt(x)}) into {fmt(y)}",
                )
    return {"max_size": max_size}, col


def suite_gap_dp_oracle(n: int = 3, max_len: int = 7) -> tuple[dict, _Collector]:
    """The reachability sweep agrees with trying every increasing map."""
    col = _Collector()
    dom = gen_gapseq(n, max_len)
    decide = gs._gap_leq.__wrapped__
    brute = gs.gap_leq_bruteforce
    for s in dom:
        for t in dom:
            for mode, strong in (("weak", False), ("strong", True)):
                col.case(
                    decide(s.labels, t.labels, strong) == brute(s, t, mode),
                    lambda s=s, t=t, mode=mode: f"{mode}: {gs.format_seq(s)} vs {gs.format_seq(t)}",
                )
    return {"n": n, "max_len": max_len}, col


def suite_star_type_values() -> tuple[dict, _Collector]:
    col = _Collector()
    w = cnf.OMEGA
    checks = [
        (cnf.mot_star(cnf.from_int(2)), cnf.omega_power(w), "two"),
        (cnf.mot_star(cnf.ONE), w, "one"),
        (cnf.mot_star(w), cnf.omega_power(cnf.omega_power(w)), "omega"),
    ]
    for got, want, name in checks:
        col.case(got == want, lambda got=got, want=want, name=name: f"{name}: {got!r} != {want!r}")
    try:
        cnf.mot_star(cnf.ZERO)
        col.case(False, lambda: "zero argument was accepted")
    except ValueError:
        col.case(True, lambda: "")
    return {}, col


def suite_enum_laws(n: int = 3, max_size: int = 6) -> tuple[dict, _Collector]:
    """Counts of unary terms match counts of restricted sequences, both
    independently enumerated; enumerations are stable and closed under
    immediate subterms."""
    col = _Collector()
    for k in range(1, n + 1):
        terms = gen_theta(k, max_size)
        seqs = gen_gapseq(k, max_size, restricted=True)
        col.case(
            len(terms) == len(seqs),
            lambda k=k: f"term and sequence counts differ over {k} labels",
        )
    col.case(gen_theta(n, max_size) == gen_theta(n, max_size), lambda: "theta enumeration unstable")
    col.case(gen_btheta(n, max_size) == gen_btheta(n, max_size), lambda: "btheta enumeration unstable")
    theta_set = set(gen_theta(n, max_size))
    col.case(
        all(theta.argument(t) in theta_set for t in theta_set if not theta.is_zero(t)),
        lambda: "theta enumeration not closed under arguments",
    )
    pi_set = set(gen_pi(n, max_size))
    col.case(
        all(pi.argument(t) in pi_set for t in pi_set if not pi.is_zero(t)),
        lambda: "pi enumeration not closed under arguments",
    )
    bset = set(gen_btheta(n, max_size))
    col.case(
        all(t.left in bset and t.right in bset for t in bset if not bt.is_zero(t)),
        lambda: "btheta enumeration not closed under children",
    )
    cnf_set = set(gen_cnf(max_size))
    col.case(
        all(e in cnf_set for a in cnf_set for e, _ in a.terms),
        lambda: "cnf enumeration not closed under exponents",
    )
    return {"n": n, "max_size": max_size}, col


SUITES: dict[str, Callable[..., tuple[dict, _Collector]]] = {
    "order-cnf": suite_order_cnf,
    "order-veblen": suite_order_veblen,
    "order-pi": suite_order_pi,
    "order-theta": suite_order_theta,
    "order-btheta": suite_order_btheta,
    "embed-iso": suite_embed_iso,
    "gap-implies-linear": suite_gap_implies_linear,
    "seq-decompose": suite_seq_decompose,
    "quasi-embedding": suite_quasi_embedding,
    "gap-order-axioms": suite_gap_order_axioms,
    "coeff-laws": suite_coeff_laws,
    "chi-iso": suite_chi_iso,
    "chi-std-mono": suite_chi_std,
    "psi-mono": suite_psi_mono,
    "tprime-mono": suite_tprime_mono,
    "tau-laws": suite_tau_laws,
    "btheta-laws": suite_btheta_laws,
    "shift-down": suite_shift_down,
    "o-value-mono": suite_o_value,
    "seq-embed": suite_seq_embed,
    "f-hat-laws": suite_f_hat,
    "gap-dp-oracle": suite_gap_dp_oracle,
    "star-type-values": suite_star_type_values,
    "enum-laws": suite_enum_laws,
}


def run_suite(name: str, **overrides) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    fn = SUITES[name]
    allowed = fn.__code__.co_varnames[: fn.__code__.co_argcount]
    kwargs = {k: v for k, v in overrides.items() if k in allowed and v is not None}
    start = time.perf_counter()
    bounds, col = fn(**kwargs)
    seconds = time.perf_counter() - start
    return SuiteReport(name, bounds, col.cases, col.count, col.listed, seconds)


def run_all(names: list[str] | None = None, **overrides) -> list[SuiteReport]:
    return [run_suite(name, **overrides) for name in (names or list(SUITES))]


def emit(reports: list[SuiteReport], stream: IO[str]) -> None:
    for r in reports:
        stream.write(json.dumps(r.record(), sort_keys=True) + "\n")
    total = sum(r.failure_count for r in reports)
    for r in reports:
        stream.write(r.summary() + "\n")
    stream.write(f"total: {sum(r.cases for r in reports)} cases, {total} counterexamples\n")
