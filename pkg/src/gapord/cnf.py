"""Cantor normal form arithmetic for ordinals below epsilon_0.

An ordinal is a finite descending sum ``w^e1*c1 + ... + w^ek*ck`` with
exponents e1 > ... > ek (themselves in normal form) and integer
coefficients >= 1; the empty sum is 0.  There is no unnormalized value:
every constructor yields normal form.  Values are immutable and hashable,
all operations are pure, so sharing across threads is safe.

Besides comparison and the (left-absorbing) ordinal sum, the module
provides the commutative natural sum/product, omega-power towers, the
order-preserving padding function ``f_hat`` with
``w^e <= f_hat(w^e + rest) < w^(e+1)``, and the closed formula
``mot_star`` for the maximal order type of finite sequences over a
well-partial-order of a given maximal order type.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .syntax import Scanner, TermSyntaxError


@dataclass(frozen=True)
class CnfOrdinal:
    """Descending list of (exponent, coefficient) pairs; () is zero."""

    terms: tuple[tuple["CnfOrdinal", int], ...] = ()

    def __post_init__(self) -> None:
        for _, c in self.terms:
            if c < 1:
                raise ValueError("coefficients must be positive")
        for (e1, _), (e2, _) in zip(self.terms, self.terms[1:]):
            if compare(e1, e2) <= 0:
                raise ValueError("exponents must be strictly decreasing")

    def __lt__(self, other: "CnfOrdinal") -> bool:
        return compare(self, other) < 0

    def __le__(self, other: "CnfOrdinal") -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other: "CnfOrdinal") -> bool:
        return compare(self, other) > 0

    def __ge__(self, other: "CnfOrdinal") -> bool:
        return compare(self, other) >= 0

    def __add__(self, other: "CnfOrdinal") -> "CnfOrdinal":
        return add(self, other)

    def __repr__(self) -> str:
        return f"CnfOrdinal<{format_cnf(self)}>"


ZERO = CnfOrdinal()
ONE = CnfOrdinal(((ZERO, 1),))


def from_int(k: int) -> CnfOrdinal:
    if k < 0:
        raise ValueError("ordinals are nonnegative")
    return CnfOrdinal(((ZERO, k),)) if k else ZERO


def omega_power(e: CnfOrdinal) -> CnfOrdinal:
    """w^e as a single-term normal form."""
    return CnfOrdinal(((e, 1),))


OMEGA = omega_power(ONE)


def is_zero(a: CnfOrdinal) -> bool:
    return not a.terms


def is_finite(a: CnfOrdinal) -> bool:
    return not a.terms or (len(a.terms) == 1 and a.terms[0][0] == ZERO)


def to_int(a: CnfOrdinal) -> int:
    if not is_finite(a):
        raise ValueError(f"{a!r} is infinite")
    return a.terms[0][1] if a.terms else 0


def is_successor(a: CnfOrdinal) -> bool:
    return bool(a.terms) and a.terms[-1][0] == ZERO


def compare(a: CnfOrdinal, b: CnfOrdinal) -> int:
    """Three-way order: -1, 0 or 1.

    Lexicographic on the term lists, exponents compared recursively; a
    proper prefix is smaller.  This agrees with the order on ordinal
    values.
    """
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def add(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Ordinal sum a + b; terms of a below the lead exponent of b are absorbed."""
    if not b.terms:
        return a
    lead = b.terms[0][0]
    kept = []
    for e, c in a.terms:
        s = compare(e, lead)
        if s > 0:
            kept.append((e, c))
        elif s == 0:
            return CnfOrdinal(tuple(kept) + ((lead, c + b.terms[0][1]),) + b.terms[1:])
        else:
            break
    return CnfOrdinal(tuple(kept) + b.terms)


def nat_sum(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Commutative (natural) sum: merge term lists, collecting equal exponents."""
    out: list[tuple[CnfOrdinal, int]] = []
    i, j = 0, 0
    while i < len(a.terms) and j < len(b.terms):
        (ea, ca), (eb, cb) = a.terms[i], b.terms[j]
        s = compare(ea, eb)
        if s > 0:
            out.append((ea, ca))
            i += 1
        elif s < 0:
            out.append((eb, cb))
            j += 1
        else:
            out.append((ea, ca + cb))
            i += 1
            j += 1
    out.extend(a.terms[i:])
    out.extend(b.terms[j:])
    return CnfOrdinal(tuple(out))


def nat_prod(a: CnfOrdinal, b: CnfOrdinal) -> CnfOrdinal:
    """Commutative (natural) product: distribute, w^x*m times w^y*n = w^(x(+)y)*(mn)."""
    result = ZERO
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            result = nat_sum(result, CnfOrdinal(((nat_sum(ea, eb), ca * cb),)))
    return result


def mul_omega_power(e: CnfOrdinal, z: CnfOrdinal) -> CnfOrdinal:
    """Ordinal product w^e * z (left factor an omega power)."""
    if not e.terms or not z.terms:
        return z
    return CnfOrdinal(tuple((add(e, ez), cz) for ez, cz in z.terms))


def omega_tower(n: int, seed: CnfOrdinal = ONE) -> CnfOrdinal:
    """n-fold iterated omega power of seed: tower(0) = seed, tower(k+1) = w^tower(k)."""
    if n < 0:
        raise ValueError("tower height must be nonnegative")
    value = seed
    for _ in range(n):
        value = omega_power(value)
    return value


@functools.lru_cache(maxsize=None)
def f_hat(a: CnfOrdinal) -> CnfOrdinal:
    """Order-preserving padding: 0 -> 0 and w^e + rest -> w^e + f_hat(e) + f_hat(rest).

    The recursion peels a single omega power off the leading term.  The
    same right-hand side evaluated on an absorbed sum (w^e + rest = rest)
    still equals f_hat(rest), so the identity can be applied to sums that
    are not in normal form.
    """
    if not a.terms:
        return ZERO
    (e, c), rest = a.terms[0], a.terms[1:]
    tail = CnfOrdinal(((e, c - 1),) + rest) if c > 1 else CnfOrdinal(rest)
    return add(omega_power(e), add(f_hat(e), f_hat(tail)))


def _is_epsilon_plus_finite(o: CnfOrdinal) -> bool:
    # An epsilon number would satisfy e == w^e; no finite normal form does,
    # so this is a pure guard for the unreachable branch of mot_star.
    terms = o.terms
    if terms and terms[-1][0] == ZERO:
        terms = terms[:-1]
    if len(terms) != 1 or terms[0][1] != 1:
        return False
    return terms[0][0] == CnfOrdinal(terms)


def mot_star(o: CnfOrdinal) -> CnfOrdinal:
    """Maximal order type of finite sequences over a wpo of maximal order type o.

    w^(w^(o-1)) for finite o, w^(w^o) otherwise; the epsilon-number case
    of the formula cannot be represented below epsilon_0.
    """
    if not o.terms:
        raise ValueError("undefined for 0")
    if is_finite(o):
        return omega_power(omega_power(from_int(to_int(o) - 1)))
    if _is_epsilon_plus_finite(o):
        raise AssertionError("epsilon-number case cannot arise below epsilon_0")
    return omega_power(omega_power(o))


@functools.lru_cache(maxsize=None)
def size(a: CnfOrdinal) -> int:
    """Node count: every omega power counts once per coefficient unit, recursively."""
    return sum(c * (1 + size(e)) for e, c in a.terms)


# --- text syntax: 0 | term + term + ...,  term := w[^(E)][*k] | k ---


def parse_cnf(text: str) -> CnfOrdinal:
    s = Scanner(text)
    value = _parse_sum(s, closing=None)
    s.expect_end()
    return value


def _parse_sum(s: Scanner, closing: str | None) -> CnfOrdinal:
    if s.take("0"):
        nxt = s.peek()
        if nxt == "" or nxt == closing:
            return ZERO
        s.error("'0' cannot appear in a sum")
    terms: list[tuple[CnfOrdinal, int]] = []
    while True:
        pos = s.pos
        terms.append(_parse_term(s))
        if len(terms) >= 2 and compare(terms[-2][0], terms[-1][0]) <= 0:
            raise TermSyntaxError("exponents must be strictly decreasing", pos)
        if not s.take("+"):
            break
    return CnfOrdinal(tuple(terms))


def _parse_term(s: Scanner) -> tuple[CnfOrdinal, int]:
    if s.take("w"):
        if s.take("^"):
            s.expect("(")
            e = _parse_sum(s, closing=")")
            s.expect(")")
        else:
            e = ONE
        coeff = 1
        if s.take("*"):
            pos = s.pos
            coeff = s.nat()
            if coeff < 1:
                raise TermSyntaxError("coefficient must be positive", pos)
        return (e, coeff)
    if s.peek().isdigit():
        pos = s.pos
        k = s.nat()
        if k < 1:
            raise TermSyntaxError("zero is written alone, not in a sum", pos)
        return (ZERO, k)
    s.error("expected 'w' or a number")
    raise AssertionError("unreachable")


def format_cnf(a: CnfOrdinal) -> str:
    if not a.terms:
        return "0"
    parts = []
    for e, c in a.terms:
        if e == ZERO:
            parts.append(str(c))
            continue
        base = "w" if e == ONE else f"w^({format_cnf(e)})"
        parts.append(base if c == 1 else f"{base}*{c}")
    return " + ".join(parts)
