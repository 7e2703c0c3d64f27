"""Order-preserving translations between the notation systems.

* ``chi`` sends a term over natural subscripts phi_k(x) to the word
  v0 v1^k prefixed onto the image of x; ``chi_inverse`` decodes.
* ``chi_std`` sends an ordinal below w^(w^w) to the same word system via
  its digit expansion in the base w^(w^(n-1)) matching its height.
* ``d_op``/``bar``/``psi_map`` translate the D_i system into the unary
  v_i system: ``d_op(i, a)`` pads a with the run of indices from i up to
  the level of a, ``bar`` replaces D_i by the padded v_{i+1}, and
  ``psi_map`` folds a term over head-index-0 subscripts by substituting
  the translated argument into the last zero.
* ``tau`` normalizes a unary term into the three-component tuple algebra
  (omega coefficient, middle coefficient, tail) over an implicit scale
  w^f_hat(coefficient); at level 0 the tuple collapses to a plain
  ordinal.  ``tau0_bound`` checks the resulting ordinal against the
  omega tower of height n+2.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cnf, pi, theta, veblen
from .cnf import CnfOrdinal
from .pi import PiTerm
from .theta import ThetaTerm
from .veblen import VeblenTerm


def chi(a: VeblenTerm) -> ThetaTerm:
    """phi_k(x) becomes v0 v1^k followed by the image of x."""
    out: list[int] = []
    for sub in a.subs:
        if not isinstance(sub, int) or sub < 0:
            raise ValueError("subscripts must be natural numbers")
        out.append(0)
        out.extend([1] * sub)
    return ThetaTerm(tuple(out))


def chi_inverse(t: ThetaTerm) -> VeblenTerm:
    """Decode a word over v0/v1 starting with v0 back to subscripts."""
    idx = t.indices
    if any(i > 1 for i in idx) or (idx and idx[0] != 0):
        raise ValueError("not a v0/v1 word starting with v0")
    subs: list[int] = []
    pos = 0
    while pos < len(idx):
        run = pos + 1
        while run < len(idx) and idx[run] == 1:
            run += 1
        subs.append(run - pos - 1)
        pos = run
    return VeblenTerm(tuple(subs))


def chi_std(a: CnfOrdinal) -> ThetaTerm:
    """Digit expansion of an ordinal below w^(w^w) into the v0/v1 words.

    With n minimal such that a < w^(w^n), the digits of a in base
    w^(w^(n-1)) are emitted least significant first, each as the block
    v0 v1^n followed by the digit's own expansion; a finite a becomes
    v0 repeated a times.
    """
    if cnf.compare(a, cnf.omega_tower(3)) >= 0:
        raise ValueError("argument must lie below the omega tower of height 3")
    return ThetaTerm(tuple(_chi_word(a)))


def _chi_word(a: CnfOrdinal) -> list[int]:
    if cnf.is_zero(a):
        return []
    if cnf.is_finite(a):
        return [0] * cnf.to_int(a)
    lead = a.terms[0][0]
    n = cnf.to_int(lead.terms[0][0]) + 1
    split = cnf.from_int(n - 1)
    digits: dict[int, list[tuple[CnfOrdinal, int]]] = {}
    for e, c in a.terms:
        q = 0
        rest: list[tuple[CnfOrdinal, int]] = []
        for ee, cc in e.terms:
            if ee == split:
                q = cc
            else:
                assert cnf.compare(ee, split) < 0
                rest.append((ee, cc))
        digits.setdefault(q, []).append((CnfOrdinal(tuple(rest)), c))
    word: list[int] = []
    for i in range(max(digits) + 1):
        word.append(0)
        word.extend([1] * n)
        word.extend(_chi_word(CnfOrdinal(tuple(digits.get(i, ())))))
    return word


def d_op(i: int, a: ThetaTerm) -> ThetaTerm:
    """v_i applied after padding: the result is v_i a if the level of a is
    at most i, else v_i v_{i+1} ... v_s a with s the level of a."""
    s = theta.level(a)
    if s <= i:
        return theta.theta(i, a)
    return ThetaTerm(tuple(range(i, s + 1)) + a.indices)


def bar(a: PiTerm) -> ThetaTerm:
    """Replace D_i by the padded v_{i+1}, innermost first."""
    out = theta.TZERO
    for i in reversed(a.indices):
        out = d_op(i + 1, out)
    return out


def psi_map(a: VeblenTerm, n: int) -> ThetaTerm:
    """Fold a term over head-index-0 collapsing subscripts into the unary
    system with indices < n+1: phi_{D0(x)}(y) becomes the translation of x
    under d_op(0, .) with the image of y substituted for its last zero."""
    if veblen.is_zero(a):
        return theta.TZERO
    sub = a.subs[0]
    if not isinstance(sub, PiTerm):
        raise ValueError("subscripts must be collapsing terms")
    if pi.is_zero(sub) or pi.head_index(sub) != 0:
        raise ValueError("subscripts must have head index 0")
    if not pi.pi_validate(sub, n):
        raise ValueError(f"subscript is not wellformed below index bound {n}")
    rest = psi_map(veblen.argument(a), n)
    return theta.substitute(d_op(0, bar(pi.argument(sub))), rest)


# --- the tuple algebra and the normalization map ---


@dataclass(frozen=True)
class OmegaTuple:
    """Three stored components of  Omega_level * omega_coeff
    + w^f_hat(omega_coeff) * theta_part + tail;  the scale factor is
    always w^f_hat(omega_coeff) and is never stored."""

    omega_coeff: CnfOrdinal
    theta_part: ThetaTerm
    tail: CnfOrdinal
    level: int
    bound: int

    def __post_init__(self) -> None:
        problems = tuple_invariant_failures(self)
        if problems:
            raise ValueError("; ".join(problems))

    def __repr__(self) -> str:
        return f"OmegaTuple<{format_omega_tuple(self)}; level {self.level}>"


def tuple_invariant_failures(t: OmegaTuple) -> list[str]:
    """All violated tuple invariants, as messages (empty when valid)."""
    out = []
    if t.level < 1:
        out.append("level must be >= 1")
    if theta.level(t.theta_part) > t.level - 1:
        out.append("middle coefficient must sit strictly below the tuple level")
    if cnf.compare(t.tail, cnf.omega_power(cnf.f_hat(t.omega_coeff))) >= 0:
        out.append("tail must lie below the scale factor")
    if not (cnf.is_zero(t.tail) or cnf.is_successor(t.tail)):
        out.append("tail must be zero or a successor")
    if cnf.is_zero(t.omega_coeff) != cnf.is_zero(t.tail):
        out.append("omega coefficient and tail must vanish together")
    return out


def tuple_compare(x: OmegaTuple, y: OmegaTuple) -> int:
    """Lexicographic on (omega_coeff, theta_part, tail)."""
    if x.level != y.level or x.bound != y.bound:
        raise ValueError("tuples from different levels or bounds do not compare")
    c = cnf.compare(x.omega_coeff, y.omega_coeff)
    if c:
        return c
    c = theta.compare(x.theta_part, y.theta_part)
    if c:
        return c
    return cnf.compare(x.tail, y.tail)


def tau(m: int, a: ThetaTerm, n: int) -> "CnfOrdinal | OmegaTuple":
    """Normalize a term with indices <= n and level <= m into the level-m
    tuple algebra (a plain ordinal when m = 0).

    At the head index m the argument is normalized one level up, giving
    the omega coefficient beta and tail eta; the coefficient of the head
    is normalized at the same level and rescaled:

        level-m image  =  Omega_m * w^beta
                          + w^(w^beta) * (scale * image(coefficient) + eta) + 1

    expanded into the stored components by ordinal arithmetic.
    """
    if m < 0 or n < 0:
        raise ValueError("level and index bound must be nonnegative")
    if not theta.theta_validate(a, n=n + 1, m=m):
        raise ValueError(f"term outside the domain at level {m}, bound {n}")
    return _tau(m, a, n, {})


def _tau(m: int, a: ThetaTerm, n: int, memo: dict) -> "CnfOrdinal | OmegaTuple":
    key = (m, a.indices)
    if key in memo:
        return memo[key]
    if m >= n + 1:
        out: CnfOrdinal | OmegaTuple = OmegaTuple(cnf.ZERO, a, cnf.ZERO, m, n)
    elif theta.is_zero(a):
        out = cnf.ZERO if m == 0 else OmegaTuple(cnf.ZERO, theta.TZERO, cnf.ZERO, m, n)
    elif theta.level(a) < m:
        out = OmegaTuple(cnf.ZERO, a, cnf.ZERO, m, n)
    else:
        arg = theta.argument(a)
        sub = _tau(m + 1, arg, n, memo)
        assert isinstance(sub, OmegaTuple)
        km = theta.k_coeff(m, arg)
        assert sub.theta_part == km, "middle coefficient out of normal form"
        beta, eta = sub.omega_coeff, sub.tail
        image_km = _tau(m, km, n, memo)
        power = cnf.omega_power(beta)
        if m == 0:
            assert isinstance(image_km, CnfOrdinal)
            inner = cnf.add(cnf.mul_omega_power(cnf.f_hat(beta), image_km), eta)
            out = cnf.add(cnf.mul_omega_power(power, inner), cnf.ONE)
        else:
            assert isinstance(image_km, OmegaTuple)
            coeff = cnf.add(power, image_km.omega_coeff)
            tail = cnf.add(
                cnf.add(
                    cnf.mul_omega_power(cnf.add(power, cnf.f_hat(beta)), image_km.tail),
                    cnf.mul_omega_power(power, eta),
                ),
                cnf.ONE,
            )
            out = OmegaTuple(coeff, image_km.theta_part, tail, m, n)
    memo[key] = out
    return out


def tau0_bound(a: ThetaTerm, n: int) -> bool:
    """Whether the level-0 image stays below the omega tower of height n+2."""
    image = tau(0, a, n)
    assert isinstance(image, CnfOrdinal)
    return cnf.compare(image, cnf.omega_tower(n + 2)) < 0


def format_omega_tuple(t: OmegaTuple) -> str:
    return (
        f"({cnf.format_cnf(t.omega_coeff)}, "
        f"{theta.format_theta(t.theta_part)}, {cnf.format_cnf(t.tail)})"
    )
