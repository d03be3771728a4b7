"""Numerics of the semigroup <q, q+1> and the monomial staircase basis.

Every integer here is exact; nothing depends on a field.  The w-weight of
``x^r y^s`` is ``r*q + s*(q+1)``.  The staircase ``B`` of the point scheme E
(all q^3 rational points of the curve) is the set of monomials outside
``<x^(q+1), x*y^(q^2-q), y^(q^2)>``; its weights are pairwise distinct and the
set of those weights is written ``Lambda_B`` below.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional


class Monomial(NamedTuple):
    """``x^r y^s``."""

    r: int
    s: int

    @property
    def degree(self) -> int:
        return self.r + self.s

    def weight(self, q: int) -> int:
        return self.r * q + self.s * (q + 1)

    def divides(self, other: Monomial) -> bool:
        return self.r <= other.r and self.s <= other.s

    def times(self, other: Monomial) -> Monomial:
        return Monomial(self.r + other.r, self.s + other.s)

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.r, other.r), max(self.s, other.s))

    def divisor_count(self) -> int:
        return (self.r + 1) * (self.s + 1)

    def __str__(self) -> str:
        if self.r == 0 and self.s == 0:
            return "1"
        parts = []
        if self.r:
            parts.append("x" if self.r == 1 else f"x^{self.r}")
        if self.s:
            parts.append("y" if self.s == 1 else f"y^{self.s}")
        return "*".join(parts)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        text = text.strip()
        r = s = 0
        if text != "1":
            for factor in text.split("*"):
                factor = factor.strip()
                var, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if var == "x":
                    r += e
                elif var == "y":
                    s += e
                else:
                    raise ValueError(f"cannot parse monomial {text!r}")
        return cls(r, s)


ONE = Monomial(0, 0)


def w_weight(q: int, mono: Monomial) -> int:
    return mono.r * q + mono.s * (q + 1)


class Phase(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


@dataclass(frozen=True)
class LambdaRepresentation:
    """The unique writing ``n = a*q + b*(q+1)`` with ``0 <= a <= q``."""

    n: int
    a: int
    b: int


@dataclass(frozen=True)
class CodeLabelInfo:
    q: int
    m: int
    m_tilde: int
    delta_m: int
    delta_tilde: int
    phase: Phase
    mu: int
    lam: int

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "m_tilde": self.m_tilde,
            "delta_m": self.delta_m,
            "delta_tilde": self.delta_tilde,
            "phase": self.phase.value,
            "mu": self.mu,
            "lambda": self.lam,
        }


def lambda_membership(q: int, n: int) -> Optional[LambdaRepresentation]:
    """Return the representation of ``n`` in <q, q+1>, or None for a gap.

    Since q = -1 mod (q+1), the coefficient ``a`` is forced to be -n mod (q+1).
    """
    if n < 0:
        return None
    a = (-n) % (q + 1)
    rest = n - a * q
    if rest < 0:
        return None
    return LambdaRepresentation(n, a, rest // (q + 1))


def in_lambda(q: int, n: int) -> bool:
    return lambda_membership(q, n) is not None


@lru_cache(maxsize=None)
def gaps(q: int) -> tuple[int, ...]:
    """The q(q-1)/2 gaps: for h = 1..q-1 the run (h-1)(q+1)+1 .. (h-1)(q+1)+(q-h)."""
    if q < 2:
        raise ValueError("q must be at least 2")
    out = [(h - 1) * (q + 1) + t for h in range(1, q) for t in range(1, q - h + 1)]
    return tuple(sorted(out))


def genus(q: int) -> int:
    return q * (q - 1) // 2


@lru_cache(maxsize=None)
def basis_B(q: int) -> tuple[Monomial, ...]:
    """Staircase of <x^(q+1), x y^(q^2-q), y^(q^2)>, ordered by w-weight."""
    if q < 2:
        raise ValueError("q must be at least 2")
    monos = [Monomial(0, s) for s in range(q * q)]
    monos += [Monomial(r, s) for r in range(1, q + 1) for s in range(q * q - q)]
    return tuple(sorted(monos, key=lambda mono: w_weight(q, mono)))


@lru_cache(maxsize=None)
def _weight_to_monomial(q: int) -> dict[int, Monomial]:
    return {w_weight(q, mono): mono for mono in basis_B(q)}


def lambda_B(q: int) -> frozenset[int]:
    return frozenset(_weight_to_monomial(q))


def monomial_of_weight(q: int, weight: int) -> Optional[Monomial]:
    """The unique member of B with the given weight, if any."""
    return _weight_to_monomial(q).get(weight)


def basis_Bm(q: int, m: int) -> tuple[Monomial, ...]:
    return tuple(mono for mono in basis_B(q) if w_weight(q, mono) <= m)


def max_label(q: int) -> int:
    return q ** 3 + q * q - q - 2


def is_code_label(q: int, m: int) -> bool:
    """A code is labelled by m exactly when m+1 is the weight of a member of B."""
    return m >= 0 and (m + 1) in _weight_to_monomial(q)


def delta(q: int, m: int) -> int:
    """m - (q-2)(q+1)."""
    return m - (q - 2) * (q + 1)


def phase_of(q: int, m: int) -> Phase:
    if m <= q * q - 2:
        return Phase.I
    if m <= 2 * q * q - 2 * q - 3:
        return Phase.II
    if m <= q ** 3 - 2:
        return Phase.III
    return Phase.IV


def m_tilde(q: int, m: int) -> int:
    """Least m' >= m with m'+1 in Lambda_B and delta(m') in Lambda."""
    for cand in range(m, max_label(q) + 1):
        if is_code_label(q, cand) and in_lambda(q, delta(q, cand)):
            return cand
    raise ValueError(f"no admissible m' >= {m} for q={q}")  # pragma: no cover


def code_label_info(q: int, m: int) -> CodeLabelInfo:
    if not 0 <= m <= max_label(q):
        raise ValueError(f"m={m} outside 0..{max_label(q)} for q={q}")
    mt = m_tilde(q, m)
    dt = delta(q, mt)
    rep = lambda_membership(q, dt)
    assert rep is not None
    return CodeLabelInfo(
        q=q,
        m=m,
        m_tilde=mt,
        delta_m=delta(q, m),
        delta_tilde=dt,
        phase=phase_of(q, m),
        mu=rep.a,
        lam=rep.b,
    )


def code_labels(q: int) -> list[int]:
    return sorted(w - 1 for w in _weight_to_monomial(q) if w >= 1)


def phase_one_segment(q: int, m: int) -> Optional[int]:
    """``h`` with ``h*q <= m+1 <= h*(q+1)``, 1 <= h <= q-1, when m is a phase-I label."""
    h = (m + 1) // q
    if 1 <= h <= q - 1 and h * q <= m + 1 <= h * (q + 1):
        return h
    return None


def label_table(q: int, m_from: int, m_to: int) -> list[CodeLabelInfo]:
    return [code_label_info(q, m) for m in range(m_from, m_to + 1)]
