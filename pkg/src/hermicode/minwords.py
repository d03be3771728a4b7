"""Distance, small-weight bounds and minimum-weight supports of C_m.

Minimum-weight supports are described by their vanishing ideal.  Writing
``delta~ = mu*q + lam*(q+1)`` for the designed distance and ``h`` for the
phase-I segment index, the patterns for the initial ideal In(I_D) are

* type (i):   minimal generators of <x^(q+1), x^mu y^lam, y^(lam+q)>, i.e. D is
  cut on the curve by one curve with leading monomial x^mu y^lam;
* type (ii):  <x^q, y^mu>, a grid, only when m < m~ and m = (mu+q-3)(q+1)+1;
* line:       <x, y^(h+1)> (vertical) or <y, x^(h+1)> (non-vertical, only
  when m + 1 = h*q) in phase I.

:func:`classify_support` certifies a divisor and raises
:class:`TheoremViolation` if a certified minimum support fits none of them.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .code import CodeLabelError, Codeword, HermitianCode, SearchStatus, codeword_supported_exactly
from .curve import CurvePoint, Divisor, enumerate_points, points_on_line, points_on_vertical_line
from .field import FieldContext, field_for_q
from .groebner import Footprint, GroebnerBasis, Polynomial, minimal_generators, order_key, vanishing_ideal
from .semigroup import (
    Monomial,
    Phase,
    code_label_info,
    is_code_label,
    max_label,
    monomial_of_weight,
    phase_one_segment,
)


class TheoremViolation(RuntimeError):
    """A computation contradicts a proven statement about the codes."""


class ConstructionError(ValueError):
    pass


def _field(q_or_ctx: int | FieldContext) -> FieldContext:
    return q_or_ctx if isinstance(q_or_ctx, FieldContext) else field_for_q(q_or_ctx)


def second_phase_end(q: int) -> int:
    return 2 * q * q - 2 * q - 3


def corner_label(q: int) -> int:
    """q^2 - q - 1, the first label covered by the complete-intersection description."""
    return q * q - q - 1


# -- distance and bounds ---------------------------------------------------------

def distance(q: int, m: int) -> int:
    """Minimum distance of C_m."""
    if not is_code_label(q, m) or m > max_label(q):
        raise CodeLabelError(f"m={m} is not a code label for q={q}")
    info = code_label_info(q, m)
    if info.phase is Phase.I:
        h = phase_one_segment(q, m)
        assert h is not None, "every phase-I label lies on a segment"
        if m >= corner_label(q):
            assert h + 1 == info.delta_tilde
        return h + 1
    return info.delta_tilde


class BoundCaseKind(enum.Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    E = "e"


@dataclass(frozen=True)
class BoundCase:
    mu: int
    lam: int
    kappa: int
    case: BoundCaseKind
    bound: int

    def as_dict(self) -> dict:
        return {"mu": self.mu, "lambda": self.lam, "kappa": self.kappa, "case": self.case.value, "bound": self.bound}


def lower_bound(q: int, m: int, kappa: int) -> BoundCase:
    """Lower bound on |D| when the footprint of I_D holds the B-monomial of weight m+1+kappa.

    Requires m = m~ and m >= q^2-q-1.
    """
    info = code_label_info(q, m)
    if info.m_tilde != m:
        raise ValueError(f"m={m} differs from m~={info.m_tilde}")
    if m < corner_label(q):
        raise ValueError(f"m={m} below {corner_label(q)}")
    if not 0 <= kappa <= q:
        raise ValueError(f"kappa={kappa} outside 0..{q}")
    mu, lam, dt = info.mu, info.lam, info.delta_tilde
    if mu == 0:
        if kappa <= q - lam:
            return BoundCase(mu, lam, kappa, BoundCaseKind.A, dt + kappa * (q + 1 - lam - kappa))
        return BoundCase(mu, lam, kappa, BoundCaseKind.B, dt + kappa)
    if kappa <= mu - 1:
        return BoundCase(mu, lam, kappa, BoundCaseKind.C, dt + kappa)
    if kappa <= q - lam:
        return BoundCase(mu, lam, kappa, BoundCaseKind.D, dt + (kappa - mu) * (q - lam - kappa) + kappa)
    return BoundCase(mu, lam, kappa, BoundCaseKind.E, dt + kappa)


def bound_monomial(q: int, m: int, kappa: int) -> Optional[Monomial]:
    """The member of B of weight m+1+kappa that :func:`lower_bound` refers to."""
    return monomial_of_weight(q, m + 1 + kappa)


# -- constructions ----------------------------------------------------------------

def _xvar(ctx: FieldContext) -> Polynomial:
    return Polynomial.monomial(ctx, 1, 0)


def _yvar(ctx: FieldContext) -> Polynomial:
    return Polynomial.monomial(ctx, 0, 1)


def _linear(ctx: FieldContext, var: Polynomial, root: int) -> Polynomial:
    return var + Polynomial.constant(ctx, ctx.neg(root))


def vertical_line(ctx: FieldContext, x0: int) -> Polynomial:
    return _linear(ctx, _xvar(ctx), x0)


def nonvertical_line(ctx: FieldContext, u: int, v: int) -> Polynomial:
    """y - u*x - v."""
    return _yvar(ctx) - _xvar(ctx).scale(u) - Polynomial.constant(ctx, v)


def _pick(pool: Sequence, count: int, rng: Optional[random.Random]) -> list:
    if count > len(pool):
        raise ConstructionError(f"need {count} elements, only {len(pool)} available")
    if rng is None:
        return list(pool[:count])
    return sorted(rng.sample(list(pool), count))


def _phase_one_h(q: int, m: int) -> int:
    h = phase_one_segment(q, m) if m <= q * q - 2 else None
    if h is None or not is_code_label(q, m):
        raise ConstructionError(f"m={m} is not a phase-I code label for q={q}")
    return h


def construct_phase1_supports(
    q: int | FieldContext,
    m: int,
    mode: str = "vertical",
    *,
    x0: int = 0,
    line: Optional[tuple[int, int]] = None,
    seed: Optional[int] = None,
) -> Divisor:
    """h+1 collinear points: on the fiber x = x0, or on a non-vertical secant.

    ``line = (u, v)`` fixes y = u*x + v; otherwise secants are scanned in
    (u, v) order (or a seeded random order) until one carries h+1 points.
    """
    ctx = _field(q)
    q = ctx.q
    h = _phase_one_h(q, m)
    rng = random.Random(seed) if seed is not None else None
    if mode == "vertical":
        fiber = sorted(points_on_vertical_line(ctx, x0))
        return Divisor(ctx, _pick(fiber, h + 1, rng))
    if mode != "nonvertical":
        raise ConstructionError(f"unknown mode {mode!r}")
    if m + 1 != h * q:
        raise ConstructionError(f"non-vertical supports need m+1 = {h}*{q}, got m={m}")
    if line is not None:
        if tuple(line) == (0, 0):
            raise ConstructionError("y = 0 is tangent at the origin")
        pts = sorted(points_on_line(ctx, *line))
        return Divisor(ctx, _pick(pts, h + 1, rng))
    lines = [(u, v) for u in range(ctx.order) for v in range(ctx.order) if (u, v) != (0, 0)]
    if rng is not None:
        rng.shuffle(lines)
    for u, v in lines:
        pts = sorted(points_on_line(ctx, u, v))
        if len(pts) >= h + 1:
            return Divisor(ctx, _pick(pts, h + 1, rng))
    raise AssertionError("no secant line found")  # pragma: no cover


def _check_second_phase_range(q: int, m: int) -> None:
    if not corner_label(q) <= m <= second_phase_end(q):
        raise ConstructionError(f"m={m} outside {corner_label(q)}..{second_phase_end(q)}")


def construct_line_union_support(
    q: int | FieldContext,
    m: int,
    *,
    alphas: Optional[Sequence[int]] = None,
    betas: Optional[Sequence[int]] = None,
    seed: Optional[int] = None,
) -> tuple[Divisor, Polynomial]:
    """mu vertical and lam horizontal lines cut a support of weight delta~.

    Horizontals y = beta need Tr(beta) != 0 to meet the curve in q+1 points,
    and no vertical x = alpha may satisfy N(alpha) = Tr(beta), or the two lines
    would cross on the curve.  By default every beta shares one trace c.
    """
    ctx = _field(q)
    q = ctx.q
    _check_second_phase_range(q, m)
    info = code_label_info(q, m)
    mu, lam = info.mu, info.lam
    rng = random.Random(seed) if seed is not None else None
    if betas is None:
        c = 1 if rng is None else rng.choice([c for c in ctx.subfield if c])
        pool = [b for b in range(ctx.order) if ctx.trace(b) == c]
        betas = _pick(pool, lam, rng)
    if alphas is None:
        traces = {ctx.trace(b) for b in betas}
        pool = [a for a in range(ctx.order) if ctx.norm(a) not in traces]
        alphas = _pick(pool, mu, rng)
    alphas, betas = list(alphas), list(betas)
    if len(alphas) != mu or len(betas) != lam or len(set(alphas)) != mu or len(set(betas)) != lam:
        raise ConstructionError(f"need {mu} distinct verticals and {lam} distinct horizontals")
    for b in betas:
        if ctx.trace(b) == 0:
            raise ConstructionError(f"horizontal y={b} has trace 0")
        for a in alphas:
            if ctx.norm(a) == ctx.trace(b):
                raise ConstructionError(f"lines x={a} and y={b} cross on the curve")
    pts: list[tuple[int, int]] = []
    for a in alphas:
        pts.extend(points_on_vertical_line(ctx, a))
    for b in betas:
        pts.extend((x, b) for x in range(ctx.order) if ctx.norm(x) == ctx.trace(b))
    divisor = Divisor(ctx, sorted(pts))
    assert len(divisor) == info.delta_tilde
    poly = Polynomial.constant(ctx, 1)
    for a in alphas:
        poly = poly * vertical_line(ctx, a)
    for b in betas:
        poly = poly * _linear(ctx, _yvar(ctx), b)
    return divisor, poly


def lower_monomials(q: int, lead: Monomial) -> list[Monomial]:
    """Monomials below ``lead`` in the term order with x-degree at most q."""
    d = lead.degree
    out = [Monomial(r, t - r) for t in range(d + 1) for r in range(min(t, q) + 1)]
    return sorted((mono for mono in out if order_key(mono) < order_key(lead)), key=order_key)


def curve_zeros(ctx: FieldContext, poly: Polynomial) -> list[CurvePoint]:
    """Rational curve points where ``poly`` vanishes, in canonical order."""
    pts = enumerate_points(ctx)
    xs = np.array([p.x for p in pts])
    ys = np.array([p.y for p in pts])
    return [pts[i] for i in np.flatnonzero(_evaluate_many(ctx, poly, xs, ys) == 0)]


def _evaluate_many(ctx: FieldContext, poly: Polynomial, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    from .linalg import field_sum

    if poly.is_zero():
        return np.zeros(len(xs), dtype=np.int64)
    mul = ctx.np_mul
    cols = []
    for (r, s), c in poly.terms.items():
        xr = np.array([ctx.pow(int(x), r) for x in range(ctx.order)])[xs]
        ys_ = np.array([ctx.pow(int(y), s) for y in range(ctx.order)])[ys]
        cols.append(mul[c, mul[xr, ys_]])
    return field_sum(ctx, np.stack(cols), axis=0)


def random_polynomial(ctx: FieldContext, lead: Monomial, rng: random.Random) -> Polynomial:
    """Monic, leading monomial ``lead``, x-degree <= q, uniform lower coefficients."""
    terms = {mono: rng.randrange(ctx.order) for mono in lower_monomials(ctx.q, lead)}
    terms[lead] = 1
    return Polynomial(ctx, terms)


def sample_type_i_support(
    q: int | FieldContext,
    m: int,
    seed: int = 0,
    attempts: Optional[int] = None,
) -> Optional[tuple[Divisor, Polynomial]]:
    """Rejection-sample F with LM x^mu y^lam until it cuts delta~ rational points.

    Returns None once ``attempts`` (default 10*q^2) polynomials have failed.
    """
    ctx = _field(q)
    q = ctx.q
    if not corner_label(q) <= m <= max_label(q):
        raise ConstructionError(f"m={m} outside {corner_label(q)}..{max_label(q)}")
    info = code_label_info(q, m)
    lead = Monomial(info.mu, info.lam)
    rng = random.Random(seed)
    for _ in range(10 * q * q if attempts is None else attempts):
        poly = random_polynomial(ctx, lead, rng)
        zeros = curve_zeros(ctx, poly)
        if len(zeros) == info.delta_tilde:
            return Divisor(ctx, zeros), poly
    return None


def type_ii_label(q: int, mu: int) -> int:
    return (mu + q - 3) * (q + 1) + 1


def type_ii_mu(q: int, m: int) -> Optional[int]:
    """The mu with m = (mu+q-3)(q+1)+1 and 1 <= mu <= q-1, if any."""
    if (m - 1) % (q + 1):
        return None
    mu = (m - 1) // (q + 1) - q + 3
    return mu if 1 <= mu <= q - 1 else None


def construct_type_ii_support(
    q: int | FieldContext,
    mu: int,
    c: int = 1,
    alphas: Optional[Sequence[int]] = None,
    betas: Optional[Sequence[int]] = None,
    *,
    seed: Optional[int] = None,
) -> tuple[Divisor, Polynomial, Polynomial]:
    """The q*mu grid {(alpha_i, beta_j)} with N(alpha_i) = Tr(beta_j) = c.

    ``c`` must be a nonzero element of GF(q); q of the q+1 elements of norm c
    and mu of the q elements of trace c are used (seeded choice when not given).
    """
    ctx = _field(q)
    q = ctx.q
    if not 1 <= mu <= q - 1:
        raise ConstructionError(f"mu={mu} outside 1..{q - 1}")
    if c == 0 or c not in ctx.subfield:
        raise ConstructionError(f"c={c} must be a nonzero element of GF({q})")
    rng = random.Random(seed) if seed is not None else None
    if alphas is None:
        alphas = _pick([a for a in range(ctx.order) if ctx.norm(a) == c], q, rng)
    if betas is None:
        betas = _pick([b for b in range(ctx.order) if ctx.trace(b) == c], mu, rng)
    alphas, betas = list(alphas), list(betas)
    if len(set(alphas)) != q or len(alphas) != q:
        raise ConstructionError(f"need {q} distinct alphas")
    if len(set(betas)) != mu or len(betas) != mu:
        raise ConstructionError(f"need {mu} distinct betas")
    if any(ctx.norm(a) != c for a in alphas) or any(ctx.trace(b) != c for b in betas):
        raise ConstructionError(f"alphas need norm {c} and betas trace {c}")
    divisor = Divisor(ctx, sorted((a, b) for a in alphas for b in betas))
    f1 = Polynomial.constant(ctx, 1)
    for a in alphas:
        f1 = f1 * vertical_line(ctx, a)
    f2 = Polynomial.constant(ctx, 1)
    for b in betas:
        f2 = f2 * _linear(ctx, _yvar(ctx), b)
    return divisor, f1, f2


def sample_type_ii_support(
    q: int | FieldContext,
    mu: int,
    seed: int = 0,
    attempts: int = 1000,
) -> Optional[tuple[Divisor, Polynomial, Polynomial]]:
    """A general grid-type support: q*mu points cut by F1 (LM x^q) and F2 (LM y^mu).

    F2 is drawn at random; q*mu of its zeros on the curve are chosen and F1 is
    solved for linearly.  The pair is kept when its common zeros in the whole
    plane are exactly the chosen points.
    """
    from . import linalg

    ctx = _field(q)
    q = ctx.q
    if not 1 <= mu <= q - 1:
        raise ConstructionError(f"mu={mu} outside 1..{q - 1}")
    rng = random.Random(seed)
    lead1, lead2 = Monomial(q, 0), Monomial(0, mu)
    tail1 = lower_monomials(q, lead1)
    for _ in range(attempts):
        f2 = random_polynomial(ctx, lead2, rng)
        zeros = curve_zeros(ctx, f2)
        if len(zeros) < q * mu:
            continue
        chosen = sorted(rng.sample(zeros, q * mu))
        rows = [[ctx.mul(ctx.pow(x, t.r), ctx.pow(y, t.s)) for t in tail1] + [ctx.pow(x, q)] for x, y in chosen]
        kernel = [v for v in linalg.nullspace(ctx, np.array(rows)) if v[-1]]
        if not kernel:
            continue
        v = ctx.np_mul[ctx.inv(int(kernel[0][-1])), kernel[0]]
        f1 = Polynomial(ctx, {**{t: int(c) for t, c in zip(tail1, v[:-1])}, lead1: 1})
        common = {
            (x, y) for x in range(ctx.order) for y in range(ctx.order)
            if f2.evaluate(x, y) == 0 and f1.evaluate(x, y) == 0
        }
        if common == set(chosen):
            return Divisor(ctx, chosen), f1, f2
    return None


def enumerate_type_i_supports(q: int | FieldContext, m: int, limit: int = 1 << 20) -> set[Divisor]:
    """All supports cut on the curve by some F with LM x^mu y^lam and x-degree <= q.

    Exhaustive over the lower coefficients; refuses when there are more than
    ``limit`` polynomials.
    """
    import itertools

    ctx = _field(q)
    q = ctx.q
    info = code_label_info(q, m)
    lead = Monomial(info.mu, info.lam)
    lows = lower_monomials(q, lead)
    if ctx.order ** len(lows) > limit:
        raise ConstructionError(f"{ctx.order}^{len(lows)} polynomials exceed the limit {limit}")
    out = set()
    for coeffs in itertools.product(range(ctx.order), repeat=len(lows)):
        poly = Polynomial(ctx, {**dict(zip(lows, coeffs)), lead: 1})
        zeros = curve_zeros(ctx, poly)
        if len(zeros) == info.delta_tilde:
            out.add(Divisor(ctx, zeros))
    return out


def enumerate_line_supports(q: int | FieldContext, m: int, mode: str = "vertical") -> set[Divisor]:
    """All sets of h+1 curve points on one vertical, or one non-vertical, line."""
    import itertools

    ctx = _field(q)
    q = ctx.q
    h = _phase_one_h(q, m)
    if mode == "vertical":
        lines = [points_on_vertical_line(ctx, a) for a in range(ctx.order)]
    elif mode == "nonvertical":
        lines = [
            points_on_line(ctx, u, v)
            for u in range(ctx.order)
            for v in range(ctx.order)
            if (u, v) != (0, 0)
        ]
    else:
        raise ConstructionError(f"unknown mode {mode!r}")
    return {
        Divisor(ctx, subset)
        for line in lines
        for subset in itertools.combinations(sorted(line), h + 1)
    }


# -- classification ---------------------------------------------------------------

class Verdict(enum.Enum):
    TYPE_I = "MinWeightTypeI"
    TYPE_II = "MinWeightTypeII"
    PHASE_I_LINE = "MinWeightPhaseILine"
    NOT_MINIMUM = "NotMinimum"


@dataclass(frozen=True)
class Pattern:
    """An initial-ideal shape; ``leads`` are the leading monomials of the witnesses."""

    verdict: Verdict
    generators: tuple[Monomial, ...]
    leads: tuple[Monomial, ...]
    label: str

    def matches(self, corners: Sequence[Monomial]) -> bool:
        return set(self.generators) == set(corners)


def _pattern(verdict: Verdict, gens: Sequence[Monomial], leads: Sequence[Monomial], label: str) -> Pattern:
    return Pattern(verdict, minimal_generators(gens), tuple(leads), label)


def support_patterns(q: int, m: int) -> list[Pattern]:
    """Initial-ideal patterns of minimum supports of C_m, preferred first."""
    info = code_label_info(q, m)
    out: list[Pattern] = []
    if m >= corner_label(q):
        mu, lam = info.mu, info.lam
        lead = Monomial(mu, lam)
        out.append(_pattern(Verdict.TYPE_I, [Monomial(q + 1, 0), lead, Monomial(0, lam + q)], [lead], "curve"))
        if m < info.m_tilde and type_ii_mu(q, m) is not None:
            assert lam == 0 and type_ii_mu(q, m) == mu
            grid = [Monomial(q, 0), Monomial(0, mu)]
            out.append(_pattern(Verdict.TYPE_II, grid, grid, "grid"))
    if info.phase is Phase.I:
        h = phase_one_segment(q, m)
        assert h is not None
        vert = [Monomial(1, 0), Monomial(0, h + 1)]
        out.append(_pattern(Verdict.PHASE_I_LINE, vert, vert, "vertical"))
        if m + 1 == h * q:
            nonvert = [Monomial(0, 1), Monomial(h + 1, 0)]
            out.append(_pattern(Verdict.PHASE_I_LINE, nonvert, nonvert, "nonvertical"))
    return out


@dataclass(frozen=True, eq=False)
class SupportCertificate:
    divisor: Divisor
    m: int
    distance: int
    verdict: Verdict
    footprint: Footprint
    initial_ideal: tuple[Monomial, ...]
    witness: tuple[Polynomial, ...] = ()
    pattern: Optional[str] = None
    codeword: Optional[Codeword] = None
    cross_check: tuple[str, ...] = ()

    @property
    def is_minimum(self) -> bool:
        return self.verdict is not Verdict.NOT_MINIMUM

    def as_json(self) -> dict:
        ctx = self.divisor.ctx
        return {
            "q": ctx.q,
            "m": self.m,
            "distance": self.distance,
            "degree": len(self.divisor),
            "verdict": self.verdict.value,
            "pattern": self.pattern,
            "divisor": self.divisor.indices(),
            "footprint": self.footprint.as_text(),
            "initial_ideal": [str(g) for g in self.initial_ideal],
            "witness": [p.to_text() for p in self.witness],
            "codeword": self.codeword.as_json() if self.codeword is not None else None,
            "cross_check": list(self.cross_check),
        }


def _witness_for(gb: GroebnerBasis, pattern: Pattern, divisor: Divisor) -> tuple[Polynomial, ...]:
    """Basis elements with the pattern's leads, checked to cut out exactly the divisor."""
    ctx = divisor.ctx
    polys = tuple(gb.element_with_leading(lead) for lead in pattern.leads)
    if any(p is None for p in polys):
        raise TheoremViolation(f"reduced basis lacks the {pattern.label} witnesses")
    if pattern.verdict is Verdict.TYPE_I:
        zeros = set(curve_zeros(ctx, polys[0]))
    else:
        zeros = {
            (x, y)
            for x in range(ctx.order)
            for y in range(ctx.order)
            if all(p.evaluate(x, y) == 0 for p in polys)
        }
    if zeros != set(divisor):
        raise TheoremViolation(f"{pattern.label} witnesses do not cut out the support exactly")
    return polys


def classify_support(code: HermitianCode, divisor: Divisor, *, seed: int = 0) -> SupportCertificate:
    """Certify whether ``divisor`` supports a minimum-weight word of ``code``."""
    if divisor.ctx != code.ctx:
        raise ValueError("divisor and code live over different fields")
    code.indices_of(divisor)
    q, m = code.q, code.m
    d = code.distance
    gb, foot = vanishing_ideal(code.ctx, divisor)
    corners = foot.outer_corners()

    def not_minimum() -> SupportCertificate:
        return SupportCertificate(divisor, m, d, Verdict.NOT_MINIMUM, foot, corners)

    if len(divisor) != d:
        return not_minimum()
    res = codeword_supported_exactly(code, divisor, seed=seed)
    assert res.status is not SearchStatus.INCONCLUSIVE
    if not res.found:
        return not_minimum()
    matching = [p for p in support_patterns(q, m) if p.matches(corners)]
    if not matching:
        raise TheoremViolation(
            f"minimum support of C_{m} (q={q}) with In(I_D) = <{', '.join(map(str, corners))}> fits no known family"
        )
    chosen = matching[0]
    witness = _witness_for(gb, chosen, divisor)
    checks = []
    for other in matching[1:]:
        _witness_for(gb, other, divisor)
        checks.append(f"{other.verdict.value}:{other.label}")
    return SupportCertificate(
        divisor, m, d, chosen.verdict, foot, corners, witness, chosen.label, res.codeword, tuple(checks)
    )
