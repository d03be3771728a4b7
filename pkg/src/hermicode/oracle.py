"""Brute-force ground truth for small codes.

Dependent column subsets are found by a depth-first walk over subsets in
lexicographic order.  Each node keeps the remaining candidate columns reduced
modulo the span of the chosen prefix, so a candidate that reduces to zero
closes a dependent subset.  At the last branching level two candidates close
a subset exactly when their reduced columns are proportional, which is found
by hashing normalised columns instead of descending further.

Work is bounded up front by the number of subsets of size at most w; above
the budget the search refuses to start.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Optional, Sequence

import numpy as np

from . import linalg
from .code import HermitianCode, column_kernel
from .curve import Divisor
from .field import FieldContext, make_field
from .groebner import Polynomial, vanishing_ideal
from .minwords import SupportCertificate, Verdict, classify_support
from .semigroup import w_weight

DEFAULT_BUDGET = 5_000_000
BUDGET_ENV = "HERMICODE_BUDGET"


class BudgetExceeded(RuntimeError):
    def __init__(self, estimate: int, budget: int):
        super().__init__(f"search needs about {estimate} subsets, budget is {budget}")
        self.estimate = estimate
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def subset_estimate(n: int, w_max: int) -> int:
    return sum(comb(n, w) for w in range(1, w_max + 1))


def _check_budget(n: int, w_max: int, budget: Optional[int]) -> int:
    budget = default_budget() if budget is None else budget
    est = subset_estimate(n, w_max)
    if est > budget:
        raise BudgetExceeded(est, budget)
    return est


# -- subset walk -----------------------------------------------------------------

def _normalise_columns(ctx: FieldContext, r: np.ndarray) -> np.ndarray:
    """Scale each nonzero column so its first nonzero entry is 1."""
    nz = r != 0
    first = nz.argmax(axis=0)
    lead = r[first, np.arange(r.shape[1])]
    scale = ctx.np_inv[np.where(lead == 0, 1, lead)]
    return ctx.np_mul[scale[None, :], r]


def _walk(
    ctx: FieldContext,
    r: np.ndarray,
    idx: np.ndarray,
    need: int,
    prefix: tuple[int, ...],
    first: Optional[Sequence[int]] = None,
) -> Iterator[tuple[int, ...]]:
    """Dependent subsets ``prefix + S`` with ``|S| = need`` whose proper prefixes are independent.

    ``r`` holds the candidate columns ``idx`` reduced modulo the prefix span.
    """
    zero = ~r.any(axis=0)
    if need == 1:
        for j in idx[zero]:
            yield prefix + (int(j),)
        return
    if need == 2:
        live = np.flatnonzero(~zero)
        if live.size < 2:
            return
        normal = _normalise_columns(ctx, r[:, live])
        _, groups = np.unique(normal.T, axis=0, return_inverse=True)
        groups = groups.reshape(-1)
        order = np.argsort(groups, kind="stable")
        bounds = np.flatnonzero(np.diff(groups[order])) + 1
        found = []
        for block in np.split(order, bounds):
            if block.size > 1:
                cols = sorted(int(idx[live[b]]) for b in block)
                found.extend((a, b) for i, a in enumerate(cols) for b in cols[i + 1:])
        if first is not None:
            allowed = set(int(idx[k]) for k in first)
            found = [pair for pair in found if pair[0] in allowed]
        for pair in sorted(found):
            yield prefix + pair
        return
    mul, sub, inv = ctx.np_mul, ctx.np_sub, ctx.np_inv
    ks = range(len(idx) - need + 1) if first is None else first
    for k in ks:
        if zero[k]:
            continue
        v = r[:, k]
        p = int(np.flatnonzero(v)[0])
        v = mul[inv[v[p]], v]
        rest = r[:, k + 1:]
        reduced = sub[rest, mul[v[:, None], rest[p][None, :]]]
        reduced = np.delete(reduced, p, axis=0)
        yield from _walk(ctx, reduced, idx[k + 1:], need - 1, prefix + (int(idx[k]),))


def _roots(n: int, jobs: int) -> list[list[int]]:
    return [list(range(j, n, jobs)) for j in range(jobs)]


def _worker(args: tuple) -> list[tuple[int, ...]]:
    p, k, matrix, size, first, limit = args
    ctx = make_field(p, k)
    out = []
    for subset in _walk(ctx, matrix, np.arange(matrix.shape[1]), size, (), first):
        out.append(subset)
        if limit is not None and len(out) >= limit:
            break
    return out


def dependent_subsets(
    code: HermitianCode, size: int, *, limit: Optional[int] = None, jobs: int = 1
) -> list[tuple[int, ...]]:
    """Column subsets of ``size`` that are dependent with all proper prefixes independent.

    When no smaller subset is dependent these are exactly the supports of
    the words of weight ``size``.
    """
    h = np.asarray(code.parity_check, dtype=np.int64)
    n = h.shape[1]
    if size < 1:
        return []
    if jobs <= 1 or size == 1:
        return _worker((code.ctx.p, code.ctx.k, h, size, None, limit))
    tasks = [(code.ctx.p, code.ctx.k, h, size, roots, limit) for roots in _roots(n, jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_worker, tasks))
    merged = sorted(s for part in parts for s in part)
    return merged[:limit] if limit is not None else merged


# -- public operations -----------------------------------------------------------

def brute_force_distance(
    code: HermitianCode, w_max: int, *, budget: Optional[int] = None, jobs: int = 1
) -> Optional[int]:
    """Least w <= w_max such that some w columns of the parity-check matrix are dependent."""
    _check_budget(code.n, w_max, budget)
    for w in range(1, w_max + 1):
        if dependent_subsets(code, w, limit=1, jobs=jobs):
            return w
    return None


@dataclass
class CensusReport:
    q: int
    m: int
    distance_found: int
    min_supports: list[list[int]]
    counts: dict[str, int]
    wall_time: float
    estimate: int
    certificates: list[SupportCertificate] = field(default_factory=list, repr=False)

    def supports_by_verdict(self, verdict: Verdict) -> set[frozenset[int]]:
        return {frozenset(c.divisor.indices()) for c in self.certificates if c.verdict is verdict}

    def as_json(self, timing: bool = False) -> dict:
        out = {
            "q": self.q,
            "m": self.m,
            "distance_found": self.distance_found,
            "count": len(self.min_supports),
            "counts": dict(sorted(self.counts.items())),
            "min_supports": self.min_supports,
            "subset_estimate": self.estimate,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def enumerate_min_supports(
    code: HermitianCode, *, budget: Optional[int] = None, jobs: int = 1, w_max: Optional[int] = None
) -> CensusReport:
    """Every support of a minimum-weight word, each classified.

    The distance is found by brute force first; a classification that fits no
    known family raises :class:`~hermicode.minwords.TheoremViolation`.
    """
    start = time.perf_counter()
    w_max = code.distance if w_max is None else w_max
    est = _check_budget(code.n, w_max, budget)
    d = brute_force_distance(code, w_max, budget=budget, jobs=jobs)
    if d is None:
        raise ValueError(f"no dependent subset of size <= {w_max}")
    subsets = dependent_subsets(code, d, jobs=jobs)
    certs = []
    counts: dict[str, int] = {}
    for subset in subsets:
        divisor = Divisor.from_indices(code.ctx, subset)
        cert = classify_support(code, divisor) if d == code.distance else None
        if cert is None or not cert.is_minimum:
            key = Verdict.NOT_MINIMUM.value
        else:
            key = f"{cert.verdict.value}:{cert.pattern}"
            certs.append(cert)
        counts[key] = counts.get(key, 0) + 1
    return CensusReport(
        q=code.q,
        m=code.m,
        distance_found=d,
        min_supports=[list(s) for s in subsets],
        counts=counts,
        wall_time=time.perf_counter() - start,
        estimate=est,
        certificates=certs,
    )


@dataclass(frozen=True)
class Prop28Result:
    kernel: bool
    rank: bool
    footprint: bool

    @property
    def unanimous(self) -> bool:
        return self.kernel == self.rank == self.footprint

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.kernel, self.rank, self.footprint)


def check_prop28(code: HermitianCode, divisor: Divisor) -> Prop28Result:
    """Three independent tests of whether some nonzero word is supported within D.

    * kernel:    the D-columns of the parity-check matrix are dependent;
    * rank:      the normal forms of B_m modulo I_D span fewer than |D| dimensions;
    * footprint: the footprint of I_D has a monomial of weight in [m+1, m+q+1].
    """
    idx = code.indices_of(divisor)
    q, m = code.q, code.m
    kernel = len(idx) > 0 and column_kernel(code, idx).shape[0] > 0
    if not idx:
        return Prop28Result(kernel, False, False)
    gb, foot = vanishing_ideal(code.ctx, divisor)
    coords = {mono: i for i, mono in enumerate(foot)}
    rows = np.zeros((len(code.monomials), len(foot)), dtype=np.int64)
    for i, mono in enumerate(code.monomials):
        nf = gb.normal_form(Polynomial.monomial(code.ctx, mono.r, mono.s))
        for t, c in nf.terms.items():
            rows[i, coords[t]] = c
    rank = linalg.rank(code.ctx, rows) < len(idx)
    window = any(m + 1 <= w_weight(q, t) <= m + q + 1 for t in foot)
    return Prop28Result(kernel, rank, window)
