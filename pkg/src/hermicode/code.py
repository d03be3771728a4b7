"""The Hermitian code C_m as the dual of an evaluation code.

The parity-check matrix has one row per staircase monomial of w-weight
at most m, evaluated at the q^3 curve points in canonical order.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import linalg
from .curve import CurvePoint, Divisor, enumerate_points, point_index
from .field import FieldContext
from .semigroup import CodeLabelInfo, Monomial, basis_Bm, code_label_info, code_labels, is_code_label, max_label

#: Random combinations tried by the full-support search before giving up.
DEFAULT_SEARCH_ATTEMPTS = 2000


class CodeLabelError(ValueError):
    pass


def evaluation_matrix(ctx: FieldContext, monomials: Sequence[Monomial], points: Sequence[tuple[int, int]]) -> np.ndarray:
    """Entry (i, j) is monomials[i] evaluated at points[j]."""
    mul = ctx.mul_table
    out = np.zeros((len(monomials), len(points)), dtype=np.int64)
    for j, (x, y) in enumerate(points):
        for i, (r, s) in enumerate(monomials):
            out[i, j] = mul[ctx.pow(x, r)][ctx.pow(y, s)]
    return out


@dataclass(frozen=True, eq=False)
class HermitianCode:
    ctx: FieldContext
    m: int
    points: tuple[CurvePoint, ...]
    monomials: tuple[Monomial, ...]
    parity_check: np.ndarray
    info: CodeLabelInfo

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def redundancy(self) -> int:
        return len(self.monomials)

    @property
    def dimension(self) -> int:
        return self.n - len(self.monomials)

    @property
    def distance(self) -> int:
        from .minwords import distance

        return distance(self.q, self.m)

    def columns(self, indices: Sequence[int]) -> np.ndarray:
        return self.parity_check[:, list(indices)]

    def indices_of(self, divisor: Divisor | Sequence[tuple[int, int]]) -> list[int]:
        index = point_index(self.ctx)
        try:
            return sorted(index[CurvePoint(int(x), int(y))] for x, y in divisor)
        except KeyError as exc:
            raise ValueError(f"point {exc.args[0]} is not a rational point of the curve") from None

    def generator_matrix(self) -> np.ndarray:
        return linalg.nullspace(self.ctx, self.parity_check)

    def codeword(self, vector: Sequence[int]) -> Codeword:
        return Codeword(self, np.asarray(vector, dtype=np.int64))

    def params(self) -> dict:
        return {
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "k": self.dimension,
            "d": self.distance,
            "redundancy": self.redundancy,
            **{key: val for key, val in self.info.as_dict().items() if key not in ("q", "m")},
        }


@dataclass(frozen=True, eq=False)
class Codeword:
    code: HermitianCode
    vector: np.ndarray

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.vector))

    def support(self) -> Divisor:
        return support(self.code, self.vector)

    def is_valid(self) -> bool:
        return is_codeword(self.code, self.vector)

    def as_json(self) -> list[str]:
        return [str(int(c)) for c in self.vector]


def canonical_label(q: int, m: int) -> int:
    """The label of the code equal to C_m: the least label >= m."""
    for label in code_labels(q):
        if label >= m:
            return label
    raise CodeLabelError(f"m={m} is beyond the last label {max_label(q)}")


def build_code(ctx: FieldContext, m: int, relax: bool = False) -> HermitianCode:
    """Build C_m; ``m`` must be a code label unless ``relax`` is set."""
    q = ctx.q
    if not 0 <= m <= max_label(q):
        raise CodeLabelError(f"m={m} outside 0..{max_label(q)}")
    if not is_code_label(q, m):
        if not relax:
            raise CodeLabelError(f"m={m} is not a code label for q={q}: {m + 1} is not a weight of B")
        m = canonical_label(q, m)
    points = enumerate_points(ctx)
    monos = basis_Bm(q, m)
    h = evaluation_matrix(ctx, monos, points)
    if linalg.rank(ctx, h) != len(monos):
        raise AssertionError("parity-check matrix is not of full row rank")  # pragma: no cover
    h.setflags(write=False)
    return HermitianCode(ctx, m, points, monos, h, code_label_info(q, m))


def _as_vector(code: HermitianCode, v: Sequence[int]) -> np.ndarray:
    arr = np.asarray(v, dtype=np.int64)
    if arr.shape != (code.n,):
        raise ValueError(f"expected a vector of length {code.n}, got shape {arr.shape}")
    return arr


def syndrome(code: HermitianCode, v: Sequence[int]) -> np.ndarray:
    return linalg.matmul(code.ctx, code.parity_check, _as_vector(code, v))


def is_codeword(code: HermitianCode, v: Sequence[int]) -> bool:
    return not syndrome(code, v).any()


def weight(v: Sequence[int]) -> int:
    return int(np.count_nonzero(np.asarray(v)))


def support(code: HermitianCode, v: Sequence[int]) -> Divisor:
    arr = _as_vector(code, v)
    return Divisor(code.ctx, [code.points[i] for i in np.flatnonzero(arr)])


def _scatter(code: HermitianCode, idx: Sequence[int], values: np.ndarray) -> Codeword:
    vec = np.zeros(code.n, dtype=np.int64)
    vec[list(idx)] = values
    return Codeword(code, vec)


def column_kernel(code: HermitianCode, idx: Sequence[int]) -> np.ndarray:
    """Basis of the kernel of the parity-check columns at ``idx``."""
    if not idx:
        return np.zeros((0, 0), dtype=np.int64)
    return linalg.nullspace(code.ctx, code.columns(idx))


def codeword_supported_within(code: HermitianCode, divisor: Divisor | Sequence[tuple[int, int]]) -> Optional[Codeword]:
    """A nonzero codeword whose support lies in ``divisor``, or None."""
    idx = code.indices_of(divisor)
    kernel = column_kernel(code, idx)
    if kernel.shape[0] == 0:
        return None
    return _scatter(code, idx, kernel[0])


class SearchStatus(enum.Enum):
    FOUND = "found"
    ABSENT = "absent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ExactSupportResult:
    status: SearchStatus
    codeword: Optional[Codeword]
    kernel_dim: int
    attempts: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND


def codeword_supported_exactly(
    code: HermitianCode,
    divisor: Divisor | Sequence[tuple[int, int]],
    *,
    seed: int = 0,
    attempts: int = DEFAULT_SEARCH_ATTEMPTS,
) -> ExactSupportResult:
    """Look for a codeword whose support is exactly ``divisor``.

    With K the kernel of the divisor's columns: if ``|D|`` equals the distance
    every nonzero element of K has full support.  Otherwise K is searched
    exhaustively when ``dim K <= 2`` and by ``attempts`` seeded random
    combinations beyond that, in which case failure is INCONCLUSIVE.
    """
    idx = code.indices_of(divisor)
    kernel = column_kernel(code, idx)
    k = kernel.shape[0]
    if k == 0:
        return ExactSupportResult(SearchStatus.ABSENT, None, 0)
    if len(idx) == code.distance:
        vec = kernel[0]
        assert np.count_nonzero(vec) == len(idx), "a word lighter than the distance exists"
        return ExactSupportResult(SearchStatus.FOUND, _scatter(code, idx, vec), k)
    # A coordinate vanishing on the whole kernel rules out full support.
    if not kernel.any(axis=0).all():
        return ExactSupportResult(SearchStatus.ABSENT, None, k)
    ctx = code.ctx
    if k <= 2:
        candidates = [kernel[0]]
        if k == 2:
            candidates = [kernel[0]] + [
                linalg.combine(ctx, np.array([a, 1]), kernel) for a in range(ctx.order)
            ]
        for tried, vec in enumerate(candidates, 1):
            if np.count_nonzero(vec) == len(idx):
                return ExactSupportResult(SearchStatus.FOUND, _scatter(code, idx, vec), k, tried)
        return ExactSupportResult(SearchStatus.ABSENT, None, k, len(candidates))
    rng = random.Random(seed)
    for tried in range(1, attempts + 1):
        coeffs = np.array([rng.randrange(ctx.order) for _ in range(k)])
        vec = linalg.combine(ctx, coeffs, kernel)
        if np.count_nonzero(vec) == len(idx):
            return ExactSupportResult(SearchStatus.FOUND, _scatter(code, idx, vec), k, tried)
    return ExactSupportResult(SearchStatus.INCONCLUSIVE, None, k, attempts)
