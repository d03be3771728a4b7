"""Worked q=4 examples recomputed from scratch.

Each example renders a canonical text (CSV or sorted-key JSON) that is
compared byte for byte with a hand-transcribed file in ``golden/``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from . import minwords, oracle
from .code import build_code, canonical_label, codeword_supported_within
from .curve import points_on_vertical_line
from .field import field_for_q
from .groebner import order_key, vanishing_ideal
from .semigroup import Monomial, basis_B, delta, is_code_label, m_tilde, w_weight

Q = 4


def _json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _texts(monos) -> list[str]:
    return [str(m) for m in sorted(monos, key=order_key)]


def _d(m: int) -> int:
    return minwords.distance(Q, canonical_label(Q, m))


def render_label_table() -> str:
    from .cli import semigroup_table_csv

    return semigroup_table_csv(Q, 11, 22)


def render_distance_vs_delta() -> str:
    span = range(10, 22)
    same = [[m, canonical_label(Q, m)] for m in span if not is_code_label(Q, m)]
    return _json({
        "q": Q,
        "distance": {str(m): _d(m) for m in (10, 11)},
        "delta": {str(m): delta(Q, m) for m in (10, 11)},
        "same_code": same,
        "distance_equals_delta": [m for m in span if _d(m) == delta(Q, m)],
        "distance_differs_from_delta": [m for m in span if _d(m) != delta(Q, m)],
    })


def render_corner_codes() -> str:
    ctx = field_for_q(Q)
    line = points_on_vertical_line(ctx, 0)
    _, foot = vanishing_ideal(ctx, line)
    c14 = build_code(ctx, 14)
    censuses = {m: oracle.enumerate_min_supports(build_code(ctx, m)) for m in (11, 12, 13, 14)}
    fibers = {frozenset(points_on_vertical_line(ctx, x0).indices()) for x0 in range(ctx.order)}
    m14 = censuses[14]
    ideals = {tuple(_texts(c.initial_ideal)) for c in m14.certificates}
    return _json({
        "q": Q,
        "distance": {str(m): _d(m) for m in censuses},
        "M14": {
            "count": len(m14.min_supports),
            "initial_ideals": [list(t) for t in sorted(ideals)],
            "equals_vertical_fibers": {frozenset(s) for s in m14.min_supports} == fibers,
        },
        "line_x_equals_0": {
            "footprint": _texts(foot),
            "weight_15_monomials": _texts(t for t in foot if w_weight(Q, t) == 15),
            "supports_word_of_C14": codeword_supported_within(c14, line) is not None,
        },
        "nonvertical_family_in": [
            m for m, rep in censuses.items()
            if any(tuple(_texts(c.initial_ideal)) == ("y", "x^4") for c in rep.certificates)
        ],
    })


def render_type_i_corner() -> str:
    ctx = field_for_q(Q)
    m = 18
    code = build_code(ctx, m)
    found = minwords.sample_type_i_support(ctx, m, seed=0)
    assert found is not None
    divisor, poly = found
    cert = minwords.classify_support(code, divisor)
    return _json({
        "q": Q,
        "m": m,
        "m_tilde": m_tilde(Q, m),
        "distance": code.distance,
        "weight_m_plus_1_monomials": _texts(b for b in basis_B(Q) if w_weight(Q, b) == m + 1),
        "footprint": _texts(cert.footprint),
        "initial_ideal": _texts(cert.initial_ideal),
        "witness_leading_monomial": str(poly.leading_monomial()),
        "verdict": cert.verdict.value,
    })


def render_grid_gap() -> str:
    ctx = field_for_q(Q)
    between = [b for b in basis_B(Q) if 16 + 1 <= w_weight(Q, b) < 18 + 1]
    divisor, _, _ = minwords.construct_type_ii_support(ctx, 2)
    member = {}
    for m in (16, 17, 18):
        cert = minwords.classify_support(build_code(ctx, m), divisor)
        member[str(m)] = cert.is_minimum
    x2y2 = Monomial(2, 2)
    return _json({
        "q": Q,
        "m_tilde": {str(m): m_tilde(Q, m) for m in (16, 18)},
        "distance": {str(m): _d(m) for m in (16, 18)},
        "monomials_between": _texts(between),
        "min_degree_with_x^2*y^2": x2y2.divisor_count(),
        "grid": {
            "degree": len(divisor),
            "initial_ideal": _texts(minwords.classify_support(build_code(ctx, 16), divisor).initial_ideal),
            "minimum_support_of": member,
        },
    })


@dataclass(frozen=True)
class Example:
    id: str
    q: int
    golden: str
    render: Callable[[], str]


EXAMPLES: dict[str, Example] = {
    ex.id: ex
    for ex in (
        Example("example-2.7", Q, "example-2.7.json", render_distance_vs_delta),
        Example("example-2.9", Q, "example-2.9.csv", render_label_table),
        Example("example-3.1", Q, "example-3.1.json", render_corner_codes),
        Example("example-4.1", Q, "example-4.1.json", render_type_i_corner),
        Example("example-4.4", Q, "example-4.4.json", render_grid_gap),
    )
}
EXAMPLES["example-solito3"] = EXAMPLES["example-3.1"]


def golden_text(ex: Example) -> str:
    return resources.files("hermicode").joinpath("golden", ex.golden).read_text(encoding="utf-8")


def repro(example_id: str) -> tuple[str, bool]:
    """Rendered output and whether it matches the golden file."""
    ex = EXAMPLES[example_id]
    text = ex.render()
    return text, text == golden_text(ex)
