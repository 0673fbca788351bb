"""Redundancy of the distinct-data message space."""
from __future__ import annotations

import logging
import math

import sympy as sp

from ..core.errors import EmptySpace
from ..core.settings import get_budgets
from ..models.schemas import BoundReport
from ..primitives import SystemParams

logger = logging.getLogger(__name__)


def redundancy_distinct(M: int, L: int, l: int) -> BoundReport:
    """
    r(X̄) = log2|X| - log2|X̄| = -sum_{i<M} log2(1 - i/2^{L-l}), in `value`.

    `extra` holds the closed-form upper bound -log2(1 - M^2/2^{L-l+1}) when
    its argument is positive, `beta_ok` (M^2 < 2^{L-l}, under which the
    redundancy stays below one bit) and `single_bit_ok`, the rate condition
    under which a single redundancy bit suffices to encode X̄.
    """
    params = SystemParams(M, L, l)
    k = params.data_length
    if (1 << k) < M:
        raise EmptySpace(f"only {1 << k} data-fields of length {k} for M={M} distinct strands")
    digits = get_budgets().precision_digits

    ratio = sp.Rational(1 << (k * M), math.perm(1 << k, M))
    exact = sp.N(sp.log(ratio, 2), digits) if ratio != 1 else sp.Float(0, digits)

    argument = 1 - sp.Rational(M * M, 1 << (k + 1))
    upper = str(sp.N(-sp.log(argument, 2), digits)) if argument > 0 else None

    beta = sp.log(M, 2) / L
    threshold = (sp.log(2) * k + 2 * l) / (L * (sp.log(2) + 2 * l))
    single_bit_ok = bool(sp.N(threshold - beta, digits) >= 0)

    notes = []
    if upper is None:
        notes.append("M^2 >= 2^(L-l+1): the closed-form upper bound does not apply")
    logger.debug(f"redundancy of distinct-data space M={M} L={L} l={l}: {exact}")
    return BoundReport(
        name="redundancy_distinct",
        source="exact count",
        inputs={"M": M, "L": L, "l": l},
        value=str(exact),
        log2=str(exact),
        extra={
            "upper": upper,
            "beta": str(sp.N(beta, digits)),
            "beta_ok": M * M < (1 << k),
            "single_bit_ok": single_bit_ok,
        },
        notes=notes,
    )
