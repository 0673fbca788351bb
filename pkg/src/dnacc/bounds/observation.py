"""Largest DNA-correcting code inside one data-field class U of X̄."""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Optional, Union

from ..channel import ChannelParams, Regime
from ..core.errors import BudgetExceeded, InvalidParams, UnsupportedEd
from ..indexcodes import search_exact_F, search_greedy
from ..models.schemas import BoundReport
from .packing import singleton_bound, sphere_packing_bound

logger = logging.getLogger(__name__)


def _required_distance(ch: ChannelParams) -> Optional[int]:
    if ch.regime is Regime.TAU1:
        return 2 * ch.e_i + 1
    if ch.regime is Regime.HIGH:
        return ch.e_i + 1
    return None


def exact_F(l: int, M: int, d: int, cap: Optional[int] = None) -> Optional[int]:
    """F(l, M, d) from the closed-form cases or exact search; None when the search is over budget."""
    if d <= 1:
        return math.perm(1 << l, M)
    if d > l:
        return 1
    try:
        return search_exact_F(l, M, d, cap)[0]
    except BudgetExceeded as e:
        logger.info(f"exact F({l},{M},{d}) over budget: {e}")
        return None


def A_U_size(
    l: int,
    M: int,
    tau: Union[str, Fraction, int],
    K: int,
    e_i: int,
    e_d: int = 0,
    seed: Optional[int] = None,
    cap: Optional[int] = None,
) -> BoundReport:
    """
    The size of the largest DNA-correcting code with data-field set U, |U| = M.

    tau = 1 needs index-distance 2 e_i + 1, the high regime e_i + 1; in the
    low regime every message of the class is decodable, so the size is
    C(2^l, M) M!. F comes from exact search, or is bracketed by a greedy code
    and the closed-form upper bounds when the search is over budget; that
    fallback draws random orders and needs an explicit `seed`.
    """
    ch = ChannelParams.parse(tau, e_i, e_d, K)
    if ch.e_d > 0:
        raise UnsupportedEd(f"the data-field class is only analysed for e_d = 0, got e_d={ch.e_d}")
    space = math.perm(1 << l, M)
    inputs = {"l": l, "M": M, "tau": str(ch.tau), "K": K, "e_i": e_i, "regime": ch.regime.value}

    d = _required_distance(ch)
    if d is None:
        return BoundReport(
            name="A_U_size", source="every index assignment", inputs=inputs,
            exact=str(space), floor=space,
        )
    inputs["d"] = d
    size = exact_F(l, M, d, cap)
    if size is not None:
        return BoundReport(
            name="A_U_size", source="exact F", inputs=inputs, exact=str(size), floor=size
        )

    if seed is None:
        raise InvalidParams(f"F({l},{M},{d}) is over the search budget; the greedy bracket needs a seed")
    lower = search_greedy(l, M, d, seed).size
    upper = space
    notes = [f"lower bound from a greedy code with seed {seed}"]
    if M >= 2 and (M & (M - 1)) == 0 and l == M.bit_length() - 1 and d <= l + 1:
        upper = min(upper, singleton_bound(M, d).floor, sphere_packing_bound(M, d).floor)
        notes.append("upper bound from the Singleton-type and sphere-packing bounds")
    else:
        notes.append("no closed-form upper bound for l != log2 M; using |I(l, M)|")
    return BoundReport(
        name="A_U_size", source="greedy search and upper bounds", inputs=inputs,
        lower=lower, upper=upper, notes=notes,
    )
