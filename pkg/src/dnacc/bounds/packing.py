"""Upper bounds on F(log M, M, d) and the sizes of the known constructions."""
from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Any, Dict, List, Optional

import sympy as sp

from ..core.errors import OutOfRange, UnsupportedD
from ..core.settings import get_budgets
from ..indexcodes.construction import log2_exact
from ..models.schemas import BoundReport

logger = logging.getLogger(__name__)


def real_report(
    name: str,
    source: str,
    inputs: Dict[str, Any],
    value: sp.Expr,
    notes: Optional[List[str]] = None,
    extra: Optional[Dict[str, Any]] = None,
) -> BoundReport:
    """Report a positive sympy quantity: exact when rational, else decimal, always with floor and log2."""
    digits = get_budgets().precision_digits
    value = sp.sympify(value)
    exact = str(value) if value.is_Rational else None
    return BoundReport(
        name=name,
        source=source,
        inputs=inputs,
        exact=exact,
        floor=int(sp.floor(value)),
        value=str(sp.N(value, digits)),
        log2=str(sp.N(sp.log(value, 2), digits)),
        extra=extra or {},
        notes=notes or [],
    )


def packing_radius_count(M: int, d: int) -> int:
    """r(d, M) = sum_{i <= floor((d-1)/2)} C(log2 M, i)."""
    m = log2_exact(M)
    return sum(math.comb(m, i) for i in range((d - 1) // 2 + 1))


def sphere_packing_bound(M: int, d: int) -> BoundReport:
    """M! / (r!)^{M/r}. The exponent is generally fractional, so the value is real."""
    m = log2_exact(M)
    if d < 1:
        raise OutOfRange(f"d must be >= 1, got {d}")
    r = packing_radius_count(M, d)
    value = sp.factorial(M) / sp.factorial(r) ** sp.Rational(M, r)
    notes = []
    if M % r:
        notes.append(f"exponent M/r = {M}/{r} is not an integer; the real value is reported, with its floor")
    logger.debug(f"sphere packing M={M} d={d}: r={r}")
    return real_report(
        "sphere_packing", "closed form", {"M": M, "d": d, "l": m, "r": r}, value, notes
    )


def singleton_bound(M: int, d: int) -> BoundReport:
    """M! / ((2^{d-1})!)^{2^{log M - d + 1}}, an integer."""
    m = log2_exact(M)
    if not 1 <= d <= m + 1:
        raise OutOfRange(f"need 1 <= d <= log2(M) + 1 = {m + 1}, got d={d}")
    value = Fraction(math.factorial(M), math.factorial(1 << (d - 1)) ** (1 << (m - d + 1)))
    return BoundReport(
        name="singleton",
        source="closed form",
        inputs={"M": M, "d": d, "l": m},
        exact=str(value),
        floor=math.floor(value),
    )


def construction_size(M: int, d: int) -> BoundReport:
    """
    Sizes of the coset construction.

    d = 2 (parity inner code): (M/2)!^2 + (M/2 - log M) ((M-2)/2)!^2.
    d = 3 (Hamming inner code, log M = 2^m - 1): the base term
    (M/(log M + 1))!^{log M + 1}, with the count including swapped rows in
    `extra["appendix"]`.
    """
    l = log2_exact(M)
    if d == 2:
        if M < 4:
            raise OutOfRange(f"the d=2 construction needs M >= 4, got {M}")
        half = M // 2
        size = math.factorial(half) ** 2 + (half - l) * math.factorial(half - 1) ** 2
        return BoundReport(
            name="construction_size",
            source="parity coset construction",
            inputs={"M": M, "d": d, "l": l},
            exact=str(size),
            floor=size,
        )
    if d == 3:
        m = (l + 1).bit_length() - 1
        if (1 << m) - 1 != l or m < 2:
            raise OutOfRange(f"the d=3 construction needs log2(M) = 2^m - 1, got log2(M) = {l}")
        blocks = 1 << m
        A = M // blocks
        base = math.factorial(A) ** blocks
        c_prime = Fraction(1 << ((1 << m) - 1 - m)) - Fraction((1 << m) - 4, 2)
        appendix = base * (1 + (blocks - 1) * c_prime / (A * A))
        return BoundReport(
            name="construction_size",
            source="Hamming coset construction",
            inputs={"M": M, "d": d, "l": l, "m": m},
            exact=str(base),
            floor=base,
            extra={"appendix": str(appendix), "c_prime": str(c_prime)},
            notes=["the appendix count of swap words is not confirmed by validated constructions"],
        )
    raise UnsupportedD(f"construction sizes are known for d = 2 and d = 3, got d={d}")


def extension_lower_bound(F: int, M: int, d: int, l: Optional[int] = None) -> BoundReport:
    """F(l + ceil(d/2), M, d) >= F(l, M, d) * 2^M."""
    if F < 0:
        raise OutOfRange(f"F must be non-negative, got {F}")
    value = F << M
    inputs = {"F": F, "M": M, "d": d, "window": (d + 1) // 2}
    if l is not None:
        inputs.update(l=l, l_extended=l + (d + 1) // 2)
    return BoundReport(
        name="extension_lower_bound",
        source="bit extension",
        inputs=inputs,
        exact=str(value),
        floor=value,
        lower=value,
    )
