"""Subcommand implementations. Each takes a RunConfig and returns a CommandResult."""
import logging
from typing import Any, Callable, Dict, List, Optional, Tuple

from tqdm import tqdm

from ..bounds import (
    A_U_size,
    ball_size_B,
    construction_size,
    exact_F,
    redundancy_distinct,
    singleton_bound,
    sphere_packing_bound,
)
from ..channel import (
    ChannelParams,
    Guarantee,
    brute_force_decode,
    enumerate_outputs,
    is_dcc_brute,
    is_dcc_by_distance,
    plurality_decode,
    sample_output,
    split_by_multiset,
)
from ..core.errors import (
    InvalidCode,
    InvalidParams,
    OutOfRange,
    ParseError,
    PreconditionError,
    TheoremDiscrepancy,
    UnsupportedEd,
)
from ..indexcodes import (
    construct_coset,
    construct_extend,
    format_matrix,
    inner_code_by_name,
    log2_exact,
    read_matrix,
    read_rows,
    search_exact_F,
    search_greedy,
    validate_code,
)
from ..metric import (
    INF,
    ball,
    code_dna_distance,
    distance_breakdown,
    format_distance,
    is_finite,
    to_json_value,
)
from ..models.files import dump_model, load_codebook, load_message, load_read_pool, save_read_pool, write_text
from ..models.schemas import BoundReport, MessageModel, ReadPoolModel
from ..primitives import SystemParams, is_distinct_data
from .config import RunConfig
from .output import CommandResult

logger = logging.getLogger(__name__)


def _channel(run: RunConfig) -> ChannelParams:
    return ChannelParams.parse(run.opt("tau"), run.opt("e_i"), run.opt("e_d", 0), run.opt("K"))


def _pool_rows(pool) -> List[Dict[str, Any]]:
    return [{"index": str(s.index), "data": str(s.data), "count": c} for s, c in pool.reads]


# ─── distance ───────────────────────────────────────────────────────────────

def cmd_distance(run: RunConfig) -> CommandResult:
    Z1 = load_message(run.opt("msg1"))
    Z2 = load_message(run.opt("msg2"))
    breakdown = distance_breakdown(Z1, Z2)
    if breakdown is None:
        D, fields = INF, []
    else:
        D = max(m.weight for m in breakdown.values())
        fields = [
            {
                "data": str(u),
                "weight": m.weight,
                "pairs": [[str(a), str(b)] for a, b in m.pairs],
            }
            for u, m in breakdown.items()
        ]
    logger.info(f"D = {format_distance(D)}")
    table = [{"data_field": f["data"], "weight": f["weight"]} for f in fields]
    table.append({"data_field": "all", "weight": to_json_value(D)})
    payload = {"distance": to_json_value(D), "same_multiset": is_finite(D), "data_fields": fields}
    return CommandResult(payload, table)


# ─── verify-dcc ─────────────────────────────────────────────────────────────

def cmd_verify_dcc(run: RunConfig) -> CommandResult:
    _, C = load_codebook(run.opt("codebook"))
    ch = _channel(run)
    mode = run.opt("mode", "both")
    payload: Dict[str, Any] = {
        "codewords": len(set(C)),
        "channel": {"tau": str(ch.tau), "e_i": ch.e_i, "e_d": ch.e_d, "K": ch.K},
        "regime": ch.regime.value,
    }
    row: Dict[str, Any] = {"codewords": len(set(C)), "regime": ch.regime.value}

    check = None
    if mode in ("brute", "both"):
        check = is_dcc_brute(C, ch, cap=run.caps.channel_outputs)
        witness = None
        if check.witness is not None:
            Z1, Z2, pool = check.witness
            witness = {
                "first": MessageModel.from_message(Z1).model_dump(),
                "second": MessageModel.from_message(Z2).model_dump(),
                "pool": ReadPoolModel.from_pool(pool).model_dump(),
            }
        payload["brute"] = {"is_dcc": check.is_dcc, "witness": witness}
        row["brute"] = check.is_dcc

    verdict = None
    if mode in ("distance", "both"):
        try:
            verdict = is_dcc_by_distance(C, ch)
        except UnsupportedEd as e:
            if mode == "distance":
                raise
            logger.warning(f"distance criterion skipped: {e}")
            payload["distance"] = {"verdict": None, "unsupported": str(e)}
            row["distance"] = "unsupported"
    if verdict is not None:
        groups = [
            {
                "multiset": str(U),
                "codewords": len(members),
                "distance": to_json_value(code_dna_distance(members)) if len(members) > 1 else None,
            }
            for U, members in split_by_multiset(C).items()
        ]
        payload["distance"] = {"verdict": verdict.value, "groups": groups}
        row["distance"] = verdict.value

    failure = None
    if check is not None and verdict is not None:
        agree = verdict is Guarantee.INCONCLUSIVE or (verdict is Guarantee.GUARANTEED_YES) == check.is_dcc
        payload["agree"] = agree
        row["agree"] = agree
        if not agree:
            failure = TheoremDiscrepancy(
                f"brute force says is_dcc={check.is_dcc} but the distance criterion says {verdict.value}"
            )
    return CommandResult(payload, [row], failure=failure)


# ─── construct / validate ───────────────────────────────────────────────────

def _default_inner(d: int) -> str:
    return "parity" if d <= 2 else "hamming"


def cmd_construct(run: RunConfig) -> CommandResult:
    method = run.opt("method")
    if method == "coset":
        M, d = run.opt("M"), run.opt("d")
        inner = inner_code_by_name(run.opt("inner", _default_inner(d)), log2_exact(M))
        code, report = construct_coset(M, d, inner, cap=run.caps.construction_rows)
        if run.opt("report"):
            write_text(dump_model(report), run.opt("report"))
    elif method == "extend":
        code = construct_extend(read_matrix(run.opt("input"), run.opt("d")))
    elif method == "search-exact":
        _, code = search_exact_F(run.opt("l"), run.opt("M"), run.opt("d"), cap=run.caps.search_vertices)
    elif method == "search-greedy":
        code = search_greedy(
            run.opt("l"), run.opt("M"), run.opt("d"), run.seed,
            restarts=run.opt("restarts", 16), cap=run.caps.greedy_trials,
        )
    else:
        raise ParseError(f"unknown construction method {method!r}")

    code.require_valid()
    summary = {"method": method, "l": code.l, "M": code.M, "d": code.d, "rows": code.size}
    return CommandResult(summary, [summary], raw=format_matrix(code))


def cmd_validate(run: RunConfig) -> CommandResult:
    header, rows = read_rows(run.opt("matrix"))
    d = run.opt("d", header.get("d"))
    if d is None:
        raise ParseError("the matrix header carries no d; pass --d")
    result = validate_code(rows, d)
    violation = None
    if not result.valid:
        a, b = result.pair
        violation = {"first": str(a), "second": str(b), "distance": result.distance}
    payload = {
        "rows": len(rows), "l": rows[0].l, "M": rows[0].M, "d": d,
        "valid": result.valid, "violation": violation,
    }
    failure = None
    if not result.valid:
        failure = InvalidCode(f"rows '{violation['first']}' and '{violation['second']}' are at distance "
                              f"{violation['distance']} < d={d}")
    row = {k: v for k, v in payload.items() if k != "violation"}
    return CommandResult(payload, [row], failure=failure)


# ─── bounds / ball-size ─────────────────────────────────────────────────────

def _bounds_for(M: int, d: int, l: Optional[int], run: RunConfig) -> Tuple[List[BoundReport], Dict[str, Any]]:
    m = M.bit_length() - 1 if M >= 2 and not M & (M - 1) else None
    l = log2_exact(M) if l is None else l
    reports: List[BoundReport] = []
    row: Dict[str, Any] = {"M": M, "l": l, "d": d}
    if l == m:
        if d <= m + 1:
            singleton = singleton_bound(M, d)
            reports.append(singleton)
            row["singleton"] = singleton.floor
        sphere = sphere_packing_bound(M, d)
        reports.append(sphere)
        row["sphere_packing"] = sphere.floor
        if d in (2, 3):
            try:
                built = construction_size(M, d)
                reports.append(built)
                row["construction"] = built.floor
            except OutOfRange:
                row["construction"] = None
    F = exact_F(l, M, d, cap=run.caps.search_vertices)
    if F is not None:
        reports.append(BoundReport(
            name="F", source="exact", inputs={"l": l, "M": M, "d": d}, exact=str(F), floor=F
        ))
    row["exact_F"] = F
    return reports, row


def cmd_bounds(run: RunConfig) -> CommandResult:
    sweep = run.opt("sweep")
    if sweep:
        cases = [(1 << k, d) for k in range(1, sweep + 1) for d in range(1, k + 2)]
        reports, table = [], []
        for M, d in tqdm(cases, desc="bounds", unit="case"):
            r, row = _bounds_for(M, d, None, run)
            reports.extend(r)
            table.append(row)
        logger.info(f"bounds sweep: {len(cases)} cases up to M={1 << sweep}")
    else:
        if run.opt("M") is None or run.opt("d") is None:
            raise InvalidParams("bounds needs --M and --d, or --sweep")
        reports, row = _bounds_for(run.opt("M"), run.opt("d"), run.opt("l"), run)
        table = [row]
        l = row["l"]
        if run.opt("tau") is not None:
            au = A_U_size(
                l, run.opt("M"), run.opt("tau"), run.opt("K", 1), run.opt("e_i", 0),
                seed=run.seed, cap=run.caps.search_vertices,
            )
            reports.append(au)
            row["A_U"] = au.exact if au.exact is not None else f"[{au.lower}, {au.upper}]"
        if run.opt("L") is not None:
            red = redundancy_distinct(run.opt("M"), run.opt("L"), l)
            reports.append(red)
            row["redundancy"] = red.value
    payload = [r.model_dump() for r in reports]
    return CommandResult(payload, table)


def cmd_ball_size(run: RunConfig) -> CommandResult:
    r = run.opt("r")
    if run.opt("message"):
        Z = load_message(run.opt("message"))
        members = ball(Z, r, cap=run.caps.ball_candidates)
        payload = {"r": r, "message": str(Z), "size": len(members)}
    else:
        M = run.opt("M")
        payload = {"r": r, "M": M, "size": ball_size_B(r, M, cap=run.caps.permanent_dimension)}
    return CommandResult(payload, [payload])


# ─── simulate / enumerate ───────────────────────────────────────────────────

def cmd_simulate(run: RunConfig) -> CommandResult:
    Z = load_message(run.opt("msg"))
    ch = _channel(run)
    pool = sample_output(Z, ch, run.seed, worst_case=bool(run.opt("worst_case", False)))
    if run.opt("save_pool"):
        save_read_pool(pool, run.opt("save_pool"))
    pool_json = ReadPoolModel.from_pool(pool).model_dump()
    if not run.opt("decode", False):
        return CommandResult(pool_json, _pool_rows(pool))

    if not is_distinct_data(Z):
        raise PreconditionError("plurality decoding needs pairwise-distinct data-fields")
    decoded = plurality_decode(pool, Z.params, ch)
    match = decoded == Z
    logger.info(f"decoded {'matches' if match else 'differs from'} the source")
    payload = {
        "pool": pool_json,
        "decoded": MessageModel.from_message(decoded).model_dump(),
        "match": match,
    }
    table = [{"index": str(s.index), "data": str(s.data), "match": match} for s in decoded.strands]
    return CommandResult(payload, table)


def _system_params(text: str) -> SystemParams:
    try:
        M, L, l = (int(v) for v in text.split(","))
    except ValueError as e:
        raise InvalidParams(f"--params expects M,L,l, got {text!r}") from e
    return SystemParams(M, L, l)


def cmd_decode(run: RunConfig) -> CommandResult:
    pool = load_read_pool(run.opt("pool"))
    ch = _channel(run)
    if run.opt("codebook"):
        _, C = load_codebook(run.opt("codebook"))
        decoded = brute_force_decode(pool, C, ch, cap=run.caps.channel_outputs)
        logger.info(f"{len(decoded)} of {len(set(C))} codewords could have produced the pool")
        payload = {
            "unique": len(decoded) == 1,
            "candidates": [MessageModel.from_message(Z).model_dump() for Z in decoded],
        }
    else:
        decoded = [plurality_decode(pool, _system_params(run.opt("params")), ch)]
        payload = {"unique": True, "candidates": [MessageModel.from_message(decoded[0]).model_dump()]}
    table = [
        {"candidate": k, "index": str(s.index), "data": str(s.data)}
        for k, Z in enumerate(decoded) for s in Z.strands
    ]
    return CommandResult(payload, table)


def cmd_enumerate(run: RunConfig) -> CommandResult:
    Z = load_message(run.opt("msg"))
    ch = _channel(run)
    pools = sorted(enumerate_outputs(Z, ch, cap=run.caps.channel_outputs))
    payload = {"count": len(pools), "pools": [ReadPoolModel.from_pool(p).model_dump() for p in pools]}
    table = [dict(pool=k, **r) for k, p in enumerate(pools) for r in _pool_rows(p)]
    return CommandResult(payload, table)


COMMANDS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    "distance": cmd_distance,
    "verify-dcc": cmd_verify_dcc,
    "construct": cmd_construct,
    "validate": cmd_validate,
    "bounds": cmd_bounds,
    "ball-size": cmd_ball_size,
    "simulate": cmd_simulate,
    "enumerate": cmd_enumerate,
    "decode": cmd_decode,
}
