"""Worked instances shared across the test modules."""
from dnacc.indexcodes import IndexCode, IndexTuple
from dnacc.primitives import SystemParams, message_from_pairs

# ─── Two messages sharing a data-field multiset, D = 1 ────────────────────────

SHARED_PARAMS = SystemParams(M=4, L=5, l=2)

SHARED_Z1 = message_from_pairs(SHARED_PARAMS, [("00", "111"), ("01", "000"), ("10", "111"), ("11", "001")])
SHARED_Z2 = message_from_pairs(SHARED_PARAMS, [("00", "111"), ("01", "111"), ("10", "001"), ("11", "000")])

SHARED_WEIGHTS = {"000": 1, "001": 1, "111": 1}

# ─── Distance-2 pair whose radius-1 balls do not meet ────────────────────────

DISJOINT_PARAMS = SystemParams(M=4, L=6, l=4)

DISJOINT_Z1 = message_from_pairs(
    DISJOINT_PARAMS, [("0000", "00"), ("1100", "01"), ("1010", "10"), ("1001", "11")]
)
DISJOINT_Z2 = message_from_pairs(
    DISJOINT_PARAMS, [("0000", "01"), ("1100", "00"), ("1010", "11"), ("1001", "10")]
)

# ─── A (2, 4, 2) index code of size 6 and its first extension step ───────────

P_ROWS = [
    "00 01 11 10",
    "00 11 10 01",
    "00 10 01 11",
    "11 01 00 10",
    "11 00 10 01",
    "11 10 01 00",
]

P_EXTENDED_STEP_1 = [
    "000 010 110 100",
    "000 110 100 010",
    "000 100 010 110",
    "110 010 000 100",
    "110 000 100 010",
    "110 100 010 000",
    "101 010 110 100",
    "101 110 100 010",
    "101 100 010 110",
    "011 010 000 100",
    "011 000 100 010",
    "011 100 010 000",
]


def rows(lines):
    return [IndexTuple.from_strs(line.split()) for line in lines]


def code(lines, d):
    parsed = rows(lines)
    return IndexCode(parsed[0].l, parsed[0].M, d, tuple(parsed))


P = code(P_ROWS, 2)
P_MATRIX = "# l=2 M=4 d=2\n" + "\n".join(P_ROWS) + "\n"
