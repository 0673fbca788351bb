"""JSON wire formats. Index and data strings are big-endian bit strings."""
from typing import Annotated, Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..channel.model import ReadPool
from ..primitives import BitVector, Message, Strand, SystemParams, make_message

BitString = Annotated[str, Field(pattern=r"^[01]+$")]


class StrandModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: BitString
    data: BitString

    @classmethod
    def from_strand(cls, s: Strand) -> "StrandModel":
        return cls(index=str(s.index), data=str(s.data))

    def to_strand(self) -> Strand:
        return Strand(BitVector.from_str(self.index), BitVector.from_str(self.data))


class ParamsModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    M: int
    L: int
    l: int

    @classmethod
    def from_params(cls, p: SystemParams) -> "ParamsModel":
        return cls(M=p.M, L=p.L, l=p.l)

    def to_params(self) -> SystemParams:
        return SystemParams(self.M, self.L, self.l)


class MessageModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    M: int
    L: int
    l: int
    strands: List[StrandModel]

    @classmethod
    def from_message(cls, Z: Message) -> "MessageModel":
        p = Z.params
        return cls(M=p.M, L=p.L, l=p.l, strands=[StrandModel.from_strand(s) for s in Z.strands])

    def to_message(self) -> Message:
        params = SystemParams(self.M, self.L, self.l)
        return make_message(params, (s.to_strand() for s in self.strands))


class CodebookModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params: ParamsModel
    codewords: List[List[StrandModel]]

    @classmethod
    def from_code(cls, params: SystemParams, codewords: List[Message]) -> "CodebookModel":
        return cls(
            params=ParamsModel.from_params(params),
            codewords=[[StrandModel.from_strand(s) for s in Z.strands] for Z in sorted(codewords)],
        )

    def to_code(self) -> Tuple[SystemParams, List[Message]]:
        params = self.params.to_params()
        return params, [make_message(params, (s.to_strand() for s in cw)) for cw in self.codewords]


class ReadModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    index: BitString
    data: BitString
    count: int = Field(ge=1)


class ReadPoolModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    reads: List[ReadModel]

    @classmethod
    def from_pool(cls, pool: ReadPool) -> "ReadPoolModel":
        return cls(reads=[
            ReadModel(index=str(s.index), data=str(s.data), count=c) for s, c in pool.reads
        ])

    def to_pool(self) -> ReadPool:
        counts: Dict[Strand, int] = {}
        for r in self.reads:
            s = Strand(BitVector.from_str(r.index), BitVector.from_str(r.data))
            counts[s] = counts.get(s, 0) + r.count
        return ReadPool(tuple(sorted(counts.items())))


class BoundReport(BaseModel):
    """One bound or count, with the result that produced it.

    `exact` holds an integer or a reduced fraction "p/q"; `value` and `log2`
    decimal strings at the configured precision; `lower`/`upper` bracket
    values that could not be computed exactly; `extra` carries secondary
    quantities of the same result.
    """
    model_config = ConfigDict(frozen=True)

    name: str
    source: str
    inputs: Dict[str, Any]
    exact: Optional[str] = None
    floor: Optional[int] = None
    value: Optional[str] = None
    log2: Optional[str] = None
    lower: Optional[int] = None
    upper: Optional[int] = None
    extra: Dict[str, Any] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    @field_validator("floor", "lower", "upper")
    @classmethod
    def _non_negative(cls, v):
        if v is not None and v < 0:
            raise ValueError("bound values are non-negative")
        return v


class ConstructionReport(BaseModel):
    """How a coset construction went: the counting target against the validated result."""
    M: int
    d: int
    inner: str
    inner_size: int
    cosets: int
    base_rows: int
    kept_per_coset: Dict[str, List[str]]
    candidate_rows: int
    augmented_rows: int
    dropped_rows: List[str] = Field(default_factory=list)
    target_size: str
    achieved_size: int
    notes: List[str] = Field(default_factory=list)
