"""Request and response bodies for the scheduling service."""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

Algorithm = Literal["bts", "ets"]
Interference = Literal["literal", "channel_aware"]


class RandomTopologyRequest(BaseModel):
    n: int = Field(ge=1)
    channel_count: int = Field(ge=1)
    radius: float = 100.0
    side: float = Field(gt=0)
    seed: int = Field(default=0, ge=0)
    require_connected: bool = False
    max_attempts: int = Field(default=50, ge=1)


class TopologyResponse(BaseModel):
    topology_text: str
    n: int
    seed: int
    retries: int
    connected: bool
    edge_count: int


class ViolationModel(BaseModel):
    slot: int
    kind: str
    detail: str


class ReportModel(BaseModel):
    ok: bool
    strict: bool
    horizon: int
    latency: int
    informed: int
    violations: List[ViolationModel]

    @classmethod
    def from_report(cls, rep) -> "ReportModel":
        return cls(ok=rep.ok, strict=rep.strict, horizon=rep.horizon,
                   latency=rep.latency, informed=len(rep.rcv_time),
                   violations=[ViolationModel(slot=v.slot, kind=v.kind,
                                              detail=v.detail)
                               for v in rep.violations])


class ScheduleRequest(BaseModel):
    topology_text: str
    algorithm: Algorithm = "ets"
    prune_empty: bool = True
    interference_model: Interference = "literal"
    strict: bool = True


class ScheduleResponse(BaseModel):
    algorithm: Algorithm
    horizon: int
    depth: int
    ratio: float
    schedule_text: str
    report: ReportModel
    findings: List[str] = []


class VerifyRequest(BaseModel):
    topology_text: str
    schedule_text: str
    strict: bool = False


class OptimalRequest(BaseModel):
    topology_text: str
    horizon_cap: int = Field(default=32, ge=1)


class OptimalResponse(BaseModel):
    optimal: Optional[int]
    exceeded: bool


class SweepRequest(BaseModel):
    n_values: List[int]
    k_values: List[int]
    radius: float = 100.0
    area_mode: Literal["scaled", "fixed"] = "scaled"
    area_side: Optional[float] = None
    trials: int = Field(default=10, ge=1)
    master_seed: int = Field(default=0, ge=0)
    algorithms: List[Algorithm] = ["bts", "ets"]
    prune_empty: bool = True
    interference_model: Interference = "literal"
    strict_verify: bool = True
    max_attempts: int = Field(default=50, ge=1)


class CellSummaryModel(BaseModel):
    n: int
    k: int
    algo: Algorithm
    trials: int
    mean_latency: float
    mean_depth: float
    mean_ratio: float


class SweepResponse(BaseModel):
    row_count: int
    csv_text: str
    summary: List[CellSummaryModel]
