"""HTTP face of the scheduler.

Stateless: every endpoint takes the full problem in the request (topologies
and schedules travel in their text forms) and computes from scratch. Error
mapping: malformed inputs or impossible generation requests give 400, a sweep
whose schedule fails verification gives 409 with the offending report.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..errors import (InstanceTooLargeError, ScheduleFormatError,
                      TopologyError, VerificationError)
from ..experiment import (ExperimentConfig, build_schedule, connected_instance,
                          latency_ratio, run_sweep)
from ..ets import build_broadcast_tree, ets_schedule, layer_gap_findings
from ..layering import build_layers
from ..schedule import format_schedule, parse_schedule
from ..topology import format_topology, parse_topology, random_topology
from ..verify import brute_force_optimal, replay
from . import models


def create_app() -> FastAPI:
    app = FastAPI(title="srmcast", version=__version__)

    @app.get("/health")
    def health():
        return {"status": "ok", "service": "srmcast", "version": __version__}

    @app.post("/topology/random", response_model=models.TopologyResponse)
    def topology_random(req: models.RandomTopologyRequest):
        try:
            if req.require_connected:
                t, seed, retries = connected_instance(
                    req.n, req.channel_count, req.radius, req.side,
                    req.seed, 0, req.max_attempts)
            else:
                t = random_topology(req.n, req.channel_count, req.radius,
                                    req.side, req.seed)
                seed, retries = req.seed, 0
        except TopologyError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        edges = int(t.adjacency_matrix().sum()) // 2
        return models.TopologyResponse(
            topology_text=format_topology(t), n=t.n, seed=seed,
            retries=retries, connected=t.is_connected(), edge_count=edges)

    @app.post("/schedule", response_model=models.ScheduleResponse)
    def schedule(req: models.ScheduleRequest):
        try:
            t = parse_topology(req.topology_text)
        except TopologyError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        d = build_layers(t)
        if req.algorithm == "ets":
            tree = build_broadcast_tree(t, d)
            s = ets_schedule(t, d, tree,
                             interference_model=req.interference_model,
                             prune_empty=req.prune_empty)
            findings = layer_gap_findings(t, d, tree, s)
        else:
            s = build_schedule(t, d, "bts", req.prune_empty,
                               req.interference_model)
            findings = []
        report = replay(t, s, strict=req.strict)
        return models.ScheduleResponse(
            algorithm=req.algorithm, horizon=s.horizon, depth=d.depth,
            ratio=latency_ratio(s.horizon, d.depth),
            schedule_text=format_schedule(s),
            report=models.ReportModel.from_report(report),
            findings=findings)

    @app.post("/verify", response_model=models.ReportModel)
    def verify(req: models.VerifyRequest):
        try:
            t = parse_topology(req.topology_text)
            s = parse_schedule(req.schedule_text)
        except (TopologyError, ScheduleFormatError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.ReportModel.from_report(replay(t, s, strict=req.strict))

    @app.post("/optimal", response_model=models.OptimalResponse)
    def optimal(req: models.OptimalRequest):
        try:
            t = parse_topology(req.topology_text)
            best = brute_force_optimal(t, horizon_cap=req.horizon_cap)
        except (TopologyError, InstanceTooLargeError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return models.OptimalResponse(optimal=best, exceeded=best is None)

    @app.post("/sweep", response_model=models.SweepResponse)
    def sweep(req: models.SweepRequest):
        try:
            cfg = ExperimentConfig(
                n_values=tuple(req.n_values), k_values=tuple(req.k_values),
                radius=req.radius, area_mode=req.area_mode,
                area_side=req.area_side, trials=req.trials,
                master_seed=req.master_seed,
                algorithms=tuple(req.algorithms),
                prune_empty=req.prune_empty,
                interference_model=req.interference_model,
                strict_verify=req.strict_verify,
                max_attempts=req.max_attempts)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        try:
            result = run_sweep(cfg)
        except TopologyError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except VerificationError as exc:
            detail = {"message": str(exc)}
            if exc.report is not None:
                detail["report"] = models.ReportModel.from_report(
                    exc.report).model_dump()
            raise HTTPException(status_code=409, detail=detail)
        return models.SweepResponse(
            row_count=len(result.rows), csv_text=result.csv_text,
            summary=[models.CellSummaryModel(**cell)
                     for cell in result.summary])

    return app


app = create_app()
