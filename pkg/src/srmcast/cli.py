"""Command-line client for the scheduling service.

Every subcommand talks HTTP. By default the service runs in-process (no
daemon needed); point --server at a running instance to go remote. Exit
codes: 0 success, 1 usage or input error, 2 schedule failed verification.
"""

from __future__ import annotations

import sys
import warnings
from typing import List, Optional

import click
import httpx

from .errors import VerificationError

INTERFERENCE = {"literal": "literal", "aware": "channel_aware"}


def _client(server: Optional[str]) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    with warnings.catch_warnings():
        # starlette nags about the httpx major version; harmless here
        warnings.filterwarnings(
            "ignore", message=r"Using `httpx` with `starlette.testclient`")
        from starlette.testclient import TestClient

    from .service.app import create_app
    return TestClient(create_app())


def _checked(resp: httpx.Response) -> dict:
    if resp.status_code == 409:
        detail = resp.json().get("detail")
        msg = detail.get("message") if isinstance(detail, dict) else str(detail)
        raise VerificationError(msg or "schedule failed verification")
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail")
        except ValueError:
            detail = resp.text
        raise click.ClickException(str(detail))
    return resp.json()


def _int_list(ctx, param, value):
    try:
        items = [int(p) for p in value.replace(",", " ").split()]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers")
    if not items:
        raise click.BadParameter("expected at least one integer")
    return items


def _area(ctx, param, value):
    if value == "scaled":
        return "scaled", None
    if value.startswith("fixed:"):
        try:
            side = float(value[len("fixed:"):])
        except ValueError:
            raise click.BadParameter("fixed side must be a number")
        if side <= 0:
            raise click.BadParameter("fixed side must be positive")
        return "fixed", side
    raise click.BadParameter("use 'scaled' or 'fixed:<side>'")


@click.group()
@click.option("--server", metavar="URL", default=None,
              help="Base URL of a running service; default is in-process.")
@click.pass_context
def cli(ctx, server):
    """Broadcast scheduling for single-radio multi-channel networks."""
    ctx.obj = server


@cli.command()
@click.option("--n-list", required=True, callback=_int_list,
              help="Comma-separated node counts.")
@click.option("--k-list", required=True, callback=_int_list,
              help="Comma-separated channel counts.")
@click.option("--radius", type=float, default=100.0, show_default=True)
@click.option("--area", default="scaled", callback=_area, show_default=True,
              help="'scaled' (square side = n) or 'fixed:<side>'.")
@click.option("--trials", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--algo", type=click.Choice(["bts", "ets", "both"]),
              default="both", show_default=True)
@click.option("--prune/--no-prune", default=True, show_default=True,
              help="Drop transmissions with no intended receivers.")
@click.option("--interference", type=click.Choice(sorted(INTERFERENCE)),
              default="literal", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True,
              help="CSV output path.")
@click.pass_context
def sweep(ctx, n_list, k_list, radius, area, trials, seed, algo, prune,
          interference, out):
    """Run a seeded sweep; one CSV row per (n, k, trial, algorithm)."""
    area_mode, area_side = area
    body = {
        "n_values": n_list, "k_values": k_list, "radius": radius,
        "area_mode": area_mode, "area_side": area_side, "trials": trials,
        "master_seed": seed,
        "algorithms": ["bts", "ets"] if algo == "both" else [algo],
        "prune_empty": prune, "interference_model": INTERFERENCE[interference],
    }
    with _client(ctx.obj) as client:
        data = _checked(client.post("/sweep", json=body))
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(data["csv_text"])
    click.echo("wrote %d rows to %s" % (data["row_count"], out))
    click.echo("%5s %4s %-4s %6s %13s %11s %11s"
               % ("n", "k", "algo", "trials", "mean_latency", "mean_depth",
                  "mean_ratio"))
    for cell in data["summary"]:
        click.echo("%5d %4d %-4s %6d %13.2f %11.2f %11.3f"
                   % (cell["n"], cell["k"], cell["algo"], cell["trials"],
                      cell["mean_latency"], cell["mean_depth"],
                      cell["mean_ratio"]))


@cli.command()
@click.option("--topology", "topology_path", required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Topology file to schedule.")
@click.option("--algo", type=click.Choice(["bts", "ets", "both"]),
              default="both", show_default=True)
@click.option("--prune/--no-prune", default=True, show_default=True)
@click.option("--interference", type=click.Choice(sorted(INTERFERENCE)),
              default="literal", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Also write the schedule text here (single --algo only).")
@click.pass_context
def run(ctx, topology_path, algo, prune, interference, out):
    """Schedule one topology file; print schedule, report, and ratio."""
    algorithms = ["bts", "ets"] if algo == "both" else [algo]
    if out and len(algorithms) != 1:
        raise click.UsageError("--out requires --algo bts or --algo ets")
    with open(topology_path, encoding="utf-8") as fh:
        topology_text = fh.read()
    failed = False
    with _client(ctx.obj) as client:
        for name in algorithms:
            data = _checked(client.post("/schedule", json={
                "topology_text": topology_text, "algorithm": name,
                "prune_empty": prune,
                "interference_model": INTERFERENCE[interference],
                "strict": True,
            }))
            rep = data["report"]
            click.echo("algo=%s" % name)
            click.echo(data["schedule_text"], nl=False)
            click.echo("%s horizon=%d latency=%d informed=%d"
                       % ("ok" if rep["ok"] else "failed", rep["horizon"],
                          rep["latency"], rep["informed"]))
            for v in rep["violations"]:
                click.echo("violation %d %s %s"
                           % (v["slot"], v["kind"], v["detail"]))
            for finding in data["findings"]:
                click.echo("finding: %s" % finding)
            click.echo("horizon=%d lower_bound=%d ratio=%.6f"
                       % (data["horizon"], data["depth"], data["ratio"]))
            if out:
                with open(out, "w", encoding="utf-8", newline="") as fh:
                    fh.write(data["schedule_text"])
            if not rep["ok"]:
                failed = True
    if failed:
        raise VerificationError("schedule failed strict verification")


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service under uvicorn."""
    import uvicorn
    uvicorn.run("srmcast.service.app:app", host=host, port=port)


def main(argv: Optional[List[str]] = None) -> int:
    """Dispatch with the documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return int(exc.exit_code)
    except click.ClickException as exc:
        exc.show()
        return 1
    except VerificationError as exc:
        click.echo("verification failed: %s" % exc, err=True)
        return 2
    except httpx.HTTPError as exc:
        click.echo("transport error: %s" % exc, err=True)
        return 1
    return 0


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
