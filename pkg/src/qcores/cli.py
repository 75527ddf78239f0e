"""Command-line client for the verification service.

The service app is mounted in-process by default, so no running server is
required; pass --server to talk to a remote instance over HTTP instead.
Exit codes: 0 success / all verified, 1 at least one mismatch, 2 usage or
precision error.
"""

from __future__ import annotations

import asyncio
import json
import sys

import click
import httpx


class ServiceClient:
    """POSTs to a remote base URL, or to the ASGI app in-process."""

    def __init__(self, server: str | None = None):
        self.server = server

    def post(self, path: str, payload: dict) -> httpx.Response:
        if self.server:
            with httpx.Client(base_url=self.server, timeout=None) as client:
                return client.post(path, json=payload)

        from .service import create_app

        async def go() -> httpx.Response:
            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://qcores.internal", timeout=None
            ) as client:
                return await client.post(path, json=payload)

        return asyncio.run(go())


def _call(client: ServiceClient, path: str, payload: dict) -> dict:
    try:
        resp = client.post(path, payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(2)
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        if isinstance(detail, (dict, list)):
            detail = json.dumps(detail)
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return resp.json()


def _report_line(report: dict) -> str:
    name = report["identity"]["name"]
    params = report["identity"]["params"]
    label = f"{name}{params}" if params else name
    status = report["status"]
    if status == "verified":
        return (
            f"{label}: verified (order {report['order']},"
            f" effective {report['effective_order']},"
            f" checked {report['checked_count']})"
        )
    if status == "mismatch":
        fm = report["first_mismatch"]
        extra = f" {report['message']}" if report["message"] else ""
        return (
            f"{label}: mismatch at exponent {fm['exponent']}:"
            f" lhs {fm['lhs']}, rhs {fm['rhs']}.{extra}"
        )
    return f"{label}: error: {report['message']}"


def _report_exit(report: dict) -> int:
    return {"verified": 0, "mismatch": 1}.get(report["status"], 2)


def _strip_timings(report: dict) -> dict:
    out = dict(report)
    out["elapsed_ms"] = 0
    return out


def _write_report_file(path: str, order: int, reports: list[dict], summary: dict) -> None:
    doc = {
        "order": order,
        "reports": [_strip_timings(r) for r in reports],
        "summary": summary,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


@click.group()
@click.option(
    "--server",
    default=None,
    metavar="URL",
    help="Base URL of a running service; by default the app runs in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Expand eta quotients, count t-cores, and verify the identity catalog."""
    ctx.obj = ServiceClient(server)


@main.command()
@click.option("--expr", required=True, help="Eta-quotient expression, e.g. f5^10/f1^2.")
@click.option("--order", default=200, show_default=True, type=int)
@click.option("--from", "from_exp", default=None, type=int, help="Lowest exponent printed.")
@click.option("--to", "to_exp", default=None, type=int, help="Highest exponent printed.")
@click.option("--dense", is_flag=True, help="Print explicit zero coefficients.")
@click.option("--allow-large-order", is_flag=True, help="Permit orders above 2000.")
@click.pass_obj
def series(client, expr, order, from_exp, to_exp, dense, allow_large_order):
    """Expand an eta-quotient expression and print exponent/coefficient pairs."""
    data = _call(
        client,
        "/series",
        {
            "expr": expr,
            "order": order,
            "from_exp": from_exp,
            "to_exp": to_exp,
            "dense": dense,
            "allow_large": allow_large_order,
        },
    )
    for e, c in data["terms"]:
        click.echo(f"{e}\t{c}")


@main.command()
@click.option("--t", "t", required=True, type=int, help="Core size.")
@click.option("--pairs", is_flag=True, help="Count pairs of t-cores instead.")
@click.option("--upto", required=True, type=int, help="Largest weight n reported.")
@click.option("--oracle", is_flag=True, help="Cross-check against brute-force enumeration.")
@click.pass_obj
def count(client, t, pairs, upto, oracle):
    """Print t-core (or t-core pair) counts from the generating function."""
    data = _call(
        client,
        "/count",
        {"t": t, "pairs": pairs, "upto": upto, "oracle": oracle},
    )
    for n, v in enumerate(data["values"]):
        click.echo(f"{n}\t{v}")
    if data["oracle"] is not None:
        click.echo(f"oracle: {_report_line(data['oracle'])}")
        sys.exit(_report_exit(data["oracle"]))


@main.command()
@click.option("--name", required=True, help="Catalog entry name, e.g. PROP3.1.")
@click.option("--param", "params", multiple=True, type=int, help="Entry parameter (repeatable).")
@click.option("--order", default=200, show_default=True, type=int)
@click.option("--report", "report_path", default=None, type=click.Path(), help="Write a JSON report.")
@click.option("--allow-large-order", is_flag=True)
@click.pass_obj
def verify(client, name, params, order, report_path, allow_large_order):
    """Check one catalog identity at the given order."""
    data = _call(
        client,
        "/verify",
        {
            "name": name,
            "params": list(params),
            "order": order,
            "allow_large": allow_large_order,
        },
    )
    click.echo(_report_line(data))
    if report_path:
        counts = {
            "total": 1,
            "verified": int(data["status"] == "verified"),
            "mismatch": int(data["status"] == "mismatch"),
            "errors": int(data["status"] == "error"),
            "vacuous": int(
                data["status"] == "error"
                and data["message"].startswith("vacuous comparison")
            ),
            "ok": data["status"] == "verified",
        }
        _write_report_file(report_path, order, [data], counts)
    sys.exit(_report_exit(data))


@main.command("verify-all")
@click.option("--order", default=200, show_default=True, type=int)
@click.option("--report", "report_path", default=None, type=click.Path(), help="Write a JSON report.")
@click.option("--allow-large-order", is_flag=True)
@click.pass_obj
def verify_all(client, order, report_path, allow_large_order):
    """Check every catalog identity over its default parameter sweep."""
    data = _call(
        client, "/verify-all", {"order": order, "allow_large": allow_large_order}
    )
    for report in data["reports"]:
        click.echo(_report_line(report))
    s = data["summary"]
    click.echo(
        f"summary: {s['verified']}/{s['total']} verified,"
        f" {s['mismatch']} mismatched, {s['errors']} errors"
        f" ({s['vacuous']} vacuous at this order)"
    )
    if report_path:
        _write_report_file(report_path, order, data["reports"], s)
    if s["mismatch"]:
        sys.exit(1)
    if not s["ok"]:
        sys.exit(2)


@main.command()
@click.option("--expr", required=True, help="Eta-quotient expression to scan.")
@click.option("--step", required=True, type=int, help="Progression step M in M*n+A.")
@click.option("--offset", required=True, type=int, help="Progression offset A.")
@click.option("--mod", required=True, type=int, help="Required divisor of each coefficient.")
@click.option("--order", default=200, show_default=True, type=int)
@click.option("--allow-large-order", is_flag=True)
@click.pass_obj
def scan(client, expr, step, offset, mod, order, allow_large_order):
    """Scan coefficients along an arithmetic progression for a congruence."""
    data = _call(
        client,
        "/scan",
        {
            "expr": expr,
            "step": step,
            "offset": offset,
            "mod": mod,
            "order": order,
            "allow_large": allow_large_order,
        },
    )
    click.echo(_report_line(data))
    sys.exit(_report_exit(data))


@main.command()
@click.option("--upto", required=True, type=int, help="Largest index reported.")
@click.option("--check-closed-form", is_flag=True, help="Verify the index-4m+3 closed form.")
@click.pass_obj
def bseq(client, upto, check_closed_form):
    """Print the linear-recurrence sequence B_0..B_upto."""
    data = _call(
        client, "/bseq", {"upto": upto, "check_closed_form": check_closed_form}
    )
    for k, v in enumerate(data["values"]):
        click.echo(f"{k}\t{v}")
    if data["closed_form_ok"] is not None:
        click.echo(f"closed-form check: {'ok' if data['closed_form_ok'] else 'FAILED'}")
        if not data["closed_form_ok"]:
            sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the verification service under uvicorn."""
    import uvicorn

    uvicorn.run("qcores.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
