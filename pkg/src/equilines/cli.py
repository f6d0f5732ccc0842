"""Command-line front end: a thin client over the HTTP service.

Every command builds a request, sends it to the service (in-process by
default, or a remote base URL via --server), and maps the response to files
and exit codes.  Machine-readable output goes to stdout, logs to stderr.

Exit codes: 0 success / certificate passed, 1 computed but failed
(certification failure or search non-convergence), 2 invalid input or I/O
error.
"""

from __future__ import annotations

import asyncio
import json
import sys
from pathlib import Path

import click
import httpx

_APP = None


def _get_app():
    global _APP
    if _APP is None:
        from .service import create_app

        _APP = create_app()
    return _APP


def _request(server: str | None, path: str, payload: dict) -> httpx.Response:
    if server:
        with httpx.Client(base_url=server, timeout=None) as client:
            return client.post(path, json=payload)

    async def go():
        transport = httpx.ASGITransport(app=_get_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://equilines", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _call(server: str | None, path: str, payload: dict) -> httpx.Response:
    try:
        resp = _request(server, path, payload)
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        sys.exit(2)
    if resp.status_code >= 400:
        try:
            detail = resp.json().get("detail", resp.text)
        except ValueError:
            detail = resp.text
        click.echo(f"error: {detail}", err=True)
        sys.exit(2)
    return resp


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _write_output(out: str | None, content: str) -> None:
    if out is None:
        click.echo(content, nl=False)
    else:
        try:
            Path(out).write_text(content)
        except OSError as exc:
            click.echo(f"error: cannot write {out}: {exc}", err=True)
            sys.exit(2)


def _read_input(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        click.echo(f"error: cannot read {path}: {exc}", err=True)
        sys.exit(2)


@click.group()
@click.option("--server", default=None, metavar="URL",
              help="Base URL of a running service; default computes in-process.")
@click.pass_context
def main(ctx, server):
    """Construct, certify, and convert equiangular line sets; search for SICs."""
    ctx.obj = {"server": server}


@main.command()
@click.argument("name", type=click.Choice(
    ["hexagon", "icosahedron", "fano28", "leech276", "restrict176"]))
@click.option("--out", default=None, metavar="PATH", help="Write the line set here.")
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True, help="Line-set output format.")
@click.option("--tol", default=1e-10, show_default=True, help="Certification tolerance.")
@click.pass_context
def construct(ctx, name, out, fmt, tol):
    """Build a named line set and certify it; exit 0 only if it passes."""
    resp = _call(ctx.obj["server"], "/construct", {"name": name, "tol": tol, "format": fmt})
    body = resp.json()
    cert = body["certificate"]
    rendered = body["text"] if fmt == "text" else _dumps(body["lineset"])
    if out is not None:
        _write_output(out, rendered)
        click.echo(_dumps(cert), nl=False)
    elif fmt == "text":
        click.echo(rendered, nl=False)
        click.echo(_dumps(cert), nl=False, err=True)
    else:
        click.echo(_dumps({"lineset": body["lineset"], "certificate": cert}), nl=False)
    sys.exit(0 if cert["is_equiangular"] else 1)


@main.command()
@click.argument("infile", metavar="FILE")
@click.option("--tol", default=1e-10, show_default=True, help="Certification tolerance.")
@click.pass_context
def certify(ctx, infile, tol):
    """Certify a line-set file (JSON or text); SIC check when complex with N = d^2."""
    raw = _read_input(infile)
    if raw.lstrip().startswith("{"):
        try:
            payload = {"lineset": json.loads(raw), "tol": tol}
        except ValueError as exc:
            click.echo(f"error: unparseable JSON: {exc}", err=True)
            sys.exit(2)
    else:
        payload = {"lineset_text": raw, "tol": tol}
    body = _call(ctx.obj["server"], "/certify", payload).json()
    click.echo(_dumps(body), nl=False)
    sys.exit(0 if body["passed"] else 1)


@main.command("search-sic")
@click.option("-d", "--dimension", required=True, type=int, help="Hilbert-space dimension.")
@click.option("--seed", default=0, show_default=True, help="Random seed.")
@click.option("--restarts", default=50, show_default=True, help="Random restarts.")
@click.option("--max-iters", default=2000, show_default=True,
              help="Objective evaluations per restart.")
@click.option("--tol", default=1e-8, show_default=True,
              help="Squared-overlap tolerance for certification.")
@click.option("--group", type=click.Choice(["wh", "three-qubit"]), default="wh",
              show_default=True, help="Covariance group.")
@click.option("--threads", default=1, show_default=True, help="Concurrent restarts.")
@click.option("--out", default=None, metavar="PATH",
              help="Write fiducial + orbit + certificate JSON here.")
@click.pass_context
def search_sic(ctx, dimension, seed, restarts, max_iters, tol, group, threads, out):
    """Search for a SIC fiducial; exit 0 on a certified orbit, 1 otherwise."""
    payload = {
        "dimension": dimension,
        "seed": seed,
        "restarts": restarts,
        "max_iters": max_iters,
        "tol": tol,
        "group": group,
        "threads": threads,
    }
    body = _call(ctx.obj["server"], "/search-sic", payload).json()
    for rec in body["log"]:
        click.echo(
            f"restart {rec['restart']}: {rec['iterations']} evals, "
            f"potential={rec['potential']!r}, "
            f"max_overlap_deviation={rec['max_overlap_deviation']:.3e}",
            err=True,
        )
    document = _dumps({
        "fiducial": body["fiducial"],
        "orbit": body["orbit"],
        "certificate": body["certificate"],
    })
    if out is not None:
        _write_output(out, document)
        click.echo(_dumps(body["certificate"]), nl=False)
    else:
        click.echo(document, nl=False)
    sys.exit(0 if body["passed"] else 1)


def _detect_convert_input(raw: str) -> dict:
    stripped = raw.lstrip()
    if stripped.startswith("{"):
        return {"lineset": json.loads(raw)}
    rows = [line.split() for line in raw.splitlines() if line.strip()]
    if rows and len(rows[0]) == 1 and all(len(r) == 2 for r in rows[1:]):
        try:
            int(rows[0][0])
            for u, v in rows[1:]:
                int(u), int(v)
            return {"graph_text": raw}
        except ValueError:
            pass
    try:
        grid = [[int(t) for t in row] for row in rows]
        n = len(grid)
        if (
            n > 0
            and all(len(r) == n for r in grid)
            and all(grid[i][i] == 0 for i in range(n))
            and all(v in (-1, 0, 1) for r in grid for v in r)
        ):
            return {"seidel_text": raw}
    except ValueError:
        pass
    return {"lineset_text": raw}


@main.command()
@click.argument("infile", metavar="FILE")
@click.option("--target", required=True,
              type=click.Choice(["gram", "seidel", "graph", "lines"]))
@click.option("--alpha", default=None, type=float,
              help="Common overlap magnitude (required for --target lines).")
@click.option("--tol", default=1e-10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text",
              show_default=True, help="Output format where both exist.")
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def convert(ctx, infile, target, alpha, tol, fmt, out):
    """Convert between line sets, Gram/Seidel matrices, and graphs.

    The Seidel sign convention is entry -1 <=> edge.  Input kind is
    auto-detected: JSON line set, graph text ("N" then "u v" lines),
    Seidel integer grid, or text line set.
    """
    raw = _read_input(infile)
    try:
        payload = _detect_convert_input(raw)
    except ValueError as exc:
        click.echo(f"error: unparseable input: {exc}", err=True)
        sys.exit(2)
    payload.update({"target": target, "alpha": alpha, "tol": tol})
    body = _call(ctx.obj["server"], "/convert", payload).json()
    if target == "lines" and fmt == "json":
        content = _dumps(body["lineset"])
    else:
        content = body.get(f"{target}_text") or body.get("lineset_text") or ""
    _write_output(out, content)
    sys.exit(0)


@main.group()
def leech():
    """Leech-lattice enumeration and the 276-line construction."""


@leech.command("enumerate-type2")
@click.option("--count-only", is_flag=True, help="Print the vector count and stop.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "binary"]),
              default="csv", show_default=True)
@click.option("--limit", default=None, type=int, help="Dump at most this many vectors.")
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def leech_enumerate(ctx, count_only, fmt, limit, out):
    """Enumerate the 196560 minimal (type-2) lattice vectors."""
    payload = {"count_only": count_only, "format": fmt, "limit": limit}
    resp = _call(ctx.obj["server"], "/leech/type2", payload)
    if count_only:
        click.echo(str(resp.json()["count"]))
        sys.exit(0)
    if fmt == "binary":
        if out is None:
            click.echo("error: binary dumps need --out", err=True)
            sys.exit(2)
        Path(out).write_bytes(resp.content)
    elif fmt == "csv":
        _write_output(out, resp.text)
    else:
        _write_output(out, _dumps(resp.json()))
    sys.exit(0)


@leech.command("pairs")
@click.option("--v3", default=None, metavar="COORDS",
              help="24 integer coordinates (comma or space separated) of a type-3 vector.")
@click.option("--restrict", is_flag=True,
              help="Also restrict to the 176 lines orthogonal to a common vector.")
@click.option("--tol", default=1e-10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="json",
              show_default=True)
@click.option("--out", default=None, metavar="PATH")
@click.pass_context
def leech_pairs(ctx, v3, restrict, tol, fmt, out):
    """Build the 276 lines (or the restricted 176) from type-2 pairs."""
    coords = None
    if v3 is not None:
        try:
            coords = [int(t) for t in v3.replace(",", " ").split()]
        except ValueError:
            click.echo("error: --v3 must be a list of integers", err=True)
            sys.exit(2)
    payload = {"v3": coords, "restrict": restrict, "tol": tol}
    body = _call(ctx.obj["server"], "/leech/pairs", payload).json()
    cert = body["certificate"]
    if fmt == "text":
        lines = body["lineset"]["vectors"]
        content = "\n".join(" ".join(repr(float(x)) for x in row) for row in lines) + "\n"
    else:
        content = _dumps(body["lineset"])
    if out is not None:
        _write_output(out, content)
        click.echo(_dumps(cert), nl=False)
    else:
        click.echo(content, nl=False)
        click.echo(_dumps(cert), nl=False, err=True)
    sys.exit(0 if cert["is_equiangular"] else 1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("equilines.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
