"""Command line front end.

The CLI is a thin client of the classification service: every command
issues HTTP requests against either a remote server (``--server URL``)
or, by default, an in-process instance of the FastAPI app over httpx's
ASGI transport, so no server needs to be running and the service code
path is exercised either way.

Exit codes: 0 analysis succeeded, 1 usage error, 2 input error,
3 differential failure. Output is plain text (no colour), so NO_COLOR
needs no special handling.

Usage sketch:
    distbal generate gamma_k 5 --out g.g6
    distbal check g.g6 --json
    distbal product cartesian a.g6 b.g6 --out prod.g6
    distbal oracle-diff --count 1000 --max-n 8 --seed 42
    distbal bench 10 20 40 80
    distbal serve --port 8000
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_DIFF = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve that
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    """Anything wrong with the user's input files or parameters."""


class ServiceClient:
    """Minimal JSON-over-HTTP client for the service."""

    def __init__(self, server: str | None = None):
        self.server = server

    def post(self, path: str, payload: dict) -> dict:
        status, body = asyncio.run(self._post(path, payload))
        if status != 200:
            detail = body.get("detail") if isinstance(body, dict) else None
            if isinstance(detail, dict):
                raise InputError(detail.get("message", str(detail)))
            raise InputError(str(detail) if detail is not None else f"HTTP {status}")
        return body

    async def _post(self, path: str, payload: dict):
        if self.server is not None:
            async with httpx.AsyncClient(base_url=self.server, timeout=None) as client:
                resp = await client.post(path, json=payload)
        else:
            from .service.app import create_app

            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://distbal.internal", timeout=None
            ) as client:
                resp = await client.post(path, json=payload)
        try:
            body = resp.json()
        except ValueError:
            body = {}
        return resp.status_code, body


def _read_payload(path: str, fmt: str | None) -> dict:
    from .graphio import sniff_format

    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    return {"format": fmt if fmt is not None else sniff_format(text), "text": text}


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}")


def cmd_generate(client: ServiceClient, args) -> int:
    body = client.post(
        "/generate",
        {"family": args.family, "params": args.params, "format": args.format},
    )
    if args.out is not None:
        _write_or_print(body["text"], args.out)
        print(f"n={body['n']} m={body['m']}")
    else:
        print(f"n={body['n']} m={body['m']}", file=sys.stderr)
        _write_or_print(body["text"], None)
    return EXIT_OK


_YESNO = {True: "yes", False: "no"}


def _print_report_table(doc: dict) -> None:
    rep = doc["report"]
    lines = [
        ("source", doc["source"]),
        ("n", rep["n"]),
        ("m", rep["m"]),
        ("diameter", rep["diameter"]),
        ("bipartite", _YESNO[rep["bipartite"]]),
        ("regular valency", rep["regular_valency"] if rep["regular_valency"] is not None else "-"),
        ("distance-balanced", _YESNO[rep["is_db"]]),
        ("nicely distance-balanced", _YESNO[rep["is_ndb"]]),
        ("gamma", rep["gamma"] if rep["gamma"] is not None else "-"),
        ("strongly distance-balanced", _YESNO[rep["is_sdb"]]),
    ]
    if rep["db_witness"] is not None:
        u, v = rep["db_witness"]
        lines.append(("unbalanced edge", f"({u}, {v})"))
    if rep["sdb_witness"] is not None:
        w = rep["sdb_witness"]
        lines.append(("sphere mismatch", f"edge ({w['u']}, {w['v']}) at level {w['level']}"))
    lines.append(("weighted w-set identity", "holds" if rep["conjecture_holds"] else "fails"))
    lines.append(("wall time", f"{doc['wall_time_ms']:.1f} ms"))
    width = max(len(k) for k, _ in lines)
    for key, value in lines:
        print(f"{key:<{width}}  {value}")


def cmd_check(client: ServiceClient, args) -> int:
    payload = _read_payload(args.path, args.format)
    body = client.post("/check", {"graph": payload, "source": args.path})
    if args.json:
        print(json.dumps(body, indent=2))
    else:
        _print_report_table(body)
    return EXIT_OK


def cmd_product(client: ServiceClient, args) -> int:
    if args.op == "line":
        if args.b is not None:
            raise InputError("operator 'line' takes a single input graph")
        b_payload = None
    else:
        if args.b is None:
            raise InputError(f"operator {args.op!r} needs two input graphs")
        b_payload = _read_payload(args.b, args.format)
    body = client.post(
        "/product",
        {
            "op": args.op,
            "a": _read_payload(args.a, args.format),
            "b": b_payload,
            "format": args.out_format,
        },
    )
    if args.out is not None:
        _write_or_print(body["text"], args.out)
        print(f"n={body['n']} m={body['m']}")
    else:
        print(f"n={body['n']} m={body['m']}", file=sys.stderr)
        _write_or_print(body["text"], None)
    return EXIT_OK


def cmd_oracle_diff(client: ServiceClient, args) -> int:
    body = client.post(
        "/oracle-diff",
        {"count": args.count, "max_n": args.max_n, "seed": args.seed},
    )
    bad = body["disagreements"]
    print(f"cases={body['cases']} max_n={args.max_n} seed={body['seed']} disagreements={len(bad)}")
    for d in bad:
        print(f"  case {d['index']}: {d['graph6']}  fast={d['fast']} oracle={d['oracle']}")
    return EXIT_OK if not bad else EXIT_DIFF


def cmd_bench(client: ServiceClient, args) -> int:
    body = client.post("/bench", {"k_values": args.k_values, "repeats": args.repeats})
    print(f"{'k':>5} {'n':>7} {'m':>7} {'seconds':>10} {'time/(m*n)':>12}")
    for row in body["rows"]:
        print(
            f"{row['k']:>5} {row['n']:>7} {row['m']:>7} "
            f"{row['seconds']:>10.4f} {row['ratio']:>12.3e}"
        )
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="distbal", description=__doc__.split("\n\n")[0])
    parser.add_argument(
        "--server",
        default=None,
        help="URL of a running service; default runs the service in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="generate a named graph family")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["g6", "edgelist"], default="g6")

    p = sub.add_parser("check", help="classify a graph file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true", help="emit the JSON report document")
    p.add_argument("--format", choices=["g6", "edgelist"], default=None,
                   help="input format (default: sniff)")

    p = sub.add_parser("product", help="apply a graph operator")
    p.add_argument("op", choices=["cartesian", "lex", "line"])
    p.add_argument("a")
    p.add_argument("b", nargs="?", default=None)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["g6", "edgelist"], default=None,
                   help="input format (default: sniff)")
    p.add_argument("--out-format", choices=["g6", "edgelist"], default="g6")

    p = sub.add_parser("oracle-diff", help="differential-test the fast path")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=42)

    p = sub.add_parser("bench", help="time full classification on gamma_k graphs")
    p.add_argument("k_values", nargs="*", type=int)
    p.add_argument("--repeats", type=int, default=3)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        return cmd_serve(args)
    client = ServiceClient(args.server)
    handlers = {
        "generate": cmd_generate,
        "check": cmd_check,
        "product": cmd_product,
        "oracle-diff": cmd_oracle_diff,
        "bench": cmd_bench,
    }
    try:
        return handlers[args.command](client, args)
    except InputError as exc:
        print(f"distbal: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except httpx.HTTPError as exc:
        print(f"distbal: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
