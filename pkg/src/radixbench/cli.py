"""Command line front end.

Commands run in process by default. With --server URL the same request
models are posted to a running service and its JSON is validated back
into the same response models, so local and remote output match.

Exit codes: 0 success, 1 verification failure, 2 usage or request error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Type, TypeVar

import httpx
from pydantic import BaseModel

from .costmodel import DEFAULT_PRESET, PRESETS
from .netlist import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SAMPLES
from .reftables import TABLE_IDS
from .render import render_blocks_csv, render_blocks_md
from .service import handlers
from .service.schemas import (
    CompareRequest,
    CompareResponse,
    CostRequest,
    CostResponse,
    CountsRequest,
    CountsResponse,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)

__all__ = ["build_parser", "main"]

M = TypeVar("M", bound=BaseModel)

_REMOTE_TIMEOUT = 600.0


def _resolve_seed(explicit: int | None) -> int:
    """--seed wins, then the RADIXBENCH_SEED variable, then 0."""
    if explicit is not None:
        return explicit
    env = os.environ.get("RADIXBENCH_SEED", "").strip()
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(
                f"RADIXBENCH_SEED must be an integer, got {env!r}"
            ) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radixbench",
        description="Build, simulate and cost binary and ternary adders and multipliers.",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("md", "csv", "json"),
        default="md",
        help="output format (default md)",
    )
    common.add_argument(
        "--server",
        metavar="URL",
        help="send the request to a running service instead of computing locally",
    )

    circuit = argparse.ArgumentParser(add_help=False)
    circuit.add_argument(
        "--radix", type=int, choices=(2, 3), default=2, help="digit radix (default 2)"
    )
    circuit.add_argument(
        "--width", type=int, required=True, help="operand width in digits"
    )
    circuit.add_argument(
        "--arch",
        choices=("cpa", "cla", "csa"),
        help="adder architecture (default cpa; not valid with --mul)",
    )
    circuit.add_argument(
        "--mul", action="store_true", help="select the multiplier instead of an adder"
    )
    circuit.add_argument(
        "--block", type=int, help="carry block size for cla and csa (2 to 5)"
    )
    circuit.add_argument(
        "--ha-policy",
        dest="ha_policy",
        choices=("eager", "lazy"),
        default="eager",
        help="half adder use in binary reduction columns (default eager)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser(
        "verify",
        parents=[common, circuit],
        help="check a circuit against its arithmetic oracle",
    )
    p_verify.add_argument(
        "--seed", type=int, help="sampling seed (falls back to RADIXBENCH_SEED, then 0)"
    )
    p_verify.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_EXHAUSTIVE_CAP,
        help=f"largest input space checked exhaustively (default {DEFAULT_EXHAUSTIVE_CAP})",
    )
    p_verify.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_SAMPLES,
        help=f"random vectors when sampling (default {DEFAULT_SAMPLES})",
    )

    sub.add_parser(
        "counts",
        parents=[common, circuit],
        help="report cell counts and adder or multiplier summary rows",
    )

    p_cost = sub.add_parser(
        "cost",
        parents=[common, circuit],
        help="price a circuit in transistors under a cost preset",
    )
    p_cost.add_argument(
        "--cost-preset",
        dest="cost_preset",
        choices=sorted(PRESETS),
        default=DEFAULT_PRESET,
        help=f"transistor cost preset (default {DEFAULT_PRESET})",
    )

    p_compare = sub.add_parser(
        "compare",
        parents=[common],
        help="side by side binary versus ternary report at a bit width",
    )
    p_compare.add_argument(
        "--width", type=int, required=True, help="binary operand width in bits"
    )
    p_compare.add_argument(
        "--cost-preset",
        dest="cost_preset",
        choices=sorted(PRESETS),
        default=DEFAULT_PRESET,
        help=f"transistor cost preset (default {DEFAULT_PRESET})",
    )
    p_compare.add_argument(
        "--ha-policy",
        dest="ha_policy",
        choices=("eager", "lazy"),
        default="eager",
        help="half adder use in binary reduction columns (default eager)",
    )

    p_tables = sub.add_parser(
        "tables",
        parents=[common],
        help="print a reference table, or list table ids when none is given",
    )
    p_tables.add_argument("table_id", nargs="?", help="table id, one of I through IX")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1", help="bind address")
    p_serve.add_argument("--port", type=int, default=8000, help="bind port")

    return parser


def _selector_fields(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "radix": args.radix,
        "width": args.width,
        "mul": args.mul,
        "arch": args.arch,
        "block": args.block,
        "ha_policy": args.ha_policy,
    }


def _post(server: str, path: str, req: BaseModel, model: Type[M]) -> M:
    url = server.rstrip("/") + path
    resp = httpx.post(url, json=req.model_dump(mode="json"), timeout=_REMOTE_TIMEOUT)
    if resp.status_code >= 400:
        raise RuntimeError(f"{url} returned {resp.status_code}: {resp.text}")
    return model.model_validate(resp.json())


def _get(server: str, path: str, model: Type[M]) -> M:
    url = server.rstrip("/") + path
    resp = httpx.get(url, timeout=_REMOTE_TIMEOUT)
    if resp.status_code >= 400:
        raise RuntimeError(f"{url} returned {resp.status_code}: {resp.text}")
    return model.model_validate(resp.json())


def _emit(resp: BaseModel, fmt: str) -> None:
    if fmt == "json":
        print(resp.model_dump_json(indent=2))
    elif fmt == "csv":
        print(render_blocks_csv(resp.blocks), end="")
    else:
        print(render_blocks_md(resp.blocks), end="")


def _cmd_verify(args: argparse.Namespace) -> int:
    req = VerifyRequest(
        **_selector_fields(args),
        cap=args.cap,
        samples=args.samples,
        seed=_resolve_seed(args.seed),
    )
    if args.server:
        resp = _post(args.server, "/verify", req, VerifyResponse)
    else:
        resp = handlers.handle_verify(req)
    _emit(resp, args.format)
    return 0 if resp.passed else 1


def _cmd_counts(args: argparse.Namespace) -> int:
    req = CountsRequest(**_selector_fields(args))
    if args.server:
        resp = _post(args.server, "/counts", req, CountsResponse)
    else:
        resp = handlers.handle_counts(req)
    _emit(resp, args.format)
    return 0


def _cmd_cost(args: argparse.Namespace) -> int:
    req = CostRequest(**_selector_fields(args), preset=args.cost_preset)
    if args.server:
        resp = _post(args.server, "/cost", req, CostResponse)
    else:
        resp = handlers.handle_cost(req)
    _emit(resp, args.format)
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    req = CompareRequest(
        bits=args.width, preset=args.cost_preset, ha_policy=args.ha_policy
    )
    if args.server:
        resp = _post(args.server, "/compare", req, CompareResponse)
    else:
        resp = handlers.handle_compare(req)
    _emit(resp, args.format)
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    if args.table_id is None:
        for table_id in TABLE_IDS:
            print(table_id)
        return 0
    if args.server:
        resp = _get(args.server, f"/tables/{args.table_id}", TableResponse)
    else:
        resp = handlers.handle_table(args.table_id)
    _emit(resp, args.format)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "counts": _cmd_counts,
    "cost": _cmd_cost,
    "compare": _cmd_compare,
    "tables": _cmd_tables,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, KeyError, RuntimeError, httpx.HTTPError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
