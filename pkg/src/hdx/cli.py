"""Command-line front end for the Hilbert-depth service.

Each computing subcommand builds the same request model the HTTP service
accepts and either runs the handler in process (the default) or posts it
to a running service via ``--server``. ``hdx serve`` starts the service.

Exit codes: 0 success, 1 invalid input, 2 internal cross-check failure
(oracle disagreement or a certificate that does not validate).
"""

import argparse
import json
import sys

from .errors import CrossCheckError, InputError
from .models import (
    CertifyResponse,
    ComputeRequest,
    DepthResponse,
    LexifyResponse,
    SeriesResponse,
    SigmaResponse,
)
from .service import run_certify, run_hdepth, run_lexify, run_series, run_sigma

_RESPONSE_TYPES = {
    "hdepth": DepthResponse,
    "certify": CertifyResponse,
    "lexify": LexifyResponse,
    "sigma": SigmaResponse,
    "series": SeriesResponse,
}

_HANDLERS = {
    "hdepth": run_hdepth,
    "certify": run_certify,
    "lexify": run_lexify,
    "sigma": run_sigma,
    "series": run_series,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        text = _read_input(args.source)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    request = ComputeRequest(
        input=text,
        method=getattr(args, "method", "auto"),
        strict_m=getattr(args, "strict_m", False),
        oracle=getattr(args, "oracle", False),
        max_degree=args.max_degree,
        trunc_extra=getattr(args, "trunc_extra", None),
    )
    try:
        if args.server:
            response, status = _remote(args.server, args.command, request)
        else:
            response = _HANDLERS[args.command](request)
            status = 200
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"cross-check failure: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(response.model_dump_json(exclude_none=True, indent=2))
    else:
        print(_render_text(args.command, response))
    return _exit_code(response, status)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hdx",
        description="Exact Hilbert depth of monomial ideals, with certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_compute(name, help_text, depth_flags=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "source",
            help="input file, or '-' for stdin; grammar: 'n=3; x1^2, x1*x2' "
            "or 'series; n=3; 5t^2 - 5t^3 + t^5'",
        )
        if depth_flags:
            p.add_argument(
                "--method",
                choices=["auto", "squarefree", "series"],
                default="auto",
                help="auto uses the squarefree route for squarefree ideals, "
                "the series route otherwise",
            )
            p.add_argument(
                "--strict-m",
                action="store_true",
                help="pad the series window with the bound from lexification",
            )
            p.add_argument(
                "--oracle",
                action="store_true",
                help="also run the truncated-series cross-check and compare",
            )
            p.add_argument(
                "--trunc-extra",
                type=int,
                default=None,
                help="extra coefficients the cross-check inspects (default n+1)",
            )
        p.add_argument(
            "--max-degree",
            type=int,
            default=500,
            help="degree budget for lexification (default 500)",
        )
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument(
            "--server",
            metavar="URL",
            default=None,
            help="send the request to a running hdx service instead",
        )
        return p

    add_compute("hdepth", "compute the Hilbert depth", depth_flags=True)
    add_compute(
        "certify",
        "compute the Hilbert depth and validate the emitted certificate",
        depth_flags=True,
    )
    add_compute("lexify", "lex ideal with the same Hilbert function")
    add_compute("sigma", "squarefree shift of a monomial ideal")
    add_compute("series", "Hilbert-series numerator over (1-t)^n")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source, encoding="utf-8") as handle:
        return handle.read()


def _remote(server, command, request):
    import httpx

    url = f"{server.rstrip('/')}/{command}"
    reply = httpx.post(url, json=request.model_dump(), timeout=300.0)
    if reply.status_code == 400:
        raise InputError(reply.json().get("detail", reply.text))
    if reply.status_code not in (200, 500):
        raise InputError(f"service returned {reply.status_code}: {reply.text}")
    return _RESPONSE_TYPES[command].model_validate(reply.json()), reply.status_code


def _term_text(shift, dim, mult) -> str:
    mult = str(mult)
    head = "" if mult == "1" else mult
    return f"{head}t^{shift}/(1-t)^{dim}"


def _render_text(command, r) -> str:
    lines = []
    if command in ("hdepth", "certify"):
        lines.append(f"hdepth = {r.hdepth}")
        lines.append(f"method = {r.method}")
        if r.oracle is not None:
            verdict = "agrees" if r.oracle.agrees else "DISAGREES"
            lines.append(f"oracle p = {r.oracle.p} ({verdict})")
        if command == "certify":
            from .intpoly import IntPolynomial, format_poly

            lines.append(f"numerator = {format_poly(IntPolynomial(r.numerator))}")
            cert = " + ".join(_term_text(t.shift, t.dim, t.mult) for t in r.certificate)
            lines.append(f"certificate = {cert or '0'}")
            lines.append(f"valid = {'yes' if r.valid else 'NO'}")
    elif command == "lexify":
        lines.append(r.ideal)
        lines.append(f"m = {r.m}")
    elif command == "sigma":
        lines.append(r.ideal)
        lines.append(f"m = {r.m}")
    elif command == "series":
        lines.append(f"numerator = {r.numerator_text}")
        lines.append(f"denominator = (1-t)^{r.n}")
    return "\n".join(lines)


def _exit_code(response, status) -> int:
    if getattr(response, "oracle", None) is not None and not response.oracle.agrees:
        return 2
    if getattr(response, "valid", True) is False:
        return 2
    if status == 500:
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
