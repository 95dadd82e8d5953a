"""Command line interface: expression parsing, dispatch, stable reports.

Subcommands: classify, bitangents, points, quadpoints, through-point,
incidence, verify-example.  Reports are JSON (or CSV for flat catalogs)
and are byte-stable for fixed inputs apart from the timing field.

Exit status: 0 success, 2 usage, 3 parse error, 4 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .errors import ParseError, QuarticLinesError
from .forms import QuarticForm
from .projective import Line, ProjPoint
from .quadpoints import (
    bitangents_through_point,
    quadratic_point_at,
    tangent_section,
)
from .errors import ContainedDirectionError, TangentDirectionError
from .search import (
    incidence_graph,
    search_bitangents,
    search_rational_points,
    smoothness_warnings,
)
from .tangency import (
    QuadraticContact,
    classify_tangency,
    contact_points,
    verify_quadritangent_family,
)

USAGE_EXIT = 2
PARSE_EXIT = 3
DOMAIN_EXIT = 4

_VARS = {"x": 0, "y": 1, "z": 2, "w": 3}


def parse_quartic(text: str) -> QuarticForm:
    """Parse a sum of signed integer monomials in x, y, z, w with ^ for
    exponents and optional * for products, into a quartic form.

    Raises ParseError with a position for syntax problems and with the
    offending monomials for degree problems."""
    i = 0
    n = len(text)
    terms: dict[tuple, int] = {}
    bad_monomials: list[str] = []

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if start == i:
            raise ParseError("expected an integer", start)
        return int(text[start:i])

    skip_ws()
    if i >= n:
        raise ParseError("empty expression", 0)
    first = True
    while True:
        skip_ws()
        if i >= n:
            break
        sign = 1
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i += 1
            skip_ws()
        elif not first:
            raise ParseError(f"expected '+' or '-', found {text[i]!r}", i)
        first = False
        term_start = i
        coeff = 1
        exps = [0, 0, 0, 0]
        saw_atom = False
        saw_coeff = False
        while True:
            skip_ws()
            if i < n and text[i] == "*":
                if not saw_atom and not saw_coeff:
                    raise ParseError("'*' with nothing to multiply", i)
                i += 1
                skip_ws()
                if i >= n or text[i] in "+-":
                    raise ParseError("dangling '*'", i - 1)
                continue
            if i < n and text[i].isdigit():
                coeff *= read_int()
                saw_coeff = True
                continue
            if i < n and text[i] in _VARS:
                v = _VARS[text[i]]
                i += 1
                e = 1
                if i < n and text[i] == "^":
                    i += 1
                    e = read_int()
                exps[v] += e
                saw_atom = True
                continue
            break
        if not saw_atom and not saw_coeff:
            raise ParseError(f"unexpected character {text[i]!r}", i)
        if i < n and text[i] not in "+-" and not text[i].isspace():
            raise ParseError(f"unexpected character {text[i]!r}", i)
        mono = text[term_start:i].strip() or str(coeff)
        if sum(exps) != 4:
            bad_monomials.append(mono)
        else:
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + sign * coeff
    if bad_monomials:
        raise ParseError(
            "expression is not homogeneous of degree 4; offending monomials: "
            + ", ".join(bad_monomials)
        )
    terms = {e: c for e, c in terms.items() if c != 0}
    if not terms:
        raise ParseError("all terms cancel; the zero form does not define a surface")
    return QuarticForm(terms)


class QuarticSpec:
    """A parsed quartic together with where it came from.

    Invariant (tested): serializing `parsed` and re-parsing gives back an
    identical form."""

    __slots__ = ("source_text", "parsed", "provenance")

    def __init__(self, source_text: str, provenance: str):
        self.source_text = source_text
        self.parsed = parse_quartic(source_text)
        self.provenance = provenance


def _load_quartic(spec: str) -> QuarticSpec:
    if spec.startswith("@"):
        with open(spec[1:], "r", encoding="utf-8") as fh:
            text = fh.read().strip()
        return QuarticSpec(text, spec[1:])
    return QuarticSpec(spec, "inline")


def _parse_point(s: str) -> ProjPoint:
    parts = s.split(",")
    if len(parts) != 4:
        raise ParseError(f"a point needs 4 comma-separated integers, got {s!r}")
    try:
        return ProjPoint(tuple(int(p) for p in parts))
    except ValueError as e:
        raise ParseError(str(e)) from e


def _parse_line(args) -> Line:
    if args.plucker:
        parts = args.plucker.split(",")
        if len(parts) != 6:
            raise ParseError("a Plucker vector needs 6 comma-separated integers")
        try:
            return Line.from_plucker(tuple(int(p) for p in parts))
        except ValueError as e:
            raise ParseError(str(e)) from e
    if args.line:
        halves = args.line.split(";")
        if len(halves) != 2:
            raise ParseError("a line spec is 'a0,a1,a2,a3;b0,b1,b2,b3'")
        return Line(_parse_point(halves[0]), _parse_point(halves[1]))
    raise ParseError("one of --line or --plucker is required")


def _parse_param(s: str) -> tuple[int, int]:
    parts = s.split(":")
    if len(parts) != 2:
        raise ParseError(f"a parameter is 'a:b', got {s!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as e:
        raise ParseError(str(e)) from e


def _contact_dict(cp) -> dict:
    if isinstance(cp.point_data, QuadraticContact):
        return {
            "type": "quadratic_pair",
            "kernel": cp.point_data.kernel,
            "coords": [[str(a), str(b)] for a, b in cp.point_data.coords],
            "factor": cp.factor.format(),
            "multiplicity": cp.multiplicity,
        }
    return {
        "type": "rational",
        "point": list(cp.point_data.coords),
        "factor": cp.factor.format(),
        "multiplicity": cp.multiplicity,
    }


def _catalog_dict(cat) -> dict:
    return {
        "height": cat.height,
        "mode": cat.mode,
        "sieve_primes": list(cat.sieve_primes) if cat.sieve_primes else None,
        "note": (
            "height-bounded census; stabilization of counts across growing "
            "height bounds is evidence of finiteness, not a proof"
        ),
        "counts": dict(cat.counts),
        "bitangents": [
            {
                "plucker": list(e.line.plucker),
                "kind": e.tangency.kind,
                "contacts": [_contact_dict(c) for c in e.contacts],
            }
            for e in cat.bitangents
        ],
        "contained_lines": [list(l.plucker) for l in cat.contained_lines],
    }


def _catalog_csv(cat) -> str:
    rows = ["plucker,kind,contact_count,contained"]
    for e in cat.bitangents:
        pl = '"' + ",".join(str(v) for v in e.line.plucker) + '"'
        rows.append(f"{pl},{e.tangency.kind},{len(e.contacts)},false")
    for l in cat.contained_lines:
        pl = '"' + ",".join(str(v) for v in l.plucker) + '"'
        rows.append(f"{pl},Contained,0,true")
    return "\n".join(rows) + "\n"


class RunReport:
    """Assembled output of one CLI invocation."""

    def __init__(self, command: str, quartic_text, config: dict, results, warnings, seconds: float):
        self.command = command
        self.quartic_text = quartic_text
        self.config = config
        self.results = results
        self.warnings = list(warnings)
        self.seconds = seconds

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "command": self.command,
            "version": __version__,
            "quartic": self.quartic_text,
            "config": self.config,
            "results": self.results,
            "warnings": self.warnings,
            "timing": {"seconds": self.seconds},
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2) + "\n"
        raise ParseError("CSV output is only available for line catalogs")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="quarticlines",
        description="bitangent lines and quadratic points of quartic surfaces in P^3",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, quartic=True):
        if quartic:
            p.add_argument("--quartic", required=True, help="expression or @file")
        p.add_argument("--workers", type=int, default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument(
            "--smooth-check-primes",
            default="2,3,5,7,11",
            help="comma-separated primes for the mod-p smoothness screen",
        )

    p = sub.add_parser("classify", help="contact type of one line")
    common(p)
    p.add_argument("--line", default=None, help='"a0,a1,a2,a3;b0,b1,b2,b3"')
    p.add_argument("--plucker", default=None, help='"p01,p02,p03,p12,p13,p23"')

    p = sub.add_parser("bitangents", help="catalog bitangents up to a height bound")
    common(p)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--search-mode", choices=("auto", "exhaustive", "sieve"), default="auto")

    p = sub.add_parser("points", help="rational points up to a height bound")
    common(p)
    p.add_argument("--height", type=int, required=True)

    p = sub.add_parser("quadpoints", help="quadratic points through tangent projection")
    common(p)
    p.add_argument("--point", required=True, help='"a,b,c,d" on the surface')
    p.add_argument("--param", default=None, help='single pencil parameter "a:b"')
    p.add_argument("--t-range", default=None, help='integer parameter range "lo:hi" for (t:1)')

    p = sub.add_parser("through-point", help="bitangents through a surface point")
    common(p)
    p.add_argument("--point", required=True, help='"a,b,c,d" on the surface')

    p = sub.add_parser("incidence", help="incidence graph of a bitangent catalog")
    common(p)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--search-mode", choices=("auto", "exhaustive", "sieve"), default="auto")

    p = sub.add_parser("verify-example", help="symbolic check of the quadritangent family")
    common(p, quartic=False)
    return ap


def _primes_list(s: str):
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(p) for p in s.split(","))
    except ValueError as e:
        raise ParseError(f"bad primes list {s!r}") from e


def run_command(argv) -> RunReport:
    """Execute one CLI invocation and return its report; raises ParseError
    or domain errors instead of exiting (main() maps those to statuses)."""
    ap = _build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    primes = _primes_list(getattr(args, "smooth_check_primes", "")) if hasattr(args, "smooth_check_primes") else ()
    fmt = args.format
    warnings: list[str] = []

    quartic_text = None
    F = None
    if getattr(args, "quartic", None) is not None:
        qspec = _load_quartic(args.quartic)
        F, quartic_text = qspec.parsed, qspec.source_text

    config = {
        "workers": args.workers,
        "smooth_check_primes": list(primes),
        "format": fmt,
    }
    results = None
    csv_payload = None

    if args.command == "classify":
        line = _parse_line(args)
        tt = classify_tangency(F, line)
        res = {
            "plucker": list(line.plucker),
            "kind": tt.kind,
            "is_bitangent": tt.is_bitangent,
        }
        if tt.kind not in ("Transverse", "Contained"):
            res["contacts"] = [_contact_dict(c) for c in contact_points(F, line, tangency=tt)]
        results = res

    elif args.command == "bitangents":
        config["height"] = args.height
        config["search_mode"] = args.search_mode
        cat = search_bitangents(
            F, args.height, mode=args.search_mode, workers=args.workers, smooth_check_primes=primes
        )
        warnings.extend(cat.warnings)
        results = _catalog_dict(cat)
        if fmt == "csv":
            csv_payload = _catalog_csv(cat)

    elif args.command == "points":
        config["height"] = args.height
        pts = search_rational_points(F, args.height)
        results = {
            "height": args.height,
            "count": len(pts),
            "points": [":".join(str(c) for c in p.coords) for p in pts],
        }

    elif args.command == "quadpoints":
        p0 = _parse_point(args.point)
        warnings.extend(smoothness_warnings(F, primes))
        params = []
        if args.param:
            params.append(_parse_param(args.param))
        if args.t_range:
            lo, hi = _parse_param(args.t_range)
            params.extend((t, 1) for t in range(lo, hi + 1))
        if not params:
            raise ParseError("quadpoints needs --param or --t-range")
        sec = tangent_section(F, p0)
        batch = []
        histogram: dict[int, int] = {}
        skipped = []
        for prm in params:
            try:
                pts = quadratic_point_at(F, p0, prm)
            except TangentDirectionError:
                skipped.append({"param": list(prm), "reason": "tangent-direction"})
                continue
            except ContainedDirectionError:
                skipped.append({"param": list(prm), "reason": "contained-direction"})
                continue
            kern = pts[0].discriminant
            histogram[kern] = histogram.get(kern, 0) + 1
            batch.append(
                {
                    "param": list(prm),
                    "kernel": kern,
                    "degenerate_rational": pts[0].degenerate_rational,
                    "points": [pt.format() for pt in pts],
                }
            )
        results = {
            "point": list(p0.coords),
            "section_kind": sec.singularity_kind,
            "points": batch,
            "discriminant_kernel_histogram": {str(k): v for k, v in sorted(histogram.items())},
            "distinct_kernels": len(histogram),
            "skipped": skipped,
        }

    elif args.command == "through-point":
        p0 = _parse_point(args.point)
        lines, factors, bf = bitangents_through_point(F, p0)
        results = {
            "point": list(p0.coords),
            "branch_form": bf.form.format(("a", "b")),
            "branch_degree": bf.degree,
            "non_generic": bf.non_generic,
            "lines": [
                {"plucker": list(l.plucker), "certified": cert} for l, cert in lines
            ],
            "nonrational_factors": [
                {"factor": g.format(("a", "b")), "degree": g.degree, "multiplicity": m}
                for g, m in factors
            ],
        }

    elif args.command == "incidence":
        config["height"] = args.height
        config["search_mode"] = args.search_mode
        cat = search_bitangents(
            F, args.height, mode=args.search_mode, workers=args.workers, smooth_check_primes=primes
        )
        warnings.extend(cat.warnings)
        graph = incidence_graph(cat)
        results = graph.to_dict()

    elif args.command == "verify-example":
        reports = {}
        satisfied = []
        for reading in ("as_written", "corrected"):
            rep = verify_quadritangent_family(reading)
            reports[reading] = rep.to_dict()
            if rep.is_fourth_power:
                satisfied.append(reading)
        results = {
            "readings": reports,
            "readings_satisfying_quadritangency": satisfied,
        }
        quartic_text = "x^4 - x*y^3 - z^4 + z*w^3"

    report = RunReport(
        command=args.command,
        quartic_text=quartic_text,
        config=config,
        results=results,
        warnings=warnings,
        seconds=round(time.perf_counter() - t0, 6),
    )
    payload = csv_payload if csv_payload is not None else report.render(fmt)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return report


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        run_command(argv)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE_EXIT
    except QuarticLinesError as e:
        print(f"error: {e}", file=sys.stderr)
        return DOMAIN_EXIT
    except SystemExit as e:
        # argparse exits with 2 on usage errors
        return int(e.code) if e.code is not None else USAGE_EXIT
    return 0


if __name__ == "__main__":
    sys.exit(main())
