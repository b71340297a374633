"""Command-line front end: ``ehrhart``, ``diagnose`` and ``paperbook``.

Exit codes: 0 success, 1 paperbook mismatch, 2 parse error, 3 scale limit.
Verdicts are data; a failing inequality never changes the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import __version__
from .counting import (
    EhrhartProfile,
    ehrhart,
    is_idp,
    is_reflexive,
    is_spanning,
)
from .errors import (
    BadParameter,
    DimensionTooLarge,
    EhrhartLabError,
    ScaleLimit,
    TooManyLinearExtensions,
)
from .geometry import LatticePolytope, minkowski_sum
from .polyform import (
    DiagnosticsReport,
    Verdict,
    cl_check,
    full_diagnostics,
    hstar_from_poly,
    hstar_to_ehrhart,
    is_palindromic,
    is_unimodal,
)
from . import zoo

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_SCALE = 0, 1, 2, 3

POLY_GROUPS = ("hstar", "series", "cl", "magic", "toeplitz", "negative")
GEOM_GROUPS = ("idp", "spanning", "reflexive")


class ParseError(EhrhartLabError, ValueError):
    pass


# ---------------------------------------------------------------------------
# input handling


def load_input(text: str) -> LatticePolytope:
    """Registry name, inline family spec, or a JSON file (polytope, poset or graph)."""
    path = Path(text)
    if text.endswith(".json") or (path.exists() and path.is_file()):
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read {text}: {exc}") from exc
        return polytope_from_document(doc)
    try:
        return zoo.from_spec(text)
    except (BadParameter, KeyError, ValueError) as exc:
        if isinstance(exc, (ScaleLimit, DimensionTooLarge)):
            raise
        raise ParseError(str(exc)) from exc


def polytope_from_document(doc) -> LatticePolytope:
    if not isinstance(doc, dict):
        raise ParseError("input document must be a JSON object")
    try:
        if "vertices" in doc:
            return LatticePolytope.from_json(doc)
        if "covers" in doc:
            return zoo.order_polytope(zoo.Poset.from_json(doc))
        if "edges" in doc:
            G = zoo.Graph.from_json(doc)
            if doc.get("polytope", "symmetric_edge") == "edge":
                return zoo.edge_polytope(G)
            return zoo.symmetric_edge_polytope(G)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (ScaleLimit, DimensionTooLarge)):
            raise
        raise ParseError(f"malformed document: {exc}") from exc
    raise ParseError("document needs 'vertices', 'covers' or 'edges'")


# ---------------------------------------------------------------------------
# reports


@dataclass
class RunReport:
    input: str
    profile: EhrhartProfile | None = None
    diagnostics: DiagnosticsReport | None = None
    polytope: dict | None = None
    timing: float = 0.0
    version: str = __version__

    def to_json(self) -> dict:
        return {
            "tool": "ehrhart-lab",
            "version": self.version,
            "input": self.input,
            "polytope": self.polytope,
            "profile": self.profile.to_json() if self.profile else None,
            "diagnostics": self.diagnostics.to_json() if self.diagnostics else None,
            "timing": self.timing,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "RunReport":
        return cls(
            input=doc["input"],
            profile=EhrhartProfile.from_json(doc["profile"]) if doc.get("profile") else None,
            diagnostics=DiagnosticsReport.from_json(doc["diagnostics"]) if doc.get("diagnostics") else None,
            polytope=doc.get("polytope"),
            timing=doc.get("timing", 0.0),
            version=doc.get("version", __version__),
        )

    def __eq__(self, other):
        if not isinstance(other, RunReport):
            return NotImplemented
        return self.to_json() == other.to_json()


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def cmd_ehrhart(text: str) -> RunReport:
    t0 = time.perf_counter()
    P = load_input(text)
    prof = ehrhart(P)
    return RunReport(text, prof, None, P.to_json(), round(time.perf_counter() - t0, 6))


def cmd_diagnose(text: str, groups: set[str] | None = None) -> RunReport:
    t0 = time.perf_counter()
    P = load_input(text)
    if not groups:
        groups = set(POLY_GROUPS) | set(GEOM_GROUPS)
    prof = ehrhart(P)
    diag = full_diagnostics(prof.E, prof.d, groups & set(POLY_GROUPS))
    if "idp" in groups:
        diag.verdicts["idp"] = is_idp(P)
    if "spanning" in groups:
        diag.verdicts["spanning"] = Verdict(is_spanning(P))
    if "reflexive" in groups:
        diag.verdicts["reflexive"] = Verdict(is_reflexive(P))
        diag.verdicts["gorenstein"] = Verdict(is_palindromic(prof.hstar))
    return RunReport(text, prof, diag, P.to_json(), round(time.perf_counter() - t0, 6))


def render_table(rep: RunReport) -> str:
    lines = [f"input: {rep.input}"]
    if rep.profile:
        p = rep.profile
        lines.append(f"dimension: {p.d}")
        lines.append(f"E(x) = {p.E}")
        lines.append("h* = (" + ", ".join(str(x) for x in p.hstar.h) + ")")
        lines.append(f"degree s = {p.s}, codegree = {p.codegree}")
        lines.append(f"lambda = {p.lam if p.lam is not None else 'none <= ' + str(p.d + 1)}")
        lines.append("counts E(0..d) = " + ", ".join(map(str, p.counts)))
    if rep.diagnostics:
        width = max(len(k) for k in rep.diagnostics.verdicts) if rep.diagnostics.verdicts else 0
        for k, v in rep.diagnostics.verdicts.items():
            extra = ""
            if v.witness and not v.ok:
                extra = "  " + json.dumps(Verdict(v.ok, v.witness).to_json().get("witness"), sort_keys=True)
            lines.append(f"  {k.ljust(width)}  {'yes' if v.ok else 'no'}{extra}")
        for msg in rep.diagnostics.implication_failures:
            lines.append(f"  IMPLICATION FAILURE: {msg}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# paperbook


def default_manifest() -> dict:
    raw = resources.files("ehrhart_lab").joinpath("paperbook.json").read_text()
    return json.loads(raw)


def _strs(values) -> list[str]:
    return [str(Fraction(v)) for v in values]


def run_entry(entry: dict) -> dict:
    """Compute one manifest entry; returns the observed values keyed like ``expect``."""
    kind = entry["kind"]
    got: dict = {}
    if kind == "polytope":
        prof = ehrhart(load_input(entry["input"]), lam=False)
        got["E"] = [str(c) for c in prof.E.coeffs]
        got["hstar"] = [str(x) for x in prof.hstar.h]
    elif kind == "minkowski":
        P, Q = (load_input(t) for t in entry["input"])
        prof = ehrhart(minkowski_sum(P, Q), lam=False)
        got["E"] = [str(c) for c in prof.E.coeffs]
        got["hstar"] = [str(x) for x in prof.hstar.h]
    elif kind == "stembridge_hstar":
        got["poly"] = [str(x) for x in zoo.order_polytope_hstar(zoo.stembridge_poset()).head]
    elif kind == "stembridge_type_b":
        h = zoo.order_polytope_hstar(zoo.stembridge_poset()).poly
        got["poly"] = [str(c) for c in zoo.type_b_transform(h, 17).coeffs]
    elif kind == "wagner":
        f, g = zoo.wagner_f(), zoo.wagner_g()
        src = {"f": f, "g": g, "fg": f * g}[entry["input"]]
        got["poly"] = [str(c) for c in hstar_from_poly(src).coeffs]
    elif kind == "payne":
        h = {"d7": zoo.payne_d7, "d11": zoo.payne_d11}[entry["input"]]()
        got["poly"] = [str(c) for c in h.coeffs]
        got["cl"] = cl_check(hstar_to_ehrhart(list(h.coeffs))).ok
        got["unimodal"] = is_unimodal(h).ok
    else:
        raise ParseError(f"unknown manifest kind {kind!r}")
    return got


def compare(expect: dict, got: dict) -> list[str]:
    bad = []
    for key, want in expect.items():
        have = got.get(key)
        if isinstance(want, list):
            try:
                same = have is not None and _strs(want) == _strs(have)
            except (ValueError, ZeroDivisionError):
                same = False
        else:
            same = want == have
        if not same:
            bad.append(key)
    return bad


def cmd_paperbook(manifest: dict | None = None, filt: str | None = None) -> tuple[int, dict]:
    manifest = manifest or default_manifest()
    rows = []
    status = EXIT_OK
    for entry in manifest.get("entries", []):
        label = f"{entry['name']} {entry.get('family', '')}"
        if filt and filt not in label:
            continue
        t0 = time.perf_counter()
        got = run_entry(entry)
        bad = compare(entry["expect"], got)
        if bad:
            status = EXIT_MISMATCH
        rows.append({
            "name": entry["name"],
            "pass": not bad,
            "mismatched": bad,
            "observed": {k: got.get(k) for k in entry["expect"]},
            "timing": round(time.perf_counter() - t0, 6),
        })
    return status, {"tool": "ehrhart-lab", "version": __version__, "results": rows}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ehrhart-lab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"ehrhart-lab {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    e = sub.add_parser("ehrhart", help="Ehrhart polynomial and h*-vector of a polytope")
    e.add_argument("input", help="registry:NAME, family spec like reeve:12, or a JSON file")
    e.add_argument("--table", action="store_true", help="human-readable output instead of JSON")

    d = sub.add_parser("diagnose", help="run the inequality and property checkers")
    d.add_argument("input")
    d.add_argument("--table", action="store_true")
    for g in POLY_GROUPS + GEOM_GROUPS:
        d.add_argument(f"--{g}", action="store_true", help=f"run the {g} checks")

    p = sub.add_parser("paperbook", help="recompute the fixture manifest and compare")
    p.add_argument("--filter", default=None, help="only entries whose name or family contains this")
    p.add_argument("--manifest", default=None, help="alternative manifest JSON file")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "ehrhart":
            rep = cmd_ehrhart(args.input)
            print(render_table(rep) if args.table else dumps(rep.to_json()))
            return EXIT_OK
        if args.command == "diagnose":
            groups = {g for g in POLY_GROUPS + GEOM_GROUPS if getattr(args, g)}
            rep = cmd_diagnose(args.input, groups)
            print(render_table(rep) if args.table else dumps(rep.to_json()))
            return EXIT_OK
        if args.command == "paperbook":
            manifest = None
            if args.manifest:
                try:
                    manifest = json.loads(Path(args.manifest).read_text())
                except (OSError, json.JSONDecodeError) as exc:
                    raise ParseError(f"cannot read manifest: {exc}") from exc
            status, report = cmd_paperbook(manifest, args.filter)
            if args.json:
                print(dumps(report))
            else:
                for row in report["results"]:
                    mark = "PASS" if row["pass"] else "FAIL"
                    extra = "" if row["pass"] else "  mismatched: " + ", ".join(row["mismatched"])
                    print(f"{mark}  {row['name']}{extra}")
                n_bad = sum(not r["pass"] for r in report["results"])
                print(f"{len(report['results']) - n_bad}/{len(report['results'])} fixtures match")
            return status
    except (ScaleLimit, TooManyLinearExtensions, DimensionTooLarge) as exc:
        print(f"error: scale limit: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (ParseError, BadParameter) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
