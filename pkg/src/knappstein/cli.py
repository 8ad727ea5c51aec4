"""Problem files in, JSON reports out.

A problem file is TOML:

    [group]
    family = "C"
    rank = 2

    [character.group]
    free_rank = 0
    torsion = [2, 2, 8]

    [[character.values]]          # one table per torus coordinate
    torsion = [1, 0, 0]

    [[character.values]]
    torsion = [0, 1, 0]

    [options]
    analyses = ["rgroup", "elliptic"]

plus optional [lfactor] (with [[lfactor.values]]), [complementary] and
[siegel] blocks, each present exactly when its analysis is requested.

Exit codes: 0 ok, 2 parse error, 3 validation error, 4 internal invariant
violation, 5 unsupported feature.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import tomli_w

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from . import __version__
from .commalg import FiniteGroupTable, build_projections, dimension_census, verify_projections
from .elliptic import Subspace, arthur_elliptic, fixed_space, herb_induced, r_fixed_space, weyl_invariants
from .errors import (
    DecompositionViolation,
    EnumerationBoundExceeded,
    InconsistentInput,
    NonAbelianR,
    NotSelfDual,
    ParseError,
    RamifiedComponent,
    SubRootSystemViolation,
    UnsupportedCocycle,
    UnsupportedFamily,
    UnsupportedRank,
    UnsupportedRankOne,
    ValidationError,
)
from .lfactor import SatakeValue, gl_unramified_l, pole_order_at_zero, tate_l
from .maximal_cases import (
    CompSeriesInput,
    Origin,
    SiegelFamily,
    SiegelInput,
    VanishingIndex,
    complementary_series,
    siegel_reducibility,
    validate_comp_series,
    validate_siegel,
    wedge_l_trivial,
)
from .oracle import brute_force_rgroup
from .rgroup import RGroupReport, keys_d_invariant, knapp_stein, lemma_225_check
from .rootdata import FAMILIES, CartanSpec, build_root_system
from .torus_char import CharGroup, CharValue, TorusCharacter

TOOL_NAME = "knappstein"
ANALYSES = ("rgroup", "elliptic", "commalg", "lfactor", "complementary", "siegel")
NEEDS_RGROUP = ("elliptic", "commalg")
BLOCKS = ("lfactor", "complementary", "siegel")

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_INVARIANT, EXIT_UNSUPPORTED = 0, 2, 3, 4, 5


@dataclass(frozen=True)
class ProblemSpec:
    group: CartanSpec
    character: TorusCharacter
    analyses: tuple[str, ...]
    satake: tuple[SatakeValue, ...] | None = None
    complementary: CompSeriesInput | None = None
    siegel: SiegelInput | None = None
    z_override: tuple[tuple[Fraction, ...], ...] | None = None

    @property
    def char_group(self) -> CharGroup:
        return self.character.group


# ---------------------------------------------------------------- parsing


class _Doc:
    """Raw TOML tree plus the source text, for line-numbered diagnostics."""

    def __init__(self, text: str):
        self.lines = text.splitlines()

    def locate(self, section: str, key: str | None = None, occurrence: int = 0) -> int | None:
        header = None
        seen = -1
        for no, raw in enumerate(self.lines, 1):
            line = raw.split("#", 1)[0].strip()
            m = re.fullmatch(r"\[\[?\s*([^\]]+?)\s*\]\]?", line)
            if m:
                header = m.group(1)
                if header == section:
                    seen += 1
                    if key is None and seen == occurrence:
                        return no
                continue
            if key is not None and header == section and seen == occurrence:
                if re.match(rf"{re.escape(key)}\s*=", line):
                    return no
        return None

    def fail(self, message: str, section: str, key: str | None = None, occurrence: int = 0):
        dotted = section if key is None else f"{section}.{key}"
        return ValidationError(message, key=dotted, line=self.locate(section, key, occurrence))


def _table(doc: _Doc, data: Any, section: str, allowed: set[str], required: set[str], occurrence: int = 0) -> dict:
    if not isinstance(data, dict):
        raise doc.fail("expected a table", section, occurrence=occurrence)
    for key in data:
        if key not in allowed:
            raise doc.fail(f"unknown key {key!r}", section, key, occurrence)
    for key in sorted(required):
        if key not in data:
            raise doc.fail(f"missing required key {key!r}", section, key, occurrence)
    return data


def _typed(doc: _Doc, value, kind, section: str, key: str, occurrence: int = 0):
    ok = isinstance(value, kind) and not (kind is int and isinstance(value, bool))
    if not ok:
        raise doc.fail(f"expected {kind.__name__}, got {type(value).__name__}", section, key, occurrence)
    return value


def _int_list(doc: _Doc, value, section: str, key: str, occurrence: int = 0) -> list[int]:
    if not isinstance(value, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in value):
        raise doc.fail("expected a list of integers", section, key, occurrence)
    return value


def _rational(doc: _Doc, value, section: str, key: str) -> Fraction:
    try:
        if isinstance(value, bool):
            raise TypeError
        return Fraction(value) if isinstance(value, (int, str)) else Fraction(str(value))
    except (TypeError, ValueError, ZeroDivisionError):
        raise doc.fail(f"not a rational number: {value!r}", section, key) from None


def _enum(doc: _Doc, enum_cls, value, section: str, key: str):
    try:
        return enum_cls(value)
    except ValueError:
        choices = ", ".join(e.value for e in enum_cls)
        raise doc.fail(f"{value!r} is not one of {choices}", section, key) from None


def parse_problem(text: str) -> ProblemSpec:
    try:
        raw = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        m = re.search(r"line (\d+)", str(exc))
        raise ParseError(f"malformed problem file: {exc}", line=int(m.group(1)) if m else None) from None
    doc = _Doc(text)
    top = _table(doc, raw, "", {"group", "character", "options", *BLOCKS}, {"group", "character", "options"})

    g = _table(doc, top["group"], "group", {"family", "rank"}, {"family", "rank"})
    family = _typed(doc, g["family"], str, "group", "family")
    rank = _typed(doc, g["rank"], int, "group", "rank")
    try:
        spec = CartanSpec(family, rank)
    except UnsupportedRank as exc:
        raise doc.fail(str(exc), "group", "family" if family not in FAMILIES else "rank") from None

    ch = _table(doc, top["character"], "character", {"group", "values"}, {"group", "values"})
    cg = _table(doc, ch["group"], "character.group", {"free_rank", "torsion"}, set())
    free_rank = _typed(doc, cg.get("free_rank", 0), int, "character.group", "free_rank")
    torsion = _int_list(doc, cg.get("torsion", []), "character.group", "torsion")
    try:
        group = CharGroup(free_rank, tuple(torsion))
    except ValueError as exc:
        raise doc.fail(str(exc), "character.group", "torsion") from None
    if not isinstance(ch["values"], list):
        raise doc.fail("expected an array of tables", "character", "values")
    values = []
    for k, entry in enumerate(ch["values"]):
        e = _table(doc, entry, "character.values", {"free", "torsion"}, set(), k)
        free = _int_list(doc, e.get("free", [0] * free_rank), "character.values", "free", k)
        tors = _int_list(doc, e.get("torsion", [0] * len(torsion)), "character.values", "torsion", k)
        if len(free) != free_rank or len(tors) != len(torsion):
            raise doc.fail(f"value shape does not match the character group {group}", "character.values", None, k)
        if any(not 0 <= t < m for t, m in zip(tors, torsion)):
            raise doc.fail("torsion entries must be reduced residues", "character.values", "torsion", k)
        values.append(CharValue(tuple(free), tuple(tors)))
    if len(values) != spec.ambient_dim:
        raise doc.fail(
            f"{spec} needs {spec.ambient_dim} character values, got {len(values)}", "character", "values"
        )
    character = TorusCharacter(group, tuple(values))

    opts = _table(doc, top["options"], "options", {"analyses", "z_basis"}, {"analyses"})
    requested = opts["analyses"]
    if not isinstance(requested, list) or any(a not in ANALYSES for a in requested):
        raise doc.fail(f"analyses must be a list drawn from {', '.join(ANALYSES)}", "options", "analyses")
    if len(set(requested)) != len(requested):
        raise doc.fail("duplicate analysis", "options", "analyses")
    analyses = tuple(a for a in ANALYSES if a in requested)
    for a in NEEDS_RGROUP:
        if a in analyses and "rgroup" not in analyses:
            raise doc.fail(f"analysis {a!r} needs 'rgroup' as well", "options", "analyses")
    for block in BLOCKS:
        if (block in analyses) != (block in top):
            state = "without" if block in analyses else "with an unrequested"
            raise doc.fail(f"analysis {block!r} requested {state} [{block}] block", block if block in top else "options",
                           None if block in top else "analyses")

    z_override = None
    if "z_basis" in opts:
        rows = opts["z_basis"]
        if not isinstance(rows, list) or any(not isinstance(r, list) or len(r) != spec.ambient_dim for r in rows):
            raise doc.fail(f"z_basis must be a list of length-{spec.ambient_dim} rows", "options", "z_basis")
        z_override = tuple(tuple(_rational(doc, x, "options", "z_basis") for x in r) for r in rows)

    satake = None
    if "lfactor" in top:
        lf = _table(doc, top["lfactor"], "lfactor", {"values"}, {"values"})
        if not isinstance(lf["values"], list):
            raise doc.fail("expected an array of tables", "lfactor", "values")
        sv = []
        for k, entry in enumerate(lf["values"]):
            e = _table(doc, entry, "lfactor.values", {"kind", "a", "m"}, {"kind"}, k)
            kind = e["kind"]
            if kind == "ramified":
                if "a" in e or "m" in e:
                    raise doc.fail("a ramified value takes no root of unity", "lfactor.values", "kind", k)
                sv.append(SatakeValue.ramified())
            elif kind == "unramified":
                a = _typed(doc, e.get("a", 0), int, "lfactor.values", "a", k)
                m = _typed(doc, e.get("m", 1), int, "lfactor.values", "m", k)
                if m < 1:
                    raise doc.fail("m must be positive", "lfactor.values", "m", k)
                sv.append(SatakeValue.unramified(a, m))
            else:
                raise doc.fail(f"kind must be 'ramified' or 'unramified', got {kind!r}", "lfactor.values", "kind", k)
        satake = tuple(sv)

    comp = None
    if "complementary" in top:
        keys = {"weyl_nontrivial", "self_conjugate", "vanishing_index", "ind_reducible_at_zero"}
        c = _table(doc, top["complementary"], "complementary", keys, keys)
        for key in keys - {"vanishing_index"}:
            _typed(doc, c[key], bool, "complementary", key)
        comp = CompSeriesInput(
            c["weyl_nontrivial"],
            c["self_conjugate"],
            _enum(doc, VanishingIndex, c["vanishing_index"], "complementary", "vanishing_index"),
            c["ind_reducible_at_zero"],
        )
        try:
            validate_comp_series(comp)
        except InconsistentInput as exc:
            raise doc.fail(str(exc), "complementary") from None

    siegel = None
    if "siegel" in top:
        keys = {"family", "n", "self_dual", "origin"}
        s = _table(doc, top["siegel"], "siegel", keys, keys)
        siegel = SiegelInput(
            _enum(doc, SiegelFamily, s["family"], "siegel", "family"),
            _typed(doc, s["n"], int, "siegel", "n"),
            _typed(doc, s["self_dual"], bool, "siegel", "self_dual"),
            _enum(doc, Origin, s["origin"], "siegel", "origin"),
        )
        try:
            validate_siegel(siegel)
        except InconsistentInput as exc:
            raise doc.fail(str(exc), "siegel") from None
        if not siegel.self_dual:
            raise doc.fail("the Siegel reducibility table needs a self-dual sigma", "siegel", "self_dual")

    return ProblemSpec(spec, character, analyses, satake, comp, siegel, z_override)


def _fraction_out(q: Fraction) -> int | str:
    return q.numerator if q.denominator == 1 else str(q)


def problem_to_dict(spec: ProblemSpec) -> dict:
    group = spec.char_group
    out: dict = {
        "group": {"family": spec.group.family, "rank": spec.group.rank},
        "character": {
            "group": {"free_rank": group.free_rank, "torsion": list(group.torsion_orders)},
            "values": [{"free": list(v.free), "torsion": list(v.torsion)} for v in spec.character.values],
        },
        "options": {"analyses": list(spec.analyses)},
    }
    if spec.z_override is not None:
        out["options"]["z_basis"] = [[_fraction_out(x) for x in row] for row in spec.z_override]
    if spec.satake is not None:
        out["lfactor"] = {
            "values": [
                {"kind": "ramified"} if v.is_ramified else {"kind": "unramified", "a": v.root[0], "m": v.root[1]}
                for v in spec.satake
            ]
        }
    if spec.complementary is not None:
        c = spec.complementary
        out["complementary"] = {
            "weyl_nontrivial": c.weyl_nontrivial,
            "self_conjugate": c.self_conjugate,
            "vanishing_index": c.vanishing_index.value,
            "ind_reducible_at_zero": c.ind_reducible_at_zero,
        }
    if spec.siegel is not None:
        s = spec.siegel
        out["siegel"] = {"family": s.family.value, "n": s.n, "self_dual": s.self_dual, "origin": s.origin.value}
    return out


def serialize_problem(spec: ProblemSpec) -> str:
    return tomli_w.dumps(problem_to_dict(spec))


# ---------------------------------------------------------------- running


class Abort(Exception):
    def __init__(self, code: int, payload: dict):
        super().__init__(payload.get("error", ""))
        self.code = code
        self.payload = payload


def _oneline(w) -> list[int]:
    return list(w.oneline)


def _rgroup_section(report: RGroupReport) -> dict:
    section = {
        "w_sigma_order": len(report.w_sigma),
        "w_sigma": [_oneline(w) for w in report.w_sigma],
        "delta_prime": [list(b) for b in report.delta_prime],
        "w_prime_order": len(report.w_prime),
        "r_group": [_oneline(w) for w in report.r_group],
        "r_order": len(report.r_group),
        "is_abelian": report.is_abelian,
        "commuting_dim": report.commuting_dim,
        "component_count": report.component_count,
        "multiplicities": list(report.multiplicities),
    }
    if report.system.family == "C":
        d = keys_d_invariant(report.character)
        section["keys_d"] = d
        section["keys_predicted_r_order"] = 2**d
    if report.system.family == "D":
        section["r_pure_sign_changes"] = lemma_225_check(report)
    return section


def _basis_out(s: Subspace) -> list[list]:
    return [[_fraction_out(x) for x in row] for row in s.basis]


def _elliptic_section(spec: ProblemSpec, report: RGroupReport) -> dict:
    n = report.system.dim
    z = Subspace.span(spec.z_override, n) if spec.z_override is not None else weyl_invariants(report.system)
    return {
        "arthur_elliptic": arthur_elliptic(report, z),
        "herb_induced": herb_induced(report),
        "z": _basis_out(z),
        "a_R": _basis_out(r_fixed_space(report)),
        "fixed_spaces": [{"element": _oneline(w), "basis": _basis_out(fixed_space(w))} for w in report.r_group],
    }


def _commalg_section(report: RGroupReport) -> tuple[dict, list]:
    tbl = FiniteGroupTable.from_elements(list(report.r_group), lambda a, b: a * b)
    census = dimension_census(tbl)
    ps = build_projections(tbl)
    verdict = verify_projections(ps)
    section = {
        "group_order": census.group_order,
        "sum_of_squares": census.sum_of_squares,
        "irrep_count": census.irrep_count,
        "exact": ps.exact,
        "idempotent": verdict.idempotent,
        "orthogonal": verdict.orthogonal,
        "central": verdict.central,
        "partition_of_identity": verdict.partition_of_identity,
        "max_defect": verdict.max_defect,
    }
    checks = [
        (name, bool(section[name])) for name in ("idempotent", "orthogonal", "central", "partition_of_identity")
    ]
    checks.append(("projection_count_matches_components", len(ps.matrices) == report.component_count))
    return section, checks


def _lfactor_section(values: tuple[SatakeValue, ...]) -> dict:
    def value_out(v: SatakeValue):
        return "ramified" if v.is_ramified else {"a": v.root[0], "m": v.root[1]}

    tate = []
    for v in values:
        L = tate_l(v)
        tate.append({"value": value_out(v), "denominator": L.serialize(), "pole_order_at_zero": pole_order_at_zero(L)})
    section: dict = {"tate": tate}
    try:
        L = gl_unramified_l(values)
        section["standard"] = {"denominator": L.serialize(), "pole_order_at_zero": pole_order_at_zero(L)}
    except RamifiedComponent as exc:
        section["standard"] = None
        section["standard_error"] = str(exc)
    return section


def _oracle_checks(spec: ProblemSpec, report: RGroupReport) -> list:
    truth = brute_force_rgroup(spec.group, spec.character)
    return [
        ("oracle_w_sigma", truth["w_sigma"] == {w.oneline for w in report.w_sigma}),
        ("oracle_delta_prime", truth["delta_prime"] == set(report.delta_prime)),
        ("oracle_w_prime", truth["w_prime"] == {w.oneline for w in report.w_prime}),
        ("oracle_r_group", truth["r_group"] == {w.oneline for w in report.r_group}),
    ]


def run(spec: ProblemSpec, oracle: bool = False, max_rank: int | None = None) -> dict:
    """Execute the requested analyses; raises :class:`Abort` on any failure."""
    result: dict = {"tool": TOOL_NAME, "version": __version__, "problem": problem_to_dict(spec)}
    ledger: list[dict] = []

    def record(source: str, checks):
        ledger.extend({"source": source, "check": name, "passed": ok} for name, ok in checks)

    report = None
    try:
        if "rgroup" in spec.analyses:
            rs = build_root_system(spec.group)
            report = knapp_stein(rs, spec.character, bound=max_rank)
            record("rgroup", report.ledger)
            result["rgroup"] = _rgroup_section(report)
            if oracle:
                checks = _oracle_checks(spec, report)
                record("oracle", checks)
                if not all(ok for _, ok in checks):
                    raise DecompositionViolation(
                        "brute-force oracle disagrees with the pipeline",
                        forensic={"mismatches": [name for name, ok in checks if not ok]},
                    )
        if "elliptic" in spec.analyses:
            result["elliptic"] = _elliptic_section(spec, report)
        if "commalg" in spec.analyses:
            section, checks = _commalg_section(report)
            record("commalg", checks)
            result["commalg"] = section
            if not all(ok for _, ok in checks):
                raise DecompositionViolation("projection calculus failed", forensic=section)
        if "lfactor" in spec.analyses:
            result["l_factors"] = _lfactor_section(spec.satake)
        if "complementary" in spec.analyses:
            result["complementary"] = complementary_series(spec.complementary).as_dict()
        if "siegel" in spec.analyses:
            verdict = siegel_reducibility(spec.siegel)
            result["siegel"] = {
                "reducible_at_zero": verdict.reducible_at_zero,
                "adjoint_pieces": verdict.adjoint_pieces,
                "wedge2_l_trivial": wedge_l_trivial(spec.siegel.n),
            }
    except (DecompositionViolation, SubRootSystemViolation) as exc:
        forensic = getattr(exc, "forensic", {})
        raise Abort(EXIT_INVARIANT, {"error": str(exc), "kind": type(exc).__name__, "forensic": forensic,
                                     "invariant_ledger": ledger}) from exc
    except (UnsupportedFamily, UnsupportedRankOne, UnsupportedCocycle, EnumerationBoundExceeded, NonAbelianR) as exc:
        raise Abort(EXIT_UNSUPPORTED, {"error": str(exc), "kind": type(exc).__name__}) from exc
    except (InconsistentInput, NotSelfDual) as exc:
        raise Abort(EXIT_VALIDATION, {"error": str(exc), "kind": type(exc).__name__}) from exc

    result["invariant_ledger"] = ledger
    return result


def render_report(result: dict) -> str:
    return json.dumps(result, indent=2) + "\n"


def _summary(result: dict) -> str:
    lines = [f"{TOOL_NAME} {result['version']}: {result['problem']['group']['family']}{result['problem']['group']['rank']}"]
    if "rgroup" in result:
        r = result["rgroup"]
        lines.append(
            f"  |W(chi)| = {r['w_sigma_order']}, |Delta'| = {len(r['delta_prime'])}, |W'| = {r['w_prime_order']}, "
            f"|R| = {r['r_order']}, components = {r['component_count']}"
        )
    if "elliptic" in result:
        e = result["elliptic"]
        lines.append(f"  elliptic: {e['arthur_elliptic']}, induced from elliptic: {e['herb_induced']}")
    if "siegel" in result:
        lines.append(f"  Siegel: reducible at s=0: {result['siegel']['reducible_at_zero']}")
    failed = [c for c in result["invariant_ledger"] if not c["passed"]]
    lines.append(f"  invariant checks: {len(result['invariant_ledger']) - len(failed)} passed, {len(failed)} failed")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog=TOOL_NAME, description="R-group and reducibility analysis of induced representations")
    parser.add_argument("--input", required=True, help="path to a TOML problem file")
    parser.add_argument("--verbose", action="store_true", help="print a human-readable summary to stderr")
    parser.add_argument("--oracle", action="store_true", help="cross-check the R-group against brute force")
    parser.add_argument("--max-rank", type=int, default=None, help="enumeration bound override")
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {__version__}")
    args = parser.parse_args(argv)

    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        spec = parse_problem(text)
        result = run(spec, oracle=args.oracle, max_rank=args.max_rank)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Abort as exc:
        print(json.dumps(exc.payload, indent=2), file=sys.stderr)
        return exc.code
    sys.stdout.write(render_report(result))
    if args.verbose:
        print(_summary(result), file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
