"""Command line front end.

Three input modes map onto the three poset builders: monomial takes a ring
and squarefree generators inline, graph reads an edge list file, poset
reads a JSON description of an abstract component poset.  Output is either
a fixed-layout text report or a JSON document; both are deterministic byte
for byte for a given input and option set.

Exit codes: 0 success, 1 malformed input, 2 a size budget was exceeded,
3 the report was produced but --strict was set and the hypotheses behind
the bound could not be certified.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .binomial_edge import Graph, build_Q_poset
from .bounds import BoundReport, analyze
from .complexes import DEFAULT_MAX_FACES, FaceBudgetExceeded
from .exactfield import FieldSpec
from .monomial import SquarefreeIdeal, ZeroIdeal, build_monomial_poset
from .posets import (
    DEFAULT_MAX_ELEMENTS,
    AnalysisPoset,
    ClosureBudgetExceeded,
    IdealNode,
    RingContext,
)
from .ultrametric import NEG_INF

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_BUDGET = 2
EXIT_STRICT = 3


class ParseError(ValueError):
    """Malformed input of any mode."""


class NonSquarefree(ParseError):
    """A monomial generator repeats a variable."""


class UnknownVariable(ParseError):
    """A generator mentions a variable outside the declared ring."""


class DuplicateId(ParseError):
    """Two poset elements share an id."""


class CyclicRelations(ParseError):
    """The declared relations order two distinct elements both ways."""


@dataclass(frozen=True)
class RunConfig:
    mode: str
    gens: Optional[str] = None
    variables: Optional[str] = None
    edges_path: Optional[str] = None
    poset_path: Optional[str] = None
    field: FieldSpec = FieldSpec.rationals()
    json_output: bool = False
    filtration: bool = False
    witnesses: bool = False
    check: bool = False
    hasse: bool = False
    strict: bool = False
    max_poset: int = DEFAULT_MAX_ELEMENTS
    max_faces: int = DEFAULT_MAX_FACES


def parse_var_list(text: str) -> tuple[str, ...]:
    names = [t.strip() for t in text.split(",")]
    if any(not n for n in names):
        raise ParseError("empty variable name in --vars")
    return tuple(names)


def parse_monomial(
    var_names: Sequence[str], text: str
) -> list[tuple[str, ...]]:
    """Generators separated by commas, factors within one by '*'."""
    known = set(var_names)
    gens = []
    for chunk in text.split(","):
        factors = [f.strip() for f in chunk.split("*")]
        if any(not f for f in factors):
            raise ParseError(f"empty factor in generator {chunk.strip()!r}")
        seen: set[str] = set()
        for f in factors:
            if f not in known:
                raise UnknownVariable(f"unknown variable {f!r}")
            if f in seen:
                raise NonSquarefree(
                    f"variable {f!r} repeats in generator {chunk.strip()!r}"
                )
            seen.add(f)
        gens.append(tuple(factors))
    return gens


def parse_graph_file(text: str) -> Graph:
    """Edge list format: optional 'format: 1' line, 'n <count>', then edges.

    '#' starts a comment; an edge line holds two endpoints u v with
    1 <= u < v <= n.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty graph file")
    if lines[0].replace(" ", "") == "format:1":
        lines.pop(0)
    elif lines[0].replace(" ", "").startswith("format:"):
        raise ParseError(f"unsupported format line {lines[0]!r}")
    if not lines:
        raise ParseError("graph file has no vertex count line")
    head = lines.pop(0).split()
    if len(head) != 2 or head[0] != "n":
        raise ParseError("expected a vertex count line 'n <count>'")
    try:
        n = int(head[1])
    except ValueError:
        raise ParseError(f"vertex count {head[1]!r} is not an integer")
    if n < 1:
        raise ParseError("vertex count must be at least 1")
    edges = []
    for line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"malformed edge line {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"malformed edge line {line!r}")
        if not (1 <= u < v <= n):
            raise ParseError(
                f"edge {u} {v} must satisfy 1 <= u < v <= {n}"
            )
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def parse_poset_doc(text: str) -> AnalysisPoset:
    """JSON poset format.

    Required keys: "format" (must be 1) and nonempty "elements", each
    element an object with "id" and "dim" and optional "height" and "cm".
    Optional keys: "nvars" for the ambient ring, "relations" as pairs
    [a, b] meaning component a contains component b, and free-form
    "description" and "notes".
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}")
    if not isinstance(doc, dict):
        raise ParseError("poset document must be a JSON object")
    if doc.get("format") != 1:
        raise ParseError("poset document must declare \"format\": 1")
    ring = None
    if "nvars" in doc:
        nvars = doc["nvars"]
        if not isinstance(nvars, int) or isinstance(nvars, bool) or nvars < 1:
            raise ParseError("\"nvars\" must be a positive integer")
        ring = RingContext(tuple(f"x_{i}" for i in range(1, nvars + 1)))
    elements = doc.get("elements")
    if not isinstance(elements, list) or not elements:
        raise ParseError("\"elements\" must be a nonempty list")
    nodes = []
    seen_ids: set[str] = set()
    for item in elements:
        if not isinstance(item, dict):
            raise ParseError("each element must be a JSON object")
        pid = item.get("id")
        if not isinstance(pid, str) or not pid:
            raise ParseError("each element needs a nonempty string \"id\"")
        if pid in seen_ids:
            raise DuplicateId(f"duplicate element id {pid!r}")
        seen_ids.add(pid)
        dim = item.get("dim")
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise ParseError(f"element {pid!r}: \"dim\" must be an integer >= 0")
        height = item.get("height")
        if height is not None and (
            not isinstance(height, int) or isinstance(height, bool) or height < 0
        ):
            raise ParseError(
                f"element {pid!r}: \"height\" must be an integer >= 0"
            )
        cm = item.get("cm", True)
        if not isinstance(cm, bool):
            raise ParseError(f"element {pid!r}: \"cm\" must be a boolean")
        nodes.append(
            IdealNode(id=pid, ideal=None, dim=dim, height=height, is_cm=cm)
        )
    index = {nd.id: k for k, nd in enumerate(nodes)}
    n = len(nodes)
    up = [1 << k for k in range(n)]
    for rel in doc.get("relations", ()):
        if not (isinstance(rel, list) and len(rel) == 2):
            raise ParseError(f"malformed relation {rel!r}")
        a, b = rel
        if a not in index or b not in index:
            raise ParseError(f"relation {rel!r} mentions an unknown id")
        up[index[a]] |= 1 << index[b]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            m = up[i]
            while m:
                low = m & -m
                acc |= up[low.bit_length() - 1]
                m ^= low
            if acc != up[i]:
                up[i] = acc
                changed = True
    for i in range(n):
        for j in range(n):
            if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                raise CyclicRelations(
                    f"relations order {nodes[i].id!r} and {nodes[j].id!r}"
                    " both ways"
                )
    pairs = [
        (nodes[i].id, nodes[j].id)
        for i in range(n)
        for j in range(n)
        if up[i] >> j & 1
    ]
    try:
        return AnalysisPoset(nodes, pairs, ring=ring, provenance="abstract")
    except ValueError as e:
        raise ParseError(str(e))


def _build_poset(config: RunConfig) -> AnalysisPoset:
    if config.mode == "monomial":
        if not config.variables or not config.gens:
            raise ParseError("monomial mode needs --vars and --gens")
        names = parse_var_list(config.variables)
        ring = RingContext(names)
        gens = parse_monomial(names, config.gens)
        ideal = SquarefreeIdeal.create(ring, gens)
        return build_monomial_poset(ideal, max_elements=config.max_poset)
    if config.mode == "graph":
        if not config.edges_path:
            raise ParseError("graph mode needs --edges FILE")
        with open(config.edges_path, "r", encoding="utf-8") as fh:
            text = fh.read()
        graph = parse_graph_file(text)
        return build_Q_poset(graph, max_elements=config.max_poset)
    if config.mode == "poset":
        if not config.poset_path:
            raise ParseError("poset mode needs --poset FILE")
        with open(config.poset_path, "r", encoding="utf-8") as fh:
            text = fh.read()
        return parse_poset_doc(text)
    raise ParseError(f"unknown mode {config.mode!r}")


def _fmt_bound(bound) -> str:
    return "-inf" if bound is NEG_INF else str(bound)


def render_text(report: BoundReport, config: RunConfig) -> str:
    poset = report.poset
    lines = ["format: 1", f"mode: {config.mode}", f"field: {report.field.label()}"]
    if poset.ring is None:
        lines.append("ring: unspecified")
    else:
        n = poset.ring.nvars
        plural = "variable" if n == 1 else "variables"
        lines.append(f"ring: {n} {plural} ({', '.join(poset.ring.var_names)})")
    lines.append(f"poset size: {len(poset)}")
    lines.append("elements:")
    for node in poset.nodes:
        h = "?" if node.height is None else str(node.height)
        tag = "  maximal" if poset.is_maximal(node.id) else ""
        lines.append(f"  {node.id}  dim {node.dim}  height {h}{tag}")
    if config.hasse:
        lines.append("covers:")
        for low, high in poset.hasse():
            lines.append(f"  {low} < {high}")
    cond = report.conditions
    ii = "pass" if cond.cohen_macaulay else "FAIL"
    if cond.strict_heights is None:
        iii = "not checkable"
    else:
        iii = "pass" if cond.strict_heights else "FAIL"
    lines.append(
        f"conditions: (i) {cond.distributive_lattice}; (ii) {ii}; (iii) {iii}"
    )
    lines.append(f"certified: {'yes' if cond.certified else 'no'}")
    if config.check:
        lines.append("notes:")
        if cond.notes:
            lines.extend(f"  - {note}" for note in cond.notes)
        else:
            lines.append("  (none)")
    if report.assumptions:
        lines.append("assumptions:")
        lines.extend(f"  - {a}" for a in report.assumptions)
    lines.append("bounds:")
    for e in report.entries:
        lines.append(f"  reg K^{e.j} <= {_fmt_bound(e.bound)} (cap {e.cap})")
        lines.append(f"    S_{e.j} = {{{', '.join(e.members)}}}")
        if config.witnesses and e.witnesses is not None:
            lines.append(f"    witnesses = {{{', '.join(e.witnesses)}}}")
        if config.filtration and e.layers is not None:
            for layer in e.layers:
                if layer.summands:
                    body = " + ".join(
                        f"{pid}^{exp}" for pid, exp in layer.summands
                    )
                else:
                    body = "(empty)"
                lines.append(f"    layer {layer.k}: {body}")
    suffix = " (vacuous, capped at ambient dimension)" if report.mt_capped else ""
    lines.append(f"mt level: {report.mt_level}{suffix}")
    return "\n".join(lines) + "\n"


def render_json(report: BoundReport, config: RunConfig) -> str:
    poset = report.poset
    doc: dict = {
        "format": 1,
        "mode": config.mode,
        "field": report.field.label(),
        "ring": {"nvars": poset.ring.nvars if poset.ring else None},
        "poset": {
            "elements": [
                {
                    "id": nd.id,
                    "dim": nd.dim,
                    "height": nd.height,
                    "maximal": poset.is_maximal(nd.id),
                }
                for nd in poset.nodes
            ],
            "covers": [[a, b] for a, b in poset.hasse()],
        },
        "multiplicities": [
            {"id": nd.id, "degree": d, "value": v}
            for nd in poset.nodes
            for d, v in report.table.profiles[nd.id].nonzero().items()
        ],
        "bounds": [
            {
                "j": e.j,
                "S": list(e.members),
                "bound": "-inf" if e.bound is NEG_INF else e.bound,
                "cap": e.cap,
                "certified": e.certified,
            }
            for e in report.entries
        ],
    }
    if config.witnesses:
        doc["witnesses"] = [
            {"j": e.j, "members": list(e.witnesses or ())}
            for e in report.entries
        ]
    if config.filtration:
        doc["filtration"] = [
            {
                "j": e.j,
                "layers": [
                    {
                        "k": layer.k,
                        "summands": [
                            {"id": pid, "exponent": exp}
                            for pid, exp in layer.summands
                        ],
                    }
                    for layer in e.layers or ()
                ],
            }
            for e in report.entries
        ]
    cond = report.conditions
    conditions: dict = {
        "i": cond.distributive_lattice,
        "ii": cond.cohen_macaulay,
        "iii": "not checkable" if cond.strict_heights is None else cond.strict_heights,
    }
    if config.check:
        conditions["notes"] = list(cond.notes)
    doc["conditions"] = conditions
    doc["mt_level"] = report.mt_level
    doc["mt_capped"] = report.mt_capped
    doc["assumptions"] = list(report.assumptions)
    return json.dumps(doc, indent=2) + "\n"


def run(config: RunConfig) -> tuple[int, str]:
    try:
        poset = _build_poset(config)
    except (ClosureBudgetExceeded, FaceBudgetExceeded) as e:
        return EXIT_BUDGET, f"error: {e}\n"
    except (ParseError, ZeroIdeal, OSError, ValueError) as e:
        return EXIT_PARSE, f"error: {e}\n"
    try:
        report = analyze(
            poset,
            config.field,
            include_layers=config.filtration,
            include_witnesses=config.witnesses,
            max_faces=config.max_faces,
        )
    except FaceBudgetExceeded as e:
        return EXIT_BUDGET, f"error: {e}\n"
    text = (
        render_json(report, config)
        if config.json_output
        else render_text(report, config)
    )
    if config.strict and not report.conditions.certified:
        return EXIT_STRICT, text
    return EXIT_OK, text


def _parse_field(spec: str) -> FieldSpec:
    if spec == "rational":
        return FieldSpec.rationals()
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ValueError(f"bad field spec {spec!r}")
        return FieldSpec.prime_field(p)
    raise ValueError(
        f"bad field spec {spec!r}; use 'rational' or 'gf:<prime>'"
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="defreg",
        description=(
            "Bound the regularity of the deficiency modules of a quotient"
            " ring from the poset of sums of its primary components."
        ),
    )
    parser.add_argument(
        "--mode",
        required=True,
        choices=("monomial", "graph", "poset"),
        help="input kind: inline monomial ideal, edge list file, or poset file",
    )
    parser.add_argument("--gens", help="monomial generators, e.g. 'x*z, x*w'")
    parser.add_argument("--vars", help="ring variables, e.g. 'x, y, z, w'")
    parser.add_argument("--edges", metavar="FILE", help="edge list file")
    parser.add_argument("--poset", metavar="FILE", help="poset JSON file")
    parser.add_argument(
        "--field",
        default="rational",
        help="coefficient field: 'rational' (default) or 'gf:<prime>'",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument(
        "--filtration", action="store_true", help="list filtration layers"
    )
    parser.add_argument(
        "--witnesses", action="store_true", help="list nonvanishing witnesses"
    )
    parser.add_argument(
        "--check", action="store_true", help="show condition check notes"
    )
    parser.add_argument(
        "--hasse", action="store_true", help="list cover relations"
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="exit with status 3 when the hypotheses are not certified",
    )
    parser.add_argument(
        "--max-poset",
        type=int,
        default=DEFAULT_MAX_ELEMENTS,
        help="element budget for the sum closure",
    )
    parser.add_argument(
        "--max-faces",
        type=int,
        default=DEFAULT_MAX_FACES,
        help="face budget per order complex",
    )
    args = parser.parse_args(argv)
    try:
        field = _parse_field(args.field)
    except ValueError as e:
        sys.stdout.write(f"error: {e}\n")
        return EXIT_PARSE
    config = RunConfig(
        mode=args.mode,
        gens=args.gens,
        variables=args.vars,
        edges_path=args.edges,
        poset_path=args.poset,
        field=field,
        json_output=args.json,
        filtration=args.filtration,
        witnesses=args.witnesses,
        check=args.check,
        hasse=args.hasse,
        strict=args.strict,
        max_poset=args.max_poset,
        max_faces=args.max_faces,
    )
    code, text = run(config)
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
