"""Command-line front end.

Subcommands: check, verify, examples, search.  Input spaces are single
JSON documents (see README for the schema); reports go to stdout and are
byte-deterministic, timing goes to stderr.

Exit codes: 0 ran, 1 theorem/golden failure, 2 input error, 3 capacity.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CapacityError, InputError, NoSoftElementsError, SoftBitopError
from .finsets import FinSet, generate_topology, pairwise_t0, pairwise_t1, pairwise_t2
from .pairwise import (
    SoftBitopSpace,
    Verdict,
    component_bitop,
    induced_bitop,
    pairwise_soft_t0,
    pairwise_soft_t1,
    pairwise_soft_t2,
    search_counterexamples,
    verify_theorems,
)
from .scenarios import run_all
from .softsets import SoftSet, is_se_representable
from .softtop import SoftTopology, canonical_topology, is_canonical
from . import __version__


@dataclass(frozen=True)
class SpaceDescription:
    """A parsed input document with all names resolved to indices."""

    universe: tuple[str, ...]
    params: tuple[str, ...]
    soft_set: SoftSet
    tau1: SoftTopology
    tau2: SoftTopology
    representability: Optional[tuple[tuple[str, ...], ...]] = None

    def to_doc(self) -> dict:
        """Canonical JSON form; parsing it back yields an equal value."""
        doc = {
            "universe": list(self.universe),
            "params": list(self.params),
            "sections": {
                p: [self.universe[i] for i in self.soft_set.section(t).members()]
                for t, p in enumerate(self.params)
            },
            "topologies": [
                self._topology_doc(self.tau1),
                self._topology_doc(self.tau2),
            ],
        }
        if self.representability is not None:
            doc["representability"] = [list(e) for e in self.representability]
        return doc

    def _topology_doc(self, tau: SoftTopology) -> dict:
        return {
            "opens": [
                {
                    p: [self.universe[i] for i in h.section(t).members()]
                    for t, p in enumerate(self.params)
                }
                for h in tau.opens
            ]
        }


def _need(doc: dict, key: str, where: str = "document"):
    if key not in doc:
        raise InputError(f"missing key {key!r} in {where}")
    return doc[key]


def _resolve_names(names: Sequence[str], table: dict[str, int], where: str) -> list[int]:
    out = []
    for name in names:
        if name not in table:
            raise InputError(f"unknown name {name!r} in {where}")
        out.append(table[name])
    return out


def parse_space(doc: dict) -> SpaceDescription:
    if not isinstance(doc, dict):
        raise InputError("top-level JSON value must be an object")
    universe = tuple(_need(doc, "universe"))
    params = tuple(_need(doc, "params"))
    if len(set(universe)) != len(universe) or not universe:
        raise InputError("universe names must be nonempty and distinct")
    if len(set(params)) != len(params) or not params:
        raise InputError("parameter names must be nonempty and distinct")
    elem_idx = {name: i for i, name in enumerate(universe)}
    n = len(universe)

    sections_doc = _need(doc, "sections")
    section_sets = []
    for p in params:
        members = _resolve_names(
            _need(sections_doc, p, "sections"), elem_idx, f"sections[{p}]"
        )
        section_sets.append(members)
    soft_set = SoftSet.of(section_sets, n)

    topo_docs = _need(doc, "topologies")
    if not isinstance(topo_docs, list) or len(topo_docs) != 2:
        raise InputError("'topologies' must be a list of exactly two entries")
    taus = [
        _parse_topology(td, i, soft_set, params, elem_idx)
        for i, td in enumerate(topo_docs)
    ]

    representability = None
    if "representability" in doc:
        rep = doc["representability"]
        if not isinstance(rep, list) or not rep:
            raise InputError("'representability' must be a nonempty list of elements")
        resolved = []
        for j, elem in enumerate(rep):
            if len(elem) != len(params):
                raise InputError(
                    f"representability element {j} needs one value per parameter"
                )
            _resolve_names(elem, elem_idx, f"representability[{j}]")
            resolved.append(tuple(elem))
        representability = tuple(resolved)

    return SpaceDescription(
        universe, params, soft_set, taus[0], taus[1], representability
    )


def _parse_topology(
    td: dict,
    which: int,
    soft_set: SoftSet,
    params: tuple[str, ...],
    elem_idx: dict[str, int],
) -> SoftTopology:
    where = f"topologies[{which}]"
    n = soft_set.universe_size
    if "opens" in td:
        opens = []
        for k, open_doc in enumerate(td["opens"]):
            sections = []
            for t, p in enumerate(params):
                members = _resolve_names(
                    _need(open_doc, p, f"{where}.opens[{k}]"),
                    elem_idx,
                    f"{where}.opens[{k}][{p}]",
                )
                sections.append(FinSet.of(members, n))
            opens.append(SoftSet(tuple(sections)))
        return SoftTopology.build(opens, soft_set)
    if td.get("generate") == "canonical":
        subbases = _need(td, "subbases", where)
        sigmas = []
        for t, p in enumerate(params):
            carrier = soft_set.section(t)
            subbase = [
                FinSet.of(
                    _resolve_names(s, elem_idx, f"{where}.subbases[{p}]"), n
                )
                for s in subbases.get(p, [])
            ]
            sigmas.append(generate_topology(subbase, n, carrier=carrier))
        return canonical_topology(soft_set, sigmas)
    raise InputError(f"{where} needs 'opens' or 'generate: canonical'")


def _element_text(desc: SpaceDescription, elem: tuple[int, ...]) -> str:
    return "(" + ",".join(desc.universe[i] for i in elem) + ")"


def _verdict_fields(desc: SpaceDescription, v: Verdict) -> tuple[str, Optional[list]]:
    if v.holds or v.witness is None:
        return str(v.holds).lower(), None
    a, b = v.witness
    return str(v.holds).lower(), [
        list(desc.universe[i] for i in a),
        list(desc.universe[i] for i in b),
    ]


def _build_check_report(desc: SpaceDescription) -> dict:
    space = SoftBitopSpace(desc.soft_set, desc.tau1, desc.tau2)
    report: dict = {"command": "check"}
    report["tau1"] = {"opens": len(desc.tau1), "canonical": is_canonical(desc.tau1)}
    report["tau2"] = {"opens": len(desc.tau2), "canonical": is_canonical(desc.tau2)}
    soft = {}
    for j, dec in ((0, pairwise_soft_t0), (1, pairwise_soft_t1), (2, pairwise_soft_t2)):
        v = dec(space)
        holds, witness = _verdict_fields(desc, v)
        soft[f"t{j}"] = {"holds": v.holds, "witness": witness}
    report["pairwise_soft"] = soft
    comps = {}
    for t, p in enumerate(desc.params):
        bp = component_bitop(space, t)
        comps[p] = {
            "t0": pairwise_t0(bp)[0],
            "t1": pairwise_t1(bp)[0],
            "t2": pairwise_t2(bp)[0],
        }
    report["component_pairwise"] = comps
    ind = induced_bitop(space)
    report["induced_pairwise"] = {
        "t0": pairwise_t0(ind)[0],
        "t1": pairwise_t1(ind)[0],
        "t2": pairwise_t2(ind)[0],
    }
    return report


def _render_check(report: dict, out) -> None:
    print(f"command: {report['command']}", file=out)
    for tau in ("tau1", "tau2"):
        info = report[tau]
        print(
            f"{tau}: opens={info['opens']} "
            f"canonical={str(info['canonical']).lower()}",
            file=out,
        )
    for j in (0, 1, 2):
        info = report["pairwise_soft"][f"t{j}"]
        line = f"pairwise-soft-t{j}: {str(info['holds']).lower()}"
        if info["witness"] is not None:
            a, b = info["witness"]
            line += f" witness=({','.join(a)})({','.join(b)})"
        print(line, file=out)
    for p, vals in report["component_pairwise"].items():
        print(
            f"component[{p}]: "
            + " ".join(f"t{j}={str(vals[f't{j}']).lower()}" for j in (0, 1, 2)),
            file=out,
        )
    vals = report["induced_pairwise"]
    print(
        "induced: "
        + " ".join(f"t{j}={str(vals[f't{j}']).lower()}" for j in (0, 1, 2)),
        file=out,
    )


def cmd_check(desc: SpaceDescription, as_json: bool, out) -> int:
    report = _build_check_report(desc)
    if as_json:
        print(json.dumps(report, indent=2), file=out)
    else:
        _render_check(report, out)
    return 0


def cmd_verify(desc: SpaceDescription, as_json: bool, out) -> int:
    space = SoftBitopSpace(desc.soft_set, desc.tau1, desc.tau2)
    theorem_report = verify_theorems(space)
    entries = []
    for check in theorem_report.checks:
        status = "N/A" if not check.applicable else ("PASS" if check.passed else "FAIL")
        entries.append(
            {
                "name": check.name,
                "status": status,
                "detail": check.detail,
            }
        )
    report: dict = {"command": "verify", "theorems": entries}
    if desc.representability is not None:
        elems = [
            tuple(desc.universe.index(name) for name in e)
            for e in desc.representability
        ]
        k = space.space.subset_of(elems)
        representable, witness = is_se_representable(k)
        report["representability"] = {
            "representable": representable,
            "witness": None
            if witness is None
            else [desc.universe[i] for i in witness],
        }
    if as_json:
        print(json.dumps(report, indent=2), file=out)
    else:
        print("command: verify", file=out)
        for e in entries:
            line = f"{e['status']:4} {e['name']}"
            if e["detail"]:
                line += f"  [{e['detail']}]"
            print(line, file=out)
        if "representability" in report:
            rep = report["representability"]
            wtxt = "none" if rep["witness"] is None else f"({','.join(rep['witness'])})"
            print(
                f"representability: {str(rep['representable']).lower()} "
                f"witness={wtxt}",
                file=out,
            )
    return 0 if theorem_report.all_passed else 1


def cmd_examples(as_json: bool, out) -> int:
    outcomes = run_all()
    if as_json:
        print(
            json.dumps(
                {
                    "command": "examples",
                    "scenarios": [
                        {"name": o.name, "ok": o.ok, "lines": list(o.lines)}
                        for o in outcomes
                    ],
                },
                indent=2,
            ),
            file=out,
        )
    else:
        print("command: examples", file=out)
        for o in outcomes:
            for line in o.lines:
                print(f"{o.name}: {line}", file=out)
            print(f"{o.name}: {'OK' if o.ok else 'MISMATCH'}", file=out)
    return 0 if all(o.ok for o in outcomes) else 1


def cmd_search(max_universe: int, max_params: int, as_json: bool, out) -> int:
    result = search_counterexamples(max_universe, max_params)
    report = {
        "command": "search",
        "max_universe": max_universe,
        "max_params": max_params,
        "not_t0_but_induced_t2": list(result.not_t0_but_induced_t2),
        "strict_enlargements": list(result.strict_enlargements),
    }
    if as_json:
        print(json.dumps(report, indent=2), file=out)
    else:
        print("command: search", file=out)
        print(
            f"bounds: universe<={max_universe} params<={max_params}", file=out
        )
        print(
            f"class-i (not soft-t0, induced pairwise-t2): "
            f"{len(result.not_t0_but_induced_t2)}",
            file=out,
        )
        for entry in result.not_t0_but_induced_t2:
            print(
                f"  n={entry['universe_size']} p={entry['param_count']} "
                f"tau1={entry['tau1_opens']} tau2={entry['tau2_opens']}",
                file=out,
            )
        print(
            f"class-ii (strict canonical enlargement): "
            f"{len(result.strict_enlargements)}",
            file=out,
        )
        for entry in result.strict_enlargements:
            print(
                f"  n={entry['universe_size']} p={entry['param_count']} "
                f"opens={entry['opens']} enlarged-to={entry['enlarged_opens']}",
                file=out,
            )
    return 0


def _load_doc(path: Optional[str]) -> dict:
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    except OSError as exc:
        raise InputError(f"cannot read input: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="softbitop",
        description="Decide pairwise separation and compactness properties of "
        "finite soft bitopological spaces and verify the theory on them.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument(
            "--seed", type=int, default=0, help="seed for randomized runs"
        )

    p_check = sub.add_parser("check", help="run all deciders on a space")
    p_check.add_argument("input", nargs="?", help="JSON file ('-' for stdin)")
    add_common(p_check)

    p_verify = sub.add_parser("verify", help="run the theorem harness")
    p_verify.add_argument("input", nargs="?", help="JSON file ('-' for stdin)")
    add_common(p_verify)

    p_examples = sub.add_parser(
        "examples", help="reproduce the built-in scenarios against pinned outcomes"
    )
    add_common(p_examples)

    p_search = sub.add_parser("search", help="counterexample census")
    p_search.add_argument("--max-universe", type=int, default=2)
    p_search.add_argument("--max-params", type=int, default=2)
    add_common(p_search)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.monotonic()
    try:
        if args.command in ("check", "verify"):
            desc = parse_space(_load_doc(args.input))
            if args.command == "check":
                code = cmd_check(desc, args.json, sys.stdout)
            else:
                code = cmd_verify(desc, args.json, sys.stdout)
        elif args.command == "examples":
            code = cmd_examples(args.json, sys.stdout)
        else:
            code = cmd_search(
                args.max_universe, args.max_params, args.json, sys.stdout
            )
    except (InputError, NoSoftElementsError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except SoftBitopError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.monotonic() - start
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
