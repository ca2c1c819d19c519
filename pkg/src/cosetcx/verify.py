"""Corpus-driven verification suite (``cosetcx verify``).

A corpus is a JSON file::

    {"groups": [{"spec": "cyclic:6", "expect": {"wedge": {"1": 2}, "P_minus_1": 2}}],
     "presentations": [{"name": "S3", "text": "gens: a,b ; rels: a^2,b^2,(a*b)^3",
                        "expect": {"order": 6}}]}

Recognised group expectations: ``P_minus_1``, ``wedge`` (``{"dim": count}``, ``"empty"``
or ``"point"``), ``betti_normal`` and ``betti_all`` (reduced Betti numbers of the normal and
all-proper coset posets).  Presentation expectations: ``order`` and ``maximal_counts``.

Each check has a name ``<check>:<subject>``; the suite fails if any check fails.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .complex import coset_simplicial, complexes_equal, homology, nerve_complex, order_complex
from .families import cosets_of_family, family_all_proper, family_normal_proper, is_cofinal_pair, maximal_subfamily
from .fpgroups.low_index import count_maximal_by_index
from .fpgroups.presentation import parse_presentation, parse_words
from .fpgroups.todd_coxeter import todd_coxeter
from .groups import FiniteGroup, build_group
from .wedge import WedgeDescriptor, all_choice_predictions, normal_coset_homology, predict_normal_wedge
from .zeta import bouc_check, eval_P, generation_probability

ABELS_HOLZ_MAX_ORDER = 12
GENERATION_MAX_ORDER = 24


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def shipped_corpus_path() -> Path:
    return Path(str(resources.files("cosetcx") / "data" / "corpus.json"))


def load_corpus(path: str | Path) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    data = json.loads(text) if text.strip() else {}
    return {"groups": data.get("groups", []), "presentations": data.get("presentations", [])}


def _wedge_from_json(obj) -> WedgeDescriptor:
    if obj == "empty":
        return WedgeDescriptor.empty()
    if obj == "point":
        return WedgeDescriptor.point()
    return WedgeDescriptor.of({int(d): int(c) for d, c in obj.items()})


def _betti_match(H, expected: dict) -> bool:
    want = {int(d): int(b) for d, b in expected.items()}
    top = max([len(H.betti)] + [d + 2 for d in want])
    return all(H.betti_at(d) == want.get(d, 0) for d in range(-1, top)) and not H.has_torsion()


def check_group(entry: dict) -> list[CheckResult]:
    spec = entry["spec"]
    expect = entry.get("expect", {})
    G = build_group(spec)
    out: list[CheckResult] = []

    def run(name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failed check, reported by name
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        out.append(CheckResult(f"{name}:{spec}", ok, detail))

    def bouc():
        p = eval_P(G, -1)
        ok = bouc_check(G)
        if "P_minus_1" in expect:
            ok = ok and p == expect["P_minus_1"]
        return ok, f"P(G,-1)={p}"

    def wedge():
        desc, _ = predict_normal_wedge(G)
        observed = normal_coset_homology(G)
        ok = observed == desc.homology() and desc.kind != "point"
        if "wedge" in expect:
            want = _wedge_from_json(expect["wedge"])
            ok = ok and desc == want and observed == want.homology()
        if "betti_normal" in expect:
            ok = ok and _betti_match(observed, expect["betti_normal"])
        return ok, f"predicted {desc.render()}, observed {observed}"

    def choices():
        found = set(all_choice_predictions(G))
        return len(found) == 1, f"{len(found)} distinct outcomes"

    def noncontractible():
        if G.order == 1:
            return True, "trivial group skipped"
        h_all = homology(order_complex(cosets_of_family(family_all_proper(G))))
        h_nor = normal_coset_homology(G)
        ok = not h_all.is_zero() and not h_nor.is_zero()
        if "betti_all" in expect:
            ok = ok and _betti_match(h_all, expect["betti_all"])
        return ok, f"all-proper {h_all}; normal {h_nor}"

    def abels_holz():
        return abels_holz_agreement(G)

    def generation():
        bad = [k for k in (1, 2, 3) if eval_P(G, k) != generation_probability(G, k)]
        return not bad, f"mismatch at k={bad}" if bad else "k=1..3 agree"

    run("bouc", bouc)
    run("wedge-verify", wedge)
    run("wedge-choice", choices)
    run("noncontractible", noncontractible)
    if G.order <= ABELS_HOLZ_MAX_ORDER:
        run("abels-holz", abels_holz)
    if G.order <= GENERATION_MAX_ORDER:
        run("generation", generation)
    return out


def abels_holz_agreement(G: FiniteGroup) -> tuple[bool, str]:
    """Delta, nerve and order complex share homology for both intersection-closed families,
    and Delta is unchanged when a family is replaced by its maximal members."""
    notes = []
    ok = True
    for F in (family_all_proper(G), family_normal_proper(G)):
        cs = cosets_of_family(F)
        hs = [homology(coset_simplicial(cs, G)), homology(nerve_complex(cs)), homology(order_complex(cs))]
        same = hs[0] == hs[1] == hs[2]
        Fmax = maximal_subfamily(F)
        cofinal = is_cofinal_pair(F, Fmax)
        if F.members:
            delta_equal = complexes_equal(coset_simplicial(cs, G), coset_simplicial(cosets_of_family(Fmax), G))
        else:
            delta_equal = True
        ok = ok and same and cofinal and delta_equal
        notes.append(f"{F.kind}: {hs[0]} (agree={same}, cofinal Delta equal={delta_equal})")
    return ok, "; ".join(notes)


def check_presentation(entry: dict) -> list[CheckResult]:
    name = entry["name"]
    expect = entry.get("expect", {})
    out: list[CheckResult] = []
    try:
        P = parse_presentation(entry["text"])
    except Exception as exc:
        return [CheckResult(f"parse:{name}", False, str(exc))]
    if "order" in expect:
        try:
            T = todd_coxeter(P, parse_words(entry.get("subgroup", ""), P.generators))
            out.append(CheckResult(f"enumerate:{name}", T.index == expect["order"], f"index {T.index}"))
        except Exception as exc:
            out.append(CheckResult(f"enumerate:{name}", False, f"{type(exc).__name__}: {exc}"))
    if "maximal_counts" in expect:
        bound = int(entry.get("max_index", max(int(k) for k in expect["maximal_counts"])))
        try:
            counts = count_maximal_by_index(P, bound)
            want = {int(k): v for k, v in expect["maximal_counts"].items()}
            ok = all(counts.get(k, 0) == v for k, v in want.items())
            out.append(CheckResult(f"maximal-counts:{name}", ok, json.dumps(counts)))
        except Exception as exc:
            out.append(CheckResult(f"maximal-counts:{name}", False, f"{type(exc).__name__}: {exc}"))
    return out


def run_suite(corpus: dict, jobs: int = 1) -> list[CheckResult]:
    groups = corpus.get("groups", [])
    pres = corpus.get("presentations", [])
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            group_results = list(pool.map(check_group, groups))
            pres_results = list(pool.map(check_presentation, pres))
    else:
        group_results = [check_group(e) for e in groups]
        pres_results = [check_presentation(e) for e in pres]
    return [r for rs in group_results + pres_results for r in rs]


def summary_table(results: list[CheckResult]) -> str:
    width = max((len(r.name) for r in results), default=10)
    lines = [f"{'check':<{width}}  result  detail"]
    for r in results:
        lines.append(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
    failed = [r.name for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        lines.append("failed: " + ", ".join(failed))
    return "\n".join(lines)
