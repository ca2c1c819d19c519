"""The analysis pipeline behind ``cosetcx analyze``: families, complexes, homology, zeta, wedge."""

from __future__ import annotations

import time
from typing import Sequence

from .complex import coset_simplicial, homology, nerve_complex, order_complex, reduced_euler
from .families import (
    SubgroupFamily,
    cosets_of_family,
    family_all_proper,
    family_normal_proper,
    frattini,
    maximal_subfamily,
    maximal_subgroups,
)
from .groups import FiniteGroup, all_subgroups, build_group, normal_subgroups
from .wedge import normal_coset_homology, predict_normal_wedge
from .zeta import hall_series, moebius_table

SCHEMA_VERSION = 1
FAMILIES = ("all", "normal", "maximal")
COMPLEXES = ("order", "nerve", "delta")


def make_family(G: FiniteGroup, name: str) -> SubgroupFamily:
    if name == "all":
        return family_all_proper(G)
    if name == "normal":
        return family_normal_proper(G)
    if name == "maximal":
        return maximal_subfamily(family_all_proper(G))
    raise ValueError(f"unknown family {name!r}; choose from {FAMILIES}")


def make_complex(G: FiniteGroup, family: SubgroupFamily, kind: str, cap: int | None = None):
    cs = cosets_of_family(family)
    if kind == "order":
        return order_complex(cs, cap)
    if kind == "nerve":
        return nerve_complex(cs, cap)
    if kind == "delta":
        return coset_simplicial(cs, G, cap)
    raise ValueError(f"unknown complex kind {kind!r}; choose from {COMPLEXES}")


def analyze(spec: str, families: Sequence[str] = ("all",), complexes: Sequence[str] = ("order",),
            cap_simplices: int | None = None, timings: bool = False) -> dict:
    """Run the whole pipeline for one group spec and return a JSON-ready report."""
    clock: dict[str, float] = {}

    def tick(name: str, start: float) -> None:
        clock[name] = round(time.perf_counter() - start, 6)

    t0 = time.perf_counter()
    G = build_group(spec)
    tick("build", t0)

    t0 = time.perf_counter()
    census = {
        "subgroups": len(all_subgroups(G)),
        "normal_subgroups": len(normal_subgroups(G)),
        "maximal_subgroups": len(maximal_subgroups(G)) if G.order > 1 else 0,
        "frattini_order": len(frattini(G)) if G.order > 1 else None,
    }
    tick("census", t0)

    family_reports = []
    t0 = time.perf_counter()
    for fname in families:
        F = make_family(G, fname)
        entry = {
            "family": fname,
            "members": len(F),
            "cosets": len(cosets_of_family(F)),
            "intersection_closed": F.intersection_closed,
            "complexes": [],
        }
        for kind in complexes:
            K = make_complex(G, F, kind, cap_simplices)
            H = homology(K, cap_simplices)
            entry["complexes"].append({
                "complex": kind,
                "f_vector": list(K.f_vector()),
                "reduced_euler": reduced_euler(K),
                "homology": H.to_dict(),
                "homology_text": str(H),
                "contractible_homology": H.is_zero(),
            })
        family_reports.append(entry)
    tick("complexes", t0)

    t0 = time.perf_counter()
    series = hall_series(G, moebius_table(G))
    p_minus_1 = series(-1)
    coset_poset = order_complex(cosets_of_family(family_all_proper(G)), cap_simplices)
    chi = reduced_euler(coset_poset)
    tick("zeta", t0)

    t0 = time.perf_counter()
    desc, trace = predict_normal_wedge(G)
    observed = normal_coset_homology(G)
    tick("wedge", t0)

    report = {
        "schema_version": SCHEMA_VERSION,
        "group": {"spec": spec, "label": G.label, "order": G.order},
        "census": census,
        "families": family_reports,
        "zeta": {
            "series": series.render(),
            "terms": series.to_dict(),
            "P_minus_1": int(p_minus_1),
            "coset_poset_reduced_euler": chi,
            "bouc": int(p_minus_1) == -chi,
        },
        "wedge": {
            "descriptor": desc.to_dict(),
            "render": desc.render(),
            "trace": trace.to_list(),
            "observed_homology": observed.to_dict(),
            "verified": observed == desc.homology(),
        },
    }
    if timings:
        report["timings"] = clock
    return report


def render_text(report: dict) -> str:
    g = report["group"]
    lines = [f"group {g['spec']}  (order {g['order']})"]
    c = report["census"]
    lines.append(f"  subgroups {c['subgroups']}, normal {c['normal_subgroups']}, maximal {c['maximal_subgroups']}, "
                 f"Frattini order {c['frattini_order']}")
    for fam in report["families"]:
        lines.append(f"  family {fam['family']}: {fam['members']} subgroups, {fam['cosets']} cosets")
        for cx in fam["complexes"]:
            lines.append(f"    {cx['complex']:<6} f={cx['f_vector']} reduced_euler={cx['reduced_euler']} "
                         f"homology: {cx['homology_text']}")
    z = report["zeta"]
    lines.append(f"  P(G,s) = {z['series']}")
    lines.append(f"  P(G,-1) = {z['P_minus_1']}; coset poset reduced Euler = {z['coset_poset_reduced_euler']}; "
                 f"identity holds: {z['bouc']}")
    w = report["wedge"]
    lines.append(f"  normal coset poset ~ {w['render']}  (homology check: {w['verified']})")
    for step in w["trace"]:
        lines.append("    " + ", ".join(f"{k}={v}" for k, v in step.items()))
    if "timings" in report:
        lines.append("  timings: " + ", ".join(f"{k} {v:.3f}s" for k, v in report["timings"].items()))
    return "\n".join(lines)
