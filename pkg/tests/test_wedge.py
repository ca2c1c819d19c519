from __future__ import annotations

import threading

import pytest

from cosetcx.complex import HomologyProfile
from cosetcx.errors import BadProductHypothesis
from cosetcx.groups import build_group, intersection, minimal_normal_subgroups, normal_subgroups, subgroup_generated
from cosetcx.wedge import (
    DecompositionTrace,
    ProductStep,
    QuotientStep,
    SimpleBase,
    WedgeDescriptor,
    all_choice_predictions,
    classify_cosets_large_small,
    large_normal_subgroups,
    normal_coset_homology,
    predict_normal_wedge,
    verify_normal_wedge,
)

from conftest import CORPUS, group

ALL_CORPUS = dict(CORPUS, **{f"Z{n}": f"cyclic:{n}" for n in range(1, 17)})


# descriptor algebra

def test_descriptor_rendering():
    assert WedgeDescriptor.of({1: 3}).render() == "⋁ 3·S^1"
    assert WedgeDescriptor.of({0: 1}).render() == "⋁ S^0"
    assert WedgeDescriptor.empty().render() == "∅"


def test_suspension_conventions():
    assert WedgeDescriptor.empty().suspend() == WedgeDescriptor.of({0: 1})
    assert WedgeDescriptor.of({0: 2}).suspend() == WedgeDescriptor.of({1: 2})
    assert WedgeDescriptor.of({1: 2}).repeat(3) == WedgeDescriptor.of({1: 6})


def test_descriptor_validation():
    with pytest.raises(ValueError):
        WedgeDescriptor("wedge", ((1, 0),))
    with pytest.raises(ValueError):
        WedgeDescriptor("wedge", ())


def test_empty_homology():
    assert WedgeDescriptor.empty().homology() == HomologyProfile.build({-1: 1}, {})


# large and small cosets

def test_klein_large_small(klein):
    M = minimal_normal_subgroups(klein)[0]
    K = [N for N in minimal_normal_subgroups(klein) if N != M][0]
    part = classify_cosets_large_small(klein, M, K)
    assert part.counts == (4, 6)
    assert sorted(len(c) for c in part.small) == [1, 1, 1, 1, 2, 2]


def test_z6_large_small():
    G = build_group("cyclic:6")
    M = subgroup_generated(G, {3})
    K = subgroup_generated(G, {2})
    part = classify_cosets_large_small(G, M, K)
    assert part.counts == (2, 9)
    assert {c.subgroup for c in part.large} == {K}


def test_bad_product_hypothesis():
    G = build_group("cyclic:4")
    M = subgroup_generated(G, {2})
    with pytest.raises(BadProductHypothesis):
        classify_cosets_large_small(G, M, M)


@pytest.mark.parametrize("name", list(ALL_CORPUS))
def test_large_subgroups_are_complements(name):
    G = build_group(ALL_CORPUS[name])
    if G.order == 1:
        return
    for M in minimal_normal_subgroups(G):
        large = large_normal_subgroups(G, M)
        for L in large:
            assert intersection(L, M).is_trivial and len(L) * len(M) == G.order
        assert len({len(L) for L in large}) <= 1
        for A in large:
            for B in large:
                assert A == B or not A.issubset(B)


# predictions

def test_z5():
    desc, trace = predict_normal_wedge(build_group("cyclic:5"))
    assert desc == WedgeDescriptor.of({0: 4})
    assert trace.steps == (SimpleBase("cyclic:5", 5),)


def test_z4_via_quotient():
    desc, trace = predict_normal_wedge(build_group("cyclic:4"))
    assert desc == WedgeDescriptor.of({0: 1})
    assert isinstance(trace.steps[0], QuotientStep)


def test_klein_product_step(klein):
    desc, trace = predict_normal_wedge(klein)
    assert desc == WedgeDescriptor.of({1: 3})
    assert isinstance(trace.steps[0], ProductStep) and trace.steps[0].large_count == 4


def test_z6_product_step():
    desc, trace = predict_normal_wedge(build_group("cyclic:6"))
    assert desc == WedgeDescriptor.of({1: 2})
    step = trace.steps[0]
    assert isinstance(step, ProductStep) and step.large_count == 2 and step.factor == "<0,2,4>"


def test_s3_quotient(S3):
    desc, trace = predict_normal_wedge(S3)
    assert desc == WedgeDescriptor.of({0: 1})
    assert isinstance(trace.steps[0], QuotientStep)


def test_trivial_group():
    G = build_group("cyclic:1")
    desc, trace = predict_normal_wedge(G)
    assert desc == WedgeDescriptor.empty() and trace.steps == ()
    assert verify_normal_wedge(G)


def test_prime_cyclic_goldens():
    for p in (2, 3, 5, 7, 11, 13):
        assert predict_normal_wedge(build_group(f"cyclic:{p}"))[0] == WedgeDescriptor.of({0: p - 1})


def test_elementary_abelian_rank_three():
    desc, _ = predict_normal_wedge(group("Z2^3"))
    assert desc == WedgeDescriptor.of({2: 21})


@pytest.mark.parametrize("name", list(ALL_CORPUS))
def test_verify_on_corpus(name):
    G = build_group(ALL_CORPUS[name])
    desc, trace = predict_normal_wedge(G)
    assert verify_normal_wedge(G)
    assert trace.replay() == desc
    if G.order > 1:
        assert desc.kind == "wedge"
        assert not normal_coset_homology(G).is_zero()


@pytest.mark.parametrize("name", list(ALL_CORPUS))
def test_choice_independence(name):
    G = build_group(ALL_CORPUS[name])
    outcomes = set(all_choice_predictions(G))
    assert outcomes == {predict_normal_wedge(G)[0]}


def test_trace_serialisation(klein):
    _, trace = predict_normal_wedge(klein)
    rows = trace.to_list()
    assert rows[0]["step"] == "product" and rows[-1]["step"] == "simple-base"
    assert "product" in trace.render()


def test_replay_of_handmade_trace():
    trace = DecompositionTrace((QuotientStep("<0,2>"), ProductStep("<0,3>", "<0,2,4>", 2), SimpleBase("Z3", 3)))
    assert trace.replay() == WedgeDescriptor.of({1: 2})


def test_concurrent_predictions_agree():
    specs = list(ALL_CORPUS.values())
    results: dict[str, str] = {}

    def work(spec):
        results[spec] = predict_normal_wedge(build_group(spec))[0].render()

    threads = [threading.Thread(target=work, args=(s,)) for s in specs]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == {s: predict_normal_wedge(build_group(s))[0].render() for s in specs}


def test_normal_subgroups_of_simple_group_trivial():
    G = build_group("cyclic:7")
    assert len(normal_subgroups(G)) == 2
