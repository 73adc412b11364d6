import json

import pytest

from kronconn import (
    BPair,
    GraphError,
    b_number,
    build_graph,
    components,
    double_cover,
    formula_value,
    fuzz_campaign,
    gnp_random,
    is_separating_set,
    kappa_with_witness,
    separator_from_bpair,
    separator_from_cut,
    verify_instance,
    witness_product_separator,
)
from kronconn.instances import complete, complete_bipartite, cycle, path

from helpers import random_corpus


def test_formula_examples():
    assert formula_value(cycle(5)) == 2
    assert formula_value(complete(4)) == 3
    assert formula_value(build_graph(1, [])) == 0
    assert formula_value(cycle(4)) == 0
    assert formula_value(complete_bipartite(3, 3)) == 0


def test_formula_matches_uncapped_minimum():
    for g in random_corpus(40, 1, 10, [0.2, 0.5, 0.8], seed=143):
        kappa = kappa_with_witness(g).kappa
        assert formula_value(g) == min(2 * kappa, b_number(g).value)


def test_separator_from_bpair_c5_example():
    # with the specific pair W={0,1,2}, X={3,4}: both go to side b
    g = cycle(5)
    pair = BPair(frozenset({3, 4}), frozenset(), frozenset({0, 1, 2}), 2)
    sep = separator_from_bpair(g, pair)
    assert sep == frozenset({2 * 3 + 1, 2 * 4 + 1})
    cover = double_cover(g)
    assert is_separating_set(cover, sep)


def test_separator_from_bpair_k4_isolates_zero_a():
    from kronconn import components_excluding

    g = complete(4)
    pair = BPair(frozenset({1, 2, 3}), frozenset(), frozenset({0}), 3)
    sep = separator_from_bpair(g, pair)
    assert sep == frozenset({3, 5, 7})  # (1,b), (2,b), (3,b)
    cover = double_cover(g)
    assert frozenset({0}) in components_excluding(cover, sep)  # (0,a) isolated


def test_separator_from_bpair_rejects_detached_x():
    # vertex 3 has no neighbor in the component {0}
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    bad = BPair(frozenset({1, 3}), frozenset(), frozenset({0}), 2)
    with pytest.raises(GraphError, match="no neighbor"):
        separator_from_bpair(g, bad)


def test_witness_bipartite_graph_is_empty():
    for g in (path(4), cycle(6), complete_bipartite(3, 3)):
        w = witness_product_separator(g)
        assert w.vertices == frozenset()
        assert len(components(double_cover(g))) >= 2


def test_witness_construction_branches():
    from kronconn.instances import triangle_pendant

    # K3: 2*kappa = 4 > b = 2, so the pair branch fires
    w = witness_product_separator(complete(3))
    assert len(w.vertices) == 2
    # triangle with pendant: kappa = 1, b = 1, pair branch gives one vertex
    assert len(witness_product_separator(triangle_pendant()).vertices) == 1
    # C4: kappa=2, b=0 -> empty; disconnected graph: kappa=0 -> doubled empty cut
    assert witness_product_separator(cycle(4)).vertices == frozenset()
    two = build_graph(2, [])
    assert witness_product_separator(two).vertices == frozenset()


def test_witness_size_and_validity():
    for g in random_corpus(50, 1, 10, [0.2, 0.5, 0.8], seed=153):
        w = witness_product_separator(g)
        fv = formula_value(g)
        assert w.host_size == 2 * g.n
        assert len(w.vertices) == fv
        assert is_separating_set(double_cover(g), w.vertices)


def test_both_constructions_bound_product_connectivity():
    for g in random_corpus(40, 1, 9, [0.25, 0.5, 0.8], seed=163):
        cover = double_cover(g)
        direct = kappa_with_witness(cover).kappa
        kappa, cut = kappa_with_witness(g)
        doubled = separator_from_cut(g, cut.vertices)
        assert len(doubled) == 2 * kappa
        assert is_separating_set(cover, doubled)
        assert direct <= 2 * kappa
        b_val, pair = b_number(g)
        lifted = separator_from_bpair(g, pair)
        assert len(lifted) == b_val
        assert is_separating_set(cover, lifted)
        assert direct <= b_val


def test_pair_component_survives_as_product_component():
    from kronconn import components_excluding, induced_bipartition
    from kronconn.product import SIDE_A, SIDE_B, cover_index

    for g in random_corpus(40, 1, 9, [0.3, 0.6], seed=173):
        b_val, pair = b_number(g)
        cover = double_cover(g)
        sep = separator_from_bpair(g, pair)
        part_p, part_q = induced_bipartition(g, pair.component)
        expected = frozenset(
            {cover_index(u, SIDE_A) for u in part_p}
            | {cover_index(u, SIDE_B) for u in part_q}
        )
        assert expected in components_excluding(cover, sep)


def test_verify_instance_examples():
    rep = verify_instance(cycle(5))
    assert (rep.kappa_g, rep.b_g, rep.formula_value, rep.direct_value) == (
        2,
        2,
        2,
        2,
    )
    assert rep.match and rep.witness_valid

    rep = verify_instance(complete(3), with_oracle=True)
    assert (rep.kappa_g, rep.b_g, rep.formula_value, rep.direct_value) == (
        2,
        2,
        2,
        2,
    )
    assert rep.oracle_value == 2 and rep.match

    rep = verify_instance(cycle(4))
    assert (rep.kappa_g, rep.b_g, rep.formula_value, rep.direct_value) == (
        2,
        0,
        0,
        0,
    )
    assert rep.match


def test_verify_instance_oracle_limit():
    with pytest.raises(GraphError, match="oracle"):
        verify_instance(cycle(8), with_oracle=True, oracle_limit=9)
    rep = verify_instance(cycle(4), with_oracle=True, oracle_limit=9)
    assert rep.oracle_value == 0


def test_report_dict_schema():
    rep = verify_instance(cycle(5), graph_id="c5")
    d = rep.to_dict()
    assert list(d.keys()) == [
        "graph_id",
        "n",
        "m",
        "kappa_g",
        "b_g",
        "formula_value",
        "direct_value",
        "oracle_value",
        "witness",
        "witness_valid",
        "match",
    ]
    assert d["graph_id"] == "c5"
    assert d["oracle_value"] is None
    assert d["witness"]["host_size"] == 10
    assert all(side in ("a", "b") for _, side in d["witness"]["vertices"])
    json.dumps(d)  # must be serializable


def test_gnp_random_determinism_and_extremes():
    assert gnp_random(5, 0.0, 17).m == 0
    assert gnp_random(4, 1.0, 17).is_complete()
    a = gnp_random(8, 0.5, 42)
    b = gnp_random(8, 0.5, 42)
    assert a == b
    c = gnp_random(8, 0.5, 43)
    assert a != c  # overwhelmingly likely for a healthy stream
    with pytest.raises(GraphError):
        gnp_random(5, 1.5, 0)
    with pytest.raises(GraphError):
        gnp_random(0, 0.5, 0)


def test_fuzz_campaign_small():
    summary = fuzz_campaign(
        trials=25,
        n_range=(2, 7),
        p_choices=[0.3, 0.6],
        master_seed=7,
        oracle_limit=9,
    )
    assert summary["trials"] == 25
    assert summary["mismatches"] == 0
    assert summary["invalid_witnesses"] == 0
    assert summary["matches"] == 25
    assert summary["bipartite"] + summary["nonbipartite"] == 25
    assert summary["connected"] + summary["disconnected"] == 25
    assert summary["oracle_checked"] >= 1
    assert summary["mismatch_reports"] == []


def test_fuzz_campaign_deterministic():
    kwargs = dict(
        trials=12,
        n_range=(1, 6),
        p_choices=[0.0, 0.4, 1.0],
        master_seed=99,
        oracle_limit=8,
    )
    a = fuzz_campaign(**kwargs)
    b = fuzz_campaign(**kwargs)
    assert json.dumps(a) == json.dumps(b)


def test_fuzz_covers_k1_base_case():
    summary = fuzz_campaign(
        trials=1, n_range=(1, 1), p_choices=[0.0], master_seed=0,
        oracle_limit=9,
    )
    assert summary["matches"] == 1 and summary["mismatches"] == 0
