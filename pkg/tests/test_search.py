from __future__ import annotations

import pytest

from gallai_forge.graphs import ColoredCompleteGraph, PartialColoring, encode, tri_unindex
from gallai_forge.patterns import Pattern, brute_force_find, contains_pattern
from gallai_forge.search import (
    BudgetExhausted,
    NotFoundBelowCap,
    SearchBudget,
    ramsey_number,
    search_two_color,
    verify_paper_claims,
)

TRI = Pattern.clique(3)
SP4 = Pattern.star_plus(4)
PP4 = Pattern.path_plus(4)


def _enum_has_avoider(n: int, pa: Pattern, pb: Pattern) -> bool:
    edges = n * (n - 1) // 2
    for bits in range(1 << edges):
        tri = [1 + ((bits >> i) & 1) for i in range(edges)]
        g = ColoredCompleteGraph(n, 2, tri)
        if contains_pattern(g, pa, 1) is None and contains_pattern(g, pb, 2) is None:
            return True
    return False


@pytest.mark.parametrize(
    "n,pa,pb",
    [
        (3, TRI, TRI),
        (4, TRI, TRI),
        (5, TRI, TRI),
        (5, SP4, SP4),
        (4, Pattern.cycle(4), Pattern.cycle(4)),
        (4, Pattern.path(4), Pattern.path(4)),
        (5, Pattern.path(4), Pattern.path(4)),
        (4, Pattern.star(4), Pattern.star(4)),
        (5, TRI, SP4),
        (5, Pattern.cycle(4), TRI),
    ],
)
def test_verdict_matches_full_enumeration(n, pa, pb):
    out = search_two_color(n, pa, pb)
    assert (out.verdict == "witness") == _enum_has_avoider(n, pa, pb)
    if out.verdict == "witness":
        w = out.witness
        assert contains_pattern(w, pa, 1) is None
        assert brute_force_find(w, pb, 2) is None


def test_every_prune_is_justified():
    for n, pa, pb in [(6, SP4, PP4), (7, SP4, SP4)]:
        unjustified = []

        def on_prune(prefix_colors, edge, color, pa=pa, pb=pb, n=n):
            pc = PartialColoring(n, 2)
            for i, c in enumerate(prefix_colors):
                u, v = tri_unindex(i)
                pc.assign(u, v, c)
            g = pc.filled(3)
            target = pa if color == 1 else pb
            if brute_force_find(g, target, color) is None:
                unjustified.append((prefix_colors, edge, color))

        out = search_two_color(n, pa, pb, on_prune=on_prune)
        assert unjustified == []
        assert out.prunes > 0


def test_single_vertex_search():
    out = search_two_color(1, TRI, TRI)
    assert out.verdict == "witness"
    assert out.witness.n == 1
    assert out.nodes == 0


def test_two_vertices_with_edge_targets():
    p2 = Pattern.path(2)
    out = search_two_color(2, p2, p2)
    assert out.verdict == "exhausted"
    assert out.nodes == 1  # the single edge, color 1 only by symmetry


def test_argument_validation():
    with pytest.raises(ValueError):
        search_two_color(0, TRI, TRI)
    with pytest.raises(ValueError):
        search_two_color(4, TRI, TRI, jobs=0)
    with pytest.raises(ValueError):
        search_two_color(4, TRI, TRI, split_depth=0)
    with pytest.raises(ValueError):
        search_two_color(4, TRI, TRI, jobs=2, on_prune=lambda *a: None)
    with pytest.raises(ValueError):
        search_two_color(4, Pattern.star(1), TRI)


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(max_nodes=0)
    with pytest.raises(ValueError):
        SearchBudget(max_time=-1.0)
    SearchBudget()  # unlimited is fine


def test_node_budget_is_exact_and_job_independent():
    for jobs in (1, 2):
        with pytest.raises(BudgetExhausted) as exc:
            search_two_color(7, SP4, SP4, budget=SearchBudget(max_nodes=100), jobs=jobs)
        assert exc.value.reason == "nodes"
        assert exc.value.nodes == 100


def test_generous_node_budget_completes():
    out = search_two_color(7, SP4, SP4, budget=SearchBudget(max_nodes=10**6))
    assert out.verdict == "exhausted"
    assert out.nodes == 539


def test_time_budget_reports():
    sp6 = Pattern.star_plus(6)
    with pytest.raises(BudgetExhausted) as exc:
        ramsey_number(sp6, sp6, n_max=12, budget=SearchBudget(max_time=0.25))
    assert exc.value.reason == "time"
    assert exc.value.nodes > 0


def test_split_depth_does_not_change_answers():
    # the witness and verdict never depend on the work-splitting depth; node
    # counters do on witness runs (deeper splits enumerate more prefixes
    # before the first-hit scan), so counters are pinned only when exhausted
    baseline = search_two_color(6, SP4, SP4)
    for depth in (1, 2, 3, 8, 15):
        out = search_two_color(6, SP4, SP4, split_depth=depth)
        assert out.verdict == "witness"
        assert encode(out.witness) == encode(baseline.witness)
    exhausted = search_two_color(7, SP4, SP4)
    for depth in (1, 4, 21):
        out = search_two_color(7, SP4, SP4, split_depth=depth)
        assert (out.verdict, out.nodes, out.prunes) == ("exhausted", exhausted.nodes, exhausted.prunes)


def test_jobs_do_not_change_outcome():
    solo = search_two_color(7, SP4, SP4, jobs=1)
    multi = search_two_color(7, SP4, SP4, jobs=4)
    assert (solo.verdict, solo.nodes, solo.prunes) == (multi.verdict, multi.nodes, multi.prunes)
    ws = search_two_color(6, SP4, SP4, jobs=1)
    wm = search_two_color(6, SP4, SP4, jobs=3)
    assert encode(ws.witness) == encode(wm.witness)
    assert (ws.nodes, ws.prunes) == (wm.nodes, wm.prunes)


def test_asymmetric_targets_search_both_color_orders():
    # swapping asymmetric targets must keep the verdict at each order
    a = ramsey_number(TRI, SP4, n_max=9)
    b = ramsey_number(SP4, TRI, n_max=9)
    assert a.value == b.value


def test_ramsey_triangle_certificate():
    cert = ramsey_number(TRI, TRI, n_max=7)
    assert cert.value == 6
    assert cert.witness.n == 5
    for v in range(5):
        for c in (1, 2):
            assert cert.witness.degree_in_color(v, c) == 2
    assert cert.witness_outcome is not None
    assert cert.witness_outcome.verdict == "witness"
    assert cert.exhausted_outcome.verdict == "exhausted"


def test_ramsey_star_plus_and_path_plus():
    for p in (SP4, PP4):
        cert = ramsey_number(p, p, n_max=8)
        assert cert.value == 7
        assert cert.witness.n == 6
        assert contains_pattern(cert.witness, p, 1) is None
        assert contains_pattern(cert.witness, p, 2) is None


def test_ramsey_trivial_target():
    p2 = Pattern.path(2)
    cert = ramsey_number(p2, p2, n_max=4)
    assert cert.value == 2
    assert cert.witness.n == 1


def test_ramsey_not_found_below_cap():
    with pytest.raises(NotFoundBelowCap):
        ramsey_number(TRI, TRI, n_max=5)
    with pytest.raises(ValueError):
        ramsey_number(TRI, TRI, n_max=1)


def test_verify_paper_claims_match():
    report = verify_paper_claims(4, "star-plus")
    assert report.value == 7 and report.expected == 7
    assert report.matches and report.divergence is None
    d = report.to_json_dict()
    assert d["value"] == 7 and d["witness_order"] == 6
    assert "divergence" not in d


def test_verify_paper_claims_divergence_at_three():
    report = verify_paper_claims(3, "path-plus")
    assert report.value == 6 and report.expected == 5
    assert not report.matches
    assert report.divergence is not None
    assert "divergence" in report.to_json_dict()


def test_verify_paper_claims_validation():
    with pytest.raises(ValueError):
        verify_paper_claims(2, "star-plus")
    with pytest.raises(ValueError):
        verify_paper_claims(4, "clique")
