"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; every expected value is exact (no tolerances), with brute-force
oracles providing the ground truth.
"""

from __future__ import annotations

import time

from qt2ec import (
    Colourability,
    classify_colourability,
    compute_classes,
    count_colourings,
    count_homogeneous_witness_classes,
    orientability,
    partial_orientation,
    theorem_sweep,
)
from qt2ec.families import complete, cycle, figure_graph, threshold_alternating
from qt2ec.oracle import (
    SweepConfig,
    brute_force_colouring_count,
    brute_force_orientation_count,
    enumerate_labeled_graphs,
    sample_connected_graphs,
    subset_witness_count,
)

CORPUS_MAX_N = 5
SAMPLE_SEED = 20260810


def _corpus():
    for n in range(1, CORPUS_MAX_N + 1):
        yield from enumerate_labeled_graphs(n, connected_only=True)


def _verdict(number: int, title: str) -> None:
    print(f"ACCEPTANCE {number} ({title}): PASS")


def test_criterion_1_colouring_counting_theorem():
    started = time.perf_counter()
    graphs = 0
    for g in _corpus():
        assert brute_force_colouring_count(g) == 1 << compute_classes(g).k
        graphs += 1
    elapsed = time.perf_counter() - started
    assert graphs == 1 + 1 + 4 + 38 + 728
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    _verdict(1, "colouring counting theorem, n<=5 corpus")


def test_criterion_2_orientation_counting_theorem():
    started = time.perf_counter()
    for g in _corpus():
        assert brute_force_orientation_count(g) == orientability(g).count
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"took {elapsed:.1f}s"
    _verdict(2, "orientation counting theorem, n<=5 corpus")


def test_criterion_3_threshold_family():
    for n in range(2, 17, 2):
        assert compute_classes(threshold_alternating(n)).k == n // 2
    _verdict(3, "threshold family has n/2 classes")


def test_criterion_4_figure_fixtures():
    assert compute_classes(figure_graph("k4_minus_e")).k == 3

    fig_right = figure_graph("fig1_right")
    assert classify_colourability(fig_right).kind is Colourability.TRIVIAL_ONLY
    assert count_colourings(fig_right) == 2

    gamma = partial_orientation(figure_graph("fig1_left"), (0, 1))
    assert sorted(gamma.arcs()) == sorted(
        [(0, 1), (2, 1), (5, 1), (0, 3), (2, 3), (5, 3)]
    )
    _verdict(4, "figure fixtures")


def test_criterion_5_named_instances():
    c5 = cycle(5)
    assert compute_classes(c5).k == 1
    assert brute_force_colouring_count(c5) == count_colourings(c5) == 2
    assert brute_force_orientation_count(c5) == orientability(c5).count == 0

    c4 = cycle(4)
    assert compute_classes(c4).k == 1
    assert brute_force_orientation_count(c4) == orientability(c4).count == 2

    for n in range(1, 8):
        p = compute_classes(complete(n))
        assert p.k == n * (n - 1) // 2
        assert all(len(c) == 1 for c in p.classes)
    _verdict(5, "named instances C5/C4/K_n")


def test_criterion_6_theorem_property_suite():
    started = time.perf_counter()
    report = theorem_sweep(SweepConfig(max_n=5))
    elapsed = time.perf_counter() - started
    assert report.passed, report.failures()[:5]
    assert report.meta["graphs"] == 1 + 1 + 4 + 38 + 728
    assert elapsed < 60.0, f"took {elapsed:.1f}s"
    _verdict(6, "theorem sweep n<=5, zero failures")


def test_criterion_7_unique_witness_agreement():
    disagreements = []
    for n, count in ((6, 250), (7, 250)):
        for g in sample_connected_graphs(n, count, seed=SAMPLE_SEED):
            subset_unique = subset_witness_count(g) == 1
            class_unique = count_homogeneous_witness_classes(g) == 1
            if subset_unique != class_unique:
                disagreements.append(g)
    assert not disagreements
    _verdict(7, "unique-witness agreement on 500 sampled graphs, n in {6,7}")


def test_criterion_8_gamma_reversal():
    for g in _corpus():
        feas = orientability(g)
        p = feas.partition
        for u, v in g.edges:
            cid = p.class_of_pair(u, v)
            if not feas.class_consistent(cid):
                continue
            forward = partial_orientation(g, (u, v))
            backward = partial_orientation(g, (v, u))
            assert set(forward.domain) == set(p.classes[cid])
            assert backward.domain == forward.domain
            assert backward == forward.reversed()
    _verdict(8, "partial-orientation reversal pairs, n<=5 corpus")
