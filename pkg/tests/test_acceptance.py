"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion lines.
"""

import csv
import subprocess
import sys

import numpy as np

from bnspect import (LinearBn, WeightedDag, check_assumption1, model_digest,
                     parse_model, random_bounded_indegree_bn, random_erdos_bn,
                     random_forest_bn, rayleigh_quotient, sample_data,
                     empirical_normalized_precision, serialize_model,
                     symmetric_eigenvalues, symmetry_about, verify_theorem1)
from bnspect.cli import main

from conftest import has_odd_cycle_bruteforce
from test_hypergraph import random_hypergraph
from test_spectral import charpoly_eigenvalues_3x3


def report(name, ok):
    print(f"[{name}] {'PASS' if ok else 'FAIL'}")
    assert ok, name


def collider_bn():
    dag = WeightedDag(["v1", "v2", "v3"], {(0, 2): 1.0, (1, 2): 1.0})
    return LinearBn(dag, [1.0, 1.0, 1.0])


def chain_bn():
    return LinearBn(WeightedDag(["v1", "v2"], {(0, 1): 2.0}), [1.0, 1.0])


def test_criterion_1_theorem1_identity():
    worst_prec = worst_omega = 0.0
    for seed in range(1000):
        n = 2 + seed % 11  # n in 2..12
        bn = random_erdos_bn(n=n, edge_prob=0.4, seed=seed)
        r = verify_theorem1(bn, 1e-9)
        worst_prec = max(worst_prec, r.precision_residual / r.precision_scale)
        worst_omega = max(worst_omega, r.omega_residual)
    report("criterion 1: theorem 1 identity over 1000 BNs",
           worst_prec <= 1e-9 and worst_omega <= 1e-9)


def forest_corpus():
    for seed in range(1000):
        yield random_forest_bn(n=2 + seed % 19, seed=seed)


def test_criterion_2_lambda_bound():
    ok = True
    for bn in forest_corpus():
        omega = bn.precision().normalized_precision
        ok &= symmetric_eigenvalues(omega).largest <= 2 + 1e-9
    collider_lam1 = symmetric_eigenvalues(
        collider_bn().precision().normalized_precision).largest
    ok &= abs(collider_lam1 - (5 + np.sqrt(17)) / 4) <= 1e-9
    ok &= collider_lam1 > 2
    report("criterion 2: theorem 2 bound on forest corpus + collider", ok)


def test_criterion_3_symmetry_and_similarity():
    ok = True
    for bn in forest_corpus():
        omega = bn.precision().normalized_precision
        symmetric, _ = symmetry_about(symmetric_eigenvalues(omega), 1.0, 1e-8)
        ok &= symmetric
        parts = bn.dag.moralize().is_bipartite()
        ok &= parts is not None
        d = np.where(np.isin(np.arange(bn.num_vertices), list(parts[0])), 1.0, -1.0)
        c = bn.structural_hypergraph().normalized_adjacency()
        ok &= np.abs(d[:, None] * c * d[None, :] + c).max() <= 1e-12
    report("criterion 3: theorem 3(a) symmetry + sign-flip similarity", ok)


def test_criterion_4_symmetry_converse():
    ok = True
    for seed in range(1000):
        n = 3 + seed % 10
        attempt = 0
        while True:
            bn = random_bounded_indegree_bn(n=n, k=3, seed=seed * 1000 + attempt)
            if bn.dag.max_indegree() >= 2:
                break
            attempt += 1
        omega = bn.precision().normalized_precision
        _, residual = symmetry_about(symmetric_eigenvalues(omega), 1.0, 1e-8)
        ok &= residual > 1e-6
    report("criterion 4: theorem 3(b) converse fails symmetry on all trials", ok)


def test_criterion_5_laplacian_bound_and_rayleigh():
    ok = True
    rng = np.random.default_rng(2024)
    for seed in range(1000):
        h = random_hypergraph(seed, ensure_positive_magnitudes=True)
        ell = h.normalized_laplacian()
        lam1 = symmetric_eigenvalues(ell).largest
        ok &= lam1 <= h.stats().max_edge_size + 1e-9
        xs = rng.standard_normal((100, h.num_vertices))
        for x in xs:
            direct = (x @ ell @ x) / (x @ x)
            ok &= abs(rayleigh_quotient(h, x) - direct) <= 1e-10
    report("criterion 5: normalized Laplacian bound + Rayleigh edge-sum", ok)


def test_criterion_6_zero_pattern_and_bipartite():
    ok = True
    checked = 0
    for seed in range(2000):
        if checked >= 500:
            break
        bn = random_erdos_bn(n=2 + seed % 9, edge_prob=0.45, seed=seed)
        if check_assumption1(bn, 1e-9):
            continue  # unfaithful instance: the equivalence is not claimed
        checked += 1
        c = bn.structural_hypergraph().normalized_adjacency()
        moral = bn.dag.moralize().adjacency
        off = ~np.eye(bn.num_vertices, dtype=bool)
        ok &= np.array_equal((np.abs(c) <= 1e-12)[off], (moral == 0)[off])
    ok &= checked >= 500
    for seed in range(1000):
        moral = random_erdos_bn(n=2 + seed % 8, edge_prob=0.3,
                                seed=seed + 5000).dag.moralize()
        bipartite = moral.is_bipartite() is not None
        ok &= bipartite == (not has_odd_cycle_bruteforce(moral.adjacency))
        ok &= moral.is_forest() == bipartite
    report("criterion 6: C zero pattern = moral adjacency; forest iff bipartite", ok)


def test_criterion_7_worked_example_goldens():
    ok = True
    chain = chain_bn()
    pair = chain.precision()
    ok &= np.abs(pair.precision - [[5.0, -2.0], [-2.0, 1.0]]).max() <= 1e-9
    r = 2 / np.sqrt(5)
    ok &= np.allclose(symmetric_eigenvalues(pair.normalized_precision).eigenvalues,
                      [1 + r, 1 - r], atol=1e-9)
    collider = collider_bn()
    pair = collider.precision()
    ok &= np.abs(pair.precision -
                 [[2.0, 1.0, -1.0], [1.0, 2.0, -1.0], [-1.0, -1.0, 1.0]]).max() <= 1e-9
    spec = symmetric_eigenvalues(pair.normalized_precision)
    expected = [(5 + np.sqrt(17)) / 4, 0.5, (5 - np.sqrt(17)) / 4]
    ok &= np.allclose(spec.eigenvalues, expected, atol=1e-9)
    # independent re-derivation through the characteristic polynomial
    ok &= np.allclose(charpoly_eigenvalues_3x3(pair.normalized_precision),
                      expected, atol=1e-9)
    c = collider.structural_hypergraph().normalized_adjacency()
    ok &= abs(np.trace(np.linalg.matrix_power(c, 3)) - (-1.5)) <= 1e-9
    report("criterion 7: chain and collider goldens", ok)


def test_criterion_8_empirical_consistency():
    chain = chain_bn()
    omega = chain.precision().normalized_precision
    lam1 = symmetric_eigenvalues(omega).largest
    hits = 0
    for seed in range(100):
        data = sample_data(chain, 100000, seed=seed)
        omega_hat = empirical_normalized_precision(data)
        lam1_hat = symmetric_eigenvalues(omega_hat).largest
        hits += (np.abs(omega_hat - omega).max() <= 0.05
                 and abs(lam1_hat - lam1) <= 0.05)
    report(f"criterion 8: empirical consistency ({hits}/100 seeds)", hits >= 95)


def test_criterion_9_roundtrip_and_exit_codes(tmp_path):
    ok = True
    for seed in range(1000):
        bn = random_erdos_bn(n=1 + seed % 12, edge_prob=0.4, seed=seed)
        parsed = parse_model(serialize_model(bn))
        ok &= parsed.dag == bn.dag and np.array_equal(parsed.sigma, bn.sigma)
        ok &= model_digest(parsed) == model_digest(bn)

    model = tmp_path / "m.json"
    ok &= main(["gen", "forest", "--n", "8", "--seed", "0",
                "--out", str(model)]) == 0
    ok &= main(["analyze", str(model), "--out", str(tmp_path / "r.json")]) == 0
    collider = tmp_path / "collider.json"
    collider.write_text(serialize_model(collider_bn()))
    # verdict failures are data, not errors
    ok &= main(["analyze", str(collider), "--out", str(tmp_path / "r2.json")]) == 0
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    ok &= main(["analyze", str(bad)]) == 2
    ok &= main(["gen", "forest", "--n", "3", "--seed", "0",
                "--out", "/no-such-dir/x.json"]) == 1
    ok &= main(["verify", str(model), "--theorem", "3", "--tol", "1e-300"]) == 3
    tiny = tmp_path / "tiny.csv"
    tiny.write_text("a,b\n1.0,2.0\n2.0,1.0\n")
    ok &= main(["estimate", str(tiny)]) == 2
    proc = subprocess.run([sys.executable, "-m", "bnspect.cli", "gen", "badkind",
                           "--n", "3"], capture_output=True)
    ok &= proc.returncode == 2
    report("criterion 9: lossless round-trips + exit-code contract", ok)
