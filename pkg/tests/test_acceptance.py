"""Acceptance suite.

Each test covers one acceptance criterion, asserts it at full strictness
(integer-exact tables, zero tolerated disagreements) and prints one
PASS line with the measured runtime.  The equivalence sweeps run over all
graphs with up to six vertices and all independent nonprobe sets, one
representative per isomorphism class (all verdicts are invariant under
relabeling, which is itself spot-checked here).
"""

import json
import random
import time
from dataclasses import dataclass

import pytest

from probeint import (
    FerrersFactorization,
    bigraph_oracle,
    interval_iff_dim2,
    interval_oracle,
    is_interval_bigraph,
    is_interval_graph,
    probe_bigraph,
    probe_dim3_decomposition,
    probe_oracle,
    recognize_char1,
    recognize_char2,
    recognize_qxl,
    symmetric_bigraph,
    verify_bigraph_rep,
)
from probeint.bigraphs import BigraphIntervals
from probeint.cli import dispatch
from probeint.io import matrix_to_text
from probeint.matrices import from_zero_one
from probeint.sweeps import (
    graph_class_representatives,
    independent_set_orbits,
    matrix_class_representatives,
)
from tests.test_cli import A_MATRIX, C4_EDGELIST, NET_JSON


def report(name: str, detail: str, elapsed: float) -> None:
    print(f"PASS {name}: {detail} ({elapsed:.2f}s)")


# ---------------------------------------------------------------------------
# criterion 1: exact reproduction of the worked 3x5 example


def test_criterion_1_representation_tables(tmp_path, capsys):
    start = time.perf_counter()
    src = tmp_path / "a.txt"
    src.write_text(A_MATRIX)
    assert dispatch(["represent", str(src), "--output", "json"]) == 0
    data = json.loads(capsys.readouterr().out)

    diag_rows = data["diagonalized"][1:]
    row_labels = [line.split()[0] for line in diag_rows]
    col_labels = data["diagonalized"][0].split()
    assert [row_labels[0], row_labels[3], row_labels[4]] == ["y1", "y2", "y3"]
    assert [col_labels[j] for j in (0, 1, 2, 3, 5)] == ["x1", "x2", "x3", "x4", "x5"]

    row_table = [data["diag_row_intervals"][r] for r in row_labels]
    col_table = [data["diag_col_intervals"][c] for c in col_labels]
    assert row_table == [[1, 3], [2, 6], [3, 6], [4, 5], [5, 5], [6, 6]]
    assert col_table == [[1, 4], [2, 3], [3, 3], [4, 6], [5, 6], [6, 6]]

    assert data["row_intervals"] == {"y1": [1, 3], "y2": [4, 5], "y3": [5, 5]}
    assert data["col_intervals"] == {
        "x1": [1, 4],
        "x2": [2, 3],
        "x3": [3, 3],
        "x4": [4, 6],
        "x5": [6, 6],
    }
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report("criterion 1", "worked example diagonalization and interval tables", elapsed)


# ---------------------------------------------------------------------------
# criterion 2: the six-vertex trichotomy instance


def test_criterion_2_net_trichotomy(tmp_path, capsys, net, net_bef):
    start = time.perf_counter()
    b = tmp_path / "b.txt"
    b.write_text(matrix_to_text(probe_bigraph(net)))
    assert dispatch(["bigraph", str(b)]) == 0

    ef = tmp_path / "net.json"
    ef.write_text(NET_JSON)
    assert dispatch(["probe", str(ef), "--route", "all"]) == 1

    bef = tmp_path / "net_bef.json"
    data = json.loads(NET_JSON)
    data["nonprobes"] = ["b", "e", "f"]
    bef.write_text(json.dumps(data))
    capsys.readouterr()  # drop output of the earlier commands
    assert dispatch(["probe", str(bef), "--route", "all", "--output", "json"]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["verdict"] == "yes"
    from probeint.probes import verify_probe_rep

    intervals = {v: tuple(lr) for v, lr in cert["intervals"].items()}
    assert verify_probe_rep(net_bef, intervals)

    g_plain = tmp_path / "g.json"
    data = json.loads(NET_JSON)
    del data["nonprobes"]
    g_plain.write_text(json.dumps(data))
    assert dispatch(["interval", str(g_plain)]) == 1

    g_ef = tmp_path / "gef.json"
    data = json.loads(NET_JSON)
    data["edges"].append(["e", "f"])
    del data["nonprobes"]
    g_ef.write_text(json.dumps(data))
    assert dispatch(["interval", str(g_ef)]) == 1

    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    report("criterion 2", "bigraph yes, probe no/yes by nonprobe set, interval no", elapsed)


# ---------------------------------------------------------------------------
# criterion 3: C4 and K222


def test_criterion_3_c4_and_k222(tmp_path, capsys, k222):
    start = time.perf_counter()
    c4 = tmp_path / "c4.txt"
    c4.write_text(C4_EDGELIST)
    assert dispatch(["interval", str(c4)]) == 1

    c4p = tmp_path / "c4p.json"
    c4p.write_text(
        json.dumps(
            {
                "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
                "nonprobes": ["b", "d"],
            }
        )
    )
    assert dispatch(["probe", str(c4p), "--route", "all"]) == 0

    from probeint.io import serialize_graph

    k = tmp_path / "k222.json"
    k.write_text(serialize_graph(k222))
    assert dispatch(["split-check", str(k)]) == 1

    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    report("criterion 3", "C4 interval no / probe yes; K222 split no", elapsed)


# ---------------------------------------------------------------------------
# criterion 4: representation algorithm realizes every zero-partition matrix


def test_criterion_4_representation_property_suite():
    start = time.perf_counter()
    checked = 0
    # exhaustive raw matrices through 3x3: every single one
    for nr in range(1, 4):
        for nc in range(1, 4):
            for mask in range(1 << (nr * nc)):
                m = from_zero_one(
                    [
                        [(mask >> (i * nc + j)) & 1 for j in range(nc)]
                        for i in range(nr)
                    ]
                )
                cert = is_interval_bigraph(m)
                if cert.verdict:
                    checked += 1
                    iv = BigraphIntervals(
                        rows=cert.row_intervals, cols=cert.col_intervals
                    )
                    assert verify_bigraph_rep(m, iv)
    # all remaining shapes through 4x4, one representative per class
    for nr in range(1, 5):
        for nc in range(1, 5):
            if nr <= 3 and nc <= 3:
                continue
            for m in matrix_class_representatives(nr, nc):
                cert = is_interval_bigraph(m)
                if cert.verdict:
                    checked += 1
                    iv = BigraphIntervals(
                        rows=cert.row_intervals, cols=cert.col_intervals
                    )
                    assert verify_bigraph_rep(m, iv)
    # 200 random 6x6 successes
    rng = random.Random(20260809)
    successes = 0
    while successes < 200:
        rows = [_rand_interval(rng) for _ in range(6)]
        cols = [_rand_interval(rng) for _ in range(6)]
        data = [
            [1 if max(rl, cl) <= min(rr, cr) else 0 for (cl, cr) in cols]
            for (rl, rr) in rows
        ]
        m = from_zero_one(data)
        cert = is_interval_bigraph(m)
        assert cert.verdict
        iv = BigraphIntervals(rows=cert.row_intervals, cols=cert.col_intervals)
        assert verify_bigraph_rep(m, iv)
        successes += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 120.0
    report(
        "criterion 4",
        f"{checked} exhaustive + {successes} random 6x6 representations verified",
        elapsed,
    )


def _rand_interval(rng):
    l = rng.randint(1, 9)
    return l, l + rng.randint(0, 5)


# ---------------------------------------------------------------------------
# criteria 5-7 share one sweep over all classes with n <= 6


@dataclass
class SweepRecord:
    graph: object
    verdict: bool
    qxl_cert: object
    char1_cert: object


@pytest.fixture(scope="module")
def sweep():
    start = time.perf_counter()
    records = []
    interval_disagreements = 0
    probe_disagreements = 0
    for n in range(1, 7):
        for g in graph_class_representatives(n):
            expected = interval_oracle(g)
            if is_interval_graph(g).verdict != expected:
                interval_disagreements += 1
            if interval_iff_dim2(g).verdict != expected:
                interval_disagreements += 1
            for nonprobes in independent_set_orbits(g):
                inst = g.with_nonprobes(nonprobes)
                oracle = probe_oracle(inst)
                qxl = recognize_qxl(inst)
                char1 = recognize_char1(inst)
                char2 = recognize_char2(inst)
                if not (oracle == qxl.verdict == char1.verdict == char2.verdict):
                    probe_disagreements += 1
                records.append(SweepRecord(inst, oracle, qxl, char1))
    elapsed = time.perf_counter() - start
    return {
        "records": records,
        "interval_disagreements": interval_disagreements,
        "probe_disagreements": probe_disagreements,
        "elapsed": elapsed,
    }


def test_criterion_5_equivalence_sweep(sweep):
    assert sweep["interval_disagreements"] == 0
    assert sweep["probe_disagreements"] == 0
    assert sweep["elapsed"] < 1800.0
    # relabeling invariance spot check: permuted instances agree
    rng = random.Random(5)
    sample = rng.sample(sweep["records"], 25)
    for rec in sample:
        g = rec.graph
        perm = list(range(g.n))
        rng.shuffle(perm)
        names = tuple(f"w{k}" for k in range(g.n))
        edges = frozenset(
            (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in g.edges
        )
        relabeled = type(g)(
            n=g.n,
            vertex_names=names,
            edges=edges,
            nonprobes=frozenset(perm[v] for v in g.nonprobes),
        )
        assert recognize_qxl(relabeled).verdict == rec.verdict
    report(
        "criterion 5",
        f"{len(sweep['records'])} probe instances, all n<=6 classes, 0 disagreements",
        sweep["elapsed"],
    )


def test_criterion_6_three_factor_decomposition(sweep):
    start = time.perf_counter()
    count = 0
    for rec in sweep["records"]:
        if not rec.verdict:
            continue
        count += 1
        fact = probe_dim3_decomposition(rec.graph, rec.qxl_cert.intervals)
        assert len(fact.factors) == 3
        assert fact.validate()
        assert fact.target == symmetric_bigraph(rec.graph, probe_loops_only=True)
        pair = FerrersFactorization(
            factors=fact.factors[:2], target=fact.target
        )
        assert pair.union_complete()
    elapsed = time.perf_counter() - start
    report(
        "criterion 6", f"{count} yes-instances decomposed into 3 factors", elapsed
    )


def test_criterion_7_nonprobe_interval_sanity(sweep):
    start = time.perf_counter()
    checked = 0
    for rec in sweep["records"]:
        for cert in (rec.qxl_cert, rec.char1_cert):
            if cert.verdict:
                assert all(l <= r for l, r in cert.intervals.values())
        cert = rec.char1_cert
        if not cert.verdict or cert.labeling is None:
            continue
        labeled = cert.labeling
        intervals = cert.intervals
        probe_rows = list(labeled.rows)
        for n_ in labeled.cols:
            if n_ in set(probe_rows):
                continue
            ln, rn = intervals[n_]
            assert ln <= rn
            checked += 1
            for p in probe_rows:
                lp, rp = intervals[p]
                disjoint = max(ln, lp) > min(rn, rp)
                labeled_zero = labeled.entry(p, n_) in ("R", "C")
                assert disjoint == labeled_zero, (n_, p)
    elapsed = time.perf_counter() - start
    assert checked > 0
    report(
        "criterion 7",
        f"{checked} nonprobe intervals nonempty and disjoint exactly from "
        "their R/C rows",
        elapsed,
    )
