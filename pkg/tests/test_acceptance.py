"""Acceptance criteria 1-11.

Each test gathers every sub-check before asserting so that the recorded
PASS/FAIL line lists all mismatches, not just the first.
"""

import math
import random
import time

import oracles
from scramblekit import divisors as D
from scramblekit import families as F
from scramblekit import scrambles as S
from scramblekit.errors import BadParam
from scramblekit.multigraph import canonical_form, contract_edge, subdivide_edge
from scramblekit.treewidth import treewidth, treewidth_dp


def _finish(record, number, failures, summary):
    ok = not failures
    detail = summary if ok else summary + " | " + "; ".join(failures)
    record(number, ok, detail)
    assert ok, detail


def test_criterion_01_grid_gonality(record_criterion):
    failures = []
    start = time.perf_counter()
    for m in range(1, 5):
        for n in range(1, 5):
            g = F.grid(m, n)
            if g.n == 1:
                # single-vertex graphs are outside the invariant operations
                try:
                    D.gonality(g)
                    failures.append("G_1,1 was not rejected")
                except BadParam:
                    pass
                continue
            got = D.gonality(g).gonality
            if got != min(m, n):
                failures.append(f"G_{m},{n}: gon {got} != {min(m, n)}")
    elapsed = time.perf_counter() - start
    if elapsed > 60:
        failures.append(f"took {elapsed:.1f}s > 60s")
    _finish(record_criterion, 1, failures,
            f"gon(G_m,n) = min(m,n) for 15 grids, G_1,1 rejected as a point, {elapsed:.2f}s")


def test_criterion_02_stacked_prisms(record_criterion):
    failures = []
    for m, n in [(3, 2), (4, 2), (5, 2), (4, 3), (6, 3)]:
        g = F.stacked_prism(m, n)
        want = min(m, 2 * n)
        gon = D.gonality(g).gonality
        order = S.scramble_order(S.columns_scramble(g)).order
        if (gon, order) != (want, want):
            failures.append(f"Y_{m},{n}: gon {gon}, columns order {order}, expected {want}")
    y42 = F.stacked_prism(4, 2)
    tw = treewidth(y42).width
    if tw != 3:
        failures.append(f"tw(Y_4,2) = {tw}")
    if not tw < S.scramble_order(S.columns_scramble(y42)).order:
        failures.append("tw(Y_4,2) is not below its columns order")
    _finish(record_criterion, 2, failures, "gon = columns order = min(m,2n) on 5 prisms; tw(Y_4,2) = 3 < 4")


def test_criterion_03_tori(record_criterion):
    failures = []
    for m, n in [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4)]:
        g = F.torus(m, n)
        want = min(2 * m, 2 * n)
        gon = D.gonality(g).gonality
        order = S.scramble_order(S.punctured_columns_scramble(g)).order
        if (gon, order) != (want, want):
            failures.append(f"T_{m},{n}: gon {gon}, punctured order {order}, expected {want}")
    _finish(record_criterion, 3, failures, "gon = punctured-columns order = min(2m,2n) on 5 tori")


def test_criterion_04_figure_pipeline(record_criterion):
    failures = []
    g1 = F.fig1_graph()
    res = D.gonality(g1)
    if res.gonality != 3 or res.witness != D.point(g1, F.FIG1_V, 3):
        failures.append(f"gon(fig1) = {res.gonality} with witness {res.witness}")
    tw = treewidth_dp(g1)
    if tw != 3:
        failures.append(f"tw(fig1) = {tw}")
    sn = S.sn_exact(g1, vertex_cap=8).value
    if not tw <= sn <= res.gonality == 3 or sn != 3:
        failures.append(f"sn(fig1) = {sn}")
    wheel, _ = contract_edge(g1, *F.FIG1_E)
    if canonical_form(wheel) != canonical_form(F.fig2_wheel()):
        failures.append("contracting e does not give the wheel")
    order = S.scramble_order(S.fig2_scramble()).order
    if order != 4:
        failures.append(f"fig2 scramble order {order}")
    if not order > sn:
        failures.append("minor did not raise the scramble number")
    _finish(record_criterion, 4, failures,
            f"gon(fig1)=3 via 3v, tw=3, sn=3, contraction -> wheel, fig2 order {order} > 3")


def test_criterion_05_plied_paths(record_criterion):
    failures = []
    for k in (2, 3, 4):
        g = F.plied_path(k)
        tw = treewidth(g).width
        order = S.scramble_order(S.singleton_scramble(g)).order
        gon = D.gonality(g).gonality
        if (tw, order, gon) != (1, k, k):
            failures.append(f"k={k}: tw {tw}, singleton order {order}, gon {gon}")
    _finish(record_criterion, 5, failures, "tw = 1, singleton order = gon = k for k = 2,3,4")


def test_criterion_06_chains_of_loops(record_criterion):
    failures = []
    seen = []
    for k in (2, 3, 4, 5):
        g = F.chain_of_loops(k)
        gon = D.gonality(g).gonality
        tw = treewidth(g, vertex_cap=g.n).width
        sn = S.sn_exact(g, vertex_cap=g.n).value
        want = math.ceil((k + 2) / 2)
        seen.append(f"k={k}: gon {gon} tw {tw} sn {sn}")
        if gon != want:
            failures.append(f"k={k}: gon {gon} != ceil((k+2)/2) = {want}")
        if tw != 2:
            failures.append(f"k={k}: tw {tw}")
        if sn != 2:
            failures.append(f"k={k}: sn {sn}")
        if k >= 3 and not gon > sn:
            failures.append(f"k={k}: no gap, gon {gon} = sn {sn}")
    _finish(record_criterion, 6, failures, ", ".join(seen))


def test_criterion_07_figure4(record_criterion):
    failures = []
    left, right = F.fig4_left(), F.fig4_right()
    gl, gr = D.gonality(left).gonality, D.gonality(right).gonality
    if (gl, gr) != (2, 3):
        failures.append(f"gon left {gl}, right {gr}")
    rng = random.Random(7)
    v, w = F.FIG4_SUBDIVIDED
    tested = [S.singleton_scramble(left), S.whole_scramble(left)]
    while len(tested) < 200:
        eggs = []
        for _ in range(rng.randint(1, 6)):
            egg = {rng.randrange(left.n)}
            for _ in range(rng.randint(0, 3)):
                egg.add(rng.choice([x for x, _ in left.neighbors(rng.choice(sorted(egg)))]))
            eggs.append(egg)
        tested.append(S.Scramble(left, eggs))
    changed = 0
    for s in tested:
        for a, b in ((v, w), (w, v)):
            moved = S.subdivision_transport(s, subdivide_edge(left, a, b), a, b)
            if S.scramble_order(moved).order != S.scramble_order(s).order:
                changed += 1
    if changed:
        failures.append(f"{changed} transports changed the order")
    _finish(record_criterion, 7, failures,
            f"gon left 2, right 3; order kept by all {2 * len(tested)} subdivision transports")


def test_criterion_08_exact_sn_oracle_suite(record_criterion):
    failures = []
    corpus = list(oracles.small_multigraphs(4, 3))
    rng = random.Random(8)
    seeded = [
        F.random_connected_multigraph(rng.choice([5, 6]), rng.choice([0.4, 0.6]), rng.randint(1, 3), seed=s)
        for s in range(50)
    ]
    violations = 0
    for g in corpus + seeded:
        tw, sn, gon = treewidth(g).width, S.sn_exact(g).value, D.gonality(g).gonality
        if not tw <= sn <= gon:
            violations += 1
            failures.append(f"sandwich fails: tw {tw} sn {sn} gon {gon} on {g!r}")
    trees = [F.random_tree(n, seed) for n in range(2, 7) for seed in range(10)]
    trees += [g for g in corpus if g.betti_number() == 0]
    bad_trees = sum(S.sn_exact(t).value != 1 for t in trees)
    cycles = [F.cycle(n) for n in range(2, 7)]
    bad_cycles = sum(S.sn_exact(c).value != 2 for c in cycles)
    if bad_trees or bad_cycles:
        failures.append(f"{bad_trees} trees and {bad_cycles} cycles off")
    small = [g for g in corpus + seeded if g.n <= 5]
    subdivisions = 0
    for g in small:
        base = S.sn_exact(g).value
        for u, x, _ in g.edges():
            subdivisions += 1
            if S.sn_exact(subdivide_edge(g, u, x)).value != base:
                failures.append(f"subdividing ({u},{x}) changes sn of {g!r}")
    _finish(record_criterion, 8, failures,
            f"{len(corpus)} iso classes n<=4 (mult<=3) + {len(seeded)} seeded n=5,6: {violations} violations; "
            f"{len(trees)} trees sn=1, {len(cycles)} cycles sn=2; {subdivisions} subdivisions on n<=5 keep sn")


def test_criterion_09_cut_and_hitting_oracles(record_criterion):
    rng = random.Random(9)
    cut_bad = hit_bad = 0
    for seed in range(200):
        n = rng.randint(2, 6)
        g = F.random_connected_multigraph(n, 0.5, 3, seed=seed)
        eggs = []
        for _ in range(rng.randint(1, 7)):
            egg = {rng.randrange(n)}
            for _ in range(rng.randint(0, n - 1)):
                egg.add(rng.choice([x for x, _ in g.neighbors(rng.choice(sorted(egg)))]))
            eggs.append(egg)
        s = S.Scramble(g, eggs)
        if S.cut_number(s)[0] != oracles.brute_cut_number(g, s.eggs):
            cut_bad += 1
        if S.hitting_number(s)[0] != oracles.brute_hitting_number(n, s.eggs):
            hit_bad += 1
    failures = [f"{cut_bad} cut mismatches, {hit_bad} hitting mismatches"] if cut_bad or hit_bad else []
    _finish(record_criterion, 9, failures, "200 seeded pairs: 0 cut and 0 hitting mismatches")


def _divisor_corpus():
    graphs = list(oracles.small_multigraphs(4, 2))
    graphs += [g for g in oracles.small_multigraphs(5, 1) if g.n == 5]
    return graphs


def test_criterion_10_divisor_oracles(record_criterion):
    graphs = _divisor_corpus()
    reduced_bad = replay_bad = unique_bad = checks = 0
    for g in graphs:
        for deg in range(4):
            for d in oracles.effective_divisors(g.n, deg):
                cls = oracles.effective_class(g, d)
                for v in range(g.n):
                    checks += 1
                    if D.is_reduced(g, d, v) != oracles.definitionally_reduced(g, d, v):
                        reduced_bad += 1
                    red, script = D.reduce(g, d, v)
                    if D.replay(g, d, script) != red:
                        replay_bad += 1
                    for other in cls:
                        if D.reduce(g, other, v)[0] != red:
                            unique_bad += 1
    failures = []
    if reduced_bad or replay_bad or unique_bad:
        failures.append(f"burning {reduced_bad}, replay {replay_bad}, uniqueness {unique_bad}")
    _finish(record_criterion, 10, failures,
            f"{len(graphs)} graphs (n<=4 mult<=2, all simple n=5), {checks} divisor/vertex checks: 0 mismatches")


def _grow_bramble(g, rng, strict):
    eggs = []
    for _ in range(40):
        egg = {rng.randrange(g.n)}
        for _ in range(rng.randint(0, g.n // 2)):
            egg.add(rng.choice([x for x, _ in g.neighbors(rng.choice(sorted(egg)))]))
        if strict:
            ok = all(egg & e for e in eggs)
        else:
            ok = all(oracles.is_connected(g, egg | e) for e in eggs)
        if ok and egg not in eggs:
            eggs.append(egg)
    return S.Scramble(g, eggs)


def test_criterion_11_bramble_lemmas(record_criterion):
    rng = random.Random(11)
    violations = []
    strict_count = loose_count = non_strict = 0
    for i in range(100):
        g = F.random_connected_multigraph(rng.randint(3, 7), 0.5, rng.randint(1, 2), seed=1000 + i)
        strict = i % 2 == 0
        b = _grow_bramble(g, rng, strict)
        cert = S.scramble_order(b)
        h = oracles.brute_hitting_number(g.n, b.eggs)
        if strict:
            strict_count += 1
            if not S.is_strict_bramble(b) or cert.order != h:
                violations.append(f"strict bramble #{i}: order {cert.order}, hitting {h}")
        else:
            loose_count += 1
            non_strict += not S.is_strict_bramble(b)
            if not S.is_bramble(b) or cert.order not in (h - 1, h):
                violations.append(f"bramble #{i}: order {cert.order}, hitting {h}")
    _finish(record_criterion, 11, violations,
            f"{strict_count} strict brambles order = h; {loose_count} brambles "
            f"({non_strict} not strict) order in {{h-1, h}}")
