"""Seeded verification battery over the whole library.

Runs the theorem-level checks at desk scale and collects a deterministic
report (pure data, no timing), so two runs with the same arguments are
byte-identical when serialized.  Used by the `verify` CLI subcommand and by
the acceptance test-suite.
"""

from __future__ import annotations

import random

from . import bitsets as bs
from .combi import Combi, find_w_configs, from_w_collection, spectrum
from .contraction import enumerate_legal_paths, n_contract, n_expand
from .flips import flip_graph, lowering_flip, set_flip_graph
from .patterns import (
    CyclicPattern,
    classify_pattern,
    curve_kind,
    domains,
    graph_pattern,
    merge_repair,
    split_quasi,
    strong_domains,
    verify_complementary,
    verify_face_domains,
    verify_purity,
)
from .separation import (
    Permutation,
    SetFamily,
    chamber_domain,
    chamber_pair_domain,
    cointerval_collection,
    enumerate_maximal,
    hypercube_domain,
    hypersimplex_domain,
    interval_collection,
    inversions,
)

def _binom2(x: int) -> int:
    return x * (x - 1) // 2

def all_combis(n: int) -> list[Combi]:
    report = enumerate_maximal(hypercube_domain(n), "weak")
    return [from_w_collection(f, check_input=False) for f in report.maximal_collections]

def sample_cycle(
    edges: set[tuple[int, int]], rng: random.Random, min_len: int = 3, tries: int = 40
) -> tuple[int, ...] | None:
    """A random simple cycle in an undirected graph given by vertex-pair edges."""
    adjacency: dict[int, list[int]] = {}
    for u, v in edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    if not adjacency:
        return None
    for v in adjacency:
        adjacency[v].sort()
    verts = sorted(adjacency)
    for _ in range(tries):
        start = rng.choice(verts)
        path = [start]
        onpath = {start}
        while True:
            nbrs = adjacency[path[-1]]
            if len(path) >= min_len and start in nbrs and rng.random() < 0.5:
                return tuple(path)
            fresh = [w for w in nbrs if w not in onpath]
            if not fresh:
                if len(path) >= min_len and start in nbrs:
                    return tuple(path)
                break
            nxt = rng.choice(fresh)
            path.append(nxt)
            onpath.add(nxt)
    return None

def _combi_edge_sets(combi: Combi) -> tuple[set[tuple[int, int]], set[tuple[int, int]]]:
    vert = {tuple(e) for e in combi.vertical_edges()}
    horiz = {tuple(e) for e in combi.horizontal_edges()}
    return vert, horiz

def sample_simple_pattern(combi: Combi, rng: random.Random) -> CyclicPattern | None:
    vert, _ = _combi_edge_sets(combi)
    cyc = sample_cycle(vert, rng)
    return CyclicPattern(combi.n, cyc) if cyc else None

def sample_generalized_pattern(combi: Combi, rng: random.Random) -> CyclicPattern | None:
    vert, horiz = _combi_edge_sets(combi)
    cyc = sample_cycle(vert | horiz, rng)
    return CyclicPattern(combi.n, cyc) if cyc else None

def crossing_pattern_examples(n: int) -> list[CyclicPattern]:
    """Hand-built quadruple violators used as negative controls."""
    out = []
    if n >= 4:
        a, b, c, d = (bs.singleton(e) for e in (1, 2, 3, 4))
        out.append(CyclicPattern(n, (a, c, d, b)))
        base = bs.mask_of((1, 2, 3, 4))
        out.append(CyclicPattern(n, (base ^ a, base ^ c, base ^ d, base ^ b)))
        # 2-segment {X1, X3} against the climbing 1-segment {X, X2}
        out.append(CyclicPattern(n, (a, c, bs.mask_of((2, 3)), bs.singleton(2), 0)))
    return out

def check_hypercube_purity(max_n: int) -> dict:
    per_n = {}
    ok = True
    for n in range(3, max_n + 1):
        report = enumerate_maximal(hypercube_domain(n), "weak")
        want = n * (n + 1) // 2 + 1
        good = report.pure and report.ranks == (want,)
        ok &= good
        per_n[str(n)] = {
            "collections": len(report.maximal_collections),
            "ranks": list(report.ranks),
            "expected_rank": want,
            "pass": good,
        }
    return {"pass": ok, "detail": per_n}

def check_rank_formulas(max_n: int) -> dict:
    results = {}
    ok = True
    perms4 = [Permutation(p) for p in _permutations(4)]
    single = []
    for w in perms4:
        rep = enumerate_maximal(chamber_domain(w), "weak")
        want = len(inversions(w)) + 4 + 1
        good = rep.pure and rep.ranks == (want,)
        ok &= good
        single.append(good)
    results["chamber_n4"] = {"checked": len(single), "pass": all(single)}
    pairs = 0
    pair_ok = True
    for wp in perms4:
        for w in perms4:
            if not inversions(wp) <= inversions(w):
                continue
            rep = enumerate_maximal(chamber_pair_domain(wp, w), "weak")
            want = len(inversions(w)) - len(inversions(wp)) + 4 + 1
            pair_ok &= rep.pure and rep.ranks == (want,)
            pairs += 1
    ok &= pair_ok
    results["chamber_pairs_n4"] = {"checked": pairs, "pass": pair_ok}
    hyper_ok = True
    checked = 0
    for n in range(1, min(max_n, 6) + 1):
        for m_high in range(n + 1):
            for m_low in range(m_high + 1):
                rep = enumerate_maximal(hypersimplex_domain(n, m_low, m_high), "weak")
                want = (
                    _binom2(n + 1)
                    - _binom2(n - m_high + 1)
                    - _binom2(m_low + 1)
                    + 1
                )
                hyper_ok &= rep.pure and rep.ranks == (want,)
                checked += 1
    ok &= hyper_ok
    results["hypersimplex"] = {"checked": checked, "pass": hyper_ok}
    spot = (
        enumerate_maximal(hypersimplex_domain(4, 2, 2), "weak").ranks == (5,)
        and enumerate_maximal(hypersimplex_domain(5, 2, 2), "weak").ranks == (7,)
    )
    ok &= spot
    results["grassmannian_spot"] = {"pass": spot}
    return {"pass": ok, "detail": results}

def _permutations(n: int):
    from itertools import permutations as _p

    return _p(range(1, n + 1))

def check_combi_bijection(max_n: int) -> dict:
    per_n = {}
    ok = True
    for n in range(2, max_n + 1):
        report = enumerate_maximal(hypercube_domain(n), "weak")
        good = True
        for fam in report.maximal_collections:
            combi = from_w_collection(fam, check_input=False)
            again = from_w_collection(fam, check_input=False)
            good &= spectrum(combi) == fam and combi == again
        ok &= good
        per_n[str(n)] = {"collections": len(report.maximal_collections), "pass": good}
    return {"pass": ok, "detail": per_n}

def check_flip_coherence(max_n: int) -> dict:
    per_n = {}
    ok = True
    for n in range(2, min(max_n, 4) + 1):
        g_combi = flip_graph(n)
        g_sets = set_flip_graph(n)
        same = g_combi.nodes == g_sets.nodes and g_combi.arcs == g_sets.arcs
        sources = g_combi.sources()
        sinks = g_combi.sinks()
        src_ok = len(sources) == 1 and g_combi.nodes[sources[0]] == interval_collection(n).as_set()
        snk_ok = len(sinks) == 1 and g_combi.nodes[sinks[0]] == cointerval_collection(n).as_set()
        eta_ok = True
        for fam_set in g_combi.nodes:
            fam = SetFamily(n, fam_set)
            combi = from_w_collection(fam, check_input=False)
            for w in find_w_configs(combi):
                eta_ok &= lowering_flip(combi, w).size_sum() == combi.size_sum() - 1
        good = same and src_ok and snk_ok and eta_ok
        ok &= good
        per_n[str(n)] = {
            "nodes": len(g_combi.nodes),
            "arcs": len(g_combi.arcs),
            "graphs_match": same,
            "unique_source_is_intervals": src_ok,
            "unique_sink_is_cointervals": snk_ok,
            "eta_steps_exact": eta_ok,
            "pass": good,
        }
    return {"pass": ok, "detail": per_n}

def check_contraction_bijection(max_n: int) -> dict:
    per_n = {}
    ok = True
    for n in range(2, max_n + 1):
        good = True
        for combi in all_combis(n):
            smaller, path = n_contract(combi)
            good &= n_expand(smaller, path) == combi
        per_n[f"forward_n{n}"] = {"pass": good}
        ok &= good
    for n2 in range(1, min(max_n - 1, 4) + 1):
        pairs = 0
        good = True
        for combi in all_combis(n2):
            for path in enumerate_legal_paths(combi):
                expanded = n_expand(combi, path)
                back, path2 = n_contract(expanded)
                good &= back == combi and path2 == path
                pairs += 1
        want = len(enumerate_maximal(hypercube_domain(n2 + 1), "weak").maximal_collections)
        count_ok = pairs == want
        per_n[f"converse_n{n2}"] = {"pairs": pairs, "expected": want, "pass": good and count_ok}
        ok &= good and count_ok
    return {"pass": ok, "detail": per_n}

def check_pattern_theorems(max_n: int, seed: int, samples: int = 500) -> dict:
    rng = random.Random(seed)
    detail = {}
    ok = True

    combi_pool = {n: all_combis(n) for n in range(3, max_n + 1)}

    simple_checked = 0
    simple_ok = True
    while simple_checked < samples:
        n = rng.choice(sorted(combi_pool))
        combi = rng.choice(combi_pool[n])
        pat = sample_simple_pattern(combi, rng)
        if pat is None:
            continue
        simple_ok &= classify_pattern(pat) == "simple"
        simple_checked += 1
    ok &= simple_ok
    detail["simple_never_crossing"] = {"samples": simple_checked, "pass": simple_ok}

    gen_checked = 0
    gen_ok = True
    crossings_seen = 0
    for pat in crossing_pattern_examples(min(max_n, 4)):
        verdict = classify_pattern(pat)
        gen_ok &= verdict == "self_crossing" and curve_kind(pat) == "crossing"
        crossings_seen += 1
        gen_checked += 1
    while gen_checked < samples:
        n = rng.choice(sorted(combi_pool))
        combi = rng.choice(combi_pool[n])
        pat = sample_generalized_pattern(combi, rng)
        if pat is None:
            continue
        verdict = classify_pattern(pat)
        gen_ok &= verdict in ("simple", "generalized_ok")
        gen_checked += 1
    ok &= gen_ok
    detail["quadruples_match_curve"] = {
        "samples": gen_checked,
        "violators": crossings_seen,
        "pass": gen_ok,
    }

    comp_ok = True
    comp_checked = 0
    exhaustive_n = min(max_n, 4)
    seen = set()
    for combi in combi_pool.get(exhaustive_n, ()):
        vert, _ = _combi_edge_sets(combi)
        for cyc in _all_cycles(vert):
            pat = CyclicPattern(exhaustive_n, cyc)
            key = pat.canonical()
            if key in seen:
                continue
            seen.add(key)
            din, dout = domains(pat)
            comp_ok &= verify_complementary(din, dout)
            comp_ok &= verify_purity(din).pure and verify_purity(dout).pure
            comp_checked += 1
    sampled5 = 0
    if max_n >= 5:
        while sampled5 < 100:
            combi = rng.choice(combi_pool[5])
            pat = sample_generalized_pattern(combi, rng)
            if pat is None or classify_pattern(pat) == "self_crossing":
                continue
            din, dout = domains(pat)
            comp_ok &= verify_complementary(din, dout)
            comp_ok &= verify_purity(din).pure and verify_purity(dout).pure
            sampled5 += 1
    ok &= comp_ok
    detail["complementary_pairs"] = {
        "exhaustive_n4": comp_checked,
        "sampled_n5": sampled5,
        "pass": comp_ok,
    }

    strong_ok = True
    strong_checked = 0
    from .rhombus import from_s_collection
    from .combi import from_rhombus

    s_report = enumerate_maximal(hypercube_domain(min(max_n, 4)), "strong")
    for fam in s_report.maximal_collections:
        semi = from_rhombus(from_s_collection(fam))
        vert, _ = _combi_edge_sets(semi)
        cyc = sample_cycle(vert, rng)
        if cyc is None:
            continue
        pat = CyclicPattern(semi.n, cyc)
        din, dout = strong_domains(pat)
        strong_ok &= verify_complementary(din, dout, "strong")
        rin = verify_purity(din, "strong")
        rout = verify_purity(dout, "strong")
        win = verify_purity(din, "weak")
        wout = verify_purity(dout, "weak")
        strong_ok &= rin.pure and rout.pure and win.pure and wout.pure
        strong_ok &= rin.ranks == win.ranks and rout.ranks == wout.ranks
        strong_checked += 1
    ok &= strong_ok
    detail["strong_patterns"] = {"checked": strong_checked, "pass": strong_ok}

    graph_ok = True
    graph_checked = 0
    n4 = min(max_n, 4)
    while graph_checked < 50:
        combi = rng.choice(combi_pool[n4])
        vert, horiz = _combi_edge_sets(combi)
        pool = sorted(vert | horiz)
        chosen = [e for e in pool if rng.random() < 0.35]
        verts = set(combi.vertex_masks())
        try:
            pat = graph_pattern(n4, verts, chosen)
        except ValueError:
            continue
        graph_ok &= verify_face_domains(pat)
        graph_checked += 1
    ok &= graph_ok
    detail["graph_patterns"] = {"checked": graph_checked, "pass": graph_ok}

    return {"pass": ok, "detail": detail}

def _all_cycles(edges: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Every simple cycle of an undirected graph, rooted at its least vertex."""
    adjacency: dict[int, list[int]] = {}
    for u, v in edges:
        adjacency.setdefault(u, []).append(v)
        adjacency.setdefault(v, []).append(u)
    for v in adjacency:
        adjacency[v].sort()
    out = []
    verts = sorted(adjacency)
    for root in verts:
        stack = [(root, [root])]
        while stack:
            cur, path = stack.pop()
            for nxt in adjacency[cur]:
                if nxt < root:
                    continue
                if nxt == root and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif nxt not in path:
                    stack.append((nxt, path + [nxt]))
    return out

def check_cross_exchange(max_n: int, seed: int, samples: int = 100) -> dict:
    rng = random.Random(seed)
    ok = True
    checked = 0
    pools = {n: all_combis(n) for n in range(3, max_n + 1)}
    attempts = 0
    while checked < samples and attempts < samples * 60:
        attempts += 1
        n = rng.choice(sorted(pools))
        combi_a = rng.choice(pools[n])
        combi_b = rng.choice(pools[n])
        common = combi_a.vertex_masks() & combi_b.vertex_masks()
        vert_a, horiz_a = _combi_edge_sets(combi_a)
        vert_b, horiz_b = _combi_edge_sets(combi_b)
        usable = {
            (u, v)
            for u, v in vert_a | horiz_a | vert_b | horiz_b
            if u in common and v in common
        }
        cyc = sample_cycle(usable, rng)
        if cyc is None:
            continue
        pat = CyclicPattern(n, cyc)
        if classify_pattern(pat) == "self_crossing":
            continue
        inside, _ = split_quasi(combi_a, pat)
        _, outside = split_quasi(combi_b, pat)
        merged = merge_repair(inside, outside)
        ok &= inside.vertex_masks() | outside.vertex_masks() <= merged.vertex_masks()
        checked += 1
    ok &= checked >= samples
    return {"pass": ok, "detail": {"checked": checked}}

def run_suite(max_n: int = 4, seed: int = 7, samples: int = 500) -> dict:
    """Full battery; returns a deterministic report dictionary."""
    report = {
        "max_n": max_n,
        "seed": seed,
        "checks": {
            "hypercube_purity": check_hypercube_purity(max_n),
            "rank_formulas": check_rank_formulas(max_n),
            "combi_bijection": check_combi_bijection(max_n),
            "flip_coherence": check_flip_coherence(max_n),
            "contraction_bijection": check_contraction_bijection(max_n),
            "pattern_theorems": check_pattern_theorems(max_n, seed, samples),
            "cross_exchange": check_cross_exchange(max_n, seed, samples=min(100, samples)),
        },
    }
    report["pass"] = all(c["pass"] for c in report["checks"].values())
    return report
