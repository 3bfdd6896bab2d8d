"""Witness extraction: greedy growth, maximality, chaining, the full solver."""

import random
from math import comb

import pytest

from looseramsey.constructions import CC, PMCN, PNCM, PP, PairKind, SplitSpec, build_split_coloring
from looseramsey.core import (
    BLUE,
    CYCLE,
    PATH,
    RED,
    Coloring,
    TripleEdge,
    Witness,
    validate_loose_cycle,
    validate_loose_path,
    verify_witness,
)
from looseramsey.extractor import (
    Configuration,
    ExtractionState,
    RedExtension,
    chain_blue_path,
    cycle_step,
    find_configuration,
    greedy_red_path,
    maximalize_wrt,
    path_step,
    ramsey_number,
    solve,
)
from looseramsey.oracle import find_mono_cycle, find_mono_path


def _rand(n, seed):
    return Coloring(n, random.Random(seed).getrandbits(comb(n, 3)))


def _path_only(n_vertices, path_len):
    """Coloring whose red graph is exactly one loose path starting at 0."""
    verts = list(range(2 * path_len + 1))
    edges = [tuple(verts[2 * i : 2 * i + 3]) for i in range(path_len)]
    return Coloring.from_red_edges(n_vertices, edges), verts


class TestRamseyNumber:
    @pytest.mark.parametrize(
        "pair,expected",
        [
            (PairKind(PP, 3, 3), 8),
            (PairKind(PP, 5, 4), 12),
            (PairKind(CC, 3, 3), 7),
            (PairKind(CC, 4, 3), 9),
            (PairKind(CC, 5, 5), 12),
            (PairKind(PNCM, 4, 4), 10),
            (PairKind(PMCN, 4, 3), 9),
            (PairKind(PMCN, 6, 3), 13),
        ],
    )
    def test_table(self, pair, expected):
        assert ramsey_number(pair) == expected

    def test_formulas(self):
        for n in range(3, 9):
            for m in range(3, n + 1):
                assert ramsey_number(PairKind(PP, n, m)) == 2 * n + (m + 1) // 2
                assert ramsey_number(PairKind(PNCM, n, m)) == 2 * n + (m + 1) // 2
                assert ramsey_number(PairKind(CC, n, m)) == 2 * n + (m - 1) // 2
                if n > m:
                    assert ramsey_number(PairKind(PMCN, n, m)) == 2 * n + (m - 1) // 2


class TestGreedyRedPath:
    def test_all_red_k7(self):
        assert greedy_red_path(Coloring.all_red(7)).length == 3

    def test_all_blue(self):
        assert greedy_red_path(Coloring.all_blue(7)).vertices == ()

    def test_split(self):
        p = greedy_red_path(build_split_coloring(SplitSpec(7, 1)))
        assert p.length == 2

    def test_result_is_red_and_unextendable(self):
        for seed in range(30):
            c = _rand(9, seed)
            p = greedy_red_path(c)
            if not p.vertices:
                continue
            assert verify_witness(c, Witness(RED, PATH, p))
            free = set(range(9)) - set(p.vertices)
            for a in free:
                for b in free:
                    if a < b:
                        assert not c.is_red(TripleEdge.of(p.last_vertex, a, b))
                        assert not c.is_red(TripleEdge.of(p.first_vertex, a, b))


class TestMaximalize:
    def test_empty_reservoir_unchanged(self):
        c = Coloring.all_red(7)
        st = ExtractionState(c, validate_loose_path(range(7)), frozenset())
        assert maximalize_wrt(st).red_structure.vertices == tuple(range(7))

    def test_all_red_grows_by_one(self):
        c = Coloring.all_red(7)
        st = ExtractionState(c, validate_loose_path(range(5)), frozenset({5, 6}))
        out = maximalize_wrt(st)
        assert out.red_structure.length == 3
        assert out.W == frozenset()

    def test_all_blue_outside_path_unchanged(self):
        c, verts = _path_only(9, 2)
        st = ExtractionState(c, validate_loose_path(verts), frozenset({5, 6, 7, 8}))
        out = maximalize_wrt(st)
        assert out.red_structure.vertices == tuple(verts)
        assert out.W == st.W


class TestFindConfiguration:
    def test_non_maximal_raises_red_extension(self):
        c = Coloring.all_red(9)
        st = ExtractionState(c, validate_loose_path(range(5)), frozenset({5, 6, 7, 8}))
        with pytest.raises(RedExtension):
            find_configuration(st, 0)

    def test_parameter_errors(self):
        c, verts = _path_only(9, 2)
        st = ExtractionState(c, validate_loose_path(verts), frozenset({5, 6}))
        with pytest.raises(ValueError):
            find_configuration(st, 0)  # |W| < 3
        st = ExtractionState(c, validate_loose_path(verts), frozenset({5, 6, 7, 8}))
        with pytest.raises(ValueError):
            find_configuration(st, 1)  # no edge pair starts there

    def test_good_configuration_shape(self):
        c, verts = _path_only(9, 2)
        st = ExtractionState(c, validate_loose_path(verts), frozenset({5, 6, 7, 8}))
        got = find_configuration(st, 0)
        assert isinstance(got, Configuration) and got.quality == "good"
        self._check_conf(c, st, got)

    @staticmethod
    def _check_conf(c, st, conf):
        assert set(conf.edge1) & set(conf.edge2) == {conf.link}
        assert len(conf.S) == 3 and not (conf.S & st.W)
        assert set(conf.ends) <= st.W
        for e in (conf.edge1, conf.edge2):
            assert not c.is_red(e)

    def test_fuzz_invariants(self):
        """Whatever arm comes back, its published invariants hold; the
        bad/good pair must have disjoint inner sets."""
        checked = 0
        for seed in range(400):
            rnd = random.Random(seed)
            bits = 0
            for i in range(comb(13, 3)):
                if rnd.random() < 0.05:
                    bits |= 1 << i
            c = Coloring(13, bits)
            p = greedy_red_path(c)
            if p.length < 3:
                continue
            wset = frozenset(range(13)) - set(p.vertices)
            if len(wset) < 3:
                continue
            st = maximalize_wrt(ExtractionState(c, p, wset))
            if st.red_structure.length < 3 or len(st.W) < 3:
                continue
            got = find_configuration(st, 0)
            if isinstance(got, Configuration):
                self._check_conf(c, st, got)
            else:
                bad, good = got
                assert bad.quality == "bad" and good.quality == "good"
                assert not (bad.S & good.S)
                self._check_conf(c, st, bad)
                self._check_conf(c, st, good)
            checked += 1
        assert checked > 20


class TestChainBluePath:
    def test_two_edge_window_consumes_everything(self):
        # one 2-edge window is all a length-2 red path offers, so the
        # assembly has 2 edges, both red edges are consumed, and exactly
        # one reservoir vertex is left over
        c, verts = _path_only(8, 2)
        st = ExtractionState(c, validate_loose_path(verts), frozenset({5, 6, 7}))
        out = chain_blue_path(st)
        assert out.blue_assembly is not None
        assert out.blue_assembly.length == 2
        assert len(out.T) == 1 and out.r == 0
        for e in out.blue_assembly.edges:
            assert not c.is_red(e)

    def test_length_accounting(self):
        """Assembly length is twice (reservoir vertices used minus one) and
        T is exactly the unused reservoir."""
        checked = 0
        for seed in range(300):
            # sparse red graphs keep the greedy path short enough that a
            # nontrivial reservoir remains
            rnd = random.Random(seed)
            bits = 0
            for i in range(comb(12, 3)):
                if rnd.random() < 0.06:
                    bits |= 1 << i
            c = Coloring(12, bits)
            p = greedy_red_path(c)
            if p.length < 2:
                continue
            wset = frozenset(range(12)) - set(p.vertices)
            if len(wset) < 3:
                continue
            st = maximalize_wrt(ExtractionState(c, p, wset))
            if len(st.W) < 3 or st.red_structure.length < 2:
                continue
            out = chain_blue_path(st)
            if out.blue_assembly is None:
                continue
            q = out.blue_assembly
            wused = set(q.vertices) & st.W
            assert q.length == 2 * (len(wused) - 1)
            assert out.T <= st.W and not (out.T & set(q.vertices))
            assert 0 <= out.consumed_prefix <= st.red_structure.length
            assert out.r == st.red_structure.length - out.consumed_prefix
            for e in q.edges:
                assert not c.is_red(e)
            checked += 1
        assert checked > 20


class TestSteps:
    def test_path_step_on_blue_remainder(self):
        # red graph is exactly a 3-path; on 10 vertices the step must find
        # the blue 3-path since no red 4-path exists
        c, verts = _path_only(10, 3)
        st = ExtractionState(c, validate_loose_path(verts), frozenset(range(7, 10)))
        w = path_step(st, 4, 3)
        assert w.color == BLUE and (w.shape, w.length) == (PATH, 3)
        assert verify_witness(c, w)

    def test_cycle_step_on_blue_remainder(self):
        cyc = [0, 1, 2, 3, 4, 5, 6, 7]
        edges = [tuple(cyc[2 * i : 2 * i + 3]) for i in range(3)] + [(6, 7, 0)]
        c = Coloring.from_red_edges(11, edges)
        st = ExtractionState(c, validate_loose_cycle(cyc), frozenset(range(8, 11)))
        w = cycle_step(st, 5, 4)
        assert w.color == BLUE and (w.shape, w.length) == (CYCLE, 4)
        assert verify_witness(c, w)


class TestSolve:
    def test_below_threshold(self):
        with pytest.raises(ValueError):
            solve(PairKind(PP, 3, 3), Coloring.all_red(7))

    def test_all_red_gives_red_target(self):
        for pair in (PairKind(PP, 4, 3), PairKind(CC, 4, 4), PairKind(PNCM, 4, 3),
                     PairKind(PMCN, 5, 3)):
            c = Coloring.all_red(ramsey_number(pair))
            w = solve(pair, c)
            assert w.color == RED
            assert (w.shape, w.length) == pair.red_target

    def test_any_k8_pp33(self):
        pair = PairKind(PP, 3, 3)
        for seed in range(200):
            c = _rand(8, seed)
            w = solve(pair, c)
            assert verify_witness(c, w)
            assert (w.shape, w.length) == (PATH, 3)

    def test_deterministic(self):
        pair = PairKind(CC, 5, 4)
        for seed in range(20):
            c = _rand(ramsey_number(pair), seed)
            assert solve(pair, c) == solve(pair, c)

    def test_extra_vertices_are_ignored(self):
        pair = PairKind(PP, 3, 3)
        c = _rand(11, 7)
        assert solve(pair, c) == solve(pair, c.restrict(8))

    @pytest.mark.parametrize(
        "pair",
        [
            PairKind(PP, 5, 4),
            PairKind(CC, 5, 5),
            PairKind(PNCM, 5, 4),
            PairKind(PMCN, 5, 4),
        ],
    )
    def test_random_colorings_verified(self, pair):
        N = ramsey_number(pair)
        for seed in range(100):
            c = _rand(N, seed)
            w = solve(pair, c)
            assert verify_witness(c, w)
            expected = pair.red_target if w.color == RED else pair.blue_target
            assert (w.shape, w.length) == expected

    def test_oracle_agrees(self):
        pair = PairKind(CC, 4, 4)
        N = ramsey_number(pair)
        for seed in range(30):
            c = _rand(N, seed)
            w = solve(pair, c)
            shape, length = (pair.red_target if w.color == RED else pair.blue_target)
            finder = find_mono_path if shape == PATH else find_mono_cycle
            assert finder(c.restrict(N), w.color, length) is not None

    def test_trace_is_populated(self):
        trace = []
        c = build_split_coloring(SplitSpec(7, 1)).swap()  # adversarial-ish, 8 verts
        solve(PairKind(PP, 3, 3), c, trace=trace)
        assert trace and all(isinstance(line, str) for line in trace)
