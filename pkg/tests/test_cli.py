import json

import pytest

from zonotile import bitsets as bs
from zonotile import jsonio
from zonotile.cli import cmd
from zonotile.combi import from_w_collection, spectrum
from zonotile.flips import interval_combi
from zonotile.patterns import boundary_pattern
from zonotile.render import RenderStyle, render_svg
from zonotile.rhombus import minimal_tiling
from zonotile.separation import (
    Permutation,
    enumerate_maximal,
    hypercube_domain,
    interval_collection,
)

M = bs.mask_of


class TestJsonRoundTrips:
    def test_family(self):
        fam = interval_collection(4)
        assert jsonio.family_from_json(jsonio.family_to_json(fam)) == fam

    def test_permutation(self):
        perm = Permutation((3, 1, 2))
        assert jsonio.permutation_from_json(jsonio.permutation_to_json(perm)) == perm

    def test_tiling(self):
        tiling = minimal_tiling(4)
        assert jsonio.tiling_from_json(jsonio.tiling_to_json(tiling)) == tiling

    def test_combi_all_n4(self):
        for fam in enumerate_maximal(hypercube_domain(4), "weak").maximal_collections:
            combi = from_w_collection(fam, check_input=False)
            assert jsonio.combi_from_json(jsonio.combi_to_json(combi)) == combi

    def test_pattern(self):
        pat = boundary_pattern(3)
        assert jsonio.pattern_from_json(jsonio.pattern_to_json(pat)) == pat

    def test_path(self):
        path = (0, M([1]), M([1, 2]))
        assert jsonio.path_from_json(jsonio.path_to_json(path)) == path

    def test_generators(self):
        from zonotile.geometry import default_generators

        gens = default_generators(3)
        back = jsonio.generators_from_json(jsonio.generators_to_json(gens))
        assert back.vectors == gens.vectors

    def test_malformed_rejected(self):
        with pytest.raises((ValueError, KeyError, TypeError)):
            jsonio.family_from_json({"n": 3, "members": [[1], [1]]})


class TestRender:
    def test_byte_identical(self):
        combi = interval_combi(4)
        assert render_svg(combi) == render_svg(combi)

    def test_z1_combi_svg(self):
        from zonotile.combi import Combi

        svg = render_svg(Combi(1))
        assert svg.count("<line") == 1
        assert svg.count("<circle") == 2

    def test_lens_shading(self):
        lensy = next(
            from_w_collection(f, check_input=False)
            for f in enumerate_maximal(hypercube_domain(4), "weak").maximal_collections
            if from_w_collection(f, check_input=False).lenses
        )
        svg = render_svg(lensy)
        assert svg.count("<polygon") == len(lensy.lenses) == 1

    def test_pattern_render_dashed(self):
        svg = render_svg(boundary_pattern(3))
        assert "stroke-dasharray" in svg

    def test_quasi_combi_render(self):
        from zonotile.combi import from_w_collection
        from zonotile.patterns import CyclicPattern, split_quasi

        combi = next(
            from_w_collection(f, check_input=False)
            for f in enumerate_maximal(hypercube_domain(4), "weak").maximal_collections
            if from_w_collection(f, check_input=False).lenses
        )
        lens = sorted(combi.lenses)[0]
        pat = CyclicPattern(4, [lens.left, lens.right] + list(reversed(lens.upper))[1:-1])
        inner, outer = split_quasi(combi, pat)
        svg = render_svg(outer)
        assert svg == render_svg(outer)
        assert "<polygon" in svg

    def test_style_invariant(self):
        with pytest.raises(ValueError):
            RenderStyle(vertical_width=1, horizontal_width=2)


class TestCli:
    def test_purity_hypercube(self, capsys):
        assert cmd(["purity", "--hypercube", "3", "--relation", "weak"]) == 0
        assert capsys.readouterr().out.strip() == "pure, rank 7"

    def test_separation_output(self, capsys):
        assert cmd(["separation", "1,2", "2,3", "--n", "3"]) == 0
        out = capsys.readouterr().out
        assert "weakly_separated: true" in out
        assert "termwise: true" in out

    def test_enumerate_and_build(self, tmp_path, capsys):
        fam_file = tmp_path / "fam.json"
        fam_file.write_text(json.dumps(jsonio.family_to_json(hypercube_domain(3))))
        out_file = tmp_path / "report.json"
        assert cmd(["enumerate", "--domain", str(fam_file), "--out", str(out_file)]) == 0
        report = json.loads(out_file.read_text())
        assert report["pure"] and report["ranks"] == [7]

        i4 = tmp_path / "i4.json"
        i4.write_text(json.dumps(jsonio.family_to_json(interval_collection(4))))
        combi_file = tmp_path / "combi.json"
        assert cmd(["build-combi", "--family", str(i4), "--out", str(combi_file)]) == 0
        svg_file = tmp_path / "c.svg"
        assert cmd(["render", "--combi", str(combi_file), "--out", str(svg_file)]) == 0
        assert svg_file.read_text().count("<text") == 11

    def test_contract_expand_files(self, tmp_path):
        combi_file = tmp_path / "c.json"
        combi_file.write_text(json.dumps(jsonio.combi_to_json(interval_combi(4))))
        small = tmp_path / "small.json"
        path = tmp_path / "path.json"
        assert cmd([
            "contract", "--combi", str(combi_file),
            "--out-combi", str(small), "--out-path", str(path),
        ]) == 0
        back = tmp_path / "back.json"
        assert cmd([
            "expand", "--combi", str(small), "--path", str(path), "--out", str(back),
        ]) == 0
        assert json.loads(back.read_text()) == json.loads(combi_file.read_text())

    def test_expand_illegal_path_names_rule(self, tmp_path, capsys):
        combi_file = tmp_path / "c.json"
        combi_file.write_text(json.dumps(jsonio.combi_to_json(interval_combi(3))))
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"vertices": [[], [1]]}))
        assert cmd(["expand", "--combi", str(combi_file), "--path", str(bad)]) == 1
        err = json.loads(capsys.readouterr().err)
        assert "P1" in err["detail"]

    def test_flip_and_descend(self, tmp_path):
        high = from_w_collection(
            enumerate_maximal(hypercube_domain(3), "weak").maximal_collections[1],
            check_input=False,
        )
        combi_file = tmp_path / "c.json"
        combi_file.write_text(json.dumps(jsonio.combi_to_json(high)))
        out = tmp_path / "low.json"
        trace = tmp_path / "trace.jsonl"
        assert cmd([
            "descend", "--combi", str(combi_file), "--out", str(out), "--trace", str(trace),
        ]) == 0
        lines = [json.loads(l) for l in trace.read_text().splitlines()]
        assert all(l["op"] == "lower" for l in lines)
        low = jsonio.combi_from_json(json.loads(out.read_text()))
        assert spectrum(low) == interval_collection(3)

    def test_pattern_commands(self, tmp_path, capsys):
        pat_file = tmp_path / "pat.json"
        pat_file.write_text(json.dumps(jsonio.pattern_to_json(boundary_pattern(3))))
        assert cmd(["pattern", "classify", "--pattern", str(pat_file)]) == 0
        assert capsys.readouterr().out.strip() == "simple"
        out = tmp_path / "doms.json"
        assert cmd(["pattern", "domains", "--pattern", str(pat_file), "--out", str(out)]) == 0
        doms = json.loads(out.read_text())
        assert len(doms["inside"]["members"]) == 8
        verdict = tmp_path / "verdict.json"
        assert cmd(["pattern", "verify", "--pattern", str(pat_file), "--out", str(verdict)]) == 0
        assert json.loads(verdict.read_text())["complementary"] is True

    def test_resource_guard_exit_code(self, tmp_path, capsys):
        assert cmd(["purity", "--hypercube", "12", "--relation", "weak"]) == 2
        err = json.loads(capsys.readouterr().err)
        assert err["error"] == "resource-guard"

    def test_invalid_combi_rejected(self, tmp_path, capsys):
        broken = {"n": 2, "deltas": [], "nablas": [{"bottom": [], "base": [[1], [2]]}], "lenses": []}
        f = tmp_path / "broken.json"
        f.write_text(json.dumps(broken))
        assert cmd(["render", "--combi", str(f)]) == 1

    def test_verify_report_deterministic(self, tmp_path):
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        args = ["verify", "--paper-suite", "--max-n", "3", "--seed", "7", "--samples", "40"]
        assert cmd(args + ["--out", str(out1)]) == 0
        assert cmd(args + ["--out", str(out2)]) == 0
        assert out1.read_bytes() == out2.read_bytes()
