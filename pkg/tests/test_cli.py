"""File formats and command-line behavior: schemas, exit codes, determinism."""

import json

import numpy as np
import pytest

from frobasis import BasisKind, BasisSpec, FileFormatError, from_basis, standard_structure
from frobasis.cli import main
from frobasis.fileio import (
    dump_algebra,
    dump_basis,
    dump_map,
    dump_vector,
    load_algebra,
    load_basis,
    load_map,
    load_vector,
)
from test_frobenius import hadamard_basis, matrix_algebra_structure, orth_basis, skew_basis


@pytest.fixture
def std_algebra_file(tmp_path):
    path = tmp_path / "std.json"
    dump_algebra(standard_structure(2), str(path))
    return str(path)


@pytest.fixture
def orth_algebra_file(tmp_path):
    path = tmp_path / "orth.json"
    dump_algebra(from_basis(orth_basis()), str(path))
    return str(path)


class TestFileRoundtrip:
    def test_algebra_exact_roundtrip(self, tmp_path):
        f = from_basis(hadamard_basis())
        path = str(tmp_path / "h.json")
        dump_algebra(f, path)
        g = load_algebra(path)
        assert np.array_equal(f.m, g.m)
        assert np.array_equal(f.u, g.u)
        assert np.array_equal(f.delta, g.delta)
        assert np.array_equal(f.eps, g.eps)
        assert f.dagger == g.dagger

    def test_basis_exact_roundtrip(self, tmp_path):
        b = BasisSpec(
            dim=2,
            vectors=np.array([[0.1 + 0.7j, -3.0], [2.0, 1e-17 + 1j]]),
            kind=BasisKind.ARBITRARY,
        )
        path = str(tmp_path / "b.json")
        dump_basis(b, path)
        assert np.array_equal(load_basis(path).vectors, b.vectors)

    def test_map_and_vector_roundtrip(self, tmp_path):
        g = np.array([[1 + 2j, 0.5], [0, -1j]])
        dump_map(g, str(tmp_path / "g.json"))
        assert np.array_equal(load_map(str(tmp_path / "g.json")), g)
        v = np.array([0.25, -1j])
        dump_vector(v, str(tmp_path / "v.json"))
        assert np.array_equal(load_vector(str(tmp_path / "v.json")), v)

    def test_defaults_adjoint_pair(self, tmp_path):
        f = standard_structure(2)
        path = tmp_path / "min.json"
        path.write_text(json.dumps({
            "dim": 2,
            "m": [[float(z.real), float(z.imag)] for z in f.m.reshape(-1)],
            "u": [[1.0, 0.0], [1.0, 0.0]],
        }))
        g = load_algebra(str(path))
        assert g.dagger
        assert np.array_equal(g.delta, g.m.conj().T)
        assert np.array_equal(g.eps, g.u.conj())

    @pytest.mark.parametrize("mutation, message", [
        (lambda d: d.pop("m"), "missing field 'm'"),
        (lambda d: d.__setitem__("dim", -1), "'dim'"),
        (lambda d: d["m"].pop(), "expected 8 complex pairs"),
        (lambda d: d["m"].__setitem__(0, [1.0]), "entry 0"),
        (lambda d: d.__setitem__("dagger", "yes"), "'dagger'"),
    ])
    def test_schema_diagnostics(self, tmp_path, mutation, message):
        f = standard_structure(2)
        doc = {
            "dim": 2,
            "m": [[float(z.real), float(z.imag)] for z in f.m.reshape(-1)],
            "u": [[1.0, 0.0], [1.0, 0.0]],
        }
        mutation(doc)
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc))
        with pytest.raises(FileFormatError, match=message):
            load_algebra(str(path))


class TestCmdCheck:
    def test_golden_passes(self, std_algebra_file):
        assert main(["check", std_algebra_file]) == 0

    def test_orthogonal_passes_despite_special(self, orth_algebra_file, capsys):
        assert main(["check", orth_algebra_file]) == 0
        out = capsys.readouterr().out
        assert "special" in out and "FAIL" in out  # reported, not claimed

    def test_perturbed_entry_fails(self, tmp_path, capsys):
        f = standard_structure(2)
        m = f.m.copy()
        m[0, 1] += 1e-3
        path = tmp_path / "pert.json"
        path.write_text(json.dumps({
            "dim": 2,
            "m": [[float(z.real), float(z.imag)] for z in m.reshape(-1)],
            "u": [[1.0, 0.0], [1.0, 0.0]],
            "delta": [[float(z.real), float(z.imag)] for z in f.delta.reshape(-1)],
            "eps": [[1.0, 0.0], [1.0, 0.0]],
            "dagger": True,
        }))
        assert main(["check", str(path)]) == 1
        out = capsys.readouterr().out
        assert "FAIL" in out

    def test_truncated_file_is_input_error(self, tmp_path):
        path = tmp_path / "trunc.json"
        path.write_text('{"dim": 2, "m": [')
        assert main(["check", str(path)]) == 2

    def test_json_format_is_machine_readable(self, std_algebra_file, capsys):
        assert main(["check", std_algebra_file, "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["ok"] is True
        assert set(doc["residuals"]) == set(doc["passed"])


class TestCmdFromBasis:
    def test_standard_golden(self, tmp_path, capsys):
        bpath = tmp_path / "b.json"
        dump_basis(BasisSpec(dim=2, vectors=np.eye(2), kind=BasisKind.ORTHONORMAL), str(bpath))
        out_path = tmp_path / "alg.json"
        assert main(["from-basis", str(bpath), "--out", str(out_path)]) == 0
        g = load_algebra(str(out_path))
        f = standard_structure(2)
        assert np.allclose(g.m, f.m) and np.allclose(g.u, f.u)

    def test_orthogonal_unit(self, tmp_path):
        bpath = tmp_path / "b.json"
        dump_basis(orth_basis(), str(bpath))
        out_path = tmp_path / "alg.json"
        assert main(["from-basis", str(bpath), "--out", str(out_path)]) == 0
        g = load_algebra(str(out_path))
        np.testing.assert_allclose(g.u, [0.5, 1.0], atol=1e-15)
        assert g.dagger

    def test_skew_writes_non_dagger(self, tmp_path):
        bpath = tmp_path / "b.json"
        dump_basis(skew_basis(), str(bpath))
        out_path = tmp_path / "alg.json"
        assert main(["from-basis", str(bpath), "--out", str(out_path)]) == 0
        assert load_algebra(str(out_path)).dagger is False

    def test_dependent_vectors_exit_one(self, tmp_path):
        bpath = tmp_path / "b.json"
        bpath.write_text(json.dumps({
            "dim": 2,
            "kind": "arbitrary",
            "vectors": [[[1.0, 0.0], [1.0, 0.0]], [[2.0, 0.0], [2.0, 0.0]]],
        }))
        assert main(["from-basis", str(bpath), "--out", str(tmp_path / "o.json")]) == 1

    def test_roundtrip_through_check(self, tmp_path):
        bpath = tmp_path / "b.json"
        dump_basis(hadamard_basis(), str(bpath))
        apath = tmp_path / "alg.json"
        assert main(["from-basis", str(bpath), "--out", str(apath)]) == 0
        assert main(["check", str(apath)]) == 0


class TestCmdExtract:
    def test_hadamard_file_roundtrip(self, tmp_path):
        apath = tmp_path / "alg.json"
        dump_algebra(from_basis(hadamard_basis()), str(apath))
        bpath = tmp_path / "basis.json"
        assert main(["extract", str(apath), "--out", str(bpath)]) == 0
        b = load_basis(str(bpath))
        assert b.kind is BasisKind.ORTHONORMAL
        s = 1 / np.sqrt(2)
        got = {tuple(np.round(v.real, 8)) for v in b.vectors}
        assert got == {(round(s, 8), round(s, 8)), (round(s, 8), round(-s, 8))}

    def test_standard_extracts_standard(self, std_algebra_file, tmp_path):
        bpath = tmp_path / "basis.json"
        assert main(["extract", std_algebra_file, "--out", str(bpath)]) == 0
        b = load_basis(str(bpath))
        assert b.kind is BasisKind.ORTHONORMAL

    def test_non_commutative_fixture_exits_one(self, tmp_path, capsys):
        apath = tmp_path / "mat.json"
        dump_algebra(matrix_algebra_structure(), str(apath))
        assert main(["extract", str(apath)]) == 1
        assert "commutative" in capsys.readouterr().err

    def test_deterministic_json_output(self, orth_algebra_file, capsys):
        assert main(["extract", orth_algebra_file, "--format", "json", "--seed", "9"]) == 0
        first = capsys.readouterr().out
        assert main(["extract", orth_algebra_file, "--format", "json", "--seed", "9"]) == 0
        second = capsys.readouterr().out
        assert first == second


class TestCmdClassify:
    def test_three_rows(self, tmp_path, capsys):
        cases = [
            (standard_structure(2), "orthonormal-type", 0),
            (from_basis(orth_basis()), "orthogonal-type", 0),
            (from_basis(skew_basis()), "arbitrary-type", 0),
            (matrix_algebra_structure(), "invalid", 1),
        ]
        for idx, (structure, expected, code) in enumerate(cases):
            path = tmp_path / f"c{idx}.json"
            dump_algebra(structure, str(path))
            assert main(["classify", str(path)]) == code
            assert expected in capsys.readouterr().out


class TestCmdHomcheck:
    def test_identity_comonoid(self, std_algebra_file, tmp_path, capsys):
        gpath = tmp_path / "g.json"
        dump_map(np.eye(2, dtype=complex), str(gpath))
        assert main(["homcheck", str(gpath), std_algebra_file, std_algebra_file]) == 0
        out = capsys.readouterr().out
        assert "induced function: 0 1" in out

    def test_swap_function_map(self, std_algebra_file, tmp_path, capsys):
        gpath = tmp_path / "g.json"
        dump_map(np.array([[0, 1], [1, 0]], dtype=complex), str(gpath))
        assert main(["homcheck", str(gpath), std_algebra_file, std_algebra_file]) == 0
        assert "induced function: 1 0" in capsys.readouterr().out

    def test_hadamard_fails(self, std_algebra_file, tmp_path):
        gpath = tmp_path / "g.json"
        dump_map(np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2), str(gpath))
        assert main(["homcheck", str(gpath), std_algebra_file, std_algebra_file]) == 1

    def test_full_mode_permutation(self, std_algebra_file, tmp_path):
        gpath = tmp_path / "g.json"
        dump_map(np.array([[0, 1], [1, 0]], dtype=complex), str(gpath))
        assert main([
            "homcheck", str(gpath), std_algebra_file, std_algebra_file, "--mode", "full",
        ]) == 0


class TestCmdConjugateAndProfile:
    def test_conjugate_element_file(self, std_algebra_file, tmp_path):
        vpath = tmp_path / "v.json"
        dump_vector(np.array([1 + 2j, -3j]), str(vpath))
        out = tmp_path / "out.json"
        assert main(["conjugate", std_algebra_file, str(vpath), "--out", str(out)]) == 0
        np.testing.assert_allclose(load_vector(str(out)), [1 - 2j, 3j], atol=1e-14)

    def test_normprofile_output(self, orth_algebra_file, capsys):
        assert main(["normprofile", orth_algebra_file, "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["profile"] == pytest.approx([1.0, 2.0], abs=1e-9)

    def test_normprofile_arbitrary_exits_one(self, tmp_path):
        apath = tmp_path / "skew.json"
        dump_algebra(from_basis(skew_basis()), str(apath))
        assert main(["normprofile", str(apath)]) == 1

    def test_missing_file_is_input_error(self):
        assert main(["check", "/nonexistent/path.json"]) == 2
