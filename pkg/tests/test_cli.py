import json

import pytest

from tilings.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_complex_fixture_table(capsys):
    code, out, _ = run(capsys, "complex", "prism")
    assert code == 0
    assert "f_vector: [4, 3]" in out
    assert "euler_characteristic: 1" in out


def test_complex_figure2_json(capsys):
    code, out, _ = run(capsys, "complex", "figure2", "--format", "json",
                       "--collapse", "--betti")
    assert code == 0
    data = json.loads(out)
    assert data["f_vector"] == [4, 2]
    assert data["components"] == 2
    assert data["collapse"]["status"] == "not_collapsible"
    assert data["z2_betti"] == [2]


def test_complex_polyomino_file(tmp_path, capsys):
    poly = tmp_path / "block.txt"
    poly.write_text("####\n####\n")
    code, out, _ = run(capsys, "complex", str(poly), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["f_vector"] == [5, 5, 1]
    assert data["euler_characteristic"] == 1


def test_complex_cube_coordinates(capsys):
    code, out, _ = run(capsys, "complex", "ladder-2", "--format", "json",
                       "--cube")
    assert code == 0
    data = json.loads(out)
    vectors = [tuple(e["x"]) for e in data["cube_coordinates"]]
    assert len(set(vectors)) == len(vectors) == 3


def test_complex_missing_input_fails(capsys):
    code, _, err = run(capsys, "complex", "no-such-thing")
    assert code == 2
    assert "no such file or fixture" in err


def test_complex_bad_json_fails(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "complex", str(bad))
    assert code == 2


def test_poly_p7_closed_form(capsys):
    code, out, _ = run(capsys, "poly", "P", "7", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["coeffs"] == [1, 7, 15, 10, 1]
    assert data["matches_closed_form"] is True


def test_poly_a_map(capsys):
    code, out, _ = run(capsys, "poly", "A", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == [1, 2, -1, 2]


def test_poly_f3(capsys):
    code, out, _ = run(capsys, "poly", "F", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["coeffs"] == [5, 5, 1]


def test_poly_bad_kind(capsys):
    code, _, err = run(capsys, "poly", "Q", "3")
    assert code == 2


def test_fixtures_list(capsys):
    code, out, _ = run(capsys, "fixtures", "list")
    assert code == 0
    names = out.split()
    assert "prism" in names and "ladder-8-8" in names


def test_fixtures_dump_and_env_lookup(tmp_path, capsys, monkeypatch):
    code, out, _ = run(capsys, "fixtures", "dump", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "g1.json").exists()
    # Env var points resolution at the dumped corpus.
    monkeypatch.setenv("TILINGS_FIXTURE_DIR", str(tmp_path))
    code, out, _ = run(capsys, "complex", "g1", "--format", "json")
    assert code == 0
    assert json.loads(out)["f_vector"] == [4, 3]


def test_verify_scoped(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "kozlov")
    assert code == 0
    assert "PASS kozlov" in out


def test_verify_unknown_scope(capsys):
    code, _, err = run(capsys, "verify", "--scope", "bogus")
    assert code == 2
    assert "no checks match" in err


def test_output_byte_stable(capsys):
    one = run(capsys, "complex", "g2", "--format", "json")
    two = run(capsys, "complex", "g2", "--format", "json")
    assert one == two
