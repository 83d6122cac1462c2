import json

import pytest

from macfarlane import cli
from conftest import fixture_path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_check_yes(tmp_path, capsys):
    path = write(tmp_path, "d.json", {"d": 3, "a": "1", "b": "1"})
    code, out = run(capsys, "check", path)
    doc = json.loads(out)
    assert code == 0
    assert doc["status"] == "yes"
    assert doc["desc"] == {"d": 3, "a": "1", "b": "1"}


def test_check_normalizes(tmp_path, capsys):
    path = write(tmp_path, "d.json", {"d": 1, "a": "-1", "b": "-1"})
    code, out = run(capsys, "check", path)
    assert json.loads(out)["desc"] == {"d": 1, "a": "1", "b": "1"}


def test_check_rejects_real_field(tmp_path, capsys):
    path = write(tmp_path, "d.json", {"d": -2, "a": "1", "b": "1"})
    code, _ = run(capsys, "check", path)
    assert code == cli.EXIT_PRECONDITION


def test_convert_center_to_uhs(tmp_path, capsys):
    path = write(tmp_path, "c.json", {
        "desc": {"d": 1, "a": "1", "b": "1"}, "dim": 2,
        "from": "hyperboloid", "to": "uhs",
        "point": {"w": "1", "x": "0", "y": "0", "zp": "0"},
    })
    code, out = run(capsys, "convert", path)
    assert code == 0
    assert json.loads(out) == {"u": "0", "v": "0", "h": "1"}


def test_convert_round_trip(tmp_path, capsys):
    pt = {"w": "7/2", "x": "3/2", "y": "3", "zp": "0"}
    path = write(tmp_path, "c.json", {
        "desc": {"d": 1, "a": "1", "b": "1"}, "dim": 2,
        "from": "hyperboloid", "to": "klein", "point": pt,
    })
    _, out = run(capsys, "convert", path)
    k = json.loads(out)
    path2 = write(tmp_path, "c2.json", {
        "desc": {"d": 1, "a": "1", "b": "1"}, "dim": 2,
        "from": "klein", "to": "hyperboloid", "point": k,
    })
    _, out2 = run(capsys, "convert", path2)
    assert json.loads(out2) == pt


def test_orbit_table_format(capsys):
    code, out = run(capsys, "orbit", str(fixture_path("punctured_torus.json")),
                    "--max-trace", "7", "--format", "table")
    assert code == 0
    assert "trace" in out and "7/2" in out


def test_orbit_json_exact_rationals(capsys):
    code, out = run(capsys, "orbit", str(fixture_path("punctured_torus.json")),
                    "--max-trace", "11")
    rows = json.loads(out)
    assert code == 0
    for row in rows:
        for v in row["quaternion"].values():
            assert "." not in v  # exact rational strings only
    assert any(row["in_orbit"] and row["trace"] == "11" for row in rows)


def test_domain_json_and_render_round_trip(tmp_path, capsys):
    fx = str(fixture_path("punctured_torus.json"))
    dom = str(tmp_path / "dom.json")
    code, _ = run(capsys, "domain", fx, "--max-trace", "18", "--output", dom)
    assert code == 0
    svg_direct = str(tmp_path / "a.svg")
    code, _ = run(capsys, "domain", fx, "--max-trace", "18",
                  "--format", "svg", "--output", svg_direct)
    assert code == 0
    svg_re = str(tmp_path / "b.svg")
    code, _ = run(capsys, "render", dom, "--output", svg_re)
    assert code == 0
    a = open(svg_direct, "rb").read()
    b = open(svg_re, "rb").read()
    assert a == b and a.startswith(b"<?xml")


def test_render_determinism(tmp_path, capsys):
    fx = str(fixture_path("punctured_torus.json"))
    dom = str(tmp_path / "dom.json")
    run(capsys, "domain", fx, "--max-trace", "11", "--output", dom)
    _, one = run(capsys, "render", dom)
    _, two = run(capsys, "render", dom)
    assert one == two


def test_render_empty_side_list_errors(tmp_path, capsys):
    doc = {"dim": 2, "desc": {"d": 1, "a": "1", "b": "1"},
           "halfspaces": [], "pairings": []}
    path = write(tmp_path, "empty.json", doc)
    code, _ = run(capsys, "render", path)
    assert code == cli.EXIT_PRECONDITION


def test_domain_undecided_exit_code(capsys):
    code, out = run(capsys, "domain", str(fixture_path("whitehead.json")),
                    "--max-trace", "6", "--bfs-depth", "4")
    assert code == cli.EXIT_UNDECIDED
    doc = json.loads(out)
    assert doc["undecided"]


def test_center_check_passes(capsys):
    code, _ = run(capsys, "domain", str(fixture_path("punctured_torus.json")),
                  "--max-trace", "6", "--center-check")
    assert code == 0


def test_bad_max_trace(capsys):
    code, _ = run(capsys, "domain", str(fixture_path("punctured_torus.json")),
                  "--max-trace", "2")
    assert code == cli.EXIT_PRECONDITION


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(SystemExit) as exc:
        cli.main(["check", str(bad)])
    assert exc.value.code == cli.EXIT_PARSE
    capsys.readouterr()
