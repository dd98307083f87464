import json


from pcaepg.cli import main
from pcaepg.families import Family
from pcaepg.formats import format_graph


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def gen(name, param=None, serpentine=False, fmt="adj"):
    return format_graph(Family(name, param, serpentine).graph(), fmt)


def test_h3_is_rejected_with_certificate(capsys, monkeypatch):
    code, out, _ = run(["classify", "--target", "b1epg", "-"], capsys, gen("H3"), monkeypatch)
    assert code == 1
    assert json.loads(out)["certificate"]["pattern"] == "H3"


def test_power_cycle_is_not_epr(capsys, monkeypatch):
    code, out, _ = run(["classify", "--target", "b1epr", "-"], capsys, gen("powercycle", 2), monkeypatch)
    assert code == 1
    assert json.loads(out)["certificate"]["pattern"] == "C7^2"


def test_w4_pipeline(tmp_path, capsys, monkeypatch):
    graph = tmp_path / "w4.txt"
    graph.write_text(gen("wheel", 4))
    rep = tmp_path / "w4.json"
    svg = tmp_path / "w4.svg"
    assert run(["build", str(graph), "--out", str(rep), "--svg", str(svg)], capsys)[0] == 0
    code, out, _ = run(["verify", "--rep", str(rep), "--in", str(graph), "--max-bends", "1"], capsys)
    assert code == 0 and json.loads(out)["ok"]
    assert svg.read_text().startswith("<svg")


def test_pipeline_over_named_families(tmp_path, capsys):
    names = [("wheel", 4), ("wheel", 5), ("cycle", 5), ("path", 4), ("complete", 4), ("sun3", None)]
    for name, param in names:
        graph = tmp_path / "g.g6"
        graph.write_text(gen(name, param, fmt="graph6"))
        code, _, _ = run(["classify", "--target", "b1epg", str(graph)], capsys)
        if code != 0:
            continue
        rep = tmp_path / "r.json"
        assert run(["build", str(graph), "--out", str(rep)], capsys)[0] == 0
        assert run(["verify", "--rep", str(rep), "--in", str(graph), "--max-bends", "1"], capsys)[0] == 0


def test_verify_fails_on_wrong_graph(tmp_path, capsys):
    rep = tmp_path / "r.json"
    rep.write_text(json.dumps({"n": 2, "paths": [[[0, 0], [0, 1]], [[1, 0], [1, 1]]]}))
    graph = tmp_path / "k2.txt"
    graph.write_text("2 1\n0 1\n")
    code, out, _ = run(["verify", "--rep", str(rep), "--in", str(graph)], capsys)
    assert code == 1 and json.loads(out)["first_mismatch"] == [0, 1]


def test_precondition_errors_exit_2(capsys, monkeypatch):
    code, _, err = run(["classify", "--target", "b1epg", "-"], capsys, gen("claw"), monkeypatch)
    assert code == 2 and "PCA" in err
    code, _, err = run(["classify", "-"], capsys, "3 1\n0 9\n", monkeypatch)
    assert code == 2 and "out of range" in err
    code, _, err = run(["classify", "--target", "b1epg", "/no/such/file"], capsys)
    assert code == 2 and "cannot read" in err
    code, _, err = run(["generate", "--family", "H9"], capsys)
    assert code == 2 and "unknown family" in err


def test_oracle_commands(capsys, monkeypatch):
    code, out, _ = run(["oracle", "--grid", "4x4", "-"], capsys, gen("cycle", 4), monkeypatch)
    assert code == 0 and json.loads(out)["n"] == 4
    code, out, _ = run(["oracle", "--arc", "--proper", "-"], capsys, gen("claw"), monkeypatch)
    assert code == 1 and out.strip() == "none"
    code, out, _ = run(["oracle", "--grid", "6x6", "--node-limit", "2", "-"], capsys, gen("cycle", 6), monkeypatch)
    assert code == 1 and out.strip() == "inconclusive"


def test_generate_formats(capsys):
    code, out, _ = run(["generate", "--family", "H5", "--serpentine", "--format", "graph6"], capsys)
    assert code == 0 and out.strip() == format_graph(Family("H5", serpentine=True).graph(), "graph6").strip()


def test_render(tmp_path, capsys):
    rep = tmp_path / "r.json"
    rep.write_text(json.dumps({"n": 2, "paths": [[[0, 0], [0, 1]], [[0, 0], [0, 1], [1, 1]]]}))
    svg = tmp_path / "r.svg"
    assert run(["render", "--rep", str(rep), "--svg", str(svg)], capsys)[0] == 0
    assert svg.read_text().count("<polyline") == 2


def test_crossval_report(tmp_path, capsys):
    out = tmp_path / "report.txt"
    assert run(["crossval", "--max-n", "4", "--grid", "4x4", "--out", str(out)], capsys)[0] == 0
    lines = out.read_text().splitlines()
    assert lines[-1].startswith("#") and all(len(l.split()) == 4 for l in lines[:-1])
