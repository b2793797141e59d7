import json

from toroidal import Graph, to_edge_list_text, to_graph6
from toroidal.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_builtin_names(capsys):
    code, out, _ = run(capsys, "decide", "--name", "K5", "--name", "G4")
    assert code == 0
    assert "K5: Toroidal Case-i" in out
    assert "G4: NonToroidal FailedMCase" in out


def test_decide_not_in_class_exit_code(capsys):
    code, out, _ = run(capsys, "decide", "--name", "K3,3")
    assert code == 2
    assert "NotInClass" in out


def test_decide_edge_list_file(tmp_path, capsys):
    path = tmp_path / "k5.txt"
    path.write_text(to_edge_list_text(Graph.complete(5)))
    code, out, _ = run(capsys, "decide", str(path))
    assert code == 0 and "Toroidal Case-i" in out


def test_decide_multiple_graphs_blank_line_separated(tmp_path, capsys):
    text = to_edge_list_text(Graph.complete(4)) + "\n" + to_edge_list_text(
        Graph.complete(5)
    )
    path = tmp_path / "two.txt"
    path.write_text(text)
    code, out, _ = run(capsys, "decide", str(path))
    assert code == 0
    assert out.count("Toroidal") == 2


def test_decide_graph6_lines(tmp_path, capsys):
    path = tmp_path / "batch.g6"
    path.write_text(
        to_graph6(Graph.complete(5)) + "\n" + to_graph6(Graph.complete(4)) + "\n"
    )
    code, out, _ = run(capsys, "decide", str(path), "--format", "graph6")
    assert code == 0 and out.count("Toroidal") == 2


def test_decide_garbage_input_exit_one(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("not a graph")
    code, _, err = run(capsys, "decide", str(path))
    assert code == 1 and "input error" in err


def test_decide_json_round_trips(capsys):
    code, out, _ = run(capsys, "decide", "--name", "K5", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["status"] == "Toroidal"
    assert payload[0]["case"] == "Case-i"
    assert json.loads(json.dumps(payload)) == payload


def test_decide_is_deterministic(capsys):
    code1, out1, _ = run(capsys, "decide", "--name", "G3", "--json")
    code2, out2, _ = run(capsys, "decide", "--name", "G3", "--json")
    assert (code1, out1) == (code2, out2)


def test_verify_obstructions_minor(capsys):
    code, out, _ = run(capsys, "verify-obstructions", "--kind", "minor")
    assert code == 0
    assert out.count("PASS") == 4 and "FAIL" not in out


def test_verify_obstructions_json(capsys):
    code, out, _ = run(capsys, "verify-obstructions", "--kind", "minor", "--json")
    payload = json.loads(out)
    assert payload["failures"] == []
    assert set(payload["reports"]) == {"G1", "G2", "G3", "G4"}


def test_splits_with_k5_seed_is_empty(capsys):
    code, out, _ = run(capsys, "splits", "--seeds", "K5", "--json")
    assert code == 0
    assert json.loads(out)["count"] == 0


def test_genus_k5(capsys):
    code, out, _ = run(capsys, "genus", "--name", "K5")
    assert code == 0 and "genus = 1" in out


def test_genus_count_torus(capsys):
    code, out, _ = run(capsys, "genus", "--name", "K5", "--count-torus")
    assert code == 0 and "torus_embeddings = 6" in out


def test_genus_budget_refusal_exit_three(capsys):
    code, _, err = run(capsys, "genus", "--name", "M")
    assert code == 3 and "budget" in err


def test_genus_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("TOROIDAL_GENUS_BUDGET", "10")
    code, _, err = run(capsys, "genus", "--name", "K5")
    assert code == 3


def test_isomorphic_names(capsys):
    code, out, _ = run(capsys, "isomorphic", "K5", "K5")
    assert code == 0 and out.strip() == "true"


def test_isomorphic_file_vs_name(tmp_path, capsys):
    path = tmp_path / "g.g6"
    path.write_text(to_graph6(Graph.complete(5)))
    code, out, _ = run(capsys, "isomorphic", str(path), "K5")
    assert code == 0 and out.strip() == "true"
    code, out, _ = run(capsys, "isomorphic", str(path), "M")
    assert out.strip() == "false"


def test_stdin_input(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(to_edge_list_text(Graph.complete(4))))
    code, out, _ = run(capsys, "decide")
    assert code == 0 and "AllPlanarBlocks" in out
