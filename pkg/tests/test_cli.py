import pytest

from ftmd import parse_cotree, realize, from_edges
from ftmd.cli import main


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


@pytest.fixture
def k2_file(tmp_path):
    return write(tmp_path, "k2.txt", "2 1\n0 1\n")


@pytest.fixture
def p3_file(tmp_path):
    return write(tmp_path, "p3.txt", "3 2\n0 1\n1 2\n")


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_k2(capsys, k2_file):
    code, out, _ = run(capsys, ["solve", k2_file])
    assert code == 0
    assert out == "2\n0 1\n"


def test_solve_two_isolated_with_weights(capsys, tmp_path):
    graph = write(tmp_path, "g.txt", "2 0\n")
    weights = write(tmp_path, "w.txt", "0 4\n1 9\n")
    code, out, _ = run(capsys, ["solve", graph, "--weights", weights])
    assert code == 0
    assert out == "13\n0 1\n"


def test_solve_p4_exits_2(capsys, tmp_path):
    graph = write(tmp_path, "p4.txt", "4 3\n0 1\n1 2\n2 3\n")
    code, _, err = run(capsys, ["solve", graph])
    assert code == 2
    assert "not a cograph" in err


def test_solve_cotree_flag(capsys, p3_file):
    code, out, _ = run(capsys, ["solve", p3_file, "--cotree"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "2"
    assert lines[1] == "0 2"
    assert realize(parse_cotree(lines[2])) == from_edges(3, [(0, 1), (1, 2)])


def test_solve_verify_and_oracle(capsys, p3_file):
    code, out, err = run(capsys, ["solve", p3_file, "--verify", "--oracle"])
    assert code == 0
    assert err == ""
    assert out == "2\n0 2\n"


def test_solve_oracle_rejected_beyond_limit(capsys, tmp_path):
    graph = write(tmp_path, "big.txt", "21 0\n")
    code, _, err = run(capsys, ["solve", graph, "--oracle"])
    assert code == 1
    assert "--oracle" in err


def test_solve_is_deterministic(capsys, p3_file):
    _, first, _ = run(capsys, ["solve", p3_file, "--cotree"])
    _, second, _ = run(capsys, ["solve", p3_file, "--cotree"])
    assert first == second


def test_solve_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, ["solve", str(tmp_path / "nope.txt")])
    assert code == 1
    assert "error" in err


@pytest.mark.parametrize(
    "body,fragment",
    [
        ("", "header"),
        ("2\n", "header"),
        ("x y\n", "integers"),
        ("2 1\n", "announces"),
        ("2 1\n0 1\n0 1\n", "announces"),
        ("2 2\n0 1\n0 1\n", "duplicate"),
        ("2 1\n1 0\n", "0 <= u < v"),
        ("2 1\n0 0\n", "0 <= u < v"),
        ("2 1\n0 5\n", "0 <= u < v"),
        ("2 1\n0 one\n", "integers"),
    ],
)
def test_edge_list_parse_errors(capsys, tmp_path, body, fragment):
    graph = write(tmp_path, "bad.txt", body)
    code, _, err = run(capsys, ["solve", graph])
    assert code == 1
    assert "bad.txt:" in err
    assert fragment in err


@pytest.mark.parametrize(
    "body,fragment",
    [
        ("0\n", "'v w'"),
        ("0 1 2\n", "'v w'"),
        ("5 1\n", "out of range"),
        ("0 -1\n", "negative"),
        ("0 1\n0 2\n", "twice"),
        ("0 x\n", "'v w'"),
    ],
)
def test_weight_file_parse_errors(capsys, tmp_path, k2_file, body, fragment):
    weights = write(tmp_path, "w.txt", body)
    code, _, err = run(capsys, ["solve", k2_file, "--weights", weights])
    assert code == 1
    assert fragment in err


def test_comments_and_blank_lines_ignored(capsys, tmp_path):
    graph = write(tmp_path, "g.txt", "# a comment\n\n2 1\n# another\n0 1\n")
    code, out, _ = run(capsys, ["solve", graph])
    assert code == 0
    assert out == "2\n0 1\n"


def test_check_yes(capsys, p3_file):
    code, out, _ = run(capsys, ["check", p3_file, "ft", "0", "2"])
    assert code == 0
    assert out == "YES\n"


def test_check_no_reports_pair(capsys, p3_file):
    code, out, _ = run(capsys, ["check", p3_file, "ft", "0", "1"])
    assert code == 3
    assert out.startswith("NO: ")
    u, v = map(int, out.split(":")[1].split())
    assert (u, v) == (0, 2)


def test_check_modes(capsys, p3_file):
    assert run(capsys, ["check", p3_file, "resolving", "0"])[0] == 0
    assert run(capsys, ["check", p3_file, "2nr", "0", "1", "2"])[0] == 0
    assert run(capsys, ["check", p3_file, "resolving"])[0] == 3


def test_check_out_of_range_vertex(capsys, p3_file):
    code, _, err = run(capsys, ["check", p3_file, "ft", "7"])
    assert code == 1
    assert "out of range" in err


def test_gen_single_vertex(capsys):
    code, out, _ = run(capsys, ["gen", "1", "0"])
    assert code == 0
    assert out == "1 0\n# cotree: L0\n"


def test_gen_deterministic(capsys):
    _, first, _ = run(capsys, ["gen", "9", "3"])
    _, second, _ = run(capsys, ["gen", "9", "3"])
    assert first == second


def test_gen_rejects_zero(capsys):
    code, _, _ = run(capsys, ["gen", "0", "0"])
    assert code == 1


@pytest.mark.parametrize("n,seed", [(2, 0), (7, 1), (12, 5), (20, 9)])
def test_gen_output_feeds_solve(capsys, tmp_path, n, seed):
    code, out, _ = run(capsys, ["gen", str(n), str(seed)])
    assert code == 0
    instance = write(tmp_path, "gen.txt", out)
    code, solved, _ = run(capsys, ["solve", instance, "--verify"])
    assert code == 0
    assert len(solved.splitlines()) == 2
    # The emitted cotree comment matches the emitted edge list.
    cotree_line = out.splitlines()[-1]
    tree = parse_cotree(cotree_line.split(":", 1)[1].strip())
    lines = [l for l in out.splitlines() if not l.startswith("#")]
    n_declared, m_declared = map(int, lines[0].split())
    edges = [tuple(map(int, l.split())) for l in lines[1:]]
    assert len(edges) == m_declared
    assert realize(tree) == from_edges(n_declared, edges)


def test_bench_table_shape(capsys):
    code, out, _ = run(capsys, ["bench", "--max-exp", "10", "--repeats", "1"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n nodes seconds"
    assert len(lines) == 2
    n, nodes, seconds = lines[1].split()
    assert int(n) == 1024
    assert 2 * 1024 - 1 <= int(nodes) <= 3 * 1024 - 2
    assert float(seconds) > 0


def test_bench_rejects_large_exponent(capsys):
    code, _, _ = run(capsys, ["bench", "--max-exp", "21"])
    assert code == 1


def test_usage_error_exits_1(capsys):
    assert main(["frobnicate"]) == 1
    capsys.readouterr()
