"""CLI subcommands, file formats, exit codes, and SVG rendering."""

import xml.etree.ElementTree as ET

import pytest

import treearrange as ta
from treearrange.cli import (
    format_edge_list,
    main,
    parse_arrangement,
    parse_edge_list,
    parse_head_vector,
    run_benchmark,
)
from treearrange.svg import render_svg


SEPARATING_EDGE_FILE = "6\n1 2\n2 3\n3 4\n3 5\n5 6\n"


@pytest.fixture
def sep_file(tmp_path):
    path = tmp_path / "sep.tree"
    path.write_text(SEPARATING_EDGE_FILE)
    return str(path)


@pytest.fixture
def p5_file(tmp_path):
    path = tmp_path / "p5.tree"
    path.write_text(format_edge_list(ta.path_tree(5)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------------
# Formats
# ----------------------------------------------------------------------------

def test_parse_edge_list_with_comments():
    text = "# a comment\n\n5\n1 2  # inline\n2 3\n2 4\n4 5\n"
    tree = parse_edge_list(text)
    assert tree.n == 5
    assert tree.edges == [(1, 2), (2, 3), (2, 4), (4, 5)]


def test_parse_edge_list_errors_carry_line_numbers():
    with pytest.raises(ValueError, match="line 3"):
        parse_edge_list("3\n1 2\n2 x\n")
    with pytest.raises(ValueError, match="line 2: expected 2 fields"):
        parse_edge_list("3\n1 2 3\n2 3\n")
    with pytest.raises(ValueError, match="empty"):
        parse_edge_list("# nothing\n")


def test_parse_head_vector():
    rooted = parse_head_vector("2 0 2 3\n")
    assert rooted.root == 2
    assert rooted.parent[1] == 2 and rooted.parent[4] == 3


def test_parse_head_vector_rejects_multiple_roots():
    with pytest.raises(ValueError, match="exactly one 0"):
        parse_head_vector("0 0 2\n")


def test_parse_head_vector_rejects_extra_lines():
    with pytest.raises(ValueError, match="single line"):
        parse_head_vector("2 0 2\n1 2\n")


def test_parse_arrangement():
    arr = parse_arrangement("1 2\n2 1\n3 3\n", 3)
    assert arr.to_list() == [2, 1, 3]
    with pytest.raises(ValueError, match="listed twice"):
        parse_arrangement("1 2\n1 1\n", 2)
    with pytest.raises(ValueError, match="lists 2"):
        parse_arrangement("1 2\n2 1\n", 3)


def test_edge_list_round_trip(separating_tree):
    assert parse_edge_list(format_edge_list(separating_tree)).edges == separating_tree.edges


# ----------------------------------------------------------------------------
# solve
# ----------------------------------------------------------------------------

def test_solve_planar_path(capsys, p5_file):
    code, out, _ = run(capsys, "solve", p5_file, "--task", "planar")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "D=4"
    assert lines[0].split("\t") == ["1", lines[0].split("\t")[1]]
    assert len(lines) == 6


def test_solve_separating_tree_both_tasks(capsys, sep_file):
    code, out, _ = run(capsys, "solve", sep_file, "--task", "projective", "--root", "4")
    assert code == 0 and out.strip().splitlines()[-1] == "D=7"
    code, out, _ = run(capsys, "solve", sep_file, "--task", "planar")
    assert code == 0 and out.strip().splitlines()[-1] == "D=6"


def test_solve_algorithms_agree_on_cost(capsys, sep_file):
    results = {}
    for algorithm in ("hs", "intervals"):
        code, out, _ = run(capsys, "solve", sep_file, "--algorithm", algorithm)
        assert code == 0
        results[algorithm] = out.strip().splitlines()[-1]
    assert results["hs"] == results["intervals"] == "D=6"


def test_solve_heads_format(capsys, tmp_path):
    # Path 1-2-3-4-5 rooted at 1, written as a head vector.
    path = tmp_path / "heads.txt"
    path.write_text("0 1 2 3 4\n")
    code, out, _ = run(capsys, "solve", str(path), "--format", "heads",
                       "--task", "projective")
    assert code == 0
    assert out.strip().splitlines()[-1] == "D=4"


def test_solve_root_flag_overrides_heads(capsys, tmp_path):
    # Separating tree as a head vector rooted at 1; --root 4 re-roots it,
    # turning the answer from 6 into 7.
    path = tmp_path / "heads.txt"
    path.write_text("0 1 2 3 3 5\n")
    code, out, _ = run(capsys, "solve", str(path), "--format", "heads",
                       "--task", "projective")
    assert code == 0
    assert out.strip().splitlines()[-1] == "D=6"
    code, out, _ = run(capsys, "solve", str(path), "--format", "heads",
                       "--task", "projective", "--root", "4")
    assert code == 0
    assert out.strip().splitlines()[-1] == "D=7"


def test_solve_projective_needs_root(capsys, p5_file):
    code, _, err = run(capsys, "solve", p5_file, "--task", "projective")
    assert code == 1
    assert "root" in err


def test_solve_rejects_bad_root(capsys, p5_file):
    code, _, err = run(capsys, "solve", p5_file, "--task", "projective", "--root", "9")
    assert code == 1
    assert "out of range" in err


def test_solve_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "solve", str(tmp_path / "nope.tree"))
    assert code == 1


def test_usage_error_exits_one(capsys, p5_file):
    assert main(["solve", p5_file, "--task", "bogus"]) == 1
    capsys.readouterr()


# ----------------------------------------------------------------------------
# verify
# ----------------------------------------------------------------------------

def write_arrangement(tmp_path, positions):
    path = tmp_path / "arr.txt"
    path.write_text("".join(f"{v} {p}\n" for v, p in enumerate(positions, start=1)))
    return str(path)


def test_verify_planar_yes(capsys, tmp_path):
    tree = tmp_path / "p4.tree"
    tree.write_text(format_edge_list(ta.path_tree(4)))
    arr = write_arrangement(tmp_path, [1, 2, 3, 4])
    code, out, _ = run(capsys, "verify", str(tree), arr, "--task", "planar")
    assert code == 0
    assert "D=3" in out and "planar: yes" in out


def test_verify_planar_no_with_witness(capsys, tmp_path):
    tree = tmp_path / "z.tree"
    tree.write_text("4\n1 3\n3 2\n2 4\n")
    arr = write_arrangement(tmp_path, [1, 2, 3, 4])
    code, out, _ = run(capsys, "verify", str(tree), arr, "--task", "planar")
    assert code == 2
    assert "planar: no" in out and "crossing:" in out


def test_verify_root_covered(capsys, tmp_path, separating_tree):
    # A planar-optimal arrangement of the separating tree covers vertex 4.
    tree = tmp_path / "sep.tree"
    tree.write_text(SEPARATING_EDGE_FILE)
    optimal = ta.min_planar_arrangement(separating_tree)
    arr = write_arrangement(tmp_path, optimal.to_list())
    code, out, _ = run(capsys, "verify", str(tree), arr,
                       "--task", "projective", "--root", "4")
    assert code == 2
    assert "projective: no (root covered)" in out and "cover: root 4" in out
    # The same arrangement is projective at the centroid.
    code, out, _ = run(capsys, "verify", str(tree), arr,
                       "--task", "projective", "--root", "3")
    assert code == 0
    assert "projective: yes" in out


def test_verify_rejects_non_bijection(capsys, tmp_path):
    tree = tmp_path / "p3.tree"
    tree.write_text(format_edge_list(ta.path_tree(3)))
    arr = write_arrangement(tmp_path, [1, 1, 2])
    code, _, err = run(capsys, "verify", str(tree), arr, "--task", "planar")
    assert code == 1
    assert "twice" in err


# ----------------------------------------------------------------------------
# gen / enum / oracle / separate
# ----------------------------------------------------------------------------

def test_gen_is_deterministic(capsys, tmp_path):
    out1 = tmp_path / "a.tree"
    out2 = tmp_path / "b.tree"
    assert main(["gen", "8", "42", "--out", str(out1)]) == 0
    assert main(["gen", "8", "42", "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert parse_edge_list(out1.read_text()).n == 8
    capsys.readouterr()


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "5", "7")
    assert code == 0
    assert parse_edge_list(out).n == 5


def test_enum_counts(capsys):
    code, out, _ = run(capsys, "enum", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 16
    assert len(set(lines)) == 16


def test_enum_ceiling(capsys):
    code, _, err = run(capsys, "enum", "12")
    assert code == 1


def test_oracle_command(capsys, sep_file):
    code, out, _ = run(capsys, "oracle", sep_file, "--task", "planar")
    assert code == 0
    assert out.strip().splitlines()[-1] == "D=6"
    code, out, _ = run(capsys, "oracle", sep_file, "--task", "projective", "--root", "4")
    assert code == 0
    assert out.strip().splitlines()[-1] == "D=7"


def test_separate_six(capsys):
    code, out, _ = run(capsys, "separate", "6")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "count=1"
    assert "projective=7" in lines[0] and "planar=6" in lines[0]


def test_separate_five_empty(capsys):
    code, out, _ = run(capsys, "separate", "5")
    assert code == 0
    assert out.strip().splitlines()[-1] == "count=0"


# ----------------------------------------------------------------------------
# Round trip: gen -> solve -> verify
# ----------------------------------------------------------------------------

@pytest.mark.parametrize("task,extra", [("planar", []), ("projective", ["--root", "1"])])
def test_gen_solve_verify_round_trip(capsys, tmp_path, task, extra):
    tree_path = tmp_path / "t.tree"
    assert main(["gen", "9", "3", "--out", str(tree_path)]) == 0
    code, out, _ = run(capsys, "solve", str(tree_path), "--task", task, *extra)
    assert code == 0
    lines = out.strip().splitlines()
    arr_path = tmp_path / "arr.txt"
    arr_path.write_text("".join(line.replace("\t", " ") + "\n" for line in lines[:-1]))
    code, out, _ = run(capsys, "verify", str(tree_path), str(arr_path),
                       "--task", task, *extra)
    assert code == 0
    assert f"{task}: yes" in out


# ----------------------------------------------------------------------------
# bench
# ----------------------------------------------------------------------------

def test_run_benchmark_structure():
    rows = run_benchmark([200, 400], trials=2, seed=1)
    assert len(rows) == 8  # 2 families x 2 sizes x 2 algorithms
    by_key = {(r.family, r.algorithm, r.n): r for r in rows}
    assert by_key[("random", "hs", 200)].ratio is None
    assert by_key[("random", "hs", 400)].ratio is not None
    assert all(r.mean_seconds >= 0 for r in rows)


def test_run_benchmark_rejects_unsorted():
    with pytest.raises(ValueError, match="ascending"):
        run_benchmark([400, 200], trials=1, seed=0)


def test_bench_command_output(capsys):
    code, out, _ = run(capsys, "bench", "--sizes", "100", "200", "--trials", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["family", "algorithm", "n", "mean_s", "ratio"]
    assert len(lines) == 9


# ----------------------------------------------------------------------------
# render / SVG
# ----------------------------------------------------------------------------

def test_render_svg_structure(p3):
    arr = ta.min_planar_arrangement(p3)
    svg = render_svg(p3, arr)
    root = ET.fromstring(svg)
    tag = root.tag.split("}")[-1]
    assert tag == "svg"
    kinds = [child.tag.split("}")[-1] for child in root.iter()]
    assert kinds.count("circle") == 3
    assert kinds.count("path") == 2


def test_render_marks_projective_root(star5):
    rt = ta.RootedTree(star5, 1)
    arr = ta.min_projective_arrangement(rt)
    svg = render_svg(rt, arr)
    root = ET.fromstring(svg)
    circles = [c for c in root.iter() if c.tag.split("}")[-1] == "circle"]
    assert len(circles) == 6  # five dots plus the root ring


def test_render_command(capsys, tmp_path, sep_file):
    out_path = tmp_path / "sep.svg"
    code, _, _ = run(capsys, "render", sep_file, "--task", "projective",
                     "--root", "4", "--out", str(out_path))
    assert code == 0
    ET.fromstring(out_path.read_text())


def test_render_unwritable_path(capsys, sep_file, tmp_path):
    code, _, err = run(capsys, "render", sep_file, "--out",
                       str(tmp_path / "no" / "such" / "dir.svg"))
    assert code == 1
