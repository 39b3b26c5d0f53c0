"""The rw command line: subcommands, files, exit codes."""

import random
import subprocess
import sys

import pytest

from bipartite_ramsey import (
    RED,
    complete_bipartite,
    constant_coloring,
    random_coloring,
    set_bipartite,
)
from bipartite_ramsey.cli import main
from bipartite_ramsey.formats import (
    certificate_from_text,
    coloring_to_text,
    graph_to_text,
    subset_coloring_from_text,
)
from conftest import position_rule_coloring


def write(path, text):
    path.write_text(text)
    return str(path)


@pytest.fixture
def single_edge_pattern(tmp_path):
    return write(tmp_path / "pattern.txt", "bipartite 1 1\ne 1 1\n")


def test_build_complete(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert main(["build", "complete", "--n", "3", "--k", "3", "-o", str(out)]) == 0
    assert out.read_text() == graph_to_text(complete_bipartite(3, 3))


def test_build_setgraph_stdout(capsys):
    assert main(["build", "setgraph", "--n", "4", "--k", "2"]) == 0
    captured = capsys.readouterr()
    assert captured.out.splitlines()[0] == "bipartite 4 6"
    assert "rlabel 1 1,2" in captured.out


def test_build_bad_parameters(capsys):
    assert main(["build", "setgraph", "--n", "2", "--k", "5"]) == 3


def test_embed_and_verify(tmp_path, single_edge_pattern):
    cert = tmp_path / "cert.txt"
    assert main(["embed", single_edge_pattern, "-o", str(cert)]) == 0
    assert main(["verify", str(cert)]) == 0


def test_extract_complete_and_verify(tmp_path):
    g = complete_bipartite(32, 4)
    coloring = random_coloring(g, random.Random(2))
    colfile = write(tmp_path / "col.txt", coloring_to_text(coloring))
    cert = tmp_path / "cert.txt"
    dot = tmp_path / "out.dot"
    code = main(
        ["extract-complete", colfile, "--a", "2", "--b", "2", "-o", str(cert), "--dot", str(dot)]
    )
    assert code == 0
    assert main(["verify", str(cert)]) == 0
    assert "graph" in dot.read_text()


def test_verify_rejects_tampered_certificate(tmp_path):
    g = complete_bipartite(32, 4)
    coloring = constant_coloring(g, RED)
    colfile = write(tmp_path / "col.txt", coloring_to_text(coloring))
    cert = tmp_path / "cert.txt"
    assert main(["extract-complete", colfile, "--a", "2", "--b", "2", "-o", str(cert)]) == 0
    # Claim BLUE instead of RED: still well-formed, no longer valid.
    tampered = cert.read_text().replace("witness R", "witness B")
    bad = write(tmp_path / "bad.txt", tampered)
    assert main(["verify", bad]) == 1


def test_verify_malformed_certificate(tmp_path):
    bad = write(tmp_path / "bad.txt", "witness R\nwleft 1 1\n")
    assert main(["verify", bad]) == 3


def test_derive_find_extract_chain(tmp_path, capsys):
    host = set_bipartite(9, 3)
    coloring = position_rule_coloring(host, RED, (1, 3))
    colfile = write(tmp_path / "col.txt", coloring_to_text(coloring))

    scfile = tmp_path / "sc.txt"
    assert main(["derive-coloring", colfile, "--b", "2", "-o", str(scfile)]) == 0
    sc = subset_coloring_from_text(scfile.read_text())
    assert sc.n == 9 and sc.arity == 3 and sc.palette_size == 6

    homfile = tmp_path / "hom.txt"
    assert main(["find-homogeneous", str(scfile), "--s", "9", "-o", str(homfile)]) == 0
    text = homfile.read_text()
    assert text.splitlines()[0] == "homogeneous 1 2 3 4 5 6 7 8 9"

    members = write(tmp_path / "H.txt", " ".join(text.split()[1:10]))
    cert = tmp_path / "cert.txt"
    code = main(
        ["extract-induced", colfile, "--a", "4", "--b", "2", "--homogeneous", members,
         "-o", str(cert)]
    )
    assert code == 0
    assert main(["verify", str(cert)]) == 0
    _, _, witness = certificate_from_text(cert.read_text())
    assert witness.host_left == (2, 4, 6, 8)


def test_find_homogeneous_absent(tmp_path):
    host = set_bipartite(6, 3)
    coloring = random_coloring(host, random.Random(8))
    colfile = write(tmp_path / "col.txt", coloring_to_text(coloring))
    scfile = tmp_path / "sc.txt"
    assert main(["derive-coloring", colfile, "--b", "2", "-o", str(scfile)]) == 0
    assert main(["find-homogeneous", str(scfile), "--s", "6"]) == 1


def test_find_induced_pipeline(tmp_path, single_edge_pattern):
    host = set_bipartite(7, 3)
    colfile = write(
        tmp_path / "col.txt", coloring_to_text(constant_coloring(host, RED))
    )
    cert = tmp_path / "cert.txt"
    assert main(["find-induced", single_edge_pattern, colfile, "-o", str(cert)]) == 0
    assert main(["verify", str(cert)]) == 0


def test_find_induced_absent(tmp_path, single_edge_pattern):
    host = set_bipartite(6, 3)
    colfile = write(
        tmp_path / "col.txt",
        coloring_to_text(random_coloring(host, random.Random(3))),
    )
    assert main(["find-induced", single_edge_pattern, colfile]) == 1


def test_ramsey_number_exit_codes(capsys, monkeypatch):
    assert main(["ramsey-number", "--arity", "2", "--palette", "2", "--size", "3", "--max-n", "6"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main(["ramsey-number", "--arity", "2", "--palette", "2", "--size", "3", "--max-n", "5"]) == 1
    monkeypatch.setenv("RW_BUDGET", "50")
    assert main(["ramsey-number", "--arity", "2", "--palette", "2", "--size", "4", "--max-n", "9"]) == 2


def test_params_output(tmp_path, capsys):
    pattern = write(
        tmp_path / "p.txt", "bipartite 3 2\ne 1 1\ne 2 1\ne 3 1\ne 1 2\ne 3 2\n"
    )
    assert main(["params", pattern]) == 0
    lines = dict(
        line.split(None, 1) for line in capsys.readouterr().out.splitlines()
    )
    assert lines["a"] == "8" and lines["b"] == "4"
    assert lines["s"] == "35" and lines["palette"] == "70"
    assert lines["n"] == "R_{7,70}(35)"


def test_dot_subcommand(tmp_path, capsys):
    gfile = write(tmp_path / "g.txt", graph_to_text(set_bipartite(4, 2)))
    assert main(["dot", gfile]) == 0
    out = capsys.readouterr().out
    assert out.count(" -- ") == 12


def test_missing_file_is_input_error(capsys):
    assert main(["params", "/no/such/file.txt"]) == 3


def test_console_script_installed():
    proc = subprocess.run(
        [sys.executable, "-m", "bipartite_ramsey.cli", "build", "complete", "--n", "2", "--k", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "bipartite 2 2"
