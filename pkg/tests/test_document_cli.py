import json
import shutil
import subprocess

import pytest
from hypothesis import given, settings, strategies as st

from facemagic import document as docfmt
from facemagic.cli import EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, main
from facemagic.construct import vall
from facemagic.grid import Dims
from facemagic.labeling import Labeling, LabelingError
from facemagic.transform import permute_column_pairs, swap_rows

from golden import golden_5x5, golden_9x9, golden_15x5


@st.composite
def labelings(draw):
    m, n = draw(st.integers(2, 7)), draw(st.integers(2, 7))
    perm = draw(st.permutations(range(1, m * n + 1)))
    return Labeling(Dims(m, n), tuple(perm))


@settings(max_examples=60, deadline=None)
@given(labelings(), st.sampled_from(["ascending", "descending"]))
def test_document_round_trip(L, order):
    doc = docfmt.LabelingDocument(L, {"S": "7", "generator": "test"})
    back = docfmt.loads(docfmt.dumps(doc, order), order)
    assert back.labeling == L and back.metadata == doc.metadata
    assert docfmt.from_csv(docfmt.to_csv(L, order), order) == L


def test_document_layout():
    text = docfmt.dumps(docfmt.LabelingDocument(golden_5x5(), {"S": "53"}))
    lines = text.splitlines()
    assert lines[:5] == ["m=5", "n=5", "surface=projective", "S=53", ""]
    assert lines[5] == "1 25 2 24 3"
    assert docfmt.dumps(docfmt.LabelingDocument(golden_5x5()), "descending").splitlines()[4] == "11 15 12 14 13"


@pytest.mark.parametrize("text,match", [
    ("m=2\nn=2\n\n1 2\n3 4\n", "surface"),
    ("m=2\nn=2\nsurface=torus\n\n1 2\n3 4\n", "projective"),
    ("m=2\nn=2\nsurface=projective\n\n1 2\n", "rows"),
    ("m=2\nn=2\nsurface=projective\n\n1 2\n3 x\n", ":6"),
    ("m=2\nn=2\nsurface=projective\n\n1 2 3\n4 5 6\n", "expected 2 labels"),
    ("m=2\nm=2\n", "duplicate"),
    ("m=2\nn=2\nsurface=projective\nS=abc\n\n1 2\n3 4\n", "'S'"),
])
def test_malformed_documents(text, match):
    with pytest.raises(docfmt.DocumentError, match=match):
        docfmt.loads(text)


def test_duplicate_label_names_value():
    with pytest.raises(LabelingError, match="4"):
        docfmt.loads("m=2\nn=2\nsurface=projective\n\n1 2\n4 4\n")


def test_render():
    lines = docfmt.render_ascii(golden_5x5()).splitlines()
    assert len(lines) == 5 and lines[0].split() == ["11", "15", "12", "14", "13"]
    table = docfmt.render_ascii(golden_9x9(), table=True).splitlines()
    assert len(table) == 19 and table[0].startswith("+")
    assert table[1].split("|")[1].strip() == str(golden_9x9()(1, 9))
    csv = docfmt.to_csv(golden_9x9()).splitlines()
    assert len(csv) == 9 and all(len(r.split(",")) == 9 for r in csv)


# -- CLI --------------------------------------------------------------------

def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def write(tmp_path, L, name="doc.txt", order="ascending"):
    p = tmp_path / name
    docfmt.dump(docfmt.LabelingDocument(L), p, order)
    return p


def test_construct_goldens(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--orientation", "horizontal", "--sequence", "5,5")
    assert code == EXIT_OK
    doc = docfmt.loads(out)
    assert doc.labeling == golden_5x5() and doc.metadata["S"] == "53"
    out_path = tmp_path / "t1.txt"
    code, _, _ = run(capsys, "construct", "--orientation", "horizontal", "--sequence", "3,3,3,3",
                     "--out", out_path)
    assert code == EXIT_OK and docfmt.load(out_path).labeling == golden_9x9()
    code, out, _ = run(capsys, "construct", "--orientation", "vertical", "--sequence", "5,5")
    assert docfmt.loads(out).labeling.labels == vall(5, 5, 5, 5).labels


@pytest.mark.parametrize("seq,extra", [("4,3", []), ("3,5", ["--m", "5"]), ("1,3", [])])
def test_construct_rejects(capsys, seq, extra):
    code, _, err = run(capsys, "construct", "--orientation", "horizontal", "--sequence", seq, *extra)
    assert code == EXIT_VALIDATION and "validation error" in err


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", write(tmp_path, golden_5x5()))
    rep = json.loads(out)
    assert code == EXIT_OK
    assert (rep["is_magic"], rep["S"], rep["D1"], rep["D2"]) == (True, 53, 14, 14)
    assert rep["bicentrally_balanced"] and rep["standard"]
    code, out, _ = run(capsys, "verify", write(tmp_path, golden_15x5()))
    assert json.loads(out)["S"] == 153


def test_verify_descending_file(capsys, tmp_path):
    p = write(tmp_path, golden_9x9(), order="descending")
    code, out, _ = run(capsys, "verify", "--file-order", "descending", p)
    assert json.loads(out)["S"] == 165


def test_verify_corrupt(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("m=3\nn=3\nsurface=projective\n\n1 2 3\n4 5 6\n7 8 8\n")
    code, _, err = run(capsys, "verify", p)
    assert code == EXIT_VALIDATION and "8" in err
    p.write_text("m=3\nn=3\n\n1 2 3\n")
    code, _, err = run(capsys, "verify", p)
    assert code == EXIT_PARSE and "surface" in err
    code, _, _ = run(capsys, "verify", tmp_path / "missing.txt")
    assert code == EXIT_PARSE


def test_transform(capsys, tmp_path):
    p = write(tmp_path, golden_5x5())
    code, out, _ = run(capsys, "transform", p, "--complement")
    assert code == EXIT_OK and docfmt.loads(out).metadata["S"] == "51"

    once = tmp_path / "h1.txt"
    run(capsys, "transform", p, "--symmetry", "H", "--out", once)
    code, out, _ = run(capsys, "transform", once, "--symmetry", "H")
    assert docfmt.loads(out).labeling == golden_5x5()

    X = swap_rows(permute_column_pairs(golden_9x9(), [3, 4, 1, 2]), [1, 0, 1, 1])
    code, out, _ = run(capsys, "transform", write(tmp_path, X, "pert.txt"), "--standardize")
    assert docfmt.loads(out).labeling == golden_9x9()

    code, _, err = run(capsys, "transform", write(tmp_path, golden_9x9(), "t1.txt"), "--perm-cols", "2,1,3,4")
    assert code == EXIT_VALIDATION and "parity" in err
    code, _, _ = run(capsys, "transform", write(tmp_path, golden_15x5(), "t2.txt"), "--symmetry", "R90")
    assert code == EXIT_VALIDATION


def test_transform_requires_one_op(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["transform", str(write(tmp_path, golden_5x5())), "--complement", "--standardize"])
    assert exc.value.code == 2


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--m", 4, "--n", 4, "--up-to-symmetry")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["total"] == 144 and list(rep["counts"]) == ["34"]
    code, out, _ = run(capsys, "enumerate", "--m", 3, "--n", 3, "--value", 20, "--up-to-symmetry")
    assert json.loads(out)["total"] == 1
    raws = []
    for S in (33, 31):
        code, out, _ = run(capsys, "enumerate", "--m", 3, "--n", 5, "--value", S)
        raws.append(json.loads(out)["total"])
    assert raws[0] == raws[1] == 16


def test_enumerate_emit_dir(capsys, tmp_path):
    d = tmp_path / "reps"
    code, _, _ = run(capsys, "enumerate", "--m", 3, "--n", 5, "--up-to-symmetry", "--emit-dir", d)
    files = sorted(d.iterdir())
    assert code == EXIT_OK and len(files) == 16
    for f in files:
        code, out, _ = run(capsys, "verify", f)
        assert json.loads(out)["is_magic"]


def test_enumerate_budget_exit(capsys):
    code, out, _ = run(capsys, "enumerate", "--m", 3, "--n", 5, "--max-nodes", 500)
    assert code == EXIT_BUDGET and json.loads(out)["complete"] is False


def test_enumerate_workers_env(capsys, monkeypatch):
    monkeypatch.setenv("FACEMAGIC_WORKERS", "2")
    code, out, _ = run(capsys, "enumerate", "--m", 3, "--n", 3)
    assert json.loads(out)["config"]["workers"] == 2
    code, out, _ = run(capsys, "enumerate", "--m", 3, "--n", 3, "--workers", 1)
    assert json.loads(out)["config"]["workers"] == 1


@pytest.mark.parametrize("m,n,expected", [
    (9, 9, {"tau_mn": 3, "beta_m": 4, "count_value_mid": 110592, "lower_bound_value_plus": 3072}),
    (3, 5, {"count_value_mid": 8, "lower_bound_value_plus": 4, "lower_bound_total": 16}),
    (3, 3, {"count_value_mid": 1, "lower_bound_value_plus": 1, "lower_bound_total": 3}),
])
def test_count(capsys, m, n, expected):
    code, out, _ = run(capsys, "count", "--m", m, "--n", n)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert {k: rep[k] for k in expected} == expected


def test_count_rejects_even(capsys):
    code, _, _ = run(capsys, "count", "--m", 4, "--n", 3)
    assert code == EXIT_VALIDATION


def test_render_cli(capsys, tmp_path):
    p = write(tmp_path, golden_5x5())
    code, out, _ = run(capsys, "render", p)
    assert out.splitlines()[0].split() == ["11", "15", "12", "14", "13"]
    code, out, _ = run(capsys, "render", write(tmp_path, golden_9x9(), "t1.txt"), "--format", "csv")
    assert len(out.splitlines()) == 9
    assert docfmt.from_csv(out) == golden_9x9()
    code, out, _ = run(capsys, "render", p, "--table-order")
    assert out.startswith("+")


def test_conjecture_cli(capsys):
    code, out, _ = run(capsys, "conjecture", "--m", 3, "--n", 5)
    assert code == EXIT_OK and json.loads(out)["verdict"] == "equal"


@pytest.mark.skipif(shutil.which("facemagic") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["facemagic", "count", "--m", "3", "--n", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["count_value_mid"] == 1
