"""Command-line behaviour: outputs, exit codes, catalogue stability."""

import io

from saalg.cli import main


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_classify_file(tmp_path):
    p = tmp_path / "p22_r2.saa"
    p.write_text("GF(5)\nn=5\n"
                 "xyy 3 4 5 = 2\nxyy 2 3 5 = 1\n"
                 "xyy 1 3 4 = 1\nyyy 1 2 3 = 1\n")
    code, out, err = run(["classify", "--field", "GF(5)",
                          "--file", str(p)])
    assert code == 0
    assert out.splitlines()[0] == "P2_2(2)"
    # witness matrix rows follow
    assert len(out.splitlines()) == 11


def test_count_single_field():
    code, out, _ = run(["count", "--family", "P2_4", "--field", "GF(23)"])
    assert code == 0
    assert out.strip() == "11"


def test_count_multi_field_tsv():
    code, out, _ = run(["count", "--family", "P2_2", "--field", "GF(3)",
                        "--field", "GF(5)", "--format", "tsv"])
    assert code == 0
    assert out == "GF(3)\t2\nGF(5)\t4\n"


def test_verify_zero_algebra(tmp_path):
    p = tmp_path / "zero.saa"
    p.write_text("GF(3)\nn=5\n")
    code, out, _ = run(["verify", "--file", str(p)])
    assert code == 0
    assert out.strip() == "pass"


def test_verify_family():
    code, out, _ = run(["verify", "--family", "P2_6", "--field", "GF(7)",
                        "--params", "3"])
    assert code == 0 and out.strip() == "pass"


def test_report_text():
    code, out, _ = run(["report", "--family", "P2_3", "--field", "GF(3)"])
    assert code == 0
    assert "class: 7" in out
    assert "centre dim: 2 (isotropic)" in out


def test_iso_verdicts():
    code, out, _ = run(["iso", "--field", "GF(5)", "--family", "P2_2",
                        "--params", "1", "--family", "P2_2",
                        "--params", "2"])
    assert code == 0 and out.startswith("not isomorphic")
    code, out, _ = run(["iso", "--field", "GF(3)", "--family", "P2_4",
                        "--params", "1", "--family", "P2_4",
                        "--params", "2"])
    assert code == 0 and out.startswith("isomorphic")


def test_scramble_roundtrip():
    code, out, _ = run(["scramble-roundtrip", "--family", "P2_1",
                        "--field", "GF(3)", "--seed", "7"])
    assert code == 0
    assert out.startswith("ok")


def test_catalogue_byte_stable():
    runs = [run(["catalogue", "--field", "GF(5)", "--format", "tsv"])
            for _ in range(2)]
    assert runs[0] == runs[1]
    code, out, _ = runs[0]
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["family", "params", "centre_dim",
                                    "class", "type", "series_dims"]
    assert len(lines) == 12  # header + all eleven families
    assert any(row.startswith("P4_4") and "\tC\t" in row for row in lines)


def test_invalid_quadratic_is_domain_error():
    code, out, err = run(["classify", "--field", "GF(5)",
                          "--family", "P4_4", "--params", "0,1"])
    assert code == 1
    assert "reducible" in err


def test_usage_errors():
    code, _, err = run(["classify"])
    assert code == 2 and err
    code, _, err = run(["classify", "--field", "GF(6)",
                        "--family", "P2_1"])
    assert code == 2 and "GF(6)" in err
    code, _, err = run(["count", "--family", "nope", "--field", "GF(3)"])
    assert code == 2
    code, _, err = run([])
    assert code == 2


def test_malformed_file_names_line(tmp_path):
    p = tmp_path / "bad.saa"
    p.write_text("GF(3)\nn=5\nxyy 1 2 = 1\n")
    code, _, err = run(["verify", "--file", str(p)])
    assert code == 2
    assert "xyy 1 2 = 1" in err


def test_unreadable_file():
    code, _, err = run(["verify", "--file", "/does/not/exist.saa"])
    assert code == 2 and "exist.saa" in err


def test_field_mismatch(tmp_path):
    p = tmp_path / "a.saa"
    p.write_text("GF(3)\nn=5\n")
    code, _, err = run(["verify", "--file", str(p), "--field", "GF(5)"])
    assert code == 2 and "GF(3)" in err


def test_count_infinite_field_domain_error():
    code, _, err = run(["count", "--family", "P2_2", "--field", "Q"])
    assert code == 1
