import json
from cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_single_row(capsys):
    code, out, _ = run(capsys, "table", "--s", "2", "--delta", "3", "--b", "0")
    assert code == 0
    assert out.splitlines() == ["delta,b,singleton,eq33,delsarte,exact_dim,beats_delsarte", "3,0,4,2,2,,false"]


def test_table_appendix_preset(capsys):
    code, out, _ = run(capsys, "table", "--s", "4", "--preset", "appendix")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 25
    assert "5,1,26,18,14,,true" in lines


def test_table_default_rows(capsys):
    code, out, _ = run(capsys, "table", "--s", "1")
    assert code == 0
    assert out.splitlines()[1:] == ["2,0,1,1,1,,false", "2,1,1,1,1,,false"]


def test_table_to_file(capsys, tmp_path):
    path = tmp_path / "table.csv"
    code, out, _ = run(capsys, "table", "--s", "2", "--exact", "--output", str(path))
    assert code == 0
    assert out == ""
    assert "3,0,4,2,2,2,false" in path.read_text().splitlines()


def test_invalid_prime(capsys):
    code, _, err = run(capsys, "tower", "--p", "4", "--s", "2")
    assert code == 2
    error = json.loads(err.strip().splitlines()[-1])
    assert error["error"] == "NonPrimeP"
    assert error["exit_code"] == 2


def test_tower(capsys):
    code, out, _ = run(capsys, "tower", "--s", "2")
    assert code == 0
    assert json.loads(out)["modulus"] == "10011"


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", "--s", "2", "--delta", "3")
    assert code == 0
    result = json.loads(out)
    assert result["min_distance"] >= 3
    assert result["dimension"] == 2


def test_budget_exceeded(capsys):
    code, _, err = run(capsys, "mindist", "--s", "2", "--delta", "3", "--budget", "1")
    assert code == 3
    assert json.loads(err.strip().splitlines()[-1])["error"] == "BudgetExceeded"


def test_encode_zero_message(capsys):
    code, out, _ = run(capsys, "encode", "--s", "2", "--delta", "3", "0000", "0000")
    assert code == 0
    assert json.loads(out)["codeword"] == ["0000"] * 6


def test_construct_then_decode(capsys, tmp_path):
    path = tmp_path / "code.json"
    code, _, _ = run(capsys, "construct", "--s", "2", "--delta", "3", "--output", str(path))
    assert code == 0
    record = json.loads(path.read_text())
    row = record["generator_matrix"][0]
    code, out, _ = run(capsys, "decode", "--code", str(path), *row)
    assert code == 0
    result = json.loads(out)
    assert result["codeword"] == row
    assert result["error_weight"] == 0


def test_missing_delta(capsys):
    code, _, err = run(capsys, "construct", "--s", "2")
    assert code == 2
    assert json.loads(err.strip().splitlines()[-1])["error"] == "SumRankError"


def last_error(err):
    return json.loads(err.strip().splitlines()[-1])


def test_bad_digit_string(capsys):
    code, out, err = run(capsys, "encode", "--s", "2", "--delta", "3", "zz", "0000")
    assert code == 2
    assert out == ""
    assert last_error(err)["error"] == "InvalidVector"


def test_element_outside_field(capsys):
    code, _, err = run(capsys, "decode", "--s", "2", "--delta", "3", "10000", "0", "0", "0", "0", "0")
    assert code == 2
    assert last_error(err)["error"] == "InvalidVector"


def test_missing_code_file(capsys, tmp_path):
    code, _, err = run(capsys, "encode", "--code", str(tmp_path / "missing.json"), "0000", "0000")
    assert code == 2
    assert last_error(err)["error"] == "InvalidCodeFile"


def test_invalid_code_json(capsys, tmp_path):
    path = tmp_path / "code.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "construct", "--code", str(path))
    assert code == 2
    assert last_error(err)["error"] == "InvalidCodeFile"


def test_code_file_without_record(capsys, tmp_path):
    path = tmp_path / "code.json"
    path.write_text(json.dumps({"delta": 3}))
    code, _, err = run(capsys, "construct", "--code", str(path))
    assert code == 2
    assert last_error(err)["error"] == "InvalidCodeFile"


def test_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "tower", "--s", "2", "--output", str(tmp_path / "missing" / "tower.json"))
    assert code == 2
    assert last_error(err)["error"] == "FileNotFoundError"
