"""CLI subcommands: exit codes, reports, witnesses, and output determinism."""

import json

import pytest

import skewbrace as sb
from skewbrace.braces import brace_to_json, brace_to_text
from skewbrace.cli import main

XOR_BRACE_JSON = json.dumps(
    {
        "n": 4,
        "dot": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]],
        "circ": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    }
)

BAD_PAIR_JSON = json.dumps(
    {
        "n": 4,
        "dot": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]],
        "circ": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1]],
    }
)

NOT_A_GROUP_JSON = json.dumps(
    {
        "n": 2,
        "dot": [[0, 1], [1, 0]],
        "circ": [[0, 1], [1, 1]],
    }
)


@pytest.fixture
def xor_file(tmp_path):
    path = tmp_path / "xor.json"
    path.write_text(XOR_BRACE_JSON)
    return str(path)


def test_verify_pass(xor_file, capsys):
    assert main(["verify", xor_file]) == 0
    out = capsys.readouterr().out
    assert "compatibility: PASS" in out
    assert "inverse product (Lemma 1): PASS" in out
    assert "sigma homomorphism (Proposition 1): PASS" in out
    assert "tau anti-homomorphism (Proposition 2): PASS" in out
    assert "product preservation: PASS" in out
    assert "FAIL" not in out


def test_verify_pass_text_format(tmp_path, capsys, xor_brace):
    path = tmp_path / "xor.txt"
    path.write_text(brace_to_text(xor_brace))
    assert main(["verify", str(path)]) == 0
    assert "compatibility: PASS" in capsys.readouterr().out


def test_verify_bad_pair_exits_1_with_witness(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(BAD_PAIR_JSON)
    assert main(["verify", str(path)]) == 1
    out = capsys.readouterr().out
    assert "compatibility: FAIL witness=(2, 1, 1)" in out


def test_verify_all_witnesses_streams_more(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(BAD_PAIR_JSON)
    assert main(["verify", str(path), "--all-witnesses"]) == 1
    out = capsys.readouterr().out
    assert out.count("compatibility: FAIL") > 1


def test_verify_non_group_exits_2(tmp_path, capsys):
    path = tmp_path / "notgroup.json"
    path.write_text(NOT_A_GROUP_JSON)
    assert main(["verify", str(path)]) == 2
    assert "not a permutation" in capsys.readouterr().err


def test_verify_missing_file_exits_2(tmp_path):
    assert main(["verify", str(tmp_path / "absent.json")]) == 2


def test_maps_trivial_identity(tmp_path, capsys):
    z3 = sb.cyclic_group(3)
    path = tmp_path / "triv.json"
    path.write_text(brace_to_json(sb.trivial_brace(z3)))
    assert main(["maps", str(path)]) == 0
    out = capsys.readouterr().out
    for x in range(3):
        assert f"sigma[{x}] = 0 1 2" in out


def test_maps_single_element(xor_file, capsys):
    assert main(["maps", xor_file, "--element", "1"]) == 0
    out = capsys.readouterr().out
    assert "sigma[1] = 0 3 2 1" in out
    assert "sigma[2]" not in out


def test_maps_out_of_range_exits_2(xor_file):
    assert main(["maps", xor_file, "--element", "7"]) == 2


def test_maps_json_format(xor_file, capsys):
    assert main(["maps", xor_file, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["n"] == 4
    assert payload["maps"][1]["sigma"] == [0, 3, 2, 1]


def test_rmap_json(xor_file, capsys, xor_brace):
    assert main(["r-map", xor_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == json.loads(sb.rmap_to_json(sb.build_r(xor_brace)))
    assert payload["r"][1][1] == [3, 3]


def test_rmap_csv_row_count(xor_file, capsys):
    assert main(["r-map", xor_file, "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 16


def test_rmap_bit_exact_across_runs(xor_file, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert main(["r-map", xor_file, "--output", str(out1)]) == 0
    assert main(["r-map", xor_file, "--output", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_check_ybe_on_brace_file(xor_file, capsys):
    assert main(["check-ybe", xor_file]) == 0
    out = capsys.readouterr().out
    assert "yang-baxter: PASS" in out
    assert "nondegenerate: yes" in out
    assert "bijective: yes" in out


def test_check_ybe_on_swap_rmap_file(tmp_path):
    path = tmp_path / "swap.json"
    path.write_text(sb.rmap_to_json(sb.swap_map(3)))
    assert main(["check-ybe", str(path)]) == 0


def test_check_ybe_perturbed_map_exits_1(tmp_path, capsys):
    perturbed = sb.YbeMap(2, (((1, 0), (0, 0)), ((0, 1), (1, 1))))
    path = tmp_path / "bad_r.json"
    path.write_text(sb.rmap_to_json(perturbed))
    assert main(["check-ybe", str(path)]) == 1
    assert "yang-baxter: FAIL witness=(0, 0, 0)" in capsys.readouterr().out


def test_check_ybe_all_witnesses(tmp_path, capsys):
    perturbed = sb.YbeMap(2, (((1, 0), (0, 0)), ((0, 1), (1, 1))))
    path = tmp_path / "bad_r.json"
    path.write_text(sb.rmap_to_json(perturbed))
    assert main(["check-ybe", str(path), "--all-witnesses"]) == 1
    assert capsys.readouterr().out.count("FAIL") > 1


def test_check_ybe_jobs(xor_file):
    assert main(["check-ybe", xor_file, "--jobs", "2"]) == 0


def test_enumerate_order1(tmp_path, capsys):
    out = tmp_path / "cat.json"
    assert main(["enumerate", "--order", "1", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["count"] == 1
    err = capsys.readouterr().err
    assert "order=1 raw=1 iso=1 elapsed=" in err


def test_enumerate_order3_up_to_iso(tmp_path):
    out = tmp_path / "cat.json"
    assert main(["enumerate", "--order", "3", "--up-to-iso", "--output", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["count"] == 1
    assert payload["up_to_iso"] is True


def test_enumerate_oracle_matches_search(tmp_path):
    a = tmp_path / "search.json"
    b = tmp_path / "oracle.json"
    assert main(["enumerate", "--order", "4", "--output", str(a)]) == 0
    assert main(["enumerate", "--order", "4", "--oracle", "--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_enumerate_byte_identical_across_runs_and_jobs(tmp_path):
    outs = []
    for i, jobs in enumerate(("1", "2", "1")):
        path = tmp_path / f"cat{i}.json"
        assert (
            main(
                ["enumerate", "--order", "4", "--up-to-iso", "--jobs", jobs,
                 "--output", str(path)]
            )
            == 0
        )
        outs.append(path.read_bytes())
    assert outs[0] == outs[1] == outs[2]


def test_enumerate_order_too_large():
    assert main(["enumerate", "--order", "9"]) == 2
    assert main(["enumerate", "--order", "6", "--oracle"]) == 2


def test_enumerate_summary_counts(tmp_path, capsys):
    out = tmp_path / "cat.json"
    assert main(["enumerate", "--order", "4", "--output", str(out)]) == 0
    err = capsys.readouterr().err
    assert "order=4 raw=6 iso=4 elapsed=" in err
    payload = json.loads(out.read_text())
    assert payload["count_raw"] == 6
    assert payload["count_up_to_iso"] == 4
