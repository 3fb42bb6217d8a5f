"""
命令行测试

测试子命令输出、批处理模式与退出码约定（0 成功 / 1 领域错误 / 2 解析错误）
"""

import io
import json

from src.cli import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_PARSE_ERROR, main


class TestWordProblemCommands:
    """nf / eq / trivial / perm / cycle-type / exp"""

    def test_nf(self, capsys):
        assert main(["nf", "s2 s1 s1 s2^-1", "--n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "D^-1 | 3 1 2 | 1 3 2 | 2 3 1"

    def test_nf_batch_stdin(self, capsys, monkeypatch):
        """未给出字时从标准输入逐行读取"""
        monkeypatch.setattr("sys.stdin", io.StringIO("s1 s2 s1\n\n# 注释\ns1^-1\n"))
        assert main(["nf", "--n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.split("\n")[:2] == ["D^1", "D^-1 | 3 1 2"]

    def test_eq(self, capsys):
        code = main(["eq", "s1 s2 s1 s2 s1 s2", "s2 s1 s2 s1 s2 s1", "--n", "3"])
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip() == "equal"

    def test_eq_json(self, capsys):
        assert main(["eq", "s1", "s2", "--n", "3", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["equal"] is False

    def test_trivial_both_methods(self, capsys):
        for method in ["garside", "handle"]:
            assert main(["trivial", "s1 s2 s1 s2^-1 s1^-1 s2^-1", "--method", method]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["trivial", "trivial"]

    def test_perm_batch(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("s1 s2\ns1\n"))
        assert main(["perm", "--n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["(1,3,2)", "(1,2)"]

    def test_cycle_type_and_exp(self, capsys):
        assert main(["cycle-type", "s1 s2 s4", "--n", "5"]) == EXIT_OK
        assert main(["exp", "s1 s2^-1 s2^-1"]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["3,2", "-1"]


class TestOtherCommands:
    """cmp / subgroup / forget / lift / sample / identities"""

    def test_cmp(self, capsys):
        assert main(["cmp", "s2", "s1", "--n", "3"]) == EXIT_OK
        assert main(["cmp", "s1", "s2", "--n", "3", "--order", "partial"]) == EXIT_OK
        assert capsys.readouterr().out.split() == ["less", "incomparable"]

    def test_subgroup_member(self, capsys):
        assert main(["subgroup", "member", "s2 s1", "--beta", "s1 s2", "--n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "member"

    def test_subgroup_canon(self, capsys):
        assert main(["subgroup", "canon", "--type", "3,2", "--n", "5"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "s1 s2 s4"

    def test_subgroup_export(self, capsys):
        assert main(["subgroup", "export", "--beta", "s1 s2", "--n", "3"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out) == {"n": 3, "generator_perm": [3, 1, 2], "order": 3}

    def test_subgroup_list(self, capsys):
        assert main(["subgroup", "list", "--n", "3"]) == EXIT_OK
        assert len(json.loads(capsys.readouterr().out)) == 4

    def test_forget(self, capsys):
        assert main(["forget", "s2 s1 s1 s2^-1", "--strand", "2"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "s1 s1"

    def test_lift(self, capsys):
        assert main(["lift", "3", "1", "2"]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "s1 s2"

    def test_sample_is_reproducible(self, capsys):
        main(["sample", "--seed", "5", "--count", "3"])
        first = capsys.readouterr().out
        main(["sample", "--seed", "5", "--count", "3"])
        assert capsys.readouterr().out == first

    def test_identities(self, capsys, tmp_path):
        csv_path = tmp_path / "identities.csv"
        assert main(["identities", "--n-max", "4", "--csv", str(csv_path)]) == EXIT_OK
        assert csv_path.exists()
        assert "✗" not in capsys.readouterr().out


class TestWitnessCommand:
    """witness"""

    def test_witness_json_and_verify_file(self, capsys, tmp_path):
        """JSON 输出可通过 --verify-file 重新验证"""
        assert main(["witness", "--beta", "s1", "--n", "3", "--json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["verified"] is True
        assert data["case"] == "Transposition"
        assert data["x"] == "s1 s2 s2"

        path = tmp_path / "cert.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert main(["witness", "--verify-file", str(path)]) == EXIT_OK
        assert "✗" not in capsys.readouterr().out

    def test_witness_tampered_file(self, capsys, tmp_path):
        main(["witness", "--beta", "s1 s2", "--n", "3", "--json"])
        data = json.loads(capsys.readouterr().out)
        data["y"] = data["x"]
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert main(["witness", "--verify-file", str(path)]) == EXIT_DOMAIN_ERROR

    def test_witness_file_missing_field(self, capsys, tmp_path):
        """缺少字段的证书文件返回领域错误而不是抛出异常"""
        main(["witness", "--beta", "s1", "--n", "3", "--json"])
        data = json.loads(capsys.readouterr().out)
        del data["p"]
        path = tmp_path / "cert.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        assert main(["witness", "--verify-file", str(path)]) == EXIT_DOMAIN_ERROR
        assert "p" in capsys.readouterr().err

    def test_witness_file_not_an_object(self, capsys, tmp_path):
        path = tmp_path / "cert.json"
        path.write_text("[1, 2]", encoding="utf-8")
        assert main(["witness", "--verify-file", str(path)]) == EXIT_DOMAIN_ERROR

    def test_witness_infinite(self, capsys):
        assert main(["witness", "--beta", "s5", "--infinite", "--json"]) == EXIT_OK
        assert json.loads(capsys.readouterr().out)["n"] == 6

    def test_witness_scan(self, capsys):
        assert main(["witness", "--scan", "4", "--quiet", "--json"]) == EXIT_OK
        rows = json.loads(capsys.readouterr().out)
        assert len(rows) == 4 and all(r["通过"] for r in rows)


class TestExitCodes:
    """退出码约定"""

    def test_parse_error(self, capsys):
        assert main(["nf", "x1"]) == EXIT_PARSE_ERROR
        assert "解析错误" in capsys.readouterr().err

    def test_argparse_error(self):
        assert main(["no-such-command"]) == EXIT_PARSE_ERROR

    def test_domain_error_pure_beta(self, capsys):
        assert main(["witness", "--beta", "s1 s1", "--n", "3"]) == EXIT_DOMAIN_ERROR
        assert "错误" in capsys.readouterr().err

    def test_domain_error_index(self):
        assert main(["forget", "s1", "--strand", "5"]) == EXIT_DOMAIN_ERROR
