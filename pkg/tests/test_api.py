"""
辫群计算 API 测试

测试各接口的正常调用与错误映射（ValueError → 400）
"""

from fastapi.testclient import TestClient

from src.server.api import app

client = TestClient(app)


class TestWordProblemAPI:
    """字问题与序"""

    def test_normal_form(self):
        response = client.post("/api/normal-form", json={"word": "s2 s1 s1 s2^-1", "n": 3})

        assert response.status_code == 200
        data = response.json()
        assert data["type"] == "normal_form"
        details = data["details"]
        assert details["normal_form"] == "D^-1 | 3 1 2 | 1 3 2 | 2 3 1"
        assert details["delta_power"] == -1
        assert details["permutation"] == [1, 2, 3]

    def test_equal(self):
        request_data = {"left": "s1 s2 s1", "right": "s2 s1 s2", "n": 3}
        response = client.post("/api/equal", json=request_data)

        assert response.status_code == 200
        assert response.json()["details"]["equal"] is True

    def test_compare(self):
        response = client.post("/api/compare", json={"left": "", "right": "s1", "n": 3})
        assert response.json()["details"]["verdict"] == "less"

        response = client.post(
            "/api/compare", json={"left": "s1", "right": "s2", "n": 3, "order": "partial"}
        )
        assert response.json()["details"]["verdict"] == "incomparable"

    def test_parse_error_is_400(self):
        response = client.post("/api/normal-form", json={"word": "x1"})
        assert response.status_code == 400

    def test_strand_mismatch_is_400(self):
        response = client.post("/api/equal", json={"left": "s3", "right": "s1", "n": 3})
        assert response.status_code == 400


class TestSubgroupAPI:
    """中间子群"""

    def test_member(self):
        request_data = {"beta": "s1 s2", "word": "s2 s1", "n": 3}
        response = client.post("/api/subgroup/member", json=request_data)

        assert response.status_code == 200
        details = response.json()["details"]
        assert details["member"] is True
        assert details["subgroup"]["order"] == 3

    def test_canonical(self):
        response = client.post("/api/subgroup/canonical", json={"cycle_type": [3, 2], "n": 5})

        assert response.status_code == 200
        assert response.json()["details"]["word"] == "s1 s2 s4"

    def test_canonical_too_large(self):
        response = client.post("/api/subgroup/canonical", json={"cycle_type": [3, 3], "n": 5})
        assert response.status_code == 400


class TestWitnessAPI:
    """非双序证书"""

    def test_witness_and_verify(self):
        response = client.post("/api/witness", json={"beta": "s1 s2", "n": 3})

        assert response.status_code == 200
        details = response.json()["details"]
        assert details["certificate"]["case"] == "ThreeCycleN3"
        assert details["certificate"]["verified"] is True
        assert all(check["passed"] for check in details["checks"])
        assert "execution_time" in details["metadata"]

        response = client.post(
            "/api/witness/verify", json={"certificate": details["certificate"]}
        )
        assert response.status_code == 200
        assert response.json()["details"]["verified"] is True

    def test_witness_pure_beta(self):
        response = client.post("/api/witness", json={"beta": "s1 s1", "n": 3})
        assert response.status_code == 400

    def test_verify_malformed_certificate(self):
        response = client.post("/api/witness/verify", json={"certificate": {"n": 3}})
        assert response.status_code == 400

    def test_identities(self):
        response = client.get("/api/identities", params={"n_max": 4})

        assert response.status_code == 200
        details = response.json()["details"]
        assert details["all_passed"] is True
        assert details["failures"] == []

    def test_root(self):
        response = client.get("/")
        assert response.status_code == 200
        assert "witness" in response.json()["endpoints"]
