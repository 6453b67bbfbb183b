import json
from concurrent.futures import ThreadPoolExecutor

import pytest
from fastapi.testclient import TestClient

from stylemeter.metrics import h_re
from stylemeter.service import create_app, round12
from stylemeter.text import tokenize


@pytest.fixture(scope="module")
def client(sent_engine):
    app = create_app(
        sent_engine,
        config_echo={"style": "sentiment", "temperature": 0.01},
        fingerprints={"pivots": "abc123"},
    )
    return TestClient(app)


# source uses only in-vocabulary words so the identity pair scores r_cons = 1
REQUEST = {
    "source": "the food staff really decent quite.",
    "generated": "the food staff outstanding absolutely amazing.",
    "target_level": 5,
    "style": "sentiment",
}


def expected_response(engine, request):
    breakdown = engine.breakdown(request["source"], request["generated"],
                                 request["target_level"])
    quality = h_re(
        tokenize(request["generated"]), request["target_level"],
        model=engine.pivots, judge=engine.judge, cfg=engine.config,
    )
    verdict = engine.judge_text(request["generated"])
    return {
        "r_sent": round12(breakdown.r_sent),
        "r_lex": round12(breakdown.r_lex),
        "r_cons": round12(breakdown.r_cons),
        "total": round12(breakdown.total),
        "h_re": round12(quality),
        "judge": {
            "mode": verdict.mode,
            "predicted_level": verdict.predicted_level,
            "distribution": [round12(p) for p in verdict.distribution],
            "levels": list(verdict.levels),
        },
    }


def test_health(client):
    response = client.get("/v1/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"
    assert body["style"] == "sentiment"
    assert body["levels"] == [1, 2, 3, 4, 5]
    assert body["fingerprints"] == {"pivots": "abc123"}
    assert body["config"]["temperature"] == 0.01


def test_reward_matches_in_process(client, sent_engine):
    response = client.post("/v1/reward", json=REQUEST)
    assert response.status_code == 200
    assert response.json() == expected_response(sent_engine, REQUEST)


def test_reward_identity_consistency(client):
    request = {**REQUEST, "generated": REQUEST["source"]}
    response = client.post("/v1/reward", json=request)
    assert response.status_code == 200
    assert response.json()["r_cons"] == 1.0


def test_reward_deterministic(client):
    first = client.post("/v1/reward", json=REQUEST)
    second = client.post("/v1/reward", json=REQUEST)
    assert first.content == second.content


def test_malformed_request_is_400(client):
    assert client.post("/v1/reward", json={"nope": 1}).status_code == 400
    assert client.post("/v1/reward", content=b"not json",
                       headers={"content-type": "application/json"}).status_code == 400


def test_unknown_level_is_422(client):
    assert client.post("/v1/reward", json={**REQUEST, "target_level": 9}).status_code == 422


def test_unknown_style_is_422(client):
    assert client.post("/v1/reward", json={**REQUEST, "style": "formality"}).status_code == 422


def test_mismatched_style_is_422(client):
    assert client.post("/v1/reward", json={**REQUEST, "style": "readability"}).status_code == 422


def test_batch_of_one_equals_single(client):
    single = client.post("/v1/reward", json=REQUEST).json()
    batch = client.post("/v1/reward/batch", json={"requests": [REQUEST]}).json()
    assert batch["responses"] == [single]


def test_batch_partial_errors_in_band(client):
    bad = {**REQUEST, "target_level": 9}
    response = client.post("/v1/reward/batch", json={"requests": [REQUEST, bad, REQUEST]})
    assert response.status_code == 200
    responses = response.json()["responses"]
    assert "error" in responses[1]
    assert responses[0] == responses[2]
    assert "total" in responses[0]


def test_batch_limit_413(sent_engine):
    app = create_app(sent_engine, batch_limit=2)
    limited = TestClient(app)
    response = limited.post("/v1/reward/batch", json={"requests": [REQUEST] * 3})
    assert response.status_code == 413


def test_judge_endpoint(client, sent_engine):
    response = client.post("/v1/judge", json={"text": "terrible awful food."})
    assert response.status_code == 200
    body = response.json()
    verdict = sent_engine.judge_text("terrible awful food.")
    assert body["predicted_level"] == verdict.predicted_level == 1
    assert body["mode"] == "classification"


def test_judge_style_mismatch(client):
    response = client.post("/v1/judge", json={"text": "x", "style": "readability"})
    assert response.status_code == 422


def test_not_loaded_503():
    missing = TestClient(create_app(None))
    assert missing.post("/v1/reward", json=REQUEST).status_code == 503
    assert missing.get("/v1/health").status_code == 503
    assert missing.post("/v1/judge", json={"text": "x"}).status_code == 503
    assert missing.post("/v1/reward/batch", json={"requests": []}).status_code == 503


def test_concurrent_requests_identical(client, sent_engine):
    requests = [
        {**REQUEST, "target_level": level} for level in (1, 2, 3, 4, 5)
    ]
    expected = {json.dumps(r, sort_keys=True): expected_response(sent_engine, r)
                for r in requests}

    def call(request):
        response = client.post("/v1/reward", json=request)
        return request, response.json()

    with ThreadPoolExecutor(max_workers=8) as pool:
        for request, body in pool.map(call, requests * 8):
            assert body == expected[json.dumps(request, sort_keys=True)]
