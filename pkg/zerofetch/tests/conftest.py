from __future__ import annotations

import json
from pathlib import Path

import httpx
import pytest

PRIMARY_DATA = Path(__file__).resolve().parents[2] / "src" / "race_density" / "data"

CONREY_TO_PAPER = {1: 0, 2: 1, 4: 2, 8: 3, 5: 4, 10: 5, 9: 6, 7: 7, 3: 8, 6: 9}


@pytest.fixture(scope="session")
def upstream_payloads():
    """LMFDB-shaped responses for q=11, derived from the shipped zero file
    through its published schema (the only interface we share)."""
    zero_file = PRIMARY_DATA / "zeros_q11_t2500.json"
    doc = json.loads(zero_file.read_text())
    by_paper = {int(c["index"]): c["zeros"] for c in doc["characters"]}
    payloads = {}
    for conrey, paper in CONREY_TO_PAPER.items():
        if paper == 0:
            continue
        zeros = by_paper[paper][:12]
        payloads[conrey] = {
            "data": [
                {
                    "origin": f"Character/Dirichlet/11/{conrey}",
                    "positive_zeros": zeros,
                    "z1": zeros[0],
                }
            ]
        }
    return payloads


class FlakyTransport(httpx.BaseTransport):
    """Fails the first `failures` requests per character, then serves."""

    def __init__(self, payloads, failures=0):
        self.payloads = payloads
        self.failures = failures
        self.attempts: dict[str, int] = {}
        self.total_requests = 0

    def handle_request(self, request):
        self.total_requests += 1
        origin = httpx.QueryParams(request.url.query).get("origin", "")
        conrey = int(origin.rsplit("/", 1)[-1])
        seen = self.attempts.get(origin, 0)
        self.attempts[origin] = seen + 1
        if seen < self.failures:
            return httpx.Response(503, text="flaky")
        return httpx.Response(200, json=self.payloads[conrey])


class OfflineTransport(httpx.BaseTransport):
    def handle_request(self, request):
        raise AssertionError(f"unexpected network request: {request.url}")


@pytest.fixture
def flaky_transport(upstream_payloads):
    return FlakyTransport(upstream_payloads, failures=2)


@pytest.fixture
def clean_transport(upstream_payloads):
    return FlakyTransport(upstream_payloads, failures=0)


@pytest.fixture
def offline_transport():
    return OfflineTransport()
