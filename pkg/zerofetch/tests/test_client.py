import json

import pytest

from zerofetch.client import FetchError, fetch_zeros
from zerofetch.manifest import FetchManifest, RetryPolicy


def _manifest(tmp_path, attempts=4):
    return FetchManifest(
        modulus=11,
        height=10000.0,
        cache_dir=tmp_path / "cache",
        retry=RetryPolicy(attempts=attempts, backoff_seconds=0.01),
    )


def test_cold_fetch_with_retries(tmp_path, flaky_transport):
    out = tmp_path / "zeros_q11.json"
    doc = fetch_zeros(_manifest(tmp_path), out, transport=flaky_transport)
    assert out.exists()
    assert doc["labeling"] == "paper"
    assert len(doc["characters"]) == 9
    # two failures then success per character
    assert all(n == 3 for n in flaky_transport.attempts.values())
    # minimum ordinate sits on paper label chi_7
    by_index = {c["index"]: c for c in doc["characters"]}
    all_min = min(float(c["zeros"][0]) for c in doc["characters"])
    assert abs(all_min - 1.23119) < 1e-5
    assert float(by_index[7]["zeros"][0]) == all_min


def test_retry_budget_exhausted(tmp_path, upstream_payloads):
    from conftest import FlakyTransport

    transport = FlakyTransport(upstream_payloads, failures=10)
    with pytest.raises(FetchError, match="after 3 attempts"):
        fetch_zeros(_manifest(tmp_path, attempts=3), tmp_path / "z.json", transport=transport)


def test_warm_cache_replay_byte_identical(tmp_path, clean_transport, offline_transport):
    manifest = _manifest(tmp_path)
    out1 = tmp_path / "first.json"
    out2 = tmp_path / "second.json"
    fetch_zeros(manifest, out1, transport=clean_transport)
    n_requests = clean_transport.total_requests
    assert n_requests == 9
    # second run must not touch the network at all
    fetch_zeros(manifest, out2, transport=offline_transport)
    assert out1.read_bytes() == out2.read_bytes()


def test_achieved_height_recorded(tmp_path, clean_transport):
    doc = fetch_zeros(_manifest(tmp_path), tmp_path / "z.json", transport=clean_transport)
    for c in doc["characters"]:
        # upstream only served the first dozen zeros; t_max must reflect that
        assert float(c["t_max"]) < 100.0
        assert float(c["t_max"]) >= float(c["zeros"][-1])


def test_manifest_validation(tmp_path):
    with pytest.raises(ValueError):
        FetchManifest(modulus=12, cache_dir=tmp_path)
    with pytest.raises(ValueError):
        FetchManifest(modulus=11, height=5.0, cache_dir=tmp_path)
    with pytest.raises(ValueError):
        FetchManifest(modulus=11, convention="galois", cache_dir=tmp_path)
