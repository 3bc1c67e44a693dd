"""LMFDB zero download with a byte-replayable local cache.

One API query per nonprincipal character; raw responses are cached under a
content-addressed key, so repeated fetches replay byte-identically offline.
The emitted zero file follows the race-density-zeros/1 schema with paper
labeling resolved through the verified Conrey mapping.
"""

from __future__ import annotations

import json
import os
import time
from pathlib import Path

import httpx

from .labels import conrey_to_paper
from .manifest import FetchManifest


class FetchError(RuntimeError):
    pass


def _atomic_write(path: Path, data: bytes):
    tmp = path.with_suffix(path.suffix + f".tmp{os.getpid()}")
    tmp.write_bytes(data)
    tmp.replace(path)


def _get_with_retry(client: httpx.Client, url: str, params: dict, manifest: FetchManifest) -> bytes:
    delays = list(manifest.retry.delays()) + [None]
    last_exc = None
    for delay in delays:
        try:
            resp = client.get(url, params=params, timeout=30.0)
            resp.raise_for_status()
            return resp.content
        except (httpx.HTTPError, httpx.HTTPStatusError) as exc:
            last_exc = exc
            if delay is None:
                break
            time.sleep(delay)
    raise FetchError(f"upstream failed after {manifest.retry.attempts} attempts: {last_exc}")


def _raw_for_character(manifest: FetchManifest, conrey_index: int, client: httpx.Client) -> bytes:
    cache_path = manifest.cache_dir / manifest.cache_key(conrey_index)
    if cache_path.exists():
        return cache_path.read_bytes()
    params = {
        "origin": f"Character/Dirichlet/{manifest.modulus}/{conrey_index}",
        "_format": "json",
    }
    data = _get_with_retry(client, manifest.endpoint, params, manifest)
    manifest.cache_dir.mkdir(parents=True, exist_ok=True)
    _atomic_write(cache_path, data)
    return data


def _parse_zeros(raw: bytes, conrey_index: int) -> list[str]:
    doc = json.loads(raw)
    records = doc.get("data", [])
    if not records:
        raise FetchError(f"no L-function record for Conrey index {conrey_index}")
    rec = records[0]
    zeros = rec.get("positive_zeros")
    if zeros is None:
        raise FetchError(f"record for Conrey {conrey_index} lacks positive_zeros")
    if isinstance(zeros, str):
        zeros = json.loads(zeros)
    return [str(z) for z in zeros]


def fetch_zeros(manifest: FetchManifest, out_path: Path, transport: httpx.BaseTransport | None = None) -> dict:
    """Download (or replay) zeros for all nonprincipal characters mod q.

    Returns the emitted document.  The achieved height per character is the
    largest fetched ordinate; the file's t_max records it, capped by the
    manifest's requested height, so downstream truncation heights are honest.
    """
    q = manifest.modulus
    mapping = conrey_to_paper(q)
    inverse = {j: n for n, j in mapping.items()}
    chars = []
    with httpx.Client(transport=transport) as client:
        for j in range(1, q - 1):
            conrey_index = inverse[j]
            raw = _raw_for_character(manifest, conrey_index, client)
            zeros = _parse_zeros(raw, conrey_index)
            vals = [float(z) for z in zeros]
            if any(v <= 0 for v in vals):
                raise FetchError("nonpositive ordinate from upstream")
            if sorted(vals) != vals:
                raise FetchError("upstream ordinates not sorted")
            vals_kept = [z for z, v in zip(zeros, vals) if v < manifest.height]
            achieved = min(manifest.height, (vals[-1] + 1e-9) if vals else 0.0)
            chars.append(
                {
                    "index": j,
                    "t_max": f"{achieved:.9f}",
                    "zeros": [str(z) for z in vals_kept],
                }
            )
    doc = {
        "schema": "race-density-zeros/1",
        "modulus": q,
        "labeling": "paper",
        "source": f"LMFDB via {manifest.endpoint} (conrey labels mapped by chi(g) check)",
        "accuracy": "1e-9",
        "characters": chars,
    }
    out_path.parent.mkdir(parents=True, exist_ok=True)
    _atomic_write(out_path, (json.dumps(doc, indent=1) + "\n").encode())
    return doc
