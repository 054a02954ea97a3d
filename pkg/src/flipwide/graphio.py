"""graph6 and edge-list parsing, JSON codecs, and report documents.

graph6 follows the de-facto standard byte layout: a size field, then the
upper triangle of the adjacency matrix in column order, six bits per
byte, each byte offset by 63. Reports carry a canonical JSON result
payload so identical runs are byte-identical.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Any

from .bitset import mask_from, members
from .errors import MalformedInputError, TooLargeError
from .flips import Flip, NormalizedFlipSet
from .graph import Graph, from_edge_list
from .witness import FlippableInstance, WidenableInstance

GRAPH6_MAX_VERTICES = 1 << 18
GRAPH6_HEADER = b">>graph6<<"


def _pair_order(n: int):
    # Column order of the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            yield u, v


def parse_graph6(data: bytes | str) -> Graph:
    """Exact graph6 decode for n below 2^18."""
    if isinstance(data, str):
        data = data.encode("ascii")
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    data = data.rstrip(b"\r\n")
    if not data:
        raise MalformedInputError("empty graph6 input")
    for byte in data:
        if not 63 <= byte <= 126:
            raise MalformedInputError(f"byte {byte} outside the graph6 range 63..126")
    if data[0] != 126:
        n = data[0] - 63
        body = data[1:]
    else:
        if len(data) >= 2 and data[1] == 126:
            raise MalformedInputError("graphs with 2^18 or more vertices are not supported")
        if len(data) < 4:
            raise MalformedInputError("truncated multi-byte size field")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    n_bits = n * (n - 1) // 2
    n_bytes = (n_bits + 5) // 6
    if len(body) != n_bytes:
        raise MalformedInputError(
            f"expected {n_bytes} adjacency bytes for n={n}, got {len(body)}"
        )
    rows = [0] * n
    bit_index = 0
    pairs = _pair_order(n)
    for byte in body:
        value = byte - 63
        for shift in range(5, -1, -1):
            bit = value >> shift & 1
            if bit_index < n_bits:
                u, v = next(pairs)
                if bit:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            elif bit:
                raise MalformedInputError("nonzero padding bits")
            bit_index += 1
    return Graph(n, rows)


def write_graph6(g: Graph) -> bytes:
    """Canonical graph6 encoding; inverse of parse_graph6."""
    n = g.n
    if n >= GRAPH6_MAX_VERTICES:
        raise TooLargeError(f"graph6 output supports n < {GRAPH6_MAX_VERTICES}")
    if n <= 62:
        head = bytes([n + 63])
    else:
        head = bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    out = bytearray(head)
    value = 0
    count = 0
    for u, v in _pair_order(n):
        value = value << 1 | (g.adj[u] >> v & 1)
        count += 1
        if count == 6:
            out.append(value + 63)
            value = 0
            count = 0
    if count:
        out.append((value << (6 - count)) + 63)
    return bytes(out)


def parse_edge_list(text: str) -> Graph:
    """Text format: first line "n <count>", then "u v" lines; '#' comments."""
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise MalformedInputError(f"expected 'n <count>' header, got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError as exc:
                raise MalformedInputError(f"bad vertex count {tokens[1]!r}") from exc
            if n < 0:
                raise MalformedInputError("vertex count must be non-negative")
            continue
        if len(tokens) != 2:
            raise MalformedInputError(f"expected 'u v' edge line, got {line!r}")
        try:
            edges.append((int(tokens[0]), int(tokens[1])))
        except ValueError as exc:
            raise MalformedInputError(f"bad edge line {line!r}") from exc
    if n is None:
        raise MalformedInputError("missing 'n <count>' header")
    return from_edge_list(n, edges)


def detect_and_parse(data: bytes) -> Graph:
    """Edge-list text starts with an 'n' header; everything else is graph6."""
    stripped = data.lstrip()
    if stripped.startswith(b"n ") or stripped.startswith(b"n\t") or stripped.startswith(b"#"):
        return parse_edge_list(data.decode("utf-8"))
    return parse_graph6(data)


# --- JSON codecs -----------------------------------------------------------

def flips_to_json(flips) -> list:
    return [[members(f.a), members(f.b)] for f in flips]


def flips_from_json(payload) -> list[Flip]:
    if not isinstance(payload, list):
        raise MalformedInputError("flip list must be a JSON array")
    out = []
    for entry in payload:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise MalformedInputError("each flip must be a pair of vertex arrays")
        a, b = entry
        out.append(Flip(mask_from(int(v) for v in a), mask_from(int(v) for v in b)))
    return out


def normalized_to_json(nf: NormalizedFlipSet) -> dict:
    return {
        "atoms": [members(a) for a in nf.partition.atoms],
        "toggles": [list(t) for t in nf.sorted_toggles()],
    }


def instance_from_json(payload, n: int):
    """Witness JSON: {"kind": "widenable"|"flippable", ...}; A defaults to V."""
    if not isinstance(payload, dict) or "kind" not in payload:
        raise MalformedInputError("witness JSON must be an object with a 'kind'")
    kind = payload["kind"]
    try:
        a_set = mask_from(int(v) for v in payload["A"]) if "A" in payload else (1 << n) - 1
        b = mask_from(int(v) for v in payload["B"]) if "B" in payload else None
        r = int(payload["r"])
        m = int(payload["m"])
        if kind == "widenable":
            s_set = mask_from(int(v) for v in payload.get("S", []))
            return WidenableInstance(a_set, s_set, r, m, witness=b)
        if kind == "flippable":
            flips = tuple(flips_from_json(payload.get("flips", [])))
            return FlippableInstance(a_set, flips, r, m, witness=b)
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad witness JSON: {exc}") from exc
    raise MalformedInputError(f"unknown witness kind {kind!r}")


def trace_to_json(trace) -> dict:
    steps = []
    for s in trace.steps:
        d = {"kind": type(s).__name__.removesuffix("Step").lower()}
        d.update(vars(s))
        steps.append(d)
    return {
        "mode": trace.mode,
        "source_flip_count": trace.source_flip_count,
        "normalized_count": trace.normalized_count,
        "steps": steps,
        "s_final": members(trace.s_final),
        "b_final": members(trace.b_final),
    }


# --- Report documents ------------------------------------------------------

REPORT_SCHEMA_VERSION = "1"


def input_digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def canonical_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class ReportDocument:
    """Envelope for one command's outcome.

    The result payload is serialized canonically so identical commands on
    identical inputs are byte-identical; the wall-clock duration lives
    outside the payload for that reason.
    """

    tool_version: str
    input_digest: str
    command: dict
    result: dict
    exhaustive: bool | None
    duration_seconds: float

    def to_json(self) -> dict:
        return {
            "schema_version": REPORT_SCHEMA_VERSION,
            "tool_version": self.tool_version,
            "input_digest": self.input_digest,
            "command": self.command,
            "result": self.result,
            "exhaustive": self.exhaustive,
            "duration_seconds": self.duration_seconds,
        }

    def result_bytes(self) -> bytes:
        return canonical_json(self.result).encode("utf-8")
