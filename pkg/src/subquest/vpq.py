"""Disk-spilling max-priority queue.

Exploration front sizes grow with graph size and density and can outgrow
main memory, so this queue keeps only the hottest entries in a resident
heap.  Whenever the resident count exceeds the configured threshold, the
lower-priority half is written out as one immutable *run*: records sorted
by non-increasing priority (insertion order on ties).  Dequeue lazily
merges the resident heap with the front record of every run, so the
globally largest entry is always returned and FIFO tie-breaking is kept
across memory and disk.

Record layout (little-endian), one record after another in ``run-<n>.bin``:

    u32 arity | arity x f64 priority | u64 seq | u32 payload_len | payload

The payload is produced by the caller-supplied codec; for subgraphs the
standard codec below writes ``u32 n; n x u32 vertices; u32 m; m x (u32,
u32) edges; u32 ext_len; ext bytes``.  Run files are deleted when the
queue is closed; nothing survives a process restart.  Single producer /
single consumer only.
"""

from __future__ import annotations

import heapq
import os
import shutil
import struct
import tempfile
from dataclasses import dataclass

from .engine import Subgraph, priority_sort_key

_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")
_F64 = struct.Struct("<d")


class QueueError(RuntimeError):
    """Disk-backed queue failure; the queue is unusable afterwards."""


class CorruptRecordError(QueueError):
    """A run file record does not match its declared layout."""


@dataclass
class VpqConfig:
    """Tuning knobs for the disk-spilling queue.

    ``max_mem_entries`` is a record count (not bytes) so behavior is
    deterministic.  ``spill_dir`` of None means a private temp directory.
    """
    max_mem_entries: int = 1_000_000
    spill_dir: str | None = None
    read_buffer_records: int = 1024

    def __post_init__(self):
        if self.max_mem_entries < 2:
            raise ValueError("max_mem_entries must be >= 2")
        if self.read_buffer_records < 1:
            raise ValueError("read_buffer_records must be >= 1")


# --------------------------------------------------------------------------
# record framing

def encode_record(priority, seq: int, payload: bytes) -> bytes:
    parts = [_U32.pack(len(priority))]
    parts.extend(_F64.pack(float(v)) for v in priority)
    parts.append(_U64.pack(seq))
    parts.append(_U32.pack(len(payload)))
    parts.append(payload)
    return b"".join(parts)


def _parse_records(buf: bytes, expected: int):
    """Decode exactly ``expected`` records from ``buf``; error on mismatch."""
    records = []
    pos = 0
    for _ in range(expected):
        try:
            (arity,) = _U32.unpack_from(buf, pos)
            pos += 4
            priority = tuple(
                _F64.unpack_from(buf, pos + 8 * i)[0] for i in range(arity))
            pos += 8 * arity
            (seq,) = _U64.unpack_from(buf, pos)
            pos += 8
            (plen,) = _U32.unpack_from(buf, pos)
            pos += 4
            payload = bytes(buf[pos:pos + plen])
            if len(payload) != plen:
                raise struct.error("short payload")
            pos += plen
        except struct.error as exc:
            raise CorruptRecordError(f"run record truncated: {exc}") from None
        records.append((priority, seq, payload))
    if pos != len(buf):
        raise CorruptRecordError(
            f"run block has {len(buf) - pos} trailing bytes")
    return records


# --------------------------------------------------------------------------
# standard subgraph payload codec

def encode_subgraph(s: Subgraph, ext_encoder=None) -> bytes:
    ext = ext_encoder(s.ext) if ext_encoder is not None else b""
    parts = [_U32.pack(len(s.vertices))]
    parts.extend(_U32.pack(v) for v in s.vertices)
    edges = sorted(s.edges)
    parts.append(_U32.pack(len(edges)))
    for u, v in edges:
        parts.append(_U32.pack(u))
        parts.append(_U32.pack(v))
    parts.append(_U32.pack(len(ext)))
    parts.append(ext)
    return b"".join(parts)


def decode_subgraph(payload: bytes, ext_decoder=None) -> Subgraph:
    pos = 0
    (n,) = _U32.unpack_from(payload, pos)
    pos += 4
    vertices = tuple(
        _U32.unpack_from(payload, pos + 4 * i)[0] for i in range(n))
    pos += 4 * n
    (m,) = _U32.unpack_from(payload, pos)
    pos += 4
    edges = set()
    for _ in range(m):
        (u,) = _U32.unpack_from(payload, pos)
        (v,) = _U32.unpack_from(payload, pos + 4)
        pos += 8
        edges.add((u, v))
    (ext_len,) = _U32.unpack_from(payload, pos)
    pos += 4
    ext_bytes = payload[pos:pos + ext_len]
    ext = ext_decoder(ext_bytes, vertices, edges) if ext_decoder else None
    return Subgraph(vertices, frozenset(edges), ext)


# --------------------------------------------------------------------------
# runs

class SpilledRun:
    """One immutable on-disk run, read strictly sequentially in blocks.

    Block boundaries (every ``read_buffer_records`` records) are remembered
    from write time, so draining a run takes at most
    ceil(records / read_buffer_records) read calls.
    """

    def __init__(self, path, record_count, block_offsets, block_counts):
        self.path = path
        self.record_count = record_count
        self._block_offsets = block_offsets  # start offsets plus final size
        self._block_counts = block_counts
        self._next_block = 0
        self._buffer = []  # decoded records of the current block, reversed
        self.consumed = 0
        self.read_ops = 0

    def exhausted(self) -> bool:
        return self.consumed >= self.record_count

    def peek(self):
        if not self._buffer:
            if self.exhausted():
                return None
            self._load_block()
        return self._buffer[-1]

    def advance(self):
        record = self.peek()
        if record is None:
            raise QueueError("advance past end of run")
        self._buffer.pop()
        self.consumed += 1
        return record

    def _load_block(self):
        i = self._next_block
        start = self._block_offsets[i]
        end = self._block_offsets[i + 1]
        try:
            with open(self.path, "rb") as fh:
                fh.seek(start)
                buf = fh.read(end - start)
        except OSError as exc:
            raise QueueError(f"run read failed: {exc}") from exc
        if len(buf) != end - start:
            raise CorruptRecordError("run file shorter than expected")
        self.read_ops += 1
        records = _parse_records(buf, self._block_counts[i])
        records.reverse()
        self._buffer = records
        self._next_block += 1


class VirtualPriorityQueue:
    """Bounded-memory max-priority queue backed by sorted on-disk runs.

    ``encode``/``decode`` translate items to/from payload bytes; they are
    only exercised when a spill actually happens.  FIFO tie-breaking uses a
    global sequence number that survives the round trip to disk.
    """

    def __init__(self, config: VpqConfig | None = None, encode=None, decode=None):
        self.config = config or VpqConfig()
        self._encode = encode
        self._decode = decode
        self._heap = []  # (sort_key, priority, item)
        self._seq = 0
        self._arity = None
        self._runs = []
        self._run_heads = []  # heap of (sort_key, run index)
        self._spill_count = 0
        self.peak_mem_entries = 0
        self._broken = False
        self._dir = self.config.spill_dir
        self._own_dir = False
        self._closed = False

    # -- bookkeeping

    @property
    def spill_count(self) -> int:
        return self._spill_count

    @property
    def run_count(self) -> int:
        return len(self._runs)

    def read_ops(self) -> int:
        return sum(r.read_ops for r in self._runs)

    def __len__(self):
        disk = sum(r.record_count - r.consumed for r in self._runs)
        return len(self._heap) + disk

    def _check_usable(self):
        if self._broken:
            raise QueueError("queue unusable after an earlier I/O failure")
        if self._closed:
            raise QueueError("queue is closed")

    # -- core operations

    def enqueue(self, item, priority):
        self._check_usable()
        priority = tuple(float(v) for v in priority)
        if self._arity is None:
            self._arity = len(priority)
        elif len(priority) != self._arity:
            raise ValueError(
                f"priority arity mismatch: {len(priority)} vs {self._arity}")
        key = priority_sort_key(priority, self._seq)
        self._seq += 1
        heapq.heappush(self._heap, (key, priority, item))
        self.peak_mem_entries = max(self.peak_mem_entries, len(self._heap))
        if len(self._heap) > self.config.max_mem_entries:
            self.spill()

    def dequeue_max(self):
        self._check_usable()
        best_run = None
        while self._run_heads:
            key, idx = self._run_heads[0]
            if self._runs[idx].exhausted():
                heapq.heappop(self._run_heads)
                continue
            best_run = (key, idx)
            break
        if self._heap and (best_run is None or self._heap[0][0] < best_run[0]):
            _, priority, item = heapq.heappop(self._heap)
            return item, priority
        if best_run is None:
            return None
        _, idx = heapq.heappop(self._run_heads)
        run = self._runs[idx]
        priority, seq, payload = run.advance()
        nxt = run.peek()
        if nxt is not None:
            heapq.heappush(self._run_heads,
                           (priority_sort_key(nxt[0], nxt[1]), idx))
        return self._decode(payload), priority

    def spill(self):
        """Write the lower-priority half of the resident heap as one run."""
        self._check_usable()
        n = len(self._heap)
        if n < 2:
            raise QueueError("spill requires at least 2 resident entries")
        if self._encode is None:
            raise QueueError("spill requires an item codec")
        ordered = sorted(self._heap)  # descending priority, FIFO ties
        keep = n - n // 2
        resident, spilled = ordered[:keep], ordered[keep:]
        run = self._write_run(spilled)
        self._runs.append(run)
        idx = len(self._runs) - 1
        head = run.peek()
        heapq.heappush(self._run_heads,
                       (priority_sort_key(head[0], head[1]), idx))
        self._heap = resident  # an ascending list is a valid heap
        self._spill_count += 1
        return run

    def _write_run(self, entries) -> SpilledRun:
        if self._dir is None:
            self._dir = tempfile.mkdtemp(prefix="subquest-vpq-")
            self._own_dir = True
        else:
            os.makedirs(self._dir, exist_ok=True)
        path = os.path.join(self._dir, f"run-{self._spill_count}.bin")
        block = self.config.read_buffer_records
        offsets = [0]
        counts = []
        try:
            with open(path, "wb") as fh:
                pending = 0
                for i, (key, priority, item) in enumerate(entries):
                    seq = key[1]
                    fh.write(encode_record(priority, seq, self._encode(item)))
                    pending += 1
                    if pending == block or i == len(entries) - 1:
                        counts.append(pending)
                        offsets.append(fh.tell())
                        pending = 0
                fh.flush()
                os.fsync(fh.fileno())
        except OSError as exc:
            self._broken = True
            raise QueueError(f"run write failed: {exc}") from exc
        return SpilledRun(path, len(entries), offsets, counts)

    # -- lifecycle

    def close(self):
        if self._closed:
            return
        self._closed = True
        for run in self._runs:
            try:
                os.unlink(run.path)
            except OSError:
                pass
        if self._own_dir and self._dir is not None:
            shutil.rmtree(self._dir, ignore_errors=True)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    def __del__(self):
        try:
            self.close()
        except Exception:
            pass
