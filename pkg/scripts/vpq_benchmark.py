#!/usr/bin/env python3
"""Growing/shrinking-phase benchmark of the disk-spilling priority queue.

Enqueues N random-priority records, then dequeues all of them, timing the
two phases for the virtual priority queue (bounded memory, sorted runs on
disk) against the unbounded in-memory reference heap.  The disk-backed
queue pays during the growing phase (it sorts and writes runs) and gets
the money back while shrinking (runs are already sorted).
"""

import argparse
import random
import struct
import time
from dataclasses import dataclass

from subquest import MemoryPriorityQueue, VirtualPriorityQueue, VpqConfig


@dataclass
class BenchConfig:
    records: int = 200_000
    max_mem_entries: int = 10_000
    read_buffer_records: int = 1024
    priority_range: int = 1_000_000


def timed_phases(queue, priorities):
    t0 = time.perf_counter()
    for i, p in enumerate(priorities):
        queue.enqueue(i, p)
    t1 = time.perf_counter()
    while queue.dequeue_max() is not None:
        pass
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1


def run(config: BenchConfig):
    rng = random.Random(0)
    priorities = [(float(rng.randint(0, config.priority_range)),)
                  for _ in range(config.records)]

    encode = lambda item: struct.pack("<q", item)
    decode = lambda raw: struct.unpack("<q", raw)[0]
    vpq = VirtualPriorityQueue(
        VpqConfig(max_mem_entries=config.max_mem_entries,
                  read_buffer_records=config.read_buffer_records),
        encode, decode)
    with vpq:
        grow_v, shrink_v = timed_phases(vpq, priorities)
        spills, reads = vpq.spill_count, vpq.read_ops()
    grow_m, shrink_m = timed_phases(MemoryPriorityQueue(), priorities)

    print(f"{config.records} records, memory threshold "
          f"{config.max_mem_entries}")
    print(f"{'queue':>22} {'enqueue s':>10} {'dequeue s':>10} {'total s':>9}")
    print(f"{'in-memory heap':>22} {grow_m:>10.2f} {shrink_m:>10.2f} "
          f"{grow_m + shrink_m:>9.2f}")
    print(f"{'virtual (disk runs)':>22} {grow_v:>10.2f} {shrink_v:>10.2f} "
          f"{grow_v + shrink_v:>9.2f}")
    print(f"spills: {spills}, run read operations: {reads}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--records", type=int, default=200_000)
    parser.add_argument("--max-mem-entries", type=int, default=10_000)
    parser.add_argument("--read-buffer-records", type=int, default=1024)
    args = parser.parse_args()
    run(BenchConfig(records=args.records,
                    max_mem_entries=args.max_mem_entries,
                    read_buffer_records=args.read_buffer_records))
