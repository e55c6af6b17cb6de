"""Pure-Python orbit enumeration for one charge profile of the geometric power.

Compiled twin: _orbit_kernel.pyx.  Both enumerate the off-diagonal tuples of
exponent-source points times the coefficient state spaces, canonicalize each
element under the blockwise symmetric-group action by sorting within blocks,
and count distinct representatives.  Along the way they verify that the
action is free (every orbit has size prod k_i!) and that the induced map on
orbits to the target side is well defined.
"""

from __future__ import annotations

import itertools
import math
from typing import List, Sequence, Tuple

# A block describes the k_i-fold factor attached to charge i:
#   (k, x_size, g_values, y_size)
# where g_values maps states 0..x_size-1 into 0..y_size-1.
Block = Tuple[int, int, Sequence[int], int]


class OrbitCheckError(RuntimeError):
    """An internal structural check (free action / well-definedness) failed."""


def count_profile_orbits(m_size: int, f_values: Sequence[int], blocks: Sequence[Block]) -> int:
    s = sum(b[0] for b in blocks)
    if s == 0:
        raise ValueError("a charge profile must have at least one particle")
    if s > m_size:
        return 0
    if any(k > 0 and x_size == 0 for k, x_size, _, _ in blocks):
        return 0

    slot_ranges: List[range] = []
    for k, x_size, _, _ in blocks:
        slot_ranges.extend([range(x_size)] * k)
    orbit_size = math.prod(math.factorial(k) for k, _, _, _ in blocks)

    orbit_target = {}
    orbit_count = {}
    # Ordered tuples of distinct points = M^s minus the large diagonal.
    for m_tuple in itertools.permutations(range(m_size), s):
        for states in itertools.product(*slot_ranges):
            src_key: List[Tuple[int, int]] = []
            tgt_key: List[Tuple[int, int]] = []
            pos = 0
            for k, _, g_values, _ in blocks:
                src_block = sorted(zip(m_tuple[pos : pos + k], states[pos : pos + k]))
                tgt_block = sorted(
                    (f_values[m], g_values[x])
                    for m, x in zip(m_tuple[pos : pos + k], states[pos : pos + k])
                )
                src_key.append(tuple(src_block))
                tgt_key.append(tuple(tgt_block))
                pos += k
            src = tuple(src_key)
            tgt = tuple(tgt_key)
            prev = orbit_target.get(src)
            if prev is None:
                orbit_target[src] = tgt
                orbit_count[src] = 1
            else:
                if prev != tgt:
                    raise OrbitCheckError(
                        "induced orbit map is not well defined: one source orbit "
                        "hits two target orbits"
                    )
                orbit_count[src] += 1
    for src, count in orbit_count.items():
        if count != orbit_size:
            raise OrbitCheckError(
                f"non-free action: orbit of {src} has size {count}, expected {orbit_size}"
            )
    return len(orbit_target)
