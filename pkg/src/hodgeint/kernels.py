"""Integer inner loops: character tables and transposition-tuple counting.

Everything here takes and returns int64 numpy arrays so it can be compiled by
numba; see :mod:`hodgeint._jit` for the fallback switch. Values stay far from
int64 limits for the sizes the library supports (``n <= 16`` for characters,
``d <= 7`` for brute force).
"""

import numpy as np

from hodgeint._jit import njit, prange

JIT_OPTIONS = {"cache": True, "nogil": True}


@njit(**JIT_OPTIONS)
def mn_character(shape, cls):
    """Murnaghan-Nakayama character value by depth-first rim-hook removal.

    ``shape`` and ``cls`` are decreasing int64 arrays (no zero padding) of the
    same size. The shape is encoded as a beta-set on ``size + len(shape)``
    positions; removing a rim hook of length ``k`` moves one bead from ``b`` to
    ``b - k``, with sign given by the parity of beads jumped over.
    """
    n_rows = shape.shape[0]
    n_steps = cls.shape[0]
    width = 0
    for i in range(n_rows):
        width += shape[i]
    width += n_rows + 1
    if n_steps == 0:
        return 1 if n_rows == 0 else 0

    max_frames = n_steps * width + 2
    occ = np.zeros((max_frames, width), dtype=np.int8)
    depth = np.zeros(max_frames, dtype=np.int64)
    sgn = np.zeros(max_frames, dtype=np.int64)
    for i in range(n_rows):
        occ[0, shape[i] + n_rows - 1 - i] = 1
    depth[0] = 0
    sgn[0] = 1
    top = 1
    total = 0
    while top > 0:
        top -= 1
        d = depth[top]
        s = sgn[top]
        if d == n_steps:
            total += s
            continue
        k = cls[d]
        frame = occ[top].copy()
        # children overwrite the popped slot; starting rows run top to bottom
        for b in range(width - 1, k - 1, -1):
            if frame[b] == 1 and frame[b - k] == 0:
                jumped = 0
                for j in range(b - k + 1, b):
                    jumped += frame[j]
                occ[top, :] = frame
                occ[top, b] = 0
                occ[top, b - k] = 1
                depth[top] = d + 1
                sgn[top] = -s if jumped % 2 == 1 else s
                top += 1
    return total


@njit(**JIT_OPTIONS)
def character_table(parts, lengths):
    """Full table ``chi[i, j] = chi_{parts[i]}(C_{parts[j]})``.

    ``parts`` is a zero-padded 2-d int64 array listing every partition of n,
    ``lengths`` the number of nonzero entries of each row.
    """
    m = parts.shape[0]
    table = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        shape = parts[i, : lengths[i]].copy()
        for j in range(m):
            cls = parts[j, : lengths[j]].copy()
            table[i, j] = mn_character(shape, cls)
    return table


@njit(**JIT_OPTIONS)
def _cycle_type_matches(perm, target, scratch, seen):
    d = perm.shape[0]
    for i in range(d):
        seen[i] = 0
        scratch[i] = 0
    n_cycles = 0
    for i in range(d):
        if seen[i] == 0:
            length = 0
            j = i
            while seen[j] == 0:
                seen[j] = 1
                j = perm[j]
                length += 1
            scratch[n_cycles] = length
            n_cycles += 1
    # insertion sort, decreasing
    for a in range(1, n_cycles):
        v = scratch[a]
        b = a - 1
        while b >= 0 and scratch[b] < v:
            scratch[b + 1] = scratch[b]
            b -= 1
        scratch[b + 1] = v
    for i in range(d):
        if scratch[i] != target[i]:
            return False
    return True


@njit(**JIT_OPTIONS)
def _find(parent, x):
    while parent[x] != x:
        x = parent[x]
    return x


@njit(**JIT_OPTIONS)
def _count_from(first, alpha, target, trans, r, transitive):
    d = alpha.shape[0]
    n_t = trans.shape[0]
    perms = np.zeros((r + 1, d), dtype=np.int64)
    parents = np.zeros((r + 1, d), dtype=np.int64)
    idx = np.zeros(r + 1, dtype=np.int64)
    scratch = np.zeros(d, dtype=np.int64)
    seen = np.zeros(d, dtype=np.int64)

    for i in range(d):
        perms[0, i] = alpha[i]
        parents[0, i] = i
    # merge the cycles of alpha
    for i in range(d):
        a = _find(parents[0], i)
        b = _find(parents[0], alpha[i])
        if a != b:
            parents[0, max(a, b)] = min(a, b)

    count = 0
    if r == 0:
        if _cycle_type_matches(perms[0], target, scratch, seen):
            if not transitive:
                return 1
            root = _find(parents[0], 0)
            for i in range(d):
                if _find(parents[0], i) != root:
                    return 0
            return 1
        return 0

    level = 1
    idx[1] = first
    while level >= 1:
        if idx[level] >= n_t or (level == 1 and idx[level] != first):
            level -= 1
            if level >= 1:
                idx[level] += 1
            continue
        u = trans[idx[level], 0]
        v = trans[idx[level], 1]
        # perm_level = perm_{level-1} composed with the transposition (u v) on the right
        for i in range(d):
            perms[level, i] = perms[level - 1, i]
            parents[level, i] = parents[level - 1, i]
        tmp = perms[level, u]
        perms[level, u] = perms[level, v]
        perms[level, v] = tmp
        a = _find(parents[level], u)
        b = _find(parents[level], v)
        if a != b:
            parents[level, max(a, b)] = min(a, b)
        if level == r:
            if _cycle_type_matches(perms[level], target, scratch, seen):
                ok = True
                if transitive:
                    root = _find(parents[level], 0)
                    for i in range(d):
                        if _find(parents[level], i) != root:
                            ok = False
                            break
                if ok:
                    count += 1
            idx[level] += 1
        else:
            level += 1
            idx[level] = 0
    return count


@njit(parallel=True, cache=True)
def _count_parallel(alpha, target, trans, r, transitive):
    n_t = trans.shape[0]
    total = 0
    for first in prange(n_t):
        total += _count_from(first, alpha, target, trans, r, transitive)
    return total


def transpositions(d: int) -> np.ndarray:
    return np.array([(u, v) for u in range(d) for v in range(u + 1, d)], dtype=np.int64).reshape(-1, 2)


def count_factorizations(alpha, target, r: int, transitive: bool = False) -> int:
    """Number of transposition tuples ``(t_1..t_r)`` with ``alpha t_1 ... t_r`` of cycle type ``target``.

    ``alpha`` is a permutation of ``range(d)`` as an int64 array and ``target``
    the decreasing cycle type padded with zeros to length ``d``. With
    ``transitive`` only tuples generating (together with ``alpha``) a
    transitive subgroup are counted.
    """
    alpha = np.ascontiguousarray(alpha, dtype=np.int64)
    target = np.ascontiguousarray(target, dtype=np.int64)
    trans = transpositions(alpha.shape[0])
    if r == 0 or trans.shape[0] == 0:
        if r > 0:
            return 0
        return int(_count_from(0, alpha, target, trans, 0, transitive))
    return int(_count_parallel(alpha, target, trans, r, transitive))
