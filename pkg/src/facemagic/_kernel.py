"""Compiled depth-first propagation search over a precomputed schedule.

The schedule assigns one free cell per level.  After a free assignment the
level's forced cells are filled from ``S - a - b - c`` and the level's checks
(wrap faces, optional digons) are tested.  Everything is flat int64 arrays so
the loop compiles under numba.
"""

import numpy as np
from numba import njit

COMPLETE = 0
BUDGET_EXCEEDED = 1


@njit(cache=True)
def search(N, S, free_cell, forced_start, forced_cell, forced_dep,
           check_start, check_cell, check_target, prefix, max_nodes, out):
    F = free_cell.shape[0]
    P = prefix.shape[0]
    cap = out.shape[0]
    x = np.zeros(N, np.int64)
    used = np.zeros(N + 2, np.bool_)
    cand = np.zeros(F, np.int64)
    placed = np.zeros(F, np.int64)
    active = np.zeros(F, np.bool_)
    found = 0
    nodes = 0
    level = 0
    while level >= 0:
        if active[level]:
            for q in range(placed[level]):
                c = forced_cell[forced_start[level] + q]
                used[x[c]] = False
                x[c] = 0
            c = free_cell[level]
            used[x[c]] = False
            x[c] = 0
            active[level] = False
        v = cand[level] + 1
        if level < P:
            v = prefix[level] if cand[level] == 0 else N + 1
            if v < 1 or v > N or used[v]:
                v = N + 1
        else:
            while v <= N and used[v]:
                v += 1
        if v > N:
            cand[level] = 0
            level -= 1
            continue
        cand[level] = v
        nodes += 1
        if max_nodes > 0 and nodes > max_nodes:
            return found, nodes, BUDGET_EXCEEDED
        c = free_cell[level]
        x[c] = v
        used[v] = True
        active[level] = True
        placed[level] = 0
        ok = True
        for q in range(forced_start[level], forced_start[level + 1]):
            w = S - x[forced_dep[q, 0]] - x[forced_dep[q, 1]] - x[forced_dep[q, 2]]
            if w < 1 or w > N or used[w]:
                ok = False
                break
            x[forced_cell[q]] = w
            used[w] = True
            placed[level] += 1
        if ok:
            for q in range(check_start[level], check_start[level + 1]):
                s = 0
                for t in range(4):
                    c = check_cell[q, t]
                    if c >= 0:
                        s += x[c]
                if s != check_target[q]:
                    ok = False
                    break
        if not ok:
            continue
        if level == F - 1:
            if found < cap:
                for k in range(N):
                    out[found, k] = x[k]
            found += 1
        else:
            level += 1
            cand[level] = 0
            active[level] = False
    return found, nodes, COMPLETE
