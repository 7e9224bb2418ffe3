"""Independent brute-force oracles used to pin expected values.

Everything here is deliberately naive (factorial enumeration, vertex
enumeration) and shares no code with the production paths it checks.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from tropgeo.scalars import INF, PlusInfinity


def brute_det(rows):
    """(value, count of optimal permutations, sorted optimal permutations)."""
    k = len(rows)
    best = INF
    argmins = []
    for perm in itertools.permutations(range(k)):
        total = Fraction(0)
        feasible = True
        for i in range(k):
            entry = rows[i][perm[i]]
            if isinstance(entry, PlusInfinity):
                feasible = False
                break
            total += entry
        if not feasible:
            continue
        if total < best:
            best = total
            argmins = [perm]
        elif total == best:
            argmins.append(perm)
    return best, len(argmins), sorted(argmins)


def brute_cross(a, b):
    """Componentwise re-derivation of the tropical cross product."""
    a1, a2, a3 = a
    b1, b2, b3 = b
    return (
        min(a2 + b3, a3 + b2),
        min(a3 + b1, a1 + b3),
        min(a1 + b2, a2 + b1),
    )


def brute_transportation(cost, supply, demand):
    """Optimal value and all optimal vertices by spanning-tree enumeration.

    Every vertex of the transportation polytope is the basic solution of a
    spanning tree of the complete bipartite support graph; tiny instances
    only.
    """
    m, n = len(cost), len(cost[0])
    edges = [(i, j) for i in range(m) for j in range(n)]
    nodes = m + n
    best = None
    optima = []
    for tree_edges in itertools.combinations(edges, nodes - 1):
        parent = list(range(nodes))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i, j in tree_edges:
            a, b = find(i), find(m + j)
            if a == b:
                ok = False
                break
            parent[a] = b
        if not ok:
            continue
        flow = _solve_tree_flow(tree_edges, m, n, supply, demand)
        if flow is None or any(v < 0 for v in flow.values()):
            continue
        value = sum(cost[i][j] * v for (i, j), v in flow.items())
        if best is None or value < best:
            best = value
            optima = [flow]
        elif value == best:
            if all(flow != o for o in optima):
                optima.append(flow)
    return best, optima


def _solve_tree_flow(tree_edges, m, n, supply, demand):
    adj = {}
    for i, j in tree_edges:
        adj.setdefault(i, []).append((m + j, (i, j)))
        adj.setdefault(m + j, []).append((i, (i, j)))
    need = [supply] * m + [demand] * n
    flow = {e: None for e in tree_edges}
    # Peel leaves: a leaf's single edge must carry its full remaining need.
    degree = {node: len(neigh) for node, neigh in adj.items()}
    if len(adj) < m + n:
        return None
    active = dict(adj)
    remaining = list(need)
    pending = set(tree_edges)
    while pending:
        leaf = next(
            (node for node in active if sum(1 for _, e in active[node] if e in pending) == 1),
            None,
        )
        if leaf is None:
            return None
        other, edge = next((o, e) for o, e in active[leaf] if e in pending)
        flow[edge] = remaining[leaf]
        remaining[other] -= remaining[leaf]
        remaining[leaf] = 0
        pending.discard(edge)
    if any(r != 0 for r in remaining):
        return None
    return {e: v for e, v in flow.items() if v != 0}
