"""Tropical matrices: determinants, singularity certificates, Cramer solving.

The tropical determinant min_{sigma} sum_i a[i][sigma(i)] is computed as a
min-cost bipartite assignment (shortest augmenting paths with exact rational
potentials), never by enumerating k! permutations.  Singularity ("the minimum
is attained by at least two permutations") is certified on the tight subgraph
of the optimal duals.  (n-1) x n systems are solved by tropical Cramer's rule
and, independently, through the linkage-tree transportation problem.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .scalars import INF, PlusInfinity, TropicalScalar, is_finite


class PreconditionError(ValueError):
    """Input violates a documented precondition (CLI maps this to exit 2)."""


class SingularMinorError(PreconditionError):
    """A maximal minor required to be tropically non-singular is singular."""


@dataclass(frozen=True)
class TropMatrix:
    """Rectangular matrix over Q u {+inf}."""

    entries: tuple

    @staticmethod
    def from_rows(rows: Sequence[Sequence[TropicalScalar]]) -> "TropMatrix":
        if not rows:
            raise ValueError("empty matrix")
        width = len(rows[0])
        packed = []
        for row in rows:
            if len(row) != width:
                raise ValueError("ragged rows")
            packed.append(tuple(_as_scalar(v) for v in row))
        return TropMatrix(tuple(packed))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def delete_column(self, j: int) -> "TropMatrix":
        return TropMatrix(tuple(r[:j] + r[j + 1 :] for r in self.entries))

    def submatrix_columns(self, cols: Sequence[int]) -> "TropMatrix":
        return TropMatrix(tuple(tuple(r[j] for j in cols) for r in self.entries))

    def transpose(self) -> "TropMatrix":
        return TropMatrix(tuple(zip(*self.entries)))


def _as_scalar(v) -> TropicalScalar:
    if isinstance(v, PlusInfinity):
        return INF
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"not a tropical scalar: {v!r}")


def _matrix(m) -> TropMatrix:
    return m if isinstance(m, TropMatrix) else TropMatrix.from_rows(m)


@dataclass(frozen=True)
class DetCertificate:
    """Tropical determinant value plus an optimal-permutation certificate.

    witnesses holds one optimal permutation (as a row -> column tuple), or
    the two lexicographically smallest ones when the optimum is attained
    more than once.  A matrix with no finite-weight perfect matching has
    value +inf, multiple_optima False and no witnesses (documented
    convention: "singular" is meaningless without finite optima).
    """

    value: TropicalScalar
    multiple_optima: bool
    witnesses: tuple

    @property
    def is_singular(self) -> bool:
        return self.multiple_optima


def trop_det(matrix) -> DetCertificate:
    """Tropical determinant of a square matrix via min-cost assignment."""
    m = _matrix(matrix)
    k = m.rows
    if m.cols != k:
        raise PreconditionError(f"determinant needs a square matrix, got {k}x{m.cols}")
    match = _assignment(m)
    if match is None:
        return DetCertificate(INF, False, ())
    row_to_col, u, v = match
    value = sum((m.entries[i][row_to_col[i]] for i in range(k)), Fraction(0))
    tight = [
        [j for j in range(k) if is_finite(m.entries[i][j]) and m.entries[i][j] == u[i] + v[j]]
        for i in range(k)
    ]
    first = _lex_min_matching(tight, k, forbidden=None)
    assert first is not None, "optimal matching must survive in the tight graph"
    second = None
    for i in range(k):
        cand = _lex_min_matching(tight, k, forbidden=(i, first[i]))
        if cand is not None and (second is None or cand < second):
            second = cand
    if second is None:
        return DetCertificate(value, False, (tuple(first),))
    return DetCertificate(value, True, (tuple(first), tuple(second)))


def is_tropically_singular(matrix) -> bool:
    """True iff the determinant minimum is attained by >= 2 permutations."""
    return trop_det(matrix).multiple_optima


def _assignment(m: TropMatrix):
    """Shortest-augmenting-path assignment with exact rational potentials.

    Returns (row_to_col, u, v) with u[i] + v[j] <= a[i][j] on finite entries
    and equality on matched ones, or None when no finite perfect matching
    exists.  1-based arrays internally, classic O(k^3) scheme.
    """
    k = m.rows
    a = m.entries
    u = [Fraction(0)] * (k + 1)
    v = [Fraction(0)] * (k + 1)
    p = [0] * (k + 1)  # p[j] = row matched to column j (1-based; 0 = free)
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        p[0] = i
        j0 = 0
        minv: list = [INF] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta: TropicalScalar = INF
            j1 = -1
            for j in range(1, k + 1):
                if used[j]:
                    continue
                entry = a[i0 - 1][j - 1]
                if is_finite(entry):
                    cur = entry - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            if not is_finite(delta):
                return None  # row i cannot reach any free column
            for j in range(k + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                elif is_finite(minv[j]):
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0 != 0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    row_to_col = [0] * k
    for j in range(1, k + 1):
        row_to_col[p[j] - 1] = j - 1
    uu = u[1:]
    vv = v[1:]
    for i in range(k):
        for j in range(k):
            entry = a[i][j]
            if is_finite(entry):
                assert uu[i] + vv[j] <= entry, "dual feasibility violated"
        assert uu[i] + vv[row_to_col[i]] == a[i][row_to_col[i]], "matched edge not tight"
    return row_to_col, uu, vv


def _lex_min_matching(tight, k, forbidden):
    """Lexicographically smallest perfect matching of the tight graph.

    forbidden = (row, col) excludes one edge, which is how the second-best
    optimal permutation is searched (every permutation differing from the
    first avoids at least one of its edges).
    """
    adj = [sorted(cols) for cols in tight]
    if forbidden is not None:
        fi, fj = forbidden
        adj = [([c for c in cols if not (i == fi and c == fj)]) for i, cols in enumerate(adj)]
    chosen = []
    used_cols = set()

    def feasible(start_row):
        # Hall check via augmenting paths on rows start_row..k-1.
        match_col = {}
        for r in range(start_row, k):
            seen = set()
            if not _augment(r, adj, match_col, seen, used_cols):
                return False
        return True

    for i in range(k):
        found = False
        for j in adj[i]:
            if j in used_cols:
                continue
            used_cols.add(j)
            if feasible(i + 1):
                chosen.append(j)
                found = True
                break
            used_cols.remove(j)
        if not found:
            return None
    return chosen


def _augment(r, adj, match_col, seen, used_cols):
    for j in adj[r]:
        if j in used_cols or j in seen:
            continue
        seen.add(j)
        if j not in match_col or _augment(match_col[j], adj, match_col, seen, used_cols):
            match_col[j] = r
            return True
    return False


# --- Cramer's rule for (n-1) x n systems --------------------------------------


@dataclass(frozen=True)
class StableSolution:
    """Point of TP^{n-1} whose j-th coordinate is the minor deleting column j."""

    coords: tuple
    minors: tuple  # DetCertificate per deleted column

    @property
    def all_minors_nonsingular(self) -> bool:
        return all(not c.multiple_optima for c in self.minors)


def cramer_solve(matrix) -> StableSolution:
    """Stable solution of an (n-1) x n tropical linear system."""
    m = _matrix(matrix)
    n = m.cols
    if m.rows != n - 1:
        raise PreconditionError(f"expected shape (n-1) x n, got {m.rows}x{n}")
    for row in m.entries:
        if any(not is_finite(e) for e in row):
            raise PreconditionError("cramer_solve needs finite entries")
    minors = tuple(trop_det(m.delete_column(j)) for j in range(n))
    return StableSolution(tuple(c.value for c in minors), minors)


@dataclass(frozen=True)
class LinkageTree:
    """Spanning tree on column nodes 0..n-1; edge labeled i comes from row i."""

    n: int
    edges: tuple  # (label, j, k) with j < k

    def neighbors(self, node: int):
        for _, j, k in self.edges:
            if j == node:
                yield k
            elif k == node:
                yield j


def linkage_tree(matrix) -> tuple:
    """Linkage tree and solution point of a generic (n-1) x n system.

    Solves the transportation problem with cost matrix C, row sums n and
    column sums n-1.  Requires every maximal minor tropically non-singular;
    the resulting optimum is certified unique, its support has exactly two
    nonzeros per row and forms a spanning tree, and the point solving
    c[i][j_i] + p[j_i] = c[i][k_i] + p[k_i] is returned alongside the tree.
    """
    m = _matrix(matrix)
    n = m.cols
    if m.rows != n - 1:
        raise PreconditionError(f"expected shape (n-1) x n, got {m.rows}x{n}")
    for row in m.entries:
        if any(not is_finite(e) for e in row):
            raise PreconditionError("linkage_tree needs finite entries")
    for cols in itertools.combinations(range(n), n - 1):
        cert = trop_det(m.submatrix_columns(cols))
        if cert.multiple_optima:
            missing = (set(range(n)) - set(cols)).pop()
            raise SingularMinorError(
                f"singular submatrix: maximal minor deleting column {missing}"
            )
    flow = _transportation(m.entries, supply=n, demand=n - 1)
    edges = []
    for i in range(n - 1):
        support = [j for j in range(n) if flow[i][j] > 0]
        assert len(support) == 2, "optimal transportation row must have two nonzeros"
        j, k = support
        edges.append((i, j, k))
    tree = LinkageTree(n, tuple(edges))
    _certify_unique(m.entries, flow, tree)
    p = _solve_tree_equations(m.entries, tree)
    return tree, p


def _transportation(cost, supply: int, demand: int):
    """Min-cost flow on the complete bipartite graph, exact arithmetic.

    Rows each ship `supply` units, columns each receive `demand` units.
    Successive shortest paths with Bellman-Ford on the residual graph;
    instance sizes are tiny so simplicity wins over speed.
    """
    rows = len(cost)
    cols = len(cost[0])
    assert rows * supply == cols * demand, "unbalanced transportation data"
    flow = [[0] * cols for _ in range(rows)]
    remaining = [supply] * rows
    deficit = [demand] * cols
    total = rows * supply
    shipped = 0
    while shipped < total:
        # Residual Bellman-Ford from all rows with remaining supply.
        dist = {}
        pred = {}
        for i in range(rows):
            if remaining[i] > 0:
                dist[("r", i)] = Fraction(0)
        changed = True
        while changed:
            changed = False
            for i in range(rows):
                di = dist.get(("r", i))
                for j in range(cols):
                    if di is not None:
                        nd = di + cost[i][j]
                        if ("c", j) not in dist or nd < dist[("c", j)]:
                            dist[("c", j)] = nd
                            pred[("c", j)] = i
                            changed = True
                    if flow[i][j] > 0 and ("c", j) in dist:
                        nd = dist[("c", j)] - cost[i][j]
                        if ("r", i) not in dist or nd < dist[("r", i)]:
                            dist[("r", i)] = nd
                            pred[("r", i)] = j
                            changed = True
        target = None
        best = None
        for j in range(cols):
            if deficit[j] > 0 and ("c", j) in dist:
                if best is None or dist[("c", j)] < best:
                    best = dist[("c", j)]
                    target = j
        assert target is not None, "transportation must stay feasible"
        # Walk predecessors back to a supply row, collecting the path.
        path = []
        node = ("c", target)
        while True:
            if node[0] == "c":
                i = pred[node]
                path.append((i, node[1], +1))
                node = ("r", i)
                if remaining[i] > 0 and ("r", node[1]) not in pred:
                    pass
                if node not in pred:
                    break
            else:
                j = pred[node]
                path.append((node[1], j, -1))
                node = ("c", j)
        start_row = node[1]
        bottleneck = min(remaining[start_row], deficit[target])
        for i, j, sign in path:
            if sign < 0:
                bottleneck = min(bottleneck, flow[i][j])
        assert bottleneck > 0
        for i, j, sign in path:
            flow[i][j] += sign * bottleneck
        remaining[start_row] -= bottleneck
        deficit[target] -= bottleneck
        shipped += bottleneck
    return flow


def _certify_unique(cost, flow, tree: LinkageTree) -> None:
    """Certify the transportation optimum is the unique one.

    The support is a spanning tree with all 2n-2 basic values positive (a
    nondegenerate vertex), so uniqueness holds iff every off-tree cell has
    strictly positive reduced cost for the tree potentials.
    """
    n = tree.n
    support = {(lab, j) for lab, j, _ in tree.edges} | {(lab, k) for lab, _, k in tree.edges}
    # Connectivity of the column nodes through row edges.
    seen = {0}
    frontier = [0]
    while frontier:
        node = frontier.pop()
        for nxt in tree.neighbors(node):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    assert seen == set(range(n)), "linkage support must span all columns"
    # Potentials: pi_col on columns, pi_row on rows, c = pi_row + pi_col on support.
    pi_col = {0: Fraction(0)}
    pi_row = {}
    pending = list(tree.edges)
    while pending:
        rest = []
        for lab, j, k in pending:
            if j in pi_col:
                pi_row[lab] = cost[lab][j] - pi_col[j]
                pi_col.setdefault(k, cost[lab][k] - pi_row[lab])
            elif k in pi_col:
                pi_row[lab] = cost[lab][k] - pi_col[k]
                pi_col.setdefault(j, cost[lab][j] - pi_row[lab])
            else:
                rest.append((lab, j, k))
        assert len(rest) < len(pending), "tree potentials must propagate"
        pending = rest
    for i in range(n - 1):
        for j in range(n):
            if (i, j) in support:
                assert cost[i][j] == pi_row[i] + pi_col[j]
                assert flow[i][j] > 0
            else:
                reduced = cost[i][j] - pi_row[i] - pi_col[j]
                assert reduced > 0, "transportation optimum is not unique"


def _solve_tree_equations(cost, tree: LinkageTree):
    """Unique (up to scaling) p with c[i][j_i] + p[j_i] = c[i][k_i] + p[k_i]."""
    p = {0: Fraction(0)}
    pending = list(tree.edges)
    while pending:
        rest = []
        for lab, j, k in pending:
            if j in p:
                p[k] = p[j] + cost[lab][j] - cost[lab][k]
            elif k in p:
                p[j] = p[k] + cost[lab][k] - cost[lab][j]
            else:
                rest.append((lab, j, k))
        assert len(rest) < len(pending)
        pending = rest
    return tuple(p[j] for j in range(tree.n))


# --- lines in TP^3 from tropical Pluecker data ---------------------------------


@dataclass(frozen=True)
class TP3Line:
    """A tropical line in TP^3: a segment with two coordinate rays per end.

    case_tag is "[12,34]", "[13,24]", "[14,23]" or "degenerate" (all three
    pairing sums equal; the endpoints coincide).
    """

    case_tag: str
    endpoint_1: tuple
    endpoint_2: tuple


class PlueckerError(PreconditionError):
    """The tropical Grassmann-Pluecker relation fails."""


def tp3_line(a12, a13, a14, a23, a24, a34) -> TP3Line:
    """Classify and reconstruct a line in TP^3 from its six Pluecker orders.

    Requires min(a12+a34, a13+a24, a14+a23) attained at least twice; the
    pairing with the strictly largest sum names the case, and the endpoint
    coordinates follow the closed-form tables.
    """
    vals = [a12, a13, a14, a23, a24, a34]
    if any(not is_finite(_as_scalar(v)) for v in vals):
        raise PreconditionError("tp3_line needs finite Pluecker coordinates")
    a12, a13, a14, a23, a24, a34 = (Fraction(v) for v in vals)
    s1, s2, s3 = a12 + a34, a13 + a24, a14 + a23
    lo = min(s1, s2, s3)
    if [s1, s2, s3].count(lo) < 2:
        raise PlueckerError(
            "tropical Pluecker relation violated: the minimum of "
            "(a12+a34, a13+a24, a14+a23) must be attained at least twice"
        )
    # Endpoint tables.  Each endpoint is the vertex where two circuits tie
    # completely (the circuits missing the far pair's indices); the case's
    # defining equality makes several coordinate representations equivalent,
    # and the forms below are the ones that satisfy all four circuits.
    if s1 == s2 == s3:
        e = (a23 + a34, a13 + a34, a14 + a23, a13 + a23)
        return TP3Line("degenerate", e, e)
    if s2 == s3:  # s1 strictly largest
        return TP3Line(
            "[12,34]",
            (a23 + a34, a13 + a34, a14 + a23, a13 + a23),
            (a13 + a24, a13 + a14, a12 + a14, a12 + a13),
        )
    if s1 == s3:  # s2 strictly largest
        return TP3Line(
            "[13,24]",
            (a23 + a34, a13 + a34, a14 + a23, a13 + a23),
            (a24 + a34, a14 + a34, a14 + a24, a12 + a34),
        )
    return TP3Line(
        "[14,23]",
        (a24 + a34, a14 + a34, a14 + a24, a13 + a24),
        (a23 + a34, a13 + a34, a12 + a34, a13 + a23),
    )


def tp3_circuit_memberships(pluecker, x) -> list:
    """For each of the four circuits, whether its 3-term min is attained twice.

    Circuits of the Pluecker data (a12,...,a34) at x in TP^3:
      a12+x2, a13+x3, a14+x4  /  a12+x1, a23+x3, a24+x4  /
      a13+x1, a23+x2, a34+x4  /  a14+x1, a24+x2, a34+x3
    """
    a12, a13, a14, a23, a24, a34 = (Fraction(v) for v in pluecker)
    x1, x2, x3, x4 = (Fraction(v) for v in x)
    out = []
    for terms in (
        (a12 + x2, a13 + x3, a14 + x4),
        (a12 + x1, a23 + x3, a24 + x4),
        (a13 + x1, a23 + x2, a34 + x4),
        (a14 + x1, a24 + x2, a34 + x3),
    ):
        lo = min(terms)
        out.append(list(terms).count(lo) >= 2)
    return out
