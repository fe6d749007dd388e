"""Exchange matrices, seeds, mutation and mutation-class exploration.

A seed is an ordered cluster of Laurent polynomials together with a
sign-symmetric integer exchange matrix.  Mutation at index k replaces the
k-th cluster variable through the exchange relation

    z * z' = prod_{b[x][k] > 0} x ** b[x][k]  +  prod_{b[x][k] < 0} x ** -b[x][k]

(empty products are 1) and applies matrix mutation to the exchange matrix.
The division is always exact on valid seeds; a NotDivisible escaping from
here signals invalid input or a bug.

ExchangeMatrix admits any sign-symmetric integer matrix.  Matrix mutation
keeps skew-symmetrizable matrices (in particular skew-symmetric ones)
sign-symmetric; a strictly sign-symmetric matrix outside that class can
mutate out of sign-symmetry, in which case the result is unrepresentable
and NotSignSymmetric is raised.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import LaurentPoly


class IndexOutOfRange(IndexError):
    pass


class NotSignSymmetric(ValueError):
    pass


FINITE = "finite"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class ExchangeMatrix:
    """Square integer matrix with zero diagonal, sign-symmetric entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise ValueError("matrix must be nonempty")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            if not all(isinstance(v, int) for v in row):
                raise TypeError("entries must be ints")
        for i in range(n):
            if self.rows[i][i] != 0:
                raise NotSignSymmetric(f"nonzero diagonal entry at ({i},{i})")
            for j in range(i + 1, n):
                a, b = self.rows[i][j], self.rows[j][i]
                if (a > 0) != (b < 0) or (a == 0) != (b == 0):
                    raise NotSignSymmetric(f"entries ({i},{j})={a} and ({j},{i})={b}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExchangeMatrix":
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def is_skew_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == -self.rows[j][i] for i in range(self.n) for j in range(self.n)
        )

    def mutate(self, k: int) -> "ExchangeMatrix":
        """Matrix mutation at index k: negate row/column k, adjust the rest."""
        n = self.n
        if not 0 <= k < n:
            raise IndexOutOfRange(f"mutation index {k} out of range for n={n}")
        b = self.rows
        new = []
        for x in range(n):
            row = []
            for y in range(n):
                if x == k or y == k:
                    row.append(-b[x][y])
                else:
                    bump = abs(b[x][k]) * b[k][y] + b[x][k] * abs(b[k][y])
                    assert bump % 2 == 0
                    row.append(b[x][y] + bump // 2)
            new.append(tuple(row))
        return ExchangeMatrix(tuple(new))

    def permuted(self, perm: Sequence[int]) -> "ExchangeMatrix":
        """Apply the same permutation to rows and columns."""
        return ExchangeMatrix(
            tuple(tuple(self.rows[perm[i]][perm[j]] for j in range(self.n)) for i in range(self.n))
        )


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentPoly, ...]
    matrix: ExchangeMatrix

    def __post_init__(self):
        if len(self.cluster) != self.matrix.n:
            raise ValueError("cluster length must match matrix size")
        nv = {p.num_vars for p in self.cluster}
        if len(nv) > 1:
            raise ValueError("cluster entries must share num_vars")

    @classmethod
    def initial(cls, matrix: ExchangeMatrix) -> "Seed":
        """Seed whose cluster is the fresh variables x1..xn."""
        n = matrix.n
        return cls(tuple(LaurentPoly.variable(n, i) for i in range(n)), matrix)

    @property
    def n(self) -> int:
        return self.matrix.n

    def mutate(self, k: int) -> "Seed":
        n = self.n
        if not 0 <= k < n:
            raise IndexOutOfRange(f"mutation index {k} out of range for n={n}")
        nv = self.cluster[0].num_vars
        pos = LaurentPoly.one(nv)
        neg = LaurentPoly.one(nv)
        for x in range(n):
            e = self.matrix.rows[x][k]
            if e > 0:
                pos = pos * self.cluster[x] ** e
            elif e < 0:
                neg = neg * self.cluster[x] ** (-e)
        replacement = (pos + neg).divide_exact(self.cluster[k])
        cluster = list(self.cluster)
        cluster[k] = replacement
        return Seed(tuple(cluster), self.matrix.mutate(k))

    def key(self):
        return (tuple(p.order_key() for p in self.cluster), self.matrix.rows)


def mutate_matrix(matrix: ExchangeMatrix, k: int) -> ExchangeMatrix:
    return matrix.mutate(k)


def mutate_seed(seed: Seed, k: int) -> Seed:
    return seed.mutate(k)


def canonical_seed(seed: Seed) -> Seed:
    """Sort the cluster canonically, permuting matrix rows/columns along.

    Seeds that differ only by a simultaneous relabeling of their cluster
    entries get identical canonical forms (assuming distinct entries, which
    holds for every seed reachable from valid initial data).
    """
    perm = sorted(range(seed.n), key=lambda i: seed.cluster[i].order_key())
    cluster = tuple(seed.cluster[i] for i in perm)
    return Seed(cluster, seed.matrix.permuted(perm))


@dataclass(frozen=True)
class Budget:
    """Exploration limits: max_seeds bounds visited canonical seeds,
    max_terms bounds the term count of any single cluster variable."""

    max_seeds: int
    max_terms: int

    def __post_init__(self):
        if self.max_seeds < 1 or self.max_terms < 1:
            raise ValueError("budgets must be positive")


@dataclass(frozen=True)
class MutationClassReport:
    variables: frozenset[LaurentPoly]
    seeds_visited: int
    clusters: tuple[Seed, ...]
    finite: str  # FINITE or BUDGET_EXHAUSTED
    budget: Budget

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    @property
    def num_clusters(self) -> int:
        return len(self.clusters)


def enumerate_class(
    seed: Seed, budget: Budget, mutation_order: Sequence[int] | None = None
) -> MutationClassReport:
    """Breadth-first closure of a seed under mutation at every index.

    Seeds are identified up to canonical form (unordered cluster plus the
    correspondingly permuted matrix).  Exploration stops with
    BUDGET_EXHAUSTED as soon as either budget would be exceeded; the report
    then covers the part explored so far.  Budget exhaustion is a report
    state, not an error.
    """
    order = list(mutation_order) if mutation_order is not None else list(range(seed.n))
    if sorted(order) != list(range(seed.n)):
        raise ValueError("mutation_order must be a permutation of range(n)")

    start = canonical_seed(seed)
    if any(p.term_count() > budget.max_terms for p in start.cluster):
        return MutationClassReport(
            variables=frozenset(start.cluster),
            seeds_visited=1,
            clusters=(start,),
            finite=BUDGET_EXHAUSTED,
            budget=budget,
        )
    visited: dict = {start.key(): start}
    queue = deque([start])
    exhausted = False
    while queue and not exhausted:
        current = queue.popleft()
        for k in order:
            neighbor = canonical_seed(current.mutate(k))
            nkey = neighbor.key()
            if nkey in visited:
                continue
            if any(p.term_count() > budget.max_terms for p in neighbor.cluster):
                exhausted = True
                break
            if len(visited) >= budget.max_seeds:
                exhausted = True
                break
            visited[nkey] = neighbor
            queue.append(neighbor)

    clusters = tuple(visited[k] for k in sorted(visited))
    variables = frozenset(p for s in clusters for p in s.cluster)
    return MutationClassReport(
        variables=variables,
        seeds_visited=len(clusters),
        clusters=clusters,
        finite=BUDGET_EXHAUSTED if exhausted else FINITE,
        budget=budget,
    )
