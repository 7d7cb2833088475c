"""Minimum-weight fault-tolerant resolving sets on cographs.

The solver runs a 16-state dynamic program bottom-up over the cotree. For a
subtree realizing graph ``H``, entry ``(a, b, c, d)`` of its state table
holds a cheapest vertex set ``R`` that separates every vertex pair of ``H``
at least twice in the neighbourhood sense (``resolving.is_2nr``) and whose
existence flags match the index:

  ``a``: some vertex has no member of ``R`` in its closed neighbourhood
  ``b``: some vertex has exactly one member of ``R`` in its closed
         neighbourhood
  ``c``: some vertex is adjacent to all but one member of ``R``
  ``d``: some vertex is adjacent to every member of ``R``

``a``/``b`` count the vertex itself when it belongs to ``R`` (closed
neighbourhood); ``c``/``d`` do not (open neighbourhood). This split makes
complementation exact: complementing the graph turns 0-vertices into
vertices adjacent to all of ``R`` and 1-vertices into vertices adjacent to
all but one member, so the whole table is just permuted by reversing the
index. Entries with ``a = b = 1`` are permanently infeasible: a vertex
with no chosen neighbour and a vertex with one chosen neighbour are
separated at most once.

On a connected cograph the twice-separated sets are exactly the
fault-tolerant resolving sets, so the cheapest finite entry at the root is
the weighted fault-tolerant metric dimension. Disconnected graphs are
solved per component; isolated vertices all join the solution when there
are at least two of them, and a single isolated vertex never does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .cotree import Complement, Cotree, Leaf, Union, build_cotree
from .cotree import EmptyGraphError, NotCographError
from .graph import Graph, connected_components, induced_subgraph

Weight = int | float


class Entry(NamedTuple):
    """One feasible table entry: total weight plus a reconstruction record.

    ``how`` is one of ``('pair', v1, v2)``, ``('add', v, child_entry)``,
    ``('skip', child_entry)`` or ``('join', left_entry, right_entry)``.
    """

    weight: Weight
    how: tuple


Table = tuple  # 16 slots of Entry | None, indexed by state_index


@dataclass(frozen=True)
class SingleVertex:
    """Value of a one-leaf subtree, which has no state table."""

    vertex: int


DpValue = SingleVertex | Table


def state_index(a: int, b: int, c: int, d: int) -> int:
    return a * 8 + b * 4 + c * 2 + d


def state_tuple(i: int) -> tuple[int, int, int, int]:
    return (i >> 3 & 1, i >> 2 & 1, i >> 1 & 1, i & 1)


# Reversing the four flag bits, applied when a subtree is complemented.
_REVERSED = tuple(state_index(*reversed(state_tuple(i))) for i in range(16))

_EMPTY: Table = (None,) * 16


def _min_entry(entries) -> Entry | None:
    """First entry of minimal weight, scanning in the given order."""
    best = None
    for e in entries:
        if e is not None and (best is None or e.weight < best.weight):
            best = e
    return best


def dp_union_leaf_leaf(v1: int, v2: int, weights: Sequence[Weight]) -> Table:
    """Table for the union of two single vertices.

    Both vertices must be chosen (the pair has no other separators), each
    then has exactly one chosen vertex in its closed neighbourhood and no
    vertex is adjacent to any chosen vertex, so the only feasible state is
    (0, 1, 0, 0).
    """
    table = [None] * 16
    table[state_index(0, 1, 0, 0)] = Entry(
        weights[v1] + weights[v2], ("pair", v1, v2)
    )
    return tuple(table)


def dp_union_leaf_table(v: int, t2: Table, weights: Sequence[Weight]) -> Table:
    """Table for the union of a single vertex ``v`` with a larger subtree.

    The isolated vertex is a 0-vertex when left out and a 1-vertex when
    chosen, so no state with ``a = b = 0`` is feasible. Choosing ``v``
    forbids 0-vertices on the other side and, since ``v`` has no
    neighbours, no vertex can be adjacent to the whole set; the other
    side's all-adjacent vertices become adjacent to all but one member.
    Leaving ``v`` out makes it a 0-vertex, which forces the other side to
    have neither 0- nor 1-vertices; its remaining flags pass through.
    """
    table: list[Entry | None] = [None] * 16
    wv = weights[v]

    chosen_no_top = _min_entry(
        t2[state_index(0, b, c, 0)] for b in (0, 1) for c in (0, 1)
    )
    if chosen_no_top is not None:
        table[state_index(0, 1, 0, 0)] = Entry(
            wv + chosen_no_top.weight, ("add", v, chosen_no_top)
        )
    chosen_with_top = _min_entry(
        t2[state_index(0, b, c, 1)] for b in (0, 1) for c in (0, 1)
    )
    if chosen_with_top is not None:
        table[state_index(0, 1, 1, 0)] = Entry(
            wv + chosen_with_top.weight, ("add", v, chosen_with_top)
        )
    for c in (0, 1):
        for d in (0, 1):
            e = t2[state_index(0, 0, c, d)]
            if e is not None:
                table[state_index(1, 0, c, d)] = Entry(e.weight, ("skip", e))
    return tuple(table)


def dp_union_table_table(t1: Table, t2: Table) -> Table:
    """Table for the union of two subtrees with at least two leaves each.

    Each side contributes at least two chosen vertices, so no vertex can be
    adjacent to all, or all but one, of the combined set: only states
    (0,0,0,0), (0,1,0,0) and (1,0,0,0) can be finite. A 0-vertex on one
    side rules out 0- and 1-vertices on the other (their cross pair would
    be separated at most once).
    """
    table: list[Entry | None] = [None] * 16

    def side_best(t: Table, a: int, b: int) -> Entry | None:
        return _min_entry(t[state_index(a, b, c, d)] for c in (0, 1) for d in (0, 1))

    def joined(e1: Entry | None, e2: Entry | None) -> Entry | None:
        if e1 is None or e2 is None:
            return None
        return Entry(e1.weight + e2.weight, ("join", e1, e2))

    clean1, clean2 = side_best(t1, 0, 0), side_best(t2, 0, 0)
    one1, one2 = side_best(t1, 0, 1), side_best(t2, 0, 1)
    zero1, zero2 = side_best(t1, 1, 0), side_best(t2, 1, 0)

    table[state_index(0, 0, 0, 0)] = joined(clean1, clean2)
    table[state_index(0, 1, 0, 0)] = _min_entry(
        [joined(clean1, one2), joined(one1, clean2), joined(one1, one2)]
    )
    table[state_index(1, 0, 0, 0)] = _min_entry(
        [joined(zero1, clean2), joined(clean1, zero2)]
    )
    return tuple(table)


def dp_complement(value: DpValue) -> DpValue:
    """Complement a subtree's value: permute the table by reversing indices.

    A single vertex is its own complement. Entries keep their weights and
    reconstruction records; applying this twice restores the table.
    """
    if isinstance(value, SingleVertex):
        return value
    return tuple(value[_REVERSED[i]] for i in range(16))


def dp_run(
    t: Cotree,
    weights: Sequence[Weight],
    trace: list[tuple[Cotree, DpValue]] | None = None,
) -> DpValue:
    """Evaluate the dynamic program bottom-up over the cotree.

    Constant table work per node. When ``trace`` is a list, every node's
    value is appended to it in post-order.
    """
    values: list[DpValue] = []
    stack: list[tuple[Cotree, bool]] = [(t, False)]
    while stack:
        node, ready = stack.pop()
        if not ready:
            stack.append((node, True))
            if isinstance(node, Union):
                stack.append((node.right, False))
                stack.append((node.left, False))
            elif isinstance(node, Complement):
                stack.append((node.child, False))
            continue
        value: DpValue
        if isinstance(node, Leaf):
            value = SingleVertex(node.vertex)
        elif isinstance(node, Complement):
            value = dp_complement(values.pop())
        else:
            right = values.pop()
            left = values.pop()
            left_single = isinstance(left, SingleVertex)
            right_single = isinstance(right, SingleVertex)
            if left_single and right_single:
                value = dp_union_leaf_leaf(left.vertex, right.vertex, weights)
            elif left_single:
                value = dp_union_leaf_table(left.vertex, right, weights)
            elif right_single:
                value = dp_union_leaf_table(right.vertex, left, weights)
            else:
                value = dp_union_table_table(left, right)
        values.append(value)
        if trace is not None:
            trace.append((node, value))
    return values[0]


def entry_vertices(entry: Entry) -> frozenset[int]:
    """Materialize the vertex set behind an entry; linear in the output."""
    out: list[int] = []
    stack = [entry]
    while stack:
        how = stack.pop().how
        tag = how[0]
        if tag == "pair":
            out.append(how[1])
            out.append(how[2])
        elif tag == "add":
            out.append(how[1])
            stack.append(how[2])
        elif tag == "skip":
            stack.append(how[1])
        else:
            stack.append(how[1])
            stack.append(how[2])
    return frozenset(out)


def finite_states(value: DpValue) -> dict[tuple[int, int, int, int], Entry]:
    """Finite table entries keyed by their flag tuple (for tests and display)."""
    if isinstance(value, SingleVertex):
        return {}
    return {state_tuple(i): e for i, e in enumerate(value) if e is not None}


def extract_connected_min(value: DpValue) -> tuple[Weight, frozenset[int]]:
    """Cheapest finite entry of a root table, with its vertex set.

    Ties go to the lexicographically smallest flag tuple. Only meaningful
    for subtrees with at least two leaves (single vertices have no table).
    """
    if isinstance(value, SingleVertex):
        raise TypeError("a single-vertex subtree has no state table")
    best = None
    for e in value:
        if e is not None and (best is None or e.weight < best.weight):
            best = e
    if best is None:
        raise RuntimeError("state table has no feasible entry")
    return best.weight, entry_vertices(best)


@dataclass(frozen=True)
class ComponentOutcome:
    """How one connected component contributed to the solution.

    ``kind`` is ``"solved"`` for components handled by the dynamic program,
    or ``"isolated-included"`` / ``"isolated-excluded"`` for single-vertex
    components.
    """

    vertices: tuple[int, ...]
    chosen: tuple[int, ...]
    weight: Weight
    kind: str


@dataclass(frozen=True)
class Solution:
    """Total weight, chosen vertex set and the per-component breakdown."""

    weight: Weight
    vertices: tuple[int, ...]
    components: tuple[ComponentOutcome, ...]

    def verify(self, g: Graph) -> bool:
        """Re-check the certificate: the chosen set is fault-tolerant for ``g``."""
        from .resolving import is_fault_tolerant

        return is_fault_tolerant(g, set(self.vertices))


def _check_weights(g: Graph, weights: Sequence[Weight] | None) -> list[Weight]:
    if weights is None:
        return [1] * g.n
    w = list(weights)
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    for v, x in enumerate(w):
        if x < 0:
            raise ValueError(f"negative weight {x} at vertex {v}")
    return w


def solve(g: Graph, weights: Sequence[Weight] | None = None) -> Solution:
    """Minimum-weight fault-tolerant resolving set of a vertex-weighted cograph.

    Components with at least two vertices are solved independently over
    their cotrees. All isolated vertices are included when there are at
    least two of them; a single isolated vertex is excluded (the other
    components already separate it twice, and with no other vertices the
    condition is vacuous). Raises ``NotCographError`` if any component is
    not a cograph and ``EmptyGraphError`` for the empty graph.
    """
    if g.n == 0:
        raise EmptyGraphError("the empty graph has no solution")
    w = _check_weights(g, weights)
    components = connected_components(g)
    isolated_total = sum(1 for comp in components if len(comp) == 1)
    include_isolated = isolated_total >= 2

    outcomes = []
    for comp in components:
        members = tuple(sorted(comp))
        if len(comp) == 1:
            v = members[0]
            if include_isolated:
                outcomes.append(
                    ComponentOutcome(members, (v,), w[v], "isolated-included")
                )
            else:
                outcomes.append(ComponentOutcome(members, (), 0, "isolated-excluded"))
            continue
        sub, old_to_new = induced_subgraph(g, comp)
        new_to_old = {new: old for old, new in old_to_new.items()}
        try:
            tree = build_cotree(sub)
        except NotCographError as err:
            witness = err.witness
            if witness is not None:
                witness = tuple(new_to_old[v] for v in witness)
            raise NotCographError(witness) from None
        sub_weights = [w[new_to_old[i]] for i in range(sub.n)]
        value = dp_run(tree, sub_weights)
        weight, chosen_local = extract_connected_min(value)
        chosen = tuple(sorted(new_to_old[v] for v in chosen_local))
        outcomes.append(ComponentOutcome(members, chosen, weight, "solved"))

    total: Weight = sum(o.weight for o in outcomes)
    vertices = tuple(sorted(v for o in outcomes for v in o.chosen))
    return Solution(total, vertices, tuple(outcomes))
