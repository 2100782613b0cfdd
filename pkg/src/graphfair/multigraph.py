"""Multigraph and vertex-enumeration primitives.

Vertices are opaque hashable ids (ints or strings in practice).  Edges are
unordered pairs carrying stable integer ids; loops and parallel edges are
first-class.  A loop contributes 2 to its vertex's degree.  Instances are
treated as immutable once constructed, so they can be shared freely.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping


def vkey(v):
    """Deterministic sort key for mixed int/str vertex ids."""
    if isinstance(v, int) and not isinstance(v, bool):
        return (0, v, "")
    return (1, 0, str(v))


class Multigraph:
    def __init__(self, vertices: Iterable[Hashable] = (), edges=(), name: str = ""):
        """Build a multigraph.

        ``edges`` is either an iterable of ``(u, v)`` pairs (ids assigned
        0, 1, ...) or a mapping ``edge_id -> (u, v)``.  Endpoints are added
        to the vertex set automatically.
        """
        self.name = name
        vs = set(vertices)
        if isinstance(edges, Mapping):
            items = list(edges.items())
        else:
            items = list(enumerate(edges))
        edict = {}
        for eid, (u, v) in items:
            if eid in edict:
                raise ValueError(f"duplicate edge id {eid!r}")
            vs.add(u)
            vs.add(v)
            edict[eid] = (u, v)
        self._vertices = frozenset(vs)
        self._edges = edict
        adj: dict = {v: [] for v in vs}
        for eid, (u, v) in edict.items():
            adj[u].append((eid, v))
            adj[v].append((eid, u))  # a loop lands here twice, giving degree 2
        # deterministic incidence order
        self._adj = {
            v: tuple(sorted(pairs, key=lambda p: (str(p[0]), vkey(p[1]))))
            for v, pairs in adj.items()
        }
        self._sorted_vertices = tuple(sorted(vs, key=vkey))

    # -- basic accessors -------------------------------------------------

    @property
    def vertices(self) -> frozenset:
        return self._vertices

    @property
    def edges(self) -> dict:
        """Mapping edge_id -> (u, v).  Do not mutate."""
        return self._edges

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def sorted_vertices(self) -> tuple:
        return self._sorted_vertices

    def sorted_edge_ids(self) -> list:
        return sorted(self._edges, key=lambda e: (str(e), e if isinstance(e, int) else 0))

    def edge_ends(self, eid):
        return self._edges[eid]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def incident(self, v) -> tuple:
        """Incidence list of ``(edge_id, other_endpoint)`` pairs; loops appear twice."""
        return self._adj[v]

    def neighbors(self, v) -> set:
        return {w for _, w in self._adj[v]}

    def multiplicity(self, u, v) -> int:
        a, b = (u, v) if vkey(u) <= vkey(v) else (v, u)
        return sum(1 for x, y in self._edges.values() if (min((x, y), key=vkey), max((x, y), key=vkey)) == (a, b))

    def loops_at(self, v) -> int:
        return sum(1 for x, y in self._edges.values() if x == v and y == v)

    def edges_between(self, u, v) -> list:
        """Edge ids joining u and v (u == v gives loops)."""
        key = frozenset((u, v))
        return sorted(
            (eid for eid, (x, y) in self._edges.items() if frozenset((x, y)) == key),
            key=lambda e: (str(e),),
        )

    def next_edge_id(self) -> int:
        ints = [e for e in self._edges if isinstance(e, int)]
        return max(ints, default=-1) + 1

    # -- connectivity ----------------------------------------------------

    def components(self, within: Iterable | None = None) -> list[frozenset]:
        """Connected components of the subgraph induced by ``within`` (default: all).

        Returned in canonical order (by smallest contained vertex).
        """
        allowed = self._vertices if within is None else frozenset(within)
        seen: set = set()
        comps = []
        for start in sorted(allowed, key=vkey):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for _, w in self._adj[x]:
                    if w in allowed and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        return len(self.components()) == 1

    def is_connected_subset(self, S: Iterable) -> bool:
        S = frozenset(S)
        if len(S) <= 1:
            return True
        if not S <= self._vertices:
            raise ValueError("subset contains unknown vertices")
        return len(self.components(within=S)) == 1

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Multigraph{tag} |V|={self.n_vertices} |E|={self.n_edges}>"


class Enumeration:
    """An ordered list of distinct vertices with 1-based segment accessors.

    ``segment(s, t)`` is the inclusive run of positions s..t and is empty
    whenever s > t.  ``left_of(r)`` / ``right_of(r)`` are the strict prefix
    and suffix around position r.
    """

    __slots__ = ("order", "_pos")

    def __init__(self, order: Iterable):
        self.order = tuple(order)
        if len(set(self.order)) != len(self.order):
            raise ValueError("enumeration repeats a vertex")
        self._pos = {v: i + 1 for i, v in enumerate(self.order)}

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other):
        return isinstance(other, Enumeration) and self.order == other.order

    def __hash__(self):
        return hash(self.order)

    def at(self, i: int):
        """Vertex at 1-based position i."""
        if not 1 <= i <= len(self.order):
            raise IndexError(f"position {i} out of range 1..{len(self.order)}")
        return self.order[i - 1]

    def position(self, v) -> int:
        return self._pos[v]

    def __contains__(self, v):
        return v in self._pos

    def segment(self, s: int, t: int) -> tuple:
        if s > t:
            return ()
        return self.order[max(s, 1) - 1 : t]

    def left_of(self, r: int) -> tuple:
        return self.segment(1, r - 1)

    def right_of(self, r: int) -> tuple:
        return self.segment(r + 1, len(self.order))

    def concat(self, other: "Enumeration | Iterable") -> "Enumeration":
        tail = other.order if isinstance(other, Enumeration) else tuple(other)
        return Enumeration(self.order + tuple(tail))

    def reversed_(self) -> "Enumeration":
        return Enumeration(reversed(self.order))

    def __repr__(self):
        return f"Enumeration({list(self.order)!r})"
