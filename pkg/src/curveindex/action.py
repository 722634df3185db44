"""Cyclic group actions on multigraphs.

An action of the cyclic group of order ``I`` is recorded by the permutations
that a chosen generator induces on vertex and edge identifiers.  Because the
group is cyclic it has exactly one subgroup per divisor ``d`` of ``I``,
namely the one generated by the ``d``-th power of the generator, so
subgroups are addressed by that co-degree ``d`` alone.

Besides validation, the module computes orbit sizes, fixed vertices and
stabilized edges per subgroup, and lifts voltage graphs into derived graphs
carrying a vertex-free action (the workhorse for randomized testing).
"""

from __future__ import annotations

from dataclasses import dataclass

from .multigraph import MultiGraph


class ActionError(ValueError):
    """Invalid action parameters (bad order, bad subgroup degree, ...)."""


@dataclass(frozen=True)
class CyclicAction:
    """Generator images of a cyclic group acting by graph automorphisms.

    ``order`` is the order of the acting group, not necessarily the exact
    order of the generator permutation (the action may be non-faithful, as
    with a trivial action declared at order 1).
    """

    order: int
    vertex_map: dict[str, str]
    edge_map: dict[str, str]


@dataclass(frozen=True)
class Subgroup:
    """The subgroup generated by the ``d``-th power of the generator.

    ``d`` must divide the acting order ``I``; the subgroup then has order
    ``I/d`` and index ``d``.  ``d == I`` is the trivial subgroup, ``d == 1``
    the whole group.
    """

    d: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ActionError(f"subgroup co-degree must be positive, got {self.d}")


@dataclass(frozen=True)
class Violation:
    law: str
    subject: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def map_power(mapping: dict[str, str], k: int) -> dict[str, str]:
    """The ``k``-fold composite of a permutation given as a dict."""
    out = {x: x for x in mapping}
    for _ in range(k):
        out = {x: mapping[y] for x, y in out.items()}
    return out


def _bijection_violations(mapping: dict[str, str], domain: set[str], law: str) -> list[Violation]:
    out = []
    missing = domain - mapping.keys()
    extra = mapping.keys() - domain
    for x in sorted(missing):
        out.append(Violation(law, x, "no image assigned"))
    for x in sorted(extra):
        out.append(Violation(law, x, "not in the graph"))
    if not missing and not extra:
        image = set(mapping.values())
        for x in sorted(domain - image):
            out.append(Violation(law, x, "never hit: map is not onto"))
    return out


def validate(g: MultiGraph, a: CyclicAction) -> ValidationReport:
    """Check that ``a`` is a genuine order-``I`` action on ``g``.

    Violations are data, not exceptions: the report lists every broken law
    with the offending identifier.
    """
    violations: list[Violation] = []
    if a.order < 1:
        violations.append(Violation("order", "", f"order must be positive, got {a.order}"))
        return ValidationReport(tuple(violations))

    violations += _bijection_violations(a.vertex_map, set(g.vertices), "vertex-bijection")
    violations += _bijection_violations(a.edge_map, set(g.edge_by_id), "edge-bijection")
    if violations:
        return ValidationReport(tuple(violations))

    for e in g.edges:
        image = g.edge_by_id[a.edge_map[e.id]]
        expected = frozenset((a.vertex_map[e.tail], a.vertex_map[e.head]))
        if image.ends != expected:
            violations.append(
                Violation(
                    "compatibility",
                    e.id,
                    f"endpoints {sorted(e.ends)} map to {sorted(expected)} "
                    f"but edge image {image.id!r} joins {sorted(image.ends)}",
                )
            )

    for v, w in map_power(a.vertex_map, a.order).items():
        if v != w:
            violations.append(Violation("order", v, f"vertex not fixed by the {a.order}-th iterate"))
    for e, f in map_power(a.edge_map, a.order).items():
        if e != f:
            violations.append(Violation("order", e, f"edge not fixed by the {a.order}-th iterate"))
    return ValidationReport(tuple(violations))


def subgroup_generator(a: CyclicAction, h: Subgroup) -> tuple[dict[str, str], dict[str, str]]:
    """Vertex and edge maps of the generator of the subgroup ``h``."""
    if a.order % h.d != 0:
        raise ActionError(f"subgroup co-degree {h.d} does not divide the order {a.order}")
    return map_power(a.vertex_map, h.d), map_power(a.edge_map, h.d)


def vertex_orbit_sizes(g: MultiGraph, a: CyclicAction, h: Subgroup) -> dict[str, int]:
    """Size of each vertex's orbit under the subgroup; always divides ``I/d``."""
    gen_v, _ = subgroup_generator(a, h)
    sizes: dict[str, int] = {}
    for v in g.vertices:
        if v in sizes:
            continue
        orbit = [v]
        w = gen_v[v]
        while w != v:
            orbit.append(w)
            w = gen_v[w]
        for u in orbit:
            sizes[u] = len(orbit)
    return sizes


def fixed_vertices(g: MultiGraph, a: CyclicAction, h: Subgroup) -> set[str]:
    """Vertices fixed by the subgroup's generator, hence by the whole subgroup."""
    gen_v, _ = subgroup_generator(a, h)
    return {v for v in g.vertices if gen_v[v] == v}


def stabilized_edges(g: MultiGraph, a: CyclicAction, h: Subgroup) -> set[tuple[str, bool]]:
    """Edges sent to themselves by the subgroup's generator.

    The boolean records whether the generator exchanges the edge's
    endpoints; it is False for loops and for pointwise-fixed edges.
    """
    gen_v, gen_e = subgroup_generator(a, h)
    out = set()
    for e in g.edges:
        if gen_e[e.id] == e.id:
            flipped = not e.is_loop and gen_v[e.tail] == e.head
            out.add((e.id, flipped))
    return out


def lift_voltage_graph(
    quotient: MultiGraph, voltages: dict[str, int], order: int
) -> tuple[MultiGraph, CyclicAction]:
    """Derived graph of a voltage assignment ``edge id -> residue mod order``.

    Vertices are ``<vertex>@<j>`` and edges ``<edge>@<j>`` for ``j`` mod
    ``order``; the edge copy at layer ``j`` runs from its tail at layer ``j``
    to its head at layer ``j + voltage``.  The shift ``j -> j+1`` is an
    automorphism acting freely on vertices, and every valid vertex-free
    action arises this way.  Edges without an assigned voltage default to 0.
    The result need not be connected; callers filter.
    """
    if order < 1:
        raise ActionError(f"order must be positive, got {order}")
    unknown = voltages.keys() - quotient.edge_by_id.keys()
    if unknown:
        raise ActionError(f"voltages assigned to unknown edges: {sorted(unknown)}")
    vertices = [f"{v}@{j}" for v in quotient.vertices for j in range(order)]
    edges = []
    for e in quotient.edges:
        volt = voltages.get(e.id, 0) % order
        for j in range(order):
            edges.append((f"{e.id}@{j}", f"{e.tail}@{j}", f"{e.head}@{(j + volt) % order}"))
    vmap = {f"{v}@{j}": f"{v}@{(j + 1) % order}" for v in quotient.vertices for j in range(order)}
    emap = {f"{e.id}@{j}": f"{e.id}@{(j + 1) % order}" for e in quotient.edges for j in range(order)}
    return MultiGraph.build(vertices, edges), CyclicAction(order, vmap, emap)
