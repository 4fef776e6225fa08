"""Kodaira fiber types: model builders and graph-isomorphism recognition.

Each degenerate fiber of a relatively minimal genus-1 fibration is one of
the classical Kodaira types.  ``kodaira_fiber`` builds the model
configuration for a named type (components with multiplicities, all
rational of self-intersection -2 except the one-component types), and
``recognize_fiber`` matches an arbitrary configuration against the
catalog, returning the type name or None.

Every model satisfies F^2 = 0, K.F = 0 and p_a(F) = 1; the recognizer
re-derives those identities for whatever it matches as a consistency
guard.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import CurveConfiguration, Edge, Node, divisor_pa

MAX_IN = 12
MAX_ISTAR = 8


@dataclass(frozen=True)
class FiberType:
    name: str
    component_count: int
    euler_number: int


def _nodes(pairs):
    return tuple(Node(nid, self_int=-2, mult=m) for nid, m in pairs)


def kodaira_fiber(name: str) -> CurveConfiguration:
    """Model configuration for a Kodaira fiber type.

    Names: "smooth", "I1".."I12", "I0*".."I8*", "II", "III", "IV",
    "IV*", "III*", "II*".

    TESTS::

        >>> f = kodaira_fiber("I5")
        >>> len(f.nodes), sum(e.count for e in f.edges)
        (5, 5)
        >>> kodaira_fiber("II*").nodes[5].mult
        6
    """
    if name == "smooth":
        return CurveConfiguration((Node("C", self_int=0, genus=1),))
    if name == "I1":
        return CurveConfiguration((Node("C", self_int=0, genus=1, sing="node"),))
    if name == "II":
        return CurveConfiguration((Node("C", self_int=0, genus=1, sing="cusp"),))
    if name == "III":
        return CurveConfiguration(
            (Node("A", -2), Node("B", -2)), (Edge("A", "B", tangency=2),)
        )
    if name == "IV":
        return CurveConfiguration(
            (Node("A", -2), Node("B", -2), Node("C", -2)),
            (Edge("A", "B"), Edge("B", "C"), Edge("A", "C")),
            triple_points=(("A", "B", "C"),),
        )
    if name.startswith("I") and name.endswith("*") and name[1:-1].isdigit():
        b = int(name[1:-1])
        if not 0 <= b <= MAX_ISTAR:
            raise ValueError(f"I_b* supported for 0 <= b <= {MAX_ISTAR}")
        # chain of b+1 multiplicity-2 components with two leaves at each end
        chain = [(f"C{i}", 2) for i in range(b + 1)]
        leaves = [("L1", 1), ("L2", 1), ("L3", 1), ("L4", 1)]
        nodes = _nodes(chain + leaves)
        edges = [Edge(f"C{i}", f"C{i+1}") for i in range(b)]
        edges += [
            Edge("L1", "C0"),
            Edge("L2", "C0"),
            Edge("L3", f"C{b}"),
            Edge("L4", f"C{b}"),
        ]
        return CurveConfiguration(nodes, tuple(edges))
    if name.startswith("I") and name[1:].isdigit():
        n = int(name[1:])
        if not 1 <= n <= MAX_IN:
            raise ValueError(f"I_n supported for 1 <= n <= {MAX_IN}")
        if n == 1:
            return CurveConfiguration((Node("C", self_int=0, genus=1, sing="node"),))
        if n == 2:
            return CurveConfiguration(
                (Node("A", -2), Node("B", -2)), (Edge("A", "B", count=2),)
            )
        nodes = _nodes((f"C{i}", 1) for i in range(n))
        edges = tuple(Edge(f"C{i}", f"C{(i+1) % n}") for i in range(n))
        return CurveConfiguration(nodes, edges)
    if name == "IV*":
        nodes = _nodes(
            [("Z", 3), ("A1", 2), ("A2", 1), ("B1", 2), ("B2", 1), ("C1", 2), ("C2", 1)]
        )
        edges = (
            Edge("Z", "A1"), Edge("A1", "A2"),
            Edge("Z", "B1"), Edge("B1", "B2"),
            Edge("Z", "C1"), Edge("C1", "C2"),
        )
        return CurveConfiguration(nodes, edges)
    if name == "III*":
        mults = [1, 2, 3, 4, 3, 2, 1]
        nodes = _nodes([(f"C{i}", m) for i, m in enumerate(mults)] + [("T", 2)])
        edges = tuple(Edge(f"C{i}", f"C{i+1}") for i in range(6)) + (Edge("T", "C3"),)
        return CurveConfiguration(nodes, edges)
    if name == "II*":
        mults = [1, 2, 3, 4, 5, 6, 4, 2]
        nodes = _nodes([(f"C{i}", m) for i, m in enumerate(mults)] + [("T", 3)])
        edges = tuple(Edge(f"C{i}", f"C{i+1}") for i in range(7)) + (Edge("T", "C5"),)
        return CurveConfiguration(nodes, edges)
    raise ValueError(f"unknown Kodaira type {name!r}")


FIBER_NAMES = (
    ["smooth", "II", "III", "IV", "IV*", "III*", "II*"]
    + [f"I{n}" for n in range(1, MAX_IN + 1)]
    + [f"I{b}*" for b in range(0, MAX_ISTAR + 1)]
)


def fiber_euler_number(name: str) -> int:
    """Topological Euler number of the fiber."""
    table = {"smooth": 0, "II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}
    if name in table:
        return table[name]
    if name not in FIBER_NAMES:
        raise KeyError(f"unknown fiber type {name!r}")
    if name.endswith("*"):
        return int(name[1:-1]) + 6
    return int(name[1:])


def _signature(cfg: CurveConfiguration):
    """Isomorphism-invariant signature: sorted node data + sorted edge data."""
    deg = {n.id: 0 for n in cfg.nodes}
    for e in cfg.edges:
        deg[e.a] += e.count
        deg[e.b] += e.count
    node_sig = sorted(
        (n.self_int, n.genus, n.mult, n.sing or "", deg[n.id]) for n in cfg.nodes
    )
    edge_sig = sorted(
        (e.count, e.tangency) for e in cfg.edges
    )
    return (tuple(node_sig), tuple(edge_sig), len(cfg.triple_points))


def _isomorphic(a: CurveConfiguration, b: CurveConfiguration) -> bool:
    """Backtracking isomorphism of weighted multigraphs with node labels."""
    if _signature(a) != _signature(b):
        return False
    ga, gb = a.gram(), b.gram()
    na = len(a.nodes)

    def key(cfg, i):
        n = cfg.nodes[i]
        return (n.self_int, n.genus, n.mult, n.sing or "")

    def compatible(i, j):
        return key(a, i) == key(b, j)

    # distinct-points multigraph matters too: match meeting_points exactly
    pa = [[0] * na for _ in range(na)]
    pb = [[0] * na for _ in range(na)]
    for e in a.edges:
        i, j = a._index[e.a], a._index[e.b]
        pa[i][j] += e.count
        pa[j][i] += e.count
    for e in b.edges:
        i, j = b._index[e.a], b._index[e.b]
        pb[i][j] += e.count
        pb[j][i] += e.count

    mapping = [-1] * na
    used = [False] * na

    def extend(i: int) -> bool:
        if i == na:
            ta = {tuple(sorted(a._index[x] for x in t)) for t in a.triple_points}
            tb = {
                tuple(sorted(mapping.index(b._index[x]) for x in t))
                for t in b.triple_points
            }
            return ta == tb
        for j in range(na):
            if used[j] or not compatible(i, j):
                continue
            if any(
                mapping[h] >= 0
                and (ga[i][h] != gb[j][mapping[h]] or pa[i][h] != pb[j][mapping[h]])
                for h in range(i)
            ):
                continue
            mapping[i] = j
            used[j] = True
            if extend(i + 1):
                return True
            mapping[i] = -1
            used[j] = False
        return False

    return extend(0)


def recognize_fiber(cfg: CurveConfiguration) -> str | None:
    """Match a configuration against the Kodaira catalog.

    Returns the type name, or None when no model matches.  A successful
    match additionally asserts F^2 = 0, K.F = 0 and p_a(F) = 1 on the
    candidate itself.

    TESTS::

        >>> recognize_fiber(kodaira_fiber("IV*"))
        'IV*'
        >>> chain = CurveConfiguration((Node("A", -2), Node("B", -2)), (Edge("A", "B"),))
        >>> recognize_fiber(chain) is None
        True
    """
    for name in FIBER_NAMES:
        model = kodaira_fiber(name)
        if _isomorphic(cfg, model):
            mults = cfg.subset_vector(None)
            gram = cfg.gram()
            f_sq = sum(
                mults[i] * gram[i][j] * mults[j]
                for i in range(len(mults))
                for j in range(len(mults))
            )
            k_f = sum(m * kd for m, kd in zip(mults, cfg.canonical_degrees()))
            assert f_sq == 0 and k_f == 0, "matched fiber must satisfy F^2 = K.F = 0"
            assert divisor_pa(cfg) == 1, "matched fiber must have arithmetic genus 1"
            return name
    return None
