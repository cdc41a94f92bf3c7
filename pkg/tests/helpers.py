"""Definition-level reference checks that share no code with the package.

Convexity is decided by listing every directed path; connectivity by
union-find over the induced edges.
"""

from itertools import combinations

from hypothesis import strategies as st

from ccenum import Digraph, UndirectedGraph

# the worked example: v1..v5 -> 0..4
EXAMPLE_TEXT = "5 5\n0 1\n1 2\n0 3\n2 4\n3 4\n"
EXAMPLE_ARCS = [(0, 1), (1, 2), (0, 3), (2, 4), (3, 4)]


def all_paths(n, arcs):
    out = {u: [] for u in range(n)}
    for u, v in arcs:
        out[u].append(v)
    found = []

    def walk(p):
        found.append(p)
        for w in out[p[-1]]:
            walk(p + [w])

    for u in range(n):
        walk([u])
    return found


def naive_is_convex(n, arcs, members, paths=None):
    s = set(members)
    for p in paths if paths is not None else all_paths(n, arcs):
        if len(p) >= 3 and p[0] in s and p[-1] in s and any(x not in s for x in p[1:-1]):
            return False
    return True


def naive_is_connected(edges, members):
    s = set(members)
    parent = {v: v for v in s}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        if u in s and v in s:
            parent[find(u)] = find(v)
    return len({find(v) for v in s}) == 1


def nonempty_subsets(n):
    for k in range(1, n + 1):
        yield from combinations(range(n), k)


def naive_families(d: Digraph):
    """(cc family, convex family) as sorted lists of sorted tuples."""
    arcs = d.arcs()
    paths = all_paths(d.n, arcs)
    convex = [s for s in nonempty_subsets(d.n) if naive_is_convex(d.n, arcs, s, paths)]
    cc = [s for s in convex if naive_is_connected(arcs, s)]
    return sorted(cc), sorted(convex)


def naive_connected_family(g: UndirectedGraph):
    return sorted(s for s in nonempty_subsets(g.n) if naive_is_connected(g.edges(), s))


def as_tuples(sets):
    return [tuple(s) for s in sets]


@st.composite
def dags(draw, min_n=1, max_n=8):
    """Random DAG with a shuffled labelling, so orderings are not the identity."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Digraph.from_arcs(n, [(perm[i], perm[j]) for i, j in chosen])


@st.composite
def undirected_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return UndirectedGraph.from_edges(n, chosen)
