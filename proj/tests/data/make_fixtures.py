"""Regenerate the graph6 fixtures used by the test suites.

Uses networkx only, so the fixtures do not depend on the library under test.
Run from this directory: python3 make_fixtures.py
"""
import itertools

import networkx as nx


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def shrikhande():
    g = nx.Graph()
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    nodes = [(i, j) for i in range(4) for j in range(4)]
    g.add_nodes_from(range(16))
    for a, (i, j) in enumerate(nodes):
        for di, dj in conn:
            b = nodes.index(((i + di) % 4, (j + dj) % 4))
            g.add_edge(a, b)
    return g


def projective_points(dim, q):
    pts = []
    for v in itertools.product(range(q), repeat=dim):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return sorted(pts)


def symplectic_gq(q):
    # W(3,q): points of PG(3,q), collinear iff orthogonal under x0y2 - x2y0 + x1y3 - x3y1
    pts = projective_points(4, q)
    g = nx.Graph()
    g.add_nodes_from(range(len(pts)))
    for a, b in itertools.combinations(range(len(pts)), 2):
        x, y = pts[a], pts[b]
        f = (x[0] * y[2] - x[2] * y[0] + x[1] * y[3] - x[3] * y[1]) % q
        if f == 0:
            g.add_edge(a, b)
    return g


def orthogonal_gq(q):
    # Q(4,q): singular points of x0^2 + x1x2 + x3x4, collinear iff polar form vanishes
    def quad(x):
        return (x[0] * x[0] + x[1] * x[2] + x[3] * x[4]) % q

    def polar(x, y):
        return (2 * x[0] * y[0] + x[1] * y[2] + x[2] * y[1] + x[3] * y[4] + x[4] * y[3]) % q

    pts = [p for p in projective_points(5, q) if quad(p) == 0]
    g = nx.Graph()
    g.add_nodes_from(range(len(pts)))
    for a, b in itertools.combinations(range(len(pts)), 2):
        if polar(pts[a], pts[b]) == 0:
            g.add_edge(a, b)
    return g


def main():
    rook = nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4))
    rook = nx.convert_node_labels_to_integers(rook, ordering="sorted")
    with open("srg16.g6", "w") as f:
        f.write(g6(rook) + "\n")
        f.write(g6(shrikhande()) + "\n")
    with open("shrikhande.g6", "w") as f:
        f.write(g6(shrikhande()) + "\n")
    with open("gq33_pair.g6", "w") as f:
        f.write(g6(symplectic_gq(3)) + "\n")
        f.write(g6(orthogonal_gq(3)) + "\n")
    with open("pair14.g6", "w") as f:
        f.write("MhCGGEDoHc@bSoiO?\n")
        f.write("MhC?GUDoHc@bT_iO?\n")


if __name__ == "__main__":
    main()
