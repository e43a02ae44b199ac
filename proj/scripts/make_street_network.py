#!/usr/bin/env python3
"""Generate data/street_network.graph.

Scatters nodes with a minimum spacing, connects them with a spanning tree of
short non-crossing segments, then fills in more short non-crossing edges under
a degree cap until the target edge count is reached. The result looks like a
small street map: planar, connected, lots of blocks.
"""

import pathlib

import numpy as np

NUM_NODES = 82
NUM_EDGES = 130
BOX = 10.0
MIN_SPACING = 0.72
NEIGHBOR_RADIUS = 3.0
DEGREE_CAP = 4
SEED = 7


def sample_points(rng):
    pts = []
    while len(pts) < NUM_NODES:
        p = rng.uniform(0.0, BOX, size=2)
        if all(np.hypot(*(p - q)) >= MIN_SPACING for q in pts):
            pts.append(p)
    return np.array(pts)


def orient(a, b, c):
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if abs(v) < 1e-12:
        return 0
    return 1 if v > 0 else -1


def segments_cross(a, b, c, d):
    """Proper or improper crossing, except at shared endpoints."""
    shared = any(np.array_equal(p, q) for p in (a, b) for q in (c, d))
    if shared:
        return False
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    # collinear touch counts as a crossing too; keeps the drawing clean
    for p, (u, v) in (((c, (a, b))), ((d, (a, b))), ((a, (c, d))), ((b, (c, d)))):
        if orient(u, v, p) == 0 and min(u[0], v[0]) - 1e-12 <= p[0] <= max(u[0], v[0]) + 1e-12 \
                and min(u[1], v[1]) - 1e-12 <= p[1] <= max(u[1], v[1]) + 1e-12:
            return True
    return False


class DisjointSet:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def build(points):
    n = len(points)
    candidates = []
    for i in range(n):
        for j in range(i + 1, n):
            d = np.hypot(*(points[i] - points[j]))
            if d <= NEIGHBOR_RADIUS:
                candidates.append((d, i, j))
    candidates.sort()

    edges = []
    degree = [0] * n

    def admissible(i, j, enforce_cap=True):
        if enforce_cap and (degree[i] >= DEGREE_CAP or degree[j] >= DEGREE_CAP):
            return False
        return not any(
            segments_cross(points[i], points[j], points[a], points[b])
            for a, b in edges
        )

    dsu = DisjointSet(n)
    # spanning phase: connect everything with short non-crossing segments
    for _, i, j in candidates:
        if dsu.find(i) != dsu.find(j) and admissible(i, j, enforce_cap=False):
            dsu.union(i, j)
            edges.append((i, j))
            degree[i] += 1
            degree[j] += 1
    assert len({dsu.find(i) for i in range(n)}) == 1, "graph not connected"

    # fill phase: shortest admissible segments first
    for _, i, j in candidates:
        if len(edges) >= NUM_EDGES:
            break
        if (i, j) in edges:
            continue
        if admissible(i, j):
            edges.append((i, j))
            degree[i] += 1
            degree[j] += 1
    assert len(edges) == NUM_EDGES, f"only placed {len(edges)} edges"
    return edges


def main():
    rng = np.random.default_rng(SEED)
    points = sample_points(rng)
    edges = build(points)

    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "street_network.graph"
    lines = ["# synthetic street network: planar, connected, degree-capped"]
    lines.append(f"nodes {len(points)}")
    for i, j in edges:
        lines.append(f"{i}\t{j}")
    for idx, (x, y) in enumerate(points):
        lines.append(f"coord {idx} {x:.4f} {y:.4f}")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} with {len(points)} nodes, {len(edges)} edges, "
          f"cycle dimension {len(edges) - len(points) + 1}")


if __name__ == "__main__":
    main()
