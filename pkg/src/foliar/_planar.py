"""Combinatorial map helpers shared by diagrams and collapsed graphs.

A map is given by darts 4*v + s for vertices v and slots s in 0..3, a
fixed rotation sigma (next slot counterclockwise) and an involution
alpha pairing the two ends of each edge.  Faces are the orbits of
sigma . alpha.  The corner recorded while traversing a face is the gap
index at the vertex the traversal passes through: gap g sits between
slots g and g+1.
"""

from .errors import NotBipartite


def sigma(d):
    return (d & ~3) | ((d + 1) & 3)


def trace_faces(n_darts, alpha):
    """Return (faces, dart_face).

    faces is a list of corner lists [(vertex, gap), ...]; dart_face maps
    each dart to the index of the face whose traversal consumes it.
    """
    faces = []
    dart_face = {}
    for start in range(n_darts):
        if start in dart_face:
            continue
        corners = []
        d = start
        while True:
            dart_face[d] = len(faces)
            e = alpha[d]
            corners.append((e >> 2, e & 3))
            d = sigma(e)
            if d == start:
                break
        faces.append(corners)
    return faces, dart_face


def two_color(n_faces, n_darts, alpha, dart_face):
    """Two-colour faces so edge-adjacent faces differ; colour 0 holds face 0."""
    adjacent = [set() for _ in range(n_faces)]
    for d in range(n_darts):
        f, g = dart_face[d], dart_face[alpha[d]]
        adjacent[f].add(g)
        adjacent[g].add(f)
    color = {}
    for root in range(n_faces):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            f = queue.pop()
            for g in adjacent[f]:
                if g not in color:
                    color[g] = 1 - color[f]
                    queue.append(g)
                elif color[g] == color[f]:
                    raise NotBipartite(f"faces {f} and {g} conflict")
    return color


class DisjointSets:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        while p != self.parent[p]:
            self.parent[p] = self.parent[self.parent[p]]
            p = self.parent[p]
        self.parent[x] = p
        return p

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
        return ra
