"""Active sub-meshes of a leveled profile and their relative topology.

Level i (1 <= i <= top+1) activates the cells whose deficit is at most
n_{i-1}. The pair (c, h) counts, over field coefficients, the connected
components not touching the domain boundary and the relative one-cycles of
the active region; the dimension machinery assumes h = 0 at every level.
"""

from dataclasses import dataclass

from .graded import IndexOutOfRange
from .linalg import rank_sparse
from .mesh import TMesh, bd_le


class AssumptionViolated(Exception):
    """A level has nontrivial relative first homology (h != 0)."""


@dataclass(frozen=True)
class ActiveLevel:
    mesh: TMesh
    profile: object
    index: int
    faces: tuple
    edges: tuple
    vertices: tuple
    interior_edges: tuple
    interior_vertices: tuple
    boundary_trace: tuple
    c: int
    h: int


def active_mesh(mesh: TMesh, profile, i: int) -> ActiveLevel:
    top = profile.top
    if not 1 <= i <= top + 1:
        raise IndexOutOfRange(f"level index {i} outside 1..{top + 1}")
    cut = profile.levels[i - 1]
    faces = tuple(f for f in mesh.faces if bd_le(profile.face_deficit[f], cut))
    edges = tuple(e for e in mesh.edges if bd_le(profile.edge_deficit[e], cut))
    vertices = tuple(v for v in mesh.vertices
                     if bd_le(profile.vertex_deficit[v], cut))
    interior_edges = tuple(e for e in edges if e not in mesh.boundary_edges)
    interior_vertices = tuple(v for v in vertices
                              if v not in mesh.boundary_vertices)
    boundary_trace = tuple(e for e in edges if e in mesh.boundary_edges)
    c, h = _betti(mesh, faces, interior_edges, interior_vertices)
    return ActiveLevel(mesh, profile, i, faces, edges, vertices,
                       interior_edges, interior_vertices, boundary_trace, c, h)


def _face_sign(f, e) -> int:
    # counterclockwise traversal with edges oriented toward increasing coordinate
    if e.axis == "h":
        return 1 if f.y0 == e.line else -1
    return 1 if f.x1 == e.line else -1


def _betti(mesh, faces, interior_edges, interior_vertices):
    eix = {e: k for k, e in enumerate(interior_edges)}
    vix = {v: k for k, v in enumerate(interior_vertices)}
    d2 = []
    for f in faces:
        row = {eix[e]: _face_sign(f, e)
               for e in mesh.face_edges[f] if e in eix}
        d2.append(row)
    d1 = []
    for e in interior_edges:
        tail, head = e.endpoints()
        row = {}
        if head in vix:
            row[vix[head]] = 1
        if tail in vix:
            row[vix[tail]] = row.get(vix[tail], 0) - 1
        d1.append(row)
    r2 = rank_sparse(d2)
    r1 = rank_sparse(d1)
    c = len(interior_vertices) - r1
    h = len(interior_edges) - r1 - r2
    return c, h


def relative_betti(level: ActiveLevel):
    """Recompute (c, h) of a level from its cell sets."""
    return _betti(level.mesh, level.faces, level.interior_edges,
                  level.interior_vertices)


def all_levels(mesh: TMesh, profile):
    return [active_mesh(mesh, profile, i) for i in range(1, profile.top + 2)]


@dataclass(frozen=True)
class AssumptionReport:
    rows: tuple           # (level index, c, h) per level
    violations: tuple     # level indices with h != 0

    @property
    def ok(self) -> bool:
        return not self.violations


def check_assumptions(levels) -> AssumptionReport:
    rows = tuple((lv.index, lv.c, lv.h) for lv in levels)
    violations = tuple(lv.index for lv in levels if lv.h != 0)
    return AssumptionReport(rows, violations)


def island_components(level: ActiveLevel):
    """Connected components of the active region, flagged island when they
    avoid the domain boundary entirely."""
    mesh = level.mesh
    active = set(level.faces)
    eset = set(level.interior_edges)
    comps = []
    left = set(active)
    while left:
        start = min(left)
        comp = {start}
        stack = [start]
        while stack:
            f = stack.pop()
            for e in mesh.face_edges[f]:
                if e not in eset:
                    continue
                for g in mesh.edge_faces[e]:
                    if g in active and g not in comp:
                        comp.add(g)
                        stack.append(g)
        left -= comp
        verts = {p for f in comp for e in mesh.face_edges[f]
                 for p in e.endpoints()}
        island = not (verts & mesh.boundary_vertices)
        comps.append((tuple(sorted(comp)), island))
    return comps
