"""Seeded random T-mesh generators for the property suites."""

import random
from fractions import Fraction

from . import make

# every rational with denominator <= 8 strictly inside (0, 2)
_CUTS = sorted({Fraction(p, q) for q in range(1, 9)
                for p in range(1, 2 * q)})


def _splits_inside(lo, hi):
    return [c for c in _CUTS if lo < c < hi]


def random_split_mesh(rng: random.Random, max_faces=12):
    """(mesh, profile, smoothness, r): hierarchical splits of [0,2]^2.

    Faces count <= max_faces, all coordinates have denominator <= 8,
    deficits drawn from {(0,0), (1,1)} with at least one zero face,
    default smoothness r in {1, 2}.
    """
    cells = [(Fraction(0), Fraction(0), Fraction(2), Fraction(2))]
    target = rng.randint(4, max_faces)
    guard = 0
    while len(cells) < target and guard < 200:
        guard += 1
        k = rng.randrange(len(cells))
        x0, y0, x1, y1 = cells[k]
        if rng.random() < 0.5:
            cands = _splits_inside(x0, x1)
            if not cands:
                continue
            c = rng.choice(cands)
            cells[k:k + 1] = [(x0, y0, c, y1), (c, y0, x1, y1)]
        else:
            cands = _splits_inside(y0, y1)
            if not cands:
                continue
            c = rng.choice(cands)
            cells[k:k + 1] = [(x0, y0, x1, c), (x0, c, x1, y1)]

    deficits = [(1, 1) if rng.random() < 0.4 else (0, 0) for _ in cells]
    if all(d == (1, 1) for d in deficits):
        deficits[rng.randrange(len(deficits))] = (0, 0)
    r = rng.choice((1, 2))
    mesh, profile, smoothness = make(cells, deficits=deficits, r=r)
    return mesh, profile, smoothness, r


def random_region_mesh(rng: random.Random):
    """(mesh, profile, smoothness): full k x k grid with a random set of
    faces promoted to deficit (1,1), for exercising islands, rings and
    boundary-touching blobs of the level-one active region."""
    k = rng.choice((3, 4, 5))
    n = k * k
    density = rng.uniform(0.25, 0.75)
    deficits = [(1, 1) if rng.random() < density else (0, 0)
                for _ in range(n)]
    if all(d == (1, 1) for d in deficits):
        deficits[rng.randrange(n)] = (0, 0)
    rects = [(i, j, i + 1, j + 1) for j in range(k) for i in range(k)]
    return make(rects, deficits=deficits, r=rng.choice((1, 2)))


def ring_region_mesh():
    """5x5 grid whose level-one active region is an 8-cell annulus island:
    one relative component and one relative hole."""
    ring = {(i, j) for i in (1, 2, 3) for j in (1, 2, 3)} - {(2, 2)}
    rects = [(i, j, i + 1, j + 1) for j in range(5) for i in range(5)]
    deficits = [(0, 0) if (i, j) in ring else (1, 1)
                for j in range(5) for i in range(5)]
    return make(rects, deficits=deficits, r=1)


def island_region_mesh():
    """3x3 grid with only the center active at level one."""
    deficits = [(1, 1)] * 9
    deficits[4] = (0, 0)
    rects = [(i, j, i + 1, j + 1) for j in range(3) for i in range(3)]
    return make(rects, deficits=deficits, r=1)


def blob_region_mesh():
    """4x4 grid with an L-shaped boundary-touching active blob."""
    rects = [(i, j, i + 1, j + 1) for j in range(4) for i in range(4)]
    active = {(0, 0), (1, 0), (2, 0), (0, 1), (0, 2)}
    deficits = [(0, 0) if (i, j) in active else (1, 1)
                for j in range(4) for i in range(4)]
    return make(rects, deficits=deficits, r=2)
