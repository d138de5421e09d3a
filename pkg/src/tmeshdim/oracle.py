"""Independent exact linear-algebra oracles.

oracle_spline_dim assembles the raw smoothness constraints of a spline space
and counts solutions by exact rank, with no use of the combinatorial
machinery. span_dim / span_quotient_dim measure subspaces spanned by
polynomial generators in the monomial basis. Both exist to cross-check the
closed formulas, so they stay deliberately naive.
"""

from fractions import Fraction
from math import comb

from .linalg import rank_sparse
from .mesh import TMesh, bd_sub


def _box(m):
    return max(m[0] + 1, 0) * max(m[1] + 1, 0)


def span_dim(generators, m) -> int:
    """Dimension of the span of {g * monomial} inside the bi-degree m box.

    generators is a list of (grid, bideg) pairs: grid maps exponent pairs to
    coefficients, bideg bounds the multiplier box to m - bideg.
    """
    return span_quotient_dim(generators, m, None)


def span_quotient_dim(generators, ambient, lbox) -> int:
    """Dimension of a generated subspace modulo a low-exponent sub-box.

    Rows are generator translates inside the ambient box together with all
    monomials of the sub-box; the result is rank minus the sub-box size.
    lbox = None means no quotient.
    """
    if ambient[0] < 0 or ambient[1] < 0:
        return 0
    width = ambient[1] + 1

    rows = []
    for grid, bideg in generators:
        for a in range(ambient[0] - bideg[0] + 1):
            for b in range(ambient[1] - bideg[1] + 1):
                rows.append({(a + es) * width + (b + et): c
                             for (es, et), c in grid.items()})
    sub = 0
    if lbox is not None:
        sub = _box(lbox)
        for a in range(min(lbox[0], ambient[0]) + 1):
            for b in range(min(lbox[1], ambient[1]) + 1):
                rows.append({a * width + b: 1})
    return rank_sparse(rows) - sub


def power_grid(direction, knot, degree, extra=(0, 0)):
    """Coefficient grid and effective bi-degree of (x - knot)^degree u^extra."""
    knot = Fraction(knot)
    grid = {}
    for k in range(degree + 1):
        c = comb(degree, k) * (-knot) ** (degree - k)
        if c:
            grid[(0, k) if direction == "t" else (k, 0)] = c
    bideg = (extra[0], degree + extra[1]) if direction == "t" \
        else (degree + extra[0], extra[1])
    return grid, bideg


def oracle_spline_dim(mesh: TMesh, profile, smoothness, m) -> int:
    """Spline space dimension by brute-force constraint rank.

    Unknowns are the monomial coefficients of each face's polynomial piece;
    each interior edge contributes the vanishing of the first r+1 Taylor
    coefficients of the piece difference across its line. Rows repeated by
    edge subdivision are deduplicated by (face pair, line).
    """
    sizes = {}
    offs = {}
    total = 0
    for f in mesh.faces:
        box = bd_sub(m, profile.face_deficit[f])
        if box[0] < 0 or box[1] < 0:
            continue
        offs[f] = total
        sizes[f] = box
        total += (box[0] + 1) * (box[1] + 1)

    rows = []
    seen = set()
    for e in mesh.interior_edges:
        f, g = mesh.edge_faces[e]
        key = (f, g, e.axis, e.line)
        if key in seen:
            continue
        seen.add(key)
        r = smoothness.edge_r[e]
        c0 = e.line
        for j in range(r + 1):
            across = max(
                (sizes[h][1 if e.axis == "v" else 0]
                 for h in (f, g) if h in sizes), default=-1)
            for l in range(across + 1):
                row = {}
                for h, sign in ((f, 1), (g, -1)):
                    if h not in sizes:
                        continue
                    box = sizes[h]
                    if e.axis == "v":
                        if l > box[1]:
                            continue
                        for a in range(j, box[0] + 1):
                            col = offs[h] + a * (box[1] + 1) + l
                            row[col] = row.get(col, 0) + sign * comb(a, j) * c0 ** (a - j)
                    else:
                        if l > box[0]:
                            continue
                        for b in range(j, box[1] + 1):
                            col = offs[h] + l * (box[1] + 1) + b
                            row[col] = row.get(col, 0) + sign * comb(b, j) * c0 ** (b - j)
                if row:
                    rows.append(row)
    return total - rank_sparse(rows)
