"""Euler characteristic, dimension bounds, and stability certification.

The spline space dimension in bi-degree m is sandwiched between combinatorial
bounds built from the leveled quotient complexes: the Euler characteristic chi
is corrected downward by island counts and upward by per-segment ideal slack.
When the practical smoothness configuration holds and every level's ideal
bound meets its island count, chi is the exact dimension, independent of the
edge coordinates.
"""

from dataclasses import dataclass
from typing import Optional

from .graded import dim_L, dim_M, dim_shift, dim_vertex_increment
from .levels import all_levels, check_assumptions
from .mesh import TMesh, bd_add, bd_max, bd_min, bd_sub
from .segments import (analyze_segments, contribution_sets, h0_ideal_upper,
                       order_segments)


class DecompositionMismatch(Exception):
    """The leveled and direct Euler characteristic evaluations disagree."""


def _edge_shift(axis: str, r: int):
    return (0, r + 1) if axis == "h" else (r + 1, 0)


def _vertex_data(mesh, profile, smoothness, v):
    """Line shifts and minimal line deficits of the two lines through v."""
    r_h, r_v = smoothness.vertex_pair[v]
    e_h = (0, r_v + 1)
    e_v = (r_h + 1, 0)
    dstar_h = dstar_v = None
    for e in mesh.vertex_edges[v]:
        d = profile.edge_deficit[e]
        if e.axis == "h":
            dstar_h = d if dstar_h is None else bd_min(dstar_h, d)
        else:
            dstar_v = d if dstar_v is None else bd_min(dstar_v, d)
    return e_h, e_v, dstar_h, dstar_v


def euler_characteristic(mesh: TMesh, profile, smoothness, m):
    """Evaluate chi at m twice: once per level, once on the raw cell data.

    The two values agree on every valid input; a mismatch can only come from
    an implementation bug and raises DecompositionMismatch rather than
    returning silently.
    """
    levels = profile.levels
    chi = 0
    for lv in all_levels(mesh, profile):
        i = lv.index
        dm0 = dim_M(levels, i, (0, 0), m)
        part = len(lv.faces) * dm0
        for e in lv.interior_edges:
            shift = _edge_shift(e.axis, smoothness.edge_r[e])
            part -= dm0 - dim_M(levels, i, shift, m)
        for v in lv.interior_vertices:
            e_h, e_v, dstar_h, dstar_v = _vertex_data(mesh, profile,
                                                      smoothness, v)
            part += dm0 - dim_vertex_increment(levels, i, e_h, e_v, m,
                                               dstar_h, dstar_v)
        chi += part

    direct = sum(dim_shift(m, profile.face_deficit[f]) for f in mesh.faces)
    for e in mesh.interior_edges:
        d = profile.edge_deficit[e]
        shift = _edge_shift(e.axis, smoothness.edge_r[e])
        direct -= dim_shift(m, d) - dim_shift(m, bd_add(d, shift))
    for v in mesh.interior_vertices:
        e_h, e_v, dstar_h, dstar_v = _vertex_data(mesh, profile, smoothness, v)
        ideal = (dim_shift(m, bd_add(dstar_h, e_h))
                 + dim_shift(m, bd_add(dstar_v, e_v))
                 - dim_shift(m, bd_add(bd_max(dstar_h, dstar_v),
                                       bd_add(e_h, e_v))))
        direct += dim_shift(m, profile.vertex_deficit[v]) - ideal

    if chi != direct:
        raise DecompositionMismatch(
            f"leveled chi {chi} != direct chi {direct} at m = {m}")
    return chi, direct


def constant_complex_dims(level, m):
    """Homology dimensions (h2, h1, h0) of the level's constant complex."""
    levels = level.profile.levels
    top = level.profile.top
    dm0 = dim_M(levels, level.index, (0, 0), m)
    h2 = dim_L(levels, top, (0, 0), m) if level.index == top + 1 else 0
    return h2, level.h * dm0, level.c * dm0


@dataclass(frozen=True)
class Config1Report:
    """Practical-smoothness check plus per-level vanishing diagnostics.

    holds is true when m minus the level deficit dominates the crossed
    smoothness pair at every active interior vertex of every level.
    case_b_levels lists levels where the opposite inequality holds at every
    vertex, which forces the level's ideal homology to vanish outright.
    """

    holds: bool
    failures: tuple
    case_b_levels: tuple

    def __bool__(self) -> bool:
        return self.holds


def configuration1_holds(mesh, profile, smoothness, m) -> Config1Report:
    levels = profile.levels
    top = profile.top
    failures = []
    case_b = []
    for lv in all_levels(mesh, profile):
        gap = bd_sub(m, levels[min(lv.index, top)])
        prev_gap = bd_sub(m, levels[lv.index - 1])
        saturated = bool(lv.interior_vertices)
        for v in lv.interior_vertices:
            r_h, r_v = smoothness.vertex_pair[v]
            if not (gap[0] >= r_h and gap[1] >= r_v):
                failures.append((lv.index, v))
            if not (prev_gap[0] <= r_h and prev_gap[1] <= r_v):
                saturated = False
        if saturated:
            case_b.append(lv.index)
    return Config1Report(not failures, tuple(failures), tuple(case_b))


@dataclass(frozen=True)
class LevelRow:
    """Per-level diagnostics of a dimension report."""

    index: int
    c: int
    h: int
    dim_m: int
    h0_constant: int
    h0_ideal: Optional[int]
    segment_count: int
    strategy: str
    ordering: tuple
    weights: tuple

    @property
    def slack(self) -> Optional[int]:
        if self.h0_ideal is None:
            return None
        return self.h0_ideal - self.h0_constant


@dataclass(frozen=True)
class DimReport:
    """Bounds, certification and per-level diagnostics at one bi-degree.

    When any level has relative cycles the report carries diagnostics only:
    chi is still present but every bound field is None and certified is
    False.
    """

    m: tuple
    chi: int
    chi_direct: int
    rows: tuple
    assumption_ok: bool
    violations: tuple
    config1: bool
    case_b_levels: tuple
    ordering_strategy: str
    lower_general: Optional[int]
    lower_special: Optional[int]
    upper: Optional[int]
    clamped: bool
    certified: bool
    exact: Optional[int]
    oracle: Optional[int]
    notes: tuple


def bounds(mesh: TMesh, profile, smoothness, m, ordering="auto",
           with_oracle=False) -> DimReport:
    """Assemble the dimension report for one bi-degree.

    ordering picks the segment ordering strategy per level; auto uses the
    exhaustive search on small levels and the greedy heuristic otherwise.
    """
    m = (int(m[0]), int(m[1]))
    levels = profile.levels
    lvls = all_levels(mesh, profile)
    assumption = check_assumptions(lvls)
    chi, chi_direct = euler_characteristic(mesh, profile, smoothness, m)
    config = configuration1_holds(mesh, profile, smoothness, m)

    rows = []
    notes = []
    for lv in lvls:
        dm0 = dim_M(levels, lv.index, (0, 0), m)
        h0c = lv.c * dm0
        if assumption.ok:
            an = analyze_segments(lv, smoothness)
            ordr = order_segments(an, ordering, m)
            sets = contribution_sets(an, ordr, m)
            h0i = h0_ideal_upper(an, ordr, m, sets=sets)
            rows.append(LevelRow(lv.index, lv.c, lv.h, dm0, h0c, h0i,
                                 len(an.interior), ordr.strategy,
                                 ordr.sequence,
                                 tuple(sorted(sets.weights.items()))))
        else:
            rows.append(LevelRow(lv.index, lv.c, lv.h, dm0, h0c, None,
                                 0, "none", (), ()))

    for i in config.case_b_levels:
        notes.append(f"level {i}: every crossing smoothness reaches the "
                     "degree gap, so the level's ideal homology vanishes")

    oracle_val = None
    if with_oracle:
        from .oracle import oracle_spline_dim
        oracle_val = oracle_spline_dim(mesh, profile, smoothness, m)

    if not assumption.ok:
        notes.append("levels with relative cycles: "
                     + ", ".join(str(i) for i in assumption.violations)
                     + "; bounds suppressed")
        return DimReport(m, chi, chi_direct, tuple(rows), False,
                         assumption.violations, config.holds,
                         config.case_b_levels, ordering, None, None, None,
                         False, False, None, oracle_val, tuple(notes))

    lower_general = chi - sum(r.h0_constant for r in rows)
    lower_special = chi if config.holds else None
    upper = chi + sum(r.h0_ideal - r.h0_constant for r in rows)
    clamped = False
    if lower_special is not None and upper < lower_special:
        upper = lower_special
        clamped = True
        notes.append("upper bound clamped to the certified lower bound")

    certified = config.holds and all(r.h0_ideal == r.h0_constant
                                     for r in rows)
    if config.holds and not certified:
        gaps = {r.index: r.slack for r in rows if r.slack}
        notes.append("ideal slack by level: "
                     + ", ".join(f"{i}: {s}" for i, s in sorted(gaps.items())))
    exact = chi if certified else oracle_val
    return DimReport(m, chi, chi_direct, tuple(rows), True, (),
                     config.holds, config.case_b_levels, ordering,
                     lower_general, lower_special, upper, clamped,
                     certified, exact, oracle_val, tuple(notes))


def certify_stable(mesh: TMesh, profile, smoothness, m, ordering="auto"):
    """(certified, exact dimension or None) at bi-degree m."""
    report = bounds(mesh, profile, smoothness, m, ordering)
    return report.certified, report.exact
