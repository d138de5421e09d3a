"""Static SVG drawings of leveled T-meshes.

One drawing per level: faces shaded by their deficit, the active region's
boundary trace emphasized, interior maximal segments highlighted, and island
components marked with a dashed outline.
"""

from fractions import Fraction

from .levels import ActiveLevel, island_components
from .segments import analyze_segments

_GRAYS = ["#e8e8e8", "#cdcdcd", "#b2b2b2", "#979797", "#7c7c7c", "#616161"]


def _f(x) -> str:
    v = float(x)
    return f"{v:.6g}"


def render_level_svg(level: ActiveLevel, smoothness) -> str:
    mesh = level.mesh
    profile = level.profile
    x0 = min(f.x0 for f in mesh.faces)
    x1 = max(f.x1 for f in mesh.faces)
    y0 = min(f.y0 for f in mesh.faces)
    y1 = max(f.y1 for f in mesh.faces)
    w, h = x1 - x0, y1 - y0
    mrg = Fraction(max(w, h), 12)
    thin = float(max(w, h)) / 300
    thick = thin * 3

    def Y(y):
        return y0 + y1 - y

    parts = ['<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'viewBox="{_f(x0 - mrg)} {_f(y0 - 2 * mrg)} '
             f'{_f(w + 2 * mrg)} {_f(h + 3 * mrg)}">']
    parts.append(f'<text x="{_f(x0)}" y="{_f(y0 - mrg)}" '
                 f'font-size="{_f(mrg)}" font-family="sans-serif">'
                 f'level {level.index} of {profile.top + 1}: '
                 f'c={level.c} h={level.h}</text>')

    ranks = {d: k for k, d in enumerate(sorted(profile.deficit_set))}
    active = set(level.faces)
    for f in mesh.faces:
        if f in active:
            fill = _GRAYS[min(ranks[profile.face_deficit[f]],
                              len(_GRAYS) - 1)]
        else:
            fill = "#ffffff"
        parts.append(f'<rect x="{_f(f.x0)}" y="{_f(Y(f.y1))}" '
                     f'width="{_f(f.x1 - f.x0)}" '
                     f'height="{_f(f.y1 - f.y0)}" fill="{fill}"/>')

    for comp, island in island_components(level):
        if not island:
            continue
        for f in comp:
            parts.append(f'<rect x="{_f(f.x0)}" y="{_f(Y(f.y1))}" '
                         f'width="{_f(f.x1 - f.x0)}" '
                         f'height="{_f(f.y1 - f.y0)}" fill="none" '
                         f'stroke="#1f6fd0" stroke-width="{_f(thick)}" '
                         f'stroke-dasharray="{_f(thick * 2)}"/>')

    def line(e, color, width):
        (ax, ay), (bx, by) = e.endpoints()
        return (f'<line x1="{_f(ax)}" y1="{_f(Y(ay))}" x2="{_f(bx)}" '
                f'y2="{_f(Y(by))}" stroke="{color}" '
                f'stroke-width="{_f(width)}" stroke-linecap="square"/>')

    for e in mesh.edges:
        parts.append(line(e, "#aaaaaa", thin))
    for e in level.boundary_trace:
        parts.append(line(e, "#000000", thick))

    for seg in analyze_segments(level, smoothness).segments:
        if not seg.interior:
            continue
        for e in seg.edges:
            parts.append(line(e, "#c0392b", thick))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
