"""
.. module:: svg
   :synopsis: Static SVG figure of a symmetrization

.. moduleauthor:: pyWFT developers

:Module: svg
:Author: pyWFT developers
"""

import logging

import numpy as np

from pyWFT.symmetrization import figure_geometry

# Get module-level logger
logger = logging.getLogger(__name__)

SIZE = 480.0
MARGIN = 0.05

# role -> (color, dash, width, legend label)
STYLES = {
    "arcs": ("#377eb8", None, 1.0, "arc directions"),
    "tangent_images": ("#4daf4a", "6,4", 1.0, "tangent images"),
    "parallelogram": ("#e41a1c", None, 3.0, "reflected figure"),
}
ORDER = ("arcs", "tangent_images", "parallelogram")


def _fmt(x):
    # Fixed decimals keep repeated runs byte-identical
    s = "{:.3f}".format(x)
    return "0.000" if s == "-0.000" else s


def _bounds(geometry):
    pts = [np.zeros(2)]
    for role in ORDER:
        for _, points, _ in geometry[role]:
            pts.extend(points)
    pts = np.array(pts)
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = max(float(np.max(hi - lo)), 1e-12)
    pad = MARGIN * span
    return lo - pad, hi + pad


def _polyline(points, closed, style, to_svg):
    color, dash, width, _ = style
    coords = " ".join("{},{}".format(*map(_fmt, to_svg(p))) for p in points)
    tag = "polygon" if closed else "polyline"
    dashed = ' stroke-dasharray="{}"'.format(dash) if dash else ""
    return '  <{} points="{}" fill="none" stroke="{}" stroke-width="{}"' \
           '{}/>\n'.format(tag, coords, color, _fmt(width), dashed)


def _label(text, point, to_svg):
    x, y = to_svg(point)
    return '  <text x="{}" y="{}" font-size="12" ' \
           'font-family="sans-serif">{}</text>\n'.format(
               _fmt(x + 4), _fmt(y - 4), text.replace("*", "&#8727;"))


def render_svg(report, title=""):
    """Draw a parallelogram report.

    The arc directions are solid, the tangent images dashed and the
    reflected figure bold. The y-axis points up.

    :param report: Report from :func:`pyWFT.symmetrization.symmetrize`
    :type report: ParallelogramReport
    :param title: Title printed in the figure
    :type title: string
    :return: SVG 1.1 document
    :rtype: string
    """
    geometry = figure_geometry(report)
    lo, hi = _bounds(geometry)
    span = hi - lo
    scale = SIZE / float(np.max(span))
    width, height = span * scale

    def to_svg(p):
        return ((p[0] - lo[0]) * scale, (hi[1] - p[1]) * scale)

    out = ['<?xml version="1.0" encoding="UTF-8"?>\n',
           '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
           'width="{0}" height="{1}" viewBox="0 0 {0} {1}">\n'.format(
               _fmt(width), _fmt(height + 70.0))]
    if title:
        out.append('  <title>{}</title>\n'.format(title))
    for role in ORDER:
        out.append('  <g id="{}">\n'.format(role))
        for name, points, closed in geometry[role]:
            out.append("  " + _polyline(points, closed, STYLES[role],
                                        to_svg))
            if role == "arcs":
                out.append("  " + _label(name, points[-1], to_svg))
        out.append('  </g>\n')

    out.append('  <g id="legend">\n')
    for i, role in enumerate(ORDER):
        y = height + 18.0 * (i + 1)
        color, dash, lw, text = STYLES[role]
        dashed = ' stroke-dasharray="{}"'.format(dash) if dash else ""
        out.append('    <line x1="8.000" y1="{0}" x2="40.000" y2="{0}" '
                   'stroke="{1}" stroke-width="{2}"{3}/>\n'.format(
                       _fmt(y), color, _fmt(lw), dashed))
        out.append('    <text x="48.000" y="{}" font-size="12" '
                   'font-family="sans-serif">{}</text>\n'.format(
                       _fmt(y + 4.0), text))
    out.append('  </g>\n</svg>\n')
    return "".join(out)


def write_svg(report, path, title=""):
    """Write :func:`render_svg` output to a file.

    :raises OSError: If the file cannot be written
    """
    with open(path, "w", encoding="utf-8") as f:
        f.write(render_svg(report, title=title))
    logger.info("Figure written to {}".format(path))
