# SPDX-FileCopyrightText: (c) 2021 Artёm IG <github.com/rtmigo>
# SPDX-License-Identifier: MIT

"""Graph of an exchange as a deterministic SVG document.

The square [0, r) x [0, r) holds one unit-slope segment per interval, from
(a_{i-1}, a_{i-1} + delta_i) to (a_i, a_i + delta_i). Left ends are closed
(filled) and right ends open, as the intervals are half-open.
"""

from typing import List, NamedTuple, Optional

from ietforge.a_numeric import qa_float
from ietforge.b_core import Iet

SVG_NS = "http://www.w3.org/2000/svg"
DIGITS = 9

_GRID = dict(stroke="gray", stroke_dasharray="4 3", stroke_width=0.5)


class SvgOptions(NamedTuple):
    size: int = 480
    margin: int = 40
    labels: bool = True
    grid: bool = True


def _num(x: float) -> str:
    # fixed significant digits keep the output byte-stable
    txt = f"{x:.{DIGITS}g}"
    return "0" if txt == "-0" else txt


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;") \
        .replace(">", "&gt;")


def _tag(name: str, text: Optional[str] = None, **attrs) -> str:
    props = " ".join(f'{k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    if text is None:
        return f"<{name} {props}/>"
    return f"<{name} {props}>{_escape(text)}</{name}>"


def render_svg(T: Iet, options: SvgOptions = SvgOptions()) -> str:
    oracle = T.oracle
    r = qa_float(T.total_length, oracle)
    side = options.size
    margin = options.margin
    scale = side / r

    def px(x: float) -> str:
        return _num(margin + x * scale)

    def py(y: float) -> str:
        return _num(margin + side - y * scale)

    width = side + 2 * margin
    out: List[str] = [
        f'<svg xmlns="{SVG_NS}" width="{width}" height="{width}">',
        _tag("rect", x=margin, y=margin, width=side, height=side,
             fill="none", stroke="black", stroke_width=1),
    ]

    if options.grid:
        for a in T.discontinuities:
            x = px(qa_float(a, oracle))
            out.append(_tag("line", x1=x, y1=py(0), x2=x, y2=py(r), **_GRID))
        for b in T.image_breakpoints[1:-1]:
            y = py(qa_float(b, oracle))
            out.append(_tag("line", x1=px(0), y1=y, x2=px(r), y2=y, **_GRID))

    for i in range(1, T.m + 1):
        lo, hi = T.interval(i)
        d = T.translations[i - 1]
        x0, x1 = qa_float(lo, oracle), qa_float(hi, oracle)
        y0, y1 = qa_float(lo + d, oracle), qa_float(hi + d, oracle)
        out.append(_tag("line", x1=px(x0), y1=py(y0), x2=px(x1), y2=py(y1),
                        stroke="black", stroke_width=2))
        out.append(_tag("circle", cx=px(x0), cy=py(y0), r=3, fill="black"))
        out.append(_tag("circle", cx=px(x1), cy=py(y1), r=3, fill="white",
                        stroke="black"))

    if options.labels:
        below = _num(margin + side + 16)
        for a in T.breakpoints:
            out.append(_tag("text", str(a), x=px(qa_float(a, oracle)),
                            y=below, font_size=10, text_anchor="middle"))
        for b in T.image_breakpoints[1:-1]:
            out.append(_tag("text", str(b), x=_num(margin - 4),
                            y=py(qa_float(b, oracle)), font_size=10,
                            text_anchor="end"))

    out.append("</svg>")
    return "\n".join(out) + "\n"
