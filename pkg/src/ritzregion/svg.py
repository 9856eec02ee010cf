"""Static SVG pictures of W(A), the rank-2 range, R_A(mu1) and partner samples."""

from __future__ import annotations

from .geometry import ConvexRegion, RegionKind

PALETTE = {
    "W": "#d9d9d9",
    "L2": "#555555",
    "B": "#9ecae1",
    "R": "#08519c",
    "mu": "#cb181d",
    "gen": "#08306b",
    "eig": "#000000",
}


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _xy(z: complex) -> tuple:
    # SVG y grows downward
    return _fmt(z.real), _fmt(-z.imag)


def _shape(R: ConvexRegion, style: str) -> str:
    if R.is_empty:
        return ""
    if R.kind is RegionKind.POINT:
        x, y = _xy(R.vertices[0])
        return f'<circle cx="{x}" cy="{y}" r="{{dot}}" {style}/>'
    pts = " ".join(",".join(_xy(z)) for z in R.vertices)
    tag = "polyline" if R.kind is RegionKind.SEGMENT else "polygon"
    return f'<{tag} points="{pts}" {style}/>'


def render(W: ConvexRegion, L2: ConvexRegion, R: ConvexRegion, mu1: complex,
           generating: list, eigenvalues: list, partner_regions=()) -> str:
    """Deterministic SVG text; no timestamps, fixed palette and precision."""
    V = W.as_array()
    lo = complex(V.real.min(), V.imag.min())
    hi = complex(V.real.max(), V.imag.max())
    ext = max(hi.real - lo.real, hi.imag - lo.imag, 1e-12)
    pad = 0.1 * ext
    x0, y0 = lo.real - pad, -hi.imag - pad
    w, h = hi.real - lo.real + 2 * pad, hi.imag - lo.imag + 2 * pad
    sw = _fmt(0.004 * ext)
    dot = _fmt(0.012 * ext)
    font = _fmt(0.04 * ext)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" width="600" height="{_fmt(600 * h / w)}">',
        "<defs>",
        f'<pattern id="hatch" patternUnits="userSpaceOnUse" width="{_fmt(0.03 * ext)}" '
        f'height="{_fmt(0.03 * ext)}" patternTransform="rotate(45)">',
        f'<line x1="0" y1="0" x2="0" y2="{_fmt(0.03 * ext)}" stroke="{PALETTE["L2"]}" stroke-width="{sw}"/>',
        "</pattern>",
        "</defs>",
    ]
    out.append(_shape(W, f'fill="{PALETTE["W"]}" stroke="none"'))
    for B in partner_regions:
        out.append(_shape(B, f'fill="{PALETTE["B"]}" fill-opacity="0.6" stroke="none"'))
    out.append(_shape(L2, f'fill="url(#hatch)" stroke="{PALETTE["L2"]}" stroke-width="{sw}"'))
    out.append(_shape(R, f'fill="none" stroke="{PALETTE["R"]}" stroke-width="{_fmt(2 * 0.004 * ext)}"'))
    for p in generating:
        x, y = _xy(p)
        out.append(f'<circle cx="{x}" cy="{y}" r="{dot}" fill="{PALETTE["gen"]}"/>')
    for k, z in enumerate(eigenvalues):
        x, y = _xy(z)
        out.append(f'<circle cx="{x}" cy="{y}" r="{_fmt(0.008 * ext)}" fill="{PALETTE["eig"]}"/>')
        out.append(f'<text x="{x}" y="{y}" dx="{dot}" dy="-{dot}" font-size="{font}" '
                   f'font-family="serif">&#955;{k + 1}</text>')
    mx, my = mu1.real, -mu1.imag
    c = 0.02 * ext
    out.append(f'<path d="M{_fmt(mx - c)},{_fmt(my - c)} L{_fmt(mx + c)},{_fmt(my + c)} '
               f'M{_fmt(mx - c)},{_fmt(my + c)} L{_fmt(mx + c)},{_fmt(my - c)}" '
               f'stroke="{PALETTE["mu"]}" stroke-width="{sw}"/>')
    out.append("</svg>")
    return "\n".join(s.replace("{dot}", dot) for s in out if s) + "\n"
