"""Conversion from weight diagrams to explicit polyline curves.

This is the only place the two intersection routes touch: the bundle
engine's canonical side ordering is expanded strand by strand into exact
rational side parameters.  The conversion is only possible at explicit
scale (total weight small enough to enumerate strands).
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import FRONT, Diagram, DiagramError
from .oracle import OCurve, assert_embedded

_JITTER_PRIMES = [101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
                  151, 157, 163, 167, 173, 179, 181, 191, 193, 197]


def diagram_to_curves(dia, slot=0, corners=None, cap=20000):
    """Explicit components of a diagram, as a list of polyline curves.

    Strand `pos` of `n` on a side is placed at parameter
    (pos + 1 + jitter)/(n + 2); the jitter depends on `slot` so curves
    converted under different slots avoid exact parameter collisions.
    """
    p = dia.p
    total = sum(dia.n_side(s) for s in range(p))
    if total > cap:
        raise DiagramError("diagram too large for explicit conversion")
    jit = Fraction(1, _JITTER_PRIMES[slot % len(_JITTER_PRIMES)])

    def param(s, pos):
        return (pos + 1 + jit) / (dia.n_side(s) + 2)

    visited = set()
    out = []
    for s0 in range(p):
        for pos0 in range(dia.n_side(s0)):
            if (s0, pos0) in visited:
                continue
            pts = []
            side, face, cur = s0, FRONT, pos0
            while True:
                visited.add((side, cur))
                pts.append((side, param(side, cur)))
                [(t, nf, lo2, _)] = dia.step(side, face, cur, cur + 1)
                side, face, cur = t, nf, lo2
                if (side, cur) == (s0, pos0) and face == FRONT:
                    break
            curve = OCurve(p, pts, FRONT, corners)
            assert_embedded(curve, "converted component")
            out.append(curve)
    return out


def diagram_to_curve(dia, slot=0, corners=None, cap=20000):
    comps = diagram_to_curves(dia, slot, corners, cap)
    if len(comps) != 1:
        raise DiagramError("expected a connected curve")
    return comps[0]
