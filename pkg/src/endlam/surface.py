"""Surface model for the doubled p-gon and its two curve representations.

The sphere with p punctures is fixed once per p as the double of a regular
p-gon with punctures at the corners.  The reference cell structure is the
fan triangulation: each polygon face is cut by the diagonals from corner 0,
giving 2(p-2) ideal triangles on 3p-6 edges.

Curves come in two flavours that deliberately never share computation:

* `Curve` wraps a weighted chord-class diagram (arbitrary precision, the
  scalable engine form) plus an optional mapping-class word recording how
  the curve was produced from the reference curve;
* `ChordCurve` wraps an explicit unit-strand polyline curve (the
  small-scale oracle form).
"""

from __future__ import annotations

from .diagram import (FRONT, BACK, Diagram, DiagramError, pair,
                      base_curve_diagram, block_curve_diagram)
from . import oracle as _oracle


class SurfaceError(ValueError):
    pass


class SurfaceModel:
    """S_{0,p} with its fixed fan triangulation."""

    __slots__ = ("p", "m", "edges", "triangles", "_edge_index")

    def __init__(self, p):
        if p % 2 == 0 or p < 5:
            raise SurfaceError("p must be an odd integer >= 5")
        self.p = p
        self.m = (p - 1) // 2
        edges = [("side", s) for s in range(p)]
        for face in ("front", "back"):
            edges += [(face, j) for j in range(2, p - 1)]
        self.edges = edges
        self._edge_index = {e: i for i, e in enumerate(edges)}
        tris = []
        for face in ("front", "back"):
            for i in range(1, p - 1):
                lo = ("side", 0) if i == 1 else (face, i)
                hi = ("side", p - 1) if i == p - 2 else (face, i + 1)
                tris.append((lo, ("side", i), hi))
        self.triangles = tris

    def euler_characteristic(self):
        # ideal triangulation: faces minus edges (no interior vertices)
        return len(self.triangles) - len(self.edges)

    def validate(self):
        if self.euler_characteristic() != 2 - self.p:
            raise SurfaceError("cell structure has wrong Euler characteristic")
        for tri in self.triangles:
            if len(set(tri)) != 3:
                raise SurfaceError("degenerate triangle")
            for e in tri:
                if e not in self._edge_index:
                    raise SurfaceError("triangle uses unknown edge")
        return True

    def __eq__(self, other):
        return isinstance(other, SurfaceModel) and self.p == other.p

    def __hash__(self):
        return hash(("SurfaceModel", self.p))

    def __repr__(self):
        return "SurfaceModel(p=%d)" % self.p


def build_surface(p):
    model = SurfaceModel(p)
    model.validate()
    return model


class Curve:
    """An essential simple closed curve: chord-class diagram + provenance.

    `word`, when present, is an MCWord W with apply_word(W, gamma_0)
    reproducing this curve; curves entered externally carry none.
    """

    __slots__ = ("model", "diagram", "word")

    def __init__(self, model, diagram, word=None):
        if diagram.p != model.p:
            raise SurfaceError("diagram is on a different surface")
        self.model = model
        self.diagram = diagram
        self.word = word

    @property
    def coords(self):
        """Normal coordinates: crossing numbers with the fan triangulation."""
        dia = self.diagram
        out = []
        for kind, j in self.model.edges:
            if kind == "side":
                out.append(dia.n_side(j))
            else:
                f = FRONT if kind == "front" else BACK
                # the diagonal from corner 0 to corner j separates sides
                # 0..j-1 from the rest; a chord crosses it iff exactly one
                # endpoint side is below j
                total = 0
                for (ff, a, b), v in dia.w.items():
                    if ff == f and (a < j) != (b < j):
                        total += v
                out.append(total)
        return out

    def validate(self):
        self.diagram.validate()
        # matching condition per triangle: each triangle's three crossing
        # numbers have even sum and satisfy the triangle inequality
        vec = dict(zip(self.model.edges, self.coords))
        for tri in self.model.triangles:
            x, y, z = (vec[e] for e in tri)
            if (x + y + z) % 2:
                raise SurfaceError("odd triangle sum in normal coordinates")
            if x > y + z or y > x + z or z > x + y:
                raise SurfaceError("triangle inequality fails")
        if self.diagram.total_weight() == 0:
            raise SurfaceError("empty curve")
        return True

    def is_connected(self, cap=200000):
        return self.diagram.component_count(cap) == 1

    def round_block(self):
        """(u, size) when this is the round curve about a puncture block."""
        w = self.diagram.w
        if len(w) != 2:
            return None
        keys = sorted(w)
        if w[keys[0]] != 1 or w[keys[1]] != 1:
            return None
        (f1, a1, b1), (f2, a2, b2) = keys
        if {f1, f2} != {FRONT, BACK} or (a1, b1) != (a2, b2):
            return None
        p = self.model.p
        size = b1 - a1
        if not (2 <= size <= p - 2):
            return None
        return ((a1 + 1) % p, size)

    def round_side(self):
        """Side q when this is the curve about punctures q, q+1."""
        blk = self.round_block()
        if blk is None:
            return None
        u, size = blk
        if size == 2:
            return u
        if size == self.model.p - 2:
            return (u + size) % self.model.p
        return None

    def __eq__(self, other):
        return (isinstance(other, Curve) and self.model == other.model
                and self.diagram == other.diagram)

    def __hash__(self):
        return hash((self.model.p, self.diagram))

    def __repr__(self):
        return "Curve(p=%d, weight=%d)" % (self.model.p,
                                           self.diagram.total_weight())


class ChordCurve:
    """Explicit small-scale curve: a closed chain of straight chords."""

    __slots__ = ("model", "oc", "reduced")

    def __init__(self, model, oc, reduced=False):
        if oc.p != model.p:
            raise SurfaceError("chord curve is on a different surface")
        self.model = model
        self.oc = oc
        self.reduced = reduced

    @property
    def chords(self):
        """Cyclic chord list: (face, entry side, exit side, entry rank)."""
        oc = self.oc
        side_hits = [i for i, pt in enumerate(oc.points)
                     if _oracle._is_side(pt)]
        order = {}
        for s in range(oc.p):
            on_s = sorted((pt[1], i) for i, pt in enumerate(oc.points)
                          if _oracle._is_side(pt) and pt[0] == s)
            for rank, (_, i) in enumerate(on_s):
                order[i] = rank
        out = []
        for a, i in enumerate(side_hits):
            j = side_hits[(a + 1) % len(side_hits)]
            out.append((oc.seg_face(i), oc.points[i][0], oc.points[j][0],
                        order[i]))
        return out

    def crossing_count(self):
        return len(_oracle.curve_crossings(self.oc, self.oc))

    def __repr__(self):
        return "ChordCurve(p=%d, chords=%d)" % (self.model.p,
                                                len(self.chords))


def base_curve(model, j):
    """The curve rotated j steps from the reference curve gamma_0."""
    if not (0 <= j <= 2 * model.m - 1):
        raise SurfaceError("base curve index out of range")
    dia = base_curve_diagram(model.p, (2 * j) % model.p)
    from .mcg import MCWord
    return Curve(model, dia, MCWord.rho_power(j) if j else MCWord.identity())


def rotate(model, c, n):
    """Apply the order-p rotation n times (two side-steps per application)."""
    if c.model != model:
        raise SurfaceError("curve is on a different surface")
    dia = c.diagram.relabelled((2 * n) % model.p)
    word = None
    if c.word is not None:
        from .mcg import MCWord
        word = MCWord.rho_power(n).compose(c.word)
    return Curve(model, dia, word)


def to_chord(c, slot=0, cap=20000):
    """Convert a Curve to its explicit chord form (small scale only)."""
    from .bridge import diagram_to_curve
    oc = diagram_to_curve(c.diagram, slot=slot, cap=cap)
    return ChordCurve(c.model, oc, reduced=True)


def from_chord(cc):
    """Recover the diagram of a chord curve in normal position.

    Requires every chord to join two distinct sides (true after
    normalization; curves fresh out of a twist may need minimizing against
    the cell structure first).
    """
    oc = cc.oc
    w = {}
    for f, s_in, s_out, _ in cc.chords:
        if s_in == s_out:
            raise SurfaceError("chord curve is not in normal position")
        key = (f, *pair(s_in, s_out))
        w[key] = w.get(key, 0) + 1
    return Curve(cc.model, Diagram(cc.model.p, w))
