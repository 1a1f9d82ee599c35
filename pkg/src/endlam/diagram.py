"""Weighted chord-class diagrams on the doubled p-gon.

The surface is a sphere with p punctures realized as two copies (front and
back) of an ideal p-gon glued along their sides.  Corners are the punctures;
side j runs from corner j to corner j+1 (mod p).  A multicurve in normal
position meets each open face in disjoint chords joining two distinct sides,
so its isotopy class is recorded by one non-negative integer weight per
(face, side-pair) class.  Weights are arbitrary-precision; the order of
strands along each side is forced by the nesting of chord classes, which is
what makes exact bundle-level computation possible.

Conventions used throughout:

* positions along side s are counted 0,1,... starting at corner s;
* on side s the class {s,t} occupies a contiguous block, and blocks are
  ordered by rank(t) = (s - t) mod p (so the class to side s-1 hugs corner s
  and the class to side s+1 hugs corner s+1);
* within the class {a,b}, the strand at offset k from corner a on side a is
  the strand at offset (w-1-k) from corner b on side b, where w is the class
  weight (parallel chords nest around the arc of corners strictly between
  a and b that contains neither corner a nor corner b+1).
"""

from __future__ import annotations

FRONT, BACK = 0, 1


def pair(a, b):
    return (a, b) if a < b else (b, a)


def linked(c1, c2, p):
    """Whether chord classes c1, c2 (side pairs) must cross inside a face."""
    a, b = c1
    c, d = c2
    if len({a, b, c, d}) < 4:
        return False
    in1 = (c - a) % p < (b - a) % p
    in2 = (d - a) % p < (b - a) % p
    return in1 != in2


class DiagramError(ValueError):
    pass


class Diagram:
    """A normal multicurve on the doubled p-gon, as chord-class weights."""

    __slots__ = ("p", "w", "_blocks", "_nside")

    def __init__(self, p, weights, check=True):
        self.p = p
        self.w = {k: v for k, v in weights.items() if v}
        self._blocks = {}
        self._nside = {}
        if check:
            self.validate()

    # -- structure ---------------------------------------------------------

    def validate(self):
        p = self.p
        seen = {FRONT: [], BACK: []}
        for (f, a, b), v in self.w.items():
            if f not in (FRONT, BACK):
                raise DiagramError("bad face %r" % (f,))
            if not (0 <= a < b < p):
                raise DiagramError("bad side pair (%s,%s)" % (a, b))
            if v < 0:
                raise DiagramError("negative weight")
            seen[f].append((a, b))
        for f in (FRONT, BACK):
            cs = seen[f]
            for i in range(len(cs)):
                for j in range(i + 1, len(cs)):
                    if linked(cs[i], cs[j], p):
                        raise DiagramError(
                            "crossing classes %s %s in face %d" % (cs[i], cs[j], f))
        for s in range(p):
            nf = sum(v for (f, a, b), v in self.w.items()
                     if f == FRONT and s in (a, b))
            nb = sum(v for (f, a, b), v in self.w.items()
                     if f == BACK and s in (a, b))
            if nf != nb:
                raise DiagramError("side %d mismatch F=%s B=%s" % (s, nf, nb))

    def n_side(self, s):
        if s not in self._nside:
            self._nside[s] = sum(v for (f, a, b), v in self.w.items()
                                 if f == FRONT and s in (a, b))
        return self._nside[s]

    def blocks(self, s, face):
        """Ordered blocks [(t, start, width)] along side s in `face`."""
        key = (s, face)
        got = self._blocks.get(key)
        if got is None:
            p = self.p
            items = []
            for (f, a, b), v in self.w.items():
                if f != face or s not in (a, b):
                    continue
                t = b if a == s else a
                items.append(((s - t) % p, t, v))
            items.sort()
            got = []
            pos = 0
            for _, t, v in items:
                got.append((t, pos, v))
                pos += v
            self._blocks[key] = got
        return got

    def class_at(self, s, face, pos):
        """(t, start, width) of the class whose block contains `pos`."""
        for t, start, width in self.blocks(s, face):
            if start <= pos < start + width:
                return t, start, width
        raise DiagramError("position %s out of range on side %d" % (pos, s))

    def class_range(self, s, face, t):
        for tt, start, width in self.blocks(s, face):
            if tt == t:
                return start, width
        return None

    def step(self, s, face, lo, hi):
        """Advance the strand interval [lo,hi) on side s through `face`.

        Returns pieces [(t, new_face, lo2, hi2)], one per chord-class block
        met, ordered by increasing lo.  The positional map within one class
        reverses orientation: offset k from corner s maps to offset w-1-k
        from corner t.
        """
        out = []
        for t, start, width in self.blocks(s, face):
            a = max(lo, start)
            b = min(hi, start + width)
            if a >= b:
                continue
            c_start, c_width = self.class_range(t, face, s)
            lo2 = c_start + (start + width - b)
            hi2 = c_start + (start + width - a)
            out.append((t, 1 - face, lo2, hi2))
        if sum(b - a for (_, _, a, b) in out) != hi - lo:
            raise DiagramError("step lost strands on side %d" % s)
        return out

    # -- elementary whole-diagram operations -------------------------------

    def relabelled(self, shift):
        p = self.p
        w = {(f, *pair((a + shift) % p, (b + shift) % p)): v
             for (f, a, b), v in self.w.items()}
        return Diagram(p, w, check=False)

    def total_weight(self):
        return sum(self.w.values())

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.p == other.p and self.w == other.w

    def __hash__(self):
        return hash((self.p, tuple(sorted(self.w.items()))))

    def __repr__(self):
        return "Diagram(p=%d, %r)" % (self.p, dict(sorted(self.w.items())))

    # -- components (explicit scale only) -----------------------------------

    def component_count(self, cap=200000):
        """Number of connected components, by unit-strand walking.

        Only usable when the total crossing count is below `cap`; large
        curves produced by word application are connected by construction
        (they are homeomorphism images of a curve).
        """
        total = sum(self.n_side(s) for s in range(self.p))
        if total > cap:
            raise DiagramError("component count beyond explicit scale")
        if total == 0:
            return 0
        visited = set()
        comps = 0
        for s in range(self.p):
            for pos in range(self.n_side(s)):
                if (s, pos) in visited:
                    continue
                comps += 1
                side, face, cur = s, FRONT, pos
                while True:
                    visited.add((side, cur))
                    [(t, nf, lo2, hi2)] = self.step(side, face, cur, cur + 1)
                    side, face, cur = t, nf, lo2
                    if (side, cur) == (s, pos) and face == FRONT:
                        break
        return comps


def base_curve_diagram(p, q):
    """The curve bounding a neighbourhood of side q (punctures q, q+1)."""
    a, b = (q - 1) % p, (q + 1) % p
    cls = pair(a, b)
    return Diagram(p, {(FRONT, *cls): 1, (BACK, *cls): 1})


def block_curve_diagram(p, u, size):
    """Round curve about the `size` consecutive punctures u,...,u+size-1."""
    if not (2 <= size <= p - 2):
        raise DiagramError("block size out of range")
    a = (u - 1) % p
    b = (u + size - 1) % p
    cls = pair(a, b)
    return Diagram(p, {(FRONT, *cls): 1, (BACK, *cls): 1})
