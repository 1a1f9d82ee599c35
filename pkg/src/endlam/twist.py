"""Exact intersections with round curves and scalable Dehn twists.

Both operations work on the pocket bounded by a round curve: the curve
delta(u, size) encircles the consecutive punctures u..u+size-1 and cuts off
a pocket whose interior sides are s_u..s_{u+size-2} and whose two boundary
sides are L = s_{u-1} and R = s_{u+size-1} (only their tails enter the
pocket).

Every essential arc of a multicurve x inside the pocket crosses delta twice,
so i(x, delta) = 2 * (number of such arcs).  Arcs are recovered as chains of
interior-side crossings: walking outward from an interior crossing, the
strand either reaches another interior side (chain continues), leaves the
pocket region (chain end), or bounces between the two boundary sides through
chords of class {L, R} (a spiral corridor parallel to delta, which belongs
to the chain exactly when both of its ends do).  Counting chain ends is a
purely local computation on crossing bundles, with arithmetic fast-forward
through long corridors, so it is exact at any weight scale.

The Dehn twist about a two-puncture round curve (the base-curve family)
rewrites each chain end: the exit leg acquires |e| spiral laps around the
pocket, recorded symbolically as chord-class weight increments.  When the
inserted laps are antiparallel to spiralling already present in the curve
the splice is reduced by free cancellation along the strand, again with
arithmetic bulk cancellation through corridors, so exponents of any size
stay O(1).

Twist sign convention: for e > 0 a strand leaving the pocket through the
front face first crosses side R; through the back face it first crosses
side L.  (This is the left-handed twist about the round curve; e < 0 gives
its inverse.  The convention is pinned by regression tests against the
independent arrangement oracle.)
"""

from __future__ import annotations

from .diagram import FRONT, Diagram, DiagramError, pair

_STEP_CAP = 10 ** 6


class _Split(Exception):
    """A bundle walk hit a class boundary; carries source sub-intervals."""

    def __init__(self, pieces):
        super().__init__("bundle split")
        self.pieces = pieces


class _Walker:
    """Walks a parallel bundle of strands through the diagram.

    State: the bundle has just crossed `side` at positions [lo, hi) and is
    about to continue through `face`.  The bundle is a sub-interval of an
    original seed interval; `obase`/`flip` keep the affine correspondence so
    that splits can be reported in seed coordinates.
    """

    __slots__ = ("dia", "side", "face", "lo", "hi", "flip", "obase")

    def __init__(self, dia, side, face, lo, hi, obase=None):
        self.dia = dia
        self.side = side
        self.face = face
        self.lo = lo
        self.hi = hi
        self.flip = False
        self.obase = lo if obase is None else obase

    def snapshot(self):
        return (self.side, self.face, self.lo, self.hi, self.flip)

    def restore(self, snap):
        self.side, self.face, self.lo, self.hi, self.flip = snap

    def _orig(self, a, b):
        if not self.flip:
            return (self.obase + (a - self.lo), self.obase + (b - self.lo))
        return (self.obase + (self.hi - b), self.obase + (self.hi - a))

    def next_leg(self):
        """Traverse one chord; returns (face, from_side, to_side)."""
        dia = self.dia
        hits = []
        for t, start, width in dia.blocks(self.side, self.face):
            a = max(self.lo, start)
            b = min(self.hi, start + width)
            if a < b:
                hits.append((t, start, width, a, b))
        if sum(b - a for (_, _, _, a, b) in hits) != self.hi - self.lo:
            raise DiagramError("walker lost strands on side %d" % self.side)
        if len(hits) != 1:
            raise _Split([self._orig(a, b) for (_, _, _, a, b) in hits])
        t, start, width, _, _ = hits[0]
        c_start, _ = dia.class_range(t, self.face, self.side)
        leg = (self.face, self.side, t)
        lo2 = c_start + (start + width - self.hi)
        hi2 = c_start + (start + width - self.lo)
        self.side, self.face, self.lo, self.hi = t, 1 - self.face, lo2, hi2
        self.flip = not self.flip
        return leg

    # -- corridor fast-forward ---------------------------------------------

    def _pairs_left(self, state, d, partner):
        side, face, lo, hi, _ = state
        t, start, width = self.dia.class_at(side, face, lo)
        if t != partner or hi > start + width:
            return 0
        if d > 0:
            return (start + width - hi) // d
        return (lo - start) // (-d)

    def corridor_pairs_available(self, sides):
        """Guaranteed number of upcoming 2-leg corridor periods (>= 0).

        Only periods whose legs stay within the side set `sides` qualify;
        anything else must be walked explicitly so that exits are seen.
        """
        snap = self.snapshot()
        states = [snap]
        try:
            for _ in range(3):
                _, frm, to = self.next_leg()
                if frm not in sides or to not in sides:
                    self.restore(snap)
                    return 0
                states.append(self.snapshot())
        except (_Split, DiagramError):
            self.restore(snap)
            return 0
        self.restore(snap)
        s0, s1, s2, s3 = states
        if (s2[0], s2[1]) != (s0[0], s0[1]) or (s3[0], s3[1]) != (s1[0], s1[1]):
            return 0
        d0 = s2[2] - s0[2]
        d1 = s3[2] - s1[2]
        if d0 == 0 or d1 == 0:
            return 0
        return 1 + max(0, min(self._pairs_left(s2, d0, s1[0]),
                              self._pairs_left(s3, d1, s0[0])))

    def jump_pairs(self, j):
        """Advance 2*j legs through a verified corridor.

        Returns the traversed leg classes [((face, a, b), count), ...].
        Caller must ensure j <= corridor_pairs_available().
        """
        if j <= 0:
            return []
        s0 = self.snapshot()
        leg1 = self.next_leg()
        leg2 = self.next_leg()
        d = self.lo - s0[2]
        if (self.side, self.face) != (s0[0], s0[1]):
            raise DiagramError("corridor jump outside corridor")
        self.lo += (j - 1) * d
        self.hi += (j - 1) * d
        return [((leg1[0], *pair(leg1[1], leg1[2])), j),
                ((leg2[0], *pair(leg2[1], leg2[2])), j)]


def _classify(dia, side, face, lo, hi, interior, L, R, obase):
    """Resolve the strand direction leaving an interior-side crossing.

    Returns 'in' (the chain continues to another interior crossing) or
    'exit' (the strand leaves the pocket region: one chain end).
    Raises _Split when the bundle does not behave uniformly.
    """
    wk = _Walker(dia, side, face, lo, hi, obase=obase)
    steps = 0
    while True:
        steps += 1
        if steps > _STEP_CAP:
            raise DiagramError("classification walk exceeded step cap")
        _, _, to = wk.next_leg()
        if to in interior:
            return "in"
        if to != L and to != R:
            return "exit"
        j = wk.corridor_pairs_available((L, R))
        if j > 1:
            wk.jump_pairs(j - 1)


def _pocket_sides(p, u, size):
    if not (2 <= size <= p - 2):
        raise DiagramError("block size out of range")
    interior = frozenset((u + i) % p for i in range(size - 1))
    return interior, (u - 1) % p, (u + size - 1) % p


def intersection_with_block(dia, u, size):
    """Exact i(x, delta(u, size)) for a normal multicurve x.

    x may not contain components isotopic to punctures (never produced
    here); components parallel to delta itself contribute 0, as they must.
    """
    p = dia.p
    interior, L, R = _pocket_sides(p, u, size)
    events = 0
    for s in interior:
        for f in (0, 1):
            for t, start, width in dia.blocks(s, f):
                if t in interior:
                    continue
                if t != L and t != R:
                    events += width
                    continue
                queue = [(start, start + width)]
                while queue:
                    a, b = queue.pop()
                    try:
                        if _classify(dia, s, f, a, b, interior, L, R, a) == "exit":
                            events += b - a
                    except _Split as sp:
                        queue.extend(sp.pieces)
    if events % 2:
        raise DiagramError("odd chain-end count; diagram is inconsistent")
    return events


def intersection_with_base(dia, q):
    """Exact i(x, c_q) with the round curve about punctures q, q+1."""
    return intersection_with_block(dia, q, 2)


# -- the twist ---------------------------------------------------------------


def _splice_piece(dia, q, f, a, b, t1, e, L, R, deltas):
    """Rewrite one exiting bundle (positions [a,b) on side q, face f).

    Inserts |e| spiral laps on the exit leg and free-reduces the result
    against the strand's existing continuation.  Appends (class, +-weight)
    records to `deltas`; raises _Split if the bundle is not uniform.
    """
    wgt = b - a
    n = abs(e)
    fs = R if (f == FRONT) == (e > 0) else L
    os = L if fs == R else R
    lapcls = pair(L, R)

    local = [((f, *pair(q, t1)), -wgt), ((f, *pair(q, fs)), wgt)]
    # 2n-1 lap legs of class {L,R}: n in face 1-f, n-1 in face f; the last
    # one (odd index) is (1-f, fs -> os).
    lap_other = n
    lap_same = n - 1
    laps_count = 2 * n - 1
    lap_last = (1 - f, fs, os)
    base_leg = (f, q, fs)
    base_alive = True
    tail = (f, os, t1)

    ctx = _Walker(dia, q, f, a, b, obase=a)
    ctx.next_leg()  # the replaced exit leg (f, q -> t1)

    cycles = 0
    streak = 0  # consecutive lap-pop cancellation cycles
    pulled = [None, None]  # last two context legs consumed
    while tail[1] == tail[2]:
        cycles += 1
        if cycles > _STEP_CAP:
            raise DiagramError("cascade exceeded step cap")
        if streak >= 2 and laps_count >= 2 and pulled[0] is not None:
            avail = ctx.corridor_pairs_available((L, R))
            jb = min(avail, laps_count // 2)
            if jb >= 1:
                snap = ctx.snapshot()
                try:
                    same = (ctx.next_leg() == pulled[0]
                            and ctx.next_leg() == pulled[1])
                except (_Split, DiagramError):
                    same = False
                ctx.restore(snap)
                if same:
                    for cls, cnt in ctx.jump_pairs(jb):
                        local.append((cls, -cnt * wgt))
                    laps_count -= 2 * jb
                    lap_other -= jb
                    lap_same -= jb
        z = tail[1]
        if laps_count > 0:
            pf, px, py = lap_last
            if py != z:
                raise DiagramError("cascade misaligned with lap chain")
            if pf == 1 - f:
                lap_other -= 1
            else:
                lap_same -= 1
            laps_count -= 1
            lap_last = (1 - pf, py, px)
            streak += 1
        elif base_alive:
            pf, px, py = base_leg
            if py != z:
                raise DiagramError("cascade misaligned with base leg")
            local.append(((pf, *pair(px, py)), -wgt))
            base_alive = False
            streak = 0
        else:
            raise DiagramError("cascade cancelled into the twisting pocket")
        nf, nz, ny = ctx.next_leg()
        if nz != z or nf != pf:
            raise DiagramError("cascade context mismatch")
        if ny == q:
            raise DiagramError("cascade reached the pocket core")
        local.append(((nf, *pair(nz, ny)), -wgt))
        pulled = [pulled[1], (nf, nz, ny)]
        tail = (pf, px, ny)
    if not base_alive and tail[1] != q:
        raise DiagramError("reduced strand detached from the pocket")
    local.append(((tail[0], *pair(tail[1], tail[2])), wgt))
    if lap_other:
        local.append(((1 - f, *lapcls), lap_other * wgt))
    if lap_same:
        local.append(((f, *lapcls), lap_same * wgt))
    if lap_other < 0 or lap_same < 0:
        raise DiagramError("lap bookkeeping went negative")
    deltas.extend(local)


def twist_about_base(dia, q, e):
    """D^e about the round curve c_q (punctures q, q+1), any integer e."""
    if e == 0 or dia.n_side(q) == 0:
        return dia
    p = dia.p
    interior, L, R = _pocket_sides(p, q, 2)
    deltas = []
    for f in (0, 1):
        for t, start, width in dia.blocks(q, f):
            queue = [(start, start + width)]
            while queue:
                a, b = queue.pop()
                local = []
                try:
                    if t == L or t == R:
                        verdict = _classify(dia, q, f, a, b, interior, L, R, a)
                        if verdict == "in":
                            continue
                    _splice_piece(dia, q, f, a, b, t, e, L, R, local)
                except _Split as sp:
                    queue.extend(sp.pieces)
                    continue
                deltas.extend(local)
    w = dict(dia.w)
    for cls, dv in deltas:
        w[cls] = w.get(cls, 0) + dv
    for cls, v in w.items():
        if v < 0:
            raise DiagramError("twist produced negative weight at %r" % (cls,))
    out = Diagram(p, w)
    if out.n_side(q) != dia.n_side(q):
        raise DiagramError("twist changed the axis-side crossing count")
    return out
