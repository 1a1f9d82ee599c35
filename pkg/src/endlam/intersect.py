"""Exact geometric intersection numbers, filling tests, pants completion.

Two independent routes are kept strictly apart:

* the scalable route transports one operand to a round curve by the
  inverse of its defining word and counts crossings in the weight diagram;
* the oracle route converts both operands to explicit chord curves and
  minimizes the pair by brute-force bigon removal.

The scalable route never calls into the oracle internals; wordless pairs
beyond explicit scale are refused rather than approximated.
"""

from __future__ import annotations

from .diagram import DiagramError
from .twist import intersection_with_block
from .surface import Curve, ChordCurve, SurfaceError, to_chord
from .mcg import apply_word, WordError
from . import oracle as _oracle

DEFAULT_ORACLE_CAP = 20000


class ScaleError(RuntimeError):
    pass


def _round_intersection(c, other):
    """i(other, c) when c is a round block curve, else None."""
    blk = c.round_block()
    if blk is None:
        return None
    u, size = blk
    return intersection_with_block(other.diagram, u, size)


def intersection_number(a, b):
    """Exact minimal intersection number of two curves."""
    n, _ = intersection_number_with_method(a, b)
    return n


def intersection_number_with_method(a, b):
    if a.model != b.model:
        raise SurfaceError("curves live on different surfaces")
    got = _round_intersection(b, a)
    if got is not None:
        return got, "transport"
    got = _round_intersection(a, b)
    if got is not None:
        return got, "transport"
    for x, y in ((a, b), (b, a)):
        if x.word is not None:
            moved = apply_word(x.word.inverse(), y)
            base = apply_word(x.word.inverse(), x)
            got = _round_intersection(base, moved)
            if got is not None:
                return got, "transport"
    total = sum(a.diagram.n_side(s) + b.diagram.n_side(s)
                for s in range(a.model.p))
    if total <= DEFAULT_ORACLE_CAP:
        return oracle_intersection(a, b), "oracle"
    raise ScaleError("unsupported pair")


def oracle_intersection(a, b, cap=None):
    """Crossing count after joint bigon removal in the chord model."""
    if cap is None:
        cap = DEFAULT_ORACLE_CAP
    try:
        if isinstance(a, Curve):
            a = to_chord(a, slot=0, cap=cap)
        if isinstance(b, Curve):
            b = to_chord(b, slot=1, cap=cap)
    except DiagramError:
        raise ScaleError("oracle scale exceeded")
    npts = len(a.oc.points) + len(b.oc.points)
    if npts > cap:
        raise ScaleError("oracle scale exceeded")
    try:
        return _oracle.oracle_pair_intersection(a.oc, b.oc)
    except DiagramError:
        raise ScaleError("oracle scale exceeded")


class FillingCertificate:
    """Region census of the complement of a curve family."""

    __slots__ = ("regions", "verdict", "crossings")

    def __init__(self, regions, verdict, crossings):
        self.regions = regions
        self.verdict = verdict
        self.crossings = crossings

    def check_euler(self, p):
        # each region with nb boundary walks and np punctures contributes
        # 2 - nb - np; gluing back the 4-valent crossing graph restores
        # the Euler characteristic of the punctured sphere
        total = sum(2 - nb - np_ for (_, nb, np_) in self.regions)
        return total - self.crossings == 2 - p

    def __repr__(self):
        return "FillingCertificate(verdict=%r, regions=%d)" % (
            self.verdict, len(self.regions))


def _region_kind(nb, np_):
    if nb == 1 and np_ == 0:
        return "disk"
    if nb == 1 and np_ == 1:
        return "once-punctured disk"
    return "other"


def is_filling(curves, cap=None):
    """Whether the family fills the surface, with a full region census."""
    if cap is None:
        cap = DEFAULT_ORACLE_CAP
    if not curves:
        raise SurfaceError("empty curve family")
    model = curves[0].model
    for c in curves:
        if c.model != model:
            raise SurfaceError("curves live on different surfaces")
    total = sum(c.diagram.n_side(s) for c in curves for s in range(model.p))
    if total > cap:
        raise ScaleError("oracle scale exceeded")
    occ = [to_chord(c, slot=i, cap=cap).oc for i, c in enumerate(curves)]
    verdict, regs = _oracle.filling_census(occ)
    crossings = 0
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            crossings += intersection_number(curves[i], curves[j])
    cert = FillingCertificate([(_region_kind(nb, np_), nb, np_)
                               for nb, np_ in regs], verdict, crossings)
    if not cert.check_euler(model.p):
        raise SurfaceError("region census is not spherical")
    return cert


class PantsData:
    __slots__ = ("sigma", "completion", "k")

    def __init__(self, sigma, completion, k=None):
        self.sigma = sigma
        self.completion = completion
        self.k = k

    @property
    def curves(self):
        return list(self.sigma) + list(self.completion)

    def __repr__(self):
        return "PantsData(sigma=%d, completion=%d)" % (
            len(self.sigma), len(self.completion))


def complete_to_pants(sigma, k=None):
    """Complete a multicurve to a pants decomposition (p-3 curves).

    The multicurve is transported to reference position by the inverse
    defining word of its first worded member, completed there with round
    block curves (lexicographically least (block start, size) first), and
    transported back.  Deterministic given the input.
    """
    from .surface import Curve as _Curve
    from .diagram import block_curve_diagram
    if not sigma:
        raise SurfaceError("empty multicurve")
    model = sigma[0].model
    p = model.p
    if len(sigma) > p - 3:
        raise SurfaceError("multicurve too large for a pants decomposition")
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if intersection_number(sigma[i], sigma[j]) != 0:
                raise SurfaceError("not a multicurve")
    word = None
    for c in sigma:
        if c.word is not None and not c.word.is_identity():
            word = c.word
            break
    if word is not None:
        moved = [apply_word(word.inverse(), c) for c in sigma]
    else:
        moved = list(sigma)
    chosen = []
    need = (p - 3) - len(sigma)
    existing = moved[:]
    for _ in range(need):
        found = None
        for u in range(p):
            for size in range(2, p - 1):
                cand = _Curve(model, block_curve_diagram(p, u, size))
                if cand in existing or cand in chosen:
                    continue
                if all(intersection_number(cand, c) == 0
                       for c in existing + chosen):
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            raise SurfaceError("no disjoint completion curve found")
        chosen.append(found)
    if word is not None:
        chosen = [apply_word(word, c) for c in chosen]
    return PantsData(list(sigma), chosen, k)
