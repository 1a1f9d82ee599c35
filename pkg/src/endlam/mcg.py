"""Mapping-class words over the rotation and Dehn twists, and their action.

A word is a finite product of letters, each a power of the rotation or of a
twist about a stored curve.  Words act on curves right-to-left (the
rightmost letter is applied first), so that the sequence words compose as
products in the usual function-composition order.

Twists ground out on curves whose axis is a round curve about a side (the
rotation orbit of the reference curve); a twist about a worded axis is
expanded through the conjugation identity D_{W(c)} = W D_c W^{-1}.
"""

from __future__ import annotations

from .diagram import DiagramError
from .twist import twist_about_base
from .surface import Curve, SurfaceError

RHO = "rho"


class WordError(ValueError):
    pass


class MCWord:
    """Canonical product of (generator, exponent) letters.

    Generators are the string "rho" or a Curve used as a twist axis;
    exponents are nonzero integers.  Adjacent letters with equal generator
    are merged and zero exponents dropped.
    """

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        out = []
        for gen, exp in letters:
            if exp == 0:
                continue
            if out and out[-1][0] == gen:
                merged = out[-1][1] + exp
                out.pop()
                if merged:
                    out.append((gen, merged))
            else:
                out.append((gen, exp))
        self.letters = tuple(out)

    @classmethod
    def identity(cls):
        return cls(())

    @classmethod
    def rho_power(cls, n):
        return cls(((RHO, n),))

    @classmethod
    def twist(cls, axis, power):
        return cls(((axis, power),))

    def compose(self, other):
        return MCWord(self.letters + other.letters)

    def inverse(self):
        return MCWord(tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def is_identity(self):
        return not self.letters

    def __eq__(self, other):
        return isinstance(other, MCWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def __repr__(self):
        bits = []
        for gen, exp in self.letters:
            name = "rho" if gen == RHO else "D[%r]" % gen
            bits.append("%s^%s" % (name, exp))
        return "MCWord(%s)" % (" ".join(bits) or "id")


def _apply_diagram(letters, dia, p):
    """Apply letters (right to left) to a bare diagram."""
    for gen, exp in reversed(letters):
        if gen == RHO:
            dia = dia.relabelled((2 * exp) % p)
            continue
        axis = gen
        q = axis.round_side()
        if q is not None:
            dia = twist_about_base(dia, q, exp)
        elif axis.word is not None:
            inv = axis.word.inverse().letters
            dia = _apply_diagram(inv, dia, p)
            dia = twist_about_base(dia, 0, exp)
            dia = _apply_diagram(axis.word.letters, dia, p)
        else:
            raise WordError("twist axis is neither round nor worded")
    return dia


def apply_word(w, c):
    """The image of curve c under the word w."""
    dia = _apply_diagram(w.letters, c.diagram, c.model.p)
    word = w.compose(c.word) if c.word is not None else None
    return Curve(c.model, dia, word)


def dehn_twist(c, axis, power):
    """The image of c under the power-th twist about axis."""
    if axis.model != c.model:
        raise SurfaceError("axis is on a different surface")
    if power == 0:
        return c
    return apply_word(MCWord.twist(axis, power), c)


def generator_words(model, schedule, k):
    """(phi_k, Phi_k): the step word and its running product.

    phi_k twists about the middle base curve with the (k+m-1)-th schedule
    exponent, then rotates one step; Phi_k is the product of the first k
    step words.  Phi_0 is the identity.
    """
    from .surface import base_curve
    m = model.m
    if k < 0:
        raise WordError("negative word index")
    if k > 0 and len(schedule.e) < k + m:
        raise WordError("schedule too short for the requested word")
    alpha = base_curve(model, m)
    if k == 0:
        return MCWord.identity(), MCWord.identity()
    phi = MCWord.twist(alpha, schedule.e[k + m - 1]).compose(
        MCWord.rho_power(1))
    Phi = MCWord.identity()
    for t in range(1, k + 1):
        step = MCWord.twist(alpha, schedule.e[t + m - 1]).compose(
            MCWord.rho_power(1))
        Phi = Phi.compose(step)
    return phi, Phi
