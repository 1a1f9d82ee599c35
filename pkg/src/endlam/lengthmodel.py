"""Length model along the ray and the projectivized limit trace.

This module is explicitly a MODEL.  It never computes the geodesic ray it
mimics: the short-curve schedule the ray is known to have is synthesized
directly (pants curves at bounded length, the next sequence curve shrinking
along each edge sweep), and the length of a test curve is then evaluated
through the exact expansion

    length(delta) ~ sum over pants curves beta of
        i(delta, beta) * (collar width(beta) + twisting(delta, beta) * length(beta))

with the expansion's error term reported separately, never silently added.
Floating point is confined to this module; every intersection number and
twisting value entering the formulas is exact.
"""

from __future__ import annotations

import math

from .surface import SurfaceError
from .intersect import intersection_number, complete_to_pants, is_filling
from .subproj import annular_coeff_estimate

MODEL_TAG = "model"


class LengthModelParams:
    __slots__ = ("L0", "lam", "regime", "samples", "floor")

    def __init__(self, L0=0.9, lam=None, regime="sweep", samples=8,
                 floor=1e-12):
        if not (0 < L0 <= 1):
            raise ValueError("pants length scale must lie in (0, 1]")
        if regime not in ("C1", "C2", "sweep"):
            raise ValueError("unknown regime")
        self.L0 = L0
        # lam None: the sweep steepness is auto-scaled per step so the
        # collar term of the shrinking curve can overtake the twist term
        # of the current one (the interpolation between regimes is a
        # modeling choice; nothing in the source estimates pins it)
        self.lam = lam
        self.regime = regime
        self.samples = samples
        self.floor = floor


class ModelState:
    __slots__ = ("k", "u", "pants", "lengths", "widths", "tw", "xk", "yk",
                 "tag")

    def __init__(self, k, u, pants, lengths, widths, tw, xk, yk, tag):
        self.k = k
        self.u = u
        self.pants = pants
        self.lengths = lengths
        self.widths = widths
        self.tw = tw
        self.xk = xk
        self.yk = yk
        self.tag = tag


class ModelLength:
    __slots__ = ("value", "error_term")

    def __init__(self, value, error_term):
        self.value = value
        self.error_term = error_term

    def __repr__(self):
        return "ModelLength(%g, O(%g))" % (self.value, self.error_term)


def _collar(length):
    return 2.0 * math.log(1.0 / length)


def _twist_value(seq, k):
    """Modeled twisting of any fixed curve about the k-th sequence curve."""
    anchor = seq.gamma[k - seq.model.m]
    tail = seq.gamma[k + seq.model.m]
    return annular_coeff_estimate(seq.gamma[k], anchor, tail).value


def synthesize_schedule(seq, params=None, k_range=None, family=None):
    """Model states for each step and edge parameter sample."""
    params = params or LengthModelParams()
    m = seq.model.m
    d = seq.depth
    if k_range is None:
        k_range = range(m, d - m)
    states = []
    for k in k_range:
        sigma = seq.gamma[k:k + m]
        pants = complete_to_pants(sigma, k).curves
        twk = _twist_value(seq, k)
        xk = _collar(params.L0) + twk * params.L0
        if params.lam is None:
            # steep enough that the collar term of the shrinking curve
            # overtakes the twist term of the current one on every test
            # coordinate by the end of the sweep
            ratio = 1.0
            for delta in (family or [seq.gamma[k - m], seq.gamma[k + m]]):
                n1 = intersection_number(delta, seq.gamma[k + 1])
                if n1:
                    r = intersection_number(delta, seq.gamma[k]) / n1
                    ratio = max(ratio, float(r))
            lam = max(4.0, 1.5 * xk * ratio)
        else:
            lam = params.lam
        if params.regime == "C1":
            us = [0.0]
        elif params.regime == "C2":
            us = [1.0]
        else:
            # log-spaced edge samples: the projectivized point crosses
            # over when the shrinking curve's collar matches the twist
            # term, which happens decades below the sweep scale, so the
            # samples space the collar width geometrically, not linearly
            n = max(2, params.samples)
            u_min = min(0.5, 1.0 / lam)
            us = [0.0] + [u_min ** ((n - 2 - t) / (n - 2))
                          for t in range(n - 1)]
        for u in us:
            eps = max(params.floor, params.L0 * math.exp(-lam * u))
            lengths = {}
            widths = {}
            tw = {}
            for beta in pants:
                lengths[beta] = params.L0
                widths[beta] = _collar(params.L0)
                tw[beta] = 0
            lengths[seq.gamma[k]] = params.L0
            tw[seq.gamma[k]] = twk
            lengths[seq.gamma[k + 1]] = eps if u > 0 else params.L0
            # the collar width is evaluated analytically so the sweep is
            # not capped by floating-point underflow of the length itself
            widths[seq.gamma[k + 1]] = (
                2.0 * (lam * u - math.log(params.L0)) if u > 0
                else _collar(params.L0))
            yk = widths[seq.gamma[k + 1]] if u > 0 else 0.0
            tag = "C1" if u == 0.0 else "C2"
            states.append(ModelState(k, u, pants, lengths, widths, tw,
                                     xk, yk, tag))
    return states


def model_length(state, delta):
    """The modeled length of a test curve at one state, plus the error scale."""
    total = 0.0
    err = 0.0
    for beta in state.pants:
        n = intersection_number(delta, beta)
        if n == 0:
            continue
        total += n * (state.widths[beta]
                      + state.tw[beta] * state.lengths[beta])
        err += n
    return ModelLength(total, err)


class TracePoint:
    __slots__ = ("k", "u", "tag", "xk", "yk", "projective", "reduced",
                 "residual")

    def __init__(self, k, u, tag, xk, yk, projective, reduced, residual):
        self.k = k
        self.u = u
        self.tag = tag
        self.xk = xk
        self.yk = yk
        self.projective = projective
        self.reduced = reduced
        self.residual = residual


def _normalize(vec):
    top = max(abs(v) for v in vec)
    if top == 0:
        raise SurfaceError("zero length vector")
    return [v / top for v in vec]


def limit_trace(seq, family=None, params=None, k_range=None):
    """Sweep the model along the ray and projectivize the length vectors.

    Each point also carries the projectivized two-term reduction (the
    current and next sequence curve weighted by the model coefficients)
    and the sup-distance between the two vectors: the reduction residual.
    """
    params = params or LengthModelParams()
    if family is None:
        from .ergodics import default_family
        family = default_family(seq)
    cert = is_filling(family)
    if not cert.verdict:
        raise SurfaceError("test family does not fill")
    states = synthesize_schedule(seq, params, k_range, family)
    out = []
    for st in states:
        vec = [model_length(st, delta).value for delta in family]
        proj = _normalize(vec)
        red = [st.xk * intersection_number(delta, seq.gamma[st.k])
               + st.yk * intersection_number(delta, seq.gamma[st.k + 1])
               for delta in family]
        redp = _normalize(red)
        resid = max(abs(x - y) for x, y in zip(proj, redp))
        out.append(TracePoint(st.k, st.u, st.tag, st.xk, st.yk, proj, redp,
                              resid))
    return out
