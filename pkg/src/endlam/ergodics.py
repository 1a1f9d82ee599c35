"""Finite shadows of the intersection asymptotics and the measure splitting.

Everything here is exact rational arithmetic on intersection numbers of
built sequence curves; the limit measures are always replaced by the
deepest affordable normalized curve in the matching residue class, and
every report states the proxy depth used.
"""

from __future__ import annotations

from fractions import Fraction

from .surface import SurfaceError
from .intersect import intersection_number
from .seqgen import twist_product


class DepthError(ValueError):
    pass


def qualifying(i, k, m):
    """Pairs with two-sided intersection bounds in terms of twist products."""
    return ((k - i >= 2 * m and (k - i) % m == 0)
            or (i <= 2 * m - 1 and k - i >= m * m + m - 1))


class AsymptoticsReport:
    __slots__ = ("ratios", "kappa0", "kappa", "pairs")

    def __init__(self, ratios, kappa0, kappa, pairs):
        self.ratios = ratios
        self.kappa0 = kappa0
        self.kappa = kappa
        self.pairs = pairs

    def __repr__(self):
        return "AsymptoticsReport(pairs=%d, kappa0=%s)" % (len(self.ratios),
                                                           self.kappa0)


def intersection_ratio_table(seq):
    """Ratios of pairwise intersections to twist products, with measured bands."""
    m = seq.model.m
    d = seq.depth
    ratios = {}
    pairs = {}
    kappa = Fraction(0)
    kappa0 = Fraction(1)
    for i in range(d):
        for k in range(i + 1, d + 1):
            n = intersection_number(seq.gamma[i], seq.gamma[k])
            A = twist_product(seq, i, k)
            r = Fraction(n, A)
            ratios[(i, k)] = r
            q = qualifying(i, k, m)
            pairs[(i, k)] = q
            kappa = max(kappa, r)
            if q:
                if r == 0:
                    raise SurfaceError(
                        "qualifying pair (%d,%d) is disjoint" % (i, k))
                kappa0 = max(kappa0, r, 1 / r)
    return AsymptoticsReport(ratios, kappa0, kappa, pairs)


def growth_ratio_check(seq, max_triples=500):
    """Exact growth-ratio bound between nested twist products."""
    m = seq.model.m
    a = seq.schedule.a
    d = seq.depth
    rows = []
    count = 0
    for i in range(d - 1):
        for k in range(i + 1, d):
            for l in range(k + 1, d + 1):
                if count >= max_triples:
                    return rows
                lhs = Fraction(twist_product(seq, i, k),
                               twist_product(seq, i, l))
                rhs = a ** (1 - (l - i) // m)
                rows.append(((i, k, l), lhs <= rhs))
                count += 1
    return rows


class ErgodicProxy:
    __slots__ = ("h", "k", "vector")

    def __init__(self, h, k, vector):
        self.h = h
        self.k = k
        self.vector = vector

    def __repr__(self):
        return "ErgodicProxy(h=%d, k=%d, dims=%d)" % (self.h, self.k,
                                                      len(self.vector))


def _proxy_vector(seq, h, k, family):
    idx = h + k * seq.model.m
    A = twist_product(seq, 0, idx)
    return {t: Fraction(intersection_number(delta, seq.gamma[idx]), A)
            for t, delta in enumerate(family)}


def default_family(seq):
    from .surface import base_curve
    from .intersect import complete_to_pants
    m = seq.model.m
    fam = [base_curve(seq.model, j) for j in range(2 * m)]
    pants = complete_to_pants(fam[:m])
    return fam + pants.completion


class ConvergenceReport:
    __slots__ = ("proxies", "residuals", "fit", "ok", "excluded", "burn_in")

    def __init__(self, proxies, residuals, fit, ok, excluded, burn_in):
        self.proxies = proxies
        self.residuals = residuals
        self.fit = fit
        self.ok = ok
        self.excluded = excluded
        self.burn_in = burn_in


def convergence_report(seq, family=None, burn_in=None):
    """Cauchy decay of the normalized intersection vectors per residue class."""
    m = seq.model.m
    d = seq.depth
    a = seq.schedule.a
    if family is None:
        family = default_family(seq)
    usable = []
    excluded = []
    for delta in family:
        tail = range(max(0, d - 2 * m), d + 1)
        if any(intersection_number(delta, seq.gamma[t]) for t in tail):
            usable.append(delta)
        else:
            excluded.append(delta)
    if burn_in is None:
        burn_in = m * m
    proxies = {}
    residuals = {}
    fit = {}
    ok = {}
    for h in range(m):
        kmax = (d - h) // m
        if kmax < 2:
            raise DepthError("need depth at least %d for residue %d"
                             % (h + 2 * m, h))
        vecs = [ErgodicProxy(h, k, _proxy_vector(seq, h, k, usable))
                for k in range(1, kmax + 1)]
        res = []
        for k in range(len(vecs) - 1):
            diff = max(abs(vecs[k + 1].vector[t] - vecs[k].vector[t])
                       for t in vecs[k].vector)
            res.append(diff)
        steps = [Fraction(res[k + 1], res[k]) for k in range(len(res) - 1)
                 if res[k] != 0]
        fitted = max(steps) if steps else Fraction(0)
        bound = max(fitted, 1 / a)
        good = True
        for k in range(len(res) - 1):
            if k + 1 <= burn_in // m:
                continue
            if res[k] != 0 and res[k + 1] > bound * res[k]:
                good = False
        proxies[h] = vecs
        residuals[h] = res
        fit[h] = fitted
        ok[h] = good
    return ConvergenceReport(proxies, residuals, fit, ok, excluded, burn_in)


def cross_ratio_distinctness(seq, family=None):
    """The proxy vectors of distinct residues are far from proportional."""
    m = seq.model.m
    if family is None:
        family = default_family(seq)
    out = {}
    for h in range(m):
        for hp in range(h + 1, m):
            kh = (seq.depth - h) // m
            khp = (seq.depth - hp) // m
            v = _proxy_vector(seq, h, kh, family)
            w = _proxy_vector(seq, hp, khp, family)
            quots = [Fraction(v[t], w[t]) for t in v if v[t] and w[t]]
            if not quots:
                continue
            out[(h, hp)] = max(quots) / min(quots)
    return out


class SingularityReport:
    __slots__ = ("same", "cross", "band", "proxy_depth", "ok_band",
                 "ok_monotone")

    def __init__(self, same, cross, band, proxy_depth, ok_band, ok_monotone):
        self.same = same
        self.cross = cross
        self.band = band
        self.proxy_depth = proxy_depth
        self.ok_band = ok_band
        self.ok_monotone = ok_monotone


def singularity_ratios(seq, proxy_depth=None, steps=3):
    """Same-residue boundedness versus cross-residue decay of the statistic.

    For residues h != h', the statistic multiplies the intersection of the
    h-anchor with a deep h-class curve by the proxy-measure mass of the
    h'-class proxy on that curve; mutual singularity of the limit measures
    appears as geometric decay of the cross statistic while the
    same-residue statistic stays in the measured band.
    """
    m = seq.model.m
    d = seq.depth
    if m < 2:
        raise DepthError("need at least two residue classes")
    if proxy_depth is None:
        proxy_depth = (d - (m - 1)) // m
    need = (steps + 2) * m + (m - 1)
    if proxy_depth < steps + 2 or d < max(need, (m - 1) + proxy_depth * m):
        raise DepthError("insufficient depth: need depth >= %d"
                         % max(need, (m - 1) + proxy_depth * m))
    table = intersection_ratio_table(seq)
    kappa0 = table.kappa0
    band = (1 / kappa0 ** 2, kappa0 ** 2)
    same = {}
    cross = {}
    ok_band = True
    ok_monotone = True
    for h in range(m):
        for hp in range(m):
            vals = []
            for i in range(1, steps + 1):
                norm = intersection_number(seq.gamma[h],
                                           seq.gamma[h + (i + 1) * m])
                idx_proxy = hp + proxy_depth * m
                mass = Fraction(
                    intersection_number(seq.gamma[h + i * m],
                                        seq.gamma[idx_proxy]),
                    twist_product(seq, 0, idx_proxy))
                vals.append(norm * mass)
            if h == hp:
                same[h] = vals
                for v in vals:
                    if not (band[0] <= v <= band[1]):
                        ok_band = False
            else:
                cross[(h, hp)] = vals
                for i in range(len(vals) - 1):
                    if not vals[i + 1] < vals[i]:
                        ok_monotone = False
    return SingularityReport(same, cross, band, proxy_depth, ok_band,
                             ok_monotone)
