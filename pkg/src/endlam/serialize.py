"""JSON round-tripping for curves, words, schedules, and sequences.

All integers are encoded as decimal strings and all rationals as "num/den"
strings, so the files are exact and byte-stable across runs.  A curve
object carries its normal coordinates (crossing numbers with the fan
triangulation) for external consumers plus the chord-class weight list
that reconstructs the diagram exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .diagram import Diagram
from .surface import Curve, SurfaceError, build_surface
from .mcg import MCWord, RHO
from .seqgen import CurveSequence, TwistSchedule


def enc_int(n):
    return str(int(n))


def enc_frac(q):
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def dec_frac(s):
    return Fraction(s)


def word_to_json(w):
    out = []
    for gen, exp in w.letters:
        if gen == RHO:
            out.append({"gen": "rho", "exp": enc_int(exp)})
        else:
            out.append({"gen": {"twist": curve_to_json(gen)},
                        "exp": enc_int(exp)})
    return out


def word_from_json(data, model):
    letters = []
    for item in data:
        gen = item["gen"]
        if gen == "rho":
            letters.append((RHO, int(item["exp"])))
        else:
            letters.append((curve_from_json(gen["twist"], model),
                            int(item["exp"])))
    return MCWord(letters)


def curve_to_json(c):
    data = {
        "p": c.model.p,
        "coords": [enc_int(x) for x in c.coords],
        "classes": [[f, a, b, enc_int(v)]
                    for (f, a, b), v in sorted(c.diagram.w.items())],
        "word": word_to_json(c.word) if c.word is not None else None,
    }
    return data


def curve_from_json(data, model=None):
    if model is None:
        model = build_surface(int(data["p"]))
    elif model.p != int(data["p"]):
        raise SurfaceError("curve is on a different surface")
    w = {(f, a, b): int(v) for f, a, b, v in data["classes"]}
    word = (word_from_json(data["word"], model)
            if data.get("word") is not None else None)
    return Curve(model, Diagram(model.p, w), word)


def schedule_to_json(sch):
    return {"e": [enc_int(x) for x in sch.e],
            "a": enc_frac(sch.a),
            "E0": sch.E0}


def schedule_from_json(data):
    return TwistSchedule([int(x) for x in data["e"]],
                         dec_frac(data["a"]), int(data["E0"]))


def sequence_to_json(seq):
    return {
        "p": seq.model.p,
        "schedule": schedule_to_json(seq.schedule),
        "curves": [curve_to_json(c) for c in seq.gamma],
        "aux": [{"k": j, "curve": curve_to_json(c)}
                for j, c in sorted(seq.gamma_aux.items())],
        "words": [word_to_json(w) for w in seq.words],
    }


def sequence_from_json(data):
    model = build_surface(int(data["p"]))
    schedule = schedule_from_json(data["schedule"])
    gamma = [curve_from_json(c, model) for c in data["curves"]]
    aux = {int(item["k"]): curve_from_json(item["curve"], model)
           for item in data["aux"]}
    words = [word_from_json(w, model) for w in data["words"]]
    return CurveSequence(model, schedule, gamma, aux, words)


def dump(obj, path):
    """Write canonical JSON: sorted keys, fixed separators, trailing newline."""
    with open(path, "w") as fh:
        json.dump(obj, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load(path):
    with open(path) as fh:
        return json.load(fh)
