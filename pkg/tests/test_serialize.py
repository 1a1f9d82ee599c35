import json

from endlam import serialize
from endlam.surface import build_surface, base_curve
from endlam.mcg import MCWord


def test_curve_round_trip(seq5):
    model = seq5.model
    for c in seq5.gamma:
        back = serialize.curve_from_json(serialize.curve_to_json(c), model)
        assert back.diagram == c.diagram
        assert (back.word is None) == (c.word is None)
        if c.word is not None:
            assert back.word.letters == c.word.letters


def test_word_round_trip():
    model = build_surface(5)
    w = MCWord([(base_curve(model, 2), 7), ("rho", -3)])
    back = serialize.word_from_json(serialize.word_to_json(w), model)
    assert back == w


def test_schedule_round_trip(seq5):
    data = serialize.schedule_to_json(seq5.schedule)
    back = serialize.schedule_from_json(data)
    assert back.e == seq5.schedule.e
    assert back.a == seq5.schedule.a
    assert back.E0 == seq5.schedule.E0


def test_sequence_round_trip(tmp_path, seq5):
    path = tmp_path / "seq.json"
    serialize.dump(serialize.sequence_to_json(seq5), str(path))
    back = serialize.sequence_from_json(serialize.load(str(path)))
    assert back.depth == seq5.depth
    assert all(a.diagram == b.diagram
               for a, b in zip(back.gamma, seq5.gamma))
    assert sorted(back.gamma_aux) == sorted(seq5.gamma_aux)
    for j in back.gamma_aux:
        assert back.gamma_aux[j].diagram == seq5.gamma_aux[j].diagram
    assert [w.letters for w in back.words] == [w.letters for w in seq5.words]


def test_big_integers_are_strings(seq5):
    data = serialize.sequence_to_json(seq5)
    json.dumps(data)
    for coord in data["curves"][-1]["coords"]:
        assert isinstance(coord, str)
    assert "/" in data["schedule"]["a"]
    assert all(isinstance(e, str) for e in data["schedule"]["e"])


def test_dump_is_deterministic(tmp_path, seq5):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    serialize.dump(serialize.sequence_to_json(seq5), str(p1))
    serialize.dump(serialize.sequence_to_json(seq5), str(p2))
    assert p1.read_bytes() == p2.read_bytes()
