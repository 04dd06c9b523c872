import pytest

from dubrovnik.tangle import (
    ArityMismatchError,
    Slice,
    TangleParseError,
    TangleWord,
    closure,
    compose,
    crossing_word,
    encircling_word,
    hook_word,
    identity,
    kink_word,
    parse_tangle,
    render_tangle,
    tensor,
)


def test_width_chain_enforced():
    with pytest.raises(ValueError):
        TangleWord(2, 2, (Slice("CAP", 1),))
    with pytest.raises(ValueError):
        TangleWord(1, 1, (Slice("X+", 1),))
    with pytest.raises(ValueError):
        TangleWord(1, 2)  # odd boundary total
    TangleWord(2, 0, (Slice("CAP", 1),))


def test_compose_basic():
    e = crossing_word(2, 1)
    einv = crossing_word(2, 1, -1)
    w = compose(e, einv)
    assert (w.src, w.dst) == (2, 2)
    assert w.crossing_count == 2
    assert compose(identity(2), e).slices == e.slices
    with pytest.raises(ArityMismatchError):
        compose(e, identity(3))


def test_compose_associative_on_words():
    a = crossing_word(2, 1)
    b = hook_word(2, 1)
    c = crossing_word(2, 1, -1)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_tensor():
    assert tensor(identity(1), identity(1)) == identity(2)
    w = tensor(hook_word(2, 1), identity(1))
    assert (w.src, w.dst) == (3, 3)
    assert w.slices == (Slice("CAP", 1), Slice("CUP", 1))
    v = tensor(identity(1), hook_word(2, 1))
    assert v.slices == (Slice("CAP", 2), Slice("CUP", 2))
    empty = TangleWord(0, 0)
    assert tensor(w, empty) == w


def test_tensor_associative():
    a, b, c = crossing_word(2, 1), hook_word(2, 1), identity(1)
    assert tensor(tensor(a, b), c) == tensor(a, tensor(b, c))


def test_closure_shapes():
    assert closure(identity(0)) == TangleWord(0, 0)
    w = closure(identity(2))
    assert (w.src, w.dst) == (0, 0)
    assert w.crossing_count == 0
    with pytest.raises(ArityMismatchError):
        closure(TangleWord(2, 0, (Slice("CAP", 1),)))


def test_encircling_word_shape():
    w = encircling_word(3)
    assert (w.src, w.dst) == (3, 3)
    assert w.crossing_count == 6
    assert encircling_word(0).crossing_count == 0


def test_kink_word_valid():
    assert kink_word(1).crossing_count == 1
    assert kink_word(-1).crossing_count == 1


def test_parse_render_roundtrip():
    for w in [identity(3), closure(crossing_word(2, 1)), encircling_word(2), kink_word()]:
        text = render_tangle(w)
        parsed, _ = parse_tangle(text.splitlines())
        assert parsed == w


def test_parse_errors_carry_line_numbers():
    with pytest.raises(TangleParseError) as exc:
        parse_tangle(["TANGLE src=2", "X+ 5", "END dst=2"])
    assert exc.value.lineno == 2
    with pytest.raises(TangleParseError):
        parse_tangle(["TANGLE src=2", "END dst=4"])
    with pytest.raises(TangleParseError):
        parse_tangle(["nonsense"])
    with pytest.raises(TangleParseError):
        parse_tangle(["TANGLE src=2", "X+ 1"])
