"""Property-based checks of the algebraic primitives."""

from hypothesis import given, settings
from hypothesis import strategies as st

from htwist.barcobar import bar_letter_degree, shuffles_with_signs
from htwist.rings import QQ, ZZ
from htwist.simplicial import GroupWord


letters = st.lists(
    st.tuples(st.sampled_from("abc"), st.sampled_from((1, -1))), max_size=8
)


@given(letters, letters)
def test_group_word_associativity(u, v):
    a, b = GroupWord.reduce(u), GroupWord.reduce(v)
    assert (a * b) * b.inverse() == a
    assert a.inverse().inverse() == a


@given(letters, letters, letters)
def test_group_word_mult_associative(u, v, w):
    a, b, c = (GroupWord.reduce(x) for x in (u, v, w))
    assert (a * b) * c == a * (b * c)


@given(letters)
def test_group_word_inverse_law(u):
    a = GroupWord.reduce(u)
    assert (a * a.inverse()).is_identity()
    assert (a.inverse() * a).is_identity()


words = st.lists(st.tuples(st.integers(1, 3), st.sampled_from("xyz")), max_size=4)


@settings(max_examples=60)
@given(words, words)
def test_shuffle_count_and_sign_symmetry(u, v):
    u, v = tuple(u), tuple(v)
    out = shuffles_with_signs(QQ, u, v, bar_letter_degree)
    # number of shuffles is binomial(|u|+|v|, |u|)
    from math import comb

    assert len(out) == comb(len(u) + len(v), len(u))
    # graded commutativity of the shuffle sum: swapping arguments flips each
    # shuffle's sign by (-1)^{deg(u)·deg(v)} on marked degrees
    du = sum(bar_letter_degree(k) for k in u)
    dv = sum(bar_letter_degree(k) for k in v)
    sgn = QQ.of(-1) if (du * dv) % 2 else QQ.one

    def aggregate(pairs):
        total = {}
        for w, s in pairs:
            total[w] = QQ.add(total.get(w, QQ.zero), s)
        return {k: v for k, v in total.items() if not QQ.is_zero(v)}

    total = aggregate(out)
    swapped = aggregate(shuffles_with_signs(QQ, v, u, bar_letter_degree))
    assert swapped == {w: QQ.mul(sgn, s) for w, s in total.items()}


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7))
def test_suspension_roundtrip_sign(deg):
    from htwist.complexes import ChainComplex, GradedBasis, suspend

    basis = GradedBasis(deg + 1, {deg: ["a"], deg - 1: ["b"]})
    X = ChainComplex(ZZ, basis)
    X.set_d_entry(deg, "a", "b", 3)
    S = suspend(X, 1)
    assert S.d_of(deg + 1, "s(a)") == {"s(b)": -3}
    back = suspend(S, -1)
    assert back.d_of(deg, "s-1(s(a))") == {"s-1(s(b))": 3}
