import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from qcg.crystal import (
    B4,
    B5,
    LETTERS,
    WEIGHT,
    crystal_graph,
    energy,
    energy_H,
    epsilon,
    index,
    index_trace,
    iso,
    kashiwara_e,
    kashiwara_f,
    letter_type,
    phi,
    reorder,
    reorder_from_right,
    type_sequence,
    word_weight,
)
from qcg.algebra import Weight, pairing


def _edges(text):
    return {(a, int(i), b) for a, i, b in (e.split(">") for e in text.split())}


# two-letter crystal graphs as drawn in the reference tables
GRAPH_44 = _edges(
    "11>1>21 12>2>13 13>1>23 21>1>22 21>2>31 22>2>32 23>1>24 24>2>34 31>1>41 "
    "32>2>33 33>1>43 41>1>42 42>2>43 43>1>44")
GRAPH_55 = _edges(
    "aa>2>ba ab>1>ac ac>1>ad ac>2>bc ad>2>bd ba>1>ca ba>2>bb bb>1>cb bc>1>cc bd>2>be "
    "be>1>ce ca>1>da cb>1>db cc>1>cd cd>2>ce ce>1>de da>2>ea db>1>dc dc>1>dd dd>2>ed "
    "ea>2>eb eb>1>ec ec>1>ed ed>2>ee")
GRAPH_45 = _edges(
    "1a>1>2a 1a>2>1b 1b>1>2b 1c>1>1d 1d>2>1e 1e>1>2e 2a>2>3a 2b>1>2c 2c>1>2d 2c>2>3c "
    "2d>2>3d 3a>1>4a 3a>2>3b 3b>1>4b 3c>1>3d 3d>2>3e 3e>1>4e 4a>2>4b 4b>1>4c 4c>1>4d 4d>2>4e")
GRAPH_54 = _edges(
    "a1>1>a2 a1>2>b1 a2>2>b2 a3>1>a4 a4>2>b4 b1>1>c1 b2>1>c2 b2>2>b3 b3>1>c3 b4>1>c4 "
    "c1>1>d1 c2>2>c3 c3>1>d3 d1>1>d2 d1>2>e1 d2>2>e2 d3>1>d4 d4>2>e4 e1>1>e2 e2>2>e3 "
    "e3>1>e4")

MIXED_PAIRS = [x + y for x in B5 for y in B4] + [x + y for x in B4 for y in B5]

words = st.text(alphabet=LETTERS, min_size=1, max_size=7)


def test_letter_weights_and_single_letter_arrows():
    assert [kashiwara_f(1, "1"), kashiwara_f(2, "2"), kashiwara_f(1, "3")] == ["2", "3", "4"]
    assert [kashiwara_f(2, "a"), kashiwara_f(1, "b"), kashiwara_f(1, "c"), kashiwara_f(2, "d")] == list("bcde")
    for i in (1, 2):
        for x in LETTERS:
            y = kashiwara_f(i, x)
            if y is not None:
                assert WEIGHT[y] == WEIGHT[x] - (Weight(2, -1) if i == 1 else Weight(-2, 2))
            # phi - epsilon is the i-th Dynkin label of the weight
            assert phi(i, x) - epsilon(i, x) == pairing(i, WEIGHT[x])


def test_operator_examples():
    assert kashiwara_f(1, "1") == "2"
    assert kashiwara_f(2, "a") == "b"
    assert kashiwara_f(1, "11") == "21"
    assert kashiwara_e(1, "2") == "1"
    assert kashiwara_e(2, "b") == "a"
    assert kashiwara_e(1, "1") is None


def test_operator_errors():
    with pytest.raises(ValueError):
        kashiwara_f(3, "1")
    with pytest.raises(ValueError):
        kashiwara_f(1, "")
    with pytest.raises(ValueError):
        kashiwara_f(1, "x")


@given(words, st.sampled_from([1, 2]))
def test_e_inverts_f(w, i):
    f = kashiwara_f(i, w)
    if f is not None:
        assert kashiwara_e(i, f) == w
    e = kashiwara_e(i, w)
    if e is not None:
        assert kashiwara_f(i, e) == w


@pytest.mark.parametrize("graph,left,right", [
    (GRAPH_44, B4, B4), (GRAPH_45, B4, B5), (GRAPH_54, B5, B4)])
def test_two_letter_graphs_match_reference(graph, left, right):
    assert crystal_graph(x + y for x in left for y in right) == graph


def _string_count(i, words_):
    # every i-string has exactly one element whose i-th Dynkin label is 0 or 1
    return sum(1 for w in words_ if pairing(i, word_weight(w)) in (0, 1))


def test_five_five_graph_has_two_arrows_missing_from_reference():
    all_words = [x + y for x in B5 for y in B5]
    ours = crystal_graph(all_words)
    assert GRAPH_55 < ours
    assert ours - GRAPH_55 == {("ca", 2, "cb"), ("dc", 2, "ec")}
    # the edge count per color is forced by weights alone: 25 minus the number of strings
    for i in (1, 2):
        assert sum(1 for e in ours if e[1] == i) == 25 - _string_count(i, all_words)
    assert sum(1 for e in GRAPH_55 if e[1] == 2) == 25 - _string_count(2, all_words) - 2


def test_iso_examples():
    assert iso("c", "2") == ("4", "a")
    assert iso("1", "2") == ("1", "2")
    assert iso("4", "a") == ("c", "2")


@pytest.mark.parametrize("pair", MIXED_PAIRS)
def test_iso_is_an_involutive_bijection(pair):
    x, y = pair
    image = iso(x, y)
    assert letter_type(image[0]) == letter_type(y)
    assert iso(*image) == (x, y)
    assert WEIGHT[x] + WEIGHT[y] == WEIGHT[image[0]] + WEIGHT[image[1]]


def test_iso_restricted_to_five_four_is_bijective():
    images = {iso(x, y) for x in B5 for y in B4}
    assert images == {(y, x) for x in B5 for y in B4}


@pytest.mark.parametrize("pair", MIXED_PAIRS)
@pytest.mark.parametrize("i", [1, 2])
def test_iso_commutes_with_crystal_operators(pair, i):
    for op in (kashiwara_f, kashiwara_e):
        moved = op(i, pair)
        other = op(i, "".join(iso(*pair)))
        if moved is None:
            assert other is None
        else:
            assert "".join(iso(*moved)) == other


def test_energy_table_examples():
    assert energy_H("1", "2") == 1
    assert energy_H("a", "e") == 2
    assert energy_H("4", "4") == 0
    values = {energy_H(x, y) for x, y in product(LETTERS, repeat=2)}
    assert values == {0, 1, 2}


def test_energy_constant_on_connected_components():
    # H is a crystal invariant on B5 (x) B4 in the sense that it is constant along arrows
    for x, y in product(LETTERS, repeat=2):
        for i in (1, 2):
            t = kashiwara_f(i, x + y)
            if t is not None:
                assert energy_H(*t) == energy_H(x, y), (x + y, i, t)


def test_index_worked_example():
    trace = index_trace("ae123", 4)
    assert [h for _, _, h in trace] == [1, 0, 1]
    assert [(x, y) for x, y, _ in trace] == [("1", "2"), ("e", "1"), ("a", "3")]
    assert index("ae123", 4) == 2
    assert index("ae123", 5) == 3
    assert [index("ae123", p) for p in range(1, 6)] == [0, 2, 1, 2, 3]


@given(words)
def test_index_of_first_letter_is_zero(w):
    assert index(w, 1) == 0


def test_index_position_errors():
    with pytest.raises(ValueError):
        index("ae", 0)
    with pytest.raises(ValueError):
        index("ae", 3)


def test_energy_examples():
    assert energy("ae123") == 8
    assert energy("a") == 0
    assert energy("") == 0
    assert energy("ae141") == 7


def test_reorder_examples():
    assert reorder("ae141", (5, 4, 4, 5, 4)) == "a32e1"
    assert reorder("ae123", (5, 4, 4, 5, 4)) == "a34a3"
    assert reorder("ae123", type_sequence("ae123")) == "ae123"


def test_reorder_rejects_wrong_content():
    with pytest.raises(ValueError):
        reorder("ae1", "444")


def _all_words(max_len):
    for length in range(1, max_len + 1):
        yield from map("".join, product(LETTERS, repeat=length))


def test_energy_invariant_under_reordering_up_to_length_four():
    for w in _all_words(4):
        e = energy(w)
        for target in set(permutations(type_sequence(w))):
            assert energy(reorder(w, target)) == e, (w, target)


@settings(max_examples=300)
@given(st.text(alphabet=LETTERS, min_size=2, max_size=6), st.randoms(use_true_random=False))
def test_reorder_schedules_agree_and_preserve_energy(w, rnd):
    target = list(type_sequence(w))
    rnd.shuffle(target)
    assert reorder(w, target) == reorder_from_right(w, target)
    assert energy(reorder(w, target)) == energy(w)
    assert word_weight(reorder(w, target)) == word_weight(w)


def test_random_adjacent_exchanges_are_undone_by_reorder():
    rnd = random.Random(7)
    for _ in range(300):
        w = "".join(rnd.choice(LETTERS) for _ in range(6))
        letters = list(w)
        for _ in range(10):
            k = rnd.randrange(len(letters) - 1)
            letters[k], letters[k + 1] = iso(letters[k], letters[k + 1])
        assert reorder("".join(letters), type_sequence(w)) == w
