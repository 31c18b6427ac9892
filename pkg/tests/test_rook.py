import random
from collections import Counter

import pytest

from catsl11.rep import state
from catsl11.rook import (DiagramWord, ElementaryDiagram, LoopGen, gen_diff,
                          gen_grade, gen_src, gen_tgt, grade, loop_key,
                          make_elementary, markings, crossings, mover_key,
                          render_word, resolve_crossing, resolve_marking,
                          rn_canon, rn_generators, word_from_gens,
                          word_grade, word_normal_form)


def word_diff(word):
    out = []
    for i, g in enumerate(word):
        for dg in gen_diff(g):
            out.append(word[:i] + dg + word[i + 1:])
    return out


def reduced(words):
    acc = Counter()
    for w in words:
        nf = rn_canon(w)
        if nf is not None:
            acc[nf] ^= 1
    return {w for w, c in acc.items() if c}


def test_make_elementary_fig8_values():
    # paper Fig. 8: i=1, s1=3, v=(2,1,0,0), s0=3
    d = make_elementary((4, 6, 7, 8), 4, 1, n=8)
    assert (d.i, d.s1, d.v, d.s0) == (1, 3, (2, 1, 0, 0), 3)
    # the formula applied to (3,5,6,7): one fewer gap below the block
    d2 = make_elementary((3, 5, 6, 7), 4, 1, n=7)
    assert (d2.i, d2.s1, d2.v, d2.s0) == (1, 3, (1, 1, 0, 0), 2)


def test_make_elementary_small():
    d = make_elementary(state(2, (2,)), 1, 1)
    assert (d.i, d.s1, d.v, d.s0) == (1, 0, (0,), 0)
    d = make_elementary(state(3, (3,)), 1, 1)
    assert (d.i, d.s1, d.v, d.s0) == (1, 0, (1,), 1)


def test_make_elementary_errors():
    with pytest.raises(ValueError):
        make_elementary((2, 3), 1, 3)  # p >= x_m
    with pytest.raises(ValueError):
        make_elementary((2, 3), 2, 2)  # occupied
    with pytest.raises(ValueError):
        make_elementary((2,), 5, 1)  # bad index


def test_grades():
    assert grade(LoopGen(3, (2, 3), 1)) == (-1, -1)
    assert grade(make_elementary((2,), 1, 1, n=2)) == (1, 1)
    assert grade(make_elementary((4, 6, 7, 8), 4, 1, n=8)) == (-2, 4)


def test_resolve_marking_example():
    d = make_elementary(state(3, (3,)), 1, 1)
    w = resolve_marking(d, 2)
    assert w.gens == (mover_key((3,), 2, 3), mover_key((2,), 1, 2))
    assert w.target == (1,)
    with pytest.raises(ValueError):
        resolve_marking(d, 1)
    no_marks = make_elementary(state(2, (2,)), 1, 1)
    with pytest.raises(ValueError):
        resolve_marking(no_marks, 1)


def test_resolve_crossing_fig17():
    d = make_elementary(state(3, (2, 3)), 2, 1)
    assert (d.i, d.s1, d.v) == (1, 1, (0, 0))
    w1, w2 = resolve_crossing(d, 1)
    assert w1.gens == (loop_key((2, 3), 2), mover_key((2, 3), 1, 2),
                       mover_key((1, 3), 2, 3))
    assert w2.gens == (mover_key((2, 3), 1, 2), mover_key((1, 3), 2, 3),
                       loop_key((1, 2), 2))
    with pytest.raises(ValueError):
        resolve_crossing(d, 2)
    with pytest.raises(ValueError):
        resolve_crossing(make_elementary(state(2, (2,)), 1, 1), 1)


def test_full_differential_three_terms():
    # one marking and one crossing -> 1 + 2 resolution words
    d = make_elementary(state(4, (3, 4)), 2, 1)
    assert (d.s1, d.s0) == (1, 1)
    terms = gen_diff(d.key())
    assert len(terms) == 3
    assert len(reduced(terms)) == 3


def test_decoration_conservation():
    for x, m, p, n in [((3,), 1, 1, 3), ((3, 4), 2, 1, 4), ((2, 4), 2, 1, 4),
                       ((4, 6, 7, 8), 4, 1, 8)]:
        d = make_elementary(x, m, p, n=n)
        dk = d.key()
        for q in markings(dk):
            w = resolve_marking(d, q)
            s1s = sum(len(crossings(g)) for g in w.gens)
            s0s = sum(len(markings(g)) for g in w.gens)
            assert (s1s, s0s) == (d.s1, d.s0 - 1)
            assert w.grade() == (gen_grade(dk)[0] + 1, gen_grade(dk)[1])
        for ci in range(d.i, d.i + d.s1):
            for w in resolve_crossing(d, ci):
                movers = [g for g in w.gens if g[0] == "mv"]
                s1s = sum(len(crossings(g)) for g in movers)
                s0s = sum(len(markings(g)) for g in movers)
                assert (s1s, s0s) == (d.s1 - 1, d.s0)
                assert w.grade() == (gen_grade(dk)[0] + 1, gen_grade(dk)[1])


def test_d_squared_zero_small_diagrams():
    import itertools
    checked = 0
    for n in range(2, 6):
        for k in range(1, n + 1):
            for x in itertools.combinations(range(1, n + 1), k):
                for m in range(1, k + 1):
                    for p in range(1, x[m - 1]):
                        if p in x:
                            continue
                        d = make_elementary(x, m, p, n=n)
                        if d.s1 + d.s0 > 3:
                            continue
                        dd = []
                        for w in gen_diff(d.key()):
                            dd.extend(word_diff(w))
                        assert not reduced(dd), (x, m, p)
                        checked += 1
    assert checked > 50


def test_normal_form_loops_commute():
    x = (2, 3)
    a = (loop_key(x, 2), loop_key(x, 3))
    b = (loop_key(x, 3), loop_key(x, 2))
    assert rn_canon(a) == rn_canon(b) is not None
    assert rn_canon((loop_key(x, 2), loop_key(x, 2))) is None


def test_normal_form_slide_and_isotopy():
    x = (2, 3)
    big = mover_key(x, 1, 3)  # crosses the strand at 2
    y = gen_tgt(big)
    # loop on the crossed strand slides (Fig. 9/10)
    assert rn_canon((loop_key(x, 2), big)) == rn_canon((big, loop_key(y, 2)))
    # loop on the moving strand does not (Fig. 11): distinct normal forms
    w_below = rn_canon((loop_key(x, 3), big))
    w_above = rn_canon((big, loop_key(y, 1)))
    assert w_below is not None and w_above is not None and w_below != w_above
    # differentials of the two slide-equal words agree (Fig. 10)
    lhs = reduced(word_diff((loop_key(x, 2), big)))
    rhs = reduced(word_diff((big, loop_key(y, 2))))
    assert lhs == rhs


def test_double_crossing_nonzero():
    w = (mover_key((3, 4), 2, 4), mover_key((2, 3), 1, 3))
    assert rn_canon(w) is not None


def test_word_normal_form_api():
    w = word_from_gens(3, (2, 3), (loop_key((2, 3), 2), loop_key((2, 3), 3)))
    nf = word_normal_form(w)
    assert isinstance(nf, DiagramWord) and nf.source == (2, 3)
    with pytest.raises(ValueError):
        word_from_gens(3, (2, 3), (loop_key((1, 3), 1),))
    z = word_from_gens(3, (2,), (loop_key((2,), 2), loop_key((2,), 2)))
    assert word_normal_form(z) is None


def test_confluence_smoke():
    # canonical form is invariant along random legal rewrite orbits
    from catsl11.rook import _rn_neighbors, _ZERO
    rng = random.Random(2024)
    gens4 = rn_generators(4)
    by_src = {}
    for g in gens4:
        by_src.setdefault(gen_src(g), []).append(g)
    rewrites = 0
    while rewrites < 10_000:
        # random composable word
        src = rng.choice(list(by_src))
        word = []
        cur = src
        for _ in range(rng.randint(2, 6)):
            opts = by_src.get(cur)
            if not opts:
                break
            g = rng.choice(opts)
            word.append(g)
            cur = gen_tgt(g)
        word = tuple(word)
        if len(word) < 2:
            continue
        nf = rn_canon(word)
        for _ in range(8):
            nbrs = [w for w in _rn_neighbors(word) if w is not _ZERO]
            if not nbrs:
                break
            word = rng.choice(nbrs)
            assert rn_canon(word) == nf
            rewrites += 1


def test_render_word_smoke():
    d = make_elementary(state(3, (2, 3)), 2, 1)
    txt = render_word(resolve_crossing(d, 1)[0].gens, 3)
    assert "x" in txt and "=>" in txt
