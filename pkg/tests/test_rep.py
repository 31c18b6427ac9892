import pytest

from catsl11.laurent import Laurent
from catsl11.rep import (BasisState, VnElt, act, act_E, act_F, act_T,
                         act_via_comul, all_states, beta, parse_state, state,
                         verify_rep)
from catsl11.ut import EF, F, I, UtElt


def tp(spec):
    return Laurent(("t",), spec)


def test_state_encoding():
    s = parse_state("|0110>")
    assert s == state(4, (2, 3))
    assert s.bits == (0, 1, 1, 0)
    assert s.to_text() == "|0110>"
    assert s.complement() == (1, 4)


def test_beta():
    assert beta(parse_state("|011>"), 1) == 4
    assert beta(parse_state("|00>"), 1) == 0
    assert beta(parse_state("|10>"), 2) == 1
    with pytest.raises(ValueError):
        beta(parse_state("|10>"), 1)


def test_act_F_examples():
    assert act_F(parse_state("|00>")) == VnElt(2, {
        parse_state("|01>"): tp({(0,): 1}), parse_state("|10>"): tp({(1,): 1})})
    assert act_F(parse_state("|10>")) == VnElt(2, {parse_state("|11>"): -1})
    assert act_F(parse_state("|11>")).is_zero()
    assert act_F(parse_state("|01>")) == VnElt(2, {parse_state("|11>"): tp({(1,): 1})})


def test_act_E_examples():
    one_minus_t = tp({(0,): 1, (1,): -1})
    assert act_E(parse_state("|11>")) == VnElt(2, {
        parse_state("|01>"): one_minus_t,
        parse_state("|10>"): -1 * one_minus_t})
    assert act_E(parse_state("|0>")).is_zero()
    assert act_E(parse_state("|1>")) == VnElt(1, {parse_state("|0>"): one_minus_t})


def test_act_T():
    s = parse_state("|0>")
    assert act_T(VnElt.basis(s)) == VnElt(1, {s: tp({(1,): 1})})
    s2 = parse_state("|11>")
    assert act_T(VnElt.basis(s2)) == VnElt(2, {s2: tp({(2,): 1})})
    assert act_T(VnElt(2)).is_zero()


def test_act_general():
    # EF acting on |00> composes to (1-t)(1+t) |00> = (1-t^2)|00>
    s = parse_state("|00>")
    assert act(EF, VnElt.basis(s)) == VnElt(2, {s: tp({(0,): 1, (2,): -1})})
    assert act(I, VnElt.basis(s)) == VnElt.basis(s)
    assert act(F, VnElt.basis(parse_state("|01>"))) == VnElt(
        2, {parse_state("|11>"): tp({(1,): 1})})
    # T-coefficients specialize to t^n
    Telt = UtElt({"I": Laurent.var("T")})
    assert act(Telt, VnElt.basis(s)) == VnElt(2, {s: tp({(2,): 1})})


def test_relation_on_each_state_n1():
    s = parse_state("|0>")
    efpfe = act(EF, VnElt.basis(s)) + act(F, act(UtElt.basis("E"), VnElt.basis(s)))
    assert efpfe == VnElt(1, {s: tp({(0,): 1, (1,): -1})})


def test_lemma_table_via_comul_n2():
    # closed-form n=2 table reproduced exactly from iterated Delta
    for s in all_states(2):
        assert act_via_comul("F", s) == act_F(s), s
        assert act_via_comul("E", s) == act_E(s), s


def test_verify_rep_small():
    for n in (1, 2, 3):
        rep = verify_rep(n)
        assert rep.ok, rep.to_text()
