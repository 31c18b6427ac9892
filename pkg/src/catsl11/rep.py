"""Tensor representations of U_t on 2^n-dimensional state spaces.

Basis states are bitstrings |a_1 ... a_n> with the equivalent encoding
as the strictly increasing sequence x = (x_1, ..., x_k) of 1-positions
(1-indexed).  The closed-form generator actions are

    F(x) = sum_j t^{n - xbar_j} (-1)^{beta(x, xbar_j)}  x u {xbar_j}
    E(x) = sum_i (-1)^{1-i} (1 - t)  x \\ {x_i}
    T(x) = t^n x

with beta(x, p) = #{l : x_l < p} + 2 #{l : x_l > p}.  An independent
implementation through iterated comultiplication is used as an oracle.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .laurent import Laurent
from .reports import SuiteReport
from .ut import BASIS, PARITY, UtElt, _COMUL

_t = ("t",)


def tpoly(spec):
    return Laurent(_t, spec)


class BasisState(NamedTuple):
    n: int
    positions: tuple

    @property
    def bits(self):
        return tuple(1 if i in self.positions else 0 for i in range(1, self.n + 1))

    @property
    def k(self):
        return len(self.positions)

    def complement(self):
        return tuple(i for i in range(1, self.n + 1) if i not in self.positions)

    def to_text(self):
        return "|" + "".join(str(b) for b in self.bits) + ">"


def state(n, positions):
    positions = tuple(sorted(positions))
    assert all(1 <= p <= n for p in positions)
    assert len(set(positions)) == len(positions)
    return BasisState(n, positions)


def parse_state(text):
    """Parse a state literal like ``|0110>`` (also accepts U+27E9)."""
    body = text.strip().lstrip("|").rstrip(">⟩")
    assert set(body) <= {"0", "1"}, text
    return state(len(body), tuple(i + 1 for i, b in enumerate(body) if b == "1"))


def all_states(n, k=None):
    from itertools import combinations
    ks = range(n + 1) if k is None else [k]
    for kk in ks:
        for pos in combinations(range(1, n + 1), kk):
            yield BasisState(n, pos)


def beta(x: BasisState, p: int) -> int:
    """beta(x, p) = #{x_l < p} + 2 #{x_l > p}; p must be a 0-position."""
    if p in x.positions:
        raise ValueError(f"position {p} is occupied in {x.to_text()}")
    assert 1 <= p <= x.n
    below = sum(1 for q in x.positions if q < p)
    above = sum(1 for q in x.positions if q > p)
    return below + 2 * above


class VnElt:
    """Element of the n-th tensor power: map state -> Laurent in t."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        self.coords = {}
        if coords:
            for s, p in coords.items():
                assert s.n == n
                if isinstance(p, int):
                    p = Laurent.const(p, _t)
                if p:
                    self.coords[s] = self.coords.get(s, Laurent.zero(_t)) + p
                    if not self.coords[s]:
                        del self.coords[s]

    @classmethod
    def basis(cls, s: BasisState, coeff=1):
        return cls(s.n, {s: Laurent.const(coeff, _t)})

    def __add__(self, other):
        assert self.n == other.n
        out = dict(self.coords)
        for s, p in other.coords.items():
            out[s] = out.get(s, Laurent.zero(_t)) + p
        return VnElt(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, int):
            c = Laurent.const(c, _t)
        return VnElt(self.n, {s: c * p for s, p in self.coords.items()})

    def __eq__(self, other):
        return (isinstance(other, VnElt) and self.n == other.n
                and self.coords == other.coords)

    def is_zero(self):
        return not self.coords

    def to_text(self):
        if not self.coords:
            return "0"
        keys = sorted(self.coords, key=lambda s: s.bits)
        return " + ".join(f"({self.coords[s].to_text()})*{s.to_text()}" for s in keys)

    def __repr__(self):
        return f"VnElt({self.to_text()})"


def act_F(x: BasisState) -> VnElt:
    out = VnElt(x.n)
    for j, p in enumerate(x.complement(), start=1):
        coeff = Laurent.monomial(_t, (x.n - p,), 1 if beta(x, p) % 2 == 0 else -1)
        out = out + VnElt(x.n, {state(x.n, x.positions + (p,)): coeff})
    return out


def act_E(x: BasisState) -> VnElt:
    one_minus_t = tpoly({(0,): 1, (1,): -1})
    out = VnElt(x.n)
    for i, p in enumerate(x.positions, start=1):
        sign = 1 if (1 - i) % 2 == 0 else -1
        rest = tuple(q for q in x.positions if q != p)
        out = out + VnElt(x.n, {state(x.n, rest): one_minus_t * sign})
    return out


def act_T(v: VnElt) -> VnElt:
    return v.scale(Laurent.monomial(_t, (v.n,)))


def _act_tag(tag, v: VnElt) -> VnElt:
    out = VnElt(v.n)
    if tag == "I":
        return v
    if tag == "T":
        return act_T(v)
    for s, c in v.coords.items():
        if tag == "E":
            w = act_E(s)
        elif tag == "F":
            w = act_F(s)
        else:  # EF acts as the composition E o F
            w = _act_tag("E", act_F(s))
        out = out + w.scale(c)
    return out


def act(a: UtElt, v: VnElt) -> VnElt:
    """Action of a general U_t element; T specializes to t^n."""
    tn = Laurent.monomial(_t, (v.n,))
    out = VnElt(v.n)
    for tag, p in a.coords.items():
        c = p.substitute({"T": tn})
        out = out + _act_tag(tag, v).scale(c)
    return out


# ---------- independent path: iterated comultiplication ----------

_V1 = {
    ("E", 0): VnElt(1), ("E", 1): VnElt(1, {state(1, ()): tpoly({(0,): 1, (1,): -1})}),
    ("F", 0): VnElt(1, {state(1, (1,)): 1}), ("F", 1): VnElt(1),
    ("I", 0): VnElt.basis(state(1, ())), ("I", 1): VnElt.basis(state(1, (1,))),
}


def _tensor_states(w1: VnElt, w2: VnElt, n) -> VnElt:
    out = VnElt(n)
    for s1, c1 in w1.coords.items():
        for s2, c2 in w2.coords.items():
            pos = s1.positions + tuple(p + 1 for p in s2.positions)
            out = out + VnElt(n, {state(n, pos): c1 * c2})
    return out


def act_via_comul(tag, x: BasisState) -> VnElt:
    """Generator action computed recursively from Delta and the V_1 table.

    Splits off the first tensor factor; Delta's (T1, T2) coefficients
    specialize to (t, t^{n-1}) and the graded rule
    (a1 (x) a2)(v (x) w) = (-1)^{p(a2) p(v)} a1 v (x) a2 w supplies signs.
    """
    n = x.n
    if n == 1:
        return _V1[(tag, 1 if x.positions else 0)]
    first = 1 if 1 in x.positions else 0
    rest = state(n - 1, tuple(p - 1 for p in x.positions if p > 1))
    t1 = Laurent.monomial(_t, (1,))
    t2 = Laurent.monomial(_t, (n - 1,))
    out = VnElt(n)
    for (a1, a2), p in _COMUL[tag].coords.items():
        c = p.substitute({"T1": t1, "T2": t2})
        if (PARITY[a2] * first) % 2:
            c = -1 * c
        w1 = _V1[(a1, first)]
        w2 = act_via_comul(a2, rest)
        out = out + _tensor_states(w1, w2, n).scale(c)
    return out


# ---------- operator-level verification ----------

def _op_matrix(n, op):
    """Matrix of an operator as {state: image VnElt}."""
    return {s: op(VnElt.basis(s)) for s in all_states(n)}


def _compose(m2, m1, n):
    out = {}
    for s, img in m1.items():
        acc = VnElt(n)
        for s2, c in img.coords.items():
            acc = acc + m2[s2].scale(c)
        out[s] = acc
    return out


@lru_cache(maxsize=None)
def _matrices(n):
    mE = _op_matrix(n, lambda v: _act_tag("E", v))
    mF = _op_matrix(n, lambda v: _act_tag("F", v))
    return mE, mF


def verify_rep(n) -> SuiteReport:
    """Operator identities on the full 2^n basis, plus the Delta oracle."""
    rep = SuiteReport("rep", {"n": n})
    mE, mF = _matrices(n)
    tn = Laurent.monomial(_t, (n,))
    one_minus_tn = Laurent.one(_t) - tn

    EE = _compose(mE, mE, n)
    FF = _compose(mF, mF, n)
    EFm = _compose(mE, mF, n)
    FEm = _compose(mF, mE, n)
    okE = all(EE[s].is_zero() for s in EE)
    okF = all(FF[s].is_zero() for s in FF)
    rep.add(f"E^2=0[n={n}]", okE)
    rep.add(f"F^2=0[n={n}]", okF)
    bad = [s for s in EFm
           if EFm[s] + FEm[s] != VnElt.basis(s).scale(one_minus_tn)]
    rep.add(f"EF+FE=(1-t^{n})id[n={n}]", not bad,
            witness=", ".join(s.to_text() for s in bad[:3]))
    okT = all(act_T(VnElt.basis(s)) == VnElt.basis(s).scale(tn)
              for s in all_states(n))
    rep.add(f"T=t^{n}*id[n={n}]", okT)

    # grading: F raises k by one, E lowers it
    okgrade = True
    for s in all_states(n):
        okgrade &= all(s2.k == s.k + 1 for s2 in act_F(s).coords)
        okgrade &= all(s2.k == s.k - 1 for s2 in act_E(s).coords)
    rep.add(f"E,F shift weight[n={n}]", okgrade)

    # independent oracle: iterated comultiplication
    for tag in ("E", "F", "I"):
        bad = [s for s in all_states(n)
               if act_via_comul(tag, s) != _act_tag(tag, VnElt.basis(s))]
        rep.add(f"comul-path[{tag},n={n}]", not bad,
                witness=", ".join(s.to_text() for s in bad[:3]))
    return rep


def lemma_v2_table():
    """The closed-form action table on the 4 states at n = 2."""
    out = {}
    for s in all_states(2):
        out[("E", s)] = act_E(s)
        out[("F", s)] = act_F(s)
    return out
