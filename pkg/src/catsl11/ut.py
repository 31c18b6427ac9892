"""The Hopf superalgebra U_t: a rank-4 free module over Z[T^{+-1}].

Basis tags are "F", "I", "EF", "E" with integer parities 1, 0, 0, -1
(a Z-valued "categorical" parity, not mod 2).  The defining relations
E^2 = F^2 = 0, EF + FE = I - T, with T central, are baked into a
4 x 4 multiplication table; comultiplication, counit and antipode are
the standard structure maps, with the antipode extended to EF by the
signed anti-homomorphism rule S(ab) = (-1)^{p(a)p(b)} S(b) S(a).
"""

from __future__ import annotations

from .laurent import Laurent
from .reports import SuiteReport

BASIS = ("F", "I", "EF", "E")
PARITY = {"F": 1, "I": 0, "EF": 0, "E": -1}

_T = ("T",)
_TT = ("T1", "T2")
_TTT = ("T1", "T2", "T3")


def _sign(k):
    return -1 if k % 2 else 1


def _poly(spec, variables=_T):
    return Laurent(variables, spec)


class UtElt:
    """Element of U_t: map from basis tag to a Laurent polynomial in T."""

    __slots__ = ("coords",)

    def __init__(self, coords=None):
        self.coords = {}
        if coords:
            for b, p in coords.items():
                if isinstance(p, int):
                    p = Laurent.const(p, _T)
                if p:
                    assert b in BASIS
                    self.coords[b] = self.coords.get(b, Laurent.zero(_T)) + p
                    if not self.coords[b]:
                        del self.coords[b]

    @classmethod
    def basis(cls, tag, coeff=1):
        return cls({tag: Laurent.const(coeff, _T)})

    @classmethod
    def zero(cls):
        return cls()

    def __add__(self, other):
        out = dict(self.coords)
        for b, p in other.coords.items():
            out[b] = out.get(b, Laurent.zero(_T)) + p
        return UtElt(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        """Multiply by an integer or a Laurent polynomial in T."""
        if isinstance(c, int):
            c = Laurent.const(c, _T)
        return UtElt({b: c * p for b, p in self.coords.items()})

    def __eq__(self, other):
        return isinstance(other, UtElt) and self.coords == other.coords

    def __hash__(self):
        return hash(frozenset(self.coords.items()))

    def is_zero(self):
        return not self.coords

    def to_text(self):
        if not self.coords:
            return "0"
        terms = []
        for b in BASIS:
            if b in self.coords:
                terms.append(f"({self.coords[b].to_text()})*{b}")
        return " + ".join(terms)

    def to_json(self):
        return {b: p.to_json() for b, p in self.coords.items()}

    @classmethod
    def from_json(cls, data):
        return cls({b: Laurent.from_json(p, _T) for b, p in data.items()})

    def __repr__(self):
        return f"UtElt({self.to_text()})"


E = UtElt.basis("E")
F = UtElt.basis("F")
I = UtElt.basis("I")
EF = UtElt.basis("EF")
T = UtElt({"I": Laurent.var("T")})
Tinv = UtElt({"I": Laurent.var("T", -1)})

# basis products; T-coefficients from EF+FE = I - T and E^2 = F^2 = 0
_ONE = Laurent.one(_T)
_1mT = _poly({(0,): 1, (1,): -1})
_MUL = {
    ("F", "F"): {},
    ("F", "EF"): {"F": _1mT},
    ("F", "E"): {"I": _1mT, "EF": Laurent.const(-1, _T)},
    ("EF", "F"): {},
    ("EF", "EF"): {"EF": _1mT},
    ("EF", "E"): {"E": _1mT},
    ("E", "F"): {"EF": _ONE},
    ("E", "EF"): {},
    ("E", "E"): {},
}


def ut_mul(a: UtElt, b: UtElt) -> UtElt:
    """Product in U_t (bilinear extension of the basis table)."""
    out = UtElt.zero()
    for b1, p1 in a.coords.items():
        for b2, p2 in b.coords.items():
            if b1 == "I":
                table = {b2: _ONE}
            elif b2 == "I":
                table = {b1: _ONE}
            else:
                table = _MUL[(b1, b2)]
            c = p1 * p2
            for tag, q in table.items():
                out = out + UtElt({tag: c * q})
    return out


class UtTensorElt:
    """Element of U_t (x) U_t over Z[T1^{+-1}, T2^{+-1}]."""

    __slots__ = ("coords",)

    def __init__(self, coords=None):
        self.coords = {}
        if coords:
            for key, p in coords.items():
                if isinstance(p, int):
                    p = Laurent.const(p, _TT)
                if p:
                    self.coords[key] = self.coords.get(key, Laurent.zero(_TT)) + p
                    if not self.coords[key]:
                        del self.coords[key]

    @classmethod
    def basis(cls, b1, b2, coeff=1):
        return cls({(b1, b2): Laurent.const(coeff, _TT)})

    def __add__(self, other):
        out = dict(self.coords)
        for k, p in other.coords.items():
            out[k] = out.get(k, Laurent.zero(_TT)) + p
        return UtTensorElt(out)

    def __sub__(self, other):
        return self + UtTensorElt({k: -p for k, p in other.coords.items()})

    def __eq__(self, other):
        return isinstance(other, UtTensorElt) and self.coords == other.coords

    def is_zero(self):
        return not self.coords

    def to_text(self):
        if not self.coords:
            return "0"
        terms = []
        for b1 in BASIS:
            for b2 in BASIS:
                if (b1, b2) in self.coords:
                    terms.append(f"({self.coords[(b1, b2)].to_text()})*{b1}(x){b2}")
        return " + ".join(terms)

    def __repr__(self):
        return f"UtTensorElt({self.to_text()})"


def ut_tensor_mul(u: UtTensorElt, v: UtTensorElt) -> UtTensorElt:
    """Graded product (a(x)b)(c(x)d) = (-1)^{p(b)p(c)} ac (x) bd."""
    out = UtTensorElt()
    for (a, b), p in u.coords.items():
        for (c, d), q in v.coords.items():
            sign = _sign(PARITY[b] * PARITY[c])
            left = ut_mul(UtElt.basis(a), UtElt.basis(c))
            right = ut_mul(UtElt.basis(b), UtElt.basis(d))
            coeff = p * q * sign
            for t1, c1 in left.coords.items():
                for t2, c2 in right.coords.items():
                    # the inner U_t coefficients live in slot 1 / slot 2
                    w = coeff * c1.substitute({"T": Laurent.monomial(_TT, (1, 0))}) \
                        * c2.substitute({"T": Laurent.monomial(_TT, (0, 1))})
                    out = out + UtTensorElt({(t1, t2): w})
    return out


_COMUL = {
    "I": UtTensorElt.basis("I", "I"),
    "E": UtTensorElt.basis("E", "I") + UtTensorElt.basis("I", "E"),
    "F": UtTensorElt({("F", "I"): Laurent.monomial(_TT, (0, 1)),
                      ("I", "F"): Laurent.one(_TT)}),
}
# Delta(EF) = Delta(E) Delta(F) in the graded tensor algebra
_COMUL["EF"] = ut_tensor_mul(_COMUL["E"], _COMUL["F"])


def ut_comul(a: UtElt) -> UtTensorElt:
    """Comultiplication; Z[T^{+-1}]-linear with T -> T1*T2."""
    out = UtTensorElt()
    for b, p in a.coords.items():
        c = p.substitute({"T": Laurent.monomial(_TT, (1, 1))})
        for k, q in _COMUL[b].coords.items():
            out = out + UtTensorElt({k: c * q})
    return out


def ut_counit(a: UtElt) -> Laurent:
    """Counit: algebra map with eps(E)=eps(F)=0, eps(I)=eps(T)=1."""
    val = Laurent.zero(_T)
    for b, p in a.coords.items():
        if b == "I":
            val = val + p.substitute({"T": Laurent.one(_T)})
    return val


_ANTIPODE = {
    "I": I,
    "E": UtElt({"E": Laurent.const(-1, _T)}),
    "F": UtElt({"F": Laurent.var("T", -1).__mul__(-1)}),
}
# S(EF) = (-1)^{p(E)p(F)} S(F) S(E)
_ANTIPODE["EF"] = ut_mul(_ANTIPODE["F"], _ANTIPODE["E"]).scale(
    _sign(PARITY["E"] * PARITY["F"]))


def ut_antipode(a: UtElt) -> UtElt:
    """Antipode; linear over T -> T^{-1}."""
    out = UtElt.zero()
    for b, p in a.coords.items():
        c = p.substitute({"T": Laurent.var("T", -1)})
        out = out + _ANTIPODE[b].scale(c)
    return out


# ---------- triple tensors, for coassociativity ----------

def _embed3(p, slots):
    """Embed a 2-variable coefficient into (T1,T2,T3) at the given slots."""
    e1 = tuple(1 if i == slots[0] else 0 for i in range(3))
    e2 = tuple(1 if i == slots[1] else 0 for i in range(3))
    return p.substitute({"T1": Laurent.monomial(_TTT, e1),
                         "T2": Laurent.monomial(_TTT, e2)})


def comul_left(u: UtTensorElt):
    """(Delta (x) id): first slot's T becomes T1*T2, old T2 becomes T3."""
    out = {}
    for (b1, b2), p in u.coords.items():
        c = p.substitute({"T1": Laurent.monomial(_TTT, (1, 1, 0)),
                          "T2": Laurent.monomial(_TTT, (0, 0, 1))})
        for (a1, a2), q in _COMUL[b1].coords.items():
            key = (a1, a2, b2)
            add = c * _embed3(q, (0, 1))
            out[key] = out.get(key, Laurent.zero(_TTT)) + add
    return {k: v for k, v in out.items() if v}


def comul_right(u: UtTensorElt):
    """(id (x) Delta): old T2 becomes T2*T3."""
    out = {}
    for (b1, b2), p in u.coords.items():
        c = p.substitute({"T1": Laurent.monomial(_TTT, (1, 0, 0)),
                          "T2": Laurent.monomial(_TTT, (0, 1, 1))})
        for (a1, a2), q in _COMUL[b2].coords.items():
            key = (b1, a1, a2)
            add = c * _embed3(q, (1, 2))
            out[key] = out.get(key, Laurent.zero(_TTT)) + add
    return {k: v for k, v in out.items() if v}


def counit_left(u: UtTensorElt) -> UtElt:
    """(eps (x) id), with the surviving variable renamed to T."""
    out = UtElt.zero()
    for (b1, b2), p in u.coords.items():
        if b1 != "I":
            continue
        c = p.substitute({"T1": Laurent.one(_T), "T2": Laurent.var("T")})
        out = out + UtElt({b2: c})
    return out


def counit_right(u: UtTensorElt) -> UtElt:
    out = UtElt.zero()
    for (b1, b2), p in u.coords.items():
        if b2 != "I":
            continue
        c = p.substitute({"T1": Laurent.var("T"), "T2": Laurent.one(_T)})
        out = out + UtElt({b1: c})
    return out


def _collapse(u: UtTensorElt, antipode_slot=None) -> UtElt:
    """m( (S (x) id) u ) or m( (id (x) S) u ) or plain m(u)."""
    out = UtElt.zero()
    for (b1, b2), p in u.coords.items():
        x, y = UtElt.basis(b1), UtElt.basis(b2)
        if antipode_slot == 0:
            p = p.substitute({"T1": Laurent.monomial(_TT, (-1, 0)),
                              "T2": Laurent.monomial(_TT, (0, 1))})
            x = ut_antipode(x)
        elif antipode_slot == 1:
            p = p.substitute({"T1": Laurent.monomial(_TT, (1, 0)),
                              "T2": Laurent.monomial(_TT, (0, -1))})
            y = ut_antipode(y)
        c = p.substitute({"T1": Laurent.var("T"), "T2": Laurent.var("T")})
        out = out + ut_mul(x, y).scale(c)
    return out


def check_hopf_axioms() -> SuiteReport:
    """Exhaustive verification of the Hopf-superalgebra axioms.

    Checks, on the basis and on T-multiples of it: multiplicativity of
    the comultiplication, coassociativity, the counit axiom and the
    antipode axiom.  Returns a report with one case per instance.
    """
    rep = SuiteReport("hopf")
    scaled = [(b, UtElt.basis(b)) for b in BASIS]
    scaled += [(f"T*{b}", ut_mul(T, UtElt.basis(b))) for b in BASIS]

    for na, a in scaled:
        for nb, b in scaled:
            lhs = ut_comul(ut_mul(a, b))
            rhs = ut_tensor_mul(ut_comul(a), ut_comul(b))
            rep.add(f"comul-multiplicative[{na},{nb}]", lhs == rhs,
                    expected=rhs.to_text(), computed=lhs.to_text())

    for nb, b in scaled:
        d = ut_comul(b)
        rep.add(f"coassociative[{nb}]", comul_left(d) == comul_right(d))

    for nb, b in scaled:
        ok = counit_left(ut_comul(b)) == b == counit_right(ut_comul(b))
        rep.add(f"counit[{nb}]", ok)

    for nb, b in scaled:
        target = I.scale(ut_counit(b))
        lhs = _collapse(ut_comul(b), antipode_slot=0)
        rhs = _collapse(ut_comul(b), antipode_slot=1)
        rep.add(f"antipode[{nb}]", lhs == target == rhs,
                expected=target.to_text(),
                computed=f"{lhs.to_text()} / {rhs.to_text()}")

    # parity additivity of the product on the basis
    for b1 in BASIS:
        for b2 in BASIS:
            prod = ut_mul(UtElt.basis(b1), UtElt.basis(b2))
            ok = all(PARITY[b] == PARITY[b1] + PARITY[b2] for b in prod.coords)
            rep.add(f"parity-additive[{b1},{b2}]", ok)
    return rep
