import itertools

from catsl11.laurent import Laurent
from catsl11.ut import (BASIS, PARITY, E, EF, F, I, T, UtElt, UtTensorElt,
                        check_hopf_axioms, ut_antipode, ut_comul, ut_counit,
                        ut_mul, ut_tensor_mul)

TT = ("T1", "T2")


def TP(spec):
    return Laurent(("T",), spec)


# Independent oracle: a faithful 4x4 matrix model over Z[T^{+-1}], the
# n=2 closed-form action table with the central parameter kept generic
# (T acts by T^2).  Rows/columns indexed by |00>, |01>, |10>, |11>.
def _mat_from_cols(cols):
    return cols  # list of 4 dicts: row -> Laurent


ZERO = Laurent.zero(("T",))
ONE = Laurent.one(("T",))
Tm = Laurent.var("T")
MAT_F = [{1: ONE, 2: Tm}, {3: Tm}, {3: -1 * ONE}, {}]
MAT_E = [{}, {0: ONE - Tm}, {0: ONE - Tm}, {1: ONE - Tm, 2: -1 * (ONE - Tm)}]
MAT_I = [{0: ONE}, {1: ONE}, {2: ONE}, {3: ONE}]


def mat_mul(a, b):
    out = []
    for col in range(4):
        acc = {}
        for mid, c in b[col].items():
            for row, d in a[mid].items():
                acc[row] = acc.get(row, ZERO) + c * d
        out.append({r: v for r, v in acc.items() if v})
    return out


def mat_of(elt: UtElt):
    tags = {"F": MAT_F, "I": MAT_I, "E": MAT_E, "EF": mat_mul(MAT_E, MAT_F)}
    out = [{}, {}, {}, {}]
    for tag, p in elt.coords.items():
        c = p.substitute({"T": Laurent.var("T", 2)})
        m = tags[tag]
        for col in range(4):
            for row, v in m[col].items():
                out[col][row] = out[col].get(row, ZERO) + c * v
    return [{r: v for r, v in col.items() if v} for col in out]


def test_mul_examples():
    assert ut_mul(E, F) == EF
    assert ut_mul(F, E) == UtElt({"I": TP({(0,): 1, (1,): -1}), "EF": -1})
    assert ut_mul(E, E).is_zero()
    # [DERIVED] frozen via the matrix model: EF*EF = (1-T)*EF
    assert ut_mul(EF, EF) == UtElt({"EF": TP({(0,): 1, (1,): -1})})


def test_mul_against_matrix_model():
    elts = [UtElt.basis(b) for b in BASIS] + [T, ut_mul(T, EF)]
    for a, b in itertools.product(elts, repeat=2):
        assert mat_of(ut_mul(a, b)) == mat_mul(mat_of(a), mat_of(b))


def test_mul_associative_on_basis_triples():
    for a, b, c in itertools.product(BASIS, repeat=3):
        x, y, z = UtElt.basis(a), UtElt.basis(b), UtElt.basis(c)
        assert ut_mul(ut_mul(x, y), z) == ut_mul(x, ut_mul(y, z))


def test_comul_examples():
    assert ut_comul(E) == UtTensorElt.basis("E", "I") + UtTensorElt.basis("I", "E")
    # Delta(EF) = EF(x)T + E(x)F - T2*(F(x)E) + I(x)EF
    expect = UtTensorElt({
        ("EF", "I"): Laurent(TT, {(0, 1): 1}),
        ("E", "F"): Laurent(TT, {(0, 0): 1}),
        ("F", "E"): Laurent(TT, {(0, 1): -1}),
        ("I", "EF"): Laurent(TT, {(0, 0): 1}),
    })
    assert ut_comul(EF) == expect
    assert ut_comul(I) == UtTensorElt.basis("I", "I")


def test_tensor_mul_signs():
    EI = UtTensorElt.basis("E", "I")
    IE = UtTensorElt.basis("I", "E")
    assert ut_tensor_mul(EI, IE) == UtTensorElt.basis("E", "E")
    assert ut_tensor_mul(IE, EI) == UtTensorElt({("E", "E"): -1})
    FT = UtTensorElt({("F", "I"): Laurent(TT, {(0, 1): 1})})
    FI = UtTensorElt.basis("F", "I")
    assert ut_tensor_mul(FT, FI).is_zero()


def test_counit():
    assert ut_counit(EF).is_zero()
    T2I = UtElt({"I": Laurent.var("T", 2)})
    assert ut_counit(T2I) == Laurent.one(("T",))
    assert ut_counit(I - T).is_zero()


def test_antipode():
    assert ut_antipode(E) == UtElt({"E": -1})
    assert ut_antipode(I) == I
    # S(EF) = -T^{-1} (I - T - EF)
    expect = UtElt({"I": TP({(-1,): -1, (0,): 1}), "EF": TP({(-1,): 1})})
    assert ut_antipode(EF) == expect


def test_hopf_axioms_all_pass():
    rep = check_hopf_axioms()
    assert rep.ok, rep.to_text()
    # 64 multiplicativity + 8 coassoc + 8 counit + 8 antipode + 16 parity
    assert rep.summary()["total"] == 104


def test_parity_additivity():
    for a, b in itertools.product(BASIS, repeat=2):
        prod = ut_mul(UtElt.basis(a), UtElt.basis(b))
        for tag in prod.coords:
            assert PARITY[tag] == PARITY[a] + PARITY[b]


def test_text_and_json():
    x = ut_mul(F, E)
    assert x.to_text() == "(1 - T)*I + (-1)*EF"
    assert UtElt.from_json(x.to_json()) == x
