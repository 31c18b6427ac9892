"""The concrete DG algebras and their formality maps.

Instances: the arrow algebra A on the four weight idempotents, its
square A(x)A with the parity-twisted h-grading, the trigraded quiver
algebra B, the diagram algebras R_n and their cohomology presentations
H(R_n), the deformed product algebra (written AxR_n here) with the
extra connecting generators and higher-homotopy differential, and the
plain tensor models A(x)R_n, A(x)H(R_n).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from . import rook
from .dga import EMPTY, AlgebraMap, GenSpec, PresentedDGA, TensorDGA, comb

UT_BASIS = ("F", "I", "EF", "E")
A_PARITY = {"F": 1, "I": 0, "EF": 0, "E": -1}

A_IE = ("a", "IE")  # I -> EF
A_EI = ("a", "EI")  # EF -> I

_ZERO = rook._ZERO
_search = rook._search_canon


def _states(n):
    for k in range(n + 1):
        yield from combinations(range(1, n + 1), k)


def state_str(x):
    return "".join(str(p) for p in x) if x else "e"


# ---------- A ----------

def _a_text(g):
    return "rho(I,EF)" if g == A_IE else "rho(EF,I)"


def _canon_a(word):
    for i in range(len(word) - 1):
        if word[i] == A_IE and word[i + 1] == A_EI:
            return None
    return tuple(word)


@lru_cache(maxsize=None)
def build_A():
    gens = {
        A_IE: GenSpec("I", "EF", (0, 0), ()),
        A_EI: GenSpec("EF", "I", (1, 1), ()),
    }
    return PresentedDGA("A", UT_BASIS, gens, _canon_a, text=_a_text)


def parity_of(alg, b):
    """Parity of an A-basis element (constant on each block)."""
    return A_PARITY[alg.src(b)]


# ---------- A (x) A ----------

@lru_cache(maxsize=None)
def build_AoA():
    A = build_A()

    def grade2(b1, b2):
        h1, t1 = A.grade(b1)
        h2, t2 = A.grade(b2)
        return (h1 + h2 + 2 * t1 * parity_of(A, b2), t1 + t2)

    return TensorDGA("AoA", A, A, grade2)


# ---------- B ----------

def _b_arrow(v, w):
    return ("b", v, w)


def _b_text(g):
    _, v, w = g
    return f"rho({v[0]}x{v[1]},{w[0]}x{w[1]})"


def _b_arrows():
    arrows = []
    for g in UT_BASIS:
        arrows.append(_b_arrow((g, "I"), (g, "EF")))
        arrows.append(_b_arrow((g, "EF"), (g, "I")))
        arrows.append(_b_arrow(("I", g), ("EF", g)))
        arrows.append(_b_arrow(("EF", g), ("I", g)))
    arrows += [
        _b_arrow(("E", "F"), ("I", "EF")),
        _b_arrow(("E", "I"), ("I", "E")),
        _b_arrow(("EF", "I"), ("F", "E")),
        _b_arrow(("I", "F"), ("F", "I")),
    ]
    return arrows


def _b_grade(g):
    _, v, w = g
    if g in (_b_arrow(("E", "I"), ("I", "E")), _b_arrow(("E", "F"), ("I", "EF"))):
        return (1, 0, 0)
    if v[0] == "EF" and w[0] == "I" and v[1] == w[1]:
        return (1, 1, 0)
    if g == _b_arrow(("I", "F"), ("F", "I")) or (v[1] == "EF" and w[1] == "I" and v[0] == w[0]):
        return (1, 0, 1)
    return (0, 0, 0)


def _b_relations():
    a = _b_arrow
    zero = [
        # from the single relation of A, slotwise (I -> EF -> I)
        (a(("E", "I"), ("E", "EF")), a(("E", "EF"), ("E", "I"))),
        (a(("I", "E"), ("EF", "E")), a(("EF", "E"), ("I", "E"))),
        (a(("I", "I"), ("I", "EF")), a(("I", "EF"), ("I", "I"))),
        (a(("I", "I"), ("EF", "I")), a(("EF", "I"), ("I", "I"))),
        (a(("I", "EF"), ("EF", "EF")), a(("EF", "EF"), ("I", "EF"))),
        (a(("EF", "I"), ("EF", "EF")), a(("EF", "EF"), ("EF", "I"))),
        (a(("I", "F"), ("EF", "F")), a(("EF", "F"), ("I", "F"))),
        (a(("F", "I"), ("F", "EF")), a(("F", "EF"), ("F", "I"))),
        # connecting-arrow relations
        (a(("E", "EF"), ("E", "I")), a(("E", "I"), ("I", "E"))),
        (a(("E", "I"), ("I", "E")), a(("I", "E"), ("EF", "E"))),
        (a(("E", "F"), ("I", "EF")), a(("I", "EF"), ("EF", "EF"))),
        (a(("EF", "EF"), ("EF", "I")), a(("EF", "I"), ("F", "E"))),
        (a(("EF", "F"), ("I", "F")), a(("I", "F"), ("F", "I"))),
        (a(("I", "F"), ("F", "I")), a(("F", "I"), ("F", "EF"))),
    ]
    squares = [
        ((a(("I", "I"), ("I", "EF")), a(("I", "EF"), ("EF", "EF"))),
         (a(("I", "I"), ("EF", "I")), a(("EF", "I"), ("EF", "EF")))),
        ((a(("I", "EF"), ("I", "I")), a(("I", "I"), ("EF", "I"))),
         (a(("I", "EF"), ("EF", "EF")), a(("EF", "EF"), ("EF", "I")))),
        ((a(("EF", "I"), ("I", "I")), a(("I", "I"), ("I", "EF"))),
         (a(("EF", "I"), ("EF", "EF")), a(("EF", "EF"), ("I", "EF")))),
        ((a(("EF", "EF"), ("I", "EF")), a(("I", "EF"), ("I", "I"))),
         (a(("EF", "EF"), ("EF", "I")), a(("EF", "I"), ("I", "I")))),
    ]
    return zero, squares


_B_ZERO, _B_SQUARES = None, None
_B_MEMO = {}


def _canon_b(word):
    global _B_ZERO, _B_SQUARES
    if _B_ZERO is None:
        zero, squares = _b_relations()
        _B_ZERO = set(zero)
        _B_SQUARES = {}
        for lhs, rhs in squares:
            _B_SQUARES[lhs] = rhs
            _B_SQUARES[rhs] = lhs
    word = tuple(word)
    if len(word) <= 1:
        return word

    def neighbors(w):
        for i in range(len(w) - 1):
            pair = (w[i], w[i + 1])
            if pair in _B_ZERO:
                yield _ZERO
                return
            if pair in _B_SQUARES:
                yield w[:i] + _B_SQUARES[pair] + w[i + 2:]

    return _search(word, neighbors, _B_MEMO)


@lru_cache(maxsize=None)
def build_B():
    vertices = [(g1, g2) for g1 in UT_BASIS for g2 in UT_BASIS]
    gens = {g: GenSpec(g[1], g[2], _b_grade(g), ()) for g in _b_arrows()}
    return PresentedDGA("B", vertices, gens, _canon_b, grade_len=3, text=_b_text)


# ---------- R_n and H(R_n) ----------

def _r_text(g):
    if g[0] == "lp":
        return f"rho({state_str(g[1])};{g[2]})"
    return f"r({state_str(g[1])};{g[3]}>{g[2]})"


@lru_cache(maxsize=None)
def build_Rn(n):
    gens = {g: GenSpec(rook.gen_src(g), rook.gen_tgt(g), rook.gen_grade(g),
                       rook.gen_diff(g))
            for g in rook.rn_generators(n)}
    return PresentedDGA(f"R{n}", list(_states(n)), gens, rook.rn_canon,
                        text=_r_text)


@lru_cache(maxsize=None)
def build_HRn(n):
    gens = {g: GenSpec(rook.gen_src(g), rook.gen_tgt(g), rook.gen_grade(g), ())
            for g in rook.hrn_generators(n)}
    return PresentedDGA(f"HR{n}", list(_states(n)), gens, rook.h_canon,
                        text=_r_text)


def block_k(alg, b):
    """Strand count of the block an R- or HR-basis element lives in."""
    s = alg.src(b)
    return len(s)


# ---------- A (x) R_n and A (x) H(R_n) ----------

def _twisted(n, A, R, name):
    def grade2(b1, b2):
        h1, t1 = A.grade(b1)
        h2, t2 = R.grade(b2)
        k = len(R.src(b2))
        return (h1 + h2 + 2 * k * t1, n * t1 + t2)

    return TensorDGA(name, A, R, grade2)


@lru_cache(maxsize=None)
def build_AtRn(n):
    return _twisted(n, build_A(), build_Rn(n), f"AtR{n}")


@lru_cache(maxsize=None)
def build_AtHRn(n):
    return _twisted(n, build_A(), build_HRn(n), f"AtHR{n}")


# ---------- the deformed algebra AxR_n ----------

def box_exists_bI(n, x, i):
    k = len(x)
    return 1 <= i <= k < n and x[i - 1] == n - k + i


def box_exists_bE(n, x, j):
    k = len(x)
    return 1 <= j <= k < n and x[j - 1] == j


def _box_src(g):
    kind = g[0]
    if kind == "Ae":
        return ("I" if g[1] == "IE" else "EF", g[2])
    if kind == "eR":
        return (g[1], rook.gen_src(g[2]))
    if kind == "bI":
        return ("I", g[1])
    return ("EF", g[1])


def _box_tgt(g):
    kind = g[0]
    if kind == "Ae":
        return ("EF" if g[1] == "IE" else "I", g[2])
    if kind == "eR":
        return (g[1], rook.gen_tgt(g[2]))
    if kind == "bI":
        return ("EF", g[1])
    return ("I", g[1])


def _box_grade(n, g):
    kind = g[0]
    if kind == "Ae":
        k = len(g[2])
        return (0, 0) if g[1] == "IE" else (2 * k + 1, n)
    if kind == "eR":
        return rook.gen_grade(g[2])
    k = len(g[1])
    if kind == "bI":
        i = g[2]
        return (-2 * (k - i + 1), -(k - i + 1))
    j = g[2]
    return (2 * k + 1 - 2 * j, n - j)


def _box_diff(n, g):
    kind = g[0]
    if kind == "Ae":
        return ()
    if kind == "eR":
        gamma = g[1]
        return tuple(tuple(("eR", gamma, h) for h in w)
                     for w in rook.gen_diff(g[2]))
    x = g[1]
    k = len(x)
    if kind == "bI":
        i = g[2]
        lp = ("eR", "EF", rook.loop_key(x, x[i - 1]))
        lp_i = ("eR", "I", rook.loop_key(x, x[i - 1]))
        nxt = ("Ae", "IE", x) if i == k else ("bI", x, i + 1)
        return ((nxt, lp), (lp_i, nxt))
    j = g[2]
    lp = ("eR", "I", rook.loop_key(x, x[j - 1]))
    lp_ef = ("eR", "EF", rook.loop_key(x, x[j - 1]))
    nxt = ("Ae", "EI", x) if j == 1 else ("bE", x, j - 1)
    return ((nxt, lp), (lp_ef, nxt))


def _box_exception(n, a, g):
    # the two non-commuting (A-generator, loop) pairs
    return g[0] == "lp" and ((a == "IE" and g[2] == n) or (a == "EI" and g[2] == 1))


def _box_neighbors(n):
    def neighbors(word):
        for i in range(len(word) - 1):
            g1, g2 = word[i], word[i + 1]
            k1, k2 = g1[0], g2[0]
            if k1 == "eR" and k2 == "eR":
                a, b = rook.piece(g1[2]), rook.piece(g2[2])
                if a == b and a[0] == "L":
                    yield _ZERO
                    return
                if rook.independent(a, b):
                    pair = rook.realize(rook.gen_src(g1[2]), (b, a))
                    if pair is not None:
                        yield word[:i] + (("eR", g1[1], pair[0]),
                                          ("eR", g1[1], pair[1])) + word[i + 2:]
            elif k1 == "Ae" and k2 == "Ae":
                if g1[1] == "IE" and g2[1] == "EI":
                    yield _ZERO
                    return
            elif k1 == "Ae" and k2 == "eR":
                a, g = g1[1], g2[2]
                if not _box_exception(n, a, g):
                    gamma1 = "I" if a == "IE" else "EF"
                    yield word[:i] + (("eR", gamma1, g),
                                      ("Ae", a, rook.gen_tgt(g))) + word[i + 2:]
            elif k1 == "eR" and k2 == "Ae":
                a, g = g2[1], g1[2]
                if not _box_exception(n, a, g):
                    gamma2 = "EF" if a == "IE" else "I"
                    yield word[:i] + (("Ae", a, rook.gen_src(g)),
                                      ("eR", gamma2, g)) + word[i + 2:]
            elif k1 == "bI" and (k2 == "bE" or (k2 == "Ae" and g2[1] == "EI")):
                yield _ZERO
                return
            elif k1 == "bI" and k2 == "eR":
                x, bi, g = g1[1], g1[2], g2[2]
                if g[0] == "lp":
                    if bi != x.index(g[2]) + 2:
                        yield word[:i] + (("eR", "I", g), ("bI", x, bi)) + word[i + 2:]
                elif x.index(g[3]) + 1 < bi:
                    yield word[:i] + (("eR", "I", g),
                                      ("bI", rook.gen_tgt(g), bi)) + word[i + 2:]
            elif k1 == "eR" and k2 == "bI":
                g, bi = g1[2], g2[2]
                x = rook.gen_src(g)
                if g[0] == "lp":
                    if bi != x.index(g[2]) + 2:
                        yield word[:i] + (("bI", x, bi), ("eR", "EF", g)) + word[i + 2:]
                elif x.index(g[3]) + 1 < bi:
                    yield word[:i] + (("bI", x, bi), ("eR", "EF", g)) + word[i + 2:]
            elif k1 == "bE" and k2 == "eR":
                x, bj, g = g1[1], g1[2], g2[2]
                if g[0] == "lp":
                    if bj != x.index(g[2]):
                        yield word[:i] + (("eR", "EF", g), ("bE", x, bj)) + word[i + 2:]
                else:
                    y = rook.gen_tgt(g)
                    if bj < y.index(g[2]) + 1:
                        yield word[:i] + (("eR", "EF", g), ("bE", y, bj)) + word[i + 2:]
            elif k1 == "eR" and k2 == "bE":
                g, bj = g1[2], g2[2]
                x = rook.gen_src(g)
                if g[0] == "lp":
                    if bj != x.index(g[2]):
                        yield word[:i] + (("bE", x, bj), ("eR", "I", g)) + word[i + 2:]
                else:
                    y = rook.gen_tgt(g)
                    if bj < y.index(g[2]) + 1:
                        yield word[:i] + (("bE", x, bj), ("eR", "I", g)) + word[i + 2:]

    return neighbors


def _box_text(g):
    kind = g[0]
    if kind == "Ae":
        a = "rho(I,EF)" if g[1] == "IE" else "rho(EF,I)"
        return f"{a}[]e({state_str(g[2])})"
    if kind == "eR":
        return f"e({g[1]})[]{_r_text(g[2])}"
    if kind == "bI":
        return f"rho(I{state_str(g[1])}>{g[2]}>EF{state_str(g[1])})"
    return f"rho(EF{state_str(g[1])}>{g[2]}>I{state_str(g[1])})"


@lru_cache(maxsize=None)
def build_AboxRn(n):
    gens = {}
    for x in _states(n):
        for a in ("IE", "EI"):
            g = ("Ae", a, x)
            gens[g] = GenSpec(_box_src(g), _box_tgt(g), _box_grade(n, g), ())
    for gamma in UT_BASIS:
        for rg in rook.rn_generators(n):
            g = ("eR", gamma, rg)
            gens[g] = GenSpec(_box_src(g), _box_tgt(g), _box_grade(n, g),
                              _box_diff(n, g))
    for x in _states(n):
        for i in range(1, len(x) + 1):
            if box_exists_bI(n, x, i):
                g = ("bI", x, i)
                gens[g] = GenSpec(_box_src(g), _box_tgt(g), _box_grade(n, g),
                                  _box_diff(n, g))
            if box_exists_bE(n, x, i):
                g = ("bE", x, i)
                gens[g] = GenSpec(_box_src(g), _box_tgt(g), _box_grade(n, g),
                                  _box_diff(n, g))
    idems = [(gamma, x) for gamma in UT_BASIS for x in _states(n)]
    memo = {}
    nbrs = _box_neighbors(n)

    def canon(word):
        word = tuple(word)
        if len(word) <= 1:
            return word
        return _search(word, nbrs, memo)

    return PresentedDGA(f"AxR{n}", idems, gens, canon, text=_box_text)


# ---------- formality maps ----------

def gn_map(n) -> AlgebraMap:
    """The projection R_n -> H(R_n) killing decorated movers."""
    Rn, Hn = build_Rn(n), build_HRn(n)
    images = {}
    for g in Rn.gen_keys():
        images[g] = comb((g,)) if rook._is_h_gen(g) else EMPTY
    return AlgebraMap(f"g_{n}", Rn, Hn, {x: x for x in Rn.idempotents}, images)


def box_proj_map(n) -> AlgebraMap:
    """The projection AxR_n -> A(x)R_n killing the connecting generators."""
    Box, At = build_AboxRn(n), build_AtRn(n)
    images = {}
    for g in Box.gen_keys():
        kind = g[0]
        if kind == "Ae":
            aw = (A_IE,) if g[1] == "IE" else (A_EI,)
            images[g] = comb((aw, ("id", g[2])))
        elif kind == "eR":
            images[g] = comb(((("id", g[1])), (g[2],)))
        else:
            images[g] = EMPTY
    idem_map = {idem: idem for idem in Box.idempotents}
    return AlgebraMap(f"proj_{n}", Box, At, idem_map, images)


BUILDERS = {
    "A": lambda n: build_A(),
    "AoA": lambda n: build_AoA(),
    "B": lambda n: build_B(),
    "Rn": build_Rn,
    "HRn": build_HRn,
    "AxRn": build_AboxRn,
    "AtRn": build_AtRn,
    "AtHRn": build_AtHRn,
}
