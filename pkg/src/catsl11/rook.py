"""Decorated rook diagrams: the combinatorial kernel of the DG algebras.

States are strictly increasing tuples of occupied positions (1-indexed);
the ambient width n is implicit (relations are local and n-independent).
Generators are encoded as hashable keys:

    ('lp', x, c)      loop attached to the strand of x at position c
    ('mv', x, p, b)   elementary diagram: the strand at b moves left to
                      the empty position p, crossing every strand and
                      marking every empty position strictly between

A word is a tuple of composable generator keys.  Two words are equal in
the diagram algebra iff they are connected by the stacking relations:
nilpotent loops, commutation of disjoint pieces, and loop slides over
crossings.  Canonical forms are computed as the lexicographic minimum
over the full equivalence class (breadth-first search over relation
moves); a word is zero iff some move sequence produces an adjacent
nilpotent pair.  The cohomology-level algebra has the extra relations
R1 (unstackability) and R3 (loop transport over a depart/refill pair),
handled by `h_canon`.
"""

from __future__ import annotations

from typing import NamedTuple

# ---------- generator keys ----------


def loop_key(x, c):
    assert c in x
    return ("lp", tuple(x), c)


def mover_key(x, p, b):
    x = tuple(x)
    assert b in x and p not in x and 1 <= p < b
    return ("mv", x, p, b)


def gen_src(g):
    return g[1]


def gen_tgt(g):
    if g[0] == "lp":
        return g[1]
    _, x, p, b = g
    return tuple(sorted(set(x) - {b} | {p}))


def crossings(g):
    """Positions of strands crossed by a mover."""
    _, x, p, b = g
    return tuple(c for c in x if p < c < b)


def markings(g):
    """Marked empty positions under a mover."""
    _, x, p, b = g
    return tuple(q for q in range(p + 1, b) if q not in x)


def gen_grade(g):
    if g[0] == "lp":
        return (-1, -1)
    return (1 - len(crossings(g)), 1 + len(markings(g)))


def gen_diff(g):
    """Differential of a generator: a list of words over GF(2).

    Resolving a marking at q splits the strand at q (two factors);
    resolving a crossing at c smooths it and emits two words, with a
    loop on the crossed strand on the source or the target side.
    """
    if g[0] == "lp":
        return []
    _, x, p, b = g
    out = []
    for q in markings(g):
        x2 = tuple(sorted(set(x) - {b} | {q}))
        out.append((mover_key(x, q, b), mover_key(x2, p, q)))
    y = gen_tgt(g)
    for c in crossings(g):
        z = tuple(sorted(set(x) - {c} | {p}))
        lower = mover_key(x, p, c)
        upper = mover_key(z, c, b)
        out.append((loop_key(x, c), lower, upper))
        out.append((lower, upper, loop_key(y, c)))
    return out


# ---------- pieces and independence ----------


def piece(g):
    if g[0] == "lp":
        return ("L", g[2])
    return ("M", g[2], g[3])


def independent(a, b):
    """Symmetric independence of abstract pieces (commutation moves)."""
    if a[0] == "L" and b[0] == "L":
        return a[1] != b[1]
    if a[0] == "L" or b[0] == "L":
        loop, mv = (a, b) if a[0] == "L" else (b, a)
        return loop[1] != mv[1] and loop[1] != mv[2]
    return a[2] < b[1] or b[2] < a[1]


def realize(src, pieces):
    """Concrete generator keys for abstract pieces from a source state."""
    gens = []
    cur = tuple(src)
    for pc in pieces:
        if pc[0] == "L":
            if pc[1] not in cur:
                return None
            gens.append(loop_key(cur, pc[1]))
        else:
            _, p, b = pc
            if b not in cur or p in cur:
                return None
            g = mover_key(cur, p, b)
            gens.append(g)
            cur = gen_tgt(g)
    return tuple(gens)


def word_src(word, fallback=None):
    return gen_src(word[0]) if word else fallback


def word_tgt(word, fallback=None):
    return gen_tgt(word[-1]) if word else fallback


def word_grade(word):
    h = t = 0
    for g in word:
        gh, gt = gen_grade(g)
        h += gh
        t += gt
    return (h, t)


# ---------- canonical forms ----------

_ZERO = object()
_CLASS_CAP = 400_000


def _swap_neighbor(word, i):
    """Swap positions i, i+1 if the pieces are independent."""
    a, b = piece(word[i]), piece(word[i + 1])
    if a == b and a[0] == "L":
        return _ZERO
    if not independent(a, b):
        return None
    pair = realize(gen_src(word[i]), (b, a))
    if pair is None:
        return None
    assert gen_tgt(pair[-1]) == gen_tgt(word[i + 1])
    return word[:i] + pair + word[i + 2:]


def _rn_neighbors(word):
    for i in range(len(word) - 1):
        w2 = _swap_neighbor(word, i)
        if w2 is not None:
            yield w2


def _search_canon(word, neighbors, memo):
    if word in memo:
        return memo[word]
    seen = {word}
    frontier = [word]
    best = word
    zero = False
    while frontier and not zero:
        nxt = []
        for w in frontier:
            for w2 in neighbors(w):
                if w2 is _ZERO:
                    zero = True
                    break
                if w2 not in seen:
                    seen.add(w2)
                    nxt.append(w2)
                    if w2 < best:
                        best = w2
            if zero:
                break
        frontier = nxt
        if len(seen) > _CLASS_CAP:
            raise RuntimeError(f"relation class too large ({len(seen)} words)")
    res = None if zero else best
    for w in seen:
        memo[w] = res
    return res


_RN_MEMO = {}
_H_MEMO = {}


def rn_canon(word):
    """Canonical form in the diagram algebra; None means zero."""
    word = tuple(word)
    if len(word) <= 1:
        return word
    return _search_canon(word, _rn_neighbors, _RN_MEMO)


def _is_h_gen(g):
    return g[0] == "lp" or g[2] == g[3] - 1


def _h_neighbors(word):
    for i in range(len(word) - 1):
        g1, g2 = word[i], word[i + 1]
        # R1: a strand that arrives and immediately departs again
        if g1[0] == "mv" and g2[0] == "mv" and g2[3] == g1[2]:
            yield _ZERO
            return
        w2 = _swap_neighbor(word, i)
        if w2 is not None:
            yield w2
    # R3: loop transport over a depart/refill pair at position c
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if (a[0] == "lp" and b[0] == "mv" and c[0] == "mv"
                and b[3] == a[2] and c[2] == a[2]):
            moved = realize(gen_src(a), (piece(b), piece(c), piece(a)))
            if moved is not None:
                yield word[:i] + moved + word[i + 3:]
        if (a[0] == "mv" and b[0] == "mv" and c[0] == "lp"
                and b[2] == c[2] and a[3] == c[2]):
            moved = realize(gen_src(a), (piece(c), piece(a), piece(b)))
            if moved is not None:
                yield word[:i] + moved + word[i + 3:]


def h_canon(word):
    """Canonical form in the cohomology algebra; None means zero."""
    word = tuple(word)
    assert all(_is_h_gen(g) for g in word)
    if len(word) <= 1:
        return word
    return _search_canon(word, _h_neighbors, _H_MEMO)


# ---------- spec-facing diagram types ----------


class LoopGen(NamedTuple):
    n: int
    x: tuple
    i: int  # strand index, 1-based

    @property
    def pos(self):
        return self.x[self.i - 1]

    def key(self):
        return loop_key(self.x, self.pos)


class ElementaryDiagram(NamedTuple):
    n: int
    x: tuple
    m: int  # index of the moving strand in x
    p: int  # its target position

    @property
    def b(self):
        return self.x[self.m - 1]

    @property
    def y(self):
        return gen_tgt(self.key())

    @property
    def i(self):
        return self.y.index(self.p) + 1

    @property
    def s1(self):
        return self.m - self.i

    @property
    def v(self):
        y = self.y
        i = self.i
        return tuple(self.x[i - 1 + l] - y[i - 1 + l] - 1 for l in range(self.s1 + 1))

    @property
    def s0(self):
        return sum(self.v)

    def key(self):
        return mover_key(self.x, self.p, self.b)


def make_elementary(x, m, p, n=None):
    """Elementary diagram moving strand m of x to position p.

    ``x`` is a position tuple or a rep.BasisState.  Rejects p >= x_m and
    occupied p; all crossings/markings between p and x_m are implied.
    """
    if hasattr(x, "positions"):
        n = x.n
        x = x.positions
    x = tuple(x)
    if n is None:
        n = max(x)
    if not 1 <= m <= len(x):
        raise ValueError(f"strand index {m} out of range for {x}")
    b = x[m - 1]
    if p >= b:
        raise ValueError(f"target {p} is not left of source {b}")
    if p in x:
        raise ValueError(f"target {p} is occupied in {x}")
    d = ElementaryDiagram(n, x, m, p)
    assert d.s0 == len(markings(d.key())) and d.s1 == len(crossings(d.key()))
    return d


class DiagramWord(NamedTuple):
    n: int
    source: tuple
    gens: tuple  # generator keys

    @property
    def target(self):
        return word_tgt(self.gens, self.source)

    def grade(self):
        return word_grade(self.gens)


def word_from_gens(n, source, gens):
    source = tuple(source)
    cur = source
    for g in gens:
        if gen_src(g) != cur:
            raise ValueError(f"endpoint mismatch at {g}: state is {cur}")
        cur = gen_tgt(g)
    return DiagramWord(n, source, tuple(gens))


def grade(g):
    """Bigrade of a LoopGen or an ElementaryDiagram."""
    return gen_grade(g.key())


def resolve_marking(d: ElementaryDiagram, q) -> DiagramWord:
    """Split the strand of d at the marked position q (two factors)."""
    if q not in markings(d.key()):
        raise ValueError(f"{q} is not a marked position of {d}")
    x, p, b = d.x, d.p, d.b
    x2 = tuple(sorted(set(x) - {b} | {q}))
    return word_from_gens(d.n, x, (mover_key(x, q, b), mover_key(x2, p, q)))


def resolve_crossing(d: ElementaryDiagram, c_index):
    """Smooth the crossing with strand index c; two words with a loop."""
    if not d.i <= c_index <= d.i + d.s1 - 1:
        raise ValueError(f"index {c_index} is not a crossed strand of {d}")
    c = d.x[c_index - 1]
    x, p, b = d.x, d.p, d.b
    z = tuple(sorted(set(x) - {c} | {p}))
    y = d.y
    w1 = word_from_gens(d.n, x, (loop_key(x, c), mover_key(x, p, c), mover_key(z, c, b)))
    w2 = word_from_gens(d.n, x, (mover_key(x, p, c), mover_key(z, c, b), loop_key(y, c)))
    return [w1, w2]


def word_normal_form(w: DiagramWord):
    """Canonical representative in the diagram algebra, or None if zero."""
    word_from_gens(w.n, w.source, w.gens)  # endpoint validation
    nf = rn_canon(w.gens)
    if nf is None:
        return None
    return DiagramWord(w.n, w.source, nf)


# ---------- ASCII rendering ----------


def render_state(x, n):
    return " ".join("x" if i in x else "." for i in range(1, n + 1))


def render_gen(g, n):
    """Two-row picture, bottom row = source."""
    if g[0] == "lp":
        _, x, c = g
        deco = " ".join("o" if i == c else " " for i in range(1, n + 1))
        return [render_state(x, n), deco + f"   loop at {c}",
                render_state(x, n)]
    _, x, p, b = g
    marks = markings(g)
    cross = crossings(g)
    deco = []
    for i in range(1, n + 1):
        if i == p:
            deco.append("<")
        elif i == b:
            deco.append("/")
        elif i in cross:
            deco.append("+")
        elif i in marks:
            deco.append("*")
        else:
            deco.append(" ")
    legend = f"   {b}=>{p}"
    if cross:
        legend += f" cross{set(cross)}"
    if marks:
        legend += f" mark{set(marks)}"
    return [render_state(gen_tgt(g), n), " ".join(deco) + legend,
            render_state(x, n)]


def render_word(word, n, source=None):
    """Stacked ASCII picture of a word, source at the bottom."""
    if not word:
        return render_state(source or (), n) + "   (idempotent)"
    lines = []
    for idx, g in enumerate(word):
        block = render_gen(g, n)
        if idx == 0:
            lines = block[::-1]
        else:
            lines.extend(block[::-1][1:])
    return "\n".join(lines[::-1])


def rn_generators(n):
    """All loop and mover keys on width-n states."""
    from itertools import combinations
    gens = []
    for k in range(n + 1):
        for x in combinations(range(1, n + 1), k):
            for c in x:
                gens.append(loop_key(x, c))
            for b in x:
                for p in range(1, b):
                    if p not in x:
                        gens.append(mover_key(x, p, b))
    return gens


def hrn_generators(n):
    """Loop keys and one-step mover keys (the cohomology generators)."""
    return [g for g in rn_generators(n) if _is_h_gen(g)]
