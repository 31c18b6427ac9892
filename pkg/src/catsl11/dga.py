"""Generic finite-dimensional DG algebras over GF(2).

Two constructions cover every instance here: a presented path algebra
(idempotents, generators with endpoints/grades/differentials, and a
word canonicalizer that encodes the relations) and a twisted tensor
product of two built algebras.  Elements are GF(2) combinations of
basis keys, represented as frozensets.

Basis keys of a presented algebra are ('id', idem) or canonical tuples
of generator keys; basis keys of a tensor algebra are pairs of the
component keys.  Gradings are integer tuples (bigrades or trigrades);
the differential raises the first component by one.
"""

from __future__ import annotations

from collections import Counter
from typing import NamedTuple

from . import gf2
from .reports import SuiteReport

EMPTY = frozenset()


def comb(*keys):
    return frozenset(keys)


def comb_add(a, b):
    return a ^ b


class GenSpec(NamedTuple):
    src: object
    tgt: object
    grade: tuple
    diff: tuple  # tuple of words, each a tuple of generator keys


class PresentedDGA:
    """Path algebra with relations given by a word canonicalizer.

    ``canon(word)`` must return the canonical equivalent word or None
    for zero; it defines the relations.  The basis is enumerated as the
    closure of the idempotents under right multiplication by
    generators (all words here are length-graded, so the closure
    terminates exactly when the algebra is finite-dimensional).
    """

    def __init__(self, name, idempotents, gens, canon, grade_len=2,
                 text=None, max_dim=500_000):
        self.name = name
        self.idempotents = list(idempotents)
        self.gens = dict(gens)  # gen key -> GenSpec
        self.canon = canon
        self.grade_len = grade_len
        self._text = text or (lambda g: str(g))
        self._mul_memo = {}
        self._diff_memo = {}
        self._by_tgt = {}
        self._enumerate(max_dim)

    # ----- basis enumeration -----

    def _enumerate(self, max_dim):
        by_src = {}
        for g, spec in self.gens.items():
            by_src.setdefault(spec.src, []).append(g)
        basis = [("id", i) for i in self.idempotents]
        seen = set(basis)
        frontier = basis[:]
        while frontier:
            new = []
            for b in frontier:
                for g in by_src.get(self.tgt(b), ()):
                    w = (g,) if b[0] == "id" else b + (g,)
                    nf = self.canon(w)
                    if nf is not None and nf not in seen:
                        seen.add(nf)
                        new.append(nf)
                        if len(seen) > max_dim:
                            raise RuntimeError(f"{self.name}: basis exceeds {max_dim}")
            basis.extend(new)
            frontier = new
        self.basis = basis
        self.basis_set = seen
        for b in basis:
            self._by_tgt.setdefault(self.tgt(b), []).append(b)

    # ----- structure maps -----

    def src(self, b):
        if b and b[0] == "id":
            return b[1]
        return self.gens[b[0]].src

    def tgt(self, b):
        if b and b[0] == "id":
            return b[1]
        return self.gens[b[-1]].tgt

    def grade(self, b):
        if b and b[0] == "id":
            return (0,) * self.grade_len
        out = (0,) * self.grade_len
        for g in b:
            out = tuple(x + y for x, y in zip(out, self.gens[g].grade))
        return out

    def is_idem(self, b):
        return b and b[0] == "id"

    def idem_key(self, idem):
        return ("id", idem)

    def basis_by_tgt(self, idem):
        return self._by_tgt.get(idem, [])

    def mul(self, b1, b2):
        if self.is_idem(b1):
            return comb(b2) if self.src(b2) == b1[1] else EMPTY
        if self.is_idem(b2):
            return comb(b1) if self.tgt(b1) == b2[1] else EMPTY
        if self.tgt(b1) != self.src(b2):
            return EMPTY
        key = (b1, b2)
        got = self._mul_memo.get(key)
        if got is None:
            nf = self.canon(b1 + b2)
            got = EMPTY if nf is None else comb(nf)
            self._mul_memo[key] = got
        return got

    def diff(self, b):
        if self.is_idem(b):
            return EMPTY
        got = self._diff_memo.get(b)
        if got is None:
            acc = Counter()
            for i, g in enumerate(b):
                for dw in self.gens[g].diff:
                    nf = self.canon(b[:i] + dw + b[i + 1:])
                    if nf is not None:
                        acc[nf] ^= 1
            got = frozenset(w for w, c in acc.items() if c)
            self._diff_memo[b] = got
        return got

    def gen_keys(self):
        return list(self.gens)

    def gen_basis(self, g):
        """The basis key of a single generator."""
        nf = self.canon((g,))
        assert nf == (g,)
        return nf

    def text(self, b):
        if self.is_idem(b):
            return f"e({b[1]})"
        return "*".join(self._text(g) for g in b)

    # combination helpers

    def mul_comb(self, c1, c2):
        out = EMPTY
        for b1 in c1:
            for b2 in c2:
                out = out ^ self.mul(b1, b2)
        return out

    def diff_comb(self, c):
        out = EMPTY
        for b in c:
            out = out ^ self.diff(b)
        return out

    def comb_text(self, c):
        if not c:
            return "0"
        return " + ".join(sorted(self.text(b) for b in c))


class TensorDGA:
    """Tensor product of two built algebras with a twisted h-grading.

    ``hgrade(b1, b2)`` returns the twisted cohomological degree of the
    pair; the remaining grade components are supplied by ``tgrade``.
    The differential is d(x)1 + 1(x)d (no signs over GF(2)).
    """

    def __init__(self, name, left, right, grade2, grade_len=2):
        self.name = name
        self.left = left
        self.right = right
        self.grade_len = grade_len
        self._grade2 = grade2
        self.idempotents = [(i, j) for i in left.idempotents for j in right.idempotents]
        self.basis = [(b1, b2) for b1 in left.basis for b2 in right.basis]
        self.basis_set = set(self.basis)
        self._by_tgt = {}
        for b in self.basis:
            self._by_tgt.setdefault(self.tgt(b), []).append(b)

    def src(self, b):
        return (self.left.src(b[0]), self.right.src(b[1]))

    def tgt(self, b):
        return (self.left.tgt(b[0]), self.right.tgt(b[1]))

    def grade(self, b):
        return self._grade2(b[0], b[1])

    def is_idem(self, b):
        return self.left.is_idem(b[0]) and self.right.is_idem(b[1])

    def idem_key(self, idem):
        return (self.left.idem_key(idem[0]), self.right.idem_key(idem[1]))

    def basis_by_tgt(self, idem):
        return self._by_tgt.get(idem, [])

    def mul(self, b1, b2):
        lc = self.left.mul(b1[0], b2[0])
        if not lc:
            return EMPTY
        rc = self.right.mul(b1[1], b2[1])
        return frozenset((l, r) for l in lc for r in rc)

    def diff(self, b):
        out = set()
        for dl in self.left.diff(b[0]):
            out.add((dl, b[1]))
        for dr in self.right.diff(b[1]):
            out.add((b[0], dr))
        return frozenset(out)

    def text(self, b):
        return f"{self.left.text(b[0])}(x){self.right.text(b[1])}"

    def mul_comb(self, c1, c2):
        out = EMPTY
        for b1 in c1:
            for b2 in c2:
                out = out ^ self.mul(b1, b2)
        return out

    def diff_comb(self, c):
        out = EMPTY
        for b in c:
            out = out ^ self.diff(b)
        return out

    def comb_text(self, c):
        if not c:
            return "0"
        return " + ".join(sorted(self.text(b) for b in c))


# ---------- structural checks ----------

def _dstep(alg):
    return (1,) + (0,) * (alg.grade_len - 1)


def check_d_squared(alg, rep: SuiteReport):
    bad = []
    step = _dstep(alg)
    for b in alg.basis:
        if alg.diff_comb(alg.diff(b)):
            bad.append(b)
            continue
        for w in alg.diff(b):
            if alg.grade(w) != tuple(x + y for x, y in zip(alg.grade(b), step)):
                bad.append(b)
                break
    rep.add(f"{alg.name}: d^2=0 and deg(d)={step}", not bad,
            witness="; ".join(alg.text(b) for b in bad[:3]))


def check_grading_additive(alg, rep: SuiteReport):
    bad = []
    for b1 in alg.basis:
        for b2 in alg.basis:
            prod = alg.mul(b1, b2)
            for w in prod:
                expect = tuple(x + y for x, y in zip(alg.grade(b1), alg.grade(b2)))
                if alg.grade(w) != expect:
                    bad.append((b1, b2))
    rep.add(f"{alg.name}: deg(a*b)=deg(a)+deg(b)", not bad,
            witness="; ".join(f"{alg.text(a)} | {alg.text(b)}" for a, b in bad[:3]))


def check_associative(alg, rep: SuiteReport, budget=2_000_000, seed=0):
    """Associativity on composable basis triples.

    Exhaustive when the composable-triple count fits the budget;
    otherwise checks all (basis, generator, generator) triples plus a
    seeded random sample of full triples.
    """
    import random
    by_src = {}
    for b in alg.basis:
        by_src.setdefault(alg.src(b), []).append(b)

    def compat(b):
        return by_src.get(alg.tgt(b), ())

    total = 0
    for b1 in alg.basis:
        for b2 in compat(b1):
            total += len(compat(b2))
    bad = []

    def check(x, y, z):
        lhs = alg.mul_comb(alg.mul(x, y), comb(z))
        rhs = alg.mul_comb(comb(x), alg.mul(y, z))
        if lhs != rhs:
            bad.append((x, y, z))

    if total <= budget:
        for b1 in alg.basis:
            for b2 in compat(b1):
                for b3 in compat(b2):
                    check(b1, b2, b3)
        label = f"exhaustive ({total} triples)"
    else:
        gens = [alg.canon((g,)) for g in alg.gen_keys()] if hasattr(alg, "gen_keys") else []
        cnt = 0
        for b1 in alg.basis:
            for g1 in gens:
                if alg.src(g1) != alg.tgt(b1):
                    continue
                for g2 in gens:
                    if alg.src(g2) != alg.tgt(g1):
                        continue
                    check(b1, g1, g2)
                    cnt += 1
        rng = random.Random(seed)
        for _ in range(50_000):
            b1 = rng.choice(alg.basis)
            opts = compat(b1)
            if not opts:
                continue
            b2 = rng.choice(opts)
            opts = compat(b2)
            if not opts:
                continue
            check(b1, b2, rng.choice(opts))
        label = f"word-gen-gen ({cnt}) + sampled"
    rep.add(f"{alg.name}: associativity {label}", not bad,
            witness="; ".join(" | ".join(alg.text(t) for t in tr) for tr in bad[:2]))


def check_leibniz(alg, rep: SuiteReport, pairs=None):
    """d(a*b) = d(a)*b + a*d(b) over GF(2)."""
    bad = []
    if pairs is None:
        if hasattr(alg, "gen_keys"):
            gens = [(g,) for g in alg.gen_keys()]
            pairs = [(b, g) for b in alg.basis for g in gens
                     if alg.tgt(b) == alg.src(g)]
        else:
            pairs = [(b1, b2) for b1 in alg.basis for b2 in alg.basis
                     if alg.tgt(b1) == alg.src(b2)]
    for a, b in pairs:
        lhs = alg.diff_comb(alg.mul(a, b))
        rhs = alg.mul_comb(alg.diff(a), comb(b)) ^ alg.mul_comb(comb(a), alg.diff(b))
        if lhs != rhs:
            bad.append((a, b))
    rep.add(f"{alg.name}: Leibniz rule ({len(pairs)} pairs)", not bad,
            witness="; ".join(f"{alg.text(a)} | {alg.text(b)}" for a, b in bad[:3]))


def check_stability(alg, rep: SuiteReport):
    """One more closure round adds no basis words."""
    if not hasattr(alg, "gen_keys"):
        rep.add(f"{alg.name}: basis stability (tensor basis)", True)
        return
    new = []
    for b in alg.basis:
        for g in alg.gen_keys():
            if alg.gens[g].src != alg.tgt(b):
                continue
            w = (g,) if alg.is_idem(b) else b + (g,)
            nf = alg.canon(w)
            if nf is not None and nf not in alg.basis_set:
                new.append(nf)
    rep.add(f"{alg.name}: basis stability (dim {len(alg.basis)})", not new)


def dims_table(alg):
    """Bigrade -> dimension table."""
    out = {}
    for b in alg.basis:
        out[alg.grade(b)] = out.get(alg.grade(b), 0) + 1
    return out


def hom_dims(alg, src, tgt):
    """Graded dimensions of e(src)*Alg*e(tgt)."""
    out = {}
    for b in alg.basis:
        if alg.src(b) == src and alg.tgt(b) == tgt:
            out[alg.grade(b)] = out.get(alg.grade(b), 0) + 1
    return out


# ---------- cohomology ----------

class Cohomology:
    """Graded cohomology of a built algebra, with chosen representatives."""

    def __init__(self, alg):
        self.alg = alg
        step = _dstep(alg)
        by_grade = {}
        for b in alg.basis:
            by_grade.setdefault(alg.grade(b), []).append(b)
        self.index = {g: {b: i for i, b in enumerate(bs)} for g, bs in by_grade.items()}
        self.by_grade = by_grade

        def tobits(grade, combo):
            idx = self.index.get(grade, {})
            out = 0
            for w in combo:
                out |= 1 << idx[w]
            return out

        self._tobits = tobits
        self.dims = {}
        self.reps = {}
        self._bound_rref = {}
        self._rep_bits = {}
        for g, bs in by_grade.items():
            tgtg = tuple(x + y for x, y in zip(g, step))
            srcg = tuple(x - y for x, y in zip(g, step))
            rows = [tobits(tgtg, alg.diff(b)) for b in bs]
            ker = gf2.kernel_basis(rows, len(bs))
            bnd = []
            for b in by_grade.get(srcg, ()):
                bnd.append(tobits(g, alg.diff(b)))
            bnd_rref, _ = gf2.rref(bnd)
            reps = []
            span = list(bnd_rref)
            for v in ker:
                red = gf2.reduce_row(v, span)
                if red:
                    reps.append(v)
                    span, _ = gf2.rref(span + [v])
            self.dims[g] = len(reps)
            self._bound_rref[g] = bnd_rref
            self._rep_bits[g] = reps
            self.reps[g] = [frozenset(bs[i] for i in range(len(bs)) if (v >> i) & 1)
                            for v in reps]
        self.dims = {g: d for g, d in self.dims.items() if d}

    def coords(self, grade, combo):
        """Coordinates of a cocycle in the chosen representatives.

        Returns a bitmask over reps[grade], or None if the class is not
        in their span (i.e. the element is not closed / wrong grade).
        """
        if not combo:
            return 0
        v = self._tobits(grade, combo)
        rows = self._rep_bits.get(grade, []) + self._bound_rref.get(grade, [])
        sol = gf2.solve(rows, v)
        if sol is None:
            return None
        return sol & ((1 << len(self._rep_bits.get(grade, []))) - 1)


def cohomology(alg):
    return Cohomology(alg)


# ---------- algebra maps / quasi-isomorphisms ----------

class AlgebraMap:
    """Map defined on idempotents and generators, extended over words."""

    def __init__(self, name, src_alg, dst_alg, idem_map, gen_images):
        self.name = name
        self.src_alg = src_alg
        self.dst_alg = dst_alg
        self.idem_map = idem_map
        self.gen_images = gen_images
        self._memo = {}

    def image(self, b):
        got = self._memo.get(b)
        if got is not None:
            return got
        if self.src_alg.is_idem(b):
            out = comb(self.dst_alg.idem_key(self.idem_map[b[1]]))
        else:
            out = comb(self.dst_alg.idem_key(self.idem_map[self.src_alg.src(b)]))
            for g in b:
                out = self.dst_alg.mul_comb(out, self.gen_images[g])
        self._memo[b] = out
        return out

    def image_comb(self, c):
        out = EMPTY
        for b in c:
            out = out ^ self.image(b)
        return out


def check_quasi_iso(fmap: AlgebraMap, rep: SuiteReport, h_src=None, h_dst=None):
    """Verify an algebra map is a chain map inducing an iso on cohomology."""
    A, B = fmap.src_alg, fmap.dst_alg
    bad = []
    for b in A.basis:
        if A.is_idem(b):
            continue
        for g in A.gen_keys():
            if A.gens[g].src != A.tgt(b):
                continue
            lhs = B.mul_comb(fmap.image(b), fmap.gen_images[g])
            rhs = fmap.image_comb(A.mul(b, (g,)))
            if lhs != rhs:
                bad.append((b, g))
    rep.add(f"{fmap.name}: multiplicative", not bad,
            witness="; ".join(f"{A.text(b)} * {A.text((g,))}" for b, g in bad[:3]))

    bad = [b for b in A.basis
           if fmap.image_comb(A.diff(b)) != B.diff_comb(fmap.image(b))]
    rep.add(f"{fmap.name}: chain map", not bad,
            witness="; ".join(A.text(b) for b in bad[:3]))

    h_src = h_src or cohomology(A)
    h_dst = h_dst or cohomology(B)
    rep.add(f"{fmap.name}: graded H-dims equal", h_src.dims == h_dst.dims,
            expected=str(sorted(h_dst.dims.items())),
            computed=str(sorted(h_src.dims.items())))
    iso_ok = True
    witness = ""
    for g, reps in h_src.reps.items():
        vecs = []
        for z in reps:
            img = fmap.image_comb(z)
            co = h_dst.coords(g, img)
            if co is None:
                iso_ok, witness = False, f"image of rep at {g} is not closed"
                break
            vecs.append(co)
        if not iso_ok:
            break
        if gf2.rank(vecs) != h_dst.dims.get(g, 0) or len(vecs) != h_src.dims.get(g, 0):
            iso_ok, witness = False, f"rank defect at grade {g}"
            break
    rep.add(f"{fmap.name}: iso on cohomology", iso_ok, witness=witness)
    return h_src, h_dst
