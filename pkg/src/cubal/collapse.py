"""Collapsing a cubic algebra onto an implication algebra.

Two elements are identified when each is the reflection of the other
across their join.  The classes carry an implication-algebra structure:

    class join        [x] | [y]  = [x | delta(x | y, y)]
    class meet        [x] ^ [y]  = [caret(x, y)]     when the caret exists
    class implication [x] -> [y] = [imp(delta(x | y, x), y)]

The quotient map eta preserves order but not joins; on any interval
[a, 1] it restricts to an implication embedding.  This module also
builds the derived maps between a cubic algebra, its collapse, and the
pair algebra over the collapse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boolean import BElem, BoolAlg
from .constructions import ImpPair, Interval, pair_algebra
from .cubic import CElem, CubicAlg, CubicMorphism
from .errors import LawViolationError, MixedAlgebraError
from .implication import ImpAlg, ImpMorphism, RealizedImp, imp_meet, realize_implication_algebra
from .report import CheckReport


# -- derived relations and operations on elements ---------------------------

def preceq_i(C: CubicAlg, i: int, j: int) -> bool:
    u = C.join_i(i, j)
    return C.leq_i(C.delta_i(u, i), j)


def sim_i(C: CubicAlg, i: int, j: int) -> bool:
    return C.delta_i(C.join_i(i, j), i) == j


def star_i(C: CubicAlg, i: int, j: int) -> int:
    return C.join_i(i, C.delta_i(C.join_i(i, j), j))


def dimp_i(C: CubicAlg, i: int, j: int) -> int:
    return C.imp_i(C.delta_i(C.join_i(i, j), i), j)


def preceq(C: CubicAlg, x: CElem, y: CElem) -> bool:
    """Reflection order: x lands below y when reflected across x | y."""
    return preceq_i(C, C._own(x), C._own(y))


def sim(C: CubicAlg, x: CElem, y: CElem) -> bool:
    """x and y are reflections of each other across their join."""
    return sim_i(C, C._own(x), C._own(y))


def star(C: CubicAlg, x: CElem, y: CElem) -> CElem:
    return C.el(star_i(C, C._own(x), C._own(y)))


def dimp(C: CubicAlg, x: CElem, y: CElem) -> CElem:
    return C.el(dimp_i(C, C._own(x), C._own(y)))


def length(B: BoolAlg, x: CElem | Interval) -> BElem:
    """Length of an interval: the part of the top end missing from the bottom."""
    p = x.payload if isinstance(x, CElem) else x
    if not isinstance(p, Interval):
        raise MixedAlgebraError("length needs an interval-algebra element")
    if p.lo.alg is not B:
        raise MixedAlgebraError("interval lives over a different algebra")
    return B.meet(B.complement(p.lo), p.hi)


def iota_pair(I: ImpAlg, x: CElem) -> BElem:
    """The meet of the two components of a pair, taken inside I."""
    p = x.payload
    if not isinstance(p, ImpPair):
        raise MixedAlgebraError("iota needs a pair-algebra element")
    m = imp_meet(I, p.a, p.b)
    if m is None:
        raise LawViolationError(f"pair {x} has no meet in the implication algebra")
    return m


# -- the collapse itself ----------------------------------------------------

class Collapse:
    """Partition of a cubic algebra by the reflection equivalence."""

    __slots__ = ("source", "classes", "class_of", "_realized")

    def __init__(self, source: CubicAlg):
        self.source = source
        n = source.size
        class_of = [-1] * n
        classes = []
        for i in range(n):
            if class_of[i] != -1:
                continue
            members = tuple(j for j in range(n) if sim_i(source, i, j))
            cid = len(classes)
            for j in members:
                class_of[j] = cid
            classes.append(members)
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)
        self._realized = None

    @property
    def size(self) -> int:
        return len(self.classes)

    def eta_i(self, i: int) -> int:
        return self.class_of[i]

    def eta(self, x: CElem) -> int:
        return self.class_of[self.source._own(x)]

    def members(self, cid: int) -> list[CElem]:
        return [self.source.el(i) for i in self.classes[cid]]

    def rep(self, cid: int) -> CElem:
        return self.source.el(self.classes[cid][0])

    @property
    def top_c(self) -> int:
        return self.class_of[self.source.one_i]

    def leq_c(self, ci: int, cj: int) -> bool:
        return preceq_i(self.source, self.classes[ci][0], self.classes[cj][0])

    def join_c(self, ci: int, cj: int) -> int:
        return self.class_of[star_i(self.source, self.classes[ci][0], self.classes[cj][0])]

    def meet_c(self, ci: int, cj: int) -> int | None:
        k = self.source.caret_i(self.classes[ci][0], self.classes[cj][0])
        return None if k is None else self.class_of[k]

    def imp_c(self, ci: int, cj: int) -> int:
        return self.class_of[dimp_i(self.source, self.classes[ci][0], self.classes[cj][0])]

    def as_implication_algebra(self) -> RealizedImp:
        """Concrete copy of the quotient, classes living over the coatoms."""
        if self._realized is None:
            self._realized = realize_implication_algebra(
                range(self.size), self.leq_c, self.join_c)
        return self._realized

    def check_wellformed(self) -> CheckReport:
        """The equivalence and independence of the class operations from
        the choice of member."""
        C = self.source
        n = C.size
        report = CheckReport(f"collapse of {C.name}")

        bad = None
        for i in range(n):
            for j in range(n):
                if sim_i(C, i, j) != sim_i(C, j, i):
                    bad = (C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                    break
            if bad:
                break
        report.add("sim-symmetric", bad is None, witness=bad)

        bad = None
        for i in range(n):
            for j in range(n):
                if not sim_i(C, i, j):
                    continue
                for k in range(n):
                    if sim_i(C, j, k) and not sim_i(C, i, k):
                        bad = tuple(C._fmt(C.payloads[t]) for t in (i, j, k))
                        break
                if bad:
                    break
            if bad:
                break
        report.add("sim-transitive", bad is None, witness=bad)

        bad = None
        for i in range(n):
            for j in range(n):
                ci, cj = self.class_of[i], self.class_of[j]
                if self.class_of[star_i(C, i, j)] != self.join_c(ci, cj):
                    bad = ("join", C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                    break
                if self.class_of[dimp_i(C, i, j)] != self.imp_c(ci, cj):
                    bad = ("imp", C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                    break
                k = C.caret_i(i, j)
                m = self.meet_c(ci, cj)
                if (k is None) != (m is None) or (k is not None and self.class_of[k] != m):
                    bad = ("meet", C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                    break
            if bad:
                break
        report.add("operations-classwise", bad is None, witness=bad)

        bad = None
        for ci in range(self.size):
            for cj in range(self.size):
                fwd = self.leq_c(ci, cj)
                a, b = self.classes[ci][0], self.classes[cj][0]
                if any(preceq_i(C, i, j) != fwd
                       for i in self.classes[ci] for j in self.classes[cj]):
                    bad = (C._fmt(C.payloads[a]), C._fmt(C.payloads[b]))
                    break
                if fwd and self.leq_c(cj, ci) and ci != cj:
                    bad = (C._fmt(C.payloads[a]), C._fmt(C.payloads[b]))
                    break
            if bad:
                break
        report.add("order-classwise", bad is None, witness=bad)
        return report


def collapse(C: CubicAlg) -> Collapse:
    return Collapse(C)


def local_embedding_check(C: CubicAlg, col: Collapse | None = None) -> CheckReport:
    """On every interval [a, 1] the quotient map embeds: it is injective,
    order-reflecting, and carries the derived implication to the class
    implication; its image is upward closed in the quotient order."""
    col = col if col is not None else Collapse(C)
    report = CheckReport(f"local embedding for {C.name}")
    n = C.size

    def w(*idx):
        return tuple(C._fmt(C.payloads[i]) for i in idx)

    bad_inj = bad_ord = bad_imp = bad_up = None
    for a in range(n):
        above = [i for i in range(n) if C.leq_i(a, i)]
        image = {col.class_of[i] for i in above}
        for i in above:
            for j in above:
                if bad_inj is None and i != j and col.class_of[i] == col.class_of[j]:
                    bad_inj = w(a, i, j)
                if bad_ord is None and \
                        C.leq_i(i, j) != col.leq_c(col.class_of[i], col.class_of[j]):
                    bad_ord = w(a, i, j)
                if bad_imp is None and \
                        col.class_of[C.imp_i(i, j)] != col.imp_c(col.class_of[i], col.class_of[j]):
                    bad_imp = w(a, i, j)
        if bad_up is None:
            for ci in image:
                for cj in range(col.size):
                    if col.leq_c(ci, cj) and cj not in image:
                        bad_up = w(a) + (f"class {cj}",)
                        break
                if bad_up:
                    break
    report.add("injective-above", bad_inj is None, witness=bad_inj)
    report.add("order-embedding-above", bad_ord is None, witness=bad_ord)
    report.add("implication-preserved-above", bad_imp is None, witness=bad_imp)
    report.add("range-upclosed-above", bad_up is None, witness=bad_up)
    return report


def functor_C_on_morphism(f: CubicMorphism, col_s: Collapse | None = None,
                          col_t: Collapse | None = None) -> tuple[int, ...]:
    """Class map induced by a cubic morphism; raises if some class tears."""
    col_s = col_s if col_s is not None else Collapse(f.source)
    col_t = col_t if col_t is not None else Collapse(f.target)
    out = []
    for members in col_s.classes:
        images = {col_t.class_of[f.table[i]] for i in members}
        if len(images) != 1:
            raise LawViolationError("morphism does not respect the equivalence",
                                    witness=[f.source._fmt(f.source.payloads[i])
                                             for i in members])
        out.append(images.pop())
    return tuple(out)


def collapse_morphism(f: CubicMorphism, col_s: Collapse, col_t: Collapse) -> ImpMorphism:
    """The induced map between the realized quotients."""
    cmap = functor_C_on_morphism(f, col_s, col_t)
    Rs = col_s.as_implication_algebra()
    Rt = col_t.as_implication_algebra()
    return ImpMorphism.from_function(Rs.impalg, Rt.impalg,
                                     lambda x: Rt.rep(cmap[Rs.handle(x)]))


@dataclass(frozen=True)
class IotaData:
    """The map from an implication algebra into the collapse of its pair
    algebra, kept with everything needed to check it is an isomorphism."""

    impalg: ImpAlg
    pairs: CubicAlg
    col: Collapse
    table: dict  # carrier bits -> class id

    def __call__(self, x: BElem) -> int:
        return self.table[self.impalg._own(x)]


def iota_transformation(I: ImpAlg, P: CubicAlg | None = None) -> IotaData:
    """x goes to the class of (1, x) in the collapse of the pair algebra."""
    P = P if P is not None else pair_algebra(I)
    col = Collapse(P)
    one = I.ambient.one
    table = {bits: col.class_of[P.element(ImpPair(one, I.ambient.element(bits))).i]
             for bits in I.carrier}
    return IotaData(I, P, col, table)


def check_iota_iso(data: IotaData) -> CheckReport:
    """The map above is a bijection matching implication and join."""
    I, col = data.impalg, data.col
    report = CheckReport("collapse of the pair algebra against the base")
    vals = sorted(data.table.values())
    report.add("injective", len(set(vals)) == len(vals))
    report.add("surjective", set(vals) == set(range(col.size)))
    bad_j = bad_i = None
    B = I.ambient
    for a in sorted(I.carrier):
        for b in sorted(I.carrier):
            ea, eb = B.element(a), B.element(b)
            if bad_j is None and \
                    data(I.join(ea, eb)) != col.join_c(data(ea), data(eb)):
                bad_j = (str(ea), str(eb))
            if bad_i is None and \
                    data(I.implies(ea, eb)) != col.imp_c(data(ea), data(eb)):
                bad_i = (str(ea), str(eb))
    report.add("preserves-join", bad_j is None, witness=bad_j)
    report.add("preserves-implies", bad_i is None, witness=bad_i)
    return report


@dataclass(frozen=True)
class KappaData:
    """The composite map from a cubic algebra through its collapse into
    the pair algebra over the collapse."""

    source: CubicAlg
    col: Collapse
    realized: RealizedImp
    pairs: CubicAlg
    table: tuple[int, ...]  # source index -> pair-algebra index

    def __call__(self, x: CElem) -> CElem:
        return self.pairs.el(self.table[self.source._own(x)])


def kappa_transformation(C: CubicAlg, col: Collapse | None = None) -> KappaData:
    """x goes to the pair (1, class of x) over the realized collapse."""
    col = col if col is not None else Collapse(C)
    R = col.as_implication_algebra()
    P = pair_algebra(R.impalg)
    one = R.impalg.ambient.one
    table = tuple(P.element(ImpPair(one, R.rep(col.class_of[i]))).i
                  for i in range(C.size))
    return KappaData(C, col, R, P, table)


def check_kappa(data: KappaData) -> CheckReport:
    """kappa identifies exactly the equivalent elements, and collapsing
    kappa gives back the map from the collapse into its own pair algebra."""
    C, col = data.source, data.col
    report = CheckReport(f"kappa on {C.name}")
    bad = None
    for i in range(C.size):
        for j in range(C.size):
            if (data.table[i] == data.table[j]) != (col.class_of[i] == col.class_of[j]):
                bad = (C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                break
        if bad:
            break
    report.add("identifies-exactly-sim", bad is None, witness=bad)

    iota = iota_transformation(data.realized.impalg, data.pairs)
    col_pairs = iota.col
    bad = None
    for cid in range(col.size):
        lhs = iota(data.realized.rep(cid))
        rhs = col_pairs.class_of[data.table[col.classes[cid][0]]]
        if lhs != rhs:
            bad = (f"class {cid}",)
            break
    report.add("collapse-of-kappa-is-iota", bad is None, witness=bad)
    return report
