"""Implication algebras realized as up-closed subsets of a Boolean ambient.

The carrier is an upward-closed subset of a BoolAlg containing 1; join and
implication are the ambient operations, which such a subset is closed
under.  Meets are taken inside the carrier: imp_meet(a, b) is the maximum
of the common lower bounds lying in the carrier, which may be absent even
though the ambient meet always exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .boolean import BElem, BoolAlg
from .errors import LawViolationError, MixedAlgebraError, SizeCapError
from .report import CheckReport

MAX_REALIZE_COATOMS = 16


class ImpAlg:
    """Up-closed subset of a Boolean algebra, with ambient join and implies."""

    __slots__ = ("ambient", "carrier")

    def __init__(self, ambient: BoolAlg, carrier_bits: Iterable[int], validate: bool = True):
        self.ambient = ambient
        self.carrier = frozenset(carrier_bits)
        if validate:
            report = self.validate()
            if not report.ok:
                raise LawViolationError("invalid implication-algebra carrier",
                                        witness=report.first_failure())

    def validate(self) -> CheckReport:
        """Check the representation invariants; used by checkers as well."""
        B = self.ambient
        report = CheckReport(f"imp-alg carrier of {B!r}")
        report.add("one-in-carrier", B.full_mask in self.carrier)
        bad = None
        for bits in self.carrier:
            if not 0 <= bits <= B.full_mask:
                bad = bits
                break
        report.add("bits-in-range", bad is None, witness=bad)
        escape = None
        for a in self.carrier:
            extra = B.full_mask & ~a
            sub = extra
            while True:  # walk all supersets of a inside the ambient
                b = a | sub
                if b not in self.carrier:
                    escape = (a, b)
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & extra
            if escape:
                break
        report.add("upward-closed", escape is None,
                   witness=None if escape is None else tuple(str(B.element(b)) for b in escape))
        return report

    # -- membership and element access -------------------------------------

    def __contains__(self, x: BElem) -> bool:
        return x.alg is self.ambient and x.bits in self.carrier

    def __len__(self) -> int:
        return len(self.carrier)

    def _own(self, x: BElem) -> int:
        if x.alg is not self.ambient:
            raise MixedAlgebraError(f"element {x} has a different ambient")
        if x.bits not in self.carrier:
            raise MixedAlgebraError(f"element {x} is not in the carrier")
        return x.bits

    def elements(self) -> list[BElem]:
        return [self.ambient.element(bits) for bits in sorted(self.carrier)]

    @property
    def top(self) -> BElem:
        return self.ambient.one

    # -- operations ---------------------------------------------------------

    def leq(self, x: BElem, y: BElem) -> bool:
        return self._own(x) & ~self._own(y) == 0

    def join(self, x: BElem, y: BElem) -> BElem:
        return self.ambient.element(self._own(x) | self._own(y))

    def implies(self, x: BElem, y: BElem) -> BElem:
        return self.ambient.element((self.ambient.full_mask & ~self._own(x)) | self._own(y))

    def meet(self, x: BElem, y: BElem) -> BElem | None:
        return imp_meet(self, x, y)

    def is_lattice(self) -> bool:
        return all(self.meet_bits(a, b) is not None
                   for a in self.carrier for b in self.carrier)

    def meet_bits(self, a: int, b: int) -> int | None:
        lower = [c for c in self.carrier if c & ~a == 0 and c & ~b == 0]
        best = None
        for c in lower:
            if all(d & ~c == 0 for d in lower):
                best = c
                break
        return best

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        B = self.ambient
        return {
            "type": "imp",
            "ambient": B.to_json(),
            "carrier": [B.element_to_json(B.element(bits)) for bits in sorted(self.carrier)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ImpAlg":
        if data.get("type") != "imp":
            raise ValueError(f"not an implication-algebra payload: {data.get('type')!r}")
        B = BoolAlg.from_json(data["ambient"])
        bits = {B.element_from_json(names).bits for names in data["carrier"]}
        return cls(B, bits)

    def __repr__(self) -> str:
        names = ",".join(str(e) for e in self.elements())
        return f"ImpAlg({{{names}}} in {self.ambient!r})"


def mk_implication_algebra(ambient: BoolAlg, generators: Iterable[BElem]) -> ImpAlg:
    """Smallest valid carrier containing the generators and 1.

    Upward closure subsumes closure under join and implies: both produce
    elements above an operand, so an up-closed set is closed under them.
    """
    seed = {ambient.full_mask}
    for g in generators:
        if g.alg is not ambient:
            raise MixedAlgebraError(f"generator {g} has a different ambient")
        seed.add(g.bits)
    closed = set()
    for a in seed:
        extra = ambient.full_mask & ~a
        sub = extra
        while True:
            closed.add(a | sub)
            if sub == 0:
                break
            sub = (sub - 1) & extra
    return ImpAlg(ambient, closed)


def imp_meet(I: ImpAlg, x: BElem, y: BElem) -> BElem | None:
    """Greatest lower bound of x and y inside the carrier, if one exists.

    This is the maximum of the common lower bounds lying in I, not the
    ambient meet; the two agree exactly when the ambient meet is in I.
    """
    best = I.meet_bits(I._own(x), I._own(y))
    return None if best is None else I.ambient.element(best)


def check_implication_axioms(I: ImpAlg) -> CheckReport:
    """Representation invariants plus the implication laws on the carrier."""
    report = CheckReport(f"implication axioms on {I!r}")
    for item in I.validate().items:
        report.items.append(item)
    B = I.ambient
    full = B.full_mask
    carrier = sorted(I.carrier)

    def imp(a: int, b: int) -> int:
        return (full & ~a) | b

    w_join = w_imp = None
    for a in carrier:
        for b in carrier:
            if a | b not in I.carrier and w_join is None:
                w_join = (a, b)
            if imp(a, b) not in I.carrier and w_imp is None:
                w_imp = (a, b)
    report.add("closed-under-join", w_join is None, witness=w_join)
    report.add("closed-under-implies", w_imp is None, witness=w_imp)

    w_rec = w_con = None
    for a in carrier:
        for b in carrier:
            if imp(imp(a, b), b) != a | b and w_rec is None:
                w_rec = (str(B.element(a)), str(B.element(b)))
            if imp(imp(a, b), a) != a and w_con is None:
                w_con = (str(B.element(a)), str(B.element(b)))
    report.add("join-recovery", w_rec is None, witness=w_rec)
    report.add("contraction", w_con is None, witness=w_con)

    w_exc = None
    for a in carrier:
        for b in carrier:
            for c in carrier:
                if imp(a, imp(b, c)) != imp(b, imp(a, c)):
                    w_exc = tuple(str(B.element(t)) for t in (a, b, c))
                    break
            if w_exc:
                break
        if w_exc:
            break
    report.add("exchange", w_exc is None, witness=w_exc)
    return report


def envelope_lattice(I: ImpAlg) -> ImpAlg:
    """Close the carrier of I under ambient meets.

    The result has all binary meets and still contains I as an upper
    segment, since the meet-closure of an up-closed set stays up-closed.
    """
    closed = set(I.carrier)
    frontier = list(closed)
    while frontier:
        fresh = []
        for a in frontier:
            for b in list(closed):
                m = a & b
                if m not in closed:
                    closed.add(m)
                    fresh.append(m)
        frontier = fresh
    out = ImpAlg(I.ambient, closed)
    assert out.is_lattice()
    return out


@dataclass(frozen=True)
class ImpMorphism:
    """Map between implication algebras, given elementwise on carrier bits."""

    source: ImpAlg
    target: ImpAlg
    table: tuple[tuple[int, int], ...]  # sorted (source bits, target bits) pairs

    @classmethod
    def from_function(cls, source: ImpAlg, target: ImpAlg,
                      fn: Callable[[BElem], BElem]) -> "ImpMorphism":
        rows = []
        for a in sorted(source.carrier):
            img = fn(source.ambient.element(a))
            if img.bits not in target.carrier or img.alg is not target.ambient:
                raise MixedAlgebraError(f"image of {source.ambient.element(a)} is outside the target")
            rows.append((a, img.bits))
        return cls(source, target, tuple(rows))

    @classmethod
    def identity(cls, I: ImpAlg) -> "ImpMorphism":
        return cls(I, I, tuple((a, a) for a in sorted(I.carrier)))

    @classmethod
    def inclusion(cls, I: ImpAlg, J: ImpAlg) -> "ImpMorphism":
        if I.ambient is not J.ambient or not I.carrier <= J.carrier:
            raise MixedAlgebraError("inclusion needs a sub-carrier in the same ambient")
        return cls(I, J, tuple((a, a) for a in sorted(I.carrier)))

    def _map(self) -> dict[int, int]:
        return dict(self.table)

    def map_bits(self, a: int) -> int:
        return self._map()[a]

    def __call__(self, x: BElem) -> BElem:
        return self.target.ambient.element(self._map()[self.source._own(x)])

    def compose(self, other: "ImpMorphism") -> "ImpMorphism":
        """self after other."""
        if other.target is not self.source:
            raise MixedAlgebraError("composition mismatch")
        om, sm = other._map(), self._map()
        return ImpMorphism(other.source, self.target,
                           tuple((a, sm[om[a]]) for a in sorted(om)))

    def validate(self) -> CheckReport:
        """Preserves 1, join, implies, and every meet that exists in the source."""
        S, T = self.source, self.target
        fm = self._map()
        full_s, full_t = S.ambient.full_mask, T.ambient.full_mask
        report = CheckReport("implication morphism")
        report.add("total", set(fm) == set(S.carrier), witness=set(S.carrier) ^ set(fm))
        report.add("preserves-top", fm.get(full_s) == full_t)
        w_join = w_imp = w_meet = None
        for a in sorted(S.carrier):
            for b in sorted(S.carrier):
                if fm[a | b] != fm[a] | fm[b] and w_join is None:
                    w_join = (a, b)
                sa = (full_s & ~a) | b
                ta = (full_t & ~fm[a]) | fm[b]
                if fm[sa] != ta and w_imp is None:
                    w_imp = (a, b)
                m = S.meet_bits(a, b)
                if m is not None:
                    tm = T.meet_bits(fm[a], fm[b])
                    if tm != fm[m] and w_meet is None:
                        w_meet = (a, b, m, tm)
        report.add("preserves-join", w_join is None, witness=w_join)
        report.add("preserves-implies", w_imp is None, witness=w_imp)
        report.add("preserves-existing-meets", w_meet is None, witness=w_meet)
        return report

    def is_injective(self) -> bool:
        vals = [b for _, b in self.table]
        return len(vals) == len(set(vals))

    def is_surjective(self) -> bool:
        return {b for _, b in self.table} == set(self.target.carrier)


def find_imp_isomorphism(I: ImpAlg, J: ImpAlg) -> ImpMorphism | None:
    """Search for an isomorphism between two implication algebras.

    Backtracking over carrier elements, matching only elements whose
    up-set and down-set sizes agree and pruning against the operations
    on everything already matched.  Returns a validated morphism or
    None when the two are not isomorphic.
    """
    if len(I) != len(J):
        return None
    si, sj = sorted(I.carrier), sorted(J.carrier)
    full_i, full_j = I.ambient.full_mask, J.ambient.full_mask

    def prof(carrier, a):
        up = sum(1 for b in carrier if a & ~b == 0)
        dn = sum(1 for b in carrier if b & ~a == 0)
        return (up, dn)

    pi = {a: prof(si, a) for a in si}
    pj = {b: prof(sj, b) for b in sj}
    if sorted(pi.values()) != sorted(pj.values()):
        return None

    order = sorted(si, key=lambda a: (pi[a], a))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def consistent(a: int, b: int) -> bool:
        for c, d in assign.items():
            if (a & ~c == 0) != (b & ~d == 0) or (c & ~a == 0) != (d & ~b == 0):
                return False
        items = list(assign.items()) + [(a, b)]
        for c1, d1 in items:
            for c2, d2 in items:
                j = assign.get(c1 | c2, b if c1 | c2 == a else None)
                if j is not None and j != d1 | d2:
                    return False
                e = (full_i & ~c1) | c2
                f = assign.get(e, b if e == a else None)
                if f is not None and f != (full_j & ~d1) | d2:
                    return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        a = order[k]
        for b in sj:
            if b in used or pj[b] != pi[a] or not consistent(a, b):
                continue
            assign[a] = b
            used.add(b)
            if extend(k + 1):
                return True
            del assign[a]
            used.discard(b)
        return False

    if not extend(0):
        return None
    iso = ImpMorphism(I, J, tuple(sorted(assign.items())))
    if not iso.validate().ok:
        return None
    return iso


@dataclass(frozen=True)
class RealizedImp:
    """A finite implication algebra re-realized as a concrete ImpAlg.

    to_rep maps abstract handles to carrier elements, from_rep inverts it
    (keyed by carrier bits).
    """

    impalg: ImpAlg
    to_rep: dict
    from_rep: dict

    def rep(self, handle) -> BElem:
        return self.to_rep[handle]

    def handle(self, x: BElem) -> object:
        return self.from_rep[x.bits]


def realize_implication_algebra(handles: Sequence, leq: Callable, join: Callable) -> RealizedImp:
    """Embed a finite implication algebra onto an up-closed Boolean subset.

    The ambient is the powerset of the coatoms; a handle q maps to the set
    of coatoms NOT above q.  For a structure whose principal up-intervals
    are Boolean this is an isomorphism onto an up-closed carrier, which is
    verified here and reported as a violation otherwise.
    """
    handles = list(handles)
    if not handles:
        raise LawViolationError("empty carrier has no implication structure")
    tops = [h for h in handles if all(leq(g, h) for g in handles)]
    if len(tops) != 1:
        raise LawViolationError("carrier must have a unique top", witness=tops)
    top = tops[0]
    coatoms = [h for h in handles
               if h != top and not any(g != h and g != top and leq(h, g) for g in handles)]
    if len(coatoms) > MAX_REALIZE_COATOMS:
        raise SizeCapError(f"too many coatoms to realize: {len(coatoms)}")
    B = BoolAlg(len(coatoms), tuple(f"c{i}" for i in range(len(coatoms))))

    def phi_bits(q) -> int:
        bits = 0
        for i, c in enumerate(coatoms):
            if not leq(q, c):
                bits |= 1 << i
        return bits

    to_rep = {q: B.element(phi_bits(q)) for q in handles}
    if len({e.bits for e in to_rep.values()}) != len(handles):
        raise LawViolationError("coatom sets do not separate elements",
                                witness=[str(q) for q in handles])
    for q1 in handles:
        for q2 in handles:
            embeds = to_rep[q1].bits & ~to_rep[q2].bits == 0
            if embeds != leq(q1, q2):
                raise LawViolationError("order not preserved and reflected", witness=(q1, q2))
            if to_rep[join(q1, q2)].bits != to_rep[q1].bits | to_rep[q2].bits:
                raise LawViolationError("join not preserved", witness=(q1, q2))
    impalg = ImpAlg(B, {e.bits for e in to_rep.values()})
    from_rep = {to_rep[q].bits: q for q in handles}
    return RealizedImp(impalg, to_rep, from_rep)
