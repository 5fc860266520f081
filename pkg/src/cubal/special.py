"""The calculus of special subalgebras.

A special subalgebra is an upward closed implication subalgebra that is
compatible (any two members x, y satisfy x | delta(1, y) = 1) and
absorbs whatever meets the ambient order provides.  Principal up-sets
[g, 1] are the simplest examples; g-covers are the largest ones.

The family supports an intersection, a partial join

    I + J = { f ^ g : f in I, g in J, the meet exists }    (I and J compatible),

a relative complement for J inside I

    J -> I = { h in I : h | g = 1 for every g in J },

and a reflection

    delta(J, I) = delta(1, J -> I) + J          for J inside I.

Collecting the special subalgebras that are Boolean over some g-cover
and ordering them by reverse inclusion yields an atomic algebra with
all meets, into which the original algebra embeds by g -> [g, 1].  Its
minimal elements are exactly the g-covers.
"""

from __future__ import annotations

from .collapse import Collapse, sim_i
from .cubic import CElem, CubicAlg, CubicMorphism
from .errors import LawViolationError, NoGCoverError, PreconditionError, SizeCapError
from .gcover import find_gcovers
from .report import CheckReport

MAX_SPECIAL_ELEMENTS = 64


def as_index_set(C: CubicAlg, A) -> frozenset[int]:
    return frozenset(C._own(x) if isinstance(x, CElem) else int(x) for x in A)


def compatibility_witness(C: CubicAlg, A) -> tuple | None:
    """A pair x, y in A with x | delta(1, y) < 1, if one exists."""
    idx = sorted(as_index_set(C, A))
    one = C.one_i
    for x in idx:
        for y in idx:
            if C.join_i(x, C.delta_i(one, y)) != one:
                return (C._fmt(C.payloads[x]), C._fmt(C.payloads[y]))
    return None


def is_compatible(C: CubicAlg, A) -> bool:
    return compatibility_witness(C, A) is None


def special_report(C: CubicAlg, A) -> CheckReport:
    S = as_index_set(C, A)
    report = CheckReport(f"special-subalgebra candidate in {C.name}")
    report.add("contains-top", C.one_i in S)

    bad = None
    for i in sorted(S):
        up = C.up_mask(i)
        j = 0
        while up:
            if up & 1 and j not in S:
                bad = (C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                break
            up >>= 1
            j += 1
        if bad:
            break
    report.add("upward-closed", bad is None, witness=bad)
    report.add("compatible", *(lambda w: (w is None, w))(compatibility_witness(C, S)))

    bad = None
    for i in sorted(S):
        for j in sorted(S):
            m = C.poset_meet_i(i, j)
            if m is not None and m not in S:
                bad = (C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                break
        if bad:
            break
    report.add("absorbs-meets", bad is None, witness=bad)
    return report


def is_special(C: CubicAlg, A) -> bool:
    return special_report(C, A).ok


def principal_special(C: CubicAlg, g) -> frozenset[int]:
    """The up-set [g, 1]."""
    gi = C._own(g) if isinstance(g, CElem) else int(g)
    up = C.up_mask(gi)
    return frozenset(i for i in range(C.size) if up >> i & 1)


def special_closure(C: CubicAlg, A) -> frozenset[int]:
    """Smallest special subalgebra containing a compatible set."""
    S = set(as_index_set(C, A))
    if compatibility_witness(C, S) is not None:
        raise PreconditionError("closure asks for a compatible starting set")
    S.add(C.one_i)
    grew = True
    while grew:
        grew = False
        for i in list(S):
            up = C.up_mask(i)
            j = 0
            while up:
                if up & 1 and j not in S:
                    S.add(j)
                    grew = True
                up >>= 1
                j += 1
        for i in list(S):
            for j in list(S):
                m = C.poset_meet_i(i, j)
                if m is not None and m not in S:
                    S.add(m)
                    grew = True
    out = frozenset(S)
    w = compatibility_witness(C, out)
    if w is not None:
        raise LawViolationError("closure of a compatible set lost compatibility",
                                witness=w)
    return out


def special_meet(C: CubicAlg, I, J) -> frozenset[int]:
    """Intersection; the meet under reverse inclusion."""
    return as_index_set(C, I) & as_index_set(C, J)


def special_join(C: CubicAlg, I, J) -> frozenset[int] | None:
    """All existing meets f ^ g across the two algebras, or None when
    the union is not compatible."""
    si, sj = as_index_set(C, I), as_index_set(C, J)
    if compatibility_witness(C, si | sj) is not None:
        return None
    out = set()
    for f in si:
        for g in sj:
            m = C.poset_meet_i(f, g)
            if m is not None:
                out.add(m)
    return frozenset(out)


def sub_g(C: CubicAlg, I, g) -> frozenset[int]:
    """The reflected copy I_g = { delta(g | f, f) : f in I }."""
    gi = C._own(g) if isinstance(g, CElem) else int(g)
    return frozenset(C.delta_i(C.join_i(gi, f), f) for f in as_index_set(C, I))


def rel_complement(C: CubicAlg, J, I) -> frozenset[int]:
    """J -> I: the members of I joining every member of J to 1."""
    si, sj = as_index_set(C, I), as_index_set(C, J)
    if not sj <= si:
        raise PreconditionError("relative complement needs J inside I")
    one = C.one_i
    return frozenset(h for h in si
                     if all(C.join_i(h, g) == one for g in sj))


def imp_image(C: CubicAlg, g, I) -> frozenset[int]:
    """Elementwise g -> f over I; agrees with [g,1] -> I."""
    gi = C._own(g) if isinstance(g, CElem) else int(g)
    return frozenset(C.imp_i(gi, f) for f in as_index_set(C, I))


def delta_special(C: CubicAlg, J, I) -> frozenset[int]:
    """delta(J, I) = delta(1, J -> I) + J, for J inside I."""
    T = rel_complement(C, J, I)
    one = C.one_i
    T1 = frozenset(C.delta_i(one, h) for h in T)
    out = special_join(C, T1, as_index_set(C, J))
    if out is None:
        raise LawViolationError("reflected complement must be compatible with J")
    return out


def is_weakly_boolean(C: CubicAlg, Q, P) -> bool:
    """(Q -> P) -> P gives back Q."""
    sq, sp = as_index_set(C, Q), as_index_set(C, P)
    if not sq <= sp:
        return False
    return rel_complement(C, rel_complement(C, sq, sp), sp) == sq


def is_boolean(C: CubicAlg, Q, P) -> bool:
    """Q and its complement join to the whole of P."""
    sq, sp = as_index_set(C, Q), as_index_set(C, P)
    if not sq <= sp:
        return False
    return special_join(C, sq, rel_complement(C, sq, sp)) == sp


def sim_special(C: CubicAlg, P, R, col: Collapse | None = None) -> bool:
    """Equivalent subalgebras: same image in the collapse."""
    col = col if col is not None else Collapse(C)
    ip = {col.class_of[i] for i in as_index_set(C, P)}
    ir = {col.class_of[i] for i in as_index_set(C, R)}
    return ip == ir


def beta_transfer(C: CubicAlg, P, R, f, col: Collapse | None = None) -> CElem:
    """The unique member of R equivalent to f."""
    fi = C._own(f) if isinstance(f, CElem) else int(f)
    hits = [i for i in sorted(as_index_set(C, R)) if sim_i(C, fi, i)]
    if len(hits) != 1:
        raise PreconditionError(f"expected one match in R, found {len(hits)}")
    return C.el(hits[0])


def enumerate_special_subalgebras(C: CubicAlg,
                                  max_size: int = MAX_SPECIAL_ELEMENTS
                                  ) -> list[tuple[int, ...]]:
    """Every special subalgebra, each as a sorted index tuple.

    Walks subsets in a top-down linear extension; an element can join
    only once everything above it is in, and only while the set stays
    pairwise compatible.  Sets that also absorb meets are kept.
    """
    if C.size > max_size:
        raise SizeCapError(
            f"special-subalgebra search capped at {max_size} elements, "
            f"{C.name} has {C.size}")
    n = C.size
    one = C.one_i
    rank = sorted(range(n), key=lambda i: (bin(C.up_mask(i)).count("1"), i))
    pos = {i: r for r, i in enumerate(rank)}
    dt_one = [C.delta_i(one, i) for i in range(n)]

    def meet_closed(S: set[int]) -> bool:
        return all(C.poset_meet_i(a, b) in S or C.poset_meet_i(a, b) is None
                   for a in S for b in S)

    out = []
    S = {one}
    mask = 1 << one

    def grow(min_rank: int):
        nonlocal mask
        if meet_closed(S):
            out.append(tuple(sorted(S)))
        for r in range(min_rank, n):
            i = rank[r]
            if C.up_mask(i) & ~mask != 1 << i:
                continue
            if any(C.join_i(x, dt_one[i]) != one or C.join_i(i, dt_one[x]) != one
                   for x in S):
                continue
            S.add(i)
            mask |= 1 << i
            grow(r + 1)
            S.discard(i)
            mask &= ~(1 << i)

    grow(pos[one] + 1)
    return sorted(out, key=lambda t: (len(t), t))


def boolean_specials(C: CubicAlg, P, specials=None) -> list[tuple[int, ...]]:
    """The subalgebras Boolean over P, drawn from an optional pre-list."""
    sp = as_index_set(C, P)
    if specials is None:
        specials = enumerate_special_subalgebras(C)
    return [Q for Q in specials if is_boolean(C, frozenset(Q), sp)]


def build_LsB(C: CubicAlg, max_size: int = MAX_SPECIAL_ELEMENTS
              ) -> tuple[CubicAlg, CubicMorphism]:
    """The algebra of Boolean-over-a-g-cover special subalgebras.

    Reverse inclusion is the order, so intersection is join and the
    singleton {1} sits on top.  Returns the algebra together with the
    embedding g -> [g, 1].
    """
    if C.size > max_size:
        raise SizeCapError(
            f"special-subalgebra algebra capped at {max_size} elements, "
            f"{C.name} has {C.size}")
    covers = find_gcovers(C)
    if not covers:
        raise NoGCoverError(f"{C.name} has no g-cover")
    cover_sets = [frozenset(J) for J in covers]
    carrier = [frozenset(Q) for Q in enumerate_special_subalgebras(C, max_size)
               if any(frozenset(Q) <= P and is_boolean(C, frozenset(Q), P)
                      for P in cover_sets)]
    payloads = sorted((tuple(sorted(Q)) for Q in carrier),
                      key=lambda t: (-len(t), t))

    def join(a, b):
        return tuple(sorted(set(a) & set(b)))

    def delta(y, x):
        # defined when y is below... the order is reverse inclusion,
        # so x <= y means set(y) <= set(x)
        if not set(y) <= set(x):
            return None
        return tuple(sorted(delta_special(C, frozenset(y), frozenset(x))))

    def fmt(t):
        return "{" + ",".join(C._fmt(C.payloads[i]) for i in t) + "}"

    alg = CubicAlg(payloads, (C.one_i,), join, delta,
                   name=f"sB({C.name})", fmt=fmt)
    embed = CubicMorphism.from_function(
        C, alg, lambda x: alg.element(tuple(sorted(principal_special(C, x)))))
    return alg, embed
