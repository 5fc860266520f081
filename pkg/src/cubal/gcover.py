"""Inner implication algebras that cover the collapse.

A g-cover is an upward closed implication subalgebra J meeting every
equivalence class exactly once, in such a way that the quotient map
restricted to J is an isomorphism onto the collapse.  Every algebra of
pairs has one, namely the pairs with first component 1, and conversely
an algebra with a g-cover is isomorphic to the algebra of pairs over
it: the reconstruction sends x to

    (beta | x,  (beta | x) -> beta)       beta the J-element equivalent to x.

When the algebra satisfies the meet axiom, every g-cover is closed
under the meets that exist.
"""

from __future__ import annotations

from .collapse import Collapse, dimp_i, preceq_i, sim_i, star_i
from .constructions import ImpPair, pair_algebra
from .cubic import CElem, CubicAlg, CubicMorphism, is_upclosed, restrict
from .errors import NoGCoverError, PreconditionError, SizeCapError
from .implication import RealizedImp, envelope_lattice, realize_implication_algebra
from .report import CheckReport

MAX_GCOVER_ELEMENTS = 256


def gcover_report(C: CubicAlg, indices, col: Collapse | None = None) -> CheckReport:
    """Everything the definition asks of J, as separate checks."""
    col = col if col is not None else Collapse(C)
    J = sorted(set(C._own(i) if isinstance(i, CElem) else int(i) for i in indices))
    jset = set(J)
    report = CheckReport(f"g-cover candidate in {C.name}")

    def w(*idx):
        return tuple(C._fmt(C.payloads[i]) for i in idx)

    report.add("contains-top", C.one_i in jset)
    bad = None
    for i in J:
        up = C.up_mask(i)
        k = 0
        while up:
            if up & 1 and k not in jset:
                bad = w(i, k)
                break
            up >>= 1
            k += 1
        if bad:
            break
    report.add("upward-closed", bad is None, witness=bad)

    bad = None
    for members in col.classes:
        hits = [i for i in members if i in jset]
        if len(hits) != 1:
            bad = tuple(C._fmt(C.payloads[i]) for i in members) + (f"hit {len(hits)}",)
            break
    report.add("one-per-class", bad is None, witness=bad)

    if not report.ok:
        report.add("quotient-join", False, note="skipped: not a transversal")
        report.add("quotient-implies", False, note="skipped: not a transversal")
        return report

    bad_j = bad_i = None
    for a in J:
        for b in J:
            if bad_j is None and \
                    col.class_of[C.join_i(a, b)] != col.class_of[star_i(C, a, b)]:
                bad_j = w(a, b)
            if bad_i is None and \
                    col.class_of[C.imp_i(a, b)] != col.class_of[dimp_i(C, a, b)]:
                bad_i = w(a, b)
    report.add("quotient-join", bad_j is None, witness=bad_j)
    report.add("quotient-implies", bad_i is None, witness=bad_i)
    return report


def is_gcover(C: CubicAlg, indices, col: Collapse | None = None) -> bool:
    return gcover_report(C, indices, col).ok


def is_gfilter(C: CubicAlg, indices, col: Collapse | None = None) -> bool:
    """A g-cover closed under whatever meets the order provides."""
    if not is_gcover(C, indices, col):
        return False
    J = set(C._own(i) if isinstance(i, CElem) else int(i) for i in indices)
    for a in J:
        for b in J:
            m = C.poset_meet_i(a, b)
            if m is not None and m not in J:
                return False
    return True


def find_gcovers(C: CubicAlg, col: Collapse | None = None,
                 first_only: bool = False,
                 max_size: int = MAX_GCOVER_ELEMENTS) -> list[tuple[int, ...]]:
    """All g-covers, as sorted index tuples.

    Searches one representative per class, top classes first, pruning
    choices whose strict upward cone is not already in the set.
    """
    if C.size > max_size:
        raise SizeCapError(
            f"g-cover search capped at {max_size} elements, {C.name} has {C.size}")
    col = col if col is not None else Collapse(C)
    order = sorted(range(col.size),
                   key=lambda c: (sum(1 for d in range(col.size) if col.leq_c(c, d)), c))
    found: list[tuple[int, ...]] = []
    chosen_mask = 0
    chosen: list[int] = []

    def descend(step: int) -> bool:
        nonlocal chosen_mask
        if step == len(order):
            cand = tuple(sorted(chosen))
            if gcover_report(C, cand, col).ok:
                found.append(cand)
                return first_only
            return False
        for i in col.classes[order[step]]:
            if C.up_mask(i) & ~chosen_mask != 1 << i:
                continue
            chosen.append(i)
            chosen_mask |= 1 << i
            done = descend(step + 1)
            chosen.pop()
            chosen_mask &= ~(1 << i)
            if done:
                return True
        return False

    descend(0)
    return sorted(found)


def gcover(C: CubicAlg, col: Collapse | None = None) -> tuple[int, ...]:
    """Some g-cover, or a refusal."""
    hits = find_gcovers(C, col, first_only=True)
    if not hits:
        raise NoGCoverError(f"{C.name} has no g-cover")
    return hits[0]


def alpha_beta(C: CubicAlg, J, x: CElem, col: Collapse | None = None) -> tuple[CElem, CElem]:
    """The unique pair beta <= alpha in J with delta(alpha, beta) = x.

    beta is the J-element equivalent to x and alpha is beta | x.
    """
    col = col if col is not None else Collapse(C)
    jset = set(C._own(i) if isinstance(i, CElem) else int(i) for i in J)
    xi = C._own(x)
    hits = [i for i in col.classes[col.class_of[xi]] if i in jset]
    if len(hits) != 1:
        raise PreconditionError("not a transversal at the class of x")
    beta = hits[0]
    alpha = C.join_i(beta, xi)
    if C.delta_i(alpha, beta) != xi:
        raise PreconditionError("J is not a g-cover at x")
    return C.el(alpha), C.el(beta)


def realize_gcover(C: CubicAlg, J) -> RealizedImp:
    """J with the inherited order, as a standalone implication algebra."""
    handles = sorted(set(C._own(i) if isinstance(i, CElem) else int(i) for i in J))
    return realize_implication_algebra(handles, C.leq_i, C.join_i)


def reconstruct(C: CubicAlg, J, col: Collapse | None = None) -> CubicMorphism:
    """Isomorphism from the algebra onto the pairs over a g-cover."""
    col = col if col is not None else Collapse(C)
    R = realize_gcover(C, J)
    P = pair_algebra(R.impalg)
    jset = set(C._own(i) if isinstance(i, CElem) else int(i) for i in J)

    def phi(x: CElem) -> CElem:
        xi = C._own(x)
        hits = [i for i in col.classes[col.class_of[xi]] if i in jset]
        if len(hits) != 1:
            raise PreconditionError("not a transversal at the class of x")
        beta = hits[0]
        alpha = C.join_i(beta, xi)
        return P.element(ImpPair(R.rep(alpha), R.rep(C.imp_i(alpha, beta))))

    return CubicMorphism.from_function(C, P, phi)


def gcover_restrict(M: CubicAlg, sub_members, J) -> tuple[CubicAlg, tuple[int, ...]]:
    """Cut an upward closed subalgebra down along with its share of J.

    The subset must be closed upward and under the difference, or the
    cut is not an algebra in its own right.  Returns the restricted
    algebra and J's trace in the new indexing; the trace covers it.
    """
    members = sorted(set(M._own(i) if isinstance(i, CElem) else int(i)
                         for i in sub_members))
    if not is_upclosed(M, members):
        raise PreconditionError("restriction target must be upward closed")
    mset = set(members)
    for yi in members:
        for xi in members:
            d = M._delta[yi][xi]
            if d != -1 and d not in mset:
                raise PreconditionError(
                    "restriction target is not closed under the difference",
                    )
    sub = restrict(M, members)
    pos = {old: new for new, old in enumerate(members)}
    jset = set(M._own(i) if isinstance(i, CElem) else int(i) for i in J)
    trace = tuple(pos[i] for i in members if i in jset)
    return sub, trace


def finite_envelope(C: CubicAlg, J=None) -> tuple[CubicAlg, CubicMorphism]:
    """The enveloping algebra: pairs over the meet closure of a g-cover.

    Every meet exists there, so the envelope satisfies the meet axiom,
    and the reconstruction map lands inside it as an embedding.
    """
    if J is None:
        J = gcover(C)
    col = Collapse(C)
    R = realize_gcover(C, J)
    closed = envelope_lattice(R.impalg)
    P = pair_algebra(closed)
    jset = set(C._own(i) if isinstance(i, CElem) else int(i) for i in J)

    def phi(x: CElem) -> CElem:
        xi = C._own(x)
        beta = next(i for i in col.classes[col.class_of[xi]] if i in jset)
        alpha = C.join_i(beta, xi)
        return P.element(ImpPair(R.rep(alpha), R.rep(C.imp_i(alpha, beta))))

    return P, CubicMorphism.from_function(C, P, phi)
