"""The standard finite models: signed sets, intervals, and pairs.

signed_set_algebra builds the algebra of disjoint signed subsets of a
universe, interval_algebra the algebra of intervals of a Boolean algebra,
and pair_algebra the algebra of joint-top pairs over an implication
algebra.  The isomorphisms tying them together are built as explicit
morphisms so they can be validated like any other map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolean import BElem, BoolAlg
from .cubic import CubicAlg, CElem, CubicMorphism
from .errors import MixedAlgebraError, PreconditionError, SizeCapError
from .implication import ImpAlg, ImpMorphism, imp_meet

MAX_SIGNED_NAMES = 7
MAX_INTERVAL_ATOMS = 3
SIGNED_UNIVERSE = "xyzwvut"


@dataclass(frozen=True)
class SignedSet:
    """Disjoint pair of subsets: members held positively and negatively."""

    pos: frozenset
    neg: frozenset


def sgn(pos: Iterable = (), neg: Iterable = ()) -> SignedSet:
    p, n = frozenset(pos), frozenset(neg)
    if p & n:
        raise PreconditionError(f"signed set holds {sorted(p & n)} with both signs")
    return SignedSet(p, n)


def _universe(names: int | Sequence[str]) -> tuple[str, ...]:
    if isinstance(names, int):
        if names < 0 or names > MAX_SIGNED_NAMES:
            raise SizeCapError(f"universe of {names} exceeds the cap {MAX_SIGNED_NAMES}")
        return tuple("abcdefghijklmnop"[:names])
    return tuple(names)


def signed_set_algebra(names: int | Sequence[str]) -> CubicAlg:
    """All signed subsets of the universe, 3^n of them.

    Accepts a size or the member names themselves.  The top is the empty
    signed set; lower elements commit more members to a sign.  Join keeps
    the commitments common to both sides, and the difference against y
    flips every commitment of x that y leaves open.
    """
    names = _universe(names)
    if len(set(names)) != len(names):
        raise ValueError("universe names must be distinct")
    if len(names) > MAX_SIGNED_NAMES:
        raise SizeCapError(f"universe of {len(names)} exceeds the cap {MAX_SIGNED_NAMES}")
    rank = {v: k for k, v in enumerate(names)}

    payloads = []
    for code in range(3 ** len(names)):
        pos, neg, c = [], [], code
        for v in names:
            c, r = divmod(c, 3)
            if r == 1:
                pos.append(v)
            elif r == 2:
                neg.append(v)
        payloads.append(SignedSet(frozenset(pos), frozenset(neg)))

    def join(x: SignedSet, y: SignedSet) -> SignedSet:
        return SignedSet(x.pos & y.pos, x.neg & y.neg)

    def delta(y: SignedSet, x: SignedSet) -> SignedSet:
        return SignedSet(y.pos | (x.neg - y.neg), y.neg | (x.pos - y.pos))

    def fmt(s: SignedSet) -> str:
        if not s.pos and not s.neg:
            return "()"
        parts = [("+" if v in s.pos else "-") + v
                 for v in sorted(s.pos | s.neg, key=rank.__getitem__)]
        return "(" + "".join(parts) + ")"

    return CubicAlg(payloads, SignedSet(frozenset(), frozenset()), join, delta,
                    name=f"S({','.join(names)})", fmt=fmt)


@dataclass(frozen=True)
class Interval:
    lo: BElem
    hi: BElem


def interval(lo: BElem, hi: BElem) -> Interval:
    if lo.alg is not hi.alg:
        raise MixedAlgebraError("interval endpoints from different algebras")
    if not lo.alg.leq(lo, hi):
        raise PreconditionError(f"interval needs {lo} below {hi}")
    return Interval(lo, hi)


def interval_algebra(B: BoolAlg) -> CubicAlg:
    """Intervals of B ordered by containment, with [0,1] on top.

    Join is the interval hull.  The difference of x = [c,d] inside
    y = [a,b] reflects x across the midpoint of y: the result is
    [a | (b & ~d), b & (a | ~c)], the interval of complements of x taken
    relative to y.
    """
    if B.n_atoms > MAX_INTERVAL_ATOMS:
        raise SizeCapError(f"{B.n_atoms} atoms exceed the interval cap {MAX_INTERVAL_ATOMS}")
    payloads = [Interval(B.element(lo), B.element(hi))
                for lo in range(B.size) for hi in range(B.size)
                if lo & ~hi == 0]

    def join(x: Interval, y: Interval) -> Interval:
        return Interval(B.element(x.lo.bits & y.lo.bits),
                        B.element(x.hi.bits | y.hi.bits))

    def delta(y: Interval, x: Interval) -> Interval:
        a, b = y.lo.bits, y.hi.bits
        c, d = x.lo.bits, x.hi.bits
        full = B.full_mask
        return Interval(B.element(a | (b & full & ~d)),
                        B.element(b & (a | (full & ~c))))

    def fmt(v: Interval) -> str:
        return f"[{B.element_str(v.lo)},{B.element_str(v.hi)}]"

    return CubicAlg(payloads, Interval(B.zero, B.one), join, delta,
                    name=f"I(2^{B.n_atoms})", fmt=fmt)


@dataclass(frozen=True)
class ImpPair:
    a: BElem
    b: BElem


def pair(a: BElem, b: BElem) -> ImpPair:
    if a.alg is not b.alg:
        raise MixedAlgebraError("pair components from different ambients")
    return ImpPair(a, b)


def pair_algebra(I: ImpAlg) -> CubicAlg:
    """Pairs from I that join to the top and have a meet in I.

    The order and join are componentwise, the top is the pair of tops, and
    the difference swaps roles through implication:

        delta((a,b), (c,d)) = (a ^ (b -> d), b ^ (a -> c))

    where ^ is the meet taken inside I.  Both meets exist whenever the
    operands are in the carrier, which the table construction confirms.
    """
    B = I.ambient
    full = B.full_mask
    payloads = []
    for ab in sorted(I.carrier):
        for bb in sorted(I.carrier):
            if ab | bb == full and I.meet_bits(ab, bb) is not None:
                payloads.append(ImpPair(B.element(ab), B.element(bb)))

    def join(x: ImpPair, y: ImpPair) -> ImpPair:
        return ImpPair(B.element(x.a.bits | y.a.bits), B.element(x.b.bits | y.b.bits))

    def delta(y: ImpPair, x: ImpPair) -> ImpPair:
        left = I.meet(y.a, I.implies(y.b, x.b))
        right = I.meet(y.b, I.implies(y.a, x.a))
        if left is None or right is None:
            raise PreconditionError(f"difference meets missing at {fmt(y)}, {fmt(x)}")
        return ImpPair(left, right)

    def fmt(p: ImpPair) -> str:
        return f"<{B.element_str(p.a)},{B.element_str(p.b)}>"

    return CubicAlg(payloads, ImpPair(B.one, B.one), join, delta,
                    name=f"II({len(I)})", fmt=fmt)


def bool_as_impalg(B: BoolAlg) -> ImpAlg:
    """The whole Boolean algebra viewed as an implication algebra."""
    return ImpAlg(B, range(B.size))


def embed_e(P: CubicAlg, x: BElem) -> CElem:
    """The standard embedding a -> (1, a) into the pair algebra over a's algebra."""
    return P.element(ImpPair(x.alg.one, x))


def iso_pair_interval(B: BoolAlg, P: CubicAlg | None = None,
                      V: CubicAlg | None = None) -> CubicMorphism:
    """Pairs over the full Boolean algebra match intervals: (a,b) -> [~a, b]."""
    P = P if P is not None else pair_algebra(bool_as_impalg(B))
    V = V if V is not None else interval_algebra(B)

    def fn(x: CElem) -> CElem:
        p: ImpPair = x.payload
        return V.element(Interval(B.complement(p.a), p.b))

    return CubicMorphism.from_function(P, V, fn)


def iso_signed_interval(names: int | Sequence[str], S: CubicAlg | None = None,
                        V: CubicAlg | None = None) -> CubicMorphism:
    """Signed sets match intervals of the power set: (A,B) -> [A, X - B]."""
    names = _universe(names)
    S = S if S is not None else signed_set_algebra(names)
    B = BoolAlg(len(names), tuple(names))
    V = V if V is not None else interval_algebra(B)

    def bits(members: frozenset) -> int:
        out = 0
        for v in members:
            out |= 1 << B._atom_index[v]
        return out

    def fn(x: CElem) -> CElem:
        s: SignedSet = x.payload
        return V.element(Interval(B.element(bits(s.pos)),
                                  B.element(B.full_mask & ~bits(s.neg))))

    return CubicMorphism.from_function(S, V, fn)


def functor_I_on_morphism(f: ImpMorphism, P_source: CubicAlg | None = None,
                          P_target: CubicAlg | None = None) -> CubicMorphism:
    """Apply the pair construction to a morphism, componentwise."""
    P_source = P_source if P_source is not None else pair_algebra(f.source)
    P_target = P_target if P_target is not None else pair_algebra(f.target)

    def fn(x: CElem) -> CElem:
        p: ImpPair = x.payload
        return P_target.element(ImpPair(f(p.a), f(p.b)))

    return CubicMorphism.from_function(P_source, P_target, fn)
