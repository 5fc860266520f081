"""Finite Boolean algebras on named atoms.

An algebra is the powerset of up to 16 named atoms; an element is an atom
bitset tagged with its owning algebra.  Elements of different instances
never mix: every operation checks the tag and raises MixedAlgebraError on
a mismatch rather than coercing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MixedAlgebraError, SizeCapError

MAX_ATOMS = 16
MAX_UPSET_ATOMS = 3

_DEFAULT_NAMES = "abcdefghijklmnop"


@dataclass(frozen=True, repr=False)
class BElem:
    """One element of a BoolAlg, as an atom bitset."""

    alg: "BoolAlg"
    bits: int

    def __repr__(self) -> str:
        return f"BElem({self.alg.element_str(self)})"

    def __str__(self) -> str:
        return self.alg.element_str(self)

    def __or__(self, other: "BElem") -> "BElem":
        return self.alg.join(self, other)

    def __and__(self, other: "BElem") -> "BElem":
        return self.alg.meet(self, other)

    def __invert__(self) -> "BElem":
        return self.alg.complement(self)

    def __le__(self, other: "BElem") -> bool:
        return self.alg.leq(self, other)


class BoolAlg:
    """Boolean algebra 2^atoms with bitset elements."""

    __slots__ = ("n_atoms", "atom_names", "full_mask", "_atom_index")

    def __init__(self, n_atoms: int, atom_names: Iterable[str] | None = None):
        if not 0 <= n_atoms <= MAX_ATOMS:
            raise SizeCapError(f"atom count must be between 0 and {MAX_ATOMS}, got {n_atoms}")
        if atom_names is None:
            atom_names = tuple(_DEFAULT_NAMES[:n_atoms])
        else:
            atom_names = tuple(atom_names)
        if len(atom_names) != n_atoms:
            raise ValueError(f"expected {n_atoms} atom names, got {len(atom_names)}")
        if len(set(atom_names)) != n_atoms:
            raise ValueError(f"atom names must be distinct: {atom_names}")
        for name in atom_names:
            if not name or not isinstance(name, str):
                raise ValueError(f"atom names must be nonempty strings: {name!r}")
        self.n_atoms = n_atoms
        self.atom_names = atom_names
        self.full_mask = (1 << n_atoms) - 1
        self._atom_index = {name: i for i, name in enumerate(atom_names)}

    # -- construction of elements ------------------------------------------

    def element(self, bits: int) -> BElem:
        if not 0 <= bits <= self.full_mask:
            raise ValueError(f"bits {bits:#x} out of range for {self}")
        return BElem(self, bits)

    @property
    def zero(self) -> BElem:
        return BElem(self, 0)

    @property
    def one(self) -> BElem:
        return BElem(self, self.full_mask)

    def atom(self, name: str) -> BElem:
        return BElem(self, 1 << self._atom_index[name])

    def atoms(self) -> list[BElem]:
        return [BElem(self, 1 << i) for i in range(self.n_atoms)]

    def from_atom_names(self, names: Iterable[str]) -> BElem:
        bits = 0
        for name in names:
            bits |= 1 << self._atom_index[name]
        return BElem(self, bits)

    @property
    def size(self) -> int:
        return 1 << self.n_atoms

    def elements(self) -> Iterator[BElem]:
        for bits in range(self.size):
            yield BElem(self, bits)

    # -- operations ---------------------------------------------------------

    def _own(self, x: BElem) -> int:
        if x.alg is not self:
            raise MixedAlgebraError(f"element {x} belongs to a different algebra")
        return x.bits

    def leq(self, x: BElem, y: BElem) -> bool:
        return self._own(x) & ~self._own(y) == 0

    def meet(self, x: BElem, y: BElem) -> BElem:
        return BElem(self, self._own(x) & self._own(y))

    def join(self, x: BElem, y: BElem) -> BElem:
        return BElem(self, self._own(x) | self._own(y))

    def complement(self, x: BElem) -> BElem:
        return BElem(self, self.full_mask & ~self._own(x))

    def implies(self, x: BElem, y: BElem) -> BElem:
        return BElem(self, (self.full_mask & ~self._own(x)) | self._own(y))

    # -- rendering and serialization ---------------------------------------

    def element_str(self, x: BElem) -> str:
        bits = self._own(x)
        if bits == self.full_mask:
            return "1"
        if bits == 0:
            return "0"
        return "+".join(name for i, name in enumerate(self.atom_names) if bits >> i & 1)

    def element_atom_names(self, x: BElem) -> list[str]:
        bits = self._own(x)
        return sorted(name for i, name in enumerate(self.atom_names) if bits >> i & 1)

    def __repr__(self) -> str:
        return f"BoolAlg({list(self.atom_names)})"

    def to_json(self) -> dict:
        return {"type": "bool", "atoms": list(self.atom_names)}

    @classmethod
    def from_json(cls, data: dict) -> "BoolAlg":
        if data.get("type") != "bool":
            raise ValueError(f"not a Boolean algebra payload: {data.get('type')!r}")
        atoms = data["atoms"]
        return cls(len(atoms), atoms)

    def element_to_json(self, x: BElem) -> list[str]:
        return self.element_atom_names(x)

    def element_from_json(self, names: list[str]) -> BElem:
        return self.from_atom_names(names)


def mk_boolean_algebra(n_atoms: int, atom_names: Iterable[str] | None = None) -> BoolAlg:
    """Build the powerset algebra of n_atoms named atoms."""
    return BoolAlg(n_atoms, atom_names)


def enumerate_upsets(B: BoolAlg) -> list[tuple[BElem, ...]]:
    """All upward-closed subsets of B that contain 1, canonically sorted.

    Exhaustive over subsets of the carrier, so capped at 3 atoms.  Each
    up-set comes back as a tuple sorted by bitset value, and the list is
    sorted by (size, member bitsets).
    """
    if B.n_atoms > MAX_UPSET_ATOMS:
        raise SizeCapError(f"up-set enumeration is capped at {MAX_UPSET_ATOMS} atoms, got {B.n_atoms}")
    size = B.size
    ups = []
    for mask in range(1, 1 << size):
        if not mask >> (size - 1) & 1:  # must contain the top element
            continue
        members = [bits for bits in range(size) if mask >> bits & 1]
        member_set = set(members)
        closed = True
        for a in members:
            for b in range(size):
                if a & ~b == 0 and b not in member_set:  # a <= b escapes the set
                    closed = False
                    break
            if not closed:
                break
        if closed:
            ups.append(tuple(B.element(bits) for bits in members))
    ups.sort(key=lambda tup: (len(tup), tuple(e.bits for e in tup)))
    return ups
