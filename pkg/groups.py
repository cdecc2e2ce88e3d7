"""
Group Machinery for Gamma-Euler Characteristics
Finitely presented test groups Gamma, multiplication-table finite groups, homomorphism
enumeration, conjugation-orbit counting, abelianization, and the chi(H\\Hom(Gamma,H)) dispatch
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import gcd, prod
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from euler_errors import BudgetExceeded, InvalidGroupTable, UnsupportedGamma
from euler_settings import load_settings

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Hom = Tuple[int, ...]

ZPOW = 'Z'
FREE = 'F'
PRESENTED = 'fp'

# Table verification is cubic in the order
ASSOCIATIVITY_CHECK_LIMIT = 256


@dataclass(frozen=True)
class Presentation:
    """
    Finite presentation: generators 1..generator_count, relators as signed index words
    (k = generator k, -k = its inverse)
    """
    generator_count: int
    relators: Tuple[Word, ...] = ()
    generator_names: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.generator_count < 1:
            raise ValueError(f"A presentation needs at least one generator, got {self.generator_count}")
        relators = tuple(tuple(int(i) for i in word) for word in self.relators)
        object.__setattr__(self, 'relators', relators)
        for word in relators:
            for index in word:
                if index == 0 or abs(index) > self.generator_count:
                    raise ValueError(f"Relator {word} uses index {index} outside 1..{self.generator_count}")
        if self.generator_names and len(self.generator_names) != self.generator_count:
            raise ValueError(f"{len(self.generator_names)} generator names for {self.generator_count} generators")

    def exponent_matrix(self) -> List[List[int]]:
        """Relator exponent sums, one row per relator"""
        rows = []
        for word in self.relators:
            row = [0] * self.generator_count
            for index in word:
                row[abs(index) - 1] += 1 if index > 0 else -1
            rows.append(row)
        return rows


@dataclass(frozen=True)
class GammaGroup:
    """The test group Gamma: Z^l, the free group F_l, or an explicit presentation"""
    kind: str
    rank: int = 0
    presentation: Optional[Presentation] = None

    def __post_init__(self):
        if self.kind in (ZPOW, FREE):
            if self.rank < 1:
                raise ValueError(f"{self.kind}^l needs l >= 1, got {self.rank}")
        elif self.kind == PRESENTED:
            if self.presentation is None:
                raise ValueError("A presented Gamma needs a presentation")
        else:
            raise ValueError(f"Unknown Gamma kind {self.kind!r}")

    @classmethod
    def z_pow(cls, ell: int) -> 'GammaGroup':
        return cls(ZPOW, ell)

    @classmethod
    def free(cls, ell: int) -> 'GammaGroup':
        return cls(FREE, ell)

    @classmethod
    def presented(cls, presentation: Presentation) -> 'GammaGroup':
        return cls(PRESENTED, 0, presentation)

    @property
    def generator_count(self) -> int:
        if self.kind == PRESENTED:
            return self.presentation.generator_count
        return self.rank

    def to_presentation(self) -> Presentation:
        if self.kind == PRESENTED:
            return self.presentation
        if self.kind == FREE:
            return Presentation(self.rank, ())
        commutators = tuple((i, j, -i, -j)
                            for i in range(1, self.rank + 1)
                            for j in range(i + 1, self.rank + 1))
        return Presentation(self.rank, commutators)

    def normalized(self) -> 'GammaGroup':
        """F_1 is Z"""
        if self.kind == FREE and self.rank == 1:
            return GammaGroup.z_pow(1)
        return self

    def standard_form(self) -> 'GammaGroup':
        """
        Z^l or F_l when the presentation is one of theirs: no relators, or exactly the
        commutators [x_i^+-1, x_j^+-1], one or more per pair, in any order
        """
        if self.kind != PRESENTED:
            return self.normalized()
        k = self.presentation.generator_count
        relators = [word for word in self.presentation.relators if word]
        if not relators:
            return GammaGroup.free(k).normalized()
        pairs = set()
        for word in relators:
            if len(word) != 4:
                return self
            x, y, x_inv, y_inv = word
            if x_inv != -x or y_inv != -y or abs(x) == abs(y):
                return self
            pairs.add(frozenset((abs(x), abs(y))))
        if pairs == {frozenset(pair) for pair in combinations(range(1, k + 1), 2)}:
            return GammaGroup.z_pow(k)
        return self

    def describe(self) -> str:
        if self.kind == ZPOW:
            return f"Z^{self.rank}"
        if self.kind == FREE:
            return f"F{self.rank}"
        p = self.presentation
        return f"<{p.generator_count} generators | {len(p.relators)} relators>"


class UnionFind:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x


@dataclass(frozen=True)
class FiniteGroup:
    """
    Finite group given by its multiplication table over element ids 0..order-1
    """
    name: str
    mul: Tuple[Tuple[int, ...], ...]
    identity: int = field(init=False, compare=False, repr=False)
    inverse: Tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.mul)
        object.__setattr__(self, 'mul', table)
        n = len(table)
        if n == 0:
            raise InvalidGroupTable(f"{self.name}: empty multiplication table")
        for row in table:
            if len(row) != n:
                raise InvalidGroupTable(f"{self.name}: table is not square ({len(row)} != {n})")
            for x in row:
                if not 0 <= x < n:
                    raise InvalidGroupTable(f"{self.name}: entry {x} is not an element id")

        identities = [e for e in range(n)
                      if all(table[e][x] == x and table[x][e] == x for x in range(n))]
        if not identities:
            raise InvalidGroupTable(f"{self.name}: no identity element")
        e = identities[0]
        inverse = []
        for x in range(n):
            candidates = [y for y in range(n) if table[x][y] == e and table[y][x] == e]
            if not candidates:
                raise InvalidGroupTable(f"{self.name}: element {x} has no inverse")
            inverse.append(candidates[0])
        if n <= ASSOCIATIVITY_CHECK_LIMIT:
            for a in range(n):
                row_a = table[a]
                for b in range(n):
                    ab = row_a[b]
                    row_b = table[b]
                    for c in range(n):
                        if table[ab][c] != row_a[row_b[c]]:
                            raise InvalidGroupTable(f"{self.name}: ({a}*{b})*{c} != {a}*({b}*{c})")
        object.__setattr__(self, 'identity', e)
        object.__setattr__(self, 'inverse', tuple(inverse))

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]], name: str = "table") -> 'FiniteGroup':
        return cls(name, tuple(tuple(row) for row in rows))

    @classmethod
    def cyclic(cls, m: int) -> 'FiniteGroup':
        return _cyclic_group(m)

    @classmethod
    def dihedral(cls, m: int) -> 'FiniteGroup':
        """D_{2m}: rotation r^k has id k, reflection r^k s has id m + k"""
        return _dihedral_group(m)

    @property
    def order(self) -> int:
        return len(self.mul)

    def multiply(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def conjugate(self, g: int, x: int) -> int:
        return self.mul[self.mul[g][x]][self.inverse[g]]

    def commute(self, a: int, b: int) -> bool:
        return self.mul[a][b] == self.mul[b][a]

    def evaluate(self, word: Word, images: Sequence[int]) -> int:
        result = self.identity
        for index in word:
            x = images[index - 1] if index > 0 else self.inverse[images[-index - 1]]
            result = self.mul[result][x]
        return result

    @cached_property
    def center(self) -> Tuple[int, ...]:
        return tuple(z for z in range(self.order) if all(self.commute(z, x) for x in range(self.order)))

    @cached_property
    def generators(self) -> Tuple[int, ...]:
        """Greedy generating set: smallest ids not yet in the span"""
        gens: List[int] = []
        span = {self.identity}
        for x in range(self.order):
            if x not in span:
                gens.append(x)
                span = self._closure(gens)
        return tuple(gens)

    def _closure(self, gens: Sequence[int]) -> set:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            step = []
            for a in frontier:
                for g in gens:
                    b = self.mul[a][g]
                    if b not in seen:
                        seen.add(b)
                        step.append(b)
            frontier = step
        return seen


@lru_cache(maxsize=None)
def _cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError(f"Cyclic group order must be positive, got {m}")
    return FiniteGroup(f"Z/{m}", tuple(tuple((a + b) % m for b in range(m)) for a in range(m)))


@lru_cache(maxsize=None)
def _dihedral_group(m: int) -> FiniteGroup:
    if m < 1:
        raise ValueError(f"Dihedral index must be positive, got {m}")

    def element_id(rotation: int, flip: int) -> int:
        return flip * m + rotation % m

    rows = []
    for x in range(2 * m):
        a, f = x % m, x // m
        row = []
        for y in range(2 * m):
            b, g = y % m, y // m
            # (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f + g)
            row.append(element_id(a - b if f else a + b, (f + g) % 2))
        rows.append(tuple(row))
    return FiniteGroup(f"D{2 * m}", tuple(rows))


def check_hom_budget(gamma: GammaGroup, h: FiniteGroup, budget: Optional[int] = None) -> int:
    """|h|^k candidate tuples for Hom(Gamma, h); BudgetExceeded when that is over budget"""
    candidates = h.order ** gamma.generator_count
    if budget is None:
        budget = load_settings().enumeration_budget
    if candidates > budget:
        raise BudgetExceeded(f"Hom({gamma.describe()}, {h.name})", candidates, budget)
    return candidates


def enumerate_homs(gamma: GammaGroup, h: FiniteGroup, budget: Optional[int] = None) -> List[Hom]:
    """
    All homomorphisms Gamma -> h as tuples of generator images, in lexicographic order.

    Backtracks over generator images; a relator is checked as soon as every generator it
    mentions has an image.
    """
    check_hom_budget(gamma, h, budget)
    return _backtrack_homs(gamma, h)


def _backtrack_homs(gamma: GammaGroup, h: FiniteGroup) -> List[Hom]:
    presentation = gamma.to_presentation()
    k = presentation.generator_count
    candidates = h.order ** k
    checks: List[List[Word]] = [[] for _ in range(k)]
    for word in presentation.relators:
        if word:
            checks[max(abs(i) for i in word) - 1].append(word)

    homs: List[Hom] = []
    images = [h.identity] * k

    def extend(position: int):
        if position == k:
            homs.append(tuple(images))
            return
        for x in range(h.order):
            images[position] = x
            if all(h.evaluate(word, images) == h.identity for word in checks[position]):
                extend(position + 1)

    extend(0)
    logger.debug("Hom(%s, %s): %d of %d candidates", gamma.describe(), h.name, len(homs), candidates)
    return homs


def _validate_homs(h: FiniteGroup, homs: Sequence[Hom]):
    for hom in homs:
        for x in hom:
            if not 0 <= x < h.order:
                raise ValueError(f"{hom} has entry {x} outside {h.name}")


def conjugation_orbits(h: FiniteGroup, homs: Sequence[Hom]) -> List[List[Hom]]:
    """
    Partition of homs into orbits under simultaneous conjugation, by union-find over the
    generators of h. Orbits are sorted internally and ordered by their smallest member.
    """
    _validate_homs(h, homs)
    space = set(homs)
    uf = UnionFind(space)
    for g in h.generators:
        for hom in space:
            image = tuple(h.conjugate(g, x) for x in hom)
            if image not in space:
                raise ValueError(f"Hom set is not closed under conjugation: {hom} -> {image}")
            uf.union(hom, image)
    orbits: Dict[Hom, List[Hom]] = {}
    for hom in space:
        orbits.setdefault(uf.find(hom), []).append(hom)
    return sorted((sorted(orbit) for orbit in orbits.values()), key=lambda orbit: orbit[0])


def conjugation_orbit_count(h: FiniteGroup, homs: Sequence[Hom]) -> int:
    """chi(h\\Hom(Gamma,h)): the orbit space is finite, so chi is its cardinality"""
    return len(conjugation_orbits(h, homs))


class Abelianization(NamedTuple):
    rank: int
    torsion: Tuple[int, ...]


def smith_diagonal(matrix: Sequence[Sequence[int]], columns: int) -> List[int]:
    """
    Nonzero Smith normal form diagonal of an integer matrix, in divisibility order.

    Exact row/column reduction; the pivot is the smallest nonzero entry of the remaining block.
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    diagonal: List[int] = []
    t = 0
    while t < min(rows, columns):
        pivot = None
        for i in range(t, rows):
            for j in range(t, columns):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        p = a[t][t]

        clean = True
        for i in range(t + 1, rows):
            q = a[i][t] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            if a[i][t]:
                clean = False
        for j in range(t + 1, columns):
            q = a[t][j] // p
            if q:
                for row in a:
                    row[j] -= q * row[t]
            if a[t][j]:
                clean = False
        if not clean:
            continue

        # p must divide the rest of the block
        offender = next((i for i in range(t + 1, rows)
                         if any(a[i][j] % p for j in range(t + 1, columns))), None)
        if offender is not None:
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
            continue
        diagonal.append(abs(p))
        t += 1
    return diagonal


@lru_cache(maxsize=1024)
def abelianization(gamma: GammaGroup) -> Abelianization:
    presentation = gamma.to_presentation()
    diagonal = smith_diagonal(presentation.exponent_matrix(), presentation.generator_count)
    rank = presentation.generator_count - len(diagonal)
    return Abelianization(rank, tuple(d for d in diagonal if d > 1))


def hom_count_to_cyclic(gamma: GammaGroup, m: int) -> int:
    """|Hom(Gamma, Z/m)| read off the abelianization"""
    ab = abelianization(gamma)
    return m ** ab.rank * prod(gcd(t, m) for t in ab.torsion)


def chi_hom_to_circle(gamma: GammaGroup) -> int:
    """chi(Hom(Gamma,S^1)): a torus (chi 0) unless the abelianization is finite"""
    ab = abelianization(gamma)
    if ab.rank >= 1:
        return 0
    return prod(ab.torsion)


TRIVIAL = 'trivial'
CYCLIC = 'cyclic'
DIHEDRAL = 'dihedral'
CIRCLE = 'circle'
FULL_O2 = 'o2'
FINITE_TABLE = 'table'
USER_SUPPLIED = 'user'


@dataclass(frozen=True)
class IsotropyClass:
    """Isotropy type H of a stratum"""
    kind: str
    order: int = 0
    group: Optional[FiniteGroup] = None
    name: str = ''
    table: Tuple[Tuple[GammaGroup, int], ...] = ()

    @classmethod
    def trivial(cls) -> 'IsotropyClass':
        return cls(TRIVIAL)

    @classmethod
    def cyclic(cls, m: int) -> 'IsotropyClass':
        """R(m); R(0) is the circle"""
        if m < 0:
            raise ValueError(f"Cyclic order must be nonnegative, got {m}")
        if m == 0:
            return cls.circle()
        return cls(CYCLIC, m)

    @classmethod
    def dihedral(cls, m: int) -> 'IsotropyClass':
        if m < 1:
            raise ValueError(f"Dihedral index must be positive, got {m}")
        return cls(DIHEDRAL, m)

    @classmethod
    def circle(cls) -> 'IsotropyClass':
        return cls(CIRCLE)

    @classmethod
    def full_o2(cls) -> 'IsotropyClass':
        return cls(FULL_O2)

    @classmethod
    def finite_table(cls, group: FiniteGroup) -> 'IsotropyClass':
        return cls(FINITE_TABLE, group.order, group, group.name)

    @classmethod
    def user_supplied(cls, name: str, table: Mapping[GammaGroup, int]) -> 'IsotropyClass':
        return cls(USER_SUPPLIED, name=name,
                   table=tuple((gamma, int(value)) for gamma, value in table.items()))

    @property
    def label(self) -> str:
        if self.kind == TRIVIAL:
            return "1"
        if self.kind == CYCLIC:
            return f"Z/{self.order}"
        if self.kind == DIHEDRAL:
            return f"D{2 * self.order}"
        if self.kind == CIRCLE:
            return "SO(2)"
        if self.kind == FULL_O2:
            return "O(2)"
        return self.name

    def lookup(self, gamma: GammaGroup) -> Optional[int]:
        for key, value in self.table:
            if key == gamma or key.standard_form() == gamma.standard_form():
                return value
        return None

    def finite_group(self) -> Optional[FiniteGroup]:
        """The table behind an enumerated class; None where no Hom enumeration happens"""
        if self.kind == CYCLIC:
            return FiniteGroup.cyclic(self.order)
        if self.kind == DIHEDRAL:
            return FiniteGroup.dihedral(self.order)
        if self.kind == FINITE_TABLE:
            return self.group
        return None

    def to_json(self) -> Dict:
        return {'kind': self.kind, 'order': self.order, 'label': self.label}


def chi_orbit_hom(gamma: GammaGroup, h: IsotropyClass,
                  o2_values: Optional[Mapping[GammaGroup, int]] = None,
                  budget: Optional[int] = None) -> int:
    """
    chi(H\\Hom(Gamma,H)) for the isotropy class H.

    Gamma is reduced to its standard form first, so a presentation of Z^l or F_l gives the same
    value as the group itself. o2_values supplies chi(O(2)\\Hom(Gamma,O(2))) for Gamma outside
    Z^l / F_l. The enumeration budget is checked on every call, cached or not.
    """
    standard = gamma.standard_form()
    group = h.finite_group()
    if group is not None:
        check_hom_budget(standard, group, budget)
    try:
        return _chi_orbit_hom(standard, h)
    except UnsupportedGamma:
        if h.kind == FULL_O2 and o2_values:
            for key in (gamma, standard):
                if key in o2_values:
                    return int(o2_values[key])
        raise


@lru_cache(maxsize=8192)
def _chi_orbit_hom(gamma: GammaGroup, h: IsotropyClass) -> int:
    logger.debug("chi_orbit_hom(%s, %s) not cached", gamma.describe(), h.label)
    if h.kind == TRIVIAL:
        return 1
    if h.kind == CYCLIC:
        return len(_backtrack_homs(gamma, h.finite_group()))
    if h.kind in (DIHEDRAL, FINITE_TABLE):
        group = h.finite_group()
        return conjugation_orbit_count(group, _backtrack_homs(gamma, group))
    if h.kind == CIRCLE:
        return chi_hom_to_circle(gamma)
    if h.kind == FULL_O2:
        if gamma.kind in (ZPOW, FREE):
            from formulas import chi_orbit_hom_o2_closed
            return chi_orbit_hom_o2_closed(gamma.rank, gamma.kind)
        raise UnsupportedGamma(f"chi(O(2)\\Hom(Gamma,O(2))) is only known for Z^l and F_l, "
                               f"not {gamma.describe()}; supply the value explicitly")
    if h.kind == USER_SUPPLIED:
        value = h.lookup(gamma)
        if value is None:
            raise UnsupportedGamma(f"No user-supplied value for {h.name} at {gamma.describe()}")
        return value
    raise ValueError(f"Unknown isotropy kind {h.kind!r}")
