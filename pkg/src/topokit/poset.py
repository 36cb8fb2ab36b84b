"""Simplicial posets: ranked posets whose lower intervals are Boolean.

Elements are identified by integer ids with an explicit rank; the least
element is implicit (never stored) and sits below every rank-1 element.
Unlike a simplicial complex, two distinct rank-2 elements may share the
same pair of atoms, which is exactly what makes the double-edge circle and
its relatives representable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complex import PropertyReport, SimplicialComplex, h_from_f, proper_coloring
from .errors import (
    FaceNotFoundError,
    MissingColoringError,
    PurityError,
    ValidationError,
)


@dataclass(frozen=True)
class PosetValidation:
    """Result of the structural validation, with the first offender if any."""

    valid: bool
    reason: str | None = None
    element: int | None = None

    def as_dict(self) -> dict:
        return {"valid": self.valid, "reason": self.reason, "element": self.element}


class SimplicialPoset:
    """A ranked element table plus cover relations with an implicit bottom."""

    def __init__(self, ranks: dict[int, int], covers, coloring=None, labels=None):
        self._rank: dict[int, int] = {}
        for x, r in ranks.items():
            x, r = int(x), int(r)
            if r < 1:
                raise ValidationError(f"element {x} has rank {r}; ranks start at 1")
            self._rank[x] = r
        cover_set = set()
        for lo, hi in covers:
            lo, hi = int(lo), int(hi)
            if lo not in self._rank or hi not in self._rank:
                raise ValidationError(f"cover ({lo}, {hi}) references unknown elements")
            if lo == hi:
                raise ValidationError(f"element {lo} cannot cover itself")
            cover_set.add((lo, hi))
        self._covers: tuple[tuple[int, int], ...] = tuple(sorted(cover_set))
        self._up: dict[int, tuple[int, ...]] = {x: () for x in self._rank}
        self._down: dict[int, tuple[int, ...]] = {x: () for x in self._rank}
        up: dict[int, list[int]] = {x: [] for x in self._rank}
        down: dict[int, list[int]] = {x: [] for x in self._rank}
        for lo, hi in self._covers:
            up[lo].append(hi)
            down[hi].append(lo)
        self._up = {x: tuple(sorted(ns)) for x, ns in up.items()}
        self._down = {x: tuple(sorted(ns)) for x, ns in down.items()}

        if coloring is not None:
            coloring = {int(v): int(c) for v, c in coloring.items()}
            for v, c in coloring.items():
                if self._rank.get(v) != 1:
                    raise ValidationError(f"colored element {v} is not an atom")
                if c < 1:
                    raise ValidationError(f"colors must be positive integers, got {c}")
            for v in self.atoms():
                if v not in coloring:
                    raise ValidationError(f"atom {v} has no color")
        self._coloring: dict[int, int] | None = coloring
        self._labels: dict[int, str] | None = (
            {int(v): str(s) for v, s in labels.items()} if labels else None
        )
        self._cache: dict = {}

    # -- accessors -------------------------------------------------------------

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(sorted(self._rank))

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self._covers

    @property
    def coloring(self) -> dict[int, int] | None:
        return dict(self._coloring) if self._coloring is not None else None

    @property
    def labels(self) -> dict[int, str] | None:
        return dict(self._labels) if self._labels is not None else None

    @property
    def rank_of_poset(self) -> int:
        return max(self._rank.values(), default=0)

    def rank(self, x: int) -> int:
        if x not in self._rank:
            raise FaceNotFoundError(f"no element with id {x}")
        return self._rank[x]

    def elements_of_rank(self, r: int) -> tuple[int, ...]:
        return tuple(sorted(x for x, rk in self._rank.items() if rk == r))

    def atoms(self) -> tuple[int, ...]:
        return self.elements_of_rank(1)

    def maximal_elements(self) -> tuple[int, ...]:
        return tuple(sorted(x for x in self._rank if not self._up[x]))

    def upper_covers(self, x: int) -> tuple[int, ...]:
        self.rank(x)
        return self._up[x]

    def lower_covers(self, x: int) -> tuple[int, ...]:
        self.rank(x)
        return self._down[x]

    def down_set(self, x: int) -> frozenset[int]:
        """All elements <= x (excluding the implicit bottom), memoized."""
        memo = self._cache.setdefault("down", {})
        if x not in memo:
            self.rank(x)
            seen = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for z in self._down[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            memo[x] = frozenset(seen)
        return memo[x]

    def up_set(self, x: int) -> frozenset[int]:
        memo = self._cache.setdefault("up", {})
        if x not in memo:
            self.rank(x)
            seen = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for z in self._up[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            memo[x] = frozenset(seen)
        return memo[x]

    def leq(self, y: int, x: int) -> bool:
        return y in self.down_set(x)

    def atoms_of(self, x: int) -> frozenset[int]:
        return frozenset(y for y in self.down_set(x) if self._rank[y] == 1)

    def color_set(self, x: int) -> frozenset[int]:
        if self._coloring is None:
            raise MissingColoringError("poset has no coloring attached")
        return frozenset(self._coloring[a] for a in self.atoms_of(x))

    @property
    def palette(self) -> tuple[int, ...]:
        if self._coloring is None:
            raise MissingColoringError("poset has no coloring attached")
        return tuple(sorted(set(self._coloring.values())))

    def __repr__(self):
        return (
            f"SimplicialPoset({len(self._rank)} elements, rank {self.rank_of_poset})"
        )

    # -- validation --------------------------------------------------------

    def validate(self) -> PosetValidation:
        """Check every structural invariant; reports the first violation found."""
        if "validation" not in self._cache:
            self._cache["validation"] = self._validate()
        return self._cache["validation"]

    def _validate(self) -> PosetValidation:
        for lo, hi in self._covers:
            if self._rank[hi] != self._rank[lo] + 1:
                return PosetValidation(
                    False,
                    f"cover ({lo}, {hi}) jumps from rank {self._rank[lo]} to {self._rank[hi]}",
                    hi,
                )
        for x in sorted(self._rank, key=lambda y: (self._rank[y], y)):
            k = self._rank[x]
            interval = self.down_set(x)
            atoms = sorted(self.atoms_of(x))
            if len(atoms) != k:
                return PosetValidation(
                    False, f"element {x} of rank {k} has {len(atoms)} atoms below it", x
                )
            if len(interval) != 2 ** k - 1:
                return PosetValidation(
                    False,
                    f"interval below {x} has {len(interval)} elements, expected {2 ** k - 1}",
                    x,
                )
            atom_sets = {y: self.atoms_of(y) for y in interval}
            if len(set(atom_sets.values())) != len(interval):
                return PosetValidation(
                    False, f"two elements below {x} share the same atom set", x
                )
            # with sizes and injectivity checked for every element, the atom-set
            # map is forced to be an order isomorphism onto the Boolean lattice
            for y in interval:
                if len(atom_sets[y]) != self._rank[y]:
                    return PosetValidation(
                        False,
                        f"element {y} of rank {self._rank[y]} has {len(atom_sets[y])} atoms",
                        y,
                    )
        if self._coloring is not None:
            for facet in self.maximal_elements():
                cols = [self._coloring[a] for a in sorted(self.atoms_of(facet))]
                if len(set(cols)) != len(cols):
                    return PosetValidation(
                        False, f"facet {facet} has repeated atom colors {cols}", facet
                    )
        return PosetValidation(True)

    def require_valid(self):
        report = self.validate()
        if not report.valid:
            raise ValidationError(f"invalid simplicial poset: {report.reason}")

    # -- structure ----------------------------------------------------------

    @property
    def is_pure(self) -> bool:
        d = self.rank_of_poset
        return all(self._rank[x] == d for x in self.maximal_elements())

    def order_complex(self) -> SimplicialComplex:
        """Complex of chains of elements, colored by rank; vertex ids are element ids."""
        self.require_valid()
        if not self._rank:
            return SimplicialComplex([()])
        chains: list[tuple[int, ...]] = []

        def descend(x, suffix):
            lower = self._down[x]
            if not lower:
                chains.append(tuple(sorted((x,) + suffix)))
                return
            for y in lower:
                descend(y, (x,) + suffix)

        for top in self.maximal_elements():
            descend(top, ())
        coloring = {x: self._rank[x] for x in self._rank}
        return SimplicialComplex(sorted(set(chains)), coloring, self._labels)

    def link(self, x: int | None) -> "SimplicialPoset":
        """The upper set of ``x`` re-ranked so that ``x`` becomes the implicit bottom."""
        if x is None:
            return self
        self.require_valid()
        base = self.rank(x)
        members = self.up_set(x) - {x}
        ranks = {y: self._rank[y] - base for y in members}
        covers = [(lo, hi) for lo, hi in self._covers if lo in members and hi in members]
        coloring = None
        if self._coloring is not None:
            base_atoms = self.atoms_of(x)
            coloring = {}
            for y in sorted(members):
                if ranks[y] == 1:
                    extra = self.atoms_of(y) - base_atoms
                    coloring[y] = self._coloring[next(iter(extra))]
        labels = (
            {y: self._labels[y] for y in members if y in self._labels}
            if self._labels
            else None
        )
        return SimplicialPoset(ranks, covers, coloring, labels)

    def rank_select(self, colors) -> "SimplicialPoset":
        """Sub-poset of elements all of whose atom colors lie in ``colors``."""
        if self._coloring is None:
            raise MissingColoringError("rank selection needs a coloring")
        allowed = set(colors)
        members = {x for x in self._rank if self.color_set(x) <= allowed}
        ranks = {x: self._rank[x] for x in members}
        covers = [(lo, hi) for lo, hi in self._covers if lo in members and hi in members]
        coloring = {v: c for v, c in self._coloring.items() if v in members}
        labels = (
            {x: self._labels[x] for x in members if x in self._labels}
            if self._labels
            else None
        )
        return SimplicialPoset(ranks, covers, coloring, labels)

    def is_connected(self) -> bool:
        """Connectivity of the Hasse diagram (agrees with the order complex)."""
        ids = self.ids
        if len(ids) <= 1:
            return True
        adj = {x: self._up[x] + self._down[x] for x in ids}
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            y = stack.pop()
            for z in adj[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return len(seen) == len(ids)

    def links_connected(self) -> bool:
        """Link connectivity for the bottom and every face of rank < d - 1."""
        if "links_ok" not in self._cache:
            self.require_valid()
            d = self.rank_of_poset
            ok = True
            if d >= 2:
                ok = self.is_connected()
                if ok:
                    for x in sorted(self._rank):
                        if self._rank[x] < d - 1 and not self.link(x).is_connected():
                            ok = False
                            break
            self._cache["links_ok"] = ok
        return self._cache["links_ok"]

    def check_properties(self) -> PropertyReport:
        """Purity, balancedness, and link connectivity for small-rank faces."""
        self.require_valid()
        if "props" not in self._cache:
            d = self.rank_of_poset
            pure = self.is_pure
            if self._coloring is not None and len(self.palette) == d:
                balanced = pure
            elif pure:
                balanced = self.find_balanced_coloring() is not None
            else:
                balanced = False
            self._cache["props"] = PropertyReport(pure, balanced, self.links_connected())
        return self._cache["props"]

    def find_balanced_coloring(self) -> dict[int, int] | None:
        """Proper atom coloring (distinct under every facet) with d colors, or None."""
        if not self.is_pure:
            raise PurityError("balanced colorings are defined for pure posets")
        d = self.rank_of_poset
        atoms = self.atoms()
        adj: dict[int, set[int]] = {a: set() for a in atoms}
        for facet in self.maximal_elements():
            members = sorted(self.atoms_of(facet))
            for a, b in combinations(members, 2):
                adj[a].add(b)
                adj[b].add(a)
        return proper_coloring(atoms, {a: tuple(sorted(ns)) for a, ns in adj.items()}, range(1, d + 1))

    def f_h_vectors(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Rank counts as an f-vector plus its alternating-sum transform."""
        self.require_valid()
        if not self.is_pure:
            raise PurityError("f/h-vectors are only defined for pure posets")
        d = self.rank_of_poset
        f = tuple([1] + [len(self.elements_of_rank(r)) for r in range(1, d + 1)])
        return f, h_from_f(f)

    def is_strongly_connected(self) -> bool:
        """Facet chain connectivity through shared covered rank-(d-1) faces."""
        if not self.is_pure:
            raise PurityError("strong connectivity is only defined for pure posets")
        facets = self.maximal_elements()
        if len(facets) <= 1:
            return True
        d = self.rank_of_poset
        adj: dict[int, set[int]] = {f: set() for f in facets}
        for tau in self.elements_of_rank(d - 1):
            above = self._up[tau]
            for a, b in combinations(above, 2):
                adj[a].add(b)
                adj[b].add(a)
        seen = {facets[0]}
        stack = [facets[0]]
        while stack:
            y = stack.pop()
            for z in adj[y]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return len(seen) == len(facets)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        elements = []
        for x in self.ids:
            entry: dict = {"id": x, "rank": self._rank[x]}
            if self._labels and x in self._labels:
                entry["label"] = self._labels[x]
            elements.append(entry)
        data: dict = {
            "type": "poset",
            "elements": elements,
            "covers": [list(c) for c in self._covers],
        }
        if self._coloring is not None:
            data["coloring"] = {str(v): c for v, c in sorted(self._coloring.items())}
        return data

    @classmethod
    def from_json(cls, data) -> "SimplicialPoset":
        if not isinstance(data, dict) or data.get("type") != "poset":
            raise ValidationError('poset JSON must carry "type": "poset"')
        elements = data.get("elements")
        covers = data.get("covers")
        if not isinstance(elements, list) or not isinstance(covers, list):
            raise ValidationError('"elements" and "covers" must be lists')
        ranks: dict[int, int] = {}
        labels: dict[int, str] = {}
        for entry in elements:
            if not isinstance(entry, dict) or "id" not in entry or "rank" not in entry:
                raise ValidationError("each element needs an id and a rank")
            x = int(entry["id"])
            if x in ranks:
                raise ValidationError(f"duplicate element id {x}")
            ranks[x] = int(entry["rank"])
            if "label" in entry:
                labels[x] = str(entry["label"])
        poset = cls(
            ranks,
            [(int(lo), int(hi)) for lo, hi in covers],
            {int(v): c for v, c in data["coloring"].items()}
            if data.get("coloring")
            else None,
            labels or None,
        )
        recomputed = poset._heights()
        for x, r in ranks.items():
            if recomputed[x] != r:
                raise ValidationError(
                    f"declared rank {r} of element {x} disagrees with cover height {recomputed[x]}"
                )
        return poset

    def _heights(self) -> dict[int, int]:
        """Rank recomputed from covers: 1 + longest descending cover chain."""
        memo: dict[int, int] = {}

        def height(x):
            if x not in memo:
                below = self._down[x]
                memo[x] = 1 if not below else 1 + max(height(y) for y in below)
            return memo[x]

        for x in self._rank:
            height(x)
        return memo


def face_poset(complex: SimplicialComplex) -> SimplicialPoset:
    """The poset of nonempty faces ordered by inclusion, atoms colored as in the complex."""
    faces = sorted((f for f in complex.face_set() if f), key=lambda f: (len(f), f))
    index = {f: i for i, f in enumerate(faces)}
    ranks = {i: len(f) for f, i in index.items()}
    covers = []
    for f in faces:
        if len(f) >= 2:
            for sub in combinations(f, len(f) - 1):
                covers.append((index[sub], index[f]))
    coloring = None
    if complex.coloring is not None:
        coloring = {index[(v,)]: complex.coloring[v] for v in complex.vertices}
    labels = {i: "-".join(map(str, f)) for f, i in index.items()}
    return SimplicialPoset(ranks, covers, coloring, labels)
