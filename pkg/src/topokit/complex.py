"""Facet-encoded simplicial complexes with balanced vertex colorings.

A complex is stored by its inclusion-maximal faces (facets); all other
faces are recovered by downward closure on demand, which keeps iterated
subdivisions memory-lean.  Vertices are nonnegative integers.  An optional
coloring (pairwise-distinct colors on the vertices of every facet) makes
the complex balanced and unlocks rank selection.

Conventions used throughout:

* a face is a sorted tuple of distinct vertex ids; ``()`` is the empty face,
  which every complex contains;
* ``d`` denotes ``dim + 1``, the number of vertices of a top facet;
* the f-vector is indexed so that ``f[k]`` counts faces of size ``k``
  (``f[0] = 1`` for the empty face);
* a link with at most one vertex counts as connected, two or more isolated
  vertices count as disconnected.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .errors import (
    FaceNotFoundError,
    MissingColoringError,
    PurityError,
    ValidationError,
)

Face = tuple[int, ...]


def as_face(vertices) -> Face:
    """Canonicalize an iterable of vertex ids into a sorted face tuple."""
    face = tuple(sorted(vertices))
    if len(set(face)) != len(face):
        raise ValidationError(f"face has repeated vertices: {face}")
    for v in face:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValidationError(f"vertex ids must be nonnegative integers, got {v!r}")
    return face


def _maximal(faces) -> list[Face]:
    """Filter an iterable of faces down to the inclusion-maximal ones."""
    unique = sorted(set(faces), key=lambda f: (-len(f), f))
    kept: list[Face] = []
    kept_sets: list[frozenset[int]] = []
    for face in unique:
        fs = frozenset(face)
        if not any(fs <= other for other in kept_sets):
            kept.append(face)
            kept_sets.append(fs)
    return sorted(kept, key=lambda f: (len(f), f))


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of the pure / balanced / connected-links property checks."""

    pure: bool
    balanced: bool
    links_connected: bool

    @property
    def all_hold(self) -> bool:
        return self.pure and self.balanced and self.links_connected

    def as_dict(self) -> dict:
        return {
            "pure": self.pure,
            "balanced": self.balanced,
            "links_connected": self.links_connected,
        }


class SimplicialComplex:
    """An abstract simplicial complex given by its facets.

    Instances are immutable; every operation returns a new complex.  The
    constructor is strict: duplicate facets and facets contained in one
    another are rejected.  Use :meth:`from_faces` to build a complex from
    an arbitrary family of faces.
    """

    def __init__(self, facets, coloring=None, labels=None):
        seen: set[Face] = set()
        for f in facets:
            cf = as_face(f)
            if cf in seen:
                raise ValidationError(f"duplicate facet: {list(cf)}")
            seen.add(cf)
        norm = sorted(seen, key=lambda f: (len(f), f)) or [()]
        by_size: dict[int, list[frozenset[int]]] = {}
        for f in norm:
            by_size.setdefault(len(f), []).append(frozenset(f))
        sizes = sorted(by_size)
        for f in norm:
            fs = frozenset(f)
            for size in sizes:
                if size <= len(f):
                    continue
                if any(fs < g for g in by_size[size]):
                    raise ValidationError(f"facet {list(f)} is contained in a larger facet")
        self._facets: tuple[Face, ...] = tuple(norm)
        self._vertices: tuple[int, ...] = tuple(sorted({v for f in norm for v in f}))

        if coloring is not None:
            coloring = {int(v): int(c) for v, c in coloring.items()}
            for v in self._vertices:
                if v not in coloring:
                    raise ValidationError(f"vertex {v} has no color")
            for c in coloring.values():
                if c < 1:
                    raise ValidationError(f"colors must be positive integers, got {c}")
            for f in self._facets:
                cols = [coloring[v] for v in f]
                if len(set(cols)) != len(cols):
                    raise ValidationError(
                        f"facet {list(f)} has repeated colors {cols}; coloring is not proper"
                    )
            coloring = {v: coloring[v] for v in self._vertices}
        self._coloring: dict[int, int] | None = coloring
        self._labels: dict[int, str] | None = (
            {int(v): str(s) for v, s in labels.items()} if labels else None
        )
        self._hash = hash(
            (self._facets, tuple(sorted(coloring.items())) if coloring else None)
        )
        self._cache: dict = {}

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_faces(cls, faces, coloring=None, labels=None) -> "SimplicialComplex":
        """Build the smallest complex containing every face in ``faces``."""
        return cls(_maximal(as_face(f) for f in faces), coloring, labels)

    # -- basic accessors ------------------------------------------------------

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def dim(self) -> int:
        return max(len(f) for f in self._facets) - 1

    @property
    def d(self) -> int:
        """Number of vertices in a top-dimensional facet (``dim + 1``)."""
        return self.dim + 1

    @property
    def coloring(self) -> dict[int, int] | None:
        return dict(self._coloring) if self._coloring is not None else None

    @property
    def labels(self) -> dict[int, str] | None:
        return dict(self._labels) if self._labels is not None else None

    @property
    def colors(self) -> tuple[int, ...]:
        """Sorted distinct color values of the attached coloring."""
        if self._coloring is None:
            raise MissingColoringError("complex has no coloring attached")
        return tuple(sorted(set(self._coloring.values())))

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self._facets}) == 1

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets and self._coloring == other._coloring

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (
            f"SimplicialComplex({len(self._vertices)} vertices, "
            f"{len(self._facets)} facets, dim {self.dim})"
        )

    # -- faces ----------------------------------------------------------------

    def face_set(self) -> frozenset[Face]:
        """All faces of the complex, cached after the first call."""
        if "faces" not in self._cache:
            faces = {()}
            for facet in self._facets:
                for k in range(1, len(facet) + 1):
                    faces.update(combinations(facet, k))
            self._cache["faces"] = frozenset(faces)
        return self._cache["faces"]

    def has_face(self, face) -> bool:
        return as_face(face) in self.face_set()

    def faces(self, k: int) -> list[Face]:
        """All faces of dimension ``k`` (size ``k + 1``), lexicographically sorted."""
        if k < -1 or k > self.dim:
            raise ValueError(f"face dimension {k} out of range [-1, {self.dim}]")
        return sorted(f for f in self.face_set() if len(f) == k + 1)

    def edges(self) -> list[Face]:
        return self.faces(1) if self.dim >= 1 else []

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        """1-skeleton adjacency, neighbors in ascending order; cached."""
        if "adj" not in self._cache:
            adj: dict[int, set[int]] = {v: set() for v in self._vertices}
            for u, v in self.edges():
                adj[u].add(v)
                adj[v].add(u)
            self._cache["adj"] = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        return self._cache["adj"]

    def facets_containing(self, face) -> list[Face]:
        face = as_face(face)
        fs = set(face)
        return [f for f in self._facets if fs <= set(f)]

    # -- f- and h-vectors -----------------------------------------------------

    def f_vector(self) -> tuple[int, ...]:
        """Face counts ``(f_empty, f_vertices, ..., f_top)``; entry k counts size-k faces."""
        counts = [0] * (self.dim + 2)
        for face in self.face_set():
            counts[len(face)] += 1
        return tuple(counts)

    def h_vector(self) -> tuple[int, ...]:
        """The alternating-sum transform of the f-vector; pure complexes only."""
        if not self.is_pure:
            raise PurityError("h-vector is only defined here for pure complexes")
        return h_from_f(self.f_vector())

    # -- local structure ------------------------------------------------------

    def link(self, face) -> "SimplicialComplex":
        """Subcomplex of faces disjoint from ``face`` whose union with it is a face."""
        face = as_face(face)
        if not self.has_face(face):
            raise FaceNotFoundError(f"{list(face)} is not a face")
        fs = set(face)
        tops = [tuple(v for v in g if v not in fs) for g in self.facets_containing(face)]
        return SimplicialComplex(
            _maximal(tops),
            self._restrict_coloring({v for t in tops for v in t}),
            self._restrict_labels({v for t in tops for v in t}),
        )

    def closed_star(self, face) -> "SimplicialComplex":
        """Subcomplex generated by the facets containing ``face``."""
        face = as_face(face)
        if not self.has_face(face):
            raise FaceNotFoundError(f"{list(face)} is not a face")
        tops = self.facets_containing(face)
        verts = {v for t in tops for v in t}
        return SimplicialComplex(
            tops, self._restrict_coloring(verts), self._restrict_labels(verts)
        )

    def rank_select(self, colors) -> "SimplicialComplex":
        """Subcomplex of faces all of whose vertex colors lie in ``colors``."""
        if self._coloring is None:
            raise MissingColoringError("rank selection needs a coloring")
        allowed = set(colors)
        tops = [
            tuple(v for v in f if self._coloring[v] in allowed) for f in self._facets
        ]
        verts = {v for t in tops for v in t}
        return SimplicialComplex(
            _maximal(tops), self._restrict_coloring(verts), self._restrict_labels(verts)
        )

    def _restrict_coloring(self, verts):
        if self._coloring is None:
            return None
        return {v: self._coloring[v] for v in verts}

    def _restrict_labels(self, verts):
        if self._labels is None:
            return None
        kept = {v: self._labels[v] for v in verts if v in self._labels}
        return kept or None

    # -- connectivity ---------------------------------------------------------

    def is_connected(self) -> bool:
        """Graph connectivity of the 1-skeleton (void and single point count as connected)."""
        return _graph_connected(self._vertices, self.adjacency())

    def is_strongly_connected(self) -> bool:
        """Facet chain connectivity: consecutive facets share a codimension-1 face."""
        if not self.is_pure:
            raise PurityError("strong connectivity is only defined for pure complexes")
        facets = self._facets
        if len(facets) <= 1:
            return True
        by_ridge: dict[Face, list[int]] = {}
        for i, f in enumerate(facets):
            for ridge in combinations(f, len(f) - 1):
                by_ridge.setdefault(ridge, []).append(i)
        seen = {0}
        queue = [0]
        while queue:
            i = queue.pop()
            for ridge in combinations(facets[i], len(facets[i]) - 1):
                for j in by_ridge[ridge]:
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
        return len(seen) == len(facets)

    def check_properties(self) -> PropertyReport:
        """Exact tests for purity, balancedness, and connectivity of small-face links."""
        if "props" not in self._cache:
            pure = self.is_pure
            if self._coloring is not None and len(self.colors) == self.d:
                balanced = pure
            elif pure:
                balanced = find_balanced_coloring(self) is not None
            else:
                balanced = False
            links_ok = True
            for size in range(0, self.d - 1):
                for face in self.faces(size - 1):
                    if not self.link(face).is_connected():
                        links_ok = False
                        break
                if not links_ok:
                    break
            self._cache["props"] = PropertyReport(pure, balanced, links_ok)
        return self._cache["props"]

    # -- constructions --------------------------------------------------------

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """Complex of chains of nonempty faces, colored by face size.

        New vertex ids are dense, assigned in (size, lexicographic) order of
        the original faces; the original face is recorded in the labels table.
        """
        faces = sorted((f for f in self.face_set() if f), key=lambda f: (len(f), f))
        index = {f: i for i, f in enumerate(faces)}
        chains: set[Face] = set()
        for facet in self._facets:
            for order in permutations(facet):
                chain = tuple(
                    index[tuple(sorted(order[: k + 1]))] for k in range(len(order))
                )
                chains.add(tuple(sorted(chain)))
        return SimplicialComplex(
            sorted(chains, key=lambda f: (len(f), f)),
            coloring={i: len(f) for f, i in index.items()},
            labels={i: "-".join(map(str, f)) for f, i in index.items()},
        )

    def to_json(self) -> dict:
        data: dict = {"type": "complex", "facets": [list(f) for f in self._facets]}
        if self._coloring is not None:
            data["coloring"] = {str(v): c for v, c in sorted(self._coloring.items())}
        if self._labels is not None:
            data["labels"] = {str(v): s for v, s in sorted(self._labels.items())}
        return data

    @classmethod
    def from_json(cls, data) -> "SimplicialComplex":
        if not isinstance(data, dict) or data.get("type") != "complex":
            raise ValidationError('complex JSON must carry "type": "complex"')
        facets = data.get("facets")
        if not isinstance(facets, list):
            raise ValidationError('"facets" must be a list of vertex lists')
        seen = set()
        for f in facets:
            if not isinstance(f, list):
                raise ValidationError("each facet must be a list of vertex ids")
            if any(f[i] >= f[i + 1] for i in range(len(f) - 1)):
                raise ValidationError(f"facet {f} is not strictly ascending")
            t = tuple(f)
            if t in seen:
                raise ValidationError(f"duplicate facet: {f}")
            seen.add(t)
        coloring = data.get("coloring")
        labels = data.get("labels")
        return cls(
            [tuple(f) for f in facets],
            {int(v): c for v, c in coloring.items()} if coloring else None,
            {int(v): s for v, s in labels.items()} if labels else None,
        )


def h_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """Alternating-sum transform: h_i = sum_j (-1)^(i-j) C(d-j, d-i) f[j]."""
    d = len(f) - 1
    return tuple(
        sum((-1) ** (i - j) * comb(d - j, d - i) * f[j] for j in range(i + 1))
        for i in range(d + 1)
    )


def _graph_connected(vertices, adjacency) -> bool:
    if len(vertices) <= 1:
        return True
    start = vertices[0]
    seen = {start}
    queue = [start]
    while queue:
        u = queue.pop()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vertices)


def proper_coloring(vertices, adjacency, palette) -> dict[int, int] | None:
    """Proper graph coloring by backtracking, or None.

    The most constrained vertex (fewest remaining colors) is assigned first,
    ties broken by ascending id; colors are tried in ascending order, so the
    result is deterministic.
    """
    order = sorted(vertices)
    palette = sorted(palette)
    assignment: dict[int, int] = {}

    def next_vertex():
        best = None
        for v in order:
            if v in assignment:
                continue
            used = {assignment[u] for u in adjacency[v] if u in assignment}
            key = (len(palette) - len(used), v)
            if best is None or key < best[0]:
                best = (key, v, used)
        return best

    def solve() -> bool:
        pick = next_vertex()
        if pick is None:
            return True
        _, v, used = pick
        for c in palette:
            if c in used:
                continue
            assignment[v] = c
            if solve():
                return True
            del assignment[v]
        return False

    return dict(assignment) if solve() else None


def find_balanced_coloring(complex: SimplicialComplex) -> dict[int, int] | None:
    """A proper d-coloring of the 1-skeleton of a pure complex, or None."""
    if not complex.is_pure:
        raise PurityError("balanced colorings are defined for pure complexes")
    return proper_coloring(
        complex.vertices, complex.adjacency(), range(1, complex.d + 1)
    )


def connected_sum(
    k1: SimplicialComplex,
    k2: SimplicialComplex,
    face1,
    face2,
    matching: dict[int, int],
) -> SimplicialComplex:
    """Glue two pure complexes of equal dimension along matched faces.

    ``matching`` maps the vertices of ``face1`` bijectively onto the vertices
    of ``face2``.  When the glued faces are top-dimensional (the usual case),
    the identified facet is deleted from both sides; gluing along a smaller
    face is a wedge.  Vertices of ``k2`` are relabeled with fresh dense ids;
    when both complexes are colored, the colors of ``k2`` are permuted so the
    identification is color-preserving, keeping the sum balanced.
    """
    face1, face2 = as_face(face1), as_face(face2)
    if not (k1.is_pure and k2.is_pure):
        raise PurityError("connected sums need pure summands")
    if k1.dim != k2.dim:
        raise ValidationError(f"dimension mismatch: {k1.dim} vs {k2.dim}")
    if len(face1) != len(face2) or not face1:
        raise ValidationError("glued faces must be nonempty and of equal size")
    if not k1.has_face(face1):
        raise FaceNotFoundError(f"{list(face1)} is not a face of the first summand")
    if not k2.has_face(face2):
        raise FaceNotFoundError(f"{list(face2)} is not a face of the second summand")
    if set(matching.keys()) != set(face1) or set(matching.values()) != set(face2):
        raise ValidationError("matching must be a bijection from face1 onto face2")
    if (k1.coloring is None) != (k2.coloring is None):
        raise ValidationError("cannot align colors: exactly one summand is colored")

    inverse = {w: v for v, w in matching.items()}
    relabel: dict[int, int] = {}
    fresh = (max(k1.vertices) + 1) if k1.vertices else 0
    for v in k2.vertices:
        if v in inverse:
            relabel[v] = inverse[v]
        else:
            relabel[v] = fresh
            fresh += 1

    top = len(face1) == k1.dim + 1  # facet gluing deletes the identified facet
    facets = [f for f in k1.facets if not (top and f == face1)]
    facets += [
        tuple(sorted(relabel[v] for v in f))
        for f in k2.facets
        if not (top and f == face2)
    ]

    coloring = None
    if k1.coloring is not None:
        c1, c2 = k1.coloring, k2.coloring
        palette1 = sorted(set(c1.values()))
        palette2 = sorted(set(c2.values()))
        if len(palette1) != len(palette2):
            raise ValidationError("cannot align colors: palettes differ in size")
        perm = {c2[matching[v]]: c1[v] for v in face1}
        free_sources = [c for c in palette2 if c not in perm]
        free_targets = [c for c in palette1 if c not in set(perm.values())]
        perm.update(dict(zip(free_sources, free_targets)))
        coloring = dict(c1)
        for v in k2.vertices:
            if v not in inverse:
                coloring[relabel[v]] = perm[c2[v]]

    labels = None
    if k1.labels or k2.labels:
        labels = dict(k1.labels or {})
        for v, s in (k2.labels or {}).items():
            if v not in inverse:
                labels[relabel[v]] = s

    return SimplicialComplex(facets, coloring, labels)


def h_additivity_table(complex: SimplicialComplex) -> dict:
    """Compare each h_i with the sum of h_i over all size-i color selections.

    Returns ``{"holds": bool, "by_index": [{"i", "h", "sum_over_selections"}]}``.
    """
    h = complex.h_vector()
    palette = complex.colors
    rows = []
    holds = True
    for i in range(len(h)):
        total = 0
        for sel in combinations(palette, i):
            hs = complex.rank_select(sel).h_vector()
            total += hs[i] if i < len(hs) else 0
        rows.append({"i": i, "h": h[i], "sum_over_selections": total})
        holds = holds and (total == h[i])
    return {"holds": holds, "by_index": rows}
