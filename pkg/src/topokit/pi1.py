"""Edge-path machinery for the fundamental group.

The group of a connected complex is presented on its oriented edges: every
tree edge of a chosen spanning tree dies, and every triangle face imposes a
two-step/one-step substitution relation.  Edges are canonically oriented
from the lower to the higher vertex id, with the reversed use encoded as a
formal inverse, so words are tuples of signed 1-based generator indices.

Two further ingredients make the presentation shrink:

* a *nested* spanning tree, whose inner part spans the subcomplex selected
  by a pair of colors, certifies that the selected edges generate;
* a constructive path rewriter pushes any edge path into the selected
  subcomplex by detouring around each off-color vertex through its link,
  emitting a replayable certificate of elementary moves.

Every move is one of: expanding one edge into two across a triangle,
contracting two edges into one across a triangle, cancelling an edge
followed by its reverse, or inserting such a pair.  For simplicial posets
the triangle witness is a rank-3 element and edges carry the id of the
rank-2 element they traverse, which keeps parallel edges apart.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .complex import SimplicialComplex
from .errors import (
    ContractViolationError,
    FaceNotFoundError,
    PropertyError,
    ValidationError,
)
from .homology import smith_normal_form, snf_diagonal
from .poset import SimplicialPoset

ComplexEdge = tuple[int, int]


class PosetEdge(NamedTuple):
    """An oriented traversal of a rank-2 element; ``elem`` is None for the
    stationary edge (v, v)."""

    elem: int | None
    init: int
    term: int

    def reverse(self) -> "PosetEdge":
        return PosetEdge(self.elem, self.term, self.init)


def _canon(u: int, v: int) -> ComplexEdge:
    return (u, v) if u <= v else (v, u)


# -- edge paths ----------------------------------------------------------------


def check_edge_path(complex: SimplicialComplex, path) -> tuple[ComplexEdge, ...]:
    """Validate chaining and face membership; returns the path as a tuple."""
    edges = tuple((int(u), int(v)) for u, v in path)
    if not edges:
        raise ValidationError("edge paths must be nonempty")
    for (u, v), (u2, _) in zip(edges, edges[1:]):
        if v != u2:
            raise ValidationError(f"path breaks between ({u},{v}) and the next edge")
    for u, v in edges:
        face = (u,) if u == v else _canon(u, v)
        if not complex.has_face(face):
            raise FaceNotFoundError(f"({u},{v}) is not an edge of the complex")
    return edges


def check_poset_edge_path(poset: SimplicialPoset, path) -> tuple[PosetEdge, ...]:
    edges = tuple(PosetEdge(e[0], int(e[1]), int(e[2])) for e in path)
    if not edges:
        raise ValidationError("edge paths must be nonempty")
    for e, e2 in zip(edges, edges[1:]):
        if e.term != e2.init:
            raise ValidationError(f"path breaks between {e} and {e2}")
    for e in edges:
        if e.elem is None:
            if e.init != e.term or poset.rank(e.init) != 1:
                raise ValidationError(f"{e} is not a stationary edge at an atom")
        else:
            if poset.rank(e.elem) != 2:
                raise ValidationError(f"element {e.elem} is not an edge element")
            if e.init == e.term or poset.atoms_of(e.elem) != {e.init, e.term}:
                raise ValidationError(f"{e} does not traverse element {e.elem}")
    return edges


# -- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class Certificate:
    """A replayable list of elementary moves between two edge paths."""

    setting: str  # "complex" | "poset"
    moves: tuple

    def to_json(self) -> dict:
        out = []
        for move in self.moves:
            kind = move[0]
            if kind in ("expand", "contract"):
                out.append({"kind": kind, "pos": move[1], "witness": list(move[2]) if self.setting == "complex" else move[2]})
            elif kind == "cancel":
                out.append({"kind": kind, "pos": move[1]})
            else:
                out.append({"kind": kind, "pos": move[1], "edge": list(move[2])})
        return {"setting": self.setting, "moves": out}

    @classmethod
    def from_json(cls, data) -> "Certificate":
        setting = data.get("setting")
        if setting not in ("complex", "poset"):
            raise ValidationError("certificate setting must be 'complex' or 'poset'")
        moves = []
        for entry in data.get("moves", []):
            kind = entry.get("kind")
            pos = int(entry.get("pos"))
            if kind in ("expand", "contract"):
                witness = entry.get("witness")
                if setting == "complex":
                    moves.append((kind, pos, tuple(int(x) for x in witness)))
                else:
                    moves.append((kind, pos, int(witness)))
            elif kind == "cancel":
                moves.append((kind, pos))
            elif kind == "insert":
                edge = entry.get("edge")
                if setting == "complex":
                    moves.append((kind, pos, (int(edge[0]), int(edge[1]))))
                else:
                    moves.append(
                        (kind, pos, PosetEdge(None if edge[0] is None else int(edge[0]), int(edge[1]), int(edge[2])))
                    )
            else:
                raise ValidationError(f"unknown move kind {kind!r}")
        return cls(setting, tuple(moves))


def _apply_move_complex(complex, path, move):
    kind = move[0]
    if kind in ("expand", "contract"):
        _, pos, triple = move
        a, b, c = triple
        witness = tuple(sorted(set((a, b, c))))
        if not complex.has_face(witness):
            raise ValidationError(f"witness {list(witness)} is not a face")
        if kind == "expand":
            if not 0 <= pos < len(path) or path[pos] != (a, c):
                raise ValidationError(f"expand at {pos} does not match the path")
            return path[:pos] + ((a, b), (b, c)) + path[pos + 1 :]
        if not 0 <= pos < len(path) - 1 or path[pos] != (a, b) or path[pos + 1] != (b, c):
            raise ValidationError(f"contract at {pos} does not match the path")
        return path[:pos] + ((a, c),) + path[pos + 2 :]
    if kind == "cancel":
        _, pos = move
        if not 0 <= pos < len(path) - 1:
            raise ValidationError("cancel position out of range")
        (u, v), nxt = path[pos], path[pos + 1]
        if nxt != (v, u):
            raise ValidationError("cancel needs an edge followed by its reverse")
        if len(path) == 2:
            return ((u, u),)
        return path[:pos] + path[pos + 2 :]
    if kind == "insert":
        _, pos, (u, v) = move
        face = (u,) if u == v else _canon(u, v)
        if not complex.has_face(face):
            raise ValidationError(f"({u},{v}) is not an edge of the complex")
        if not 0 <= pos <= len(path):
            raise ValidationError("insert position out of range")
        junction = path[pos][0] if pos < len(path) else path[-1][1]
        if junction != u:
            raise ValidationError("inserted pair does not chain with the path")
        return path[:pos] + ((u, v), (v, u)) + path[pos:]
    raise ValidationError(f"unknown move kind {kind!r}")


def _rank3_triangle(poset, sigma):
    """The three atoms and three edge elements of a rank-3 element."""
    if poset.rank(sigma) != 3:
        raise ValidationError(f"witness {sigma} is not a rank-3 element")
    atoms = sorted(poset.atoms_of(sigma))
    sides = sorted(y for y in poset.down_set(sigma) if poset.rank(y) == 2)
    if len(atoms) != 3 or len(sides) != 3:
        raise ValidationError(f"element {sigma} is not a triangle")
    return atoms, sides


def _apply_move_poset(poset, path, move):
    kind = move[0]
    if kind == "expand":
        _, pos, sigma = move
        if not 0 <= pos < len(path):
            raise ValidationError("expand position out of range")
        cur = path[pos]
        if cur.elem is None:
            raise ValidationError("cannot expand a stationary edge across a triangle")
        atoms, sides = _rank3_triangle(poset, sigma)
        if cur.elem not in sides:
            raise ValidationError(f"edge element {cur.elem} is not a side of {sigma}")
        x, z = cur.init, cur.term
        rest = set(atoms) - {x, z}
        if len(rest) != 1:
            raise ValidationError("triangle atoms do not extend the edge")
        y = rest.pop()
        first = [e for e in sides if e != cur.elem and poset.atoms_of(e) == {x, y}]
        second = [e for e in sides if e != cur.elem and poset.atoms_of(e) == {y, z}]
        if len(first) != 1 or len(second) != 1:
            raise ValidationError(f"sides of {sigma} do not match the expansion")
        return path[:pos] + (PosetEdge(first[0], x, y), PosetEdge(second[0], y, z)) + path[pos + 1 :]
    if kind == "contract":
        _, pos, sigma = move
        if not 0 <= pos < len(path) - 1:
            raise ValidationError("contract position out of range")
        e1, e2 = path[pos], path[pos + 1]
        if e1.elem is None or e2.elem is None or e1.elem == e2.elem:
            raise ValidationError("contract needs two distinct edge elements")
        atoms, sides = _rank3_triangle(poset, sigma)
        x, y, z = e1.init, e1.term, e2.term
        if {x, y, z} != set(atoms):
            raise ValidationError("triangle atoms do not match the contracted edges")
        if e1.elem not in sides or e2.elem not in sides:
            raise ValidationError("contracted edges are not sides of the witness")
        third = [e for e in sides if e not in (e1.elem, e2.elem)]
        if len(third) != 1 or poset.atoms_of(third[0]) != {x, z}:
            raise ValidationError("witness has no side joining the outer atoms")
        return path[:pos] + (PosetEdge(third[0], x, z),) + path[pos + 2 :]
    if kind == "cancel":
        _, pos = move
        if not 0 <= pos < len(path) - 1:
            raise ValidationError("cancel position out of range")
        e1, e2 = path[pos], path[pos + 1]
        if e2 != e1.reverse():
            raise ValidationError("cancel needs an edge followed by its inverse")
        if len(path) == 2:
            return (PosetEdge(None, e1.init, e1.init),)
        return path[:pos] + path[pos + 2 :]
    if kind == "insert":
        _, pos, edge = move
        check_poset_edge_path(poset, [edge])
        if not 0 <= pos <= len(path):
            raise ValidationError("insert position out of range")
        junction = path[pos].init if pos < len(path) else path[-1].term
        if junction != edge.init:
            raise ValidationError("inserted pair does not chain with the path")
        return path[:pos] + (edge, edge.reverse()) + path[pos:]
    raise ValidationError(f"unknown move kind {kind!r}")


def apply_certificate(space, source, certificate: Certificate):
    """Replay every move on ``source``; raises on the first invalid move."""
    if certificate.setting == "complex":
        if not isinstance(space, SimplicialComplex):
            raise ValidationError("complex certificate needs a simplicial complex")
        path = check_edge_path(space, source)
        for move in certificate.moves:
            path = _apply_move_complex(space, path, move)
        return path
    if certificate.setting == "poset":
        if not isinstance(space, SimplicialPoset):
            raise ValidationError("poset certificate needs a simplicial poset")
        path = check_poset_edge_path(space, source)
        for move in certificate.moves:
            path = _apply_move_poset(space, path, move)
        return path
    raise ValidationError(f"unknown certificate setting {certificate.setting!r}")


def verify_certificate(space, source, target, certificate: Certificate) -> bool:
    """True iff the certificate replays cleanly and lands exactly on ``target``."""
    try:
        final = apply_certificate(space, source, certificate)
        if certificate.setting == "complex":
            expected = check_edge_path(space, target)
        else:
            expected = check_poset_edge_path(space, target)
    except (ValidationError, FaceNotFoundError):
        return False
    return final == expected


# -- nested spanning trees -------------------------------------------------------


class NestedSpanningTree:
    """A spanning tree of the whole complex containing a spanning tree of the
    color-selected subcomplex; parent pointers answer path-to-root queries."""

    def __init__(self, complex, colors, root, parent, inner_vertices, inner_edges):
        self.complex = complex
        self.colors = frozenset(colors)
        self.root = root
        self.parent = dict(parent)
        self.inner_vertices = frozenset(inner_vertices)
        self.inner_edges = frozenset(inner_edges)
        self.edges = frozenset(
            _canon(v, p) for v, p in self.parent.items() if p is not None
        )

    def path_to_root(self, v) -> list[int]:
        if v not in self.parent:
            raise FaceNotFoundError(f"vertex {v} is not in the tree")
        out = [v]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return out

    def edge_path(self, a, b) -> tuple[ComplexEdge, ...]:
        """The unique tree path from a to b as a sequence of oriented edges."""
        pa = self.path_to_root(a)
        pb = self.path_to_root(b)
        ia, ib = len(pa) - 1, len(pb) - 1
        while ia >= 0 and ib >= 0 and pa[ia] == pb[ib]:
            ia -= 1
            ib -= 1
        verts = pa[: ia + 2] + (pb[ib::-1] if ib >= 0 else [])
        return tuple(zip(verts, verts[1:]))


def _require_pi1_ready(complex: SimplicialComplex, colors=None) -> frozenset | None:
    palette = complex.colors  # raises MissingColoringError when uncolored
    if len(palette) != complex.d:
        raise PropertyError(
            f"coloring uses {len(palette)} colors on a complex with facet size {complex.d}"
        )
    report = complex.check_properties()
    if not report.all_hold:
        raise PropertyError(f"pure/balanced/connected-links checks failed: {report.as_dict()}")
    if colors is None:
        return None
    colors = frozenset(int(c) for c in colors)
    if len(colors) != 2 or not colors <= set(palette):
        raise ValidationError(f"need exactly two palette colors, got {sorted(colors)}")
    return colors


def default_basepoint(complex: SimplicialComplex, colors) -> int:
    """Minimum-id vertex of the color-selected subcomplex."""
    kappa = complex.coloring
    allowed = set(colors)
    sel = [v for v in complex.vertices if kappa[v] in allowed]
    if not sel:
        raise FaceNotFoundError(f"no vertices colored in {sorted(allowed)}")
    return min(sel)


def build_nested_tree(complex, colors, root=None) -> NestedSpanningTree:
    """BFS tree of the selected subcomplex extended to a BFS tree of everything.

    Vertices are explored in ascending id order, so the tree is deterministic.
    """
    colors = _require_pi1_ready(complex, colors)
    kappa = complex.coloring
    if root is None:
        root = default_basepoint(complex, colors)
    if kappa.get(root) not in colors:
        raise FaceNotFoundError(f"root {root} is not in the selected subcomplex")
    adj = complex.adjacency()
    selected = [v for v in complex.vertices if kappa[v] in colors]

    parent: dict[int, int | None] = {root: None}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if kappa[w] in colors and w not in parent:
                parent[w] = u
                queue.append(w)
    if len(parent) != len(selected):
        raise ContractViolationError(
            "selected subcomplex is disconnected although the property checks passed"
        )
    inner_vertices = frozenset(parent)
    inner_edges = frozenset(
        _canon(v, p) for v, p in parent.items() if p is not None
    )

    queue = deque(sorted(inner_vertices))
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if len(parent) != len(complex.vertices):
        raise ContractViolationError("complex is disconnected although checks passed")
    return NestedSpanningTree(complex, colors, root, parent, inner_vertices, inner_edges)


# -- presentations ----------------------------------------------------------------


@dataclass(frozen=True)
class Generator:
    """One presentation generator with its provenance."""

    edge: ComplexEdge
    tree: bool = False
    selected: bool | None = None
    realization: tuple | None = None


class GroupPresentation:
    """Generators plus relator words (tuples of signed 1-based indices)."""

    def __init__(self, generators, relators):
        self.generators: tuple[Generator, ...] = tuple(generators)
        rels = []
        n = len(self.generators)
        for rel in relators:
            word = tuple(int(x) for x in rel)
            for x in word:
                if x == 0 or abs(x) > n:
                    raise ValidationError(f"relator letter {x} references no generator")
            rels.append(word)
        self.relators: tuple[tuple[int, ...], ...] = tuple(rels)
        self._index = {g.edge: i + 1 for i, g in enumerate(self.generators)}

    def generator_index(self, edge) -> int:
        edge = tuple(edge)
        if edge not in self._index:
            raise ValidationError(f"no generator for edge {edge}")
        return self._index[edge]

    def abelianization(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, invariant factors > 1) of the abelianized group."""
        n = len(self.generators)
        rows = []
        for rel in self.relators:
            row = [0] * n
            for x in rel:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        if not rows or n == 0:
            return n, ()
        _, diag_matrix, _ = smith_normal_form(rows)
        diag = snf_diagonal(diag_matrix)
        rank = sum(1 for x in diag if x)
        return n - rank, tuple(x for x in diag if x > 1)

    def render(self) -> str:
        lines = [
            f"g{i + 1} := edge({g.edge[0]},{g.edge[1]})"
            for i, g in enumerate(self.generators)
        ]
        for rel in self.relators:
            lines.append(" ".join(f"g{x}" if x > 0 else f"g{-x}^-1" for x in rel))
        return "\n".join(lines)

    def __repr__(self):
        return (
            f"GroupPresentation({len(self.generators)} generators, "
            f"{len(self.relators)} relators)"
        )


def free_reduce(word) -> list[int]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word) -> list[int]:
    word = list(word)
    while len(word) >= 2 and word[0] == -word[-1]:
        word = word[1:-1]
    return word


def invert_word(word) -> list[int]:
    return [-x for x in reversed(word)]


def full_presentation(complex, tree: NestedSpanningTree) -> GroupPresentation:
    """One generator per edge; tree edges die, triangles impose substitution."""
    if not complex.is_connected():
        raise ValidationError("presentations need a connected complex")
    kappa = complex.coloring
    edges = complex.faces(1) if complex.dim >= 1 else []
    index = {e: i + 1 for i, e in enumerate(edges)}
    generators = [
        Generator(
            edge=e,
            tree=e in tree.edges,
            selected=(kappa[e[0]] in tree.colors and kappa[e[1]] in tree.colors)
            if kappa is not None
            else None,
        )
        for e in edges
    ]
    relators: list[tuple[int, ...]] = [
        (index[e],) for e in edges if e in tree.edges
    ]
    if complex.dim >= 2:
        for a, b, c in complex.faces(2):
            relators.append((index[(a, b)], index[(b, c)], -index[(a, c)]))
    return GroupPresentation(generators, relators)


def loop_to_word(presentation, tree, path) -> tuple[int, ...]:
    """Read the word of a loop at the tree root: tree and stationary letters drop."""
    path = check_edge_path(tree.complex, path)
    if path[0][0] != tree.root or path[-1][1] != tree.root:
        raise ValidationError("loop must start and end at the tree root")
    word = []
    for u, v in path:
        if u == v:
            continue
        e = _canon(u, v)
        if e in tree.edges:
            continue
        idx = presentation.generator_index(e)
        word.append(idx if (u, v) == e else -idx)
    return tuple(word)


def word_to_loop(presentation, tree, word) -> tuple[ComplexEdge, ...]:
    """Inverse reading: each letter becomes tree-path + edge + tree-path."""
    segments: list[ComplexEdge] = []
    n = len(presentation.generators)
    for letter in word:
        if letter == 0 or abs(letter) > n:
            raise ValidationError(f"unknown generator {letter}")
        a, b = presentation.generators[abs(letter) - 1].edge
        if letter < 0:
            a, b = b, a
        segments.extend(tree.edge_path(tree.root, a))
        segments.append((a, b))
        segments.extend(tree.edge_path(b, tree.root))
    if not segments:
        return ((tree.root, tree.root),)
    return tuple(segments)


# -- rewriting into the selected subcomplex ---------------------------------------


def _bridge_vertex(complex, colors, kappa, mid, tail):
    """Minimum-id selected vertex completing {mid, tail} to a face, avoiding
    the color of tail."""
    allowed = colors - {kappa[tail]}
    best = None
    base = (mid,) if mid == tail else _canon(mid, tail)
    for facet in complex.facets_containing(base):
        for w in facet:
            if kappa[w] in allowed and (best is None or w < best):
                best = w
    if best is None:
        raise ContractViolationError(
            f"no selected vertex completes ({mid},{tail}) to a face; hypotheses broken"
        )
    return best


def _link_detour(complex, colors, kappa, center, start, goal):
    """Shortest path from start to goal through selected edges of the link of
    center, BFS with ascending tie-breaks."""
    if start == goal:
        return [start]
    adj: dict[int, set[int]] = {start: set(), goal: set()}
    for facet in complex.facets_containing((center,)):
        sel = sorted(w for w in facet if w != center and kappa[w] in colors)
        for a, b in combinations(sel, 2):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
    parent = {start: None}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        if u == goal:
            break
        for w in sorted(adj[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    if goal not in parent:
        raise ContractViolationError(
            f"link of {center} has no selected path {start} -> {goal}; hypotheses broken"
        )
    out = [goal]
    while parent[out[-1]] is not None:
        out.append(parent[out[-1]])
    out.reverse()
    return out


def rewrite_path_to_colors(complex, colors, path):
    """Rewrite an edge path into the two-color subcomplex, with a certificate.

    The first off-color interior vertex is bypassed: its outgoing edge is
    expanded through a bridge vertex of the missing color, and its incoming
    edge is re-routed along a selected path in the vertex's link, one
    triangle move at a time.  The returned certificate replays from the
    input path to the returned path.
    """
    colors = _require_pi1_ready(complex, colors)
    work = list(check_edge_path(complex, path))
    kappa = complex.coloring
    if kappa[work[0][0]] not in colors or kappa[work[-1][1]] not in colors:
        raise ValidationError("path endpoints must lie in the selected subcomplex")

    moves: list[tuple] = []

    def apply(move):
        nonlocal work
        work = list(_apply_move_complex(complex, tuple(work), move))
        moves.append(move)

    idx = 0
    while idx < len(work):
        u, v = work[idx]
        if kappa[v] in colors:
            idx += 1
            continue
        mid = v
        tail = work[idx + 1][1]
        bridge = _bridge_vertex(complex, colors, kappa, mid, tail)
        apply(("expand", idx + 1, (mid, bridge, tail)))
        hops = _link_detour(complex, colors, kappa, mid, u, bridge)
        if len(hops) == 1:
            apply(("contract", idx, (u, mid, u)))
        else:
            for j in range(len(hops) - 2):
                apply(("expand", idx + j, (hops[j], hops[j + 1], mid)))
            apply(("contract", idx + len(hops) - 2, (hops[-2], mid, bridge)))
    return tuple(work), Certificate("complex", tuple(moves))


# -- presentation restriction and simplification -----------------------------------


def restrict_presentation(presentation, complex, colors, tree) -> GroupPresentation:
    """Eliminate every generator outside the selected subcomplex.

    Off-color generators are rewritten through their tree loops; the result
    is presented on exactly the selected non-tree edges, whose count equals
    the second h-entry of the selected subcomplex.
    """
    colors = frozenset(int(c) for c in colors)
    if tree.colors != colors:
        raise ValidationError("tree was built for a different color pair")
    kappa = complex.coloring
    kept: list[int] = []
    for i, g in enumerate(presentation.generators):
        if not g.tree and kappa[g.edge[0]] in colors and kappa[g.edge[1]] in colors:
            kept.append(i)
    new_letter = {old + 1: new + 1 for new, old in enumerate(kept)}

    def selected_word(loop):
        word = []
        for u, v in loop:
            if u == v:
                continue
            e = _canon(u, v)
            if e in tree.edges:
                continue
            old = presentation.generator_index(e)
            if old not in new_letter:
                raise ContractViolationError("rewritten loop left the selected subcomplex")
            word.append(new_letter[old] if (u, v) == e else -new_letter[old])
        return word

    images: dict[int, tuple[int, ...]] = {}
    for i, g in enumerate(presentation.generators):
        letter = i + 1
        if g.tree:
            images[letter] = ()
        elif letter in new_letter:
            images[letter] = (new_letter[letter],)
        else:
            loop = word_to_loop(presentation, tree, (letter,))
            rewritten, _ = rewrite_path_to_colors(complex, colors, loop)
            images[letter] = tuple(selected_word(rewritten))

    relators = []
    for rel in presentation.relators:
        word: list[int] = []
        for x in rel:
            img = images[abs(x)]
            word.extend(img if x > 0 else invert_word(img))
        word = free_reduce(word)
        if word:
            relators.append(tuple(word))

    generators = [
        Generator(edge=presentation.generators[i].edge, tree=False, selected=True)
        for i in kept
    ]
    return GroupPresentation(generators, relators)


def _cyclic_canonical(word) -> tuple[int, ...]:
    word = tuple(word)
    if not word:
        return word
    options = []
    for w in (word, tuple(invert_word(word))):
        for s in range(len(w)):
            options.append(w[s:] + w[:s])
    return min(options)


def tietze_simplify(presentation, max_rounds: int = 50) -> GroupPresentation:
    """Bounded, deterministic presentation cleanup.

    Each round free- and cyclically reduces relators, drops empty ones,
    eliminates generators that occur exactly once in some relator (shortest
    relator first, and only when the substitution does not grow the total
    relator length), and drops duplicate relators up to rotation and
    inversion.  Stops at a fixpoint or after ``max_rounds``.
    """
    gens = list(presentation.generators)
    alive = [True] * len(gens)
    rels = [list(r) for r in presentation.relators]

    for _ in range(max_rounds):
        snapshot = (alive[:], [tuple(r) for r in rels])
        rels = [cyclic_reduce(free_reduce(r)) for r in rels]
        rels = [r for r in rels if r]

        progress = True
        while progress:
            progress = False
            order = sorted(range(len(rels)), key=lambda k: (len(rels[k]), k))
            for ri in order:
                rel = rels[ri]
                counts: dict[int, int] = {}
                for x in rel:
                    counts[abs(x)] = counts.get(abs(x), 0) + 1
                pos = next((p for p, x in enumerate(rel) if counts[abs(x)] == 1), None)
                if pos is None:
                    continue
                x = rel[pos]
                g = abs(x)
                tau = rel[pos + 1 :] + rel[:pos]
                replacement = invert_word(tau) if x > 0 else list(tau)
                trial = []
                for rj, other in enumerate(rels):
                    if rj == ri:
                        continue
                    word: list[int] = []
                    for y in other:
                        if abs(y) == g:
                            word.extend(replacement if y > 0 else invert_word(replacement))
                        else:
                            word.append(y)
                    word = cyclic_reduce(free_reduce(word))
                    if word:
                        trial.append(word)
                if sum(len(r) for r in trial) <= sum(len(r) for r in rels):
                    rels = trial
                    alive[g - 1] = False
                    progress = True
                    break

        seen = set()
        deduped = []
        for r in rels:
            key = _cyclic_canonical(r)
            if key not in seen:
                seen.add(key)
                deduped.append(r)
        rels = deduped
        if (alive, [tuple(r) for r in rels]) == snapshot:
            break

    mapping: dict[int, int] = {}
    new_gens = []
    for i, g in enumerate(gens):
        if alive[i]:
            mapping[i + 1] = len(new_gens) + 1
            new_gens.append(g)
    new_rels = [
        tuple(mapping[x] if x > 0 else -mapping[-x] for x in r) for r in rels
    ]
    return GroupPresentation(new_gens, new_rels)


def generator_bounds(complex, tietze_rounds: int = 50) -> dict:
    """Per color pair: selected h2, restricted and post-simplification
    generator counts; ``best`` is the smallest certified upper bound."""
    _require_pi1_ready(complex)
    palette = complex.colors
    per_pair: dict[tuple[int, int], dict] = {}
    best = None
    for pair in combinations(palette, 2):
        sel = frozenset(pair)
        tree = build_nested_tree(complex, sel)
        pres = full_presentation(complex, tree)
        restricted = restrict_presentation(pres, complex, sel, tree)
        simplified = tietze_simplify(restricted, tietze_rounds)
        h2 = complex.rank_select(sel).h_vector()[2]
        per_pair[pair] = {
            "h2_selected": h2,
            "generators": len(restricted.generators),
            "post_tietze": len(simplified.generators),
            "presentation": simplified,
        }
        if best is None or per_pair[pair]["post_tietze"] < best:
            best = per_pair[pair]["post_tietze"]
    return {"per_pair": per_pair, "best": best if best is not None else 0}


# -- poset edge-path groups ---------------------------------------------------------


def _parse_poset_loop(poset, loop) -> tuple[PosetEdge, ...]:
    """Read an order-complex loop in ranks {1, 2} as a poset edge path.

    Consecutive steps (atom, element)(element, atom) traverse the rank-2
    element; a step that returns to the same atom becomes the element
    traversed forth and back.
    """
    steps = [e for e in loop if e[0] != e[1]]
    if not steps:
        v = loop[0][0]
        return (PosetEdge(None, v, v),)
    verts = [steps[0][0]] + [e[1] for e in steps]
    if len(verts) % 2 == 0:
        raise ContractViolationError("selected loop has odd length; cannot parse")
    out: list[PosetEdge] = []
    for i in range(0, len(verts) - 1, 2):
        a, e, b = verts[i], verts[i + 1], verts[i + 2]
        if poset.rank(a) != 1 or poset.rank(e) != 2 or poset.rank(b) != 1:
            raise ContractViolationError("loop does not alternate atoms and edge elements")
        atoms = sorted(poset.atoms_of(e))
        if a not in atoms or b not in atoms:
            raise ContractViolationError(f"element {e} does not touch atoms {a}, {b}")
        if a == b:
            other = atoms[1] if atoms[0] == a else atoms[0]
            out.append(PosetEdge(e, a, other))
            out.append(PosetEdge(e, other, a))
        else:
            out.append(PosetEdge(e, a, b))
    return tuple(out)


def poset_edge_path_group(poset, base=None) -> GroupPresentation:
    """Present the edge-path group of a pure, connected-links simplicial poset.

    The order complex is rank-colored, its presentation is restricted to the
    rank pair {1, 2}, and each surviving generator is realized as a poset
    edge path (carried in ``Generator.realization``).
    """
    poset.require_valid()
    if not poset.is_pure:
        raise PropertyError("poset edge-path groups need a pure poset")
    if not poset.links_connected():
        raise PropertyError("poset edge-path groups need connected links")
    atoms = poset.atoms()
    if not atoms:
        return GroupPresentation((), ())
    if base is None:
        base = min(atoms)
    if poset.rank(base) != 1:
        raise FaceNotFoundError(f"basepoint {base} must be an atom")
    if poset.rank_of_poset < 2:
        return GroupPresentation((), ())

    oc = poset.order_complex()
    sel = frozenset({1, 2})
    tree = build_nested_tree(oc, sel, base)
    pres = full_presentation(oc, tree)
    restricted = restrict_presentation(pres, oc, sel, tree)

    generators = []
    for i, g in enumerate(restricted.generators):
        loop = word_to_loop(restricted, tree, (i + 1,))
        generators.append(
            Generator(
                edge=g.edge,
                tree=False,
                selected=True,
                realization=_parse_poset_loop(poset, loop),
            )
        )
    return GroupPresentation(generators, restricted.relators)
