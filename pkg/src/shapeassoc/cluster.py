"""Single-linkage agglomerative clustering on a similarity matrix.

Merging is on maximum similarity: the similarity between two clusters is the
largest similarity across any member pair, and each step joins the pair of
clusters with the highest such value. Merge levels are therefore exact input
entries, never arithmetic combinations, and they decrease monotonically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import SpecError

_CLAMP_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class SimilarityMatrix:
    """Symmetric matrix with unit diagonal and entries in [0, 1]."""

    ids: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        ids = tuple(self.ids)
        object.__setattr__(self, "ids", ids)
        v = np.array(self.values, dtype=np.float64)
        k = len(ids)
        if len(set(ids)) != k:
            raise SpecError("similarity matrix ids must be unique")
        if v.shape != (k, k):
            raise SpecError(f"matrix shape {v.shape} does not match {k} ids")
        if not np.all(np.isfinite(v)):
            raise SpecError("similarity matrix contains non-finite entries")
        if not np.array_equal(v, v.T):
            raise SpecError("similarity matrix must be exactly symmetric")
        if np.any(v < -_CLAMP_TOL) or np.any(v > 1.0 + _CLAMP_TOL):
            raise SpecError("similarity entries must lie in [0, 1] (within 1e-9)")
        if np.any(np.abs(np.diag(v) - 1.0) > _CLAMP_TOL):
            raise SpecError("similarity diagonal must be 1 (within 1e-9)")
        np.clip(v, 0.0, 1.0, out=v)
        np.fill_diagonal(v, 1.0)
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @classmethod
    def from_association(cls, ids, values) -> "SimilarityMatrix":
        """Absolute association |A| as the clustering similarity."""
        return cls(tuple(ids), np.abs(np.asarray(values, dtype=np.float64)))


@dataclass(frozen=True)
class MergeStep:
    """One agglomeration: the two clusters joined and the similarity level."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    level: float

    @property
    def members(self) -> tuple[str, ...]:
        return self.left + self.right


@dataclass(frozen=True, eq=False)
class Dendrogram:
    """Full merge history over a fixed leaf order."""

    leaves: tuple[str, ...]
    merges: tuple[MergeStep, ...]

    def __post_init__(self):
        if len(self.merges) != max(0, len(self.leaves) - 1):
            raise SpecError(
                f"{len(self.leaves)} leaves need {len(self.leaves) - 1} merges, "
                f"got {len(self.merges)}"
            )
        levels = [m.level for m in self.merges]
        if any(b > a for a, b in zip(levels, levels[1:])):
            raise SpecError("merge levels must be non-increasing")

    def levels(self) -> tuple[float, ...]:
        return tuple(m.level for m in self.merges)

    def nodes(self) -> tuple[frozenset, ...]:
        """Every cluster the tree contains: singletons plus each merge result."""
        out = [frozenset([leaf]) for leaf in self.leaves]
        out.extend(frozenset(m.members) for m in self.merges)
        return tuple(out)

    def to_dict(self) -> dict:
        return {
            "leaves": list(self.leaves),
            "merges": [
                {"left": list(m.left), "right": list(m.right), "level": m.level}
                for m in self.merges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"leaves: {', '.join(self.leaves)}"]
        for i, m in enumerate(self.merges):
            lines.append(
                f"merge {i + 1}: {{{', '.join(m.left)}}} + {{{', '.join(m.right)}}} "
                f"at {m.level!r}"
            )
        return "\n".join(lines) + "\n"

    def to_newick(self) -> str:
        """Newick with branch length 1 - level from each child to its parent."""
        label: dict[frozenset, str] = {frozenset([leaf]): leaf for leaf in self.leaves}
        for m in self.merges:
            left, right = frozenset(m.left), frozenset(m.right)
            length = format(1.0 - m.level, "g")
            label[left | right] = (
                f"({label.pop(left)}:{length},{label.pop(right)}:{length})"
            )
        root = frozenset(self.leaves)
        return f"{label[root]};"


def single_linkage(matrix: SimilarityMatrix) -> Dendrogram:
    """Merge the most similar clusters first; ties go to the earliest pair.

    Tie-breaking: among cross-cluster pairs achieving the maximum similarity
    exactly, the pair with the smallest (row, column) position in input order
    wins, so results are deterministic for any input.
    """
    ids = matrix.ids
    k = len(ids)
    if k < 2:
        raise SpecError(f"clustering needs at least 2 objects, got {k}")
    sim = matrix.values
    assignment = list(range(k))  # series index -> cluster id
    members: dict[int, list[int]] = {c: [c] for c in range(k)}
    merges = []
    for _ in range(k - 1):
        best = -1.0
        best_pair: tuple[int, int] | None = None
        for i in range(k):
            for j in range(i + 1, k):
                if assignment[i] != assignment[j] and sim[i, j] > best:
                    best = sim[i, j]
                    best_pair = (i, j)
        i, j = best_pair
        ci, cj = assignment[i], assignment[j]
        left = members.pop(ci)
        right = members.pop(cj)
        merges.append(
            MergeStep(
                tuple(ids[p] for p in left),
                tuple(ids[p] for p in right),
                float(best),
            )
        )
        merged = sorted(left + right)
        members[ci] = merged
        for p in merged:
            assignment[p] = ci
    return Dendrogram(leaves=ids, merges=tuple(merges))


def contains_cluster(tree: Dendrogram, cluster) -> bool:
    """True when the exact leaf set appears as a node of the tree."""
    wanted = frozenset(cluster)
    if not wanted:
        raise SpecError("cluster must not be empty")
    missing = wanted - set(tree.leaves)
    if missing:
        raise SpecError(f"unknown leaf ids: {sorted(missing)}")
    return wanted in set(tree.nodes())


def cut(tree: Dendrogram, k: int) -> tuple[tuple[str, ...], ...]:
    """Partition into k clusters by undoing the k-1 weakest merges.

    Levels are non-increasing, so this keeps the first len(leaves)-k merges.
    Clusters come back ordered by first appearance of a member, members in
    leaf order.
    """
    total = len(tree.leaves)
    if not 1 <= k <= total:
        raise SpecError(f"cut size must be in 1..{total}, got {k}")
    position = {leaf: p for p, leaf in enumerate(tree.leaves)}
    parent = list(range(total))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for m in tree.merges[: total - k]:
        a = find(position[m.left[0]])
        b = find(position[m.right[0]])
        parent[b] = a
    groups: dict[int, list[str]] = {}
    for leaf in tree.leaves:
        groups.setdefault(find(position[leaf]), []).append(leaf)
    return tuple(tuple(g) for g in groups.values())
