"""The finite real tree spanned by the root and a list of vertices."""

import json
from dataclasses import dataclass
from typing import ClassVar

import numpy as np
from beartype import beartype
from pydantic import BaseModel, ConfigDict

from levytree.errors import DomainError, PathFormatError
from levytree.paths import ContourExcursion, eval_path, range_min
from levytree.types import FloatArray, Time

ROOT = 0


class VertexSchema(BaseModel):
    """A vertex of a serialized spanned tree."""

    model_config: ClassVar[ConfigDict] = {"frozen": True}

    id: int
    label: int | None = None
    coincident: list[int] = []


class EdgeSchema(BaseModel):
    """An edge of a serialized spanned tree."""

    model_config: ClassVar[ConfigDict] = {"frozen": True}

    parent: int
    child: int
    length: float


class SpannedTreeSchema(BaseModel):
    """JSON form of a spanned tree."""

    vertices: list[VertexSchema]
    edges: list[EdgeSchema]


@beartype
@dataclass(frozen=True)
class SpannedTree:
    """A labeled finite real tree with edge lengths.

    Vertex 0 is the root and carries label 0. Branch points are unlabeled
    vertices of degree at least three. Labels whose vertices coincide share one
    vertex.

    Attributes:
        parents: Parent of every vertex, -1 for the root.
        heights: Distance of every vertex from the root.
        labels: The labels carried by every vertex, in increasing order.

    """

    parents: tuple[int, ...]
    heights: tuple[float, ...]
    labels: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        """Number of vertices."""
        return len(self.parents)

    @property
    def label_count(self) -> int:
        """Number of labels, the root included."""
        return sum(len(carried) for carried in self.labels)

    def vertex_of(self, label: int) -> int:
        """Return the vertex carrying ``label``."""
        for vertex, carried in enumerate(self.labels):
            if label in carried:
                return vertex
        msg = f"No vertex carries label {label}."
        raise DomainError(msg)

    def edges(self) -> list[tuple[int, int, float]]:
        """Return (parent, child, length) for every non-root vertex."""
        return [
            (parent, child, self.heights[child] - self.heights[parent])
            for child, parent in enumerate(self.parents)
            if parent >= 0
        ]

    def preorder(self) -> list[int]:
        """Vertices ordered so that every parent precedes its children."""
        children: list[list[int]] = [[] for _ in self.parents]
        for child, parent in enumerate(self.parents):
            if parent >= 0:
                children[parent].append(child)
        order: list[int] = []
        pending = [ROOT]
        while pending:
            vertex = pending.pop()
            order.append(vertex)
            pending.extend(reversed(children[vertex]))
        return order

    def ancestors(self, vertex: int) -> list[int]:
        """Return ``vertex`` and its ancestors up to the root."""
        chain = [vertex]
        while self.parents[chain[-1]] >= 0:
            chain.append(self.parents[chain[-1]])
        return chain

    def distance(self, u: int, v: int) -> float:
        """Length of the path between two vertices."""
        above_u = set(self.ancestors(u))
        meet = next(a for a in self.ancestors(v) if a in above_u)
        return self.heights[u] + self.heights[v] - 2 * self.heights[meet]

    def labeled_distance_matrix(self) -> FloatArray:
        """Distances between labels 0..p computed through the tree."""
        count = self.label_count
        vertex = [self.vertex_of(label) for label in range(count)]
        values = np.zeros((count, count), dtype=np.float64)
        for i in range(count):
            for j in range(i + 1, count):
                values[i, j] = values[j, i] = self.distance(vertex[i], vertex[j])
        return values

    def relabel(self, permutation: list[int]) -> "SpannedTree":
        """Return the tree with label ``k`` renamed ``permutation[k]``."""
        if sorted(permutation) != list(range(self.label_count)):
            msg = f"{permutation} is not a permutation of the labels."
            raise DomainError(msg)
        return SpannedTree(
            parents=self.parents,
            heights=self.heights,
            labels=tuple(
                tuple(sorted(permutation[label] for label in carried))
                for carried in self.labels
            ),
        )

    def to_schema(self) -> SpannedTreeSchema:
        """Return the JSON schema object."""
        vertices = [
            VertexSchema(
                id=vertex,
                label=carried[0] if carried else None,
                coincident=list(carried[1:]),
            )
            for vertex, carried in enumerate(self.labels)
        ]
        edges = [
            EdgeSchema(parent=parent, child=child, length=length)
            for parent, child, length in self.edges()
        ]
        return SpannedTreeSchema(vertices=vertices, edges=edges)

    def to_json(self) -> str:
        """Serialize to JSON."""
        return self.to_schema().model_dump_json()

    @classmethod
    def from_json(cls, text: str) -> "SpannedTree":
        """Parse the JSON produced by :meth:`to_json`."""
        try:
            schema = SpannedTreeSchema.model_validate(json.loads(text))
        except ValueError as exc:
            msg = f"Invalid spanned tree JSON: {exc}"
            raise PathFormatError(msg) from exc
        size = len(schema.vertices)
        parents = [-1] * size
        lengths = [0.0] * size
        for edge in schema.edges:
            parents[edge.child] = edge.parent
            lengths[edge.child] = edge.length
        tree = cls(parents=tuple(parents), heights=(0.0,) * size, labels=((),) * size)
        heights = [0.0] * size
        for vertex in tree.preorder():
            if parents[vertex] >= 0:
                heights[vertex] = heights[parents[vertex]] + lengths[vertex]
        labels = [
            tuple(
                ([] if vertex.label is None else [vertex.label]) + vertex.coincident
            )
            for vertex in sorted(schema.vertices, key=lambda v: v.id)
        ]
        return cls(parents=tuple(parents), heights=tuple(heights), labels=tuple(labels))


@beartype
def spanned_subtree(h: ContourExcursion, times: list[Time]) -> SpannedTree:
    """Build the tree spanned by the root and the vertices visited at ``times``.

    Label ``k`` (1-based) is the vertex visited at ``times[k - 1]``. Vertices are
    inserted in time order along the current rightmost branch; a new vertex
    hangs at height m_H(previous time, time), and a branch point is created
    when that height falls strictly inside an edge. Zero-length edges are
    contracted, so a vertex equal to an existing vertex takes over its label.
    """
    if not times:
        msg = "A spanned subtree needs at least one vertex."
        raise DomainError(msg)
    for t in times:
        h.check_time(t)
    parents: list[int] = [-1]
    heights: list[float] = [0.0]
    labels: list[list[int]] = [[0]]
    stack: list[int] = [ROOT]
    previous: Time = 0
    order = sorted(range(len(times)), key=lambda k: (times[k], k))
    for k in order:
        t = times[k]
        height = eval_path(h, t)
        meet = range_min(h, previous, t)
        popped: int | None = None
        while heights[stack[-1]] > meet:
            popped = stack.pop()
        attach = stack[-1]
        if heights[attach] < meet:
            attach = len(parents)
            parents.append(stack[-1])
            heights.append(meet)
            labels.append([])
            if popped is not None:
                parents[popped] = attach
            stack.append(attach)
        if height == meet:
            labels[attach].append(k + 1)
        else:
            parents.append(attach)
            heights.append(height)
            labels.append([k + 1])
            stack.append(len(parents) - 1)
        previous = t
    return SpannedTree(
        parents=tuple(parents),
        heights=tuple(float(x) for x in heights),
        labels=tuple(tuple(sorted(carried)) for carried in labels),
    )
