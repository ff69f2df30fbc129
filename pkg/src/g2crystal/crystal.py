"""Crystal graphs and breadth-first generation of highest-weight components."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Hashable

from .cartan import INDICES, Weight

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    """Raised when a component has more vertices than the configured budget."""


@dataclass(frozen=True)
class Vertex:
    payload: Any
    weight: Weight


@dataclass
class CrystalGraph:
    """A connected crystal graph with a distinguished highest-weight vertex.

    ``vertices`` preserves BFS order; ``parents`` maps every non-highest
    vertex to the (vertex, label) it was first reached from.
    """

    highest: str
    vertices: dict[str, Vertex] = field(default_factory=dict)
    edges: list[tuple[str, int, str]] = field(default_factory=list)
    parents: dict[str, tuple[str, int]] = field(default_factory=dict)

    def __post_init__(self):
        self._succ: dict[tuple[str, int], str] = {}
        self._pred: dict[tuple[str, int], str] = {}
        for src, i, dst in self.edges:
            self._link(src, i, dst)

    def _link(self, src: str, i: int, dst: str) -> None:
        if (src, i) in self._succ or (dst, i) in self._pred:
            raise ValueError(f"duplicate {i}-edge at {src} -> {dst}")
        self._succ[(src, i)] = dst
        self._pred[(dst, i)] = src

    def add_edge(self, src: str, i: int, dst: str) -> None:
        self._link(src, i, dst)
        self.edges.append((src, i, dst))

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, key: object) -> bool:
        return key in self.vertices

    def f(self, i: int, key: str) -> str | None:
        return self._succ.get((key, i))

    def e(self, i: int, key: str) -> str | None:
        return self._pred.get((key, i))

    def payload(self, key: str) -> Any:
        return self.vertices[key].payload

    def weight(self, key: str) -> Weight:
        return self.vertices[key].weight

    def string_length(self, i: int, key: str, forward: bool = True) -> int:
        step = self.f if forward else self.e
        count = 0
        cur = step(i, key)
        while cur is not None:
            count += 1
            cur = step(i, cur)
        return count

    def word_to(self, key: str) -> list[int]:
        """Labels of an f-path from the highest vertex to ``key``, in application order."""
        word = []
        while key != self.highest:
            key, i = self.parents[key]
            word.append(i)
        word.reverse()
        return word

    def keys(self) -> list[str]:
        return list(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CrystalGraph):
            return NotImplemented
        return (
            self.highest == other.highest
            and list(self.vertices.items()) == list(other.vertices.items())
            and self.edges == other.edges
        )


def generate(
    seed: Hashable,
    lower: Callable[[int, Any], Any],
    key: Callable[[Any], str],
    weight: Callable[[Any], Weight],
    cap: int = DEFAULT_CAP,
) -> CrystalGraph:
    """Breadth-first closure of ``seed`` under ``lower(i, x)`` (None kills).

    Each BFS level is sorted by key before expansion, so vertex order and
    edge order depend only on the crystal, not on hashing.
    """
    seed_key = key(seed)
    graph = CrystalGraph(highest=seed_key)
    graph.vertices[seed_key] = Vertex(seed, weight(seed))
    level = [(seed_key, seed)]
    while level:
        found: dict[str, Any] = {}
        for src_key, x in level:
            for i in INDICES:
                y = lower(i, x)
                if y is None:
                    continue
                dst_key = key(y)
                if dst_key not in graph.vertices and dst_key not in found:
                    if len(graph.vertices) + len(found) >= cap:
                        raise CapExceeded(f"component exceeds vertex cap {cap}")
                    found[dst_key] = y
                    graph.parents[dst_key] = (src_key, i)
                graph.add_edge(src_key, i, dst_key)
        level = sorted(found.items())
        for k, y in level:
            graph.vertices[k] = Vertex(y, weight(y))
    return graph
