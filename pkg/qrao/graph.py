"""
Weighted undirected graphs, cut evaluation and the classical helpers around them:
random regular instances, largest-degree-first coloring, exhaustive MaxCut and the
edge-list text format.
"""

import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import numpy.typing as npt

from qrao.errors import InvalidArgumentError, ParseError, SizeLimitError
from qrao.logging_utils import get_logger

logger = get_logger(__name__)

Edge = Tuple[int, int, float]
Assignment = npt.NDArray[np.int8]

_BRUTE_FORCE_CHUNK = 1 << 16


@dataclass(frozen=True)
class Graph:
    """
    Weighted undirected simple graph.

    Edges are normalized to ``u < v`` and keep their input order. Unweighted
    graphs use weight 1.
    """

    num_vertices: int
    edges: Tuple[Edge, ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[float]] = ()):
        if num_vertices < 0:
            raise InvalidArgumentError(f"num_vertices must be non-negative, got {num_vertices}")

        normalized = []
        seen = set()
        for edge in edges:
            if len(edge) == 2:
                u, v, w = edge[0], edge[1], 1.0
            elif len(edge) == 3:
                u, v, w = edge
            else:
                raise InvalidArgumentError(f"edge {tuple(edge)} must be (u, v) or (u, v, w)")
            if int(u) != u or int(v) != v:
                raise InvalidArgumentError(f"edge endpoints must be integers, got {(u, v)}")
            u, v, w = int(u), int(v), float(w)
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InvalidArgumentError(
                    f"edge ({u}, {v}) out of range for {num_vertices} vertices"
                )
            if u == v:
                raise InvalidArgumentError(f"self-loop on vertex {u}")
            if not math.isfinite(w):
                raise InvalidArgumentError(f"edge ({u}, {v}) has non-finite weight {w}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidArgumentError(f"duplicate edge {key}")
            seen.add(key)
            normalized.append((key[0], key[1], w))

        object.__setattr__(self, "num_vertices", int(num_vertices))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def total_weight(self) -> float:
        return float(sum(w for _, _, w in self.edges))

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        neighbors: List[List[int]] = [[] for _ in range(self.num_vertices)]
        for u, v, _ in self.edges:
            neighbors[u].append(v)
            neighbors[v].append(u)
        return tuple(tuple(sorted(n)) for n in neighbors)

    @cached_property
    def edge_arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Endpoints and weights as parallel numpy arrays."""
        if not self.edges:
            return (np.zeros(0, dtype=np.int64),) * 2 + (np.zeros(0),)
        u, v, w = zip(*self.edges)
        return np.array(u, dtype=np.int64), np.array(v, dtype=np.int64), np.array(w)

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    @property
    def max_degree(self) -> int:
        return max((len(n) for n in self.adjacency), default=0)

    def is_weighted(self) -> bool:
        return any(w != 1.0 for _, _, w in self.edges)

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with nodes inserted in index order."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.num_vertices))
        graph.add_weighted_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class Coloring:
    """Partition of the vertices into color classes."""

    color_of: Tuple[int, ...]
    num_colors: int

    def classes(self) -> List[List[int]]:
        """Vertices of each color, in ascending vertex order."""
        groups: List[List[int]] = [[] for _ in range(self.num_colors)]
        for vertex, color in enumerate(self.color_of):
            groups[color].append(vertex)
        return groups

    def is_proper(self, g: Graph) -> bool:
        if len(self.color_of) != g.num_vertices:
            return False
        return all(self.color_of[u] != self.color_of[v] for u, v, _ in g.edges)


def as_assignment(values: Sequence[int], num_vertices: Optional[int] = None) -> Assignment:
    """Validate and convert a +/-1 sequence into an assignment array."""
    array = np.asarray(values)
    if array.ndim != 1:
        raise InvalidArgumentError("assignment must be one-dimensional")
    if num_vertices is not None and array.shape[0] != num_vertices:
        raise InvalidArgumentError(
            f"assignment has length {array.shape[0]}, graph has {num_vertices} vertices"
        )
    if not np.all((array == 1) | (array == -1)):
        raise InvalidArgumentError("assignment entries must be -1 or +1")
    return array.astype(np.int8)


def bits_to_assignment(bits: Union[str, Sequence[int]]) -> Assignment:
    """Map bits x to spins z with x = (1 - z)/2, i.e. 0 -> +1 and 1 -> -1."""
    values = [int(b) for b in bits]
    if any(b not in (0, 1) for b in values):
        raise InvalidArgumentError("bits must be 0 or 1")
    return np.array([1 - 2 * b for b in values], dtype=np.int8)


def assignment_to_bits(m: Sequence[int]) -> str:
    """Inverse of :func:`bits_to_assignment`, as a bitstring with vertex 0 first."""
    return "".join("0" if int(z) == 1 else "1" for z in as_assignment(m))


def cut_value(g: Graph, m: Sequence[int]) -> float:
    """
    Weight of the edges cut by ``m``: sum of (w/2)(1 - m_u m_v).

    Exact for integer weights.
    """
    spins = as_assignment(m, g.num_vertices).astype(np.int64)
    u, v, w = g.edge_arrays
    cut_mask = spins[u] != spins[v]
    return float(w[cut_mask].sum())


def brute_force_maxcut(
    g: Graph, max_vertices: Optional[int] = None
) -> Tuple[Assignment, float]:
    """
    Exhaustive MaxCut.

    Vertex 0 is pinned to +1 (complement symmetry), and assignments are scanned in
    lexicographic order of their bitstrings, so the first maximizer found is the
    lexicographically smallest one.

    Args:
        g: Graph to solve.
        max_vertices: Size cap; defaults to the configured brute-force limit.

    Returns:
        Maximizing assignment and its cut value.
    """
    if max_vertices is None:
        from qrao.config import Settings

        max_vertices = Settings.from_env().brute_force_max_vertices
    n = g.num_vertices
    if n > max_vertices:
        raise SizeLimitError(f"brute force is capped at {max_vertices} vertices, graph has {n}")
    if n == 0:
        return np.zeros(0, dtype=np.int8), 0.0

    u, v, w = g.edge_arrays
    total = g.total_weight
    # bit (n-1-vertex) of the index is the vertex's bit, so index order is string order
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)

    best_index, best_cut = 0, -math.inf
    for start in range(0, 1 << (n - 1), _BRUTE_FORCE_CHUNK):
        stop = min(start + _BRUTE_FORCE_CHUNK, 1 << (n - 1))
        index = np.arange(start, stop, dtype=np.int64)
        spins = 1 - 2 * ((index[:, None] >> shifts) & 1)
        cuts = 0.5 * (total - (spins[:, u] * spins[:, v]) @ w)
        local = int(np.argmax(cuts))
        if cuts[local] > best_cut:
            best_index, best_cut = start + local, float(cuts[local])

    bits = format(best_index, f"0{n}b")
    logger.debug("brute force solved", extra={"vertices": n, "cut": best_cut})
    return bits_to_assignment(bits), best_cut


def random_regular(n: int, degree: int, seed: int) -> Graph:
    """
    Random simple ``degree``-regular graph on ``n`` vertices.

    Uses the pairing model with restarts (networkx), deterministic for a fixed seed.
    """
    if n < 0 or degree < 0:
        raise InvalidArgumentError("n and degree must be non-negative")
    if (n * degree) % 2 != 0:
        raise InvalidArgumentError(f"n * degree must be even, got {n} * {degree}")
    if degree >= n and n > 0:
        raise InvalidArgumentError(f"degree must be below n, got degree={degree}, n={n}")
    generated = nx.random_regular_graph(degree, n, seed=seed)
    edges = sorted((min(a, b), max(a, b)) for a, b in generated.edges())
    return Graph(n, [(a, b, 1.0) for a, b in edges])


def ldf_coloring(g: Graph) -> Coloring:
    """
    Largest-degree-first greedy coloring.

    Vertices are visited by decreasing degree (ties: lower index first) and take the
    smallest color absent among already-colored neighbors, so at most
    ``max_degree + 1`` colors are used.
    """
    colors = nx.greedy_color(g.to_networkx(), strategy="largest_first")
    color_of = tuple(colors[v] for v in range(g.num_vertices))
    return Coloring(color_of=color_of, num_colors=max(color_of, default=-1) + 1)


def maxcut_gain(g: Graph, cut: float) -> float:
    """MaxCutGain: cut / W - 1/2, the excess over the random-assignment baseline."""
    total = g.total_weight
    if g.num_edges == 0 or total <= 0:
        raise InvalidArgumentError("MaxCutGain needs a positive total edge weight")
    return cut / total - 0.5


def _format_weight(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def write_edge_list(g: Graph) -> str:
    """Render ``g`` in the edge-list format, edges sorted by (u, v)."""
    lines = [f"# vertices {g.num_vertices}"]
    for u, v, w in sorted(g.edges):
        lines.append(f"{u} {v} {_format_weight(w)}")
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, source: str = "<text>") -> Graph:
    """
    Parse the edge-list format: ``u v w`` per line, optional ``# vertices N`` header.

    Without a header the vertex count is one more than the largest index seen.
    Other ``#`` lines and blank lines are ignored.
    """
    declared: Optional[int] = None
    edges: List[Edge] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "vertices":
                try:
                    declared = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {parts[1]!r}", source, number)
            continue
        parts = line.split()
        if len(parts) not in (2, 3):
            raise ParseError(f"expected 'u v w', got {line!r}", source, number)
        try:
            u, v = int(parts[0]), int(parts[1])
            w = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise ParseError(f"non-numeric field in {line!r}", source, number)
        edges.append((u, v, w))

    n = declared if declared is not None else max((max(u, v) for u, v, _ in edges), default=-1) + 1
    try:
        return Graph(n, edges)
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), source) from exc


def read_edge_list(path: Union[str, Path]) -> Graph:
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        raise ParseError("file is not valid UTF-8", str(path), line) from exc
    return parse_edge_list(text, source=str(path))
