"""Projective equivalence of matrices: equal row spaces up to column scaling.

Both matrices are brought to a normal form. After row reduction to [I | P]
(in column order), the nonzero entries of P define a bipartite graph between
rows and non-pivot columns. Walking a BFS spanning forest of that graph, each
tree edge forces one row or column scaling that turns the entry into 1; the
pivot columns then take the inverse of their row's scaling so the identity
block survives. The resulting matrix depends only on the scaling class of the
row space, so comparing normal forms decides equivalence.
"""

import logging
from typing import NamedTuple

import networkx as nx
import numpy as np

from framelab.errors import LabelError
from framelab.linalg.matrix import Mat, rref

logger = logging.getLogger(__name__)


class ProjectiveForm(NamedTuple):
    """Normal form of a matrix under row operations and column scaling.

    rowspace(matrix) = rowspace(m @ diag(scaling)) for the input m.
    """
    matrix: Mat
    scaling: dict[str, int]
    components: list[tuple[str, ...]]


def _support_graph(reduced: np.ndarray, pivots: list[int]) -> nx.Graph:
    nrows, ncols = reduced.shape
    pivot_set = set(pivots)
    graph = nx.Graph()
    graph.add_nodes_from(("r", i) for i in range(nrows))
    graph.add_nodes_from(("c", j) for j in range(ncols) if j not in pivot_set)
    for i, j in zip(*np.nonzero(reduced)):
        if int(j) not in pivot_set:
            graph.add_edge(("r", int(i)), ("c", int(j)))
    return graph


def projective_normal_form(m: Mat) -> ProjectiveForm:
    """Canonical representative of the column-scaling class of rowspace(m)."""
    field = m.field
    p = field.p
    reduction = rref(m)
    basis = reduction.basis()
    reduced = basis.entries
    pivots = [m.col_index(c) for c in reduction.pivot_cols]
    nrows, ncols = reduced.shape

    graph = _support_graph(reduced, pivots)
    row_scale = np.ones(nrows, dtype=np.int64)
    col_scale = np.ones(ncols, dtype=np.int64)
    components = []
    for component in sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0]):
        root = component[0]
        for u, v in nx.bfs_edges(graph, root, sort_neighbors=sorted):
            if v[0] == "c":
                i, j = u[1], v[1]
                col_scale[j] = field.inv(int(row_scale[i] * reduced[i, j]))
            else:
                i, j = v[1], u[1]
                row_scale[i] = field.inv(int(reduced[i, j] * col_scale[j]))
        cols = [j for kind, j in component if kind == "c"]
        cols += [pivots[i] for kind, i in component if kind == "r"]
        components.append(tuple(m.col_labels[j] for j in sorted(cols)))

    for i, j in enumerate(pivots):
        col_scale[j] = field.inv(int(row_scale[i]))

    normal = (row_scale[:, np.newaxis] * reduced * col_scale[np.newaxis, :]) % p
    scaling = {label: int(col_scale[j]) for j, label in enumerate(m.col_labels)}
    return ProjectiveForm(Mat(field, basis.row_labels, m.col_labels, normal), scaling, components)


def projectively_equivalent(a: Mat, b: Mat) -> dict[str, int] | None:
    """A column scaling D with rowspace(a) = rowspace(b @ D), or None.

    The witness is normalised so that the first column of every connected
    block is left unscaled; comparing a matrix with itself gives all ones.
    """
    if a.p != b.p:
        raise LabelError(f"matrices live over GF({a.p}) and GF({b.p})")
    if set(a.col_labels) != set(b.col_labels) or len(a.col_labels) != len(b.col_labels):
        raise LabelError("projective equivalence needs the same column labels")
    b = b.select(cols=a.col_labels)
    form_a = projective_normal_form(a)
    form_b = projective_normal_form(b)
    if form_a.matrix.shape != form_b.matrix.shape:
        return None
    if not np.array_equal(form_a.matrix.entries, form_b.matrix.entries):
        return None

    field = a.field
    witness = {
        label: (form_b.scaling[label] * field.inv(form_a.scaling[label])) % field.p
        for label in a.col_labels
    }
    for component in form_a.components:
        lead = field.inv(witness[component[0]])
        for label in component:
            witness[label] = (witness[label] * lead) % field.p
    logger.debug("projective equivalence found on %d columns", len(witness))
    return witness
