"""Integer s-t minimum cut returning the minimal source side."""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

_INT32_MAX = 2**31 - 1


def min_cut(n_nodes: int, tails, heads, caps, source: int, sink: int):
    """Return ``(cut_value, source_side)`` for nonnegative integer capacities.

    ``source_side`` is the set of nodes reachable from the source in the
    residual graph of a maximum flow, i.e. the inclusion-minimal minimum cut.
    Parallel arcs are merged by summing capacities.
    """
    tails = np.asarray(tails, dtype=np.int64)
    heads = np.asarray(heads, dtype=np.int64)
    caps = np.asarray(caps, dtype=object if _too_big(caps) else np.int64)
    if caps.dtype == object or caps.sum() > _INT32_MAX:
        return _min_cut_networkx(n_nodes, tails, heads, caps, source, sink)

    cap = sp.csr_array((caps.astype(np.int32), (tails, heads)), shape=(n_nodes, n_nodes))
    cap.sum_duplicates()
    res = maximum_flow(cap, source, sink)
    residual = (cap - res.flow).tocsr()
    residual.data[residual.data < 0] = 0
    residual.eliminate_zeros()
    reach = breadth_first_order(residual, source, directed=True, return_predecessors=False)
    return int(res.flow_value), set(reach.tolist())


def _too_big(caps) -> bool:
    return any(int(c) > _INT32_MAX for c in caps)


def _min_cut_networkx(n_nodes, tails, heads, caps, source, sink):
    import networkx as nx

    G = nx.DiGraph()
    G.add_nodes_from(range(n_nodes))
    for u, v, c in zip(tails.tolist(), heads.tolist(), caps.tolist()):
        c = int(c)
        if G.has_edge(u, v):
            G[u][v]["capacity"] += c
        else:
            G.add_edge(u, v, capacity=c)
    R = nx.algorithms.flow.preflow_push(G, source, sink)
    reach = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        for v, attr in R[u].items():
            if v not in reach and attr["capacity"] - attr["flow"] > 0:
                reach.add(v)
                stack.append(v)
    return int(R.graph["flow_value"]), reach
