"""
Seeded random regular graphs from networkx's pairing-model sampler.
"""

import logging
import random

import networkx as nx

from grundylab.graphs.graph import Graph, graph_from_networkx
from grundylab.graphs.structure import is_connected
from grundylab.utils.config import DEFAULT_SOLVER_CONFIG, SolverConfig
from grundylab.utils.error_handler import SamplerError, handle_errors

# Configure logging
logger = logging.getLogger(__name__)


@handle_errors
def random_k_regular(
    n: int,
    k: int,
    seed: int,
    config: SolverConfig = DEFAULT_SOLVER_CONFIG,
    connected: bool = False,
) -> Graph:
    """
    Sample a simple k-regular graph on ``n`` vertices.

    Every draw comes from :func:`networkx.random_regular_graph` fed by one
    private generator seeded with ``seed``, so equal seeds give equal graphs.

    Args:
        n: Order
        k: Degree
        seed: Seed of the private generator
        config: Supplies the resampling budget
        connected: Resample until the graph is connected

    Returns:
        The sampled graph

    Raises:
        SamplerError: If ``n * k`` is odd, ``k >= n``, or no connected graph
            turns up within the budget
    """
    if (n * k) % 2 != 0:
        raise SamplerError(f"n * k must be even, got n={n}, k={k}")
    if not 0 <= k < n:
        raise SamplerError(f"Need 0 <= k < n, got n={n}, k={k}")

    rng = random.Random(seed)
    label = f"random_{k}reg_n{n}_s{seed}"
    for attempt in range(config.random_regular_max_attempts):
        try:
            nx_graph = nx.random_regular_graph(k, n, seed=rng)
        except nx.NetworkXError as e:
            raise SamplerError(f"networkx rejected n={n}, k={k}: {e}")
        g = graph_from_networkx(nx_graph, label=label)
        if not connected or is_connected(g):
            return g
        logger.debug(f"Draw {attempt + 1} for n={n}, k={k} is disconnected, resampling")
    raise SamplerError(
        f"No connected {k}-regular graph on {n} vertices after {config.random_regular_max_attempts} draws"
    )
