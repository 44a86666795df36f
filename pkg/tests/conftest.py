import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from bicover.graphs import graph_from_edges  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=7, min_edges=0):
    n = draw(st.integers(max(min_n, 2) if min_edges else min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=min(min_edges, len(pairs)))
                  if pairs else st.just([]))
    return graph_from_edges(n, chosen)


@pytest.fixture
def tmp_graph(tmp_path):
    from bicover.formats import write_graph

    def write(G, name="g.g"):
        path = tmp_path / name
        write_graph(path, G)
        return path

    return write
