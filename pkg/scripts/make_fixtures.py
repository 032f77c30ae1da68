#!/usr/bin/env python3
"""Regenerate the bundled test fixture under tests/data/.

A ~1000-article link graph (preferential attachment, so it has hubs
worth classifying) padded with a handful of non-main-namespace pages,
plus a Zipf-activity edit log over 12 categories that includes the
anonymous author 0. Fully seeded; rerunning reproduces identical files.
"""

from pathlib import Path

from wgm.ingest import EditRecord, NodeRecord, write_category_map, write_edges, write_edit_log, write_nodes
from wgm.synth import generate_preferential, generate_zipf_edits

OUT = Path(__file__).resolve().parent.parent / "tests" / "data"

GRAPH_SEED = 2005
EDIT_SEED = 77
N_ARTICLES = 1000
N_TALK = 25


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    graph = generate_preferential(N_ARTICLES, 3, seed=GRAPH_SEED)
    nodes = [NodeRecord(i, f"Article {i}", 0) for i in range(N_ARTICLES)]
    edges = [tuple(e) for e in graph.edges().tolist()]
    # pad with talk pages so the loader pipeline has something to filter
    for j in range(N_TALK):
        talk_id = N_ARTICLES + j
        nodes.append(NodeRecord(talk_id, f"Talk:Article {j}", 1))
        edges.append((talk_id, j))
        edges.append((j, talk_id))
    write_nodes(nodes, OUT / "nodes.tsv")
    write_edges(edges, OUT / "edges.tsv")

    data = generate_zipf_edits(
        n_authors=150, n_categories=12, total_edits=6000, s=1.1, seed=EDIT_SEED
    )
    records = list(data.records)
    # anonymous aggregate: a spread of edits under author id 0
    records += [EditRecord(0, i % 12) for i in range(48)]
    write_edit_log(records, OUT / "edits.tsv")
    write_category_map(data.category_map, OUT / "catmap.tsv", OUT / "catnames.tsv")

    print(f"wrote fixture ({N_ARTICLES} articles, {len(edges)} edge lines) to {OUT}")


if __name__ == "__main__":
    main()
