#!/usr/bin/env python3
"""Regenerate fixtures/ from the hypavg binary and networkx."""
import argparse
import pathlib
import subprocess

import networkx as nx


def write_edges(path, g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    lines = [f"# vertices {g.number_of_nodes()} edges {g.number_of_edges()}"]
    lines += [f"{min(u, v)} {max(u, v)}" for u, v in sorted(g.edges(), key=lambda e: (min(e), max(e)))]
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bin", required=True)
    ap.add_argument("--out", default="fixtures")
    args = ap.parse_args()
    root = pathlib.Path(args.out)
    graphs, witness, dist = root / "graphs", root / "witness", root / "dist"
    for d in (graphs, witness, dist):
        d.mkdir(parents=True, exist_ok=True)

    write_edges(graphs / "c4.edges", nx.cycle_graph(4))
    write_edges(graphs / "c6.edges", nx.cycle_graph(6))
    write_edges(graphs / "c12.edges", nx.cycle_graph(12))
    write_edges(graphs / "petersen.edges", nx.petersen_graph())
    write_edges(graphs / "grid3x3.edges", nx.grid_2d_graph(3, 3))
    write_edges(graphs / "grid3x4.edges", nx.grid_2d_graph(3, 4))
    write_edges(graphs / "cube3.edges", nx.hypercube_graph(3))
    write_edges(graphs / "k33.edges", nx.complete_bipartite_graph(3, 3))
    write_edges(graphs / "tree15.edges", nx.balanced_tree(2, 3))

    # 3-atom distributions: c12 on {0,4,8}, grid3x3 on corners 0, 2, 8
    (dist / "c12_atoms.dist").write_text("# three equal atoms\n0 1\n4 1\n8 1\n")
    (dist / "grid3x3_atoms.dist").write_text("# three equal atoms\n0 1\n2 1\n8 1\n")

    runs = [
        ("slim1-thin4", 6, 200000),
        ("minsize1-insize3", 6, 2000000),
        ("fat-insize1", 6, 1000),
        ("fat-insize1", 10, 1000),
    ]
    for kind, param, budget in runs:
        stem = kind if kind != "fat-insize1" else f"{kind}-n{param}"
        subprocess.run(
            [args.bin, "witness", "--kind", kind, "--param", str(param), "--budget", str(budget),
             "--seed", "1", "--out", str(witness / f"{stem}.json"), "--edges", str(graphs / f"{stem}.edges")],
            check=True)


if __name__ == "__main__":
    main()
