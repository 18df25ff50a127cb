"""Falling-factorial coefficients of pi_G^(H) for small G and connected H.

Lists which pairs have non-integral N_t (only t! N_t is forced to be an integer).

    python scripts/gcp_table.py --max-g 3 --max-h-edges 3
"""
import argparse

from chromagraph.gcp import gcp_partition
from chromagraph.graph import enumerate_connected_graphs, enumerate_graphs, graph_label


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-g", type=int, default=3)
    ap.add_argument("--max-h-edges", type=int, default=3)
    ap.add_argument("--cells", type=int, default=12, help="cap on |V(G)| * |V(H)|")
    args = ap.parse_args()

    fractional = 0
    for n in range(1, args.max_g + 1):
        for g in enumerate_graphs(n):
            for h in enumerate_connected_graphs(args.max_h_edges):
                if g.n * h.n > args.cells:
                    continue
                p = gcp_partition(g, h)
                frac = any(not isinstance(c, int) for c in p.coeffs.values())
                fractional += frac
                coeffs = ", ".join(f"N_{t}={c}" for t, c in p.coeffs.items()) or "0"
                print(f"G={g.edges()!s:<28} H={graph_label(h):<6} {coeffs}{'   *' if frac else ''}")
    print(f"{fractional} pairs with a non-integral coefficient (marked *)")


if __name__ == "__main__":
    main()
