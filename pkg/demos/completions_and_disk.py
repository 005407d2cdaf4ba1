"""Bongartz and co-Bongartz completions of one module, drawn on the disk.

Usage: python3 completions_and_disk.py [output-dir]
"""

import os
import sys

from nakatau.algebra import format_pair, named_algebra, parse_list
from nakatau.disk import diagram_of, render, to_arc
from nakatau.reduction import v_map
from nakatau.tilting import bongartz, bongartz_complement, cobongartz, cobongartz_complement


def main(out_dir: str) -> None:
    A = named_algebra("a4")
    (m,) = parse_list(A, "m:0:1:2")
    B, C = bongartz(A, [m]), cobongartz(A, [m])
    print("module        ", to_arc(A, m)[0])
    print("Bongartz      ", format_pair(A, B))
    print("co-Bongartz   ", format_pair(A, C))
    # V sends the co-Bongartz complement onto the Bongartz complement
    for x in cobongartz_complement(A, [m]):
        print(f"  V({format_pair(A, [x])}) = {format_pair(A, [v_map(A, [m], x)])}")
    assert sorted(v_map(A, [m], x) for x in cobongartz_complement(A, [m])) == sorted(bongartz_complement(A, [m]))

    os.makedirs(out_dir, exist_ok=True)
    for label, pair in (("bongartz", B), ("cobongartz", C)):
        path = os.path.join(out_dir, f"a4_{label}.svg")
        with open(path, "w") as fh:
            fh.write(render(diagram_of(A, pair), "svg"))
        print("wrote", path)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "disk_out")
