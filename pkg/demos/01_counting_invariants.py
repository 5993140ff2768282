#!/usr/bin/env python3
"""Tour of the basic counters on a gallery of small shapes.

For every shape we print p (pixels), v (corner vertices), c0/c1 (connected
components under 0- and 1-adjacency), h (proper holes), b (2x2 blocks) and
both tunnel counts: t_direct counts lattice points where exactly two pixels
meet diagonally, t_formula evaluates v - 2(p + c - h) + b.  They agree on
every input; that agreement is the library's built-in self-check.
"""

from pixtopo import DigitalObject, analyze, parse_ascii_grid

GALLERY = {
    "single pixel": "#",
    "domino": "##",
    "diagonal pair": "#.\n.#",
    "diamond": ".#.\n#.#\n.#.",
    "2x2 block": "##\n##",
    "3x3 square": "###\n###\n###",
    "square ring": "###\n#.#\n###",
    "two rooms": "#####\n#.#.#\n#####",
    "spiral": "######\n.....#\n####.#\n#..#.#\n#....#\n######",
}


def show(name: str, obj: DigitalObject) -> None:
    rep = analyze(obj)
    print(f"{name:>14}:  p={rep.p:<3} v={rep.v:<3} c0={rep.c0:<2} c1={rep.c1:<2} "
          f"h={rep.h:<2} b={rep.b:<2} t={rep.t_direct:<2} "
          f"formula={rep.t_formula:<3} consistent={rep.consistent}")


def main() -> None:
    print(__doc__)
    for name, art in GALLERY.items():
        show(name, parse_ascii_grid(art))

    print()
    print("The diamond in detail: four pixels that pairwise meet only at")
    print("corners.  Each of the four shared corners is a tunnel, and the")
    print("center cell is a proper hole:")
    print()
    print("    .#.")
    print("    #.#     t = v - 2(p + c - h) + b = 12 - 2(4 + 1 - 1) + 0 = 4")
    print("    .#.")


if __name__ == "__main__":
    main()
