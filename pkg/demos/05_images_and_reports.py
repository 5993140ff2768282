#!/usr/bin/env python3
"""File formats and report emission.

Objects can come from ASCII grids ('#'/'1' on, '.'/'0'/space off) or from
Netpbm PBM files, both the ASCII P1 and the packed-binary P4 flavor; a
parsed grid re-emitted and re-parsed is the same object.  Reports serialize
deterministically to JSON (stable key order) or to an aligned text table.
"""

from pixtopo import (
    Adjacency,
    ReportDocument,
    analyze,
    curve_report,
    emit_report,
    parse_ascii_grid,
    parse_pbm,
    to_ascii_grid,
    to_pbm,
)

ART = """\
.####.
#....#
#....#
#....#
#....#
.####.
"""


def main() -> None:
    print(__doc__)
    obj = parse_ascii_grid(ART)

    p1 = to_pbm(obj, binary=False)
    p4 = to_pbm(obj, binary=True)
    print(f"P1 encoding is {len(p1)} bytes, P4 is {len(p4)} bytes")
    assert parse_pbm(p1) == parse_pbm(p4) == parse_ascii_grid(to_ascii_grid(obj)) == obj
    print("round trips: ascii == P1 == P4\n")

    # rounded corners make this a 0-curve: the sides touch only diagonally
    doc = ReportDocument(
        source="demo-ring",
        report=analyze(obj),
        curves={Adjacency.ZERO: curve_report(obj, Adjacency.ZERO)},
    )
    print(emit_report(doc, "text"))
    print()
    print(emit_report(doc, "json"))


if __name__ == "__main__":
    main()
