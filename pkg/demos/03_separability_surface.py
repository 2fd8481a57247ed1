"""The separability surface F(dx, M) at small box size.

Scans the full (dx, M) domain at L = 0.01, prints the surface extremes
and a coarse text rendering, and writes the dense table to CSV for
external plotting.
"""

import sys

from vetkit import ScanGrid, scan_surface


def main():
    grid = ScanGrid()  # 99 x 60 points, L = 0.01
    rows = scan_surface(grid)

    fmax = max(rows, key=lambda r: r.f)
    fmin = min(rows, key=lambda r: r.f)
    print(f"scanned {len(rows)} points at L = {grid.l_values[0]}")
    print(f"  max F = {fmax.f:.8f} at (dx = {fmax.dx:.3f}, M = {fmax.m:.3f})")
    print(f"  min F = {fmin.f:.8f} at (dx = {fmin.dx:.3f}, M = {fmin.m:.3f})")
    print(f"  every point is strictly negative: {all(r.f < 0 for r in rows)}")
    print()

    # coarse text heat map of F - (-1/4), peaks marked by darker glyphs
    glyphs = " .:-=+*#%@"
    sub = [r for r in rows if r.l == grid.l_values[0]]
    dxs = sorted({r.dx for r in sub})[::12]
    ms = sorted({r.m for r in sub})[::6]
    lookup = {(r.dx, r.m): r.f for r in sub}
    lo = min(lookup.values())
    hi = max(lookup.values())
    print("F above its floor, dx across (0,1), M down [0,3]:")
    for m in ms:
        line = ""
        for dx in dxs:
            f = lookup[(dx, m)]
            t = (f - lo) / (hi - lo)
            line += glyphs[min(int(t * (len(glyphs) - 1)), len(glyphs) - 1)]
        print(f"  M={m:5.2f} |{line}|")

    out = sys.argv[1] if len(sys.argv) > 1 else "surface.csv"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("dx,M,L,F,f2,f4,negativity\n")
        for r in rows:
            fh.write(",".join(repr(x) for x in r) + "\n")
    print(f"\nwrote {len(rows)} rows to {out}")


if __name__ == "__main__":
    main()
