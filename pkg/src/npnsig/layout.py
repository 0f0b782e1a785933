"""Selection flags and the fixed MSV segment layout shared by both kernel backends.

An MSV row is ``[n, |f*|]`` followed, for each enabled family in this order, by

* OCV1: ``2n`` one-literal cofactor counts
* OCV2: ``4 * C(n, 2)`` two-literal cofactor counts
* OIV: ``n`` influences
* OSV: ``|f*|`` 1-word sensitivities then ``2**n - |f*|`` 0-word sensitivities
* OSDV: the ``(n+1) x n`` grid over 1-words then the grid over 0-words

All segments except the first two are sorted non-decreasing (grids are not).
"""
from math import comb

OCV1 = 1
OCV2 = 2
OIV = 4
OSV = 8
OSDV = 16
ALL = OCV1 | OCV2 | OIV | OSV | OSDV

FAMILIES = (("ocv1", OCV1), ("ocv2", OCV2), ("oiv", OIV), ("osv", OSV), ("osdv", OSDV))


def segment_lengths(n: int, flags: int) -> list[tuple[str, int]]:
    out = [("header", 2)]
    if flags & OCV1:
        out.append(("ocv1", 2 * n))
    if flags & OCV2:
        out.append(("ocv2", 4 * comb(n, 2)))
    if flags & OIV:
        out.append(("oiv", n))
    if flags & OSV:
        out.append(("osv", 1 << n))
    if flags & OSDV:
        out.append(("osdv1", (n + 1) * n))
        out.append(("osdv0", (n + 1) * n))
    return out


def msv_length(n: int, flags: int) -> int:
    return sum(k for _, k in segment_lengths(n, flags))


def segment_slices(n: int, flags: int) -> dict[str, slice]:
    pos = 0
    out = {}
    for name, k in segment_lengths(n, flags):
        out[name] = slice(pos, pos + k)
        pos += k
    return out
