#!/usr/bin/env python3
"""Regenerates the golden fixture files in this directory.

Standalone brute-force reference, deliberately independent of the C++
library: masks are written out literally, responses are direct 3x3 dot
products against a clamp-to-edge neighborhood, codes come from sorting
(value descending, direction index ascending), histograms from counting
codes. Run from anywhere; writes fixture_*.json next to this script.
"""

import json
import os

# The eight compass masks, three +5 weights rotating counterclockwise
# around the ring, zero center. Index 0 has its +5 column on the right.
MASKS = [
    [[-3, -3, 5], [-3, 0, 5], [-3, -3, 5]],
    [[-3, 5, 5], [-3, 0, 5], [-3, -3, -3]],
    [[5, 5, 5], [-3, 0, -3], [-3, -3, -3]],
    [[5, 5, -3], [5, 0, -3], [-3, -3, -3]],
    [[5, -3, -3], [5, 0, -3], [5, -3, -3]],
    [[-3, -3, -3], [5, 0, -3], [5, 5, -3]],
    [[-3, -3, -3], [-3, 0, -3], [5, 5, 5]],
    [[-3, -3, -3], [-3, 0, 5], [-3, 5, 5]],
]

# 56 eight-bit values with exactly three bits set, ascending.
LDP_BIN_CODES = [c for c in range(256) if bin(c).count("1") == 3]


def sample(img, x, y):
    rows, cols = len(img), len(img[0])
    return img[min(max(x, 0), rows - 1)][min(max(y, 0), cols - 1)]


def responses(img, x, y):
    out = []
    for mask in MASKS:
        acc = 0
        for k in (-1, 0, 1):
            for l in (-1, 0, 1):
                acc += mask[k + 1][l + 1] * sample(img, x + k, y + l)
        out.append(acc)
    return out


def ldp_code(resp, k=3):
    order = sorted(range(8), key=lambda i: (-resp[i], i))
    code = 0
    for i in order[:k]:
        code |= 1 << i
    return code


def lbp_code(img, x, y):
    center = sample(img, x, y)
    ring = [(x - 1, y - 1), (x - 1, y), (x - 1, y + 1), (x, y + 1),
            (x + 1, y + 1), (x + 1, y), (x + 1, y - 1), (x, y - 1)]
    code = 0
    for i, (nx, ny) in enumerate(ring):
        if sample(img, nx, ny) >= center:
            code |= 1 << i
    return code


def build_fixture(name, img):
    rows, cols = len(img), len(img[0])
    resp = [responses(img, x, y) for x in range(rows) for y in range(cols)]
    ldp_codes = [ldp_code(r) for r in resp]
    lbp_codes = [lbp_code(img, x, y) for x in range(rows) for y in range(cols)]
    ldp_hist = [0] * 56
    for c in ldp_codes:
        ldp_hist[LDP_BIN_CODES.index(c)] += 1
    lbp_hist = [0] * 256
    for c in lbp_codes:
        lbp_hist[c] += 1
    return {
        "name": name,
        "rows": rows,
        "cols": cols,
        "pixels": [v for row in img for v in row],
        "responses": resp,
        "ldp_codes": ldp_codes,
        "lbp_codes": lbp_codes,
        "ldp_histogram": ldp_hist,
        "lbp_histogram": lbp_hist,
    }


FIXTURES = {
    "fixture_ramp3": [
        [1, 2, 3],
        [4, 5, 6],
        [7, 8, 9],
    ],
    "fixture_bump3": [
        [1, 2, 3],
        [4, 5, 9],
        [7, 8, 9],
    ],
    "fixture_mixed4": [
        [10, 200, 30, 40],
        [50, 60, 170, 80],
        [90, 100, 110, 120],
        [130, 140, 150, 160],
    ],
    "fixture_spots5": [
        [0, 255, 17, 4, 99],
        [23, 5, 230, 41, 7],
        [128, 64, 32, 16, 8],
        [255, 0, 255, 0, 255],
        [13, 77, 202, 151, 66],
    ],
}


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    for name, img in FIXTURES.items():
        fx = build_fixture(name, img)
        path = os.path.join(here, name + ".json")
        with open(path, "w") as f:
            json.dump(fx, f, indent=1)
            f.write("\n")
        print(f"wrote {path}")
    center = responses(FIXTURES["fixture_ramp3"], 1, 1)
    print("ramp3 center responses:", center)
    print("ramp3 center ldp code:", ldp_code(center))
    print("ramp3 center lbp code:", lbp_code(FIXTURES["fixture_ramp3"], 1, 1))


if __name__ == "__main__":
    main()
