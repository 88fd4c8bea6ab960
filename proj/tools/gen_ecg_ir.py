#!/usr/bin/env python3
"""Generate data/ecg_ir.txt, the bundled 256-tap ECG-like impulse response.

The vector is fully synthetic: a PQRST-shaped cluster of Gaussian bumps plus a
small U bump, sampled on integer taps and rounded to six decimals, with every
tap outside the bumps exactly zero. The layout is tuned so that exactly 28 of
the 256 taps are nonzero. The committed data file is the output of this script;
rerunning it reproduces the file byte for byte.
"""

import math
import pathlib

N_TAPS = 256
EXPECTED_NONZERO = 28

# (center, width in taps, amplitude, half-span of nonzero taps)
BUMPS = [
    (62.5, 2.4, 0.11, 3),   # P
    (96.0, 1.1, -0.16, 1),  # Q
    (100.0, 1.5, 1.00, 2),  # R
    (104.5, 1.3, -0.34, 2), # S
    (153.5, 2.6, 0.23, 4),  # T
    (170.5, 0.9, 0.04, 1),  # U
]


def make_taps():
    taps = [0.0] * N_TAPS
    for center, width, amplitude, half_span in BUMPS:
        lo = math.ceil(center - half_span)
        hi = math.floor(center + half_span)
        for k in range(lo, hi + 1):
            z = (k - center) / width
            taps[k] += amplitude * math.exp(-0.5 * z * z)
    return [round(t, 6) for t in taps]


def main():
    taps = make_taps()
    nonzero = sum(1 for t in taps if t != 0.0)
    if nonzero != EXPECTED_NONZERO:
        raise SystemExit(f"got {nonzero} nonzero taps, expected {EXPECTED_NONZERO}")
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "ecg_ir.txt"
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w") as f:
        for t in taps:
            f.write(f"{t:.6f}\n")
    print(f"wrote {out} ({nonzero} nonzero taps)")


if __name__ == "__main__":
    main()
