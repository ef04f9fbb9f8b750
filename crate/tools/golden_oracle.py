#!/usr/bin/env python3
"""Replay every registered generator with Python's arbitrary-precision
integers and write the golden vectors used by the acceptance tests.

Usage: golden_oracle.py OUT_DIR [SEED] [COUNT]

Each file `<name>_seed<SEED>.txt` holds COUNT decimal outputs, one per line.
Nothing here relies on fixed-width wrap-around: every reduction is an
explicit `%` on unbounded integers.
"""
import sys
from pathlib import Path

W = 2**64
KNUTH_A = 6364136223846793005
KNUTH_C = 1442695040888963407


def expand_seed(seed, count):
    x = seed
    for _ in range(16):
        x = (KNUTH_A * x + KNUTH_C) % W
    out = []
    for _ in range(count):
        x = (KNUTH_A * x + KNUTH_C) % W
        out.append(x if x != 0 else KNUTH_C)
    return out


def lcg(seed):
    x = seed % W
    while True:
        x = (KNUTH_A * x + KNUTH_C) % W
        yield x


def poly(coeffs, seed):
    # coeffs highest degree first, evaluated as a plain polynomial sum
    deg = len(coeffs) - 1
    x = seed % W
    while True:
        x = sum(c * x ** (deg - i) for i, c in enumerate(coeffs)) % W
        yield x


def lfg(seed, la=55, lb=24, m=W):
    s = list(expand_seed(seed, max(la, lb)))
    while True:
        x = (s[-la] + s[-lb]) % m
        s.append(x)
        del s[0]
        yield x


def cmrg(seed):
    m1, m2 = 2147483647, 2145483479
    w = expand_seed(seed, 6)
    nz = lambda v, m: v % m or 1
    # histories oldest first
    x = [nz(w[2], m1), nz(w[1], m1), nz(w[0], m1)]
    y = [nz(w[5], m2), nz(w[4], m2), nz(w[3], m2)]
    while True:
        xn = (63308 * x[-2] - 183326 * x[-3]) % m1
        yn = (86098 * y[-1] - 539608 * y[-3]) % m2
        x = x[1:] + [xn]
        y = y[1:] + [yn]
        yield (xn - yn) % m1


def mrg5(seed):
    m = 2**31 - 1
    w = expand_seed(seed, 5)
    h = [(v % m) or 1 for v in reversed(w)]  # oldest first
    while True:
        xn = (107374182 * h[-1] + 104480 * h[-5]) % m
        h = h[1:] + [xn]
        yield xn


def icg(seed):
    a, b, m = 9102, 36884165, 2**31 - 1
    x = expand_seed(seed, 1)[0] % m
    while True:
        inv = pow(x, -1, m) if x else 0
        x = (a * inv + b) % m
        yield x


def xorshift_star(seed):
    x = seed
    assert x != 0
    while True:
        x ^= x >> 12
        x = (x ^ (x << 25)) % W
        x ^= x >> 27
        yield (x * 2685821657736338717) % W


def xorshift_plus(seed):
    s0, s1 = expand_seed(seed, 2)
    while True:
        x, y = s0, s1
        s0 = y
        x = (x ^ (x << 23)) % W
        s1 = x ^ y ^ (x >> 17) ^ (y >> 26)
        yield (s1 + y) % W


def kiss(seed, jkiss=False):
    M = 2**32
    if jkiss:
        ca, cc, sh, a = 314527869, 1234567, (5, 7, 22), 4294584393
    else:
        ca, cc, sh, a = 69069, 123456, (13, 17, 5), 698769069
    w = [v >> 32 for v in expand_seed(seed, 4)]
    c0, x, v, carry = w[0], w[1] or 1, w[2], w[3] % a
    if v in (0, M - 1):
        v = 1
    while True:
        c0 = (ca * c0 + cc) % M
        x = (x ^ (x << sh[0])) % M
        x ^= x >> sh[1]
        x = (x ^ (x << sh[2])) % M
        t = a * v + carry
        v, carry = t % M, t // M
        yield (c0 + x + v) % M


def mt64(seed):
    n, mm = 312, 156
    mt = [seed % W]
    for i in range(1, n):
        mt.append((6364136223846793005 * (mt[-1] ^ (mt[-1] >> 62)) + i) % W)
    upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF
    idx = n
    while True:
        if idx >= n:
            for i in range(n):
                y = (mt[i] & upper) | (mt[(i + 1) % n] & lower)
                v = mt[(i + mm) % n] ^ (y >> 1)
                if y & 1:
                    v ^= 0xB5026F5AA96619E9
                mt[i] = v
            idx = 0
        y = mt[idx]
        idx += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        yield y


GENERATORS = {
    "lcg": lcg,
    "lfg": lfg,
    "cmrg": cmrg,
    "mrg5": mrg5,
    "icg": icg,
    "xorshift-star": xorshift_star,
    "xorshift-plus": xorshift_plus,
    "kiss": kiss,
    "jkiss": lambda s: kiss(s, jkiss=True),
    "mt64": mt64,
    "quad-cg": lambda s: poly([KNUTH_A - 1, KNUTH_A, KNUTH_C], s),
    "cubic-cg": lambda s: poly([2862933555777941756, KNUTH_A - 1, KNUTH_A, KNUTH_C], s),
}


def main():
    out = Path(sys.argv[1])
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 12345
    count = int(sys.argv[3]) if len(sys.argv) > 3 else 10000
    out.mkdir(parents=True, exist_ok=True)
    for name, make in GENERATORS.items():
        g = make(seed)
        vals = [next(g) for _ in range(count)]
        (out / f"{name}_seed{seed}.txt").write_text("".join(f"{v}\n" for v in vals))


if __name__ == "__main__":
    main()
