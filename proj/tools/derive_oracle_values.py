"""Independent reference values for the test suite.

Expands (-q;q)(q^j;q^k) / ((q;q)(-q^j;q^k)) factor by factor over Z/2^64
with numpy; nothing here shares code with the C++ engine. Prints the values
that the unit and acceptance tests freeze.
"""

import argparse
import json

import numpy as np


def mul_binomial(a, step, sign):
    """a * (1 + sign*q^step)."""
    out = a.copy()
    if sign > 0:
        out[step:] += a[:-step]
    else:
        out[step:] -= a[:-step]
    return out


def div_binomial(a, step, sign):
    """a / (1 + sign*q^step): out[n] = a[n] - sign*out[n-step]."""
    out = a.copy()
    for start in range(step, len(out), step):
        block = slice(start, min(start + step, len(out)))
        prev = slice(start - step, start - step + (block.stop - block.start))
        if sign > 0:
            out[block] -= out[prev]
        else:
            out[block] += out[prev]
    return out


def pjk(j, k, order):
    a = np.zeros(order + 1, dtype=np.uint64)
    a[0] = 1
    for i in range(1, order + 1):
        a = mul_binomial(a, i, +1)
        a = div_binomial(a, i, -1)
    for m in range(j, order + 1, k):
        a = mul_binomial(a, m, -1)
        a = div_binomial(a, m, +1)
    return a


def euler(k, order, modulus):
    a = np.zeros(order + 1, dtype=np.uint64)
    a[0] = 1
    for m in range(k, order + 1, k):
        a = mul_binomial(a, m, -1)
    return a % np.uint64(modulus)


def eta(factors, order):
    """prod f_k^e over Z/2^64 from binomials."""
    a = np.zeros(order + 1, dtype=np.uint64)
    a[0] = 1
    for k, e in factors.items():
        for m in range(k, order + 1, k):
            for _ in range(abs(e)):
                a = mul_binomial(a, m, -1) if e > 0 else div_binomial(a, m, -1)
    return a


def first_failure(series, modulus, U, V, n_max, rhs=None):
    for n in range(n_max + 1):
        left = int(series[U * n + V]) % modulus
        right = int(rhs[n]) % modulus if rhs is not None else 0
        if left != right:
            return n
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=20000)
    args = parser.parse_args()

    out = {}
    p48 = pjk(4, 8, args.order)
    p612 = pjk(6, 12, 2000)
    p816 = pjk(8, 16, 4000)
    out["p48_first"] = [int(x) for x in p48[:21]]
    out["p612_first"] = [int(x) for x in p612[:21]]
    out["p816_first"] = [int(x) for x in p816[:21]]

    # Zero claims and offset-shifted fixtures: smallest failing n.
    out["p17_8n6_mod32"] = first_failure(p48, 32, 8, 6, 1000)
    out["p17_8n7_mod32"] = first_failure(p48, 32, 8, 7, 1000)
    out["p15_4n3_mod4"] = first_failure(p48, 4, 4, 3, 1000)
    out["mf1a_16n7_mod32"] = first_failure(p48, 32, 16, 7, 1000)

    # Base-parameter theorem checks, n <= 300.
    f1f8 = (eta({1: 1, 8: 1}, 300) * np.uint64(32))
    out["t11_base"] = first_failure(p48, 64, 16, 6, 300, f1f8)
    out["t62_literal_base"] = first_failure(p48, 4, 384, 8, 50, euler(1, 50, 4))
    out["t62_doubled_base"] = first_failure(p48, 4, 384, 8, 50, euler(1, 50, 4) * np.uint64(2))
    out["t81_literal_base"] = first_failure(p612, 4, 24, 1, 80, euler(1, 80, 4))
    out["t81_doubled_base"] = first_failure(p612, 4, 24, 1, 80, euler(1, 80, 4) * np.uint64(2))
    out["p48_384n8_mod4"] = [int(p48[384 * n + 8]) % 4 for n in range(6)]
    out["p612_24n1_mod4"] = [int(p612[24 * n + 1]) % 4 for n in range(6)]
    out["u2_base_lhs_mod32"] = [int(p48[112 * n + 98]) % 32 for n in range(4)]
    f7cubed = eta({7: 3}, 3)
    out["u2_base_f7cubed"] = [int(x) for x in f7cubed[:4].astype(np.int64)]
    out["t31_j6_first"] = first_failure(p48, 32, 112, 98, 100)
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
