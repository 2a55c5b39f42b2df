"""Regenerate the vendored b-files in src/hoprimes/data/bfiles.

Built with sympy only (no hoprimes imports) so the fixtures stay an
independent reference.  Classes are built by the index-set recursion:
class 1 takes each prime not yet used as an indexed value and marks p_q as
indexed; class i+1 is {p_q : q in class i}.

    python tools/make_bfixtures.py [--terms 100]
"""
import argparse
from pathlib import Path

from sympy import sieve

OUT = Path(__file__).resolve().parents[1] / "src" / "hoprimes" / "data" / "bfiles"

TITLES = {
    "A000040": "The prime numbers.",
    "A006450": "Prime-indexed primes: primes with prime subscripts.",
    "A038580": "Primes with indices that are primes with prime indices.",
    "A049090": "Primes p such that pi(p) is in A038580.",
    "A049203": "Primes p such that pi(p) is in A049090.",
    "A333242": "Prime numbers in the sieve of the naturals by prime indices (class 1).",
    "A262275": "Primes p_q for q in A333242 (class 2).",
    "A333243": "Primes p_q for q in A262275 (class 3).",
    "A333244": "Primes p_q for q in A333243 (class 4).",
}


def p(n):
    return sieve[n]


def order_k(k, n):
    out = []
    for j in range(1, n + 1):
        v = j
        for _ in range(k):
            v = p(v)
        out.append(v)
    return out


def class_one(n):
    indexed, out, j = set(), [], 1
    while len(out) < n:
        q = p(j)
        if q not in indexed:
            out.append(q)
            indexed.add(p(q))
        j += 1
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--terms", type=int, default=100)
    n = ap.parse_args().terms
    seqs = {f"A{a}": order_k(k, n) for k, a in enumerate(["000040", "006450", "038580", "049090", "049203"], 1)}
    cls = class_one(n)
    for sid in ["A333242", "A262275", "A333243", "A333244"]:
        seqs[sid] = cls
        cls = [p(q) for q in cls]
    assert seqs["A333242"][:15] == [2, 5, 7, 13, 19, 23, 29, 31, 37, 43, 47, 53, 59, 61, 71]
    assert seqs["A262275"][:8] == [3, 11, 17, 41, 67, 83, 109, 127]
    assert seqs["A333243"][:4] == [5, 31, 59, 179]
    assert seqs["A333244"][:4] == [11, 127, 277, 1063]
    assert seqs["A049203"][:3] == [31, 127, 709]
    OUT.mkdir(parents=True, exist_ok=True)
    for sid, vals in seqs.items():
        head = f"# {sid} {TITLES[sid]}\n# regenerated offline with sympy; {len(vals)} terms, offset 1\n"
        body = "".join(f"{i} {v}\n" for i, v in enumerate(vals, 1))
        (OUT / f"b{sid[1:]}.txt").write_text(head + body, encoding="utf-8")
        print(sid, len(vals), vals[-1])


if __name__ == "__main__":
    main()
