# Copyright 2026 The Puiseux Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent brute force behind the frozen values in the C++ tests.

Plain Fractions and exhaustive search, no rewriting identity and no decoder.
Run with python3; it prints every derived value the tests pin down. With
--check FILE the output is compared against a frozen copy instead.
"""

import contextlib
import io
import sys

from fractions import Fraction as Q
from functools import lru_cache
from itertools import combinations_with_replacement


class Monoid:
    def __init__(self, gens=None, elems=None, cond=None):
        if gens is not None:
            top = max(gens) * max(gens) + 1
            member = [False] * (top + 1)
            member[0] = True
            for v in range(1, top + 1):
                member[v] = any(v >= g and member[v - g] for g in gens)
            self.cond = max(v for v in range(top + 1) if not member[v]) + 1 if not all(member) else 0
            self.below = [v for v in range(self.cond) if member[v]]
        else:
            self.below = sorted(elems)
            gaps = [v for v in range(cond) if v not in elems]
            self.cond = max(gaps) + 1 if gaps else 0
            self.below = [v for v in elems if v < self.cond]

    def contains(self, v):
        return v >= self.cond or v in self.below

    def element(self, k):
        if k < len(self.below):
            return self.below[k]
        return self.cond + (k - len(self.below))

    def min_gens(self):
        out = []
        for v in range(1, self.cond + 2 * max(2, self.cond) + 2):
            if not self.contains(v):
                continue
            if not any(self.contains(a) and self.contains(v - a) for a in range(1, v)):
                out.append(v)
        return out


def atoms(r, monoid, count):
    return [r ** monoid.element(k) for k in range(count)]


def reps(x, atom_list, max_len=None):
    """All coefficient vectors over atom_list summing to x (length <= max_len)."""
    order = sorted(range(len(atom_list)), key=lambda i: -atom_list[i])
    out = []
    coeff = [0] * len(atom_list)

    def go(p, rest, budget):
        if rest == 0:
            out.append(tuple(coeff))
            return
        if p == len(order):
            return
        a = atom_list[order[p]]
        most = int(rest / a)
        if budget is not None:
            most = min(most, budget)
        nxt = atom_list[order[p + 1]] if p + 1 < len(order) else None
        for c in range(most, -1, -1):
            left = rest - c * a
            if budget is not None and nxt is not None and left > (budget - c) * nxt:
                break
            if nxt is None and left != 0:
                continue
            coeff[order[p]] = c
            go(p + 1, left, None if budget is None else budget - c)
        coeff[order[p]] = 0

    go(0, Q(x), max_len)
    return out


def as_map(vec):
    return {i: c for i, c in enumerate(vec) if c}


def rclass_count(vectors):
    parent = list(range(len(vectors)))

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    for i in range(len(vectors)):
        for j in range(i):
            if any(a and b for a, b in zip(vectors[i], vectors[j])):
                parent[find(i)] = find(j)
    return len({find(i) for i in range(len(vectors))})


def catenary(vectors):
    def dist(a, b):
        g = sum(min(x, y) for x, y in zip(a, b))
        return max(sum(a), sum(b)) - g

    best = 0
    inside = {0}
    while len(inside) < len(vectors):
        step = min((dist(vectors[i], vectors[j]), j)
                   for i in inside for j in range(len(vectors)) if j not in inside)
        best = max(best, step[0])
        inside.add(step[1])
    return best


def main():
    print("numerical monoids")
    print("  <6,9,20> Frobenius", Monoid(gens=[6, 9, 20]).cond - 1)
    print("  <3,4,5> conductor", Monoid(gens=[3, 4, 5]).cond)
    gapped = Monoid(elems=[0, 18, 19, 25, 27], cond=36)
    print("  gapped N minimal generators", gapped.min_gens())

    nat = Monoid(gens=[1])
    r = Q(5, 2)
    a = atoms(r, nat, 6)
    z5 = reps(5, a)
    print("r=5/2: Z(5) =", [as_map(v) for v in z5], "lengths", sorted({sum(v) for v in z5}),
          "R-classes", rclass_count(z5), "catenary", catenary(z5))
    z6 = reps(6, a)
    print("r=5/2: Z(6) =", [as_map(v) for v in z6], "R-classes", rclass_count(z6))

    for label, rr, mon in [("5/2,N", Q(5, 2), nat), ("7/3,<3,4,5>", Q(7, 3), Monoid(gens=[3, 4, 5]))]:
        at = [t for t in atoms(rr, mon, 12) if t <= 30]
        members = set()
        for size in range(1, 31):
            fresh = False
            for combo in combinations_with_replacement(at, size):
                v = sum(combo)
                if v <= 30:
                    members.add(v)
                    fresh = True
            if not fresh:
                break
        split = sorted(str(x) for x in members if rclass_count(reps(x, at)) > 1)
        print(f"({label}) members <= 30: {len(members)}, more than one R-class at {split}")

    r = Q(2, 3)
    z = reps(2, atoms(r, nat, 4))
    print("r=2/3, x=2, indices <= 3:", [as_map(v) for v in z])
    z = reps(2, atoms(r, nat, 7))
    print("r=2/3, x=2, indices <= 6:", len(z), "factorizations, catenary", catenary(z))

    at = atoms(r, gapped, 16)
    x = 2 * r ** 18 + 4 * r ** 25
    z = reps(x, at, max_len=15)
    print("gapped N: lengths <= 15 over indices <= 15:", sorted({sum(v) for v in z}))

    nprime = Monoid(elems=[0], cond=2)
    at = atoms(r, nprime, 14)
    gaps = set()
    for k in range(6):
        b = (2 ** (nprime.element(k + 1) - nprime.element(k))) * r ** nprime.element(k)
        lengths = sorted({sum(v) for v in reps(b, at, max_len=12)})
        gaps |= {q - p for p, q in zip(lengths, lengths[1:])}
        if k == 0:
            print("N': L(4) up to 12 =", lengths)
    print("N': distances of the first Betti elements up to length 12:", sorted(gaps))

    r = Q(5, 2)
    a = atoms(r, nat, 5)

    @lru_cache(maxsize=None)
    def member(v):
        # greedy from the smallest denominators: only the first hit matters
        if v < 0:
            return False
        if v.denominator == 1:
            return True
        return any(member(v - t) for t in a[1:] if t <= v)

    def divides(x, y):
        return member(y - x)

    for idx in (0, 1):
        target = a[idx]
        best = 0
        for size in range(1, 7):
            for combo in combinations_with_replacement(range(5), size):
                v = sum(a[i] for i in combo)
                if not divides(target, v):
                    continue
                if all(not divides(target, v - a[i]) for i in set(combo)):
                    best = max(best, size)
        print(f"r=5/2: largest minimal bouquet of atom {target} (indices <= 4, size <= 6): {best}")


if __name__ == "__main__":
    if len(sys.argv) == 3 and sys.argv[1] == "--check":
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            main()
        with open(sys.argv[2]) as frozen:
            same = frozen.read() == buf.getvalue()
        print("derived values match" if same else "derived values DIFFER")
        sys.exit(0 if same else 1)
    main()
