#!/usr/bin/env python3
"""Independent brute-force oracle for the frozen values in the unit tests.

Works with explicit (signed) permutations and the reflection-cover definition
of the Bruhat order; shares no code with the C++ library. Run it to
regenerate the numbers asserted in tests/*.cpp.
"""
from itertools import combinations, permutations, product
from math import comb


# ---------- type A through permutations (one-line, 1-based) ----------

def inv(u):
    return sum(1 for i in range(len(u)) for j in range(i + 1, len(u)) if u[i] > u[j])


def ehresmann(u, v):
    n = len(u)
    for i in range(1, n):
        a, b = sorted(u[:i]), sorted(v[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def closure_leq(elements, length, reflections, mul):
    """Bruhat order as transitive closure of w < wt with l(wt) > l(w)."""
    idx = {e: k for k, e in enumerate(elements)}
    up = {e: set() for e in elements}
    for e in elements:
        for t in reflections:
            f = mul(e, t)
            if length(f) > length(e):
                up[e].add(f)
    order = sorted(elements, key=length, reverse=True)
    above = {}
    for e in order:
        s = {e}
        for f in up[e]:
            s |= above[f]
        above[e] = s
    return lambda a, b: b in above[a]


def perm_mul(u, v):  # (u v)(i) = u(v(i))
    return tuple(u[v[i] - 1] for i in range(len(u)))


def transpositions(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            t = list(range(1, n + 1))
            t[i], t[j] = t[j], t[i]
            out.append(tuple(t))
    return out


def type_a(n):
    els = list(permutations(range(1, n + 1)))
    return els, inv, closure_leq(els, inv, transpositions(n), perm_mul)


# ---------- types B and D through signed permutations ----------

def signed_length_B(u):
    n = len(u)
    l = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])
    l += sum(1 for i in range(n) for j in range(i + 1, n) if -u[i] > u[j])
    l += sum(1 for x in u if x < 0)
    return l


def signed_length_D(u):
    n = len(u)
    l = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] > u[j])
    l += sum(1 for i in range(n) for j in range(i + 1, n) if -u[i] > u[j])
    return l


def signed_mul(u, v):
    out = []
    for x in v:
        y = u[abs(x) - 1]
        out.append(y if x > 0 else -y)
    return tuple(out)


def signed_reflections(n, with_sign):
    out = []
    ident = list(range(1, n + 1))
    for i in range(n):
        for j in range(i + 1, n):
            t = ident[:]
            t[i], t[j] = t[j], t[i]
            out.append(tuple(t))
            t = ident[:]
            t[i], t[j] = -(j + 1), -(i + 1)
            out.append(tuple(t))
        if with_sign:
            t = ident[:]
            t[i] = -(i + 1)
            out.append(tuple(t))
    return out


def type_b(n):
    els = [tuple(s * x for s, x in zip(signs, p))
           for p in permutations(range(1, n + 1)) for signs in product((1, -1), repeat=n)]
    return els, signed_length_B, closure_leq(els, signed_length_B, signed_reflections(n, True), signed_mul)


def type_d(n):
    els = [tuple(s * x for s, x in zip(signs, p))
           for p in permutations(range(1, n + 1)) for signs in product((1, -1), repeat=n)
           if signs.count(-1) % 2 == 0]
    return els, signed_length_D, closure_leq(els, signed_length_D, signed_reflections(n, False), signed_mul)


def dihedral(m):
    # words alternating from s1 or s2; Bruhat order is by length except equal lengths
    els = [("e", 0)] + [(start, l) for l in range(1, m) for start in (1, 2)] + [("top", m)]
    length = lambda e: e[1]
    leq = lambda a, b: a == b or a[1] < b[1]
    return els, length, leq


def poset_base(els, leq):
    base = []
    for a in els:
        below = [b for b in els if b != a and leq(b, a)]
        ub = [c for c in els if all(leq(b, c) for b in below)]
        least = [c for c in ub if all(leq(c, d) for d in ub)]
        if least != [a]:
            base.append(a)
    return base


def main():
    print("order B3 =", len(type_b(3)[0]), " order D4 =", len(type_d(4)[0]))

    els, length, leq = type_a(3)
    print("213 <= 231:", leq((2, 1, 3), (2, 3, 1)), " 231 <= 312:", leq((2, 3, 1), (3, 1, 2)),
          " 312 <= 231:", leq((3, 1, 2), (2, 3, 1)))
    for n in range(2, 6):
        e, l, le = type_a(n)
        agree = all(le(u, v) == ehresmann(u, v) for u in e for v in e)
        print(f"A{n-1}: ehresmann agrees = {agree}, base size = {len(poset_base(e, le))}")
    base3 = poset_base(els, leq)
    print("S3 base:", sorted(base3))

    for name, (e, l, le) in [("B2", type_b(2)), ("B3", type_b(3)), ("D4", type_d(4)), ("G2", dihedral(6))]:
        print(name, "base size =", len(poset_base(e, le)), " |W| =", len(e), " max length =", max(map(l, e)))

    # defining-set lower bound and variety equation count for 2143
    def subsets_leq(I, J):
        return all(x <= y for x, y in zip(sorted(I), sorted(J)))

    def defining(w):
        n = len(w)
        cons = []
        for u in permutations(range(1, n + 1)):
            opts = frozenset(frozenset(u[:i]) for i in range(1, n) if not subsets_leq(u[:i], w[:i]))
            if opts:
                cons.append(opts)
        universe = sorted(set().union(*cons), key=lambda s: (len(s), sorted(s))) if cons else []
        for size in range(0, len(universe) + 1):
            for pick in combinations(universe, size):
                ps = set(pick)
                if all(c & ps for c in cons):
                    return size, [sorted(s) for s in pick]
        return None

    def variety_count(w):
        n = len(w)
        return sum(1 for i in range(1, n) for I in combinations(range(1, n + 1), i)
                   if not subsets_leq(I, w[:i]))

    for w in [(2, 1, 4, 3), (2, 1, 3), (3, 2, 1), (4, 3, 2, 1)]:
        print("defining", w, defining(w), " variety equations", variety_count(w))

    # type A recognition loop on generic patterns: worst-case queries
    def generic_bit(w, I):
        return subsets_leq(I, w[:len(I)])

    def run(bit, n):
        I, perm, queries = [], [], 0
        for i in range(n):
            k = n
            free_min = min(set(range(1, n + 1)) - set(I))
            while k > free_min:
                if k in I:
                    k -= 1
                    continue
                queries += 1
                if bit(tuple(sorted(I + [k]))):
                    break
                k -= 1
            perm.append(k)
            I.append(k)
        return tuple(perm), queries

    for n in range(2, 7):
        worst_gen = max(run(lambda I: generic_bit(w, I), n)[1] for w in permutations(range(1, n + 1)))
        worst_pi = max(run(lambda I: set(I) == set(w[:len(I)]), n)[1] for w in permutations(range(1, n + 1)))
        print(f"n={n}: worst queries generic={worst_gen} pi={worst_pi} C(n,2)={comb(n, 2)}")

    # codes
    def max_code(n, i):
        subs = list(combinations(range(1, n + 1), i))
        best = 0
        for mask in range(1 << len(subs)):
            fam = [subs[t] for t in range(len(subs)) if mask >> t & 1]
            if all(len(set(a) & set(b)) != i - 1 for a, b in combinations(fam, 2)):
                best = max(best, len(fam))
        return best

    print("max code (4,2) =", max_code(4, 2), " (5,2) =", max_code(5, 2))

    # feedback-free for n = 4 separating coordinate and generic patterns
    n = 4
    coords = [I for i in range(1, n) for I in combinations(range(1, n + 1), i)]
    pats = []
    for w in permutations(range(1, n + 1)):
        pats.append((w, tuple(set(I) == set(w[:len(I)]) for I in coords)))
        pats.append((w, tuple(generic_bit(w, I) for I in coords)))
    for size in range(1, len(coords) + 1):
        sols = []
        for pick in combinations(range(len(coords)), size):
            seen = {}
            ok = True
            for w, b in pats:
                key = tuple(b[t] for t in pick)
                if seen.setdefault(key, w) != w:
                    ok = False
                    break
            if ok:
                sols.append(pick)
        if sols:
            print("feedback-free n=4 size", size, "solutions", len(sols))
            break


def root_positivity_counterexamples():
    """Ordered incomparable pairs in fundamental orbits with positive difference.

    Signed permutations use the chamber 0 <= x1 <= ... <= xn, so the simple
    roots are e1 (or e1 + e2 for D) and e_{i+1} - e_i.
    """
    from fractions import Fraction as F
    h = F(1, 2)

    def count(els, length, leq, omegas, roots):
        n = len(els[0])
        total = 0

        def act(u, v):
            out = [0] * n
            for i, x in enumerate(u):
                out[abs(x) - 1] = v[i] if x > 0 else -v[i]
            return tuple(out)

        def expand(d):
            a = [[F(roots[j][i]) for j in range(n)] + [F(d[i])] for i in range(n)]
            for c in range(n):
                p = next(r for r in range(c, n) if a[r][c] != 0)
                a[c], a[p] = a[p], a[c]
                for r in range(n):
                    if r != c and a[r][c] != 0:
                        f = a[r][c] / a[c][c]
                        a[r] = [x - f * y for x, y in zip(a[r], a[c])]
            return [a[i][n] / a[i][i] for i in range(n)]

        for om in omegas:
            cos = {}
            for u in els:
                g = act(u, om)
                if g not in cos or length(u) < length(cos[g]):
                    cos[g] = u
            for g in cos:
                for d in cos:
                    if g == d or leq(cos[g], cos[d]) or leq(cos[d], cos[g]):
                        continue
                    c = expand([g[k] - d[k] for k in range(n)])
                    if all(x >= 0 and x.denominator == 1 for x in c):
                        total += 1
        return total

    def b_roots(n):
        return [[1 if k == 0 else 0 for k in range(n)]] + \
               [[(1 if k == i + 1 else -1 if k == i else 0) for k in range(n)] for i in range(n - 1)]

    print("B3:", count(*type_b(3), [(0, 0, 1), (0, 1, 1), (h, h, h)], b_roots(3)))
    print("B4:", count(*type_b(4), [(0, 0, 0, 1), (0, 0, 1, 1), (0, 1, 1, 1), (h, h, h, h)], b_roots(4)))
    d_roots = [[1, 1, 0, 0], [-1, 1, 0, 0], [0, -1, 1, 0], [0, 0, -1, 1]]
    print("D4:", count(*type_d(4), [(0, 0, 0, 1), (0, 0, 1, 1), (h, h, h, h), (-h, h, h, h)], d_roots))


def flag_patterns_n3():
    """Vanishing patterns of all invertible 3x3 matrices with entries in {-1, 0, 1}."""
    subs = [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]

    def minor(m, I):
        if len(I) == 1:
            return m[I[0] - 1][0]
        a, b = I
        return m[a - 1][0] * m[b - 1][1] - m[b - 1][0] * m[a - 1][1]

    def det(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    full = set()
    for e in product([-1, 0, 1], repeat=9):
        m = [e[0:3], e[3:6], e[6:9]]
        if det(m) != 0:
            full.add("".join(str(int(minor(m, I) != 0)) for I in subs))
    print("n=3 full patterns:", len(full), sorted(full))
    rest = sorted({p[1] + p[2] + p[4] + p[5] for p in full})
    print("n=3 restricted to (2,3,13,23):", len(rest), rest)


if __name__ == "__main__":
    flag_patterns_n3()
    root_positivity_counterexamples()
    main()
