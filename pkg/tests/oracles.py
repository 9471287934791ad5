"""Independent reference implementations used only by the tests.

None of these import the package's algorithms; they work on plain edge sets.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations, permutations


def pairs(n):
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def labeled_graphs(n):
    """Every labelled graph on 1..n as a frozenset of (u, v) with u < v."""
    ps = pairs(n)
    for mask in range(1 << len(ps)):
        yield frozenset(p for i, p in enumerate(ps) if mask >> i & 1)


def adjacency(n, edges):
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def connected(n, edges):
    adj = adjacency(n, edges)
    seen, stack = {1}, [1]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def isomorphic(n, e1, e2):
    """Backtracking search for a vertex bijection, pruning on degrees."""
    if len(e1) != len(e2):
        return False
    a1, a2 = adjacency(n, e1), adjacency(n, e2)
    if sorted(len(a1[v]) for v in a1) != sorted(len(a2[v]) for v in a2):
        return False
    order = sorted(a1, key=lambda v: -len(a1[v]))
    m: dict[int, int] = {}
    used: set[int] = set()

    def go(i):
        if i == n:
            return True
        v = order[i]
        for w in range(1, n + 1):
            if w in used or len(a2[w]) != len(a1[v]):
                continue
            if all((u in a1[v]) == (m[u] in a2[w]) for u in m):
                m[v] = w
                used.add(w)
                if go(i + 1):
                    return True
                del m[v]
                used.discard(w)
        return False

    return go(0)


def classes_by_pairwise(n):
    """Isomorphism classes of labelled graphs, by pairwise comparison."""
    reps = []
    for e in labeled_graphs(n):
        if not any(isomorphic(n, e, r) for r in reps):
            reps.append(e)
    return reps


def burnside_count(n):
    """Number of unlabelled graphs on n vertices, averaging fixed points over S_n."""
    total = Fraction(0)
    ps = pairs(n)
    for perm in permutations(range(1, n + 1)):
        s = {v: perm[v - 1] for v in range(1, n + 1)}
        seen, cycles = set(), 0
        for p in ps:
            if p in seen:
                continue
            cycles += 1
            q = p
            while q not in seen:
                seen.add(q)
                u, v = s[q[0]], s[q[1]]
                q = (min(u, v), max(u, v))
        total += 2**cycles
    return total / math.factorial(n)


def connected_from_totals(totals):
    """Inverse Euler transform: connected counts c_1..c_N from all-graph counts a_1..a_N."""
    a = [1] + list(totals)
    N = len(totals)
    c = [0] * (N + 1)
    for n in range(1, N + 1):
        # n a_n = sum_{k=1}^n b_k a_{n-k}, b_k = sum_{d | k} d c_d
        s = sum(_b(c, k) * a[n - k] for k in range(1, n))
        b_n = n * a[n] - s
        c[n] = (b_n - sum(d * c[d] for d in range(1, n) if n % d == 0)) // n
    return c[1:]


def _b(c, k):
    return sum(d * c[d] for d in range(1, k + 1) if k % d == 0)


def has_edgeless_triple(n, edges):
    return any(not ({(a, b), (a, c), (b, c)} & edges) for a, b, c in combinations(range(1, n + 1), 3))


def complement_bipartite(n, edges):
    """Brute force over all 2-colourings of the complement."""
    non = [p for p in pairs(n) if p not in edges]
    for mask in range(1 << n):
        if all((mask >> (u - 1) & 1) != (mask >> (v - 1) & 1) for u, v in non):
            return True
    return False


def floyd_diameter(n, edges):
    inf = float("inf")
    d = [[0 if i == j else inf for j in range(n + 1)] for i in range(n + 1)]
    for u, v in edges:
        d[u][v] = d[v][u] = 1
    for k in range(1, n + 1):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return max(d[i][j] for i in range(1, n + 1) for j in range(1, n + 1))


def probable_prime(n, rounds=24, rng=random.Random(7)):
    """Strong probable-prime test with random bases (independent of the package)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def trial_factor(m):
    out, p = [], 2
    while p * p <= m:
        while m % p == 0:
            out.append(p)
            m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def field_graph_by_hand(degrees):
    """Prime graph of a degree set using trial division only."""
    supports = [sorted(set(trial_factor(d))) for d in degrees if d > 1]
    primes = sorted({p for s in supports for p in s})
    edges = {(p, q) for s in supports for p, q in combinations(s, 2)}
    return primes, edges
