"""Builders and independent oracles shared across the test suite."""

from __future__ import annotations

from collections import deque
from itertools import combinations, product
from math import gcd

from gbsknot import LabeledGraph, Word, expand, graph, spanning_tree


# -- graph builders --------------------------------------------------------


def segment(*pairs):
    """segment((2,3),(5,7)) -> path a1 - a2 - a3 with those label pairs."""
    edges = [
        (f"e{i}", f"a{i}", k, f"a{i + 1}", l) for i, (k, l) in enumerate(pairs, 1)
    ]
    return graph(*edges)


def loop_graph(p, q):
    return graph(("e1", "a", p, "a", q))


def cycle_graph(*pairs):
    """cycle_graph((2,3),(5,7)) -> simple cycle a1 - a2 - a1."""
    s = len(pairs)
    edges = [
        (f"e{i}", f"a{i}", k, f"a{i % s + 1}", l)
        for i, (k, l) in enumerate(pairs, 1)
    ]
    return graph(*edges)


def trident(p, q, r, inner=(7, 11, 13)):
    """Three edges from a center c to leaves u, v, w; p, q, r at the leaves."""
    return graph(
        ("e1", "c", inner[0], "u", p),
        ("e2", "c", inner[1], "v", q),
        ("e3", "c", inner[2], "w", r),
    )


# -- randomized inputs -----------------------------------------------------


def random_label(rng, bound=9):
    x = rng.randint(1, bound)
    return x if rng.random() < 0.5 else -x


def random_graph(rng, max_vertices=6, label_bound=9, max_extra_edges=3):
    """A random connected labeled graph: a spanning tree plus extra edges."""
    n = rng.randint(1, max_vertices)
    names = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(1, n):
        edges.append(
            (
                f"e{len(edges) + 1}",
                names[rng.randrange(i)],
                random_label(rng, label_bound),
                names[i],
                random_label(rng, label_bound),
            )
        )
    for _ in range(rng.randint(0, max_extra_edges)):
        edges.append(
            (
                f"e{len(edges) + 1}",
                rng.choice(names),
                random_label(rng, label_bound),
                rng.choice(names),
                random_label(rng, label_bound),
            )
        )
    return graph(*edges, vertices=names)


def random_expand(rng, g: LabeledGraph) -> LabeledGraph:
    e = rng.choice(g.edges)
    end = rng.randrange(2)
    label = e.label(end)
    divisors = [d for d in range(1, abs(label) + 1) if abs(label) % d == 0]
    m = rng.choice(divisors) * rng.choice([1, -1])
    return expand(g, e.id, end, m, label // m)


def random_spanning_tree(rng, g: LabeledGraph):
    visited = {rng.choice(g.vertices)}
    chosen = set()
    while len(visited) < len(g.vertices):
        candidates = [e for e in g.edges if (e.v0 in visited) != (e.v1 in visited)]
        e = rng.choice(candidates)
        chosen.add(e.id)
        visited.add(e.v1 if e.v0 in visited else e.v0)
    return frozenset(chosen)


_SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def _products_of(primes, bound=13):
    vals = []
    for n in range(2, bound + 1):
        m = n
        for p in primes:
            while m % p == 0:
                m //= p
        if m == 1:
            vals.append(n)
    return vals


def random_coprime_segment(rng, max_edges=4, bound=13):
    """A segment whose left labels share no prime with any right label."""
    while True:
        primes = _SMALL_PRIMES[:]
        rng.shuffle(primes)
        cut = rng.randint(1, len(primes) - 1)
        k_values = _products_of(primes[:cut], bound)
        l_values = _products_of(primes[cut:], bound)
        if not k_values or not l_values:
            continue
        s = rng.randint(1, max_edges)
        return segment(*[(rng.choice(k_values), rng.choice(l_values)) for _ in range(s)])


# -- invariant extraction ----------------------------------------------------


def verdict_core(verdict):
    """Move-invariant content of a classification.

    Reason strings mention vertex ids and the (k, l) ordering depends on
    the view orientation, so only kinds, sorted parameter pairs and the
    exceptional tag are compared.
    """
    one, nk = verdict.one_knot, verdict.n_knot_ge3
    pair = tuple(sorted((nk.k, nk.l))) if nk.k is not None else None
    return (
        (one.kind, one.p, one.q),
        (nk.kind, nk.family, pair),
        verdict.exceptional,
    )


# -- exact linear-algebra oracles ---------------------------------------------


def det(matrix):
    """Exact integer determinant (fraction-free Gaussian elimination)."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def gcd_of_minors(matrix, k):
    """gcd of every k-by-k minor; 0 when they all vanish."""
    rows, cols = len(matrix), len(matrix[0])
    g = 0
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            g = gcd(g, det([[matrix[i][j] for j in cs] for i in rs]))
    return g


# -- breadth-first rewriting oracle for one-loop groups ------------------------


_INVERSE_PAIRS = ("aA", "Aa", "tT", "Tt")


def bs_identity_words(p, q, max_len):
    """All strings over a/A/t/T of length <= max_len equal to the identity.

    Breadth-first closure from the empty word under inverse-pair
    insertion and deletion and both directions of the defining relation,
    never leaving the length bound.  Independent of the word engine.
    """
    pairs = []
    m = 1
    while m * min(p, q) <= max_len:
        for sym in ("a", "A"):
            x, y = sym * (m * p), sym * (m * q)
            pairs.append(("T" + x + "t", y))
            pairs.append(("t" + y + "T", x))
        m += 1
    substitutions = pairs + [(rhs, lhs) for lhs, rhs in pairs]

    seen = {""}
    queue = deque([""])
    while queue:
        w = queue.popleft()
        successors = []
        if len(w) + 2 <= max_len:
            for i in range(len(w) + 1):
                for pair in _INVERSE_PAIRS:
                    successors.append(w[:i] + pair + w[i:])
        for i in range(len(w) - 1):
            if w[i : i + 2] in _INVERSE_PAIRS:
                successors.append(w[:i] + w[i + 2 :])
        for lhs, rhs in substitutions:
            start = w.find(lhs)
            while start != -1:
                candidate = w[:start] + rhs + w[start + len(lhs) :]
                if len(candidate) <= max_len:
                    successors.append(candidate)
                start = w.find(lhs, start + 1)
        for s in successors:
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return seen


def letters_to_word(text: str) -> Word:
    table = {"a": ("a", 1), "A": ("a", -1), "t": ("t", 1), "T": ("t", -1)}
    return Word([table[c] for c in text])


def all_letter_strings(max_len):
    for length in range(max_len + 1):
        for combo in product("aAtT", repeat=length):
            yield "".join(combo)


def tree_and_graph(g):
    return g, spanning_tree(g)
