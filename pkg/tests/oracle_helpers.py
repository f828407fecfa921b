"""Brute-force reference oracles shared by the unit and acceptance tests.

These deliberately re-derive everything from first principles (subset
enumeration, exhaustive color scans, label-vector enumeration) so they
stay independent of the library's own solvers.
"""
import itertools


def brute_max_clique(graph):
    for size in range(graph.n, 0, -1):
        for combo in itertools.combinations(range(graph.n), size):
            if all(v in graph.adj[u] for u, v in itertools.combinations(combo, 2)):
                return size
    return 0


def brute_colorable(graph, k):
    for assign in itertools.product(range(k), repeat=graph.n):
        if all(assign[u] != assign[v] for u, v in graph.edges()):
            return True
    return False


def brute_chromatic(graph):
    if graph.n == 0:
        return 0
    for k in range(1, graph.n + 1):
        if brute_colorable(graph, k):
            return k
    return graph.n


def second_neighbor_sets(graph):
    second = [set() for _ in range(graph.n)]
    for u in range(graph.n):
        for mid in graph.adj[u]:
            second[u].update(graph.adj[mid])
        second[u].discard(u)
        second[u] -= graph.adj[u]
    return second


def brute_l21_feasible(graph, span, second):
    labels = [-1] * graph.n

    def walk(v):
        if v == graph.n:
            return True
        for lab in range(span + 1):
            if any(labels[u] >= 0 and abs(labels[u] - lab) < 2 for u in graph.adj[v]):
                continue
            if any(labels[u] == lab for u in second[v]):
                continue
            labels[v] = lab
            if walk(v + 1):
                return True
            labels[v] = -1
        return False

    return walk(0)


def brute_l21_span(graph):
    second = second_neighbor_sets(graph)
    span = 0
    while not brute_l21_feasible(graph, span, second):
        span += 1
    return span


def centered_disks_meet(c1, dsq1, c2, dsq2):
    """Closed disks with exact squared diameters dsq at centers c.

    Intersection test without square roots: with L = 4|c1-c2|^2,
    L <= (d1+d2)^2 iff L - d1^2 - d2^2 <= 0 or its square is at most
    4 d1^2 d2^2.
    """
    from diskcolor.geometry import sq_dist

    lhs = sq_dist(c1, c2) * 4
    gap = lhs - dsq1 - dsq2
    if gap.sign() <= 0:
        return True
    return gap * gap <= dsq1 * dsq2 * 4
