"""Pure-Python exhaustive search kernels (fallback for ``_kernels``).

Both kernels take the graph as a sequence of neighbor bitmasks on vertices
``0..n-1`` and return ``(order, classes)`` with ``classes`` a list of vertex
bitmasks ``V_1..V_k``.
"""

MAX_VERTICES = 24


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _popcount(x):
    return bin(x).count("1")


def _minimal_dominators(adj, targets, pool):
    """Yield each inclusion-minimal subset of ``pool`` dominating ``targets``.

    Branches on the undominated target with fewest options; later branches
    exclude earlier choices so every minimal set is produced once.
    """
    out = []

    def rec(undominated, chosen, allowed):
        if not undominated:
            for d in _bits(chosen):
                others = 0
                for e in _bits(chosen & ~(1 << d)):
                    others |= adj[e]
                if not (adj[d] & targets & ~others):
                    return
            out.append(chosen)
            return
        best_u, best_opts = -1, None
        for u in _bits(undominated):
            opts = adj[u] & allowed
            if best_opts is None or _popcount(opts) < _popcount(best_opts):
                best_u, best_opts = u, opts
                if not opts:
                    return
        for d in _bits(best_opts):
            allowed &= ~(1 << d)
            rec(undominated & ~adj[d], chosen | (1 << d), allowed)

    rec(targets, 0, pool)
    return out


def transitive_order(adj, n):
    """Maximum order of a transitive partition, built from the top class down.

    State is the set ``rest`` of vertices not yet placed; everything above is
    ``full & ~rest``. A class other than ``V_1`` can be shrunk to a minimal
    dominator of the classes above it (the leftovers move to ``V_1``), so only
    minimal dominators are branched on. Every placed vertex needs a neighbor
    in each class still to come, which bounds the depth left.
    """
    if n == 0:
        return 0, []
    if n > MAX_VERTICES:
        raise ValueError(f"kernel limited to {MAX_VERTICES} vertices")
    full = (1 << n) - 1
    memo = {}

    def best(rest):
        hit = memo.get(rest)
        if hit is not None:
            return hit[0]
        above = full & ~rest
        if above:
            bound = min(_popcount(adj[u] & rest) for u in _bits(above))
        else:
            bound = _popcount(rest)
        value, choice = -1, 0
        if bound >= 1:
            value = 1
        if value < bound:
            if above:
                cands = _minimal_dominators(adj, above, rest)
            else:
                cands = [1 << v for v in _bits(rest)]
            for d in cands:
                if d == rest:
                    continue
                sub = best(rest & ~d)
                if sub > 0 and sub + 1 > value:
                    value, choice = sub + 1, d
                    if value >= bound:
                        break
        memo[rest] = (value, choice)
        return value

    k = best(full)
    top_down = []
    rest = full
    while True:
        d = memo[rest][1]
        if not d:
            top_down.append(rest)
            break
        top_down.append(d)
        rest &= ~d
    return k, top_down[::-1]


def _maximal_independent_sets(adj, rest):
    out = []

    def bk(r, p, x):
        if not p and not x:
            out.append(r)
            return
        # Pivot on the vertex with most non-neighbors among p.
        pivot_pool = p | x
        u = max(_bits(pivot_pool), key=lambda w: _popcount(p & ~adj[w]))
        for v in _bits(p & (adj[u] | (1 << u))):
            bit = 1 << v
            nonadj = rest & ~adj[v] & ~bit
            bk(r | bit, p & nonadj, x & nonadj)
            p &= ~bit
            x |= bit

    bk(0, rest, 0)
    return out


def grundy_order(adj, n):
    """Grundy number by peeling maximal independent sets of what remains."""
    if n == 0:
        return 0, []
    if n > MAX_VERTICES:
        raise ValueError(f"kernel limited to {MAX_VERTICES} vertices")
    full = (1 << n) - 1
    memo = {0: (0, 0)}

    def best(rest):
        hit = memo.get(rest)
        if hit is not None:
            return hit[0]
        bound = 1 + max(_popcount(adj[v] & rest) for v in _bits(rest))
        value, choice = 0, 0
        for ind in _maximal_independent_sets(adj, rest):
            sub = best(rest & ~ind)
            if sub + 1 > value:
                value, choice = sub + 1, ind
                if value >= bound:
                    break
        memo[rest] = (value, choice)
        return value

    k = best(full)
    classes = []
    rest = full
    while rest:
        ind = memo[rest][1]
        classes.append(ind)
        rest &= ~ind
    return k, classes
