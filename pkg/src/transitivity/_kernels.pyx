# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled exhaustive search kernels; same API as ``_kernels_py``."""

from libc.stdlib cimport malloc, free
from libcpp.vector cimport vector

ctypedef unsigned long long mask_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

MAX_VERTICES = 24

cdef inline int popc(mask_t x) nogil:
    return __builtin_popcountll(x)

cdef inline int low(mask_t x) nogil:
    return __builtin_ctzll(x)


cdef struct Ctx:
    int n
    mask_t full
    mask_t adj[64]
    signed char* val
    mask_t* choice


cdef void _min_dom(Ctx* c, mask_t targets, mask_t undominated, mask_t chosen,
                   mask_t allowed, vector[mask_t]* out) nogil:
    cdef mask_t rest, opts, best_opts, others, bit
    cdef int u, d, e, best_n, k
    if undominated == 0:
        rest = chosen
        while rest:
            d = low(rest)
            rest &= rest - 1
            others = 0
            bit = chosen & ~((<mask_t>1) << d)
            while bit:
                e = low(bit)
                bit &= bit - 1
                others |= c.adj[e]
            if (c.adj[d] & targets & ~others) == 0:
                return
        out.push_back(chosen)
        return
    best_n = 65
    best_opts = 0
    rest = undominated
    while rest:
        u = low(rest)
        rest &= rest - 1
        opts = c.adj[u] & allowed
        k = popc(opts)
        if k < best_n:
            best_n = k
            best_opts = opts
            if k == 0:
                return
    while best_opts:
        d = low(best_opts)
        best_opts &= best_opts - 1
        bit = (<mask_t>1) << d
        allowed &= ~bit
        _min_dom(c, targets, undominated & ~c.adj[d], chosen | bit, allowed, out)


cdef int _tr_best(Ctx* c, mask_t rest) nogil:
    cdef signed char cached = c.val[rest]
    if cached != -2:
        return cached
    cdef mask_t above = c.full & ~rest
    cdef mask_t it, d
    cdef int bound, k, u, value, sub
    cdef mask_t ch = 0
    cdef vector[mask_t] cands
    cdef size_t i
    if above:
        bound = 65
        it = above
        while it:
            u = low(it)
            it &= it - 1
            k = popc(c.adj[u] & rest)
            if k < bound:
                bound = k
    else:
        bound = popc(rest)
    value = -1
    if bound >= 1:
        value = 1
    if value < bound:
        if above:
            _min_dom(c, above, above, 0, rest, &cands)
        else:
            it = rest
            while it:
                u = low(it)
                it &= it - 1
                cands.push_back((<mask_t>1) << u)
        for i in range(cands.size()):
            d = cands[i]
            if d == rest:
                continue
            sub = _tr_best(c, rest & ~d)
            if sub > 0 and sub + 1 > value:
                value = sub + 1
                ch = d
                if value >= bound:
                    break
    c.val[rest] = <signed char>value
    c.choice[rest] = ch
    return value


cdef void _mis(Ctx* c, mask_t rest, mask_t r, mask_t p, mask_t x,
               vector[mask_t]* out) nogil:
    cdef mask_t pool, it, bit, nonadj, branch
    cdef int u, w, v, k, best
    if p == 0 and x == 0:
        out.push_back(r)
        return
    pool = p | x
    best = -1
    u = -1
    it = pool
    while it:
        w = low(it)
        it &= it - 1
        k = popc(p & ~c.adj[w])
        if k > best:
            best = k
            u = w
    branch = p & (c.adj[u] | ((<mask_t>1) << u))
    while branch:
        v = low(branch)
        branch &= branch - 1
        bit = (<mask_t>1) << v
        nonadj = rest & ~c.adj[v] & ~bit
        _mis(c, rest, r | bit, p & nonadj, x & nonadj, out)
        p &= ~bit
        x |= bit


cdef int _gr_best(Ctx* c, mask_t rest) nogil:
    cdef signed char cached = c.val[rest]
    if cached != -2:
        return cached
    cdef mask_t it, ind
    cdef int bound = 0, k, v, value = 0, sub
    cdef mask_t ch = 0
    cdef vector[mask_t] sets
    cdef size_t i
    it = rest
    while it:
        v = low(it)
        it &= it - 1
        k = popc(c.adj[v] & rest)
        if k > bound:
            bound = k
    bound += 1
    _mis(c, rest, 0, rest, 0, &sets)
    for i in range(sets.size()):
        ind = sets[i]
        sub = _gr_best(c, rest & ~ind)
        if sub + 1 > value:
            value = sub + 1
            ch = ind
            if value >= bound:
                break
    c.val[rest] = <signed char>value
    c.choice[rest] = ch
    return value


cdef int _setup(Ctx* c, adj, int n) except -1:
    cdef size_t size, i
    if n > MAX_VERTICES:
        raise ValueError(f"kernel limited to {MAX_VERTICES} vertices")
    c.n = n
    c.full = ((<mask_t>1) << n) - 1
    for i in range(n):
        c.adj[i] = <mask_t>adj[i]
    size = (<size_t>1) << n
    c.val = <signed char*>malloc(size * sizeof(signed char))
    c.choice = <mask_t*>malloc(size * sizeof(mask_t))
    if c.val == NULL or c.choice == NULL:
        free(c.val)
        free(c.choice)
        raise MemoryError()
    for i in range(size):
        c.val[i] = -2
    return 0


def transitive_order(adj, int n):
    """Maximum order of a transitive partition; see ``_kernels_py``."""
    if n == 0:
        return 0, []
    cdef Ctx c
    _setup(&c, adj, n)
    cdef int k
    cdef mask_t rest, d
    try:
        with nogil:
            k = _tr_best(&c, c.full)
        top_down = []
        rest = c.full
        while True:
            d = c.choice[rest]
            if d == 0:
                top_down.append(rest)
                break
            top_down.append(d)
            rest &= ~d
    finally:
        free(c.val)
        free(c.choice)
    return k, top_down[::-1]


def grundy_order(adj, int n):
    """Grundy number by peeling maximal independent sets; see ``_kernels_py``."""
    if n == 0:
        return 0, []
    cdef Ctx c
    _setup(&c, adj, n)
    cdef int k
    cdef mask_t rest, ind
    try:
        c.val[0] = 0
        c.choice[0] = 0
        with nogil:
            k = _gr_best(&c, c.full)
        classes = []
        rest = c.full
        while rest:
            ind = c.choice[rest]
            classes.append(ind)
            rest &= ~ind
    finally:
        free(c.val)
        free(c.choice)
    return k, classes
