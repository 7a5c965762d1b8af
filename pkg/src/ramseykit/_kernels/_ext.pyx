# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python search kernels.

Semantics, traversal order and tie-breaking mirror pure.py exactly; the
embedding plans are even built by the same Python helper, so both backends
return identical witnesses and node counts.
"""

import array

from cpython cimport array

from ramseykit._kernels.pure import (build_embed_plans, row_major_index,
                                     triangular_edges)

BACKEND = "compiled"

ARROWS_TRUE = 1
ARROWS_FALSE = 0
ARROWS_INCONCLUSIVE = 2

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(unsigned long long x) nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(unsigned long long x) nogil:
    return __builtin_ctzll(x)


# --- Lemma 1 stepping ---------------------------------------------------------

cdef void _blue_rows(int n, unsigned long long mask, unsigned long long* blue) nogil:
    cdef int i, j, idx = 0
    for i in range(n):
        blue[i] = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> idx) & 1:
                blue[i] |= (<unsigned long long>1) << j
                blue[j] |= (<unsigned long long>1) << i
            idx += 1


cdef void _step(int n, unsigned long long* blue, int k, int l,
                unsigned long long* out_x, unsigned long long* out_y,
                int* out_red, int* out_partial) nogil:
    cdef unsigned long long full = ((<unsigned long long>1) << n) - 1
    cdef unsigned long long s = full, xr = 0, xb = 0, vbit, rest, red_nb
    cdef int a = k, b = l, v, s1, rdeg
    while s:
        v = _ctz(s)
        vbit = (<unsigned long long>1) << v
        rest = s ^ vbit
        s1 = _popcount(rest)
        red_nb = full & ~blue[v] & ~vbit
        rdeg = _popcount(red_nb & rest)
        if (a + b) * rdeg >= a * s1:
            xr |= vbit
            s = red_nb & rest
            a -= 1
            if a == 0:
                out_x[0] = xr; out_y[0] = s; out_red[0] = 1; out_partial[0] = 0
                return
        else:
            xb |= vbit
            s = blue[v] & rest
            b -= 1
            if b == 0:
                out_x[0] = xb; out_y[0] = s; out_red[0] = 0; out_partial[0] = 0
                return
    if _popcount(xr) >= _popcount(xb):
        out_x[0] = xr; out_red[0] = 1
    else:
        out_x[0] = xb; out_red[0] = 0
    out_y[0] = 0
    out_partial[0] = 1


cdef int _pair_valid(int n, unsigned long long* blue, unsigned long long x,
                     unsigned long long y, int is_red) nogil:
    cdef unsigned long long full = ((<unsigned long long>1) << n) - 1
    cdef unsigned long long union_ = x | y, rest = x, vbit, adj
    cdef int v
    while rest:
        v = _ctz(rest)
        vbit = (<unsigned long long>1) << v
        rest ^= vbit
        if is_red:
            adj = full & ~blue[v] & ~vbit
        else:
            adj = blue[v]
        if (union_ & ~vbit) & ~adj:
            return 0
    return 1


def lemma1_pair(int n, unsigned long long mask, int k, int l):
    """One stepping run on one row-major coloring mask."""
    if n < 1 or n > 11:
        raise ValueError("compiled lemma1 kernel supports 1 <= n <= 11")
    cdef unsigned long long blue[16]
    cdef unsigned long long x, y
    cdef int is_red, partial
    _blue_rows(n, mask, blue)
    _step(n, blue, k, l, &x, &y, &is_red, &partial)
    return x, y, bool(is_red), bool(partial)


def lemma1_scan(int n, int k, int l, unsigned long long lo,
                unsigned long long hi, long long bound):
    """Sweep colorings lo <= mask < hi; validate pair and the |Y| bound."""
    if n < 1 or n > 11:
        raise ValueError("compiled lemma1 kernel supports 1 <= n <= 11")
    cdef unsigned long long blue[16]
    cdef unsigned long long mask, x, y
    cdef int is_red, partial, ok
    cdef long long checked = 0, violations = 0, slack
    cdef long long first_bad = -1, min_slack = 0, arg_mask = -1
    cdef int have_min = 0
    with nogil:
        mask = lo
        while mask < hi:
            _blue_rows(n, mask, blue)
            _step(n, blue, k, l, &x, &y, &is_red, &partial)
            ok = x != 0 and _pair_valid(n, blue, x, y, is_red)
            slack = _popcount(y) - bound
            if partial and bound > 0:
                ok = 0
            if slack < 0:
                ok = 0
            if not ok:
                violations += 1
                if first_bad < 0:
                    first_bad = <long long>mask
            if (not have_min) or slack < min_slack:
                have_min = 1
                min_slack = slack
                arg_mask = <long long>mask
            checked += 1
            mask += 1
    return checked, violations, first_bad, min_slack, arg_mask


# --- arrows search -------------------------------------------------------------

cdef struct AState:
    int n, E, np1, np2, nplans1, nplans2
    unsigned long long full
    int* ei
    int* ej
    unsigned long long* blue
    unsigned long long* red
    int* p1m
    int* p2m
    long long nodes
    long long budget  # -1 means unlimited


cdef int _place(AState* st, unsigned long long* coloradj, int* pm, int npv,
                int s, unsigned long long used, int* hostpos) nogil:
    if s == npv:
        return 1
    cdef unsigned long long cand, tm
    cdef int c
    if pm[s] == 0:
        cand = st.full & ~used
    else:
        cand = st.full
        tm = <unsigned long long>pm[s]
        while tm:
            cand &= coloradj[hostpos[_ctz(tm)]]
            tm &= tm - 1
        cand &= ~used
    while cand:
        c = _ctz(cand)
        cand &= cand - 1
        hostpos[s] = c
        if _place(st, coloradj, pm, npv, s + 1,
                  used | ((<unsigned long long>1) << c), hostpos):
            return 1
    return 0


cdef int _creates(AState* st, int d, int is_blue) nogil:
    cdef int i = st.ei[d], j = st.ej[d]
    cdef int hostpos[18]
    cdef unsigned long long* coloradj
    cdef int* pmm
    cdef int npv, nplans, pi
    if is_blue:
        coloradj = st.blue; pmm = st.p1m; npv = st.np1; nplans = st.nplans1
    else:
        coloradj = st.red; pmm = st.p2m; npv = st.np2; nplans = st.nplans2
    for pi in range(nplans):
        hostpos[0] = i
        hostpos[1] = j
        if npv < 3:
            return 1
        if _place(st, coloradj, pmm + pi * npv, npv, 2,
                  ((<unsigned long long>1) << i) | ((<unsigned long long>1) << j),
                  hostpos):
            return 1
    return 0


cdef inline void _assign(AState* st, int d, int is_blue) nogil:
    cdef int i = st.ei[d], j = st.ej[d]
    if is_blue:
        st.blue[i] |= (<unsigned long long>1) << j
        st.blue[j] |= (<unsigned long long>1) << i
    else:
        st.red[i] |= (<unsigned long long>1) << j
        st.red[j] |= (<unsigned long long>1) << i


cdef inline void _unassign(AState* st, int d, int is_blue) nogil:
    cdef int i = st.ei[d], j = st.ej[d]
    if is_blue:
        st.blue[i] &= ~((<unsigned long long>1) << j)
        st.blue[j] &= ~((<unsigned long long>1) << i)
    else:
        st.red[i] &= ~((<unsigned long long>1) << j)
        st.red[j] &= ~((<unsigned long long>1) << i)


cdef int _dfs(AState* st, int d) nogil:
    # 1 = every completion below d contains a target; 0 = witness in state;
    # 2 = budget exhausted
    st.nodes += 1
    if st.budget >= 0 and st.nodes > st.budget:
        return 2
    if d == st.E:
        return 0
    cdef int ib, r, is_blue
    for ib in range(2):
        is_blue = 1 - ib  # blue branch first, as in the pure twin
        _assign(st, d, is_blue)
        if not _creates(st, d, is_blue):
            r = _dfs(st, d + 1)
            if r != 1:
                return r
        _unassign(st, d, is_blue)
    return 1


def arrows_scan(int n, pat1, pat2, fixed, budget=None):
    """Exhaustive search mirroring pure.arrows_scan; see its docstring."""
    if n < 1 or n > 31:
        raise ValueError("compiled arrows kernel supports 1 <= n <= 31")
    if len(pat1) > 16 or len(pat2) > 16:
        raise ValueError("compiled arrows kernel supports patterns up to 16 vertices")
    edges = triangular_edges(n)
    plans1 = build_embed_plans(tuple(pat1))
    plans2 = build_embed_plans(tuple(pat2))

    cdef array.array ei_a = array.array("i", [e[0] for e in edges] or [0])
    cdef array.array ej_a = array.array("i", [e[1] for e in edges] or [0])
    cdef array.array p1m_a = array.array(
        "i", [pm for _o, pms in plans1 for pm in pms] or [0])
    cdef array.array p2m_a = array.array(
        "i", [pm for _o, pms in plans2 for pm in pms] or [0])
    cdef unsigned long long blue[32]
    cdef unsigned long long red[32]
    cdef int i
    for i in range(n):
        blue[i] = 0
        red[i] = 0

    cdef AState st
    st.n = n
    st.E = len(edges)
    st.np1 = len(pat1)
    st.np2 = len(pat2)
    st.nplans1 = len(plans1)
    st.nplans2 = len(plans2)
    st.full = ((<unsigned long long>1) << n) - 1
    st.ei = ei_a.data.as_ints
    st.ej = ej_a.data.as_ints
    st.blue = blue
    st.red = red
    st.p1m = p1m_a.data.as_ints
    st.p2m = p2m_a.data.as_ints
    st.nodes = 0
    st.budget = -1 if budget is None else <long long>budget

    # fixed prefix: a target completed inside it settles the whole branch
    cdef int idx, is_blue
    for t, (eidx, fblue) in enumerate(fixed):
        if eidx != t:
            raise ValueError("fixed edges must be a prefix in triangular order")
        idx = eidx
        is_blue = 1 if fblue else 0
        st.nodes += 1
        _assign(&st, idx, is_blue)
        if _creates(&st, idx, is_blue):
            return ARROWS_TRUE, -1, st.nodes

    cdef int start = len(fixed)
    cdef int r
    with nogil:
        r = _dfs(&st, start)
    if r == 2:
        return ARROWS_INCONCLUSIVE, -1, st.nodes
    if r == 1:
        return ARROWS_TRUE, -1, st.nodes
    mask = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (st.blue[i] >> j) & 1:
                mask |= 1 << row_major_index(i, j, n)
    return ARROWS_FALSE, mask, st.nodes
