"""Pure-Python twins of the compiled search kernels.

Both backends implement the same three entry points with identical
semantics, traversal order and tie-breaking, so results (including node
counts and witnesses) are byte-identical whichever one is active:

  lemma1_pair(n, mask, k, l)      one stepping run on one coloring
  lemma1_scan(n, k, l, lo, hi)    stepping + validation over a mask range
  arrows_scan(n, pat1, pat2, fixed, budget)   exhaustive arrows search

Colorings of K_n are row-major pair bitmasks (bit 1 = blue), matching the
text serialization.  The arrows search assigns edges in triangular order
(0,1),(0,2),(1,2),(0,3),... so each prefix completes a clique early.
"""

from __future__ import annotations

BACKEND = "pure"

ARROWS_TRUE = 1
ARROWS_FALSE = 0
ARROWS_INCONCLUSIVE = 2


def triangular_edges(n):
    return [(i, j) for j in range(1, n) for i in range(j)]


def row_major_index(i, j, n):
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _blue_rows(n, mask):
    rows = [0] * n
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> idx & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return rows


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# --- Lemma 1 stepping ---------------------------------------------------------

def lemma1_pair(n, mask, k, l):
    """Deterministic stepping run; returns (x, y, is_red, partial).

    At each step the lowest-index vertex v of the residual set S steps red
    when (a+b)*reddeg(v) >= a*(|S|-1) with (a, b) the remaining budgets
    (ties toward red), else blue.  Stops when either side fills its budget;
    if S empties first the larger side is returned flagged partial (ties
    toward red).
    """
    full = (1 << n) - 1
    blue = _blue_rows(n, mask)
    s = full
    xr = xb = 0
    a, b = k, l
    while s:
        v = (s & -s).bit_length() - 1
        vbit = 1 << v
        rest = s ^ vbit
        s1 = rest.bit_count()
        red_nb = full & ~blue[v] & ~vbit
        rdeg = (red_nb & rest).bit_count()
        if (a + b) * rdeg >= a * s1:
            xr |= vbit
            s = red_nb & rest
            a -= 1
            if a == 0:
                return xr, s, True, False
        else:
            xb |= vbit
            s = blue[v] & rest
            b -= 1
            if b == 0:
                return xb, s, False, False
    if xr.bit_count() >= xb.bit_count():
        return xr, 0, True, True
    return xb, 0, False, True


def _pair_valid(n, blue, x, y, is_red):
    full = (1 << n) - 1
    union = x | y
    for v in _bits(x):
        vbit = 1 << v
        adj = (full & ~blue[v] & ~vbit) if is_red else blue[v]
        if (union & ~vbit) & ~adj:
            return False
    return True


def lemma1_scan(n, k, l, lo, hi, bound):
    """Sweep colorings `lo <= mask < hi`; validate pair and the |Y| bound.

    Returns (checked, violations, first_bad_mask, min_slack, argmin_mask)
    with slack = |Y| - bound; first_bad_mask is -1 when everything passed.
    A partial return additionally counts as a violation when bound > 0.
    """
    checked = violations = 0
    first_bad = -1
    min_slack = None
    arg_mask = -1
    for mask in range(lo, hi):
        x, y, is_red, partial = lemma1_pair(n, mask, k, l)
        blue = _blue_rows(n, mask)
        ok = x != 0 and _pair_valid(n, blue, x, y, is_red)
        slack = y.bit_count() - bound
        if partial and bound > 0:
            ok = False
        if slack < 0:
            ok = False
        if not ok:
            violations += 1
            if first_bad < 0:
                first_bad = mask
        if min_slack is None or slack < min_slack:
            min_slack = slack
            arg_mask = mask
        checked += 1
    if min_slack is None:
        min_slack = 0
    return checked, violations, first_bad, min_slack, arg_mask


# --- arrows search -------------------------------------------------------------

def build_embed_plans(adj):
    """Pinned-edge embedding plans: one per (pattern edge, orientation).

    Each plan is (order, premasks): `order` places the two pinned vertices
    first, then grows by lowest-index vertex adjacent to the placed set
    (falling back to lowest unplaced for disconnected patterns);
    premasks[s] holds the order-positions of earlier-placed neighbors.
    """
    np_ = len(adj)
    plans = []
    for a in range(np_):
        for b in range(a + 1, np_):
            if not adj[a] >> b & 1:
                continue
            for x, y in ((a, b), (b, a)):
                order = [x, y]
                placed = (1 << x) | (1 << y)
                while len(order) < np_:
                    pick = -1
                    for w in range(np_):
                        if placed >> w & 1:
                            continue
                        if adj[w] & placed:
                            pick = w
                            break
                    if pick < 0:
                        pick = next(w for w in range(np_) if not placed >> w & 1)
                    order.append(pick)
                    placed |= 1 << pick
                premasks = []
                for s, w in enumerate(order):
                    pm = 0
                    for t in range(s):
                        if adj[w] >> order[t] & 1:
                            pm |= 1 << t
                    premasks.append(pm)
                plans.append((order, premasks))
    return plans


def _embeds_through(plans, np_, hi, hj, coloradj, n):
    """Does the pattern embed with some pattern edge pinned to (hi, hj)?

    hostpos[s] is the host vertex of the pattern vertex placed at step s.
    """
    full = (1 << n) - 1
    hostpos = [0] * max(np_, 2)

    def place(s, used, premasks):
        if s == np_:
            return True
        pm = premasks[s]
        if pm == 0:
            cand = full & ~used
        else:
            cand = full
            t = pm
            while t:
                low = t & -t
                cand &= coloradj[hostpos[low.bit_length() - 1]]
                t ^= low
            cand &= ~used
        for c in _bits(cand):
            hostpos[s] = c
            if place(s + 1, used | (1 << c), premasks):
                return True
        return False

    for _order, premasks in plans:
        hostpos[0] = hi
        hostpos[1] = hj
        if np_ < 3:
            return True
        if place(2, (1 << hi) | (1 << hj), premasks):
            return True
    return False


class _Budget(Exception):
    pass


def arrows_scan(n, pat1, pat2, fixed, budget=None):
    """Exhaustive search for colorings avoiding blue-pat1 and red-pat2.

    `fixed` preassigns the first len(fixed) edges in triangular order as
    (edge_index, is_blue) pairs.  Returns (status, witness_mask, nodes):
    status 1 when every completion contains a target, 0 with a row-major
    witness mask otherwise, 2 when the node budget ran out.
    """
    edges = triangular_edges(n)
    E = len(edges)
    plans1 = build_embed_plans(pat1)
    plans2 = build_embed_plans(pat2)
    np1, np2 = len(pat1), len(pat2)
    blue = [0] * n
    red = [0] * n
    nodes = 0

    def creates(d, is_blue):
        i, j = edges[d]
        if is_blue:
            return _embeds_through(plans1, np1, i, j, blue, n)
        return _embeds_through(plans2, np2, i, j, red, n)

    def assign(d, is_blue):
        i, j = edges[d]
        rows = blue if is_blue else red
        rows[i] |= 1 << j
        rows[j] |= 1 << i

    def unassign(d, is_blue):
        i, j = edges[d]
        rows = blue if is_blue else red
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)

    # apply the fixed prefix; a target completed inside it settles the branch
    for t, (idx, is_blue) in enumerate(fixed):
        if idx != t:
            raise ValueError("fixed edges must be a prefix in triangular order")
        nodes += 1
        assign(idx, is_blue)
        if creates(idx, is_blue):
            return ARROWS_TRUE, -1, nodes

    def witness_mask():
        mask = 0
        for i in range(n):
            for j in range(i + 1, n):
                if blue[i] >> j & 1:
                    mask |= 1 << row_major_index(i, j, n)
        return mask

    def dfs(d):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _Budget
        if d == E:
            return witness_mask()
        for is_blue in (True, False):
            assign(d, is_blue)
            if not creates(d, is_blue):
                w = dfs(d + 1)
                if w is not None:
                    return w
            unassign(d, is_blue)
        return None

    try:
        w = dfs(len(fixed))
    except _Budget:
        return ARROWS_INCONCLUSIVE, -1, nodes
    if w is None:
        return ARROWS_TRUE, -1, nodes
    return ARROWS_FALSE, w, nodes
