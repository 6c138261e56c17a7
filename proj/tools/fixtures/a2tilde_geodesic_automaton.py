#!/usr/bin/env python3
"""Builds the minimal geodesic-word automaton of the affine Coxeter group A~2.

Elements are represented through the integral Tits representation; cone types
are identified by their truncated geodesic extension sets and then refined by
Moore minimization. The output is a raw digraph fixture (nodes, edges,
start_weights) with the start state pruned.
"""
import json
import sys


def reflect(i, vec):
    # s_i(a_j) = a_j + a_i for j != i, s_i(a_i) = -a_i, acting on coordinates.
    out = list(vec)
    out[i] = -vec[i] + sum(vec[j] for j in range(3) if j != i)
    return tuple(out)


def act(i, elem):
    # right multiplication g*s_i: columns of g are images of basis vectors.
    cols = list(elem)
    si_cols = []
    for j in range(3):
        if j == i:
            si_cols.append(tuple(-c for c in cols[i]))
        else:
            si_cols.append(tuple(cols[j][k] + cols[i][k] for k in range(3)))
    return tuple(si_cols)


def main():
    max_len = 22
    depth = 7
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    length = {ident: 0}
    layer = [ident]
    for n in range(1, max_len + 1):
        nxt = []
        for g in layer:
            for i in range(3):
                h = act(i, g)
                if h not in length:
                    length[h] = n
                    nxt.append(h)
        layer = nxt

    def signature(g):
        base = length[g]
        words = []
        stack = [(g, "")]
        while stack:
            h, w = stack.pop()
            words.append(w)
            if len(w) == depth:
                continue
            for i in range(3):
                k = act(i, h)
                if length.get(k) == base + len(w) + 1:
                    stack.append((k, w + str(i + 1)))
        return frozenset(words)

    sig_of = {}
    states = {}
    order = []
    frontier = [ident]
    seen = {ident}
    for _ in range(max_len - depth - 1):
        nxt = []
        for g in frontier:
            s = signature(g)
            sig_of[g] = s
            if s not in states:
                states[s] = len(order)
                order.append(g)
            for i in range(3):
                h = act(i, g)
                if length[h] == length[g] + 1 and h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt

    trans = {}
    for s, idx in states.items():
        g = order[idx]
        for i in range(3):
            h = act(i, g)
            if length[h] == length[g] + 1:
                hs = sig_of.get(h) or signature(h)
                trans[(idx, i)] = states[hs]

    # Moore refinement.
    part = {q: 0 for q in range(len(order))}
    while True:
        keys = {}
        new = {}
        for q in range(len(order)):
            key = (part[q],) + tuple(part[trans[(q, i)]] if (q, i) in trans else -1 for i in range(3))
            new[q] = keys.setdefault(key, len(keys))
        if len(set(new.values())) == len(set(part.values())):
            break
        part = new

    nstates = len(set(part.values()))
    start = part[0]
    edges = sorted({(part[q], i, part[t]) for (q, i), t in trans.items()})
    print(f"{nstates} states (including start)", file=sys.stderr)
    json.dump({"states": nstates, "start": start, "edges": edges}, sys.stdout)


if __name__ == "__main__":
    main()
