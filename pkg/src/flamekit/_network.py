"""Small integer-capacity flow network used by the path-system routines.

Arcs are added in the order callers want them scanned; every search in here
walks adjacency lists in insertion order, which keeps witnesses reproducible.
"""
from collections import deque

INF = 1 << 30


class Network:
    def __init__(self):
        self.to = []
        self.cap = []      # residual capacity
        self.ucap = []     # capacity above the lower bound
        self.lower = []
        self.key = []      # payload, e.g. an edge id; None for virtual arcs
        self.helper = []   # lower-bound reduction arcs, invisible to callers
        self.adj = {}

    def add_node(self, u):
        self.adj.setdefault(u, [])

    def add_arc(self, u, v, cap=1, key=None, lower=0, _helper=False):
        i = len(self.to)
        for node in (u, v):
            self.adj.setdefault(node, [])
        self.to += [v, u]
        self.cap += [cap - lower, 0]
        self.ucap += [cap - lower, 0]
        self.lower += [lower, 0]
        self.key += [key, key]
        self.helper += [_helper, _helper]
        self.adj[u].append(i)
        self.adj[v].append(i + 1)
        return i

    def tail(self, i):
        return self.to[i ^ 1]

    def flow(self, i):
        return self.lower[i] + self.ucap[i] - self.cap[i]

    def _augment_once(self, s, t):
        prev = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for i in self.adj[u]:
                if self.cap[i] > 0:
                    v = self.to[i]
                    if v not in prev:
                        prev[v] = i
                        if v == t:
                            break
                        queue.append(v)
            else:
                continue
            break
        if t not in prev:
            return False
        v = t
        while v != s:
            i = prev[v]
            self.cap[i] -= 1
            self.cap[i ^ 1] += 1
            v = self.to[i ^ 1]
        return True

    def max_flow(self, s, t, limit=INF):
        """Push unit augmentations from ``s`` to ``t``; return how many were pushed."""
        if s not in self.adj or t not in self.adj:
            return 0
        pushed = 0
        while pushed < limit and self._augment_once(s, t):
            pushed += 1
        return pushed

    def satisfy_lower_bounds(self, s, t):
        """Find an ``s``-``t`` flow respecting every arc's lower bound.

        Returns False when none exists.  On success the helper arcs are
        disabled, so further :meth:`max_flow` calls keep the bounds.
        """
        demand = {}
        for i in range(0, len(self.to), 2):
            if self.lower[i]:
                u, v = self.to[i ^ 1], self.to[i]
                demand[v] = demand.get(v, 0) + self.lower[i]
                demand[u] = demand.get(u, 0) - self.lower[i]
        if not demand:
            return True
        src, snk = ("__lb_source__",), ("__lb_sink__",)
        helpers = [self.add_arc(t, s, INF, _helper=True)]
        need = 0
        for node, d in demand.items():
            if d > 0:
                helpers.append(self.add_arc(src, node, d, _helper=True))
                need += d
            elif d < 0:
                helpers.append(self.add_arc(node, snk, -d, _helper=True))
        ok = self.max_flow(src, snk, need) == need
        for i in helpers:
            self.cap[i] = self.cap[i ^ 1] = 0
        return ok

    def residual_reachable(self, s):
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for i in self.adj.get(u, ()):
                if self.cap[i] > 0 and not self.helper[i] and self.to[i] not in seen:
                    seen.add(self.to[i])
                    stack.append(self.to[i])
        return seen

    def decompose(self, s, t, count):
        """Split the flow into ``count`` simple ``s``-``t`` arc sequences.

        Flow cycles met along the way are dropped.  Each walk prefers the
        earliest-inserted arc carrying flow.
        """
        left = {}
        for u, arcs in self.adj.items():
            for i in arcs:
                if i % 2 == 0 and not self.helper[i]:
                    f = self.flow(i)
                    if f > 0:
                        left[i] = f
        out = {u: [i for i in arcs if i in left] for u, arcs in self.adj.items()}
        paths = []
        for _ in range(count):
            walk = []
            pos = {s: 0}
            u = s
            while u != t:
                i = next((i for i in out[u] if left[i] > 0), None)
                if i is None:
                    raise RuntimeError("flow is not conserved")
                left[i] -= 1
                u = self.to[i]
                if u in pos:
                    del walk[pos[u]:]
                    for w in list(pos):
                        if pos[w] > pos[u]:
                            del pos[w]
                else:
                    walk.append(i)
                    pos[u] = len(walk)
            paths.append(walk)
        return paths
