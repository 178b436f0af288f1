"""Literal-definition reference values, deliberately slow and bit-trick free.

Everything here works on Python sets and follows the textbook definitions:
minimal/maximal are checked against *all* proper subsets/supersets rather than
single-vertex moves.  Intended for graphs of order <= 10.
"""

from itertools import combinations


def vertex_sets(n):
    verts = range(n)
    return [frozenset(c) for k in range(n + 1) for c in combinations(verts, k)]


class Naive:
    def __init__(self, order, edges):
        self.n = order
        self.nbr = {v: set() for v in range(order)}
        for u, v in edges:
            self.nbr[u].add(v)
            self.nbr[v].add(u)
        self.V = frozenset(range(order))
        self.sets = vertex_sets(order)

    @classmethod
    def of(cls, g):
        return cls(g.order, g.edges())

    def closed(self, v):
        return self.nbr[v] | {v}

    def N(self, S):
        out = set()
        for v in S:
            out |= self.closed(v)
        return out

    def dominating(self, S):
        return self.N(S) == self.V

    def independent(self, S):
        return all(u not in self.nbr[v] for u, v in combinations(S, 2))

    def pn(self, v, S):
        return self.closed(v) - self.N(S - {v})

    def irredundant(self, S):
        return all(self.pn(v, S) for v in S)

    def open_irredundant(self, S):
        return all(self.pn(v, S) - S for v in S)

    def _minimal(self, pred):
        good = [S for S in self.sets if pred(S)]
        return [S for S in good if not any(T < S for T in good)]

    def _maximal(self, pred):
        good = [S for S in self.sets if pred(S)]
        return [S for S in good if not any(S < T for T in good)]

    def params(self):
        min_dom = self._minimal(self.dominating)
        max_ind = self._maximal(self.independent)
        max_irr = self._maximal(self.irredundant)
        irr_sets = [S for S in self.sets if self.irredundant(S)]
        ind_sets = [S for S in self.sets if self.independent(S)]
        oir_sets = [S for S in self.sets if self.open_irredundant(S)]
        IS_v = {v: max(len(S) for S in ind_sets if v in S) for v in self.V}
        IRS_v = {v: max(len(S) for S in irr_sets if v in S) for v in self.V}
        return {
            "ir": min(len(S) for S in max_irr),
            "gamma": min(len(S) for S in min_dom),
            "i": min(len(S) for S in max_ind),
            "alpha": max(len(S) for S in max_ind),
            "Gamma": max(len(S) for S in min_dom),
            "IR": max(len(S) for S in max_irr),
            "OIR": max(len(S) for S in oir_sets),
            "IS": min(IS_v.values()),
            "IRS": min(IRS_v.values()),
        }


def naive_params(g):
    return Naive.of(g).params()


def has_induced_copy(g, h):
    """Brute force: some |h|-subset of g induces a graph isomorphic to h (all bijections)."""
    from itertools import permutations

    k = h.order
    h_edges = {frozenset(e) for e in h.edges()}
    for sub in combinations(range(g.order), k):
        for perm in permutations(sub):
            if all(
                (frozenset((a, b)) in h_edges) == g.has_edge(perm[a], perm[b])
                for a, b in combinations(range(k), 2)
            ):
                return True
    return False
