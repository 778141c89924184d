"""Exact subtree-count and mean-order invariants via rooted DP with rerooting.

All counts are Python ints (arbitrary precision) and all averages are
Fractions in lowest terms.  Cross-child products use prefix/suffix products
so no big-integer division ever occurs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .rationals import ratio_json
from .tree import Tree, TreeError


@dataclass(frozen=True)
class RootedCounts:
    root: int
    down_count: Tuple[int, ...]
    down_sum: Tuple[int, ...]
    alpha_root: int
    alpha_bar_root: int
    total_count: int


@dataclass(frozen=True)
class SubtreeStats:
    n: int
    subtree_count: int
    order_sum: int
    containment: Tuple[int, ...]
    mu: Fraction
    density: Fraction
    mu_prime: Optional[Fraction]
    s_prime_count: Optional[int]
    s_prime_order_sum: Optional[int]

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "subtree_count": str(self.subtree_count),
            "order_sum": str(self.order_sum),
            "containment": [str(c) for c in self.containment],
            "mu": ratio_json(self.mu),
            "density": ratio_json(self.density),
        }
        if self.mu_prime is not None:
            out["mu_prime"] = ratio_json(self.mu_prime)
            out["s_prime_count"] = str(self.s_prime_count)
            out["s_prime_order_sum"] = str(self.s_prime_order_sum)
        return out


@dataclass(frozen=True)
class VertexSubtreeView:
    vertex: int
    alpha: int
    alpha_bar: int
    lam: Fraction
    lambda_bar: Optional[Fraction]


def _orient(tree: Tree, root: int):
    """Parent array, preorder list and children lists for `tree` rooted at `root`."""
    n = tree.n
    parent = [-2] * n
    parent[root] = -1
    order = [root]
    stack = [root]
    while stack:
        u = stack.pop()
        for w in tree.adj[u]:
            if parent[w] == -2:
                parent[w] = u
                order.append(w)
                stack.append(w)
    # `order` above is DFS discovery order, already topological from the root
    children = [[] for _ in range(n)]
    for u in order[1:]:
        children[parent[u]].append(u)
    return parent, order, children


def _down_pass(tree: Tree, root: int):
    """Bottom-up counts: subtrees of the branch below u that contain u.

    down_count[u] = prod over children c of (down_count[c]+1);
    down_sum[u]   = down_count[u] + sum_c down_sum[c] * prod_{c'!=c}(down_count[c']+1).
    """
    _, order, children = _orient(tree, root)
    n = tree.n
    down_count = [1] * n
    down_sum = [1] * n
    for u in reversed(order):
        ch = children[u]
        if not ch:
            continue
        factors = [down_count[c] + 1 for c in ch]
        suffix = [1] * (len(ch) + 1)
        for i in range(len(ch) - 1, -1, -1):
            suffix[i] = suffix[i + 1] * factors[i]
        cross = 0
        prefix = 1
        for i, c in enumerate(ch):
            cross += down_sum[c] * prefix * suffix[i + 1]
            prefix *= factors[i]
        down_count[u] = prefix            # prefix now holds the full product
        down_sum[u] = prefix + cross
    return order, children, down_count, down_sum


def rooted_counts(tree: Tree, root: int) -> RootedCounts:
    """Root-anchored subtree counts and order sums for every vertex."""
    _, _, down_count, down_sum = _down_pass(tree, root)
    total = sum(down_count)
    alpha = down_count[root]
    return RootedCounts(
        root=root,
        down_count=tuple(down_count),
        down_sum=tuple(down_sum),
        alpha_root=alpha,
        alpha_bar_root=total - alpha,
        total_count=total,
    )


def all_containment_counts(tree: Tree) -> Tuple[int, ...]:
    """alpha(T, v) for every vertex v, via one down-pass and one rerooting pass.

    For a child c of u, the subtrees containing c split into a part below c
    (down_count[c] choices) and an optional part through u; the latter has
    up[c] = U[u] * prod_{siblings s}(down_count[s]+1) choices, and we track
    U[v] = up[v] + 1 with U[root] = 1.  alpha(v) = down_count[v] * U[v].
    """
    order, children, down_count, _ = _down_pass(tree, 0)
    n = tree.n
    U = [1] * n
    for u in order:
        ch = children[u]
        if not ch:
            continue
        factors = [down_count[c] + 1 for c in ch]
        suffix = [1] * (len(ch) + 1)
        for i in range(len(ch) - 1, -1, -1):
            suffix[i] = suffix[i + 1] * factors[i]
        prefix = 1
        for i, c in enumerate(ch):
            U[c] = U[u] * prefix * suffix[i + 1] + 1
            prefix *= factors[i]
    return tuple(down_count[v] * U[v] for v in range(n))


def global_stats(tree: Tree) -> SubtreeStats:
    """All global subtree aggregates of one tree, as exact values."""
    _, _, down_count, _ = _down_pass(tree, 0)
    total = sum(down_count)  # each subtree counted at its vertex nearest the root
    containment = all_containment_counts(tree)
    order_sum = sum(containment)
    mu = Fraction(order_sum, total)
    if tree.n == 1:
        return SubtreeStats(1, total, order_sum, containment, mu, mu, None, None, None)
    leaf_count = sum(1 for v in range(tree.n) if tree.degree(v) == 1)
    spc = total - leaf_count + 1
    sps = order_sum - leaf_count
    return SubtreeStats(
        n=tree.n,
        subtree_count=total,
        order_sum=order_sum,
        containment=containment,
        mu=mu,
        density=mu / tree.n,
        mu_prime=Fraction(sps, spc),
        s_prime_count=spc,
        s_prime_order_sum=sps,
    )


def vertex_view(tree: Tree, v: int, stats: Optional[SubtreeStats] = None) -> VertexSubtreeView:
    """alpha, lambda and the complementary averages at one vertex."""
    rc = rooted_counts(tree, v)
    if stats is None:
        stats = global_stats(tree)
    alpha = rc.alpha_root
    alpha_bar = stats.subtree_count - alpha
    lam = Fraction(rc.down_sum[v], alpha)
    if alpha_bar == 0:
        lambda_bar = None
    else:
        lambda_bar = Fraction(stats.order_sum - rc.down_sum[v], alpha_bar)
    return VertexSubtreeView(v, alpha, alpha_bar, lam, lambda_bar)


def edge_counts(tree: Tree, edge: Tuple[int, int]) -> Tuple[int, int]:
    """(alpha_e, alpha_bar_e) for an edge e = {u, v}.

    alpha_e = alpha(T1, u) * alpha(T2, v) where T1, T2 are the components
    of T - e; everything not containing e lives in one component.
    """
    u, v = edge
    e = (u, v) if u < v else (v, u)
    if e not in tree.edges:
        raise TreeError(f"{e} is not an edge of the tree")
    rc_u = rooted_counts(tree, u)
    rc_v = rooted_counts(tree, v)
    # rooted at u, down_count[v] counts subtrees of the v-side containing v
    alpha_e = rc_u.down_count[v] * rc_v.down_count[u]
    return alpha_e, rc_u.total_count - alpha_e


def good_anchor(tree: Tree, stats: Optional[SubtreeStats] = None) -> Optional[int]:
    """Smallest internal vertex v with 2*alpha(T,v) >= n*alpha_bar(T,v), if any.

    Falls back to scanning edges for 2*alpha(T,e) >= n*alpha_bar(T,e) and
    returning an internal endpoint.  Any returned vertex satisfies
    |mu(T) - lambda(T,v)| < 2.
    """
    if stats is None:
        stats = global_stats(tree)
    n, total = tree.n, stats.subtree_count
    for v in range(n):
        if tree.degree(v) >= 2 and 2 * stats.containment[v] >= n * (total - stats.containment[v]):
            return v
    for e in tree.edges:
        alpha_e, alpha_bar_e = edge_counts(tree, e)
        if 2 * alpha_e >= n * alpha_bar_e:
            for w in e:
                if tree.degree(w) >= 2:
                    return w
    return None
