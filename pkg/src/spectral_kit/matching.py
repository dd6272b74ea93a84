"""Bipartite matchings between two disjoint vertex sets of a host graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits, to_mask


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]  # (left, right), sorted by left vertex

    @property
    def covered(self) -> frozenset[int]:
        return frozenset(v for p in self.pairs for v in p)

    def __len__(self) -> int:
        return len(self.pairs)


def _sides(left: Iterable[int], right: Iterable[int]) -> tuple[list[int], int]:
    left = sorted(set(left))
    rmask = to_mask(right)
    if to_mask(left) & rmask:
        raise ValueError("left and right vertex sets overlap")
    return left, rmask


def _augment(g: Graph, u: int, rmask: int, match_r: dict[int, int], seen: set[int]) -> bool:
    for w in bits(g.adj[u] & rmask):
        if w in seen:
            continue
        seen.add(w)
        if w not in match_r or _augment(g, match_r[w], rmask, match_r, seen):
            match_r[w] = u
            return True
    return False


def _max_matching(g: Graph, left: list[int], rmask: int) -> dict[int, int]:
    match_r: dict[int, int] = {}
    for u in left:
        _augment(g, u, rmask, match_r, set())
    return match_r


def max_bipartite_matching(g: Graph, left: Iterable[int], right: Iterable[int]) -> Matching:
    """Maximum matching using only left-right edges (Kuhn's augmenting paths)."""
    left, rmask = _sides(left, right)
    match_r = _max_matching(g, left, rmask)
    return Matching(tuple(sorted((u, w) for w, u in match_r.items())))


def hall_violator(g: Graph, left: Iterable[int], right: Iterable[int]) -> frozenset[int] | None:
    """A set S of left vertices with |N(S) & right| < |S|, or None when a
    left-saturating matching exists.

    S is the left half of the alternating-reachability set grown from the
    lowest unmatched left vertex of a maximum matching.
    """
    left, rmask = _sides(left, right)
    match_r = _max_matching(g, left, rmask)
    matched_left = set(match_r.values())
    free = [u for u in left if u not in matched_left]
    if not free:
        return None
    s = {free[0]}
    queue = deque([free[0]])
    reached_r: set[int] = set()
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u] & rmask):
            if w in reached_r:
                continue
            reached_r.add(w)
            # w must be matched, else the matching was not maximum
            partner = match_r[w]
            if partner not in s:
                s.add(partner)
                queue.append(partner)
    return frozenset(s)


def _validate(g: Graph, m: Matching, left: list[int], rmask: int) -> None:
    lmask = to_mask(left)
    seen: set[int] = set()
    for u, w in m.pairs:
        if not (lmask >> u & 1 and rmask >> w & 1):
            raise ValueError(f"pair ({u}, {w}) is not a left-right pair")
        if not g.has_edge(u, w):
            raise ValueError(f"pair ({u}, {w}) is not an edge")
        if u in seen or w in seen:
            raise ValueError(f"pairs share vertex in ({u}, {w})")
        seen.update((u, w))


def has_augmenting_path(g: Graph, m: Matching, left: Iterable[int], right: Iterable[int]) -> bool:
    left, rmask = _sides(left, right)
    _validate(g, m, left, rmask)
    match_l = dict(m.pairs)
    match_r = {w: u for u, w in m.pairs}
    queue = deque(u for u in left if u not in match_l)
    seen_l = set(queue)
    seen_r: set[int] = set()
    while queue:
        u = queue.popleft()
        for w in bits(g.adj[u] & rmask):
            if w in seen_r or match_l.get(u) == w:
                continue
            seen_r.add(w)
            if w not in match_r:
                return True
            nxt = match_r[w]
            if nxt not in seen_l:
                seen_l.add(nxt)
                queue.append(nxt)
    return False


def is_maximum(g: Graph, m: Matching, left: Iterable[int], right: Iterable[int]) -> bool:
    """Maximality by the absence of an M-augmenting path."""
    return not has_augmenting_path(g, m, left, right)


def greedy_matching(g: Graph, left: Iterable[int], right: Iterable[int]) -> Matching:
    left, rmask = _sides(left, right)
    used = 0
    pairs = []
    for u in left:
        avail = g.adj[u] & rmask & ~used
        if avail:
            w = (avail & -avail).bit_length() - 1
            used |= 1 << w
            pairs.append((u, w))
    return Matching(tuple(pairs))


def sign_crossing_matching(g: Graph, sp, k: int) -> Matching | None:
    """A maximum V+/V- matching if it has at least ``k`` edges, else None."""
    m = max_bipartite_matching(g, sp.v_plus, sp.v_minus)
    return m if len(m) >= k else None
