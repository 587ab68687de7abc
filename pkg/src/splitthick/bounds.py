"""Closed forms and edge-count bounds on planar split thickness.

Everything here is exact integer arithmetic. The bipartite bounds all go
through one quadratic test, ``m*(d-m) <= 2*k*d - 4``: a k-split of
K_{m,d-m} has at most k*d vertices and is planar bipartite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .planarity import is_planar


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def lb_euler(g: Graph) -> int:
    """Smallest k with |E| <= 3k|V| - 6 (2k|V| - 4 when g is bipartite)."""
    if g.n < 3:
        return 1
    if g.bipartition() is not None:
        return max(1, _ceil_div(g.m + 4, 2 * g.n))
    return max(1, _ceil_div(g.m + 6, 3 * g.n))


def complete_thickness(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n <= 4:
        return 1
    if n <= 12:
        return 2
    return _ceil_div(n, 6)


def bipartite_2splittable(m: int, n: int) -> bool:
    return m * n <= 4 * (m + n) - 4


def bipartite_lb(m: int, n: int) -> int:
    """Least k not excluded for K_{m,n} by the bipartite edge count."""
    if m + n < 3:
        return 1
    return max(1, _ceil_div(m * n + 4, 2 * (m + n)))


def eq2_feasible(m: int, d: int, k: int) -> bool:
    """Whether K_{m,d-m} passes the edge-count test for a planar k-split."""
    if not 1 <= m < d:
        raise ValueError(f"need 1 <= m < d, got m={m}, d={d}")
    return m * (d - m) <= 2 * k * d - 4


def eq2_max_partner(m: int, k: int) -> int | None:
    """Largest n >= 1 with K_{m,n} passing the k-split edge test; None when unbounded."""
    if m <= 2 * k:
        return None
    # m*n <= 2k(m+n) - 4  <=>  n*(m - 2k) <= 2km - 4
    return (2 * k * m - 4) // (m - 2 * k)


def complete_bipartite_parts(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """The two sides if g is K_{a,b} with a, b >= 1, else None."""
    parts = g.bipartition()
    if parts is None or not parts[0] or not parts[1]:
        return None
    a, b = parts
    return (a, b) if g.m == len(a) * len(b) else None


def is_complete(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n * (g.n - 1) // 2


@dataclass
class ThicknessBounds:
    lower: int = 1
    upper: int | None = None
    lower_reasons: list[str] = field(default_factory=list)
    upper_reasons: list[str] = field(default_factory=list)

    @property
    def reasons(self) -> list[str]:
        return sorted(set(self.lower_reasons) | set(self.upper_reasons))

    def format(self) -> str:
        up = "?" if self.upper is None else str(self.upper)
        up_tags = f" ({','.join(self.upper_reasons)})" if self.upper_reasons else ""
        return f"lower {self.lower} ({','.join(self.lower_reasons)}) upper {up}{up_tags}"


def _pick(candidates: list[tuple[int, str]], best) -> tuple[int, list[str]]:
    value = best(v for v, _ in candidates)
    return value, [tag for v, tag in candidates if v == value]


def bounds_report(g: Graph) -> ThicknessBounds:
    """Aggregate lower bounds and family upper bounds for ``g``.

    The planarity test is only consulted when the counting bounds leave
    the lower bound at 1.
    """
    lows: list[tuple[int, str]] = []
    ups: list[tuple[int, str]] = []

    parts = complete_bipartite_parts(g)
    lows.append((lb_euler(g), "bipartite-euler" if g.bipartition() is not None and g.n >= 3 else "euler"))

    if is_complete(g) and g.n >= 1:
        t = complete_thickness(g.n)
        lows.append((t, "theorem1"))
        ups.append((t, "theorem1"))

    if parts is not None:
        m, n = sorted((len(parts[0]), len(parts[1])))
        lows.append((bipartite_lb(m, n), "prop8"))
        if m == n and m >= 4:
            lows.append((m // 4 + 1, "prop9"))
        if m % 2 == 1 and m >= 3:
            k = (m - 1) // 2
            if n >= 4 * k * k + 2 * k - 3:
                lows.append((k + 1, "prop10"))
        if bipartite_2splittable(m, n):
            ups.append((2, "theorem5"))
        else:
            lows.append((3, "theorem5"))
        ups.append(((m + 1) // 2, "prop11"))

    if g.m:
        ups.append(((g.max_degree() + 1) // 2, "degree"))
    else:
        ups.append((1, "degree"))

    lower, lower_tags = _pick(lows, max)
    if lower == 1:
        if is_planar(g):
            ups.append((1, "planarity"))
        else:
            lower, lower_tags = 2, ["planarity"]
    upper, upper_tags = _pick(ups, min)
    return ThicknessBounds(lower, upper, lower_tags, upper_tags)
