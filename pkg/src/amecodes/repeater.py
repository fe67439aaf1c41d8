"""One-way repeater performance: success probability, rate, cost factors.

A chain of r elementary links, each of length L0 = L_tot / r, carries
codewords of an [[n,k,d]]_q code, one photon per physical qudit.  Per
link, a qudit survives with probability eta_c * exp(-L0/L_att), and a
distance-d code corrects up to d-1 erasures, so

    P_success = sum_{j=0}^{d-1} C(n,j) p_l^j (1-p_l)^(n-j),
    R * t0    = k * log2(q) * P_success^r.

Cost coefficients, each minimized over the link length,

    C_ST = min_L0  n log2(q) / (L0 R t0)     (hardware, short term)
    C_LT = min_L0  n q / (L0 R t0)           (per-photon, long term)

share their argmin (the numerators differ by a constant factor) and are
independent of t0 since R carries 1/t0.  The L0 grid is the physically
meaningful one: integer link counts r = 1..floor(L_tot / 0.1 km).  All
kernels are stateless and deterministic; sweeps vectorize over r.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .codes import CodeParams
from .errors import DomainError

MIN_LINK_KM = 0.1


@dataclass(frozen=True)
class ChannelParams:
    """Channel and station constants.

    l_att: fiber attenuation length in km.  eta_c: in-and-out coupling
    efficiency.  t0: local operation time in arbitrary units; rates are
    reported as R*t0, and both cost factors are t0-free.
    """

    l_att: float = 20.0
    eta_c: float = 1.0
    t0: float = 1.0

    def __post_init__(self):
        if self.l_att <= 0:
            raise DomainError(f"l_att must be positive, got {self.l_att}")
        if not 0.0 <= self.eta_c <= 1.0:
            raise DomainError(f"eta_c must lie in [0,1], got {self.eta_c}")
        if self.t0 <= 0:
            raise DomainError(f"t0 must be positive, got {self.t0}")


@dataclass(frozen=True)
class LinkPlan:
    """A total distance split into an integer number of equal links."""

    l_tot: float
    links: int

    def __post_init__(self):
        if self.links < 1:
            raise DomainError(f"need at least one link, got {self.links}")
        if self.l_tot <= 0:
            raise DomainError(f"total distance must be positive, got {self.l_tot}")

    @property
    def l0(self) -> float:
        return self.l_tot / self.links


@dataclass(frozen=True)
class CostReport:
    """Cost evaluation of one (code, total-distance) pair at the optimal
    link length (shared by C_ST and C_LT)."""

    code: CodeParams
    l_tot: float
    p_success: float
    rate_t0: float
    c_st: float
    c_lt: float
    plan: LinkPlan


def loss_probability(l0: float, ch: ChannelParams) -> float:
    """Probability of losing one photon over a link: 1 - eta_c e^(-L0/L_att)."""
    if l0 < 0:
        raise DomainError(f"link length must be nonnegative, got {l0}")
    return 1.0 - ch.eta_c * math.exp(-l0 / ch.l_att)


def p_success(code: CodeParams, p_loss: float) -> float:
    """Per-link probability that at most d-1 of the n photons are lost.

    Exact binomial coefficients, compensated summation.
    """
    if not 0.0 <= p_loss <= 1.0:
        raise DomainError(f"loss probability must lie in [0,1], got {p_loss}")
    terms = [
        math.comb(code.n, j) * p_loss**j * (1.0 - p_loss) ** (code.n - j)
        for j in range(min(code.d - 1, code.n) + 1)
    ]
    return min(math.fsum(terms), 1.0)


def rate(code: CodeParams, plan: LinkPlan, ch: ChannelParams) -> float:
    """Transferred qubits per t0: k * log2(q) * P_success^r."""
    ps = p_success(code, loss_probability(plan.l0, ch))
    return code.k * math.log2(code.q) * ps**plan.links


def _p_success_grid(code: CodeParams, p_loss: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(p_loss)
    for j in range(min(code.d - 1, code.n) + 1):
        acc = acc + math.comb(code.n, j) * p_loss**j * (1.0 - p_loss) ** (code.n - j)
    return np.minimum(acc, 1.0)


def link_grid(l_tot: float) -> np.ndarray:
    """Integer link counts 1..floor(L_tot / 0.1 km)."""
    if l_tot <= 0:
        raise DomainError(f"total distance must be positive, got {l_tot}")
    r_max = max(1, int(l_tot / MIN_LINK_KM))
    return np.arange(1, r_max + 1)


def _cost_curve(code: CodeParams, l_tot: float, ch: ChannelParams, numerator: float):
    """numerator / (L0 * R * t0) over the integer-r grid; t0 cancels."""
    r = link_grid(l_tot)
    l0 = l_tot / r
    p_l = 1.0 - ch.eta_c * np.exp(-l0 / ch.l_att)
    ps = _p_success_grid(code, p_l)
    rt0 = code.k * math.log2(code.q) * ps**r
    with np.errstate(divide="ignore", over="ignore"):
        cost = numerator / (l0 * rt0)
    return r, cost

def cost_short_term(code: CodeParams, l_tot: float, ch: ChannelParams) -> tuple[float, LinkPlan]:
    """Minimized hardware cost factor n log2(q) / (L0 R t0) and its argmin."""
    if code.k == 0:
        raise DomainError("cost factors need k >= 1 (no information transmitted)")
    r, cost = _cost_curve(code, l_tot, ch, code.n * math.log2(code.q))
    i = int(np.argmin(cost))
    return float(cost[i]), LinkPlan(l_tot, int(r[i]))


def cost_long_term(code: CodeParams, l_tot: float, ch: ChannelParams) -> tuple[float, LinkPlan]:
    """Minimized running cost factor n q / (L0 R t0) and its argmin."""
    if code.k == 0:
        raise DomainError("cost factors need k >= 1 (no information transmitted)")
    r, cost = _cost_curve(code, l_tot, ch, code.n * code.q)
    i = int(np.argmin(cost))
    return float(cost[i]), LinkPlan(l_tot, int(r[i]))


def cost_report(code: CodeParams, l_tot: float, ch: ChannelParams) -> CostReport:
    c_st, plan = cost_short_term(code, l_tot, ch)
    c_lt, _ = cost_long_term(code, l_tot, ch)
    ps = p_success(code, loss_probability(plan.l0, ch))
    return CostReport(code, l_tot, ps, rate(code, plan, ch), c_st, c_lt, plan)


def children_params(n: int, q: int) -> list[CodeParams]:
    """Parameters of the child family of an AME(n,q):
    [[n-k, k, floor(n/2)+1-k]]_q for k = 1..floor(n/2)-1."""
    return [
        CodeParams(n - k, k, n // 2 + 1 - k, q) for k in range(1, n // 2)
    ]


def optimal_k(n: int, q: int, l_tot: float, ch: ChannelParams) -> int:
    """The child k minimizing C_LT at the given distance; ties pick smaller k."""
    kids = children_params(n, q)
    if not kids:
        raise DomainError(f"AME({n},{q}) has no children with distance >= 2")
    best_k, best_c = None, None
    for code in kids:
        c, _ = cost_long_term(code, l_tot, ch)
        if best_c is None or c < best_c:
            best_k, best_c = code.k, c
    return best_k


def optimal_k_table(
    cells: list[tuple[int, int, str]],
    distances: list[float],
    ch: ChannelParams | None = None,
) -> dict[tuple[int, int], list[str]]:
    """Argmin-k per distance for each (n, q, existence) cell.

    Cells marked ``exists`` get the computed optimal k; ``not-exists``
    and ``unknown`` pass through as '-' and '?' markers.  Output order
    is deterministic in (n, q, distance).
    """
    ch = ch or ChannelParams()
    out: dict[tuple[int, int], list[str]] = {}
    for n, q, existence in sorted(cells):
        if existence == "exists":
            out[(n, q)] = [str(optimal_k(n, q, d, ch)) for d in distances]
        elif existence == "not-exists":
            out[(n, q)] = ["-"] * len(distances)
        elif existence == "unknown":
            out[(n, q)] = ["?"] * len(distances)
        else:
            raise DomainError(f"unknown existence marker {existence!r}")
    return out


def figure_rows(
    codes: list[CodeParams],
    l_tots: list[float],
    ch: ChannelParams | None = None,
    rate_l0: float = 1.0,
) -> list[dict]:
    """Figure data: per (L_tot, code), the rate at fixed L0 and the
    optimized short-term cost.  Keys double as the CSV header."""
    ch = ch or ChannelParams()
    rows = []
    for l_tot in l_tots:
        for code in codes:
            links = max(1, round(l_tot / rate_l0))
            # fixed-L0 mode uses exactly L0 = rate_l0 over l_tot/rate_l0 links
            r_fixed = rate(code, LinkPlan(links * rate_l0, links), ch)
            c_st, plan = cost_short_term(code, l_tot, ch)
            rows.append(
                {
                    "ltot_km": l_tot,
                    "code": code.label(),
                    "rate_t0_fixed_l0": r_fixed,
                    "c_st": c_st,
                    "opt_l0_km": plan.l0,
                }
            )
    return rows
