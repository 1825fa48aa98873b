# -*- coding: utf-8 -*-
import logging
from dataclasses import dataclass
from math import exp, sqrt

from numpy import exp as np_exp
from numpy import arange, float64, full, int64, ones, power

from geocomm._typing import FloatArray, Int, IntArray, IntFloat, Optional
from geocomm.errors import InfeasibleError, InputError
from geocomm.graph import Network, common_neighbor_count, edge_lengths
from geocomm.locality import edge_similarities, mean_pair_distance
from geocomm.maps import Variant
from geocomm.utils import nb_community_null_mass, v_bool, v_node, v_variant

__all__ = [
    "WeightContext",
    "build_context",
    "connection_locality",
    "node_similarity",
    "total_null_mass",
]

logger = logging.getLogger(__name__)



@dataclass(frozen=True, eq=False)
class WeightContext:
    """Edge weights and null-model factors of one modularity variant.

    Every variant is evaluated in one form over ordered pairs ```vw```,
    self pairs included:

        Q = (1 / norm) * sum delta(c_v, c_w) * (A_vw e_vw - L_vw h_v h_w)

    ==========  ===========  ==================  =========
    variant     e_vw         h_v                 norm
    ==========  ===========  ==================  =========
    baseline    1            k_v / sqrt(2m)      2m
    locality    L_vw         k_v / sqrt(2m)      omega
    similarity  S_vw L_vw    sqrt(tau/2m) k^1.5  2 omega
    ==========  ===========  ==================  =========

    with ```L_vw = exp(-dis_vw / sigma)``` (1 for baseline). A calibrated
    context multiplies every ```h_v``` by ```sqrt(null_scale)```, where
    ```null_scale``` makes the null mass of the all-in-one partition equal
    its edge mass, so that partition scores exactly 0 as under baseline.

    Parameters:
        variant (Variant): Functional.
        sigma_km (float): Locality decay scale. 0 for baseline, and for
            degenerate networks whose nodes all coincide.
        omega (float): Ordered pair sum of ```A e```.
        tau (float): ```sum k_i^2 / 4m^2```
        m (int): Edge count.
        src, dst (IntArray): Edge endpoints, ```net.edge_arrays```.
        locality (FloatArray): Per edge L.
        similarity (FloatArray): Per edge S, or None outside similarity.
        edge_weight (FloatArray): Per edge e.
        h (FloatArray): Per node null-model factor.
        norm (float): Denominator of Q.
        null_scale (float): Null mass multiplier; 1 for the literal
            functional.
        calibrated (bool): Whether ```null_scale``` was fitted.
    """
    variant: Variant
    sigma_km: float
    omega: float
    tau: float
    m: int
    src: IntArray
    dst: IntArray
    locality: FloatArray
    similarity: Optional[FloatArray]
    edge_weight: FloatArray
    h: FloatArray
    norm: float
    geodesic: bool = False
    null_scale: float = 1.0
    calibrated: bool = False

    @property
    def n(self) -> int:
        return int(self.h.size)

    @property
    def constant_locality(self) -> bool:
        """L is identically 1: baseline, or every node at one location."""
        return self.variant is Variant.BASELINE or self.sigma_km == 0.0

    @property
    def inv_sigma(self) -> float:
        return 0.0 if self.constant_locality else 1.0 / self.sigma_km

    def require(self, variant: Variant) -> "WeightContext":
        if self.variant is not variant:
            raise InputError(
                f"weight context is '{self.variant.value}', "
                f"operation needs '{variant.value}'"
            )
        return self


def build_context(
    net: Network, variant: Variant = None, sigma_km: IntFloat = None,
    sample_size: Int = None, seed: Int = None, calibrated: bool = None
) -> WeightContext:
    """Build Weight Context

    Computes the per-edge weights and per-node null factors once, so the
    evaluators and the merge ledger share them.

    Parameters:
        net (Network): Network with ```m >= 1```
        variant (Variant): Default: ```"similarity"```
        sigma_km (float): Locality scale. Default: ```mean_pair_distance```
        sample_size (int): Pair budget for sigma. Default: ```2_000_000```
        seed (int): Pair sampling seed. Default: ```0```
        calibrated (bool): Rescale the null term so the all-in-one
            partition scores 0. Default: False

    Returns:
        (WeightContext)

    Raises:
        InputError: No edges, or a non-positive explicit ```sigma_km```.
        InfeasibleError: Similarity variant on a triangle-free graph
            (omega = 0).
    """
    variant = v_variant(variant)
    calibrated = v_bool(calibrated, False)
    if net.m < 1:
        raise InputError("modularity is undefined for a graph without edges")

    src, dst = net.edge_arrays
    k = net.degrees.astype(float64)
    m = net.m
    two_m = 2.0 * m
    tau = float((k * k).sum() / (two_m * two_m))

    if variant is Variant.BASELINE:
        sigma = 0.0
    elif sigma_km is not None:
        sigma = float(sigma_km)
        if not sigma > 0:
            raise InputError(f"sigma_km must be positive, got {sigma_km}")
    else:
        sigma = mean_pair_distance(net, sample_size, seed)

    if sigma > 0:
        locality = np_exp(-edge_lengths(net) / sigma)
    else:
        if variant is not Variant.BASELINE:
            logger.warning("[!] sigma is 0: using constant connection locality L=1")
        locality = ones(m, dtype=float64)

    similarity = None
    if variant is Variant.SIMILARITY:
        similarity = edge_similarities(net)
        edge_weight = similarity * locality
        omega = 2.0 * float(edge_weight.sum())
        if omega <= 0.0:
            raise InfeasibleError(
                "similarity modularity is undefined: no edge closes a triangle "
                "(omega = 0); use --variant locality instead"
            )
        h = sqrt(tau / two_m) * power(k, 1.5)
        norm = 2.0 * omega
    else:
        edge_weight = ones(m, dtype=float64) if variant is Variant.BASELINE else locality
        omega = 2.0 * float(edge_weight.sum())
        h = k / sqrt(two_m)
        norm = omega

    null_scale = 1.0
    if calibrated:
        null_scale = omega / total_null_mass(net, h, sigma)
        h = h * sqrt(null_scale)
        logger.info("[+] calibrated null: scale %.6g", null_scale)

    for arr in (locality, edge_weight, h):
        arr.setflags(write=False)
    if similarity is not None:
        similarity.setflags(write=False)

    ctx = WeightContext(
        variant=variant, sigma_km=sigma, omega=omega, tau=tau, m=m,
        src=src, dst=dst, locality=locality, similarity=similarity,
        edge_weight=edge_weight, h=h, norm=norm, geodesic=net.geodesic,
        null_scale=null_scale, calibrated=calibrated,
    )
    logger.debug("weight context: variant=%s sigma=%.6g omega=%.6g tau=%.6g",
        variant.value, sigma, omega, tau)
    return ctx


def connection_locality(ctx: WeightContext, dis: IntFloat) -> float:
    """Connection Locality

    ```L = exp(-dis / sigma)```, strictly decreasing in ```dis``` with
    values in (0, 1]. Identically 1 when the context has constant
    locality (baseline, or all nodes coincident).

    Raises:
        InputError: Negative distance.
    """
    dis = float(dis)
    if dis < 0:
        raise InputError(f"distance must be non-negative, got {dis}")
    if ctx.constant_locality:
        return 1.0
    return exp(-dis / ctx.sigma_km)


def total_null_mass(net: Network, h: FloatArray, sigma_km: float) -> float:
    """Ordered pair sum of ```L_vw h_v h_w``` over all node pairs, self
    pairs included: the null mass of the all-in-one partition."""
    if not sigma_km > 0:
        return float(h.sum()) ** 2
    n = net.n
    per_node = nb_community_null_mass(
        net.xy, h, arange(n, dtype=int64), full(n, n, dtype=int64),
        1.0 / sigma_km, net.geodesic
    )
    return float(per_node.sum())


def node_similarity(net: Network, v: int, w: int) -> float:
    """Common neighbours over the geometric mean of the two degrees."""
    v, w = v_node(v, net.n), v_node(w, net.n)
    kv, kw = int(net.degrees[v]), int(net.degrees[w])
    if kv == 0 or kw == 0:
        raise InputError(f"node similarity needs non-isolated nodes ({v}, {w})")
    return common_neighbor_count(net, v, w) / sqrt(kv * kw)
