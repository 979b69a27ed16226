"""Independent discrete-log solvers used as correctness oracles and baselines."""

import math
from dataclasses import dataclass

from .gf2m import GENERATOR, BinaryFieldParams, gf_mul, gf_pow
from .primefield import PrimeGroupParams, mod_inverse, mod_pow

BRUTE_FORCE_LIMIT = 10**7


@dataclass(frozen=True)
class OracleResult:
    n: int
    method: str


def _group(params):
    """(order, generator, mul, pow) for either field kind."""
    if isinstance(params, PrimeGroupParams):
        return (params.order, params.a,
                lambda u, v: u * v % params.p,
                lambda u, e: mod_pow(u, e, params))
    if isinstance(params, BinaryFieldParams):
        return (params.order, GENERATOR,
                lambda u, v: gf_mul(u, v, params),
                lambda u, e: gf_pow(u, e, params))
    raise TypeError(f"unsupported params type {type(params).__name__}")


def brute_force_dlog(params, target: int) -> OracleResult:
    """Scan e = 0, 1, 2, ... accumulating generator powers until the target appears."""
    order, gen, mul, _ = _group(params)
    if order > BRUTE_FORCE_LIMIT:
        raise ValueError(f"group order {order} too large for brute force")
    acc = 1
    for e in range(order):
        if acc == target:
            return OracleResult(e, "brute")
        acc = mul(acc, gen)
    raise ValueError(f"{target} is not a power of the generator")


def bsgs_dlog(params, target: int) -> OracleResult:
    """Baby-step giant-step: n = i*m + j from a table of m = ceil(sqrt(N)) baby steps."""
    order, gen, mul, powf = _group(params)
    m = math.isqrt(order - 1) + 1 if order > 1 else 1
    baby = {}
    acc = 1
    for j in range(m):
        baby.setdefault(acc, j)
        acc = mul(acc, gen)
    # giant stride generator^(-m); the group has order N, so gen^-1 = gen^(N-1)
    if isinstance(params, PrimeGroupParams):
        stride = mod_pow(mod_inverse(params.a, params.p), m, params)
    else:
        stride = gf_pow(powf(gen, order - 1), m, params)
    cur = target
    for i in range(m + 1):
        j = baby.get(cur)
        if j is not None:
            return OracleResult((i * m + j) % order, "bsgs")
        cur = mul(cur, stride)
    raise ValueError(f"{target} is not a power of the generator")
