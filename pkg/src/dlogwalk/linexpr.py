"""Symbolic exponent tracking and the collision congruence.

While the walk transforms a group element it transforms the element's
unknown discrete log n alongside, as the exact rational m = (A*n + B) / 2^k.
A and B stay exact signed integers; k counts halvings.  Reducing mod the
group order must wait until the collision is solved, because 2 is not
invertible mod p - 1: clearing the denominator by multiplying with 2^K is
what makes the square-root sign ambiguity vanish.
"""

from dataclasses import dataclass
from math import gcd

from .primefield import mod_inverse


class NoSolutionError(ValueError):
    """gcd(coef, N) does not divide the right-hand side: spurious collision."""


class DegenerateCollisionError(ValueError):
    """Both sides of the collision congruence vanish identically (self-collision)."""


class TooManyCandidatesError(ValueError):
    """Solution count d exceeds the configured trial-verification budget."""

    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} candidate solutions exceed limit {limit}")
        self.count = count
        self.limit = limit


@dataclass(frozen=True)
class LinExpr:
    """The walk exponent m = (A*n + B) / 2^k as a function of the unknown n."""

    A: int = 1
    B: int = 0
    k: int = 0

    def dec(self) -> "LinExpr":
        """m - 1: subtracting 1 from (A*n + B)/2^k lowers B by 2^k."""
        return LinExpr(self.A, self.B - (1 << self.k), self.k)

    def halve(self) -> "LinExpr":
        """m / 2: one more halving."""
        return LinExpr(self.A, self.B, self.k + 1)

    def triple_plus_one(self) -> "LinExpr":
        """3m + 1: triples A and B, and folds the +1 into B as 2^k."""
        return LinExpr(3 * self.A, 3 * self.B + (1 << self.k), self.k)

    def constant(self) -> bool:
        return self.A == 0

    def __str__(self):
        if self.A == 0:
            num = str(self.B)
        else:
            num = {1: "n", -1: "-n"}.get(self.A, f"{self.A}n")
            if self.B > 0:
                num += f"+{self.B}"
            elif self.B < 0:
                num += str(self.B)
        if self.k == 0:
            return num
        if self.A != 0 and self.B != 0:
            num = f"({num})"
        return f"{num}/{1 << self.k}"


@dataclass(frozen=True)
class CongruenceSolution:
    """Solutions of a linear congruence mod the group order N.

    The full solution set is {residue + t*modulus : 0 <= t < count} mod N,
    with modulus = N / count.
    """

    residue: int
    modulus: int
    count: int


def solve_linear(coef: int, rhs: int, order: int) -> CongruenceSolution:
    """Solve coef * n = rhs (mod order).

    With d = gcd(coef, order) there are d solutions when d divides rhs,
    spaced order/d apart; otherwise none (NoSolutionError).
    """
    if order < 1:
        raise ValueError("order must be positive")
    coef %= order
    rhs %= order
    d = gcd(coef, order)  # gcd(0, order) == order: coef vanishing means d = N
    if rhs % d != 0:
        raise NoSolutionError(f"{coef}*n = {rhs} mod {order} has no solution")
    modulus = order // d
    if modulus == 1:
        return CongruenceSolution(0, 1, d)
    residue = rhs // d * mod_inverse(coef // d, modulus) % modulus
    return CongruenceSolution(residue, modulus, d)


def collision_solve(e1: LinExpr, e2: LinExpr, order: int) -> CongruenceSolution:
    """Solve the congruence arising from two expressions for the same exponent.

    Both sides are scaled by 2^(K - k_i), K = max(k1, k2), which clears the
    denominators exactly and absorbs the +-(order/2) root ambiguity: the
    invariant 2^k * exponent = A*n + B (mod order) holds for whichever root
    the walk took.  Resulting congruence:

        (2^(K-k1)*A1 - 2^(K-k2)*A2) * n  =  2^(K-k2)*B2 - 2^(K-k1)*B1  (mod order)
    """
    big_k = max(e1.k, e2.k)
    m1 = 1 << (big_k - e1.k)
    m2 = 1 << (big_k - e2.k)
    coef = m1 * e1.A - m2 * e2.A
    rhs = m2 * e2.B - m1 * e1.B
    if coef == 0 and rhs == 0:
        raise DegenerateCollisionError("expressions are identical up to scaling")
    return solve_linear(coef, rhs, order)


def enumerate_candidates(sol: CongruenceSolution, order: int,
                         d_max: int = 65536) -> list[int]:
    """All d solutions mod the group order, ascending.

    Raises TooManyCandidatesError past d_max so the caller can restart the
    walk instead of grinding through trial verification.
    """
    if sol.count > d_max:
        raise TooManyCandidatesError(sol.count, d_max)
    return sorted((sol.residue + t * sol.modulus) % order for t in range(sol.count))
