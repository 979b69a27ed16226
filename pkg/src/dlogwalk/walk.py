"""Random-walk discrete-log solver: the inverse of square-and-multiply.

Three walk variants share one engine.  Over a prime field, a step either
divides by the generator (Legendre symbol -1: the exponent is odd, so peel
one off) or takes a square root (symbol +1: halve the exponent), choosing
one of the two roots at random.  The 3x+1 variant replaces division by
b <- b^3 * a.  Over GF(2^m) square roots are unique, so a random bit decides
the branch instead.

Every visited value is stored with its symbolic exponent (a LinExpr in the
unknown n).  Three lookup structures drive collision detection:

* Table I   - precomputed generator powers (exponent known exactly),
* Table II  - division-step history (single value per entry),
* Table III - square-root history (both roots share one entry and one expr).

Tables II and III live in a single hash map from value to entry index; the
control bit on the entry keeps the two meanings apart.  A collision yields a
linear congruence for n whose solutions are verified by exponentiation; the
first verified candidate wins.  If a congruence has too many solutions or a
walk exhausts its step budget, the walk restarts from a stored square-root
entry on the branch it did not take (then from scratch once those are used
up).  Walks are sequential internally, but any number may run concurrently
over a shared read-only Table I; nothing here touches global state.
"""

import math
import random
import threading
from dataclasses import dataclass, replace

from .gf2m import GENERATOR, BinaryFieldParams, gf_div_by_x, gf_pow, gf_sqrt
from .linexpr import (CongruenceSolution, DegenerateCollisionError, LinExpr,
                      NoSolutionError, TooManyCandidatesError, collision_solve,
                      enumerate_candidates)
from .primefield import PrimeGroupParams, legendre, mod_inverse, mod_pow, sqrt_mod_p

VARIANTS = ("inverse", "collatz", "char2")
SEQUENCES = ("pow2", "consec")


class DecisionsExhaustedError(RuntimeError):
    """A scripted choice list ran out before the walk finished."""


class UnsupportedGroupError(ValueError):
    """Group/variant combination violates a precondition (e.g. 3 | p-1 for 3x+1)."""


class ScriptedDecisions:
    """Replays a fixed bit list; raises once exhausted."""

    def __init__(self, bits):
        self._bits = list(bits)
        self._pos = 0
        for b in self._bits:
            if b not in (0, 1):
                raise ValueError(f"scripted choices must be bits, got {b!r}")

    def next_bit(self) -> int:
        if self._pos >= len(self._bits):
            raise DecisionsExhaustedError(
                f"scripted choices exhausted after {self._pos} decisions")
        b = self._bits[self._pos]
        self._pos += 1
        return b


class RandomDecisions:
    def __init__(self, rng: random.Random):
        self._rng = rng

    def next_bit(self) -> int:
        return self._rng.getrandbits(1)


@dataclass
class WalkConfig:
    """Tunables for one solver run.

    `seed` and `choices` are mutually exclusive: a seed drives a PRNG, a
    choice list scripts every random decision (for replaying known walks).
    Unset sizes fall back to order-dependent defaults at run time.
    """

    variant: str = "inverse"
    table_size: int | None = None
    sequence: str = "pow2"
    max_steps: int | None = None
    max_restarts: int = 32
    d_max: int = 65536
    seed: int | None = None
    choices: list[int] | None = None
    trace: bool = False

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.sequence not in SEQUENCES:
            raise ValueError(f"unknown sequence kind {self.sequence!r}")
        if self.seed is not None and self.choices is not None:
            raise ValueError("seed and scripted choices are mutually exclusive")
        if self.max_steps is not None and self.max_steps < 1:
            raise ValueError("max_steps must be >= 1")
        if self.table_size is not None and self.table_size < 0:
            raise ValueError("table_size must be >= 0")


@dataclass
class WalkEntry:
    """One stored walk value: Table II rows have no partner, Table III rows do.

    For square-root entries `value` is the root the walk continued from and
    `partner` the untaken one, which restarts resume from.
    """

    value: int
    partner: int | None
    expr: LinExpr
    control_bit: int


@dataclass
class PrecomputedTable:
    """Table I: generator powers with exactly known exponents."""

    entries: dict[int, int]
    size: int
    sequence: str


@dataclass
class TraceRecord:
    index: int
    segment: int
    value: int
    branch: str  # "div", "cube" or "sqrt"
    result: int | None
    roots: tuple[int, int] | None
    chosen: int | None
    decision: int | None
    expr: LinExpr
    control_bit: int


@dataclass
class DlogResult:
    """Outcome of a solver run; n is None when every restart budget ran out."""

    n: int | None
    steps_taken: int = 0
    restarts: int = 0
    collisions_tested: int = 0
    candidates_tried: int = 0
    congruence: CongruenceSolution | None = None
    candidates: list[int] | None = None
    trace: list[TraceRecord] | None = None
    cancelled: bool = False

    @property
    def success(self) -> bool:
        return self.n is not None


def default_max_steps(order: int) -> int:
    # generous multiple of the O(sqrt N) expectation
    return math.ceil(20 * math.sqrt(order))


def default_table_size(order: int) -> int:
    return order.bit_length()


def build_table_one(params, config: WalkConfig) -> PrecomputedTable:
    """Precompute (generator^k_j, k_j) pairs.

    pow2 uses k_j = 2^j, consec uses k_j = j + 1, for j < B.  If two
    exponents produce the same value the smaller exponent is kept.
    """
    size = config.table_size
    if size is None:
        size = default_table_size(_group_order(params))
    entries: dict[int, int] = {}
    for j in range(size):
        k = (1 << j) if config.sequence == "pow2" else j + 1
        value = _generator_pow(params, k)
        entries.setdefault(value, k)
    return PrecomputedTable(entries, size, config.sequence)


def _group_order(params) -> int:
    return params.order


def _generator_pow(params, e: int) -> int:
    if isinstance(params, PrimeGroupParams):
        return mod_pow(params.a, e, params)
    return gf_pow(GENERATOR, e, params)


class _Solved(Exception):
    """Internal: unwinds the step loop once a candidate verifies."""

    def __init__(self, result: DlogResult):
        self.result = result


class _RestartSignal(Exception):
    """Internal: too many candidates; apply the restart policy."""


class _Walk:
    def __init__(self, params, target, config: WalkConfig,
                 table: PrecomputedTable | None, stop: threading.Event | None):
        self.params = params
        self.config = config
        self.stop = stop
        self.order = _group_order(params)
        self.prime_like = config.variant in ("inverse", "collatz")

        if self.prime_like:
            if not isinstance(params, PrimeGroupParams):
                raise TypeError(f"variant {config.variant!r} needs PrimeGroupParams")
            target %= params.p
            if target == 0:
                raise ValueError("target must be a nonzero element mod p")
            self.inv_a = mod_inverse(params.a, params.p)
            if config.variant == "collatz" and math.gcd(3, self.order) != 1:
                raise UnsupportedGroupError(
                    f"3x+1 variant needs gcd(3, p-1) = 1; p-1 = {self.order}")
        else:
            if not isinstance(params, BinaryFieldParams):
                raise TypeError("char2 variant needs BinaryFieldParams")
            if not params.generator_is_x:
                raise UnsupportedGroupError("char2 walk requires x as group generator")
            if target == 0 or target.bit_length() > params.m:
                raise ValueError("target must be a nonzero field element")

        self.target = target
        self.table = table if table is not None else build_table_one(params, config)
        self.max_steps = config.max_steps or default_max_steps(self.order)
        self.rng = random.Random(config.seed if config.seed is not None else 0)
        if config.choices is not None:
            self.decisions = ScriptedDecisions(config.choices)
        else:
            self.decisions = RandomDecisions(self.rng)

        self.entries: list[WalkEntry] = []
        self.index: dict[int, int] = {}
        self.value = target
        self.expr = LinExpr()
        self.segment = 0
        self.steps_taken = 0
        self.restarts = 0
        self.mid_restarts = 0
        self.collisions_tested = 0
        self.candidates_tried = 0
        self.trace: list[TraceRecord] | None = [] if config.trace else None

    def run(self) -> DlogResult:
        hit = self.table.entries.get(self.target)
        if hit is not None:
            n = hit % self.order
            if self._verify(n):
                return self._result(n, CongruenceSolution(n, self.order, 1), [n])
        self._store(WalkEntry(self.target, None, LinExpr(), 0))
        try:
            while True:
                try:
                    self._run_segment()
                except _RestartSignal:
                    pass
                if self.stop is not None and self.stop.is_set():
                    return self._result(None, cancelled=True)
                self.restarts += 1
                if self.restarts > self.config.max_restarts:
                    return self._result(None)
                self._restart()
        except _Solved as s:
            return s.result

    # -- segment / restart management ------------------------------------

    def _run_segment(self):
        steps_left = self.max_steps
        while steps_left > 0:
            if self.stop is not None and self.stop.is_set():
                return
            self.steps_taken += 1
            steps_left -= 1
            if self.prime_like:
                self._step_prime()
            else:
                self._step_char2()
        raise _RestartSignal  # budget exhausted

    def _restart(self):
        if self.mid_restarts < self.config.max_restarts // 2:
            if self.prime_like:
                pairs = [e for e in self.entries if e.partner is not None]
            else:
                pairs = [e for e in self.entries if e.control_bit == 1]
            if pairs:
                entry = pairs[self.rng.randrange(len(pairs))]
                self.value = entry.partner if entry.partner is not None else entry.value
                self.expr = entry.expr
                self.mid_restarts += 1
                self.segment += 1
                return
        # fresh walk from the target; Table I survives, history does not
        self.entries.clear()
        self.index.clear()
        self.value = self.target
        self.expr = LinExpr()
        self.segment += 1
        self._store(WalkEntry(self.target, None, LinExpr(), 0))

    # -- steps -------------------------------------------------------------

    def _step_prime(self):
        value, expr = self.value, self.expr
        p = self.params.p
        if legendre(value, self.params) == -1:
            if self.config.variant == "collatz":
                new = value * value % p * value % p * self.params.a % p
                nexpr = expr.triple_plus_one()
                branch = "cube"
            else:
                new = value * self.inv_a % p
                nexpr = expr.dec()
                branch = "div"
            outcome = self._attempt(new, nexpr)
            self._record(value, branch, result=new, expr=nexpr, control_bit=0)
            if isinstance(outcome, _Solved):
                raise outcome
            self._store(WalkEntry(new, None, nexpr, 0))
            self.value, self.expr = new, nexpr
            if outcome == "toomany":
                raise _RestartSignal
        else:
            r1, r2 = sqrt_mod_p(value, self.params)
            nexpr = expr.halve()
            toomany = False
            for root in (r1, r2):
                outcome = self._attempt(root, nexpr)
                if isinstance(outcome, _Solved):
                    self._record(value, "sqrt", roots=(r1, r2), expr=nexpr,
                                 control_bit=1)
                    raise outcome
                toomany = toomany or outcome == "toomany"
            if toomany:
                self._store(WalkEntry(r1, r2, nexpr, 1))
                self._record(value, "sqrt", roots=(r1, r2), expr=nexpr,
                             control_bit=1)
                self.value, self.expr = r1, nexpr
                raise _RestartSignal
            bit = self.decisions.next_bit()
            chosen, other = (r1, r2) if bit == 0 else (r2, r1)
            self._store(WalkEntry(chosen, other, nexpr, 1))
            self._record(value, "sqrt", roots=(r1, r2), chosen=chosen,
                         decision=bit, expr=nexpr, control_bit=1)
            self.value, self.expr = chosen, nexpr

    def _step_char2(self):
        value, expr = self.value, self.expr
        bit = self.decisions.next_bit()
        if bit == 1:
            new = gf_div_by_x(value, self.params)
            nexpr = expr.dec()
            branch, control = "div", 0
        else:
            new = gf_sqrt(value, self.params)
            nexpr = expr.halve()
            branch, control = "sqrt", 1
        outcome = self._attempt(new, nexpr)
        self._record(value, branch, result=new, decision=bit, expr=nexpr,
                     control_bit=control)
        if isinstance(outcome, _Solved):
            raise outcome
        self._store(WalkEntry(new, None, nexpr, control))
        self.value, self.expr = new, nexpr
        if outcome == "toomany":
            raise _RestartSignal

    # -- collision handling -------------------------------------------------

    def _attempt(self, value: int, expr: LinExpr):
        """Check one candidate value against Table I, then the walk history.

        Returns None (no hit, or hit discarded as spurious/degenerate),
        "toomany", or a _Solved carrying the verified result.
        """
        known = self.table.entries.get(value)
        if known is not None:
            stored = LinExpr(0, known, 0)
        else:
            idx = self.index.get(value)
            if idx is None:
                return None
            stored = self.entries[idx].expr
        self.collisions_tested += 1
        try:
            sol = collision_solve(expr, stored, self.order)
            candidates = enumerate_candidates(sol, self.order, self.config.d_max)
        except (NoSolutionError, DegenerateCollisionError):
            return None  # spurious or self-collision: walk on
        except TooManyCandidatesError:
            return "toomany"
        for n in candidates:
            if self._verify(n):
                return _Solved(self._result(n, sol, candidates))
        return None  # cannot happen for genuine matches; treated as spurious

    def _verify(self, n: int) -> bool:
        self.candidates_tried += 1
        return _generator_pow(self.params, n) == self.target

    # -- bookkeeping ---------------------------------------------------------

    def _store(self, entry: WalkEntry):
        keys = [entry.value] if entry.partner is None else [entry.value, entry.partner]
        fresh = [v for v in keys if v not in self.index]
        if not fresh:
            return  # revisit: the earliest entry for a value wins
        idx = len(self.entries)
        self.entries.append(entry)
        for v in fresh:
            self.index[v] = idx

    def _record(self, value, branch, result=None, roots=None, chosen=None,
                decision=None, expr=None, control_bit=0):
        if self.trace is None:
            return
        self.trace.append(TraceRecord(
            index=self.steps_taken, segment=self.segment, value=value,
            branch=branch, result=result, roots=roots, chosen=chosen,
            decision=decision, expr=expr, control_bit=control_bit))

    def _result(self, n, congruence=None, candidates=None, cancelled=False):
        return DlogResult(
            n=None if n is None else n % self.order,
            steps_taken=self.steps_taken,
            restarts=self.restarts,
            collisions_tested=self.collisions_tested,
            candidates_tried=self.candidates_tried,
            congruence=congruence,
            candidates=candidates,
            trace=self.trace,
            cancelled=cancelled)


def run_dlog(params, target: int, config: WalkConfig | None = None,
             table: PrecomputedTable | None = None,
             stop: threading.Event | None = None) -> DlogResult:
    """Solve generator^n = target; returns a DlogResult (n = None on failure).

    Deterministic for a fixed config: the default seed is 0.  A prebuilt
    Table I may be shared across calls; it is only read.
    """
    if config is None:
        config = WalkConfig()
    return _Walk(params, target, config, table, stop).run()


def run_dlog_parallel(params, target: int, config: WalkConfig,
                      workers: int) -> DlogResult:
    """Launch `workers` independent walks with distinct seeds; first hit wins.

    Walks share the read-only Table I but nothing else.  The result returned
    is the successful walk with the lowest worker index among those that
    finished before cancellation reached them.
    """
    if workers <= 1:
        return run_dlog(params, target, config)
    if config.choices is not None:
        raise ValueError("scripted choices cannot drive parallel walks")
    table = build_table_one(params, config)
    base_seed = config.seed if config.seed is not None else 0
    stop = threading.Event()
    results: list[DlogResult | None] = [None] * workers

    def work(i: int):
        cfg = replace(config, seed=base_seed + i)
        results[i] = run_dlog(params, target, cfg, table=table, stop=stop)
        if results[i].success:
            stop.set()

    threads = [threading.Thread(target=work, args=(i,)) for i in range(workers)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for res in results:
        if res is not None and res.success:
            return res
    return next(res for res in results if res is not None)
