import random

import pytest

from dlogwalk.gf2m import GENERATOR, BinaryFieldParams, gf_mul
from dlogwalk.primefield import PrimeGroupParams
from dlogwalk.selftest import CASES, replay
from dlogwalk.walk import (DecisionsExhaustedError, UnsupportedGroupError,
                           WalkConfig, build_table_one, default_max_steps,
                           run_dlog, run_dlog_parallel)

P103 = PrimeGroupParams(103, 5)
P101 = PrimeGroupParams(101, 2)
P2003 = PrimeGroupParams(2003, 5)
GF27 = BinaryFieldParams(7, 0x83)


def dlog_table(mul, order):
    """True discrete log of every group element, by accumulation."""
    table = {}
    acc = 1
    for e in range(order):
        table[acc] = e
        acc = mul(acc)
    return table

PRIME_DLOGS = dlog_table(lambda v: v * 5 % 103, 102)
GF_DLOGS = dlog_table(lambda v: gf_mul(v, GENERATOR, GF27), 127)


# -- Table I -------------------------------------------------------------

def test_table_one_known_values_prime():
    table = build_table_one(P103, WalkConfig(table_size=7, sequence="pow2"))
    assert table.entries == {5: 1, 25: 2, 7: 4, 49: 8, 32: 16, 97: 32, 36: 64}


def test_table_one_known_values_gf2m():
    table = build_table_one(GF27, WalkConfig(variant="char2", table_size=7))
    assert table.entries[0x14] == 16
    assert table.entries == {0x02: 1, 0x04: 2, 0x10: 4, 0x06: 8,
                             0x14: 16, 0x16: 32, 0x12: 64}


def test_table_one_empty():
    assert build_table_one(P103, WalkConfig(table_size=0)).entries == {}


def test_table_one_consecutive():
    table = build_table_one(P103, WalkConfig(table_size=4, sequence="consec"))
    assert table.entries == {5: 1, 25: 2, 22: 3, 7: 4}


def test_table_one_duplicates_keep_smaller_exponent():
    # p = 17: 2^4 = 16 = 2^(4 + 16k), so pow2 exponents collide past j = 2
    params = PrimeGroupParams(17, 3)
    table = build_table_one(params, WalkConfig(table_size=8, sequence="pow2"))
    values = [pow(3, 1 << j, 17) for j in range(8)]
    for v, k in table.entries.items():
        assert pow(3, k, 17) == v
        assert k == min(1 << j for j in range(8) if values[j] == v)


# -- config validation ----------------------------------------------------

def test_config_validation():
    with pytest.raises(ValueError):
        WalkConfig(variant="pollard")
    with pytest.raises(ValueError):
        WalkConfig(sequence="fib")
    with pytest.raises(ValueError):
        WalkConfig(seed=1, choices=[0, 1])
    with pytest.raises(ValueError):
        WalkConfig(max_steps=0)
    with pytest.raises(ValueError):
        WalkConfig(table_size=-1)


def test_variant_params_mismatch():
    with pytest.raises(TypeError):
        run_dlog(GF27, 5, WalkConfig(variant="inverse"))
    with pytest.raises(TypeError):
        run_dlog(P103, 5, WalkConfig(variant="char2"))


def test_collatz_requires_order_coprime_to_three():
    with pytest.raises(UnsupportedGroupError):
        run_dlog(P103, 84, WalkConfig(variant="collatz"))  # 3 | 102


def test_target_must_be_nonzero():
    with pytest.raises(ValueError):
        run_dlog(P103, 0)
    with pytest.raises(ValueError):
        run_dlog(GF27, 0, WalkConfig(variant="char2"))


# -- worked-example replays ------------------------------------------------

@pytest.mark.parametrize("case", CASES, ids=lambda c: c.name)
def test_worked_examples_replay_exactly(case):
    assert replay(case) is None


def test_replay_detects_corruption(monkeypatch):
    import dlogwalk.walk as walk_mod
    real = walk_mod.build_table_one

    def corrupt(params, config):
        table = real(params, config)
        table.entries = {v: k + 1 for v, k in table.entries.items()}
        return table

    monkeypatch.setattr(walk_mod, "build_table_one", corrupt)
    assert replay(CASES[0]) is not None


# -- solving behaviour -----------------------------------------------------

def test_immediate_table_hit():
    result = run_dlog(P103, 5, WalkConfig(table_size=7))
    assert result.n == 1
    assert result.steps_taken == 0


def test_target_one_resolves_to_zero():
    for params, variant in ((P103, "inverse"), (GF27, "char2")):
        result = run_dlog(params, 1, WalkConfig(variant=variant, seed=3))
        assert result.n == 0


def test_char2_self_collision_at_one():
    # sqrt(1) = 1 collides with the stored start immediately
    result = run_dlog(GF27, 1, WalkConfig(variant="char2", choices=[0], trace=True))
    assert result.n == 0
    assert result.trace[0].result == 1


def test_scripted_exhaustion_raises():
    with pytest.raises(DecisionsExhaustedError):
        run_dlog(P103, 99, WalkConfig(choices=[0]))


def test_determinism_full_result():
    for seed in (0, 7, 123):
        runs = [run_dlog(P2003, 1234, WalkConfig(seed=seed, trace=True))
                for _ in range(2)]
        a, b = runs
        assert (a.n, a.steps_taken, a.restarts, a.collisions_tested,
                a.candidates_tried) == \
               (b.n, b.steps_taken, b.restarts, b.collisions_tested,
                b.candidates_tried)
        assert a.trace == b.trace


def test_seeds_change_walks():
    traces = {run_dlog(P2003, 1234, WalkConfig(seed=s)).steps_taken
              for s in range(12)}
    assert len(traces) > 1


def test_default_budget():
    assert default_max_steps(102) == 202   # ceil(20 * sqrt(102))
    assert default_max_steps(10000) == 2000


@pytest.mark.parametrize("params,variant,dlogs", [
    (P103, "inverse", PRIME_DLOGS),
    (P101, "collatz", None),
    (GF27, "char2", GF_DLOGS),
])
def test_solves_verify_against_truth(params, variant, dlogs):
    order = params.order
    rng = random.Random(order)
    if variant == "collatz":
        dlogs = dlog_table(lambda v: v * 2 % 101, 100)
    inverse = {e: v for v, e in dlogs.items()}
    for i in range(60):
        n = rng.randrange(order)
        target = inverse[n]
        result = run_dlog(params, target, WalkConfig(variant=variant, seed=i))
        assert result.success
        assert result.n == n


@pytest.mark.parametrize("params,variant,dlogs,order_half_shift", [
    (P103, "inverse", PRIME_DLOGS, True),
    (P101, "collatz", None, True),
    (GF27, "char2", GF_DLOGS, False),
])
def test_exponent_tracking_soundness(params, variant, dlogs, order_half_shift):
    """At every step 2^k * dlog(value) = A*n + B (mod N), for either root."""
    order = params.order
    if variant == "collatz":
        dlogs = dlog_table(lambda v: v * 2 % 101, 100)
    inverse = {e: v for v, e in dlogs.items()}
    rng = random.Random(3 * order)
    for i in range(40):
        n = rng.randrange(order)
        target = inverse[n]
        # small budgets force restart segments through the same invariant
        config = WalkConfig(variant=variant, seed=i, trace=True,
                            max_steps=12 if i % 3 == 0 else None)
        result = run_dlog(params, target, config)
        for rec in result.trace:
            values = [rec.result] if rec.roots is None else list(rec.roots)
            for v in values:
                lhs = (1 << rec.expr.k) * dlogs[v] % order
                assert lhs == (rec.expr.A * n + rec.expr.B) % order
        if result.success:
            assert result.n == n


def test_first_branch_matches_parity_for_p_3_mod_4():
    inverse = {e: v for v, e in PRIME_DLOGS.items()}
    for n in range(1, 102):
        result = run_dlog(P103, inverse[n], WalkConfig(seed=1, trace=True,
                                                       table_size=0))
        first = result.trace[0]
        assert (first.branch == "div") == (n % 2 == 1)


def test_restart_statistics_and_budget_invariant():
    solved_after_restart = 0
    for seed in range(30):
        config = WalkConfig(seed=seed, max_steps=8, max_restarts=16)
        result = run_dlog(P2003, 777, config)
        assert result.steps_taken <= 8 * (result.restarts + 1)
        assert result.restarts <= 17
        if result.success:
            assert pow(5, result.n, 2003) == 777
            if result.restarts:
                solved_after_restart += 1
    assert solved_after_restart > 0  # restart policy does recover walks


def test_failure_reports_statistics():
    result = run_dlog(P2003, 777, WalkConfig(seed=0, max_steps=1, max_restarts=2))
    assert not result.success
    assert result.n is None
    assert result.restarts == 3
    assert result.steps_taken >= 1


def test_d_max_forces_restarts_but_still_solves():
    result = run_dlog(P2003, 777, WalkConfig(seed=2, d_max=1))
    assert result.success
    assert pow(5, result.n, 2003) == 777


def test_exhaustive_small_groups():
    for target in range(1, 103):
        result = run_dlog(P103, target, WalkConfig(seed=target))
        assert result.success and PRIME_DLOGS[target] == result.n
    for target in range(1, 128):
        result = run_dlog(GF27, target, WalkConfig(variant="char2", seed=target))
        assert result.success and GF_DLOGS[target] == result.n


def test_shared_table_across_runs():
    table = build_table_one(P2003, WalkConfig())
    before = dict(table.entries)
    for seed in range(10):
        result = run_dlog(P2003, 1500, WalkConfig(seed=seed), table=table)
        assert result.success
    assert table.entries == before  # engine only reads Table I


def test_parallel_walks():
    config = WalkConfig(seed=11)
    result = run_dlog_parallel(P2003, 321, config, workers=4)
    assert result.success
    assert pow(5, result.n, 2003) == 321
    with pytest.raises(ValueError):
        run_dlog_parallel(P2003, 321, WalkConfig(choices=[1]), workers=2)


def test_trace_disabled_by_default():
    assert run_dlog(P103, 84, WalkConfig(seed=0)).trace is None


def test_scripted_config_is_reusable():
    config = WalkConfig(table_size=7, choices=[0, 1])
    assert run_dlog(P103, 99, config).n == 37
    assert run_dlog(P103, 99, config).n == 37  # choices not consumed in place


def test_consecutive_sequence_solves():
    for target in (84, 99, 37):
        result = run_dlog(P103, target, WalkConfig(sequence="consec", seed=4))
        assert result.success and PRIME_DLOGS[target] == result.n


def test_preset_stop_event_cancels():
    import threading
    stop = threading.Event()
    stop.set()
    result = run_dlog(P2003, 777, WalkConfig(seed=0), stop=stop)
    assert not result.success
    assert result.cancelled
    assert result.steps_taken == 0


def test_scale_mersenne_prime():
    p = 2**31 - 1
    params = PrimeGroupParams(p, 7, factors_of_order=(2, 3, 7, 11, 31, 151, 331))
    n_true = 987654321
    result = run_dlog(params, pow(7, n_true, p), WalkConfig(seed=5))
    assert result.success
    assert result.n == n_true


def test_scale_gf2m_17():
    from dlogwalk.gf2m import gf_pow
    gf = BinaryFieldParams(17, 0x20009)   # x^17 + x^3 + 1, order 131071 prime
    target = gf_pow(GENERATOR, 100000, gf)
    result = run_dlog(gf, target, WalkConfig(variant="char2", seed=1))
    assert result.success
    assert result.n == 100000


def test_result_congruence_fields():
    result = run_dlog(P103, 99, WalkConfig(choices=[0, 1]))
    assert (result.congruence.residue, result.congruence.modulus,
            result.congruence.count) == (3, 34, 3)
    assert result.candidates == [3, 37, 71]
