"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line with its measured time; the lines are
printed at the end of the pytest run (see conftest.py) and also when this
file is executed directly.
"""

import io
import json
import random
import time
from fractions import Fraction

import pytest

from w22quant.algebra import TwistConfig
from w22quant.cli import main as cli_main
from w22quant.expr import ExprError, evaluate, parse, to_source
from w22quant.expr import Add, Apply, Fact, Gen, Hbar, Mul, Neg, Num, Ox, Pow, Sub, Twist
from w22quant.mutations import MUTATIONS, mutated
from w22quant.render import to_json, value_from_json
from w22quant.verify import (
    suite_lemma_1_1,
    suite_lemma_2_1,
    suite_lemma_2_2,
    suite_lemma_2_4,
    suite_lie,
    suite_theorem_1_4,
    suite_theorem_1_5,
)

RESULTS = []
N0S = (1, 2, -1)
KINDS = ("L", "W")


def record(name, ok, elapsed, limit=None, note=""):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    budget = "" if limit is None else " (limit %ss)" % limit
    line = "%s  %-28s %7.2fs%s%s" % (status, name, elapsed, budget, ("  " + note) if note else "")
    RESULTS.append(line)
    print(line)
    assert ok, "%s: %s" % (name, note)
    assert within, "%s took %.1fs, limit %ss" % (name, elapsed, limit)


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _first_fail(reports):
    for r in reports:
        if not r.passed:
            return r.summary()
    return ""


def test_lie_algebra_laws():
    r, dt = _timed(lambda: suite_lie(bound=6, triples=200, assoc=100, seed=0))
    record("lie algebra laws", r.passed, dt, 10, _first_fail([r]))


def test_factorial_identities_witness_ring():
    r, dt = _timed(lambda: suite_lemma_1_1(max_mn=6))
    record("factorial identities", r.passed, dt, 10, _first_fail([r]))


def test_exchange_identities():
    rs, dt = _timed(lambda: [suite_lemma_2_1(TwistConfig(n0, k, 4)) for k in KINDS for n0 in N0S])
    record("exchange identities", all(r.passed for r in rs), dt, 60, _first_fail(rs))


def test_twist_products_order_5():
    rs, dt = _timed(lambda: [suite_lemma_2_2(TwistConfig(n0, k, 5)) for k in KINDS for n0 in N0S])
    record("twist products N=5", all(r.passed for r in rs), dt, 60, _first_fail(rs))


def test_twist_conditions():
    cfgs = [TwistConfig(1, "L", 5), TwistConfig(2, "L", 5), TwistConfig(1, "W", 5), TwistConfig(-1, "W", 5)]
    rs, dt = _timed(lambda: [suite_lemma_2_4(c) for c in cfgs])
    orders = {(c.id, c.params["order"]) for r in rs for c in r.checks}
    ok = all(r.passed for r in rs) and orders == {("cocycle", 3), ("counit_left", 5), ("counit_right", 5)}
    record("twist conditions", ok, dt, 300, _first_fail(rs))


_THM_REPORTS = {}


def _thm_reports():
    if not _THM_REPORTS:
        t0 = time.perf_counter()
        reports = [suite_theorem_1_4(TwistConfig(n0, "L", 4)) for n0 in N0S]
        reports += [suite_theorem_1_5(TwistConfig(n0, "W", 4)) for n0 in N0S]
        _THM_REPORTS["reports"] = reports
        _THM_REPORTS["time"] = time.perf_counter() - t0
    return _THM_REPORTS["reports"], _THM_REPORTS["time"]


def _subset(reports, prefixes):
    return [c for r in reports for c in r.checks if c.id.startswith(prefixes)]


def test_closed_forms_match_conjugation():
    rs, dt = _thm_reports()
    checks = _subset(rs, ("closed_", "delta_W", "antipode_W", "reading"))
    gens = {c.params["gen"] for c in checks if c.id == "closed_delta"}
    ok = bool(checks) and all(c.status == "pass" for c in checks) and len(gens) == 14
    readings = set()
    for r in rs:
        for f in r.findings:
            if f["id"] == "reading.nu":
                readings.add("nu " + ",".join(f["detail"]["matching"]))
            if f["id"] == "reading.antipode_factorial":
                readings.add("factorial " + ",".join(f["detail"]["matching"]))
    record("closed forms vs conjugation", ok, dt, 300, "; ".join(sorted(readings)))


def test_twisted_hopf_axioms():
    rs, dt = _thm_reports()
    checks = _subset(rs, ("coassociativity", "counit", "antipode_left", "antipode_right"))
    coassoc_orders = {c.params["order"] for c in checks if c.id == "coassociativity"}
    ok = bool(checks) and all(c.status == "pass" for c in checks) and coassoc_orders == {3}
    record("twisted hopf axioms", ok, dt, 300, "%d checks" % len(checks))


def test_t_zero_specialization():
    rs, dt = _thm_reports()
    checks = _subset(rs, ("t0.",))
    ok = len(checks) == 6 * 14 * 2 and all(c.status == "pass" for c in checks)
    record("t=0 specialization", ok, dt, None, "%d checks" % len(checks))


def _suites_failing_under(name):
    cfg_l, cfg_w = TwistConfig(1, "L", 3), TwistConfig(1, "W", 3)
    runs = [
        ("lie", lambda: suite_lie()),
        ("2.2/L", lambda: suite_lemma_2_2(cfg_l)),
        ("2.4/L", lambda: suite_lemma_2_4(cfg_l)),
        ("thm1.4", lambda: suite_theorem_1_4(cfg_l)),
        ("thm1.5", lambda: suite_theorem_1_5(cfg_w)),
    ]
    with mutated(name):
        return [label for label, fn in runs if not fn().passed]


def test_mutation_sensitivity():
    t0 = time.perf_counter()
    failing = {m: _suites_failing_under(m) for m in MUTATIONS}
    dt = time.perf_counter() - t0
    note = "; ".join("%s -> %s" % (m, ",".join(f) or "none") for m, f in failing.items())
    record("mutation sensitivity", all(failing.values()), dt, None, note)


# random expressions for the round-trip criterion


def _random_ast(rng, depth=0):
    if depth > 2 or rng.random() < 0.35:
        pick = rng.randrange(5)
        if pick == 0:
            return Num(Fraction(rng.randint(0, 9), rng.randint(1, 4)))
        if pick == 1:
            return Gen(rng.choice("LW"), rng.randint(-4, 4))
        if pick == 2:
            return Hbar()
        if pick == 3:
            return Fact(rng.random() < 0.5, Fraction(rng.randint(-4, 4), rng.randint(1, 3)), rng.randint(0, 3))
        return Twist(rng.choice("CDUV"), Fraction(rng.randint(-2, 2), rng.randint(1, 2)))
    pick = rng.randrange(7)
    sub = lambda: _random_ast(rng, depth + 1)  # noqa: E731
    if pick == 0:
        return Add(sub(), sub())
    if pick == 1:
        return Sub(sub(), sub())
    if pick == 2:
        return Mul(sub(), sub())
    if pick == 3:
        return Neg(sub())
    if pick == 4:
        return Pow(sub(), rng.randint(0, 2))
    if pick == 5:
        return Apply(rng.choice(["Delta0", "S0", "eps", "Delta", "S"]), sub())
    return Ox(tuple(sub() for _ in range(rng.randint(2, 3))))


def test_cli_and_roundtrips():
    t0 = time.perf_counter()
    code_default = cli_main(["verify", "--suite", "all"], out=io.StringIO())
    code_all = cli_main(["verify", "--suite", "all", "--all-configs"], out=io.StringIO())

    rng = random.Random(2024)
    cfg = TwistConfig(1, "L", 2)
    printed_ok = json_ok = 0
    bad = []
    while printed_ok < 200 or json_ok < 200:
        e = _random_ast(rng)
        src = to_source(e)
        if printed_ok < 200:
            if parse(src) == e:
                printed_ok += 1
            else:
                bad.append(src)
                break
        if json_ok < 200:
            try:
                v = evaluate(e, cfg)
            except ExprError:
                continue
            if value_from_json(json.loads(to_json(v))) == v:
                json_ok += 1
            else:
                bad.append(src)
                break
    dt = time.perf_counter() - t0
    ok = code_default == 0 and code_all == 0 and not bad
    note = "verify exit %d/%d, parse/print %d, json %d" % (code_default, code_all, printed_ok, json_ok)
    record("cli + round trips", ok, dt, None, note + (("; first bad: " + bad[0]) if bad else ""))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
