"""Deliberate defects in the core, used to show that the suites can fail.

``bracket_sign``  structure constant (m - n) replaced by (m + n)
``pbw_swap``      straightening uses h g -> g h + [g, h] (wrong order)
``dropped_t2``    the t^2 coefficient of every D_b is discarded
"""

from contextlib import contextmanager

from . import algebra, hopf, kernel, series, twist

MUTATIONS = ("bracket_sign", "pbw_swap", "dropped_t2")


def clear_all_caches():
    kernel.clear_cache()
    algebra.clear_caches()
    series.clear_caches()
    hopf.clear_caches()
    twist.clear_caches()


def set_mutation(name):
    if name is not None and name not in MUTATIONS:
        raise ValueError("unknown mutation %r" % name)
    kernel.set_mutation(name if name in ("bracket_sign", "pbw_swap") else None)
    twist._drop_t2 = name == "dropped_t2"
    clear_all_caches()


def active_mutation():
    if twist._drop_t2:
        return "dropped_t2"
    return kernel.get_mutation()


@contextmanager
def mutated(name):
    prev = active_mutation()
    set_mutation(name)
    try:
        yield
    finally:
        set_mutation(prev)
