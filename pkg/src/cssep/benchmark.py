"""Microbenchmarks comparing the pure and compiled kernel backends.

Run as ``python -m cssep.benchmark``.  Inputs are seeded, timings are medians
over several repeats, and every task is checked for agreement between the two
backends before the numbers are printed.
"""

from __future__ import annotations

import argparse
import statistics
import time
from array import array

from ._kernels import _bits_key, has_native
from ._kernels import pure as _pure
from .patterns import build_fs
from .separators import FamilyOptions, full_family
from .testbed import enumerate_cliques, enumerate_stable_sets, gen_random

if has_native():
    from ._kernels import _native
else:
    _native = None


def _time(fn, repeats):
    best = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best.append(time.perf_counter() - t0)
    return statistics.median(best), out


def _tasks():
    g_small = gen_random(12, 0.5, seed=7)
    g_mid = gen_random(16, 0.4, seed=11)
    host = gen_random(12, 0.5, seed=23)
    pattern, _ = build_fs(2, 2)
    g_cov = gen_random(10, 0.5, seed=5)
    fam = full_family(g_cov, 1, 1, FamilyOptions())
    fam_masks = fam.x_masks()
    cliques = [vs.mask for vs in enumerate_cliques(g_cov)]
    stables = [vs.mask for vs in enumerate_stable_sets(g_cov)]

    def norm_masks(raw):
        return sorted(raw, key=_bits_key)

    def norm_cov(res):
        pairs, unc, bad = res
        key = lambda ks: (_bits_key(ks[0]), _bits_key(ks[1]))
        return pairs, sorted(unc, key=key), sorted(bad, key=key)

    yield (
        "all cliques (n=12)",
        lambda: _pure.all_cliques(g_small.adj, g_small.n, False),
        lambda: _native.all_cliques(array("Q", g_small.adj), g_small.n, False),
        norm_masks,
    )
    yield (
        "maximal cliques (n=16)",
        lambda: _pure.all_cliques(g_mid.adj, g_mid.n, True),
        lambda: _native.all_cliques(array("Q", g_mid.adj), g_mid.n, True),
        norm_masks,
    )
    yield (
        "induced containment (n=12 host, 8-vertex pattern)",
        lambda: _pure.graph_contains_induced(host.adj, host.n, pattern.adj, pattern.n),
        lambda: _native.graph_contains_induced(
            array("Q", host.adj), host.n, array("Q", pattern.adj), pattern.n
        ),
        bool,
    )
    yield (
        "ramsey property r=6 q=3",
        lambda: _pure.ramsey_property_holds(6, 3),
        lambda: _native.ramsey_property_holds(6, 3),
        bool,
    )
    yield (
        "coverage scan with witnesses (n=10, p=q=1)",
        lambda: _pure.coverage_scan(
            g_cov.adj, g_cov.n, fam_masks, cliques, stables, 1, 2, True
        ),
        lambda: _native.coverage_scan(
            array("Q", g_cov.adj),
            g_cov.n,
            array("Q", sorted(fam_masks)),
            array("Q", cliques),
            array("Q", stables),
            1,
            2,
            True,
        ),
        norm_cov,
    )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description="cssep kernel benchmarks")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args(argv)

    native_ok = _native is not None
    if not native_ok:
        print("compiled backend not built; timing the pure backend only")
    header = f"{'task':<48} {'pure':>10} {'native':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, pure_fn, native_fn, norm in _tasks():
        t_pure, out_pure = _time(pure_fn, args.repeats)
        if native_ok:
            t_native, out_native = _time(native_fn, args.repeats)
            if norm(out_pure) != norm(out_native):
                print(f"{name:<48} BACKEND MISMATCH")
                return 1
            ratio = t_pure / t_native if t_native > 0 else float("inf")
            print(f"{name:<48} {t_pure:>9.4f}s {t_native:>9.4f}s {ratio:>7.1f}x")
        else:
            print(f"{name:<48} {t_pure:>9.4f}s {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
