"""Benchmark the numba kernels against the pure-NumPy fallbacks.

Run:  python3 benchmarks/bench_kernels.py

The numba build is warmed up once before timing so JIT compilation is not
charged to the measurement. Both paths consume the same RNG stream, so the
outputs are checked for equality while we are at it.
"""

import time

import numpy as np

from sceneseek import kernels


def time_fn(fn, *args, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_gibbs_train(impls, n_docs, vocab, n_topics, n_tokens, iterations):
    rng = np.random.RandomState(0)
    doc_ids = rng.randint(0, n_docs, n_tokens).astype(np.int64)
    word_ids = rng.randint(0, vocab, n_tokens).astype(np.int64)
    args = (doc_ids, word_ids, n_docs, n_topics, vocab, 0.5, 0.01,
            iterations, 42)
    rows = {}
    outs = {}
    for name, fns in impls.items():
        rows[name], outs[name] = time_fn(fns["gibbs_train"], *args)
    equal = all(np.array_equal(a, b)
                for a, b in zip(*(outs[n] for n in sorted(outs))))
    return rows, equal


def bench_fold_in(impls, vocab, n_topics, n_tokens, iterations, clips):
    rng = np.random.RandomState(1)
    phi = rng.dirichlet(np.ones(vocab), size=n_topics)
    words = [rng.randint(0, vocab, n_tokens).astype(np.int64)
             for _ in range(clips)]
    rows = {}
    outs = {}
    for name, fns in impls.items():
        fn = fns["gibbs_fold_in"]
        t0 = time.perf_counter()
        outs[name] = [fn(w, phi, 0.5, iterations, i)
                      for i, w in enumerate(words)]
        rows[name] = time.perf_counter() - t0
    names = sorted(outs)
    equal = all(np.array_equal(a, b)
                for a, b in zip(outs[names[0]], outs[names[-1]]))
    return rows, equal


def bench_sw(impls, qlen, slen, rounds):
    rng = np.random.RandomState(2)
    match = (rng.random_sample((qlen, slen)) < 0.2).astype(np.float64)
    blocked = np.zeros(slen, dtype=np.uint8)
    rows = {}
    outs = {}
    for name, fns in impls.items():
        fn = fns["sw_fill"]
        t0 = time.perf_counter()
        for _ in range(rounds):
            outs[name] = fn(match, 2.0, 1.0, 1.0, blocked)
        rows[name] = time.perf_counter() - t0
    names = sorted(outs)
    equal = np.array_equal(outs[names[0]], outs[names[-1]])
    return rows, equal


def main():
    impls = kernels.implementations()
    print(f"kernel paths: {', '.join(sorted(impls))} "
          f"(active: {'numba' if kernels.NUMBA_ENABLED else 'numpy'})")

    if "numba" in impls:
        print("warming up numba JIT...")
        warm = kernels.implementations()["numba"]
        d = np.zeros(4, dtype=np.int64)
        warm["gibbs_train"](d, d, 2, 2, 4, 0.5, 0.01, 1, 0)
        warm["gibbs_fold_in"](d, np.full((2, 4), 0.25), 0.5, 1, 0)
        warm["sw_fill"](np.zeros((2, 2)), 2.0, 1.0, 1.0,
                        np.zeros(2, dtype=np.uint8))

    cases = []

    rows, equal = bench_gibbs_train(impls, n_docs=400, vocab=4000,
                                    n_topics=10, n_tokens=30_000,
                                    iterations=150)
    cases.append(("gibbs train (30k tokens, K=10, 150 sweeps)", rows, equal))

    rows, equal = bench_fold_in(impls, vocab=4000, n_topics=30, n_tokens=30,
                                iterations=50, clips=300)
    cases.append(("fold-in (300 clips x 30 tokens, K=30, 50 sweeps)",
                  rows, equal))

    rows, equal = bench_sw(impls, qlen=6, slen=2000, rounds=50)
    cases.append(("alignment fill (6 x 2000, 50 rounds)", rows, equal))

    print()
    print(f"{'case':<50} {'numpy':>10} {'numba':>10} {'speedup':>9}  outputs")
    for name, rows, equal in cases:
        np_t = rows.get("numpy", float("nan"))
        nb_t = rows.get("numba", float("nan"))
        speedup = np_t / nb_t if nb_t else float("nan")
        print(f"{name:<50} {np_t:>9.3f}s {nb_t:>9.3f}s {speedup:>8.1f}x"
              f"  {'identical' if equal else 'DIFFER'}")


if __name__ == "__main__":
    main()
