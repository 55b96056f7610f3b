"""Random relation-passing modules for the tests.

Every generator returns ``(module, weight, nu)`` with the module already
checked against ``(weight, nu)``.  Sources: constructed simples and their
direct sums, outer-tensor inductions at ``nu = 0``, zero-arrow inductions at
``nu != 0``, all optionally pushed through random reflections and random
changes of basis.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from preproj.linalg import Mat
from preproj.oracle import oracle_exists_simple
from preproj.quiver import Quiver, build_quiver
from preproj.reflection import reflect
from preproj.reps import Rep, WreathRep, act_on_tuple, check_rank1, check_wreath, direct_sum, induce, outer_tensor_induce
from preproj.roots import Weight
from preproj.young import is_rectangular

WINDOWS = {
    "A_plus_inf": [0, 1, 2, 3],
    "A_inf": [-1, 0, 1, 2],
    "D_inf": [0, 1, 2, 3],
}

MAX_COMPONENT_DIM = 2


def quivers():
    return [(build_quiver(f), w) for f, w in WINDOWS.items()]


def rand_frac(rng: random.Random, lo=-3, hi=3, dens=(1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def rand_nonzero(rng, lo=-3, hi=3) -> Fraction:
    while True:
        x = rand_frac(rng, lo, hi)
        if x:
            return x


def connected_subsets(q: Quiver, window):
    out = []
    for k in range(1, len(window) + 1):
        for sub in itertools.combinations(window, k):
            if q.is_connected(sub):
                out.append(list(sub))
    return out


def simple_on(rng, q: Quiver, support, lam: dict) -> dict:
    """Complete ``lam`` on ``support`` so the multiplicity-free simple exists."""
    for _ in range(200):
        trial = dict(lam)
        free = [v for v in support if v not in trial]
        if not free:
            return trial if oracle_exists_simple(q, Weight.explicit(trial), {v: 1 for v in support}) else None
        for v in free[:-1]:
            trial[v] = rand_nonzero(rng)
        trial[free[-1]] = -sum(trial[v] for v in support if v != free[-1])
        if oracle_exists_simple(q, Weight.explicit(trial), {v: 1 for v in support}):
            return trial
    return None


def random_invertible(rng, d: int) -> Mat:
    while True:
        m = Mat([[Fraction(rng.randint(-2, 2)) for _ in range(d)] for _ in range(d)], d)
        if m.is_invertible():
            return m


def gauge_rank1(rng, M: Rep) -> Rep:
    g = {v: random_invertible(rng, d) for v, d in M.dims.items()}
    maps = {x: g[x.target] @ m @ g[x.source].inverse() for x, m in M.maps.items()}
    return Rep(M.quiver, M.dims, maps)


def gauge_wreath(rng, V: WreathRep) -> WreathRep:
    """Random automorphism of the underlying S_n-graded space, applied to V.

    On each orbit representative the basis change is averaged over the
    stabilizer, so it commutes with the S_n action and transports
    consistently along the orbit.
    """
    n = V.n
    perms = list(itertools.permutations(range(n)))
    g: dict = {}
    for tup in V.tuples():
        if tup in g:
            continue
        d = V.dim(tup)
        stab = [p for p in perms if act_on_tuple(p, tup) == tup]
        for _ in range(50):
            X = random_invertible(rng, d)
            avg = Mat.zeros(d, d)
            for p in stab:
                P = V.perm_map(p, tup)
                avg = avg + P @ X @ P.inverse()
            if avg.is_invertible():
                break
        else:
            avg = Mat.identity(d)
        for p in perms:
            t2 = act_on_tuple(p, tup)
            if t2 not in g:
                P = V.perm_map(p, tup)
                g[t2] = P @ avg @ P.inverse()
    ginv = {t: m.inverse() for t, m in g.items()}
    arrows = {}
    for (l, x, t), m in V.arrows.items():
        tgt = list(t)
        tgt[l] = x.target
        arrows[(l, x, t)] = g[tuple(tgt)] @ m @ ginv[t]
    sigma = {}
    for (k, t), m in V.sigma.items():
        t2 = list(t)
        t2[k], t2[k + 1] = t2[k + 1], t2[k]
        sigma[(k, t)] = g[tuple(t2)] @ m @ ginv[t]
    return WreathRep(V.quiver, n, V.dims, arrows, sigma)


def small(V: WreathRep) -> bool:
    return all(d <= MAX_COMPONENT_DIM for d in V.dims.values())


def random_rank1(rng, q: Quiver, window) -> tuple[Rep, Weight]:
    """A simple with multiplicity-free support, or a direct sum of two simples."""
    subsets = connected_subsets(q, window)
    while True:
        sup = rng.choice(subsets)
        lam = simple_on(rng, q, sup, {})
        if lam is None:
            continue
        M = oracle_exists_simple(q, Weight.explicit(lam), {v: 1 for v in sup}).rep
        kind = rng.random()
        if kind < 0.3:
            # add a point module at a vertex where lam vanishes
            rest = [v for v in window if v not in sup]
            if rest:
                j = rng.choice(rest)
                lam[j] = Fraction(0)
                M = direct_sum([M, Rep(q, {j: 1})])
        elif kind < 0.5:
            M = direct_sum([M, M])
        for v in window:
            lam.setdefault(v, rand_frac(rng))
        lamw = Weight.explicit(lam)
        M = gauge_rank1(rng, M)
        assert check_rank1(M, lamw)
        return M, lamw


def random_nu0_rank2(rng, q: Quiver, window) -> tuple[WreathRep, Weight]:
    subsets = connected_subsets(q, window)
    while True:
        sup = rng.choice(subsets)
        lam = simple_on(rng, q, sup, {})
        if lam is None:
            continue
        lamw = Weight.explicit(lam)
        Y1 = oracle_exists_simple(q, lamw, {v: 1 for v in sup}).rep
        if rng.random() < 0.5:
            X = [rng.choice([(2,), (1, 1)])]
            V = outer_tensor_induce((2,), X, [Y1], lamw)
        else:
            rest = [v for v in window if v not in sup]
            if not rest:
                continue
            j = rng.choice(rest)
            lam[j] = Fraction(0)
            lamw = Weight.explicit(lam)
            V = outer_tensor_induce((1, 1), [(1,), (1,)], [Y1, Rep(q, {j: 1})], lamw)
        for v in window:
            lam.setdefault(v, rand_frac(rng))
        lamw = Weight.explicit(lam)
        if small(V):
            return V, lamw


def random_zero_arrow(rng, q: Quiver, window, nu) -> tuple[WreathRep, Weight]:
    """``X (x) N`` induced, with parameters meeting the extension conditions."""
    while True:
        if rng.random() < 0.5:
            i = rng.choice(window)
            X = rng.choice([(2,), (1, 1)])
            a, b = is_rectangular(X)
            lam = {i: nu * (a - b)}
            V = induce(q, (2,), [X], [Rep(q, {i: 1})])
        else:
            i, j = rng.sample(window, 2)
            if j in q.neighbors(i):
                continue
            lam = {i: Fraction(0), j: Fraction(0)}
            V = induce(q, (1, 1), [(1,), (1,)], [Rep(q, {i: 1}), Rep(q, {j: 1})])
        for v in window:
            lam.setdefault(v, rand_frac(rng))
        return V, Weight.explicit(lam)


def push_through_reflections(rng, q, window, V, lam, nu, steps: int):
    for _ in range(steps):
        i = rng.choice(window)
        W, lam2 = reflect(V, i, lam, nu, check=False)
        if W.dims and small(W):
            V, lam = W, lam2
    return V, lam


def module_catalogue(seed: int, count: int):
    """``count`` random modules ``(q, window, V, lam, nu)`` across families and ranks."""
    rng = random.Random(seed)
    qs = quivers()
    out = []
    while len(out) < count:
        q, window = qs[(len(out) // 3) % len(qs)]
        kind = len(out) % 3
        if kind == 0:
            M, lam = random_rank1(rng, q, window)
            V, nu = M.as_wreath(), Fraction(0)
        elif kind == 1:
            V, lam = random_nu0_rank2(rng, q, window)
            nu = Fraction(0)
        else:
            nu = rand_nonzero(rng)
            V, lam = random_zero_arrow(rng, q, window, nu)
        V, lam = push_through_reflections(rng, q, window, V, lam, nu, rng.randint(0, 3))
        if not V.dims:
            continue
        V = gauge_wreath(rng, V)
        assert check_wreath(V, lam, nu), "generator produced a failing module"
        out.append((q, window, V, lam, nu))
    return out
