"""Independent derivation of the frozen expected values used in the C++ tests.

Uses materialized operators and numpy's LAPACK-backed SVD/eigh, none of which
share code with the C++ implementation. Run: python3 derive_expected.py
"""
import itertools
import math

import numpy as np


def closed_form_real(a):
    a11, a12, a13 = a[0]
    a21, a22, a23 = a[1]
    a31, a32, a33 = a[2]
    s_minus = math.hypot(a11 - a22, a21 + a12)
    s_plus = math.hypot(a11 + a22, a21 - a12)
    r1 = math.hypot(a13, a23)
    r2 = math.hypot(a31, a32)
    h = 0.5 * (s_minus + s_plus)
    return 0.25 * (math.hypot(a33 - h, r1 + r2) + math.hypot(a33 + h, r1 - r2)) ** 2


def brute_force_pmax(a, steps=181):
    """Grid search over real product vectors on the unit sphere (real states only)."""
    best = 0.0
    grid = np.linspace(0, math.pi, steps)
    vecs = []
    for th in grid:
        for ph in np.linspace(0, 2 * math.pi, 2 * steps):
            vecs.append((math.sin(th) * math.cos(ph), math.sin(th) * math.sin(ph), math.cos(th)))
    vecs = np.array(vecs)
    # For fixed e1, the best e2 gives |A^T e1|; maximize over e1 by grid.
    vals = np.linalg.norm(vecs @ np.array(a), axis=1) ** 2
    return vals.max()


def entropy3(rho):
    w = np.linalg.eigvalsh(rho)
    return -sum(x * math.log(x, 3) for x in w if x > 1e-15)


def trajectory(marked=0, iterations=2):
    n_states = 9
    psi0 = np.full(n_states, 1 / 3, dtype=complex)
    w = np.zeros(n_states)
    w[marked] = 1
    p_w = np.eye(n_states) - 2 * np.outer(w, w)
    p_v = 2 * np.outer(psi0, psi0.conj()) - np.eye(n_states)
    states = [("init", psi0)]
    s = psi0
    for k in range(1, iterations + 1):
        s = p_w @ s
        states.append((f"oracle-{k}", s))
        s = p_v @ s
        states.append((f"diffusion-{k}", s))
    rows = []
    for label, st in states:
        a = st.reshape(3, 3)
        sv = np.linalg.svd(a, compute_uv=False)
        pmax = sv[0] ** 2
        rho = a @ a.conj().T
        rows.append((label, abs(st[marked]) ** 2, pmax, math.sqrt(max(0, 1 - pmax)),
                     closed_form_real(a.real), entropy3(rho)))
    return rows


def main():
    theta = math.asin(1 / 3)
    print("success m=1", math.sin(3 * theta) ** 2)
    print("success m=2", math.sin(5 * theta) ** 2)
    print("roots l^2-l+16/81", np.roots([1, -1, 16 / 81]))
    post_oracle = np.full((3, 3), 1 / 3)
    post_oracle[0, 0] = -1 / 3
    print("post-oracle svd", np.linalg.svd(post_oracle, compute_uv=False))
    print("post-oracle closed form", closed_form_real(post_oracle))
    print("post-oracle brute force", brute_force_pmax(post_oracle))
    sentinel = np.zeros((3, 3))
    sentinel[0, 0] = 0.6
    sentinel[1, 2] = 0.8
    print("sentinel closed form", closed_form_real(sentinel),
          "svd", np.linalg.svd(sentinel, compute_uv=False) ** 2,
          "brute", brute_force_pmax(sentinel))
    print("maxent closed", closed_form_real(np.eye(3) / math.sqrt(3)))
    bell = np.zeros((3, 3))
    bell[0, 0] = bell[1, 1] = 1 / math.sqrt(2)
    print("bell closed", closed_form_real(bell), "entropy", entropy3(bell @ bell.T),
          "log3(2)", math.log(2, 3))
    print("G(1/3)", math.sqrt(2 / 3), "G(0.5)", math.sqrt(0.5))
    for N in (4, 9, 2 ** 20):
        th = math.asin(math.sqrt(1 / N))
        print("optimal iterations", N, round((math.pi / (2 * th) - 1) / 2))
    print("trajectory rows (label, success, pmax, g_oracle, g_closed_as_pmax, entropy)")
    for row in trajectory():
        label, succ, pmax, g, pc, ent = row
        print(f"  {label:12s} success={succ:.12g} pmax={pmax:.12g} g={g:.12g} "
              f"pmax_closed={pc:.12g} g_closed={math.sqrt(max(0, 1 - pc)):.12g} S={ent:.12g}")
    for N in (9, 27):
        th = math.asin(math.sqrt(1 / N))
        print(N, [f"{math.sin((2 * m + 1) * th) ** 2:.15g}" for m in range(0, 11)])


if __name__ == "__main__":
    main()
