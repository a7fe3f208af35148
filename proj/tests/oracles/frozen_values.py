"""Independent numpy/scipy computation of the expected values frozen into the
C++ unit tests. Run with `python3 tests/oracles/frozen_values.py`.

Nothing here imports the library; entropies come from numpy eigvalsh and
measurements are parameterized by Bloch vectors.
"""
import numpy as np
from scipy.optimize import minimize

I2 = np.eye(2)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]])
SZ = np.diag([1.0, -1.0]).astype(complex)


def entropy(rho):
    w = np.linalg.eigvalsh(rho)
    w = w[w > 1e-12]
    return float(-(w * np.log2(w)).sum())


def h2(p):
    return entropy(np.diag([p, 1 - p]))


def marg_a(r):
    return np.einsum("ijkj->ik", r.reshape(2, 2, 2, 2))


def marg_b(r):
    return np.einsum("ijil->jl", r.reshape(2, 2, 2, 2))


def example(b, c):
    return (np.eye(4) + b * np.kron(SZ, I2) + c * np.kron(SX, SX)) / 4


def measured(r, theta, phi):
    n = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
    ns = n[0] * SX + n[1] * SY + n[2] * SZ
    hout, cond = 0.0, 0.0
    for s in (+1, -1):
        P = np.kron((I2 + s * ns) / 2, I2)
        m = P @ r @ P
        p = np.trace(m).real
        if p > 1e-12:
            hout -= p * np.log2(p)
            cond += p * entropy(marg_b(m) / p)
    return hout, cond


def optimum(r, which):
    sa, sab = entropy(marg_a(r)), entropy(r)

    def f(x):
        h, c = measured(r, x[0], x[1])
        return (sa if which == 1 else h) + c - sab

    best = min(
        (minimize(f, [t, p], method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-15})
         for t in np.linspace(0.1, 3.0, 7) for p in np.linspace(0, 6, 5)),
        key=lambda res: res.fun,
    )
    return best.fun


if __name__ == "__main__":
    r = example(0.5, 0.5)
    print("S_AB(example 1/2,1/2)        ", repr(entropy(r)))
    print("H2(1/4)                      ", repr(h2(0.25)))
    print("D1 at z (= D3)               ", repr(entropy(marg_a(r)) + measured(r, 0, 0)[1] - entropy(r)))
    print("D1 at x                      ", repr(entropy(marg_a(r)) + measured(r, np.pi / 2, 0)[1] - entropy(r)))
    print("D2 at x                      ", repr(sum(measured(r, np.pi / 2, 0)) - entropy(r)))
    print("D1 optimum                   ", repr(optimum(r, 1)))
    print("D2 optimum                   ", repr(optimum(r, 2)))
    print("K(example)                   ", repr(2 - entropy(r)))
    comm = np.kron(marg_a(r), I2) @ r - r @ np.kron(marg_a(r), I2)
    print("commutator max-abs           ", repr(np.abs(comm).max()))
    for a in (0.1, 0.25, 0.3, 0.4):
        psp = np.array([0, 1, 1, 0]) / np.sqrt(2)
        psm = np.array([0, 1, -1, 0]) / np.sqrt(2)
        rb = a * np.outer(psp, psp) + (1 - a) * np.outer(psm, psm)
        print(f"bell mixture a={a} D1 optimum ", repr(optimum(rb.astype(complex), 1)), " 1-H2:", repr(1 - h2(a)))
    post = np.zeros((4, 4), complex)
    for s in (+1, -1):
        P = np.kron((I2 + s * SX) / 2, I2)
        post += P @ r @ P
    print("S(post, Pi^x)                ", repr(entropy(post)))
