"""Independent floating point model used as a test oracle.

Everything is rebuilt from the definitions with numpy: K-matrices are
realified with left-multiplication blocks, generators come straight from
the E_ab formulas, and dimensions, closures and Killing signatures are
computed numerically. Nothing here imports cksquare.
"""

from itertools import combinations

import numpy as np

TOL = 1e-8
FIELD_DIM = {"R": 1, "C": 2, "Q": 4}


def left_block(q):
    a, b, c, d = q
    return np.array([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]], float)


UNITS = [left_block(e) for e in np.eye(4)]


def unit_block(u, d):
    """Realified unit u (0..3) restricted to a field of real dimension d."""
    return UNITS[u][:d, :d]


def E(n, i, j):
    m = np.zeros((n, n))
    m[i, j] = 1.0
    return m


def w(omega, a, b):
    return float(np.prod(omega[a:b])) if b > a else 1.0


def real_matrix(kind, n, omega, a=None, b=None, m=None):
    if kind == "J":
        return E(n, b, a) - w(omega, a, b) * E(n, a, b)
    if kind == "M":
        return E(n, b, a) + w(omega, a, b) * E(n, a, b)
    if kind == "H":
        return E(n, m, m) - E(n, 0, 0)
    return E(n, 0, 0)


BLOCKS = {"d": np.eye(2), 1: np.array([[0, 1], [-1, 0]]), 2: np.array([[0, 1], [1, 0]]),
          3: np.array([[1, 0], [0, -1]])}


def realified(x, u, d, lam=None):
    """u * x over a field of dimension d, optionally doubled, as a real matrix."""
    if lam is not None:
        x = np.kron(BLOCKS[lam], x)
    return np.kron(x, unit_block(u, d))


def _pairs(n):
    return list(combinations(range(n), 2))


def site_generators(series, field, N, omega, graded=False):
    """Realified basis of a site, written out from the definitions."""
    d = FIELD_DIM[field]
    n = N + 1
    units = list(range(1, d))
    J = [real_matrix("J", n, omega, a, b) for a, b in _pairs(n)]
    M = [real_matrix("M", n, omega, a, b) for a, b in _pairs(n)]
    H = [real_matrix("H", n, omega, m=m) for m in range(1, n)]
    E0 = [real_matrix("E", n, omega)]
    out = []
    if series == "sa":
        out += [realified(x, 0, d) for x in J]
        out += [realified(x, u, d) for u in units for x in M + H]
        if field == "Q":
            out += [realified(x, u, d) for u in units for x in E0]
    elif series == "sl":
        # graded: antihermitian type doubles diagonally, hermitian type with lambda 2
        herm = lambda kind, u: (kind != "J") if u == 0 else (kind == "J")
        for kind, xs in (("J", J), ("M", M), ("H", H)):
            for u in [0] + units:
                for x in xs:
                    lam = (2 if herm(kind, u) else "d") if graded else None
                    out.append(realified(x, u, d, lam))
        if field == "Q":
            out += [realified(x, u, d, "d" if graded else None) for u in units for x in E0]
    else:
        out += [realified(x, 0, d, "d") for x in J]
        out += [realified(x, 0, d, lam) for lam in (1, 2, 3) for x in M + H + E0]
        out += [realified(x, u, d, lam) for u in units for lam in (1, 2, 3) for x in J]
        out += [realified(x, u, d, "d") for u in units for x in M + H]
        if field == "Q":
            out += [realified(x, u, d, "d") for u in units for x in E0]
    return out


def minimal_generators(series, field, N, omega, graded=False):
    d = FIELD_DIM[field]
    n = N + 1
    units = [u for u in (1, 2) if u < d]
    J = [real_matrix("J", n, omega, a, b) for a, b in _pairs(n)]
    M = [real_matrix("M", n, omega, a, b) for a, b in _pairs(n)]
    if series == "sa":
        return [realified(x, 0, d) for x in J] + [realified(x, u, d) for u in units for x in M]
    if series == "sl":
        if graded:
            return ([realified(x, 0, d, "d") for x in J] + [realified(x, 0, d, 2) for x in M]
                    + [realified(x, u, d, "d") for u in units for x in M])
        return [realified(x, 0, d) for x in J] + [realified(x, u, d) for u in [0] + units for x in M]
    return ([realified(x, 0, d, "d") for x in J] + [realified(x, 0, d, lam) for lam in (1, 2) for x in M]
            + [realified(x, u, d, "d") for u in units for x in M])


def rank(mats):
    if not mats:
        return 0
    return int(np.linalg.matrix_rank(np.array([m.ravel() for m in mats]), tol=TOL))


def closure(mats):
    """Independent basis of the Lie algebra generated by ``mats``."""
    basis, ortho = [], []

    def add(m):
        v = m.ravel().astype(float)
        norm = np.linalg.norm(v)
        if norm < TOL:
            return
        r = v.copy()
        for _ in range(2):
            for q in ortho:
                r -= (q @ r) * q
        if np.linalg.norm(r) > 1e-7 * norm:
            ortho.append(r / np.linalg.norm(r))
            basis.append(m)

    for m in mats:
        add(m)
    i = 0
    while i < len(basis):
        for j in range(i):
            add(basis[j] @ basis[i] - basis[i] @ basis[j])
        i += 1
    return basis


def killing_signature(basis):
    """(n+, n-, n0) of trace(ad X ad Y) computed in floating point."""
    A = np.array([m.ravel() for m in basis]).T
    n = len(basis)
    ads = []
    for x in basis:
        cols = [x @ y - y @ x for y in basis]
        coords, *_ = np.linalg.lstsq(A, np.array([c.ravel() for c in cols]).T, rcond=None)
        ads.append(coords)
    B = np.array([[np.trace(ads[i] @ ads[j]) for j in range(n)] for i in range(n)])
    ev = np.linalg.eigvalsh((B + B.T) / 2)
    scale = max(1.0, np.abs(ev).max())
    return (int((ev > TOL * scale).sum()), int((ev < -TOL * scale).sum()),
            int((np.abs(ev) <= TOL * scale).sum()))


def defining_dimension(series, field, N, omega):
    """Dimension of the solution space of the defining linear conditions.

    sa: A^dagger G + G A = 0 with G = diag(1, omega_01, ...), traceless over C.
    sl: trace zero (real part of the trace over H).
    sy: the same as sa with the antisymmetric doubled metric.
    """
    d = FIELD_DIM[field]
    n = N + 1 if series in ("sa", "sl") else 2 * (N + 1)
    g = np.diag([w(omega, 0, i) for i in range(N + 1)])
    if series == "sy":
        g = np.kron(BLOCKS[1], g)
    G = np.kron(g, np.eye(d))
    rows = []
    for r in range(n):
        for c in range(n):
            for u in range(d):
                A = np.kron(E(n, r, c), unit_block(u, d))
                conds = []
                if series != "sl":
                    conds.append((A.T @ G + G @ A).ravel())
                if series == "sl" or field == "C":
                    t = np.zeros(d)
                    if r == c:
                        t[u] = 1.0
                    conds.append(t if field != "Q" else t[:1])
                rows.append(np.concatenate(conds))
    mat = np.array(rows)
    return n * n * d - int(np.linalg.matrix_rank(mat, tol=TOL))
