"""Invariant suite run by ``cksquare check``.

Each check returns a list of failure messages; an empty list is a pass.
Checks cover N = 1 .. depth.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable, Iterator, List, Sequence, Tuple

from .analysis import analyze_site, dimension_formula, expected_signature, real_form_invariants
from .generators import (OmegaVector, Series, basis, membership_conditions, site_min_generators,
                         site_realization)
from .matrix import CKMatrix, commutator, conj_transpose, linear_combination, mat_mul, re_trace, realify
from .scalar import FieldTag, KElement, k_conj, k_mul, k_norm
from .span import LieBasis, is_subspace, jacobi_holds, lie_closure, same_span
from .square import FIELD_ORDER, SERIES_ORDER, build_square, embed_double, embed_scalar, render_json

SITES = [(s, f) for s in SERIES_ORDER for f in FIELD_ORDER]
Check = Callable[[int], List[str]]


def omega_samples(N: int) -> List[OmegaVector]:
    """All-ones, one negative, one zero, all negative."""
    pats = [[1] * N, [1] + [-1] * (N - 1) if N > 1 else [-1], [1] + [0] * (N - 1) if N > 1 else [0]]
    pats.append([-1] * N)
    out = []
    for p in pats:
        w = OmegaVector(p)
        if w not in out:
            out.append(w)
    return out


def _random_k(rng: random.Random, tag: FieldTag) -> KElement:
    return KElement(tag, [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(tag.dim)])


def _random_matrix(rng: random.Random, n: int, tag: FieldTag) -> CKMatrix:
    return CKMatrix(tag, [[_random_k(rng, tag) for _ in range(n)] for _ in range(n)])


def check_scalars(depth: int) -> List[str]:
    rng = random.Random(1)
    fails = []
    i, j, k = (KElement.unit(FieldTag.Q, a) for a in (1, 2, 3))
    if not (k_mul(i, j) == k and k_mul(j, k) == i and k_mul(k, i) == j and k_mul(j, i) == -k):
        fails.append("quaternion multiplication table")
    for tag in FieldTag:
        for _ in range(50):
            x, y, z = (_random_k(rng, tag) for _ in range(3))
            if k_mul(k_mul(x, y), z) != k_mul(x, k_mul(y, z)):
                fails.append(f"associativity over {tag.name}")
            if k_conj(k_mul(x, y)) != k_mul(k_conj(y), k_conj(x)):
                fails.append(f"conjugation anti-automorphism over {tag.name}")
            if k_norm(k_mul(x, y)) != k_norm(x) * k_norm(y):
                fails.append(f"norm multiplicativity over {tag.name}")
    return sorted(set(fails))


def check_matrices(depth: int) -> List[str]:
    rng = random.Random(2)
    fails = []
    for tag in FieldTag:
        for _ in range(5):
            a, b = _random_matrix(rng, 3, tag), _random_matrix(rng, 3, tag)
            if conj_transpose(mat_mul(a, b)) != mat_mul(conj_transpose(b), conj_transpose(a)):
                fails.append(f"(AB)^dagger over {tag.name}")
            if re_trace(mat_mul(a, b)) != re_trace(mat_mul(b, a)):
                fails.append(f"Re tr(AB) = Re tr(BA) over {tag.name}")
            if realify(commutator(a, b)) != commutator(realify(a), realify(b)):
                fails.append(f"realify bracket homomorphism over {tag.name}")
    return sorted(set(fails))


def check_cocycle(depth: int) -> List[str]:
    fails = []
    for N in range(1, depth + 1):
        for vals in itertools.product((-1, 0, 1, 2), repeat=N):
            w = OmegaVector(vals)
            for a, b, c in itertools.combinations(range(N + 1), 3):
                if w.omega(a, b) * w.omega(b, c) != w.omega(a, c):
                    fails.append(f"cocycle fails at {vals} ({a},{b},{c})")
    return fails


def check_membership(depth: int) -> List[str]:
    fails = []
    for N in range(1, min(depth, 2) + 1):
        for vals in itertools.product((-1, 0, 1, 2), repeat=N):
            for s, f in SITES:
                pred = membership_conditions(s, f, N, vals)
                for lab, m in basis(s, f, N, vals):
                    if not pred(m):
                        fails.append(f"{s.name}/{f.name} N={N} omega={vals}: {lab}")
    return fails


def check_dimensions(depth: int) -> List[str]:
    """Basis size, independence, closure and the dimension formula agree."""
    fails = []
    for N in range(1, depth + 1):
        for w in omega_samples(N):
            for s, f in SITES:
                labeled = site_realization(s, f, N, w)
                want = dimension_formula(f.dim, s.q, N)
                try:
                    b = LieBasis.from_matrices([m for _, m in labeled], [lab for lab, _ in labeled])
                    closed = lie_closure(b.matrices, max_dim=b.dim)
                except Exception as exc:  # noqa: BLE001 - reported, not raised
                    fails.append(f"{s.name}/{f.name} N={N} omega={w.pattern()}: {exc}")
                    continue
                if not (len(labeled) == b.dim == closed.dim == want):
                    fails.append(f"{s.name}/{f.name} N={N} omega={w.pattern()}: "
                                 f"{len(labeled)}/{b.dim}/{closed.dim} vs {want}")
    return fails


def check_min_generators(depth: int) -> List[str]:
    """The short generating sets reach the whole site for N >= 2 and non-zero omega."""
    fails = []
    for N in range(2, depth + 1):
        for w in omega_samples(N):
            if w.has_zero():
                continue
            for s, f in SITES:
                full = LieBasis.from_matrices([m for _, m in site_realization(s, f, N, w)])
                gen = lie_closure([m for _, m in site_min_generators(s, f, N, w)])
                if not same_span(gen, full):
                    fails.append(f"{s.name}/{f.name} N={N} omega={w.pattern()}: {gen.dim} of {full.dim}")
    return fails


def check_structure(depth: int) -> List[str]:
    """Jacobi identity, Killing ad-invariance, signatures of the named forms."""
    fails = []
    rng = random.Random(3)
    for N in range(1, depth + 1):
        for w in omega_samples(N):
            for s, f in SITES:
                site = analyze_site(s, f, N, w)
                sc, d = site.constants, site.descriptor
                tag = f"{s.name}/{f.name} N={N} omega={w.pattern()}"
                if not jacobi_holds(sc, samples=None if sc.dim <= 21 else 2000):
                    fails.append(f"{tag}: Jacobi identity")
                if not _ad_invariant(sc, site.killing, rng):
                    fails.append(f"{tag}: Killing form not ad-invariant")
                if w.has_zero():
                    if d.signature.zero == 0:
                        fails.append(f"{tag}: contraction with non-degenerate Killing form")
                else:
                    if d.signature != expected_signature(d.standard_name):
                        fails.append(f"{tag}: signature {d.signature} for {d.standard_name}")
                    if real_form_invariants(d.standard_name)[0] != d.dim:
                        fails.append(f"{tag}: dimension of {d.standard_name}")
                if s is Series.sa and all(v > 0 for v in w):
                    sig = d.signature
                    if sig.plus or (sig.zero and d.standard_name != "so(2)"):
                        fails.append(f"{tag}: compact form with signature {sig}")
    return fails


def _ad_invariant(sc, form, rng: random.Random) -> bool:
    """B([X_i,X_j], X_k) == B(X_i, [X_j,X_k])."""
    n = sc.dim
    if n <= 10:
        triples = itertools.product(range(n), repeat=3)
    else:
        triples = [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(300)]
    for i, j, k in triples:
        lhs = sum((q * form[m][k] for m, q in sc.bracket(i, j).items()), Fraction(0))
        rhs = sum((q * form[i][m] for m, q in sc.bracket(j, k).items()), Fraction(0))
        if lhs != rhs:
            return False
    return True


def check_embeddings(depth: int) -> List[str]:
    fails = []
    for N in range(1, min(depth, 2) + 1):
        for w in omega_samples(N):
            for s in SERIES_ORDER:
                for small, big in ((FieldTag.R, FieldTag.C), (FieldTag.C, FieldTag.Q)):
                    src = site_realization(s, small, N, w)
                    dst = LieBasis.from_matrices([m for _, m in site_realization(s, big, N, w)])
                    img = [embed_scalar(m, small, big) for _, m in src]
                    if not all(dst.contains(m) for m in img):
                        fails.append(f"{s.name}: {small.name} -> {big.name} N={N} omega={w.pattern()}")
            for f in FIELD_ORDER:
                sa = LieBasis.from_matrices([m for _, m in basis(Series.sa, f, N, w)])
                sl = LieBasis.from_matrices([m for _, m in basis(Series.sl, f, N, w)], strict=False)
                if not is_subspace(sa, sl):
                    fails.append(f"sa -> sl over {f.name} N={N} omega={w.pattern()}")
                fails += double_embedding_failures(f, N, w)
    return fails


def double_embedding_failures(f: FieldTag, N: int, w: OmegaVector) -> List[str]:
    """embed_double lands in the sy site and carries the site's brackets along."""
    fails = []
    sy = LieBasis.from_matrices([m for _, m in site_realization(Series.sy, f, N, w)])
    for s in (Series.sa, Series.sl):
        site = analyze_site(s, f, N, w)
        labels = site.basis.labels
        undoubled = dict(basis(s, f, N, w))
        images = [embed_double(undoubled[lab], lab) for lab in labels]
        tag = f"{s.name} -> sy over {f.name} N={N} omega={w.pattern()}"
        if not all(sy.contains(m) for m in images):
            fails.append(f"{tag}: image outside the sy span")
        if not _preserves(site.constants, images):
            fails.append(f"{tag}: brackets not preserved")
    return fails


def _preserves(sc, images: Sequence[CKMatrix]) -> bool:
    m0 = images[0]
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            want = linear_combination(((q, images[k]) for k, q in sc.bracket(i, j).items()),
                                      m0.order, m0.tag)
            if commutator(images[i], images[j]) != want:
                return False
    return True


def check_square(depth: int) -> List[str]:
    fails = []
    for N in range(1, depth + 1):
        sq = build_square(N, [1] * N)
        dims = sq.dims()
        for i in range(3):
            for j in range(3):
                if dims[i][j] != dims[j][i]:
                    fails.append(f"N={N}: dims not symmetric at ({i},{j})")
    a = render_json(build_square(min(depth, 2), [1] * min(depth, 2)))
    b = render_json(build_square(min(depth, 2), [1] * min(depth, 2)))
    if a != b:
        fails.append("square JSON is not deterministic")
    return fails


CHECKS: List[Tuple[str, Check]] = [
    ("scalar arithmetic", check_scalars),
    ("matrix identities", check_matrices),
    ("omega cocycle", check_cocycle),
    ("basis membership", check_membership),
    ("dimension concordance", check_dimensions),
    ("minimal generators", check_min_generators),
    ("structure constants and Killing forms", check_structure),
    ("embeddings", check_embeddings),
    ("square symmetry and determinism", check_square),
]


def run_checks(depth: int) -> Iterator[Tuple[str, List[str]]]:
    for name, fn in CHECKS:
        yield name, fn(depth)
