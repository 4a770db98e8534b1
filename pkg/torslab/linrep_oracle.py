"""
Matrix-representation oracle over GF(p).

Realizes modules over a Nakayama algebra as explicit quiver representations
and computes Hom spaces, kernels, cokernels, decompositions and extension
middle terms by exact linear algebra. It exists to check the combinatorial
rules in `nakayama` and `subcat` independently; nothing here relies on
interval arithmetic except `realize` itself.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

import numpy as np
import sympy as sp

from . import gfp
from .errors import NotIntertwiner, OracleUnsupported, ShapeMismatch, TruncatedEnumeration
from .nakayama import AlgebraSpec, HomArrow, Indec, hom_dim, indecomposables
from .observability import get_logger, log_event

LOG = get_logger("oracle")

Multiset = Tuple[Indec, ...]


@dataclass(frozen=True, eq=False)
class MatRep:
    """
    dims[v-1] is the dimension at vertex v; mats[v-1] is the matrix of the
    arrow leaving v (dim at target x dim at v), absent for the sink of a
    linear quiver.
    """
    algebra: AlgebraSpec
    p: int
    dims: Tuple[int, ...]
    mats: Tuple[np.ndarray, ...]

    def arrow(self, v: int) -> np.ndarray:
        return self.mats[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


@dataclass(frozen=True, eq=False)
class RepMorphism:
    src: MatRep
    dst: MatRep
    maps: Tuple[np.ndarray, ...]  # per vertex, dst dim x src dim


def _targets(a: AlgebraSpec) -> Dict[int, int]:
    return dict(a.arrows())


def realize(a: AlgebraSpec, ms: Sequence[Indec], p: int = 2) -> MatRep:
    """Direct sum of uniserial representations with 0/1 shift blocks."""
    return _realize(a, tuple(ms), p)


@lru_cache(maxsize=4096)
def _realize(a: AlgebraSpec, ms: Multiset, p: int) -> MatRep:
    # basis[v] lists (summand, position) pairs living at vertex v
    basis: Dict[int, List[Tuple[int, int]]] = {v: [] for v in range(1, a.n + 1)}
    for s, m in enumerate(ms):
        for k in range(m.len):
            basis[a.vertex(m.top + k)].append((s, k))
    index = {v: {b: r for r, b in enumerate(bs)} for v, bs in basis.items()}
    mats = []
    for u, w in a.arrows():
        mat = np.zeros((len(basis[w]), len(basis[u])), dtype=np.int64)
        for c, (s, k) in enumerate(basis[u]):
            if k + 1 < ms[s].len:
                mat[index[w][(s, k + 1)], c] = 1
        mat.flags.writeable = False
        mats.append(mat)
    return MatRep(a, p, tuple(len(basis[v]) for v in range(1, a.n + 1)), tuple(mats))


def _check_compatible(x: MatRep, y: MatRep) -> None:
    if x.algebra != y.algebra or x.p != y.p:
        raise ShapeMismatch(f'Representations over {x.algebra}/F_{x.p} and {y.algebra}/F_{y.p}')


def _hom_system(x: MatRep, y: MatRep) -> Tuple[np.ndarray, List[Tuple[int, int, int]]]:
    """Coefficient matrix of phi_w x_a - y_a phi_u = 0 over all arrows a: u -> w."""
    variables = [(v, r, c) for v in range(1, x.algebra.n + 1)
                 for r in range(y.dims[v - 1]) for c in range(x.dims[v - 1])]
    pos = {var: k for k, var in enumerate(variables)}
    rows = []
    for u, w in x.algebra.arrows():
        xa, ya = x.arrow(u), y.arrow(u)
        for r in range(y.dims[w - 1]):
            for c in range(x.dims[u - 1]):
                row = np.zeros(len(variables), dtype=np.int64)
                for k in range(x.dims[w - 1]):
                    row[pos[(w, r, k)]] += xa[k, c]
                for k in range(y.dims[u - 1]):
                    row[pos[(u, k, c)]] -= ya[r, k]
                rows.append(row % x.p)
    system = np.array(rows, dtype=np.int64).reshape(len(rows), len(variables))
    return system, variables


def hom_basis(x: MatRep, y: MatRep) -> List[RepMorphism]:
    _check_compatible(x, y)
    system, variables = _hom_system(x, y)
    basis = gfp.nullspace(system, x.p, ncols=len(variables))
    return [_vector_to_morphism(x, y, vec, variables) for vec in basis]


def _vector_to_morphism(x: MatRep, y: MatRep, vec: np.ndarray,
                        variables: List[Tuple[int, int, int]]) -> RepMorphism:
    maps = [np.zeros((y.dims[v], x.dims[v]), dtype=np.int64) for v in range(x.algebra.n)]
    for value, (v, r, c) in zip(vec, variables):
        maps[v - 1][r, c] = value % x.p
    return RepMorphism(x, y, tuple(maps))


def hom_basis_dim(x: MatRep, y: MatRep) -> int:
    _check_compatible(x, y)
    system, variables = _hom_system(x, y)
    return len(variables) - gfp.rank(system, x.p)


def hom_elements(x: MatRep, y: MatRep, limit: int = 4096) -> Iterator[RepMorphism]:
    """
    Every element of Hom(x, y) when p^dim <= limit; otherwise the basis
    together with all pairwise sums.
    """
    basis = hom_basis(x, y)
    p = x.p
    if p ** len(basis) <= limit:
        for coeffs in itertools.product(range(p), repeat=len(basis)):
            yield combine(x, y, basis, coeffs)
        return
    yield from basis
    for f, g in itertools.combinations(basis, 2):
        yield combine(x, y, [f, g], (1, 1))


def combine(x: MatRep, y: MatRep, basis: Sequence[RepMorphism], coeffs: Sequence[int]) -> RepMorphism:
    maps = []
    for v in range(x.algebra.n):
        acc = np.zeros((y.dims[v], x.dims[v]), dtype=np.int64)
        for c, f in zip(coeffs, basis):
            acc = acc + c * f.maps[v]
        maps.append(acc % x.p)
    return RepMorphism(x, y, tuple(maps))


def morphism_from_arrow(arrow: HomArrow, a: AlgebraSpec, p: int = 2) -> RepMorphism:
    """The basis map of a combinatorial HomArrow: position k of src goes to position dst.len - t + k."""
    x, y = realize(a, [arrow.src], p), realize(a, [arrow.dst], p)
    maps = [np.zeros((y.dims[v], x.dims[v]), dtype=np.int64) for v in range(a.n)]
    counters = [0] * a.n
    xpos, ypos = {}, {}
    for k in range(arrow.src.len):
        v = a.vertex(arrow.src.top + k)
        xpos[k] = (v, counters[v - 1])
        counters[v - 1] += 1
    counters = [0] * a.n
    for k in range(arrow.dst.len):
        v = a.vertex(arrow.dst.top + k)
        ypos[k] = (v, counters[v - 1])
        counters[v - 1] += 1
    shift = arrow.dst.len - arrow.t
    for k in range(arrow.t):
        v, c = xpos[k]
        w, r = ypos[shift + k]
        assert v == w
        maps[v - 1][r, c] = 1
    return RepMorphism(x, y, tuple(maps))


def is_intertwiner(f: RepMorphism) -> bool:
    x, y, p = f.src, f.dst, f.src.p
    for v in range(x.algebra.n):
        if f.maps[v].shape != (y.dims[v], x.dims[v]):
            return False
    for u, w in x.algebra.arrows():
        left = gfp.matmul(f.maps[w - 1], x.arrow(u), p)
        right = gfp.matmul(y.arrow(u), f.maps[u - 1], p)
        if left.shape != right.shape or (left != right).any():
            return False
    return True


def _right_inverse(A: np.ndarray, p: int) -> np.ndarray:
    'R with A R = I for A of full row rank'
    k, d = A.shape
    if k == 0:
        return np.zeros((d, 0), dtype=np.int64)
    _, pivots = gfp.row_echelon(A, p)
    assert len(pivots) == k, 'matrix is not of full row rank'
    square = A[:, pivots]
    aug = np.hstack([square, np.eye(k, dtype=np.int64)])
    R_aug, _ = gfp.row_echelon(aug, p)
    inv = R_aug[:, k:]
    out = np.zeros((d, k), dtype=np.int64)
    out[pivots, :] = inv
    return out % p


def kernel_cokernel(f: RepMorphism) -> Tuple[MatRep, MatRep]:
    """Kernel and cokernel of an intertwiner, in bases from GF(p) row reduction."""
    if not is_intertwiner(f):
        raise NotIntertwiner('Map does not commute with the arrow matrices')
    x, y, p, a = f.src, f.dst, f.src.p, f.src.algebra
    # K_v: columns span ker f_v; Q_v: rows cut out im f_v
    K = [gfp.nullspace(f.maps[v], p, ncols=x.dims[v]).T for v in range(a.n)]
    Q = [gfp.nullspace(f.maps[v].T, p, ncols=y.dims[v]) for v in range(a.n)]
    kmats, cmats = [], []
    for u, w in a.arrows():
        left_inv = _right_inverse(K[w - 1].T, p).T
        kmats.append(gfp.matmul(left_inv, gfp.matmul(x.arrow(u), K[u - 1], p), p))
        cmats.append(gfp.matmul(gfp.matmul(Q[w - 1], y.arrow(u), p), _right_inverse(Q[u - 1], p), p))
    kernel = MatRep(a, p, tuple(k.shape[1] for k in K), tuple(kmats))
    cokernel = MatRep(a, p, tuple(q.shape[0] for q in Q), tuple(cmats))
    return kernel, cokernel


def path_rank(x: MatRep, i: int, k: int) -> int:
    """Rank of the length-k path map starting at vertex i (k = 0: dimension at i)."""
    a = x.algebra
    v = a.vertex(i)
    if v is None:
        return 0
    acc = np.eye(x.dims[v - 1], dtype=np.int64)
    for step in range(k):
        u = a.vertex(i + step)
        w = a.vertex(i + step + 1)
        if w is None:
            return 0
        acc = gfp.matmul(x.arrow(u), acc, x.p)
    return gfp.rank(acc, x.p) if acc.size else 0


def decompose(x: MatRep) -> Multiset:
    """
    Multiplicity of M(i, l) is r(i,l-1) - r(i,l) - r(i-1,l) + r(i-1,l+1) in
    path ranks r(i,k). Any representation of the cyclic quiver with
    nilpotent arrows decomposes this way, so both shapes are handled.
    """
    a = x.algebra
    out: List[Indec] = []
    top_len = max(x.total_dim, 1)
    for i in range(1, a.n + 1):
        for l in range(1, top_len + 1):
            mult = (path_rank(x, i, l - 1) - path_rank(x, i, l)
                    - path_rank(x, i - 1, l) + path_rank(x, i - 1, l + 1))
            if mult < 0:
                raise OracleUnsupported(f'Negative multiplicity {mult} for M({i},{l})')
            if mult and l > a.c(i):
                raise OracleUnsupported(f'M({i},{l}) exceeds c_{i}: representation violates the relations')
            out.extend([Indec(i, l)] * mult)
    result = tuple(sorted(out))
    if realize(a, result, x.p).dims != x.dims:
        raise OracleUnsupported(f'Decomposition {list(map(str, result))} misses dimension vector {x.dims}')
    return result


def decompose_by_homs(x: MatRep) -> Multiset:
    """
    Solve dim Hom(E, x) = sum_Y m_Y dim Hom(E, Y) over all indecomposables
    exactly over Q. Independent of the rank formula; raises when the Hom
    matrix is singular or the solution is not a nonnegative integer vector.
    """
    a = x.algebra
    indecs = indecomposables(a)
    H = sp.Matrix([[hom_dim(a, e, y) for y in indecs] for e in indecs])
    if H.det() == 0:
        raise OracleUnsupported(f'Hom matrix of {a} is singular')
    h = sp.Matrix([hom_basis_dim(realize(a, [e], x.p), x) for e in indecs])
    m = H.LUsolve(h)
    out: List[Indec] = []
    for y, value in zip(indecs, m):
        if not (value.is_integer and value >= 0):
            raise OracleUnsupported(f'Hom-count solution {value} for {y} is not a multiplicity')
        out.extend([y] * int(value))
    return tuple(sorted(out))


def _relation_paths(a: AlgebraSpec) -> List[Tuple[int, int]]:
    'Zero relations as (start vertex, length); length-c_i paths from i vanish'
    out = []
    for i in range(1, a.n + 1):
        length = a.c(i)
        if all(a.vertex(i + s) is not None for s in range(length + 1)):
            out.append((i, length))
    return out


@dataclass(frozen=True)
class ExtensionClasses:
    middles: List[Multiset]
    dim: int          # dim Ext^1(t, b)
    truncated: bool


def extension_classes(a: AlgebraSpec, b: Indec, t: Indec, p: int = 2,
                      max_classes: int = 256) -> ExtensionClasses:
    """
    Middle terms of 0 -> b -> X -> t -> 0, one per nonzero extension class up
    to scalars (scalar multiples have isomorphic middle terms).

    X lives on b + t with arrow blocks [[B_a, D_a], [0, T_a]]. The cochains
    D must keep every zero relation of the algebra (a linear condition on D);
    classes are taken modulo coboundaries D_a = B_a h_u - h_w T_a.
    """
    return _extension_classes(a, b, t, p, max_classes)


@lru_cache(maxsize=8192)
def _extension_classes(a: AlgebraSpec, b: Indec, t: Indec, p: int, max_classes: int) -> ExtensionClasses:
    B, T = realize(a, [b], p), realize(a, [t], p)
    arrows = a.arrows()
    # D-variables: for arrow u->w an (dim b_w x dim t_u) block
    blocks = []
    offset = 0
    for u, w in arrows:
        shape = (B.dims[w - 1], T.dims[u - 1])
        blocks.append((u, w, shape, offset))
        offset += shape[0] * shape[1]
    nvars = offset
    if nvars == 0:
        return ExtensionClasses(middles=[], dim=0, truncated=False)

    def unpack(vec) -> Dict[int, np.ndarray]:
        return {u: np.asarray(vec[off:off + shape[0] * shape[1]], dtype=np.int64).reshape(shape)
                for u, w, shape, off in blocks}

    def relation_block(D: Dict[int, np.ndarray], start: int, length: int) -> np.ndarray:
        # upper-right block of X_{a_k} ... X_{a_1}
        verts = [a.vertex(start + s) for s in range(length + 1)]
        acc = np.zeros((B.dims[verts[-1] - 1], T.dims[verts[0] - 1]), dtype=np.int64)
        for s in range(length):
            left = np.eye(B.dims[verts[-1] - 1], dtype=np.int64)
            for r in range(length - 1, s, -1):
                left = gfp.matmul(left, B.arrow(verts[r]), p)
            right = np.eye(T.dims[verts[0] - 1], dtype=np.int64)
            for r in range(s):
                right = gfp.matmul(T.arrow(verts[r]), right, p)
            acc = acc + gfp.matmul(gfp.matmul(left, D[verts[s]], p), right, p)
        return acc % p

    relations = _relation_paths(a)
    columns = []
    for k in range(nvars):
        e = np.zeros(nvars, dtype=np.int64)
        e[k] = 1
        D = unpack(e)
        columns.append(np.concatenate([relation_block(D, i, l).ravel() for i, l in relations]
                                      or [np.zeros(0, dtype=np.int64)]))
    constraint = np.array(columns, dtype=np.int64).T if nvars else np.zeros((0, 0), dtype=np.int64)
    cocycles = gfp.nullspace(constraint, p, ncols=nvars) if nvars else np.zeros((0, 0), dtype=np.int64)

    coboundaries = []
    for v in range(1, a.n + 1):
        for r in range(B.dims[v - 1]):
            for c in range(T.dims[v - 1]):
                vec = np.zeros(nvars, dtype=np.int64)
                for u, w, shape, off in blocks:
                    block = np.zeros(shape, dtype=np.int64)
                    if u == v:  # B_a h_u
                        block = block + B.arrow(u)[:, r][:, None] * (np.arange(shape[1]) == c)[None, :]
                    if w == v:  # - h_w T_a
                        block = block - (np.arange(shape[0]) == r)[:, None] * T.arrow(u)[c, :][None, :]
                    vec[off:off + block.size] = (vec[off:off + block.size] + block.ravel()) % p
                coboundaries.append(vec)
    cob = np.array(coboundaries, dtype=np.int64).reshape(len(coboundaries), nvars)
    ext_basis = gfp.complement_basis(gfp.row_space_basis(cob, p) if len(cob) else cob, cocycles, p)
    dim = len(ext_basis)

    middles: List[Multiset] = []
    truncated = False
    for coeffs in _projective_points(dim, p):
        if len(middles) >= max_classes:
            truncated = True
            break
        vec = np.zeros(nvars, dtype=np.int64)
        for cf, row in zip(coeffs, ext_basis):
            vec = (vec + cf * row) % p
        middles.append(decompose(_middle_rep(a, B, T, unpack(vec), p)))
    log_event(LOG, "extension_classes", algebra=str(a), b=str(b), t=str(t), ext_dim=dim,
              classes=len(middles), truncated=truncated)
    return ExtensionClasses(middles=middles, dim=dim, truncated=truncated)


def _projective_points(dim: int, p: int) -> Iterator[Tuple[int, ...]]:
    'Nonzero vectors of F_p^dim whose first nonzero coordinate is 1'
    for coeffs in itertools.product(range(p), repeat=dim):
        nz = [c for c in coeffs if c]
        if nz and nz[0] == 1:
            yield coeffs


def _middle_rep(a: AlgebraSpec, B: MatRep, T: MatRep, D: Dict[int, np.ndarray], p: int) -> MatRep:
    mats = []
    for u, w in a.arrows():
        top = np.hstack([B.arrow(u), D[u]])
        bottom = np.hstack([np.zeros((T.dims[w - 1], B.dims[u - 1]), dtype=np.int64), T.arrow(u)])
        mats.append(np.vstack([top, bottom]) % p)
    dims = tuple(bd + td for bd, td in zip(B.dims, T.dims))
    return MatRep(a, p, dims, tuple(mats))


def extension_middles(a: AlgebraSpec, b: Indec, t: Indec, p: int = 2,
                      max_classes: int = 256) -> List[Multiset]:
    """Middle terms of the nonsplit extensions of t by b; raises TruncatedEnumeration above max_classes."""
    result = extension_classes(a, b, t, p, max_classes)
    if result.truncated:
        raise TruncatedEnumeration(
            f'Ext^1({t}, {b}) has more than {max_classes} classes (dim {result.dim})',
            classes=len(result.middles))
    return list(result.middles)
