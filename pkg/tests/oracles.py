"""Brute-force reference implementations, kept deliberately dumb.

Everything here expands definitions into raw loops over structure
constants, with none of the matrix factoring the library uses. The
frozen numbers in the test suite were produced by these functions first
and then pinned; the tests assert library == oracle == frozen value.
"""

from fractions import Fraction as Q

from homlie.hom_lie import HomLieAlgebra
from homlie.tensor import Matrix, Tensor3, Vector


def vec(a: HomLieAlgebra, i: int) -> list[Q]:
    return [Q(1) if k == i else Q(0) for k in range(a.dim)]


def twist_vec(a: HomLieAlgebra, x: list[Q]) -> list[Q]:
    n = a.dim
    return [sum((a.twist[k, m] * x[m] for m in range(n)), Q(0)) for k in range(n)]


def bracket_vec(a: HomLieAlgebra, x: list[Q], y: list[Q]) -> list[Q]:
    n = a.dim
    out = [Q(0)] * n
    for i in range(n):
        for j in range(n):
            c = x[i] * y[j]
            if c:
                for k in range(n):
                    out[k] += c * a.bracket[i, j, k]
    return out


def oracle_hom_jacobi(a: HomLieAlgebra, i: int, j: int, k: int) -> Vector:
    """[phi(e_i), [e_j, e_k]] + [phi(e_j), [e_k, e_i]] + [phi(e_k), [e_i, e_j]]."""
    total = [Q(0)] * a.dim
    for p, q, r in ((i, j, k), (j, k, i), (k, i, j)):
        term = bracket_vec(a, twist_vec(a, vec(a, p)), bracket_vec(a, vec(a, q), vec(a, r)))
        total = [s + t for s, t in zip(total, term)]
    return Vector(total)


def oracle_weak_involutivity(a: HomLieAlgebra, i: int, j: int) -> Vector:
    """[phi^2(e_i), e_j] - [e_i, e_j]."""
    phi2 = twist_vec(a, twist_vec(a, vec(a, i)))
    lhs = bracket_vec(a, phi2, vec(a, j))
    rhs = bracket_vec(a, vec(a, i), vec(a, j))
    return Vector([x - y for x, y in zip(lhs, rhs)])


def oracle_r_square(a: HomLieAlgebra, rc: Matrix) -> Tensor3:
    """[r,r] by expanding r into elementary tensors: for r = sum x_i (x) y_i,

        sum_{i,j}  [x_i,x_j] (x) phi(y_i) (x) phi(y_j)
                 + phi(x_i) (x) [y_i,x_j] (x) phi(y_j)
                 + phi(x_i) (x) phi(x_j) (x) [y_i,y_j].
    """
    n = a.dim
    out = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]

    def rank1(u: list[Q], v: list[Q], w: list[Q], c: Q):
        for x in range(n):
            if u[x]:
                for y in range(n):
                    if v[y]:
                        for z in range(n):
                            if w[z]:
                                out[x][y][z] += c * u[x] * v[y] * w[z]

    for p in range(n):
        for m in range(n):
            if rc[p, m] == 0:
                continue
            for s in range(n):
                for mm in range(n):
                    c = rc[p, m] * rc[s, mm]
                    if c == 0:
                        continue
                    ep, em = vec(a, p), vec(a, m)
                    es, emm = vec(a, s), vec(a, mm)
                    rank1(bracket_vec(a, ep, es), twist_vec(a, em), twist_vec(a, emm), c)
                    rank1(twist_vec(a, ep), bracket_vec(a, em, es), twist_vec(a, emm), c)
                    rank1(twist_vec(a, ep), twist_vec(a, es), bracket_vec(a, em, emm), c)
    return Tensor3(out)


def oracle_cobracket(a: HomLieAlgebra, rc: Matrix) -> Tensor3:
    """delta(e_k) = sum over elementary tensors e_p (x) e_m of r of

        phi(e_p) (x) [e_k, e_m]  +  [e_k, e_p] (x) phi(e_m).
    """
    n = a.dim
    box = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for k in range(n):
        ek = vec(a, k)
        for p in range(n):
            for m in range(n):
                c = rc[p, m]
                if c == 0:
                    continue
                fp, fm = twist_vec(a, vec(a, p)), twist_vec(a, vec(a, m))
                bp = bracket_vec(a, ek, vec(a, p))
                bm = bracket_vec(a, ek, vec(a, m))
                for i in range(n):
                    for j in range(n):
                        box[k][i][j] += c * (fp[i] * bm[j] + bp[i] * fm[j])
    return Tensor3(box)


def oracle_jac_delta(a: HomLieAlgebra, delta: Tensor3, k: int) -> Tensor3:
    """Cyclic sum of (phi (x) delta) delta(e_k), written out per rotation."""
    n = a.dim
    out = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = delta[k, i, j]
            if v == 0:
                continue
            for aa in range(n):
                for b in range(n):
                    for c in range(n):
                        out[aa][b][c] += v * (
                            a.twist[aa, i] * delta[j, b, c]
                            + a.twist[b, i] * delta[j, c, aa]
                            + a.twist[c, i] * delta[j, aa, b]
                        )
    return Tensor3(out)


def oracle_ad3(a: HomLieAlgebra, x: list[Q], t: Tensor3) -> Tensor3:
    """ad_{phi(x)} acting on one slot at a time, phi on the others."""
    n = a.dim
    fx = twist_vec(a, x)
    ad = [[Q(0)] * n for _ in range(n)]  # ad[k][j] = coefficient of e_k in [phi(x), e_j]
    for j in range(n):
        col = bracket_vec(a, fx, vec(a, j))
        for k in range(n):
            ad[k][j] = col[k]
    phi = a.twist
    out = [[[Q(0)] * n for _ in range(n)] for _ in range(n)]
    for p in range(n):
        for q in range(n):
            for r in range(n):
                v = t[p, q, r]
                if v == 0:
                    continue
                for aa in range(n):
                    for b in range(n):
                        for c in range(n):
                            out[aa][b][c] += v * (
                                ad[aa][p] * phi[b, q] * phi[c, r]
                                + phi[aa, p] * ad[b][q] * phi[c, r]
                                + phi[aa, p] * phi[b, q] * ad[c][r]
                            )
    return Tensor3(out)


def oracle_o_defect(action: list[Matrix], a: HomLieAlgebra, t: Matrix, i: int, j: int) -> Vector:
    """OT(v_i, v_j) = [T(v_i), T(v_j)] - T(rho(T(v_i)) v_j - rho(T(v_j)) v_i)."""
    n, m = t.nrows, t.ncols
    tu = [t[k, i] for k in range(n)]
    tv = [t[k, j] for k in range(n)]

    def rho_apply(x: list[Q], col: int) -> list[Q]:
        out = [Q(0)] * m
        for b in range(n):
            if x[b]:
                for k in range(m):
                    out[k] += x[b] * action[b][k, col]
        return out

    inner = [p - q for p, q in zip(rho_apply(tu, j), rho_apply(tv, i))]
    t_inner = [
        sum((t[k, q] * inner[q] for q in range(m)), Q(0)) for k in range(n)
    ]
    lhs = bracket_vec(a, tu, tv)
    return Vector([x - y for x, y in zip(lhs, t_inner)])


def oracle_form_invariance(a: HomLieAlgebra, gram: Matrix, i: int, j: int, k: int) -> Q:
    """B([e_i,e_j], e_k) - B(e_i, [phi(e_j), e_k])."""
    n = a.dim

    def b(x: list[Q], y: list[Q]) -> Q:
        return sum(
            (x[p] * gram[p, q] * y[q] for p in range(n) for q in range(n)), Q(0)
        )

    lhs = b(bracket_vec(a, vec(a, i), vec(a, j)), vec(a, k))
    rhs = b(vec(a, i), bracket_vec(a, twist_vec(a, vec(a, j)), vec(a, k)))
    return lhs - rhs
