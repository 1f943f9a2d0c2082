"""Representations of Hom-Lie algebras and their Hom-duals.

A representation is a carrier space with a twist beta and an action rho
satisfying two compatibility axioms (checked, never assumed):

    (i)  rho(phi(x)) beta = beta rho(x)
    (ii) rho([x,y]) beta = rho(phi(x)) rho(y) - rho(phi(y)) rho(x)

The dual action on V* twists rho by phi before dualizing:
rho"(x) = -(rho(phi(x)))^T in the dual basis, with twist beta^T. That
candidate is always well defined as data but is a representation exactly
when two extra identities hold; weak involutivity rho(phi^2(x)) = rho(x)
is the sufficient condition everything downstream leans on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hom_lie import HomLieAlgebra, is_weakly_involutive, validate_hom_lie
from .report import CheckReport, InvalidStructureError, Witness, combined, failed, passed
from .tensor import Matrix, ShapeError, Tensor3, Vector, Q


@dataclass(frozen=True)
class Representation:
    base: HomLieAlgebra
    beta: Matrix
    action: tuple[Matrix, ...]  # action[i] = rho(e_i), one m x m matrix per basis vector

    def __init__(self, base: HomLieAlgebra, beta: Matrix, action):
        action = tuple(action)
        m = beta.nrows
        if beta.ncols != m:
            raise ShapeError("carrier twist must be square")
        if len(action) != base.dim:
            raise ShapeError(
                f"need one action matrix per algebra basis vector "
                f"({base.dim}), got {len(action)}"
            )
        for a in action:
            if a.nrows != m or a.ncols != m:
                raise ShapeError("action matrices must match carrier dimension")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "action", action)

    @property
    def carrier_dim(self) -> int:
        return self.beta.nrows

    def rho_of(self, x: Vector) -> Matrix:
        """rho(x) for x in algebra coordinates."""
        out = Matrix.zero(self.carrier_dim)
        for i in range(self.base.dim):
            if x[i]:
                out = out + self.action[i].scale(x[i])
        return out

    def rho_twisted(self, i: int) -> Matrix:
        """rho(phi(e_i))."""
        return self.rho_of(self.base.twisted(self.base.basis(i)))


def validate_representation(r: Representation) -> CheckReport:
    a = r.base
    n = a.dim

    ax1 = passed("rep-axiom-twist")
    for i in range(n):
        res = r.rho_twisted(i) @ r.beta - r.beta @ r.action[i]
        if not res.is_zero():
            ax1 = failed("rep-axiom-twist", [Witness((i + 1,), res)])
            break

    ax2 = passed("rep-axiom-bracket")
    for i in range(n):
        for j in range(n):
            lhs = r.rho_of(a.bracket_of(a.basis(i), a.basis(j))) @ r.beta
            rhs = r.rho_twisted(i) @ r.action[j] - r.rho_twisted(j) @ r.action[i]
            res = lhs - rhs
            if not res.is_zero():
                ax2 = failed("rep-axiom-bracket", [Witness((i + 1, j + 1), res)])
                break
        if not ax2.ok:
            break

    return combined("representation", [ax1, ax2])


def adjoint_rep(a: HomLieAlgebra) -> Representation:
    """(g, phi, ad): the algebra acting on itself by the bracket."""
    return Representation(a, a.twist, tuple(a.ad(i) for i in range(a.dim)))


def is_weakly_involutive_rep(r: Representation) -> CheckReport:
    """rho(phi^2(x)) = rho(x) on basis vectors."""
    phi2 = r.base.twist @ r.base.twist
    for i in range(r.base.dim):
        res = r.rho_of(phi2.apply(r.base.basis(i))) - r.action[i]
        if not res.is_zero():
            return failed("weakly-involutive-rep", [Witness((i + 1,), res)])
    return passed("weakly-involutive-rep")


def dual_action_candidate(r: Representation) -> Representation:
    """The dual-action data on V*: twist beta^T, rho"(e_i) = -rho(phi(e_i))^T.

    Purely mechanical; whether this is an actual representation is not
    automatic (see hom_dual_representation), and some verdict pipelines
    need the raw candidate even when it fails to be one.
    """
    return Representation(
        r.base,
        r.beta.transpose(),
        tuple(-(r.rho_twisted(i).transpose()) for i in range(r.base.dim)),
    )


def hom_dual_exists(r: Representation) -> CheckReport:
    """The two identities that make the dual candidate a representation:

        (i)  beta rho(x) = beta rho(phi^2(x))
        (ii) rho(phi^2([x,y])) beta = rho(phi(x)) rho(phi^2(y))
                                      - rho(phi(y)) rho(phi^2(x))

    Weak involutivity of r implies both, so the info field records that
    verdict alongside.
    """
    a = r.base
    n = a.dim
    phi2 = a.twist @ a.twist

    cond1 = passed("dual-exists-i")
    for i in range(n):
        res = r.beta @ r.action[i] - r.beta @ r.rho_of(phi2.apply(a.basis(i)))
        if not res.is_zero():
            cond1 = failed("dual-exists-i", [Witness((i + 1,), res)])
            break

    cond2 = passed("dual-exists-ii")
    for i in range(n):
        for j in range(n):
            lhs = r.rho_of(phi2.apply(a.bracket_of(a.basis(i), a.basis(j)))) @ r.beta
            rhs = r.rho_twisted(i) @ r.rho_of(phi2.apply(a.basis(j))) - r.rho_twisted(
                j
            ) @ r.rho_of(phi2.apply(a.basis(i)))
            res = lhs - rhs
            if not res.is_zero():
                cond2 = failed("dual-exists-ii", [Witness((i + 1, j + 1), res)])
                break
        if not cond2.ok:
            break

    return combined(
        "hom-dual-exists",
        [cond1, cond2],
        weakly_involutive=is_weakly_involutive_rep(r).ok,
    )


def hom_dual_representation(r: Representation) -> Representation:
    """The Hom-dual representation (V*, beta^T, rho" = rho* after phi).

    Raises with the diagnostic report when the existence identities fail;
    the weakly involutive case always passes the gate.
    """
    gate = hom_dual_exists(r)
    if not gate.ok:
        raise InvalidStructureError(
            "dual action candidate is not a representation", gate
        )
    return dual_action_candidate(r)


def rep_double_dual_is_identity(r: Representation) -> CheckReport:
    """Dualizing twice returns the original action matrices exactly."""
    dd = dual_action_candidate(dual_action_candidate(r))
    if dd.beta != r.beta:
        return failed(
            "double-dual-identity", [Witness((0,), dd.beta - r.beta, "twist differs")]
        )
    for i in range(r.base.dim):
        res = dd.action[i] - r.action[i]
        if not res.is_zero():
            return failed("double-dual-identity", [Witness((i + 1,), res)])
    return passed("double-dual-identity")


def semidirect_product(a: HomLieAlgebra, r: Representation) -> HomLieAlgebra:
    """g acting on an abelian copy of V:

        [(x,u), (y,v)] = ([x,y], rho(x)v - rho(y)u),  twist phi (+) beta.
    """
    n, m = a.dim, r.carrier_dim
    d = n + m
    box = [[[Q(0)] * d for _ in range(d)] for _ in range(d)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                box[i][j][k] = a.bracket[i, j, k]
    for i in range(n):
        rho_i = r.action[i]
        for b in range(m):
            # [(e_i,0),(0,v_b)] = (0, rho(e_i) v_b)
            col = rho_i.col(b)
            for k in range(m):
                box[i][n + b][n + k] = col[k]
                box[n + b][i][n + k] = -col[k]
    tw = [[Q(0)] * d for _ in range(d)]
    for i in range(n):
        for j in range(n):
            tw[i][j] = a.twist[i, j]
    for i in range(m):
        for j in range(m):
            tw[n + i][n + j] = r.beta[i, j]
    return HomLieAlgebra(Tensor3(box), Matrix(tw), f"{a.label or 'g'}|xV")


def semidirect_weak_involutivity_criteria(
    a: HomLieAlgebra, r: Representation
) -> CheckReport:
    """Weak involutivity of g |x V by parts, cross-checked against the
    direct verdict on the constructed product:

        (i)   g weakly involutive
        (ii)  rho weakly involutive
        (iii) rho(x) beta^2 = rho(x)

    The conjunction provably equals the direct check; 'criteria-match-direct'
    records that the two verdicts agree on this instance.
    """
    c1 = is_weakly_involutive(a)
    c2 = is_weakly_involutive_rep(r)
    beta2 = r.beta @ r.beta
    c3 = passed("action-fixes-carrier-square")
    for i in range(a.dim):
        res = r.action[i] @ beta2 - r.action[i]
        if not res.is_zero():
            c3 = failed("action-fixes-carrier-square", [Witness((i + 1,), res)])
            break
    direct = is_weakly_involutive(semidirect_product(a, r))
    agree = (c1.ok and c2.ok and c3.ok) == direct.ok
    match = (
        passed("criteria-match-direct")
        if agree
        else failed(
            "criteria-match-direct",
            [Witness((0,), Q(1), "conjunction of criteria differs from direct check")],
        )
    )
    return combined(
        "semidirect-weak-involutivity",
        [c1, c2, c3, match],
        direct_verdict=direct.verdict,
    )


def dual_semidirect_weak_involutivity_criteria(
    a: HomLieAlgebra, r: Representation
) -> CheckReport:
    """Variant for g |x V* via the dual action (r must be weakly involutive):

        (i)  g weakly involutive
        (ii) rho(phi(x)) beta^2 = rho(phi(x))

    Cross-checked against the direct verdict on the constructed product.
    """
    wi = is_weakly_involutive_rep(r)
    if not wi.ok:
        raise InvalidStructureError(
            "dual semidirect criteria need a weakly involutive representation", wi
        )
    c1 = is_weakly_involutive(a)
    beta2 = r.beta @ r.beta
    c2 = passed("twisted-action-fixes-carrier-square")
    for i in range(a.dim):
        res = r.rho_twisted(i) @ beta2 - r.rho_twisted(i)
        if not res.is_zero():
            c2 = failed(
                "twisted-action-fixes-carrier-square", [Witness((i + 1,), res)]
            )
            break
    direct = is_weakly_involutive(semidirect_product(a, hom_dual_representation(r)))
    agree = (c1.ok and c2.ok) == direct.ok
    match = (
        passed("criteria-match-direct")
        if agree
        else failed(
            "criteria-match-direct",
            [Witness((0,), Q(1), "conjunction of criteria differs from direct check")],
        )
    )
    return combined(
        "dual-semidirect-weak-involutivity",
        [c1, c2, match],
        direct_verdict=direct.verdict,
    )


def check_rep_equivalence(r1: Representation, r2: Representation, varphi: Matrix) -> CheckReport:
    """varphi rho1(x) = rho2(x) varphi and beta2 varphi = varphi beta1."""
    if varphi.nrows != r2.carrier_dim or varphi.ncols != r1.carrier_dim:
        raise ShapeError("equivalence map has wrong shape")
    if varphi.nrows != varphi.ncols or varphi.det() == 0:
        raise ShapeError("equivalence map must be square and invertible")
    if r1.base.dim != r2.base.dim:
        raise ShapeError("representations live over different algebras")

    inter = passed("equivalence-intertwines-action")
    for i in range(r1.base.dim):
        res = varphi @ r1.action[i] - r2.action[i] @ varphi
        if not res.is_zero():
            inter = failed("equivalence-intertwines-action", [Witness((i + 1,), res)])
            break

    res = r2.beta @ varphi - varphi @ r1.beta
    tw = (
        passed("equivalence-intertwines-twist")
        if res.is_zero()
        else failed("equivalence-intertwines-twist", [Witness((0,), res)])
    )
    return combined("rep-equivalence", [inter, tw])


def validate_all(a: HomLieAlgebra, r: Representation) -> CheckReport:
    """Convenience: algebra validity + representation axioms in one report."""
    return combined("algebra-and-representation", [validate_hom_lie(a), validate_representation(r)])
