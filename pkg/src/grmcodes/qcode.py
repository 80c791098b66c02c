"""Quantum stabilizer code parameters from classical codes.

Two constructions are implemented at the classical-code level:

* CSS: nested codes C1 <= C2 over GF(q) give an [[n, k2-k1, d]]_q code
  with d the minimum weight over (C2 minus C1) union (C1-perp minus
  C2-perp); when C1 = C2 the minimum runs over C1 union C1-perp instead.
* Hermitian: a code C over GF(q^2) contained in its Hermitian dual gives
  an [[n, n-2k, d]]_q code with d the minimum weight of C-perp_h minus C.

Records carry exact parameters whenever the distance enumeration finished;
when it cannot, the record degrades to a lower-bound distance and says so.
Stabilizer matrices are emitted alongside and checked for symplectic
self-orthogonality (after the basis-(1, gamma) expansion in the Hermitian
case).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

import numpy as np

from . import lincode
from .errors import (
    CapExceeded,
    DimensionMismatch,
    FieldMismatch,
    InexactParameters,
    NotNested,
    NotSelfOrthogonal,
    OrderOutOfRange,
)
from .gf import FieldSpec, extension_pair_for
from .grm import build_grm, dual_order, grm_dimension, grm_distance
from .lincode import DEFAULT_CAP, LinearCode


@dataclass
class StabilizerMatrix:
    """Generator matrix of the stabilizer group, at the classical level.

    CSS records hold an (n-k) x 2n matrix over GF(q) whose left half is
    the X part (rows generating C1, then zeros) and right half the Z part
    (zeros, then rows generating C2-perp).  Hermitian records hold the
    k x n generator of the self-orthogonal code over GF(q^2); its GF(q)
    expansion spans rows (a | b) with c = a + gamma*b for c in {g, gamma*g}.
    """

    kind: str
    field: FieldSpec
    n: int
    matrix: np.ndarray

    def x_part(self) -> np.ndarray:
        assert self.kind == "css"
        return self.matrix[:, : self.n]

    def z_part(self) -> np.ndarray:
        assert self.kind == "css"
        return self.matrix[:, self.n :]

    def expanded(self) -> np.ndarray:
        """GF(q) symplectic form of the generators, shape (rows, 2n)."""
        if self.kind == "css":
            return self.matrix
        pair = extension_pair_for(self.field)
        ext = self.field
        rows = np.vstack([self.matrix, ext.MUL[pair.gamma, self.matrix]])
        return np.hstack([pair.dec_a[rows], pair.dec_b[rows]])

    def base_field(self) -> FieldSpec:
        if self.kind == "css":
            return self.field
        return extension_pair_for(self.field).sub

    def symplectic_gram(self) -> np.ndarray:
        """X*Z^T - Z*X^T over the base field; zero iff self-orthogonal."""
        f = self.base_field()
        M = self.expanded()
        X, Z = M[:, : self.n], M[:, self.n :]
        a = f.matmul(X, Z.T)
        b = f.matmul(Z, X.T)
        return f.sub_arrays(a, b)

    def is_self_orthogonal(self) -> bool:
        return not np.any(self.symplectic_gram())


@dataclass
class QuantumCodeRecord:
    """An [[n, k, d]]_q record with provenance and exactness flags.

    A True lower-bound flag means the stored value is only a promise from
    the construction, not an enumerated parameter.
    """

    q: int
    n: int
    k: int
    d: int
    k_is_lower_bound: bool = False
    d_is_lower_bound: bool = False
    pure: Optional[bool] = None
    construction: str = ""
    provenance: dict = dc_field(default_factory=dict)
    stabilizer: Optional[StabilizerMatrix] = None

    @property
    def exact(self) -> bool:
        return not (self.k_is_lower_bound or self.d_is_lower_bound)

    @property
    def singleton_slack(self) -> int:
        if not self.exact:
            raise InexactParameters("Singleton slack needs exact parameters")
        return self.n - self.k - 2 * (self.d - 1)

    @property
    def is_mds(self) -> bool:
        return self.singleton_slack == 0

    def params_str(self) -> str:
        k = f">={self.k}" if self.k_is_lower_bound else str(self.k)
        d = f">={self.d}" if self.d_is_lower_bound else str(self.d)
        return f"[[{self.n},{k},{d}]]_{self.q}"

    def to_dict(self) -> dict:
        out = {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "k_is_lower_bound": self.k_is_lower_bound,
            "d_is_lower_bound": self.d_is_lower_bound,
            "pure": self.pure,
            "construction": self.construction,
            "params": self.params_str(),
            "provenance": self.provenance,
        }
        if self.exact:
            out["singleton_slack"] = self.singleton_slack
            out["mds"] = self.is_mds
        return out


def singleton_check(rec: QuantumCodeRecord) -> int:
    """Quantum Singleton slack n - k - 2(d-1); zero marks an MDS record."""
    return rec.singleton_slack


def _min_weight_or_none(code: LinearCode, cap: int, budget: int) -> Optional[int]:
    if code.k == 0:
        return None
    return lincode.exact_min_weight(code, cap, budget)


def _resolve_support_budget(cap: int, support_budget: Optional[int]) -> int:
    # one user-facing ceiling: a small cap also shrinks the support search
    return min(2 * 10**6, cap) if support_budget is None else support_budget


def css(
    C1: LinearCode,
    C2: LinearCode,
    cap: int = DEFAULT_CAP,
    d_lower_bound: Optional[int] = None,
    support_budget: Optional[int] = None,
) -> QuantumCodeRecord:
    """CSS construction from nested classical codes C1 <= C2.

    The distance enumeration runs over both difference sets; if it cannot
    finish within the caps the record degrades to the supplied lower bound
    (or the trivial bound 1) with the flag set.
    """
    support_budget = _resolve_support_budget(cap, support_budget)
    if C1.field is not C2.field:
        raise FieldMismatch("CSS inputs live over different fields")
    if C1.n != C2.n:
        raise DimensionMismatch("CSS inputs have different lengths")
    if not C1.is_subcode_of(C2):
        raise NotNested("CSS needs C1 contained in C2")
    n = C1.n
    k = C2.k - C1.k
    q = C1.field.q
    C2perp = C2.dual()
    C1perp = C1.dual()

    prov: dict = {
        "n": n,
        "k1": C1.k,
        "k2": C2.k,
        "branch": "strict" if C1.k < C2.k else "equal",
        "cap": cap,
    }
    pure: Optional[bool] = None
    d_is_bound = False
    try:
        if C1.k < C2.k:
            w_right = lincode.exact_difference_weight(C2, C1, cap, support_budget)
            w_left = lincode.exact_difference_weight(C1perp, C2perp, cap, support_budget)
            d = min(w_right, w_left)
            wt_c2 = _min_weight_or_none(C2, cap, support_budget)
            wt_c1perp = _min_weight_or_none(C1perp, cap, support_budget)
            pure = w_right == wt_c2 and w_left == wt_c1perp
            prov.update(
                {
                    "wt_diff_c2_c1": w_right,
                    "wt_diff_c1perp_c2perp": w_left,
                    "wt_c2": wt_c2,
                    "wt_c1perp": wt_c1perp,
                }
            )
        else:
            candidates = [
                w
                for w in (
                    _min_weight_or_none(C1, cap, support_budget),
                    _min_weight_or_none(C1perp, cap, support_budget),
                )
                if w is not None
            ]
            d = min(candidates)
            pure = True
    except CapExceeded:
        d = d_lower_bound if d_lower_bound is not None else 1
        d_is_bound = True
        prov["distance_capped"] = True

    rows = np.zeros((C1.k + C2perp.k, 2 * n), dtype=np.uint8)
    rows[: C1.k, :n] = C1.gen
    rows[C1.k :, n:] = C2perp.gen
    stab = StabilizerMatrix("css", C1.field, n, rows)
    assert stab.is_self_orthogonal(), "CSS stabilizer failed the symplectic check"

    return QuantumCodeRecord(
        q=q,
        n=n,
        k=k,
        d=d,
        d_is_lower_bound=d_is_bound,
        pure=pure,
        construction="CSS",
        provenance=prov,
        stabilizer=stab,
    )


def css_grm(
    q: int, m: int, nu1: int, nu2: int, cap: int = DEFAULT_CAP
) -> QuantumCodeRecord:
    """CSS record from the nested pair R_q(nu1, m) <= R_q(nu2, m).

    Predicted parameters [[q^m, k(nu2)-k(nu1), min(d(nu1-perp), d(nu2))]]
    are cross-checked against the enumeration whenever it finished.
    """
    if not 0 <= nu1 <= nu2 <= m * (q - 1) - 1:
        raise OrderOutOfRange(
            f"need 0 <= nu1 <= nu2 <= m(q-1)-1, got nu1={nu1}, nu2={nu2}"
        )
    g1 = build_grm(q, m, nu1)
    g2 = build_grm(q, m, nu2)
    d_pred = min(grm_distance(q, m, dual_order(q, m, nu1)), grm_distance(q, m, nu2))
    rec = css(g1.code, g2.code, cap, d_lower_bound=d_pred)
    rec.construction = "CSS"
    rec.provenance.update(
        {
            "family": "grm",
            "q": q,
            "m": m,
            "nu1": nu1,
            "nu2": nu2,
            "k_predicted": g2.k_formula - g1.k_formula,
            "d_predicted": d_pred,
        }
    )
    assert rec.k == g2.k_formula - g1.k_formula, "dimension disagrees with the closed form"
    if not rec.d_is_lower_bound:
        assert rec.d == d_pred, (
            f"enumerated distance {rec.d} disagrees with predicted {d_pred}"
        )
        assert rec.pure, "construction predicts a pure code"
    return rec


def css_grm_selfdual_pair(q: int, m: int, nu: int, cap: int = DEFAULT_CAP) -> QuantumCodeRecord:
    """CSS record from the pair (nu, nu-perp); needs 2*nu <= m(q-1)-1."""
    nu_perp = dual_order(q, m, nu)
    if nu > nu_perp:
        raise OrderOutOfRange(f"need nu <= (m(q-1)-1)/2, got nu={nu}")
    rec = css_grm(q, m, nu, nu_perp, cap)
    if not rec.d_is_lower_bound:
        assert rec.n == q**m and rec.k == q**m - 2 * grm_dimension(q, m, nu)
        assert rec.d == grm_distance(q, m, nu_perp)
    return rec


def hermitian_self_orthogonal(C: LinearCode) -> bool:
    """True iff every pair of generator rows is Hermitian-orthogonal."""
    pair = extension_pair_for(C.field)
    if C.k == 0:
        return True
    sigma = pair.frob[C.gen]
    gram = C.field.matmul(C.gen, sigma.T)
    return not np.any(gram)


def hermitian(
    C: LinearCode,
    cap: int = DEFAULT_CAP,
    d_lower_bound: Optional[int] = None,
    support_budget: Optional[int] = None,
) -> QuantumCodeRecord:
    """Hermitian construction from a self-orthogonal code over GF(q^2)."""
    support_budget = _resolve_support_budget(cap, support_budget)
    pair = extension_pair_for(C.field)
    if not hermitian_self_orthogonal(C):
        raise NotSelfOrthogonal("input is not Hermitian self-orthogonal")
    n = C.n
    k = n - 2 * C.k
    dual_h = C.hermitian_dual()
    prov: dict = {"n": n, "k_classical": C.k, "cap": cap}
    pure: Optional[bool] = None
    d_is_bound = False
    try:
        if C.k == dual_h.k:
            d = lincode.exact_min_weight(C, cap, support_budget)
            pure = True
            prov["branch"] = "self_dual"
        else:
            d = lincode.exact_difference_weight(dual_h, C, cap, support_budget)
            wt_dual = lincode.exact_min_weight(dual_h, cap, support_budget)
            pure = d == wt_dual
            prov.update({"branch": "strict", "wt_hermitian_dual": wt_dual})
    except CapExceeded:
        d = d_lower_bound if d_lower_bound is not None else 1
        d_is_bound = True
        prov["distance_capped"] = True

    stab = StabilizerMatrix("hermitian", C.field, n, C.gen.copy())
    assert stab.is_self_orthogonal(), "Hermitian stabilizer failed the symplectic check"

    return QuantumCodeRecord(
        q=pair.sub.q,
        n=n,
        k=k,
        d=d,
        d_is_lower_bound=d_is_bound,
        pure=pure,
        construction="Hermitian",
        provenance=prov,
        stabilizer=stab,
    )


def hermitian_grm_distance(q: int, nu: int) -> int:
    """Predicted distance d(nu-perp) over GF(q^2): (R+1)q^{2Q}, nu+1 = (q^2-1)Q + R."""
    Q, R = divmod(nu + 1, q * q - 1)
    return (R + 1) * q ** (2 * Q)


def hermitian_grm(q: int, m: int, nu: int, cap: int = DEFAULT_CAP) -> QuantumCodeRecord:
    """Hermitian record from R_{q^2}(nu, m); range 0 <= nu <= m(q-1)-1.

    In that range the code is self-orthogonal and the record matches
    [[q^{2m}, q^{2m} - 2k(nu), d(nu-perp)]]_q with parameters over GF(q^2).
    """
    if not 0 <= nu <= m * (q - 1) - 1:
        raise OrderOutOfRange(f"need 0 <= nu <= m(q-1)-1, got nu={nu}")
    g = build_grm(q * q, m, nu)
    d_pred = hermitian_grm_distance(q, nu)
    rec = hermitian(g.code, cap, d_lower_bound=d_pred)
    rec.provenance.update(
        {
            "family": "grm",
            "q": q,
            "m": m,
            "nu": nu,
            "k_predicted": q ** (2 * m) - 2 * g.k_formula,
            "d_predicted": d_pred,
        }
    )
    assert rec.n == q ** (2 * m)
    assert rec.k == q ** (2 * m) - 2 * g.k_formula, "dimension disagrees with the closed form"
    if not rec.d_is_lower_bound:
        assert rec.d == d_pred, (
            f"enumerated distance {rec.d} disagrees with predicted {d_pred}"
        )
        assert rec.pure, "construction predicts a pure code"
    return rec
