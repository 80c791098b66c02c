"""Puncture codes, weight witnesses, and punctured quantum codes.

The puncture code of a CSS pair (C1, C2) is the dual of the span of all
componentwise products of C1 with C2-perp; for a Hermitian code C over
GF(q^2) it is the dual over GF(q) of the trace code of the span of all
products a * b^q.  The nonzero weights r occurring in the puncture code
are exactly the lengths the quantum code can be shortened to: a weight-r
vector yields a scaled, support-restricted classical pair (or code) that
is again self-orthogonal, hence a quantum code of length r.

The Reed-Muller chain used for the MDS family walks

    P_h(R_{q^2}(nu,1))  >=  R_{q^2}(q^2-(nu+1)q, 1)|_{GF(q)}  >=  R_q(q-nu-1, 2)

where the last containment identifies GF(q)^2 with GF(q^2) through the
basis (1, gamma); the scan for a minimum-weight vector runs in the small
multivariate code and the result is carried back up the chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional, Union

import numpy as np

from .errors import (
    NotNested,
    NotSelfOrthogonal,
    OrderOutOfRange,
    PointOrderMismatch,
    WitnessInvalid,
    WitnessNotFound,
    WitnessSearchFailed,
)
from .gf import extension_pair_for, quadratic_extension
from .grm import GrmCode, build_grm, grm_dimension, grm_distance, point_matrix
from .lincode import DEFAULT_CAP, LinearCode, find_first_of_weight, product_span
from .qcode import QuantumCodeRecord, css, hermitian, hermitian_grm_distance


@dataclass
class PunctureCodeRecord:
    """A computed puncture code plus any subcodes known by construction."""

    kind: str  # "euclidean" | "hermitian"
    pcode: LinearCode
    provenance: dict = dc_field(default_factory=dict)
    known_subcodes: list = dc_field(default_factory=list)  # (label, LinearCode)

    def weights_within(self, cap: int = DEFAULT_CAP):
        return self.pcode.weight_distribution(cap)


@dataclass
class PunctureWitness:
    """A vector of the requested weight, with Hermitian coordinate scaling.

    ``scaling`` solves y_i^(q+1) = x_i on the support (entries off the
    support are zero) and is None for Euclidean witnesses.
    """

    x: np.ndarray
    support: tuple[int, ...]
    scaling: Optional[np.ndarray]
    source: str

    @property
    def weight(self) -> int:
        return len(self.support)


def _as_code(c: Union[LinearCode, GrmCode]) -> LinearCode:
    return c.code if isinstance(c, GrmCode) else c


def puncture_code_css(
    C1: Union[LinearCode, GrmCode], C2: Union[LinearCode, GrmCode]
) -> PunctureCodeRecord:
    """Euclidean puncture code: dual of the span {a*b : a in C1, b in C2-perp}.

    For a Reed-Muller pair the result equals R_q(nu2-nu1, m) exactly, and
    the lower-order codes R_q(mu, m) are recorded as known subcodes.
    """
    code1, code2 = _as_code(C1), _as_code(C2)
    if not code1.is_subcode_of(code2):
        raise NotNested("puncture code needs C1 contained in C2")
    span = product_span(code1, code2.dual())
    pcode = span.dual()
    prov = {"kind": "euclidean", "k1": code1.k, "k2": code2.k, "n": code1.n}
    known: list = []
    grm_pair = (
        isinstance(C1, GrmCode)
        and isinstance(C2, GrmCode)
        and (C1.q, C1.m) == (C2.q, C2.m)
        # the difference-order identity needs C2-perp nonzero, i.e. the
        # quantum range nu2 <= m(q-1)-1
        and C2.nu <= C2.m * (C2.q - 1) - 1
    )
    if grm_pair:
        q, m = C1.q, C1.m
        diff = C2.nu - C1.nu
        expected = build_grm(q, m, diff).code
        assert pcode == expected, "puncture code disagrees with R_q(nu2-nu1, m)"
        prov.update({"family": "grm", "q": q, "m": m, "nu1": C1.nu, "nu2": C2.nu, "grm_identity": True})
        for mu in range(diff + 1):
            sub = build_grm(q, m, mu).code
            assert sub.is_subcode_of(pcode)
            known.append((f"grm(q={q},m={m},nu={mu})", sub))
        known.sort(key=lambda item: item[1].k)
    return PunctureCodeRecord("euclidean", pcode, prov, known)


def puncture_code_hermitian(C: Union[LinearCode, GrmCode]) -> PunctureCodeRecord:
    """Hermitian puncture code: dual over GF(q) of trace(span{a * b^q}).

    For C = R_{q^2}(nu, m) every restriction R_{q^2}(mu, m)-dual|_GF(q)
    with (q+1)nu <= mu <= m(q^2-1)-1 is contained in the puncture code;
    these are materialized and recorded as known subcodes.
    """
    code = _as_code(C)
    pair = extension_pair_for(code.field)
    prod = product_span(code, code.frobenius_image())
    pcode = prod.trace_code().dual()
    prov = {"kind": "hermitian", "k_classical": code.k, "n": code.n, "q": pair.sub.q}
    known: list = []
    if isinstance(C, GrmCode):
        q2, m, nu = C.q, C.m, C.nu
        q = pair.sub.q
        assert q2 == q * q
        prov.update({"family": "grm", "m": m, "nu": nu})
        for mu in range((q + 1) * nu, m * (q2 - 1)):
            mu_perp = m * (q2 - 1) - 1 - mu
            sub = build_grm(q2, m, mu_perp).code.restriction()
            assert sub.is_subcode_of(pcode), f"restriction at mu={mu} escapes the puncture code"
            known.append((f"restriction(dual(grm(q={q2},m={m},nu={mu})))", sub))
        known.sort(key=lambda item: item[1].k)
    return PunctureCodeRecord("hermitian", pcode, prov, known)


def _attach_scaling(rec: PunctureCodeRecord, x: np.ndarray, support, source: str) -> PunctureWitness:
    scaling = None
    if rec.kind == "hermitian":
        pair = quadratic_extension(rec.pcode.field.q)
        scaling = np.zeros(len(x), dtype=np.uint8)
        for i in support:
            scaling[i] = pair.solve_norm(int(x[i]))
    return PunctureWitness(x=x, support=tuple(int(i) for i in support), scaling=scaling, source=source)


def find_weight_witness(rec: PunctureCodeRecord, r: int, cap: int = DEFAULT_CAP) -> PunctureWitness:
    """Canonically-first vector of weight exactly r in the puncture code.

    Scans the full puncture code when its span fits the cap (absence is
    then proven); otherwise scans the known subcodes smallest-first, in
    which case a miss is inconclusive and reported as such.
    """
    pcode = rec.pcode
    if r == 0:
        return _attach_scaling(rec, np.zeros(pcode.n, dtype=np.uint8), (), "zero")
    q = pcode.field.q
    if q**pcode.k <= cap:
        x = find_first_of_weight(pcode.field, pcode.gen, r)
        if x is None:
            raise WitnessNotFound(
                f"weight {r} proven absent from the puncture code", proven_absent=True
            )
        return _attach_scaling(rec, x, np.flatnonzero(x), "pcode")
    scanned_any = False
    for label, sub in rec.known_subcodes:
        if q**sub.k > cap:
            continue
        scanned_any = True
        x = find_first_of_weight(sub.field, sub.gen, r)
        if x is not None:
            return _attach_scaling(rec, x, np.flatnonzero(x), label)
    detail = "no known subcode fits the cap" if not scanned_any else "not found in scanned subcodes"
    raise WitnessNotFound(f"weight {r}: {detail}", proven_absent=False)


def puncture_css(
    C1: Union[LinearCode, GrmCode],
    C2: Union[LinearCode, GrmCode],
    w: PunctureWitness,
    cap: int = DEFAULT_CAP,
    pcode_record: Optional[PunctureCodeRecord] = None,
    k_lower_bound: Optional[int] = None,
    d_lower_bound: Optional[int] = None,
) -> QuantumCodeRecord:
    """Materialize the length-r punctured CSS code for a weight-r witness.

    The scaled restriction pair is (x*C1)|_S and the S-dual of C2-perp|_S;
    containment of the first in the second is forced by x lying in the
    puncture code, and is re-verified numerically.
    """
    code1, code2 = _as_code(C1), _as_code(C2)
    rec = pcode_record or puncture_code_css(C1, C2)
    x = np.asarray(w.x, dtype=np.uint8)
    if len(x) != code1.n or not rec.pcode.contains(x):
        raise WitnessInvalid("witness vector is not in the puncture code")
    support = list(w.support)
    if sorted(support) != list(np.flatnonzero(x)):
        raise WitnessInvalid("witness support does not match its vector")
    r = len(support)
    if r == 0:
        raise WitnessInvalid("cannot puncture to length 0")

    B = code1.scaled_by(x).punctured_to(support)
    C2p = code2.dual().punctured_to(support).dual()
    if not B.is_subcode_of(C2p):
        raise WitnessInvalid("scaled restriction failed CSS nesting (invalid witness)")

    if isinstance(C1, GrmCode) and isinstance(C2, GrmCode) and d_lower_bound is None:
        d_lower_bound = min(
            grm_distance(C2.q, C2.m, C2.nu),
            grm_distance(C1.q, C1.m, C1.nu_perp),
        )
    if isinstance(C1, GrmCode) and isinstance(C2, GrmCode) and k_lower_bound is None:
        k_lower_bound = code2.k - code1.k - code1.n + r

    out = css(B, C2p, cap, d_lower_bound=d_lower_bound)
    out.construction = "PuncturedCSS"
    out.provenance.update(
        {
            "punctured_from_n": code1.n,
            "witness_weight": r,
            "witness_source": w.source,
        }
    )
    if k_lower_bound is not None:
        out.provenance["k_lower_bound"] = k_lower_bound
        assert out.k >= k_lower_bound, "exact dimension fell below the promised bound"
    if d_lower_bound is not None:
        out.provenance["d_lower_bound"] = d_lower_bound
        if not out.d_is_lower_bound:
            assert out.d >= d_lower_bound, "exact distance fell below the promised bound"
    return out


def puncture_hermitian(
    C: Union[LinearCode, GrmCode],
    w: PunctureWitness,
    cap: int = DEFAULT_CAP,
    pcode_record: Optional[PunctureCodeRecord] = None,
    d_lower_bound: Optional[int] = None,
) -> QuantumCodeRecord:
    """Materialize the punctured Hermitian code for a scaled weight-r witness.

    With y_i^(q+1) = x_i on the support, the code {(y_i a_i)_S : a in C}
    inherits Hermitian self-orthogonality from x being in the puncture
    code (nondegeneracy of the trace form upgrades trace-zero to zero).
    A failure of that check indicates an implementation bug, so it aborts.
    """
    code = _as_code(C)
    pair = extension_pair_for(code.field)
    rec = pcode_record or puncture_code_hermitian(C)
    x = np.asarray(w.x, dtype=np.uint8)
    if len(x) != code.n or not rec.pcode.contains(x):
        raise WitnessInvalid("witness vector is not in the puncture code")
    if w.scaling is None:
        raise WitnessInvalid("Hermitian puncturing needs the norm-solving scaling")
    support = list(w.support)
    if sorted(support) != list(np.flatnonzero(x)):
        raise WitnessInvalid("witness support does not match its vector")
    y = np.asarray(w.scaling, dtype=np.uint8)
    ext = code.field
    for i in support:
        if ext.pow(int(y[i]), pair.sub.q + 1) != int(pair.emb[x[i]]):
            raise WitnessInvalid(f"scaling at coordinate {i} does not solve the norm equation")
    r = len(support)
    if r == 0:
        raise WitnessInvalid("cannot puncture to length 0")

    Cp = code.scaled_by(y).punctured_to(support)
    if not _hermitian_gram_vanishes(Cp):
        raise NotSelfOrthogonal(
            "scaled restriction lost Hermitian self-orthogonality; "
            "this contradicts the puncture-code membership and indicates a bug"
        )

    if isinstance(C, GrmCode) and d_lower_bound is None:
        d_lower_bound = hermitian_grm_distance(pair.sub.q, C.nu)
    k_lower_bound = r - 2 * code.k

    out = hermitian(Cp, cap, d_lower_bound=d_lower_bound)
    out.construction = "PuncturedHermitian"
    out.provenance.update(
        {
            "punctured_from_n": code.n,
            "witness_weight": r,
            "witness_source": w.source,
            "k_lower_bound": k_lower_bound,
        }
    )
    assert out.k >= k_lower_bound, "exact dimension fell below the promised bound"
    if d_lower_bound is not None:
        out.provenance["d_lower_bound"] = d_lower_bound
        if not out.d_is_lower_bound:
            assert out.d >= d_lower_bound, "exact distance fell below the promised bound"
    return out


def _hermitian_gram_vanishes(C: LinearCode) -> bool:
    from .qcode import hermitian_self_orthogonal

    return hermitian_self_orthogonal(C)


# -- the GF(q)^2 <-> GF(q^2) point bijection ---------------------------------


def extension_point_map(q: int) -> np.ndarray:
    """perm[t] = canonical index of the extension element matching point t.

    Point t of GF(q)^2 has coordinates (t mod q, t div q); its partner is
    phi(t mod q) + gamma * phi(t div q).  For prime q this is the identity.
    """
    pair = quadratic_extension(q)
    t = np.arange(q * q)
    lo = pair.emb[(t % q).astype(np.uint8)]
    hi = pair.emb[(t // q).astype(np.uint8)]
    ext = pair.ext
    perm = ext.ADD[lo, ext.MUL[pair.gamma, hi]]
    assert len(set(int(v) for v in perm)) == q * q
    return perm.astype(np.int64)


def extended_rs_code(q: int, mu: int, point_elements: np.ndarray) -> LinearCode:
    """Evaluations of 1, z, ..., z^mu at the given extension elements.

    With all q^2 elements as points this is R_{q^2}(mu, 1) up to the
    coordinate order fixed by ``point_elements``.
    """
    ext = quadratic_extension(q).ext
    if not 0 <= mu <= ext.q - 2:
        raise OrderOutOfRange(f"univariate order {mu} outside [0, {ext.q - 2}]")
    pts = np.asarray(point_elements, dtype=np.uint8)
    rows = [ext.POW[pts, j] for j in range(mu + 1)]
    return LinearCode(ext, np.vstack(rows), len(pts))


def extended_rs_embedding_check(q: int, m: int, nu: int) -> bool:
    """Does R_q(nu, m) embed in the matching extended-RS subfield restriction?

    The univariate side has order q^m - d(nu) and is evaluated at the
    points induced by the basis bijection, so both sides share coordinates.
    Only m in {1, 2} has a configured bijection.
    """
    if m == 1:
        grm_side = build_grm(q, 1, nu).code
        other = build_grm(q, 1, q - grm_distance(q, 1, nu)).code
        return grm_side.is_subcode_of(other)
    if m != 2:
        raise PointOrderMismatch(f"no point bijection configured for m={m}")
    try:
        pair = quadratic_extension(q)
    except Exception as exc:
        raise PointOrderMismatch(f"no designated extension for q={q}") from exc
    grm_side = build_grm(q, 2, nu).code
    mu = q * q - grm_distance(q, 2, nu)
    perm = extension_point_map(q)
    uni = extended_rs_code(q, mu, perm.astype(np.uint8))
    restricted = uni.restriction()
    assert restricted.field is pair.sub
    return grm_side.is_subcode_of(restricted)


# -- the quantum MDS chain -----------------------------------------------------


def mds_chain(q: int, nu: int, cap: int = DEFAULT_CAP, verify_chain: bool = True) -> QuantumCodeRecord:
    """End-to-end punctured MDS construction for 0 <= nu <= q-2.

    Builds C = R_{q^2}(nu, 1), locates a weight-(nu+1)q vector in the
    puncture code through the embedded R_q(q-nu-1, 2) (or its univariate
    slice when that scan would blow the cap), materializes the punctured
    Hermitian code, and checks it is MDS with exact parameters.
    """
    if not 0 <= nu <= q - 2:
        raise OrderOutOfRange(f"need 0 <= nu <= q-2, got nu={nu}")
    pair = quadratic_extension(q)
    q2 = pair.ext.q
    g = build_grm(q2, 1, nu)
    prec = puncture_code_hermitian(g)
    r = (nu + 1) * q
    perm = extension_point_map(q)

    scan_order = q - nu - 1
    scan_dim = grm_dimension(q, 2, scan_order)
    if q**scan_dim <= cap:
        scan_code = build_grm(q, 2, scan_order).code
        scan_label = f"grm(q={q},m=2,nu={scan_order})"
    else:
        # univariate slice {f(x1) : deg f <= q-nu-1}: same minimum weight,
        # tiny dimension q-nu
        pts = point_matrix(pair.sub, 2)
        rows = np.vstack([pair.sub.POW[pts[0], j] for j in range(scan_order + 1)])
        scan_code = LinearCode(pair.sub, rows, q * q)
        scan_label = f"univariate-slice(deg<={scan_order})"
    x = find_first_of_weight(scan_code.field, scan_code.gen, r)
    if x is None:
        raise WitnessSearchFailed(
            f"no weight-{r} vector in {scan_label}; this contradicts the chain"
        )
    X = np.zeros(q * q, dtype=np.uint8)
    X[perm] = x

    if verify_chain:
        mapped = np.zeros_like(scan_code.gen)
        mapped[:, perm] = scan_code.gen
        mapped_code = LinearCode(pair.sub, mapped, q * q)
        restricted = build_grm(q2, 1, q2 - (nu + 1) * q).code.restriction()
        assert mapped_code.is_subcode_of(restricted), "chain step 1 containment failed"
        assert restricted.is_subcode_of(prec.pcode), "chain step 2 containment failed"
    if not prec.pcode.contains(X):
        raise WitnessSearchFailed("mapped witness left the puncture code; bijection bug")

    witness = _attach_scaling(prec, X, np.flatnonzero(X), scan_label)
    out = puncture_hermitian(g, witness, cap, pcode_record=prec)
    out.provenance.update({"chain": "mds", "q": q, "nu": nu, "target_weight": r})
    assert out.exact, "MDS chain records must have exact parameters"
    assert (out.n, out.k, out.d) == (r, r - 2 * (nu + 1), nu + 2), (
        f"MDS chain produced {out.params_str()}, expected "
        f"[[{r},{r - 2 * (nu + 1)},{nu + 2}]]_{q}"
    )
    assert out.singleton_slack == 0, "MDS chain record must meet the Singleton bound"
    return out
