"""Linear codes over GF(q) with exhaustive weight machinery.

A LinearCode is a k-dimensional subspace of GF(q)^n held as a generator
matrix in reduced row-echelon form.  RREF is unique, so two codes are
equal exactly when their matrices are equal, and every derived object
(duals, spans, restrictions) is reproducible bit for bit.

Weight computations come in two exact flavours:

* span enumeration: walk all q^k codewords in blocks of vectorized numpy
  work, in lexicographic message order (canonical field-element order per
  digit, first generator row most significant);
* support search: for codes whose *dual* is small, scan supports of
  increasing size for dependent column sets of the parity-check matrix.
  The first size that yields a dependent set (with a full-support kernel
  vector outside the excluded subcode, when one is given) is the exact
  minimum weight.

Both are complete searches; tests cross-check one against the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import (
    CapExceeded,
    DimensionMismatch,
    EmptyCode,
    FieldMismatch,
    NotNested,
)
from .gf import FieldSpec, extension_pair_for

DEFAULT_CAP = 2**24
_BLOCK_ROWS = 1 << 18


def rref(field: FieldSpec, mat) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form over the field; returns (matrix, pivot columns).

    Pivot choice is the leftmost nonzero entry, scaled to a leading 1;
    zero rows are dropped.
    """
    M = np.array(mat, dtype=np.uint8, copy=True)
    if M.ndim != 2:
        raise DimensionMismatch("expected a 2-d matrix")
    rows, n = M.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        if r == rows:
            break
        nzi = np.flatnonzero(M[r:, c])
        if nzi.size == 0:
            continue
        pr = r + int(nzi[0])
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        pv = int(M[r, c])
        if pv != 1:
            M[r] = field.MUL[field.INV[pv], M[r]]
        col = M[:, c].copy()
        col[r] = 0
        nz = np.flatnonzero(col)
        if nz.size:
            M[nz] = field.sub_arrays(M[nz], field.MUL[col[nz][:, None], M[r][None, :]])
        pivots.append(c)
        r += 1
    return M[:r], tuple(pivots)


def kernel_basis(field: FieldSpec, mat) -> np.ndarray:
    """RREF basis of the right kernel {x : mat @ x = 0} over the field."""
    M = np.asarray(mat, dtype=np.uint8)
    n = M.shape[1]
    R, pivots = rref(field, M)
    free = [c for c in range(n) if c not in set(pivots)]
    if not free:
        return np.zeros((0, n), dtype=np.uint8)
    H = np.zeros((len(free), n), dtype=np.uint8)
    for row, f in enumerate(free):
        H[row, f] = 1
        for i, p in enumerate(pivots):
            H[row, p] = field.NEG[R[i, f]]
    K, _ = rref(field, H)
    return K


class LinearCode:
    """A linear [n, k] code over GF(q), canonicalized to RREF."""

    def __init__(self, field: FieldSpec, rows, n: int | None = None, *, _canonical=False):
        self.field = field
        rows = np.asarray(rows, dtype=np.uint8)
        if rows.size == 0:
            if n is None:
                raise DimensionMismatch("zero code needs an explicit length")
            rows = rows.reshape(0, n)
        if rows.ndim != 2:
            raise DimensionMismatch("generator must be a 2-d matrix")
        if n is not None and rows.shape[1] != n:
            raise DimensionMismatch(f"expected length {n}, got {rows.shape[1]}")
        if np.any(rows >= field.q):
            raise ValueError(f"entries must be indices below q={field.q}")
        if _canonical:
            self.gen = rows.copy()
            _, self.pivots = rref(field, rows)
        else:
            self.gen, self.pivots = rref(field, rows)
        self.gen.setflags(write=False)
        self.n = int(self.gen.shape[1])
        self.k = int(self.gen.shape[0])
        self._dual: LinearCode | None = None

    @classmethod
    def zero_code(cls, field: FieldSpec, n: int) -> "LinearCode":
        return cls(field, np.zeros((0, n), dtype=np.uint8), n)

    @classmethod
    def full_space(cls, field: FieldSpec, n: int) -> "LinearCode":
        return cls(field, np.eye(n, dtype=np.uint8), n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.field is self.field
            and other.n == self.n
            and other.k == self.k
            and np.array_equal(other.gen, self.gen)
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.n, self.k, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"

    # -- membership --------------------------------------------------------

    def reduce(self, vecs: np.ndarray) -> np.ndarray:
        """Residue of row vectors after elimination by the generator rows."""
        V = np.array(vecs, dtype=np.uint8, copy=True)
        single = V.ndim == 1
        if single:
            V = V[None, :]
        if V.shape[1] != self.n:
            raise DimensionMismatch(f"expected length {self.n}")
        f = self.field
        for i, p in enumerate(self.pivots):
            coeff = V[:, p].copy()
            V = f.sub_arrays(V, f.MUL[coeff[:, None], self.gen[i][None, :]])
        return V[0] if single else V

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def is_subcode_of(self, other: "LinearCode") -> bool:
        if other.field is not self.field:
            raise FieldMismatch("codes live over different fields")
        if other.n != self.n:
            raise DimensionMismatch("codes have different lengths")
        if self.k == 0:
            return True
        return not np.any(other.reduce(self.gen))

    # -- duality -------------------------------------------------------------

    def dual(self) -> "LinearCode":
        if self._dual is None:
            basis = kernel_basis(self.field, self.gen)
            self._dual = LinearCode(self.field, basis, self.n, _canonical=True)
        return self._dual

    def frobenius_image(self) -> "LinearCode":
        """Entrywise q-th power of the generator (field must be a tower top)."""
        pair = extension_pair_for(self.field)
        return LinearCode(self.field, pair.frob[self.gen], self.n)

    def hermitian_dual(self) -> "LinearCode":
        """Dual under <x|y>_h = sum x_i y_i^q; equals dual(frobenius_image)."""
        return self.frobenius_image().dual()

    # -- subfield operations -------------------------------------------------

    def trace_code(self) -> "LinearCode":
        """Componentwise trace image, as a code over the base field."""
        pair = extension_pair_for(self.field)
        if self.k == 0:
            return LinearCode.zero_code(pair.sub, self.n)
        ext = self.field
        rows = [pair.trace[self.gen], pair.trace[ext.MUL[pair.gamma, self.gen]]]
        return LinearCode(pair.sub, np.vstack(rows), self.n)

    def restriction(self) -> "LinearCode":
        """Subfield subcode C intersect GF(q)^n, solved directly.

        The extension code is a 2k-dimensional base-field space spanned by
        {g_i, gamma*g_i}; coordinates split as a + gamma*b with a, b over
        the base field, and the restriction is the part where every b
        coordinate vanishes.
        """
        pair = extension_pair_for(self.field)
        if self.k == 0:
            return LinearCode.zero_code(pair.sub, self.n)
        ext = self.field
        base_rows = np.vstack([self.gen, ext.MUL[pair.gamma, self.gen]])
        A = pair.dec_a[base_rows]
        B = pair.dec_b[base_rows]
        K = kernel_basis(pair.sub, B.T)
        if K.shape[0] == 0:
            return LinearCode.zero_code(pair.sub, self.n)
        rows = pair.sub.matmul(K, A)
        return LinearCode(pair.sub, rows, self.n)

    # -- coordinate surgery ----------------------------------------------------

    def punctured_to(self, support) -> "LinearCode":
        """Column restriction to the given coordinates (rank may drop)."""
        support = list(support)
        return LinearCode(self.field, self.gen[:, support], len(support))

    def scaled_by(self, x: np.ndarray) -> "LinearCode":
        """Componentwise scaling of every codeword by the fixed vector x."""
        if len(x) != self.n:
            raise DimensionMismatch("scaling vector has wrong length")
        return LinearCode(self.field, self.field.MUL[self.gen, np.asarray(x, dtype=np.uint8)[None, :]], self.n)

    # -- weights ---------------------------------------------------------------

    def min_weight(self, cap: int = DEFAULT_CAP) -> tuple[int, bool]:
        """Exact minimum weight when q^k <= cap, else a certified lower bound.

        Returns (weight, exact).  The lower-bound path enumerates all
        low-weight messages of an information set; codeword weight is at
        least message weight because the RREF pivots carry the message.
        """
        if self.k == 0:
            raise EmptyCode("the zero code has no minimum weight")
        if self.field.q**self.k <= cap:
            w = _span_min_weight(self.field, self.gen, skip_below=1)
            return w, True
        return self._partial_lower_bound(cap)

    def _partial_lower_bound(self, cap: int) -> tuple[int, bool]:
        budget = min(cap, 1 << 16)
        k, q, f = self.k, self.field.q, self.field
        t, used = 0, 0
        while t < k:
            step = comb(k, t + 1) * (q - 1) ** (t + 1)
            if used + step > budget:
                break
            used += step
            t += 1
        best = None
        for wt in range(1, t + 1):
            for support in itertools.combinations(range(k), wt):
                rows = self.gen[list(support)]
                for vals in itertools.product(range(1, q), repeat=wt):
                    vec = np.zeros(self.n, dtype=np.uint8)
                    for v, row in zip(vals, rows):
                        vec = f.add_arrays(vec, f.MUL[v, row])
                    w = int(np.count_nonzero(vec))
                    if best is None or w < best:
                        best = w
        if best is not None and best <= t + 1:
            return best, True
        return t + 1, False

    def weight_distribution(self, cap: int = DEFAULT_CAP, strict: bool = False) -> "WeightDistribution":
        """Exact weight counts by full enumeration within cap, else a sample."""
        if self.field.q**self.k <= cap:
            counts = np.zeros(self.n + 1, dtype=np.int64)
            for _, block in iter_span_blocks(self.field, self.gen):
                w = np.count_nonzero(block, axis=1)
                counts += np.bincount(w, minlength=self.n + 1)
            return WeightDistribution(tuple(int(c) for c in counts), True)
        if strict:
            raise CapExceeded(
                f"q^k = {self.field.q}^{self.k} exceeds cap {cap} for exact distribution"
            )
        rng = np.random.default_rng(0)
        samples = min(cap, 1 << 16)
        msgs = rng.integers(0, self.field.q, size=(samples, self.k)).astype(np.uint8)
        words = self.field.matmul(msgs, self.gen)
        w = np.count_nonzero(words, axis=1)
        counts = np.bincount(w, minlength=self.n + 1)
        return WeightDistribution(tuple(int(c) for c in counts), False)


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codeword weights; exact means full enumeration."""

    counts: tuple[int, ...]
    exact: bool

    def __post_init__(self):
        if self.exact:
            assert self.counts[0] == 1, "exact distribution must count the zero word once"

    def min_positive_weight(self) -> int | None:
        for i, c in enumerate(self.counts):
            if i >= 1 and c > 0:
                return i
        return None

    def total(self) -> int:
        return sum(self.counts)


# -- span enumeration engine -------------------------------------------------


def _base_block(field: FieldSpec, rows: np.ndarray) -> np.ndarray:
    """All field combinations of the rows, lex order, first row most significant."""
    n = rows.shape[1]
    block = np.zeros((1, n), dtype=np.uint8)
    scalars = np.arange(field.q, dtype=np.uint8)
    for r in rows[::-1]:
        mults = field.MUL[scalars[:, None], r[None, :]]
        block = np.ascontiguousarray(
            field.add_arrays(mults[:, None, :], block[None, :, :])
        ).reshape(-1, n)
    return block


def iter_span_blocks(field: FieldSpec, rows, max_block_rows: int = _BLOCK_ROWS):
    """Yield (start_index, block) covering the whole span in message order.

    Message order is lexicographic over coefficient tuples in canonical
    element order; global codeword index = block start + row offset.
    """
    rows = np.asarray(rows, dtype=np.uint8)
    k, n = rows.shape
    q = field.q
    # keep blocks near 8 MB so long codes do not balloon memory
    row_cap = max(q, min(max_block_rows, (1 << 23) // max(n, 1)))
    t, size = 0, 1
    while t < k and size * q <= row_cap:
        size *= q
        t += 1
    base = _base_block(field, rows[k - t :])
    head = rows[: k - t]
    h_count = q ** (k - t)
    if h_count == 1:
        yield 0, base
        return
    for h in range(h_count):
        digits = []
        tmp = h
        for _ in range(k - t):
            digits.append(tmp % q)
            tmp //= q
        digits.reverse()  # digits[i] multiplies head[i]; first row most significant
        prefix = np.zeros(n, dtype=np.uint8)
        for d, row in zip(digits, head):
            if d:
                prefix = field.add_arrays(prefix, field.MUL[d, row])
        yield h * size, field.add_arrays(base, prefix[None, :])


def _span_min_weight(field: FieldSpec, rows, skip_below: int = 1) -> int:
    """Minimum weight over the span, ignoring the first skip_below codewords."""
    best = None
    for start, block in iter_span_blocks(field, rows):
        w = np.count_nonzero(block, axis=1)
        if start < skip_below:
            cut = min(skip_below - start, w.size)
            w = w[cut:]
        if w.size == 0:
            continue
        m = int(w.min())
        if best is None or m < best:
            best = m
    assert best is not None, "span scan saw no codewords"
    return best


def find_first_of_weight(field: FieldSpec, rows, target: int) -> np.ndarray | None:
    """First vector of exactly the target weight in span order, or None.

    The scan is complete, so None proves absence.  The zero vector is only
    returned for target 0.
    """
    rows = np.asarray(rows, dtype=np.uint8)
    if target == 0:
        return np.zeros(rows.shape[1], dtype=np.uint8)
    if rows.shape[0] == 0:
        return None
    for _, block in iter_span_blocks(field, rows):
        w = np.count_nonzero(block, axis=1)
        hits = np.flatnonzero(w == target)
        if hits.size:
            return block[int(hits[0])].copy()
    return None


# -- set-difference weights ----------------------------------------------------


def _extension_rows(big: LinearCode, small: LinearCode) -> np.ndarray:
    """Rows extending small's basis to big's; span(small + rows) = big."""
    residues = small.reduce(big.gen)
    residues = residues[np.any(residues, axis=1)]
    E, _ = rref(big.field, residues)
    return E


def min_weight_difference(big: LinearCode, small: LinearCode, cap: int = DEFAULT_CAP) -> int:
    """Exact minimum weight over big \\ small by full span enumeration.

    Requires strict containment small < big and q^dim(big) <= cap.
    """
    if big.field is not small.field:
        raise FieldMismatch("codes live over different fields")
    if big.n != small.n:
        raise DimensionMismatch("codes have different lengths")
    if not small.is_subcode_of(big):
        raise NotNested("first argument must strictly contain the second")
    if small.k >= big.k:
        raise NotNested("containment must be strict")
    if big.field.q**big.k > cap:
        raise CapExceeded(f"q^k = {big.field.q}^{big.k} exceeds cap {cap}")
    if small.k == 0:
        return _span_min_weight(big.field, big.gen, skip_below=1)
    E = _extension_rows(big, small)
    rows = np.vstack([E, small.gen])
    # extension digits are most significant, so codewords inside `small`
    # occupy exactly the first q^small.k indices of the scan
    return _span_min_weight(big.field, rows, skip_below=big.field.q**small.k)


# -- exact low-weight support search ---------------------------------------------


def min_weight_support_search(
    code: LinearCode,
    exclude: LinearCode | None = None,
    subset_budget: int = 2 * 10**6,
    kernel_budget: int = 4096,
) -> int:
    """Exact minimum weight of code (or code minus an excluded subcode).

    Scans supports of increasing size w; a codeword of weight w supported
    on S exists iff the parity-check columns at S are linearly dependent
    with a full-support kernel vector.  Complete per size, so the first
    hit is the true minimum.  Cost grows with C(n, w) and with the dual
    dimension, so this route suits codes whose dual is small.
    """
    if code.k == 0:
        raise EmptyCode("the zero code has no minimum weight")
    field, n = code.field, code.n
    H = code.dual().gen
    spent = 0
    for w in range(1, n + 1):
        spent += comb(n, w)
        if spent > subset_budget:
            raise CapExceeded(f"support search budget exceeded at weight {w}")
        for S in itertools.combinations(range(n), w):
            sub = H[:, S]
            K = kernel_basis(field, sub)
            if K.shape[0] == 0:
                continue
            if field.q**K.shape[0] > kernel_budget:
                raise CapExceeded("kernel span too large to enumerate")
            for _, block in iter_span_blocks(field, K):
                full = block[np.all(block != 0, axis=1)]
                for v in full:
                    if exclude is None:
                        return w
                    cand = np.zeros(n, dtype=np.uint8)
                    cand[list(S)] = v
                    if not exclude.contains(cand):
                        return w
    raise EmptyCode("difference set is empty")


def exact_min_weight(code: LinearCode, cap: int = DEFAULT_CAP, subset_budget: int = 2 * 10**6) -> int:
    """Exact minimum weight via span enumeration or support search."""
    if code.k == 0:
        raise EmptyCode("the zero code has no minimum weight")
    if code.field.q**code.k <= cap:
        return _span_min_weight(code.field, code.gen, skip_below=1)
    return min_weight_support_search(code, subset_budget=subset_budget)


def exact_difference_weight(
    big: LinearCode,
    small: LinearCode,
    cap: int = DEFAULT_CAP,
    subset_budget: int = 2 * 10**6,
) -> int | None:
    """Exact wt(big \\ small) for nested codes; None when the sets coincide."""
    if not small.is_subcode_of(big):
        raise NotNested("second argument must be contained in the first")
    if small.k == big.k:
        return None
    if small.k == 0:
        return exact_min_weight(big, cap, subset_budget)
    if big.field.q**big.k <= cap:
        return min_weight_difference(big, small, cap)
    return min_weight_support_search(big, exclude=small, subset_budget=subset_budget)


# -- componentwise product span ---------------------------------------------------


def product_span(a: LinearCode, b: LinearCode) -> LinearCode:
    """Span of all componentwise products u*v with u in a, v in b.

    Generator-row products suffice by bilinearity of the product.
    """
    if a.field is not b.field:
        raise FieldMismatch("codes live over different fields")
    if a.n != b.n:
        raise DimensionMismatch("codes have different lengths")
    if a.k == 0 or b.k == 0:
        return LinearCode.zero_code(a.field, a.n)
    prods = a.field.MUL[a.gen[:, None, :], b.gen[None, :, :]].reshape(-1, a.n)
    return LinearCode(a.field, prods, a.n)
