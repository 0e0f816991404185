"""Reed-Solomon codes in parity-check and evaluation form.

A code of length ``n`` over GF(q) uses ``alpha`` of multiplicative order ``n``.
The parity-check matrix has rows ``(alpha^{(b+j) i})_{i<n}`` for
``j = 0 .. n-k-1``; the evaluation encoder maps a message polynomial ``u`` of
degree < k to ``(u(alpha^0), ..., u(alpha^{n-1}))``.  With ``b = 1`` the two
descriptions define the same code.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .errors import LengthMismatch, NoOrderNElement
from .finite_field import GaloisField


@dataclass(frozen=True, eq=False)
class RsCode:
    field: GaloisField
    n: int
    k: int
    b: int = 1
    alpha: int = dc_field(init=False)

    def __post_init__(self):
        q = self.field.q
        if not 1 <= self.k <= self.n < q:
            raise ValueError(f"need 1 <= k <= n < q, got n={self.n}, k={self.k}, q={q}")
        if self.field.order % self.n:
            raise NoOrderNElement(f"{self.n} does not divide {self.field.order}")
        object.__setattr__(self, "alpha", self.field.alpha_pow(self.field.order // self.n))

    def __repr__(self) -> str:
        return f"RsCode(n={self.n}, k={self.k}, b={self.b}, q={self.field.q})"

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def d_min(self) -> int:
        return self.n - self.k + 1

    @property
    def rate(self) -> float:
        return self.k / self.n

    @cached_property
    def _alpha_log(self) -> int:
        return int(self.field.log[self.alpha])

    @cached_property
    def eval_points(self) -> np.ndarray:
        """``alpha^i`` for ``i = 0 .. n-1``."""
        logs = (self._alpha_log * np.arange(self.n)) % self.field.order
        return self.field.exp[logs]

    @cached_property
    def parity_check(self) -> np.ndarray:
        """The ``(n-k) x n`` parity-check matrix H."""
        rows = (self.b + np.arange(self.redundancy))[:, None]
        cols = np.arange(self.n)[None, :]
        logs = (self._alpha_log * rows * cols) % self.field.order
        return self.field.exp[logs].astype(np.int64)

    @cached_property
    def generator(self) -> np.ndarray:
        """The ``k x n`` evaluation generator matrix G (row i holds alpha_j^i)."""
        rows = np.arange(self.k)[:, None]
        logs = (self._alpha_log * rows * np.arange(self.n)[None, :]) % self.field.order
        return self.field.exp[logs].astype(np.int64)

    @cached_property
    def _coset_solver(self) -> np.ndarray:
        # Inverse of the leading (n-k) x (n-k) block of H.  Any n-k columns of
        # H form a Vandermonde matrix, so leftmost pivoting always lands here.
        r = self.redundancy
        return gf_inverse(self.field, self.parity_check[:, :r])

    def _check_len(self, word, name="word") -> np.ndarray:
        arr = self.field.validate(word)
        if arr.shape != (self.n,):
            raise LengthMismatch(f"{name} must have length {self.n}, got {arr.shape}")
        return arr


def rs_new(field: GaloisField, n: int, k: int, b: int = 1) -> RsCode:
    return RsCode(field, n, k, b)


def encode_message(code: RsCode, u) -> np.ndarray:
    """Evaluate the message polynomial at the code's evaluation points."""
    u = code.field.validate(u)
    if u.shape != (code.k,):
        raise LengthMismatch(f"message must have length {code.k}, got {u.shape}")
    return code.field.poly_eval_vec(u, code.eval_points)


def syndrome(code: RsCode, x) -> np.ndarray:
    """``H x^T``, a vector of ``n-k`` symbols."""
    x = code._check_len(x)
    if code.redundancy == 0:
        return np.zeros(0, dtype=np.int64)
    return code.field.matvec(code.parity_check, x)


def coset_representative(code: RsCode, s) -> np.ndarray:
    """A word ``a`` with ``syndrome(code, a) == s``.

    The solution is the one Gaussian elimination with leftmost pivots
    produces: the last ``k`` (free) coordinates are zero.
    """
    s = code.field.validate(s)
    r = code.redundancy
    if s.shape != (r,):
        raise LengthMismatch(f"syndrome must have length {r}, got {s.shape}")
    a = np.zeros(code.n, dtype=np.int64)
    if r:
        a[:r] = code.field.matvec(code._coset_solver, s)
    return a


def is_codeword(code: RsCode, x) -> bool:
    return not np.any(syndrome(code, x))


def hamming_distance(a, b) -> int:
    return int(np.count_nonzero(np.asarray(a) != np.asarray(b)))


def gf_inverse(gf: GaloisField, mat: np.ndarray) -> np.ndarray:
    """Invert a square matrix over ``gf`` by Gauss-Jordan elimination."""
    size = mat.shape[0]
    aug = np.concatenate([np.asarray(mat, dtype=np.int64), np.eye(size, dtype=np.int64)], axis=1)
    for col in range(size):
        nz = np.flatnonzero(aug[col:, col])
        if nz.size == 0:
            raise np.linalg.LinAlgError("matrix is singular over the field")
        piv = col + nz[0]
        if piv != col:
            aug[[col, piv]] = aug[[piv, col]]
        aug[col] = gf.mul_vec(aug[col], gf.inv(int(aug[col, col])))
        factors = aug[:, col].copy()
        factors[col] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            aug[rows] ^= gf.mul_vec(factors[rows, None], aug[col][None, :])
    return aug[:, size:]


def gf_solve(gf: GaloisField, mat: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """One solution of ``mat @ a = rhs`` with leftmost pivots and zero free variables.

    Generic row reduction; used as an independent check on
    :func:`coset_representative` and by callers with non-square systems.
    """
    mat = np.asarray(mat, dtype=np.int64)
    rows, cols = mat.shape
    aug = np.concatenate([mat, np.asarray(rhs, dtype=np.int64)[:, None]], axis=1)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(aug[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            aug[[r, piv]] = aug[[piv, r]]
        aug[r] = gf.mul_vec(aug[r], gf.inv(int(aug[r, c])))
        factors = aug[:, c].copy()
        factors[r] = 0
        nzr = np.flatnonzero(factors)
        if nzr.size:
            aug[nzr] ^= gf.mul_vec(factors[nzr, None], aug[r][None, :])
        pivots.append(c)
        r += 1
    if np.any(aug[r:, -1]):
        raise np.linalg.LinAlgError("inconsistent system")
    sol = np.zeros(cols, dtype=np.int64)
    for i, c in enumerate(pivots):
        sol[c] = aug[i, -1]
    return sol
