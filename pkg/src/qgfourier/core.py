"""Finite-dimensional algebraic quantum groups as structure tensors.

A ``FiniteQuantumGroup`` is a finite-dimensional Hopf (*-)algebra with
faithful left and right invariant functionals, described by explicit
structure constants over an exact (or float) scalar backend.  This module
implements the axiom checker, the dual construction, the Fourier transform
and its inverse, convolution, the Plancherel identity, cointegrals, the
compact/discrete type classification, group-like projections and the
modular element.

Conventions (basis a_0 .. a_{d-1}):
  mult[i][j][k]            a_i a_j = sum_k mult[i][j][k] a_k
  comult[i] = [(j,k,c)..]  coproduct(a_i) = sum c a_j (x) a_k
  antipode[i][k]           S(a_i) = sum_k antipode[i][k] a_k
  star[i][k]               (a_i)* = sum_k star[i][k] a_k  (antilinear overall)
  unit, phi, psi           coordinate / value vectors
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import linalg
from .report import CheckReport, make_report
from .scalars import EXACT, Backend


class StructureError(ValueError):
    """The given tensors do not describe the required structure."""


class FaithfulnessError(StructureError):
    """An integral's Gram matrix is singular."""


class OwnerMismatchError(ValueError):
    """Elements/functionals from different quantum groups were mixed."""


@dataclass
class FiniteQuantumGroup:
    dim: int
    basis_labels: list
    mult: list  # d x d x d
    comult: list  # d lists of (j, k, scalar)
    counit: list
    antipode: list  # d x d
    star: Optional[list]  # d x d, None if no *-structure
    unit: Optional[list]
    left_integral: list
    right_integral: list
    backend: Backend = field(default=EXACT)
    name: str = "A"

    def __post_init__(self):
        nz = self.backend.normalize
        self.mult = [[[nz(x) for x in row] for row in plane] for plane in self.mult]
        self.comult = [[(j, k, nz(c)) for j, k, c in terms] for terms in self.comult]
        self.counit = [nz(x) for x in self.counit]
        self.antipode = [[nz(x) for x in row] for row in self.antipode]
        if self.star is not None:
            self.star = [[nz(x) for x in row] for row in self.star]
        if self.unit is not None:
            self.unit = [nz(x) for x in self.unit]
        self.left_integral = [nz(x) for x in self.left_integral]
        self.right_integral = [nz(x) for x in self.right_integral]
        self._cache = {}

    # -- basics ------------------------------------------------------------

    @property
    def is_star(self) -> bool:
        return self.star is not None

    def zero_scalar(self):
        return self.backend.normalize(0)

    def element(self, coords) -> "Element":
        return Element(self, [self.backend.normalize(c) for c in coords])

    def basis_element(self, i: int) -> "Element":
        return self.element([1 if j == i else 0 for j in range(self.dim)])

    def functional(self, values) -> "Functional":
        return Functional(self, [self.backend.normalize(v) for v in values])

    def zero_element(self) -> "Element":
        return self.element([0] * self.dim)

    def one(self) -> "Element":
        if self.unit is None:
            raise StructureError("no unit")
        return Element(self, list(self.unit))

    # -- tensor contractions -----------------------------------------------

    def mul_coords(self, x, y):
        d = self.dim
        out = [self.zero_scalar()] * d
        for i in range(d):
            if self.backend.is_zero(x[i]):
                continue
            for j in range(d):
                if self.backend.is_zero(y[j]):
                    continue
                f = x[i] * y[j]
                row = self.mult[i][j]
                for k in range(d):
                    if not self.backend.is_zero(row[k]):
                        out[k] = out[k] + f * row[k]
        return out

    def comult_dense(self, coords):
        d = self.dim
        out = [[self.zero_scalar()] * d for _ in range(d)]
        for i, ci in enumerate(coords):
            if self.backend.is_zero(ci):
                continue
            for j, k, c in self.comult[i]:
                out[j][k] = out[j][k] + ci * c
        return out

    def antipode_coords(self, coords):
        return linalg.vec_mat(coords, self.antipode)

    def antipode_inv_matrix(self):
        if "Sinv" not in self._cache:
            self._cache["Sinv"] = linalg.inverse(self.antipode, self.backend)
        return self._cache["Sinv"]

    def antipode_inv_coords(self, coords):
        return linalg.vec_mat(coords, self.antipode_inv_matrix())

    def star_coords(self, coords):
        if not self.is_star:
            raise StructureError("no *-structure")
        return linalg.vec_mat([self.backend.conj(c) for c in coords], self.star)

    def counit_of(self, coords):
        return sum(c * e for c, e in zip(coords, self.counit))

    def phi_of(self, coords):
        return sum(c * v for c, v in zip(coords, self.left_integral))

    def psi_of(self, coords):
        return sum(c * v for c, v in zip(coords, self.right_integral))

    def gram_phi(self):
        """P[i][j] = phi(a_i a_j); the pairing matrix of the dual basis."""
        if "gram_phi" not in self._cache:
            d = self.dim
            self._cache["gram_phi"] = [
                [self.phi_of(self.mult[i][j]) for j in range(d)] for i in range(d)
            ]
        return self._cache["gram_phi"]

    def gram_psi(self):
        if "gram_psi" not in self._cache:
            d = self.dim
            self._cache["gram_psi"] = [
                [self.psi_of(self.mult[i][j]) for j in range(d)] for i in range(d)
            ]
        return self._cache["gram_psi"]

    def rescaled_phi(self, factor) -> "FiniteQuantumGroup":
        """Copy with the left integral multiplied by ``factor`` (no mutation)."""
        f = self.backend.normalize(factor)
        return FiniteQuantumGroup(
            dim=self.dim,
            basis_labels=list(self.basis_labels),
            mult=self.mult,
            comult=self.comult,
            counit=self.counit,
            antipode=self.antipode,
            star=self.star,
            unit=self.unit,
            left_integral=[f * v for v in self.left_integral],
            right_integral=self.right_integral,
            backend=self.backend,
            name=self.name,
        )


@dataclass
class Element:
    owner: FiniteQuantumGroup
    coords: list

    def _chk(self, other):
        if other.owner is not self.owner:
            raise OwnerMismatchError("elements belong to different quantum groups")

    def __add__(self, other):
        self._chk(other)
        return Element(self.owner, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._chk(other)
        return Element(self.owner, [a - b for a, b in zip(self.coords, other.coords)])

    def __mul__(self, other):
        if isinstance(other, Element):
            self._chk(other)
            return Element(self.owner, self.owner.mul_coords(self.coords, other.coords))
        return Element(self.owner, [c * other for c in self.coords])

    def __rmul__(self, other):
        return Element(self.owner, [other * c for c in self.coords])

    def __neg__(self):
        return Element(self.owner, [-c for c in self.coords])

    def star(self) -> "Element":
        return Element(self.owner, self.owner.star_coords(self.coords))

    def __eq__(self, other):
        if not isinstance(other, Element) or other.owner is not self.owner:
            return NotImplemented
        be = self.owner.backend
        return all(be.is_zero(a - b) for a, b in zip(self.coords, other.coords))

    def is_zero(self) -> bool:
        be = self.owner.backend
        return all(be.is_zero(c) for c in self.coords)


@dataclass
class Functional:
    """A linear functional, stored by its values on the basis."""

    owner: FiniteQuantumGroup
    values: list

    def __call__(self, x: Element):
        if x.owner is not self.owner:
            raise OwnerMismatchError("functional applied to a foreign element")
        return sum(v * c for v, c in zip(self.values, x.coords))

    def of_coords(self, coords):
        return sum(v * c for v, c in zip(self.values, coords))

    def _chk(self, other):
        if other.owner is not self.owner:
            raise OwnerMismatchError("functionals belong to different quantum groups")

    def __add__(self, other):
        self._chk(other)
        return Functional(self.owner, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._chk(other)
        return Functional(self.owner, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        """Dual-algebra product: (w w')(x) = (w (x) w')(coproduct(x))."""
        if not isinstance(other, Functional):
            return Functional(self.owner, [v * other for v in self.values])
        self._chk(other)
        A = self.owner
        out = []
        for i in range(A.dim):
            acc = A.zero_scalar()
            for j, k, c in A.comult[i]:
                acc = acc + c * self.values[j] * other.values[k]
            out.append(acc)
        return Functional(A, out)

    def __rmul__(self, other):
        return Functional(self.owner, [other * v for v in self.values])

    def __neg__(self):
        return Functional(self.owner, [-v for v in self.values])

    def star(self) -> "Functional":
        """Dual involution: w*(a) = conj(w(S(a)*))."""
        A = self.owner
        out = []
        for m in range(A.dim):
            s = A.antipode_coords([1 if i == m else 0 for i in range(A.dim)])
            ss = A.star_coords(s)
            out.append(A.backend.conj(self.of_coords(ss)))
        return Functional(A, out)

    def __eq__(self, other):
        if not isinstance(other, Functional) or other.owner is not self.owner:
            return NotImplemented
        be = self.owner.backend
        return all(be.is_zero(a - b) for a, b in zip(self.values, other.values))

    def is_zero(self) -> bool:
        be = self.owner.backend
        return all(be.is_zero(v) for v in self.values)


@dataclass
class DualResult:
    dual: FiniteQuantumGroup
    pairing: list  # P[i][j] = phi(a_i a_j) = <a_i, w_j>


# ---------------------------------------------------------------------------
# axiom verification


def _tensors_eq(be, t1, t2):
    def flat(t):
        if isinstance(t, (list, tuple)):
            for x in t:
                yield from flat(x)
        else:
            yield t

    return all(be.is_zero(a - b) for a, b in zip(flat(t1), flat(t2)))


def verify_axioms(A: FiniteQuantumGroup) -> list:
    """Check every defining identity; failures are reported, not raised."""
    be = A.backend
    d = A.dim
    suite = "axioms:" + A.name
    reports = []

    def check(case, ok, witness=None):
        reports.append(make_report(suite, case, ok, witness))

    # associativity
    ok, wit = True, None
    for i in range(d):
        for j in range(d):
            for k in range(d):
                lhs = A.mul_coords(A.mult[i][j], [1 if t == k else 0 for t in range(d)])
                rhs = A.mul_coords([1 if t == i else 0 for t in range(d)], A.mult[j][k])
                if not _tensors_eq(be, lhs, rhs):
                    ok, wit = False, "basis (%d,%d,%d)" % (i, j, k)
                    break
            if not ok:
                break
        if not ok:
            break
    check("associativity", ok, wit)

    # unit acts as identity
    if A.unit is not None:
        ok, wit = True, None
        for i in range(d):
            e = [1 if t == i else 0 for t in range(d)]
            if not _tensors_eq(be, A.mul_coords(A.unit, e), e) or not _tensors_eq(
                be, A.mul_coords(e, A.unit), e
            ):
                ok, wit = False, "basis %d" % i
                break
        check("unit law", ok, wit)

    # coassociativity: (coproduct (x) id) vs (id (x) coproduct)
    ok, wit = True, None
    for i in range(d):
        lhs = [[[A.zero_scalar()] * d for _ in range(d)] for _ in range(d)]
        rhs = [[[A.zero_scalar()] * d for _ in range(d)] for _ in range(d)]
        for j, k, c in A.comult[i]:
            for a, b, c2 in A.comult[j]:
                lhs[a][b][k] = lhs[a][b][k] + c * c2
            for a, b, c2 in A.comult[k]:
                rhs[j][a][b] = rhs[j][a][b] + c * c2
        if not _tensors_eq(be, lhs, rhs):
            ok, wit = False, "basis %d" % i
            break
    check("coassociativity", ok, wit)

    # counit law
    ok, wit = True, None
    for i in range(d):
        left = [A.zero_scalar()] * d
        right = [A.zero_scalar()] * d
        for j, k, c in A.comult[i]:
            right[j] = right[j] + c * A.counit[k]
            left[k] = left[k] + c * A.counit[j]
        e = [1 if t == i else 0 for t in range(d)]
        if not _tensors_eq(be, left, e) or not _tensors_eq(be, right, e):
            ok, wit = False, "basis %d" % i
            break
    check("counit law", ok, wit)

    # antipode law: m(S (x) id)coproduct(a) = eps(a) 1 = m(id (x) S)coproduct(a)
    if A.unit is not None:
        ok, wit = True, None
        for i in range(d):
            l = [A.zero_scalar()] * d
            r = [A.zero_scalar()] * d
            for j, k, c in A.comult[i]:
                sj = A.antipode_coords([1 if t == j else 0 for t in range(d)])
                sk = A.antipode_coords([1 if t == k else 0 for t in range(d)])
                pj = A.mul_coords(sj, [1 if t == k else 0 for t in range(d)])
                pk = A.mul_coords([1 if t == j else 0 for t in range(d)], sk)
                l = [x + c * y for x, y in zip(l, pj)]
                r = [x + c * y for x, y in zip(r, pk)]
            target = [A.counit[i] * u for u in A.unit]
            if not _tensors_eq(be, l, target) or not _tensors_eq(be, r, target):
                ok, wit = False, "basis %d" % i
                break
        check("antipode law", ok, wit)

    # invariance of the integrals
    if A.unit is not None:
        ok, wit = True, None
        for i in range(d):
            acc = [A.zero_scalar()] * d
            for j, k, c in A.comult[i]:
                acc[j] = acc[j] + c * A.left_integral[k]
            target = [A.left_integral[i] * u for u in A.unit]
            if not _tensors_eq(be, acc, target):
                ok, wit = False, "basis %d" % i
                break
        check("left invariance", ok, wit)

        ok, wit = True, None
        for i in range(d):
            acc = [A.zero_scalar()] * d
            for j, k, c in A.comult[i]:
                acc[k] = acc[k] + c * A.right_integral[j]
            target = [A.right_integral[i] * u for u in A.unit]
            if not _tensors_eq(be, acc, target):
                ok, wit = False, "basis %d" % i
                break
        check("right invariance", ok, wit)

    # faithfulness
    try:
        linalg.inverse(A.gram_phi(), be)
        check("faithfulness of phi", True)
    except linalg.SingularMatrixError:
        check("faithfulness of phi", False, "singular Gram matrix")
    try:
        linalg.inverse(A.gram_psi(), be)
        check("faithfulness of psi", True)
    except linalg.SingularMatrixError:
        check("faithfulness of psi", False, "singular Gram matrix")

    if A.is_star:
        # involution: (a*)* = a
        ok, wit = True, None
        for i in range(d):
            e = [1 if t == i else 0 for t in range(d)]
            if not _tensors_eq(be, A.star_coords(A.star_coords(e)), e):
                ok, wit = False, "basis %d" % i
                break
        check("star involution", ok, wit)

        # star antihomomorphism: (ab)* = b* a*
        ok, wit = True, None
        for i in range(d):
            for j in range(d):
                lhs = A.star_coords(A.mult[i][j])
                rhs = A.mul_coords(
                    A.star_coords([1 if t == j else 0 for t in range(d)]),
                    A.star_coords([1 if t == i else 0 for t in range(d)]),
                )
                if not _tensors_eq(be, lhs, rhs):
                    ok, wit = False, "basis (%d,%d)" % (i, j)
                    break
            if not ok:
                break
        check("star antihomomorphism", ok, wit)

        # coproduct is a *-homomorphism
        ok, wit = True, None
        for i in range(d):
            si = A.star_coords([1 if t == i else 0 for t in range(d)])
            lhs = A.comult_dense(si)
            rhs = [[A.zero_scalar()] * d for _ in range(d)]
            for j, k, c in A.comult[i]:
                sj = A.star_coords([1 if t == j else 0 for t in range(d)])
                sk = A.star_coords([1 if t == k else 0 for t in range(d)])
                cc = be.conj(c)
                for a in range(d):
                    if be.is_zero(sj[a]):
                        continue
                    for b in range(d):
                        rhs[a][b] = rhs[a][b] + cc * sj[a] * sk[b]
            if not _tensors_eq(be, lhs, rhs):
                ok, wit = False, "basis %d" % i
                break
        check("coproduct *-homomorphism", ok, wit)

        # S o * o S o * = id
        ok, wit = True, None
        for i in range(d):
            e = [1 if t == i else 0 for t in range(d)]
            v = A.antipode_coords(A.star_coords(A.antipode_coords(A.star_coords(e))))
            if not _tensors_eq(be, v, e):
                ok, wit = False, "basis %d" % i
                break
        check("S*S* = id", ok, wit)

    return reports


# ---------------------------------------------------------------------------
# dual construction


def build_dual(A: FiniteQuantumGroup) -> DualResult:
    """The dual quantum group on the basis w_i = phi(. a_i)."""
    be = A.backend
    d = A.dim
    P = A.gram_phi()
    try:
        Q = linalg.inverse(P, be)
    except linalg.SingularMatrixError as exc:
        raise FaithfulnessError("left integral is not faithful") from exc

    def functional_to_coords(values):
        # w = sum_k coeff_k w_k has values w(a_m) = sum_k P[m][k] coeff_k
        return linalg.mat_vec(Q, values)

    # product dual to the coproduct
    mult_hat = []
    for i in range(d):
        plane = []
        for j in range(d):
            values = []
            for x in range(d):
                acc = A.zero_scalar()
                for a, b, c in A.comult[x]:
                    acc = acc + c * P[a][i] * P[b][j]
                values.append(acc)
            plane.append(functional_to_coords(values))
        mult_hat.append(plane)

    # coproduct dual to the product: T_i = w_i(a_x a_y) = (P C P^T)[x][y]
    comult_hat = []
    for i in range(d):
        T = [[sum(A.mult[x][y][k] * P[k][i] for k in range(d)) for y in range(d)] for x in range(d)]
        C = linalg.mat_mul(linalg.mat_mul(Q, T), linalg.transpose(Q))
        terms = [(j, k, C[j][k]) for j in range(d) for k in range(d) if not be.is_zero(C[j][k])]
        comult_hat.append(terms)

    counit_hat = [sum(A.unit[m] * P[m][i] for m in range(d)) for i in range(d)]

    antipode_hat = []
    for i in range(d):
        values = [sum(A.antipode[m][k] * P[k][i] for k in range(d)) for m in range(d)]
        antipode_hat.append(functional_to_coords(values))

    star_hat = None
    if A.is_star:
        star_hat = []
        for i in range(d):
            values = []
            for m in range(d):
                acc = A.zero_scalar()
                for k in range(d):
                    for l in range(d):
                        acc = acc + A.antipode[m][k] * be.conj(A.star[k][l]) * be.conj(P[l][i])
                values.append(acc)
            star_hat.append(functional_to_coords(values))

    unit_hat = functional_to_coords(list(A.counit))

    # right integral on the dual: psi_hat(w_i) = eps(a_i)
    psi_hat = list(A.counit)

    # left integral on the dual: phi_hat(w_i) = eps(b_i) where w_i = psi(b_i .)
    Ppsi = A.gram_psi()
    phi_hat = []
    for i in range(d):
        col = [P[m][i] for m in range(d)]
        try:
            b = linalg.solve(linalg.transpose(Ppsi), col, be)
        except linalg.SingularMatrixError as exc:
            raise FaithfulnessError("right integral is not faithful") from exc
        phi_hat.append(sum(bc * e for bc, e in zip(b, A.counit)))

    dual = FiniteQuantumGroup(
        dim=d,
        basis_labels=["w[%s]" % lbl for lbl in A.basis_labels],
        mult=mult_hat,
        comult=comult_hat,
        counit=counit_hat,
        antipode=antipode_hat,
        star=star_hat,
        unit=unit_hat,
        left_integral=phi_hat,
        right_integral=psi_hat,
        backend=be,
        name="dual(%s)" % A.name,
    )
    return DualResult(dual=dual, pairing=P)


def transport(A: FiniteQuantumGroup, M, name=None) -> FiniteQuantumGroup:
    """Re-express A on the basis b_x = sum_i M[x][i] a_i."""
    be = A.backend
    d = A.dim
    Minv = linalg.inverse(M, be)
    mult = [[[A.zero_scalar()] * d for _ in range(d)] for _ in range(d)]
    for x in range(d):
        for y in range(d):
            prod = A.mul_coords(M[x], M[y])  # in a-basis
            new = linalg.vec_mat(prod, Minv)
            mult[x][y] = new
    comult = []
    for x in range(d):
        D = A.comult_dense(M[x])
        C = linalg.mat_mul(linalg.mat_mul(linalg.transpose(Minv), D), Minv)
        comult.append([(j, k, C[j][k]) for j in range(d) for k in range(d) if not be.is_zero(C[j][k])])
    counit = [A.counit_of(M[x]) for x in range(d)]
    antipode = [linalg.vec_mat(A.antipode_coords(M[x]), Minv) for x in range(d)]
    star = None
    if A.is_star:
        star = [linalg.vec_mat(A.star_coords(M[x]), Minv) for x in range(d)]
    unit = linalg.vec_mat(A.unit, Minv) if A.unit is not None else None
    phi = [A.phi_of(M[x]) for x in range(d)]
    psi = [A.psi_of(M[x]) for x in range(d)]
    return FiniteQuantumGroup(
        dim=d,
        basis_labels=list(A.basis_labels),
        mult=mult,
        comult=comult,
        counit=counit,
        antipode=antipode,
        star=star,
        unit=unit,
        left_integral=phi,
        right_integral=psi,
        backend=be,
        name=name or A.name,
    )


def tensors_equal(A: FiniteQuantumGroup, B: FiniteQuantumGroup) -> bool:
    """Structure-tensor equality (same dimension and backend assumed)."""
    if A.dim != B.dim:
        return False
    be = A.backend
    d = A.dim
    if not _tensors_eq(be, A.mult, B.mult):
        return False
    for i in range(d):
        da = [[A.zero_scalar()] * d for _ in range(d)]
        db = [[A.zero_scalar()] * d for _ in range(d)]
        for j, k, c in A.comult[i]:
            da[j][k] = da[j][k] + c
        for j, k, c in B.comult[i]:
            db[j][k] = db[j][k] + c
        if not _tensors_eq(be, da, db):
            return False
    pairs = [(A.counit, B.counit), (A.antipode, B.antipode), (A.left_integral, B.left_integral), (A.right_integral, B.right_integral)]
    if A.unit is not None or B.unit is not None:
        if (A.unit is None) != (B.unit is None):
            return False
        pairs.append((A.unit, B.unit))
    if A.is_star != B.is_star:
        return False
    if A.is_star:
        pairs.append((A.star, B.star))
    return all(_tensors_eq(be, x, y) for x, y in pairs)


# ---------------------------------------------------------------------------
# Fourier transform and friends


def fourier(A: FiniteQuantumGroup, a: Element) -> Functional:
    """F(a) = phi(. a), returned by its values on the basis."""
    if a.owner is not A:
        raise OwnerMismatchError("element does not belong to this quantum group")
    P = A.gram_phi()
    return Functional(A, linalg.mat_vec(P, a.coords))


def inverse_fourier(A: FiniteQuantumGroup, w: Functional) -> Element:
    """The unique a with phi(. a) = w, by exact solve against the Gram matrix."""
    if w.owner is not A:
        raise OwnerMismatchError("functional does not belong to this quantum group")
    try:
        coords = linalg.solve(A.gram_phi(), w.values, A.backend)
    except linalg.SingularMatrixError as exc:
        raise FaithfulnessError("left integral is not faithful") from exc
    return Element(A, coords)


def psi_hat(A: FiniteQuantumGroup, w: Functional):
    """Dual right integral: psi_hat(phi(. a)) = eps(a)."""
    return A.counit_of(inverse_fourier(A, w).coords)


def epsilon_hat(A: FiniteQuantumGroup, w: Functional):
    """Dual counit: eps_hat(w) = w(1)."""
    return sum(u * v for u, v in zip(A.unit, w.values))


def convolve(A: FiniteQuantumGroup, a: Element, b: Element) -> Element:
    """a*b = phi(S^{-1}(b_(1)) a) b_(2)."""
    if a.owner is not A or b.owner is not A:
        raise OwnerMismatchError("elements do not belong to this quantum group")
    be = A.backend
    d = A.dim
    Pa = linalg.mat_vec(A.gram_phi(), a.coords)  # Pa[m] = phi(a_m a)
    Sinv = A.antipode_inv_matrix()
    out = [A.zero_scalar()] * d
    for i, bi in enumerate(b.coords):
        if be.is_zero(bi):
            continue
        for j, k, c in A.comult[i]:
            scal = sum(Sinv[j][m] * Pa[m] for m in range(d))
            out[k] = out[k] + bi * c * scal
    return Element(A, out)


def convolve_alt(A: FiniteQuantumGroup, a: Element, b: Element) -> Element:
    """The equivalent expression a*b = phi(S^{-1}(b) a_(2)) a_(1)."""
    if a.owner is not A or b.owner is not A:
        raise OwnerMismatchError("elements do not belong to this quantum group")
    be = A.backend
    d = A.dim
    sb = A.antipode_inv_coords(b.coords)
    P = A.gram_phi()
    out = [A.zero_scalar()] * d
    for i, ai in enumerate(a.coords):
        if be.is_zero(ai):
            continue
        for j, k, c in A.comult[i]:
            scal = sum(sb[m] * P[m][k] for m in range(d))
            out[j] = out[j] + ai * c * scal
    return Element(A, out)


def plancherel_check(A: FiniteQuantumGroup, a: Element, check_positivity=True, tolerance=1e-9):
    """Check psi_hat(w* w) = phi(a* a) for w = F(a); returns CheckReports."""
    if not A.is_star:
        raise StructureError("Plancherel needs a *-structure")
    suite = "plancherel:" + A.name
    w = fourier(A, a)
    lhs = psi_hat(A, w.star() * w)
    rhs = A.phi_of((a.star() * a).coords)
    reports = [
        make_report(
            suite,
            "psi_hat(w*w) = phi(a*a)",
            A.backend.is_zero(lhs - rhs),
            "lhs=%r rhs=%r" % (lhs, rhs),
        )
    ]
    if check_positivity:
        z = A.backend.to_complex(rhs)
        ok = z.real >= -tolerance and abs(z.imag) <= tolerance
        reports.append(make_report(suite, "phi(a*a) numerically positive", ok, "value=%r" % (z,)))
    return reports


def find_cointegral(A: FiniteQuantumGroup):
    """Basis of {h : a h = eps(a) h for all a}, by exact nullspace."""
    d = A.dim
    rows = []
    for i in range(d):
        for k in range(d):
            row = []
            for j in range(d):
                v = A.mult[i][j][k]
                if k == j:
                    v = v - A.counit[i]
                row.append(v)
            rows.append(row)
    return [Element(A, v) for v in linalg.nullspace(rows, A.backend)]


def classify_type(A: FiniteQuantumGroup) -> dict:
    compact = False
    if A.unit is not None:
        compact = True
        for i in range(A.dim):
            e = [1 if t == i else 0 for t in range(A.dim)]
            if not _tensors_eq(A.backend, A.mul_coords(A.unit, e), e) or not _tensors_eq(
                A.backend, A.mul_coords(e, A.unit), e
            ):
                compact = False
                break
    discrete = bool(find_cointegral(A))
    return {"compact": compact, "discrete": discrete}


def dual_type_check(A: FiniteQuantumGroup) -> list:
    """Theorem: compact => phi is a cointegral in the dual; discrete => eps is a dual unit."""
    types = classify_type(A)
    if not types["compact"]:
        raise StructureError("dual_type_check requires compact type")
    be = A.backend
    suite = "dual-type:" + A.name
    reports = []

    Phi = fourier(A, A.one())  # the functional phi itself
    ok, wit = True, None
    for i in range(A.dim):
        w = fourier(A, A.basis_element(i))
        lhs = w * Phi
        rhs = epsilon_hat(A, w) * Phi
        if not lhs == rhs:
            ok, wit = False, "dual basis %d" % i
            break
    reports.append(make_report(suite, "w phi = eps_hat(w) phi", ok, wit))

    if types["discrete"]:
        eps = Functional(A, list(A.counit))
        ok, wit = True, None
        for i in range(A.dim):
            w = fourier(A, A.basis_element(i))
            if not (eps * w == w and w * eps == w):
                ok, wit = False, "dual basis %d" % i
                break
        reports.append(make_report(suite, "eps is a unit of the dual product", ok, wit))
    return reports


# ---------------------------------------------------------------------------
# group-like projections and the modular element


def is_group_like_projection(A: FiniteQuantumGroup, h: Element) -> bool:
    """h != 0, h^2 = h = h*, and coproduct(h)(1 (x) h) = h (x) h, all exact."""
    if not A.is_star:
        raise StructureError("group-like projections need a *-structure")
    if h.owner is not A:
        raise OwnerMismatchError("element does not belong to this quantum group")
    be = A.backend
    if h.is_zero():
        return False
    if not (h * h == h and h.star() == h):
        return False
    d = A.dim
    D = A.comult_dense(h.coords)
    # (a_j (x) a_k)(1 (x) h) = a_j (x) a_k h
    lhs = [[A.zero_scalar()] * d for _ in range(d)]
    for j in range(d):
        for k in range(d):
            if be.is_zero(D[j][k]):
                continue
            prod = A.mul_coords([1 if t == k else 0 for t in range(d)], h.coords)
            for l in range(d):
                lhs[j][l] = lhs[j][l] + D[j][k] * prod[l]
    rhs = [[hj * hl for hl in h.coords] for hj in h.coords]
    return _tensors_eq(be, lhs, rhs)


def fourier_group_like(A: FiniteQuantumGroup, h: Element) -> Functional:
    """F(h) under the phi(h)=1 normalization; verified group-like in the dual."""
    if not is_group_like_projection(A, h):
        raise StructureError("not a group-like projection")
    ph = A.phi_of(h.coords)
    if A.backend.is_zero(ph):
        raise FaithfulnessError("phi(h) = 0 contradicts faithfulness")
    A2 = A.rescaled_phi(A.backend.normalize(1) / ph)
    dual = build_dual(A2).dual
    # F(h) = sum h_i w_i, so its dual-basis coordinates are h's coordinates
    h_hat_dual = Element(dual, [A.backend.normalize(c) for c in h.coords])
    if not is_group_like_projection(dual, h_hat_dual):
        raise StructureError("Fourier transform failed the dual group-like check")
    return fourier(A2, A2.element(h.coords))


def modular_element(A: FiniteQuantumGroup) -> Element:
    """The unique invertible delta with (phi (x) id)coproduct(a) = phi(a) delta."""
    be = A.backend
    d = A.dim
    rows, rhs = [], []
    for i in range(d):
        L = [A.zero_scalar()] * d
        for j, k, c in A.comult[i]:
            L[k] = L[k] + c * A.left_integral[j]
        for k in range(d):
            row = [A.zero_scalar()] * d
            row[k] = A.left_integral[i]
            rows.append(row)
            rhs.append(L[k])
    try:
        coords = linalg.solve(rows, rhs, be)
    except (linalg.SingularMatrixError, linalg.InconsistentSystemError) as exc:
        raise StructureError("no modular element solves the defining system") from exc
    # invertibility: left multiplication by delta must be invertible
    Lmat = [A.mul_coords(coords, [1 if t == i else 0 for t in range(d)]) for i in range(d)]
    try:
        linalg.inverse(linalg.transpose(Lmat), be)
    except linalg.SingularMatrixError as exc:
        raise StructureError("modular element is not invertible") from exc
    return Element(A, coords)
