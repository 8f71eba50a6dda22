"""The Alvis-Curtis matrix a_{lam mu} between a weight-2 block and its conjugate,
its closed formulas, and its behaviour across [2:k]-pairs."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import as_partition, conjugate, is_e_regular
from .blocks import BlockId, classify, enumerate_block, mullineux, richards_classes
from .decomp import cartan_matrix, decomposition_matrix, inverse_decomposition_matrix
from .errors import InternalError, InvalidArgument, Unsupported
from .matrix import LabeledMatrix
from .pairs import PairInfo, conjugate_pair, phi_table
from .report import Checker, CheckResult


@dataclass(frozen=True)
class ACMatrix:
    B: BlockId
    Bprime: BlockId
    matrix: LabeledMatrix

    def __getitem__(self, key):
        return self.matrix[key]

    def to_json(self) -> dict:
        return {"rows_block": self.B.to_json(), "cols_block": self.Bprime.to_json(),
                **self.matrix.to_json()}


@lru_cache(maxsize=None)
def conjugated_decomposition(B: BlockId) -> LabeledMatrix:
    """Rows nu in B, columns mu in B': d_{nu' mu}."""
    Bc = B.conjugate()
    Dc = decomposition_matrix(Bc)
    rows = enumerate_block(B)
    return LabeledMatrix(rows, Dc.cols, [[Dc[conjugate(nu), mu] for mu in Dc.cols] for nu in rows])


@lru_cache(maxsize=None)
def ac_matrix(B: BlockId) -> ACMatrix:
    if B.weight != 2:
        raise Unsupported("Alvis-Curtis matrices are implemented for weight 2 only")
    A = inverse_decomposition_matrix(B) @ conjugated_decomposition(B)
    return ACMatrix(B, B.conjugate(), A)


@lru_cache(maxsize=None)
def singular_labels(B: BlockId) -> dict:
    """Label -> partition for the e-singular partitions of B, read off the
    least elements of the Richards classes and matched to [0,0], [0,1], [j,0]."""
    least = [members[-1] for members in richards_classes(B).classes.values()]
    found = {classify(lam, B).label: lam for lam in least}
    expected = {(0, 0), (0, 1)} | {(j, 0) for j in range(1, B.e)}
    if set(found) != expected:
        raise InternalError(f"singular labels of {B} are {sorted(found)}")
    singular = {lam for lam in enumerate_block(B) if not is_e_regular(lam, B.e)}
    if singular != set(found.values()):
        raise InternalError(f"Richards minima of {B} differ from its e-singular partitions")
    return found


def predicted_ac(lam, mu, B: BlockId) -> int:
    lam, mu = as_partition(lam), as_partition(mu)
    Bc = B.conjugate()
    if not B.contains(lam) or not Bc.contains(mu):
        raise InvalidArgument(f"need lam in {B} and mu in {Bc}")
    if is_e_regular(mu, B.e):
        return int(lam == mullineux(mu, Bc))
    e = B.e
    col = {p: lab for lab, p in singular_labels(Bc).items()}[mu]
    lab = classify(lam, B)
    a, b, d, eps = lab.a, lab.b, lab.partial, lab.eps
    sign = -1 if d % 2 else 1
    top_row = a == e - 1  # lam in {[e-1, b]}
    ascending = b == a + 1  # lam in {[a, a+1]}
    if col == (0, 1):
        if eps == 0:
            return sign
        if top_row and b < e:
            return -sign
        return 0
    if col == (0, 0):
        if eps == 0:
            return 0 if a == b else sign
        return sign if (top_row or ascending) else 2 * sign
    j = col[0]
    hit = (b == e - j + eps and e - j <= a < e) or (a == e - j - eps and eps <= b < e - j)
    return (-1 if (d + j + 1) % 2 else 1) if hit else 0


@lru_cache(maxsize=None)
def predicted_ac_matrix(B: BlockId) -> LabeledMatrix:
    rows, cols = enumerate_block(B), enumerate_block(B.conjugate())
    return LabeledMatrix(rows, cols, [[predicted_ac(l, m, B) for m in cols] for l in rows])


def _ceil_half(x: int) -> int:
    return -((-x) // 2)


def c_one_set(P: PairInfo, lower: bool = False) -> list:
    """Partitions nu with c_{alpha nu} = 1 (or c_{alpha~ nu} = 1 in C)."""
    block = P.C if lower else P.B
    alpha = (P.exceptional_C if lower else P.exceptional_B)[0]
    C = cartan_matrix(block)
    return [nu for nu, c in C.row(alpha).items() if c == 1]


def l_list_labels(a: int, b: int, e: int) -> set:
    labels = {(a - 1, b), (a, b + 1)}
    if a <= e - 2:
        labels.add((a + 1, b - 1))
    if a == b and a <= e - 2:
        labels.add((a + 1, a + 2))
    return labels


def transfer_check(P: PairInfo) -> CheckResult:
    """Rows of A transfer through Phi; the alpha row obeys the ceiling formulas."""
    ck = Checker("ac-transfer", f"{P.B}->{P.C}")
    Pc = conjugate_pair(P)
    if Pc.k != P.k:
        raise InternalError("conjugate pair has a different k")
    ph, phc = phi_table(P), phi_table(Pc)
    AB, AC = ac_matrix(P.B), ac_matrix(P.C)
    cols = enumerate_block(Pc.B)
    if P.k == 1:
        alpha, beta, gamma = P.exceptional_B
        ck.equal(Pc.exceptional_B, tuple(conjugate(x) for x in (gamma, beta, alpha)),
                 what="exceptional triple of B'")
        ck.equal(Pc.exceptional_C, tuple(conjugate(x) for x in P.exceptional_C[::-1]),
                 what="exceptional triple of C'")
    for lam in enumerate_block(P.B):
        for mu in cols:
            if P.k == 1 and lam == P.alpha and mu != conjugate(P.exceptional_B[2]):
                continue
            ck.equal(AB[lam, mu], AC[ph[lam], phc[mu]], lam=lam, mu=mu)
    if P.k == 1:
        alpha, _, gamma = P.exceptional_B
        alpha_t, _, gamma_t = P.exceptional_C
        nus, nus_t = c_one_set(P), c_one_set(P, lower=True)
        a, b = classify(alpha, P.B).label
        ck.equal({classify(nu, P.B).label for nu in nus}, l_list_labels(a, b, P.B.e), what="c=1 set")
        CBc, CCc = cartan_matrix(P.B.conjugate()), cartan_matrix(P.C.conjugate())
        gamma_c, gamma_tc = conjugate(gamma), conjugate(gamma_t)
        for mu in cols:
            if mu == gamma_c:
                ck.equal(AB[alpha, mu], 1, what="gamma' column", mu=mu)
                for lam in enumerate_block(P.B):
                    ck.equal(AB[lam, mu], int(lam == alpha), what="gamma' column", lam=lam)
                continue
            mu_t = phc[mu]
            up = AC[alpha_t, mu_t] - sum(AC[n, mu_t] for n in nus_t)
            down = AB[alpha, mu] - sum(AB[n, mu] for n in nus)
            ck.equal(AB[alpha, mu], _ceil_half(up), what="alpha row from C", mu=mu)
            ck.equal(AC[alpha_t, mu_t], _ceil_half(down), what="alpha~ row from B", mu=mu)
            ck.equal(down % 2 == 1, CBc[gamma_c, mu] == 1, what="parity in B", mu=mu)
            ck.equal(up % 2 == 1, CCc[gamma_tc, mu_t] == 1, what="parity in C", mu=mu)
    return ck.done()


def lez_check(P: PairInfo) -> CheckResult:
    if P.k != 1:
        raise InvalidArgument("exceptional identities need a [2:1]-pair")
    ck = Checker("lez-maine", f"{P.B}->{P.C}")
    EB, EC = inverse_decomposition_matrix(P.B), inverse_decomposition_matrix(P.C)
    al, be, ga = P.exceptional_B
    alt, bet, gat = P.exceptional_C
    for E, (x, y, z) in ((EB, (al, be, ga)), (EC, (alt, bet, gat))):
        for lam in E.rows:
            ck.equal(E[lam, x] + E[lam, y] + E[lam, z], int(lam == x), lam=lam, what="triple sum")
    ph = phi_table(P)
    triple = {al, be, ga}
    nus, nus_t = c_one_set(P), c_one_set(P, lower=True)
    for lam in EB.rows:
        if lam == al:
            continue
        t = ph[lam]
        ck.equal(EB[lam, al], EC[t, alt] + EC[t, bet], lam=lam, what="e(lam,alpha)")
        ck.equal(EB[lam, be], EC[t, alt] + EC[t, gat], lam=lam, what="e(lam,beta)")
        ck.equal(EB[lam, ga], EC[t, bet] + EC[t, gat], lam=lam, what="e(lam,gamma)")
        ck.equal(EC[t, alt], EB[lam, al] + EB[lam, be], lam=lam, what="e(Phi lam,alpha~)")
        ck.equal(EC[t, bet], EB[lam, al] + EB[lam, ga], lam=lam, what="e(Phi lam,beta~)")
        ck.equal(EC[t, gat], EB[lam, be] + EB[lam, ga], lam=lam, what="e(Phi lam,gamma~)")
        for mu in EB.cols:
            if mu not in triple:
                ck.equal(EB[lam, mu], EC[t, ph[mu]], lam=lam, mu=mu, what="e transfers")
    for mu in EB.cols:
        if mu in triple:
            continue
        m = ph[mu]
        ck.equal(2 * EB[al, mu], EC[alt, m] - sum(EC[n, m] for n in nus_t), mu=mu, what="e(alpha,mu)")
        ck.equal(2 * EC[alt, m], EB[al, mu] - sum(EB[n, mu] for n in nus), mu=mu, what="e(alpha~,Phi mu)")
    ck.equal((EB[be, al], EC[bet, alt]), (-1, -1), what="e(beta,alpha)")
    ck.equal((EB[ga, al], EC[gat, alt]), (0, 0), what="e(gamma,alpha)")
    ck.equal((EB[ga, be], EC[gat, bet]), (-1, -1), what="e(gamma,beta)")
    return ck.done()


def cartan_duality_check(B: BlockId) -> CheckResult:
    ck = Checker("cartan-duality", B)
    Bc = B.conjugate()
    C, Cc = cartan_matrix(B), cartan_matrix(Bc)
    D, E = decomposition_matrix(B), inverse_decomposition_matrix(B)
    A = ac_matrix(B).matrix
    ck.equal((C @ E).as_lists(), D.transpose().as_lists(), what="C E = D^T")
    CA = C @ A
    ck.equal(CA.as_lists(), (D.transpose() @ conjugated_decomposition(B)).as_lists(), what="C A = D^T P D")
    for lam in CA.cols:
        if is_e_regular(lam, B.e):
            m = mullineux(lam, Bc)
            for mu in CA.rows:
                ck.equal(CA[mu, lam], C[m, mu], mu=mu, lam=lam, what="regular column")
    for mu in CA.rows:
        if is_e_regular(mu, B.e):
            m = mullineux(mu, B)
            for lam in CA.cols:
                ck.equal(CA[mu, lam], Cc[lam, m], mu=mu, lam=lam, what="regular row")
    return ck.done()


def involution_check(B: BlockId) -> CheckResult:
    ck = Checker("ac-involution", B)
    prod = ac_matrix(B).matrix @ ac_matrix(B.conjugate()).matrix
    ck.expect(prod.is_identity(), product=prod.as_lists())
    return ck.done()

