"""Independent brute-force oracle for Lie algebra cohomology values.

Builds algebras from explicit matrices, evaluates cochains as alternating
functions on basis sequences, and ranks with sympy. Shares no code with the
C++ library. Prints the values that the C++ tests freeze.
"""
import itertools
import sympy as sp


def elem(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def gl(n):
    return [elem(n, i, j) for i in range(n) for j in range(n)]


def so(n):
    return [elem(n, i, j) - elem(n, j, i) for i in range(n) for j in range(i + 1, n)]


def sl2():
    return [elem(2, 0, 1), elem(2, 1, 0), elem(2, 0, 0) - elem(2, 1, 1)]


def structure(basis):
    n = len(basis)
    flat = sp.Matrix.hstack(*[b.reshape(len(b), 1) for b in basis])
    c = {}
    for i in range(n):
        for j in range(n):
            br = basis[i] * basis[j] - basis[j] * basis[i]
            sol = flat.solve_least_squares(br.reshape(len(br), 1)) if n else None
            c[(i, j)] = [sp.nsimplify(x) for x in sol]
    return c


def heisenberg3():
    # p, q, z
    c = {(i, j): [0, 0, 0] for i in range(3) for j in range(3)}
    c[(0, 1)] = [0, 0, 1]
    c[(1, 0)] = [0, 0, -1]
    return c


def sign_sort(seq):
    if len(set(seq)) < len(seq):
        return 0, None
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1) ** inv, tuple(sorted(seq))


def eval_form(coeffs, seq):
    """coeffs: dict sorted-tuple -> value, seq: sequence of basis indices."""
    s, key = sign_sort(seq)
    if s == 0:
        return 0
    return s * coeffs.get(key, 0)


def eval_form_vectors(coeffs, vecs, n):
    # multilinear expansion over basis
    k = len(vecs)
    total = 0
    for seq in itertools.product(range(n), repeat=k):
        w = 1
        for a, idx in enumerate(seq):
            w *= vecs[a][idx]
            if w == 0:
                break
        if w != 0:
            total += w * eval_form(coeffs, seq)
    return total


def ce_matrix(c, n, k):
    """Matrix of d: Λ^k -> Λ^{k+1} via evaluation of the alternating sum."""
    src = list(itertools.combinations(range(n), k))
    dst = list(itertools.combinations(range(n), k + 1))
    M = sp.zeros(len(dst), len(src))
    for col, I in enumerate(src):
        phi = {I: 1}
        for row, J in enumerate(dst):
            val = 0
            for a in range(k + 1):
                for b in range(a + 1, k + 1):
                    br = c[(J[a], J[b])]
                    rest = [J[t] for t in range(k + 1) if t != a and t != b]
                    for m in range(n):
                        if br[m] != 0:
                            val += (-1) ** (a + b + 2) * br[m] * eval_form(phi, [m] + rest)
            M[row, col] = val
    return M


def betti(c, n):
    ranks = [ce_matrix(c, n, k).rank() if k < n else 0 for k in range(n + 1)]
    dims = [sp.binomial(n, k) for k in range(n + 1)]
    return [dims[k] - ranks[k] - (ranks[k - 1] if k > 0 else 0) for k in range(n + 1)]


def basic_dims(c, n, sub):
    """Dimensions of the horizontal+invariant subspace of Λ^k g*, for sub as list of vectors."""
    out = []
    for k in range(n + 1):
        basis = list(itertools.combinations(range(n), k))
        rows = []
        for x in sub:
            # interior: (i_x phi)(e_J) = phi(x, e_J)
            for J in itertools.combinations(range(n), k - 1) if k > 0 else []:
                rows.append([sum(x[m] * eval_form({I: 1}, [m] + list(J)) for m in range(n)) for I in basis])
            # lie derivative: -sum phi(..., [x, e_j], ...)
            for J in basis:
                row = []
                for I in basis:
                    val = 0
                    for p in range(k):
                        br = [sum(x[d] * c[(d, J[p])][m] for d in range(n)) for m in range(n)]
                        for m in range(n):
                            if br[m] != 0:
                                seq = list(J)
                                seq[p] = m
                                val -= br[m] * eval_form({I: 1}, seq)
                    row.append(val)
                rows.append(row)
        if not rows:
            out.append(len(basis))
        else:
            out.append(len(basis) - sp.Matrix(rows).rank())
    return out


def basic_betti(c, n, sub):
    bases = []
    for k in range(n + 1):
        basis = list(itertools.combinations(range(n), k))
        rows = []
        for x in sub:
            for J in itertools.combinations(range(n), k - 1) if k > 0 else []:
                rows.append([sum(x[m] * eval_form({I: 1}, [m] + list(J)) for m in range(n)) for I in basis])
            for J in basis:
                row = []
                for I in basis:
                    val = 0
                    for p in range(k):
                        br = [sum(x[d] * c[(d, J[p])][m] for d in range(n)) for m in range(n)]
                        for m in range(n):
                            if br[m] != 0:
                                seq = list(J)
                                seq[p] = m
                                val -= br[m] * eval_form({I: 1}, seq)
                    row.append(val)
                rows.append(row)
        if rows:
            ns = sp.Matrix(rows).nullspace()
            B = sp.Matrix.hstack(*ns) if ns else sp.zeros(len(basis), 0)
        else:
            B = sp.eye(len(basis))
        bases.append(B)
    ranks = []
    for k in range(n + 1):
        if k == n or bases[k].shape[1] == 0:
            ranks.append(0)
            continue
        D = ce_matrix(c, n, k) * bases[k]
        ranks.append(D.rank())
    return [bases[k].shape[1] - ranks[k] - (ranks[k - 1] if k > 0 else 0) for k in range(n + 1)]


if __name__ == "__main__":
    print("heisenberg(3) betti", betti(heisenberg3(), 3))
    print("sl(2) betti", betti(structure(sl2()), 3))
    so3 = structure(so(3))
    print("so(3) brackets [A12,A13] [A12,A23] [A13,A23]", so3[(0, 1)], so3[(0, 2)], so3[(1, 2)])
    d0 = ce_matrix(so3, 3, 1)
    print("so(3) d on 1-forms (rows (01),(02),(12)):", d0.tolist())
    print("so(3) betti", betti(so3, 3))
    g2 = structure(gl(2))
    print("gl(2) betti", betti(g2, 4))
    a12 = [0, 1, -1, 0]
    print("gl(2)/so(2) basic dims", basic_dims(g2, 4, [a12]))
    print("gl(2)/so(2) basic betti", basic_betti(g2, 4, [a12]))
    g3 = structure(gl(3))
    so3_in_gl3 = []
    for (i, j) in [(0, 1), (0, 2), (1, 2)]:
        v = [0] * 9
        v[3 * i + j] = 1
        v[3 * j + i] = -1
        so3_in_gl3.append(v)
    print("gl(3)/so(3) basic dims", basic_dims(g3, 9, so3_in_gl3))
    print("gl(3)/so(3) basic betti", basic_betti(g3, 9, so3_in_gl3))
    print("gl(3) betti", betti(g3, 9))
    # Jacobi cyclic sum for [e0,e1]=e2, [e1,e2]=e0, [e2,e0]=e0
    c = {(i, j): [0, 0, 0] for i in range(3) for j in range(3)}
    def setb(i, j, v):
        c[(i, j)] = v
        c[(j, i)] = [-t for t in v]
    setb(0, 1, [0, 0, 1]); setb(1, 2, [1, 0, 0]); setb(2, 0, [1, 0, 0])
    def br(x, y):
        return [sum(x[a] * y[b] * c[(a, b)][m] for a in range(3) for b in range(3)) for m in range(3)]
    e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    J = [p + q + r for p, q, r in zip(br(br(e[0], e[1]), e[2]), br(br(e[1], e[2]), e[0]), br(br(e[2], e[0]), e[1]))]
    print("Jacobi residual (0,1,2):", J)
    # alternation of tr(ABC) on gl(2) at (E11, E12, E21)
    B = gl(2)
    tot = 0
    for perm in itertools.permutations(range(3)):
        s, _ = sign_sort(list(perm))
        M = B[[0, 1, 2][perm[0]]] * B[[0, 1, 2][perm[1]]] * B[[0, 1, 2][perm[2]]]
        tot += s * M.trace()
    print("Alt tr(ABC) on (E11,E12,E21):", tot)
