"""Pure-numpy implementations of the hot search kernels.

Same contracts as the numba module: these produce candidate arrays that
the exact layer re-verifies, so the two backends are interchangeable.
Selected with QUARTICLINES_BACKEND=numpy (or automatically when numba is
unavailable); slower, but dependency-light and easy to audit.
"""

import numpy as np

Q1 = 268435399
Q2 = 268435367


def _restrict_batch(fc, exp, A, B):
    """Coefficients of F(u*a + v*b) for each row of A, B; int64 (n, 5)."""
    n = A.shape[0]
    out = np.zeros((n, 5), dtype=np.int64)
    for t in range(fc.shape[0]):
        c = int(fc[t])
        if c == 0:
            continue
        poly = [np.full(n, c, dtype=np.int64)]
        for v in range(4):
            a = A[:, v]
            b = B[:, v]
            for _ in range(int(exp[t, v])):
                nxt = [poly[0] * a]
                for k in range(1, len(poly)):
                    nxt.append(poly[k] * a + poly[k - 1] * b)
                nxt.append(poly[-1] * b)
                poly = nxt
        for k, arr in enumerate(poly):
            out[:, k] += arr
    return out


def _hessian_wedge_zero_mask(f, q):
    """Boolean mask of rows whose (f, Hess f) minors all vanish mod q."""
    g = f % q
    g0, g1, g2, g3, g4 = (g[:, k] for k in range(5))
    h0 = (24 * g0 % q * g2 - 9 * g1 % q * g1) % q
    h1 = (72 * g0 % q * g3 - 12 * g1 % q * g2) % q
    h2 = (144 * g0 % q * g4 + 18 * g1 % q * g3 - 12 * g2 % q * g2) % q
    h3 = (72 * g1 % q * g4 - 12 * g2 % q * g3) % q
    h4 = (24 * g2 % q * g4 - 9 * g3 % q * g3) % q
    gs = (g0, g1, g2, g3, g4)
    hs = (h0, h1, h2, h3, h4)
    ok = np.ones(f.shape[0], dtype=bool)
    for i in range(5):
        for j in range(i + 1, 5):
            ok &= (gs[i] * hs[j] - gs[j] * hs[i]) % q == 0
    return ok


def _span_batch(P):
    """Integer spanning pairs from Plucker rows (vectorized per leading
    nonzero case)."""
    n = P.shape[0]
    A = np.zeros((n, 4), dtype=np.int64)
    B = np.zeros((n, 4), dtype=np.int64)
    p01, p02, p03, p12, p13, p23 = (P[:, k] for k in range(6))
    c0 = p01 != 0
    c1 = ~c0 & (p02 != 0)
    c2 = ~c0 & ~c1 & (p03 != 0)
    c3 = ~c0 & ~c1 & ~c2 & (p12 != 0)
    c4 = ~c0 & ~c1 & ~c2 & ~c3 & (p13 != 0)
    c5 = ~c0 & ~c1 & ~c2 & ~c3 & ~c4
    for mask, acols, bcols in (
        (c0, (p01, 0, -p12, -p13), (0, p01, p02, p03)),
        (c1, (p02, p12, 0, -p23), (0, 0, p02, p03)),
        (c2, (p03, p13, p23, 0), (0, 0, 0, p03)),
        (c3, (0, p12, 0, -p23), (0, 0, p12, p13)),
        (c4, (0, p13, p23, 0), (0, 0, 0, p13)),
        (c5, (0, 0, p23, 0), (0, 0, 0, p23)),
    ):
        if not mask.any():
            continue
        for k in range(4):
            col = acols[k]
            A[mask, k] = col[mask] if isinstance(col, np.ndarray) else col
            col = bcols[k]
            B[mask, k] = col[mask] if isinstance(col, np.ndarray) else col
    return A, B


def _gcd_rows(P):
    return np.gcd.reduce(np.abs(P), axis=1)


def stratum_block(H, kappa, m, p02=0):
    """Canonical Plucker vectors of one enumeration block (same blocking
    as the numba backend), in sweep order."""
    r = np.arange(-H, H + 1, dtype=np.int64)
    if kappa == 0:
        p03, p12, p13 = np.meshgrid(r, r, r, indexing="ij")
        p03, p12, p13 = p03.ravel(), p12.ravel(), p13.ravel()
        num = p02 * p13 - p03 * p12
        ok = num % m == 0
        p23 = np.where(ok, num // m, 0)
        ok &= (p23 >= -H) & (p23 <= H)
        P = np.stack(
            [np.full_like(p03, m), np.full_like(p03, p02), p03, p12, p13, p23], axis=1
        )[ok]
    elif kappa == 1:
        p03, p12, p23 = np.meshgrid(r, r, r, indexing="ij")
        p03, p12, p23 = p03.ravel(), p12.ravel(), p23.ravel()
        num = p03 * p12
        ok = num % m == 0
        p13 = np.where(ok, num // m, 0)
        ok &= (p13 >= -H) & (p13 <= H)
        z = np.zeros_like(p03)
        P = np.stack([z, np.full_like(p03, m), p03, p12, p13, p23], axis=1)[ok]
    elif kappa in (2, 3):
        p13, p23 = np.meshgrid(r, r, indexing="ij")
        p13, p23 = p13.ravel(), p23.ravel()
        z = np.zeros_like(p13)
        mcol = np.full_like(p13, m)
        if kappa == 2:
            P = np.stack([z, z, mcol, z, p13, p23], axis=1)
        else:
            P = np.stack([z, z, z, mcol, p13, p23], axis=1)
    elif kappa == 4:
        p23 = r.copy()
        z = np.zeros_like(p23)
        P = np.stack([z, z, z, z, np.full_like(p23, m), p23], axis=1)
    else:
        if m != 1:
            return np.empty((0, 6), dtype=np.int64)
        P = np.array([[0, 0, 0, 0, 0, 1]], dtype=np.int64)
    return P[_gcd_rows(P) == 1]


def _filter_candidates(P, fc, exp):
    if P.shape[0] == 0:
        return P
    A, B = _span_batch(P)
    f = _restrict_batch(fc, exp, A, B)
    contained = (f == 0).all(axis=1)
    square = _hessian_wedge_zero_mask(f, Q1) & _hessian_wedge_zero_mask(f, Q2)
    return P[contained | square]


def exhaustive_candidates(fc, exp, H, cap_per_slice=None):
    out = []
    for m in range(1, H + 1):
        for p02 in range(-H, H + 1):
            out.append(_filter_candidates(stratum_block(H, 0, m, p02), fc, exp))
    for kappa in range(1, 6):
        for m in range(1, H + 1):
            out.append(_filter_candidates(stratum_block(H, kappa, m), fc, exp))
    out = [o for o in out if o.shape[0]]
    return np.vstack(out) if out else np.empty((0, 6), np.int64)


def sieve_zp(fc, exp, p, cap_per_slice=None):
    """All affine F_p solutions of the mod-p bitangency conditions."""
    pivots = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    proj = []
    rng = np.arange(p, dtype=np.int64)
    for i, j in pivots:
        k, l = (idx for idx in range(4) if idx not in (i, j))
        slots = []
        if k > i:
            slots.append(("a", k))
        if l > i:
            slots.append(("a", l))
        if k > j:
            slots.append(("b", k))
        if l > j:
            slots.append(("b", l))
        grids = np.meshgrid(*([rng] * len(slots)), indexing="ij") if slots else []
        n = grids[0].size if slots else 1
        A = np.zeros((n, 4), dtype=np.int64)
        B = np.zeros((n, 4), dtype=np.int64)
        A[:, i] = 1
        B[:, j] = 1
        for (row, col), grid in zip(slots, grids):
            (A if row == "a" else B)[:, col] = grid.ravel()
        f = _restrict_batch(fc, exp, A, B) % p
        ok = _hessian_wedge_zero_mask(f, p)
        A, B = A[ok], B[ok]
        P = np.stack(
            [
                A[:, 0] * B[:, 1] - A[:, 1] * B[:, 0],
                A[:, 0] * B[:, 2] - A[:, 2] * B[:, 0],
                A[:, 0] * B[:, 3] - A[:, 3] * B[:, 0],
                A[:, 1] * B[:, 2] - A[:, 2] * B[:, 1],
                A[:, 1] * B[:, 3] - A[:, 3] * B[:, 1],
                A[:, 2] * B[:, 3] - A[:, 3] * B[:, 2],
            ],
            axis=1,
        ) % p
        proj.append(P)
    proj = np.vstack(proj)
    if proj.shape[0] == 0:
        return proj
    lams = np.arange(1, p, dtype=np.int64)
    aff = (proj[None, :, :] * lams[:, None, None]) % p
    aff = aff.reshape(-1, 6)
    order = np.lexsort(aff.T[::-1])
    return np.ascontiguousarray(aff[order])


def crt_join(z1, z2, p1, p2, H, fc, exp, chunk=128, cap_per_row=None):
    M = p1 * p2
    r1 = np.arange(p1, dtype=np.int64)
    r2 = np.arange(p2, dtype=np.int64)
    inv = pow(int(p1) % int(p2), -1, int(p2))
    grid = r1[:, None] + p1 * ((inv * (r2[None, :] - r1[:, None])) % p2)
    lift = np.where(grid > M // 2, grid - M, grid).astype(np.int64).ravel()
    out = []
    n2 = z2.shape[0]
    for start in range(0, z1.shape[0], chunk):
        part = z1[start : start + chunk]
        npart = part.shape[0]
        ii, jj = np.meshgrid(
            np.arange(npart, dtype=np.int64), np.arange(n2, dtype=np.int64), indexing="ij"
        )
        ii, jj = ii.ravel(), jj.ravel()
        V = np.empty((ii.shape[0], 6), dtype=np.int64)
        alive = np.ones(ii.shape[0], dtype=bool)
        for c in range(6):
            v = lift[part[ii, c] * p2 + z2[jj, c]]
            V[:, c] = v
            alive &= (v >= -H) & (v <= H)
            if c in (1, 3):
                ii, jj, V = ii[alive], jj[alive], V[alive]
                alive = np.ones(ii.shape[0], dtype=bool)
        V = V[alive]
        if V.shape[0] == 0:
            continue
        keep = V[:, 0] * V[:, 5] - V[:, 1] * V[:, 4] + V[:, 2] * V[:, 3] == 0
        V = V[keep]
        if V.shape[0] == 0:
            continue
        # canonical sign: first nonzero positive
        lead = np.zeros(V.shape[0], dtype=np.int64)
        undecided = np.ones(V.shape[0], dtype=bool)
        for c in range(6):
            sel = undecided & (V[:, c] != 0)
            lead[sel] = V[sel, c]
            undecided &= ~sel
        V = V[(lead > 0) & (_gcd_rows(V) == 1)]
        if V.shape[0] == 0:
            continue
        filtered = _filter_candidates(V, fc, exp)
        if filtered.shape[0]:
            out.append(filtered)
    if not out:
        return np.empty((0, 6), dtype=np.int64)
    return np.vstack(out)


def rational_points(fc, exp, H):
    r = np.arange(-H, H + 1, dtype=np.int64)
    out = []
    for x0 in range(0, H + 1):
        for x1 in range(-H, H + 1):
            if x0 == 0 and x1 < 0:
                continue
            x2, x3 = np.meshgrid(r, r, indexing="ij")
            x2, x3 = x2.ravel(), x3.ravel()
            c0 = np.full_like(x2, x0)
            c1 = np.full_like(x2, x1)
            pts = np.stack([c0, c1, x2, x3], axis=1)
            if x0 == 0 and x1 == 0:
                keep = (x2 > 0) | ((x2 == 0) & (x3 > 0))
                pts = pts[keep]
            vals = np.zeros(pts.shape[0], dtype=np.int64)
            for t in range(fc.shape[0]):
                c = int(fc[t])
                if c == 0:
                    continue
                term = np.full(pts.shape[0], c, dtype=np.int64)
                for v in range(4):
                    for _ in range(int(exp[t, v])):
                        term = term * pts[:, v]
                vals += term
            pts = pts[(vals == 0) & (np.gcd.reduce(np.abs(pts), axis=1) == 1)]
            if pts.shape[0]:
                out.append(pts)
    if not out:
        return np.empty((0, 4), dtype=np.int64)
    return np.vstack(out)
