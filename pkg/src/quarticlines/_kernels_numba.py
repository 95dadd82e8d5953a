"""numba implementations of the hot search kernels.

These loops dominate the runtime of the height-bounded searches: sweeping
the row-echelon strata of the line Grassmannian, restricting the quartic
to millions of candidate lines in int64, and joining residue classes in
the two-prime sieve.  Everything emitted here is a *candidate*: the exact
layer re-classifies every survivor with rational arithmetic, so a modular
false positive can never reach a catalog.

The bitangency filter is the Hessian proportionality test: f is a scalar
multiple of the square of a quadratic (or a fourth power, or zero) exactly
when all 2x2 minors of (f, Hess(f)) vanish.  Those minors are integer
polynomials in the line data, so checking them mod q can only over-accept,
never drop a true bitangent.
"""

import numpy as np
from numba import njit, prange

# primes below 2^28: minor products stay well inside int64
Q1 = 268435399
Q2 = 268435367


@njit(cache=True, inline="always")
def _gcd2(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, inline="always")
def _gcd6(p0, p1, p2, p3, p4, p5):
    g = _gcd2(p0, p1)
    g = _gcd2(g, p2)
    g = _gcd2(g, p3)
    g = _gcd2(g, p4)
    g = _gcd2(g, p5)
    return g


@njit(cache=True)
def _restrict(fc, exp, a, b, out):
    """out[0..4] = coefficients of F(u*a + v*b) in int64."""
    for k in range(5):
        out[k] = 0
    for t in range(fc.shape[0]):
        c = fc[t]
        if c == 0:
            continue
        p0 = c
        p1 = np.int64(0)
        p2 = np.int64(0)
        p3 = np.int64(0)
        p4 = np.int64(0)
        ln = 1
        for v in range(4):
            av = a[v]
            bv = b[v]
            for _ in range(exp[t, v]):
                if ln == 1:
                    p1 = p0 * bv
                    p0 = p0 * av
                elif ln == 2:
                    p2 = p1 * bv
                    p1 = p1 * av + p0 * bv
                    p0 = p0 * av
                elif ln == 3:
                    p3 = p2 * bv
                    p2 = p2 * av + p1 * bv
                    p1 = p1 * av + p0 * bv
                    p0 = p0 * av
                else:
                    p4 = p3 * bv
                    p3 = p3 * av + p2 * bv
                    p2 = p2 * av + p1 * bv
                    p1 = p1 * av + p0 * bv
                    p0 = p0 * av
                ln += 1
        out[0] += p0
        out[1] += p1
        out[2] += p2
        out[3] += p3
        out[4] += p4


@njit(cache=True, inline="always")
def _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, q):
    """True iff all minors of (f, Hess f) vanish mod q."""
    g0 = f0 % q
    g1 = f1 % q
    g2 = f2 % q
    g3 = f3 % q
    g4 = f4 % q
    h0 = (24 * g0 % q * g2 - 9 * g1 % q * g1) % q
    h1 = (72 * g0 % q * g3 - 12 * g1 % q * g2) % q
    h2 = (144 * g0 % q * g4 + 18 * g1 % q * g3 - 12 * g2 % q * g2) % q
    h3 = (72 * g1 % q * g4 - 12 * g2 % q * g3) % q
    h4 = (24 * g2 % q * g4 - 9 * g3 % q * g3) % q
    if (g0 * h1 - g1 * h0) % q != 0:
        return False
    if (g0 * h2 - g2 * h0) % q != 0:
        return False
    if (g0 * h3 - g3 * h0) % q != 0:
        return False
    if (g0 * h4 - g4 * h0) % q != 0:
        return False
    if (g1 * h2 - g2 * h1) % q != 0:
        return False
    if (g1 * h3 - g3 * h1) % q != 0:
        return False
    if (g1 * h4 - g4 * h1) % q != 0:
        return False
    if (g2 * h3 - g3 * h2) % q != 0:
        return False
    if (g2 * h4 - g4 * h2) % q != 0:
        return False
    if (g3 * h4 - g4 * h3) % q != 0:
        return False
    return True


@njit(cache=True, inline="always")
def _span_from_plucker(p01, p02, p03, p12, p13, p23, a, b):
    """Fill a, b with an integer spanning pair read off the Plucker matrix
    columns at the first nonzero coordinate."""
    if p01 != 0:
        a[0], a[1], a[2], a[3] = p01, 0, -p12, -p13
        b[0], b[1], b[2], b[3] = 0, p01, p02, p03
    elif p02 != 0:
        a[0], a[1], a[2], a[3] = p02, p12, 0, -p23
        b[0], b[1], b[2], b[3] = 0, 0, p02, p03
    elif p03 != 0:
        a[0], a[1], a[2], a[3] = p03, p13, p23, 0
        b[0], b[1], b[2], b[3] = 0, 0, 0, p03
    elif p12 != 0:
        a[0], a[1], a[2], a[3] = 0, p12, 0, -p23
        b[0], b[1], b[2], b[3] = 0, 0, p12, p13
    elif p13 != 0:
        a[0], a[1], a[2], a[3] = 0, p13, p23, 0
        b[0], b[1], b[2], b[3] = 0, 0, 0, p13
    else:
        a[0], a[1], a[2], a[3] = 0, 0, p23, 0
        b[0], b[1], b[2], b[3] = 0, 0, 0, p23


@njit(cache=True)
def _emit_stratum(H, kappa, m, p02_fixed, out):
    """Canonical Plucker vectors of one enumeration block, sweep order.

    kappa is the index of the first nonzero coordinate and m >= 1 its
    value.  The dominant stratum kappa = 0 is blocked by p02 to bound the
    output size.  Returns the number of rows written.
    """
    n = 0
    if kappa == 0:
        p02 = p02_fixed
        for p03 in range(-H, H + 1):
            for p12 in range(-H, H + 1):
                for p13 in range(-H, H + 1):
                    num = p02 * p13 - p03 * p12
                    if num % m != 0:
                        continue
                    p23 = num // m
                    if p23 < -H or p23 > H:
                        continue
                    if _gcd6(m, p02, p03, p12, p13, p23) != 1:
                        continue
                    out[n, 0] = m
                    out[n, 1] = p02
                    out[n, 2] = p03
                    out[n, 3] = p12
                    out[n, 4] = p13
                    out[n, 5] = p23
                    n += 1
    elif kappa == 1:
        for p03 in range(-H, H + 1):
            for p12 in range(-H, H + 1):
                num = p03 * p12
                if num % m != 0:
                    continue
                p13 = num // m
                if p13 < -H or p13 > H:
                    continue
                for p23 in range(-H, H + 1):
                    if _gcd6(0, m, p03, p12, p13, p23) != 1:
                        continue
                    out[n, 0] = 0
                    out[n, 1] = m
                    out[n, 2] = p03
                    out[n, 3] = p12
                    out[n, 4] = p13
                    out[n, 5] = p23
                    n += 1
    elif kappa == 2:
        # p01 = p02 = 0 forces p12 = 0 through the Plucker relation
        for p13 in range(-H, H + 1):
            for p23 in range(-H, H + 1):
                if _gcd6(0, 0, m, 0, p13, p23) != 1:
                    continue
                out[n, 0] = 0
                out[n, 1] = 0
                out[n, 2] = m
                out[n, 3] = 0
                out[n, 4] = p13
                out[n, 5] = p23
                n += 1
    elif kappa == 3:
        for p13 in range(-H, H + 1):
            for p23 in range(-H, H + 1):
                if _gcd6(0, 0, 0, m, p13, p23) != 1:
                    continue
                out[n, 0] = 0
                out[n, 1] = 0
                out[n, 2] = 0
                out[n, 3] = m
                out[n, 4] = p13
                out[n, 5] = p23
                n += 1
    elif kappa == 4:
        for p23 in range(-H, H + 1):
            if _gcd2(m, p23) != 1:
                continue
            out[n, 0] = 0
            out[n, 1] = 0
            out[n, 2] = 0
            out[n, 3] = 0
            out[n, 4] = m
            out[n, 5] = p23
            n += 1
    else:
        if m == 1:
            out[n, 0] = 0
            out[n, 1] = 0
            out[n, 2] = 0
            out[n, 3] = 0
            out[n, 4] = 0
            out[n, 5] = 1
            n += 1
    return n


def stratum_block(H, kappa, m, p02=0):
    cap = {0: (2 * H + 1) ** 3, 1: (2 * H + 1) ** 3, 2: (2 * H + 1) ** 2,
           3: (2 * H + 1) ** 2, 4: 2 * H + 1, 5: 1}[kappa]
    out = np.empty((cap, 6), dtype=np.int64)
    n = _emit_stratum(np.int64(H), np.int64(kappa), np.int64(m), np.int64(p02), out)
    return out[:n].copy()


@njit(cache=True, parallel=True)
def _exhaustive_scan(fc, exp, H, caps, bufs, counts, flags):
    """Fused sweep + bitangency prefilter over all strata.

    Slice s = 0..H-1 handles p01 = s + 1 of the dominant stratum in
    parallel; slice H handles every other stratum serially.  Candidates
    (mod-q square tests passed, or exactly zero restriction) land in
    per-slice buffers."""
    a = np.empty((H + 1, 4), dtype=np.int64)
    b = np.empty((H + 1, 4), dtype=np.int64)
    f = np.empty((H + 1, 5), dtype=np.int64)
    for s in prange(H + 1):
        n = 0
        if s < H:
            m = s + 1
            for p02 in range(-H, H + 1):
                for p03 in range(-H, H + 1):
                    for p12 in range(-H, H + 1):
                        for p13 in range(-H, H + 1):
                            num = p02 * p13 - p03 * p12
                            if num % m != 0:
                                continue
                            p23 = num // m
                            if p23 < -H or p23 > H:
                                continue
                            if _gcd6(m, p02, p03, p12, p13, p23) != 1:
                                continue
                            _span_from_plucker(m, p02, p03, p12, p13, p23, a[s], b[s])
                            _restrict(fc, exp, a[s], b[s], f[s])
                            f0, f1, f2, f3, f4 = f[s, 0], f[s, 1], f[s, 2], f[s, 3], f[s, 4]
                            if f0 != 0 or f1 != 0 or f2 != 0 or f3 != 0 or f4 != 0:
                                if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, Q1):
                                    continue
                                if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, Q2):
                                    continue
                            if n >= caps:
                                flags[s] = 1
                                continue
                            bufs[s, n, 0] = m
                            bufs[s, n, 1] = p02
                            bufs[s, n, 2] = p03
                            bufs[s, n, 3] = p12
                            bufs[s, n, 4] = p13
                            bufs[s, n, 5] = p23
                            n += 1
        else:
            for kappa in range(1, 6):
                for m in range(1, H + 1):
                    if kappa == 1:
                        for p03 in range(-H, H + 1):
                            for p12 in range(-H, H + 1):
                                num = p03 * p12
                                if num % m != 0:
                                    continue
                                p13 = num // m
                                if p13 < -H or p13 > H:
                                    continue
                                for p23 in range(-H, H + 1):
                                    if _gcd6(0, m, p03, p12, p13, p23) != 1:
                                        continue
                                    n = _consider(fc, exp, 0, m, p03, p12, p13, p23,
                                                  a[s], b[s], f[s], bufs, counts, flags, caps, s, n)
                    elif kappa == 2:
                        for p13 in range(-H, H + 1):
                            for p23 in range(-H, H + 1):
                                if _gcd6(0, 0, m, 0, p13, p23) != 1:
                                    continue
                                n = _consider(fc, exp, 0, 0, m, 0, p13, p23,
                                              a[s], b[s], f[s], bufs, counts, flags, caps, s, n)
                    elif kappa == 3:
                        for p13 in range(-H, H + 1):
                            for p23 in range(-H, H + 1):
                                if _gcd6(0, 0, 0, m, p13, p23) != 1:
                                    continue
                                n = _consider(fc, exp, 0, 0, 0, m, p13, p23,
                                              a[s], b[s], f[s], bufs, counts, flags, caps, s, n)
                    elif kappa == 4:
                        for p23 in range(-H, H + 1):
                            if _gcd2(m, p23) != 1:
                                continue
                            n = _consider(fc, exp, 0, 0, 0, 0, m, p23,
                                          a[s], b[s], f[s], bufs, counts, flags, caps, s, n)
                    else:
                        if m == 1:
                            n = _consider(fc, exp, 0, 0, 0, 0, 0, 1,
                                          a[s], b[s], f[s], bufs, counts, flags, caps, s, n)
        counts[s] = n


@njit(cache=True, inline="always")
def _consider(fc, exp, p01, p02, p03, p12, p13, p23, a, b, f, bufs, counts, flags, caps, s, n):
    _span_from_plucker(p01, p02, p03, p12, p13, p23, a, b)
    _restrict(fc, exp, a, b, f)
    f0, f1, f2, f3, f4 = f[0], f[1], f[2], f[3], f[4]
    if f0 != 0 or f1 != 0 or f2 != 0 or f3 != 0 or f4 != 0:
        if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, Q1):
            return n
        if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, Q2):
            return n
    if n >= caps:
        flags[s] = 1
        return n
    bufs[s, n, 0] = p01
    bufs[s, n, 1] = p02
    bufs[s, n, 2] = p03
    bufs[s, n, 3] = p12
    bufs[s, n, 4] = p13
    bufs[s, n, 5] = p23
    return n + 1


def exhaustive_candidates(fc, exp, H, cap_per_slice=4096):
    while True:
        bufs = np.zeros((H + 1, cap_per_slice, 6), dtype=np.int64)
        counts = np.zeros(H + 1, dtype=np.int64)
        flags = np.zeros(H + 1, dtype=np.int64)
        _exhaustive_scan(fc, exp, np.int64(H), np.int64(cap_per_slice), bufs, counts, flags)
        if not flags.any():
            rows = [bufs[s, : counts[s]] for s in range(H + 1)]
            return np.vstack(rows) if rows else np.empty((0, 6), dtype=np.int64)
        cap_per_slice *= 8


@njit(cache=True, parallel=True)
def _zp_scan(fc, exp, p, caps, bufs, counts, flags):
    """Projective lines over F_p passing the mod-p bitangency test.

    Reduced row echelon cells, parallelized over the leading free entry.
    Emitted rows are projective representatives of Z_p."""
    pivots = np.array([[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]], dtype=np.int64)
    a = np.empty((p, 4), dtype=np.int64)
    b = np.empty((p, 4), dtype=np.int64)
    f = np.empty((p, 5), dtype=np.int64)
    for x0 in prange(p):
        n = 0
        for cell in range(6):
            i = pivots[cell, 0]
            j = pivots[cell, 1]
            k = -1
            l = -1
            for idx in range(4):
                if idx != i and idx != j:
                    if k < 0:
                        k = idx
                    else:
                        l = idx
            # free entries: row1 at non-pivot columns > i, row2 at > j
            r1k = k > i
            r1l = l > i
            r2k = k > j
            r2l = l > j
            nfree = (1 if r1k else 0) + (1 if r1l else 0) + (1 if r2k else 0) + (1 if r2l else 0)
            # x0 sweeps the first free slot; cells with no free slot only at x0 == 0
            if nfree == 0 and x0 != 0:
                continue
            lim1 = p if nfree >= 2 else 1
            lim2 = p if nfree >= 3 else 1
            lim3 = p if nfree >= 4 else 1
            for x1 in range(lim1):
                for x2 in range(lim2):
                    for x3 in range(lim3):
                        q0 = x0
                        q1 = x1
                        q2 = x2
                        q3 = x3
                        a[x0, 0] = 0
                        a[x0, 1] = 0
                        a[x0, 2] = 0
                        a[x0, 3] = 0
                        b[x0, 0] = 0
                        b[x0, 1] = 0
                        b[x0, 2] = 0
                        b[x0, 3] = 0
                        a[x0, i] = 1
                        b[x0, j] = 1
                        if r1k:
                            a[x0, k] = q0
                            q0, q1, q2 = q1, q2, q3
                        if r1l:
                            a[x0, l] = q0
                            q0, q1, q2 = q1, q2, q3
                        if r2k:
                            b[x0, k] = q0
                            q0, q1 = q1, q2
                        if r2l:
                            b[x0, l] = q0
                        _restrict(fc, exp, a[x0], b[x0], f[x0])
                        f0 = f[x0, 0] % p
                        f1 = f[x0, 1] % p
                        f2 = f[x0, 2] % p
                        f3 = f[x0, 3] % p
                        f4 = f[x0, 4] % p
                        if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, p):
                            continue
                        # plucker of the RREF rows, reduced mod p
                        q01 = (a[x0, 0] * b[x0, 1] - a[x0, 1] * b[x0, 0]) % p
                        q02 = (a[x0, 0] * b[x0, 2] - a[x0, 2] * b[x0, 0]) % p
                        q03 = (a[x0, 0] * b[x0, 3] - a[x0, 3] * b[x0, 0]) % p
                        q12 = (a[x0, 1] * b[x0, 2] - a[x0, 2] * b[x0, 1]) % p
                        q13 = (a[x0, 1] * b[x0, 3] - a[x0, 3] * b[x0, 1]) % p
                        q23 = (a[x0, 2] * b[x0, 3] - a[x0, 3] * b[x0, 2]) % p
                        if n >= caps:
                            flags[x0] = 1
                            continue
                        bufs[x0, n, 0] = q01
                        bufs[x0, n, 1] = q02
                        bufs[x0, n, 2] = q03
                        bufs[x0, n, 3] = q12
                        bufs[x0, n, 4] = q13
                        bufs[x0, n, 5] = q23
                        n += 1
        counts[x0] = n


def sieve_zp(fc, exp, p, cap_per_slice=8192):
    """All affine F_p solutions of the mod-p bitangency conditions, as an
    int64 array; includes every nonzero scalar multiple."""
    while True:
        bufs = np.zeros((p, cap_per_slice, 6), dtype=np.int64)
        counts = np.zeros(p, dtype=np.int64)
        flags = np.zeros(p, dtype=np.int64)
        _zp_scan(fc, exp, np.int64(p), np.int64(cap_per_slice), bufs, counts, flags)
        if not flags.any():
            break
        cap_per_slice *= 8
    proj = np.vstack([bufs[s, : counts[s]] for s in range(p)])
    if proj.shape[0] == 0:
        return proj
    lams = np.arange(1, p, dtype=np.int64)
    aff = (proj[None, :, :] * lams[:, None, None]) % p
    aff = aff.reshape(-1, 6)
    order = np.lexsort(aff.T[::-1])
    return np.ascontiguousarray(aff[order])


@njit(cache=True, parallel=True)
def _crt_scan(z1, z2, lift, p2, H, fc, exp, caps, bufs, counts, flags):
    """Join residue classes: for each pair (z1[i], z2[j]) lift coordinates
    to the centered box; survivors must satisfy the exact Plucker relation,
    canonical sign, primitivity, and the mod-q bitangency test."""
    n1 = z1.shape[0]
    n2 = z2.shape[0]
    a = np.empty((n1, 4), dtype=np.int64)
    b = np.empty((n1, 4), dtype=np.int64)
    f = np.empty((n1, 5), dtype=np.int64)
    for i in prange(n1):
        n = 0
        a10 = z1[i, 0] * p2
        a11 = z1[i, 1] * p2
        a12 = z1[i, 2] * p2
        a13 = z1[i, 3] * p2
        a14 = z1[i, 4] * p2
        a15 = z1[i, 5] * p2
        for j in range(n2):
            v0 = lift[a10 + z2[j, 0]]
            if v0 > H or v0 < -H:
                continue
            v1 = lift[a11 + z2[j, 1]]
            if v1 > H or v1 < -H:
                continue
            v2 = lift[a12 + z2[j, 2]]
            if v2 > H or v2 < -H:
                continue
            v3 = lift[a13 + z2[j, 3]]
            if v3 > H or v3 < -H:
                continue
            v4 = lift[a14 + z2[j, 4]]
            if v4 > H or v4 < -H:
                continue
            v5 = lift[a15 + z2[j, 5]]
            if v5 > H or v5 < -H:
                continue
            if v0 * v5 - v1 * v4 + v2 * v3 != 0:
                continue
            # canonical sign: first nonzero positive (the negation shows up
            # as its own residue pair)
            if v0 < 0:
                continue
            if v0 == 0:
                if v1 < 0:
                    continue
                if v1 == 0:
                    if v2 < 0:
                        continue
                    if v2 == 0:
                        if v3 < 0:
                            continue
                        if v3 == 0:
                            if v4 < 0:
                                continue
                            if v4 == 0 and v5 <= 0:
                                continue
            if _gcd6(v0, v1, v2, v3, v4, v5) != 1:
                continue
            _span_from_plucker(v0, v1, v2, v3, v4, v5, a[i], b[i])
            _restrict(fc, exp, a[i], b[i], f[i])
            f0, f1, f2, f3, f4 = f[i, 0], f[i, 1], f[i, 2], f[i, 3], f[i, 4]
            if f0 != 0 or f1 != 0 or f2 != 0 or f3 != 0 or f4 != 0:
                if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, Q1):
                    continue
                if not _hessian_wedge_zero_mod(f0, f1, f2, f3, f4, Q2):
                    continue
            if n >= caps:
                flags[i] = 1
                continue
            bufs[i, n, 0] = v0
            bufs[i, n, 1] = v1
            bufs[i, n, 2] = v2
            bufs[i, n, 3] = v3
            bufs[i, n, 4] = v4
            bufs[i, n, 5] = v5
            n += 1
        counts[i] = n


def crt_join(z1, z2, p1, p2, H, fc, exp, chunk=512, cap_per_row=256):
    """Candidates of the two-prime sieve, as int64 Plucker rows."""
    M = p1 * p2
    # centered CRT lift table indexed by r1 * p2 + r2
    r1 = np.arange(p1, dtype=np.int64)
    r2 = np.arange(p2, dtype=np.int64)
    inv = pow(int(p1) % int(p2), -1, int(p2))
    grid = r1[:, None] + p1 * ((inv * (r2[None, :] - r1[:, None])) % p2)
    lift = np.where(grid > M // 2, grid - M, grid).astype(np.int64).ravel()
    out = []
    for start in range(0, z1.shape[0], chunk):
        part = np.ascontiguousarray(z1[start : start + chunk])
        cap = cap_per_row
        while True:
            bufs = np.zeros((part.shape[0], cap, 6), dtype=np.int64)
            counts = np.zeros(part.shape[0], dtype=np.int64)
            flags = np.zeros(part.shape[0], dtype=np.int64)
            _crt_scan(part, z2, lift, np.int64(p2), np.int64(H), fc, exp,
                      np.int64(cap), bufs, counts, flags)
            if not flags.any():
                break
            cap *= 8
        for s in range(part.shape[0]):
            if counts[s]:
                out.append(bufs[s, : counts[s]].copy())
    if not out:
        return np.empty((0, 6), dtype=np.int64)
    return np.vstack(out)


@njit(cache=True, inline="always")
def _point_value(fc, exp, x0, x1, x2, x3):
    total = np.int64(0)
    for t in range(fc.shape[0]):
        c = fc[t]
        if c == 0:
            continue
        term = c
        for _ in range(exp[t, 0]):
            term *= x0
        for _ in range(exp[t, 1]):
            term *= x1
        for _ in range(exp[t, 2]):
            term *= x2
        for _ in range(exp[t, 3]):
            term *= x3
        total += term
    return total


@njit(cache=True, parallel=True)
def _points_pass(fc, exp, H, offsets, out, fill):
    """Canonical points of P^3 with sup-norm <= H and F = 0.

    Count pass (fill = 0) writes per-slice totals into offsets; fill pass
    writes rows at the precomputed offsets.  Slices are (x0, x1) pairs."""
    width = 2 * H + 1
    for s in prange(width * (H + 1)):
        x0 = s // width
        x1 = s % width - H
        n = 0
        if not (x0 == 0 and x1 < 0):
            for x2 in range(-H, H + 1):
                if x0 == 0 and x1 == 0 and x2 < 0:
                    continue
                for x3 in range(-H, H + 1):
                    if x0 == 0 and x1 == 0 and x2 == 0 and x3 <= 0:
                        continue
                    if _gcd2(_gcd2(x0, x1), _gcd2(x2, x3)) != 1:
                        continue
                    if _point_value(fc, exp, x0, x1, x2, x3) != 0:
                        continue
                    if fill == 1:
                        base = offsets[s] + n
                        out[base, 0] = x0
                        out[base, 1] = x1
                        out[base, 2] = x2
                        out[base, 3] = x3
                    n += 1
        if fill == 0:
            offsets[s] = n


def rational_points(fc, exp, H):
    width = 2 * H + 1
    nsl = width * (H + 1)
    counts = np.zeros(nsl, dtype=np.int64)
    dummy = np.empty((1, 4), dtype=np.int64)
    _points_pass(fc, exp, np.int64(H), counts, dummy, np.int64(0))
    offsets = np.zeros(nsl, dtype=np.int64)
    np.cumsum(counts[:-1], out=offsets[1:])
    total = int(counts.sum())
    out = np.empty((total, 4), dtype=np.int64)
    if total:
        _points_pass(fc, exp, np.int64(H), offsets, out, np.int64(1))
    return out
