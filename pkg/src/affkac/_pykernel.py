"""Pure-Python multiplicity kernels.

Drop-in twin of the compiled extension ``_ckernel`` (see :mod:`.kernel`
for selection).  Keys are tuples of nonnegative ints: the coordinates of
``lam - mu`` on the simple roots, with index 0 the affine node.  All
bilinear-form values are pre-scaled to integers by the caller, so the
arithmetic below is exact integer arithmetic throughout.
"""


def freudenthal_mults(n, depth, sa, u, f_lam, roots):
    """Weight multiplicities of one highest-weight module, truncated.

    Arguments:
      n      -- number of simple roots (l + 1)
      depth  -- bound on the affine coordinate (index 0) of the keys
      sa     -- scaled root Gram matrix, sa[i][j] = L * (alpha_i | alpha_j)
      u      -- scaled pairings L * (lam + rho | alpha_i)
      f_lam  -- scaled pairings L * (lam | alpha_i)
      roots  -- positive roots as (coords, multiplicity) with coords[0] <= depth

    Returns {coords: multiplicity} for the full support within the window.

    The candidate set grows downward from the highest weight through the
    support only: every weight of the module is reachable from the highest
    weight by subtracting one simple root at a time while staying inside
    the support, so children of zero-multiplicity candidates need never be
    visited.  The recursion divides exactly; any inexact division or a
    vanishing prefactor against a nonzero sum signals an internal bug and
    raises ArithmeticError.
    """
    root_data = []
    for rc, mult in roots:
        f = sum(rc[i] * f_lam[i] for i in range(n))
        sar = [sum(sa[i][j] * rc[j] for j in range(n)) for i in range(n)]
        root_data.append((tuple(rc), mult, f, sar))

    zero = (0,) * n
    mults = {zero: 1}
    pending = {}

    def push_children(c):
        h = sum(c) + 1
        bucket = pending.get(h)
        if bucket is None:
            bucket = pending[h] = set()
        for i in range(n):
            if i == 0 and c[0] >= depth:
                continue
            child = list(c)
            child[i] += 1
            bucket.add(tuple(child))

    push_children(zero)
    while pending:
        h = min(pending)
        for c in pending.pop(h):
            rhs = 0
            for rc, mult, f, sar in root_data:
                # The whole nonnegative range must be scanned: keys absent
                # from the support contribute zero, but the string may
                # re-enter the support further up when c itself is not a
                # weight, and those terms are needed for the sum to cancel.
                cc = tuple(a - b for a, b in zip(c, rc))
                while min(cc) >= 0:
                    m = mults.get(cc)
                    if m is not None:
                        dot = 0
                        for i in range(n):
                            if cc[i]:
                                dot += cc[i] * sar[i]
                        rhs += mult * m * (f - dot)
                    cc = tuple(a - b for a, b in zip(cc, rc))
            if rhs == 0:
                continue
            pref = 0
            for i in range(n):
                if c[i]:
                    pref += 2 * c[i] * u[i]
                    for j in range(n):
                        if c[j]:
                            pref -= c[i] * c[j] * sa[i][j]
            if pref <= 0:
                raise ArithmeticError(
                    f"nonpositive prefactor {pref} with nonzero sum at {c}")
            num = 2 * rhs
            m, rem = divmod(num, pref)
            if rem or m < 0:
                raise ArithmeticError(f"inexact multiplicity {num}/{pref} at {c}")
            if m:
                mults[c] = m
                push_children(c)
    return mults


def convolve_truncated(m1, m2, depth):
    """Coefficient-wise product of two multiplicity maps, truncated to keys
    whose affine coordinate is at most ``depth``."""
    items2 = sorted(m2.items(), key=lambda kv: kv[0][0])
    out = {}
    for k1, v1 in m1.items():
        room = depth - k1[0]
        if room < 0:
            continue
        for k2, v2 in items2:
            if k2[0] > room:
                break
            key = tuple(a + b for a, b in zip(k1, k2))
            prev = out.get(key)
            out[key] = v1 * v2 if prev is None else prev + v1 * v2
    return out
