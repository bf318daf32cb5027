"""Pure-Python kernels; reference semantics for the compiled ``_ckernels``.

Everything works in the discrete-log domain over a field with a Zech table:
a nonzero element is its log base xi, zero is -1, and
``xi^i + xi^j = xi^(i + zech[j - i])``.
"""


def perm_check(zech, qm1, la, m0, lb, n0):
    """Whether xi^la X^m0 + xi^lb X^n0 permutes the field."""
    seen = bytearray(qm1)
    e1, e2 = la % qm1, lb % qm1
    m0 %= qm1
    n0 %= qm1
    for _ in range(qm1):
        z = zech[(e2 - e1) % qm1]
        # f(0) = 0 already, so any other zero is a collision
        if z < 0:
            return False
        v = (e1 + z) % qm1
        if seen[v]:
            return False
        seen[v] = 1
        e1 = (e1 + m0) % qm1
        e2 = (e2 + n0) % qm1
    return True


def perm_flags(zech, qm1, m0, n0, la_arr, lb_arr):
    return [perm_check(zech, qm1, la, m0, lb, n0) for la, lb in zip(la_arr, lb_arr)]


def mu_check(zech, qm1, q, n, d, la):
    """Whether x -> x^n (x^d + xi^la)^(q-1) permutes mu_{q+1}."""
    step = q - 1
    seen = bytearray(q + 1)
    for j in range(q + 1):
        lx = j * step
        e1 = d * lx % qm1
        z = zech[(la - e1) % qm1]
        if z < 0:
            return False
        s = (e1 + z) % qm1
        v = (n * lx + step * s) % qm1
        idx = v // step
        if seen[idx]:
            return False
        seen[idx] = 1
    return True


def mu_flags(zech, qm1, q, n, d, la_arr):
    return [mu_check(zech, qm1, q, n, d, la) for la in la_arr]


def table_logs(zech, qm1, la, m0, lb, n0):
    """Logs of f(xi^k) for k = 0..qm1-1, -1 where the value is zero."""
    out = [0] * qm1
    e1, e2 = la % qm1, lb % qm1
    m0 %= qm1
    n0 %= qm1
    for k in range(qm1):
        z = zech[(e2 - e1) % qm1]
        out[k] = -1 if z < 0 else (e1 + z) % qm1
        e1 = (e1 + m0) % qm1
        e2 = (e2 + n0) % qm1
    return out


def count_zeros(zech, qm1, ti, tj, tc, xs, ys, skip_diag):
    """Count (x, y) in xs * ys (logs, -1 = zero) with sum c X^i Y^j = 0."""
    count = 0
    nt = len(tc)
    for lx in xs:
        for ly in ys:
            if skip_diag and lx == ly:
                continue
            acc = -1
            for k in range(nt):
                i, j = ti[k], tj[k]
                if (lx < 0 and i > 0) or (ly < 0 and j > 0):
                    continue
                t = tc[k]
                if i > 0:
                    t += i * lx
                if j > 0:
                    t += j * ly
                t %= qm1
                if acc < 0:
                    acc = t
                else:
                    z = zech[(t - acc) % qm1]
                    acc = -1 if z < 0 else (acc + z) % qm1
            if acc < 0:
                count += 1
    return count
