# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; behaviour matches maymust._kernel.pure."""


cdef inline int _designated_mask(int n_out, int n_in, int may_a, int must_a,
                                 int may_r, int must_r) nogil:
    cdef int acc, rej, mask
    if n_out >= must_a:
        acc = 2
    elif n_out >= may_a:
        acc = 1
    else:
        acc = 0
    if n_in >= must_r:
        rej = 2
    elif n_in >= may_r:
        rej = 1
    else:
        rej = 0
    mask = 0
    if acc >= 1 and rej < 2:
        mask |= 1
    if rej >= 1 and acc < 2:
        mask |= 2
    if (acc == 2 and rej == 2) or acc == 1 or rej == 1 or (acc == 0 and rej == 0):
        mask |= 4
    return mask


def scan_proper(int n, int[::1] att_flat, int[::1] att_start,
                int[::1] acc_may, int[::1] acc_must,
                int[::1] rej_may, int[::1] rej_must,
                bint require_all_proper):
    """See maymust._kernel.pure.scan_proper."""
    out_labels = []
    out_masks = []
    if n == 0:
        out_labels.append(b"")
        out_masks.append(0)
        return out_labels, out_masks
    if n > 38:
        raise ValueError(f"exhaustive scan capped well below n={n}")

    work = bytearray(n)
    cdef unsigned char[::1] labels = work
    cdef long long total = 1, it, proper_mask
    cdef int a, k, lab, n_out, n_in, mask
    cdef bint ok
    for a in range(n):
        total *= 3

    for it in range(total):
        ok = True
        proper_mask = 0
        for a in range(n):
            n_out = 0
            n_in = 0
            for k in range(att_start[a], att_start[a + 1]):
                lab = labels[att_flat[k]]
                if lab == 1:
                    n_out += 1
                elif lab == 0:
                    n_in += 1
            mask = _designated_mask(n_out, n_in, acc_may[a], acc_must[a],
                                    rej_may[a], rej_must[a])
            if (mask >> labels[a]) & 1:
                proper_mask |= (<long long>1) << a
            elif require_all_proper or labels[a] != 2:
                ok = False
                break
        if ok:
            out_labels.append(bytes(work))
            out_masks.append(proper_mask)
        # odometer step keeps enumeration in canonical lexicographic order
        a = n - 1
        while a >= 0:
            labels[a] += 1
            if labels[a] == 3:
                labels[a] = 0
                a -= 1
            else:
                break
    return out_labels, out_masks


def gamma_step(int n, int[::1] att_flat, int[::1] att_start,
               int[::1] acc_may, int[::1] acc_must,
               int[::1] rej_may, int[::1] rej_must,
               bytes base):
    """See maymust._kernel.pure.gamma_step."""
    if n == 0:
        return b""
    if n > 62:
        raise ValueError(f"completion scan capped well below n={n}")

    work = bytearray(base)
    cdef unsigned char[::1] labels = work
    undec_list = [i for i in range(n) if base[i] == 2]
    cdef int k_undec = len(undec_list)
    upos_buf = bytearray(4 * max(1, k_undec))
    cdef int[:] upos = memoryview(upos_buf).cast("i")
    cdef int j
    for j in range(k_undec):
        upos[j] = undec_list[j]

    flags_in = bytearray(n)
    flags_out = bytearray(n)
    cdef unsigned char[::1] all_in = flags_in
    cdef unsigned char[::1] all_out = flags_out
    cdef int a
    for a in range(n):
        all_in[a] = 1
        all_out[a] = 1

    cdef long long comp, total = (<long long>1) << k_undec
    cdef int k, lab, n_out, n_in, mask
    for comp in range(total):
        for j in range(k_undec):
            labels[upos[j]] = (comp >> j) & 1
        for a in range(n):
            if not (all_in[a] or all_out[a]):
                continue
            n_out = 0
            n_in = 0
            for k in range(att_start[a], att_start[a + 1]):
                lab = labels[att_flat[k]]
                if lab == 1:
                    n_out += 1
                elif lab == 0:
                    n_in += 1
            mask = _designated_mask(n_out, n_in, acc_may[a], acc_must[a],
                                    rej_may[a], rej_must[a])
            if mask != 1:
                all_in[a] = 0
            if mask != 2:
                all_out[a] = 0

    result = bytearray(n)
    for a in range(n):
        result[a] = 0 if all_in[a] else (1 if all_out[a] else 2)
    return bytes(result)
