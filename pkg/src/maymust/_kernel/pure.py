"""Pure-Python twin of the compiled enumeration kernel.

Same functions, same argument conventions, same outputs as _speedups. Labels
travel as bytes with codes IN=0, OUT=1, UNDEC=2; labellings are enumerated in
lexicographic order by argument index with that code order, which is the
package's canonical order.
"""

from __future__ import annotations

from itertools import product


def _designated_mask(n_out, n_in, may_a, must_a, may_r, must_r):
    # condition per scale: 2 = must, 1 = strict may, 0 = not reached
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
        mask |= 1  # IN
    if rej >= 1 and acc < 2:
        mask |= 2  # OUT
    if (acc == 2 and rej == 2) or acc == 1 or rej == 1 or (acc == 0 and rej == 0):
        mask |= 4  # UNDEC
    return mask


def scan_proper(n, att_flat, att_start, acc_may, acc_must, rej_may, rej_must, require_all_proper):
    """Enumerate total labellings, keeping the admissible ones.

    With require_all_proper the kept labellings are those whose every argument
    carries a designated label; without it, every argument must carry a
    designated label or UNDEC. Returns (labellings as bytes, proper bitmasks),
    where bit a of a mask says argument a's label is designated.
    """
    if n == 0:
        return [b""], [0]
    atts = [tuple(att_flat[att_start[a] : att_start[a + 1]]) for a in range(n)]
    out_labels = []
    out_masks = []
    for labs in product((0, 1, 2), repeat=n):
        ok = True
        proper_mask = 0
        for a in range(n):
            n_out = n_in = 0
            for k in atts[a]:
                lab = labs[k]
                if lab == 1:
                    n_out += 1
                elif lab == 0:
                    n_in += 1
            mask = _designated_mask(
                n_out, n_in, acc_may[a], acc_must[a], rej_may[a], rej_must[a]
            )
            if (mask >> labs[a]) & 1:
                proper_mask |= 1 << a
            elif require_all_proper or labs[a] != 2:
                ok = False
                break
        if ok:
            out_labels.append(bytes(labs))
            out_masks.append(proper_mask)
    return out_labels, out_masks


def gamma_step(n, att_flat, att_start, acc_may, acc_must, rej_may, rej_must, base):
    """One application of the consensus operator to a total labelling.

    An argument moves to IN (resp. OUT) exactly when every completion of the
    UNDEC positions designates only that label for it; otherwise it is UNDEC.
    """
    if n == 0:
        return b""
    atts = [tuple(att_flat[att_start[a] : att_start[a + 1]]) for a in range(n)]
    undec = [i for i in range(n) if base[i] == 2]
    labels = bytearray(base)
    all_in = [True] * n
    all_out = [True] * n
    for bits in product((0, 1), repeat=len(undec)):
        for j, pos in enumerate(undec):
            labels[pos] = bits[j]
        for a in range(n):
            if not (all_in[a] or all_out[a]):
                continue
            n_out = n_in = 0
            for k in atts[a]:
                lab = labels[k]
                if lab == 1:
                    n_out += 1
                elif lab == 0:
                    n_in += 1
            mask = _designated_mask(
                n_out, n_in, acc_may[a], acc_must[a], rej_may[a], rej_must[a]
            )
            if mask != 1:
                all_in[a] = False
            if mask != 2:
                all_out[a] = False
    return bytes(
        0 if all_in[a] else (1 if all_out[a] else 2) for a in range(n)
    )
