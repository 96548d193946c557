"""Pure-Python homomorphism search; mirrors ``_kernel.pyx`` line for line.

Variables are assigned in order.  Variable ``v`` ranges over either the full
index range ``[lo[v], hi[v])`` or an explicit candidate list (then
``mask_row[v] >= 0`` selects a membership row).  A constraint ``k`` attached
to ``v`` compares ``ops_v(candidate)`` with ``ops_u(img[other[k]])`` where an
op code ``c >= 0`` is the face ``d_c`` and ``c < 0`` the degeneracy
``s_{-c-1}``.  ``det[v]`` names a constraint with empty ``ops_v`` that
determines the candidate outright.  ``via[v]`` names a constraint whose
``ops_v`` is a single face ``d_i``; candidates are then drawn from the coface
index (row ``i`` of ``cof_ptr``/``cof_vals``) of the required face.
"""
import numpy as np


def _apply(ops, start, end, x, face, degen):
    for p in range(start, end):
        c = ops[p]
        if c >= 0:
            x = face[x][c]
        else:
            x = degen[x][-c - 1]
        if x < 0:
            return -1
    return x


def _lists(a):
    return a.tolist() if hasattr(a, "tolist") else a


def search(face, degen, nvars, lo, hi, dom_ptr, dom_vals, mask, mask_row, det,
           cons_ptr, cons_other, opv_s, opv_e, opu_s, opu_e, ops, cof_ptr, cof_vals, via,
           injective, limit):
    face, degen, mask = _lists(face), _lists(degen), _lists(mask)
    cof_ptr, cof_vals, via = _lists(cof_ptr), _lists(cof_vals), _lists(via)
    lo, hi, dom_ptr, dom_vals, mask_row, det = map(_lists, (lo, hi, dom_ptr, dom_vals, mask_row, det))
    cons_ptr, cons_other, opv_s, opv_e, opu_s, opu_e, ops = map(
        _lists, (cons_ptr, cons_other, opv_s, opv_e, opu_s, opu_e, ops)
    )
    out = []
    if nvars == 0:
        return np.zeros((1, 0), dtype=np.int64)
    img = [-1] * nvars
    pos = [0] * nvars
    used = set()
    v = 0
    while v >= 0:
        if v == nvars:
            out.append(tuple(img))
            if 0 <= limit <= len(out):
                break
            v -= 1
            continue
        if img[v] >= 0:
            if injective:
                used.discard(img[v])
            img[v] = -1
        found = -1
        d = det[v]
        if d >= 0:
            if pos[v] == 0:
                pos[v] = 1
                c = _apply(ops, opu_s[d], opu_e[d], img[cons_other[d]], face, degen)
                ok = c >= 0
                if ok:
                    if mask_row[v] >= 0:
                        ok = mask[mask_row[v]][c] != 0
                    else:
                        ok = lo[v] <= c < hi[v]
                if ok and injective and c in used:
                    ok = False
                if ok:
                    for k in range(cons_ptr[v], cons_ptr[v + 1]):
                        if k == d:
                            continue
                        a = _apply(ops, opv_s[k], opv_e[k], c, face, degen)
                        b = _apply(ops, opu_s[k], opu_e[k], img[cons_other[k]], face, degen)
                        if a != b or a < 0:
                            ok = False
                            break
                if ok:
                    found = c
        else:
            explicit = mask_row[v] >= 0
            vk = via[v]
            row = None
            if vk >= 0:
                x = _apply(ops, opu_s[vk], opu_e[vk], img[cons_other[vk]], face, degen)
                row = cof_vals[ops[opv_s[vk]]]
                ptr = cof_ptr[ops[opv_s[vk]]]
                start, end = (ptr[x], ptr[x + 1]) if x >= 0 else (0, 0)
            elif explicit:
                start, end = dom_ptr[v], dom_ptr[v + 1]
            else:
                start, end = lo[v], hi[v]
            p = start + pos[v]
            while p < end:
                if row is not None:
                    c = row[p]
                    p += 1
                    if not lo[v] <= c < hi[v] or (explicit and not mask[mask_row[v]][c]):
                        continue
                else:
                    c = dom_vals[p] if explicit else p
                    p += 1
                if injective and c in used:
                    continue
                ok = True
                for k in range(cons_ptr[v], cons_ptr[v + 1]):
                    a = _apply(ops, opv_s[k], opv_e[k], c, face, degen)
                    b = _apply(ops, opu_s[k], opu_e[k], img[cons_other[k]], face, degen)
                    if a != b or a < 0:
                        ok = False
                        break
                if ok:
                    found = c
                    break
            pos[v] = p - start
        if found >= 0:
            img[v] = found
            if injective:
                used.add(found)
            v += 1
            if v < nvars:
                pos[v] = 0
        else:
            pos[v] = 0
            v -= 1
    return np.asarray(out, dtype=np.int64).reshape(len(out), nvars)
